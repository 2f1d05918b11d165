use std::collections::BTreeMap;

use num_integer::Integer;
use serde_json::{json, Value};

use detcurve::construction::first_minor_columns;
use detcurve::forms::{classify_form, Classification};
use detcurve::oracle::{
    affine_chart_variety, affine_variety, compare_sets, escalate_affine, escalate_projective, projective_variety,
    EscalationLimits, DEFAULT_ORDER_BUDGET, HARD_EXTENSION_CAP,
};
use detcurve::substitution::{symbolic_vanishes_on_affine_curve, symbolic_vanishes_on_curve, MonomialParametrization};
use detcurve::valla::curve_satisfies_relations;
use detcurve::{
    from_affine, is_simple, normalize_orientation, parse_matrix, parse_polynomial, radical_hypothesis, reducing_columns,
    valla_fg, DefiningSystem, Error, FieldHandle, MinorValue, MonomialMatrix, ProjectiveCurveParams, Relabeling,
    SparsePolynomial, TripleVariant, VallaExponents, VariableSet,
};

use crate::report::{BigNum, Check, MatrixReport, OracleEntry, PolyReport, RunReport, SystemReport};
use crate::{CurveArgs, MatrixArgs, Prop1Args, VallaArgs, Variant, VerifyArgs};

/// Largest point count a matrix-mode oracle run enumerates.
const AFFINE_POINT_BUDGET: u64 = 1 << 24;

struct Curve {
    params: ProjectiveCurveParams,
    relabeling: Relabeling,
    affine: bool,
    /// Names of internal `x0..x3` as the user sees them.
    display: VariableSet,
}

impl Curve {
    fn coordinates(&self) -> Vec<String> {
        let skip = usize::from(self.affine);
        self.display.names()[skip..].to_vec()
    }
}

fn input_error(mut report: RunReport, err: impl std::fmt::Display) -> RunReport {
    report.error = Some(err.to_string());
    report.finish()
}

fn curve_input(args: &CurveArgs) -> BTreeMap<String, Value> {
    let mut input = BTreeMap::new();
    if let Some(d) = args.delta {
        input.insert("delta".into(), json!(d));
        input.insert("eps1".into(), json!(args.eps1));
        input.insert("eps2".into(), json!(args.eps2));
    }
    if let Some(a) = &args.affine {
        input.insert("affine".into(), json!(a));
    }
    input.insert("normalize_gcd".into(), json!(args.normalize_gcd));
    if let Some(v) = &args.vars {
        input.insert("vars".into(), json!(v));
    }
    input
}

fn parse_vars(spec: Option<&str>, default: VariableSet) -> Result<VariableSet, Error> {
    match spec {
        None => Ok(default),
        Some(s) => VariableSet::new(s.split(',').map(str::trim)),
    }
}

fn divide_by_gcd(values: &mut [u64]) {
    let g = values.iter().fold(0u64, |g, &v| g.gcd(&v));
    if g > 1 {
        values.iter_mut().for_each(|v| *v /= g);
    }
}

fn resolve_curve(args: &CurveArgs) -> Result<Curve, Error> {
    let vars = parse_vars(args.vars.as_deref(), VariableSet::projective())?;
    if vars.count() != 4 {
        return Err(Error::InvalidVariables(format!(
            "curve mode needs four names, got {}",
            vars.count()
        )));
    }
    let (params, relabeling, affine) = match (args.delta, &args.affine) {
        (Some(delta), None) => {
            let mut e = [delta, args.eps1.unwrap_or(0), args.eps2.unwrap_or(0)];
            if args.normalize_gcd {
                divide_by_gcd(&mut e);
            }
            let (params, relabeling) = normalize_orientation(e[0], e[1], e[2])?;
            (params, relabeling, false)
        }
        (None, Some(a)) => {
            let mut e = [a[0], a[1], a[2]];
            if args.normalize_gcd {
                divide_by_gcd(&mut e);
            }
            let c = from_affine(e[0], e[1], e[2])?;
            (c.params, c.relabeling, true)
        }
        _ => return Err(Error::InvalidCurve("give either --delta/--eps1/--eps2 or --affine".into())),
    };
    let display = relabeling.apply_to(&vars);
    Ok(Curve {
        params,
        relabeling,
        affine,
        display,
    })
}

fn params_map(c: &Curve) -> BTreeMap<String, BigNum> {
    let mut out: BTreeMap<String, BigNum> = c
        .params
        .table()
        .into_iter()
        .map(|(k, v)| (k.to_string(), BigNum::new(v)))
        .collect();
    out.insert("common_gcd".into(), BigNum::new(c.params.common_gcd()));
    out
}

fn variant(v: Variant) -> TripleVariant {
    match v {
        Variant::Minors => TripleVariant::Minors,
        Variant::Binomials => TripleVariant::Binomials,
    }
}

fn system_report(c: &Curve, sys: &DefiningSystem, v: TripleVariant) -> SystemReport {
    let vars = &c.display;
    let show = |b| PolyReport::from_minor(&sys.project_binomial(b), 4, vars);
    let (i, j) = first_minor_columns(sys.case);
    SystemReport {
        variables: vars.names().to_vec(),
        f: show(&sys.f),
        f1: show(&sys.f1),
        f2: show(&sys.f2),
        matrix: MatrixReport::new(&sys.matrix, vars),
        case: sys.case.to_string(),
        m1: show(&sys.m1),
        m2: show(&sys.m2),
        minor_columns: [[i + 1, j + 1], [2, 3]],
        variant: match v {
            TripleVariant::Minors => "minors".into(),
            TripleVariant::Binomials => "binomials".into(),
        },
        triple: sys
            .members(v)
            .iter()
            .map(|m| PolyReport::from_minor(m, 4, vars))
            .collect(),
        affine: c.affine,
    }
}

fn curve_report(command: &str, args: &CurveArgs) -> (RunReport, Option<Curve>) {
    let mut report = RunReport::new(command, curve_input(args));
    match resolve_curve(args) {
        Ok(c) => {
            report.params = Some(params_map(&c));
            let mut input = std::mem::take(&mut report.input);
            input.insert(
                "orientation".into(),
                json!({
                    "exchanged_parameters": c.relabeling.exchanged_parameters,
                    "variables": c.display.names(),
                }),
            );
            report.input = input;
            (report, Some(c))
        }
        Err(e) => (input_error(report, e), None),
    }
}

fn identity_checks(c: &Curve) -> Vec<Check> {
    c.params
        .check_identities()
        .checks
        .iter()
        .map(|id| {
            Check::new(
                format!("identity: {}", id.name),
                id.holds(),
                Some(format!("{} = {}", id.lhs, id.rhs)),
            )
        })
        .collect()
}

pub fn derive(args: &CurveArgs) -> RunReport {
    let (mut report, curve) = curve_report("derive", args);
    let Some(c) = curve else { return report };
    report.checks = identity_checks(&c);
    report.finish()
}

pub fn binomials(args: &CurveArgs, v: Variant) -> RunReport {
    let (mut report, curve) = curve_report("binomials", args);
    let Some(c) = curve else { return report };
    let sys = DefiningSystem::new(c.params, c.affine);
    report.system = Some(system_report(&c, &sys, variant(v)));
    report.finish()
}

fn vanishing_check(name: &str, poly: &SparsePolynomial, c: &Curve) -> Check {
    let r = if c.affine {
        symbolic_vanishes_on_affine_curve(poly, &c.params)
    } else {
        symbolic_vanishes_on_curve(poly, &c.params)
    }
    .expect("four variables");
    let detail = (!r.vanishes).then(|| {
        let names = if c.affine {
            MonomialParametrization::affine_curve(&c.params).parameter_names()
        } else {
            MonomialParametrization::projective_curve(&c.params).parameter_names()
        };
        let shown: Vec<String> = r
            .witnesses
            .iter()
            .map(|(m, k)| format!("{k}*{}", m.render(&names)))
            .collect();
        format!("surviving terms: {}", shown.join(", "))
    });
    Check::new(format!("vanishes: {name}"), r.vanishes, detail)
}

fn limits(args: &VerifyArgs) -> Result<EscalationLimits, Error> {
    if args.max_ext == 0 || args.max_ext > HARD_EXTENSION_CAP {
        return Err(Error::UnsupportedField(format!(
            "--max-ext must lie in 1..={HARD_EXTENSION_CAP}"
        )));
    }
    Ok(EscalationLimits {
        max_ext: args.max_ext,
        cap: if args.no_escalate {
            args.max_ext
        } else {
            HARD_EXTENSION_CAP
        },
        order_budget: DEFAULT_ORDER_BUDGET,
    })
}

fn oracle_entries(c: &Curve, sys: &DefiningSystem, p: u64, lim: EscalationLimits) -> Result<Vec<OracleEntry>, Error> {
    let field = FieldHandle::prime(p)?;
    let coords = c.coordinates();
    let mut out = Vec::new();
    let labels = [
        (TripleVariant::Binomials, "V(f,f1,f2) vs C"),
        (TripleVariant::Minors, "V(M1,M2,f2) vs C"),
    ];
    if c.affine {
        for (v, label) in labels {
            let variety = affine_chart_variety(&sys.triple(v), &field)?;
            let r = escalate_affine(&variety, &c.params, p, lim)?;
            out.push(OracleEntry::from_escalation(label, coords.clone(), &r, lim.max_ext));
        }
        let pair = affine_chart_variety(&sys.minor_pair(), &field)?;
        let all = affine_chart_variety(&sys.all_minors(), &field)?;
        let r = compare_sets(&pair, &all, &field);
        out.push(OracleEntry::from_equality("V(M1,M2) vs V(J)", coords, &r));
    } else {
        for (v, label) in labels {
            let variety = projective_variety(&sys.triple(v), &field)?;
            let r = escalate_projective(&variety, &c.params, p, lim)?;
            out.push(OracleEntry::from_escalation(label, coords.clone(), &r, lim.max_ext));
        }
        let pair = projective_variety(&sys.minor_pair(), &field)?;
        let all = projective_variety(&sys.all_minors(), &field)?;
        let r = compare_sets(&pair, &all, &field);
        out.push(OracleEntry::from_equality("V(M1,M2) vs V(J)", coords, &r));
    }
    Ok(out)
}

pub fn verify(args: &VerifyArgs) -> RunReport {
    let (mut report, curve) = curve_report("verify", &args.curve);
    let Some(c) = curve else { return report };
    report.input.insert("primes".into(), json!(args.primes));
    report.input.insert("max_ext".into(), json!(args.max_ext));
    report.input.insert("no_escalate".into(), json!(args.no_escalate));
    report.input.insert("skip_oracle".into(), json!(args.skip_oracle));
    if !args.extra_polys.is_empty() {
        report.input.insert("extra_polys".into(), json!(args.extra_polys));
    }
    let lim = match limits(args) {
        Ok(l) => l,
        Err(e) => return input_error(report, e),
    };
    let mut extras = Vec::new();
    for text in &args.extra_polys {
        match parse_polynomial(text, &c.display) {
            Ok(p) => extras.push((text.clone(), p)),
            Err(e) => return input_error(report, e),
        }
    }
    if !args.skip_oracle {
        if let Some(&bad) = args.primes.iter().find(|&&p| FieldHandle::prime(p).is_err()) {
            return input_error(report, format!("--prime {bad} is not a supported prime"));
        }
    }

    let sys = DefiningSystem::new(c.params, c.affine);
    report.system = Some(system_report(&c, &sys, TripleVariant::Minors));
    let mut checks = identity_checks(&c);
    checks.push(Check::new(
        "matrix is simple",
        is_simple(&sys.matrix),
        None,
    ));
    let minor_is = |i, j, b| SparsePolynomial::from_minor(&sys.matrix.minor(i, j).expect("3 columns"), 4) == SparsePolynomial::from(b);
    checks.push(Check::new("minor 12 equals f", minor_is(0, 1, &sys.f), None));
    checks.push(Check::new("minor 13 equals f1", minor_is(0, 2, &sys.f1), None));
    let named = [("f", &sys.f), ("f1", &sys.f1), ("f2", &sys.f2), ("M1", &sys.m1), ("M2", &sys.m2)];
    for (name, b) in named {
        if !c.affine {
            checks.push(Check::new(format!("homogeneous: {name}"), b.is_homogeneous(), None));
        }
        let poly = match sys.project_binomial(b) {
            MinorValue::Zero => SparsePolynomial::zero(4),
            MinorValue::Binomial(b) => SparsePolynomial::from(&b),
        };
        checks.push(vanishing_check(name, &poly, &c));
    }
    for (text, poly) in &extras {
        checks.push(vanishing_check(text, poly, &c));
    }
    report.checks = checks;

    if !args.skip_oracle {
        for &p in &args.primes {
            match oracle_entries(&c, &sys, p, lim) {
                Ok(entries) => report.oracle.extend(entries),
                Err(e) => return input_error(report, e),
            }
        }
    }
    report.finish()
}

fn matrix_input(args: &MatrixArgs) -> (BTreeMap<String, Value>, Result<(MonomialMatrix, VariableSet), Error>) {
    let mut input = BTreeMap::new();
    input.insert("matrix".into(), json!(args.matrix));
    if let Some(v) = &args.vars {
        input.insert("vars".into(), json!(v));
    }
    let parsed = parse_vars(args.vars.as_deref(), VariableSet::letters(4))
        .and_then(|vars| parse_matrix(&args.matrix, &vars).map(|a| (a, vars)));
    (input, parsed)
}

fn minor_polys(minors: &[(usize, usize, MinorValue)], arity: usize) -> Vec<SparsePolynomial> {
    minors
        .iter()
        .map(|(_, _, m)| SparsePolynomial::from_minor(m, arity))
        .collect()
}

pub fn prop1(args: &Prop1Args) -> RunReport {
    let (mut input, parsed) = matrix_input(&args.matrix);
    if let Some(k) = args.column {
        input.insert("column".into(), json!(k));
    }
    if !args.oracle_primes.is_empty() {
        input.insert("oracle_primes".into(), json!(args.oracle_primes));
    }
    let mut report = RunReport::new("prop1", input);
    let (a, vars) = match parsed {
        Ok(x) => x,
        Err(e) => return input_error(report, e),
    };
    let columns: Vec<usize> = match args.column {
        None => (0..a.cols()).collect(),
        Some(k) if (1..=a.cols()).contains(&k) => vec![k - 1],
        Some(k) => {
            return input_error(report, Error::ColumnOutOfRange { index: k, cols: a.cols() });
        }
    };
    let mut fields = Vec::new();
    for &p in &args.oracle_primes {
        match FieldHandle::prime(p) {
            Ok(f) if p.checked_pow(a.arity() as u32).is_some_and(|n| n <= AFFINE_POINT_BUDGET) => fields.push(f),
            Ok(_) => return input_error(report, format!("F_{p}^{} is too large to enumerate", a.arity())),
            Err(e) => return input_error(report, e),
        }
    }
    let j = minor_polys(&a.all_minors(), a.arity());
    let full: Vec<_> = fields
        .iter()
        .map(|f| affine_variety(&j, a.arity(), f).expect("common arity"))
        .collect();
    let mut verdicts = Vec::new();
    for k in columns {
        let r = radical_hypothesis(&a, k).expect("column in range");
        let evidence: Vec<Value> = r
            .evidence
            .iter()
            .map(|e| {
                json!({
                    "columns": [e.cols.0 + 1, e.cols.1 + 1],
                    "minor": e.minor.render(&vars),
                    "contained": e.contained(),
                    "terms": e.terms.iter().map(|t| json!({
                        "term": t.term.render(&vars),
                        "covered_by": t.covered_by.map(|row| ["top", "bottom"][row]),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let reduced: Vec<PolyReport> = r
            .reduced
            .iter()
            .map(|(_, _, m)| PolyReport::from_minor(m, a.arity(), &vars))
            .collect();
        verdicts.push(json!({
            "column": k + 1,
            "holds": r.holds,
            "reduced": reduced,
            "evidence": evidence,
        }));
        if r.holds {
            let jk = minor_polys(&r.reduced, a.arity());
            for (f, vj) in fields.iter().zip(&full) {
                let vjk = affine_variety(&jk, a.arity(), f).expect("common arity");
                let cmp = compare_sets(vj, &vjk, f);
                report.oracle.push(OracleEntry::from_equality(
                    format!("V(J) vs V(J_{})", k + 1),
                    vars.names().to_vec(),
                    &cmp,
                ));
            }
        }
    }
    report.details = Some(json!({
        "matrix": MatrixReport::new(&a, &vars),
        "variables": vars.names(),
        "columns": verdicts,
        "reducing_columns": reducing_columns(&a).iter().map(|k| k + 1).collect::<Vec<_>>(),
    }));
    report.finish()
}

pub fn classify(args: &MatrixArgs) -> RunReport {
    let (input, parsed) = matrix_input(args);
    let mut report = RunReport::new("classify", input);
    let (a, vars) = match parsed {
        Ok(x) => x,
        Err(e) => return input_error(report, e),
    };
    let classification = match classify_form(&a) {
        Ok(c) => c,
        Err(e) => return input_error(report, format!("no form matched: {e}")),
    };
    let matrix = MatrixReport::new(&a, &vars);
    match classification {
        Classification::UnitEntry { cells } => {
            let reducing = reducing_columns(&a);
            for &(r, col) in &cells {
                report.checks.push(Check::new(
                    format!("unit entry ({},{}) gives a reducing column", r + 1, col + 1),
                    reducing.contains(&col),
                    None,
                ));
            }
            report.details = Some(json!({
                "matrix": matrix,
                "unit_entries": cells.iter().map(|&(r, c)| [r + 1, c + 1]).collect::<Vec<_>>(),
                "reducing_columns": reducing.iter().map(|k| k + 1).collect::<Vec<_>>(),
                "forms": [],
            }));
        }
        Classification::Forms(matches) => {
            report.checks.push(Check::new(
                "some form matched",
                !matches.is_empty(),
                matches.is_empty().then(|| "no form matched".to_string()),
            ));
            let names = ['a', 'b', 'c', 'd'];
            let forms: Vec<Value> = matches
                .iter()
                .map(|m| {
                    let renaming: BTreeMap<String, String> = m
                        .variables
                        .iter()
                        .enumerate()
                        .map(|(t, &i)| (names[t].to_string(), vars.name(i).to_string()))
                        .collect();
                    let exponents: BTreeMap<String, BigNum> = m
                        .exponents
                        .iter()
                        .map(|(s, v)| (s.to_string(), BigNum::new(v)))
                        .collect();
                    json!({
                        "form": m.form.name(),
                        "template": m.form.template_text(),
                        "columns": m.columns.map(|c| c + 1),
                        "rows_swapped": m.rows_swapped,
                        "renaming": renaming,
                        "cd_interchanged": m.cd_interchanged,
                        "exponents": exponents,
                        "transformed": m.transformed(&a).render(&VariableSet::letters(4)),
                        "applicable": m.applicable.iter().map(|ap| json!({
                            "proposition": ap.proposition.name(),
                            "condition": ap.condition,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            report.details = Some(json!({ "matrix": matrix, "forms": forms }));
        }
    }
    report.finish()
}

pub fn valla(args: &VallaArgs) -> RunReport {
    let mut input = BTreeMap::new();
    for (k, v) in [("m", args.m), ("n", args.n), ("p", args.p), ("r", args.r), ("s", args.s), ("u", args.u)] {
        input.insert(k.to_string(), json!(v));
    }
    if let Some(c) = &args.check_curve {
        input.insert("check_curve".into(), json!(c));
    }
    if !args.primes.is_empty() {
        input.insert("primes".into(), json!(args.primes));
    }
    let mut report = RunReport::new("valla", input);
    let e = match VallaExponents::new(args.m, args.n, args.p, args.r, args.s, args.u) {
        Ok(e) => e,
        Err(err) => return input_error(report, err),
    };
    let pair = match valla_fg(&e) {
        Ok(pair) => pair,
        Err(err) => return input_error(report, err),
    };
    let mut fields = Vec::new();
    for &p in &args.primes {
        match FieldHandle::prime(p) {
            Ok(f) if p.checked_pow(3).is_some_and(|n| n <= AFFINE_POINT_BUDGET) => fields.push(f),
            Ok(_) => return input_error(report, format!("F_{p}^3 is too large to enumerate")),
            Err(err) => return input_error(report, err),
        }
    }
    let abc = VariableSet::letters(3);
    let [f, g] = pair.polynomials();
    let mut g_report = PolyReport::from_poly(&g, &abc);
    g_report.rendered = pair.render_g(&abc);
    let matrix = e.matrix();
    report.details = Some(json!({
        "matrix": MatrixReport::new(&matrix, &abc),
        "f": PolyReport::from_minor(&MinorValue::Binomial(pair.f.clone()), 3, &abc),
        "g": g_report,
        "degenerate": args.n == 0,
    }));
    if let Some(curve) = &args.check_curve {
        let (alpha, beta, gamma) = (curve[0], curve[1], curve[2]);
        let pz = MonomialParametrization::univariate(&[alpha, beta, gamma]);
        let relations = curve_satisfies_relations(&e, alpha, beta, gamma);
        for (name, poly) in [("f", &f), ("g", &g)] {
            let r = pz.vanishes(poly).expect("three variables");
            let t = pz.parameter_names();
            let detail = (!r.vanishes).then(|| {
                let terms: Vec<String> = r.witnesses.iter().map(|(m, k)| format!("{k}*{}", m.render(&t))).collect();
                format!(
                    "surviving terms: {}; exponent relations {}",
                    terms.join(", "),
                    if relations { "hold" } else { "fail" }
                )
            });
            report.checks.push(Check::new(
                format!("vanishes on (t^{alpha},t^{beta},t^{gamma}): {name}"),
                r.vanishes,
                detail,
            ));
        }
    }
    let j = minor_polys(&matrix.all_minors(), 3);
    for field in &fields {
        let vj = affine_variety(&j, 3, field).expect("three variables");
        let vfg = affine_variety(&[f.clone(), g.clone()], 3, field).expect("three variables");
        report.oracle.push(OracleEntry::from_equality(
            "V(J) vs V(f,g)",
            abc.names().to_vec(),
            &compare_sets(&vj, &vfg, field),
        ));
    }
    report.finish()
}
