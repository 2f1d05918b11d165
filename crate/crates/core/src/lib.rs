//! Exact arithmetic for monomial curves in projective 3-space: defining
//! binomials, the associated `2 x 3` determinantal matrix, radical-reduction
//! criteria for monomial matrices, and finite-field brute-force checks.

pub mod construction;
pub mod curve;
pub mod error;
pub mod field;
pub mod forms;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod polynomial;
pub mod radical;
pub mod substitution;
pub mod valla;

pub use construction::{
    binomial_f, binomial_f1, binomial_f2, build_matrix, classify_case, defining_triple, first_minor_columns,
    reducing_column, select_minors, DefiningSystem, TripleVariant,
};
pub use curve::{
    from_affine, normalize_orientation, AffineCurve, CaseTag, IdentityCheck, IdentityReport, ParametrizationExponents,
    ProjectiveCurveParams, Relabeling,
};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldHandle};
pub use forms::{classify_form, Applicability, Classification, Form, FormMatch, Proposition};
pub use matrix::MonomialMatrix;
pub use monomial::{Binomial, MinorValue, Monomial, VariableSet};
pub use oracle::{
    affine_chart_variety, affine_curve_points, affine_variety, compare_sets, curve_points, escalate_affine,
    escalate_projective, eval, projective_variety, AffinePoint, EqualityReport, EscalationLimits, EscalationReport,
    EscalationVerdict, ProjPoint,
};
pub use parse::{parse_matrix, parse_monomial, parse_polynomial};
pub use polynomial::SparsePolynomial;
pub use radical::{find_reducing_columns, is_simple, radical_hypothesis, reducing_columns, RadicalReduction};
pub use substitution::{symbolic_vanishes_on_affine_curve, symbolic_vanishes_on_curve, MonomialParametrization, VanishingReport};
pub use valla::{valla_fg, VallaExponents, VallaPair};

/// `build_field(p, k)`: the field `F_{p^k}` with its deterministic modulus.
pub fn build_field(p: u64, k: usize) -> Result<FieldHandle> {
    FieldHandle::new(p, k)
}
