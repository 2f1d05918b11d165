use crate::error::{Error, Result};
use crate::monomial::{Monomial, MinorValue, VariableSet};

/// A `2 x r` matrix of monomials, `r >= 2`. Columns are indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    rows: [Vec<Monomial>; 2],
    arity: usize,
}

impl MonomialMatrix {
    pub fn new(top: Vec<Monomial>, bottom: Vec<Monomial>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidMatrix(format!(
                "rows have different lengths ({} and {})",
                top.len(),
                bottom.len()
            )));
        }
        if top.len() < 2 {
            return Err(Error::InvalidMatrix("at least two columns are required".into()));
        }
        let arity = top[0].arity();
        if let Some(m) = top.iter().chain(&bottom).find(|m| m.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: m.arity(),
            });
        }
        Ok(MonomialMatrix {
            rows: [top, bottom],
            arity,
        })
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn row(&self, row: usize) -> &[Monomial] {
        &self.rows[row]
    }

    pub fn entry(&self, row: usize, col: usize) -> &Monomial {
        &self.rows[row][col]
    }

    pub fn column(&self, col: usize) -> [&Monomial; 2] {
        [&self.rows[0][col], &self.rows[1][col]]
    }

    fn check_column(&self, index: usize) -> Result<()> {
        if index < self.cols() {
            Ok(())
        } else {
            Err(Error::ColumnOutOfRange {
                index,
                cols: self.cols(),
            })
        }
    }

    /// The minor `a_{1i} a_{2j} - a_{1j} a_{2i}` of columns `i` and `j`.
    pub fn minor(&self, i: usize, j: usize) -> Result<MinorValue> {
        self.check_column(i)?;
        self.check_column(j)?;
        if i == j {
            return Err(Error::InvalidMatrix(format!("minor needs two distinct columns, got {i} twice")));
        }
        let [top, bottom] = &self.rows;
        let plus = top[i].mul(&bottom[j])?;
        let minus = top[j].mul(&bottom[i])?;
        MinorValue::from_products(plus, minus)
    }

    /// All `C(r, 2)` minors `(i, j, minor)` with `i < j`, in column order.
    pub fn all_minors(&self) -> Vec<(usize, usize, MinorValue)> {
        let r = self.cols();
        (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.minor(i, j).expect("indices in range")))
            .collect()
    }

    /// The minors involving column `k`, each oriented as `minor(min, max)`.
    pub fn minors_through(&self, k: usize) -> Result<Vec<(usize, usize, MinorValue)>> {
        self.check_column(k)?;
        Ok(self
            .all_minors()
            .into_iter()
            .filter(|(i, j, _)| *i == k || *j == k)
            .collect())
    }

    pub fn permute_columns(&self, order: &[usize]) -> MonomialMatrix {
        let pick = |row: &Vec<Monomial>| order.iter().map(|&c| row[c].clone()).collect();
        MonomialMatrix {
            rows: [pick(&self.rows[0]), pick(&self.rows[1])],
            arity: self.arity,
        }
    }

    pub fn swap_rows(&self) -> MonomialMatrix {
        MonomialMatrix {
            rows: [self.rows[1].clone(), self.rows[0].clone()],
            arity: self.arity,
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> MonomialMatrix {
        let map = |row: &Vec<Monomial>| row.iter().map(|m| m.relabel(perm)).collect();
        MonomialMatrix {
            rows: [map(&self.rows[0]), map(&self.rows[1])],
            arity: self.arity,
        }
    }

    /// `row;row` with entries separated by `,`.
    pub fn render(&self, vars: &VariableSet) -> String {
        self.rows
            .iter()
            .map(|row| row.iter().map(|m| m.render(vars)).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_matrix;

    #[test]
    fn quartic_minors() {
        let x = VariableSet::projective();
        let a = parse_matrix("x1^3,x0*x3,x2;x0^2,x1,1", &x).unwrap();
        assert_eq!(a.minor(0, 2).unwrap().render(&x), "x1^3 - x0^2*x2");
        assert_eq!(a.minor(1, 2).unwrap().render(&x), "x0*x3 - x1*x2");
        assert_eq!(a.minor(2, 1).unwrap(), a.minor(1, 2).unwrap().negate());
    }

    #[test]
    fn equal_columns_give_zero() {
        let v = VariableSet::letters(3);
        let a = parse_matrix("a,a,b;c,c,a", &v).unwrap();
        assert_eq!(a.minor(0, 1).unwrap(), MinorValue::Zero);
    }

    #[test]
    fn invalid_columns() {
        let v = VariableSet::letters(3);
        let a = parse_matrix("a,b,c;b,c,a", &v).unwrap();
        assert_eq!(a.minor(0, 3), Err(Error::ColumnOutOfRange { index: 3, cols: 3 }));
        assert!(a.minor(1, 1).is_err());
    }

    #[test]
    fn example_matrices_all_minors() {
        let v = VariableSet::letters(4);
        // a^m d^n, b^p, c^q / b^r, a^s, d^t with every exponent 1
        let a = parse_matrix("a*d,b,c;b,a,d", &v).unwrap();
        let rendered: Vec<String> = a.all_minors().iter().map(|(_, _, m)| m.render(&v)).collect();
        assert_eq!(rendered, ["a^2*d - b^2", "a*d^2 - b*c", "b*d - a*c"]);

        let two = parse_matrix("a,b;c,d", &v).unwrap();
        assert_eq!(two.all_minors().len(), 1);

        // a^{2u-1}, b^n, c^p / b^r c^s, d^t, a^u with u = n = p = r = s = t = 1
        let ex3 = parse_matrix("a,b,c;b*c,d,a", &v).unwrap();
        let rendered: Vec<String> = ex3.all_minors().iter().map(|(_, _, m)| m.render(&v)).collect();
        assert_eq!(rendered, ["a*d - b^2*c", "a^2 - b*c^2", "a*b - c*d"]);
    }
}
