//! Dense univariate polynomials and rational functions.

use std::fmt;

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::matrix::{Matrix, Scalar};

/// Polynomial with coefficients in ascending degree order.
///
/// Trailing zero coefficients are stripped, so the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    /// `∏ (x - r)` over `roots`.
    pub fn from_roots(roots: &[T]) -> Self {
        roots
            .iter()
            .fold(Self::constant(T::one()), |p, r| p.mul(&Self::linear(r.clone())))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::constant(T::one()), |acc, _| acc.mul(self))
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: &T) -> Self {
        let step = Self::new(vec![shift.clone(), T::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(&step).add(&Self::constant(c.clone())))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading();
        if lead.is_zero() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c.clone() / lead.clone()).collect())
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix<T>) -> Matrix<T> {
        let n = m.rows();
        let id = Matrix::identity(n);
        self.coeffs.iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
            acc.matmul(m).add(&id.scale(c))
        })
    }

    pub fn to_f64(&self) -> Polynomial<f64> {
        Polynomial::new(self.coeffs.iter().map(Scalar::to_f64).collect())
    }
}

impl Polynomial<f64> {
    /// Max-abs coefficient norm.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| (*c == 0.0, *c < 0.0, format!("{}", c.abs()))))
    }
}

impl fmt::Display for Polynomial<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        write_terms(
            f,
            self.coeffs
                .iter()
                .map(|c| (num_traits::Zero::is_zero(c), c.is_negative(), c.abs().to_string())),
        )
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl DoubleEndedIterator<Item = (bool, bool, String)> + ExactSizeIterator,
) -> fmt::Result {
    if terms.len() == 0 {
        return f.write_str("0");
    }
    let mut first = true;
    for (k, (zero, neg, mag)) in terms.enumerate().rev() {
        if zero {
            continue;
        }
        let sign = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let mag = match mag.as_str() {
            "1" if k > 0 => String::new(),
            m if k > 0 && m.contains('/') => format!("({m})"),
            _ => mag,
        };
        let var = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        write!(f, "{sign}{mag}{var}")?;
        first = false;
    }
    Ok(())
}

impl Serialize for Polynomial<f64> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Polynomial", 1)?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

/// Exact coefficients serialize as `"p/q"` strings.
impl Serialize for Polynomial<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        let mut st = s.serialize_struct("Polynomial", 1)?;
        st.serialize_field("coeffs", &strs)?;
        st.end()
    }
}

/// Ratio of two polynomials; the denominator is never the zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    numerator: Polynomial<f64>,
    denominator: Polynomial<f64>,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial<f64>, denominator: Polynomial<f64>) -> Self {
        assert!(!denominator.is_zero(), "rational function with zero denominator");
        Self {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &Polynomial<f64> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial<f64> {
        &self.denominator
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, x: f64) -> Option<f64> {
        let d = self.denominator.eval(&x);
        (d != 0.0).then(|| self.numerator.eval(&x) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Polynomial<f64> {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1.0, 1.0]);
        let b = p(&[1.0, 1.0]);
        assert_eq!(a.mul(&b), p(&[-1.0, 0.0, 1.0]));
        assert_eq!(a.add(&b), p(&[0.0, 2.0]));
        assert_eq!(a.sub(&a), Polynomial::zero());
        assert_eq!(Polynomial::from_roots(&[1.0, 2.0, 3.0]), p(&[-6.0, 11.0, -6.0, 1.0]));
        assert_eq!(p(&[0.0, 0.0, 1.0]).shift(&1.0), p(&[1.0, 2.0, 1.0]));
        assert_eq!(p(&[5.0, 3.0, 2.0]).derivative(), p(&[3.0, 4.0]));
        assert_eq!(p(&[1.0, 0.0, 0.0]).degree(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1.0, 0.0, 1.0]).to_string(), "x^2 - 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[2.0, -3.0]).to_string(), "-3x + 2");
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let q = Polynomial::new(vec![r(-1, 2), r(3, 5), r(1, 1)]);
        assert_eq!(q.to_string(), "x^2 + (3/5)x - 1/2");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(p(&[-1.0, 0.0, 1.0])).unwrap();
        assert_eq!(v, serde_json::json!({"coeffs": [-1.0, 0.0, 1.0]}));
    }

    #[test]
    fn rational_function_pole() {
        let r = RationalFunction::new(p(&[10.0]), p(&[-3.0, 1.0]));
        assert_eq!(r.eval(5.0), Some(5.0));
        assert_eq!(r.eval(3.0), None);
    }
}
