//! The `A_alpha` matrix family and its spectral quantities.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{Matrix, Scalar, SymMatrix};
use crate::poly::{Polynomial, RationalFunction};
use crate::tol;

/// `alpha*D(G) + (1 - alpha)*A(G)` in float mode.
pub fn a_alpha_matrix(g: &Graph, alpha: f64) -> Result<SymMatrix<f64>> {
    Alpha::Float(alpha).check_closed_unit()?;
    Ok(a_alpha_in(g, alpha))
}

/// `alpha*D(G) + (1 - alpha)*A(G)` with exact rational entries.
pub fn a_alpha_matrix_exact(g: &Graph, alpha: &BigRational) -> Result<SymMatrix<BigRational>> {
    Alpha::Exact(alpha.clone()).check_closed_unit()?;
    Ok(a_alpha_in(g, alpha.clone()))
}

pub(crate) fn a_alpha_in<T: Scalar>(g: &Graph, alpha: T) -> SymMatrix<T> {
    let deg = g.degrees();
    let off = T::one() - alpha.clone();
    SymMatrix::from_upper(g.order(), |i, j| {
        if i == j {
            alpha.clone() * T::from_i64(deg.0[i] as i64)
        } else if g.has_edge(i, j) {
            off.clone()
        } else {
            T::zero()
        }
    })
}

/// Eigenvalues sorted in descending order, with a clustered view.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    groups: Vec<(f64, usize)>,
}

impl Spectrum {
    /// Sorts `values` descending and groups runs whose adjacent gaps are
    /// below [`tol::CLUSTER`]. Each group reports the mean of its members.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut sum = 0.0;
        let mut start = 0;
        for i in 0..values.len() {
            if i > start && values[i - 1] - values[i] >= tol::CLUSTER {
                groups.push((sum / (i - start) as f64, i - start));
                sum = 0.0;
                start = i;
            }
            sum += values[i];
        }
        if !values.is_empty() {
            groups.push((sum / (values.len() - start) as f64, values.len() - start));
        }
        Self { values, groups }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Multiplicity of the group within `tol` of `value` (0 if none).
    pub fn multiplicity(&self, value: f64, tol: f64) -> usize {
        self.values.iter().filter(|v| (*v - value).abs() <= tol).count()
    }

    /// Largest per-position gap after sorting, or `None` on length mismatch.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
        })
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let groups: Vec<(f64, usize)> = self.groups.clone();
        let mut st = s.serialize_struct("Spectrum", 2)?;
        st.serialize_field("values", &self.values)?;
        st.serialize_field("groups", &groups)?;
        st.end()
    }
}

fn to_nalgebra(m: &Matrix<f64>) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.entries())
}

/// All eigenvalues of a symmetric matrix.
///
/// Fails with a contract error if the reconstruction residual
/// `||MV - V diag(w)||_F` exceeds `tol::EIG * n * ||M||_F`.
pub fn eigenvalues_sym(m: &SymMatrix<f64>) -> Result<Spectrum> {
    let n = m.order();
    if n == 0 {
        return Ok(Spectrum::from_values(Vec::new()));
    }
    let a = to_nalgebra(m.as_matrix());
    let bound = tol::EIG * n as f64 * a.norm();
    let eig = SymmetricEigen::new(a.clone());
    if residual(&a, &eig.eigenvectors, &eig.eigenvalues) <= bound {
        return Ok(Spectrum::from_values(eig.eigenvalues.iter().copied().collect()));
    }
    // QL occasionally stalls on highly degenerate spectra; Jacobi does not.
    let (vals, vecs) = jacobi_eigen(a.clone());
    let res = residual(&a, &vecs, &vals);
    if res > bound {
        return Err(Error::Contract(format!(
            "eigensolver residual {res:e} exceeds {bound:e}"
        )));
    }
    Ok(Spectrum::from_values(vals.iter().copied().collect()))
}

fn residual(a: &DMatrix<f64>, vecs: &DMatrix<f64>, vals: &DVector<f64>) -> f64 {
    (a * vecs - vecs * DMatrix::from_diagonal(vals)).norm()
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
fn jacobi_eigen(mut a: DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let mut v = DMatrix::identity(n, n);
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    (a.diagonal(), v)
}

/// Like [`eigenvalues_sym`] but accepts an unchecked square matrix.
pub fn eigenvalues(m: &Matrix<f64>) -> Result<Spectrum> {
    eigenvalues_sym(&SymMatrix::new(m.clone())?)
}

/// `det(xI - M)` built from the eigenvalues (float mode).
pub fn char_poly(m: &SymMatrix<f64>) -> Result<Polynomial<f64>> {
    Ok(Polynomial::from_roots(eigenvalues_sym(m)?.values()))
}

pub use crate::exact::char_poly_exact;

/// Spectrum of `A_alpha(G)`.
pub fn a_alpha_spectrum(g: &Graph, alpha: f64) -> Result<Spectrum> {
    eigenvalues_sym(&a_alpha_matrix(g, alpha)?)
}

/// Evaluates `1^T (xI - M)^{-1} 1` by linear solves against the all-ones
/// vector. The spectrum of `M` is computed once to detect poles.
pub struct CoronalEvaluator {
    matrix: DMatrix<f64>,
    spectrum: Spectrum,
}

impl CoronalEvaluator {
    pub fn new(m: &SymMatrix<f64>) -> Result<Self> {
        Ok(Self {
            matrix: to_nalgebra(m.as_matrix()),
            spectrum: eigenvalues_sym(m)?,
        })
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Distance from `x` to the nearest eigenvalue.
    pub fn pole_distance(&self, x: f64) -> f64 {
        self.spectrum
            .values()
            .iter()
            .fold(f64::INFINITY, |m, v| m.min((x - v).abs()))
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let distance = self.pole_distance(x);
        if distance < tol::SING {
            return Err(Error::Singular { x, distance });
        }
        let n = self.matrix.nrows();
        if n == 0 {
            return Ok(0.0);
        }
        let shifted = DMatrix::<f64>::identity(n, n) * x - &self.matrix;
        let ones = DVector::from_element(n, 1.0);
        let y = shifted
            .lu()
            .solve(&ones)
            .ok_or(Error::Singular { x, distance })?;
        Ok(y.sum())
    }
}

/// Sum of the entries of `(xI - M)^{-1}`.
pub fn coronal_eval(m: &SymMatrix<f64>, x: f64) -> Result<f64> {
    CoronalEvaluator::new(m)?.eval(x)
}

/// `n / (x - a)`, the coronal of any order-`n` matrix with constant row sum `a`.
pub fn coronal_regular(n: usize, a: f64) -> RationalFunction {
    assert!(n >= 1, "coronal of an empty matrix");
    RationalFunction::new(
        Polynomial::constant(n as f64),
        Polynomial::new(vec![-a, 1.0]),
    )
}

/// Adjacency coronal of `K_{a,b}`: `((a+b)x + 2ab) / (x^2 - ab)`.
pub fn coronal_complete_bipartite(a: usize, b: usize) -> RationalFunction {
    let (s, p) = ((a + b) as f64, (a * b) as f64);
    RationalFunction::new(
        Polynomial::new(vec![2.0 * p, s]),
        Polynomial::new(vec![-p, 0.0, 1.0]),
    )
}

/// `A_alpha` coronal of `K_{p,q}`:
/// `((p+q)x - alpha(p+q)^2 + 2pq) / (x^2 - alpha(p+q)x + (2alpha - 1)pq)`.
pub fn coronal_kpq_alpha(p: usize, q: usize, alpha: f64) -> RationalFunction {
    let (num, den) = kpq_coronal_parts(p, q, alpha);
    RationalFunction::new(num, den)
}

pub(crate) fn kpq_coronal_parts(p: usize, q: usize, alpha: f64) -> (Polynomial<f64>, Polynomial<f64>) {
    assert!(p >= 1 && q >= 1, "K_(p,q) needs p, q >= 1");
    let (s, pq) = ((p + q) as f64, (p * q) as f64);
    (
        Polynomial::new(vec![-alpha * s * s + 2.0 * pq, s]),
        Polynomial::new(vec![(2.0 * alpha - 1.0) * pq, -alpha * s, 1.0]),
    )
}

/// Hoffman polynomial of a connected regular graph: the polynomial with
/// `P(A) = J`, built from the clustered distinct adjacency eigenvalues.
pub fn hoffman_poly(g: &Graph) -> Result<Polynomial<f64>> {
    let r = g
        .regularity()
        .ok_or_else(|| Error::Precondition(format!("{} is not regular", g.label())))?;
    if !g.is_connected() {
        return Err(Error::Precondition(format!("{} is disconnected", g.label())));
    }
    let spec = eigenvalues_sym(&g.adjacency_matrix())?;
    let r = r as f64;
    let others: Vec<f64> = spec
        .groups()
        .iter()
        .map(|&(v, _)| v)
        .filter(|v| (v - r).abs() >= tol::CLUSTER)
        .collect();
    let denom: f64 = others.iter().map(|v| r - v).product();
    Ok(Polynomial::from_roots(&others).scale(&(g.order() as f64 / denom)))
}

/// `sum |lambda_i(A_alpha) - 2 alpha m / n|`, defined for `0 <= alpha < 1`.
pub fn a_alpha_energy(g: &Graph, alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(alpha, "[0, 1)"));
    }
    let n = g.order();
    if n == 0 {
        return Ok(0.0);
    }
    let shift = 2.0 * alpha * g.size() as f64 / n as f64;
    Ok(a_alpha_spectrum(g, alpha)?
        .values()
        .iter()
        .map(|v| (v - shift).abs())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn fam(f: Family, p: &[usize]) -> Graph {
        generate(f, p).unwrap()
    }

    #[test]
    fn degenerate_spectrum_falls_back_to_jacobi() {
        // 0.6 I + 0.8 A(Petersen) defeats the QL path.
        let s = a_alpha_spectrum(&fam(Family::Petersen, &[]), 0.2).unwrap();
        let expect = [3.0, 1.4, 1.4, 1.4, 1.4, 1.4, -1.0, -1.0, -1.0, -1.0];
        for (v, e) in s.values().iter().zip(expect) {
            assert!(close(*v, e, 1e-12), "{v} vs {e}");
        }
        let (vals, _) = jacobi_eigen(DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]));
        let mut vals: Vec<f64> = vals.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        assert!(close(vals[0], 1.0, 1e-15) && close(vals[1], 3.0, 1e-15));
    }

    #[test]
    fn a_alpha_examples() {
        let k2 = fam(Family::Complete, &[2]);
        assert_eq!(a_alpha_matrix(&k2, 0.5).unwrap().as_matrix().entries(), &[0.5; 4]);
        let p = fam(Family::Petersen, &[]);
        assert_eq!(a_alpha_matrix(&p, 0.0).unwrap(), p.adjacency_matrix());
        let c4 = fam(Family::Cycle, &[4]);
        assert_eq!(
            a_alpha_matrix(&c4, 1.0).unwrap().into_matrix(),
            Matrix::identity(4).scale(&2.0)
        );
        assert!(matches!(a_alpha_matrix(&c4, 1.2), Err(Error::Domain(..))));
        assert!(a_alpha_matrix(&c4, -0.1).is_err());
    }

    #[test]
    fn eigen_examples() {
        let c6 = eigenvalues_sym(&fam(Family::Cycle, &[6]).adjacency_matrix()).unwrap();
        // 2cos(2 pi k / 6), k = 0..5
        let mut oracle: Vec<f64> = (0..6)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 6.0).cos())
            .collect();
        oracle.sort_by(|a, b| b.total_cmp(a));
        assert!(c6.max_deviation(&Spectrum::from_values(oracle)).unwrap() < 1e-12);
        assert_eq!(c6.groups().iter().map(|g| g.1).collect::<Vec<_>>(), vec![1, 2, 2, 1]);

        let k4 = eigenvalues_sym(&fam(Family::Complete, &[4]).adjacency_matrix()).unwrap();
        assert!(close(k4.values()[0], 3.0, 1e-12));
        assert_eq!(k4.multiplicity(-1.0, 1e-9), 3);

        for a in [0.0, 0.3, 0.5, 1.0] {
            let s = a_alpha_spectrum(&fam(Family::Complete, &[2]), a).unwrap();
            let (hi, lo) = (1.0f64.max(2.0 * a - 1.0), 1.0f64.min(2.0 * a - 1.0));
            assert!(close(s.values()[0], hi, 1e-12) && close(s.values()[1], lo, 1e-12));
        }
    }

    #[test]
    fn eigenvalues_reject_asymmetric() {
        let m = Matrix::from_rows(vec![vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(eigenvalues(&m), Err(Error::Contract(_))));
    }

    #[test]
    fn char_poly_examples() {
        let z = SymMatrix::new(Matrix::<f64>::zeros(3, 3)).unwrap();
        assert_eq!(char_poly(&z).unwrap().coeffs(), &[0.0, 0.0, 0.0, 1.0]);
        let cp = char_poly(&fam(Family::Complete, &[2]).adjacency_matrix()).unwrap();
        let want = [-1.0, 0.0, 1.0];
        assert!(cp.coeffs().iter().zip(want).all(|(a, b)| close(*a, b, 1e-12)));
    }

    #[test]
    fn coronal_examples() {
        let pa = fam(Family::Petersen, &[]).adjacency_matrix();
        assert!(close(coronal_eval(&pa, 5.0).unwrap(), 5.0, 1e-12));
        let kb = fam(Family::CompleteBipartite, &[2, 3]).adjacency_matrix();
        assert!(close(coronal_eval(&kb, 3.0).unwrap(), 9.0, 1e-12));
        let z = SymMatrix::new(Matrix::<f64>::zeros(4, 4)).unwrap();
        assert!(close(coronal_eval(&z, 1.0).unwrap(), 4.0, 1e-15));
        assert!(matches!(coronal_eval(&pa, 3.0), Err(Error::Singular { .. })));

        assert_eq!(coronal_regular(10, 3.0).eval(5.0), Some(5.0));
        assert_eq!(coronal_regular(1, 0.0).eval(2.0), Some(0.5));
        let k = coronal_kpq_alpha(2, 3, 0.5).eval(3.0).unwrap();
        assert!(close(k, 14.5 / 1.5, 1e-12));
        let at0 = coronal_kpq_alpha(2, 3, 0.0);
        let adj = coronal_complete_bipartite(2, 3);
        for x in [3.0, 4.0, 7.0] {
            assert!(close(at0.eval(x).unwrap(), adj.eval(x).unwrap(), 1e-12));
        }
    }

    #[test]
    fn hoffman_examples() {
        let h = hoffman_poly(&fam(Family::Petersen, &[])).unwrap();
        let want = [-2.0, 1.0, 1.0]; // (x - 1)(x + 2)
        assert!(h.coeffs().iter().zip(want).all(|(a, b)| close(*a, b, 1e-10)));
        let c4 = hoffman_poly(&fam(Family::Cycle, &[4])).unwrap();
        let want = [0.0, 1.0, 0.5]; // x(x + 2)/2
        assert!(c4.coeffs().iter().zip(want).all(|(a, b)| close(*a, b, 1e-10)));
        assert!(matches!(
            hoffman_poly(&fam(Family::CompleteBipartite, &[2, 3])),
            Err(Error::Precondition(_))
        ));
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(matches!(hoffman_poly(&two_triangles), Err(Error::Precondition(_))));
    }

    #[test]
    fn energy_examples() {
        assert!(close(a_alpha_energy(&fam(Family::Complete, &[2]), 0.0).unwrap(), 2.0, 1e-12));
        let p = fam(Family::Petersen, &[]);
        for a in [0.0, 0.25, 0.5] {
            assert!(close(a_alpha_energy(&p, a).unwrap(), (1.0 - a) * 16.0, 1e-10));
        }
        let kb = fam(Family::CompleteBipartite, &[2, 3]);
        assert!(close(a_alpha_energy(&kb, 0.0).unwrap(), 2.0 * 6f64.sqrt(), 1e-12));
        assert!(matches!(a_alpha_energy(&p, 1.0), Err(Error::Domain(..))));
    }

    #[test]
    fn spectrum_json_shape() {
        let s = Spectrum::from_values(vec![-1.0, 1.0, 1.0]);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v, serde_json::json!({"values": [1.0, 1.0, -1.0], "groups": [[1.0, 2], [-1.0, 1]]}));
    }
}
