//! Factored `A_alpha` characteristic polynomials of central graphs and
//! central vertex joins, evaluated without building the large matrix.
//!
//! For an `r`-regular connected `G` on `n` vertices with adjacency
//! eigenvalues `r = λ_1 > λ_2 >= ... >= λ_n`, the matrix of `C(G)` splits
//! along the eigenvectors of `A(G)` into one quadratic per `λ_i` plus the
//! eigenvalue `2α` on the remaining `m - n` subdivision directions:
//!
//! ```text
//! (λ - 2α)^(m-n)
//!   · [(λ - 2α)(λ - αn + 1 - (1-α)(n-r)) - 2r(1-α)^2]
//!   · ∏_{i>=2} [(λ - 2α)(λ - αn + 1 + (1-α)λ_i) - (1-α)^2(λ_i + r)]
//! ```
//!
//! For the join `G1 ∨̇ G2` the `G2` block is eliminated by a Schur
//! complement, which brings in the coronal `Γ = Γ_{A_α(G2)}(λ - αn1)`:
//!
//! ```text
//! (λ - 2α)^(m1-n1) · ∏_i (λ - αn1 - μ_i(A_α(G2)))
//!   · ∏_{j>=2} [(λ - 2α)(λ - α(n1+n2) + 1 + (1-α)λ_j) - (1-α)^2(r1 + λ_j)]
//!   · [(λ - 2α)(λ - n1(1 + (1-α)^2 Γ) - αn2 + (1-α)r1 + 1) - 2r1(1-α)^2]
//! ```
//!
//! When `Γ` is a known rational function (regular `G2`, or `K_{p,q}`) its
//! denominator cancels against part of the `μ_i` product, leaving a cubic
//! or quartic "coronal factor".

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;
use crate::roots::solve_poly_real;
use crate::spectra::{a_alpha_in, eigenvalues_sym, kpq_coronal_parts, CoronalEvaluator, Spectrum};

/// `(root, multiplicity)` of the repeated linear factor `(λ - 2α)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LinearFactor {
    pub root: f64,
    pub mult: usize,
}

/// One polynomial factor with its multiplicity and a provenance label.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub poly: Polynomial<f64>,
    pub mult: usize,
    pub source: String,
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Factor", 3)?;
        st.serialize_field("coeffs", self.poly.coeffs())?;
        st.serialize_field("mult", &self.mult)?;
        st.serialize_field("source", &self.source)?;
        st.end()
    }
}

/// Coefficient in front of `n1·Γ` in the join's coronal factor. The
/// Schur complement produces `(1-α)^2`; `OneMinusAlpha` exists only so the
/// verification report can show that the single power disagrees with the
/// eigensolver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoronalCoefficient {
    OneMinusAlphaSquared,
    OneMinusAlpha,
}

impl CoronalCoefficient {
    fn value(self, alpha: f64) -> f64 {
        match self {
            CoronalCoefficient::OneMinusAlphaSquared => (1.0 - alpha).powi(2),
            CoronalCoefficient::OneMinusAlpha => 1.0 - alpha,
        }
    }
}

/// Coronal factor of a join with arbitrary `G2`, kept as a rational
/// expression in `λ` and evaluated through linear solves.
pub struct GenericCoronal {
    n1: usize,
    r1: usize,
    n2: usize,
    alpha: f64,
    coefficient: CoronalCoefficient,
    evaluator: CoronalEvaluator,
}

impl std::fmt::Debug for GenericCoronal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenericCoronal")
            .field("n1", &self.n1)
            .field("r1", &self.r1)
            .field("n2", &self.n2)
            .field("alpha", &self.alpha)
            .finish()
    }
}

impl GenericCoronal {
    /// `(λ - 2α)(λ - n1(1 + c·Γ(λ - αn1)) - αn2 + (1-α)r1 + 1) - 2r1(1-α)^2`.
    pub fn eval(&self, lambda: f64) -> Result<f64> {
        let a = self.alpha;
        let (n1, r1, n2) = (self.n1 as f64, self.r1 as f64, self.n2 as f64);
        let gamma = self.evaluator.eval(lambda - a * n1)?;
        let c = self.coefficient.value(a);
        Ok((lambda - 2.0 * a) * (lambda - n1 * (1.0 + c * gamma) - a * n2 + (1.0 - a) * r1 + 1.0)
            - 2.0 * r1 * (1.0 - a).powi(2))
    }
}

/// A characteristic polynomial kept as a product of factors.
#[derive(Debug)]
pub struct FactoredCharPoly {
    pub linear: LinearFactor,
    pub factors: Vec<Factor>,
    /// Present only for joins with a generic second graph; contributes two
    /// roots once multiplied by the `G2` eigenvalue factors.
    pub coronal: Option<GenericCoronal>,
    order: usize,
}

impl Serialize for FactoredCharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FactoredCharPoly", 3)?;
        st.serialize_field("linear", &self.linear)?;
        st.serialize_field("factors", &self.factors)?;
        if let Some(c) = &self.coronal {
            st.serialize_field(
                "coronal",
                &serde_json::json!({
                    "kind": "generic",
                    "n1": c.n1,
                    "r1": c.r1,
                    "n2": c.n2,
                    "alpha": c.alpha,
                    "coefficient": c.coefficient,
                }),
            )?;
        }
        st.end()
    }
}

impl FactoredCharPoly {
    /// Order of the matrix whose characteristic polynomial this is.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `Σ degree × multiplicity` over all factors.
    pub fn total_degree(&self) -> usize {
        self.linear.mult
            + self.factors.iter().map(|f| f.poly.degree() * f.mult).sum::<usize>()
            + if self.coronal.is_some() { 2 } else { 0 }
    }

    pub fn eval(&self, lambda: f64) -> Result<f64> {
        let mut v = (lambda - self.linear.root).powi(self.linear.mult as i32);
        for f in &self.factors {
            v *= f.poly.eval(&lambda).powi(f.mult as i32);
        }
        if let Some(c) = &self.coronal {
            v *= c.eval(lambda)?;
        }
        Ok(v)
    }

    /// Roots of each factor, in factor order (linear factor excluded).
    pub fn rooted_factors(&self) -> Result<Vec<(&Factor, Vec<f64>)>> {
        self.factors
            .iter()
            .map(|f| Ok((f, solve_poly_real(&f.poly)?)))
            .collect()
    }

    /// The full root multiset. Fails for generic-coronal factorizations.
    pub fn spectrum(&self) -> Result<Spectrum> {
        if self.coronal.is_some() {
            return Err(Error::Precondition(
                "the coronal factor of a generic second graph has no closed polynomial form; use the eigensolver".into(),
            ));
        }
        let mut values = vec![self.linear.root; self.linear.mult];
        for (f, roots) in self.rooted_factors()? {
            for r in roots {
                values.extend(std::iter::repeat_n(r, f.mult));
            }
        }
        if values.len() != self.order {
            return Err(Error::Consistency(format!(
                "assembled {} eigenvalues for a matrix of order {}",
                values.len(),
                self.order
            )));
        }
        Ok(Spectrum::from_values(values))
    }
}

/// Checked parameters of a connected `r`-regular graph with `r >= 2`.
struct RegularData {
    n: usize,
    m: usize,
    r: usize,
    /// Clustered adjacency eigenvalues other than the leading `r`.
    others: Vec<(f64, usize)>,
}

fn regular_data(g: &Graph, role: &str) -> Result<RegularData> {
    let r = g.regularity().ok_or_else(|| {
        Error::Precondition(format!(
            "{role} {} is not regular; use the eigensolver on the explicit matrix",
            g.label()
        ))
    })?;
    if !g.is_connected() {
        return Err(Error::Precondition(format!("{role} {} is disconnected", g.label())));
    }
    if r < 2 {
        return Err(Error::Precondition(format!(
            "{role} {} has r < 2 (r = {r}); the closed form needs r >= 2",
            g.label()
        )));
    }
    let spec = eigenvalues_sym(&g.adjacency_matrix())?;
    let others = Spectrum::from_values(spec.values()[1..].to_vec())
        .groups()
        .to_vec();
    Ok(RegularData {
        n: g.order(),
        m: g.size(),
        r,
        others,
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    Alpha::Float(alpha).check_closed_unit()
}

fn poly(c: &[f64]) -> Polynomial<f64> {
    Polynomial::new(c.to_vec())
}

/// `(λ - 2α)(λ - shift) - k`.
fn quadratic(alpha: f64, shift: f64, k: f64) -> Polynomial<f64> {
    poly(&[-2.0 * alpha, 1.0])
        .mul(&poly(&[-shift, 1.0]))
        .sub(&Polynomial::constant(k))
}

/// Factored `det(λI - A_α(C(G)))` for connected `r`-regular `G`, `r >= 2`.
pub fn charpoly_central_regular(g: &Graph, alpha: f64) -> Result<FactoredCharPoly> {
    check_alpha(alpha)?;
    let d = regular_data(g, "G")?;
    let (n, r) = (d.n as f64, d.r as f64);
    let b = 1.0 - alpha;
    let mut factors = vec![Factor {
        poly: quadratic(alpha, alpha * n - 1.0 + b * (n - r), 2.0 * r * b * b),
        mult: 1,
        source: format!("row-sum quadratic (λ_1 = r = {})", d.r),
    }];
    for &(lam, mult) in &d.others {
        factors.push(Factor {
            poly: quadratic(alpha, alpha * n - 1.0 - b * lam, b * b * (lam + r)),
            mult,
            source: format!("eigen quadratic λ_i(A(G)) = {lam:.12}"),
        });
    }
    Ok(FactoredCharPoly {
        linear: LinearFactor {
            root: 2.0 * alpha,
            mult: d.m - d.n,
        },
        factors,
        coronal: None,
        order: d.n + d.m,
    })
}

/// Spectrum of `A_α(C(G))` from the factored characteristic polynomial.
pub fn spectrum_central_regular(g: &Graph, alpha: f64) -> Result<Spectrum> {
    charpoly_central_regular(g, alpha)?.spectrum()
}

/// Second operand of a central vertex join.
#[derive(Clone, Copy, Debug)]
pub enum JoinPartner<'a> {
    /// A regular graph: the coronal factor is a cubic.
    Regular(&'a Graph),
    /// `K_{p,q}`: the coronal factor is a quartic.
    Kpq(usize, usize),
    /// Any graph: the coronal factor stays a rational expression.
    Generic(&'a Graph),
}

/// Factored `det(λI - A_α(G1 ∨̇ G2))` for connected `r1`-regular `G1`,
/// `r1 >= 2`.
pub fn charpoly_cvjoin(g1: &Graph, partner: JoinPartner<'_>, alpha: f64) -> Result<FactoredCharPoly> {
    charpoly_cvjoin_with(g1, partner, alpha, CoronalCoefficient::OneMinusAlphaSquared)
}

/// [`charpoly_cvjoin`] with an explicit coronal coefficient.
pub fn charpoly_cvjoin_with(
    g1: &Graph,
    partner: JoinPartner<'_>,
    alpha: f64,
    coefficient: CoronalCoefficient,
) -> Result<FactoredCharPoly> {
    check_alpha(alpha)?;
    let d = regular_data(g1, "G1")?;
    let (n1, r1) = (d.n as f64, d.r as f64);
    let b = 1.0 - alpha;
    let c = coefficient.value(alpha);
    let n2 = match partner {
        JoinPartner::Regular(g) | JoinPartner::Generic(g) => g.order(),
        JoinPartner::Kpq(p, q) => {
            if p < 1 || q < 1 {
                return Err(Error::Precondition("K_(p,q) needs p, q >= 1".into()));
            }
            p + q
        }
    };
    let n2f = n2 as f64;

    let mut factors = Vec::new();
    for &(lam, mult) in &d.others {
        factors.push(Factor {
            poly: quadratic(alpha, alpha * (n1 + n2f) - 1.0 - b * lam, b * b * (r1 + lam)),
            mult,
            source: format!("eigen quadratic λ_j(A(G1)) = {lam:.12}"),
        });
    }

    // λ - n1 - α n2 + (1-α) r1 + 1
    let base = poly(&[-n1 - alpha * n2f + b * r1 + 1.0, 1.0]);
    let two_alpha = poly(&[-2.0 * alpha, 1.0]);
    let shift = -alpha * n1;
    let mut coronal = None;

    match partner {
        JoinPartner::Regular(g2) => {
            let r2 = g2.regularity().ok_or_else(|| {
                Error::Precondition(format!("G2 {} is not regular", g2.label()))
            })? as f64;
            let spec = eigenvalues_sym(&a_alpha_in(g2, alpha))?;
            push_shifted(&mut factors, &spec.values()[1..], alpha * n1, "G2");
            // x - r2 with x = λ - α n1
            let den = poly(&[shift - r2, 1.0]);
            let cubic = two_alpha
                .mul(&den.mul(&base).sub(&Polynomial::constant(c * n1 * n2f)))
                .sub(&den.scale(&(2.0 * r1 * b * b)));
            factors.push(Factor {
                poly: cubic,
                mult: 1,
                source: format!("coronal cubic (Γ = {n2}/(x - {r2}))"),
            });
        }
        JoinPartner::Kpq(p, q) => {
            let (pf, qf) = (p as f64, q as f64);
            push_repeated(&mut factors, alpha * (n1 + qf), p - 1, "α(n1 + q)");
            push_repeated(&mut factors, alpha * (n1 + pf), q - 1, "α(n1 + p)");
            let (num, den) = kpq_coronal_parts(p, q, alpha);
            let (num, den) = (num.shift(&shift), den.shift(&shift));
            let quartic = two_alpha
                .mul(&den.mul(&base).sub(&num.scale(&(c * n1))))
                .sub(&den.scale(&(2.0 * r1 * b * b)));
            factors.push(Factor {
                poly: quartic,
                mult: 1,
                source: format!("coronal quartic (K_{p},{q})"),
            });
        }
        JoinPartner::Generic(g2) => {
            let m2 = a_alpha_in(g2, alpha);
            let evaluator = CoronalEvaluator::new(&m2)?;
            push_shifted(&mut factors, evaluator.spectrum().values(), alpha * n1, "G2");
            coronal = Some(GenericCoronal {
                n1: d.n,
                r1: d.r,
                n2,
                alpha,
                coefficient,
                evaluator,
            });
        }
    }

    Ok(FactoredCharPoly {
        linear: LinearFactor {
            root: 2.0 * alpha,
            mult: d.m - d.n,
        },
        factors,
        coronal,
        order: d.n + d.m + n2,
    })
}

fn push_shifted(factors: &mut Vec<Factor>, mus: &[f64], offset: f64, who: &str) {
    for &(mu, mult) in Spectrum::from_values(mus.to_vec()).groups() {
        factors.push(Factor {
            poly: Polynomial::linear(offset + mu),
            mult,
            source: format!("αn1 + λ_i(A_α({who})) with λ_i = {mu:.12}"),
        });
    }
}

fn push_repeated(factors: &mut Vec<Factor>, root: f64, mult: usize, label: &str) {
    if mult > 0 {
        factors.push(Factor {
            poly: Polynomial::linear(root),
            mult,
            source: label.to_string(),
        });
    }
}

/// Spectrum of `A_α(G1 ∨̇ G2)` for connected regular `G1` (`r1 >= 2`) and
/// connected regular `G2`.
pub fn spectrum_cvjoin_regular(g1: &Graph, g2: &Graph, alpha: f64) -> Result<Spectrum> {
    if g2.regularity().is_none() || !g2.is_connected() {
        return Err(Error::Precondition(format!(
            "G2 {} must be connected and regular",
            g2.label()
        )));
    }
    charpoly_cvjoin(g1, JoinPartner::Regular(g2), alpha)?.spectrum()
}

/// Spectrum of `A_α(G1 ∨̇ K_{p,q})`.
pub fn spectrum_cvjoin_kpq(g1: &Graph, p: usize, q: usize, alpha: f64) -> Result<Spectrum> {
    charpoly_cvjoin(g1, JoinPartner::Kpq(p, q), alpha)?.spectrum()
}
