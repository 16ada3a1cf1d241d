//! Real roots of real-rooted polynomials.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::tol;

/// Companion eigenvalues closer than this (relative) are treated as one
/// multiple root.
const CLUSTER_RADIUS: f64 = 1e-5;
/// Imaginary part tolerated on an isolated root before it counts as complex.
const IMAG_TOL: f64 = 1e-7;
/// Candidate radius for multiple roots of order three and up.
const WIDE_RADIUS: f64 = 1e-3;
/// Relative size of `P^(j)(r)` below which `r` counts as a root of `P^(j)`.
const MULTIPLE_TOL: f64 = 1e-10;

/// All `deg(P)` roots of a polynomial known to have only real roots,
/// sorted in descending order.
///
/// Degree two uses the cancellation-free quadratic formula. Higher degrees
/// take the eigenvalues of the companion matrix; clusters of nearby
/// eigenvalues are collapsed to their mean and refined as a simple root of
/// the matching derivative, isolated roots are Newton-polished on `P`.
pub fn solve_poly_real(p: &Polynomial<f64>) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::Contract("roots of the zero polynomial".into()));
    }
    let monic = p.monic();
    let c = monic.coeffs();
    let mut roots = match monic.degree() {
        0 => Vec::new(),
        1 => vec![-c[0]],
        2 => quadratic(c[1], c[0])?,
        _ => companion_roots(&monic)?,
    };
    for &r in &roots {
        let scale: f64 = c
            .iter()
            .enumerate()
            .map(|(k, ck)| ck.abs() * r.abs().powi(k as i32))
            .sum();
        let res = monic.eval(&r).abs();
        if res > tol::ROOT * scale.max(1.0) {
            return Err(Error::Contract(format!(
                "root {r} of {monic} leaves residual {res:e}"
            )));
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

/// Roots of `x^2 + b x + c`.
fn quadratic(b: f64, c: f64) -> Result<Vec<f64>> {
    let mut disc = b * b - 4.0 * c;
    if disc < 0.0 {
        let scale = (b * b).max(c.abs()).max(1.0);
        if -disc > 1e-12 * scale {
            return Err(Error::Contract(format!(
                "x^2 + {b}x + {c} has complex roots (discriminant {disc:e})"
            )));
        }
        disc = 0.0;
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return Ok(vec![0.0, 0.0]);
    }
    Ok(vec![q, c / q])
}

fn companion_roots(monic: &Polynomial<f64>) -> Result<Vec<f64>> {
    let c = monic.coeffs();
    let d = monic.degree();
    let mut comp = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        comp[(i, d - 1)] = -c[i];
    }
    let mut eig: Vec<(f64, f64)> = comp
        .complex_eigenvalues()
        .iter()
        .map(|z| (z.re, z.im))
        .collect();
    eig.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut roots = Vec::with_capacity(d);
    for wide in single_linkage(&eig, WIDE_RADIUS) {
        if wide.len() > 1 {
            if let Some(r) = multiple_root(monic, &wide) {
                roots.extend(std::iter::repeat_n(r, wide.len()));
                continue;
            }
        }
        for cl in single_linkage(&wide, CLUSTER_RADIUS) {
            let k = cl.len();
            let center = cl.iter().map(|z| z.0).sum::<f64>() / k as f64;
            if k == 1 && cl[0].1.abs() > IMAG_TOL * center.abs().max(1.0) {
                return Err(Error::Contract(format!(
                    "{monic} has a complex root {} {:+}i",
                    cl[0].0, cl[0].1
                )));
            }
            let target = (1..k).fold(monic.clone(), |q, _| q.derivative());
            let radius = CLUSTER_RADIUS * center.abs().max(1.0);
            let refined = newton(&target, center, radius).unwrap_or(center);
            roots.extend(std::iter::repeat_n(refined, k));
        }
    }
    Ok(roots)
}

/// Groups points sorted by real part whose distance is within `radius`
/// (relative) of a neighbour already in the group.
fn single_linkage(points: &[(f64, f64)], radius: f64) -> Vec<Vec<(f64, f64)>> {
    let mut clusters: Vec<Vec<(f64, f64)>> = Vec::new();
    for &z in points {
        let joins = clusters.last().is_some_and(|cl| {
            cl.iter().any(|w| {
                let dist = (z.0 - w.0).hypot(z.1 - w.1);
                dist <= radius * z.0.abs().max(w.0.abs()).max(1.0)
            })
        });
        if joins {
            clusters.last_mut().unwrap().push(z);
        } else {
            clusters.push(vec![z]);
        }
    }
    clusters
}

/// A `k`-fold root spreads companion eigenvalues by roughly `eps^(1/k)`.
/// Accepts the cluster as one root of multiplicity `k` when the refined
/// centre annihilates `P, P', ..., P^(k-1)` to working precision.
fn multiple_root(monic: &Polynomial<f64>, cl: &[(f64, f64)]) -> Option<f64> {
    let k = cl.len();
    let center = cl.iter().map(|z| z.0).sum::<f64>() / k as f64;
    let target = (1..k).fold(monic.clone(), |q, _| q.derivative());
    let r = newton(&target, center, WIDE_RADIUS * center.abs().max(1.0))?;
    let mut q = monic.clone();
    for _ in 0..k {
        let scale: f64 = q
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.abs() * r.abs().powi(i as i32))
            .sum();
        if q.eval(&r).abs() > MULTIPLE_TOL * scale.max(1.0) {
            return None;
        }
        q = q.derivative();
    }
    Some(r)
}

/// Newton iteration that never leaves `start ± radius` and keeps the best
/// residual seen.
fn newton(p: &Polynomial<f64>, start: f64, radius: f64) -> Option<f64> {
    let dp = p.derivative();
    let mut x = start;
    let mut best = (p.eval(&x).abs(), x);
    for _ in 0..50 {
        let d = dp.eval(&x);
        if d == 0.0 {
            break;
        }
        let next = x - p.eval(&x) / d;
        if !next.is_finite() || (next - start).abs() > radius {
            break;
        }
        let r = p.eval(&next).abs();
        if r < best.0 {
            best = (r, next);
        }
        if next == x {
            break;
        }
        x = next;
    }
    Some(best.1)
}
