//! Closed-form vs eigensolver sweeps, cospectrality certificates, and the
//! cospectral join families.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::alpha::Alpha;
use crate::closedform::{
    charpoly_central_regular, charpoly_cvjoin, charpoly_cvjoin_with, CoronalCoefficient, JoinPartner,
};
use crate::construct::{central_graph, central_vertex_join};
use crate::error::{Error, Result};
use crate::exact::char_poly_exact;
use crate::graph::{generate, Family, Graph};
use crate::matrix::SymMatrix;
use crate::spectra::{a_alpha_in, a_alpha_matrix, eigenvalues_sym, CoronalEvaluator, Spectrum};
use crate::tol;

/// True iff both spectra have the same length and every sorted position
/// differs by at most `tol`.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    a.max_deviation(b).is_some_and(|d| d <= tol)
}

/// Exact cospectrality: identical characteristic polynomials.
pub fn spectra_equal_exact(a: &SymMatrix<BigRational>, b: &SymMatrix<BigRational>) -> bool {
    a.order() == b.order() && char_poly_exact(a) == char_poly_exact(b)
}

/// One entry of a verification catalog.
#[derive(Clone, Debug)]
pub enum Case {
    /// `C(G)` against the central-graph factorization.
    Central(Graph),
    /// `G1 ∨̇ G2` with regular `G2` against the cubic-coronal factorization.
    CvJoin(Graph, Graph),
    /// `G1 ∨̇ K_{p,q}` against the quartic-coronal factorization.
    CvJoinKpq(Graph, usize, usize),
}

impl Case {
    fn kind(&self) -> &'static str {
        match self {
            Case::Central(_) => "central",
            Case::CvJoin(..) => "cvjoin",
            Case::CvJoinKpq(..) => "cvjoin_kpq",
        }
    }

    fn label(&self) -> String {
        match self {
            Case::Central(g) => format!("C({})", g.label()),
            Case::CvJoin(a, b) => format!("{}∨̇{}", a.label(), b.label()),
            Case::CvJoinKpq(a, p, q) => format!("{}∨̇K{p},{q}", a.label()),
        }
    }

    fn source(&self) -> &'static str {
        match self {
            Case::Central(_) => "central factorization: (λ-2α)^(m-n) x row-sum quadratic x eigen quadratics",
            Case::CvJoin(..) => "join factorization: (λ-2α)^(m1-n1) x shifted A_α(G2) x eigen quadratics x coronal cubic",
            Case::CvJoinKpq(..) => "join factorization: (λ-2α)^(m1-n1) x α(n1+p), α(n1+q) x eigen quadratics x coronal quartic",
        }
    }

    fn explicit_graph(&self) -> Graph {
        match self {
            Case::Central(g) => central_graph(g),
            Case::CvJoin(a, b) => central_vertex_join(a, b),
            Case::CvJoinKpq(a, p, q) => central_vertex_join(
                a,
                &generate(Family::CompleteBipartite, &[*p, *q]).expect("p, q >= 1 checked"),
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub kind: String,
    pub graphs: String,
    pub alpha: String,
    pub status: Status,
    pub deviation: Option<f64>,
    pub source: String,
    pub order: Option<usize>,
    pub factor_degree_total: Option<usize>,
    pub closed_form: Vec<f64>,
    pub oracle: Vec<f64>,
    /// `Some` only where an exact characteristic-polynomial comparison ran.
    pub exact_certificate: Option<bool>,
    pub notes: String,
}

impl CaseResult {
    fn skipped(kind: &str, graphs: String, alpha: &Alpha, source: &str, reason: String) -> Self {
        Self {
            kind: kind.into(),
            graphs,
            alpha: alpha.to_string(),
            status: Status::Skipped,
            deviation: None,
            source: source.into(),
            order: None,
            factor_degree_total: None,
            closed_form: Vec::new(),
            oracle: Vec::new(),
            exact_certificate: None,
            notes: reason,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub worst_deviation: Option<f64>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// A measured answer to a question about a closed-form expression.
#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub id: String,
    pub question: String,
    pub checks: Vec<FindingCheck>,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FindingCheck {
    pub case: String,
    pub alpha: f64,
    /// Named measurements; `None` where a candidate expression is undefined
    /// (e.g. a negative square-root argument).
    pub measurements: BTreeMap<String, Option<f64>>,
}

/// Necessary conditions and a non-isomorphism witness for a cospectral pair.
#[derive(Clone, Debug, Serialize)]
pub struct PairCertificate {
    pub graphs: [String; 2],
    pub orders: [usize; 2],
    pub sizes: [usize; 2],
    pub degree_multisets_equal: bool,
    pub both_non_regular: bool,
    pub non_isomorphism: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PairCertificate>,
}

impl VerificationReport {
    pub fn from_cases(cases: Vec<CaseResult>) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
            if let Some(d) = c.deviation {
                summary.worst_deviation = Some(summary.worst_deviation.map_or(d, |w: f64| w.max(d)));
            }
        }
        Self {
            cases,
            summary,
            findings: Vec::new(),
            certificate: None,
        }
    }

    pub fn with_findings(mut self, findings: Vec<Finding>) -> Self {
        self.findings = findings;
        self
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per case; vector columns are omitted.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "kind", "graphs", "alpha", "status", "deviation", "order", "factor_degree_total",
            "exact_certificate", "source", "notes",
        ])
        .expect("in-memory write");
        let opt = |v: Option<String>| v.unwrap_or_default();
        for c in &self.cases {
            w.write_record([
                c.kind.clone(),
                c.graphs.clone(),
                c.alpha.clone(),
                format!("{:?}", c.status).to_lowercase(),
                opt(c.deviation.map(|d| format!("{d:.3e}"))),
                opt(c.order.map(|v| v.to_string())),
                opt(c.factor_degree_total.map(|v| v.to_string())),
                opt(c.exact_certificate.map(|v| v.to_string())),
                c.source.clone(),
                c.notes.clone(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Runs every `(case, alpha)` pair: closed-form spectrum against the
/// eigensolver on the explicitly built matrix. Cases whose preconditions
/// fail are reported as skipped.
pub fn sweep(catalog: &[Case], grid: &[Alpha]) -> VerificationReport {
    let work: Vec<(&Case, &Alpha)> = catalog
        .iter()
        .flat_map(|c| grid.iter().map(move |a| (c, a)))
        .collect();
    let cases = work.par_iter().map(|(c, a)| run_case(c, a)).collect();
    VerificationReport::from_cases(cases)
}

fn run_case(case: &Case, alpha: &Alpha) -> CaseResult {
    let a = alpha.value();
    let factored = match case {
        Case::Central(g) => charpoly_central_regular(g, a),
        Case::CvJoin(g1, g2) => {
            if g2.regularity().is_none() || !g2.is_connected() {
                Err(Error::Precondition(format!("G2 {} must be connected and regular", g2.label())))
            } else {
                charpoly_cvjoin(g1, JoinPartner::Regular(g2), a)
            }
        }
        Case::CvJoinKpq(g1, p, q) => charpoly_cvjoin(g1, JoinPartner::Kpq(*p, *q), a),
    };
    let factored = match factored {
        Ok(f) => f,
        Err(e @ (Error::Precondition(_) | Error::Domain(..))) => {
            return CaseResult::skipped(case.kind(), case.label(), alpha, case.source(), e.to_string())
        }
        Err(e) => return failure(case, alpha, e.to_string()),
    };
    let oracle = match a_alpha_matrix(&case.explicit_graph(), a).and_then(|m| eigenvalues_sym(&m)) {
        Ok(s) => s,
        Err(e) => return failure(case, alpha, format!("oracle: {e}")),
    };
    let closed = match factored.spectrum() {
        Ok(s) => s,
        Err(e) => return failure(case, alpha, e.to_string()),
    };
    let total = factored.total_degree();
    let mut notes = Vec::new();
    if total != oracle.len() {
        notes.push(format!("factor degrees sum to {total}, matrix order is {}", oracle.len()));
    }
    if let Case::CvJoinKpq(..) = case {
        let last = factored.factors.last().map_or(0, |f| f.poly.degree());
        notes.push(format!("coronal factor contributes {last} roots"));
        if last != 4 {
            notes.push("expected 4 coronal roots".into());
        }
    }
    let deviation = closed.max_deviation(&oracle);
    let ok = deviation.is_some_and(|d| d <= tol::MATCH)
        && total == oracle.len()
        && !notes.iter().any(|n| n.starts_with("expected"));
    CaseResult {
        kind: case.kind().into(),
        graphs: case.label(),
        alpha: alpha.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        deviation,
        source: case.source().into(),
        order: Some(oracle.len()),
        factor_degree_total: Some(total),
        closed_form: closed.values().to_vec(),
        oracle: oracle.values().to_vec(),
        exact_certificate: None,
        notes: notes.join("; "),
    }
}

fn failure(case: &Case, alpha: &Alpha, note: String) -> CaseResult {
    CaseResult {
        status: Status::Fail,
        ..CaseResult::skipped(case.kind(), case.label(), alpha, case.source(), note)
    }
}

fn fam(f: Family, p: &[usize]) -> Graph {
    generate(f, p).expect("catalog parameters are valid")
}

/// Central-graph cases: `K_3..K_7`, `C_4..C_8`, Petersen.
pub fn central_catalog() -> Vec<Graph> {
    let mut gs: Vec<Graph> = (3..=7).map(|n| fam(Family::Complete, &[n])).collect();
    gs.extend((4..=8).map(|n| fam(Family::Cycle, &[n])));
    gs.push(fam(Family::Petersen, &[]));
    gs
}

/// The standard sweep: central cases, regular joins over
/// `{K_3, C_4, C_6, Petersen} x {K_2, K_3, C_5}`, `K_{p,q}` joins over
/// `{C_4, Petersen} x {(1,1), (2,3), (3,3)}`, and `K_2`, which the closed
/// forms must skip.
pub fn default_catalog() -> Vec<Case> {
    let mut cases: Vec<Case> = central_catalog().into_iter().map(Case::Central).collect();
    cases.push(Case::Central(fam(Family::Complete, &[2])));
    let firsts = [
        fam(Family::Complete, &[3]),
        fam(Family::Cycle, &[4]),
        fam(Family::Cycle, &[6]),
        fam(Family::Petersen, &[]),
    ];
    let seconds = [
        fam(Family::Complete, &[2]),
        fam(Family::Complete, &[3]),
        fam(Family::Cycle, &[5]),
    ];
    for g1 in &firsts {
        for g2 in &seconds {
            cases.push(Case::CvJoin(g1.clone(), g2.clone()));
        }
    }
    for g1 in [fam(Family::Cycle, &[4]), fam(Family::Petersen, &[])] {
        for (p, q) in [(1, 1), (2, 3), (3, 3)] {
            cases.push(Case::CvJoinKpq(g1.clone(), p, q));
        }
    }
    cases
}

/// `0, 1/4, 1/2, 3/4, 1` as exact values.
pub fn default_grid() -> Vec<Alpha> {
    (0..=4).map(|k| Alpha::exact(k, 4)).collect()
}

/// Parses a catalog: one case per line,
///
/// ```text
/// central <graph>
/// cvjoin <graph> <graph>
/// kpq <graph> <p> <q>
/// ```
///
/// where `<graph>` is `family` or `family:p1,p2` (e.g. `cycle:5`). Tokens
/// starting with `@` are handed to `load` (typically a file path).
pub fn parse_catalog(text: &str, load: impl Fn(&str) -> Result<Graph>) -> Result<Vec<Case>> {
    let graph = |tok: &str, line: usize| -> Result<Graph> {
        if let Some(path) = tok.strip_prefix('@') {
            return load(path);
        }
        let (name, params) = tok.split_once(':').unwrap_or((tok, ""));
        let params = params
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    reason: format!("bad parameter {s:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        generate(name.parse()?, &params)
    };
    let mut cases = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        let bad = || Error::Parse {
            line,
            reason: format!("cannot parse case {l:?}"),
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let case = match toks.as_slice() {
            ["central", g] => Case::Central(graph(g, line)?),
            ["cvjoin", a, b] => Case::CvJoin(graph(a, line)?, graph(b, line)?),
            ["kpq", a, p, q] => Case::CvJoinKpq(graph(a, line)?, num(p)?, num(q)?),
            _ => return Err(bad()),
        };
        cases.push(case);
    }
    Ok(cases)
}

/// Recovers `G1` from `G1 ∨̇ H` as the graph formed by the neighbour pairs
/// of degree-2 vertices. Defined from the graph structure alone, so
/// isomorphic joins yield isomorphic skeletons.
fn join_skeleton(join: &Graph) -> Graph {
    let adj = join.neighbors();
    let mut originals: Vec<usize> = adj
        .iter()
        .filter(|nb| nb.len() == 2)
        .flat_map(|nb| nb.iter().copied())
        .collect();
    originals.sort_unstable();
    originals.dedup();
    let idx = |v: usize| originals.binary_search(&v).expect("collected above");
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .filter(|nb| nb.len() == 2)
        .map(|nb| (idx(nb[0]), idx(nb[1])))
        .collect();
    Graph::new(originals.len(), edges).expect("skeleton edges are valid")
}

fn certify_pair(j1: &Graph, j2: &Graph) -> PairCertificate {
    let (s1, s2) = (join_skeleton(j1), join_skeleton(j2));
    let (p1, p2) = (s1.local_clique_profile(), s2.local_clique_profile());
    let non_isomorphism = (p1 != p2).then(|| {
        format!(
            "degree-2 skeletons differ in 4-cliques per vertex: {:?} vs {:?}",
            summarize(&p1),
            summarize(&p2)
        )
    });
    PairCertificate {
        graphs: [j1.label().to_string(), j2.label().to_string()],
        orders: [j1.order(), j2.order()],
        sizes: [j1.size(), j2.size()],
        degree_multisets_equal: j1.degrees().sorted_desc() == j2.degrees().sorted_desc(),
        both_non_regular: j1.regularity().is_none() && j2.regularity().is_none(),
        non_isomorphism,
    }
}

fn summarize(profile: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &v in profile {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

/// Builds `G1 ∨̇ H` and `G2 ∨̇ H` for `A`-cospectral regular `G1`, `G2` and
/// compares their `A_α` spectra at every grid point. Exact grid values also
/// get an exact characteristic-polynomial comparison.
pub fn cospectral_cvjoin_family(
    g1: &Graph,
    g2: &Graph,
    h: &Graph,
    grid: &[Alpha],
) -> Result<VerificationReport> {
    for g in [g1, g2] {
        if g.regularity().is_none() {
            return Err(Error::Precondition(format!("{} is not regular", g.label())));
        }
    }
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::from_integer(0.into());
    let a1: SymMatrix<BigRational> = a_alpha_in(g1, zero.clone());
    let a2: SymMatrix<BigRational> = a_alpha_in(g2, zero);
    if !spectra_equal_exact(&a1, &a2) {
        return Err(Error::Precondition(format!(
            "{} and {} are not A-cospectral",
            g1.label(),
            g2.label()
        )));
    }
    let _ = one;
    let j1 = central_vertex_join(g1, h);
    let j2 = central_vertex_join(g2, h);
    let label = format!("{} vs {}", j1.label(), j2.label());
    let source = "eigensolver on both explicit joins";

    let cases = grid
        .par_iter()
        .map(|alpha| -> Result<CaseResult> {
            alpha.check_closed_unit()?;
            let a = alpha.value();
            let s1 = eigenvalues_sym(&a_alpha_matrix(&j1, a)?)?;
            let s2 = eigenvalues_sym(&a_alpha_matrix(&j2, a)?)?;
            let deviation = s1.max_deviation(&s2);
            let numeric_ok = spectra_equal(&s1, &s2, tol::MATCH);
            let exact = alpha.as_exact().map(|q| {
                spectra_equal_exact(&a_alpha_in(&j1, q.clone()), &a_alpha_in(&j2, q.clone()))
            });
            let ok = numeric_ok && exact.unwrap_or(true);
            Ok(CaseResult {
                kind: "cospectral".into(),
                graphs: label.clone(),
                alpha: alpha.to_string(),
                status: if ok { Status::Pass } else { Status::Fail },
                deviation,
                source: source.into(),
                order: Some(j1.order()),
                factor_degree_total: None,
                closed_form: s1.values().to_vec(),
                oracle: s2.values().to_vec(),
                exact_certificate: exact,
                notes: if exact.is_some() {
                    "exact characteristic polynomials compared".into()
                } else {
                    "numeric comparison only".into()
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerificationReport::from_cases(cases);
    report.certificate = Some(certify_pair(&j1, &j2));
    Ok(report)
}

/// Tests `Γ_{A_α(H1)} = Γ_{A_α(H2)}` at the given points, skipping points
/// within `tol::SING` of an eigenvalue of either matrix.
pub fn coronal_equal_check(h1: &Graph, h2: &Graph, alpha: f64, samples: &[f64]) -> Result<bool> {
    let e1 = CoronalEvaluator::new(&a_alpha_matrix(h1, alpha)?)?;
    let e2 = CoronalEvaluator::new(&a_alpha_matrix(h2, alpha)?)?;
    let usable: Vec<f64> = samples
        .iter()
        .copied()
        .filter(|&x| e1.pole_distance(x) >= tol::SING && e2.pole_distance(x) >= tol::SING)
        .collect();
    if usable.is_empty() {
        let x = samples.first().copied().unwrap_or(f64::NAN);
        return Err(Error::Singular { x, distance: 0.0 });
    }
    for x in usable {
        let (g1, g2) = (e1.eval(x)?, e2.eval(x)?);
        if (g1 - g2).abs() > tol::NUM * g1.abs().max(1.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `count` points spread over `[-b-2, b+2]`, where `b` bounds the spectrum,
/// each at least `0.05` away from every eigenvalue in `spectra`.
pub fn coronal_sample_points(spectra: &[&Spectrum], count: usize) -> Vec<f64> {
    let bound = spectra
        .iter()
        .flat_map(|s| s.values())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let (lo, hi) = (-bound - 2.0, bound + 2.0);
    let step = (hi - lo) / count.max(1) as f64;
    let near = |x: f64| spectra.iter().flat_map(|s| s.values()).any(|v| (x - v).abs() < 0.05);
    (0..count)
        .map(|k| {
            let mut x = lo + step * (k as f64 + 0.5) + 0.0137;
            let mut nudge = 0.0731;
            while near(x) {
                x += nudge;
                nudge *= 1.3;
            }
            x
        })
        .collect()
}

/// Sample count for an order-`n` coronal identity: two rational functions
/// of degree at most `n` agreeing at `2n + 1` non-poles are equal.
pub fn coronal_sample_count(n: usize) -> usize {
    2 * n + 1
}

// Candidate closed-form root expressions examined by the findings below.

fn candidate_central_kn_roots(n: usize, a: f64) -> Option<Vec<f64>> {
    let nf = n as f64;
    let mut v = vec![2.0 * a; n * (n - 3) / 2];
    let d2 = a * a * (nf + 1.0).powi(2) + 8.0 * (nf - 1.0) * (1.0 - 2.0 * a);
    let d3 = a * a * (nf - 1.0).powi(2) + 4.0 * (3.0 * a * a * nf + a * (3.0 - nf) + nf - 2.0);
    if d2 < 0.0 || d3 < 0.0 {
        return None;
    }
    v.push(a + d2.sqrt() / 2.0);
    v.push(a - d2.sqrt() / 2.0);
    for _ in 0..n - 1 {
        v.push(a * (nf - 1.0) / 2.0 + d3.sqrt() / 2.0);
        v.push(a * (nf - 1.0) / 2.0 - d3.sqrt() / 2.0);
    }
    Some(v)
}

fn candidate_central_regular_roots(g: &Graph, a: f64) -> Option<Vec<f64>> {
    let n = g.order() as f64;
    let r = g.regularity()? as f64;
    let spec = eigenvalues_sym(&g.adjacency_matrix()).ok()?;
    let mut v = vec![2.0 * a; g.size() - g.order()];
    let c2 = a + (n - r * (1.0 - a) - 1.0) / 2.0;
    let d2 = a * a * (r + 2.0).powi(2)
        + 2.0 * a * (n * (r - 2.0) - r * (r + 7.0) + 2.0)
        + (n - r - 1.0).powi(2)
        + 8.0 * r;
    if d2 < 0.0 {
        return None;
    }
    v.extend([c2 + d2.sqrt() / 2.0, c2 - d2.sqrt() / 2.0]);
    for &l in &spec.values()[1..] {
        let c = a + (a * n - l * (1.0 - a) - 1.0) / 2.0;
        let d = ((1.0 - a) * l - a * n + 1.0).powi(2)
            + 4.0 * ((1.0 - a) * l + a * a * (1.0 + r - 4.0 * n) + a * (1.0 - r) + r);
        if d < 0.0 {
            return None;
        }
        v.extend([c + d.sqrt() / 2.0, c - d.sqrt() / 2.0]);
    }
    Some(v)
}

fn deviation_from(values: Option<Vec<f64>>, oracle: &Spectrum) -> Option<f64> {
    values.and_then(|v| Spectrum::from_values(v).max_deviation(oracle))
}

fn oracle_of(g: &Graph, a: f64) -> Spectrum {
    eigenvalues_sym(&a_alpha_matrix(g, a).expect("alpha in range")).expect("eigensolver contract")
}

const FINDING_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Measured outcomes for closed-form expressions that disagree with, or
/// are ambiguous against, the factorizations used by the sweep.
pub fn discrepancy_findings() -> Vec<Finding> {
    vec![
        finding_central_kn(),
        finding_central_regular(),
        finding_coronal_coefficient(),
        finding_kpq_root_count(),
        finding_join_size(),
    ]
}

fn finding_central_kn() -> Finding {
    let mut checks = Vec::new();
    let (mut candidate_ok, mut fact_ok, mut total) = (0, 0, 0);
    for n in 3..=7 {
        let kn = fam(Family::Complete, &[n]);
        for a in FINDING_GRID {
            let oracle = oracle_of(&central_graph(&kn), a);
            let candidate = deviation_from(candidate_central_kn_roots(n, a), &oracle);
            let fact = charpoly_central_regular(&kn, a)
                .and_then(|f| f.spectrum())
                .ok()
                .and_then(|s| s.max_deviation(&oracle));
            total += 1;
            candidate_ok += usize::from(candidate.is_some_and(|d| d <= tol::MATCH));
            fact_ok += usize::from(fact.is_some_and(|d| d <= tol::MATCH));
            let mut m = BTreeMap::new();
            m.insert("candidate_root_expressions".into(), candidate);
            m.insert("factorization".into(), fact);
            if n == 3 && a == 1.0 {
                let cp = charpoly_central_regular(&kn, 1.0).expect("K3 is 2-regular");
                let is_pow = cp.factors.iter().all(|f| {
                    f.poly.coeffs().iter().zip([4.0, -4.0, 1.0]).all(|(x, y)| (x - y).abs() < 1e-12)
                });
                m.insert("factorization_is_(λ-2)^6".into(), Some(f64::from(u8::from(is_pow))));
                let candidate = candidate_central_kn_roots(3, 1.0).unwrap_or_default();
                m.insert("candidate_max_root".into(), candidate.iter().copied().reduce(f64::max));
            }
            checks.push(FindingCheck {
                case: format!("C(K{n})"),
                alpha: a,
                measurements: m,
            });
        }
    }
    Finding {
        id: "central-kn-root-expressions".into(),
        question: "Do the closed-form root expressions α ± √(α²(n+1)² + 8(n-1)(1-2α))/2 and α(n-1)/2 ± √(α²(n-1)² + 4(3α²n + α(3-n) + n - 2))/2 (×(n-1)) give the A_α spectrum of C(K_n)?".into(),
        checks,
        verdict: format!(
            "expressions match the eigensolver in {candidate_ok}/{total} cases; the factorization matches in {fact_ok}/{total}. \
             At (K3, α=1) the factorization yields (λ-2)^6, as A_1(C(K3)) = 2I requires, while the expressions do not. \
             The sweep uses the factorization."
        ),
    }
}

fn finding_central_regular() -> Finding {
    let mut checks = Vec::new();
    let (mut ok, mut total) = (0, 0);
    for g in central_catalog() {
        for a in FINDING_GRID {
            let oracle = oracle_of(&central_graph(&g), a);
            let d = deviation_from(candidate_central_regular_roots(&g, a), &oracle);
            total += 1;
            ok += usize::from(d.is_some_and(|d| d <= tol::MATCH));
            checks.push(FindingCheck {
                case: format!("C({})", g.label()),
                alpha: a,
                measurements: BTreeMap::from([("candidate_root_expressions".into(), d)]),
            });
        }
    }
    Finding {
        id: "central-regular-root-expressions".into(),
        question: "Do the closed-form root expressions for C(G), G r-regular (2α; α + (n - r(1-α) - 1)/2 ± ...; α + (αn - λ_i(1-α) - 1)/2 ± ...), reproduce the roots of the quadratic factors?".into(),
        checks,
        verdict: format!("expressions match the eigensolver in {ok}/{total} cases; the sweep roots the quadratic factors directly."),
    }
}

fn finding_coronal_coefficient() -> Finding {
    let pairs: Vec<(Graph, Option<Graph>, (usize, usize))> = vec![
        (fam(Family::Complete, &[3]), Some(fam(Family::Complete, &[2])), (0, 0)),
        (fam(Family::Cycle, &[4]), Some(fam(Family::Complete, &[3])), (0, 0)),
        (fam(Family::Petersen, &[]), Some(fam(Family::Cycle, &[5])), (0, 0)),
        (fam(Family::Complete, &[3]), None, (2, 3)),
        (fam(Family::Petersen, &[]), None, (3, 3)),
    ];
    let mut checks = Vec::new();
    let (mut sq_ok, mut lin_ok, mut total) = (0, 0, 0);
    for (g1, g2, (p, q)) in &pairs {
        let (partner, explicit, label) = match g2 {
            Some(h) => (JoinPartner::Regular(h), central_vertex_join(g1, h), format!("{}∨̇{}", g1.label(), h.label())),
            None => {
                let kb = fam(Family::CompleteBipartite, &[*p, *q]);
                (JoinPartner::Kpq(*p, *q), central_vertex_join(g1, &kb), format!("{}∨̇K{p},{q}", g1.label()))
            }
        };
        for a in [0.0, 0.25, 0.5, 0.75] {
            let oracle = oracle_of(&explicit, a);
            let dev = |c| {
                charpoly_cvjoin_with(g1, partner, a, c)
                    .and_then(|f| f.spectrum())
                    .ok()
                    .and_then(|s| s.max_deviation(&oracle))
            };
            let sq = dev(CoronalCoefficient::OneMinusAlphaSquared);
            let lin = dev(CoronalCoefficient::OneMinusAlpha);
            if a > 0.0 {
                total += 1;
                sq_ok += usize::from(sq.is_some_and(|d| d <= tol::MATCH));
                lin_ok += usize::from(lin.is_some_and(|d| d <= tol::MATCH));
            }
            checks.push(FindingCheck {
                case: label.clone(),
                alpha: a,
                measurements: BTreeMap::from([
                    ("coefficient_(1-α)^2".into(), sq),
                    ("coefficient_(1-α)".into(), lin),
                ]),
            });
        }
    }
    Finding {
        id: "cvjoin-coronal-coefficient".into(),
        question: "Is the coronal term of the join factor n1(1-α)²Γ or n1(1-α)Γ?".into(),
        checks,
        verdict: format!(
            "for 0 < α < 1, (1-α)² matches the eigensolver in {sq_ok}/{total} cases and (1-α) in {lin_ok}/{total}; \
             the two coincide at α = 0. The Schur complement of the G2 block gives (1-α)², which the sweep uses."
        ),
    }
}

fn finding_kpq_root_count() -> Finding {
    let mut checks = Vec::new();
    let mut all_four = true;
    for g1 in [fam(Family::Cycle, &[4]), fam(Family::Petersen, &[])] {
        for (p, q) in [(1, 1), (2, 3), (3, 3)] {
            let f = charpoly_cvjoin(&g1, JoinPartner::Kpq(p, q), 0.5).expect("catalog preconditions hold");
            let deg = f.factors.last().map_or(0, |x| x.poly.degree());
            let others = f.total_degree() - deg;
            let remaining = f.order() - others;
            all_four &= deg == 4 && remaining == 4;
            checks.push(FindingCheck {
                case: format!("{}∨̇K{p},{q}", g1.label()),
                alpha: 0.5,
                measurements: BTreeMap::from([
                    ("coronal_factor_degree".into(), Some(deg as f64)),
                    ("order_minus_other_multiplicities".into(), Some(remaining as f64)),
                ]),
            });
        }
    }
    Finding {
        id: "kpq-coronal-root-count".into(),
        question: "How many eigenvalues does the coronal factor of G1∨̇K_{p,q} contribute (three or four)?".into(),
        checks,
        verdict: if all_four {
            "four in every case: the factor is a quartic and dimension counting leaves exactly four eigenvalues".into()
        } else {
            "dimension count did not close at four; see checks".into()
        },
    }
}

fn finding_join_size() -> Finding {
    let mut checks = Vec::new();
    for (g1, g2) in [
        (fam(Family::Complete, &[3]), fam(Family::Complete, &[2])),
        (fam(Family::Petersen, &[]), fam(Family::Cycle, &[5])),
        (fam(Family::Shrikhande, &[]), fam(Family::CompleteBipartite, &[2, 3])),
    ] {
        let j = central_vertex_join(&g1, &g2);
        let (n1, m1, n2, m2) = (g1.order(), g1.size(), g2.order(), g2.size());
        checks.push(FindingCheck {
            case: j.label().to_string(),
            alpha: 0.0,
            measurements: BTreeMap::from([
                ("vertices".into(), Some(j.order() as f64)),
                ("vertices_n1(1+n2)+m1".into(), Some((n1 * (1 + n2) + m1) as f64)),
                ("vertices_n1+m1+n2".into(), Some((n1 + m1 + n2) as f64)),
                ("edges".into(), Some(j.size() as f64)),
                ("edges_2m1+n1(n2+m2)".into(), Some((2 * m1 + n1 * (n2 + m2)) as f64)),
                ("edges_m1+n1(n1-1)/2+m2+n1n2".into(), Some((m1 + n1 * (n1 - 1) / 2 + m2 + n1 * n2) as f64)),
            ]),
        });
    }
    Finding {
        id: "cvjoin-size-formulas".into(),
        question: "Which vertex and edge counts does the central vertex join have?".into(),
        checks,
        verdict: "the join has n1 + m1 + n2 vertices and m1 + n1(n1-1)/2 + m2 + n1·n2 edges, the order of the block matrix the factorization is derived from; n1(1+n2)+m1 and 2m1 + n1(n2+m2) do not match".into(),
    }
}
