//! Decision procedures: positive (semi-)definiteness of point and interval
//! tensors through the finite vertex reduction, Hurwitz stability through
//! the negated interval, the explicit 4th-order 3-dimensional sufficient
//! conditions, and desk-scale brute-force oracles.
//!
//! Every verdict separates sound evidence (a verified witness, inclusion
//! disks, a matched structural condition) from heuristic evidence (a local
//! eigenvalue estimate). A verdict is `sound` only when the reported status
//! is fully certified.

use std::fmt;

use crate::error::{Error, Result};
use crate::interval::{enumerate_sign_vectors, IntervalTensor, SignVector, VertexMode};
use crate::spectra::{
    extreme_h_eigen, h_min_lower_bound, Extremum, SolverOptions,
};
use crate::tensor::DenseTensor;

/// Which property is being queried.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Pd,
    Psd,
}

/// Verdict status. `PsdNotPd` reports "positive semi-definite, strict
/// definiteness failed or could not be established"; diagnostics say which.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pd,
    PsdNotPd,
    NotPsd,
    Stable,
    NotStable,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pd => "PD",
            Status::PsdNotPd => "PSD_NOT_PD",
            Status::NotPsd => "NOT_PSD",
            Status::Stable => "STABLE",
            Status::NotStable => "NOT_STABLE",
            Status::Unknown => "UNKNOWN",
        };
        f.write_str(s)
    }
}

/// Evidence tags attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Inclusion-disk bound decided the sign of the spectrum.
    Gershgorin,
    /// The 2^{n-1} vertex checks were combined.
    VertexReduction,
    /// A 4th-order 3-dimensional point condition matched (number, clause).
    Corollary(u8, Option<char>),
    /// A 4th-order 3-dimensional interval condition matched.
    Theorem(u8, Option<char>),
    /// A concrete vector was evaluated and certifies the claim.
    WitnessEvaluation,
    /// A local eigenvalue estimate; not a proof.
    Heuristic,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Gershgorin => write!(f, "gershgorin"),
            Certificate::VertexReduction => write!(f, "vertex_reduction"),
            Certificate::Corollary(n, None) => write!(f, "corollary_5_{n}"),
            Certificate::Corollary(n, Some(c)) => write!(f, "corollary_5_{n}{c}"),
            Certificate::Theorem(n, None) => write!(f, "theorem_5_{n}"),
            Certificate::Theorem(n, Some(c)) => write!(f, "theorem_5_{n}{c}"),
            Certificate::WitnessEvaluation => write!(f, "witness_evaluation"),
            Certificate::Heuristic => write!(f, "heuristic"),
        }
    }
}

/// Outcome of a decision procedure.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Vec<f64>>,
    pub certificates: Vec<Certificate>,
    pub per_vertex: Option<Vec<(SignVector, Status)>>,
    pub diagnostics: Vec<String>,
    /// The reported status is fully certified for the queried property.
    pub sound: bool,
}

impl Verdict {
    fn new(status: Status, sound: bool) -> Self {
        Self {
            status,
            witness: None,
            certificates: Vec::new(),
            per_vertex: None,
            diagnostics: Vec::new(),
            sound,
        }
    }

    fn with_cert(mut self, c: Certificate) -> Self {
        if !self.certificates.contains(&c) {
            self.certificates.push(c);
        }
        self
    }

    fn with_witness(mut self, w: Vec<f64>) -> Self {
        self.witness = Some(w);
        self
    }

    fn note(mut self, msg: impl Into<String>) -> Self {
        self.diagnostics.push(msg.into());
        self
    }
}

/// Options for the certification pipelines.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub solver: SolverOptions,
    /// Strictness margin: PD needs a sound bound above it, PSD above its
    /// negation; values in between without structural evidence stay UNKNOWN.
    pub margin: f64,
    /// Worker threads for the per-vertex map; results are assembled in
    /// canonical enumeration order either way.
    pub jobs: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            solver: SolverOptions::default(),
            margin: 1e-8,
            jobs: 1,
        }
    }
}

const ZERO_TOL: f64 = 1e-12;
const WITNESS_TOL: f64 = 1e-12;

/// Decide positive (semi-)definiteness of a point tensor.
///
/// Pipeline: symmetrize; inclusion-disk bound; structural 4x3 conditions;
/// basis and multi-start minimization for refutation; heuristic strictness
/// last. Sound and heuristic evidence are kept apart via `sound` and the
/// `heuristic` tag.
pub fn check_point_pd(a: &DenseTensor, mode: Mode, opts: &CheckOptions) -> Result<Verdict> {
    if a.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder { order: a.order() });
    }
    let s = a.symmetrize();
    let n = s.dim();
    let lower = h_min_lower_bound(&s)?;

    if lower > opts.margin {
        return Ok(Verdict::new(Status::Pd, true).with_cert(Certificate::Gershgorin));
    }

    // Sound PSD evidence short of strictness.
    let mut psd_cert: Option<Certificate> = None;
    let mut pd_cert: Option<Certificate> = None;
    if lower > -opts.margin {
        psd_cert = Some(Certificate::Gershgorin);
    }
    if s.order() == 4 && n == 3 {
        if let Some((strict, cert)) = match_corollaries(&s) {
            if strict {
                pd_cert = Some(cert);
            } else if psd_cert.is_none() {
                psd_cert = Some(cert);
            }
        }
    }
    if let Some(cert) = pd_cert {
        return Ok(Verdict::new(Status::Pd, true).with_cert(cert));
    }

    // Cheap refutation / boundary witnesses at the basis vectors.
    let mut boundary_witness: Option<Vec<f64>> = None;
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        let v = s.apply_xm(&e)?;
        if v < -WITNESS_TOL {
            return Ok(Verdict::new(Status::NotPsd, true)
                .with_cert(Certificate::WitnessEvaluation)
                .with_witness(e));
        }
        if v.abs() <= WITNESS_TOL && boundary_witness.is_none() {
            boundary_witness = Some(e);
        }
    }

    // Heuristic minimization; its minimizer doubles as a refutation or
    // boundary witness when the value warrants it.
    let est = extreme_h_eigen(&s, Extremum::Min, &opts.solver)?;
    let at_min = s.apply_xm(&est.vector)?;
    if at_min < -WITNESS_TOL {
        return Ok(Verdict::new(Status::NotPsd, true)
            .with_cert(Certificate::WitnessEvaluation)
            .with_witness(est.vector));
    }
    if boundary_witness.is_none() && est.converged && at_min.abs() <= opts.margin {
        boundary_witness = Some(est.vector.clone());
    }

    if let Some(cert) = psd_cert {
        return Ok(match boundary_witness {
            Some(w) => Verdict::new(Status::PsdNotPd, true)
                .with_cert(cert)
                .with_cert(Certificate::WitnessEvaluation)
                .with_witness(w)
                .note("definiteness fails: the witness evaluates to zero"),
            None => {
                if est.converged && est.value > opts.margin {
                    // PSD is certified; strictness rests on the estimate.
                    Verdict::new(Status::Pd, matches!(mode, Mode::Psd))
                        .with_cert(cert)
                        .with_cert(Certificate::Heuristic)
                } else {
                    Verdict::new(Status::PsdNotPd, matches!(mode, Mode::Psd))
                        .with_cert(cert)
                        .note("semi-definite certified; definiteness undecided")
                }
            }
        });
    }

    if est.converged && est.value > opts.margin {
        return Ok(Verdict::new(Status::Pd, false)
            .with_cert(Certificate::Heuristic)
            .note(format!("heuristic minimum {:.3e}", est.value)));
    }
    Ok(Verdict::new(Status::Unknown, false).note(format!(
        "no certificate; heuristic minimum {:.3e} (converged: {})",
        est.value, est.converged
    )))
}

/// Decide positive (semi-)definiteness of an interval tensor by checking
/// the canonical vertex tensors; their verdicts combine exactly.
pub fn check_interval_pd(i: &IntervalTensor, mode: Mode, opts: &CheckOptions) -> Result<Verdict> {
    if i.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder { order: i.order() });
    }
    let zs = enumerate_sign_vectors(i.dim(), true);
    let vertices: Vec<DenseTensor> = zs
        .iter()
        .map(|z| i.vertex_tensor(z, VertexMode::Minus))
        .collect::<Result<_>>()?;
    let sub_verdicts: Vec<Verdict> = if opts.jobs > 1 && vertices.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = vertices
                .iter()
                .map(|v| scope.spawn(move || check_point_pd(v, mode, opts)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("vertex check panicked"))
                .collect::<Result<_>>()
        })?
    } else {
        vertices
            .iter()
            .map(|v| check_point_pd(v, mode, opts))
            .collect::<Result<_>>()?
    };
    let per_vertex: Vec<(SignVector, Status)> = zs
        .iter()
        .cloned()
        .zip(sub_verdicts.iter().map(|s| s.status))
        .collect();

    let mut verdict = combine_vertex_verdicts(i, &sub_verdicts)?;
    verdict.per_vertex = Some(per_vertex);
    verdict = verdict.with_cert(Certificate::VertexReduction);

    // Structural interval conditions can certify what the per-vertex
    // estimates could not.
    if i.order() == 4 && i.dim() == 3 && i.is_symmetric() {
        if let Some((strict, cert)) = match_theorem_conditions(i) {
            let claim_ok = match verdict.status {
                Status::NotPsd => false, // contradiction would mean a broken matcher
                _ => true,
            };
            if claim_ok {
                verdict = verdict.with_cert(cert);
                if strict && !(verdict.status == Status::Pd && verdict.sound) {
                    verdict.status = Status::Pd;
                    verdict.sound = true;
                } else if !strict && verdict.status == Status::Unknown {
                    verdict.status = Status::PsdNotPd;
                    verdict.sound = matches!(mode, Mode::Psd);
                    verdict = verdict.note("semi-definite by pattern; definiteness undecided");
                } else if !strict && !verdict.sound {
                    verdict.sound = matches!(mode, Mode::Psd)
                        && matches!(verdict.status, Status::Pd | Status::PsdNotPd);
                }
            }
        }
    }
    Ok(verdict)
}

fn combine_vertex_verdicts(i: &IntervalTensor, subs: &[Verdict]) -> Result<Verdict> {
    // A refutation at any vertex refutes the interval: the worst-case value
    // at the witness is at most the vertex value.
    for sub in subs {
        if sub.status == Status::NotPsd {
            let w = sub.witness.clone().expect("refutations carry witnesses");
            let wc = i.worst_case_value(&w)?;
            if wc < -WITNESS_TOL {
                return Ok(Verdict::new(Status::NotPsd, true)
                    .with_cert(Certificate::WitnessEvaluation)
                    .with_witness(w));
            }
            return Ok(Verdict::new(Status::Unknown, false)
                .note("vertex refutation did not recompute below the witness tolerance"));
        }
    }

    let all_sound = subs.iter().all(|s| s.sound);
    if subs.iter().any(|s| s.status == Status::Unknown) {
        return Ok(Verdict::new(Status::Unknown, false));
    }
    let mut verdict = if subs.iter().all(|s| s.status == Status::Pd) {
        Verdict::new(Status::Pd, all_sound)
    } else {
        // Some vertex is PSD-only; its boundary witness transfers to the
        // interval because the worst case can only be lower.
        let mut v = Verdict::new(Status::PsdNotPd, all_sound);
        if let Some(w) = subs
            .iter()
            .find(|s| s.status == Status::PsdNotPd && s.witness.is_some())
            .and_then(|s| s.witness.clone())
        {
            v = v.with_witness(w).with_cert(Certificate::WitnessEvaluation);
        }
        v
    };
    for sub in subs {
        for c in &sub.certificates {
            verdict = verdict.with_cert(c.clone());
        }
    }
    Ok(verdict)
}

/// Same decision routed through the symmetrized interval; sound statuses
/// must agree with [`check_interval_pd`].
pub fn check_interval_pd_via_symmetrization(
    i: &IntervalTensor,
    mode: Mode,
    opts: &CheckOptions,
) -> Result<Verdict> {
    check_interval_pd(&i.symmetrized(), mode, opts)
}

/// Hurwitz stability of a symmetric interval tensor: equivalent to the
/// negated interval being positive definite.
pub fn check_hurwitz_symmetric(i: &IntervalTensor, opts: &CheckOptions) -> Result<Verdict> {
    if i.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder { order: i.order() });
    }
    if !i.is_symmetric() {
        return Err(Error::AsymmetricInterval(
            "stored center/radius failed the symmetry scan; use check_hurwitz_general".into(),
        ));
    }
    let neg = i.negated();
    // The plus-signed vertices of I are exactly the negated minus-signed
    // vertices of -I; the vertex map below relies on it.
    for z in enumerate_sign_vectors(i.dim(), true) {
        let a = i.vertex_tensor(&z, VertexMode::Plus)?.negate();
        let b = neg.vertex_tensor(&z, VertexMode::Minus)?;
        debug_assert_eq!(a.entries(), b.entries());
    }

    let pd = check_interval_pd(&neg, Mode::Pd, opts)?;
    let per_vertex = pd.per_vertex.as_ref().map(|pv| {
        pv.iter()
            .map(|(z, s)| {
                let mapped = match s {
                    Status::Pd => Status::Stable,
                    Status::NotPsd => Status::NotStable,
                    _ => Status::Unknown,
                };
                (z.clone(), mapped)
            })
            .collect()
    });

    let mut verdict = match pd.status {
        Status::Pd => Verdict::new(Status::Stable, pd.sound),
        Status::NotPsd => {
            let w = pd.witness.clone().expect("refutations carry witnesses");
            Verdict::new(Status::NotStable, true)
                .with_cert(Certificate::WitnessEvaluation)
                .with_witness(w)
        }
        Status::PsdNotPd => match &pd.witness {
            Some(w) if neg.worst_case_value(w)? < -WITNESS_TOL => {
                Verdict::new(Status::NotStable, true)
                    .with_cert(Certificate::WitnessEvaluation)
                    .with_witness(w.clone())
            }
            _ => Verdict::new(Status::Unknown, false)
                .note("negated interval is semi-definite but not definite: boundary case"),
        },
        _ => Verdict::new(Status::Unknown, false),
    };
    for c in &pd.certificates {
        verdict = verdict.with_cert(c.clone());
    }
    verdict.per_vertex = per_vertex;
    Ok(verdict)
}

/// One-directional stability check for general interval tensors: stability
/// of the symmetrized interval implies stability. Never refutes.
pub fn check_hurwitz_general(i: &IntervalTensor, opts: &CheckOptions) -> Result<Verdict> {
    if i.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder { order: i.order() });
    }
    let sym = check_hurwitz_symmetric(&i.symmetrized(), opts)?;
    if sym.status == Status::Stable {
        let mut v = Verdict::new(Status::Stable, sym.sound)
            .note("stability of the symmetrized interval transfers");
        for c in &sym.certificates {
            v = v.with_cert(c.clone());
        }
        v.per_vertex = sym.per_vertex;
        return Ok(v);
    }
    // The converse direction fails already for interval matrices, so an
    // unstable symmetrization decides nothing here.
    Ok(Verdict::new(Status::Unknown, false).note(format!(
        "symmetrized interval is {}; no sound refutation path for asymmetric intervals",
        sym.status
    )))
}

/// Symmetric 4th-order 3-dimensional entry view keyed by index multiset.
struct Sym43<'a>(&'a DenseTensor);

impl<'a> Sym43<'a> {
    fn new(t: &'a DenseTensor) -> Result<Self> {
        if t.order() != 4 || t.dim() != 3 {
            return Err(Error::InvalidShape {
                order: t.order(),
                dim: t.dim(),
            });
        }
        if !t.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self(t))
    }

    fn e(&self, idx: [usize; 4]) -> f64 {
        self.0.get1(&idx)
    }
}

fn is_zero(v: f64) -> bool {
    v.abs() <= ZERO_TOL
}

/// Match the explicit point sufficient conditions for symmetric 4th-order
/// 3-dimensional tensors. Returns `(strict, certificate)` on a match; the
/// hypotheses are tested exactly as stated, with non-strict inequalities.
pub fn match_corollaries(t: &DenseTensor) -> Option<(bool, Certificate)> {
    let v = Sym43::new(t).ok()?;
    let (a1111, a2222, a3333) = (v.e([1, 1, 1, 1]), v.e([2, 2, 2, 2]), v.e([3, 3, 3, 3]));
    let (a1112, a1113, a1222) = (v.e([1, 1, 1, 2]), v.e([1, 1, 1, 3]), v.e([1, 2, 2, 2]));
    let (a2223, a1333, a2333) = (v.e([2, 2, 2, 3]), v.e([1, 3, 3, 3]), v.e([2, 3, 3, 3]));
    let (a1122, a1133, a2233) = (v.e([1, 1, 2, 2]), v.e([1, 1, 3, 3]), v.e([2, 2, 3, 3]));
    let (a1123, a1223, a1233) = (v.e([1, 1, 2, 3]), v.e([1, 2, 2, 3]), v.e([1, 2, 3, 3]));
    let diag = [a1111, a2222, a3333];
    let pairs = [a1122, a1133, a2233];

    // Corollary 5.1: a zero-odd-pattern tensor dominated by the two square
    // coefficients adjacent to a_{1123}.
    {
        let hyp = diag.iter().all(|&d| d >= 0.0)
            && [a1112, a1113, a1222, a2223, a1333, a2333]
                .iter()
                .all(|&x| is_zero(x))
            && is_zero(a1223)
            && is_zero(a1233)
            && pairs.iter().all(|&p| p >= 0.0)
            && a1122 >= a1123.abs()
            && a1133 >= a1123.abs();
        if hyp {
            let strict = diag.iter().all(|&d| d > 0.0);
            return Some((strict, Certificate::Corollary(1, None)));
        }
    }

    // Corollary 5.2.
    {
        let common = a1111 >= 0.0
            && a2222 >= 0.0
            && a3333 >= 1.0
            && [a1112, a1222, a2223, a1333, a1113].iter().all(|&x| is_zero(x))
            && pairs.iter().all(|&p| p >= 0.0)
            && is_zero(a1223)
            && is_zero(a1233)
            && a3333 >= a2333.abs()
            && a2233 >= 2.0 / 3.0 * a2333.abs();
        if common {
            let clause_a = is_zero(a1123);
            let clause_b = a1122 >= a2333.abs()
                && a1133 >= a2333.abs()
                && a3333 >= a1123.abs()
                && a1122 >= a1123.abs()
                && a1133 >= a1123.abs()
                && a2233 >= 2.0 / 3.0 * a1123.abs();
            let clause = if clause_a {
                Some('a')
            } else if clause_b {
                Some('b')
            } else {
                None
            };
            if let Some(c) = clause {
                let strict = a1111 > 0.0 && a2222 > 0.0;
                return Some((strict, Certificate::Corollary(2, Some(c))));
            }
        }
    }

    // Corollary 5.3.
    {
        let common = a1111 >= 0.0
            && a2222 >= 1.0
            && a3333 >= 1.0
            && [a1112, a1222, a1333, a1113].iter().all(|&x| is_zero(x));
        if common {
            let clause_a = pairs.iter().all(|&p| {
                p >= a2333.abs() && p >= a2223.abs() && p >= a1123.abs()
            }) && is_zero(a1223)
                && is_zero(a1233);
            let clause_b = a1122 >= 2.0 / 3.0 * a2333.abs()
                && a1122 >= 2.0 / 3.0 * a1223.abs()
                && a1133 >= a2333.abs()
                && a1133 >= a1223.abs()
                && a2233 >= a2333.abs()
                && a2233 >= a1223.abs()
                && is_zero(a1123)
                && is_zero(a1233)
                && is_zero(a2223);
            let clause = if clause_a {
                Some('a')
            } else if clause_b {
                Some('b')
            } else {
                None
            };
            if let Some(c) = clause {
                let strict = a1111 > 0.0;
                return Some((strict, Certificate::Corollary(3, Some(c))));
            }
        }
    }

    // Corollary 5.4: positive definite only, diagonal at least one.
    {
        let common = diag.iter().all(|&d| d >= 1.0)
            && [a1222, a2333, a1113].iter().all(|&x| is_zero(x));
        if common {
            let clause_a = diag.iter().all(|&d| {
                d >= a1112.abs() && d >= a2223.abs() && d >= a1333.abs()
            }) && pairs.iter().all(|&p| {
                p >= 2.0 / 3.0 * a1112.abs()
                    && p >= 2.0 / 3.0 * a2223.abs()
                    && p >= 2.0 / 3.0 * a1333.abs()
            }) && [a1123, a1223, a1233].iter().all(|&x| is_zero(x));
            let clause_b = diag.iter().all(|&d| {
                d >= a1112.abs() && d >= a2223.abs() && d >= a1123.abs()
            }) && pairs.iter().all(|&p| {
                p >= a1112.abs() && p >= a2223.abs() && p >= a1123.abs()
            }) && [a1113, a1223, a1233].iter().all(|&x| is_zero(x));
            let clause = if clause_a {
                Some('a')
            } else if clause_b {
                Some('b')
            } else {
                None
            };
            if let Some(c) = clause {
                return Some((true, Certificate::Corollary(4, Some(c))));
            }
        }
    }
    None
}

/// Public wrapper returning a verdict from the point condition matcher.
pub fn check_corollary_43(t: &DenseTensor) -> Result<Verdict> {
    Sym43::new(t)?;
    Ok(match match_corollaries(t) {
        Some((true, cert)) => Verdict::new(Status::Pd, true).with_cert(cert),
        Some((false, cert)) => Verdict::new(Status::PsdNotPd, true)
            .with_cert(cert)
            .note("semi-definite by pattern; definiteness not claimed"),
        None => Verdict::new(Status::Unknown, false).note("no condition matched"),
    })
}

/// Interval-level hypotheses of the four 4th-order 3-dimensional theorems.
/// Equalities on fixed entries are tested to 1e-12, inequalities as stated.
pub fn match_theorem_conditions(i: &IntervalTensor) -> Option<(bool, Certificate)> {
    if i.order() != 4 || i.dim() != 3 || !i.is_symmetric() {
        return None;
    }
    let lo = i.lower();
    let up = i.upper();
    let rad = i.radius();
    let l = |idx: [usize; 4]| lo.get1(&idx);
    let u = |idx: [usize; 4]| up.get1(&idx);
    let r = |idx: [usize; 4]| rad.get1(&idx);
    let fixed_zero = |idx: [usize; 4]| is_zero(l(idx)) && is_zero(u(idx));
    let band_one = |idx: [usize; 4]| is_zero(l(idx) + 1.0) && is_zero(u(idx) - 1.0);

    // All conditions live in the square-term-degenerate regime.
    let diag_ids = [[1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3]];
    let pair_ids = [[1, 1, 2, 2], [1, 1, 3, 3], [2, 2, 3, 3]];
    if diag_ids.iter().chain(pair_ids.iter()).any(|&idx| !is_zero(r(idx))) {
        return None;
    }

    // Theorem 5.1.
    {
        let hyp = diag_ids.iter().all(|&idx| is_zero(l(idx)))
            && [[1, 1, 1, 2], [1, 1, 1, 3], [1, 2, 2, 2], [2, 2, 2, 3], [1, 3, 3, 3], [2, 3, 3, 3]]
                .iter()
                .all(|&idx| fixed_zero(idx))
            && band_one([1, 1, 2, 3])
            && fixed_zero([1, 2, 2, 3])
            && fixed_zero([1, 2, 3, 3])
            && l([1, 1, 2, 2]) >= 1.0
            && l([1, 1, 3, 3]) >= 1.0
            && l([2, 2, 3, 3]) >= 0.0;
        if hyp {
            return Some((false, Certificate::Theorem(1, None)));
        }
    }

    // Theorem 5.2.
    {
        let common = is_zero(l([1, 1, 1, 1]))
            && is_zero(l([2, 2, 2, 2]))
            && is_zero(l([3, 3, 3, 3]) - 1.0)
            && [[1, 1, 1, 2], [1, 1, 1, 3], [1, 2, 2, 2], [2, 2, 2, 3], [1, 3, 3, 3]]
                .iter()
                .all(|&idx| fixed_zero(idx))
            && band_one([2, 3, 3, 3]);
        if common {
            let clause_a = [[1, 1, 2, 3], [1, 2, 2, 3], [1, 2, 3, 3]]
                .iter()
                .all(|&idx| fixed_zero(idx))
                && l([1, 1, 2, 2]) >= 0.0
                && l([1, 1, 3, 3]) >= 0.0
                && l([2, 2, 3, 3]) >= 2.0 / 3.0;
            let clause_b = band_one([1, 1, 2, 3])
                && fixed_zero([1, 2, 2, 3])
                && fixed_zero([1, 2, 3, 3])
                && l([1, 1, 2, 2]) >= 1.0
                && l([1, 1, 3, 3]) >= 1.0
                && l([2, 2, 3, 3]) >= 2.0 / 3.0;
            if clause_a {
                return Some((false, Certificate::Theorem(2, Some('a'))));
            }
            if clause_b {
                return Some((false, Certificate::Theorem(2, Some('b'))));
            }
        }
    }

    // Theorem 5.3.
    {
        let common = is_zero(l([1, 1, 1, 1]))
            && is_zero(l([2, 2, 2, 2]) - 1.0)
            && is_zero(l([3, 3, 3, 3]) - 1.0)
            && fixed_zero([1, 1, 1, 2])
            && fixed_zero([1, 1, 1, 3]);
        if common {
            let clause_a = band_one([2, 2, 2, 3])
                && band_one([2, 3, 3, 3])
                && band_one([1, 1, 2, 3])
                && fixed_zero([1, 2, 2, 2])
                && fixed_zero([1, 3, 3, 3])
                && fixed_zero([1, 2, 2, 3])
                && fixed_zero([1, 2, 3, 3])
                && pair_ids.iter().all(|&idx| l(idx) >= 1.0);
            let clause_b = band_one([2, 3, 3, 3])
                && fixed_zero([1, 2, 2, 2])
                && fixed_zero([2, 2, 2, 3])
                && fixed_zero([1, 3, 3, 3])
                && band_one([1, 2, 2, 3])
                && fixed_zero([1, 1, 2, 3])
                && fixed_zero([1, 2, 3, 3])
                && l([1, 1, 3, 3]) >= 1.0
                && l([2, 2, 3, 3]) >= 1.0
                && l([1, 1, 2, 2]) >= 2.0 / 3.0;
            if clause_a {
                return Some((false, Certificate::Theorem(3, Some('a'))));
            }
            if clause_b {
                return Some((false, Certificate::Theorem(3, Some('b'))));
            }
        }
    }

    // Theorem 5.4: the definite family.
    {
        let common = diag_ids.iter().all(|&idx| is_zero(l(idx) - 1.0))
            && fixed_zero([1, 2, 2, 2])
            && fixed_zero([2, 3, 3, 3])
            && fixed_zero([1, 1, 1, 3])
            && band_one([1, 1, 1, 2])
            && band_one([2, 2, 2, 3]);
        if common {
            let clause_a = pair_ids.iter().all(|&idx| is_zero(l(idx) - 2.0 / 3.0))
                && [[1, 1, 2, 3], [1, 2, 2, 3], [1, 2, 3, 3]]
                    .iter()
                    .all(|&idx| fixed_zero(idx))
                && band_one([1, 3, 3, 3]);
            let clause_b = pair_ids.iter().all(|&idx| is_zero(l(idx) - 1.0))
                && fixed_zero([1, 1, 2, 3])
                && fixed_zero([1, 2, 2, 3])
                && band_one([1, 2, 3, 3])
                && fixed_zero([1, 3, 3, 3]);
            if clause_a {
                return Some((true, Certificate::Theorem(4, Some('a'))));
            }
            if clause_b {
                return Some((true, Certificate::Theorem(4, Some('b'))));
            }
        }
    }
    None
}

/// Public wrapper returning a verdict from the interval condition matcher.
pub fn check_theorem_5x_interval(i: &IntervalTensor) -> Result<Verdict> {
    if i.order() != 4 || i.dim() != 3 {
        return Err(Error::InvalidShape {
            order: i.order(),
            dim: i.dim(),
        });
    }
    if !i.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(match match_theorem_conditions(i) {
        Some((true, cert)) => Verdict::new(Status::Pd, true).with_cert(cert),
        Some((false, cert)) => Verdict::new(Status::PsdNotPd, true)
            .with_cert(cert)
            .note("semi-definite by pattern; definiteness not claimed"),
        None => Verdict::new(Status::Unknown, false).note("no condition matched"),
    })
}

/// What the sphere-grid oracle minimizes over the unit sphere.
#[derive(Debug, Clone, Copy)]
pub enum SphereTarget<'a> {
    /// `A x^m` of a point tensor.
    Point(&'a DenseTensor),
    /// The interval worst case `min_{A in A^I} A x^m`.
    Interval(&'a IntervalTensor),
}

impl SphereTarget<'_> {
    fn order(&self) -> usize {
        match self {
            SphereTarget::Point(t) => t.order(),
            SphereTarget::Interval(i) => i.order(),
        }
    }

    fn dim(&self) -> usize {
        match self {
            SphereTarget::Point(t) => t.dim(),
            SphereTarget::Interval(i) => i.dim(),
        }
    }

    fn eval(&self, x: &[f64]) -> Result<f64> {
        match self {
            SphereTarget::Point(t) => t.apply_xm(x),
            SphereTarget::Interval(i) => i.worst_case_value(x),
        }
    }
}

/// Sampled minimum over the unit m-norm sphere `sum x_i^m = 1` (the
/// natural normalization for H-eigenvalues): an angular grid for `n <= 3`,
/// seeded quasi-random sampling above, optional local pattern refinement.
/// Samples are rescaled to the m-sphere before evaluation; the value is an
/// upper bound of the true minimum, and its sign matches the sign of the
/// minimum over any scale-invariant normalization.
pub fn oracle_sphere_min(
    target: SphereTarget<'_>,
    resolution: usize,
    refine: bool,
) -> Result<(f64, Vec<f64>)> {
    if target.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder {
            order: target.order(),
        });
    }
    let m = target.order() as i32;
    let n = target.dim();
    let mut best_val = f64::INFINITY;
    let mut best_x = vec![0.0; n];
    let mut consider = |x: &[f64], tv: &SphereTarget<'_>| -> Result<()> {
        // Rescale to the m-sphere; even m keeps the sum positive.
        let scale = x.iter().map(|v| v.powi(m)).sum::<f64>().powf(1.0 / m as f64);
        if !(scale > 1e-154) {
            return Ok(());
        }
        let xm: Vec<f64> = x.iter().map(|v| v / scale).collect();
        let v = tv.eval(&xm)?;
        if v < best_val {
            best_val = v;
            best_x = xm;
        }
        Ok(())
    };
    match n {
        1 => consider(&[1.0], &target)?,
        2 => {
            // Antipodal points are equivalent for even order: half circle.
            for k in 0..resolution.max(1) {
                let theta = std::f64::consts::PI * k as f64 / resolution.max(1) as f64;
                consider(&[theta.cos(), theta.sin()], &target)?;
            }
        }
        3 => {
            let res = resolution.max(1);
            for ii in 0..=res {
                let theta = std::f64::consts::PI * ii as f64 / res as f64;
                for j in 0..res {
                    let phi = std::f64::consts::PI * j as f64 / res as f64;
                    consider(
                        &[
                            theta.sin() * phi.cos(),
                            theta.sin() * phi.sin(),
                            theta.cos(),
                        ],
                        &target,
                    )?;
                }
            }
        }
        _ => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0421);
            for _ in 0..resolution.max(1).pow(2) {
                let mut x: Vec<f64> = (0..n)
                    .map(|_| {
                        let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
                        let u2: f64 = rng.gen_range(0.0..1.0);
                        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
                    })
                    .collect();
                let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm < 1e-12 {
                    continue;
                }
                for v in &mut x {
                    *v /= norm;
                }
                consider(&x, &target)?;
            }
        }
    }

    if refine && n > 1 {
        // Derivative-free pattern refinement from the best grid point;
        // handles the piecewise-smooth interval worst case too.
        let mut step = 2.0 / resolution.max(1) as f64;
        while step > 1e-9 {
            let mut improved = false;
            for i in 0..n {
                for sign in [1.0, -1.0] {
                    let mut cand = best_x.clone();
                    cand[i] += sign * step;
                    let norm = cand
                        .iter()
                        .map(|v| v.powi(m))
                        .sum::<f64>()
                        .powf(1.0 / m as f64);
                    if !(norm > 1e-12) {
                        continue;
                    }
                    for v in &mut cand {
                        *v /= norm;
                    }
                    let v = target.eval(&cand)?;
                    if v < best_val - 1e-18 {
                        best_val = v;
                        best_x = cand;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
    }
    Ok((best_val, best_x))
}

/// Grid estimate of the minimum quotient `A x^m / sum x_i^m`; the same
/// sampling as [`oracle_sphere_min`], divided pointwise.
pub fn oracle_quotient_min(a: &DenseTensor, resolution: usize) -> Result<f64> {
    if a.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder { order: a.order() });
    }
    let n = a.dim();
    let m = a.order() as i32;
    let mut best = f64::INFINITY;
    let mut consider = |x: &[f64]| -> Result<()> {
        let denom: f64 = x.iter().map(|v| v.powi(m)).sum();
        if denom > 1e-300 {
            let v = a.apply_xm(x)? / denom;
            if v < best {
                best = v;
            }
        }
        Ok(())
    };
    match n {
        1 => consider(&[1.0])?,
        2 => {
            for k in 0..resolution.max(1) {
                let theta = std::f64::consts::PI * k as f64 / resolution.max(1) as f64;
                consider(&[theta.cos(), theta.sin()])?;
            }
        }
        3 => {
            let res = resolution.max(1);
            for ii in 0..=res {
                let theta = std::f64::consts::PI * ii as f64 / res as f64;
                for j in 0..res {
                    let phi = std::f64::consts::PI * j as f64 / res as f64;
                    consider(&[
                        theta.sin() * phi.cos(),
                        theta.sin() * phi.sin(),
                        theta.cos(),
                    ])?;
                }
            }
        }
        _ => {
            return Err(Error::InvalidArgument(
                "quotient grid oracle supports n <= 3".into(),
            ))
        }
    }
    Ok(best)
}

/// Exhaustive extreme-point oracle: check every tensor that takes a bound
/// value in each entry. Matrices use exact eigenvalues; higher orders the
/// refined sphere grid. A validation tool for the vertex reduction, not a
/// production path.
pub fn oracle_extreme_points_pd(i: &IntervalTensor, mode: Mode, cap: u128) -> Result<Verdict> {
    if i.order() % 2 != 0 {
        return Err(Error::UnsupportedOddOrder { order: i.order() });
    }
    let points = i.enumerate_extreme_points(cap)?;
    let exact = i.order() == 2;
    let tol = if exact { 1e-8 } else { 1e-6 };
    let mut global_min = f64::INFINITY;
    let mut witness: Option<Vec<f64>> = None;
    for p in &points {
        let s = p.symmetrize();
        let (min_val, arg) = if exact {
            let evs = symmetric_matrix_eigenvalues(&s);
            let (k, &v) = evs
                .0
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| a.total_cmp(b))
                .expect("nonempty spectrum");
            (v, evs.1[k].clone())
        } else {
            oracle_sphere_min(SphereTarget::Point(&s), 200, true)?
        };
        if min_val < global_min {
            global_min = min_val;
            witness = Some(arg);
        }
    }
    Ok(if global_min > tol {
        Verdict::new(Status::Pd, exact).with_cert(if exact {
            Certificate::WitnessEvaluation
        } else {
            Certificate::Heuristic
        })
    } else if global_min < -tol {
        let w = witness.expect("minimum implies a witness");
        // The oracle minimum may sit slightly above the recomputed worst
        // case; verify before claiming.
        if i.worst_case_value(&w)? < -WITNESS_TOL {
            Verdict::new(Status::NotPsd, true)
                .with_cert(Certificate::WitnessEvaluation)
                .with_witness(w)
        } else {
            Verdict::new(Status::Unknown, false)
        }
    } else {
        let status = match mode {
            Mode::Psd => Status::PsdNotPd,
            Mode::Pd => Status::Unknown,
        };
        Verdict::new(status, false).note(format!("boundary minimum {global_min:.3e}"))
    })
}

/// Eigenvalues and eigenvectors of a symmetric matrix stored as an order-2
/// tensor, by cyclic Jacobi rotations. Exact up to roundoff for the small
/// dimensions used here.
pub fn symmetric_matrix_eigenvalues(t: &DenseTensor) -> (Vec<f64>, Vec<Vec<f64>>) {
    assert_eq!(t.order(), 2);
    let n = t.dim();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| t.get(&[i, j])).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (s, c) = theta.sin_cos();
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k][p], v[k][q]);
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    let vectors: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| v[i][j]).collect()).collect();
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{symmetric_from_multisets, CorpusInstance};
    use crate::interval::SignVector;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    fn sym43(entries: &[(&[usize], f64)]) -> DenseTensor {
        symmetric_from_multisets(entries).unwrap()
    }

    #[test]
    fn point_pd_identity_diagonal() {
        let a = DenseTensor::diagonal(4, &[1.0, 1.0, 1.0]).unwrap();
        let v = check_point_pd(&a, Mode::Pd, &opts()).unwrap();
        assert_eq!(v.status, Status::Pd);
        assert!(v.sound);
        assert!(v.certificates.contains(&Certificate::Gershgorin));
    }

    #[test]
    fn point_not_psd_negative_diagonal_entry() {
        let mut a = DenseTensor::zeros(4, 3).unwrap();
        a.set(&[0, 0, 0, 0], -1.0);
        let v = check_point_pd(&a, Mode::Psd, &opts()).unwrap();
        assert_eq!(v.status, Status::NotPsd);
        assert!(v.sound);
        let w = v.witness.unwrap();
        assert_eq!(w, vec![1.0, 0.0, 0.0]);
        assert_eq!(a.apply_xm(&w).unwrap(), -1.0);
    }

    #[test]
    fn point_theorem_51_vertex_is_psd_not_pd() {
        let i = CorpusInstance::Theorem51.build();
        let z1 = SignVector::all_ones(3);
        let a = i.vertex_tensor(&z1, VertexMode::Minus).unwrap();
        let v = check_point_pd(&a, Mode::Psd, &opts()).unwrap();
        assert_eq!(v.status, Status::PsdNotPd);
        assert!(v.sound);
        let w = v.witness.expect("definiteness failure carries a witness");
        assert!(a.apply_xm(&w).unwrap().abs() <= 1e-12);
        assert!(v
            .certificates
            .contains(&Certificate::Corollary(1, None)));
    }

    #[test]
    fn point_rejects_odd_order() {
        let a = DenseTensor::zeros(3, 2).unwrap();
        assert!(matches!(
            check_point_pd(&a, Mode::Pd, &opts()),
            Err(Error::UnsupportedOddOrder { order: 3 })
        ));
    }

    #[test]
    fn interval_theorem_51_is_psd_not_pd() {
        let i = CorpusInstance::Theorem51.build();
        let v = check_interval_pd(&i, Mode::Psd, &opts()).unwrap();
        assert_eq!(v.status, Status::PsdNotPd);
        assert!(v.sound);
        assert!(v.certificates.contains(&Certificate::VertexReduction));
        assert!(v.certificates.contains(&Certificate::Theorem(1, None)));
        let pv = v.per_vertex.unwrap();
        assert_eq!(pv.len(), 4);
        assert!(pv.iter().all(|(_, s)| *s == Status::PsdNotPd));
    }

    #[test]
    fn interval_diagonal_radius_refuted() {
        let center = DenseTensor::zeros(4, 3).unwrap();
        let radius = sym43(&[(&[1, 1, 1, 1], 1.0)]);
        let i = IntervalTensor::new(center, radius).unwrap();
        let v = check_interval_pd(&i, Mode::Psd, &opts()).unwrap();
        assert_eq!(v.status, Status::NotPsd);
        assert!(v.sound);
        let w = v.witness.unwrap();
        assert!((i.worst_case_value(&w).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn interval_theorem_54_instances_are_pd() {
        for inst in [CorpusInstance::Theorem54a, CorpusInstance::Theorem54b] {
            let v = check_interval_pd(&inst.build(), Mode::Pd, &opts()).unwrap();
            assert_eq!(v.status, Status::Pd, "{}", inst.name());
            assert!(v.sound, "{}", inst.name());
        }
    }

    #[test]
    fn symmetrization_route_is_fixed_point_on_symmetric_input() {
        let i = CorpusInstance::Theorem52a.build();
        let direct = check_interval_pd(&i, Mode::Psd, &opts()).unwrap();
        let routed = check_interval_pd_via_symmetrization(&i, Mode::Psd, &opts()).unwrap();
        assert_eq!(direct, routed);
    }

    #[test]
    fn symmetrization_route_handles_asymmetric_center() {
        // Orbit sums cancel: the symmetrization is diag(1, 1).
        let mut center = DenseTensor::diagonal(4, &[1.0, 1.0]).unwrap();
        center.set(&[0, 0, 0, 1], 5.0);
        center.set(&[0, 0, 1, 0], -5.0);
        let i = IntervalTensor::point(center).unwrap();
        let v = check_interval_pd_via_symmetrization(&i, Mode::Pd, &opts()).unwrap();
        assert_eq!(v.status, Status::Pd);
        assert!(v.sound);
    }

    #[test]
    fn hurwitz_diagonal_examples() {
        let stable = IntervalTensor::point(
            DenseTensor::diagonal(4, &[-1.0, -1.0, -1.0]).unwrap(),
        )
        .unwrap();
        let v = check_hurwitz_symmetric(&stable, &opts()).unwrap();
        assert_eq!(v.status, Status::Stable);
        assert!(v.sound);

        let unstable =
            IntervalTensor::point(DenseTensor::diagonal(4, &[1.0]).unwrap()).unwrap();
        let v = check_hurwitz_symmetric(&unstable, &opts()).unwrap();
        assert_eq!(v.status, Status::NotStable);
        assert_eq!(v.witness.unwrap(), vec![1.0]);
    }

    #[test]
    fn hurwitz_negated_theorem_54a_is_stable() {
        let pd = CorpusInstance::Theorem54a.build();
        let i = IntervalTensor::new(pd.center().negate(), pd.radius().clone()).unwrap();
        let v = check_hurwitz_symmetric(&i, &opts()).unwrap();
        assert_eq!(v.status, Status::Stable);
        assert!(v.sound);
        let pv = v.per_vertex.unwrap();
        assert!(pv.iter().all(|(_, s)| *s == Status::Stable));
    }

    #[test]
    fn hurwitz_symmetric_rejects_asymmetric_input() {
        let mut center = DenseTensor::zeros(4, 2).unwrap();
        center.set(&[0, 0, 0, 1], 1.0);
        let i = IntervalTensor::point(center).unwrap();
        assert!(matches!(
            check_hurwitz_symmetric(&i, &opts()),
            Err(Error::AsymmetricInterval(_))
        ));
    }

    #[test]
    fn hurwitz_general_examples() {
        // Symmetric stable instance passes through unchanged.
        let stable = IntervalTensor::point(
            DenseTensor::diagonal(4, &[-1.0, -1.0]).unwrap(),
        )
        .unwrap();
        let v = check_hurwitz_general(&stable, &opts()).unwrap();
        assert_eq!(v.status, Status::Stable);
        assert!(v.sound);

        // Asymmetric center whose orbit sums cancel to diag(-1, -1).
        let mut center = DenseTensor::diagonal(4, &[-1.0, -1.0]).unwrap();
        center.set(&[0, 0, 0, 1], 5.0);
        center.set(&[0, 0, 1, 0], -5.0);
        let i = IntervalTensor::point(center).unwrap();
        let v = check_hurwitz_general(&i, &opts()).unwrap();
        assert_eq!(v.status, Status::Stable);

        // A surviving positive odd term symmetrizes to an unstable tensor,
        // which decides nothing for the asymmetric interval.
        let mut center = DenseTensor::diagonal(4, &[-1.0, -1.0]).unwrap();
        center.set(&[0, 0, 0, 1], 20.0);
        let i = IntervalTensor::point(center).unwrap();
        let v = check_hurwitz_general(&i, &opts()).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert!(!v.sound);
    }

    #[test]
    fn corollary_checker_examples() {
        let pd = sym43(&[
            (&[1, 1, 1, 1], 1.0),
            (&[2, 2, 2, 2], 1.0),
            (&[3, 3, 3, 3], 1.0),
            (&[1, 1, 2, 2], 0.6),
            (&[1, 1, 3, 3], 0.6),
            (&[1, 1, 2, 3], 0.5),
        ]);
        let v = check_corollary_43(&pd).unwrap();
        assert_eq!(v.status, Status::Pd);
        assert!(v.certificates.contains(&Certificate::Corollary(1, None)));

        let psd = sym43(&[
            (&[1, 1, 2, 2], 0.6),
            (&[1, 1, 3, 3], 0.6),
            (&[1, 1, 2, 3], 0.5),
        ]);
        let v = check_corollary_43(&psd).unwrap();
        assert_eq!(v.status, Status::PsdNotPd);

        let violated = sym43(&[
            (&[1, 1, 1, 1], 1.0),
            (&[2, 2, 2, 2], 1.0),
            (&[3, 3, 3, 3], 1.0),
            (&[1, 1, 2, 2], 0.6),
            (&[1, 1, 3, 3], 0.6),
            (&[1, 1, 2, 3], 0.7),
        ]);
        let v = check_corollary_43(&violated).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn corollary_checker_rejects_wrong_shape() {
        let a = DenseTensor::zeros(4, 2).unwrap();
        assert!(check_corollary_43(&a).is_err());
        let b = DenseTensor::zeros(2, 3).unwrap();
        assert!(check_corollary_43(&b).is_err());
    }

    #[test]
    fn theorem_checker_matches_every_corpus_instance() {
        let expect = [
            (CorpusInstance::Theorem51, Certificate::Theorem(1, None), Status::PsdNotPd),
            (CorpusInstance::Theorem52a, Certificate::Theorem(2, Some('a')), Status::PsdNotPd),
            (CorpusInstance::Theorem52b, Certificate::Theorem(2, Some('b')), Status::PsdNotPd),
            (CorpusInstance::Theorem53a, Certificate::Theorem(3, Some('a')), Status::PsdNotPd),
            (CorpusInstance::Theorem53b, Certificate::Theorem(3, Some('b')), Status::PsdNotPd),
            (CorpusInstance::Theorem54a, Certificate::Theorem(4, Some('a')), Status::Pd),
            (CorpusInstance::Theorem54b, Certificate::Theorem(4, Some('b')), Status::Pd),
        ];
        for (inst, cert, status) in expect {
            let v = check_theorem_5x_interval(&inst.build()).unwrap();
            assert_eq!(v.status, status, "{}", inst.name());
            assert_eq!(v.certificates, vec![cert], "{}", inst.name());
            assert!(v.sound);
        }
    }

    #[test]
    fn theorem_checker_unmatched_is_unknown() {
        let i = IntervalTensor::point(DenseTensor::diagonal(4, &[1.0, 1.0, 1.0]).unwrap())
            .unwrap();
        let v = check_theorem_5x_interval(&i).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn sphere_oracle_diagonal_point() {
        let a = DenseTensor::diagonal(4, &[2.0, 5.0]).unwrap();
        let (val, arg) = oracle_sphere_min(SphereTarget::Point(&a), 360, false).unwrap();
        assert!((val - 2.0).abs() < 1e-4);
        assert!(arg[0].abs() > 0.99);
    }

    #[test]
    fn sphere_oracle_theorem_51_interval() {
        let i = CorpusInstance::Theorem51.build();
        let (val, _) = oracle_sphere_min(SphereTarget::Interval(&i), 200, true).unwrap();
        assert!(val >= -1e-9);
        assert!(val < 1e-3);
    }

    #[test]
    fn sphere_oracle_diagonal_radius_interval() {
        let center = DenseTensor::zeros(4, 3).unwrap();
        let radius = sym43(&[(&[1, 1, 1, 1], 1.0)]);
        let i = IntervalTensor::new(center, radius).unwrap();
        let (val, arg) = oracle_sphere_min(SphereTarget::Interval(&i), 200, true).unwrap();
        assert!((val + 1.0).abs() < 1e-6);
        assert!(arg[0].abs() > 0.999);
    }

    #[test]
    fn quotient_oracle_matches_diagonal_minimum() {
        let a = DenseTensor::diagonal(4, &[2.0, 5.0]).unwrap();
        let g = oracle_quotient_min(&a, 720).unwrap();
        assert!((g - 2.0).abs() < 1e-3);
    }

    #[test]
    fn extreme_point_oracle_degenerate_radius() {
        let i = IntervalTensor::point(DenseTensor::diagonal(2, &[3.0, 4.0]).unwrap()).unwrap();
        let v = oracle_extreme_points_pd(&i, Mode::Pd, 1 << 20).unwrap();
        assert_eq!(v.status, Status::Pd);
    }

    #[test]
    fn extreme_point_oracle_matches_vertex_reduction_for_matrices() {
        let center = DenseTensor::from_entries(2, 2, vec![3.0, 0.5, 0.5, 3.0]).unwrap();
        let radius = DenseTensor::from_entries(2, 2, vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        let i = IntervalTensor::new(center, radius).unwrap();
        let oracle = oracle_extreme_points_pd(&i, Mode::Pd, 1 << 20).unwrap();
        let reduced = check_interval_pd(&i, Mode::Pd, &opts()).unwrap();
        assert_eq!(oracle.status, Status::Pd);
        assert_eq!(reduced.status, Status::Pd);
    }

    #[test]
    fn jacobi_matrix_eigenvalues() {
        let t = DenseTensor::from_entries(2, 2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let (mut vals, vecs) = symmetric_matrix_eigenvalues(&t);
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
        assert_eq!(vecs.len(), 2);
    }

    #[test]
    fn status_and_certificate_display() {
        assert_eq!(Status::PsdNotPd.to_string(), "PSD_NOT_PD");
        assert_eq!(Certificate::Corollary(2, Some('b')).to_string(), "corollary_5_2b");
        assert_eq!(Certificate::Theorem(1, None).to_string(), "theorem_5_1");
    }
}
