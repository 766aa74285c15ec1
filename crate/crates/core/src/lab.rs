//! Verification scenarios that tie computed invariants to the known theorems, and a
//! randomized explorer for the minimal-reduction conjecture.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::blowup;
use crate::dao::{self, Answer, Certificate, DaoConfig};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{Confidence, IdealHandle, Mode, PresentedRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Recorded, not asserted.
    Evidence,
}

impl ClaimStatus {
    pub fn name(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Evidence => "evidence",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub status: ClaimStatus,
    /// Every input to the claim was certified.
    pub certified: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Verified,
    /// Nothing failed, but something rested on a cap or a random search.
    Evidence,
    Failed,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Verified => "verified",
            Outcome::Evidence => "evidence",
            Outcome::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioResult {
    pub id: String,
    pub inputs: Vec<String>,
    pub claims: Vec<Claim>,
}

impl ScenarioResult {
    fn new(id: &str, inputs: Vec<String>) -> Self {
        ScenarioResult { id: id.to_string(), inputs, claims: Vec::new() }
    }

    /// Asserted claim: passes iff `ok`.
    pub fn assert(&mut self, name: impl Into<String>, ok: bool, certified: bool, detail: impl Into<String>) {
        let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
        self.claims.push(Claim { name: name.into(), status, certified, detail: detail.into() });
    }

    pub fn evidence(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.claims.push(Claim { name: name.into(), status: ClaimStatus::Evidence, certified: false, detail: detail.into() });
    }

    pub fn outcome(&self) -> Outcome {
        if self.claims.iter().any(|c| c.status == ClaimStatus::Fail) {
            Outcome::Failed
        } else if self.claims.iter().all(|c| c.status == ClaimStatus::Pass && c.certified) {
            Outcome::Verified
        } else {
            Outcome::Evidence
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome() != Outcome::Failed
    }

    fn absorb(&mut self, prefix: &str, other: ScenarioResult) {
        for mut c in other.claims {
            c.name = format!("{}.{}", prefix, c.name);
            self.claims.push(c);
        }
    }
}

fn require_graded<F: Field>(r: &PresentedRing<F>, operation: &'static str) -> Result<()> {
    if r.mode() != Mode::Graded {
        return Err(AlgebraError::WrongMode { operation, required: "graded" });
    }
    Ok(())
}

fn inputs<F: Field>(r: &PresentedRing<F>, i: Option<&IdealHandle<F>>) -> Vec<String> {
    let mut v = vec![r.display()];
    if let Some(i) = i {
        v.push(i.display());
    }
    v
}

/// `d3(I) <= reg R(m, I)`, with `d3` from a scan that does not use the bound.
pub fn check_main_inequality<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<ScenarioResult> {
    require_graded(r, "check_main_inequality")?;
    let mut out = ScenarioResult::new("main_inequality", inputs(r, Some(i)));
    let reg = blowup::rees_regularity(r, i)?;
    let reach = reg.max(0) as u32 + cfg.window;
    let m = r.max_ideal();
    let mut last_fail: Option<u32> = None;
    let mut imk = i.clone();
    for k in 0..=reach {
        if !imk.product(&m).colon(&m).equals(&imk) {
            last_fail = Some(k);
        }
        imk = imk.product(&m);
    }
    let d3 = last_fail.map_or(0, |k| k as i64 + 1);
    out.assert("d3_le_reg", d3 <= reg as i64, true, format!("d3 = {} (scanned to {}), reg R(m, I) = {}", d3, reach, reg));
    let reported = dao::dao_d3(r, i, cfg)?;
    out.assert("scan_matches_d3", reported.value as i64 == d3, true, format!("dao_d3 = {}", reported.value));
    Ok(out)
}

/// `d3(I) = max{r_I(m), s(m) - 1}` for a reduction `I` of `m`.
pub fn check_identity_theorem<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<ScenarioResult> {
    let mut out = ScenarioResult::new("identity", inputs(r, Some(i)));
    let red = dao::is_reduction(r, i, cfg)?;
    let Some(rn) = red.reduction_number else {
        return Err(AlgebraError::NotAReduction);
    };
    let d3 = dao::dao_d3(r, i, cfg)?;
    let s = dao::s_of_m(r, cfg)?;
    let rhs = rn.max(s.value.saturating_sub(1));
    let certified = d3.certificate.is_certified() && s.certificate.is_certified() && red.certificate.is_certified();
    out.assert(
        "d3_eq_max",
        d3.value == rhs,
        certified,
        format!("d3 = {}, r_I = {}, s(m) = {}, max = {}", d3.value, rn, s.value, rhs),
    );
    Ok(out)
}

/// `reg R(m) <= reg R(m, I)`, with equality for reductions.
pub fn check_monotonicity<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<ScenarioResult> {
    require_graded(r, "check_monotonicity")?;
    let mut out = ScenarioResult::new("monotonicity", inputs(r, Some(i)));
    let a = blowup::rees_ring_regularity(r)?;
    let b = blowup::rees_regularity(r, i)?;
    out.assert("reg_le", a <= b, true, format!("reg R(m) = {}, reg R(m, I) = {}", a, b));
    let red = dao::is_reduction(r, i, cfg)?;
    if red.answer == Answer::Yes {
        out.assert("reg_eq_for_reduction", a == b, true, format!("r_I = {}", red.reduction_number.unwrap_or(0)));
    } else if a == b {
        out.evidence("equal_without_reduction", format!("reg R(m) = reg R(m, I) = {} and I is not a reduction", a));
    }
    Ok(out)
}

/// `(I m^{k+1} : m) ⊆ m^k` and `dim Q_k = dim gr_k + dim D_k` for `k <= reg R(m, I) + 1`.
pub fn check_socle_and_exactness<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, _cfg: &DaoConfig) -> Result<ScenarioResult> {
    require_graded(r, "check_socle_and_exactness")?;
    let mut out = ScenarioResult::new("socle_and_exactness", inputs(r, Some(i)));
    let top = blowup::rees_regularity(r, i)?.max(0) as u32 + 1;
    let m = r.max_ideal();
    for k in 0..=top {
        let imk1 = i.product(&r.max_ideal_power(k + 1));
        let sat = imk1.colon(&m);
        let mk = r.max_ideal_power(k);
        out.assert(format!("socle_contained_k{}", k), mk.contains_ideal(&sat), true, String::new());
        let (gr, d, q) = blowup::pq_component_dims(r, i, k)?;
        out.assert(format!("additivity_k{}", k), q == gr + d, true, format!("Q = {}, gr = {}, D = {}", q, gr, d));
    }
    Ok(out)
}

/// Regular ring characterization on computed data.
pub fn check_regular_characterization<F: Field>(r: &Arc<PresentedRing<F>>, samples: u32, cfg: &DaoConfig) -> Result<ScenarioResult> {
    if !r.depth_positive() {
        return Err(AlgebraError::DepthZero);
    }
    let mut out = ScenarioResult::new("regular_characterization", inputs(r, None));
    let dim = r.dimension(cfg.cap);
    let mu = r.embedding_dimension() as u64;
    let dim_certified = dim.confidence == Confidence::Certified;
    let regular = mu == dim.value;
    out.assert("regular_computed", true, dim_certified, format!("mu(m) = {}, dim = {}, regular = {}", mu, dim.value, regular));

    let dseq = r.is_d_sequence(&r.variables())?;
    out.assert("d_sequence_implies_regular", !dseq || regular, dim_certified, format!("variables form a d-sequence: {}", dseq));
    if mu as usize == r.nvars() {
        out.assert("regular_implies_d_sequence", !regular || dseq, dim_certified, String::new());
    }

    if r.mode() == Mode::Graded {
        let reg = blowup::rees_ring_regularity(r)?;
        out.assert("regular_iff_reg_zero", regular == (reg == 0), true, format!("reg R(m) = {}", reg));
    }

    let mut rng = dao::trial_rng(cfg.seed, 10);
    let mut d3s = Vec::new();
    let mut certified = dim_certified;
    for _ in 0..samples {
        let q = dao::sample_minimal_reduction(r, &mut rng, cfg)?;
        let d3 = dao::dao_d3(r, &q.ideal, cfg)?;
        certified &= d3.certificate.is_certified();
        d3s.push(d3.value);
    }
    let ok = if regular { d3s.iter().all(|&v| v == 0) } else { d3s.iter().all(|&v| v > 0) };
    out.assert("regular_iff_d3_zero", ok, certified, format!("sampled d3 = {:?}", d3s));
    Ok(out)
}

/// `widetilde(m^{k+1}) : m = widetilde(m^k)` where the closures come from the descent table,
/// cross-checked against the chain `A^{j+1} : A^j` for each `m^k`.
pub fn check_rr_recursion<F: Field>(r: &Arc<PresentedRing<F>>, cfg: &DaoConfig) -> Result<ScenarioResult> {
    let mut out = ScenarioResult::new("rr_recursion", inputs(r, None));
    let table = dao::rr_powers_of_m(r, cfg)?;
    let m = r.max_ideal();
    let certified = table.certificate.is_certified();
    for k in 1..table.top {
        let up = table.closure(k + 1).unwrap().colon(&m);
        out.assert(format!("recursion_k{}", k), up.equals(table.closure(k).unwrap()), certified, String::new());
    }
    for k in 1..=table.top {
        let (chain, cert) = dao::ratliff_rush(&r.max_ideal_power(k), cfg.window, cfg.cap)?;
        let stable = matches!(cert, Certificate::CapLimited { stable: true, .. });
        out.assert(format!("chain_agrees_k{}", k), chain.equals(table.closure(k).unwrap()), certified && stable, String::new());
    }
    Ok(out)
}

/// Fixed examples with known values.
pub fn reproduce_known_examples<F: Field>(field: F, cfg: &DaoConfig) -> Result<ScenarioResult> {
    let mut out = ScenarioResult::new("known_examples", vec![String::from("fixed example list")]);
    let plane = PresentedRing::polynomial(field.clone(), names(&["x", "y"]), Mode::Graded)?;
    let reg_ring = blowup::rees_ring_regularity(&plane)?;
    out.assert("plane_reg_rees_ring", reg_ring == 0, true, format!("reg R(m) = {}", reg_ring));
    for a in 2..=4u32 {
        let i = diagonal_ideal(&plane, a)?;
        let d3 = dao::dao_d3(&plane, &i, cfg)?;
        out.assert(format!("diagonal_a{}_d3", a), d3.value == a as u64 - 1, true, format!("d3 = {}", d3.value));
        let reg = blowup::rees_regularity(&plane, &i)?;
        out.assert(format!("diagonal_a{}_reg", a), reg == a as i32 - 1, true, format!("reg R(m, I) = {}", reg));
    }
    for k in 1..=4u32 {
        let d3 = dao::dao_d3(&plane, &plane.max_ideal_power(k), cfg)?;
        out.assert(format!("power_k{}_d3", k), d3.value == 0, true, format!("d3 = {}", d3.value));
    }
    let seven = seven_variable_ring(field)?;
    let local_cfg = DaoConfig { cap: 10, ..*cfg };
    out.absorb("seven_variable", check_seven_variable(&seven, 0, &local_cfg)?);
    Ok(out)
}

/// `s(m) = 3` with `x1` in the closure of `m^2`, and `d3 = max{r_I, 2}` on `samples`
/// sampled minimal reductions.
pub fn check_seven_variable<F: Field>(r: &Arc<PresentedRing<F>>, samples: u32, cfg: &DaoConfig) -> Result<ScenarioResult> {
    let mut out = ScenarioResult::new("seven_variable", inputs(r, None));
    let table = dao::rr_powers_of_m(r, cfg)?;
    let certified = table.certificate.is_certified();
    let s = table.s_of_m();
    out.assert("s_of_m", s == 3, certified, format!("s(m) = {} ({:?})", s, table.certificate));
    let x1 = r.ring().var(0);
    let in_closure = table.closure(2).is_some_and(|c| c.contains(&x1));
    let in_square = r.max_ideal_power(2).contains(&x1);
    out.assert("x1_witness", in_closure && !in_square, certified, String::from("x1 in the closure of m^2, not in m^2"));
    let third = table.closure(3).is_some_and(|c| c.equals(&r.max_ideal_power(3)));
    out.assert("closure_m3_trivial", third, certified, String::new());
    let stable = matches!(table.certificate, Certificate::Certified | Certificate::CapLimited { stable: true, .. });
    out.assert("window_stable", stable, certified, format!("{:?}", table.certificate));
    if samples > 0 {
        out.absorb("reductions", explore_reductions(r, samples, 20, cfg)?.0);
    }
    Ok(out)
}

/// Family of rings sampled by the explorer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// One random form (graded) or a random polynomial of order `d` (local).
    Hypersurface,
    /// `n - dim` random forms.
    CompleteIntersection,
    /// Pure powers of some of the variables.
    MonomialQuotient,
    /// A random quadric: minimal multiplicity.
    QuadricCone,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Hypersurface => "hypersurface",
            FamilyKind::CompleteIntersection => "complete_intersection",
            FamilyKind::MonomialQuotient => "monomial_quotient",
            FamilyKind::QuadricCone => "quadric_cone",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "hypersurface" => Some(FamilyKind::Hypersurface),
            "complete_intersection" | "ci" => Some(FamilyKind::CompleteIntersection),
            "monomial_quotient" | "monomial" => Some(FamilyKind::MonomialQuotient),
            "quadric_cone" | "quadric" => Some(FamilyKind::QuadricCone),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyConfig {
    pub kind: FamilyKind,
    pub min_vars: usize,
    pub max_vars: usize,
    pub min_degree: u32,
    pub max_degree: u32,
    /// Smallest Krull dimension accepted.
    pub min_dim: usize,
    pub trials: u32,
    /// Minimal reductions sampled per ring.
    pub reductions: u32,
    pub seed: u64,
    pub mode: Mode,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        FamilyConfig {
            kind: FamilyKind::Hypersurface,
            min_vars: 3,
            max_vars: 3,
            min_degree: 2,
            max_degree: 3,
            min_dim: 2,
            trials: 10,
            reductions: 1,
            seed: 0,
            mode: Mode::Graded,
        }
    }
}

impl FamilyConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(AlgebraError::InvalidArgument(String::from(m)));
        if self.min_vars == 0 || self.min_vars > self.max_vars {
            return bad("variable range is empty");
        }
        if self.min_degree < 2 || self.min_degree > self.max_degree {
            return bad("degree range must lie in [2, ..]");
        }
        if self.min_dim >= self.max_vars {
            return bad("minimum dimension must be below the variable count");
        }
        if self.max_vars > 8 {
            return bad("at most 8 variables");
        }
        Ok(())
    }
}

/// Variable names `x1..xn`.
pub fn indexed_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{}", i)).collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `(x^a, y^a)` in a ring whose first two variables are `x, y`.
pub fn diagonal_ideal<F: Field>(r: &Arc<PresentedRing<F>>, a: u32) -> Result<IdealHandle<F>> {
    let p = r.ring();
    r.ideal(vec![p.pow(&p.var(0), a), p.pow(&p.var(1), a)])
}

/// The three-dimensional local ring in seven variables with `s(m) = 3`.
pub fn seven_variable_ring<F: Field>(field: F) -> Result<Arc<PresentedRing<F>>> {
    let names = indexed_names(7);
    let p = PolyRing::new(field.clone(), names.clone(), MonomialOrder::DegRevLex);
    let x = |i: usize| p.var(i - 1);
    let j = vec![
        p.pow(&x(1), 2),
        p.mul(&x(1), &x(2)),
        p.mul(&x(1), &x(3)),
        p.mul(&x(1), &x(4)),
        p.mul(&x(2), &x(3)),
        p.mul(&x(2), &x(4)),
        p.mul(&x(3), &x(4)),
        p.sub(&p.pow(&x(2), 3), &p.mul(&x(1), &x(5))),
        p.sub(&p.pow(&x(3), 3), &p.mul(&x(1), &x(6))),
        p.sub(&p.pow(&x(4), 3), &p.mul(&x(1), &x(7))),
    ];
    PresentedRing::new(field, names, j, Mode::Local)
}

/// Random polynomial whose terms have degrees in `[lo, hi]`, every monomial used.
fn random_poly_in_degrees<F: Field, R: Rng + ?Sized>(p: &PolyRing<F>, rng: &mut R, lo: u32, hi: u32) -> Polynomial<F> {
    let mut acc = p.zero();
    for d in lo..=hi {
        acc = p.add(&acc, &p.random_form(rng, d));
    }
    acc
}

/// Draws one ring of the family; `None` on a degenerate draw.
pub fn sample_ring<F: Field, R: Rng + ?Sized>(field: &F, cfg: &FamilyConfig, rng: &mut R) -> Result<Option<Arc<PresentedRing<F>>>> {
    let n = rng.gen_range(cfg.min_vars..=cfg.max_vars);
    let names = indexed_names(n);
    let p = PolyRing::new(field.clone(), names.clone(), MonomialOrder::DegRevLex);
    let local = cfg.mode == Mode::Local;
    let deg = |rng: &mut R| rng.gen_range(cfg.min_degree..=cfg.max_degree);
    let codim = match cfg.kind {
        FamilyKind::Hypersurface | FamilyKind::QuadricCone => 1,
        FamilyKind::CompleteIntersection | FamilyKind::MonomialQuotient => {
            if n <= cfg.min_dim {
                return Ok(None);
            }
            rng.gen_range(1..=n - cfg.min_dim)
        }
    };
    if n < cfg.min_dim + codim {
        return Ok(None);
    }
    let mut j = Vec::with_capacity(codim);
    for k in 0..codim {
        let g = match cfg.kind {
            FamilyKind::QuadricCone => {
                if local {
                    random_poly_in_degrees(&p, rng, 2, 3)
                } else {
                    p.random_form(rng, 2)
                }
            }
            FamilyKind::MonomialQuotient => p.pow(&p.var(k), deg(rng)),
            _ => {
                let d = deg(rng);
                if local {
                    random_poly_in_degrees(&p, rng, d, d + 1)
                } else {
                    p.random_form(rng, d)
                }
            }
        };
        if g.is_zero() {
            return Ok(None);
        }
        j.push(g);
    }
    let r = match PresentedRing::new(field.clone(), names, j, cfg.mode) {
        Ok(r) => r,
        Err(AlgebraError::TrivialRing) => return Ok(None),
        Err(e) => return Err(e),
    };
    let dim = r.dimension(12);
    if (dim.value as usize) < cfg.min_dim || (dim.value as usize) != n - codim || !r.depth_positive() {
        return Ok(None);
    }
    Ok(Some(r))
}

/// A conjecture counterexample candidate, archived for review.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anomaly {
    pub trial: u32,
    pub seed: u64,
    pub ring: String,
    pub reduction: String,
    pub d3: u64,
    pub r_i: u64,
    pub s_of_m: u64,
    pub minimal_multiplicity: bool,
    pub field: String,
    pub rerun: String,
}

/// Samples minimal reductions of `r` and compares `d3` with `r_I` and `max{r_I, s(m) - 1}`.
pub fn explore_reductions<F: Field>(
    r: &Arc<PresentedRing<F>>,
    samples: u32,
    stream: u64,
    cfg: &DaoConfig,
) -> Result<(ScenarioResult, Vec<(IdealHandle<F>, u64, u64)>)> {
    let mut out = ScenarioResult::new("reductions", inputs(r, None));
    let s = dao::s_of_m(r, cfg)?;
    let mut rng = dao::trial_rng(cfg.seed, stream);
    let mut found = Vec::new();
    for t in 0..samples {
        let q = dao::sample_minimal_reduction(r, &mut rng, cfg)?;
        let d3 = dao::dao_d3(r, &q.ideal, cfg)?;
        let rhs = q.reduction_number.max(s.value.saturating_sub(1));
        let certified = d3.certificate.is_certified() && s.certificate.is_certified();
        out.assert(
            format!("identity_{}", t),
            d3.value == rhs,
            certified,
            format!("d3 = {}, r_I = {}, s(m) = {}", d3.value, q.reduction_number, s.value),
        );
        found.push((q.ideal, d3.value, q.reduction_number));
    }
    Ok((out, found))
}

/// Samples rings of a family and compares `d3` with `r_I` on sampled minimal reductions.
pub fn explore_conjecture<F: Field>(field: F, fam: &FamilyConfig, cfg: &DaoConfig) -> Result<(ScenarioResult, Vec<Anomaly>)> {
    fam.validate()?;
    let mut out = ScenarioResult::new(
        "explore_conjecture",
        vec![format!(
            "family={} vars={}..{} degrees={}..{} trials={} seed={} mode={}",
            fam.kind.name(),
            fam.min_vars,
            fam.max_vars,
            fam.min_degree,
            fam.max_degree,
            fam.trials,
            fam.seed,
            fam.mode.name()
        )],
    );
    let mut anomalies = Vec::new();
    const RESAMPLES: u32 = 20;
    for trial in 0..fam.trials {
        let mut rng = dao::trial_rng(fam.seed, 1000 + trial as u64);
        let mut ring = None;
        for _ in 0..RESAMPLES {
            if let Some(r) = sample_ring(&field, fam, &mut rng)? {
                ring = Some(r);
                break;
            }
        }
        let Some(r) = ring else {
            out.evidence(format!("trial_{}", trial), "no admissible ring drawn");
            continue;
        };
        let trial_cfg = DaoConfig { seed: fam.seed.wrapping_add(trial as u64), ..*cfg };
        let (ident, found) = explore_reductions(&r, fam.reductions.max(1), 2000 + trial as u64, &trial_cfg)?;
        out.absorb(&format!("trial_{}", trial), ident);
        let s = dao::s_of_m(&r, &trial_cfg)?;
        let (minmult, _) = r.has_minimal_multiplicity(trial_cfg.cap);
        for (q, d3, ri) in found {
            let name = format!("trial_{}.conjecture", trial);
            let detail = format!("{} | I = {} | d3 = {}, r_I = {}, s(m) = {}", r.display(), q.display(), d3, ri, s.value);
            if fam.mode == Mode::Graded {
                out.assert(name, d3 == ri, s.certificate.is_certified(), detail);
            } else {
                out.evidence(name, detail);
            }
            if d3 != ri {
                anomalies.push(Anomaly {
                    trial,
                    seed: fam.seed,
                    ring: r.display(),
                    reduction: q.display(),
                    d3,
                    r_i: ri,
                    s_of_m: s.value,
                    minimal_multiplicity: minmult,
                    field: r.field().name(),
                    rerun: format!("daolab explore <config> --seed {} --field Q", fam.seed),
                });
            }
        }
    }
    Ok((out, anomalies))
}
