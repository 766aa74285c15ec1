//! Fullness predicates, Dao numbers, Ratliff-Rush closures, `s(m)` and reductions of `m`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blowup;
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::{Confidence, IdealHandle, Mode, PresentedRing};

/// Runtime knobs shared by every invariant computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DaoConfig {
    /// Random linear forms tried per existential search.
    pub trials: u32,
    /// Largest power of `m` used by local-mode scans.
    pub cap: u32,
    /// Consecutive agreeing steps required before a local scan is called stable.
    pub window: u32,
    /// Extra powers past `d3` in which m-fullness witnesses are searched.
    pub probe: u32,
    pub seed: u64,
}

impl Default for DaoConfig {
    fn default() -> Self {
        DaoConfig { trials: 8, cap: 12, window: 3, probe: 2, seed: 0 }
    }
}

/// Deterministic generator for stream `stream` of run `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Answer {
    Yes,
    No,
    ProbablyNo,
    Unknown,
}

impl Answer {
    pub fn name(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::ProbablyNo => "probably_no",
            Answer::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Certificate {
    Certified,
    Probabilistic { trials: u32 },
    /// A scan bounded by `cap`; `stable` records whether the last `window` steps agreed.
    CapLimited { cap: u32, window: u32, stable: bool },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Certificate::Certified => "certified",
            Certificate::Probabilistic { .. } => "probabilistic",
            Certificate::CapLimited { .. } => "cap_limited",
        }
    }

    /// The less trustworthy of the two.
    pub fn weakest(self, other: Certificate) -> Certificate {
        fn rank(c: &Certificate) -> u8 {
            match c {
                Certificate::Certified => 0,
                Certificate::Probabilistic { .. } => 1,
                Certificate::CapLimited { stable: true, .. } => 2,
                Certificate::CapLimited { stable: false, .. } => 3,
            }
        }
        if rank(&other) > rank(&self) {
            other
        } else {
            self
        }
    }
}

/// Outcome of a yes/no question, with a witness element for existential yeses.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<F: Field> {
    pub answer: Answer,
    pub witness: Option<Polynomial<F>>,
    pub certificate: Certificate,
}

impl<F: Field> Verdict<F> {
    fn certified(yes: bool) -> Self {
        Verdict { answer: if yes { Answer::Yes } else { Answer::No }, witness: None, certificate: Certificate::Certified }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

/// A natural-number invariant and how far it can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counted {
    pub value: u64,
    pub certificate: Certificate,
}

fn require_proper<F: Field>(a: &IdealHandle<F>) -> Result<()> {
    if a.is_unit() {
        return Err(AlgebraError::DegenerateIdeal("unit"));
    }
    Ok(())
}

fn require_dao_input<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>) -> Result<()> {
    if i.is_unit() {
        return Err(AlgebraError::DegenerateIdeal("unit"));
    }
    if i.is_zero() {
        return Err(AlgebraError::DegenerateIdeal("zero"));
    }
    if !r.depth_positive() {
        return Err(AlgebraError::DepthZero);
    }
    Ok(())
}

/// Random linear form outside `m^2` (as an element of `R`).
fn draw_general_element<F: Field, R: Rng + ?Sized>(r: &Arc<PresentedRing<F>>, rng: &mut R) -> Result<Polynomial<F>> {
    let m2 = r.max_ideal_power(2);
    const ATTEMPTS: u32 = 32;
    for _ in 0..ATTEMPTS {
        let x = r.ring().random_linear_form(rng);
        if !m2.contains(&x) {
            return Ok(x);
        }
    }
    Err(AlgebraError::RetriesExhausted { attempts: ATTEMPTS })
}

/// `A m : m = A`.
pub fn is_weakly_m_full<F: Field>(a: &IdealHandle<F>) -> Result<Verdict<F>> {
    require_proper(a)?;
    let m = a.ring().max_ideal();
    Ok(Verdict::certified(a.product(&m).colon(&m).equals(a)))
}

/// `A m : x = A` for some `x ∈ m \ m^2`, searched over `trials` random linear forms.
pub fn is_m_full<F: Field, R: Rng + ?Sized>(a: &IdealHandle<F>, trials: u32, rng: &mut R) -> Result<Verdict<F>> {
    require_proper(a)?;
    let r = a.ring();
    let am = a.product(&r.max_ideal());
    // an m-full ideal is weakly m-full, so a failure there is a certified no
    if !am.colon(&r.max_ideal()).equals(a) {
        return Ok(Verdict::certified(false));
    }
    for _ in 0..trials.max(1) {
        let x = draw_general_element(r, rng)?;
        let xi = r.ideal(alloc::vec![x.clone()])?;
        if am.colon(&xi).equals(a) {
            return Ok(Verdict { answer: Answer::Yes, witness: Some(x), certificate: Certificate::Certified });
        }
    }
    Ok(Verdict { answer: Answer::ProbablyNo, witness: None, certificate: Certificate::Probabilistic { trials } })
}

/// `A : x = A : m` for some `x ∈ m \ m^2`.
pub fn is_full<F: Field, R: Rng + ?Sized>(a: &IdealHandle<F>, trials: u32, rng: &mut R) -> Result<Verdict<F>> {
    require_proper(a)?;
    let r = a.ring();
    let am = a.colon(&r.max_ideal());
    for _ in 0..trials.max(1) {
        let x = draw_general_element(r, rng)?;
        let xi = r.ideal(alloc::vec![x.clone()])?;
        if a.colon(&xi).equals(&am) {
            return Ok(Verdict { answer: Answer::Yes, witness: Some(x), certificate: Certificate::Certified });
        }
    }
    Ok(Verdict { answer: Answer::ProbablyNo, witness: None, certificate: Certificate::Probabilistic { trials } })
}

/// Size of a Dao component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentSize {
    Exact(u64),
    /// Nonzero, but its length is not computable with the handles at hand (local mode).
    Positive,
}

impl ComponentSize {
    pub fn is_zero(self) -> bool {
        self == ComponentSize::Exact(0)
    }
}

/// `I m^k`.
fn product_with_power<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, k: u32) -> IdealHandle<F> {
    if k == 0 {
        return i.clone();
    }
    i.product(&r.max_ideal_power(k))
}

/// `dim_K (I m^{k+1} : m) / I m^k`.
pub fn dao_component_dim<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, k: u32) -> Result<ComponentSize> {
    let m = r.max_ideal();
    let imk = product_with_power(r, i, k);
    let sat = imk.product(&m).colon(&m);
    if let Some(d) = sat.quotient_dim(&imk) {
        return Ok(ComponentSize::Exact(d));
    }
    Ok(if sat.equals(&imk) { ComponentSize::Exact(0) } else { ComponentSize::Positive })
}

fn weakly_full_at<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, k: u32) -> bool {
    let m = r.max_ideal();
    let imk = product_with_power(r, i, k);
    imk.product(&m).colon(&m).equals(&imk)
}

/// `d3` with the data behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D3Result {
    pub value: u64,
    pub certificate: Certificate,
    /// Powers `k` where `I m^k` is not weakly m-full.
    pub failing: Vec<u32>,
    /// `reg R(m, I)` (graded mode), the scan's termination bound.
    pub bound: Option<i32>,
    /// Highest `k` examined.
    pub scanned_to: u32,
}

/// The least `t` with `I m^k` weakly m-full for all `k >= t`.
pub fn dao_d3<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<D3Result> {
    require_dao_input(r, i)?;
    match r.mode() {
        Mode::Graded => {
            let u = blowup::rees_regularity(r, i)?;
            let top = u.max(0) as u32;
            let failing: Vec<u32> = (0..top).filter(|&k| !weakly_full_at(r, i, k)).collect();
            // the bound itself must pass; anything else would contradict d3 <= reg R(m, I)
            if !weakly_full_at(r, i, top) {
                return Err(AlgebraError::Inconsistent(alloc::format!(
                    "I m^{} is not weakly m-full although reg R(m, I) = {}",
                    top,
                    u
                )));
            }
            let value = failing.last().map_or(0, |&k| k as u64 + 1);
            Ok(D3Result { value, certificate: Certificate::Certified, failing, bound: Some(u), scanned_to: top })
        }
        Mode::Local => {
            let cap = cfg.cap;
            let failing: Vec<u32> = (0..=cap).filter(|&k| !weakly_full_at(r, i, k)).collect();
            let value = failing.last().map_or(0, |&k| k as u64 + 1);
            let stable = value + cfg.window as u64 <= cap as u64 + 1;
            Ok(D3Result {
                value,
                certificate: Certificate::CapLimited { cap, window: cfg.window, stable },
                failing,
                bound: None,
                scanned_to: cap,
            })
        }
    }
}

/// `d1` together with the m-fullness witnesses found by an independent scan.
#[derive(Clone, Debug, PartialEq)]
pub struct D1Result<F: Field> {
    pub value: u64,
    pub certificate: Certificate,
    /// Result of the witness scan over `k = 0..=d3 + probe`.
    pub scan_value: u64,
    pub witnesses: Vec<(u32, Polynomial<F>)>,
}

/// `d1`: reported as `d3` and checked by searching m-fullness witnesses for `k <= d3 + probe`.
pub fn dao_d1<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, d3: &D3Result, cfg: &DaoConfig) -> Result<D1Result<F>> {
    require_dao_input(r, i)?;
    let mut rng = trial_rng(cfg.seed, 1);
    let top = d3.value as u32 + cfg.probe;
    let mut witnesses = Vec::new();
    let mut last_missing: Option<u32> = None;
    let mut cert = d3.certificate;
    for k in 0..=top {
        let v = is_m_full(&product_with_power(r, i, k), cfg.trials, &mut rng)?;
        match v.witness {
            Some(x) => witnesses.push((k, x)),
            None => {
                last_missing = Some(k);
                cert = cert.weakest(v.certificate);
            }
        }
    }
    let scan_value = last_missing.map_or(0, |k| k as u64 + 1);
    Ok(D1Result { value: d3.value, certificate: cert, scan_value, witnesses })
}

/// `d2`: the smallest `t <= d1` such that `I m^k` has a fullness witness for every `k ∈ [t, d1]`.
pub fn dao_d2<F: Field>(
    r: &Arc<PresentedRing<F>>,
    i: &IdealHandle<F>,
    d1: u64,
    cfg: &DaoConfig,
) -> Result<(Counted, Vec<(u32, Polynomial<F>)>)> {
    require_dao_input(r, i)?;
    let mut rng = trial_rng(cfg.seed, 2);
    let mut witnesses = Vec::new();
    let mut t = 0u64;
    let mut certificate = Certificate::Certified;
    for k in (0..=d1 as u32).rev() {
        let v = is_full(&product_with_power(r, i, k), cfg.trials, &mut rng)?;
        match v.witness {
            Some(x) => witnesses.push((k, x)),
            None => {
                t = k as u64 + 1;
                certificate = v.certificate;
                break;
            }
        }
    }
    witnesses.reverse();
    Ok((Counted { value: t, certificate }, witnesses))
}

/// `(0 : A) = 0`, i.e. `A` contains a non-zerodivisor.
pub fn has_regular_element<F: Field>(a: &IdealHandle<F>) -> bool {
    let zero = a.ring().zero_ideal();
    zero.colon(a).equals(&zero)
}

/// Ratliff-Rush closure by the chain `A^{j+1} : A^j`, stopped after `window` equal terms
/// or at `cap`.
pub fn ratliff_rush<F: Field>(a: &IdealHandle<F>, window: u32, cap: u32) -> Result<(IdealHandle<F>, Certificate)> {
    if !has_regular_element(a) {
        return Err(AlgebraError::NoRegularElement);
    }
    let window = window.max(1);
    let mut power = a.clone();
    let mut prev: Option<IdealHandle<F>> = None;
    let mut run = 0u32;
    for _ in 1..=cap.max(1) {
        let next_power = power.product(a);
        let c = next_power.colon(&power).sum(a);
        match &prev {
            Some(p) if p.equals(&c) => run += 1,
            _ => run = 1,
        }
        prev = Some(c);
        if run >= window {
            return Ok((prev.unwrap(), Certificate::CapLimited { cap, window, stable: true }));
        }
        power = next_power;
    }
    Ok((prev.unwrap(), Certificate::CapLimited { cap, window, stable: false }))
}

/// Ratliff-Rush closures of the powers of `m`.
#[derive(Clone, Debug)]
pub struct RrTable<F: Field> {
    /// Entry `k - 1` is the closure of `m^k`, for `k = 1..=top`.
    pub closures: Vec<IdealHandle<F>>,
    /// Whether the closure differs from `m^k`, same indexing.
    pub strict: Vec<bool>,
    pub top: u32,
    pub certificate: Certificate,
}

impl<F: Field> RrTable<F> {
    pub fn closure(&self, k: u32) -> Option<&IdealHandle<F>> {
        if k == 0 {
            return None;
        }
        self.closures.get(k as usize - 1)
    }

    /// `s(m)`: one more than the largest `k` with a strict closure, or 1.
    pub fn s_of_m(&self) -> u64 {
        self.strict.iter().rposition(|&b| b).map_or(1, |k| k as u64 + 2)
    }
}

/// Descends from `m^N` by `widetilde(m^k) = widetilde(m^{k+1}) : m`.
///
/// Graded mode takes `N = max(1, reg R(m))`, where `widetilde(m^N) = m^N` is known.
/// Local mode starts at `N = cap` and records whether the top `window` closures are trivial.
pub fn rr_powers_of_m<F: Field>(r: &Arc<PresentedRing<F>>, cfg: &DaoConfig) -> Result<RrTable<F>> {
    if !r.depth_positive() {
        return Err(AlgebraError::DepthZero);
    }
    let (top, graded) = match r.mode() {
        Mode::Graded => ((blowup::rees_ring_regularity(r)?.max(1)) as u32, true),
        Mode::Local => (cfg.cap.max(2), false),
    };
    let m = r.max_ideal();
    let mut closures: Vec<IdealHandle<F>> = Vec::with_capacity(top as usize);
    let mut strict: Vec<bool> = Vec::with_capacity(top as usize);
    let mut current = r.max_ideal_power(top);
    closures.push(current.clone());
    strict.push(false);
    for k in (1..top).rev() {
        current = current.colon(&m);
        let mk = r.max_ideal_power(k);
        strict.push(!current.equals(&mk));
        closures.push(current.clone());
    }
    closures.reverse();
    strict.reverse();
    let certificate = if graded {
        Certificate::Certified
    } else {
        let w = cfg.window.min(top) as usize;
        let stable = strict[strict.len() - w..].iter().all(|&b| !b);
        Certificate::CapLimited { cap: top, window: cfg.window, stable }
    };
    Ok(RrTable { closures, strict, top, certificate })
}

pub fn s_of_m<F: Field>(r: &Arc<PresentedRing<F>>, cfg: &DaoConfig) -> Result<Counted> {
    let t = rr_powers_of_m(r, cfg)?;
    Ok(Counted { value: t.s_of_m(), certificate: t.certificate })
}

/// Whether `I` is a reduction of `m`, and `r_I(m)` when it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub answer: Answer,
    pub reduction_number: Option<u64>,
    pub certificate: Certificate,
    pub scanned_to: u32,
}

/// Scans `I m^k = m^{k+1}`; the bound is `max(1, reg R(m))` in graded mode and `cap` locally.
pub fn is_reduction<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<ReductionResult> {
    let m = r.max_ideal();
    if !m.contains_ideal(i) {
        return Err(AlgebraError::NotInMaximalIdeal);
    }
    let (bound, local) = match r.mode() {
        Mode::Graded => (blowup::rees_ring_regularity(r)?.max(1) as u32, false),
        Mode::Local => (cfg.cap, true),
    };
    let mut imk = i.clone();
    let mut mk1 = m.clone();
    for k in 0..=bound {
        if imk.equals(&mk1) {
            return Ok(ReductionResult {
                answer: Answer::Yes,
                reduction_number: Some(k as u64),
                certificate: Certificate::Certified,
                scanned_to: k,
            });
        }
        imk = imk.product(&m);
        mk1 = r.max_ideal_power(k + 2);
    }
    if local {
        Ok(ReductionResult {
            answer: Answer::Unknown,
            reduction_number: None,
            certificate: Certificate::CapLimited { cap: bound, window: cfg.window, stable: false },
            scanned_to: bound,
        })
    } else {
        Ok(ReductionResult { answer: Answer::No, reduction_number: None, certificate: Certificate::Certified, scanned_to: bound })
    }
}

pub fn reduction_number<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<u64> {
    is_reduction(r, i, cfg)?.reduction_number.ok_or(AlgebraError::NotAReduction)
}

/// A sampled minimal reduction of `m`.
#[derive(Clone, Debug)]
pub struct SampledReduction<F: Field> {
    pub ideal: IdealHandle<F>,
    pub reduction_number: u64,
    pub attempts: u32,
}

/// `dim R` random linear forms, redrawn until they form a reduction of `m`.
pub fn sample_minimal_reduction<F: Field, R: Rng + ?Sized>(
    r: &Arc<PresentedRing<F>>,
    rng: &mut R,
    cfg: &DaoConfig,
) -> Result<SampledReduction<F>> {
    let dim = r.dimension(cfg.cap);
    if dim.confidence == Confidence::Uncertified {
        return Err(AlgebraError::CapExhausted { cap: cfg.cap });
    }
    if dim.value == 0 {
        return Err(AlgebraError::InvalidArgument(String::from("a zero-dimensional ring has no parameter ideal")));
    }
    let attempts = cfg.trials.max(1);
    for attempt in 1..=attempts {
        let gens: Vec<Polynomial<F>> = (0..dim.value).map(|_| r.ring().random_linear_form(rng)).collect();
        let ideal = r.ideal(gens)?;
        let red = is_reduction(r, &ideal, cfg)?;
        if let Some(k) = red.reduction_number {
            return Ok(SampledReduction { ideal, reduction_number: k, attempts: attempt });
        }
    }
    Err(AlgebraError::RetriesExhausted { attempts })
}

/// A named consistency check recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Every invariant of a pair `(R, I)`.
#[derive(Clone, Debug)]
pub struct InvariantReport<F: Field> {
    pub ring: String,
    pub ideal: String,
    pub mode: Mode,
    pub field: String,
    pub config: DaoConfig,
    pub depth_positive: bool,
    pub d1: D1Result<F>,
    pub d2: Counted,
    pub d2_witnesses: Vec<(u32, Polynomial<F>)>,
    pub d3: D3Result,
    pub s_of_m: Counted,
    pub reduction: ReductionResult,
    /// `(k, size of the k-th Dao component)` for `k = 0..=d3`.
    pub components: Vec<(u32, ComponentSize)>,
    /// `reg R(m)` (graded mode).
    pub rees_ring_regularity: Option<i32>,
    /// `reg R(m, I)` (graded mode).
    pub rees_regularity: Option<i32>,
    pub checks: Vec<Check>,
}

impl<F: Field> InvariantReport<F> {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// True when some value rests on a cap rather than a proof.
    pub fn has_cap_limited(&self) -> bool {
        let caps = [self.d1.certificate, self.d2.certificate, self.d3.certificate, self.s_of_m.certificate, self.reduction.certificate];
        caps.iter().any(|c| matches!(c, Certificate::CapLimited { .. }))
    }
}

/// Computes everything and records the relation checks.
pub fn invariant_report<F: Field>(r: &Arc<PresentedRing<F>>, i: &IdealHandle<F>, cfg: &DaoConfig) -> Result<InvariantReport<F>> {
    require_dao_input(r, i)?;
    let d3 = dao_d3(r, i, cfg)?;
    let d1 = dao_d1(r, i, &d3, cfg)?;
    let (d2, d2_witnesses) = dao_d2(r, i, d1.value, cfg)?;
    let s = s_of_m(r, cfg)?;
    let reduction = is_reduction(r, i, cfg)?;
    let mut components = Vec::new();
    for k in 0..=d3.value as u32 {
        components.push((k, dao_component_dim(r, i, k)?));
    }
    let (reg_ring, reg_i) = match r.mode() {
        Mode::Graded => (Some(blowup::rees_ring_regularity(r)?), d3.bound),
        Mode::Local => (None, None),
    };

    let mut checks = Vec::new();
    checks.push(Check {
        name: "d2_le_d1",
        passed: d2.value <= d1.value,
        detail: alloc::format!("d2 = {}, d1 = {}", d2.value, d1.value),
    });
    checks.push(Check {
        name: "d1_eq_d3",
        passed: d1.scan_value == d3.value,
        detail: alloc::format!("witness scan gives {}, d3 = {}", d1.scan_value, d3.value),
    });
    let vanish_ok = components.iter().all(|&(k, c)| c.is_zero() == !d3.failing.contains(&k));
    checks.push(Check {
        name: "components_match_scan",
        passed: vanish_ok,
        detail: String::from("Dao component k vanishes exactly when I m^k is weakly m-full"),
    });
    if let Some(u) = d3.bound {
        checks.push(Check {
            name: "d3_le_reg",
            passed: d3.value as i64 <= u as i64,
            detail: alloc::format!("d3 = {}, reg R(m, I) = {}", d3.value, u),
        });
    }
    if let (Some(a), Some(b)) = (reg_ring, reg_i) {
        let equal_needed = reduction.answer == Answer::Yes;
        checks.push(Check {
            name: "reg_monotone",
            passed: a <= b && (!equal_needed || a == b),
            detail: alloc::format!("reg R(m) = {}, reg R(m, I) = {}", a, b),
        });
    }
    if let Some(rn) = reduction.reduction_number {
        let rhs = rn.max(s.value.saturating_sub(1));
        checks.push(Check {
            name: "identity",
            passed: d3.value == rhs,
            detail: alloc::format!("d3 = {}, max(r_I, s - 1) = max({}, {})", d3.value, rn, s.value.saturating_sub(1)),
        });
    }

    Ok(InvariantReport {
        ring: r.display(),
        ideal: i.display(),
        mode: r.mode(),
        field: r.field().name(),
        config: *cfg,
        depth_positive: true,
        d1,
        d2,
        d2_witnesses,
        d3,
        s_of_m: s,
        reduction,
        components,
        rees_ring_regularity: reg_ring,
        rees_regularity: reg_i,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
    use alloc::string::ToString;
    use alloc::vec;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn plane() -> Arc<PresentedRing<Rationals>> {
        PresentedRing::polynomial(Rationals, names(&["x", "y"]), Mode::Graded).unwrap()
    }

    fn quadric() -> Arc<PresentedRing<Rationals>> {
        let p = PolyRing::new(Rationals, names(&["x", "y", "z"]), MonomialOrder::DegRevLex);
        let j = p.sub(&p.pow(&p.var(2), 2), &p.mul(&p.var(0), &p.var(1)));
        PresentedRing::new(Rationals, names(&["x", "y", "z"]), vec![j], Mode::Graded).unwrap()
    }

    #[test]
    fn fullness_predicates() {
        let r = plane();
        let p = r.ring();
        let mut rng = trial_rng(5, 0);
        let m2 = r.max_ideal_power(2);
        assert!(is_weakly_m_full(&m2).unwrap().is_yes());
        assert!(is_m_full(&m2, 8, &mut rng).unwrap().witness.is_some());
        let i = r.ideal(vec![p.pow(&p.var(0), 2), p.pow(&p.var(1), 2)]).unwrap();
        assert_eq!(is_weakly_m_full(&i).unwrap().answer, Answer::No);
        assert_eq!(is_m_full(&i, 8, &mut rng).unwrap().answer, Answer::No);
        assert!(is_m_full(&r.max_ideal(), 8, &mut rng).unwrap().is_yes());
        assert!(is_weakly_m_full(&r.unit_ideal()).is_err());
    }

    #[test]
    fn d3_of_diagonal_powers() {
        let r = plane();
        let p = r.ring();
        let cfg = DaoConfig::default();
        for a in 2..=4u32 {
            let i = r.ideal(vec![p.pow(&p.var(0), a), p.pow(&p.var(1), a)]).unwrap();
            let d3 = dao_d3(&r, &i, &cfg).unwrap();
            assert_eq!(d3.value, a as u64 - 1);
            assert_eq!(d3.bound, Some(a as i32 - 1));
        }
        assert_eq!(dao_d3(&r, &r.max_ideal(), &cfg).unwrap().value, 0);
    }

    #[test]
    fn component_dims() {
        let r = plane();
        let p = r.ring();
        let i = r.ideal(vec![p.pow(&p.var(0), 2), p.pow(&p.var(1), 2)]).unwrap();
        assert_eq!(dao_component_dim(&r, &i, 0).unwrap(), ComponentSize::Exact(1));
        assert_eq!(dao_component_dim(&r, &i, 1).unwrap(), ComponentSize::Exact(0));
        assert_eq!(dao_component_dim(&r, &r.max_ideal(), 2).unwrap(), ComponentSize::Exact(0));
    }

    #[test]
    fn ratliff_rush_of_a_gapped_power() {
        let r = plane();
        let p = r.ring();
        let (x, y) = (p.var(0), p.var(1));
        let a = r
            .ideal(vec![p.pow(&x, 4), p.mul(&p.pow(&x, 3), &y), p.mul(&x, &p.pow(&y, 3)), p.pow(&y, 4)])
            .unwrap();
        let (c, cert) = ratliff_rush(&a, 3, 12).unwrap();
        assert!(c.equals(&r.max_ideal_power(4)));
        assert!(matches!(cert, Certificate::CapLimited { stable: true, .. }));
        let (c, _) = ratliff_rush(&r.max_ideal(), 3, 12).unwrap();
        assert!(c.equals(&r.max_ideal()));
    }

    #[test]
    fn reductions_and_identity() {
        let q = quadric();
        let p = q.ring();
        let cfg = DaoConfig::default();
        let i = q.ideal(vec![p.var(0), p.var(1)]).unwrap();
        let red = is_reduction(&q, &i, &cfg).unwrap();
        assert_eq!((red.answer, red.reduction_number), (Answer::Yes, Some(1)));
        assert_eq!(s_of_m(&q, &cfg).unwrap().value, 1);
        assert_eq!(dao_d3(&q, &i, &cfg).unwrap().value, 1);
        let plane = plane();
        let pp = plane.ring();
        let i2 = plane.ideal(vec![pp.pow(&pp.var(0), 2), pp.pow(&pp.var(1), 2)]).unwrap();
        assert_eq!(is_reduction(&plane, &i2, &cfg).unwrap().answer, Answer::No);
    }

    #[test]
    fn report_relations() {
        let r = plane();
        let p = r.ring();
        let cfg = DaoConfig::default();
        let i = r.ideal(vec![p.pow(&p.var(0), 2), p.pow(&p.var(1), 2)]).unwrap();
        let rep = invariant_report(&r, &i, &cfg).unwrap();
        assert!(rep.all_checks_pass(), "{:?}", rep.checks);
        assert_eq!((rep.d3.value, rep.d1.value, rep.s_of_m.value), (1, 1, 1));
        assert!(rep.d2.value <= 1);
        assert_eq!(rep.rees_regularity, Some(1));
        let rep = invariant_report(&r, &r.max_ideal(), &cfg).unwrap();
        assert_eq!((rep.d3.value, rep.d1.value, rep.d2.value), (0, 0, 0));
        assert_eq!(rep.reduction.reduction_number, Some(0));
    }

    #[test]
    fn minimal_reduction_of_a_line_with_a_double_point() {
        let p = PolyRing::new(Rationals, names(&["x", "y"]), MonomialOrder::DegRevLex);
        let r = PresentedRing::new(Rationals, names(&["x", "y"]), vec![p.pow(&p.var(1), 2)], Mode::Graded).unwrap();
        let cfg = DaoConfig::default();
        let mut rng = trial_rng(3, 0);
        let s = sample_minimal_reduction(&r, &mut rng, &cfg).unwrap();
        assert_eq!(s.reduction_number, 1);
        assert_eq!(s.ideal.gens().len(), 1);
    }
}
