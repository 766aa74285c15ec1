//! Evaluation of session scripts: declarations build rings and ideals, commands
//! produce JSON records.

use std::sync::Arc;

use serde_json::{json, Value};

use daolab_core::blowup;
use daolab_core::dao::{self, DaoConfig};
use daolab_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use daolab_core::lab::{self, FamilyConfig, FamilyKind, Outcome, ScenarioResult};
use daolab_core::module::{GradedModulePresentation, Resolution};
use daolab_core::poly::{PolyRing, Polynomial};
use daolab_core::ring::{IdealHandle, Mode, PresentedRing};
use daolab_core::AlgebraError;

use crate::diag::{Diagnostic, Pos};
use crate::report;
use crate::syntax::{
    parse_field, print_statement, Command, Expr, FieldSpec, IdealDecl, Located, ModeSpec, RingDecl, SessionScript, Statement, Value as ArgValue,
    Verb,
};

/// Run-wide settings from the command line. `None` keeps the script's value or the default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Settings {
    pub seed: Option<u64>,
    pub trials: Option<u32>,
    pub cap: Option<u32>,
    /// Replaces the field of every ring declaration and explore statement.
    pub field: Option<FieldSpec>,
}

impl Settings {
    pub fn dao_config(&self) -> DaoConfig {
        let d = DaoConfig::default();
        DaoConfig {
            trials: self.trials.unwrap_or(d.trials),
            cap: self.cap.unwrap_or(d.cap),
            seed: self.seed.unwrap_or(d.seed),
            ..d
        }
    }

    pub fn to_json(&self) -> Value {
        let c = self.dao_config();
        let mut v = json!({
            "seed": c.seed,
            "trials": c.trials,
            "cap": c.cap,
            "window": c.window,
            "probe": c.probe,
            "default_field": format!("F{}", DEFAULT_PRIME),
            "default_mode": "graded",
        });
        if let Some(f) = self.field {
            v["field_override"] = json!(f.to_string());
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// Nothing failed, but some value rests on a cap or on random trials.
    Uncertified,
    Fail,
    /// The computation raised an error; carries the exit code it maps to.
    Error(i32),
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Uncertified => "uncertified",
            Status::Fail => "fail",
            Status::Error(_) => "error",
        }
    }

    fn of_outcome(o: Outcome) -> Status {
        match o {
            Outcome::Verified => Status::Pass,
            Outcome::Evidence => Status::Uncertified,
            Outcome::Failed => Status::Fail,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub value: Value,
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Run {
    pub records: Vec<Record>,
    pub anomalies: Vec<Value>,
}

impl Run {
    /// 1 on any failure, else the first error's code, else 3 when certification is
    /// demanded and something is uncertified, else 0.
    pub fn exit_code(&self, demand_certified: bool) -> i32 {
        if self.records.iter().any(|r| r.status == Status::Fail) {
            return 1;
        }
        if let Some(code) = self.records.iter().find_map(|r| match r.status {
            Status::Error(c) => Some(c),
            _ => None,
        }) {
            return code;
        }
        if demand_certified && self.records.iter().any(|r| r.status == Status::Uncertified) {
            return 3;
        }
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Compute,
    /// A scenario name, or `all` for the script's own verify statements.
    Verify(String),
    Explore,
    Resolve,
}

pub const IDEAL_SCENARIOS: [&str; 4] = ["main_inequality", "identity", "monotonicity", "socle"];
pub const RING_SCENARIOS: [&str; 3] = ["regular", "rr_recursion", "seven_variable"];
pub const GLOBAL_SCENARIOS: [&str; 1] = ["known_examples"];

/// Asserts invariant values given as options; only meaningful inside a script.
pub const EXPECT_KEYS: [&str; 7] = ["d1", "d2", "d3", "s_of_m", "r", "reg", "reg_ring"];

pub fn is_scenario(name: &str) -> bool {
    IDEAL_SCENARIOS.contains(&name) || RING_SCENARIOS.contains(&name) || GLOBAL_SCENARIOS.contains(&name)
}

#[derive(Clone, Debug)]
pub enum AnyRing {
    Q(Arc<PresentedRing<Rationals>>),
    P(Arc<PresentedRing<PrimeField>>),
}

#[derive(Clone, Debug)]
pub enum AnyIdeal {
    Q(IdealHandle<Rationals>),
    P(IdealHandle<PrimeField>),
}

impl AnyIdeal {
    fn ring(&self) -> AnyRing {
        match self {
            AnyIdeal::Q(i) => AnyRing::Q(i.ring().clone()),
            AnyIdeal::P(i) => AnyRing::P(i.ring().clone()),
        }
    }
}

struct Env {
    settings: Settings,
    rings: Vec<(String, AnyRing, Pos)>,
    ideals: Vec<(String, AnyIdeal, Pos)>,
}

enum Target {
    Ring(AnyRing),
    Ideal(String, AnyIdeal),
}

fn eval<F: Field>(p: &PolyRing<F>, e: &Expr, at: Pos, ring_name: &str) -> Result<Polynomial<F>, Diagnostic> {
    Ok(match e {
        Expr::Num(n, d) => {
            let c = p.field().from_ratio(n, d).ok_or_else(|| Diagnostic::new(at, format!("denominator {} vanishes in {}", d, p.field().name())))?;
            p.constant(c)
        }
        Expr::Var(v) => match p.names().iter().position(|n| *n == v.node) {
            Some(i) => p.var(i),
            None => return Err(Diagnostic::new(v.pos, format!("unknown variable `{}` in ring {}", v.node, ring_name))),
        },
        Expr::Neg(a) => p.neg(&eval(p, a, at, ring_name)?),
        Expr::Add(a, b) => p.add(&eval(p, a, at, ring_name)?, &eval(p, b, at, ring_name)?),
        Expr::Sub(a, b) => p.sub(&eval(p, a, at, ring_name)?, &eval(p, b, at, ring_name)?),
        Expr::Mul(a, b) => p.mul(&eval(p, a, at, ring_name)?, &eval(p, b, at, ring_name)?),
        Expr::Pow(a, k) => p.pow(&eval(p, a, at, ring_name)?, *k),
    })
}

/// Parses `text` as a polynomial of `p`.
pub fn parse_polynomial<F: Field>(p: &PolyRing<F>, text: &str) -> Result<Polynomial<F>, Diagnostic> {
    let e = crate::syntax::parse_expr(text)?;
    eval(p, &e, Pos { line: 1, col: 1 }, "the target ring")
}

fn build_ring<F: Field>(field: F, decl: &RingDecl, at: Pos) -> Result<Arc<PresentedRing<F>>, Diagnostic> {
    let p = PolyRing::new(field.clone(), decl.vars.clone(), daolab_core::monomial::MonomialOrder::DegRevLex);
    let rels = decl.relations.iter().map(|e| eval(&p, e, at, &decl.name)).collect::<Result<Vec<_>, _>>()?;
    let mode = match decl.mode {
        Some(ModeSpec::Local) => Mode::Local,
        _ => Mode::Graded,
    };
    PresentedRing::new(field, decl.vars.clone(), rels, mode).map_err(|e| Diagnostic::new(at, format!("ring {}: {}", decl.name, e)))
}

fn build_ideal<F: Field>(r: &Arc<PresentedRing<F>>, decl: &IdealDecl, at: Pos, ring_name: &str) -> Result<IdealHandle<F>, Diagnostic> {
    let gens = decl.gens.iter().map(|e| eval(r.ring(), e, at, ring_name)).collect::<Result<Vec<_>, _>>()?;
    let i = r.ideal(gens).map_err(|e| Diagnostic::new(at, format!("ideal {}: {}", decl.name, e)))?;
    Ok(match decl.power {
        Some(k) => i.power(k),
        None => i,
    })
}

fn error_record(e: &AlgebraError, line: usize, what: &str) -> Record {
    let code = match e {
        AlgebraError::Inconsistent(_) => 1,
        AlgebraError::CapExhausted { .. } => 3,
        _ => 2,
    };
    let status = if code == 1 { Status::Fail } else { Status::Error(code) };
    Record { value: json!({ "kind": "error", "statement": line, "command": what, "error": e.to_string(), "status": status.name() }), status }
}

fn finish(mut value: Value, status: Status, line: usize, what: &str) -> Record {
    if let Some(o) = value.as_object_mut() {
        o.insert("statement".into(), json!(line));
        o.insert("command".into(), json!(what));
        o.insert("status".into(), json!(status.name()));
    }
    Record { value, status }
}

fn scenario_record(s: &ScenarioResult, line: usize, what: &str) -> Record {
    finish(report::scenario(s), Status::of_outcome(s.outcome()), line, what)
}

macro_rules! on_ring {
    ($r:expr, $x:ident => $body:expr) => {
        match $r {
            AnyRing::Q($x) => $body,
            AnyRing::P($x) => $body,
        }
    };
}

macro_rules! on_ideal {
    ($i:expr, $x:ident => $body:expr) => {
        match $i {
            AnyIdeal::Q($x) => $body,
            AnyIdeal::P($x) => $body,
        }
    };
}

fn dao_report<F: Field>(i: &IdealHandle<F>, cfg: &DaoConfig) -> daolab_core::Result<(Value, Status)> {
    let r = i.ring();
    let rep = dao::invariant_report(r, i, cfg)?;
    let certified = [rep.d1.certificate, rep.d2.certificate, rep.d3.certificate, rep.s_of_m.certificate, rep.reduction.certificate]
        .iter()
        .all(|c| c.is_certified());
    let status = if !rep.all_checks_pass() {
        Status::Fail
    } else if certified {
        Status::Pass
    } else {
        Status::Uncertified
    };
    Ok((report::invariant_report(r, &rep), status))
}

fn rr_report<F: Field>(r: &Arc<PresentedRing<F>>, cfg: &DaoConfig) -> daolab_core::Result<(Value, Status)> {
    let t = dao::rr_powers_of_m(r, cfg)?;
    let status = if t.certificate.is_certified() { Status::Pass } else { Status::Uncertified };
    Ok((report::rr_table(r, &t), status))
}

fn reduction_report<F: Field>(i: &IdealHandle<F>, cfg: &DaoConfig) -> daolab_core::Result<(Value, Status)> {
    let r = i.ring();
    let red = dao::is_reduction(r, i, cfg)?;
    let status = if red.certificate.is_certified() { Status::Pass } else { Status::Uncertified };
    Ok((report::reduction_report(r, &i.display(), &red), status))
}

fn ring_report<F: Field>(r: &Arc<PresentedRing<F>>, cfg: &DaoConfig) -> daolab_core::Result<(Value, Status)> {
    let v = report::ring_report(r, cfg.cap)?;
    let certified = v["dimension"]["confidence"] == "certified" && v["multiplicity"]["confidence"] == "certified";
    Ok((v, if certified { Status::Pass } else { Status::Uncertified }))
}

fn require_graded<F: Field>(r: &PresentedRing<F>) -> daolab_core::Result<()> {
    if r.mode() != Mode::Graded {
        return Err(AlgebraError::WrongMode { operation: "resolve", required: "graded" });
    }
    Ok(())
}

/// `S/(J + I)` over the ambient polynomial ring, or the associated graded module over the Rees ring.
fn resolve_report<F: Field>(r: &Arc<PresentedRing<F>>, i: Option<&IdealHandle<F>>, assoc: bool, target: &str) -> daolab_core::Result<(Value, Status)> {
    require_graded(r)?;
    let (module, res) = if assoc {
        let unit = r.unit_ideal();
        let ideal = i.unwrap_or(&unit);
        (String::from("gr_m(I) over the Rees ring of m"), blowup::assoc_resolution(r, ideal)?)
    } else {
        let mut gens: Vec<Polynomial<F>> = r.defining().to_vec();
        if let Some(i) = i {
            if !i.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(i.display()));
            }
            gens.extend(i.gens().iter().cloned());
        }
        let pres = GradedModulePresentation::cyclic(r.ring().clone(), &gens)?;
        (String::from("S/(J + I) over the ambient polynomial ring"), Resolution::compute(&pres)?)
    };
    let v = report::resolution(target, &module, &res);
    let status = if res.hilbert_identity_holds() { Status::Pass } else { Status::Fail };
    Ok((v, status))
}

fn ideal_scenario<F: Field>(name: &str, i: &IdealHandle<F>, cfg: &DaoConfig) -> daolab_core::Result<ScenarioResult> {
    let r = i.ring();
    match name {
        "main_inequality" => lab::check_main_inequality(r, i, cfg),
        "identity" => lab::check_identity_theorem(r, i, cfg),
        "monotonicity" => lab::check_monotonicity(r, i, cfg),
        "socle" => lab::check_socle_and_exactness(r, i, cfg),
        _ => unreachable!("checked by the caller"),
    }
}

fn ring_scenario<F: Field>(name: &str, r: &Arc<PresentedRing<F>>, samples: u32, cfg: &DaoConfig) -> daolab_core::Result<ScenarioResult> {
    match name {
        "regular" => lab::check_regular_characterization(r, samples, cfg),
        "rr_recursion" => lab::check_rr_recursion(r, cfg),
        "seven_variable" => lab::check_seven_variable(r, samples, cfg),
        _ => unreachable!("checked by the caller"),
    }
}

fn expect_scenario<F: Field>(i: &IdealHandle<F>, wanted: &[(String, u64)], cfg: &DaoConfig) -> daolab_core::Result<ScenarioResult> {
    let r = i.ring();
    let rep = dao::invariant_report(r, i, cfg)?;
    let mut out = ScenarioResult { id: String::from("expect"), inputs: vec![r.display(), i.display()], claims: Vec::new() };
    for (key, want) in wanted {
        let (got, certified): (Option<i64>, bool) = match key.as_str() {
            "d1" => (Some(rep.d1.value as i64), rep.d1.certificate.is_certified()),
            "d2" => (Some(rep.d2.value as i64), rep.d2.certificate.is_certified()),
            "d3" => (Some(rep.d3.value as i64), rep.d3.certificate.is_certified()),
            "s_of_m" => (Some(rep.s_of_m.value as i64), rep.s_of_m.certificate.is_certified()),
            "r" => (rep.reduction.reduction_number.map(|v| v as i64), rep.reduction.certificate.is_certified()),
            "reg" => (rep.rees_regularity.map(i64::from), true),
            _ => (rep.rees_ring_regularity.map(i64::from), true),
        };
        let detail = match got {
            Some(g) => format!("expected {}, computed {}", want, g),
            None => format!("expected {}, not defined here", want),
        };
        out.assert(key.clone(), got == Some(*want as i64), certified, detail);
    }
    Ok(out)
}

fn explore_with<F: Field>(field: F, fam: &FamilyConfig, cfg: &DaoConfig) -> daolab_core::Result<(ScenarioResult, Vec<Value>)> {
    let (s, anomalies) = lab::explore_conjecture(field, fam, cfg)?;
    Ok((s, anomalies.iter().map(report::anomaly).collect()))
}

fn field_json(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => String::from("Q"),
        FieldSpec::Prime(p) => format!("F{}", p),
    }
}

impl Env {
    fn field(&self, declared: FieldSpec) -> FieldSpec {
        self.settings.field.unwrap_or(declared)
    }

    fn current_ring(&self) -> Option<&AnyRing> {
        self.rings.last().map(|r| &r.1)
    }

    fn lookup(&self, name: &Located<String>) -> Result<Target, Diagnostic> {
        if let Some((n, i, _)) = self.ideals.iter().rev().find(|e| e.0 == name.node) {
            return Ok(Target::Ideal(n.clone(), i.clone()));
        }
        if let Some((_, r, _)) = self.rings.iter().rev().find(|e| e.0 == name.node) {
            return Ok(Target::Ring(r.clone()));
        }
        Err(Diagnostic::new(name.pos, format!("`{}` is not a declared ring or ideal", name.node)))
    }

    fn last_ideal(&self, at: Pos) -> Result<(String, AnyIdeal), Diagnostic> {
        self.ideals.last().map(|(n, i, _)| (n.clone(), i.clone())).ok_or_else(|| Diagnostic::new(at, "no ideal declared before this command"))
    }

    fn declare_ring(&mut self, decl: &RingDecl, at: Pos) -> Result<(), Diagnostic> {
        if self.rings.iter().any(|r| r.0 == decl.name) || self.ideals.iter().any(|i| i.0 == decl.name) {
            return Err(Diagnostic::new(at, format!("`{}` declared twice", decl.name)));
        }
        let ring = match self.field(decl.field) {
            FieldSpec::Rationals => AnyRing::Q(build_ring(Rationals, decl, at)?),
            FieldSpec::Prime(p) => AnyRing::P(build_ring(PrimeField::new(p).map_err(|e| Diagnostic::new(at, e.to_string()))?, decl, at)?),
        };
        self.rings.push((decl.name.clone(), ring, at));
        Ok(())
    }

    fn declare_ideal(&mut self, decl: &IdealDecl, at: Pos) -> Result<(), Diagnostic> {
        if self.rings.iter().any(|r| r.0 == decl.name) || self.ideals.iter().any(|i| i.0 == decl.name) {
            return Err(Diagnostic::new(at, format!("`{}` declared twice", decl.name)));
        }
        let Some((ring_name, ring, _)) = self.rings.last() else {
            return Err(Diagnostic::new(at, "ideal declared before any ring"));
        };
        let ideal = match ring {
            AnyRing::Q(r) => AnyIdeal::Q(build_ideal(r, decl, at, ring_name)?),
            AnyRing::P(r) => AnyIdeal::P(build_ideal(r, decl, at, ring_name)?),
        };
        self.ideals.push((decl.name.clone(), ideal, at));
        Ok(())
    }

    fn compute(&self, c: &Command, at: Pos, what: &str, out: &mut Run) -> Result<(), Diagnostic> {
        reject_options(c, &[])?;
        let mut words = c.words().peekable();
        let kind = match words.peek() {
            Some(w) if ["dao", "ring", "rr", "reduction"].contains(&w.node.as_str()) => words.next().unwrap().node.clone(),
            _ => String::from("dao"),
        };
        let target = words.next().map(|w| self.lookup(w)).transpose()?;
        if let Some(w) = words.next() {
            return Err(Diagnostic::new(w.pos, format!("unexpected argument `{}`", w.node)));
        }
        let cfg = self.settings.dao_config();
        let result = match kind.as_str() {
            "dao" | "reduction" => {
                let ideal = match target {
                    Some(Target::Ideal(_, i)) => i,
                    Some(Target::Ring(_)) => return Err(Diagnostic::new(at, format!("compute {} needs an ideal", kind))),
                    None => self.last_ideal(at)?.1,
                };
                if kind == "dao" {
                    on_ideal!(&ideal, i => dao_report(i, &cfg))
                } else {
                    on_ideal!(&ideal, i => reduction_report(i, &cfg))
                }
            }
            _ => {
                let ring = match target {
                    Some(Target::Ideal(_, i)) => i.ring(),
                    Some(Target::Ring(r)) => r,
                    None => self.current_ring().cloned().ok_or_else(|| Diagnostic::new(at, "no ring declared before this command"))?,
                };
                if kind == "ring" {
                    on_ring!(&ring, r => ring_report(r, &cfg))
                } else {
                    on_ring!(&ring, r => rr_report(r, &cfg))
                }
            }
        };
        out.records.push(match result {
            Ok((v, s)) => finish(v, s, at.line, what),
            Err(e) => error_record(&e, at.line, what),
        });
        Ok(())
    }

    fn verify(&self, c: &Command, at: Pos, what: &str, out: &mut Run) -> Result<(), Diagnostic> {
        let mut words = c.words();
        let Some(name) = words.next() else {
            return Err(Diagnostic::new(at, "verify needs a scenario name"));
        };
        if name.node == "expect" {
            reject_options(c, &EXPECT_KEYS)?;
            let ideal = match words.next().map(|w| self.lookup(w)).transpose()? {
                Some(Target::Ideal(_, i)) => i,
                Some(Target::Ring(_)) => return Err(Diagnostic::new(at, "expect needs an ideal")),
                None => self.last_ideal(at)?.1,
            };
            if let Some(w) = words.next() {
                return Err(Diagnostic::new(w.pos, format!("unexpected argument `{}`", w.node)));
            }
            let mut wanted = Vec::new();
            for (k, _) in c.options() {
                wanted.push((k.node.clone(), int_option(c, &k.node)?.expect("present")));
            }
            let cfg = self.settings.dao_config();
            out.records.push(match on_ideal!(&ideal, i => expect_scenario(i, &wanted, &cfg)) {
                Ok(s) => scenario_record(&s, at.line, what),
                Err(e) => error_record(&e, at.line, what),
            });
            return Ok(());
        }
        reject_options(c, &["samples"])?;
        if !is_scenario(&name.node) {
            return Err(Diagnostic::new(name.pos, format!("unknown scenario `{}`", name.node)));
        }
        let target = words.next().map(|w| self.lookup(w)).transpose()?;
        if let Some(w) = words.next() {
            return Err(Diagnostic::new(w.pos, format!("unexpected argument `{}`", w.node)));
        }
        let samples = int_option(c, "samples")?.unwrap_or(3) as u32;
        self.run_scenario(&name.node, target, samples, at, what, out)
    }

    fn run_scenario(&self, name: &str, target: Option<Target>, samples: u32, at: Pos, what: &str, out: &mut Run) -> Result<(), Diagnostic> {
        let cfg = self.settings.dao_config();
        let result = if IDEAL_SCENARIOS.contains(&name) {
            let ideal = match target {
                Some(Target::Ideal(_, i)) => i,
                Some(Target::Ring(_)) => return Err(Diagnostic::new(at, format!("scenario {} needs an ideal", name))),
                None => self.last_ideal(at)?.1,
            };
            on_ideal!(&ideal, i => ideal_scenario(name, i, &cfg))
        } else if RING_SCENARIOS.contains(&name) {
            let ring = match target {
                Some(Target::Ideal(_, i)) => i.ring(),
                Some(Target::Ring(r)) => r,
                None => self.current_ring().cloned().ok_or_else(|| Diagnostic::new(at, "no ring declared before this command"))?,
            };
            on_ring!(&ring, r => ring_scenario(name, r, samples, &cfg))
        } else {
            match self.settings.field.unwrap_or(FieldSpec::Prime(DEFAULT_PRIME)) {
                FieldSpec::Rationals => lab::reproduce_known_examples(Rationals, &cfg),
                FieldSpec::Prime(p) => lab::reproduce_known_examples(PrimeField::new(p).expect("validated"), &cfg),
            }
        };
        out.records.push(match result {
            Ok(s) => scenario_record(&s, at.line, what),
            Err(e) => error_record(&e, at.line, what),
        });
        Ok(())
    }

    fn explore(&self, c: &Command, at: Pos, what: &str, out: &mut Run) -> Result<(), Diagnostic> {
        reject_options(c, &["family", "vars", "degrees", "dim", "trials", "reductions", "mode", "field", "seed"])?;
        if let Some(w) = c.words().next() {
            return Err(Diagnostic::new(w.pos, format!("unexpected argument `{}`", w.node)));
        }
        let mut fam = FamilyConfig::default();
        if let Some(v) = c.option("family") {
            let ArgValue::Word(w) = v else {
                return Err(Diagnostic::new(at, "family expects a name"));
            };
            fam.kind = FamilyKind::parse(w).ok_or_else(|| {
                Diagnostic::new(at, format!("unknown family `{}`; expected hypersurface, complete_intersection, monomial_quotient or quadric_cone", w))
            })?;
        }
        if let Some((a, b)) = range_option(c, "vars")? {
            fam.min_vars = a as usize;
            fam.max_vars = b as usize;
        }
        if let Some((a, b)) = range_option(c, "degrees")? {
            fam.min_degree = a as u32;
            fam.max_degree = b as u32;
        }
        if let Some(d) = int_option(c, "dim")? {
            fam.min_dim = d as usize;
        }
        if let Some(t) = int_option(c, "trials")? {
            fam.trials = t as u32;
        }
        if let Some(t) = int_option(c, "reductions")? {
            fam.reductions = t as u32;
        }
        if let Some(s) = int_option(c, "seed")? {
            fam.seed = s;
        }
        if let Some(v) = c.option("mode") {
            fam.mode = match v {
                ArgValue::Word(w) if w == "graded" => Mode::Graded,
                ArgValue::Word(w) if w == "local" => Mode::Local,
                _ => return Err(Diagnostic::new(at, "mode expects graded or local")),
            };
        }
        let mut field = FieldSpec::Prime(DEFAULT_PRIME);
        if let Some(v) = c.option("field") {
            let ArgValue::Word(w) = v else {
                return Err(Diagnostic::new(at, "field expects Q or F<prime>"));
            };
            field = parse_field(w).map_err(|m| Diagnostic::new(at, m))?;
        }
        let field = self.field(field);
        if let Some(s) = self.settings.seed {
            fam.seed = s;
        }
        if let Some(t) = self.settings.trials {
            fam.trials = t;
        }
        fam.validate().map_err(|e| Diagnostic::new(at, e.to_string()))?;
        let cfg = DaoConfig { seed: fam.seed, ..self.settings.dao_config() };
        let result = match field {
            FieldSpec::Rationals => explore_with(Rationals, &fam, &cfg),
            FieldSpec::Prime(p) => explore_with(PrimeField::new(p).expect("validated"), &fam, &cfg),
        };
        match result {
            Ok((s, anomalies)) => {
                let mut rec = scenario_record(&s, at.line, what);
                rec.value["anomalies"] = Value::Array(anomalies.clone());
                rec.value["family"] = json!({
                    "kind": fam.kind.name(),
                    "vars": [fam.min_vars, fam.max_vars],
                    "degrees": [fam.min_degree, fam.max_degree],
                    "dim": fam.min_dim,
                    "trials": fam.trials,
                    "reductions": fam.reductions,
                    "seed": fam.seed,
                    "mode": fam.mode.name(),
                    "field": field_json(field),
                });
                out.anomalies.extend(anomalies);
                out.records.push(rec);
            }
            Err(e) => out.records.push(error_record(&e, at.line, what)),
        }
        Ok(())
    }

    fn resolve(&self, c: &Command, at: Pos, what: &str, out: &mut Run) -> Result<(), Diagnostic> {
        reject_options(c, &[])?;
        let mut assoc = false;
        let mut target = None;
        for w in c.words() {
            if w.node == "assoc" {
                assoc = true;
            } else if target.is_none() {
                target = Some(self.lookup(w)?);
            } else {
                return Err(Diagnostic::new(w.pos, format!("unexpected argument `{}`", w.node)));
            }
        }
        let target = match target {
            Some(t) => t,
            None => match self.last_ideal(at) {
                Ok((n, i)) => Target::Ideal(n, i),
                Err(_) => Target::Ring(self.current_ring().cloned().ok_or_else(|| Diagnostic::new(at, "nothing to resolve"))?),
            },
        };
        let result = match &target {
            Target::Ideal(n, i) => on_ideal!(i, i => resolve_report(i.ring(), Some(i), assoc, n)),
            Target::Ring(r) => on_ring!(r, r => resolve_report(r, None, assoc, &r.display())),
        };
        out.records.push(match result {
            Ok((v, s)) => finish(v, s, at.line, what),
            Err(e) => error_record(&e, at.line, what),
        });
        Ok(())
    }
}

fn reject_options(c: &Command, allowed: &[&str]) -> Result<(), Diagnostic> {
    for (k, _) in c.options() {
        if !allowed.contains(&k.node.as_str()) {
            return Err(Diagnostic::new(k.pos, format!("unknown option `{}` for {}", k.node, c.verb.keyword())));
        }
    }
    Ok(())
}

fn option_pos(c: &Command, key: &str) -> Pos {
    c.options().filter(|(k, _)| k.node == key).last().map(|(k, _)| k.pos).unwrap_or_default()
}

fn int_option(c: &Command, key: &str) -> Result<Option<u64>, Diagnostic> {
    match c.option(key) {
        None => Ok(None),
        Some(ArgValue::Int(n)) => Ok(Some(*n)),
        Some(_) => Err(Diagnostic::new(option_pos(c, key), format!("{} expects a number", key))),
    }
}

fn range_option(c: &Command, key: &str) -> Result<Option<(u64, u64)>, Diagnostic> {
    match c.option(key) {
        None => Ok(None),
        Some(ArgValue::Int(n)) => Ok(Some((*n, *n))),
        Some(ArgValue::Range(a, b)) if a <= b => Ok(Some((*a, *b))),
        Some(_) => Err(Diagnostic::new(option_pos(c, key), format!("{} expects a number or a range a..b with a <= b", key))),
    }
}

/// Runs the declarations of `script` and the commands selected by `task`.
///
/// Semantic errors (undeclared names, unknown variables, bad options) abort the run;
/// algebra errors inside a command become error records and the run continues.
pub fn execute(script: &SessionScript, task: &Task, settings: &Settings) -> Result<Run, Diagnostic> {
    let mut env = Env { settings: settings.clone(), rings: Vec::new(), ideals: Vec::new() };
    let mut out = Run::default();
    let wanted = match task {
        Task::Compute => Verb::Compute,
        Task::Verify(_) => Verb::Verify,
        Task::Explore => Verb::Explore,
        Task::Resolve => Verb::Resolve,
    };
    let use_script_commands = match task {
        Task::Verify(s) => s == "all",
        _ => script.statements.iter().any(|s| matches!(&s.node, Statement::Command(c) if c.verb == wanted)),
    };
    for st in &script.statements {
        let at = st.pos;
        let what = print_statement(&st.node);
        match &st.node {
            Statement::Ring(d) => env.declare_ring(d, at)?,
            Statement::Ideal(d) => env.declare_ideal(d, at)?,
            Statement::Command(c) if use_script_commands && c.verb == wanted => match c.verb {
                Verb::Compute => env.compute(c, at, &what, &mut out)?,
                Verb::Verify => env.verify(c, at, &what, &mut out)?,
                Verb::Explore => env.explore(c, at, &what, &mut out)?,
                Verb::Resolve => env.resolve(c, at, &what, &mut out)?,
            },
            Statement::Command(_) => {}
        }
    }
    if use_script_commands {
        return Ok(out);
    }
    let cfg = settings.dao_config();
    match task {
        Task::Explore => return Err(Diagnostic::new(Pos { line: 1, col: 1 }, "no explore statement in the script")),
        Task::Compute => {
            for (name, ideal, at) in &env.ideals {
                let what = format!("compute dao {};", name);
                out.records.push(match on_ideal!(ideal, i => dao_report(i, &cfg)) {
                    Ok((v, s)) => finish(v, s, at.line, &what),
                    Err(e) => error_record(&e, at.line, &what),
                });
            }
        }
        Task::Resolve => {
            for (name, ideal, at) in &env.ideals {
                let what = format!("resolve {};", name);
                env.resolve_default(name, ideal, *at, &what, &mut out);
            }
        }
        Task::Verify(name) => {
            if !is_scenario(name) {
                return Err(Diagnostic::new(Pos { line: 1, col: 1 }, format!("unknown scenario `{}`", name)));
            }
            if GLOBAL_SCENARIOS.contains(&name.as_str()) {
                env.run_scenario(name, None, 3, Pos { line: 1, col: 1 }, &format!("verify {};", name), &mut out)?;
            } else if IDEAL_SCENARIOS.contains(&name.as_str()) {
                for (iname, ideal, at) in &env.ideals {
                    let what = format!("verify {} {};", name, iname);
                    env.run_scenario(name, Some(Target::Ideal(iname.clone(), ideal.clone())), 3, *at, &what, &mut out)?;
                }
            } else {
                for (rname, ring, at) in &env.rings {
                    let what = format!("verify {} {};", name, rname);
                    env.run_scenario(name, Some(Target::Ring(ring.clone())), 3, *at, &what, &mut out)?;
                }
            }
        }
    }
    Ok(out)
}

impl Env {
    fn resolve_default(&self, name: &str, ideal: &AnyIdeal, at: Pos, what: &str, out: &mut Run) {
        let result = on_ideal!(ideal, i => resolve_report(i.ring(), Some(i), false, name));
        out.records.push(match result {
            Ok((v, s)) => finish(v, s, at.line, what),
            Err(e) => error_record(&e, at.line, what),
        });
    }
}
