//! Statement evaluation against a live session: a current ground ring plus
//! named element and ideal bindings.

use std::collections::HashMap;
use std::fmt;

use boolring::{
    decompose, maximal_ideals, prime_power_factors, quotient, witness_nonzero, GenericBoolRing,
    GroundSet, Ideal, RingElem, VerifyConfig,
};
use serde_json::json;

use crate::ast::{Command, Expr, IdealArg, SpExpr, SpStmt, Span, Spanned, Stmt};

#[derive(Debug, Clone)]
pub enum Binding {
    Elem(RingElem),
    Ideal(Ideal),
}

/// Which algebra the last statements addressed: the current finite
/// power-set ring, or the finite–cofinite algebra over the naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    PowerSet,
    FinCof,
}

/// Result of evaluating one statement: human-readable text, a JSON value for
/// `--json` mode, and the number of failed checks (nonzero only after a
/// failing `verify all`).
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub failed_checks: u64,
}

impl Report {
    fn new(text: impl Into<String>, json: serde_json::Value) -> Self {
        Report {
            text: text.into(),
            json,
            failed_checks: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    UnknownName(String),
    NotAnElement(String),
    NotAnIdeal(String),
    NoGround,
    GroundLimit { size: usize, max: usize },
    Ring(boolring::Error),
}

/// An evaluation failure, positioned at the source span it arose from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub span: Span,
    pub kind: EvalErrorKind,
}

impl EvalError {
    fn new(span: Span, kind: EvalErrorKind) -> Self {
        EvalError { span, kind }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error at {}: ", self.span)?;
        match &self.kind {
            EvalErrorKind::UnknownName(name) => write!(f, "unknown name `{name}`"),
            EvalErrorKind::NotAnElement(name) => {
                write!(f, "`{name}` names an ideal where an element is required")
            }
            EvalErrorKind::NotAnIdeal(name) => {
                write!(f, "`{name}` names an element where an ideal is required")
            }
            EvalErrorKind::NoGround => write!(f, "no ground set declared yet"),
            EvalErrorKind::GroundLimit { size, max } => {
                write!(f, "ground set of size {size} exceeds --ground-max {max}")
            }
            EvalErrorKind::Ring(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for EvalError {}

pub struct Session {
    ground: Option<GroundSet>,
    bindings: HashMap<String, Binding>,
    mode: Mode,
    pub ground_max: usize,
    pub oracle_max: usize,
}

impl Session {
    pub fn new(ground_max: usize, oracle_max: usize) -> Self {
        Session {
            ground: None,
            bindings: HashMap::new(),
            mode: Mode::PowerSet,
            ground_max,
            oracle_max,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ground(&self) -> Option<&GroundSet> {
        self.ground.as_ref()
    }

    fn require_ground(&self, span: Span) -> Result<&GroundSet, EvalError> {
        self.ground
            .as_ref()
            .ok_or_else(|| EvalError::new(span, EvalErrorKind::NoGround))
    }

    fn ring_err(span: Span) -> impl Fn(boolring::Error) -> EvalError {
        move |err| EvalError::new(span, EvalErrorKind::Ring(err))
    }

    pub fn eval(&mut self, stmt: &SpStmt) -> Result<Report, EvalError> {
        match &stmt.node {
            Stmt::Ground(labels) => self.eval_ground(labels, stmt.span),
            Stmt::LetElem(name, expr) => {
                let elem = self.eval_expr(expr)?;
                let text = format!("{} = {}", name.node, elem);
                let json = json!({"verb": "let", "name": name.node, "elem": elem});
                self.bindings
                    .insert(name.node.clone(), Binding::Elem(elem));
                Ok(Report::new(text, json))
            }
            Stmt::LetIdeal(name, exprs) => {
                let ground = self.require_ground(stmt.span)?.clone();
                let gens = exprs
                    .iter()
                    .map(|e| self.eval_expr(e))
                    .collect::<Result<Vec<_>, _>>()?;
                let ideal =
                    Ideal::from_generators(&ground, gens).map_err(Self::ring_err(stmt.span))?;
                let text = format!("{} = {}", name.node, ideal);
                let json = json!({"verb": "ideal", "name": name.node, "ideal": ideal});
                self.bindings
                    .insert(name.node.clone(), Binding::Ideal(ideal));
                Ok(Report::new(text, json))
            }
            Stmt::Command(command) => self.eval_command(command, stmt.span),
        }
    }

    fn eval_ground(
        &mut self,
        labels: &[Spanned<String>],
        span: Span,
    ) -> Result<Report, EvalError> {
        if labels.len() > self.ground_max {
            return Err(EvalError::new(
                span,
                EvalErrorKind::GroundLimit {
                    size: labels.len(),
                    max: self.ground_max,
                },
            ));
        }
        let mut seen = HashMap::new();
        for label in labels {
            if seen.insert(label.node.clone(), ()).is_some() {
                return Err(EvalError::new(
                    label.span,
                    EvalErrorKind::Ring(boolring::Error::DuplicateLabel(label.node.clone())),
                ));
            }
        }
        let ground = GroundSet::new(labels.iter().map(|l| l.node.clone()))
            .map_err(Self::ring_err(span))?;
        let text = format!("ground set {} (size {})", ground, ground.size());
        let json = json!({"verb": "ground", "labels": ground.labels()});
        // element and ideal bindings never outlive their ground set
        self.bindings.clear();
        self.ground = Some(ground);
        self.mode = Mode::PowerSet;
        Ok(Report::new(text, json))
    }

    fn eval_expr(&self, expr: &SpExpr) -> Result<RingElem, EvalError> {
        match &expr.node {
            Expr::Name(name) => match self.bindings.get(name) {
                Some(Binding::Elem(elem)) => Ok(elem.clone()),
                Some(Binding::Ideal(_)) => Err(EvalError::new(
                    expr.span,
                    EvalErrorKind::NotAnElement(name.clone()),
                )),
                None => Err(EvalError::new(
                    expr.span,
                    EvalErrorKind::UnknownName(name.clone()),
                )),
            },
            Expr::SetLit(labels) => {
                let ground = self.require_ground(expr.span)?;
                ground.elem(labels).map_err(Self::ring_err(expr.span))
            }
            Expr::Zero => Ok(self.require_ground(expr.span)?.zero()),
            Expr::One => Ok(self.require_ground(expr.span)?.one()),
            Expr::Add(l, r) => {
                let lhs = self.eval_expr(l)?;
                let rhs = self.eval_expr(r)?;
                lhs.add(&rhs).map_err(Self::ring_err(expr.span))
            }
            Expr::Mul(l, r) => {
                let lhs = self.eval_expr(l)?;
                let rhs = self.eval_expr(r)?;
                lhs.mul(&rhs).map_err(Self::ring_err(expr.span))
            }
            Expr::Complement(e) => Ok(self.eval_expr(e)?.complement()),
        }
    }

    fn eval_ideal_arg(&self, arg: &IdealArg, span: Span) -> Result<Ideal, EvalError> {
        match arg {
            IdealArg::Named(name) => match self.bindings.get(&name.node) {
                Some(Binding::Ideal(ideal)) => Ok(ideal.clone()),
                Some(Binding::Elem(_)) => Err(EvalError::new(
                    name.span,
                    EvalErrorKind::NotAnIdeal(name.node.clone()),
                )),
                None => Err(EvalError::new(
                    name.span,
                    EvalErrorKind::UnknownName(name.node.clone()),
                )),
            },
            IdealArg::Inline(exprs) => {
                let ground = self.require_ground(span)?.clone();
                let gens = exprs
                    .iter()
                    .map(|e| self.eval_expr(e))
                    .collect::<Result<Vec<_>, _>>()?;
                Ideal::from_generators(&ground, gens).map_err(Self::ring_err(span))
            }
        }
    }

    fn eval_command(&mut self, command: &Command, span: Span) -> Result<Report, EvalError> {
        match command {
            Command::Decompose(arg) => {
                let ideal = self.eval_ideal_arg(arg, span)?;
                let decomposition = decompose(&ideal).map_err(Self::ring_err(span))?;
                let mut text = format!("decomposition of {}:\n", ideal);
                for factor in decomposition.factors() {
                    text.push_str(&format!(
                        "  m_{} = {}\n",
                        factor.point(),
                        factor.ideal()
                    ));
                }
                text.push_str(&format!(
                    "reduced: {}, verified: {}",
                    decomposition.is_reduced(),
                    decomposition.is_verified()
                ));
                // exactly the documented schema, nothing wrapped around it
                let json = serde_json::to_value(&decomposition)
                    .expect("decomposition serializes");
                Ok(Report::new(text, json))
            }
            Command::Radical(arg) => {
                let ideal = self.eval_ideal_arg(arg, span)?;
                let radical = ideal.radical();
                let text = format!("radical {} = {}", ideal, radical);
                let json = json!({"verb": "radical", "ideal": radical});
                Ok(Report::new(text, json))
            }
            Command::Member(expr, arg) => {
                let elem = self.eval_expr(expr)?;
                let ideal = self.eval_ideal_arg(arg, span)?;
                let answer = ideal.contains(&elem).map_err(Self::ring_err(span))?;
                let json = json!({"verb": "member", "elem": elem, "ideal": ideal, "member": answer});
                Ok(Report::new(answer.to_string(), json))
            }
            Command::Spectrum => {
                let ground = self.require_ground(span)?;
                let spectrum = maximal_ideals(ground).map_err(Self::ring_err(span))?;
                let mut lines = Vec::new();
                for descriptor in &spectrum {
                    lines.push(format!("m_{} = {}", descriptor.point(), descriptor.ideal()));
                }
                let json = json!({"verb": "spectrum", "maximal_ideals": spectrum});
                Ok(Report::new(lines.join("\n"), json))
            }
            Command::Quotient(expr) => {
                let ground = self.require_ground(span)?.clone();
                let modulus = self.eval_expr(expr)?;
                let map = quotient(&ground, &modulus).map_err(Self::ring_err(span))?;
                let text = format!(
                    "quotient by ({}): target ground {} (size {}), kernel ({})",
                    modulus,
                    map.target(),
                    map.target().size(),
                    modulus
                );
                let json = serde_json::to_value(&map).expect("quotient map serializes");
                Ok(Report::new(text, json))
            }
            Command::Atoms => {
                let ground = self.require_ground(span)?;
                let atoms = ground.atoms();
                let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
                let json = json!({"verb": "atoms", "atoms": atoms});
                Ok(Report::new(parts.join(", "), json))
            }
            Command::Stone(dim) => {
                let ring = GenericBoolRing::new(dim.node as usize)
                    .map_err(Self::ring_err(dim.span))?;
                let map = ring.stone_map().map_err(Self::ring_err(dim.span))?;
                let mut text = format!(
                    "Z2^{} identified with P({})",
                    ring.dimension(),
                    map.ground()
                );
                if ring.dimension() <= 4 && ring.dimension() >= 1 {
                    for b in ring.elements().skip(1) {
                        text.push_str(&format!(
                            "\n  {:0width$b} -> {}",
                            b,
                            map.apply(b),
                            width = ring.dimension()
                        ));
                    }
                }
                let json = json!({
                    "verb": "stone",
                    "dimension": ring.dimension(),
                    "atom_labels": map.ground().labels(),
                });
                Ok(Report::new(text, json))
            }
            Command::IntDemo(m) => {
                let factors =
                    prime_power_factors(m.node).map_err(Self::ring_err(m.span))?;
                let parts: Vec<String> = factors.iter().map(|f| format!("({f})")).collect();
                let text = format!("({}) = {}", m.node, parts.join(" ∩ "));
                let json = json!({"verb": "intdemo", "m": m.node, "factors": factors});
                Ok(Report::new(text, json))
            }
            Command::FincofWitness(points) => {
                self.mode = Mode::FinCof;
                let point_values: Vec<u64> = points.iter().map(|p| p.node).collect();
                let witness = witness_nonzero(point_values.iter().copied());
                let point_list: Vec<String> =
                    point_values.iter().map(u64::to_string).collect();
                let text = format!(
                    "witness {:?}: nonzero, lies in m_x for every x in {{{}}}",
                    witness,
                    point_list.join(", ")
                );
                let json = json!({
                    "verb": "witness",
                    "points": point_values,
                    "witness": witness,
                });
                Ok(Report::new(text, json))
            }
            Command::VerifyAll => {
                let config = VerifyConfig {
                    oracle_bound: self.oracle_max,
                    ..VerifyConfig::default()
                };
                let report = boolring::run_all(&config);
                let mut lines = Vec::new();
                for suite in &report.suites {
                    if suite.failed == 0 {
                        lines.push(format!("ok   {} ({} checks)", suite.name, suite.passed));
                    } else {
                        lines.push(format!(
                            "FAIL {} ({} of {} checks failed)",
                            suite.name,
                            suite.failed,
                            suite.passed + suite.failed
                        ));
                    }
                }
                lines.push(format!(
                    "verify all: {} checks passed, {} failed",
                    report.total_passed(),
                    report.total_failed()
                ));
                let suites_json: Vec<serde_json::Value> = report
                    .suites
                    .iter()
                    .map(|s| json!({"name": s.name, "passed": s.passed, "failed": s.failed}))
                    .collect();
                let json = json!({
                    "verb": "verify",
                    "suites": suites_json,
                    "failed": report.total_failed(),
                });
                let mut out = Report::new(lines.join("\n"), json);
                out.failed_checks = report.total_failed();
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn run(session: &mut Session, line: &str) -> Report {
        let stmts = parse(line).unwrap();
        let mut last = None;
        for stmt in &stmts {
            last = Some(session.eval(stmt).unwrap());
        }
        last.unwrap()
    }

    fn run_err(session: &mut Session, line: &str) -> EvalError {
        let stmts = parse(line).unwrap();
        let mut out = None;
        for stmt in &stmts {
            match session.eval(stmt) {
                Ok(_) => {}
                Err(err) => out = Some(err),
            }
        }
        out.expect("expected an evaluation error")
    }

    #[test]
    fn decompose_zero_lists_every_point_ideal() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b c");
        let report = run(&mut session, "decompose ideal(0)");
        assert!(report.text.contains("m_a = ({b, c})"));
        assert!(report.text.contains("m_b = ({a, c})"));
        assert!(report.text.contains("m_c = ({a, b})"));
        assert!(report.text.contains("reduced: true"));
        assert_eq!(report.json["factors"][0]["point"], "a");
    }

    #[test]
    fn intdemo_prints_the_intersection_form() {
        let mut session = Session::new(64, 4);
        let report = run(&mut session, "intdemo 360");
        assert_eq!(report.text, "(360) = (8) ∩ (9) ∩ (5)");
    }

    #[test]
    fn member_answers_false_for_outside_elements() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b c");
        run(&mut session, "ideal I = ({b})");
        let report = run(&mut session, "member {a} I");
        assert_eq!(report.text, "false");
    }

    #[test]
    fn binding_resolution_errors_carry_spans() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b");
        let err = run_err(&mut session, "let u = v + {a}");
        assert_eq!(err.kind, EvalErrorKind::UnknownName("v".into()));
        assert_eq!((err.span.line, err.span.col), (1, 9));
    }

    #[test]
    fn set_literal_with_unknown_label_errors() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b");
        let err = run_err(&mut session, "let u = {z}");
        assert_eq!(
            err.kind,
            EvalErrorKind::Ring(boolring::Error::UnknownLabel("z".into()))
        );
    }

    #[test]
    fn statements_need_a_ground() {
        let mut session = Session::new(64, 4);
        let err = run_err(&mut session, "let u = {a}");
        assert_eq!(err.kind, EvalErrorKind::NoGround);
    }

    #[test]
    fn redefining_the_ground_clears_bindings() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b");
        run(&mut session, "let u = {a}");
        run(&mut session, "ground a b c");
        let err = run_err(&mut session, "member u ideal(0)");
        assert_eq!(err.kind, EvalErrorKind::UnknownName("u".into()));
    }

    #[test]
    fn ground_limit_is_enforced() {
        let mut session = Session::new(2, 4);
        let err = run_err(&mut session, "ground a b c");
        assert_eq!(err.kind, EvalErrorKind::GroundLimit { size: 3, max: 2 });
    }

    #[test]
    fn element_and_ideal_namespaces_are_checked() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b");
        run(&mut session, "let u = {a}");
        run(&mut session, "ideal I = ({b})");
        assert_eq!(
            run_err(&mut session, "decompose u").kind,
            EvalErrorKind::NotAnIdeal("u".into())
        );
        assert_eq!(
            run_err(&mut session, "let w = I + {a}").kind,
            EvalErrorKind::NotAnElement("I".into())
        );
    }

    #[test]
    fn fincof_witness_switches_mode_and_ground_switches_back() {
        let mut session = Session::new(64, 4);
        assert_eq!(session.mode(), Mode::PowerSet);
        let report = run(&mut session, "fincof witness 1 2");
        assert_eq!(session.mode(), Mode::FinCof);
        assert_eq!(report.json["witness"]["kind"], "finite");
        assert_eq!(report.json["witness"]["support"][0], 0);
        run(&mut session, "ground a");
        assert_eq!(session.mode(), Mode::PowerSet);
    }

    #[test]
    fn quotient_reports_the_dropped_labels() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b c");
        let report = run(&mut session, "quotient {a}");
        assert!(report.text.contains("target ground {b, c}"));
        assert_eq!(report.json["target"], serde_json::json!(["b", "c"]));
    }

    #[test]
    fn expressions_follow_the_ring_semantics() {
        let mut session = Session::new(64, 4);
        run(&mut session, "ground a b c");
        let report = run(&mut session, "let u = ({a,b} + {b,c}) * {a,c}'");
        // {a,c} * {b} = {}
        assert_eq!(report.text, "u = {}");
    }
}
