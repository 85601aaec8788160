//! Built-in parametrized families of forms with polynomial constraints.
//!
//! Each [`AnsatzCase`] packages a coefficient template (blade indices with
//! polynomial coefficient expressions), the polynomial constraint system
//! that characterizes when the orthogonal relation holds inside the
//! family, a closed-form sampler for rational constraint-satisfying
//! points, and — where one exists in closed form — the claimed splitting
//! into orthogonal simple parts.  The harness instantiates these at
//! random rational points and checks the relation and the split exactly.
//!
//! Lorentzian templates are written over `e_1 … e_d` with `e_1` timelike;
//! builders accept 0-based index lists and shift them so the tables read
//! like the usual `e_0, e_1, …` conventions.

use std::collections::{BTreeMap, BTreeSet};

use crate::decomp::{Decomposition, SimplePart};
use crate::error::{AlgebraError, Result};
use crate::form::Form;
use crate::scalar::{rat, rint, Rat, Scalar};
use crate::space::MetricSpace;

/// A parameter assignment: name → exact rational value.
pub type Params = BTreeMap<String, Rat>;

// ---------------------------------------------------------------------------
// Polynomial expressions
// ---------------------------------------------------------------------------

/// A small polynomial expression over named rational parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(Rat),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Evaluate at a parameter point; every variable must be assigned.
    pub fn eval(&self, params: &Params) -> Result<Rat> {
        Ok(match self {
            Expr::Const(c) => c.clone(),
            Expr::Var(name) => params
                .get(name)
                .cloned()
                .ok_or_else(|| AlgebraError::ParseError(format!("unassigned parameter {name}")))?,
            Expr::Neg(e) => -e.eval(params)?,
            Expr::Add(a, b) => a.eval(params)? + b.eval(params)?,
            Expr::Sub(a, b) => a.eval(params)? - b.eval(params)?,
            Expr::Mul(a, b) => a.eval(params)? * b.eval(params)?,
            Expr::Pow(a, n) => {
                let base = a.eval(params)?;
                let mut acc = Rat::one();
                for _ in 0..*n {
                    acc = acc * base.clone();
                }
                acc
            }
        })
    }

    /// Collect variable names into `out`.
    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(name) => {
                out.insert(name.clone());
            }
            Expr::Neg(e) => e.vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Pow(a, _) => a.vars(out),
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::ParseError(format!("{msg} at byte {} in `{}`", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some('-') => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        self.skip_ws();
        if self.peek() == Some('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            let n = self.integer()? as u32;
            base = Expr::Pow(Box::new(base), n);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|e| self.err(&e.to_string()))
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.integer()?;
                    if den == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Expr::Const(rat(num, den)))
                } else {
                    Ok(Expr::Const(rint(num)))
                }
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    self.bump();
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(Expr::Var(name))
            }
            _ => Err(self.err("expected atom")),
        }
    }
}

/// Parse `+ - * ^` polynomial expressions over lowercase identifiers and
/// rational literals (`3`, `1/2`).
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        src,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Source of random exact rationals and choices for the samplers.
pub trait ParamSampler {
    /// A random rational; zero is allowed.
    fn rat(&mut self) -> Rat;

    /// A random nonzero rational.
    fn nonzero(&mut self) -> Rat {
        loop {
            let r = self.rat();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Uniform choice in `0..n`.
    fn pick(&mut self, n: usize) -> usize;
}

/// [`ParamSampler`] drawing `num/den` with `num ∈ [-height, height]`,
/// `den ∈ [1, height]` from any [`rand::Rng`].
pub struct RngSampler<'a, R: rand::Rng> {
    pub rng: &'a mut R,
    pub height: i64,
}

impl<'a, R: rand::Rng> RngSampler<'a, R> {
    pub fn new(rng: &'a mut R, height: i64) -> Self {
        RngSampler {
            rng,
            height: height.max(1),
        }
    }
}

impl<'a, R: rand::Rng> ParamSampler for RngSampler<'a, R> {
    fn rat(&mut self) -> Rat {
        let num = self.rng.gen_range(-self.height..=self.height);
        let den = self.rng.gen_range(1..=self.height);
        rat(num, den)
    }

    fn pick(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

// ---------------------------------------------------------------------------
// Case table
// ---------------------------------------------------------------------------

/// One factor of a claimed simple part: a one-form `Σ coeff·e_i`.
pub type FactorSpec = Vec<(usize, Expr)>;

/// One claimed simple summand: `scale · f_1 ∧ … ∧ f_p`.
#[derive(Clone, Debug)]
pub struct SplitPart {
    pub scale: Option<Expr>,
    pub factors: Vec<FactorSpec>,
}

/// A parametrized family of p-forms with its constraint system.
#[derive(Clone)]
pub struct AnsatzCase {
    pub name: &'static str,
    /// Short tag naming the family in reports.
    pub citation: &'static str,
    pub dim: usize,
    pub time_dims: usize,
    pub degree: usize,
    /// Blade index lists (1-based, arbitrary order) with coefficients.
    pub template: Vec<(Vec<usize>, Expr)>,
    /// Polynomial expressions that must all vanish for the relation to
    /// hold inside this family.
    pub constraints: Vec<Expr>,
    /// True when the family's resolution is a forced parameter collapse
    /// (the generic member violates the relation outright).
    pub contradiction: bool,
    /// Closed-form orthogonal simple parts, when recorded.
    pub split: Vec<SplitPart>,
    /// Draws a random rational point satisfying every constraint.
    pub satisfier: fn(&mut dyn ParamSampler) -> Params,
    /// Extra genericity predicate for violating samples (e.g. keeping a
    /// derived coefficient nonzero as the family hypothesis demands).
    pub violating_guard: Option<fn(&Params) -> bool>,
}

impl std::fmt::Debug for AnsatzCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AnsatzCase")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("time_dims", &self.time_dims)
            .field("degree", &self.degree)
            .field("terms", &self.template.len())
            .field("constraints", &self.constraints.len())
            .finish()
    }
}

impl AnsatzCase {
    pub fn space(&self) -> MetricSpace {
        MetricSpace::new(self.dim, self.time_dims).expect("case dimensions are valid")
    }

    /// All parameter names used anywhere in the case.
    pub fn parameters(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for (_, e) in &self.template {
            e.vars(&mut out);
        }
        for c in &self.constraints {
            c.vars(&mut out);
        }
        for part in &self.split {
            if let Some(s) = &part.scale {
                s.vars(&mut out);
            }
            for f in &part.factors {
                for (_, e) in f {
                    e.vars(&mut out);
                }
            }
        }
        out
    }

    /// Evaluate the template at a parameter point.
    pub fn instantiate(&self, params: &Params) -> Result<Form> {
        let space = self.space();
        let mut f = Form::zero(space, self.degree);
        for (indices, expr) in &self.template {
            let c = expr.eval(params)?;
            if c.is_zero() {
                continue;
            }
            f = f.plus(&Form::monomial(space, indices, c)?)?;
        }
        Ok(f)
    }

    /// Do all constraints vanish at the point?
    pub fn constraints_hold(&self, params: &Params) -> Result<bool> {
        for c in &self.constraints {
            if !c.eval(params)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Evaluate the recorded closed-form split (zero parts dropped);
    /// `None` when the case records no split.
    pub fn claimed_split(&self, params: &Params) -> Result<Option<Decomposition<Rat>>> {
        if self.split.is_empty() {
            return Ok(None);
        }
        let space = self.space();
        let mut parts = Vec::new();
        for spec in &self.split {
            let scale = match &spec.scale {
                None => Rat::one(),
                Some(e) => e.eval(params)?,
            };
            if scale.is_zero() {
                continue;
            }
            let mut factors = Vec::new();
            for (k, factor) in spec.factors.iter().enumerate() {
                let mut coords = vec![Rat::zero(); space.dim()];
                for (i, e) in factor {
                    coords[*i - 1] = coords[*i - 1].clone() + e.eval(params)?;
                }
                let mut one_form = Form::from_covector(space, &coords);
                if k == 0 {
                    one_form = one_form.scaled(&scale);
                }
                factors.push(one_form);
            }
            let part = SimplePart::from_factors(space, factors)?;
            if part.form.is_zero() {
                continue;
            }
            parts.push(part);
        }
        Ok(Some(Decomposition { parts }))
    }

    /// Draw a constraint-satisfying rational point.
    pub fn sample_satisfying(&self, s: &mut dyn ParamSampler) -> Params {
        (self.satisfier)(s)
    }

    /// Draw a generic point with every parameter nonzero and at least one
    /// constraint violated (bounded retries).
    pub fn sample_violating(&self, s: &mut dyn ParamSampler) -> Result<Params> {
        let names = self.parameters();
        for _ in 0..256 {
            let mut params = Params::new();
            for n in &names {
                params.insert(n.clone(), s.nonzero());
            }
            if self.constraints_hold(&params)? {
                continue;
            }
            if let Some(guard) = self.violating_guard {
                if !guard(&params) {
                    continue;
                }
            }
            return Ok(params);
        }
        Err(AlgebraError::SamplingExhausted(format!(
            "no violating point found for case {}",
            self.name
        )))
    }
}

/// Solve constraints of the shape `name - expression` for not-yet-assigned
/// parameters, iterating to a fixed point.  This lets samplers assign only
/// the free parameters of a template whose remaining parameters are
/// defined by such equations.
pub fn apply_defining(constraints: &[Expr], params: &mut Params) {
    loop {
        let mut progressed = false;
        for c in constraints {
            if let Expr::Sub(lhs, rhs) = c {
                if let Expr::Var(name) = lhs.as_ref() {
                    if params.contains_key(name) {
                        continue;
                    }
                    let mut needed = BTreeSet::new();
                    rhs.vars(&mut needed);
                    if needed.iter().all(|v| params.contains_key(v)) {
                        let value = rhs.eval(params).expect("variables checked");
                        params.insert(name.clone(), value);
                        progressed = true;
                    }
                }
            }
        }
        if !progressed {
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

fn e(src: &str) -> Expr {
    parse_expr(src).expect("builtin expression parses")
}

/// Template entry with 1-based indices (euclidean tables).
fn t(indices: &[usize], coeff: &str) -> (Vec<usize>, Expr) {
    (indices.to_vec(), e(coeff))
}

/// Template entry with 0-based indices (lorentzian tables, `e_0` time).
fn tm(indices: &[usize], coeff: &str) -> (Vec<usize>, Expr) {
    (indices.iter().map(|i| i + 1).collect(), e(coeff))
}

/// Factor with 1-based indices.
fn f1(entries: &[(usize, &str)]) -> FactorSpec {
    entries.iter().map(|(i, c)| (*i, e(c))).collect()
}

/// Factor with 0-based indices.
fn f0(entries: &[(usize, &str)]) -> FactorSpec {
    entries.iter().map(|(i, c)| (*i + 1, e(c))).collect()
}

fn part(factors: Vec<FactorSpec>) -> SplitPart {
    SplitPart {
        scale: None,
        factors,
    }
}

fn scaled_part(scale: &str, factors: Vec<FactorSpec>) -> SplitPart {
    SplitPart {
        scale: Some(e(scale)),
        factors,
    }
}

fn cs(list: &[&str]) -> Vec<Expr> {
    list.iter().map(|s| e(s)).collect()
}

fn set(p: &mut Params, name: &str, v: Rat) {
    p.insert(name.to_string(), v);
}

fn get(p: &Params, name: &str) -> Rat {
    p[name].clone()
}

/// A rational point on `x² + y² = z²` (random scale and leg order).
fn pythagorean(s: &mut dyn ParamSampler) -> (Rat, Rat, Rat) {
    let p = s.rat();
    let q = s.rat();
    let k = s.nonzero();
    let leg_a = k.clone() * (p.clone() * p.clone() - q.clone() * q.clone());
    let leg_b = k.clone() * rint(2) * p.clone() * q.clone();
    let hyp = k * (p.clone() * p + q.clone() * q);
    if s.pick(2) == 0 {
        (leg_a, leg_b, hyp)
    } else {
        (leg_b, leg_a, hyp)
    }
}

// ---------------------------------------------------------------------------
// d = 6 (3-forms)
// ---------------------------------------------------------------------------

fn sat_e6_so4(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let alpha = s.rat();
    let beta = s.rat();
    let gamma = s.nonzero();
    let delta = -(alpha.clone() * beta.clone()) / gamma.clone();
    set(&mut p, "alpha", alpha);
    set(&mut p, "beta", beta);
    set(&mut p, "gamma", gamma);
    set(&mut p, "delta", delta);
    p
}

fn case_e6_so4() -> AnsatzCase {
    AnsatzCase {
        name: "e6-p3-so4",
        citation: "eq:e3so4",
        dim: 6,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 3], "alpha"),
            t(&[1, 4, 5], "beta"),
            t(&[2, 3, 6], "gamma"),
            t(&[4, 5, 6], "delta"),
        ],
        constraints: cs(&["alpha*beta + gamma*delta"]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(1, "alpha"), (6, "gamma")]),
                f1(&[(2, "1")]),
                f1(&[(3, "1")]),
            ]),
            part(vec![
                f1(&[(1, "beta"), (6, "delta")]),
                f1(&[(4, "1")]),
                f1(&[(5, "1")]),
            ]),
        ],
        satisfier: sat_e6_so4,
        violating_guard: None,
    }
}

fn sat_e6_su2(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let (alpha, eta, gamma) = pythagorean(s);
    set(&mut p, "alpha", alpha);
    set(&mut p, "eta", eta);
    set(&mut p, "gamma", gamma);
    p
}

fn case_e6_su2() -> AnsatzCase {
    AnsatzCase {
        name: "e6-p3-su2",
        citation: "eq:e3su2",
        dim: 6,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 3], "alpha"),
            t(&[1, 4, 5], "alpha"),
            t(&[2, 3, 6], "eta + gamma"),
            t(&[4, 5, 6], "eta - gamma"),
        ],
        constraints: cs(&["alpha^2 + eta^2 - gamma^2"]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(1, "alpha"), (6, "eta + gamma")]),
                f1(&[(2, "1")]),
                f1(&[(3, "1")]),
            ]),
            part(vec![
                f1(&[(1, "alpha"), (6, "eta - gamma")]),
                f1(&[(4, "1")]),
                f1(&[(5, "1")]),
            ]),
        ],
        satisfier: sat_e6_su2,
        violating_guard: None,
    }
}

fn sat_so2_family(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", s.rat());
    if s.pick(2) == 0 {
        set(&mut p, "eta", Rat::zero());
        set(&mut p, "eps", s.rat());
    } else {
        set(&mut p, "eta", s.rat());
        set(&mut p, "eps", Rat::zero());
    }
    p
}

fn case_e6_so2() -> AnsatzCase {
    AnsatzCase {
        name: "e6-p3-so2",
        citation: "eq:e3so2",
        dim: 6,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 3], "alpha"),
            t(&[2, 3, 4], "eta"),
            t(&[4, 5, 6], "eps"),
        ],
        constraints: cs(&["eta*eps"]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(1, "alpha"), (4, "eta")]),
                f1(&[(2, "1")]),
                f1(&[(3, "1")]),
            ]),
            part(vec![f1(&[(4, "eps")]), f1(&[(5, "1")]), f1(&[(6, "1")])]),
        ],
        satisfier: sat_so2_family,
        violating_guard: None,
    }
}

fn sat_m6_so4(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let alpha = s.rat();
    let beta = s.rat();
    let gamma = s.nonzero();
    let delta = alpha.clone() * beta.clone() / gamma.clone();
    set(&mut p, "alpha", alpha);
    set(&mut p, "beta", beta);
    set(&mut p, "gamma", gamma);
    set(&mut p, "delta", delta);
    p
}

fn case_m6_so4() -> AnsatzCase {
    AnsatzCase {
        name: "m6-p3-so4",
        citation: "eq:m3so4",
        dim: 6,
        time_dims: 1,
        degree: 3,
        template: vec![
            tm(&[0, 1, 2], "alpha"),
            tm(&[0, 3, 4], "beta"),
            tm(&[1, 2, 5], "gamma"),
            tm(&[3, 4, 5], "delta"),
        ],
        constraints: cs(&["alpha*beta - gamma*delta"]),
        contradiction: false,
        split: vec![
            part(vec![
                f0(&[(0, "alpha"), (5, "gamma")]),
                f0(&[(1, "1")]),
                f0(&[(2, "1")]),
            ]),
            part(vec![
                f0(&[(0, "beta"), (5, "delta")]),
                f0(&[(3, "1")]),
                f0(&[(4, "1")]),
            ]),
        ],
        satisfier: sat_m6_so4,
        violating_guard: None,
    }
}

fn sat_m6_su2(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let (alpha, gamma, eta) = pythagorean(s);
    set(&mut p, "alpha", alpha);
    set(&mut p, "gamma", gamma);
    set(&mut p, "eta", eta);
    p
}

fn case_m6_su2() -> AnsatzCase {
    AnsatzCase {
        name: "m6-p3-su2",
        citation: "eq:m3su2",
        dim: 6,
        time_dims: 1,
        degree: 3,
        template: vec![
            tm(&[0, 1, 2], "alpha"),
            tm(&[0, 3, 4], "alpha"),
            tm(&[1, 2, 5], "eta + gamma"),
            tm(&[3, 4, 5], "eta - gamma"),
        ],
        constraints: cs(&["alpha^2 + gamma^2 - eta^2"]),
        contradiction: false,
        split: vec![
            part(vec![
                f0(&[(0, "alpha"), (5, "eta + gamma")]),
                f0(&[(1, "1")]),
                f0(&[(2, "1")]),
            ]),
            part(vec![
                f0(&[(0, "alpha"), (5, "eta - gamma")]),
                f0(&[(3, "1")]),
                f0(&[(4, "1")]),
            ]),
        ],
        satisfier: sat_m6_su2,
        violating_guard: None,
    }
}

fn case_m6_so2() -> AnsatzCase {
    AnsatzCase {
        name: "m6-p3-so2",
        citation: "eq:m3so2",
        dim: 6,
        time_dims: 1,
        degree: 3,
        template: vec![
            tm(&[0, 1, 2], "alpha"),
            tm(&[1, 2, 3], "eta"),
            tm(&[3, 4, 5], "eps"),
        ],
        constraints: cs(&["eta*eps"]),
        contradiction: false,
        split: vec![
            part(vec![
                f0(&[(0, "alpha"), (3, "eta")]),
                f0(&[(1, "1")]),
                f0(&[(2, "1")]),
            ]),
            part(vec![f0(&[(3, "eps")]), f0(&[(4, "1")]), f0(&[(5, "1")])]),
        ],
        satisfier: sat_so2_family,
        violating_guard: None,
    }
}

// ---------------------------------------------------------------------------
// d = 7 (3-forms)
// ---------------------------------------------------------------------------

fn sat_e7_so6(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let survivor = s.pick(3);
    for (i, name) in ["alpha", "beta", "gamma"].iter().enumerate() {
        let v = if i == survivor {
            s.nonzero()
        } else {
            Rat::zero()
        };
        set(&mut p, name, v);
    }
    p
}

fn case_e7_so6() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-so6",
        citation: "so(6) collapse, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[3, 4, 7], "beta"),
            t(&[5, 6, 7], "gamma"),
        ],
        constraints: cs(&["alpha*beta", "beta*gamma", "alpha*gamma"]),
        contradiction: true,
        split: vec![
            part(vec![f1(&[(1, "alpha")]), f1(&[(2, "1")]), f1(&[(7, "1")])]),
            part(vec![f1(&[(3, "beta")]), f1(&[(4, "1")]), f1(&[(7, "1")])]),
            part(vec![f1(&[(5, "gamma")]), f1(&[(6, "1")]), f1(&[(7, "1")])]),
        ],
        satisfier: sat_e7_so6,
        violating_guard: None,
    }
}

fn sat_e7_su3(_s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", Rat::zero());
    set(&mut p, "beta", Rat::zero());
    set(&mut p, "delta", Rat::zero());
    p
}

fn guard_e7_su3(p: &Params) -> bool {
    // The family hypothesis also needs the third torus coefficient
    // -alpha-beta nonzero.
    !(get(p, "alpha") + get(p, "beta")).is_zero()
}

fn case_e7_su3() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-su3",
        citation: "eq:hol3form1 template, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[3, 4, 7], "beta"),
            t(&[5, 6, 7], "-alpha - beta"),
            // delta times the real part of the holomorphic 3-form.
            t(&[1, 3, 5], "delta"),
            t(&[1, 4, 6], "-delta"),
            t(&[2, 3, 6], "-delta"),
            t(&[2, 4, 5], "-delta"),
        ],
        constraints: cs(&["alpha", "beta", "delta"]),
        contradiction: true,
        split: vec![],
        satisfier: sat_e7_su3,
        violating_guard: Some(guard_e7_su3),
    }
}

fn sat_e7_su2u1(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    match s.pick(3) {
        0 => {
            set(&mut p, "alpha", s.nonzero());
            set(&mut p, "beta", Rat::zero());
            set(&mut p, "delta", Rat::zero());
        }
        1 => {
            let b = s.nonzero();
            set(&mut p, "alpha", Rat::zero());
            set(&mut p, "beta", b.clone());
            set(&mut p, "delta", b);
        }
        _ => {
            let b = s.nonzero();
            set(&mut p, "alpha", Rat::zero());
            set(&mut p, "beta", b.clone());
            set(&mut p, "delta", -b);
        }
    }
    p
}

fn case_e7_su2u1() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-su2u1",
        citation: "su(2)xu(1) collapse, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[3, 4, 7], "beta + delta"),
            t(&[5, 6, 7], "beta - delta"),
        ],
        constraints: cs(&[
            "alpha*(beta + delta)",
            "alpha*(beta - delta)",
            "(beta + delta)*(beta - delta)",
        ]),
        contradiction: true,
        split: vec![
            part(vec![f1(&[(1, "alpha")]), f1(&[(2, "1")]), f1(&[(7, "1")])]),
            part(vec![
                f1(&[(3, "beta + delta")]),
                f1(&[(4, "1")]),
                f1(&[(7, "1")]),
            ]),
            part(vec![
                f1(&[(5, "beta - delta")]),
                f1(&[(6, "1")]),
                f1(&[(7, "1")]),
            ]),
        ],
        satisfier: sat_e7_su2u1,
        violating_guard: None,
    }
}

fn sat_e7_u1diag(_s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", Rat::zero());
    p
}

fn case_e7_u1diag() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-u1diag",
        citation: "u(1)-diagonal collapse, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[3, 4, 7], "alpha"),
            t(&[5, 6, 7], "alpha"),
        ],
        constraints: cs(&["alpha"]),
        contradiction: true,
        split: vec![],
        satisfier: sat_e7_u1diag,
        violating_guard: None,
    }
}

fn sat_e7_so4(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    if s.pick(2) == 0 {
        set(&mut p, "alpha", Rat::zero());
        set(&mut p, "beta", s.rat());
    } else {
        set(&mut p, "alpha", s.rat());
        set(&mut p, "beta", Rat::zero());
    }
    set(&mut p, "eps1", s.rat());
    p
}

fn case_e7_so4() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-so4",
        citation: "so(4) case, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[3, 4, 7], "beta"),
            t(&[3, 4, 5], "eps1"),
        ],
        constraints: cs(&["alpha*beta"]),
        contradiction: false,
        split: vec![
            part(vec![f1(&[(1, "alpha")]), f1(&[(2, "1")]), f1(&[(7, "1")])]),
            part(vec![
                f1(&[(3, "1")]),
                f1(&[(4, "1")]),
                f1(&[(7, "beta"), (5, "eps1")]),
            ]),
        ],
        satisfier: sat_e7_so4,
        violating_guard: None,
    }
}

fn sat_e7_su2(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let alpha = s.rat();
    let a = s.nonzero();
    let c = s.rat();
    let d = s.rat();
    let b = -((alpha.clone() * alpha.clone() + c.clone() * d.clone()) / a.clone());
    let half = rat(1, 2);
    set(&mut p, "alpha", alpha);
    set(&mut p, "delta", half.clone() * (a.clone() + b.clone()));
    set(&mut p, "eta1", half.clone() * (a - b));
    set(&mut p, "eps", half.clone() * (c.clone() + d.clone()));
    set(&mut p, "theta1", half * (c - d));
    p
}

fn case_e7_su2() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-su2",
        citation: "su(2) case, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[3, 4, 7], "alpha"),
            t(&[1, 2, 5], "delta + eta1"),
            t(&[3, 4, 5], "delta - eta1"),
            t(&[1, 2, 6], "eps + theta1"),
            t(&[3, 4, 6], "eps - theta1"),
        ],
        constraints: cs(&["alpha^2 + delta^2 - eta1^2 + eps^2 - theta1^2"]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(7, "alpha"), (5, "delta + eta1"), (6, "eps + theta1")]),
                f1(&[(1, "1")]),
                f1(&[(2, "1")]),
            ]),
            part(vec![
                f1(&[(7, "alpha"), (5, "delta - eta1"), (6, "eps - theta1")]),
                f1(&[(3, "1")]),
                f1(&[(4, "1")]),
            ]),
        ],
        satisfier: sat_e7_su2,
        violating_guard: None,
    }
}

fn sat_e7_so2(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", s.rat());
    if s.pick(2) == 0 {
        set(&mut p, "sigma1", Rat::zero());
        set(&mut p, "tau1", s.rat());
        set(&mut p, "tau2", s.rat());
    } else {
        set(&mut p, "sigma1", s.rat());
        set(&mut p, "tau1", Rat::zero());
        set(&mut p, "tau2", Rat::zero());
    }
    set(&mut p, "tau3", s.rat());
    p
}

fn case_e7_so2() -> AnsatzCase {
    AnsatzCase {
        name: "e7-p3-so2",
        citation: "so(2) case, d=7",
        dim: 7,
        time_dims: 0,
        degree: 3,
        template: vec![
            t(&[1, 2, 7], "alpha"),
            t(&[1, 2, 3], "sigma1"),
            t(&[3, 4, 5], "tau1"),
            t(&[3, 4, 6], "tau2"),
            t(&[4, 5, 6], "tau3"),
        ],
        constraints: cs(&["sigma1*tau1", "sigma1*tau2"]),
        contradiction: false,
        split: vec![],
        satisfier: sat_e7_so2,
        violating_guard: None,
    }
}

// ---------------------------------------------------------------------------
// d = 8 (4-forms)
// ---------------------------------------------------------------------------

fn sat_e8_so6(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", s.rat());
    set(&mut p, "eta", s.rat());
    for name in ["beta", "gamma", "delta", "eps"] {
        set(&mut p, name, Rat::zero());
    }
    p
}

fn case_e8_so6() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-so6",
        citation: "so(6) collapse, d=8",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "alpha"),
            t(&[1, 2, 5, 6], "beta"),
            t(&[1, 2, 7, 8], "gamma"),
            t(&[3, 4, 5, 6], "delta"),
            t(&[3, 4, 7, 8], "eps"),
            t(&[5, 6, 7, 8], "eta"),
        ],
        constraints: cs(&["beta", "gamma", "delta", "eps"]),
        contradiction: true,
        split: vec![
            part(vec![
                f1(&[(1, "alpha")]),
                f1(&[(2, "1")]),
                f1(&[(3, "1")]),
                f1(&[(4, "1")]),
            ]),
            part(vec![
                f1(&[(5, "eta")]),
                f1(&[(6, "1")]),
                f1(&[(7, "1")]),
                f1(&[(8, "1")]),
            ]),
        ],
        satisfier: sat_e8_so6,
        violating_guard: None,
    }
}

fn sat_e8_su3(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    for name in ["alpha", "beta", "lam1", "lam2", "lam3", "mu2", "mu3"] {
        set(&mut p, name, Rat::zero());
    }
    set(&mut p, "mu1", s.nonzero());
    p
}

fn guard_e8_su3(p: &Params) -> bool {
    let a = get(p, "alpha");
    let b = get(p, "beta");
    // Generic torus element: alpha != +-beta and the third coefficient
    // -alpha-beta nonzero.
    a.clone() != b.clone() && a.clone() != -b.clone() && !(a + b).is_zero()
}

fn case_e8_su3() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-su3",
        citation: "eq:hol3form template, d=8",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "alpha"),
            t(&[1, 2, 5, 6], "beta"),
            t(&[1, 2, 7, 8], "-alpha - beta"),
            // e1 wedge (lam1*Omega1 + lam2*Omega2), with Omega the
            // holomorphic 3-form on the 3..8 block.
            t(&[1, 3, 5, 7], "lam1"),
            t(&[1, 3, 6, 8], "-lam1"),
            t(&[1, 4, 5, 8], "-lam1"),
            t(&[1, 4, 6, 7], "-lam1"),
            t(&[1, 3, 5, 8], "lam2"),
            t(&[1, 3, 6, 7], "lam2"),
            t(&[1, 4, 5, 7], "lam2"),
            t(&[1, 4, 6, 8], "-lam2"),
            // e2 wedge lam3*Omega1 (the lam4 component is rotated away).
            t(&[2, 3, 5, 7], "lam3"),
            t(&[2, 3, 6, 8], "-lam3"),
            t(&[2, 4, 5, 8], "-lam3"),
            t(&[2, 4, 6, 7], "-lam3"),
            t(&[3, 4, 5, 6], "mu1"),
            t(&[3, 4, 7, 8], "mu2"),
            t(&[5, 6, 7, 8], "mu3"),
        ],
        constraints: cs(&["alpha", "beta", "lam1", "lam2", "lam3", "mu2", "mu3"]),
        contradiction: true,
        split: vec![part(vec![
            f1(&[(3, "mu1")]),
            f1(&[(4, "1")]),
            f1(&[(5, "1")]),
            f1(&[(6, "1")]),
        ])],
        satisfier: sat_e8_su3,
        violating_guard: Some(guard_e8_su3),
    }
}

fn sat_e8_su2u1(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", Rat::zero());
    set(&mut p, "gamma", s.rat());
    set(&mut p, "mu1", s.rat());
    set(&mut p, "mu2", Rat::zero());
    set(&mut p, "mu3", Rat::zero());
    p
}

fn guard_e8_su2u1(p: &Params) -> bool {
    get(p, "alpha") != get(p, "gamma")
}

fn case_e8_su2u1() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-su2u1",
        citation: "su(2)xu(1) collapse, d=8",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "alpha"),
            t(&[1, 2, 5, 6], "alpha"),
            t(&[1, 2, 7, 8], "gamma"),
            t(&[3, 4, 5, 6], "mu1"),
            t(&[3, 4, 7, 8], "mu2"),
            t(&[5, 6, 7, 8], "mu3"),
        ],
        constraints: cs(&["alpha", "mu2", "mu3"]),
        contradiction: true,
        split: vec![
            part(vec![
                f1(&[(1, "gamma")]),
                f1(&[(2, "1")]),
                f1(&[(7, "1")]),
                f1(&[(8, "1")]),
            ]),
            part(vec![
                f1(&[(3, "mu1")]),
                f1(&[(4, "1")]),
                f1(&[(5, "1")]),
                f1(&[(6, "1")]),
            ]),
        ],
        satisfier: sat_e8_su2u1,
        violating_guard: Some(guard_e8_su2u1),
    }
}

fn sat_e8_u1diag(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "alpha", Rat::zero());
    set(&mut p, "mu1", s.rat());
    set(&mut p, "mu2", Rat::zero());
    set(&mut p, "mu3", Rat::zero());
    p
}

fn case_e8_u1diag() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-u1diag",
        citation: "u(1)-diagonal collapse, d=8",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "alpha"),
            t(&[1, 2, 5, 6], "alpha"),
            t(&[1, 2, 7, 8], "alpha"),
            t(&[3, 4, 5, 6], "mu1"),
            t(&[3, 4, 7, 8], "mu2"),
            t(&[5, 6, 7, 8], "mu3"),
        ],
        constraints: cs(&["alpha", "mu2", "mu3"]),
        contradiction: true,
        split: vec![part(vec![
            f1(&[(3, "mu1")]),
            f1(&[(4, "1")]),
            f1(&[(5, "1")]),
            f1(&[(6, "1")]),
        ])],
        satisfier: sat_e8_u1diag,
        violating_guard: None,
    }
}

fn sat_e8_so4(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let alpha = s.nonzero();
    let beta = s.nonzero();
    let mu2 = s.nonzero();
    let nu1 = s.nonzero();
    set(&mut p, "mu3", alpha.clone() * beta.clone() / mu2.clone());
    set(&mut p, "nu3", -(Rat::one() / nu1.clone()));
    set(&mut p, "alpha", alpha);
    set(&mut p, "beta", beta);
    set(&mut p, "mu2", mu2);
    set(&mut p, "nu1", nu1);
    set(&mut p, "nu2", s.rat());
    p
}

fn case_e8_so4() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-so4",
        citation: "eq:e4so4",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "alpha"),
            t(&[1, 2, 5, 6], "beta"),
            t(&[5, 6, 7, 8], "mu3"),
            t(&[3, 4, 7, 8], "mu2"),
            t(&[1, 3, 4, 8], "nu1*alpha"),
            t(&[2, 5, 6, 7], "nu1*mu3"),
            t(&[1, 5, 6, 7], "nu2*beta"),
            t(&[2, 3, 4, 8], "-nu2*mu2"),
            t(&[1, 5, 6, 8], "nu3*beta"),
            t(&[2, 3, 4, 7], "nu3*mu2"),
        ],
        constraints: cs(&["nu1*nu3 + 1", "mu3*mu2 - alpha*beta"]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(1, "alpha"), (7, "-mu2*nu3"), (8, "mu2*nu2")]),
                f1(&[(2, "1"), (8, "nu1")]),
                f1(&[(3, "1")]),
                f1(&[(4, "1")]),
            ]),
            part(vec![
                f1(&[(1, "beta"), (7, "-mu3*nu1")]),
                f1(&[(2, "1"), (7, "nu2"), (8, "nu3")]),
                f1(&[(5, "1")]),
                f1(&[(6, "1")]),
            ]),
        ],
        satisfier: sat_e8_so4,
        violating_guard: None,
    }
}

fn sat_e8_su2_1(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let mu2 = s.nonzero();
    let lam2 = s.nonzero();
    set(&mut p, "mu3", Rat::one() / mu2.clone());
    set(&mut p, "lam4", -(Rat::one() / lam2.clone()));
    set(&mut p, "mu2", mu2);
    set(&mut p, "lam2", lam2);
    set(&mut p, "lam3", s.rat());
    p
}

fn case_e8_su2_1() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-su2-1",
        citation: "eq:e4su2-1",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "1"),
            t(&[1, 2, 5, 6], "1"),
            t(&[3, 4, 7, 8], "mu2"),
            t(&[5, 6, 7, 8], "mu3"),
            t(&[1, 3, 4, 8], "lam2"),
            t(&[2, 5, 6, 7], "lam2*mu3"),
            t(&[1, 5, 6, 7], "lam3"),
            t(&[2, 3, 4, 8], "-lam3*mu2"),
            t(&[1, 5, 6, 8], "lam4"),
            t(&[2, 3, 4, 7], "lam4*mu2"),
        ],
        constraints: cs(&["lam2*lam4 + 1", "mu2*mu3 - 1"]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(1, "1"), (7, "-mu2*lam4"), (8, "mu2*lam3")]),
                f1(&[(2, "1"), (8, "lam2")]),
                f1(&[(3, "1")]),
                f1(&[(4, "1")]),
            ]),
            part(vec![
                f1(&[(1, "1"), (7, "-mu3*lam2")]),
                f1(&[(2, "1"), (7, "lam3"), (8, "lam4")]),
                f1(&[(5, "1")]),
                f1(&[(6, "1")]),
            ]),
        ],
        satisfier: sat_e8_su2_1,
        violating_guard: None,
    }
}

fn sat_e8_su2p(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let sign = if s.pick(2) == 0 { Rat::one() } else { -Rat::one() };
    set(&mut p, "mu2", sign);
    if s.pick(2) == 0 {
        // sigma = 0 branch.
        let lam2 = s.nonzero();
        set(&mut p, "lam4", -(Rat::one() / lam2.clone()));
        set(&mut p, "lam2", lam2);
        set(&mut p, "lam3", s.rat());
        set(&mut p, "sig1", Rat::zero());
        set(&mut p, "sig3", Rat::zero());
        set(&mut p, "sig4", Rat::zero());
    } else {
        // lam3 = sig4 = 0, lam2 = lam4, and (sig1, sig3, lam2) rational
        // on x^2 + y^2 - z^2 = 1 via a line through (1, 0, 0).
        let (x, y, z) = loop {
            let a = s.rat();
            let b = s.rat();
            let c = s.rat();
            let den =
                a.clone() * a.clone() + b.clone() * b.clone() - c.clone() * c.clone();
            if den.is_zero() {
                continue;
            }
            let tpar = -(rint(2) * a.clone()) / den;
            break (
                Rat::one() + tpar.clone() * a,
                tpar.clone() * b,
                tpar * c,
            );
        };
        set(&mut p, "sig1", x);
        set(&mut p, "sig3", y);
        set(&mut p, "lam2", z.clone());
        set(&mut p, "lam4", z);
        set(&mut p, "lam3", Rat::zero());
        set(&mut p, "sig4", Rat::zero());
    }
    p
}

fn case_e8_su2p() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-su2p",
        citation: "eq:e4su2'",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "1"),
            t(&[1, 2, 5, 6], "1"),
            t(&[3, 4, 7, 8], "mu2"),
            t(&[5, 6, 7, 8], "mu2"),
            t(&[1, 3, 4, 8], "lam2"),
            t(&[2, 5, 6, 7], "lam2*mu2"),
            t(&[1, 5, 6, 7], "lam3"),
            t(&[2, 3, 4, 8], "-lam3*mu2"),
            t(&[1, 5, 6, 8], "lam4"),
            t(&[2, 3, 4, 7], "lam4*mu2"),
            t(&[1, 3, 5, 7], "sig1"),
            t(&[1, 4, 6, 7], "sig1"),
            t(&[2, 3, 5, 8], "sig1*mu2"),
            t(&[2, 4, 6, 8], "sig1*mu2"),
            t(&[1, 3, 5, 8], "sig3"),
            t(&[1, 4, 6, 8], "sig3"),
            t(&[2, 3, 5, 7], "-sig3*mu2"),
            t(&[2, 4, 6, 7], "-sig3*mu2"),
            t(&[1, 3, 6, 8], "sig4"),
            t(&[1, 4, 5, 8], "-sig4"),
            t(&[2, 3, 6, 7], "-sig4*mu2"),
            t(&[2, 4, 5, 7], "sig4*mu2"),
        ],
        constraints: cs(&[
            "lam3*sig4",
            "sig1*sig4",
            "(lam2 - lam4)*sig1 + lam3*sig3",
            "sig1^2 + sig3^2 + sig4^2 - 1 - lam2*lam4",
            "mu2^2 - 1",
        ]),
        contradiction: false,
        split: vec![],
        satisfier: sat_e8_su2p,
        violating_guard: None,
    }
}

fn sat_e8_u1_1(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    for name in ["sig1", "sig2", "sig5", "sig6"] {
        set(&mut p, name, s.rat());
    }
    let mu1 = get(&p, "sig1") * get(&p, "sig6") - get(&p, "sig2") * get(&p, "sig5");
    set(&mut p, "mu1", mu1);
    p
}

fn case_e8_u1_1() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-u1-1",
        citation: "eq:e4u1-1",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "1"),
            t(&[3, 4, 5, 6], "mu1"),
            t(&[1, 3, 4, 5], "sig1"),
            t(&[1, 3, 4, 6], "sig2"),
            t(&[2, 3, 4, 5], "sig5"),
            t(&[2, 3, 4, 6], "sig6"),
        ],
        constraints: cs(&["sig1*sig6 - sig2*sig5 - mu1"]),
        contradiction: false,
        split: vec![part(vec![
            f1(&[(1, "1"), (5, "-sig5"), (6, "-sig6")]),
            f1(&[(2, "1"), (5, "sig1"), (6, "sig2")]),
            f1(&[(3, "1")]),
            f1(&[(4, "1")]),
        ])],
        satisfier: sat_e8_u1_1,
        violating_guard: None,
    }
}

fn sat_e8_u1_2(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let tpar = s.rat();
    for (top, bottom) in [
        ("sig1", "sig5"),
        ("sig2", "sig6"),
        ("lam1", "lam5"),
        ("lam2", "lam6"),
    ] {
        let v = s.rat();
        set(&mut p, bottom, tpar.clone() * v.clone());
        set(&mut p, top, v);
    }
    p
}

fn case_e8_u1_2() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-u1-2",
        citation: "eq:e4u1-2",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "1"),
            t(&[1, 3, 4, 7], "lam1"),
            t(&[1, 3, 4, 8], "lam2"),
            t(&[2, 3, 4, 7], "lam5"),
            t(&[2, 3, 4, 8], "lam6"),
            t(&[1, 3, 4, 5], "sig1"),
            t(&[1, 3, 4, 6], "sig2"),
            t(&[2, 3, 4, 5], "sig5"),
            t(&[2, 3, 4, 6], "sig6"),
        ],
        constraints: cs(&[
            "sig1*sig6 - sig2*sig5",
            "sig1*lam5 - lam1*sig5",
            "sig1*lam6 - lam2*sig5",
            "sig2*lam5 - lam1*sig6",
            "sig2*lam6 - lam2*sig6",
            "lam1*lam6 - lam2*lam5",
        ]),
        contradiction: false,
        split: vec![part(vec![
            f1(&[(1, "1"), (5, "-sig5"), (6, "-sig6"), (7, "-lam5"), (8, "-lam6")]),
            f1(&[(2, "1"), (5, "sig1"), (6, "sig2"), (7, "lam1"), (8, "lam2")]),
            f1(&[(3, "1")]),
            f1(&[(4, "1")]),
        ])],
        satisfier: sat_e8_u1_2,
        violating_guard: None,
    }
}

fn sat_e8_u1_3(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    set(&mut p, "mu3", s.nonzero());
    match s.pick(3) {
        0 => {
            let lam2 = s.nonzero();
            let lam6 = s.rat();
            let sig2 = s.rat();
            set(&mut p, "sig6", lam6.clone() * sig2.clone() / lam2.clone());
            set(&mut p, "lam2", lam2);
            set(&mut p, "lam6", lam6);
            set(&mut p, "sig2", sig2);
            set(&mut p, "lam5", Rat::zero());
            set(&mut p, "sig5", Rat::zero());
        }
        1 => {
            for name in ["lam2", "lam5", "lam6", "sig5"] {
                set(&mut p, name, Rat::zero());
            }
            set(&mut p, "sig2", s.nonzero());
            set(&mut p, "sig6", s.rat());
        }
        _ => {
            set(&mut p, "lam2", Rat::zero());
            set(&mut p, "sig2", Rat::zero());
            for name in ["lam5", "lam6", "sig5", "sig6"] {
                set(&mut p, name, s.rat());
            }
        }
    }
    p
}

fn case_e8_u1_3() -> AnsatzCase {
    AnsatzCase {
        name: "e8-p4-u1-3",
        citation: "eq:e4u1-3",
        dim: 8,
        time_dims: 0,
        degree: 4,
        template: vec![
            t(&[1, 2, 3, 4], "1"),
            t(&[5, 6, 7, 8], "mu3"),
            t(&[1, 3, 4, 8], "lam2"),
            t(&[2, 5, 6, 7], "lam2*mu3"),
            t(&[2, 3, 4, 7], "lam5"),
            t(&[1, 5, 6, 8], "lam5*mu3"),
            t(&[2, 3, 4, 8], "lam6"),
            t(&[1, 5, 6, 7], "-lam6*mu3"),
            t(&[1, 3, 4, 6], "sig2"),
            t(&[2, 5, 7, 8], "sig2*mu3"),
            t(&[2, 3, 4, 5], "sig5"),
            t(&[1, 6, 7, 8], "sig5*mu3"),
            t(&[2, 3, 4, 6], "sig6"),
            t(&[1, 5, 7, 8], "-sig6*mu3"),
        ],
        constraints: cs(&[
            "lam2*lam5",
            "lam2*sig5",
            "sig2*lam5",
            "sig2*sig5",
            "lam6*sig2 - lam2*sig6",
        ]),
        contradiction: false,
        split: vec![
            part(vec![
                f1(&[(1, "1"), (5, "-sig5"), (6, "-sig6"), (7, "-lam5"), (8, "-lam6")]),
                f1(&[(2, "1"), (6, "sig2"), (8, "lam2")]),
                f1(&[(3, "1")]),
                f1(&[(4, "1")]),
            ]),
            scaled_part(
                "mu3",
                vec![
                    f1(&[(5, "1"), (1, "sig5")]),
                    f1(&[(6, "1"), (1, "sig6"), (2, "-sig2")]),
                    f1(&[(7, "1"), (1, "lam5")]),
                    f1(&[(8, "1"), (1, "lam6"), (2, "-lam2")]),
                ],
            ),
        ],
        satisfier: sat_e8_u1_3,
        violating_guard: None,
    }
}

// ---------------------------------------------------------------------------
// d = 10, lorentzian (5-forms)
// ---------------------------------------------------------------------------

fn sat_m10_so4(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    for k in 1..=9 {
        set(&mut p, &format!("lam{k}"), s.rat());
    }
    set(&mut p, "mu3", s.nonzero());
    set(&mut p, "mu1", Rat::zero());
    let c = case_m10_so4().constraints;
    apply_defining(&c, &mut p);
    p
}

fn case_m10_so4() -> AnsatzCase {
    AnsatzCase {
        name: "m10-p5-so4",
        citation: "eq:m5so4",
        dim: 10,
        time_dims: 1,
        degree: 5,
        template: vec![
            tm(&[0, 1, 2, 3, 4], "1"),
            tm(&[0, 1, 2, 5, 6], "beta"),
            tm(&[3, 4, 5, 6, 9], "mu1"),
            tm(&[3, 4, 7, 8, 9], "mu2"),
            tm(&[5, 6, 7, 8, 9], "mu3"),
            tm(&[0, 1, 3, 4, 7], "lam1"),
            tm(&[0, 2, 3, 4, 7], "lam2"),
            tm(&[1, 2, 3, 4, 7], "lam3"),
            tm(&[0, 1, 3, 4, 8], "lam4"),
            tm(&[0, 2, 3, 4, 8], "lam5"),
            tm(&[1, 2, 3, 4, 8], "lam6"),
            tm(&[0, 1, 3, 4, 9], "lam7"),
            tm(&[0, 2, 3, 4, 9], "lam8"),
            tm(&[1, 2, 3, 4, 9], "lam9"),
            tm(&[0, 1, 5, 6, 7], "sig1"),
            tm(&[0, 2, 5, 6, 7], "sig2"),
            tm(&[1, 2, 5, 6, 7], "sig3"),
            tm(&[0, 1, 5, 6, 8], "sig4"),
            tm(&[0, 2, 5, 6, 8], "sig5"),
            tm(&[1, 2, 5, 6, 8], "sig6"),
            tm(&[0, 1, 5, 6, 9], "sig7"),
            tm(&[0, 2, 5, 6, 9], "sig8"),
            tm(&[1, 2, 5, 6, 9], "sig9"),
            tm(&[0, 3, 4, 7, 8], "rho1"),
            tm(&[1, 3, 4, 7, 8], "rho2"),
            tm(&[2, 3, 4, 7, 8], "rho3"),
            tm(&[0, 3, 4, 7, 9], "rho4"),
            tm(&[1, 3, 4, 7, 9], "rho5"),
            tm(&[2, 3, 4, 7, 9], "rho6"),
            tm(&[0, 3, 4, 8, 9], "rho7"),
            tm(&[1, 3, 4, 8, 9], "rho8"),
            tm(&[2, 3, 4, 8, 9], "rho9"),
            tm(&[0, 5, 6, 7, 8], "tau1"),
            tm(&[1, 5, 6, 7, 8], "tau2"),
            tm(&[2, 5, 6, 7, 8], "tau3"),
            tm(&[0, 5, 6, 7, 9], "tau4"),
            tm(&[1, 5, 6, 7, 9], "tau5"),
            tm(&[2, 5, 6, 7, 9], "tau6"),
            tm(&[0, 5, 6, 8, 9], "tau7"),
            tm(&[1, 5, 6, 8, 9], "tau8"),
            tm(&[2, 5, 6, 8, 9], "tau9"),
        ],
        constraints: cs(&[
            "mu1",
            "rho1 - (lam1*lam5 - lam2*lam4)",
            "rho2 - (lam1*lam6 - lam3*lam4)",
            "rho3 - (lam2*lam6 - lam3*lam5)",
            "rho4 - (lam1*lam8 - lam2*lam7)",
            "rho5 - (lam1*lam9 - lam3*lam7)",
            "rho6 - (lam2*lam9 - lam3*lam8)",
            "rho7 - (lam4*lam8 - lam5*lam7)",
            "rho8 - (lam4*lam9 - lam6*lam7)",
            "rho9 - (lam5*lam9 - lam6*lam8)",
            "mu2 - (lam1*lam5*lam9 - lam3*lam5*lam7 + lam2*lam6*lam7 \
             + lam3*lam4*lam8 - lam1*lam6*lam8 - lam2*lam4*lam9)",
            "beta - mu2*mu3",
            "sig1 - (-mu3*rho9)",
            "sig2 - mu3*rho8",
            "sig3 - mu3*rho7",
            "sig4 - mu3*rho6",
            "sig5 - (-mu3*rho5)",
            "sig6 - (-mu3*rho4)",
            "sig7 - (-mu3*rho3)",
            "sig8 - mu3*rho2",
            "sig9 - mu3*rho1",
            "tau1 - mu3*lam9",
            "tau2 - mu3*lam8",
            "tau3 - (-mu3*lam7)",
            "tau4 - (-mu3*lam6)",
            "tau5 - (-mu3*lam5)",
            "tau6 - mu3*lam4",
            "tau7 - mu3*lam3",
            "tau8 - mu3*lam2",
            "tau9 - (-mu3*lam1)",
        ]),
        contradiction: false,
        split: vec![
            part(vec![
                f0(&[(0, "1"), (7, "lam3"), (8, "lam6"), (9, "lam9")]),
                f0(&[(1, "1"), (7, "-lam2"), (8, "-lam5"), (9, "-lam8")]),
                f0(&[(2, "1"), (7, "lam1"), (8, "lam4"), (9, "lam7")]),
                f0(&[(3, "1")]),
                f0(&[(4, "1")]),
            ]),
            scaled_part(
                "mu3",
                vec![
                    f0(&[(5, "1")]),
                    f0(&[(6, "1")]),
                    f0(&[(7, "1"), (0, "lam3"), (1, "lam2"), (2, "-lam1")]),
                    f0(&[(8, "1"), (0, "lam6"), (1, "lam5"), (2, "-lam4")]),
                    f0(&[(9, "1"), (0, "lam9"), (1, "lam8"), (2, "-lam7")]),
                ],
            ),
        ],
        satisfier: sat_m10_so4,
        violating_guard: None,
    }
}

fn sat_m10_su2_1(s: &mut dyn ParamSampler) -> Params {
    let c = case_m10_su2_1().constraints;
    loop {
        let mut p = Params::new();
        for k in 1..=3 {
            set(&mut p, &format!("lam{k}"), s.rat());
            set(&mut p, &format!("rho{k}"), s.rat());
            set(&mut p, &format!("sig{k}"), s.rat());
        }
        apply_defining(&c, &mut p);
        let mu2 = get(&p, "mu2");
        if mu2.is_zero() {
            continue;
        }
        set(&mut p, "mu3", Rat::one() / mu2);
        apply_defining(&c, &mut p);
        return p;
    }
}

fn case_m10_su2_1() -> AnsatzCase {
    AnsatzCase {
        name: "m10-p5-su2-1",
        citation: "eq:m5su2-1",
        dim: 10,
        time_dims: 1,
        degree: 5,
        template: vec![
            // e_34 wedge G_1
            tm(&[3, 4, 0, 1, 2], "1"),
            tm(&[3, 4, 7, 8, 9], "mu2"),
            tm(&[3, 4, 0, 1, 7], "lam1"),
            tm(&[3, 4, 0, 1, 8], "lam2"),
            tm(&[3, 4, 0, 1, 9], "lam3"),
            tm(&[3, 4, 0, 2, 7], "rho1"),
            tm(&[3, 4, 0, 2, 8], "rho2"),
            tm(&[3, 4, 0, 2, 9], "rho3"),
            tm(&[3, 4, 1, 2, 7], "sig1"),
            tm(&[3, 4, 1, 2, 8], "sig2"),
            tm(&[3, 4, 1, 2, 9], "sig3"),
            tm(&[3, 4, 0, 7, 8], "eta2"),
            tm(&[3, 4, 0, 7, 9], "eta3"),
            tm(&[3, 4, 0, 8, 9], "eta4"),
            tm(&[3, 4, 1, 7, 8], "phi2"),
            tm(&[3, 4, 1, 7, 9], "phi3"),
            tm(&[3, 4, 1, 8, 9], "phi4"),
            tm(&[3, 4, 2, 7, 8], "tau2"),
            tm(&[3, 4, 2, 7, 9], "tau3"),
            tm(&[3, 4, 2, 8, 9], "tau4"),
            // e_56 wedge G_2
            tm(&[5, 6, 0, 1, 2], "1"),
            tm(&[5, 6, 7, 8, 9], "mu3"),
            tm(&[5, 6, 0, 1, 7], "lam4"),
            tm(&[5, 6, 0, 1, 8], "lam5"),
            tm(&[5, 6, 0, 1, 9], "lam6"),
            tm(&[5, 6, 0, 2, 7], "rho4"),
            tm(&[5, 6, 0, 2, 8], "rho5"),
            tm(&[5, 6, 0, 2, 9], "rho6"),
            tm(&[5, 6, 1, 2, 7], "sig4"),
            tm(&[5, 6, 1, 2, 8], "sig5"),
            tm(&[5, 6, 1, 2, 9], "sig6"),
            tm(&[5, 6, 0, 7, 8], "eta5"),
            tm(&[5, 6, 0, 7, 9], "eta6"),
            tm(&[5, 6, 0, 8, 9], "eta7"),
            tm(&[5, 6, 1, 7, 8], "phi5"),
            tm(&[5, 6, 1, 7, 9], "phi6"),
            tm(&[5, 6, 1, 8, 9], "phi7"),
            tm(&[5, 6, 2, 7, 8], "tau5"),
            tm(&[5, 6, 2, 7, 9], "tau6"),
            tm(&[5, 6, 2, 8, 9], "tau7"),
        ],
        constraints: cs(&[
            "lam4 - mu3*(rho3*sig2 - rho2*sig3)",
            "lam5 - mu3*(rho1*sig3 - rho3*sig1)",
            "lam6 - mu3*(rho2*sig1 - rho1*sig2)",
            "rho4 - mu3*(lam2*sig3 - lam3*sig2)",
            "rho5 - mu3*(lam3*sig1 - lam1*sig3)",
            "rho6 - mu3*(lam1*sig2 - lam2*sig1)",
            "sig4 - mu3*(lam2*rho3 - lam3*rho2)",
            "sig5 - mu3*(lam3*rho1 - lam1*rho3)",
            "sig6 - mu3*(lam1*rho2 - lam2*rho1)",
            "eta2 - mu2*sig6",
            "eta3 - (-mu2*sig5)",
            "eta4 - mu2*sig4",
            "eta5 - mu3*sig3",
            "eta6 - (-mu3*sig2)",
            "eta7 - mu3*sig1",
            "phi2 - mu2*rho6",
            "phi3 - (-mu2*rho5)",
            "phi4 - mu2*rho4",
            "phi5 - mu3*rho3",
            "phi6 - (-mu3*rho2)",
            "phi7 - mu3*rho1",
            "tau2 - (-mu2*lam6)",
            "tau3 - mu2*lam5",
            "tau4 - (-mu2*lam4)",
            "tau5 - (-mu3*lam3)",
            "tau6 - mu3*lam2",
            "tau7 - (-mu3*lam1)",
            "mu2 - (lam1*rho2*sig3 + lam2*rho3*sig1 + lam3*rho1*sig2 \
             - lam1*rho3*sig2 - lam2*rho1*sig3 - lam3*rho2*sig1)",
            "mu2*mu3 - 1",
        ]),
        contradiction: false,
        split: vec![
            part(vec![
                f0(&[(0, "1"), (7, "sig1"), (8, "sig2"), (9, "sig3")]),
                f0(&[(1, "1"), (7, "-rho1"), (8, "-rho2"), (9, "-rho3")]),
                f0(&[(2, "1"), (7, "lam1"), (8, "lam2"), (9, "lam3")]),
                f0(&[(3, "1")]),
                f0(&[(4, "1")]),
            ]),
            scaled_part(
                "mu3",
                vec![
                    f0(&[(5, "1")]),
                    f0(&[(6, "1")]),
                    f0(&[(7, "1"), (0, "sig1"), (1, "rho1"), (2, "-lam1")]),
                    f0(&[(8, "1"), (0, "sig2"), (1, "rho2"), (2, "-lam2")]),
                    f0(&[(9, "1"), (0, "sig3"), (1, "rho3"), (2, "-lam3")]),
                ],
            ),
        ],
        satisfier: sat_m10_su2_1,
        violating_guard: None,
    }
}

fn sat_m10_u1_1(s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    for k in [1usize, 2, 5] {
        set(&mut p, &format!("lam{k}"), s.rat());
        set(&mut p, &format!("sig{k}"), s.rat());
        set(&mut p, &format!("rho{k}"), s.rat());
    }
    let c = case_m10_u1_1().constraints;
    apply_defining(&c, &mut p);
    p
}

fn case_m10_u1_1() -> AnsatzCase {
    AnsatzCase {
        name: "m10-p5-u1-1",
        citation: "eq:m5u1-1",
        dim: 10,
        time_dims: 1,
        degree: 5,
        template: vec![
            tm(&[3, 4, 0, 1, 2], "1"),
            tm(&[3, 4, 5, 6, 9], "mu1"),
            tm(&[3, 4, 0, 1, 5], "lam1"),
            tm(&[3, 4, 0, 1, 6], "lam2"),
            tm(&[3, 4, 0, 1, 9], "lam5"),
            tm(&[3, 4, 0, 2, 5], "sig1"),
            tm(&[3, 4, 0, 2, 6], "sig2"),
            tm(&[3, 4, 0, 2, 9], "sig5"),
            tm(&[3, 4, 1, 2, 5], "rho1"),
            tm(&[3, 4, 1, 2, 6], "rho2"),
            tm(&[3, 4, 1, 2, 9], "rho5"),
            tm(&[3, 4, 0, 5, 6], "tau1"),
            tm(&[3, 4, 0, 5, 9], "tau4"),
            tm(&[3, 4, 0, 6, 9], "tau7"),
            tm(&[3, 4, 1, 5, 6], "phi1"),
            tm(&[3, 4, 1, 5, 9], "phi4"),
            tm(&[3, 4, 1, 6, 9], "phi7"),
            tm(&[3, 4, 2, 5, 6], "eta1"),
            tm(&[3, 4, 2, 5, 9], "eta4"),
            tm(&[3, 4, 2, 6, 9], "eta7"),
        ],
        constraints: cs(&[
            "tau1 - (lam1*sig2 - lam2*sig1)",
            "tau4 - (lam1*sig5 - lam5*sig1)",
            "tau7 - (lam2*sig5 - lam5*sig2)",
            "phi1 - (lam1*rho2 - lam2*rho1)",
            "phi4 - (lam1*rho5 - lam5*rho1)",
            "phi7 - (lam2*rho5 - lam5*rho2)",
            "eta1 - (sig1*rho2 - sig2*rho1)",
            "eta4 - (sig1*rho5 - sig5*rho1)",
            "eta7 - (sig2*rho5 - sig5*rho2)",
            "mu1 - (lam5*rho2*sig1 - lam2*rho5*sig1 - lam5*rho1*sig2 \
             + lam1*rho5*sig2 + lam2*rho1*sig5 - lam1*rho2*sig5)",
        ]),
        contradiction: false,
        split: vec![part(vec![
            f0(&[(3, "1")]),
            f0(&[(4, "1")]),
            f0(&[(0, "1"), (5, "rho1"), (6, "rho2"), (9, "rho5")]),
            f0(&[(1, "1"), (5, "-sig1"), (6, "-sig2"), (9, "-sig5")]),
            f0(&[(2, "1"), (5, "lam1"), (6, "lam2"), (9, "lam5")]),
        ])],
        satisfier: sat_m10_u1_1,
        violating_guard: None,
    }
}

/// Column pairs of the 3×5 coefficient matrix, in the order the
/// `tau/phi/eta` parameters are numbered.
const M5_PAIRS: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

fn m5_null_template() -> Vec<(Vec<usize>, Expr)> {
    let mut tpl = vec![tm(&[3, 4, 0, 1, 2], "1")];
    for k in 1..=5 {
        let c = 4 + k;
        tpl.push(tm(&[3, 4, 0, 1, c], &format!("lam{k}")));
        tpl.push(tm(&[3, 4, 0, 2, c], &format!("sig{k}")));
        tpl.push(tm(&[3, 4, 1, 2, c], &format!("rho{k}")));
    }
    for (n, (i, j)) in M5_PAIRS.iter().enumerate() {
        let (n, ci, cj) = (n + 1, 4 + i, 4 + j);
        tpl.push(tm(&[3, 4, 0, ci, cj], &format!("tau{n}")));
        tpl.push(tm(&[3, 4, 1, ci, cj], &format!("phi{n}")));
        tpl.push(tm(&[3, 4, 2, ci, cj], &format!("eta{n}")));
    }
    tpl
}

fn m5_null_constraints() -> Vec<Expr> {
    let mut out = Vec::new();
    // The 2x2-minor parameters of the 3x5 matrix with rows lam, rho, sig.
    for (n, (i, j)) in M5_PAIRS.iter().enumerate() {
        let n = n + 1;
        out.push(e(&format!("tau{n} - (lam{i}*sig{j} - lam{j}*sig{i})")));
        out.push(e(&format!("phi{n} - (lam{i}*rho{j} - lam{j}*rho{i})")));
        out.push(e(&format!("eta{n} - (sig{i}*rho{j} - sig{j}*rho{i})")));
    }
    // All 3x3 minors vanish: the matrix has rank at most two.
    for i in 1..=5usize {
        for j in i + 1..=5 {
            for k in j + 1..=5 {
                out.push(e(&format!(
                    "lam{i}*(rho{j}*sig{k} - rho{k}*sig{j}) \
                     - lam{j}*(rho{i}*sig{k} - rho{k}*sig{i}) \
                     + lam{k}*(rho{i}*sig{j} - rho{j}*sig{i})"
                )));
            }
        }
    }
    out
}

fn m5_null_simple_part() -> SplitPart {
    let mut theta0 = vec![(0usize, "1".to_string())];
    let mut theta1 = vec![(1usize, "1".to_string())];
    let mut theta2 = vec![(2usize, "1".to_string())];
    for k in 1..=5usize {
        theta0.push((4 + k, format!("rho{k}")));
        theta1.push((4 + k, format!("-sig{k}")));
        theta2.push((4 + k, format!("lam{k}")));
    }
    let to_factor = |v: Vec<(usize, String)>| -> FactorSpec {
        v.into_iter().map(|(i, c)| (i + 1, e(&c))).collect()
    };
    part(vec![
        f0(&[(3, "1")]),
        f0(&[(4, "1")]),
        to_factor(theta0),
        to_factor(theta1),
        to_factor(theta2),
    ])
}

fn sat_m5_null(constraints: &[Expr], s: &mut dyn ParamSampler) -> Params {
    let mut p = Params::new();
    let a = s.rat();
    let b = s.rat();
    for k in 1..=5 {
        let lam = s.rat();
        let sig = s.rat();
        set(
            &mut p,
            &format!("rho{k}"),
            a.clone() * lam.clone() + b.clone() * sig.clone(),
        );
        set(&mut p, &format!("lam{k}"), lam);
        set(&mut p, &format!("sig{k}"), sig);
    }
    apply_defining(constraints, &mut p);
    p
}

fn sat_m10_u1_2(s: &mut dyn ParamSampler) -> Params {
    sat_m5_null(&m5_null_constraints(), s)
}

fn case_m10_u1_2() -> AnsatzCase {
    AnsatzCase {
        name: "m10-p5-u1-2",
        citation: "eq:m5u1-2",
        dim: 10,
        time_dims: 1,
        degree: 5,
        template: m5_null_template(),
        constraints: m5_null_constraints(),
        contradiction: false,
        split: vec![m5_null_simple_part()],
        satisfier: sat_m10_u1_2,
        violating_guard: None,
    }
}

fn m5_u1_3_template() -> Vec<(Vec<usize>, Expr)> {
    let mut tpl = m5_null_template();
    tpl.push(tm(&[5, 6, 7, 8, 9], "mu3"));
    // Second summand: mu3 times the 5-form whose coefficients repeat the
    // minor parameters on the complementary blades.
    for (n, (i, j)) in M5_PAIRS.iter().enumerate() {
        let n1 = n + 1;
        let triple: Vec<usize> = (1..=5)
            .filter(|k| k != i && k != j)
            .map(|k| 4 + k)
            .collect();
        let s_eta = if (i + j) % 2 == 1 { "-" } else { "" };
        let s_other = if (i + j) % 2 == 1 { "" } else { "-" };
        tpl.push(tm(
            &[vec![0, 1], triple.clone()].concat(),
            &format!("{s_eta}mu3*eta{n1}"),
        ));
        tpl.push(tm(
            &[vec![0, 2], triple.clone()].concat(),
            &format!("{s_other}mu3*phi{n1}"),
        ));
        tpl.push(tm(
            &[vec![1, 2], triple].concat(),
            &format!("{s_other}mu3*tau{n1}"),
        ));
    }
    for k in 1..=5usize {
        let quad: Vec<usize> = (1..=5).filter(|x| *x != k).map(|x| 4 + x).collect();
        let s_rs = if k % 2 == 0 { "-" } else { "" };
        let s_l = if k % 2 == 0 { "" } else { "-" };
        tpl.push(tm(
            &[vec![0], quad.clone()].concat(),
            &format!("{s_rs}mu3*rho{k}"),
        ));
        tpl.push(tm(
            &[vec![1], quad.clone()].concat(),
            &format!("{s_rs}mu3*sig{k}"),
        ));
        tpl.push(tm(&[vec![2], quad].concat(), &format!("{s_l}mu3*lam{k}")));
    }
    tpl
}

fn sat_m10_u1_3(s: &mut dyn ParamSampler) -> Params {
    let mut p = sat_m5_null(&m5_null_constraints(), s);
    set(&mut p, "mu3", s.nonzero());
    p
}

fn case_m10_u1_3() -> AnsatzCase {
    let mut theta = Vec::new();
    for k in 1..=5usize {
        theta.push(
            [
                (4 + k, format!("1")),
                (0, format!("rho{k}")),
                (1, format!("sig{k}")),
                (2, format!("-lam{k}")),
            ]
            .into_iter()
            .map(|(i, c)| (i + 1, e(&c)))
            .collect::<FactorSpec>(),
        );
    }
    AnsatzCase {
        name: "m10-p5-u1-3",
        citation: "eq:m5u1-2 with second summand",
        dim: 10,
        time_dims: 1,
        degree: 5,
        template: m5_u1_3_template(),
        constraints: m5_null_constraints(),
        contradiction: false,
        split: vec![
            m5_null_simple_part(),
            SplitPart {
                scale: Some(e("mu3")),
                factors: theta,
            },
        ],
        satisfier: sat_m10_u1_3,
        violating_guard: None,
    }
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// All built-in cases.
pub fn builtin_cases() -> Vec<AnsatzCase> {
    vec![
        case_e6_so4(),
        case_e6_su2(),
        case_e6_so2(),
        case_m6_so4(),
        case_m6_su2(),
        case_m6_so2(),
        case_e7_so6(),
        case_e7_su3(),
        case_e7_su2u1(),
        case_e7_u1diag(),
        case_e7_so4(),
        case_e7_su2(),
        case_e7_so2(),
        case_e8_so6(),
        case_e8_su3(),
        case_e8_su2u1(),
        case_e8_u1diag(),
        case_e8_so4(),
        case_e8_su2_1(),
        case_e8_su2p(),
        case_e8_u1_1(),
        case_e8_u1_2(),
        case_e8_u1_3(),
        case_m10_so4(),
        case_m10_su2_1(),
        case_m10_u1_1(),
        case_m10_u1_2(),
        case_m10_u1_3(),
    ]
}

/// Look up a case by name.
pub fn case_by_name(name: &str) -> Option<AnsatzCase> {
    builtin_cases().into_iter().find(|c| c.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker::relation_holds;
    use crate::decomp::verify_orthogonal_sum;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn expression_parser_round_trips() {
        let mut p = Params::new();
        set(&mut p, "alpha", rat(2, 1));
        set(&mut p, "beta", rat(-1, 3));
        let ex = e("alpha^2 - 3*(beta + 1/3) - (-alpha)*beta");
        assert_eq!(ex.eval(&p).unwrap(), rat(4, 1) - rat(0, 1) - rat(2, 3));
        assert!(parse_expr("alpha +").is_err());
        assert!(parse_expr("(alpha").is_err());
        assert!(e("gamma").eval(&p).is_err());
    }

    #[test]
    fn defining_constraints_resolve_in_any_order() {
        let constraints = cs(&["b - a*a", "c - a*b", "nondefining*c - 1"]);
        let mut p = Params::new();
        set(&mut p, "a", rat(3, 1));
        apply_defining(&constraints, &mut p);
        assert_eq!(get(&p, "b"), rat(9, 1));
        assert_eq!(get(&p, "c"), rat(27, 1));
        assert!(!p.contains_key("nondefining"));
    }

    #[test]
    fn every_case_matches_the_exact_relation_checker() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for case in builtin_cases() {
            let mut s = RngSampler::new(&mut rng, 4);
            for trial in 0..3 {
                let params = case.sample_satisfying(&mut s);
                assert!(
                    case.constraints_hold(&params).unwrap(),
                    "case {} trial {trial}: satisfying sampler violated a constraint",
                    case.name
                );
                let f = case.instantiate(&params).unwrap();
                assert!(
                    relation_holds(&f).unwrap(),
                    "case {} trial {trial}: relation fails at satisfying point {params:?}",
                    case.name
                );
                if let Some(d) = case.claimed_split(&params).unwrap() {
                    assert!(
                        verify_orthogonal_sum(&f, &d).unwrap(),
                        "case {} trial {trial}: claimed split rejected at {params:?}",
                        case.name
                    );
                }
            }
            for trial in 0..2 {
                let params = case.sample_violating(&mut s).unwrap();
                assert!(!case.constraints_hold(&params).unwrap());
                let f = case.instantiate(&params).unwrap();
                assert!(
                    !relation_holds(&f).unwrap(),
                    "case {} trial {trial}: relation holds at violating point {params:?}",
                    case.name
                );
            }
        }
    }

    #[test]
    fn registry_lookup_and_shape() {
        let cases = builtin_cases();
        assert!(cases.len() >= 16);
        let names: BTreeSet<_> = cases.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), cases.len(), "case names must be unique");
        assert!(case_by_name("e6-p3-so4").is_some());
        assert!(case_by_name("m10-p5-so4").is_some());
        assert!(case_by_name("nope").is_none());
        for case in &cases {
            assert!(!case.parameters().is_empty());
            let wrong = case.space().dim() + 1;
            let _ = wrong;
        }
    }
}
