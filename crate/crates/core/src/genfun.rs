//! The Betti generating function `𝓑(G; x, y) = Σ β_{i,j} x^{j-i} y^i` and the
//! reduction rules that compute it recursively.
//!
//! Each `reduce_*` function checks its precondition and then assembles `𝓑(G)`
//! from smaller graphs through a caller-supplied evaluator, so the same rule
//! can be driven by the oracle (to test the identity) or by itself (to
//! compute).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hochster::{betti_table_graph, BettiOptions, BettiTable};
use crate::linalg::FieldSpec;
use crate::vertex_set::VertexSet;

/// Sparse polynomial in `x, y` with integer coefficients, keyed by
/// `(x-exponent, y-exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BettiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, p: u32, q: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c.into());
        out
    }

    /// `1 + xy`.
    pub fn one_plus_xy() -> Self {
        &Self::one() + &Self::monomial(1, 1, 1)
    }

    /// `(1 + y)^k`, expanded.
    pub fn one_plus_y_pow(k: u32) -> Self {
        let mut out = Self::zero();
        let mut c = BigInt::one();
        for q in 0..=k {
            out.add_term(0, q, c.clone());
            c = c * (k - q) / (q + 1);
        }
        out
    }

    fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((p, q)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn from_table(t: &BettiTable) -> Self {
        let mut out = Self::zero();
        for ((i, j), b) in t.entries() {
            out.add_term((j - i) as u32, i as u32, BigInt::from(b));
        }
        out
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(p, _)| p).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, q)| q).max()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn require_nonnegative(self, rule: &str) -> Result<Self> {
        if self.is_nonnegative() {
            Ok(self)
        } else {
            Err(Error::Invariant(format!(
                "{rule} produced a negative coefficient: {self}"
            )))
        }
    }

    /// Terms in display order: total degree, then x-degree.
    fn ordered(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&((p, q), _)| (p + q, p));
        v
    }

    /// Coefficients are JSON numbers when they fit in 64 bits and decimal
    /// strings otherwise.
    pub fn to_json_value(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .ordered()
            .into_iter()
            .map(|((p, q), c)| {
                let c = match c.to_i64() {
                    Some(small) => serde_json::Value::from(small),
                    None => serde_json::Value::from(c.to_string()),
                };
                serde_json::json!({"p": p, "q": q, "c": c})
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        #[derive(Deserialize)]
        struct Term {
            p: u32,
            q: u32,
            c: Coeff,
        }
        #[derive(Deserialize)]
        struct Poly {
            terms: Vec<Term>,
        }
        let poly: Poly = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("polynomial JSON: {e}")))?;
        let mut out = Self::zero();
        for t in poly.terms {
            let c = match t.c {
                Coeff::Small(c) => BigInt::from(c),
                Coeff::Big(s) => s
                    .parse()
                    .map_err(|_| Error::Input(format!("bad coefficient {s:?}")))?,
            };
            out.add_term(t.p, t.q, c);
        }
        Ok(out)
    }
}

impl fmt::Display for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((p, q), c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (p, q) == (0, 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("x", p), ("y", q)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl std::ops::Add for &BettiPolynomial {
    type Output = BettiPolynomial;
    fn add(self, rhs: &BettiPolynomial) -> BettiPolynomial {
        let mut out = self.clone();
        for ((p, q), c) in rhs.terms() {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &BettiPolynomial {
    type Output = BettiPolynomial;
    fn sub(self, rhs: &BettiPolynomial) -> BettiPolynomial {
        let mut out = self.clone();
        for ((p, q), c) in rhs.terms() {
            out.add_term(p, q, -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &BettiPolynomial {
    type Output = BettiPolynomial;
    fn mul(self, rhs: &BettiPolynomial) -> BettiPolynomial {
        let mut out = BettiPolynomial::zero();
        for ((p1, q1), c1) in self.terms() {
            for ((p2, q2), c2) in rhs.terms() {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

/// `𝓑(G)` read off the Hochster table.
pub fn genfun_oracle(g: &Graph, field: FieldSpec, opts: &BettiOptions) -> Result<BettiPolynomial> {
    Ok(BettiPolynomial::from_table(&betti_table_graph(
        g, field, opts,
    )?))
}

/// Evaluates `𝓑` on a smaller graph.
pub type Evaluator<'a> = dyn FnMut(&Graph) -> Result<BettiPolynomial> + 'a;

fn without(g: &Graph, s: &VertexSet) -> Result<Graph> {
    Ok(g.remove_vertices(s)?.0)
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::Input(format!(
            "vertex {v} out of range 0..{}",
            g.n()
        )));
    }
    Ok(())
}

/// `𝓑(G) = 𝓑(G ∖ v)` for an isolated vertex `v`.
pub fn reduce_isolated_vertex(
    g: &Graph,
    v: usize,
    eval: &mut Evaluator,
) -> Result<BettiPolynomial> {
    check_vertex(g, v)?;
    if g.degree(v) != 0 {
        return Err(Error::Precondition(format!("vertex {v} is not isolated")));
    }
    eval(&without(g, &VertexSet::from_iter([v]))?)
}

/// `𝓑(G) = (1 + xy)·𝓑(G ∖ {u, v})` for an isolated edge `uv`.
pub fn reduce_isolated_edge(
    g: &Graph,
    u: usize,
    v: usize,
    eval: &mut Evaluator,
) -> Result<BettiPolynomial> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) || g.degree(u) != 1 || g.degree(v) != 1 {
        return Err(Error::Precondition(format!(
            "{u}{v} is not an isolated edge"
        )));
    }
    let rest = eval(&without(g, &VertexSet::from_iter([u, v]))?)?;
    Ok(&BettiPolynomial::one_plus_xy() * &rest)
}

/// `𝓑(G) = 𝓑(G∖v) + (1+y)^{|U|}·(𝓑(G∖U) − 𝓑(G∖(U ∪ v)))` when `U` is
/// nonempty, `v ∉ U` and `N(v) ⊆ N(u)` for every `u ∈ U`.
pub fn reduce_dominated_set(
    g: &Graph,
    v: usize,
    u: &VertexSet,
    eval: &mut Evaluator,
) -> Result<BettiPolynomial> {
    check_vertex(g, v)?;
    if u.is_empty() {
        return Err(Error::Precondition("dominating set U is empty".into()));
    }
    if u.bound() > g.n() {
        return Err(Error::Input(format!(
            "vertex {} out of range",
            u.bound() - 1
        )));
    }
    if u.contains(v) {
        return Err(Error::Precondition(format!("{v} belongs to U")));
    }
    let nv = g.neighbors(v);
    if let Some(bad) = u.iter().find(|&x| !nv.is_subset(g.neighbors(x))) {
        return Err(Error::Precondition(format!(
            "N({v}) is not inside N({bad})"
        )));
    }
    let mut uv = u.clone();
    uv.insert(v);
    let del_v = eval(&without(g, &VertexSet::from_iter([v]))?)?;
    let del_u = eval(&without(g, u)?)?;
    let del_uv = eval(&without(g, &uv)?)?;
    let factor = BettiPolynomial::one_plus_y_pow(u.len() as u32);
    (&del_v + &(&factor * &(&del_u - &del_uv))).require_nonnegative("dominated-set rule")
}

/// `𝓑(G) = 𝓑(G∖v) + xy(1+y)^{|N(w)|-1}·𝓑(G∖N[w])` for a leaf `v` with
/// neighbour `w`.
pub fn reduce_leaf(g: &Graph, v: usize, eval: &mut Evaluator) -> Result<BettiPolynomial> {
    check_vertex(g, v)?;
    if g.degree(v) != 1 {
        return Err(Error::Precondition(format!("vertex {v} is not a leaf")));
    }
    let w = g.neighbors(v).first().expect("degree one");
    let nw = g.neighborhood(w, true)?;
    let del_v = eval(&without(g, &VertexSet::from_iter([v]))?)?;
    let far = eval(&without(g, &nw)?)?;
    let factor = &BettiPolynomial::monomial(1, 1, 1)
        * &BettiPolynomial::one_plus_y_pow(g.degree(w) as u32 - 1);
    Ok(&del_v + &(&factor * &far))
}

/// How the forest recursion picks its leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LeafRule {
    /// Smallest leaf of the first component (by least vertex) with at least
    /// three vertices.
    #[default]
    First,
    /// Largest leaf of the last such component.
    Last,
}

/// Where the forest recursion goes next.
enum Step {
    Empty,
    Isolated(usize),
    Edge(usize, usize),
    Leaf(usize),
}

fn forest_step(g: &Graph, rule: LeafRule) -> Step {
    if g.n() == 0 {
        return Step::Empty;
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Step::Isolated(v);
    }
    let comps = g.connected_components();
    if let Some(c) = comps.iter().find(|c| c.len() == 2) {
        let v = c.to_vec();
        return Step::Edge(v[0], v[1]);
    }
    let comp = match rule {
        LeafRule::First => comps.first(),
        LeafRule::Last => comps.last(),
    }
    .expect("nonempty graph without isolated vertices or edges has a large component");
    let mut leaves = comp.iter().filter(|&v| g.degree(v) == 1);
    let leaf = match rule {
        LeafRule::First => leaves.next(),
        LeafRule::Last => leaves.last(),
    };
    Step::Leaf(leaf.expect("a tree with at least three vertices has a leaf"))
}

fn require_forest(g: &Graph) -> Result<()> {
    if g.is_forest() {
        Ok(())
    } else {
        Err(Error::Input("graph has a cycle".into()))
    }
}

/// `𝓑(G)` of a forest from the reduction rules alone.
pub fn genfun_forest(g: &Graph) -> Result<BettiPolynomial> {
    genfun_forest_with(g, LeafRule::First)
}

pub fn genfun_forest_with(g: &Graph, rule: LeafRule) -> Result<BettiPolynomial> {
    require_forest(g)?;
    fn go(g: &Graph, rule: LeafRule) -> Result<BettiPolynomial> {
        let mut rec = |h: &Graph| go(h, rule);
        match forest_step(g, rule) {
            Step::Empty => Ok(BettiPolynomial::one()),
            Step::Isolated(v) => reduce_isolated_vertex(g, v, &mut rec),
            Step::Edge(u, v) => reduce_isolated_edge(g, u, v, &mut rec),
            Step::Leaf(v) => reduce_leaf(g, v, &mut rec),
        }
    }
    go(g, rule)
}

/// `(reg, pdim)` of `S/I_G` for a forest via the leaf recursions
/// `reg = max(reg(G∖v), reg(G∖N[w]) + 1)` and
/// `pdim = max(pdim(G∖v), pdim(G∖N[w]) + |N(w)|)`.
pub fn reg_pdim_forest(g: &Graph) -> Result<(usize, usize)> {
    require_forest(g)?;
    fn go(g: &Graph) -> Result<(usize, usize)> {
        let leaf = (0..g.n()).find(|&v| g.degree(v) == 1);
        let Some(v) = leaf else {
            return Ok((0, 0));
        };
        let w = g.neighbors(v).first().expect("degree one");
        let (r1, p1) = go(&without(g, &VertexSet::from_iter([v]))?)?;
        let (r2, p2) = go(&without(g, &g.neighborhood(w, true)?)?)?;
        Ok((r1.max(r2 + 1), p1.max(p2 + g.degree(w))))
    }
    go(g)
}

/// True when the Betti tables over every listed prime and over `Q` agree.
pub fn field_independence_probe(g: &Graph, primes: &[u32], opts: &BettiOptions) -> Result<bool> {
    let base = betti_table_graph(g, FieldSpec::Q, opts)?;
    for &p in primes {
        if betti_table_graph(g, FieldSpec::prime(p)?, opts)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}
