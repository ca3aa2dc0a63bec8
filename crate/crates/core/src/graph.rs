//! Signed multigraphs on the vertex set `1..=n+1` and their root multisets.
//!
//! Vertices are labeled from 1. An edge `(i, j, sign)` always has `i <= j`;
//! the only loops are positive ones `(i, i, +)`. Type A graphs carry negative
//! non-loop edges only.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    #[serde(rename = "A")]
    TypeA,
    #[serde(rename = "C")]
    TypeC,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::TypeA => "A",
            GraphKind::TypeC => "C",
        })
    }
}

/// An edge class `(i, j, sign)`. The derived order is the canonical edge
/// order: lexicographic in `(i, j, sign)` with `-` before `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
}

impl Edge {
    pub const fn new(i: usize, j: usize, sign: Sign) -> Self {
        Edge { i, j, sign }
    }

    pub const fn neg(i: usize, j: usize) -> Self {
        Edge::new(i, j, Sign::Minus)
    }

    pub const fn pos(i: usize, j: usize) -> Self {
        Edge::new(i, j, Sign::Plus)
    }

    pub fn is_loop(&self) -> bool {
        self.i == self.j
    }

    pub fn touches(&self, v: usize) -> bool {
        self.i == v || self.j == v
    }

    /// `e_i - e_j`, `e_i + e_j`, or `2 e_i` for a loop.
    pub fn root(&self, n_plus_1: usize) -> RootVector {
        let mut coords = vec![0i64; n_plus_1];
        coords[self.i - 1] += 1;
        match self.sign {
            Sign::Minus => coords[self.j - 1] -= 1,
            Sign::Plus => coords[self.j - 1] += 1,
        }
        RootVector(coords)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.sign)
    }
}

/// One entry of an edge list handed to [`SignedMultigraph::build`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSpec {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
    pub mult: u32,
}

impl EdgeSpec {
    pub const fn new(i: usize, j: usize, sign: Sign, mult: u32) -> Self {
        EdgeSpec { i, j, sign, mult }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// The right-hand side `a` of the flow system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NetflowVector(Vec<i64>);

impl NetflowVector {
    pub fn new(a: Vec<i64>) -> Self {
        NetflowVector(a)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Coordinate `v`, 1-based.
    pub fn at(&self, v: usize) -> i64 {
        self.0[v - 1]
    }

    /// Total positive-edge flow forced by `a` in type C: half the coordinate
    /// sum, when that sum is even and nonnegative.
    pub fn leak(&self) -> Option<i64> {
        let s = self.total();
        (s >= 0 && s % 2 == 0).then_some(s / 2)
    }

    pub fn check_len(&self, n_plus_1: usize) -> Result<()> {
        if self.len() != n_plus_1 {
            return Err(Error::DimensionMismatch {
                what: "netflow vector",
                expected: n_plus_1,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for NetflowVector {
    fn from(a: Vec<i64>) -> Self {
        NetflowVector(a)
    }
}

impl From<&[i64]> for NetflowVector {
    fn from(a: &[i64]) -> Self {
        NetflowVector(a.to_vec())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMultigraph {
    n_plus_1: usize,
    kind: GraphKind,
    mult: BTreeMap<Edge, u32>,
}

impl SignedMultigraph {
    pub fn empty(n_plus_1: usize, kind: GraphKind) -> Result<Self> {
        if n_plus_1 == 0 {
            return Err(Error::NoVertices);
        }
        Ok(SignedMultigraph {
            n_plus_1,
            kind,
            mult: BTreeMap::new(),
        })
    }

    /// Builds a graph from an edge list; repeated entries add up.
    pub fn build(n_plus_1: usize, kind: GraphKind, edges: &[EdgeSpec]) -> Result<Self> {
        let mut g = SignedMultigraph::empty(n_plus_1, kind)?;
        for e in edges {
            g.add(Edge::new(e.i, e.j, e.sign), e.mult)?;
        }
        Ok(g)
    }

    /// Adds `mult` copies of `edge`, validating it against the graph's kind.
    pub fn add(&mut self, edge: Edge, mult: u32) -> Result<()> {
        let Edge { i, j, sign } = edge;
        if i == 0 || j > self.n_plus_1 {
            return Err(Error::InvalidEdge {
                i,
                j,
                reason: format!("vertices must lie in 1..={}", self.n_plus_1),
            });
        }
        if i > j {
            return Err(Error::InvalidEdge {
                i,
                j,
                reason: "edges are written with i <= j".into(),
            });
        }
        if i == j && sign == Sign::Minus {
            return Err(Error::KindViolation {
                edge,
                kind: self.kind,
                reason: "loops must be positive",
            });
        }
        if self.kind == GraphKind::TypeA {
            if i == j {
                return Err(Error::KindViolation {
                    edge,
                    kind: self.kind,
                    reason: "type A graphs have no loops",
                });
            }
            if sign == Sign::Plus {
                return Err(Error::KindViolation {
                    edge,
                    kind: self.kind,
                    reason: "type A graphs have no positive edges",
                });
            }
        }
        if mult > 0 {
            *self.mult.entry(edge).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn n_plus_1(&self) -> usize {
        self.n_plus_1
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn multiplicity(&self, edge: Edge) -> u32 {
        self.mult.get(&edge).copied().unwrap_or(0)
    }

    /// Edge classes with nonzero multiplicity, in canonical order.
    pub fn edge_classes(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.mult.iter().map(|(&e, &m)| (e, m))
    }

    /// Every edge copy in canonical order; flow vectors are indexed by this.
    pub fn edges(&self) -> Vec<Edge> {
        self.edge_classes()
            .flat_map(|(e, m)| std::iter::repeat_n(e, m as usize))
            .collect()
    }

    /// Total edge count `N`.
    pub fn num_edges(&self) -> usize {
        self.mult.values().map(|&m| m as usize).sum()
    }

    pub fn root_multiset(&self) -> Vec<RootVector> {
        self.edges().iter().map(|e| e.root(self.n_plus_1)).collect()
    }

    /// Removes one copy of each listed edge.
    pub fn delete_edges(&self, to_remove: &[Edge]) -> Result<Self> {
        let mut g = self.clone();
        for &e in to_remove {
            match g.mult.get_mut(&e) {
                Some(m) if *m > 0 => {
                    *m -= 1;
                    if *m == 0 {
                        g.mult.remove(&e);
                    }
                }
                _ => return Err(Error::MissingEdge(e)),
            }
        }
        Ok(g)
    }

    /// Connectivity of the underlying undirected multigraph, signs ignored.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n_plus_1).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.n_plus_1;
        for e in self.mult.keys() {
            let (a, b) = (find(&mut parent, e.i - 1), find(&mut parent, e.j - 1));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// The three negative edges among the last three vertices, in canonical
    /// order: `(n-1, n)`, `(n-1, n+1)`, `(n, n+1)`. Requires `n + 1 >= 3`.
    pub fn distinguished_edges(&self) -> [Edge; 3] {
        distinguished_edges(self.n_plus_1)
    }
}

pub fn distinguished_edges(n_plus_1: usize) -> [Edge; 3] {
    let (p, q, r) = (n_plus_1 - 2, n_plus_1 - 1, n_plus_1);
    [Edge::neg(p, q), Edge::neg(p, r), Edge::neg(q, r)]
}

/// The edge `(n-1, n, -)` deleted on the right-hand side of the identities.
pub fn bridge_edge(n_plus_1: usize) -> Edge {
    distinguished_edges(n_plus_1)[0]
}

/// Which divisibility identity a hypothesis check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Type A, connected graph with unit edges among the last three vertices.
    #[serde(rename = "A_thm21")]
    A21,
    /// Type C, no positive edges touching the last three vertices.
    #[serde(rename = "C_thm31")]
    C31,
    /// Type C, mixed signs; ratio condition per sign.
    #[serde(rename = "C_thm32")]
    C32,
}

impl Theorem {
    pub fn kind(&self) -> GraphKind {
        match self {
            Theorem::A21 => GraphKind::TypeA,
            Theorem::C31 | Theorem::C32 => GraphKind::TypeC,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Theorem::A21 => "A_thm21",
            Theorem::C31 => "C_thm31",
            Theorem::C32 => "C_thm32",
        }
    }

    /// Signs whose ratio rows must agree on the common constant.
    pub fn ratio_signs(&self) -> &'static [Sign] {
        match self {
            Theorem::A21 | Theorem::C31 => &[Sign::Minus],
            Theorem::C32 => &[Sign::Minus, Sign::Plus],
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The common ratio `(m1 + m2 + m3) / m1`, or no constraint at all when
/// every row is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioConstant {
    Exact(Ratio<i64>),
    Unconstrained,
}

impl RatioConstant {
    /// `(p, q)` with `c = p / q` in lowest terms; `(1, 1)` when unconstrained,
    /// in which case the prefix term of the multiplier vanishes anyway.
    pub fn parts(&self) -> (i64, i64) {
        match self {
            RatioConstant::Exact(c) => (*c.numer(), *c.denom()),
            RatioConstant::Unconstrained => (1, 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BvCondition {
    pub theorem: Theorem,
    pub satisfied: bool,
    /// `None` when the ratio rows themselves are inconsistent.
    pub c: Option<RatioConstant>,
    pub failures: Vec<String>,
}

/// Ratio rows for `j` in `1..=n-2` and the given signs.
///
/// Rows that are entirely zero are skipped. A row with `m_{j,n-1} = 0` and a
/// nonzero sibling is an error, as is a row disagreeing with the others.
pub fn ratio_constant(g: &SignedMultigraph, signs: &[Sign]) -> std::result::Result<RatioConstant, String> {
    let n_plus_1 = g.n_plus_1();
    if n_plus_1 < 3 {
        return Ok(RatioConstant::Unconstrained);
    }
    let (p, q, r) = (n_plus_1 - 2, n_plus_1 - 1, n_plus_1);
    let mut common: Option<(Ratio<i64>, usize, Sign)> = None;
    for j in 1..p {
        for &sign in signs {
            let m1 = g.multiplicity(Edge::new(j, p, sign)) as i64;
            let m2 = g.multiplicity(Edge::new(j, q, sign)) as i64;
            let m3 = g.multiplicity(Edge::new(j, r, sign)) as i64;
            if m1 + m2 + m3 == 0 {
                continue;
            }
            if m1 == 0 {
                return Err(format!(
                    "row j={j} sign {sign}: m_{{{j},{p}}} = 0 while m_{{{j},{q}}} = {m2}, m_{{{j},{r}}} = {m3}"
                ));
            }
            let ratio = Ratio::new(m1 + m2 + m3, m1);
            match common {
                None => common = Some((ratio, j, sign)),
                Some((c, j0, s0)) if c != ratio => {
                    return Err(format!(
                        "row j={j} sign {sign} has ratio {ratio}, row j={j0} sign {s0} has {c}"
                    ));
                }
                Some(_) => {}
            }
        }
    }
    Ok(common.map_or(RatioConstant::Unconstrained, |(c, _, _)| RatioConstant::Exact(c)))
}

/// Checks the graph hypotheses of one of the divisibility identities.
pub fn bv_hypothesis(g: &SignedMultigraph, theorem: Theorem) -> BvCondition {
    let mut failures = Vec::new();
    let n_plus_1 = g.n_plus_1();
    if n_plus_1 < 3 {
        return BvCondition {
            theorem,
            satisfied: false,
            c: None,
            failures: vec![format!("need at least 3 vertices, got {n_plus_1}")],
        };
    }
    if g.kind() != theorem.kind() {
        failures.push(format!(
            "{theorem} applies to type {} graphs, got type {}",
            theorem.kind(),
            g.kind()
        ));
    }
    if !g.is_connected() {
        failures.push("graph is not connected".into());
    }
    for e in g.distinguished_edges() {
        let m = g.multiplicity(e);
        if m != 1 {
            failures.push(format!("m_{{{},{}}} = {m}, expected 1", e.i, e.j));
        }
    }
    let top = n_plus_1 - 2..=n_plus_1;
    for (e, m) in g.edge_classes().filter(|(e, _)| e.sign == Sign::Plus) {
        let offending = match theorem {
            Theorem::A21 => false,
            Theorem::C31 => top.contains(&e.i) || top.contains(&e.j),
            Theorem::C32 => top.contains(&e.i) && top.contains(&e.j),
        };
        if offending {
            failures.push(format!("positive edge {e} with multiplicity {m} is not allowed"));
        }
    }
    let c = match ratio_constant(g, theorem.ratio_signs()) {
        Ok(c) => Some(c),
        Err(msg) => {
            failures.push(msg);
            None
        }
    };
    BvCondition {
        theorem,
        satisfied: failures.is_empty(),
        c,
        failures,
    }
}

/// Prefix sums of `a` nonnegative and total zero. Necessary for a nonzero
/// type A count, not sufficient.
pub fn necessary_feasible_a(a: &NetflowVector) -> bool {
    let coords = a.as_slice();
    let mut prefix = 0i64;
    for &x in &coords[..coords.len().saturating_sub(1)] {
        prefix += x;
        if prefix < 0 {
            return false;
        }
    }
    a.total() == 0
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = g3();
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.edges(), vec![Edge::neg(1, 2), Edge::neg(1, 3), Edge::neg(2, 3)]);
    }

    #[test]
    fn builds_gc() {
        let g = gc();
        assert_eq!(g.num_edges(), 7);
        assert_eq!(g.multiplicity(Edge::pos(1, 1)), 1);
    }

    #[test]
    fn repeated_entries_add_up() {
        let g = SignedMultigraph::build(
            3,
            GraphKind::TypeA,
            &[EdgeSpec::new(1, 2, Sign::Minus, 1), EdgeSpec::new(1, 2, Sign::Minus, 2)],
        )
        .unwrap();
        assert_eq!(g.multiplicity(Edge::neg(1, 2)), 3);
    }

    #[test]
    fn rejects_bad_edges() {
        let loop_a = SignedMultigraph::build(3, GraphKind::TypeA, &[EdgeSpec::new(1, 1, Sign::Minus, 1)]);
        assert!(matches!(loop_a, Err(Error::KindViolation { .. })));
        let pos_a = SignedMultigraph::build(3, GraphKind::TypeA, &[EdgeSpec::new(1, 2, Sign::Plus, 1)]);
        assert!(matches!(pos_a, Err(Error::KindViolation { .. })));
        let pos_loop_a = SignedMultigraph::build(3, GraphKind::TypeA, &[EdgeSpec::new(2, 2, Sign::Plus, 1)]);
        assert!(matches!(pos_loop_a, Err(Error::KindViolation { .. })));
        let neg_loop_c = SignedMultigraph::build(3, GraphKind::TypeC, &[EdgeSpec::new(2, 2, Sign::Minus, 1)]);
        assert!(matches!(neg_loop_c, Err(Error::KindViolation { .. })));
        let reversed = SignedMultigraph::build(3, GraphKind::TypeA, &[EdgeSpec::new(2, 1, Sign::Minus, 1)]);
        assert!(matches!(reversed, Err(Error::InvalidEdge { .. })));
        let out_of_range = SignedMultigraph::build(3, GraphKind::TypeA, &[EdgeSpec::new(1, 4, Sign::Minus, 1)]);
        assert!(matches!(out_of_range, Err(Error::InvalidEdge { .. })));
        let zero = SignedMultigraph::build(3, GraphKind::TypeA, &[EdgeSpec::new(0, 1, Sign::Minus, 1)]);
        assert!(matches!(zero, Err(Error::InvalidEdge { .. })));
        assert_eq!(SignedMultigraph::empty(0, GraphKind::TypeA), Err(Error::NoVertices));
    }

    #[test]
    fn roots() {
        let roots: Vec<_> = g3().root_multiset().into_iter().map(|r| r.0).collect();
        assert_eq!(roots, vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]]);

        let gc_roots = gc().root_multiset();
        assert_eq!(gc_roots.len(), 7);
        assert!(gc_roots.contains(&RootVector(vec![2, 0, 0, 0])));
        assert_eq!(Edge::pos(2, 4).root(4).0, vec![0, 1, 0, 1]);

        let empty = SignedMultigraph::empty(3, GraphKind::TypeA).unwrap();
        assert!(empty.root_multiset().is_empty());
    }

    #[test]
    fn delete_edges() {
        let path = g3().delete_edges(&[Edge::neg(1, 2)]).unwrap();
        assert_eq!(path.edges(), vec![Edge::neg(1, 3), Edge::neg(2, 3)]);

        let k4 = complete_a(4).delete_edges(&[Edge::neg(2, 3)]).unwrap();
        assert_eq!(k4.num_edges(), 5);
        assert_eq!(k4.multiplicity(Edge::neg(2, 3)), 0);

        let twice = g3().delete_edges(&[Edge::neg(1, 2), Edge::neg(1, 2)]);
        assert_eq!(twice, Err(Error::MissingEdge(Edge::neg(1, 2))));
    }

    #[test]
    fn connectivity() {
        assert!(g3().is_connected());
        let g = SignedMultigraph::build(
            4,
            GraphKind::TypeC,
            &[EdgeSpec::new(1, 2, Sign::Plus, 1), EdgeSpec::new(3, 4, Sign::Minus, 1)],
        )
        .unwrap();
        assert!(!g.is_connected());
        assert!(SignedMultigraph::empty(1, GraphKind::TypeA).unwrap().is_connected());
    }

    #[test]
    fn hypothesis_k4() {
        let cond = bv_hypothesis(&complete_a(4), Theorem::A21);
        assert!(cond.satisfied, "{:?}", cond.failures);
        assert_eq!(cond.c, Some(RatioConstant::Exact(Ratio::from_integer(3))));
    }

    #[test]
    fn hypothesis_gc() {
        let cond = bv_hypothesis(&gc(), Theorem::C31);
        assert!(cond.satisfied, "{:?}", cond.failures);
        assert_eq!(cond.c, Some(RatioConstant::Exact(Ratio::from_integer(3))));

        let mixed = gc_mixed();
        assert!(!bv_hypothesis(&mixed, Theorem::C31).satisfied);
        let cond = bv_hypothesis(&mixed, Theorem::C32);
        assert!(cond.satisfied, "{:?}", cond.failures);
        assert_eq!(cond.c, Some(RatioConstant::Exact(Ratio::from_integer(3))));
    }

    #[test]
    fn hypothesis_triangle_is_unconstrained() {
        let cond = bv_hypothesis(&g3(), Theorem::A21);
        assert!(cond.satisfied);
        assert_eq!(cond.c, Some(RatioConstant::Unconstrained));
    }

    #[test]
    fn hypothesis_failures() {
        let mut g = complete_a(4);
        g.add(Edge::neg(2, 3), 1).unwrap();
        let cond = bv_hypothesis(&g, Theorem::A21);
        assert!(!cond.satisfied);
        assert!(cond.failures.iter().any(|f| f.contains("m_{2,3} = 2")));

        // m_{1,2} = 2 keeps a single consistent row: (2+1+1)/2 = 2
        let mut g = complete_a(4);
        g.add(Edge::neg(1, 2), 1).unwrap();
        let cond = bv_hypothesis(&g, Theorem::A21);
        assert!(cond.satisfied);
        assert_eq!(cond.c, Some(RatioConstant::Exact(Ratio::from_integer(2))));

        // row with m_{j,n-1} = 0 but siblings present
        let g = SignedMultigraph::build(
            4,
            GraphKind::TypeA,
            &[
                EdgeSpec::new(1, 3, Sign::Minus, 1),
                EdgeSpec::new(2, 3, Sign::Minus, 1),
                EdgeSpec::new(2, 4, Sign::Minus, 1),
                EdgeSpec::new(3, 4, Sign::Minus, 1),
            ],
        )
        .unwrap();
        let cond = bv_hypothesis(&g, Theorem::A21);
        assert!(!cond.satisfied);
        assert_eq!(cond.c, None);

        // inconsistent rows
        let mut g = complete_a(5);
        g.add(Edge::neg(2, 5), 1).unwrap();
        let cond = bv_hypothesis(&g, Theorem::A21);
        assert!(!cond.satisfied);
        assert!(cond.failures[0].contains("ratio"));

        // kind mismatch and disconnected
        let cond = bv_hypothesis(&gc(), Theorem::A21);
        assert!(!cond.satisfied);
        let g = complete_a(4)
            .delete_edges(&[Edge::neg(1, 2), Edge::neg(1, 3), Edge::neg(1, 4)])
            .unwrap();
        let cond = bv_hypothesis(&g, Theorem::A21);
        assert!(cond.failures.iter().any(|f| f.contains("connected")));

        let cond = bv_hypothesis(&SignedMultigraph::empty(2, GraphKind::TypeA).unwrap(), Theorem::A21);
        assert!(!cond.satisfied);
    }

    #[test]
    fn c32_rejects_positive_edges_among_last_three() {
        let mut g = gc();
        g.add(Edge::pos(2, 4), 1).unwrap();
        assert!(!bv_hypothesis(&g, Theorem::C32).satisfied);
        let mut g = gc();
        g.add(Edge::pos(3, 3), 1).unwrap();
        assert!(!bv_hypothesis(&g, Theorem::C32).satisfied);
        assert!(!bv_hypothesis(&g, Theorem::C31).satisfied);
    }

    #[test]
    fn c32_checks_positive_rows() {
        let mut g = gc();
        g.add(Edge::pos(1, 2), 1).unwrap();
        g.add(Edge::pos(1, 3), 1).unwrap();
        let cond = bv_hypothesis(&g, Theorem::C32);
        assert!(!cond.satisfied);
        assert!(cond.failures[0].contains("ratio 2"));
    }

    #[test]
    fn feasibility() {
        assert!(necessary_feasible_a(&vec![1, 0, -1].into()));
        assert!(!necessary_feasible_a(&vec![-1, 1, 0].into()));
        assert!(necessary_feasible_a(&vec![1, 2, 3, -6].into()));
        assert!(!necessary_feasible_a(&vec![1, 2, 3, -5].into()));
        assert!(necessary_feasible_a(&vec![0].into()));
        assert!(!necessary_feasible_a(&vec![2].into()));
    }

    #[test]
    fn leak() {
        assert_eq!(NetflowVector::new(vec![4, 0, 0, -2]).leak(), Some(1));
        assert_eq!(NetflowVector::new(vec![4, 0, 0, -1]).leak(), None);
        assert_eq!(NetflowVector::new(vec![0, 0, 0, -2]).leak(), None);
    }
}
