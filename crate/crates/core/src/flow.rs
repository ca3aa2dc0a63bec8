//! Counting and enumerating nonnegative integer `a`-flows.
//!
//! Three routes share no code beyond the graph itself:
//!
//! - [`count`] is a memoized sweep over vertices in label order. Parallel
//!   copies of an edge are grouped and weighted by a multiset coefficient, and
//!   the memo key is the exact residual supply vector of the unprocessed
//!   vertices.
//! - [`brute_force_count`] walks every edge copy separately, bounded by the
//!   linear functional `w_i = n + 2 - i`, and keeps no memo. It is the oracle.
//! - [`enumerate_flows`] materializes flows by depth-first search over single
//!   edge copies in canonical order, which yields lexicographic output.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Edge, GraphKind, NetflowVector, Sign, SignedMultigraph};

/// One nonnegative value per edge copy, in the graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlowVector(pub Vec<u64>);

impl FlowVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u64>> for FlowVector {
    fn from(b: Vec<u64>) -> Self {
        FlowVector(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    #[default]
    Dp,
    Brute,
}

pub fn count_with(backend: Backend, g: &SignedMultigraph, a: &NetflowVector) -> BigUint {
    match backend {
        Backend::Dp => count(g, a),
        Backend::Brute => brute_force_count(g, a),
    }
}

fn check_dims(g: &SignedMultigraph, f: &FlowVector, a: &NetflowVector) -> Result<()> {
    if f.len() != g.num_edges() {
        return Err(Error::DimensionMismatch {
            what: "flow vector",
            expected: g.num_edges(),
            got: f.len(),
        });
    }
    a.check_len(g.n_plus_1())
}

/// `sum_i b_i alpha_i`, widened to avoid overflow on large flows.
pub fn root_sum(g: &SignedMultigraph, f: &FlowVector) -> Vec<i128> {
    let mut total = vec![0i128; g.n_plus_1()];
    for (e, &b) in g.edges().iter().zip(f.as_slice()) {
        for (t, &r) in total.iter_mut().zip(e.root(g.n_plus_1()).coords()) {
            *t += r as i128 * b as i128;
        }
    }
    total
}

/// `sum_i b_i alpha_i = a`.
pub fn check_flow_by_roots(g: &SignedMultigraph, f: &FlowVector, a: &NetflowVector) -> Result<bool> {
    check_dims(g, f, a)?;
    Ok(root_sum(g, f).iter().zip(a.as_slice()).all(|(&s, &x)| s == x as i128))
}

/// Vertex-by-vertex conservation: negative inflow plus `a_v` equals positive
/// inflow plus outflow plus twice the loop flow.
pub fn check_flow_by_conservation(g: &SignedMultigraph, f: &FlowVector, a: &NetflowVector) -> Result<bool> {
    check_dims(g, f, a)?;
    let n_plus_1 = g.n_plus_1();
    let mut incoming = vec![0i128; n_plus_1 + 1];
    let mut outgoing = vec![0i128; n_plus_1 + 1];
    for (e, &b) in g.edges().iter().zip(f.as_slice()) {
        let b = b as i128;
        if e.is_loop() {
            outgoing[e.i] += 2 * b;
            continue;
        }
        outgoing[e.i] += b;
        match e.sign {
            Sign::Minus => incoming[e.j] += b,
            Sign::Plus => outgoing[e.j] += b,
        }
    }
    Ok((1..=n_plus_1).all(|v| incoming[v] + a.at(v) as i128 == outgoing[v]))
}

pub fn check_flow(g: &SignedMultigraph, f: &FlowVector, a: &NetflowVector) -> Result<bool> {
    let by_roots = check_flow_by_roots(g, f, a)?;
    debug_assert_eq!(Ok(by_roots), check_flow_by_conservation(g, f, a));
    Ok(by_roots)
}

/// `W = sum_i (n + 2 - i) a_i`. Every root has weight at least 1, so any flow
/// has total at most `W`; a negative `W` means there are no flows.
pub fn weight_bound(g: &SignedMultigraph, a: &NetflowVector) -> i64 {
    let n_plus_1 = g.n_plus_1();
    a.as_slice()
        .iter()
        .enumerate()
        .map(|(idx, &x)| (n_plus_1 - idx) as i64 * x)
        .sum()
}

fn vertex_weight(n_plus_1: usize, v: usize) -> i64 {
    (n_plus_1 + 1 - v) as i64
}

fn edge_weight(n_plus_1: usize, e: &Edge) -> i64 {
    let (wi, wj) = (vertex_weight(n_plus_1, e.i), vertex_weight(n_plus_1, e.j));
    match e.sign {
        Sign::Minus => wi - wj,
        Sign::Plus => wi + wj,
    }
}

/// Quick zero tests implied by the coordinate sums of the roots.
fn trivially_zero(g: &SignedMultigraph, a: &NetflowVector) -> bool {
    let total = a.total();
    let sum_ok = match g.kind() {
        GraphKind::TypeA => total == 0,
        GraphKind::TypeC => total >= 0 && total % 2 == 0,
    };
    !sum_ok || weight_bound(g, a) < 0
}

/// Exhaustive count of flows. Exponential; used as ground truth.
pub fn brute_force_count(g: &SignedMultigraph, a: &NetflowVector) -> BigUint {
    brute_force_count_capped(g, a, u64::MAX).expect("uncapped search completes")
}

/// [`brute_force_count`] that gives up (returns `None`) after visiting more
/// than `max_nodes` search nodes.
pub fn brute_force_count_capped(g: &SignedMultigraph, a: &NetflowVector, max_nodes: u64) -> Option<BigUint> {
    if a.len() != g.n_plus_1() || weight_bound(g, a) < 0 {
        return Some(BigUint::zero());
    }
    let n_plus_1 = g.n_plus_1();
    let edges = g.edges();
    let weights: Vec<i64> = edges.iter().map(|e| edge_weight(n_plus_1, e)).collect();
    let mut search = BruteSearch {
        n_plus_1,
        edges: &edges,
        weights: &weights,
        target: a.as_slice(),
        sum: vec![0; n_plus_1],
        found: 0,
        nodes_left: max_nodes,
    };
    search.walk(0, weight_bound(g, a));
    (search.nodes_left > 0).then(|| BigUint::from(search.found))
}

struct BruteSearch<'a> {
    n_plus_1: usize,
    edges: &'a [Edge],
    weights: &'a [i64],
    target: &'a [i64],
    sum: Vec<i64>,
    found: u128,
    nodes_left: u64,
}

impl BruteSearch<'_> {
    /// Coordinates `< upto` receive no further contributions once every edge
    /// whose smaller endpoint is below `upto` has been assigned.
    fn settled(&self, upto: usize) -> bool {
        (0..upto).all(|v| self.sum[v] == self.target[v])
    }

    fn walk(&mut self, idx: usize, budget: i64) {
        if self.nodes_left == 0 {
            return;
        }
        self.nodes_left -= 1;
        if idx == self.edges.len() {
            if self.settled(self.n_plus_1) {
                self.found += 1;
            }
            return;
        }
        let e = self.edges[idx];
        if idx > 0 && self.edges[idx - 1].i != e.i && !self.settled(e.i - 1) {
            return;
        }
        let root = e.root(self.n_plus_1);
        let w = self.weights[idx];
        let mut b = 0;
        loop {
            if b * w > budget {
                break;
            }
            // contributions of edges leaving i only raise coordinate i
            if self.sum[e.i - 1] > self.target[e.i - 1] {
                break;
            }
            self.walk(idx + 1, budget - b * w);
            for (s, &r) in self.sum.iter_mut().zip(root.coords()) {
                *s += r;
            }
            b += 1;
        }
        for (s, &r) in self.sum.iter_mut().zip(root.coords()) {
            *s -= r * b;
        }
    }
}

/// Number of ways to split `t` units over `m` parallel edges.
fn multichoose(m: u32, t: u64) -> BigUint {
    let mut acc = BigUint::one();
    // C(t + m - 1, m - 1)
    for k in 1..m as u64 {
        acc *= t + k;
        acc /= k;
    }
    acc
}

/// Outgoing edge groups of one vertex: non-loop targets first in canonical
/// order, then the loop group.
#[derive(Debug, Clone, Copy)]
struct Group {
    target: Option<(usize, Sign)>,
    mult: u32,
}

struct Sweep {
    groups: Vec<Vec<Group>>,
    memo: HashMap<(usize, usize, Vec<i64>), BigUint>,
}

impl Sweep {
    fn new(g: &SignedMultigraph) -> Self {
        let n_plus_1 = g.n_plus_1();
        let mut groups: Vec<Vec<Group>> = vec![Vec::new(); n_plus_1];
        let mut loops = vec![0u32; n_plus_1];
        for (e, m) in g.edge_classes() {
            if e.is_loop() {
                loops[e.i - 1] += m;
            } else {
                groups[e.i - 1].push(Group {
                    target: Some((e.j - 1, e.sign)),
                    mult: m,
                });
            }
        }
        for (v, &m) in loops.iter().enumerate() {
            if m > 0 {
                groups[v].push(Group { target: None, mult: m });
            }
        }
        Sweep {
            groups,
            memo: HashMap::new(),
        }
    }

    /// Ways to finish, given the residual supplies `res[v..]` and that
    /// groups `..gi` of vertex `v` are already assigned.
    fn solve(&mut self, v: usize, gi: usize, res: &mut Vec<i64>) -> BigUint {
        let n_plus_1 = res.len();
        if v == n_plus_1 {
            return BigUint::one();
        }
        if res[v] < 0 {
            return BigUint::zero();
        }
        let at_v = &self.groups[v];
        if gi == at_v.len() {
            return if res[v] == 0 {
                self.solve(v + 1, 0, res)
            } else {
                BigUint::zero()
            };
        }
        let key = (v, gi, res[v..].to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let group = at_v[gi];
        let last = gi + 1 == at_v.len();
        let coef = if group.target.is_none() { 2 } else { 1 };
        let supply = res[v];
        let choices: Box<dyn Iterator<Item = i64>> = if last {
            // the final group must absorb everything that is left
            if supply % coef == 0 {
                Box::new(std::iter::once(supply / coef))
            } else {
                Box::new(std::iter::empty())
            }
        } else {
            Box::new(0..=supply / coef)
        };
        let mut total = BigUint::zero();
        for t in choices {
            res[v] = supply - coef * t;
            if let Some((u, sign)) = group.target {
                res[u] += if sign == Sign::Minus { t } else { -t };
            }
            let ways = self.solve(v, gi + 1, res);
            if !ways.is_zero() {
                total += ways * multichoose(group.mult, t as u64);
            }
            if let Some((u, sign)) = group.target {
                res[u] -= if sign == Sign::Minus { t } else { -t };
            }
        }
        res[v] = supply;
        self.memo.insert(key, total.clone());
        total
    }
}

/// `K_G(a)`: the number of nonnegative integer `a`-flows on `g`.
pub fn count(g: &SignedMultigraph, a: &NetflowVector) -> BigUint {
    if a.len() != g.n_plus_1() || trivially_zero(g, a) {
        return BigUint::zero();
    }
    let mut res = a.as_slice().to_vec();
    Sweep::new(g).solve(0, 0, &mut res)
}

/// Flows in lexicographic order of `b`, at most `limit` of them.
pub fn enumerate_flows(g: &SignedMultigraph, a: &NetflowVector, limit: Option<usize>) -> Vec<FlowVector> {
    if a.len() != g.n_plus_1() || trivially_zero(g, a) || limit == Some(0) {
        return Vec::new();
    }
    let edges = g.edges();
    let mut walk = EnumWalk {
        edges: &edges,
        res: a.as_slice().to_vec(),
        b: vec![0; edges.len()],
        out: Vec::new(),
        limit,
    };
    walk.visit_vertex(0, 0);
    walk.out
}

/// Like [`enumerate_flows`], but fails if more than `limit` flows exist.
pub fn enumerate_flows_complete(g: &SignedMultigraph, a: &NetflowVector, limit: usize) -> Result<Vec<FlowVector>> {
    let mut flows = enumerate_flows(g, a, Some(limit.saturating_add(1)));
    if flows.len() > limit {
        flows.truncate(limit);
        return Err(Error::LimitExceeded { limit });
    }
    Ok(flows)
}

struct EnumWalk<'a> {
    edges: &'a [Edge],
    res: Vec<i64>,
    b: Vec<u64>,
    out: Vec<FlowVector>,
    limit: Option<usize>,
}

impl EnumWalk<'_> {
    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.out.len() >= l)
    }

    /// Enter vertex `v` (0-based) with edges from index `idx` onwards.
    fn visit_vertex(&mut self, v: usize, idx: usize) {
        if v == self.res.len() {
            self.out.push(FlowVector(self.b.clone()));
            return;
        }
        if self.res[v] < 0 {
            return;
        }
        self.visit_edge(v, idx);
    }

    fn visit_edge(&mut self, v: usize, idx: usize) {
        if self.full() {
            return;
        }
        let at_v = idx < self.edges.len() && self.edges[idx].i == v + 1;
        if !at_v {
            if self.res[v] == 0 {
                self.visit_vertex(v + 1, idx);
            }
            return;
        }
        let e = self.edges[idx];
        let coef = if e.is_loop() { 2 } else { 1 };
        let last = idx + 1 == self.edges.len() || self.edges[idx + 1].i != e.i;
        let supply = self.res[v];
        let (lo, hi) = if last {
            if supply % coef != 0 {
                return;
            }
            (supply / coef, supply / coef)
        } else {
            (0, supply / coef)
        };
        for t in lo..=hi {
            self.res[v] = supply - coef * t;
            if !e.is_loop() {
                self.res[e.j - 1] += if e.sign == Sign::Minus { t } else { -t };
            }
            self.b[idx] = t as u64;
            self.visit_edge(v, idx + 1);
            if !e.is_loop() {
                self.res[e.j - 1] -= if e.sign == Sign::Minus { t } else { -t };
            }
            if self.full() {
                break;
            }
        }
        self.b[idx] = 0;
        self.res[v] = supply;
    }
}
