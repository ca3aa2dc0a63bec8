//! Partial flows and the fibration of `a`-flows over them.
//!
//! Let `H` be `G` with the three negative edges among `{n-1, n, n+1}`
//! removed. A partial flow is a flow on `H` that matches `a` on the first
//! `n-2` coordinates (and, in type C, puts exactly `y` units on positive
//! edges). Each partial flow extends uniquely to `G - (n-1, n)` and in a
//! one-parameter family to `G`, the parameter `k` being the flow on
//! `(n-1, n)`.
//!
//! When some `a_i` is negative an extension may need a negative edge value.
//! Such extensions are dropped: the fibers below are the sets of `k` that
//! really give flows, so [`count_via_partial`] agrees with [`flow::count`]
//! everywhere, while [`PartialCount::nominal_total`] keeps the textbook sum
//! `sum (Y_{n-1} + a_{n-1} + 1)` for comparison.
//!
//! [`flow::count`]: crate::flow::count

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::{check_flow, FlowVector};
use crate::graph::{distinguished_edges, GraphKind, NetflowVector, RatioConstant, Sign, SignedMultigraph};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialFlow {
    /// Values on `H`'s edges in canonical order. These are exactly the first
    /// `N - 3` edges of `G`.
    pub b_h: FlowVector,
    /// Signed inflows `(Y_{n-1}, Y_n, Y_{n+1})` within `H`.
    pub inflows: [i64; 3],
    /// Total flow on positive edges; always 0 in type A.
    pub y_pos: u64,
}

impl PartialFlow {
    /// `Y_{n-1} + a_{n-1}` and `Y_n + a_n`: the values the unique extension
    /// puts on `(n-1, n+1)` and `(n, n+1)`.
    pub fn extension_values(&self, a: &NetflowVector) -> (i64, i64) {
        let n_plus_1 = a.len();
        (
            self.inflows[0] + a.at(n_plus_1 - 2),
            self.inflows[1] + a.at(n_plus_1 - 1),
        )
    }

    /// `Y_{n-1} + a_{n-1} + 1`; may be zero or negative off the nonnegative
    /// domain.
    pub fn nominal_fiber_size(&self, a: &NetflowVector) -> i64 {
        self.extension_values(a).0 + 1
    }

    /// The values of `k` that extend this partial flow to a flow on `G`.
    pub fn fiber_range(&self, a: &NetflowVector) -> std::ops::RangeInclusive<i64> {
        let (top, next) = self.extension_values(a);
        0.max(-next)..=top
    }

    pub fn fiber_size(&self, a: &NetflowVector) -> u64 {
        let r = self.fiber_range(a);
        (r.end() - r.start() + 1).max(0) as u64
    }

    pub fn extends_uniquely(&self, a: &NetflowVector) -> bool {
        let (x, y) = self.extension_values(a);
        x >= 0 && y >= 0
    }
}

/// Checks the structure the fibration needs: the three distinguished edges
/// with multiplicity one and no other edge with both ends among the last
/// three vertices.
pub fn check_structure(g: &SignedMultigraph) -> Result<()> {
    let n_plus_1 = g.n_plus_1();
    if n_plus_1 < 3 {
        return Err(Error::HypothesisUnmet(format!(
            "need at least 3 vertices, got {n_plus_1}"
        )));
    }
    let dist = distinguished_edges(n_plus_1);
    for e in dist {
        let m = g.multiplicity(e);
        if m != 1 {
            return Err(Error::HypothesisUnmet(format!(
                "edge {e} has multiplicity {m}, expected 1"
            )));
        }
    }
    for (e, _) in g.edge_classes() {
        if e.i >= n_plus_1 - 2 && !dist.contains(&e) {
            return Err(Error::HypothesisUnmet(format!(
                "edge {e} joins two of the last three vertices"
            )));
        }
    }
    Ok(())
}

/// The positive-edge total `y` a full flow must have, or `None` when `a`
/// admits no flow at all because of its coordinate sum.
fn forced_leak(g: &SignedMultigraph, a: &NetflowVector) -> Option<i64> {
    match g.kind() {
        GraphKind::TypeA => (a.total() == 0).then_some(0),
        GraphKind::TypeC => a.leak(),
    }
}

fn h_graph(g: &SignedMultigraph) -> Result<SignedMultigraph> {
    g.delete_edges(&distinguished_edges(g.n_plus_1()))
}

/// All partial flows in lexicographic order of `b_H`.
///
/// Partial flows only exist relative to a full netflow, so when the
/// coordinate sum of `a` rules out every flow (nonzero in type A, odd or
/// negative in type C) the list is empty.
pub fn enumerate_partial_flows(g: &SignedMultigraph, a: &NetflowVector) -> Result<Vec<PartialFlow>> {
    check_structure(g)?;
    a.check_len(g.n_plus_1())?;
    let Some(y) = forced_leak(g, a) else {
        return Ok(Vec::new());
    };
    let h = h_graph(g)?;
    let edges = h.edges();
    let n_plus_1 = g.n_plus_1();
    let mut walk = PartialWalk {
        edges: &edges,
        free_from: n_plus_1 - 3,
        res: a.as_slice().to_vec(),
        b: vec![0; edges.len()],
        leak_left: y,
        out: Vec::new(),
    };
    // inflows at the last three vertices start from zero
    for v in walk.free_from..n_plus_1 {
        walk.res[v] = 0;
    }
    walk.visit_vertex(0, 0);
    Ok(walk.out)
}

struct PartialWalk<'a> {
    edges: &'a [crate::graph::Edge],
    /// 0-based index of vertex `n-1`; constraints stop here.
    free_from: usize,
    res: Vec<i64>,
    b: Vec<u64>,
    leak_left: i64,
    out: Vec<PartialFlow>,
}

impl PartialWalk<'_> {
    fn visit_vertex(&mut self, v: usize, idx: usize) {
        if v == self.free_from {
            if self.leak_left == 0 {
                let f = self.free_from;
                self.out.push(PartialFlow {
                    b_h: FlowVector(self.b.clone()),
                    inflows: [self.res[f], self.res[f + 1], self.res[f + 2]],
                    y_pos: self
                        .edges
                        .iter()
                        .zip(&self.b)
                        .filter(|(e, _)| e.sign == Sign::Plus)
                        .map(|(_, &b)| b)
                        .sum(),
                });
            }
            return;
        }
        if self.res[v] < 0 {
            return;
        }
        self.visit_edge(v, idx);
    }

    fn visit_edge(&mut self, v: usize, idx: usize) {
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
        let mut hi = supply / coef;
        if e.sign == Sign::Plus {
            hi = hi.min(self.leak_left);
        }
        let lo = if last {
            if supply % coef != 0 || supply / coef > hi {
                return;
            }
            supply / coef
        } else {
            0
        };
        let delta = |t: i64| if e.sign == Sign::Minus { t } else { -t };
        for t in lo..=hi {
            self.res[v] = supply - coef * t;
            if !e.is_loop() {
                self.res[e.j - 1] += delta(t);
            }
            if e.sign == Sign::Plus {
                self.leak_left -= t;
            }
            self.b[idx] = t as u64;
            self.visit_edge(v, idx + 1);
            if !e.is_loop() {
                self.res[e.j - 1] -= delta(t);
            }
            if e.sign == Sign::Plus {
                self.leak_left += t;
            }
        }
        self.b[idx] = 0;
        self.res[v] = supply;
    }
}

fn to_value(edge: crate::graph::Edge, value: i64) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::NegativeExtension { edge, value })
}

/// The unique flow on `G - (n-1, n)` restricting to `pf`.
pub fn extend_unique(g: &SignedMultigraph, pf: &PartialFlow, a: &NetflowVector) -> Result<FlowVector> {
    check_structure(g)?;
    a.check_len(g.n_plus_1())?;
    let [_, upper, lower] = distinguished_edges(g.n_plus_1());
    let (x, y) = pf.extension_values(a);
    let mut b = pf.b_h.0.clone();
    b.push(to_value(upper, x)?);
    b.push(to_value(lower, y)?);
    Ok(FlowVector(b))
}

/// The `k`-th extension of `pf` to `G`, with `k` the flow on `(n-1, n)`.
pub fn extend_with_index(g: &SignedMultigraph, pf: &PartialFlow, a: &NetflowVector, k: u64) -> Result<FlowVector> {
    check_structure(g)?;
    a.check_len(g.n_plus_1())?;
    let [_, upper, lower] = distinguished_edges(g.n_plus_1());
    let (x, y) = pf.extension_values(a);
    if k as i128 > x as i128 {
        return Err(Error::IndexOutOfRange { k, max: x });
    }
    let k_i = k as i64;
    let mut b = pf.b_h.0.clone();
    b.push(k);
    b.push(to_value(upper, x - k_i)?);
    b.push(to_value(lower, y + k_i)?);
    Ok(FlowVector(b))
}

fn partial_from_restriction(g: &SignedMultigraph, h_values: &[u64]) -> Result<PartialFlow> {
    let h = h_graph(g)?;
    let n_plus_1 = g.n_plus_1();
    let mut inflows = [0i64; 3];
    let mut y_pos = 0u64;
    for (e, &b) in h.edges().iter().zip(h_values) {
        if e.sign == Sign::Plus {
            y_pos += b;
        }
        if e.j >= n_plus_1 - 2 && !e.is_loop() {
            let slot = &mut inflows[e.j + 2 - n_plus_1];
            match e.sign {
                Sign::Minus => *slot += b as i64,
                Sign::Plus => *slot -= b as i64,
            }
        }
    }
    Ok(PartialFlow {
        b_h: FlowVector(h_values.to_vec()),
        inflows,
        y_pos,
    })
}

/// Splits a flow on `G` into its partial flow and extension index.
pub fn decompose(g: &SignedMultigraph, f: &FlowVector, a: &NetflowVector) -> Result<(PartialFlow, u64)> {
    check_structure(g)?;
    if !check_flow(g, f, a)? {
        return Err(Error::InvalidFlow(format!(
            "{:?} is not an a-flow for a = {:?}",
            f.0,
            a.as_slice()
        )));
    }
    let cut = f.len() - 3;
    let pf = partial_from_restriction(g, &f.0[..cut])?;
    Ok((pf, f.0[cut]))
}

/// Restricts a flow on `G - (n-1, n)` to its partial flow.
pub fn restrict_unique(g: &SignedMultigraph, f: &FlowVector, a: &NetflowVector) -> Result<PartialFlow> {
    check_structure(g)?;
    let bridge = distinguished_edges(g.n_plus_1())[0];
    let g_minus = g.delete_edges(&[bridge])?;
    if !check_flow(&g_minus, f, a)? {
        return Err(Error::InvalidFlow(format!(
            "{:?} is not an a-flow on G - {bridge} for a = {:?}",
            f.0,
            a.as_slice()
        )));
    }
    partial_from_restriction(g, &f.0[..f.len() - 2])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCount {
    /// Sum of true fiber sizes; equals `K_G(a)`.
    pub total: BigUint,
    /// Partial flows whose unique extension is nonnegative; equals
    /// `K_{G-(n-1,n)}(a)`.
    pub companion: BigUint,
    /// Every partial flow, extendable or not.
    pub partial_flows: usize,
    /// `sum (Y_{n-1} + a_{n-1} + 1)` over the extendable partial flows.
    pub nominal_total: BigInt,
}

impl PartialCount {
    /// Whether the textbook fiber sizes reproduce the true count here.
    pub fn nominal_matches(&self) -> bool {
        self.nominal_total == BigInt::from(self.total.clone()) && self.companion == BigUint::from(self.partial_flows)
    }
}

/// `K_G(a)` summed over partial flows, with `K_{G-(n-1,n)}(a)` alongside.
pub fn count_via_partial(g: &SignedMultigraph, a: &NetflowVector) -> Result<PartialCount> {
    let pfs = enumerate_partial_flows(g, a)?;
    let mut total = BigUint::zero();
    let mut companion = BigUint::zero();
    let mut nominal_total = BigInt::zero();
    for pf in &pfs {
        total += pf.fiber_size(a);
        if pf.extends_uniquely(a) {
            companion += 1u32;
            nominal_total += pf.nominal_fiber_size(a);
        }
    }
    Ok(PartialCount {
        total,
        companion,
        partial_flows: pfs.len(),
        nominal_total,
    })
}

/// One fiber of the fibration: a partial flow and every flow on `G` above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub partial: PartialFlow,
    pub flows: Vec<FlowVector>,
}

pub fn fibration(g: &SignedMultigraph, a: &NetflowVector) -> Result<Vec<Fiber>> {
    enumerate_partial_flows(g, a)?
        .into_iter()
        .map(|pf| {
            let flows = pf
                .fiber_range(a)
                .map(|k| extend_with_index(g, &pf, a, k as u64))
                .collect::<Result<Vec<_>>>()?;
            Ok(Fiber { partial: pf, flows })
        })
        .collect()
}

/// JSON witness for one fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberCertificate {
    pub partial_flow: Vec<u64>,
    #[serde(rename = "Y")]
    pub y: [i64; 3],
    pub fiber_size: u64,
    pub fiber: Vec<Vec<u64>>,
}

impl From<&Fiber> for FiberCertificate {
    fn from(fiber: &Fiber) -> Self {
        FiberCertificate {
            partial_flow: fiber.partial.b_h.0.clone(),
            y: fiber.partial.inflows,
            fiber_size: fiber.flows.len() as u64,
            fiber: fiber.flows.iter().map(|f| f.0.clone()).collect(),
        }
    }
}

/// Sums behind the averaging step: `c * sum Y_{n-1} = #pf * (S - 2y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingCheck {
    pub sum_inflow: BigInt,
    pub partial_flows: usize,
    /// `a_1 + ... + a_{n-2} - 2y` (with `y = 0` in type A).
    pub prefix_term: i64,
    pub holds: bool,
}

/// Evaluates the averaging identity over all partial flows, cross-multiplied
/// with `c = p / q`.
pub fn averaging_check(g: &SignedMultigraph, a: &NetflowVector, c: RatioConstant) -> Result<AveragingCheck> {
    let pfs = enumerate_partial_flows(g, a)?;
    let n_plus_1 = g.n_plus_1();
    let y = forced_leak(g, a).unwrap_or(0);
    let prefix_term: i64 = a.as_slice()[..n_plus_1 - 3].iter().sum::<i64>() - 2 * y;
    let sum_inflow: BigInt = pfs.iter().map(|pf| BigInt::from(pf.inflows[0])).sum();
    let count = BigInt::from(pfs.len());
    let holds = match c {
        RatioConstant::Exact(c) => {
            BigInt::from(*c.numer()) * &sum_inflow == BigInt::from(*c.denom()) * &count * prefix_term
        }
        // no edges feed the last three vertices from below
        RatioConstant::Unconstrained => sum_inflow.is_zero() && (pfs.is_empty() || prefix_term == 0),
    };
    Ok(AveragingCheck {
        sum_inflow,
        partial_flows: pfs.len(),
        prefix_term,
        holds,
    })
}
