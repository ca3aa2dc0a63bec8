#![allow(dead_code)]

use kostant::graph::{Edge, GraphKind, NetflowVector, SignedMultigraph};
use rand::Rng;

/// A random graph on `n_plus_1` vertices; every edge class is present with
/// probability `density` and multiplicity `1..=max_mult`.
pub fn random_graph(
    rng: &mut impl Rng,
    n_plus_1: usize,
    kind: GraphKind,
    max_mult: u32,
    density: f64,
) -> SignedMultigraph {
    let mut g = SignedMultigraph::empty(n_plus_1, kind).unwrap();
    for i in 1..=n_plus_1 {
        for j in i..=n_plus_1 {
            let classes: &[Edge] = match (kind, i == j) {
                (GraphKind::TypeA, true) => &[],
                (GraphKind::TypeA, false) => &[Edge::neg(i, j)],
                (GraphKind::TypeC, true) => &[Edge::pos(i, i)],
                (GraphKind::TypeC, false) => &[Edge::neg(i, j), Edge::pos(i, j)],
            };
            for &e in classes {
                if rng.gen_bool(density) {
                    g.add(e, rng.gen_range(1..=max_mult)).unwrap();
                }
            }
        }
    }
    g
}

/// `0 <= a_i <= max_entry` for `i <= n`, last coordinate `-sum` (type A) or
/// `2y - sum` with `0 <= y <= max_entry` (type C).
pub fn random_netflow(rng: &mut impl Rng, n_plus_1: usize, kind: GraphKind, max_entry: i64) -> NetflowVector {
    let mut a: Vec<i64> = (1..n_plus_1).map(|_| rng.gen_range(0..=max_entry)).collect();
    let sum: i64 = a.iter().sum();
    let y = match kind {
        GraphKind::TypeA => 0,
        GraphKind::TypeC => rng.gen_range(0..=max_entry),
    };
    a.push(2 * y - sum);
    NetflowVector::new(a)
}

/// Type C netflow with the positive total `y` drawn from `0..=y_cap(a)`.
pub fn netflow_with_leak(
    rng: &mut impl Rng,
    n_plus_1: usize,
    max_entry: i64,
    y_cap: impl Fn(&[i64]) -> i64,
) -> NetflowVector {
    let mut a: Vec<i64> = (1..n_plus_1).map(|_| rng.gen_range(0..=max_entry)).collect();
    let sum: i64 = a.iter().sum();
    let y = rng.gen_range(0..=y_cap(&a).max(0));
    a.push(2 * y - sum);
    NetflowVector::new(a)
}
