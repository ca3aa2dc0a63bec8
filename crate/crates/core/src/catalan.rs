//! The complete type A graph and the Catalan evaluation point.

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::{Edge, GraphKind, NetflowVector, SignedMultigraph};

/// `K_{n+1}`: every negative edge `(i, j)`, `i < j`, once.
pub fn complete_type_a(n_plus_1: usize) -> SignedMultigraph {
    let mut g = SignedMultigraph::empty(n_plus_1, GraphKind::TypeA).expect("at least one vertex");
    for i in 1..=n_plus_1 {
        for j in i + 1..=n_plus_1 {
            g.add(Edge::neg(i, j), 1).expect("valid type A edge");
        }
    }
    g
}

/// `(1, 2, ..., n, -n(n+1)/2)`.
pub fn catalan_point(n: usize) -> NetflowVector {
    let mut a: Vec<i64> = (1..=n as i64).collect();
    a.push(-((n * (n + 1) / 2) as i64));
    NetflowVector::new(a)
}

/// `C_k = binom(2k, k) / (k + 1)`.
pub fn catalan_number(k: u64) -> BigUint {
    let mut binom = BigUint::one();
    for i in 0..k {
        binom = binom * (2 * k - i) / (i + 1);
    }
    binom / (k + 1)
}

/// `C_1 * C_2 * ... * C_n`.
pub fn catalan_product(n: u64) -> BigUint {
    (1..=n).map(catalan_number).product()
}
