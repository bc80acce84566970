//! Enumerated small models and brute-force oracles shared by the
//! integration tests. The oracles work on raw exponent vectors and use
//! only repeated addition, so they do not share code paths with the
//! library.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use upper_motives::{BrauerGroupModel, DivisionAlgebra};

/// The small models used by the sweeps: `(Z/2)^r` for `r <= 3` and `Z/4 x Z/2`.
pub fn sweep_models() -> Vec<Arc<BrauerGroupModel>> {
    vec![
        BrauerGroupModel::new(2, vec![2]).unwrap(),
        BrauerGroupModel::new(2, vec![2, 2]).unwrap(),
        BrauerGroupModel::new(2, vec![2, 2, 2]).unwrap(),
        BrauerGroupModel::new(2, vec![4, 2]).unwrap(),
    ]
}

/// Every non-split class of the model, as the division algebra it determines.
pub fn division_algebras(model: &Arc<BrauerGroupModel>) -> Vec<DivisionAlgebra> {
    model
        .elements()
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| {
            let label = format!("{c}");
            DivisionAlgebra::from_class(c, Some(label))
        })
        .collect()
}

/// Adds two raw vectors one unit at a time.
pub fn raw_add(orders: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(b)
        .zip(orders)
        .map(|((&x, &y), &o)| {
            let mut v = x;
            for _ in 0..y {
                v += 1;
                if v == o {
                    v = 0;
                }
            }
            v
        })
        .collect()
}

/// Additive inverse found by searching the whole group.
pub fn raw_neg(orders: &[u64], a: &[u64]) -> Vec<u64> {
    let zero = vec![0; orders.len()];
    raw_elements(orders)
        .into_iter()
        .find(|b| raw_add(orders, a, b) == zero)
        .expect("inverse exists")
}

pub fn raw_scale(orders: &[u64], a: &[u64], c: i64) -> Vec<u64> {
    let base = if c < 0 { raw_neg(orders, a) } else { a.to_vec() };
    let mut acc = vec![0; orders.len()];
    for _ in 0..c.unsigned_abs() {
        acc = raw_add(orders, &acc, &base);
    }
    acc
}

pub fn raw_combine(orders: &[u64], terms: &[(Vec<u64>, i64)]) -> Vec<u64> {
    terms
        .iter()
        .fold(vec![0; orders.len()], |acc, (v, c)| raw_add(orders, &acc, &raw_scale(orders, v, *c)))
}

pub fn raw_elements(orders: &[u64]) -> Vec<Vec<u64>> {
    orders.iter().fold(vec![Vec::new()], |acc, &o| {
        acc.into_iter()
            .flat_map(|v| {
                (0..o).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

/// Smallest `t >= 1` with `t * x = 0` in `Z/order`.
fn raw_component_order(order: u64, x: u64) -> u64 {
    let mut t = 1;
    let mut acc = x % order;
    while acc != 0 {
        acc = (acc + x) % order;
        t += 1;
    }
    t
}

/// Smallest `t >= 1` with `t * a = 0`.
pub fn raw_exponent(orders: &[u64], a: &[u64]) -> u64 {
    let zero = vec![0; orders.len()];
    let mut acc = a.to_vec();
    let mut t = 1;
    while acc != zero {
        acc = raw_add(orders, &acc, a);
        t += 1;
    }
    t
}

/// Independent-generator index: product of component orders.
pub fn raw_index(orders: &[u64], a: &[u64]) -> u64 {
    orders.iter().zip(a).map(|(&o, &x)| raw_component_order(o, x)).product()
}

/// All integer combinations of the generators.
pub fn raw_subgroup(orders: &[u64], gens: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    out.insert(vec![0; orders.len()]);
    for g in gens {
        let e = raw_exponent(orders, g);
        let current: Vec<Vec<u64>> = out.iter().cloned().collect();
        for x in current {
            let mut y = x.clone();
            for _ in 0..e {
                y = raw_add(orders, &y, g);
                out.insert(y.clone());
            }
        }
    }
    out
}

fn raw_pow(p: u64, e: u32) -> u64 {
    (0..e).fold(1, |acc, _| acc * p)
}

fn raw_gcd_power(i: u64, p: u64, k: u32) -> u64 {
    let mut g = 1;
    let mut i = i;
    for _ in 0..k {
        if !i.is_multiple_of(p) {
            break;
        }
        i /= p;
        g *= p;
    }
    g
}

/// `mu` on raw data: `base` is a list of `(class vector, k)`.
pub fn raw_mu(orders: &[u64], p: u64, target: &[u64], base: &[(Vec<u64>, u32)], twists: &[u64]) -> u64 {
    let mut terms = vec![(target.to_vec(), 1i64)];
    let mut scale = 1;
    for ((v, k), &i) in base.iter().zip(twists) {
        terms.push((v.clone(), -(i as i64)));
        scale *= raw_pow(p, *k) / raw_gcd_power(i, p, *k);
    }
    scale * raw_index(orders, &raw_combine(orders, &terms))
}

/// Minimum of `raw_mu` over `[1, bound]^n` with the lexicographically
/// smallest minimizer, by recursive enumeration.
pub fn raw_reduced_index(
    orders: &[u64],
    p: u64,
    target: &[u64],
    base: &[(Vec<u64>, u32)],
    bound: u64,
) -> (u64, Vec<u64>) {
    fn go(
        orders: &[u64],
        p: u64,
        target: &[u64],
        base: &[(Vec<u64>, u32)],
        bound: u64,
        prefix: &mut Vec<u64>,
        best: &mut Option<(u64, Vec<u64>)>,
    ) {
        if prefix.len() == base.len() {
            let v = raw_mu(orders, p, target, base, prefix);
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                *best = Some((v, prefix.clone()));
            }
            return;
        }
        for i in 1..=bound {
            prefix.push(i);
            go(orders, p, target, base, bound, prefix, best);
            prefix.pop();
        }
    }
    let mut best = None;
    go(orders, p, target, base, bound, &mut Vec::new(), &mut best);
    best.unwrap()
}
