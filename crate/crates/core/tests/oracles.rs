//! Frozen expected values, each checked against a brute-force oracle and
//! against the library.

mod common;

use std::collections::BTreeSet;

use common::*;
use upper_motives::{
    combine, mu, reduced_index, subgroup_generated, BrauerGroupModel, DivisionAlgebra, GsbFactor, GsbProduct,
};

fn algebra(model: &std::sync::Arc<BrauerGroupModel>, v: &[i64]) -> DivisionAlgebra {
    DivisionAlgebra::from_class(model.class(v).unwrap(), None)
}

#[test]
fn combine_in_z4_z2_z2() {
    let orders = [4, 2, 2];
    let (d1, d2, d3) = (vec![1, 0, 0], vec![2, 1, 0], vec![2, 0, 1]);
    let frozen = vec![0, 0, 1];
    let oracle = raw_combine(&orders, &[(d3.clone(), 1), (d1.clone(), -2), (d2.clone(), -2)]);
    assert_eq!(oracle, frozen);

    let m = BrauerGroupModel::new(2, orders.to_vec()).unwrap();
    let (c1, c2, c3) = (m.class(&[1, 0, 0]).unwrap(), m.class(&[2, 1, 0]).unwrap(), m.class(&[2, 0, 1]).unwrap());
    let got = combine(&[(&c3, 1), (&c1, -2), (&c2, -2)]).unwrap();
    assert_eq!(got.exponents(), frozen.as_slice());
}

#[test]
fn subgroup_of_two_biquaternions() {
    let orders = [2, 2, 2];
    let frozen: BTreeSet<Vec<u64>> = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]].iter().map(|v| v.to_vec()).collect();
    assert_eq!(raw_subgroup(&orders, &[vec![1, 1, 0], vec![1, 0, 1]]), frozen);

    let m = BrauerGroupModel::new(2, orders.to_vec()).unwrap();
    let h = subgroup_generated(&m, &[m.class(&[1, 1, 0]).unwrap(), m.class(&[1, 0, 1]).unwrap()]).unwrap();
    let got: BTreeSet<Vec<u64>> = h.elements().iter().map(|c| c.exponents().to_vec()).collect();
    assert_eq!(got, frozen);
}

#[test]
fn mu_values_ex1() {
    let orders = [2, 2, 2];
    let base_raw = [(vec![1, 1, 0], 1), (vec![1, 0, 1], 1)];
    let target_raw = [0, 1, 1];
    // Frozen from the oracle: (2,2) -> 1*1*ind(Δ3) = 4, (1,1) -> 2*2*ind(0) = 4.
    for (twists, frozen) in [([2, 2], 4), ([1, 1], 4), ([1, 2], 8), ([2, 1], 8)] {
        assert_eq!(raw_mu(&orders, 2, &target_raw, &base_raw, &twists), frozen);
    }

    let m = BrauerGroupModel::new(2, orders.to_vec()).unwrap();
    let base = GsbProduct::uniform(&[algebra(&m, &[1, 1, 0]), algebra(&m, &[1, 0, 1])], 1).unwrap();
    let target = algebra(&m, &[0, 1, 1]);
    for (twists, frozen) in [([2, 2], 4), ([1, 1], 4), ([1, 2], 8), ([2, 1], 8)] {
        assert_eq!(mu(&target, &base, &twists).unwrap(), frozen);
    }
}

#[test]
fn reduced_index_examples() {
    // ex1: 16 tuples, minimum 4 first attained at (1,1).
    let ex1 = [2, 2, 2];
    let base = [(vec![1, 1, 0], 1), (vec![1, 0, 1], 1)];
    assert_eq!(raw_reduced_index(&ex1, 2, &[0, 1, 1], &base, 4), (4, vec![1, 1]));
    // ex2: 16 tuples, minimum 2 first attained at (2,2).
    let ex2 = [4, 2, 2];
    let base = [(vec![1, 0, 0], 1), (vec![2, 1, 0], 1)];
    assert_eq!(raw_reduced_index(&ex2, 2, &[2, 0, 1], &base, 4), (2, vec![2, 2]));

    let m = BrauerGroupModel::new(2, ex1.to_vec()).unwrap();
    let x = GsbProduct::uniform(&[algebra(&m, &[1, 1, 0]), algebra(&m, &[1, 0, 1])], 1).unwrap();
    let r = reduced_index(&algebra(&m, &[0, 1, 1]), &x).unwrap();
    assert_eq!((r.index, r.witness), (4, vec![1, 1]));

    let m = BrauerGroupModel::new(2, ex2.to_vec()).unwrap();
    let x = GsbProduct::uniform(&[algebra(&m, &[1, 0, 0]), algebra(&m, &[2, 1, 0])], 1).unwrap();
    let r = reduced_index(&algebra(&m, &[2, 0, 1]), &x).unwrap();
    assert_eq!((r.index, r.witness), (2, vec![2, 2]));
}

/// Every (target, single-factor base, k) in the sweep models agrees with
/// the raw enumeration, including the witness.
#[test]
fn reduced_index_matches_oracle_on_sweep() {
    let mut checked = 0;
    for m in sweep_models() {
        let orders = m.orders().to_vec();
        let algebras = division_algebras(&m);
        for d in &algebras {
            for b in algebras.iter().filter(|b| b.degree() == d.degree()) {
                for c in algebras.iter().filter(|c| c.degree() == d.degree()) {
                    for k in 0..d.degree_exponent() {
                        let base = GsbProduct::new(vec![
                            GsbFactor::new(b.clone(), k).unwrap(),
                            GsbFactor::new(c.clone(), 0).unwrap(),
                        ])
                        .unwrap();
                        let raw_base = [(b.class().exponents().to_vec(), k), (c.class().exponents().to_vec(), 0)];
                        let (idx, wit) =
                            raw_reduced_index(&orders, 2, d.class().exponents(), &raw_base, d.degree());
                        let r = reduced_index(d, &base).unwrap();
                        assert_eq!((r.index, r.witness.clone()), (idx, wit), "{d} over {base}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn index_and_exponent_match_oracle_everywhere() {
    let mut models = sweep_models();
    models.push(BrauerGroupModel::new(2, vec![4, 2, 2]).unwrap());
    models.push(BrauerGroupModel::new(3, vec![9, 3]).unwrap());
    for m in models {
        for c in m.elements() {
            assert_eq!(c.index(), raw_index(m.orders(), c.exponents()), "{c}");
            assert_eq!(c.exponent(), raw_exponent(m.orders(), c.exponents()), "{c}");
        }
    }
}
