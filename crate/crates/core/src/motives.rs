//! Upper p-motives of products of generalized Severi-Brauer varieties.
//!
//! The motive category is never built. An [`UpperMotive`] is a canonical
//! name for the upper motive of `X(p^k1;D_1) x ... x X(p^kn;D_n)`, and two
//! names denote isomorphic motives exactly when the underlying products
//! admit rational maps in both directions. Shifts are not tracked.

use std::fmt;
use std::sync::Arc;

use crate::brauer::{subgroup_generated, subgroups_equal, BrauerGroupModel, DivisionAlgebra};
use crate::error::{Error, Result};
use crate::maps::{dimension, equivalent};
use crate::reduction::{GsbFactor, GsbProduct};

/// Factors sorted by `(k, degree exponent, exponent vector)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpperMotive {
    factors: Vec<GsbFactor>,
}

impl UpperMotive {
    pub fn factors(&self) -> &[GsbFactor] {
        &self.factors
    }

    pub fn model(&self) -> &Arc<BrauerGroupModel> {
        self.factors[0].algebra().model()
    }

    pub fn ks(&self) -> Vec<u32> {
        self.factors.iter().map(GsbFactor::k).collect()
    }

    pub fn product(&self) -> GsbProduct {
        GsbProduct::new(self.factors.clone()).expect("descriptor factors share a model")
    }
}

impl fmt::Display for UpperMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.factors.iter().map(|x| x.k().to_string()).collect();
        let names: Vec<String> = self.factors.iter().map(|x| x.algebra().name()).collect();
        write!(f, "M^{{{}}}_{{{}}}", ks.join(","), names.join(","))
    }
}

/// Canonical descriptor of the upper motive of `x`.
pub fn upper_motive(x: &GsbProduct) -> UpperMotive {
    let mut factors = x.factors().to_vec();
    factors.sort_by(|a, b| {
        let key = |f: &GsbFactor| (f.k(), f.algebra().degree_exponent(), f.algebra().class().exponents().to_vec());
        key(a).cmp(&key(b))
    });
    UpperMotive { factors }
}

/// Isomorphism of upper motives, decided by rational maps both ways.
///
/// Index reduction only applies to algebras of one degree. Single
/// generalized Severi-Brauer varieties are incompressible, so between
/// single factors of different dimension no isomorphism exists.
pub fn motives_isomorphic(a: &UpperMotive, b: &UpperMotive) -> Result<bool> {
    if a.model() != b.model() {
        return Err(Error::ModelMismatch);
    }
    if let ([fa], [fb]) = (a.factors(), b.factors()) {
        if fa.algebra().degree() != fb.algebra().degree() && dimension(fa) != dimension(fb) {
            return Ok(false);
        }
    }
    Ok(equivalent(&a.product(), &b.product())?.holds())
}

/// Closed-form isomorphism test for single-factor upper motives
/// `M^k_D` and `M^k2_D2`: equal `k` and equal cyclic subgroups.
pub fn classify_single(d: &DivisionAlgebra, k: u32, d2: &DivisionAlgebra, k2: u32) -> Result<bool> {
    GsbFactor::new(d.clone(), k)?;
    GsbFactor::new(d2.clone(), k2)?;
    d.class().ensure_same_model(d2.class())?;
    let a = subgroup_generated(d.model(), std::slice::from_ref(d.class()))?;
    let b = subgroup_generated(d.model(), std::slice::from_ref(d2.class()))?;
    Ok(k == k2 && subgroups_equal(&a, &b)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every non-Tate motive of each family is isomorphic to one of the other.
    Equal,
    /// No non-Tate motive is shared.
    TateOnly,
    /// Some but not all non-Tate motives are shared.
    Partial,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::TateOnly => "TATE_ONLY",
            Verdict::Partial => "PARTIAL",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyComparison {
    pub verdict: Verdict,
    /// All isomorphic (left, right) pairs.
    pub shared: Vec<(UpperMotive, UpperMotive)>,
    /// A motive of one family with no isomorphic partner in the other.
    pub separating: Option<(Side, UpperMotive)>,
}

/// Upper motives of all products of generalized Severi-Brauer varieties
/// built from non-empty sub-families of `algebras`.
///
/// Ordered by number of factors (largest first), then by sub-family, then
/// by k-tuple in decreasing lexicographic order; duplicates are dropped.
pub fn family_motives(algebras: &[DivisionAlgebra]) -> Result<Vec<UpperMotive>> {
    let n = algebras.len();
    if n >= usize::BITS as usize {
        return Err(Error::Precondition("family too large".into()));
    }
    let mut masks: Vec<usize> = (1..(1usize << n)).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));

    let mut out: Vec<UpperMotive> = Vec::new();
    for mask in masks {
        let members: Vec<&DivisionAlgebra> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &algebras[i]).collect();
        // Split algebras only contribute Tate motives.
        if members.iter().any(|a| a.degree_exponent() == 0) {
            continue;
        }
        let bounds: Vec<u32> = members.iter().map(|a| a.degree_exponent()).collect();
        for ks in descending_tuples(&bounds) {
            let factors = members
                .iter()
                .zip(&ks)
                .map(|(a, &k)| GsbFactor::new((*a).clone(), k))
                .collect::<Result<Vec<_>>>()?;
            let motive = upper_motive(&GsbProduct::new(factors)?);
            if !out.contains(&motive) {
                out.push(motive);
            }
        }
    }
    Ok(out)
}

/// All tuples in `[0, b_1) x ... x [0, b_n)`, decreasing lexicographically.
fn descending_tuples(bounds: &[u32]) -> Vec<Vec<u32>> {
    bounds.iter().fold(vec![Vec::new()], |acc, &b| {
        acc.into_iter()
            .flat_map(|t| {
                (0..b).rev().map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect()
    })
}

/// Compares the non-Tate upper motives of homogeneous varieties under the
/// two product groups.
pub fn compare_families(left: &[DivisionAlgebra], right: &[DivisionAlgebra]) -> Result<FamilyComparison> {
    if let (Some(a), Some(b)) = (left.first(), right.first()) {
        a.class().ensure_same_model(b.class())?;
    }
    let lm = family_motives(left)?;
    let rm = family_motives(right)?;

    let mut shared = Vec::new();
    let mut left_matched = vec![false; lm.len()];
    let mut right_matched = vec![false; rm.len()];
    for (i, a) in lm.iter().enumerate() {
        for (j, b) in rm.iter().enumerate() {
            if motives_isomorphic(a, b)? {
                left_matched[i] = true;
                right_matched[j] = true;
                shared.push((a.clone(), b.clone()));
            }
        }
    }

    let separating = lm
        .iter()
        .zip(&left_matched)
        .find(|(_, &m)| !m)
        .map(|(x, _)| (Side::Left, x.clone()))
        .or_else(|| {
            rm.iter()
                .zip(&right_matched)
                .find(|(_, &m)| !m)
                .map(|(x, _)| (Side::Right, x.clone()))
        });

    let verdict = match (shared.is_empty(), separating.is_some()) {
        (_, false) => Verdict::Equal,
        (true, true) => Verdict::TateOnly,
        (false, true) => Verdict::Partial,
    };
    Ok(FamilyComparison { verdict, shared, separating })
}
