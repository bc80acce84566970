//! Index reduction over function fields of products of generalized
//! Severi-Brauer varieties.
//!
//! For division algebras `D, D_1, ..., D_n` of common degree `p^s` and
//! `E = F(X(p^k1;D_1) x ... x X(p^kn;D_n))`,
//!
//! ```text
//! ind(D_E) = min over i in [1, p^s]^n of mu(i)
//! mu(i)    = prod_j p^kj / gcd(i_j, p^kj) * ind(D - i_1 D_1 - ... - i_n D_n)
//! ```

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::brauer::{combine, BrauerClass, BrauerGroupModel, DivisionAlgebra};
use crate::error::{Error, Result};

/// `X(p^k; D)`: right ideals of reduced dimension `p^k` in `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GsbFactor {
    algebra: DivisionAlgebra,
    k: u32,
}

impl GsbFactor {
    pub fn new(algebra: DivisionAlgebra, k: u32) -> Result<Self> {
        if k >= algebra.degree_exponent() {
            return Err(Error::ReducedDimension {
                name: algebra.name(),
                prime: algebra.prime(),
                k,
                s: algebra.degree_exponent(),
            });
        }
        Ok(GsbFactor { algebra, k })
    }

    pub fn algebra(&self) -> &DivisionAlgebra {
        &self.algebra
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn reduced_dimension(&self) -> u64 {
        arith::pow(self.algebra.prime(), self.k)
    }
}

impl fmt::Display for GsbFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({};{})", self.reduced_dimension(), self.algebra.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GsbProduct {
    factors: Vec<GsbFactor>,
}

impl GsbProduct {
    pub fn new(factors: Vec<GsbFactor>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::Precondition("a product needs at least one factor".into()))?;
        for f in &factors[1..] {
            first.algebra.class().ensure_same_model(f.algebra.class())?;
        }
        Ok(GsbProduct { factors })
    }

    pub fn single(factor: GsbFactor) -> Self {
        GsbProduct { factors: vec![factor] }
    }

    /// All factors share one reduced dimension `p^k`.
    pub fn uniform(algebras: &[DivisionAlgebra], k: u32) -> Result<Self> {
        let factors = algebras
            .iter()
            .map(|a| GsbFactor::new(a.clone(), k))
            .collect::<Result<Vec<_>>>()?;
        GsbProduct::new(factors)
    }

    pub fn factors(&self) -> &[GsbFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn model(&self) -> &Arc<BrauerGroupModel> {
        self.factors[0].algebra.model()
    }

    pub fn prime(&self) -> u64 {
        self.model().prime()
    }

    /// The common `k` of all factors, if there is one.
    pub fn common_k(&self) -> Option<u32> {
        let k = self.factors[0].k;
        self.factors.iter().all(|f| f.k == k).then_some(k)
    }

    pub fn algebras(&self) -> Vec<DivisionAlgebra> {
        self.factors.iter().map(|f| f.algebra.clone()).collect()
    }
}

impl fmt::Display for GsbProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// p-adic valuation: the largest `e` with `p^e | n`.
pub fn vp(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    Ok(e)
}

/// `v_p(gcd(i, p^k))` for `i >= 1`, which is `min(v_p(i), k)`.
pub(crate) fn capped_valuation(i: u64, p: u64, k: u32) -> u32 {
    vp(i, p).map(|v| v.min(k)).unwrap_or(k)
}

/// The class `D - i_1 D_1 - ... - i_n D_n`.
pub fn residual_class(target: &DivisionAlgebra, base: &GsbProduct, twists: &[u64]) -> Result<BrauerClass> {
    let negated: Vec<i64> = twists.iter().map(|&i| -(i as i64)).collect();
    let mut terms: Vec<(&BrauerClass, i64)> = vec![(target.class(), 1)];
    terms.extend(base.factors.iter().map(|f| f.algebra.class()).zip(negated));
    combine(&terms)
}

pub fn mu(target: &DivisionAlgebra, base: &GsbProduct, twists: &[u64]) -> Result<u64> {
    target.class().ensure_same_model(base.factors[0].algebra.class())?;
    if twists.len() != base.len() {
        return Err(Error::Arity { expected: base.len(), found: twists.len() });
    }
    if twists.contains(&0) {
        return Err(Error::Precondition("twist exponents must be at least 1".into()));
    }
    let p = base.prime();
    let scale: u64 = base
        .factors
        .iter()
        .zip(twists)
        .map(|(f, &i)| {
            let pk = f.reduced_dimension();
            pk / arith::gcd(i, pk)
        })
        .product();
    debug_assert!(arith::exact_log(scale, p).is_some());
    Ok(scale * residual_class(target, base, twists)?.index())
}

/// Result of [`reduced_index`]: the index over the function field and the
/// lexicographically smallest twist tuple attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReduction {
    pub index: u64,
    pub witness: Vec<u64>,
}

pub(crate) fn check_common_degree<'a>(
    algebras: impl IntoIterator<Item = &'a DivisionAlgebra>,
) -> Result<u32> {
    let mut iter = algebras.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Precondition("no algebras given".into()))?;
    let s = first.degree_exponent();
    for a in iter {
        first.class().ensure_same_model(a.class())?;
        if a.degree_exponent() != s {
            return Err(Error::Precondition(format!(
                "index reduction needs algebras of one degree: {} has degree {}, {} has degree {}",
                first.name(),
                first.degree(),
                a.name(),
                a.degree()
            )));
        }
    }
    Ok(s)
}

/// Iterates `[1, bound]^n` in lexicographic order.
pub(crate) struct TupleRange {
    bound: u64,
    current: Option<Vec<u64>>,
}

impl TupleRange {
    pub(crate) fn new(n: usize, bound: u64) -> Self {
        TupleRange { bound, current: (bound >= 1).then(|| vec![1; n]) }
    }
}

impl Iterator for TupleRange {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            if cur[pos] < self.bound {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 1;
        }
        Some(out)
    }
}

/// Index of `target` over the function field of `base`.
pub fn reduced_index(target: &DivisionAlgebra, base: &GsbProduct) -> Result<IndexReduction> {
    let s = check_common_degree(std::iter::once(target).chain(base.factors.iter().map(|f| &f.algebra)))?;
    let bound = arith::pow(base.prime(), s);
    let mut best: Option<IndexReduction> = None;
    for twists in TupleRange::new(base.len(), bound) {
        let value = mu(target, base, &twists)?;
        if best.as_ref().is_none_or(|b| value < b.index) {
            best = Some(IndexReduction { index: value, witness: twists });
            if value == 1 {
                break;
            }
        }
    }
    best.ok_or_else(|| Error::Internal("empty twist range".into()))
}
