//! Rational maps between products of generalized Severi-Brauer varieties.
//!
//! A rational map `Y --> X(p^k1;D_1) x ... x X(p^kn;D_n)` exists iff each
//! factor `X(p^kj;D_j)` has a rational point over `F(Y)`, i.e. iff the
//! index of `D_j` over `F(Y)` divides `p^kj`. All searches run over
//! `[1, p^s]` coefficient ranges and return the lexicographically smallest
//! witness.

use crate::arith;
use crate::brauer::{combine, subgroup_generated, subgroups_equal, BrauerClass, DivisionAlgebra};
use crate::error::{Error, Result};
use crate::reduction::{capped_valuation, check_common_degree, reduced_index, GsbFactor, GsbProduct, TupleRange};

/// Index reduction data for one target factor over the source's function field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorWitness {
    pub factor: GsbFactor,
    /// Index of the factor's algebra over the source function field.
    pub index: u64,
    /// Lexicographically smallest twist tuple attaining `index`.
    pub twists: Vec<u64>,
    pub rational_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    pub holds: bool,
    pub factors: Vec<FactorWitness>,
}

impl MapCheck {
    /// Target factors without a rational point over the source.
    pub fn refuting(&self) -> impl Iterator<Item = &FactorWitness> {
        self.factors.iter().filter(|w| !w.rational_point)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMapReport {
    pub forward: MapCheck,
    /// Present only when both directions were decided.
    pub backward: Option<MapCheck>,
}

impl RationalMapReport {
    pub fn holds(&self) -> bool {
        self.forward.holds && self.backward.as_ref().is_none_or(|b| b.holds)
    }
}

pub fn rational_point_witness(target: &GsbFactor, base: &GsbProduct) -> Result<FactorWitness> {
    let reduction = reduced_index(target.algebra(), base)?;
    let rational_point = target.reduced_dimension().is_multiple_of(reduction.index);
    Ok(FactorWitness {
        factor: target.clone(),
        index: reduction.index,
        twists: reduction.witness,
        rational_point,
    })
}

/// Whether `target` has a rational point over the function field of `base`.
pub fn has_rational_point_over(target: &GsbFactor, base: &GsbProduct) -> Result<bool> {
    Ok(rational_point_witness(target, base)?.rational_point)
}

fn map_check(source: &GsbProduct, target: &GsbProduct) -> Result<MapCheck> {
    if source.model() != target.model() {
        return Err(Error::ModelMismatch);
    }
    let factors = target
        .factors()
        .iter()
        .map(|f| rational_point_witness(f, source))
        .collect::<Result<Vec<_>>>()?;
    let holds = factors.iter().all(|w| w.rational_point);
    Ok(MapCheck { holds, factors })
}

/// Decides `source --> target`; the report has no backward part.
pub fn exists_rational_map(source: &GsbProduct, target: &GsbProduct) -> Result<RationalMapReport> {
    Ok(RationalMapReport { forward: map_check(source, target)?, backward: None })
}

/// Decides rational maps in both directions between `a` and `b`.
pub fn equivalent(a: &GsbProduct, b: &GsbProduct) -> Result<RationalMapReport> {
    Ok(RationalMapReport { forward: map_check(a, b)?, backward: Some(map_check(b, a)?) })
}

fn classes(algebras: &[DivisionAlgebra]) -> Vec<BrauerClass> {
    algebras.iter().map(|a| a.class().clone()).collect()
}

/// Whether the two families generate the same subgroup of the Brauer group;
/// equivalent to rational maps both ways between the classical products.
pub fn classical_criterion(left: &[DivisionAlgebra], right: &[DivisionAlgebra]) -> Result<bool> {
    let model = left
        .iter()
        .chain(right)
        .next()
        .ok_or_else(|| Error::Precondition("both families are empty".into()))?
        .model();
    let a = subgroup_generated(model, &classes(left))?;
    let b = subgroup_generated(model, &classes(right))?;
    subgroups_equal(&a, &b)
}

/// `sum_j v_p(gcd(c_j, p^k))`.
pub fn valuation_sum(coefficients: &[u64], p: u64, k: u32) -> u32 {
    coefficients.iter().map(|&c| capped_valuation(c, p, k)).sum()
}

/// Checks `[target] = sum_j c_j [basis_j]` and the valuation condition
/// `sum_j v_p(gcd(c_j, p^k)) = k (n - 1)`.
pub fn is_relation(target: &DivisionAlgebra, basis: &[DivisionAlgebra], coefficients: &[u64], k: u32) -> Result<bool> {
    if coefficients.len() != basis.len() || basis.is_empty() {
        return Err(Error::Arity { expected: basis.len(), found: coefficients.len() });
    }
    let mut terms: Vec<(&BrauerClass, i64)> = vec![(target.class(), 1)];
    terms.extend(basis.iter().map(|b| b.class()).zip(coefficients.iter().map(|&c| -(c as i64))));
    let vanishes = combine(&terms)?.is_zero();
    let wanted = k * (basis.len() as u32 - 1);
    Ok(vanishes && valuation_sum(coefficients, target.prime(), k) == wanted)
}

/// Lexicographically smallest coefficient tuple in `[1, p^s]^n` satisfying
/// [`is_relation`].
fn smallest_relation(target: &DivisionAlgebra, basis: &[DivisionAlgebra], k: u32) -> Result<Option<Vec<u64>>> {
    let bound = arith::pow(target.prime(), target.degree_exponent());
    for coefficients in TupleRange::new(basis.len(), bound) {
        if is_relation(target, basis, &coefficients, k)? {
            return Ok(Some(coefficients));
        }
    }
    Ok(None)
}

/// Exponent relation attached to a rational map
/// `X(p^k;D_1) x ... x X(p^k;D_n) --> X(p^k;D)` when `exp(D)` dominates
/// the exponents of the base algebras.
///
/// Returns `None` when no such rational map exists. If the map exists the
/// returned tuple `i` satisfies `[D] = sum i_j [D_j]` and
/// `sum v_p(gcd(i_j, p^k)) = k (n - 1)`.
pub fn lemma_witness(target: &DivisionAlgebra, base: &GsbProduct) -> Result<Option<Vec<u64>>> {
    let k = base
        .common_k()
        .ok_or_else(|| Error::Precondition("all base factors must share one reduced dimension".into()))?;
    let algebras = base.algebras();
    check_common_degree(std::iter::once(target).chain(&algebras))?;
    let max_base = algebras.iter().map(DivisionAlgebra::exponent).max().unwrap_or(1);
    if target.exponent() < max_base {
        return Err(Error::Hypothesis(format!(
            "exp({}) = {} is smaller than the largest base exponent {}",
            target.name(),
            target.exponent(),
            max_base
        )));
    }
    let factor = GsbFactor::new(target.clone(), k)?;
    if !has_rational_point_over(&factor, base)? {
        return Ok(None);
    }
    match smallest_relation(target, &algebras, k)? {
        Some(i) => Ok(Some(i)),
        None => Err(Error::Internal(format!(
            "{factor} has a rational point over {base} but no exponent relation was found"
        ))),
    }
}

/// Coefficient matrices for the equal-exponent criterion: row `i` of
/// `alpha` expresses `[D_i]` through the right family, row `j` of `beta`
/// expresses `[D'_j]` through the left family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProdexpWitness {
    pub alpha: Vec<Vec<u64>>,
    pub beta: Vec<Vec<u64>>,
}

fn common_exponent(family: &[DivisionAlgebra], side: &str) -> Result<u64> {
    let e = family[0].exponent();
    match family.iter().find(|a| a.exponent() != e) {
        None => Ok(e),
        Some(a) => Err(Error::Hypothesis(format!(
            "{side} family has unequal exponents: exp({}) = {}, exp({}) = {}",
            family[0].name(),
            e,
            a.name(),
            a.exponent()
        ))),
    }
}

/// Exponent-matrix criterion for rational maps both ways between the
/// uniform products `X(p^k;D_1) x ... x X(p^k;D_n)` and
/// `X(p^k;D'_1) x ... x X(p^k;D'_m)`, valid when exponents are constant
/// within each family.
pub fn prodexp_criterion(left: &[DivisionAlgebra], right: &[DivisionAlgebra], k: u32) -> Result<Option<ProdexpWitness>> {
    if left.is_empty() || right.is_empty() {
        return Err(Error::Precondition("both families must be non-empty".into()));
    }
    let s = check_common_degree(left.iter().chain(right))?;
    if k >= s {
        return Err(Error::Precondition(format!("k = {k} must be smaller than s = {s}")));
    }
    common_exponent(left, "left")?;
    common_exponent(right, "right")?;

    let mut alpha = Vec::with_capacity(left.len());
    for d in left {
        match smallest_relation(d, right, k)? {
            Some(row) => alpha.push(row),
            None => return Ok(None),
        }
    }
    let mut beta = Vec::with_capacity(right.len());
    for d in right {
        match smallest_relation(d, left, k)? {
            Some(row) => beta.push(row),
            None => return Ok(None),
        }
    }
    Ok(Some(ProdexpWitness { alpha, beta }))
}

/// Dimension of `X(p^k;D)` for `D` of degree `p^s`: `p^k (p^s - p^k)`.
pub fn dimension(factor: &GsbFactor) -> u64 {
    let m = factor.reduced_dimension();
    m * (factor.algebra().degree() - m)
}
