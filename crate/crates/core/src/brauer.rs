//! Finite abelian p-group models of a subgroup of the Brauer group.
//!
//! A model is `Z/p^e1 x ... x Z/p^er` together with an index rule. A
//! [`BrauerClass`] is an exponent vector in the model; it stands for the
//! class of a central simple algebra and for every tensor combination of
//! such classes. Exponent vectors are always stored reduced into
//! `[0, order_i)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};

/// How the index of a class is computed from its exponent vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexRule {
    /// Generators behave like independent algebras: the index of
    /// `a_1 g_1 + ... + a_r g_r` is the product of the orders of the
    /// components `a_i g_i`.
    #[default]
    GenericIndependent,
}

impl IndexRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            IndexRule::GenericIndependent => "generic_independent",
        }
    }
}

impl FromStr for IndexRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "generic_independent" => Ok(IndexRule::GenericIndependent),
            _ => Err(Error::UnsupportedIndexRule(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerGroupModel {
    prime: u64,
    orders: Vec<u64>,
    index_rule: IndexRule,
}

impl BrauerGroupModel {
    pub fn new(prime: u64, orders: Vec<u64>) -> Result<Arc<Self>> {
        Self::with_index_rule(prime, orders, IndexRule::default())
    }

    pub fn with_index_rule(prime: u64, orders: Vec<u64>, index_rule: IndexRule) -> Result<Arc<Self>> {
        if !arith::is_prime(prime) {
            return Err(Error::InvalidModel(format!("{prime} is not a prime")));
        }
        if orders.is_empty() {
            return Err(Error::InvalidModel("at least one generator is required".into()));
        }
        for (i, &order) in orders.iter().enumerate() {
            match arith::exact_log(order, prime) {
                Some(e) if e >= 1 => {}
                _ => {
                    return Err(Error::InvalidModel(format!(
                        "generator {i} has order {order}, expected a power of {prime} greater than 1"
                    )))
                }
            }
        }
        Ok(Arc::new(BrauerGroupModel { prime, orders, index_rule }))
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn index_rule(&self) -> IndexRule {
        self.index_rule
    }

    /// Number of elements of the group.
    pub fn cardinality(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(self: &Arc<Self>) -> BrauerClass {
        BrauerClass { model: Arc::clone(self), exponents: vec![0; self.rank()] }
    }

    /// Builds a class from arbitrary integer exponents, reducing each entry
    /// modulo its generator order.
    pub fn class(self: &Arc<Self>, exponents: &[i64]) -> Result<BrauerClass> {
        if exponents.len() != self.rank() {
            return Err(Error::Arity { expected: self.rank(), found: exponents.len() });
        }
        let exponents = exponents
            .iter()
            .zip(&self.orders)
            .map(|(&a, &order)| (a as i128).rem_euclid(order as i128) as u64)
            .collect();
        Ok(BrauerClass { model: Arc::clone(self), exponents })
    }

    pub fn generator(self: &Arc<Self>, i: usize) -> BrauerClass {
        let mut exponents = vec![0; self.rank()];
        exponents[i] = 1;
        BrauerClass { model: Arc::clone(self), exponents }
    }

    /// All elements in lexicographic order of their exponent vectors.
    pub fn elements(self: &Arc<Self>) -> Vec<BrauerClass> {
        let mut out = Vec::with_capacity(self.cardinality() as usize);
        let mut current = vec![0u64; self.rank()];
        loop {
            out.push(BrauerClass { model: Arc::clone(self), exponents: current.clone() });
            let mut pos = self.rank();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                current[pos] += 1;
                if current[pos] < self.orders[pos] {
                    break;
                }
                current[pos] = 0;
            }
        }
    }
}

impl fmt::Display for BrauerGroupModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|o| format!("Z/{o}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

fn same_model(a: &Arc<BrauerGroupModel>, b: &Arc<BrauerGroupModel>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ModelMismatch)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerClass {
    model: Arc<BrauerGroupModel>,
    exponents: Vec<u64>,
}

impl BrauerClass {
    pub fn model(&self) -> &Arc<BrauerGroupModel> {
        &self.model
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn ensure_same_model(&self, other: &BrauerClass) -> Result<()> {
        same_model(&self.model, &other.model)
    }

    pub fn add(&self, other: &BrauerClass) -> Result<BrauerClass> {
        combine(&[(self, 1), (other, 1)])
    }

    pub fn neg(&self) -> BrauerClass {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> BrauerClass {
        let exponents = self
            .exponents
            .iter()
            .zip(&self.model.orders)
            .map(|(&a, &order)| ((a as i128) * (c as i128)).rem_euclid(order as i128) as u64)
            .collect();
        BrauerClass { model: Arc::clone(&self.model), exponents }
    }

    /// Order of the class in the group: the lcm of the component orders.
    /// All component orders are powers of p, so the lcm is their maximum.
    pub fn exponent(&self) -> u64 {
        self.component_orders().max().unwrap_or(1)
    }

    /// Index of the class under the model's index rule.
    pub fn index(&self) -> u64 {
        match self.model.index_rule {
            IndexRule::GenericIndependent => self.component_orders().product(),
        }
    }

    fn component_orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.exponents
            .iter()
            .zip(&self.model.orders)
            .map(|(&a, &order)| order / arith::gcd(a, order))
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Returns `sum c_j * class_j`, reducing each component modulo its order.
pub fn combine(terms: &[(&BrauerClass, i64)]) -> Result<BrauerClass> {
    let (first, _) = terms.first().ok_or(Error::EmptyCombination)?;
    let model = &first.model;
    let mut acc = vec![0i128; model.rank()];
    for (class, c) in terms {
        same_model(model, &class.model)?;
        for (slot, &a) in acc.iter_mut().zip(&class.exponents) {
            *slot += (a as i128) * (*c as i128);
        }
    }
    let exponents = acc
        .into_iter()
        .zip(&model.orders)
        .map(|(a, &order)| a.rem_euclid(order as i128) as u64)
        .collect();
    Ok(BrauerClass { model: Arc::clone(model), exponents })
}

/// A subgroup, stored as its sorted element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    model: Arc<BrauerGroupModel>,
    elements: Vec<BrauerClass>,
}

impl Subgroup {
    pub fn model(&self) -> &Arc<BrauerGroupModel> {
        &self.model
    }

    pub fn elements(&self) -> &[BrauerClass] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, class: &BrauerClass) -> bool {
        self.elements.binary_search(class).is_ok()
    }
}

/// Closure of `classes` under addition. An empty list yields `{0}`.
pub fn subgroup_generated(model: &Arc<BrauerGroupModel>, classes: &[BrauerClass]) -> Result<Subgroup> {
    for c in classes {
        same_model(model, &c.model)?;
    }
    let zero = model.zero();
    let mut seen: BTreeSet<BrauerClass> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(zero.clone());
    queue.push_back(zero);
    // In a finite group the additive closure already contains all inverses.
    while let Some(x) = queue.pop_front() {
        for g in classes {
            let y = combine(&[(&x, 1), (g, 1)])?;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(Subgroup { model: Arc::clone(model), elements: seen.into_iter().collect() })
}

pub fn subgroups_equal(a: &Subgroup, b: &Subgroup) -> Result<bool> {
    same_model(&a.model, &b.model)?;
    Ok(a.elements == b.elements)
}

/// A p-primary division algebra: a class whose index equals the degree
/// `p^s`. Equality and ordering ignore the display label, since a
/// division algebra is determined up to isomorphism by its class.
#[derive(Clone, Debug)]
pub struct DivisionAlgebra {
    class: BrauerClass,
    degree_exponent: u32,
    label: Option<String>,
}

impl DivisionAlgebra {
    pub fn new(class: BrauerClass, degree_exponent: u32, label: Option<String>) -> Result<Self> {
        let p = class.model.prime;
        let degree = arith::pow(p, degree_exponent);
        let index = class.index();
        if index != degree {
            return Err(Error::NotDivision {
                name: label.unwrap_or_else(|| class.to_string()),
                degree,
                index,
            });
        }
        debug_assert_eq!(degree % class.exponent(), 0);
        Ok(DivisionAlgebra { class, degree_exponent, label })
    }

    /// The division algebra in the given class; its degree is the class index.
    pub fn from_class(class: BrauerClass, label: Option<String>) -> Self {
        let degree_exponent = arith::exact_log(class.index(), class.model.prime)
            .expect("class index is a power of the model prime");
        DivisionAlgebra { class, degree_exponent, label }
    }

    pub fn class(&self) -> &BrauerClass {
        &self.class
    }

    pub fn model(&self) -> &Arc<BrauerGroupModel> {
        &self.class.model
    }

    pub fn prime(&self) -> u64 {
        self.class.model.prime
    }

    pub fn degree_exponent(&self) -> u32 {
        self.degree_exponent
    }

    pub fn degree(&self) -> u64 {
        arith::pow(self.prime(), self.degree_exponent)
    }

    pub fn index(&self) -> u64 {
        self.class.index()
    }

    pub fn exponent(&self) -> u64 {
        self.class.exponent()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The label if present, otherwise the exponent vector.
    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.class.to_string())
    }
}

impl PartialEq for DivisionAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.class == other.class && self.degree_exponent == other.degree_exponent
    }
}

impl Eq for DivisionAlgebra {}

impl Hash for DivisionAlgebra {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.class.hash(state);
        self.degree_exponent.hash(state);
    }
}

impl PartialOrd for DivisionAlgebra {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DivisionAlgebra {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree_exponent, &self.class).cmp(&(other.degree_exponent, &other.class))
    }
}

impl fmt::Display for DivisionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> Arc<BrauerGroupModel> {
        BrauerGroupModel::new(2, vec![2, 2, 2]).unwrap()
    }

    fn ex2() -> Arc<BrauerGroupModel> {
        BrauerGroupModel::new(2, vec![4, 2, 2]).unwrap()
    }

    #[test]
    fn rejects_bad_models() {
        assert!(matches!(BrauerGroupModel::new(4, vec![4]), Err(Error::InvalidModel(_))));
        assert!(matches!(BrauerGroupModel::new(2, vec![]), Err(Error::InvalidModel(_))));
        assert!(matches!(BrauerGroupModel::new(2, vec![1]), Err(Error::InvalidModel(_))));
        assert!(matches!(BrauerGroupModel::new(2, vec![6]), Err(Error::InvalidModel(_))));
        assert!(BrauerGroupModel::new(3, vec![9, 3]).is_ok());
    }

    #[test]
    fn index_rule_parsing() {
        assert_eq!("generic-independent".parse::<IndexRule>().unwrap(), IndexRule::GenericIndependent);
        assert_eq!(
            "cyclic".parse::<IndexRule>(),
            Err(Error::UnsupportedIndexRule("cyclic".into()))
        );
    }

    #[test]
    fn class_construction_reduces() {
        let m = ex2();
        let c = m.class(&[-1, 3, 4]).unwrap();
        assert_eq!(c.exponents(), &[3, 1, 0]);
        assert!(matches!(m.class(&[1, 0]), Err(Error::Arity { expected: 3, found: 2 })));
    }

    #[test]
    fn combine_examples() {
        let m = ex1();
        let d1 = m.class(&[1, 1, 0]).unwrap();
        let d2 = m.class(&[1, 0, 1]).unwrap();
        let d3 = m.class(&[0, 1, 1]).unwrap();
        assert!(combine(&[(&d3, 0)]).unwrap().is_zero());
        let c = combine(&[(&d3, 1), (&d1, -2), (&d2, -2)]).unwrap();
        assert_eq!(c.exponents(), &[0, 1, 1]);

        let m = ex2();
        let d1 = m.class(&[1, 0, 0]).unwrap();
        let d2 = m.class(&[2, 1, 0]).unwrap();
        let d3 = m.class(&[2, 0, 1]).unwrap();
        let c = combine(&[(&d3, 1), (&d1, -2), (&d2, -2)]).unwrap();
        assert_eq!(c.exponents(), &[0, 0, 1]);
    }

    #[test]
    fn combine_errors() {
        assert_eq!(combine(&[]), Err(Error::EmptyCombination));
        let a = ex1().generator(0);
        let b = ex2().generator(0);
        assert_eq!(combine(&[(&a, 1), (&b, 1)]), Err(Error::ModelMismatch));
    }

    #[test]
    fn exponent_and_index() {
        let m = ex2();
        assert_eq!(m.zero().exponent(), 1);
        assert_eq!(m.zero().index(), 1);
        let d1 = m.class(&[1, 0, 0]).unwrap();
        let d2 = m.class(&[2, 1, 0]).unwrap();
        let d3 = m.class(&[2, 0, 1]).unwrap();
        assert_eq!((d1.exponent(), d2.exponent(), d3.exponent()), (4, 2, 2));
        assert_eq!((d1.index(), d2.index(), d3.index()), (4, 4, 4));

        let delta1 = ex1().class(&[1, 1, 0]).unwrap();
        assert_eq!(delta1.index(), 4);
        assert_eq!(delta1.exponent(), 2);
    }

    #[test]
    fn subgroup_examples() {
        let m = ex1();
        assert_eq!(subgroup_generated(&m, &[]).unwrap().elements(), &[m.zero()]);
        let d1 = m.class(&[1, 1, 0]).unwrap();
        let d2 = m.class(&[1, 0, 1]).unwrap();
        let d3 = m.class(&[0, 1, 1]).unwrap();
        let h12 = subgroup_generated(&m, &[d1.clone(), d2.clone()]).unwrap();
        let expected: Vec<BrauerClass> = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
            .iter()
            .map(|v| m.class(v).unwrap())
            .collect();
        assert_eq!(h12.elements(), expected.as_slice());
        let h13 = subgroup_generated(&m, &[d1, d3]).unwrap();
        assert!(subgroups_equal(&h12, &h13).unwrap());

        let m = ex2();
        let d1 = m.class(&[1, 0, 0]).unwrap();
        let d2 = m.class(&[2, 1, 0]).unwrap();
        let d3 = m.class(&[2, 0, 1]).unwrap();
        let cyclic = subgroup_generated(&m, &[d1.clone()]).unwrap();
        let expected: Vec<BrauerClass> = (0..4).map(|a| m.class(&[a, 0, 0]).unwrap()).collect();
        assert_eq!(cyclic.elements(), expected.as_slice());
        let h12 = subgroup_generated(&m, &[d1.clone(), d2]).unwrap();
        let h13 = subgroup_generated(&m, &[d1, d3]).unwrap();
        assert!(!subgroups_equal(&h12, &h13).unwrap());
        assert!(subgroups_equal(&cyclic, &cyclic).unwrap());
    }

    #[test]
    fn subgroup_model_mismatch() {
        let a = ex1();
        let b = ex2();
        assert_eq!(subgroup_generated(&a, &[b.generator(0)]), Err(Error::ModelMismatch));
        let ha = subgroup_generated(&a, &[]).unwrap();
        let hb = subgroup_generated(&b, &[]).unwrap();
        assert_eq!(subgroups_equal(&ha, &hb), Err(Error::ModelMismatch));
    }

    #[test]
    fn division_algebra_checks_degree() {
        let m = ex1();
        let c = m.class(&[1, 1, 0]).unwrap();
        let err = DivisionAlgebra::new(c.clone(), 3, Some("A".into())).unwrap_err();
        assert_eq!(err, Error::NotDivision { name: "A".into(), degree: 8, index: 4 });
        let d = DivisionAlgebra::new(c.clone(), 2, None).unwrap();
        assert_eq!(d, DivisionAlgebra::from_class(c, Some("other".into())));
        assert_eq!(d.degree(), 4);
    }

    #[test]
    fn elements_enumerates_group() {
        let m = ex2();
        let all = m.elements();
        assert_eq!(all.len(), 16);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
