//! Decision procedures for rational maps between products of generalized
//! Severi-Brauer varieties `X(p^k1;D1) x ... x X(p^kn;Dn)` and for
//! isomorphism of their upper p-motives.
//!
//! Central simple algebras are never constructed. A p-primary division
//! algebra is described by its class in a finite abelian p-group
//! ([`brauer::BrauerGroupModel`]) together with its degree, and every
//! decision reduces to index computations over function fields
//! ([`reduction::reduced_index`]).
//!
//! Module map:
//! - [`brauer`]: group models, classes, exponent/index, subgroups
//! - [`reduction`]: the `mu` function and index reduction over products
//! - [`maps`]: rational points, rational maps and the classification criteria
//! - [`motives`]: upper motive descriptors and family comparison
//! - [`cli`]: instance files, variety expressions and the command front end

pub mod arith;
pub mod brauer;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod maps;
pub mod motives;
pub mod reduction;

pub use brauer::{
    combine, subgroup_generated, subgroups_equal, BrauerClass, BrauerGroupModel, DivisionAlgebra,
    IndexRule, Subgroup,
};
pub use error::{Error, Result};
pub use maps::{
    classical_criterion, dimension, equivalent, exists_rational_map, has_rational_point_over,
    lemma_witness, prodexp_criterion, ProdexpWitness, RationalMapReport,
};
pub use motives::{
    classify_single, compare_families, motives_isomorphic, upper_motive, FamilyComparison,
    UpperMotive, Verdict,
};
pub use reduction::{mu, reduced_index, vp, GsbFactor, GsbProduct, IndexReduction};
