//! JSON instance files.
//!
//! ```json
//! {
//!   "prime": 2,
//!   "generators": [{"name": "e1", "order": 2}, {"name": "e2", "order": 2}],
//!   "algebras": {"Q": {"class": {"e1": 1}, "degree": 2}},
//!   "varieties": {"conic": "X(1;Q)"}
//! }
//! ```
//!
//! Generators missing from a class map have exponent 0. `index_rule`
//! (default `generic_independent`) and `description` are optional.

use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::Deserialize;

use super::expr::VarietyExpr;
use super::CliError;
use crate::arith;
use crate::brauer::{BrauerGroupModel, DivisionAlgebra, IndexRule};
use crate::reduction::{GsbFactor, GsbProduct};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    prime: u64,
    generators: Vec<RawGenerator>,
    algebras: IndexMap<String, RawAlgebra>,
    #[serde(default)]
    varieties: IndexMap<String, String>,
    #[serde(default)]
    index_rule: Option<String>,
    #[serde(default)]
    #[allow(dead_code)]
    description: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    name: String,
    order: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    #[serde(default)]
    class: IndexMap<String, i64>,
    degree: u64,
}

#[derive(Debug, Clone)]
pub struct Instance {
    model: Arc<BrauerGroupModel>,
    generators: Vec<String>,
    algebras: IndexMap<String, DivisionAlgebra>,
    varieties: IndexMap<String, VarietyExpr>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

impl Instance {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, CliError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| CliError::Syntax(e.to_string()))?;

        let index_rule = match &raw.index_rule {
            Some(tag) => tag.parse::<IndexRule>().map_err(|e| invalid(format!("index_rule: {e}")))?,
            None => IndexRule::default(),
        };
        let mut generators: Vec<String> = Vec::with_capacity(raw.generators.len());
        for g in &raw.generators {
            if generators.contains(&g.name) {
                return Err(invalid(format!("generators: duplicate generator `{}`", g.name)));
            }
            generators.push(g.name.clone());
        }
        let orders = raw.generators.iter().map(|g| g.order).collect();
        let model = BrauerGroupModel::with_index_rule(raw.prime, orders, index_rule)
            .map_err(|e| invalid(format!("generators: {e}")))?;

        let mut algebras = IndexMap::new();
        for (name, spec) in &raw.algebras {
            let mut exponents = vec![0i64; generators.len()];
            for (gen, &a) in &spec.class {
                let slot = generators
                    .iter()
                    .position(|g| g == gen)
                    .ok_or_else(|| invalid(format!("algebra `{name}`: unknown generator `{gen}`")))?;
                exponents[slot] = a;
            }
            let s = arith::exact_log(spec.degree, raw.prime).ok_or_else(|| {
                invalid(format!("algebra `{name}`: degree {} is not a power of {}", spec.degree, raw.prime))
            })?;
            let class = model.class(&exponents).map_err(|e| invalid(format!("algebra `{name}`: {e}")))?;
            let algebra = DivisionAlgebra::new(class, s, Some(name.clone())).map_err(|e| invalid(e.to_string()))?;
            algebras.insert(name.clone(), algebra);
        }

        let mut instance = Instance { model, generators, algebras, varieties: IndexMap::new() };
        for (name, text) in &raw.varieties {
            let expr: VarietyExpr = text
                .parse()
                .map_err(|e| invalid(format!("variety `{name}`: {e}")))?;
            instance.resolve(&expr).map_err(|e| invalid(format!("variety `{name}`: {e}")))?;
            instance.varieties.insert(name.clone(), expr);
        }
        Ok(instance)
    }

    pub fn model(&self) -> &Arc<BrauerGroupModel> {
        &self.model
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn algebras(&self) -> &IndexMap<String, DivisionAlgebra> {
        &self.algebras
    }

    pub fn algebra(&self, name: &str) -> Result<&DivisionAlgebra, CliError> {
        self.algebras
            .get(name.trim())
            .ok_or_else(|| CliError::UnknownAlgebra(name.trim().to_string()))
    }

    /// Resolves a comma-separated list of algebra names.
    pub fn algebra_list(&self, names: &str) -> Result<Vec<DivisionAlgebra>, CliError> {
        names
            .split(',')
            .filter(|n| !n.trim().is_empty())
            .map(|n| self.algebra(n).cloned())
            .collect()
    }

    pub fn resolve(&self, expr: &VarietyExpr) -> Result<GsbProduct, CliError> {
        let p = self.model.prime();
        let factors = expr
            .factors
            .iter()
            .map(|f| {
                let algebra = self.algebra(&f.algebra)?.clone();
                let k = arith::exact_log(f.reduced_dimension, p).ok_or_else(|| {
                    CliError::Parse(format!(
                        "reduced dimension {} in {f} is not a power of {p}",
                        f.reduced_dimension
                    ))
                })?;
                GsbFactor::new(algebra, k).map_err(CliError::Compute)
            })
            .collect::<Result<Vec<_>, _>>()?;
        GsbProduct::new(factors).map_err(CliError::Compute)
    }

    /// Parses `text` as a variety expression, or looks it up among the
    /// instance's named varieties.
    pub fn product(&self, text: &str) -> Result<GsbProduct, CliError> {
        if let Some(expr) = self.varieties.get(text.trim()) {
            return self.resolve(expr);
        }
        let expr: VarietyExpr = text.parse().map_err(|e: super::expr::ExprError| CliError::Parse(e.to_string()))?;
        self.resolve(&expr)
    }
}
