//! Command dispatch and report rendering.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{CliError, Command, Instance};
use crate::brauer::{combine, subgroup_generated, subgroups_equal, BrauerClass, DivisionAlgebra, Subgroup};
use crate::fixtures::{self, ClaimResult};
use crate::maps::{classical_criterion, dimension, equivalent, exists_rational_map, prodexp_criterion, MapCheck};
use crate::motives::{compare_families, motives_isomorphic, upper_motive, Side, UpperMotive};
use crate::reduction::{mu, reduced_index, GsbFactor, GsbProduct};

/// Output of one command. `json` is what `--json` prints.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, exit_code: 0 }
    }

    /// Serialized JSON; keys are sorted, so output is byte-stable.
    pub fn json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("reports serialize")
    }
}

fn class_json(c: &BrauerClass) -> Value {
    json!(c.exponents())
}

fn algebra_json(a: &DivisionAlgebra) -> Value {
    json!({
        "name": a.name(),
        "class": class_json(a.class()),
        "degree": a.degree(),
        "index": a.index(),
        "exponent": a.exponent(),
    })
}

fn factor_json(f: &GsbFactor) -> Value {
    json!({
        "display": f.to_string(),
        "algebra": f.algebra().name(),
        "k": f.k(),
        "reduced_dimension": f.reduced_dimension(),
        "dimension": dimension(f),
    })
}

fn product_json(x: &GsbProduct) -> Value {
    json!({
        "display": x.to_string(),
        "factors": x.factors().iter().map(factor_json).collect::<Vec<_>>(),
    })
}

fn map_check_json(check: &MapCheck) -> Value {
    json!({
        "holds": check.holds,
        "factors": check.factors.iter().map(|w| json!({
            "factor": w.factor.to_string(),
            "index": w.index,
            "witness": w.twists,
            "rational_point": w.rational_point,
        })).collect::<Vec<_>>(),
    })
}

fn map_check_text(out: &mut String, label: &str, check: &MapCheck) {
    let _ = writeln!(out, "{label}: {}", check.holds);
    for w in &check.factors {
        let _ = writeln!(
            out,
            "  {}: index {} at twist ({}) -> {}",
            w.factor,
            w.index,
            join(&w.twists),
            if w.rational_point { "rational point" } else { "no rational point" }
        );
    }
}

fn motive_json(m: &UpperMotive) -> Value {
    json!({
        "display": m.to_string(),
        "ks": m.ks(),
        "factors": m.factors().iter().map(factor_json).collect::<Vec<_>>(),
    })
}

fn subgroup_json(h: &Subgroup) -> Value {
    json!(h.elements().iter().map(class_json).collect::<Vec<_>>())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Parses `NAME[:COEF],...` into a class.
fn parse_class(instance: &Instance, text: &str) -> Result<BrauerClass, CliError> {
    let mut terms: Vec<(BrauerClass, i64)> = Vec::new();
    for term in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (name, coef) = match term.rsplit_once(':') {
            Some((name, c)) => {
                let c = c
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Parse(format!("bad coefficient in `{term}`")))?;
                (name, c)
            }
            None => (term, 1),
        };
        terms.push((instance.algebra(name)?.class().clone(), coef));
    }
    if terms.is_empty() {
        return Ok(instance.model().zero());
    }
    let refs: Vec<(&BrauerClass, i64)> = terms.iter().map(|(c, a)| (c, *a)).collect();
    Ok(combine(&refs)?)
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Index { instance, class } | Command::Exponent { instance, class } => {
            let inst = instance.load()?;
            let c = parse_class(&inst, class)?;
            let (kind, value) = match command {
                Command::Index { .. } => ("index", c.index()),
                _ => ("exponent", c.exponent()),
            };
            let text = format!("class {c}: {kind} {value} (index {}, exponent {})\n", c.index(), c.exponent());
            Ok(Report::ok(
                text,
                json!({
                    "command": kind,
                    "class": class_json(&c),
                    "index": c.index(),
                    "exponent": c.exponent(),
                }),
            ))
        }
        Command::Subgroup { instance, generators, compare } => {
            let inst = instance.load()?;
            let gens: Vec<BrauerClass> = inst.algebra_list(generators)?.iter().map(|a| a.class().clone()).collect();
            let h = subgroup_generated(inst.model(), &gens)?;
            let mut text = format!("subgroup generated by {generators}: {} elements\n", h.len());
            for e in h.elements() {
                let _ = writeln!(text, "  {e}");
            }
            let mut out = json!({
                "command": "subgroup",
                "generators": generators,
                "elements": subgroup_json(&h),
            });
            if let Some(other) = compare {
                let gens2: Vec<BrauerClass> = inst.algebra_list(other)?.iter().map(|a| a.class().clone()).collect();
                let h2 = subgroup_generated(inst.model(), &gens2)?;
                let equal = subgroups_equal(&h, &h2)?;
                let _ = writeln!(text, "same subgroup as {other}: {equal}");
                out["compare"] = json!({
                    "generators": other,
                    "elements": subgroup_json(&h2),
                    "equal": equal,
                });
            }
            Ok(Report::ok(text, out))
        }
        Command::ReducedIndex { instance, target, base } => {
            let inst = instance.load()?;
            let d = inst.algebra(target)?;
            let x = inst.product(base)?;
            let r = reduced_index(d, &x)?;
            let check = mu(d, &x, &r.witness)?;
            if check != r.index {
                return Err(CliError::Compute(crate::Error::Internal("witness does not attain the minimum".into())));
            }
            let text = format!(
                "index of {} over F({x}): {} (ind {} -> {}), witness ({})\n",
                d.name(),
                r.index,
                d.index(),
                r.index,
                join(&r.witness)
            );
            Ok(Report::ok(
                text,
                json!({
                    "command": "reduced-index",
                    "target": algebra_json(d),
                    "base": product_json(&x),
                    "index": r.index,
                    "witness": r.witness,
                }),
            ))
        }
        Command::RationalMap { instance, source, target } => {
            let inst = instance.load()?;
            let (x, y) = (inst.product(source)?, inst.product(target)?);
            let report = exists_rational_map(&x, &y)?;
            let mut text = format!("rational map {x} --> {y}\n");
            map_check_text(&mut text, "exists", &report.forward);
            Ok(Report::ok(
                text,
                json!({
                    "command": "rational-map",
                    "source": product_json(&x),
                    "target": product_json(&y),
                    "exists": report.holds(),
                    "forward": map_check_json(&report.forward),
                }),
            ))
        }
        Command::Equivalent { instance, left, right } => {
            let inst = instance.load()?;
            let (x, y) = (inst.product(left)?, inst.product(right)?);
            let report = equivalent(&x, &y)?;
            let backward = report.backward.as_ref().expect("both directions decided");
            let mut text = format!("rational maps {x} <--> {y}: {}\n", report.holds());
            map_check_text(&mut text, "forward", &report.forward);
            map_check_text(&mut text, "backward", backward);
            let refuting: Vec<String> = report
                .forward
                .refuting()
                .chain(backward.refuting())
                .map(|w| w.factor.to_string())
                .collect();
            let mut out = json!({
                "command": "equivalent",
                "left": product_json(&x),
                "right": product_json(&y),
                "equivalent": report.holds(),
                "forward": map_check_json(&report.forward),
                "backward": map_check_json(backward),
                "refuting_factors": refuting,
                "classical_criterion": classical_criterion(&x.algebras(), &y.algebras())?,
            });
            out["exponent_matrices"] = exponent_matrices(&x, &y, &mut text)?;
            Ok(Report::ok(text, out))
        }
        Command::MotiveIso { instance, left, right } => {
            let inst = instance.load()?;
            let (x, y) = (inst.product(left)?, inst.product(right)?);
            let (a, b) = (upper_motive(&x), upper_motive(&y));
            let iso = motives_isomorphic(&a, &b)?;
            let text = format!("{a} and {b} isomorphic: {iso}\n");
            Ok(Report::ok(
                text,
                json!({
                    "command": "motive-iso",
                    "left": motive_json(&a),
                    "right": motive_json(&b),
                    "isomorphic": iso,
                }),
            ))
        }
        Command::CompareFamilies { instance, left, right } => {
            let inst = instance.load()?;
            let (l, r) = (inst.algebra_list(left)?, inst.algebra_list(right)?);
            let cmp = compare_families(&l, &r)?;
            let mut text = format!("families {{{left}}} vs {{{right}}}: {}\n", cmp.verdict.as_str());
            for (a, b) in &cmp.shared {
                let _ = writeln!(text, "  shared: {a} ~ {b}");
            }
            let separating = cmp.separating.as_ref().map(|(side, m)| {
                let side = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                let _ = writeln!(text, "  separating ({side}): {m}");
                json!({"side": side, "motive": motive_json(m)})
            });
            Ok(Report::ok(
                text,
                json!({
                    "command": "compare-families",
                    "left": l.iter().map(algebra_json).collect::<Vec<_>>(),
                    "right": r.iter().map(algebra_json).collect::<Vec<_>>(),
                    "verdict": cmp.verdict.as_str(),
                    "shared": cmp.shared.iter().map(|(a, b)| json!([motive_json(a), motive_json(b)])).collect::<Vec<_>>(),
                    "separating": separating,
                }),
            ))
        }
        Command::VerifyExamples => {
            let claims = fixtures::verify_examples()?;
            Ok(claims_report(&claims))
        }
    }
}

/// Runs the equal-exponent criterion when both products have a common `k`;
/// reports why it is inapplicable otherwise.
fn exponent_matrices(x: &GsbProduct, y: &GsbProduct, text: &mut String) -> Result<Value, CliError> {
    let (Some(k), Some(k2)) = (x.common_k(), y.common_k()) else {
        return Ok(json!({"applicable": false, "reason": "factors do not share one reduced dimension"}));
    };
    if k != k2 {
        return Ok(json!({"applicable": false, "reason": "the two products use different reduced dimensions"}));
    }
    match prodexp_criterion(&x.algebras(), &y.algebras(), k) {
        Ok(Some(w)) => {
            let _ = writeln!(text, "exponent matrices: alpha {:?}, beta {:?}", w.alpha, w.beta);
            Ok(json!({"applicable": true, "exists": true, "alpha": w.alpha, "beta": w.beta}))
        }
        Ok(None) => {
            let _ = writeln!(text, "exponent matrices: none");
            Ok(json!({"applicable": true, "exists": false}))
        }
        Err(e @ (crate::Error::Hypothesis(_) | crate::Error::Precondition(_))) => {
            let _ = writeln!(text, "exponent matrices: not applicable ({e})");
            Ok(json!({"applicable": false, "reason": e.to_string()}))
        }
        Err(e) => Err(e.into()),
    }
}

fn claims_report(claims: &[ClaimResult]) -> Report {
    let mut text = String::new();
    for c in claims {
        let _ = writeln!(text, "{} [{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.claim, c.observed);
    }
    let failed = claims.iter().filter(|c| !c.passed).count();
    let _ = writeln!(text, "{} of {} claims passed", claims.len() - failed, claims.len());
    Report {
        text,
        json: json!({
            "command": "verify-examples",
            "passed": failed == 0,
            "claims": claims.iter().map(|c| json!({
                "id": c.id,
                "claim": c.claim,
                "observed": c.observed,
                "passed": c.passed,
            })).collect::<Vec<_>>(),
        }),
        exit_code: if failed == 0 { 0 } else { CliError::ClaimsFailed(failed).exit_code() },
    }
}
