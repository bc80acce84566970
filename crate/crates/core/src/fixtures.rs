//! Bundled worked examples and the claims checked about them.
//!
//! `ex1`: three independent quaternion classes `D1, D2, D3` in `(Z/2)^3` and
//! the biquaternion algebras `Δ1 = D1+D2`, `Δ2 = D1+D3`, `Δ3 = D2+D3`.
//! `ex2`: `Z/4 x Z/2 x Z/2` with `D1 = g1`, `D2 = 2g1+g2`, `D3 = 2g1+g3`.

use crate::cli::{CliError, Instance};
use crate::error::Error;
use crate::maps::{classical_criterion, equivalent, exists_rational_map, prodexp_criterion};
use crate::motives::{compare_families, motives_isomorphic, upper_motive, Side, Verdict};
use crate::reduction::reduced_index;
use crate::brauer::{subgroup_generated, subgroups_equal, BrauerClass};

pub const EX1_JSON: &str = include_str!("../fixtures/ex1.json");
pub const EX2_JSON: &str = include_str!("../fixtures/ex2.json");

pub fn ex1() -> Instance {
    Instance::from_json(EX1_JSON).expect("bundled fixture ex1 loads")
}

pub fn ex2() -> Instance {
    Instance::from_json(EX2_JSON).expect("bundled fixture ex2 loads")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub observed: String,
    pub passed: bool,
}

fn claim(id: &'static str, claim: &'static str, observed: impl ToString, passed: bool) -> ClaimResult {
    ClaimResult { id, claim, observed: observed.to_string(), passed }
}

fn classes(inst: &Instance, names: &str) -> Result<Vec<BrauerClass>, CliError> {
    Ok(inst.algebra_list(names)?.iter().map(|a| a.class().clone()).collect())
}

/// Evaluates every claim about the two bundled examples.
pub fn verify_examples() -> Result<Vec<ClaimResult>, CliError> {
    let mut out = Vec::new();

    let e1 = ex1();
    let left = e1.algebra_list("Δ1,Δ2")?;
    let right = e1.algebra_list("Δ1,Δ3")?;
    let v = classical_criterion(&left, &right)?;
    out.push(claim("ex1.subgroups", "<Δ1,Δ2> = <Δ1,Δ3>", v, v));
    let v = equivalent(&e1.product("X(1;Δ1) x X(1;Δ2)")?, &e1.product("X(1;Δ1) x X(1;Δ3)")?)?.holds();
    out.push(claim("ex1.classical", "X(1;Δ1) x X(1;Δ2) <--> X(1;Δ1) x X(1;Δ3)", v, v));
    let source = e1.product("X(2;Δ1) x X(2;Δ2)")?;
    let v = exists_rational_map(&source, &e1.product("X(2;Δ3)")?)?.holds();
    out.push(claim("ex1.no-map", "no rational map X(2;Δ1) x X(2;Δ2) --> X(2;Δ3)", v, !v));
    let r = reduced_index(e1.algebra("Δ3")?, &source)?;
    out.push(claim("ex1.reduced-index", "ind(Δ3) over F(X(2;Δ1) x X(2;Δ2)) = 4", r.index, r.index == 4));
    let v = equivalent(&source, &e1.product("X(2;Δ1) x X(2;Δ3)")?)?.holds();
    out.push(claim("ex1.generalized", "not X(2;Δ1) x X(2;Δ2) <--> X(2;Δ1) x X(2;Δ3)", v, !v));

    let e2 = ex2();
    let ds = e2.algebra_list("D1,D2,D3")?;
    let indices: Vec<u64> = ds.iter().map(|d| d.index()).collect();
    out.push(claim("ex2.indices", "ind(D1, D2, D3) = (4, 4, 4)", format!("{indices:?}"), indices == [4, 4, 4]));
    let exps: Vec<u64> = ds.iter().map(|d| d.exponent()).collect();
    out.push(claim("ex2.exponents", "exp(D1, D2, D3) = (4, 2, 2)", format!("{exps:?}"), exps == [4, 2, 2]));
    let h12 = subgroup_generated(e2.model(), &classes(&e2, "D1,D2")?)?;
    let h13 = subgroup_generated(e2.model(), &classes(&e2, "D1,D3")?)?;
    let v = subgroups_equal(&h12, &h13)?;
    out.push(claim("ex2.subgroups", "<D1,D2> != <D1,D3>", v, !v));
    let x = e2.product("X(2;D1) x X(2;D2)")?;
    let y = e2.product("X(2;D1) x X(2;D3)")?;
    let v = equivalent(&x, &y)?.holds();
    out.push(claim("ex2.maps", "X(2;D1) x X(2;D2) <--> X(2;D1) x X(2;D3)", v, v));
    let r = reduced_index(e2.algebra("D3")?, &x)?;
    out.push(claim(
        "ex2.reduced-index",
        "ind(D3) over F(X(2;D1) x X(2;D2)) = 2 at (2,2)",
        format!("{} at {:?}", r.index, r.witness),
        r.index == 2 && r.witness == [2, 2],
    ));
    let res = prodexp_criterion(&e2.algebra_list("D1,D2")?, &e2.algebra_list("D1,D3")?, 1);
    let observed = match &res {
        Ok(w) => format!("{w:?}"),
        Err(e) => e.to_string(),
    };
    out.push(claim(
        "ex2.exponent-hypothesis",
        "equal-exponent criterion is inapplicable (unequal exponents)",
        observed,
        matches!(res, Err(Error::Hypothesis(_))),
    ));

    let m00 = (upper_motive(&e1.product("X(1;Δ1) x X(1;Δ2)")?), upper_motive(&e1.product("X(1;Δ1) x X(1;Δ3)")?));
    let v = motives_isomorphic(&m00.0, &m00.1)?;
    out.push(claim("motives.level-0", "M^{0,0}_{Δ1,Δ2} ~ M^{0,0}_{Δ1,Δ3}", v, v));
    let m11 = (upper_motive(&source), upper_motive(&e1.product("X(2;Δ1) x X(2;Δ3)")?));
    let v = motives_isomorphic(&m11.0, &m11.1)?;
    out.push(claim("motives.level-1", "M^{1,1}_{Δ1,Δ2} not ~ M^{1,1}_{Δ1,Δ3}", v, !v));
    let cmp = compare_families(&left, &right)?;
    let passed = cmp.verdict == Verdict::Partial
        && cmp.shared.contains(&m00)
        && cmp.separating == Some((Side::Left, m11.0.clone()));
    let observed = format!(
        "{} with separating {}",
        cmp.verdict.as_str(),
        cmp.separating.as_ref().map_or("none".to_string(), |(_, m)| m.to_string())
    );
    out.push(claim("motives.no-dichotomy", "families {Δ1,Δ2} and {Δ1,Δ3} share some but not all motives", observed, passed));

    Ok(out)
}
