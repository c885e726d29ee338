//! One function per subcommand. Each returns its JSON value and a text rendering.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::Result;
use invsg::algebra::{AlgebraError, StructureAlgebra, WedderburnOptions};
use invsg::graded::{b_map, generated_semigroup};
use invsg::group::FiniteGroup;
use invsg::matrix::Matrix;
use invsg::partial_action::{bernoulli_sets, PartialAction};
use invsg::partial_rep::{PartialRep, RepError};
use invsg::scalar::Scalar;
use invsg::sg::{order_formula, Sg, SgElement, SgError, DEFAULT_ENUMERATION_CAP};
use invsg::subset::GroupSet;
use invsg::verify::verify_inverse_semigroup;
use serde_json::{json, Value};

use crate::failure::{domain, domain_with, usage};
use crate::input::{parse_group, parse_word, read_json, ActionFile, GroupRef, RepFile, RepMatrices};

/// Fresh seeds tried after an ambiguous eigenvalue clustering.
const RESEED_ATTEMPTS: u64 = 8;

pub struct Report {
    pub json: Value,
    pub text: String,
}

fn element_json(a: &SgElement) -> Value {
    serde_json::to_value(a).expect("elements serialize")
}

fn set_list(s: GroupSet) -> Vec<usize> {
    s.iter().map(|g| g.0).collect()
}

fn sg_failure(e: SgError) -> anyhow::Error {
    match e {
        SgError::OrderTooSmall(_) => usage(e.to_string()),
        other => domain(other.to_string()),
    }
}

pub fn sg_order(spec: &str) -> Result<Report> {
    let g = parse_group(spec)?;
    let p = g.order();
    if p < 2 {
        return Err(usage(format!(
            "the order formula needs a group of order at least 2; {spec} has order {p} (use `sg enumerate`)"
        )));
    }
    let order = order_formula(p as u64).map_err(sg_failure)?;
    let enumerated = if p <= DEFAULT_ENUMERATION_CAP {
        let n = Sg::new(&g).enumerate().map_err(sg_failure)?.len() as u64;
        if n != order {
            return Err(domain(format!("enumeration found {n} elements, formula gives {order}")));
        }
        Some(n)
    } else {
        None
    };
    Ok(Report {
        json: json!({ "group": spec, "group_order": p, "order": order, "enumerated": enumerated }),
        text: format!("{order}\n"),
    })
}

pub fn sg_enumerate(spec: &str, cap: usize) -> Result<Report> {
    let g = parse_group(spec)?;
    let elements = Sg::new(&g).enumerate_with_cap(cap).map_err(sg_failure)?;
    let mut text = String::new();
    for a in &elements {
        writeln!(text, "{a:?}").unwrap();
    }
    Ok(Report {
        json: json!({ "group": spec, "order": elements.len(), "elements": elements.iter().map(element_json).collect::<Vec<_>>() }),
        text,
    })
}

pub fn sg_reduce(spec: &str, word: &str) -> Result<Report> {
    let g = parse_group(spec)?;
    let w = parse_word(word, &g)?;
    let a = Sg::new(&g).reduce_word(&w).map_err(sg_failure)?;
    Ok(Report { json: element_json(&a), text: format!("{a:?}\n") })
}

pub fn sg_verify(spec: &str) -> Result<Report> {
    let g = parse_group(spec)?;
    let sg = Sg::new(&g);
    let elements = sg.enumerate().map_err(sg_failure)?;
    let report = verify_inverse_semigroup(&sg, &elements);
    let value = serde_json::to_value(&report)?;
    if !report.passed() {
        return Err(domain_with("S(G) failed an inverse-semigroup check", value));
    }
    let mut text = format!("{} elements\n", report.elements);
    for c in &report.checks {
        let mode = match c.mode {
            invsg::verify::CheckMode::Exhaustive => "exhaustive".to_string(),
            invsg::verify::CheckMode::Sampled { samples, .. } => format!("{samples} samples"),
        };
        writeln!(text, "{:<20} ok ({mode})", c.name).unwrap();
    }
    Ok(Report { json: value, text })
}

fn load_action(path: &Path) -> Result<(ActionFile, PartialAction)> {
    let file: ActionFile = read_json(path)?;
    let action = file.to_action()?;
    Ok((file, action))
}

pub fn pa_validate(path: &Path) -> Result<Report> {
    let (_, action) = load_action(path)?;
    let axioms = action.validate_axioms();
    let semigroup = action.validate_semigroup_form();
    let extension = action.find_extension_failure().map(|(r, s)| [r.0, s.0]);
    let valid = axioms.passed() && semigroup.passed();
    let value = json!({
        "valid": valid,
        "axioms": axioms,
        "semigroup_form": semigroup,
        "extension_failure": extension,
    });
    if !valid {
        return Err(domain_with("not a partial action", value));
    }
    Ok(Report { json: value, text: format!("valid partial action on {} points\n", action.set_size()) })
}

pub fn pa_extend(path: &Path) -> Result<Report> {
    let (file, action) = load_action(path)?;
    let pi = action.to_inverse_action().map_err(|e| match e {
        invsg::partial_action::ActionError::Invalid(v) => {
            domain_with("not a partial action", serde_json::to_value(v).expect("violations serialize"))
        }
        other => domain(other.to_string()),
    })?;
    if let Some((a, b)) = pi.find_non_multiplicative()? {
        return Err(domain_with(
            "induced action is not multiplicative",
            json!({ "a": element_json(&a), "b": element_json(&b) }),
        ));
    }
    let elements = Sg::new(action.group()).enumerate().map_err(sg_failure)?;
    let mut table = Vec::with_capacity(elements.len());
    let mut text = String::new();
    for a in &elements {
        let pairs = pi.apply(a).pairs();
        writeln!(text, "{a:?}: {pairs:?}").unwrap();
        table.push(json!({ "element": element_json(a), "map": pairs.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>() }));
    }
    Ok(Report { json: json!({ "group": file.group, "set_size": action.set_size(), "table": table }), text })
}

pub fn pa_bernoulli(spec: &str) -> Result<Report> {
    let g = parse_group(spec)?;
    let action = PartialAction::bernoulli(&g).map_err(|e| domain(e.to_string()))?;
    let group = if Path::new(spec).is_file() { GroupRef::Table(g.to_file()) } else { GroupRef::Named(spec.to_string()) };
    let file = ActionFile::from_action(group, &action);
    let sets: Vec<Vec<usize>> = bernoulli_sets(&g).into_iter().map(set_list).collect();
    let mut value = serde_json::to_value(&file)?;
    value["sets"] = json!(sets);
    let mut text = String::new();
    for (i, s) in sets.iter().enumerate() {
        writeln!(text, "{i}: {s:?}").unwrap();
    }
    for t in g.elements() {
        writeln!(text, "theta[{t}]: {:?}", action.theta(t).pairs()).unwrap();
    }
    Ok(Report { json: value, text })
}

fn matrix_json<T: Scalar>(m: &Matrix<T>, entry: impl Fn(&T) -> [f64; 2]) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(&entry).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn rep_failure(e: RepError) -> anyhow::Error {
    let details = match &e {
        RepError::Invalid(report) => Some(serde_json::to_value(report).expect("reports serialize")),
        RepError::NotMultiplicative { a, b, deviation } => {
            Some(json!({ "a": element_json(a), "b": element_json(b), "deviation": deviation }))
        }
        RepError::NotStarPreserving { a, deviation } | RepError::NotPartialIsometry { a, deviation } => {
            Some(json!({ "a": element_json(a), "deviation": deviation }))
        }
        _ => None,
    };
    match details {
        Some(d) => domain_with(e.to_string(), d),
        None => domain(e.to_string()),
    }
}

fn validate_generic<T: Scalar>(group: FiniteGroup, mats: Vec<Matrix<T>>, tol: f64, exact: bool) -> Result<Report> {
    let rep = PartialRep::new(group, mats).map_err(rep_failure)?;
    let report = rep.validate(tol);
    let mut value = serde_json::to_value(report)?;
    value["valid"] = json!(report.passed());
    value["exact"] = json!(exact);
    if !report.passed() {
        return Err(domain_with("not a partial representation", value));
    }
    let text = format!(
        "valid partial representation of dimension {} (max deviation {:e}, tolerance {:e})\n",
        rep.dim(),
        report.absorption.max(report.adjoint).max(report.unit),
        tol
    );
    Ok(Report { json: value, text })
}

fn extend_generic<T: Scalar>(
    group: FiniteGroup,
    mats: Vec<Matrix<T>>,
    tol: f64,
    exact: bool,
    entry: impl Fn(&T) -> [f64; 2],
) -> Result<Report> {
    let rep = PartialRep::new(group, mats).map_err(rep_failure)?;
    let ext = rep.extend_to_sg(tol).map_err(rep_failure)?;
    let multiplicative = ext.check_multiplicative(tol).map_err(rep_failure)?;
    let star = ext.check_star(tol).map_err(rep_failure)?;
    let isometry = ext.check_partial_isometries(tol).map_err(rep_failure)?;
    let images: Vec<Value> = ext
        .elements()
        .iter()
        .zip(ext.images())
        .map(|(a, m)| json!({ "element": element_json(a), "matrix": matrix_json(m, &entry) }))
        .collect();
    let value = json!({
        "dim": ext.dim(),
        "exact": exact,
        "tolerance": tol,
        "deviations": { "multiplicative": multiplicative, "star": star, "partial_isometry": isometry },
        "images": images,
    });
    let text = format!(
        "extended to {} elements of S(G); multiplicative, star-preserving, partial isometries (max deviation {:e})\n",
        images.len(),
        multiplicative.max(star).max(isometry)
    );
    Ok(Report { json: value, text })
}

pub fn rep_validate(path: &Path, tolerance: Option<f64>) -> Result<Report> {
    let file: RepFile = read_json(path)?;
    match file.load()? {
        RepMatrices::Exact(g, m) => validate_generic(g, m, tolerance.unwrap_or(0.0), true),
        RepMatrices::Float(g, m) => validate_generic(g, m, tolerance.unwrap_or(1e-9), false),
    }
}

pub fn rep_extend(path: &Path, tolerance: Option<f64>) -> Result<Report> {
    let file: RepFile = read_json(path)?;
    match file.load()? {
        RepMatrices::Exact(g, m) => extend_generic(g, m, tolerance.unwrap_or(0.0), true, |&x| [x as f64, 0.0]),
        RepMatrices::Float(g, m) => extend_generic(g, m, tolerance.unwrap_or(1e-9), false, |z| [z.re, z.im]),
    }
}

pub fn alg_decompose(spec: &str, seed: u64, cap: usize) -> Result<Report> {
    let g = parse_group(spec)?;
    let alg = StructureAlgebra::build_with_cap(&g, cap).map_err(|e| domain(e.to_string()))?;
    let opts = WedderburnOptions::default();
    let mut attempt = 0;
    let d = loop {
        match alg.wedderburn::<f64>(seed.wrapping_add(attempt), &opts) {
            Err(AlgebraError::EigenvalueClusterAmbiguous { .. }) if attempt + 1 < RESEED_ATTEMPTS => attempt += 1,
            other => break other.map_err(|e| domain(e.to_string()))?,
        }
    };
    let mut text = format!("dim {} = ", d.dim);
    let squares: Vec<String> = d.blocks.iter().map(|n| format!("{}", n * n)).collect();
    writeln!(text, "{}", squares.join(" + ")).unwrap();
    let ones = d.blocks.iter().filter(|&&n| n == 1).count();
    let mut parts = Vec::new();
    if ones > 0 {
        parts.push(if ones == 1 { "C".to_string() } else { format!("C^{ones}") });
    }
    parts.extend(d.blocks.iter().filter(|&&n| n > 1).map(|n| format!("M_{n}(C)")));
    writeln!(text, "{}", parts.join(" ⊕ ")).unwrap();
    Ok(Report { json: json!({ "dim": d.dim, "blocks": d.blocks, "center_dim": d.center_dim }), text })
}

pub fn graded_count(spec: &str) -> Result<Report> {
    let g = parse_group(spec)?;
    let alg = StructureAlgebra::build(&g).map_err(|e| domain(e.to_string()))?;
    let count = generated_semigroup(&alg, alg.dim().saturating_mul(4).max(16)).map_err(|e| domain(e.to_string()))?.len();
    let formula = if g.order() >= 2 { Some(order_formula(g.order() as u64).map_err(sg_failure)?) } else { None };
    let expected = formula.unwrap_or(1);
    let matches = count as u64 == expected;
    let value = json!({ "group": spec, "count": count, "formula": formula, "matches": matches });
    if !matches {
        return Err(domain_with(format!("generated {count} subspaces, expected {expected}"), value));
    }
    Ok(Report { json: value, text: format!("{count} (order formula {expected})\n") })
}

pub fn graded_map(spec: &str) -> Result<Report> {
    let g = parse_group(spec)?;
    let alg = StructureAlgebra::build(&g).map_err(|e| domain(e.to_string()))?;
    let map = b_map(&alg).map_err(|e| domain(e.to_string()))?;
    let mut text = String::new();
    let entries: Vec<Value> = map
        .iter()
        .map(|(a, b)| {
            writeln!(text, "{a:?}: {:?}", b.indices()).unwrap();
            json!({ "element": element_json(a), "indices": b.indices() })
        })
        .collect();
    Ok(Report { json: json!({ "group": spec, "dim": alg.dim(), "map": entries }), text })
}
