//! Group arguments and the JSON input files.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use invsg::group::{FiniteGroup, GroupElement, GroupFile};
use invsg::matrix::Matrix;
use invsg::partial_action::{PartialAction, PartialBijection};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::failure::{domain, usage};

/// `"cyclic:n"`, `"klein4"`, `"dihedral:n"`, `"trivial"`, or a path to a group file.
/// An existing file wins over a builtin of the same name.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    if Path::new(spec).is_file() {
        let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        let file: GroupFile = serde_json::from_str(&text).map_err(|e| usage(format!("{spec}: {e}")))?;
        return FiniteGroup::from_file(&file).map_err(|e| domain(format!("{spec}: {e}")));
    }
    builtin(spec)
}

fn builtin(spec: &str) -> Result<FiniteGroup> {
    let sized = |prefix: &str| -> Result<Option<usize>> {
        match spec.strip_prefix(prefix) {
            Some(n) => n.parse().map(Some).map_err(|_| usage(format!("bad group size in {spec:?}"))),
            None => Ok(None),
        }
    };
    let group = if spec == "klein4" {
        Ok(FiniteGroup::klein4())
    } else if spec == "trivial" {
        Ok(FiniteGroup::trivial())
    } else if let Some(n) = sized("cyclic:")? {
        FiniteGroup::cyclic(n)
    } else if let Some(n) = sized("dihedral:")? {
        FiniteGroup::dihedral(n)
    } else {
        bail!(usage(format!(
            "unknown group {spec:?}: expected cyclic:n, dihedral:n, klein4, trivial or a group file"
        )));
    };
    group.map_err(|e| usage(format!("{spec}: {e}")))
}

/// A group inside another file: a builtin name or an inline `{order, table}`.
#[derive(Deserialize, Serialize, Clone, Debug)]
#[serde(untagged)]
pub enum GroupRef {
    Named(String),
    Table(GroupFile),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<FiniteGroup> {
        match self {
            GroupRef::Named(name) => parse_group(name),
            GroupRef::Table(file) => FiniteGroup::from_file(file).map_err(|e| domain(e.to_string())),
        }
    }
}

/// `{ "group": ..., "set_size": n, "theta": { "t": [[x, θ_t(x)], ...] } }`.
#[derive(Deserialize, Serialize, Debug)]
pub struct ActionFile {
    pub group: GroupRef,
    pub set_size: usize,
    pub theta: BTreeMap<String, Vec<[usize; 2]>>,
}

impl ActionFile {
    pub fn from_action(group: GroupRef, action: &PartialAction) -> Self {
        let theta = action
            .group()
            .elements()
            .map(|t| {
                let pairs = action.theta(t).pairs().into_iter().map(|(x, y)| [x, y]).collect();
                (t.0.to_string(), pairs)
            })
            .collect();
        ActionFile { group, set_size: action.set_size(), theta }
    }

    pub fn to_action(&self) -> Result<PartialAction> {
        let group = self.group.resolve()?;
        let mut maps = vec![None; group.order()];
        for (key, pairs) in &self.theta {
            let t = element_key(key, &group)?;
            let pairs: Vec<(usize, usize)> = pairs.iter().map(|&[x, y]| (x, y)).collect();
            let map = PartialBijection::from_pairs(self.set_size, &pairs)
                .map_err(|e| domain(format!("theta[{key}]: {e}")))?;
            maps[t.0] = Some(map);
        }
        // Missing entries are empty maps.
        let maps = maps.into_iter().map(|m| m.unwrap_or_else(|| PartialBijection::empty(self.set_size))).collect();
        PartialAction::new(group, maps).map_err(|e| domain(e.to_string()))
    }
}

/// A matrix entry: `[re, im]` or a bare real number.
#[derive(Deserialize, Serialize, Clone, Copy, Debug)]
#[serde(untagged)]
pub enum Entry {
    Complex([f64; 2]),
    Real(f64),
}

impl Entry {
    fn value(self) -> Complex64 {
        match self {
            Entry::Complex([re, im]) => Complex64::new(re, im),
            Entry::Real(re) => Complex64::new(re, 0.0),
        }
    }
}

/// `{ "group": ..., "dim": n, "matrices": { "t": [[[re, im], ...], ...] } }`.
#[derive(Deserialize, Debug)]
pub struct RepFile {
    pub group: GroupRef,
    pub dim: usize,
    pub matrices: BTreeMap<String, Vec<Vec<Entry>>>,
}

/// Matrices of a representation file, exact when every entry is an integer.
pub enum RepMatrices {
    Exact(FiniteGroup, Vec<Matrix<i64>>),
    Float(FiniteGroup, Vec<Matrix<Complex64>>),
}

impl RepFile {
    pub fn load(&self) -> Result<RepMatrices> {
        let group = self.group.resolve()?;
        let mut mats: Vec<Option<Matrix<Complex64>>> = vec![None; group.order()];
        for (key, rows) in &self.matrices {
            let t = element_key(key, &group)?;
            let rows = rows.iter().map(|r| r.iter().map(|e| e.value()).collect()).collect();
            let m = Matrix::from_rows(rows).map_err(|e| usage(format!("matrices[{key}]: {e}")))?;
            if m.shape() != (self.dim, self.dim) {
                bail!(usage(format!("matrices[{key}] has shape {:?}, expected {}x{}", m.shape(), self.dim, self.dim)));
            }
            mats[t.0] = Some(m);
        }
        let mats: Vec<Matrix<Complex64>> = mats
            .into_iter()
            .enumerate()
            .map(|(t, m)| m.ok_or_else(|| usage(format!("no matrix for group element {t}"))))
            .collect::<Result<_>>()?;
        let integral = mats
            .iter()
            .flat_map(|m| m.as_slice())
            .all(|z| z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 1e15);
        Ok(if integral {
            RepMatrices::Exact(group, mats.iter().map(|m| m.map(|z| z.re as i64)).collect())
        } else {
            RepMatrices::Float(group, mats)
        })
    }
}

fn element_key(key: &str, group: &FiniteGroup) -> Result<GroupElement> {
    let t: usize = key.parse().map_err(|_| usage(format!("group element key {key:?} is not an index")))?;
    if t >= group.order() {
        bail!(usage(format!("group element {t} out of range for order {}", group.order())));
    }
    Ok(GroupElement(t))
}

/// A comma-separated word of group element indices.
pub fn parse_word(word: &str, group: &FiniteGroup) -> Result<Vec<GroupElement>> {
    word.split(',')
        .map(|s| element_key(s.trim(), group))
        .collect::<Result<Vec<_>>>()
        .and_then(|w| if w.is_empty() { Err(anyhow!(usage("empty word"))) } else { Ok(w) })
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}
