use std::collections::HashMap;
use std::fs;
use std::hash::Hash;
use std::path::Path;

use super::family::{colors_of, ComplexFamily, Labeling, MAX_COLORS};
use crate::error::{Error, Limits, Result};
use crate::simplicial::{barycentric_subdivision, parse_cpx, to_cpx, SimplicialComplex};

/// Family of a triangulated simplex: `K^I` is induced on the vertices whose
/// carrier (minimal face of the simplex containing them, as a mask) lies in `I`.
pub fn sperner_family<V, F>(
    t: &SimplicialComplex<V>,
    carrier: F,
    k: usize,
) -> Result<ComplexFamily<V>>
where
    V: Ord + Clone + Hash,
    F: Fn(&V) -> u64,
{
    let carriers: Vec<u64> = t.vertices().iter().map(&carrier).collect();
    if k == 0 || k > MAX_COLORS {
        return Err(Error::invalid(format!(
            "color count {k} outside 1..={MAX_COLORS}"
        )));
    }
    if let Some(&c) = carriers.iter().find(|&&c| c == 0 || c >> k != 0) {
        return Err(Error::invalid(format!(
            "carrier {c:#b} is not a non-empty subset of the {k} colors"
        )));
    }
    for d in 1..=t.dim().max(0) as usize {
        for f in t.faces(d) {
            let union = f.iter().fold(0u64, |acc, &v| acc | carriers[v as usize]);
            if union.count_ones() < (d + 1) as u32 {
                return Err(Error::invalid(format!(
                    "a {d}-face lies in the carrier {:?} of smaller dimension",
                    colors_of(union)
                )));
            }
        }
    }
    ComplexFamily::from_fn(k, |mask| {
        Ok(t.induced(|v| {
            let c = carrier(v);
            c & !mask == 0
        }))
    })
}

/// Family with `K^I` induced on the vertices whose label lies in `I`.
pub fn meshulam_family<V, F>(
    k_complex: &SimplicialComplex<V>,
    label: F,
    k: usize,
) -> Result<ComplexFamily<V>>
where
    V: Ord + Clone + Hash,
    F: Fn(&V) -> usize,
{
    if let Some(v) = k_complex.vertices().iter().find(|v| label(v) >= k) {
        return Err(Error::invalid(format!(
            "label {} exceeds the color count {k}",
            label(v) + 1
        )));
    }
    ComplexFamily::from_fn(k, |mask| {
        Ok(k_complex.induced(|v| mask >> label(v) & 1 == 1))
    })
}

/// A triangulated simplex with integer vertices and their carriers.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub complex: SimplicialComplex<u32>,
    pub carrier: Vec<u64>,
}

/// The simplex on `k` vertices subdivided barycentrically `depth` times.
pub fn iterated_subdivision(k: usize, depth: usize, limits: &Limits) -> Result<Triangulation> {
    let mut complex = SimplicialComplex::full_simplex(0..k as u32, limits)?;
    let mut carrier: Vec<u64> = (0..k).map(|i| 1 << i).collect();
    for _ in 0..depth {
        let sd = barycentric_subdivision(&complex, limits)?;
        let new_carrier: Vec<u64> = sd
            .vertices()
            .iter()
            .map(|face| face.iter().fold(0, |acc, &v| acc | carrier[v as usize]))
            .collect();
        let faces: Vec<Vec<Vec<u32>>> = (0..(sd.dim() + 1) as usize)
            .map(|d| sd.faces(d).to_vec())
            .collect();
        complex =
            SimplicialComplex::from_sorted_parts((0..sd.vertices().len() as u32).collect(), faces);
        carrier = new_carrier;
    }
    Ok(Triangulation { complex, carrier })
}

/// File name of the complex `K^I` in a family directory, e.g. `1-3-4.cpx`.
pub fn family_file_name(mask: u64) -> String {
    let colors: Vec<String> = colors_of(mask).iter().map(ToString::to_string).collect();
    format!("{}.cpx", colors.join("-"))
}

/// Read a family directory. The color count is the largest color named by a
/// file; subsets without a file are empty complexes.
pub fn read_family_dir(dir: &Path, limits: &Limits) -> Result<ComplexFamily<String>> {
    let mut found: HashMap<u64, SimplicialComplex<String>> = HashMap::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let Some(stem) = path
            .extension()
            .filter(|e| *e == "cpx")
            .and(path.file_stem())
        else {
            continue;
        };
        let stem = stem.to_string_lossy();
        let mut mask = 0u64;
        for tok in stem.split('-') {
            let c: usize = tok.parse().map_err(|_| {
                Error::parse(format!("family file {stem:?} is not named by colors"))
            })?;
            if c == 0 || c > MAX_COLORS {
                return Err(Error::parse(format!(
                    "color {c} in {stem:?} is outside 1..={MAX_COLORS}"
                )));
            }
            mask |= 1 << (c - 1);
        }
        let text = fs::read_to_string(&path)?;
        found.insert(mask, parse_cpx(&text, limits)?);
    }
    let all = found.keys().fold(0u64, |a, m| a | m);
    if all == 0 {
        return Err(Error::parse("family directory holds no .cpx files"));
    }
    let k = 64 - all.leading_zeros() as usize;
    ComplexFamily::from_fn(k, |mask| {
        Ok(found
            .get(&mask)
            .cloned()
            .unwrap_or_else(SimplicialComplex::empty))
    })
}

/// Write every non-empty member of a family as `.cpx` files.
pub fn write_family_dir<V>(family: &ComplexFamily<V>, dir: &Path) -> Result<()>
where
    V: Ord + Clone + Hash + std::fmt::Display,
{
    fs::create_dir_all(dir)?;
    for mask in 1..=family.full_mask() {
        let member = family.member(mask);
        if !member.is_empty() {
            fs::write(dir.join(family_file_name(mask)), to_cpx(member))?;
        }
    }
    Ok(())
}

/// Parse `vertex label` lines (labels 1-based) into a labeling of the top
/// complex. Every top vertex must be labeled exactly once.
pub fn parse_labels(text: &str, family: &ComplexFamily<String>) -> Result<Labeling> {
    let top = family.top();
    let mut labels: Vec<Option<usize>> = vec![None; top.vertices().len()];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || {
            Error::parse(format!(
                "labels line {}: expected \"vertex label\"",
                lineno + 1
            ))
        };
        let mut parts = line.split_whitespace();
        let (Some(v), Some(l), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let l: usize = l.parse().map_err(|_| bad())?;
        if l == 0 {
            return Err(bad());
        }
        let idx = top.vertex_index(&v.to_string()).ok_or_else(|| {
            Error::parse(format!("labels line {}: unknown vertex {v:?}", lineno + 1))
        })?;
        if labels[idx as usize].replace(l - 1).is_some() {
            return Err(Error::parse(format!("vertex {v:?} labeled twice")));
        }
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| {
            l.ok_or_else(|| Error::parse(format!("vertex {:?} has no label", top.vertices()[i])))
        })
        .collect::<Result<Vec<_>>>()?;
    Labeling::new(family, labels)
}
