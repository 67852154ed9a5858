//! Inductive construction of the chains `c^I` and rainbow extraction.
//!
//! Chains are expressed in the vertex indexing of the top complex. For
//! `|I| ≥ 2` the chain `c^I` solves `∂x = Σ_{i∈I} c^{I∖i}` over the
//! `(|I|−1)`-faces of `K^I`; the right-hand side is a cycle supported by
//! `K^I`, so a solution exists whenever `H̃_{|I|−2}(K^I) = 0`.

use std::collections::HashMap;
use std::hash::Hash;

use super::family::{colors_of, ComplexFamily, Labeling};
use crate::error::{Error, Limits, Result};
use crate::gf2::{Reducer, SparseColumn};
use crate::om::bits;
use crate::simplicial::{boundary, Face, Z2Chain};

/// The chains `c^I`, indexed by mask, with `c^∅ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainFamily {
    k: usize,
    chains: Vec<Z2Chain>,
}

impl ChainFamily {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chain(&self, mask: u64) -> &Z2Chain {
        &self.chains[mask as usize]
    }

    /// Recompute every boundary from scratch and check supports.
    pub fn verify<V: Ord + Clone + Hash>(&self, family: &ComplexFamily<V>) -> Result<()> {
        if self.chains[0] != Z2Chain::unit() {
            return Err(Error::Invariant("c^∅ is not the unit (−1)-chain".into()));
        }
        for mask in 1..=family.full_mask() {
            let c = self.chain(mask);
            let colors = colors_of(mask);
            if c.dim() != mask.count_ones() as isize - 1 {
                return Err(Error::Invariant(format!(
                    "c^{colors:?} has dimension {}",
                    c.dim()
                )));
            }
            if let Some(f) = c.simplices().find(|f| !family.member_contains(mask, f)) {
                return Err(Error::Invariant(format!(
                    "c^{colors:?} uses {f:?} outside K^{colors:?}"
                )));
            }
            let lhs = boundary(c, family.top())?;
            let rhs = facet_sum(&self.chains, mask);
            if lhs != rhs {
                return Err(Error::Invariant(format!(
                    "∂c^{colors:?} differs from Σ c^(I∖i)"
                )));
            }
        }
        Ok(())
    }

    /// Coefficient of `σ^I` in `λ_♯(c^I)`: the parity of the simplices of
    /// `c^I` whose labels are exactly `I`.
    pub fn alpha(&self, mask: u64, labeling: &Labeling) -> bool {
        let hits = self
            .chain(mask)
            .simplices()
            .filter(|f| labeling.label_mask(f) == Some(mask))
            .count();
        hits % 2 == 1
    }

    /// `α_I = 1` for every non-empty `I`.
    pub fn verify_alphas(&self, labeling: &Labeling) -> Result<()> {
        for mask in 1..self.chains.len() as u64 {
            if !self.alpha(mask, labeling) {
                return Err(Error::Invariant(format!(
                    "α is zero on {:?}",
                    colors_of(mask)
                )));
            }
        }
        Ok(())
    }
}

fn facet_sum(chains: &[Z2Chain], mask: u64) -> Z2Chain {
    let mut sum = Z2Chain::zero(mask.count_ones() as isize - 2);
    for i in bits(mask) {
        sum.add_assign(&chains[(mask & !(1 << i)) as usize])
            .expect("chains of one level share a dimension");
    }
    sum
}

/// Verify the family's connectivity certificate, then solve for every `c^I`
/// in order of increasing `|I|` (masks in increasing order within a level).
pub fn build_chain_family<V: Ord + Clone + Hash>(
    family: &ComplexFamily<V>,
    limits: &Limits,
) -> Result<ChainFamily> {
    family.verify_connectivity(limits)?;
    let k = family.k();
    let mut chains: Vec<Z2Chain> = vec![Z2Chain::zero(-1); 1 << k];
    chains[0] = Z2Chain::unit();
    let mut masks: Vec<u64> = (1..=family.full_mask()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        chains[mask as usize] = solve_level(family, &chains, mask)?;
    }
    Ok(ChainFamily { k, chains })
}

fn solve_level<V: Ord + Clone + Hash>(
    family: &ComplexFamily<V>,
    chains: &[Z2Chain],
    mask: u64,
) -> Result<Z2Chain> {
    let d = mask.count_ones() as usize - 1;
    let cells = family.member_faces_in_top(mask, d);
    if d == 0 {
        let v = cells
            .into_iter()
            .next()
            .ok_or_else(|| Error::Connectivity {
                subset: colors_of(mask),
                detail: "complex is empty".into(),
            })?;
        return Z2Chain::from_faces(0, [v]);
    }
    let target = facet_sum(chains, mask);
    let mut rows: HashMap<Face, u32> = HashMap::new();
    let mut row_of = |f: Face| {
        let next = rows.len() as u32;
        *rows.entry(f).or_insert(next)
    };
    let mut rhs: SparseColumn = target.simplices().map(|f| row_of(f.clone())).collect();
    rhs.sort_unstable();
    let columns: Vec<SparseColumn> = cells
        .iter()
        .map(|cell| {
            let mut col: SparseColumn = (0..cell.len())
                .map(|skip| {
                    let facet: Face = cell
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    row_of(facet)
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    let reducer = Reducer::new(columns, true);
    match reducer.solve(&rhs) {
        Ok(combo) => Z2Chain::from_faces(
            d as isize,
            combo.into_iter().map(|j| cells[j as usize].clone()),
        ),
        Err(residual) => Err(Error::Connectivity {
            subset: colors_of(mask),
            detail: format!(
                "Σ c^(I∖i) is a {}-cycle that bounds nothing in K^I (residual of {} faces)",
                d - 1,
                residual.len()
            ),
        }),
    }
}

/// A `(k−1)`-face of the top complex with all `k` labels; entry `i` is the
/// vertex labeled `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowSimplex<V> {
    pub by_color: Vec<V>,
    pub face: Face,
}

/// First simplex of `c^{[k]}` (in face order) carrying all `k` labels.
pub fn rainbow_from_chains<V: Ord + Clone + Hash>(
    family: &ComplexFamily<V>,
    chains: &ChainFamily,
    labeling: &Labeling,
) -> Result<RainbowSimplex<V>> {
    let full = family.full_mask();
    let face = chains
        .chain(full)
        .simplices()
        .find(|f| labeling.label_mask(f) == Some(full))
        .cloned()
        .ok_or_else(|| {
            Error::Invariant("no rainbow simplex in the support of the top chain".into())
        })?;
    let mut by_color: Vec<Option<V>> = vec![None; family.k()];
    for &v in &face {
        by_color[labeling.label(v)] = Some(family.top().vertices()[v as usize].clone());
    }
    Ok(RainbowSimplex {
        by_color: by_color
            .into_iter()
            .map(|v| v.expect("all labels present"))
            .collect(),
        face,
    })
}

/// Build the chain family and extract a rainbow simplex.
pub fn find_rainbow_simplex<V: Ord + Clone + Hash>(
    family: &ComplexFamily<V>,
    labeling: &Labeling,
    limits: &Limits,
) -> Result<RainbowSimplex<V>> {
    let chains = build_chain_family(family, limits)?;
    rainbow_from_chains(family, &chains, labeling)
}
