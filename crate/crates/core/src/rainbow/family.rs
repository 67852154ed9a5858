use std::hash::Hash;

use crate::error::{Error, Limits, Result};
use crate::om::bits;
use crate::simplicial::{reduced_homology_trivial_up_to, Face, SimplicialComplex};

/// Colors of a mask as 1-based indices, for messages and file names.
pub fn colors_of(mask: u64) -> Vec<usize> {
    bits(mask).map(|c| c + 1).collect()
}

/// A family `K^I` indexed by subsets `I ⊆ {0, …, k−1}` (bitmasks), monotone
/// under inclusion. Member faces are also kept in the vertex indexing of the
/// top complex `K^{[k]}`.
#[derive(Clone, Debug)]
pub struct ComplexFamily<V> {
    k: usize,
    members: Vec<SimplicialComplex<V>>,
    to_top: Vec<Vec<u32>>,
}

pub(crate) const MAX_COLORS: usize = 16;

impl<V: Ord + Clone + Hash> ComplexFamily<V> {
    /// `complexes[mask]` is `K^I` for the subset encoded by `mask`. Fails if
    /// the family is not monotone.
    pub fn new(k: usize, complexes: Vec<SimplicialComplex<V>>) -> Result<Self> {
        if k == 0 || k > MAX_COLORS {
            return Err(Error::invalid(format!(
                "color count {k} outside 1..={MAX_COLORS}"
            )));
        }
        if complexes.len() != 1 << k {
            return Err(Error::LengthMismatch {
                left: complexes.len(),
                right: 1 << k,
            });
        }
        for mask in 0..complexes.len() {
            for j in (0..k).filter(|j| mask >> j & 1 == 0) {
                if !complexes[mask].is_subcomplex_of(&complexes[mask | 1 << j]) {
                    return Err(Error::invalid(format!(
                        "family is not monotone: K^{:?} is not inside K^{:?}",
                        colors_of(mask as u64),
                        colors_of((mask | 1 << j) as u64)
                    )));
                }
            }
        }
        let top = &complexes[complexes.len() - 1];
        let to_top = complexes
            .iter()
            .map(|c| {
                c.vertices()
                    .iter()
                    .map(|v| top.vertex_index(v).expect("monotone family"))
                    .collect()
            })
            .collect();
        Ok(ComplexFamily {
            k,
            members: complexes,
            to_top,
        })
    }

    /// Build `K^I = f(I)` for every mask.
    pub fn from_fn<F>(k: usize, f: F) -> Result<Self>
    where
        F: Fn(u64) -> Result<SimplicialComplex<V>>,
    {
        if k == 0 || k > MAX_COLORS {
            return Err(Error::invalid(format!(
                "color count {k} outside 1..={MAX_COLORS}"
            )));
        }
        let complexes = (0..1u64 << k).map(f).collect::<Result<Vec<_>>>()?;
        Self::new(k, complexes)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn full_mask(&self) -> u64 {
        (1 << self.k) - 1
    }

    pub fn member(&self, mask: u64) -> &SimplicialComplex<V> {
        &self.members[mask as usize]
    }

    pub fn top(&self) -> &SimplicialComplex<V> {
        &self.members[self.members.len() - 1]
    }

    /// `d`-faces of `K^I` in top indexing.
    pub fn member_faces_in_top(&self, mask: u64, d: usize) -> Vec<Face> {
        let map = &self.to_top[mask as usize];
        let mut out: Vec<Face> = self.members[mask as usize]
            .faces(d)
            .iter()
            .map(|f| {
                let mut g: Face = f.iter().map(|&i| map[i as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether the top-indexed face lies in `K^I`.
    pub fn member_contains(&self, mask: u64, top_face: &[u32]) -> bool {
        self.member(mask)
            .contains_vertex_set(&self.top().face_vertices(top_face))
    }

    /// `K^I` is homologically `(|I|−2)`-connected for every non-empty `I`.
    pub fn verify_connectivity(&self, limits: &Limits) -> Result<()> {
        for mask in 1..=self.full_mask() {
            let m = mask.count_ones() as isize - 2;
            if !reduced_homology_trivial_up_to(self.member(mask), m, limits)? {
                let detail = if self.member(mask).is_empty() {
                    "complex is empty".to_string()
                } else {
                    format!("reduced homology is non-zero in some dimension up to {m}")
                };
                return Err(Error::Connectivity {
                    subset: colors_of(mask),
                    detail,
                });
            }
        }
        Ok(())
    }
}

/// A map from the vertices of `K^{[k]}` to colors `0..k` with `λ(v) ∈ I`
/// whenever `v ∈ K^I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    /// Labels indexed by top vertex position.
    pub fn new<V: Ord + Clone + Hash>(
        family: &ComplexFamily<V>,
        labels: Vec<usize>,
    ) -> Result<Labeling> {
        let top = family.top();
        if labels.len() != top.vertices().len() {
            return Err(Error::LengthMismatch {
                left: labels.len(),
                right: top.vertices().len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= family.k()) {
            return Err(Error::invalid(format!(
                "label {} exceeds the color count {}",
                bad + 1,
                family.k()
            )));
        }
        for mask in 0..=family.full_mask() {
            for &v in &family.to_top[mask as usize] {
                if mask >> labels[v as usize] & 1 == 0 {
                    return Err(Error::invalid(format!(
                        "vertex of K^{:?} carries label {}",
                        colors_of(mask),
                        labels[v as usize] + 1
                    )));
                }
            }
        }
        Ok(Labeling { labels })
    }

    pub fn from_fn<V, F>(family: &ComplexFamily<V>, f: F) -> Result<Labeling>
    where
        V: Ord + Clone + Hash,
        F: Fn(&V) -> usize,
    {
        Labeling::new(family, family.top().vertices().iter().map(f).collect())
    }

    pub fn label(&self, top_vertex: u32) -> usize {
        self.labels[top_vertex as usize]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Mask of the labels on a face, or `None` if two vertices share a label.
    pub fn label_mask(&self, face: &[u32]) -> Option<u64> {
        let mut mask = 0u64;
        for &v in face {
            let bit = 1 << self.label(v);
            if mask & bit != 0 {
                return None;
            }
            mask |= bit;
        }
        Some(mask)
    }
}
