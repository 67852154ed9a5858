//! Reduced Z₂ homology from boundary-matrix ranks.
//!
//! `C₋₁` is one-dimensional (spanned by the empty face) and `∂₀` is the
//! augmentation, so the empty complex has `H̃₋₁ = Z₂` and every non-empty
//! complex has `H̃₋₁ = 0`.

use std::hash::Hash;

use super::complex::{facets_of, SimplicialComplex};
use crate::error::{Limits, Result};
use crate::gf2::{self, SparseColumn};

/// Columns of `∂_q` indexed by the `q`-faces, rows by the `(q−1)`-faces
/// (a single row for `q = 0`).
pub fn boundary_columns<V: Ord + Clone + Hash>(
    k: &SimplicialComplex<V>,
    q: usize,
) -> Vec<SparseColumn> {
    k.faces(q)
        .iter()
        .map(|f| {
            if q == 0 {
                return vec![0];
            }
            let mut col: SparseColumn = facets_of(f)
                .map(|g| k.face_position(&g).expect("complex is closed"))
                .collect();
            col.sort_unstable();
            col
        })
        .collect()
}

fn boundary_rank<V: Ord + Clone + Hash>(k: &SimplicialComplex<V>, q: isize) -> usize {
    if q < 0 {
        return 0;
    }
    gf2::rank(boundary_columns(k, q as usize))
}

fn chain_dim<V: Ord + Clone + Hash>(k: &SimplicialComplex<V>, q: isize) -> usize {
    if q == -1 {
        1
    } else {
        k.faces(q as usize).len()
    }
}

/// Rank of the reduced homology group `H̃_q(K; Z₂)` for `q ≥ −1`.
pub fn betti_z2<V: Ord + Clone + Hash>(
    k: &SimplicialComplex<V>,
    q: isize,
    limits: &Limits,
) -> Result<usize> {
    limits.check_faces(k.face_count())?;
    if q < -1 || q > k.dim() {
        return Ok(0);
    }
    Ok(chain_dim(k, q) - boundary_rank(k, q) - boundary_rank(k, q + 1))
}

/// Reduced Betti numbers for `q = −1, 0, …, dim K`, each boundary rank
/// computed once.
pub fn reduced_betti_numbers<V: Ord + Clone + Hash>(
    k: &SimplicialComplex<V>,
    limits: &Limits,
) -> Result<Vec<usize>> {
    limits.check_faces(k.face_count())?;
    let top = k.dim();
    let ranks: Vec<usize> = (-1..=top + 1).map(|q| boundary_rank(k, q)).collect();
    Ok((-1..=top)
        .map(|q| {
            let i = (q + 1) as usize;
            chain_dim(k, q) - ranks[i] - ranks[i + 1]
        })
        .collect())
}

/// `H̃_q(K; Z₂) = 0` for every `−1 ≤ q ≤ m`. For `m ≥ −1` this includes
/// non-emptiness.
pub fn reduced_homology_trivial_up_to<V: Ord + Clone + Hash>(
    k: &SimplicialComplex<V>,
    m: isize,
    limits: &Limits,
) -> Result<bool> {
    limits.check_faces(k.face_count())?;
    if m < -1 {
        return Ok(true);
    }
    if k.is_empty() {
        return Ok(false);
    }
    let top = m.min(k.dim());
    let mut lower = boundary_rank(k, 0);
    for q in 0..=top {
        let upper = boundary_rank(k, q + 1);
        if chain_dim(k, q) != lower + upper {
            return Ok(false);
        }
        lower = upper;
    }
    Ok(true)
}
