//! Closure-based enumeration of vectors, covectors and topes, plus the
//! height function on the vector lattice.

use std::collections::{HashMap, HashSet};

use super::chirotope::Chirotope;
use super::sign::{bits, SignVector};
use crate::error::{Error, Limits, Result};

/// Closure of `generators ∪ {0}` under composition, in canonical order.
pub fn composition_closure(n: usize, generators: &[SignVector]) -> Vec<SignVector> {
    let zero = SignVector::zero(n);
    let mut seen: HashSet<SignVector> = HashSet::from([zero]);
    let mut stack = vec![zero];
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = x.compose_unchecked(g);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    let mut out: Vec<SignVector> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn cocircuits(chi: &Chirotope) -> Vec<SignVector> {
    chi.dual().circuits()
}

pub fn covectors(chi: &Chirotope, limits: &Limits) -> Result<Vec<SignVector>> {
    limits.check_n(chi.n())?;
    Ok(composition_closure(chi.n(), &cocircuits(chi)))
}

pub fn vectors(chi: &Chirotope, limits: &Limits) -> Result<Vec<SignVector>> {
    limits.check_n(chi.n())?;
    Ok(composition_closure(chi.n(), &chi.circuits()))
}

/// Maximal covectors, in canonical order (`+ < -`).
pub fn topes(chi: &Chirotope, limits: &Limits) -> Result<Vec<SignVector>> {
    let cocircuits = cocircuits(chi);
    let all = covectors(chi, limits)?;
    Ok(all
        .into_iter()
        .filter(|x| cocircuits.iter().all(|c| x.compose_unchecked(c) == *x))
        .collect())
}

/// Positive circuits (all non-zero signs `+`), ordered lexicographically by support.
pub fn positive_circuits(chi: &Chirotope) -> Vec<SignVector> {
    let mut out: Vec<SignVector> = chi
        .circuits()
        .into_iter()
        .filter(|c| c.is_positive())
        .collect();
    out.sort_by(|a, b| a.cmp_support_lex(b));
    out
}

/// A family of sign vectors closed downward within itself, with heights.
///
/// `height(X)` is the length of a longest chain `0 = X_0 ≺ X_1 ≺ ... ≺ X = X_h`
/// inside the family.
#[derive(Clone, Debug)]
pub struct VectorPoset {
    elements: Vec<SignVector>,
    heights: Vec<usize>,
    index: HashMap<SignVector, usize>,
}

impl VectorPoset {
    /// Computes heights by dynamic programming over conformal sub-vectors.
    /// `elements` must contain the zero vector.
    pub fn new(mut elements: Vec<SignVector>) -> VectorPoset {
        elements.sort();
        elements.dedup();
        let index: HashMap<SignVector, usize> =
            elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by_key(|&i| elements[i].support_size());
        let mut heights = vec![0usize; elements.len()];
        for &i in &order {
            let x = elements[i];
            let supp = x.support_mask();
            let mut best: Option<usize> = None;
            // proper non-empty and empty sub-masks of the support
            let mut sub = supp;
            while sub != 0 {
                sub = (sub - 1) & supp;
                if let Some(&k) = index.get(&x.restrict(sub)) {
                    best = Some(best.map_or(heights[k], |b: usize| b.max(heights[k])));
                }
            }
            heights[i] = if supp == 0 {
                0
            } else {
                best.map_or(0, |b| b + 1)
            };
        }
        VectorPoset {
            elements,
            heights,
            index,
        }
    }

    pub fn elements(&self) -> &[SignVector] {
        &self.elements
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.index.contains_key(x)
    }

    pub fn height(&self, x: &SignVector) -> Option<usize> {
        self.index.get(x).map(|&i| self.heights[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (SignVector, usize)> + '_ {
        self.elements
            .iter()
            .copied()
            .zip(self.heights.iter().copied())
    }

    /// The partial order of the poset.
    pub fn le(&self, a: &SignVector, b: &SignVector) -> bool {
        a.conforms_unchecked(b)
    }
}

pub fn build_vector_poset(chi: &Chirotope, limits: &Limits) -> Result<VectorPoset> {
    Ok(VectorPoset::new(vectors(chi, limits)?))
}

/// Positive vectors plus zero. Every positive vector is a conformal
/// composition of positive circuits, so closing those suffices; heights agree
/// with the full vector lattice because lower sets of positive vectors are positive.
pub fn positive_vector_poset(chi: &Chirotope, limits: &Limits) -> Result<VectorPoset> {
    limits.check_n(chi.n())?;
    let gens = positive_circuits(chi);
    Ok(VectorPoset::new(composition_closure(chi.n(), &gens)))
}

pub fn height(chi: &Chirotope, x: &SignVector, limits: &Limits) -> Result<usize> {
    let poset = build_vector_poset(chi, limits)?;
    poset
        .height(x)
        .ok_or_else(|| Error::invalid(format!("{x} is not a vector")))
}

/// `|supp X| <= rank + height(X)` for every vector `X`.
pub fn check_height_bound(chi: &Chirotope, limits: &Limits) -> Result<bool> {
    let poset = build_vector_poset(chi, limits)?;
    let holds = poset
        .iter()
        .all(|(x, h)| x.support_size() <= chi.rank() + h);
    Ok(holds)
}

/// Positive vectors `X` with `1 <= height(X) <= h` such that every circuit
/// `C ⪯ X` has `C(e) = +`. The element `e` is 0-based.
pub fn positive_vectors_eh(
    chi: &Chirotope,
    e: usize,
    h: usize,
    limits: &Limits,
) -> Result<Vec<SignVector>> {
    if e >= chi.n() {
        return Err(Error::invalid(format!(
            "element {} outside ground set",
            e + 1
        )));
    }
    if h == 0 {
        return Err(Error::invalid("height bound must be at least 1"));
    }
    let poset = positive_vector_poset(chi, limits)?;
    let circuits = positive_circuits(chi);
    Ok(filter_eh(&poset, &circuits, e, h, u64::MAX))
}

/// Shared filter: positive vectors of `poset` with support inside `within`,
/// height in `1..=h`, all of whose positive sub-circuits contain `e`.
pub(crate) fn filter_eh(
    poset: &VectorPoset,
    positive_circuits: &[SignVector],
    e: usize,
    h: usize,
    within: u64,
) -> Vec<SignVector> {
    poset
        .iter()
        .filter(|&(x, hx)| {
            let s = x.support_mask();
            x.is_positive()
                && (1..=h).contains(&hx)
                && s & !within == 0
                && positive_circuits
                    .iter()
                    .filter(|c| c.support_mask() & !s == 0)
                    .all(|c| c.pos_mask() >> e & 1 == 1)
        })
        .map(|(x, _)| x)
        .collect()
}

/// Non-zero covectors `X` with `X(j) ∈ {0,+}` on `jplus` and `X(j) ∈ {0,-}` on `jminus`
/// (both 0-based masks).
pub fn covector_set_jj(
    chi: &Chirotope,
    jplus: u64,
    jminus: u64,
    limits: &Limits,
) -> Result<Vec<SignVector>> {
    if jplus & jminus != 0 {
        let both: Vec<usize> = bits(jplus & jminus).map(|j| j + 1).collect();
        return Err(Error::invalid(format!("J+ and J- overlap on {both:?}")));
    }
    Ok(covectors(chi, limits)?
        .into_iter()
        .filter(|x| !x.is_zero() && x.neg_mask() & jplus == 0 && x.pos_mask() & jminus == 0)
        .collect())
}
