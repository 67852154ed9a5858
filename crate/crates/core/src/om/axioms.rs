//! Exhaustive validity check for small chirotopes.
//!
//! A value sequence is accepted when its non-zero pattern is the basis set of
//! a matroid and the signed sets read off by [`Chirotope::circuits`] satisfy
//! the circuit axioms (symmetry, incomparability, signed elimination).

use super::chirotope::Chirotope;
use super::sign::{bits, SignVector};
use crate::error::{Limits, Result};

/// `Ok(None)` when valid, `Ok(Some(reason))` when an axiom fails.
pub fn axiom_failure(chi: &Chirotope, limits: &Limits) -> Result<Option<String>> {
    limits.check_n(chi.n())?;
    if let Some(msg) = basis_exchange_failure(chi) {
        return Ok(Some(msg));
    }
    let circuits = chi.circuits();
    Ok(circuit_axiom_failure(&circuits))
}

pub fn check_chirotope(chi: &Chirotope, limits: &Limits) -> Result<bool> {
    Ok(axiom_failure(chi, limits)?.is_none())
}

fn basis_exchange_failure(chi: &Chirotope) -> Option<String> {
    let mut sorted = chi.bases();
    sorted.sort_unstable();
    let is_basis_sorted = |m: u64| sorted.binary_search(&m).is_ok();
    for &b1 in &sorted {
        for &b2 in &sorted {
            for x in bits(b1 & !b2) {
                let ok = bits(b2 & !b1).any(|y| is_basis_sorted((b1 & !(1 << x)) | 1 << y));
                if !ok {
                    return Some(format!(
                        "basis exchange fails: {:?} minus element {} against {:?}",
                        one_based(b1),
                        x + 1,
                        one_based(b2)
                    ));
                }
            }
        }
    }
    None
}

/// Exhaustive circuit-axiom check on a finite family of signed sets.
pub fn circuit_axiom_failure(circuits: &[SignVector]) -> Option<String> {
    for c in circuits {
        if c.is_zero() {
            return Some("zero vector among circuits".into());
        }
        if !circuits.contains(&-*c) {
            return Some(format!("circuit {c} present without its negative"));
        }
    }
    for x in circuits {
        for y in circuits {
            let (sx, sy) = (x.support_mask(), y.support_mask());
            if sx & !sy == 0 && *x != *y && *x != -*y {
                return Some(format!(
                    "incomparability fails: support of {x} inside support of {y}"
                ));
            }
        }
    }
    for x in circuits {
        for y in circuits {
            if *x == -*y {
                continue;
            }
            for e in bits(x.pos_mask() & y.neg_mask()) {
                let allow_pos = (x.pos_mask() | y.pos_mask()) & !(1 << e);
                let allow_neg = (x.neg_mask() | y.neg_mask()) & !(1 << e);
                let found = circuits
                    .iter()
                    .any(|z| z.pos_mask() & !allow_pos == 0 && z.neg_mask() & !allow_neg == 0);
                if !found {
                    return Some(format!(
                        "elimination of {x} and {y} at element {} fails",
                        e + 1
                    ));
                }
            }
        }
    }
    None
}

fn one_based(mask: u64) -> Vec<usize> {
    bits(mask).map(|j| j + 1).collect()
}
