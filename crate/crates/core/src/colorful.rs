//! Colorful Carathéodory searches in oriented matroids.
//!
//! Conic version: given positive circuits `C_1, …, C_r` (r = rank) through a
//! common element `e`, some positive circuit `C̃` through `e` takes each of its
//! other elements from a distinct `C_i`. Convex version: given `rank + 1`
//! positive circuits, some positive circuit takes each of its elements from a
//! distinct `C_i`.
//!
//! Both are solved by scanning positive circuits in support-lex order and
//! matching elements to circuit indices. [`conic_pipeline`] instead runs the
//! topological argument end to end through the rainbow engine.

use std::fmt;

use crate::error::{Error, Limits, Result};
use crate::matching::saturating_matching;
use crate::om::{
    bits, filter_eh, positive_circuits, positive_vector_poset, Chirotope, RationalMatrix, Sign,
    SignVector,
};
use crate::rainbow::{find_rainbow_simplex, ComplexFamily, Labeling};
use crate::simplicial::{order_complex, Poset, SimplicialComplex};

/// Largest ground set the pipeline accepts after making parallel copies.
pub const PIPELINE_MAX_EXTENDED: usize = 16;

/// A positive circuit with an injective map from (part of) its support to
/// circuit indices. Elements and indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub circuit: SignVector,
    /// `(element, index)` pairs sorted by element.
    pub assignment: Vec<(usize, usize)>,
}

impl fmt::Display for RainbowCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .assignment
            .iter()
            .map(|(elem, idx)| format!("{}->{}", elem + 1, idx + 1))
            .collect();
        write!(f, "{} [{}]", self.circuit, pairs.join(" "))
    }
}

impl RainbowCertificate {
    /// Independent re-check of a conic certificate.
    pub fn verify_conic(&self, chi: &Chirotope, e: usize, circuits: &[SignVector]) -> Result<()> {
        if self.circuit.get(e) != Sign::Plus {
            return Err(Error::Invariant(format!(
                "certificate circuit {} misses element {}",
                self.circuit,
                e + 1
            )));
        }
        self.verify_common(chi, circuits, self.circuit.support_mask() & !(1 << e))
    }

    /// Independent re-check of a convex certificate.
    pub fn verify_convex(&self, chi: &Chirotope, circuits: &[SignVector]) -> Result<()> {
        self.verify_common(chi, circuits, self.circuit.support_mask())
    }

    fn verify_common(&self, chi: &Chirotope, circuits: &[SignVector], assigned: u64) -> Result<()> {
        let c = &self.circuit;
        if !c.is_positive() || c.is_zero() || !chi.circuits().contains(c) {
            return Err(Error::Invariant(format!("{c} is not a positive circuit")));
        }
        let elems: Vec<usize> = self.assignment.iter().map(|&(f, _)| f).collect();
        if elems != bits(assigned).collect::<Vec<_>>() {
            return Err(Error::Invariant(format!(
                "assignment domain {elems:?} does not match the support"
            )));
        }
        let mut used = vec![false; circuits.len()];
        for &(f, i) in &self.assignment {
            if i >= circuits.len() || std::mem::replace(&mut used[i], true) {
                return Err(Error::Invariant(format!(
                    "index {} used twice or out of range",
                    i + 1
                )));
            }
            if circuits[i].get(f) == Sign::Zero {
                return Err(Error::Invariant(format!(
                    "element {} is not in C_{}",
                    f + 1,
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// Validated input of the conic search.
#[derive(Clone, Debug)]
pub struct ConicInstance {
    pub chi: Chirotope,
    pub e: usize,
    pub circuits: Vec<SignVector>,
}

impl ConicInstance {
    pub fn new(chi: Chirotope, e: usize, circuits: Vec<SignVector>) -> Result<ConicInstance> {
        if e >= chi.n() {
            return Err(Error::invalid(format!(
                "element {} outside the ground set",
                e + 1
            )));
        }
        if circuits.len() != chi.rank() {
            return Err(Error::invalid(format!(
                "{} circuits given, the rank is {}",
                circuits.len(),
                chi.rank()
            )));
        }
        check_positive_circuits(&chi, &circuits)?;
        if let Some(c) = circuits.iter().find(|c| c.get(e) != Sign::Plus) {
            return Err(Error::invalid(format!(
                "circuit {c} does not contain element {}",
                e + 1
            )));
        }
        Ok(ConicInstance { chi, e, circuits })
    }

    fn dump(&self) -> String {
        let cs: Vec<String> = self.circuits.iter().map(ToString::to_string).collect();
        format!(
            "chi={:?} e={} circuits=[{}]",
            self.chi.to_string(),
            self.e + 1,
            cs.join(",")
        )
    }
}

fn check_positive_circuits(chi: &Chirotope, circuits: &[SignVector]) -> Result<()> {
    let all = positive_circuits(chi);
    for c in circuits {
        if c.len() != chi.n() {
            return Err(Error::LengthMismatch {
                left: c.len(),
                right: chi.n(),
            });
        }
        if !all.contains(c) {
            return Err(Error::invalid(format!("{c} is not a positive circuit")));
        }
    }
    Ok(())
}

/// Match the elements of `domain` (in increasing order) to distinct indices
/// `i` with `f ∈ C_i`.
fn match_support(domain: u64, circuits: &[SignVector]) -> Option<Vec<(usize, usize)>> {
    let elems: Vec<usize> = bits(domain).collect();
    let adj: Vec<Vec<usize>> = elems
        .iter()
        .map(|&f| {
            (0..circuits.len())
                .filter(|&i| circuits[i].get(f) != Sign::Zero)
                .collect()
        })
        .collect();
    let m = saturating_matching(&adj, circuits.len())?;
    Some(elems.into_iter().zip(m).collect())
}

/// Direct search for a conic certificate.
pub fn find_rainbow_conic(inst: &ConicInstance) -> Result<RainbowCertificate> {
    let e = inst.e;
    for c in positive_circuits(&inst.chi)
        .into_iter()
        .filter(|c| c.get(e) == Sign::Plus)
    {
        if let Some(assignment) = match_support(c.support_mask() & !(1 << e), &inst.circuits) {
            return Ok(RainbowCertificate {
                circuit: c,
                assignment,
            });
        }
    }
    Err(Error::TheoremViolation {
        what: "no colorful positive circuit through e".into(),
        instance: inst.dump(),
    })
}

/// Direct search for a convex certificate; needs `rank + 1` positive circuits.
pub fn find_rainbow_convex(chi: &Chirotope, circuits: &[SignVector]) -> Result<RainbowCertificate> {
    if circuits.len() != chi.rank() + 1 {
        return Err(Error::invalid(format!(
            "{} circuits given, expected rank + 1 = {}",
            circuits.len(),
            chi.rank() + 1
        )));
    }
    check_positive_circuits(chi, circuits)?;
    for c in positive_circuits(chi) {
        if let Some(assignment) = match_support(c.support_mask(), circuits) {
            return Ok(RainbowCertificate {
                circuit: c,
                assignment,
            });
        }
    }
    let cs: Vec<String> = circuits.iter().map(ToString::to_string).collect();
    Err(Error::TheoremViolation {
        what: "no colorful positive circuit".into(),
        instance: format!("chi={:?} circuits=[{}]", chi.to_string(), cs.join(",")),
    })
}

/// Order complex of `𝒱⁺_{e,h}` (positive vectors of height `1..=h` all of
/// whose circuits contain `e`); `e` is 0-based.
pub fn eh_order_complex(
    chi: &Chirotope,
    e: usize,
    h: usize,
    limits: &Limits,
) -> Result<SimplicialComplex<SignVector>> {
    let members = crate::om::positive_vectors_eh(chi, e, h, limits)?;
    vector_order_complex(members, limits)
}

fn vector_order_complex(
    members: Vec<SignVector>,
    limits: &Limits,
) -> Result<SimplicialComplex<SignVector>> {
    let poset = Poset::new(members, |a, b| a.conforms_unchecked(b))?;
    order_complex(&poset, None, limits)
}

/// The topological proof run on a realizable instance.
///
/// Elements of the `C_i` other than `e` get one parallel copy per circuit so
/// that the supports meet only in `e`; `K^I` is the order complex of the
/// positive vectors of height `1..=|I|` supported on `⋃_{i∈I} C_i`, all of
/// whose circuits contain `e`; `λ(X)` is the `i` maximizing
/// `|supp X ∩ supp C_i|`, smallest `i` on ties. The lowest vector of the
/// rainbow chain is the certificate circuit.
pub fn conic_pipeline(
    m: &RationalMatrix,
    e: usize,
    circuits: &[SignVector],
    limits: &Limits,
) -> Result<RainbowCertificate> {
    limits.check_n(m.cols())?;
    let chi = Chirotope::from_matrix(&m.row_basis())?;
    let inst = ConicInstance::new(chi, e, circuits.to_vec())?;
    if inst.chi.loops().contains(&e) {
        let circuit = SignVector::from_masks(inst.chi.n(), 1 << e, 0);
        let cert = RainbowCertificate {
            circuit,
            assignment: vec![],
        };
        cert.verify_conic(&inst.chi, e, circuits)?;
        return Ok(cert);
    }

    // column 0 of the extension is e; the rest are (original, color) copies
    let mut origin: Vec<(usize, usize)> = vec![(e, usize::MAX)];
    for (i, c) in circuits.iter().enumerate() {
        origin.extend(bits(c.support_mask() & !(1 << e)).map(|f| (f, i)));
    }
    let n2 = origin.len();
    if n2 > PIPELINE_MAX_EXTENDED {
        return Err(Error::LimitExceeded {
            what: "extended ground set size",
            value: n2,
            limit: PIPELINE_MAX_EXTENDED,
        });
    }
    let cols: Vec<usize> = origin.iter().map(|&(f, _)| f).collect();
    let chi2 = Chirotope::from_matrix(&m.select_columns(&cols).row_basis())?;
    let copies: Vec<u64> = (0..circuits.len())
        .map(|i| {
            1 | (1..n2)
                .filter(|&j| origin[j].1 == i)
                .fold(0, |acc, j| acc | 1 << j)
        })
        .collect();
    let pos2 = positive_circuits(&chi2);
    for (i, &mask) in copies.iter().enumerate() {
        if !pos2.contains(&SignVector::from_masks(n2, mask, 0)) {
            return Err(Error::Invariant(format!(
                "copy of C_{} is not a circuit of the extension",
                i + 1
            )));
        }
    }

    let wide = Limits {
        max_n: PIPELINE_MAX_EXTENDED,
        ..*limits
    };
    let poset = positive_vector_poset(&chi2, &wide)?;
    let r = circuits.len();
    let family = ComplexFamily::from_fn(r, |mask| {
        let within = bits(mask).fold(0u64, |acc, i| acc | copies[i]);
        let members = filter_eh(&poset, &pos2, 0, mask.count_ones() as usize, within);
        vector_order_complex(members, limits)
    })?;
    let label = |x: &SignVector| {
        let s = x.support_mask();
        (0..r)
            .max_by_key(|&i| ((s & copies[i]).count_ones(), std::cmp::Reverse(i)))
            .expect("at least one circuit")
    };
    let labeling = Labeling::from_fn(&family, label)?;
    let rainbow = find_rainbow_simplex(&family, &labeling, limits)?;
    let x1 = *rainbow
        .by_color
        .iter()
        .min_by_key(|x| x.support_size())
        .expect("non-empty chain");

    let mut pos = 0u64;
    let mut assignment = vec![];
    for j in bits(x1.support_mask()) {
        let (f, i) = origin[j];
        pos |= 1 << f;
        if j != 0 {
            assignment.push((f, i));
        }
    }
    assignment.sort_unstable();
    let cert = RainbowCertificate {
        circuit: SignVector::from_masks(inst.chi.n(), pos, 0),
        assignment,
    };
    cert.verify_conic(&inst.chi, e, circuits)?;
    Ok(cert)
}
