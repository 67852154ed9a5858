//! Tope transversals of uniform oriented matroids.
//!
//! For topes `T_1, …, T_k` the searches look for a tope `T̃` and an
//! assignment of elements to tope indices with `T̃(j) = T_{i}(j)` for every
//! assigned pair: a bijection when `k = n`, or a partition with prescribed
//! part sizes `n_i` when `k = rank`. Both reduce to bipartite matching per
//! candidate tope.
//!
//! The complexes `L^I` live in the simplotope `(σ^I)^n`: a cell is a box
//! `τ_1 × ⋯ × τ_n` (each `τ_j` a non-empty subset of `I`, stored as a color
//! mask) whose vertex tuples all lie in
//! `F^I = {(i_1, …, i_n) : (T_{i_1}(1), …, T_{i_n}(n)) is a covector}`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Limits, Result};
use crate::gf2::{self, SparseColumn};
use crate::matching::{capacitated_matching, saturating_matching};
use crate::om::{bits, covector_set_jj, topes, Chirotope, SignVector};
use crate::rainbow::{find_rainbow_simplex, ComplexFamily, Labeling};
use crate::simplicial::{order_complex, Poset, SimplicialComplex};

/// A cell of the simplotope: one color mask per element.
pub type SimplotopeBox = Vec<u32>;

/// Topes `T_1, …, T_k` of a chirotope, optionally with multiplicities.
#[derive(Clone, Debug)]
pub struct TopeCollection {
    pub chi: Chirotope,
    pub topes: Vec<SignVector>,
    pub mult: Option<Vec<usize>>,
    /// Every tope of `chi`, in canonical order.
    all_topes: Vec<SignVector>,
}

impl TopeCollection {
    /// Validates tope membership and multiplicities. Non-uniform chirotopes
    /// are rejected unless `force` is set.
    pub fn new(
        chi: Chirotope,
        topes_list: Vec<SignVector>,
        mult: Option<Vec<usize>>,
        force: bool,
        limits: &Limits,
    ) -> Result<TopeCollection> {
        if !force && !chi.is_uniform() {
            return Err(Error::invalid(
                "uniformity is required (rerun with force to search anyway)",
            ));
        }
        if topes_list.is_empty() {
            return Err(Error::invalid("no topes given"));
        }
        let all = topes(&chi, limits)?;
        for t in &topes_list {
            if t.len() != chi.n() {
                return Err(Error::LengthMismatch {
                    left: t.len(),
                    right: chi.n(),
                });
            }
            if !t.has_full_support() {
                return Err(Error::invalid(format!("{t} lacks full support")));
            }
            if all.binary_search(t).is_err() {
                return Err(Error::invalid(format!("{t} is not a tope")));
            }
        }
        if let Some(m) = &mult {
            if m.len() != topes_list.len() {
                return Err(Error::LengthMismatch {
                    left: m.len(),
                    right: topes_list.len(),
                });
            }
            if m.contains(&0) || m.iter().sum::<usize>() != chi.n() {
                return Err(Error::invalid(format!(
                    "multiplicities {m:?} must be positive and sum to {}",
                    chi.n()
                )));
            }
        }
        Ok(TopeCollection {
            chi,
            topes: topes_list,
            mult,
            all_topes: all,
        })
    }

    pub fn k(&self) -> usize {
        self.topes.len()
    }

    /// Every tope of the chirotope, in canonical order.
    pub fn all_topes(&self) -> &[SignVector] {
        &self.all_topes
    }

    fn dump(&self) -> String {
        let ts: Vec<String> = self.topes.iter().map(ToString::to_string).collect();
        format!(
            "chi={:?} topes=[{}] mult={:?}",
            self.chi.to_string(),
            ts.join(","),
            self.mult
        )
    }
}

/// A tope `T̃` with `assignment[j] = i` meaning `T̃(j) = T_i(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalCertificate {
    pub tope: SignVector,
    pub assignment: Vec<usize>,
}

impl fmt::Display for TransversalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self
            .assignment
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        write!(f, "{} [{}]", self.tope, idx.join(" "))
    }
}

impl TransversalCertificate {
    /// Independent re-check: tope membership, agreements, and either a
    /// bijection (no multiplicities) or part sizes equal to the multiplicities.
    pub fn verify(&self, tc: &TopeCollection) -> Result<()> {
        let n = tc.chi.n();
        if self.assignment.len() != n || self.tope.len() != n {
            return Err(Error::Invariant("certificate has the wrong length".into()));
        }
        if tc.all_topes.binary_search(&self.tope).is_err() {
            return Err(Error::Invariant(format!("{} is not a tope", self.tope)));
        }
        for (j, &i) in self.assignment.iter().enumerate() {
            if i >= tc.k() || tc.topes[i].get(j) != self.tope.get(j) {
                return Err(Error::Invariant(format!(
                    "element {} disagrees with T_{}",
                    j + 1,
                    i + 1
                )));
            }
        }
        let mut counts = vec![0usize; tc.k()];
        for &i in &self.assignment {
            counts[i] += 1;
        }
        let expected = tc.mult.clone().unwrap_or_else(|| vec![1; tc.k()]);
        if counts != expected {
            return Err(Error::Invariant(format!(
                "part sizes {counts:?}, expected {expected:?}"
            )));
        }
        Ok(())
    }
}

/// `T̃` candidates in canonical order (`+ < −`) with the agreement lists.
fn agreement_graph(tc: &TopeCollection, t: &SignVector) -> Vec<Vec<usize>> {
    (0..tc.chi.n())
        .map(|j| {
            (0..tc.k())
                .filter(|&i| tc.topes[i].get(j) == t.get(j))
                .collect()
        })
        .collect()
}

/// First tope (in canonical order) agreeing with each `T_i` on a distinct
/// element, or `None`. Needs `k = n`.
pub fn find_transversal(tc: &TopeCollection) -> Result<Option<TransversalCertificate>> {
    if tc.k() != tc.chi.n() {
        return Err(Error::invalid(format!(
            "{} topes given, expected n = {}",
            tc.k(),
            tc.chi.n()
        )));
    }
    for t in &tc.all_topes {
        if let Some(assignment) = saturating_matching(&agreement_graph(tc, t), tc.k()) {
            return Ok(Some(TransversalCertificate {
                tope: *t,
                assignment,
            }));
        }
    }
    Ok(None)
}

/// Elements on which all topes carry the same sign.
pub fn common_elements(topes_list: &[SignVector]) -> Vec<usize> {
    let Some(first) = topes_list.first() else {
        return vec![];
    };
    (0..first.len())
        .filter(|&j| topes_list.iter().all(|t| t.get(j) == first.get(j)))
        .collect()
}

/// Transversal search under the hypothesis that the topes share an element;
/// failure is a theorem violation.
pub fn verify_common_element(tc: &TopeCollection) -> Result<TransversalCertificate> {
    if !tc.chi.is_uniform() {
        return Err(Error::invalid("uniformity is required"));
    }
    if common_elements(&tc.topes).is_empty() {
        let detail: Vec<String> = (0..tc.chi.n())
            .map(|j| {
                let signs: String = tc.topes.iter().map(|t| t.get(j).to_char()).collect();
                format!("{}:{signs}", j + 1)
            })
            .collect();
        return Err(Error::invalid(format!(
            "topes disagree on every element ({})",
            detail.join(" ")
        )));
    }
    match find_transversal(tc)? {
        Some(cert) => {
            cert.verify(tc)?;
            Ok(cert)
        }
        None => Err(Error::TheoremViolation {
            what: "topes sharing an element have no transversal".into(),
            instance: tc.dump(),
        }),
    }
}

/// Tope with a partition `J_1 ∪ ⋯ ∪ J_k` of the elements, `|J_i| = n_i`,
/// agreeing with `T_i` on `J_i`. Needs `k = rank` and multiplicities.
pub fn find_partition_transversal(tc: &TopeCollection) -> Result<TransversalCertificate> {
    let Some(mult) = &tc.mult else {
        return Err(Error::invalid("multiplicities are required"));
    };
    if tc.k() != tc.chi.rank() {
        return Err(Error::invalid(format!(
            "{} topes given, the rank is {}",
            tc.k(),
            tc.chi.rank()
        )));
    }
    if !tc.chi.is_uniform() {
        return Err(Error::invalid("uniformity is required"));
    }
    for t in &tc.all_topes {
        if let Some(assignment) = capacitated_matching(&agreement_graph(tc, t), mult) {
            return Ok(TransversalCertificate {
                tope: *t,
                assignment,
            });
        }
    }
    Err(Error::TheoremViolation {
        what: "no partition transversal".into(),
        instance: tc.dump(),
    })
}

/// Covector test by orthogonality to every circuit.
fn is_covector(circuits: &[SignVector], x: &SignVector) -> bool {
    circuits.iter().all(|c| {
        let agree = (x.pos_mask() & c.pos_mask()) | (x.neg_mask() & c.neg_mask());
        let clash = (x.pos_mask() & c.neg_mask()) | (x.neg_mask() & c.pos_mask());
        (agree == 0) == (clash == 0)
    })
}

/// `(T_{i_1}(1), …, T_{i_n}(n))`.
pub fn composite(topes_list: &[SignVector], tuple: &[usize]) -> Result<SignVector> {
    let n = tuple.len();
    let mut x = SignVector::zero(n);
    for (j, &i) in tuple.iter().enumerate() {
        let t = topes_list
            .get(i)
            .ok_or_else(|| Error::invalid(format!("tope index {} out of range", i + 1)))?;
        if t.len() != n {
            return Err(Error::LengthMismatch {
                left: t.len(),
                right: n,
            });
        }
        x.set(j, t.get(j));
    }
    Ok(x)
}

/// Whether `tuple` (0-based tope indices) lies in `F^I`.
pub fn fi_member(chi: &Chirotope, topes_list: &[SignVector], tuple: &[usize]) -> Result<bool> {
    if tuple.len() != chi.n() {
        return Err(Error::LengthMismatch {
            left: tuple.len(),
            right: chi.n(),
        });
    }
    Ok(is_covector(&chi.circuits(), &composite(topes_list, tuple)?))
}

/// Cells of `L^I` up to dimension `max_dim`, grouped by dimension.
///
/// A box is a cell iff all of its vertices are in `F^I`, equivalently (for
/// dimension ≥ 1) iff all of its facets are cells; boxes are grown one
/// dimension at a time.
pub fn li_cells(
    chi: &Chirotope,
    topes_list: &[SignVector],
    mask: u64,
    max_dim: Option<usize>,
    limits: &Limits,
) -> Result<Vec<Vec<SimplotopeBox>>> {
    let n = chi.n();
    let colors: Vec<usize> = bits(mask).collect();
    if colors.is_empty() || colors.iter().any(|&i| i >= topes_list.len()) || colors.len() > 31 {
        return Err(Error::invalid(format!(
            "color set {mask:#b} does not index the topes"
        )));
    }
    let vertex_count = colors.len().checked_pow(n as u32).unwrap_or(usize::MAX);
    limits.check_faces(vertex_count)?;
    let circuits = chi.circuits();
    let mut level: Vec<SimplotopeBox> = vec![];
    let mut tuple = vec![0usize; n];
    for code in 0..vertex_count {
        let mut c = code;
        for slot in tuple.iter_mut() {
            *slot = colors[c % colors.len()];
            c /= colors.len();
        }
        if is_covector(&circuits, &composite(topes_list, &tuple)?) {
            level.push(tuple.iter().map(|&i| 1u32 << i).collect());
        }
    }
    level.sort_unstable();
    let top = max_dim.unwrap_or(n * (colors.len() - 1));
    let mut total = level.len();
    let mut cells = vec![level];
    for _ in 0..top {
        let prev: HashSet<&SimplotopeBox> = cells.last().expect("level").iter().collect();
        let mut next: BTreeSet<SimplotopeBox> = BTreeSet::new();
        for b in cells.last().expect("level") {
            for j in 0..n {
                for &c in &colors {
                    if b[j] >> c & 1 == 1 {
                        continue;
                    }
                    let mut grown = b.clone();
                    grown[j] |= 1 << c;
                    if !next.contains(&grown) && box_facets(&grown).all(|f| prev.contains(&f)) {
                        next.insert(grown);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        limits.check_faces(total)?;
        cells.push(next.into_iter().collect());
    }
    Ok(cells)
}

/// Dimension of a box: `Σ (|τ_j| − 1)`.
pub fn box_dim(b: &[u32]) -> usize {
    b.iter().map(|m| m.count_ones() as usize - 1).sum()
}

/// Facets of a box: drop one color from one coordinate with at least two.
fn box_facets(b: &[u32]) -> impl Iterator<Item = SimplotopeBox> + '_ {
    (0..b.len())
        .filter(|&j| b[j].count_ones() >= 2)
        .flat_map(move |j| {
            bits(b[j] as u64).map(move |c| {
                let mut f = b.to_vec();
                f[j] &= !(1 << c);
                f
            })
        })
}

/// Order complex of the face poset of the cells of `L^I` of dimension at
/// most `max_dim`; this is the barycentric subdivision of that skeleton.
pub fn build_li(
    chi: &Chirotope,
    topes_list: &[SignVector],
    mask: u64,
    max_dim: Option<usize>,
    limits: &Limits,
) -> Result<SimplicialComplex<SimplotopeBox>> {
    let cells: Vec<SimplotopeBox> = li_cells(chi, topes_list, mask, max_dim, limits)?
        .into_iter()
        .flatten()
        .collect();
    order_complex(&box_poset(cells), None, limits)
}

fn box_poset(cells: Vec<SimplotopeBox>) -> Poset<SimplotopeBox> {
    let up: Vec<Vec<u32>> = cells
        .iter()
        .map(|a| {
            (0..cells.len() as u32)
                .filter(|&j| {
                    let b = &cells[j as usize];
                    a != b && a.iter().zip(b).all(|(x, y)| x & !y == 0)
                })
                .collect()
        })
        .collect();
    Poset::from_strict_up(cells, up)
}

/// Reduced Z₂ Betti numbers (`q = −1, 0, …`) of `L^I` from its cellular
/// chain complex, where `∂(τ_1 × ⋯ × τ_n) = Σ_j τ_1 × ⋯ × ∂τ_j × ⋯ × τ_n`.
pub fn li_cellular_betti(
    chi: &Chirotope,
    topes_list: &[SignVector],
    mask: u64,
    limits: &Limits,
) -> Result<Vec<usize>> {
    let cells = li_cells(chi, topes_list, mask, None, limits)?;
    let index: Vec<HashMap<&SimplotopeBox, u32>> = cells
        .iter()
        .map(|lvl| lvl.iter().enumerate().map(|(i, b)| (b, i as u32)).collect())
        .collect();
    let mut ranks = vec![0usize; cells.len() + 2];
    // ranks[q + 1] = rank of ∂_q for q = 0..=top
    ranks[1] = usize::from(!cells[0].is_empty());
    for q in 1..cells.len() {
        let cols: Vec<SparseColumn> = cells[q]
            .iter()
            .map(|b| {
                let mut col: SparseColumn = box_facets(b).map(|f| index[q - 1][&f]).collect();
                col.sort_unstable();
                col
            })
            .collect();
        ranks[q + 1] = gf2::rank(cols);
    }
    let mut betti = vec![1 - ranks[1]];
    for q in 0..cells.len() {
        betti.push(cells[q].len() - ranks[q + 1] - ranks[q + 2]);
    }
    Ok(betti)
}

/// Order complex of `𝓛_{J⁺,J⁻}` (0-based element masks).
pub fn jj_order_complex(
    chi: &Chirotope,
    jplus: u64,
    jminus: u64,
    limits: &Limits,
) -> Result<SimplicialComplex<SignVector>> {
    let members = covector_set_jj(chi, jplus, jminus, limits)?;
    let poset = Poset::new(members, |a, b| a.conforms_unchecked(b))?;
    order_complex(&poset, None, limits)
}

/// Largest `n` accepted by the pipeline without multiplicities, and largest
/// `k` with them. At `n = 4` the top complex has close to a million faces,
/// above the default face limit.
pub const PIPELINE_MAX_N: usize = 4;
pub const PIPELINE_MAX_K: usize = 3;

/// The topological proof run end to end.
///
/// `K^I` is the barycentric subdivision of the `(|I|−1)`-skeleton of `L^I`.
/// A box is labeled by the smallest `i` having a coordinate `τ_j = {i}`
/// (at least `n_i` such coordinates when multiplicities are given). The
/// lowest box of the rainbow chain is a vertex `(i_1, …, i_n)` of `F^{[k]}`,
/// which is read off as the certificate.
pub fn transversal_pipeline(
    tc: &TopeCollection,
    limits: &Limits,
) -> Result<TransversalCertificate> {
    let k = tc.k();
    match &tc.mult {
        None if tc.chi.n() > PIPELINE_MAX_N || k != tc.chi.n() => {
            return Err(Error::invalid(format!(
                "the pipeline needs k = n <= {PIPELINE_MAX_N} without multiplicities"
            )))
        }
        Some(_) if k > PIPELINE_MAX_K || k != tc.chi.rank() => {
            return Err(Error::invalid(format!(
                "the pipeline needs k = rank <= {PIPELINE_MAX_K} with multiplicities"
            )))
        }
        _ => {}
    }
    if !tc.chi.is_uniform() {
        return Err(Error::invalid("uniformity is required"));
    }
    // without a shared element L^I is only (rank−2)-connected
    if tc.mult.is_none() && common_elements(&tc.topes).is_empty() {
        return Err(Error::invalid("the topes share no element"));
    }
    let family = ComplexFamily::from_fn(k, |mask| {
        if mask == 0 {
            return Ok(SimplicialComplex::empty());
        }
        build_li(
            &tc.chi,
            &tc.topes,
            mask,
            Some(mask.count_ones() as usize - 1),
            limits,
        )
    })?;
    let need = tc.mult.clone().unwrap_or_else(|| vec![1; k]);
    let label = |b: &SimplotopeBox| {
        (0..k)
            .find(|&i| b.iter().filter(|&&m| m == 1 << i).count() >= need[i])
            .unwrap_or(usize::MAX)
    };
    if let Some(b) = family
        .top()
        .vertices()
        .iter()
        .find(|b| label(b) == usize::MAX)
    {
        return Err(Error::Invariant(format!("box {b:?} has no label")));
    }
    let labeling = Labeling::from_fn(&family, label)?;
    let rainbow = find_rainbow_simplex(&family, &labeling, limits)?;
    let lowest = rainbow
        .by_color
        .iter()
        .min_by_key(|b| box_dim(b))
        .expect("non-empty chain");
    if box_dim(lowest) != 0 {
        return Err(Error::Invariant(
            "lowest box of the rainbow chain is not a vertex".into(),
        ));
    }
    let assignment: Vec<usize> = lowest.iter().map(|m| m.trailing_zeros() as usize).collect();
    let cert = TransversalCertificate {
        tope: composite(&tc.topes, &assignment)?,
        assignment,
    };
    cert.verify(tc)?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::{RationalMatrix, Sign};
    use crate::simplicial::reduced_betti_numbers;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn sample_topes() -> Vec<SignVector> {
        vec![sv("+++----+"), sv("--++++--"), sv("+---++++")]
    }

    #[test]
    fn sample_tuple_membership() {
        let chi = Chirotope::alternating(8, 3).unwrap();
        let ts = sample_topes();
        let tuple = [1, 2, 2, 0, 1, 2, 0, 1];
        assert_eq!(composite(&ts, &tuple).unwrap(), sv("----++--"));
        assert!(fi_member(&chi, &ts, &tuple).unwrap());
        for i in 0..3 {
            assert!(fi_member(&chi, &ts, &[i; 8]).unwrap());
        }
        assert!(fi_member(&chi, &ts, &[0, 0, 0, 0, 0, 0, 0, 9]).is_err());
    }

    #[test]
    fn covector_test_matches_enumeration() {
        for chi in [
            Chirotope::alternating(5, 2).unwrap(),
            Chirotope::alternating(5, 3).unwrap(),
            Chirotope::from_matrix(
                &RationalMatrix::from_rows(&[vec![1, 1, 1, 0], vec![0, 0, 0, 1]]).unwrap(),
            )
            .unwrap(),
        ] {
            let circuits = chi.circuits();
            let cov: HashSet<SignVector> = crate::om::covectors(&chi, &lim())
                .unwrap()
                .into_iter()
                .collect();
            let n = chi.n();
            for code in 0..3usize.pow(n as u32) {
                let mut x = SignVector::zero(n);
                let mut c = code;
                for j in 0..n {
                    x.set(j, [Sign::Zero, Sign::Plus, Sign::Minus][c % 3]);
                    c /= 3;
                }
                assert_eq!(is_covector(&circuits, &x), cov.contains(&x), "{x}");
            }
        }
    }

    #[test]
    fn counterexample_has_no_transversal() {
        let m = RationalMatrix::from_rows(&[vec![1, 1, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        let chi = Chirotope::from_matrix(&m).unwrap();
        let ts = vec![sv("++++"), sv("++++"), sv("---+"), sv("---+")];
        assert!(TopeCollection::new(chi.clone(), ts.clone(), None, false, &lim()).is_err());
        let tc = TopeCollection::new(chi, ts, None, true, &lim()).unwrap();
        assert_eq!(find_transversal(&tc).unwrap(), None);
    }

    #[test]
    fn rank_one_counterexample() {
        let chi = Chirotope::alternating(3, 1).unwrap();
        let ts = vec![sv("+++"), sv("---"), sv("+++")];
        let tc = TopeCollection::new(chi, ts, None, false, &lim()).unwrap();
        assert_eq!(find_transversal(&tc).unwrap(), None);
        assert!(verify_common_element(&tc).is_err());
    }

    #[test]
    fn identical_topes() {
        let chi = Chirotope::alternating(3, 2).unwrap();
        let t = sv("++-");
        let tc = TopeCollection::new(chi, vec![t; 3], None, false, &lim()).unwrap();
        let cert = verify_common_element(&tc).unwrap();
        assert_eq!(cert.tope, t);
        cert.verify(&tc).unwrap();
        let piped = transversal_pipeline(&tc, &lim()).unwrap();
        assert_eq!(piped.tope, t);
    }

    #[test]
    fn common_element_rank_two() {
        let chi = Chirotope::alternating(4, 2).unwrap();
        let all = topes(&chi, &lim()).unwrap();
        let last_plus: Vec<SignVector> = all
            .iter()
            .copied()
            .filter(|t| t.get(3) == Sign::Plus)
            .collect();
        for a in &last_plus {
            for b in &last_plus {
                let ts = vec![*a, *b, *b, *a];
                assert!(common_elements(&ts).contains(&3));
                let tc = TopeCollection::new(chi.clone(), ts, None, false, &lim()).unwrap();
                verify_common_element(&tc).unwrap().verify(&tc).unwrap();
            }
        }
        let tc = TopeCollection::new(
            chi,
            vec![all[0], -all[0], all[0], all[0]],
            None,
            false,
            &lim(),
        )
        .unwrap();
        assert!(matches!(
            verify_common_element(&tc),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn partition_transversal() {
        let chi = Chirotope::alternating(6, 3).unwrap();
        let ts = vec![sv("+++---"), sv("--++++"), sv("+-----")];
        let tc = TopeCollection::new(chi, ts, Some(vec![2, 2, 2]), false, &lim()).unwrap();
        let cert = find_partition_transversal(&tc).unwrap();
        cert.verify(&tc).unwrap();
        let t = sv("+--+++");
        let tc = TopeCollection::new(
            Chirotope::alternating(6, 3).unwrap(),
            vec![t; 3],
            Some(vec![1, 2, 3]),
            false,
            &lim(),
        )
        .unwrap();
        let cert = find_partition_transversal(&tc).unwrap();
        assert_eq!(cert.tope, t);
    }

    #[test]
    fn li_single_color_is_a_point() {
        let chi = Chirotope::alternating(4, 2).unwrap();
        let ts = vec![sv("++--"), sv("+-++")];
        let k = build_li(&chi, &ts, 0b01, None, &lim()).unwrap();
        assert_eq!((k.dim(), k.faces(0).len()), (0, 1));
        assert_eq!(
            li_cellular_betti(&chi, &ts, 0b01, &lim()).unwrap(),
            vec![0, 0]
        );
    }

    #[test]
    fn cellular_and_simplicial_homology_agree() {
        for (chi, mask) in [
            (Chirotope::alternating(4, 2).unwrap(), 0b011u64),
            (Chirotope::alternating(3, 2).unwrap(), 0b111),
        ] {
            let all = topes(&chi, &lim()).unwrap();
            for a in 0..all.len() {
                for b in a + 1..all.len() {
                    let ts = vec![all[a], all[b], all[(a + b) % all.len()]];
                    {
                        let cell = li_cellular_betti(&chi, &ts, mask, &lim()).unwrap();
                        let simp = reduced_betti_numbers(
                            &build_li(&chi, &ts, mask, None, &lim()).unwrap(),
                            &lim(),
                        )
                        .unwrap();
                        let pad = |mut v: Vec<usize>| {
                            while v.last() == Some(&0) {
                                v.pop();
                            }
                            v
                        };
                        assert_eq!(pad(cell), pad(simp), "topes {ts:?} mask {mask:b}");
                    }
                }
            }
        }
    }

    #[test]
    fn li_connectivity_rank_two() {
        let chi = Chirotope::alternating(4, 2).unwrap();
        let all = topes(&chi, &lim()).unwrap();
        for a in &all {
            for b in &all {
                let betti = li_cellular_betti(&chi, &[*a, *b], 0b11, &lim()).unwrap();
                assert_eq!(&betti[..2], &[0, 0], "{a} {b}");
                if !common_elements(&[*a, *b]).is_empty() {
                    assert!(betti.iter().all(|&x| x == 0));
                }
            }
        }
    }

    #[test]
    fn pipeline_rank_two_n3() {
        let chi = Chirotope::alternating(3, 2).unwrap();
        let ts = vec![sv("+--"), sv("--+"), sv("++-")];
        let tc = TopeCollection::new(chi.clone(), ts, None, false, &lim()).unwrap();
        assert!(transversal_pipeline(&tc, &lim()).is_err());
        let ts = vec![sv("+--"), sv("---"), sv("++-")];
        let tc = TopeCollection::new(chi, ts, None, false, &lim()).unwrap();
        let direct = find_transversal(&tc).unwrap().unwrap();
        direct.verify(&tc).unwrap();
        let piped = transversal_pipeline(&tc, &lim()).unwrap();
        piped.verify(&tc).unwrap();
    }

    #[test]
    fn pipeline_n4() {
        let chi = Chirotope::alternating(4, 3).unwrap();
        let ts = vec![sv("+-++"), sv("--++"), sv("++-+"), sv("---+")];
        let tc = TopeCollection::new(chi, ts, None, false, &lim()).unwrap();
        // K^[4] has 884130 faces
        let wide = Limits {
            max_faces: 2_000_000,
            ..Limits::default()
        };
        let piped = transversal_pipeline(&tc, &wide).unwrap();
        piped.verify(&tc).unwrap();
    }

    #[test]
    fn pipeline_with_multiplicities() {
        let chi = Chirotope::alternating(4, 2).unwrap();
        let ts = vec![sv("++--"), sv("-+++")];
        let tc = TopeCollection::new(chi, ts, Some(vec![2, 2]), false, &lim()).unwrap();
        let piped = transversal_pipeline(&tc, &lim()).unwrap();
        piped.verify(&tc).unwrap();
    }

    #[test]
    fn jj_sphere_and_ball() {
        let chi = Chirotope::alternating(4, 2).unwrap();
        let sphere = jj_order_complex(&chi, 0, 0, &lim()).unwrap();
        assert_eq!(
            reduced_betti_numbers(&sphere, &lim()).unwrap(),
            vec![0, 0, 1]
        );
        let ball = jj_order_complex(&chi, 0b0001, 0b0100, &lim()).unwrap();
        assert!(reduced_betti_numbers(&ball, &lim())
            .unwrap()
            .iter()
            .all(|&b| b == 0));
    }
}
