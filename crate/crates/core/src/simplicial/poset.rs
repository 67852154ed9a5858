use std::hash::Hash;

use super::complex::{facets_of, Face, SimplicialComplex};
use crate::error::{Error, Limits, Result};

/// A finite poset stored as strict up-sets (`up[i]` = indices `j` with `i < j`).
#[derive(Clone, Debug)]
pub struct Poset<T> {
    elements: Vec<T>,
    up: Vec<Vec<u32>>,
}

impl<T: Clone> Poset<T> {
    /// Build from a comparison oracle `le(a, b)` meaning `a ≤ b`. The oracle
    /// is checked exhaustively for reflexivity, antisymmetry and transitivity.
    pub fn new<F: Fn(&T, &T) -> bool>(elements: Vec<T>, le: F) -> Result<Poset<T>> {
        let n = elements.len();
        let words = n.div_ceil(64);
        let mut below: Vec<Vec<u64>> = vec![vec![0; words]; n];
        for i in 0..n {
            if !le(&elements[i], &elements[i]) {
                return Err(Error::invalid(format!(
                    "relation is not reflexive at element {i}"
                )));
            }
            for j in 0..n {
                if i != j && le(&elements[i], &elements[j]) {
                    below[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let test = |row: &Vec<u64>, j: usize| row[j / 64] >> (j % 64) & 1 == 1;
        let mut up = vec![vec![]; n];
        for i in 0..n {
            for j in 0..n {
                if !test(&below[i], j) {
                    continue;
                }
                if test(&below[j], i) {
                    return Err(Error::invalid(format!(
                        "relation is not antisymmetric on {i}, {j}"
                    )));
                }
                if below[j].iter().zip(&below[i]).any(|(bj, bi)| bj & !bi != 0) {
                    return Err(Error::invalid(format!(
                        "relation is not transitive through {i} < {j}"
                    )));
                }
                up[i].push(j as u32);
            }
        }
        Ok(Poset { elements, up })
    }

    /// Trusted constructor; `up` must be the strict up-sets of a partial order.
    pub(crate) fn from_strict_up(elements: Vec<T>, up: Vec<Vec<u32>>) -> Poset<T> {
        Poset { elements, up }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.up[i].binary_search(&(j as u32)).is_ok()
    }

    pub fn strict_up(&self, i: usize) -> &[u32] {
        &self.up[i]
    }
}

/// The simplicial complex of chains of `p`, optionally truncated to chains of
/// dimension at most `max_dim`.
pub fn order_complex<T: Ord + Clone + Hash>(
    p: &Poset<T>,
    max_dim: Option<usize>,
    limits: &Limits,
) -> Result<SimplicialComplex<T>> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p.elements[a].cmp(&p.elements[b]));
    if order
        .windows(2)
        .any(|w| p.elements[w[0]] == p.elements[w[1]])
    {
        return Err(Error::invalid("poset elements must be distinct"));
    }
    let mut vertex_of = vec![0u32; p.len()];
    for (v, &e) in order.iter().enumerate() {
        vertex_of[e] = v as u32;
    }
    let cap = max_dim.map_or(usize::MAX, |d| d + 1);
    let mut levels: Vec<Vec<Face>> = vec![];
    let mut total = 0usize;
    let mut chain: Vec<usize> = vec![];
    for start in 0..p.len() {
        chain.push(start);
        extend_chains(
            p,
            &vertex_of,
            cap,
            &mut chain,
            &mut levels,
            &mut total,
            limits,
        )?;
        chain.pop();
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    let vertices = order.iter().map(|&e| p.elements[e].clone()).collect();
    Ok(SimplicialComplex::from_sorted_parts(vertices, levels))
}

fn extend_chains<T>(
    p: &Poset<T>,
    vertex_of: &[u32],
    cap: usize,
    chain: &mut Vec<usize>,
    levels: &mut Vec<Vec<Face>>,
    total: &mut usize,
    limits: &Limits,
) -> Result<()> {
    let mut face: Face = chain.iter().map(|&e| vertex_of[e]).collect();
    face.sort_unstable();
    if levels.len() < chain.len() {
        levels.resize(chain.len(), vec![]);
    }
    levels[chain.len() - 1].push(face);
    *total += 1;
    limits.check_faces(*total)?;
    if chain.len() == cap {
        return Ok(());
    }
    let last = *chain.last().expect("non-empty chain");
    for &next in &p.up[last] {
        chain.push(next as usize);
        extend_chains(p, vertex_of, cap, chain, levels, total, limits)?;
        chain.pop();
    }
    Ok(())
}

/// Face poset of `k` (empty face excluded), ordered by inclusion; elements
/// are the faces as sorted vertex tuples.
pub fn face_poset<V: Ord + Clone + Hash>(k: &SimplicialComplex<V>) -> Poset<Vec<V>> {
    let dims = (k.dim() + 1) as usize;
    let mut offset = vec![0usize; dims + 1];
    for d in 0..dims {
        offset[d + 1] = offset[d] + k.faces(d).len();
    }
    let id = |f: &[u32]| offset[f.len() - 1] + k.face_position(f).expect("closed") as usize;
    let mut up: Vec<Vec<u32>> = vec![vec![]; offset[dims]];
    for d in (1..dims).rev() {
        for g in k.faces(d) {
            let gid = id(g);
            let mut inherited = up[gid].clone();
            inherited.push(gid as u32);
            for h in facets_of(g) {
                up[id(&h)].extend_from_slice(&inherited);
            }
        }
        for h in k.faces(d - 1) {
            let list = &mut up[id(h)];
            list.sort_unstable();
            list.dedup();
        }
    }
    let elements = (0..dims)
        .flat_map(|d| k.faces(d).iter().map(|f| k.face_vertices(f)))
        .collect();
    Poset::from_strict_up(elements, up)
}

/// Order complex of the face poset; vertices are the faces of `k`.
pub fn barycentric_subdivision<V: Ord + Clone + Hash>(
    k: &SimplicialComplex<V>,
    limits: &Limits,
) -> Result<SimplicialComplex<Vec<V>>> {
    order_complex(&face_poset(k), None, limits)
}
