use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Limits, Result};

/// A face as sorted indices into the vertex list of its complex.
pub type Face = Vec<u32>;

/// A finite abstract simplicial complex.
///
/// Vertices are kept sorted; faces are stored per dimension as sorted index
/// tuples, each dimension sorted lexicographically. The empty face is
/// implicit and never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex<V> {
    vertices: Vec<V>,
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, u32>>,
}

impl<V: Ord + Clone + Hash> SimplicialComplex<V> {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: vec![],
            faces: vec![],
            index: vec![],
        }
    }

    /// Downward closure of the given faces. Repeated vertices inside a face
    /// are collapsed; empty faces are ignored.
    pub fn from_faces<I, F>(faces: I, limits: &Limits) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = V>,
    {
        let generators: Vec<BTreeSet<V>> = faces
            .into_iter()
            .map(|f| f.into_iter().collect::<BTreeSet<V>>())
            .filter(|f| !f.is_empty())
            .collect();
        let vertices: Vec<V> = generators
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<V>>()
            .into_iter()
            .collect();
        let lookup: HashMap<&V, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i as u32))
            .collect();
        let top = generators.iter().map(BTreeSet::len).max().unwrap_or(0);
        let mut levels: Vec<HashSet<Face>> = vec![HashSet::new(); top];
        for g in &generators {
            let face: Face = g.iter().map(|v| lookup[v]).collect();
            levels[face.len() - 1].insert(face);
        }
        let mut total = 0;
        for d in (1..top).rev() {
            let facets: Vec<Face> = levels[d].iter().flat_map(|f| facets_of(f)).collect();
            levels[d - 1].extend(facets);
            total += levels[d].len();
            limits.check_faces(total)?;
        }
        if top > 0 {
            total += levels[0].len();
            limits.check_faces(total)?;
        }
        let faces = levels
            .into_iter()
            .map(|set| {
                let mut v: Vec<Face> = set.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        Ok(Self::from_sorted_parts(vertices, faces))
    }

    /// Assemble from sorted vertices and per-dimension faces that are already
    /// sorted and downward closed.
    pub(crate) fn from_sorted_parts(vertices: Vec<V>, mut faces: Vec<Vec<Face>>) -> Self {
        while faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        let index = faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (f.clone(), i as u32))
                    .collect()
            })
            .collect();
        SimplicialComplex {
            vertices,
            faces,
            index,
        }
    }

    /// The full simplex on the given vertex set.
    pub fn full_simplex<I: IntoIterator<Item = V>>(vertices: I, limits: &Limits) -> Result<Self> {
        let vs: Vec<V> = vertices.into_iter().collect();
        if vs.is_empty() {
            return Ok(Self::empty());
        }
        Self::from_faces([vs], limits)
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &V) -> Option<u32> {
        self.vertices.binary_search(v).ok().map(|i| i as u32)
    }

    /// Dimension, with −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces of dimension `d` (empty beyond the top dimension).
    pub fn faces(&self, d: usize) -> &[Face] {
        self.faces.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Position of `face` within `faces(face.len() - 1)`.
    pub fn face_position(&self, face: &[u32]) -> Option<u32> {
        if face.is_empty() {
            return None;
        }
        self.index.get(face.len() - 1)?.get(face).copied()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        face.is_empty() || self.face_position(face).is_some()
    }

    /// Whether the face with these vertex values is present.
    pub fn contains_vertex_set(&self, vs: &[V]) -> bool {
        let mut face: Face = match vs.iter().map(|v| self.vertex_index(v)).collect() {
            Some(f) => f,
            None => return false,
        };
        face.sort_unstable();
        face.dedup();
        self.contains_face(&face)
    }

    pub fn face_vertices(&self, face: &[u32]) -> Vec<V> {
        face.iter()
            .map(|&i| self.vertices[i as usize].clone())
            .collect()
    }

    /// Faces not contained in any larger face.
    pub fn maximal_faces(&self) -> Vec<Face> {
        let mut out = vec![];
        for d in 0..self.faces.len() {
            let covered: HashSet<Face> = self
                .faces
                .get(d + 1)
                .map(|up| up.iter().flat_map(|f| facets_of(f)).collect())
                .unwrap_or_default();
            out.extend(
                self.faces[d]
                    .iter()
                    .filter(|f| !covered.contains(*f))
                    .cloned(),
            );
        }
        out
    }

    /// Every face of `self` (by vertex values) is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex<V>) -> bool {
        self.faces
            .iter()
            .flatten()
            .all(|f| other.contains_vertex_set(&self.face_vertices(f)))
    }

    /// Subcomplex spanned by the faces whose vertices all satisfy `keep`.
    pub fn induced<P: Fn(&V) -> bool>(&self, keep: P) -> Self {
        let kept: Vec<bool> = self.vertices.iter().map(&keep).collect();
        let old_to_new: Vec<Option<u32>> = {
            let mut next = 0;
            kept.iter()
                .map(|&k| {
                    k.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let vertices = self
            .vertices
            .iter()
            .zip(&kept)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .filter_map(|f| {
                        f.iter()
                            .map(|&i| old_to_new[i as usize])
                            .collect::<Option<Face>>()
                    })
                    .collect()
            })
            .collect();
        Self::from_sorted_parts(vertices, faces)
    }

    /// Faces of dimension at most `d`.
    pub fn skeleton(&self, d: isize) -> Self {
        if d < 0 {
            return Self::empty();
        }
        let faces: Vec<Vec<Face>> = self.faces.iter().take(d as usize + 1).cloned().collect();
        Self::from_sorted_parts(self.vertices.clone(), faces)
    }
}

/// Codimension-one faces of a sorted face.
pub(crate) fn facets_of(face: &[u32]) -> impl Iterator<Item = Face> + '_ {
    (0..face.len()).map(move |skip| {
        face.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
}

impl<V: fmt::Debug> fmt::Debug for SimplicialComplex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.faces.iter().map(Vec::len).collect();
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices)
            .field("f_vector", &counts)
            .finish()
    }
}

/// A Z₂ chain of one dimension: a set of faces (index tuples) of size
/// `dim + 1`. The (−1)-chain `1` is the set holding the empty face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Z2Chain {
    dim: isize,
    simplices: BTreeSet<Face>,
}

impl Z2Chain {
    pub fn zero(dim: isize) -> Z2Chain {
        assert!(dim >= -1, "chains live in dimension -1 or above");
        Z2Chain {
            dim,
            simplices: BTreeSet::new(),
        }
    }

    /// The (−1)-chain with coefficient 1.
    pub fn unit() -> Z2Chain {
        Z2Chain {
            dim: -1,
            simplices: BTreeSet::from([vec![]]),
        }
    }

    /// Sum of the given faces; a face listed twice cancels.
    pub fn from_faces<I: IntoIterator<Item = Face>>(dim: isize, faces: I) -> Result<Z2Chain> {
        let mut c = Z2Chain::zero(dim);
        for mut f in faces {
            f.sort_unstable();
            if f.len() as isize != dim + 1 || f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("face {f:?} is not a {dim}-simplex")));
            }
            c.toggle(f);
        }
        Ok(c)
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Face> {
        self.simplices.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, face: &[u32]) -> bool {
        self.simplices.contains(face)
    }

    pub(crate) fn toggle(&mut self, face: Face) {
        if !self.simplices.remove(&face) {
            self.simplices.insert(face);
        }
    }

    pub fn add(&self, other: &Z2Chain) -> Result<Z2Chain> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Z2Chain) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::invalid(format!(
                "cannot add chains of dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        for f in &other.simplices {
            self.toggle(f.clone());
        }
        Ok(())
    }
}

impl fmt::Debug for Z2Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z2Chain[{}]{:?}", self.dim, self.simplices)
    }
}

/// Boundary of a chain supported by `k`; a 0-chain maps to its vertex count
/// mod 2 as a (−1)-chain.
pub fn boundary<V: Ord + Clone + Hash>(c: &Z2Chain, k: &SimplicialComplex<V>) -> Result<Z2Chain> {
    if c.dim < 0 {
        return Err(Error::invalid(
            "the boundary is not defined below dimension 0",
        ));
    }
    let mut out = Z2Chain::zero(c.dim - 1);
    for f in &c.simplices {
        if !k.contains_face(f) {
            return Err(Error::invalid(format!(
                "simplex {f:?} is not a face of the complex"
            )));
        }
        for g in facets_of(f) {
            out.toggle(g);
        }
    }
    Ok(out)
}

/// Parse the `.cpx` text format: one face per line as whitespace-separated
/// vertex tokens, `#` comment lines, blank lines ignored.
pub fn parse_cpx(text: &str, limits: &Limits) -> Result<SimplicialComplex<String>> {
    let faces = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(str::to_owned).collect::<Vec<_>>());
    SimplicialComplex::from_faces(faces, limits)
}

/// Render the maximal faces in `.cpx` form.
pub fn to_cpx<V: Ord + Clone + Hash + fmt::Display>(k: &SimplicialComplex<V>) -> String {
    let mut out = String::new();
    for f in k.maximal_faces() {
        let tokens: Vec<String> = k
            .face_vertices(&f)
            .iter()
            .map(ToString::to_string)
            .collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}
