//! Rainbow simplices from monotone families of homologically connected
//! complexes.
//!
//! Given complexes `K^I` (one per color set `I ⊆ [k]`, monotone in `I`) with
//! `K^I` homologically `(|I|−2)`-connected, and a labeling `λ` of the vertices
//! of `K^{[k]}` with `λ(v) ∈ I` whenever `v ∈ K^I`, some `(k−1)`-face of
//! `K^{[k]}` receives all `k` labels. The engine builds chains `c^I` with
//! `∂c^I = Σ_{i∈I} c^{I∖i}` and reads the rainbow face off the support of
//! `c^{[k]}`. Sperner's lemma and Meshulam's lemma are the two standard
//! special cases, exposed as [`sperner_family`] and [`meshulam_family`].
//!
//! Colors are `0..k` in the API and `1..=k` in files and messages.

mod engine;
mod family;
mod wrappers;

pub use engine::{
    build_chain_family, find_rainbow_simplex, rainbow_from_chains, ChainFamily, RainbowSimplex,
};
pub use family::{colors_of, ComplexFamily, Labeling};
pub use wrappers::{
    family_file_name, iterated_subdivision, meshulam_family, parse_labels, read_family_dir,
    sperner_family, write_family_dir, Triangulation,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{Error, Limits};
    use crate::simplicial::SimplicialComplex;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lim() -> Limits {
        Limits::default()
    }

    /// Every top-dimensional face of `t` that carries all labels.
    fn rainbow_scan(t: &SimplicialComplex<u32>, labels: &[usize], k: usize) -> usize {
        t.faces(k - 1)
            .iter()
            .filter(|f| {
                let mut seen: Vec<usize> = f.iter().map(|&v| labels[v as usize]).collect();
                seen.sort_unstable();
                seen.dedup();
                seen.len() == k
            })
            .count()
    }

    #[test]
    fn single_color() {
        let k = SimplicialComplex::from_faces([[7u8], [9]], &lim()).unwrap();
        let fam = ComplexFamily::new(1, vec![SimplicialComplex::empty(), k]).unwrap();
        let chains = build_chain_family(&fam, &lim()).unwrap();
        chains.verify(&fam).unwrap();
        let lab = Labeling::from_fn(&fam, |_| 0).unwrap();
        assert_eq!(
            find_rainbow_simplex(&fam, &lab, &lim()).unwrap().by_color,
            vec![7]
        );
    }

    #[test]
    fn induced_full_simplex_gives_the_simplex() {
        let simplex = SimplicialComplex::full_simplex(0..4usize, &lim()).unwrap();
        let fam = meshulam_family(&simplex, |&v| v, 4).unwrap();
        let chains = build_chain_family(&fam, &lim()).unwrap();
        chains.verify(&fam).unwrap();
        for mask in 1..16u64 {
            let c = chains.chain(mask);
            assert_eq!(c.simplices().count(), 1);
            let face: Vec<u32> = crate::om::bits(mask).map(|i| i as u32).collect();
            assert!(c.contains(&face));
        }
    }

    #[test]
    fn sperner_on_first_subdivision() {
        let tri = iterated_subdivision(3, 1, &lim()).unwrap();
        assert_eq!(tri.complex.faces(2).len(), 6);
        let fam = sperner_family(&tri.complex, |&v| tri.carrier[v as usize], 3).unwrap();
        let labels: Vec<usize> = tri
            .carrier
            .iter()
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        let lab = Labeling::new(&fam, labels.clone()).unwrap();
        let chains = build_chain_family(&fam, &lim()).unwrap();
        chains.verify(&fam).unwrap();
        chains.verify_alphas(&lab).unwrap();
        let found = rainbow_from_chains(&fam, &chains, &lab).unwrap();
        assert_eq!(rainbow_scan(&tri.complex, &labels, 3) % 2, 1);
        let mut sorted = found.face.clone();
        sorted.sort_unstable();
        assert!(tri.complex.contains_face(&sorted));
        for (color, &v) in found.by_color.iter().enumerate() {
            assert_eq!(labels[v as usize], color);
        }
    }

    #[test]
    fn sperner_on_second_subdivision_random_labels() {
        let tri = iterated_subdivision(3, 2, &lim()).unwrap();
        let fam = sperner_family(&tri.complex, |&v| tri.carrier[v as usize], 3).unwrap();
        let chains = build_chain_family(&fam, &lim()).unwrap();
        chains.verify(&fam).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let labels: Vec<usize> = tri
                .carrier
                .iter()
                .map(|&c| {
                    let opts: Vec<usize> = crate::om::bits(c).collect();
                    opts[rng.gen_range(0..opts.len())]
                })
                .collect();
            let lab = Labeling::new(&fam, labels.clone()).unwrap();
            chains.verify_alphas(&lab).unwrap();
            let found = rainbow_from_chains(&fam, &chains, &lab).unwrap();
            assert_eq!(found.by_color.len(), 3);
            assert!(rainbow_scan(&tri.complex, &labels, 3) >= 1);
        }
    }

    #[test]
    fn labeling_invariant_is_checked() {
        let tri = iterated_subdivision(3, 1, &lim()).unwrap();
        let fam = sperner_family(&tri.complex, |&v| tri.carrier[v as usize], 3).unwrap();
        // a corner vertex carrying a foreign label
        let mut labels: Vec<usize> = tri
            .carrier
            .iter()
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        let corner = tri.carrier.iter().position(|&c| c == 1).unwrap();
        labels[corner] = 2;
        assert!(Labeling::new(&fam, labels).is_err());
    }

    #[test]
    fn broken_connectivity_is_refused() {
        // K^{1,2} is two points: not 0-connected
        let pts = SimplicialComplex::from_faces([[0u8], [1]], &lim()).unwrap();
        let fam = meshulam_family(&pts, |&v| v as usize, 2).unwrap();
        match build_chain_family(&fam, &lim()) {
            Err(Error::Connectivity { subset, .. }) => assert_eq!(subset, vec![1, 2]),
            other => panic!("expected a connectivity refusal, got {other:?}"),
        }
    }

    #[test]
    fn non_monotone_family_is_rejected() {
        let a = SimplicialComplex::from_faces([[0u8]], &lim()).unwrap();
        let b = SimplicialComplex::from_faces([[1u8]], &lim()).unwrap();
        assert!(ComplexFamily::new(1, vec![a, b]).is_err());
    }

    #[test]
    fn meshulam_on_a_fan() {
        // fan of triangles around vertex 0: a disc; each pair of labels spans a path
        let faces = (1..5u32).map(|i| vec![0, i, i + 1]);
        let disc = SimplicialComplex::from_faces(faces, &lim()).unwrap();
        let label = |&v: &u32| [0usize, 1, 1, 2, 2, 2][v as usize];
        let fam = meshulam_family(&disc, label, 3).unwrap();
        let lab = Labeling::from_fn(&fam, label).unwrap();
        let found = find_rainbow_simplex(&fam, &lab, &lim()).unwrap();
        let mut labels: Vec<usize> = found.by_color.iter().map(label).collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![0, 1, 2]);
    }
}
