//! Acceptance criteria. Each check prints one PASS/FAIL line with its
//! runtime; a check fails if it errors, panics or exceeds its time budget.
//!
//! Certificates are re-checked by oracles written here, independent of the
//! library's own verifiers.

use std::collections::{BTreeSet, HashSet};
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use omkit::altwords::{oracle_words, preceq_b, solve_words, OracleMode, Word};
use omkit::campaign::{random_agreeing_topes, random_conic_instance, random_uniform, trial_rng};
use omkit::colorful::{
    conic_pipeline, eh_order_complex, find_rainbow_conic, RainbowCertificate, PIPELINE_MAX_EXTENDED,
};
use omkit::om::{
    check_height_bound, covectors, topes, vectors, Chirotope, RationalMatrix, Sign, SignVector,
};
use omkit::rainbow::{
    build_chain_family, iterated_subdivision, rainbow_from_chains, sperner_family, Labeling,
};
use omkit::simplicial::{
    barycentric_subdivision, boundary, reduced_betti_numbers, reduced_homology_trivial_up_to,
    SimplicialComplex, Z2Chain,
};
use omkit::transversal::{
    build_li, composite, fi_member, find_partition_transversal, find_transversal, jj_order_complex,
    li_cellular_betti, verify_common_element, TopeCollection, TransversalCertificate,
};
use omkit::Limits;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sv(s: &str) -> SignVector {
    s.parse().expect("sign vector literal")
}

fn lim() -> Limits {
    Limits::default()
}

// ---------------------------------------------------------------- oracles

/// Covector test by orthogonality: for every circuit the two sign vectors
/// either have disjoint supports or both agree and disagree somewhere.
fn orthogonal_to_circuits(x: &SignVector, circuits: &[SignVector]) -> bool {
    circuits.iter().all(|c| {
        let mut agree = false;
        let mut clash = false;
        for j in 0..x.len() {
            match (x.get(j), c.get(j)) {
                (Sign::Zero, _) | (_, Sign::Zero) => {}
                (a, b) if a == b => agree = true,
                _ => clash = true,
            }
        }
        agree == clash
    })
}

fn is_tope(chi: &Chirotope, x: &SignVector) -> bool {
    (0..x.len()).all(|j| x.get(j) != Sign::Zero) && orthogonal_to_circuits(x, &chi.circuits())
}

/// A transversal: the tope agrees with `T_{a(j)}` at every `j`, and each
/// index `i` is used exactly `need[i]` times.
fn check_transversal(
    chi: &Chirotope,
    ts: &[SignVector],
    need: &[usize],
    cert: &TransversalCertificate,
) -> Result<(), String> {
    ensure!(is_tope(chi, &cert.tope), "{} is not a tope", cert.tope);
    ensure!(
        cert.assignment.len() == chi.n(),
        "assignment has the wrong length"
    );
    let mut used = vec![0usize; ts.len()];
    for (j, &i) in cert.assignment.iter().enumerate() {
        ensure!(i < ts.len(), "index {i} out of range");
        ensure!(
            ts[i].get(j) == cert.tope.get(j),
            "element {j} disagrees with its tope"
        );
        used[i] += 1;
    }
    ensure!(used == need, "usage {used:?} differs from {need:?}");
    Ok(())
}

/// A positive circuit of the column matroid of `m`: the selected columns
/// have a one-dimensional kernel spanned by a strictly signed vector.
fn matrix_positive_circuit(m: &RationalMatrix, x: &SignVector) -> bool {
    let supp: Vec<usize> = (0..x.len()).filter(|&j| x.get(j) != Sign::Zero).collect();
    if supp.is_empty() || (0..x.len()).any(|j| x.get(j) == Sign::Minus) {
        return false;
    }
    let ker = m.select_columns(&supp).kernel_basis();
    ker.len() == 1
        && (ker[0].iter().all(|v| v.is_positive()) || ker[0].iter().all(|v| v.is_negative()))
}

fn check_conic(
    m: &RationalMatrix,
    e: usize,
    circuits: &[SignVector],
    cert: &RainbowCertificate,
) -> Result<(), String> {
    ensure!(
        matrix_positive_circuit(m, &cert.circuit),
        "{} is not a positive circuit",
        cert.circuit
    );
    ensure!(cert.circuit.get(e) == Sign::Plus, "certificate misses e");
    let others: BTreeSet<usize> = (0..m.cols())
        .filter(|&j| j != e && cert.circuit.get(j) != Sign::Zero)
        .collect();
    let domain: BTreeSet<usize> = cert.assignment.iter().map(|&(f, _)| f).collect();
    ensure!(
        domain == others && domain.len() == cert.assignment.len(),
        "assignment domain mismatch"
    );
    let indices: HashSet<usize> = cert.assignment.iter().map(|&(_, i)| i).collect();
    ensure!(
        indices.len() == cert.assignment.len(),
        "an index is used twice"
    );
    for &(f, i) in &cert.assignment {
        ensure!(
            i < circuits.len() && circuits[i].get(f) != Sign::Zero,
            "element {f} not in C_{i}"
        );
    }
    Ok(())
}

fn runs(w: &[bool]) -> usize {
    if w.is_empty() {
        0
    } else {
        1 + w.windows(2).filter(|p| p[0] != p[1]).count()
    }
}

/// Words of length `n` with at most two runs, by filtering all `2^n`.
fn two_run_words(n: usize) -> Vec<Word> {
    (0u32..1 << n)
        .map(|b| (0..n).map(|c| b >> c & 1 == 1).collect::<Vec<bool>>())
        .filter(|w| runs(w) <= 2)
        .map(|w| Word::new(w).expect("non-empty"))
        .collect()
}

fn check_word_perm(words: &[Word], perm: &[usize]) -> Result<(), String> {
    let n = words.len();
    let distinct: HashSet<usize> = perm.iter().copied().collect();
    ensure!(
        perm.len() == n && distinct.len() == n && perm.iter().all(|&p| p < n),
        "{perm:?} is not a permutation"
    );
    let diag: Vec<bool> = (0..n).map(|c| words[perm[c]].get(c)).collect();
    ensure!(
        runs(&diag) <= 2,
        "diagonal of {perm:?} has {} runs",
        runs(&diag)
    );
    Ok(())
}

/// Height of every vector: circuits have height 1, and otherwise the height is
/// one more than the largest height strictly conformally below.
fn height_bound_oracle(chi: &Chirotope) -> Result<bool, String> {
    let mut vs: Vec<SignVector> = vectors(chi, &lim())
        .map_err(e2s)?
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    vs.sort_by_key(|x| x.support_size());
    let mut h: Vec<usize> = vec![0; vs.len()];
    for i in 0..vs.len() {
        let below = (0..i)
            .filter(|&j| {
                vs[j].support_size() < vs[i].support_size()
                    && vs[j]
                        .support()
                        .iter()
                        .all(|&e| vs[j].get(e) == vs[i].get(e))
            })
            .map(|j| h[j])
            .max();
        h[i] = below.map_or(1, |b| b + 1);
    }
    Ok(vs
        .iter()
        .zip(&h)
        .all(|(x, &hx)| x.support_size() <= chi.rank() + hx))
}

/// Cocircuits from hyperplanes: for an independent `(r−1)`-set `A`,
/// `Y(e) = χ(a_1, …, a_{r−1}, e)`.
fn cocircuit_oracle(chi: &Chirotope) -> BTreeSet<SignVector> {
    let (n, r) = (chi.n(), chi.rank());
    let mut out = BTreeSet::new();
    for a in subsets(n, r - 1) {
        let y: Vec<Sign> = (0..n)
            .map(|e| {
                if a.contains(&e) {
                    Sign::Zero
                } else {
                    let mut t = a.clone();
                    t.push(e);
                    chi.sign_of(&t)
                }
            })
            .collect();
        let y = SignVector::from_signs(&y);
        if !y.is_zero() {
            out.insert(y);
            out.insert(negate(&y));
        }
    }
    out
}

fn negate(x: &SignVector) -> SignVector {
    SignVector::from_masks(x.len(), x.neg_mask(), x.pos_mask())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&j| m >> j & 1 == 1).collect())
        .collect()
}

fn matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_rows(rows).expect("rectangular")
}

/// Random full-rank matrix with entries in `−2..=2`, so degenerate
/// configurations are common.
fn random_small_matrix<R: Rng>(rng: &mut R, r: usize, n: usize) -> (RationalMatrix, Chirotope) {
    loop {
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let m = matrix(&rows);
        if m.rank() == r {
            if let Ok(chi) = Chirotope::from_matrix(&m) {
                return (m, chi);
            }
        }
    }
}

// ---------------------------------------------------------------- criteria

fn counterexample() -> Result<String, String> {
    let chi =
        Chirotope::from_matrix(&matrix(&[vec![1, 1, 1, 0], vec![0, 0, 0, 1]])).map_err(e2s)?;
    let got: BTreeSet<SignVector> = topes(&chi, &lim()).map_err(e2s)?.into_iter().collect();
    let want: BTreeSet<SignVector> = ["++++", "----", "+++-", "---+"]
        .into_iter()
        .map(sv)
        .collect();
    ensure!(got == want, "topes {got:?}");
    let ts = vec![sv("++++"), sv("++++"), sv("---+"), sv("---+")];
    ensure!(
        TopeCollection::new(chi.clone(), ts.clone(), None, false, &lim()).is_err(),
        "non-uniform input accepted without force"
    );
    let tc = TopeCollection::new(chi, ts.clone(), None, true, &lim()).map_err(e2s)?;
    ensure!(
        find_transversal(&tc).map_err(e2s)?.is_none(),
        "a transversal was reported"
    );
    // brute force: no tope and no assignment of the four topes works
    for t in &want {
        for perm in permutations(4) {
            ensure!(
                (0..4).any(|j| ts[perm[j]].get(j) != t.get(j)),
                "brute force finds {t} with {perm:?}"
            );
        }
    }
    let (code, out) = run_cli_files(
        &[
            ("m.om", "1 1 1 0\n0 0 0 1\n"),
            ("t.txt", "++++\n++++\n---+\n---+\n"),
        ],
        &[
            "verify",
            "transversal",
            "--om",
            "{m.om}",
            "--topes",
            "{t.txt}",
            "--force",
        ],
    );
    ensure!(
        code == 0 && out.contains("\"status\":\"none\""),
        "cli: exit {code}: {out}"
    );
    Ok("4 topes, NONE by search, brute force and cli".into())
}

fn rank_one() -> Result<String, String> {
    let mut count = 0;
    for n in 3..=5 {
        let chi = Chirotope::alternating(n, 1).map_err(e2s)?;
        let (plus, minus) = (SignVector::all_plus(n), negate(&SignVector::all_plus(n)));
        for mask in 1u32..(1 << n) - 1 {
            let ts: Vec<SignVector> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { plus } else { minus })
                .collect();
            let tc = TopeCollection::new(chi.clone(), ts, None, false, &lim()).map_err(e2s)?;
            ensure!(
                find_transversal(&tc).map_err(e2s)?.is_none(),
                "n={n} mask={mask:b} has a transversal"
            );
            count += 1;
        }
    }
    Ok(format!("{count} mixed collections, all NONE"))
}

fn common_element_campaign() -> Result<String, String> {
    const SEED: u64 = 13;
    let results: Vec<Result<(), String>> = (0..200u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(SEED, t);
            let r = rng.gen_range(2..=3);
            let n = rng.gen_range(4..=7);
            let (_, chi) = random_uniform(&mut rng, r, n).map_err(e2s)?;
            let (_, ts) = random_agreeing_topes(&mut rng, &chi, n, &lim()).map_err(e2s)?;
            let tc =
                TopeCollection::new(chi.clone(), ts.clone(), None, false, &lim()).map_err(e2s)?;
            let cert = verify_common_element(&tc).map_err(|e| format!("trial {t}: {e}"))?;
            check_transversal(&chi, &ts, &vec![1; n], &cert).map_err(|e| format!("trial {t}: {e}"))
        })
        .collect();
    let certified = results.iter().filter(|r| r.is_ok()).count();
    results.into_iter().collect::<Result<Vec<()>, String>>()?;
    Ok(format!("{certified}/200 certified"))
}

fn partition_exhaustive() -> Result<String, String> {
    let chi = Chirotope::alternating(6, 3).map_err(e2s)?;
    let all = topes(&chi, &lim()).map_err(e2s)?;
    ensure!(all.len() == 32, "alt(6,3) has {} topes", all.len());
    let count = (0..32 * 32 * 32usize)
        .into_par_iter()
        .map(|code| {
            let ts = vec![all[code / 1024], all[code / 32 % 32], all[code % 32]];
            let tc =
                TopeCollection::new(chi.clone(), ts.clone(), Some(vec![2, 2, 2]), false, &lim())
                    .map_err(e2s)?;
            let cert = find_partition_transversal(&tc).map_err(|e| format!("{ts:?}: {e}"))?;
            check_transversal(&chi, &ts, &[2, 2, 2], &cert).map(|_| 1usize)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!("{count}/32768 triples certified"))
}

fn words_exhaustive() -> Result<String, String> {
    let mut summary = vec![];
    for n in [4usize, 5] {
        let pool = two_run_words(n);
        ensure!(pool.len() == 2 * n, "{} words for n={n}", pool.len());
        let total = pool.len().pow(n as u32);
        let solved = (0..total)
            .into_par_iter()
            .map(|mut code| {
                let words: Vec<Word> = (0..n)
                    .map(|_| {
                        let w = pool[code % pool.len()].clone();
                        code /= pool.len();
                        w
                    })
                    .collect();
                let sol = solve_words(&words).map_err(|e| format!("{words:?}: {e}"))?;
                check_word_perm(&words, &sol.perm)?;
                let diag: Vec<bool> = (0..n).map(|c| words[sol.perm[c]].get(c)).collect();
                ensure!(
                    diag == sol.result.symbols(),
                    "reported word differs from the diagonal"
                );
                let oracle = oracle_words(&words, OracleMode::Permutations).map_err(e2s)?;
                let Some(p) = oracle else {
                    return Err(format!("{words:?}: oracle finds no permutation"));
                };
                check_word_perm(&words, &p)?;
                Ok(1usize)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        summary.push(format!("n={n}: {solved}/{total}"));
    }
    Ok(summary.join(", "))
}

fn conic_campaign() -> Result<String, String> {
    const SEED: u64 = 2024;
    let results: Vec<Result<bool, String>> = (0..200u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(SEED, t);
            let r = rng.gen_range(2..=3);
            let n = rng.gen_range(r + 1..=8);
            let (m, inst) = random_conic_instance(&mut rng, r, n).map_err(e2s)?;
            let cert = find_rainbow_conic(&inst).map_err(|e| format!("trial {t}: {e}"))?;
            check_conic(&m, inst.e, &inst.circuits, &cert)
                .map_err(|e| format!("trial {t}: {e}"))?;
            if n > 6 {
                return Ok(false);
            }
            let wide = Limits {
                max_n: PIPELINE_MAX_EXTENDED,
                ..lim()
            };
            let piped = conic_pipeline(&m, inst.e, &inst.circuits, &wide)
                .map_err(|e| format!("trial {t} pipeline: {e}"))?;
            check_conic(&m, inst.e, &inst.circuits, &piped)
                .map_err(|e| format!("trial {t} pipeline: {e}"))?;
            Ok(true)
        })
        .collect();
    let mut piped = 0;
    for r in results {
        piped += usize::from(r?);
    }
    Ok(format!(
        "200/200 certified, pipeline agrees on {piped} instances with n <= 6"
    ))
}

fn sperner() -> Result<String, String> {
    let mut found = 0;
    for depth in [1usize, 2] {
        let tri = iterated_subdivision(3, depth, &lim()).map_err(e2s)?;
        let family = sperner_family(&tri.complex, |v| tri.carrier[*v as usize], 3).map_err(e2s)?;
        let chains = build_chain_family(&family, &lim()).map_err(e2s)?;
        chains.verify(&family).map_err(e2s)?;
        for t in 0..50u64 {
            let mut rng = trial_rng(depth as u64, t);
            let labels: Vec<usize> = tri
                .carrier
                .iter()
                .map(|&c| {
                    let colors: Vec<usize> = (0..3).filter(|&i| c >> i & 1 == 1).collect();
                    *colors.choose(&mut rng).expect("non-empty carrier")
                })
                .collect();
            let labeling = Labeling::from_fn(&family, |v| labels[*v as usize]).map_err(e2s)?;
            let rainbow = rainbow_from_chains(&family, &chains, &labeling).map_err(e2s)?;
            let face_labels: BTreeSet<usize> = rainbow
                .by_color
                .iter()
                .map(|&v| labels[v as usize])
                .collect();
            ensure!(
                face_labels.len() == 3,
                "face {:?} is not rainbow",
                rainbow.face
            );
            ensure!(
                tri.complex.contains_vertex_set(&rainbow.by_color),
                "rainbow face is not a triangle"
            );
            // parity: the number of rainbow triangles is odd
            let rainbow_count = tri
                .complex
                .faces(2)
                .iter()
                .filter(|f| {
                    f.iter()
                        .map(|&v| labels[v as usize])
                        .collect::<BTreeSet<_>>()
                        .len()
                        == 3
                })
                .count();
            ensure!(rainbow_count % 2 == 1, "{rainbow_count} rainbow triangles");
            found += 1;
        }
    }
    Ok(format!("{found}/100 labelings rainbow"))
}

fn lemma_jj() -> Result<String, String> {
    let cases: Vec<(usize, usize)> = (2..=3).flat_map(|r| (r..=6).map(move |n| (n, r))).collect();
    let checked = cases
        .par_iter()
        .map(|&(n, r)| {
            let chi = Chirotope::alternating(n, r).map_err(e2s)?;
            let betti =
                reduced_betti_numbers(&jj_order_complex(&chi, 0, 0, &lim()).map_err(e2s)?, &lim())
                    .map_err(e2s)?;
            ensure!(
                betti.len() > r && betti[r] == 1,
                "alt({n},{r}) empty J: {betti:?}"
            );
            ensure!(
                betti[..r].iter().all(|&b| b == 0),
                "alt({n},{r}) empty J: {betti:?}"
            );
            let all = topes(&chi, &lim()).map_err(e2s)?;
            let mut count = 1;
            for code in 1..3usize.pow(n as u32) {
                let (mut jp, mut jm, mut c) = (0u64, 0u64, code);
                for j in 0..n {
                    match c % 3 {
                        1 => jp |= 1 << j,
                        2 => jm |= 1 << j,
                        _ => {}
                    }
                    c /= 3;
                }
                let has_tope = all
                    .iter()
                    .any(|t| t.neg_mask() & jp == 0 && t.pos_mask() & jm == 0);
                if !has_tope {
                    continue;
                }
                let k = jj_order_complex(&chi, jp, jm, &lim()).map_err(e2s)?;
                let betti = reduced_betti_numbers(&k, &lim()).map_err(e2s)?;
                ensure!(
                    betti.iter().all(|&b| b == 0),
                    "alt({n},{r}) J+={jp:b} J-={jm:b}: {betti:?}"
                );
                count += 1;
            }
            Ok(count)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!(
        "{checked} (J+, J-) pairs over {} chirotopes",
        cases.len()
    ))
}

fn lemma_hh() -> Result<String, String> {
    let mut accepted = 0;
    let mut complexes = 0;
    let mut trial = 0u64;
    while accepted < 50 {
        ensure!(
            trial < 10_000,
            "only {accepted} instances with positive circuits through e"
        );
        let mut rng = trial_rng(99, trial);
        trial += 1;
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(r + 1..=6);
        let (_, chi) = random_small_matrix(&mut rng, r, n);
        let e = rng.gen_range(0..n);
        if eh_order_complex(&chi, e, 1, &lim())
            .map_err(e2s)?
            .is_empty()
        {
            continue;
        }
        accepted += 1;
        for h in 1..=3usize {
            let k = eh_order_complex(&chi, e, h, &lim()).map_err(e2s)?;
            ensure!(
                reduced_homology_trivial_up_to(&k, h as isize - 2, &lim()).map_err(e2s)?,
                "trial {} chi={chi} e={e} h={h}",
                trial - 1
            );
            complexes += 1;
        }
    }
    Ok(format!(
        "{accepted} instances, {complexes} complexes ({trial} draws)"
    ))
}

fn lemma_li() -> Result<String, String> {
    let mut checked = 0;
    for r in [2usize, 3] {
        let chi = Chirotope::alternating(4, r).map_err(e2s)?;
        let all = topes(&chi, &lim()).map_err(e2s)?;
        let m = all.len();
        checked += (0..m * m * m)
            .into_par_iter()
            .map(|code| {
                let ts = [all[code / (m * m)], all[code / m % m], all[code % m]];
                let mut count = 0;
                for mask in 1u64..8 {
                    let chosen: Vec<SignVector> = (0..3)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| ts[i])
                        .collect();
                    let common =
                        (0..4).any(|j| chosen.iter().all(|t| t.get(j) == chosen[0].get(j)));
                    let betti = li_cellular_betti(&chi, &ts, mask, &lim()).map_err(e2s)?;
                    ensure!(
                        betti.iter().take(r).all(|&b| b == 0),
                        "r={r} {ts:?} I={mask:b}: {betti:?}"
                    );
                    if common {
                        ensure!(
                            betti.iter().all(|&b| b == 0),
                            "r={r} {ts:?} I={mask:b}: {betti:?}"
                        );
                    }
                    count += 1;
                }
                Ok(count)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
    }
    // simplicial route on pairs of rank-2 topes
    let chi = Chirotope::alternating(4, 2).map_err(e2s)?;
    let all = topes(&chi, &lim()).map_err(e2s)?;
    let mut cross = 0;
    for a in &all {
        for b in &all {
            let ts = [*a, *b];
            let cellular = li_cellular_betti(&chi, &ts, 0b11, &lim()).map_err(e2s)?;
            let k = build_li(&chi, &ts, 0b11, None, &lim()).map_err(e2s)?;
            let mut simplicial = reduced_betti_numbers(&k, &lim()).map_err(e2s)?;
            simplicial.resize(cellular.len().max(simplicial.len()), 0);
            let mut cellular = cellular;
            cellular.resize(simplicial.len(), 0);
            ensure!(
                cellular == simplicial,
                "{ts:?}: cellular {cellular:?} vs simplicial {simplicial:?}"
            );
            cross += 1;
        }
    }
    // three topes of alt(8,3) and the tuple (2,3,3,1,2,3,1,2)
    let chi8 = Chirotope::alternating(8, 3).map_err(e2s)?;
    let fig = [sv("+++----+"), sv("--++++--"), sv("+---++++")];
    let tuple: Vec<usize> = [2, 3, 3, 1, 2, 3, 1, 2].iter().map(|i| i - 1).collect();
    let x = composite(&fig, &tuple).map_err(e2s)?;
    ensure!(x == sv("----++--"), "composite {x}");
    ensure!(
        fi_member(&chi8, &fig, &tuple).map_err(e2s)?,
        "tuple not in F^I"
    );
    ensure!(is_tope(&chi8, &x), "oracle rejects {x}");
    Ok(format!(
        "{checked} L^I complexes, {cross} cellular/simplicial agreements, sample tuple in F^I"
    ))
}

fn height_bound() -> Result<String, String> {
    let mut fixtures: Vec<Chirotope> = vec![];
    for n in 1..=6 {
        for r in 1..=n {
            fixtures.push(Chirotope::alternating(n, r).map_err(e2s)?);
        }
    }
    fixtures
        .push(Chirotope::from_matrix(&matrix(&[vec![1, 1, 1, 0], vec![0, 0, 0, 1]])).map_err(e2s)?);
    for t in 0..40u64 {
        let mut rng = trial_rng(5, t);
        let n = rng.gen_range(2..=6);
        let r = rng.gen_range(1..=n);
        fixtures.push(random_small_matrix(&mut rng, r, n).1);
    }
    let count = fixtures
        .par_iter()
        .map(|chi| {
            ensure!(
                check_height_bound(chi, &lim()).map_err(e2s)?,
                "bound fails on {chi}"
            );
            ensure!(
                height_bound_oracle(chi)?,
                "oracle finds a violation on {chi}"
            );
            Ok(1usize)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!("{count} instances"))
}

fn structural() -> Result<String, String> {
    // ⪯_b total order
    for n in 1..=8 {
        let ws = two_run_words(n);
        let le = |a: &Word, b: &Word| preceq_b(a, b).map_err(e2s);
        for a in &ws {
            ensure!(le(a, a)?, "not reflexive at {a}");
            for b in &ws {
                let (ab, ba) = (le(a, b)?, le(b, a)?);
                ensure!(ab || ba, "{a} and {b} incomparable");
                ensure!(!(ab && ba) || a == b, "{a} and {b} tie");
                for c in &ws {
                    ensure!(
                        !(ab && le(b, c)?) || le(a, c)?,
                        "not transitive on {a} {b} {c}"
                    );
                }
            }
        }
    }
    // duality
    let mut oms: Vec<Chirotope> = vec![];
    for n in 2..=6 {
        for r in 1..n {
            oms.push(Chirotope::alternating(n, r).map_err(e2s)?);
        }
    }
    oms.push(Chirotope::from_matrix(&matrix(&[vec![1, 1, 1, 0], vec![0, 0, 0, 1]])).map_err(e2s)?);
    for t in 0..20u64 {
        let mut rng = trial_rng(8, t);
        let n = rng.gen_range(3..=6);
        let r = rng.gen_range(1..n);
        oms.push(random_small_matrix(&mut rng, r, n).1);
    }
    for chi in &oms {
        let d = chi.dual();
        ensure!(
            d.dual() == *chi || d.dual() == chi.negated(),
            "dual is not an involution on {chi}"
        );
        let got: BTreeSet<SignVector> = d.circuits().into_iter().collect();
        ensure!(
            got == cocircuit_oracle(chi),
            "circuits(dual) differ from cocircuits on {chi}"
        );
        let cov: HashSet<SignVector> = covectors(chi, &lim()).map_err(e2s)?.into_iter().collect();
        ensure!(
            got.iter().all(|y| cov.contains(y)),
            "a cocircuit is not a covector on {chi}"
        );
    }
    // complexes
    let complexes = complex_fixtures()?;
    for (name, k, expect) in &complexes {
        for d in 0..=k.dim() as usize {
            for f in k.faces(d) {
                let c = Z2Chain::from_faces(d as isize, [f.clone()]).map_err(e2s)?;
                let b = boundary(&c, k).map_err(e2s)?;
                if d > 0 {
                    ensure!(boundary(&b, k).map_err(e2s)?.is_zero(), "∂∂ != 0 on {name}");
                }
            }
        }
        let betti = reduced_betti_numbers(k, &lim()).map_err(e2s)?;
        ensure!(
            &betti == expect,
            "{name}: betti {betti:?}, expected {expect:?}"
        );
        let sd = barycentric_subdivision(k, &lim()).map_err(e2s)?;
        ensure!(
            reduced_betti_numbers(&sd, &lim()).map_err(e2s)? == betti,
            "{name}: subdivision changes homology"
        );
    }
    // determinism
    let argvs: [&[&str]; 3] = [
        &[
            "omkit",
            "--json",
            "--no-timing",
            "verify",
            "conic",
            "--random",
            "--trials",
            "20",
            "--seed",
            "7",
            "--pipeline",
        ],
        &[
            "omkit",
            "--json",
            "--no-timing",
            "verify",
            "convex",
            "--random",
            "--trials",
            "20",
            "--seed",
            "7",
        ],
        &[
            "omkit",
            "--json",
            "--no-timing",
            "explore",
            "q14",
            "--n",
            "4",
            "--r",
            "2",
            "--trials",
            "20",
            "--seed",
            "7",
        ],
    ];
    for argv in argvs {
        let (c1, o1) = omkit_cli::run(argv.iter().copied());
        let (c2, o2) = omkit_cli::run(argv.iter().copied());
        ensure!(c1 == c2 && o1 == o2, "{argv:?} is not reproducible");
        ensure!(c1 == 0 && o1.starts_with('{'), "{argv:?} exited {c1}: {o1}");
    }
    let dir = tempfile::tempdir().map_err(e2s)?;
    let mut generated = vec![];
    for name in ["a.om", "b.om"] {
        let path = dir.path().join(name);
        let path = path.to_str().expect("utf-8 path");
        let (code, out) = omkit_cli::run([
            "omkit", "gen", "--n", "6", "--r", "3", "--seed", "7", "--out", path,
        ]);
        ensure!(code == 0, "gen exited {code}: {out}");
        generated.push(std::fs::read(path).map_err(e2s)?);
    }
    ensure!(generated[0] == generated[1], "gen is not reproducible");
    Ok(format!(
        "order laws n<=8, {} dual pairs, {} complexes, {} cli runs reproducible",
        oms.len(),
        complexes.len(),
        argvs.len() + 1
    ))
}

type Fixture = (&'static str, SimplicialComplex<u32>, Vec<usize>);

fn complex_fixtures() -> Result<Vec<Fixture>, String> {
    let mk = |faces: Vec<Vec<u32>>| SimplicialComplex::from_faces(faces, &lim()).map_err(e2s);
    let simplex_boundary = |k: u32| -> Vec<Vec<u32>> {
        (0..k)
            .map(|i| (0..k).filter(|&j| j != i).collect())
            .collect()
    };
    // 7-vertex torus
    let torus: Vec<Vec<u32>> = (0..7u32)
        .flat_map(|i| {
            [
                vec![i, (i + 1) % 7, (i + 3) % 7],
                vec![i, (i + 2) % 7, (i + 3) % 7],
            ]
        })
        .collect();
    // 6-vertex projective plane
    let rp2 = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ];
    Ok(vec![
        ("point", mk(vec![vec![0]])?, vec![0, 0]),
        ("two points", mk(vec![vec![0], vec![1]])?, vec![0, 1]),
        ("triangle", mk(vec![vec![0, 1, 2]])?, vec![0, 0, 0, 0]),
        ("circle", mk(simplex_boundary(3))?, vec![0, 0, 1]),
        ("sphere", mk(simplex_boundary(4))?, vec![0, 0, 0, 1]),
        ("3-sphere", mk(simplex_boundary(5))?, vec![0, 0, 0, 0, 1]),
        (
            "two circles",
            mk(vec![
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![3, 4],
                vec![4, 5],
                vec![3, 5],
            ])?,
            vec![0, 1, 2],
        ),
        ("torus", mk(torus)?, vec![0, 0, 2, 1]),
        ("projective plane", mk(rp2)?, vec![0, 0, 1, 1]),
    ])
}

// ---------------------------------------------------------------- harness

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Write `files` to a scratch directory, substitute `{name}` in `argv` with
/// their paths and run the CLI with `--json`.
fn run_cli_files(files: &[(&str, &str)], argv: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().expect("scratch directory");
    let mut args = vec!["omkit".to_string(), "--json".to_string()];
    for a in argv {
        let mut a = a.to_string();
        for (name, text) in files {
            let path = dir.path().join(name);
            std::fs::write(&path, text).expect("write fixture");
            a = a.replace(&format!("{{{name}}}"), path.to_str().expect("utf-8 path"));
        }
        args.push(a);
    }
    omkit_cli::run(args)
}

const CRITERIA: [(&str, u64, Check); 12] = [
    ("counterexample topes and forced search", 1, counterexample),
    ("rank-one mixed collections", 1, rank_one),
    ("common-element campaign", 120, common_element_campaign),
    (
        "partition transversals on alt(6,3)",
        600,
        partition_exhaustive,
    ),
    ("alternation words n=4, n=5", 300, words_exhaustive),
    ("colorful conic campaign", 300, conic_campaign),
    ("rainbow engine on subdivided triangles", 60, sperner),
    ("covector complexes L_(J+,J-)", 120, lemma_jj),
    ("positive vector complexes V+_(e,h)", 120, lemma_hh),
    ("simplotope complexes L^I", 120, lemma_li),
    ("height bound", 60, height_bound),
    ("structural suites", 600, structural),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, budget, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("over the {budget} s budget"))
            }
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        failed += usize::from(outcome.is_err());
        println!(
            "{tag} {:>2} {name:<42} {:>8.2}s  {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
