//! Binary words with alternation number at most two, and the diagonal
//! construction on the toroidal grid.
//!
//! Given `n` such words of length `n`, sorted by `⪯_b`, the boundary between
//! `+` and `−` cells of the `n × n` matrix (row `ρ` is word `ρ`, column `c` is
//! letter `c`) is a closed walk `W` on the toroidal grid digraph. A diagonal
//! cycle `Γ_o` through the vertices with `c − ρ ≡ o (mod n)` crossing `W` at
//! most once yields the word `w_c^{(c + k) mod n}` with `k = −o mod n`, whose
//! alternation number is at most two.
//!
//! Everything is 0-based: vertex `(c, ρ)` is column `c`, row `ρ`, both mod `n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::saturating_matching;

/// A non-empty word over `{+, −}`; `true` is `+`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<bool>);

impl Word {
    pub fn new(symbols: Vec<bool>) -> Result<Word> {
        if symbols.is_empty() {
            return Err(Error::invalid("empty word"));
        }
        Ok(Word(symbols))
    }

    pub fn constant(n: usize, plus: bool) -> Word {
        Word(vec![plus; n.max(1)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `true` for `+`.
    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn symbols(&self) -> &[bool] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&s| s == self.0[0])
    }

    /// Position `c ≥ 1` of the first sign change, if any.
    fn first_change(&self) -> Option<usize> {
        (1..self.len()).find(|&c| self.0[c] != self.0[c - 1])
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let symbols = s
            .trim()
            .chars()
            .map(|ch| match ch {
                '+' => Ok(true),
                '-' | '−' => Ok(false),
                other => Err(Error::parse(format!(
                    "unexpected symbol {other:?} in word {s:?}"
                ))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Word::new(symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Words file: one word per line, blank lines and `#` comments skipped,
/// all of one length.
pub fn parse_words(text: &str) -> Result<Vec<Word>> {
    let words = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect::<Result<Vec<Word>>>()?;
    if let Some(w) = words.iter().find(|w| w.len() != words[0].len()) {
        return Err(Error::parse(format!(
            "word {w} differs in length from {}",
            words[0]
        )));
    }
    Ok(words)
}

/// Maximal length of an alternating subword, which is the number of maximal
/// constant runs.
pub fn alternation_number(w: &Word) -> usize {
    1 + w.0.windows(2).filter(|p| p[0] != p[1]).count()
}

fn require_two(w: &Word) -> Result<()> {
    if alternation_number(w) > 2 {
        return Err(Error::invalid(format!(
            "{w} has alternation number {}",
            alternation_number(w)
        )));
    }
    Ok(())
}

/// The total order `⪯_b` on words of one length with alternation at most two:
/// words ending in `+` come first; among those, `−` positions grow; among
/// words ending in `−`, `+` positions grow.
pub fn preceq_b(w: &Word, w2: &Word) -> Result<bool> {
    if w.len() != w2.len() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: w2.len(),
        });
    }
    require_two(w)?;
    require_two(w2)?;
    let last = w.len() - 1;
    Ok(match (w.get(last), w2.get(last)) {
        (true, false) => true,
        (false, true) => false,
        (true, true) => (0..w.len()).all(|i| w.get(i) || !w2.get(i)),
        (false, false) => (0..w.len()).all(|i| !w.get(i) || w2.get(i)),
    })
}

fn cmp_b(a: &Word, b: &Word) -> Ordering {
    if a == b {
        Ordering::Equal
    } else if preceq_b(a, b).expect("validated words") {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Indices of `words` in `⪯_b` order; equal words keep their input order.
pub fn sort_order(words: &[Word]) -> Result<Vec<usize>> {
    for w in words {
        require_two(w)?;
        if w.len() != words[0].len() {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: words[0].len(),
            });
        }
    }
    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_by(|&a, &b| cmp_b(&words[a], &words[b]));
    Ok(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcKind {
    /// `(c, ρ) → (c + 1, ρ)`
    Horizontal,
    /// `(c, ρ) → (c, ρ + 1)`
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridArc {
    pub kind: ArcKind,
    pub tail: (usize, usize),
}

impl GridArc {
    pub fn head(&self, n: usize) -> (usize, usize) {
        let (c, r) = self.tail;
        match self.kind {
            ArcKind::Horizontal => ((c + 1) % n, r),
            ArcKind::Vertical => (c, (r + 1) % n),
        }
    }
}

/// A closed walk on the toroidal grid, as a cyclic arc sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridWalk {
    n: usize,
    arcs: Vec<GridArc>,
}

impl GridWalk {
    /// Checks that consecutive arcs meet (cyclically) and that there are
    /// exactly `n` vertical and at most `2n` horizontal arcs.
    pub fn from_arcs(n: usize, arcs: Vec<GridArc>) -> Result<GridWalk> {
        if n == 0 || arcs.is_empty() {
            return Err(Error::invalid("a walk needs n ≥ 1 and at least one arc"));
        }
        for (t, a) in arcs.iter().enumerate() {
            let next = &arcs[(t + 1) % arcs.len()];
            if a.tail.0 >= n || a.tail.1 >= n || a.head(n) != next.tail {
                return Err(Error::invalid(format!(
                    "arc {t} does not lead into arc {}",
                    (t + 1) % arcs.len()
                )));
            }
        }
        let walk = GridWalk { n, arcs };
        let (h, v) = walk.counts();
        if v != n || h > 2 * n {
            return Err(Error::invalid(format!(
                "{v} vertical and {h} horizontal arcs on a grid of size {n}"
            )));
        }
        Ok(walk)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[GridArc] {
        &self.arcs
    }

    /// `(horizontal, vertical)` arc counts.
    pub fn counts(&self) -> (usize, usize) {
        let h = self
            .arcs
            .iter()
            .filter(|a| a.kind == ArcKind::Horizontal)
            .count();
        (h, self.arcs.len() - h)
    }

    /// Vertices of `Γ_offset` where the walk passes from one side of the
    /// cycle to the other, with multiplicity.
    ///
    /// `Γ` enters a vertex from the south-west and leaves to the north-east
    /// (growing `c` and `ρ`). A horizontal arc arrives from the side `c < ρ`
    /// and leaves to the side `c > ρ`; a vertical arc arrives from `c > ρ` and
    /// leaves to `c < ρ`. So the walk crosses exactly when two consecutive
    /// arcs have the same kind.
    pub fn crossings(&self, offset: usize) -> Vec<(usize, usize)> {
        self.turns()
            .filter(|&(v, a, b)| on_diagonal(self.n, v, offset) && a == b)
            .map(|(v, _, _)| v)
            .collect()
    }

    /// `(vertex, incoming kind, outgoing kind)` at every step.
    fn turns(&self) -> impl Iterator<Item = ((usize, usize), ArcKind, ArcKind)> + '_ {
        let len = self.arcs.len();
        (0..len).map(move |t| {
            let (a, b) = (&self.arcs[t], &self.arcs[(t + 1) % len]);
            (a.head(self.n), a.kind, b.kind)
        })
    }
}

fn on_diagonal(n: usize, (c, r): (usize, usize), offset: usize) -> bool {
    (c + n - r) % n == offset
}

/// The diagonal cycle through the vertices with `c − ρ ≡ offset (mod n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagonalCycle {
    pub n: usize,
    pub offset: usize,
}

impl DiagonalCycle {
    /// Tails of its `n` diagonal arcs `(c, ρ) → (c + 1, ρ + 1)`.
    pub fn arc_tails(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .map(|c| (c, (c + self.n - self.offset) % self.n))
            .collect()
    }
}

fn instance_dump(words: &[Word]) -> String {
    words
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// The boundary walk of a `⪯_b`-sorted instance.
///
/// Horizontal arc `(c, ρ) → (c + 1, ρ)` is marked when letter `c` differs
/// between words `ρ − 1` and `ρ` (rows wrap); vertical arc `(c, ρ) → (c, ρ + 1)`
/// is marked when word `ρ` changes sign between letters `c − 1` and `c`, or at
/// `c = 0` when word `ρ` is constant. If that leaves one vertex with indegree 2
/// and outdegree 0 and one with the converse in the same row, the horizontal
/// arcs from the first to the second are added twice. The result is traversed
/// by Hierholzer's algorithm from the least vertex, horizontal arcs first.
pub fn build_grid_walk(words: &[Word]) -> Result<GridWalk> {
    let n = words.len();
    if n == 0 {
        return Err(Error::invalid("no words"));
    }
    for w in words {
        if w.len() != n {
            return Err(Error::invalid(format!(
                "{n} words but {w} has length {}",
                w.len()
            )));
        }
        require_two(w)?;
    }
    if let Some(p) = words
        .windows(2)
        .position(|p| cmp_b(&p[0], &p[1]) == Ordering::Greater)
    {
        return Err(Error::invalid(format!(
            "words {} and {} are out of order",
            p + 1,
            p + 2
        )));
    }
    let mut arcs = Vec::new();
    for r in 0..n {
        let above = &words[(r + n - 1) % n];
        for c in 0..n {
            if above.get(c) != words[r].get(c) {
                arcs.push(GridArc {
                    kind: ArcKind::Horizontal,
                    tail: (c, r),
                });
            }
        }
        let c = words[r].first_change().unwrap_or(0);
        arcs.push(GridArc {
            kind: ArcKind::Vertical,
            tail: (c, r),
        });
    }
    let mut excess = vec![0i64; n * n];
    let id = |(c, r): (usize, usize)| r * n + c;
    for a in &arcs {
        excess[id(a.tail)] += 1;
        excess[id(a.head(n))] -= 1;
    }
    let imbalanced: Vec<usize> = (0..n * n).filter(|&v| excess[v] != 0).collect();
    if !imbalanced.is_empty() {
        let sink = imbalanced.iter().find(|&&v| excess[v] == -2);
        let source = imbalanced.iter().find(|&&v| excess[v] == 2);
        match (imbalanced.len(), sink, source) {
            (2, Some(&s), Some(&t)) if s / n == t / n => {
                let r = s / n;
                let mut c = s % n;
                while c != t % n {
                    for _ in 0..2 {
                        arcs.push(GridArc {
                            kind: ArcKind::Horizontal,
                            tail: (c, r),
                        });
                    }
                    c = (c + 1) % n;
                }
            }
            _ => {
                let at: Vec<String> = imbalanced
                    .iter()
                    .map(|&v| format!("({},{}):{:+}", v % n, v / n, excess[v]))
                    .collect();
                return Err(Error::TheoremViolation {
                    what: format!(
                        "degree imbalance outside the single-pair case: {}",
                        at.join(" ")
                    ),
                    instance: instance_dump(words),
                });
            }
        }
    }
    let total = arcs.len();
    let walk = hierholzer(n, arcs);
    if walk.len() != total {
        return Err(Error::TheoremViolation {
            what: "marked arcs are not weakly connected".into(),
            instance: instance_dump(words),
        });
    }
    GridWalk::from_arcs(n, walk).map_err(|e| Error::TheoremViolation {
        what: format!("boundary walk: {e}"),
        instance: instance_dump(words),
    })
}

/// Eulerian circuit of a balanced arc multiset, starting at the least vertex
/// `(c, ρ)` with an outgoing arc; out-arcs are tried horizontal first.
fn hierholzer(n: usize, mut arcs: Vec<GridArc>) -> Vec<GridArc> {
    arcs.sort();
    let mut out: Vec<Vec<GridArc>> = vec![vec![]; n * n];
    let id = |(c, r): (usize, usize)| r * n + c;
    // popped from the back, so store in reverse
    for a in arcs.iter().rev() {
        out[id(a.tail)].push(*a);
    }
    let Some(start) = arcs.iter().map(|a| a.tail).min() else {
        return vec![];
    };
    let mut stack: Vec<(usize, usize)> = vec![start];
    let mut via: Vec<Option<GridArc>> = vec![None];
    let mut circuit = Vec::with_capacity(arcs.len());
    while let Some(&v) = stack.last() {
        if let Some(a) = out[id(v)].pop() {
            stack.push(a.head(n));
            via.push(Some(a));
        } else {
            stack.pop();
            if let Some(Some(a)) = via.pop() {
                circuit.push(a);
            }
        }
    }
    circuit.reverse();
    circuit
}

/// A selected diagonal cycle with its crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSelection {
    pub cycle: DiagonalCycle,
    pub crossings: Vec<(usize, usize)>,
}

/// The least offset whose cycle is not crossed at the head of a vertical
/// arc (offset 0 when the walk has no horizontal arc), re-checked to cross at
/// most once.
pub fn find_diagonal_cycle(walk: &GridWalk) -> Result<DiagonalSelection> {
    let n = walk.n();
    let offset = if walk.counts().0 == 0 {
        0
    } else {
        let mut blocked = vec![false; n];
        for (v, a, b) in walk.turns() {
            if a == ArcKind::Vertical && b == ArcKind::Vertical {
                blocked[(v.0 + n - v.1) % n] = true;
            }
        }
        blocked.iter().position(|&b| !b).ok_or_else(|| {
            Error::Invariant("every diagonal is crossed at the head of a vertical arc".into())
        })?
    };
    let crossings = walk.crossings(offset);
    if crossings.len() > 1 {
        return Err(Error::Invariant(format!(
            "diagonal {offset} crosses the walk {} times",
            crossings.len()
        )));
    }
    Ok(DiagonalSelection {
        cycle: DiagonalCycle { n, offset },
        crossings,
    })
}

/// Output of [`solve_words`]: `result[c] = words[perm[c]][c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSolution {
    /// Shift in the sorted indexing: letter `c` comes from sorted word `(c + k) mod n`.
    pub shift: usize,
    pub perm: Vec<usize>,
    pub result: Word,
    pub walk: GridWalk,
    pub selection: DiagonalSelection,
}

/// A permutation `π` with `alternation(w_0^{π(0)} ⋯ w_{n−1}^{π(n−1)}) ≤ 2`
/// built from the diagonal construction.
pub fn solve_words(words: &[Word]) -> Result<WordSolution> {
    let n = words.len();
    if n == 0 {
        return Err(Error::invalid("no words"));
    }
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::invalid(format!(
            "{n} words but {w} has length {}",
            w.len()
        )));
    }
    let order = sort_order(words)?;
    let sorted: Vec<Word> = order.iter().map(|&i| words[i].clone()).collect();
    let walk = build_grid_walk(&sorted)?;
    let selection = find_diagonal_cycle(&walk)?;
    let shift = (n - selection.cycle.offset) % n;
    let perm: Vec<usize> = (0..n).map(|c| order[(c + shift) % n]).collect();
    let result = Word((0..n).map(|c| words[perm[c]].get(c)).collect());
    if alternation_number(&result) > 2 {
        return Err(Error::TheoremViolation {
            what: format!(
                "diagonal word {result} has alternation number {}",
                alternation_number(&result)
            ),
            instance: instance_dump(words),
        });
    }
    Ok(WordSolution {
        shift,
        perm,
        result,
        walk,
        selection,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Backtracking over permutations, pruned on prefixes; `n ≤ 7`.
    Permutations,
    /// Bipartite matching against each of the `2n` candidate results.
    Candidates,
}

pub const ORACLE_MAX_PERMUTATION_N: usize = 7;
pub const ORACLE_MAX_CANDIDATE_N: usize = 512;

/// Brute-force search for any valid permutation, independent of the grid
/// construction.
pub fn oracle_words(words: &[Word], mode: OracleMode) -> Result<Option<Vec<usize>>> {
    let n = words.len();
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::invalid(format!(
            "{n} words but {w} has length {}",
            w.len()
        )));
    }
    let (limit, what) = match mode {
        OracleMode::Permutations => (ORACLE_MAX_PERMUTATION_N, "permutation oracle size"),
        OracleMode::Candidates => (ORACLE_MAX_CANDIDATE_N, "candidate oracle size"),
    };
    if n > limit {
        return Err(Error::LimitExceeded {
            what,
            value: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(Some(vec![]));
    }
    Ok(match mode {
        OracleMode::Permutations => {
            let mut perm = Vec::with_capacity(n);
            let mut used = vec![false; n];
            backtrack(words, &mut perm, &mut used, 1).then_some(perm)
        }
        OracleMode::Candidates => candidate_words(n).into_iter().find_map(|r| {
            let adj: Vec<Vec<usize>> = (0..n)
                .map(|c| (0..n).filter(|&i| words[i].get(c) == r.get(c)).collect())
                .collect();
            saturating_matching(&adj, n)
        }),
    })
}

fn backtrack(words: &[Word], perm: &mut Vec<usize>, used: &mut [bool], runs: usize) -> bool {
    let c = perm.len();
    if c == words.len() {
        return true;
    }
    for i in 0..words.len() {
        if used[i] {
            continue;
        }
        let runs2 = match perm.last() {
            Some(&p) if words[p].get(c - 1) != words[i].get(c) => runs + 1,
            _ => runs,
        };
        if runs2 > 2 {
            continue;
        }
        used[i] = true;
        perm.push(i);
        if backtrack(words, perm, used, runs2) {
            return true;
        }
        perm.pop();
        used[i] = false;
    }
    false
}

/// All words of length `n ≥ 1` with alternation number at most two, in
/// `⪯_b` order.
pub fn candidate_words(n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = (0..=n)
        .flat_map(|split| {
            [true, false].map(|first| {
                Word(
                    (0..n)
                        .map(|c| if c < split { first } else { !first })
                        .collect(),
                )
            })
        })
        .filter(|w| !w.is_empty())
        .collect();
    out.sort_by(cmp_b);
    out.dedup();
    out
}
