use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::matrix::RationalMatrix;
use super::sign::{Sign, SignVector, MAX_ELEMENTS};
use crate::error::{Error, Result};

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflows usize")
}

/// Parity of the permutation sorting `xs` (all distinct).
pub(crate) fn sort_parity(xs: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// A rank-`r` chirotope on `[n]`: one sign per sorted `r`-subset, stored in
/// lexicographic subset order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: usize,
    r: usize,
    values: Vec<Sign>,
}

impl Chirotope {
    pub fn new(n: usize, r: usize, values: Vec<Sign>) -> Result<Chirotope> {
        if r > n {
            return Err(Error::invalid(format!(
                "rank {r} exceeds ground set size {n}"
            )));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::LimitExceeded {
                what: "ground set size",
                value: n,
                limit: MAX_ELEMENTS,
            });
        }
        let expected = binomial(n, r);
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: expected,
            });
        }
        if values.iter().all(|s| s.is_zero()) {
            return Err(Error::invalid("chirotope is identically zero"));
        }
        Ok(Chirotope { n, r, values })
    }

    /// Signs of the maximal minors of a full-row-rank matrix.
    pub fn from_matrix(m: &RationalMatrix) -> Result<Chirotope> {
        let rank = m.rank();
        if rank < m.rows() {
            return Err(Error::RankDeficient {
                rank,
                expected: m.rows(),
            });
        }
        let values = (0..m.cols())
            .combinations(m.rows())
            .map(|b| m.minor_sign(&b))
            .collect();
        Chirotope::new(m.cols(), m.rows(), values)
    }

    /// The all-`+` chirotope of rank `r` on `[n]`.
    pub fn alternating(n: usize, r: usize) -> Result<Chirotope> {
        if r == 0 || r > n {
            return Err(Error::invalid(format!(
                "alternating chirotope needs 1 <= r <= n, got r={r}, n={n}"
            )));
        }
        Chirotope::new(n, r, vec![Sign::Plus; binomial(n, r)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    /// Lexicographic index of a sorted `r`-subset of `0..n`.
    fn subset_index(&self, b: &[usize]) -> usize {
        let (n, k) = (self.n, self.r);
        let mut idx = 0;
        let mut prev: Option<usize> = None;
        for (t, &x) in b.iter().enumerate() {
            let start = prev.map_or(0, |p| p + 1);
            for v in start..x {
                idx += binomial(n - 1 - v, k - 1 - t);
            }
            prev = Some(x);
        }
        idx
    }

    /// Value on a sorted `r`-subset (0-based elements).
    pub fn value(&self, sorted: &[usize]) -> Sign {
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        self.values[self.subset_index(sorted)]
    }

    /// Value on an arbitrary ordered `r`-tuple, extended by alternation.
    pub fn sign_of(&self, tuple: &[usize]) -> Sign {
        assert_eq!(tuple.len(), self.r);
        let mut sorted = tuple.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Sign::Zero;
        }
        let s = self.value(&sorted);
        if sort_parity(tuple) {
            -s
        } else {
            s
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.values.iter().all(|s| !s.is_zero())
    }

    pub fn negated(&self) -> Chirotope {
        Chirotope {
            n: self.n,
            r: self.r,
            values: self.values.iter().map(|&s| -s).collect(),
        }
    }

    /// Reorientation on the elements in `mask`.
    pub fn reoriented(&self, mask: u64) -> Chirotope {
        let values = (0..self.n)
            .combinations(self.r)
            .zip(&self.values)
            .map(|(b, &s)| {
                let flips = b.iter().filter(|&&x| mask >> x & 1 == 1).count();
                if flips % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        Chirotope {
            n: self.n,
            r: self.r,
            values,
        }
    }

    /// The dual chirotope of rank `n - r`:
    /// `χ*(x) = χ(y) · sign(x, y)` with `y` the sorted complement of `x`.
    pub fn dual(&self) -> Chirotope {
        let values = (0..self.n)
            .combinations(self.n - self.r)
            .map(|x| {
                let y: Vec<usize> = (0..self.n).filter(|e| !x.contains(e)).collect();
                let mut perm = x.clone();
                perm.extend_from_slice(&y);
                let s = self.value(&y);
                if sort_parity(&perm) {
                    -s
                } else {
                    s
                }
            })
            .collect();
        Chirotope {
            n: self.n,
            r: self.n - self.r,
            values,
        }
    }

    /// Signed circuits, both orientations of each, in canonical order.
    pub fn circuits(&self) -> Vec<SignVector> {
        let mut candidates: HashSet<SignVector> = HashSet::new();
        for lambda in (0..self.n).combinations(self.r + 1) {
            let mut c = SignVector::zero(self.n);
            for (i, &li) in lambda.iter().enumerate() {
                let rest: Vec<usize> = lambda.iter().copied().filter(|&x| x != li).collect();
                let s = self.value(&rest);
                c.set(li, if i % 2 == 1 { -s } else { s });
            }
            if !c.is_zero() {
                candidates.insert(c);
            }
        }
        let supports: BTreeSet<u64> = candidates.iter().map(|c| c.support_mask()).collect();
        let mut out: BTreeSet<SignVector> = BTreeSet::new();
        for c in candidates {
            let s = c.support_mask();
            let minimal = supports.iter().all(|&t| t == s || t & !s != 0);
            if minimal {
                out.insert(c);
                out.insert(-c);
            }
        }
        out.into_iter().collect()
    }

    /// Elements that are zero in every cocircuit (equivalently, in no basis).
    pub fn loops(&self) -> Vec<usize> {
        let mut in_basis = 0u64;
        for (b, s) in (0..self.n).combinations(self.r).zip(&self.values) {
            if !s.is_zero() {
                for x in b {
                    in_basis |= 1 << x;
                }
            }
        }
        (0..self.n).filter(|&e| in_basis >> e & 1 == 0).collect()
    }

    /// Elements contained in every basis (zero in every circuit).
    pub fn coloops(&self) -> Vec<usize> {
        self.dual().loops()
    }

    /// Bases as bitmasks.
    pub fn bases(&self) -> Vec<u64> {
        (0..self.n)
            .combinations(self.r)
            .zip(&self.values)
            .filter(|(_, s)| !s.is_zero())
            .map(|(b, _)| b.iter().fold(0u64, |m, &x| m | 1 << x))
            .collect()
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.r)?;
        for s in &self.values {
            write!(f, "{}", s.to_char())?;
        }
        writeln!(f)
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: String = self.values.iter().map(|s| s.to_char()).collect();
        write!(f, "Chirotope(n={}, r={}, {})", self.n, self.r, vals)
    }
}

impl FromStr for Chirotope {
    type Err = Error;

    /// The `.chi` format: `"n r"` on line one, the value string on line two,
    /// an optional trailing newline, nothing else.
    fn from_str(s: &str) -> Result<Chirotope> {
        let body = s.strip_suffix('\n').unwrap_or(s);
        let mut lines = body.split('\n');
        let header = lines.next().ok_or_else(|| Error::parse("missing header"))?;
        let values = lines
            .next()
            .ok_or_else(|| Error::parse("missing value line"))?;
        if lines.next().is_some() {
            return Err(Error::parse("unexpected extra lines"));
        }
        let (n, r) = header
            .split_once(' ')
            .ok_or_else(|| Error::parse(format!("bad header {header:?}")))?;
        let parse_num = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(format!("bad number {t:?} in header")));
            }
            t.parse()
                .map_err(|_| Error::parse(format!("bad number {t:?}")))
        };
        let (n, r) = (parse_num(n)?, parse_num(r)?);
        if r > n {
            return Err(Error::parse(format!("rank {r} exceeds n {n}")));
        }
        let values = values
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                '0' => Ok(Sign::Zero),
                _ => Err(Error::parse(format!("bad chirotope byte {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() != binomial(n, r) {
            return Err(Error::parse(format!(
                "expected {} values, found {}",
                binomial(n, r),
                values.len()
            )));
        }
        Chirotope::new(n, r, values)
    }
}
