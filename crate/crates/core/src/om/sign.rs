use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ground set a [`SignVector`] can carry.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// Sign of a permutation parity: `true` means odd.
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Rank used by the canonical lexicographic order, where `+ < - < 0`.
    fn lex_rank(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
            Sign::Zero => 2,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

/// A sign vector over the ground set `[n]`, stored as two bit masks.
///
/// Element `j` (1-based in text and reports) lives at bit `j - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: u8,
    pos: u64,
    neg: u64,
}

impl SignVector {
    pub fn zero(n: usize) -> SignVector {
        assert!(n <= MAX_ELEMENTS, "ground set of {n} elements is too large");
        SignVector {
            n: n as u8,
            pos: 0,
            neg: 0,
        }
    }

    pub fn from_masks(n: usize, pos: u64, neg: u64) -> SignVector {
        assert!(n <= MAX_ELEMENTS, "ground set of {n} elements is too large");
        assert_eq!(pos & neg, 0, "element both positive and negative");
        let full = full_mask(n);
        assert_eq!((pos | neg) & !full, 0, "mask exceeds ground set");
        SignVector {
            n: n as u8,
            pos,
            neg,
        }
    }

    pub fn from_signs(signs: &[Sign]) -> SignVector {
        let mut v = SignVector::zero(signs.len());
        for (j, &s) in signs.iter().enumerate() {
            v.set(j, s);
        }
        v
    }

    /// All-`+` vector on `[n]`.
    pub fn all_plus(n: usize) -> SignVector {
        SignVector::from_masks(n, full_mask(n), 0)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Sign at 0-based position `j`.
    pub fn get(&self, j: usize) -> Sign {
        debug_assert!(j < self.len());
        let bit = 1u64 << j;
        if self.pos & bit != 0 {
            Sign::Plus
        } else if self.neg & bit != 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, j: usize, s: Sign) {
        assert!(j < self.len());
        let bit = 1u64 << j;
        self.pos &= !bit;
        self.neg &= !bit;
        match s {
            Sign::Plus => self.pos |= bit,
            Sign::Minus => self.neg |= bit,
            Sign::Zero => {}
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len()).map(|j| self.get(j)).collect()
    }

    pub fn pos_mask(&self) -> u64 {
        self.pos
    }

    pub fn neg_mask(&self) -> u64 {
        self.neg
    }

    pub fn support_mask(&self) -> u64 {
        self.pos | self.neg
    }

    /// 0-based support positions in increasing order.
    pub fn support(&self) -> Vec<usize> {
        bits(self.support_mask()).collect()
    }

    pub fn support_size(&self) -> usize {
        self.support_mask().count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.support_mask() == 0
    }

    /// No `-` entries and not the zero vector.
    pub fn is_positive(&self) -> bool {
        self.neg == 0 && self.pos != 0
    }

    pub fn has_full_support(&self) -> bool {
        self.support_mask() == full_mask(self.len())
    }

    fn same_len(&self, other: &SignVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Composition `self ∘ other`: keep our sign where non-zero, else take theirs.
    pub fn compose(&self, other: &SignVector) -> Result<SignVector> {
        self.same_len(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignVector) -> SignVector {
        let free = !self.support_mask();
        SignVector {
            n: self.n,
            pos: self.pos | (other.pos & free),
            neg: self.neg | (other.neg & free),
        }
    }

    /// Conformal order: `self ⪯ other` iff every non-zero sign of `self` agrees with `other`.
    pub fn conforms(&self, other: &SignVector) -> Result<bool> {
        self.same_len(other)?;
        Ok(self.conforms_unchecked(other))
    }

    pub(crate) fn conforms_unchecked(&self, other: &SignVector) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    /// Restriction to the positions in `mask` (others set to zero).
    pub fn restrict(&self, mask: u64) -> SignVector {
        SignVector {
            n: self.n,
            pos: self.pos & mask,
            neg: self.neg & mask,
        }
    }

    /// Positions where the two vectors carry opposite non-zero signs.
    pub fn separation_mask(&self, other: &SignVector) -> u64 {
        (self.pos & other.neg) | (self.neg & other.pos)
    }

    /// Canonical lexicographic comparison over positions `1..=n` with `+ < - < 0`.
    pub fn cmp_lex(&self, other: &SignVector) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for j in 0..self.len() {
                let c = self.get(j).lex_rank().cmp(&other.get(j).lex_rank());
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }

    /// Order by sorted support lists, lexicographically; ties broken by [`Self::cmp_lex`].
    pub fn cmp_support_lex(&self, other: &SignVector) -> Ordering {
        self.support()
            .cmp(&other.support())
            .then_with(|| self.cmp_lex(other))
    }
}

impl Neg for SignVector {
    type Output = SignVector;
    fn neg(self) -> SignVector {
        SignVector {
            n: self.n,
            pos: self.neg,
            neg: self.pos,
        }
    }
}

impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(other)
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            write!(f, "{}", self.get(j).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignVector> {
        let signs = s
            .chars()
            .map(|c| {
                Sign::from_char(c).ok_or_else(|| Error::parse(format!("bad sign {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if signs.len() > MAX_ELEMENTS {
            return Err(Error::parse(format!(
                "sign vector longer than {MAX_ELEMENTS}"
            )));
        }
        Ok(SignVector::from_signs(&signs))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let j = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(j)
        }
    })
}
