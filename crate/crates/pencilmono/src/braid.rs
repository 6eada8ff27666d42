//! Words in the Artin generators of the braid group on `n` strands.
//!
//! A word is a sequence of letters `σ_i^{±1}` with `1 ≤ i ≤ n−1`.  Words
//! act on everything else in the crate *left to right*: the first letter
//! of the word is the first homeomorphism applied.
//!
//! This module is purely syntactic: free reduction, inverses, exponent
//! sums and induced permutations.  Deciding equality of the underlying
//! mapping classes is the job of [`crate::diagram`] (curve action) and
//! [`crate::garside`] (normal form), which are kept independent of each
//! other so they can cross-check.

use alloc::vec::Vec;

/// One letter `σ_(gen)^(sign)`, with `gen` 1-based (`1..=n-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: u16,
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: u16, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, sign: -self.sign }
    }
}

/// A word in `B_n`.  `n` is the strand count; letters use generators
/// `1..=n-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn from_letters(n: usize, letters: impl IntoIterator<Item = (u16, i8)>) -> Self {
        let letters: Vec<Letter> = letters.into_iter().map(|(g, s)| Letter::new(g, s)).collect();
        let w = BraidWord { n, letters };
        w.debug_check();
        w
    }

    /// Single positive generator.
    pub fn gen(n: usize, i: u16) -> Self {
        BraidWord::from_letters(n, [(i, 1)])
    }

    fn debug_check(&self) {
        debug_assert!(self
            .letters
            .iter()
            .all(|l| l.gen >= 1 && (l.gen as usize) < self.n && (l.sign == 1 || l.sign == -1)));
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs.  Invariant under every relation of `B_n`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// `self` followed by `other` (left-to-right action order).
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "strand count mismatch");
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { n: self.n, letters }
    }

    /// Conjugate `w·self·w⁻¹`: as a mapping class, the twist support moves
    /// through `w⁻¹` (see the crate-level convention note).
    pub fn conjugated_by(&self, w: &BraidWord) -> BraidWord {
        w.concat(self).concat(&w.inverse())
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if let Some(&last) = out.last() {
                if last.gen == l.gen && last.sign == -l.sign {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        BraidWord { n: self.n, letters: out }
    }

    /// The induced permutation of strand positions, as the image map:
    /// `perm[p]` is the final position of the strand that starts at
    /// position `p` (0-based positions).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.n).collect(); // strand at each position
        for l in &self.letters {
            let i = (l.gen - 1) as usize;
            pos.swap(i, i + 1);
        }
        // pos[p] = strand occupying position p at the end; invert.
        let mut image = alloc::vec![0usize; self.n];
        for (p, &s) in pos.iter().enumerate() {
            image[s] = p;
        }
        image
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }

    /// The positive half-twist word `Δ` on the strands `lo..=hi`
    /// (1-based labels, like generator indices), embedded in `B_n`:
    /// `(σ_lo ⋯ σ_{hi−1})(σ_lo ⋯ σ_{hi−2}) ⋯ (σ_lo)`.
    pub fn half_twist_delta(n: usize, lo: usize, hi: usize) -> BraidWord {
        assert!(1 <= lo && lo <= hi && hi <= n);
        let mut letters = Vec::new();
        for top in (lo..hi).rev() {
            for i in lo..=top {
                letters.push(Letter::new(i as u16, 1));
            }
        }
        BraidWord { n, letters }
    }

    /// The full-twist word `Δ²` on the strands `lo..=hi` (1-based
    /// labels), written as `(σ_lo ⋯ σ_{hi−1})^(hi−lo+1)`.  As a mapping
    /// class this is the twist along the round curve about `lo..=hi`.
    pub fn full_twist(n: usize, lo: usize, hi: usize) -> BraidWord {
        assert!(1 <= lo && lo <= hi && hi <= n);
        let k = hi - lo + 1;
        let mut letters = Vec::new();
        for _ in 0..k {
            for i in lo..hi {
                letters.push(Letter::new(i as u16, 1));
            }
        }
        BraidWord { n, letters }
    }
}
