//! Garside left-greedy normal form for braid words.
//!
//! Elements are written `Δ^p · A_1 ⋯ A_r` where each `A_j` is a simple
//! (permutation) braid, `A_1 ≠ Δ`, `A_r ≠ 1`, and every adjacent pair is
//! left-weighted: `S(A_{j+1}) ⊆ F(A_j)`.  Two words are equal in the
//! braid group iff their normal forms agree, which gives a solution of
//! the word problem completely independent of the curve-diagram engine.
//!
//! Permutations are stored as position maps: `perm[p]` is the final
//! position of the strand occupying position `p` at the start.  Products
//! compose left to right, matching [`crate::braid`].

use crate::braid::BraidWord;
use alloc::vec;
use alloc::vec::Vec;

/// A permutation of `0..n` as a position map.
pub type Perm = Vec<u16>;

fn perm_identity(n: usize) -> Perm {
    (0..n as u16).collect()
}

fn perm_is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &v)| i as u16 == v)
}

/// The half-twist `Δ` has position map `p ↦ n−1−p`.
fn perm_delta(n: usize) -> Perm {
    (0..n as u16).rev().collect()
}

fn perm_is_delta(p: &Perm) -> bool {
    let n = p.len() as u16;
    p.iter().enumerate().all(|(i, &v)| v == n - 1 - i as u16)
}

/// Compose position maps left to right: apply `a`, then `b`.
fn perm_compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn perm_inverse(p: &Perm) -> Perm {
    let mut inv = vec![0u16; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u16;
    }
    inv
}

/// Conjugation by `Δ`: `τ(A) = Δ⁻¹ A Δ`, i.e. `ω ∘ π ∘ ω` on position
/// maps where `ω` is order reversal.
fn perm_flip(p: &Perm) -> Perm {
    let n = p.len();
    let mut out = vec![0u16; n];
    for (i, &v) in p.iter().enumerate() {
        out[n - 1 - i] = (n - 1) as u16 - v;
    }
    out
}

/// Starting set of the simple braid of `π`: `i ∈ S` iff `σ_{i+1}` (1-based
/// `i+1`) is a prefix, iff the strands starting at positions `i, i+1`
/// cross, iff `π(i) > π(i+1)`.  Returned as a bitmask-style boolean vec
/// indexed by `0..n-1`.
fn starting_set(p: &Perm) -> Vec<bool> {
    (0..p.len() - 1).map(|i| p[i] > p[i + 1]).collect()
}

/// Finishing set: `i ∈ F` iff the strands *ending* at positions `i, i+1`
/// cross, iff `π⁻¹(i) > π⁻¹(i+1)`.
fn finishing_set(p: &Perm) -> Vec<bool> {
    let inv = perm_inverse(p);
    (0..p.len() - 1).map(|i| inv[i] > inv[i + 1]).collect()
}

fn transposition(n: usize, i: usize) -> Perm {
    let mut p = perm_identity(n);
    p.swap(i, i + 1);
    p
}

/// Garside normal form `Δ^power · factors[0] ⋯ factors[r-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub n: usize,
    pub power: i64,
    pub factors: Vec<Perm>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    /// `Δ^{2m}` for some `m` (the center of `B_n` for `n ≥ 3`), including
    /// the identity.
    pub fn is_central_power(&self) -> bool {
        self.factors.is_empty() && self.power % 2 == 0
    }
}

/// Make the adjacent pair `(a, b)` left-weighted by transferring initial
/// letters of `b` into `a`.  Returns true if anything moved.
fn left_weight_pair(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let f = finishing_set(a);
        let s = starting_set(b);
        let mut did = false;
        for i in 0..n - 1 {
            if s[i] && !f[i] {
                // a := a·s_i (swap positions i, i+1 after a);
                // b := s_i⁻¹·b (pre-swap of b's start).
                let t = transposition(n, i);
                *a = perm_compose(a, &t);
                *b = perm_compose(&t, b);
                did = true;
                moved = true;
                break;
            }
        }
        if !did {
            return moved;
        }
    }
}

/// Compute the left-greedy normal form of a word.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.n;
    assert!(n >= 2);
    // First pass: `factors · Δ^power` with the Δ-power kept on the right,
    // so each letter costs O(n).
    let mut factors: Vec<Perm> = Vec::with_capacity(w.len());
    let mut power: i64 = 0;
    for l in &w.letters {
        let i = (l.gen - 1) as usize;
        if l.sign > 0 {
            // …Δ^p·σ = …·(τ^p σ)·Δ^p  (τ² = id, so only parity matters).
            let mut s = transposition(n, i);
            if power.rem_euclid(2) == 1 {
                s = perm_flip(&s);
            }
            factors.push(s);
        } else {
            // σ⁻¹ = Δ⁻¹·(Δσ⁻¹); Δ^p·σ⁻¹ = (τ^{p-1}(Δσ⁻¹))·Δ^{p-1}.
            // As a permutation, Δ·σ_i⁻¹ applies the reversal and then
            // swaps positions i, i+1 (an inverse crossing still swaps
            // the same two positions).
            let mut b = perm_compose(&perm_delta(n), &transposition(n, i));
            power -= 1;
            if power.rem_euclid(2) == 1 {
                b = perm_flip(&b);
            }
            factors.push(b);
        }
    }
    // Move the Δ-power to the left: Δ^p absorbs by flipping each factor
    // `power` times (parity only).
    if power.rem_euclid(2) == 1 {
        for f in factors.iter_mut() {
            *f = perm_flip(f);
        }
    }
    // Bubble until every adjacent pair is left-weighted.
    loop {
        let mut changed = false;
        let mut j = 0;
        while j + 1 < factors.len() {
            let (head, tail) = factors.split_at_mut(j + 1);
            let a = &mut head[j];
            let b = &mut tail[0];
            if left_weight_pair(a, b) {
                changed = true;
                if j > 0 {
                    j -= 1;
                    continue;
                }
            }
            j += 1;
        }
        if !changed {
            break;
        }
    }
    // Absorb leading Δ's, drop trailing identities.
    let mut start = 0;
    while start < factors.len() && perm_is_delta(&factors[start]) {
        start += 1;
    }
    power += start as i64;
    let mut end = factors.len();
    while end > start && perm_is_identity(&factors[end - 1]) {
        end -= 1;
    }
    let factors = factors[start..end].to_vec();
    debug_assert!(factors.iter().all(|f| !perm_is_delta(f) && !perm_is_identity(f)));
    NormalForm { n, power, factors }
}

/// Word-problem verdict via normal forms.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> bool {
    assert_eq!(a.n, b.n);
    normal_form(a) == normal_form(b)
}

pub fn word_is_identity(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}

/// The adjacent round pairs `round(i, i+1)`, `i = 1..n-1`.
///
/// These are the neighbourhood boundaries of the straight axis arcs,
/// whose union fills the punctured disk with a single boundary annulus
/// left over.
pub fn probe_curves(n: usize) -> Vec<crate::diagram::Curve> {
    (1..n).map(|i| crate::diagram::Curve::round(n, i, i + 1)).collect()
}

/// Word-problem verdict via the curve action.
///
/// Two words are equal iff they induce the same strand permutation,
/// have the same exponent sum, and act identically on the adjacent
/// round pairs.  Completeness: with permutations matching, the
/// quotient fixes every straight axis arc with orientation; those arcs
/// fill the disk, so the quotient is supported in the leftover
/// boundary annulus, i.e. is a power of the full twist — which the
/// exponent sum detects.
pub fn words_equal_action(a: &BraidWord, b: &BraidWord) -> bool {
    assert_eq!(a.n, b.n);
    a.permutation() == b.permutation()
        && a.exponent_sum() == b.exponent_sum()
        && probe_curves(a.n).iter().all(|c| c.apply_word(a) == c.apply_word(b))
}

/// Word-problem verdict computed by both engines, which must agree.
///
/// The normal form and the curve action are independent
/// implementations; any divergence between them is a bug in one of
/// the engines and aborts rather than returning a guess.
pub fn words_equal_checked(a: &BraidWord, b: &BraidWord) -> bool {
    let via_nf = words_equal(a, b);
    let via_action = words_equal_action(a, b);
    assert_eq!(via_nf, via_action, "word-problem engines disagree");
    via_nf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn generator_inverse_cancels() {
        let w = BraidWord::from_letters(4, [(2, 1), (2, -1)]);
        assert!(word_is_identity(&w));
        let w = BraidWord::from_letters(4, [(2, -1), (2, 1)]);
        assert!(word_is_identity(&w));
    }

    #[test]
    fn braid_relation_holds() {
        // σ1 σ2 σ1 = σ2 σ1 σ2.
        let a = BraidWord::from_letters(3, [(1, 1), (2, 1), (1, 1)]);
        let b = BraidWord::from_letters(3, [(2, 1), (1, 1), (2, 1)]);
        assert!(words_equal(&a, &b));
    }

    #[test]
    fn far_commutation_holds() {
        let a = BraidWord::from_letters(5, [(1, 1), (3, 1)]);
        let b = BraidWord::from_letters(5, [(3, 1), (1, 1)]);
        assert!(words_equal(&a, &b));
        let c = BraidWord::from_letters(5, [(1, 1), (2, 1)]);
        let d = BraidWord::from_letters(5, [(2, 1), (1, 1)]);
        assert!(!words_equal(&c, &d));
    }

    #[test]
    fn delta_word_normalizes_to_power() {
        let w = BraidWord::half_twist_delta(5, 1, 5);
        let nf = normal_form(&w);
        assert_eq!(nf.power, 1);
        assert!(nf.factors.is_empty());
        let w2 = w.concat(&w);
        let nf2 = normal_form(&w2);
        assert_eq!(nf2.power, 2);
        assert!(nf2.factors.is_empty());
        assert!(nf2.is_central_power());
    }

    #[test]
    fn full_twist_is_delta_squared() {
        let d2 = BraidWord::half_twist_delta(4, 1, 4);
        let d2 = d2.concat(&d2);
        let ft = BraidWord::full_twist(4, 1, 4);
        assert!(words_equal(&d2, &ft));
    }

    #[test]
    fn central_element_commutes() {
        let z = BraidWord::full_twist(4, 1, 4);
        let g = BraidWord::gen(4, 2);
        assert!(words_equal(&z.concat(&g), &g.concat(&z)));
    }

    #[test]
    fn nontrivial_words_detected() {
        assert!(!word_is_identity(&BraidWord::gen(3, 1)));
        // σ1σ2σ1σ2σ1σ2 = Δ² in B_3, nontrivial.
        let w = BraidWord::from_letters(3, [(1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1)]);
        let nf = normal_form(&w);
        assert_eq!(nf.power, 2);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn mixed_sign_word_problem() {
        // σ2 σ1 σ2⁻¹ = σ1⁻¹ σ2 σ1 (conjugate forms of the same element).
        let a = BraidWord::from_letters(3, [(2, 1), (1, 1), (2, -1)]);
        let b = BraidWord::from_letters(3, [(1, -1), (2, 1), (1, 1)]);
        assert!(words_equal(&a, &b));
    }

    #[test]
    fn action_route_agrees_on_decisive_pairs() {
        // Equal: the braid relation.
        let a = BraidWord::from_letters(4, [(1, 1), (2, 1), (1, 1)]);
        let b = BraidWord::from_letters(4, [(2, 1), (1, 1), (2, 1)]);
        assert!(words_equal_checked(&a, &b));

        // Central: the full twist fixes every probe curve and the
        // permutation; only the exponent sum separates it from 1.
        let delta2 = BraidWord::full_twist(4, 1, 4);
        let id = BraidWord::identity(4);
        assert!(garside_probe_action_only(&delta2, &id));
        assert!(!words_equal_checked(&delta2, &id));

        // Same permutation, different exponent sum.
        assert!(!words_equal_checked(&BraidWord::gen(3, 1), &BraidWord::gen(3, 1).inverse()));

        // Pure, same exponent sum, separated by the action.
        let p = BraidWord::from_letters(4, [(1, 1), (1, 1)]);
        let q = BraidWord::from_letters(4, [(2, 1), (2, 1)]);
        assert!(!words_equal_checked(&p, &q));
    }

    /// The probe-curve part of the action route alone (no permutation
    /// or exponent-sum guard), to exhibit its blind spot.
    fn garside_probe_action_only(a: &BraidWord, b: &BraidWord) -> bool {
        probe_curves(a.n).iter().all(|c| c.apply_word(a) == c.apply_word(b))
    }
}
