//! Compiling twists along drawn curves into braid words.
//!
//! The engine in [`crate::diagram`] acts on curves; this module goes
//! the other way.  Given the coordinates of a curve, [`untangle`]
//! searches for a word carrying it to a round window — steepest
//! descent on total coordinate weight, with a breadth-first sweep
//! across weight plateaus when no single letter descends.  Because the
//! full twist about a round window is the explicit word
//! `(σ_lo ⋯ σ_{hi−1})^{hi−lo+1}`, conjugating it back along the
//! untangling word compiles the Dehn twist about the original curve;
//! the analogous conjugation of a single generator compiles the
//! positive half twist along any embedded arc between two punctures.
//!
//! The module also measures geometric intersection numbers.  Applying
//! a high power `T_c^k` to a curve `a` makes every wall coordinate grow
//! like `k · i(a,c) ·` (the corresponding coordinate of `c`), with
//! error bounded by the starting coordinate, so one exact division
//! recovers `i(a,c)` — and cross-checking the division against every
//! wall at once guards the answer.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::diagram::{div_floor, Curve};
use crate::passage::ChainSpec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Result of [`untangle`]: `word` carries the curve to
/// `Curve::round(n, lo, hi)`.
#[derive(Clone, Debug)]
pub struct Untangling {
    pub word: BraidWord,
    pub lo: usize,
    pub hi: usize,
}

/// The round window a curve equals, if it is round.
pub fn round_window(c: &Curve) -> Option<(usize, usize)> {
    let enclosed: Vec<usize> = (1..=c.n).filter(|&i| c.encloses(i)).collect();
    let (&lo, &hi) = (enclosed.first()?, enclosed.last()?);
    if hi - lo + 1 != enclosed.len() {
        return None;
    }
    if *c == Curve::round(c.n, lo, hi) {
        Some((lo, hi))
    } else {
        None
    }
}

/// Search bound: plateaus larger than this abort loudly rather than
/// spin.
const PLATEAU_CAP: usize = 500_000;

/// Find a word carrying `c` to a round window.
///
/// Steepest descent: apply whichever generator letter reduces total
/// weight the most; when no letter reduces it, breadth-first search
/// through the equal-weight plateau until a strictly lighter curve is
/// found.  Deterministic (fixed tie-breaks), so compiled words are
/// reproducible.
pub fn untangle(c: &Curve) -> Untangling {
    assert!((1..=c.n).any(|i| c.encloses(i)), "cannot untangle a trivial curve");
    let n = c.n;
    let mut cur = c.clone();
    let mut letters: Vec<(u16, i8)> = Vec::new();
    loop {
        if let Some((lo, hi)) = round_window(&cur) {
            return Untangling { word: BraidWord::from_letters(n, letters), lo, hi };
        }
        let w0 = cur.weight();
        let mut best: Option<(BigInt, u16, i8, Curve)> = None;
        for k in 1..n as u16 {
            for s in [1i8, -1] {
                let img = cur.apply_gen(k as usize, s);
                let w = img.weight();
                if w < w0 && best.as_ref().map_or(true, |b| w < b.0) {
                    best = Some((w, k, s, img));
                }
            }
        }
        if let Some((_, k, s, img)) = best {
            letters.push((k, s));
            cur = img;
            continue;
        }
        let path = plateau_descend(&cur, &w0);
        for &(k, s) in &path {
            letters.push((k, s));
            cur = cur.apply_gen(k as usize, s);
        }
    }
}

/// Breadth-first search through the plateau of curves of weight `w0`
/// reachable from `start`, returning the letter path to the first
/// strictly lighter curve found.
fn plateau_descend(start: &Curve, w0: &BigInt) -> Vec<(u16, i8)> {
    let n = start.n;
    // nodes[i] = (curve, parent index, letter from parent).
    let mut nodes: Vec<(Curve, usize, (u16, i8))> = alloc::vec![(start.clone(), 0, (0, 0))];
    let mut seen: BTreeSet<Curve> = BTreeSet::new();
    seen.insert(start.clone());
    let mut head = 0;
    while head < nodes.len() {
        assert!(nodes.len() < PLATEAU_CAP, "untangling plateau exceeded search budget");
        let cur = nodes[head].0.clone();
        for k in 1..n as u16 {
            for s in [1i8, -1] {
                let img = cur.apply_gen(k as usize, s);
                let w = img.weight();
                if &w < w0 {
                    // Rebuild the path to `cur`, then append this letter.
                    let mut path = alloc::vec![(k, s)];
                    let mut at = head;
                    while at != 0 {
                        path.push(nodes[at].2);
                        at = nodes[at].1;
                    }
                    path.reverse();
                    return path;
                }
                if &w == w0 && seen.insert(img.clone()) {
                    nodes.push((img, head, (k, s)));
                }
            }
        }
        head += 1;
    }
    panic!("untangling stuck: weight plateau of size {} has no descent", nodes.len());
}

/// Word for the positive Dehn twist about the curve `c`.
pub fn dehn_twist(c: &Curve) -> BraidWord {
    let u = untangle(c);
    BraidWord::full_twist(c.n, u.lo, u.hi).conjugated_by(&u.word)
}

/// Word for the positive half twist along the arc drawn by a two-node
/// chain.
pub fn half_twist(spec: &ChainSpec) -> BraidWord {
    assert_eq!(spec.nodes.len(), 2, "half twists live on two-node chains");
    let u = untangle(&spec.curve());
    assert_eq!(u.hi, u.lo + 1, "a two-puncture curve must untangle to an adjacent pair");
    BraidWord::gen(spec.n, u.lo as u16).conjugated_by(&u.word)
}

/// Geometric intersection number `i(a, c)`, where `tc` is a word for
/// the Dehn twist about `c` (see [`dehn_twist`]).
pub fn intersection_via_twist(a: &Curve, c: &Curve, tc: &BraidWord) -> BigInt {
    assert_eq!(a.n, c.n);
    let coords = |x: &Curve| -> Vec<BigInt> {
        x.lines.iter().chain(&x.ups).chain(&x.downs).cloned().collect()
    };
    let ca = coords(a);
    let cc = coords(c);
    assert!(cc.iter().any(|v| !v.is_zero()), "twist support curve is trivial");
    let kmax: BigInt = ca.iter().max().cloned().unwrap_or_else(BigInt::zero);
    let k = &kmax * 2 + 2;
    // Apply T_c^k to a.
    let mut img = a.clone();
    let mut applied = BigInt::zero();
    while applied < k {
        img = img.apply_word(tc);
        applied += 1;
    }
    let ci = coords(&img);
    // Per-wall growth, rounded to nearest.
    let two_k = &k * 2;
    let grown: Vec<BigInt> =
        ci.iter().map(|v| div_floor(&(v * 2 + &k), &two_k)).collect();
    // grown[j] must equal i(a,c) · cc[j] for every wall j.
    let mut ratio: Option<BigInt> = None;
    for (g, c_j) in grown.iter().zip(&cc) {
        if c_j.is_zero() {
            assert!(g.is_zero(), "growth on a wall the support curve misses");
        } else {
            let q = g / c_j;
            assert_eq!(&(&q * c_j), g, "growth is not proportional to the support curve");
            match &ratio {
                None => ratio = Some(q),
                Some(r) => assert_eq!(r, &q, "inconsistent growth ratios across walls"),
            }
        }
    }
    let i = ratio.expect("support curve has a nonzero wall coordinate");
    assert!(!i.is_negative());
    i
}

/// Geometric intersection number `i(a, c)`, compiling the twist about
/// `c` on the fly.
pub fn geometric_intersection(a: &Curve, c: &Curve) -> BigInt {
    intersection_via_twist(a, c, &dehn_twist(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside;
    use crate::passage::{arc, Side};

    #[test]
    fn round_curves_untangle_trivially() {
        let u = untangle(&Curve::round(5, 2, 4));
        assert!(u.word.is_empty());
        assert_eq!((u.lo, u.hi), (2, 4));
        let w = dehn_twist(&Curve::round(5, 2, 4));
        assert_eq!(w, BraidWord::full_twist(5, 2, 4));
    }

    #[test]
    fn straight_arc_compiles_to_its_generator() {
        let w = half_twist(&arc(4, 2, 3, []));
        assert_eq!(w, BraidWord::gen(4, 2));
    }

    #[test]
    fn bypass_arc_compiles_to_a_conjugated_generator() {
        // The arc from 1 to 3 below 2 is the σ₂-image of the straight
        // arc 1–2, so its half twist is σ₂⁻¹ σ₁ σ₂.
        let w = half_twist(&arc(4, 1, 3, [Side::Below]));
        let expect = BraidWord::gen(4, 1).conjugated_by(&BraidWord::gen(4, 2).inverse());
        assert!(garside::words_equal(&w, &expect));
    }

    #[test]
    fn half_twist_squares_to_the_boundary_dehn_twist() {
        let spec = arc(5, 1, 4, [Side::Below, Side::Above]);
        let h = half_twist(&spec);
        let t = dehn_twist(&spec.curve());
        assert!(garside::words_equal(&h.concat(&h), &t));
    }

    #[test]
    fn twist_about_a_dragged_curve_is_the_conjugated_twist() {
        let u = BraidWord::from_letters(5, [(2, 1), (3, -1), (1, 1), (4, 1)]);
        let c = Curve::round(5, 1, 3).apply_word(&u);
        let w = dehn_twist(&c);
        let expect = BraidWord::full_twist(5, 1, 3).conjugated_by(&u.inverse());
        assert!(garside::words_equal(&w, &expect));
    }

    #[test]
    fn intersection_numbers_of_round_pairs() {
        let a = Curve::round(5, 1, 2);
        assert!(geometric_intersection(&a, &Curve::round(5, 2, 3)) == BigInt::from(2));
        assert!(geometric_intersection(&a, &Curve::round(5, 3, 4)) == BigInt::from(0));
        assert!(geometric_intersection(&a, &Curve::round(5, 1, 3)) == BigInt::from(0));
        assert!(geometric_intersection(&a, &a) == BigInt::from(0));
        let dragged = Curve::round(5, 2, 3).apply_word(&BraidWord::from_letters(5, [(3, 1), (4, -1)]));
        assert!(geometric_intersection(&a, &dragged) == BigInt::from(2));
    }
}
