//! Named arcs and curves of the 43-puncture disk model, and upper
//! envelopes of label sets.
//!
//! All objects here are [`ChainSpec`]s (drawn chains, see [`crate::passage`])
//! in the standard configuration of [`crate::disk`]: position 1 is `a`,
//! positions 2..=6 are `t5..t1`, block `i` occupies positions
//! `6i+1..=6i+5` (`q{i}1..q{i}5`) followed by `z{i}` at `6i+6`, except
//! that `z7` sits at 43 and `z8` on the outer boundary.
//!
//! The named families:
//!
//! * `zeta(i,j)` — arc joining `t{j}` to `q{i}{j}`, passing **below** the
//!   nearer `t`-labels and **above** everything else on its way (earlier
//!   whole blocks including their `z`, and the current block's earlier
//!   `q`-labels).
//! * `xi(i,j)` — arc with the same endpoints as `zeta(i,j)`; it also
//!   passes earlier whole blocks above, but the sides on which it passes
//!   the `t`-labels and the current block's earlier `q`-labels are free
//!   parameters here. The canonical sides are data (see
//!   [`crate::fixtures`]); they are pinned by requiring the block-local
//!   product identities checked in the test suite.
//! * `tau(k)`, `phi` — the short arcs joining the adjacent pairs
//!   (`t{k+1}`, `t{k}`) and (`a`, `t5`).
//! * `delta(i)` — the curve around the cluster `{a, t5..t1, z{i}}`; it
//!   passes earlier whole blocks above, while the side for the five
//!   `q`-labels of block `i` itself is a free parameter pinned the same
//!   way as the `xi` sides.  `delta(8)`'s cluster contains the boundary
//!   label `z8`, so it is represented by the complementary round curve
//!   around positions 7..=43 (a curve in the disk does not know which
//!   side it "encloses"; the twist along it is unambiguous).
//! * `upper_envelope(S)` — the curve bounding a disc that contains
//!   exactly the labels of `S`, with all connecting arcs running through
//!   the upper half-plane. Sets containing `z8` are represented by the
//!   envelope of the complementary set, per the same convention.
//!
//! Everything returned here is exact combinatorial data; compiling a
//! chain to a braid word is done by [`crate::twist`].

use alloc::vec::Vec;

use crate::diagram::Curve;
use crate::disk::{Label, LabelSet, N_STRANDS};
use crate::passage::{arc, ChainSpec, Side};

/// Position of `t{j}` (j = 1..=5).
pub fn pos_t(j: u8) -> usize {
    assert!((1..=5).contains(&j));
    (7 - j) as usize
}

/// Position of `q{i}{j}` (i = 1..=6, j = 1..=5).
pub fn pos_q(i: u8, j: u8) -> usize {
    assert!((1..=6).contains(&i) && (1..=5).contains(&j));
    (6 * i + j) as usize
}

/// Position of the interior label `z{i}` (i = 1..=7).
pub fn pos_z(i: u8) -> usize {
    assert!((1..=7).contains(&i));
    if i == 7 {
        43
    } else {
        (6 * i + 6) as usize
    }
}

/// The home cluster `{a, t5..t1}` at positions 1..=6.
pub fn home_cluster() -> LabelSet {
    LabelSet::window(1, 6)
}

/// The cluster `{a, t5..t1, z{i}}` surrounded by `delta(i)` (i = 1..=8).
pub fn delta_set(i: u8) -> LabelSet {
    assert!((1..=8).contains(&i));
    let mut s = home_cluster();
    s.insert(if i == 8 { Label::Z8 } else { Label::Z(i) });
    s
}

/// The arc `zeta(i,j)`: from `t{j}` to `q{i}{j}`, below the `t`-labels it
/// passes, above everything else.
pub fn zeta_chain(i: u8, j: u8) -> ChainSpec {
    let from = pos_t(j);
    let to = pos_q(i, j);
    let sides = (from + 1..to).map(|p| if p <= 6 { Side::Below } else { Side::Above });
    arc(N_STRANDS, from, to, sides)
}

/// The arc `xi(i,j)` with prescribed sides for its two free bypass
/// families: `t_side` for the `t`-labels it passes and `q_side` for the
/// current block's earlier `q`-labels. Earlier whole blocks are always
/// passed above.
pub fn xi_chain(i: u8, j: u8, t_side: Side, q_side: Side) -> ChainSpec {
    let from = pos_t(j);
    let to = pos_q(i, j);
    let sides = (from + 1..to).map(|p| {
        if p <= 6 {
            t_side
        } else if p <= (6 * i) as usize {
            Side::Above
        } else {
            q_side
        }
    });
    arc(N_STRANDS, from, to, sides)
}

/// The arc `tau(k)` joining the adjacent pair `t{k+1}`, `t{k}`
/// (k = 1..=4). Its half-twist is the plain generator at position
/// `6 - k`.
pub fn tau_chain(k: u8) -> ChainSpec {
    assert!((1..=4).contains(&k));
    arc(N_STRANDS, pos_t(k + 1), pos_t(k), [])
}

/// The arc `phi` joining the adjacent pair `a`, `t5`.
pub fn phi_chain() -> ChainSpec {
    arc(N_STRANDS, 1, 2, [])
}

/// The curve `delta(i)` for i = 1..=7: chain through `{1..=6, z{i}}`,
/// passing earlier whole blocks above and the five `q`-labels of block
/// `i` on `own_side` (for i = 7 there is no such block and `own_side` is
/// unused).
pub fn delta_chain(i: u8, own_side: Side) -> ChainSpec {
    assert!((1..=7).contains(&i));
    let z = pos_z(i);
    let mut nodes: Vec<usize> = (1..=6).collect();
    nodes.push(z);
    let mut c = ChainSpec::below(N_STRANDS, nodes);
    for p in 7..z {
        let own = i <= 6 && p > (6 * i) as usize;
        c.set_side(p, if own { own_side } else { Side::Above });
    }
    c
}

/// The curve representing `delta(8)`: its cluster contains the boundary
/// label `z8`, so it is drawn as the complementary round curve around
/// positions 7..=43.
pub fn delta8_curve() -> Curve {
    Curve::round(N_STRANDS, 7, 43)
}

/// Upper envelope `c(S)`: chain through the positions of `S` with every
/// bypassed puncture passed above. Sets containing `z8` are replaced by
/// their complement. `S` must leave at least two punctures on the drawn
/// side.
pub fn upper_envelope(s: LabelSet) -> ChainSpec {
    let mut s = s;
    if s.contains(Label::Z8) {
        s = s.complement();
    }
    assert!(s.len() >= 2, "envelope needs at least two interior labels, got {s:?}");
    let nodes: Vec<usize> = s.iter().map(|l| l.position() as usize).collect();
    let mut c = ChainSpec::below(N_STRANDS, nodes.iter().copied());
    let (lo, hi) = (nodes[0], *nodes.last().unwrap());
    for p in lo + 1..hi {
        if !nodes.contains(&p) {
            c.set_side(p, Side::Above);
        }
    }
    c
}

/// Arc joining consecutive branch points `b` and `b+1` (b = 1..=35),
/// with an upper detour over the `z`-label between them when there is
/// one.
pub fn branch_pair_chain(b: u8) -> ChainSpec {
    assert!((1..=35).contains(&b));
    let p1 = Label::from_branch_index(b).position() as usize;
    let p2 = Label::from_branch_index(b + 1).position() as usize;
    arc(N_STRANDS, p1, p2, (p1 + 1..p2).map(|_| Side::Above))
}

/// Arc from `t1` to `q{i}{j}` passing everything above: the shape that
/// `zeta(i,j)` takes once its `t`-end has been walked over to `t1` by
/// the short arcs.
pub fn t1_to_q_chain(i: u8, j: u8) -> ChainSpec {
    let to = pos_q(i, j);
    arc(N_STRANDS, 6, to, (7..to).map(|_| Side::Above))
}

/// Braid words for the disc-translation elements that the tangency
/// products must equal. All are products of commuting twists along
/// nested or disjoint curves.
pub mod rotation {
    use super::*;
    use crate::braid::BraidWord;
    use crate::twist::dehn_twist;

    /// Envelope of the home cluster together with block `i`'s five
    /// `q`-labels (earlier blocks passed above).
    pub fn cluster_q_envelope(i: u8) -> ChainSpec {
        let mut s = home_cluster();
        for j in 1..=5 {
            s.insert(Label::Q(i, j));
        }
        upper_envelope(s)
    }

    /// Envelope of the home cluster together with block `i`'s five
    /// `q`-labels and `z{i}` (earlier blocks passed above).
    pub fn cluster_qz_envelope(i: u8) -> ChainSpec {
        let mut s = home_cluster();
        for j in 1..=5 {
            s.insert(Label::Q(i, j));
        }
        s.insert(Label::Z(i));
        upper_envelope(s)
    }

    /// The braid that carries the home cluster once counterclockwise
    /// around block `i`'s five `q`-labels (over the earlier blocks, with
    /// no net spin of either cluster), then spins the home cluster's
    /// interior clockwise by a full turn and the `t`-subcluster's
    /// interior clockwise by another full turn.
    pub fn translate_around_q(i: u8) -> BraidWord {
        let n = N_STRANDS;
        let lo = 6 * i as usize + 1;
        dehn_twist(&cluster_q_envelope(i).curve())
            .concat(&BraidWord::full_twist(n, 1, 6).inverse())
            .concat(&BraidWord::full_twist(n, 1, 6).inverse())
            .concat(&BraidWord::full_twist(n, 2, 6).inverse())
            .concat(&BraidWord::full_twist(n, lo, lo + 4).inverse())
    }

    /// The braid that carries the home cluster once counterclockwise
    /// around block `i`'s `q`-labels and `z{i}` (over the earlier
    /// blocks), with no net spin of either cluster.
    pub fn translate_around_qz(i: u8) -> BraidWord {
        let n = N_STRANDS;
        let lo = 6 * i as usize + 1;
        dehn_twist(&cluster_qz_envelope(i).curve())
            .concat(&BraidWord::full_twist(n, 1, 6).inverse())
            .concat(&BraidWord::full_twist(n, lo, lo + 5).inverse())
    }

    /// The braid that carries the home cluster once counterclockwise
    /// around everything from position 7 through `hi` (contiguous), with
    /// no net spin of either cluster.
    pub fn translate_around_window(hi: usize) -> BraidWord {
        let n = N_STRANDS;
        BraidWord::full_twist(n, 1, hi)
            .concat(&BraidWord::full_twist(n, 1, 6).inverse())
            .concat(&BraidWord::full_twist(n, 7, hi).inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::{dehn_twist, geometric_intersection, half_twist};
    use crate::braid::BraidWord;
    use crate::garside::words_equal;

    #[test]
    fn zeta_sides_are_below_t_above_the_rest() {
        // zeta(2,3): t3 (pos 4) -> q23 (pos 15); below t2,t1 (5,6);
        // above block 1 and z1 (7..=12) and q21,q22 (13,14).
        let sides = [
            Side::Below,
            Side::Below,
            Side::Above,
            Side::Above,
            Side::Above,
            Side::Above,
            Side::Above,
            Side::Above,
            Side::Above,
            Side::Above,
        ];
        assert_eq!(
            zeta_chain(2, 3).curve(),
            arc(N_STRANDS, 4, 15, sides).curve()
        );
        // zeta(1,1) is the plain adjacent arc t1 -> q11.
        assert_eq!(
            half_twist(&zeta_chain(1, 1)).letters,
            BraidWord::gen(N_STRANDS, 6).letters
        );
    }

    #[test]
    fn short_arcs_are_plain_generators() {
        for k in 1..=4 {
            assert_eq!(
                half_twist(&tau_chain(k)).letters,
                BraidWord::gen(N_STRANDS, (6 - k) as u16).letters
            );
        }
        assert_eq!(
            half_twist(&phi_chain()).letters,
            BraidWord::gen(N_STRANDS, 1).letters
        );
    }

    #[test]
    fn delta_chains_enclose_their_clusters() {
        for i in 1..=7u8 {
            for side in [Side::Above, Side::Below] {
                let c = delta_chain(i, side).curve();
                for p in 1..=N_STRANDS {
                    let expect = p <= 6 || p == pos_z(i);
                    assert_eq!(c.encloses(p), expect, "delta({i}) at {p}");
                }
            }
        }
        // The two candidate sides give genuinely different curves.
        assert_ne!(
            delta_chain(1, Side::Above).curve(),
            delta_chain(1, Side::Below).curve()
        );
        // delta(8) is the complementary round window.
        assert_eq!(delta8_curve(), Curve::round(N_STRANDS, 7, 43));
    }

    #[test]
    fn upper_envelope_windows_and_complement() {
        // A contiguous set gives the round window.
        assert_eq!(
            upper_envelope(LabelSet::window(7, 12)).curve(),
            Curve::round(N_STRANDS, 7, 12)
        );
        // Sets containing z8 fall back to the complement; removing a and
        // t5 from everything leaves the round pair around them.
        assert_eq!(
            upper_envelope(crate::disk::phi_support()).curve(),
            Curve::round(N_STRANDS, 1, 2)
        );
        // The envelope's twist only sees the curve, so the two
        // representations twist identically by construction.
        assert_eq!(
            upper_envelope(delta_set(8)).curve(),
            Curve::round(N_STRANDS, 7, 43)
        );
    }

    #[test]
    fn branch_pairs_detour_over_z() {
        // Branch 11 = q15 (pos 11), branch 12 = q21 (pos 13): one z in
        // between, passed above.
        let c = branch_pair_chain(11).curve();
        assert!(c.encloses(11) && c.encloses(13) && !c.encloses(12));
        assert_eq!(c, arc(N_STRANDS, 11, 13, [Side::Above]).curve());
        // Adjacent branches compile to plain generators.
        assert_eq!(
            half_twist(&branch_pair_chain(1)).letters,
            BraidWord::gen(N_STRANDS, 1).letters
        );
        // All 35 are drawable and enclose exactly their two endpoints.
        for b in 1..=35u8 {
            let ch = branch_pair_chain(b);
            let c = ch.curve();
            let p1 = Label::from_branch_index(b).position() as usize;
            let p2 = Label::from_branch_index(b + 1).position() as usize;
            for p in 1..=N_STRANDS {
                assert_eq!(c.encloses(p), p == p1 || p == p2);
            }
        }
    }

    #[test]
    fn zeta_arcs_meet_phi_only_at_j5() {
        let phi = phi_chain().curve();
        for i in 1..=6u8 {
            for j in 1..=5u8 {
                let z = zeta_chain(i, j).curve();
                let expected = if j == 5 { 2 } else { 0 };
                assert_eq!(
                    geometric_intersection(&z, &phi),
                    expected.into(),
                    "zeta({i},{j}) vs phi"
                );
            }
        }
        // tau(4) shares t5 with phi; tau(1..3) are disjoint from it.
        for k in 1..=4u8 {
            let t = tau_chain(k).curve();
            let expected = if k == 4 { 2 } else { 0 };
            assert_eq!(geometric_intersection(&t, &phi), expected.into());
        }
        // delta curves contain the phi-arc in their disc: disjoint.
        for i in 1..=7u8 {
            for side in [Side::Above, Side::Below] {
                let d = delta_chain(i, side).curve();
                assert_eq!(geometric_intersection(&d, &phi), 0.into());
            }
        }
        assert_eq!(geometric_intersection(&delta8_curve(), &phi), 0.into());
    }

    #[test]
    fn block_envelopes_compile() {
        // The envelope of the home cluster plus block 2's q-labels:
        // encloses 1..6 and 13..17, bypasses 7..12 above, and its twist
        // word is a genuine conjugated full twist on 11 strands.
        let mut s = home_cluster();
        for j in 1..=5 {
            s.insert(Label::Q(2, j));
        }
        let env = upper_envelope(s);
        let c = env.curve();
        for p in 1..=N_STRANDS {
            let expect = p <= 6 || (13..=17).contains(&p);
            assert_eq!(c.encloses(p), expect);
        }
        let tw = dehn_twist(&c);
        assert_eq!(tw.exponent_sum(), 110);
        // For the contiguous block-1 version this is literally the round
        // full twist.
        let mut s1 = home_cluster();
        for j in 1..=5 {
            s1.insert(Label::Q(1, j));
        }
        assert!(words_equal(
            &dehn_twist(&upper_envelope(s1).curve()),
            &BraidWord::full_twist(N_STRANDS, 1, 11)
        ));
    }
}
