//! Exact event-driven derivation of the tangency and collapse factors.
//!
//! The 43 interior punctures of the disk model are the fiberwise
//! intersection points of a real one-parameter family of curves: a
//! distinguished point `a` rides at the moving parameter value, five
//! *travelers* `t5..t1` ride in a cluster just beside it, and each block
//! `i` owns five *residents* `q{i}1..q{i}5` near their home positions
//! plus a stationary puncture `z{i}` (with `z8` on the boundary).  As
//! the parameter sweeps the real axis left to right, the configuration
//! evolves through a fixed schedule of events, and every critical event
//! contributes one factor of the monodromy factorization, expressed in
//! the frame of the initial (reference) configuration.
//!
//! The mechanics are the standard real-passage rules for families with
//! only real critical values, with every critical value bypassed
//! through the upper half plane:
//!
//! * **Merge** — a traveler and the matching resident of the current
//!   block collide and leave the real axis as a conjugate pair.  The
//!   recorded factor is the half twist along the straight arc between
//!   the adjacent pair.  Passing the critical value applies the
//!   clockwise square root of the local monodromy — a clockwise quarter
//!   turn of the endpoints — which in the flattened bookkeeping (hidden
//!   pairs are stored at their two slots, upper strand on the left)
//!   contributes no crossing at all.
//! * **Pass** — a real point moving right crosses a hidden conjugate
//!   pair.  It crosses the upper strand first (a positive crossing) and
//!   the lower strand second (a negative crossing).
//! * **Rebirth** — a hidden pair returns to the real axis.  The factor
//!   is again the half twist along the straight arc between the two
//!   slots; the clockwise quarter turn then lands the former upper
//!   strand on the right, a single negative crossing.
//! * **Collapse** — the cluster `{t5..t1, a, z{i}}` is pinched in a
//!   degenerate member.  The factor is the full twist along the round
//!   curve of the collapsing window (for `z8` the window through the
//!   boundary is drawn as the complementary round curve).  The passage
//!   applies the clockwise half twist of the window, reversing it.
//! * **Crossing cluster** — near each `r{i}` the five travelers pass
//!   through a near-concurrent crossing, resolved into ten pairwise
//!   exchanges in lexicographic pair order.  Each exchange is an
//!   instantaneous merge and rebirth (two recorded half twists, one
//!   negative crossing), so the ten exchanges reverse the window and
//!   their net passage is its clockwise half twist.
//!
//! Every factor is recorded as `prefix · local · prefix⁻¹`, where the
//! prefix is the accumulated passage word at that moment: this is
//! exactly transporting the local vanishing data back to the reference
//! fiber along the upper half plane.  The chronological factor list is
//! therefore a positive factorization of the full boundary twist, which
//! the test suite checks letter for letter, together with the stated
//! intermediate products (block gondolas and cumulative rotations).

use alloc::vec::Vec;

use crate::braid::{BraidWord, Letter};
use crate::disk::N_STRANDS;
use crate::envelope::{pos_q, pos_t, pos_z};

/// Label of the distinguished point `a` (labels are initial positions).
const A: u8 = 1;

fn t(j: u8) -> u8 {
    pos_t(j) as u8
}

fn q(i: u8, j: u8) -> u8 {
    pos_q(i, j) as u8
}

fn z(i: u8) -> u8 {
    pos_z(i) as u8
}

/// The critical events that record factors, in the schedule's order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Crit {
    /// Traveler `t{line}` of block `block` merges with its resident.
    Merge { block: u8, line: u8 },
    /// The hidden pair of `t{line}` returns to the axis in block `block`.
    Rebirth { block: u8, line: u8 },
    /// The `z{index}` member pinches the cluster window (index 1..=8).
    Collapse { index: u8 },
    /// One of the two tangencies of the traveler pair `(a, b)` in the
    /// crossing cluster of block `block`.
    Cluster { block: u8, a: u8, b: u8, second: bool },
}

/// A recorded factor: the event and its reference-frame braid word.
#[derive(Clone, Debug)]
pub struct Recorded {
    pub crit: Crit,
    pub word: BraidWord,
}

/// The sweep state: slot occupancy, accumulated passage word, and the
/// factors recorded so far.
pub struct Sweep {
    /// `slots[k]` is the label currently occupying slot `k + 1`.
    slots: Vec<u8>,
    /// Accumulated passage word (reference frame to current frame).
    pub prefix: BraidWord,
    pub factors: Vec<Recorded>,
}

impl Sweep {
    fn new() -> Sweep {
        Sweep {
            slots: (1..=N_STRANDS as u8).collect(),
            prefix: BraidWord::identity(N_STRANDS),
            factors: Vec::new(),
        }
    }

    /// Run the whole sweep and return the completed state.
    pub fn run() -> Sweep {
        let mut s = Sweep::new();
        for block in 1..=6 {
            s.tangency_phase(block);
            s.collapse(block);
            s.crossing_cluster(block);
        }
        s.collapse(7);
        s.collapse(8);
        assert_eq!(s.factors.len(), 188);
        s
    }

    /// Current slot (1-based) of `label`.
    fn slot_of(&self, label: u8) -> usize {
        1 + self.slots.iter().position(|&l| l == label).expect("label present")
    }

    /// Append one crossing at the adjacency `(i, i + 1)` and update the
    /// slot occupancy.
    fn cross(&mut self, i: usize, sign: i8) {
        self.prefix.letters.push(Letter::new(i as u16, sign));
        self.slots.swap(i - 1, i);
    }

    /// Record `local`, transported back to the reference frame.
    fn record(&mut self, crit: Crit, local: &BraidWord) {
        self.factors.push(Recorded { crit, word: local.conjugated_by(&self.prefix) });
    }

    /// A real point immediately left of a hidden pair moves right across
    /// it: positive crossing with the upper strand (stored left),
    /// negative with the lower.
    fn pass_pair(&mut self, mover: u8, upper: u8, lower: u8) {
        let m = self.slot_of(mover);
        assert_eq!(self.slot_of(upper), m + 1, "pair not adjacent right of mover");
        assert_eq!(self.slot_of(lower), m + 2, "pair not flattened next to mover");
        self.cross(m, 1);
        self.cross(m + 1, -1);
    }

    /// The tangency phase of block `i`: five merges with the approach
    /// passes, the crossing of `a` over the five hidden pairs, then five
    /// rebirths with the settling passes.
    fn tangency_phase(&mut self, i: u8) {
        // Entry template: a leads, travelers t5..t1 beside it, block i's
        // residents and z{i} ahead.
        let base = 6 * (i as usize - 1);
        assert_eq!(self.slot_of(A), base + 1, "block {i} entry: a");
        for j in 1..=5u8 {
            assert_eq!(self.slot_of(t(j)), base + 7 - j as usize, "block {i} entry: t{j}");
            assert_eq!(self.slot_of(q(i, j)), base + 6 + j as usize, "block {i} entry: q{i}{j}");
        }

        for k in 1..=5u8 {
            for j in 1..k {
                self.pass_pair(t(k), t(j), q(i, j));
            }
            let m = self.slot_of(t(k));
            assert_eq!(self.slot_of(q(i, k)), m + 1, "merge {i},{k} adjacency");
            self.record(Crit::Merge { block: i, line: k }, &BraidWord::gen(N_STRANDS, m as u16));
        }
        for k in 1..=5u8 {
            self.pass_pair(A, t(k), q(i, k));
        }
        for k in 1..=5u8 {
            let m = self.slot_of(t(k));
            assert_eq!(self.slot_of(q(i, k)), m + 1, "rebirth {i},{k} adjacency");
            self.record(Crit::Rebirth { block: i, line: k }, &BraidWord::gen(N_STRANDS, m as u16));
            self.cross(m, -1);
            for j in k + 1..=5u8 {
                self.pass_pair(t(k), t(j), q(i, j));
            }
        }
    }

    /// The collapse at `z{idx}`.
    fn collapse(&mut self, idx: u8) {
        if idx <= 7 {
            // The window contains the travelers, `a`, and `z{idx}`,
            // contiguously.
            let mut member_slots: Vec<usize> =
                (1..=5).map(|j| self.slot_of(t(j))).chain([self.slot_of(A), self.slot_of(z(idx))]).collect();
            member_slots.sort_unstable();
            let (lo, hi) = (member_slots[0], member_slots[6]);
            assert_eq!(member_slots, (lo..=hi).collect::<Vec<_>>(), "collapse window {idx} contiguous");
            self.record(Crit::Collapse { index: idx }, &BraidWord::full_twist(N_STRANDS, lo, hi));
            let d = BraidWord::half_twist_delta(N_STRANDS, lo, hi).inverse();
            self.prefix = self.prefix.concat(&d);
            self.slots[lo - 1..hi].reverse();
        } else {
            // z8 lives on the boundary: the window through it is drawn
            // as the complementary round window, here slots 1..=37.
            for (j, slot) in (1..=5u8).map(|j| (j, 37 + j as usize)).collect::<Vec<_>>() {
                assert_eq!(self.slot_of(t(j)), slot, "final caravan: t{j}");
            }
            assert_eq!(self.slot_of(A), 43, "final caravan: a");
            self.record(Crit::Collapse { index: 8 }, &BraidWord::full_twist(N_STRANDS, 1, 37));
        }
    }

    /// The crossing cluster of block `i`: the five travelers pass
    /// through a near-concurrent crossing, resolved into ten pairwise
    /// exchanges in lexicographic pair order.  Each exchange is an
    /// instantaneous merge and rebirth of the momentarily adjacent pair:
    /// two recorded half twists along the straight arc between the two
    /// slots, then the single negative crossing of the rebirth.  The ten
    /// negative crossings accumulate to the clockwise half turn of the
    /// window, reversing the travelers.
    fn crossing_cluster(&mut self, i: u8) {
        let lo = self.slot_of(t(1));
        for j in 1..=5u8 {
            assert_eq!(self.slot_of(t(j)), lo + j as usize - 1, "cluster {i} order: t{j}");
        }
        for a in 1..=4u8 {
            for b in a + 1..=5u8 {
                let m = self.slot_of(t(a));
                assert_eq!(self.slot_of(t(b)), m + 1, "cluster {i} pair ({a},{b}) adjacency");
                for second in [false, true] {
                    self.record(
                        Crit::Cluster { block: i, a, b, second },
                        &BraidWord::gen(N_STRANDS, m as u16),
                    );
                }
                self.cross(m, -1);
            }
        }
        for j in 1..=5u8 {
            assert_eq!(self.slot_of(t(j)), lo + 5 - j as usize, "cluster {i} exit: t{j}");
        }
    }

    /// The labels in slot order after the sweep.
    pub fn final_slots(&self) -> &[u8] {
        &self.slots
    }

    /// The recorded factor of one event.
    pub fn factor(&self, crit: Crit) -> &Recorded {
        self.factors.iter().find(|r| r.crit == crit).expect("event recorded")
    }

    /// Chronological factor words with every collapse factor repeated
    /// `collapse_mult` times (1 for the plain passage product, 2 for the
    /// doubled lists used at the covering level).
    pub fn words(&self, collapse_mult: usize) -> Vec<BraidWord> {
        let mut out = Vec::new();
        for r in &self.factors {
            let reps = if matches!(r.crit, Crit::Collapse { .. }) { collapse_mult } else { 1 };
            for _ in 0..reps {
                out.push(r.word.clone());
            }
        }
        out
    }
}
