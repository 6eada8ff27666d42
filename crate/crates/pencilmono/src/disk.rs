//! The marked disk underlying the whole computation.
//!
//! The base surface is a disk with 43 interior marked points on the
//! real axis and one distinguished boundary label.  In left-to-right
//! order the interior labels are
//!
//! ```text
//!   a  t5 t4 t3 t2 t1  q11..q15 z1  q21..q25 z2  …  q61..q65 z6  z7
//! ```
//!
//! that is: one label `a`, five labels `t5 > … > t1` (written here in
//! their axis order `t5, t4, t3, t2, t1`), then six groups of five
//! `q`-labels each followed by one `z`-label, and a final `z7`.  The
//! boundary of the disk carries the label `z8`.
//!
//! The 36 labels `a`, `t*`, `q**` are branch labels: the double cover
//! constructed in [`crate::cover`] branches over them, and braid-group
//! elements permute them.  The seven interior `z`-labels and `z8` are
//! unbranched punctures (section values of an elliptic fibration); they
//! are never moved by the mapping classes considered here, but curves
//! may enclose them.
//!
//! Positions are 1-based along the axis; `z8` is assigned position 44
//! so that subsets of all 44 labels pack into a single `u64` bitmask.

use core::fmt;

/// Number of interior marked points (braid strands).
pub const N_STRANDS: usize = 43;

/// Number of branch labels among the interior marked points.
pub const N_BRANCH: usize = 36;

/// Axis position of `z8` in set bitmasks (one past the last strand).
pub const POS_Z8: u8 = 44;

/// One of the 44 labels of the marked disk.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    /// The label `a`, leftmost on the axis.
    A,
    /// `t{k}`, `k = 1..=5`; on the axis they appear as `t5 t4 t3 t2 t1`.
    T(u8),
    /// `q{i}{j}`, `i = 1..=6`, `j = 1..=5`.
    Q(u8, u8),
    /// Interior `z{i}`, `i = 1..=7`.
    Z(u8),
    /// The boundary label `z8`.
    Z8,
}

impl Label {
    /// Axis position, 1..=43 for interior labels, 44 for `z8`.
    pub fn position(self) -> u8 {
        match self {
            Label::A => 1,
            Label::T(k) => {
                assert!((1..=5).contains(&k));
                7 - k
            }
            Label::Q(i, j) => {
                assert!((1..=6).contains(&i) && (1..=5).contains(&j));
                6 * i + j
            }
            Label::Z(i) => {
                assert!((1..=7).contains(&i));
                if i == 7 {
                    43
                } else {
                    6 * i + 6
                }
            }
            Label::Z8 => POS_Z8,
        }
    }

    /// Inverse of [`position`](Self::position).
    pub fn from_position(p: u8) -> Label {
        assert!((1..=POS_Z8).contains(&p));
        match p {
            1 => Label::A,
            2..=6 => Label::T(7 - p),
            43 => Label::Z(7),
            POS_Z8 => Label::Z8,
            _ => {
                let i = (p - 1) / 6;
                let j = p - 6 * i;
                if j == 6 {
                    Label::Z(i)
                } else {
                    Label::Q(i, j)
                }
            }
        }
    }

    /// True for the 36 labels over which the double cover branches.
    pub fn is_branch(self) -> bool {
        matches!(self, Label::A | Label::T(_) | Label::Q(_, _))
    }

    /// Branch numbering 1..=36: `a` is 1, then `t5..t1`, then the `q`
    /// groups in axis order.
    pub fn branch_index(self) -> Option<u8> {
        if !self.is_branch() {
            return None;
        }
        let p = self.position();
        Some(p - count_z_before(p))
    }

    /// Inverse of [`branch_index`](Self::branch_index).
    pub fn from_branch_index(b: u8) -> Label {
        assert!((1..=N_BRANCH as u8).contains(&b));
        if b <= 6 {
            Label::from_position(b)
        } else {
            let g = (b - 7) / 5; // q-group 0..=5
            let j = (b - 7) % 5 + 1;
            Label::Q(g + 1, j)
        }
    }
}

/// How many interior `z`-labels lie strictly left of position `p`.
fn count_z_before(p: u8) -> u8 {
    let mut c = 0;
    for i in 1..=7u8 {
        if Label::Z(i).position() < p {
            c += 1;
        }
    }
    c
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A => write!(f, "a"),
            Label::T(k) => write!(f, "t{k}"),
            Label::Q(i, j) => write!(f, "q{i}{j}"),
            Label::Z(i) => write!(f, "z{i}"),
            Label::Z8 => write!(f, "z8"),
        }
    }
}

/// A subset of the 44 labels, packed as a bitmask by axis position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(pub u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    /// All 44 labels.
    pub fn full() -> LabelSet {
        LabelSet((1u64 << POS_Z8) - 1)
    }

    pub fn from_labels<I: IntoIterator<Item = Label>>(it: I) -> LabelSet {
        let mut s = LabelSet::EMPTY;
        for l in it {
            s.insert(l);
        }
        s
    }

    /// All labels with positions in `lo..=hi`.
    pub fn window(lo: u8, hi: u8) -> LabelSet {
        assert!(1 <= lo && lo <= hi && hi <= POS_Z8);
        LabelSet(((1u64 << hi) - 1) ^ ((1u64 << (lo - 1)) - 1))
    }

    pub fn insert(&mut self, l: Label) {
        self.0 |= 1 << (l.position() - 1);
    }

    pub fn remove(&mut self, l: Label) {
        self.0 &= !(1 << (l.position() - 1));
    }

    pub fn contains(self, l: Label) -> bool {
        self.0 & (1 << (l.position() - 1)) != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: LabelSet) -> LabelSet {
        LabelSet(self.0 | o.0)
    }

    pub fn inter(self, o: LabelSet) -> LabelSet {
        LabelSet(self.0 & o.0)
    }

    pub fn minus(self, o: LabelSet) -> LabelSet {
        LabelSet(self.0 & !o.0)
    }

    /// Complement within the full 44-label set.
    pub fn complement(self) -> LabelSet {
        LabelSet::full().minus(self)
    }

    /// Labels in increasing axis order.
    pub fn iter(self) -> impl Iterator<Item = Label> {
        let bits = self.0;
        (1..=POS_Z8).filter_map(move |p| {
            if bits & (1 << (p - 1)) != 0 {
                Some(Label::from_position(p))
            } else {
                None
            }
        })
    }

    /// Smallest position present, if any.
    pub fn min_pos(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as u8 + 1)
        }
    }

    /// Largest position present, if any.
    pub fn max_pos(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as u8)
        }
    }

    /// Number of `z`-labels in the set (including `z8`).
    pub fn z_count(self) -> u32 {
        self.iter().filter(|l| !l.is_branch()).count() as u32
    }

    /// True if the set is a contiguous run of positions.
    pub fn is_window(self) -> bool {
        match (self.min_pos(), self.max_pos()) {
            (Some(lo), Some(hi)) => self == LabelSet::window(lo, hi),
            _ => false,
        }
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for l in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// The five `t`-labels.
pub fn t_set() -> LabelSet {
    LabelSet::from_labels((1..=5).map(Label::T))
}

/// The `q`-group `i`.
pub fn q_set(i: u8) -> LabelSet {
    LabelSet::from_labels((1..=5).map(|j| Label::Q(i, j)))
}

/// The support of the global symmetry used throughout: every label
/// except `a` and `t5`.
pub fn phi_support() -> LabelSet {
    let mut s = LabelSet::full();
    s.remove(Label::A);
    s.remove(Label::T(5));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_roundtrip_and_order() {
        for p in 1..=POS_Z8 {
            assert_eq!(Label::from_position(p).position(), p);
        }
        // Spot values of the published axis order.
        assert_eq!(Label::A.position(), 1);
        assert_eq!(Label::T(5).position(), 2);
        assert_eq!(Label::T(1).position(), 6);
        assert_eq!(Label::Q(1, 1).position(), 7);
        assert_eq!(Label::Q(1, 5).position(), 11);
        assert_eq!(Label::Z(1).position(), 12);
        assert_eq!(Label::Q(2, 1).position(), 13);
        assert_eq!(Label::Z(5).position(), 36);
        assert_eq!(Label::Q(6, 1).position(), 37);
        assert_eq!(Label::Z(6).position(), 42);
        assert_eq!(Label::Z(7).position(), 43);
        assert_eq!(Label::Z8.position(), 44);
    }

    #[test]
    fn branch_indices_enumerate_branch_labels() {
        let mut seen = [false; N_BRANCH + 1];
        let mut count = 0;
        for p in 1..=POS_Z8 {
            let l = Label::from_position(p);
            match l.branch_index() {
                Some(b) => {
                    assert!(l.is_branch());
                    assert!(!seen[b as usize], "duplicate branch index {b}");
                    seen[b as usize] = true;
                    assert_eq!(Label::from_branch_index(b), l);
                    count += 1;
                }
                None => assert!(!l.is_branch()),
            }
        }
        assert_eq!(count, N_BRANCH);
        // Branch order follows axis order.
        assert_eq!(Label::from_branch_index(1), Label::A);
        assert_eq!(Label::from_branch_index(2), Label::T(5));
        assert_eq!(Label::from_branch_index(6), Label::T(1));
        assert_eq!(Label::from_branch_index(7), Label::Q(1, 1));
        assert_eq!(Label::from_branch_index(12), Label::Q(2, 1));
        assert_eq!(Label::from_branch_index(36), Label::Q(6, 5));
    }

    #[test]
    fn label_sets_behave() {
        let t = t_set();
        assert_eq!(t.len(), 5);
        assert!(t.is_window());
        assert_eq!(t.min_pos(), Some(2));
        assert_eq!(t.max_pos(), Some(6));
        assert_eq!(t.z_count(), 0);

        let q3 = q_set(3);
        assert_eq!(q3.len(), 5);
        assert!(q3.is_window());
        assert_eq!(q3.min_pos(), Some(19));

        let phi = phi_support();
        assert_eq!(phi.len(), 42);
        assert!(!phi.contains(Label::A));
        assert!(!phi.contains(Label::T(5)));
        assert!(phi.contains(Label::Z8));
        assert!(phi.is_window());

        let full = LabelSet::full();
        assert_eq!(full.len(), 44);
        assert_eq!(full.z_count(), 8);
        assert_eq!(t.complement().len(), 39);
    }
}
