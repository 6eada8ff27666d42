//! Fast exact engine for isotopy classes of closed curves in the marked disk.
//!
//! A curve is stored by its minimal intersection numbers with a fixed wall
//! system: the vertical lines `x = j+½` between adjacent punctures and the
//! vertical rays above and below each puncture.  These counts determine the
//! isotopy class of a connected closed curve, and they are exactly what the
//! slow polygon oracle in [`crate::geom`] reads out, so the two engines are
//! directly comparable on every example.
//!
//! The action of a braid generator `σ_k` changes only the counts at the
//! line between punctures `k, k+1` and at the four rays of those two
//! punctures.  It is computed combinatorially: the restriction of the
//! curve to the two affected slabs decomposes into pieces (through
//! strands, wrapped spirals, direct U-turns, loops around the pair), the
//! piece census is recovered from the counts in closed form, each piece
//! class is mapped through a fixed table describing the half twist, and
//! the image counts are reassembled.  All arithmetic is exact
//! ([`BigInt`]); wrap multiplicities can be astronomically large, so the
//! census aggregates pieces in bulk — per class a count and a total wrap
//! number — rather than enumerating them.
//!
//! Conventions: punctures sit at `(1,0)..(n,0)`; positive `σ_k` is the
//! counterclockwise half twist exchanging punctures `k, k+1`, matching
//! the sign convention of the polygon oracle; words act left to right.
//! The negative twist table is derived from the positive one by
//! conjugating with the up/down mirror, and the positive table is stored
//! on a fundamental domain of the 180° rotation of the two-slab
//! rectangle; both symmetries are exact for the half twist.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;

/// Isotopy class of a closed curve in the disk with `n` punctures,
/// stored as reduced wall-crossing counts.
///
/// `lines[j-1]` is the crossing count with the line `x = j+½` (`j` from
/// 1 to `n-1`); `ups[i-1]` and `downs[i-1]` are the counts with the rays
/// above and below puncture `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Curve {
    pub n: usize,
    pub lines: Vec<BigInt>,
    pub ups: Vec<BigInt>,
    pub downs: Vec<BigInt>,
}

impl Curve {
    /// Curve with all counts zero (bounds a disk without punctures).
    pub fn trivial(n: usize) -> Self {
        Curve {
            n,
            lines: alloc::vec![BigInt::zero(); n - 1],
            ups: alloc::vec![BigInt::zero(); n],
            downs: alloc::vec![BigInt::zero(); n],
        }
    }

    /// Round curve enclosing exactly punctures `lo..=hi` (1-based).
    pub fn round(n: usize, lo: usize, hi: usize) -> Self {
        assert!(1 <= lo && lo <= hi && hi <= n);
        let mut c = Curve::trivial(n);
        for j in lo..hi {
            c.lines[j - 1] = BigInt::from(2);
        }
        for i in lo..=hi {
            c.ups[i - 1] = BigInt::one();
            c.downs[i - 1] = BigInt::one();
        }
        c
    }

    /// Crossing count with the line east of puncture `j`; `j = 0` and
    /// `j = n` are outside the disk and count zero.
    pub fn line(&self, j: usize) -> BigInt {
        if j == 0 || j >= self.n {
            BigInt::zero()
        } else {
            self.lines[j - 1].clone()
        }
    }

    /// True if the curve encloses puncture `i` (crossing parity with the
    /// ray below the puncture).
    pub fn encloses(&self, i: usize) -> bool {
        ((&self.downs[i - 1]) % BigInt::from(2)).is_one()
    }

    /// If this is the round curve about the single puncture `i`, return
    /// `i`.
    fn single_round(&self) -> Option<usize> {
        if !self.lines.iter().all(|g| g.is_zero()) {
            return None;
        }
        let mut found = None;
        for i in 1..=self.n {
            let u = &self.ups[i - 1];
            let d = &self.downs[i - 1];
            if u.is_zero() && d.is_zero() {
                continue;
            }
            if u.is_one() && d.is_one() && found.is_none() {
                found = Some(i);
            } else {
                return None;
            }
        }
        found
    }

    /// Apply `σ_k^{sign}`.
    pub fn apply_gen(&self, k: usize, sign: i8) -> Curve {
        assert!(1 <= k && k < self.n, "generator index out of range");
        assert!(sign == 1 || sign == -1);
        if self.lines.iter().all(|g| g.is_zero()) {
            // Nothing crosses any line: the curve is trivial or encircles
            // one puncture, and the half twist at most relabels it.
            if let Some(i) = self.single_round() {
                let mut c = self.clone();
                if i == k || i == k + 1 {
                    let j = if i == k { k + 1 } else { k };
                    c.ups[i - 1] = BigInt::zero();
                    c.downs[i - 1] = BigInt::zero();
                    c.ups[j - 1] = BigInt::one();
                    c.downs[j - 1] = BigInt::one();
                }
                return c;
            }
            assert!(
                self.ups.iter().all(|g| g.is_zero()) && self.downs.iter().all(|g| g.is_zero()),
                "unsupported curve: zero line counts with nontrivial ray counts"
            );
            return self.clone();
        }

        let rect = RectData::read(self, k);
        let inv = rect.census();
        inv.check_complete(&rect);
        let out = apply_table(&inv, sign);
        out.check_consistent(&rect);
        let mut c = self.clone();
        c.lines[k - 1] = out.g_mid.clone();
        let (upk, dnk, upk1, dnk1) = out.ray_counts();
        c.ups[k - 1] = upk;
        c.downs[k - 1] = dnk;
        c.ups[k] = upk1;
        c.downs[k] = dnk1;
        c
    }

    /// Apply a braid word, left to right.
    pub fn apply_word(&self, w: &BraidWord) -> Curve {
        assert_eq!(w.n, self.n, "strand count mismatch");
        let mut c = self.clone();
        for l in &w.letters {
            c = c.apply_gen(l.gen as usize, l.sign);
        }
        c
    }

    /// Sum of all counts; a cheap complexity measure used by untangling
    /// searches.
    pub fn weight(&self) -> BigInt {
        let mut s = BigInt::zero();
        for v in self.lines.iter().chain(&self.ups).chain(&self.downs) {
            s += v;
        }
        s
    }
}

// -------------------------------------------------------------------------
// Slab recovery.
// -------------------------------------------------------------------------

/// Structure of the two slabs around the middle line of `σ_k`, recovered
/// from the stored counts.  `wl`/`wr` count U-turn pairs attached to the
/// middle line; `dl`/`dr` count U-turn pairs attached to the outer edge
/// of their slab.
#[derive(Clone, Debug)]
pub struct RectData {
    pub g: BigInt,
    pub g_w: BigInt,
    pub g_e: BigInt,
    pub al: BigInt,
    pub bl: BigInt,
    pub wl: BigInt,
    pub dl: BigInt,
    pub ar: BigInt,
    pub br: BigInt,
    pub wr: BigInt,
    pub dr: BigInt,
}

impl RectData {
    /// Read the slab structure for `σ_k` from a curve.
    pub fn read(c: &Curve, k: usize) -> RectData {
        let g_w = c.line(k - 1);
        let g = c.line(k);
        let g_e = c.line(k + 1);
        let (al, bl, wl, dl) = slab_structure(&g_w, &g, &c.ups[k - 1], &c.downs[k - 1]);
        let (ar, br, wr, dr) = slab_structure(&g_e, &g, &c.ups[k], &c.downs[k]);
        RectData { g, g_w, g_e, al, bl, wl, dl, ar, br, wr, dr }
    }
}

/// Recover one slab from the crossing counts `far` on its outer side,
/// `near` on the middle line, and the two ray counts.  Returns
/// `(above, below, near_pairs, far_pairs)`.
fn slab_structure(
    far: &BigInt,
    near: &BigInt,
    up: &BigInt,
    down: &BigInt,
) -> (BigInt, BigInt, BigInt, BigInt) {
    let diff = near - far;
    assert!((&diff % BigInt::from(2)).is_zero(), "line crossing parity violated");
    let u = diff.abs() / BigInt::from(2);
    let (near_pairs, far_pairs) = if diff.is_negative() {
        (BigInt::zero(), u.clone())
    } else {
        (u.clone(), BigInt::zero())
    };
    let a = up - &u;
    let b = down - &u;
    assert!(
        !a.is_negative() && !b.is_negative(),
        "closed component inside a slab is not supported"
    );
    assert_eq!(
        &a + &b + BigInt::from(2) * &u,
        core::cmp::max(far, near).clone(),
        "slab counts inconsistent"
    );
    (a, b, near_pairs, far_pairs)
}

// -------------------------------------------------------------------------
// Piece classes and the census.
// -------------------------------------------------------------------------

/// Side of a puncture passed by a transit strand: above or below.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Side2 {
    A,
    B,
}

impl Side2 {
    fn flip(self) -> Side2 {
        match self {
            Side2::A => Side2::B,
            Side2::B => Side2::A,
        }
    }
}

/// Which rectangle edges the two free ends of a crossing piece reach.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    /// One end on each edge; wrap number even.
    LR,
    /// Both ends on the west edge; wrap number odd.
    LL,
    /// Both ends on the east edge; wrap number odd.
    RR,
}

/// Aggregated family of crossing pieces of one class.
///
/// For `LR` pieces `e1` is the west transit side and `e2` the east one;
/// for `LL`/`RR` the pair `{e1, e2}` is unordered and stored sorted.
/// `count` pieces with total wrap number `sum_m`; if `m_exact` is set,
/// every piece of the family has that wrap number.
#[derive(Clone, Debug)]
pub struct Fam {
    pub shape: Shape,
    pub e1: Side2,
    pub e2: Side2,
    pub m_exact: Option<u8>,
    pub count: BigInt,
    pub sum_m: BigInt,
}

/// Complete piece inventory of the rectangle.
#[derive(Clone, Debug)]
pub struct Inventory {
    pub fams: Vec<Fam>,
    /// U-turns around puncture `k` attached to the west edge.
    pub dl: BigInt,
    /// U-turns around puncture `k+1` attached to the east edge.
    pub dr: BigInt,
    /// Loops around both punctures.
    pub circ: BigInt,
}

impl RectData {
    /// Enumerate the pieces of the rectangle in bulk.
    pub fn census(&self) -> Inventory {
        let mut fams: Vec<Fam> = Vec::new();
        let mut circ2 = BigInt::zero();
        // West-anchored walks find the LR and LL pieces.
        walks(&self.g, &self.bl, &self.wl, &self.br, &self.wr, false, &mut fams, &mut circ2);
        // East-anchored walks, via the west/east swap, find the RR pieces.
        walks(&self.g, &self.br, &self.wr, &self.bl, &self.wl, true, &mut fams, &mut circ2);
        let mut fams = merge_fams(fams);
        // LL and RR pieces are found once from each of their two ends,
        // and loops once per pass; halve.
        for f in fams.iter_mut() {
            if f.shape != Shape::LR {
                f.count = exact_half(&f.count);
                f.sum_m = exact_half(&f.sum_m);
            }
        }
        let circ = exact_half(&circ2);
        Inventory { fams, dl: self.dl.clone(), dr: self.dr.clone(), circ }
    }
}

fn exact_half(v: &BigInt) -> BigInt {
    assert!((v % BigInt::from(2)).is_zero(), "count parity violated");
    v / BigInt::from(2)
}

fn merge_fams(fams: Vec<Fam>) -> Vec<Fam> {
    let mut out: Vec<Fam> = Vec::new();
    for f in fams {
        if f.count.is_zero() {
            continue;
        }
        if let Some(t) = out.iter_mut().find(|t| {
            t.shape == f.shape && t.e1 == f.e1 && t.e2 == f.e2 && t.m_exact == f.m_exact
        }) {
            t.count += &f.count;
            t.sum_m += &f.sum_m;
        } else {
            out.push(f);
        }
    }
    out
}

/// Half-open integer interval.
#[derive(Clone, Debug)]
struct Iv {
    lo: BigInt,
    hi: BigInt,
}

impl Iv {
    fn new(lo: BigInt, hi: BigInt) -> Iv {
        Iv { lo, hi }
    }

    fn len(&self) -> BigInt {
        if self.hi > self.lo {
            &self.hi - &self.lo
        } else {
            BigInt::zero()
        }
    }

    fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }

    fn meet(&self, o: &Iv) -> Iv {
        Iv {
            lo: core::cmp::max(&self.lo, &o.lo).clone(),
            hi: core::cmp::min(&self.hi, &o.hi).clone(),
        }
    }
}

/// All pieces reachable by walks that start on transit slots of the `l`
/// side of the middle line.  Labels are recorded in the walk's own
/// frame; for `flipped` (east-anchored) callers [`push_fam`] relabels
/// found LL pieces as RR pieces and drops LR pieces, which were already
/// counted from the west.
#[allow(clippy::too_many_arguments)]
fn walks(
    g: &BigInt,
    bl: &BigInt,
    wl: &BigInt,
    br: &BigInt,
    wr: &BigInt,
    flipped: bool,
    fams: &mut Vec<Fam>,
    circ2: &mut BigInt,
) {
    let two = BigInt::from(2);
    let cl: BigInt = &two * bl + &two * wl - 1;
    let cr: BigInt = &two * br + &two * wr - 1;
    let d: BigInt = &cl - &cr;
    if d.is_negative() {
        // Up/down mirror: swap above and below in both slabs, walk, then
        // flip the side labels of everything found.
        let bl2 = g - bl - &two * wl;
        let br2 = g - br - &two * wr;
        let mut sub: Vec<Fam> = Vec::new();
        walks(g, &bl2, wl, &br2, wr, false, &mut sub, circ2);
        for f in sub {
            push_fam(fams, flipped, f.shape, f.e1.flip(), f.e2.flip(), f.m_exact, f.count, f.sum_m);
        }
        return;
    }

    let tl = bl + &two * wl;
    let tr = br + &two * wr;

    // Loops around the pair exist only at zero drift: slots that are
    // U-ends on both sides pair up into two-slot cycles.
    if d.is_zero() {
        let overlap = Iv::new(bl.clone(), tl.clone()).meet(&Iv::new(br.clone(), tr.clone()));
        *circ2 += exact_half(&overlap.len());
    }

    for (start, sin) in [
        (Iv::new(BigInt::zero(), bl.clone()), Side2::B),
        (Iv::new(tl.clone(), g.clone()), Side2::A),
    ] {
        if start.is_empty() {
            continue;
        }
        // m = 0: the start slot is a transit on the far side too.
        let j = start.meet(&Iv::new(BigInt::zero(), br.clone()));
        push_fam(fams, flipped, Shape::LR, sin, Side2::B, Some(0), j.len(), BigInt::zero());
        let j = start.meet(&Iv::new(tr.clone(), g.clone()));
        push_fam(fams, flipped, Shape::LR, sin, Side2::A, Some(0), j.len(), BigInt::zero());
        let c1 = start.meet(&Iv::new(br.clone(), tr.clone()));
        if c1.is_empty() {
            continue;
        }
        // One wrap; the far end u₁ = cr − s lies outside the l window.
        let j = c1.meet(&Iv::new(&cr - bl + 1, &cr + 1));
        push_fam(fams, flipped, Shape::LL, sin, Side2::B, Some(1), j.len(), j.len());
        let j = c1.meet(&Iv::new(&cr - g + 1, &cr - &tl + 1));
        push_fam(fams, flipped, Shape::LL, sin, Side2::A, Some(1), j.len(), j.len());
        let c2 = c1.meet(&Iv::new(&cr - &tl + 1, &cr - bl + 1));
        if c2.is_empty() {
            continue;
        }
        // A zero-drift walk that continued would revisit its start slot;
        // such slots belong to loops, not walks, so the continuation
        // interval is empty whenever d = 0.
        assert!(!d.is_zero(), "zero-drift walk continued past one wrap");
        // Two wraps; s₁ = s + d leaves the r window upward, so the exit
        // transit runs above.  (For positive drift, every walk with two
        // or more wraps starts below.)
        let j = c2.meet(&Iv::new(&tr - &d, g.clone()));
        push_fam(fams, flipped, Shape::LR, sin, Side2::A, Some(2), j.len(), &two * j.len());
        let c3 = c2.meet(&Iv::new(BigInt::zero(), &tr - &d));
        if c3.is_empty() {
            continue;
        }
        // Three wraps; u₂ = u₁ − d falls below the l window.
        let m3lo: BigInt = &cr - bl - &d + 1;
        let j = c3.meet(&Iv::new(m3lo.clone(), g.clone()));
        push_fam(fams, flipped, Shape::LL, sin, Side2::B, Some(3), j.len(), BigInt::from(3) * j.len());
        let c4 = c3.meet(&Iv::new(BigInt::zero(), m3lo));
        if c4.is_empty() {
            continue;
        }
        // Tail, m ≥ 4.  With a(s) = ⌈(tr − s)/d⌉ and
        // b(s) = ⌊(cr − bl − s)/d⌋ + 2, the walk makes
        // m = min(2a, 2b − 1) wraps; even-m pieces exit east above,
        // odd-m pieces end west below, both forced by positive drift.
        let (n_ll, sm_ll, n_lr, sm_lr) = tail_split(&c4, &tr, &(&cr - bl), &d);
        push_fam(fams, flipped, Shape::LL, sin, Side2::B, None, n_ll, sm_ll);
        push_fam(fams, flipped, Shape::LR, sin, Side2::A, None, n_lr, sm_lr);
    }
}

/// Record a family found by a walk, applying the east/west relabelling
/// for flipped (east-anchored) walks and sorting unordered end pairs.
#[allow(clippy::too_many_arguments)]
fn push_fam(
    fams: &mut Vec<Fam>,
    flipped: bool,
    shape: Shape,
    e1: Side2,
    e2: Side2,
    m_exact: Option<u8>,
    count: BigInt,
    sum_m: BigInt,
) {
    if count.is_zero() {
        return;
    }
    let shape = if flipped {
        match shape {
            Shape::LR => return, // already counted by the west pass
            Shape::LL => Shape::RR,
            Shape::RR => Shape::LL,
        }
    } else {
        shape
    };
    let (e1, e2) = sort_for(shape, e1, e2);
    fams.push(Fam { shape, e1, e2, m_exact, count, sum_m });
}

/// Closed-form split of the tail walks into the odd branch
/// (`m = 2b − 1`) and the even branch (`m = 2a`), with
/// `a(s) = ⌈(p − s)/d⌉` and `b(s) = ⌊(q − s)/d⌋ + 2`, over starts `s`
/// in the interval.  Returns `(odd count, odd Σm, even count, even Σm)`.
fn tail_split(iv: &Iv, p: &BigInt, q: &BigInt, d: &BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    let zero = BigInt::zero();
    if iv.is_empty() {
        return (zero.clone(), zero.clone(), zero.clone(), zero);
    }
    let x = &iv.lo;
    let y = &iv.hi;
    let n_all = iv.len();
    let two = BigInt::from(2);
    // Σa and Σb over the whole interval, by substitution.
    let sum_a_all = sum_ceil(&(p - y + 1), &(p - x + 1), d);
    let sum_b_all = sum_floor(&(q - y + 1), &(q - x + 1), d) + &two * &n_all;
    // b − a = F(s) + 2 with F(s) = ⌊(q−s)/d⌋ + ⌊(s−p)/d⌋ ∈ {K−1, K},
    // K = ⌊(q−p)/d⌋; the odd branch is b ≤ a, i.e. F ≤ −2.
    let k = div_floor(&(q - p), d);
    if k <= BigInt::from(-2) {
        let sm = &two * &sum_b_all - &n_all;
        (n_all, sm, zero.clone(), zero)
    } else if !k.is_negative() {
        let sm = &two * &sum_a_all;
        (zero.clone(), zero, n_all, sm)
    } else {
        // K = −1: the odd branch is the residue band
        // (s − p) mod d > (q − p) mod d, and on it a = b.
        let r = (q - p) - &k * d;
        let (n_band, sum_a_band) = residue_band_sum(x, y, p, d, &r);
        let sm_odd = &two * &sum_a_band - &n_band;
        let n_even = &n_all - &n_band;
        let sm_even = &two * (&sum_a_all - &sum_a_band);
        (n_band, sm_odd, n_even, sm_even)
    }
}

/// Over `s ∈ [x, y)` with `(s − p) mod d > r`, count the terms and sum
/// `a(s) = −⌊(s − p)/d⌋`.
fn residue_band_sum(
    x: &BigInt,
    y: &BigInt,
    p: &BigInt,
    d: &BigInt,
    r: &BigInt,
) -> (BigInt, BigInt) {
    let rho_lo: BigInt = r + 1;
    let rho_hi = d.clone();
    if rho_lo >= rho_hi {
        return (BigInt::zero(), BigInt::zero());
    }
    // Write s = p + ρ + t·d with ρ ∈ [rho_lo, d); then a = −t and for
    // fixed ρ the valid range is t ∈ [⌈(x−p−ρ)/d⌉, ⌊(y−1−p−ρ)/d⌋].
    // Each endpoint, as a function of ρ, changes value at one residue;
    // split the band at those anchors and sum arithmetic series.
    let mut cuts: Vec<BigInt> = alloc::vec![rho_lo.clone(), rho_hi.clone()];
    for anchor in [x - p, y - p] {
        let m = &anchor - div_floor(&anchor, d) * d;
        if m > rho_lo && m < rho_hi {
            cuts.push(m);
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut n_tot = BigInt::zero();
    let mut sum_tot = BigInt::zero();
    for w in cuts.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let w_len = hi - lo;
        if !w_len.is_positive() {
            continue;
        }
        let t0 = ceil_div(&(x - p - lo), d);
        let t1 = div_floor(&(y - BigInt::one() - p - lo), d);
        if t1 < t0 {
            continue;
        }
        let cnt: BigInt = &t1 - &t0 + 1;
        let series: BigInt = -((&t0 + &t1) * &cnt) / BigInt::from(2);
        n_tot += &cnt * &w_len;
        sum_tot += &series * &w_len;
    }
    (n_tot, sum_tot)
}

// -------------------------------------------------------------------------
// Exact floor/ceil arithmetic helpers.
// -------------------------------------------------------------------------

pub(crate) fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    assert!(b.is_positive());
    let q = a / b;
    if (a - &q * b).is_negative() {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -div_floor(&-a, b)
}

/// `Σ_{u=0}^{N-1} ⌊u/d⌋`, extended to negative `N` as `−Σ_{u=N}^{-1}`.
fn floor_prefix(n: &BigInt, d: &BigInt) -> BigInt {
    if !n.is_negative() {
        let t = div_floor(n, d);
        let r = n - &t * d;
        d * &t * (&t - 1) / BigInt::from(2) + r * t
    } else {
        let m = -n;
        floor_prefix(&m, d) - n
    }
}

/// `Σ_{u=lo}^{hi-1} ⌊u/d⌋` for any bounds, `d > 0`.
fn sum_floor(lo: &BigInt, hi: &BigInt, d: &BigInt) -> BigInt {
    if hi <= lo {
        return BigInt::zero();
    }
    floor_prefix(hi, d) - floor_prefix(lo, d)
}

/// `Σ_{u=lo}^{hi-1} ⌈u/d⌉`.
fn sum_ceil(lo: &BigInt, hi: &BigInt, d: &BigInt) -> BigInt {
    if hi <= lo {
        return BigInt::zero();
    }
    sum_floor(&(lo - 1), &(hi - 1), d) + (hi - lo)
}

// -------------------------------------------------------------------------
// The half-twist table.
// -------------------------------------------------------------------------

/// Input class of a piece, without multiplicity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Class {
    /// Crossing piece; the wrap number is carried only when small, since
    /// rows for small wrap numbers may differ from the generic spiral
    /// rows.
    Cross(Shape, Side2, Side2, Option<u8>),
    DirL,
    DirR,
    Circ,
}

/// Output class, with the wrap-number shift for crossing pieces.
///
/// Direct U-turns carry one wrap for the purposes of the shift, so a
/// `DirL` input mapped with `dm = 0` becomes a crossing piece with
/// `m = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutClass {
    Cross(Shape, Side2, Side2, i64),
    DirL,
    DirR,
    Circ,
}

fn sort_for(shape: Shape, e1: Side2, e2: Side2) -> (Side2, Side2) {
    if shape == Shape::LR || e1 <= e2 {
        (e1, e2)
    } else {
        (e2, e1)
    }
}

fn vflip_class(c: Class) -> Class {
    match c {
        Class::Cross(sh, e1, e2, m) => {
            let (f1, f2) = sort_for(sh, e1.flip(), e2.flip());
            Class::Cross(sh, f1, f2, m)
        }
        other => other,
    }
}

fn vflip_out(o: OutClass) -> OutClass {
    match o {
        OutClass::Cross(sh, e1, e2, dm) => {
            let (f1, f2) = sort_for(sh, e1.flip(), e2.flip());
            OutClass::Cross(sh, f1, f2, dm)
        }
        other => other,
    }
}

fn rot_shape(sh: Shape) -> Shape {
    match sh {
        Shape::LR => Shape::LR,
        Shape::LL => Shape::RR,
        Shape::RR => Shape::LL,
    }
}

fn rot_class(c: Class) -> Class {
    match c {
        Class::Cross(Shape::LR, e1, e2, m) => Class::Cross(Shape::LR, e2.flip(), e1.flip(), m),
        Class::Cross(sh, e1, e2, m) => {
            let rs = rot_shape(sh);
            let (f1, f2) = sort_for(rs, e1.flip(), e2.flip());
            Class::Cross(rs, f1, f2, m)
        }
        Class::DirL => Class::DirR,
        Class::DirR => Class::DirL,
        Class::Circ => Class::Circ,
    }
}

fn rot_out(o: OutClass) -> OutClass {
    match o {
        OutClass::Cross(Shape::LR, e1, e2, dm) => {
            OutClass::Cross(Shape::LR, e2.flip(), e1.flip(), dm)
        }
        OutClass::Cross(sh, e1, e2, dm) => {
            let rs = rot_shape(sh);
            let (f1, f2) = sort_for(rs, e1.flip(), e2.flip());
            OutClass::Cross(rs, f1, f2, dm)
        }
        OutClass::DirL => OutClass::DirR,
        OutClass::DirR => OutClass::DirL,
        OutClass::Circ => OutClass::Circ,
    }
}

/// Image of a piece class under `σ_k^{sign}`.
///
/// Only the positive table over a fundamental domain of the rectangle's
/// 180° rotation is stored: the rotation supplies the `RR` and `DirR`
/// rows, and the up/down mirror supplies the negative twist.  Both
/// symmetries are exact.  The stored rows are pinned by fuzzing against
/// the polygon oracle and frozen by the relator and cross-engine
/// batteries.
pub fn class_row(sign: i8, c: Class) -> OutClass {
    if sign < 0 {
        return vflip_out(class_row(1, vflip_class(c)));
    }
    match c {
        Class::Circ => OutClass::Circ,
        Class::DirR | Class::Cross(Shape::RR, _, _, _) => rot_out(class_row(1, rot_class(c))),
        Class::DirL => OutClass::Cross(Shape::LL, Side2::B, Side2::B, 0),
        Class::Cross(Shape::LR, e1, e2, m) => lr_row(e1, e2, m),
        Class::Cross(Shape::LL, e1, e2, m) => ll_row(e1, e2, m),
    }
}

/// Positive-twist rows for through strands.
fn lr_row(e1: Side2, e2: Side2, m: Option<u8>) -> OutClass {
    use Side2::*;
    match (e1, e2, m) {
        // Untwisted chords passing on one side of both punctures are
        // isotopic into the fixed region: the twist leaves them alone.
        (A, A, Some(0)) => OutClass::Cross(Shape::LR, A, A, 0),
        (B, B, Some(0)) => OutClass::Cross(Shape::LR, B, B, 0),
        // A wrapped same-side chord has a bigon with the middle line, so
        // it cannot occur in a curve with reduced crossing counts.
        (A, A, _) | (B, B, _) => unreachable!("wrapped same-side through strand"),
        // Mixed chords wind up (entering below) or unwind (entering
        // above) while keeping their ends; unwinding past zero flips the
        // ends instead.
        (A, B, Some(0)) => OutClass::Cross(Shape::LR, B, A, 0),
        (A, B, _) => OutClass::Cross(Shape::LR, A, B, -2),
        (B, A, _) => OutClass::Cross(Shape::LR, B, A, 2),
    }
}

/// Positive-twist rows for pieces with both ends on the west edge.
fn ll_row(e1: Side2, e2: Side2, m: Option<u8>) -> OutClass {
    use Side2::*;
    match (e1, e2, m) {
        // The singly wrapped {A,A} piece is the negative-twist image of
        // the direct U-turn, so the positive twist returns it there.
        (A, A, Some(1)) => OutClass::DirL,
        (A, A, _) => OutClass::Cross(Shape::LL, A, A, -2),
        // The up/down mirror fixes the mixed class, so both twists shift
        // its wrap number by the same amount; being mutually inverse,
        // that shift is zero.
        (A, B, _) => OutClass::Cross(Shape::LL, A, B, 0),
        (B, B, _) => OutClass::Cross(Shape::LL, B, B, 2),
        (B, A, _) => unreachable!("unsorted pair"),
    }
}

// -------------------------------------------------------------------------
// Output assembly.
// -------------------------------------------------------------------------

/// Aggregated counts of the rectangle content after the twist.
#[derive(Clone, Debug)]
struct OutCounts {
    g_mid: BigInt,
    a_l: BigInt,
    b_l: BigInt,
    u_l_mid: BigInt,
    u_l_edge: BigInt,
    a_r: BigInt,
    b_r: BigInt,
    u_r_mid: BigInt,
    u_r_edge: BigInt,
    circ: BigInt,
}

impl OutCounts {
    fn zero() -> OutCounts {
        OutCounts {
            g_mid: BigInt::zero(),
            a_l: BigInt::zero(),
            b_l: BigInt::zero(),
            u_l_mid: BigInt::zero(),
            u_l_edge: BigInt::zero(),
            a_r: BigInt::zero(),
            b_r: BigInt::zero(),
            u_r_mid: BigInt::zero(),
            u_r_edge: BigInt::zero(),
            circ: BigInt::zero(),
        }
    }

    fn ray_counts(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let wl = &self.u_l_mid + &self.u_l_edge + &self.circ;
        let wr = &self.u_r_mid + &self.u_r_edge + &self.circ;
        (&self.a_l + &wl, &self.b_l + &wl, &self.a_r + &wr, &self.b_r + &wr)
    }

    /// The image counts must satisfy the same four line equations as any
    /// curve in normal position, with the outer edge counts unchanged.
    fn check_consistent(&self, rect: &RectData) {
        let two = BigInt::from(2);
        let ends_l = &self.a_l + &self.b_l;
        let ends_r = &self.a_r + &self.b_r;
        assert_eq!(&ends_l + &two * &self.u_l_edge, rect.g_w.clone(), "west edge broken");
        assert_eq!(&ends_r + &two * &self.u_r_edge, rect.g_e.clone(), "east edge broken");
        assert_eq!(
            &ends_l + &two * (&self.u_l_mid + &self.circ),
            self.g_mid.clone(),
            "middle line vs west slab broken"
        );
        assert_eq!(
            &ends_r + &two * (&self.u_r_mid + &self.circ),
            self.g_mid.clone(),
            "middle line vs east slab broken"
        );
        assert!(
            (self.u_l_mid.is_zero() && self.circ.is_zero()) || self.u_l_edge.is_zero(),
            "west slab wrap orientations conflict"
        );
        assert!(
            (self.u_r_mid.is_zero() && self.circ.is_zero()) || self.u_r_edge.is_zero(),
            "east slab wrap orientations conflict"
        );
    }
}

/// Push one output family of crossing pieces into the aggregates.
fn add_cross(o: &mut OutCounts, shape: Shape, e1: Side2, e2: Side2, count: &BigInt, sum_m: &BigInt) {
    o.g_mid += sum_m + count;
    // Internal wraps alternate between the slabs, starting with the slab
    // away from the entry edge; split Σm accordingly.
    let (wl_sum, wr_sum) = match shape {
        Shape::LR => {
            let h = exact_half(sum_m);
            (h.clone(), h)
        }
        Shape::LL => (exact_half(&(sum_m - count)), exact_half(&(sum_m + count))),
        Shape::RR => (exact_half(&(sum_m + count)), exact_half(&(sum_m - count))),
    };
    o.u_l_mid += wl_sum;
    o.u_r_mid += wr_sum;
    match shape {
        Shape::LR => {
            match e1 {
                Side2::A => o.a_l += count,
                Side2::B => o.b_l += count,
            }
            match e2 {
                Side2::A => o.a_r += count,
                Side2::B => o.b_r += count,
            }
        }
        Shape::LL => {
            for e in [e1, e2] {
                match e {
                    Side2::A => o.a_l += count,
                    Side2::B => o.b_l += count,
                }
            }
        }
        Shape::RR => {
            for e in [e1, e2] {
                match e {
                    Side2::A => o.a_r += count,
                    Side2::B => o.b_r += count,
                }
            }
        }
    }
}

/// Map every inventory entry through the class table and aggregate.
fn apply_table(inv: &Inventory, sign: i8) -> OutCounts {
    let mut o = OutCounts::zero();
    let emit = |o: &mut OutCounts, out: OutClass, count: &BigInt, sum_m_in: &BigInt| match out {
        OutClass::Cross(sh, e1, e2, dm) => {
            let sum_m_out = sum_m_in + BigInt::from(dm) * count;
            assert!(!sum_m_out.is_negative(), "wrap shift went negative");
            add_cross(o, sh, e1, e2, count, &sum_m_out);
        }
        OutClass::DirL => o.u_l_edge += count,
        OutClass::DirR => o.u_r_edge += count,
        OutClass::Circ => {
            o.circ += count;
            o.g_mid += BigInt::from(2) * count;
        }
    };
    for f in &inv.fams {
        let out = class_row(sign, Class::Cross(f.shape, f.e1, f.e2, f.m_exact));
        emit(&mut o, out, &f.count, &f.sum_m);
    }
    if !inv.dl.is_zero() {
        // A direct U-turn carries one wrap.
        let dl = inv.dl.clone();
        emit(&mut o, class_row(sign, Class::DirL), &dl, &dl.clone());
    }
    if !inv.dr.is_zero() {
        let dr = inv.dr.clone();
        emit(&mut o, class_row(sign, Class::DirR), &dr, &dr.clone());
    }
    if !inv.circ.is_zero() {
        emit(&mut o, class_row(sign, Class::Circ), &inv.circ, &BigInt::zero());
    }
    o
}

impl Inventory {
    /// The census must account exactly for every crossing of the middle
    /// line and the two outer edges.
    pub fn check_complete(&self, rect: &RectData) {
        let two = BigInt::from(2);
        let mut mid = &two * &self.circ;
        let mut west = &two * &self.dl;
        let mut east = &two * &self.dr;
        for f in &self.fams {
            mid += &f.sum_m + &f.count;
            match f.shape {
                Shape::LR => {
                    west += &f.count;
                    east += &f.count;
                }
                Shape::LL => west += &two * &f.count,
                Shape::RR => east += &two * &f.count,
            }
            if let Some(m) = f.m_exact {
                assert_eq!(BigInt::from(m) * &f.count, f.sum_m.clone());
            } else {
                // Tail families have at least four wraps per piece.
                assert!(f.sum_m >= BigInt::from(4) * &f.count);
            }
        }
        assert_eq!(mid, rect.g, "census misses middle line crossings");
        assert_eq!(west, rect.g_w, "census misses west edge crossings");
        assert_eq!(east, rect.g_e, "census misses east edge crossings");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn w(n: usize, letters: &[(u16, i8)]) -> BraidWord {
        BraidWord::from_letters(n, letters.iter().copied())
    }

    #[test]
    fn round_pair_is_invariant() {
        let c = Curve::round(4, 2, 3);
        assert_eq!(c.apply_gen(2, 1), c);
        assert_eq!(c.apply_gen(2, -1), c);
    }

    #[test]
    fn single_puncture_rounds_move() {
        let c = Curve::round(4, 2, 2);
        assert_eq!(c.apply_gen(2, 1), Curve::round(4, 3, 3));
        assert_eq!(c.apply_gen(2, -1), Curve::round(4, 3, 3));
        assert_eq!(c.apply_gen(1, 1), Curve::round(4, 1, 1));
        assert_eq!(c.apply_gen(3, 1), c);
    }

    #[test]
    fn census_of_round_pair() {
        let c = Curve::round(4, 1, 4);
        let rect = RectData::read(&c, 2);
        let inv = rect.census();
        inv.check_complete(&rect);
        // One transversal above both punctures, one below.
        assert_eq!(inv.fams.len(), 2);
        for f in &inv.fams {
            assert_eq!(f.shape, Shape::LR);
            assert_eq!(f.m_exact, Some(0));
            assert!(f.count.is_one());
            assert_eq!(f.e1, f.e2);
        }
        assert!(inv.circ.is_zero() && inv.dl.is_zero() && inv.dr.is_zero());
    }

    #[test]
    fn census_of_west_attached_u() {
        let c = Curve::round(4, 1, 2);
        let rect = RectData::read(&c, 2);
        let inv = rect.census();
        inv.check_complete(&rect);
        assert!(inv.fams.is_empty());
        assert!(inv.dl.is_one());
        assert!(inv.dr.is_zero() && inv.circ.is_zero());
    }

    #[test]
    fn enclosure_parity() {
        let c = Curve::round(5, 2, 4);
        assert!(!c.encloses(1));
        assert!(c.encloses(2));
        assert!(c.encloses(3));
        assert!(c.encloses(4));
        assert!(!c.encloses(5));
    }

    #[test]
    fn inverse_roundtrips_on_round_curves() {
        for (lo, hi) in [(1usize, 2usize), (2, 3), (1, 3), (2, 2), (1, 4)] {
            let c = Curve::round(4, lo, hi);
            for k in 1..4 {
                for sign in [1i8, -1] {
                    let there = c.apply_gen(k, sign);
                    let back = there.apply_gen(k, -sign);
                    assert_eq!(back, c, "roundtrip failed at k={k} sign={sign} lo={lo} hi={hi}");
                }
            }
        }
    }

    #[test]
    fn braid_relation_on_a_curve() {
        let c = Curve::round(4, 2, 2);
        let lhs = c.apply_word(&w(4, &[(1, 1), (2, 1), (1, 1)]));
        let rhs = c.apply_word(&w(4, &[(2, 1), (1, 1), (2, 1)]));
        assert_eq!(lhs, rhs);
    }
}
