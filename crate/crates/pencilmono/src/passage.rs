//! From drawn descriptions of arcs and chains to exact coordinates.
//!
//! The twist supports used throughout are described the way one would
//! draw them: an increasing list of axis punctures to visit (the
//! *nodes*), together with, for every other puncture lying between two
//! consecutive nodes, the side of the axis — above or below — on which
//! the connecting arc passes it.  This module renders such a
//! description exactly: the drawn tree is an x-monotone polyline
//! through the nodes with excursions to `y = ±½` at each bypassed
//! puncture, its regular neighbourhood is the vertical `±⅕` band, and
//! the boundary of that band is a closed polygon whose reduced
//! coordinates are read off with the oracle in [`crate::geom`].
//!
//! A two-node chain is the neighbourhood boundary of an embedded arc
//! between two punctures, which is how half-twist supports are fed to
//! the compiler in [`crate::twist`]; longer chains describe the closed
//! curves attached to label sets.

use alloc::vec::Vec;

use crate::diagram::Curve;
use crate::geom::{Point, PolyCurve, Rat};
use num_bigint::BigInt;

/// Which side of the axis a connecting arc passes a bypassed puncture.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }
}

/// A drawn chain: nodes joined left to right, bypassing the punctures
/// in between on prescribed sides.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub n: usize,
    /// Strictly increasing puncture positions, 1-based; at least two.
    pub nodes: Vec<usize>,
    /// `sides[p]` for every position `p` strictly between two
    /// consecutive nodes, indexed by `p - 1`.
    sides: Vec<Side>,
}

impl ChainSpec {
    /// Chain through `nodes` passing every bypassed puncture below the
    /// axis.
    pub fn below<I: IntoIterator<Item = usize>>(n: usize, nodes: I) -> ChainSpec {
        let nodes: Vec<usize> = nodes.into_iter().collect();
        assert!(nodes.len() >= 2, "a chain needs at least two nodes");
        assert!(nodes.windows(2).all(|w| w[0] < w[1]), "nodes must increase");
        assert!(*nodes.first().unwrap() >= 1 && *nodes.last().unwrap() <= n);
        ChainSpec { n, nodes, sides: alloc::vec![Side::Below; n] }
    }

    /// True if `p` lies strictly between two consecutive nodes.
    fn is_bypassed(&self, p: usize) -> bool {
        p > self.nodes[0] && p < *self.nodes.last().unwrap() && !self.nodes.contains(&p)
    }

    /// Override the side on which the chain passes puncture `p`.
    pub fn set_side(&mut self, p: usize, side: Side) -> &mut Self {
        assert!(self.is_bypassed(p), "puncture {p} is not bypassed by this chain");
        self.sides[p - 1] = side;
        self
    }

    /// Builder form of [`set_side`](Self::set_side).
    pub fn with_side(mut self, p: usize, side: Side) -> Self {
        self.set_side(p, side);
        self
    }

    /// The drawn polyline through the nodes (on the axis) and bypassed
    /// punctures (at `y = ±½`).
    fn polyline(&self) -> Vec<Point> {
        let mut pts = Vec::new();
        for (k, &node) in self.nodes.iter().enumerate() {
            pts.push(Point::new(Rat::int(node as i64), Rat::int(0)));
            if let Some(&next) = self.nodes.get(k + 1) {
                for p in node + 1..next {
                    let y = match self.sides[p - 1] {
                        Side::Above => Rat::frac(1, 2),
                        Side::Below => Rat::frac(-1, 2),
                    };
                    pts.push(Point::new(Rat::int(p as i64), y));
                }
            }
        }
        pts
    }

    /// Boundary polygon of the `±⅕` neighbourhood band of the chain.
    pub fn polygon(&self) -> PolyCurve {
        let spine = self.polyline();
        let eps = Rat::frac(1, 5);
        let cap = Rat::frac(2, 5);
        let mut pts = Vec::with_capacity(2 * spine.len() + 4);
        // West cap, then east along the lower offset.
        let first = &spine[0];
        let last = spine.last().unwrap();
        pts.push(Point::new(first.x.sub(&cap), first.y.sub(&eps)));
        for p in &spine {
            pts.push(Point::new(p.x.clone(), p.y.sub(&eps)));
        }
        pts.push(Point::new(last.x.add(&cap), last.y.sub(&eps)));
        // East cap, then west along the upper offset.
        pts.push(Point::new(last.x.add(&cap), last.y.add(&eps)));
        for p in spine.iter().rev() {
            pts.push(Point::new(p.x.clone(), p.y.add(&eps)));
        }
        pts.push(Point::new(first.x.sub(&cap), first.y.add(&eps)));
        PolyCurve { n: self.n, pts }
    }

    /// Reduced coordinates of the neighbourhood boundary.
    pub fn curve(&self) -> Curve {
        let counts = self.polygon().wall_counts();
        let c = Curve {
            n: self.n,
            lines: counts.lines.iter().map(|&v| BigInt::from(v)).collect(),
            ups: counts.ups.iter().map(|&v| BigInt::from(v)).collect(),
            downs: counts.downs.iter().map(|&v| BigInt::from(v)).collect(),
        };
        // The band encloses exactly the nodes.
        for i in 1..=self.n {
            assert_eq!(c.encloses(i), self.nodes.contains(&i), "enclosure mismatch at {i}");
        }
        c
    }
}

/// Arc between two punctures: the two-node chain with the given sides
/// at the bypassed punctures, listed left to right.
pub fn arc<I: IntoIterator<Item = Side>>(n: usize, from: usize, to: usize, sides: I) -> ChainSpec {
    assert!(from < to);
    let mut c = ChainSpec::below(n, [from, to]);
    let mut p = from + 1;
    for s in sides {
        assert!(p < to, "more sides than bypassed punctures");
        c.set_side(p, s);
        p += 1;
    }
    assert_eq!(p, to, "fewer sides than bypassed punctures");
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_chain_is_the_round_pair() {
        let c = ChainSpec::below(5, [2, 3]).curve();
        assert_eq!(c, Curve::round(5, 2, 3));
    }

    #[test]
    fn contiguous_chain_is_the_round_window() {
        let c = ChainSpec::below(6, [2, 3, 4, 5]).curve();
        assert_eq!(c, Curve::round(6, 2, 5));
    }

    #[test]
    fn bypass_sides_match_generator_images() {
        // The counterclockwise half twist σ₂ drags puncture 2 below the
        // axis over to 3, so it maps the straight arc 1–2 to the arc
        // from 1 to 3 passing below 2; its inverse passes above.
        let below = arc(4, 1, 3, [Side::Below]).curve();
        assert_eq!(below, Curve::round(4, 1, 2).apply_gen(2, 1));
        let above = arc(4, 1, 3, [Side::Above]).curve();
        assert_eq!(above, Curve::round(4, 1, 2).apply_gen(2, -1));
        assert_ne!(below, above);
    }

    #[test]
    fn mixed_sides_round_trip_through_the_oracle() {
        // A chain weaving above and below: its curve must enclose the
        // nodes only, and pulling it back with the generators that
        // straighten it must land on the round window.
        let c = ChainSpec::below(6, [1, 4, 6])
            .with_side(2, Side::Above)
            .with_side(3, Side::Below)
            .with_side(5, Side::Above)
            .curve();
        assert!(c.encloses(1) && c.encloses(4) && c.encloses(6));
        assert!(!c.encloses(2) && !c.encloses(3) && !c.encloses(5));
    }
}
