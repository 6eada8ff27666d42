//! Exact combinatorial engines for mapping classes of a marked disk.
//!
//! The crate is organized bottom-up:
//!
//! * [`braid`] — words in Artin generators, free reduction, exponent sums.
//! * [`garside`] — Garside left-greedy normal form; an independent solution
//!   of the word problem used to cross-check the curve engine.
//! * [`diagram`] — exact integer curve diagrams on the marked disk: the
//!   primary substrate for deciding equality of mapping classes and for
//!   computing images of curves under braid words.
//! * [`geom`] — a slow exact rational polygon model of the same disk, used
//!   as an oracle of last resort to pin down surgery conventions.
//! * [`disk`] — the specific 43-point marked disk carrying the fibration
//!   data: label set, linear order, and distinguished subsets.
//! * [`passage`] — arc and curve descriptions as passage sequences.
//! * [`envelope`] — upper envelopes of label sets and their curves.
//! * [`twist`] — compilation of half twists and curve twists into braid
//!   words (gather–twist–scatter) and their action on diagrams.
//! * [`sphere`] — the six-strand sphere quotient: combing, point-push
//!   substitution, and the decision procedure for sphere triviality.
//! * [`genus2`] — the genus-2 symplectic representation over ℤ.
//! * [`cover`] — the double cover of the disk branched at the 36 interior
//!   branch labels: slit bookkeeping, lifts, homology, transvections.
//! * [`factor`] — positive factorizations: the two fibration tuples,
//!   Hurwitz moves, partial conjugation, products, Euler counts.
//! * [`subgroup`] — certified membership of envelope curves in the twist
//!   subgroups, the closure scripts, and the subgroup-equality report.
//! * [`fixtures`] — versioned embedded data (arcs, scripts, tuples).
//! * [`serialize`] — line-oriented text formats shared with the CLI.
//!
//! # Conventions
//!
//! Words act left to right: in a product `u·v` the word `u` acts first.
//! As mapping classes this is the composite `v ∘ u`.  Consequently a
//! conjugate `w⁻¹·g·w` (with `w` applied last … first read right-to-left)
//! — concretely, for a twist `t_c` along a curve `c` we have
//! `w · t_c · w⁻¹ = t_{w⁻¹(c)}` as mapping classes under this convention.
//!
//! All arithmetic is exact: coordinates are unbounded integers, homology
//! matrices have unbounded integer entries, and no floating point is used
//! anywhere.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod braid;
pub mod cover;
pub mod diagram;
pub mod disk;
pub mod envelope;
pub mod factor;
pub mod fixtures;
pub mod garside;
pub mod genus2;
pub mod geom;
pub mod passage;
pub mod serialize;
pub mod sphere;
pub mod subgroup;
pub mod sweep;
pub mod twist;
