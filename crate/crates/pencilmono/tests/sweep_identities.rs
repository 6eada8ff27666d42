//! Product identities satisfied by the sweep-derived factor list: the
//! per-block gondola, the cumulative disc rotations, the crossing
//! cluster rigidity, and the boundary-twist total.

use pencilmono::braid::BraidWord;
use pencilmono::disk::N_STRANDS;
use pencilmono::envelope::rotation;
use pencilmono::garside::words_equal;
use pencilmono::sweep::{Crit, Sweep};

fn product(words: impl IntoIterator<Item = BraidWord>) -> BraidWord {
    let mut p = BraidWord::identity(N_STRANDS);
    for w in words {
        p = p.concat(&w);
    }
    p.free_reduced()
}

/// Signed crossing counts between each unordered strand pair (strands
/// named by initial position, 0-based): a conjugation invariant of pure
/// braids, used to pinpoint where two candidate words differ.
fn crossing_matrix(w: &BraidWord) -> Vec<Vec<i64>> {
    let n = w.n;
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut m = vec![vec![0i64; n]; n];
    for l in &w.letters {
        let p = l.gen as usize - 1;
        let (a, b) = (strand_at[p], strand_at[p + 1]);
        m[a][b] += l.sign as i64;
        m[b][a] += l.sign as i64;
        strand_at.swap(p, p + 1);
    }
    m
}

fn describe_diff(a: &BraidWord, b: &BraidWord) -> String {
    use std::fmt::Write;
    let (ma, mb) = (crossing_matrix(a), crossing_matrix(b));
    let mut out = String::new();
    for i in 0..a.n {
        for j in i + 1..a.n {
            if ma[i][j] != mb[i][j] {
                writeln!(out, "  pair ({},{}): {} vs {}", i + 1, j + 1, ma[i][j], mb[i][j]).unwrap();
            }
        }
    }
    if out.is_empty() {
        out.push_str("  (same crossing matrix)\n");
    }
    out
}

fn block_words(s: &Sweep, i: u8) -> Vec<BraidWord> {
    s.factors
        .iter()
        .filter(|r| match r.crit {
            Crit::Merge { block, .. } | Crit::Rebirth { block, .. } | Crit::Cluster { block, .. } => block == i,
            Crit::Collapse { index } => index == i,
        })
        .map(|r| r.word.clone())
        .collect()
}

fn tangency_words(s: &Sweep, i: u8) -> Vec<BraidWord> {
    s.factors
        .iter()
        .filter(|r| matches!(r.crit, Crit::Merge { block, .. } | Crit::Rebirth { block, .. } if block == i))
        .map(|r| r.word.clone())
        .collect()
}

#[test]
fn q1_block_product_is_the_disc_translation() {
    let s = Sweep::run();
    let p = product(tangency_words(&s, 1));
    assert_eq!(p.exponent_sum(), 10);
    let expect = rotation::translate_around_q(1).free_reduced();
    assert!(
        words_equal(&p, &expect),
        "q1 tangency product differs from the disc translation:\n{}",
        describe_diff(&p, &expect)
    );
}

#[test]
fn block1_cumulative_is_the_disc_rotation() {
    let s = Sweep::run();
    let p = product(block_words(&s, 1));
    assert_eq!(p.exponent_sum(), 72);
    let expect = rotation::translate_around_qz(1).free_reduced();
    let expect2 = rotation::translate_around_window(12).free_reduced();
    assert!(
        words_equal(&expect, &expect2),
        "window form differs from qz form:\n{}",
        describe_diff(&expect, &expect2)
    );
    assert!(
        words_equal(&p, &expect),
        "block 1 cumulative differs from the disc rotation:\n{}",
        describe_diff(&p, &expect)
    );
}

#[test]
fn cumulative_rotations_through_each_block() {
    let s = Sweep::run();
    let mut words: Vec<BraidWord> = Vec::new();
    for i in 1..=6u8 {
        words.extend(block_words(&s, i));
        let p = product(words.iter().cloned());
        assert_eq!(p.exponent_sum(), 72 * i as i64, "block {i}");
        let expect = rotation::translate_around_window(6 * i as usize + 6).free_reduced();
        assert!(
            words_equal(&p, &expect),
            "cumulative through block {i} differs:\n{}",
            describe_diff(&p, &expect)
        );
    }
}

#[test]
fn crossing_cluster_products_are_reference_window_twists() {
    let s = Sweep::run();
    for i in 1..=6u8 {
        let words: Vec<BraidWord> = s
            .factors
            .iter()
            .filter(|r| matches!(r.crit, Crit::Cluster { block, .. } if block == i))
            .map(|r| r.word.clone())
            .collect();
        assert_eq!(words.len(), 20);
        let p = product(words);
        assert_eq!(p.exponent_sum(), 20);
        assert!(
            words_equal(&p, &BraidWord::full_twist(N_STRANDS, 2, 6)),
            "cluster {i} product is not the home window twist:\n{}",
            describe_diff(&p, &BraidWord::full_twist(N_STRANDS, 2, 6))
        );
    }
}

#[test]
fn grand_product_is_the_boundary_twist() {
    let s = Sweep::run();
    let p = product(s.words(1));
    assert_eq!(p.exponent_sum(), 43 * 42);
    let expect = BraidWord::full_twist(N_STRANDS, 1, 43);
    assert!(
        words_equal(&p, &expect),
        "grand product differs from the boundary twist:\n{}",
        describe_diff(&p, &expect)
    );
}
