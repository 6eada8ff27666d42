//! Temporary experiments (will be removed).

use pencilmono::braid::BraidWord;
use pencilmono::garside::words_equal;
use pencilmono::passage::{ChainSpec, Side};
use pencilmono::twist::half_twist;

fn band(n: usize, a: usize, b: usize, side: Side) -> BraidWord {
    let mut spec = ChainSpec::below(n, [a, b]);
    for p in a + 1..b {
        spec.set_side(p, side);
    }
    half_twist(&spec)
}

fn pairs_lex() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 1..=5usize {
        for b in a + 1..=5 {
            v.push((a, b));
        }
    }
    v
}

#[test]
fn local_cluster_identity_variants() {
    let n = 5usize;
    let full = BraidWord::full_twist(n, 1, 5);

    // Variant A: lex by (a, b), below arcs, each squared.
    let mut p = BraidWord::identity(n);
    for &(a, b) in &pairs_lex() {
        let w = band(n, a, b, Side::Below);
        p = p.concat(&w).concat(&w);
    }
    println!("A lex below: {}", words_equal(&p, &full));

    // Variant B: lex by (a, b), above arcs, each squared.
    let mut p = BraidWord::identity(n);
    for &(a, b) in &pairs_lex() {
        let w = band(n, a, b, Side::Above);
        p = p.concat(&w).concat(&w);
    }
    println!("B lex above: {}", words_equal(&p, &full));

    // Variant C: reverse lex, below arcs.
    let mut p = BraidWord::identity(n);
    for &(a, b) in pairs_lex().iter().rev() {
        let w = band(n, a, b, Side::Below);
        p = p.concat(&w).concat(&w);
    }
    println!("C revlex below: {}", words_equal(&p, &full));

    // Variant D: lex by (b, a) i.e. sorted by larger endpoint first, below arcs.
    let mut v: Vec<(usize, usize)> = pairs_lex();
    v.sort_by_key(|&(a, b)| (b, a));
    let mut p = BraidWord::identity(n);
    for &(a, b) in &v {
        let w = band(n, a, b, Side::Below);
        p = p.concat(&w).concat(&w);
    }
    println!("D by-(b,a) below: {}", words_equal(&p, &full));

    // Variant E: by (b, a) above arcs.
    let mut p = BraidWord::identity(n);
    for &(a, b) in &v {
        let w = band(n, a, b, Side::Above);
        p = p.concat(&w).concat(&w);
    }
    println!("E by-(b,a) above: {}", words_equal(&p, &full));

    // Variant F: (sigma1 sigma2 sigma3 sigma4)^5 sanity.
    let mut p = BraidWord::identity(n);
    for _ in 0..5 {
        for g in 1..=4u16 {
            p = p.concat(&BraidWord::gen(n, g));
        }
    }
    println!("F (s1s2s3s4)^5: {}", words_equal(&p, &full));
}
