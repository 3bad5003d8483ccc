use proptest::prelude::*;

use super::*;
use crate::algebras::{build_a, build_gr_a, smash};
use crate::freealg::Word;
use crate::Exec;

fn w(s: &str) -> Word {
    // letters: a = 0, b = 1
    Word::from_letters(s.bytes().map(|c| c - b'a').collect::<Vec<_>>())
}

fn pw(a: usize, b: usize) -> Word {
    // b^a-style helper: "b^x a^y"
    Word::power(1, a).concat(&Word::power(0, b))
}

fn closed_form(p: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        let m = n.div_ceil(2);
        for k in 0..m {
            out.push(pw(k * p, (m - 1 - k) * p + 1));
            out.push(pw(k * p + 1, (m - 1 - k) * p));
        }
    } else {
        let m = n / 2;
        out.push(pw(m * p, 0));
        for k in 0..m {
            out.push(pw(k * p, (m - k) * p));
            out.push(pw(k * p + 1, (m - 1 - k) * p + 1));
        }
    }
    out.sort();
    out
}

fn sorted(cs: &ChainSet) -> Vec<Word> {
    let mut v = cs.words();
    v.sort();
    v
}

#[test]
fn low_chain_sets_of_a3() {
    let alg = build_a(3).unwrap();
    let gb = alg.presented().gb();
    let mut c2 = vec![w("aaa"), w("bbb"), w("ba")];
    c2.sort();
    assert_eq!(sorted(&chains(gb, 2)), c2);
    let mut c3 = vec![w("aaaa"), w("bbbb"), w("bbba"), w("baaa")];
    c3.sort();
    assert_eq!(sorted(&chains(gb, 3)), c3);
    let mut c4 = vec![w("bbbbbb"), w("aaaaaa"), w("bbbaaa"), w("bbbba"), w("baaaa")];
    c4.sort();
    assert_eq!(sorted(&chains(gb, 4)), c4);
}

#[test]
fn chain_sets_follow_closed_form() {
    for p in [3u32, 5, 7] {
        let alg = build_a(p).unwrap();
        let sets = chain_sets(alg.presented().gb(), 10);
        for (n, cs) in sets.iter().enumerate().skip(1) {
            assert_eq!(cs.len(), n + 1);
            if n >= 2 {
                assert_eq!(sorted(cs), closed_form(p as usize, n), "p={p} n={n}");
            }
        }
    }
}

#[test]
fn degree_profiles() {
    let alg = build_a(3).unwrap();
    let gb = alg.presented().gb();
    assert_eq!(chain_degree_profile(&chains(gb, 1)), vec![1, 1]);
    assert_eq!(chain_degree_profile(&chains(gb, 3)), vec![4; 4]);
    assert_eq!(chain_degree_profile(&chains(gb, 4)), vec![5, 5, 6, 6, 6]);
    for p in [3u32, 5, 7] {
        let alg = build_a(p).unwrap();
        let sets = chain_sets(alg.presented().gb(), 10);
        for n in 1..10 {
            let lo = chain_degree_profile(&sets[n]);
            let hi = chain_degree_profile(&sets[n + 1]);
            assert!(lo.iter().all(|d| !hi.contains(d)), "p={p} n={n}");
        }
    }
}

#[test]
fn low_differentials() {
    let alg = build_a(3).unwrap();
    let res = AnickResolution::new(&alg, 3, Exec::Sequential).unwrap();
    assert_eq!(res.render_differential(1, &w("a")).unwrap(), "a⊗1");
    // -1/2 = 1 mod 3
    assert_eq!(res.render_differential(2, &w("ba")).unwrap(), "b⊗a - a⊗b + a⊗a");
    assert_eq!(res.render_differential(2, &w("aaa")).unwrap(), "a^2⊗a");
    assert!(res.d_squared_vanishes());
    assert!(res.is_degree_preserving());
}

#[test]
fn a_p_cohomology_is_n_plus_one() {
    for p in [3u32, 5, 7] {
        let alg = build_a(p).unwrap();
        let res = AnickResolution::new(&alg, 11, Exec::default()).unwrap();
        let ext = res.ext_dims(10).unwrap();
        assert_eq!(ext.dims, (1..=11).collect::<Vec<_>>());
        assert!(ext.is_minimal());
        assert!(res.d_squared_vanishes());
    }
}

#[test]
fn graded_algebra_has_same_dims() {
    let alg = build_gr_a(3).unwrap();
    let res = AnickResolution::new(&alg, 7, Exec::default()).unwrap();
    assert_eq!(res.ext_dims(6).unwrap().dims, (1..=7).collect::<Vec<_>>());
}

#[test]
fn resolution_is_exact() {
    let alg = build_a(3).unwrap();
    let res = AnickResolution::new(&alg, 5, Exec::default()).unwrap();
    assert_eq!(res.homology_dims(4, Exec::default()).unwrap(), vec![1, 0, 0, 0, 0]);
}

#[test]
fn smash_is_not_minimal() {
    let s = smash(3).unwrap();
    let res = AnickResolution::new(&s.algebra, 3, Exec::default()).unwrap();
    let ext = res.ext_dims(2).unwrap();
    assert_eq!(&ext.dims[..2], &[1, 2]);
    assert!(!ext.minimal[1]);
    assert!(res.d_squared_vanishes());
    assert_eq!(res.homology_dims(2, Exec::default()).unwrap(), vec![1, 0, 0]);
}

#[test]
fn policies_agree() {
    let alg = build_a(5).unwrap();
    let a = AnickResolution::new(&alg, 6, Exec::Sequential).unwrap();
    let b = AnickResolution::new(&alg, 6, Exec::Parallel).unwrap();
    for n in 1..=6 {
        assert_eq!(a.differential(n), b.differential(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn chain_tails_are_chains(p in prop::sample::select(vec![3u32, 5, 7]), n in 2usize..9) {
        let alg = build_a(p).unwrap();
        let sets = chain_sets(alg.presented().gb(), n);
        for c in &sets[n].chains {
            prop_assert!(sets[n - 1].index_of(&c.tail_word()).is_some());
            prop_assert_eq!(c.pieces.len(), n);
        }
    }
}
