use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::families::{presentation_a, A, B};
use super::*;
use crate::ffmat::SparseVec;
use crate::freealg::{FreeElement, Word};

fn random_element(alg: &QuotientAlgebra, rng: &mut ChaCha8Rng) -> SparseVec {
    let f = alg.field();
    let pairs = (0..4)
        .map(|_| (rng.gen_range(0..alg.dim()), rng.gen_range(0..f.p())))
        .collect();
    SparseVec::from_pairs(f, pairs)
}

#[test]
fn dimension_and_basis_of_a() {
    for p in [3, 5, 7] {
        let alg = build_a(p).unwrap();
        assert_eq!(alg.dim(), (p * p) as usize);
        for w in alg.basis() {
            let l = w.letters();
            let split = l.iter().position(|&g| g as usize == B).unwrap_or(l.len());
            assert!(l[..split].iter().all(|&g| g as usize == A));
            assert!(l[split..].iter().all(|&g| g as usize == B));
        }
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for alg in [build_a(3).unwrap(), build_a(5).unwrap(), smash(3).unwrap().algebra] {
        for _ in 0..200 {
            let x = random_element(&alg, &mut rng);
            let y = random_element(&alg, &mut rng);
            let z = random_element(&alg, &mut rng);
            assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        }
    }
}

#[test]
fn augmentation_is_an_algebra_map() {
    assert!(build_a(5).unwrap().augmentation_is_multiplicative());
    assert!(smash(3).unwrap().algebra.augmentation_is_multiplicative());
}

#[test]
fn b_times_a_squared() {
    let alg = build_a(5).unwrap();
    let lhs = alg.parse("b*a^2").unwrap();
    assert_eq!(lhs, alg.parse("a^2*b + a^3").unwrap());
    assert_eq!(alg.render(&lhs), "a^2*b + a^3");
}

#[test]
fn powers_are_central_in_b() {
    for p in [3u32, 5, 7] {
        let b = build_b(p).unwrap();
        assert!(b.is_central(&b.power("a", p as usize).unwrap()));
        assert!(b.is_central(&b.power("b", p as usize).unwrap()));
        assert!(!b.is_central(&b.power("b", 1).unwrap()));
        assert!(!b.is_central(&b.power("a", 1).unwrap()));
    }
}

#[test]
fn action_is_valid() {
    for p in [3u32, 5, 7] {
        let alg = build_a(p).unwrap();
        let report = validate_action(&shear_action(p).unwrap(), alg.presented()).unwrap();
        assert!(report.all_ok(), "{report:?}");
        let b = build_b(p).unwrap();
        assert!(validate_action(&shear_action(p).unwrap(), &b).unwrap().all_ok());
    }
}

#[test]
fn invalid_action_is_reported() {
    let alg = build_a(3).unwrap();
    let f = alg.field();
    let a = FreeElement::generator(A);
    let b = FreeElement::generator(B);
    // a <-> b breaks ba - ab - a^2/2.
    let swap = GroupAction::new(2, vec![b.clone(), a.clone()]).unwrap();
    let r = validate_action(&swap, alg.presented()).unwrap();
    assert!(!r.respects_relations);
    assert!(r.order_n);
    // b -> b + 1 moves the augmentation.
    let shift = GroupAction::new(3, vec![a, b.add(f, &FreeElement::one())]).unwrap();
    assert!(!validate_action(&shift, alg.presented()).unwrap().preserves_augmentation);
}

#[test]
fn action_matrix_has_order_p() {
    let alg = build_a(3).unwrap();
    let act = shear_action(3).unwrap();
    let g = act.matrix(&alg, 1).unwrap();
    let id = act.matrix(&alg, 0).unwrap();
    assert_eq!(g.pow(3).unwrap(), id);
    assert_ne!(g, id);
    assert_eq!(g.mul(&act.inverse_matrix(&alg).unwrap()).unwrap(), id);
}

#[test]
fn smash_product_structure() {
    for p in [3u32, 5] {
        let s = smash(p).unwrap();
        let alg = &s.algebra;
        assert_eq!(alg.dim(), (p * p * p) as usize);
        assert_eq!(s.base_dim, (p * p) as usize);
        let h = alg.presentation().generator("h").unwrap();
        let hp = alg.to_vec(&FreeElement::word(Word::power(h, p as usize)));
        assert!(hp.is_zero());
        // The embedded copy of A multiplies as A does.
        let base = build_a(p).unwrap();
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                let prod = base.mul_basis(i, j);
                let img = SparseVec::from_pairs(alg.field(), prod.iter().map(|(k, c)| (s.embedding[k], c)).collect());
                assert_eq!(alg.mul_basis(s.embedding[i], s.embedding[j]), &img);
            }
        }
    }
}

#[test]
fn smash_relation_for_b() {
    let s = smash(3).unwrap();
    let alg = &s.algebra;
    let lhs = alg.parse("h*b").unwrap();
    assert_eq!(lhs, alg.parse("b*h - a*h - a").unwrap());
    // g b g^-1 = b - a
    let g = alg.parse("h + 1").unwrap();
    let ginv = alg.parse("1 - h + h^2").unwrap();
    assert_eq!(alg.mul(&g, &ginv), alg.parse("1").unwrap());
    let conj = alg.mul(&alg.mul(&g, &alg.parse("b").unwrap()), &ginv);
    assert_eq!(conj, alg.parse("b - a").unwrap());
}

#[test]
fn b_smash_is_presented() {
    let bs = build_b_smash(3).unwrap();
    let h3 = bs.power("h", 3).unwrap();
    assert!(bs.normal_form(&h3).is_zero());
    let f = bs.field();
    assert!(!bs.gb().is_normal(&Word::from_letters([2u8, 1])));
    let _ = f;
}

#[test]
fn infinite_algebra_is_rejected() {
    let pres = super::families::presentation_b(3).unwrap();
    assert!(matches!(
        QuotientAlgebra::new("B", pres, 20),
        Err(crate::Error::NotFinite(_))
    ));
}

#[test]
fn smash_presentation_round_trips() {
    let s = smash(3).unwrap();
    let text = s.algebra.presentation().to_text();
    let back: crate::freealg::Presentation = text.parse().unwrap();
    assert_eq!(back.relations, s.algebra.presentation().relations);
    let again = presentation_a(3).unwrap().to_text().parse::<crate::freealg::Presentation>().unwrap();
    assert_eq!(again.relations, presentation_a(3).unwrap().relations);
}

#[test]
fn export_text_writes_half_as_residue_and_round_trips() {
    use crate::freealg::Presentation;
    for p in [3u32, 5, 7] {
        let half = p.div_ceil(2);
        let a = presentation_a(p).unwrap();
        let s = smash_presentation(&a, &shear_action(p).unwrap()).unwrap();
        for pres in [a, families::presentation_b(p).unwrap(), s] {
            let text = families::export_text(&pres);
            assert!(text.contains(&format!("relation b*a - a*b - {half}*a^2\n")), "{text}");
            assert_eq!(text.parse::<Presentation>().unwrap(), pres);
        }
    }
}
