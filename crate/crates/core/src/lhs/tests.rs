use proptest::prelude::*;

use super::*;
use crate::algebras::shear_action;
use crate::barcoh::DEFAULT_BUDGET_MB;

fn f3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

#[test]
fn trivial_and_regular_modules() {
    for p in [3u32, 5, 7] {
        let f = PrimeField::new(p).unwrap();
        let k = GModule::trivial(f, 1, p as usize);
        let reg = GModule::regular(f, p as usize);
        for n in 0..6 {
            assert_eq!(cyclic_cohomology(&k, n), 1);
            assert_eq!(cyclic_cohomology(&reg, n), usize::from(n == 0));
        }
    }
}

#[test]
fn unipotent_block() {
    let m = GModule::new(FMatrix::from_rows(f3(), &[vec![1, 0], vec![1, 1]]).unwrap(), 3).unwrap();
    assert_eq!(cyclic_cohomology(&m, 0), 1);
    assert_eq!(cyclic_cohomology(&m, 1), 1);
    assert_eq!(cyclic_cohomology(&m, 2), 1);
}

#[test]
fn wrong_order_is_rejected() {
    let m = FMatrix::from_rows(f3(), &[vec![2]]).unwrap();
    assert!(GModule::new(m, 3).is_err());
}

#[test]
fn cohomology_of_a3_as_module() {
    let alg = crate::algebras::build_a(3).unwrap();
    let bar = BarComplex::new(&alg, DEFAULT_BUDGET_MB, Exec::default()).unwrap();
    let act = shear_action(3).unwrap();
    assert_eq!(g_module_of_cohomology(&bar, &act, 0).unwrap().matrix(), &FMatrix::identity(f3(), 1));
    let h1 = g_module_of_cohomology(&bar, &act, 1).unwrap();
    assert_eq!(h1.matrix().to_rows(), vec![vec![1, 0], vec![1, 1]]);
    let h2 = g_module_of_cohomology(&bar, &act, 2).unwrap();
    assert_eq!(h2.dim(), 3);
    let unip = h2.matrix().sub(&FMatrix::identity(f3(), 3)).unwrap();
    assert!(unip.pow(3).unwrap().is_zero());
}

#[test]
fn e2_corner_and_convergence() {
    let alg = crate::algebras::build_a(3).unwrap();
    let bar = BarComplex::new(&alg, DEFAULT_BUDGET_MB, Exec::default()).unwrap();
    let page = e2_page(&bar, &shear_action(3).unwrap(), 3, 2).unwrap();
    assert_eq!(page.get(1, 0), 1);
    assert_eq!(page.get(0, 1), 1);
    assert_eq!(page.total(1), 2);
    for s in 0..=3 {
        assert_eq!(page.get(s, 0), 1);
    }
    let reports = convergence_check(3, 2, DEFAULT_BUDGET_MB, Exec::default()).unwrap();
    assert!(reports.iter().all(|r| r.holds));
    assert_eq!((reports[0].smash_dim, reports[0].e2_total), (1, 1));
    assert_eq!((reports[1].smash_dim, reports[1].e2_total), (2, 2));
}

fn unipotent(p: u32, entries: &[u32], size: usize) -> GModule {
    let f = PrimeField::new(p).unwrap();
    let mut m = FMatrix::identity(f, size);
    let mut k = 0;
    for r in 0..size {
        for c in r + 1..size {
            m.set(r, c, entries[k] % p);
            k += 1;
        }
    }
    GModule::new(m, p as usize).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn periodic_and_rank_nullity(p in prop::sample::select(vec![3u32, 5, 7]), size in 1usize..4, entries in prop::collection::vec(0u32..7, 6), n in 1usize..6) {
        let size = size.min(p as usize);
        let m = unipotent(p, &entries, size);
        prop_assert_eq!(cyclic_cohomology(&m, n), cyclic_cohomology(&m, n + 2));
        let d = m.matrix().sub(&FMatrix::identity(m.matrix().field(), size)).unwrap().rank();
        prop_assert_eq!(cyclic_cohomology(&m, 0) + d, size);
    }
}
