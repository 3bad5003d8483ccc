//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcoh::algebras::{self, families, validate_action, QuotientAlgebra, SmashProduct};
use skewcoh::anick::{chain_degree_profile, chains, AnickResolution};
use skewcoh::barcoh::{
    coefficient_cochain, dual_cochain, free_basis_count, BarComplex, Cochain, CohomologyBasis, DEFAULT_BUDGET_MB,
};
use skewcoh::ffmat::{FMatrix, PrimeField, SparseVec};
use skewcoh::freealg::Word;
use skewcoh::lhs::{cyclic_cohomology, e2_page, GModule};
use skewcoh::{Exec, Result};

const PRIMES: [u32; 3] = [3, 5, 7];
const TOP: usize = 8;
const A: usize = families::A;
const B: usize = families::B;

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok,
        detail: detail.into(),
    })
}

/// Word `b^i a^j` written the way the library prints it.
fn ba_string(i: usize, j: usize) -> String {
    let part = |x: char, e: usize| match e {
        0 => String::new(),
        1 => x.to_string(),
        _ => format!("{x}^{e}"),
    };
    format!("{}{}", part('b', i), part('a', j))
}

/// Hand-derived `n`-chains of `A_p`, `n >= 2`, as exponent pairs `(i, j)` for `b^i a^j`.
fn expected_chains(p: usize, n: usize) -> Vec<(usize, usize)> {
    let m = n.div_ceil(2);
    let mut v = Vec::new();
    if n % 2 == 1 {
        for k in 0..m {
            v.push((k * p, (m - 1 - k) * p + 1));
            v.push((k * p + 1, (m - 1 - k) * p));
        }
    } else {
        v.push((m * p, 0));
        for k in 0..m {
            v.push((k * p, (m - k) * p));
            v.push((k * p + 1, (m - 1 - k) * p + 1));
        }
    }
    v
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn ext_dims(alg: &QuotientAlgebra, top: usize) -> Result<(Vec<usize>, bool)> {
    let res = AnickResolution::new(alg, top + 1, Exec::default())?;
    let ext = res.ext_dims(top)?;
    let minimal = ext.is_minimal();
    Ok((ext.dims, minimal))
}

fn bar(alg: &QuotientAlgebra) -> Result<BarComplex<'_>> {
    BarComplex::new(alg, DEFAULT_BUDGET_MB, Exec::default())
}

fn criterion_1() -> Result<Outcome> {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for p in PRIMES {
        let b = algebras::build_b(p)?;
        let gb = b.gb();
        let tips: Vec<String> = gb.tips().iter().map(|w| w.display(b.names())).collect();
        ok &= gb.is_confirmed() && gb.relations().len() == 1 && tips == ["ba"] && gb.overlaps().is_empty();
        ok &= gb.is_pbw();
        let a2 = Word::power(A, 2);
        let ab = Word::from_letters([A as u8, B as u8]);
        ok &= gb.order().compare(&a2, &ab).is_lt();

        let a = algebras::build_a(p)?;
        let gb = a.presented().gb();
        let got = sorted(gb.tips().iter().map(|w| w.display(a.names())).collect());
        let want = sorted(vec!["ba".into(), format!("a^{p}"), format!("b^{p}")]);
        ok &= gb.is_confirmed() && got == want;
        detail.push(format!("p={p} tips {{{}}}", got.join(",")));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    outcome(ok, format!("{} in {elapsed:.2?}", detail.join("; ")))
}

fn criterion_2() -> Result<Outcome> {
    let mut ok = true;
    for p in PRIMES {
        let b = algebras::build_b(p)?;
        ok &= b.is_central(&b.power("a", p as usize)?);
        ok &= b.is_central(&b.power("b", p as usize)?);
        // sanity: the generators themselves are not central
        ok &= !b.is_central(&b.power("b", 1)?);
    }
    outcome(ok, "a^p, b^p central in B for p = 3, 5, 7")
}

fn criterion_3() -> Result<Outcome> {
    let mut ok = true;
    let mut bad = Vec::new();
    for p in PRIMES {
        let a = algebras::build_a(p)?;
        let gb = a.presented().gb();
        for n in 0..=TOP {
            let got = chains(gb, n);
            let shown = sorted(got.words().iter().map(|w| w.display(a.names())).collect());
            let want = match n {
                0 => {
                    ok &= got.words() == [Word::empty()];
                    shown.clone()
                }
                1 => sorted(vec!["a".into(), "b".into()]),
                _ => sorted(expected_chains(p as usize, n).into_iter().map(|(i, j)| ba_string(i, j)).collect()),
            };
            if shown != want || got.len() != n + 1 {
                ok = false;
                bad.push(format!("p={p} n={n}"));
            }
        }
    }
    let c3 = sorted(expected_chains(3, 3).into_iter().map(|(i, j)| ba_string(i, j)).collect());
    outcome(ok, format!("n <= {TOP}, e.g. C_3(A_3) = {{{}}} {}", c3.join(", "), bad.join(" ")))
}

fn criterion_4() -> Result<Outcome> {
    let mut ok = true;
    let mut detail = Vec::new();
    for p in PRIMES {
        let a = algebras::build_a(p)?;
        let res = AnickResolution::new(&a, TOP + 1, Exec::default())?;
        let ext = res.ext_dims(TOP)?;
        let dims_ok = ext.dims == (1..=TOP + 1).collect::<Vec<_>>();
        let pu = p as usize;
        let profiles_ok = (1..=TOP).all(|n| {
            let m = n.div_ceil(2);
            let mut want = if n % 2 == 1 {
                vec![(m - 1) * pu + 1; n + 1]
            } else {
                let mut v = vec![m * pu; m + 1];
                v.extend(vec![(m - 1) * pu + 2; m]);
                v
            };
            want.sort_unstable();
            chain_degree_profile(res.chain_set(n)) == want
        });
        ok &= dims_ok && ext.is_minimal() && profiles_ok;
        detail.push(format!("p={p} dims {:?} minimal {}", ext.dims, ext.is_minimal()));
    }
    outcome(ok, detail.join("; "))
}

fn criterion_5() -> Result<Outcome> {
    let start = Instant::now();
    let a = algebras::build_a(3)?;
    let bar = bar(&a)?;
    let oracle: Vec<usize> = (0..=3).map(|n| bar.ext_dim(n)).collect::<Result<_>>()?;
    let (anick, _) = ext_dims(&a, 3)?;
    let elapsed = start.elapsed();
    let ok = oracle == anick && oracle == [1, 2, 3, 4] && elapsed < Duration::from_secs(60);
    outcome(ok, format!("oracle {oracle:?} Anick {anick:?} in {elapsed:.2?}"))
}

fn criterion_6() -> Result<Outcome> {
    let mut ok = true;
    for p in PRIMES {
        let (gr, _) = ext_dims(&algebras::build_gr_a(p)?, TOP)?;
        let (a, _) = ext_dims(&algebras::build_a(p)?, TOP)?;
        ok &= gr == a;
    }
    outcome(ok, format!("gr A_p and A_p agree for n <= {TOP}, p = 3, 5, 7"))
}

fn criterion_7() -> Result<Outcome> {
    let a = algebras::build_a(3)?;
    let f = a.field();
    let bar = bar(&a)?;
    let lift = algebras::build_b(3)?;
    let act = algebras::shear_action(3)?;
    let xa = coefficient_cochain(&bar, &lift, &Word::power(A, 3))?;
    let xb = coefficient_cochain(&bar, &lift, &Word::power(B, 3))?;
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, x) in [("xi_a", &xa), ("xi_b", &xb)] {
        ok &= bar.is_cocycle(x)? && !bar.is_coboundary(x)?;
        let gx = bar.g_action(x, &act)?;
        // invariance is decided by solving g.x - x = d(y)
        ok &= bar.coboundary_witness(&gx.sub(x)?)?.is_some();
        if gx != *x {
            notes.push(format!("{name} invariant only up to a coboundary"));
        }
    }
    ok &= bar.is_coboundary(&xa.cup(&xb)?.sub(&xb.cup(&xa)?)?)?;
    let ea = dual_cochain(&bar, &Word::letter(A))?;
    let eb = dual_cochain(&bar, &Word::letter(B))?;
    let eab = ea.cup(&eb)?;
    ok &= bar.is_coboundary(&ea.cup(&ea)?.add_scaled(&eab, f.neg(f.half()))?)?;
    ok &= bar.is_coboundary(&eb.cup(&eb)?)?;
    ok &= bar.is_coboundary(&eb.cup(&ea)?.add(&eab)?)?;
    let note = if notes.is_empty() { String::new() } else { format!(" ({})", notes.join(", ")) };
    outcome(ok, format!("cocycles, invariance, commutator and eta relations by membership solves{note}"))
}

fn criterion_8() -> Result<Outcome> {
    let a = algebras::build_a(3)?;
    let bar = bar(&a)?;
    let act = algebras::shear_action(3)?;
    let ea = dual_cochain(&bar, &Word::letter(A))?;
    let eb = dual_cochain(&bar, &Word::letter(B))?;
    // coordinates of g.eta in the basis (eta_a, eta_b), found by trying all pairs
    let coords = |z: &Cochain| -> Result<Option<[u32; 2]>> {
        for x in 0..3 {
            for y in 0..3 {
                let c = ea.scaled(x).add(&eb.scaled(y))?;
                if bar.cohomologous(z, &c)? {
                    return Ok(Some([x, y]));
                }
            }
        }
        Ok(None)
    };
    let ga = coords(&bar.g_action(&ea, &act)?)?;
    let gb = coords(&bar.g_action(&eb, &act)?)?;
    let matrix = match (ga, gb) {
        (Some(x), Some(y)) => Some([[x[0], y[0]], [x[1], y[1]]]),
        _ => None,
    };
    let eab = ea.cup(&eb)?;
    let fixed = bar.cohomologous(&bar.g_action(&eab, &act)?, &eab)?;
    let ok = matrix == Some([[1, 0], [1, 1]]) && fixed;
    outcome(ok, format!("g on H^1 = {matrix:?}, eta_a eta_b fixed: {fixed}"))
}

fn criterion_9() -> Result<Outcome> {
    let mut ok = true;
    for n in 0..=50usize {
        let mut count = 0;
        for l in 0..=1 {
            for m in 0..=1 {
                let rest = n as isize - l - m;
                if rest >= 0 && rest % 2 == 0 {
                    // i + j = rest / 2
                    count += rest as usize / 2 + 1;
                }
            }
        }
        ok &= count == n + 1 && free_basis_count(n) == n + 1;
    }
    outcome(ok, "tuple count = n+1 for n <= 50")
}

fn embedding_is_multiplicative(a: &QuotientAlgebra, s: &SmashProduct) -> bool {
    let f = a.field();
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            let img = SparseVec::from_pairs(f, a.mul_basis(i, j).iter().map(|(k, c)| (s.embedding[k], c)).collect());
            s.algebra.mul_basis(s.embedding[i], s.embedding[j]) == &img
        })
    })
}

fn criterion_10() -> Result<Outcome> {
    let mut ok = true;
    let mut dims = Vec::new();
    for p in PRIMES {
        let a = algebras::build_a(p)?;
        let act = algebras::shear_action(p)?;
        ok &= validate_action(&act, a.presented())?.all_ok();
        let s = algebras::build_smash(&a, &act)?;
        ok &= s.algebra.dim() == (p * p * p) as usize;
        ok &= embedding_is_multiplicative(&a, &s);
        dims.push(s.algebra.dim());
    }
    let s = algebras::smash(3)?;
    let h1 = bar(&s.algebra)?.ext_dim(1)?;
    ok &= h1 == 2;
    outcome(ok, format!("dims {dims:?}, H^1(A_3#kG) = {h1}"))
}

fn criterion_11() -> Result<Outcome> {
    let a = algebras::build_a(3)?;
    let act = algebras::shear_action(3)?;
    let page = e2_page(&bar(&a)?, &act, 2, 2)?;
    let s = algebras::smash(3)?;
    let sbar = bar(&s.algebra)?;
    let mut ok = true;
    let mut pairs = Vec::new();
    for n in 0..=2 {
        let lhs = sbar.ext_dim(n)?;
        let rhs = page.total(n);
        ok &= lhs <= rhs;
        if n == 1 {
            ok &= lhs == rhs && page.get(1, 0) == 1 && page.get(0, 1) == 1;
        }
        pairs.push(format!("{lhs}<={rhs}"));
    }
    outcome(ok, format!("n=0,1,2: {}", pairs.join(", ")))
}

/// Random unipotent upper triangular matrix; size at most `p` so that `M^p = I`.
fn random_unipotent(f: PrimeField, rng: &mut ChaCha8Rng) -> FMatrix {
    let p = f.p() as usize;
    let n = rng.gen_range(1..=p);
    let mut m = FMatrix::identity(f, n);
    for r in 0..n {
        for c in r + 1..n {
            m.set(r, c, rng.gen_range(0..f.p()));
        }
    }
    m
}

fn criterion_12() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut failures = Vec::new();

    for p in PRIMES {
        let a = algebras::build_a(p)?;
        if !AnickResolution::new(&a, 6, Exec::default())?.d_squared_vanishes() {
            failures.push(format!("Anick dd p={p}"));
        }
    }
    let s = algebras::smash(3)?;
    if !AnickResolution::new(&s.algebra, 4, Exec::default())?.d_squared_vanishes() {
        failures.push("Anick dd smash".into());
    }

    let a = algebras::build_a(3)?;
    let f = a.field();
    let abar = bar(&a)?;
    let sbar = bar(&s.algebra)?;
    for (label, bc) in [("A", &abar), ("smash", &sbar)] {
        for _ in 0..8 {
            for n in 0..2 {
                let c = Cochain::random(f, bc.width(), n, &mut rng);
                if !bc.differential(&bc.differential(&c)?)?.is_zero() {
                    failures.push(format!("bar dd {label} n={n}"));
                }
            }
            let (m, n) = (rng.gen_range(0..2), rng.gen_range(0..2));
            let x = Cochain::random(f, bc.width(), m, &mut rng);
            let y = Cochain::random(f, bc.width(), n, &mut rng);
            let sign = if m % 2 == 0 { 1 } else { f.neg(1) };
            let lhs = bc.differential(&x.cup(&y)?)?;
            let rhs = bc.differential(&x)?.cup(&y)?.add_scaled(&x.cup(&bc.differential(&y)?)?, sign)?;
            if lhs != rhs {
                failures.push(format!("Leibniz {label} ({m},{n})"));
            }
        }
    }

    for _ in 0..8 {
        let (m, n) = (rng.gen_range(0..3), rng.gen_range(0..2));
        let x = Cochain::random(f, sbar.width(), m, &mut rng);
        let y = Cochain::random(f, sbar.width(), n, &mut rng);
        let whole = sbar.restrict(&x.cup(&y)?, &s, &abar)?;
        let parts = sbar.restrict(&x, &s, &abar)?.cup(&sbar.restrict(&y, &s, &abar)?)?;
        if whole != parts {
            failures.push(format!("restriction ({m},{n})"));
        }
    }

    for n in 0..=2 {
        let basis = CohomologyBasis::new(&sbar, n)?;
        for z in &basis.representatives {
            if !sbar.cohomologous(&sbar.g_action(z, &s.conjugation)?, z)? {
                failures.push(format!("G-action on H^{n}(A#kG)"));
            }
        }
    }

    let mut modules = 0;
    for p in PRIMES {
        let f = PrimeField::new(p)?;
        for _ in 0..10 {
            let m = GModule::new(random_unipotent(f, &mut rng), p as usize)?;
            modules += 1;
            if !(1..8).all(|n| cyclic_cohomology(&m, n) == cyclic_cohomology(&m, n + 2)) {
                failures.push(format!("periodicity p={p}"));
            }
        }
    }

    let ok = failures.is_empty();
    let detail = if ok {
        format!("0 failures ({modules} random modules, seed 12)")
    } else {
        format!("{} failures: {}", failures.len(), failures.join(", "))
    };
    outcome(ok, detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Groebner bases and PBW", criterion_1),
        ("centrality of a^p, b^p in B", criterion_2),
        ("chains match the closed form", criterion_3),
        ("minimality, dims and chain degrees", criterion_4),
        ("bar oracle equals Anick", criterion_5),
        ("gr A has the same dims", criterion_6),
        ("cocycle suite at p = 3", criterion_7),
        ("G-action on H^1(A_3)", criterion_8),
        ("Hilbert identity", criterion_9),
        ("smash product", criterion_10),
        ("LHS consistency at p = 3", criterion_11),
        ("property suites", criterion_12),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run));
        let (ok, detail) = match result {
            Ok(Ok(o)) => (o.ok, o.detail),
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {}  {title}: {detail} [{:.2?}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
