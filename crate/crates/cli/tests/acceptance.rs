//! Acceptance criteria, run in order with exact equality throughout. Each
//! criterion prints one `PASS`/`FAIL` line; the test fails if any criterion
//! does.

use std::fmt::Debug;
use std::ops::{Add, Mul};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use bpdq::arith::Discriminant;
use bpdq::binet::Binet;
use bpdq::genfunc::{f_odd, gf_dual_quat, gf_dual_quat_reduced, gf_scalar, r_parts, s_parts};
use bpdq::identities::{run_identity, Grid, Mode, Parity, Status, Verdict};
use bpdq::report::CheckReport;
use bpdq::sequence::{fib, SequenceCache};
use bpdq::verify::default_matrix;
use bpdq::{rat, BiperiodicParams, DualQuaternion, DualScalar, QuadElem, Quaternion, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit} s"))
}

/// Plain bi-periodic recurrence over `lo..=hi`, solved backwards below zero.
struct Oracle {
    lo: i64,
    values: Vec<Rational>,
}

impl Oracle {
    fn new(p: &BiperiodicParams, lo: i64, hi: i64) -> Self {
        let (a, b) = (p.a().clone(), p.b().clone());
        let coef = |n: i64| if n.rem_euclid(2) == 0 { a.clone() } else { b.clone() };
        let mut forward = vec![rat(0), rat(1)];
        for n in 2..=hi.max(1) {
            let next = coef(n) * &forward[n as usize - 1] + &forward[n as usize - 2];
            forward.push(next);
        }
        // F(n-2) = F(n) - c(n) F(n-1)
        let mut backward = vec![rat(1), rat(0)];
        for m in 1..=(-lo).max(0) {
            let n = 2 - m;
            let (f_n, f_n1) = (&backward[backward.len() - 2], &backward[backward.len() - 1]);
            let prev = f_n.clone() - coef(n) * f_n1;
            backward.push(prev);
        }
        let neg: Vec<Rational> = backward[2..].iter().rev().cloned().collect();
        let mut values = neg;
        values.extend(forward.into_iter().take((hi + 1).max(0) as usize));
        let lo_eff = -(values.len() as i64 - (hi + 1).max(0));
        Oracle { lo: lo_eff, values }
    }

    fn f(&self, n: i64) -> &Rational {
        &self.values[(n - self.lo) as usize]
    }

    /// `Q̃n` as eight coefficients `(Fn..Fn+3 ; Fn+1..Fn+4)`.
    fn dq(&self, n: i64) -> [Rational; 8] {
        std::array::from_fn(|i| self.f(n + (i % 4) as i64 + (i / 4) as i64).clone())
    }
}

fn ham(p: &[Rational], q: &[Rational]) -> [Rational; 4] {
    let (a1, b1, c1, d1) = (&p[0], &p[1], &p[2], &p[3]);
    let (a2, b2, c2, d2) = (&q[0], &q[1], &q[2], &q[3]);
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn dq_mul(p: &[Rational; 8], q: &[Rational; 8]) -> [Rational; 8] {
    let primal = ham(&p[..4], &q[..4]);
    let d1 = ham(&p[..4], &q[4..]);
    let d2 = ham(&p[4..], &q[..4]);
    std::array::from_fn(|i| if i < 4 { primal[i].clone() } else { &d1[i - 4] + &d2[i - 4] })
}

fn flat(d: &DualQuaternion<Rational>) -> [Rational; 8] {
    std::array::from_fn(|i| d.coefficients()[i].clone())
}

fn criterion_1(m: &[BiperiodicParams]) -> Outcome {
    let start = Instant::now();
    for p in m {
        let mut cache = SequenceCache::new(p.clone());
        cache.fill(0, 80);
        let c = p.ab() + rat(2);
        for n in 4..=80 {
            let lhs = cache.fib(n);
            let rhs = &c * cache.fib(n - 2) - cache.fib(n - 4);
            ensure(lhs == rhs, || format!("{p} n={n}: {lhs} != {rhs}"))?;
        }
    }
    within(start.elapsed(), 1)?;
    Ok(format!("order-4 recurrence, n in 4..=80 ({:?})", start.elapsed()))
}

fn criterion_2(m: &[BiperiodicParams]) -> Outcome {
    let start = Instant::now();
    for p in m {
        let oracle = Oracle::new(p, 0, 80);
        let binet = Binet::new(p).map_err(|e| e.to_string())?;
        for n in 0..=80 {
            let v = binet.scalar(n).map_err(|e| format!("{p} n={n}: {e}"))?;
            ensure(&v == oracle.f(n), || format!("{p} n={n}: {v} != {}", oracle.f(n)))?;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("scalar Binet, n in 0..=80 ({:?})", start.elapsed()))
}

fn criterion_3(m: &[BiperiodicParams]) -> Outcome {
    let start = Instant::now();
    for p in m {
        let oracle = Oracle::new(p, 0, 45);
        let binet = Binet::new(p).map_err(|e| e.to_string())?;
        let (a, ab) = (p.a().clone(), p.ab());
        let base: [Rational; 8] =
            [rat(0), rat(1), a.clone(), &ab + rat(1), rat(1), a.clone(), &ab + rat(1), &a * (&ab + rat(2))];
        ensure(oracle.dq(0) == base, || format!("{p}: base case of the recurrence"))?;
        for n in 0..=40 {
            let v = flat(&binet.dual_quat(n).map_err(|e| format!("{p} n={n}: {e}"))?);
            ensure(v == oracle.dq(n), || format!("{p} n={n}: {v:?}"))?;
        }
    }
    within(start.elapsed(), 10)?;
    Ok(format!("dual-quaternion Binet, n in 0..=40 ({:?})", start.elapsed()))
}

fn criterion_4(m: &[BiperiodicParams]) -> Outcome {
    for p in m {
        let oracle = Oracle::new(p, -40, 40);
        let mut cache = SequenceCache::new(p.clone());
        cache.fill(-40, 40);
        for n in 1..=40i64 {
            let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
            let expected = sign * oracle.f(n);
            ensure(oracle.f(-n) == &expected, || format!("{p} n={n}: backward recurrence disagrees with sign rule"))?;
            ensure(cache.fib(-n) == expected, || format!("{p} n={n}: cache"))?;
            ensure(fib(p, -n) == expected, || format!("{p} n={n}: fib"))?;
        }
    }
    Ok("sign rule and backward recurrence, n in 1..=40".into())
}

fn criterion_5(m: &[BiperiodicParams]) -> Outcome {
    for p in m {
        let oracle = Oracle::new(p, 0, 32);
        let g = gf_scalar(p, 32).map_err(|e| e.to_string())?;
        let coeffs = g.coefficients(0, 32).map_err(|e| e.to_string())?;
        for (n, c) in coeffs.iter().enumerate() {
            ensure(c == oracle.f(n as i64), || format!("{p} coefficient {n}: {c}"))?;
        }
    }
    Ok("scalar generating function, 33 coefficients".into())
}

fn criterion_6(m: &[BiperiodicParams]) -> Outcome {
    let start = Instant::now();
    for p in m {
        let oracle = Oracle::new(p, 0, 30);
        let f = f_odd(p, 27).map_err(|e| e.to_string())?;
        ensure(!f.shift(-3).negative_exponents().is_empty(), || format!("{p}: f/t^3 has no negative terms"))?;
        for parts in [r_parts(p, 24), s_parts(p, 24)] {
            let parts = parts.map_err(|e| e.to_string())?;
            for c in &parts.components {
                ensure(c.negative_exponents().is_empty(), || format!("{p}: negative terms survive: {c}"))?;
            }
        }
        let g = gf_dual_quat(p, 24).map_err(|e| e.to_string())?;
        let coeffs = g.coefficients(0, 24).map_err(|e| e.to_string())?;
        for (n, c) in coeffs.iter().enumerate() {
            ensure(flat(c) == oracle.dq(n as i64), || format!("{p} coefficient {n}: {c}"))?;
        }
        if p.a() == p.b() {
            let reduced = gf_dual_quat_reduced(p, 24).map_err(|e| e.to_string())?;
            let rc = reduced.coefficients(0, 24).map_err(|e| e.to_string())?;
            ensure(rc == coeffs, || format!("{p}: reduced form differs"))?;
        }
    }
    within(start.elapsed(), 20)?;
    Ok(format!("quaternion generating function, 25 coefficients ({:?})", start.elapsed()))
}

fn criterion_7(m: &[BiperiodicParams]) -> Outcome {
    let start = Instant::now();
    let (mut reports, mut unconfirmed) = (0, 0);
    for p in m {
        let oracle = Oracle::new(p, -2, 30);
        let grids = [
            Grid::Catalan { r_values: vec![0, 2, 4], n_max: 20, mode: Mode::Strict },
            Grid::Cassini { parity: Parity::Odd, m_min: 0, m_max: 9 },
            Grid::Cassini { parity: Parity::Even, m_min: 0, m_max: 9 },
        ];
        for grid in &grids {
            let report = run_identity(p, grid).map_err(|e| format!("{p}: {e}"))?;
            for case in &report.cases {
                let expected = {
                    let prod = dq_mul(&oracle.dq(case.n - case.r), &oracle.dq(case.n + case.r));
                    let sq = dq_mul(&oracle.dq(case.n), &oracle.dq(case.n));
                    let d: [Rational; 8] = std::array::from_fn(|i| &prod[i] - &sq[i]);
                    d
                };
                ensure(flat(&case.lhs) == expected, || format!("{p} n={} r={}: lhs differs from oracle", case.n, case.r))?;
                if case.r == 0 {
                    ensure(case.lhs.is_zero(), || format!("{p} n={}: lhs at r = 0", case.n))?;
                }
                let adjudicated = match case.status {
                    Status::Match => case.delta.as_ref().is_some_and(Zero::is_zero),
                    Status::Mismatch => case.delta.as_ref().is_some_and(|d| !d.is_zero()) || case.note.is_some(),
                };
                ensure(adjudicated, || format!("{p} n={} r={}: not adjudicated", case.n, case.r))?;
            }
            for c in &report.consistency {
                ensure(c.holds, || format!("{p}: consistency check failed: {}", c.check))?;
            }
            reports += 1;
            unconfirmed += usize::from(report.verdict() != Verdict::Confirmed);
            let merged = CheckReport::from_identity_reports(p, report.kind.name(), std::slice::from_ref(&report));
            ensure(merged.summary.total == report.cases.len(), || "report case count".into())?;
        }
    }
    within(start.elapsed(), 30)?;
    Ok(format!("identities adjudicated, {reports} reports, {unconfirmed} not confirmed ({:?})", start.elapsed()))
}

fn criterion_8() -> Outcome {
    let fibo = BiperiodicParams::fibonacci();
    let classical: Vec<Rational> = {
        let mut v = vec![rat(0), rat(1)];
        for n in 2..=12 {
            let next = &v[n - 1] + &v[n - 2];
            v.push(next);
        }
        v
    };
    let mut cache = SequenceCache::new(fibo.clone());
    cache.fill(0, 12);
    for n in 0..=8i64 {
        let f = |k: i64| classical[(n + k) as usize].clone();
        ensure(cache.fib(n) == f(0), || format!("scalar n={n}"))?;
        let dual = bpdq::sequence::dual_fib(&fibo, n);
        ensure(dual == DualScalar::new(f(0), f(1)), || format!("dual n={n}"))?;
        let quat = bpdq::sequence::fib_quat(&fibo, n);
        ensure(quat == Quaternion::new(f(0), f(1), f(2), f(3)), || format!("quaternion n={n}"))?;
        let dq = cache.dual_fib_quat(n);
        ensure(flat(&dq) == std::array::from_fn(|i| f((i % 4 + i / 4) as i64)), || format!("dual quaternion n={n}"))?;
    }
    let q5 = flat(&cache.dual_fib_quat(5));
    let want = [5, 8, 13, 21, 8, 13, 21, 34].map(rat);
    ensure(q5 == want, || format!("Q5 = {q5:?}"))?;
    let pell = BiperiodicParams::pell();
    let got: Vec<Rational> = (0..=6).map(|n| fib(&pell, n)).collect();
    ensure(got == [0, 1, 2, 5, 12, 29, 70].map(rat), || format!("Pell {got:?}"))?;
    Ok("Fibonacci and Pell specializations".into())
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=12).into())
}

fn ring_axioms<T>(name: &str, mut gen: impl FnMut() -> T) -> Result<(), String>
where
    T: Clone + PartialEq + Debug + Add<Output = T> + Mul<Output = T>,
{
    for i in 0..200 {
        let (x, y, z) = (gen(), gen(), gen());
        let assoc_add = (x.clone() + y.clone()) + z.clone() == x.clone() + (y.clone() + z.clone());
        let assoc_mul = (x.clone() * y.clone()) * z.clone() == x.clone() * (y.clone() * z.clone());
        let left = x.clone() * (y.clone() + z.clone()) == x.clone() * y.clone() + x.clone() * z.clone();
        let right = (x.clone() + y.clone()) * z.clone() == x.clone() * z.clone() + y.clone() * z.clone();
        ensure(assoc_add && assoc_mul && left && right, || format!("{name} triple {i}: {x:?}, {y:?}, {z:?}"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let rng = &mut rng;
    ring_axioms("rational", || random_rational(rng))?;
    for d in [5, 32, 1365] {
        let disc = Arc::new(Discriminant::new(rat(d)));
        ring_axioms(&format!("quadratic D={d}"), || QuadElem::new(random_rational(rng), random_rational(rng), &disc))?;
    }
    ring_axioms("dual", || DualScalar::new(random_rational(rng), random_rational(rng)))?;
    let quat = |rng: &mut ChaCha8Rng| {
        Quaternion::new(random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng))
    };
    ring_axioms("quaternion", || quat(rng))?;
    ring_axioms("dual quaternion", || DualQuaternion::new(quat(rng), quat(rng)))?;

    let basis = Quaternion::<Rational>::basis();
    let (one, i, j, k) = (basis[0].clone(), basis[1].clone(), basis[2].clone(), basis[3].clone());
    let neg = |q: &Quaternion<Rational>| -q.clone();
    let table = [
        [one.clone(), i.clone(), j.clone(), k.clone()],
        [i.clone(), neg(&one), k.clone(), neg(&j)],
        [j.clone(), neg(&k), neg(&one), i.clone()],
        [k.clone(), j.clone(), neg(&i), neg(&one)],
    ];
    for (r, row) in table.iter().enumerate() {
        for (c, want) in row.iter().enumerate() {
            let got = basis[r].clone() * basis[c].clone();
            ensure(&got == want, || format!("basis product {r}{c}: {got}"))?;
        }
    }
    ensure(i.clone() * j.clone() * k.clone() == neg(&one), || "ijk".into())?;

    let eps = DualQuaternion::pure_dual(Quaternion::<Rational>::one());
    ensure((eps.clone() * eps.clone()).is_zero(), || "epsilon squared".into())?;
    let dual_basis: Vec<DualQuaternion<Rational>> = basis
        .iter()
        .map(|q| DualQuaternion::from_primal(q.clone()))
        .chain(basis.iter().map(|q| DualQuaternion::pure_dual(q.clone())))
        .collect();
    for e in &dual_basis {
        ensure(eps.clone() * e.clone() == e.clone() * eps.clone(), || format!("epsilon does not commute with {e}"))?;
    }
    let scalar_eps = DualScalar::<Rational>::epsilon();
    ensure((scalar_eps.clone() * scalar_eps).is_zero(), || "scalar epsilon squared".into())?;
    ensure(DualScalar::<Rational>::one().real == rat(1), || "dual one".into())?;
    Ok("ring axioms on 200 random triples per ring, Hamilton table, epsilon centrality".into())
}

fn criterion_10(suite_start: Instant) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_bpdq"))
        .args(["verify", "--suite", "all"])
        .env_remove("BPDQ_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("verify exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    let elapsed = suite_start.elapsed();
    within(elapsed, 60)?;
    Ok(format!("verify --suite all exits 0, total {elapsed:?}"))
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let m = default_matrix();
    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome>)> = vec![
        (1, Box::new(|| criterion_1(&m))),
        (2, Box::new(|| criterion_2(&m))),
        (3, Box::new(|| criterion_3(&m))),
        (4, Box::new(|| criterion_4(&m))),
        (5, Box::new(|| criterion_5(&m))),
        (6, Box::new(|| criterion_6(&m))),
        (7, Box::new(|| criterion_7(&m))),
        (8, Box::new(criterion_8)),
        (9, Box::new(criterion_9)),
        (10, Box::new(move || criterion_10(start))),
    ];
    let mut failed = Vec::new();
    for (id, run) in &criteria {
        match run() {
            Ok(msg) => println!("PASS criterion {id}: {msg}"),
            Err(msg) => {
                println!("FAIL criterion {id}: {msg}");
                failed.push(*id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
