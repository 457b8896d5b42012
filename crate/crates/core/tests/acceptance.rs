//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cobasis::oracle::{all_pairs, oracle_values, sweep_bases, verify_pairs};
use cobasis::registry::{
    explicit_v, explicit_w, jacobi_to_monomial, monomial_to_jacobi, monomial_to_parity, parity_to_monomial,
    v_to_monomial, w_to_monomial,
};
use cobasis::{
    build_matrix, compose, compose_mixed, compose_parity, connection_matrix, fixtures, jacobi_connection,
    kernel::{choose, pochhammer},
    lift_beta_to_alpha, registry, BasisSpec, CoefficientFunction, PolyCoords, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_DEGREE: usize = 8;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Self::new(false, detail)
    }
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

/// Rows `0..=max_n` of two coefficient functions agree, after `scale(n, k)`
/// is applied to the second.
fn rows_match(
    lhs: &CoefficientFunction,
    rhs: &CoefficientFunction,
    max_n: usize,
    scale: impl Fn(usize, usize) -> Rational,
) -> Result<(), String> {
    for n in 0..=max_n {
        let (a, b) = (
            lhs.row(n).map_err(|e| e.to_string())?,
            rhs.row(n).map_err(|e| e.to_string())?,
        );
        if a.len() != b.len() {
            return Err(format!("row {n} lengths differ"));
        }
        for (k, (x, y)) in a.iter().zip(&b).enumerate() {
            if *x != y * &scale(n, k) {
                return Err(format!(
                    "{} vs {} differ at (n={n}, k={k}): {x} != {y}·scale",
                    lhs.domain(),
                    rhs.domain()
                ));
            }
        }
    }
    Ok(())
}

fn same(lhs: &CoefficientFunction, rhs: &CoefficientFunction, max_n: usize) -> Result<(), String> {
    rows_match(lhs, rhs, max_n, |_, _| Rational::one())
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for fixture in fixtures::all() {
        match fixture.run() {
            Ok(results) => {
                for c in results {
                    checks += 1;
                    if !c.passed() {
                        return Outcome::fail(format!(
                            "{} / {}: expected {:?}, got {:?}",
                            fixture.name, c.label, c.expected, c.computed
                        ));
                    }
                }
            }
            Err(e) => return Outcome::fail(format!("{}: {e}", fixture.name)),
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        elapsed < Duration::from_secs(1),
        format!("8 fixtures, {checks} exact checks in {} (limit 1s)", secs(elapsed)),
    )
}

fn oracle_sweep() -> Outcome {
    let bases = sweep_bases();
    let pairs = all_pairs(&bases);
    let start = Instant::now();
    let reports = verify_pairs(&pairs, SWEEP_DEGREE);
    let elapsed = start.elapsed();
    if let Some(bad) = reports.iter().find(|r| !r.equal) {
        return Outcome::fail(format!("first failure: {}", bad.to_json_line()));
    }
    Outcome::new(
        elapsed < Duration::from_secs(60),
        format!(
            "{} ordered pairs at degree {SWEEP_DEGREE} equal in {} (limit 60s)",
            reports.len(),
            secs(elapsed)
        ),
    )
}

fn round_trip() -> Outcome {
    let bases = sweep_bases();
    let mut count = 0;
    for (a, b) in all_pairs(&bases) {
        let product = connection_matrix(&a, &b, SWEEP_DEGREE)
            .and_then(|ab| connection_matrix(&b, &a, SWEEP_DEGREE).and_then(|ba| ab.mul(&ba)));
        match product {
            Ok(m) if m.is_identity() => count += 1,
            Ok(_) => return Outcome::fail(format!("M({a}→{b})·M({b}→{a}) is not the identity")),
            Err(e) => return Outcome::fail(format!("{a}, {b}: {e}")),
        }
    }
    Outcome::new(
        true,
        format!("{count} pairs give the identity at degree {SWEEP_DEGREE}"),
    )
}

fn jacobi_swap() -> Outcome {
    let quads = [
        ["2", "7", "1", "8"],
        ["-1/2", "1/2", "1/2", "-1/2"],
        ["1/3", "5/4", "3/2", "0"],
    ];
    for [a, b, c, d] in quads {
        let (a, b, c, d) = (q(a), q(b), q(c), q(d));
        let forward = jacobi_connection(&a, &b, &c, &d, 6);
        let backward = jacobi_connection(&c, &d, &a, &b, 6);
        match (forward, backward) {
            (Ok(f), Ok(g)) => match f.mul(&g) {
                Ok(m) if m.is_identity() => {}
                Ok(_) => return Outcome::fail(format!("({a},{b},{c},{d}): product is not the identity")),
                Err(e) => return Outcome::fail(e.to_string()),
            },
            (Err(e), _) | (_, Err(e)) => return Outcome::fail(format!("({a},{b},{c},{d}): {e}")),
        }
    }
    Outcome::new(true, "3 parameter quadruples at degree 6")
}

fn specializations() -> Result<String, String> {
    let err = |e: cobasis::Error| e.to_string();

    // Gegenbauer(1) = U, Gegenbauer(1/2) = Legendre, both directions.
    for (lambda, other) in [("1", BasisSpec::ChebyshevU), ("1/2", BasisSpec::Legendre)] {
        let g = BasisSpec::gegenbauer(q(lambda));
        same(
            &parity_to_monomial(&g).map_err(err)?,
            &parity_to_monomial(&other).map_err(err)?,
            10,
        )?;
        same(
            &monomial_to_parity(&g).map_err(err)?,
            &monomial_to_parity(&other).map_err(err)?,
            10,
        )?;
    }

    // V_n = 4^n / C(2n,n) P_n^(-1/2,1/2) and W_n likewise with (1/2,-1/2).
    let vw_scale = |m: usize| Rational::pow2(2 * m as i64) / choose(2 * m, m);
    for (to, from, a, b) in [
        (v_to_monomial(), cobasis::registry::monomial_to_v(), "-1/2", "1/2"),
        (w_to_monomial(), cobasis::registry::monomial_to_w(), "1/2", "-1/2"),
    ] {
        rows_match(&to, &jacobi_to_monomial(q(a), q(b)), 10, |n, _| vw_scale(n))?;
        let inv = |m: usize| vw_scale(m).recip().unwrap();
        rows_match(&from, &monomial_to_jacobi(q(a), q(b)), 10, |n, k| inv(n - k))?;
    }

    // C_n^(λ) = (2λ)_n / (λ+1/2)_n · P_n^(λ-1/2, λ-1/2).
    for lambda in ["1/2", "1", "3/2", "2"] {
        let lambda = q(lambda);
        let shift = &lambda - q("1/2");
        let scale = |m: usize| pochhammer(&(Rational::integer(2) * &lambda), m) / pochhammer(&(&lambda + q("1/2")), m);
        let g = BasisSpec::gegenbauer(lambda.clone());
        let g_to = registry::to_monomial(&g).map_err(err)?;
        let g_from = registry::from_monomial(&g).map_err(err)?;
        rows_match(&g_to, &jacobi_to_monomial(shift.clone(), shift.clone()), 8, |n, _| {
            scale(n)
        })?;
        rows_match(&g_from, &monomial_to_jacobi(shift.clone(), shift.clone()), 8, |n, k| {
            scale(n - k).recip().unwrap()
        })?;
    }

    // Explicit V/W sums against the Jacobi-derived closed forms.
    same(&explicit_v(), &v_to_monomial(), 10)?;
    same(&explicit_w(), &w_to_monomial(), 10)?;
    Ok("Gegenbauer(1)=U, Gegenbauer(1/2)=P, V/W Jacobi scaling, Gegenbauer-Jacobi scaling, explicit V/W sums".into())
}

fn chebyshev_limit() -> Outcome {
    let lambda = Rational::new(1, 1_000_000);
    let g = parity_to_monomial(&BasisSpec::gegenbauer(lambda.clone())).unwrap();
    let t = parity_to_monomial(&BasisSpec::ChebyshevT).unwrap();
    let mut worst = 0.0f64;
    for n in 1..=8usize {
        for k in 0..=n / 2 {
            let scaled = Rational::from(n) / (Rational::integer(2) * &lambda) * g.eval(n, k).unwrap();
            let exact = t.eval(n, k).unwrap();
            let rel = ((&scaled - &exact) / &exact).abs().to_f64();
            worst = worst.max(rel);
        }
    }
    Outcome::new(
        worst < 1e-4,
        format!("max relative error {worst:.3e} at λ = 1e-6 (limit 1e-4)"),
    )
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

fn evaluate(coords: &PolyCoords, x: &Rational) -> Result<Rational, String> {
    let values = oracle_values(&coords.basis, coords.degree(), x).map_err(|e| e.to_string())?;
    Ok(coords.coeffs.iter().zip(&values).map(|(c, v)| c * v).sum())
}

fn path_equivalence() -> Result<String, String> {
    let err = |e: cobasis::Error| e.to_string();
    let parity: Vec<BasisSpec> = vec![
        BasisSpec::ChebyshevT,
        BasisSpec::ChebyshevU,
        BasisSpec::Legendre,
        BasisSpec::HermitePhys,
        BasisSpec::HermiteProb,
        BasisSpec::gegenbauer(q("3/2")),
    ];
    let general: Vec<BasisSpec> = vec![
        BasisSpec::laguerre(q("1/2")),
        BasisSpec::ShiftedV,
        BasisSpec::ChebyshevW,
        BasisSpec::jacobi(q("2"), q("7")),
        BasisSpec::shifted_monomial(q("1/3"), q("-2/3")),
    ];

    // Parity-compressed and mixed compositions against the lifted general sum.
    for from in &parity {
        let b2 = parity_to_monomial(from).map_err(err)?;
        for to in parity.iter().filter(|t| *t != from) {
            let b1 = monomial_to_parity(to).map_err(err)?;
            let fast = lift_beta_to_alpha(&compose_parity(&b1, &b2).map_err(err)?).map_err(err)?;
            let slow = compose(
                &lift_beta_to_alpha(&b1).map_err(err)?,
                &lift_beta_to_alpha(&b2).map_err(err)?,
            )
            .map_err(err)?;
            same(&fast, &slow, 10)?;
        }
        let b1 = monomial_to_parity(from).map_err(err)?;
        for source in &general {
            let a2 = registry::to_monomial(source).map_err(err)?;
            let mixed = compose_mixed(&b1, &a2).map_err(err)?;
            let slow = compose(&lift_beta_to_alpha(&b1).map_err(err)?, &a2).map_err(err)?;
            same(&mixed, &slow, 10)?;
        }
    }

    // Random pairs: composition vs matrix product, and evaluation consistency.
    let bases = sweep_bases();
    let points = ["-1", "-1/2", "0", "1/3", "1"].map(q);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let a = &bases[rng.gen_range(0..bases.len())];
        let b = &bases[rng.gen_range(0..bases.len())];
        let direct = connection_matrix(a, b, SWEEP_DEGREE).map_err(err)?;
        let via = connection_matrix(&BasisSpec::Monomial, b, SWEEP_DEGREE)
            .and_then(|inbound| inbound.mul(&connection_matrix(a, &BasisSpec::Monomial, SWEEP_DEGREE)?))
            .map_err(err)?;
        if direct != via {
            return Err(format!(
                "{a}→{b}: composed matrix differs from the product of built matrices"
            ));
        }
        let built = build_matrix(&cobasis::connection_function(a, b).map_err(err)?, SWEEP_DEGREE).map_err(err)?;
        if a != b && built != direct {
            return Err(format!("{a}→{b}: build of the composed function differs"));
        }

        let p = PolyCoords::new(
            a.clone(),
            (0..=SWEEP_DEGREE).map(|_| random_rational(&mut rng)).collect(),
        );
        let image = direct.apply(&p).map_err(err)?;
        for x in &points {
            let (lhs, rhs) = (evaluate(&p, x)?, evaluate(&image, x)?);
            if lhs != rhs {
                return Err(format!("{a}→{b} at x = {x}: {lhs} != {rhs}"));
            }
        }
    }
    Ok("parity and mixed compositions, compose vs multiply, evaluation at 5 points over 20 random pairs".into())
}

fn from_result(r: Result<String, String>) -> Outcome {
    match r {
        Ok(detail) => Outcome::new(true, detail),
        Err(detail) => Outcome::fail(detail),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked examples reproduce exactly", worked_examples),
        ("closed forms match the recurrence oracle", oracle_sweep),
        ("round-trip identity", round_trip),
        ("Jacobi swap-inverse", jacobi_swap),
        ("specializations", || from_result(specializations())),
        ("Chebyshev T as a Gegenbauer limit", chebyshev_limit),
        ("path equivalence", || from_result(path_equivalence())),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name} ({})", i + 1, outcome.detail);
        if !outcome.passed {
            failures += 1;
        }
    }
    if failures == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
