//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ezt_core::epsilon::{epsilon_product_exact, sign_oracle, EpsilonValue};
use ezt_core::rational::{exact_complex, int, rat, round_complex};
use ezt_core::sampling::{rel_diff, SampleRng};
use ezt_core::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{:.3}s of {}s budget", elapsed.as_secs_f64(), limit.as_secs())
}

fn epsilon_oracle() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut mismatches = 0;
    for n in 2..=5 {
        for idx in enumerate_indices(n) {
            total += 1;
            let exact = epsilon_product_exact(&idx).expect("valid tuple");
            if EpsilonValue::from_rational(&exact) != Some(sign_oracle(&idx)) {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(1);
    outcome(
        mismatches == 0 && total == 4 + 27 + 256 + 3125 && elapsed < limit,
        format!("{total} tuples, {mismatches} mismatches, {}", within(elapsed, limit)),
    )
}

fn closed_form_2d() -> Outcome {
    let t = determinant_ztransform(2).unwrap();
    let want = LaurentPoly::from_terms(2, [(vec![-1, -2], int(1)), (vec![-2, -1], int(-1))]).unwrap();
    outcome(
        t.scale.is_one() && t.body == want,
        format!("scale {}, body {}", t.scale, t.to_text()),
    )
}

fn scale_3d() -> Outcome {
    let det = determinant_ztransform(3).unwrap();
    let bf = brute_force_ztransform(3).unwrap();
    let compact = compact_form_3d();
    let half = det.scale == rat(1, 2);
    let oracle = det.same_transform(&bf);
    let compact_ok = compact.same_transform(&bf);
    outcome(
        half && oracle && compact_ok,
        format!("scale {}, equals brute force: {oracle}, compact form equal: {compact_ok}", det.scale),
    )
}

fn determinant_identity_4_5() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, tuples, fact) in [(4usize, 256usize, 24usize), (5, 3125, 120)] {
        let enumerated = enumerate_indices(n).count();
        let bf = brute_force_ztransform(n).unwrap();
        let unit = bf.body.terms().all(|(_, c)| c == &int(1) || c == &int(-1));
        let det = determinant_ztransform(n).unwrap();
        let equal = det.same_transform(&bf);
        ok &= enumerated == tuples && bf.body.len() == fact && unit && equal;
        notes.push(format!("N={n}: {enumerated} tuples, {} terms, equal {equal}", bf.body.len()));
    }
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(10);
    outcome(ok && elapsed < limit, format!("{}, {}", notes.join("; "), within(elapsed, limit)))
}

fn scale_constant_law() -> Outcome {
    let mut fact = BigInt::one();
    let mut superfact = BigInt::one();
    let mut values = Vec::new();
    let mut ok = true;
    for n in 2..=6usize {
        fact *= BigInt::from(n - 1);
        superfact *= &fact;
        let c = scale_constant(n);
        ok &= c == BigRational::from_integer(superfact.clone());
        values.push(c.to_string());
    }
    ok &= values == ["1", "2", "12", "288", "34560"];
    outcome(ok, format!("values {}", values.join(", ")))
}

fn laplace_2d() -> Outcome {
    let mut ok = true;
    let mut worst = 0.0f64;
    for t in [int(1), rat(1, 2), int(3)] {
        let params = TustinParams::uniform(2, t).unwrap();
        let det = laplace_determinant(2, &params).unwrap();
        let closed = laplace_2d_closed(&params).unwrap();
        ok &= ratfn_eq(&det.to_ratfn(), &closed.to_ratfn());
        let steps = params.steps_f64();
        let mut rng = SampleRng::new(606);
        for _ in 0..100 {
            let s = rng.s_point(&steps, 3.0, 0.25);
            let d = rel_diff(det.eval_precise(&s).unwrap(), closed.eval_precise(&s).unwrap());
            worst = worst.max(d);
        }
    }
    ok &= worst <= 1e-10;
    outcome(ok, format!("exact equality for T in {{1, 1/2, 3}}, max rel diff {worst:.2e} over 300 points"))
}

fn laplace_3d() -> Outcome {
    let start = Instant::now();
    let zt = determinant_ztransform(3).unwrap();
    let mut worst = 0.0f64;
    let mut float_worst = 0.0f64;
    let mut points = 0;
    for steps in [vec![int(1); 3], vec![int(1), rat(1, 2), rat(3, 2)]] {
        let params = TustinParams::new(steps).unwrap();
        let det = laplace_determinant(3, &params).unwrap();
        let compact = laplace_compact_3d(&params).unwrap();
        let steps = params.steps_f64();
        let mut rng = SampleRng::new(707);
        for _ in 0..100 {
            points += 1;
            let s = rng.s_point(&steps, 3.0, 0.25);
            let z: Vec<_> = s
                .iter()
                .zip(params.steps())
                .map(|(&x, t)| tustin_map_exact(&exact_complex(x).unwrap(), t).unwrap())
                .collect();
            let via_z = round_complex(&zt.eval_gaussian(&z).unwrap());
            let via_det = det.eval_precise(&s).unwrap();
            let via_compact = compact.eval_precise(&s).unwrap();
            worst = worst
                .max(rel_diff(via_z, via_det))
                .max(rel_diff(via_z, via_compact))
                .max(rel_diff(via_det, via_compact));
            float_worst = float_worst.max(rel_diff(via_det, compact.eval(&s).unwrap()));
        }
    }
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(30);
    outcome(
        worst <= 1e-10 && elapsed < limit,
        format!(
            "{points} points, max pairwise rel diff {worst:.2e} (float-only compact route {float_worst:.2e}), {}",
            within(elapsed, limit)
        ),
    )
}

fn kronecker() -> Outcome {
    let m: Vec<Vec<i64>> = (1..=3)
        .map(|a| (1..=3).map(|b| kron_delta(a, b).unwrap()).collect())
        .collect();
    outcome(m == vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], format!("{m:?}"))
}

fn generalized_epsilon() -> Outcome {
    let mut rng = SampleRng::new(909);
    let mut checked = 0;
    let mut mismatches = 0;
    for n in 2..=4 {
        for _ in 0..50 {
            let mut values: Vec<BigRational> = Vec::new();
            while values.len() < n {
                let v = rat(rng.int(-100, 100), rng.int(1, 9));
                if !values.contains(&v) {
                    values.push(v);
                }
            }
            let g = InjectionTable::new(values).unwrap();
            for idx in enumerate_indices(n) {
                checked += 1;
                let v = epsilon_generalized(&idx, &g).unwrap();
                if EpsilonValue::from_rational(&v) != Some(sign_oracle(&idx)) {
                    mismatches += 1;
                }
            }
        }
    }
    outcome(mismatches == 0, format!("150 tables, {checked} tuples, {mismatches} mismatches"))
}

fn stability_map() -> Outcome {
    let mut rng = SampleRng::new(1010);
    let mut bad = 0;
    let mut worst_axis = 0.0f64;
    for _ in 0..1000 {
        let t = rng.uniform(0.01, 10.0);
        let y = rng.uniform(-50.0, 50.0);
        let left = Complex64::new(-rng.uniform(1e-3, 50.0), y);
        let right = Complex64::new(rng.uniform(1e-3, 50.0), y);
        if tustin_map(left, t).map_or(true, |z| z.norm() >= 1.0) {
            bad += 1;
        }
        if tustin_map(right, t).map_or(true, |z| z.norm() <= 1.0) {
            bad += 1;
        }
        let axis = tustin_map(Complex64::new(0.0, y), t).unwrap();
        worst_axis = worst_axis.max((axis.norm() - 1.0).abs());
    }
    outcome(
        bad == 0 && worst_axis <= 1e-12,
        format!("1000 points per half-plane, {bad} violations, boundary deviation {worst_axis:.2e}"),
    )
}

fn report_2d() -> Outcome {
    let params = TustinParams::uniform(2, int(1)).unwrap();
    let r = pole_zero_report_2d(&params).unwrap();
    let text = r.to_string();
    let mut ok = r.poles.len() == 2
        && r.poles.iter().all(|p| p.location == int(-2) && p.multiplicity == 2)
        && r.zeros.len() == 2
        && r.zeros.iter().all(|z| z.location == int(2))
        && r.inter_dimensional_zeros == ["s1 = s2"];
    let l = laplace_determinant(2, &params).unwrap();
    let mut rng = SampleRng::new(1111);
    for _ in 0..100 {
        let a = rat(rng.int(-100, 100), rng.int(1, 7));
        let b = rat(rng.int(-100, 100), rng.int(1, 7));
        if a == int(-2) || b == int(-2) {
            continue;
        }
        ok &= l.eval_exact(&[a.clone(), a.clone()]).unwrap().is_zero();
        ok &= l.eval_exact(&[int(2), b.clone()]).unwrap().is_zero();
        ok &= l.eval_exact(&[b, int(2)]).unwrap().is_zero();
    }
    outcome(ok, text.trim_end().replace('\n', "; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("epsilon oracle equivalence", epsilon_oracle),
        ("2D closed form", closed_form_2d),
        ("3D scale", scale_3d),
        ("N=4, N=5 determinant identity", determinant_identity_4_5),
        ("scale-constant law", scale_constant_law),
        ("2D Laplace identity", laplace_2d),
        ("3D Laplace consistency", laplace_3d),
        ("Kronecker identity", kronecker),
        ("generalized epsilon", generalized_epsilon),
        ("Tustin stability map", stability_map),
        ("pole/zero report (2D)", report_2d),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("{tag} {:>2}. {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.passed);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
