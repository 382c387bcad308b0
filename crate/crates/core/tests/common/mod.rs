#![allow(dead_code)]

use hidesign::bounds::fisher_bound;
use hidesign::designs::{
    eval_h4_basis_sum, generate, lift_by_root_index, verify_harmonic_index, GeneratorKind,
    PointSet, DEFAULT_TOL,
};
use hidesign::orthopoly::{q_roots, KernelSpec};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type Trial = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

pub fn random_set(rng: &mut ChaCha8Rng, n: usize, size: usize) -> PointSet {
    let pts = (0..size).map(|_| random_unit(rng, n)).collect();
    PointSet::new(n, pts, "random").expect("random points are distinct")
}

/// Haar-ish orthogonal matrix from the QR factor of a Gaussian matrix.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let m = DMatrix::<f64>::from_fn(n, n, |_, _| rng.sample(StandardNormal));
    let q = m.qr().q();
    (0..n)
        .map(|i| (0..n).map(|j| q[(i, j)]).collect())
        .collect()
}

/// Generators with no antipodal pairs, used where points get flipped.
pub fn flip_safe_designs() -> Vec<(PointSet, u32)> {
    let pent = generate(GeneratorKind::RegularPolygon { m: 7 }).unwrap();
    vec![
        (generate(GeneratorKind::X0Plus).unwrap(), 4),
        (generate(GeneratorKind::X0Minus).unwrap(), 4),
        (generate(GeneratorKind::IcosahedronHalf).unwrap(), 8),
        (generate(GeneratorKind::IcosahedronHalf).unwrap(), 14),
        (
            generate(GeneratorKind::CrossPolytopeHalf { n: 5 }).unwrap(),
            2,
        ),
        (lift_by_root_index(&pent, 6, 2).unwrap(), 6),
    ]
}

/// Every generator with a handful of parameters.
pub fn generator_corpus() -> Vec<PointSet> {
    let mut kinds = vec![
        GeneratorKind::IcosahedronHalf,
        GeneratorKind::E8Half,
        GeneratorKind::Cell600Half,
        GeneratorKind::X0Plus,
        GeneratorKind::X0Minus,
    ];
    kinds.extend((2..12).map(|m| GeneratorKind::RegularPolygon { m }));
    kinds.extend((1..5).map(|e| GeneratorKind::TwoPointS1 { e, j: 1 }));
    kinds.extend((2..7).map(|n| GeneratorKind::CrossPolytopeHalf { n }));
    kinds.extend((2..7).map(|n| GeneratorKind::Simplex { n }));
    kinds.into_iter().map(|k| generate(k).unwrap()).collect()
}

fn relative(x: &PointSet, t: u32) -> f64 {
    verify_harmonic_index(x, t, DEFAULT_TOL).unwrap().degrees[0].relative_residual
}

// each property takes a seed and runs one randomized trial

pub fn prop_non_negativity(seed: u64) -> Trial {
    let mut r = rng(seed);
    let n = r.random_range(2..7);
    let size = r.random_range(1..25);
    let t = r.random_range(1..13);
    let x = random_set(&mut r, n, size);
    let c = verify_harmonic_index(&x, t, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let q1 = KernelSpec::new(n as u32, t).unwrap().eval(1.0);
    let floor = -1e-8 * size as f64 * q1;
    if c.degrees[0].raw_sum < floor {
        return Err(format!(
            "n={n} t={t} |X|={size}: sum {} < {floor}",
            c.degrees[0].raw_sum
        ));
    }
    Ok(())
}

pub fn prop_rotation_invariance(seed: u64) -> Trial {
    let mut r = rng(seed);
    let (x, t) = if r.random_bool(0.5) {
        let n = r.random_range(2..7);
        let size = r.random_range(2..20);
        (random_set(&mut r, n, size), r.random_range(1..11))
    } else {
        let d = flip_safe_designs();
        d[r.random_range(0..d.len())].clone()
    };
    let rot = random_orthogonal(&mut r, x.dim());
    let y = x.transform(&rot).map_err(|e| e.to_string())?;
    let (a, b) = (relative(&x, t), relative(&y, t));
    if (a - b).abs() >= 1e-9 {
        return Err(format!("t={t}: residual {a} became {b}"));
    }
    Ok(())
}

pub fn prop_flip_invariance(seed: u64) -> Trial {
    let mut r = rng(seed);
    let (x, t) = if r.random_bool(0.5) {
        let n = r.random_range(2..6);
        let size = r.random_range(2..15);
        (random_set(&mut r, n, size), 2 * r.random_range(1..6))
    } else {
        let d = flip_safe_designs();
        d[r.random_range(0..d.len())].clone()
    };
    let flips: Vec<usize> = (0..x.len()).filter(|_| r.random_bool(0.5)).collect();
    let y = x.flip_points(&flips).map_err(|e| e.to_string())?;
    let before = verify_harmonic_index(&x, t, DEFAULT_TOL).unwrap().passed;
    let after = verify_harmonic_index(&y, t, DEFAULT_TOL).unwrap().passed;
    if before != after {
        return Err(format!(
            "t={t}, flips {flips:?}: verdict {before} became {after}"
        ));
    }
    Ok(())
}

pub fn prop_lift_soundness(seed: u64) -> Trial {
    let mut r = rng(seed);
    let t = r.random_range(1..13);
    let m = r.random_range(t as usize + 1..t as usize + 12);
    let roots = q_roots(KernelSpec::new(3, t).unwrap()).len();
    let idx = r.random_range(1..roots + 1);
    let base = generate(GeneratorKind::RegularPolygon { m }).unwrap();
    let x = lift_by_root_index(&base, t, idx).map_err(|e| e.to_string())?;
    let c = verify_harmonic_index(&x, t, DEFAULT_TOL).unwrap();
    if !c.passed {
        return Err(format!(
            "m={m} t={t} root {idx}: residual {}",
            c.degrees[0].relative_residual
        ));
    }
    Ok(())
}

pub fn prop_fisher_consistency(seed: u64) -> Trial {
    let mut r = rng(seed);
    let corpus = generator_corpus();
    let x = &corpus[r.random_range(0..corpus.len())];
    let t = r.random_range(1..21);
    let c = verify_harmonic_index(x, t, DEFAULT_TOL).unwrap();
    if c.passed {
        let b = fisher_bound(x.dim() as u32, t).unwrap().b;
        if (x.len() as f64) < b - 1e-6 {
            return Err(format!(
                "{} passes t={t} with {} < b = {b}",
                x.source(),
                x.len()
            ));
        }
    }
    Ok(())
}

/// Half the trials use random sets, half rotated and flipped copies of the
/// pentagon designs, so both verdicts occur.
pub fn prop_h4_oracle_agreement(seed: u64) -> Trial {
    let mut r = rng(seed);
    let x = if r.random_bool(0.5) {
        let size = r.random_range(1..12);
        random_set(&mut r, 3, size)
    } else {
        let base = if r.random_bool(0.5) {
            GeneratorKind::X0Plus
        } else {
            GeneratorKind::X0Minus
        };
        let x = generate(base).unwrap();
        let flips: Vec<usize> = (0..5).filter(|_| r.random_bool(0.5)).collect();
        x.flip_points(&flips)
            .unwrap()
            .transform(&random_orthogonal(&mut r, 3))
            .unwrap()
    };
    let kernel = relative(&x, 4) <= 1e-9;
    let sums = eval_h4_basis_sum(&x).map_err(|e| e.to_string())?;
    let basis = sums.iter().all(|s| s.abs() <= 1e-9);
    if kernel != basis {
        return Err(format!(
            "kernel {kernel} vs basis {basis} for {:?}",
            x.points()
        ));
    }
    Ok(())
}

pub const PROPERTIES: [(&str, fn(u64) -> Trial); 6] = [
    ("kernel-sum non-negativity", prop_non_negativity),
    ("rotation invariance", prop_rotation_invariance),
    ("antipodal-flip invariance", prop_flip_invariance),
    ("lift soundness", prop_lift_soundness),
    ("Fisher consistency", prop_fisher_consistency),
    ("(3,4) kernel vs quartic basis", prop_h4_oracle_agreement),
];

/// Runs `trials` seeded trials; returns the failures.
pub fn run_property(f: fn(u64) -> Trial, base_seed: u64, trials: u64) -> Vec<String> {
    (0..trials)
        .filter_map(|k| {
            f(base_seed + k)
                .err()
                .map(|e| format!("seed {}: {e}", base_seed + k))
        })
        .collect()
}
