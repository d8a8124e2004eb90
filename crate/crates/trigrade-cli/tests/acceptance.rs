//! Acceptance suite: the ten gate criteria, one test and one printed
//! pass/fail line each. Everything algebraic is asserted exactly; sampled
//! floating checks use the tolerances stated inline (never loosened).
//!
//! Run with `cargo test -p trigrade-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::process::Command;
use std::time::Instant;

use trigrade::algebra::{
    anticommutation_witness, enumerate_basis, normal_form, single_family_dimension, AlgebraElement,
    Family, GeneratorSymbol, GradedWord, NormalForm,
};
use trigrade::forms;
use trigrade::lorentz::{
    conjugation_fixed_defect, lambda_from_u, minkowski_metric, minkowski_metric_pi_pi,
    spinor_cover, three_form_match_defect, vector_rep,
};
use trigrade::matrix::{DenseMatrix, Scalar};
use trigrade::sampling::{
    exact_permutation, exact_phase_diag, sample_exact_gl2, sample_exact_sl2, sample_exact_unitary3,
    sample_sl2c, sample_su3, sub_seed,
};
use trigrade::scalar::{ComplexFloat, CycloScalar};
use trigrade::su3::{su3_adjoint, su3_homomorphism_check};

const SEED: u64 = 42;
const SAMPLES: u32 = 100;

fn conclude(criterion: &str, pass: bool) {
    println!(
        "ACCEPTANCE {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion failed: {criterion}");
}

#[test]
fn criterion_01_dimension_counts() {
    let mut ok = true;
    let expect_n2 = [2usize, 4, 2];
    let expect_n3 = [3usize, 9, 8];
    for (len, (e2, e3)) in (1..=3).zip(expect_n2.iter().zip(&expect_n3)) {
        ok &= enumerate_basis(Family::Theta, 2, len).len() == *e2;
        ok &= enumerate_basis(Family::Q, 3, len).len() == *e3;
        ok &= single_family_dimension(2, len) as usize == *e2;
        ok &= single_family_dimension(3, len) as usize == *e3;
    }
    conclude("01 dimension-counts (2,4,2) and (3,9,8)", ok);
}

#[test]
fn criterion_02_quartic_vanishing() {
    let mut ok = true;
    for (family, n, total) in [(Family::Theta, 2u8, 16usize), (Family::Q, 3, 81)] {
        let symbols: Vec<_> = (1..=n).map(|i| GeneratorSymbol::new(family, i)).collect();
        let mut words: Vec<Vec<GeneratorSymbol>> = vec![Vec::new()];
        for _ in 0..4 {
            words = words
                .into_iter()
                .flat_map(|w| {
                    symbols.iter().map(move |s| {
                        let mut next = w.clone();
                        next.push(*s);
                        next
                    })
                })
                .collect();
        }
        ok &= words.len() == total;
        for w in words {
            ok &= matches!(normal_form(&GradedWord::new(w)), Ok(NormalForm::Zero));
        }
    }
    conclude("02 quartic-vanishing (16 + 81 words, exhaustive)", ok);
}

#[test]
fn criterion_03_rho_covariance() {
    let started = Instant::now();
    let rho = forms::rho();
    let mut ok = true;
    for k in 0..SAMPLES {
        let u = sample_exact_gl2(sub_seed(SEED, u64::from(k)));
        let lambda = lambda_from_u(&u).expect("invertible sample");
        ok &= three_form_match_defect(&lambda, &u, &rho).exactly_zero;
        let det_u = u.det();
        ok &= lambda.det() == &(&det_u * &det_u) * &det_u;
    }
    let elapsed = started.elapsed();
    ok &= elapsed.as_secs_f64() < 1.0;
    conclude(
        &format!("03 rho-covariance (100 exact samples in {elapsed:.2?})"),
        ok,
    );
}

#[test]
fn criterion_04_cover_structure() {
    let mut ok = true;
    // det U = j² on the section, and the round trip recovers Λ (exact).
    let j2 = CycloScalar::j2();
    for k in 0..SAMPLES {
        let l = sample_exact_sl2(sub_seed(SEED, u64::from(k)));
        let u = spinor_cover(&l, 0).expect("unimodular");
        ok &= u.det() == j2;
        ok &= lambda_from_u(&u).expect("invertible") == l;
    }
    // Products agree up to a factor in {1, j, j²} on 100 float pairs.
    for k in 0..SAMPLES {
        let l1 = sample_sl2c(sub_seed(SEED, u64::from(2 * k)));
        let l2 = sample_sl2c(sub_seed(SEED, u64::from(2 * k + 1)));
        let prod = spinor_cover(&l1, 0)
            .unwrap()
            .mul(&spinor_cover(&l2, 0).unwrap());
        let direct = spinor_cover(&l1.mul(&l2), 0).unwrap();
        let matched = (0..3).any(|p| {
            let phase = ComplexFloat::from_cyclo(&CycloScalar::j_pow(p));
            prod.sub(&direct.scale(&phase)).max_abs() <= 1e-9
        });
        ok &= matched;
    }
    conclude("04 cover-structure (det j², round trip, phase triple)", ok);
}

#[test]
fn criterion_05_vector_representation() {
    let mut ok = true;
    let g = minkowski_metric();
    // Exact inputs: real entries and exact metric preservation, on an
    // explicitly unitary rotation, a phase multiple, and sampled
    // unimodular matrices.
    let rotation = DenseMatrix::from_rows(vec![
        vec![CycloScalar::zero(), CycloScalar::one()],
        vec![CycloScalar::from_int(-1), CycloScalar::zero()],
    ]);
    let mut exact_inputs = vec![
        spinor_cover(&rotation, 0).expect("unitary rotation"),
        spinor_cover(&DenseMatrix::identity(2), 1).expect("phase sheet"),
    ];
    for k in 0..25 {
        let l = sample_exact_sl2(sub_seed(SEED, k));
        exact_inputs.push(spinor_cover(&l, 0).expect("unimodular"));
    }
    for u in &exact_inputs {
        let lam = vector_rep(u).expect("phase determinant");
        ok &= conjugation_fixed_defect(&lam).exactly_zero;
        ok &= lam.transpose().mul(&g).mul(&lam) == g;
    }
    // 100 float samples at 1e-9.
    let g_float = g.to_float();
    for k in 0..SAMPLES {
        let l = sample_sl2c(sub_seed(SEED, u64::from(k)));
        let u = spinor_cover(&l, 0).expect("sampled");
        let lam = vector_rep(&u).expect("vector rep");
        let pulled = lam.transpose().mul(&g_float).mul(&lam);
        ok &= pulled.sub(&g_float).max_abs() <= 1e-9;
    }
    conclude("05 vector-representation (real entries, Λ4ᵀ g Λ4 = g)", ok);
}

#[test]
fn criterion_06_minkowski_metric() {
    let g = minkowski_metric();
    let mut expected = DenseMatrix::<CycloScalar>::zeros(4);
    expected.set(0, 0, CycloScalar::one());
    for k in 1..4 {
        expected.set(k, k, CycloScalar::from_int(-1));
    }
    let mut ok = g == expected;
    let (factor, variant) = minkowski_metric_pi_pi();
    ok &= factor == -CycloScalar::j();
    ok &= variant == g.scale(&factor);
    conclude(
        &format!("06 minkowski-metric (π-π̄ exact; π-π variant carries {factor})"),
        ok,
    );
}

#[test]
fn criterion_07_su3_adjoint() {
    let mut ok = true;
    for k in 0..SAMPLES {
        let u = sample_su3(sub_seed(SEED, u64::from(k)));
        let sol = su3_adjoint(&u).expect("sampled SU(3)");
        // Closure of the span and its pairing at 1e-10.
        ok &= sol.residual() <= 1e-10;
        // Adjoint character oracle at 1e-9.
        let tr = sol.matrix.trace();
        let expected = u.trace().norm_sqr() - 1.0;
        ok &= (tr.re - expected).abs() <= 1e-9 && tr.im.abs() <= 1e-9;
        // Phase insensitivity.
        let ju = u.scale(&ComplexFloat::from_cyclo(&CycloScalar::j()));
        let sol_j = su3_adjoint(&ju).expect("same determinant class");
        ok &= sol.matrix.sub(&sol_j.matrix).max_abs() <= 1e-9;
    }
    // Homomorphism and pairing preservation at 1e-9.
    ok &= su3_homomorphism_check(SAMPLES, SEED, 1e-9).passed();
    // Exact residual 0 for phase/permutation matrices.
    for k in 0..25 {
        let u = sample_exact_unitary3(sub_seed(SEED, k));
        let sol = su3_adjoint(&u).expect("cube-root determinant");
        ok &= sol.reconstruction.exactly_zero && sol.pairing.exactly_zero;
    }
    conclude(
        "07 su3-adjoint (closure 1e-10, homomorphism, character)",
        ok,
    );
}

#[test]
fn criterion_08_stabilizer_probe() {
    let mut probe = DenseMatrix::<CycloScalar>::zeros(3);
    probe.set(0, 0, CycloScalar::from_int(2));
    probe.set(1, 1, CycloScalar::from_ratio(1, 2));
    probe.set(2, 2, CycloScalar::one());
    let mut ok = probe.det().is_one();
    let sol = su3_adjoint(&probe).expect("det 1");
    ok &= sol.residual() > 0.1;
    // The defect is exact: the K-pairing is stretched by |4|² − 1 = 15.
    ok &= sol.pairing.residual == 15.0;
    // Unitary counterparts stay at zero.
    for u in [
        DenseMatrix::<CycloScalar>::identity(3),
        exact_phase_diag([1, 2, 0]),
        exact_permutation([1, 2, 0]),
    ] {
        let sol = su3_adjoint(&u).expect("det is a cube root");
        ok &= sol.residual() == 0.0;
    }
    conclude(
        "08 stabilizer-probe (diag(2, 1/2, 1) breaks the pairing)",
        ok,
    );
}

#[test]
fn criterion_09_anticommutation() {
    let mut ok = true;
    let cubes = enumerate_basis(Family::Theta, 2, 3);
    let bar_cubes = enumerate_basis(Family::ThetaBar, 2, 3);
    ok &= cubes.len() == 2 && bar_cubes.len() == 2;
    for u in &cubes {
        for v in &bar_cubes {
            let ue = AlgebraElement::from_word(u).unwrap();
            let ve = AlgebraElement::from_word(v).unwrap();
            let uv = ue.multiply(&ve).unwrap();
            let vu = ve.multiply(&ue).unwrap();
            ok &= !uv.is_zero();
            ok &= uv == vu.scale(&CycloScalar::from_int(-1));
        }
    }
    ok &= anticommutation_witness(2) == CycloScalar::from_int(-1);
    conclude("09 anticommutation (exhaustive N=2, exact)", ok);
}

#[test]
fn criterion_10_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for path in &paths {
        let out = Command::new(env!("CARGO_BIN_EXE_verify"))
            .args([
                "all",
                "--seed",
                "9",
                "--samples",
                "10",
                "--json",
                path.to_str().unwrap(),
            ])
            .output()
            .expect("binary runs");
        if !out.status.success() {
            conclude("10 determinism (verify all exits 0)", false);
        }
    }
    let a = std::fs::read(&paths[0]).unwrap();
    let b = std::fs::read(&paths[1]).unwrap();
    conclude(
        "10 determinism (byte-identical JSON)",
        !a.is_empty() && a == b,
    );
}
