//! Covariance of the three-generator algebra: the 8×8 adjoint action on
//! the cubic K-forms and the 9×9 two-form representation.
//!
//! The eight K-tensors span the ω = j² cyclic eigenspace of rank-3 tensors,
//! which every invertible basis change preserves, so the transformed K's
//! always reconstruct exactly and the expansion matrix S(U) exists for any
//! U. What singles out the unitary group is the Hermitian pairing
//! ⟨K^Φ, K^Ω⟩ = 3·δ: the transformation preserves it exactly when U is
//! unitary, which is when S(U) is unitary too. The reported residual
//! therefore combines the reconstruction defect with the pairing defect,
//! and the stabilizer probe reads the latter.

use thiserror::Error;

use crate::forms::{self, all_triples, transform_three_form};
use crate::matrix::{Defect, DenseMatrix, Scalar};
use crate::report::CheckReport;
use crate::sampling::{sample_su3, sub_seed};
use crate::scalar::CycloScalar;

/// Non-closure floor for the stabilizer probe (well below the defect any
/// appreciably non-unitary matrix produces).
pub const PROBE_MIN_RESIDUAL: f64 = 0.1;

const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum Su3Error {
    #[error("determinant must be a cube root of unity (defect {0:.3e})")]
    BadDeterminant(f64),
}

/// √3 = 2ζ − ζ³ lives in Q(ζ₁₂), so the Gell-Mann matrices are exact.
fn sqrt3_over_3() -> CycloScalar {
    use crate::scalar::Rational;
    CycloScalar::from_coords([
        Rational::new(0.into(), 1.into()),
        Rational::new(2.into(), 3.into()),
        Rational::new(0.into(), 1.into()),
        Rational::new((-1).into(), 3.into()),
    ])
}

/// The eight Gell-Mann matrices over exact scalars (1-based index).
pub fn gell_mann(index: usize) -> DenseMatrix<CycloScalar> {
    let o = CycloScalar::one;
    let z = CycloScalar::zero;
    let i = CycloScalar::i;
    let rows = match index {
        1 => vec![
            vec![z(), o(), z()],
            vec![o(), z(), z()],
            vec![z(), z(), z()],
        ],
        2 => vec![
            vec![z(), -i(), z()],
            vec![i(), z(), z()],
            vec![z(), z(), z()],
        ],
        3 => vec![
            vec![o(), z(), z()],
            vec![z(), -o(), z()],
            vec![z(), z(), z()],
        ],
        4 => vec![
            vec![z(), z(), o()],
            vec![z(), z(), z()],
            vec![o(), z(), z()],
        ],
        5 => vec![
            vec![z(), z(), -i()],
            vec![z(), z(), z()],
            vec![i(), z(), z()],
        ],
        6 => vec![
            vec![z(), z(), z()],
            vec![z(), z(), o()],
            vec![z(), o(), z()],
        ],
        7 => vec![
            vec![z(), z(), z()],
            vec![z(), z(), -i()],
            vec![z(), i(), z()],
        ],
        8 => {
            let s = sqrt3_over_3();
            let minus2s = -(&s + &s);
            vec![
                vec![s.clone(), z(), z()],
                vec![z(), s, z()],
                vec![z(), z(), minus2s],
            ]
        }
        _ => panic!("gell_mann index out of range: {index}"),
    };
    DenseMatrix::from_rows(rows)
}

/// The nine-element two-form basis: λ⁰ = identity plus the eight Gell-Mann
/// matrices (each dressed by j²·i when used as a form; the common dressing
/// cancels in any change of basis, so representations are computed on the
/// bare λ's).
fn lambda_basis<S: Scalar>() -> Vec<DenseMatrix<S>> {
    let mut out = vec![DenseMatrix::identity(3)];
    for k in 1..=8 {
        out.push(gell_mann(k).cast(S::from_cyclo));
    }
    out
}

/// The solved adjoint action: expansion matrix plus both closure defects.
#[derive(Debug, Clone)]
pub struct AdjointSolution<S: Scalar> {
    /// 8×8 matrix S with (transformed K^Φ) = Σ_Ω S[Φ][Ω] K^Ω.
    pub matrix: DenseMatrix<S>,
    /// Transformed tensor minus its reconstruction, over all 27 triples.
    pub reconstruction: Defect,
    /// S·S† − 1: preservation of the Hermitian K-pairing.
    pub pairing: Defect,
}

impl<S: Scalar> AdjointSolution<S> {
    /// The reported residual: closure of the span and of its pairing.
    pub fn residual(&self) -> f64 {
        self.reconstruction.residual.max(self.pairing.residual)
    }

    pub fn closes(&self, tol: f64) -> bool {
        self.reconstruction.passes(S::EXACT, tol) && self.pairing.passes(S::EXACT, tol)
    }
}

/// Solve S(U) from the covariance of the cubic K-forms by orthogonal
/// projection (legitimate because the K's have disjoint supports and
/// squared norm 3), and measure both closure defects.
pub fn su3_adjoint<S: Scalar>(u: &DenseMatrix<S>) -> Result<AdjointSolution<S>, Su3Error> {
    assert_eq!(u.dim(), 3);
    let det = u.det();
    let det_cubed = det.mul(&det).mul(&det);
    let det_defect = Defect::from_scalars(&[det_cubed.sub(&S::one())]);
    if !det_defect.passes(S::EXACT, 1e-10) {
        return Err(Su3Error::BadDeterminant(det_defect.residual));
    }

    let k = forms::cubic_k();
    let transformed = transform_three_form(&k, u);
    let triples = all_triples(3);
    // Exact component table of each K label on the flat 27-slot grid.
    let k_table: Vec<Vec<S>> = (0..8)
        .map(|label| {
            triples
                .iter()
                .map(|t| S::from_cyclo(&k.component(label, *t)))
                .collect()
        })
        .collect();

    let third = S::from_cyclo(&CycloScalar::from_ratio(1, 3));
    let s_matrix = DenseMatrix::from_fn(8, |phi, omega| {
        let mut acc = S::zero();
        for slot in 0..27 {
            acc = acc.add(&transformed[phi][slot].mul(&k_table[omega][slot].conj()));
        }
        acc.mul(&third)
    });

    let mut diffs = Vec::with_capacity(8 * 27);
    for phi in 0..8 {
        for slot in 0..27 {
            let mut rebuilt = S::zero();
            for omega in 0..8 {
                rebuilt = rebuilt.add(&s_matrix.get(phi, omega).mul(&k_table[omega][slot]));
            }
            diffs.push(transformed[phi][slot].sub(&rebuilt));
        }
    }
    let reconstruction = Defect::from_scalars(&diffs);
    let gram = s_matrix
        .mul(&s_matrix.conj_transpose())
        .sub(&DenseMatrix::identity(8));
    let pairing = Defect::from_scalars(
        (0..8)
            .flat_map(|r| (0..8).map(move |c| (r, c)))
            .map(|(r, c)| gram.get(r, c))
            .collect::<Vec<_>>(),
    );

    Ok(AdjointSolution {
        matrix: s_matrix,
        reconstruction,
        pairing,
    })
}

/// Sampled homomorphism and unitarity check for the adjoint action:
/// S(U₁U₂) = S(U₁)·S(U₂) and S preserves the K-pairing.
pub fn su3_homomorphism_check(samples: u32, seed: u64, tol: f64) -> CheckReport {
    let mut worst = 0.0f64;
    for k in 0..samples {
        let u1 = sample_su3(sub_seed(seed, u64::from(2 * k)));
        let u2 = sample_su3(sub_seed(seed, u64::from(2 * k + 1)));
        let s1 = su3_adjoint(&u1).expect("sampled SU(3)");
        let s2 = su3_adjoint(&u2).expect("sampled SU(3)");
        let s12 = su3_adjoint(&u1.mul(&u2)).expect("product stays in SU(3)");
        let hom = s12.matrix.sub(&s1.matrix.mul(&s2.matrix)).max_abs();
        worst = worst
            .max(hom)
            .max(s1.pairing.residual)
            .max(s2.pairing.residual);
    }
    CheckReport::new(
        "su3-adjoint/homomorphism",
        worst <= tol,
        worst,
        u64::from(samples),
        seed,
        format!("S(U1·U2) vs S(U1)·S(U2) and pairing preservation at {tol:.1e}"),
    )
}

/// Probe whether a determinant-1 matrix keeps the K-structure: unitary
/// inputs must close exactly, non-unitary inputs must break the pairing.
pub fn stabilizer_probe<S: Scalar>(
    u: &DenseMatrix<S>,
    name: &str,
) -> Result<CheckReport, Su3Error> {
    let unitarity = Defect::from_scalars(
        {
            let gram = u.mul(&u.conj_transpose()).sub(&DenseMatrix::identity(3));
            (0..3)
                .flat_map(|r| (0..3).map(move |c| (r, c)))
                .map(|(r, c)| gram.get(r, c).clone())
                .collect::<Vec<_>>()
        }
        .iter(),
    );
    let solved = su3_adjoint(u)?;
    let residual = solved.residual();
    let unitary = unitarity.passes(S::EXACT, FLOAT_TOL);
    let pass = if unitary {
        solved.closes(FLOAT_TOL)
    } else {
        residual > PROBE_MIN_RESIDUAL
    };
    Ok(CheckReport::new(
        name,
        pass,
        residual,
        1,
        0,
        format!(
            "unitarity defect {:.3e}; reconstruction {:.3e}; pairing {:.3e}",
            unitarity.residual, solved.reconstruction.residual, solved.pairing.residual
        ),
    ))
}

/// The matrix of X ↦ U X Ūᵀ on the nine-element λ basis; equals the
/// Kronecker product U ⊗ conj(U) conjugated by the fixed change of basis.
pub fn nine_form_rep<S: Scalar>(u: &DenseMatrix<S>) -> DenseMatrix<S> {
    assert_eq!(u.dim(), 3);
    let basis = lambda_basis::<S>();
    // Change of basis: columns are the row-major vectorized λ's.
    let m = DenseMatrix::from_fn(9, |slot, col| basis[col].get(slot / 3, slot % 3).clone());
    let kron = u.kron(&u.conj());
    m.inverse()
        .expect("lambda basis is invertible")
        .mul(&kron)
        .mul(&m)
}

/// Reconstruction defect of the nine-form representation: each image
/// U λ^i Ūᵀ must equal its expansion Σ_k rep[k][i] λ^k.
pub fn nine_form_defect<S: Scalar>(u: &DenseMatrix<S>, rep: &DenseMatrix<S>) -> Defect {
    let basis = lambda_basis::<S>();
    let u_bar_t = u.conj().transpose();
    let mut diffs = Vec::new();
    for (i, lam) in basis.iter().enumerate() {
        let image = u.mul(lam).mul(&u_bar_t);
        let mut rebuilt = DenseMatrix::zeros(3);
        for (k, lk) in basis.iter().enumerate() {
            rebuilt = rebuilt.add(&lk.scale(rep.get(k, i)));
        }
        let diff = image.sub(&rebuilt);
        for r in 0..3 {
            for c in 0..3 {
                diffs.push(diff.get(r, c).clone());
            }
        }
    }
    Defect::from_scalars(&diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{exact_permutation, exact_phase_diag};
    use num_complex::Complex64;

    fn exact_diag(values: [CycloScalar; 3]) -> DenseMatrix<CycloScalar> {
        let mut m = DenseMatrix::zeros(3);
        for (k, v) in values.into_iter().enumerate() {
            m.set(k, k, v);
        }
        m
    }

    #[test]
    fn gell_mann_matrices_are_traceless_hermitian_with_norm_two() {
        for k in 1..=8 {
            let g = gell_mann(k);
            assert!(g.trace().is_zero(), "lambda_{k} trace");
            assert_eq!(g, g.conj_transpose(), "lambda_{k} hermiticity");
            let sq = g.mul(&g);
            assert_eq!(sq.trace(), CycloScalar::from_int(2), "tr lambda_{k}² = 2");
        }
    }

    #[test]
    fn identity_gives_the_identity_adjoint() {
        let sol = su3_adjoint(&DenseMatrix::<CycloScalar>::identity(3)).unwrap();
        assert_eq!(sol.matrix, DenseMatrix::identity(8));
        assert!(sol.reconstruction.exactly_zero && sol.pairing.exactly_zero);
    }

    #[test]
    fn cube_root_phases_cancel_exactly() {
        let ju = DenseMatrix::<CycloScalar>::identity(3).scale(&CycloScalar::j());
        let sol = su3_adjoint(&ju).unwrap();
        assert_eq!(sol.matrix, DenseMatrix::identity(8));
        assert!(sol.reconstruction.exactly_zero);
    }

    #[test]
    fn cyclic_permutation_acts_as_a_phased_label_permutation() {
        let sol = su3_adjoint(&exact_permutation([1, 2, 0])).unwrap();
        assert!(sol.reconstruction.exactly_zero && sol.pairing.exactly_zero);
        // Label order: 3+, 3-, 2+, 2-, 1+, 1-, 7, 8. The 1→2→3 relabeling
        // shifts the six repeated-index classes around; the two
        // distinct-index classes map to themselves up to a rotation, so
        // they pick up their cyclic phases.
        assert!(sol.matrix.get(0, 2).is_one(), "3+ lands on 2+");
        assert_eq!(*sol.matrix.get(6, 6), CycloScalar::j());
        assert_eq!(*sol.matrix.get(7, 7), CycloScalar::j2());
        for r in 0..8 {
            let nonzero: Vec<usize> = (0..8)
                .filter(|&c| !sol.matrix.get(r, c).is_zero())
                .collect();
            assert_eq!(nonzero.len(), 1, "one image label per source label");
            let e = sol.matrix.get(r, nonzero[0]);
            assert!((&(e * e) * e).is_one(), "entries are cube roots of unity");
        }
        for c in 0..8 {
            assert_eq!(
                (0..8).filter(|&r| !sol.matrix.get(r, c).is_zero()).count(),
                1
            );
        }
    }

    #[test]
    fn the_exact_fourier_unitary_closes_at_zero() {
        // A non-monomial unitary mixes every cyclic class with every
        // other, so this is the exact-arithmetic version of the sampled
        // closure checks — and the case that distinguishes a uniform
        // cyclic phase from a mixed-phase tensor family.
        let u = crate::sampling::exact_fourier3();
        let sol = su3_adjoint(&u).unwrap();
        assert!(sol.reconstruction.exactly_zero);
        assert!(sol.pairing.exactly_zero);
        // Its adjoint has the right character: |tr U|² − 1, exactly.
        let tr_u = u.trace();
        let expected = &(&tr_u * &tr_u.conj()) - &CycloScalar::one();
        assert_eq!(sol.matrix.trace(), expected);
    }

    #[test]
    fn sampled_su3_closes_and_satisfies_the_character_identity() {
        for k in 0..20 {
            let u = sample_su3(sub_seed(61, k));
            let sol = su3_adjoint(&u).unwrap();
            assert!(sol.residual() <= 1e-10, "closure at sample {k}");
            let tr_u = u.trace();
            let expected = tr_u.norm_sqr() - 1.0;
            let got = sol.matrix.trace();
            assert!(
                (got.re - expected).abs() < 1e-9 && got.im.abs() < 1e-9,
                "character at sample {k}"
            );
        }
    }

    #[test]
    fn adjoint_is_phase_insensitive() {
        let u = sample_su3(77);
        let ju = u.scale(&Complex64::from_cyclo(&CycloScalar::j()));
        let a = su3_adjoint(&u).unwrap();
        let b = su3_adjoint(&ju).unwrap();
        assert!(a.matrix.sub(&b.matrix).max_abs() < 1e-13);
    }

    #[test]
    fn homomorphism_check_passes_at_the_stated_tolerance() {
        let report = su3_homomorphism_check(10, 42, 1e-9);
        assert!(report.passed(), "residual {}", report.residual);
    }

    #[test]
    fn homomorphism_is_exact_at_the_identity_pair() {
        let id = DenseMatrix::<CycloScalar>::identity(3);
        let s_id = su3_adjoint(&id).unwrap().matrix;
        let s_prod = su3_adjoint(&id.mul(&id)).unwrap().matrix;
        assert_eq!(s_prod, s_id.mul(&s_id));
    }

    #[test]
    fn non_unitary_probe_breaks_the_pairing_by_fifteen() {
        let u = exact_diag([
            CycloScalar::from_int(2),
            CycloScalar::from_ratio(1, 2),
            CycloScalar::one(),
        ]);
        assert!(u.det().is_one());
        let sol = su3_adjoint(&u).unwrap();
        // Each cyclic class is an eigenvector of a diagonal transformation,
        // so the span reconstructs exactly even here…
        assert!(sol.reconstruction.exactly_zero);
        // …but the pairing defect is exactly 15 = |4|² − 1.
        assert_eq!(sol.pairing.residual, 15.0);
        assert!(!sol.pairing.exactly_zero);
        let report = stabilizer_probe(&u, "probe").unwrap();
        assert!(report.passed());
        assert!(report.residual > PROBE_MIN_RESIDUAL);
    }

    #[test]
    fn unitary_probes_close_exactly() {
        for u in [
            DenseMatrix::<CycloScalar>::identity(3),
            exact_phase_diag([1, 2, 0]),
            exact_permutation([2, 0, 1]),
        ] {
            let report = stabilizer_probe(&u, "probe").unwrap();
            assert!(report.passed());
            assert_eq!(report.residual, 0.0);
        }
    }

    #[test]
    fn bad_determinants_are_rejected() {
        let u = exact_diag([
            CycloScalar::from_int(2),
            CycloScalar::one(),
            CycloScalar::one(),
        ]);
        assert!(matches!(su3_adjoint(&u), Err(Su3Error::BadDeterminant(_))));
    }

    #[test]
    fn nine_form_on_identity_and_phases() {
        let rep = nine_form_rep(&DenseMatrix::<CycloScalar>::identity(3));
        assert_eq!(rep, DenseMatrix::identity(9));
        // For U = diag(j, j², 1) the Kronecker form is diagonal with
        // entries u_a · conj(u_b).
        let u = exact_phase_diag([1, 2, 0]);
        let kron = u.kron(&u.conj());
        for a in 0..3 {
            for b in 0..3 {
                let slot = a * 3 + b;
                let expected = CycloScalar::j_pow([1i64, 2, 0][a])
                    * CycloScalar::j_pow([1i64, 2, 0][b]).conj();
                assert_eq!(*kron.get(slot, slot), expected);
            }
        }
        let rep = nine_form_rep(&u);
        assert!(nine_form_defect(&u, &rep).exactly_zero);
    }

    #[test]
    fn nine_form_character_is_trace_modulus_squared() {
        for k in 0..10 {
            let u = sample_su3(sub_seed(67, k));
            let rep = nine_form_rep(&u);
            assert!(nine_form_defect(&u, &rep).residual < 1e-9, "sample {k}");
            let tr = rep.trace();
            let expected = u.trace().norm_sqr();
            assert!((tr.re - expected).abs() < 1e-9 && tr.im.abs() < 1e-9);
        }
    }
}
