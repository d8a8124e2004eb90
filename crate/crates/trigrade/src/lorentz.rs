//! Covariance of the two-generator algebra: the induced map Λ(U), its
//! section U(Λ) with determinant j², the 4×4 vector representation and the
//! Minkowski metric.
//!
//! Demanding that the three-form survive a basis change U of the generators
//! forces Λ(U) = det(U) · (sign-conjugated U); its determinant is det(U)³,
//! so unit-determinant Λ come from U whose determinant is a cube root of
//! unity — the three matrices {U, jU, j²U} induce the same Λ. The cover
//! section here fixes det U = j² (times j^k for the other sheets).

use num_complex::Complex64;
use thiserror::Error;

use crate::forms::{self, all_triples, transform_three_form, CyclicTensor3};
use crate::matrix::{Defect, DenseMatrix, Scalar};
use crate::scalar::CycloScalar;

/// Brute-force verification bound for floating inputs.
const VERIFY_TOL: f64 = 1e-9;
/// Unimodularity bound for floating cover inputs.
const UNIMODULAR_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum LorentzError {
    #[error("matrix is singular")]
    Singular,
    #[error("determinant must be 1 (defect {0:.3e})")]
    NotUnimodular(f64),
    #[error("determinant must have unit modulus (defect {0:.3e})")]
    NotUnitModulus(f64),
    #[error("covariance contraction failed to close (residual {0:.3e})")]
    CovarianceDefect(f64),
}

/// Largest mismatch of Λ^{α'}_β t^β_{ABC} = Σ t^{α'}_{A'B'C'} U^{A'}_A U^{B'}_B U^{C'}_C
/// over every index triple and output slot.
pub fn three_form_match_defect<S: Scalar>(
    lambda: &DenseMatrix<S>,
    u: &DenseMatrix<S>,
    t: &CyclicTensor3,
) -> Defect {
    let transformed = transform_three_form(t, u);
    let labels = t.label_count();
    let mut diffs = Vec::new();
    for (slot, triple) in all_triples(t.n()).into_iter().enumerate() {
        for out in 0..labels {
            let mut lhs = S::zero();
            for beta in 0..labels {
                let comp = t.component(beta, triple);
                if !comp.is_zero() {
                    lhs = lhs.add(&lambda.get(out, beta).mul(&S::from_cyclo(&comp)));
                }
            }
            diffs.push(lhs.sub(&transformed[out][slot]));
        }
    }
    Defect::from_scalars(&diffs)
}

fn signed_conjugation<S: Scalar>(m: &DenseMatrix<S>) -> DenseMatrix<S> {
    DenseMatrix::from_fn(2, |r, c| {
        if r == c {
            m.get(r, c).clone()
        } else {
            m.get(r, c).neg()
        }
    })
}

/// Λ(U) = det(U) · (sign-conjugated U), verified against the brute-force
/// contraction of the three-form covariance condition.
pub fn lambda_from_u<S: Scalar>(u: &DenseMatrix<S>) -> Result<DenseMatrix<S>, LorentzError> {
    assert_eq!(u.dim(), 2);
    let det = u.det();
    if det.is_zero() {
        return Err(LorentzError::Singular);
    }
    let lambda = signed_conjugation(u).scale(&det);
    let defect = three_form_match_defect(&lambda, u, &forms::rho());
    if !defect.passes(S::EXACT, VERIFY_TOL) {
        return Err(LorentzError::CovarianceDefect(defect.residual));
    }
    Ok(lambda)
}

/// The cover section: for det L = 1 returns U with Λ(U) = L and
/// det U = j² · j^{2k}. phase_k selects among the three sheets {U, jU, j²U}.
pub fn spinor_cover<S: Scalar>(
    l: &DenseMatrix<S>,
    phase_k: u8,
) -> Result<DenseMatrix<S>, LorentzError> {
    assert_eq!(l.dim(), 2);
    let unit_defect = Defect::from_scalars(&[l.det().sub(&S::one())]);
    if !unit_defect.passes(S::EXACT, UNIMODULAR_TOL) {
        return Err(LorentzError::NotUnimodular(unit_defect.residual));
    }
    let phase = S::from_cyclo(&CycloScalar::j_pow(1 + i64::from(phase_k)));
    Ok(signed_conjugation(l).scale(&phase))
}

/// Entrywise conjugate Ū (determinant j when det U = j²), verified to close
/// the conjugate covariance condition with the conjugate three-form.
pub fn conjugate_cover<S: Scalar>(u: &DenseMatrix<S>) -> Result<DenseMatrix<S>, LorentzError> {
    let u_bar = u.conj();
    let det = u_bar.det();
    if det.is_zero() {
        return Err(LorentzError::Singular);
    }
    let lambda_bar = signed_conjugation(&u_bar).scale(&det);
    let defect = three_form_match_defect(&lambda_bar, &u_bar, &forms::rho_bar());
    if !defect.passes(S::EXACT, VERIFY_TOL) {
        return Err(LorentzError::CovarianceDefect(defect.residual));
    }
    Ok(u_bar)
}

fn pi_matrices<S: Scalar>() -> Vec<DenseMatrix<S>> {
    forms::pi()
        .into_iter()
        .map(|tf| DenseMatrix::from_fn(2, |r, c| S::from_cyclo(tf.entry(r, c))))
        .collect()
}

/// The 4×4 vector representation: expand U^{A'}_A Ū^{Ḃ'}_Ḃ π^{μ'}_{A'Ḃ'} in
/// the π basis. The j-phases of the cover cancel between U and Ū, so all
/// three sheets give the same matrix, with real entries, preserving the
/// Minkowski metric.
pub fn vector_rep<S: Scalar>(u: &DenseMatrix<S>) -> Result<DenseMatrix<S>, LorentzError> {
    assert_eq!(u.dim(), 2);
    let det = u.det();
    let modulus_defect = Defect::from_scalars(&[det.mul(&det.conj()).sub(&S::one())]);
    if !modulus_defect.passes(S::EXACT, VERIFY_TOL) {
        return Err(LorentzError::NotUnitModulus(modulus_defect.residual));
    }
    let pis = pi_matrices::<S>();
    let u_t = u.transpose();
    let u_bar = u.conj();
    // System matrix: rows are the four (A, Ḃ) slots, columns the four π's.
    let system = DenseMatrix::from_fn(4, |slot, nu| pis[nu].get(slot / 2, slot % 2).clone());
    let rhs: Vec<Vec<S>> = (0..4)
        .map(|mu| {
            let t = u_t.mul(&pis[mu]).mul(&u_bar);
            (0..4)
                .map(|slot| t.get(slot / 2, slot % 2).clone())
                .collect()
        })
        .collect();
    let rows = system.solve(&rhs).expect("pi matrices form a basis");
    Ok(DenseMatrix::from_fn(4, |mu, nu| rows[mu][nu].clone()))
}

/// Defect of a matrix being fixed by conjugation (all entries real).
pub fn conjugation_fixed_defect<S: Scalar>(m: &DenseMatrix<S>) -> Defect {
    let diffs: Vec<S> = (0..m.dim())
        .flat_map(|r| (0..m.dim()).map(move |c| (r, c)))
        .map(|(r, c)| m.get(r, c).sub(&m.get(r, c).conj()))
        .collect();
    Defect::from_scalars(&diffs)
}

/// ½ π^μ_{AḂ} π̄^{ν ḂA} with both index pairs raised by ε: exactly
/// diag(+1, −1, −1, −1).
pub fn minkowski_metric() -> DenseMatrix<CycloScalar> {
    let p = forms::pi();
    let pb = forms::pi_bar();
    let eps = forms::EpsilonMetric::new();
    let half = CycloScalar::from_ratio(1, 2);
    DenseMatrix::from_fn(4, |mu, nu| {
        let mut acc = CycloScalar::zero();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        // π^μ_{AḂ} ε^{ḂḊ} ε^{AC} π̄^ν_{ḊC}
                        let term = p[mu].entry(a, b)
                            * &(&eps.dotted[b][d] * &(&eps.undotted[a][c] * pb[nu].entry(d, c)));
                        acc = acc + term;
                    }
                }
            }
        }
        &acc * &half
    })
}

/// The same contraction with π on both sides, as a comparison run: the
/// result is the Minkowski matrix times an overall scalar −j, returned as
/// (factor, matrix).
pub fn minkowski_metric_pi_pi() -> (CycloScalar, DenseMatrix<CycloScalar>) {
    let p = forms::pi();
    let eps = forms::EpsilonMetric::new();
    let half = CycloScalar::from_ratio(1, 2);
    let m = DenseMatrix::from_fn(4, |mu, nu| {
        let mut acc = CycloScalar::zero();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        // π^μ_{AḂ} ε^{AC} ε^{ḂḊ} π^ν_{CḊ}
                        let term = p[mu].entry(a, b)
                            * &(&eps.undotted[a][c] * &(&eps.dotted[b][d] * p[nu].entry(c, d)));
                        acc = acc + term;
                    }
                }
            }
        }
        &acc * &half
    });
    let factor = m.get(0, 0).clone();
    (factor, m)
}

/// The fixed intertwiner between [`vector_rep`] and plain σ-conjugation:
/// the sign conjugation baked into the cover flips the x-axis, so the two
/// representations agree after conjugating by diag(1, −1, 1, 1).
pub fn x_reflection() -> DenseMatrix<Complex64> {
    let mut m = DenseMatrix::identity(4);
    m.set(1, 1, Complex64::new(-1.0, 0.0));
    m
}

/// Independent vector-representation oracle built from plain σ-matrix
/// conjugation: Λ^μ_ν = ½ tr(σ^μ L σ^ν L†), with no π dressing and no
/// linear solve.
pub fn so13_from_sigma_conjugation(l: &DenseMatrix<Complex64>) -> DenseMatrix<Complex64> {
    let sigmas: Vec<DenseMatrix<Complex64>> = (0..4)
        .map(|mu| {
            let s = forms::sigma(mu);
            DenseMatrix::from_fn(2, |r, c| s[r][c].to_float())
        })
        .collect();
    let l_dag = l.conj_transpose();
    DenseMatrix::from_fn(4, |mu, nu| {
        sigmas[mu].mul(l).mul(&sigmas[nu]).mul(&l_dag).trace() * Complex64::new(0.5, 0.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_exact_gl2, sample_exact_sl2, sample_sl2c, sub_seed};

    fn j() -> CycloScalar {
        CycloScalar::j()
    }

    fn exact_identity(dim: usize) -> DenseMatrix<CycloScalar> {
        DenseMatrix::identity(dim)
    }

    #[test]
    fn identity_maps_to_identity() {
        let lambda = lambda_from_u(&exact_identity(2)).unwrap();
        assert_eq!(lambda, exact_identity(2));
    }

    #[test]
    fn the_z3_kernel_collapses() {
        // U = j·1 has det j², so Λ = j²·j·1 = 1.
        let u = exact_identity(2).scale(&j());
        assert_eq!(lambda_from_u(&u).unwrap(), exact_identity(2));
    }

    #[test]
    fn determinant_cubes_on_exact_samples() {
        for k in 0..25 {
            let u = sample_exact_gl2(sub_seed(11, k));
            let lambda = lambda_from_u(&u).unwrap();
            let det_u = u.det();
            assert_eq!(lambda.det(), &(&det_u * &det_u) * &det_u, "sample {k}");
        }
    }

    #[test]
    fn singular_input_is_rejected() {
        let u = DenseMatrix::from_rows(vec![
            vec![CycloScalar::one(), CycloScalar::one()],
            vec![CycloScalar::one(), CycloScalar::one()],
        ]);
        assert_eq!(lambda_from_u(&u), Err(LorentzError::Singular));
    }

    #[test]
    fn cover_of_identity_has_determinant_j_squared() {
        let u = spinor_cover(&exact_identity(2), 0).unwrap();
        assert_eq!(u, exact_identity(2).scale(&j()));
        assert_eq!(u.det(), CycloScalar::j2());
        // Other sheets scale by j^k.
        let u1 = spinor_cover(&exact_identity(2), 1).unwrap();
        assert_eq!(u1, exact_identity(2).scale(&CycloScalar::j2()));
        let shear = DenseMatrix::from_rows(vec![
            vec![CycloScalar::one(), CycloScalar::from_int(2)],
            vec![CycloScalar::zero(), CycloScalar::one()],
        ]);
        assert_eq!(spinor_cover(&shear, 0).unwrap().det(), CycloScalar::j2());
        let stretched = DenseMatrix::from_rows(vec![
            vec![CycloScalar::from_int(2), CycloScalar::zero()],
            vec![CycloScalar::zero(), CycloScalar::one()],
        ]);
        assert!(matches!(
            spinor_cover(&stretched, 0),
            Err(LorentzError::NotUnimodular(_))
        ));
    }

    #[test]
    fn cover_round_trips_exactly() {
        for k in 0..25 {
            let l = sample_exact_sl2(sub_seed(23, k));
            for phase_k in 0..3 {
                let u = spinor_cover(&l, phase_k).unwrap();
                assert_eq!(lambda_from_u(&u).unwrap(), l, "sample {k}, sheet {phase_k}");
            }
        }
    }

    #[test]
    fn cover_products_differ_by_a_cube_root_phase() {
        for k in 0..10 {
            let l1 = sample_sl2c(sub_seed(31, 2 * k));
            let l2 = sample_sl2c(sub_seed(31, 2 * k + 1));
            let u1 = spinor_cover(&l1, 0).unwrap();
            let u2 = spinor_cover(&l2, 0).unwrap();
            let prod = u1.mul(&u2);
            let direct = spinor_cover(&l1.mul(&l2), 0).unwrap();
            let matched = (0..3).any(|p| {
                let phase = Complex64::from_cyclo(&CycloScalar::j_pow(p));
                prod.sub(&direct.scale(&phase)).max_abs() < 1e-9
            });
            assert!(matched, "no cube-root phase matched at sample {k}");
        }
    }

    #[test]
    fn conjugate_cover_conjugates_and_closes() {
        let u = spinor_cover(&exact_identity(2), 0).unwrap();
        let ub = conjugate_cover(&u).unwrap();
        assert_eq!(ub, exact_identity(2).scale(&CycloScalar::j2()));
        assert_eq!(ub.det(), j());
        for k in 0..10 {
            let u = sample_exact_gl2(sub_seed(37, k));
            let ub = conjugate_cover(&u).unwrap();
            assert_eq!(ub.conj(), u, "conjugation is involutive");
        }
    }

    #[test]
    fn vector_rep_of_the_kernel_is_identity() {
        let u = exact_identity(2).scale(&j());
        assert_eq!(vector_rep(&u).unwrap(), exact_identity(4));
    }

    #[test]
    fn all_three_sheets_give_one_vector_representation() {
        let l = sample_exact_sl2(59);
        let reference = vector_rep(&spinor_cover(&l, 0).unwrap()).unwrap();
        for sheet in 1..3 {
            let u = spinor_cover(&l, sheet).unwrap();
            assert_eq!(vector_rep(&u).unwrap(), reference, "sheet {sheet}");
        }
    }

    #[test]
    fn boost_matches_the_frozen_rapidity_entry() {
        let e = 0.5f64.exp();
        let l = DenseMatrix::from_rows(vec![
            vec![Complex64::new(e, 0.0), Complex64::new(0.0, 0.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(1.0 / e, 0.0)],
        ]);
        let u = spinor_cover(&l, 0).unwrap();
        let lam = vector_rep(&u).unwrap();
        let cosh1 = 1.0f64.cosh();
        let sinh1 = 1.0f64.sinh();
        assert!((lam.get(0, 0).re - cosh1).abs() < 1e-10);
        assert!((lam.get(0, 3).re - sinh1).abs() < 1e-10);
        assert!((lam.get(3, 0).re - sinh1).abs() < 1e-10);
        assert!((lam.get(3, 3).re - cosh1).abs() < 1e-10);
        assert!((lam.get(1, 1).re - 1.0).abs() < 1e-10);
        assert!(lam.get(0, 1).norm() < 1e-10);
    }

    #[test]
    fn vector_rep_agrees_with_the_sigma_conjugation_oracle() {
        // The sign conjugation inside the cover reflects the x-axis
        // relative to plain σ-conjugation, so the two representations are
        // intertwined by the fixed reflection diag(1, -1, 1, 1).
        let refl = x_reflection();
        for k in 0..20 {
            let l = sample_sl2c(sub_seed(41, k));
            let u = spinor_cover(&l, 0).unwrap();
            let ours = vector_rep(&u).unwrap();
            let oracle = refl.mul(&so13_from_sigma_conjugation(&l)).mul(&refl);
            assert!(ours.sub(&oracle).max_abs() < 1e-9, "sample {k}");
        }
    }

    #[test]
    fn vector_rep_entries_are_fixed_by_conjugation_exactly() {
        for k in 0..10 {
            let l = sample_exact_sl2(sub_seed(43, k));
            let u = spinor_cover(&l, 0).unwrap();
            let lam = vector_rep(&u).unwrap();
            assert!(conjugation_fixed_defect(&lam).exactly_zero, "sample {k}");
        }
    }

    #[test]
    fn metric_is_minkowski_exactly() {
        let g = minkowski_metric();
        let mut expected = DenseMatrix::zeros(4);
        expected.set(0, 0, CycloScalar::one());
        for k in 1..4 {
            expected.set(k, k, CycloScalar::from_int(-1));
        }
        assert_eq!(g, expected);
        assert_eq!(g, g.transpose());
    }

    #[test]
    fn as_printed_contraction_carries_minus_j() {
        let (factor, m) = minkowski_metric_pi_pi();
        assert_eq!(factor, -j());
        assert_eq!(m, minkowski_metric().scale(&factor));
    }

    #[test]
    fn metric_is_preserved_exactly_on_exact_covers() {
        let g = minkowski_metric();
        for k in 0..10 {
            let l = sample_exact_sl2(sub_seed(47, k));
            let u = spinor_cover(&l, 0).unwrap();
            let lam = vector_rep(&u).unwrap();
            let pulled = lam.transpose().mul(&g).mul(&lam);
            assert_eq!(pulled, g, "sample {k}");
        }
    }

    #[test]
    fn metric_is_preserved_on_float_samples() {
        let g = minkowski_metric().to_float();
        for k in 0..20 {
            let l = sample_sl2c(sub_seed(53, k));
            let u = spinor_cover(&l, 0).unwrap();
            let lam = vector_rep(&u).unwrap();
            let pulled = lam.transpose().mul(&g).mul(&lam);
            assert!(pulled.sub(&g).max_abs() < 1e-9, "sample {k}");
        }
    }
}
