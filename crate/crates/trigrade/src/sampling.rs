//! Deterministic seeded sampling of group elements.
//!
//! Floating samples are exponentials built with the crate's own scaling-and
//! -squaring series, fed from a ChaCha stream mapped to uniforms by hand, so
//! a seed pins the result bit for bit across runs and platforms. Exact
//! samples draw small rational coordinates instead.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::matrix::DenseMatrix;
use crate::scalar::{CycloScalar, Rational};

/// Per-sample sub-seed: results are order-independent across samples.
pub fn sub_seed(seed: u64, sample_index: u64) -> u64 {
    seed ^ sample_index
}

/// Uniform in [-1, 1) from the top 53 bits of the stream.
fn uniform_pm1(rng: &mut ChaCha8Rng) -> f64 {
    let unit = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    2.0 * unit - 1.0
}

fn complex_pm1(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(uniform_pm1(rng), uniform_pm1(rng))
}

/// A random element of SL(2, C): the exponential of a traceless complex
/// matrix with entries uniform in [-1, 1]², so det = e^{tr} = 1.
pub fn sample_sl2c(seed: u64) -> DenseMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = complex_pm1(&mut rng);
    let b = complex_pm1(&mut rng);
    let c = complex_pm1(&mut rng);
    DenseMatrix::from_rows(vec![vec![a, b], vec![c, -a]]).expm()
}

/// A random element of SU(3): exp(iH) for H Hermitian traceless with
/// entries bounded by 1, so the result is unitary with det = 1.
pub fn sample_su3(seed: u64) -> DenseMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d0 = 0.5 * uniform_pm1(&mut rng);
    let d1 = 0.5 * uniform_pm1(&mut rng);
    let d2 = -d0 - d1;
    let h01 = complex_pm1(&mut rng);
    let h02 = complex_pm1(&mut rng);
    let h12 = complex_pm1(&mut rng);
    let i = Complex64::new(0.0, 1.0);
    let h = DenseMatrix::from_rows(vec![
        vec![Complex64::new(d0, 0.0), h01, h02],
        vec![h01.conj(), Complex64::new(d1, 0.0), h12],
        vec![h02.conj(), h12.conj(), Complex64::new(d2, 0.0)],
    ]);
    h.scale(&i).expm()
}

/// A random exact scalar with small coordinates (numerators in [-4, 4],
/// denominators in [1, 3]).
pub fn sample_exact_scalar(rng: &mut ChaCha8Rng) -> CycloScalar {
    let mut coords = Vec::with_capacity(4);
    for _ in 0..4 {
        let num = (rng.next_u64() % 9) as i64 - 4;
        let den = (rng.next_u64() % 3) as i64 + 1;
        coords.push(Rational::new(num.into(), den.into()));
    }
    CycloScalar::from_coords([
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
        coords[3].clone(),
    ])
}

/// A random invertible 2×2 matrix over the exact field.
pub fn sample_exact_gl2(seed: u64) -> DenseMatrix<CycloScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = DenseMatrix::from_fn(2, |_, _| sample_exact_scalar(&mut rng));
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A random exact element of SL(2): a short product of elementary shears
/// and the rotation [[0, 1], [-1, 0]], each of determinant one.
pub fn sample_exact_sl2(seed: u64) -> DenseMatrix<CycloScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = DenseMatrix::identity(2);
    for _ in 0..4 {
        let t = sample_exact_scalar(&mut rng);
        let factor = match rng.next_u64() % 3 {
            0 => DenseMatrix::from_rows(vec![
                vec![CycloScalar::one(), t],
                vec![CycloScalar::zero(), CycloScalar::one()],
            ]),
            1 => DenseMatrix::from_rows(vec![
                vec![CycloScalar::one(), CycloScalar::zero()],
                vec![t, CycloScalar::one()],
            ]),
            _ => DenseMatrix::from_rows(vec![
                vec![CycloScalar::zero(), CycloScalar::one()],
                vec![CycloScalar::from_int(-1), CycloScalar::zero()],
            ]),
        };
        m = m.mul(&factor);
    }
    m
}

/// A random exact 3×3 unitary with determinant a cube root of unity: a
/// product of cyclic permutations and j-power phase diagonals (odd
/// permutations are avoided because their determinant −1 is not a cube
/// root).
pub fn sample_exact_unitary3(seed: u64) -> DenseMatrix<CycloScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycles = [[0usize, 1, 2], [1, 2, 0], [2, 0, 1]];
    let mut m = DenseMatrix::identity(3);
    for _ in 0..3 {
        let factor = if rng.next_u64() % 2 == 0 {
            exact_permutation(cycles[(rng.next_u64() % 3) as usize])
        } else {
            exact_phase_diag([
                (rng.next_u64() % 3) as i64,
                (rng.next_u64() % 3) as i64,
                (rng.next_u64() % 3) as i64,
            ])
        };
        m = m.mul(&factor);
    }
    m
}

/// An exact non-monomial unitary: the order-3 Fourier matrix F[a][b] =
/// j^{ab}/√3 (√3 = 2ζ − ζ³ is in the field), with a leading i to bring
/// the determinant from −i to 1. Unlike permutations and phase diagonals
/// it mixes every axis with every other.
pub fn exact_fourier3() -> DenseMatrix<CycloScalar> {
    // 1/√3 = (2ζ − ζ³)/3 on the power basis.
    let sqrt3_inv = CycloScalar::from_coords([
        Rational::new(0.into(), 1.into()),
        Rational::new(2.into(), 3.into()),
        Rational::new(0.into(), 1.into()),
        Rational::new((-1).into(), 3.into()),
    ]);
    DenseMatrix::from_fn(3, |r, c| {
        let entry = &CycloScalar::j_pow((r * c) as i64) * &sqrt3_inv;
        if r == 0 {
            entry * CycloScalar::i()
        } else {
            entry
        }
    })
}

/// The 3×3 permutation matrix sending basis vector k to perm[k].
pub fn exact_permutation(perm: [usize; 3]) -> DenseMatrix<CycloScalar> {
    DenseMatrix::from_fn(3, |r, c| {
        if perm[c] == r {
            CycloScalar::one()
        } else {
            CycloScalar::zero()
        }
    })
}

/// diag(j^{p0}, j^{p1}, j^{p2}) over the exact field.
pub fn exact_phase_diag(powers: [i64; 3]) -> DenseMatrix<CycloScalar> {
    DenseMatrix::from_fn(3, |r, c| {
        if r == c {
            CycloScalar::j_pow(powers[r])
        } else {
            CycloScalar::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_bitwise_deterministic() {
        let a = sample_sl2c(42);
        let b = sample_sl2c(42);
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(a.get(r, c).re.to_bits(), b.get(r, c).re.to_bits());
                assert_eq!(a.get(r, c).im.to_bits(), b.get(r, c).im.to_bits());
            }
        }
        assert_ne!(sample_sl2c(42), sample_sl2c(43));
        assert_eq!(sample_su3(7), sample_su3(7));
    }

    #[test]
    fn sl2c_samples_are_unimodular() {
        for k in 0..20 {
            let l = sample_sl2c(sub_seed(42, k));
            let det = l.det();
            assert!((det - Complex64::new(1.0, 0.0)).norm() < 1e-12, "seed {k}");
        }
    }

    #[test]
    fn su3_samples_are_special_unitary() {
        for k in 0..20 {
            let u = sample_su3(sub_seed(42, k));
            let defect = u.mul(&u.conj_transpose()).sub(&DenseMatrix::identity(3));
            assert!(defect.max_abs() < 1e-12, "unitarity at seed {k}");
            assert!((u.det() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn fourier_matrix_is_an_exact_unitary_with_unit_determinant() {
        let f = exact_fourier3();
        assert_eq!(f.mul(&f.conj_transpose()), DenseMatrix::identity(3));
        assert!(f.det().is_one());
        // Every entry is nonzero: it mixes all axes.
        for r in 0..3 {
            for c in 0..3 {
                assert!(!f.get(r, c).is_zero());
            }
        }
    }

    #[test]
    fn exact_samples_have_the_advertised_structure() {
        for k in 0..10 {
            assert!(!sample_exact_gl2(sub_seed(9, k)).det().is_zero());
            assert!(sample_exact_sl2(sub_seed(9, k)).det().is_one());
        }
        let p = exact_permutation([1, 2, 0]);
        assert!(p.mul(&p.conj_transpose()) == DenseMatrix::identity(3));
        let d = exact_phase_diag([1, 2, 0]);
        assert_eq!(d.det(), CycloScalar::one());
    }
}
