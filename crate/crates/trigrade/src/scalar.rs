//! Exact arithmetic in the cyclotomic field Q(ζ₁₂).
//!
//! ζ is a fixed primitive 12th root of unity with minimal polynomial
//! ζ⁴ = ζ² − 1. The field contains both special constants the rest of the
//! crate is built on:
//!
//! * `j = ζ⁴ = ζ² − 1`, the primitive cubic root of unity `e^{2πi/3}`,
//!   with `1 + j + j² = 0`, `j³ = 1` and `conj(j) = j²`;
//! * `i = ζ³`, the imaginary unit, with `i² = −1`.
//!
//! Q(ζ₁₂) has degree 4 over Q and is the smallest field containing both
//! constants. Elements are stored as exact rational coordinates on the
//! power basis {1, ζ, ζ², ζ³}; every operation reduces back to that basis,
//! so equality is coordinate-wise and exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational scalar: arbitrary-precision, always in lowest terms with
/// a positive denominator (maintained by `BigRational` itself).
pub type Rational = BigRational;

/// Floating-point complex backend used when sampling group elements.
pub type ComplexFloat = Complex64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero in Q(zeta_12)")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// An element of Q(ζ₁₂), written c₀ + c₁ζ + c₂ζ² + c₃ζ³.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    coords: [Rational; 4],
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl CycloScalar {
    pub fn from_coords(coords: [Rational; 4]) -> Self {
        CycloScalar { coords }
    }

    /// Coordinates on the power basis {1, ζ, ζ², ζ³}.
    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloScalar {
            coords: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    /// The primitive cubic root of unity, j = ζ² − 1 = e^{2πi/3}.
    pub fn j() -> Self {
        CycloScalar {
            coords: [
                rat(-1, 1),
                Rational::zero(),
                Rational::one(),
                Rational::zero(),
            ],
        }
    }

    /// j² = −ζ², the other primitive cubic root; also conj(j).
    pub fn j2() -> Self {
        CycloScalar {
            coords: [
                Rational::zero(),
                Rational::zero(),
                rat(-1, 1),
                Rational::zero(),
            ],
        }
    }

    /// The imaginary unit, i = ζ³.
    pub fn i() -> Self {
        CycloScalar {
            coords: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::one(),
            ],
        }
    }

    /// j raised to an arbitrary integer power (cycle of three).
    pub fn j_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::j(),
            _ => Self::j2(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// True when the element is a plain rational (coordinates 1..3 vanish).
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut coords = self.coords.clone();
        for (c, o) in coords.iter_mut().zip(other.coords.iter()) {
            *c += o;
        }
        CycloScalar { coords }
    }

    fn neg_ref(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in coords.iter_mut() {
            *c = -c.clone();
        }
        CycloScalar { coords }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        // Schoolbook product of two degree-3 polynomials in ζ, then
        // reduction by ζ⁴ = ζ² − 1 (so ζ⁵ = ζ³ − ζ and ζ⁶ = −1).
        let mut prod = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for (a, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[a + b] += x * y;
            }
        }
        let mut coords = [
            prod[0].clone(),
            prod[1].clone(),
            prod[2].clone(),
            prod[3].clone(),
        ];
        coords[2] += &prod[4];
        coords[0] -= &prod[4];
        coords[3] += &prod[5];
        coords[1] -= &prod[5];
        coords[0] -= &prod[6];
        CycloScalar { coords }
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k, k ∈ {1, 5, 7, 11}.
    fn galois(&self, k: u32) -> Self {
        // Images of the basis {1, ζ, ζ², ζ³} reduced to the basis.
        let images: [[i64; 4]; 4] = match k {
            1 => [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            // ζ⁵ = ζ³ − ζ; ζ¹⁰ = 1 − ζ²; ζ¹⁵ = ζ³
            5 => [[1, 0, 0, 0], [0, -1, 0, 1], [1, 0, -1, 0], [0, 0, 0, 1]],
            // ζ⁷ = −ζ; ζ¹⁴ = ζ²; ζ²¹ = −ζ³
            7 => [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
            // ζ¹¹ = ζ − ζ³; ζ²² = 1 − ζ²; ζ³³ = −ζ³
            11 => [[1, 0, 0, 0], [0, 1, 0, -1], [1, 0, -1, 0], [0, 0, 0, -1]],
            _ => panic!("not a unit mod 12: {k}"),
        };
        let mut coords = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for (b, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, m) in images[b].iter().enumerate() {
                if *m != 0 {
                    coords[t] += c * rat(*m, 1);
                }
            }
        }
        CycloScalar { coords }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹; an involutive field automorphism that
    /// fixes the rationals, with conj(j) = j² and conj(i) = −i.
    pub fn conj(&self) -> Self {
        self.galois(11)
    }

    /// Exact multiplicative inverse via the Galois norm: the product of the
    /// three non-trivial conjugates divided by the (rational) norm.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let cofactor = self
            .galois(5)
            .mul_ref(&self.galois(7))
            .mul_ref(&self.galois(11));
        let norm = self.mul_ref(&cofactor);
        let n = norm
            .as_rational()
            .expect("field norm must be rational")
            .clone();
        debug_assert!(!n.is_zero());
        let scale = Self::from_rational(n.recip());
        Ok(cofactor.mul_ref(&scale))
    }

    /// Evaluate at ζ = e^{iπ/6} in double precision.
    pub fn to_float(&self) -> ComplexFloat {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = std::f64::consts::PI * (k as f64) / 6.0;
            let root = Complex64::new(angle.cos(), angle.sin());
            acc += root * c.to_f64().expect("rational out of f64 range");
        }
        acc
    }

    /// |·| of the floating image; used only for residual reporting.
    pub fn magnitude(&self) -> f64 {
        self.to_float().norm()
    }

    /// Coordinates on the reporting basis {1, j, i, ij}.
    ///
    /// This is an alternative Q-basis of the field: j = ζ² − 1, i = ζ³ and
    /// ij = −ζ, so the change of basis is integral in both directions.
    pub fn report_coords(&self) -> [Rational; 4] {
        let [c0, c1, c2, c3] = self.coords.clone();
        [c0 + &self.coords[2], c2, c3, -c1]
    }

    fn from_report_coords(rc: [Rational; 4]) -> Self {
        let [a, b, c, d] = rc;
        CycloScalar {
            coords: [a - &b, -d, b, c],
        }
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar({self})")
    }
}

impl Add for CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: Self) -> CycloScalar {
        self.add_ref(rhs)
    }
}

impl Sub for CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: Self) -> CycloScalar {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: Self) -> CycloScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        self.neg_ref()
    }
}

// ---------------------------------------------------------------------------
// Textual rendering "a + b·j + c·i + d·ij" and its exact round-trip parse.
// ---------------------------------------------------------------------------

const UNITS: [&str; 4] = ["", "j", "i", "ij"];

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rc = self.report_coords();
        let mut wrote = false;
        for (coeff, unit) in rc.iter().zip(UNITS) {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            if wrote {
                write!(f, " {} ", if coeff.is_negative() { "-" } else { "+" })?;
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            if unit.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{mag}·{unit}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for CycloScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        let mut rc = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // Split into signed terms at top-level '+' / '-'.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut chars = compact.chars().peekable();
        if chars.peek() == Some(&'-') {
            negative = true;
            chars.next();
        } else if chars.peek() == Some(&'+') {
            chars.next();
        }
        for ch in chars {
            if ch == '+' || ch == '-' {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        terms.push((negative, current));

        for (neg, term) in terms {
            if term.is_empty() {
                return Err(err());
            }
            // Optional rational coefficient, optional '·' or '*', optional unit.
            let split = term
                .char_indices()
                .find(|(_, c)| !(c.is_ascii_digit() || *c == '/'))
                .map(|(k, _)| k)
                .unwrap_or(term.len());
            let (num_part, rest) = term.split_at(split);
            let rest = rest
                .strip_prefix('·')
                .or_else(|| rest.strip_prefix('*'))
                .unwrap_or(rest);
            let slot = match rest {
                "" => 0,
                "j" => 1,
                "i" => 2,
                "ij" => 3,
                _ => return Err(err()),
            };
            if num_part.is_empty() && slot == 0 {
                return Err(err());
            }
            let coeff = if num_part.is_empty() {
                Rational::one()
            } else {
                Rational::from_str(num_part).map_err(|_| err())?
            };
            let signed = if neg { -coeff } else { coeff };
            rc[slot] += signed;
        }
        Ok(Self::from_report_coords(rc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j() -> CycloScalar {
        CycloScalar::j()
    }

    #[test]
    fn cubic_root_identities() {
        // 1 + j + j² = 0
        let sum = CycloScalar::one() + j() + j() * j();
        assert!(sum.is_zero());
        // j · j² = 1
        assert!((j() * CycloScalar::j2()).is_one());
        // j² really is the square
        assert_eq!(j() * j(), CycloScalar::j2());
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        assert_eq!(
            CycloScalar::i() * CycloScalar::i(),
            CycloScalar::from_int(-1)
        );
    }

    #[test]
    fn j_powers_stay_in_the_cubic_subring() {
        let mut p = CycloScalar::one();
        for k in 0..12 {
            assert_eq!(p, CycloScalar::j_pow(k));
            assert!(
                p == CycloScalar::one() || p == j() || p == CycloScalar::j2(),
                "power j^{k} escaped {{1, j, j²}}"
            );
            p = p * j();
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(j().inverse().unwrap(), CycloScalar::j2());
        assert_eq!(
            CycloScalar::from_int(2).inverse().unwrap(),
            CycloScalar::from_ratio(1, 2)
        );
        // (1 + j)⁻¹ = −j, since (1 + j)(−j) = −j − j² = 1.
        let one_plus_j = CycloScalar::one() + j();
        assert_eq!(one_plus_j.inverse().unwrap(), -j());
        assert!((one_plus_j.inverse().unwrap() * one_plus_j).is_one());
        assert_eq!(
            CycloScalar::zero().inverse(),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(j().conj(), CycloScalar::j2());
        assert_eq!(CycloScalar::i().conj(), -CycloScalar::i());
        let x = CycloScalar::from_coords([
            Rational::new(3.into(), 7.into()),
            Rational::new((-2).into(), 1.into()),
            Rational::new(5.into(), 2.into()),
            Rational::new(1.into(), 3.into()),
        ]);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn float_images() {
        let jf = j().to_float();
        assert!((jf.re + 0.5).abs() < 1e-15);
        assert!((jf.im - 0.8660254037844386).abs() < 1e-15);
        let iff = CycloScalar::i().to_float();
        assert!((iff.re).abs() < 1e-15 && (iff.im - 1.0).abs() < 1e-15);
        let zero = (CycloScalar::one() + j() + CycloScalar::j2()).to_float();
        assert!(zero.norm() < 1e-15);
    }

    #[test]
    fn rendering_examples() {
        assert_eq!(j().to_string(), "j");
        assert_eq!((-j()).to_string(), "-j");
        assert_eq!((CycloScalar::one() + j()).to_string(), "1 + j");
        assert_eq!(
            (CycloScalar::from_ratio(-1, 2) + CycloScalar::from_ratio(3, 2) * CycloScalar::i())
                .to_string(),
            "-1/2 + 3/2·i"
        );
        assert_eq!(CycloScalar::zero().to_string(), "0");
        // ij is the product unit, not a typo: ij = −ζ.
        assert_eq!((j() * CycloScalar::i()).to_string(), "ij");
    }

    #[test]
    fn parse_round_trips_named_forms() {
        for text in [
            "0",
            "1",
            "-3/2",
            "j",
            "-j",
            "1 + j",
            "2·j - i + 5/3·ij",
            "-1/2 + 3/2·i",
        ] {
            let parsed: CycloScalar = text.parse().unwrap();
            assert_eq!(parsed.to_string(), text, "canonical form should round-trip");
        }
        // '*' is accepted as a separator on input.
        let starred: CycloScalar = "2*j".parse().unwrap();
        assert_eq!(starred, CycloScalar::from_int(2) * j());
        assert!("2·q".parse::<CycloScalar>().is_err());
        assert!("".parse::<CycloScalar>().is_err());
    }
}
