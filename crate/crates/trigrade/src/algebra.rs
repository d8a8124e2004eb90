//! The Z₃-graded algebra on cubic generators.
//!
//! Generators come in conjugate pairs: a grade-1 family (`t1`, `t2`, … or
//! `q1`, `q2`, `q3`) and its grade-2 conjugate family (`tb1`, …, `qb1`, …).
//! Instead of binary anticommutation the generators obey ternary cyclic
//! relations: rotating a cubic product costs a phase,
//!
//! ```text
//! x y z = j · (y z x)           (grade-1 block)
//! x̄ ȳ z̄ = j² · (ȳ z̄ x̄)          (grade-2 block)
//! ```
//!
//! together with mixed binary relations `x ȳ = −j (ȳ x)`, equivalently
//! `ȳ x = −j² (x ȳ)`. Consequences implemented here:
//!
//! * any same-family block of length ≥ 4 vanishes (rotate twice and compare:
//!   the word equals j⁴ = j times itself);
//! * a cube `x x x` vanishes ((1 − j)·x x x = 0);
//! * every word reduces to a unique canonical form — grade-1 symbols first,
//!   each length-3 block replaced by the lexicographically smallest of its
//!   three rotations — times an accumulated phase.
//!
//! Words mixing the two conjugate-pair families (`t…` with `q…`) carry no
//! relation and are rejected.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::CycloScalar;

/// Default cap on word length; everything the covariance checks need is a
/// product of two cubes (length 6).
pub const DEFAULT_WORD_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("word length {len} exceeds the cap {cap}")]
    CapacityExceeded { len: usize, cap: usize },
    #[error("words mixing the theta and q families are unsupported")]
    MixedFamilies,
}

/// Which conjugate pair a symbol belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyPair {
    Theta,
    Q,
}

impl FamilyPair {
    /// Conventional number of grade-1 generators (2 for theta, 3 for q).
    pub fn default_generator_count(self) -> u8 {
        match self {
            FamilyPair::Theta => 2,
            FamilyPair::Q => 3,
        }
    }
}

/// Generator family. Declaration order fixes the canonical symbol order:
/// grade-1 before grade-2 within each pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Theta,
    ThetaBar,
    Q,
    QBar,
}

impl Family {
    pub fn grade(self) -> u8 {
        match self {
            Family::Theta | Family::Q => 1,
            Family::ThetaBar | Family::QBar => 2,
        }
    }

    pub fn pair(self) -> FamilyPair {
        match self {
            Family::Theta | Family::ThetaBar => FamilyPair::Theta,
            Family::Q | Family::QBar => FamilyPair::Q,
        }
    }

    /// Swap a family with its conjugate partner.
    pub fn conjugate(self) -> Family {
        match self {
            Family::Theta => Family::ThetaBar,
            Family::ThetaBar => Family::Theta,
            Family::Q => Family::QBar,
            Family::QBar => Family::Q,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Family::Theta => "t",
            Family::ThetaBar => "tb",
            Family::Q => "q",
            Family::QBar => "qb",
        }
    }
}

/// One generator: a family plus a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    pub family: Family,
    pub index: u8,
}

impl GeneratorSymbol {
    pub fn new(family: Family, index: u8) -> Self {
        GeneratorSymbol { family, index }
    }

    pub fn grade(self) -> u8 {
        self.family.grade()
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.tag(), self.index)
    }
}

/// A monomial: a finite sequence of generator symbols. The derived ordering
/// (length-insensitive lexicographic) is the canonical-representative order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GradedWord {
    symbols: Vec<GeneratorSymbol>,
}

impl GradedWord {
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Self {
        GradedWord { symbols }
    }

    /// The empty word: the algebra unit, grade 0.
    pub fn unit() -> Self {
        GradedWord::default()
    }

    pub fn from_indices(family: Family, indices: &[u8]) -> Self {
        GradedWord {
            symbols: indices
                .iter()
                .map(|&i| GeneratorSymbol::new(family, i))
                .collect(),
        }
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Z₃ grade: sum of symbol grades mod 3.
    pub fn grade(&self) -> u8 {
        self.symbols.iter().map(|s| s.grade() as u32).sum::<u32>() as u8 % 3
    }

    /// Concatenation (no reduction).
    pub fn concat(&self, other: &GradedWord) -> GradedWord {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        GradedWord { symbols }
    }
}

impl fmt::Display for GradedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for s in &self.symbols {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Outcome of reduction: the word either vanishes or equals a phase times
/// its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    Zero,
    Term(CycloScalar, GradedWord),
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        matches!(self, NormalForm::Zero)
    }
}

/// Reduce a word to its canonical form under the ternary relations, with
/// the default length cap.
pub fn normal_form(word: &GradedWord) -> Result<NormalForm, AlgebraError> {
    normal_form_capped(word, DEFAULT_WORD_CAP)
}

/// Reduce with an explicit length cap.
pub fn normal_form_capped(word: &GradedWord, cap: usize) -> Result<NormalForm, AlgebraError> {
    if word.len() > cap {
        return Err(AlgebraError::CapacityExceeded {
            len: word.len(),
            cap,
        });
    }
    let mut pair: Option<FamilyPair> = None;
    for s in word.symbols() {
        match pair {
            None => pair = Some(s.family.pair()),
            Some(p) if p != s.family.pair() => return Err(AlgebraError::MixedFamilies),
            _ => {}
        }
    }

    // Step 1: move grade-1 symbols left of grade-2 symbols. The subsequences
    // keep their internal order, and each crossed (grade-2, grade-1) pair is
    // one application of the exchange rule  ȳ x = −j² (x ȳ).
    let mut ones: Vec<GeneratorSymbol> = Vec::new();
    let mut twos: Vec<GeneratorSymbol> = Vec::new();
    let mut inversions: u64 = 0;
    for &s in word.symbols() {
        if s.grade() == 1 {
            inversions += twos.len() as u64;
            ones.push(s);
        } else {
            twos.push(s);
        }
    }
    let mut phase = minus_j_squared_pow(inversions);

    // Step 2: maximal same-grade blocks. Length ≥ 4 kills the word; length 3
    // is rotated to the lexicographically smallest representative, paying j
    // (grade 1) or j² (grade 2) per left-rotation.
    for (block, rot_phase) in [(&mut ones, 1i64), (&mut twos, 2i64)] {
        if block.len() >= 4 {
            return Ok(NormalForm::Zero);
        }
        if block.len() == 3 {
            if block[0] == block[1] && block[1] == block[2] {
                // x x x = j · x x x forces the cube to vanish.
                return Ok(NormalForm::Zero);
            }
            let mut best = block.clone();
            let mut best_rotations = 0i64;
            let mut current = block.clone();
            for k in 1..3 {
                current.rotate_left(1);
                if current < best {
                    best = current.clone();
                    best_rotations = k;
                }
            }
            phase = phase * CycloScalar::j_pow(rot_phase * best_rotations);
            *block = best;
        }
    }

    ones.extend_from_slice(&twos);
    Ok(NormalForm::Term(phase, GradedWord::new(ones)))
}

/// (−j²)^k, the phase paid for k adjacent (grade-2, grade-1) exchanges when
/// rewriting toward canonical order.
fn minus_j_squared_pow(k: u64) -> CycloScalar {
    let sign = if k % 2 == 0 {
        CycloScalar::one()
    } else {
        CycloScalar::from_int(-1)
    };
    sign * CycloScalar::j_pow(2 * (k % 3) as i64)
}

/// (−j)^k: the phase a grade-1 symbol pays to hop right across k grade-2
/// symbols (one application of the mixed relation per hop).
pub fn exchange_phase(exchanges: u64) -> CycloScalar {
    let sign = if exchanges % 2 == 0 {
        CycloScalar::one()
    } else {
        CycloScalar::from_int(-1)
    };
    sign * CycloScalar::j_pow((exchanges % 3) as i64)
}

/// The phase ω with (cube)(conjugate cube) = ω · (conjugate cube)(cube):
/// nine adjacent exchanges, so ω = (−j)⁹ = −1. Computed by reducing both
/// orders of concrete cubes, not by evaluating the closed form.
pub fn anticommutation_witness(n: u8) -> CycloScalar {
    assert!(n >= 2, "need at least two generators for a nonzero cube");
    let u = GradedWord::from_indices(Family::Theta, &[1, 1, 2]);
    let v = GradedWord::from_indices(Family::ThetaBar, &[1, 1, 2]);
    let uv = normal_form(&u.concat(&v)).expect("within cap");
    let vu = normal_form(&v.concat(&u)).expect("within cap");
    match (uv, vu) {
        (NormalForm::Term(cu, wu), NormalForm::Term(cv, wv)) => {
            assert_eq!(wu, wv);
            cu * cv.inverse().expect("phases are units")
        }
        _ => unreachable!("cubes of distinct generators do not vanish"),
    }
}

/// All canonical single-family words of the given length over indices
/// 1..=n, in lexicographic order.
pub fn enumerate_basis(family: Family, n: u8, len: usize) -> Vec<GradedWord> {
    let mut found: BTreeMap<GradedWord, ()> = BTreeMap::new();
    let mut indices = vec![1u8; len];
    loop {
        let word = GradedWord::from_indices(family, &indices);
        if let Ok(NormalForm::Term(_, canonical)) = normal_form_capped(&word, len.max(1)) {
            found.insert(canonical, ());
        }
        // Odometer over the index tuples.
        let mut pos = len;
        loop {
            if pos == 0 {
                return found.into_keys().collect();
            }
            pos -= 1;
            if indices[pos] < n {
                indices[pos] += 1;
                for slot in indices.iter_mut().skip(pos + 1) {
                    *slot = 1;
                }
                break;
            }
        }
        if len == 0 {
            return found.into_keys().collect();
        }
    }
}

/// Closed-form dimension of the length-`len` single-family subspace.
pub fn single_family_dimension(n: u64, len: usize) -> u64 {
    match len {
        0 => 1,
        1 => n,
        2 => n * n,
        3 => (n * n * n - n) / 3,
        _ => 0,
    }
}

/// N + N² + (N³ − N)/3: generators, quadratic and cubic independents.
pub fn total_dimension(n: u64) -> u64 {
    (1..=3).map(|l| single_family_dimension(n, l)).sum()
}

/// A finite linear combination of canonical words with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<GradedWord, CycloScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn unit() -> Self {
        Self::from_word(&GradedWord::unit()).expect("unit is canonical")
    }

    /// A single monomial, reduced to canonical form.
    pub fn from_word(word: &GradedWord) -> Result<Self, AlgebraError> {
        Self::from_term(CycloScalar::one(), word)
    }

    pub fn from_term(coeff: CycloScalar, word: &GradedWord) -> Result<Self, AlgebraError> {
        let mut out = AlgebraElement::zero();
        out.accumulate(coeff, word)?;
        Ok(out)
    }

    fn accumulate(&mut self, coeff: CycloScalar, word: &GradedWord) -> Result<(), AlgebraError> {
        match normal_form(word)? {
            NormalForm::Zero => {}
            NormalForm::Term(phase, canonical) => {
                let total = coeff * phase;
                let entry = self
                    .terms
                    .entry(canonical)
                    .or_insert_with(CycloScalar::zero);
                *entry = &*entry + &total;
                if entry.is_zero() {
                    // The key we just touched is the only one that can have
                    // become zero.
                    self.terms.retain(|_, c| !c.is_zero());
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GradedWord, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &GradedWord) -> CycloScalar {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(CycloScalar::zero)
    }

    /// The common grade of all stored words, or `None` for a mixed-grade
    /// element. The zero element reports grade 0.
    pub fn grade(&self) -> Option<u8> {
        let mut grades = self.terms.keys().map(GradedWord::grade);
        let first = match grades.next() {
            None => return Some(0),
            Some(g) => g,
        };
        if grades.all(|g| g == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn scale(&self, factor: &CycloScalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(CycloScalar::zero);
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        AlgebraElement { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycloScalar::from_int(-1)))
    }

    /// Bilinear associative product; every output word is canonical.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (wx, cx) in &self.terms {
            for (wy, cy) in &other.terms {
                out.accumulate(cx * cy, &wx.concat(wy))?;
            }
        }
        Ok(out)
    }

    /// Antilinear automorphism: swaps every symbol with its conjugate
    /// family (indices and order kept) and conjugates coefficients. This is
    /// the unique antilinear extension of x ↦ x̄ compatible with the
    /// ternary relations — order reversal is not: the reversed image of the
    /// grade-1 cyclic relation would need phase j² where the grade-2
    /// relation supplies j. Keeping the order sends the cyclic relations
    /// and the mixed exchange rule exactly onto their conjugates, and the
    /// map is involutive.
    pub fn conjugate(&self) -> Self {
        let mut out = AlgebraElement::zero();
        for (w, c) in &self.terms {
            let swapped: Vec<GeneratorSymbol> = w
                .symbols()
                .iter()
                .map(|s| GeneratorSymbol::new(s.family.conjugate(), s.index))
                .collect();
            out.accumulate(c.conj(), &GradedWord::new(swapped))
                .expect("conjugate of a reduced word stays within cap");
        }
        out
    }

    /// Deterministic rendering: terms in canonical word order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("({c})·[{w}]"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(indices: &[u8]) -> GradedWord {
        GradedWord::from_indices(Family::Theta, indices)
    }

    fn theta_bar(indices: &[u8]) -> GradedWord {
        GradedWord::from_indices(Family::ThetaBar, indices)
    }

    fn j() -> CycloScalar {
        CycloScalar::j()
    }

    #[test]
    fn rotation_reaches_lexicographic_minimum() {
        // (2 1 1) is one left-rotation away from (1 1 2), costing j.
        let nf = normal_form(&theta(&[2, 1, 1])).unwrap();
        assert_eq!(nf, NormalForm::Term(j(), theta(&[1, 1, 2])));
        // (1 2 1) needs two left-rotations, costing j².
        let nf = normal_form(&theta(&[1, 2, 1])).unwrap();
        assert_eq!(nf, NormalForm::Term(CycloScalar::j2(), theta(&[1, 1, 2])));
    }

    #[test]
    fn grade_two_blocks_rotate_with_the_conjugate_phase() {
        let nf = normal_form(&theta_bar(&[2, 1, 1])).unwrap();
        assert_eq!(
            nf,
            NormalForm::Term(CycloScalar::j2(), theta_bar(&[1, 1, 2]))
        );
    }

    #[test]
    fn cubes_and_quartics_vanish() {
        assert_eq!(normal_form(&theta(&[1, 1, 1])).unwrap(), NormalForm::Zero);
        assert_eq!(
            normal_form(&theta(&[1, 2, 1, 2])).unwrap(),
            NormalForm::Zero
        );
        assert_eq!(
            normal_form(&theta_bar(&[1, 1, 1, 2])).unwrap(),
            NormalForm::Zero
        );
    }

    #[test]
    fn mixed_exchange_pays_minus_j_squared() {
        // tb1 t1 = −j² (t1 tb1)
        let word = theta_bar(&[1]).concat(&theta(&[1]));
        let nf = normal_form(&word).unwrap();
        let expected_word = theta(&[1]).concat(&theta_bar(&[1]));
        assert_eq!(nf, NormalForm::Term(-CycloScalar::j2(), expected_word));
    }

    #[test]
    fn capacity_and_family_mix_are_rejected() {
        let long = theta(&[1, 2, 1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(
            normal_form(&long),
            Err(AlgebraError::CapacityExceeded { len: 9, cap: 8 })
        );
        let mixed = theta(&[1]).concat(&GradedWord::from_indices(Family::Q, &[1]));
        assert_eq!(normal_form(&mixed), Err(AlgebraError::MixedFamilies));
    }

    #[test]
    fn normal_form_is_idempotent_on_canonicals() {
        for n in [2u8, 3] {
            for len in 0..=3 {
                for word in enumerate_basis(Family::Theta, n, len) {
                    let nf = normal_form(&word).unwrap();
                    assert_eq!(nf, NormalForm::Term(CycloScalar::one(), word));
                }
            }
        }
    }

    #[test]
    fn multiply_examples() {
        // (t1 t2)·(t1) = j² · t1 t1 t2
        let x = AlgebraElement::from_word(&theta(&[1, 2])).unwrap();
        let y = AlgebraElement::from_word(&theta(&[1])).unwrap();
        let p = x.multiply(&y).unwrap();
        assert_eq!(p.coefficient(&theta(&[1, 1, 2])), CycloScalar::j2());
        assert_eq!(p.terms().count(), 1);
        // (t1)·(t1 t1) = 0
        let cube = y
            .multiply(&AlgebraElement::from_word(&theta(&[1, 1])).unwrap())
            .unwrap();
        assert!(cube.is_zero());
    }

    #[test]
    fn unit_is_neutral() {
        let x = AlgebraElement::from_word(&theta(&[1, 2])).unwrap();
        assert_eq!(AlgebraElement::unit().multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&AlgebraElement::unit()).unwrap(), x);
    }

    #[test]
    fn conjugate_examples() {
        // conj(t1 t2) = tb1 tb2: families swap, order stays.
        let x = AlgebraElement::from_word(&theta(&[1, 2])).unwrap();
        let c = x.conjugate();
        assert_eq!(c.coefficient(&theta_bar(&[1, 2])), CycloScalar::one());
        // conj(j·t1) = j²·tb1: antilinearity.
        let y = AlgebraElement::from_term(j(), &theta(&[1])).unwrap();
        assert_eq!(
            y.conjugate().coefficient(&theta_bar(&[1])),
            CycloScalar::j2()
        );
        // Involutive even across cubic blocks, where the canonicalization
        // phases must cancel.
        let z = AlgebraElement::from_word(&theta(&[1, 1, 2])).unwrap();
        assert_eq!(z.conjugate().conjugate(), z);
    }

    #[test]
    fn basis_counts_match_the_closed_formula() {
        // N = 2: 2 generators, 4 quadratic, 2 cubic — total 8.
        assert_eq!(enumerate_basis(Family::Theta, 2, 1).len(), 2);
        assert_eq!(enumerate_basis(Family::Theta, 2, 2).len(), 4);
        let cubic = enumerate_basis(Family::Theta, 2, 3);
        assert_eq!(
            cubic,
            vec![theta(&[1, 1, 2]), theta(&[1, 2, 2])],
            "the two independent cubes for N = 2"
        );
        // N = 3: eight independent cubes.
        assert_eq!(enumerate_basis(Family::Q, 3, 3).len(), 8);
        for n in [2u64, 3, 4] {
            for len in 1..=3 {
                assert_eq!(
                    enumerate_basis(Family::Theta, n as u8, len).len() as u64,
                    single_family_dimension(n, len),
                    "N = {n}, length {len}"
                );
            }
            assert_eq!(total_dimension(n), n + n * n + (n * n * n - n) / 3);
        }
        // Length ≥ 4 has no independent words at all.
        assert!(enumerate_basis(Family::Theta, 2, 4).is_empty());
    }

    #[test]
    fn anticommutation_witness_is_minus_one() {
        assert_eq!(anticommutation_witness(2), CycloScalar::from_int(-1));
        assert_eq!(exchange_phase(1), -j());
        assert_eq!(exchange_phase(2), CycloScalar::j2());
        // Nine applications of the single-exchange phase, accumulated.
        let mut nine = CycloScalar::one();
        for _ in 0..9 {
            nine = nine * exchange_phase(1);
        }
        assert_eq!(nine, anticommutation_witness(2));
    }

    #[test]
    fn cubic_blocks_anticommute_exhaustively() {
        let cubes = enumerate_basis(Family::Theta, 2, 3);
        let bar_cubes = enumerate_basis(Family::ThetaBar, 2, 3);
        for u in &cubes {
            for v in &bar_cubes {
                let ue = AlgebraElement::from_word(u).unwrap();
                let ve = AlgebraElement::from_word(v).unwrap();
                let uv = ue.multiply(&ve).unwrap();
                let vu = ve.multiply(&ue).unwrap();
                assert_eq!(uv, vu.scale(&CycloScalar::from_int(-1)), "u = {u}, v = {v}");
                assert!(!uv.is_zero());
            }
        }
    }

    #[test]
    fn grades_are_reported() {
        assert_eq!(theta(&[1, 2]).grade(), 2);
        assert_eq!(theta_bar(&[1]).grade(), 2);
        assert_eq!(theta(&[1, 2, 1]).grade(), 0);
        let homogeneous = AlgebraElement::from_word(&theta(&[1, 2])).unwrap();
        assert_eq!(homogeneous.grade(), Some(2));
        let mixed = homogeneous.add(&AlgebraElement::from_word(&theta(&[1])).unwrap());
        assert_eq!(mixed.grade(), None);
        assert_eq!(AlgebraElement::zero().grade(), Some(0));
    }

    #[test]
    fn rendering_is_deterministic() {
        let x = AlgebraElement::from_word(&theta(&[2, 1, 1]))
            .unwrap()
            .add(&AlgebraElement::from_term(j(), &theta(&[1])).unwrap());
        assert_eq!(x.render(), "(j)·[t1] + (j)·[t1 t1 t2]");
    }
}
