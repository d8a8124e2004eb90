//! The invariant tensors of the cubic algebra.
//!
//! * `rho` / `rho_bar` — the two cyclic three-forms on the two-generator
//!   algebra (and their conjugates). A three-form contracted with a cubic
//!   monomial is only well defined when rotating its lower indices costs
//!   the inverse of the phase the monomial pays, so each tensor carries a
//!   cyclic phase ω ∈ {j, j²} with `t(a,b,c) = ω · t(b,c,a)`.
//! * `cubic_k` — the eight three-forms on the three-generator algebra, one
//!   per size-3 cyclic index class, all with ω = j². Their pairwise
//!   Hermitian pairing is 3·δ, which is what makes the adjoint projection
//!   in [`crate::su3`] exact.
//! * `pi` / `pi_bar` — phase-dressed Pauli matrices mapping generator ×
//!   conjugate-generator pairs to four-vector slots, and the antisymmetric
//!   spinor metric ε used to raise their indices.
//!
//! Index convention for the two-forms: `pi[μ]` stores π^μ_{AḂ} with the
//! undotted index as the row, while `pi_bar[μ]` stores π̄^μ_{ḂA} with the
//! dotted index as the row. Writing σ^μ_{ḂA} reorders the label list of the
//! same array rather than transposing it, so the stored π̄ matrix is
//! −j·i·(σ^μ)ᵀ and the exact entrywise symmetry reads
//! `π^μ_{AḂ} = −j · π̄^μ_{ḂA}`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::matrix::{DenseMatrix, Scalar};
use crate::scalar::CycloScalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("three-form application needs a homogeneous cubic element: {0}")]
    NotCubic(String),
    #[error("index {index} out of range 1..={n}")]
    IndexRange { index: u8, n: u8 },
}

/// The two cyclic phases a consistent three-form can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicPhase {
    J,
    J2,
}

impl CyclicPhase {
    pub fn value(self) -> CycloScalar {
        match self {
            CyclicPhase::J => CycloScalar::j(),
            CyclicPhase::J2 => CycloScalar::j2(),
        }
    }
}

/// Outcome of the cyclic-consistency scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicConsistency {
    /// Every stored triple satisfies t(a,b,c) = ω · t(b,c,a) for this ω.
    Phase(CycloScalar),
    Inconsistent,
}

/// A rank-3 component table over index range 1..=n with named output slots
/// and a declared cyclic phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicTensor3 {
    n: u8,
    omega: CycloScalar,
    labels: Vec<String>,
    components: BTreeMap<(usize, [u8; 3]), CycloScalar>,
}

fn rotate_left(t: [u8; 3]) -> [u8; 3] {
    [t[1], t[2], t[0]]
}

fn rotate_right(t: [u8; 3]) -> [u8; 3] {
    [t[2], t[0], t[1]]
}

impl CyclicTensor3 {
    /// Build a tensor from one seed triple per label, set to 1. The two
    /// rotations of each seed are filled in so that t(a,b,c) = ω·t(b,c,a):
    /// the left rotation gets ω² and the double rotation gets ω.
    pub fn from_seeds(n: u8, omega: CyclicPhase, seeds: &[(&str, [u8; 3])]) -> Self {
        let om = omega.value();
        let om2 = &om * &om;
        let mut labels = Vec::new();
        let mut components = BTreeMap::new();
        for (label, seed) in seeds {
            // Constant triples have no size-3 rotation class to fill.
            assert!(
                rotate_left(*seed) != *seed,
                "seed {seed:?} is rotation-fixed"
            );
            let slot = labels.len();
            labels.push((*label).to_string());
            components.insert((slot, *seed), CycloScalar::one());
            components.insert((slot, rotate_left(*seed)), om2.clone());
            components.insert((slot, rotate_left(rotate_left(*seed))), om.clone());
        }
        CyclicTensor3 {
            n,
            omega: om,
            labels,
            components,
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn omega(&self) -> &CycloScalar {
        &self.omega
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    /// Component for a label slot and index triple (zero when absent).
    pub fn component(&self, label: usize, indices: [u8; 3]) -> CycloScalar {
        self.components
            .get(&(label, indices))
            .cloned()
            .unwrap_or_else(CycloScalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, [u8; 3], &CycloScalar)> {
        self.components.iter().map(|((l, idx), v)| (*l, *idx, v))
    }

    /// Entrywise complex conjugate; the declared phase conjugates with it.
    pub fn conj(&self) -> Self {
        CyclicTensor3 {
            n: self.n,
            omega: self.omega.conj(),
            labels: self.labels.clone(),
            components: self
                .components
                .iter()
                .map(|(k, v)| (*k, v.conj()))
                .collect(),
        }
    }

    /// Hermitian pairing of two label slots: Σ_{abc} t^Φ · conj(t^Ω).
    pub fn pairing(&self, a: usize, b: usize) -> CycloScalar {
        let mut acc = CycloScalar::zero();
        for ((l, idx), v) in &self.components {
            if *l != a {
                continue;
            }
            let other = self.component(b, *idx);
            if !other.is_zero() {
                acc = acc + v * &other.conj();
            }
        }
        acc
    }

    /// Serialize as a list of {label, indices, value} triples; values use
    /// the exact scalar rendering so golden files round-trip.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .components
            .iter()
            .map(|((l, idx), v)| {
                json!({
                    "label": self.labels[*l],
                    "indices": [idx[0], idx[1], idx[2]],
                    "value": v.to_string(),
                })
            })
            .collect();
        Value::Array(entries)
    }
}

impl fmt::Display for CyclicTensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicTensor3(n={}, omega={})", self.n, self.omega)
    }
}

/// The two three-forms of the two-generator algebra, with the default
/// cyclic phase ω = j: label 1 is supported on the class of (1,2,1) and
/// label 2 on the class of (2,1,2).
pub fn rho() -> CyclicTensor3 {
    rho_with_phase(CyclicPhase::J)
}

/// Same supports with an explicit choice of ω, for comparing the two
/// printed conventions side by side.
pub fn rho_with_phase(omega: CyclicPhase) -> CyclicTensor3 {
    CyclicTensor3::from_seeds(2, omega, &[("1", [1, 2, 1]), ("2", [2, 1, 2])])
}

/// Componentwise conjugate of [`rho`]; carries ω = j².
pub fn rho_bar() -> CyclicTensor3 {
    rho().conj()
}

/// The eight cubic three-forms of the three-generator algebra (ω = j²).
/// One label per size-3 cyclic class: six classes with a repeated index and
/// the two fully distinct classes.
pub fn cubic_k() -> CyclicTensor3 {
    CyclicTensor3::from_seeds(
        3,
        CyclicPhase::J2,
        &[
            ("3+", [1, 2, 1]),
            ("3-", [2, 1, 2]),
            ("2+", [3, 1, 3]),
            ("2-", [1, 3, 1]),
            ("1+", [2, 3, 2]),
            ("1-", [3, 2, 3]),
            ("7", [1, 2, 3]),
            ("8", [1, 3, 2]),
        ],
    )
}

/// Scan all stored triples for a single phase relating each to its left
/// rotation. Missing rotations or clashing ratios are inconsistent.
pub fn check_cyclic_consistency(t: &CyclicTensor3) -> CyclicConsistency {
    let mut found: Option<CycloScalar> = None;
    for (label, idx, value) in t.entries() {
        let rotated = t.component(label, rotate_left(idx));
        if rotated.is_zero() {
            return CyclicConsistency::Inconsistent;
        }
        // value = ω · rotated
        let ratio = value * &rotated.inverse().expect("nonzero");
        match &found {
            None => found = Some(ratio),
            Some(prev) if *prev != ratio => return CyclicConsistency::Inconsistent,
            _ => {}
        }
    }
    match found {
        Some(omega) => CyclicConsistency::Phase(omega),
        None => CyclicConsistency::Inconsistent,
    }
}

/// Contract a three-form with a grade-0 cubic element (a combination of
/// canonical length-3 grade-1 words), returning one scalar per label.
///
/// A canonical word w picks up contributions from all three rotations of
/// its index triple: the member needing k left rotations to reach w equals
/// j^k times w in the algebra, so it contributes t(member)·j^k.
pub fn apply_three_form(
    t: &CyclicTensor3,
    e: &AlgebraElement,
) -> Result<Vec<CycloScalar>, FormsError> {
    let mut out = vec![CycloScalar::zero(); t.label_count()];
    for (word, coeff) in e.terms() {
        let syms = word.symbols();
        if syms.len() != 3 || syms.iter().any(|s| s.grade() != 1) {
            return Err(FormsError::NotCubic(word.to_string()));
        }
        let mut idx = [0u8; 3];
        for (slot, s) in syms.iter().enumerate() {
            if s.index == 0 || s.index > t.n {
                return Err(FormsError::IndexRange {
                    index: s.index,
                    n: t.n,
                });
            }
            idx[slot] = s.index;
        }
        let mut member = idx;
        let mut phase = CycloScalar::one();
        for _ in 0..3 {
            for (label, acc) in out.iter_mut().enumerate() {
                let c = t.component(label, member);
                if !c.is_zero() {
                    *acc = &*acc + &(&(&c * &phase) * coeff);
                }
            }
            member = rotate_right(member);
            phase = phase * CycloScalar::j();
        }
    }
    Ok(out)
}

/// Flat position of a 1-based index triple in an n³ table.
pub fn flat_index(n: u8, idx: [u8; 3]) -> usize {
    let n = n as usize;
    (idx[0] as usize - 1) * n * n + (idx[1] as usize - 1) * n + (idx[2] as usize - 1)
}

/// Every index triple over 1..=n in flat order.
pub fn all_triples(n: u8) -> Vec<[u8; 3]> {
    let mut out = Vec::with_capacity((n as usize).pow(3));
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Transform every lower index of a three-form by a matrix:
///
/// `out[label][flat(a,b,c)] = Σ_{a'b'c'} t^label_{a'b'c'} · u[a'][a] u[b'][b] u[c'][c]`
///
/// (matrix entry `u[r][c]` is the row-r, column-c element, the row being the
/// primed index). The sum only visits the tensor's stored support.
pub fn transform_three_form<S: Scalar>(t: &CyclicTensor3, u: &DenseMatrix<S>) -> Vec<Vec<S>> {
    let n = t.n();
    assert_eq!(u.dim(), n as usize);
    let cube = (n as usize).pow(3);
    let mut out = vec![vec![S::zero(); cube]; t.label_count()];
    for (label, support, value) in t.entries() {
        let v = S::from_cyclo(value);
        for (slot, target) in all_triples(n).into_iter().enumerate() {
            let mut w = v.clone();
            for (p, q) in support.iter().zip(target.iter()) {
                w = w.mul(u.get(*p as usize - 1, *q as usize - 1));
            }
            out[label][slot] = out[label][slot].add(&w);
        }
    }
    out
}

/// One output slot of a two-form family: a small exact matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    pub mu: usize,
    pub matrix: Vec<Vec<CycloScalar>>,
}

impl TwoForm {
    pub fn entry(&self, row: usize, col: usize) -> &CycloScalar {
        &self.matrix[row][col]
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }
}

/// The Pauli matrices over exact scalars: σ⁰ = identity, σ^{1,2,3} the
/// standard Hermitian triple (σ² uses the exact i).
pub fn sigma(mu: usize) -> Vec<Vec<CycloScalar>> {
    let o = CycloScalar::one;
    let z = CycloScalar::zero;
    let i = CycloScalar::i;
    match mu {
        0 => vec![vec![o(), z()], vec![z(), o()]],
        1 => vec![vec![z(), o()], vec![o(), z()]],
        2 => vec![vec![z(), -i()], vec![i(), z()]],
        3 => vec![vec![o(), z()], vec![z(), -o()]],
        _ => panic!("sigma index out of range: {mu}"),
    }
}

/// π^μ_{AḂ} = j²·i·σ^μ, stored with the undotted index as the row.
pub fn pi() -> Vec<TwoForm> {
    let phase = CycloScalar::j2() * CycloScalar::i();
    (0..4)
        .map(|mu| TwoForm {
            mu,
            matrix: sigma(mu)
                .into_iter()
                .map(|row| row.into_iter().map(|e| &phase * &e).collect())
                .collect(),
        })
        .collect()
}

/// π̄^μ_{ḂA} = −j·i·σ^μ_{ḂA}, stored with the dotted index as the row; as
/// an array that is −j·i·(σ^μ)ᵀ.
pub fn pi_bar() -> Vec<TwoForm> {
    let phase = -(CycloScalar::j() * CycloScalar::i());
    (0..4)
        .map(|mu| {
            let s = sigma(mu);
            let matrix = (0..2)
                .map(|r| (0..2).map(|c| &phase * &s[c][r]).collect())
                .collect();
            TwoForm { mu, matrix }
        })
        .collect()
}

/// The antisymmetric spinor metric for undotted and dotted indices, both
/// normalized to ε^{12} = +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonMetric {
    pub undotted: [[CycloScalar; 2]; 2],
    pub dotted: [[CycloScalar; 2]; 2],
}

impl EpsilonMetric {
    pub fn new() -> Self {
        let table = || {
            [
                [CycloScalar::zero(), CycloScalar::one()],
                [CycloScalar::from_int(-1), CycloScalar::zero()],
            ]
        };
        EpsilonMetric {
            undotted: table(),
            dotted: table(),
        }
    }
}

impl Default for EpsilonMetric {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Family, GradedWord};

    fn j() -> CycloScalar {
        CycloScalar::j()
    }

    fn j2() -> CycloScalar {
        CycloScalar::j2()
    }

    #[test]
    fn rho_components() {
        let r = rho();
        assert_eq!(r.component(0, [1, 2, 1]), CycloScalar::one());
        assert_eq!(r.component(0, [2, 1, 1]), j2());
        assert_eq!(r.component(0, [1, 1, 2]), j());
        assert_eq!(r.component(1, [2, 1, 2]), CycloScalar::one());
        assert_eq!(r.component(1, [1, 2, 2]), j2());
        assert_eq!(r.component(1, [2, 2, 1]), j());
        assert_eq!(r.component(0, [2, 2, 2]), CycloScalar::zero());
        // t(a,b,c) = ω·t(b,c,a) with ω = j over every stored triple.
        for (l, idx, v) in r.entries() {
            assert_eq!(*v, j() * r.component(l, [idx[1], idx[2], idx[0]]));
        }
    }

    #[test]
    fn rho_variant_swaps_the_rotation_weights() {
        let r = rho_with_phase(CyclicPhase::J2);
        assert_eq!(r.component(0, [1, 1, 2]), j2());
        assert_eq!(r.component(0, [2, 1, 1]), j());
    }

    #[test]
    fn rho_bar_is_the_componentwise_conjugate() {
        let rb = rho_bar();
        assert_eq!(rb.component(0, [1, 2, 1]), CycloScalar::one());
        assert_eq!(rb.component(0, [2, 1, 1]), j());
        assert_eq!(rb.component(0, [1, 1, 2]), j2());
        assert_eq!(*rb.omega(), j2());
        let r = rho();
        for (l, idx, v) in r.entries() {
            assert_eq!(rb.component(l, idx), v.conj());
        }
    }

    #[test]
    fn cubic_k_components() {
        let k = cubic_k();
        assert_eq!(k.label_count(), 8);
        assert_eq!(k.entries().count(), 24);
        // The class with a repeated 1 around a 2.
        assert_eq!(k.component(0, [1, 2, 1]), CycloScalar::one());
        assert_eq!(k.component(0, [1, 1, 2]), j2());
        assert_eq!(k.component(0, [2, 1, 1]), j());
        // Distinct-index classes follow the same ω = j² rule.
        assert_eq!(k.component(6, [1, 2, 3]), CycloScalar::one());
        assert_eq!(k.component(6, [2, 3, 1]), j());
        assert_eq!(k.component(6, [3, 1, 2]), j2());
        assert_eq!(k.component(7, [1, 3, 2]), CycloScalar::one());
        assert_eq!(k.component(7, [3, 2, 1]), j());
        assert_eq!(k.component(7, [2, 1, 3]), j2());
        for (l, idx, v) in k.entries() {
            assert_eq!(*v, j2() * k.component(l, [idx[1], idx[2], idx[0]]));
        }
    }

    #[test]
    fn k_supports_are_disjoint_and_orthogonal() {
        let k = cubic_k();
        // Brute force over all 27 index triples: at most one label is
        // nonzero at each triple.
        for a in 1..=3u8 {
            for b in 1..=3u8 {
                for c in 1..=3u8 {
                    let holders: Vec<usize> = (0..8)
                        .filter(|&l| !k.component(l, [a, b, c]).is_zero())
                        .collect();
                    assert!(holders.len() <= 1, "support clash at {:?}", [a, b, c]);
                }
            }
        }
        for a in 0..8 {
            for b in 0..8 {
                let expected = if a == b {
                    CycloScalar::from_int(3)
                } else {
                    CycloScalar::zero()
                };
                assert_eq!(k.pairing(a, b), expected, "pairing({a}, {b})");
            }
        }
    }

    #[test]
    fn every_constructor_matches_its_declared_phase() {
        let tensors = [
            rho(),
            rho_with_phase(CyclicPhase::J),
            rho_with_phase(CyclicPhase::J2),
            rho_bar(),
            cubic_k(),
        ];
        for t in tensors {
            assert_eq!(
                check_cyclic_consistency(&t),
                CyclicConsistency::Phase(t.omega().clone()),
                "{t}"
            );
        }
    }

    #[test]
    fn consistency_scan_recovers_each_phase() {
        assert_eq!(
            check_cyclic_consistency(&rho()),
            CyclicConsistency::Phase(j())
        );
        assert_eq!(
            check_cyclic_consistency(&rho_bar()),
            CyclicConsistency::Phase(j2())
        );
        assert_eq!(
            check_cyclic_consistency(&cubic_k()),
            CyclicConsistency::Phase(j2())
        );
        // A lone component has no rotations to relate to.
        let mut lone = CyclicTensor3::from_seeds(2, CyclicPhase::J, &[("1", [1, 2, 1])]);
        lone.components.remove(&(0, [2, 1, 1]));
        lone.components.remove(&(0, [1, 1, 2]));
        assert_eq!(
            check_cyclic_consistency(&lone),
            CyclicConsistency::Inconsistent
        );
    }

    #[test]
    fn three_form_application_matches_the_rotation_expansion() {
        // The ω = j² convention compensates the j the monomials pay, so the
        // class sum is 3·(phase); with ω = j the three contributions cancel.
        let e = AlgebraElement::from_word(&GradedWord::from_indices(Family::Theta, &[1, 2, 1]))
            .unwrap();
        let compensating = apply_three_form(&rho_with_phase(CyclicPhase::J2), &e).unwrap();
        assert_eq!(compensating[0], CycloScalar::from_int(3) * j());
        assert!(compensating[1].is_zero());
        let cancelling = apply_three_form(&rho(), &e).unwrap();
        assert!(cancelling[0].is_zero() && cancelling[1].is_zero());
        // Zero maps to zero.
        let zeros = apply_three_form(&rho(), &AlgebraElement::zero()).unwrap();
        assert!(zeros.iter().all(CycloScalar::is_zero));
    }

    #[test]
    fn three_form_application_is_linear() {
        let w1 = GradedWord::from_indices(Family::Theta, &[1, 1, 2]);
        let w2 = GradedWord::from_indices(Family::Theta, &[1, 2, 2]);
        let a = AlgebraElement::from_term(j(), &w1).unwrap();
        let b = AlgebraElement::from_term(CycloScalar::from_ratio(3, 2), &w2).unwrap();
        let t = rho_with_phase(CyclicPhase::J2);
        let fa = apply_three_form(&t, &a).unwrap();
        let fb = apply_three_form(&t, &b).unwrap();
        let fsum = apply_three_form(&t, &a.add(&b)).unwrap();
        for l in 0..2 {
            assert_eq!(fsum[l], &fa[l] + &fb[l]);
        }
    }

    #[test]
    fn three_form_rejects_non_cubic_input() {
        let quad =
            AlgebraElement::from_word(&GradedWord::from_indices(Family::Theta, &[1, 2])).unwrap();
        assert!(matches!(
            apply_three_form(&rho(), &quad),
            Err(FormsError::NotCubic(_))
        ));
        let wide =
            AlgebraElement::from_word(&GradedWord::from_indices(Family::Q, &[1, 2, 3])).unwrap();
        assert!(matches!(
            apply_three_form(&rho(), &wide),
            Err(FormsError::IndexRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn pi_matrices() {
        let p = pi();
        let ji2 = CycloScalar::j2() * CycloScalar::i();
        // π⁰ = j²·i·identity
        assert_eq!(*p[0].entry(0, 0), ji2);
        assert_eq!(*p[0].entry(1, 1), ji2);
        assert!(p[0].entry(0, 1).is_zero());
        // π¹ has j²·i off the diagonal
        assert_eq!(*p[1].entry(0, 1), ji2);
        // π̄³_{2̇2} = −j·i·σ³_{22} = +j·i
        let pb = pi_bar();
        assert_eq!(*pb[3].entry(1, 1), j() * CycloScalar::i());
    }

    #[test]
    fn adopted_two_form_symmetry() {
        // π^μ_{AḂ} = −j · π̄^μ_{ḂA} exactly, for every μ and index pair.
        let p = pi();
        let pb = pi_bar();
        let minus_j = -j();
        for mu in 0..4 {
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(
                        *p[mu].entry(a, b),
                        &minus_j * pb[mu].entry(b, a),
                        "mu = {mu}, A = {a}, B = {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn epsilon_is_antisymmetric_with_unit_upper_entry() {
        let eps = EpsilonMetric::new();
        assert_eq!(eps.undotted[0][1], CycloScalar::one());
        assert_eq!(eps.undotted[1][0], CycloScalar::from_int(-1));
        assert_eq!(eps.dotted[0][1], CycloScalar::one());
        assert_eq!(eps.dotted[1][0], CycloScalar::from_int(-1));
        assert!(eps.undotted[0][0].is_zero() && eps.dotted[1][1].is_zero());
    }

    #[test]
    fn tensors_serialize_to_labelled_triples() {
        let v = rho().to_json();
        let entries = v.as_array().unwrap();
        assert_eq!(entries.len(), 6);
        assert!(entries.iter().any(|e| {
            e["label"] == "1" && e["indices"] == json!([1, 2, 1]) && e["value"] == "1"
        }));
        assert!(entries.iter().any(|e| {
            e["label"] == "2" && e["indices"] == json!([2, 2, 1]) && e["value"] == "j"
        }));
    }

    #[test]
    fn rho_serialization_matches_the_golden_form() {
        // Storage order is (label slot, indices ascending); the value
        // strings use the exact scalar rendering.
        let golden = json!([
            {"label": "1", "indices": [1, 1, 2], "value": "j"},
            {"label": "1", "indices": [1, 2, 1], "value": "1"},
            {"label": "1", "indices": [2, 1, 1], "value": "-1 - j"},
            {"label": "2", "indices": [1, 2, 2], "value": "-1 - j"},
            {"label": "2", "indices": [2, 1, 2], "value": "1"},
            {"label": "2", "indices": [2, 2, 1], "value": "j"},
        ]);
        assert_eq!(rho().to_json(), golden);
    }
}
