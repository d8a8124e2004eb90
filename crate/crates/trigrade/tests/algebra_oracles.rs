//! Independent oracles for the rewriting engine.
//!
//! The normal form is checked against a deliberately different engine: a
//! nondeterministic rewriter that applies one local rule at a time — the
//! mixed exchange, the cube and quartic kills, and single left-rotations of
//! length-3 blocks — in a seeded random order until no rule applies. Its
//! fixpoint must reproduce the deterministic (phase, canonical word) pair
//! for every word, which is the confluence of the relation system.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use trigrade::algebra::{
    normal_form, AlgebraElement, Family, GeneratorSymbol, GradedWord, NormalForm,
};
use trigrade::sampling::sample_exact_scalar;
use trigrade::scalar::CycloScalar;

/// Phases that appear during rewriting are ±j^k; track them without any
/// big-rational arithmetic.
#[derive(Clone, Copy, PartialEq, Debug)]
struct Phase {
    negative: bool,
    jpow: u8,
}

impl Phase {
    fn one() -> Self {
        Phase {
            negative: false,
            jpow: 0,
        }
    }

    fn times_minus_j_squared(self) -> Self {
        Phase {
            negative: !self.negative,
            jpow: (self.jpow + 2) % 3,
        }
    }

    fn times_j_pow(self, k: u8) -> Self {
        Phase {
            negative: self.negative,
            jpow: (self.jpow + k) % 3,
        }
    }

    fn to_scalar(self) -> CycloScalar {
        let j = CycloScalar::j_pow(i64::from(self.jpow));
        if self.negative {
            -j
        } else {
            j
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum State {
    Dead,
    Live(Phase, Vec<GeneratorSymbol>),
}

/// All maximal same-grade runs as (start, length) pairs.
fn runs(word: &[GeneratorSymbol]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < word.len() {
        let grade = word[start].grade();
        let mut end = start + 1;
        while end < word.len() && word[end].grade() == grade {
            end += 1;
        }
        out.push((start, end - start));
        start = end;
    }
    out
}

#[derive(Clone, Copy, Debug)]
enum Rule {
    Exchange(usize),
    KillQuartic,
    KillCube,
    Rotate(usize),
}

fn applicable_rules(word: &[GeneratorSymbol]) -> Vec<Rule> {
    let mut rules = Vec::new();
    for p in 0..word.len().saturating_sub(1) {
        if word[p].grade() == 2 && word[p + 1].grade() == 1 {
            rules.push(Rule::Exchange(p));
        }
    }
    for (start, len) in runs(word) {
        if len >= 4 {
            rules.push(Rule::KillQuartic);
        } else if len == 3 {
            let block = &word[start..start + 3];
            if block[0] == block[1] && block[1] == block[2] {
                rules.push(Rule::KillCube);
            } else {
                let mut rotations = vec![block.to_vec()];
                let mut r = block.to_vec();
                for _ in 0..2 {
                    r.rotate_left(1);
                    rotations.push(r.clone());
                }
                let min = rotations.iter().min().unwrap();
                if block.to_vec() != *min {
                    rules.push(Rule::Rotate(start));
                }
            }
        }
    }
    rules
}

fn apply(state: &State, rule: Rule) -> State {
    let (phase, word) = match state {
        State::Dead => return State::Dead,
        State::Live(p, w) => (*p, w.clone()),
    };
    match rule {
        Rule::Exchange(p) => {
            let mut w = word;
            w.swap(p, p + 1);
            State::Live(phase.times_minus_j_squared(), w)
        }
        Rule::KillQuartic | Rule::KillCube => State::Dead,
        Rule::Rotate(start) => {
            let mut w = word;
            let grade = w[start].grade();
            w[start..start + 3].rotate_left(1);
            State::Live(phase.times_j_pow(if grade == 1 { 1 } else { 2 }), w)
        }
    }
}

/// Rewrite to fixpoint, picking an applicable rule at random each step.
fn random_fixpoint(word: &GradedWord, rng: &mut ChaCha8Rng) -> State {
    let mut state = State::Live(Phase::one(), word.symbols().to_vec());
    loop {
        let live = match &state {
            State::Dead => return State::Dead,
            State::Live(_, w) => w.clone(),
        };
        let rules = applicable_rules(&live);
        if rules.is_empty() {
            return state;
        }
        let pick = rules[(rng.next_u64() % rules.len() as u64) as usize];
        state = apply(&state, pick);
    }
}

fn enumerate_words(symbols: &[GeneratorSymbol], len: usize) -> Vec<GradedWord> {
    let mut out: Vec<Vec<GeneratorSymbol>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
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
    out.into_iter().map(GradedWord::new).collect()
}

#[test]
fn random_rule_order_reproduces_the_normal_form_up_to_length_six() {
    let symbols: Vec<GeneratorSymbol> = [Family::Theta, Family::ThetaBar]
        .into_iter()
        .flat_map(|f| (1..=3).map(move |i| GeneratorSymbol::new(f, i)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0u64;
    for len in 1..=6 {
        for word in enumerate_words(&symbols, len) {
            let expected = normal_form(&word).expect("within cap, single pair family");
            let oracle = random_fixpoint(&word, &mut rng);
            match (&expected, &oracle) {
                (NormalForm::Zero, State::Dead) => {}
                (NormalForm::Term(coeff, canonical), State::Live(phase, w)) => {
                    assert_eq!(
                        canonical.symbols(),
                        &w[..],
                        "canonical word mismatch for {word}"
                    );
                    assert_eq!(*coeff, phase.to_scalar(), "phase mismatch for {word}");
                }
                _ => panic!("zero/nonzero disagreement for {word}: {expected:?} vs {oracle:?}"),
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 6 + 36 + 216 + 1296 + 7776 + 46656);
}

#[test]
fn repeated_shuffles_agree_on_short_words() {
    let symbols: Vec<GeneratorSymbol> = [Family::Theta, Family::ThetaBar]
        .into_iter()
        .flat_map(|f| (1..=2).map(move |i| GeneratorSymbol::new(f, i)))
        .collect();
    for len in 1..=4 {
        for word in enumerate_words(&symbols, len) {
            let mut outcomes = Vec::new();
            for seed in 0..5u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                outcomes.push(random_fixpoint(&word, &mut rng));
            }
            for pair in outcomes.windows(2) {
                assert_eq!(pair[0], pair[1], "order dependence for {word}");
            }
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, max_len: usize) -> AlgebraElement {
    let mut acc = AlgebraElement::zero();
    for _ in 0..2 {
        let len = (rng.next_u64() % (max_len as u64 + 1)) as usize;
        let word = GradedWord::new(
            (0..len)
                .map(|_| {
                    let family = if rng.next_u64() % 2 == 0 {
                        Family::Theta
                    } else {
                        Family::ThetaBar
                    };
                    GeneratorSymbol::new(family, (rng.next_u64() % 2 + 1) as u8)
                })
                .collect(),
        );
        let coeff = sample_exact_scalar(rng);
        if let Ok(term) = AlgebraElement::from_term(coeff, &word) {
            acc = acc.add(&term);
        }
    }
    acc
}

#[test]
fn multiplication_is_associative_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..200 {
        let x = random_element(&mut rng, 2);
        let y = random_element(&mut rng, 2);
        let z = random_element(&mut rng, 2);
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        assert_eq!(left, right, "associativity failed at trial {trial}");
    }
}

#[test]
fn conjugation_is_an_antilinear_automorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..100 {
        let x = random_element(&mut rng, 2);
        let y = random_element(&mut rng, 2);
        assert_eq!(x.conjugate().conjugate(), x, "involution at trial {trial}");
        let xy = x.multiply(&y).unwrap();
        assert_eq!(
            xy.conjugate(),
            x.conjugate().multiply(&y.conjugate()).unwrap(),
            "multiplicativity at trial {trial}"
        );
        let c = sample_exact_scalar(&mut rng);
        assert_eq!(
            x.scale(&c).conjugate(),
            x.conjugate().scale(&c.conj()),
            "antilinearity at trial {trial}"
        );
    }
}
