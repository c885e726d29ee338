//! Brute-force certification that an enumerated `S(G)` is an inverse semigroup.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::sg::{Sg, SgElement};

/// Above this many pairs or triples a check switches from exhaustive to sampled.
pub const EXHAUSTIVE_LIMIT: u128 = 100_000_000;
pub const SAMPLE_COUNT: u64 = 1_000_000;
pub const SAMPLE_SEED: u64 = 0x05ee_d0f5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub mode: CheckMode,
    pub checked: u64,
    /// First violating tuple in scan order, if any.
    pub counterexample: Option<Vec<SgElement>>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub elements: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every inverse-semigroup check over `elements`, which should be all of `S(G)`.
pub fn verify_inverse_semigroup(sg: &Sg<'_>, elements: &[SgElement]) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let n = elements.len();
    let members: HashSet<SgElement> = elements.iter().copied().collect();

    let closure = scan(n, 2, &mut rng, "closure", |ix| {
        let (a, b) = (&elements[ix[0]], &elements[ix[1]]);
        members.contains(&sg.multiply(a, b)) && members.contains(&sg.star(a))
    }, elements);

    let associativity = scan(n, 3, &mut rng, "associativity", |ix| {
        let (a, b, c) = (&elements[ix[0]], &elements[ix[1]], &elements[ix[2]]);
        sg.multiply(&sg.multiply(a, b), c) == sg.multiply(a, &sg.multiply(b, c))
    }, elements);

    let regularity = scan(n, 1, &mut rng, "regularity", |ix| {
        let a = &elements[ix[0]];
        let s = sg.star(a);
        sg.multiply(&sg.multiply(a, &s), a) == *a && sg.multiply(&sg.multiply(&s, a), &s) == s
    }, elements);

    let unique_inverses = scan(n, 2, &mut rng, "unique_inverses", |ix| {
        let (a, b) = (&elements[ix[0]], &elements[ix[1]]);
        let is_inverse = sg.multiply(&sg.multiply(a, b), a) == *a
            && sg.multiply(&sg.multiply(b, a), b) == *b;
        !is_inverse || *b == sg.star(a)
    }, elements);

    let idempotents: Vec<SgElement> =
        elements.iter().filter(|a| sg.multiply(a, a) == **a).copied().collect();
    let idempotents_commute = scan(idempotents.len(), 2, &mut rng, "idempotents_commute", |ix| {
        let (a, b) = (&idempotents[ix[0]], &idempotents[ix[1]]);
        sg.multiply(a, b) == sg.multiply(b, a)
    }, &idempotents);

    VerificationReport {
        elements: n,
        checks: vec![closure, associativity, regularity, unique_inverses, idempotents_commute],
    }
}

fn scan<F>(
    n: usize,
    arity: u32,
    rng: &mut ChaCha8Rng,
    name: &'static str,
    mut holds: F,
    pool: &[SgElement],
) -> CheckOutcome
where
    F: FnMut(&[usize]) -> bool,
{
    let total = (n as u128).pow(arity);
    let witness = |ix: &[usize]| Some(ix.iter().map(|&i| pool[i]).collect());
    let mut ix = vec![0usize; arity as usize];

    if total <= EXHAUSTIVE_LIMIT {
        let mut checked = 0u64;
        for k in 0..total as u64 {
            let mut rest = k;
            for slot in ix.iter_mut().rev() {
                *slot = (rest % n as u64) as usize;
                rest /= n as u64;
            }
            checked += 1;
            if !holds(&ix) {
                return CheckOutcome { name, mode: CheckMode::Exhaustive, checked, counterexample: witness(&ix) };
            }
        }
        return CheckOutcome { name, mode: CheckMode::Exhaustive, checked, counterexample: None };
    }

    let mode = CheckMode::Sampled { samples: SAMPLE_COUNT, seed: SAMPLE_SEED };
    for k in 0..SAMPLE_COUNT {
        for slot in ix.iter_mut() {
            *slot = rng.gen_range(0..n);
        }
        if !holds(&ix) {
            return CheckOutcome { name, mode, checked: k + 1, counterexample: witness(&ix) };
        }
    }
    CheckOutcome { name, mode, checked: SAMPLE_COUNT, counterexample: None }
}
