//! Seeded random instances for randomized verification: used by the CLI's
//! `verify` command and by the test suites.

use rand::Rng;
use rand::SeedableRng;

use crate::bipoly::BiPoly;
use crate::elimination::remainder_sequence;
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::UniPoly;

/// Deterministic generator for reproducible trials.
pub type TrialRng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> TrialRng {
    TrialRng::seed_from_u64(seed)
}

/// A fresh seed from OS entropy, for when the caller did not fix one.
pub fn entropy_seed() -> u64 {
    rand::rngs::OsRng.gen()
}

/// A random scalar; over Q a small fraction, over GF(p) a uniform residue.
pub fn scalar(rng: &mut TrialRng, spec: FieldSpec) -> FieldElement {
    match spec {
        FieldSpec::Rationals => spec.ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
        FieldSpec::PrimeField { modulus } => spec.integer(rng.gen_range(0..modulus) as i64),
    }
}

pub fn nonzero_scalar(rng: &mut TrialRng, spec: FieldSpec) -> FieldElement {
    loop {
        let c = scalar(rng, spec);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random polynomial of degree at most `max_deg` (possibly zero).
pub fn unipoly(rng: &mut TrialRng, spec: FieldSpec, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    UniPoly::new((0..=deg).map(|_| scalar(rng, spec)).collect(), spec)
}

pub fn nonzero_unipoly(rng: &mut TrialRng, spec: FieldSpec, max_deg: usize) -> UniPoly {
    loop {
        let p = unipoly(rng, spec, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random polynomial with y-degree exactly `deg_y` and coefficient degrees
/// at most `max_coeff_deg`.
pub fn bipoly_of_deg_y(
    rng: &mut TrialRng,
    spec: FieldSpec,
    deg_y: usize,
    max_coeff_deg: usize,
) -> BiPoly {
    let mut coeffs: Vec<UniPoly> = (0..deg_y)
        .map(|_| unipoly(rng, spec, max_coeff_deg))
        .collect();
    coeffs.push(nonzero_unipoly(rng, spec, max_coeff_deg));
    BiPoly::new(coeffs, spec)
}

/// A random y-primitive polynomial with y-degree in `1..=max_deg_y`.
pub fn primitive_bipoly(
    rng: &mut TrialRng,
    spec: FieldSpec,
    max_deg_y: usize,
    max_coeff_deg: usize,
) -> BiPoly {
    let deg_y = rng.gen_range(1..=max_deg_y);
    bipoly_of_deg_y(rng, spec, deg_y, max_coeff_deg)
        .y_primitive_part()
        .expect("non-zero by construction")
}

/// A coprime, y-primitive, degree-ordered pair ready for the elimination
/// engine. Resamples until the remainder sequence confirms coprimality.
pub fn coprime_primitive_pair(
    rng: &mut TrialRng,
    spec: FieldSpec,
    max_deg_y: usize,
    max_coeff_deg: usize,
) -> (BiPoly, BiPoly) {
    loop {
        let a = primitive_bipoly(rng, spec, max_deg_y, max_coeff_deg);
        let b = primitive_bipoly(rng, spec, max_deg_y, max_coeff_deg);
        let (v1, v2) = if a.deg_y() >= b.deg_y() { (a, b) } else { (b, a) };
        match remainder_sequence(&v1, &v2) {
            Ok(_) => return (v1, v2),
            Err(Error::NotCoprime { .. }) => continue,
            Err(e) => unreachable!("preconditions hold by construction: {e:?}"),
        }
    }
}

/// A pair with a planted common factor of positive y-degree, for testing the
/// `NotCoprime` path.
pub fn non_coprime_pair(
    rng: &mut TrialRng,
    spec: FieldSpec,
    max_deg_y: usize,
    max_coeff_deg: usize,
) -> (BiPoly, BiPoly) {
    let factor = primitive_bipoly(rng, spec, max_deg_y, max_coeff_deg);
    let a = primitive_bipoly(rng, spec, max_deg_y, max_coeff_deg);
    let b = primitive_bipoly(rng, spec, max_deg_y, max_coeff_deg);
    (&factor * &a, &factor * &b)
}

pub fn point(rng: &mut TrialRng, spec: FieldSpec) -> (FieldElement, FieldElement) {
    (scalar(rng, spec), scalar(rng, spec))
}
