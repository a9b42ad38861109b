//! Seeded randomized trials: the elimination identities, the solution-set and
//! multiplicity differentials against the oracle, and the checks that
//! validate the oracle itself before it judges anything.

use labatie::bipoly::BiPoly;
use labatie::elimination::{remainder_sequence, triangular_systems, verify_identities, EliminationTrace};
use labatie::error::Error;
use labatie::field::FieldSpec;
use labatie::oracle::{brute_force_zeros, local_dimension, oracle_multiplicity, LocalAlgebraInstance};
use labatie::sample;
use labatie::solver::{closure_count, point_multiplicity, solve_in_field, triangular_multiplicity};
use labatie::unipoly::UniPoly;

const PRIMES: [u64; 4] = [5, 7, 11, 13];

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime_field(p).unwrap()
}

#[test]
fn identities_hold_on_random_pairs() {
    let mut rng = sample::rng(0x1de_517);
    for t in 0..24 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 5, 3);
        let trace = EliminationTrace::compute(&v1, &v2).unwrap();
        let report = verify_identities(&trace);
        assert!(
            report.all_passed(),
            "failed on GF pair ({v1}, {v2}): {:?}",
            report.failures().map(|c| &c.label).collect::<Vec<_>>()
        );
    }
    for _ in 0..6 {
        let spec = FieldSpec::rationals();
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 3, 2);
        let trace = EliminationTrace::compute(&v1, &v2).unwrap();
        let report = verify_identities(&trace);
        assert!(report.all_passed(), "failed on Q pair ({v1}, {v2})");
    }
}

#[test]
fn solution_sets_match_brute_force() {
    let mut rng = sample::rng(0x7e0_4e1);
    for t in 0..24 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 4, 3);
        let trace = EliminationTrace::compute(&v1, &v2).unwrap();
        let report = solve_in_field(&trace);
        let found: Vec<_> = report
            .points
            .iter()
            .map(|p| (p.x.clone(), p.y.clone()))
            .collect();
        let expected = brute_force_zeros(&v1, &v2).unwrap();
        assert_eq!(found, expected, "pair ({v1}, {v2})");
    }
}

#[test]
fn multiplicities_match_the_oracle() {
    let mut rng = sample::rng(0xb0_44e7);
    for t in 0..10 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 3, 2);
        let trace = EliminationTrace::compute(&v1, &v2).unwrap();
        for (a, b) in brute_force_zeros(&v1, &v2).unwrap() {
            let engine = point_multiplicity(&trace, &a, &b);
            let truth = oracle_multiplicity(&v1, &v2, &a, &b).unwrap();
            assert_eq!(engine, truth, "pair ({v1}, {v2}) at ({a}, {b})");
        }
    }
}

// Positive multiplicity exactly at common zeros.
#[test]
fn multiplicity_positive_iff_common_zero() {
    let mut rng = sample::rng(0x9051);
    for t in 0..8 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 3, 2);
        let trace = EliminationTrace::compute(&v1, &v2).unwrap();
        let zeros = brute_force_zeros(&v1, &v2).unwrap();
        for a in spec.elements().unwrap() {
            for b in spec.elements().unwrap() {
                let positive = point_multiplicity(&trace, &a, &b) > 0;
                assert_eq!(positive, zeros.contains(&(a.clone(), b)));
            }
        }
    }
}

#[test]
fn closure_count_is_swap_invariant_and_bounds_the_field_count() {
    let mut rng = sample::rng(0xc105);
    for t in 0..16 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 4, 3);
        let forward = EliminationTrace::compute(&v1, &v2).unwrap();
        let total = closure_count(&forward);
        if v2.deg_y() == v1.deg_y() {
            let backward = EliminationTrace::compute(&v2, &v1).unwrap();
            assert_eq!(total, closure_count(&backward), "pair ({v1}, {v2})");
        }
        let in_field: usize = solve_in_field(&forward)
            .points
            .iter()
            .map(|p| p.multiplicity)
            .sum();
        assert!(in_field <= total, "pair ({v1}, {v2})");
    }
}

// Scaling an input by a unit changes nothing the theorems speak about.
#[test]
fn unit_rescaling_preserves_systems_solutions_and_counts() {
    let mut rng = sample::rng(0x5ca1e);
    for t in 0..12 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 4, 3);
        let c = sample::nonzero_scalar(&mut rng, spec);
        let base = EliminationTrace::compute(&v1, &v2).unwrap();
        let scaled = EliminationTrace::compute(&v1.scale(&c), &v2).unwrap();

        let normalize = |trace: &EliminationTrace| -> Vec<(BiPoly, UniPoly)> {
            triangular_systems(trace)
                .into_iter()
                .map(|s| (s.bivariate.unit_normalized(), s.univariate.monic()))
                .collect()
        };
        assert_eq!(normalize(&base), normalize(&scaled), "pair ({v1}, {v2})");

        let points = |trace: &EliminationTrace| {
            solve_in_field(trace)
                .points
                .iter()
                .map(|p| (p.x.clone(), p.y.clone(), p.multiplicity))
                .collect::<Vec<_>>()
        };
        assert_eq!(points(&base), points(&scaled));
        assert_eq!(closure_count(&base), closure_count(&scaled));
    }
}

// NotCoprime fires exactly on pairs with a common factor of positive
// y-degree.
#[test]
fn not_coprime_exactly_on_planted_factors() {
    let mut rng = sample::rng(0x9cd);
    for t in 0..16 {
        let spec = if t % 2 == 0 {
            gf(PRIMES[t % PRIMES.len()])
        } else {
            FieldSpec::rationals()
        };
        let (a, b) = sample::non_coprime_pair(&mut rng, spec, 2, 2);
        let pair = labatie::normalize_pair(&a, &b).unwrap();
        match remainder_sequence(&pair.first, &pair.second) {
            Err(Error::NotCoprime { gcd }) => {
                assert!(gcd.deg_y().unwrap_or(0) >= 1);
            }
            other => panic!("expected NotCoprime, got {other:?}"),
        }

        let (v1, v2) = sample::coprime_primitive_pair(&mut rng, spec, 3, 2);
        assert!(remainder_sequence(&v1, &v2).is_ok());
    }
}

// Property-5 agreement on random triangular instances: the oracle equals
// ord_a(g) * ord_b(W(a, y)).
#[test]
fn oracle_agrees_with_the_product_formula_on_triangular_systems() {
    let mut rng = sample::rng(0x0c1e);
    for t in 0..40 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let w = sample::primitive_bipoly(&mut rng, spec, 3, 2);
        let (a, b) = sample::point(&mut rng, spec);
        // Half the trials plant a as a root of g so multiplicities are hit.
        let mut g = sample::nonzero_unipoly(&mut rng, spec, 2);
        if t % 2 == 0 {
            g = &g * &UniPoly::linear_root(&a).pow(1 + (t as u32 % 2));
        }
        let formula =
            triangular_multiplicity(&w, &g, &a, &b).unwrap();
        let truth = oracle_multiplicity(&w, &BiPoly::from_unipoly(g.clone()), &a, &b).unwrap();
        assert_eq!(formula, truth, "W = {w}, g = {g}, point ({a}, {b})");
    }
}

// Additivity i_P(V, W W') = i_P(V, W) + i_P(V, W') validates the oracle
// itself, and the ideal is symmetric in its two generators.
#[test]
fn oracle_is_additive_and_symmetric() {
    let mut rng = sample::rng(0xadd);
    let mut checked = 0;
    while checked < 10 {
        let spec = gf(PRIMES[checked % PRIMES.len()]);
        let v = sample::primitive_bipoly(&mut rng, spec, 2, 1);
        let w1 = sample::primitive_bipoly(&mut rng, spec, 2, 1);
        let w2 = sample::primitive_bipoly(&mut rng, spec, 2, 1);
        let (a, b) = sample::point(&mut rng, spec);
        let product = &w1 * &w2;
        let Ok(m1) = oracle_multiplicity(&v, &w1, &a, &b) else { continue };
        let Ok(m2) = oracle_multiplicity(&v, &w2, &a, &b) else { continue };
        let Ok(m12) = oracle_multiplicity(&v, &product, &a, &b) else { continue };
        assert_eq!(m12, m1 + m2, "V = {v}, W = {w1}, W' = {w2} at ({a}, {b})");
        assert_eq!(oracle_multiplicity(&w1, &v, &a, &b), Ok(m1));
        checked += 1;
    }
}

// Generators with multiplier monomials of total degree < N are enough for
// the truncated algebra: adding higher multipliers never changes the
// dimension. Recomputed here with an independent padded construction.
#[test]
fn truncated_generators_are_sufficient() {
    let mut rng = sample::rng(0x9e4);
    for t in 0..8 {
        let spec = gf(PRIMES[t % PRIMES.len()]);
        let v = sample::primitive_bipoly(&mut rng, spec, 3, 2);
        let w = sample::primitive_bipoly(&mut rng, spec, 3, 2);
        for n in 1..=4 {
            let inst = LocalAlgebraInstance::at_point(&v, &w, &spec.zero(), &spec.zero(), n);
            assert_eq!(local_dimension(&inst), padded_dimension(&v, &w, n, 3));
        }
    }
}

/// Test-local recomputation of the truncated-algebra dimension that also
/// throws in multiplier monomials of total degree up to N + pad - 1.
fn padded_dimension(v: &BiPoly, w: &BiPoly, n: usize, pad: usize) -> usize {
    let spec = v.spec();
    let monomials: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n - i).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<labatie::FieldElement>> = Vec::new();
    for generator in [v, w] {
        for i in 0..n + pad {
            for j in 0..n + pad - i {
                let multiple = &BiPoly::monomial(spec, i, j) * generator;
                let row: Vec<labatie::FieldElement> = monomials
                    .iter()
                    .map(|&(x_pow, y_pow)| multiple.coeff(y_pow).coeff(x_pow))
                    .collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    // Plain Gaussian elimination, written out again on purpose.
    let mut rank = 0;
    for col in 0..monomials.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&rows[rank][col]);
            for c in col..monomials.len() {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    monomials.len() - rank
}
