//! Solutions and multiplicities read off a completed elimination trace:
//! per-system multiplicities, the pointwise multiplicity sum, ground-field
//! solution enumeration and the closure count.

use std::collections::BTreeMap;

use crate::bipoly::BiPoly;
use crate::elimination::{triangular_systems, EliminationTrace, TriangularSystem};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::{gcd_monic, supported_part_degree, UniPoly};

/// A common zero in the ground field with its total intersection
/// multiplicity and the per-system breakdown that sums to it.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionPoint {
    pub x: FieldElement,
    pub y: FieldElement,
    pub multiplicity: usize,
    /// (system index i, multiplicity contributed by system i); only non-zero
    /// contributions are listed.
    pub contributions: Vec<(usize, usize)>,
}

/// Everything the solver knows about one system: the triangular
/// decomposition, the ground-field solutions, and the number of solutions in
/// the algebraic closure counted with multiplicity.
#[derive(Debug, Clone)]
pub struct SolutionReport {
    pub field: FieldSpec,
    pub systems: Vec<TriangularSystem>,
    /// Lexicographically ordered by (x, y); pairwise distinct.
    pub points: Vec<SolutionPoint>,
    pub closure_count: usize,
}

/// Multiplicity of (a, b) as a solution of the triangular system
/// `{W(x, y) = 0, g(x) = 0}`: `ord_a(g) * ord_b(W(a, y))`. Zero when the
/// point does not solve the system.
pub fn triangular_multiplicity(
    w: &BiPoly,
    g: &UniPoly,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<usize, Error> {
    let ord_a = g.ord_at(a)?;
    if ord_a == 0 {
        return Ok(0);
    }
    let section = w.section_at(a)?;
    Ok(ord_a * section.ord_at(b)?)
}

/// Total multiplicity of (a, b) as a solution of the original pair: the sum
/// of the triangular multiplicities over all systems of the trace. Positive
/// exactly when (a, b) is a common zero.
pub fn point_multiplicity(trace: &EliminationTrace, a: &FieldElement, b: &FieldElement) -> usize {
    point_contributions(trace, a, b).iter().map(|&(_, m)| m).sum()
}

/// The non-zero per-system contributions behind [`point_multiplicity`].
pub fn point_contributions(
    trace: &EliminationTrace,
    a: &FieldElement,
    b: &FieldElement,
) -> Vec<(usize, usize)> {
    let mut parts = Vec::new();
    for i in 1..=trace.steps {
        let m = triangular_multiplicity(
            trace.remainder(i + 1),
            &trace.reduced_content(i),
            a,
            b,
        )
        .expect("trace remainders are y-primitive and contents non-zero");
        if m > 0 {
            parts.push((i, m));
        }
    }
    parts
}

/// Enumerates all solutions in the ground field by back-substitution through
/// every triangular system, deduplicates the union, and assigns each point
/// its total multiplicity.
pub fn solve_in_field(trace: &EliminationTrace) -> SolutionReport {
    let systems = triangular_systems(trace);
    let mut seen: BTreeMap<(FieldElement, FieldElement), ()> = BTreeMap::new();
    for system in &systems {
        if system.is_empty() {
            continue;
        }
        for (a, _) in system.univariate.roots_in_field().expect("non-zero") {
            let section = system.bivariate.section_at(&a).expect("non-zero");
            if section.is_zero() {
                continue; // unreachable for y-primitive systems
            }
            for (b, _) in section.roots_in_field().expect("non-zero") {
                seen.insert((a.clone(), b), ());
            }
        }
    }
    let points = seen
        .into_keys()
        .map(|(a, b)| {
            let contributions = point_contributions(trace, &a, &b);
            let multiplicity = contributions.iter().map(|&(_, m)| m).sum();
            debug_assert!(multiplicity > 0);
            SolutionPoint {
                x: a,
                y: b,
                multiplicity,
                contributions,
            }
        })
        .collect();
    SolutionReport {
        field: trace.field,
        systems,
        points,
        closure_count: closure_count(trace),
    }
}

/// Number of solutions in the algebraic closure counted with multiplicity,
/// computed without constructing extension fields.
///
/// Each triangular system `(W, g)` contributes, over every closure root `a`
/// of `g` weighted by `ord_a g`, the degree of the section `W(a, y)`. That
/// degree is `deg_y W` minus the number of leading y-coefficients of `W`
/// vanishing at `a`, so the total is `deg(g) * deg_y(W)` minus one
/// [`supported_part_degree`] term per leading-coefficient prefix gcd.
pub fn closure_count(trace: &EliminationTrace) -> usize {
    let mut total = 0usize;
    for i in 1..=trace.steps {
        let g = trace.reduced_content(i);
        let Some(deg_g) = g.degree() else { continue };
        if deg_g == 0 {
            continue;
        }
        let w = trace.remainder(i + 1);
        let deg_y = w.deg_y().expect("remainders are non-zero");
        let mut term = deg_g * deg_y;
        // Prefix gcds h_k of the top k y-coefficients; h_k never vanishes
        // identically because the leading coefficient is in every prefix.
        let mut prefix_gcd = UniPoly::zero(trace.field);
        for k in 1..=deg_y {
            let c = w.coeff(deg_y + 1 - k);
            if !c.is_zero() {
                prefix_gcd = gcd_monic(&prefix_gcd, &c).expect("prefix contains the leading coefficient");
            }
            term -= supported_part_degree(&g, &prefix_gcd).expect("g is non-constant");
        }
        total += term;
    }
    total
}
