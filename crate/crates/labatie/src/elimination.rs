//! The elimination engine: a Euclidean remainder sequence on y-primitive
//! bivariate polynomials, the gcd-reduction and cofactor sequences built on
//! top of it, the resulting triangular systems, and an exact verifier for
//! every identity the construction is supposed to satisfy.
//!
//! One elimination run replaces `{V_1 = 0, V_2 = 0}` by the union of the
//! triangular systems `{V_{i+1} = 0, (v_i/d_i)(x) = 0}` for `i = 1..n`
//! (Labatie's theorem), in a way that also preserves intersection
//! multiplicities pointwise (Bonnet's theorem, see the `solver` module).

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::{gcd_monic, UniPoly};

/// Inputs brought into the engine's normal form: y-primitive, ordered by
/// decreasing y-degree.
#[derive(Debug, Clone)]
pub struct NormalizedPair {
    pub first: BiPoly,
    pub second: BiPoly,
    /// Whether the inputs were exchanged to order the y-degrees.
    pub swapped: bool,
    /// The y-contents removed from the inputs, in input order.
    pub stripped_contents: (UniPoly, UniPoly),
}

/// Strips y-contents and orders by y-degree so `deg_y second <= deg_y first`.
pub fn normalize_pair(a: &BiPoly, b: &BiPoly) -> Result<NormalizedPair, Error> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ca = a.y_content()?;
    let cb = b.y_content()?;
    let pa = a.y_primitive_part()?;
    let pb = b.y_primitive_part()?;
    if pa.deg_y() == Some(0) || pb.deg_y() == Some(0) {
        return Err(Error::DegyZero);
    }
    let swapped = pa.deg_y() < pb.deg_y();
    let (first, second) = if swapped { (pb, pa) } else { (pa, pb) };
    Ok(NormalizedPair {
        first,
        second,
        swapped,
        stripped_contents: (ca, cb),
    })
}

/// The complete record of one elimination run.
///
/// Indexing follows the classical sequences: `remainders` holds
/// `V_1 .. V_{n+2}` (with `V_{n+2} = 1`), and the step vectors hold the
/// entries for steps `1 .. n`. The 1-based accessor methods below keep
/// formulas readable.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationTrace {
    pub field: FieldSpec,
    /// V_1 .. V_{n+2}: the y-primitive remainder chain, ending in 1.
    pub remainders: Vec<BiPoly>,
    /// Q_1 .. Q_n: pseudo-division quotients.
    pub quotients: Vec<BiPoly>,
    /// u_1 .. u_n: pseudo-division premultipliers in K[x].
    pub multipliers: Vec<UniPoly>,
    /// v_1 .. v_n: extracted y-contents of the raw remainders. The final
    /// entry is the whole last remainder (y-degree 0), kept unnormalized so
    /// the division identity stays literally true.
    pub contents: Vec<UniPoly>,
    /// d_1 .. d_n: monic gcds cancelling multipliers against contents.
    pub step_gcds: Vec<UniPoly>,
    /// w_1 .. w_n: residual multipliers, w_i = (u_1..u_i)/(d_1..d_i).
    pub reduced_multipliers: Vec<UniPoly>,
    /// G_0 .. G_n: cofactors expressing w_{i-1} V_1 in consecutive remainders.
    pub cofactors_g: Vec<BiPoly>,
    /// H_0 .. H_n: the same for w_{i-1} V_2.
    pub cofactors_h: Vec<BiPoly>,
    /// n: the number of division steps performed.
    pub steps: usize,
}

impl EliminationTrace {
    /// Runs all three stages: remainder, reduction and cofactor sequences.
    pub fn compute(v1: &BiPoly, v2: &BiPoly) -> Result<Self, Error> {
        let mut trace = remainder_sequence(v1, v2)?;
        reduction_sequences(&mut trace);
        cofactor_sequences(&mut trace)?;
        Ok(trace)
    }

    /// V_i for i in 1..=n+2.
    pub fn remainder(&self, i: usize) -> &BiPoly {
        &self.remainders[i - 1]
    }

    /// Q_i for i in 1..=n.
    pub fn quotient(&self, i: usize) -> &BiPoly {
        &self.quotients[i - 1]
    }

    /// u_i for i in 1..=n.
    pub fn multiplier(&self, i: usize) -> &UniPoly {
        &self.multipliers[i - 1]
    }

    /// v_i for i in 1..=n.
    pub fn content(&self, i: usize) -> &UniPoly {
        &self.contents[i - 1]
    }

    /// d_i for i in 1..=n.
    pub fn step_gcd(&self, i: usize) -> &UniPoly {
        &self.step_gcds[i - 1]
    }

    /// w_i for i in 1..=n.
    pub fn reduced_multiplier(&self, i: usize) -> &UniPoly {
        &self.reduced_multipliers[i - 1]
    }

    /// v_i / d_i for i in 1..=n: the univariate equation of the i-th
    /// triangular system. The division is exact by construction.
    pub fn reduced_content(&self, i: usize) -> UniPoly {
        self.content(i)
            .exact_div(self.step_gcd(i))
            .expect("step gcd divides its content")
    }

    /// G_i for i in 0..=n.
    pub fn cofactor_g(&self, i: usize) -> &BiPoly {
        &self.cofactors_g[i]
    }

    /// H_i for i in 0..=n.
    pub fn cofactor_h(&self, i: usize) -> &BiPoly {
        &self.cofactors_h[i]
    }
}

/// Iterated pseudo-division of `(V_1, V_2)` until a remainder of y-degree 0.
///
/// Each raw remainder of positive y-degree is split into its y-content `v_i`
/// and primitive part `V_{i+2}`; the final remainder (y-degree 0) becomes
/// `v_n` unnormalized, and `V_{n+2} = 1`. A zero remainder anywhere means the
/// inputs share a factor of positive y-degree: `NotCoprime`, carrying the
/// unit-normalized common factor as a diagnostic.
pub fn remainder_sequence(v1: &BiPoly, v2: &BiPoly) -> Result<EliminationTrace, Error> {
    let dw = v1.deg_y().unwrap_or(0);
    let dv = v2.deg_y().unwrap_or(0);
    if dv == 0 || dv > dw {
        return Err(Error::DegreeOrder {
            dividend: dw,
            divisor: dv,
        });
    }
    debug_assert!(v1.is_y_primitive() && v2.is_y_primitive());
    let spec = v1.spec();
    let mut remainders = vec![v1.clone(), v2.clone()];
    let mut quotients = Vec::new();
    let mut multipliers = Vec::new();
    let mut contents = Vec::new();
    loop {
        let i = remainders.len() - 1;
        let (u, q, r) = remainders[i - 1].pseudo_divide(&remainders[i])?;
        if r.is_zero() {
            return Err(Error::NotCoprime {
                gcd: remainders[i].unit_normalized(),
            });
        }
        quotients.push(q);
        multipliers.push(u);
        if r.deg_y() > Some(0) {
            contents.push(r.y_content()?);
            remainders.push(r.y_primitive_part()?);
        } else {
            contents.push(r.coeff(0));
            remainders.push(BiPoly::one(spec));
            break;
        }
    }
    let steps = contents.len();
    Ok(EliminationTrace {
        field: spec,
        remainders,
        quotients,
        multipliers,
        contents,
        step_gcds: Vec::new(),
        reduced_multipliers: Vec::new(),
        cofactors_g: Vec::new(),
        cofactors_h: Vec::new(),
        steps,
    })
}

/// Fills d_i and w_i: `d_1 = gcd(u_1, v_1)`, `w_1 = u_1/d_1`, then
/// `d_i = gcd(w_{i-1} u_i, v_i)`, `w_i = w_{i-1} u_i / d_i`.
pub fn reduction_sequences(trace: &mut EliminationTrace) {
    assert!(trace.steps > 0, "remainder sequence not computed");
    let mut step_gcds = Vec::with_capacity(trace.steps);
    let mut reduced = Vec::with_capacity(trace.steps);
    for i in 1..=trace.steps {
        let carried = if i == 1 {
            trace.multiplier(1).clone()
        } else {
            &reduced[i - 2] * trace.multiplier(i)
        };
        let d = gcd_monic(&carried, trace.content(i)).expect("non-zero operands");
        let w = carried.exact_div(&d).expect("gcd divides");
        step_gcds.push(d);
        reduced.push(w);
    }
    trace.step_gcds = step_gcds;
    trace.reduced_multipliers = reduced;
}

/// Fills G_0..G_n and H_0..H_n by the recurrences
/// `G_0 = 1`, `G_1 = Q_1/d_1`,
/// `G_i = (G_{i-1} Q_i + G_{i-2} u_i (v_{i-1}/d_{i-1})) / d_i`
/// and the same with `H_0 = 0`, `H_1 = u_1/d_1`. Every division is exact
/// because each d divides the combination it is applied to (the y-primitivity
/// of the remainder chain forces the divisibility); `InexactDivision` here
/// would signal an internal-logic violation.
pub fn cofactor_sequences(trace: &mut EliminationTrace) -> Result<(), Error> {
    assert!(
        !trace.step_gcds.is_empty(),
        "reduction sequences not computed"
    );
    let n = trace.steps;
    let mut g = vec![BiPoly::one(trace.field)];
    let mut h = vec![BiPoly::zero(trace.field)];
    if n >= 1 {
        g.push(trace.quotient(1).exact_div_unipoly(trace.step_gcd(1))?);
        h.push(BiPoly::from_unipoly(
            trace.multiplier(1).exact_div(trace.step_gcd(1))?,
        ));
    }
    for i in 2..=n {
        let cross = trace.multiplier(i) * &trace.reduced_content(i - 1);
        let g_next = &(&g[i - 1] * trace.quotient(i)) + &g[i - 2].mul_unipoly(&cross);
        let h_next = &(&h[i - 1] * trace.quotient(i)) + &h[i - 2].mul_unipoly(&cross);
        g.push(g_next.exact_div_unipoly(trace.step_gcd(i))?);
        h.push(h_next.exact_div_unipoly(trace.step_gcd(i))?);
    }
    trace.cofactors_g = g;
    trace.cofactors_h = h;
    Ok(())
}

/// One triangular system `{bivariate(x, y) = 0, univariate(x) = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularSystem {
    /// 1-based index i of the originating step: bivariate = V_{i+1}.
    pub index: usize,
    /// V_{i+1}, y-primitive.
    pub bivariate: BiPoly,
    /// v_i / d_i.
    pub univariate: UniPoly,
}

impl TriangularSystem {
    /// A system whose univariate part is a non-zero constant has an empty
    /// zero set.
    pub fn is_empty(&self) -> bool {
        self.univariate.is_constant()
    }
}

/// The systems `(V_{i+1}, v_i/d_i)` for i = 1..n, in step order. Systems with
/// constant univariate part are retained (their zero set is empty).
pub fn triangular_systems(trace: &EliminationTrace) -> Vec<TriangularSystem> {
    assert!(
        !trace.step_gcds.is_empty(),
        "reduction sequences not computed"
    );
    (1..=trace.steps)
        .map(|i| TriangularSystem {
            index: i,
            bivariate: trace.remainder(i + 1).clone(),
            univariate: trace.reduced_content(i),
        })
        .collect()
}

/// Outcome of one identity check.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    /// E.g. "(2)_3", "D_2", "w_1 closed form", "coprime_2".
    pub label: String,
    pub index: usize,
    pub passed: bool,
    /// The non-zero difference polynomial when the check failed.
    pub witness: Option<BiPoly>,
}

/// Per-identity pass/fail record for a whole trace.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn sign(spec: FieldSpec, i: usize) -> FieldElement {
    spec.integer(if i % 2 == 0 { 1 } else { -1 })
}

/// Checks every identity of the construction by exact polynomial arithmetic:
///
/// * the division identities `u_i V_i = Q_i V_{i+1} + v_i V_{i+2}`,
/// * the cofactor identities
///   `w_{i-1} V_1 = G_{i-1} V_i + G_{i-2} V_{i+1} (v_{i-1}/d_{i-1})` and the
///   H-version with V_2, for i = 2..n+1,
/// * the eliminant identities
///   `(-1)^i (v_1..v_{i-1})/(d_1..d_{i-1}) V_{i+1} = H_{i-1} V_1 - G_{i-1} V_2`,
/// * the determinant closed form
///   `G_i H_{i-1} - G_{i-1} H_i = (-1)^i w_i (v_1..v_{i-1})/(d_1..d_{i-1})`,
/// * the product closed form `w_i (d_1..d_i) = u_1..u_i`,
/// * coprimality `gcd(w_i, v_i/d_i) = 1`.
///
/// Failures are report entries carrying the difference polynomial, never
/// panics, so the verifier can also be pointed at deliberately corrupted
/// traces.
pub fn verify_identities(trace: &EliminationTrace) -> VerificationReport {
    assert!(
        !trace.cofactors_g.is_empty(),
        "cofactor sequences not computed"
    );
    let n = trace.steps;
    let spec = trace.field;
    let mut checks = Vec::new();
    let mut push = |label: String, index: usize, difference: BiPoly| {
        let passed = difference.is_zero();
        checks.push(IdentityCheck {
            label,
            index,
            passed,
            witness: if passed { None } else { Some(difference) },
        });
    };

    for i in 1..=n {
        let lhs = trace.remainder(i).mul_unipoly(trace.multiplier(i));
        let rhs = &(trace.quotient(i) * trace.remainder(i + 1))
            + &trace.remainder(i + 2).mul_unipoly(trace.content(i));
        push(format!("(1)_{}", i), i, &lhs - &rhs);
    }

    for i in 2..=n + 1 {
        let reduced_prev = trace.reduced_content(i - 1);
        let lhs_g = trace.remainder(1).mul_unipoly(trace.reduced_multiplier(i - 1));
        let rhs_g = &(trace.cofactor_g(i - 1) * trace.remainder(i))
            + &(trace.cofactor_g(i - 2) * trace.remainder(i + 1)).mul_unipoly(&reduced_prev);
        push(format!("(2)_{}", i), i, &lhs_g - &rhs_g);

        let lhs_h = trace.remainder(2).mul_unipoly(trace.reduced_multiplier(i - 1));
        let rhs_h = &(trace.cofactor_h(i - 1) * trace.remainder(i))
            + &(trace.cofactor_h(i - 2) * trace.remainder(i + 1)).mul_unipoly(&reduced_prev);
        push(format!("(3)_{}", i), i, &lhs_h - &rhs_h);
    }

    // Running product (v_1/d_1) .. (v_{i-1}/d_{i-1}).
    let mut eliminant_product = UniPoly::one(spec);
    for i in 2..=n + 1 {
        eliminant_product = &eliminant_product * &trace.reduced_content(i - 1);
        let lhs = trace
            .remainder(i + 1)
            .mul_unipoly(&eliminant_product)
            .scale(&sign(spec, i));
        let rhs = &(trace.cofactor_h(i - 1) * trace.remainder(1))
            - &(trace.cofactor_g(i - 1) * trace.remainder(2));
        push(format!("(4)_{}", i), i, &lhs - &rhs);
    }

    let mut eliminant_product = UniPoly::one(spec);
    for i in 1..=n {
        let det = &(trace.cofactor_g(i) * trace.cofactor_h(i - 1))
            - &(trace.cofactor_g(i - 1) * trace.cofactor_h(i));
        let closed = BiPoly::from_unipoly(
            (trace.reduced_multiplier(i) * &eliminant_product).scale(&sign(spec, i)),
        );
        push(format!("D_{}", i), i, &det - &closed);
        eliminant_product = &eliminant_product * &trace.reduced_content(i);
    }

    let mut u_product = UniPoly::one(spec);
    let mut d_product = UniPoly::one(spec);
    for i in 1..=n {
        u_product = &u_product * trace.multiplier(i);
        d_product = &d_product * trace.step_gcd(i);
        let difference = &(trace.reduced_multiplier(i) * &d_product) - &u_product;
        push(
            format!("w_{} closed form", i),
            i,
            BiPoly::from_unipoly(difference),
        );
    }

    for i in 1..=n {
        let g = gcd_monic(trace.reduced_multiplier(i), &trace.reduced_content(i))
            .expect("non-zero operands");
        let difference = &g - &UniPoly::one(spec);
        push(
            format!("coprime_{}", i),
            i,
            BiPoly::from_unipoly(difference),
        );
    }

    VerificationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly_str;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn p(text: &str) -> BiPoly {
        parse_poly_str(text, q()).unwrap()
    }

    fn up(text: &str) -> UniPoly {
        let b = p(text);
        assert!(b.deg_y().unwrap_or(0) == 0);
        b.coeff(0)
    }

    fn worked_example_trace() -> EliminationTrace {
        EliminationTrace::compute(&p("y^5 - x^3"), &p("y^3 - x^4")).unwrap()
    }

    #[test]
    fn normalize_pair_examples() {
        let pair = normalize_pair(&p("y^5 - x^3"), &p("y^3 - x^4")).unwrap();
        assert_eq!(pair.first, p("y^5 - x^3"));
        assert_eq!(pair.second, p("y^3 - x^4"));
        assert!(!pair.swapped);
        assert!(pair.stripped_contents.0.is_one());
        assert!(pair.stripped_contents.1.is_one());

        let pair = normalize_pair(&p("y^3 - x^4"), &p("y^5 - x^3")).unwrap();
        assert!(pair.swapped);
        assert_eq!(pair.first, p("y^5 - x^3"));

        let pair = normalize_pair(&p("x^2*y + x^2"), &p("y^2")).unwrap();
        assert!(pair.swapped);
        assert_eq!(pair.first, p("y^2"));
        assert_eq!(pair.second, p("y + 1"));
        assert_eq!(pair.stripped_contents.0, up("x^2"));
        assert!(pair.stripped_contents.1.is_one());

        assert!(matches!(
            normalize_pair(&p("x^2 + 1"), &p("y")),
            Err(Error::DegyZero)
        ));
        assert!(matches!(
            normalize_pair(&BiPoly::zero(q()), &p("y")),
            Err(Error::ZeroInput)
        ));
    }

    #[test]
    fn worked_example_remainder_sequence() {
        let trace = remainder_sequence(&p("y^5 - x^3"), &p("y^3 - x^4")).unwrap();
        assert_eq!(trace.steps, 3);
        assert_eq!(
            trace.remainders,
            vec![
                p("y^5 - x^3"),
                p("y^3 - x^4"),
                p("x*y^2 - 1"),
                p("y - x^5"),
                p("1"),
            ]
        );
        assert_eq!(trace.contents, vec![up("x^3"), up("x"), up("x^11 - 1")]);
        assert_eq!(trace.multipliers, vec![up("1"), up("x^2"), up("1")]);
        assert_eq!(trace.quotients, vec![p("y^2"), p("x*y"), p("x*y + x^6")]);
    }

    #[test]
    fn worked_example_reduction_sequences() {
        let mut trace = remainder_sequence(&p("y^5 - x^3"), &p("y^3 - x^4")).unwrap();
        reduction_sequences(&mut trace);
        assert_eq!(trace.step_gcds, vec![up("1"), up("x"), up("1")]);
        assert_eq!(trace.reduced_multipliers, vec![up("1"), up("x"), up("x")]);
        // v/d = (x^3, 1, x^11 - 1)
        assert_eq!(trace.reduced_content(1), up("x^3"));
        assert_eq!(trace.reduced_content(2), up("1"));
        assert_eq!(trace.reduced_content(3), up("x^11 - 1"));
        // Closed form: w_3 (d_1 d_2 d_3) = u_1 u_2 u_3 = x^2.
        let lhs = &(&trace.reduced_multipliers[2] * &trace.step_gcds[0])
            * &(&trace.step_gcds[1] * &trace.step_gcds[2]);
        assert_eq!(lhs, up("x^2"));
    }

    #[test]
    fn worked_example_cofactors() {
        let trace = worked_example_trace();
        assert!(trace.cofactor_g(0).is_one());
        assert!(trace.cofactor_h(0).is_zero());
        assert_eq!(trace.cofactor_g(1), &p("y^2"));
        assert!(trace.cofactor_h(1).is_one());
    }

    #[test]
    fn one_step_trace() {
        let trace = EliminationTrace::compute(&p("y^2 - x"), &p("y")).unwrap();
        assert_eq!(trace.steps, 1);
        assert_eq!(trace.contents, vec![up("-x")]);
        assert!(trace.remainder(3).is_one());
        assert!(trace.step_gcd(1).is_one());
        assert!(trace.reduced_multiplier(1).is_one());
        assert_eq!(trace.reduced_content(1), up("-x"));
        assert_eq!(trace.cofactors_g, vec![p("1"), p("y")]);
        assert_eq!(trace.cofactors_h, vec![p("0"), p("1")]);

        let systems = triangular_systems(&trace);
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].bivariate, p("y"));
        assert_eq!(systems[0].univariate, up("-x"));
        assert!(!systems[0].is_empty());
    }

    #[test]
    fn non_coprime_inputs_are_detected() {
        let err = remainder_sequence(&p("y^2 - 1"), &p("y - 1")).unwrap_err();
        match err {
            Error::NotCoprime { gcd } => assert_eq!(gcd, p("y - 1")),
            other => panic!("expected NotCoprime, got {other:?}"),
        }
    }

    #[test]
    fn worked_example_triangular_systems() {
        let trace = worked_example_trace();
        let systems = triangular_systems(&trace);
        assert_eq!(systems.len(), 3);
        assert_eq!(systems[0].bivariate, p("y^3 - x^4"));
        assert_eq!(systems[0].univariate, up("x^3"));
        assert_eq!(systems[1].bivariate, p("x*y^2 - 1"));
        assert_eq!(systems[1].univariate, up("1"));
        assert!(systems[1].is_empty());
        assert_eq!(systems[2].bivariate, p("y - x^5"));
        assert_eq!(systems[2].univariate, up("x^11 - 1"));
        assert!(!systems[2].is_empty());
    }

    #[test]
    fn identities_hold_on_the_worked_example() {
        let trace = worked_example_trace();
        let report = verify_identities(&trace);
        assert!(
            report.all_passed(),
            "failures: {:?}",
            report.failures().map(|c| &c.label).collect::<Vec<_>>()
        );
    }

    #[test]
    fn corrupting_a_cofactor_is_reported_with_a_witness() {
        let mut trace = worked_example_trace();
        trace.cofactors_g[1] = &trace.cofactors_g[1] + &p("x");
        let report = verify_identities(&trace);
        let failed = report
            .checks
            .iter()
            .find(|c| c.label == "(2)_2")
            .expect("check present");
        assert!(!failed.passed);
        assert!(!failed.witness.as_ref().unwrap().is_zero());
    }
}
