//! Independent ground truth for the solver: exhaustive common-zero
//! enumeration over prime fields, and intersection multiplicity as the
//! dimension of a truncated local algebra, computed by exact linear algebra.
//! Nothing in this module goes through the elimination pipeline's formulas,
//! so it can judge them.

use crate::bipoly::BiPoly;
use crate::elimination::remainder_sequence;
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::gcd_monic;

/// Truncation orders are capped here; the dimension of a finite local
/// algebra at desk scale stabilizes far below this.
pub const TRUNCATION_CAP: usize = 64;

/// A pair of polynomials shifted so the query point sits at the origin,
/// together with a truncation order N >= 1.
#[derive(Debug, Clone)]
pub struct LocalAlgebraInstance {
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    pub truncation: usize,
    /// The original query point, for reporting.
    pub shift: (FieldElement, FieldElement),
}

impl LocalAlgebraInstance {
    /// Shifts (a, b) to the origin and fixes the truncation order.
    pub fn at_point(
        v: &BiPoly,
        w: &BiPoly,
        a: &FieldElement,
        b: &FieldElement,
        truncation: usize,
    ) -> Self {
        assert!(truncation >= 1);
        LocalAlgebraInstance {
            lhs: v.shift(a, b),
            rhs: w.shift(a, b),
            truncation,
            shift: (a.clone(), b.clone()),
        }
    }
}

/// Exhaustive scan of all p^2 points of GF(p)^2. Rejects rational inputs.
pub fn brute_force_zeros(
    v: &BiPoly,
    w: &BiPoly,
) -> Result<Vec<(FieldElement, FieldElement)>, Error> {
    if v.spec() != w.spec() || v.spec() == FieldSpec::Rationals {
        return Err(Error::FieldMismatch);
    }
    let spec = v.spec();
    let mut zeros = Vec::new();
    for a in spec.elements()? {
        for b in spec.elements()? {
            if v.eval_point(&a, &b).is_zero() && w.eval_point(&a, &b).is_zero() {
                zeros.push((a.clone(), b));
            }
        }
    }
    Ok(zeros)
}

/// Dimension of K[x,y] / ((V, W) + m^N) over K, with m the maximal ideal of
/// the origin: the number of monomials x^i y^j with i + j < N minus the rank
/// of the truncated multiples of V and W.
///
/// Multiplier monomials of total degree < N suffice as generators: any
/// higher multiple lands in m^N and is quotiented away. And because the
/// ideal contains m^N it is supported only at the origin, so this global
/// quotient has the same dimension as the localized one.
pub fn local_dimension(inst: &LocalAlgebraInstance) -> usize {
    let spec = inst.lhs.spec();
    let n = inst.truncation;
    let monomials: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n - i).map(move |j| (i, j)))
        .collect();
    let columns: std::collections::HashMap<(usize, usize), usize> = monomials
        .iter()
        .enumerate()
        .map(|(k, &m)| (m, k))
        .collect();

    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(2 * monomials.len());
    for generator in [&inst.lhs, &inst.rhs] {
        for &(i, j) in &monomials {
            let mut row = vec![spec.zero(); monomials.len()];
            let mut non_trivial = false;
            // x^i y^j * generator, truncated to total degree < N.
            for (s, coeff) in generator.coeffs().iter().enumerate() {
                let y_pow = s + j;
                if y_pow >= n {
                    continue;
                }
                for (t, scalar) in coeff.coeffs().iter().enumerate() {
                    let x_pow = t + i;
                    if x_pow + y_pow >= n || scalar.is_zero() {
                        continue;
                    }
                    row[columns[&(x_pow, y_pow)]] = scalar.clone();
                    non_trivial = true;
                }
            }
            if non_trivial {
                rows.push(row);
            }
        }
    }
    monomials.len() - row_rank(rows)
}

/// Rank by exact Gaussian elimination.
fn row_rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Intersection multiplicity of (a, b) as the stabilized local-algebra
/// dimension: truncation orders are raised until two consecutive dimensions
/// agree, which pins the dimension of the full local quotient (once the
/// image of m^N is killed by one more step it is zero for good).
///
/// A common factor of the inputs vanishing at the point makes the
/// multiplicity infinite; that precondition is checked first so the loop
/// cannot run away.
pub fn oracle_multiplicity(
    v: &BiPoly,
    w: &BiPoly,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<usize, Error> {
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if v.spec() != w.spec() {
        return Err(Error::FieldMismatch);
    }
    if common_factor_vanishes_at(v, w, a, b)? {
        return Err(Error::InfiniteMultiplicity);
    }
    let mut previous = local_dimension(&LocalAlgebraInstance::at_point(v, w, a, b, 1));
    for n in 2..=TRUNCATION_CAP {
        let current = local_dimension(&LocalAlgebraInstance::at_point(v, w, a, b, n));
        assert!(
            current >= previous,
            "local dimension must be monotone in the truncation order"
        );
        if current == previous {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::CapExceeded {
        cap: TRUNCATION_CAP,
    })
}

/// Whether gcd(V, W) in K[x, y] vanishes at (a, b). The gcd splits into the
/// gcd of the y-contents and the primitive common factor; the latter is the
/// divisor the remainder sequence stops on when the primitive parts are not
/// coprime.
fn common_factor_vanishes_at(
    v: &BiPoly,
    w: &BiPoly,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<bool, Error> {
    let dv = v.deg_y().unwrap();
    let dw = w.deg_y().unwrap();
    if dv == 0 && dw == 0 {
        let g = gcd_monic(&v.coeff(0), &w.coeff(0))?;
        return Ok(g.eval(a).is_zero());
    }
    if dv == 0 {
        let g = gcd_monic(&v.coeff(0), &w.y_content()?)?;
        return Ok(g.eval(a).is_zero());
    }
    if dw == 0 {
        let g = gcd_monic(&w.coeff(0), &v.y_content()?)?;
        return Ok(g.eval(a).is_zero());
    }
    let content_gcd = gcd_monic(&v.y_content()?, &w.y_content()?)?;
    if content_gcd.eval(a).is_zero() {
        return Ok(true);
    }
    let pv = v.y_primitive_part()?;
    let pw = w.y_primitive_part()?;
    let (hi, lo) = if pv.deg_y() >= pw.deg_y() {
        (pv, pw)
    } else {
        (pw, pv)
    };
    match remainder_sequence(&hi, &lo) {
        Ok(_) => Ok(false),
        Err(Error::NotCoprime { gcd }) => Ok(gcd.eval_point(a, b).is_zero()),
        Err(other) => Err(other),
    }
}
