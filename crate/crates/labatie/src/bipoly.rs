//! Bivariate polynomials viewed as K[x][y]: dense in y, with univariate
//! coefficients dense in x.

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::{gcd_monic, UniPoly};

/// A polynomial in x and y; `coeffs[j]` is the K[x] coefficient of y^j.
/// Zero is the empty sequence; otherwise the leading y-coefficient is
/// non-zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
    spec: FieldSpec,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>, spec: FieldSpec) -> Self {
        for c in &coeffs {
            assert_eq!(c.spec(), spec, "coefficient from a different field");
        }
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs, spec }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        BiPoly {
            coeffs: Vec::new(),
            spec,
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        BiPoly::from_unipoly(UniPoly::one(spec))
    }

    /// Embeds p(x) as a polynomial of y-degree 0.
    pub fn from_unipoly(p: UniPoly) -> Self {
        let spec = p.spec();
        BiPoly::new(vec![p], spec)
    }

    /// x^i y^j with a unit coefficient.
    pub fn monomial(spec: FieldSpec, i: usize, j: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(spec); j + 1];
        coeffs[j] = UniPoly::monomial(spec, i);
        BiPoly { coeffs, spec }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in y; `None` for the zero polynomial.
    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(|| UniPoly::zero(self.spec))
    }

    /// Leading y-coefficient; panics on the zero polynomial.
    pub fn lc_y(&self) -> &UniPoly {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn scale(&self, c: &FieldElement) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|a| a.scale(c)).collect(), self.spec)
    }

    pub fn mul_unipoly(&self, p: &UniPoly) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|a| a * p).collect(), self.spec)
    }

    /// Scales by a unit so the leading scalar (of the leading y-coefficient)
    /// is 1. Used for unit-insensitive comparisons and diagnostics.
    pub fn unit_normalized(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc_y().lc().inv())
    }

    /// Monic gcd in K[x] of all y-coefficients.
    pub fn y_content(&self) -> Result<UniPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut acc = UniPoly::zero(self.spec);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = gcd_monic(&acc, c).unwrap();
            }
            if acc.is_one() {
                break;
            }
        }
        Ok(acc)
    }

    /// `self / y_content(self)`, exact coefficient-wise; the result has
    /// y-content 1.
    pub fn y_primitive_part(&self) -> Result<BiPoly, Error> {
        let content = self.y_content()?;
        Ok(self.exact_div_unipoly(&content).expect("content divides"))
    }

    pub fn is_y_primitive(&self) -> bool {
        self.y_content().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Coefficient-wise exact division by d(x).
    pub fn exact_div_unipoly(&self, d: &UniPoly) -> Result<BiPoly, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.exact_div(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BiPoly::new(coeffs, self.spec))
    }

    /// Pseudo-division with the classical multiplier
    /// `u = lc_y(divisor)^(deg_y(self) - deg_y(divisor) + 1)`:
    /// returns `(u, Q, R)` with `u*self = Q*divisor + R` exactly and
    /// `R = 0` or `deg_y R < deg_y divisor`.
    pub fn pseudo_divide(&self, divisor: &BiPoly) -> Result<(UniPoly, BiPoly, BiPoly), Error> {
        assert_eq!(self.spec, divisor.spec, "field mismatch");
        let dw = self.deg_y().unwrap_or(0);
        let dv = divisor.deg_y().unwrap_or(0);
        if dv == 0 || dv > dw {
            return Err(Error::DegreeOrder {
                dividend: dw,
                divisor: dv,
            });
        }
        let lc = divisor.lc_y().clone();
        let mut remaining = dw - dv + 1;
        let mut quot = BiPoly::zero(self.spec);
        let mut rem = self.clone();
        while let Some(dr) = rem.deg_y() {
            if dr < dv {
                break;
            }
            // One reduction step: quot <- lc*quot + t, rem <- lc*rem - t*divisor
            // with t = lc_y(rem) * y^(dr - dv).
            let t = BiPoly::new(
                {
                    let mut cs = vec![UniPoly::zero(self.spec); dr - dv + 1];
                    cs[dr - dv] = rem.lc_y().clone();
                    cs
                },
                self.spec,
            );
            quot = &quot.mul_unipoly(&lc) + &t;
            rem = &rem.mul_unipoly(&lc) - &(&t * divisor);
            remaining -= 1;
            debug_assert!(rem.deg_y().map_or(true, |d| d < dr));
        }
        // Spend the unused multiplier powers so u is exactly lc^(dw - dv + 1).
        let boost = lc.pow(remaining as u32);
        quot = quot.mul_unipoly(&boost);
        rem = rem.mul_unipoly(&boost);
        let u = lc.pow((dw - dv + 1) as u32);
        debug_assert!(!u.is_zero());
        Ok((u, quot, rem))
    }

    /// The univariate section W(a, y).
    pub fn section_at(&self, a: &FieldElement) -> Result<UniPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(UniPoly::new(
            self.coeffs.iter().map(|c| c.eval(a)).collect(),
            self.spec,
        ))
    }

    /// Exact value W(a, b) by Horner evaluation in y of sections.
    pub fn eval_point(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * b) + &c.eval(a);
        }
        acc
    }

    /// Composition with `(x + a, y + b)`, so the point (a, b) moves to the
    /// origin of the result's coordinates.
    pub fn shift(&self, a: &FieldElement, b: &FieldElement) -> BiPoly {
        let y_plus_b = BiPoly::new(
            vec![UniPoly::constant(b.clone()), UniPoly::one(self.spec)],
            self.spec,
        );
        let mut acc = BiPoly::zero(self.spec);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &y_plus_b) + &BiPoly::from_unipoly(c.shift(a));
        }
        acc
    }
}

impl std::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect();
        BiPoly::new(coeffs, self.spec)
    }
}

impl std::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect();
        BiPoly::new(coeffs, self.spec)
    }
}

impl std::ops::Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero(self.spec);
        }
        let mut coeffs = vec![UniPoly::zero(self.spec); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::new(coeffs, self.spec)
    }
}

impl std::ops::Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect(), self.spec)
    }
}
