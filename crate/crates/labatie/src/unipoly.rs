//! Univariate polynomials over the ground field.
//!
//! Dense representation: `coeffs[j]` is the coefficient of the j-th power.
//! The zero polynomial is the empty coefficient vector; a non-zero
//! polynomial always has a non-zero leading coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<FieldElement>,
    spec: FieldSpec,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<FieldElement>, spec: FieldSpec) -> Self {
        for c in &coeffs {
            assert_eq!(c.spec(), spec, "coefficient from a different field");
        }
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs, spec }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            spec,
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        UniPoly::constant(spec.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let spec = c.spec();
        UniPoly::new(vec![c], spec)
    }

    /// x^k
    pub fn monomial(spec: FieldSpec, k: usize) -> Self {
        let mut coeffs = vec![spec.zero(); k + 1];
        coeffs[k] = spec.one();
        UniPoly { coeffs, spec }
    }

    /// x - c
    pub fn linear_root(c: &FieldElement) -> Self {
        UniPoly::new(vec![-c, c.spec().one()], c.spec())
    }

    /// Ascending small-integer coefficients; handy in tests and builders.
    pub fn from_ints(spec: FieldSpec, coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&n| spec.integer(n)).collect(), spec)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> FieldElement {
        self.coeffs.get(j).cloned().unwrap_or_else(|| self.spec.zero())
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lc(&self) -> &FieldElement {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.spec);
        }
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect(), self.spec)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.spec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Composition with `x + a` (Taylor shift).
    pub fn shift(&self, a: &FieldElement) -> UniPoly {
        let x_plus_a = UniPoly::new(vec![a.clone(), self.spec.one()], self.spec);
        let mut acc = UniPoly::zero(self.spec);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x_plus_a) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = Q*divisor + R` with `deg R < deg divisor`
    /// or `R = 0`. Exact arithmetic; when the divisor divides, `R = 0` exactly.
    pub fn divmod(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        assert_eq!(self.spec, divisor.spec, "field mismatch");
        let db = divisor.degree().unwrap();
        if self.degree().map_or(true, |da| da < db) {
            return Ok((UniPoly::zero(self.spec), self.clone()));
        }
        let da = self.degree().unwrap();
        let lc_inv = divisor.lc().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.spec.zero(); da - db + 1];
        for k in (db..=da).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &lc_inv;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k - db + j] = &rem[k - db + j] - &(&c * b);
            }
            quot[k - db] = c;
        }
        Ok((UniPoly::new(quot, self.spec), UniPoly::new(rem, self.spec)))
    }

    /// Division known to be exact; `InexactDivision` if a remainder survives.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly, Error> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Multiplicity of `c` as a root; 0 when `p(c) != 0`.
    pub fn ord_at(&self, c: &FieldElement) -> Result<usize, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let linear = UniPoly::linear_root(c);
        let mut p = self.clone();
        let mut k = 0;
        while p.eval(c).is_zero() {
            let (q, r) = p.divmod(&linear).unwrap();
            debug_assert!(r.is_zero());
            p = q;
            k += 1;
        }
        Ok(k)
    }

    /// All roots lying in the ground field, with exact multiplicities,
    /// sorted by root. GF(p): exhaustive scan. Q: rational-root enumeration
    /// on the denominator-cleared polynomial, confirmed by evaluation.
    pub fn roots_in_field(&self) -> Result<Vec<(FieldElement, usize)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match self.spec {
            FieldSpec::PrimeField { .. } => {
                let mut roots = Vec::new();
                for a in self.spec.elements().unwrap() {
                    if self.eval(&a).is_zero() {
                        let m = self.ord_at(&a).unwrap();
                        roots.push((a, m));
                    }
                }
                Ok(roots)
            }
            FieldSpec::Rationals => Ok(self.rational_roots()),
        }
    }

    fn rational_roots(&self) -> Vec<(FieldElement, usize)> {
        let spec = self.spec;
        let mut roots = Vec::new();

        // Factor out x^k first so the constant term is non-zero.
        let ord0 = self
            .coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        if ord0 > 0 {
            roots.push((spec.zero(), ord0));
        }
        let reduced = UniPoly::new(self.coeffs[ord0..].to_vec(), spec);
        if reduced.is_constant() {
            roots.sort_by(|x, y| x.0.cmp(&y.0));
            return roots;
        }

        // Clear denominators and the integer content.
        let mut den_lcm = BigInt::one();
        for c in &reduced.coeffs {
            den_lcm = den_lcm.lcm(c.as_rational().unwrap().denom());
        }
        let ints: Vec<BigInt> = reduced
            .coeffs
            .iter()
            .map(|c| {
                let r = c.as_rational().unwrap();
                r.numer() * (&den_lcm / r.denom())
            })
            .collect();
        let mut content = BigInt::zero();
        for a in &ints {
            content = content.gcd(a);
        }
        let ints: Vec<BigInt> = ints.iter().map(|a| a / &content).collect();
        let degree = ints.len() - 1;

        // A root r/s in lowest terms gives an integer linear factor sx - r,
        // so (s - r) | P(1) and (s + r) | P(-1): cheap exact filters before
        // the full evaluation.
        let at_one: BigInt = ints.iter().sum();
        let at_minus_one: BigInt = ints
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 0 { a.clone() } else { -a })
            .sum();

        let trailing = ints.first().unwrap().abs();
        let leading = ints.last().unwrap().abs();
        for s in positive_divisors(&leading) {
            // Powers of s for the integer Horner evaluation of P(r/s) * s^n.
            let mut s_pows = Vec::with_capacity(degree + 1);
            let mut acc = BigInt::one();
            for _ in 0..=degree {
                s_pows.push(acc.clone());
                acc *= &s;
            }
            for r in positive_divisors(&trailing) {
                if r.gcd(&s) != BigInt::one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let signed_r = &r * BigInt::from(sign);
                    let lin_at_one = &s - &signed_r;
                    if !divides_or_zero(&lin_at_one, &at_one) {
                        continue;
                    }
                    let lin_at_minus_one = &s + &signed_r;
                    if !divides_or_zero(&lin_at_minus_one, &at_minus_one) {
                        continue;
                    }
                    // P(r/s) * s^n, all-integer Horner.
                    let mut value = BigInt::zero();
                    for (i, a) in ints.iter().enumerate().rev() {
                        value = value * &signed_r + a * &s_pows[degree - i];
                    }
                    if value.is_zero() {
                        let candidate = FieldElement::from_rational(
                            num_rational::BigRational::new(signed_r, s.clone()),
                            spec,
                        );
                        let m = reduced.ord_at(&candidate).unwrap();
                        roots.push((candidate, m));
                    }
                }
            }
        }
        roots.sort_by(|x, y| x.0.cmp(&y.0));
        roots
    }
}

/// `divisor | value`, treating a zero divisor as dividing only zero.
fn divides_or_zero(divisor: &BigInt, value: &BigInt) -> bool {
    if divisor.is_zero() {
        value.is_zero()
    } else {
        (value % divisor).is_zero()
    }
}

/// Monic greatest common divisor. `gcd(A, 0)` is the monic normalization of
/// `A`. Over GF(p) this is the plain Euclidean algorithm; over Q the
/// remainders are kept as primitive integer polynomials so coefficient sizes
/// stay tame.
pub fn gcd_monic(a: &UniPoly, b: &UniPoly) -> Result<UniPoly, Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    if a.spec() == FieldSpec::Rationals {
        return Ok(gcd_primitive_z(a, b));
    }
    let (mut f, mut g) = (a.clone(), b.clone());
    while !g.is_zero() {
        let (_, r) = f.divmod(&g).unwrap();
        f = g;
        g = r;
    }
    Ok(f.monic())
}

/// Primitive pseudo-remainder sequence over Z for rational inputs.
fn gcd_primitive_z(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let spec = a.spec();
    let (mut f, mut g) = (primitive_integer_coeffs(a), primitive_integer_coeffs(b));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = pseudo_rem_z(&f, &g);
        f = g;
        g = primitive_part_z(r);
    }
    let result = UniPoly::new(
        f.iter().map(|n| spec.from_bigint(n)).collect(),
        spec,
    );
    result.monic()
}

/// Denominator-cleared, content-free coefficients (empty for zero).
fn primitive_integer_coeffs(p: &UniPoly) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut den_lcm = BigInt::one();
    for c in p.coeffs() {
        den_lcm = den_lcm.lcm(c.as_rational().unwrap().denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&den_lcm / r.denom())
        })
        .collect();
    primitive_part_z(ints)
}

fn primitive_part_z(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return coeffs;
    }
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
        if content.is_one() {
            return coeffs;
        }
    }
    coeffs.iter().map(|c| c / &content).collect()
}

/// Remainder of `lc(g)^(deg f - deg g + 1) * f` divided by `g`, all over Z.
fn pseudo_rem_z(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let lc = g.last().unwrap();
    let mut rem = f.to_vec();
    while rem.len() > dg {
        let dr = rem.len() - 1;
        let top = rem.pop().unwrap();
        for c in rem.iter_mut() {
            *c *= lc;
        }
        for (j, gc) in g[..dg].iter().enumerate() {
            rem[dr - dg + j] -= &top * gc;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

/// Degree of the part of `g` supported on roots of `h`: strips
/// `gcd(g, h)`-factors from `g` until coprime and returns the degree lost.
/// Equals the ord-weighted count of closure roots of `g` annihilated by `h`.
pub fn supported_part_degree(g: &UniPoly, h: &UniPoly) -> Result<usize, Error> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut m = g.clone();
    loop {
        let t = gcd_monic(&m, h).unwrap();
        if t.is_constant() {
            break;
        }
        m = m.exact_div(&t).expect("gcd divides exactly");
    }
    Ok(g.degree().unwrap() - m.degree().unwrap())
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    // Small primes by trial division, the rest by rho splitting.
    for d in std::iter::once(2u64).chain((3..10_000).step_by(2)) {
        let big_d = BigInt::from(d);
        if &big_d * &big_d > m {
            break;
        }
        let mut e = 0;
        while (&m % &big_d).is_zero() {
            m /= &big_d;
            e += 1;
        }
        if e > 0 {
            factors.push((big_d, e));
        }
    }
    if m > BigInt::one() {
        let mut stack = vec![m];
        while let Some(candidate) = stack.pop() {
            if is_probable_prime(&candidate) {
                match factors.iter_mut().find(|(p, _)| *p == candidate) {
                    Some((_, e)) => *e += 1,
                    None => factors.push((candidate, 1)),
                }
            } else {
                let divisor = pollard_rho(&candidate);
                stack.push(&candidate / &divisor);
                stack.push(divisor);
            }
        }
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divisors = next;
    }
    divisors
}

/// Miller-Rabin with the first twelve prime bases: deterministic below
/// 3.3 * 10^24, overwhelmingly reliable beyond.
fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(small);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one: BigInt = n - 1;
    let trailing = n_minus_one.trailing_zeros().unwrap();
    let odd_part = &n_minus_one >> trailing;
    'witness: for base in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(base).modpow(&odd_part, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..trailing {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; `n` must be odd, composite and coprime to small
/// primes (guaranteed by the trial-division stage above).
fn pollard_rho(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    for offset in 1u64.. {
        let c = BigInt::from(offset);
        let step = |x: &BigInt| (x * x + &c) % n;
        let mut tortoise = BigInt::from(2);
        let mut hare = step(&tortoise);
        loop {
            let diff = (&hare - &tortoise).abs();
            if diff.is_zero() {
                break; // cycle without a factor; retry with another offset
            }
            let g = diff.gcd(n);
            if g > one && g < *n {
                return g;
            }
            tortoise = step(&tortoise);
            hare = step(&step(&hare));
        }
    }
    unreachable!("a composite always splits for some polynomial offset")
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect();
        UniPoly::new(coeffs, self.spec)
    }
}

impl std::ops::Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect();
        UniPoly::new(coeffs, self.spec)
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.spec, rhs.spec, "field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::new(coeffs, self.spec)
    }
}

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect(), self.spec)
    }
}
