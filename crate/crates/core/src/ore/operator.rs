//! Normal-ordered differential operators in one variable with
//! rational-function coefficients, and the coefficient-ring tag shared by
//! every higher layer.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::poly::{rat, Poly, Rat};
use super::ratfun::RatFun;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Operands live over different coefficient rings.
    RingMismatch { left: CoeffRing, right: CoeffRing },
    DivisionByZero,
    /// `/` applied with a divisor that is not a rational function (or not a
    /// constant when the dividend carries d-powers).
    NonScalarDivisor,
    /// Modulus of a prime field is not prime.
    NotPrime(u64),
    /// A value over Q does not reduce mod p (denominator divisible by p).
    BadReduction { value: String, p: u64 },
    /// An expression does not denote an element of the requested ring.
    NotInRing { value: String, ring: CoeffRing },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::RingMismatch { left, right } => {
                write!(f, "coefficient ring mismatch: {} vs {}", left, right)
            }
            ArithError::DivisionByZero => write!(f, "division by zero"),
            ArithError::NonScalarDivisor => {
                write!(f, "divisor must be a nonzero rational function (constant when the dividend has d-powers)")
            }
            ArithError::NotPrime(p) => write!(f, "{} is not prime", p),
            ArithError::BadReduction { value, p } => {
                write!(f, "cannot reduce {} modulo {}", value, p)
            }
            ArithError::NotInRing { value, ring } => {
                write!(f, "{} is not an element of {}", value, ring)
            }
        }
    }
}

impl std::error::Error for ArithError {}

/// The coefficient rings the workbench computes over.
///
/// `Weyl1` is the ring of differential operators in one variable with
/// rational-function coefficients over Q: a noncommutative domain that is
/// left and right Euclidean, which is what makes kernels and solvability
/// decidable downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Rational,
    PrimeField(u64),
    Weyl1,
}

impl CoeffRing {
    /// Validates the tag, checking primality for prime fields.
    pub fn validate(self) -> Result<Self, ArithError> {
        if let CoeffRing::PrimeField(p) = self {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
        }
        Ok(self)
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoeffRing::Weyl1)
    }

    /// Characteristic: 0 for Q and Weyl1, p for prime fields.
    pub fn characteristic(self) -> u64 {
        match self {
            CoeffRing::PrimeField(p) => p,
            _ => 0,
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Rational => write!(f, "Q"),
            CoeffRing::PrimeField(p) => write!(f, "Fp:{}", p),
            CoeffRing::Weyl1 => write!(f, "weyl1"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Modular arithmetic helpers. Moduli are kept below 2^31 so products fit
/// in u64 after widening.
pub mod fp {
    use super::ArithError;
    use num_traits::{Signed, ToPrimitive};

    pub fn add(a: u64, b: u64, p: u64) -> u64 {
        (a + b) % p
    }

    pub fn sub(a: u64, b: u64, p: u64) -> u64 {
        (a + p - b % p) % p
    }

    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn neg(a: u64, p: u64) -> u64 {
        (p - a % p) % p
    }

    pub fn inv(a: u64, p: u64) -> Option<u64> {
        if a % p == 0 {
            return None;
        }
        // extended Euclid over i128
        let (mut r0, mut r1) = (p as i128, (a % p) as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(p as i128) as u64)
    }

    /// Reduces a rational number mod p; fails when the denominator is
    /// divisible by p.
    pub fn reduce_rat(c: &super::Rat, p: u64) -> Result<u64, ArithError> {
        let to_res = |n: &num_bigint::BigInt| -> u64 {
            let m = n.abs() % p;
            let m = m.to_u64().unwrap();
            if n.is_negative() {
                neg(m, p)
            } else {
                m
            }
        };
        let den = to_res(c.denom());
        let num = to_res(c.numer());
        match inv(den, p) {
            Some(d) => Ok(mul(num, d, p)),
            None => Err(ArithError::BadReduction {
                value: c.to_string(),
                p,
            }),
        }
    }
}

/// A differential operator in normal order: a finite sum Σ cᵢ(x)·d^i with
/// nonzero rational-function coefficients. All x-dependence sits to the left
/// of all d-powers; the commutation rule d·f = f·d + f' keeps it that way.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OreOperator {
    terms: BTreeMap<u32, RatFun>,
}

impl OreOperator {
    pub fn zero() -> Self {
        OreOperator {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        OreOperator::from_ratfun(RatFun::one())
    }

    /// The generator `x` (multiplication by the coordinate).
    pub fn x() -> Self {
        OreOperator::from_ratfun(RatFun::x())
    }

    /// The generator `d` (differentiation).
    pub fn d() -> Self {
        OreOperator::term(RatFun::one(), 1)
    }

    pub fn from_ratfun(c: RatFun) -> Self {
        OreOperator::term(c, 0)
    }

    pub fn from_rat(c: Rat) -> Self {
        OreOperator::from_ratfun(RatFun::constant(c))
    }

    /// Single term `c · d^k`.
    pub fn term(c: RatFun, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        OreOperator { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, RatFun)>) -> Self {
        let mut op = OreOperator::zero();
        for (k, c) in terms {
            op.add_term(k, c);
        }
        op
    }

    fn add_term(&mut self, k: u32, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, RatFun::is_one)
    }

    /// d-degree: the largest stored d-exponent, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coefficient(&self, k: u32) -> RatFun {
        self.terms.get(&k).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&RatFun> {
        self.terms.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &RatFun)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// True when the operator is a plain rational function (d-degree ≤ 0).
    pub fn is_function(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    pub fn as_function(&self) -> Option<RatFun> {
        if self.is_function() {
            Some(self.coefficient(0))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_function().and_then(|f| f.as_constant())
    }

    pub fn add(&self, rhs: &OreOperator) -> OreOperator {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &OreOperator) -> OreOperator {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> OreOperator {
        OreOperator {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &RatFun) -> OreOperator {
        if c.is_zero() {
            return OreOperator::zero();
        }
        OreOperator {
            terms: self.terms.iter().map(|(k, a)| (*k, c * a)).collect(),
        }
    }

    /// Normal-ordered product. Expands d^i·f over each coefficient pair by
    /// the general Leibniz rule d^i·f = Σ_k C(i,k)·f^(k)·d^(i-k).
    pub fn mul(&self, rhs: &OreOperator) -> OreOperator {
        let mut out = OreOperator::zero();
        for (i, a) in self.terms() {
            // successive derivatives of each rhs coefficient, shared per i
            for (j, b) in rhs.terms() {
                let mut binom = rat(1);
                let mut der = b.clone();
                for k in 0..=i {
                    if !der.is_zero() {
                        let coeff = a * &der.scale(&binom);
                        out.add_term(i - k + j, coeff);
                    }
                    if k < i {
                        // C(i, k+1) = C(i, k)·(i-k)/(k+1)
                        binom = binom * rat((i - k) as i64) / rat((k + 1) as i64);
                        der = der.derivative();
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> OreOperator {
        let mut acc = OreOperator::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies the operator to a rational function: d acts as d/dx and x as
    /// multiplication. This is the independent oracle for normal ordering.
    pub fn apply(&self, f: &RatFun) -> RatFun {
        let mut out = RatFun::zero();
        for (i, c) in self.terms() {
            let mut der = f.clone();
            for _ in 0..i {
                der = der.derivative();
            }
            out = &out + &(c * &der);
        }
        out
    }

    /// Applies to a polynomial; the result is a rational function in general
    /// (the coefficients are), polynomial whenever the operator is.
    pub fn apply_to_polynomial(&self, p: &Poly) -> RatFun {
        self.apply(&RatFun::from_poly(p.clone()))
    }

    /// Left Euclidean division: `self = q·b + r` with d-degree(r) strictly
    /// below d-degree(b). The quotient multiplies `b` from the left.
    pub fn left_divide(&self, b: &OreOperator) -> Result<(OreOperator, OreOperator), ArithError> {
        let db = b.degree().ok_or(ArithError::DivisionByZero)?;
        let lb = b.leading_coefficient().unwrap().clone();
        let mut r = self.clone();
        let mut q = OreOperator::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.leading_coefficient().unwrap() / &lb;
            let t = OreOperator::term(c, dr - db);
            r = r.sub(&t.mul(b));
            q = q.add(&t);
        }
        Ok((q, r))
    }

    /// Right Euclidean division: `self = b·q + r` with d-degree(r) strictly
    /// below d-degree(b).
    pub fn right_divide(&self, b: &OreOperator) -> Result<(OreOperator, OreOperator), ArithError> {
        let db = b.degree().ok_or(ArithError::DivisionByZero)?;
        let lb = b.leading_coefficient().unwrap().clone();
        let mut r = self.clone();
        let mut q = OreOperator::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.leading_coefficient().unwrap() / &lb;
            let t = OreOperator::term(c, dr - db);
            r = r.sub(&b.mul(&t));
            q = q.add(&t);
        }
        Ok((q, r))
    }

    /// Units of the rational Weyl algebra are the nonzero d-degree-0
    /// operators (the coefficient field sits inside).
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_function()
    }

    pub fn inverse(&self) -> Option<OreOperator> {
        self.as_function()
            .and_then(|f| f.inverse())
            .map(OreOperator::from_ratfun)
    }
}

impl fmt::Display for OreOperator {
    /// Normal-ordered, descending d-degree, space-free.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c.is_display_negative();
            let c_abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (*k, c_abs.is_one()) {
                (0, _) => write!(f, "{}", c_abs.display_as_coefficient())?,
                (1, true) => write!(f, "d")?,
                (1, false) => write!(f, "{}*d", c_abs.display_as_coefficient())?,
                (_, true) => write!(f, "d^{}", k)?,
                (_, false) => write!(f, "{}*d^{}", c_abs.display_as_coefficient(), k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OreOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_relation() {
        // d·x - x·d = 1
        let lhs = OreOperator::d()
            .mul(&OreOperator::x())
            .sub(&OreOperator::x().mul(&OreOperator::d()));
        assert!(lhs.is_one());
    }

    #[test]
    fn d_times_x_normal_orders() {
        // d·x = x·d + 1
        let prod = OreOperator::d().mul(&OreOperator::x());
        let expect = OreOperator::x().mul(&OreOperator::d()).add(&OreOperator::one());
        assert_eq!(prod, expect);
    }

    #[test]
    fn d_squared_times_x() {
        // d^2·x = x·d^2 + 2·d (checked against the application oracle below)
        let prod = OreOperator::d().pow(2).mul(&OreOperator::x());
        let expect = OreOperator::from_terms([
            (2, RatFun::x()),
            (1, RatFun::constant(rat(2))),
        ]);
        assert_eq!(prod, expect);
        for k in 0..=6u32 {
            let p = Poly::monomial(rat(1), k as usize);
            let via_prod = prod.apply_to_polynomial(&p);
            let via_steps = OreOperator::d()
                .pow(2)
                .apply(&OreOperator::x().apply_to_polynomial(&p));
            assert_eq!(via_prod, via_steps);
        }
    }

    #[test]
    fn apply_examples() {
        // (x·d)(x^2) = 2x^2
        let xd = OreOperator::x().mul(&OreOperator::d());
        let x2 = Poly::monomial(rat(1), 2);
        assert_eq!(
            xd.apply_to_polynomial(&x2),
            RatFun::from_poly(Poly::monomial(rat(2), 2))
        );
        // unit acts as identity
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(
            OreOperator::one().apply_to_polynomial(&p),
            RatFun::from_poly(p.clone())
        );
        // d(x^3 + 1) = 3x^2
        assert_eq!(
            OreOperator::d().apply_to_polynomial(&Poly::from_ints(&[1, 0, 0, 1])),
            RatFun::from_poly(Poly::from_ints(&[0, 0, 3]))
        );
    }

    #[test]
    fn left_division_examples() {
        let d = OreOperator::d();
        let x = OreOperator::x();
        // (d^2 + x·d) / d: q = d + x, r = 0
        let a = d.pow(2).add(&x.mul(&d));
        let (q, r) = a.left_divide(&d).unwrap();
        assert_eq!(q, d.add(&x));
        assert!(r.is_zero());
        assert_eq!(q.mul(&d).add(&r), a);
        // d / d = (1, 0)
        let (q, r) = d.left_divide(&d).unwrap();
        assert!(q.is_one() && r.is_zero());
        // x / d = (0, x)
        let (q, r) = x.left_divide(&d).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, x);
        // division by zero is an error
        assert_eq!(
            d.left_divide(&OreOperator::zero()).unwrap_err(),
            ArithError::DivisionByZero
        );
    }

    #[test]
    fn display_normal_order() {
        let op = OreOperator::x()
            .mul(&OreOperator::d())
            .add(&OreOperator::one());
        assert_eq!(op.to_string(), "x*d+1");
        let op2 = OreOperator::d().pow(2).sub(&OreOperator::x());
        assert_eq!(op2.to_string(), "d^2-x");
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(5) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(91));
    }

    #[test]
    fn fp_inverse() {
        for a in 1..7 {
            let inv = fp::inv(a, 7).unwrap();
            assert_eq!(fp::mul(a, inv, 7), 1);
        }
        assert!(fp::inv(0, 7).is_none());
    }
}
