//! Ring-tagged matrix entries: a rational, a prime-field residue, or a
//! differential operator, depending on the ambient [`CoeffRing`].

use std::fmt;

use num_traits::{One, Zero};

use super::operator::{fp, ArithError, CoeffRing, OreOperator};
use super::poly::Rat;
use super::ratfun::RatFun;

/// One exact ring element. Matrices and complexes validate on construction
/// that every entry matches the ambient ring, after which arithmetic between
/// entries of the same container cannot mismatch.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(Rat),
    Mod { p: u64, value: u64 },
    Op(OreOperator),
}

impl Scalar {
    pub fn ring(&self) -> CoeffRing {
        match self {
            Scalar::Rat(_) => CoeffRing::Rational,
            Scalar::Mod { p, .. } => CoeffRing::PrimeField(*p),
            Scalar::Op(_) => CoeffRing::Weyl1,
        }
    }

    pub fn zero(ring: CoeffRing) -> Scalar {
        match ring {
            CoeffRing::Rational => Scalar::Rat(Rat::zero()),
            CoeffRing::PrimeField(p) => Scalar::Mod { p, value: 0 },
            CoeffRing::Weyl1 => Scalar::Op(OreOperator::zero()),
        }
    }

    pub fn one(ring: CoeffRing) -> Scalar {
        match ring {
            CoeffRing::Rational => Scalar::Rat(Rat::one()),
            CoeffRing::PrimeField(p) => Scalar::Mod { p, value: 1 },
            CoeffRing::Weyl1 => Scalar::Op(OreOperator::one()),
        }
    }

    pub fn from_int(ring: CoeffRing, n: i64) -> Scalar {
        match ring {
            CoeffRing::Rational => Scalar::Rat(super::poly::rat(n)),
            CoeffRing::PrimeField(p) => {
                let m = n.rem_euclid(p as i64) as u64;
                Scalar::Mod { p, value: m }
            }
            CoeffRing::Weyl1 => Scalar::Op(OreOperator::from_rat(super::poly::rat(n))),
        }
    }

    /// Converts an operator expression into an element of `ring`; for field
    /// rings the operator must be a constant rational.
    pub fn from_operator(ring: CoeffRing, op: OreOperator) -> Result<Scalar, ArithError> {
        match ring {
            CoeffRing::Weyl1 => Ok(Scalar::Op(op)),
            CoeffRing::Rational => match op.as_constant() {
                Some(c) => Ok(Scalar::Rat(c)),
                None => Err(ArithError::NotInRing {
                    value: op.to_string(),
                    ring,
                }),
            },
            CoeffRing::PrimeField(p) => match op.as_constant() {
                Some(c) => Ok(Scalar::Mod {
                    p,
                    value: fp::reduce_rat(&c, p)?,
                }),
                None => Err(ArithError::NotInRing {
                    value: op.to_string(),
                    ring,
                }),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(c) => c.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Op(op) => op.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(c) => c.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Op(op) => op.is_one(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Rat(c) => !c.is_zero(),
            Scalar::Mod { value, .. } => *value != 0,
            Scalar::Op(op) => op.is_unit(),
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(c) => {
                if c.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(Rat::one() / c))
                }
            }
            Scalar::Mod { p, value } => fp::inv(*value, *p).map(|v| Scalar::Mod { p: *p, value: v }),
            Scalar::Op(op) => op.inverse().map(Scalar::Op),
        }
    }

    fn expect_same_ring(&self, rhs: &Scalar) {
        assert_eq!(
            self.ring(),
            rhs.ring(),
            "scalar ring mismatch: {} vs {}",
            self.ring(),
            rhs.ring()
        );
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.expect_same_ring(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: fp::add(*a, *b, *p),
            },
            (Scalar::Op(a), Scalar::Op(b)) => Scalar::Op(a.add(b)),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { p, value } => Scalar::Mod {
                p: *p,
                value: fp::neg(*value, *p),
            },
            Scalar::Op(a) => Scalar::Op(a.neg()),
        }
    }

    /// Ring product; for Weyl1 the normal-ordered operator product, so the
    /// order of the factors matters.
    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.expect_same_ring(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: fp::mul(*a, *b, *p),
            },
            (Scalar::Op(a), Scalar::Op(b)) => Scalar::Op(a.mul(b)),
            _ => unreachable!(),
        }
    }

    /// Ring-checked product for callers handing in values of unknown origin.
    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        if self.ring() != rhs.ring() {
            return Err(ArithError::RingMismatch {
                left: self.ring(),
                right: rhs.ring(),
            });
        }
        Ok(self.mul(rhs))
    }

    /// Left Euclidean division `self = q·b + r`. Over a field q = self/b,
    /// r = 0.
    pub fn left_divrem(&self, b: &Scalar) -> Result<(Scalar, Scalar), ArithError> {
        self.expect_same_ring(b);
        if b.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        match (self, b) {
            (Scalar::Op(a), Scalar::Op(b)) => {
                let (q, r) = a.left_divide(b)?;
                Ok((Scalar::Op(q), Scalar::Op(r)))
            }
            _ => {
                let q = self.mul(&b.inverse().unwrap());
                Ok((q, Scalar::zero(self.ring())))
            }
        }
    }

    /// Right Euclidean division `self = b·q + r`.
    pub fn right_divrem(&self, b: &Scalar) -> Result<(Scalar, Scalar), ArithError> {
        self.expect_same_ring(b);
        if b.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        match (self, b) {
            (Scalar::Op(a), Scalar::Op(b)) => {
                let (q, r) = a.right_divide(b)?;
                Ok((Scalar::Op(q), Scalar::Op(r)))
            }
            _ => {
                let q = b.inverse().unwrap().mul(self);
                Ok((q, Scalar::zero(self.ring())))
            }
        }
    }

    /// Pivot weight for Euclidean reduction: d-degree first, then the size
    /// of the leading coefficient. Fields weigh every nonzero element alike.
    /// `None` for zero.
    pub fn pivot_weight(&self) -> Option<(u32, usize)> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Op(op) => {
                let deg = op.degree().unwrap();
                let c = op.leading_coefficient().unwrap().complexity();
                Some((deg, c))
            }
            _ => Some((0, 0)),
        }
    }

    pub fn as_operator(&self) -> Option<&OreOperator> {
        match self {
            Scalar::Op(op) => Some(op),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(c) => {
                if c.denom().is_one() {
                    write!(f, "{}", c.numer())
                } else {
                    write!(f, "{}/{}", c.numer(), c.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{}", value),
            Scalar::Op(op) => write!(f, "{}", op),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_is_an_error() {
        let a = Scalar::one(CoeffRing::Rational);
        let b = Scalar::one(CoeffRing::PrimeField(5));
        assert!(matches!(
            a.checked_mul(&b),
            Err(ArithError::RingMismatch { .. })
        ));
        let c = Scalar::one(CoeffRing::PrimeField(7));
        assert!(b.checked_mul(&c).is_err());
    }

    #[test]
    fn field_divrem_is_exact() {
        let a = Scalar::from_int(CoeffRing::PrimeField(7), 5);
        let b = Scalar::from_int(CoeffRing::PrimeField(7), 3);
        let (q, r) = a.left_divrem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn operator_conversion_guards_field_rings() {
        let d = OreOperator::d();
        assert!(Scalar::from_operator(CoeffRing::Rational, d.clone()).is_err());
        assert!(Scalar::from_operator(CoeffRing::Weyl1, d).is_ok());
    }
}
