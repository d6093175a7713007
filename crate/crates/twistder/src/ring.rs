//! Exact scalar arithmetic over the two supported coefficient rings: the
//! integers and the integers modulo q.
//!
//! Scalars are plain `i64` values. For a modulus q >= 2 they are kept
//! canonical in `0..q`; in characteristic zero they are arbitrary signed
//! integers and every operation is checked, so overflow surfaces as
//! [`Error::Overflow`] instead of wrapping silently.

use std::fmt;

use crate::error::{Error, Result};

/// A ring scalar. Canonical form depends on the [`RingSpec`] it belongs to.
pub type Scalar = i64;

/// The coefficient ring: `Z` (characteristic 0) or `Z/qZ` (characteristic q >= 2).
///
/// The zero ring (q = 1) is rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    characteristic: u64,
}

impl RingSpec {
    /// The ring of integers.
    pub fn integers() -> Self {
        RingSpec { characteristic: 0 }
    }

    /// The ring of integers modulo `q`, for `q >= 2`.
    pub fn modular(q: u64) -> Result<Self> {
        Self::new(q).and_then(|spec| {
            if spec.is_finite() {
                Ok(spec)
            } else {
                Err(Error::Precondition("modular ring needs q >= 2"))
            }
        })
    }

    /// Ring with the given characteristic: 0 means the integers, q >= 2 means
    /// integers mod q, and 1 is rejected.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 1 {
            return Err(Error::ZeroRing);
        }
        if characteristic > i64::MAX as u64 {
            return Err(Error::ModulusTooLarge(characteristic));
        }
        Ok(RingSpec { characteristic })
    }

    /// 0 for the integers, q for integers mod q.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// True for a modular ring, false for the integers.
    pub fn is_finite(&self) -> bool {
        self.characteristic != 0
    }

    /// Reduce an arbitrary integer to canonical form: `0..q` when finite,
    /// unchanged in characteristic zero.
    pub fn canonical(&self, a: i64) -> Scalar {
        if self.characteristic == 0 {
            a
        } else {
            a.rem_euclid(self.characteristic as i64)
        }
    }

    /// True when `a` is already canonical for this ring.
    pub fn is_canonical(&self, a: Scalar) -> bool {
        self.canonical(a) == a
    }

    pub fn add(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        if self.characteristic == 0 {
            a.checked_add(b).ok_or(Error::Overflow)
        } else {
            // Canonical inputs are < q <= i64::MAX, so the i128 sum is exact.
            let q = self.characteristic as i128;
            Ok(((a as i128 + b as i128).rem_euclid(q)) as i64)
        }
    }

    pub fn mul(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        if self.characteristic == 0 {
            a.checked_mul(b).ok_or(Error::Overflow)
        } else {
            let q = self.characteristic as i128;
            Ok(((a as i128 * b as i128).rem_euclid(q)) as i64)
        }
    }

    pub fn neg(&self, a: Scalar) -> Result<Scalar> {
        if self.characteristic == 0 {
            a.checked_neg().ok_or(Error::Overflow)
        } else {
            Ok(self.canonical(-a))
        }
    }

    pub fn sub(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        self.add(a, self.neg(b)?)
    }

    /// Whether `a` has a multiplicative inverse: units of `Z` are 1 and -1,
    /// units of `Z/qZ` are the residues coprime to q.
    pub fn is_unit(&self, a: Scalar) -> bool {
        if self.characteristic == 0 {
            a == 1 || a == -1
        } else {
            let a = self.canonical(a);
            gcd(a as u64, self.characteristic) == 1
        }
    }

    /// All canonical scalars of a finite ring, `None` for the integers.
    pub fn scalar_range(&self) -> Option<std::ops::Range<i64>> {
        if self.characteristic == 0 {
            None
        } else {
            Some(0..self.characteristic as i64)
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.characteristic)
        }
    }
}

/// Greatest common divisor of `a >= 0` and `n >= 1`, with `gcd(0, n) = n`.
///
/// That corner case carries real weight here: the twist shift v may be zero
/// (sigma = tau), and the class count is then gcd(0, n) = n.
pub fn gcd(a: u64, n: u64) -> u64 {
    debug_assert!(n >= 1);
    let (mut a, mut b) = (a, n);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_rejects_the_zero_ring() {
        assert_eq!(RingSpec::new(1), Err(Error::ZeroRing));
        assert!(RingSpec::new(0).is_ok());
        assert!(RingSpec::new(2).is_ok());
        assert_eq!(
            RingSpec::modular(0),
            Err(Error::Precondition("modular ring needs q >= 2"))
        );
    }

    #[test]
    fn scalar_examples() {
        let f2 = RingSpec::modular(2).unwrap();
        assert_eq!(f2.add(1, 1).unwrap(), 0);

        let z = RingSpec::integers();
        assert_eq!(z.mul(-3, 4).unwrap(), -12);

        let z6 = RingSpec::modular(6).unwrap();
        assert_eq!(z6.neg(2).unwrap(), 4);
    }

    #[test]
    fn unit_examples() {
        let z6 = RingSpec::modular(6).unwrap();
        assert!(z6.is_unit(5)); // 5 * 5 = 25 = 1 mod 6
        assert!(!z6.is_unit(2));

        let z = RingSpec::integers();
        assert!(!z.is_unit(2));
        assert!(z.is_unit(1));
        assert!(z.is_unit(-1));
        assert!(!z.is_unit(0));
    }

    #[test]
    fn gcd_convention_examples() {
        assert_eq!(gcd(2, 8), 2);
        assert_eq!(gcd(0, 4), 4);
        assert_eq!(gcd(2, 6), 2);
        assert_eq!(gcd(1, 7), 1);
    }

    #[test]
    fn overflow_is_signaled() {
        let z = RingSpec::integers();
        assert_eq!(z.add(i64::MAX, 1), Err(Error::Overflow));
        assert_eq!(z.mul(i64::MAX, 2), Err(Error::Overflow));
        assert_eq!(z.neg(i64::MIN), Err(Error::Overflow));
    }

    #[test]
    fn ring_axioms_exhaustive_small_moduli() {
        for q in 2..=8u64 {
            let spec = RingSpec::modular(q).unwrap();
            let range = spec.scalar_range().unwrap();
            for a in range.clone() {
                for b in range.clone() {
                    assert_eq!(spec.add(a, b), spec.add(b, a));
                    assert_eq!(spec.mul(a, b), spec.mul(b, a));
                    let neg = spec.neg(a).unwrap();
                    assert_eq!(spec.add(a, neg).unwrap(), 0);
                    for c in range.clone() {
                        let ab_c = spec.add(spec.add(a, b).unwrap(), c).unwrap();
                        let a_bc = spec.add(a, spec.add(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let lhs = spec.mul(a, spec.add(b, c).unwrap()).unwrap();
                        let rhs = spec
                            .add(spec.mul(a, b).unwrap(), spec.mul(a, c).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn units_have_inverses_exhaustive() {
        for q in 2..=30u64 {
            let spec = RingSpec::modular(q).unwrap();
            for a in spec.scalar_range().unwrap() {
                let inverse = spec
                    .scalar_range()
                    .unwrap()
                    .find(|&b| spec.mul(a, b).unwrap() == 1);
                assert_eq!(spec.is_unit(a), inverse.is_some(), "q={q} a={a}");
            }
        }
    }

    proptest! {
        #[test]
        fn ring_axioms_randomized(
            q in prop_oneof![Just(0u64), Just(97), Just(1_000_003)],
            a in -1_000_000i64..1_000_000,
            b in -1_000_000i64..1_000_000,
            c in -1_000_000i64..1_000_000,
        ) {
            let spec = RingSpec::new(q).unwrap();
            let (a, b, c) = (spec.canonical(a), spec.canonical(b), spec.canonical(c));
            prop_assert_eq!(spec.add(a, b), spec.add(b, a));
            prop_assert_eq!(spec.mul(a, b), spec.mul(b, a));
            prop_assert_eq!(
                spec.add(spec.add(a, b)?, c),
                spec.add(a, spec.add(b, c)?)
            );
            prop_assert_eq!(
                spec.mul(spec.mul(a, b)?, c),
                spec.mul(a, spec.mul(b, c)?)
            );
            prop_assert_eq!(
                spec.mul(a, spec.add(b, c)?),
                spec.add(spec.mul(a, b)?, spec.mul(a, c)?)
            );
            prop_assert_eq!(spec.add(a, spec.neg(a)?)?, 0);
        }

        #[test]
        fn gcd_divides_both(a in 0u64..10_000, n in 1u64..10_000) {
            let g = gcd(a, n);
            prop_assert!(g >= 1);
            prop_assert_eq!(n % g, 0);
            if a > 0 {
                prop_assert_eq!(a % g, 0);
            } else {
                prop_assert_eq!(g, n);
            }
        }
    }
}
