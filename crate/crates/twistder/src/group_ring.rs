//! Arithmetic in the cyclic group ring `R[C_n]`.
//!
//! An element is a dense length-n coefficient vector: position i holds the
//! coefficient of x^i, where x generates C_n and x^n = 1. Multiplication is
//! cyclic convolution. The ring endomorphisms considered by this crate are
//! the linear extensions of group endomorphisms of C_n; every such map sends
//! x to some power x^e and is stored by that exponent alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{gcd, RingSpec, Scalar};

/// A dense element of `R[C_n]`: coefficients of 1, x, ..., x^(n-1).
///
/// Coefficients are always canonical for the element's ring, so structural
/// equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    spec: RingSpec,
    coeffs: Vec<Scalar>,
}

impl GroupRingElement {
    /// The zero element of `R[C_n]`.
    pub fn zero(spec: RingSpec, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        Ok(GroupRingElement {
            spec,
            coeffs: vec![0; order],
        })
    }

    /// The multiplicative identity 1 = x^0.
    pub fn one(spec: RingSpec, order: usize) -> Result<Self> {
        Self::monomial(spec, order, 0, 1)
    }

    /// `coeff * x^exponent`; the exponent is reduced mod n.
    pub fn monomial(spec: RingSpec, order: usize, exponent: i64, coeff: Scalar) -> Result<Self> {
        let mut el = Self::zero(spec, order)?;
        let e = exponent.rem_euclid(order as i64) as usize;
        el.coeffs[e] = spec.canonical(coeff);
        Ok(el)
    }

    /// Build from raw coefficients (index i is the coefficient of x^i),
    /// canonicalizing each entry.
    pub fn from_coeffs(spec: RingSpec, coeffs: &[i64]) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyOrder);
        }
        Ok(GroupRingElement {
            spec,
            coeffs: coeffs.iter().map(|&a| spec.canonical(a)).collect(),
        })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    /// The group order n.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of x^i, with i taken mod n.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs[i % self.coeffs.len()]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|&&a| a != 0).count()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect::<Result<_>>()?;
        Ok(GroupRingElement {
            spec: self.spec,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.spec.neg(a))
            .collect::<Result<_>>()?;
        Ok(GroupRingElement {
            spec: self.spec,
            coeffs,
        })
    }

    pub fn scalar_mul(&self, s: Scalar) -> Result<Self> {
        let s = self.spec.canonical(s);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.spec.mul(s, a))
            .collect::<Result<_>>()?;
        Ok(GroupRingElement {
            spec: self.spec,
            coeffs,
        })
    }

    /// Cyclic convolution: the coefficient of x^k in the product is the sum
    /// of a_i * b_j over i + j = k (mod n).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.order();
        let mut acc = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = (i + j) % n;
                acc[k] = self.spec.add(acc[k], self.spec.mul(a, b)?)?;
            }
        }
        Ok(GroupRingElement {
            spec: self.spec,
            coeffs: acc,
        })
    }

    /// Apply the linear extension of the group endomorphism x -> x^exponent:
    /// each basis term x^i maps to x^(exponent * i mod n), and coefficients
    /// landing on the same power accumulate.
    pub fn apply_endomorphism(&self, exponent: usize) -> Result<Self> {
        let n = self.order();
        let e = exponent % n;
        let mut acc = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let j = (e * i) % n;
            acc[j] = self.spec.add(acc[j], a)?;
        }
        Ok(GroupRingElement {
            spec: self.spec,
            coeffs: acc,
        })
    }

    /// True for elements r * x^g with r a unit of the coefficient ring.
    /// These are invertible in `R[C_n]` with inverse r^(-1) * x^(-g).
    pub fn is_trivial_unit(&self) -> bool {
        match self
            .coeffs
            .iter()
            .filter(|&&a| a != 0)
            .collect::<Vec<_>>()
            .as_slice()
        {
            [&single] => self.spec.is_unit(single),
            _ => false,
        }
    }

    /// Wire format: comma-separated coefficients, index 0 first.
    pub fn to_coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse the wire format produced by [`to_coeff_string`]; the list must
    /// contain exactly `order` integers.
    ///
    /// [`to_coeff_string`]: GroupRingElement::to_coeff_string
    pub fn parse_coeffs(spec: RingSpec, order: usize, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != order {
            return Err(Error::ParseCoeffs(format!(
                "expected {order} coefficients, found {}",
                parts.len()
            )));
        }
        let coeffs = parts
            .iter()
            .map(|p| {
                p.parse::<i64>()
                    .map_err(|_| Error::ParseCoeffs(format!("bad integer {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(spec, &coeffs)
    }
}

impl fmt::Display for GroupRingElement {
    /// Human-readable polynomial form, e.g. `1 - x^2 + 3x^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (sign, magnitude) = if a < 0 { ("-", -a) } else { ("+", a) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match (magnitude, i) {
                (_, 0) => write!(f, "{magnitude}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{i}")?,
                (_, 1) => write!(f, "{magnitude}x")?,
                (_, _) => write!(f, "{magnitude}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// A pair of group-endomorphism exponents: sigma sends x to x^sigma_exponent
/// and tau sends x to x^tau_exponent.
///
/// The derived quantities drive everything downstream: the shift
/// v = tau_exponent - sigma_exponent (mod n), the class count d = gcd(v, n)
/// (with gcd(0, n) = n), and the class size m = n / d. Indices of `0..n`
/// split into d residue classes mod d, each of size m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EndoPair {
    order: usize,
    sigma: usize,
    tau: usize,
}

impl EndoPair {
    /// Build a pair for `C_order`; the exponents may be any integers and are
    /// reduced mod the order.
    pub fn new(order: usize, sigma: i64, tau: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let n = order as i64;
        Ok(EndoPair {
            order,
            sigma: sigma.rem_euclid(n) as usize,
            tau: tau.rem_euclid(n) as usize,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Exponent u with sigma(x) = x^u.
    pub fn sigma_exponent(&self) -> usize {
        self.sigma
    }

    /// Exponent w with tau(x) = x^w.
    pub fn tau_exponent(&self) -> usize {
        self.tau
    }

    /// The twist shift v = tau_exponent - sigma_exponent (mod n); zero
    /// exactly when sigma = tau.
    pub fn shift(&self) -> usize {
        (self.tau + self.order - self.sigma) % self.order
    }

    pub fn sigma_equals_tau(&self) -> bool {
        self.shift() == 0
    }

    /// d = gcd(shift, order), using gcd(0, n) = n.
    pub fn class_count(&self) -> usize {
        gcd(self.shift() as u64, self.order as u64) as usize
    }

    /// m = order / class_count.
    pub fn class_size(&self) -> usize {
        self.order / self.class_count()
    }

    /// The element (tau - sigma)(x) = x^tau_exponent - x^sigma_exponent;
    /// zero when sigma = tau.
    pub fn tau_minus_sigma_of_x(&self, spec: RingSpec) -> Result<GroupRingElement> {
        let plus = GroupRingElement::monomial(spec, self.order, self.tau as i64, 1)?;
        let minus = GroupRingElement::monomial(spec, self.order, self.sigma as i64, -1)?;
        plus.add(&minus)
    }

    /// The element (sigma - tau)(x) = x^sigma_exponent - x^tau_exponent.
    pub fn sigma_minus_tau_of_x(&self, spec: RingSpec) -> Result<GroupRingElement> {
        self.tau_minus_sigma_of_x(spec)?.neg()
    }
}

impl fmt::Display for EndoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(x -> x^{}, x -> x^{}) on C_{}",
            self.sigma, self.tau, self.order
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(q: u64, coeffs: &[i64]) -> GroupRingElement {
        GroupRingElement::from_coeffs(RingSpec::new(q).unwrap(), coeffs).unwrap()
    }

    #[test]
    fn componentwise_examples() {
        // (1 + x) + (x + x^2) = 1 + x^2 over Z/2, n = 3
        let sum = el(2, &[1, 1, 0]).add(&el(2, &[0, 1, 1])).unwrap();
        assert_eq!(sum, el(2, &[1, 0, 1]));

        // -(1 - x^2) = -1 + x^2 over Z, n = 8
        let neg = el(0, &[1, 0, -1, 0, 0, 0, 0, 0]).neg().unwrap();
        assert_eq!(neg, el(0, &[-1, 0, 1, 0, 0, 0, 0, 0]));

        // 2 * (1 + x) = 2 + 2x over Z/4, n = 2
        let doubled = el(4, &[1, 1]).scalar_mul(2).unwrap();
        assert_eq!(doubled, el(4, &[2, 2]));
    }

    #[test]
    fn mismatches_are_rejected() {
        assert!(matches!(
            el(2, &[1, 0]).add(&el(3, &[1, 0])),
            Err(Error::SpecMismatch(..))
        ));
        assert!(matches!(
            el(2, &[1, 0]).mul(&el(2, &[1, 0, 0])),
            Err(Error::OrderMismatch(2, 3))
        ));
    }

    #[test]
    fn convolution_examples() {
        // (1 + x + x^2)(x^3 + x^5) = 1 + x + x^3 + x^4 over Z/2, n = 6
        let p = el(2, &[1, 1, 1, 0, 0, 0])
            .mul(&el(2, &[0, 0, 0, 1, 0, 1]))
            .unwrap();
        assert_eq!(p, el(2, &[1, 1, 0, 1, 1, 0]));

        // x^4 (x^4 - x^6) = 1 - x^2 over Z, n = 8
        let p = el(0, &[0, 0, 0, 0, 1, 0, 0, 0])
            .mul(&el(0, &[0, 0, 0, 0, 1, 0, -1, 0]))
            .unwrap();
        assert_eq!(p, el(0, &[1, 0, -1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn endomorphism_examples() {
        // x -> x^3 sends x to x^3 on C_6
        let x = GroupRingElement::monomial(RingSpec::integers(), 6, 1, 1).unwrap();
        assert_eq!(
            x.apply_endomorphism(3).unwrap(),
            GroupRingElement::monomial(RingSpec::integers(), 6, 3, 1).unwrap()
        );

        // The zero exponent collapses everything onto x^0.
        let a = el(0, &[1, 1, 1]);
        assert_eq!(a.apply_endomorphism(0).unwrap(), el(0, &[3, 0, 0]));

        // Exponent 1 is the identity map.
        let b = el(6, &[5, 0, 2, 3, 0, 4]);
        assert_eq!(b.apply_endomorphism(1).unwrap(), b);
    }

    #[test]
    fn trivial_unit_examples() {
        assert!(el(2, &[1, 0, 0, 0]).is_trivial_unit());
        assert!(!el(2, &[1, 1, 0, 0]).is_trivial_unit());
        assert!(!el(6, &[0, 0, 0, 2]).is_trivial_unit()); // 2 is not a unit mod 6
        assert!(el(6, &[0, 0, 0, 5]).is_trivial_unit());
        assert!(!el(0, &[0, 0]).is_trivial_unit());
        assert!(el(0, &[0, -1]).is_trivial_unit());
    }

    #[test]
    fn tau_minus_sigma_examples() {
        let pair = EndoPair::new(8, 4, 6).unwrap();
        assert_eq!(
            pair.tau_minus_sigma_of_x(RingSpec::integers()).unwrap(),
            el(0, &[0, 0, 0, 0, -1, 0, 1, 0])
        );

        let pair = EndoPair::new(6, 3, 5).unwrap();
        assert_eq!(
            pair.tau_minus_sigma_of_x(RingSpec::modular(2).unwrap())
                .unwrap(),
            el(2, &[0, 0, 0, 1, 0, 1])
        );

        let same = EndoPair::new(5, 2, 2).unwrap();
        assert!(same
            .tau_minus_sigma_of_x(RingSpec::integers())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn endo_pair_derived_quantities() {
        let pair = EndoPair::new(8, 4, 6).unwrap();
        assert_eq!(pair.shift(), 2);
        assert_eq!(pair.class_count(), 2);
        assert_eq!(pair.class_size(), 4);

        // sigma = tau: shift 0, d = n, m = 1
        let same = EndoPair::new(6, 2, 2).unwrap();
        assert_eq!(same.shift(), 0);
        assert_eq!(same.class_count(), 6);
        assert_eq!(same.class_size(), 1);

        // exponents reduce mod n
        let wrapped = EndoPair::new(6, -1, 11).unwrap();
        assert_eq!(wrapped.sigma_exponent(), 5);
        assert_eq!(wrapped.tau_exponent(), 5);
    }

    #[test]
    fn display_forms() {
        assert_eq!(el(0, &[1, 0, -1, 0]).to_string(), "1 - x^2");
        assert_eq!(el(0, &[0, 2, 0, 1]).to_string(), "2x + x^3");
        assert_eq!(el(0, &[0, 0]).to_string(), "0");
        assert_eq!(el(0, &[-1, 1]).to_string(), "-1 + x");
        assert_eq!(el(0, &[1, 0, -1, 0]).to_coeff_string(), "1,0,-1,0");
    }

    #[test]
    fn parse_rejects_bad_input() {
        let spec = RingSpec::integers();
        assert!(matches!(
            GroupRingElement::parse_coeffs(spec, 3, "1,2"),
            Err(Error::ParseCoeffs(_))
        ));
        assert!(matches!(
            GroupRingElement::parse_coeffs(spec, 2, "1,zebra"),
            Err(Error::ParseCoeffs(_))
        ));
        assert_eq!(
            GroupRingElement::parse_coeffs(RingSpec::modular(5).unwrap(), 3, "-1, 7, 0").unwrap(),
            el(5, &[4, 2, 0])
        );
    }

    fn arb_spec() -> impl Strategy<Value = RingSpec> {
        prop_oneof![Just(0u64), Just(2), Just(3), Just(4), Just(6), Just(97)]
            .prop_map(|q| RingSpec::new(q).unwrap())
    }

    fn arb_element(spec: RingSpec, n: usize) -> impl Strategy<Value = GroupRingElement> {
        proptest::collection::vec(-50i64..50, n)
            .prop_map(move |coeffs| GroupRingElement::from_coeffs(spec, &coeffs).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (GroupRingElement, GroupRingElement, GroupRingElement)>
    {
        (arb_spec(), 1usize..=8).prop_flat_map(|(spec, n)| {
            (
                arb_element(spec, n),
                arb_element(spec, n),
                arb_element(spec, n),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_is_commutative_associative_distributive((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.mul(&b)?, b.mul(&a)?);
            prop_assert_eq!(a.mul(&b)?.mul(&c)?, a.mul(&b.mul(&c)?)?);
            prop_assert_eq!(
                a.mul(&b.add(&c)?)?,
                a.mul(&b)?.add(&a.mul(&c)?)?
            );
        }

        #[test]
        fn one_is_the_identity((a, _, _) in arb_triple()) {
            let one = GroupRingElement::one(a.spec(), a.order())?;
            prop_assert_eq!(a.mul(&one)?, a);
        }

        #[test]
        fn endomorphisms_are_ring_maps((a, b, _) in arb_triple()) {
            let n = a.order();
            let one = GroupRingElement::one(a.spec(), n)?;
            for e in 0..n {
                prop_assert_eq!(
                    a.mul(&b)?.apply_endomorphism(e)?,
                    a.apply_endomorphism(e)?.mul(&b.apply_endomorphism(e)?)?
                );
                prop_assert_eq!(one.apply_endomorphism(e)?, one.clone());
                for f in 0..n {
                    prop_assert_eq!(
                        a.apply_endomorphism(f)?.apply_endomorphism(e)?,
                        a.apply_endomorphism((e * f) % n)?
                    );
                }
            }
        }

        #[test]
        fn coeff_string_round_trips((a, _, _) in arb_triple()) {
            let parsed = GroupRingElement::parse_coeffs(
                a.spec(),
                a.order(),
                &a.to_coeff_string(),
            )?;
            prop_assert_eq!(parsed, a);
        }
    }
}
