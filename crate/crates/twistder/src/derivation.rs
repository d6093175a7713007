//! Candidate twisted derivations of `R[C_n]` and the criteria that decide
//! whether a candidate is genuine.
//!
//! A (sigma, tau)-derivation is an R-linear map D with the twisted Leibniz
//! rule D(ab) = D(a) tau(b) + sigma(a) D(b). On a cyclic group ring such a
//! map is pinned down by the single value D(x): the images of the remaining
//! basis powers follow from the recursion D(x^k) = D(x^(k-1)) tau(x) +
//! sigma(x^(k-1)) D(x), which telescopes to the closed form
//!
//! ```text
//! D(x^k) = x^(u(k-1)) * (1 + x^v + ... + x^(v(k-1))) * D(x),   k >= 1,
//! ```
//!
//! with u the sigma exponent and v the twist shift. A [`DerivationCandidate`]
//! stores exactly that generator image and derives everything else, so
//! D(1) = 0 and the extension identities hold by construction. Extension
//! alone does not make a derivation, though: the wrap-around products
//! x^s x^t with s + t >= n impose one genuine constraint, and the three
//! `is_derivation_*` predicates decide it in equivalent ways.
//!
//! Throughout, d = gcd(v, n) and m = n / d; the i-th class sum adds the
//! coefficients of D(x) over the indices congruent to i mod d.

use crate::error::{Error, Result};
use crate::group_ring::{EndoPair, GroupRingElement};
use crate::ring::{RingSpec, Scalar};

/// A candidate (sigma, tau)-derivation, stored as its generator image D(x)
/// and extended to all of `R[C_n]` on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationCandidate {
    pair: EndoPair,
    image: GroupRingElement,
}

impl DerivationCandidate {
    /// Wrap a generator image. The image must live on the same group as the
    /// pair, and for the trivial group it must be zero (x is the identity
    /// there, and derivations kill the identity).
    pub fn new(pair: EndoPair, image: GroupRingElement) -> Result<Self> {
        if pair.order() != image.order() {
            return Err(Error::OrderMismatch(pair.order(), image.order()));
        }
        if pair.order() == 1 && !image.is_zero() {
            return Err(Error::NonzeroImageOfIdentity);
        }
        Ok(DerivationCandidate { pair, image })
    }

    /// The nonzero derivation D(x) = 1 - x^v that exists whenever
    /// sigma != tau; it satisfies the Leibniz rule over every coefficient
    /// ring because the annihilator sum telescopes against it.
    pub fn canonical_nonzero(spec: RingSpec, pair: EndoPair) -> Result<Self> {
        if pair.sigma_equals_tau() {
            return Err(Error::ZeroShift);
        }
        let one = GroupRingElement::one(spec, pair.order())?;
        let shifted = GroupRingElement::monomial(spec, pair.order(), pair.shift() as i64, 1)?;
        Self::new(pair, one.sub(&shifted)?)
    }

    pub fn pair(&self) -> EndoPair {
        self.pair
    }

    pub fn spec(&self) -> RingSpec {
        self.image.spec()
    }

    pub fn order(&self) -> usize {
        self.pair.order()
    }

    /// The stored value D(x).
    pub fn generator_image(&self) -> &GroupRingElement {
        &self.image
    }

    /// D(x^k) for 0 <= k < n via the closed form; D(x^0) = 0.
    pub fn image_of_power(&self, k: usize) -> Result<GroupRingElement> {
        let n = self.order();
        debug_assert!(k < n);
        if k == 0 {
            return GroupRingElement::zero(self.spec(), n);
        }
        let u = self.pair.sigma_exponent();
        let v = self.pair.shift();
        // 1 + x^v + ... + x^(v(k-1)), collisions accumulating.
        let mut geometric = vec![0i64; n];
        let spec = self.spec();
        for j in 0..k {
            let e = (v * j) % n;
            geometric[e] = spec.add(geometric[e], 1)?;
        }
        let geometric = GroupRingElement::from_coeffs(spec, &geometric)?;
        let front = GroupRingElement::monomial(spec, n, (u * (k - 1)) as i64, 1)?;
        front.mul(&geometric)?.mul(&self.image)
    }

    /// Linear extension: D(sum a_k x^k) = sum a_k D(x^k).
    pub fn apply(&self, a: &GroupRingElement) -> Result<GroupRingElement> {
        if a.spec() != self.spec() {
            return Err(Error::SpecMismatch(
                a.spec().to_string(),
                self.spec().to_string(),
            ));
        }
        if a.order() != self.order() {
            return Err(Error::OrderMismatch(a.order(), self.order()));
        }
        let mut acc = GroupRingElement::zero(self.spec(), self.order())?;
        for (k, &coeff) in a.coeffs().iter().enumerate() {
            if coeff == 0 {
                continue;
            }
            acc = acc.add(&self.image_of_power(k)?.scalar_mul(coeff)?)?;
        }
        Ok(acc)
    }

    /// The d class sums of the generator image: entry i is the sum of the
    /// coefficients c_j of D(x) over j congruent to i mod d.
    pub fn class_sums(&self) -> Result<Vec<Scalar>> {
        let d = self.pair.class_count();
        let spec = self.spec();
        let mut sums = vec![0i64; d];
        for (j, &c) in self.image.coeffs().iter().enumerate() {
            sums[j % d] = spec.add(sums[j % d], c)?;
        }
        Ok(sums)
    }

    /// Class-sum criterion: D is a derivation iff d * s_i = 0 in R for every
    /// class sum s_i.
    pub fn is_derivation_by_class_sums(&self) -> Result<bool> {
        let spec = self.spec();
        let d = spec.canonical(self.pair.class_count() as i64);
        for s in self.class_sums()? {
            if spec.mul(d, s)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Annihilator criterion: D is a derivation iff
    /// (1 + x^v + x^2v + ... + x^(n-1)v) * D(x) = 0.
    pub fn is_derivation_by_annihilator(&self) -> Result<bool> {
        let n = self.order();
        let v = self.pair.shift();
        let spec = self.spec();
        let mut coeffs = vec![0i64; n];
        for i in 0..n {
            let e = (v * i) % n;
            coeffs[e] = spec.add(coeffs[e], 1)?;
        }
        let annihilator = GroupRingElement::from_coeffs(spec, &coeffs)?;
        Ok(annihilator.mul(&self.image)?.is_zero())
    }

    /// Brute-force criterion: check the twisted Leibniz rule
    /// D(x^s x^t) = D(x^s) tau(x^t) + sigma(x^s) D(x^t) on all n^2 basis
    /// pairs. This is the ground truth the faster criteria are tested
    /// against.
    pub fn is_derivation_by_leibniz(&self) -> Result<bool> {
        let n = self.order();
        let u = self.pair.sigma_exponent();
        let w = self.pair.tau_exponent();
        let spec = self.spec();
        let images: Vec<GroupRingElement> = (0..n)
            .map(|k| self.image_of_power(k))
            .collect::<Result<_>>()?;
        for s in 0..n {
            let sigma_xs = GroupRingElement::monomial(spec, n, ((u * s) % n) as i64, 1)?;
            for t in 0..n {
                let tau_xt = GroupRingElement::monomial(spec, n, ((w * t) % n) as i64, 1)?;
                let lhs = &images[(s + t) % n];
                let rhs = images[s].mul(&tau_xt)?.add(&sigma_xs.mul(&images[t])?)?;
                if *lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
