//! Answering the derivation problem for a given ring, order, and
//! endomorphism pair: are all twisted derivations inner?
//!
//! Two sufficient conditions settle most cases outright. If d = gcd(v, n) is
//! a unit of the coefficient ring, every derivation is inner; if the
//! characteristic divides d, outer derivations exist (a trivial-unit
//! generator image supplies one). Neither condition covers, say, q = 4 with
//! d = 2, so the remaining middle is resolved by exhaustive enumeration of
//! all q^n generator images. Over the integers no enumeration is possible or
//! needed: d * s = 0 forces s = 0, so the derivation criterion and the
//! innerness criterion coincide and every derivation is inner.

use crate::derivation::DerivationCandidate;
use crate::error::{Error, Result};
use crate::group_ring::{EndoPair, GroupRingElement};
use crate::inner::is_inner;
use crate::ring::{gcd, RingSpec};
use std::fmt;

/// Outcome of classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every derivation is inner.
    AllInner,
    /// Some derivation is not inner.
    HasOuter,
    /// The zero map is the only derivation (differentially trivial).
    ZeroOnly,
    /// Not settled analytically; enumeration required.
    Computed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::AllInner => "ALL_INNER",
            Verdict::HasOuter => "HAS_OUTER",
            Verdict::ZeroOnly => "ZERO_ONLY",
            Verdict::Computed => "COMPUTED",
        };
        write!(f, "{s}")
    }
}

/// The argument that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictBasis {
    /// gcd(v, n) is a unit of the coefficient ring.
    GcdInvertible,
    /// The characteristic divides gcd(v, n).
    CharDividesGcd,
    /// sigma = tau and the group order is a unit of the coefficient ring.
    OrderInvertibleSigmaEqTau,
    /// Characteristic zero: class sums vanish exactly or not at all.
    TorsionFree,
    /// Exhaustive enumeration of all generator images.
    Exhaustive,
}

impl fmt::Display for VerdictBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictBasis::GcdInvertible => "gcd_invertible",
            VerdictBasis::CharDividesGcd => "char_divides_gcd",
            VerdictBasis::OrderInvertibleSigmaEqTau => "order_invertible_sigma_eq_tau",
            VerdictBasis::TorsionFree => "torsion_free",
            VerdictBasis::Exhaustive => "exhaustive_enumeration",
        };
        write!(f, "{s}")
    }
}

/// Counts from an exhaustive run over all q^n generator images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivationCounts {
    /// Generator images passing the derivation criterion.
    pub total: u64,
    /// Derivations that are inner.
    pub inner: u64,
    /// Order of the quotient of derivations by inner derivations; the inner
    /// set is a subgroup under addition, so this is total / inner.
    pub outer_quotient_order: u64,
}

/// Classification outcome: the verdict, the argument behind it, counts when
/// enumeration ran, and a sample outer derivation when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub basis: VerdictBasis,
    pub counts: Option<DerivationCounts>,
    pub sample_outer: Option<DerivationCandidate>,
}

/// Settle the derivation problem analytically where the sufficient
/// conditions apply; return [`Verdict::Computed`] where they do not.
///
/// Priority: differential triviality (sigma = tau with the order a unit)
/// beats the blanket all-inner answers, and characteristic zero is fully
/// settled without enumeration.
pub fn dichotomy(spec: RingSpec, pair: EndoPair) -> Result<ClassificationReport> {
    let q = spec.characteristic();
    let d = pair.class_count() as u64;

    let report = |verdict, basis| ClassificationReport {
        verdict,
        basis,
        counts: None,
        sample_outer: None,
    };

    if q == 0 {
        // d * s = 0 over Z forces s = 0, so derivations and inner
        // derivations are cut out by the same equations.
        return Ok(if pair.sigma_equals_tau() {
            report(Verdict::ZeroOnly, VerdictBasis::TorsionFree)
        } else if d == 1 {
            report(Verdict::AllInner, VerdictBasis::GcdInvertible)
        } else {
            report(Verdict::AllInner, VerdictBasis::TorsionFree)
        });
    }

    if pair.sigma_equals_tau() && gcd(pair.order() as u64, q) == 1 {
        return Ok(report(
            Verdict::ZeroOnly,
            VerdictBasis::OrderInvertibleSigmaEqTau,
        ));
    }
    if gcd(d, q) == 1 {
        return Ok(report(Verdict::AllInner, VerdictBasis::GcdInvertible));
    }
    if d.is_multiple_of(q) {
        let sample = canonical_outer_example(spec, pair)?;
        return Ok(ClassificationReport {
            verdict: Verdict::HasOuter,
            basis: VerdictBasis::CharDividesGcd,
            counts: None,
            sample_outer: Some(sample),
        });
    }
    Ok(report(Verdict::Computed, VerdictBasis::Exhaustive))
}

/// Count derivations and inner derivations by iterating every one of the q^n
/// generator images in lexicographic coefficient order.
///
/// Requires a finite coefficient ring and q^n within `budget`. While the
/// space is small (at most 4096) each class-sum decision is cross-checked
/// against the Leibniz rule on all basis pairs.
pub fn enumerate(spec: RingSpec, pair: EndoPair, budget: u64) -> Result<ClassificationReport> {
    let q = spec.characteristic();
    if q == 0 {
        return Err(Error::InfiniteRing);
    }
    let n = pair.order();
    let space = (q as u128)
        .checked_pow(n as u32)
        .ok_or(Error::BudgetExceeded {
            space: u128::MAX,
            budget,
        })?;
    if space > budget as u128 {
        return Err(Error::BudgetExceeded { space, budget });
    }
    let cross_check = space <= 4096;

    let mut total = 0u64;
    let mut inner = 0u64;
    let mut sample_outer = None;

    let mut coeffs = vec![0i64; n];
    loop {
        // For the trivial group only the zero image is a representable
        // candidate; skip the rest.
        if let Ok(cand) =
            DerivationCandidate::new(pair, GroupRingElement::from_coeffs(spec, &coeffs)?)
        {
            let is_derivation = cand.is_derivation_by_class_sums()?;
            if cross_check && is_derivation != cand.is_derivation_by_leibniz()? {
                return Err(Error::Inconsistency("class-sum criterion vs Leibniz rule"));
            }
            if is_derivation {
                total += 1;
                if is_inner(&cand)? {
                    inner += 1;
                } else if sample_outer.is_none() {
                    sample_outer = Some(cand);
                }
            }
        }

        // Odometer step, last coefficient fastest: lexicographic order.
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < q as i64 {
                break;
            }
            coeffs[pos] = 0;
        }
        if coeffs.iter().all(|&c| c == 0) {
            break;
        }
    }

    if inner == 0 || !total.is_multiple_of(inner) {
        return Err(Error::Inconsistency(
            "inner derivations do not partition the total",
        ));
    }
    let outer_quotient_order = total / inner;
    let verdict = if outer_quotient_order > 1 {
        Verdict::HasOuter
    } else if total == 1 {
        Verdict::ZeroOnly
    } else {
        Verdict::AllInner
    };
    Ok(ClassificationReport {
        verdict,
        basis: VerdictBasis::Exhaustive,
        counts: Some(DerivationCounts {
            total,
            inner,
            outer_quotient_order,
        }),
        sample_outer,
    })
}

/// Hypotheses of the special-case consequences of the derivation criterion,
/// evaluated for a given ring and pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialCaseChecks {
    /// char(R) divides gcd(v, n): every generator image extends to a
    /// derivation.
    pub char_divides_gcd: bool,
    /// sigma = tau and char(R) divides n: same conclusion for the untwisted
    /// pair.
    pub char_divides_order_with_sigma_eq_tau: bool,
    /// gcd(v, n) is a unit: being a derivation already forces the class sums
    /// to vanish, so derivation = inner.
    pub gcd_is_unit: bool,
    /// sigma = tau and n is a unit: only the zero derivation exists.
    pub order_is_unit_with_sigma_eq_tau: bool,
}

/// Evaluate [`SpecialCaseChecks`], sanity-checking the two computable
/// consequences on the spot: a sample of images must satisfy the Leibniz
/// rule whenever `char_divides_gcd` holds, and a small enumeration must find
/// only the zero derivation whenever `order_is_unit_with_sigma_eq_tau`
/// holds.
pub fn special_case_checks(spec: RingSpec, pair: EndoPair) -> Result<SpecialCaseChecks> {
    let q = spec.characteristic();
    let n = pair.order();
    let d = pair.class_count() as u64;
    let same = pair.sigma_equals_tau();

    let unit_in_spec = |value: u64| {
        if q == 0 {
            value == 1
        } else {
            gcd(value, q) == 1
        }
    };

    let checks = SpecialCaseChecks {
        char_divides_gcd: q > 0 && d.is_multiple_of(q),
        char_divides_order_with_sigma_eq_tau: same && q > 0 && (n as u64).is_multiple_of(q),
        gcd_is_unit: unit_in_spec(d),
        order_is_unit_with_sigma_eq_tau: same && unit_in_spec(n as u64),
    };

    if checks.char_divides_gcd {
        // Sample a handful of images; each must pass the Leibniz rule.
        for seed in 0..5i64 {
            let coeffs: Vec<i64> = (0..n)
                .map(|i| spec.canonical(seed * 7 + i as i64))
                .collect();
            let coeffs = if n == 1 { vec![0] } else { coeffs };
            let cand =
                DerivationCandidate::new(pair, GroupRingElement::from_coeffs(spec, &coeffs)?)?;
            if !cand.is_derivation_by_leibniz()? {
                return Err(Error::Inconsistency(
                    "char | gcd must make every image a derivation",
                ));
            }
        }
    }
    if checks.order_is_unit_with_sigma_eq_tau {
        // q = 0 gives space 0 here and is settled by the criterion alone:
        // n * c_i = 0 with n a unit forces every coefficient to vanish.
        if let Some(space) = (q as u128)
            .checked_pow(n as u32)
            .filter(|&s| s > 0 && s <= 4096)
        {
            let report = enumerate(spec, pair, space as u64)?;
            if report.counts.map(|c| c.total) != Some(1) {
                return Err(Error::Inconsistency(
                    "unit order with sigma = tau must leave only the zero derivation",
                ));
            }
        }
    }
    Ok(checks)
}

/// The standard outer example when the characteristic divides d: the
/// generator image 1 is a trivial unit, so it passes the derivation
/// criterion (d * 1 = 0) while its class sum 1 is a unit, hence nonzero,
/// so it is not inner.
pub fn canonical_outer_example(spec: RingSpec, pair: EndoPair) -> Result<DerivationCandidate> {
    let q = spec.characteristic();
    if q == 0 || !(pair.class_count() as u64).is_multiple_of(q) {
        return Err(Error::Precondition("characteristic must divide gcd(v, n)"));
    }
    let image = GroupRingElement::one(spec, pair.order())?;
    let cand = DerivationCandidate::new(pair, image)?;
    if !cand.is_derivation_by_class_sums()? {
        return Err(Error::Inconsistency(
            "canonical outer example must be a derivation",
        ));
    }
    if is_inner(&cand)? {
        return Err(Error::Inconsistency(
            "canonical outer example must not be inner",
        ));
    }
    Ok(cand)
}
