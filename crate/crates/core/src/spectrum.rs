//! Symbolic eigenvalues and eigenvalue multisets.
//!
//! A `SpectralValue` is either an exact integer, a conjugate pair of
//! quadratic surds `(a ± sqrt(d))/q`, a shifted cosine `c ± 2cos(2πk/n)`, or
//! the root set of an integer polynomial with no integer roots. A `Spectrum`
//! is a multiset of such values whose total cardinality (counting both surd
//! branches and all polynomial roots) is pinned to the matrix order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diophantine::perfect_sqrt;
use crate::error::{Error, Result};
use crate::poly::{real_roots, IntPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralValue {
    /// An exact integer eigenvalue.
    Int(BigInt),
    /// The conjugate pair `(a + sqrt(d))/q` and `(a - sqrt(d))/q`;
    /// contributes two eigenvalues per unit of multiplicity.
    Surd { a: BigInt, d: BigInt, q: BigInt },
    /// `shift + sign * 2*cos(2*pi*k/n)`.
    CosTerm {
        shift: BigInt,
        sign: i8,
        n: u64,
        k: u64,
    },
    /// All roots of a polynomial that has no integer roots; contributes
    /// `degree` eigenvalues per unit of multiplicity.
    PolyRoots(IntPolynomial),
}

impl SpectralValue {
    pub fn int(v: impl Into<BigInt>) -> SpectralValue {
        SpectralValue::Int(v.into())
    }

    /// Conjugate surd pair `(a ± sqrt(d))/q`; requires `d >= 0`, `q > 0`.
    pub fn surd(a: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> SpectralValue {
        let (a, d, q) = (a.into(), d.into(), q.into());
        assert!(!d.is_negative(), "surd radicand must be nonnegative");
        assert!(q.is_positive(), "surd denominator must be positive");
        SpectralValue::Surd { a, d, q }
    }

    pub fn cos_term(shift: impl Into<BigInt>, sign: i8, n: u64, k: u64) -> SpectralValue {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        assert!(n >= 3, "cosine denominator must be at least 3");
        SpectralValue::CosTerm {
            shift: shift.into(),
            sign,
            n,
            k,
        }
    }

    /// How many eigenvalues one unit of multiplicity of this value carries.
    pub fn value_count(&self) -> usize {
        match self {
            SpectralValue::Int(_) | SpectralValue::CosTerm { .. } => 1,
            SpectralValue::Surd { .. } => 2,
            SpectralValue::PolyRoots(p) => p.degree().unwrap_or(0),
        }
    }

    /// `Some(2cos(2*pi*k/n))` when that number is an integer, decided by the
    /// reduced order of the angle (never by floating comparison).
    fn two_cos_integer(n: u64, k: u64) -> Option<i64> {
        let reduced = n / n.gcd(&(k % n));
        match reduced {
            1 => Some(2),
            2 => Some(-2),
            3 => Some(-1),
            4 => Some(0),
            6 => Some(1),
            _ => None,
        }
    }

    /// Rewrite as integers when possible: a surd pair splits into its two
    /// branches iff the radicand is a perfect square and both branches are
    /// divisible by the denominator; a cosine term collapses iff its angle
    /// has reduced order 1, 2, 3, 4, or 6.
    pub fn normalize(&self) -> Vec<SpectralValue> {
        match self {
            SpectralValue::Int(_) | SpectralValue::PolyRoots(_) => vec![self.clone()],
            SpectralValue::Surd { a, d, q } => match perfect_sqrt(d) {
                Some(s) => {
                    let hi = a + &s;
                    let lo = a - &s;
                    if (&hi % q).is_zero() && (&lo % q).is_zero() {
                        vec![
                            SpectralValue::Int(hi / q),
                            SpectralValue::Int(lo / q),
                        ]
                    } else {
                        vec![self.clone()]
                    }
                }
                None => vec![self.clone()],
            },
            SpectralValue::CosTerm { shift, sign, n, k } => {
                match Self::two_cos_integer(*n, *k) {
                    Some(c) => vec![SpectralValue::Int(shift + BigInt::from(i64::from(*sign) * c))],
                    None => vec![self.clone()],
                }
            }
        }
    }

    /// Numeric value(s): one for Int/CosTerm, both branches (descending) for
    /// a surd pair, every real root for a polynomial.
    pub fn numeric(&self) -> Vec<f64> {
        match self {
            SpectralValue::Int(v) => vec![v.to_f64().expect("integer fits in f64")],
            SpectralValue::Surd { a, d, q } => {
                let a = a.to_f64().unwrap();
                let d = d.to_f64().unwrap();
                let q = q.to_f64().unwrap();
                let r = d.sqrt();
                vec![(a + r) / q, (a - r) / q]
            }
            SpectralValue::CosTerm { shift, sign, n, k } => {
                let angle = 2.0 * std::f64::consts::PI * (*k as f64) / (*n as f64);
                vec![shift.to_f64().unwrap() + f64::from(*sign) * 2.0 * angle.cos()]
            }
            SpectralValue::PolyRoots(p) => real_roots(p),
        }
    }
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralValue::Int(v) => write!(f, "{v}"),
            SpectralValue::Surd { a, d, q } => {
                if q.is_one() {
                    write!(f, "{a} +/- sqrt({d})")
                } else {
                    write!(f, "({a} +/- sqrt({d}))/{q}")
                }
            }
            SpectralValue::CosTerm { shift, sign, n, k } => {
                let cos = format!("2*cos(2*pi*{k}/{n})");
                if shift.is_zero() {
                    if *sign == 1 {
                        write!(f, "{cos}")
                    } else {
                        write!(f, "-{cos}")
                    }
                } else if *sign == 1 {
                    write!(f, "{shift} + {cos}")
                } else {
                    write!(f, "{shift} - {cos}")
                }
            }
            SpectralValue::PolyRoots(p) => write!(f, "roots of {p}"),
        }
    }
}

/// Where a closed-form entry comes from: the reference formula as printed,
/// or a correction required by the trace/cardinality/oracle invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Published,
    Corrected,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Published => "published",
            Provenance::Corrected => "corrected",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub value: SpectralValue,
    pub multiplicity: usize,
    pub provenance: Provenance,
}

impl SpectrumEntry {
    pub fn published(value: SpectralValue, multiplicity: usize) -> SpectrumEntry {
        SpectrumEntry {
            value,
            multiplicity,
            provenance: Provenance::Published,
        }
    }

    pub fn corrected(value: SpectralValue, multiplicity: usize) -> SpectrumEntry {
        SpectrumEntry {
            value,
            multiplicity,
            provenance: Provenance::Corrected,
        }
    }
}

/// Eigenvalue multiset of a matrix of the given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    order: usize,
}

impl Spectrum {
    /// Entries with zero multiplicity are dropped; the remaining total
    /// cardinality must equal `order`.
    pub fn new(entries: Vec<SpectrumEntry>, order: usize) -> Result<Spectrum> {
        let entries: Vec<SpectrumEntry> = entries
            .into_iter()
            .filter(|e| e.multiplicity > 0 && e.value.value_count() > 0)
            .collect();
        let total: usize = entries
            .iter()
            .map(|e| e.multiplicity * e.value.value_count())
            .sum();
        if total != order {
            return Err(Error::InvalidInput(format!(
                "spectrum lists {total} eigenvalues but the matrix order is {order}"
            )));
        }
        Ok(Spectrum { entries, order })
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Same multiset with every normalizable value rewritten as integers.
    pub fn normalized(&self) -> Spectrum {
        let mut entries = Vec::new();
        for e in &self.entries {
            for v in e.value.normalize() {
                entries.push(SpectrumEntry {
                    value: v,
                    multiplicity: e.multiplicity,
                    provenance: e.provenance,
                });
            }
        }
        Spectrum {
            entries,
            order: self.order,
        }
    }

    /// Integer eigenvalues (after normalization) merged into a single
    /// value -> multiplicity map.
    pub fn integer_multiset(&self) -> BTreeMap<BigInt, usize> {
        let mut map = BTreeMap::new();
        for e in self.normalized().entries {
            if let SpectralValue::Int(v) = e.value {
                *map.entry(v).or_insert(0) += e.multiplicity;
            }
        }
        map
    }

    /// All eigenvalues as floats, ascending; length equals the order.
    pub fn numeric_values(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order);
        for e in &self.entries {
            let vals = e.value.numeric();
            for _ in 0..e.multiplicity {
                out.extend_from_slice(&vals);
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    }

    /// Exact sum of all eigenvalues.
    ///
    /// Surd pairs contribute `2a/q`; complete cosine families (every k in
    /// `1..n` once, or `0..n` once, at a common multiplicity) telescope via
    /// the vanishing full-period cosine sum; polynomial root sets contribute
    /// the negated subleading coefficient. Errors when a cosine family is
    /// incomplete or a contribution is not an exact integer.
    pub fn exact_sum(&self) -> Result<BigInt> {
        let mut sum = BigInt::zero();
        let mut cos_groups: BTreeMap<(BigInt, i8, u64), Vec<(u64, usize)>> = BTreeMap::new();
        for e in &self.entries {
            let mult = BigInt::from(e.multiplicity);
            match &e.value {
                SpectralValue::Int(v) => sum += v * &mult,
                SpectralValue::Surd { a, d: _, q } => {
                    let two_a = BigInt::from(2) * a;
                    let (quot, rem) = two_a.div_rem(q);
                    if !rem.is_zero() {
                        return Err(Error::InvalidInput(format!(
                            "surd pair sum {two_a}/{q} is not an integer"
                        )));
                    }
                    sum += quot * &mult;
                }
                SpectralValue::CosTerm { shift, sign, n, k } => {
                    cos_groups
                        .entry((shift.clone(), *sign, *n))
                        .or_default()
                        .push((*k, e.multiplicity));
                }
                SpectralValue::PolyRoots(p) => {
                    let deg = p.degree().unwrap_or(0);
                    if deg == 0 {
                        continue;
                    }
                    let lead = p.coeff(deg);
                    let sub = -p.coeff(deg - 1);
                    let (quot, rem) = sub.div_rem(&lead);
                    if !rem.is_zero() {
                        return Err(Error::InvalidInput(
                            "polynomial root sum is not an integer".into(),
                        ));
                    }
                    sum += quot * &mult;
                }
            }
        }
        for ((shift, sign, n), mut members) in cos_groups {
            members.sort_unstable();
            let mult = members[0].1;
            if members.iter().any(|&(_, m)| m != mult) {
                return Err(Error::InvalidInput(format!(
                    "cosine family over n={n} has mixed multiplicities"
                )));
            }
            let ks: Vec<u64> = members.iter().map(|&(k, _)| k).collect();
            let full: Vec<u64> = (0..n).collect();
            let punctured: Vec<u64> = (1..n).collect();
            let family_sum = if ks == punctured {
                // sum of 2cos(2*pi*k/n) over k=1..n-1 is -2
                &shift * BigInt::from(n - 1) + BigInt::from(-2i64 * i64::from(sign))
            } else if ks == full {
                &shift * BigInt::from(n)
            } else {
                return Err(Error::InvalidInput(format!(
                    "cosine family over n={n} is incomplete; cannot sum exactly"
                )));
            };
            sum += family_sum * BigInt::from(mult);
        }
        Ok(sum)
    }

    /// Integrality check with a witness: integral iff every entry
    /// normalizes to integers; otherwise names the first value that does
    /// not.
    pub fn is_integral(&self) -> IntegralityVerdict {
        for e in &self.entries {
            for v in e.value.normalize() {
                if !matches!(v, SpectralValue::Int(_)) {
                    return IntegralityVerdict {
                        integral: false,
                        witness: Some(v.to_string()),
                    };
                }
            }
        }
        IntegralityVerdict {
            integral: true,
            witness: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityVerdict {
    pub integral: bool,
    /// Display form of the first non-integral eigenvalue, when any.
    pub witness: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_normalization() {
        // (3 +/- 5)/2 -> {4, -1}
        let v = SpectralValue::surd(3, 25, 2);
        assert_eq!(
            v.normalize(),
            vec![SpectralValue::int(4), SpectralValue::int(-1)]
        );
        // degenerate double root
        let v = SpectralValue::surd(0, 0, 1);
        assert_eq!(
            v.normalize(),
            vec![SpectralValue::int(0), SpectralValue::int(0)]
        );
        // 241 is not a square
        let v = SpectralValue::surd(17, 241, 2);
        assert_eq!(v.normalize(), vec![v.clone()]);
        // square radicand but branches not divisible by q
        let v = SpectralValue::surd(1, 4, 2);
        assert_eq!(v.normalize(), vec![v.clone()]);
    }

    #[test]
    fn cosine_normalization() {
        // order 5 angle stays irrational
        let v = SpectralValue::cos_term(-2, 1, 5, 1);
        assert_eq!(v.normalize(), vec![v.clone()]);
        // order-6 angle: 2cos(pi/3) = 1
        let v = SpectralValue::cos_term(-2, -1, 6, 1);
        assert_eq!(v.normalize(), vec![SpectralValue::int(-3)]);
        // k = 0 gives 2
        let v = SpectralValue::cos_term(0, 1, 8, 0);
        assert_eq!(v.normalize(), vec![SpectralValue::int(2)]);
        // n=8, k=2: angle pi/2, cosine 0
        let v = SpectralValue::cos_term(5, 1, 8, 2);
        assert_eq!(v.normalize(), vec![SpectralValue::int(5)]);
        // n=8, k=1: reduced order 8, irrational
        let v = SpectralValue::cos_term(5, 1, 8, 1);
        assert_eq!(v.normalize(), vec![v.clone()]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(SpectralValue::int(-2).to_string(), "-2");
        assert_eq!(
            SpectralValue::surd(17, 241, 2).to_string(),
            "(17 +/- sqrt(241))/2"
        );
        assert_eq!(SpectralValue::surd(5, 49, 1).to_string(), "5 +/- sqrt(49)");
        assert_eq!(
            SpectralValue::cos_term(-2, -1, 7, 3).to_string(),
            "-2 - 2*cos(2*pi*3/7)"
        );
        assert_eq!(
            SpectralValue::PolyRoots(IntPolynomial::from_i64(&[12, -17, 1])).to_string(),
            "roots of t^2 - 17*t + 12"
        );
    }

    #[test]
    fn spectrum_cardinality_enforced() {
        let entries = vec![SpectrumEntry::published(SpectralValue::int(3), 1)];
        assert!(Spectrum::new(entries.clone(), 2).is_err());
        assert!(Spectrum::new(entries, 1).is_ok());
    }

    #[test]
    fn exact_sum_of_mixed_spectrum() {
        // {5 (x2), (3 +/- sqrt(2))/1 pair, cosine family k=1..3 over n=4 with shift -2}
        let entries = vec![
            SpectrumEntry::published(SpectralValue::int(5), 2),
            SpectrumEntry::published(SpectralValue::surd(3, 2, 1), 1),
            SpectrumEntry::published(SpectralValue::cos_term(-2, -1, 4, 1), 1),
            SpectrumEntry::published(SpectralValue::cos_term(-2, -1, 4, 2), 1),
            SpectrumEntry::published(SpectralValue::cos_term(-2, -1, 4, 3), 1),
        ];
        let s = Spectrum::new(entries, 7).unwrap();
        // 10 + 6 + ((4-1)*(-2) + 2) = 10 + 6 - 4 = 12
        assert_eq!(s.exact_sum().unwrap(), BigInt::from(12));
    }

    #[test]
    fn exact_sum_rejects_partial_cosine_family() {
        let entries = vec![
            SpectrumEntry::published(SpectralValue::cos_term(0, 1, 5, 1), 1),
            SpectrumEntry::published(SpectralValue::int(0), 4),
        ];
        let s = Spectrum::new(entries, 5).unwrap();
        assert!(s.exact_sum().is_err());
    }

    #[test]
    fn integrality_verdict_with_witness() {
        let s = Spectrum::new(
            vec![
                SpectrumEntry::published(SpectralValue::int(4), 1),
                SpectrumEntry::published(SpectralValue::surd(3, 25, 2), 1),
                SpectrumEntry::published(SpectralValue::cos_term(-2, -1, 5, 1), 2),
            ],
            5,
        )
        .unwrap();
        let v = s.is_integral();
        assert!(!v.integral);
        assert_eq!(v.witness.as_deref(), Some("-2 - 2*cos(2*pi*1/5)"));
        let t = Spectrum::new(
            vec![SpectrumEntry::published(SpectralValue::surd(3, 25, 2), 1)],
            2,
        )
        .unwrap();
        assert!(t.is_integral().integral);
    }

    #[test]
    fn integer_multiset_merges_sources() {
        // -1 arrives from a surd branch and from cosine terms (K_5 pattern)
        let s = Spectrum::new(
            vec![
                SpectrumEntry::published(SpectralValue::surd(3, 25, 2), 1),
                SpectrumEntry::corrected(SpectralValue::int(-1), 1),
                SpectrumEntry::published(SpectralValue::cos_term(-2, -1, 3, 1), 1),
                SpectrumEntry::published(SpectralValue::cos_term(-2, -1, 3, 2), 1),
            ],
            5,
        )
        .unwrap();
        let m = s.integer_multiset();
        assert_eq!(m.get(&BigInt::from(-1)).copied(), Some(4));
        assert_eq!(m.get(&BigInt::from(4)).copied(), Some(1));
    }

    #[test]
    fn numeric_values_sorted_and_sized() {
        let s = Spectrum::new(
            vec![
                SpectrumEntry::published(SpectralValue::surd(0, 8, 2), 1),
                SpectrumEntry::published(SpectralValue::int(1), 2),
            ],
            4,
        )
        .unwrap();
        let vals = s.numeric_values();
        assert_eq!(vals.len(), 4);
        assert!((vals[0] + 2f64.sqrt()).abs() < 1e-12);
        assert!((vals[3] - 2f64.sqrt()).abs() < 1e-12);
    }
}
