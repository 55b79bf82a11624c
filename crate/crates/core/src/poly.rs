//! Integer polynomials: exact arithmetic, integer-root extraction, and the
//! numeric root helper used when a factor has no integer roots.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty coefficient vector.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Multiply by the linear factor `(t - r)`.
    pub fn mul_linear(&self, r: &BigInt) -> IntPolynomial {
        self.mul(&IntPolynomial::new(vec![-r.clone(), BigInt::one()]))
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Synthetic division by `(t - r)`; `Some(quotient)` only when the
    /// division is exact, i.e. `r` is a root.
    pub fn divide_linear(&self, r: &BigInt) -> Option<IntPolynomial> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry;
            if k == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                carry = &v * r;
                quot[k - 1] = v;
            }
        }
        Some(IntPolynomial::new(quot))
    }

    /// Exact polynomial division: `Some(q)` iff `self == q * d`.
    pub fn divide_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let (dn, dd) = (self.coeffs.len(), d.coeffs.len());
        if dn < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(quot))
    }

    /// Content: gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        IntPolynomial::new(self.coeffs.iter().map(|a| a / &c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Integer roots with multiplicity plus the factor that carries no further
/// integer roots. `reconstruct()` gives back the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerRootFactorization {
    pub roots: BTreeMap<BigInt, usize>,
    pub remainder: IntPolynomial,
}

impl IntegerRootFactorization {
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut p = self.remainder.clone();
        for (r, &mult) in &self.roots {
            for _ in 0..mult {
                p = p.mul_linear(r);
            }
        }
        p
    }

    pub fn root_count(&self) -> usize {
        self.roots.values().sum()
    }

    pub fn multiplicity(&self, r: &BigInt) -> usize {
        self.roots.get(r).copied().unwrap_or(0)
    }
}

/// Remainder of `n` modulo a small positive divisor, without allocating.
fn rem_u64(n: &BigInt, d: u64) -> u64 {
    let (_, digits) = n.to_u64_digits();
    let mut rem: u128 = 0;
    for limb in digits.iter().rev() {
        rem = ((rem << 64) | u128::from(*limb)) % u128::from(d);
    }
    rem as u64
}

/// Upper bound on |root| for a nonzero polynomial: a Fujiwara-style bound
/// 2 * max_k (|a_{n-k}| / |a_n|)^(1/k), rounded up conservatively. Small in
/// practice (eigenvalues of our matrices are Gershgorin-bounded) even when
/// the constant term is astronomically large.
fn root_bound(p: &IntPolynomial) -> BigInt {
    let n = p.degree().expect("nonzero polynomial");
    let lead = p.leading().unwrap().abs();
    let mut best = BigInt::one();
    for k in 1..=n {
        let a = p.coeff(n - k).abs();
        if a.is_zero() {
            continue;
        }
        // ceil((a/lead)^(1/k)) <= nth_root(ceil(a/lead)) + 1
        let ratio = (&a + &lead - BigInt::one()) / &lead;
        let r = ratio.nth_root(k as u32) + BigInt::one();
        if r > best {
            best = r;
        }
    }
    best * BigInt::from(2)
}

const ROOT_SCAN_CAP: u64 = 50_000_000;

/// Peel off every integer root (with multiplicity) of `p`.
///
/// Candidates are divisors of the constant term (after stripping roots at
/// zero) no larger than the root bound; each is verified by exact evaluation
/// and removed by synthetic division. Errors on the zero polynomial.
pub fn integer_roots(p: &IntPolynomial) -> Result<IntegerRootFactorization> {
    if p.is_zero() {
        return Err(Error::InvalidInput(
            "zero polynomial: every integer is a root".into(),
        ));
    }
    let mut roots: BTreeMap<BigInt, usize> = BTreeMap::new();
    let mut cur = p.clone();

    // roots at zero
    let zeros = cur.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.insert(BigInt::zero(), zeros);
        cur = IntPolynomial::new(cur.coeffs[zeros..].to_vec());
    }

    if cur.degree() == Some(0) {
        return Ok(IntegerRootFactorization {
            roots,
            remainder: cur,
        });
    }

    let bound = root_bound(&cur);
    let bound = bound.to_u64().unwrap_or(u64::MAX);
    if bound > ROOT_SCAN_CAP {
        return Err(Error::InvalidInput(format!(
            "integer root bound {bound} exceeds the supported scan range"
        )));
    }
    let constant = cur.coeff(0); // nonzero by construction
    let mut candidates: Vec<u64> = (1..=bound).filter(|&d| rem_u64(&constant, d) == 0).collect();
    candidates.sort_unstable();

    for d in candidates {
        for cand in [BigInt::from(d), BigInt::from(-(d as i128))] {
            while cur.degree().unwrap_or(0) >= 1 && cur.eval(&cand).is_zero() {
                cur = cur.divide_linear(&cand).expect("verified root divides");
                *roots.entry(cand.clone()).or_insert(0) += 1;
            }
        }
    }

    Ok(IntegerRootFactorization {
        roots,
        remainder: cur,
    })
}

/// Primitive polynomial gcd via the subresultant pseudo-remainder sequence.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let (mut f, mut g) = if a.degree() >= b.degree() {
        (a.primitive(), b.primitive())
    } else {
        (b.primitive(), a.primitive())
    };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = r.primitive();
    }
    f.primitive()
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, exact over Z.
fn pseudo_rem(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let dg = g.degree().expect("nonzero divisor");
    let mut r = f.clone();
    let lc = g.leading().unwrap().clone();
    while let Some(dr) = r.degree() {
        if dr < dg {
            break;
        }
        let top = r.leading().unwrap().clone();
        let mut next = r.scale(&lc);
        let mut shift = vec![BigInt::zero(); dr - dg];
        shift.push(top);
        let sub = g.mul(&IntPolynomial::new(shift));
        next = next.add(&sub.scale(&BigInt::from(-1)));
        debug_assert!(next.degree().map_or(true, |d| d < dr));
        r = next;
    }
    r
}

/// Square-free decomposition (Yun): returns `[(g_1, 1), (g_2, 2), ...]` with
/// each `g_i` square-free and `p = content * prod g_i^i`.
pub fn square_free_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let p = p.primitive();
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let dp = p.derivative();
    let a0 = poly_gcd(&p, &dp);
    let mut b = p.divide_exact(&a0).expect("gcd divides").primitive();
    let mut c = dp.divide_exact(&a0).expect("gcd divides p'");
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let d = c.add(&b.derivative().scale(&BigInt::from(-1)));
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let g = poly_gcd(&b, &d);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        b = b.divide_exact(&g).expect("gcd divides").primitive();
        c = d.divide_exact(&g).expect("gcd divides d");
        i += 1;
    }
    out
}

/// All real roots of `p` (with multiplicity), as f64.
///
/// Multiplicities come from the exact square-free decomposition; roots of
/// each square-free factor are found numerically (Durand-Kerner on the
/// f64-scaled coefficients). Intended for residual factors of characteristic
/// polynomials of symmetric matrices, where every root is real.
pub fn real_roots(p: &IntPolynomial) -> Vec<f64> {
    let mut out = Vec::new();
    for (factor, mult) in square_free_decomposition(p) {
        for r in square_free_real_roots(&factor) {
            for _ in 0..mult {
                out.push(r);
            }
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

fn square_free_real_roots(p: &IntPolynomial) -> Vec<f64> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        let a = p.coeff(1).to_f64().unwrap();
        let b = p.coeff(0).to_f64().unwrap();
        return vec![-b / a];
    }
    let scale = p
        .coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap()
        .to_f64()
        .unwrap();
    let c: Vec<f64> = p.coeffs.iter().map(|v| v.to_f64().unwrap() / scale).collect();
    let eval = |z: (f64, f64)| -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for k in (0..c.len()).rev() {
            let nre = re * z.0 - im * z.1 + c[k];
            let nim = re * z.1 + im * z.0;
            re = nre;
            im = nim;
        }
        (re, im)
    };
    // Durand-Kerner from a non-real, non-root starting spiral.
    let mut zs: Vec<(f64, f64)> = (0..deg)
        .map(|k| {
            let ang = 0.4 + 2.2 * k as f64;
            let rad = 1.0 + 0.3 * k as f64 / deg as f64;
            (rad * ang.cos(), rad * ang.sin())
        })
        .collect();
    let lead = c[deg];
    for _ in 0..400 {
        let mut moved: f64 = 0.0;
        for i in 0..deg {
            let (mut dre, mut dim) = (lead, 0.0);
            for j in 0..deg {
                if i == j {
                    continue;
                }
                let (a, b) = (zs[i].0 - zs[j].0, zs[i].1 - zs[j].1);
                let nre = dre * a - dim * b;
                let nim = dre * b + dim * a;
                dre = nre;
                dim = nim;
            }
            let (pre, pim) = eval(zs[i]);
            let den = dre * dre + dim * dim;
            if den == 0.0 {
                continue;
            }
            let qre = (pre * dre + pim * dim) / den;
            let qim = (pim * dre - pre * dim) / den;
            zs[i].0 -= qre;
            zs[i].1 -= qim;
            moved = moved.max(qre.hypot(qim));
        }
        if moved < 1e-14 {
            break;
        }
    }
    let mut out: Vec<f64> = zs
        .iter()
        .filter(|z| z.1.abs() < 1e-7 * (1.0 + z.0.abs()))
        .map(|z| z.0)
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn eval_and_display() {
        let q = p(&[-2, -3, 0, 1]); // t^3 - 3t - 2
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::zero());
        assert_eq!(q.eval(&BigInt::from(3)), BigInt::from(16));
        assert_eq!(q.to_string(), "t^3 - 3*t - 2");
        assert_eq!(p(&[12, -17, 1]).to_string(), "t^2 - 17*t + 12");
    }

    #[test]
    fn linear_division_roundtrip() {
        let q = p(&[-2, -3, 0, 1]);
        let r = q.divide_linear(&BigInt::from(2)).unwrap();
        assert_eq!(r.mul_linear(&BigInt::from(2)), q);
        assert!(q.divide_linear(&BigInt::from(5)).is_none());
    }

    #[test]
    fn integer_roots_of_cubic() {
        // t^3 - 3t - 2 = (t - 2)(t + 1)^2
        let f = integer_roots(&p(&[-2, -3, 0, 1])).unwrap();
        assert_eq!(f.multiplicity(&BigInt::from(2)), 1);
        assert_eq!(f.multiplicity(&BigInt::from(-1)), 2);
        assert_eq!(f.remainder, IntPolynomial::one());
        assert_eq!(f.reconstruct(), p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn integer_roots_leaves_irreducible_remainder() {
        // (t^2 - 17t + 12) has no integer roots
        let f = integer_roots(&p(&[12, -17, 1])).unwrap();
        assert!(f.roots.is_empty());
        assert_eq!(f.remainder, p(&[12, -17, 1]));
        // t * (t^2 + 1)
        let f = integer_roots(&p(&[0, 1, 0, 1])).unwrap();
        assert_eq!(f.multiplicity(&BigInt::zero()), 1);
        assert_eq!(f.remainder, p(&[1, 0, 1]));
    }

    #[test]
    fn integer_roots_rejects_zero_polynomial() {
        assert!(integer_roots(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn integer_roots_of_constant() {
        let f = integer_roots(&p(&[7])).unwrap();
        assert!(f.roots.is_empty());
        assert_eq!(f.remainder, p(&[7]));
    }

    #[test]
    fn large_root_found() {
        // (t - 1000003)(t + 2)
        let q = p(&[1, 1]).mul_linear(&BigInt::from(1_000_003)).divide_linear(&BigInt::from(-1)).unwrap();
        let q = q.mul_linear(&BigInt::from(-2));
        let f = integer_roots(&q).unwrap();
        assert_eq!(f.multiplicity(&BigInt::from(1_000_003)), 1);
        assert_eq!(f.multiplicity(&BigInt::from(-2)), 1);
    }

    #[test]
    fn gcd_and_square_free() {
        // p = (t^2 + 3t + 1)^2 * (t - 4)
        let q = p(&[1, 3, 1]);
        let f = q.mul(&q).mul_linear(&BigInt::from(4));
        let g = poly_gcd(&f, &f.derivative());
        assert_eq!(g, q); // the repeated factor
        let dec = square_free_decomposition(&f);
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[-4, 1]), 1));
        assert_eq!(dec[1], (q, 2));
    }

    #[test]
    fn real_roots_with_multiplicity() {
        // (t^2 - 2)^2: roots +-sqrt(2), twice each
        let q = p(&[-2, 0, 1]);
        let roots = real_roots(&q.mul(&q));
        assert_eq!(roots.len(), 4);
        assert!((roots[0] + 2f64.sqrt()).abs() < 1e-9);
        assert!((roots[3] - 2f64.sqrt()).abs() < 1e-9);
        // t^2 + 1: no real roots
        assert!(real_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn divide_exact_checks_divisibility() {
        let a = p(&[-2, -3, 0, 1]);
        let b = p(&[1, 1]);
        let q = a.divide_exact(&b.mul(&b)).unwrap();
        assert_eq!(q, p(&[-2, 1]));
        assert!(a.divide_exact(&p(&[5, 1])).is_none());
    }
}
