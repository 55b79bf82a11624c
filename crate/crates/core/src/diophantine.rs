//! Small exact number-theory helpers used by the family searches: perfect
//! squares, divisor pairs, and right-triangle legs.

use num_bigint::BigInt;
use num_traits::Signed;

/// `Some(s)` with `s >= 0` and `s*s == n`, else `None`.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    perfect_sqrt(n).is_some()
}

/// All ordered factorizations `(d, n / d)` of a positive integer with
/// `d <= n / d`, ascending in `d`.
pub fn factor_pairs(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push((d, n / d));
        }
        d += 1;
    }
    out
}

/// All `(other_leg, hypotenuse)` pairs of Pythagorean triples having `leg`
/// as one leg: solutions of `h^2 - b^2 = leg^2` with `b >= 1`, ascending.
///
/// Factor form: `(h - b)(h + b) = leg^2`, so each divisor pair `(d, e)` of
/// `leg^2` with `d < e` and `d ≡ e (mod 2)` yields `b = (e - d)/2`,
/// `h = (e + d)/2`.
pub fn pythagorean_with_leg(leg: u64) -> Vec<(u64, u64)> {
    let sq = leg * leg;
    let mut out = Vec::new();
    for (d, e) in factor_pairs(sq) {
        if d == e || (e - d) % 2 != 0 {
            continue;
        }
        let b = (e - d) / 2;
        let h = (e + d) / 2;
        if b >= 1 {
            out.push((b, h));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(is_perfect_square(&BigInt::from(1)));
        assert!(is_perfect_square(&BigInt::from(144)));
        assert!(!is_perfect_square(&BigInt::from(2)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
        assert_eq!(perfect_sqrt(&BigInt::from(225)), Some(BigInt::from(15)));
    }

    #[test]
    fn factor_pairs_basic() {
        assert_eq!(factor_pairs(1), vec![(1, 1)]);
        assert_eq!(factor_pairs(15), vec![(1, 15), (3, 5)]);
        assert_eq!(
            factor_pairs(48),
            vec![(1, 48), (2, 24), (3, 16), (4, 12), (6, 8)]
        );
    }

    #[test]
    fn pythagorean_legs() {
        assert_eq!(pythagorean_with_leg(4), vec![(3, 5)]);
        assert_eq!(pythagorean_with_leg(3), vec![(4, 5)]);
        assert_eq!(pythagorean_with_leg(1), vec![]);
        assert_eq!(pythagorean_with_leg(2), vec![]);
        // 12: (5,13), (9,15), (16,20), (35,37)
        assert_eq!(
            pythagorean_with_leg(12),
            vec![(5, 13), (9, 15), (16, 20), (35, 37)]
        );
    }

    #[test]
    fn pythagorean_identity_holds() {
        for leg in 1u64..=60 {
            for (b, h) in pythagorean_with_leg(leg) {
                assert_eq!(leg * leg + b * b, h * h);
            }
        }
    }
}
