//! Closed-form spectra for the wheel-like graph families.
//!
//! Each function returns the exact symbolic eigenvalue multiset of the named
//! matrix. Entries are tagged with their provenance: `Published` for values
//! taken directly from the reference formulas, `Corrected` where the
//! reference list fails the trace/cardinality/oracle invariants and the
//! repaired value is used instead (see the individual notes).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::spectrum::{SpectralValue, Spectrum, SpectrumEntry};

fn check_mn(m: usize, n: usize) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "apex count must satisfy m >= 1, got m={m}"
        )));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must satisfy n >= 3, got n={n}"
        )));
    }
    Ok(())
}

/// Adjacency spectrum of the n-cycle: `2cos(2*pi*k/n)` for `k = 0..n`.
pub fn cycle_adjacency_spectrum(n: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must satisfy n >= 3, got n={n}"
        )));
    }
    let entries = (0..n as u64)
        .map(|k| SpectrumEntry::published(SpectralValue::cos_term(0, 1, n as u64, k), 1))
        .collect();
    Spectrum::new(entries, n)
}

/// The `-2 - 2cos(2*pi*k/n)` family shared by all distance spectra below,
/// `k = 1..n`, at the given multiplicity per k.
fn distance_cos_family(n: usize, mult: usize, entries: &mut Vec<SpectrumEntry>) {
    for k in 1..n as u64 {
        entries.push(SpectrumEntry::published(
            SpectralValue::cos_term(-2, -1, n as u64, k),
            mult,
        ));
    }
}

/// Distance spectrum of the generalized wheel (m pairwise non-adjacent
/// apexes joined to an n-cycle):
/// `{ -2^(m-1); (m+n-3) ± sqrt((m+n-3)^2 - (3mn-8m-4n+8));
///    -2-2cos(2*pi*k/n), k=1..n }`.
pub fn wheel_distance_spectrum(m: usize, n: usize) -> Result<Spectrum> {
    check_mn(m, n)?;
    egw_distance_spectrum(1, m, n)
}

/// Distance spectrum of the join of `a` disjoint m-vertex edgeless graphs
/// with an n-cycle; identical in shape to the wheel formula with `a*m`
/// apex vertices in total.
pub fn egw_distance_spectrum(a: usize, m: usize, n: usize) -> Result<Spectrum> {
    if a < 1 {
        return Err(Error::InvalidParameter(format!(
            "apex group count must satisfy a >= 1, got a={a}"
        )));
    }
    check_mn(m, n)?;
    let (am, ni) = ((a * m) as i128, n as i128);
    let half_trace = am + ni - 3;
    let disc = half_trace * half_trace - (3 * am * ni - 8 * am - 4 * ni + 8);
    let mut entries = vec![
        SpectrumEntry::published(SpectralValue::int(-2), a * m - 1),
        SpectrumEntry::published(
            SpectralValue::surd(BigInt::from(half_trace), BigInt::from(disc), 1),
            1,
        ),
    ];
    distance_cos_family(n, 1, &mut entries);
    Spectrum::new(entries, a * m + n)
}

/// Distance spectrum of the join of the balanced complete bipartite graph
/// on `p + p` vertices with an n-cycle:
/// `{ -2^(2p-2); p-2; -2-2cos(2*pi*k/n), k=1..n;
///    ((2n+3p-6) ± sqrt((2n+3p-6)^2 - 16pn + 48p + 16n - 32))/2 }`.
///
/// The `p-2` eigenvalue (the part-swap eigenvector of the bipartite block)
/// is missing from the reference list, which totals only `2p+n-1` values;
/// it is tagged `Corrected` and verified against the matrix oracle.
pub fn kpp_join_cycle_distance_spectrum(p: usize, n: usize) -> Result<Spectrum> {
    if p < 1 {
        return Err(Error::InvalidParameter(format!(
            "part size must satisfy p >= 1, got p={p}"
        )));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must satisfy n >= 3, got n={n}"
        )));
    }
    let (pi, ni) = (p as i128, n as i128);
    let half_trace = 2 * ni + 3 * pi - 6;
    let disc = half_trace * half_trace - 16 * pi * ni + 48 * pi + 16 * ni - 32;
    let mut entries = vec![
        SpectrumEntry::published(SpectralValue::int(-2), 2 * p - 2),
        SpectrumEntry::corrected(SpectralValue::int(pi as i64 - 2), 1),
        SpectrumEntry::published(
            SpectralValue::surd(BigInt::from(half_trace), BigInt::from(disc), 2),
            1,
        ),
    ];
    distance_cos_family(n, 1, &mut entries);
    Spectrum::new(entries, 2 * p + n)
}

/// Distance spectrum of the dumbbell (two generalized wheels with matched
/// apexes):
/// `{ -4^(m-1); 0^(m-1); (-(m+n+4) ± sqrt((m+n+4)^2 - 16m))/2;
///    ((5m+5n-8) ± sqrt(25m^2 + 25n^2 - 14mn))/2;
///    -2-2cos(2*pi*k/n) twice each, k=1..n }`.
///
/// The reference prints the cosine index range as `k=2..n+1`, which swaps a
/// `k=1` pair for a spurious `-4` pair and breaks the zero-trace and oracle
/// invariants; the range used here is `k=1..n`, tagged `Corrected`.
pub fn dumbbell_distance_spectrum(m: usize, n: usize) -> Result<Spectrum> {
    check_mn(m, n)?;
    let (mi, ni) = (m as i128, n as i128);
    let s1 = -(mi + ni + 4);
    let d1 = (mi + ni + 4) * (mi + ni + 4) - 16 * mi;
    let s2 = 5 * mi + 5 * ni - 8;
    let d2 = 25 * mi * mi + 25 * ni * ni - 14 * mi * ni;
    let mut entries = vec![
        SpectrumEntry::published(SpectralValue::int(-4), m - 1),
        SpectrumEntry::published(SpectralValue::int(0), m - 1),
        SpectrumEntry::published(
            SpectralValue::surd(BigInt::from(s1), BigInt::from(d1), 2),
            1,
        ),
        SpectrumEntry::published(
            SpectralValue::surd(BigInt::from(s2), BigInt::from(d2), 2),
            1,
        ),
    ];
    let before = entries.len();
    distance_cos_family(n, 2, &mut entries);
    for e in entries[before..].iter_mut() {
        e.provenance = crate::spectrum::Provenance::Corrected;
    }
    Spectrum::new(entries, 2 * (m + n))
}

/// Distance-Laplacian spectrum of the dumbbell:
/// `{ 0; 3m+3n; (5m+3n)^(m-1); (5m+3n-4)^(m-1);
///    (3m+5n-2) + 2cos(2*pi*k/n) twice each, k=1..n;
///    ((9m+9n-4) ± sqrt((3m-3n-4)^2 + 4mn))/2 }`.
pub fn dumbbell_distance_laplacian_spectrum(m: usize, n: usize) -> Result<Spectrum> {
    check_mn(m, n)?;
    let (mi, ni) = (m as i128, n as i128);
    let cos_shift = 3 * mi + 5 * ni - 2;
    let s = 9 * mi + 9 * ni - 4;
    let d = (3 * mi - 3 * ni - 4) * (3 * mi - 3 * ni - 4) + 4 * mi * ni;
    let mut entries = vec![
        SpectrumEntry::published(SpectralValue::int(0), 1),
        SpectrumEntry::published(SpectralValue::int(3 * (mi + ni) as i64), 1),
        SpectrumEntry::published(SpectralValue::int((5 * mi + 3 * ni) as i64), m - 1),
        SpectrumEntry::published(SpectralValue::int((5 * mi + 3 * ni - 4) as i64), m - 1),
        SpectrumEntry::published(
            SpectralValue::surd(BigInt::from(s), BigInt::from(d), 2),
            1,
        ),
    ];
    for k in 1..n as u64 {
        entries.push(SpectrumEntry::published(
            SpectralValue::cos_term(BigInt::from(cos_shift), 1, n as u64, k),
            2,
        ));
    }
    Spectrum::new(entries, 2 * (m + n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_poly;
    use crate::graph::{distance_laplacian, distance_matrix, dumbbell, generalized_wheel};
    use crate::jacobi::{float_eigenvalues, DEFAULT_TOL};
    use crate::poly::integer_roots;
    use num_traits::Zero;

    fn ints(s: &Spectrum) -> Vec<(i64, usize)> {
        s.integer_multiset()
            .into_iter()
            .map(|(v, m)| (i64::try_from(v).unwrap(), m))
            .collect()
    }

    #[test]
    fn cycle_adjacency_known_values() {
        let s = cycle_adjacency_spectrum(4).unwrap();
        assert_eq!(ints(&s), vec![(-2, 1), (0, 2), (2, 1)]);
        let s = cycle_adjacency_spectrum(3).unwrap();
        assert_eq!(ints(&s), vec![(-1, 2), (2, 1)]);
        let s = cycle_adjacency_spectrum(6).unwrap();
        assert_eq!(ints(&s), vec![(-2, 1), (-1, 2), (1, 2), (2, 1)]);
        assert!(cycle_adjacency_spectrum(2).is_err());
    }

    #[test]
    fn wheel_4_3_is_integral() {
        let s = wheel_distance_spectrum(4, 3).unwrap();
        assert_eq!(s.order(), 7);
        assert_eq!(ints(&s), vec![(-2, 3), (-1, 2), (0, 1), (8, 1)]);
        assert!(s.is_integral().integral);
        assert!(s.exact_sum().unwrap().is_zero());
    }

    #[test]
    fn wheel_1_3_is_complete_graph_spectrum() {
        let s = wheel_distance_spectrum(1, 3).unwrap();
        assert_eq!(ints(&s), vec![(-1, 3), (3, 1)]);
        assert!(s.is_integral().integral);
    }

    #[test]
    fn wheel_2_4_is_integral() {
        let s = wheel_distance_spectrum(2, 4).unwrap();
        assert!(s.is_integral().integral);
        assert!(s.exact_sum().unwrap().is_zero());
        assert_eq!(ints(&s), vec![(-2, 3), (0, 2), (6, 1)]);
    }

    #[test]
    fn wheel_5_cycle_is_never_integral() {
        for m in 1..10 {
            let s = wheel_distance_spectrum(m, 5).unwrap();
            assert!(!s.is_integral().integral, "m={m}");
        }
    }

    #[test]
    fn egw_collapses_to_wheel() {
        for (m, n) in [(4, 6), (2, 3), (3, 5)] {
            let e = egw_distance_spectrum(1, m, n).unwrap();
            let w = wheel_distance_spectrum(m, n).unwrap();
            assert_eq!(e, w);
        }
        let e = egw_distance_spectrum(2, 2, 3).unwrap();
        assert_eq!(ints(&e), vec![(-2, 3), (-1, 2), (0, 1), (8, 1)]);
    }

    #[test]
    fn egw_2_6_6_is_integral() {
        let s = egw_distance_spectrum(2, 6, 6).unwrap();
        assert!(s.is_integral().integral);
        assert!(s.exact_sum().unwrap().is_zero());
    }

    #[test]
    fn kpp_1_3_is_complete_graph_on_five() {
        let s = kpp_join_cycle_distance_spectrum(1, 3).unwrap();
        assert_eq!(ints(&s), vec![(-1, 4), (4, 1)]);
        assert!(s.is_integral().integral);
    }

    #[test]
    fn kpp_3_4_has_corrected_part_swap_eigenvalue() {
        let s = kpp_join_cycle_distance_spectrum(3, 4).unwrap();
        assert_eq!(s.order(), 10);
        // -2 from the bipartite block (x4) and cosines (x2); 0 from k=2; 1 = p-2
        assert_eq!(ints(&s), vec![(-2, 6), (0, 1), (1, 1)]);
        assert!(!s.is_integral().integral);
        assert!(s.exact_sum().unwrap().is_zero());
        // the corrected eigenvalue is present in the exact matrix spectrum
        let g = crate::graph::join(
            &crate::graph::complete_bipartite(3, 3).unwrap(),
            &crate::graph::cycle(4).unwrap(),
        );
        let fact = integer_roots(&char_poly(&distance_matrix(&g).unwrap())).unwrap();
        assert_eq!(fact.multiplicity(&BigInt::from(1)), 1);
        assert_eq!(
            fact.remainder,
            crate::poly::IntPolynomial::from_i64(&[4, -11, 1])
        );
    }

    #[test]
    fn dumbbell_2_3_matches_matrix_oracle() {
        let s = dumbbell_distance_spectrum(2, 3).unwrap();
        assert_eq!(s.order(), 10);
        assert_eq!(ints(&s), vec![(-8, 1), (-4, 1), (-1, 5), (0, 1)]);
        assert!(s.exact_sum().unwrap().is_zero());
        assert!(!s.is_integral().integral);
        let g = dumbbell(2, 3).unwrap();
        let d = distance_matrix(&g).unwrap();
        let want = float_eigenvalues(&d, DEFAULT_TOL).unwrap();
        let got = s.numeric_values();
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-8, "{g} vs {w}");
        }
        let fact = integer_roots(&char_poly(&d)).unwrap();
        assert_eq!(
            fact.remainder,
            crate::poly::IntPolynomial::from_i64(&[12, -17, 1])
        );
    }

    #[test]
    fn dumbbell_cardinality() {
        let s = dumbbell_distance_spectrum(4, 3).unwrap();
        assert_eq!(s.order(), 14);
        assert_eq!(s.numeric_values().len(), 14);
    }

    #[test]
    fn dumbbell_laplacian_4_3_is_integral() {
        let s = dumbbell_distance_laplacian_spectrum(4, 3).unwrap();
        assert_eq!(
            ints(&s),
            vec![(0, 1), (21, 1), (24, 4), (25, 3), (26, 1), (29, 3), (33, 1)]
        );
        assert!(s.is_integral().integral);
        // exact sum equals the trace of the actual matrix
        let dl = distance_laplacian(&dumbbell(4, 3).unwrap()).unwrap();
        assert_eq!(s.exact_sum().unwrap(), dl.trace());
        let fact = integer_roots(&char_poly(&dl)).unwrap();
        assert_eq!(fact.remainder.degree(), Some(0));
        assert_eq!(fact.multiplicity(&BigInt::from(24)), 4);
        assert_eq!(fact.multiplicity(&BigInt::from(29)), 3);
    }

    #[test]
    fn closed_forms_match_float_oracle_spot_checks() {
        let cases: Vec<(Spectrum, crate::matrix::ExactMatrix)> = vec![
            (
                wheel_distance_spectrum(3, 5).unwrap(),
                distance_matrix(&generalized_wheel(3, 5).unwrap()).unwrap(),
            ),
            (
                dumbbell_distance_laplacian_spectrum(2, 5).unwrap(),
                distance_laplacian(&dumbbell(2, 5).unwrap()).unwrap(),
            ),
        ];
        for (spec, mat) in cases {
            let want = float_eigenvalues(&mat, DEFAULT_TOL).unwrap();
            let got = spec.numeric_values();
            assert_eq!(got.len(), want.len());
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-8, "{g} vs {w}");
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(wheel_distance_spectrum(0, 3).is_err());
        assert!(wheel_distance_spectrum(1, 2).is_err());
        assert!(egw_distance_spectrum(0, 1, 3).is_err());
        assert!(kpp_join_cycle_distance_spectrum(0, 3).is_err());
        assert!(dumbbell_distance_spectrum(1, 2).is_err());
        assert!(dumbbell_distance_laplacian_spectrum(0, 4).is_err());
    }
}
