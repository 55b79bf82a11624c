//! Characterization sweeps: each integrality theorem is reproduced twice,
//! once through the proof's Diophantine perfect-square conditions and once
//! by brute force on the exact matrices, and the two verdicts are compared
//! cell by cell.
//!
//! Where this toolkit's sweep disagrees with a reference hit list, the
//! discrepancy is stated in the report notes and the matrix oracle is the
//! arbiter; see the notes emitted by the individual searches.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::char_poly;
use crate::diophantine::{factor_pairs, is_perfect_square, pythagorean_with_leg};
use crate::error::{Error, Result};
use crate::graph::{self, distance_laplacian, distance_matrix, Graph};
use crate::poly::integer_roots;

/// One searched parameter box: the bound on the free parameter(s) and the
/// cycle lengths swept.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SearchRange {
    pub parameter: String,
    pub max: u64,
    pub n_values: Vec<u64>,
}

/// Result of one characterization sweep. `agreement` states that the
/// Diophantine and oracle pathways produced identical verdicts on every
/// cell of the oracle range. `elapsed` is measurement-only and excluded
/// from serialization so reports stay byte-identical across runs.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub theorem: String,
    pub tuple_labels: Vec<String>,
    pub diophantine_range: SearchRange,
    pub diophantine_hits: Vec<Vec<u64>>,
    pub oracle_range: SearchRange,
    pub oracle_hits: Vec<Vec<u64>>,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_condition_candidates: Option<Vec<Vec<u64>>>,
    pub notes: Vec<String>,
    #[serde(skip, default)]
    pub elapsed: Duration,
}

/// Cycle lengths for which `-2 - 2cos(2*pi*k/n)` is integral for every k;
/// all distance-integrality searches short-circuit to "not integral"
/// outside this set.
pub const INTEGRAL_CYCLE_LENGTHS: [u64; 3] = [3, 4, 6];

fn sort_tuples(tuples: &mut [Vec<u64>]) {
    tuples.sort_by(|x, y| (x.last(), &x[..]).cmp(&(y.last(), &y[..])));
}

fn square(v: i128) -> bool {
    v >= 0 && is_perfect_square(&BigInt::from(v))
}

/// Discriminant of the apex/cycle surd pair for the wheel-like join with
/// `t` apex vertices in total: `(t+n-3)^2 - (3tn - 8t - 4n + 8)`.
fn wheel_disc(t: u64, n: u64) -> i128 {
    let (t, n) = (t as i128, n as i128);
    let h = t + n - 3;
    h * h - (3 * t * n - 8 * t - 4 * n + 8)
}

fn wheel_is_integral(t: u64, n: u64) -> bool {
    INTEGRAL_CYCLE_LENGTHS.contains(&n) && square(wheel_disc(t, n))
}

/// Discriminant of the balanced-bipartite join surd pair:
/// `(2n+3p-6)^2 - 16pn + 48p + 16n - 32`.
fn kpp_disc(p: u64, n: u64) -> i128 {
    let (p, n) = (p as i128, n as i128);
    let h = 2 * n + 3 * p - 6;
    h * h - 16 * p * n + 48 * p + 16 * n - 32
}

fn kpp_is_integral(p: u64, n: u64) -> bool {
    INTEGRAL_CYCLE_LENGTHS.contains(&n) && square(kpp_disc(p, n))
}

/// The two square conditions of the dumbbell distance spectrum:
/// `(m+n+4)^2 - 16m` and `25m^2 + 25n^2 - 14mn`.
fn dumbbell_d_conditions(m: u64, n: u64) -> (bool, bool) {
    let (mi, ni) = (m as i128, n as i128);
    let s = mi + ni + 4;
    (
        square(s * s - 16 * mi),
        square(25 * mi * mi + 25 * ni * ni - 14 * mi * ni),
    )
}

fn dumbbell_d_is_integral(m: u64, n: u64) -> bool {
    if !INTEGRAL_CYCLE_LENGTHS.contains(&n) {
        return false;
    }
    let (c1, c2) = dumbbell_d_conditions(m, n);
    c1 && c2
}

/// Square condition of the dumbbell distance-Laplacian surd pair:
/// `(3m-3n-4)^2 + 4mn`.
fn dumbbell_dl_disc(m: u64, n: u64) -> i128 {
    let (mi, ni) = (m as i128, n as i128);
    let s = 3 * mi - 3 * ni - 4;
    s * s + 4 * mi * ni
}

fn dumbbell_dl_is_integral(m: u64, n: u64) -> bool {
    INTEGRAL_CYCLE_LENGTHS.contains(&n) && square(dumbbell_dl_disc(m, n))
}

/// Oracle verdict: all eigenvalues of the distance matrix are integers.
pub fn graph_is_d_integral(g: &Graph) -> Result<bool> {
    let fact = integer_roots(&char_poly(&distance_matrix(g)?))?;
    Ok(fact.remainder.degree() == Some(0))
}

/// Oracle verdict: all eigenvalues of the distance Laplacian are integers.
pub fn graph_is_dl_integral(g: &Graph) -> Result<bool> {
    let fact = integer_roots(&char_poly(&distance_laplacian(g)?))?;
    Ok(fact.remainder.degree() == Some(0))
}

/// Evaluate `verdict` on every cell in parallel and return the sorted hits.
fn oracle_sweep<F>(cells: Vec<Vec<u64>>, verdict: F) -> Result<Vec<Vec<u64>>>
where
    F: Fn(&[u64]) -> Result<bool> + Sync,
{
    let flagged: Result<Vec<(Vec<u64>, bool)>> = cells
        .into_par_iter()
        .map(|cell| {
            let hit = verdict(&cell)?;
            Ok((cell, hit))
        })
        .collect();
    let mut hits: Vec<Vec<u64>> = flagged?
        .into_iter()
        .filter_map(|(cell, hit)| hit.then_some(cell))
        .collect();
    sort_tuples(&mut hits);
    Ok(hits)
}

/// Diophantine and oracle verdicts agree when they pick the same subset of
/// the oracle cells.
fn pathways_agree<F>(cells: &[Vec<u64>], diophantine: F, oracle_hits: &[Vec<u64>]) -> bool
where
    F: Fn(&[u64]) -> bool,
{
    let dioph: BTreeSet<&Vec<u64>> = cells.iter().filter(|c| diophantine(c)).collect();
    let oracle: BTreeSet<&Vec<u64>> = oracle_hits.iter().collect();
    dioph == oracle
}

fn require_min(max: u64, min: u64, what: &str) -> Result<()> {
    if max < min {
        return Err(Error::InvalidParameter(format!(
            "{what} search bound must be at least {min} to cover every known hit, got {max}"
        )));
    }
    Ok(())
}

/// D-integral generalized wheels: sweep `m <= max_m` over cycle lengths
/// {3,4,6} with the perfect-square condition on the wheel discriminant, and
/// certify an `m <= 20, n <= 10` box (unless overridden) with the exact
/// matrix oracle.
pub fn find_d_integral_wheels(max_m: u64, oracle_max: Option<u64>) -> Result<TheoremReport> {
    require_min(max_m, 12, "wheel")?;
    let start = Instant::now();
    let mut dioph = Vec::new();
    for n in INTEGRAL_CYCLE_LENGTHS {
        for m in 1..=max_m {
            if wheel_is_integral(m, n) {
                dioph.push(vec![m, n]);
            }
        }
    }
    sort_tuples(&mut dioph);

    let om = oracle_max.unwrap_or(20).min(max_m);
    let oracle_n: Vec<u64> = (3..=10).collect();
    let cells: Vec<Vec<u64>> = oracle_n
        .iter()
        .flat_map(|&n| (1..=om).map(move |m| vec![m, n]))
        .collect();
    let oracle_hits = oracle_sweep(cells.clone(), |c| {
        graph_is_d_integral(&graph::generalized_wheel(c[0] as usize, c[1] as usize)?)
    })?;
    let agreement = pathways_agree(&cells, |c| wheel_is_integral(c[0], c[1]), &oracle_hits);

    Ok(TheoremReport {
        theorem: "1".into(),
        tuple_labels: vec!["m".into(), "n".into()],
        diophantine_range: SearchRange {
            parameter: "m".into(),
            max: max_m,
            n_values: INTEGRAL_CYCLE_LENGTHS.to_vec(),
        },
        diophantine_hits: dioph,
        oracle_range: SearchRange {
            parameter: "m".into(),
            max: om,
            n_values: oracle_n,
        },
        oracle_hits,
        agreement,
        first_condition_candidates: None,
        notes: vec![
            "all five reference cases are recovered; the reference sufficiency sentence names only four of them".into(),
        ],
        elapsed: start.elapsed(),
    })
}

/// D-integral joins of `a` apex groups of size `m` with a cycle: the
/// discriminant depends only on the product `a*m`, so hits are the ordered
/// factorizations of the wheel hits. Sweeps `a*m <= max_am`; oracle box
/// `a <= 3, m <= 5, n in 3..=6` by default.
pub fn find_d_integral_egw(max_am: u64, oracle_max: Option<u64>) -> Result<TheoremReport> {
    require_min(max_am, 12, "apex-total")?;
    let start = Instant::now();
    let mut dioph = Vec::new();
    for n in INTEGRAL_CYCLE_LENGTHS {
        for am in 1..=max_am {
            if !wheel_is_integral(am, n) {
                continue;
            }
            for (d, e) in factor_pairs(am) {
                dioph.push(vec![d, e, n]);
                if d != e {
                    dioph.push(vec![e, d, n]);
                }
            }
        }
    }
    sort_tuples(&mut dioph);

    let (oa, om) = match oracle_max {
        Some(k) => (k.min(max_am), k.min(max_am)),
        None => (3, 5),
    };
    let oracle_n: Vec<u64> = (3..=6).collect();
    let cells: Vec<Vec<u64>> = oracle_n
        .iter()
        .flat_map(|&n| {
            (1..=oa).flat_map(move |a| (1..=om).map(move |m| vec![a, m, n]))
        })
        .filter(|c| c[0] * c[1] <= max_am)
        .collect();
    let oracle_hits = oracle_sweep(cells.clone(), |c| {
        graph_is_d_integral(&graph::egw(c[0] as usize, c[1] as usize, c[2] as usize)?)
    })?;
    let agreement = pathways_agree(&cells, |c| wheel_is_integral(c[0] * c[1], c[2]), &oracle_hits);

    Ok(TheoremReport {
        theorem: "2".into(),
        tuple_labels: vec!["a".into(), "m".into(), "n".into()],
        diophantine_range: SearchRange {
            parameter: "a*m".into(),
            max: max_am,
            n_values: INTEGRAL_CYCLE_LENGTHS.to_vec(),
        },
        diophantine_hits: dioph,
        oracle_range: SearchRange {
            parameter: "a,m".into(),
            max: oa.max(om),
            n_values: oracle_n,
        },
        oracle_hits,
        agreement,
        first_condition_candidates: None,
        notes: vec![
            "hits are exactly the ordered factorizations (a, m) of the apex totals that make the wheel integral".into(),
        ],
        elapsed: start.elapsed(),
    })
}

/// D-integral balanced-bipartite joins: perfect-square sweep of the
/// discriminant for `p <= max_p`, `n in {3,4,6}`; the `n=3` case is solved
/// through the right-triangle legs of 4, mirroring the reference argument.
/// Oracle box `p <= 6, n in {3,4,6}` by default.
pub fn find_d_integral_kpp(max_p: u64, oracle_max: Option<u64>) -> Result<TheoremReport> {
    require_min(max_p, 4, "part-size")?;
    let start = Instant::now();
    let mut dioph = Vec::new();
    // n=3: 9p^2 + 16 = c^2, i.e. (3p, 4, c) is a Pythagorean triple
    for (b, _c) in pythagorean_with_leg(4) {
        if b % 3 == 0 && b / 3 >= 1 && b / 3 <= max_p {
            dioph.push(vec![b / 3, 3]);
        }
    }
    for n in [4u64, 6] {
        for p in 1..=max_p {
            if square(kpp_disc(p, n)) {
                dioph.push(vec![p, n]);
            }
        }
    }
    sort_tuples(&mut dioph);

    let om = oracle_max.unwrap_or(6).min(max_p);
    let oracle_n = INTEGRAL_CYCLE_LENGTHS.to_vec();
    let cells: Vec<Vec<u64>> = oracle_n
        .iter()
        .flat_map(|&n| (1..=om).map(move |p| vec![p, n]))
        .collect();
    let oracle_hits = oracle_sweep(cells.clone(), |c| {
        let g = graph::join(
            &graph::complete_bipartite(c[0] as usize, c[0] as usize)?,
            &graph::cycle(c[1] as usize)?,
        );
        graph_is_d_integral(&g)
    })?;
    let agreement = pathways_agree(&cells, |c| kpp_is_integral(c[0], c[1]), &oracle_hits);

    Ok(TheoremReport {
        theorem: "4".into(),
        tuple_labels: vec!["p".into(), "n".into()],
        diophantine_range: SearchRange {
            parameter: "p".into(),
            max: max_p,
            n_values: INTEGRAL_CYCLE_LENGTHS.to_vec(),
        },
        diophantine_hits: dioph,
        oracle_range: SearchRange {
            parameter: "p".into(),
            max: om,
            n_values: oracle_n,
        },
        oracle_hits,
        agreement,
        first_condition_candidates: None,
        notes: vec![
            "n=4 admits p=2 (9p^2-4p+36 = 64 = 8^2) and p=9 (729 = 27^2), both confirmed integral by the exact matrix oracle; the reference case analysis reports no n=4 solutions".into(),
        ],
        elapsed: start.elapsed(),
    })
}

/// D-integral dumbbells: both dumbbell square conditions must hold
/// simultaneously; the sweep returns the (empty) hit list and the
/// candidates that pass only the first condition. Oracle box `m <= 6,
/// n in {3,4,6}` by default.
pub fn check_no_d_integral_dumbbells(max_m: u64, oracle_max: Option<u64>) -> Result<TheoremReport> {
    require_min(max_m, 15, "dumbbell")?;
    let start = Instant::now();
    let mut dioph = Vec::new();
    let mut candidates = Vec::new();
    for n in INTEGRAL_CYCLE_LENGTHS {
        for m in 1..=max_m {
            let (c1, c2) = dumbbell_d_conditions(m, n);
            if c1 && c2 {
                dioph.push(vec![m, n]);
            } else if c1 {
                candidates.push(vec![m, n]);
            }
        }
    }
    sort_tuples(&mut dioph);
    sort_tuples(&mut candidates);

    let om = oracle_max.unwrap_or(6).min(max_m);
    let oracle_n = INTEGRAL_CYCLE_LENGTHS.to_vec();
    let cells: Vec<Vec<u64>> = oracle_n
        .iter()
        .flat_map(|&n| (1..=om).map(move |m| vec![m, n]))
        .collect();
    let oracle_hits = oracle_sweep(cells.clone(), |c| {
        graph_is_d_integral(&graph::dumbbell(c[0] as usize, c[1] as usize)?)
    })?;
    let agreement = pathways_agree(&cells, |c| dumbbell_d_is_integral(c[0], c[1]), &oracle_hits);

    Ok(TheoremReport {
        theorem: "5".into(),
        tuple_labels: vec!["m".into(), "n".into()],
        diophantine_range: SearchRange {
            parameter: "m".into(),
            max: max_m,
            n_values: INTEGRAL_CYCLE_LENGTHS.to_vec(),
        },
        diophantine_hits: dioph,
        oracle_range: SearchRange {
            parameter: "m".into(),
            max: om,
            n_values: oracle_n,
        },
        oracle_hits,
        agreement,
        first_condition_candidates: Some(candidates),
        notes: vec![
            "every first-condition candidate fails the second square condition 25m^2+25n^2-14mn".into(),
        ],
        elapsed: start.elapsed(),
    })
}

/// Distance-Laplacian-integral dumbbells: perfect-square sweep of
/// `(3m-3n-4)^2 + 4mn` for `m <= max_m`, `n in {3,4,6}`. Oracle box
/// `m <= 8, n in {3,4,6}` by default.
pub fn find_dl_integral_dumbbells(max_m: u64, oracle_max: Option<u64>) -> Result<TheoremReport> {
    require_min(max_m, 19, "dumbbell")?;
    let start = Instant::now();
    let mut dioph = Vec::new();
    for n in INTEGRAL_CYCLE_LENGTHS {
        for m in 1..=max_m {
            if dumbbell_dl_is_integral(m, n) {
                // the halved surd branches must be integers (matching parity)
                let disc = dumbbell_dl_disc(m, n);
                let root = crate::diophantine::perfect_sqrt(&BigInt::from(disc))
                    .expect("hit implies square radicand");
                let half_sum = BigInt::from(9 * m as i128 + 9 * n as i128 - 4);
                if (half_sum + root) % 2 != BigInt::from(0) {
                    return Err(Error::InvalidInput(format!(
                        "parity violation at (m,n)=({m},{n}): the surd branches of the Laplacian pair are not integers"
                    )));
                }
                dioph.push(vec![m, n]);
            }
        }
    }
    sort_tuples(&mut dioph);

    let om = oracle_max.unwrap_or(8).min(max_m);
    let oracle_n = INTEGRAL_CYCLE_LENGTHS.to_vec();
    let cells: Vec<Vec<u64>> = oracle_n
        .iter()
        .flat_map(|&n| (1..=om).map(move |m| vec![m, n]))
        .collect();
    let oracle_hits = oracle_sweep(cells.clone(), |c| {
        graph_is_dl_integral(&graph::dumbbell(c[0] as usize, c[1] as usize)?)
    })?;
    let agreement = pathways_agree(&cells, |c| dumbbell_dl_is_integral(c[0], c[1]), &oracle_hits);

    Ok(TheoremReport {
        theorem: "6".into(),
        tuple_labels: vec!["m".into(), "n".into()],
        diophantine_range: SearchRange {
            parameter: "m".into(),
            max: max_m,
            n_values: INTEGRAL_CYCLE_LENGTHS.to_vec(),
        },
        diophantine_hits: dioph,
        oracle_range: SearchRange {
            parameter: "m".into(),
            max: om,
            n_values: oracle_n,
        },
        oracle_hits,
        agreement,
        first_condition_candidates: None,
        notes: vec![
            "the reference prose counts 8 integral graphs while the reference list names 9 pairs".into(),
            "this sweep finds 11 pairs: (4,6) with radicand 196 = 14^2 and (5,6) with radicand 169 = 13^2 also satisfy the square condition and are confirmed integral by the exact matrix oracle; the reference n=6 derivation appears to drop the branch where 3m-18 is negative".into(),
        ],
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_search_finds_the_five_reference_pairs() {
        let r = find_d_integral_wheels(200, Some(8)).unwrap();
        assert_eq!(
            r.diophantine_hits,
            vec![
                vec![1, 3],
                vec![4, 3],
                vec![2, 4],
                vec![4, 6],
                vec![12, 6]
            ]
        );
        assert!(r.agreement);
        assert_eq!(r.oracle_hits, vec![vec![1, 3], vec![4, 3], vec![2, 4], vec![4, 6]]);
    }

    #[test]
    fn wheel_search_rejects_small_bounds() {
        assert!(find_d_integral_wheels(11, None).is_err());
    }

    #[test]
    fn egw_search_finds_the_fifteen_triples() {
        let r = find_d_integral_egw(200, Some(4)).unwrap();
        let want: Vec<Vec<u64>> = vec![
            vec![1, 1, 3],
            vec![1, 4, 3],
            vec![2, 2, 3],
            vec![4, 1, 3],
            vec![1, 2, 4],
            vec![2, 1, 4],
            vec![1, 4, 6],
            vec![1, 12, 6],
            vec![2, 2, 6],
            vec![2, 6, 6],
            vec![3, 4, 6],
            vec![4, 1, 6],
            vec![4, 3, 6],
            vec![6, 2, 6],
            vec![12, 1, 6],
        ];
        assert_eq!(r.diophantine_hits, want);
        assert!(r.agreement);
    }

    #[test]
    fn egw_a1_slice_is_the_wheel_list() {
        let r = find_d_integral_egw(200, Some(2)).unwrap();
        let a1: Vec<Vec<u64>> = r
            .diophantine_hits
            .iter()
            .filter(|t| t[0] == 1)
            .map(|t| vec![t[1], t[2]])
            .collect();
        let w = find_d_integral_wheels(200, Some(2)).unwrap();
        assert_eq!(a1, w.diophantine_hits);
    }

    #[test]
    fn kpp_search_recovers_reference_and_corrected_hits() {
        let r = find_d_integral_kpp(500, None).unwrap();
        assert_eq!(
            r.diophantine_hits,
            vec![vec![1, 3], vec![2, 4], vec![9, 4], vec![4, 6]]
        );
        assert!(r.agreement);
        // oracle box p <= 6 confirms (1,3), (2,4), (4,6)
        assert_eq!(
            r.oracle_hits,
            vec![vec![1, 3], vec![2, 4], vec![4, 6]]
        );
    }

    #[test]
    fn kpp_oracle_confirms_p9_n4() {
        let r = find_d_integral_kpp(20, Some(9)).unwrap();
        assert!(r.oracle_hits.contains(&vec![9, 4]));
        assert!(r.agreement);
    }

    #[test]
    fn dumbbell_distance_search_is_empty_with_candidates() {
        let r = check_no_d_integral_dumbbells(200, None).unwrap();
        assert!(r.diophantine_hits.is_empty());
        assert!(r.oracle_hits.is_empty());
        assert!(r.agreement);
        let cands = r.first_condition_candidates.unwrap();
        let n3: Vec<u64> = cands.iter().filter(|c| c[1] == 3).map(|c| c[0]).collect();
        let n4: Vec<u64> = cands.iter().filter(|c| c[1] == 4).map(|c| c[0]).collect();
        let n6: Vec<u64> = cands.iter().filter(|c| c[1] == 6).map(|c| c[0]).collect();
        assert_eq!(n3, vec![2, 5, 12]);
        assert_eq!(n4, vec![6, 15]);
        assert_eq!(n6, vec![3, 8, 21]);
    }

    #[test]
    fn dumbbell_laplacian_search_finds_eleven_pairs() {
        let r = find_dl_integral_dumbbells(200, None).unwrap();
        assert_eq!(
            r.diophantine_hits,
            vec![
                vec![4, 3],
                vec![5, 3],
                vec![5, 4],
                vec![6, 4],
                vec![14, 4],
                vec![4, 6],
                vec![5, 6],
                vec![7, 6],
                vec![8, 6],
                vec![12, 6],
                vec![19, 6]
            ]
        );
        assert!(r.agreement);
        // the oracle box m <= 8 confirms every in-range pair, including the
        // two absent from the reference list
        assert_eq!(
            r.oracle_hits,
            vec![
                vec![4, 3],
                vec![5, 3],
                vec![5, 4],
                vec![6, 4],
                vec![4, 6],
                vec![5, 6],
                vec![7, 6],
                vec![8, 6]
            ]
        );
        assert!(r.notes.iter().any(|s| s.contains('8') && s.contains('9')));
    }

    #[test]
    fn reports_are_monotone_in_the_bound() {
        let small = find_dl_integral_dumbbells(50, Some(3)).unwrap();
        let large = find_dl_integral_dumbbells(120, Some(3)).unwrap();
        for hit in &small.diophantine_hits {
            assert!(large.diophantine_hits.contains(hit));
        }
    }
}
