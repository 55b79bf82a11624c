//! Structured result serialization: JSON (stable field order, big integers
//! as decimal strings, floats in shortest round-trip form) and CSV.

use serde::{Deserialize, Serialize};

use crate::certify::ExactCertificate;
use crate::characterize::TheoremReport;
use crate::error::{Error, Result};
use crate::spectrum::{SpectralValue, Spectrum};

/// What graph a report is about: a parameterized family member or an
/// explicit graph6 string.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum GraphDescriptor {
    Family {
        family: String,
        params: Vec<(String, u64)>,
    },
    Graph6 {
        graph6: String,
    },
}

impl GraphDescriptor {
    pub fn family(name: &str, params: &[(&str, u64)]) -> GraphDescriptor {
        GraphDescriptor::Family {
            family: name.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn graph6(s: impl Into<String>) -> GraphDescriptor {
        GraphDescriptor::Graph6 { graph6: s.into() }
    }
}

/// JSON-safe rendering of a symbolic eigenvalue (big integers as strings).
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValueRepr {
    Int { value: String },
    Surd { a: String, d: String, q: String },
    Cos { shift: String, sign: i8, n: u64, k: u64 },
    PolyRoots { coeffs: Vec<String> },
}

impl From<&SpectralValue> for ValueRepr {
    fn from(v: &SpectralValue) -> ValueRepr {
        match v {
            SpectralValue::Int(x) => ValueRepr::Int {
                value: x.to_string(),
            },
            SpectralValue::Surd { a, d, q } => ValueRepr::Surd {
                a: a.to_string(),
                d: d.to_string(),
                q: q.to_string(),
            },
            SpectralValue::CosTerm { shift, sign, n, k } => ValueRepr::Cos {
                shift: shift.to_string(),
                sign: *sign,
                n: *n,
                k: *k,
            },
            SpectralValue::PolyRoots(p) => ValueRepr::PolyRoots {
                coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
            },
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormEntry {
    pub value: ValueRepr,
    pub display: String,
    pub multiplicity: usize,
    pub provenance: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    pub value: String,
    pub multiplicity: usize,
}

/// Full record of one spectrum computation. Closed-form entries appear when
/// a formula exists for the graph; exact roots/remainder and float
/// eigenvalues appear when the matrix oracle ran.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub graph: GraphDescriptor,
    pub matrix: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_form: Option<Vec<ClosedFormEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub integer_roots: Option<Vec<RootEntry>>,
    /// Remainder coefficients, ascending degree, as decimal strings.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub remainder: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub float_eigenvalues: Option<Vec<f64>>,
    pub integral: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub non_integral_witness: Option<String>,
    /// Present in comparison mode: the largest |closed-form - oracle|
    /// eigenvalue deviation.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_deviation: Option<f64>,
}

impl SpectrumReport {
    pub fn from_closed_form(
        graph: GraphDescriptor,
        matrix: &str,
        spectrum: &Spectrum,
    ) -> SpectrumReport {
        let verdict = spectrum.is_integral();
        SpectrumReport {
            graph,
            matrix: matrix.to_string(),
            order: spectrum.order(),
            closed_form: Some(closed_form_entries(spectrum)),
            integer_roots: None,
            remainder: None,
            float_eigenvalues: None,
            integral: verdict.integral,
            non_integral_witness: verdict.witness,
            max_deviation: None,
        }
    }

    pub fn from_certificate(
        graph: GraphDescriptor,
        matrix: &str,
        cert: &ExactCertificate,
    ) -> SpectrumReport {
        SpectrumReport {
            graph,
            matrix: matrix.to_string(),
            order: cert.order,
            closed_form: None,
            integer_roots: Some(root_entries(cert)),
            remainder: Some(cert.remainder.coeffs().iter().map(|c| c.to_string()).collect()),
            float_eigenvalues: Some(cert.float_eigenvalues.clone()),
            integral: cert.integral,
            non_integral_witness: (!cert.integral).then(|| {
                format!("non-integer roots of {}", cert.remainder)
            }),
            max_deviation: None,
        }
    }

    /// Closed form and oracle side by side; fails when the two spectra
    /// disagree beyond `tol` or the integer multiplicities differ.
    pub fn from_both(
        graph: GraphDescriptor,
        matrix: &str,
        spectrum: &Spectrum,
        cert: &ExactCertificate,
        tol: f64,
    ) -> Result<SpectrumReport> {
        let closed = spectrum.numeric_values();
        let oracle = &cert.float_eigenvalues;
        if closed.len() != oracle.len() {
            return Err(Error::InvalidInput(format!(
                "closed form lists {} eigenvalues, oracle found {}",
                closed.len(),
                oracle.len()
            )));
        }
        let max_dev = closed
            .iter()
            .zip(oracle)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        if max_dev > tol {
            return Err(Error::InvalidInput(format!(
                "closed-form and oracle spectra disagree: max deviation {max_dev:e} exceeds tolerance {tol:e}"
            )));
        }
        if spectrum.integer_multiset() != cert.integer_roots {
            return Err(Error::InvalidInput(
                "closed-form integer eigenvalues disagree with the exact integer roots".into(),
            ));
        }
        let verdict = spectrum.is_integral();
        Ok(SpectrumReport {
            graph,
            matrix: matrix.to_string(),
            order: spectrum.order(),
            closed_form: Some(closed_form_entries(spectrum)),
            integer_roots: Some(root_entries(cert)),
            remainder: Some(cert.remainder.coeffs().iter().map(|c| c.to_string()).collect()),
            float_eigenvalues: Some(cert.float_eigenvalues.clone()),
            integral: cert.integral,
            non_integral_witness: verdict.witness,
            max_deviation: Some(max_dev),
        })
    }
}

fn closed_form_entries(spectrum: &Spectrum) -> Vec<ClosedFormEntry> {
    spectrum
        .entries()
        .iter()
        .map(|e| ClosedFormEntry {
            value: ValueRepr::from(&e.value),
            display: e.value.to_string(),
            multiplicity: e.multiplicity,
            provenance: e.provenance.as_str().to_string(),
        })
        .collect()
}

fn root_entries(cert: &ExactCertificate) -> Vec<RootEntry> {
    cert.integer_roots
        .iter()
        .map(|(v, m)| RootEntry {
            value: v.to_string(),
            multiplicity: *m,
        })
        .collect()
}

/// Pretty JSON with a trailing newline; field order is declaration order,
/// so byte-identical for identical inputs.
pub fn to_json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("report serialization cannot fail");
    bytes.push(b'\n');
    bytes
}

/// CSV for a spectrum report: one row per distinct eigenvalue entry with a
/// multiplicity column. Closed-form rows are used when present, otherwise
/// the exact oracle rows (integer roots plus one row for the remainder).
pub fn spectrum_report_to_csv(r: &SpectrumReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["value", "multiplicity", "kind", "provenance"])
        .map_err(csv_err)?;
    if let Some(entries) = &r.closed_form {
        for e in entries {
            let kind = match e.value {
                ValueRepr::Int { .. } => "integer",
                ValueRepr::Surd { .. } => "surd_pair",
                ValueRepr::Cos { .. } => "cosine",
                ValueRepr::PolyRoots { .. } => "poly_roots",
            };
            w.write_record([
                e.display.as_str(),
                &e.multiplicity.to_string(),
                kind,
                e.provenance.as_str(),
            ])
            .map_err(csv_err)?;
        }
    } else if let Some(roots) = &r.integer_roots {
        for e in roots {
            w.write_record([e.value.as_str(), &e.multiplicity.to_string(), "integer", "oracle"])
                .map_err(csv_err)?;
        }
        if let Some(rem) = &r.remainder {
            if rem.len() > 1 {
                w.write_record([
                    format!("remainder coefficients [{}]", rem.join(", ")).as_str(),
                    &(rem.len() - 1).to_string(),
                    "poly_roots",
                    "oracle",
                ])
                .map_err(csv_err)?;
            }
        }
    }
    finish_csv(w)
}

/// CSV for a sweep report: one row per hit, labeled by pathway.
pub fn theorem_report_to_csv(r: &TheoremReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["theorem".to_string(), "pathway".to_string()];
    header.extend(r.tuple_labels.iter().cloned());
    w.write_record(&header).map_err(csv_err)?;
    let write_hits = |pathway: &str, hits: &[Vec<u64>], w: &mut csv::Writer<Vec<u8>>| -> Result<()> {
        for hit in hits {
            let mut rec = vec![r.theorem.clone(), pathway.to_string()];
            rec.extend(hit.iter().map(|v| v.to_string()));
            w.write_record(&rec).map_err(csv_err)?;
        }
        Ok(())
    };
    write_hits("diophantine", &r.diophantine_hits, &mut w)?;
    write_hits("oracle", &r.oracle_hits, &mut w)?;
    if let Some(cands) = &r.first_condition_candidates {
        write_hits("first_condition_only", cands, &mut w)?;
    }
    finish_csv(w)
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidInput(format!("CSV serialization failed: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidInput(format!("CSV flush failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidInput(format!("CSV was not UTF-8: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify_matrix;
    use crate::families::{kpp_join_cycle_distance_spectrum, wheel_distance_spectrum};
    use crate::graph::{distance_matrix, generalized_wheel};
    use crate::jacobi::DEFAULT_TOL;

    fn wheel_report_both(m: usize, n: usize) -> SpectrumReport {
        let spec = wheel_distance_spectrum(m, n).unwrap();
        let cert = certify_matrix(
            &distance_matrix(&generalized_wheel(m, n).unwrap()).unwrap(),
            DEFAULT_TOL,
        )
        .unwrap();
        SpectrumReport::from_both(
            GraphDescriptor::family("wheel", &[("m", m as u64), ("n", n as u64)]),
            "distance",
            &spec,
            &cert,
            1e-8,
        )
        .unwrap()
    }

    #[test]
    fn json_roundtrip_spectrum_report() {
        let r = wheel_report_both(4, 3);
        assert!(r.integral);
        let bytes = to_json_bytes(&r);
        let back: SpectrumReport = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(to_json_bytes(&back), bytes);
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("\"family\": \"wheel\""));
        assert!(text.contains("\"provenance\": \"published\""));
    }

    #[test]
    fn corrected_entries_are_tagged_in_json() {
        let spec = kpp_join_cycle_distance_spectrum(3, 4).unwrap();
        let r = SpectrumReport::from_closed_form(
            GraphDescriptor::family("kpp", &[("p", 3), ("n", 4)]),
            "distance",
            &spec,
        );
        let text = String::from_utf8(to_json_bytes(&r)).unwrap();
        assert!(text.contains("\"provenance\": \"corrected\""));
        assert!(!r.integral);
        assert!(r.non_integral_witness.is_some());
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let r = wheel_report_both(4, 3);
        let csv = spectrum_report_to_csv(&r).unwrap();
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines[0], "value,multiplicity,kind,provenance");
        // -2^(m-1), surd pair, two cosine entries
        assert_eq!(lines.len(), 1 + r.closed_form.as_ref().unwrap().len());
    }

    #[test]
    fn mismatched_certificate_is_rejected() {
        let spec = wheel_distance_spectrum(4, 3).unwrap();
        let cert = certify_matrix(
            &distance_matrix(&generalized_wheel(4, 4).unwrap()).unwrap(),
            DEFAULT_TOL,
        )
        .unwrap();
        let err = SpectrumReport::from_both(
            GraphDescriptor::family("wheel", &[("m", 4), ("n", 3)]),
            "distance",
            &spec,
            &cert,
            1e-8,
        );
        assert!(err.is_err());
    }

    #[test]
    fn graph6_descriptor_serializes_flat() {
        let r = SpectrumReport {
            graph: GraphDescriptor::graph6("C~"),
            matrix: "distance".into(),
            order: 4,
            closed_form: None,
            integer_roots: None,
            remainder: None,
            float_eigenvalues: None,
            integral: true,
            non_integral_witness: None,
            max_deviation: None,
        };
        let text = String::from_utf8(to_json_bytes(&r)).unwrap();
        assert!(text.contains("\"graph6\": \"C~\""));
        let back: SpectrumReport = serde_json::from_slice(text.as_bytes()).unwrap();
        assert_eq!(back, r);
    }
}
