//! Command implementations behind the `knotsub` binary.
//!
//! Each command takes a resolved element and returns a serializable report;
//! the binary handles line framing, output redirection, and exit codes.

use crate::algebra::{AlgebraFamily, LieAlgebraElement};
use crate::canonical::{canonical_sl2, canonical_sl3, canonical_so, canonical_su, CanonicalForm};
use crate::classify::{classify_with, ClassifyOptions, Verdict};
use crate::error::{Error, Result};
use crate::io::{
    matrix_entries, CanonicalReport, ClassifyReport, CurveSample, FrequencyReport, OracleCheck,
    OracleReport, PeriodReport, SCHEMA_VERSION,
};
use crate::matrix::mat_exp;
use crate::oracle::{default_steps, detect_period_numeric};

/// Flags shared by `classify`.
#[derive(Debug, Clone, Copy)]
pub struct ClassifyFlags {
    pub oracle: bool,
    pub qmax: i64,
    pub tol: f64,
    pub tmax: Option<f64>,
    pub steps: Option<usize>,
}

impl Default for ClassifyFlags {
    fn default() -> Self {
        ClassifyFlags {
            oracle: false,
            qmax: crate::classify::DEFAULT_QMAX,
            tol: crate::classify::DEFAULT_TOL,
            tmax: None,
            steps: None,
        }
    }
}

const ORACLE_EPS: f64 = 1e-8;
const ORACLE_RELATIVE_MATCH: f64 = 1e-6;

/// Classify one element; with `oracle` set, cross-check the verdict by a
/// numerical period scan. A circle verdict the scan cannot confirm is
/// downgraded to an injective line with a warning.
pub fn cmd_classify(elem: &LieAlgebraElement, flags: &ClassifyFlags) -> Result<ClassifyReport> {
    let opts = ClassifyOptions {
        qmax: flags.qmax,
        tol: flags.tol,
    };
    let cls = classify_with(elem, &opts)?;
    let mut report = ClassifyReport::new(elem, &cls);
    if !flags.oracle || cls.verdict == Verdict::Trivial {
        return Ok(report);
    }

    let t_max = flags.tmax.unwrap_or(match cls.period {
        Some(t) => 2.5 * t,
        None => 100.0,
    });
    let steps = flags
        .steps
        .unwrap_or_else(|| default_steps(t_max, &elem.matrix));
    let found = detect_period_numeric(&elem.matrix, t_max, steps, ORACLE_EPS)?;
    let check = match (cls.period, found) {
        (Some(t_analytic), Some(t_scan)) => {
            let mismatch = (t_scan - t_analytic).abs() / t_analytic;
            OracleCheck {
                t_max,
                steps,
                eps: ORACLE_EPS,
                period: Some(t_scan),
                relative_mismatch: Some(mismatch),
                confirmed: mismatch <= ORACLE_RELATIVE_MATCH,
            }
        }
        (Some(_), None) => OracleCheck {
            t_max,
            steps,
            eps: ORACLE_EPS,
            period: None,
            relative_mismatch: None,
            confirmed: false,
        },
        (None, found) => OracleCheck {
            t_max,
            steps,
            eps: ORACLE_EPS,
            period: found,
            relative_mismatch: None,
            confirmed: found.is_none(),
        },
    };
    if cls.verdict == Verdict::Knotted && check.period.is_none() {
        // never report a circle the scan cannot see
        report.verdict = Verdict::InjectiveLine.as_str().into();
        report.period = None;
        report.knot = None;
        report.detail = Some(
            "warning: analytic verdict was Knotted but the oracle found no period; \
             downgraded to InjectiveLine"
                .into(),
        );
    }
    report.oracle = Some(check);
    Ok(report)
}

/// Sample the curve exp(tX) at `t_count` uniform times.
///
/// Circle subgroups are sampled over one full period so the first and last
/// samples coincide; other curves are sampled over [0, 2π]. When the
/// classification carries a torus-knot label the standard embedding of the
/// (p, q) curve on the torus with radii R = 2, r = 1 is attached.
pub fn cmd_sample(elem: &LieAlgebraElement, t_count: usize) -> Result<Vec<CurveSample>> {
    if t_count < 2 {
        return Err(Error::InvalidInput(
            "need at least 2 samples to cover the curve".into(),
        ));
    }
    let cls = classify_with(elem, &ClassifyOptions::default())?;
    let (t_end, mu, knot) = match (cls.verdict, cls.period) {
        (Verdict::Knotted, Some(t)) => {
            let mu = cls
                .frequencies
                .as_ref()
                .and_then(|f| f.integer_form.as_ref())
                .map(|i| i.mu)
                .unwrap_or(2.0 * std::f64::consts::PI / t);
            (t, mu, cls.knot)
        }
        _ => (2.0 * std::f64::consts::PI, 1.0, None),
    };
    let mut samples = Vec::with_capacity(t_count);
    for j in 0..t_count {
        let t = t_end * j as f64 / (t_count - 1) as f64;
        let point = mat_exp(&elem.matrix.scale_re(t))?;
        let embedding3d = knot.map(|k| {
            let phi = mu * t;
            let (p, q) = (k.p as f64, k.q as f64);
            let radial = 2.0 + (q * phi).cos();
            [
                radial * (p * phi).cos(),
                radial * (p * phi).sin(),
                (q * phi).sin(),
            ]
        });
        samples.push(CurveSample {
            schema_version: SCHEMA_VERSION.into(),
            kind: "curve_sample".into(),
            t,
            point: matrix_entries(&point).into_iter().flatten().collect(),
            embedding3d,
        });
    }
    Ok(samples)
}

/// Canonical form of one element, dispatched by family.
pub fn cmd_canonicalize(elem: &LieAlgebraElement) -> Result<CanonicalReport> {
    let (form_tag, params, form): (Option<String>, Option<Vec<f64>>, CanonicalForm) =
        match elem.family {
            AlgebraFamily::Su(_) => (None, None, canonical_su(elem)?),
            AlgebraFamily::So(_) => (None, None, canonical_so(elem)?),
            AlgebraFamily::Sl2R | AlgebraFamily::SlnR(2) => (None, None, canonical_sl2(elem)?),
            AlgebraFamily::Sl3R | AlgebraFamily::SlnR(3) => {
                let (class, form) = canonical_sl3(elem)?;
                (Some(class.tag().into()), Some(class.params()), form)
            }
            AlgebraFamily::SlnR(_) | AlgebraFamily::Heisenberg => {
                return Err(Error::InvalidInput(format!(
                    "no canonical form is defined for {}",
                    elem.family
                )))
            }
        };
    Ok(CanonicalReport {
        schema_version: SCHEMA_VERSION.into(),
        kind: "canonical_form".into(),
        family: elem.family.tag().into(),
        n: elem.matrix.dim(),
        form_tag,
        params,
        generator: matrix_entries(&form.generator),
        conjugator: matrix_entries(&form.conjugator),
        target_group: form.target_group.as_str(),
        residual: form.residual,
    })
}

/// Analytic minimal period of one element.
pub fn cmd_period(elem: &LieAlgebraElement) -> Result<PeriodReport> {
    let cls = classify_with(elem, &ClassifyOptions::default())?;
    match (cls.verdict, cls.period) {
        (Verdict::Knotted, Some(t)) => {
            let residual = mat_exp(&elem.matrix.scale_re(t))?.dist_identity();
            Ok(PeriodReport {
                schema_version: SCHEMA_VERSION.into(),
                kind: "period".into(),
                family: elem.family.tag().into(),
                n: elem.matrix.dim(),
                period: t,
                residual,
                frequencies: cls.frequencies.as_ref().map(FrequencyReport::from),
            })
        }
        (Verdict::Trivial, _) => Err(Error::NotPeriodic(
            "the zero element generates the constant curve".into(),
        )),
        _ => Err(Error::NotPeriodic(
            "the curve is an injective line; no period exists".into(),
        )),
    }
}

/// Run the brute-force period scan directly.
pub fn cmd_oracle(
    elem: &LieAlgebraElement,
    t_max: f64,
    steps: Option<usize>,
    eps: f64,
) -> Result<OracleReport> {
    let steps = steps.unwrap_or_else(|| default_steps(t_max, &elem.matrix));
    let mut scan = crate::oracle::PeriodScan::new(t_max, steps, eps);
    scan.run(&elem.matrix)?;
    let (period, residual, message) = match scan.result {
        Some((t, residual)) => (
            Some(t),
            Some(residual),
            format!("period detected at t = {t}"),
        ),
        None => (None, None, format!("no period <= t_max = {t_max}")),
    };
    Ok(OracleReport {
        schema_version: SCHEMA_VERSION.into(),
        kind: "oracle".into(),
        family: elem.family.tag().into(),
        n: elem.matrix.dim(),
        t_max,
        steps,
        eps,
        period,
        residual,
        message,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_heisenberg, build_sl2, sigma_x, Sl2Coords};
    use crate::io::MatrixDocument;
    use std::f64::consts::PI;

    fn sl2_rotation() -> LieAlgebraElement {
        build_sl2(Sl2Coords::new(0.0, 0.0, 1.0))
    }

    #[test]
    fn classify_report_for_rotation() {
        let report = cmd_classify(&sl2_rotation(), &ClassifyFlags::default()).unwrap();
        assert_eq!(report.verdict, "Knotted");
        assert!((report.period.unwrap() - 2.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn classify_with_oracle_confirms() {
        let flags = ClassifyFlags {
            oracle: true,
            ..Default::default()
        };
        let report = cmd_classify(&sl2_rotation(), &flags).unwrap();
        let check = report.oracle.unwrap();
        assert!(check.confirmed);
        assert!(check.relative_mismatch.unwrap() <= 1e-6);
    }

    #[test]
    fn classify_su_document_example() {
        let doc = MatrixDocument::parse(
            r#"{"family":"su","matrix":[[[0,3],0,0],[0,[0,5],0],[0,0,[0,-8]]]}"#,
        )
        .unwrap();
        let elem = doc.to_element(None).unwrap();
        let report = cmd_classify(&elem, &ClassifyFlags::default()).unwrap();
        assert_eq!(report.verdict, "Knotted");
        let knot = report.knot.unwrap();
        assert_eq!((knot.p, knot.q), (5, 3));
    }

    #[test]
    fn heisenberg_is_injective_line() {
        let report =
            cmd_classify(&build_heisenberg(1.0, 1.0, 1.0), &ClassifyFlags::default()).unwrap();
        assert_eq!(report.verdict, "InjectiveLine");
    }

    #[test]
    fn sample_endpoint_closure_and_embedding() {
        let doc = MatrixDocument::parse(
            r#"{"family":"su","matrix":[[[0,3],0,0],[0,[0,2],0],[0,0,[0,-5]]]}"#,
        )
        .unwrap();
        let elem = doc.to_element(None).unwrap();
        let samples = cmd_sample(&elem, 9).unwrap();
        assert_eq!(samples.len(), 9);
        let first = &samples[0];
        let last = &samples[8];
        let dist: f64 = first
            .point
            .iter()
            .zip(last.point.iter())
            .map(|(a, b)| (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(dist <= 1e-6);
        // trefoil embedding starts at (3, 0, 0)
        let e0 = first.embedding3d.unwrap();
        assert!((e0[0] - 3.0).abs() < 1e-12 && e0[1].abs() < 1e-12 && e0[2].abs() < 1e-12);
        let e_last = last.embedding3d.unwrap();
        let closure = ((e0[0] - e_last[0]).powi(2)
            + (e0[1] - e_last[1]).powi(2)
            + (e0[2] - e_last[2]).powi(2))
        .sqrt();
        assert!(closure <= 1e-6);
    }

    #[test]
    fn sample_raw_only_for_injective() {
        let elem = build_sl2(Sl2Coords::new(1.0, 0.0, 0.0));
        let samples = cmd_sample(&elem, 2).unwrap();
        assert!(samples.iter().all(|s| s.embedding3d.is_none()));
    }

    #[test]
    fn sample_needs_two_points() {
        assert!(cmd_sample(&sl2_rotation(), 1).is_err());
    }

    #[test]
    fn period_of_sigma_x() {
        let elem = LieAlgebraElement::new(AlgebraFamily::Su(2), sigma_x()).unwrap();
        let report = cmd_period(&elem).unwrap();
        assert!((report.period - 2.0 * PI).abs() < 1e-9);
        assert!(report.residual <= 1e-7);
    }

    #[test]
    fn period_errors_for_injective() {
        let elem = build_sl2(Sl2Coords::new(1.0, 0.0, 1.0));
        assert!(matches!(cmd_period(&elem), Err(Error::NotPeriodic(_))));
    }

    #[test]
    fn oracle_reports_absence() {
        let elem = build_sl2(Sl2Coords::new(1.0, 0.0, 1.0));
        let report = cmd_oracle(&elem, 100.0, Some(10_000), 1e-8).unwrap();
        assert!(report.period.is_none());
        assert!(report.message.contains("no period"));
    }

    #[test]
    fn canonicalize_sl3_rotation_template() {
        let x = crate::canonical::JordanClass::SpiralBlock { a: 0.0, b: 3.0 }.template();
        let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, x).unwrap();
        let report = cmd_canonicalize(&elem).unwrap();
        assert_eq!(report.form_tag.as_deref(), Some("X4"));
        assert_eq!(report.params.as_deref(), Some(&[0.0, 3.0][..]));
        assert!(report.residual <= 1e-8);
    }
}
