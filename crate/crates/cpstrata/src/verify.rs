//! Verification suites with machine-readable reports.
//!
//! Each suite is a list of named checks with expected and computed values. The
//! report payload is deterministic; wall-clock timings are kept in a separate
//! field.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{bail, Result};
use cpstrata_core::ballmodels::{
    ab_isomorphism_check, check_presentation, iemb_model, small_four_fibration_model,
    small_four_stabilizer, small_four_stabilizer_diagonal, weight_independence_check,
    CircleWeights,
};
use cpstrata_core::chambers::{chamber_label, enumerate_chambers, Boundary, ChamberLabel};
use cpstrata_core::confgeom::{apply_pgl, classify, parse_points, Matrix3};
use cpstrata_core::dga::{check_d_squared, check_ideal_stability, cohomology};
use cpstrata_core::gradedalg::{quotient_dimension, PresentedAlgebra};
use cpstrata_core::kriz::{kriz_model, KrizParams};
use cpstrata_core::lattice::{
    enumerate_exceptional, matches_negative_curve_shape, negative_wall_classes, Capacities,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;

/// Suite names in report order.
pub const SUITES: [&str; 7] = ["ab-iso", "chambers", "conf", "eq71", "eq75", "kriz", "thm13"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub expected: Value,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn check(name: impl Into<String>, expected: Value, computed: Value) -> CheckResult {
    CheckResult { name: name.into(), pass: expected == computed, expected, computed, note: None }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
    /// Seconds per suite; not part of the deterministic payload.
    pub timings: BTreeMap<String, f64>,
}

impl VerifyReport {
    /// The report without timings.
    pub fn payload(&self) -> Value {
        json!({ "pass": self.pass, "suites": self.suites })
    }
}

/// Options shared by the suites.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub cap: Option<u32>,
    pub boundary: Boundary,
    pub config: RunConfig,
}

impl Settings {
    fn cap_or(&self, default: u32) -> u32 {
        self.cap.unwrap_or(default)
    }
}

/// `v` cut or zero-padded to degrees `0..=cap`.
fn through(v: &[usize], cap: u32) -> Vec<usize> {
    let mut out = v.to_vec();
    out.resize(cap as usize + 1, 0);
    out
}

fn chambers_suite(s: &Settings) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (n, expected) in [(3, 2), (4, 6), (5, 33)] {
        let count = enumerate_chambers(n, s.boundary)?.len();
        let mut c = check(format!("chamber count n={n}"), json!(expected), json!(count));
        if n == 5 {
            let other = match s.boundary {
                Boundary::Strict => Boundary::Inclusive,
                Boundary::Inclusive => Boundary::Strict,
            };
            let alt = enumerate_chambers(n, other)?.len();
            c.note = Some(format!("{} boundary: {count}; {other} boundary: {alt}", s.boundary));
        }
        out.push(c);
    }
    let rows = [
        "9/20,9/20,9/20,9/20",
        "9/20,3/10,3/10,3/10",
        "2/5,2/5,3/10,1/5",
        "2/5,7/20,3/10,1/10",
        "3/10,3/10,3/10,1/5",
        "3/10,3/10,3/10,1/20",
    ];
    for (r, caps) in rows.iter().enumerate() {
        let label = chamber_label(&Capacities::parse(caps)?)?;
        out.push(check(format!("label of ({caps})"), json!(format!("C_{r}")), json!(label.to_string())));
    }
    let walls: Vec<usize> =
        (3..=5).map(|n| negative_wall_classes(n).map(|w| w.len())).collect::<Result<_, _>>()?;
    out.push(check("wall classes n=3,4,5", json!([1, 5, 16]), json!(walls)));
    let mut counts = Vec::new();
    let mut shapes = true;
    for n in 1..=8 {
        let classes = enumerate_exceptional(n)?;
        shapes &= classes.iter().all(|u| u.degree() == 0 || matches_negative_curve_shape(u));
        counts.push(classes.len());
    }
    out.push(check("exceptional classes n=1..8", json!([1, 3, 6, 10, 16, 27, 56, 240]), json!(counts)));
    out.push(check("exceptional classes have known shapes", json!(true), json!(shapes)));
    Ok(out)
}

fn presentation_check(n: usize, chamber: ChamberLabel, w: &CircleWeights, cap: u32) -> Result<CheckResult> {
    let rep = check_presentation(n, chamber, w, cap)?.report;
    let mut c = check(
        format!("presentation n={n} {chamber} weights ({w})"),
        json!({ "passed": true, "ranks": rep.presented_dims }),
        json!({ "passed": rep.passed(), "ranks": rep.cohomology_ranks }),
    );
    c.note = rep.first_failure().map(|f| f.to_string());
    Ok(c)
}

const EQ75: [usize; 15] = [1, 0, 4, 0, 4, 2, 0, 6, 0, 4, 2, 1, 2, 0, 0];

fn eq75_check(cap: u32) -> Result<CheckResult> {
    let ranks = cohomology(&kriz_model(KrizParams::new(2, 4)?, cap))?.ranks;
    Ok(check("Kriz ranks m=2 k=4", json!(through(&EQ75, cap)), json!(ranks)))
}

fn thm13_suite(s: &Settings) -> Result<Vec<CheckResult>> {
    let cap = s.cap_or(14);
    let mut out = Vec::new();
    for (n, ch) in [
        (1, ChamberLabel::Unique),
        (2, ChamberLabel::Unique),
        (3, ChamberLabel::Big),
        (3, ChamberLabel::Small),
    ] {
        out.push(presentation_check(n, ch, &s.config.weights_for(n, ch)?, cap)?);
    }
    for r in 0..=4 {
        let ch = ChamberLabel::C(r);
        out.push(presentation_check(4, ch, &s.config.weights_for(4, ch)?, cap)?);
    }
    out.push(eq75_check(cap)?);
    for r in 1..=4usize {
        let sets = [
            CircleWeights::uniform(r),
            CircleWeights::new(vec![(2, -1), (1, 3), (5, 2), (1, 0)][..r].to_vec())?,
            CircleWeights::new(vec![(3, 5), (4, -7), (1, 1), (2, 9)][..r].to_vec())?,
        ];
        let (agree, reports) = weight_independence_check(4, ChamberLabel::C(r as u8), &sets, cap)?;
        let mut c = check(format!("weight independence C_{r}"), json!(true), json!(agree));
        c.note = Some(format!("ranks {:?}", reports[0].ranks));
        out.push(c);
    }
    Ok(out)
}

fn eq71_suite(_: &Settings) -> Result<Vec<CheckResult>> {
    let expected: Vec<usize> = (0..=14)
        .map(|q| match q {
            0 => 1,
            2 => 4,
            1 | 3 => 0,
            q if q % 2 == 0 => 5,
            _ => 2,
        })
        .collect();
    let dims = |a: &PresentedAlgebra| (0..=14).map(|q| quotient_dimension(a, q)).collect::<Vec<_>>();
    let verbatim = dims(&small_four_stabilizer());
    let diagonal = small_four_stabilizer_diagonal();
    let fibration = cohomology(&small_four_fibration_model(&diagonal, 14))?.ranks;
    let mut c = check("stabilizer quotient dimensions q=0..14", json!(expected), json!(verbatim));
    if !c.pass {
        c.note = Some(format!(
            "the ideal spanned by all diagonal differences gives {:?}; its fibration model gives {:?}",
            dims(&diagonal),
            fibration
        ));
    }
    Ok(vec![c])
}

fn ab_suite(s: &Settings) -> Result<Vec<CheckResult>> {
    let rep = ab_isomorphism_check(s.cap_or(10))?;
    let images = |expected: bool| -> Vec<Value> {
        rep.relations
            .iter()
            .map(|r| json!({ "relation": r.relation, "image": r.image, "in_ideal": expected || r.in_ideal }))
            .collect()
    };
    Ok(vec![
        check("relation images lie in the ideal", json!(images(true)), json!(images(false))),
        check("graded dimensions", json!(rep.target_dims), json!(rep.source_dims)),
        check("surjective", json!(true), json!(rep.surjective())),
    ])
}

fn kriz_suite(s: &Settings) -> Result<Vec<CheckResult>> {
    let cap = s.cap_or(12);
    let kriz = cohomology(&kriz_model(KrizParams::new(2, 3)?, cap))?.ranks;
    let mut out =
        vec![check("Kriz ranks m=2 k=3", json!(through(&[1, 0, 3, 0, 3, 0, 1, 1, 0, 1], cap)), json!(kriz))];
    for w in [(1, 0), (1, 1), (2, -1), (3, 5)] {
        let w = CircleWeights::new(vec![w])?;
        let ranks = cohomology(&iemb_model(3, ChamberLabel::Small, &w, cap)?)?.ranks;
        out.push(check(format!("three small balls weights ({w})"), json!(kriz), json!(ranks)));
    }
    for m in 1..=3u32 {
        for k in 1..=3usize {
            let spec = kriz_model(KrizParams::new(m, k)?, 2 * m * k as u32);
            let dga = check_d_squared(&spec).is_ok() && check_ideal_stability(&spec).is_ok();
            let chi = cohomology(&spec)?.euler_characteristic();
            let expected: i64 = (0..k as i64).map(|j| m as i64 + 1 - j).product();
            out.push(check(
                format!("Kriz m={m} k={k}"),
                json!({ "dga": true, "euler_characteristic": expected }),
                json!({ "dga": dga, "euler_characteristic": chi }),
            ));
        }
    }
    Ok(out)
}

fn conf_suite(_: &Settings) -> Result<Vec<CheckResult>> {
    let cases = [
        ("1:0:0,0:1:0,0:0:1,1:1:1", json!({ "stratum": "F0", "cross_ratio": null })),
        ("1:0:0,0:1:0,1:1:0,0:0:1", json!({ "stratum": "F123", "cross_ratio": null })),
        ("1:0:0,0:0:1,0:1:0,1:1:0", json!({ "stratum": "F134", "cross_ratio": null })),
        ("0:1:0,1:1:0,2:1:0,1:0:0", json!({ "stratum": "F1234", "cross_ratio": "2" })),
        ("0:1:0,1:1:0,-1:1:0,3:1:0", json!({ "stratum": "F1234", "cross_ratio": "1/3" })),
    ];
    let matrices = [
        Matrix3::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]])?,
        Matrix3::from_ints([[2, -1, 1], [1, 1, 0], [0, 3, -2]])?,
    ];
    let describe = |pts: &[cpstrata_core::confgeom::ProjectivePoint]| -> Result<Value> {
        let c = classify(pts)?;
        Ok(json!({
            "stratum": c.stratum.to_string(),
            "cross_ratio": c.cross_ratio.map(|x| x.to_string()),
        }))
    };
    let mut out = Vec::new();
    for (text, expected) in cases {
        let pts = parse_points(text)?;
        let got = describe(&pts)?;
        out.push(check(format!("classify {text}"), expected, got.clone()));
        for (i, m) in matrices.iter().enumerate() {
            let moved: Vec<_> = pts.iter().map(|p| apply_pgl(m, p)).collect();
            out.push(check(format!("classify {text} moved by matrix {}", i + 1), got.clone(), describe(&moved)?));
        }
    }
    Ok(out)
}

fn run_suite(name: &str, s: &Settings) -> Result<Vec<CheckResult>> {
    match name {
        "ab-iso" => ab_suite(s),
        "chambers" => chambers_suite(s),
        "conf" => conf_suite(s),
        "eq71" => eq71_suite(s),
        "eq75" => eq75_check(s.cap_or(14)).map(|c| vec![c]),
        "kriz" => kriz_suite(s),
        "thm13" => thm13_suite(s),
        _ => bail!("unknown suite `{name}`; expected one of {} or all", SUITES.join(", ")),
    }
}

/// Runs one suite, or every suite for `all` (concurrently, reported in name order).
pub fn run(suite: &str, settings: &Settings) -> Result<VerifyReport> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        bail!("unknown suite `{suite}`; expected one of {} or all", SUITES.join(", "));
    };
    let results: Vec<Result<(Vec<CheckResult>, f64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|name| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let checks = run_suite(name, settings)?;
                    Ok((checks, start.elapsed().as_secs_f64()))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut suites = Vec::new();
    let mut timings = BTreeMap::new();
    for (name, result) in names.iter().zip(results) {
        let (checks, secs) = result?;
        timings.insert(name.to_string(), secs);
        suites.push(SuiteReport { suite: name.to_string(), pass: checks.iter().all(|c| c.pass), checks });
    }
    Ok(VerifyReport { pass: suites.iter().all(|s| s.pass), suites, timings })
}
