//! Full analysis of a curve file, JSON round trip and text rendering.

use std::path::PathBuf;

use ratcurve::input::{read_curve, CurveFile};
use ratcurve::report::{analyze, CurveReport, Options};

fn main() -> ratcurve::error::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/quintic_nearly_free.json"));
    let phi = read_curve(&path)?;
    println!("input {}", CurveFile::from_parametrization(&phi).to_json());

    let opts = Options { deep: true, max_q: None, skip_dual: false };
    let report = analyze(&phi, &opts)?;
    let json = report.to_json();
    assert_eq!(CurveReport::from_json(&json)?.to_json(), json);
    print!("{}", report.to_text());
    println!("{} cross-checks, {} failed", report.cross_checks.len(), report.failures().len());
    Ok(())
}
