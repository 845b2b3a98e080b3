//! Curve files: `{"f0": [c_0, ..., c_d], "f1": [...], "f2": [...]}` with each
//! `c_i` a string integer or `"p/q"`, coefficient of `s^(d-i) t^i`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CurveError, Result};
use crate::exactalg::{format_rational, parse_rational, BinaryForm};
use crate::musyz::Parametrization;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub f0: Vec<Coefficient>,
    pub f1: Vec<Coefficient>,
    pub f2: Vec<Coefficient>,
}

/// Integers are tolerated as plain JSON numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Text(String),
    Int(i64),
}

impl CurveFile {
    pub fn from_parametrization(phi: &Parametrization) -> Self {
        let enc = |f: &BinaryForm| {
            f.coeffs()
                .iter()
                .map(|c| Coefficient::Text(format_rational(c)))
                .collect()
        };
        Self {
            f0: enc(phi.component(0)),
            f1: enc(phi.component(1)),
            f2: enc(phi.component(2)),
        }
    }

    pub fn to_parametrization(&self) -> Result<Parametrization> {
        let parts = [&self.f0, &self.f1, &self.f2];
        let d = self.f0.len();
        if parts.iter().any(|p| p.len() != d) {
            return Err(CurveError::InvalidInput(format!(
                "coefficient vectors have lengths {}, {}, {}",
                self.f0.len(),
                self.f1.len(),
                self.f2.len()
            )));
        }
        if d == 0 {
            return Err(CurveError::InvalidInput("empty coefficient vectors".into()));
        }
        let mut forms = Vec::with_capacity(3);
        for (k, p) in parts.iter().enumerate() {
            let coeffs = p
                .iter()
                .map(|c| match c {
                    Coefficient::Int(v) => Ok(crate::exactalg::rat(*v)),
                    Coefficient::Text(s) => parse_rational(s)
                        .map_err(|e| CurveError::InvalidInput(format!("f{k}: {e}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            forms.push(BinaryForm::new(coeffs));
        }
        let [f0, f1, f2]: [BinaryForm; 3] = forms.try_into().expect("three forms");
        Parametrization::new(f0, f1, f2)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve file serializes")
    }
}

pub fn parse_curve(text: &str) -> Result<Parametrization> {
    let file: CurveFile =
        serde_json::from_str(text).map_err(|e| CurveError::InvalidInput(format!("malformed curve file: {e}")))?;
    file.to_parametrization()
}

pub fn read_curve(path: &Path) -> Result<Parametrization> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CurveError::InvalidInput(format!("{}: {e}", path.display())))?;
    parse_curve(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        let phi = parse_curve(r#"{"f0": ["-1/2", "1", "0", "0", "0"], "f1": [0, 0, 1, 0, 0], "f2": ["0", "0", "0", "-2", "1"]}"#)
            .unwrap();
        assert_eq!(phi, crate::fixtures::quartic_three_cusps());
        let back = CurveFile::from_parametrization(&phi).to_json();
        assert_eq!(parse_curve(&back).unwrap(), phi);
    }

    #[test]
    fn rejects_bad_files() {
        for text in [
            r#"{"f0": ["1", "0"], "f1": ["0", "1"]}"#,
            r#"{"f0": ["1", "0", "0"], "f1": ["0", "1"], "f2": ["0", "0", "1"]}"#,
            r#"{"f0": ["1", "x", "0"], "f1": ["0", "1", "0"], "f2": ["0", "0", "1"]}"#,
            r#"{"f0": ["1/0", "0", "0"], "f1": ["0", "1", "0"], "f2": ["0", "0", "1"]}"#,
            r#"{"f0": ["1", "0", "0", "0"], "f1": ["1", "0", "0", "0"], "f2": ["0", "0", "1", "0"]}"#,
        ] {
            assert!(matches!(parse_curve(text), Err(CurveError::InvalidInput(_))), "{text}");
        }
    }
}
