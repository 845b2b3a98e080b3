//! The full analysis pipeline and its serializable report.
//!
//! Every polynomial and rational is stored as a string, so the JSON form
//! parses back into the same report and re-serializes byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::difforms::{self, Verdict};
use crate::dualgeom::{self, DualData};
use crate::error::{CurveError, Result};
use crate::exactalg::rational::{format_rational, rat};
use crate::exactalg::{BinaryForm, TernaryForm};
use crate::fibers::{self, qforms, CuspidalityStatus, FiberAnalysis, P2Point, SingularPoint};
use crate::musyz::{self, MuBasis, Parametrization};
use crate::oracle::{self, OracleReport};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Adds tilde-kernel checks at `q = 2d-2` and `q = 2d`.
    pub deep: bool,
    /// Length of the reported `a(q)` sequence (at least `d`).
    pub max_q: Option<usize>,
    pub skip_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub input: InputEcho,
    pub e: usize,
    pub mu: [usize; 2],
    pub mu_basis: MuBasisEcho,
    pub implicit: ImplicitEcho,
    pub invariants: InvariantsEcho,
    pub dual: Option<DualEcho>,
    pub singular_points: Vec<PointEcho>,
    pub fibers: FiberEcho,
    pub cuspidality: CuspidalityEcho,
    pub oracle: Option<OracleEcho>,
    pub tilde_kernels: Vec<TildeEcho>,
    pub cross_checks: Vec<CrossCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub d: usize,
    pub f0: Vec<String>,
    pub f1: Vec<String>,
    pub f2: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBasisEcho {
    pub mu: [usize; 2],
    pub p: [String; 3],
    pub q: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub monomial: [u32; 3],
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicitEcho {
    pub degree: usize,
    pub equation: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictEcho {
    pub kind: String,
    pub exponents: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsEcho {
    pub tau: usize,
    pub delta: usize,
    pub mdr: Option<usize>,
    pub a_seq: Vec<usize>,
    pub verdict: Option<VerdictEcho>,
    pub tau_dr: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineEcho {
    pub line: String,
    pub exponent: usize,
    pub point: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEcho {
    pub deg_a: usize,
    pub a: String,
    pub phi_dual: [String; 3],
    pub degree: usize,
    pub equation: String,
    pub discriminant_constant: String,
    pub lines: Vec<LineEcho>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchEcho {
    pub factor: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEcho {
    pub point: String,
    pub pullback: String,
    pub multiplicity: usize,
    pub branches: usize,
    pub branch_factors: Vec<BranchEcho>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEcho {
    pub support: String,
    pub residual_support: String,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalityEcho {
    pub status: String,
    pub witness: Option<String>,
    pub diagnostics: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEcho {
    pub tau: usize,
    pub mdr: usize,
    pub st: usize,
    pub verdict: VerdictEcho,
    pub ar_dims: Vec<usize>,
    pub milnor_hilbert: Vec<usize>,
    pub n_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeEcho {
    pub q: usize,
    pub k1: usize,
    pub k2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl CurveReport {
    pub fn passed(&self) -> bool {
        self.cross_checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&CrossCheck> {
        self.cross_checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CurveError::InvalidInput(format!("malformed report: {e}")))
    }

    pub fn to_text(&self) -> String {
        render_text(&serde_json::to_value(self).expect("report serializes"))
    }
}

pub fn verdict_echo(v: &Verdict) -> VerdictEcho {
    VerdictEcho {
        kind: v.name().to_string(),
        exponents: v.exponents().map(|(a, b)| [a, b]),
    }
}

fn strings(f: &BinaryForm) -> Vec<String> {
    f.coeffs().iter().map(format_rational).collect()
}

fn triple(g: &[BinaryForm; 3]) -> [String; 3] {
    [0, 1, 2].map(|k| g[k].to_string())
}

pub fn mu_basis_echo(b: &MuBasis) -> MuBasisEcho {
    MuBasisEcho {
        mu: [b.mu1, b.mu2],
        p: triple(&b.p),
        q: triple(&b.q),
    }
}

pub fn implicit_echo(f: &TernaryForm) -> ImplicitEcho {
    ImplicitEcho {
        degree: f.degree() as usize,
        equation: f.to_string(),
        terms: f
            .terms()
            .rev()
            .map(|(&(a, b, c), q)| Term {
                monomial: [a, b, c],
                coefficient: format_rational(q),
            })
            .collect(),
    }
}

pub fn dual_echo(dual: &DualData) -> DualEcho {
    let uvw = ["u", "v", "w"];
    DualEcho {
        deg_a: dual.a.degree(),
        a: dual.a.to_string(),
        phi_dual: triple(&dual.phi_dual),
        degree: dual.d_dual,
        equation: dual.f_dual.to_string_in(uvw),
        discriminant_constant: format_rational(&dual.constant),
        lines: dual
            .lines
            .iter()
            .map(|l| LineEcho {
                line: l.line.to_string_in(uvw),
                exponent: l.exponent,
                point: l.point.to_string(),
            })
            .collect(),
        residual: dual.residual.to_string_in(uvw),
    }
}

pub fn point_echo(p: &SingularPoint) -> PointEcho {
    PointEcho {
        point: p.point.to_string(),
        pullback: p.h.to_string(),
        multiplicity: p.m,
        branches: p.r,
        branch_factors: p
            .branches
            .iter()
            .map(|b| BranchEcho {
                factor: b.factor.to_string(),
                multiplicity: b.multiplicity,
            })
            .collect(),
    }
}

pub fn status_name(s: CuspidalityStatus) -> &'static str {
    match s {
        CuspidalityStatus::Cuspidal => "cuspidal",
        CuspidalityStatus::NotCuspidal => "not cuspidal",
        CuspidalityStatus::Incomplete => "incomplete",
    }
}

pub fn cuspidality_echo(fib: &FiberAnalysis) -> CuspidalityEcho {
    CuspidalityEcho {
        status: status_name(fib.cuspidality.status).to_string(),
        witness: fib.cuspidality.witness.as_ref().map(|w| w.to_string()),
        diagnostics: fib.cuspidality.diagnostics.clone(),
    }
}

pub fn oracle_echo(o: &OracleReport) -> OracleEcho {
    OracleEcho {
        tau: o.tau_f,
        mdr: o.mdr_f,
        st: o.st_f,
        verdict: verdict_echo(&o.verdict_f),
        ar_dims: o.ar_dims.clone(),
        milnor_hilbert: o.milnor_hilbert.clone(),
        n_dims: o.n_dims.clone(),
    }
}

#[derive(Default)]
struct Ledger(Vec<CrossCheck>);

impl Ledger {
    fn eq(&mut self, name: impl Into<String>, lhs: impl ToString, rhs: impl ToString) {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        self.0.push(CrossCheck {
            name: name.into(),
            pass: lhs == rhs,
            lhs,
            rhs,
        });
    }

    fn holds(&mut self, name: impl Into<String>, pass: bool, lhs: impl ToString, rhs: impl ToString) {
        self.0.push(CrossCheck {
            name: name.into(),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
}

fn join(v: &[usize]) -> String {
    format!("{v:?}")
}

/// Runs the whole pipeline on a validated parametrization.
pub fn analyze(phi: &Parametrization, opts: &Options) -> Result<CurveReport> {
    let d = phi.degree();
    let e = musyz::properness(phi);
    if e > 1 {
        return Err(CurveError::ImproperParametrization(e));
    }
    let basis = musyz::mu_basis(phi)?;
    let curve = musyz::implicit_from_basis(phi, &basis)?;
    let f = &curve.f;
    let (_, a) = dualgeom::dual_parametrization(phi)?;
    let fib = fibers::analyze_fibers(phi, &a)?;
    let dual = if opts.skip_dual {
        None
    } else {
        Some(dualgeom::discriminant_factorization(phi, &fib.points, Some(f))?)
    };
    let (inv, orc) = if d >= 3 {
        let (inv, orc) = rayon::join(
            || difforms::freeness_verdict(phi, opts.max_q),
            || oracle::oracle_report(f),
        );
        (Some(inv?), Some(orc?))
    } else {
        (None, None)
    };
    let tilde: Vec<TildeEcho> = if opts.deep && d >= 3 {
        [2 * d - 2, 2 * d]
            .into_iter()
            .map(|q| {
                let (k1, k2) = difforms::tilde_kernel_dims(phi, f, q);
                TildeEcho { q, k1, k2 }
            })
            .collect()
    } else {
        Vec::new()
    };

    let mut led = Ledger::default();
    led.eq("mu_degree_sum", basis.mu1 + basis.mu2, d);
    let lambda = musyz::minors_constant(&basis, phi);
    led.holds(
        "mu_minors_proportional",
        lambda.is_some(),
        lambda.as_ref().map_or("none".into(), format_rational),
        "nonzero constant",
    );
    led.eq("implicit_vanishes", f.compose(phi.forms()), 0);
    led.eq("implicit_degree", f.degree(), d);
    let minors = dualgeom::jacobian_minors(phi);
    for (k, (i, j)) in qforms::PAIRS.iter().enumerate() {
        led.eq(
            format!("diagonal_law_{i}{j}"),
            qforms::diagonal_law(phi, &fib.data.q[k]),
            &minors[k],
        );
    }
    if let Some(dual) = &dual {
        led.eq("dual_degree", dual.d_dual, 2 * (d - 1) - dual.a.degree());
        led.eq("dual_vanishes", dual.f_dual.compose(&dual.phi_dual), 0);
        let psi_ok = dual
            .psi
            .as_ref()
            .is_some_and(|(psi, _)| musyz::proportionality(psi, &dual.phi_dual).is_some());
        led.holds("gradient_dual_parallel", psi_ok, "psi", "phi_dual");
        let rebuilt = (&dual.f_dual * &dual.singular_lines).scale(&dual.constant);
        let uvw = ["u", "v", "w"];
        led.eq(
            "discriminant_factorization",
            dual.discriminant.to_string_in(uvw),
            rebuilt.to_string_in(uvw),
        );
        let mut product = TernaryForm::from_terms(0, [((0, 0, 0), rat(1))]);
        for l in &dual.lines {
            for _ in 0..l.exponent {
                product = &product * &l.line;
            }
        }
        led.eq(
            "singular_lines",
            dual.singular_lines.to_string_in(uvw),
            (&product * &dual.residual).to_string_in(uvw),
        );
        if fib.complete {
            led.eq("residual_lines", dual.residual.degree(), 0);
        }
    }
    let excess: usize = fib.points.iter().map(|p| p.m - p.r).sum();
    if fib.complete {
        led.eq("branch_excess", excess, a.degree());
    }
    for p in &fib.points {
        led.eq(format!("pullback_degree {}", p.point), p.h.degree(), p.m);
        if p.m < d {
            led.holds(format!("mk_rank {}", p.point), fibers::mk_rank_test(phi, &p.h), "nullity >= 2", "nullity >= 2");
        }
    }
    if let Some(w) = &fib.cuspidality.witness {
        led.holds("witness_verifies", w.verify(phi), w, "identification");
    }
    if fib.cuspidality.status == CuspidalityStatus::Cuspidal {
        let max_r = fib.points.iter().map(|p| p.r).max().unwrap_or(1);
        led.eq("cuspidal_branches", max_r, 1);
    }
    if let (Some(inv), Some(orc)) = (&inv, &orc) {
        led.eq("tau", inv.tau, orc.tau_f);
        led.eq("mdr", inv.mdr, orc.mdr_f);
        led.eq("verdict", inv.verdict, orc.verdict_f);
        led.eq("delta", inv.delta, (d - 1) * (d - 2) / 2);
        let lhs: Vec<usize> = inv.a_seq[..=d].to_vec();
        let rhs: Vec<usize> = (0..=d).map(|q| difforms::euler_part(q) + orc.ar_dims[q]).collect();
        led.eq("a_sequence_identity", join(&lhs), join(&rhs));
        let low: Vec<usize> = orc.n_dims[..=d - 3].to_vec();
        led.eq("n_low_degrees", join(&low), join(&vec![0; d - 2]));
        led.holds("stability_bound", orc.st_f <= 2 * d - 3, orc.st_f, format!("<= {}", 2 * d - 3));
        let tdr = difforms::tau_dr(d, inv.mdr);
        let expected = match inv.verdict {
            Verdict::Free(..) => format!("= {tdr}"),
            Verdict::NearlyFree(..) => format!("= {}", tdr - 1),
            Verdict::Neither => format!("< {}", tdr - 1),
        };
        let ok = match inv.verdict {
            Verdict::Free(..) => inv.tau as i64 == tdr,
            Verdict::NearlyFree(..) => inv.tau as i64 == tdr - 1,
            Verdict::Neither => (inv.tau as i64) < tdr - 1,
        };
        led.holds("tau_versus_tau_dr", ok, inv.tau, expected);
        for t in &tilde {
            led.eq(format!("tilde_k1 q={}", t.q), t.k1, inv.tau);
            if t.q >= 2 * d {
                led.eq(format!("tilde_k2 q={}", t.q), t.k2, 2 * inv.tau);
            }
        }
    }

    let invariants = match &inv {
        Some(inv) => InvariantsEcho {
            tau: inv.tau,
            delta: inv.delta,
            mdr: Some(inv.mdr),
            a_seq: inv.a_seq.clone(),
            verdict: Some(verdict_echo(&inv.verdict)),
            tau_dr: Some(inv.tau_dr),
        },
        None => InvariantsEcho {
            tau: 0,
            delta: 0,
            mdr: None,
            a_seq: Vec::new(),
            verdict: None,
            tau_dr: None,
        },
    };
    Ok(CurveReport {
        input: InputEcho {
            d,
            f0: strings(phi.component(0)),
            f1: strings(phi.component(1)),
            f2: strings(phi.component(2)),
        },
        e,
        mu: [basis.mu1, basis.mu2],
        mu_basis: mu_basis_echo(&basis),
        implicit: implicit_echo(f),
        invariants,
        dual: dual.as_ref().map(dual_echo),
        singular_points: fib.points.iter().map(point_echo).collect(),
        fibers: FiberEcho {
            support: fib.data.t.to_string(),
            residual_support: fib.residual_support.to_string(),
            complete: fib.complete,
        },
        cuspidality: cuspidality_echo(&fib),
        oracle: orc.as_ref().map(oracle_echo),
        tilde_kernels: tilde,
        cross_checks: led.0,
    })
}

/// Proper parametrizations only; improper input yields the error carrying `e`.
fn require_proper(phi: &Parametrization) -> Result<()> {
    match musyz::properness(phi) {
        1 => Ok(()),
        e => Err(CurveError::ImproperParametrization(e)),
    }
}

fn require_d3(phi: &Parametrization, what: &str) -> Result<()> {
    if phi.degree() < 3 {
        return Err(CurveError::InvalidInput(format!("{what} needs d >= 3")));
    }
    Ok(())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Output of `implicitize`.
pub fn implicitize_value(phi: &Parametrization) -> Result<Value> {
    let c = musyz::implicit_equation(phi)?;
    Ok(to_value(&implicit_echo(&c.f)))
}

/// Output of `mubasis`.
pub fn mubasis_value(phi: &Parametrization) -> Result<Value> {
    Ok(to_value(&mu_basis_echo(&musyz::mu_basis(phi)?)))
}

/// Output of `dual`.
pub fn dual_value(phi: &Parametrization) -> Result<Value> {
    require_proper(phi)?;
    let (_, a) = dualgeom::dual_parametrization(phi)?;
    let fib = fibers::analyze_fibers(phi, &a)?;
    let f = musyz::implicit_equation(phi)?.f;
    let dual = dualgeom::discriminant_factorization(phi, &fib.points, Some(&f))?;
    Ok(to_value(&dual_echo(&dual)))
}

#[derive(Serialize)]
struct TjurinaEcho {
    tau: usize,
    delta: usize,
}

/// Output of `tjurina`.
pub fn tjurina_value(phi: &Parametrization) -> Result<Value> {
    require_proper(phi)?;
    let (tau, delta) = difforms::tjurina_delta(phi)?;
    Ok(to_value(&TjurinaEcho { tau, delta }))
}

#[derive(Serialize)]
struct FreenessEcho {
    verdict: String,
    mdr: usize,
    exponents: Option<[usize; 2]>,
    tau: usize,
    tau_dr: i64,
    a_seq: Vec<usize>,
}

/// Output of `freeness`.
pub fn freeness_value(phi: &Parametrization, max_q: Option<usize>) -> Result<Value> {
    require_proper(phi)?;
    require_d3(phi, "freeness")?;
    let r = difforms::freeness_verdict(phi, max_q)?;
    Ok(to_value(&FreenessEcho {
        verdict: r.verdict.name().to_string(),
        mdr: r.mdr,
        exponents: r.verdict.exponents().map(|(a, b)| [a, b]),
        tau: r.tau,
        tau_dr: r.tau_dr,
        a_seq: r.a_seq,
    }))
}

#[derive(Serialize)]
struct PullbackEcho {
    point: String,
    pullback: String,
    multiplicity: usize,
    on_curve: bool,
    branches: Vec<BranchEcho>,
}

/// Output of `pullback --point a,b,c`.
pub fn pullback_value(phi: &Parametrization, point: &P2Point) -> Result<Value> {
    let h = fibers::pullback_polynomial(phi, point);
    let branches = if h.degree() > 0 {
        h.squarefree()
            .into_iter()
            .map(|(factor, multiplicity)| BranchEcho {
                factor: factor.to_string(),
                multiplicity,
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(to_value(&PullbackEcho {
        point: point.to_string(),
        pullback: h.to_string(),
        multiplicity: h.degree(),
        on_curve: h.degree() > 0,
        branches,
    }))
}

#[derive(Serialize)]
struct CuspidalValue {
    #[serde(flatten)]
    verdict: CuspidalityEcho,
    complete: bool,
    singular_points: Vec<PointEcho>,
}

/// Output of `cuspidal`.
pub fn cuspidal_value(phi: &Parametrization) -> Result<Value> {
    require_proper(phi)?;
    let (_, a) = dualgeom::dual_parametrization(phi)?;
    let fib = fibers::analyze_fibers(phi, &a)?;
    Ok(to_value(&CuspidalValue {
        verdict: cuspidality_echo(&fib),
        complete: fib.complete,
        singular_points: fib.points.iter().map(point_echo).collect(),
    }))
}

#[derive(Serialize)]
struct FormsEcho {
    q: usize,
    c0: usize,
    c1: usize,
    c2: usize,
    a: usize,
}

/// Output of `forms --q N`: cokernel dimensions at `N` and `a(N)`.
pub fn forms_value(phi: &Parametrization, q: usize) -> Result<Value> {
    if q < 2 {
        return Err(CurveError::InvalidInput("forms needs q >= 2".into()));
    }
    let (c0, c1, c2) = difforms::coker_dims(phi, q);
    Ok(to_value(&FormsEcho {
        q,
        c0,
        c1,
        c2,
        a: difforms::a_value(phi, q),
    }))
}

/// Indented `key: value` rendering of a JSON value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cubic_report() {
        let r = analyze(&fixtures::cuspidal_cubic(), &Options::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.invariants.tau, 2);
        assert_eq!(r.invariants.verdict.as_ref().unwrap().kind, "nearly free");
        assert_eq!(r.invariants.verdict.as_ref().unwrap().exponents, Some([1, 2]));
        assert_eq!(r.cuspidality.status, "cuspidal");
        assert_eq!(r.implicit.equation, "x*z^2 - y^3");
        let json = r.to_json();
        assert_eq!(CurveReport::from_json(&json).unwrap().to_json(), json);
        assert!(r.to_text().contains("equation: x*z^2 - y^3"));
    }

    #[test]
    fn conic_report_is_degenerate() {
        let r = analyze(&fixtures::conic(), &Options::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!((r.invariants.tau, r.invariants.delta), (0, 0));
        assert!(r.invariants.verdict.is_none() && r.oracle.is_none());
    }

    #[test]
    fn improper_is_rejected() {
        let err = analyze(&fixtures::double_conic(), &Options::default()).unwrap_err();
        assert_eq!(err.to_string(), "improper: e = 2");
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn deep_checks_on_cubic() {
        let opts = Options {
            deep: true,
            ..Options::default()
        };
        let r = analyze(&fixtures::cuspidal_cubic(), &opts).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.tilde_kernels.len(), 2);
        assert_eq!(r.tilde_kernels[1].k2, 4);
    }

    #[test]
    fn subcommand_values() {
        let quintic = fixtures::quintic_free();
        let v = pullback_value(&quintic, &P2Point::from_ints(1, 0, 0)).unwrap();
        assert_eq!(v["pullback"], "t^2");
        let v = pullback_value(&quintic, &P2Point::from_ints(0, 0, 1)).unwrap();
        assert_eq!(v["pullback"], "s^3");
        let v = forms_value(&fixtures::cuspidal_cubic(), 3).unwrap();
        assert_eq!((v["c0"].as_u64(), v["c1"].as_u64(), v["c2"].as_u64()), (Some(1), Some(2), Some(1)));
        let v = freeness_value(&fixtures::quintic_free(), None).unwrap();
        assert_eq!(v["verdict"], "free");
    }
}
