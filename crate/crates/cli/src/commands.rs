//! The `total`, `scan`, and `angular` subcommands.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use vacbi_core::oracle::OracleEval;
use vacbi_core::signal::{self, AngularPoint, SignalEval, SignalReport};
use vacbi_core::units::{Dimension, Quantity};

use crate::config::{parse_quantity, ConfigFile, ParsedConfig};
use crate::manifest::RunManifest;
use crate::{CliError, Scale};

fn fmt(v: f64) -> String {
    // 17 significant digits round-trip any double exactly
    format!("{v:.16e}")
}

fn load(config_path: &Path) -> Result<(ParsedConfig, Vec<u8>), CliError> {
    let bytes = std::fs::read(config_path).map_err(CliError::Io)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| CliError::Config(format!("config is not UTF-8: {e}")))?;
    let parsed = ConfigFile::from_str(&text)?.parse()?;
    Ok((parsed, bytes))
}

#[derive(Serialize)]
struct TotalDocument<'a> {
    manifest: &'a RunManifest,
    report: &'a SignalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_n_perp: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_relative_deviation: Option<f64>,
}

pub fn cmd_total(
    config_path: &Path,
    out: Option<&Path>,
    oracle: bool,
    tol: f64,
    command: String,
) -> Result<(), CliError> {
    let (parsed, bytes) = load(config_path)?;
    let scenario = parsed.scenario()?;
    let eval = SignalEval::new(&scenario).map_err(CliError::Invalid)?;
    // surface discernibility failures as physics-domain errors before
    // reporting anything
    if scenario.purity().is_some() {
        match scenario.background() {
            Some(_) => eval.n_perp_gt_background(),
            None => eval.n_perp_gt(),
        }
        .map_err(CliError::Invalid)?;
    }
    let report = eval.report();
    let manifest = RunManifest::new(command, &bytes);

    println!(
        "{}  (run at unix {})",
        manifest.tool, manifest.timestamp_unix
    );
    println!("config sha256:    {}", manifest.config_digest);
    println!("constants sha256: {}", manifest.constants_digest);
    for w in &report.warnings {
        println!("warning: {w}");
    }
    println!("n_perp            = {}", fmt(report.n_perp));
    println!("n_perp_over_n     = {}", fmt(report.n_perp_over_n));
    println!("f_value           = {}", fmt(report.f_value));
    println!(
        "chi / chi0 / rho  = {} / {} / {}",
        fmt(report.chi),
        fmt(report.chi0),
        fmt(report.rho)
    );
    println!("theta_probe(0)    = {} rad", fmt(report.theta_probe_phi0));
    println!("theta_probe(90)   = {} rad", fmt(report.theta_probe_phi90));
    println!("theta_perp(0)     = {} rad", fmt(report.theta_perp_phi0));
    println!("theta_perp(90)    = {} rad", fmt(report.theta_perp_phi90));
    if let Some(v) = report.n_perp_discernible {
        println!("n_perp_discernible = {}", fmt(v));
    }

    let mut oracle_value = None;
    let mut oracle_dev = None;
    if oracle {
        let total = OracleEval::new(&scenario)
            .map_err(CliError::Invalid)?
            .integrate_full(tol)
            .map_err(CliError::Invalid)?;
        let dev = total.value / report.n_perp - 1.0;
        println!(
            "oracle_n_perp     = {} (+-{}) deviation {:+.3}%",
            fmt(total.value),
            fmt(total.error),
            100.0 * dev
        );
        oracle_value = Some(total.value);
        oracle_dev = Some(dev);
    }

    if let Some(path) = out {
        let doc = TotalDocument {
            manifest: &manifest,
            report: &report,
            oracle_n_perp: oracle_value,
            oracle_relative_deviation: oracle_dev,
        };
        let json = serde_json::to_string_pretty(&doc)
            .map_err(|e| CliError::Config(format!("serializing report: {e}")))?;
        std::fs::write(path, json + "\n").map_err(CliError::Io)?;
    }
    Ok(())
}

pub struct ScanSpec {
    pub param: String,
    pub from: String,
    pub to: String,
    pub steps: usize,
    pub scale: Scale,
}

fn canonical_unit(dim: Dimension) -> &'static str {
    match dim {
        Dimension::Length => "nm",
        Dimension::Time => "fs",
        Dimension::Energy => "eV",
        _ => "1",
    }
}

pub fn cmd_scan(
    config_path: &Path,
    out: &Path,
    spec: &ScanSpec,
    command: String,
) -> Result<(), CliError> {
    let (parsed, bytes) = load(config_path)?;
    let dim = ParsedConfig::path_dimension(&spec.param).ok_or_else(|| {
        CliError::Config(format!(
            "unknown parameter path `{}` (known: {})",
            spec.param,
            ParsedConfig::PARAM_PATHS.join(", ")
        ))
    })?;
    if spec.steps < 2 {
        return Err(CliError::Config("steps must be at least 2".into()));
    }
    let from = parse_quantity(&spec.from, "--from")?;
    let to = parse_quantity(&spec.to, "--to")?;
    for (v, name) in [(&from, "--from"), (&to, "--to")] {
        if v.dimension() != dim
            && !(dim == Dimension::Dimensionless && v.dimension() == Dimension::PhotonCount)
        {
            return Err(CliError::Config(format!(
                "{name}: expected a {dim:?} value for `{}`, got {:?}",
                spec.param,
                v.dimension()
            )));
        }
    }
    let (lo, hi) = (from.value(), to.value());
    if matches!(spec.scale, Scale::Log) && !(lo > 0.0 && hi > 0.0) {
        return Err(CliError::Config(
            "log scale requires positive --from and --to".into(),
        ));
    }
    let values: Vec<f64> = (0..spec.steps)
        .map(|i| {
            let t = i as f64 / (spec.steps - 1) as f64;
            match spec.scale {
                Scale::Linear => lo + (hi - lo) * t,
                Scale::Log => lo * (hi / lo).powf(t),
            }
        })
        .collect();

    let rows: Vec<Result<String, CliError>> = values
        .par_iter()
        .map(|&value| -> Result<String, CliError> {
            let mut cfg = parsed.clone();
            cfg.set_path(
                &spec.param,
                Quantity::new(value, dim).map_err(CliError::Invalid)?,
            )?;
            let scenario = cfg.scenario()?;
            let eval = SignalEval::new(&scenario).map_err(CliError::Invalid)?;
            let discernible = match (scenario.purity(), scenario.background()) {
                (Some(_), Some(_)) => eval.n_perp_gt_background().ok(),
                (Some(_), None) => eval.n_perp_gt().ok(),
                _ => None,
            };
            Ok(format!(
                "{},{},{},{},{},{},{}",
                fmt(value),
                fmt(eval.n_perp_total()),
                fmt(eval.n_perp_over_n()),
                fmt(eval.f_value()),
                fmt(eval.signal_divergence(0.0)),
                fmt(eval.signal_divergence(std::f64::consts::FRAC_PI_2)),
                discernible.map(fmt).unwrap_or_default()
            ))
        })
        .collect();

    let manifest = RunManifest::new(command, &bytes);
    let mut content = manifest.header(
        "param_value,n_perp,n_perp_over_n,f_value,theta_perp_phi0,theta_perp_phi90,n_perp_discernible",
    );
    content.push_str(&format!(
        "# param: {} [{}], scale {}\n",
        spec.param,
        canonical_unit(dim),
        match spec.scale {
            Scale::Linear => "linear",
            Scale::Log => "log",
        }
    ));
    for row in rows {
        content.push_str(&row?);
        content.push('\n');
    }
    std::fs::write(out, content).map_err(CliError::Io)?;
    println!("wrote {} rows to {}", spec.steps, out.display());
    Ok(())
}

pub fn cmd_angular(
    config_path: &Path,
    out: &Path,
    theta_max: Option<&str>,
    grid: usize,
    command: String,
) -> Result<(), CliError> {
    if grid < 2 {
        return Err(CliError::Config("grid must be at least 2".into()));
    }
    let (parsed, bytes) = load(config_path)?;
    let scenario = parsed.scenario()?;
    let eval = SignalEval::new(&scenario).map_err(CliError::Invalid)?;
    let theta_max = match theta_max {
        Some(text) => {
            let q = parse_quantity(text, "--theta-max")?;
            if q.dimension() != Dimension::Dimensionless {
                return Err(CliError::Config(
                    "--theta-max takes an angle (rad/mrad/urad/deg)".into(),
                ));
            }
            let v = q.value();
            if v <= 0.0 {
                return Err(CliError::Config("--theta-max must be positive".into()));
            }
            v
        }
        None => {
            2.0 * eval
                .signal_divergence(0.0)
                .max(eval.signal_divergence(std::f64::consts::FRAC_PI_2))
        }
    };
    let manifest = RunManifest::new(command, &bytes);
    let mut content = manifest.header("theta,phi,d2n_perp,d2n_probe,ratio");
    let phis: Vec<f64> = (0..16)
        .map(|j| j as f64 * std::f64::consts::PI / 8.0)
        .collect();
    if scenario.purity().is_some() {
        for &phi in &phis {
            match eval.theta_equal(phi) {
                Ok(theta) => content.push_str(&format!(
                    "# theta_equal phi={} theta={}\n",
                    fmt(phi),
                    fmt(theta)
                )),
                Err(e) => content.push_str(&format!("# theta_equal phi={} none ({e})\n", fmt(phi))),
            }
        }
    }
    for i in 0..grid {
        let theta = theta_max * i as f64 / (grid - 1) as f64;
        for &phi in &phis {
            let point = AngularPoint { theta, phi };
            let dsig = eval.d2n_perp(&point);
            let dprobe = signal::probe_d2n(&scenario.probe, &point);
            content.push_str(&format!(
                "{},{},{},{},{}\n",
                fmt(theta),
                fmt(phi),
                fmt(dsig),
                fmt(dprobe),
                fmt(dsig / dprobe)
            ));
        }
    }
    std::fs::write(out, content).map_err(CliError::Io)?;
    println!(
        "wrote {} x {} angular grid to {}",
        grid,
        phis.len(),
        out.display()
    );
    Ok(())
}
