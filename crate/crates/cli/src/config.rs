//! Scenario configuration: TOML schema with explicit unit suffixes on
//! every physical quantity, parsing into validated scenario types, and
//! dotted-path access for parameter scans.

use serde::Deserialize;
use vacbi_core::beams::{CollisionOffsets, EffectiveWaistMode, ProbePulse, PumpPulse, Scenario};
use vacbi_core::units::{Dimension, Quantity};

use crate::CliError;

/// Raw TOML shape; all physical quantities are strings like `"30 fs"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default = "default_convention")]
    pub duration_convention: String,
    pub pump: PumpSection,
    pub probe: ProbeSection,
    #[serde(default)]
    pub offsets: Option<OffsetsSection>,
    #[serde(default)]
    pub polarimeter: Option<PolarimeterSection>,
    #[serde(default)]
    pub background: Option<BackgroundSection>,
}

fn default_convention() -> String {
    "literal".to_string()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PumpSection {
    pub wavelength: String,
    pub pulse_energy: String,
    pub duration: String,
    pub waist: String,
    #[serde(default = "default_waist_mode")]
    pub effective_waist_mode: String,
}

fn default_waist_mode() -> String {
    "average".to_string()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeSection {
    pub photon_energy: String,
    pub photon_count: f64,
    pub duration: String,
    pub waist_1: String,
    pub waist_2: String,
    #[serde(default)]
    pub ellipse_angle: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OffsetsSection {
    #[serde(default)]
    pub x0: Option<String>,
    #[serde(default)]
    pub y0: Option<String>,
    #[serde(default)]
    pub z0: Option<String>,
    #[serde(default)]
    pub t0: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarimeterSection {
    pub purity: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BackgroundSection {
    pub b: f64,
    pub epsilon: f64,
}

/// Intensity-FWHM to the field-model duration convention.
const FWHM_FACTOR: f64 = 0.600_561_204_393_225; // 1 / sqrt(2 ln 2)

/// Fully parsed configuration in validated quantities; scans mutate this
/// and rebuild the scenario per row.
#[derive(Debug, Clone)]
pub struct ParsedConfig {
    pub pump_wavelength: Quantity,
    pub pump_pulse_energy: Quantity,
    pub pump_duration: Quantity,
    pub pump_waist: Quantity,
    pub pump_mode: EffectiveWaistMode,
    pub probe_photon_energy: Quantity,
    pub probe_photon_count: Quantity,
    pub probe_duration: Quantity,
    pub probe_waist_1: Quantity,
    pub probe_waist_2: Quantity,
    pub probe_ellipse_angle: f64,
    pub x0: Quantity,
    pub y0: Quantity,
    pub z0: Quantity,
    pub t0: Quantity,
    pub purity: Option<f64>,
    pub background: Option<(f64, f64)>,
    pub fwhm_durations: bool,
}

fn config_err(field: &str, message: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("{field}: {message}"))
}

/// Parses `"<number> <unit>"` (or a bare number, possibly in scientific
/// notation, for dimensionless values). The unit is the trailing run of
/// letters, so exponents like `1e11` stay part of the number.
pub fn parse_quantity(text: &str, field: &str) -> Result<Quantity, CliError> {
    let trimmed = text.trim();
    let split = trimmed
        .char_indices()
        .rev()
        .take_while(|(_, c)| c.is_ascii_alphabetic() || *c == 'µ')
        .last()
        .map(|(i, _)| i)
        .unwrap_or(trimmed.len());
    let (num_str, unit) = (&trimmed[..split], trimmed[split..].trim());
    let value: f64 = num_str
        .trim()
        .parse()
        .map_err(|_| config_err(field, format!("cannot parse number in `{trimmed}`")))?;
    let q = match unit {
        "" => Quantity::dimensionless(value),
        "nm" => Quantity::nanometers(value),
        "um" | "µm" => Quantity::micrometers(value),
        "mm" => Quantity::millimeters(value),
        "fs" => Quantity::femtoseconds(value),
        "ps" => Quantity::picoseconds(value),
        "eV" => Quantity::electron_volts(value),
        "keV" => Quantity::kilo_electron_volts(value),
        "J" => Quantity::joules(value),
        "mJ" => Quantity::joules(value * 1.0e-3),
        "rad" => Quantity::dimensionless(value),
        "mrad" => Quantity::dimensionless(value * 1.0e-3),
        "urad" | "µrad" => Quantity::dimensionless(value * 1.0e-6),
        "deg" => Quantity::dimensionless(value.to_radians()),
        other => {
            return Err(config_err(
                field,
                format!("unknown unit `{other}` (use nm/um/mm, fs/ps, eV/keV, J/mJ, rad/deg)"),
            ))
        }
    };
    q.map_err(|e| config_err(field, e))
}

fn parse_with_dim(text: &str, field: &str, want: Dimension) -> Result<Quantity, CliError> {
    let q = parse_quantity(text, field)?;
    if q.dimension() != want {
        return Err(config_err(
            field,
            format!("expected a {want:?} quantity, got {:?}", q.dimension()),
        ));
    }
    Ok(q)
}

impl ConfigFile {
    pub fn from_str(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn parse(&self) -> Result<ParsedConfig, CliError> {
        let fwhm = match self.duration_convention.as_str() {
            "literal" => false,
            "fwhm" => true,
            other => {
                return Err(config_err(
                    "duration_convention",
                    format!("must be `literal` or `fwhm`, got `{other}`"),
                ))
            }
        };
        let dur = |text: &str, field: &str| -> Result<Quantity, CliError> {
            let q = parse_with_dim(text, field, Dimension::Time)?;
            if fwhm {
                Quantity::new(q.value() * FWHM_FACTOR, Dimension::Time)
                    .map_err(|e| config_err(field, e))
            } else {
                Ok(q)
            }
        };
        let pump_waist = parse_with_dim(&self.pump.waist, "pump.waist", Dimension::Length)?;
        let pump_mode = match self.pump.effective_waist_mode.trim() {
            "average" => EffectiveWaistMode::Average,
            "naive" => EffectiveWaistMode::Naive,
            other => {
                // explicit radius, e.g. `1.2 um`
                let q = parse_with_dim(other, "pump.effective_waist_mode", Dimension::Length)
                    .map_err(|_| {
                        config_err(
                            "pump.effective_waist_mode",
                            format!(
                                "must be `average`, `naive`, or an explicit length, got `{other}`"
                            ),
                        )
                    })?;
                EffectiveWaistMode::Explicit(q.to_natural())
            }
        };
        let off = self.offsets.clone().unwrap_or(OffsetsSection {
            x0: None,
            y0: None,
            z0: None,
            t0: None,
        });
        let zero_len = || Quantity::micrometers(0.0).expect("zero is finite");
        let zero_time = || Quantity::femtoseconds(0.0).expect("zero is finite");
        let parse_opt_len = |v: &Option<String>, field: &str| -> Result<Quantity, CliError> {
            v.as_deref()
                .map(|s| parse_with_dim(s, field, Dimension::Length))
                .unwrap_or_else(|| Ok(zero_len()))
        };
        Ok(ParsedConfig {
            pump_wavelength: parse_with_dim(
                &self.pump.wavelength,
                "pump.wavelength",
                Dimension::Length,
            )?,
            pump_pulse_energy: parse_with_dim(
                &self.pump.pulse_energy,
                "pump.pulse_energy",
                Dimension::Energy,
            )?,
            pump_duration: dur(&self.pump.duration, "pump.duration")?,
            pump_waist,
            pump_mode,
            probe_photon_energy: parse_with_dim(
                &self.probe.photon_energy,
                "probe.photon_energy",
                Dimension::Energy,
            )?,
            probe_photon_count: Quantity::photon_count(self.probe.photon_count)
                .map_err(|e| config_err("probe.photon_count", e))?,
            probe_duration: dur(&self.probe.duration, "probe.duration")?,
            probe_waist_1: parse_with_dim(&self.probe.waist_1, "probe.waist_1", Dimension::Length)?,
            probe_waist_2: parse_with_dim(&self.probe.waist_2, "probe.waist_2", Dimension::Length)?,
            probe_ellipse_angle: self
                .probe
                .ellipse_angle
                .as_deref()
                .map(|s| parse_quantity(s, "probe.ellipse_angle").map(|q| q.value()))
                .unwrap_or(Ok(0.0))?,
            x0: parse_opt_len(&off.x0, "offsets.x0")?,
            y0: parse_opt_len(&off.y0, "offsets.y0")?,
            z0: parse_opt_len(&off.z0, "offsets.z0")?,
            t0: off
                .t0
                .as_deref()
                .map(|s| parse_with_dim(s, "offsets.t0", Dimension::Time))
                .unwrap_or_else(|| Ok(zero_time()))?,
            purity: self.polarimeter.as_ref().map(|p| p.purity),
            background: self.background.as_ref().map(|b| (b.b, b.epsilon)),
            fwhm_durations: fwhm,
        })
    }
}

impl ParsedConfig {
    pub fn scenario(&self) -> Result<Scenario, CliError> {
        let pump = PumpPulse::new(
            self.pump_wavelength,
            self.pump_pulse_energy,
            self.pump_duration,
            self.pump_waist,
            self.pump_mode,
        )
        .map_err(CliError::Invalid)?;
        let probe = ProbePulse::new(
            self.probe_photon_energy,
            self.probe_photon_count,
            self.probe_duration,
            self.probe_waist_1,
            self.probe_waist_2,
            self.probe_ellipse_angle,
        )
        .map_err(CliError::Invalid)?;
        let offsets =
            CollisionOffsets::new(self.x0, self.y0, self.z0, self.t0).map_err(CliError::Invalid)?;
        let mut scenario = Scenario::new(pump, probe, offsets);
        if let Some(p) = self.purity {
            scenario = scenario.with_purity(p).map_err(CliError::Invalid)?;
        }
        if let Some((b, eps)) = self.background {
            scenario = scenario
                .with_background(b, eps)
                .map_err(CliError::Invalid)?;
        }
        Ok(scenario)
    }

    /// Every scannable scalar field.
    pub const PARAM_PATHS: [&'static str; 17] = [
        "pump.wavelength",
        "pump.pulse_energy",
        "pump.duration",
        "pump.waist",
        "probe.photon_energy",
        "probe.photon_count",
        "probe.duration",
        "probe.waist_1",
        "probe.waist_2",
        "probe.ellipse_angle",
        "offsets.x0",
        "offsets.y0",
        "offsets.z0",
        "offsets.t0",
        "polarimeter.purity",
        "background.b",
        "background.epsilon",
    ];

    /// Dimension the scan values must carry for `path`.
    pub fn path_dimension(path: &str) -> Option<Dimension> {
        Some(match path {
            "pump.wavelength" | "pump.waist" | "probe.waist_1" | "probe.waist_2" | "offsets.x0"
            | "offsets.y0" | "offsets.z0" => Dimension::Length,
            "pump.duration" | "probe.duration" | "offsets.t0" => Dimension::Time,
            "pump.pulse_energy" | "probe.photon_energy" => Dimension::Energy,
            "probe.photon_count"
            | "probe.ellipse_angle"
            | "polarimeter.purity"
            | "background.b"
            | "background.epsilon" => Dimension::Dimensionless,
            _ => return None,
        })
    }

    /// Sets one scalar by dotted path. The quantity must carry the path's
    /// dimension (photon counts accept dimensionless values).
    pub fn set_path(&mut self, path: &str, q: Quantity) -> Result<(), CliError> {
        let want = Self::path_dimension(path).ok_or_else(|| {
            CliError::Config(format!(
                "unknown parameter path `{path}` (known: {})",
                Self::PARAM_PATHS.join(", ")
            ))
        })?;
        if q.dimension() != want
            && !(want == Dimension::Dimensionless && q.dimension() == Dimension::PhotonCount)
        {
            return Err(config_err(
                path,
                format!("expected a {want:?} value, got {:?}", q.dimension()),
            ));
        }
        let fwhm_dur = |q: Quantity| -> Result<Quantity, CliError> {
            if self.fwhm_durations {
                Quantity::new(q.value() * FWHM_FACTOR, Dimension::Time)
                    .map_err(|e| config_err(path, e))
            } else {
                Ok(q)
            }
        };
        match path {
            "pump.wavelength" => self.pump_wavelength = q,
            "pump.pulse_energy" => self.pump_pulse_energy = q,
            "pump.duration" => self.pump_duration = fwhm_dur(q)?,
            "pump.waist" => self.pump_waist = q,
            "probe.photon_energy" => self.probe_photon_energy = q,
            "probe.photon_count" => {
                self.probe_photon_count =
                    Quantity::photon_count(q.value()).map_err(|e| config_err(path, e))?
            }
            "probe.duration" => self.probe_duration = fwhm_dur(q)?,
            "probe.waist_1" => self.probe_waist_1 = q,
            "probe.waist_2" => self.probe_waist_2 = q,
            "probe.ellipse_angle" => self.probe_ellipse_angle = q.value(),
            "offsets.x0" => self.x0 = q,
            "offsets.y0" => self.y0 = q,
            "offsets.z0" => self.z0 = q,
            "offsets.t0" => self.t0 = q,
            "polarimeter.purity" => self.purity = Some(q.value()),
            "background.b" => match &mut self.background {
                Some((b, _)) => *b = q.value(),
                None => {
                    return Err(config_err(
                        "background.b",
                        "scanning the background level needs a [background] section \
                         providing epsilon",
                    ))
                }
            },
            "background.epsilon" => match &mut self.background {
                Some((_, eps)) => *eps = q.value(),
                None => {
                    return Err(config_err(
                        "background.epsilon",
                        "scanning the background divergence needs a [background] section \
                         providing b",
                    ))
                }
            },
            _ => unreachable!("dimension table and setter must list the same paths"),
        }
        Ok(())
    }
}
