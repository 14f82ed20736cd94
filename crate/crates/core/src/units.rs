//! Laboratory units, natural units, and the frozen constants table.
//!
//! All physics modules work in natural units: hbar = c = 1, energies in eV,
//! lengths and times in 1/eV. Conversion happens exactly once at this
//! boundary, so downstream expressions like `4 * z_r / t` are dimensionless
//! by construction.

use serde::Serialize;

use crate::error::{Error, Result};

/// Frozen constants table (CODATA-2018 values). Changing any entry changes
/// every number this crate produces, so the CLI embeds a digest of this
/// table in its output manifests.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    /// Electron rest energy, eV.
    pub electron_mass: f64,
    /// hbar * c, eV nm.
    pub hbar_c: f64,
    /// hbar, eV fs.
    pub hbar: f64,
    /// Fine-structure constant alpha = e^2 / (4 pi).
    pub fine_structure: f64,
    /// 1 J expressed in eV.
    pub joule_in_ev: f64,
}

pub const CONSTANTS: Constants = Constants {
    electron_mass: 510_998.95,
    hbar_c: 197.326_980,
    hbar: 0.658_212_196,
    fine_structure: 1.0 / 137.035_999,
    joule_in_ev: 6.241_509_074e18,
};

impl Constants {
    /// Reduced Compton wavelength of the electron, nm. In natural units this
    /// is exactly 1 / electron_mass.
    pub fn compton_wavelength_reduced(&self) -> f64 {
        self.hbar_c / self.electron_mass
    }
}

/// The dimensions this crate needs. `FieldSquared` tags squared peak field
/// amplitudes (eV^4 in natural units); it only arises from derived values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dimension {
    Length,
    Time,
    Energy,
    Dimensionless,
    PhotonCount,
    FieldSquared,
}

/// A laboratory-unit scalar tagged with its dimension.
///
/// Canonical carriers: nm for lengths, fs for times, eV for energies.
/// Constructors accept the common laboratory units and normalize.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    value: f64,
    dimension: Dimension,
}

impl Quantity {
    pub fn new(value: f64, dimension: Dimension) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite {
                context: "Quantity::new",
            });
        }
        Ok(Self { value, dimension })
    }

    pub fn nanometers(v: f64) -> Result<Self> {
        Self::new(v, Dimension::Length)
    }

    pub fn micrometers(v: f64) -> Result<Self> {
        Self::new(v * 1.0e3, Dimension::Length)
    }

    pub fn millimeters(v: f64) -> Result<Self> {
        Self::new(v * 1.0e6, Dimension::Length)
    }

    pub fn femtoseconds(v: f64) -> Result<Self> {
        Self::new(v, Dimension::Time)
    }

    pub fn picoseconds(v: f64) -> Result<Self> {
        Self::new(v * 1.0e3, Dimension::Time)
    }

    pub fn electron_volts(v: f64) -> Result<Self> {
        Self::new(v, Dimension::Energy)
    }

    pub fn kilo_electron_volts(v: f64) -> Result<Self> {
        Self::new(v * 1.0e3, Dimension::Energy)
    }

    pub fn joules(v: f64) -> Result<Self> {
        Self::new(v * CONSTANTS.joule_in_ev, Dimension::Energy)
    }

    pub fn dimensionless(v: f64) -> Result<Self> {
        Self::new(v, Dimension::Dimensionless)
    }

    pub fn photon_count(v: f64) -> Result<Self> {
        Self::new(v, Dimension::PhotonCount)
    }

    /// Value in the canonical laboratory carrier of its dimension.
    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn try_add(&self, other: &Quantity) -> Result<Quantity> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: other.dimension,
            });
        }
        Quantity::new(self.value + other.value, self.dimension)
    }

    pub fn try_sub(&self, other: &Quantity) -> Result<Quantity> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: other.dimension,
            });
        }
        Quantity::new(self.value - other.value, self.dimension)
    }

    /// Natural-unit value: eV for energies, 1/eV for lengths and times.
    pub fn to_natural(&self) -> f64 {
        to_natural(self)
    }
}

/// Converts to natural units (powers of eV).
pub fn to_natural(q: &Quantity) -> f64 {
    match q.dimension {
        Dimension::Length => q.value / CONSTANTS.hbar_c,
        Dimension::Time => q.value / CONSTANTS.hbar,
        Dimension::Energy => q.value,
        Dimension::Dimensionless | Dimension::PhotonCount | Dimension::FieldSquared => q.value,
    }
}

/// Inverse of [`to_natural`]; the round trip is the identity to within a
/// few ulp.
pub fn from_natural(value: f64, dimension: Dimension) -> Result<Quantity> {
    if !value.is_finite() {
        return Err(Error::NonFinite {
            context: "from_natural",
        });
    }
    let lab = match dimension {
        Dimension::Length => value * CONSTANTS.hbar_c,
        Dimension::Time => value * CONSTANTS.hbar,
        Dimension::Energy => value,
        Dimension::Dimensionless | Dimension::PhotonCount | Dimension::FieldSquared => value,
    };
    Quantity::new(lab, dimension)
}
