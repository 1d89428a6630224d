//! Named compliance profiles and pass/fail verdicts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::risetime::max_system_risetime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineCode {
    #[serde(rename = "NRZ")]
    Nrz,
    #[serde(rename = "RZ")]
    Rz,
}

impl LineCode {
    /// Fraction of the bit period available for the system rise time.
    pub fn period_fraction(self) -> f64 {
        match self {
            LineCode::Nrz => 0.7,
            LineCode::Rz => 0.35,
        }
    }
}

/// Downlink receiver threshold at the OLT side of a GPON link.
pub const GPON_DOWNLINK_OLT: &str = "gpon-downlink-olt";
/// Receiver threshold at the subscriber end point (ONU).
pub const GPON_ONU_ENDPOINT: &str = "gpon-onu-endpoint";
/// Minimum sensitivity of the backbone receiver datasheet.
pub const STM64_RECEIVER: &str = "stm64-receiver";

/// STM-64 line rate in bit/s.
pub const STM64_BIT_RATE: f64 = 10e9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile")]
pub struct StandardProfile {
    name: String,
    bit_rate: f64,
    line_code: LineCode,
    rx_sensitivity: f64,
    #[serde(default)]
    notes: String,
    #[serde(skip)]
    ceiling: f64,
}

#[derive(Deserialize)]
struct RawProfile {
    name: String,
    bit_rate: f64,
    line_code: LineCode,
    rx_sensitivity: f64,
    #[serde(default)]
    notes: String,
}

impl TryFrom<RawProfile> for StandardProfile {
    type Error = Error;

    fn try_from(raw: RawProfile) -> Result<Self> {
        StandardProfile::new(
            raw.name,
            raw.bit_rate,
            raw.line_code,
            raw.rx_sensitivity,
            raw.notes,
        )
    }
}

impl StandardProfile {
    pub fn new(
        name: impl Into<String>,
        bit_rate: f64,
        line_code: LineCode,
        rx_sensitivity: f64,
        notes: impl Into<String>,
    ) -> Result<Self> {
        let name = name.into();
        if !rx_sensitivity.is_finite() {
            return Err(Error::domain(
                "receiver sensitivity",
                format!("{name}: {rx_sensitivity} dBm"),
            ));
        }
        let ceiling = max_system_risetime(bit_rate, line_code)?;
        Ok(StandardProfile {
            name,
            bit_rate,
            line_code,
            rx_sensitivity,
            notes: notes.into(),
            ceiling,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn bit_rate(&self) -> f64 {
        self.bit_rate
    }

    pub fn line_code(&self) -> LineCode {
        self.line_code
    }

    pub fn rx_sensitivity(&self) -> f64 {
        self.rx_sensitivity
    }

    pub fn notes(&self) -> &str {
        &self.notes
    }

    /// Maximum system rise time in ps for this bit rate and line code.
    pub fn rise_time_ceiling(&self) -> f64 {
        self.ceiling
    }
}

/// The profiles shipped with the tool. All three carry the STM-64 NRZ line
/// rate of the backbone so that rise-time verdicts use the 70 ps ceiling.
pub fn builtin_profiles() -> Vec<StandardProfile> {
    let make = |name: &str, sens: f64, notes: &str| {
        StandardProfile::new(name, STM64_BIT_RATE, LineCode::Nrz, sens, notes)
            .expect("built-in profile is valid")
    };
    vec![
        make(
            GPON_DOWNLINK_OLT,
            -21.0,
            "ITU-T G.984.2 downlink receiver at the backbone/distribution boundary",
        ),
        make(
            GPON_ONU_ENDPOINT,
            -28.0,
            "ITU-T G.984.2 distribution end point (ONU)",
        ),
        make(
            STM64_RECEIVER,
            -38.0,
            "backbone receiver minimum sensitivity",
        ),
    ]
}

/// Looks `name` up among `custom` profiles first, then the built-ins.
pub fn find_profile(name: &str, custom: &[StandardProfile]) -> Result<StandardProfile> {
    custom
        .iter()
        .find(|p| p.name == name)
        .cloned()
        .or_else(|| builtin_profiles().into_iter().find(|p| p.name == name))
        .ok_or_else(|| Error::UnknownStandard(name.to_owned()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// Value must be at least the threshold.
    AtLeast,
    /// Value must not exceed the threshold.
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub quantity: String,
    pub unit: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub comparison: Comparison,
    pub pass: bool,
    /// Positive when the value is on the passing side of the threshold.
    pub margin: f64,
}

impl Verdict {
    fn new(
        quantity: impl Into<String>,
        unit: &'static str,
        value: f64,
        threshold: f64,
        comparison: Comparison,
    ) -> Self {
        let (pass, margin) = match comparison {
            Comparison::AtLeast => (value >= threshold, value - threshold),
            Comparison::AtMost => (value <= threshold, threshold - value),
        };
        Verdict {
            quantity: quantity.into(),
            unit,
            value,
            threshold,
            comparison,
            pass,
            margin,
        }
    }

    /// Re-derives the pass flag from value, threshold and comparison.
    pub fn recheck(&self) -> bool {
        match self.comparison {
            Comparison::AtLeast => self.value >= self.threshold,
            Comparison::AtMost => self.value <= self.threshold,
        }
    }
}

/// Received power must reach the profile's sensitivity.
pub fn power_verdict(received: f64, profile: &StandardProfile) -> Verdict {
    Verdict::new(
        format!("received power ({})", profile.name),
        "dBm",
        received,
        profile.rx_sensitivity,
        Comparison::AtLeast,
    )
}

/// Total rise time must not exceed the profile's ceiling.
pub fn risetime_verdict(total_rise: f64, profile: &StandardProfile) -> Verdict {
    Verdict::new(
        format!("rise time ({})", profile.name),
        "ps",
        total_rise,
        profile.rise_time_ceiling(),
        Comparison::AtMost,
    )
}
