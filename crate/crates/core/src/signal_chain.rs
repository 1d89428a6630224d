//! Element-by-element power propagation and Gaussian Q-factor BER.

use std::f64::consts::SQRT_2;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{ComponentLosses, FiberProfile};
use crate::power_budget::splitter_loss;
use crate::units::dbm_to_watts;

/// Receiver noise standard deviation in A used when none is given.
///
/// With 0.9 A/W responsivity this puts end-point powers between -25 and
/// -26.6 dBm into the 1e-6 .. 1e-3 BER range.
pub const DEFAULT_NOISE_SIGMA: f64 = 6.2e-7;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ChainElement {
    FiberSegment {
        length: f64,
        fiber: FiberProfile,
    },
    Connector,
    Splice,
    Splitter {
        ratio: u32,
    },
    Amplifier {
        gain: f64,
    },
    /// Fixed loss in dB: system margin or a lumped downstream budget.
    MarginPad {
        loss: f64,
    },
}

impl ChainElement {
    /// Loss and gain of the element in dB.
    pub fn loss_and_gain(&self, losses: &ComponentLosses) -> Result<(f64, f64)> {
        match self {
            ChainElement::FiberSegment { length, fiber } => {
                if !(length.is_finite() && *length >= 0.0) {
                    return Err(Error::domain(
                        "fiber segment length",
                        format!("{length} km"),
                    ));
                }
                fiber.validate()?;
                Ok((fiber.attenuation * length, 0.0))
            }
            ChainElement::Connector => Ok((losses.connector_loss, 0.0)),
            ChainElement::Splice => Ok((losses.splice_loss, 0.0)),
            ChainElement::Splitter { ratio } => {
                Ok((splitter_loss(*ratio, losses.splitter_excess_loss)?, 0.0))
            }
            ChainElement::Amplifier { gain } => {
                if !(gain.is_finite() && *gain > 0.0) {
                    return Err(Error::domain("amplifier gain", format!("{gain} dB")));
                }
                Ok((0.0, *gain))
            }
            ChainElement::MarginPad { loss } => {
                if !(loss.is_finite() && *loss >= 0.0) {
                    return Err(Error::domain("margin pad", format!("{loss} dB")));
                }
                Ok((*loss, 0.0))
            }
        }
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainElement::FiberSegment { length, fiber } => {
                write!(f, "fiber {} {length} km", fiber.name)
            }
            ChainElement::Connector => f.write_str("connector"),
            ChainElement::Splice => f.write_str("splice"),
            ChainElement::Splitter { ratio } => write!(f, "splitter 1x{ratio}"),
            ChainElement::Amplifier { gain } => write!(f, "amplifier +{gain} dB"),
            ChainElement::MarginPad { loss } => write!(f, "pad {loss} dB"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TracePoint {
    pub label: String,
    /// dBm.
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerTrace {
    pub points: Vec<TracePoint>,
}

impl PowerTrace {
    pub fn final_power(&self) -> f64 {
        self.points.last().map_or(f64::NAN, |p| p.power)
    }
}

/// Propagates `input_power` (dBm) through `chain`, labelling each point with
/// the element description.
pub fn propagate(
    input_power: f64,
    chain: &[ChainElement],
    losses: &ComponentLosses,
) -> Result<PowerTrace> {
    let labelled: Vec<(String, ChainElement)> =
        chain.iter().map(|e| (e.to_string(), e.clone())).collect();
    propagate_labelled(input_power, &labelled, losses)
}

pub fn propagate_labelled(
    input_power: f64,
    chain: &[(String, ChainElement)],
    losses: &ComponentLosses,
) -> Result<PowerTrace> {
    if !input_power.is_finite() {
        return Err(Error::domain("input power", format!("{input_power} dBm")));
    }
    let mut points = Vec::with_capacity(chain.len() + 1);
    points.push(TracePoint {
        label: "input".to_owned(),
        power: input_power,
    });
    let mut power = input_power;
    for (label, element) in chain {
        let (loss, gain) = element.loss_and_gain(losses)?;
        power = power - loss + gain;
        points.push(TracePoint {
            label: label.clone(),
            power,
        });
    }
    Ok(PowerTrace { points })
}

/// Splits a chain into its loss and gain terms in dB, in chain order.
pub fn chain_terms<'a>(
    chain: impl IntoIterator<Item = &'a ChainElement>,
    losses: &ComponentLosses,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut loss_terms = Vec::new();
    let mut gain_terms = Vec::new();
    for element in chain {
        let (loss, gain) = element.loss_and_gain(losses)?;
        if gain > 0.0 {
            gain_terms.push(gain);
        } else {
            loss_terms.push(loss);
        }
    }
    Ok((loss_terms, gain_terms))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BerEstimate {
    pub q_factor: f64,
    pub ber: f64,
}

/// Bit error rate of a Gaussian decision with the given Q factor.
pub fn ber_from_q(q: f64) -> f64 {
    0.5 * libm::erfc(q / SQRT_2)
}

/// Q factor and BER at a receiver seeing `received_power` dBm.
///
/// The photocurrent `responsivity * P` is compared against a single
/// receiver noise standard deviation `noise_sigma` in amperes.
pub fn estimate_ber(
    received_power: f64,
    responsivity: f64,
    noise_sigma: f64,
) -> Result<BerEstimate> {
    if !(noise_sigma.is_finite() && noise_sigma > 0.0) {
        return Err(Error::domain("noise sigma", format!("{noise_sigma} A")));
    }
    if !(responsivity.is_finite() && responsivity > 0.0) {
        return Err(Error::domain("responsivity", format!("{responsivity} A/W")));
    }
    if received_power.is_nan() || received_power == f64::INFINITY {
        return Err(Error::domain(
            "received power",
            format!("{received_power} dBm"),
        ));
    }
    let photocurrent = responsivity * dbm_to_watts(received_power);
    let q_factor = photocurrent / noise_sigma;
    Ok(BerEstimate {
        q_factor,
        ber: ber_from_q(q_factor),
    })
}
