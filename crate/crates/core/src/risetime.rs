//! Rise-time budget: system ceiling, chromatic-dispersion rise time and the
//! root-sum-square total.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{FiberProfile, Span, TransceiverProfile};
use crate::standards::{LineCode, StandardProfile};

const PS_PER_S: f64 = 1e12;

/// Maximum allowed system rise time in ps: 70 % of the bit period for NRZ,
/// 35 % for RZ.
pub fn max_system_risetime(bit_rate: f64, line_code: LineCode) -> Result<f64> {
    if !(bit_rate.is_finite() && bit_rate > 0.0) {
        return Err(Error::domain("bit rate", format!("{bit_rate} bit/s")));
    }
    Ok(line_code.period_fraction() * PS_PER_S / bit_rate)
}

/// Rise time in ps contributed by chromatic dispersion over `length` km.
pub fn dispersion_risetime(dispersion: f64, spectral_width: f64, length: f64) -> f64 {
    dispersion * spectral_width * length
}

/// Root-sum-square of transmitter, receiver and fiber rise times.
pub fn total_risetime(tx: f64, rx: f64, fiber: f64) -> f64 {
    // sorted so the result does not depend on argument order
    let mut terms = [tx, rx, fiber];
    terms.sort_by(f64::total_cmp);
    terms[0].hypot(terms[1]).hypot(terms[2])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RiseTimeReport {
    pub span_id: String,
    pub ceiling: f64,
    pub dispersion_component: f64,
    pub tx_component: f64,
    pub rx_component: f64,
    pub total: f64,
    pub pass: bool,
}

impl RiseTimeReport {
    pub fn margin(&self) -> f64 {
        self.ceiling - self.total
    }
}

pub fn span_risetime_report(
    span: &Span,
    fiber: &FiberProfile,
    transceiver: &TransceiverProfile,
    profile: &StandardProfile,
) -> Result<RiseTimeReport> {
    if !(span.length.is_finite() && span.length >= 0.0) {
        return Err(Error::domain(
            "span length",
            format!("{}: {} km", span.id, span.length),
        ));
    }
    let ceiling = profile.rise_time_ceiling();
    let dispersion_component =
        dispersion_risetime(fiber.dispersion, transceiver.spectral_width, span.length);
    let total = total_risetime(
        transceiver.tx_rise_time,
        transceiver.rx_rise_time,
        dispersion_component,
    );
    Ok(RiseTimeReport {
        span_id: span.id.clone(),
        ceiling,
        dispersion_component,
        tx_component: transceiver.tx_rise_time,
        rx_component: transceiver.rx_rise_time,
        total,
        pass: total <= ceiling,
    })
}
