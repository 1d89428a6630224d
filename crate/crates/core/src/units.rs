//! Decibel and linear power conversions.
//!
//! Powers are carried as `f64` dBm and losses or gains as `f64` dB
//! throughout the crate. Losses are always non-negative magnitudes and are
//! subtracted when applied to a power level.

/// Converts an absolute power level in dBm to watts.
///
/// `-inf` dBm maps to exactly 0 W.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// Converts watts to dBm. Zero watts maps to `-inf`.
pub fn watts_to_dbm(watts: f64) -> f64 {
    10.0 * watts.log10() + 30.0
}

/// Power ratio of a 1xN split expressed in dB.
pub fn split_ratio_db(ways: u32) -> f64 {
    10.0 * f64::from(ways).log10()
}
