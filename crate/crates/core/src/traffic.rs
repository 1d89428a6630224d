//! Subscriber forecasting: population to LTE subscribers, then compound
//! annual growth over a planning horizon.
//!
//! Every stage is rounded to a whole subscriber count with
//! round-half-toward-zero, so `1275331.5` becomes `1275331` and
//! `107127.8` becomes `107128`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrafficInput {
    pub population: u64,
    /// Mobile subscriptions per inhabitant (may exceed 1).
    pub cellular_penetration: f64,
    /// Share of mobile subscribers served by the operator.
    pub operator_share: f64,
    /// Share of the operator's subscribers on LTE.
    pub lte_penetration: f64,
    pub annual_growth: f64,
    pub horizon: u32,
}

impl TrafficInput {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("cellular penetration", self.cellular_penetration),
            ("operator share", self.operator_share),
            ("LTE penetration", self.lte_penetration),
            ("annual growth", self.annual_growth),
        ] {
            ratio(name, v)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrafficForecast {
    pub mobile_subscribers: u64,
    pub operator_subscribers: u64,
    pub lte_subscribers: u64,
    pub projected_subscribers: u64,
}

fn ratio(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            name,
            format!("{v} must be a finite ratio >= 0"),
        ))
    }
}

/// Relative slack used to recognise an exact .5 through multiplication
/// round-off (for example `15 * 0.1 = 1.5000000000000002`).
const TIE_TOLERANCE: f64 = 1e-9;

/// Rounds a non-negative value to the nearest integer, sending exact
/// halves toward zero.
pub fn round_half_toward_zero(x: f64) -> Result<u64> {
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::domain("subscriber count", format!("{x}")));
    }
    if x >= u64::MAX as f64 {
        return Err(Error::domain("subscriber count", format!("{x} overflows")));
    }
    let floor = x.floor();
    let frac = x - floor;
    let rounded = if (frac - 0.5).abs() <= TIE_TOLERANCE * x.max(1.0) || frac < 0.5 {
        floor
    } else {
        floor + 1.0
    };
    Ok(rounded as u64)
}

fn stage(previous: u64, ratio: f64) -> Result<u64> {
    round_half_toward_zero(previous as f64 * ratio)
}

/// `base` compounded annually at `rate` for `years`, rounded.
pub fn project_growth(base: u64, rate: f64, years: u32) -> Result<u64> {
    ratio("annual growth", rate)?;
    let factor = (1.0 + rate).powi(years.try_into().unwrap_or(i32::MAX));
    round_half_toward_zero(base as f64 * factor)
}

pub fn forecast_subscribers(input: &TrafficInput) -> Result<TrafficForecast> {
    input.validate()?;
    let mobile_subscribers = stage(input.population, input.cellular_penetration)?;
    let operator_subscribers = stage(mobile_subscribers, input.operator_share)?;
    let lte_subscribers = stage(operator_subscribers, input.lte_penetration)?;
    let projected_subscribers =
        project_growth(lte_subscribers, input.annual_growth, input.horizon)?;
    Ok(TrafficForecast {
        mobile_subscribers,
        operator_subscribers,
        lte_subscribers,
        projected_subscribers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn input(population: u64, b: f64, d: f64, f: f64, growth: f64, horizon: u32) -> TrafficInput {
        TrafficInput {
            population,
            cellular_penetration: b,
            operator_share: d,
            lte_penetration: f,
            annual_growth: growth,
            horizon,
        }
    }

    #[test]
    fn sleman_chain() {
        let f = forecast_subscribers(&input(850_221, 1.5, 0.42, 0.2, 0.051, 5)).unwrap();
        assert_eq!(
            f,
            TrafficForecast {
                mobile_subscribers: 1_275_331,
                operator_subscribers: 535_639,
                lte_subscribers: 107_128,
                projected_subscribers: 137_378,
            }
        );
    }

    #[test]
    fn empty_population() {
        let f = forecast_subscribers(&input(0, 1.7, 0.3, 0.9, 0.2, 10)).unwrap();
        assert_eq!(
            [
                f.mobile_subscribers,
                f.operator_subscribers,
                f.lte_subscribers,
                f.projected_subscribers
            ],
            [0; 4]
        );
    }

    #[test]
    fn identity_ratios() {
        let f = forecast_subscribers(&input(1000, 1.0, 1.0, 1.0, 0.0, 5)).unwrap();
        assert_eq!(
            [
                f.mobile_subscribers,
                f.operator_subscribers,
                f.lte_subscribers,
                f.projected_subscribers
            ],
            [1000; 4]
        );
    }

    #[test]
    fn growth_examples() {
        assert_eq!(project_growth(107_128, 0.051, 5).unwrap(), 137_378);
        assert_eq!(project_growth(4242, 0.3, 0).unwrap(), 4242);
        assert_eq!(project_growth(100, 0.10, 2).unwrap(), 121);
        // simple (non-compounded) growth would give 134446
        assert_ne!(project_growth(107_128, 0.051, 5).unwrap(), 134_446);
    }

    #[test]
    fn rounding_rule() {
        assert_eq!(round_half_toward_zero(1_275_331.5).unwrap(), 1_275_331);
        assert_eq!(round_half_toward_zero(107_127.8).unwrap(), 107_128);
        assert_eq!(round_half_toward_zero(0.5).unwrap(), 0);
        assert_eq!(round_half_toward_zero(0.51).unwrap(), 1);
        assert_eq!(round_half_toward_zero(15.0 * 0.1).unwrap(), 1);
        assert!(round_half_toward_zero(-1.0).is_err());
        assert!(round_half_toward_zero(f64::NAN).is_err());
    }

    #[test]
    fn invalid_ratios() {
        assert!(forecast_subscribers(&input(10, -0.1, 1.0, 1.0, 0.0, 1)).is_err());
        assert!(forecast_subscribers(&input(10, 1.0, f64::NAN, 1.0, 0.0, 1)).is_err());
        assert!(project_growth(10, -0.5, 1).is_err());
    }

    proptest! {
        #[test]
        fn stages_monotone(
            pop in 0u64..10_000_000,
            extra in 0u64..1_000_000,
            b in 0.0..2.0f64, d in 0.0..1.0f64, f in 0.0..1.0f64,
            bump in 0.0..0.5f64,
        ) {
            let base = forecast_subscribers(&input(pop, b, d, f, 0.05, 3)).unwrap();
            for bigger in [
                input(pop + extra, b, d, f, 0.05, 3),
                input(pop, b + bump, d, f, 0.05, 3),
                input(pop, b, d + bump, f, 0.05, 3),
                input(pop, b, d, f + bump, 0.05, 3),
                input(pop, b, d, f, 0.05 + bump, 3),
            ] {
                let g = forecast_subscribers(&bigger).unwrap();
                prop_assert!(g.mobile_subscribers >= base.mobile_subscribers);
                prop_assert!(g.operator_subscribers >= base.operator_subscribers);
                prop_assert!(g.lte_subscribers >= base.lte_subscribers);
                prop_assert!(g.projected_subscribers >= base.projected_subscribers);
            }
        }

        #[test]
        fn unit_ratios_are_identity(pop in 0u64..100_000_000, years in 0u32..30) {
            let f = forecast_subscribers(&input(pop, 1.0, 1.0, 1.0, 0.0, years)).unwrap();
            prop_assert_eq!(
                [f.mobile_subscribers, f.operator_subscribers, f.lte_subscribers, f.projected_subscribers],
                [pop; 4]
            );
        }

        // The drift bound of one count only holds while (1 + rate)^n < 2:
        // the first rounding error (<= 0.5) is scaled by the second leg's
        // growth factor.
        #[test]
        fn split_horizon_drift(
            base in 0u64..=10_000_000,
            rate in 0.0..=0.2f64,
            m in 0u32..10,
            n in 0u32..4,
        ) {
            prop_assume!((1.0 + rate).powi(n as i32) < 2.0);
            let two_step = project_growth(project_growth(base, rate, m).unwrap(), rate, n).unwrap();
            let one_step = project_growth(base, rate, m + n).unwrap();
            prop_assert!(two_step.abs_diff(one_step) <= 1);
        }
    }
}
