//! Power link budget: itemized span losses, received power and EDFA sizing.
//!
//! All losses are non-negative dB magnitudes. The system margin is charged
//! once per evaluated path: [`span_loss`] includes it for a span evaluated
//! on its own, while [`path_loss`] sums the spans' physical losses and then
//! adds the margin a single time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{resolve_fiber, ComponentLosses, FiberCatalog, FiberProfile, Span, Splitter};
use crate::units::split_ratio_db;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct LossBreakdown {
    pub connector_total: f64,
    pub fiber_total: f64,
    pub splice_total: f64,
    pub splitter_total: f64,
    pub margin: f64,
    pub total: f64,
}

impl LossBreakdown {
    pub fn new(
        connector_total: f64,
        fiber_total: f64,
        splice_total: f64,
        splitter_total: f64,
        margin: f64,
    ) -> Self {
        LossBreakdown {
            connector_total,
            fiber_total,
            splice_total,
            splitter_total,
            margin,
            total: connector_total + fiber_total + splice_total + splitter_total + margin,
        }
    }

    /// The breakdown with its margin term removed.
    pub fn physical(&self) -> LossBreakdown {
        LossBreakdown::new(
            self.connector_total,
            self.fiber_total,
            self.splice_total,
            self.splitter_total,
            0.0,
        )
    }
}

/// Insertion loss of a 1xN splitter: the ideal split plus `excess` dB.
pub fn splitter_loss(ratio: u32, excess: f64) -> Result<f64> {
    Splitter::new(ratio)?;
    if !(excess.is_finite() && excess >= 0.0) {
        return Err(Error::domain(
            "splitter excess loss",
            format!("{excess} dB"),
        ));
    }
    Ok(split_ratio_db(ratio) + excess)
}

fn itemize(
    span: &Span,
    fiber: &FiberProfile,
    losses: &ComponentLosses,
    margin: f64,
) -> Result<LossBreakdown> {
    if !(span.length.is_finite() && span.length >= 0.0) {
        return Err(Error::domain(
            "span length",
            format!("{}: {} km", span.id, span.length),
        ));
    }
    let splices = span.splice_count(fiber)?;
    let splitter_total = span
        .splitters
        .iter()
        .map(|s| splitter_loss(s.ratio, losses.splitter_excess_loss))
        .sum::<Result<f64>>()?;
    Ok(LossBreakdown::new(
        losses.connector_loss * f64::from(span.connectors),
        fiber.attenuation * span.length,
        losses.splice_loss * f64::from(splices),
        splitter_total,
        margin,
    ))
}

/// Itemized loss of one span evaluated as a complete path (margin included).
pub fn span_loss(
    span: &Span,
    fibers: &FiberCatalog,
    losses: &ComponentLosses,
) -> Result<LossBreakdown> {
    let fiber = resolve_fiber(fibers, span)?;
    itemize(span, fiber, losses, losses.system_margin)
}

/// Itemized loss of one span without the system margin.
pub fn span_physical_loss(
    span: &Span,
    fibers: &FiberCatalog,
    losses: &ComponentLosses,
) -> Result<LossBreakdown> {
    let fiber = resolve_fiber(fibers, span)?;
    itemize(span, fiber, losses, 0.0)
}

/// Loss of a path through `spans`, charging the system margin once.
pub fn path_loss<'a>(
    spans: impl IntoIterator<Item = &'a Span>,
    fibers: &FiberCatalog,
    losses: &ComponentLosses,
) -> Result<LossBreakdown> {
    let mut sum = LossBreakdown::default();
    for span in spans {
        let part = span_physical_loss(span, fibers, losses)?;
        sum.connector_total += part.connector_total;
        sum.fiber_total += part.fiber_total;
        sum.splice_total += part.splice_total;
        sum.splitter_total += part.splitter_total;
    }
    Ok(LossBreakdown::new(
        sum.connector_total,
        sum.fiber_total,
        sum.splice_total,
        sum.splitter_total,
        losses.system_margin,
    ))
}

/// Loss budget between an input power and a receiver sensitivity, as a
/// positive magnitude when the input is above the sensitivity.
pub fn max_allowed_loss(input_power: f64, rx_sensitivity: f64) -> f64 {
    input_power - rx_sensitivity
}

/// Lowest power that may enter a segment of `segment_loss` dB while still
/// meeting `rx_sensitivity` at its far end.
pub fn minimum_input_power(rx_sensitivity: f64, segment_loss: f64) -> f64 {
    rx_sensitivity + segment_loss
}

/// Receiver input power: transmit power minus losses plus gains.
pub fn received_power(tx_power: f64, losses: &[f64], gains: &[f64]) -> f64 {
    tx_power - losses.iter().sum::<f64>() + gains.iter().sum::<f64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplifierPlan {
    pub gain_deficit: f64,
    pub unit_gain: f64,
    pub edfa_count: u32,
    pub total_gain: f64,
}

/// Number of fixed-gain amplifiers needed to cover the excess of
/// `actual_loss` over `max_loss`.
pub fn amplifier_requirement(
    actual_loss: f64,
    max_loss: f64,
    unit_gain: f64,
) -> Result<AmplifierPlan> {
    if !(unit_gain.is_finite() && unit_gain > 0.0) {
        return Err(Error::domain(
            "amplifier unit gain",
            format!("{unit_gain} dB"),
        ));
    }
    if !(actual_loss.is_finite() && max_loss.is_finite()) {
        return Err(Error::domain(
            "loss",
            format!("actual {actual_loss} dB, maximum {max_loss} dB"),
        ));
    }
    let gain_deficit = (actual_loss - max_loss).max(0.0);
    let edfa_count = if gain_deficit > 0.0 {
        (gain_deficit / unit_gain).ceil() as u32
    } else {
        0
    };
    Ok(AmplifierPlan {
        gain_deficit,
        unit_gain,
        edfa_count,
        total_gain: f64::from(edfa_count) * unit_gain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Splices;
    use proptest::prelude::*;

    fn catalog(attenuation: f64) -> FiberCatalog {
        FiberCatalog::from([(
            "f".to_owned(),
            FiberProfile::new("f", attenuation, 3.5, 3.0).unwrap(),
        )])
    }

    fn losses(connector: f64, splice: f64, margin: f64) -> ComponentLosses {
        ComponentLosses {
            connector_loss: connector,
            splice_loss: splice,
            system_margin: margin,
            splitter_excess_loss: 0.0,
        }
    }

    fn span(length: f64, connectors: u32, splices: u32) -> Span {
        Span {
            connectors,
            splices: Splices::Count(splices),
            ..Span::new("s", "a", "b", length, "f")
        }
    }

    /// Independent per-term accumulation: walk every component one at a time.
    fn accumulate(span: &Span, attenuation: f64, l: &ComponentLosses) -> f64 {
        let mut acc = 0.0;
        for _ in 0..span.connectors {
            acc += l.connector_loss;
        }
        let Splices::Count(n) = span.splices else {
            unreachable!()
        };
        for _ in 0..n {
            acc += l.splice_loss;
        }
        acc + attenuation * span.length + l.system_margin
    }

    #[test]
    fn backbone_worked_example() {
        let b = span_loss(&span(84.9, 14, 46), &catalog(0.3), &losses(0.3, 0.05, 3.0)).unwrap();
        assert!((b.connector_total - 4.2).abs() < 1e-12);
        assert!((b.fiber_total - 25.47).abs() < 1e-12);
        assert!((b.splice_total - 2.3).abs() < 1e-12);
        assert_eq!(b.margin, 3.0);
        assert!((b.total - 34.97).abs() < 1e-9);
    }

    #[test]
    fn empty_span_has_no_loss() {
        let b = span_loss(&span(0.0, 0, 0), &catalog(0.3), &losses(0.3, 0.05, 0.0)).unwrap();
        assert_eq!(b.total, 0.0);
    }

    #[test]
    fn hand_summed_example_matches_accumulator() {
        let s = span(3.0, 2, 3);
        let l = losses(0.3, 0.05, 1.0);
        let b = span_loss(&s, &catalog(0.2), &l).unwrap();
        let oracle = accumulate(&s, 0.2, &l);
        assert!((oracle - 2.35).abs() < 1e-12);
        assert!((b.total - oracle).abs() < 1e-12);
    }

    #[test]
    fn auto_splices_use_drum_length() {
        let s = Span::new("s", "a", "b", 18.8, "f");
        let b = span_loss(&s, &catalog(0.3), &losses(0.3, 0.05, 0.0)).unwrap();
        assert!((b.splice_total - 9.0 * 0.05).abs() < 1e-12);
    }

    #[test]
    fn unknown_fiber_is_config_error() {
        let mut s = span(1.0, 2, 3);
        s.fiber = "missing".into();
        assert!(matches!(
            span_loss(&s, &catalog(0.3), &losses(0.3, 0.05, 3.0)),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn splitter_examples() {
        assert!((splitter_loss(2, 0.0).unwrap() - 3.0103).abs() < 5e-5);
        assert!((splitter_loss(4, 0.0).unwrap() - 6.0206).abs() < 5e-5);
        assert!((splitter_loss(2, 1.0).unwrap() - 4.0103).abs() < 5e-5);
        assert!(splitter_loss(3, 0.0).is_err());
        assert!(splitter_loss(1, 0.0).is_err());
        assert!(splitter_loss(2, -1.0).is_err());
    }

    #[test]
    fn budget_chain() {
        let p_b_min = minimum_input_power(-21.0, 16.67);
        assert!((p_b_min - -4.33).abs() < 1e-12);
        assert!((max_allowed_loss(9.0, p_b_min) - 13.33).abs() < 1e-12);
        assert_eq!(max_allowed_loss(0.0, 0.0), 0.0);
    }

    #[test]
    fn amplifier_examples() {
        let p = amplifier_requirement(34.97, 13.33, 20.0).unwrap();
        assert!((p.gain_deficit - 21.64).abs() < 1e-9);
        assert_eq!((p.edfa_count, p.total_gain), (2, 40.0));

        let p = amplifier_requirement(10.0, 13.33, 20.0).unwrap();
        assert_eq!((p.gain_deficit, p.edfa_count, p.total_gain), (0.0, 0, 0.0));

        let p = amplifier_requirement(60.0, 13.33, 20.0).unwrap();
        assert!((p.gain_deficit - 46.67).abs() < 1e-9);
        let least = (0u32..)
            .find(|k| 20.0 * f64::from(*k) >= p.gain_deficit)
            .unwrap();
        assert_eq!(p.edfa_count, least);
        assert_eq!((p.edfa_count, p.total_gain), (3, 60.0));

        assert!(amplifier_requirement(1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn received_examples() {
        assert!((received_power(9.0, &[34.97, 16.67], &[40.0]) - -2.64).abs() < 1e-9);
        assert_eq!(received_power(9.0, &[], &[]), 9.0);
        let span_total = span_loss(&span(3.0, 2, 3), &catalog(0.2), &losses(0.3, 0.05, 1.0))
            .unwrap()
            .total;
        assert!((received_power(10.0, &[span_total], &[]) - 7.65).abs() < 1e-9);
    }

    #[test]
    fn path_margin_charged_once() {
        let spans: Vec<Span> = (1..=7).map(|i| span(f64::from(i) * 2.5, 2, 4)).collect();
        let cat = catalog(0.3);
        let l = losses(0.3, 0.05, 3.0);
        let path = path_loss(&spans, &cat, &l).unwrap();
        let per_span: f64 = spans
            .iter()
            .map(|s| span_loss(s, &cat, &l).unwrap().total)
            .sum();
        let duplicated = (spans.len() - 1) as f64 * l.system_margin;
        assert!((path.total - (per_span - duplicated)).abs() < 1e-9);
        assert_eq!(path.margin, 3.0);
    }

    proptest! {
        #[test]
        fn received_power_is_linear(
            tx in -10.0..20.0f64,
            losses in proptest::collection::vec(0.0..40.0f64, 0..8),
            gains in proptest::collection::vec(0.0..30.0f64, 0..3),
            x in 0.0..50.0f64,
        ) {
            let base = received_power(tx, &losses, &gains);
            let mut more = losses.clone();
            more.push(x);
            prop_assert!((received_power(tx, &more, &gains) - (base - x)).abs() < 1e-9);
        }

        #[test]
        fn plan_is_sound(
            tx in -5.0..15.0f64,
            actual in 0.0..120.0f64,
            sens in -40.0..-10.0f64,
            unit in 5.0..30.0f64,
        ) {
            let plan = amplifier_requirement(actual, max_allowed_loss(tx, sens), unit).unwrap();
            prop_assert!(plan.total_gain >= plan.gain_deficit);
            prop_assert!(plan.edfa_count == 0 || plan.total_gain - unit < plan.gain_deficit);
            let rx = received_power(tx, &[actual], &[plan.total_gain]);
            prop_assert!(rx >= sens - 1e-9);
        }

        #[test]
        fn breakdown_identity_and_splitter_order(
            length in 0.1..80.0f64,
            ratios in proptest::collection::vec(1u32..6, 0..4),
            excess in 0.0..2.0f64,
        ) {
            let splitters: Vec<Splitter> = ratios.iter().map(|r| Splitter { ratio: 1 << r }).collect();
            let mut l = losses(0.3, 0.05, 3.0);
            l.splitter_excess_loss = excess;
            let mut s = Span { splitters, ..Span::new("s", "a", "b", length, "f") };
            let cat = catalog(0.25);
            let b = span_loss(&s, &cat, &l).unwrap();
            let sum = b.connector_total + b.fiber_total + b.splice_total + b.splitter_total + b.margin;
            prop_assert_eq!(b.total, sum);
            for part in [b.connector_total, b.fiber_total, b.splice_total, b.splitter_total, b.margin] {
                prop_assert!(part >= 0.0);
            }
            s.splitters.reverse();
            let r = span_loss(&s, &cat, &l).unwrap();
            prop_assert!((r.total - b.total).abs() < 1e-9);
        }
    }
}
