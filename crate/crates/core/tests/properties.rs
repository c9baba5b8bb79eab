//! Property tests over the core invariants.

use iscp_core::rng::{stream_rng, StreamTag};
use iscp_core::*;
use proptest::prelude::*;

fn interval() -> impl Strategy<Value = Interval> {
    (-1000.0f64..1000.0, 0.0f64..500.0).prop_map(|(lo, w)| Interval::new(lo, lo + w))
}

fn positive_box(n: usize) -> impl Strategy<Value = IntervalBox> {
    prop::collection::vec((1.0f64..500.0, 0.0f64..60.0), n)
        .prop_map(|v| IntervalBox::new(v.into_iter().map(|(lo, w)| Interval::new(lo, lo + w)).collect()))
}

/// Small generated instances driven by a seed.
fn small_instance() -> impl Strategy<Value = IscpInstance> {
    (2usize..8, 1u32..4, 0u32..6, any::<u64>()).prop_map(|(m, q, delta, seed)| {
        generate(&GeneratorConfig {
            m,
            q,
            radius: Radius::Abs { abs: delta as f64 },
            seed,
        })
        .expect("generator config valid")
    })
}

proptest! {
    #[test]
    fn interval_addition_commutes_and_associates(a in interval(), b in interval(), c in interval()) {
        prop_assert_eq!(a + b, b + a);
        let left = (a + b) + c;
        let right = a + (b + c);
        // reassociation drift scales with operand magnitude, not the
        // (possibly cancelled) result
        let scale = a.lo.abs() + a.hi.abs() + b.lo.abs() + b.hi.abs() + c.lo.abs() + c.hi.abs();
        prop_assert!((left.lo - right.lo).abs() <= scale * 1e-15);
        prop_assert!((left.hi - right.hi).abs() <= scale * 1e-15);
    }

    #[test]
    fn interval_addition_is_containment_monotone(a in interval(), b in interval(), grow_a in 0.0f64..10.0, grow_b in 0.0f64..10.0) {
        let a_wide = Interval::new(a.lo - grow_a, a.hi + grow_a);
        let b_wide = Interval::new(b.lo - grow_b, b.hi + grow_b);
        prop_assert!((a + b).is_subset_of(a_wide + b_wide));
    }

    #[test]
    fn midpoint_lies_inside(a in interval()) {
        prop_assert!(a.contains(a.midpoint()));
    }

    #[test]
    fn scaling_keeps_order(a in interval(), alpha in 0.0f64..100.0) {
        let s = a.scale(alpha).unwrap();
        prop_assert!(s.lo <= s.hi);
        prop_assert!((s.midpoint() - alpha * a.midpoint()).abs() < 1e-9 * (1.0 + alpha * a.midpoint().abs()));
    }

    #[test]
    fn samples_lie_in_their_box(box_ in positive_box(6), seed in any::<u64>()) {
        let mut rng = stream_rng(seed, StreamTag::Sample, 0);
        for domain in [Domain::Continuous, Domain::Integer] {
            // integer mode can fail on integer-free components; valid boxes only
            match sample_scenario(&box_, domain, &mut rng) {
                Ok(s) => prop_assert!(box_.contains(&s)),
                Err(e) => {
                    let integer_free = matches!(e, Error::NoIntegerInInterval { .. });
                    prop_assert!(integer_free);
                }
            }
        }
    }

    #[test]
    fn scenario_cost_lies_in_naive_interval(inst in small_instance(), seed in any::<u64>()) {
        let mut rng = stream_rng(seed, StreamTag::Sample, 1);
        let c = sample_scenario(inst.cost_box(), Domain::Continuous, &mut rng).unwrap();
        let (sol, _) = greedy_cover(&inst, &c, GreedyConfig::exact()).unwrap();
        let cost = inst.cost(&sol, &c).unwrap();
        let naive = inst.interval_cost_naive(&sol).unwrap();
        prop_assert!(naive.lo - 1e-9 <= cost && cost <= naive.hi + 1e-9);
    }

    #[test]
    fn greedy_output_is_deterministic_feasible_and_bounded(inst in small_instance(), seed in any::<u64>()) {
        let mut rng = stream_rng(seed, StreamTag::Sample, 2);
        let c = sample_scenario(inst.cost_box(), Domain::Integer, &mut rng).unwrap();
        for cfg in [GreedyConfig::exact(), GreedyConfig::floor()] {
            let (sol, trace) = greedy_cover(&inst, &c, cfg).unwrap();
            prop_assert!(inst.is_cover(&sol).unwrap());
            prop_assert!(trace.steps.len() <= inst.m());
            prop_assert!(trace.steps.iter().all(|s| s.gain >= 1));
            let again = greedy_cover(&inst, &c, cfg).unwrap();
            prop_assert_eq!((sol, trace), again);
        }
    }

    #[test]
    fn enumeration_refinement_stays_inside_naive(inst in small_instance()) {
        if inst.n() <= 16 {
            let united = enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT).unwrap();
            for rec in &united.records {
                prop_assert!(rec.refined_cost.is_subset_of(rec.naive_cost));
                let (out, _) = greedy_cover(&inst, rec.witness(), GreedyConfig::exact()).unwrap();
                prop_assert_eq!(&out, &rec.solution);
            }
        }
    }

    #[test]
    fn classification_is_monotone_in_boundary(freq in 0.0f64..=1.0, b1 in 0.001f64..1.0, b2 in 0.001f64..1.0) {
        let (lo, hi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let at_lo = classify(freq, RepresentativenessPolicy::new(lo).unwrap());
        let at_hi = classify(freq, RepresentativenessPolicy::new(hi).unwrap());
        // raising the boundary never turns unrepresentative back into representative
        if at_lo == Representativeness::Unrepresentative {
            prop_assert_eq!(at_hi, Representativeness::Unrepresentative);
        }
    }
}

/// Monte Carlo error bound: on the symmetric two-set instance (true
/// probability 1/2 each) the estimate over 1e4 samples stays within four
/// standard errors across 100 seeded repetitions.
#[test]
fn estimate_error_within_four_standard_errors() {
    let inst = IscpInstance::new(
        1,
        vec![vec![1], vec![1]],
        vec![2.0, 2.0],
        Radius::Abs { abs: 1.0 },
    )
    .unwrap();
    let n = 10_000u64;
    let p = 0.5f64;
    let bound = 4.0 * (p * (1.0 - p) / n as f64).sqrt();
    let s1 = CoverSolution::from_bits(&[1, 0]);
    let mut violations = 0;
    for seed in 0..100 {
        let est =
            estimate_probabilities(&inst, GreedyConfig::exact(), Domain::Continuous, n, seed)
                .unwrap();
        let f = est
            .iter()
            .find(|e| e.solution == s1)
            .map(|e| e.frequency())
            .unwrap_or(0.0);
        if (f - p).abs() > bound {
            violations += 1;
        }
    }
    assert_eq!(violations, 0, "estimates outside 4 standard errors");
}
