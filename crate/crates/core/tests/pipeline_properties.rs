mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use wfa_core::canonical::to_canonical_form;
use wfa_core::continuity::{
    analyze_omega_continuity, analyze_uniform_continuity, check_dyadic_matching, dyadic_one_sided_values,
    ContinuityVerdict, DiscontinuityReason, UniformContinuityVerdict,
};
use wfa_core::linalg::{char_poly, inverse, ratio, roots_inside_unit_disk};
use wfa_core::reductions::{d_automaton, stability_to_ap_continuity_gadgets, stability_to_uniform_gadgets};
use wfa_core::synthesis::{is_constant_function, synthesize_continuous, SynthesisInput, Synthesized};
use wfa_core::wfa::{minimize, omega_eval, sample, OmegaValue, Word};
use wfa_core::{Matrix, Vector, Wfa};

fn synthesis_case(seed: u64) -> (SynthesisInput, Synthesized) {
    let mut r = rng(seed);
    let n = r.gen_range(1..=3);
    let (b0, b1, k) = random_stable_singular_pair(&mut r, n, 10);
    let scale = ratio(r.gen_range(1..=4), 1);
    let inp = SynthesisInput {
        b0_block: b0,
        b1_block: b1,
        kernel_vector: k.scale(&scale),
        b0: random_vector(&mut r, n, 3, 2),
        initial: None,
    };
    let out = synthesize_continuous(&inp, 10).unwrap();
    (inp, out)
}

fn words_up_to(max_len: usize) -> impl Iterator<Item = Word> {
    let binary = wfa_core::Alphabet::binary();
    (0..=max_len).flat_map(move |len| binary.words_of_length(len).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn canonical_form_invariants(seed in any::<u64>()) {
        let (_, s) = synthesis_case(seed);
        let mut r = rng(seed ^ 0xca);
        let scrambled = s.wfa.change_basis(&random_unimodular(&mut r, s.wfa.dim())).unwrap();
        let min = minimize(&scrambled);
        let form = to_canonical_form(&min).unwrap().unwrap();
        let n = form.wfa().dim();
        for (a, m) in form.wfa().matrices().iter().enumerate() {
            prop_assert_eq!(m.row(n - 1), Vector::unit(n, n - 1));
            prop_assert_eq!(&m.submatrix(0, n - 1, 0, n - 1), &form.blocks()[a]);
            prop_assert_eq!(&m.column(n - 1).slice(0, n - 1), &form.columns()[a]);
        }
        prop_assert!(form.wfa().is_ap());
        let blocks = form.block_set();
        for _ in 0..5 {
            let u = random_word(&mut r, 2, 3, 0);
            let v = random_word(&mut r, 2, 3, 0);
            let whole = form.wfa().word_matrix(&u.concat(&v)).unwrap().submatrix(0, n - 1, 0, n - 1);
            prop_assert_eq!(whole, &blocks.product(&u).unwrap() * &blocks.product(&v).unwrap());
        }
        for w in words_up_to(5) {
            prop_assert_eq!(form.wfa().eval_word(&w).unwrap(), s.wfa.eval_word(&w).unwrap());
        }
    }

    #[test]
    fn synthesis_round_trip(seed in any::<u64>()) {
        let (inp, s) = synthesis_case(seed);
        let a = &s.wfa;
        prop_assert!(a.is_ap());
        let omega = analyze_omega_continuity(a, 12).unwrap();
        prop_assert!(matches!(omega, ContinuityVerdict::ContinuousEverywhere { .. }), "{:?}", omega);
        let uniform = analyze_uniform_continuity(a, 12).unwrap();
        prop_assert!(matches!(uniform, UniformContinuityVerdict::BothContinuous { .. }), "{:?}", uniform);
        let form = to_canonical_form(a).unwrap().unwrap();
        prop_assert!(check_dyadic_matching(&form).unwrap());
        // A₀F ≠ F, so some initial distribution sees a nonconstant function
        prop_assert_ne!(&a.matrix(0).mul_vec(a.final_weights()), a.final_weights());
        let dim = a.dim();
        let nonconstant = (0..dim).any(|i| {
            let b = a.with_initial(Vector::unit(dim, i)).unwrap();
            !is_constant_function(&minimize(&b)).unwrap()
        });
        prop_assert!(nonconstant);

        let n = inp.b0_block.rows();
        let e = Matrix::identity(n);
        let sum = &inp.b0_block + &inp.b1_block;
        let two_e = e.scale(&ratio(2, 1));
        // (B₀+B₁−2E)F' + b₀ + b₁ = 0
        let residual = &(&(&sum - &two_e).mul_vec(&s.final_head) + &inp.b0) + &s.b1;
        prop_assert!(residual.is_zero());
        // (B₀+B₁−E)[(E−B₁)⁻¹b₁ − (E−B₀)⁻¹b₀] = 0 with a nonzero bracket
        let g1 = inverse(&(&e - &inp.b1_block)).unwrap().mul_vec(&s.b1);
        let g0 = inverse(&(&e - &inp.b0_block)).unwrap().mul_vec(&inp.b0);
        let bracket = &g1 - &g0;
        prop_assert!((&sum - &e).mul_vec(&bracket).is_zero());
        prop_assert!(!bracket.is_zero());
        prop_assert!(inverse(&(&sum - &two_e)).is_some());
    }

    #[test]
    fn continuous_verdicts_have_defined_values(seed in any::<u64>()) {
        let (_, s) = synthesis_case(seed);
        let a = &s.wfa;
        let mut r = rng(seed ^ 0x0e);
        for _ in 0..40 {
            let w = random_up_word(&mut r, 2, 6, 3);
            let OmegaValue::Defined(v) = omega_eval(a, &w).unwrap() else {
                return Err(TestCaseError::fail("undefined value on a continuous automaton"));
            };
            let prefixes = numeric_prefix_values(a, &w, 64);
            let target = f64_of(&v);
            prop_assert!((prefixes[64] - target).abs() <= 1e-9 * target.abs().max(1.0));
        }
    }

    #[test]
    fn matching_test_reflects_one_sided_values(seed in any::<u64>()) {
        let (inp, s) = synthesis_case(seed);
        let matching = analyze_uniform_continuity(&s.wfa, 12).unwrap();
        prop_assert!(matches!(matching, UniformContinuityVerdict::BothContinuous { .. }), "{:?}", matching);
        for v in words_up_to(5) {
            let sides = dyadic_one_sided_values(&s.wfa, &v).unwrap();
            prop_assert_eq!(sides.left, sides.right);
        }
        // an arbitrary second column keeps f continuous but breaks the matching
        let mut r = rng(seed ^ 0x1f);
        let n = inp.b0_block.rows();
        let b1 = &s.b1 + &random_vector(&mut r, n, 2, 1);
        let form = wfa_core::canonical::CanonicalForm::from_parts(
            wfa_core::Alphabet::binary(),
            vec![inp.b0_block.clone(), inp.b1_block.clone()],
            vec![inp.b0.clone(), b1.clone()],
            Vector::unit(n + 1, 0),
            Vector::unit(n + 1, n),
        )
        .unwrap();
        let sum = &(&inp.b0_block + &inp.b1_block) - &Matrix::identity(n).scale(&ratio(2, 1));
        let head = -&inverse(&sum).unwrap().mul_vec(&(&inp.b0 + &b1));
        let a = form.wfa().with_final(head.concat(&Vector::unit(1, 0))).unwrap();
        prop_assert!(a.is_ap());
        match analyze_uniform_continuity(&a, 12).unwrap() {
            UniformContinuityVerdict::OmegaOnlyContinuous { .. } => {
                let witness = words_up_to(8).find(|v| {
                    let sides = dyadic_one_sided_values(&a, v).unwrap();
                    sides.left != sides.right
                });
                prop_assert!(witness.is_some());
            }
            UniformContinuityVerdict::BothContinuous { .. } => {
                for v in words_up_to(4) {
                    let sides = dyadic_one_sided_values(&a, &v).unwrap();
                    prop_assert_eq!(sides.left, sides.right);
                }
            }
            other => return Err(TestCaseError::fail(format!("{other:?}"))),
        }
    }

    #[test]
    fn witnesses_are_unstable_block_products(seed in any::<u64>()) {
        let mut r = rng(seed);
        let letters = r.gen_range(2..=3);
        let a = random_canonical_ap(&mut r, letters, 2, 3, 2);
        if let ContinuityVerdict::NotContinuous { reason: DiscontinuityReason::StabilityWitness(w) } =
            analyze_omega_continuity(&a, 6).unwrap()
        {
            let form = to_canonical_form(&minimize(&a)).unwrap().unwrap();
            let p = form.block_set().product(&w).unwrap();
            prop_assert!(!roots_inside_unit_disk(&char_poly(&p)).unwrap());
        }
    }

    #[test]
    fn real_function_modulus_shrinks(seed in any::<u64>()) {
        let (_, s) = synthesis_case(seed);
        let values = sample(&s.wfa, 10).unwrap();
        let spread = |m: u32| {
            let step = 1usize << (10 - m);
            let pts: Vec<f64> = values
                .iter()
                .step_by(step)
                .map(|(_, v)| f64_of(v.as_defined().unwrap()))
                .collect();
            pts.windows(2).map(|w| (w[1] - w[0]).abs()).fold(0.0, f64::max)
        };
        prop_assert!(spread(10) < spread(4) || spread(4) == 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn gadgets_are_ap(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let b0 = random_matrix(&mut r, n, n, 3, 2);
        let b1 = random_matrix(&mut r, n, n, 3, 2);
        for (_, a) in stability_to_ap_continuity_gadgets(&b0, &b1).unwrap().iter() {
            prop_assert!(a.is_ap());
        }
        for (_, a) in stability_to_uniform_gadgets(&b0, &b1).unwrap().iter() {
            prop_assert!(a.is_ap());
        }
    }

    #[test]
    fn gadgets_transfer_stability(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=2);
        let set = random_contractive_set(&mut r, 2, n);
        let (b0, b1) = (set.matrix(0), set.matrix(1));
        for (_, a) in stability_to_ap_continuity_gadgets(b0, b1).unwrap().iter() {
            let v = analyze_omega_continuity(a, 12).unwrap();
            prop_assert!(matches!(v, ContinuityVerdict::ContinuousEverywhere { .. }), "{:?}", v);
        }
        for (_, a) in stability_to_uniform_gadgets(b0, b1).unwrap().iter() {
            let v = analyze_uniform_continuity(a, 12).unwrap();
            prop_assert!(matches!(v, UniformContinuityVerdict::BothContinuous { .. }), "{:?}", v);
        }
    }
}

#[test]
fn d_automaton_is_piecewise_linear() {
    let d = d_automaton();
    let values: Vec<_> = sample(&d, 6)
        .unwrap()
        .into_iter()
        .map(|(_, v)| v.as_defined().unwrap().clone())
        .collect();
    let kinks: Vec<usize> = (1..values.len() - 1)
        .filter(|&i| &(&values[i - 1] + &values[i + 1]) - &(&values[i] * ratio(2, 1)) != ratio(0, 1))
        .collect();
    // a broken line has second differences only at its breakpoints, which sit
    // on a coarse dyadic grid
    assert!(kinks.len() <= 4, "{kinks:?}");
    assert!(kinks.iter().all(|&i| i % 16 == 0), "{kinks:?}");
    assert_eq!(values[0], ratio(0, 1));
}

#[test]
fn unstable_canonical_blocks_are_rejected() {
    let one = Matrix::from_ints(&[&[1]]);
    let zero = Matrix::from_ints(&[&[0]]);
    for (_, a) in stability_to_ap_continuity_gadgets(&one, &zero).unwrap().iter() {
        let v = analyze_omega_continuity(a, 6).unwrap();
        assert!(!matches!(v, ContinuityVerdict::ContinuousEverywhere { .. }), "{v:?}");
    }
    let flip: Wfa = wfa_core::wfa::catalog::three_letter_discontinuous();
    assert!(matches!(
        analyze_omega_continuity(&flip, 6).unwrap(),
        ContinuityVerdict::NotContinuous {
            reason: DiscontinuityReason::StabilityWitness(_)
        }
    ));
}
