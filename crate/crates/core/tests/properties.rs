//! Randomized algebraic laws of the exterior kernel, checked exactly.

use proptest::prelude::*;

use plucker_core::blade::Blade;
use plucker_core::scalar::{rat, Rat};
use plucker_core::{Form, MetricSpace};

/// Build a `p`-form on `space` from a seed vector, one coefficient per
/// basis blade (cycled if the seed is short).
fn form_from_seeds(space: MetricSpace, degree: usize, seeds: &[i32]) -> Form<Rat> {
    let mut f = Form::zero(space, degree);
    if seeds.is_empty() {
        return f;
    }
    for (k, blade) in Blade::enumerate(space.dim(), degree).into_iter().enumerate() {
        let s = seeds[k % seeds.len()];
        // Mix the blade position in so short seeds still vary by blade.
        let num = (s as i64) + (k as i64 % 5) - 2;
        f.add_term(blade, rat(num, 1 + (k as i64 % 3)));
    }
    f
}

/// (space, degrees ≤ dim, seed material) for up to three forms.
fn setup() -> impl Strategy<
    Value = (
        MetricSpace,
        usize,
        usize,
        Vec<i32>,
        Vec<i32>,
        Vec<i32>,
    ),
> {
    (3usize..=6, 0usize..=1).prop_flat_map(|(d, t)| {
        let space = MetricSpace::new(d, t).unwrap();
        (
            Just(space),
            1usize..=d.min(3),
            1usize..=d.min(3),
            prop::collection::vec(-6i32..=6, 1..8),
            prop::collection::vec(-6i32..=6, 1..8),
            prop::collection::vec(-6i32..=6, 1..8),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_graded_anticommutative(
        (space, p, q, sa, sb, _) in setup()
    ) {
        prop_assume!(p + q <= space.dim());
        let f = form_from_seeds(space, p, &sa);
        let g = form_from_seeds(space, q, &sb);
        let fg = f.wedge(&g).unwrap();
        let gf = g.wedge(&f).unwrap();
        let expected = if (p * q) % 2 == 1 { gf.negate() } else { gf };
        prop_assert_eq!(fg, expected);
    }

    #[test]
    fn wedge_is_associative(
        (space, p, q, sa, sb, sc) in setup()
    ) {
        prop_assume!(p + q + 1 <= space.dim());
        let f = form_from_seeds(space, p, &sa);
        let g = form_from_seeds(space, q, &sb);
        let h = form_from_seeds(space, 1, &sc);
        let left = f.wedge(&g).unwrap().wedge(&h).unwrap();
        let right = f.wedge(&g.wedge(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn contraction_is_an_antiderivation(
        (space, p, q, sa, sb, sx) in setup()
    ) {
        prop_assume!(p + q <= space.dim());
        let f = form_from_seeds(space, p, &sa);
        let g = form_from_seeds(space, q, &sb);
        let x: Vec<Rat> = (0..space.dim())
            .map(|k| rat(sx[k % sx.len()] as i64, 1))
            .collect();
        let left = f.wedge(&g).unwrap().contract_vector(&x);
        let mut right = f
            .contract_vector(&x)
            .wedge(&g)
            .unwrap()
            .plus(&{
                let tail = f.wedge(&g.contract_vector(&x)).unwrap();
                if p % 2 == 1 { tail.negate() } else { tail }
            })
            .unwrap();
        if left.is_zero() {
            prop_assert!(right.is_zero());
        } else {
            right = right.minus(&left).unwrap();
            prop_assert!(right.is_zero());
        }
    }

    #[test]
    fn rotation_action_is_a_derivation(
        (space, p, q, sa, sb, sw) in setup()
    ) {
        prop_assume!(p + q <= space.dim());
        let f = form_from_seeds(space, p, &sa);
        let g = form_from_seeds(space, q, &sb);
        let omega = form_from_seeds(space, 2, &sw);
        let left = Form::so_action(&omega, &f.wedge(&g).unwrap()).unwrap();
        let right = Form::so_action(&omega, &f)
            .unwrap()
            .wedge(&g)
            .unwrap()
            .plus(&f.wedge(&Form::so_action(&omega, &g).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rotation_action_is_inner_product_skew(
        (space, p, _, sa, sb, sw) in setup()
    ) {
        let f = form_from_seeds(space, p, &sa);
        let g = form_from_seeds(space, p, &sb);
        let omega = form_from_seeds(space, 2, &sw);
        let a = Form::so_action(&omega, &f).unwrap().form_inner(&g).unwrap();
        let b = f.form_inner(&Form::so_action(&omega, &g).unwrap()).unwrap();
        prop_assert_eq!(a + b, Rat::from_integer(0.into()));
    }

    #[test]
    fn hodge_satisfies_the_defining_identity(
        (space, p, _, sa, sb, _) in setup()
    ) {
        let f = form_from_seeds(space, p, &sa);
        let g = form_from_seeds(space, p, &sb);
        let left = f.wedge(&g.hodge()).unwrap();
        let right = Form::volume(space).scaled(&f.form_inner(&g).unwrap());
        prop_assert_eq!(left, right);
    }
}
