#![allow(dead_code)]

use rand::Rng;
use selfdist::{Op, Term};

/// A uniformly split random tree with `size` leaves over `x1..=x{vars}`.
/// With `bwd`, each operator is `◁̄` with probability one half.
pub fn random_term(rng: &mut impl Rng, size: usize, vars: u32, bwd: bool) -> Term {
    if size <= 1 {
        return Term::var(rng.gen_range(1..=vars));
    }
    let k = rng.gen_range(1..size);
    let op = if bwd && rng.gen_bool(0.5) {
        Op::Bwd
    } else {
        Op::Fwd
    };
    let l = random_term(rng, k, vars, bwd);
    let r = random_term(rng, size - k, vars, bwd);
    Term::app(op, l, r)
}

pub mod props {
    use std::cmp::Ordering;

    use proptest::prelude::*;
    use proptest::test_runner::TestCaseError;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use selfdist::braid::{
        artin_images, braid_equiv, braid_shelf_op, compare_ld, wp_ld_semantic, BraidWord,
    };
    use selfdist::free::FreeWord;
    use selfdist::ld::{derive, find_expansion_path};
    use selfdist::rack::{quandle_op, rack_op, QuandleElement, RackElement};
    use selfdist::{Op, SearchLimits, Term};

    pub const CASES: u32 = 256;

    fn letter(max: i32) -> impl Strategy<Value = i32> {
        (1..=max, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i })
    }

    pub fn braid_word() -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(letter(4), 0..8).prop_map(BraidWord)
    }

    pub fn rack_element() -> impl Strategy<Value = RackElement> {
        (1u32..=3, prop::collection::vec(letter(3), 0..6)).prop_map(|(base, w)| RackElement {
            base,
            tail: FreeWord::reduced(w),
        })
    }

    pub fn quandle_element() -> impl Strategy<Value = QuandleElement> {
        (1u32..=3, prop::collection::vec(letter(3), 0..5)).prop_map(|(g, c)| {
            QuandleElement(FreeWord::generator(g).conjugate_by(&FreeWord::reduced(c)))
        })
    }

    /// One-variable `◁`-terms with at most `max` leaves.
    pub fn one_var_term(max: usize) -> impl Strategy<Value = Term> {
        (1..=max, any::<u64>()).prop_map(|(size, seed)| {
            super::random_term(&mut ChaCha8Rng::seed_from_u64(seed), size, 1, false)
        })
    }

    pub fn braid_shelf_is_ld(
        a: &BraidWord,
        b: &BraidWord,
        c: &BraidWord,
    ) -> Result<(), TestCaseError> {
        let op = braid_shelf_op;
        let lhs = op(a, &op(b, c));
        let rhs = op(&op(a, b), &op(a, c));
        prop_assert!(braid_equiv(&lhs, &rhs), "{a:?} {b:?} {c:?}");
        Ok(())
    }

    pub fn rack_laws(
        a: &RackElement,
        b: &RackElement,
        c: &RackElement,
    ) -> Result<(), TestCaseError> {
        let (f, g) = (Op::Fwd, Op::Bwd);
        prop_assert_eq!(&rack_op(&rack_op(a, b, f), b, g), a);
        prop_assert_eq!(&rack_op(&rack_op(a, b, g), b, f), a);
        prop_assert_eq!(
            rack_op(&rack_op(a, b, f), c, f),
            rack_op(&rack_op(a, c, f), &rack_op(b, c, f), f)
        );
        for (o, p) in [(f, g), (g, f), (g, g)] {
            prop_assert_eq!(
                rack_op(&rack_op(a, b, o), c, p),
                rack_op(&rack_op(a, c, p), &rack_op(b, c, p), o)
            );
        }
        prop_assert_eq!(rack_op(a, b, f), rack_op(a, &rack_op(b, b, f), f));
        Ok(())
    }

    pub fn quandle_laws(
        a: &QuandleElement,
        b: &QuandleElement,
        c: &QuandleElement,
    ) -> Result<(), TestCaseError> {
        let (f, g) = (Op::Fwd, Op::Bwd);
        prop_assert_eq!(&quandle_op(&quandle_op(a, b, f), b, g), a);
        prop_assert_eq!(&quandle_op(&quandle_op(a, b, g), b, f), a);
        prop_assert_eq!(&quandle_op(a, a, f), a);
        for (o, p) in [(f, f), (f, g), (g, f), (g, g)] {
            prop_assert_eq!(
                quandle_op(&quandle_op(a, b, o), c, p),
                quandle_op(&quandle_op(a, c, p), &quandle_op(b, c, p), o)
            );
        }
        prop_assert_eq!(quandle_op(a, b, f), quandle_op(a, &quandle_op(b, b, f), f));
        Ok(())
    }

    pub fn derived_term_is_reachable(t: &Term) -> Result<(), TestCaseError> {
        let d = derive(t).unwrap();
        let path = find_expansion_path(t, &d, &SearchLimits::default()).unwrap();
        prop_assert!(path.is_some(), "∂({t}) = {d} not reached");
        Ok(())
    }

    pub fn artin_respects_relations(
        u: &BraidWord,
        v: &BraidWord,
        i: i32,
        j: i32,
    ) -> Result<(), TestCaseError> {
        let wrap = |mid: &[i32]| BraidWord([&u.0[..], mid, &v.0[..]].concat());
        let m = 8;
        let same = |x: &[i32], y: &[i32]| artin_images(&wrap(x), m) == artin_images(&wrap(y), m);
        prop_assert!(same(&[i, i + 1, i], &[i + 1, i, i + 1]));
        prop_assert!(same(&[-i, -(i + 1), -i], &[-(i + 1), -i, -(i + 1)]));
        if (i - j).abs() >= 2 {
            prop_assert!(same(&[i, j], &[j, i]));
            prop_assert!(same(&[i, -j], &[-j, i]));
        }
        prop_assert!(same(&[i, -i], &[]));
        Ok(())
    }

    pub fn comparison_is_a_trichotomy(t: &Term, u: &Term, w: &Term) -> Result<(), TestCaseError> {
        let tu = compare_ld(t, u).unwrap();
        prop_assert_eq!(compare_ld(u, t).unwrap(), tu.reverse());
        prop_assert_eq!(tu == Ordering::Equal, wp_ld_semantic(t, u).unwrap());
        if t.iter_left_divides(u) {
            prop_assert_eq!(tu, Ordering::Less);
        }
        let uw = compare_ld(u, w).unwrap();
        if tu == uw && tu != Ordering::Equal {
            prop_assert_eq!(compare_ld(t, w).unwrap(), tu);
        }
        Ok(())
    }
}
