//! The local covering rules against the reflection-table oracle, plus
//! rule-only invariants on windows too large to tabulate.

use bruric_core::groups::covers::{neighbors_a, neighbors_b, neighbors_d};
use bruric_core::groups::window::Window;
use bruric_core::verify::{check_cover_rules, VerifyOptions};
use proptest::prelude::*;

#[test]
fn rules_match_generic_covers_everywhere() {
    let opts = VerifyOptions {
        deep: true,
        ..VerifyOptions::default()
    };
    let c = check_cover_rules(&opts);
    assert!(c.passed, "{}", c.detail);
    for group in ["A3", "A4", "B3", "B4", "D4", "D5"] {
        assert!(c.detail.contains(group), "missing {group}: {}", c.detail);
    }
}

fn signed_window(n: usize) -> impl Strategy<Value = Window> {
    let base: Vec<i8> = (1..=n as i8).collect();
    (Just(base).prop_shuffle(), proptest::bits::u8::ANY).prop_map(move |(mut vals, mask)| {
        for (i, v) in vals.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                *v = -*v;
            }
        }
        Window::new(vals)
    })
}

fn even_signed_window(n: usize) -> impl Strategy<Value = Window> {
    signed_window(n).prop_map(|w| {
        if w.negative_count() % 2 == 0 {
            w
        } else {
            let mut vals = w.entries().to_vec();
            vals[0] = -vals[0];
            Window::new(vals)
        }
    })
}

fn unsigned_window(n: usize) -> impl Strategy<Value = Window> {
    let base: Vec<i8> = (1..=n as i8).collect();
    Just(base).prop_shuffle().prop_map(Window::new)
}

proptest! {
    #[test]
    fn b6_up_covers_raise_length_by_one(w in signed_window(6)) {
        let len = w.length_b();
        let (ups, downs) = neighbors_b(&w);
        for u in &ups {
            prop_assert!(u.validate_signed().is_ok());
            prop_assert_eq!(u.length_b(), len + 1);
        }
        for d in &downs {
            prop_assert_eq!(d.length_b(), len.wrapping_sub(1));
        }
    }

    #[test]
    fn d6_up_covers_stay_in_the_group(w in even_signed_window(6)) {
        let len = w.length_d();
        let (ups, downs) = neighbors_d(&w).unwrap();
        for u in &ups {
            prop_assert!(u.validate_even_signs().is_ok());
            prop_assert_eq!(u.length_d(), len + 1);
        }
        for d in &downs {
            prop_assert!(d.validate_even_signs().is_ok());
            prop_assert_eq!(d.length_d(), len.wrapping_sub(1));
        }
    }

    #[test]
    fn a7_covers_differ_in_two_positions(w in unsigned_window(7)) {
        let (ups, _) = neighbors_a(&w);
        for u in &ups {
            prop_assert_eq!(u.length_a(), w.length_a() + 1);
            let diffs = w
                .entries()
                .iter()
                .zip(u.entries())
                .filter(|(a, b)| a != b)
                .count();
            prop_assert_eq!(diffs, 2);
        }
    }

    #[test]
    fn b5_cover_relation_is_symmetric(w in signed_window(5)) {
        let (ups, downs) = neighbors_b(&w);
        for u in &ups {
            let (_, u_downs) = neighbors_b(u);
            prop_assert!(u_downs.contains(&w), "{w} not below {u}");
        }
        for d in &downs {
            let (d_ups, _) = neighbors_b(d);
            prop_assert!(d_ups.contains(&w), "{w} not above {d}");
        }
    }
}
