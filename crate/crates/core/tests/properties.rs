use proptest::prelude::*;

use fibcube_core::cube_graphs::construct;
use fibcube_core::size_formulas::{
    pcube_size_convolution, pcube_size_iterative, pcube_size_linear, size_convolution,
    size_iterative, size_linear, KSizes, PSizes,
};
use fibcube_core::{kstep_fib_range, pstep_fib_range, BigNat, BitString, Budget, FamilyTag, KStepSequence};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sequence_drops_back_k_steps(k in 2usize..9, n in 0usize..150) {
        let f = kstep_fib_range(k, n + k + 1).unwrap();
        let two_ahead: BigNat = &f[n + k] << 1usize;
        prop_assert_eq!(&f[n] + &f[n + k + 1], two_ahead);
    }

    #[test]
    fn p1_is_classic_fibonacci(n in 0usize..300) {
        let a = pstep_fib_range(1, n).unwrap();
        let b = kstep_fib_range(2, n).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn nondecreasing_after_seed(k in 2usize..9, n in 0usize..200) {
        let f = kstep_fib_range(k, n + k).unwrap();
        prop_assert!(f[k - 1..].windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn cache_regrowth_is_identical(k in 2usize..9, n in 0usize..300, cut in 0usize..300) {
        let mut s = KStepSequence::new(k).unwrap();
        let first = s.prefix(n).to_vec();
        s.truncate(cut);
        prop_assert_eq!(s.prefix(n), &first[..]);
    }

    #[test]
    fn k_methods_agree(k in 2usize..9, n in 0usize..200) {
        let it = size_iterative(k, n).unwrap();
        prop_assert_eq!(&it, &size_convolution(k, n).unwrap());
        if n >= k {
            prop_assert_eq!(&it, &size_linear(k, n).unwrap());
        }
    }

    #[test]
    fn p_methods_agree(p in 1usize..6, n in 0usize..200) {
        let it = pcube_size_iterative(p, n).unwrap();
        prop_assert_eq!(&it, &pcube_size_convolution(p, n).unwrap());
        if n > p {
            prop_assert_eq!(&it, &pcube_size_linear(p, n).unwrap());
        }
    }

    #[test]
    fn linear_numerators_divide(k in 2usize..9, extra in 0usize..200, p in 1usize..6) {
        let mut ks = KSizes::new(k).unwrap();
        let n = k + extra;
        let d = num_bigint::BigInt::from(ks.coefficients().denominator.clone());
        prop_assert!(ks.linear_numerator(n).unwrap().is_multiple_of(&d));

        let mut ps = PSizes::new(p).unwrap();
        let m = p + 1 + extra;
        prop_assert!((ps.linear_numerator(m).unwrap() % ps.denominator()).is_zero());
    }

    #[test]
    fn classic_linear_form(n in 2usize..300) {
        let f = kstep_fib_range(2, n + 1).unwrap();
        let num = &f[n + 1] * n + &f[n] * (2 * (n + 1));
        prop_assert!((&num % 5u32).is_zero());
        prop_assert_eq!(size_linear(2, n).unwrap(), num / 5u32);
    }

    #[test]
    fn p1_equals_k2(n in 0usize..200) {
        prop_assert_eq!(pcube_size_iterative(1, n).unwrap(), size_iterative(2, n).unwrap());
        prop_assert_eq!(pcube_size_convolution(1, n).unwrap(), size_convolution(2, n).unwrap());
        if n >= 2 {
            prop_assert_eq!(pcube_size_linear(1, n).unwrap(), size_linear(2, n).unwrap());
        }
    }

    #[test]
    fn constructed_vertices_obey_family(k in 2usize..6, p in 1usize..5, n in 0usize..13) {
        let b = Budget::default();
        let g = construct(FamilyTag::KOrder(k), n, b).unwrap();
        let forbidden = "1".repeat(k);
        prop_assert!(g.vertices().iter().all(|v| !v.to_string().contains(&forbidden)));
        prop_assert!(g.degrees().iter().all(|&d| d <= n));

        let g = construct(FamilyTag::PCube(p), n, b).unwrap();
        let too_close: Vec<String> = (0..p).map(|z| format!("1{}1", "0".repeat(z))).collect();
        let spaced = g.vertices().iter().all(|v| {
            let s = v.to_string();
            too_close.iter().all(|pat| !s.contains(pat.as_str()))
        });
        prop_assert!(spaced);
        prop_assert!(g.degrees().iter().all(|&d| d <= n));
    }

    #[test]
    fn bitstring_text_round_trip(s in "[01]{0,63}") {
        let w: BitString = s.parse().unwrap();
        prop_assert_eq!(w.len(), s.len());
        prop_assert_eq!(w.to_string(), s);
    }
}

#[test]
fn sizes_survive_big_integers() {
    let e = size_iterative(3, 200).unwrap();
    assert!(e > BigUint::from(u128::MAX));
}
