use gentotient::aut::{aut_count, aut_count_exhaustive};
use gentotient::class_c::membership_check;
use gentotient::closed_forms::{self as cf, Partition, Partitions};
use gentotient::expr::parse;
use gentotient::group::{enumerated_spectrum, order_spectrum, AbelianType, GroupSpec};
use gentotient::{arith, families};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

const ATOMS: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "Z12", "D6", "D8", "D10", "D12", "Q8", "Q16", "SD16",
    "S3", "S4", "A4", "Z2^2", "Z2^3", "MC(4,2,2,3)", "MC(9,3,3,4)", "MC(7,3,0,2)", "P(3,2,2)", "H(1)",
];

fn small_group(max_factors: usize, max_order: u64) -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec(prop::sample::select(ATOMS), 1..=max_factors)
        .prop_map(|names| parse(&names.join("x")).unwrap())
        .prop_filter("order bound", move |g| g.order_u64().is_some_and(|n| n <= max_order))
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Abelian types as sorted lists of prime-power cyclic orders.
fn abelian_type() -> impl Strategy<Value = AbelianType> {
    prop::collection::vec((prop::sample::select(&[2u64, 3, 5, 7][..]), 1u32..=3), 0..=4).prop_map(|pp| {
        let orders: Vec<u64> = pp.iter().map(|&(p, e)| p.pow(e)).collect();
        AbelianType::from_prime_powers(&orders).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn convolved_spectrum_matches_enumeration(g in small_group(3, 3000)) {
        prop_assert_eq!(order_spectrum(&g).unwrap(), enumerated_spectrum(&g).unwrap());
    }

    #[test]
    fn spectrum_invariants(g in small_group(3, 3000)) {
        let s = order_spectrum(&g).unwrap();
        s.check_invariants().unwrap();
        prop_assert_eq!(s.counts().values().sum::<BigUint>(), g.order());
        prop_assert!(s.count(1).is_one());
        let exp = s.exponent().unwrap();
        for (&d, c) in s.counts() {
            prop_assert_eq!(exp % d, 0);
            prop_assert!((c % BigUint::from(arith::euler_phi(d))).is_zero());
            prop_assert!((g.order() % BigUint::from(d)).is_zero());
        }
        prop_assert_eq!(s.phi().unwrap(), s.count(exp));
    }

    #[test]
    fn chain_aut_count_matches_exhaustive(g in small_group(2, 24)) {
        prop_assert_eq!(aut_count(&g).unwrap(), aut_count_exhaustive(&g).unwrap());
    }

    #[test]
    fn membership_tests_agree(g in small_group(3, 1500)) {
        prop_assert!(membership_check(&g).unwrap().agrees());
    }

    #[test]
    fn abelian_closed_form_matches_oracle(t in abelian_type()) {
        prop_assume!(t.order() <= BigUint::from(20_000u32));
        let g = families::from_abelian_type(&t);
        prop_assert_eq!(cf::phi_abelian::<BigUint>(&t).unwrap(), enumerated_spectrum(&g).unwrap().phi().unwrap());
    }

    #[test]
    fn display_reparses_to_same_spectrum(g in small_group(3, 3000)) {
        let back = parse(&g.to_string()).unwrap();
        prop_assert_eq!(order_spectrum(&back).unwrap(), order_spectrum(&g).unwrap());
    }

    #[test]
    fn partition_class_sizes_sum_to_factorial(n in 1u32..=25) {
        let mut all = BigUint::zero();
        let mut even = BigUint::zero();
        let mut count = 0u64;
        for p in Partitions::new(n) {
            prop_assert_eq!(p.parts().iter().sum::<u32>(), n);
            let size: BigUint = p.class_size();
            if p.is_even() {
                even += &size;
            }
            all += size;
            count += 1;
        }
        prop_assert_eq!(&all, &factorial(n as usize));
        if n >= 2 {
            prop_assert_eq!(even * 2u32, all);
        }
        prop_assert_eq!(count, partition_number(n as usize));
    }

    #[test]
    fn partition_lcm_divides_exponent(parts in prop::collection::vec(1u32..=9, 1..=4)) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(cf::exp_symmetric::<u64>(p.n() as u64) % p.lcm(), 0);
    }
}

/// Partition numbers by the pentagonal recurrence.
fn partition_number(n: usize) -> u64 {
    let mut p = vec![1i64; n + 1];
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}
