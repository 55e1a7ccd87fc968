use proptest::prelude::*;
use ratpark::maps::{anderson, anderson_inverse, ps, sp};
use ratpark::parking::{enumerate_parking_functions, parking_count};
use ratpark::sommers::enumerate_m_restricted;
use ratpark::sp_invert::invert_sp;
use ratpark::AffinePermutation;

/// Coprime pairs small enough to enumerate inside a property case.
fn small_pair() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=5, 1usize..=8).prop_filter("coprime, small", |&(n, m)| {
        num_integer::Integer::gcd(&n, &m) == 1 && parking_count(n, m).unwrap() <= 2_000
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn anderson_roundtrip((n, m) in small_pair(), pick in any::<prop::sample::Index>()) {
        let e = enumerate_m_restricted(n, m, u64::MAX).unwrap();
        let w = e.restricted[pick.index(e.len())].inverse();
        let f = anderson(&w, m).unwrap();
        prop_assert_eq!(anderson_inverse(&f), w);
    }

    #[test]
    fn ps_is_sp_of_inverse((n, m) in small_pair(), pick in any::<prop::sample::Index>()) {
        let e = enumerate_m_restricted(n, m, u64::MAX).unwrap();
        let u = &e.restricted[pick.index(e.len())];
        let w: AffinePermutation = u.inverse();
        let f = ps(&w, m).unwrap();
        prop_assert!(ratpark::parking::is_parking_function(n, m, f.values()).unwrap());
        prop_assert!(sp(u, m).is_ok());
    }

    #[test]
    fn sp_inverter_roundtrip((n, m) in small_pair(), pick in any::<prop::sample::Index>()) {
        let all = enumerate_parking_functions(n, m, u64::MAX).unwrap();
        let f = &all[pick.index(all.len())];
        let u = invert_sp(f, Some(ratpark::sp_invert::sweep_cap(n, m))).unwrap();
        prop_assert_eq!(&sp(&u, m).unwrap(), f);
    }
}
