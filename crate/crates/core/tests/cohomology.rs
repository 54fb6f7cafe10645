use deligne_kit::blocks::{Basis, KElement};
use deligne_kit::delta_complex::{
    a_count, derived_gamma_straightened, euler_characteristics, EquivariantComplex,
};
use deligne_kit::{Caps, Partition};

#[test]
fn cohomology_follows_straightening() {
    let caps = Caps::default();
    for n in 0..=4 {
        for big_n in 0..=7 {
            let h = EquivariantComplex::build(n, big_n, &caps)
                .unwrap()
                .cohomology();
            for mu in Partition::all_of_size(n) {
                let dg = derived_gamma_straightened(&mu, big_n);
                for (k, hk) in h.iter().enumerate() {
                    let part = hk.left_isotypic(&mu.transpose());
                    match (dg.degree, &dg.value) {
                        (Some(m), Some(v)) if n - m == k => {
                            assert_eq!(part.mult.len(), 1, "n={n} N={big_n} {mu} k={k}");
                            assert_eq!(part.get(&mu.transpose(), v), 1);
                        }
                        _ => assert!(part.is_zero(), "n={n} N={big_n} {mu} k={k}: {part}"),
                    }
                }
            }
        }
    }
}

#[test]
fn top_cohomology_in_stable_range() {
    let caps = Caps::default();
    for n in 0..=3 {
        for big_n in 2 * n..=6 {
            let h = EquivariantComplex::build(n, big_n, &caps)
                .unwrap()
                .cohomology();
            for (k, hk) in h.iter().enumerate().take(n) {
                assert!(hk.is_zero(), "H^-{k} of K_{n},{big_n}");
            }
            for mu in Partition::all_of_size(n) {
                assert_eq!(h[n].get(&mu.transpose(), &mu.pad(big_n).unwrap()), 1);
            }
        }
    }
}

#[test]
fn euler_characteristic_is_a_standard_object() {
    for mu in Partition::all_up_to(5) {
        let mut chi = KElement::zero(Basis::Standard);
        for (tau, c) in euler_characteristics(&mu) {
            chi.add_term(&tau, c);
        }
        let sign = if mu.size() % 2 == 0 { 1 } else { -1 };
        assert_eq!(
            chi,
            KElement::from_terms(Basis::Standard, [(mu.transpose(), sign)])
        );
    }
}

#[test]
fn a_count_vanishes_outside_the_range() {
    for mu in Partition::all_up_to(4) {
        for tau in Partition::all_up_to(4) {
            for k in 0..=5 {
                let c = a_count(&mu, &tau, k);
                if k > mu.size() || k < tau.size() || !mu.transpose().contains(&tau) {
                    assert_eq!(c, 0);
                }
            }
        }
    }
}
