use deligne_kit::diagram::{
    partial_pairings, res_diagram, x_r, Morphism, Relation, SetPartitionDiagram,
};
use deligne_kit::linalg::{rank, Matrix};
use deligne_kit::{Caps, DiagramMorphism, Error, Integer, Rational};
use proptest::prelude::*;

fn diagram(r: usize, s: usize, labels: &[usize]) -> SetPartitionDiagram {
    SetPartitionDiagram::from_labels(r, s, &labels[..r + s])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_functorial(
        (a, b, c) in (0usize..=3, 0usize..=3, 0usize..=3),
        la in proptest::collection::vec(0usize..6, 6),
        lb in proptest::collection::vec(0usize..6, 6),
        n in 1usize..=3,
    ) {
        let caps = Caps::default();
        let f: DiagramMorphism = Morphism::from_diagram(diagram(a, b, &la));
        let g: DiagramMorphism = Morphism::from_diagram(diagram(b, c, &lb));
        let gf = g.compose(&f).unwrap();
        let lhs: Matrix<Rational> = gf.evaluate_at(n, &caps).unwrap();
        let ef: Matrix<Rational> = f.evaluate_at(n, &caps).unwrap();
        let eg: Matrix<Rational> = g.evaluate_at(n, &caps).unwrap();
        prop_assert_eq!(lhs, &eg * &ef);
    }

    #[test]
    fn composition_is_associative(
        la in proptest::collection::vec(0usize..6, 6),
        lb in proptest::collection::vec(0usize..6, 6),
        lc in proptest::collection::vec(0usize..6, 6),
    ) {
        let f: DiagramMorphism = Morphism::from_diagram(diagram(2, 3, &la));
        let g: DiagramMorphism = Morphism::from_diagram(diagram(3, 2, &lb));
        let h: DiagramMorphism = Morphism::from_diagram(diagram(2, 1, &lc));
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn discrete_idempotent_has_rank_falling_factorial() {
    let caps = Caps::default();
    for k in 1..=3 {
        let x = x_r::<Integer>(&Relation::discrete(k), &caps).unwrap();
        for n in 1..=4 {
            let m: Matrix<Rational> = x.evaluate_at(n, &caps).unwrap();
            let want: usize = (0..k).map(|i| n.saturating_sub(i)).product();
            assert_eq!(rank(&m), want, "k={k} N={n}");
        }
    }
}

#[test]
fn restriction_maps_and_pairings() {
    let caps = Caps::default();
    assert_eq!(partial_pairings(2, 2, &caps).unwrap().len(), 7);
    assert!(matches!(
        partial_pairings(9, 1, &caps),
        Err(Error::CapExceeded { .. })
    ));
    assert!(res_diagram(3, 2).unwrap().is_partial_pairing());
    assert!(matches!(res_diagram(2, 3), Err(Error::IndexOutOfRange(_))));
}
