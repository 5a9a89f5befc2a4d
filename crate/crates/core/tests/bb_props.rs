use gm_hilb::bb::{attractor_pair_poincare, fixed_components, poincare_identity};
use gm_hilb::newton::ActionWeights;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn census_and_identities(a in prop::collection::vec(-8i64..=8, 1..=9), shift in -20i64..=20) {
        let aw = ActionWeights(a.clone());
        let r = a.len() - 1;
        let comps = fixed_components(&aw).unwrap();
        prop_assert!(comps.windows(2).all(|w| w[0].weight < w[1].weight));
        for c in &comps {
            prop_assert_eq!(c.above + c.dim + c.below, r);
        }
        let id = poincare_identity(&aw).unwrap();
        prop_assert!(id.equal);
        prop_assert_eq!(id.lhs.at_one(), (r + 1) as u64);
        prop_assert_eq!(id.above_form.at_one(), (r + 1) as u64);

        let shifted = ActionWeights(a.iter().map(|w| w + shift).collect());
        let sid = poincare_identity(&shifted).unwrap();
        prop_assert_eq!((&sid.lhs, &sid.above_form), (&id.lhs, &id.above_form));
        let shape = |cs: &[gm_hilb::bb::FixedComponent]| cs.iter().map(|c| (c.dim, c.above, c.below)).collect::<Vec<_>>();
        prop_assert_eq!(shape(&sid.components), shape(&comps));

        for cut in 1..=comps.len() {
            let p = attractor_pair_poincare(&aw, cut).unwrap();
            prop_assert!(p.equal);
            let cells: usize = comps[..cut].iter().map(|c| c.dim + 1).sum();
            prop_assert_eq!(p.closed_part.at_one(), cells as u64);
            prop_assert_eq!(p.open_part.at_one(), cells as u64);
            let q = attractor_pair_poincare(&shifted, cut).unwrap();
            prop_assert_eq!((&q.closed_part, &q.open_part), (&p.closed_part, &p.open_part));
        }
    }
}
