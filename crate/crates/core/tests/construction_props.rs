use lefschetz_core::construction::{build_construction, plan_construction, random_admissible_hf, verify_construction, Mode};
use lefschetz_core::random::trial_rng;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lex_construction_meets_every_bound(seed in any::<u64>()) {
        let h = random_admissible_hf(&mut trial_rng(seed, 0), 4, 6);
        let n = h.get(1) as usize;
        let plan = plan_construction(&h, n, Mode::SlpLex).unwrap();
        for w in plan.levels.windows(2) {
            // Targets shrink pointwise.
            for (t, &v) in w[1].target.iter().enumerate() {
                prop_assert!(v <= w[0].target.get(t).copied().unwrap_or(0));
            }
        }
        for (lvl, &u) in plan.levels.iter().zip(&plan.profile.u).skip(1) {
            prop_assert_eq!(lvl.target.iter().sum::<u64>(), h.get(u));
        }
        let c = build_construction(&plan, 0).unwrap();
        let report = verify_construction(&c).unwrap();
        prop_assert!(report.all_pass(), "{}: {:?}", h, report);

        // 0 :_A x0 and the socle, computed separately.
        let a = &c.algebra;
        let ann: Vec<u64> = a.as_module().annihilator_of_variable(0).dims().iter().map(|&d| d as u64).collect();
        let soc = a.socle_type();
        for j in 0..soc.len().max(ann.len()) {
            prop_assert_eq!(ann.get(j).copied().unwrap_or(0), soc.get(j).copied().unwrap_or(0));
            let drop = (h.get(j) as i64 - h.get(j + 1) as i64).max(0) as u64;
            prop_assert_eq!(soc.get(j).copied().unwrap_or(0), drop);
        }
    }

    #[test]
    fn basic_construction_has_wlp_within_bounds(seed in any::<u64>()) {
        let h = random_admissible_hf(&mut trial_rng(seed, 1), 4, 5);
        let plan = plan_construction(&h, h.get(1) as usize, Mode::Basic).unwrap();
        let report = verify_construction(&build_construction(&plan, 0).unwrap()).unwrap();
        prop_assert!(report.all_pass(), "{}: {:?}", h, report);
    }
}

#[test]
fn construction_also_works_in_positive_characteristic() {
    let h = "1,3,4,3,1".parse().unwrap();
    let plan = plan_construction(&h, 3, Mode::SlpLex).unwrap();
    let report = verify_construction(&build_construction(&plan, 32003).unwrap()).unwrap();
    assert!(report.all_pass());
    assert_eq!(report.phi, vec![0, 0, 1, 2, 1]);
}
