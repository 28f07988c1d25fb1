mod common;

use std::sync::Arc;

use common::{random_pair, Model};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stanley_core::families::{instantiate, FamilyKind, FamilySpec};
use stanley_core::search::{
    fdepth_decision, fdepth_exact, sdepth_decision, sdepth_exact, Decision, DepthStatus,
    SearchBudget,
};
use stanley_core::{CharacteristicPoset, ExponentVector, QuotientPair};

fn seq() -> SearchBudget {
    SearchBudget::single_thread()
}

fn check_against_oracle(pair: &QuotientPair, g: Option<&ExponentVector>) {
    let gv = g.cloned().unwrap_or_else(|| pair.canonical_g());
    let model = Model::from_pair(pair, &gv);
    let s = sdepth_exact(pair, g, &seq()).unwrap();
    let f = fdepth_exact(pair, g, &seq()).unwrap();
    assert_eq!(s.status, DepthStatus::Exact);
    assert_eq!(f.status, DepthStatus::Exact);
    assert_eq!(s.value, model.sdepth(), "sdepth of {pair:?}");
    assert_eq!(f.value, model.fdepth(), "fdepth of {pair:?}");

    let sw = s.witness.unwrap();
    assert_eq!(sw.stats().sdepth, s.value);
    assert!(sw.to_decomposition().verify().is_valid());
    let fw = f.witness.unwrap();
    assert_eq!(fw.stats().sdepth, f.value);
    assert!(fw.is_ordered());
    assert!(fw.filtration_decomposition().is_filtration_order());
}

#[test]
fn random_instances_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut checked = 0;
    while checked < 150 {
        let n = 2 + checked % 3;
        let pair = random_pair(&mut rng, n, 3, 2, checked % 2 == 1);
        if Model::from_pair(&pair, &pair.canonical_g()).points.len() > 22 {
            continue;
        }
        check_against_oracle(&pair, None);
        checked += 1;
    }
}

#[test]
fn explicit_g_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut checked = 0;
    while checked < 40 {
        let pair = random_pair(&mut rng, 2, 3, 2, checked % 2 == 0);
        let g = pair.canonical_g().add(&ExponentVector::new(vec![1, 1]));
        if Model::from_pair(&pair, &g).points.len() > 22 {
            continue;
        }
        check_against_oracle(&pair, Some(&g));
        checked += 1;
    }
}

#[test]
fn named_instances_match_brute_force() {
    for spec in [
        FamilySpec::maximal(3),
        FamilySpec::maximal(4),
        FamilySpec::skeleton(4, 2),
        FamilySpec::skeleton(4, 2).quotient(),
        FamilySpec::new(FamilyKind::Figure1),
        FamilySpec::new(FamilyKind::Delta1234).quotient(),
    ] {
        check_against_oracle(&instantiate(&spec).unwrap(), None);
    }
    let fig4 = FamilySpec::new(FamilyKind::Figure4);
    check_against_oracle(&instantiate(&fig4).unwrap(), fig4.suggested_g().as_ref());
}

#[test]
fn decisions_are_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for round in 0..40 {
        let pair = random_pair(&mut rng, 3, 3, 2, round % 2 == 0);
        let poset = Arc::new(CharacteristicPoset::canonical(&pair).unwrap());
        let n = pair.num_vars() as u32;
        for decide in [sdepth_decision, fdepth_decision] {
            let answers: Vec<bool> = (0..=n + 1)
                .map(|k| match decide(&poset, k, &seq()).unwrap() {
                    Decision::Yes(p) => {
                        assert!(p.stats().sdepth >= k);
                        true
                    }
                    Decision::No => false,
                    Decision::Unknown => panic!("no budget was set"),
                })
                .collect();
            assert!(answers.windows(2).all(|w| w[0] || !w[1]), "{answers:?}");
            assert!(answers[0]);
        }
    }
}
