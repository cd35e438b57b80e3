//! End-to-end runs on the small builtin diagrams: completion from the
//! defining relations, comparison against the tabulated bases, and order
//! counting against the permutation oracle.

use num::BigUint;

use gsb_core::{
    builtin_preset, claimed_basis, count_by_length, build_avoidance, group_order,
    shirshov_complete, verify, verify_against_claims, CompletionStatus, CoxeterOracle,
    GroupOrder, Limits, PresetType, Variant,
};

fn complete_preset(ty: PresetType) -> gsb_core::CompletionReport {
    let pres = builtin_preset(ty).unwrap().presentation().unwrap();
    shirshov_complete(pres.relations, &pres.alphabet, &Limits::default()).unwrap()
}

#[test]
fn g2_completion_is_the_three_defining_relations() {
    let report = complete_preset(PresetType::G2);
    assert_eq!(report.status, CompletionStatus::Complete);
    assert_eq!(report.basis.len(), 3);
    // Nothing new: the defining relations are already closed.
    assert!(report.added.is_empty());
    let claimed = claimed_basis(PresetType::G2, Variant::AsPrinted).unwrap();
    let diff = verify_against_claims(&claimed, &report.basis).unwrap();
    assert!(diff.full_match());
    assert_eq!(diff.exact_matches, 3);
}

#[test]
fn g2_order_and_growth() {
    let mut report = complete_preset(PresetType::G2);
    assert!(verify(&mut report.basis).closed);
    assert_eq!(
        group_order(&report.basis, false).unwrap(),
        GroupOrder::Finite(BigUint::from(12u8))
    );
    let aut = build_avoidance(&report.basis.leading_words(), report.basis.alphabet()).unwrap();
    let series = count_by_length(&aut, None);
    assert_eq!(series.max_length(), Some(6));
    // Palindromic length distribution of the dihedral group of order 12.
    let counts: Vec<u64> = series.counts.iter().map(|c| u64::try_from(c).unwrap()).collect();
    assert_eq!(counts, vec![1, 2, 2, 2, 2, 2, 1]);
}

#[test]
fn f4_completion_matches_the_tabulated_basis_lead_for_lead() {
    let report = complete_preset(PresetType::F4);
    assert_eq!(report.status, CompletionStatus::Complete);
    assert_eq!(report.basis.len(), 21);
    let claimed = claimed_basis(PresetType::F4, Variant::AsPrinted).unwrap();
    let diff = verify_against_claims(&claimed, &report.basis).unwrap();
    assert!(diff.full_match(), "unmatched: {:?}", diff.per_instance);
    assert!(diff.computed_only.is_empty());
    // The tabulated right sides of alpha1 and alpha5..alpha11 contain
    // x3 x1 / x4 x1 redexes, so interreduction rewrites their tails; the
    // leads still correspond one-for-one.
    assert_eq!(diff.exact_matches, 13);
    assert_eq!(diff.reduces_to_zero, 8);
    let mut claimed_leads: Vec<String> = claimed
        .basis
        .elements()
        .iter()
        .map(|p| claimed.alphabet().format_word(p.leading_word().unwrap()))
        .collect();
    let mut computed_leads: Vec<String> = report
        .basis
        .elements()
        .iter()
        .map(|p| claimed.alphabet().format_word(p.leading_word().unwrap()))
        .collect();
    claimed_leads.sort();
    computed_leads.sort();
    assert_eq!(claimed_leads, computed_leads);
}

#[test]
fn f4_order_agrees_with_the_oracle() {
    let mut report = complete_preset(PresetType::F4);
    assert!(verify(&mut report.basis).closed);
    let order = group_order(&report.basis, false).unwrap();
    let oracle = CoxeterOracle::for_preset(PresetType::F4).unwrap();
    assert_eq!(order, GroupOrder::Finite(oracle.order()));
    assert_eq!(oracle.n_roots(), 48);
    let aut = build_avoidance(&report.basis.leading_words(), report.basis.alphabet()).unwrap();
    let series = count_by_length(&aut, None);
    assert_eq!(series.max_length(), Some(24));
}

#[test]
fn a_and_b_presets_complete_and_count() {
    for (ty, order) in [
        (PresetType::A(2), 6u64),
        (PresetType::A(3), 24),
        (PresetType::B(3), 48),
    ] {
        let mut report = complete_preset(ty);
        assert_eq!(report.status, CompletionStatus::Complete, "{ty}");
        assert!(verify(&mut report.basis).closed, "{ty}");
        assert_eq!(
            group_order(&report.basis, false).unwrap(),
            GroupOrder::Finite(BigUint::from(order)),
            "{ty}"
        );
    }
}
