//! End-to-end checks tying the decomposition search, the certificate
//! rules, and the independent oracles together. Each check prints one
//! PASS line (visible with `--nocapture`) so a full run reads as a
//! checklist; the harness itself reports one ok/FAILED line per check.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cycpres::formcheck::DEFAULT_BRUTE_MAX_LEN;
use cycpres::presentation::normalize_span;
use cycpres::{
    abelian_order, abelian_order_by_resultant, analyze_purity, brute_force_oracle, certify,
    check_pair, enumerate_cosets, required_pairs, AbelianOrder, Assumption, CyclicWord,
    EnumerationOutcome, Int, Letter, MagnusPair, OneRelatorSpec, PairOutcome, SearchConfig,
    Sign, TheoremTag, Word,
};

use num_integer::Integer as _;

fn spec(s: &str) -> OneRelatorSpec {
    OneRelatorSpec::new(s.parse().unwrap()).unwrap()
}

fn group(n: u32, s: &str) -> cycpres::CyclicPresentationSpec {
    cycpres::CyclicPresentationSpec::new(n, s.parse().unwrap()).unwrap()
}

fn random_cyclic_word(rng: &mut ChaCha8Rng, max_index: u32, max_len: usize) -> CyclicWord {
    let len = rng.gen_range(2..=max_len);
    let letters = (0..len).map(|_| {
        Letter::new(
            rng.gen_range(0..=max_index),
            if rng.gen::<bool>() { Sign::Minus } else { Sign::Plus },
        )
    });
    cycpres::cyclically_reduce(&Word::reduce(letters)).0
}

/// A random relator span with at least two involved generators, its
/// lowest subscript shifted to zero.
fn random_span(rng: &mut ChaCha8Rng, max_index: u32, max_len: usize) -> Option<OneRelatorSpec> {
    let w = random_cyclic_word(rng, max_index, max_len);
    if w.is_empty() {
        return None;
    }
    normalize_span(&w).ok().map(|(sp, _)| sp)
}

/// Every unordered pair of distinct valid Magnus subsets for the span.
fn all_pairs(sp: &OneRelatorSpec) -> Vec<MagnusPair> {
    let k = sp.k();
    let subsets: Vec<Vec<u32>> = (0u32..1 << (k + 1))
        .map(|mask| (0..=k).filter(|i| mask & (1 << i) != 0).collect::<Vec<u32>>())
        .filter(|s| {
            sp.involved_indices().iter().any(|g| !s.contains(&g.0))
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if let Ok(p) =
                MagnusPair::from_indices(sp, subsets[i].iter().copied(), subsets[j].iter().copied())
            {
                out.push(p);
            }
        }
    }
    out
}

#[test]
fn check_01_enumeration_collapses_the_higman_type_group_on_three_strands() {
    let start = Instant::now();
    let out = enumerate_cosets(&group(3, "x0^-1 x1 x0 x1^-2"), 10_000);
    let elapsed = start.elapsed();
    assert_eq!(out, EnumerationOutcome::Completed { cosets: 1 });
    assert!(elapsed < Duration::from_secs(1), "enumeration took {elapsed:?}");
    println!(
        "PASS 01: coset enumeration collapses G_3(x0^-1 x1 x0 x1^-2) to the trivial group in {elapsed:?}"
    );
}

#[test]
fn check_02_assumed_base_pair_certifies_the_inner_conjugation_word() {
    let sp = spec("x1^-1 x0^-1 x2 x0 x1 x2^-2");
    let assumptions = [Assumption::non_exceptional_pair(
        [0, 1],
        [1, 2],
        Some("base pair taken as non-exceptional".into()),
    )];
    let out = certify(&sp, &assumptions, &SearchConfig::default());
    let cert = out.certificate().expect("the assumption should unlock a certificate").clone();
    assert_eq!(cert.theorem, TheoremTag::FullInvolvement);
    assert_eq!(cert.n_min, 6);
    assert_eq!(cert.assumptions.len(), 1);

    // The width-1 purity attempt checks the generalized pair and finds a
    // decomposition; its witness must re-expand to the exact designated
    // rotation of the certified spelling.
    let check = cert
        .checks
        .iter()
        .find(|c| c.pair == "({x0,x2},{x1,x2})")
        .expect("generalized pair missing from the check list");
    let PairOutcome::FormMatch(witness) = &check.outcome else {
        panic!("expected a decomposition for the generalized pair, got {:?}", check.outcome);
    };
    let relator: CyclicWord = cert.word.parse().unwrap();
    assert!(witness.is_valid_for(&relator));
    println!(
        "PASS 02: G_n({}) certified infinite for n >= 6 with one assumed pair; the generalized pair's witness expands exactly",
        cert.word
    );
}

#[test]
fn check_03_triple_intersection_assumption_certifies_the_outer_conjugation_word() {
    let sp = spec("x2^-1 x0^-1 x1 x0 x2 x1^-2");
    let out = certify(
        &sp,
        &[Assumption::triple_intersection_trivial(Some("taken as read".into()))],
        &SearchConfig::default(),
    );
    let cert = out.certificate().expect("the assumption should unlock a certificate").clone();
    assert_eq!(cert.theorem, TheoremTag::TripleIntersection);
    assert_eq!(cert.n_min, 8);
    assert_eq!(cert.assumptions.len(), 1);
    println!(
        "PASS 03: G_n({}) certified infinite for n >= 8 from the triple intersection assumption",
        cert.word
    );
}

#[test]
fn check_04_assumed_purity_at_full_width_matches_the_fallback_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0004);
    let config = SearchConfig::default();
    let mut done = 0u32;
    let mut attempts = 0u32;
    while done < 100 {
        attempts += 1;
        assert!(attempts < 10_000, "word generator starved");
        let Some(sp) = random_span(&mut rng, 3, 9) else { continue };
        let k = sp.k();
        let mut assumptions = Vec::new();
        for t in sp.gap_profile().min_window_width()..=k {
            for p in required_pairs(&sp, t).unwrap() {
                assumptions.push(Assumption::non_exceptional_pair(
                    p.y1().index_vec(),
                    p.y2().index_vec(),
                    None,
                ));
            }
        }
        let report = analyze_purity(&sp, &assumptions, &config);
        assert_eq!(
            report.certified_t,
            Some(report.min_window_width),
            "all pairs assumed, so the smallest admissible width must certify for {}",
            sp.relator()
        );
        let full = report
            .candidates
            .iter()
            .find(|c| c.t == k)
            .expect("the full width is always admissible");
        assert!(full.achieved);
        // At full width only the base pair is required and the purity
        // bound collapses onto the base-pair fallback.
        assert_eq!(required_pairs(&sp, k).unwrap().len(), 1);
        assert_eq!(2 * k + 2 * full.t, 4 * k);
        done += 1;
    }
    println!(
        "PASS 04: on 100 seeded spans with every pair assumed, each admissible width certifies and the width-k bound equals the 4k fallback"
    );
}

#[test]
fn check_05_search_and_brute_force_agree_on_a_large_seeded_sample() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
    let config = SearchConfig::default();
    let mut words = 0u32;
    let mut pairs_checked = 0u64;
    while words < 500 {
        let Some(sp) = random_span(&mut rng, 3, 10) else { continue };
        words += 1;
        for pair in all_pairs(&sp) {
            let verdict = check_pair(&pair, &config);
            let matched = match &verdict.outcome {
                PairOutcome::FormMatch(_) => true,
                PairOutcome::CertifiedNonExceptional => false,
                PairOutcome::Inconclusive { reason } => {
                    panic!("unexpected inconclusive verdict ({reason:?}) on {} {pair}", sp.relator())
                }
            };
            let brute = brute_force_oracle(&pair, &config, DEFAULT_BRUTE_MAX_LEN).unwrap();
            assert_eq!(
                matched,
                brute,
                "engines disagree on {} pair {pair}",
                sp.relator()
            );
            pairs_checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "sample took {elapsed:?}");
    println!(
        "PASS 05: search and brute force agree on {pairs_checked} pair checks across 500 seeded words in {elapsed:?}"
    );
}

#[test]
fn check_06_every_reported_witness_expands_to_its_designated_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0006);
    let configs = [
        SearchConfig::default(),
        SearchConfig { max_exponent: Some(3), cancellation_budget: 1 },
    ];
    let mut witnesses = 0u64;
    let mut words = 0u32;
    while words < 200 {
        let Some(sp) = random_span(&mut rng, 3, 9) else { continue };
        words += 1;
        for pair in all_pairs(&sp) {
            for config in &configs {
                let verdict = check_pair(&pair, config);
                if let PairOutcome::FormMatch(w) = &verdict.outcome {
                    assert!(
                        w.is_valid_for(sp.relator()),
                        "witness fails to expand on {} {pair}: {w:?}",
                        sp.relator()
                    );
                    witnesses += 1;
                }
            }
        }
    }
    assert!(witnesses > 500, "sample produced too few witnesses ({witnesses})");
    println!("PASS 06: {witnesses} decomposition witnesses re-expanded to their designated rotations exactly");
}

#[test]
fn check_07_smith_form_and_resultant_agree_on_abelianization_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0007);
    let mut done = 0u32;
    while done < 50 {
        let n = rng.gen_range(2u32..=12);
        let w = random_cyclic_word(&mut rng, 3.min(n - 1), 10);
        if w.is_empty() {
            continue;
        }
        let presentation = cycpres::CyclicPresentationSpec::new(n, w).unwrap();
        let by_smith = abelian_order(&presentation);
        let by_resultant = abelian_order_by_resultant(&presentation);
        assert_eq!(
            by_smith,
            by_resultant,
            "order mismatch for n = {n}, w = {}",
            presentation.word()
        );
        done += 1;
    }
    println!("PASS 07: Smith form and resultant orders agree on 50 seeded groups with n up to 12");
}

#[test]
fn check_08_enumeration_is_consistent_with_certificates_and_abelianization() {
    // Unconditionally certified words: enumeration must not complete at
    // or just above the certified bound.
    for (word, cap) in [("x0 x2 x0 x1 x0 x2", 30_000u64), ("x0 x3 x0 x1 x0 x3", 30_000)] {
        let sp = spec(word);
        let cert = certify(&sp, &[], &SearchConfig::default())
            .certificate()
            .expect("these words certify without assumptions")
            .clone();
        assert!(cert.assumptions.is_empty());
        for n in cert.n_min..cert.n_min + 3 {
            let out = enumerate_cosets(&group(n, word), cap);
            assert_eq!(
                out,
                EnumerationOutcome::Overflow { max_cosets: cap },
                "G_{n}({word}) is certified infinite but the enumeration closed"
            );
        }
    }

    // Where enumeration does close, the abelianization order must divide
    // the group order.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);
    let mut completions = 0u32;
    let mut sampled = 0u32;
    while sampled < 60 {
        let n = rng.gen_range(2u32..=5);
        let w = random_cyclic_word(&mut rng, 2.min(n - 1), 6);
        if w.is_empty() {
            continue;
        }
        sampled += 1;
        let presentation = cycpres::CyclicPresentationSpec::new(n, w).unwrap();
        if let EnumerationOutcome::Completed { cosets } =
            enumerate_cosets(&presentation, 20_000)
        {
            let AbelianOrder::Finite(order) = abelian_order(&presentation) else {
                panic!(
                    "finite group with infinite abelianization reported for {}",
                    presentation.word()
                );
            };
            assert!(
                Int::from(cosets).is_multiple_of(&order),
                "abelianization order {order} does not divide |G| = {cosets} for {}",
                presentation.word()
            );
            completions += 1;
        }
    }
    assert!(completions >= 5, "too few finite samples ({completions}) to be meaningful");
    println!(
        "PASS 08: certified-infinite groups never close ({completions} finite samples all satisfied the divisibility cross-check)"
    );
}

#[test]
fn check_09_higman_type_words_alone_earn_no_certificate() {
    for (k, word) in [(1, "x0^-1 x1 x0 x1^-2"), (2, "x0^-1 x2 x0 x2^-2"), (3, "x0^-1 x3 x0 x3^-2")]
    {
        let out = certify(&spec(word), &[], &SearchConfig::default());
        assert!(
            out.certificate().is_none(),
            "span-{k} word unexpectedly certified"
        );
    }
    println!("PASS 09: the three Higman-type words are refused a certificate without assumptions");
}
