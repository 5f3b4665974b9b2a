use std::collections::HashSet;

use gammapath::{
    alpha, beta, decompile, degree, gamma, gamma_direct, gen_gamma_path, peel, predicted_length,
    Letter, SeedArray, Word,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|bits| {
        Word::from_letters(
            bits.into_iter()
                .map(|b| if b { Letter::A } else { Letter::B })
                .collect(),
        )
    })
}

/// A D_n word: shuffle n a's among n+1 b's, then rotate with the cycle lemma.
fn dn_word(max_n: usize) -> impl Strategy<Value = Word> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let mut letters = vec![Letter::A; n];
            letters.extend(vec![Letter::B; n + 1]);
            Just(letters).prop_shuffle()
        })
        .prop_map(|letters| Word::from_letters(letters).cycle_lemma_rotation().unwrap().1)
}

fn seed() -> impl Strategy<Value = SeedArray> {
    (1usize..=4, prop::collection::vec(0usize..=4, 0..=4)).prop_map(|(t0, rest)| {
        let mut entries = vec![t0];
        entries.extend(rest);
        SeedArray::new(entries).unwrap()
    })
}

proptest! {
    #[test]
    fn text_form_round_trips(w in word(64)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn sym_is_an_anti_morphism(u in word(20), v in word(20)) {
        prop_assert_eq!(u.concat(&v).sym(), v.sym().concat(&u.sym()));
    }

    #[test]
    fn operators_on_large_dn(w in dn_word(40)) {
        prop_assert!(w.in_dn());
        let a = alpha(&w).unwrap();
        let b = beta(&w).unwrap();
        prop_assert_eq!(alpha(&a).unwrap(), w.clone());
        prop_assert_eq!(beta(&b).unwrap(), w.clone());
        prop_assert_eq!(gamma(&w).unwrap(), gamma_direct(&w).unwrap());
        prop_assert!(gamma(&w).unwrap().in_dn());
    }

    #[test]
    fn generated_words_are_fixed_and_decompile(s in seed()) {
        let trace = gen_gamma_path(&s);
        prop_assert_eq!(trace.output.len() as u64, predicted_length(&s));
        let dn = trace.dn_word();
        prop_assert_eq!(gamma(&dn).unwrap(), dn.clone());
        prop_assert_eq!(decompile(&dn).unwrap(), s.clone());

        // child chain length equals degree and ends at a pyramid
        let mut current = trace.output.clone();
        let mut peels = 0;
        while !current.is_pyramid() {
            current = peel(&current).unwrap().child;
            peels += 1;
        }
        prop_assert_eq!(peels, degree(&dn).unwrap());
        prop_assert_eq!(peels, s.degree());
    }

    #[test]
    fn peel_child_is_a_shorter_fixed_point(s in seed()) {
        let out = gen_gamma_path(&s).output;
        prop_assume!(!out.is_pyramid());
        let p = peel(&out).unwrap();
        prop_assert_eq!(p.x.concat(&p.z).concat(&p.x.sym()), out.clone());
        prop_assert!(p.child.is_dyck() && p.child.is_symmetric());
        prop_assert!(p.child.len() < out.len());
        let child_dn = p.child.clone().push(Letter::B);
        prop_assert_eq!(gamma(&child_dn).unwrap(), child_dn);
    }
}

#[test]
fn gamma_is_a_bijection_on_random_samples_of_d_20() {
    // gamma is a bijection, so distinct inputs have distinct images
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = dn_word(20);
    let mut inputs = HashSet::new();
    let mut images = HashSet::new();
    for _ in 0..500 {
        let w = strategy.new_tree(&mut runner).unwrap().current();
        if inputs.insert(w.clone()) {
            assert!(images.insert(gamma(&w).unwrap()));
        }
    }
}
