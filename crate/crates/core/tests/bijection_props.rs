use polar_words::bijection::{
    base_table, build_table, subspace_to_word, verify_bijection, word_to_subspace,
};
use polar_words::gf2::Gf2Subspace;
use polar_words::language::{classify_word, word_reduce, Word};
use polar_words::nset::{classify_subspace, in_n, subspace_reduce};
use proptest::prelude::*;

#[test]
fn exhaustive_reports() {
    let expected_words = [2, 5, 15, 51, 187, 715, 2795];
    for n in 1..=7 {
        let r = verify_bijection(n).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.matched, expected_words[n - 1]);
    }
}

#[test]
fn small_tables_are_the_base_tables() {
    for n in 1..=3 {
        assert_eq!(build_table(n).unwrap(), base_table(n).unwrap());
    }
    let t2 = base_table(2).unwrap();
    assert_eq!(
        t2.forward[&"23".parse::<Word>().unwrap()],
        Gf2Subspace::full(2).unwrap()
    );
}

#[test]
fn naturality() {
    for n in 4..=7 {
        let prev = build_table(n - 1).unwrap();
        for (w, v) in build_table(n).unwrap().forward {
            let (lw, ws) = word_reduce(&w).unwrap();
            let (lv, vs) = subspace_reduce(&v).unwrap();
            assert_eq!(lw.case, lv.case);
            assert_eq!(prev.forward[&ws], vs, "{w}");
        }
    }
}

#[test]
fn tables_are_deterministic() {
    for n in 4..=7 {
        assert_eq!(build_table(n).unwrap(), build_table(n).unwrap());
    }
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=4, 1..=max_len).prop_map(|raw| {
        let mut top = 1;
        let letters: Vec<u8> = raw
            .into_iter()
            .map(|a| {
                let a = a.min(top + 1);
                top = top.max(a);
                a
            })
            .collect();
        Word::new(&letters).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Beyond the exhaustive range: images stay in the family, keep the
    /// case, and map back.
    #[test]
    fn long_words_round_trip(w in word(14)) {
        let v = word_to_subspace(&w).unwrap();
        prop_assert_eq!(v.ambient_dim(), w.len());
        prop_assert!(in_n(&v));
        if w.len() >= 2 {
            prop_assert_eq!(classify_subspace(&v).unwrap().case, classify_word(&w).case);
        }
        prop_assert_eq!(subspace_to_word(&v).unwrap(), w);
    }
}
