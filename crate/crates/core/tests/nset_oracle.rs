use polar_words::gf2::{enumerate_subspaces, Gf2Subspace};
use polar_words::language::{self, g};
use polar_words::nset::{
    case_counts, classify_subspace, enumerate_n, in_n, is_n, subspace_expand, subspace_reduce,
};

/// N1–N4 read straight off the definition, on coordinate supports.
fn oracle(v: &Gf2Subspace) -> bool {
    let supports: Vec<Vec<usize>> = v.basis().iter().map(|b| b.support()).collect();
    if supports.iter().any(|s| s.len() > 2) {
        return false;
    }
    let two: Vec<(usize, usize)> = supports
        .iter()
        .filter(|s| s.len() == 2)
        .map(|s| (s[0], s[1]))
        .collect();
    let k = two.len();
    for i in 0..k {
        for j in i + 1..k {
            if two[i].1 > two[j].1 {
                return false;
            }
            for l in j + 1..k {
                if two[i].1 == two[j].1 && two[j].1 < two[l].1 && two[l].0 <= two[i].1 {
                    return false;
                }
                for m in l + 1..k {
                    if two[i].1 == two[j].1 && two[j].1 == two[l].1 && two[l].1 < two[m].1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn membership_matches_oracle() {
    for n in 1..=7 {
        for v in enumerate_subspaces(n, None).unwrap() {
            let report = is_n(&v);
            assert_eq!(report.passes, oracle(&v), "{v:?}");
            assert_eq!(report.passes, report.violated.is_none());
        }
    }
}

#[test]
fn family_sizes() {
    for n in 1..=8 {
        assert_eq!(enumerate_n(n).unwrap().len() as u128, g(n), "n = {n}");
    }
    let three = enumerate_subspaces(3, None).unwrap();
    let outside: Vec<String> = three
        .iter()
        .filter(|v| !in_n(v))
        .map(|v| v.to_string())
        .collect();
    assert_eq!(outside, vec!["111"]);
    assert_eq!(
        enumerate_n(2).unwrap().len(),
        enumerate_subspaces(2, None).unwrap().len()
    );
}

#[test]
fn cases_partition_and_match_words() {
    for n in 2..=8 {
        let counts = case_counts(n).unwrap();
        assert_eq!(counts.iter().sum::<usize>() as u128, g(n));
        assert_eq!(counts, language::case_counts(n).unwrap(), "n = {n}");
    }
}

#[test]
fn reductions_land_in_family() {
    for n in 2..=8 {
        for v in enumerate_n(n).unwrap() {
            let (label, smaller) = subspace_reduce(&v).unwrap();
            assert_eq!(label, classify_subspace(&v).unwrap());
            assert_eq!(smaller.ambient_dim(), n - 1);
            assert!(in_n(&smaller), "{v:?} -> {smaller:?}");
        }
    }
}

#[test]
fn reduce_and_expand_are_adjoint() {
    for n in 2..=7 {
        for v in enumerate_n(n).unwrap() {
            let (label, smaller) = subspace_reduce(&v).unwrap();
            assert_eq!(
                subspace_expand(&smaller, label.case).unwrap(),
                vec![v.clone()]
            );
        }
        for smaller in enumerate_n(n - 1).unwrap() {
            for case in 1..=7 {
                for up in subspace_expand(&smaller, case).unwrap() {
                    let (label, back) = subspace_reduce(&up).unwrap();
                    assert_eq!((label.case, &back), (case, &smaller));
                }
            }
        }
    }
}

#[test]
fn subcases_only_in_case_seven() {
    for n in 2..=8 {
        for v in enumerate_n(n).unwrap() {
            let label = classify_subspace(&v).unwrap();
            assert!(label.subcase.is_none() || label.case == 7);
        }
    }
}
