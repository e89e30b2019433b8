use polar_words::gf2::{Gf2Subspace, Gf2Vector};
use polar_words::language::g;
use polar_words::polar::{build_geometry, symplectic_form, ExportFormat};
use proptest::prelude::*;

/// ω computed coordinate by coordinate from the text form.
fn omega(u: &Gf2Vector, v: &Gf2Vector, n: usize) -> bool {
    let (a, b): (Vec<u8>, Vec<u8>) = (
        u.to_string().bytes().map(|c| c - b'0').collect(),
        v.to_string().bytes().map(|c| c - b'0').collect(),
    );
    (0..n)
        .map(|i| a[i] * b[n + i] + a[n + i] * b[i])
        .sum::<u8>()
        % 2
        == 1
}

/// Rank over GF(2) by dense elimination on byte rows.
fn dense_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn counts_and_flag_identity() {
    for n in 1..=4 {
        let geo = build_geometry(n).unwrap();
        let product: usize = (1..=n).map(|i| (1usize << i) + 1).product();
        assert_eq!(geo.points().len(), product);
        assert_eq!(geo.points().len() * ((1 << n) - 1), 3 * geo.lines().len());
        assert_eq!(geo.udim() as u128, g(n));
    }
}

#[test]
fn every_member_pair_is_orthogonal() {
    for n in 1..=3 {
        let geo = build_geometry(n).unwrap();
        for s in geo.points().iter().chain(geo.lines()) {
            let members: Vec<Gf2Vector> = s.members().collect();
            for u in &members {
                for v in &members {
                    assert!(!omega(u, v, n), "{s:?}");
                }
            }
        }
    }
}

#[test]
fn incidence_is_containment() {
    for n in 1..=3 {
        let geo = build_geometry(n).unwrap();
        for (l, pts) in geo.incidence().iter().enumerate() {
            let line = &geo.lines()[l];
            let containing: Vec<usize> = (0..geo.points().len())
                .filter(|&p| line.is_subspace_of(&geo.points()[p]))
                .collect();
            assert_eq!(containing, pts.to_vec());
        }
    }
}

#[test]
fn udim_matches_dense_oracle() {
    for n in 1..=3 {
        let geo = build_geometry(n).unwrap();
        let width = geo.points().len();
        let rows: Vec<Vec<u8>> = geo
            .incidence()
            .iter()
            .map(|pts| (0..width).map(|p| u8::from(pts.contains(&p))).collect())
            .collect();
        assert_eq!(geo.udim(), width - dense_rank(rows), "n = {n}");
    }
}

#[test]
fn quotient_basis_certificates() {
    for (n, size, rank) in [(1, 2, 3), (2, 5, 15), (3, 15, 135)] {
        let q = build_geometry(n).unwrap().quotient_basis();
        assert_eq!(q.points.len(), size);
        assert_eq!(q.certificate_rank, rank);
    }
}

#[test]
fn strata_facts_hold_everywhere() {
    for n in 2..=3 {
        let geo = build_geometry(n).unwrap();
        for x0 in 0..geo.points().len() {
            let r = geo.strata(x0).unwrap();
            assert_eq!(r.strata[0], vec![x0]);
            assert_eq!(
                r.strata.iter().map(Vec::len).sum::<usize>(),
                geo.points().len()
            );
            assert!(r.all_hold(), "n = {n}, x0 = {x0}");
        }
    }
    let r3 = build_geometry(3).unwrap().strata(17).unwrap();
    assert_eq!(r3.components[1].len(), 7);
}

#[test]
fn rank_two_configuration() {
    let geo = build_geometry(2).unwrap();
    let a = Gf2Subspace::from_rows(4, &["0001", "0010"]).unwrap();
    let a = geo.point_index(&a).unwrap();
    assert_eq!(geo.neighbors(a).len(), 6);
    let json = geo.export(ExportFormat::Json);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["points"].as_array().unwrap().len(), 15);
    assert_eq!(doc["lines"].as_array().unwrap().len(), 15);
    assert_eq!(doc["n"], 2);
    assert!(json.starts_with("{\"lines\":"));
}

proptest! {
    #[test]
    fn form_is_alternating_bilinear(n in 1usize..=4, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let m = (1u32 << (2 * n)) - 1;
        let v = |x: u32| Gf2Vector::new(2 * n, x & m).unwrap();
        let (u, w, z) = (v(a), v(b), v(c));
        let f = |x: &Gf2Vector, y: &Gf2Vector| symplectic_form(x, y, n).unwrap();
        prop_assert_eq!(f(&u, &w), omega(&u, &w, n));
        prop_assert!(!f(&u, &u));
        prop_assert_eq!(f(&u, &w), f(&w, &u));
        prop_assert_eq!(f(&u.add(&w).unwrap(), &z), f(&u, &z) ^ f(&w, &z));
    }

    #[test]
    fn form_is_non_degenerate(n in 1usize..=4, a in 1u32..256) {
        let m = (1u32 << (2 * n)) - 1;
        prop_assume!(a & m != 0);
        let u = Gf2Vector::new(2 * n, a & m).unwrap();
        let partner = (0..=m).any(|b| symplectic_form(&u, &Gf2Vector::new(2 * n, b).unwrap(), n).unwrap());
        prop_assert!(partner);
    }
}
