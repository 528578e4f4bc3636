use superaffine_core::linalg::{self, frac, q};
use superaffine_core::rootdata::{derived, desk_roster};
use superaffine_core::{build_root_system, parse_algebra, FamilySpec, Parity, RootSystem, Q};

mod common;

use common::published::{f4_cartan, g3_cartan, osp_c_cartan, published, sl_cartan};
use common::rs;

fn extended_roster() -> Vec<FamilySpec> {
    let mut v = desk_roster();
    for extra in ["osp(7|2)", "osp(3|4)", "osp(1|6)", "osp(6|4)", "osp(4|2)", "sl(4|1)", "osp(2|6)", "sl(4)"] {
        v.push(parse_algebra(extra).unwrap());
    }
    v
}

#[test]
fn published_constants_match() {
    for spec in extended_roster() {
        let r = build_root_system(spec).unwrap();
        let p = published(spec);
        assert_eq!(r.h_dual, p.h_dual, "{spec} h∨");
        if spec != (FamilySpec::OspD { m: 2, n: 1 }) {
            assert_eq!(r.lacety, p.lacety, "{spec} r∨");
        }
        assert_eq!(r.rho_pairings(), p.rho, "{spec} ρ");
        assert_eq!(r.marks, p.marks, "{spec} marks");
    }
}

#[test]
fn structural_identities() {
    for spec in extended_roster() {
        let r = build_root_system(spec).unwrap();
        for (i, a) in r.simple_roots.iter().enumerate() {
            assert_eq!(r.pair(&r.rho, a), frac(1, 2) * r.gram[i][i], "{spec}");
        }
        let h = r.pair(&r.rho, &r.theta) + frac(1, 2) * r.pair(&r.theta, &r.theta);
        assert_eq!(h, r.h_dual);
        assert!(r.is_positive_root(&r.theta));
        for a in &r.simple_roots {
            assert!(!r.is_root(&linalg::add(&r.theta, a)));
        }
        assert_eq!(r.root_counts(), spec.expected_root_counts(), "{spec}");
        assert_eq!(r.gram, linalg::transpose(&r.gram));
        // positive roots expand with nonnegative integer coefficients
        for root in r.positive_roots() {
            assert!(root.coeffs.iter().all(linalg::is_nonneg_integer));
        }
        // even simple system spans the positive even roots over Z≥0
        let m = r.even_simple.len();
        for root in r.even_roots().filter(|x| x.positive) {
            let gram: Vec<Vec<Q>> =
                (0..m).map(|i| (0..m).map(|j| r.pair(&r.even_simple[i], &r.even_simple[j])).collect()).collect();
            let rhs: Vec<Q> = r.even_simple.iter().map(|g| r.pair(&root.vector, g)).collect();
            let c = linalg::solve(&gram, &rhs).unwrap();
            assert!(c.iter().all(linalg::is_nonneg_integer), "{spec}: {:?}", root.vector);
            assert_eq!(linalg::combine(&c, &r.even_simple, r.dim), root.vector);
        }
    }
}

#[test]
fn cartan_matrices_match_displays() {
    for (n, m) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        assert_eq!(rs(&format!("sl({n}|{m})")).cartan_matrix(), sl_cartan(n, m), "sl({n}|{m})");
    }
    for n in [2, 3] {
        assert_eq!(rs(&format!("osp(2|{})", 2 * n)).cartan_matrix(), osp_c_cartan(n));
    }
    assert_eq!(rs("F(4)").cartan_matrix(), f4_cartan());
    assert_eq!(rs("G(3)").cartan_matrix(), g3_cartan());
}

#[test]
fn normalization_long_roots_have_length_two() {
    for spec in extended_roster() {
        let r = build_root_system(spec).unwrap();
        let max = r.roots.iter().map(|x| r.pair(&x.vector, &x.vector)).max().unwrap();
        assert_eq!(max, q(2), "{spec}");
        assert!(r.h_dual >= q(0));
    }
}

#[test]
fn parities_of_simple_roots() {
    for spec in desk_roster() {
        let r = build_root_system(spec).unwrap();
        let odd: Vec<usize> = (0..r.rank()).filter(|&i| r.parity[i] == Parity::Odd).collect();
        match spec.odd_node() {
            Some(k) => assert_eq!(odd, vec![k], "{spec}"),
            None => assert!(odd.is_empty()),
        }
    }
}

#[test]
fn derived_roots_follow_published_expansions() {
    let pi = |r: &RootSystem, name: &str| -> Vec<i64> {
        let v = r.derived(name).unwrap();
        r.pi_coords(v).unwrap().iter().map(|c| c.to_integer()).collect()
    };
    assert_eq!(pi(&rs("sl(3|2)"), derived::THETA_1), vec![1, 1, 0, 0]);
    assert_eq!(pi(&rs("osp(2|4)"), derived::THETA_0), vec![0, 2, 1]);
    assert_eq!(pi(&rs("osp(5|2)"), derived::ALPHA_PRIME), vec![2, 2, 2]);
    assert_eq!(pi(&rs("osp(5|2)"), derived::THETA_PRIME), vec![0, 1, 2]);
    assert_eq!(pi(&rs("osp(6|2)"), derived::THETA_PRIME), vec![0, 1, 1, 1]);
    assert_eq!(pi(&rs("osp(4|4)"), derived::ALPHA_PRIME), vec![0, 2, 1, 1]);
    assert_eq!(pi(&rs("F(4)"), derived::THETA_PRIME), vec![0, 2, 2, 1]);
    assert_eq!(pi(&rs("G(3)"), derived::THETA_PRIME), vec![0, 3, 2]);
    // α'_n is the long simple root of the sp(2n) factor
    for name in ["osp(3|2)", "osp(5|2)", "osp(4|4)", "osp(6|2)", "osp(3|4)"] {
        let r = rs(name);
        let a = r.derived(derived::ALPHA_PRIME).unwrap();
        assert!(r.even_simple.contains(a), "{name}");
        assert_eq!(r.pair(a, a), r.pair(&r.theta, &r.theta));
    }
}

#[test]
fn theta_is_highest_root_of_sp_factor() {
    // B(0,n): Δ⁰ is the sp(2n) system and θ = 2δ_1 its highest root
    let r = rs("osp(1|4)");
    let even_top = r.even_roots().filter(|x| x.positive).max_by_key(|x| x.height()).unwrap();
    assert_eq!(even_top.vector, r.theta);
}
