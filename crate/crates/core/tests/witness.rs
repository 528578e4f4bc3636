mod common;

use common::{roster, roster_and_extras, rs};
use superaffine_core::linalg::{self, q};
use superaffine_core::rootdata::derived;
use superaffine_core::witness::{self, is_odd_integer, Branch, Domain, WitnessContext};
use superaffine_core::{generate_weyl, Error, RootSystem, WeylElement};

fn reflection_in(r: &RootSystem, alpha: &[superaffine_core::Q]) -> WeylElement {
    let m = superaffine_core::weyl::reflection_matrix(r, alpha).unwrap();
    let w = generate_weyl(r).unwrap();
    let y = w.iter().find(|y| y.matrix == m).unwrap().clone();
    y
}

#[test]
fn simple_lie_negative_branch() {
    let r = rs("sl(2)");
    let y = reflection_in(&r, &r.theta);
    let w = witness::find_witness(&r, &y).unwrap();
    assert_eq!(w.alpha, r.theta);
    assert_eq!(w.bound, q(2));
    assert_eq!(w.bound, r.h_dual);
    assert!(!w.strict);
    assert_eq!(w.branch, Branch::Negative);
}

#[test]
fn type_one_anchor_is_theta_one() {
    let r = rs("sl(2|1)");
    let y = reflection_in(&r, &r.simple_roots[0]);
    let w = witness::find_witness(&r, &y).unwrap();
    assert_eq!(&w.alpha, r.derived(derived::THETA_1).unwrap());
    assert_eq!(w.alpha, r.simple_roots[0]);
    assert_eq!(w.bound, q(2));
    assert_eq!(w.threshold, q(1));
    assert!(!w.strict);
}

#[test]
fn osp_1_2_negative_branch_meets_n() {
    let r = rs("osp(1|2)");
    let y = reflection_in(&r, &r.theta);
    let w = witness::find_witness(&r, &y).unwrap();
    assert_eq!(w.alpha, r.theta);
    assert_eq!(w.branch, Branch::Negative);
    assert_eq!(w.bound, q(2) * r.pair(&r.rho, &r.theta));
    assert_eq!(w.bound, q(1));
    assert_eq!((w.threshold, w.strict), (q(1), false));
}

#[test]
fn identity_is_outside_every_domain() {
    for r in roster() {
        let ctx = WitnessContext::new(&r).unwrap();
        let id = WeylElement::identity(r.dim);
        assert!(matches!(ctx.find_witness(&id), Err(Error::Precondition(_))), "{}", r.family);
    }
}

#[test]
fn sweeps_verify_every_element_in_domain() {
    for r in roster_and_extras() {
        let ctx = WitnessContext::new(&r).unwrap();
        let s = witness::sweep(&ctx);
        assert!(s.failures.is_empty(), "{}: {:?}", r.family, s.failures);
        assert_eq!(s.checked + s.out_of_domain + 1, ctx.weyl.order(), "{}", r.family);
        match ctx.rule.domain {
            Domain::NonIdentity => assert_eq!(s.out_of_domain, 0),
            Domain::OutsideW2 => assert_eq!(s.out_of_domain + 1, ctx.factors.w2.order()),
            Domain::OutsideW1 => assert_eq!(s.out_of_domain + 1, ctx.factors.w1.order()),
            Domain::StabilizerNonIdentity => {
                assert_eq!(s.checked + 1, ctx.factors.w1_prime.as_ref().unwrap().order())
            }
        }
        if witness::has_long_root_witness(&r) {
            let prime = ctx.factors.w1_prime.as_ref().unwrap().order();
            assert_eq!(s.long_root_rejected, prime, "{}", r.family);
            assert_eq!(s.long_root_checked, ctx.factors.w1.order() - prime, "{}", r.family);
        }
    }
}

#[test]
fn long_root_sweep_counts() {
    let counts = |name: &str| {
        let r = rs(name);
        let s = witness::sweep(&WitnessContext::new(&r).unwrap());
        (s.long_root_checked, s.long_root_rejected)
    };
    assert_eq!(counts("osp(3|2)"), (1, 1));
    assert_eq!(counts("osp(4|4)"), (6, 2));
    assert_eq!(counts("osp(4|6)"), (42, 6));
}

#[test]
fn long_root_reflections_negate_their_root() {
    for name in ["osp(3|2)", "osp(4|4)", "osp(5|4)"] {
        let r = rs(name);
        let ap = r.derived(derived::ALPHA_PRIME).unwrap().clone();
        let y = reflection_in(&r, &ap);
        let w = witness::find_long_root_witness(&r, &y).unwrap();
        assert_eq!(w.alpha, ap, "{name}");
        assert_eq!(w.image, linalg::neg(&ap));
    }
}

#[test]
fn long_root_witness_rejects_the_stabilizer() {
    let r = rs("osp(5|4)");
    let ctx = WitnessContext::new(&r).unwrap();
    let y = reflection_in(&r, &r.simple_roots[0]);
    assert!(ctx.factors.w1_prime.as_ref().unwrap().contains(&y));
    assert_eq!(ctx.find_long_root_witness(&y), Err(Error::Precondition("stabilizer element has no witness".into())));
    let outside = reflection_in(&r, r.simple_roots.last().unwrap());
    assert!(matches!(ctx.find_long_root_witness(&outside), Err(Error::Precondition(_))));
    let sl = rs("sl(3|1)");
    let y = reflection_in(&sl, &sl.simple_roots[0]);
    assert!(matches!(witness::find_long_root_witness(&sl, &y), Err(Error::Precondition(_))));
}

#[test]
fn rho_is_odd_on_long_roots_when_m_exceeds_n() {
    for name in ["osp(5|2)", "osp(7|2)", "osp(7|4)"] {
        let r = rs(name);
        let ctx = WitnessContext::new(&r).unwrap();
        let longs = ctx.long_roots().unwrap();
        assert!(!longs.is_empty());
        for g in &longs {
            assert!(is_odd_integer(r.pair(&r.rho, g)), "{name}: (ρ, γ) = {}", r.pair(&r.rho, g));
            assert!(is_odd_integer(r.pair(&r.rho, &linalg::neg(g))));
        }
        // the orbit is exactly the long roots of the symplectic factor
        let n = match r.family {
            superaffine_core::FamilySpec::OspB { n, .. } => n as usize,
            _ => unreachable!(),
        };
        assert_eq!(longs.len(), n);
    }
}
