//! Constructive witnesses `α` with `θ + y⁻¹α ∈ Q₊` and a lower bound on
//! `(ρ, α − y⁻¹α)`, plus the long-root witness for the B and D families.
//!
//! Each family uses an anchor root, a lattice the witness must lie in, and a
//! threshold. The rules live in [`witness_rule`].

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{self, frac, q, Vector, Q};
use crate::rootdata::{derived, FamilySpec, RootSystem};
use crate::weyl::{self, Factorization, WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub value: Q,
    pub strict: bool,
}

impl Threshold {
    fn ge(value: Q) -> Self {
        Threshold { value, strict: false }
    }

    fn gt(value: Q) -> Self {
        Threshold { value, strict: true }
    }

    pub fn holds(&self, x: Q) -> bool {
        if self.strict {
            x > self.value
        } else {
            x >= self.value
        }
    }
}

/// Which Weyl elements a rule covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Every `y ≠ 1`.
    NonIdentity,
    /// `y ∉ W₂`.
    OutsideW2,
    /// `y ∉ W₁`.
    OutsideW1,
    /// `y ∈ W′₁ ∖ {1}`.
    StabilizerNonIdentity,
}

#[derive(Debug, Clone)]
pub struct WitnessRule {
    pub domain: Domain,
    pub anchor: Vector,
    /// The witness must be a nonnegative integer combination of these.
    pub lattice: Vec<Vector>,
    /// Threshold when `y⁻¹·anchor` is negative.
    pub negative_case: Threshold,
    /// Threshold otherwise.
    pub positive_case: Threshold,
}

pub fn witness_rule(rs: &RootSystem) -> WitnessRule {
    let h = rs.h_dual;
    let simple = |lo: usize, hi: usize| rs.simple_roots[lo..hi].to_vec();
    let rank = rs.rank();
    match rs.family {
        FamilySpec::SlSuper { n, m } => {
            let n = n as usize;
            let t = Threshold::ge(q(n as i64 - m as i64));
            WitnessRule {
                domain: Domain::OutsideW2,
                anchor: rs.derived(derived::THETA_1).unwrap().clone(),
                lattice: simple(0, n - 1),
                negative_case: t,
                positive_case: t,
            }
        }
        FamilySpec::OspC { n } => {
            let t = Threshold::gt(q(n as i64));
            WitnessRule {
                domain: Domain::NonIdentity,
                anchor: rs.derived(derived::THETA_0).unwrap().clone(),
                lattice: simple(1, rank),
                negative_case: t,
                positive_case: t,
            }
        }
        FamilySpec::OspB { m: 0, n } => WitnessRule {
            domain: Domain::NonIdentity,
            anchor: rs.theta.clone(),
            lattice: rs.simple_roots.clone(),
            negative_case: Threshold::ge(q(n as i64)),
            positive_case: Threshold::gt(q(n as i64) + frac(1, 2)),
        },
        FamilySpec::OspB { m, n } | FamilySpec::OspD { m, n } if m > n => WitnessRule {
            domain: Domain::OutsideW1,
            anchor: rs.derived(derived::THETA_PRIME).unwrap().clone(),
            lattice: simple(n as usize, rank),
            negative_case: Threshold::gt(h),
            positive_case: Threshold::gt(h),
        },
        FamilySpec::OspB { n, .. } | FamilySpec::OspD { n, .. } => {
            let mut lattice = simple(0, n as usize - 1);
            lattice.push(rs.derived(derived::ALPHA_PRIME).unwrap().clone());
            WitnessRule {
                domain: Domain::StabilizerNonIdentity,
                anchor: rs.theta.clone(),
                lattice,
                negative_case: Threshold::gt(h),
                positive_case: Threshold::gt(h),
            }
        }
        FamilySpec::F4 | FamilySpec::G3 => WitnessRule {
            domain: Domain::OutsideW1,
            anchor: rs.derived(derived::THETA_PRIME).unwrap().clone(),
            lattice: simple(1, rank),
            negative_case: Threshold::gt(h),
            positive_case: Threshold::gt(h),
        },
        _ => WitnessRule {
            domain: Domain::NonIdentity,
            anchor: rs.theta.clone(),
            lattice: rs.simple_roots.clone(),
            negative_case: Threshold::ge(h),
            positive_case: Threshold::gt(h),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `y⁻¹·anchor` negative: α = anchor.
    Negative,
    /// `y⁻¹·anchor` positive and moved: α = k·anchor.
    Moved,
    /// `y⁻¹·anchor = anchor`: α = k·anchor + m·b_j.
    Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub alpha: Vector,
    /// `(ρ, α − y⁻¹α)`.
    pub bound: Q,
    pub strict: bool,
    pub threshold: Q,
    pub branch: Branch,
}

/// Precomputed group data for repeated witness queries on one algebra.
#[derive(Debug, Clone)]
pub struct WitnessContext<'a> {
    pub rs: &'a RootSystem,
    pub weyl: WeylGroup,
    pub factors: Factorization,
    pub rule: WitnessRule,
}

impl<'a> WitnessContext<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        let weyl = weyl::generate_weyl(rs)?;
        let factors = weyl::factorize(rs, &weyl)?;
        Ok(WitnessContext { rs, weyl, factors, rule: witness_rule(rs) })
    }

    pub fn in_domain(&self, y: &WeylElement) -> bool {
        match self.rule.domain {
            Domain::NonIdentity => !y.is_identity(),
            Domain::OutsideW2 => !self.factors.w2.contains(y),
            Domain::OutsideW1 => !self.factors.w1.contains(y),
            Domain::StabilizerNonIdentity => {
                !y.is_identity() && self.factors.w1_prime.as_ref().is_some_and(|g| g.contains(y))
            }
        }
    }

    fn in_lattice(&self, v: &[Q]) -> bool {
        let basis = &self.rule.lattice;
        let k = basis.len();
        let gram: Vec<Vec<Q>> = (0..k).map(|i| (0..k).map(|j| self.rs.pair(&basis[i], &basis[j])).collect()).collect();
        let rhs: Vec<Q> = basis.iter().map(|b| self.rs.pair(v, b)).collect();
        linalg::solve(&gram, &rhs)
            .is_some_and(|c| c.iter().all(linalg::is_nonneg_integer) && linalg::combine(&c, basis, self.rs.dim) == v)
    }

    pub fn find_witness(&self, y: &WeylElement) -> Result<WitnessResult> {
        let rs = self.rs;
        if !self.in_domain(y) {
            return Err(Error::Precondition(format!(
                "{}: y = {:?} lies outside the witness domain {:?}",
                rs.family, y.word, self.rule.domain
            )));
        }
        let anchor = &self.rule.anchor;
        let back = y.apply_inverse(anchor);
        let gap = |v: &[Q]| rs.pair(&rs.rho, &linalg::sub(v, &y.apply_inverse(v)));

        let (alpha, branch, threshold) = if rs.is_negative_root(&back) {
            (anchor.clone(), Branch::Negative, self.rule.negative_case)
        } else if back != *anchor {
            let t = self.rule.positive_case;
            let step = gap(anchor);
            if !step.is_positive() {
                return Err(Error::Internal(format!("{}: (ρ, A − y⁻¹A) = {step} ≤ 0", rs.family)));
            }
            let k = linalg::least_multiple_reaching(step, t.value, t.strict).max(1);
            (linalg::scale(q(k), anchor), Branch::Moved, t)
        } else {
            let t = self.rule.positive_case;
            let (b, step) =
                self.rule.lattice.iter().map(|b| (b, gap(b))).find(|(_, s)| s.is_positive()).ok_or_else(|| {
                    Error::Internal(format!("{}: y ≠ 1 fixes the anchor and every lattice root", rs.family))
                })?;
            let m = linalg::least_multiple_reaching(step, t.value, t.strict).max(1);
            let mb = linalg::scale(q(m), b);
            let tail = linalg::add(&rs.theta, &y.apply_inverse(&mb));
            let tail_c = rs.pi_coords(&tail).expect("roots lie in span Π");
            let anchor_c = rs.pi_coords(anchor).expect("roots lie in span Π");
            // smallest k with tail + k·anchor ≥ 0 coefficientwise
            let mut k = 0i64;
            for (t, a) in tail_c.iter().zip(&anchor_c) {
                if t.is_negative() {
                    if !a.is_positive() {
                        return Err(Error::Internal(format!(
                            "{}: anchor cannot absorb a negative coefficient",
                            rs.family
                        )));
                    }
                    k = k.max((-*t / a).ceil().to_integer());
                }
            }
            (linalg::add(&linalg::scale(q(k), anchor), &mb), Branch::Fixed, t)
        };

        let bound = gap(&alpha);
        let result = WitnessResult { bound, strict: threshold.strict, threshold: threshold.value, branch, alpha };
        self.verify(y, &result)?;
        Ok(result)
    }

    /// Rechecks lattice membership, `θ + y⁻¹α ∈ Q₊` and the threshold.
    pub fn verify(&self, y: &WeylElement, w: &WitnessResult) -> Result<()> {
        let rs = self.rs;
        let fail = |what: &str| Err(Error::Internal(format!("{}: witness {what}", rs.family)));
        if !self.in_lattice(&w.alpha) {
            return fail("is outside its lattice");
        }
        if !rs.in_positive_lattice(&linalg::add(&rs.theta, &y.apply_inverse(&w.alpha))) {
            return fail("violates θ + y⁻¹α ∈ Q₊");
        }
        if w.bound != rs.pair(&rs.rho, &linalg::sub(&w.alpha, &y.apply_inverse(&w.alpha))) {
            return fail("bound does not match (ρ, α − y⁻¹α)");
        }
        if !(Threshold { value: w.threshold, strict: w.strict }).holds(w.bound) {
            return fail("misses its threshold");
        }
        Ok(())
    }

    /// Positive long roots of the sp(2n) factor: the W₁-orbit of α′_n within Δ₊.
    pub fn long_roots(&self) -> Result<Vec<Vector>> {
        let a = self.long_root_anchor()?;
        let mut out: Vec<Vector> = Vec::new();
        for w in self.factors.w1.iter() {
            let img = w.apply(a);
            if self.rs.is_positive_root(&img) && !out.contains(&img) {
                out.push(img);
            }
        }
        out.sort_by_key(|v| std::cmp::Reverse(self.rs.root(v).unwrap().height()));
        Ok(out)
    }

    fn long_root_anchor(&self) -> Result<&Vector> {
        match self.rs.family {
            FamilySpec::OspB { m, .. } | FamilySpec::OspD { m, .. } if m > 0 => {
                Ok(self.rs.derived(derived::ALPHA_PRIME).unwrap())
            }
            f => Err(Error::Precondition(format!("{f}: long-root witness needs a B(m,n) or D(m,n) family"))),
        }
    }

    /// A positive long root α of the sp(2n) factor with `y⁻¹α` negative.
    pub fn find_long_root_witness(&self, y: &WeylElement) -> Result<LongRootWitness> {
        let rs = self.rs;
        let longs = self.long_roots()?;
        if !self.factors.w1.contains(y) {
            return Err(Error::Precondition(format!("{}: y ∉ W₁", rs.family)));
        }
        if self.factors.w1_prime.as_ref().is_some_and(|g| g.contains(y)) {
            return Err(Error::Precondition("stabilizer element has no witness".into()));
        }
        let alpha = longs
            .iter()
            .find(|a| !longs.contains(&y.apply_inverse(a)))
            .ok_or_else(|| Error::Internal(format!("{}: y ∉ W′₁ stabilizes the long roots", rs.family)))?
            .clone();
        let image = y.apply_inverse(&alpha);
        if !(rs.is_negative_root(&image) && longs.contains(&linalg::neg(&image))) {
            return Err(Error::Internal(format!("{}: y⁻¹α is not a negative long root", rs.family)));
        }
        let rho_gap = rs.pair(&rs.rho, &linalg::sub(&alpha, &image));
        if let FamilySpec::OspB { m, n } = rs.family {
            if m > n && !is_even_integer(rho_gap) {
                return Err(Error::Internal(format!("{}: (ρ, α − y⁻¹α) = {rho_gap} is not even", rs.family)));
            }
        }
        Ok(LongRootWitness { alpha, image, rho_gap })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongRootWitness {
    pub alpha: Vector,
    /// `y⁻¹α`, a negative long root.
    pub image: Vector,
    /// `(ρ, α − y⁻¹α)`.
    pub rho_gap: Q,
}

pub fn is_even_integer(x: Q) -> bool {
    x.is_integer() && x.to_integer() % 2 == 0
}

pub fn is_odd_integer(x: Q) -> bool {
    x.is_integer() && x.to_integer() % 2 != 0
}

pub fn find_witness(rs: &RootSystem, y: &WeylElement) -> Result<WitnessResult> {
    WitnessContext::new(rs)?.find_witness(y)
}

pub fn find_long_root_witness(rs: &RootSystem, y: &WeylElement) -> Result<LongRootWitness> {
    WitnessContext::new(rs)?.find_long_root_witness(y)
}

/// Whether the family carries the long-root witness at all.
pub fn has_long_root_witness(rs: &RootSystem) -> bool {
    matches!(rs.family, FamilySpec::OspB { m, .. } | FamilySpec::OspD { m, .. } if m > 0)
}

/// Outcome of running both witness procedures over a whole Weyl group.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WitnessSweep {
    pub checked: usize,
    pub out_of_domain: usize,
    pub long_root_checked: usize,
    pub long_root_rejected: usize,
    pub failures: Vec<String>,
}

/// Runs [`WitnessContext::find_witness`] on every element and the long-root
/// witness on every element of W₁, checking it succeeds exactly off W′₁.
pub fn sweep(ctx: &WitnessContext) -> WitnessSweep {
    let mut s = WitnessSweep::default();
    for y in ctx.weyl.iter() {
        if y.is_identity() {
            continue;
        }
        if !ctx.in_domain(y) {
            s.out_of_domain += 1;
            if !matches!(ctx.find_witness(y), Err(Error::Precondition(_))) {
                s.failures.push(format!("y = {:?}: expected precondition error", y.word));
            }
            continue;
        }
        s.checked += 1;
        if let Err(e) = ctx.find_witness(y) {
            s.failures.push(format!("y = {:?}: {e}", y.word));
        }
    }
    if has_long_root_witness(ctx.rs) {
        let prime = ctx.factors.w1_prime.as_ref();
        for y in ctx.factors.w1.iter() {
            let stabilizer = prime.is_some_and(|g| g.contains(y));
            match (stabilizer, ctx.find_long_root_witness(y)) {
                (false, Ok(_)) => s.long_root_checked += 1,
                (true, Err(Error::Precondition(_))) => s.long_root_rejected += 1,
                (_, r) => s.failures.push(format!("long-root y = {:?}: {r:?}", y.word)),
            }
        }
    }
    if s.failures.is_empty() && s.checked == 0 && ctx.weyl.order() > 1 && ctx.rule.domain == Domain::NonIdentity {
        s.failures.push("no element checked".into());
    }
    s
}
