//! Exact root data for the supported Lie superalgebras and simple Lie algebras.
//!
//! Each family is realized in fixed ε–δ coordinates with an explicit ambient
//! bilinear form. The root lists are written down directly; everything else
//! (Π-expansions, θ, ρ, h∨, r∨, the even simple system) is derived from them
//! and checked against the defining identities during construction.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, frac, q, Matrix, Vector, Q};

/// Which algebra to build. Parameters follow the usual Kac labels except that
/// `SlSuper { n, m }` is `sl(n|m)` and `SimpleA(r)` has rank `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `sl(n|m)`, n > m > 0.
    SlSuper {
        n: u32,
        m: u32,
    },
    /// `osp(2|2n)`, type C(n+1).
    OspC {
        n: u32,
    },
    /// `osp(2m+1|2n)`, type B(m,n); m = 0 gives `osp(1|2n)`.
    OspB {
        m: u32,
        n: u32,
    },
    /// `osp(2m|2n)`, type D(m,n), m ≥ 2.
    OspD {
        m: u32,
        n: u32,
    },
    F4,
    G3,
    SimpleA(u32),
    SimpleB2,
    SimpleG2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    SimpleLie,
    TypeI,
    TypeII,
}

const GRAMMAR: &str = "sl(n|m) with n>m>0, osp(1|2n), osp(2|2n), osp(2m+1|2n), osp(2m|2n) with m>=2, \
F(4), G(3), sl(n), sp(4), g2";

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilySpec::SlSuper { n, m } if n == m => {
                bad(format!("sl({n}|{m}): h∨ = 0: no boundary admissible levels"))
            }
            FamilySpec::SlSuper { n, m } if m == 0 || n < m => bad(format!("sl({n}|{m}) requires n > m > 0")),
            FamilySpec::OspC { n: 0 } => bad("osp(2|2n) requires n ≥ 1".into()),
            FamilySpec::OspB { n: 0, .. } => bad("osp(2m+1|2n) requires n ≥ 1".into()),
            FamilySpec::OspD { m, n } if m < 2 || n == 0 => {
                bad(format!("osp(2m|2n) requires m ≥ 2 and n ≥ 1, got m = {m}, n = {n}"))
            }
            FamilySpec::SimpleA(0) => bad("sl(n) requires n ≥ 2".into()),
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::SlSuper { .. } | FamilySpec::OspC { .. } => FamilyKind::TypeI,
            FamilySpec::OspB { .. } | FamilySpec::OspD { .. } | FamilySpec::F4 | FamilySpec::G3 => FamilyKind::TypeII,
            _ => FamilyKind::SimpleLie,
        }
    }

    pub fn is_super(&self) -> bool {
        self.kind() != FamilyKind::SimpleLie
    }

    /// 0-based index of the odd simple root in the distinguished system.
    pub fn odd_node(&self) -> Option<usize> {
        match *self {
            FamilySpec::SlSuper { n, .. } => Some(n as usize - 1),
            FamilySpec::OspC { .. } | FamilySpec::F4 | FamilySpec::G3 => Some(0),
            FamilySpec::OspB { n, .. } | FamilySpec::OspD { n, .. } => Some(n as usize - 1),
            _ => None,
        }
    }

    /// Closed-form (|Δ⁰|, |Δ¹|).
    pub fn expected_root_counts(&self) -> (usize, usize) {
        match *self {
            FamilySpec::SlSuper { n, m } => {
                let (n, m) = (n as usize, m as usize);
                (n * (n - 1) + m * (m - 1), 2 * n * m)
            }
            FamilySpec::OspC { n } => {
                let n = n as usize;
                (2 * n * n, 4 * n)
            }
            FamilySpec::OspB { m, n } => {
                let (m, n) = (m as usize, n as usize);
                (2 * n * n + 2 * m * m, 4 * n * m + 2 * n)
            }
            FamilySpec::OspD { m, n } => {
                let (m, n) = (m as usize, n as usize);
                (2 * n * n + 2 * m * (m - 1), 4 * n * m)
            }
            FamilySpec::F4 => (20, 16),
            FamilySpec::G3 => (14, 14),
            FamilySpec::SimpleA(r) => ((r * (r + 1)) as usize, 0),
            FamilySpec::SimpleB2 => (8, 0),
            FamilySpec::SimpleG2 => (12, 0),
        }
    }

    /// Order of the Weyl group of the even part, as a product of classical orders.
    pub fn expected_weyl_order(&self) -> u64 {
        fn fact(k: u32) -> u64 {
            (1..=k as u64).product()
        }
        let a = |rank: u32| fact(rank + 1);
        let bc = |rank: u32| (1u64 << rank) * fact(rank);
        let d = |rank: u32| (1u64 << (rank - 1)) * fact(rank);
        match *self {
            FamilySpec::SlSuper { n, m } => fact(n) * fact(m),
            FamilySpec::OspC { n } => bc(n),
            FamilySpec::OspB { m, n } => bc(n) * bc(m),
            FamilySpec::OspD { m, n } => bc(n) * d(m),
            FamilySpec::F4 => 2 * bc(3),
            FamilySpec::G3 => 2 * 12,
            FamilySpec::SimpleA(r) => a(r),
            FamilySpec::SimpleB2 => bc(2),
            FamilySpec::SimpleG2 => 12,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::SlSuper { n, m } => write!(f, "sl({n}|{m})"),
            FamilySpec::OspC { n } => write!(f, "osp(2|{})", 2 * n),
            FamilySpec::OspB { m, n } => write!(f, "osp({}|{})", 2 * m + 1, 2 * n),
            FamilySpec::OspD { m, n } => write!(f, "osp({}|{})", 2 * m, 2 * n),
            FamilySpec::F4 => write!(f, "F(4)"),
            FamilySpec::G3 => write!(f, "G(3)"),
            FamilySpec::SimpleA(r) => write!(f, "sl({})", r + 1),
            FamilySpec::SimpleB2 => write!(f, "sp(4)"),
            FamilySpec::SimpleG2 => write!(f, "g2"),
        }
    }
}

/// Parses an algebra name such as `"sl(3|1)"`, `"osp(5|2)"` or `"F(4)"`.
///
/// Whitespace and letter case are ignored. The result is validated, so
/// `"sl(2|2)"` is rejected here rather than at construction.
pub fn parse_algebra(name: &str) -> Result<FamilySpec> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let parse_err = || Error::Parse { name: name.to_string(), grammar: GRAMMAR };
    let args = |prefix: &str| -> Option<Vec<u32>> {
        let inner = s.strip_prefix(prefix)?.strip_suffix(')')?;
        inner.split('|').map(|p| p.parse().ok()).collect()
    };

    let spec = match s.as_str() {
        "f(4)" => FamilySpec::F4,
        "g(3)" => FamilySpec::G3,
        "g2" | "g(2)" => FamilySpec::SimpleG2,
        "sp(4)" => FamilySpec::SimpleB2,
        _ => {
            if let Some(a) = args("sl(") {
                match *a.as_slice() {
                    [n, m] => FamilySpec::SlSuper { n, m },
                    [n] if n >= 2 => FamilySpec::SimpleA(n - 1),
                    _ => return Err(parse_err()),
                }
            } else if let Some(a) = args("osp(") {
                let &[odd_dim, even_dim] = a.as_slice() else {
                    return Err(parse_err());
                };
                // osp(p|q): p is the orthogonal block, q = 2n the symplectic one.
                if even_dim == 0 || even_dim % 2 != 0 || odd_dim == 0 {
                    return Err(parse_err());
                }
                let n = even_dim / 2;
                match odd_dim {
                    2 => FamilySpec::OspC { n },
                    p if p % 2 == 1 => FamilySpec::OspB { m: (p - 1) / 2, n },
                    p => FamilySpec::OspD { m: p / 2, n },
                }
            } else {
                return Err(parse_err());
            }
        }
    };
    spec.validate()?;
    Ok(spec)
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_algebra(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub vector: Vector,
    pub parity: Parity,
    /// Coefficients in the distinguished simple system Π.
    pub coeffs: Vec<Q>,
    pub positive: bool,
}

impl Root {
    pub fn height(&self) -> Q {
        self.coeffs.iter().sum()
    }
}

/// Immutable root data of one algebra.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: FamilySpec,
    pub dim: usize,
    /// Ambient bilinear form on coordinate vectors (diagonal except for G-types).
    pub form: Matrix,
    pub simple_roots: Vec<Vector>,
    pub parity: Vec<Parity>,
    /// `gram[i][j] = (α_i, α_j)`.
    pub gram: Matrix,
    gram_inv: Matrix,
    pub roots: Vec<Root>,
    index: HashMap<Vector, usize>,
    pub theta: Vector,
    pub marks: Vec<i64>,
    pub rho: Vector,
    pub h_dual: Q,
    pub lacety: i64,
    pub even_simple: Vec<Vector>,
    derived: Vec<(&'static str, Vector)>,
}

/// Names under which derived roots are registered.
pub mod derived {
    /// α'_n for B(m,n), D(m,n): the long simple root of the sp(2n) part.
    pub const ALPHA_PRIME: &str = "alpha'_n";
    /// Highest root of the second even factor (o(2m+1), o(2m), o(7), G2).
    pub const THETA_PRIME: &str = "theta'";
    /// θ − α_1 for osp(2|2n).
    pub const THETA_0: &str = "theta_0";
    /// α_1 + … + α_{n−1} for sl(n|m).
    pub const THETA_1: &str = "theta_1";
}

struct Realization {
    dim: usize,
    form: Matrix,
    simple: Vec<Vector>,
    parity: Vec<Parity>,
    roots: Vec<(Vector, Parity)>,
}

fn diag_form(entries: &[Q]) -> Matrix {
    let n = entries.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { entries[i] } else { Q::zero() }).collect()).collect()
}

/// Collects `±v` for every `v` given.
fn with_negatives(vs: Vec<Vector>, parity: Parity, out: &mut Vec<(Vector, Parity)>) {
    for v in vs {
        out.push((linalg::neg(&v), parity));
        out.push((v, parity));
    }
}

/// `±e_i ± e_j` (i < j) and, if `with_doubles`, `±2e_i`, on the coordinates in `idx`.
fn type_bcd_even(dim: usize, idx: &[usize], with_doubles: bool, with_singles: bool) -> Vec<Vector> {
    let e = |k| linalg::unit(dim, k);
    let mut vs = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            vs.push(linalg::sub(&e(i), &e(j)));
            vs.push(linalg::add(&e(i), &e(j)));
        }
        if with_doubles {
            vs.push(linalg::scale(q(2), &e(i)));
        }
        if with_singles {
            vs.push(e(i));
        }
    }
    vs
}

fn realize(spec: FamilySpec) -> Realization {
    use Parity::{Even, Odd};
    match spec {
        FamilySpec::SlSuper { n, m } => {
            let (n, m) = (n as usize, m as usize);
            let dim = n + m;
            let e = |k| linalg::unit(dim, k);
            let mut form_diag = vec![q(1); n];
            form_diag.extend(vec![q(-1); m]);
            let simple: Vec<Vector> = (0..dim - 1).map(|i| linalg::sub(&e(i), &e(i + 1))).collect();
            let parity = (0..dim - 1).map(|i| if i == n - 1 { Odd } else { Even }).collect();
            let mut roots = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if i == j {
                        continue;
                    }
                    let same_block = (i < n) == (j < n);
                    roots.push((linalg::sub(&e(i), &e(j)), if same_block { Even } else { Odd }));
                }
            }
            Realization { dim, form: diag_form(&form_diag), simple, parity, roots }
        }
        FamilySpec::OspC { n } => {
            // coordinate 0 is ε, 1..=n are δ_1..δ_n
            let n = n as usize;
            let dim = n + 1;
            let e = |k| linalg::unit(dim, k);
            let mut form_diag = vec![frac(-1, 2)];
            form_diag.extend(vec![frac(1, 2); n]);
            let mut simple = vec![linalg::sub(&e(0), &e(1))];
            for i in 1..n {
                simple.push(linalg::sub(&e(i), &e(i + 1)));
            }
            simple.push(linalg::scale(q(2), &e(n)));
            let mut parity = vec![Odd];
            parity.extend(vec![Even; n]);
            let deltas: Vec<usize> = (1..=n).collect();
            let mut roots = Vec::new();
            with_negatives(type_bcd_even(dim, &deltas, true, false), Even, &mut roots);
            let odd: Vec<Vector> =
                deltas.iter().flat_map(|&i| [linalg::add(&e(0), &e(i)), linalg::sub(&e(0), &e(i))]).collect();
            with_negatives(odd, Odd, &mut roots);
            Realization { dim, form: diag_form(&form_diag), simple, parity, roots }
        }
        FamilySpec::OspB { m, n } | FamilySpec::OspD { m, n } => {
            let is_b = matches!(spec, FamilySpec::OspB { .. });
            // coordinates 0..n are δ_1..δ_n, n..n+m are ε_1..ε_m
            let (m, n) = (m as usize, n as usize);
            let dim = n + m;
            let e = |k| linalg::unit(dim, k);
            let (d_sq, e_sq) = if m <= n { (frac(1, 2), frac(-1, 2)) } else { (q(-1), q(1)) };
            let mut form_diag = vec![d_sq; n];
            form_diag.extend(vec![e_sq; m]);

            let mut simple = Vec::new();
            let mut parity = Vec::new();
            for i in 0..n - 1 {
                simple.push(linalg::sub(&e(i), &e(i + 1)));
                parity.push(Even);
            }
            if m == 0 {
                simple.push(e(n - 1));
                parity.push(Odd);
            } else {
                simple.push(linalg::sub(&e(n - 1), &e(n)));
                parity.push(Odd);
                for j in 0..m - 1 {
                    simple.push(linalg::sub(&e(n + j), &e(n + j + 1)));
                    parity.push(Even);
                }
                if is_b {
                    simple.push(e(n + m - 1));
                } else {
                    simple.push(linalg::add(&e(n + m - 2), &e(n + m - 1)));
                }
                parity.push(Even);
            }

            let deltas: Vec<usize> = (0..n).collect();
            let epsilons: Vec<usize> = (n..n + m).collect();
            let mut roots = Vec::new();
            with_negatives(type_bcd_even(dim, &deltas, true, false), Even, &mut roots);
            with_negatives(type_bcd_even(dim, &epsilons, false, is_b), Even, &mut roots);
            let mut odd = Vec::new();
            for &i in &deltas {
                for &j in &epsilons {
                    odd.push(linalg::add(&e(i), &e(j)));
                    odd.push(linalg::sub(&e(i), &e(j)));
                }
                if is_b {
                    odd.push(e(i));
                }
            }
            with_negatives(odd, Odd, &mut roots);
            Realization { dim, form: diag_form(&form_diag), simple, parity, roots }
        }
        FamilySpec::F4 => {
            // coordinates: δ, ε_1, ε_2, ε_3
            let dim = 4;
            let e = |k| linalg::unit(dim, k);
            let form = diag_form(&[q(-3), q(1), q(1), q(1)]);
            let half = frac(1, 2);
            let simple =
                vec![vec![half, -half, -half, -half], e(3), linalg::sub(&e(2), &e(3)), linalg::sub(&e(1), &e(2))];
            let parity = vec![Odd, Even, Even, Even];
            let mut roots = Vec::new();
            let mut even = vec![e(0)];
            even.extend(type_bcd_even(dim, &[1, 2, 3], false, true));
            with_negatives(even, Even, &mut roots);
            for signs in 0..16u32 {
                let v: Vector = (0..4).map(|k| if signs >> k & 1 == 1 { -half } else { half }).collect();
                roots.push((v, Odd));
            }
            Realization { dim, form, simple, parity, roots }
        }
        FamilySpec::G3 => {
            // coordinates: δ, ε_1, ε_2 with ε_3 = −ε_1 − ε_2
            let dim = 3;
            let mut form = g2_form(dim, 1);
            form[0][0] = frac(-2, 3);
            let delta = linalg::unit(dim, 0);
            let eps = g2_epsilons(dim, 1);
            let simple = vec![linalg::add(&delta, &eps[0]), eps[1].clone(), linalg::sub(&eps[2], &eps[1])];
            let parity = vec![Odd, Even, Even];
            let mut roots = Vec::new();
            let mut even = vec![linalg::scale(q(2), &delta)];
            even.extend(g2_positive_half(&eps));
            with_negatives(even, Even, &mut roots);
            let mut odd = vec![delta.clone()];
            for e in &eps {
                odd.push(linalg::add(&delta, e));
                odd.push(linalg::sub(&delta, e));
            }
            with_negatives(odd, Odd, &mut roots);
            Realization { dim, form, simple, parity, roots }
        }
        FamilySpec::SimpleA(r) => {
            let dim = r as usize + 1;
            let e = |k| linalg::unit(dim, k);
            let simple = (0..dim - 1).map(|i| linalg::sub(&e(i), &e(i + 1))).collect();
            let mut roots = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        roots.push((linalg::sub(&e(i), &e(j)), Even));
                    }
                }
            }
            Realization { dim, form: diag_form(&vec![q(1); dim]), simple, parity: vec![Even; dim - 1], roots }
        }
        FamilySpec::SimpleB2 => {
            // sp(4) on δ_1, δ_2 with (δ_i, δ_i) = ½ so that long roots 2δ_i have length 2
            let dim = 2;
            let e = |k| linalg::unit(dim, k);
            let simple = vec![linalg::sub(&e(0), &e(1)), linalg::scale(q(2), &e(1))];
            let mut roots = Vec::new();
            with_negatives(type_bcd_even(dim, &[0, 1], true, false), Even, &mut roots);
            Realization { dim, form: diag_form(&[frac(1, 2), frac(1, 2)]), simple, parity: vec![Even; 2], roots }
        }
        FamilySpec::SimpleG2 => {
            let dim = 2;
            let eps = g2_epsilons(dim, 0);
            let simple = vec![eps[1].clone(), linalg::sub(&eps[2], &eps[1])];
            let mut roots = Vec::new();
            with_negatives(g2_positive_half(&eps), Even, &mut roots);
            Realization { dim, form: g2_form(dim, 0), simple, parity: vec![Even; 2], roots }
        }
    }
}

/// Form with (ε_i, ε_i) = ⅔, (ε_1, ε_2) = −⅓ on coordinates `offset`, `offset + 1`.
fn g2_form(dim: usize, offset: usize) -> Matrix {
    let mut form = vec![vec![Q::zero(); dim]; dim];
    form[offset][offset] = frac(2, 3);
    form[offset + 1][offset + 1] = frac(2, 3);
    form[offset][offset + 1] = frac(-1, 3);
    form[offset + 1][offset] = frac(-1, 3);
    form
}

/// ε_1, ε_2 and ε_3 = −ε_1 − ε_2.
fn g2_epsilons(dim: usize, offset: usize) -> Vec<Vector> {
    let e1 = linalg::unit(dim, offset);
    let e2 = linalg::unit(dim, offset + 1);
    let e3 = linalg::neg(&linalg::add(&e1, &e2));
    vec![e1, e2, e3]
}

/// One of each ± pair of G2 roots: ε_i and ε_i − ε_j (i < j).
fn g2_positive_half(eps: &[Vector]) -> Vec<Vector> {
    let mut vs: Vec<Vector> = eps.to_vec();
    for i in 0..3 {
        for j in i + 1..3 {
            vs.push(linalg::sub(&eps[i], &eps[j]));
        }
    }
    vs
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg()))
    }
}

/// Builds and verifies the root system of `spec`.
pub fn build_root_system(spec: FamilySpec) -> Result<RootSystem> {
    spec.validate()?;
    let Realization { dim, form, simple, parity, roots: raw_roots } = realize(spec);

    check(form == linalg::transpose(&form), || "ambient form is not symmetric".into())?;
    let gram: Matrix = simple.iter().map(|a| simple.iter().map(|b| linalg::bilinear(&form, a, b)).collect()).collect();
    let gram_inv =
        linalg::inverse(&gram).ok_or_else(|| Error::Internal(format!("{spec}: Gram matrix of Π is singular")))?;

    let pi_coords = |v: &Vector| -> Option<Vec<Q>> {
        let pairings: Vec<Q> = simple.iter().map(|a| linalg::bilinear(&form, v, a)).collect();
        let c = linalg::mat_vec(&gram_inv, &pairings);
        (linalg::combine(&c, &simple, dim) == *v).then_some(c)
    };

    let mut roots = Vec::with_capacity(raw_roots.len());
    let mut index = HashMap::new();
    for (v, p) in raw_roots {
        let coeffs = pi_coords(&v).ok_or_else(|| Error::Internal(format!("{spec}: root {v:?} not in span of Π")))?;
        check(coeffs.iter().all(Q::is_integer), || {
            format!("{spec}: root {v:?} has non-integral Π-coefficients {coeffs:?}")
        })?;
        let nonneg = coeffs.iter().all(|c| !c.is_negative());
        let nonpos = coeffs.iter().all(|c| !c.is_positive());
        check(nonneg != nonpos, || format!("{spec}: root {v:?} has mixed-sign coefficients"))?;
        check(index.insert(v.clone(), roots.len()).is_none(), || format!("{spec}: duplicate root {v:?}"))?;
        roots.push(Root { vector: v, parity: p, coeffs, positive: nonneg });
    }

    for r in &roots {
        let neg = linalg::neg(&r.vector);
        let ok = index.get(&neg).is_some_and(|&k| roots[k].parity == r.parity && roots[k].positive != r.positive);
        check(ok, || format!("{spec}: −{:?} missing or same sign", r.vector))?;
    }
    for (a, p) in simple.iter().zip(&parity) {
        let ok = index.get(a).is_some_and(|&k| roots[k].positive && roots[k].parity == *p);
        check(ok, || format!("{spec}: simple root {a:?} not a positive root of the right parity"))?;
    }
    for r in roots.iter().filter(|r| r.parity == Parity::Even && r.positive) {
        let len = linalg::bilinear(&form, &r.vector, &r.vector);
        for s in &roots {
            let c = q(2) * linalg::bilinear(&form, &s.vector, &r.vector) / len;
            let image = linalg::sub(&s.vector, &linalg::scale(c, &r.vector));
            let ok = index.get(&image).is_some_and(|&k| roots[k].parity == s.parity);
            check(ok, || format!("{spec}: Δ not closed under r_{:?}", r.vector))?;
        }
    }
    let (n_even, n_odd) = (
        roots.iter().filter(|r| r.parity == Parity::Even).count(),
        roots.iter().filter(|r| r.parity == Parity::Odd).count(),
    );
    check((n_even, n_odd) == spec.expected_root_counts(), || {
        format!("{spec}: root counts ({n_even}, {n_odd}) differ from closed form")
    })?;

    // θ: the unique positive root of maximal height
    let max_height = roots.iter().filter(|r| r.positive).map(Root::height).max().unwrap();
    let tops: Vec<&Root> = roots.iter().filter(|r| r.positive && r.height() == max_height).collect();
    check(tops.len() == 1, || format!("{spec}: highest root not unique"))?;
    let theta = tops[0].vector.clone();
    let marks: Vec<i64> = tops[0].coeffs.iter().map(|c| c.to_integer()).collect();
    check(marks.iter().all(|&a| a >= 1), || format!("{spec}: θ has a zero mark"))?;
    for a in &simple {
        let up = linalg::add(&theta, a);
        check(!index.contains_key(&up), || format!("{spec}: θ + α_i is a root"))?;
    }

    let half = frac(1, 2);
    let mut rho = linalg::zeros(dim);
    for r in roots.iter().filter(|r| r.positive) {
        let sign = if r.parity == Parity::Even { half } else { -half };
        rho = linalg::add(&rho, &linalg::scale(sign, &r.vector));
    }
    for (i, a) in simple.iter().enumerate() {
        let lhs = linalg::bilinear(&form, &rho, a);
        check(lhs == half * gram[i][i], || format!("{spec}: (ρ, α_{}) = {lhs} ≠ ½(α_i, α_i)", i + 1))?;
    }
    let h_dual = linalg::bilinear(&form, &rho, &theta) + half * linalg::bilinear(&form, &theta, &theta);

    // r∨ over Δ♯ = {α ∈ Δ⁰ : (α, α) > 0}
    let sharp: Vec<Q> = roots
        .iter()
        .filter(|r| r.parity == Parity::Even)
        .map(|r| linalg::bilinear(&form, &r.vector, &r.vector))
        .filter(|l| l.is_positive())
        .collect();
    let (lo, hi) = (sharp.iter().min().unwrap(), sharp.iter().max().unwrap());
    let ratio = hi / lo;
    check(ratio.is_integer(), || format!("{spec}: non-integral lacety {ratio}"))?;
    let lacety = ratio.to_integer();

    let mut rs = RootSystem {
        family: spec,
        dim,
        form,
        simple_roots: simple,
        parity,
        gram,
        gram_inv,
        roots,
        index,
        theta,
        marks,
        rho,
        h_dual,
        lacety,
        even_simple: Vec::new(),
        derived: Vec::new(),
    };
    rs.even_simple = compute_even_simple(&rs);
    check(linalg::rank(&rs.even_simple) == rs.even_simple.len(), || {
        format!("{spec}: even simple system is linearly dependent")
    })?;
    rs.derived = derived_roots(&rs);
    for (name, v) in &rs.derived {
        check(rs.is_root(v), || format!("{spec}: derived {name} is not a root"))?;
    }
    Ok(rs)
}

/// Indecomposable elements of Δ⁰₊, ordered by the first simple root in their support.
fn compute_even_simple(rs: &RootSystem) -> Vec<Vector> {
    let even_pos: Vec<&Root> = rs.roots.iter().filter(|r| r.positive && r.parity == Parity::Even).collect();
    let is_sum = |r: &Root| {
        even_pos.iter().any(|a| {
            let rest = linalg::sub(&r.vector, &a.vector);
            rs.index.get(&rest).is_some_and(|&k| rs.roots[k].positive && rs.roots[k].parity == Parity::Even)
        })
    };
    let mut out: Vec<&Root> = even_pos.iter().copied().filter(|r| !is_sum(r)).collect();
    out.sort_by(|a, b| {
        let first = |r: &Root| r.coeffs.iter().position(|c| !c.is_zero());
        first(a).cmp(&first(b)).then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    out.into_iter().map(|r| r.vector.clone()).collect()
}

fn derived_roots(rs: &RootSystem) -> Vec<(&'static str, Vector)> {
    let from_coeffs = |c: Vec<i64>| {
        let c: Vec<Q> = c.into_iter().map(q).collect();
        rs.vector_from_pi(&c)
    };
    let rank = rs.rank();
    match rs.family {
        FamilySpec::SlSuper { n, .. } => {
            let n = n as usize;
            let c = (0..rank).map(|i| i64::from(i < n - 1)).collect();
            vec![(derived::THETA_1, from_coeffs(c))]
        }
        FamilySpec::OspC { .. } => {
            let t0 = linalg::sub(&rs.theta, &rs.simple_roots[0]);
            vec![(derived::THETA_0, t0)]
        }
        FamilySpec::OspB { m, n } if m > 0 => {
            let n = n as usize;
            let alpha_p = (0..rank).map(|i| if i + 1 >= n { 2 } else { 0 }).collect();
            let theta_p = (0..rank)
                .map(|i| match i {
                    i if i == n => 1,
                    i if i > n => 2,
                    _ => 0,
                })
                .collect();
            vec![(derived::ALPHA_PRIME, from_coeffs(alpha_p)), (derived::THETA_PRIME, from_coeffs(theta_p))]
        }
        FamilySpec::OspD { m, n } => {
            let (m, n) = (m as usize, n as usize);
            let last_two = |i: usize| i + 2 >= n + m;
            let alpha_p = (0..rank)
                .map(|i| match i {
                    i if i + 1 < n => 0,
                    i if last_two(i) => 1,
                    _ => 2,
                })
                .collect();
            let theta_p = (0..rank)
                .map(|i| match i {
                    i if i < n => 0,
                    i if i == n || last_two(i) => 1,
                    _ => 2,
                })
                .collect();
            // o(4) is not simple, so there is no single θ' when m = 2
            let mut out = vec![(derived::ALPHA_PRIME, from_coeffs(alpha_p))];
            if m >= 3 {
                out.push((derived::THETA_PRIME, from_coeffs(theta_p)));
            }
            out
        }
        FamilySpec::F4 => vec![(derived::THETA_PRIME, from_coeffs(vec![0, 2, 2, 1]))],
        FamilySpec::G3 => vec![(derived::THETA_PRIME, from_coeffs(vec![0, 3, 2]))],
        _ => Vec::new(),
    }
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// `(v, w)` without dimension checks.
    pub fn pair(&self, v: &[Q], w: &[Q]) -> Q {
        linalg::bilinear(&self.form, v, w)
    }

    /// `(v, w)` under the ambient form.
    pub fn inner(&self, v: &[Q], w: &[Q]) -> Result<Q> {
        if v.len() != self.dim || w.len() != self.dim {
            return Err(Error::Domain(format!(
                "dimension mismatch: expected {}, got {} and {}",
                self.dim,
                v.len(),
                w.len()
            )));
        }
        Ok(self.pair(v, w))
    }

    pub fn root(&self, v: &[Q]) -> Option<&Root> {
        self.index.get(v).map(|&k| &self.roots[k])
    }

    pub fn is_root(&self, v: &[Q]) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_positive_root(&self, v: &[Q]) -> bool {
        self.root(v).is_some_and(|r| r.positive)
    }

    pub fn is_negative_root(&self, v: &[Q]) -> bool {
        self.root(v).is_some_and(|r| !r.positive)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn even_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.parity == Parity::Even)
    }

    pub fn root_counts(&self) -> (usize, usize) {
        let even = self.even_roots().count();
        (even, self.roots.len() - even)
    }

    pub fn derived(&self, name: &str) -> Option<&Vector> {
        self.derived.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    pub fn derived_roots(&self) -> &[(&'static str, Vector)] {
        &self.derived
    }

    /// `((v, α_1), …, (v, α_r))`.
    pub fn pairings(&self, v: &[Q]) -> Vec<Q> {
        self.simple_roots.iter().map(|a| self.pair(v, a)).collect()
    }

    /// The unique vector in span Π with the given pairings against Π.
    pub fn vector_from_pairings(&self, pairings: &[Q]) -> Vector {
        let c = linalg::mat_vec(&self.gram_inv, pairings);
        self.vector_from_pi(&c)
    }

    pub fn vector_from_pi(&self, coeffs: &[Q]) -> Vector {
        linalg::combine(coeffs, &self.simple_roots, self.dim)
    }

    /// Π-coefficients of `v`, or `None` if `v` is not in span Π.
    pub fn pi_coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        let c = linalg::mat_vec(&self.gram_inv, &self.pairings(v));
        (self.vector_from_pi(&c) == v).then_some(c)
    }

    /// True when `v` has nonnegative integer Π-coefficients.
    pub fn in_positive_lattice(&self, v: &[Q]) -> bool {
        self.pi_coords(v).is_some_and(|c| c.iter().all(linalg::is_nonneg_integer))
    }

    /// Coroot: `α` for isotropic roots, `2α/(α, α)` otherwise.
    pub fn coroot(&self, alpha: &[Q]) -> Result<Vector> {
        let known = self.is_root(alpha) || self.derived.iter().any(|(_, v)| v == alpha);
        if !known {
            return Err(Error::Domain(format!("{alpha:?} is not a root of {}", self.family)));
        }
        let len = self.pair(alpha, alpha);
        if len.is_zero() {
            Ok(alpha.to_vec())
        } else {
            Ok(linalg::scale(q(2) / len, alpha))
        }
    }

    /// Cartan matrix of Π: `2(α_i, α_j)/(α_i, α_i)`, or `(α_i, α_j)` on isotropic rows.
    pub fn cartan_matrix(&self) -> Matrix {
        let r = self.rank();
        (0..r)
            .map(|i| {
                let d = self.gram[i][i];
                (0..r).map(|j| if d.is_zero() { self.gram[i][j] } else { q(2) * self.gram[i][j] / d }).collect()
            })
            .collect()
    }

    /// `(ρ, α_i)` for every simple root.
    pub fn rho_pairings(&self) -> Vec<Q> {
        self.pairings(&self.rho)
    }

    /// Whether h∨ is an integer.
    pub fn h_dual_is_integral(&self) -> bool {
        self.h_dual.is_integer()
    }

    /// `gcd(u, h∨) == 1`, read as `gcd(2u, 2h∨) == 1` when h∨ is a half-integer.
    pub fn coprime_to_h_dual(&self, u: u64) -> bool {
        let h = self.h_dual;
        if h.is_integer() {
            (u as i64).gcd(&h.to_integer()) == 1
        } else {
            let two_h = h * q(2);
            two_h.is_integer() && (2 * u as i64).gcd(&two_h.to_integer()) == 1
        }
    }
}

/// Even simple system (indecomposable positive even roots).
pub fn even_simple_system(rs: &RootSystem) -> &[Vector] {
    &rs.even_simple
}

/// Evaluates the ambient bilinear form.
pub fn inner(rs: &RootSystem, v: &[Q], w: &[Q]) -> Result<Q> {
    rs.inner(v, w)
}

/// Coroot of a root or registered derived root.
pub fn coroot(rs: &RootSystem, alpha: &[Q]) -> Result<Vector> {
    rs.coroot(alpha)
}

/// Algebras exercised by the verification matrix: every family at the smallest
/// parameters where its structure is non-degenerate.
pub const DESK_ROSTER: &[&str] = &[
    "sl(2|1)", "sl(3|1)", "sl(3|2)", "osp(2|2)", "osp(2|4)", "osp(1|2)", "osp(1|4)", "osp(3|2)", "osp(5|2)",
    "osp(6|2)", "osp(4|4)", "F(4)", "G(3)", "sl(2)", "sl(3)", "sp(4)", "g2",
];

pub fn desk_roster() -> Vec<FamilySpec> {
    DESK_ROSTER.iter().map(|s| parse_algebra(s).expect("roster names parse")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        build_root_system(parse_algebra(name).unwrap()).unwrap()
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(parse_algebra("sl(3|1)").unwrap(), FamilySpec::SlSuper { n: 3, m: 1 });
        assert_eq!(parse_algebra(" OSP( 5 | 2 )").unwrap(), FamilySpec::OspB { m: 2, n: 1 });
        assert_eq!(parse_algebra("osp(1|4)").unwrap(), FamilySpec::OspB { m: 0, n: 2 });
        assert_eq!(parse_algebra("osp(2|4)").unwrap(), FamilySpec::OspC { n: 2 });
        assert_eq!(parse_algebra("osp(6|2)").unwrap(), FamilySpec::OspD { m: 3, n: 1 });
        assert_eq!(parse_algebra("f(4)").unwrap(), FamilySpec::F4);
        assert_eq!(parse_algebra("G(3)").unwrap(), FamilySpec::G3);
        assert_eq!(parse_algebra("sl(2)").unwrap(), FamilySpec::SimpleA(1));
        assert_eq!(parse_algebra("SP(4)").unwrap(), FamilySpec::SimpleB2);
        assert_eq!(parse_algebra("G2").unwrap(), FamilySpec::SimpleG2);
        for bad in ["", "sl(3|1", "osp(3|3)", "osp(0|2)", "e8", "sl(1)", "sl(a|b)"] {
            assert!(matches!(parse_algebra(bad), Err(Error::Parse { .. })), "{bad}");
        }
        let err = parse_algebra("sl(2|2)").unwrap_err().to_string();
        assert!(err.contains("h∨ = 0: no boundary admissible levels"), "{err}");
        assert!(matches!(parse_algebra("sl(1|2)"), Err(Error::InvalidFamily(_))));
        assert!(matches!(parse_algebra("osp(2|2)"), Ok(FamilySpec::OspC { n: 1 })));
    }

    #[test]
    fn display_roundtrips_through_parser() {
        for spec in desk_roster() {
            assert_eq!(parse_algebra(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn sl21_basics() {
        let r = rs("sl(2|1)");
        assert_eq!(r.h_dual, q(1));
        assert_eq!(r.marks, vec![1, 1]);
        assert_eq!(r.rho_pairings(), vec![q(1), q(0)]);
        assert_eq!(r.inner(&r.simple_roots[1], &r.simple_roots[1]).unwrap(), q(0));
        assert_eq!(r.even_simple, vec![r.simple_roots[0].clone()]);
        let a2 = r.simple_roots[1].clone();
        assert_eq!(r.coroot(&a2).unwrap(), a2);
    }

    #[test]
    fn osp12_coroot_scales_by_four() {
        let r = rs("osp(1|2)");
        assert_eq!(r.h_dual, frac(3, 2));
        assert_eq!(r.rho_pairings(), vec![frac(1, 4)]);
        let a = r.simple_roots[0].clone();
        assert_eq!(r.coroot(&a).unwrap(), linalg::scale(q(4), &a));
    }

    #[test]
    fn coroot_rejects_non_roots() {
        let r = rs("sl(2)");
        assert_eq!(r.coroot(&r.theta).unwrap(), r.theta);
        assert!(matches!(r.coroot(&[q(1), q(1)]), Err(Error::Domain(_))));
    }

    #[test]
    fn inner_checks_dimension() {
        let r = rs("G(3)");
        assert_eq!(r.inner(&r.simple_roots[0], &r.simple_roots[1]).unwrap(), frac(-1, 3));
        assert!(matches!(r.inner(&[q(1)], &[q(1)]), Err(Error::Domain(_))));
        assert_eq!(r.inner(&linalg::zeros(3), &r.theta).unwrap(), q(0));
    }

    #[test]
    fn even_simple_examples() {
        let r = rs("osp(1|4)");
        let expected = vec![r.simple_roots[0].clone(), linalg::scale(q(2), &r.simple_roots[1])];
        assert_eq!(r.even_simple, expected);
        let f = rs("F(4)");
        assert_eq!(f.even_simple[0], f.theta);
        assert_eq!(&f.even_simple[1..], &f.simple_roots[1..]);
    }

    #[test]
    fn zero_dual_coxeter_is_constructible() {
        let r = build_root_system(FamilySpec::OspD { m: 2, n: 1 }).unwrap();
        assert_eq!(r.h_dual, q(0));
    }
}
