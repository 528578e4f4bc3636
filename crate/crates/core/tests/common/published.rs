//! Published per-family constants and Cartan displays.

use superaffine_core::linalg::{frac, q};
use superaffine_core::{FamilySpec, Q};

/// Published h∨, r∨, (ρ, α_i) and θ-marks for each family.
pub struct Published {
    pub h_dual: Q,
    pub lacety: i64,
    pub rho: Vec<Q>,
    pub marks: Vec<i64>,
}

pub fn published(spec: FamilySpec) -> Published {
    let half = frac(1, 2);
    match spec {
        FamilySpec::SlSuper { n, m } => {
            let (n, m) = (n as usize, m as usize);
            let rho = (1..n + m)
                .map(|i| match i.cmp(&n) {
                    std::cmp::Ordering::Less => q(1),
                    std::cmp::Ordering::Equal => q(0),
                    std::cmp::Ordering::Greater => q(-1),
                })
                .collect();
            Published { h_dual: q((n - m) as i64), lacety: 1, rho, marks: vec![1; n + m - 1] }
        }
        FamilySpec::OspC { n } => {
            let n = n as usize;
            let mut rho = vec![q(0)];
            rho.extend(vec![half; n - 1]);
            rho.push(q(1));
            let mut marks = vec![1];
            marks.extend(vec![2; n - 1]);
            marks.push(1);
            Published { h_dual: q(n as i64), lacety: if n > 1 { 2 } else { 1 }, rho, marks }
        }
        FamilySpec::OspB { m: 0, n } => {
            let n = n as usize;
            let mut rho = vec![half; n - 1];
            rho.push(frac(1, 4));
            Published { h_dual: q(n as i64) + half, lacety: if n > 1 { 2 } else { 1 }, rho, marks: vec![2; n] }
        }
        FamilySpec::OspB { m, n } => {
            let (mi, ni) = (m as i64, n as i64);
            let (m, n) = (m as usize, n as usize);
            if m > n {
                let mut rho = vec![q(-1); n - 1];
                rho.push(q(0));
                rho.extend(vec![q(1); m - 1]);
                rho.push(half);
                Published { h_dual: q(2 * (mi - ni) - 1), lacety: 2, rho, marks: vec![2; n + m] }
            } else {
                let mut rho = vec![half; n - 1];
                rho.push(q(0));
                rho.extend(vec![-half; m - 1]);
                rho.push(frac(-1, 4));
                Published { h_dual: q(ni - mi) + half, lacety: if n > 1 { 2 } else { 1 }, rho, marks: vec![2; n + m] }
            }
        }
        FamilySpec::OspD { m, n } => {
            let (mi, ni) = (m as i64, n as i64);
            let (m, n) = (m as usize, n as usize);
            let mut marks = vec![2; n + m - 2];
            marks.extend([1, 1]);
            let mut rho = if m > n { vec![q(-1); n - 1] } else { vec![half; n - 1] };
            rho.push(q(0));
            if m > n {
                rho.extend(vec![q(1); m]);
                Published { h_dual: q(2 * (mi - ni - 1)), lacety: 1, rho, marks }
            } else {
                rho.extend(vec![-half; m]);
                Published { h_dual: q(ni - mi + 1), lacety: 2, rho, marks }
            }
        }
        FamilySpec::F4 => {
            Published { h_dual: q(3), lacety: 2, rho: vec![q(0), half, q(1), q(1)], marks: vec![2, 3, 2, 1] }
        }
        FamilySpec::G3 => {
            Published { h_dual: q(2), lacety: 3, rho: vec![q(0), frac(1, 3), q(1)], marks: vec![2, 4, 2] }
        }
        FamilySpec::SimpleA(r) => {
            Published { h_dual: q(r as i64 + 1), lacety: 1, rho: vec![q(1); r as usize], marks: vec![1; r as usize] }
        }
        FamilySpec::SimpleB2 => Published { h_dual: q(3), lacety: 2, rho: vec![half, q(1)], marks: vec![2, 1] },
        FamilySpec::SimpleG2 => Published { h_dual: q(4), lacety: 3, rho: vec![frac(1, 3), q(1)], marks: vec![3, 2] },
    }
}

/// Cartan matrix as displayed for sl(n|m).
pub fn sl_cartan(n: usize, m: usize) -> Vec<Vec<Q>> {
    let r = n + m - 1;
    let mut a = vec![vec![q(0); r]; r];
    for i in 0..r {
        if i + 1 == n {
            a[i][i] = q(0);
            if i > 0 {
                a[i][i - 1] = q(-1);
            }
            if i + 1 < r {
                a[i][i + 1] = q(1);
            }
        } else {
            a[i][i] = q(2);
            if i > 0 {
                a[i][i - 1] = q(-1);
            }
            if i + 1 < r {
                a[i][i + 1] = q(-1);
            }
        }
    }
    a
}

/// Cartan matrix as displayed for osp(2|2n), n ≥ 2.
pub fn osp_c_cartan(n: usize) -> Vec<Vec<Q>> {
    let r = n + 1;
    let mut a = vec![vec![q(0); r]; r];
    a[0][1] = frac(-1, 2);
    for i in 1..r {
        a[i][i] = q(2);
        a[i][i - 1] = q(-1);
        if i + 1 < r {
            a[i][i + 1] = q(-1);
        }
    }
    a[r - 2][r - 1] = q(-2);
    a
}

pub fn f4_cartan() -> Vec<Vec<Q>> {
    vec![
        vec![q(0), frac(-1, 2), q(0), q(0)],
        vec![q(-1), q(2), q(-2), q(0)],
        vec![q(0), q(-1), q(2), q(-1)],
        vec![q(0), q(0), q(-1), q(2)],
    ]
}

pub fn g3_cartan() -> Vec<Vec<Q>> {
    vec![vec![q(0), frac(-1, 3), q(0)], vec![q(-1), q(2), q(-3)], vec![q(0), q(-1), q(2)]]
}

/// The displayed Cartan matrix, for families that have one.
pub fn displayed_cartan(spec: FamilySpec) -> Option<Vec<Vec<Q>>> {
    match spec {
        FamilySpec::SlSuper { n, m } => Some(sl_cartan(n as usize, m as usize)),
        FamilySpec::OspC { n } if n >= 2 => Some(osp_c_cartan(n as usize)),
        FamilySpec::F4 => Some(f4_cartan()),
        FamilySpec::G3 => Some(g3_cartan()),
        _ => None,
    }
}
