//! Finite even Weyl groups, reflections, and the affine translation and
//! shifted actions on affine weights.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, frac, q, Matrix, Vector, Q};
use crate::rootdata::{derived, FamilySpec, RootSystem};

/// Default cap on group closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Matrix,
    pub inverse: Matrix,
    /// Generator indices, leftmost applied last: `matrix = r_{w[0]} ⋯ r_{w[k]}`.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement { matrix: linalg::identity(dim), inverse: linalg::identity(dim), word: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity(self.matrix.len())
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        linalg::mat_vec(&self.matrix, v)
    }

    pub fn apply_inverse(&self, v: &[Q]) -> Vector {
        linalg::mat_vec(&self.inverse, v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            inverse: linalg::mat_mul(&other.inverse, &self.inverse),
            word,
        }
    }

    pub fn inverted(&self) -> WeylElement {
        let mut word = self.word.clone();
        word.reverse();
        WeylElement { matrix: self.inverse.clone(), inverse: self.matrix.clone(), word }
    }

    /// Acts on the finite part only; level and δ are fixed.
    pub fn act(&self, w: &AffineWeight) -> AffineWeight {
        AffineWeight { level: w.level, finite: self.apply(&w.finite), delta: w.delta }
    }
}

/// Matrix of `v ↦ v − 2(v,α)/(α,α) α`.
pub fn reflection_matrix(rs: &RootSystem, alpha: &[Q]) -> Result<Matrix> {
    let len = rs.pair(alpha, alpha);
    if len.is_zero() {
        return Err(Error::Domain("reflection undefined for isotropic root".into()));
    }
    let f_alpha = linalg::mat_vec(&rs.form, alpha);
    let c = q(2) / len;
    Ok((0..rs.dim)
        .map(|i| {
            (0..rs.dim)
                .map(|j| {
                    let id = if i == j { Q::from(1) } else { Q::zero() };
                    id - c * alpha[i] * f_alpha[j]
                })
                .collect()
        })
        .collect())
}

pub fn reflect(rs: &RootSystem, alpha: &[Q], v: &[Q]) -> Result<Vector> {
    let len = rs.pair(alpha, alpha);
    if len.is_zero() {
        return Err(Error::Domain("reflection undefined for isotropic root".into()));
    }
    let c = q(2) * rs.pair(v, alpha) / len;
    Ok(linalg::sub(v, &linalg::scale(c, alpha)))
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    /// Roots whose reflections generate the group.
    pub generators: Vec<Vector>,
    pub elements: Vec<WeylElement>,
    index: HashMap<Matrix, usize>,
}

impl WeylGroup {
    /// Breadth-first closure of the reflections in `generators`.
    pub fn generated_by(rs: &RootSystem, generators: &[Vector], cap: usize) -> Result<WeylGroup> {
        let gens: Vec<Matrix> = generators.iter().map(|a| reflection_matrix(rs, a)).collect::<Result<_>>()?;
        let id = WeylElement::identity(rs.dim);
        let mut index = HashMap::new();
        index.insert(id.matrix.clone(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (g, m) in gens.iter().enumerate() {
                let cur = &elements[k];
                let matrix = linalg::mat_mul(m, &cur.matrix);
                if index.contains_key(&matrix) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::Resource { cap });
                }
                // reflections are involutions, so the inverse just appends on the right
                let inverse = linalg::mat_mul(&cur.inverse, m);
                let mut word = vec![g];
                word.extend_from_slice(&cur.word);
                index.insert(matrix.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement { matrix, inverse, word });
            }
        }
        Ok(WeylGroup { generators: generators.to_vec(), elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, y: &WeylElement) -> bool {
        self.index.contains_key(&y.matrix)
    }

    pub fn contains_matrix(&self, m: &Matrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeylElement> {
        self.elements.iter()
    }
}

/// The even Weyl group, generated by reflections in the even simple system.
pub fn generate_weyl(rs: &RootSystem) -> Result<WeylGroup> {
    generate_weyl_capped(rs, DEFAULT_ELEMENT_CAP)
}

pub fn generate_weyl_capped(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    WeylGroup::generated_by(rs, &rs.even_simple, cap)
}

/// Generators of the factors in W = W₁ × W₂ and of the stabilizer W′₁ ⊂ W₁.
///
/// `w1` is the factor carrying θ (or θ₁ for sl(n|m)). Families without a
/// product decomposition put everything in `w1`.
#[derive(Debug, Clone)]
pub struct FactorGenerators {
    pub w1: Vec<Vector>,
    pub w2: Vec<Vector>,
    pub w1_prime: Option<Vec<Vector>>,
}

pub fn factor_generators(rs: &RootSystem) -> FactorGenerators {
    let a = |i: usize| rs.simple_roots[i].clone();
    let range = |lo: usize, hi: usize| (lo..hi).map(a).collect::<Vec<_>>();
    let rank = rs.rank();
    match rs.family {
        FamilySpec::SlSuper { n, .. } => {
            let n = n as usize;
            FactorGenerators { w1: range(0, n - 1), w2: range(n, rank), w1_prime: None }
        }
        FamilySpec::OspB { m, n } | FamilySpec::OspD { m, n } if m > 0 => {
            let n = n as usize;
            let prime = range(0, n - 1);
            let mut w1 = prime.clone();
            w1.push(rs.derived(derived::ALPHA_PRIME).expect("α'_n registered").clone());
            FactorGenerators { w1, w2: range(n, rank), w1_prime: Some(prime) }
        }
        FamilySpec::F4 | FamilySpec::G3 => {
            FactorGenerators { w1: vec![rs.theta.clone()], w2: range(1, rank), w1_prime: None }
        }
        _ => FactorGenerators { w1: rs.even_simple.clone(), w2: Vec::new(), w1_prime: None },
    }
}

#[derive(Debug, Clone)]
pub struct Factorization {
    pub w1: WeylGroup,
    pub w2: WeylGroup,
    pub w1_prime: Option<WeylGroup>,
}

/// Generates the factor subgroups and checks |W| = |W₁|·|W₂|.
pub fn factorize(rs: &RootSystem, w: &WeylGroup) -> Result<Factorization> {
    let gens = factor_generators(rs);
    let w1 = WeylGroup::generated_by(rs, &gens.w1, DEFAULT_ELEMENT_CAP)?;
    let w2 = WeylGroup::generated_by(rs, &gens.w2, DEFAULT_ELEMENT_CAP)?;
    let w1_prime = gens.w1_prime.map(|g| WeylGroup::generated_by(rs, &g, DEFAULT_ELEMENT_CAP)).transpose()?;
    if w1.order() * w2.order() != w.order() {
        return Err(Error::Internal(format!(
            "{}: |W₁|·|W₂| = {}·{} ≠ |W| = {}",
            rs.family,
            w1.order(),
            w2.order(),
            w.order()
        )));
    }
    Ok(Factorization { w1, w2, w1_prime })
}

/// Element of ĥ* as (value on k, restriction to 𝔥, coefficient of δ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub level: Q,
    pub finite: Vector,
    pub delta: Q,
}

impl AffineWeight {
    /// `level · Λ_0`.
    pub fn vacuum(level: Q, dim: usize) -> Self {
        AffineWeight { level, finite: linalg::zeros(dim), delta: Q::zero() }
    }

    /// ρ̂ = h∨Λ_0 + ρ.
    pub fn rho_hat(rs: &RootSystem) -> Self {
        AffineWeight { level: rs.h_dual, finite: rs.rho.clone(), delta: Q::zero() }
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            level: self.level + other.level,
            finite: linalg::add(&self.finite, &other.finite),
            delta: self.delta + other.delta,
        }
    }

    pub fn sub(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            level: self.level - other.level,
            finite: linalg::sub(&self.finite, &other.finite),
            delta: self.delta - other.delta,
        }
    }

    /// Drops the δ-coefficient.
    pub fn canonical(&self) -> AffineWeight {
        AffineWeight { delta: Q::zero(), ..self.clone() }
    }

    /// `(λ̂, α_i)` for each simple root.
    pub fn pairings(&self, rs: &RootSystem) -> Vec<Q> {
        rs.pairings(&self.finite)
    }
}

/// `t_β(λ̂) = λ̂ + λ̂(k)β − ((λ̂, β) + ½λ̂(k)(β, β))δ`.
pub fn translate(rs: &RootSystem, beta: &[Q], w: &AffineWeight) -> AffineWeight {
    let shift = rs.pair(&w.finite, beta) + frac(1, 2) * w.level * rs.pair(beta, beta);
    AffineWeight {
        level: w.level,
        finite: linalg::add(&w.finite, &linalg::scale(w.level, beta)),
        delta: w.delta - shift,
    }
}

/// `(t_β y)·λ̂ = t_β(y(λ̂ + ρ̂)) − ρ̂`.
pub fn shifted_translate_act(rs: &RootSystem, y: &WeylElement, beta: &[Q], w: &AffineWeight) -> AffineWeight {
    let rho_hat = AffineWeight::rho_hat(rs);
    translate(rs, beta, &y.act(&w.add(&rho_hat))).sub(&rho_hat)
}

/// `r_α·λ̂ = r_α(λ̂ + ρ̂) − ρ̂` for a finite even root α.
pub fn shifted_reflect(rs: &RootSystem, alpha: &[Q], w: &AffineWeight) -> Result<AffineWeight> {
    let rho_hat = AffineWeight::rho_hat(rs);
    let moved = w.add(&rho_hat);
    let finite = reflect(rs, alpha, &moved.finite)?;
    Ok(AffineWeight { finite, ..moved }.sub(&rho_hat))
}

/// Checks that `y` preserves the form and permutes Δ preserving parity.
pub fn preserves_root_data(rs: &RootSystem, y: &WeylElement) -> bool {
    let n = rs.dim;
    let basis: Vec<Vector> = (0..n).map(|k| linalg::unit(n, k)).collect();
    let images: Vec<Vector> = basis.iter().map(|e| y.apply(e)).collect();
    let form_ok = (0..n).all(|i| (0..n).all(|j| rs.pair(&images[i], &images[j]) == rs.form[i][j]));
    form_ok
        && rs.roots.iter().all(|r| {
            let img = y.apply(&r.vector);
            rs.root(&img).is_some_and(|s| s.parity == r.parity)
        })
}
