use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::DemazureError;
use crate::rootdata::{DynkinType, FoldingDatum};

/// Affine weight `ℓΛ_0 + μ + mδ`, `μ` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub level: i64,
    pub mu: Vec<i64>,
    pub m: i64,
}

impl AffineWeight {
    pub fn new(level: i64, mu: Vec<i64>, m: i64) -> Self {
        AffineWeight { level, mu, m }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?}, {})", self.level, self.mu, self.m)
    }
}

/// Finite linear combination of exponentials `e^τ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineGroupElement {
    terms: BTreeMap<AffineWeight, BigRational>,
}

impl AffineGroupElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn exp(tau: AffineWeight) -> Self {
        let mut out = Self::zero();
        out.add_term(tau, BigRational::one());
        out
    }

    pub fn add_term(&mut self, tau: AffineWeight, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(tau) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineWeight, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Add for &AffineGroupElement {
    type Output = AffineGroupElement;
    fn add(self, rhs: &AffineGroupElement) -> AffineGroupElement {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

/// Affine Kac-Moody data attached to a folding, with horizontal root system
/// the dual roots `α̌_i` and `α_0 = δ - θ_s` for the highest short dual root
/// `θ_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineData {
    pub label: String,
    /// `gcm[i][j] = <α_j, α̌_i>` on the affine index set `0..=n`.
    pub gcm: Vec<Vec<i64>>,
    /// Coefficients of `δ` in the simple roots.
    pub marks: Vec<i64>,
    /// Coefficients of the canonical central element in the simple coroots.
    pub comarks: Vec<i64>,
    /// `ε` with `ε_i gcm[i][j] = ε_j gcm[j][i]`.
    pub symmetrizer: Vec<i64>,
    /// Finite simple roots as weights (rows of `cartan_g`).
    pub(crate) roots: Vec<Vec<i64>>,
    /// `θ_s` as a weight.
    pub(crate) theta: Vec<i64>,
    /// `θ_s^∨` coefficients over the finite simple coroots.
    pub(crate) theta_coroot: Vec<i64>,
}

fn twisted_label(g: DynkinType) -> String {
    match g {
        DynkinType::A(n) => format!("A{n}^(1)"),
        DynkinType::B(2) | DynkinType::C(2) => "D3^(2)".to_string(),
        DynkinType::B(n) => format!("D{}^(2)", n + 1),
        DynkinType::C(n) => format!("A{}^(2)", 2 * n - 1),
        DynkinType::F4 => "E6^(2)".to_string(),
        DynkinType::G2 => "D4^(3)".to_string(),
    }
}

/// Builds the affine data of a folding.
pub fn build_affine(folding: &FoldingDatum) -> Result<AffineData, DemazureError> {
    let n = folding.rank();
    if n == 0 {
        return Err(DemazureError::UnsupportedType(folding.g_type.to_string()));
    }
    let c = folding.highest_short_dual_root();
    let t = folding.coroot_of(&c);
    let theta = folding.dual_root_to_weight(&c).0;
    let roots: Vec<Vec<i64>> = folding.cartan_g.clone();

    let mut gcm = vec![vec![0i64; n + 1]; n + 1];
    gcm[0][0] = 2;
    for j in 0..n {
        gcm[0][j + 1] = -(0..n).map(|k| t[k] * roots[j][k]).sum::<i64>();
        gcm[j + 1][0] = -theta[j];
        for i in 0..n {
            gcm[i + 1][j + 1] = roots[j][i];
        }
    }
    let marks: Vec<i64> = std::iter::once(1).chain(c.iter().copied()).collect();
    let comarks: Vec<i64> = std::iter::once(1).chain(t.iter().copied()).collect();
    let symmetrizer = symmetrizer(&gcm).ok_or_else(|| DemazureError::UnsupportedType(folding.g_type.to_string()))?;
    Ok(AffineData {
        label: twisted_label(folding.g_type),
        gcm,
        marks,
        comarks,
        symmetrizer,
        roots,
        theta,
        theta_coroot: t,
    })
}

/// Integer symmetrizer of a connected symmetrizable matrix.
fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut eps: Vec<Option<BigRational>> = vec![None; n];
    eps[0] = Some(BigRational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i == j || a[i][j] == 0 {
                continue;
            }
            // ε_j = ε_i a_ij / a_ji
            let v = eps[i].clone()? * BigRational::new(a[i][j].into(), a[j][i].into());
            match &eps[j] {
                Some(e) if *e != v => return None,
                Some(_) => {}
                None => {
                    eps[j] = Some(v);
                    stack.push(j);
                }
            }
        }
    }
    let eps: Vec<BigRational> = eps.into_iter().collect::<Option<_>>()?;
    let lcm = eps.iter().fold(num_bigint::BigInt::one(), |acc, e| num_integer::Integer::lcm(&acc, e.denom()));
    let ints: Vec<i64> = eps.iter().map(|e| (e * BigRational::from_integer(lcm.clone())).to_integer().try_into().ok()).collect::<Option<_>>()?;
    let g = ints.iter().fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x));
    Some(ints.into_iter().map(|x| x / g).collect())
}

impl AffineData {
    /// Number of affine nodes.
    pub fn size(&self) -> usize {
        self.gcm.len()
    }

    pub fn finite_rank(&self) -> usize {
        self.gcm.len() - 1
    }

    /// `A · marks = 0` and `comarks · A = 0`.
    pub fn null_root_holds(&self) -> bool {
        let n = self.size();
        let rows = (0..n).all(|i| (0..n).map(|j| self.gcm[i][j] * self.marks[j]).sum::<i64>() == 0);
        let cols = (0..n).all(|j| (0..n).map(|i| self.comarks[i] * self.gcm[i][j]).sum::<i64>() == 0);
        rows && cols
    }

    /// `<τ, α̌_i>` for the affine index `i`.
    pub fn pairing(&self, tau: &AffineWeight, i: usize) -> i64 {
        if i == 0 {
            tau.level - self.theta_coroot.iter().zip(&tau.mu).map(|(t, m)| t * m).sum::<i64>()
        } else {
            tau.mu[i - 1]
        }
    }

    /// `τ + k α_i`.
    pub fn add_root(&self, tau: &AffineWeight, i: usize, k: i64) -> AffineWeight {
        if i == 0 {
            AffineWeight {
                level: tau.level,
                mu: tau.mu.iter().zip(&self.theta).map(|(m, th)| m - k * th).collect(),
                m: tau.m + k,
            }
        } else {
            AffineWeight {
                level: tau.level,
                mu: tau.mu.iter().zip(&self.roots[i - 1]).map(|(m, r)| m + k * r).collect(),
                m: tau.m,
            }
        }
    }

    /// Simple reflection `s_i τ = τ - <τ, α̌_i> α_i`.
    pub fn reflect(&self, tau: &AffineWeight, i: usize) -> AffineWeight {
        self.add_root(tau, i, -self.pairing(tau, i))
    }

    pub fn is_dominant(&self, tau: &AffineWeight) -> bool {
        (0..self.size()).all(|i| self.pairing(tau, i) >= 0)
    }
}
