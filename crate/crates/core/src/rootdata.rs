//! Folded root data.
//!
//! A non-simply-laced root system is realized through a diagram automorphism
//! `σ` of a simply-laced parent. Indices of the folded system are orbits of
//! the cyclic group `Ξ = <σ>` on the parent nodes: fixed nodes (`I_0`) carry
//! long simple roots with `d_i = d`, free orbits (`I_1`) carry short ones with
//! `d_i = 1`.
//!
//! Node numbering:
//!
//! * `An`: the usual chain, no folding (`d = 1`).
//! * `Bn` (`n >= 3`): parent `A_{2n-1}` with `σ(j) = 2n - j`; orbits
//!   `{j, 2n-j}` give `I_1 = {1..n-1}` and the middle node gives `I_0 = {n}`.
//! * `C2`: the same construction for `n = 2` (`sl(4)` with `β_2` fixed), so
//!   `I_1 = {1}`, `I_0 = {2}`.
//! * `B2`: `C2` with the two indices transposed.
//! * `Cn` (`n >= 3`): parent `D_{n+1}` (chain `1..n-1`, fork `n-1 ~ n`,
//!   `n-1 ~ n+1`), `σ` swaps `n` and `n+1`; `I_0 = {1..n-1}`, `I_1 = {n}`.
//! * `G2`: parent `D_4` with `β_1` the central node and `σ = (2 3 4)`;
//!   `I_0 = {1}`, `I_1 = {2}`.
//! * `F4`: parent `E_6` in Bourbaki numbering (`1-3-4-5-6`, `2-4`), `σ`
//!   swaps `1↔6`, `3↔5`; the folded chain is `{1,6} - {3,5} - {4} - {2}`,
//!   i.e. `I_1 = {1, 2}`, `I_0 = {3, 4}`.
//!
//! Weights are stored in fundamental-weight coordinates, the simple root
//! `α̌_i` of the dual side being row `i` of [`FoldingDatum::cartan_g`].

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
}

/// Dynkin type of the folded root system `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::C(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::F4 => write!(f, "F4"),
            DynkinType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unsupported = || RootDataError::UnsupportedType(s.to_string());
        let s_trim = s.trim();
        let mut chars = s_trim.chars();
        let letter = chars.next().ok_or_else(unsupported)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| unsupported())?;
        match (letter, rank) {
            ('A', n) if n >= 1 => Ok(DynkinType::A(n)),
            ('B', n) if n >= 2 => Ok(DynkinType::B(n)),
            ('C', n) if n >= 2 => Ok(DynkinType::C(n)),
            ('F', 4) => Ok(DynkinType::F4),
            ('G', 2) => Ok(DynkinType::G2),
            _ => Err(unsupported()),
        }
    }
}

/// Element of the root lattice `Y`, in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `|α| = Σ c_i`.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Membership in the cone `Y_+`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self ≤ other` in the dominance order.
    pub fn dominated_by(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Weight `λ = Σ m_i ω̌_i` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// Height `Σ m_i`, used to order the triangular Toda solve.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Simply-laced parent system together with the `Ξ`-action on its nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentDatum {
    pub label: String,
    pub cartan: Vec<Vec<i64>>,
    /// `σ` as a permutation of `I'` (0-based).
    pub sigma: Vec<usize>,
    /// Orbit map `I' → I` (0-based).
    pub orbit: Vec<usize>,
}

impl ParentDatum {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Simply-laced pairing on the parent coroot lattice.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (p, xp) in x.iter().enumerate() {
            if *xp == 0 {
                continue;
            }
            for (r, yr) in y.iter().enumerate() {
                s += xp * yr * self.cartan[p][r];
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldingDatum {
    pub g_type: DynkinType,
    /// Order of `σ`.
    pub d: i64,
    pub d_i: Vec<i64>,
    /// `cartan_g[i][j] = ⟨α_j, α̌_i⟩`.
    pub cartan_g: Vec<Vec<i64>>,
    /// Symmetric pairing `(α_i, α_j)` with `(α_i, α_i) = 2 d_i`.
    pub pairing: Vec<Vec<i64>>,
    pub parent: ParentDatum,
    /// `a_matrix[p][i]`: coefficient of `β_p` in `a(α_i)`.
    pub a_matrix: Vec<Vec<i64>>,
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn simply_laced(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    c
}

struct FoldingTable {
    parent_label: String,
    parent_edges: Vec<(usize, usize)>,
    parent_rank: usize,
    sigma: Vec<usize>,
    orbit: Vec<usize>,
    g_edges: Vec<(usize, usize)>,
}

fn table_for(g_type: DynkinType) -> FoldingTable {
    match g_type {
        DynkinType::A(n) => FoldingTable {
            parent_label: format!("A{n}"),
            parent_edges: chain(n),
            parent_rank: n,
            sigma: (0..n).collect(),
            orbit: (0..n).collect(),
            g_edges: chain(n),
        },
        // C2 is the rank-two member of the A_{2n-1} family.
        DynkinType::B(n) if n >= 3 => a_odd_folding(n),
        DynkinType::C(2) => a_odd_folding(2),
        DynkinType::B(2) => {
            let mut t = a_odd_folding(2);
            t.orbit = t.orbit.iter().map(|&i| 1 - i).collect();
            t
        }
        DynkinType::C(n) => {
            // D_{n+1}: chain 0..n-2, node n-2 joined to n-1 and n.
            let mut edges = chain(n - 1);
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
            let mut sigma: Vec<usize> = (0..=n).collect();
            sigma.swap(n - 1, n);
            let orbit: Vec<usize> = (0..=n).map(|p| p.min(n - 1)).collect();
            FoldingTable {
                parent_label: format!("D{}", n + 1),
                parent_edges: edges,
                parent_rank: n + 1,
                sigma,
                orbit,
                g_edges: chain(n),
            }
        }
        DynkinType::G2 => FoldingTable {
            parent_label: "D4".to_string(),
            parent_edges: vec![(0, 1), (0, 2), (0, 3)],
            parent_rank: 4,
            sigma: vec![0, 2, 3, 1],
            orbit: vec![0, 1, 1, 1],
            g_edges: vec![(0, 1)],
        },
        DynkinType::F4 => FoldingTable {
            parent_label: "E6".to_string(),
            // Bourbaki E6: 1-3-4-5-6 and 2-4 (0-based below).
            parent_edges: vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)],
            parent_rank: 6,
            sigma: vec![5, 1, 4, 3, 2, 0],
            orbit: vec![0, 3, 1, 2, 1, 0],
            g_edges: chain(4),
        },
        DynkinType::B(_) => unreachable!("B1 rejected at parse time"),
    }
}

fn a_odd_folding(n: usize) -> FoldingTable {
    let m = 2 * n - 1;
    let sigma: Vec<usize> = (0..m).map(|p| m - 1 - p).collect();
    let orbit: Vec<usize> = (0..m).map(|p| p.min(m - 1 - p)).collect();
    FoldingTable {
        parent_label: format!("A{m}"),
        parent_edges: chain(m),
        parent_rank: m,
        sigma,
        orbit,
        g_edges: chain(n),
    }
}

/// Builds the folding datum of `g_type`.
pub fn build_folding(g_type: DynkinType) -> FoldingDatum {
    let n = g_type.rank();
    let t = table_for(g_type);
    let parent_cartan = simply_laced(t.parent_rank, &t.parent_edges);

    // order of σ
    let mut d = 1usize;
    loop {
        let all_fixed = (0..t.parent_rank).all(|p| {
            let mut x = p;
            for _ in 0..d {
                x = t.sigma[x];
            }
            x == p
        });
        if all_fixed {
            break;
        }
        d += 1;
    }

    let mut orbit_size = vec![0usize; n];
    for &i in &t.orbit {
        orbit_size[i] += 1;
    }
    let d_i: Vec<i64> = orbit_size
        .iter()
        .map(|&s| if d > 1 && s == 1 { d as i64 } else { 1 })
        .collect();

    let mut pairing = vec![vec![0i64; n]; n];
    for i in 0..n {
        pairing[i][i] = 2 * d_i[i];
    }
    for &(i, j) in &t.g_edges {
        let v = -d_i[i].max(d_i[j]);
        pairing[i][j] = v;
        pairing[j][i] = v;
    }
    let mut cartan_g = vec![vec![0i64; n]; n];
    for r in 0..n {
        for c in 0..n {
            debug_assert_eq!(pairing[c][r] % d_i[r], 0);
            cartan_g[r][c] = pairing[c][r] / d_i[r];
        }
    }

    // a(α_i) = Σ_{ξ ∈ Ξ} ξ(α̃_i) for a representative α̃_i of the orbit.
    let mut a_matrix = vec![vec![0i64; n]; t.parent_rank];
    for i in 0..n {
        let rep = t.orbit.iter().position(|&o| o == i).expect("every index has an orbit");
        let mut p = rep;
        for _ in 0..d {
            a_matrix[p][i] += 1;
            p = t.sigma[p];
        }
    }

    FoldingDatum {
        g_type,
        d: d as i64,
        d_i,
        cartan_g,
        pairing,
        parent: ParentDatum {
            label: t.parent_label,
            cartan: parent_cartan,
            sigma: t.sigma,
            orbit: t.orbit,
        },
        a_matrix,
    }
}

impl FoldingDatum {
    pub fn rank(&self) -> usize {
        self.d_i.len()
    }

    /// Indices of long simple roots (fixed orbits), 0-based.
    pub fn i0(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.d > 1 && self.d_i[i] == self.d).collect()
    }

    /// Indices of short simple roots (free orbits), 0-based.
    pub fn i1(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.d == 1 || self.d_i[i] == 1).collect()
    }

    fn check_len(&self, len: usize) -> Result<(), RootDataError> {
        if len != self.rank() {
            return Err(RootDataError::LengthMismatch { got: len, expected: self.rank() });
        }
        Ok(())
    }

    /// The injection `a: Y → Y'` from coinvariants to invariants.
    pub fn a_map(&self, alpha: &RootVector) -> Result<Vec<i64>, RootDataError> {
        self.check_len(alpha.rank())?;
        Ok(self
            .a_matrix
            .iter()
            .map(|row| row.iter().zip(&alpha.0).map(|(a, c)| a * c).sum())
            .collect())
    }

    /// `(β, β)` for the folded pairing.
    pub fn norm(&self, beta: &RootVector) -> i64 {
        let c = &beta.0;
        let mut s = 0;
        for i in 0..c.len() {
            for j in 0..c.len() {
                s += c[i] * c[j] * self.pairing[i][j];
            }
        }
        s
    }

    /// `(β, β)/2`; the pairing has even diagonal so this is an integer.
    pub fn norm_half(&self, beta: &RootVector) -> i64 {
        let c = &beta.0;
        let mut s = 0;
        for i in 0..c.len() {
            s += c[i] * c[i] * self.d_i[i];
            for j in (i + 1)..c.len() {
                s += c[i] * c[j] * self.pairing[i][j];
            }
        }
        s
    }

    /// `α̌_i` in fundamental-weight coordinates.
    pub fn simple_coroot_weight(&self, i: usize) -> WeightVector {
        WeightVector(self.cartan_g[i].clone())
    }

    /// The exponent `β*` of `z^{β*}`, in fundamental-weight coordinates.
    pub fn star(&self, beta: &RootVector) -> WeightVector {
        let n = self.rank();
        let mut out = vec![0i64; n];
        for (i, c) in beta.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += c * self.cartan_g[i][j];
            }
        }
        WeightVector(out)
    }

    /// Simple reflection `s_i` acting on a weight.
    pub fn reflect(&self, i: usize, mu: &WeightVector) -> Result<WeightVector, RootDataError> {
        if i >= self.rank() {
            return Err(RootDataError::IndexOutOfRange { index: i, rank: self.rank() });
        }
        self.check_len(mu.rank())?;
        let m = mu.0[i];
        Ok(WeightVector(mu.0.iter().zip(&self.cartan_g[i]).map(|(x, a)| x - m * a).collect()))
    }

    /// Same as [`FoldingDatum::reflect`] on a raw slice, for hot loops.
    pub(crate) fn reflect_slice(&self, i: usize, mu: &[i64]) -> Vec<i64> {
        let m = mu[i];
        mu.iter().zip(&self.cartan_g[i]).map(|(x, a)| x - m * a).collect()
    }

    /// Length normalization `e_i = d / d_i` of the dual roots `α̌_i`
    /// (`|α̌_i|² = 2 e_i`).
    fn dual_norm(&self, i: usize) -> i64 {
        self.d / self.d_i[i]
    }

    /// W-invariant rational form on weights, normalized by `(α̌_i, α̌_i) = 2 d/d_i`.
    pub fn weight_form(&self, mu: &WeightVector, nu: &WeightVector) -> BigRational {
        // Write μ in the α̌-basis, then (α̌_i, ν) = e_i ν_i.
        let coeffs = self.weight_to_root_coords(mu);
        coeffs
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (i, c)| acc + c * BigRational::from_integer((self.dual_norm(i) * nu.0[i]).into()))
    }

    /// Coordinates of a weight in the basis `α̌_i` (rational).
    pub fn weight_to_root_coords(&self, mu: &WeightVector) -> Vec<BigRational> {
        // Solve x^T C = μ, i.e. C^T x = μ.
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|c| BigRational::from_integer(self.cartan_g[c][r].into())).collect();
                row.push(BigRational::from_integer(mu.0[r].into()));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let inv = BigRational::one() / m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=n {
                        let v = &m[col][c] * &f;
                        m[r][c] = &m[r][c] - v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n].clone()).collect()
    }

    /// Reduced word for the longest Weyl group element, obtained by descending
    /// from `ρ` to `-ρ` with smallest-index choices. Applying `s_{w[0]}` first.
    pub fn longest_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut v = vec![1i64; n];
        let mut word = Vec::new();
        while let Some(i) = (0..n).find(|&i| v[i] > 0) {
            v = self.reflect_slice(i, &v);
            word.push(i);
        }
        word
    }

    /// `w_0 μ`.
    pub fn longest_element_action(&self, mu: &WeightVector) -> WeightVector {
        let mut v = mu.0.clone();
        for i in self.longest_word() {
            v = self.reflect_slice(i, &v);
        }
        WeightVector(v)
    }

    /// All roots of the dual system `{α̌}` in the simple-root basis, positive first.
    pub fn positive_dual_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n).map(|i| RootVector::simple(n, i).0).collect();
        while let Some(b) = stack.pop() {
            if !seen.insert(b.clone()) {
                continue;
            }
            for i in 0..n {
                // ⟨α_i, β⟩ = Σ_j β_j ⟨α_i, α̌_j⟩
                let p: i64 = (0..n).map(|j| b[j] * self.cartan_g[j][i]).sum();
                let mut r = b.clone();
                r[i] -= p;
                if r.iter().all(|&c| c >= 0) && !seen.contains(&r) {
                    stack.push(r);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        roots
    }

    /// Squared length of a dual root given in the simple-root basis.
    pub fn dual_root_norm(&self, beta: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta[i] * beta[j] * self.dual_norm(i) * self.cartan_g[j][i];
            }
        }
        s
    }

    /// Highest short dual root `θ_s` (simple-root basis). For simply-laced
    /// types this is the highest root.
    pub fn highest_short_dual_root(&self) -> Vec<i64> {
        let roots = self.positive_dual_roots();
        let min_norm = roots.iter().map(|r| self.dual_root_norm(r)).min().expect("nonempty root system");
        roots
            .into_iter()
            .filter(|r| self.dual_root_norm(r) == min_norm)
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("short roots exist")
    }

    /// Coroot of a dual root, as integer coefficients over `α_i`.
    pub fn coroot_of(&self, beta: &[i64]) -> Vec<i64> {
        let nb = self.dual_root_norm(beta);
        beta.iter()
            .enumerate()
            .map(|(i, &c)| {
                let num = c * 2 * self.dual_norm(i);
                debug_assert_eq!(num % nb, 0);
                num / nb
            })
            .collect()
    }

    /// Simple-root coordinates → fundamental-weight coordinates.
    pub fn dual_root_to_weight(&self, beta: &[i64]) -> WeightVector {
        self.star(&RootVector(beta.to_vec()))
    }

    /// All `β` with `0 ≤ β ≤ α`, in lexicographic order.
    pub fn enumerate_below(alpha: &RootVector) -> Vec<RootVector> {
        enumerate_box(&alpha.0).into_iter().map(RootVector).collect()
    }
}

/// Coordinate box `Π [0, c_i]` in lexicographic order.
pub fn enumerate_box(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * (b.max(0) as usize + 1));
        for prefix in &out {
            for c in 0..=b.max(0) {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Dominant weights with `Σ m_i ≤ bound`, ordered by height then lexicographically.
pub fn dominant_weights_up_to(rank: usize, bound: i64) -> Vec<WeightVector> {
    let mut out: Vec<WeightVector> = enumerate_box(&vec![bound; rank])
        .into_iter()
        .filter(|v| v.iter().sum::<i64>() <= bound)
        .map(WeightVector)
        .collect();
    out.sort_by_key(|w| (w.height(), w.0.clone()));
    out
}

/// Positive root-lattice vectors with `|α| ≤ bound`.
pub fn positive_box_up_to(rank: usize, bound: i64) -> Vec<RootVector> {
    dominant_weights_up_to(rank, bound).into_iter().map(|w| RootVector(w.0)).collect()
}
