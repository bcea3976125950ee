use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Monomial `q^k z^μ`. The derived order (q-degree first, then `μ`
/// lexicographically) is the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedWeight {
    pub q: i64,
    pub z: Vec<i64>,
}

impl GradedWeight {
    pub fn new(q: i64, z: Vec<i64>) -> Self {
        GradedWeight { q, z }
    }

    pub fn unit(rank: usize) -> Self {
        GradedWeight { q: 0, z: vec![0; rank] }
    }

    pub fn is_unit(&self) -> bool {
        self.q == 0 && self.z.iter().all(|&m| m == 0)
    }

    pub fn rank(&self) -> usize {
        self.z.len()
    }

    pub fn scaled(&self, t: i64) -> Self {
        GradedWeight { q: self.q * t, z: self.z.iter().map(|m| m * t).collect() }
    }

    pub fn z_is_zero(&self) -> bool {
        self.z.iter().all(|&m| m == 0)
    }
}

impl Add for &GradedWeight {
    type Output = GradedWeight;
    fn add(self, rhs: &GradedWeight) -> GradedWeight {
        debug_assert_eq!(self.z.len(), rhs.z.len());
        GradedWeight { q: self.q + rhs.q, z: self.z.iter().zip(&rhs.z).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &GradedWeight {
    type Output = GradedWeight;
    fn sub(self, rhs: &GradedWeight) -> GradedWeight {
        debug_assert_eq!(self.z.len(), rhs.z.len());
        GradedWeight { q: self.q - rhs.q, z: self.z.iter().zip(&rhs.z).map(|(a, b)| a - b).collect() }
    }
}

/// Laurent polynomial in `q, z_1..z_n` over `ℚ`. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<GradedWeight, BigRational>,
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(GradedWeight::unit(rank), BigRational::one())
    }

    pub fn monomial(w: GradedWeight, c: BigRational) -> Self {
        let rank = w.rank();
        let mut p = LaurentPoly::zero(rank);
        p.add_term(w, c);
        p
    }

    pub fn constant(rank: usize, c: BigRational) -> Self {
        Self::monomial(GradedWeight::unit(rank), c)
    }

    /// `1 - q^k z^μ`.
    pub fn one_minus(w: &GradedWeight) -> Self {
        let mut p = LaurentPoly::one(w.rank());
        p.add_term(w.clone(), -BigRational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (GradedWeight, BigRational)>>(rank: usize, it: I) -> Self {
        let mut p = LaurentPoly::zero(rank);
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(w, c)| w.is_unit() && c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&GradedWeight, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &GradedWeight) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: GradedWeight, c: BigRational) {
        assert_eq!(w.rank(), self.rank, "monomial rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v += c;
                if v.is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, w: &GradedWeight, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        if let Some(v) = self.terms.get_mut(w) {
            *v += c;
            if v.is_zero() {
                self.terms.remove(w);
            }
        } else {
            self.terms.insert(w.clone(), c.clone());
        }
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().next().map(|w| w.q)
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|w| w.q).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// Multiply by the monomial `q^k z^μ`.
    pub fn shift(&self, w: &GradedWeight) -> Self {
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(m, v)| (m + w, v.clone())).collect() }
    }

    /// Product truncated to q-degree `≤ bound`.
    pub fn mul_truncated(&self, other: &LaurentPoly, bound: Option<i64>) -> LaurentPoly {
        assert_eq!(self.rank, other.rank, "rank mismatch in product");
        let mut out = LaurentPoly::zero(self.rank);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                if let Some(b) = bound {
                    if wa.q + wb.q > b {
                        // terms of `other` are q-sorted
                        break;
                    }
                }
                out.add_term(wa + wb, ca * cb);
            }
        }
        out
    }

    pub fn truncate(&self, bound: i64) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().filter(|(w, _)| w.q <= bound).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.rank);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient by `1 - q^k z^μ` (`k ≥ 1` or `μ ≠ 0`), if it exists.
    ///
    /// Terms are grouped into lines `x·m^t`; on each line the quotient is the
    /// running prefix sum and the division is exact iff every line sums to 0.
    pub fn div_one_minus(&self, w: &GradedWeight) -> Option<LaurentPoly> {
        if w.is_unit() {
            return None;
        }
        // position of a monomial along the line generated by w
        let (axis, step) = if w.q != 0 {
            (None, w.q)
        } else {
            let j = w.z.iter().position(|&m| m != 0).expect("nonunit weight");
            (Some(j), w.z[j])
        };
        let mut lines: BTreeMap<GradedWeight, Vec<(i64, BigRational)>> = BTreeMap::new();
        for (x, c) in &self.terms {
            let coord = match axis {
                None => x.q,
                Some(j) => x.z[j],
            };
            let t = coord.div_euclid(step);
            let rep = x - &w.scaled(t);
            lines.entry(rep).or_default().push((t, c.clone()));
        }
        let mut out = LaurentPoly::zero(self.rank);
        for (rep, entries) in lines {
            let mut by_t: BTreeMap<i64, BigRational> = BTreeMap::new();
            for (t, c) in entries {
                *by_t.entry(t).or_insert_with(BigRational::zero) += c;
            }
            let t_min = *by_t.keys().next().expect("nonempty line");
            let t_max = *by_t.keys().next_back().expect("nonempty line");
            let mut acc = BigRational::zero();
            for t in t_min..t_max {
                if let Some(c) = by_t.get(&t) {
                    acc += c;
                }
                if !acc.is_zero() {
                    out.add_term(&rep + &w.scaled(t), acc.clone());
                }
            }
            acc += &by_t[&t_max];
            if !acc.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// All coefficients are nonnegative integers.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Apply `f` to every z-exponent, summing collisions.
    pub fn map_z<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(GradedWeight::new(w.q, f(&w.z)), c.clone());
        }
        out
    }

    /// Coefficient of `z^μ` as a Laurent polynomial in `q` alone (rank-0 result
    /// represented with the same rank and `z = 0`).
    pub fn z_coefficient(&self, mu: &[i64]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (w, c) in &self.terms {
            if w.z == mu {
                out.add_term(GradedWeight::new(w.q, vec![0; self.rank]), c.clone());
            }
        }
        out
    }

    /// Specialize `q = 0`; requires no negative q-exponents.
    pub fn at_q_zero(&self) -> Option<LaurentPoly> {
        if self.min_q().map(|q| q < 0).unwrap_or(false) {
            return None;
        }
        Some(LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().filter(|(w, _)| w.q == 0).map(|(w, c)| (w.clone(), c.clone())).collect(),
        })
    }

    /// Group by q-degree.
    pub fn by_q_degree(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.q).or_insert_with(|| LaurentPoly::zero(self.rank)).add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in sum");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term_ref(w, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_truncated(rhs, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(q: i64, z: &[i64]) -> GradedWeight {
        GradedWeight::new(q, z.to_vec())
    }

    fn p(terms: &[(i64, &[i64], i64)]) -> LaurentPoly {
        let rank = terms.first().map(|t| t.1.len()).unwrap_or(1);
        LaurentPoly::from_terms(rank, terms.iter().map(|(q, z, c)| (w(*q, z), int(*c))))
    }

    #[test]
    fn product_examples() {
        let a = p(&[(0, &[0], 1), (1, &[1], 1)]);
        let b = p(&[(0, &[0], 1), (1, &[1], -1)]);
        assert_eq!(&a * &b, p(&[(0, &[0], 1), (2, &[2], -1)]));
        assert_eq!(&a * &LaurentPoly::one(1), a);
        let s = p(&[(0, &[1], 1), (0, &[-1], 1)]);
        assert_eq!(&s * &s, p(&[(0, &[2], 1), (0, &[0], 2), (0, &[-2], 1)]));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = p(&[(0, &[0], 1)]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn exact_division_by_one_minus() {
        let m = w(1, &[1]);
        let a = p(&[(0, &[0], 1), (3, &[2], 5), (1, &[0], -2)]);
        let prod = &a * &LaurentPoly::one_minus(&m);
        assert_eq!(prod.div_one_minus(&m), Some(a));
        // 1 + q z is not divisible by 1 - q z
        assert_eq!(p(&[(0, &[0], 1), (1, &[1], 1)]).div_one_minus(&m), None);
        // pure z direction
        let mz = w(0, &[2]);
        let b = p(&[(0, &[-1], 3), (2, &[4], 1)]);
        assert_eq!((&b * &LaurentPoly::one_minus(&mz)).div_one_minus(&mz), Some(b));
        assert_eq!(LaurentPoly::zero(1).div_one_minus(&m), Some(LaurentPoly::zero(1)));
    }
}
