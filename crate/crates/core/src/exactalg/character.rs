use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::laurent::{GradedWeight, LaurentPoly};
use super::ExactAlgError;

/// `num / Π (1 - q^k z^μ)` with the denominator kept as a multiset of
/// factors. Factors are non-units with `k ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCharacter {
    num: LaurentPoly,
    den: BTreeMap<GradedWeight, u32>,
}

impl RationalCharacter {
    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalCharacter { num, den: BTreeMap::new() }
    }

    pub fn zero(rank: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(rank))
    }

    pub fn one(rank: usize) -> Self {
        Self::from_poly(LaurentPoly::one(rank))
    }

    pub fn new<I: IntoIterator<Item = GradedWeight>>(num: LaurentPoly, den: I) -> Result<Self, ExactAlgError> {
        let mut r = Self::from_poly(num);
        for f in den {
            r.push_factor(f)?;
        }
        Ok(r)
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator factors with multiplicity, canonical order.
    pub fn den(&self) -> impl Iterator<Item = (&GradedWeight, u32)> {
        self.den.iter().map(|(w, m)| (w, *m))
    }

    /// Denominator factors listed one per multiplicity.
    pub fn den_factors(&self) -> Vec<GradedWeight> {
        self.den.iter().flat_map(|(w, m)| std::iter::repeat(w.clone()).take(*m as usize)).collect()
    }

    pub fn den_len(&self) -> usize {
        self.den.values().map(|&m| m as usize).sum()
    }

    pub fn has_factor(&self, w: &GradedWeight) -> bool {
        self.den.contains_key(w)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divide by `1 - q^k z^μ`.
    pub fn push_factor(&mut self, w: GradedWeight) -> Result<(), ExactAlgError> {
        if w.is_unit() || w.q < 0 {
            return Err(ExactAlgError::InvalidFactor { q: w.q, z: w.z });
        }
        if w.rank() != self.rank() {
            return Err(ExactAlgError::RankMismatch { left: self.rank(), right: w.rank() });
        }
        *self.den.entry(w).or_insert(0) += 1;
        Ok(())
    }

    pub fn with_factor(mut self, w: GradedWeight) -> Result<Self, ExactAlgError> {
        self.push_factor(w)?;
        Ok(self)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RationalCharacter { num: &self.num * p, den: self.den.clone() }
    }

    pub fn mul(&self, other: &RationalCharacter) -> Self {
        let mut den = self.den.clone();
        for (w, m) in &other.den {
            *den.entry(w.clone()).or_insert(0) += m;
        }
        RationalCharacter { num: &self.num * &other.num, den }
    }

    pub fn neg(&self) -> Self {
        RationalCharacter { num: -&self.num, den: self.den.clone() }
    }

    /// Product of the factors in `den` as a polynomial.
    fn expand_den(rank: usize, den: &BTreeMap<GradedWeight, u32>) -> LaurentPoly {
        let mut acc = LaurentPoly::one(rank);
        for (w, m) in den {
            acc = &acc * &LaurentPoly::one_minus(w).pow(*m);
        }
        acc
    }

    /// Denominator multiplied out.
    pub fn den_poly(&self) -> LaurentPoly {
        Self::expand_den(self.rank(), &self.den)
    }

    /// Sum over the common denominator (multiset union of the two factor
    /// multisets). No cancellation is attempted.
    pub fn add(&self, other: &RationalCharacter) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in sum");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut common = self.den.clone();
        for (w, m) in &other.den {
            let e = common.entry(w.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let missing = |den: &BTreeMap<GradedWeight, u32>| -> BTreeMap<GradedWeight, u32> {
            common
                .iter()
                .filter_map(|(w, m)| {
                    let have = den.get(w).copied().unwrap_or(0);
                    (*m > have).then(|| (w.clone(), m - have))
                })
                .collect()
        };
        let left = &self.num * &Self::expand_den(self.rank(), &missing(&self.den));
        let right = &other.num * &Self::expand_den(self.rank(), &missing(&other.den));
        RationalCharacter { num: &left + &right, den: common }
    }

    pub fn sub(&self, other: &RationalCharacter) -> Self {
        self.add(&other.neg())
    }

    /// `a = b` iff `a.num · Π b.den = b.num · Π a.den`, after removing the
    /// factors the two denominators share.
    pub fn rc_equal(&self, other: &RationalCharacter) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        let mut only_a = BTreeMap::new();
        let mut only_b = BTreeMap::new();
        for (w, m) in &self.den {
            let k = other.den.get(w).copied().unwrap_or(0);
            if *m > k {
                only_a.insert(w.clone(), m - k);
            }
        }
        for (w, m) in &other.den {
            let k = self.den.get(w).copied().unwrap_or(0);
            if *m > k {
                only_b.insert(w.clone(), m - k);
            }
        }
        let lhs = &self.num * &Self::expand_den(self.rank(), &only_b);
        let rhs = &other.num * &Self::expand_den(self.rank(), &only_a);
        lhs == rhs
    }

    /// Divide the numerator by every denominator factor that divides it
    /// exactly. Best effort; the value is unchanged.
    pub fn cancel_common_factors(&mut self) {
        loop {
            let mut progressed = false;
            let factors: Vec<GradedWeight> = self.den.keys().cloned().collect();
            for w in factors {
                if self.num.is_zero() {
                    break;
                }
                if let Some(quot) = self.num.div_one_minus(&w) {
                    self.num = quot;
                    let m = self.den.get_mut(&w).expect("factor present");
                    *m -= 1;
                    if *m == 0 {
                        self.den.remove(&w);
                    }
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        if self.num.is_zero() {
            self.den.clear();
        }
    }

    pub fn cancelled(mut self) -> Self {
        self.cancel_common_factors();
        self
    }

    /// q-adic expansion truncated to q-degree `≤ bound`.
    pub fn series_expand(&self, bound: i64) -> Result<LaurentPoly, ExactAlgError> {
        if let Some((w, _)) = self.den.iter().find(|(w, _)| w.q <= 0) {
            return Err(ExactAlgError::NonExpandable { q: w.q, z: w.z.clone() });
        }
        let rank = self.rank();
        let Some(num_min) = self.num.min_q() else {
            return Ok(LaurentPoly::zero(rank));
        };
        let inner_bound = bound - num_min;
        let mut acc = LaurentPoly::one(rank);
        for (w, m) in &self.den {
            // Σ_{j ≥ 0} (q^k z^μ)^j truncated
            let mut geo = LaurentPoly::zero(rank);
            let mut j = 0;
            while w.q * j <= inner_bound {
                geo.add_term(w.scaled(j), BigRational::one());
                j += 1;
            }
            for _ in 0..*m {
                acc = acc.mul_truncated(&geo, Some(inner_bound));
            }
        }
        Ok(self.num.mul_truncated(&acc, Some(bound)).truncate(bound))
    }

    /// Apply `f` to every z-exponent of numerator and factors.
    pub fn map_z<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> Self {
        let mut den = BTreeMap::new();
        for (w, m) in &self.den {
            *den.entry(GradedWeight::new(w.q, f(&w.z))).or_insert(0) += m;
        }
        RationalCharacter { num: self.num.map_z(&f), den }
    }
}

impl From<LaurentPoly> for RationalCharacter {
    fn from(p: LaurentPoly) -> Self {
        RationalCharacter::from_poly(p)
    }
}
