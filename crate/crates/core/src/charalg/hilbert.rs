use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{audit_homogeneity, CharAlgError, Monomial, WeightedPresentation};
use crate::exactalg::{GradedWeight, LaurentPoly, RationalCharacter};

/// `(1 - q^{k_r} z^{μ_r}) / Π_v (1 - q^{k_v} z^{μ_v})`.
pub fn hypersurface_series(p: &WeightedPresentation) -> Result<RationalCharacter, CharAlgError> {
    if p.relations.len() != 1 {
        return Err(CharAlgError::NotHypersurface(p.relations.len()));
    }
    audit_homogeneity(p)?;
    let num = LaurentPoly::one_minus(&p.relations[0].weight);
    denominators(p, num)
}

/// `1 / Π_v (1 - q^{k_v} z^{μ_v})` for a presentation without relations.
pub fn free_character(p: &WeightedPresentation) -> Result<RationalCharacter, CharAlgError> {
    if !p.relations.is_empty() {
        return Err(CharAlgError::NotFree);
    }
    audit_homogeneity(p)?;
    denominators(p, LaurentPoly::one(p.rank()))
}

fn denominators(p: &WeightedPresentation, num: LaurentPoly) -> Result<RationalCharacter, CharAlgError> {
    let mut r = RationalCharacter::from_poly(num);
    for v in &p.variables {
        r.push_factor(v.weight.clone()).map_err(|e| CharAlgError::Schema(e.to_string()))?;
    }
    Ok(r)
}

/// Monomials of q-degree `≤ bound`, grouped by multidegree.
fn monomials_by_degree(p: &WeightedPresentation, bound: i64) -> BTreeMap<GradedWeight, Vec<Monomial>> {
    fn rec(
        p: &WeightedPresentation,
        v: usize,
        left: i64,
        cur: &mut Monomial,
        out: &mut BTreeMap<GradedWeight, Vec<Monomial>>,
    ) {
        if v == p.variables.len() {
            out.entry(p.monomial_weight(cur)).or_default().push(cur.clone());
            return;
        }
        let k = p.variables[v].weight.q;
        for e in 0..=(left / k) {
            cur[v] = e as u32;
            rec(p, v + 1, left - e * k, cur, out);
        }
        cur[v] = 0;
    }
    let mut out = BTreeMap::new();
    let mut cur = vec![0; p.variables.len()];
    rec(p, 0, bound, &mut cur, &mut out);
    out
}

/// Rank of a list of sparse rows by incremental echelon reduction.
fn sparse_rank(rows: impl IntoIterator<Item = BTreeMap<usize, BigRational>>, cols: usize) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, BigRational>> = HashMap::new();
    for mut row in rows {
        if pivots.len() == cols {
            break;
        }
        while let Some((&c, v)) = row.iter().next() {
            let Some(piv) = pivots.get(&c) else {
                let inv = v.recip();
                for x in row.values_mut() {
                    *x *= &inv;
                }
                pivots.insert(c, row);
                break;
            };
            let v = v.clone();
            for (pc, pv) in piv {
                let e = row.entry(*pc).or_insert_with(BigRational::zero);
                *e -= &v * pv;
                if e.is_zero() {
                    row.remove(pc);
                }
            }
        }
    }
    pivots.len()
}

/// Dimension of each graded piece with q-degree `≤ bound`. Multidegrees that
/// carry monomials are listed even when the dimension is zero.
pub fn graded_hilbert_function(p: &WeightedPresentation, bound: i64) -> Result<BTreeMap<GradedWeight, u64>, CharAlgError> {
    audit_homogeneity(p)?;
    let groups = monomials_by_degree(p, bound);
    let out: Vec<(GradedWeight, u64)> = groups
        .par_iter()
        .map(|(w, basis)| {
            let col: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows = Vec::new();
            for r in &p.relations {
                let shift = w - &r.weight;
                let Some(multipliers) = groups.get(&shift) else {
                    continue;
                };
                for mult in multipliers {
                    let mut row = BTreeMap::new();
                    for (m, c) in &r.terms {
                        let prod: Monomial = m.iter().zip(mult).map(|(a, b)| a + b).collect();
                        let j = col[&prod];
                        let e = row.entry(j).or_insert_with(BigRational::zero);
                        *e += c;
                        if e.is_zero() {
                            row.remove(&j);
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
            let rank = sparse_rank(rows, basis.len());
            (w.clone(), (basis.len() - rank) as u64)
        })
        .collect();
    Ok(out.into_iter().collect())
}

/// The generating polynomial `Σ dim · q^k z^μ` of a Hilbert function.
pub fn hilbert_function_to_poly(rank: usize, dims: &BTreeMap<GradedWeight, u64>) -> LaurentPoly {
    LaurentPoly::from_terms(
        rank,
        dims.iter().filter(|(_, &d)| d > 0).map(|(w, &d)| (w.clone(), BigRational::from_integer(BigInt::from(d)))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::{Relation, Variable};
    use crate::exactalg::int;

    fn w(q: i64, z: &[i64]) -> GradedWeight {
        GradedWeight::new(q, z.to_vec())
    }

    fn xy(relations: Vec<Relation>) -> WeightedPresentation {
        WeightedPresentation::new(
            1,
            vec![Variable { name: "x".into(), weight: w(1, &[1]) }, Variable { name: "y".into(), weight: w(1, &[-1]) }],
            relations,
        )
        .unwrap()
    }

    #[test]
    fn free_ring_dims() {
        let h = graded_hilbert_function(&xy(vec![]), 2).unwrap();
        assert_eq!(h[&w(1, &[1])], 1);
        assert_eq!(h[&w(1, &[-1])], 1);
        let q2: u64 = h.iter().filter(|(k, _)| k.q == 2).map(|(_, d)| d).sum();
        assert_eq!(q2, 3);
    }

    #[test]
    fn killed_product() {
        let rel = Relation { weight: w(2, &[0]), terms: vec![(vec![1, 1], int(1))] };
        let h = graded_hilbert_function(&xy(vec![rel]), 2).unwrap();
        assert_eq!(h[&w(2, &[2])], 1);
        assert_eq!(h[&w(2, &[-2])], 1);
        assert_eq!(h[&w(2, &[0])], 0);
    }

    #[test]
    fn quotient_by_a_variable() {
        let p = WeightedPresentation::new(
            1,
            vec![Variable { name: "x".into(), weight: w(1, &[0]) }],
            vec![Relation { weight: w(1, &[0]), terms: vec![(vec![1], int(1))] }],
        )
        .unwrap();
        let h = hypersurface_series(&p).unwrap();
        assert!(h.rc_equal(&RationalCharacter::one(1)));
        assert_eq!(graded_hilbert_function(&p, 4).unwrap()[&w(1, &[0])], 0);
    }

    #[test]
    fn inhomogeneous_relation_is_rejected() {
        let rel = Relation { weight: w(2, &[0]), terms: vec![(vec![1, 1], int(1)), (vec![2, 0], int(1))] };
        assert!(matches!(
            graded_hilbert_function(&xy(vec![rel]), 2),
            Err(CharAlgError::InhomogeneousRelation { index: 0, term: 1, .. })
        ));
    }

    #[test]
    fn not_hypersurface() {
        assert_eq!(hypersurface_series(&xy(vec![])), Err(CharAlgError::NotHypersurface(0)));
    }
}
