//! Seifert matrix of the plumbed band surface, used as an independent check
//! on the Minkus formula and as the source of the classical signature.
//!
//! Nothing here looks at the ε-sequence: the Alexander polynomial is
//! `det(V - tVᵀ)` computed by exact elimination and interpolation, and the
//! signature is the inertia of `V + Vᵀ` found by congruence diagonalization.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{EvenCF, LaurentPoly};

/// Linking matrix of `k` plumbed bands: `b_i/2` on the diagonal, `1` just
/// above it, zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<BigInt>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| &self.entries[i][j] + &self.entries[j][i]).collect())
            .collect()
    }
}

pub fn seifert_matrix(cf: &EvenCF) -> Result<SeifertMatrix> {
    if cf.is_empty() {
        return Err(Error::EmptyExpansion);
    }
    let k = cf.len();
    let mut entries = vec![vec![BigInt::zero(); k]; k];
    for (i, b) in cf.entries.iter().enumerate() {
        if b.is_zero() || b.is_odd() {
            return Err(Error::InvalidBand(b.clone()));
        }
        entries[i][i] = b / 2;
        if i + 1 < k {
            entries[i][i + 1] = BigInt::one();
        }
    }
    Ok(SeifertMatrix { entries })
}

/// Genus of the plumbed surface, `k/2`.
pub fn seifert_genus(cf: &EvenCF) -> Result<usize> {
    if !cf.len().is_multiple_of(2) {
        return Err(Error::OddEntryCount(cf.len()));
    }
    Ok(cf.len() / 2)
}

/// `det(V - tVᵀ)` as a polynomial in `t`.
///
/// The determinant has degree at most `n`, so it is evaluated exactly at
/// `t = 0, 1, ..., n` and recovered by Newton interpolation.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> LaurentPoly {
    let n = v.size();

    let nonzero: Vec<(usize, usize, &BigInt)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| Some((i, j, &v.entries[i][j])).filter(|e| !e.2.is_zero()))
        .collect();
    let values: Vec<BigInt> = (0..=n)
        .map(|t| {
            let t = BigInt::from(t);
            let mut rows = vec![SparseRow::new(); n];
            for &(i, j, x) in &nonzero {
                *rows[i].entry(j).or_insert_with(BigInt::zero) += x;
                *rows[j].entry(i).or_insert_with(BigInt::zero) -= &t * x;
            }
            for row in rows.iter_mut() {
                row.retain(|_, x| !x.is_zero());
            }
            determinant(rows)
        })
        .collect();
    interpolate(&values)
}

type SparseRow = BTreeMap<usize, BigInt>;

/// Division-free elimination on sparse integer rows. A row with a nonzero
/// entry below the pivot is replaced by `pivot·row - lead·pivot_row`, which
/// multiplies the determinant by `pivot`; that factor is divided back out at
/// the end. Rows without such an entry are left alone, so banded matrices
/// stay cheap.
fn determinant(mut rows: Vec<SparseRow>) -> BigInt {
    let n = rows.len();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| rows[r].contains_key(&k)) else {
            return BigInt::zero();
        };
        if r != k {
            rows.swap(k, r);
            num = -num;
        }
        let (top, rest) = rows.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[&k];
        let mut touched = 0u32;
        for row in rest.iter_mut() {
            let Some(lead) = row.remove(&k) else { continue };
            touched += 1;
            for x in row.values_mut() {
                *x *= pivot;
            }
            for (&j, x) in pivot_row.range(k + 1..) {
                let slot = row.entry(j).or_insert_with(BigInt::zero);
                *slot -= &lead * x;
                if slot.is_zero() {
                    row.remove(&j);
                }
            }
        }
        // this step contributes pivot^(1 - touched)
        match touched {
            0 => num *= pivot,
            1 => {}
            _ => den *= num_traits::pow(pivot.clone(), touched as usize - 1),
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}

/// Integer-coefficient polynomial through `(i, values[i])` for
/// `i = 0..values.len()`.
fn interpolate(values: &[BigInt]) -> LaurentPoly {
    // Newton form Σ Δ^j f(0) · t(t-1)...(t-j+1) / j!, scaled by d! to stay integral
    let d = values.len().saturating_sub(1);
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    for _ in 0..values.len() {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // d!/j! for j = 0..=d
    let mut scale = vec![BigInt::one(); d + 1];
    for j in (0..d).rev() {
        scale[j] = &scale[j + 1] * (j + 1);
    }
    let mut acc = vec![BigInt::zero(); d + 1];
    let mut falling = vec![BigInt::one()];
    for (j, delta) in leading.iter().enumerate() {
        if !delta.is_zero() {
            let c = delta * &scale[j];
            for (e, f) in falling.iter().enumerate() {
                acc[e] += &c * f;
            }
        }
        // multiply by (t - j)
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (e, f) in falling.iter().enumerate() {
            next[e + 1] += f;
            next[e] -= f * j;
        }
        falling = next;
    }
    let total = scale[0].clone();
    LaurentPoly::from_terms(acc.into_iter().zip(0i64..).map(|(c, e)| {
        let (q, rem) = c.div_rem(&total);
        assert!(rem.is_zero(), "det(V - tV^T) has integer coefficients");
        (q, e)
    }))
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, computed by
/// symmetric row-and-column elimination over the rationals.
pub fn inertia(sym: &[Vec<BigInt>]) -> (usize, usize, usize) {
    let (pos, neg, zero, _) = congruence_diagonalize(sym);
    (pos, neg, zero)
}

fn congruence_diagonalize(sym: &[Vec<BigInt>]) -> (usize, usize, usize, BigRational) {
    let n = sym.len();
    let mut m: Vec<Vec<BigRational>> = sym
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut det = BigRational::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                // simultaneous row and column swap keeps the form congruent
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // add row/col j to row/col k: new diagonal is 2·m[k][j] ≠ 0
                for c in 0..n {
                    let add = m[j][c].clone();
                    m[k][c] += add;
                }
                for r in 0..n {
                    let add = m[r][j].clone();
                    m[r][k] += add;
                }
            }
        }
        let pivot = m[k][k].clone();
        if pivot.is_zero() {
            // row k is entirely zero beyond the processed block
            zero += 1;
            det = BigRational::zero();
            continue;
        }
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let row_k: Vec<(usize, BigRational)> = (k + 1..n)
            .filter(|&j| !m[k][j].is_zero())
            .map(|j| (j, m[k][j].clone()))
            .collect();
        for &(r, ref a) in &row_k {
            let factor = a / &pivot;
            for &(c, ref b) in &row_k {
                let delta = &factor * b;
                m[r][c] -= delta;
            }
        }
        for &(j, _) in &row_k {
            m[k][j] = BigRational::zero();
            m[j][k] = BigRational::zero();
        }
        det *= pivot;
    }
    (pos, neg, zero, det)
}

/// Exact determinant of a symmetric integer matrix.
pub fn symmetric_determinant(sym: &[Vec<BigInt>]) -> BigInt {
    let (_, _, _, det) = congruence_diagonalize(sym);
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Signature of `V + Vᵀ` (positive minus negative eigenvalue count).
pub fn signature_standard(v: &SeifertMatrix) -> Result<i64> {
    let (pos, neg, zero) = inertia(&v.symmetrized());
    if zero > 0 {
        return Err(Error::Internal("V + V^T is singular"));
    }
    Ok(pos as i64 - neg as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::minkus_alexander;
    use crate::num::{even_cf_expand, Fraction};
    use crate::two_bridge::enumerate_canonical;
    use proptest::prelude::*;

    fn matrix(entries: &[i64]) -> SeifertMatrix {
        seifert_matrix(&EvenCF::new(0, entries.iter().copied())).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn matrix_fixtures() {
        assert_eq!(matrix(&[-4, -4]).entries(), ints(&[&[-2, 1], &[0, -2]]));
        assert_eq!(matrix(&[-2, 2]).entries(), ints(&[&[-1, 1], &[0, 1]]));
        assert_eq!(matrix(&[-2, -8]).entries(), ints(&[&[-1, 1], &[0, -4]]));
        assert_eq!(seifert_matrix(&EvenCF::new(3, [])), Err(Error::EmptyExpansion));
        assert_eq!(
            seifert_matrix(&EvenCF::new(0, [3, 2])),
            Err(Error::InvalidBand(BigInt::from(3)))
        );
    }

    #[test]
    fn alexander_fixtures() {
        assert_eq!(alexander_from_seifert(&matrix(&[-4, -4])), LaurentPoly::from_coeffs(0, [4, -7, 4]));
        assert_eq!(alexander_from_seifert(&matrix(&[-2, 2])), LaurentPoly::from_coeffs(0, [-1, 3, -1]));
        assert_eq!(alexander_from_seifert(&matrix(&[-2, -2])), LaurentPoly::from_coeffs(0, [1, -1, 1]));
    }

    #[test]
    fn signature_fixtures() {
        assert_eq!(signature_standard(&matrix(&[-2, 2])).unwrap(), 0);
        assert_eq!(signature_standard(&matrix(&[-4, -4])).unwrap(), -2);
        assert_eq!(signature_standard(&matrix(&[-2, -8])).unwrap(), -2);
    }

    #[test]
    fn genus_fixtures() {
        assert_eq!(seifert_genus(&EvenCF::new(1, [-4, -4])).unwrap(), 1);
        assert_eq!(seifert_genus(&EvenCF::new(1, [-2, 2])).unwrap(), 1);
        assert_eq!(seifert_genus(&EvenCF::new(1, [-2, -8, -2, 2])).unwrap(), 2);
        assert_eq!(seifert_genus(&EvenCF::new(1, [-2])), Err(Error::OddEntryCount(1)));
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        // hyperbolic plane plus a negative line
        let m = ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -3]]);
        assert_eq!(inertia(&m), (1, 2, 0));
        assert_eq!(symmetric_determinant(&m), BigInt::from(3));
        let singular = ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(inertia(&singular), (1, 0, 1));
        assert_eq!(symmetric_determinant(&singular), BigInt::zero());
    }

    /// Cofactor expansion along the first row, independent of elimination.
    fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
        fn go(m: &[Vec<BigInt>], row: usize, cols: &[usize]) -> BigInt {
            if cols.is_empty() {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for (idx, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = &m[row][c] * go(m, row + 1, &rest);
                if idx % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let cols: Vec<usize> = (0..m.len()).collect();
        go(m, 0, &cols)
    }

    proptest! {
        #[test]
        fn determinant_matches_cofactor_det(entries in proptest::collection::vec(-4i64..=4, 1..=16)) {
            let n = (entries.len() as f64).sqrt() as usize;
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(entries[i * n + j])).collect())
                .collect();
            let sparse = m
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (j, x.clone()))
                        .collect()
                })
                .collect();
            prop_assert_eq!(determinant(sparse), cofactor_det(&m));
            let sym: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| &m[i][j] + &m[j][i]).collect()).collect();
            prop_assert_eq!(symmetric_determinant(&sym), cofactor_det(&sym));
        }
    }

    #[test]
    fn agrees_with_minkus_over_catalog() {
        for k in enumerate_canonical(99) {
            let cf = even_cf_expand(&k.slope()).unwrap();
            let v = seifert_matrix(&cf).unwrap();
            let seifert = alexander_from_seifert(&v).normalize_units().unwrap();
            let minkus = minkus_alexander(&k).unwrap().normalize_units().unwrap();
            assert_eq!(seifert, minkus, "{k}");
            assert_eq!(seifert.span(), Some(cf.len() as i64), "{k}");
            assert_eq!(symmetric_determinant(&v.symmetrized()).abs(), BigInt::from(k.q()), "{k}");
            assert_eq!(signature_standard(&v).unwrap() % 2, 0, "{k}");
        }
    }

    #[test]
    fn expansions_of_knot_fractions_have_even_length() {
        for q in (3..=999i64).step_by(2) {
            for p in 1..q {
                if p.gcd(&q) == 1 {
                    let cf = even_cf_expand(&Fraction::new(p, q).unwrap()).unwrap();
                    assert!(seifert_genus(&cf).is_ok(), "{p}/{q}");
                }
            }
        }
    }
}
