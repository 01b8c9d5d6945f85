//! Reduced Burau representation over Z[t, t⁻¹].

use crate::braid::BraidWord;
use crate::poly::LaurentPoly;

/// Square matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = LaurentPoly::one();
        }
        PolyMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Right multiplication by the image of one letter. The reduced Burau
    /// image of σ_i differs from the identity only in column i, so this is a
    /// single column update.
    pub fn apply_letter(&mut self, letter: i32) {
        let d = self.dim;
        let i = letter.unsigned_abs() as usize - 1;
        let t = LaurentPoly::monomial(1, 1);
        let t_inv = LaurentPoly::monomial(1, -1);
        // coefficients of column i of the generator image: (left, diag, right)
        let (left, diag, right) = if letter > 0 {
            (t.clone(), -&t, LaurentPoly::one())
        } else {
            (LaurentPoly::one(), -&t_inv, t_inv.clone())
        };
        for r in 0..d {
            let mut v = self.get(r, i) * &diag;
            if i > 0 {
                v.add_mul_assign(self.get(r, i - 1), &left);
            }
            if i + 1 < d {
                v.add_mul_assign(self.get(r, i + 1), &right);
            }
            self.set(r, i, v);
        }
    }

    pub(crate) fn restore_column(&mut self, col: usize, values: Vec<LaurentPoly>) {
        for (r, v) in values.into_iter().enumerate() {
            self.set(r, col, v);
        }
    }

    /// `self − I`.
    pub fn minus_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let v = self.get(i, i) - &LaurentPoly::one();
            out.set(i, i, v);
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = PolyMatrix { dim: d, entries: vec![LaurentPoly::zero(); d * d] };
        for r in 0..d {
            for c in 0..d {
                let mut acc = LaurentPoly::zero();
                for k in 0..d {
                    acc.add_mul_assign(self.get(r, k), other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Substitutes t = 1 into every entry.
    pub fn at_one(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).eval_at_one()).collect())
            .collect()
    }

    /// Fraction-free (Bareiss) determinant; every division is exact.
    pub fn determinant(&self) -> LaurentPoly {
        let d = self.dim;
        match d {
            0 => return LaurentPoly::one(),
            1 => return self.get(0, 0).clone(),
            2 => {
                return &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0));
            }
            _ => {}
        }
        let mut m: Vec<Vec<LaurentPoly>> = (0..d)
            .map(|r| (0..d).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..d - 1 {
            if m[k][k].is_zero() {
                match (k + 1..d).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss elimination step must divide exactly");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[d - 1][d - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Reduced Burau image of the word, multiplied left to right.
pub fn burau_reduced(w: &BraidWord) -> PolyMatrix {
    let mut m = PolyMatrix::identity(w.strands().saturating_sub(1));
    for &l in w.letters() {
        m.apply_letter(l);
    }
    m
}

/// 1 + t + ... + t^{n-1}.
pub fn strand_polynomial(n: usize) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, vec![1; n.max(1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_identity() {
        assert!(burau_reduced(&BraidWord::empty(3)).is_identity());
    }

    #[test]
    fn word_times_inverse_is_identity() {
        let w: BraidWord = "B4:1,-2,3,3,-1,2".parse().unwrap();
        assert!(burau_reduced(&w.concat(&w.inverse())).is_identity());
    }

    #[test]
    fn braid_relation_holds() {
        let a: BraidWord = "B4:1,2,1".parse().unwrap();
        let b: BraidWord = "B4:2,1,2".parse().unwrap();
        assert_eq!(burau_reduced(&a), burau_reduced(&b));
        let c: BraidWord = "B4:1,3".parse().unwrap();
        let d: BraidWord = "B4:3,1".parse().unwrap();
        assert_eq!(burau_reduced(&c), burau_reduced(&d));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let w: BraidWord = "B5:1,-2,3,-4,2,2,-3,1".parse().unwrap();
        let m = burau_reduced(&w).minus_identity();
        fn cofactor(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> LaurentPoly {
            if rows.is_empty() {
                return LaurentPoly::one();
            }
            let mut acc = LaurentPoly::zero();
            for (k, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = cofactor(m, &rows[1..], &rest);
                let term = m.get(rows[0], c) * &minor;
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let idx: Vec<usize> = (0..4).collect();
        assert_eq!(m.determinant(), cofactor(&m, &idx, &idx));
    }
}
