//! Kauffman bracket of a closed braid through the Temperley–Lieb algebra.
//!
//! The sweep state is an integer-Laurent combination of planar matchings of
//! the 2n boundary points (n on top, n on the bottom). Each letter multiplies
//! on the right by `A·1 + A⁻¹·e_i` (σ_i) or `A⁻¹·1 + A·e_i` (σ_i⁻¹); the
//! closure then pairs top point j with bottom point j and every closed loop
//! costs a factor δ = −A² − A⁻².

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::braid::BraidWord;
use crate::poly::LaurentPoly;

/// All planar matchings on n strands plus right-multiplication tables.
#[derive(Debug)]
pub struct TlBasis {
    strands: usize,
    diagrams: Vec<Vec<u8>>,
    /// `right[i][d]` = (index of d·e_{i+1}, loops created)
    right: Vec<Vec<(u32, u8)>>,
    /// loops in the closure of each diagram
    trace_loops: Vec<u32>,
}

impl TlBasis {
    pub fn build(strands: usize) -> Self {
        let n = strands;
        let identity: Vec<u8> = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect();
        let generators: Vec<Vec<u8>> = (1..n).map(|i| cup_cap(n, i)).collect();
        let mut index: HashMap<Vec<u8>, u32> = HashMap::new();
        let mut diagrams = vec![identity.clone()];
        index.insert(identity, 0);
        let mut right: Vec<Vec<(u32, u8)>> = vec![Vec::new(); n.saturating_sub(1)];
        let mut cursor = 0;
        while cursor < diagrams.len() {
            let d = diagrams[cursor].clone();
            for (g, e) in generators.iter().enumerate() {
                let (prod, loops) = compose(n, &d, e);
                let next = index.len() as u32;
                let id = *index.entry(prod.clone()).or_insert_with(|| {
                    diagrams.push(prod);
                    next
                });
                right[g].push((id, loops as u8));
            }
            cursor += 1;
        }
        let trace_loops = diagrams.iter().map(|d| closure_loops(n, d)).collect();
        TlBasis { strands: n, diagrams, right, trace_loops }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

static BASES: OnceLock<Mutex<HashMap<usize, Arc<TlBasis>>>> = OnceLock::new();

/// Shared, lazily built basis for `strands`.
pub fn basis(strands: usize) -> Arc<TlBasis> {
    let cache = BASES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&strands) {
        return b.clone();
    }
    let built = Arc::new(TlBasis::build(strands));
    cache.lock().unwrap().entry(strands).or_insert(built).clone()
}

/// e_i on n strands: top i−1 ↔ top i, bottom i−1 ↔ bottom i, rest vertical.
fn cup_cap(n: usize, i: usize) -> Vec<u8> {
    let mut d: Vec<u8> = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect();
    let (a, b) = (i - 1, i);
    d[a] = b as u8;
    d[b] = a as u8;
    d[n + a] = (n + b) as u8;
    d[n + b] = (n + a) as u8;
    d
}

/// Stacks `top` over `bottom`; returns the matching and the number of loops
/// closed off in the middle.
fn compose(n: usize, top: &[u8], bottom: &[u8]) -> (Vec<u8>, usize) {
    let mut out = vec![0u8; 2 * n];
    let mut middle_seen = vec![false; n];
    // walk from an outer point to its partner outer point
    let walk = |start_top: bool, start: usize, middle_seen: &mut Vec<bool>| -> usize {
        let mut in_top = start_top;
        let mut p = start;
        loop {
            let q = if in_top { top[p] as usize } else { bottom[p] as usize };
            if in_top {
                if q < n {
                    return q;
                }
                let j = q - n;
                middle_seen[j] = true;
                in_top = false;
                p = j;
            } else {
                if q >= n {
                    return q;
                }
                middle_seen[q] = true;
                in_top = true;
                p = q + n;
            }
        }
    };
    for p in 0..2 * n {
        let from_top = p < n;
        let end = walk(from_top, p, &mut middle_seen);
        out[p] = end as u8;
    }
    let mut loops = 0;
    for j in 0..n {
        if middle_seen[j] {
            continue;
        }
        loops += 1;
        // follow the closed component through the middle points
        let mut m = j;
        loop {
            middle_seen[m] = true;
            let below = bottom[m] as usize;
            debug_assert!(below < n);
            middle_seen[below] = true;
            let above = top[below + n] as usize - n;
            if middle_seen[above] {
                break;
            }
            m = above;
        }
    }
    (out, loops)
}

fn closure_loops(n: usize, d: &[u8]) -> u32 {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            let q = d[p] as usize;
            seen[q] = true;
            // closure strand joins top j with bottom j
            p = if q < n { q + n } else { q - n };
        }
    }
    loops
}

fn delta() -> LaurentPoly {
    LaurentPoly::from_coeffs(-2, vec![-1, 0, 0, 0, -1])
}

/// Bracket of the closure, normalized so the unknot is 1, as a polynomial in A.
pub fn kauffman_bracket(w: &BraidWord) -> LaurentPoly {
    let basis = basis(w.strands());
    let delta = delta();
    let a = LaurentPoly::monomial(1, 1);
    let a_inv = LaurentPoly::monomial(1, -1);
    let a_inv_delta = &a_inv * &delta;
    let a_delta = &a * &delta;

    let mut state: Vec<LaurentPoly> = vec![LaurentPoly::zero(); basis.len()];
    state[0] = LaurentPoly::one();
    let mut next: Vec<LaurentPoly> = vec![LaurentPoly::zero(); basis.len()];
    for &l in w.letters() {
        let g = l.unsigned_abs() as usize - 1;
        let (keep, join, join_loop) = if l > 0 {
            (&a, &a_inv, &a_inv_delta)
        } else {
            (&a_inv, &a, &a_delta)
        };
        for slot in next.iter_mut() {
            *slot = LaurentPoly::zero();
        }
        for (d, coeff) in state.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            next[d].add_mul_assign(coeff, keep);
            let (target, loops) = basis.right[g][d];
            let factor = if loops == 0 { join } else { join_loop };
            next[target as usize].add_mul_assign(coeff, factor);
        }
        std::mem::swap(&mut state, &mut next);
    }
    let mut total = LaurentPoly::zero();
    for (d, coeff) in state.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let loops = basis.trace_loops[d];
        total.add_mul_assign(coeff, &delta.pow(loops - 1));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=7 {
            assert_eq!(TlBasis::build(n).len(), catalan[n], "n = {n}");
        }
    }

    #[test]
    fn generator_relations() {
        let n = 4;
        let e1 = cup_cap(n, 1);
        let e2 = cup_cap(n, 2);
        let (sq, loops) = compose(n, &e1, &e1);
        assert_eq!((sq.as_slice(), loops), (e1.as_slice(), 1));
        let (a, _) = compose(n, &e1, &e2);
        let (aba, loops) = compose(n, &a, &e1);
        assert_eq!((aba.as_slice(), loops), (e1.as_slice(), 0));
    }

    #[test]
    fn small_brackets() {
        assert_eq!(kauffman_bracket(&BraidWord::empty(1)), LaurentPoly::one());
        let one: BraidWord = "B2:1".parse().unwrap();
        assert_eq!(kauffman_bracket(&one), LaurentPoly::monomial(-1, 3));
        let two_loops = kauffman_bracket(&BraidWord::empty(2));
        assert_eq!(two_loops, delta());
    }
}
