//! Independent reference implementations used as test oracles.
//!
//! Polynomials here are plain `BTreeMap<exponent, coefficient>` maps so the
//! oracles share no arithmetic with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use braidrank::{BraidWord, LaurentPoly};
use rand::Rng;

pub type Poly = BTreeMap<i32, i64>;

pub fn to_map(p: &LaurentPoly) -> Poly {
    let mut m = Poly::new();
    for (i, &c) in p.coeffs().iter().enumerate() {
        if c != 0 {
            m.insert(p.min_degree() + i as i32, c);
        }
    }
    m
}

fn clean(mut p: Poly) -> Poly {
    p.retain(|_, c| *c != 0);
    p
}

pub fn mono(c: i64, e: i32) -> Poly {
    clean(Poly::from([(e, c)]))
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (&e, &c) in b {
        *out.entry(e).or_insert(0) += c;
    }
    clean(out)
}

pub fn neg(a: &Poly) -> Poly {
    a.iter().map(|(&e, &c)| (e, -c)).collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    clean(out)
}

pub fn pow(a: &Poly, k: u32) -> Poly {
    (0..k).fold(mono(1, 0), |acc, _| mul(&acc, a))
}

/// Exact division of Laurent polynomials by long division from the top.
pub fn div_exact(num: &Poly, den: &Poly) -> Option<Poly> {
    let (&dt, &dc) = den.iter().next_back()?;
    let floor = num.keys().next().copied().unwrap_or(0) - den.keys().next().copied()?;
    let mut rem = num.clone();
    let mut q = Poly::new();
    while let Some((&rt, &rc)) = rem.iter().next_back() {
        if rc % dc != 0 || rt - dt < floor {
            return None;
        }
        let term = mono(rc / dc, rt - dt);
        rem = add(&rem, &neg(&mul(&term, den)));
        q = add(&q, &term);
    }
    Some(q)
}

/// Shifts to be symmetric about degree 0 and scales so p(1) = 1.
pub fn normalize_alexander(p: &Poly) -> Poly {
    let lo = *p.keys().next().unwrap();
    let hi = *p.keys().next_back().unwrap();
    assert_eq!((hi - lo) % 2, 0, "knot Alexander polynomial has even span");
    let shift = -(lo + hi) / 2;
    let sum: i64 = p.values().sum();
    assert!(sum == 1 || sum == -1, "unit at t = 1");
    p.iter().map(|(&e, &c)| (e + shift, c * sum)).collect()
}

/// Kauffman bracket by summing over all 2^c smoothings of the closed braid
/// diagram and counting loops with a union-find. Normalized so a single
/// circle has bracket 1. Smoothing convention: for σ_i the A-smoothing
/// joins each strand to itself (vertical), for σ_i⁻¹ it joins the two
/// strands across (horizontal).
pub fn state_sum_bracket(strands: usize, letters: &[i32]) -> Poly {
    let n = strands;
    let c = letters.len();
    let node = |t: usize, p: usize| (t % (c + 1).max(1)) * n + p;
    let total = (c + 1) * n;
    let delta = add(&mono(-1, 2), &mono(-1, -2));
    let mut out = Poly::new();
    for state in 0u64..(1u64 << c) {
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        let mut a_count = 0i32;
        for (t, &l) in letters.iter().enumerate() {
            let g = l.unsigned_abs() as usize - 1;
            for p in 0..n {
                if p != g && p != g + 1 {
                    union(node(t, p), node(t + 1, p));
                }
            }
            let a_smoothing = state >> t & 1 == 0;
            let vertical = a_smoothing == (l > 0);
            if a_smoothing {
                a_count += 1;
            } else {
                a_count -= 1;
            }
            if vertical {
                union(node(t, g), node(t + 1, g));
                union(node(t, g + 1), node(t + 1, g + 1));
            } else {
                union(node(t, g), node(t, g + 1));
                union(node(t + 1, g), node(t + 1, g + 1));
            }
        }
        for p in 0..n {
            union(node(c, p), node(0, p));
        }
        let mut roots: Vec<usize> = (0..total).map(|x| find(&mut parent, x)).collect();
        roots.sort();
        roots.dedup();
        let loops = roots.len() as u32;
        out = add(&out, &mul(&mono(1, a_count), &pow(&delta, loops - 1)));
    }
    out
}

fn zeros(n: usize) -> Vec<Vec<Poly>> {
    vec![vec![Poly::new(); n]; n]
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Poly::new();
            for k in 0..n {
                acc = add(&acc, &mul(&a[i][k], &b[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return mono(1, 0);
    }
    let mut acc = Poly::new();
    for col in 0..n {
        if m[0][col].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, v)| v.clone()).collect()).collect();
        let term = mul(&m[0][col], &cofactor_det(&minor));
        acc = if col % 2 == 0 { add(&acc, &term) } else { add(&acc, &neg(&term)) };
    }
    acc
}

/// Alexander polynomial from the unreduced n × n Burau matrix, which is the
/// Fox Jacobian of the closed braid presentation: any (n−1)-minor of I − B
/// is the Alexander polynomial up to a unit.
pub fn unreduced_burau_alexander(strands: usize, letters: &[i32]) -> Poly {
    let n = strands;
    let mut b = zeros(n);
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = mono(1, 0);
    }
    for &l in letters {
        let g = l.unsigned_abs() as usize - 1;
        let mut gen = zeros(n);
        for (i, row) in gen.iter_mut().enumerate() {
            if i != g && i != g + 1 {
                row[i] = mono(1, 0);
            }
        }
        if l > 0 {
            gen[g][g] = add(&mono(1, 0), &mono(-1, 1));
            gen[g][g + 1] = mono(1, 1);
            gen[g + 1][g] = mono(1, 0);
        } else {
            gen[g][g + 1] = mono(1, 0);
            gen[g + 1][g] = mono(1, -1);
            gen[g + 1][g + 1] = add(&mono(1, 0), &mono(-1, -1));
        }
        b = mat_mul(&b, &gen);
    }
    let minor: Vec<Vec<Poly>> = (1..n)
        .map(|i| (1..n).map(|j| add(&if i == j { mono(1, 0) } else { Poly::new() }, &neg(&b[i][j]))).collect())
        .collect();
    if n == 1 {
        return mono(1, 0);
    }
    normalize_alexander(&cofactor_det(&minor))
}

/// Alexander polynomial of the (p, q) torus knot.
pub fn torus_alexander(p: i32, q: i32) -> Poly {
    let num = mul(&add(&mono(1, p * q), &mono(-1, 0)), &add(&mono(1, 1), &mono(-1, 0)));
    let den = mul(&add(&mono(1, p), &mono(-1, 0)), &add(&mono(1, q), &mono(-1, 0)));
    normalize_alexander(&div_exact(&num, &den).expect("torus knot quotient is a polynomial"))
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, length: usize) -> BraidWord {
    let letters: Vec<i32> = (0..length)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

/// Random word with knot closure, 2 ≤ strands ≤ max_strands.
pub fn random_knot_word<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=max_strands);
        let c = rng.gen_range(0..=max_len);
        let w = random_word(rng, n, c);
        if w.is_knot() {
            return w;
        }
    }
}

/// Components of the closure by following each strand through the word.
pub fn closure_components(strands: usize, letters: &[i32]) -> usize {
    let mut seen = vec![false; strands];
    let mut count = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            for &l in letters {
                let g = l.unsigned_abs() as usize - 1;
                if p == g {
                    p = g + 1;
                } else if p == g + 1 {
                    p = g;
                }
            }
        }
    }
    count
}

/// One random Markov move or closure-preserving rewrite; stabilization is
/// skipped once the word has `max_strands` strands.
pub fn random_move<R: Rng>(rng: &mut R, w: &BraidWord, max_strands: usize) -> BraidWord {
    match rng.gen_range(0..6) {
        0 => w.cyclic_rotate(rng.gen_range(-8..=8)),
        1 if w.strands() < max_strands => w.stabilize(rng.gen_bool(0.5)),
        1 => w.clone(),
        2 => w.destabilize().unwrap_or_else(|| w.clone()),
        3 => w.free_reduce(),
        4 => w.canonical_form(),
        _ => {
            // conjugation by a random generator
            if w.strands() < 2 {
                return w.clone();
            }
            let g = rng.gen_range(1..w.strands() as i32);
            let g = if rng.gen_bool(0.5) { g } else { -g };
            let mut letters = vec![g];
            letters.extend_from_slice(w.letters());
            letters.push(-g);
            BraidWord::new(w.strands(), letters).unwrap()
        }
    }
}
