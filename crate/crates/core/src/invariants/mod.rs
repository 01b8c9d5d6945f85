//! Exact invariants of braid closures.
//!
//! * Seifert surface of the closed braid (n disks, c bands).
//! * Alexander polynomial from the reduced Burau matrix.
//! * Kauffman bracket and Jones polynomial through a Temperley–Lieb sweep.
//!
//! Conventions: the Alexander polynomial is symmetric with Δ(1) = 1, and the
//! Jones polynomial of the closure of σ₁³ (right-handed trefoil) is
//! −q⁴ + q³ + q.

pub mod burau;
pub mod temperley_lieb;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

pub use burau::{burau_reduced, strand_polynomial, PolyMatrix};
pub use temperley_lieb::kauffman_bracket;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotFingerprint {
    pub alexander: LaurentPoly,
    pub jones: LaurentPoly,
}

impl KnotFingerprint {
    /// Fingerprint of the mirror knot.
    pub fn mirror(&self) -> KnotFingerprint {
        KnotFingerprint { alexander: self.alexander.clone(), jones: self.jones.mirror() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub circles: usize,
    pub bands: usize,
    pub genus: usize,
}

fn require_knot(w: &BraidWord) -> Result<()> {
    let components = w.component_count();
    if components == 1 {
        Ok(())
    } else {
        Err(Error::NotAKnot { word: w.to_string(), components })
    }
}

/// Genus (1 + c − n)/2 of the surface built from n disks and c bands.
pub fn seifert_surface(w: &BraidWord) -> Result<SurfaceData> {
    require_knot(w)?;
    let (circles, bands) = (w.strands(), w.len());
    debug_assert_eq!((1 + bands - circles) % 2, 0);
    Ok(SurfaceData { circles, bands, genus: (1 + bands - circles) / 2 })
}

/// Knot genus read off a homogeneous word: its closed-braid surface is a
/// fibre surface, hence of minimal genus.
pub fn homogeneous_genus(w: &BraidWord) -> Result<usize> {
    if !w.classify().homogeneous {
        return Err(Error::Precondition(format!("{w} is not homogeneous")));
    }
    Ok(seifert_surface(w)?.genus)
}

/// Alexander polynomial from the unreduced Burau determinant
/// det(B − I) = ±t^k (1 + ... + t^{n−1}) Δ(t), given the reduced matrix.
pub fn alexander_from_burau(strands: usize, burau: &PolyMatrix) -> LaurentPoly {
    let det = burau.minus_identity().determinant();
    let quotient = det
        .div_exact(&strand_polynomial(strands))
        .expect("Burau determinant must be divisible by 1 + t + ... + t^(n-1)");
    quotient
        .normalize_symmetric()
        .expect("knot Alexander polynomial must normalize to a symmetric unit multiple")
}

pub fn alexander(w: &BraidWord) -> Result<LaurentPoly> {
    require_knot(w)?;
    Ok(alexander_from_burau(w.strands(), &burau_reduced(w)))
}

/// V(q) = (−A)^{−3w} ⟨w⟩ with q = A⁻⁴.
pub fn jones(w: &BraidWord) -> Result<LaurentPoly> {
    require_knot(w)?;
    Ok(jones_unchecked(w))
}

pub(crate) fn jones_unchecked(w: &BraidWord) -> LaurentPoly {
    let writhe = w.exponent_sum();
    let bracket = kauffman_bracket(w);
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.scale(sign).shift(-3 * writhe as i32);
    normalized
        .compress_exponents(-4)
        .expect("Jones polynomial of a knot must have integral exponents in q")
}

pub fn fingerprint(w: &BraidWord) -> Result<KnotFingerprint> {
    require_knot(w)?;
    Ok(KnotFingerprint { alexander: alexander(w)?, jones: jones_unchecked(w) })
}
