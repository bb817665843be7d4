//! Reduced simplicial homology over Z2.
//!
//! The chain complex is augmented, so the empty face spans degree −1 and the
//! empty complex has `β̃_{-1} = 1`. One boundary matrix is materialised at a
//! time and discarded after its rank is taken.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::complex::{ComplexError, SimplicialComplex};
use crate::gf2::GF2Matrix;

/// An integer extended by ±∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(isize),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<isize> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => s.serialize_i64(*v as i64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Reduced Z2 Betti numbers from dimension −1 up to the top dimension,
/// with the face counts they were computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    /// `betti[d + 1] = β̃_d`.
    betti: Vec<usize>,
    /// `faces[d + 1] = f_d`, with `f_{-1} = 1` for the empty face.
    faces: Vec<usize>,
}

impl BettiProfile {
    /// Profile from `β̃_{-1}, β̃_0, ..` with no face data; for tests and
    /// expected values.
    pub fn from_betti(betti: Vec<usize>) -> Self {
        BettiProfile {
            betti,
            faces: Vec::new(),
        }
    }

    /// The profile of `S^d` (`d = -1` is the empty complex).
    pub fn sphere(d: isize) -> Self {
        Self::wedge_of_spheres(d, 1)
    }

    pub fn wedge_of_spheres(d: isize, count: usize) -> Self {
        let mut betti = vec![0; (d + 2) as usize];
        betti[(d + 1) as usize] = count;
        Self::from_betti(betti)
    }

    /// `β̃_d`, zero outside the stored range.
    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.betti.get((d + 1) as usize).copied().unwrap_or(0)
    }

    pub fn face_count(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.faces.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Top dimension of the complex, `None` if it was void.
    pub fn dim(&self) -> Option<isize> {
        (!self.faces.is_empty()).then(|| self.faces.len() as isize - 2)
    }

    /// `(d, β̃_d)` for every nonzero Betti number.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, &b)| (i as isize - 1, b))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// Equality of Betti numbers in every dimension, ignoring face data.
    pub fn same_betti(&self, other: &BettiProfile) -> bool {
        self.nonzero() == other.nonzero()
    }

    /// Largest `n` with `β̃_i = 0` for all `i <= n`.
    pub fn conn_z2(&self) -> ExtInt {
        match self.nonzero().first() {
            Some(&(d, _)) => ExtInt::Finite(d - 1),
            None => ExtInt::PosInf,
        }
    }

    /// Largest `n` with `β̃_n != 0`.
    pub fn hdim_z2(&self) -> ExtInt {
        match self.nonzero().last() {
            Some(&(d, _)) => ExtInt::Finite(d),
            None => ExtInt::NegInf,
        }
    }

    /// `Σ (−1)^d β̃_d = Σ (−1)^d f_d` over `d >= −1`.
    pub fn euler_identity_holds(&self) -> bool {
        let alt = |v: &[usize]| -> i64 {
            v.iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 1 { x as i64 } else { -(x as i64) })
                .sum()
        };
        alt(&self.betti) == alt(&self.faces)
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .iter()
            .map(|(d, b)| format!("b{d}={b}"))
            .collect();
        if parts.is_empty() {
            write!(f, "acyclic")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Boundary between consecutive face lists: rows are `lower`, columns are
/// `upper`, entry 1 iff the row face is a facet of the column face.
fn boundary_between(lower: &[VertexSet], upper: &[VertexSet]) -> GF2Matrix {
    let index: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = GF2Matrix::zeros(lower.len(), upper.len());
    for (j, face) in upper.iter().enumerate() {
        for v in face.iter() {
            let row = index[&face.without(v)];
            m.set(row, j, true);
        }
    }
    m
}

/// `∂_d : C_d → C_{d-1}` over Z2 with faces in lexicographic order. For
/// `d = 0` this is the augmentation onto the empty face.
pub fn boundary_matrix(k: &SimplicialComplex, d: isize) -> Result<GF2Matrix, ComplexError> {
    let top = k.dim().ok_or(ComplexError::Void("boundary matrix"))?;
    if d < 0 || d > top {
        return Err(ComplexError::DimensionOutOfRange { dim: d, top });
    }
    Ok(boundary_between(&k.faces_of_dim(d - 1), &k.faces_of_dim(d)))
}

/// Reduced Z2 Betti numbers: `β̃_d = f_d − rank ∂_d − rank ∂_{d+1}`.
pub fn reduced_betti(k: &SimplicialComplex) -> BettiProfile {
    let Some(top) = k.dim() else {
        return BettiProfile {
            betti: Vec::new(),
            faces: Vec::new(),
        };
    };
    let len = (top + 2) as usize;
    let mut faces = vec![0; len];
    // ranks[d + 1] = rank ∂_d; ∂_{-1} and ∂_{top+1} vanish
    let mut ranks = vec![0; len + 1];
    let mut lower = k.faces_of_dim(-1);
    faces[0] = lower.len();
    for d in 0..=top {
        let upper = k.faces_of_dim(d);
        faces[(d + 1) as usize] = upper.len();
        ranks[(d + 1) as usize] = boundary_between(&lower, &upper).rank();
        lower = upper;
    }
    let betti = (0..len)
        .map(|i| faces[i] - ranks[i] - ranks[i + 1])
        .collect();
    BettiProfile { betti, faces }
}
