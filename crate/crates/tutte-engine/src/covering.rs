//! Covering families: finite multisets of morphisms into a common target.

use crate::error::TreeError;
use matroid_core::{Matroid, MatroidMorphism};

/// A finite family of morphisms with a common target. The target is either
/// a matroid (legs are arbitrary matroid morphisms into it) or the base
/// point, whose only incoming morphisms are identities, so a base-point
/// family is recorded by its multiplicity alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Covering {
    BasePointFamily { multiplicity: usize },
    OfMatroid { target: Matroid, legs: Vec<MatroidMorphism> },
}

impl Covering {
    pub fn base_point_family(multiplicity: usize) -> Covering {
        Covering::BasePointFamily { multiplicity }
    }

    pub fn of_matroid(target: Matroid, legs: Vec<MatroidMorphism>) -> Result<Covering, TreeError> {
        for (index, leg) in legs.iter().enumerate() {
            if leg.target() != &target {
                return Err(TreeError::LegTargetMismatch { index });
            }
        }
        Ok(Covering::OfMatroid { target, legs })
    }

    /// The singleton covering { Id_M }.
    pub fn identity(m: &Matroid) -> Covering {
        Covering::OfMatroid {
            target: m.clone(),
            legs: vec![MatroidMorphism::identity(m)],
        }
    }

    pub fn target(&self) -> Option<&Matroid> {
        match self {
            Covering::BasePointFamily { .. } => None,
            Covering::OfMatroid { target, .. } => Some(target),
        }
    }

    pub fn legs(&self) -> &[MatroidMorphism] {
        match self {
            Covering::BasePointFamily { .. } => &[],
            Covering::OfMatroid { legs, .. } => legs,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Covering::BasePointFamily { multiplicity } => *multiplicity,
            Covering::OfMatroid { legs, .. } => legs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Equality as families: legs are compared as a multiset, so the order
    /// in which legs are listed is immaterial.
    pub fn same_covering(&self, other: &Covering) -> bool {
        match (self, other) {
            (
                Covering::BasePointFamily { multiplicity: a },
                Covering::BasePointFamily { multiplicity: b },
            ) => a == b,
            (
                Covering::OfMatroid { target: ta, legs: la },
                Covering::OfMatroid { target: tb, legs: lb },
            ) => ta == tb && multiset_equal(la, lb),
            _ => false,
        }
    }
}

fn multiset_equal(a: &[MatroidMorphism], b: &[MatroidMorphism]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for leg in a {
        for (i, candidate) in b.iter().enumerate() {
            if !used[i] && leg == candidate {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
