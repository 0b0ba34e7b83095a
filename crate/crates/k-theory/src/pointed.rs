//! Matroids extended by a base point that absorbs direct sums.

use matroid_core::Matroid;

/// Either an honest matroid or the distinguished base point, which acts as
/// an absorbing element for the direct sum (not as a unit; the unit is the
/// empty matroid).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointedObject {
    BasePoint,
    Matroid(Matroid),
}

impl PointedObject {
    pub fn empty_matroid() -> PointedObject {
        PointedObject::Matroid(matroid_core::free_loop_sum(0, 0))
    }

    pub fn is_base_point(&self) -> bool {
        matches!(self, PointedObject::BasePoint)
    }

    pub fn as_matroid(&self) -> Option<&Matroid> {
        match self {
            PointedObject::BasePoint => None,
            PointedObject::Matroid(m) => Some(m),
        }
    }

    /// Direct sum with the base point absorbing: if either side is the base
    /// point the result is the base point, otherwise the right summand is
    /// shifted past the left one exactly as `Matroid::direct_sum` does.
    pub fn direct_sum(&self, other: &PointedObject) -> PointedObject {
        match (self, other) {
            (PointedObject::Matroid(a), PointedObject::Matroid(b)) => {
                PointedObject::Matroid(a.direct_sum(b).0)
            }
            _ => PointedObject::BasePoint,
        }
    }
}

impl From<Matroid> for PointedObject {
    fn from(m: Matroid) -> PointedObject {
        PointedObject::Matroid(m)
    }
}
