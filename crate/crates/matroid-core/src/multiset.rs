use crate::canonical::CanonicalKey;
use crate::matroid::Matroid;

/// A finite multiset of matroids, kept as a positional list. Order is
/// irrelevant to every comparison made through it.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MatroidMultiset {
    items: Vec<Matroid>,
}

impl MatroidMultiset {
    pub fn new(items: Vec<Matroid>) -> MatroidMultiset {
        MatroidMultiset { items }
    }

    pub fn items(&self) -> &[Matroid] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn push(&mut self, m: Matroid) {
        self.items.push(m);
    }

    /// Equality of multisets up to isomorphism of the members, decided by
    /// comparing sorted canonical keys.
    pub fn multiset_isomorphic(&self, other: &MatroidMultiset) -> bool {
        if self.items.len() != other.items.len() {
            return false;
        }
        let mut a: Vec<CanonicalKey> = self.items.iter().map(Matroid::canonical_form).collect();
        let mut b: Vec<CanonicalKey> = other.items.iter().map(Matroid::canonical_form).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl FromIterator<Matroid> for MatroidMultiset {
    fn from_iter<T: IntoIterator<Item = Matroid>>(iter: T) -> Self {
        MatroidMultiset {
            items: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{eid, ElementSet};

    fn parallel_pair(a: u32, b: u32) -> Matroid {
        let bases: Vec<ElementSet> = vec![
            [eid(a)].into_iter().collect(),
            [eid(b)].into_iter().collect(),
        ];
        Matroid::from_bases([eid(a), eid(b)], bases).unwrap()
    }

    #[test]
    fn relabeled_members_count_as_equal() {
        let s1 = MatroidMultiset::new(vec![parallel_pair(1, 2), parallel_pair(1, 2)]);
        let s2 = MatroidMultiset::new(vec![parallel_pair(3, 7), parallel_pair(1, 2)]);
        assert!(s1.multiset_isomorphic(&s2));
    }

    #[test]
    fn multiplicity_matters() {
        let s1 = MatroidMultiset::new(vec![parallel_pair(1, 2), parallel_pair(1, 2)]);
        let s2 = MatroidMultiset::new(vec![parallel_pair(1, 2)]);
        assert!(!s1.multiset_isomorphic(&s2));
    }

    #[test]
    fn empty_multisets_agree() {
        assert!(MatroidMultiset::default().multiset_isomorphic(&MatroidMultiset::new(vec![])));
    }
}
