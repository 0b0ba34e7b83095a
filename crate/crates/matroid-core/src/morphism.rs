//! Matroid morphisms: injective maps of ground sets that carry independent
//! sets to independent sets. Isomorphisms additionally reflect independence,
//! which for an injective map onto the whole target ground set is equivalent
//! to the two families having the same size.

use crate::element::{ElementId, ElementSet};
use crate::error::MorphismError;
use crate::matroid::Matroid;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatroidMorphism {
    source: Matroid,
    target: Matroid,
    map: BTreeMap<ElementId, ElementId>,
}

impl MatroidMorphism {
    pub fn new(
        source: Matroid,
        target: Matroid,
        map: BTreeMap<ElementId, ElementId>,
    ) -> Result<MatroidMorphism, MorphismError> {
        for &e in map.keys() {
            if !source.contains_element(e) {
                return Err(MorphismError::MapsUnknownElement(e));
            }
        }
        for &e in source.ground_set() {
            if !map.contains_key(&e) {
                return Err(MorphismError::NotDefinedOn(e));
            }
        }
        let mut seen: BTreeMap<ElementId, ElementId> = BTreeMap::new();
        for (&e, &img) in &map {
            if !target.contains_element(img) {
                return Err(MorphismError::ImageOutsideTarget { element: e, image: img });
            }
            if let Some(&first) = seen.get(&img) {
                return Err(MorphismError::NotInjective {
                    first,
                    second: e,
                    image: img,
                });
            }
            seen.insert(img, e);
        }
        let morphism = MatroidMorphism { source, target, map };
        if let Some(bad) = morphism.first_unpreserved() {
            return Err(MorphismError::IndependenceNotPreserved { set: bad });
        }
        Ok(morphism)
    }

    pub fn identity(m: &Matroid) -> MatroidMorphism {
        MatroidMorphism {
            source: m.clone(),
            target: m.clone(),
            map: m.ground_set().iter().map(|&e| (e, e)).collect(),
        }
    }

    /// The standard inclusion of a minor: the identity map on the minor's
    /// ground set, viewed into the ambient matroid.
    pub fn inclusion(minor: &Matroid, ambient: &Matroid) -> Result<MatroidMorphism, MorphismError> {
        MatroidMorphism::new(
            minor.clone(),
            ambient.clone(),
            minor.ground_set().iter().map(|&e| (e, e)).collect(),
        )
    }

    /// `self` after `inner`. The inner target must equal the source exactly,
    /// as stored data, not merely up to isomorphism.
    pub fn compose(&self, inner: &MatroidMorphism) -> Result<MatroidMorphism, MorphismError> {
        if inner.target != self.source {
            return Err(MorphismError::ComposeMismatch);
        }
        let map = inner
            .map
            .iter()
            .map(|(&e, &mid)| (e, self.map[&mid]))
            .collect();
        // Composites of valid morphisms are valid; skip revalidation.
        Ok(MatroidMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map,
        })
    }

    pub fn source(&self) -> &Matroid {
        &self.source
    }

    pub fn target(&self) -> &Matroid {
        &self.target
    }

    pub fn map(&self) -> &BTreeMap<ElementId, ElementId> {
        &self.map
    }

    pub fn apply(&self, e: ElementId) -> Option<ElementId> {
        self.map.get(&e).copied()
    }

    pub fn apply_set(&self, set: &ElementSet) -> ElementSet {
        set.iter().filter_map(|&e| self.apply(e)).collect()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.map.len() == self.target.element_count()
            && self.source.independence_size() == self.target.independence_size()
    }

    pub fn inverse(&self) -> Option<MatroidMorphism> {
        if !self.is_isomorphism() {
            return None;
        }
        Some(MatroidMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: self.map.iter().map(|(&e, &img)| (img, e)).collect(),
        })
    }

    fn first_unpreserved(&self) -> Option<ElementSet> {
        // Precompute source position -> target position.
        let positions: Vec<usize> = self
            .source
            .ground_set()
            .iter()
            .map(|e| {
                let img = self.map[e];
                self.target
                    .ground_set()
                    .binary_search(&img)
                    .expect("image checked against target ground set")
            })
            .collect();
        for &m in self.source.masks() {
            let mut image = 0u32;
            let mut bits = m;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                image |= 1 << positions[k];
            }
            if !self.target.contains_mask(image) {
                return Some(self.source.set_of(m));
            }
        }
        None
    }
}
