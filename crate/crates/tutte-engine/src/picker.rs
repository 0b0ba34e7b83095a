//! Pluggable selection of the split element during tree construction.
//!
//! Pickers are registered by name and looked up at runtime, so callers can
//! switch policies from configuration without code changes. Every picker is
//! a pure function of the matroid and candidate list; the seeded picker
//! derives its choice from the seed and the data alone, so a given spec
//! string always reproduces the same tree.

use crate::error::RegistryError;
use matroid_core::{ElementId, Matroid};
use std::collections::BTreeMap;

pub trait ElementPicker {
    fn name(&self) -> &str;

    /// Chooses one of `candidates`, which is nonempty and sorted ascending.
    fn pick(&self, matroid: &Matroid, candidates: &[ElementId]) -> ElementId;
}

/// Always the smallest candidate id.
pub struct MinIdPicker;

impl ElementPicker for MinIdPicker {
    fn name(&self) -> &str {
        "min-id"
    }

    fn pick(&self, _matroid: &Matroid, candidates: &[ElementId]) -> ElementId {
        *candidates.first().expect("candidate list is nonempty")
    }
}

/// Always the largest candidate id.
pub struct MaxIdPicker;

impl ElementPicker for MaxIdPicker {
    fn name(&self) -> &str {
        "max-id"
    }

    fn pick(&self, _matroid: &Matroid, candidates: &[ElementId]) -> ElementId {
        *candidates.last().expect("candidate list is nonempty")
    }
}

/// Deterministic pseudo-random choice: the seed is mixed with the ground
/// set and the candidate list, so equal inputs always pick equally while
/// different subproblems of one run diverge.
pub struct SeededRandomPicker {
    seed: u64,
}

impl SeededRandomPicker {
    pub fn new(seed: u64) -> SeededRandomPicker {
        SeededRandomPicker { seed }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl ElementPicker for SeededRandomPicker {
    fn name(&self) -> &str {
        "random"
    }

    fn pick(&self, matroid: &Matroid, candidates: &[ElementId]) -> ElementId {
        let mut state = self.seed;
        let mut hash = splitmix64(&mut state);
        for &g in matroid.ground_set() {
            state ^= u64::from(g.get());
            hash ^= splitmix64(&mut state);
        }
        for &c in candidates {
            state ^= u64::from(c.get()).rotate_left(17);
            hash ^= splitmix64(&mut state);
        }
        candidates[(hash % candidates.len() as u64) as usize]
    }
}

type PickerFactory =
    Box<dyn Fn(Option<&str>) -> Result<Box<dyn ElementPicker>, RegistryError> + Send + Sync>;

/// Name-indexed picker factories. Specs are `name` or `name:parameter`.
pub struct PickerRegistry {
    factories: BTreeMap<String, PickerFactory>,
}

impl PickerRegistry {
    pub fn new() -> PickerRegistry {
        PickerRegistry {
            factories: BTreeMap::new(),
        }
    }

    /// All built-in pickers: `min-id`, `max-id`, and `random:<seed>`.
    pub fn standard() -> PickerRegistry {
        let mut registry = PickerRegistry::new();
        registry.register("min-id", |param| match param {
            None => Ok(Box::new(MinIdPicker) as Box<dyn ElementPicker>),
            Some(_) => Err(RegistryError::BadParameter {
                scheme: "min-id".into(),
                detail: "takes no parameter".into(),
            }),
        });
        registry.register("max-id", |param| match param {
            None => Ok(Box::new(MaxIdPicker) as Box<dyn ElementPicker>),
            Some(_) => Err(RegistryError::BadParameter {
                scheme: "max-id".into(),
                detail: "takes no parameter".into(),
            }),
        });
        registry.register("random", |param| {
            let raw = param.ok_or_else(|| RegistryError::BadParameter {
                scheme: "random".into(),
                detail: "requires a seed, e.g. random:42".into(),
            })?;
            let seed = raw.parse::<u64>().map_err(|_| RegistryError::BadParameter {
                scheme: "random".into(),
                detail: format!("seed must be an unsigned integer, got {raw:?}"),
            })?;
            Ok(Box::new(SeededRandomPicker::new(seed)) as Box<dyn ElementPicker>)
        });
        registry
    }

    pub fn register(
        &mut self,
        name: &str,
        factory: impl Fn(Option<&str>) -> Result<Box<dyn ElementPicker>, RegistryError>
            + Send
            + Sync
            + 'static,
    ) {
        self.factories.insert(name.to_string(), Box::new(factory));
    }

    pub fn names(&self) -> Vec<String> {
        self.factories.keys().cloned().collect()
    }

    /// Builds a picker from a spec string, e.g. `min-id` or `random:42`.
    pub fn create(&self, spec: &str) -> Result<Box<dyn ElementPicker>, RegistryError> {
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| RegistryError::UnknownName {
                requested: name.to_string(),
                available: self.names().join(", "),
            })?;
        factory(param)
    }
}

impl Default for PickerRegistry {
    fn default() -> PickerRegistry {
        PickerRegistry::standard()
    }
}

/// The picker used when no spec is given.
pub fn default_picker() -> Box<dyn ElementPicker> {
    Box::new(MinIdPicker)
}
