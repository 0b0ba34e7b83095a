use std::collections::BTreeSet;
use std::fmt;

/// Label of a ground-set element. Always a positive integer; zero is not a
/// valid label, which keeps "no element" distinguishable in text formats.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(u32);

impl ElementId {
    pub fn new(value: u32) -> Option<ElementId> {
        if value == 0 {
            None
        } else {
            Some(ElementId(value))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Shifted copy, used when relabeling the right summand of a direct sum.
    /// Panics on arithmetic overflow; labels in practice are tiny.
    pub fn offset(self, shift: u32) -> ElementId {
        ElementId(self.0.checked_add(shift).expect("element id overflow"))
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for ElementId {
    type Error = ();

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        ElementId::new(value).ok_or(())
    }
}

pub type ElementSet = BTreeSet<ElementId>;

/// Shorthand constructor for trusted literals. Panics on zero.
pub fn eid(value: u32) -> ElementId {
    ElementId::new(value).expect("element ids start at 1")
}

/// Renders a set the way the CLI prints it: `{1,4,5}`.
pub fn format_set(set: &ElementSet) -> String {
    let inner: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_rejected() {
        assert!(ElementId::new(0).is_none());
        assert_eq!(ElementId::new(7).unwrap().get(), 7);
    }

    #[test]
    fn set_formatting() {
        let s: ElementSet = [eid(4), eid(1), eid(5)].into_iter().collect();
        assert_eq!(format_set(&s), "{1,4,5}");
        assert_eq!(format_set(&ElementSet::new()), "{}");
    }
}
