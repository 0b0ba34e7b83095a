//! Tutte polynomial computation behind a runtime-selected strategy.
//!
//! Two independent strategies are registered by name. The recursive one
//! splits at non-degenerate elements and memoizes on canonical forms; the
//! subset-scan one evaluates the corank-nullity sum using nothing but rank
//! queries. They share no code paths past this module's front door, which
//! is what makes cross-checking them meaningful.

use crate::error::RegistryError;
use crate::poly::BivariatePolynomial;
use matroid_core::{CanonicalKey, ElementSet, Matroid};
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};

pub trait TutteStrategy {
    fn name(&self) -> &str;

    /// The Tutte polynomial in the variable pair `(x, y)`.
    fn tutte(&self, matroid: &Matroid) -> BivariatePolynomial;
}

/// Memo entries kept per top-level call before insertion stops. The cap
/// bounds memory on adversarial inputs; correctness never depends on it.
pub const DEFAULT_MEMO_CAP: usize = 1 << 16;

/// Recursive strategy: split at the smallest non-degenerate element, recurse
/// on the contraction and the deletion, add. A matroid with no such element
/// contributes `x^isthmuses * y^loops`. Minors are memoized by canonical
/// form so isomorphic subproblems are computed once.
pub struct DeletionContraction {
    memo_cap: usize,
}

impl DeletionContraction {
    pub fn new(memo_cap: usize) -> DeletionContraction {
        DeletionContraction { memo_cap }
    }
}

impl Default for DeletionContraction {
    fn default() -> DeletionContraction {
        DeletionContraction::new(DEFAULT_MEMO_CAP)
    }
}

impl TutteStrategy for DeletionContraction {
    fn name(&self) -> &str {
        "deletion-contraction"
    }

    fn tutte(&self, matroid: &Matroid) -> BivariatePolynomial {
        let mut memo: HashMap<CanonicalKey, BivariatePolynomial> = HashMap::new();
        recurse(matroid, &mut memo, self.memo_cap)
    }
}

fn recurse(
    m: &Matroid,
    memo: &mut HashMap<CanonicalKey, BivariatePolynomial>,
    cap: usize,
) -> BivariatePolynomial {
    let candidates = m.nondegenerate_elements();
    if candidates.is_empty() {
        return BivariatePolynomial::monomial(
            "x",
            "y",
            m.isthmuses().len() as u32,
            m.loops().len() as u32,
            BigInt::from(1),
        );
    }
    let key = m.canonical_form();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let e = candidates[0];
    let contraction = recurse(&m.contract(e).expect("not a loop"), memo, cap);
    let deletion = recurse(&m.delete(e).expect("not an isthmus"), memo, cap);
    let result = &contraction + &deletion;
    if memo.len() < cap {
        memo.insert(key, result.clone());
    }
    result
}

/// Subset-scan strategy: sums `(x-1)^(r(E)-r(A)) * (y-1)^(|A|-r(A))` over
/// every subset `A` of the ground set, with all ranks taken through the
/// public query interface. Exponential and cache-free by design; it exists
/// to check the recursive strategy against an independent computation.
pub struct CorankNullity;

impl TutteStrategy for CorankNullity {
    fn name(&self) -> &str {
        "corank-nullity"
    }

    fn tutte(&self, matroid: &Matroid) -> BivariatePolynomial {
        let ground = matroid.ground_set();
        let n = ground.len();
        let full_rank = matroid.full_rank();

        let x_minus_one = &BivariatePolynomial::monomial("x", "y", 1, 0, BigInt::from(1))
            - &BivariatePolynomial::one("x", "y");
        let y_minus_one = &BivariatePolynomial::monomial("x", "y", 0, 1, BigInt::from(1))
            - &BivariatePolynomial::one("x", "y");
        let corank_powers = power_table(&x_minus_one, full_rank);
        let nullity_powers = power_table(&y_minus_one, n);

        let mut total = BivariatePolynomial::zero("x", "y");
        for mask in 0u64..(1u64 << n) {
            let subset: ElementSet = ground
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let size = subset.len();
            let rank = matroid.rank(&subset).expect("subset of the ground set");
            let term = &corank_powers[full_rank - rank] * &nullity_powers[size - rank];
            total = &total + &term;
        }
        total
    }
}

fn power_table(base: &BivariatePolynomial, up_to: usize) -> Vec<BivariatePolynomial> {
    let mut table = vec![BivariatePolynomial::one("x", "y")];
    for k in 1..=up_to {
        table.push(&table[k - 1] * base);
    }
    table
}

type StrategyFactory =
    Box<dyn Fn(Option<usize>) -> Result<Box<dyn TutteStrategy>, RegistryError> + Send + Sync>;

/// Name-indexed strategy factories. The optional argument is the memo cap;
/// strategies that keep no memo accept and ignore it.
pub struct StrategyRegistry {
    factories: BTreeMap<String, StrategyFactory>,
}

impl StrategyRegistry {
    pub fn new() -> StrategyRegistry {
        StrategyRegistry {
            factories: BTreeMap::new(),
        }
    }

    pub fn standard() -> StrategyRegistry {
        let mut registry = StrategyRegistry::new();
        registry.register("deletion-contraction", |cap| {
            Ok(Box::new(DeletionContraction::new(cap.unwrap_or(DEFAULT_MEMO_CAP)))
                as Box<dyn TutteStrategy>)
        });
        registry.register("corank-nullity", |_| {
            Ok(Box::new(CorankNullity) as Box<dyn TutteStrategy>)
        });
        registry
    }

    pub fn register(
        &mut self,
        name: &str,
        factory: impl Fn(Option<usize>) -> Result<Box<dyn TutteStrategy>, RegistryError>
            + Send
            + Sync
            + 'static,
    ) {
        self.factories.insert(name.to_string(), Box::new(factory));
    }

    pub fn names(&self) -> Vec<String> {
        self.factories.keys().cloned().collect()
    }

    pub fn create(
        &self,
        name: &str,
        memo_cap: Option<usize>,
    ) -> Result<Box<dyn TutteStrategy>, RegistryError> {
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| RegistryError::UnknownName {
                requested: name.to_string(),
                available: self.names().join(", "),
            })?;
        factory(memo_cap)
    }
}

impl Default for StrategyRegistry {
    fn default() -> StrategyRegistry {
        StrategyRegistry::standard()
    }
}

/// Tutte polynomial via the default recursive strategy.
pub fn tutte(matroid: &Matroid) -> BivariatePolynomial {
    DeletionContraction::default().tutte(matroid)
}

/// Tutte polynomial via the independent subset scan.
pub fn tutte_oracle(matroid: &Matroid) -> BivariatePolynomial {
    CorankNullity.tutte(matroid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::{eid, free_loop_sum, from_graph, uniform};

    fn both(m: &Matroid) -> (String, String) {
        (tutte(m).to_string(), tutte_oracle(m).to_string())
    }

    #[test]
    fn smallest_cases_are_frozen() {
        assert_eq!(both(&free_loop_sum(0, 0)), ("1".into(), "1".into()));
        assert_eq!(both(&free_loop_sum(1, 0)), ("x".into(), "x".into()));
        assert_eq!(both(&free_loop_sum(0, 1)), ("y".into(), "y".into()));
        assert_eq!(both(&uniform(1, 2)), ("x + y".into(), "x + y".into()));
    }

    #[test]
    fn uniform_rank_two_on_four() {
        let expected = "x^2 + 2*x + y^2 + 2*y";
        assert_eq!(both(&uniform(2, 4)), (expected.into(), expected.into()));
    }

    #[test]
    fn four_cycle_with_a_chord() {
        let m = from_graph(
            4,
            &[
                (0, 3, eid(1)),
                (3, 2, eid(2)),
                (2, 1, eid(3)),
                (1, 0, eid(4)),
                (3, 1, eid(5)),
            ],
        )
        .unwrap();
        let expected = "x^3 + 2*x^2 + 2*x*y + x + y^2 + y";
        assert_eq!(both(&m), (expected.into(), expected.into()));
    }

    #[test]
    fn free_and_loop_parts_multiply_out() {
        for isthmuses in 0..4u32 {
            for loops in 0..4u32 {
                let m = free_loop_sum(isthmuses as usize, loops as usize);
                let expected =
                    BivariatePolynomial::monomial("x", "y", isthmuses, loops, BigInt::from(1));
                assert_eq!(tutte(&m), expected);
                assert_eq!(tutte_oracle(&m), expected);
            }
        }
    }

    #[test]
    fn strategies_agree_on_a_mixed_bag() {
        let cases = vec![
            uniform(2, 3),
            uniform(3, 5),
            free_loop_sum(2, 3),
            from_graph(3, &[(0, 1, eid(1)), (1, 2, eid(2)), (2, 0, eid(3))]).unwrap(),
        ];
        for m in cases {
            assert_eq!(tutte(&m), tutte_oracle(&m));
        }
    }

    #[test]
    fn memo_cap_zero_still_computes_correctly() {
        let m = uniform(2, 4);
        let uncached = DeletionContraction::new(0).tutte(&m);
        assert_eq!(uncached, tutte_oracle(&m));
    }

    #[test]
    fn registry_resolves_both_strategies() {
        let registry = StrategyRegistry::standard();
        assert_eq!(
            registry.names(),
            vec!["corank-nullity", "deletion-contraction"]
        );
        let dc = registry.create("deletion-contraction", Some(32)).unwrap();
        let oracle = registry.create("corank-nullity", None).unwrap();
        let m = uniform(2, 4);
        assert_eq!(dc.tutte(&m), oracle.tutte(&m));
        assert!(matches!(
            registry.create("fourier", None).err().unwrap(),
            RegistryError::UnknownName { .. }
        ));
    }
}
