//! Exact finite-group arithmetic on materialized Cayley tables.
//!
//! Every group here is fully materialized: an element is an index into an
//! `order x order` multiplication table. This caps the order at
//! [`MAX_ORDER`] but makes every structural claim exhaustively checkable,
//! which is the point — the groups of interest have order at most 128.

mod construct;
mod iso;
mod subgroup;

pub use construct::{
    central_product, direct_product, pullback, CentralProductResult, DirectProductResult,
    PullbackResult, QuotientResult,
};
pub use iso::{is_isomorphic, isomorphism};
pub use subgroup::Subgroup;

use serde_json::json;
use std::sync::Arc;
use thiserror::Error;

/// Hard cap on materialized group order.
pub const MAX_ORDER: usize = 4096;

/// Orders up to this bound get a full associativity sweep at construction;
/// larger tables are spot-checked on [`SPOT_CHECK_TRIPLES`] seeded triples.
pub const FULL_ASSOC_LIMIT: usize = 256;

/// Number of pseudo-random triples checked above [`FULL_ASSOC_LIMIT`].
pub const SPOT_CHECK_TRIPLES: usize = 10_000;

/// Cap for exhaustive subgroup and isomorphism searches.
pub const SEARCH_LIMIT: usize = 128;

/// Shared handle to an immutable group.
pub type GroupRef = Arc<FiniteGroup>;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("malformed group table: {0}")]
    Malformed(String),
    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("capacity exceeded: requested order {requested} > limit {limit}")]
    Capacity { requested: usize, limit: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("homomorphism targets differ")]
    TargetMismatch,
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("not a homomorphism: maps {lhs} * {rhs} inconsistently")]
    NotAHomomorphism { lhs: usize, rhs: usize },
    #[error("{0}")]
    Contract(String),
}

/// Index of an element in the owning group's Cayley table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement(pub u16);

impl GroupElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite group materialized as a Cayley table with distinguished generators.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `table[a * order + b]` is the index of `a * b`.
    table: Vec<u16>,
    inv: Vec<u16>,
    identity: u16,
    generators: Vec<u16>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

fn xorshift64(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

impl FiniteGroup {
    /// Builds and fully validates a group from a row-major table.
    ///
    /// Checks: Latin square, identity law, two-sided inverses, associativity
    /// (exhaustive up to [`FULL_ASSOC_LIMIT`], seeded spot checks above), and
    /// that `generators` generate the whole group.
    pub fn from_table(
        order: usize,
        table: Vec<u16>,
        identity: u16,
        generators: Vec<u16>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GroupError::Capacity {
                requested: order,
                limit: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(GroupError::Malformed(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if (identity as usize) >= order {
            return Err(GroupError::Malformed("identity index out of range".into()));
        }
        if let Some(ref ls) = labels {
            if ls.len() != order {
                return Err(GroupError::Malformed("label count != order".into()));
            }
        }
        for &e in &table {
            if (e as usize) >= order {
                return Err(GroupError::Malformed("table entry out of range".into()));
            }
        }
        // Latin square: each row and column is a permutation.
        let mut seen = vec![false; order];
        for row in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for col in 0..order {
                let v = table[row * order + col] as usize;
                if seen[v] {
                    return Err(GroupError::Malformed(format!("row {row} is not a permutation")));
                }
                seen[v] = true;
            }
        }
        for col in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for row in 0..order {
                let v = table[row * order + col] as usize;
                if seen[v] {
                    return Err(GroupError::Malformed(format!("column {col} is not a permutation")));
                }
                seen[v] = true;
            }
        }
        let e = identity as usize;
        for x in 0..order {
            if table[e * order + x] as usize != x || table[x * order + e] as usize != x {
                return Err(GroupError::Malformed("identity law fails".into()));
            }
        }
        // Two-sided inverses.
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if table[a * order + b] as usize == e {
                    found = Some(b);
                    break;
                }
            }
            let b = found.ok_or_else(|| GroupError::Malformed(format!("{a} has no right inverse")))?;
            if table[b * order + a] as usize != e {
                return Err(GroupError::Malformed(format!("{a} has no two-sided inverse")));
            }
            inv[a] = b as u16;
        }
        // Associativity.
        let assoc = |a: usize, b: usize, c: usize| {
            let ab = table[a * order + b] as usize;
            let bc = table[b * order + c] as usize;
            table[ab * order + c] == table[a * order + bc]
        };
        if order <= FULL_ASSOC_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(GroupError::Malformed(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            for _ in 0..SPOT_CHECK_TRIPLES {
                let a = (xorshift64(&mut state) % order as u64) as usize;
                let b = (xorshift64(&mut state) % order as u64) as usize;
                let c = (xorshift64(&mut state) % order as u64) as usize;
                if !assoc(a, b, c) {
                    return Err(GroupError::Malformed(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        let g = FiniteGroup {
            order,
            table,
            inv,
            identity,
            generators,
            labels,
        };
        // Generators generate the whole group.
        let gen_elems: Vec<GroupElement> = g.generators.iter().map(|&i| GroupElement(i)).collect();
        let reach = g.closure_of(&gen_elems);
        if reach.len() != order {
            return Err(GroupError::Malformed(format!(
                "generators span {} of {} elements",
                reach.len(),
                order
            )));
        }
        Ok(g)
    }

    /// Builds a group-shaped table without validating the group axioms.
    ///
    /// Only the shape (Latin square with identity and two-sided inverses) is
    /// checked. This exists so law checkers can be exercised on structures
    /// that are *not* groups (negative controls); it must never be used for
    /// real group data.
    #[doc(hidden)]
    pub fn from_table_unchecked(
        order: usize,
        table: Vec<u16>,
        identity: u16,
    ) -> Result<Self, GroupError> {
        if table.len() != order * order {
            return Err(GroupError::Malformed("bad table size".into()));
        }
        let e = identity as usize;
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if table[a * order + b] as usize == e && table[b * order + a] as usize == e {
                    found = Some(b);
                    break;
                }
            }
            inv[a] = found.ok_or_else(|| {
                GroupError::Malformed(format!("{a} has no two-sided inverse"))
            })? as u16;
        }
        let generators: Vec<u16> = (0..order as u16).collect();
        Ok(FiniteGroup {
            order,
            table,
            inv,
            identity,
            generators,
            labels: None,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        self.generators.iter().map(|&i| GroupElement(i)).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order as u16).map(GroupElement)
    }

    /// Validates an externally supplied index.
    pub fn element(&self, index: usize) -> Result<GroupElement, GroupError> {
        if index < self.order {
            Ok(GroupElement(index as u16))
        } else {
            Err(GroupError::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn label(&self, a: GroupElement) -> String {
        match &self.labels {
            Some(ls) => ls[a.index()].clone(),
            None => format!("g{}", a.index()),
        }
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        debug_assert!(a.index() < self.order && b.index() < self.order);
        GroupElement(self.table[a.index() * self.order + b.index()])
    }

    /// Range-checked multiplication for externally supplied indices.
    pub fn checked_mul(&self, a: usize, b: usize) -> Result<GroupElement, GroupError> {
        let a = self.element(a)?;
        let b = self.element(b)?;
        Ok(self.mul(a, b))
    }

    #[inline]
    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inv[a.index()])
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        let x = self.mul(self.inverse(a), self.inverse(b));
        let y = self.mul(a, b);
        self.mul(x, y)
    }

    pub fn conjugate(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn pow(&self, a: GroupElement, n: i64) -> GroupElement {
        let mut base = if n < 0 { self.inverse(a) } else { a };
        let mut n = n.unsigned_abs();
        let mut acc = self.identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: GroupElement) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when the derived subgroup is abelian.
    pub fn is_metabelian(&self) -> bool {
        let d = self.derived_subgroup();
        d.members()
            .iter()
            .all(|&a| d.members().iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn closure_of(&self, seed: &[GroupElement]) -> Vec<GroupElement> {
        let mut in_set = vec![false; self.order];
        let mut members = vec![self.identity()];
        in_set[self.identity().index()] = true;
        let mut queue: Vec<GroupElement> = Vec::new();
        for &s in seed {
            if !in_set[s.index()] {
                in_set[s.index()] = true;
                members.push(s);
                queue.push(s);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            // Closure under multiplication is enough in a finite group.
            let snapshot: Vec<GroupElement> = members.clone();
            for m in snapshot {
                for p in [self.mul(x, m), self.mul(m, x)] {
                    if !in_set[p.index()] {
                        in_set[p.index()] = true;
                        members.push(p);
                        queue.push(p);
                    }
                }
            }
        }
        members.sort();
        members
    }

    /// Smallest generating sequence found by a greedy scan in index order.
    pub fn minimal_generating_set(&self) -> Vec<GroupElement> {
        let mut gens: Vec<GroupElement> = Vec::new();
        let mut span = 1usize;
        for a in self.elements() {
            if span == self.order {
                break;
            }
            let mut trial = gens.clone();
            trial.push(a);
            let c = self.closure_of(&trial);
            if c.len() > span {
                span = c.len();
                gens = trial;
            }
        }
        gens
    }

    /// JSON form: `{order, table (row-major), identity, generators, labels}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "order": self.order,
            "table": self.table,
            "identity": self.identity,
            "generators": self.generators,
            "labels": self.labels,
        })
    }
}

/// A verified homomorphism between two materialized groups.
#[derive(Clone)]
pub struct Homomorphism {
    source: GroupRef,
    target: GroupRef,
    map: Vec<u16>,
}

impl Homomorphism {
    /// Verifies `map(identity) = identity` and the homomorphism law on all
    /// pairs before returning.
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<u16>) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::Malformed("map length != source order".into()));
        }
        for &v in &map {
            if (v as usize) >= target.order() {
                return Err(GroupError::Malformed("map value out of range".into()));
            }
        }
        if map[source.identity().index()] != target.identity().0 {
            return Err(GroupError::NotAHomomorphism { lhs: 0, rhs: 0 });
        }
        for a in source.elements() {
            for b in source.elements() {
                let lhs = map[source.mul(a, b).index()];
                let rhs = target.mul(GroupElement(map[a.index()]), GroupElement(map[b.index()]));
                if lhs != rhs.0 {
                    return Err(GroupError::NotAHomomorphism {
                        lhs: a.index(),
                        rhs: b.index(),
                    });
                }
            }
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn apply(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.map[a.index()])
    }

    pub fn map(&self) -> &[u16] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            seen[v as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            if seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.target.identity().0;
        let members: Vec<GroupElement> = self
            .source
            .elements()
            .filter(|a| self.map[a.index()] == e)
            .collect();
        Subgroup::from_sorted_members(members)
    }
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Homomorphism({} -> {})",
            self.source.order(),
            self.target.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cyclic group of order n, built directly.
    pub(crate) fn cyclic(n: usize) -> FiniteGroup {
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = ((a + b) % n) as u16;
            }
        }
        FiniteGroup::from_table(n, table, 0, vec![1 % n as u16], None).unwrap()
    }

    #[test]
    fn cyclic_four_basics() {
        let c = cyclic(4);
        assert_eq!(c.order(), 4);
        let g = GroupElement(1);
        assert_eq!(c.mul(g, g), GroupElement(2));
        assert_eq!(c.element_order(g), 4);
        assert_eq!(c.exponent(), 4);
        assert!(c.is_abelian());
        for a in c.elements() {
            assert_eq!(c.mul(c.identity(), a), a);
            assert_eq!(c.commutator(a, a), c.identity());
        }
    }

    #[test]
    fn checked_mul_rejects_out_of_range() {
        let c = cyclic(4);
        assert!(matches!(
            c.checked_mul(4, 0),
            Err(GroupError::ElementOutOfRange { .. })
        ));
        assert_eq!(c.checked_mul(1, 1).unwrap(), GroupElement(2));
    }

    #[test]
    fn malformed_tables_rejected() {
        // Not a Latin square.
        let res = FiniteGroup::from_table(2, vec![0, 0, 1, 1], 0, vec![1], None);
        assert!(res.is_err());
        // Latin square but no identity at the claimed index.
        let res = FiniteGroup::from_table(2, vec![1, 0, 0, 1], 0, vec![1], None);
        assert!(res.is_err());
    }

    #[test]
    fn generators_must_generate() {
        let mut table = vec![0u16; 16];
        for a in 0..4 {
            for b in 0..4 {
                table[a * 4 + b] = ((a + b) % 4) as u16;
            }
        }
        // 2 generates only {0, 2} in Z/4.
        assert!(FiniteGroup::from_table(4, table, 0, vec![2], None).is_err());
    }

    #[test]
    fn homomorphism_law_is_enforced() {
        let c4 = Arc::new(cyclic(4));
        let c2 = Arc::new(cyclic(2));
        let ok = Homomorphism::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(ok.is_surjective());
        assert_eq!(ok.kernel().order(), 2);
        assert!(Homomorphism::new(c4, c2, vec![0, 1, 1, 0]).is_err());
    }
}
