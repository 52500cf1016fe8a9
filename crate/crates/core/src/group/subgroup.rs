//! Subgroups as sorted member sets, plus exhaustive subgroup enumeration.

use super::{FiniteGroup, GroupElement, GroupError, SEARCH_LIMIT};

/// A subgroup of a [`FiniteGroup`], stored as a sorted vector of elements.
///
/// The parent group is passed to each operation rather than owned; a
/// `Subgroup` is only meaningful together with the group it was built from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    members: Vec<GroupElement>,
}

impl Subgroup {
    pub(crate) fn from_sorted_members(members: Vec<GroupElement>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn contains(&self, a: GroupElement) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_abelian_in(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }
}

impl FiniteGroup {
    /// Closure of `seed` under multiplication and inverse.
    pub fn subgroup_generated(&self, seed: &[GroupElement]) -> Subgroup {
        let members = self.closure_of(seed);
        debug_assert_eq!(self.order() % members.len(), 0, "Lagrange violated");
        Subgroup::from_sorted_members(members)
    }

    /// Validates that `members` really form a subgroup.
    pub fn subgroup_from_members(
        &self,
        mut members: Vec<GroupElement>,
    ) -> Result<Subgroup, GroupError> {
        members.sort();
        members.dedup();
        let s = Subgroup::from_sorted_members(members);
        if !s.contains(self.identity()) {
            return Err(GroupError::Contract("subgroup must contain identity".into()));
        }
        for &a in s.members() {
            if !s.contains(self.inverse(a)) {
                return Err(GroupError::Contract("subgroup not closed under inverse".into()));
            }
            for &b in s.members() {
                if !s.contains(self.mul(a, b)) {
                    return Err(GroupError::Contract("subgroup not closed under product".into()));
                }
            }
        }
        Ok(s)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_members(vec![self.identity()])
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_members(self.elements().collect())
    }

    pub fn center(&self) -> Subgroup {
        let members: Vec<GroupElement> = self
            .elements()
            .filter(|&z| self.elements().all(|a| self.mul(z, a) == self.mul(a, z)))
            .collect();
        Subgroup::from_sorted_members(members)
    }

    pub fn centralizer(&self, a: GroupElement) -> Subgroup {
        let members: Vec<GroupElement> = self
            .elements()
            .filter(|&x| self.mul(x, a) == self.mul(a, x))
            .collect();
        Subgroup::from_sorted_members(members)
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms: Vec<GroupElement> = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                comms.push(self.commutator(a, b));
            }
        }
        comms.sort();
        comms.dedup();
        self.subgroup_generated(&comms)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.elements()
            .all(|g| s.members().iter().all(|&h| s.contains(self.conjugate(g, h))))
    }

    /// All subgroups of order dividing `max_order`, by cyclic extension from
    /// the trivial subgroup. Complete for the requested range; results are in
    /// canonical order (lexicographic on sorted member sets).
    fn subgroups_up_to(&self, max_order: usize) -> Result<Vec<Subgroup>, GroupError> {
        if self.order() > SEARCH_LIMIT {
            return Err(GroupError::Capacity {
                requested: self.order(),
                limit: SEARCH_LIMIT,
            });
        }
        use std::collections::BTreeSet;
        let mut known: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        let trivial = vec![self.identity()];
        known.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            if h.len() >= max_order {
                continue;
            }
            let base: Vec<GroupElement> = h.clone();
            for g in self.elements() {
                if base.binary_search(&g).is_ok() {
                    continue;
                }
                let mut seed = base.clone();
                seed.push(g);
                let ext = self.closure_of(&seed);
                if ext.len() <= max_order && !known.contains(&ext) {
                    known.insert(ext.clone());
                    frontier.push(ext);
                }
            }
        }
        Ok(known
            .into_iter()
            .map(Subgroup::from_sorted_members)
            .collect())
    }

    /// Complete, duplicate-free list of subgroups of order exactly `k`.
    pub fn subgroups_of_order(&self, k: usize) -> Result<Vec<Subgroup>, GroupError> {
        if k == 0 || self.order() % k != 0 {
            return Ok(vec![]);
        }
        Ok(self
            .subgroups_up_to(k)?
            .into_iter()
            .filter(|s| s.order() == k)
            .collect())
    }

    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        self.subgroups_up_to(self.order())
    }

    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        Ok(self
            .all_subgroups()?
            .into_iter()
            .filter(|s| self.is_normal(s))
            .collect())
    }

    /// All index-2 subgroups, as kernels of the nonzero linear functionals on
    /// the quotient by squares and commutators. Works at any order.
    pub fn index2_subgroups(&self) -> Vec<Subgroup> {
        let mut seed: Vec<GroupElement> = Vec::new();
        for a in self.elements() {
            seed.push(self.mul(a, a));
        }
        for a in self.elements() {
            for b in self.elements() {
                seed.push(self.commutator(a, b));
            }
        }
        seed.sort();
        seed.dedup();
        let phi = self.subgroup_generated(&seed);
        // Quotient here is elementary abelian; coset reps form an F2 space.
        let quot = self
            .quotient(&phi)
            .expect("square-commutator subgroup is normal");
        let q = &quot.group;
        let dim_gens: Vec<GroupElement> = q.minimal_generating_set();
        let r = dim_gens.len();
        debug_assert_eq!(q.order(), 1usize << r);
        // Coordinates of each coset w.r.t. dim_gens.
        let mut coords = vec![None::<u32>; q.order()];
        coords[q.identity().index()] = Some(0);
        let mut frontier = vec![q.identity()];
        while let Some(x) = frontier.pop() {
            let cx = coords[x.index()].unwrap();
            for (i, &g) in dim_gens.iter().enumerate() {
                let y = q.mul(x, g);
                if coords[y.index()].is_none() {
                    coords[y.index()] = Some(cx ^ (1 << i));
                    frontier.push(y);
                }
            }
        }
        let mut out = Vec::new();
        for functional in 1u32..(1 << r) {
            let members: Vec<GroupElement> = self
                .elements()
                .filter(|&a| {
                    let c = coords[quot.map.apply(a).index()].unwrap();
                    (c & functional).count_ones() % 2 == 0
                })
                .collect();
            out.push(Subgroup::from_sorted_members(members));
        }
        out.sort();
        out
    }
}
