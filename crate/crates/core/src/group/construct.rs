//! Categorical constructions: direct product, pullback, quotient, central product.

use super::{FiniteGroup, GroupElement, GroupError, GroupRef, Homomorphism, Subgroup, MAX_ORDER};
use std::sync::Arc;

pub struct DirectProductResult {
    pub group: GroupRef,
    pub proj_left: Homomorphism,
    pub proj_right: Homomorphism,
}

pub struct PullbackResult {
    pub group: GroupRef,
    pub proj1: Homomorphism,
    pub proj2: Homomorphism,
}

pub struct QuotientResult {
    pub group: GroupRef,
    /// Canonical surjection from (a copy of) the parent onto the quotient.
    pub map: Homomorphism,
}

pub struct CentralProductResult {
    pub group: GroupRef,
    /// Quotient map from the direct product.
    pub from_product: Homomorphism,
}

/// Structural identity of the binary operation, ignoring generators/labels.
fn same_binary_structure(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order()
        && a.identity() == b.identity()
        && a.elements().all(|x| a.elements().all(|y| a.mul(x, y) == b.mul(x, y)))
}

fn pair_label(g: &FiniteGroup, h: &FiniteGroup, a: GroupElement, b: GroupElement) -> String {
    format!("({},{})", g.label(a), h.label(b))
}

/// Direct product with its two projections. Componentwise multiplication;
/// index layout is `a * |H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<DirectProductResult, GroupError> {
    let n = g.order() * h.order();
    if n > MAX_ORDER {
        return Err(GroupError::Capacity {
            requested: n,
            limit: MAX_ORDER,
        });
    }
    let hs = h.order();
    let mut table = vec![0u16; n * n];
    for a1 in g.elements() {
        for b1 in h.elements() {
            let i = a1.index() * hs + b1.index();
            for a2 in g.elements() {
                for b2 in h.elements() {
                    let j = a2.index() * hs + b2.index();
                    let p = g.mul(a1, a2).index() * hs + h.mul(b1, b2).index();
                    table[i * n + j] = p as u16;
                }
            }
        }
    }
    let identity = (g.identity().index() * hs + h.identity().index()) as u16;
    let mut generators = Vec::new();
    for a in g.generators() {
        generators.push((a.index() * hs + h.identity().index()) as u16);
    }
    for b in h.generators() {
        generators.push((g.identity().index() * hs + b.index()) as u16);
    }
    let labels: Vec<String> = (0..n)
        .map(|i| pair_label(g, h, GroupElement((i / hs) as u16), GroupElement((i % hs) as u16)))
        .collect();
    let group = Arc::new(FiniteGroup::from_table(
        n,
        table,
        identity,
        generators,
        Some(labels),
    )?);
    let left_map: Vec<u16> = (0..n).map(|i| (i / hs) as u16).collect();
    let right_map: Vec<u16> = (0..n).map(|i| (i % hs) as u16).collect();
    let proj_left = Homomorphism::new(group.clone(), Arc::new(g.clone()), left_map)?;
    let proj_right = Homomorphism::new(group.clone(), Arc::new(h.clone()), right_map)?;
    Ok(DirectProductResult {
        group,
        proj_left,
        proj_right,
    })
}

/// Pullback (fiber product) of two surjections onto a common target: the
/// subgroup of the direct product where the two maps agree, with the
/// restricted projections.
pub fn pullback(f: &Homomorphism, g: &Homomorphism) -> Result<PullbackResult, GroupError> {
    if !same_binary_structure(f.target(), g.target()) {
        return Err(GroupError::TargetMismatch);
    }
    if !f.is_surjective() || !g.is_surjective() {
        return Err(GroupError::NotSurjective);
    }
    let gg = f.source();
    let hh = g.source();
    let mut pairs: Vec<(GroupElement, GroupElement)> = Vec::new();
    for a in gg.elements() {
        for b in hh.elements() {
            if f.apply(a) == g.apply(b) {
                pairs.push((a, b));
            }
        }
    }
    let n = pairs.len();
    assert_eq!(
        n,
        gg.order() * hh.order() / f.target().order(),
        "pullback order must be |G||H|/|Q|"
    );
    let mut index_of = std::collections::HashMap::new();
    for (i, &p) in pairs.iter().enumerate() {
        index_of.insert(p, i);
    }
    let mut table = vec![0u16; n * n];
    for (i, &(a1, b1)) in pairs.iter().enumerate() {
        for (j, &(a2, b2)) in pairs.iter().enumerate() {
            let p = (gg.mul(a1, a2), hh.mul(b1, b2));
            table[i * n + j] = index_of[&p] as u16;
        }
    }
    let identity = index_of[&(gg.identity(), hh.identity())] as u16;
    let labels: Vec<String> = pairs.iter().map(|&(a, b)| pair_label(gg, hh, a, b)).collect();
    let provisional = FiniteGroup::from_table(
        n,
        table.clone(),
        identity,
        (0..n as u16).collect(),
        Some(labels.clone()),
    )?;
    let generators: Vec<u16> = provisional
        .minimal_generating_set()
        .into_iter()
        .map(|e| e.0)
        .collect();
    let group = Arc::new(FiniteGroup::from_table(
        n,
        table,
        identity,
        generators,
        Some(labels),
    )?);
    let map1: Vec<u16> = pairs.iter().map(|&(a, _)| a.0).collect();
    let map2: Vec<u16> = pairs.iter().map(|&(_, b)| b.0).collect();
    let proj1 = Homomorphism::new(group.clone(), gg.clone(), map1)?;
    let proj2 = Homomorphism::new(group.clone(), hh.clone(), map2)?;
    Ok(PullbackResult {
        group,
        proj1,
        proj2,
    })
}

impl FiniteGroup {
    /// Quotient by a normal subgroup, with the canonical surjection.
    ///
    /// Cosets are represented by their minimal element index and ordered by
    /// representative, so the construction is canonical.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientResult, GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let order = self.order();
        // rep[x] = minimal member of the coset xN.
        let mut rep = vec![u16::MAX; order];
        for x in self.elements() {
            let mut m = u16::MAX;
            for &h in n.members() {
                m = m.min(self.mul(x, h).0);
            }
            rep[x.index()] = m;
        }
        let mut reps: Vec<u16> = rep.clone();
        reps.sort();
        reps.dedup();
        let q = reps.len();
        let coset_index = |x: u16| reps.binary_search(&x).unwrap();
        let mut table = vec![0u16; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                let p = rep[self.mul(GroupElement(a), GroupElement(b)).index()];
                table[i * q + j] = coset_index(p) as u16;
            }
        }
        let identity = coset_index(rep[self.identity().index()]) as u16;
        let mut generators: Vec<u16> = self
            .generators()
            .into_iter()
            .map(|g| coset_index(rep[g.index()]) as u16)
            .filter(|&c| c != identity)
            .collect();
        generators.dedup();
        let labels: Vec<String> = reps
            .iter()
            .map(|&r| self.label(GroupElement(r)))
            .collect();
        let group = Arc::new(FiniteGroup::from_table(
            q,
            table,
            identity,
            generators,
            Some(labels),
        )?);
        let map: Vec<u16> = (0..order).map(|x| coset_index(rep[x]) as u16).collect();
        let canonical = Homomorphism::new(Arc::new(self.clone()), group.clone(), map)?;
        Ok(QuotientResult {
            group,
            map: canonical,
        })
    }
}

/// Central product: the direct product of `g` and `h` with the central
/// elements `zg` and `zh` identified (quotient by the graph of `zg -> zh`).
/// Both elements must be central and of the same order.
pub fn central_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    zg: GroupElement,
    zh: GroupElement,
) -> Result<CentralProductResult, GroupError> {
    if !g.center().contains(zg) || !h.center().contains(zh) {
        return Err(GroupError::Contract("identified elements must be central".into()));
    }
    if g.element_order(zg) != h.element_order(zh) {
        return Err(GroupError::Contract(
            "identified central elements must have equal order".into(),
        ));
    }
    let dp = direct_product(g, h)?;
    let hs = h.order();
    let diag = dp
        .group
        .subgroup_generated(&[GroupElement((zg.index() * hs + h.inverse(zh).index()) as u16)]);
    let quot = dp.group.quotient(&diag)?;
    Ok(CentralProductResult {
        group: quot.group,
        from_product: quot.map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{named_group, named_pullback};

    #[test]
    fn product_orders() {
        let d = named_group("D").unwrap();
        let c = named_group("C").unwrap();
        let dc = direct_product(&d, &c).unwrap();
        assert_eq!(dc.group.order(), 32);
        assert!(!dc.group.is_abelian());
        let dd = direct_product(&d, &d).unwrap();
        assert_eq!(dd.group.order(), 64);
        assert!(dc.proj_left.is_surjective());
        assert!(dc.proj_right.is_surjective());
    }

    #[test]
    fn pullback_over_trivial_target_is_direct_product() {
        let c = named_group("C").unwrap();
        let triv = Arc::new(c.quotient(&c.full_subgroup()).unwrap().group.as_ref().clone());
        let f = Homomorphism::new(c.clone(), triv.clone(), vec![0; 4]).unwrap();
        let res = pullback(&f, &f).unwrap();
        assert_eq!(res.group.order(), 16);
        assert!(res.group.is_abelian());
    }

    #[test]
    fn pullback_orders_match() {
        assert_eq!(named_pullback("DwC").unwrap().group.order(), 16);
        assert_eq!(named_pullback("DwD").unwrap().group.order(), 32);
        assert_eq!(named_pullback("Q8wC").unwrap().group.order(), 16);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let d = named_group("D").unwrap();
        let q = d.quotient(&d.full_subgroup()).unwrap();
        assert_eq!(q.group.order(), 1);
        assert!(q.map.is_surjective());
    }

    #[test]
    fn quotient_requires_normality() {
        let d = named_group("D").unwrap();
        let s = d.generators()[1];
        let refl = d.subgroup_generated(&[s]);
        assert_eq!(refl.order(), 2);
        assert!(matches!(d.quotient(&refl), Err(GroupError::NotNormal)));
    }

    #[test]
    fn pullback_requires_surjections_onto_equal_targets() {
        let c = named_group("C").unwrap();
        let c2 = named_group("C2").unwrap();
        // Trivial (non-surjective) map to C2.
        let f = Homomorphism::new(c.clone(), c2.clone(), vec![0; 4]).unwrap();
        let g = Homomorphism::new(c.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(matches!(pullback(&f, &g), Err(GroupError::NotSurjective)));
        // Mismatched targets.
        let to_c = Homomorphism::new(c.clone(), c.clone(), (0..4).collect()).unwrap();
        assert!(matches!(pullback(&to_c, &g), Err(GroupError::TargetMismatch)));
    }

    #[test]
    fn central_product_contracts() {
        let d = named_group("D").unwrap();
        let r = d.generators()[0];
        let s = d.generators()[1];
        // s is not central in D.
        assert!(central_product(&d, &d, s, s).is_err());
        // Central elements of different orders cannot be identified.
        let c = named_group("C").unwrap();
        let g = c.generators()[0];
        let z = d.mul(r, r);
        assert!(central_product(&d, &c, z, g).is_err());
    }

    #[test]
    fn dd_central_product() {
        let dd = named_group("DD").unwrap();
        assert_eq!(dd.order(), 32);
        assert_eq!(dd.center().order(), 2);
    }

    #[test]
    fn first_isomorphism_smoke() {
        // Quotient map kernel equals the subgroup quotiented by.
        let g = named_group("DwC").unwrap();
        for n in g.normal_subgroups().unwrap() {
            let q = g.quotient(&n).unwrap();
            assert_eq!(q.map.kernel(), n);
            assert!(q.map.is_surjective());
            assert_eq!(q.group.order(), g.order() / n.order());
        }
    }
}
