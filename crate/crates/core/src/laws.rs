//! Automated verification of group laws and structure facts over the zoo.
//!
//! Each checker scans exhaustively and produces a [`LawReport`]; a failed
//! report carries a counterexample that can be re-evaluated through the
//! `group` primitives.

use crate::fp::{named_group, named_pullback, zoo, FpError, ZOO_NAMES};
use crate::group::{is_isomorphic, FiniteGroup, GroupElement, GroupError, GroupRef, Subgroup};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LawError {
    #[error("precondition failed for {law}: {reason}")]
    Precondition { law: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Fp(#[from] FpError),
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub group: String,
    pub holds: bool,
    pub counterexample: Option<Vec<String>>,
}

impl LawReport {
    fn pass(law: &str, group: &str) -> Self {
        LawReport {
            law: law.into(),
            group: group.into(),
            holds: true,
            counterexample: None,
        }
    }

    fn fail(law: &str, group: &str, g: &FiniteGroup, witness: &[GroupElement]) -> Self {
        LawReport {
            law: law.into(),
            group: group.into(),
            holds: false,
            counterexample: Some(witness.iter().map(|&e| g.label(e)).collect()),
        }
    }
}

/// The four laws every image of the second multiquadratic Galois step obeys:
/// exponent dividing 4, commutators of order dividing 2, squares and
/// commutators commuting with each other, and `[[s,t],s]` commuting with both
/// `s` and `t`.
pub fn multiquadratic_laws(g: &FiniteGroup, name: &str) -> LawReport {
    let e = g.identity();
    for a in g.elements() {
        if g.pow(a, 4) != e {
            return LawReport::fail("multiquadratic_laws/exponent4", name, g, &[a]);
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let c = g.commutator(a, b);
            if g.mul(c, c) != e {
                return LawReport::fail("multiquadratic_laws/commutator_square", name, g, &[a, b]);
            }
        }
    }
    let mut central_set: Vec<GroupElement> = Vec::new();
    for a in g.elements() {
        central_set.push(g.mul(a, a));
    }
    for a in g.elements() {
        for b in g.elements() {
            central_set.push(g.commutator(a, b));
        }
    }
    central_set.sort();
    central_set.dedup();
    for &x in &central_set {
        for &y in &central_set {
            if g.mul(x, y) != g.mul(y, x) {
                return LawReport::fail("multiquadratic_laws/squares_commutators_commute", name, g, &[x, y]);
            }
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let w = g.commutator(g.commutator(a, b), a);
            if g.mul(w, a) != g.mul(a, w) || g.mul(w, b) != g.mul(b, w) {
                return LawReport::fail("multiquadratic_laws/double_commutator_centralizes", name, g, &[a, b]);
            }
        }
    }
    LawReport::pass("multiquadratic_laws", name)
}

/// `[s,t] = (s^-1)^2 (s t^-1)^2 t^2` — a free-group identity, so it holds in
/// every group; it can only fail on a non-associative table.
pub fn three_squares_identity(g: &FiniteGroup, name: &str) -> LawReport {
    for a in g.elements() {
        for b in g.elements() {
            let lhs = g.commutator(a, b);
            let p = g.inverse(a);
            let q = g.mul(a, g.inverse(b));
            let rhs = g.mul(g.mul(g.mul(p, p), g.mul(q, q)), g.mul(b, b));
            if lhs != rhs {
                return LawReport::fail("three_squares_identity", name, g, &[a, b]);
            }
        }
    }
    LawReport::pass("three_squares_identity", name)
}

/// Raw scan of `[[x,y],z] [[y,z],x] [[z,x],y] = 1` over all triples.
pub fn jacobi_identity(g: &FiniteGroup, name: &str) -> LawReport {
    let e = g.identity();
    for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                let t1 = g.commutator(g.commutator(x, y), z);
                let t2 = g.commutator(g.commutator(y, z), x);
                let t3 = g.commutator(g.commutator(z, x), y);
                if g.mul(g.mul(t1, t2), t3) != e {
                    return LawReport::fail("metabelian_jacobi", name, g, &[x, y, z]);
                }
            }
        }
    }
    LawReport::pass("metabelian_jacobi", name)
}

/// [`jacobi_identity`] guarded by the metabelian hypothesis under which it is
/// a theorem.
pub fn metabelian_jacobi(g: &FiniteGroup, name: &str) -> Result<LawReport, LawError> {
    if !g.is_metabelian() {
        return Err(LawError::Precondition {
            law: "metabelian_jacobi".into(),
            reason: format!("{name} is not metabelian"),
        });
    }
    Ok(jacobi_identity(g, name))
}

/// Raw scan: for every triple with `[t, p] = 1`, the nested commutators
/// `[t,[s,p]]` and `[p,[s,t]]` agree.
pub fn nested_commutator_symmetry(g: &FiniteGroup, name: &str) -> LawReport {
    let e = g.identity();
    for s in g.elements() {
        for t in g.elements() {
            for p in g.elements() {
                if g.commutator(t, p) != e {
                    continue;
                }
                let lhs = g.commutator(t, g.commutator(s, p));
                let rhs = g.commutator(p, g.commutator(s, t));
                if lhs != rhs {
                    return LawReport::fail("nested_commutator_symmetry", name, g, &[s, t, p]);
                }
            }
        }
    }
    LawReport::pass("nested_commutator_symmetry", name)
}

/// [`nested_commutator_symmetry`] guarded by the laws it is derived from.
pub fn check_nested_commutator_symmetry(
    g: &FiniteGroup,
    name: &str,
) -> Result<LawReport, LawError> {
    let pre = multiquadratic_laws(g, name);
    if !pre.holds {
        return Err(LawError::Precondition {
            law: "nested_commutator_symmetry".into(),
            reason: format!("{name} fails {}", pre.law),
        });
    }
    Ok(nested_commutator_symmetry(g, name))
}

/// Do all squares and commutators lie in the center?
pub fn squares_central(g: &FiniteGroup, name: &str) -> LawReport {
    let z = g.center();
    for a in g.elements() {
        let sq = g.mul(a, a);
        if !z.contains(sq) {
            return LawReport::fail("squares_central", name, g, &[a]);
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            if !z.contains(g.commutator(a, b)) {
                return LawReport::fail("squares_central", name, g, &[a, b]);
            }
        }
    }
    LawReport::pass("squares_central", name)
}

/// Raw scan: every 2-generated subgroup has order at most 32.
pub fn two_generated_order_bound(g: &FiniteGroup, name: &str) -> LawReport {
    for a in g.elements() {
        for b in g.elements() {
            if g.subgroup_generated(&[a, b]).order() > 32 {
                return LawReport::fail("two_generated_bound", name, g, &[a, b]);
            }
        }
    }
    LawReport::pass("two_generated_bound", name)
}

/// [`two_generated_order_bound`] guarded by the squares-and-commutators
/// centrality hypothesis under which the bound is a theorem.
pub fn check_two_generated_bound(g: &FiniteGroup, name: &str) -> Result<LawReport, LawError> {
    let pre = squares_central(g, name);
    if !pre.holds {
        return Err(LawError::Precondition {
            law: "two_generated_bound".into(),
            reason: format!("{name} has a noncentral square or commutator"),
        });
    }
    Ok(two_generated_order_bound(g, name))
}

fn require(law: &str, cond: bool, reason: String) -> Result<(), LawError> {
    if cond {
        Ok(())
    } else {
        Err(LawError::Precondition {
            law: law.into(),
            reason,
        })
    }
}

/// Normal-form spanning for a two-generator group with fourth powers trivial,
/// commutator squares trivial, and centralized double commutators:
/// every element is `x^e1 y^e2 [x,y]^e3 [[x,y],x]^e4 [[x,y],y]^e5` with
/// `e1,e2 in 0..4` and `e3,e4,e5 in 0..2`, so the order is at most 128.
/// When `y^2 = 1` the double commutator `[[x,y],y]` collapses, `e2 in 0..2`
/// and `e5 = 0` suffice, and the order is at most 32.
pub fn normal_form_two_gen(
    g: &FiniteGroup,
    name: &str,
    x: GroupElement,
    y: GroupElement,
) -> Result<LawReport, LawError> {
    const LAW: &str = "normal_form_span";
    let e = g.identity();
    require(
        LAW,
        g.subgroup_generated(&[x, y]).order() == g.order(),
        format!("x,y do not generate {name}"),
    )?;
    require(LAW, g.pow(x, 4) == e, "x^4 != 1".into())?;
    require(LAW, g.pow(y, 4) == e, "y^4 != 1".into())?;
    let c = g.commutator(x, y);
    let cx = g.commutator(c, x);
    let cy = g.commutator(c, y);
    require(LAW, g.mul(c, c) == e, "[x,y]^2 != 1".into())?;
    require(LAW, g.mul(cx, cx) == e, "[[x,y],x]^2 != 1".into())?;
    require(LAW, g.mul(cy, cy) == e, "[[x,y],y]^2 != 1".into())?;
    for (w, wn) in [(cx, "[[x,y],x]"), (cy, "[[x,y],y]")] {
        for (v, vn) in [(x, "x"), (y, "y")] {
            require(
                LAW,
                g.mul(w, v) == g.mul(v, w),
                format!("{wn} does not commute with {vn}"),
            )?;
        }
    }
    let reduced = g.mul(y, y) == e;
    if reduced && cy != e {
        return Ok(LawReport::fail(LAW, name, g, &[cy]));
    }
    let (e2_range, e5_range) = if reduced { (2, 1) } else { (4, 2) };
    let bound = if reduced { 32 } else { 128 };
    if g.order() > bound {
        return Ok(LawReport {
            law: LAW.into(),
            group: name.into(),
            holds: false,
            counterexample: Some(vec![format!("order {} exceeds {}", g.order(), bound)]),
        });
    }
    let mut covered = vec![false; g.order()];
    for e1 in 0..4i64 {
        for e2 in 0..e2_range {
            for e3 in 0..2i64 {
                for e4 in 0..2i64 {
                    for e5 in 0..e5_range {
                        let mut w = g.pow(x, e1);
                        w = g.mul(w, g.pow(y, e2));
                        w = g.mul(w, g.pow(c, e3));
                        w = g.mul(w, g.pow(cx, e4));
                        w = g.mul(w, g.pow(cy, e5));
                        covered[w.index()] = true;
                    }
                }
            }
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(i) => Ok(LawReport::fail(LAW, name, g, &[GroupElement(i as u16)])),
        None => Ok(LawReport::pass(LAW, name)),
    }
}

/// Normal-form spanning for the three-generator group `G2`: the 64 products
/// `x^e1 y^e2 z^e3 [x,y]^e4 [x,z]^e5 [y,[x,z]]^e6` with `e_i in 0..2` are
/// pairwise distinct and cover the group.
pub fn normal_form_g2(
    g: &FiniteGroup,
    name: &str,
    x: GroupElement,
    y: GroupElement,
    z: GroupElement,
) -> Result<LawReport, LawError> {
    const LAW: &str = "normal_form_span_g2";
    require(
        LAW,
        g.subgroup_generated(&[x, y, z]).order() == g.order(),
        format!("x,y,z do not generate {name}"),
    )?;
    require(LAW, g.order() <= 64, format!("order {} exceeds 64", g.order()))?;
    let cxy = g.commutator(x, y);
    let cxz = g.commutator(x, z);
    let w = g.commutator(y, cxz);
    let mut covered = vec![false; g.order()];
    let mut dup = None;
    for bits in 0..64u32 {
        let parts = [x, y, z, cxy, cxz, w];
        let mut acc = g.identity();
        for (i, &p) in parts.iter().enumerate() {
            if bits >> i & 1 == 1 {
                acc = g.mul(acc, p);
            }
        }
        if covered[acc.index()] {
            dup = Some(acc);
        }
        covered[acc.index()] = true;
    }
    if let Some(d) = dup {
        return Ok(LawReport::fail(LAW, name, g, &[d]));
    }
    match covered.iter().position(|&c| !c) {
        Some(i) => Ok(LawReport::fail(LAW, name, g, &[GroupElement(i as u16)])),
        None => Ok(LawReport::pass(LAW, name)),
    }
}

/// Normal subgroups `N` of `g` with `g/N` isomorphic to `target`.
pub fn normal_subgroups_with_quotient(
    g: &GroupRef,
    target: &GroupRef,
) -> Result<Vec<Subgroup>, LawError> {
    if target.order() == 0 || g.order() % target.order() != 0 {
        return Ok(vec![]);
    }
    let k = g.order() / target.order();
    let mut out = Vec::new();
    for n in g.subgroups_of_order(k)? {
        if !g.is_normal(&n) {
            continue;
        }
        let q = g.quotient(&n)?;
        if is_isomorphic(&q.group, target)? {
            out.push(n);
        }
    }
    Ok(out)
}

fn claim(law: &str, group: &str, holds: bool, detail: String) -> LawReport {
    LawReport {
        law: law.into(),
        group: group.into(),
        holds,
        counterexample: if holds { None } else { Some(vec![detail]) },
    }
}

/// Materializes a subgroup as a standalone group (sub-Cayley-table).
pub fn subgroup_as_group(g: &FiniteGroup, s: &Subgroup) -> Result<GroupRef, LawError> {
    let n = s.order();
    let idx = |a: GroupElement| s.members().binary_search(&a).unwrap();
    let mut table = vec![0u16; n * n];
    for (i, &a) in s.members().iter().enumerate() {
        for (j, &b) in s.members().iter().enumerate() {
            table[i * n + j] = idx(g.mul(a, b)) as u16;
        }
    }
    let identity = idx(g.identity()) as u16;
    let labels: Vec<String> = s.members().iter().map(|&a| g.label(a)).collect();
    let provisional = FiniteGroup::from_table(
        n,
        table.clone(),
        identity,
        (0..n as u16).collect(),
        Some(labels.clone()),
    )
    .map_err(LawError::Group)?;
    let gens: Vec<u16> = provisional
        .minimal_generating_set()
        .into_iter()
        .map(|e| e.0)
        .collect();
    Ok(std::sync::Arc::new(
        FiniteGroup::from_table(n, table, identity, gens, Some(labels)).map_err(LawError::Group)?,
    ))
}

/// The kernels of the two maps onto `Z/2` underlying a pullback, recovered as
/// the element lists paired with the identity of the other factor.
fn pullback_factor_kernels(
    pb: &crate::group::PullbackResult,
) -> (Vec<GroupElement>, Vec<GroupElement>) {
    let d1 = pb.proj1.target();
    let d2 = pb.proj2.target();
    let mut k1: Vec<GroupElement> = Vec::new();
    for u in d1.elements() {
        if pb
            .group
            .elements()
            .any(|m| pb.proj1.apply(m) == u && pb.proj2.apply(m) == d2.identity())
        {
            k1.push(u);
        }
    }
    let mut k2: Vec<GroupElement> = Vec::new();
    for v in d2.elements() {
        if pb
            .group
            .elements()
            .any(|m| pb.proj2.apply(m) == v && pb.proj1.apply(m) == d1.identity())
        {
            k2.push(v);
        }
    }
    (k1, k2)
}

/// The named structure facts, each checked by exhaustive subgroup or quotient
/// scans.
pub fn structure_suite() -> Result<Vec<LawReport>, LawError> {
    let mut out = Vec::new();
    let c = named_group("C")?;
    let c2 = named_group("C2")?;
    let d = named_group("D")?;
    let klein = named_group("Klein")?;
    let dwc = named_group("DwC")?;
    let dwd = named_group("DwD")?;
    let dd = named_group("DD")?;
    let e16 = named_group("E16")?;
    let g1 = named_group("G1")?;
    let g2 = named_group("G2")?;

    // Exactly two normal subgroups of DwC with cyclic quartic quotient, and
    // their intersection has order 2.
    let ns = normal_subgroups_with_quotient(&dwc, &c)?;
    out.push(claim(
        "dwc_two_cyclic_quartic_quotients",
        "DwC",
        ns.len() == 2,
        format!("found {}", ns.len()),
    ));
    if ns.len() == 2 {
        let inter: Vec<GroupElement> = ns[0]
            .members()
            .iter()
            .copied()
            .filter(|&m| ns[1].contains(m))
            .collect();
        out.push(claim(
            "dwc_cyclic_kernels_intersect_in_order_2",
            "DwC",
            inter.len() == 2,
            format!("intersection order {}", inter.len()),
        ));
    }

    // D has no cyclic quartic quotient; its only order-4 quotient is Klein.
    let d_cyclic = normal_subgroups_with_quotient(&d, &c)?;
    let d_klein = normal_subgroups_with_quotient(&d, &klein)?;
    out.push(claim(
        "d_admits_no_cyclic_quartic_quotient",
        "D",
        d_cyclic.is_empty() && d_klein.len() == 1,
        format!("cyclic {}, klein {}", d_cyclic.len(), d_klein.len()),
    ));

    out.push(claim(
        "dwc_derived_subgroup_order_2",
        "DwC",
        dwc.derived_subgroup().order() == 2,
        format!("order {}", dwc.derived_subgroup().order()),
    ));
    out.push(claim(
        "dwd_derived_subgroup_order_4",
        "DwD",
        dwd.derived_subgroup().order() == 4,
        format!("order {}", dwd.derived_subgroup().order()),
    ));

    // DwC modulo its derived subgroup is C x Z/2.
    let ab = dwc.quotient(&dwc.derived_subgroup())?;
    let c_x_c2 = crate::group::direct_product(&c, &c2)?.group;
    out.push(claim(
        "dwc_abelianization_is_c_x_c2",
        "DwC",
        is_isomorphic(&ab.group, &c_x_c2)?,
        "abelianization mismatch".into(),
    ));

    // DwD has a unique abelian subgroup of order 16, isomorphic to (Z/2)^4,
    // and it is ker(l1) x ker(l2).
    let abelian16: Vec<Subgroup> = dwd
        .subgroups_of_order(16)?
        .into_iter()
        .filter(|s| s.is_abelian_in(&dwd))
        .collect();
    let unique = abelian16.len() == 1;
    out.push(claim(
        "dwd_unique_abelian_subgroup_16",
        "DwD",
        unique,
        format!("found {}", abelian16.len()),
    ));
    if unique {
        let sub = &abelian16[0];
        let as_group = subgroup_as_group(&dwd, sub)?;
        out.push(claim(
            "dwd_abelian_16_is_e16",
            "DwD",
            is_isomorphic(&as_group, &e16)?,
            "not elementary abelian".into(),
        ));
        let pb = named_pullback("DwD")?;
        let (k1, k2) = pullback_factor_kernels(&pb);
        let l1 = pb.proj1.target().subgroup_generated(&k1);
        let l2 = pb.proj2.target().subgroup_generated(&k2);
        let product: Vec<GroupElement> = pb
            .group
            .elements()
            .filter(|&m| l1.contains(pb.proj1.apply(m)) && l2.contains(pb.proj2.apply(m)))
            .collect();
        let prod_sub = pb.group.subgroup_from_members(product)?;
        out.push(claim(
            "dwd_abelian_16_is_kernel_product",
            "DwD",
            prod_sub.order() == 16 && {
                let pg = subgroup_as_group(&pb.group, &prod_sub)?;
                prod_sub.is_abelian_in(&pb.group) && is_isomorphic(&pg, &e16)?
            },
            "kernel product differs".into(),
        ));
    }

    // (Z/2)^4 is not a quotient of DwD.
    let e16_quot = normal_subgroups_with_quotient(&dwd, &e16)?;
    out.push(claim(
        "dwd_has_no_e16_quotient",
        "DwD",
        e16_quot.is_empty(),
        format!("found {}", e16_quot.len()),
    ));

    // DwC is a quotient of G1.
    let g1_to_dwc = normal_subgroups_with_quotient(&g1, &dwc)?;
    out.push(claim(
        "g1_has_dwc_quotient",
        "G1",
        !g1_to_dwc.is_empty(),
        "no order-2 normal subgroup with DwC quotient".into(),
    ));

    // G2 has a unique order-2 subgroup with quotient DwD ...
    let g2_to_dwd = normal_subgroups_with_quotient(&g2, &dwd)?;
    out.push(claim(
        "g2_unique_dwd_quotient",
        "G2",
        g2_to_dwd.len() == 1,
        format!("found {}", g2_to_dwd.len()),
    ));

    // ... and a unique subgroup isomorphic to DD. Order-32 subgroups of G2
    // all have index 2, so the linear-functional scan is exhaustive.
    let mut dd_count = 0;
    for s in g2.index2_subgroups() {
        let as_group = subgroup_as_group(&g2, &s)?;
        if is_isomorphic(&as_group, &dd)? {
            dd_count += 1;
        }
    }
    out.push(claim(
        "g2_unique_dd_subgroup",
        "G2",
        dd_count == 1,
        format!("found {dd_count}"),
    ));

    Ok(out)
}

/// The full law suite over the zoo. `squares_central` is expected to fail on
/// `G1` and `G2` (their towers leave the smaller multiquadratic step), so for
/// those two the suite reports the failure itself as the law.
pub fn zoo_law_suite() -> Result<Vec<LawReport>, LawError> {
    let mut out = Vec::new();
    let members = zoo();
    for (name, g) in &members {
        out.push(multiquadratic_laws(g, name));
        out.push(three_squares_identity(g, name));
        out.push(metabelian_jacobi(g, name)?);
        out.push(check_nested_commutator_symmetry(g, name)?);
    }
    for (name, g) in &members {
        let sc = squares_central(g, name);
        if *name == "G1" || *name == "G2" {
            out.push(LawReport {
                law: "squares_noncentral".into(),
                group: name.to_string(),
                holds: !sc.holds,
                counterexample: sc.counterexample,
            });
        } else {
            out.push(sc);
        }
    }
    for name in ["DwC", "DwD", "DD", "E16", "CxC"] {
        let g = named_group(name)?;
        out.push(check_two_generated_bound(&g, name)?);
    }
    // Normal forms: G1 (reduced case), CxC (abelian case), the order-128
    // free object (full case), and G2's six-exponent form.
    let g1 = named_group("G1")?;
    let gens = g1.generators();
    out.push(normal_form_two_gen(&g1, "G1", gens[0], gens[1])?);
    let cxc = named_group("CxC")?;
    let gens = cxc.generators();
    out.push(normal_form_two_gen(&cxc, "CxC", gens[0], gens[1])?);
    let g0 = crate::fp::enumerate_with_retry(&crate::fp::presentation_g0(), 128)?;
    let gens = g0.generators();
    out.push(normal_form_two_gen(&g0, "G0", gens[0], gens[1])?);
    let g2 = named_group("G2")?;
    let gens = g2.generators();
    out.push(normal_form_g2(&g2, "G2", gens[0], gens[1], gens[2])?);
    out.extend(structure_suite()?);
    Ok(out)
}

/// True when every report in the suite holds.
pub fn all_hold(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// The law suite only ever names zoo groups (plus the free object `G0`).
pub fn is_zoo_name(name: &str) -> bool {
    ZOO_NAMES.contains(&name) || name == "G0"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{enumerate_presentation, GroupPresentation};

    fn s4() -> FiniteGroup {
        let p = GroupPresentation::parse("gens: a b; rels: a^2, b^3, (ab)^4").unwrap();
        enumerate_presentation(&p, 200).unwrap()
    }

    #[test]
    fn suite_is_green_over_the_zoo() {
        let reports = zoo_law_suite().unwrap();
        for r in &reports {
            assert!(
                r.holds,
                "{} failed on {}: {:?}",
                r.law, r.group, r.counterexample
            );
            assert!(is_zoo_name(&r.group));
        }
    }

    #[test]
    fn multiquadratic_laws_fail_on_s4() {
        let g = s4();
        let r = multiquadratic_laws(&g, "S4");
        assert!(!r.holds);
        assert!(r.counterexample.is_some());
        assert!(r.law.starts_with("multiquadratic_laws/"));
    }

    #[test]
    fn jacobi_fails_on_s4_and_wrapper_rejects_it() {
        let g = s4();
        let raw = jacobi_identity(&g, "S4");
        assert!(!raw.holds, "S4 should violate the metabelian identity");
        assert!(matches!(
            metabelian_jacobi(&g, "S4"),
            Err(LawError::Precondition { .. })
        ));
    }

    #[test]
    fn nested_commutator_symmetry_fails_on_s4() {
        let g = s4();
        let raw = nested_commutator_symmetry(&g, "S4");
        assert!(!raw.holds);
        assert!(matches!(
            check_nested_commutator_symmetry(&g, "S4"),
            Err(LawError::Precondition { .. })
        ));
    }

    #[test]
    fn counterexamples_recheck_through_primitives() {
        let g = s4();
        let r = multiquadratic_laws(&g, "S4");
        let labels = r.counterexample.unwrap();
        let find = |l: &str| {
            g.elements()
                .find(|&e| g.label(e) == l)
                .expect("counterexample label resolves")
        };
        match r.law.as_str() {
            "multiquadratic_laws/exponent4" => {
                let a = find(&labels[0]);
                assert_ne!(g.pow(a, 4), g.identity());
            }
            other => panic!("unexpected first failure {other}"),
        }
    }

    #[test]
    fn squares_central_splits_the_zoo() {
        for name in ["C", "D", "Q8", "DwC", "DwD", "DD", "Q8wC", "CxC", "E16"] {
            let g = named_group(name).unwrap();
            assert!(squares_central(&g, name).holds, "{name}");
        }
        for name in ["G1", "G2"] {
            let g = named_group(name).unwrap();
            let r = squares_central(&g, name);
            assert!(!r.holds, "{name} must fail squares-central");
            assert!(r.counterexample.is_some());
        }
    }

    #[test]
    fn two_generated_bound_raw_fails_on_g0() {
        let g0 = crate::fp::enumerate_with_retry(&crate::fp::presentation_g0(), 128).unwrap();
        assert_eq!(g0.order(), 128);
        let raw = two_generated_order_bound(&g0, "G0");
        assert!(!raw.holds);
        let g1 = named_group("G1").unwrap();
        assert!(matches!(
            check_two_generated_bound(&g1, "G1"),
            Err(LawError::Precondition { .. })
        ));
    }

    #[test]
    fn normal_form_rejects_s4_naming_the_hypothesis() {
        let g = s4();
        let gens = g.generators();
        match normal_form_two_gen(&g, "S4", gens[0], gens[1]) {
            Err(LawError::Precondition { reason, .. }) => {
                assert!(reason.contains("^4"), "got: {reason}");
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn normal_form_g2_fails_on_wrong_group() {
        // G1 has order 32 < 64, so the 64 products must collide.
        let g1 = named_group("G1").unwrap();
        let gens = g1.generators();
        let z = g1.mul(gens[0], gens[1]);
        let r = normal_form_g2(&g1, "G1", gens[0], gens[1], z).unwrap();
        assert!(!r.holds);
    }

    #[test]
    fn structure_suite_counts() {
        let reports = structure_suite().unwrap();
        assert!(all_hold(&reports), "{reports:?}");
        assert!(reports.len() >= 10);
    }

    #[test]
    fn negative_control_for_structure_claims() {
        // The "two cyclic quartic quotients" count is specific to DwC.
        let c = named_group("C").unwrap();
        let dwd = named_group("DwD").unwrap();
        let ns = normal_subgroups_with_quotient(&dwd, &c).unwrap();
        assert_ne!(ns.len(), 2);
    }

    #[test]
    fn g2_contains_dihedral_on_y_and_xz_commutator() {
        // The subgroup generated by the second generator together with the
        // commutator of the first and third is dihedral of order 8.
        let g2 = named_group("G2").unwrap();
        let gens = g2.generators();
        let (x, y, z) = (gens[0], gens[1], gens[2]);
        let d1 = g2.subgroup_generated(&[y, g2.commutator(x, z)]);
        assert_eq!(d1.order(), 8);
        let as_group = subgroup_as_group(&g2, &d1).unwrap();
        let d = named_group("D").unwrap();
        assert!(is_isomorphic(&as_group, &d).unwrap());
        // Symmetrically for the third generator and [x,y].
        let d2 = g2.subgroup_generated(&[z, g2.commutator(x, y)]);
        assert_eq!(d2.order(), 8);
        // Together with order 32, matching the sqrt(a)-fixer inside G2.
        let h = g2.subgroup_generated(&[y, z, g2.commutator(x, z), g2.commutator(x, y)]);
        assert_eq!(h.order(), 32);
        let dd = named_group("DD").unwrap();
        assert!(is_isomorphic(&subgroup_as_group(&g2, &h).unwrap(), &dd).unwrap());
    }

    #[test]
    fn dd_is_not_the_direct_product() {
        let dd = named_group("DD").unwrap();
        let d = named_group("D").unwrap();
        let dxd = crate::group::direct_product(&d, &d).unwrap().group;
        assert_ne!(dd.order(), dxd.order());
        assert!(!is_isomorphic(&dd, &dxd).unwrap());
    }
}
