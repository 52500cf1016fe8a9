//! Registry of the named groups used throughout the crate.
//!
//! Canonical names: `C2`, `C` (cyclic of order 4), `D` (dihedral of order 8),
//! `Q8`, `Klein`, `CxC`, `E16` (elementary abelian of order 16), `G1`, `G2`,
//! and the pullbacks/central product `DwC`, `DwD`, `DD`, `Q8wC`.

use super::{enumerate_with_retry, presentation_g1, presentation_g2, FpError, GroupPresentation};
use crate::group::{
    central_product, direct_product, pullback, FiniteGroup, GroupRef, Homomorphism,
    PullbackResult, Subgroup,
};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Zoo members in canonical order.
pub const ZOO_NAMES: [&str; 13] = [
    "C2", "C", "Klein", "D", "Q8", "CxC", "E16", "DwC", "Q8wC", "DwD", "DD", "G1", "G2",
];

/// Which Klein four-subgroup of the dihedral group `D = <r, s>` serves as the
/// kernel of the map onto `Z/2`: the one containing `s`, or the one
/// containing `rs`. The outer automorphism of `D` swaps the two choices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KleinKernel {
    S,
    Rs,
}

fn cache() -> &'static Mutex<HashMap<String, GroupRef>> {
    static CACHE: OnceLock<Mutex<HashMap<String, GroupRef>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn canonical_name(name: &str) -> Option<&'static str> {
    match name {
        "C2" | "Z2" => Some("C2"),
        "C" | "C4" => Some("C"),
        "Klein" | "V4" => Some("Klein"),
        "D" | "D8" => Some("D"),
        "Q8" => Some("Q8"),
        "CxC" | "C×C" | "C4xC4" => Some("CxC"),
        "E16" | "Z2^4" | "(Z/2)^4" => Some("E16"),
        "DwC" | "D^C" | "D⋏C" => Some("DwC"),
        "DwD" | "D^D" | "D⋏D" => Some("DwD"),
        "DD" => Some("DD"),
        "Q8wC" | "Q8^C" | "Q8⋏C" => Some("Q8wC"),
        "G1" => Some("G1"),
        "G2" => Some("G2"),
        _ => None,
    }
}

fn from_dsl(dsl: &str, expected: usize) -> FiniteGroup {
    let p = GroupPresentation::parse(dsl).expect("registry presentation parses");
    enumerate_with_retry(&p, expected).expect("registry presentation enumerates")
}

/// The two Klein subgroups and the cyclic subgroup of `D`, by kernel choice.
fn dihedral_kernel(d: &FiniteGroup, kernel: KleinKernel) -> Subgroup {
    let r = d.generators()[0];
    let s = d.generators()[1];
    let r2 = d.mul(r, r);
    match kernel {
        KleinKernel::S => d.subgroup_generated(&[r2, s]),
        KleinKernel::Rs => d.subgroup_generated(&[r2, d.mul(r, s)]),
    }
}

/// Surjection onto C2 with the given index-2 kernel.
fn onto_c2(g: &GroupRef, kernel: &Subgroup) -> Result<Homomorphism, FpError> {
    assert_eq!(kernel.order() * 2, g.order());
    let c2 = named_group("C2")?;
    let map: Vec<u16> = g
        .elements()
        .map(|a| if kernel.contains(a) { 0 } else { 1 })
        .collect();
    Ok(Homomorphism::new(g.clone(), c2, map)?)
}

fn eta_c() -> Result<Homomorphism, FpError> {
    let c = named_group("C")?;
    let g = c.generators()[0];
    let ker = c.subgroup_generated(&[c.mul(g, g)]);
    onto_c2(&c, &ker)
}

/// Pullback of `D -> Z/2` (chosen Klein kernel) with `C -> Z/2`.
pub fn dc_pullback(kernel: KleinKernel) -> Result<PullbackResult, FpError> {
    let d = named_group("D")?;
    let lambda = onto_c2(&d, &dihedral_kernel(&d, kernel))?;
    Ok(pullback(&lambda, &eta_c()?)?)
}

/// Pullback of two copies of `D -> Z/2` with the chosen Klein kernels.
pub fn dd_pullback(k1: KleinKernel, k2: KleinKernel) -> Result<PullbackResult, FpError> {
    let d = named_group("D")?;
    let l1 = onto_c2(&d, &dihedral_kernel(&d, k1))?;
    let l2 = onto_c2(&d, &dihedral_kernel(&d, k2))?;
    Ok(pullback(&l1, &l2)?)
}

/// Pullback of the nontrivial `Q8 -> Z/2` (kernel `<i>`) with `C -> Z/2`.
pub fn q8c_pullback() -> Result<PullbackResult, FpError> {
    let q8 = named_group("Q8")?;
    let i = q8.generators()[0];
    let ker = q8.subgroup_generated(&[i]);
    let lambda = onto_c2(&q8, &ker)?;
    Ok(pullback(&lambda, &eta_c()?)?)
}

/// The alternative construction of `Q8wC`: pullback of `D -> Z/2` with the
/// *cyclic* kernel `<r>` against `C -> Z/2`.
pub fn q8wc_via_dihedral() -> Result<GroupRef, FpError> {
    let d = named_group("D")?;
    let r = d.generators()[0];
    let ker = d.subgroup_generated(&[r]);
    let lambda = onto_c2(&d, &ker)?;
    Ok(pullback(&lambda, &eta_c()?)?.group)
}

/// Pullback-built groups together with their projection homomorphisms
/// (canonical kernel choices: `KleinKernel::S` everywhere).
pub fn named_pullback(name: &str) -> Result<PullbackResult, FpError> {
    match canonical_name(name) {
        Some("DwC") => dc_pullback(KleinKernel::S),
        Some("DwD") => dd_pullback(KleinKernel::S, KleinKernel::S),
        Some("Q8wC") => q8c_pullback(),
        _ => Err(FpError::UnknownName(name.to_string())),
    }
}

fn build(name: &str) -> Result<GroupRef, FpError> {
    Ok(match name {
        "C2" => Arc::new(from_dsl("gens: a; rels: a^2", 2)),
        "C" => Arc::new(from_dsl("gens: g; rels: g^4", 4)),
        "Klein" => Arc::new(from_dsl("gens: a b; rels: a^2, b^2, [a,b]", 4)),
        "D" => Arc::new(from_dsl("gens: r s; rels: r^4, s^2, (rs)^2", 8)),
        "Q8" => Arc::new(from_dsl("gens: i j; rels: i^4, i^2 j^-2, j^-1 i j i", 8)),
        "CxC" => {
            let c = named_group("C")?;
            direct_product(&c, &c)?.group
        }
        "E16" => {
            let c2 = named_group("C2")?;
            let v4 = direct_product(&c2, &c2)?.group;
            let v8 = direct_product(&v4, &c2)?.group;
            direct_product(&v8, &c2)?.group
        }
        "G1" => Arc::new(enumerate_with_retry(&presentation_g1(), 32)?),
        "G2" => Arc::new(enumerate_with_retry(&presentation_g2(), 64)?),
        "DwC" | "DwD" | "Q8wC" => named_pullback(name)?.group,
        "DD" => {
            let d = named_group("D")?;
            let r = d.generators()[0];
            let z = d.mul(r, r);
            central_product(&d, &d, z, z)?.group
        }
        _ => return Err(FpError::UnknownName(name.to_string())),
    })
}

/// Cached, deterministic lookup of a named group.
pub fn named_group(name: &str) -> Result<GroupRef, FpError> {
    let canon = canonical_name(name).ok_or_else(|| FpError::UnknownName(name.to_string()))?;
    if let Some(g) = cache().lock().unwrap().get(canon) {
        return Ok(g.clone());
    }
    let built = build(canon)?;
    let mut lock = cache().lock().unwrap();
    Ok(lock.entry(canon.to_string()).or_insert(built).clone())
}

/// The whole zoo, in canonical order.
pub fn zoo() -> Vec<(&'static str, GroupRef)> {
    ZOO_NAMES
        .iter()
        .map(|&n| (n, named_group(n).expect("zoo members build")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    #[test]
    fn named_orders() {
        for (name, order) in [
            ("C2", 2),
            ("C", 4),
            ("Klein", 4),
            ("D", 8),
            ("Q8", 8),
            ("CxC", 16),
            ("E16", 16),
            ("DwC", 16),
            ("Q8wC", 16),
            ("DwD", 32),
            ("DD", 32),
            ("G1", 32),
            ("G2", 64),
        ] {
            assert_eq!(named_group(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(named_group("D⋏C").unwrap().order(), 16);
        assert_eq!(named_group("(Z/2)^4").unwrap().order(), 16);
        assert!(named_group("nonsense").is_err());
    }

    #[test]
    fn klein_kernel_variants_are_isomorphic() {
        let a = dc_pullback(KleinKernel::S).unwrap().group;
        let b = dc_pullback(KleinKernel::Rs).unwrap().group;
        assert!(is_isomorphic(&a, &b).unwrap());
        let ss = dd_pullback(KleinKernel::S, KleinKernel::S).unwrap().group;
        let rr = dd_pullback(KleinKernel::Rs, KleinKernel::Rs).unwrap().group;
        let sr = dd_pullback(KleinKernel::S, KleinKernel::Rs).unwrap().group;
        assert!(is_isomorphic(&ss, &rr).unwrap());
        assert!(is_isomorphic(&ss, &sr).unwrap());
    }

    #[test]
    fn q8wc_two_constructions_agree() {
        let a = named_group("Q8wC").unwrap();
        let b = q8wc_via_dihedral().unwrap();
        assert_eq!(b.order(), 16);
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn dd_differs_from_both_pullbacks() {
        let dd = named_group("DD").unwrap();
        let dwd = named_group("DwD").unwrap();
        assert!(!is_isomorphic(&dd, &dwd).unwrap());
    }

    #[test]
    fn cache_returns_identical_objects() {
        let a = named_group("G1").unwrap();
        let b = named_group("G1").unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
