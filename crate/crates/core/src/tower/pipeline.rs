//! End-to-end tower constructions: from a split-symbol witness over the
//! rationals to an explicit Galois tower with its automorphism group
//! certified against the named groups.

use super::{
    find_gamma_d, solve_norm_equation, AutomorphismGroup, TowerElement, TowerError, TowerField,
};
use crate::field::{rationals, FieldModel, SquareClass};
use crate::fp::named_group;
use crate::group::{isomorphism, FiniteGroup, GroupElement, GroupRef, Subgroup};
use crate::laws::{normal_subgroups_with_quotient, subgroup_as_group};
use crate::rigidity::{is_rigid, g2_realizability};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
pub struct ElementRepr {
    pub coeffs: Vec<String>,
    pub display: String,
}

impl ElementRepr {
    fn new(t: &TowerField, x: &TowerElement) -> ElementRepr {
        ElementRepr {
            coeffs: x.coeffs().iter().map(|c| c.to_string()).collect(),
            display: t.display(x),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupCertificate {
    pub order: usize,
    pub isomorphic_to: String,
    /// Element-wise image of the isomorphism witness.
    pub witness: Vec<u16>,
}

#[derive(Clone, Debug, Serialize)]
pub struct G1TowerReport {
    pub a: i64,
    pub b: i64,
    pub height: u32,
    pub alpha: ElementRepr,
    pub beta: ElementRepr,
    pub gamma: ElementRepr,
    pub d: String,
    pub radicands: Vec<ElementRepr>,
    pub degree_e: usize,
    pub degree_k: usize,
    pub degree_l: usize,
    /// Count of automorphisms sigma of K with gamma * sigma(gamma) a square
    /// in K (must be all of them).
    pub galois_closure_checks: usize,
    pub gal_k: GroupCertificate,
    pub gal_l: GroupCertificate,
    /// The two cyclic quartic subextensions through Q(sqrt a).
    pub cyclic_quartics: Vec<String>,
    pub minus_a_nonrigid: bool,
    /// E(sqrt gamma) over Q is not Galois, witnessing that L leaves the
    /// smaller multiquadratic step.
    pub e_sqrt_gamma_not_galois: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct G2TowerReport {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub height: u32,
    pub beta: ElementRepr,
    pub gamma: ElementRepr,
    pub delta: ElementRepr,
    pub d: String,
    pub radicands: Vec<ElementRepr>,
    pub degree_e: usize,
    pub degree_k: usize,
    pub degree_l: usize,
    pub galois_closure_checks: usize,
    pub gal_k: GroupCertificate,
    pub gal_l: GroupCertificate,
    /// Gal(K / Q(sqrt a)) is the unique abelian subgroup of order 16.
    pub abelian_16_is_sqrt_a_fixer: bool,
    /// Gal(K / Q(sqrt a)) is elementary abelian of order 16.
    pub sqrt_a_fixer_in_k: GroupCertificate,
    /// Gal(L / Q(sqrt a)) is the central product DD.
    pub sqrt_a_fixer_in_l: GroupCertificate,
    pub minus_a_nonrigid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn is_squarefree(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

fn odd_prime_factors(n: i64, into: &mut Vec<u32>) {
    let mut n = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        while n % p == 0 {
            if p != 2 {
                into.push(p as u32);
            }
            n /= p;
        }
        p += 1;
    }
    if n > 1 && n != 2 {
        into.push(n as u32);
    }
}

/// The rationals model supporting the given integers, and their classes.
fn supporting_model(values: &[i64]) -> Result<(FieldModel, Vec<SquareClass>), TowerError> {
    let mut primes = vec![2u32];
    for &v in values {
        odd_prime_factors(v, &mut primes);
    }
    primes.sort_unstable();
    primes.dedup();
    let model = rationals(&primes)?;
    let classes = values
        .iter()
        .map(|&v| {
            let mut bits = 0u8;
            if v < 0 {
                bits |= 1;
            }
            let mut m = v.unsigned_abs();
            for (i, &p) in primes.iter().enumerate() {
                if m % p as u64 == 0 {
                    bits |= 1 << (i + 1);
                    m /= p as u64;
                }
            }
            SquareClass(bits)
        })
        .collect();
    Ok((model, classes))
}

fn check_squarefree_inputs(values: &[i64]) -> Result<(), TowerError> {
    for &v in values {
        if v == 0 || v == 1 || !is_squarefree(v) {
            return Err(TowerError::Construction(format!(
                "radicand {v} must be a squarefree integer different from 0 and 1"
            )));
        }
    }
    Ok(())
}

fn certify(
    group: &FiniteGroup,
    target_name: &str,
) -> Result<GroupCertificate, TowerError> {
    let target = named_group(target_name)
        .map_err(|e| TowerError::Construction(format!("registry: {e}")))?;
    let g: GroupRef = Arc::new(group.clone());
    let witness = isomorphism(&g, &target)?.ok_or_else(|| {
        TowerError::Construction(format!(
            "automorphism group of order {} is not isomorphic to {target_name}",
            group.order()
        ))
    })?;
    Ok(GroupCertificate {
        order: group.order(),
        isomorphic_to: target_name.to_string(),
        witness: witness.map().to_vec(),
    })
}

fn certify_subgroup(
    parent: &FiniteGroup,
    sub: &Subgroup,
    target_name: &str,
) -> Result<GroupCertificate, TowerError> {
    let g = subgroup_as_group(parent, sub)
        .map_err(|e| TowerError::Construction(format!("subgroup extraction: {e}")))?;
    certify(&g, target_name)
}

/// Every automorphism of `gal` must send `x * sigma(x)` into the squares of
/// the tower; returns the number of checks performed.
fn galois_closure_checks(
    t: &TowerField,
    gal: &AutomorphismGroup,
    x: &TowerElement,
) -> Result<usize, TowerError> {
    let lifted = t.lift(x, t.levels());
    for m in &gal.maps {
        let prod = t.mul(&lifted, &m.apply(t, &lifted));
        if t.sqrt(&prod).is_none() {
            return Err(TowerError::Construction(
                "closure condition x*sigma(x) in K^2 fails".into(),
            ));
        }
    }
    Ok(gal.maps.len())
}

struct G1Attempt {
    k: TowerField,
    l: TowerField,
    gal_k: AutomorphismGroup,
    gal_l: AutomorphismGroup,
    closure_checks: usize,
}

fn try_g1_towers(
    e: &TowerField,
    alpha: &TowerElement,
    beta: &TowerElement,
    gamma: &TowerElement,
    d: &BigRational,
) -> Result<G1Attempt, TowerError> {
    let alpha_d = e.scale(&e.lift(alpha, 2), d);
    let beta_d = e.scale(&e.lift(beta, 2), d);
    let k = e.extend(&alpha_d)?.extend(&beta_d)?;
    if k.degree() != 16 {
        return Err(TowerError::Construction("K must have degree 16".into()));
    }
    let l = k.extend(&k.lift(gamma, 4))?;
    if l.degree() != 32 {
        return Err(TowerError::Construction("L must have degree 32".into()));
    }
    let gal_k = k.automorphisms()?;
    if !gal_k.is_galois {
        return Err(TowerError::NotGalois {
            expected: 16,
            found: gal_k.group.order(),
        });
    }
    let closure_checks = galois_closure_checks(&k, &gal_k, gamma)?;
    let gal_l = l.automorphisms()?;
    if !gal_l.is_galois {
        return Err(TowerError::NotGalois {
            expected: 32,
            found: gal_l.group.order(),
        });
    }
    Ok(G1Attempt {
        k,
        l,
        gal_k,
        gal_l,
        closure_checks,
    })
}

/// Builds the degree-16 tower `K` with group `DwC` and the degree-32 tower
/// `L` with group `G1` over the radicands `a`, `b`, verifying every step
/// exactly.
pub fn build_g1_tower(a: i64, b: i64, height: u32) -> Result<G1TowerReport, TowerError> {
    check_squarefree_inputs(&[a, b])?;
    let (model, classes) = supporting_model(&[a, b])?;
    let (ca, cb) = (classes[0], classes[1]);
    if ca.is_one() || cb.is_one() || ca == cb {
        return Err(TowerError::Construction(
            "a and b must be independent modulo squares".into(),
        ));
    }
    if !model.symbol(ca, ca).is_split() || !model.symbol(ca, cb).is_split() {
        return Err(TowerError::Construction(
            "(a,a) and (a,b) must split over the rationals".into(),
        ));
    }
    let (x, y) = solve_norm_equation(&rat(a), &rat(a), height).ok_or_else(|| {
        TowerError::SearchExhausted {
            what: format!("norm of alpha from Q(sqrt {a}) equal to {a}"),
            height,
        }
    })?;
    let alpha = TowerElement::from_coeffs(1, vec![x, y]);
    let (x, y) = solve_norm_equation(&rat(b), &rat(a), height).ok_or_else(|| {
        TowerError::SearchExhausted {
            what: format!("norm of beta from Q(sqrt {b}) equal to {a}"),
            height,
        }
    })?;
    let beta = {
        let mut c = vec![BigRational::from_integer(0.into()); 4];
        c[0] = x;
        c[0b10] = y;
        TowerElement::from_coeffs(2, c)
    };
    let e = TowerField::rationals().extend_rational(a)?.extend_rational(b)?;
    // Sanity: N(alpha) from Q(sqrt a) down to Q really equals a.
    debug_assert_eq!(e.relative_norm(&alpha, 0).as_rational(), Some(&rat(a)));

    let mut attempt: Option<(G1Attempt, TowerElement, BigRational)> = None;
    find_gamma_d(&e, &alpha, &beta, height, |g, d| {
        match try_g1_towers(&e, &alpha, &beta, g, d) {
            Ok(at) => {
                attempt = Some((at, g.clone(), d.clone()));
                true
            }
            Err(_) => false,
        }
    });
    let Some((at, gamma, d)) = attempt else {
        return Err(TowerError::SearchExhausted {
            what: "gamma and d with both relative norms matching".into(),
            height,
        });
    };

    let gal_k_cert = certify(&at.gal_k.group, "DwC")?;
    let gal_l_cert = certify(&at.gal_l.group, "G1")?;

    // The two cyclic quartic subextensions through Q(sqrt a): fix sqrt(a)
    // together with sqrt(alpha d) resp. sqrt(alpha d b); their fixers must be
    // exactly the two normal subgroups with cyclic quartic quotient.
    let k = &at.k;
    let gal_k_ref: GroupRef = Arc::new(at.gal_k.group.clone());
    let c_group = named_group("C").map_err(|e| TowerError::Construction(e.to_string()))?;
    let cyclic_kernels = normal_subgroups_with_quotient(&gal_k_ref, &c_group)
        .map_err(|e| TowerError::Construction(e.to_string()))?;
    if cyclic_kernels.len() != 2 {
        return Err(TowerError::Construction(format!(
            "expected 2 cyclic quartic kernels in Gal(K), found {}",
            cyclic_kernels.len()
        )));
    }
    let alpha_d = k.lift(&e.scale(&e.lift(&alpha, 2), &d), 4);
    let alpha_d_b = k.scale(&alpha_d, &rat(b));
    let root_ad = k
        .sqrt(&alpha_d)
        .ok_or_else(|| TowerError::Construction("sqrt(alpha d) must lie in K".into()))?;
    let root_adb = k
        .sqrt(&alpha_d_b)
        .ok_or_else(|| TowerError::Construction("sqrt(alpha d b) must lie in K".into()))?;
    let sqrt_a_stab = at.gal_k.fixing_radical(k, 0);
    let mut quartic_names = Vec::new();
    for root in [&root_ad, &root_adb] {
        let root_stab = at.gal_k.fixing_element(k, root);
        let fixer: Vec<GroupElement> = sqrt_a_stab
            .iter()
            .copied()
            .filter(|g| root_stab.contains(g))
            .collect();
        let sub = at.gal_k.group.subgroup_from_members(fixer)?;
        if !cyclic_kernels.contains(&sub) {
            return Err(TowerError::Construction(
                "cyclic quartic fixer does not match a normal kernel".into(),
            ));
        }
        let quot = at.gal_k.group.quotient(&sub)?;
        let quot_ref: GroupRef = quot.group.clone();
        if !crate::group::is_isomorphic(&quot_ref, &c_group)? {
            return Err(TowerError::Construction(
                "quartic subextension is not cyclic".into(),
            ));
        }
    }
    // The two kernels meet in order 2 and together generate exactly the
    // sqrt(a)-stabilizer: the unique quadratic subextension imbedding into a
    // cyclic quartic is Q(sqrt a).
    let meet = cyclic_kernels[0]
        .members()
        .iter()
        .filter(|&&m| cyclic_kernels[1].contains(m))
        .count();
    let joined: Vec<GroupElement> = cyclic_kernels[0]
        .members()
        .iter()
        .chain(cyclic_kernels[1].members())
        .copied()
        .collect();
    let join = at.gal_k.group.subgroup_generated(&joined);
    let stab = at.gal_k.group.subgroup_from_members(sqrt_a_stab)?;
    if meet != 2 || join != stab {
        return Err(TowerError::Construction(
            "cyclic quartic kernels must meet in order 2 and generate the sqrt(a) stabilizer"
                .into(),
        ));
    }
    quartic_names.push(format!("Q(sqrt({a}), sqrt({}))", k.display(&alpha_d)));
    quartic_names.push(format!("Q(sqrt({a}), sqrt({}))", k.display(&alpha_d_b)));

    // -a is nonrigid over the supporting rationals model.
    let minus_a = model.negate(ca);
    let minus_a_nonrigid = !is_rigid(&model, minus_a)
        .map_err(|e| TowerError::Construction(e.to_string()))?;
    if !minus_a_nonrigid {
        return Err(TowerError::Construction("-a must be nonrigid".into()));
    }

    // E(sqrt gamma)/Q is not Galois: the visible trace of L leaving the
    // smaller multiquadratic step.
    let e_gamma = e.extend(&gamma)?;
    let e_gamma_auts = e_gamma.automorphisms()?;
    let e_sqrt_gamma_not_galois = !e_gamma_auts.is_galois;
    if !e_sqrt_gamma_not_galois {
        return Err(TowerError::Construction(
            "E(sqrt gamma)/Q must not be Galois".into(),
        ));
    }

    let radicands = (0..at.l.levels())
        .map(|i| {
            let theta = at.l.radicand(i);
            ElementRepr {
                coeffs: theta.coeffs().iter().map(|c| c.to_string()).collect(),
                display: at.l.display_radicand(i),
            }
        })
        .collect();
    Ok(G1TowerReport {
        a,
        b,
        height,
        alpha: ElementRepr::new(&e, &e.lift(&alpha, 2)),
        beta: ElementRepr::new(&e, &beta),
        gamma: ElementRepr::new(&e, &gamma),
        d: d.to_string(),
        radicands,
        degree_e: e.degree(),
        degree_k: at.k.degree(),
        degree_l: at.l.degree(),
        galois_closure_checks: at.closure_checks,
        gal_k: gal_k_cert,
        gal_l: gal_l_cert,
        cyclic_quartics: quartic_names,
        minus_a_nonrigid,
        e_sqrt_gamma_not_galois,
        elapsed_ms: None,
    })
}

struct G2Attempt {
    l: TowerField,
    gal_k: AutomorphismGroup,
    gal_l: AutomorphismGroup,
    closure_checks: usize,
    k: TowerField,
}

fn try_g2_towers(
    e_prime: &TowerField,
    beta: &TowerElement,
    gamma: &TowerElement,
    delta: &TowerElement,
    d: &BigRational,
) -> Result<G2Attempt, TowerError> {
    // E' = Q(sqrt b, sqrt c, sqrt a); beta in Q(sqrt b), gamma in Q(sqrt c).
    let beta_d = e_prime.scale(&e_prime.lift(beta, 3), d);
    let gamma_d = e_prime.scale(&e_prime.lift(gamma, 3), d);
    let k = e_prime.extend(&beta_d)?.extend(&gamma_d)?;
    if k.degree() != 32 {
        return Err(TowerError::Construction("K must have degree 32".into()));
    }
    let l = k.extend(&k.lift(delta, 5))?;
    if l.degree() != 64 {
        return Err(TowerError::Construction("L must have degree 64".into()));
    }
    let gal_k = k.automorphisms()?;
    if !gal_k.is_galois {
        return Err(TowerError::NotGalois {
            expected: 32,
            found: gal_k.group.order(),
        });
    }
    let closure_checks = galois_closure_checks(&k, &gal_k, delta)?;
    let gal_l = l.automorphisms()?;
    if !gal_l.is_galois {
        return Err(TowerError::NotGalois {
            expected: 64,
            found: gal_l.group.order(),
        });
    }
    Ok(G2Attempt {
        l,
        gal_k,
        gal_l,
        closure_checks,
        k,
    })
}

/// Builds the degree-32 tower `K` with group `DwD` and the degree-64 tower
/// `L` with group `G2` over the radicands `a`, `b`, `c`.
pub fn build_g2_tower(a: i64, b: i64, c: i64, height: u32) -> Result<G2TowerReport, TowerError> {
    check_squarefree_inputs(&[a, b, c])?;
    let (model, classes) = supporting_model(&[a, b, c])?;
    let (ca, cb, cc) = (classes[0], classes[1], classes[2]);
    let independent = !ca.is_one()
        && !cb.is_one()
        && cb != ca
        && !cc.is_one()
        && cc != ca
        && cc != cb
        && cc != ca.product(cb);
    if !independent {
        return Err(TowerError::Construction(
            "a, b, c must be independent modulo squares".into(),
        ));
    }
    if !model.symbol(ca, cb).is_split() || !model.symbol(ca, cc).is_split() {
        return Err(TowerError::Construction(
            "(a,b) and (a,c) must split over the rationals".into(),
        ));
    }
    let (x, y) = solve_norm_equation(&rat(b), &rat(a), height).ok_or_else(|| {
        TowerError::SearchExhausted {
            what: format!("norm of beta from Q(sqrt {b}) equal to {a}"),
            height,
        }
    })?;
    let beta = TowerElement::from_coeffs(1, vec![x, y]);
    let (x, y) = solve_norm_equation(&rat(c), &rat(a), height).ok_or_else(|| {
        TowerError::SearchExhausted {
            what: format!("norm of gamma from Q(sqrt {c}) equal to {a}"),
            height,
        }
    })?;
    let gamma = {
        let mut co = vec![BigRational::from_integer(0.into()); 4];
        co[0] = x;
        co[0b10] = y;
        TowerElement::from_coeffs(2, co)
    };
    let e = TowerField::rationals().extend_rational(b)?.extend_rational(c)?;
    let e_prime = e.extend_rational(a)?;

    let mut attempt: Option<(G2Attempt, TowerElement, BigRational)> = None;
    find_gamma_d(&e, &beta, &gamma, height, |delta, d| {
        match try_g2_towers(&e_prime, &beta, &gamma, delta, d) {
            Ok(at) => {
                attempt = Some((at, delta.clone(), d.clone()));
                true
            }
            Err(_) => false,
        }
    });
    let Some((at, delta, d)) = attempt else {
        return Err(TowerError::SearchExhausted {
            what: "delta and d with both relative norms matching".into(),
            height,
        });
    };

    let gal_k_cert = certify(&at.gal_k.group, "DwD")?;
    let gal_l_cert = certify(&at.gal_l.group, "G2")?;

    // sqrt(a) is the third radical of K and L.
    let fixer_k = at.gal_k.fixing_radical(&at.k, 2);
    let sub_k = at.gal_k.group.subgroup_from_members(fixer_k)?;
    let abelian_ok = sub_k.order() == 16 && sub_k.is_abelian_in(&at.gal_k.group);
    let e16_cert = certify_subgroup(&at.gal_k.group, &sub_k, "E16")?;
    let unique_abelian: Vec<Subgroup> = at
        .gal_k
        .group
        .subgroups_of_order(16)?
        .into_iter()
        .filter(|s| s.is_abelian_in(&at.gal_k.group))
        .collect();
    let abelian_16_is_sqrt_a_fixer =
        abelian_ok && unique_abelian.len() == 1 && unique_abelian[0] == sub_k;
    if !abelian_16_is_sqrt_a_fixer {
        return Err(TowerError::Construction(
            "Gal(K/Q(sqrt a)) must be the unique abelian subgroup of order 16".into(),
        ));
    }

    let fixer_l = at.gal_l.fixing_radical(&at.l, 2);
    let sub_l = at.gal_l.group.subgroup_from_members(fixer_l)?;
    let dd_cert = certify_subgroup(&at.gal_l.group, &sub_l, "DD")?;

    let minus_a = model.negate(ca);
    let minus_a_nonrigid = !is_rigid(&model, minus_a)
        .map_err(|e| TowerError::Construction(e.to_string()))?;

    let radicands = (0..at.l.levels())
        .map(|i| {
            let theta = at.l.radicand(i);
            ElementRepr {
                coeffs: theta.coeffs().iter().map(|c| c.to_string()).collect(),
                display: at.l.display_radicand(i),
            }
        })
        .collect();
    Ok(G2TowerReport {
        a,
        b,
        c,
        height,
        beta: ElementRepr::new(&e, &e.lift(&beta, 2)),
        gamma: ElementRepr::new(&e, &gamma),
        delta: ElementRepr::new(&e, &delta),
        d: d.to_string(),
        radicands,
        degree_e: e_prime.degree(),
        degree_k: at.k.degree(),
        degree_l: at.l.degree(),
        galois_closure_checks: at.closure_checks,
        gal_k: gal_k_cert,
        gal_l: gal_l_cert,
        abelian_16_is_sqrt_a_fixer,
        sqrt_a_fixer_in_k: e16_cert,
        sqrt_a_fixer_in_l: dd_cert,
        minus_a_nonrigid,
        elapsed_ms: None,
    })
}

/// The first `(a, b, c)` triple over the `Q:S=2,7` model that satisfies the
/// G2 realizability conditions, as signed squarefree integers.
pub fn first_realizable_g2_triple() -> Result<(i64, i64, i64), TowerError> {
    let model = rationals(&[2, 7])?;
    let verdict = g2_realizability(&model).map_err(|e| TowerError::Construction(e.to_string()))?;
    let labels = verdict
        .witness
        .ok_or_else(|| TowerError::Construction("no realizable triple".into()))?;
    let parse = |s: &str| -> Result<i64, TowerError> {
        s.parse()
            .map_err(|_| TowerError::Construction(format!("unparseable witness label {s}")))
    };
    Ok((parse(&labels[0])?, parse(&labels[1])?, parse(&labels[2])?))
}
