//! Finitely presented groups: words, presentations, coset enumeration, and
//! the registry of named groups.

mod coset;
mod named;
mod parse;

pub use named::{
    dc_pullback, dd_pullback, named_group, named_pullback, q8c_pullback, q8wc_via_dihedral, zoo,
    KleinKernel, ZOO_NAMES,
};

use crate::group::FiniteGroup;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FpError {
    #[error("presentation parse error: {0}")]
    Parse(String),
    #[error("coset table exceeded {max_cosets} cosets before closing")]
    CosetLimit { max_cosets: usize },
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("presentation must declare at least one generator")]
    NoGenerators,
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

/// A word in the free group: signed 1-based generator indices
/// (`3` is the third generator, `-3` its inverse).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(vec![])
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![i as i32 + 1])
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).reduced()
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::new();
        for _ in 0..n.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v).reduced()
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Self {
        u.inverse().concat(&v.inverse()).concat(u).concat(v)
    }

    /// Free reduction: cancel adjacent `x x^-1` pairs.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if let Some(&last) = out.last() {
                if last == -l {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        Word(out)
    }

    pub fn is_identity(&self) -> bool {
        self.reduced().0.is_empty()
    }
}

/// Generators plus relator words.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, FpError> {
        if generators.is_empty() {
            return Err(FpError::NoGenerators);
        }
        let n = generators.len() as i32;
        let relators: Vec<Word> = relators.into_iter().map(|w| w.reduced()).collect();
        for w in &relators {
            for &l in &w.0 {
                if l == 0 || l.abs() > n {
                    return Err(FpError::Parse(format!("relator letter {l} out of range")));
                }
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// Parses the text DSL, e.g.
    /// `gens: x y; rels: x^4, y^2, [x,y]^2, [[x,y],x]^2, [[[x,y],x],x]`.
    pub fn parse(src: &str) -> Result<Self, FpError> {
        parse::parse_presentation(src)
    }

    pub fn enumerate(&self, max_cosets: usize) -> Result<FiniteGroup, FpError> {
        enumerate_presentation(self, max_cosets)
    }
}

/// Runs Todd-Coxeter coset enumeration over the trivial subgroup and converts
/// the regular representation into a Cayley-table group. Deterministic: the
/// same presentation and bound always produce the identical table.
///
/// Enumeration is not a decision procedure; when the table exceeds
/// `max_cosets` before closing, a capacity error is returned and the caller
/// may raise the bound.
pub fn enumerate_presentation(
    p: &GroupPresentation,
    max_cosets: usize,
) -> Result<FiniteGroup, FpError> {
    coset::enumerate(p, max_cosets)
}

/// `enumerate` with `10 * expected_order` cosets and one automatic doubling
/// retry.
pub fn enumerate_with_retry(
    p: &GroupPresentation,
    expected_order: usize,
) -> Result<FiniteGroup, FpError> {
    let cap = 10 * expected_order.max(1);
    match enumerate_presentation(p, cap) {
        Err(FpError::CosetLimit { .. }) => enumerate_presentation(p, 2 * cap),
        other => other,
    }
}

fn words_g1() -> (Vec<String>, Vec<Word>) {
    let x = Word::gen(0);
    let y = Word::gen(1);
    let c = Word::commutator(&x, &y);
    let cx = Word::commutator(&c, &x);
    let relators = vec![
        x.pow(4),
        y.pow(2),
        c.pow(2),
        cx.pow(2),
        Word::commutator(&cx, &x),
        Word::commutator(&cx, &y),
    ];
    (vec!["x".into(), "y".into()], relators)
}

/// Two-generator presentation: `x^4 = y^2 = 1`, `[x,y]^2 = [[x,y],x]^2 = 1`,
/// and `[[x,y],x]` central among the generators. Enumerates to order 32.
pub fn presentation_g1() -> GroupPresentation {
    let (gens, rels) = words_g1();
    GroupPresentation::new(gens, rels).expect("valid by construction")
}

/// Three-generator presentation: `x^2 = y^2 = z^2 = 1`,
/// `[x,y]^2 = [x,z]^2 = [y,z] = 1`, `[y,[x,z]] = [z,[x,y]]` of order dividing
/// 2 and central among the generators. Enumerates to order 64.
pub fn presentation_g2() -> GroupPresentation {
    let x = Word::gen(0);
    let y = Word::gen(1);
    let z = Word::gen(2);
    let cxy = Word::commutator(&x, &y);
    let cxz = Word::commutator(&x, &z);
    let w = Word::commutator(&y, &cxz);
    let w2 = Word::commutator(&z, &cxy);
    let relators = vec![
        x.pow(2),
        y.pow(2),
        z.pow(2),
        cxy.pow(2),
        cxz.pow(2),
        Word::commutator(&y, &z),
        w.concat(&w2.inverse()),
        w.pow(2),
        Word::commutator(&w, &x),
        Word::commutator(&w, &y),
        Word::commutator(&w, &z),
    ];
    GroupPresentation::new(vec!["x".into(), "y".into(), "z".into()], relators)
        .expect("valid by construction")
}

/// The freest two-generator group with fourth powers trivial, commutator
/// squares trivial, and both double commutators central among the
/// generators. Enumerates to order 128.
pub fn presentation_g0() -> GroupPresentation {
    let x = Word::gen(0);
    let y = Word::gen(1);
    let c = Word::commutator(&x, &y);
    let cx = Word::commutator(&c, &x);
    let cy = Word::commutator(&c, &y);
    let relators = vec![
        x.pow(4),
        y.pow(4),
        c.pow(2),
        cx.pow(2),
        cy.pow(2),
        Word::commutator(&cx, &x),
        Word::commutator(&cx, &y),
        Word::commutator(&cy, &x),
        Word::commutator(&cy, &y),
    ];
    GroupPresentation::new(vec!["x".into(), "y".into()], relators).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_reduction() {
        let w = Word(vec![1, 2, -2, -1, 1]);
        assert_eq!(w.reduced().0, vec![1]);
        assert!(Word(vec![1, -1]).is_identity());
        let c = Word::commutator(&Word::gen(0), &Word::gen(0));
        assert!(c.is_identity());
    }

    #[test]
    fn g1_enumerates_to_32() {
        let g = enumerate_with_retry(&presentation_g1(), 32).unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn g2_enumerates_to_64() {
        let g = enumerate_with_retry(&presentation_g2(), 64).unwrap();
        assert_eq!(g.order(), 64);
        // [y,z] is a relator.
        let gens = g.generators();
        assert_eq!(g.commutator(gens[1], gens[2]), g.identity());
        assert!(g.is_metabelian());
    }

    #[test]
    fn g0_enumerates_within_128() {
        let g = enumerate_with_retry(&presentation_g0(), 128).unwrap();
        assert!(g.order() <= 128);
    }

    #[test]
    fn g1_abelianization_has_order_8() {
        let mut p = presentation_g1();
        let x = Word::gen(0);
        let y = Word::gen(1);
        p.relators.push(Word::commutator(&x, &y));
        let ab = enumerate_with_retry(&p, 32).unwrap();
        assert_eq!(ab.order(), 8);
        assert!(ab.is_abelian());
    }
}
