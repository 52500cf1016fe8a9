//! Independent brute-force oracles for the Hilbert-symbol formulas.
//!
//! The oracle decides solvability of `z^2 = a x^2 + b y^2` directly: by
//! exhaustion over a finite field, or over residues to enough p-adic
//! precision that a primitive solution lifts (Hensel): modulo `p^4` for odd
//! `p`, modulo `2^8` dyadically.

use super::models::dyadic_reps;
use super::{FieldError, FieldModel, ModelKind, SquareClass, Symbol};

/// Small finite field `GF(p^k)` with elements encoded as base-`p` digit
/// strings of polynomial coefficients.
struct SmallField {
    p: u64,
    k: u32,
    q: u64,
    /// Coefficients of the reduction `x^k = modulus(x)`, length `k`.
    modulus: Vec<u64>,
}

impl SmallField {
    fn new(p: u64, k: u32) -> SmallField {
        assert!(k >= 1 && k <= 3);
        let modulus = if k == 1 {
            vec![0]
        } else {
            // Find a monic irreducible x^k - m(x) by scanning; for k <= 3
            // irreducibility is equivalent to having no roots.
            let q = p.pow(k);
            let mut found = None;
            'search: for m in 0..q {
                let digits = Self::digits(p, k, m);
                for r in 0..p {
                    // Evaluate x^k - m(x) at r.
                    let mut xk = 1u64;
                    for _ in 0..k {
                        xk = xk * r % p;
                    }
                    let mut mv = 0u64;
                    let mut pw = 1u64;
                    for &d in &digits {
                        mv = (mv + d * pw) % p;
                        pw = pw * r % p;
                    }
                    if xk % p == mv {
                        continue 'search;
                    }
                }
                found = Some(digits);
                break;
            }
            found.expect("an irreducible polynomial of degree <= 3 exists")
        };
        SmallField {
            p,
            k,
            q: p.pow(k),
            modulus,
        }
    }

    fn digits(p: u64, k: u32, mut e: u64) -> Vec<u64> {
        let mut d = vec![0u64; k as usize];
        for slot in d.iter_mut() {
            *slot = e % p;
            e /= p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u64 {
        let mut e = 0u64;
        for &c in d.iter().rev() {
            e = e * self.p + c;
        }
        e
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let da = Self::digits(self.p, self.k, a);
        let db = Self::digits(self.p, self.k, b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let da = Self::digits(self.p, self.k, a);
        let db = Self::digits(self.p, self.k, b);
        let mut prod = vec![0u64; 2 * self.k as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce degrees >= k via x^k = modulus(x).
        for i in (self.k as usize..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                prod[i - self.k as usize + j] = (prod[i - self.k as usize + j] + c * m) % self.p;
            }
        }
        self.encode(&prod[..self.k as usize])
    }

    /// Any quadratic nonresidue.
    fn nonresidue(&self) -> u64 {
        let mut is_square = vec![false; self.q as usize];
        for e in 1..self.q {
            is_square[self.mul(e, e) as usize] = true;
        }
        (1..self.q).find(|&e| !is_square[e as usize]).expect("nonresidue exists")
    }
}

/// Exhaustive isotropy search over `GF(q)`.
fn finite_field_oracle(q: u32, p: u32, k: u32, a_nontrivial: bool, b_nontrivial: bool) -> Symbol {
    let f = SmallField::new(p as u64, k);
    let u = f.nonresidue();
    let a = if a_nontrivial { u } else { 1 };
    let b = if b_nontrivial { u } else { 1 };
    debug_assert_eq!(q as u64, f.q);
    for x in 0..f.q {
        for y in 0..f.q {
            for z in 0..f.q {
                if x == 0 && y == 0 && z == 0 {
                    continue;
                }
                let lhs = f.mul(z, z);
                let rhs = f.add(f.mul(a, f.mul(x, x)), f.mul(b, f.mul(y, y)));
                if lhs == rhs {
                    return Symbol::Split;
                }
            }
        }
    }
    Symbol::NonSplit
}

/// Primitive-solution search modulo `m`; sound for `m = p^4` (odd p) and
/// `m = 2^8` because a primitive zero at that precision Hensel-lifts.
fn padic_oracle(p: u64, m: u64, a: i64, b: i64) -> Symbol {
    let am = a.rem_euclid(m as i64) as u64;
    let bm = b.rem_euclid(m as i64) as u64;
    let mut is_square = vec![false; m as usize];
    for z in 0..m {
        is_square[(z * z % m) as usize] = true;
    }
    let squares: Vec<u64> = (0..m).map(|x| x * x % m).collect();
    for x in 0..m {
        let axx = am * squares[x as usize] % m;
        let x_unit = x % p != 0;
        for y in 0..m {
            if !x_unit && y % p == 0 {
                continue;
            }
            let w = (axx + bm * squares[y as usize]) % m;
            if is_square[w as usize] {
                return Symbol::Split;
            }
        }
    }
    Symbol::NonSplit
}

/// Decides `(a, b)` for the class pair by exhaustive search, independently of
/// the model's symbol formula. Supported for finite fields, the odd p-adics
/// and the 2-adics.
pub fn brute_force_symbol(
    model: &FieldModel,
    a: SquareClass,
    b: SquareClass,
) -> Result<Symbol, FieldError> {
    model.check_class(a)?;
    model.check_class(b)?;
    match model.kind() {
        ModelKind::FiniteField { q, p, k } => {
            Ok(finite_field_oracle(*q, *p, *k, a.0 == 1, b.0 == 1))
        }
        ModelKind::Padic { p } => {
            let reps = super::models::padic_reps(*p);
            let m = (*p as u64).pow(4);
            Ok(padic_oracle(
                *p as u64,
                m,
                reps[a.0 as usize],
                reps[b.0 as usize],
            ))
        }
        ModelKind::Dyadic2 => {
            let reps = dyadic_reps();
            Ok(padic_oracle(2, 1 << 8, reps[a.0 as usize], reps[b.0 as usize]))
        }
        _ => Err(FieldError::OracleUnsupported(model.name().into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{dyadic2, finite_field, padic};

    #[test]
    fn finite_field_oracle_always_splits() {
        for q in [5u32, 7, 9, 13] {
            let f = finite_field(q).unwrap();
            for a in f.classes() {
                for b in f.classes() {
                    assert_eq!(brute_force_symbol(&f, a, b).unwrap(), Symbol::Split, "q={q}");
                }
            }
        }
    }

    #[test]
    fn dyadic_minus_one_minus_one_is_nonsplit() {
        let q2 = dyadic2();
        let m1 = q2.minus_one();
        assert_eq!(brute_force_symbol(&q2, m1, m1).unwrap(), Symbol::NonSplit);
    }

    #[test]
    fn padic_3_oracle_agrees_with_formula_on_all_pairs() {
        let q3 = padic(3).unwrap();
        for a in q3.classes() {
            for b in q3.classes() {
                assert_eq!(
                    brute_force_symbol(&q3, a, b).unwrap(),
                    q3.symbol(a, b),
                    "({a:?},{b:?})"
                );
            }
        }
    }
}
