//! Exact arithmetic in iterated quadratic extensions of the rationals.
//!
//! A [`TowerField`] is a chain `Q = F_0 ⊂ F_1 ⊂ ... ⊂ F_n` with
//! `F_{k+1} = F_k(sqrt(theta_{k+1}))` for a radicand `theta_{k+1}` in `F_k`
//! that is verified nonsquare at its level. Elements are coefficient vectors
//! over the product-of-radicals basis; all arithmetic is exact
//! (`BigRational`), no floating point anywhere.

mod auto;
mod pipeline;
mod search;

pub use auto::{AutomorphismGroup, TowerAutomorphism};
pub use pipeline::{
    build_g1_tower, build_g2_tower, first_realizable_g2_triple, ElementRepr, G1TowerReport,
    G2TowerReport, GroupCertificate,
};
pub use search::{find_gamma_d, solve_norm_equation};

use crate::field::FieldError;
use crate::group::GroupError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Degree cap: at most six quadratic layers.
pub const MAX_LEVELS: usize = 6;

#[derive(Debug, Error)]
pub enum TowerError {
    #[error("division by zero in tower arithmetic")]
    DivisionByZero,
    #[error("element at level {got}, expected level {want}")]
    LevelMismatch { want: usize, got: usize },
    #[error("tower degree cap exceeded ({levels} levels)")]
    DegreeCap { levels: usize },
    #[error("radicand is zero")]
    ZeroRadicand,
    #[error("radicand is already a square at its level")]
    SquareRadicand,
    #[error("sign-flip map is not an automorphism for this mask")]
    InvalidConjugation,
    #[error("{what}: search exhausted at height {height}")]
    SearchExhausted { what: String, height: u32 },
    #[error("tower construction failed: {0}")]
    Construction(String),
    #[error("expected a Galois extension of degree {expected}, found {found} automorphisms")]
    NotGalois { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Exact element of a tower level: `coeffs[eps]` multiplies the product of
/// the radicals selected by the bits of `eps`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerElement {
    level: usize,
    coeffs: Vec<BigRational>,
}

impl TowerElement {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn from_coeffs(level: usize, coeffs: Vec<BigRational>) -> TowerElement {
        assert_eq!(coeffs.len(), 1 << level);
        TowerElement { level, coeffs }
    }

    pub fn rational(level: usize, q: BigRational) -> TowerElement {
        let mut coeffs = vec![BigRational::zero(); 1 << level];
        coeffs[0] = q;
        TowerElement { level, coeffs }
    }

    pub fn integer(level: usize, n: i64) -> TowerElement {
        TowerElement::rational(level, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, when the element lies in the base field.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn add_slices(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn scale_slice(x: &[BigRational], s: &BigRational) -> Vec<BigRational> {
    x.iter().map(|a| a * s).collect()
}

/// Largest square divisor found by trial division (bounded).
fn square_content(n: &BigInt) -> BigInt {
    let mut n = n.abs();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(100_000);
    while &p * &p <= n && p <= bound {
        loop {
            let p2 = &p * &p;
            if (&n % &p2).is_zero() {
                n /= &p2;
                s *= &p;
            } else {
                break;
            }
        }
        p += 1;
    }
    s
}

/// An iterated quadratic extension of the rationals. Owns the radicand chain
/// and provides all arithmetic on its elements.
#[derive(Clone, Debug)]
pub struct TowerField {
    /// `radicands[k]` is `theta_{k+1}`, an element of level `k`.
    radicands: Vec<TowerElement>,
}

impl TowerField {
    pub fn rationals() -> TowerField {
        TowerField { radicands: vec![] }
    }

    pub fn levels(&self) -> usize {
        self.radicands.len()
    }

    pub fn degree(&self) -> usize {
        1 << self.levels()
    }

    pub fn radicand(&self, i: usize) -> &TowerElement {
        &self.radicands[i]
    }

    /// The i-th adjoined square root, as a top-level element.
    pub fn radical(&self, i: usize) -> TowerElement {
        assert!(i < self.levels());
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        coeffs[1 << i] = BigRational::one();
        TowerElement {
            level: self.levels(),
            coeffs,
        }
    }

    pub fn constant(&self, q: BigRational) -> TowerElement {
        TowerElement::rational(self.levels(), q)
    }

    pub fn integer(&self, n: i64) -> TowerElement {
        TowerElement::integer(self.levels(), n)
    }

    /// Embeds a lower-level element at `to_level`.
    pub fn lift(&self, x: &TowerElement, to_level: usize) -> TowerElement {
        assert!(x.level <= to_level && to_level <= self.levels());
        let mut coeffs = vec![BigRational::zero(); 1 << to_level];
        coeffs[..x.coeffs.len()].clone_from_slice(&x.coeffs);
        TowerElement {
            level: to_level,
            coeffs,
        }
    }

    /// Truncates to a lower level when the element actually lies there.
    pub fn try_lower(&self, x: &TowerElement, to_level: usize) -> Option<TowerElement> {
        assert!(to_level <= x.level);
        let keep = 1 << to_level;
        if x.coeffs[keep..].iter().all(|c| c.is_zero()) {
            Some(TowerElement {
                level: to_level,
                coeffs: x.coeffs[..keep].to_vec(),
            })
        } else {
            None
        }
    }

    fn check_same_level(x: &TowerElement, y: &TowerElement) {
        assert_eq!(x.level, y.level, "operands at different tower levels");
    }

    pub fn add(&self, x: &TowerElement, y: &TowerElement) -> TowerElement {
        Self::check_same_level(x, y);
        TowerElement {
            level: x.level,
            coeffs: add_slices(&x.coeffs, &y.coeffs),
        }
    }

    pub fn sub(&self, x: &TowerElement, y: &TowerElement) -> TowerElement {
        Self::check_same_level(x, y);
        TowerElement {
            level: x.level,
            coeffs: sub_slices(&x.coeffs, &y.coeffs),
        }
    }

    pub fn neg(&self, x: &TowerElement) -> TowerElement {
        TowerElement {
            level: x.level,
            coeffs: x.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, x: &TowerElement, s: &BigRational) -> TowerElement {
        TowerElement {
            level: x.level,
            coeffs: scale_slice(&x.coeffs, s),
        }
    }

    fn mul_rec(&self, level: usize, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        if level == 0 {
            return vec![&x[0] * &y[0]];
        }
        let half = 1 << (level - 1);
        let (a, b) = x.split_at(half);
        let (c, d) = y.split_at(half);
        let ac = self.mul_rec(level - 1, a, c);
        let bd = self.mul_rec(level - 1, b, d);
        let ad = self.mul_rec(level - 1, a, d);
        let bc = self.mul_rec(level - 1, b, c);
        let theta = &self.radicands[level - 1];
        let bd_theta = self.mul_rec(level - 1, &bd, &theta.coeffs);
        let mut out = add_slices(&ac, &bd_theta);
        out.extend(add_slices(&ad, &bc));
        out
    }

    pub fn mul(&self, x: &TowerElement, y: &TowerElement) -> TowerElement {
        Self::check_same_level(x, y);
        TowerElement {
            level: x.level,
            coeffs: self.mul_rec(x.level, &x.coeffs, &y.coeffs),
        }
    }

    pub fn square(&self, x: &TowerElement) -> TowerElement {
        self.mul(x, x)
    }

    fn inverse_rec(&self, level: usize, x: &[BigRational]) -> Option<Vec<BigRational>> {
        if level == 0 {
            if x[0].is_zero() {
                return None;
            }
            return Some(vec![x[0].recip()]);
        }
        let half = 1 << (level - 1);
        let (a, b) = x.split_at(half);
        // (a + b r)^-1 = (a - b r) / (a^2 - theta b^2).
        let a2 = self.mul_rec(level - 1, a, a);
        let b2 = self.mul_rec(level - 1, b, b);
        let theta = &self.radicands[level - 1];
        let tb2 = self.mul_rec(level - 1, &theta.coeffs, &b2);
        let n = sub_slices(&a2, &tb2);
        let inv_n = self.inverse_rec(level - 1, &n)?;
        let lo = self.mul_rec(level - 1, a, &inv_n);
        let hi = self.mul_rec(level - 1, b, &inv_n);
        let mut out = lo;
        out.extend(hi.iter().map(|c| -c));
        Some(out)
    }

    pub fn inverse(&self, x: &TowerElement) -> Result<TowerElement, TowerError> {
        match self.inverse_rec(x.level, &x.coeffs) {
            Some(coeffs) => Ok(TowerElement {
                level: x.level,
                coeffs,
            }),
            None => Err(TowerError::DivisionByZero),
        }
    }

    pub fn div(&self, x: &TowerElement, y: &TowerElement) -> Result<TowerElement, TowerError> {
        Ok(self.mul(x, &self.inverse(y)?))
    }

    pub fn equals(&self, x: &TowerElement, y: &TowerElement) -> bool {
        x.level == y.level && x.coeffs == y.coeffs
    }

    /// Norm to the next level down: `x * conj(x) = a^2 - theta b^2`.
    pub fn norm_down(&self, x: &TowerElement) -> TowerElement {
        assert!(x.level >= 1);
        let half = 1 << (x.level - 1);
        let (a, b) = x.coeffs.split_at(half);
        let a2 = self.mul_rec(x.level - 1, a, a);
        let b2 = self.mul_rec(x.level - 1, b, b);
        let theta = &self.radicands[x.level - 1];
        let tb2 = self.mul_rec(x.level - 1, &theta.coeffs, &b2);
        TowerElement {
            level: x.level - 1,
            coeffs: sub_slices(&a2, &tb2),
        }
    }

    /// Product of conjugates down to `to_level`.
    pub fn relative_norm(&self, x: &TowerElement, to_level: usize) -> TowerElement {
        assert!(to_level <= x.level);
        let mut cur = x.clone();
        while cur.level > to_level {
            cur = self.norm_down(&cur);
        }
        cur
    }

    /// Sign-flip conjugation: negates every basis monomial containing an odd
    /// number of the radicals selected by `mask`. This is a field
    /// automorphism only when every radicand is fixed by the flip, which is
    /// checked (rational radicands always are).
    pub fn conjugate_masked(
        &self,
        x: &TowerElement,
        mask: u32,
    ) -> Result<TowerElement, TowerError> {
        for (i, theta) in self.radicands.iter().enumerate().take(x.level) {
            let sub_mask = mask & ((1 << i) - 1);
            if sub_mask == 0 {
                continue;
            }
            let flipped = self.flip(theta, sub_mask);
            if flipped != *theta {
                return Err(TowerError::InvalidConjugation);
            }
        }
        Ok(self.flip(x, mask))
    }

    fn flip(&self, x: &TowerElement, mask: u32) -> TowerElement {
        let coeffs = x
            .coeffs
            .iter()
            .enumerate()
            .map(|(eps, c)| {
                if (eps as u32 & mask).count_ones() % 2 == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        TowerElement {
            level: x.level,
            coeffs,
        }
    }

    fn sqrt_rec(&self, level: usize, x: &[BigRational]) -> Option<Vec<BigRational>> {
        if level == 0 {
            return rational_sqrt(&x[0]).map(|s| vec![s]);
        }
        let half = 1 << (level - 1);
        let (a, b) = x.split_at(half);
        let theta = &self.radicands[level - 1];
        if b.iter().all(|c| c.is_zero()) {
            // Either sqrt(a) exists below, or sqrt(a / theta) does and the
            // root is v * sqrt(theta).
            if let Some(u) = self.sqrt_rec(level - 1, a) {
                let mut out = u;
                out.extend(vec![BigRational::zero(); half]);
                return Some(out);
            }
            let inv_theta = self.inverse_rec(level - 1, &theta.coeffs)?;
            let quo = self.mul_rec(level - 1, a, &inv_theta);
            if let Some(v) = self.sqrt_rec(level - 1, &quo) {
                let mut out = vec![BigRational::zero(); half];
                out.extend(v);
                return Some(out);
            }
            return None;
        }
        // y = u + v sqrt(theta) with 2uv = b and u^2 = (a ± s)/2 where
        // s^2 = a^2 - theta b^2.
        let a2 = self.mul_rec(level - 1, a, a);
        let b2 = self.mul_rec(level - 1, b, b);
        let tb2 = self.mul_rec(level - 1, &theta.coeffs, &b2);
        let n = sub_slices(&a2, &tb2);
        let s = self.sqrt_rec(level - 1, &n)?;
        let two = BigRational::from_integer(BigInt::from(2));
        let half_inv = two.recip();
        for signed in [s.clone(), s.iter().map(|c| -c).collect::<Vec<_>>()] {
            let u2: Vec<BigRational> = add_slices(a, &signed)
                .iter()
                .map(|c| c * &half_inv)
                .collect();
            if let Some(u) = self.sqrt_rec(level - 1, &u2) {
                if u.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let two_u: Vec<BigRational> = u.iter().map(|c| c * &two).collect();
                let Some(inv_2u) = self.inverse_rec(level - 1, &two_u) else {
                    continue;
                };
                let v = self.mul_rec(level - 1, b, &inv_2u);
                let mut cand = u;
                cand.extend(v);
                let check = self.mul_rec(level, &cand, &cand);
                if check == x {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// The exact square root within the owning field, when one exists.
    pub fn sqrt(&self, x: &TowerElement) -> Option<TowerElement> {
        let out = self.sqrt_rec(x.level, &x.coeffs)?;
        let y = TowerElement {
            level: x.level,
            coeffs: out,
        };
        debug_assert!(self.equals(&self.square(&y), x));
        Some(y)
    }

    /// Scales a radicand by a rational square to a tame integral
    /// representative: clears denominators and strips square content from the
    /// integer coefficients. The generated extension is unchanged.
    fn normalize_radicand(&self, theta: &TowerElement) -> TowerElement {
        let mut den_lcm = BigInt::one();
        for c in &theta.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let scaled: Vec<BigRational> = theta
            .coeffs
            .iter()
            .map(|c| c * BigRational::from_integer(&den_lcm * &den_lcm))
            .collect();
        let mut content = BigInt::zero();
        for c in &scaled {
            debug_assert!(c.denom().is_one());
            content = num_integer::gcd(content, c.numer().clone());
        }
        let s = if content.is_zero() {
            BigInt::one()
        } else {
            square_content(&content)
        };
        let s2 = BigRational::from_integer(&s * &s);
        TowerElement {
            level: theta.level,
            coeffs: scaled.iter().map(|c| c / &s2).collect(),
        }
    }

    /// Adjoins `sqrt(theta)`, verifying `theta` is nonzero and a nonsquare at
    /// its level. The stored radicand is normalized by a rational square.
    pub fn extend(&self, theta: &TowerElement) -> Result<TowerField, TowerError> {
        if self.levels() >= MAX_LEVELS {
            return Err(TowerError::DegreeCap {
                levels: self.levels() + 1,
            });
        }
        if theta.level > self.levels() {
            return Err(TowerError::LevelMismatch {
                want: self.levels(),
                got: theta.level,
            });
        }
        let lifted = self.lift(theta, self.levels());
        if lifted.is_zero() {
            return Err(TowerError::ZeroRadicand);
        }
        let norm = self.normalize_radicand(&lifted);
        if self.sqrt(&norm).is_some() {
            return Err(TowerError::SquareRadicand);
        }
        let mut radicands = self.radicands.clone();
        radicands.push(norm);
        Ok(TowerField { radicands })
    }

    /// Adjoins the square root of a rational integer.
    pub fn extend_rational(&self, n: i64) -> Result<TowerField, TowerError> {
        let theta = TowerElement::integer(self.levels(), n);
        self.extend(&theta)
    }

    fn radical_name(&self, i: usize) -> String {
        format!("sqrt({})", self.display_at(self.radicand(i), i))
    }

    fn display_at(&self, x: &TowerElement, level: usize) -> String {
        debug_assert_eq!(x.level, level);
        let mut terms: Vec<String> = Vec::new();
        for (eps, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut rads: Vec<String> = Vec::new();
            for i in 0..level {
                if eps >> i & 1 == 1 {
                    rads.push(self.radical_name(i));
                }
            }
            let monomial = rads.join("*");
            let term = if monomial.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                monomial
            } else if (-c).is_one() {
                format!("-{monomial}")
            } else {
                format!("{c}*{monomial}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    /// Human-readable rendering, e.g. `5 + sqrt(2) + sqrt(7)`.
    pub fn display(&self, x: &TowerElement) -> String {
        self.display_at(x, x.level)
    }

    /// Rendering of the i-th radicand within its own level.
    pub fn display_radicand(&self, i: usize) -> String {
        self.display_at(self.radicand(i), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rat_frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let t = TowerField::rationals().extend_rational(2).unwrap();
        // (2 + sqrt2)(2 - sqrt2) = 2.
        let x = TowerElement::from_coeffs(1, vec![rat(2), rat(1)]);
        let y = TowerElement::from_coeffs(1, vec![rat(2), rat(-1)]);
        let p = t.mul(&x, &y);
        assert_eq!(p.as_rational(), Some(&rat(2)));
        // x + 0 = x.
        let zero = t.constant(BigRational::zero());
        assert!(t.equals(&t.add(&x, &zero), &x));
        // inverse(sqrt 2) = sqrt(2)/2.
        let r = t.radical(0);
        let inv = t.inverse(&r).unwrap();
        assert_eq!(inv.coeffs(), &[rat(0), rat_frac(1, 2)]);
        assert!(t.inverse(&zero).is_err());
    }

    #[test]
    fn norms() {
        let t = TowerField::rationals().extend_rational(2).unwrap();
        let x = TowerElement::from_coeffs(1, vec![rat(2), rat(1)]);
        let n = t.relative_norm(&x, 0);
        assert_eq!(n.as_rational(), Some(&rat(2)));
        let one = t.constant(BigRational::one());
        assert_eq!(t.relative_norm(&one, 0).as_rational(), Some(&rat(1)));
    }

    #[test]
    fn norm_product_identity_over_biquadratic() {
        // N_{E/Q(sqrt(ab))}(g) * N_{E/Q(sqrt a)}(g) * N_{E/Q(sqrt b)}(g)
        //   = N_{E/Q}(g) * g^2.
        let e = TowerField::rationals()
            .extend_rational(2)
            .unwrap()
            .extend_rational(7)
            .unwrap();
        let g = TowerElement::from_coeffs(2, vec![rat(5), rat(1), rat(1), rat(0)]);
        let to_ab = t_norm(&e, &g, 0b11); // flip both radicals: fixes sqrt(ab)
        let to_a = t_norm(&e, &g, 0b10); // flip sqrt(b): fixes Q(sqrt a)
        let to_b = t_norm(&e, &g, 0b01);
        let lhs = e.mul(&e.mul(&to_ab, &to_a), &to_b);
        let full = e.lift(&e.relative_norm(&g, 0), 2);
        let rhs = e.mul(&full, &e.square(&g));
        assert!(e.equals(&lhs, &rhs));
    }

    fn t_norm(e: &TowerField, x: &TowerElement, mask: u32) -> TowerElement {
        let conj = e.conjugate_masked(x, mask).unwrap();
        e.mul(x, &conj)
    }

    #[test]
    fn sqrt_examples() {
        let t = TowerField::rationals().extend_rational(2).unwrap();
        // sqrt(4) = 2 at any level.
        let four = t.constant(rat(4));
        assert_eq!(t.sqrt(&four).unwrap().as_rational(), Some(&rat(2)));
        // sqrt(3 + 2 sqrt2) = 1 + sqrt2.
        let x = TowerElement::from_coeffs(1, vec![rat(3), rat(2)]);
        let s = t.sqrt(&x).unwrap();
        assert!(t.equals(&t.square(&s), &x));
        assert!(s.coeffs() == [rat(1), rat(1)] || s.coeffs() == [rat(-1), rat(-1)]);
        // sqrt(2) does not live in Q(sqrt 3).
        let t3 = TowerField::rationals().extend_rational(3).unwrap();
        let two = t3.constant(rat(2));
        assert!(t3.sqrt(&two).is_none());
        // The adjoined radical is found as the root of its radicand.
        let theta = t.lift(t.radicand(0), 1);
        let r = t.sqrt(&theta).unwrap();
        assert!(t.equals(&t.square(&r), &theta));
    }

    #[test]
    fn extend_rejects_squares_and_zero() {
        let q = TowerField::rationals();
        assert!(matches!(q.extend_rational(4), Err(TowerError::SquareRadicand)));
        assert!(matches!(q.extend_rational(0), Err(TowerError::ZeroRadicand)));
        let t = q.extend_rational(2).unwrap();
        // 2 is a square once sqrt(2) is adjoined.
        let two = t.constant(rat(2));
        assert!(matches!(t.extend(&two), Err(TowerError::SquareRadicand)));
    }

    #[test]
    fn radicand_normalization() {
        let q = TowerField::rationals();
        let t = q.extend(&TowerElement::rational(0, rat_frac(8, 9))).unwrap();
        // 8/9 ~ 2 modulo rational squares.
        assert_eq!(t.radicand(0).as_rational(), Some(&rat(2)));
    }

    #[test]
    fn masked_conjugation_requires_stability() {
        let t2 = TowerField::rationals().extend_rational(2).unwrap();
        // Nested radicand sqrt(2): flipping sqrt(2) does not fix it.
        let nested = t2.extend(&t2.radical(0)).unwrap();
        let x = nested.radical(1);
        assert!(matches!(
            nested.conjugate_masked(&x, 0b01),
            Err(TowerError::InvalidConjugation)
        ));
        // Flipping only the top radical is fine.
        assert!(nested.conjugate_masked(&x, 0b10).is_ok());
    }

    #[test]
    fn negative_radicands_are_exact() {
        let g = TowerField::rationals().extend_rational(-1).unwrap();
        let i = g.radical(0);
        let m1 = g.square(&i);
        assert_eq!(m1.as_rational(), Some(&rat(-1)));
        // N(1 + i) = 2.
        let x = TowerElement::from_coeffs(1, vec![rat(1), rat(1)]);
        assert_eq!(g.relative_norm(&x, 0).as_rational(), Some(&rat(2)));
        let two = g.constant(rat(2));
        // 2 is not a square in Q(i).
        assert!(g.sqrt(&two).is_none());
    }

    #[test]
    fn lift_and_lower_round_trip() {
        let e = TowerField::rationals()
            .extend_rational(2)
            .unwrap()
            .extend_rational(7)
            .unwrap();
        let x = TowerElement::from_coeffs(1, vec![rat(2), rat(1)]);
        let lifted = e.lift(&x, 2);
        assert_eq!(e.try_lower(&lifted, 1), Some(x));
        // An element with a sqrt(7) component does not lower to level 1.
        let y = e.radical(1);
        assert_eq!(e.try_lower(&y, 1), None);
    }

    #[test]
    fn display_is_readable() {
        let e = TowerField::rationals()
            .extend_rational(2)
            .unwrap()
            .extend_rational(7)
            .unwrap();
        let g = TowerElement::from_coeffs(2, vec![rat(5), rat(1), rat(1), rat(0)]);
        assert_eq!(e.display(&g), "5 + sqrt(2) + sqrt(7)");
    }
}
