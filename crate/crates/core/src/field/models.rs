//! Model constructors and the local Hilbert symbols they are built from.

use super::{
    FieldError, FieldModel, ModelKind, SquareClass, Symbol, ValuationData, MAX_RANK,
};

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn legendre(a: i64, p: u32) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    // Euler's criterion by fast modular exponentiation.
    let mut base = a % p as u64;
    let mut exp = (p as u64 - 1) / 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn smallest_nonresidue(p: u32) -> u32 {
    (2..p).find(|&u| legendre(u as i64, p) == -1).expect("odd prime has a nonresidue")
}

/// Splits `n` into `(v, u)` with `n = q^v * u`, `q` not dividing `u`.
fn strip(q: i64, mut n: i64) -> (u32, i64) {
    let mut v = 0;
    while n % q == 0 {
        n /= q;
        v += 1;
    }
    (v, n)
}

/// Tame Hilbert symbol over the p-adics, odd `p`.
pub(crate) fn local_symbol_odd(p: u32, a: i64, b: i64) -> Symbol {
    let (alpha, u) = strip(p as i64, a);
    let (beta, v) = strip(p as i64, b);
    let eps = ((p as i64 - 1) / 2 % 2) as u32;
    let mut sign = 1i32;
    if alpha % 2 == 1 && beta % 2 == 1 && eps == 1 {
        sign = -sign;
    }
    if beta % 2 == 1 {
        sign *= legendre(u, p);
    }
    if alpha % 2 == 1 {
        sign *= legendre(v, p);
    }
    if sign == 1 {
        Symbol::Split
    } else {
        Symbol::NonSplit
    }
}

/// Dyadic Hilbert symbol via the classical unit characters
/// `eps(u) = (u-1)/2` and `omega(u) = (u^2-1)/8` modulo 2.
pub(crate) fn local_symbol_2(a: i64, b: i64) -> Symbol {
    let (alpha, u) = strip(2, a);
    let (beta, v) = strip(2, b);
    let eps = |u: i64| ((u - 1) / 2).rem_euclid(2);
    let omega = |u: i64| ((u * u - 1) / 8).rem_euclid(2);
    let e = eps(u) * eps(v) + alpha as i64 * omega(v) + beta as i64 * omega(u);
    if e % 2 == 0 {
        Symbol::Split
    } else {
        Symbol::NonSplit
    }
}

pub(crate) fn local_symbol_real(a: i64, b: i64) -> Symbol {
    if a < 0 && b < 0 {
        Symbol::NonSplit
    } else {
        Symbol::Split
    }
}

/// The real numbers: classes `{1, -1}`.
pub fn reals() -> FieldModel {
    FieldModel::build(
        "reals".into(),
        ModelKind::Reals,
        1,
        SquareClass(1),
        true,
        vec!["1".into(), "-1".into()],
        |a, b| {
            if a == SquareClass(1) && b == SquareClass(1) {
                Symbol::NonSplit
            } else {
                Symbol::Split
            }
        },
        vec![ValuationData::trivial(1)],
    )
    .expect("reals model is valid")
}

/// A finite field of odd prime-power order `q = p^k`, `k <= 3`. All symbols
/// split; `-1` is a square exactly when `q = 1 mod 4`.
pub fn finite_field(q: u32) -> Result<FieldModel, FieldError> {
    let (p, k) = prime_power(q)
        .ok_or_else(|| FieldError::InvalidParameter(format!("{q} is not a prime power")))?;
    if p == 2 {
        return Err(FieldError::InvalidParameter("q must be odd".into()));
    }
    if k > 3 {
        return Err(FieldError::InvalidParameter("q = p^k supported for k <= 3".into()));
    }
    let minus_one = if q % 4 == 1 { SquareClass(0) } else { SquareClass(1) };
    let u_label = if k == 1 {
        smallest_nonresidue(p).to_string()
    } else {
        "u".to_string()
    };
    FieldModel::build(
        format!("Fq:{q}"),
        ModelKind::FiniteField { q, p, k },
        1,
        minus_one,
        false,
        vec!["1".into(), u_label],
        |_, _| Symbol::Split,
        vec![ValuationData::trivial(1)],
    )
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    for p in 2..=q {
        if !is_prime(p) {
            continue;
        }
        if q % p == 0 {
            let mut k = 0;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
    }
    None
}

/// Representative integers of the rank-2 p-adic classes `{1, u, p, up}`.
pub(crate) fn padic_reps(p: u32) -> [i64; 4] {
    let u = smallest_nonresidue(p) as i64;
    [1, u, p as i64, u * p as i64]
}

/// The p-adic numbers for odd `p`: basis `{u, p}` with `u` the smallest
/// quadratic nonresidue.
pub fn padic(p: u32) -> Result<FieldModel, FieldError> {
    if !is_prime(p) || p == 2 {
        return Err(FieldError::InvalidParameter(format!("{p} is not an odd prime")));
    }
    let reps = padic_reps(p);
    let minus_one = if p % 4 == 1 { SquareClass(0) } else { SquareClass(1) };
    let labels: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
    let padic_valuation = ValuationData::new("p-adic", 2, vec![0, 0, 1, 1], true)?;
    FieldModel::build(
        format!("Qp:{p}"),
        ModelKind::Padic { p },
        2,
        minus_one,
        false,
        labels,
        |a, b| local_symbol_odd(p, reps[a.0 as usize], reps[b.0 as usize]),
        vec![ValuationData::trivial(2), padic_valuation],
    )
}

/// Representative integers of the eight 2-adic classes.
pub(crate) fn dyadic_reps() -> [i64; 8] {
    // Bits: (sign, 2, 5).
    let mut reps = [0i64; 8];
    for (i, r) in reps.iter_mut().enumerate() {
        let mut v = 1i64;
        if i & 1 == 1 {
            v = -v;
        }
        if i & 2 != 0 {
            v *= 2;
        }
        if i & 4 != 0 {
            v *= 5;
        }
        *r = v;
    }
    reps
}

/// The 2-adic numbers: basis `{-1, 2, 5}`, representatives
/// `{±1, ±2, ±5, ±10}`.
pub fn dyadic2() -> FieldModel {
    let reps = dyadic_reps();
    let labels: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
    // 1 + 2Z_2 contains nonsquares (3 = 1 + 2), so the canonical valuation
    // does not satisfy the 1+M condition; units are the odd classes.
    let parity: Vec<u8> = (0..8).map(|i| if i & 2 != 0 { 1 } else { 0 }).collect();
    let two_adic = ValuationData::new("2-adic", 3, parity, false).expect("2-adic valuation");
    FieldModel::build(
        "Q2".into(),
        ModelKind::Dyadic2,
        3,
        SquareClass(1),
        false,
        labels,
        |a, b| local_symbol_2(reps[a.0 as usize], reps[b.0 as usize]),
        vec![ValuationData::trivial(3), two_adic],
    )
    .expect("dyadic model is valid")
}

fn rational_reps(primes: &[u32]) -> Vec<i64> {
    let n = 1usize << (primes.len() + 1);
    (0..n)
        .map(|bits| {
            let mut v = if bits & 1 == 1 { -1i64 } else { 1 };
            for (i, &p) in primes.iter().enumerate() {
                if bits >> (i + 1) & 1 == 1 {
                    v *= p as i64;
                }
            }
            v
        })
        .collect()
}

/// Square classes of the rationals supported on `{-1} ∪ primes`; the symbol
/// is split iff it splits at every place among infinity, 2, and the odd
/// primes of the set. `primes` must contain 2.
pub fn rationals(primes: &[u32]) -> Result<FieldModel, FieldError> {
    let mut ps = primes.to_vec();
    ps.sort_unstable();
    ps.dedup();
    if ps.len() != primes.len() {
        return Err(FieldError::InvalidParameter("duplicate primes".into()));
    }
    if !ps.contains(&2) {
        return Err(FieldError::InvalidParameter("prime set must contain 2".into()));
    }
    for &p in &ps {
        if !is_prime(p) {
            return Err(FieldError::InvalidParameter(format!("{p} is not prime")));
        }
    }
    let rank = (ps.len() + 1) as u8;
    if rank > MAX_RANK {
        return Err(FieldError::RankTooLarge {
            rank,
            limit: MAX_RANK,
        });
    }
    let reps = rational_reps(&ps);
    let labels: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
    let odd: Vec<u32> = ps.iter().copied().filter(|&p| p != 2).collect();
    let name = format!(
        "Q:S={}",
        ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    );
    FieldModel::build(
        name,
        ModelKind::Rationals { primes: ps.clone() },
        rank,
        SquareClass(1),
        true,
        labels,
        move |a, b| {
            let (x, y) = (reps[a.0 as usize], reps[b.0 as usize]);
            let mut split = local_symbol_real(x, y).is_split();
            split &= local_symbol_2(x, y).is_split();
            for &p in &odd {
                split &= local_symbol_odd(p, x, y).is_split();
            }
            if split {
                Symbol::Split
            } else {
                Symbol::NonSplit
            }
        },
        vec![ValuationData::trivial(rank)],
    )
}

/// Number of nonsplit places of `(a, b)` among infinity, 2 and the model's
/// odd primes — the Hilbert reciprocity count.
pub fn local_nonsplit_count(
    model: &FieldModel,
    a: SquareClass,
    b: SquareClass,
) -> Result<usize, FieldError> {
    let ModelKind::Rationals { primes } = model.kind() else {
        return Err(FieldError::OracleUnsupported(model.name().into()));
    };
    let reps = rational_reps(primes);
    let (x, y) = (reps[a.0 as usize], reps[b.0 as usize]);
    let mut n = 0;
    if !local_symbol_real(x, y).is_split() {
        n += 1;
    }
    if !local_symbol_2(x, y).is_split() {
        n += 1;
    }
    for &p in primes.iter().filter(|&&p| p != 2) {
        if !local_symbol_odd(p, x, y).is_split() {
            n += 1;
        }
    }
    Ok(n)
}

/// Formal Laurent series over a base model. New basis element: the
/// uniformizer `t`. Unit pairs take the base symbol on residues; a unit pairs
/// with a uniformizer iff its residue is a base square; two uniformizer-type
/// classes `ut, vt` pair by the residue class of `-uv`.
pub fn laurent(base: FieldModel) -> Result<FieldModel, FieldError> {
    let rank = base.rank() + 1;
    if rank > MAX_RANK {
        return Err(FieldError::RankTooLarge {
            rank,
            limit: MAX_RANK,
        });
    }
    let t_bit = 1u8 << base.rank();
    let n = 1usize << rank;
    let labels: Vec<String> = (0..n)
        .map(|bits| {
            let unit = base.class_label(SquareClass((bits as u8) & (t_bit - 1)));
            if bits as u8 & t_bit == 0 {
                unit.to_string()
            } else if unit == "1" {
                "t".into()
            } else if unit == "-1" {
                "-t".into()
            } else {
                format!("{unit}t")
            }
        })
        .collect();
    let minus_one = base.minus_one();
    let formally_real = base.is_formally_real();
    let base_for_symbol = base.clone();
    let parity: Vec<u8> = (0..n).map(|bits| if bits as u8 & t_bit != 0 { 1 } else { 0 }).collect();
    let t_adic = ValuationData::new("t-adic", rank, parity, true)?;
    let name = format!("laurent({})", base.name());
    FieldModel::build(
        name,
        ModelKind::Laurent { base: Box::new(base) },
        rank,
        minus_one,
        formally_real,
        labels,
        move |a, b| {
            let ua = SquareClass(a.0 & (t_bit - 1));
            let ub = SquareClass(b.0 & (t_bit - 1));
            match (a.0 & t_bit != 0, b.0 & t_bit != 0) {
                (false, false) => base_for_symbol.symbol(ua, ub),
                (false, true) => {
                    if ua.is_one() {
                        Symbol::Split
                    } else {
                        Symbol::NonSplit
                    }
                }
                (true, false) => {
                    if ub.is_one() {
                        Symbol::Split
                    } else {
                        Symbol::NonSplit
                    }
                }
                (true, true) => {
                    let minus_uv = base_for_symbol.minus_one().product(ua).product(ub);
                    if minus_uv.is_one() {
                        Symbol::Split
                    } else {
                        Symbol::NonSplit
                    }
                }
            }
        },
        vec![ValuationData::trivial(rank), t_adic],
    )
}

/// Parses a model spec string: `reals`, `Fq:9`, `Qp:3`, `Q2`, `Q:S=2,7`,
/// `laurent(<spec>)`.
pub fn parse_model(spec: &str) -> Result<FieldModel, FieldError> {
    let spec = spec.trim();
    if spec == "reals" {
        return Ok(reals());
    }
    if spec == "Q2" {
        return Ok(dyadic2());
    }
    if let Some(q) = spec.strip_prefix("Fq:") {
        let q: u32 = q
            .parse()
            .map_err(|_| FieldError::InvalidParameter(format!("bad field order `{q}`")))?;
        return finite_field(q);
    }
    if let Some(p) = spec.strip_prefix("Qp:") {
        let p: u32 = p
            .parse()
            .map_err(|_| FieldError::InvalidParameter(format!("bad prime `{p}`")))?;
        return padic(p);
    }
    if let Some(s) = spec.strip_prefix("Q:S=") {
        let primes: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let primes =
            primes.map_err(|_| FieldError::InvalidParameter(format!("bad prime set `{s}`")))?;
        return rationals(&primes);
    }
    if let Some(inner) = spec.strip_prefix("laurent(").and_then(|s| s.strip_suffix(')')) {
        return laurent(parse_model(inner)?);
    }
    Err(FieldError::InvalidParameter(format!("unknown model spec `{spec}`")))
}

/// The fixed menu of models the deciders and the acceptance suite run over.
pub fn menu_models() -> Vec<FieldModel> {
    vec![
        reals(),
        finite_field(5).unwrap(),
        finite_field(7).unwrap(),
        finite_field(9).unwrap(),
        padic(3).unwrap(),
        padic(5).unwrap(),
        padic(7).unwrap(),
        dyadic2(),
        rationals(&[2, 7]).unwrap(),
        rationals(&[2, 3, 5]).unwrap(),
        laurent(reals()).unwrap(),
        laurent(finite_field(3).unwrap()).unwrap(),
        laurent(finite_field(5).unwrap()).unwrap(),
        laurent(dyadic2()).unwrap(),
    ]
}
