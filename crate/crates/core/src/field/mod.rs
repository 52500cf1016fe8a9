//! Concrete field models: finite square-class groups with exact
//! Hilbert-symbol tables, value sets of binary quadratic forms, orderings,
//! and attached valuation data.
//!
//! A model represents a field `F` by the elementary abelian 2-group of its
//! square classes (restricted, for the rationals, to the classes supported on
//! a chosen prime set). The symbol table decides whether the quaternion
//! algebra `(a,b)` splits; every other computation — value sets
//! `D(<1,a>)`, rigidity, orderings — is derived from it.

mod models;
mod oracle;

pub use models::{
    dyadic2, finite_field, laurent, local_nonsplit_count, menu_models, padic, parse_model,
    rationals, reals,
};
pub use oracle::brute_force_symbol;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("invalid model parameter: {0}")]
    InvalidParameter(String),
    #[error("model is not formally real")]
    NotFormallyReal,
    #[error("rank {rank} exceeds supported limit {limit}")]
    RankTooLarge { rank: u8, limit: u8 },
    #[error("square class out of range for this model")]
    ClassOutOfRange,
    #[error("rigidity is undefined for {0}")]
    UndefinedRigidity(String),
    #[error("model of rank {got} where rank {expected} is required")]
    RankMismatch { expected: u8, got: u8 },
    #[error("model invariant violated: {0}")]
    Inconsistent(String),
    #[error("no brute-force oracle for model {0}")]
    OracleUnsupported(String),
}

/// Maximum supported square-class rank (`|F*/F*^2| = 2^rank`).
pub const MAX_RANK: u8 = 5;

/// A square class: coordinates over the model's fixed basis, packed as bits.
/// The class of 1 is the zero vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SquareClass(pub u8);

impl SquareClass {
    pub const ONE: SquareClass = SquareClass(0);

    pub fn product(self, other: SquareClass) -> SquareClass {
        SquareClass(self.0 ^ other.0)
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }
}

/// A set of square classes, packed as a bitmask over class indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ClassSet(pub u32);

impl ClassSet {
    pub const EMPTY: ClassSet = ClassSet(0);

    pub fn full(rank: u8) -> ClassSet {
        ClassSet(((1u64 << (1 << rank)) - 1) as u32)
    }

    pub fn contains(self, c: SquareClass) -> bool {
        self.0 >> c.0 & 1 == 1
    }

    pub fn insert(&mut self, c: SquareClass) {
        self.0 |= 1 << c.0;
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = SquareClass> {
        (0..32u8).filter(move |&i| self.0 >> i & 1 == 1).map(SquareClass)
    }

    /// Closed under products and containing the class of 1.
    pub fn is_subgroup(self) -> bool {
        if !self.contains(SquareClass::ONE) {
            return false;
        }
        for a in self.iter() {
            for b in self.iter() {
                if !self.contains(a.product(b)) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    Split,
    NonSplit,
}

impl Symbol {
    pub fn is_split(self) -> bool {
        self == Symbol::Split
    }
}

/// What concrete field a model stands for; used for labels, representatives
/// and the brute-force oracles.
#[derive(Clone, Debug)]
pub enum ModelKind {
    Reals,
    FiniteField { q: u32, p: u32, k: u32 },
    Padic { p: u32 },
    Dyadic2,
    Rationals { primes: Vec<u32> },
    Laurent { base: Box<FieldModel> },
}

/// Valuation data attached to a model: which classes are units times squares,
/// the parity of the value of each class, and the two flags the valuation
/// theory cares about.
#[derive(Clone, Debug)]
pub struct ValuationData {
    pub name: String,
    pub unit_classes: ClassSet,
    /// Class of `v(f)` in `Gamma/2Gamma` (0 or 1; the menu valuations all
    /// have cyclic or trivial value group).
    parity: Vec<u8>,
    pub two_divisible: bool,
    pub one_plus_m_in_squares: bool,
}

impl ValuationData {
    pub(crate) fn new(
        name: &str,
        rank: u8,
        parity: Vec<u8>,
        one_plus_m_in_squares: bool,
    ) -> Result<Self, FieldError> {
        let n = 1usize << rank;
        if parity.len() != n {
            return Err(FieldError::Inconsistent("parity table size".into()));
        }
        let mut unit_classes = ClassSet::EMPTY;
        for (i, &p) in parity.iter().enumerate() {
            if p == 0 {
                unit_classes.insert(SquareClass(i as u8));
            }
        }
        if !unit_classes.is_subgroup() {
            return Err(FieldError::Inconsistent(
                "unit classes do not form a subgroup".into(),
            ));
        }
        // v(fg) = v(f) + v(g).
        for a in 0..n {
            for b in 0..n {
                if (parity[a] ^ parity[b]) != parity[a ^ b] {
                    return Err(FieldError::Inconsistent("parity not multiplicative".into()));
                }
            }
        }
        let two_divisible = unit_classes == ClassSet::full(rank);
        Ok(ValuationData {
            name: name.into(),
            unit_classes,
            parity,
            two_divisible,
            one_plus_m_in_squares,
        })
    }

    pub fn trivial(rank: u8) -> Self {
        ValuationData::new("trivial", rank, vec![0; 1 << rank], true)
            .expect("trivial valuation is valid")
    }

    /// Class of `v(f)` modulo doubled values.
    pub fn value_parity(&self, c: SquareClass) -> u8 {
        self.parity[c.0 as usize]
    }
}

/// The value set `D(<1,a>)` of the binary form `x^2 + a y^2`: the norm-group
/// subgroup `{b : (-a, b) splits}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ValueSet {
    pub classes: ClassSet,
}

impl ValueSet {
    pub fn contains(&self, c: SquareClass) -> bool {
        self.classes.contains(c)
    }

    /// Number of square classes represented.
    pub fn size(&self) -> usize {
        self.classes.size()
    }
}

/// A named field model: square-class basis, Hilbert-symbol table, formal
/// reality, and a menu of candidate valuations.
#[derive(Clone, Debug)]
pub struct FieldModel {
    name: String,
    kind: ModelKind,
    rank: u8,
    minus_one: SquareClass,
    formally_real: bool,
    labels: Vec<String>,
    /// `table[a] >> b & 1 == 1` iff `(a, b)` does not split.
    table: Vec<u32>,
    valuations: Vec<ValuationData>,
    bilinear: bool,
}

impl FieldModel {
    /// Builds and validates a model from a symbol function. Checks symmetry,
    /// `(a, 1)` split, `(a, -a)` split, and computes whether the boolean
    /// table is bimultiplicative (it is for local-type models; for compound
    /// models like the rationals it provably is not, and is only recorded).
    pub(crate) fn build(
        name: String,
        kind: ModelKind,
        rank: u8,
        minus_one: SquareClass,
        formally_real: bool,
        labels: Vec<String>,
        symbol_fn: impl Fn(SquareClass, SquareClass) -> Symbol,
        valuations: Vec<ValuationData>,
    ) -> Result<FieldModel, FieldError> {
        if rank == 0 || rank > MAX_RANK {
            return Err(FieldError::RankTooLarge {
                rank,
                limit: MAX_RANK,
            });
        }
        let n = 1usize << rank;
        if labels.len() != n {
            return Err(FieldError::Inconsistent("label count".into()));
        }
        let mut table = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if symbol_fn(SquareClass(a as u8), SquareClass(b as u8)) == Symbol::NonSplit {
                    table[a] |= 1 << b;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if (table[a] >> b & 1) != (table[b] >> a & 1) {
                    return Err(FieldError::Inconsistent(format!(
                        "symbol not symmetric at ({a},{b})"
                    )));
                }
            }
        }
        for a in 0..n {
            if table[a] & 1 != 0 {
                return Err(FieldError::Inconsistent(format!("({a}, 1) must split")));
            }
            let neg_a = a ^ minus_one.0 as usize;
            if table[a] >> neg_a & 1 != 0 {
                return Err(FieldError::Inconsistent(format!("({a}, -{a}) must split")));
            }
        }
        let mut bilinear = true;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = table[a] >> (b ^ c) & 1;
                    let rhs = (table[a] >> b & 1) ^ (table[a] >> c & 1);
                    if lhs != rhs {
                        bilinear = false;
                        break 'outer;
                    }
                }
            }
        }
        if matches!(
            kind,
            ModelKind::Reals
                | ModelKind::FiniteField { .. }
                | ModelKind::Padic { .. }
                | ModelKind::Dyadic2
        ) && !bilinear
        {
            return Err(FieldError::Inconsistent(
                "local-type model must have a bimultiplicative symbol".into(),
            ));
        }
        for v in &valuations {
            if v.parity.len() != n {
                return Err(FieldError::Inconsistent("valuation parity size".into()));
            }
        }
        Ok(FieldModel {
            name,
            kind,
            rank,
            minus_one,
            formally_real,
            labels,
            table,
            valuations,
            bilinear,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn class_count(&self) -> usize {
        1 << self.rank
    }

    pub fn minus_one(&self) -> SquareClass {
        self.minus_one
    }

    pub fn is_formally_real(&self) -> bool {
        self.formally_real
    }

    pub fn is_bilinear(&self) -> bool {
        self.bilinear
    }

    pub fn valuations(&self) -> &[ValuationData] {
        &self.valuations
    }

    pub fn classes(&self) -> impl Iterator<Item = SquareClass> {
        (0..self.class_count() as u8).map(SquareClass)
    }

    pub fn class_label(&self, c: SquareClass) -> &str {
        &self.labels[c.0 as usize]
    }

    pub fn check_class(&self, c: SquareClass) -> Result<(), FieldError> {
        if (c.0 as usize) < self.class_count() {
            Ok(())
        } else {
            Err(FieldError::ClassOutOfRange)
        }
    }

    pub fn negate(&self, c: SquareClass) -> SquareClass {
        c.product(self.minus_one)
    }

    pub fn symbol(&self, a: SquareClass, b: SquareClass) -> Symbol {
        debug_assert!((a.0 as usize) < self.class_count() && (b.0 as usize) < self.class_count());
        if self.table[a.0 as usize] >> b.0 & 1 == 1 {
            Symbol::NonSplit
        } else {
            Symbol::Split
        }
    }

    /// `D(<1,a>) = {b : (-a, b) splits}`, always a subgroup containing 1 and
    /// `a`.
    pub fn value_set(&self, a: SquareClass) -> ValueSet {
        let neg_a = self.negate(a);
        let mut classes = ClassSet::EMPTY;
        for b in self.classes() {
            if self.symbol(neg_a, b).is_split() {
                classes.insert(b);
            }
        }
        let vs = ValueSet { classes };
        assert!(vs.contains(SquareClass::ONE) && vs.contains(a) && classes.is_subgroup());
        vs
    }

    /// Every sum of two squares is a square.
    pub fn is_pythagorean(&self) -> bool {
        self.value_set(SquareClass::ONE).size() == 1
    }

    /// Positive cones: index-2 subgroups avoiding -1 and additively closed in
    /// the value-set sense (`a, b in P` forces `a * D(<1, ab>)` into `P`).
    pub fn orderings(&self) -> Result<Vec<ClassSet>, FieldError> {
        if !self.formally_real {
            return Err(FieldError::NotFormallyReal);
        }
        let n = self.class_count();
        let mut out = Vec::new();
        for functional in 1u32..(n as u32) {
            let phi = |c: SquareClass| (functional & c.0 as u32).count_ones() % 2;
            if phi(self.minus_one) != 1 {
                continue;
            }
            let mut cone = ClassSet::EMPTY;
            for c in self.classes() {
                if phi(c) == 0 {
                    cone.insert(c);
                }
            }
            let closed = cone.iter().all(|a| {
                cone.iter().all(|b| {
                    self.value_set(a.product(b))
                        .classes
                        .iter()
                        .all(|v| cone.contains(a.product(v)))
                })
            });
            if closed {
                out.push(cone);
            }
        }
        Ok(out)
    }

    /// Raw symbol table rows for exact comparisons.
    pub fn symbol_table_bits(&self) -> &[u32] {
        &self.table
    }

    /// JSON dump of the symbol table, only offered at rank <= 4.
    pub fn symbol_table_json(&self) -> Option<serde_json::Value> {
        if self.rank > 4 {
            return None;
        }
        let rows: Vec<serde_json::Value> = self
            .classes()
            .map(|a| {
                let cells: Vec<&str> = self
                    .classes()
                    .map(|b| if self.symbol(a, b).is_split() { "split" } else { "nonsplit" })
                    .collect();
                serde_json::json!({ "class": self.class_label(a), "row": cells })
            })
            .collect();
        Some(serde_json::Value::Array(rows))
    }

    /// Model summary for the CLI.
    pub fn info_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "rank": self.rank,
            "classes": self.labels,
            "minus_one": self.class_label(self.minus_one),
            "formally_real": self.formally_real,
            "bimultiplicative": self.bilinear,
            "valuations": self.valuations.iter().map(|v| serde_json::json!({
                "name": v.name,
                "two_divisible": v.two_divisible,
                "one_plus_m_in_squares": v.one_plus_m_in_squares,
                "unit_classes": v.unit_classes.iter().map(|c| self.class_label(c)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "symbol_table": self.symbol_table_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_model() {
        let r = reals();
        assert_eq!(r.rank(), 1);
        assert!(r.is_formally_real());
        let m1 = r.minus_one();
        assert_eq!(r.symbol(m1, m1), Symbol::NonSplit);
        assert_eq!(r.symbol(m1, SquareClass::ONE), Symbol::Split);
        assert_eq!(r.value_set(SquareClass::ONE).size(), 1);
        assert!(r.is_pythagorean());
        assert_eq!(r.orderings().unwrap().len(), 1);
    }

    #[test]
    fn finite_field_symbols_always_split() {
        for q in [5, 7, 9, 13] {
            let f = finite_field(q).unwrap();
            for a in f.classes() {
                for b in f.classes() {
                    assert_eq!(f.symbol(a, b), Symbol::Split);
                }
            }
            assert_eq!(f.minus_one().is_one(), q % 4 == 1, "q = {q}");
        }
        assert!(finite_field(8).is_err());
        assert!(finite_field(2).is_err());
    }

    #[test]
    fn padic_3_symbols() {
        let q3 = padic(3).unwrap();
        // Basis {u, p}; u the nonresidue.
        let u = SquareClass(1);
        let p = SquareClass(2);
        assert_eq!(q3.symbol(u, u), Symbol::Split);
        assert_eq!(q3.symbol(u, p), Symbol::NonSplit);
        assert_eq!(q3.symbol(p, p), Symbol::NonSplit); // 3 = 3 mod 4
        assert_eq!(padic(5).unwrap().symbol(p, p), Symbol::Split); // 5 = 1 mod 4
        assert!(q3.is_bilinear());
        assert!(padic(2).is_err());
    }

    #[test]
    fn dyadic_value_set_of_one() {
        let q2 = dyadic2();
        let vs = q2.value_set(SquareClass::ONE);
        let labels: Vec<&str> = vs.classes.iter().map(|c| q2.class_label(c)).collect();
        assert_eq!(labels, vec!["1", "2", "5", "10"]);
        assert_eq!(q2.symbol(q2.minus_one(), q2.minus_one()), Symbol::NonSplit);
    }

    #[test]
    fn value_sets_are_subgroups_containing_one_and_a() {
        for m in menu_models() {
            for a in m.classes() {
                let vs = m.value_set(a);
                assert!(vs.contains(SquareClass::ONE) && vs.contains(a));
                assert!(vs.classes.is_subgroup());
            }
        }
    }

    #[test]
    fn rationals_27_model() {
        let q = rationals(&[2, 7]).unwrap();
        assert_eq!(q.rank(), 3);
        assert!(q.is_formally_real());
        assert!(!q.is_pythagorean());
        // (2,7) splits: 2 is a QR mod 7, local symbol at 2 vanishes.
        let two = SquareClass(0b010);
        let seven = SquareClass(0b100);
        assert_eq!(q.class_label(two), "2");
        assert_eq!(q.class_label(seven), "7");
        assert_eq!(q.symbol(two, seven), Symbol::Split);
        assert_eq!(q.symbol(two, two), Symbol::Split);
        // Boolean bimultiplicativity genuinely fails over the rationals.
        assert!(!q.is_bilinear());
        let m1 = q.minus_one();
        assert_eq!(q.symbol(m1, m1), Symbol::NonSplit);
        assert_eq!(q.symbol(m1, seven), Symbol::NonSplit);
        assert_eq!(q.symbol(m1, m1.product(seven)), Symbol::NonSplit);
    }

    #[test]
    fn product_formula_over_the_rationals() {
        for primes in [vec![2u32, 7], vec![2, 3, 5]] {
            let q = rationals(&primes).unwrap();
            for a in q.classes() {
                for b in q.classes() {
                    let nonsplit = local_nonsplit_count(&q, a, b).unwrap();
                    assert_eq!(nonsplit % 2, 0, "odd local count at ({a:?},{b:?})");
                }
            }
        }
    }

    #[test]
    fn laurent_over_reals_is_pythagorean_with_two_orderings() {
        let l = laurent(reals()).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.is_formally_real());
        assert!(l.is_pythagorean());
        assert_eq!(l.orderings().unwrap().len(), 2);
        // Boolean bilinearity fails here too: (-1,-1), (-1,t), (-1,-t) are
        // all nonsplit.
        assert!(!l.is_bilinear());
    }

    #[test]
    fn laurent_over_fp_matches_padic() {
        for p in [3u32, 5, 7] {
            let l = laurent(finite_field(p).unwrap()).unwrap();
            let q = padic(p).unwrap();
            assert_eq!(l.symbol_table_bits(), q.symbol_table_bits(), "p = {p}");
        }
    }

    #[test]
    fn valuation_menu_shapes() {
        let q2 = dyadic2();
        let vs = q2.valuations();
        assert_eq!(vs.len(), 2);
        assert!(vs[0].two_divisible && vs[0].one_plus_m_in_squares);
        assert!(!vs[1].two_divisible && !vs[1].one_plus_m_in_squares);
        let lq2 = laurent(dyadic2()).unwrap();
        let t = &lq2.valuations()[1];
        assert!(t.one_plus_m_in_squares && !t.two_divisible);
        assert_eq!(t.unit_classes.size(), 8);
        // Kernel of the parity map is exactly the unit classes.
        for c in lq2.classes() {
            assert_eq!(t.value_parity(c) == 0, t.unit_classes.contains(c));
        }
    }

    #[test]
    fn orderings_reject_nonreal_models() {
        assert!(matches!(
            dyadic2().orderings(),
            Err(FieldError::NotFormallyReal)
        ));
    }

    #[test]
    fn rank_five_models_omit_the_symbol_table_dump() {
        let m = parse_model("Q:S=2,3,5,7").unwrap();
        assert_eq!(m.rank(), 5);
        assert!(m.symbol_table_json().is_none());
        assert!(m.info_json()["symbol_table"].is_null());
        assert!(parse_model("Q:S=2,3,5,7,11").is_err());
    }

    #[test]
    fn parse_round_trips() {
        for spec in ["reals", "Fq:9", "Qp:3", "Q2", "Q:S=2,7", "laurent(reals)", "laurent(Q2)"] {
            let m = parse_model(spec).unwrap();
            assert_eq!(m.name(), spec);
        }
        assert!(parse_model("Qp:2").is_err());
        assert!(parse_model("Q:S=3,5").is_err()); // must contain 2
        assert!(parse_model("bogus").is_err());
    }
}
