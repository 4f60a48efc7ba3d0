//! Exact arithmetic in the tower `F_p ⊂ F_q ⊂ F_{q^m}` with `q = p^e`,
//! including the canonical subfield embeddings and the Frobenius map
//! `x -> x^q`.
//!
//! All moduli are the lexicographically smallest monic irreducibles of their
//! degree (coefficient words compared constant term first, elements ordered
//! by integer index), so two runs — or two implementations — agree on every
//! serialized value.

pub(crate) mod arith;
mod poly;

pub use poly::Poly;

use std::collections::BTreeMap;

use arith::{
    digit_add, digit_neg, find_generator, pack, pv_deg, pv_is_irreducible, smallest_irreducible,
    unpack, IndexField, PrimeArith,
};
use thiserror::Error;

/// Largest supported field size for `F_{q^m}`; the exp/log tables are dense.
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degrees must be at least 1")]
    ZeroDegree,
    #[error("field of size {0} exceeds the supported maximum {MAX_FIELD_SIZE}")]
    FieldTooLarge(u64),
    #[error("level {0} is not a divisor of m = {1}")]
    InvalidLevel(u32, u32),
    #[error("index {0} out of range for level {1}")]
    IndexOutOfRange(u64, u32),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("cannot parse element from {0:?}")]
    BadElementText(String),
    #[error("polynomial degree {0} does not divide m = {1}")]
    DegreeNotDividing(usize, u32),
}

/// An element of `F_{q^d}` for some divisor `d` of `m`, identified by its
/// level and its packed coefficient index. Ordering is by `(level, index)`;
/// on a fixed level that is exactly the canonical element order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    level: u32,
    index: u64,
}

impl FieldElem {
    pub(crate) fn new(level: u32, index: u64) -> Self {
        FieldElem { level, index }
    }

    /// Extension degree over `F_q` of the field this element lives in.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Packed coefficient index (the canonical integer encoding).
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

/// Dense exp/log tables for one level `F_{q^d}` of the tower.
pub(crate) struct LevelTable {
    /// Extension degree over `F_q`.
    pub(crate) degree: u32,
    pub(crate) size: u64,
    pub(crate) p: u64,
    /// Modulus over this table's base field: `modulus_q` over `F_p` for the
    /// base table, the canonical degree-`d` irreducible over `F_q` otherwise.
    pub(crate) modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Powers `rho^0 .. rho^{d-1}` of the embedding image of the canonical
    /// generator, as top-level indices.
    embed_pows: Vec<u64>,
}

impl LevelTable {
    fn build<F: IndexField>(base: &F, modulus: &[u64], degree: u32, p: u64) -> LevelTable {
        let d = pv_deg(modulus) as usize;
        let size = base
            .size()
            .checked_pow(d as u32)
            .expect("field size overflow");
        let gen_idx = find_generator(base, modulus, size);
        let gen = unpack(base.size(), gen_idx, d);
        let mut exp = vec![0u32; (size - 1) as usize];
        let mut log = vec![u32::MAX; size as usize];
        let mut cur = vec![0u64; d];
        cur[0] = 1;
        for i in 0..(size - 1) as usize {
            let idx = pack(base.size(), &cur);
            exp[i] = idx as u32;
            debug_assert_eq!(log[idx as usize], u32::MAX, "generator is not primitive");
            log[idx as usize] = i as u32;
            cur = {
                let mut prod = arith::pv_mulmod(base, &cur, &gen, modulus);
                prod.resize(d, 0);
                prod
            };
        }
        debug_assert_eq!(pack(base.size(), &cur), 1, "generator order mismatch");
        LevelTable {
            degree,
            size,
            p,
            modulus: modulus.to_vec(),
            exp,
            log,
            embed_pows: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        digit_add(self.p, a, b)
    }

    #[inline]
    pub(crate) fn neg(&self, a: u64) -> u64 {
        digit_neg(self.p, a)
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        digit_add(self.p, a, digit_neg(self.p, b))
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.size - 1;
        let l = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(l % s) as usize] as u64
    }

    #[inline]
    pub(crate) fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let s = self.size - 1;
        self.exp[((s - self.log[a as usize] as u64) % s) as usize] as u64
    }

    pub(crate) fn pow(&self, a: u64, k: u128) -> u64 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let s = (self.size - 1) as u128;
        let l = self.log[a as usize] as u128 * (k % s) % s;
        self.exp[l as usize] as u64
    }

    /// i-th power of the chosen generator; `i` is reduced mod `size - 1`.
    pub(crate) fn exp_at(&self, i: u64) -> u64 {
        self.exp[(i % (self.size - 1)) as usize] as u64
    }
}

impl IndexField for LevelTable {
    fn size(&self) -> u64 {
        self.size
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        LevelTable::add(self, a, b)
    }

    fn neg(&self, a: u64) -> u64 {
        LevelTable::neg(self, a)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        LevelTable::mul(self, a, b)
    }

    fn inv(&self, a: u64) -> u64 {
        LevelTable::inv(self, a)
    }
}

/// The two-level tower `F_q = F_p[x]/(modulus_q)` and
/// `F_{q^m} = F_q[y]/(modulus_m)`, with one table per divisor of `m`.
///
/// Immutable after construction; all operations are pure, so a tower can be
/// shared freely across threads.
pub struct FieldTower {
    p: u64,
    e: u32,
    m: u32,
    q: u64,
    modulus_q: Vec<u64>,
    levels: BTreeMap<u32, LevelTable>,
}

impl std::fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("m", &self.m)
            .field("q", &self.q)
            .finish_non_exhaustive()
    }
}

impl FieldTower {
    /// Builds the tower for `F_q = F_{p^e}` and its degree-`m` extension.
    /// Moduli and embeddings are deterministic: no randomness is involved.
    pub fn new(p: u64, e: u32, m: u32) -> Result<FieldTower, FieldError> {
        if !arith::is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 || m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q128 = (p as u128).pow(e);
        let top128 = q128.checked_pow(m).unwrap_or(u128::MAX);
        if top128 > MAX_FIELD_SIZE as u128 {
            return Err(FieldError::FieldTooLarge(top128.min(u64::MAX as u128) as u64));
        }
        let q = q128 as u64;
        let top_size = top128 as u64;

        let fp = PrimeArith { p };
        let modulus_q = smallest_irreducible(&fp, e as usize);
        let base = LevelTable::build(&fp, &modulus_q, 1, p);

        let mut levels = BTreeMap::new();
        for d in divisors(m) {
            if d == 1 {
                continue;
            }
            let modulus_d = smallest_irreducible(&base, d as usize);
            let table = LevelTable::build(&base, &modulus_d, d, p);
            levels.insert(d, table);
        }
        levels.insert(1, base);

        let mut tower = FieldTower {
            p,
            e,
            m,
            q,
            modulus_q,
            levels,
        };
        tower.fill_embeddings();
        debug_assert_eq!(tower.levels[&m].size, top_size);
        Ok(tower)
    }

    /// For each level, the image of the canonical generator under the fixed
    /// embedding into the top field: the lexicographically smallest root of
    /// that level's modulus.
    fn fill_embeddings(&mut self) {
        let m = self.m;
        let q = self.q;
        let mut pows: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        for (&d, table) in &self.levels {
            let rho = if d == m {
                // The residue class of y is itself a root of modulus_m, and
                // no smaller index can be one: indices below q are constants.
                if m == 1 {
                    0
                } else {
                    q
                }
            } else if d == 1 {
                0
            } else {
                let top = &self.levels[&m];
                let roots = roots_in_subfield(top, &table.modulus, d);
                *roots.iter().min().expect("modulus has roots in the top field")
            };
            let top = &self.levels[&m];
            let mut v = Vec::with_capacity(d as usize);
            let mut cur = 1u64;
            for _ in 0..d {
                v.push(cur);
                cur = top.mul(cur, rho);
            }
            pows.insert(d, v);
        }
        for (d, v) in pows {
            self.levels.get_mut(&d).unwrap().embed_pows = v;
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Size of the top field `F_{q^m}`.
    pub fn top_size(&self) -> u64 {
        self.levels[&self.m].size
    }

    /// Divisors of `m`, i.e. the levels that exist in this tower.
    pub fn levels(&self) -> Vec<u32> {
        self.levels.keys().copied().collect()
    }

    /// Coefficients of the irreducible defining `F_q` over `F_p`, low first.
    pub fn modulus_q(&self) -> &[u64] {
        &self.modulus_q
    }

    /// The canonical degree-`d` irreducible over `F_q` defining level `d`,
    /// as a level-1 polynomial. For `d = 1` this is `y` itself.
    pub fn level_modulus(&self, d: u32) -> Result<Poly, FieldError> {
        if d == 1 {
            return Ok(Poly::from_indices(1, vec![0, 1]));
        }
        let t = self
            .levels
            .get(&d)
            .ok_or(FieldError::InvalidLevel(d, self.m))?;
        Ok(Poly::from_indices(1, t.modulus.clone()))
    }

    pub(crate) fn table(&self, level: u32) -> &LevelTable {
        self.levels
            .get(&level)
            .unwrap_or_else(|| panic!("level {} does not exist (m = {})", level, self.m))
    }

    pub(crate) fn top_table(&self) -> &LevelTable {
        &self.levels[&self.m]
    }

    pub fn elem(&self, level: u32, index: u64) -> Result<FieldElem, FieldError> {
        let t = self
            .levels
            .get(&level)
            .ok_or(FieldError::InvalidLevel(level, self.m))?;
        if index >= t.size {
            return Err(FieldError::IndexOutOfRange(index, level));
        }
        Ok(FieldElem { level, index })
    }

    pub fn zero(&self, level: u32) -> FieldElem {
        let _ = self.table(level);
        FieldElem { level, index: 0 }
    }

    pub fn one(&self, level: u32) -> FieldElem {
        let _ = self.table(level);
        FieldElem { level, index: 1 }
    }

    fn check_pair(&self, a: FieldElem, b: FieldElem) -> &LevelTable {
        assert_eq!(a.level, b.level, "field element level mismatch");
        self.table(a.level)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let t = self.check_pair(a, b);
        FieldElem::new(a.level, t.add(a.index, b.index))
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let t = self.check_pair(a, b);
        FieldElem::new(a.level, t.sub(a.index, b.index))
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let t = self.table(a.level);
        FieldElem::new(a.level, t.neg(a.index))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let t = self.check_pair(a, b);
        FieldElem::new(a.level, t.mul(a.index, b.index))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        let t = self.table(a.level);
        FieldElem::new(a.level, t.inv(a.index))
    }

    pub fn pow(&self, a: FieldElem, k: u64) -> FieldElem {
        let t = self.table(a.level);
        FieldElem::new(a.level, t.pow(a.index, k as u128))
    }

    /// The Frobenius map `x -> x^q` on the top field. Applying it `m` times
    /// is the identity; its fixed field is the embedded `F_q`.
    pub fn frobenius(&self, x: FieldElem) -> FieldElem {
        assert_eq!(x.level, self.m, "frobenius expects a top-level element");
        let t = self.top_table();
        FieldElem::new(self.m, t.pow(x.index, self.q as u128))
    }

    /// The fixed embedding of `F_{q^d}` into `F_{q^m}`: the canonical
    /// generator of level `d` goes to the lexicographically smallest root of
    /// that level's modulus in the top field.
    pub fn embed(&self, x: FieldElem) -> FieldElem {
        let t = self.table(x.level);
        if x.level == self.m {
            return x;
        }
        let top = self.top_table();
        let coeffs = unpack(self.q, x.index, t.degree as usize);
        let mut acc = 0u64;
        for (c, rho_pow) in coeffs.into_iter().zip(&t.embed_pows) {
            // Constants embed with their index unchanged, so an F_q
            // coefficient is directly a valid top-level factor.
            acc = top.add(acc, top.mul(c, *rho_pow));
        }
        FieldElem::new(self.m, acc)
    }

    /// Inverse of the constant embedding: top-level elements with index
    /// below `q` are exactly the embedded copy of `F_q`.
    pub fn to_base(&self, x: FieldElem) -> Option<FieldElem> {
        assert_eq!(x.level, self.m, "to_base expects a top-level element");
        (x.index < self.q).then(|| FieldElem::new(1, x.index))
    }

    /// Coefficient vector over `F_q`, low degree first.
    pub fn coeffs_over_base(&self, x: FieldElem) -> Vec<FieldElem> {
        let t = self.table(x.level);
        unpack(self.q, x.index, t.degree as usize)
            .into_iter()
            .map(|c| FieldElem::new(1, c))
            .collect()
    }

    pub fn from_base_coeffs(&self, level: u32, coeffs: &[FieldElem]) -> Result<FieldElem, FieldError> {
        let t = self
            .levels
            .get(&level)
            .ok_or(FieldError::InvalidLevel(level, self.m))?;
        if coeffs.len() != t.degree as usize {
            return Err(FieldError::IndexOutOfRange(coeffs.len() as u64, level));
        }
        let mut idx: Vec<u64> = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            assert_eq!(c.level, 1, "coefficients must be base-field elements");
            idx.push(c.index);
        }
        Ok(FieldElem::new(level, pack(self.q, &idx)))
    }

    /// Canonical text encoding: coefficients low degree first, `F_p` digits
    /// joined by `.` within an `F_q` coefficient, coefficients joined by `:`.
    pub fn encode_elem(&self, x: FieldElem) -> String {
        let t = self.table(x.level);
        let groups = unpack(self.q, x.index, t.degree as usize);
        groups
            .into_iter()
            .map(|g| {
                unpack(self.p, g, self.e as usize)
                    .into_iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect::<Vec<_>>()
            .join(":")
    }

    pub fn parse_elem(&self, level: u32, s: &str) -> Result<FieldElem, FieldError> {
        let t = self
            .levels
            .get(&level)
            .ok_or(FieldError::InvalidLevel(level, self.m))?;
        let bad = || FieldError::BadElementText(s.to_string());
        let groups: Vec<&str> = s.split(':').collect();
        if groups.len() != t.degree as usize {
            return Err(bad());
        }
        let mut coeffs = Vec::with_capacity(groups.len());
        for g in groups {
            let digits: Vec<&str> = g.split('.').collect();
            if digits.len() != self.e as usize {
                return Err(bad());
            }
            let mut vals = Vec::with_capacity(digits.len());
            for d in digits {
                let v: u64 = d.trim().parse().map_err(|_| bad())?;
                if v >= self.p {
                    return Err(bad());
                }
                vals.push(v);
            }
            coeffs.push(pack(self.p, &vals));
        }
        Ok(FieldElem::new(level, pack(self.q, &coeffs)))
    }

    /// All roots in `F_{q^m}` of a monic irreducible over `F_q` whose degree
    /// divides `m`, ordered along the Frobenius orbit starting from the
    /// lexicographically smallest root.
    pub fn find_roots(&self, f: &Poly) -> Result<Vec<FieldElem>, FieldError> {
        assert_eq!(f.level(), 1, "find_roots expects a polynomial over F_q");
        let deg = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(FieldError::NotMonic),
        };
        let idx = f.indices();
        if *idx.last().unwrap() != 1 {
            return Err(FieldError::NotMonic);
        }
        if self.m % deg as u32 != 0 {
            return Err(FieldError::DegreeNotDividing(deg, self.m));
        }
        if !pv_is_irreducible(self.table(1), idx) {
            return Err(FieldError::Reducible);
        }
        let top = self.top_table();
        let roots = roots_in_subfield(top, idx, deg as u32);
        debug_assert_eq!(roots.len(), deg);
        let start = *roots.iter().min().unwrap();
        let mut orbit = Vec::with_capacity(deg);
        let mut cur = start;
        for _ in 0..deg {
            orbit.push(FieldElem::new(self.m, cur));
            cur = top.pow(cur, self.q as u128);
        }
        debug_assert_eq!(cur, start, "roots do not close under Frobenius");
        Ok(orbit)
    }
}

/// Roots of a monic polynomial with `F_q` coefficients inside the subfield
/// `F_{q^d}` of the top field, found by scanning that subfield.
fn roots_in_subfield(top: &LevelTable, f: &[u64], d: u32) -> Vec<u64> {
    let q = nth_root(top.size, top.degree);
    let sub_size = q.pow(d);
    let stride = (top.size - 1) / (sub_size - 1);
    let mut roots = Vec::new();
    if eval_top(top, f, 0) == 0 {
        roots.push(0);
    }
    for k in 0..(sub_size - 1) {
        let x = top.exp_at(k * stride);
        if eval_top(top, f, x) == 0 {
            roots.push(x);
        }
    }
    roots
}

#[inline]
fn eval_top(top: &LevelTable, f: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = top.add(top.mul(acc, x), c);
    }
    acc
}

/// Integer d-th root for exact powers.
fn nth_root(n: u64, d: u32) -> u64 {
    let mut lo = 1u64;
    let mut hi = n;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match mid.checked_pow(d) {
            Some(v) if v < n => lo = mid + 1,
            Some(v) if v == n => return mid,
            _ => hi = mid,
        }
    }
    lo
}

fn divisors(m: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
    out.sort_unstable();
    out
}
