//! Polynomials with coefficients at a single tower level. These carry the
//! elements of the evaluation space (polynomials of degree at most `deg G`)
//! as well as all moduli and the decoder's working polynomials.

use super::arith::{pv_divrem, pv_mul, pv_sub, pv_trim};
use super::{FieldElem, FieldError, FieldTower};

/// A polynomial over `F_{q^level}`, stored low degree first with no trailing
/// zero coefficients; the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    level: u32,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial from coefficients, all at the same level.
    pub fn new(coeffs: &[FieldElem]) -> Result<Poly, FieldError> {
        let level = match coeffs.first() {
            Some(c) => c.level(),
            None => return Ok(Poly { level: 1, coeffs: Vec::new() }),
        };
        let mut idx = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.level() != level {
                return Err(FieldError::InvalidLevel(c.level(), level));
            }
            idx.push(c.index());
        }
        pv_trim(&mut idx);
        Ok(Poly { level, coeffs: idx })
    }

    pub fn zero(level: u32) -> Poly {
        Poly { level, coeffs: Vec::new() }
    }

    pub(crate) fn from_indices(level: u32, mut coeffs: Vec<u64>) -> Poly {
        pv_trim(&mut coeffs);
        Poly { level, coeffs }
    }

    pub(crate) fn indices(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        FieldElem::new(self.level, self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElem> {
        self.coeffs
            .iter()
            .map(|&c| FieldElem::new(self.level, c))
            .collect()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }
}

impl FieldTower {
    fn poly_pair<'a>(&self, a: &'a Poly, b: &'a Poly) -> u32 {
        assert_eq!(a.level, b.level, "polynomial level mismatch");
        a.level
    }

    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Poly {
        let level = self.poly_pair(a, b);
        let t = self.table(level);
        Poly::from_indices(level, super::arith::pv_add(t, &a.coeffs, &b.coeffs))
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Poly {
        let level = self.poly_pair(a, b);
        let t = self.table(level);
        Poly::from_indices(level, pv_sub(t, &a.coeffs, &b.coeffs))
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        let level = self.poly_pair(a, b);
        let t = self.table(level);
        Poly::from_indices(level, pv_mul(t, &a.coeffs, &b.coeffs))
    }

    /// Quotient and remainder; panics if `b` is zero.
    pub fn poly_divrem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let level = self.poly_pair(a, b);
        let t = self.table(level);
        let (q, r) = pv_divrem(t, &a.coeffs, &b.coeffs);
        (Poly::from_indices(level, q), Poly::from_indices(level, r))
    }

    /// Horner evaluation. A base-field polynomial may be evaluated at a
    /// top-level point; its coefficients embed as constants.
    pub fn poly_eval(&self, f: &Poly, x: FieldElem) -> FieldElem {
        assert!(
            f.level == x.level() || (f.level == 1 && x.level() == self.m()),
            "cannot evaluate a level-{} polynomial at a level-{} point",
            f.level,
            x.level()
        );
        let t = self.table(x.level());
        let mut acc = 0u64;
        for &c in f.coeffs.iter().rev() {
            acc = t.add(t.mul(acc, x.index()), c);
        }
        FieldElem::new(x.level(), acc)
    }

    /// The monic polynomial with exactly the given roots.
    pub fn poly_from_roots(&self, level: u32, roots: &[FieldElem]) -> Poly {
        let t = self.table(level);
        let mut coeffs = vec![1u64];
        for r in roots {
            assert_eq!(r.level(), level, "root level mismatch");
            // multiply by (X - r)
            let neg_r = t.neg(r.index());
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = t.add(next[i + 1], c);
                next[i] = t.add(next[i], t.mul(c, neg_r));
            }
            coeffs = next;
        }
        Poly::from_indices(level, coeffs)
    }

    /// Formal derivative.
    pub fn poly_derivative(&self, f: &Poly) -> Poly {
        let t = self.table(f.level);
        let mut out = Vec::with_capacity(f.coeffs.len().saturating_sub(1));
        for (i, &c) in f.coeffs.iter().enumerate().skip(1) {
            // i * c means adding c to itself i times (scalar by the integer i
            // reduced mod p).
            let times = (i as u64) % t.p;
            let mut acc = 0u64;
            for _ in 0..times {
                acc = t.add(acc, c);
            }
            out.push(acc);
        }
        Poly::from_indices(f.level, out)
    }
}
