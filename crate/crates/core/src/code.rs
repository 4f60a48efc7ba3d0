//! Construction of the code itself: pick places, fix the residue-basis maps
//! `pi_i`, and evaluate.
//!
//! The divisor is restricted to `G = g * P_inf`, so the evaluation space is
//! the polynomials of degree at most `g` and the dimension is `k = g + 1`
//! whenever `g < n`.

use std::collections::HashSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::bounds::{self, DegreeProfile};
use crate::field::{FieldElem, FieldError, FieldTower, Poly};
use crate::linalg;
use crate::places::{Divisor, Place, PlaceError, PlaceKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("place error: {0}")]
    Place(#[from] PlaceError),
    #[error("a code needs at least one place")]
    NoPlaces,
    #[error("evaluation places must be finite")]
    InfiniteEvaluationPlace,
    #[error("duplicate place in the selection")]
    DuplicatePlace,
    #[error("divisor degree {g} must satisfy 0 <= g < n = {n}")]
    DivisorOutOfRange { g: usize, n: usize },
    #[error("tower has m = {tower_m} but the place degrees have lcm {lcm}")]
    TowerMismatch { tower_m: u32, lcm: u32 },
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("symbol at position {0} is not a base-field element")]
    NotBaseSymbol(usize),
    #[error("value does not lie in the residue field of place {0}")]
    OutsideResidueField(usize),
}

/// A message of `k` symbols over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Message(pub Vec<FieldElem>);

/// A codeword of `n` symbols over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword(pub Vec<FieldElem>);

impl Message {
    pub fn as_slice(&self) -> &[FieldElem] {
        &self.0
    }
}

impl Codeword {
    pub fn as_slice(&self) -> &[FieldElem] {
        &self.0
    }
}

/// Per-place residue basis data: the polynomial basis `1, r, .., r^{d-1}`
/// of the residue field image inside `F_{q^m}`, plus the left inverse that
/// extracts coordinates in that basis.
struct PiMap {
    basis_pows: Vec<u64>,
    left_inv: Vec<Vec<u64>>,
}

/// A generalized algebraic geometry code over `F_q(x)`.
pub struct GagCode {
    tower: FieldTower,
    places: Vec<Place>,
    divisor: Divisor,
    n: usize,
    k: usize,
    profile: DegreeProfile,
    pi: Vec<PiMap>,
    eval_points: Vec<FieldElem>,
    block_starts: Vec<usize>,
    /// Monic polynomial vanishing on every evaluation point, with the
    /// inverted derivative values at each point (the decoder's
    /// interpolation weights).
    vanishing: Poly,
    inv_derivative: Vec<u64>,
    generator: OnceLock<Vec<Vec<FieldElem>>>,
}

impl GagCode {
    /// Builds the code. Places are brought into canonical order, must be
    /// finite and pairwise distinct, and their degrees must have lcm equal
    /// to the tower's `m`.
    pub fn build(
        tower: FieldTower,
        mut places: Vec<Place>,
        divisor: Divisor,
    ) -> Result<GagCode, CodeError> {
        if places.is_empty() {
            return Err(CodeError::NoPlaces);
        }
        if places.iter().any(|p| p.kind() == PlaceKind::Infinite) {
            return Err(CodeError::InfiniteEvaluationPlace);
        }
        places.sort_by(|a, b| a.canonical_cmp(b));
        for pair in places.windows(2) {
            if pair[0].canonical_cmp(&pair[1]) == std::cmp::Ordering::Equal {
                return Err(CodeError::DuplicatePlace);
            }
        }
        let lcm = places
            .iter()
            .map(|p| p.degree() as u32)
            .fold(1u32, lcm_u32);
        if lcm != tower.m() {
            return Err(CodeError::TowerMismatch {
                tower_m: tower.m(),
                lcm,
            });
        }
        let n: usize = places.iter().map(|p| p.degree()).sum();
        let g = divisor.degree();
        if g >= n {
            return Err(CodeError::DivisorOutOfRange { g, n });
        }

        // Re-resolve roots for any place built against a different tower.
        for place in &mut places {
            if place.roots().is_empty() {
                let refreshed = Place::finite(&tower, place.min_poly().unwrap().clone())?;
                *place = refreshed;
            }
        }

        let mut eval_points = Vec::with_capacity(n);
        let mut block_starts = Vec::with_capacity(places.len() + 1);
        for place in &places {
            block_starts.push(eval_points.len());
            eval_points.extend_from_slice(place.roots());
        }
        block_starts.push(eval_points.len());
        let distinct: HashSet<u64> = eval_points.iter().map(|e| e.index()).collect();
        if distinct.len() != eval_points.len() {
            return Err(CodeError::DuplicatePlace);
        }

        let base = tower.table(1);
        let top = tower.top_table();
        let m = tower.m() as usize;
        let mut pi = Vec::with_capacity(places.len());
        for (i, place) in places.iter().enumerate() {
            let d = place.degree();
            let r = place.roots()[0].index();
            let mut basis_pows = Vec::with_capacity(d);
            let mut cur = 1u64;
            for _ in 0..d {
                basis_pows.push(cur);
                cur = top.mul(cur, r);
            }
            let cols: Vec<Vec<u64>> = basis_pows
                .iter()
                .map(|&pow| {
                    let mut digits = crate::field::arith::unpack(tower.q(), pow, m);
                    digits.resize(m, 0);
                    digits
                })
                .collect();
            let left_inv = linalg::left_inverse(base, &cols)
                .unwrap_or_else(|| panic!("residue basis of place {} is dependent", i));
            pi.push(PiMap {
                basis_pows,
                left_inv,
            });
        }

        let profile = DegreeProfile::from_degrees(places.iter().map(|p| p.degree()))
            .expect("non-empty place list");
        let vanishing = tower.poly_from_roots(tower.m(), &eval_points);
        let derivative = tower.poly_derivative(&vanishing);
        let inv_derivative = eval_points
            .iter()
            .map(|&x| {
                let v = tower.poly_eval(&derivative, x);
                top.inv(v.index())
            })
            .collect();

        Ok(GagCode {
            tower,
            places,
            divisor,
            n,
            k: g + 1,
            profile,
            pi,
            eval_points,
            block_starts,
            vanishing,
            inv_derivative,
            generator: OnceLock::new(),
        })
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn divisor(&self) -> Divisor {
        self.divisor
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `g + 1`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Divisor degree.
    pub fn g(&self) -> usize {
        self.divisor.degree()
    }

    pub fn m(&self) -> u32 {
        self.tower.m()
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    /// All extensions of all places, flattened in place order; the lifted
    /// code evaluates polynomials at exactly these points.
    pub fn eval_points(&self) -> &[FieldElem] {
        &self.eval_points
    }

    /// Coordinate range of the `i`-th place's block.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        self.block_starts[i]..self.block_starts[i + 1]
    }

    /// Half-distance decoding radius of the lifted code, `(n - k) / 2`.
    pub fn decoding_radius(&self) -> usize {
        (self.n - self.k) / 2
    }

    /// Designed minimum distance of this code.
    pub fn designed_distance(&self) -> usize {
        bounds::designed_distance(&self.profile, self.n, self.g()).expect("g < n by construction")
    }

    /// Errors guaranteed correctable by [`crate::decoder::decode`] at the
    /// default radius.
    pub fn correctable_errors(&self) -> usize {
        bounds::correctable_errors(&self.profile, self.decoding_radius())
            .expect("radius below n by construction")
    }

    pub(crate) fn vanishing_poly(&self) -> &Poly {
        &self.vanishing
    }

    pub(crate) fn interpolation_weights(&self) -> &[u64] {
        &self.inv_derivative
    }

    fn check_message(&self, msg: &[FieldElem]) -> Result<(), CodeError> {
        if msg.len() != self.k {
            return Err(CodeError::LengthMismatch {
                expected: self.k,
                got: msg.len(),
            });
        }
        for (i, sym) in msg.iter().enumerate() {
            if sym.level() != 1 {
                return Err(CodeError::NotBaseSymbol(i));
            }
        }
        Ok(())
    }

    /// Encodes a message: interpret the symbols as the coefficients of a
    /// polynomial `f` of degree at most `g` (low degree first) and emit
    /// `pi_i(f(first extension of P_i))` per place.
    pub fn encode(&self, msg: &Message) -> Result<Codeword, CodeError> {
        self.check_message(&msg.0)?;
        let f = Poly::new(&msg.0).expect("validated base-level coefficients");
        let mut out = Vec::with_capacity(self.n);
        for (i, place) in self.places.iter().enumerate() {
            let v = self.tower.poly_eval(&f, place.roots()[0]);
            let block = self.pi_coords(i, v.index());
            out.extend(block.into_iter().map(|c| {
                self.tower.elem(1, c).expect("coordinate in range")
            }));
        }
        Ok(Codeword(out))
    }

    /// Message whose polynomial is the monomial `x^j`.
    fn monomial_message(&self, j: usize) -> Message {
        let mut v = vec![self.tower.zero(1); self.k];
        v[j] = self.tower.one(1);
        Message(v)
    }

    /// Rows are the encodings of the monomial basis `1, x, .., x^g`.
    pub fn generator_matrix(&self) -> &[Vec<FieldElem>] {
        self.generator.get_or_init(|| {
            (0..self.k)
                .map(|j| self.encode(&self.monomial_message(j)).unwrap().0)
                .collect()
        })
    }

    fn pi_coords(&self, i: usize, v_index: u64) -> Vec<u64> {
        let base = self.tower.table(1);
        let m = self.tower.m() as usize;
        let mut digits = crate::field::arith::unpack(self.tower.q(), v_index, m);
        digits.resize(m, 0);
        self.pi[i]
            .left_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&digits)
                    .fold(0u64, |acc, (&a, &b)| base.add(acc, base.mul(a, b)))
            })
            .collect()
    }

    /// `pi_i`: coordinates of a residue-field value in the polynomial basis
    /// of place `i`. Errors if the value lies outside the residue field.
    pub fn pi_apply(&self, i: usize, v: FieldElem) -> Result<Vec<FieldElem>, CodeError> {
        assert_eq!(v.level(), self.tower.m(), "pi_apply expects a top-level value");
        let coords = self.pi_coords(i, v.index());
        // The left inverse is only a one-sided inverse; confirm membership.
        let back = self.pi_invert_indices(i, &coords);
        if back != v.index() {
            return Err(CodeError::OutsideResidueField(i));
        }
        Ok(coords
            .into_iter()
            .map(|c| self.tower.elem(1, c).expect("coordinate in range"))
            .collect())
    }

    fn pi_invert_indices(&self, i: usize, block: &[u64]) -> u64 {
        let top = self.tower.top_table();
        block
            .iter()
            .zip(&self.pi[i].basis_pows)
            .fold(0u64, |acc, (&c, &pow)| top.add(acc, top.mul(c, pow)))
    }

    /// Inverse of `pi_i`: rebuild the residue-field value from a block.
    pub fn pi_invert(&self, i: usize, block: &[FieldElem]) -> Result<FieldElem, CodeError> {
        let d = self.places[i].degree();
        if block.len() != d {
            return Err(CodeError::LengthMismatch {
                expected: d,
                got: block.len(),
            });
        }
        for (j, sym) in block.iter().enumerate() {
            if sym.level() != 1 {
                return Err(CodeError::NotBaseSymbol(j));
            }
        }
        let idx: Vec<u64> = block.iter().map(|b| b.index()).collect();
        Ok(self
            .tower
            .elem(self.tower.m(), self.pi_invert_indices(i, &idx))
            .expect("value in range"))
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
