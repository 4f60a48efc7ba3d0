//! The lifting decoder.
//!
//! A received word in `F_q^n` is pulled through the inverse basis maps and
//! expanded along Frobenius orbits into a word of `F_{q^m}^n`. That lifted
//! word is decoded in the ordinary evaluation code (an MDS code, handled by
//! a Gao-style key-equation decoder), the decoded polynomial is checked for
//! Frobenius consistency (all coefficients in the embedded `F_q`), and the
//! message is projected back.

use thiserror::Error;

use crate::code::{Codeword, GagCode, Message};
use crate::field::arith::{pv_deg, pv_divrem, pv_mul, pv_sub, pv_trim};
use crate::field::{FieldElem, Poly};

/// A length-`n` vector over `F_{q^m}`, blocked per place. Words in the
/// image of the lift satisfy `symbol[j+1] = frobenius(symbol[j])` inside
/// each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedWord {
    symbols: Vec<FieldElem>,
}

impl LiftedWord {
    /// Wraps raw top-level symbols as a received word for [`rs_decode`].
    /// Only words produced by [`lift`] carry the per-block orbit property;
    /// the lifted-code decoder accepts any vector.
    pub fn from_symbols(symbols: Vec<FieldElem>) -> LiftedWord {
        LiftedWord { symbols }
    }

    pub fn symbols(&self) -> &[FieldElem] {
        &self.symbols
    }

    /// Hamming weight over `F_{q^m}`.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum DecodeFailure {
    /// No codeword of the lifted code within the decoding radius.
    #[error("too many errors")]
    TooManyErrors,
    /// The lifted decoder found a polynomial outside the evaluation space.
    #[error("degree overflow")]
    DegreeOverflow,
    /// The decoded polynomial has coefficients outside the embedded `F_q`,
    /// so the error pattern exceeded the guaranteed radius.
    #[error("frobenius-inconsistent")]
    FrobeniusInconsistent,
}

/// Outcome of a full decode. On success, re-encoding the message gives the
/// returned codeword, and `error_count` is its distance from the received
/// word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Success {
        message: Message,
        codeword: Codeword,
        error_count: usize,
    },
    Failure(DecodeFailure),
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, DecodeOutcome::Success { .. })
    }

    pub fn failure(&self) -> Option<DecodeFailure> {
        match self {
            DecodeOutcome::Failure(f) => Some(*f),
            _ => None,
        }
    }
}

/// Lifts a word of `F_q^n`: per block, rebuild the residue value through
/// the inverse basis map and expand it along the Frobenius orbit.
pub fn lift(code: &GagCode, word: &[FieldElem]) -> LiftedWord {
    assert_eq!(word.len(), code.n(), "word length must equal n");
    let tower = code.tower();
    let mut symbols = Vec::with_capacity(code.n());
    for (i, place) in code.places().iter().enumerate() {
        let block = &word[code.block_range(i)];
        let v = code.pi_invert(i, block).expect("block shape matches place");
        let mut cur = v;
        for _ in 0..place.degree() {
            symbols.push(cur);
            cur = tower.frobenius(cur);
        }
    }
    LiftedWord { symbols }
}

/// Decodes the lifted word in the ordinary evaluation code: finds the
/// unique polynomial of degree at most `g` agreeing with the word on all
/// but at most `decoding_radius()` points, if one exists.
pub fn rs_decode(code: &GagCode, lifted: &LiftedWord) -> Result<Poly, DecodeFailure> {
    rs_decode_with_radius(code, lifted, code.decoding_radius())
}

/// As [`rs_decode`] with an explicit radius at most `decoding_radius()`;
/// smaller radii model weaker decoders for the lifted code.
pub fn rs_decode_with_radius(
    code: &GagCode,
    lifted: &LiftedWord,
    radius: usize,
) -> Result<Poly, DecodeFailure> {
    assert_eq!(lifted.symbols.len(), code.n(), "lifted word length must equal n");
    assert!(
        radius <= code.decoding_radius(),
        "radius beyond half the lifted minimum distance"
    );
    debug_assert!(lifted.symbols.iter().all(|s| s.level() == code.m()));
    let tower = code.tower();
    let top = tower.top_table();
    let m = tower.m();
    let n = code.n();
    let k = code.k();

    let values: Vec<u64> = lifted.symbols.iter().map(|s| s.index()).collect();
    if values.iter().all(|&v| v == 0) {
        return Ok(Poly::zero(m));
    }

    // Interpolate the received word: sum_i v_i * w_i * (g0 / (X - x_i)),
    // with w_i the precomputed inverse derivative values.
    let g0 = code.vanishing_poly().indices();
    let weights = code.interpolation_weights();
    let mut g1 = vec![0u64; n];
    let mut quot = vec![0u64; n];
    for (i, (&v, pt)) in values.iter().zip(code.eval_points()).enumerate() {
        if v == 0 {
            continue;
        }
        let x = pt.index();
        // Synthetic division of g0 by (X - x): g0 is monic of degree n.
        let mut carry = 1u64; // leading coefficient
        quot[n - 1] = carry;
        for j in (0..n - 1).rev() {
            carry = top.add(g0[j + 1], top.mul(carry, x));
            quot[j] = carry;
        }
        let scale = top.mul(v, weights[i]);
        for (acc, &qc) in g1.iter_mut().zip(quot.iter()) {
            *acc = top.add(*acc, top.mul(scale, qc));
        }
    }
    pv_trim(&mut g1);

    // Partial extended Euclid on (g0, g1), keeping the Bezout coefficient
    // of g1, until the remainder degree drops below (n + k) / 2.
    let mut r0 = g0.to_vec();
    let mut r1 = g1;
    let mut v0: Vec<u64> = Vec::new();
    let mut v1: Vec<u64> = vec![1];
    while 2 * pv_deg(&r1) >= (n + k) as i64 {
        if r1.is_empty() {
            return Err(DecodeFailure::TooManyErrors);
        }
        let (q, r) = pv_divrem(top, &r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
        let qv = pv_mul(top, &q, &v1);
        let next_v = pv_sub(top, &v0, &qv);
        v0 = std::mem::replace(&mut v1, next_v);
    }
    if v1.is_empty() {
        return Err(DecodeFailure::TooManyErrors);
    }
    let (f, rem) = pv_divrem(top, &r1, &v1);
    if !rem.is_empty() {
        return Err(DecodeFailure::TooManyErrors);
    }
    if pv_deg(&f) >= k as i64 {
        return Err(DecodeFailure::DegreeOverflow);
    }
    let f = Poly::from_indices(m, f);

    // Bounded-distance check against the requested radius.
    let mut mismatches = 0usize;
    for (&v, pt) in values.iter().zip(code.eval_points()) {
        if tower.poly_eval(&f, *pt).index() != v {
            mismatches += 1;
            if mismatches > radius {
                return Err(DecodeFailure::TooManyErrors);
            }
        }
    }
    Ok(f)
}

/// Full pipeline: lift, decode the lifted word, verify that the decoded
/// polynomial has all coefficients in the embedded `F_q`, and project back.
pub fn decode(code: &GagCode, received: &[FieldElem]) -> DecodeOutcome {
    decode_with_radius(code, received, code.decoding_radius())
}

pub fn decode_with_radius(code: &GagCode, received: &[FieldElem], radius: usize) -> DecodeOutcome {
    let lifted = lift(code, received);
    let f = match rs_decode_with_radius(code, &lifted, radius) {
        Ok(f) => f,
        Err(e) => return DecodeOutcome::Failure(e),
    };
    let tower = code.tower();
    // Frobenius consistency: every coefficient fixed by sigma, equivalently
    // inside the embedded copy of F_q (index below q).
    let mut msg = Vec::with_capacity(code.k());
    for c in f.coeffs() {
        match tower.to_base(c) {
            Some(b) => {
                debug_assert_eq!(tower.frobenius(c), c);
                msg.push(b);
            }
            None => {
                debug_assert_ne!(tower.frobenius(c), c);
                return DecodeOutcome::Failure(DecodeFailure::FrobeniusInconsistent);
            }
        }
    }
    msg.resize(code.k(), tower.zero(1));
    let message = Message(msg);
    let codeword = code.encode(&message).expect("message has k base symbols");
    let error_count = received
        .iter()
        .zip(codeword.as_slice())
        .filter(|(a, b)| a != b)
        .count();
    DecodeOutcome::Success {
        message,
        codeword,
        error_count,
    }
}
