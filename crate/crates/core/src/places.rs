//! Places of the rational function field `F_q(x)`: monic irreducible
//! polynomials plus the place at infinity. Each finite place of degree `d`
//! dividing `m` carries the `d` extensions it splits into over `F_{q^m}(x)`,
//! ordered along the Frobenius orbit.

use crate::field::arith::pv_is_irreducible;
use crate::field::{FieldElem, FieldError, FieldTower, Poly};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaceError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("root index {0} out of range for a degree-{1} place")]
    RootIndexOutOfRange(usize, usize),
    #[error("the infinite place has no evaluation roots")]
    InfinitePlace,
    #[error("roots are unavailable: degree {0} does not divide m = {1}")]
    RootsUnavailable(usize, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaceKind {
    Finite,
    Infinite,
}

/// A place of `F_q(x)`. Finite places are monic irreducibles over `F_q`;
/// `roots` lists their extensions in the constant field extension, with
/// `roots[j+1] = frobenius(roots[j])` and the orbit starting at the
/// lexicographically smallest root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Place {
    kind: PlaceKind,
    degree: usize,
    min_poly: Poly,
    roots: Vec<FieldElem>,
}

impl Place {
    /// Builds a finite place, validating that `min_poly` is monic
    /// irreducible. Roots are computed when the degree divides `m`.
    pub fn finite(tower: &FieldTower, min_poly: Poly) -> Result<Place, PlaceError> {
        let degree = min_poly.degree().filter(|&d| d >= 1).ok_or(FieldError::NotMonic)?;
        if !min_poly.is_monic() {
            return Err(FieldError::NotMonic.into());
        }
        let roots = if tower.m() % degree as u32 == 0 {
            tower.find_roots(&min_poly)?
        } else {
            if !pv_is_irreducible(tower.table(1), min_poly.indices()) {
                return Err(FieldError::Reducible.into());
            }
            Vec::new()
        };
        Ok(Place {
            kind: PlaceKind::Finite,
            degree,
            min_poly,
            roots,
        })
    }

    /// Returns this place with its extension roots resolved against
    /// `tower`; enumeration leaves roots unresolved so that counting places
    /// never pays for root finding.
    pub fn with_roots(&self, tower: &FieldTower) -> Result<Place, PlaceError> {
        if self.kind == PlaceKind::Infinite || !self.roots.is_empty() {
            return Ok(self.clone());
        }
        Place::finite(tower, self.min_poly.clone())
    }

    /// The place at infinity. It only ever appears in the divisor, never
    /// among the evaluation places.
    pub fn infinite() -> Place {
        Place {
            kind: PlaceKind::Infinite,
            degree: 1,
            min_poly: Poly::zero(1),
            roots: Vec::new(),
        }
    }

    pub fn kind(&self) -> PlaceKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> Option<&Poly> {
        match self.kind {
            PlaceKind::Finite => Some(&self.min_poly),
            PlaceKind::Infinite => None,
        }
    }

    /// Frobenius-ordered extensions of this place; empty when the degree
    /// does not divide `m`.
    pub fn roots(&self) -> &[FieldElem] {
        &self.roots
    }

    /// Evaluates `f` at the `j`-th extension of this place (0-based). For a
    /// polynomial over `F_q` the results walk the Frobenius orbit:
    /// `evaluate(f, j+1) = frobenius(evaluate(f, j))`.
    pub fn evaluate(
        &self,
        tower: &FieldTower,
        f: &Poly,
        j: usize,
    ) -> Result<FieldElem, PlaceError> {
        if self.kind == PlaceKind::Infinite {
            return Err(PlaceError::InfinitePlace);
        }
        if self.roots.is_empty() {
            return Err(PlaceError::RootsUnavailable(self.degree, tower.m()));
        }
        if j >= self.degree {
            return Err(PlaceError::RootIndexOutOfRange(j, self.degree));
        }
        Ok(tower.poly_eval(f, self.roots[j]))
    }

    /// Canonical ordering key: degree first, then the coefficient word of
    /// the minimal polynomial, constant term first.
    pub fn canonical_cmp(&self, other: &Place) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self.kind, other.kind) {
            (PlaceKind::Infinite, PlaceKind::Infinite) => return Ordering::Equal,
            (PlaceKind::Infinite, _) => return Ordering::Greater,
            (_, PlaceKind::Infinite) => return Ordering::Less,
            _ => {}
        }
        self.degree
            .cmp(&other.degree)
            .then_with(|| word_cmp(self.min_poly.indices(), other.min_poly.indices()))
    }
}

fn word_cmp(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    // Equal degrees in practice; compare coefficient by coefficient from the
    // constant term up.
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => {}
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// The one-point divisor `G = g * P_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Divisor {
    /// Coefficient of the infinite place, i.e. `deg G`.
    pub coefficient_at_infinity: usize,
}

impl Divisor {
    pub fn at_infinity(g: usize) -> Divisor {
        Divisor {
            coefficient_at_infinity: g,
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficient_at_infinity
    }
}

/// All finite places of degree `d`, i.e. all monic irreducibles of degree
/// `d` over `F_q`, in canonical (lexicographic) order. Roots are left
/// unresolved; call [`Place::with_roots`] (or let the code builder do it)
/// for the places actually used.
pub fn enumerate_places(tower: &FieldTower, d: usize) -> Vec<Place> {
    enumerate_limited(tower, d, usize::MAX)
}

/// The first `count` places of degree `d` in canonical order, stopping the
/// scan as soon as enough are found.
pub fn first_places(tower: &FieldTower, d: usize, count: usize) -> Vec<Place> {
    enumerate_limited(tower, d, count)
}

fn enumerate_limited(tower: &FieldTower, d: usize, limit: usize) -> Vec<Place> {
    assert!(d >= 1, "place degree must be positive");
    let base = tower.table(1);
    let q = tower.q();
    let total = q.checked_pow(d as u32).expect("degree too large to enumerate");
    let mut out = Vec::new();
    let mut cand = vec![0u64; d + 1];
    cand[d] = 1;
    for word in 0..total {
        if out.len() >= limit {
            break;
        }
        let mut w = word;
        for j in (0..d).rev() {
            cand[j] = w % q;
            w /= q;
        }
        if d >= 2 && cand[0] == 0 {
            continue;
        }
        if !pv_is_irreducible(base, &cand) {
            continue;
        }
        let min_poly = Poly::new(
            &cand
                .iter()
                .map(|&c| tower.elem(1, c).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        out.push(Place {
            kind: PlaceKind::Finite,
            degree: d,
            min_poly,
            roots: Vec::new(),
        });
    }
    out
}

/// Number of monic irreducibles of degree `d` over `F_q`, by the Moebius
/// necklace formula.
pub fn irreducible_count(q: u64, d: u32) -> u64 {
    let mut sum: i128 = 0;
    for c in 1..=d {
        if d % c != 0 {
            continue;
        }
        sum += i128::from(moebius(c)) * (q as i128).pow(d / c);
    }
    (sum / d as i128) as u64
}

fn moebius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_quadratic_over_f2() {
        let tw = FieldTower::new(2, 1, 2).unwrap();
        let ps = enumerate_places(&tw, 2);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].min_poly().unwrap().coeffs().len(), 3);
        assert_eq!(
            ps[0].min_poly().unwrap().indices(),
            &[1, 1, 1],
            "x^2 + x + 1 is the only quadratic irreducible over F_2"
        );
    }

    #[test]
    fn f8_place_counts_and_moebius() {
        let tw = FieldTower::new(2, 3, 6).unwrap();
        assert_eq!(enumerate_places(&tw, 1).len(), 8);
        assert_eq!(enumerate_places(&tw, 2).len(), 28);
        assert_eq!(enumerate_places(&tw, 3).len(), 168);
        assert_eq!(irreducible_count(8, 1), 8);
        assert_eq!(irreducible_count(8, 2), 28);
        assert_eq!(irreducible_count(8, 3), 168);
        assert_eq!(irreducible_count(8, 4), 1008);
    }

    #[test]
    fn zeta_count_cross_check() {
        // Sum over d' | d of d' * N(d') = q^d: the places of F_q(x) of each
        // degree account for all points over F_{q^d}, plus one at infinity
        // in degree 1.
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let q = p.pow(e);
            let tw = FieldTower::new(p, e, 2).unwrap();
            for d in 1..=5u32 {
                let n = enumerate_places(&tw, d as usize).len() as u64;
                assert_eq!(n, irreducible_count(q, d));
            }
            for d in 1..=5u32 {
                let total: u64 = (1..=d)
                    .filter(|c| d % c == 0)
                    .map(|c| c as u64 * irreducible_count(q, c))
                    .sum();
                assert_eq!(total, q.pow(d));
            }
        }
    }

    #[test]
    fn roots_form_frobenius_orbit_starting_at_min() {
        let tw = FieldTower::new(2, 3, 6).unwrap();
        for place in enumerate_places(&tw, 3) {
            let place = place.with_roots(&tw).unwrap();
            let roots = place.roots();
            assert_eq!(roots.len(), 3);
            let min = roots.iter().min().unwrap();
            assert_eq!(roots[0], *min);
            for j in 0..3 {
                assert_eq!(roots[(j + 1) % 3], tw.frobenius(roots[j]));
            }
        }
    }

    #[test]
    fn evaluate_at_basics() {
        let tw = FieldTower::new(2, 1, 2).unwrap();
        let place = enumerate_places(&tw, 2).pop().unwrap().with_roots(&tw).unwrap();
        // Constants evaluate to their embedding at every extension.
        let c = Poly::from_indices(1, vec![1]);
        for j in 0..2 {
            assert_eq!(place.evaluate(&tw, &c, j).unwrap(), tw.one(2));
        }
        // The minimal polynomial vanishes at every extension.
        let mp = place.min_poly().unwrap().clone();
        for j in 0..2 {
            assert!(place.evaluate(&tw, &mp, j).unwrap().is_zero());
        }
        // f = x at the second extension is the Frobenius of the first root.
        let f = Poly::from_indices(1, vec![0, 1]);
        let r0 = place.roots()[0];
        assert_eq!(place.evaluate(&tw, &f, 1).unwrap(), tw.frobenius(r0));
        assert_eq!(place.evaluate(&tw, &f, 1).unwrap(), tw.mul(r0, r0));
        // Index out of range.
        assert!(matches!(
            place.evaluate(&tw, &f, 2),
            Err(PlaceError::RootIndexOutOfRange(2, 2))
        ));
        // Infinite place rejects evaluation.
        assert!(matches!(
            Place::infinite().evaluate(&tw, &f, 0),
            Err(PlaceError::InfinitePlace)
        ));
    }

    #[test]
    fn evaluation_commutes_with_frobenius() {
        let tw = FieldTower::new(3, 1, 2).unwrap();
        let places: Vec<Place> = enumerate_places(&tw, 2)
            .into_iter()
            .map(|p| p.with_roots(&tw).unwrap())
            .collect();
        let mut state = 1u64;
        let mut next = |bound: u64| {
            state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            (state >> 17) % bound
        };
        for trial in 0..100u64 {
            let place = &places[(trial % places.len() as u64) as usize];
            let coeffs: Vec<FieldElem> = (0..4)
                .map(|_| tw.elem(1, next(3)).unwrap())
                .collect();
            let f = Poly::new(&coeffs).unwrap();
            let d = place.degree();
            for j in 0..d {
                let here = place.evaluate(&tw, &f, j).unwrap();
                let next_eval = place.evaluate(&tw, &f, (j + 1) % d).unwrap();
                assert_eq!(next_eval, tw.frobenius(here));
            }
        }
    }

    #[test]
    fn enumeration_without_dividing_degree_has_no_roots() {
        let tw = FieldTower::new(2, 1, 2).unwrap();
        let ps = enumerate_places(&tw, 3);
        assert_eq!(ps.len(), 2);
        // Degree 3 does not divide m = 2, so roots stay unavailable even
        // after resolving, and evaluation reports that.
        let place = ps[0].with_roots(&tw).unwrap();
        assert!(place.roots().is_empty());
        let f = Poly::from_indices(1, vec![0, 1]);
        assert!(matches!(
            place.evaluate(&tw, &f, 0),
            Err(PlaceError::RootsUnavailable(3, 2))
        ));
    }
}
