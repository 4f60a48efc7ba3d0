//! Combinatorial bounds on degree profiles: the minimal number of places
//! whose degrees reach a target weight, the number of errors the lifting
//! decoder is guaranteed to correct, and the designed minimum distance.
//!
//! All functions work on a [`DegreeProfile`] alone, so parameter searches
//! never have to construct fields or codes.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("profile must contain at least one place with positive degree")]
    EmptyProfile,
    #[error("target weight {0} out of range 1..={1}")]
    WeightOutOfRange(usize, usize),
    #[error("radius {0} needs weight {1} exceeding the total degree {2}")]
    RadiusTooLarge(usize, usize, usize),
    #[error("divisor degree {g} out of range for length {n}")]
    DivisorOutOfRange { g: usize, n: usize },
    #[error("cannot parse degree profile from {0:?}")]
    BadProfileText(String),
}

/// The multiset of place degrees of a code: `count(i)` places of degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    /// Builds a profile from `(degree, count)` pairs; zero counts are
    /// dropped, duplicate degrees accumulate.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(
        pairs: I,
    ) -> Result<DegreeProfile, BoundsError> {
        let mut counts = BTreeMap::new();
        for (d, c) in pairs {
            if d == 0 {
                return Err(BoundsError::EmptyProfile);
            }
            if c > 0 {
                *counts.entry(d).or_insert(0) += c;
            }
        }
        if counts.is_empty() {
            return Err(BoundsError::EmptyProfile);
        }
        Ok(DegreeProfile { counts })
    }

    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Result<DegreeProfile, BoundsError> {
        Self::from_counts(degrees.into_iter().map(|d| (d, 1)))
    }

    /// Number of places of degree `d`.
    pub fn count(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Block length `n`, the sum of all place degrees.
    pub fn total_degree(&self) -> usize {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }

    /// Number of places `s`.
    pub fn place_count(&self) -> usize {
        self.counts.values().sum()
    }

    /// Largest degree present.
    pub fn max_degree(&self) -> usize {
        *self.counts.keys().next_back().unwrap()
    }

    /// `(degree, count)` pairs in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    /// Parses `"1:7,2:28,3:168"`.
    pub fn parse(s: &str) -> Result<DegreeProfile, BoundsError> {
        let bad = || BoundsError::BadProfileText(s.to_string());
        let mut pairs = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (d, c) = part.split_once(':').ok_or_else(bad)?;
            let d: usize = d.trim().parse().map_err(|_| bad())?;
            let c: usize = c.trim().parse().map_err(|_| bad())?;
            pairs.push((d, c));
        }
        DegreeProfile::from_counts(pairs)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", d, c)?;
            first = false;
        }
        Ok(())
    }
}

/// Result of the cover minimization: `ell` places suffice to reach the
/// target weight, and `a` is the degree of the last place the greedy cover
/// takes (the break degree of the closed forms).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BreakDegree {
    pub a: usize,
    pub ell: usize,
}

/// Minimal number of places whose degrees sum to at least `w`, computed
/// greedily over the largest degrees first. The break degree `a` satisfies
/// `sum_{i>a} i*nu_i < w <= sum_{i>=a} i*nu_i`, and the result always equals
/// the ceiling closed form `ceil((w - sum_{i>a} (i-a)*nu_i) / a)`.
pub fn min_cover(profile: &DegreeProfile, w: usize) -> Result<BreakDegree, BoundsError> {
    let n = profile.total_degree();
    if w == 0 || w > n {
        return Err(BoundsError::WeightOutOfRange(w, n));
    }
    let mut remaining = w;
    let mut ell = 0usize;
    let mut a = 0usize;
    for (d, c) in profile.iter().collect::<Vec<_>>().into_iter().rev() {
        if remaining > d * c {
            remaining -= d * c;
            ell += c;
        } else {
            ell += remaining.div_ceil(d);
            a = d;
            remaining = 0;
            break;
        }
    }
    debug_assert_eq!(remaining, 0);

    // Closed form with the same break degree.
    let tail: usize = profile
        .iter()
        .filter(|&(d, _)| d > a)
        .map(|(d, c)| (d - a) * c)
        .sum();
    let closed = (w - tail).div_ceil(a);
    assert_eq!(
        ell, closed,
        "greedy cover and closed form disagree on {profile} at w = {w}"
    );
    Ok(BreakDegree { a, ell })
}

/// Number of errors of the code guaranteed correctable given a `t`-error
/// correcting algorithm for the lifted code: `min_cover(t + 1) - 1`.
pub fn correctable_errors(profile: &DegreeProfile, t: usize) -> Result<usize, BoundsError> {
    let n = profile.total_degree();
    if t + 1 > n {
        return Err(BoundsError::RadiusTooLarge(t, t + 1, n));
    }
    Ok(min_cover(profile, t + 1)?.ell - 1)
}

/// Lower bound on the minimum distance: the least number of places whose
/// degrees sum to at least `n - g`.
pub fn designed_distance(profile: &DegreeProfile, n: usize, g: usize) -> Result<usize, BoundsError> {
    if g >= n {
        return Err(BoundsError::DivisorOutOfRange { g, n });
    }
    Ok(min_cover(profile, n - g)?.ell)
}
