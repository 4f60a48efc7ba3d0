//! BCH baseline: cyclotomic cosets and the best achievable BCH bound per
//! check-symbol budget, for comparing shortened primitive BCH codes against
//! the lifted-decoder correction counts.
//!
//! Only bounds are computed here; no BCH encoder or decoder is needed for
//! the comparison.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BchError {
    #[error("gcd(q, length) must be 1, got q = {0}, length = {1}")]
    NotCoprime(u64, u64),
    #[error("shortened length {0} exceeds the parent length {1}")]
    ShortenedTooLong(u64, u64),
}

/// Partition of `Z/NZ` into q-cyclotomic cosets `{i, iq, iq^2, ...}`.
pub struct CosetTable {
    q: u64,
    length: u64,
    cosets: Vec<Vec<u64>>,
    coset_of: Vec<u32>,
}

impl CosetTable {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    /// Cosets ordered by minimal representative; each coset lists its orbit
    /// starting from that representative.
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn coset_containing(&self, i: u64) -> &[u64] {
        &self.cosets[self.coset_of[(i % self.length) as usize] as usize]
    }

    fn coset_id(&self, i: u64) -> usize {
        self.coset_of[(i % self.length) as usize] as usize
    }
}

pub fn cyclotomic_cosets(q: u64, length: u64) -> Result<CosetTable, BchError> {
    if length == 0 || gcd(q % length.max(1), length) != 1 {
        return Err(BchError::NotCoprime(q, length));
    }
    let mut coset_of = vec![u32::MAX; length as usize];
    let mut cosets = Vec::new();
    for start in 0..length {
        if coset_of[start as usize] != u32::MAX {
            continue;
        }
        let id = cosets.len() as u32;
        let mut orbit = Vec::new();
        let mut cur = start;
        loop {
            coset_of[cur as usize] = id;
            orbit.push(cur);
            cur = cur * q % length;
            if cur == start {
                break;
            }
        }
        cosets.push(orbit);
    }
    Ok(CosetTable {
        q,
        length,
        cosets,
        coset_of,
    })
}

/// One point of the BCH comparison curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchPoint {
    pub check_symbols: usize,
    pub designed_distance: usize,
    pub correctable: usize,
}

/// For each check-symbol budget `r` in `0..=shortened_length`, the largest
/// BCH bound achievable by a run of consecutive roots whose coset union has
/// size at most `r`. With `narrow_sense` the run must start at exponent 1;
/// otherwise the starting offset sweeps all of `Z/NZ`.
///
/// Shortening carries the check-symbol count and the designed distance over
/// unchanged, so the curve applies to the shortened code directly.
pub fn best_bch_curve(
    q: u64,
    length: u64,
    shortened_length: u64,
    narrow_sense: bool,
) -> Result<Vec<BchPoint>, BchError> {
    if shortened_length > length {
        return Err(BchError::ShortenedTooLong(shortened_length, length));
    }
    let table = cyclotomic_cosets(q, length)?;
    let budget = shortened_length as usize;
    let mut best_delta = vec![1usize; budget + 1];

    let starts: Box<dyn Iterator<Item = u64>> = if narrow_sense {
        Box::new(std::iter::once(1))
    } else {
        Box::new(0..length)
    };
    // Stamped membership set, reset per starting offset by version counter.
    let mut stamp = vec![0u32; table.cosets.len()];
    let mut version = 0u32;
    for b in starts {
        version += 1;
        let mut cost = 0usize;
        for run in 0..length {
            let id = table.coset_id(b + run);
            if stamp[id] != version {
                stamp[id] = version;
                cost += table.cosets[id].len();
                if cost > budget {
                    break;
                }
            }
            let delta = run as usize + 2; // run+1 consecutive roots
            if delta > best_delta[cost] {
                best_delta[cost] = delta;
            }
        }
    }
    // Monotone staircase: the best code with at most r checks.
    for r in 1..=budget {
        best_delta[r] = best_delta[r].max(best_delta[r - 1]);
    }
    Ok(best_delta
        .into_iter()
        .enumerate()
        .map(|(r, delta)| BchPoint {
            check_symbols: r,
            designed_distance: delta,
            correctable: (delta - 1) / 2,
        })
        .collect())
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_15_base_2() {
        let t = cyclotomic_cosets(2, 15).unwrap();
        assert_eq!(t.coset_containing(1), &[1, 2, 4, 8]);
        assert_eq!(t.coset_containing(0), &[0]);
        assert_eq!(t.coset_containing(5), &[5, 10]);
        let total: usize = t.cosets().iter().map(|c| c.len()).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn cosets_partition_4095_base_8() {
        let t = cyclotomic_cosets(8, 4095).unwrap();
        let total: usize = t.cosets().iter().map(|c| c.len()).sum();
        assert_eq!(total, 4095);
        for coset in t.cosets() {
            for &i in coset {
                assert_eq!(t.coset_containing(i)[0], coset[0]);
                assert!(coset.contains(&(i * 8 % 4095)));
            }
        }
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(cyclotomic_cosets(2, 14).is_err());
        assert!(cyclotomic_cosets(8, 4096).is_err());
    }

    #[test]
    fn hamming_point_on_length_15() {
        let curve = best_bch_curve(2, 15, 15, false).unwrap();
        // r = 0: no checks, distance 1, corrects nothing.
        assert_eq!(curve[0].designed_distance, 1);
        assert_eq!(curve[0].correctable, 0);
        // r = 4: the coset {1,2,4,8} covers the run alpha, alpha^2, so the
        // Hamming code [15,11,3] appears and nothing better fits 4 checks.
        assert_eq!(curve[4].designed_distance, 3);
        assert_eq!(curve[4].correctable, 1);
    }

    #[test]
    fn staircase_is_monotone_and_swept_beats_narrow() {
        let swept = best_bch_curve(8, 511, 300, false).unwrap();
        let narrow = best_bch_curve(8, 511, 300, true).unwrap();
        for r in 1..swept.len() {
            assert!(swept[r].designed_distance >= swept[r - 1].designed_distance);
        }
        for (s, n) in swept.iter().zip(&narrow) {
            assert!(s.designed_distance >= n.designed_distance);
            assert_eq!(s.correctable, (s.designed_distance - 1) / 2);
        }
    }

    #[test]
    fn shortened_length_validated() {
        assert!(best_bch_curve(2, 15, 16, false).is_err());
    }
}
