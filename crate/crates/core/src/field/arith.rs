//! Index-form arithmetic used while constructing field tables and for
//! polynomial work that predates the tables (irreducibility tests, generator
//! search).
//!
//! Field elements are packed into integer indices: an element with
//! coefficient vector `(c_0, .., c_{d-1})` over a base of size `s` has index
//! `sum c_i * s^i`. Since the base is itself packed the same way down to
//! `F_p`, every index is simultaneously its base-`p` digit vector, which is
//! what makes coefficient-wise addition a pure digit operation.

/// Arithmetic on field elements packed as integer indices.
pub(crate) trait IndexField {
    fn size(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn neg(&self, a: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn inv(&self, a: u64) -> u64;

    fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }
}

/// The prime field `F_p`.
pub(crate) struct PrimeArith {
    pub p: u64,
}

impl IndexField for PrimeArith {
    fn size(&self) -> u64 {
        self.p
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        // Field sizes are capped well below 2^32, so this cannot overflow.
        a * b % self.p
    }

    fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        // a^(p-2) by square and multiply.
        let mut acc = 1u64;
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

/// Coefficient-wise addition of two packed vectors, digit by digit base `p`.
pub(crate) fn digit_add(p: u64, a: u64, b: u64) -> u64 {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0u64;
    let mut scale = 1u64;
    let (mut a, mut b) = (a, b);
    while a > 0 || b > 0 {
        out += (a % p + b % p) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

/// Coefficient-wise negation of a packed vector.
pub(crate) fn digit_neg(p: u64, a: u64) -> u64 {
    if p == 2 {
        return a;
    }
    let mut out = 0u64;
    let mut scale = 1u64;
    let mut a = a;
    while a > 0 {
        let d = a % p;
        if d != 0 {
            out += (p - d) * scale;
        }
        a /= p;
        scale *= p;
    }
    out
}

/// Unpack an index into `d` coefficients over a base of size `s`, low first.
pub(crate) fn unpack(s: u64, idx: u64, d: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(d);
    let mut idx = idx;
    for _ in 0..d {
        out.push(idx % s);
        idx /= s;
    }
    out
}

/// Pack coefficients over a base of size `s` back into an index.
pub(crate) fn pack(s: u64, coeffs: &[u64]) -> u64 {
    let mut out = 0u64;
    for &c in coeffs.iter().rev() {
        out = out * s + c;
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomials as little-endian index vectors (no trailing zeros).
// ---------------------------------------------------------------------------

pub(crate) fn pv_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree with the convention deg 0 = -1.
pub(crate) fn pv_deg(v: &[u64]) -> i64 {
    v.len() as i64 - 1
}

pub(crate) fn pv_add<F: IndexField>(f: &F, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = f.add(x, y);
    }
    pv_trim(&mut out);
    out
}

pub(crate) fn pv_sub<F: IndexField>(f: &F, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = f.sub(x, y);
    }
    pv_trim(&mut out);
    out
}

pub(crate) fn pv_mul<F: IndexField>(f: &F, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    pv_trim(&mut out);
    out
}

pub(crate) fn pv_scale<F: IndexField>(f: &F, a: &[u64], c: u64) -> Vec<u64> {
    if c == 0 {
        return Vec::new();
    }
    let mut out: Vec<u64> = a.iter().map(|&x| f.mul(x, c)).collect();
    pv_trim(&mut out);
    out
}

/// Long division; the divisor must be nonzero.
pub(crate) fn pv_divrem<F: IndexField>(f: &F, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - b.len() + 1];
    let lead_inv = f.inv(*b.last().unwrap());
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coeff = f.mul(*rem.last().unwrap(), lead_inv);
        quot[shift] = coeff;
        for (i, &bc) in b.iter().enumerate() {
            if bc != 0 {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(coeff, bc));
            }
        }
        // The leading term cancels exactly; anything below may too.
        rem.pop();
        pv_trim(&mut rem);
    }
    pv_trim(&mut quot);
    (quot, rem)
}

pub(crate) fn pv_rem<F: IndexField>(f: &F, a: &[u64], b: &[u64]) -> Vec<u64> {
    pv_divrem(f, a, b).1
}

/// Monic gcd.
pub(crate) fn pv_gcd<F: IndexField>(f: &F, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = pv_rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        if lead != 1 {
            let inv = f.inv(lead);
            x = pv_scale(f, &x, inv);
        }
    }
    x
}

pub(crate) fn pv_mulmod<F: IndexField>(f: &F, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    pv_rem(f, &pv_mul(f, a, b), m)
}

/// `base^exp mod m` by square and multiply.
pub(crate) fn pv_powmod<F: IndexField>(f: &F, base: &[u64], exp: u128, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = pv_rem(f, base, m);
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = pv_mulmod(f, &acc, &base, m);
        }
        base = pv_mulmod(f, &base, &base, m);
        exp >>= 1;
    }
    acc
}

/// Rabin irreducibility test for a monic polynomial over `f`.
pub(crate) fn pv_is_irreducible<F: IndexField>(f: &F, poly: &[u64]) -> bool {
    let d = pv_deg(poly);
    if d <= 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    assert_eq!(*poly.last().unwrap(), 1, "irreducibility test expects a monic input");
    if poly[0] == 0 {
        return false; // divisible by x
    }
    let d = d as u32;
    let s = f.size() as u128;
    let x = vec![0u64, 1];
    // x^(s^d) must reduce to x mod poly.
    let xq = pv_powmod(f, &x, s.pow(d), poly);
    if xq != x {
        return false;
    }
    for r in distinct_prime_factors(d as u64) {
        let e = s.pow((d as u64 / r) as u32);
        let xe = pv_powmod(f, &x, e, poly);
        let diff = pv_sub(f, &xe, &x);
        let g = pv_gcd(f, poly, &diff);
        if pv_deg(&g) != 0 {
            return false;
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree `d`:
/// coefficient words `(c_0, .., c_{d-1})` compared position by position,
/// constant term first, elements ordered by their integer index.
pub(crate) fn smallest_irreducible<F: IndexField>(f: &F, d: usize) -> Vec<u64> {
    let s = f.size();
    let total = s.checked_pow(d as u32).expect("degree too large for search");
    let mut cand = vec![0u64; d + 1];
    cand[d] = 1;
    for word in 0..total {
        // c_0 is the most significant digit so that ascending `word` walks
        // the candidates in lexicographic order.
        let mut w = word;
        for j in (0..d).rev() {
            cand[j] = w % s;
            w /= s;
        }
        if d >= 2 && cand[0] == 0 {
            continue; // divisible by x
        }
        if pv_is_irreducible(f, &cand) {
            return cand;
        }
    }
    unreachable!("an irreducible of every degree exists over a finite field");
}

/// Exponentiation of a packed element of `base[y]/(modulus)`.
pub(crate) fn elem_powmod<F: IndexField>(f: &F, idx: u64, exp: u128, modulus: &[u64]) -> u64 {
    let d = pv_deg(modulus) as usize;
    let mut coeffs = unpack(f.size(), idx, d);
    pv_trim(&mut coeffs);
    let out = pv_powmod(f, &coeffs, exp, modulus);
    pack(f.size(), &out)
}

/// Smallest generator (by index) of the multiplicative group of
/// `base[y]/(modulus)`.
pub(crate) fn find_generator<F: IndexField>(f: &F, modulus: &[u64], ext_size: u64) -> u64 {
    if ext_size == 2 {
        return 1;
    }
    let order = ext_size - 1;
    let primes = distinct_prime_factors(order);
    'cand: for idx in 2..ext_size {
        for &r in &primes {
            if elem_powmod(f, idx, (order / r) as u128, modulus) == 1 {
                continue 'cand;
            }
        }
        return idx;
    }
    unreachable!("the multiplicative group of a finite field is cyclic");
}

pub(crate) fn distinct_prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = PrimeArith { p: 17 };
        assert_eq!(f.add(9, 12), 4);
        assert_eq!(f.neg(5), 12);
        assert_eq!(f.mul(9, 2), 1);
        assert_eq!(f.inv(9), 2);
    }

    #[test]
    fn digit_ops_odd_char() {
        // (1, 2) + (2, 2) over F_3 packed base 3: digit-wise sums (0, 1).
        assert_eq!(digit_add(3, 7, 8), 3);
        assert_eq!(digit_neg(3, 7), 5); // (1, 2) negates to (2, 1)
    }

    #[test]
    fn divrem_reconstructs() {
        let f = PrimeArith { p: 5 };
        let a = vec![1, 4, 0, 2, 3];
        let b = vec![2, 0, 1];
        let (q, r) = pv_divrem(&f, &a, &b);
        let back = pv_add(&f, &pv_mul(&f, &q, &b), &r);
        assert_eq!(back, a);
        assert!(pv_deg(&r) < pv_deg(&b));
    }

    #[test]
    fn irreducibles_over_f2() {
        let f = PrimeArith { p: 2 };
        assert!(pv_is_irreducible(&f, &[1, 1, 1])); // x^2+x+1
        assert!(!pv_is_irreducible(&f, &[1, 0, 1])); // (x+1)^2
        assert!(pv_is_irreducible(&f, &[1, 1, 0, 1])); // x^3+x+1
        assert!(pv_is_irreducible(&f, &[1, 0, 1, 1])); // x^3+x^2+1
        assert!(!pv_is_irreducible(&f, &[0, 1, 1, 1]));
    }

    #[test]
    fn smallest_irreducible_word_order() {
        let f = PrimeArith { p: 2 };
        // Of the two cubics, (1,0,1) precedes (1,1,0) because the degree-1
        // coefficient is compared before the degree-2 one.
        assert_eq!(smallest_irreducible(&f, 3), vec![1, 0, 1, 1]);
        assert_eq!(smallest_irreducible(&f, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(&f, 1), vec![0, 1]);
    }

    #[test]
    fn generator_of_f9() {
        let f = PrimeArith { p: 3 };
        let m = smallest_irreducible(&f, 2);
        let g = find_generator(&f, &m, 9);
        // Must have order exactly 8.
        assert_eq!(elem_powmod(&f, g, 8, &m), 1);
        assert_ne!(elem_powmod(&f, g, 4, &m), 1);
    }

    #[test]
    fn factorization_helpers() {
        assert_eq!(distinct_prime_factors(262143), vec![3, 7, 19, 73]);
        assert!(is_prime_u64(17));
        assert!(!is_prime_u64(4095));
    }
}
