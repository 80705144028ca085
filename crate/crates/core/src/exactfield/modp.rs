//! Ring homomorphisms Z[ζ_m][1/d] → F_p with p ≡ 1 (mod m), used as a fast
//! coarse hash for collinearity. Every collision is re-checked exactly by callers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::cyclo::prime_factors;
use super::FieldElement;

#[derive(Clone, Debug)]
pub struct ModImage {
    pub p: u64,
    pub order: u32,
    big_p: BigInt,
    powers: Vec<u64>,
}

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

#[inline]
pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl ModImage {
    /// The `attempt`-th prime below 2^62 that splits completely in Q(ζ_m).
    pub fn new(order: u32, attempt: usize) -> Self {
        let m = order as u64;
        let mut k = ((1u64 << 62) - 1) / m;
        let mut seen = 0;
        let p = loop {
            let cand = k * m + 1;
            if is_prime(cand) {
                if seen == attempt {
                    break cand;
                }
                seen += 1;
            }
            k -= 1;
        };
        let factors = prime_factors(m);
        let root = (2..)
            .map(|g| powmod(g, (p - 1) / m, p))
            .find(|&r| factors.iter().all(|&q| powmod(r, m / q, p) != 1))
            .expect("a primitive root exists");
        let degree = super::euler_phi(order);
        let mut powers = Vec::with_capacity(degree);
        let mut acc = 1;
        for _ in 0..degree {
            powers.push(acc);
            acc = mulmod(acc, root, p);
        }
        ModImage {
            p,
            order,
            big_p: BigInt::from(p),
            powers,
        }
    }

    fn residue(&self, c: &BigInt) -> u64 {
        if c.is_zero() {
            return 0;
        }
        if let Some(v) = c.to_i64() {
            return v.rem_euclid(self.p as i64) as u64;
        }
        c.mod_floor(&self.big_p).to_u64().expect("residue below p")
    }

    /// Image of `a`, or `None` when its denominator vanishes mod p.
    pub fn reduce(&self, a: &FieldElement) -> Option<u64> {
        debug_assert_eq!(a.order(), self.order);
        let den = self.residue(a.denominator());
        if den == 0 {
            return None;
        }
        let mut acc = 0u64;
        for (c, &pw) in a.numerators().iter().zip(&self.powers) {
            let r = self.residue(c);
            if r != 0 {
                acc = (acc + mulmod(r, pw, self.p)) % self.p;
            }
        }
        Some(mulmod(acc, invmod(den, self.p), self.p))
    }

    /// Reduce a homogeneous triple and scale its first nonzero entry to 1.
    pub fn reduce_triple(&self, t: &[FieldElement; 3]) -> Option<[u64; 3]> {
        let v = [
            self.reduce(&t[0])?,
            self.reduce(&t[1])?,
            self.reduce(&t[2])?,
        ];
        normalize3(v, self.p)
    }
}

pub fn cross3(a: &[u64; 3], b: &[u64; 3], p: u64) -> [u64; 3] {
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    [
        sub(mulmod(a[1], b[2], p), mulmod(a[2], b[1], p)),
        sub(mulmod(a[2], b[0], p), mulmod(a[0], b[2], p)),
        sub(mulmod(a[0], b[1], p), mulmod(a[1], b[0], p)),
    ]
}

pub fn normalize3(v: [u64; 3], p: u64) -> Option<[u64; 3]> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    if lead == 1 {
        return Some(v);
    }
    let inv = invmod(lead, p);
    Some([mulmod(v[0], inv, p), mulmod(v[1], inv, p), mulmod(v[2], inv, p)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_is_a_ring_map() {
        let img = ModImage::new(20, 0);
        assert_eq!(img.p % 20, 1);
        let a = FieldElement::zeta_pow(20, 3) + FieldElement::from_ratio(20, 5, 7);
        let b = FieldElement::golden(20);
        let (ra, rb) = (img.reduce(&a).unwrap(), img.reduce(&b).unwrap());
        assert_eq!(img.reduce(&(&a * &b)).unwrap(), mulmod(ra, rb, img.p));
        assert_eq!(img.reduce(&(&a + &b)).unwrap(), (ra + rb) % img.p);
        // ζ^20 = 1 maps to 1
        assert_eq!(img.reduce(&FieldElement::zeta_pow(20, 20)).unwrap(), 1);
    }

    #[test]
    fn distinct_attempts_give_distinct_primes() {
        assert_ne!(ModImage::new(12, 0).p, ModImage::new(12, 1).p);
        assert!(is_prime(ModImage::new(1, 0).p));
    }
}
