//! Cyclotomic polynomials and polynomial reduction modulo them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

pub(crate) struct Cyclotomic {
    pub degree: usize,
    /// Monic Φ_m, lowest degree first, length `degree + 1`.
    pub phi: Vec<i64>,
}

pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m as u64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p as u64;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n as u64;
    }
    result as usize
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (t, &d) in den.iter().enumerate() {
                rem[k + t] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn compute(m: u32) -> Cyclotomic {
    // x^m - 1 = prod_{d | m} Φ_d
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            poly = divide_monic(&poly, &cyclotomic(d).phi);
        }
    }
    Cyclotomic {
        degree: poly.len() - 1,
        phi: poly,
    }
}

pub(crate) fn cyclotomic(m: u32) -> Arc<Cyclotomic> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Cyclotomic>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&m) {
        return c.clone();
    }
    // Computed outside the lock: `compute` recurses into smaller orders.
    let c = Arc::new(compute(m));
    cache.lock().unwrap().entry(m).or_insert(c).clone()
}

/// Reduce a polynomial of any length modulo Φ_m in place; result has length `degree`.
pub(crate) fn reduce(poly: &mut Vec<BigInt>, cyc: &Cyclotomic) {
    let deg = cyc.degree;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for t in 0..deg {
                let f = cyc.phi[t];
                if f != 0 {
                    poly[k - deg + t] -= &c * f;
                }
            }
        }
    }
    poly.resize(deg, BigInt::zero());
}

/// Same as [`reduce`] for machine integers; `None` on overflow.
pub(crate) fn reduce_i128(poly: &mut Vec<i128>, cyc: &Cyclotomic) -> Option<()> {
    let deg = cyc.degree;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = poly[k];
            if c == 0 {
                continue;
            }
            poly[k] = 0;
            for t in 0..deg {
                let f = cyc.phi[t] as i128;
                if f != 0 {
                    let v = c.checked_mul(f)?;
                    poly[k - deg + t] = poly[k - deg + t].checked_sub(v)?;
                }
            }
        }
    }
    poly.resize(deg, 0);
    Some(())
}
