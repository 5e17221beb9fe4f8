//! Arithmetic in the prime field F_p, residues kept in `[0, p)`.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u64) -> Result<u32> {
    if p >= 1 << 31 || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    Ok(p as u32)
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    pow(a, p as u64 - 2, p)
}

/// Reduce an arbitrary integer into `[0, p)`.
pub fn from_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Symmetric representative in `(-p/2, p/2]`, used for printing.
pub fn signed(a: u32, p: u32) -> i64 {
    if a as u64 * 2 > p as u64 {
        a as i64 - p as i64
    } else {
        a as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(2147483647));
        assert!(!is_prime(1) && !is_prime(91));
        assert!(check_prime(4).is_err());
        assert!(check_prime(1 << 31).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        for p in [2u32, 3, 5, 7, 101, 2147483647] {
            for a in 1..p.min(50) {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
        assert_eq!(from_i64(-1, 7), 6);
        assert_eq!(signed(6, 7), -1);
    }
}
