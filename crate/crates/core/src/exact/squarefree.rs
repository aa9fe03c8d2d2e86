//! Certified square-free decomposition of positive integers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_BOUND: u64 = 1 << 16;

// Deterministic Miller-Rabin witnesses, valid below 3.3e24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Splits `n > 0` as `square^2 * free` with `free` square-free.
///
/// Returns `None` when the remaining cofactor after trial division is too
/// large to certify square-freeness (composite beyond the deterministic
/// primality range).
pub fn square_free_split(n: &BigUint) -> Option<(BigUint, BigUint)> {
    assert!(!n.is_zero(), "square-free split of zero");
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();

    let mut p = 2u64;
    while p < TRIAL_BOUND {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                free *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }

    if rest.is_one() {
        return Some((square, free));
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        square *= root;
        return Some((square, free));
    }
    let bound = BigUint::from(TRIAL_BOUND);
    // All prime factors of `rest` exceed the trial bound. Below bound^3 it
    // has at most two of them, and it is not a square, so they differ.
    if rest < bound.pow(3) || is_probable_prime_deterministic(&rest) {
        free *= rest;
        return Some((square, free));
    }
    None
}

fn is_probable_prime_deterministic(n: &BigUint) -> bool {
    let limit = BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    if n >= &limit {
        return false;
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while (&d % 2u32).is_zero() {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in MR_BASES.iter() {
        let a = BigUint::from(a);
        if (&a % n).is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// True when `n` is square-free and greater than one.
pub fn is_square_free_radicand(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    match square_free_split(&BigUint::from(n)) {
        Some((sq, _)) => sq.to_u64() == Some(1),
        None => false,
    }
}
