//! Coefficient fields for linear algebra over graded components: the
//! rationals and prime fields `F_p` with `p < 2^32`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{AlgebraError, Result};

/// A field whose elements are manipulated through a (possibly stateful)
/// context value, so that `F_p` can carry its modulus at runtime.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Image of a rational number; fails when the denominator is not invertible.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// Whether two contexts describe the same field.
    fn same_field(&self, other: &Self) -> bool;
    /// Human-readable tag, `"QQ"` or `"GF(p)"`.
    fn tag(&self) -> String;
}

/// The field of rational numbers with arbitrary precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn same_field(&self, _other: &Self) -> bool {
        true
    }
    fn tag(&self) -> String {
        "QQ".to_string()
    }
}

/// The prime field `F_p`. Elements are canonical residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is a prime below `2^32`, so that products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
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

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let den = self.reduce_int(q.denom());
        if den == 0 {
            return Err(AlgebraError::BadPrime(self.p));
        }
        let num = self.reduce_int(q.numer());
        Ok(self.mul(&num, &self.inv(&den)))
    }
    fn same_field(&self, other: &Self) -> bool {
        self.p == other.p
    }
    fn tag(&self) -> String {
        format!("GF({})", self.p)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Lower end (exclusive) of the range modular primes are drawn from.
pub const PRIME_LOW: u64 = 1 << 30;
/// Upper end (exclusive) of the range modular primes are drawn from.
pub const PRIME_HIGH: u64 = 1 << 31;

/// Draws a uniformly random prime from the open interval `(2^30, 2^31)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(PRIME_LOW + 1..PRIME_HIGH) | 1;
        if candidate < PRIME_HIGH && is_prime(candidate) {
            return candidate;
        }
    }
}

/// Draws `count` pairwise distinct random primes from `(2^30, 2^31)`.
pub fn distinct_primes<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    while primes.len() < count {
        let p = random_prime(rng);
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes
}

/// Converts a rational known to be an integer.
pub fn rational_to_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn modular_inverse_of_half_mod_five() {
        let f = PrimeField::new(5).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), 3);
        let bad = BigRational::new(1.into(), 10.into());
        assert_eq!(f.from_rational(&bad), Err(AlgebraError::BadPrime(5)));
    }

    #[test]
    fn random_primes_are_in_range_and_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ps = distinct_primes(&mut rng, 4);
        assert_eq!(ps.len(), 4);
        for (i, &p) in ps.iter().enumerate() {
            assert!(p > PRIME_LOW && p < PRIME_HIGH && is_prime(p));
            assert!(!ps[..i].contains(&p));
        }
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(PrimeField::new(15), Err(AlgebraError::NotPrime(15)));
        assert!(PrimeField::new(1 << 33).is_err());
    }
}
