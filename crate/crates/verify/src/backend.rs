//! Runs a span computation exactly or modulo random primes.
//!
//! Modular answers are accepted only when every prime agrees. Otherwise the
//! computation is repeated over the rationals.

use std::fmt::Debug;

use detideal::field::{distinct_primes, random_prime, Field, PrimeField, Rationals};
use detideal::AlgebraError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Modular { primes: usize },
}

/// A computation that can be carried out over any field.
pub trait SpanComputation: Sync {
    type Output: Clone + Eq + Debug + Send;
    fn run<F: Field>(&self, field: F) -> detideal::Result<Self::Output>;
}

#[derive(Debug, Clone)]
pub struct Certified<T> {
    pub value: T,
    pub primes: Vec<u64>,
    pub escalated: bool,
}

/// Prime stream for `seed`; kept apart from the stream used for sampling.
fn prime_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    rng
}

pub fn certify<C: SpanComputation>(c: &C, backend: Backend, seed: u64) -> Result<Certified<C::Output>> {
    let count = match backend {
        Backend::Exact => {
            return Ok(Certified { value: c.run(Rationals)?, primes: Vec::new(), escalated: false })
        }
        Backend::Modular { primes } => primes.max(1),
    };
    let mut rng = prime_rng(seed);
    let mut primes = distinct_primes(&mut rng, count);
    let mut values = Vec::with_capacity(count);
    let mut i = 0;
    while i < primes.len() {
        match c.run(PrimeField::new(primes[i])?) {
            Ok(v) => {
                values.push(v);
                i += 1;
            }
            // The prime divides a denominator; draw a replacement.
            Err(AlgebraError::BadPrime(_)) => loop {
                let p = random_prime(&mut rng);
                if !primes.contains(&p) {
                    primes[i] = p;
                    break;
                }
            },
            Err(e) => return Err(e.into()),
        }
    }
    if values.windows(2).all(|w| w[0] == w[1]) {
        let value = values.swap_remove(0);
        return Ok(Certified { value, primes, escalated: false });
    }
    Ok(Certified { value: c.run(Rationals)?, primes, escalated: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank of the 1x1 matrix `[n]`: zero exactly when the prime divides `n`.
    struct Unit(i64);

    impl SpanComputation for Unit {
        type Output = bool;
        fn run<F: Field>(&self, field: F) -> detideal::Result<bool> {
            let v = field.from_rational(&num_rational::BigRational::from_integer(self.0.into()))?;
            Ok(!field.is_zero(&v))
        }
    }

    #[test]
    fn agreeing_primes_are_accepted() {
        let c = certify(&Unit(6), Backend::Modular { primes: 2 }, 5).unwrap();
        assert!(c.value && !c.escalated);
        assert_eq!(c.primes.len(), 2);
        let again = certify(&Unit(6), Backend::Modular { primes: 2 }, 5).unwrap();
        assert_eq!(again.primes, c.primes);
    }

    #[test]
    fn disagreement_escalates() {
        let c = certify(&Unit(6), Backend::Modular { primes: 2 }, 5).unwrap();
        let p = c.primes[0] as i64;
        let forced = certify(&Unit(p), Backend::Modular { primes: 2 }, 5).unwrap();
        assert!(forced.escalated);
        assert!(forced.value);
    }

    #[test]
    fn exact_uses_no_primes() {
        let c = certify(&Unit(0), Backend::Exact, 1).unwrap();
        assert!(!c.value && c.primes.is_empty());
    }
}
