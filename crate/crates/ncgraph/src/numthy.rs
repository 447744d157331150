//! Integer arithmetic behind the closed-form predictions: factorization,
//! Euler totient, divisor enumeration and the Ω/Ω̄ divisor split.

use crate::error::NcError;

/// Prime factorization as (prime, exponent) pairs sorted by prime.
/// Empty for 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Distinct primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime divisors (the paper's `r`).
    pub fn num_primes(&self) -> usize {
        self.pairs.len()
    }

    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, a)| p.pow(a))
            .product::<u64>()
    }

    pub fn is_prime_power(&self) -> bool {
        self.pairs.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, a)| a == 1)
    }
}

/// Trial-division factorization; inputs are desk-scale.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut pairs = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut a = 0;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            pairs.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Factorization { pairs }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Euler totient φ(n).
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    let mut result = n;
    for (p, _) in factorize(n).pairs() {
        result = result / p * (p - 1);
    }
    result
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Number of positive divisors τ(n).
pub fn tau(n: u64) -> u64 {
    factorize(n)
        .pairs()
        .iter()
        .map(|&(_, a)| (a + 1) as u64)
        .product()
}

/// Distinct prime divisors of m (the θ set); empty iff m = 1.
pub fn theta(m: u64) -> Vec<u64> {
    factorize(m).primes().collect()
}

/// The divisor split of n with respect to h: Ω_{n,h} holds the divisors
/// d > 1 of n with gcd(d,h) > 1, Ω̄_{n,h} the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSplit {
    pub n: u64,
    pub h: u64,
    pub omega: Vec<u64>,
    pub bar_omega: Vec<u64>,
}

pub fn divisor_split(n: u64, h: u64) -> Result<DivisorSplit, NcError> {
    if n < 2 || h < 1 || !n.is_multiple_of(h) {
        return Err(NcError::InvalidSubgroupOrder { n, h });
    }
    let mut omega = Vec::new();
    let mut bar_omega = Vec::new();
    for d in divisors(n) {
        if d > 1 {
            if gcd(d, h) > 1 {
                omega.push(d);
            } else {
                bar_omega.push(d);
            }
        }
    }
    Ok(DivisorSplit {
        n,
        h,
        omega,
        bar_omega,
    })
}
