//! Closed-form predictions for Γ_{Z_n, Z_h}: vertex degrees, extremal
//! degrees, connectivity and the full property classification, all as pure
//! arithmetic in (n, h). The sweep harness adjudicates these against the
//! graph oracles.

use crate::error::NcError;
use crate::numthy::{divisor_split, divisors, euler_phi, factorize, Factorization};

/// A cyclic-group instance: the pair (Z_n, Z_h) with h | n, h >= 2, n >= 3.
#[derive(Debug, Clone)]
pub struct CyclicInstance {
    n: u64,
    h: u64,
    fact_n: Factorization,
    fact_h: Factorization,
}

impl CyclicInstance {
    pub fn new(n: u64, h: u64) -> Result<Self, NcError> {
        if h == 1 {
            return Err(NcError::TrivialSubgroup);
        }
        if n < 3 || h < 2 || !n.is_multiple_of(h) {
            return Err(NcError::InvalidSubgroupOrder { n, h });
        }
        Ok(CyclicInstance {
            n,
            h,
            fact_n: factorize(n),
            fact_h: factorize(h),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    /// Number of distinct primes dividing n.
    pub fn r(&self) -> usize {
        self.fact_n.num_primes()
    }

    /// Number of distinct primes dividing h.
    pub fn omega_h(&self) -> usize {
        self.fact_h.num_primes()
    }

    pub fn fact_n(&self) -> &Factorization {
        &self.fact_n
    }

    pub fn fact_h(&self) -> &Factorization {
        &self.fact_h
    }

    /// Does every prime of n divide h? (Equivalent to connectivity.)
    pub fn rad_divides(&self) -> bool {
        self.fact_n.primes().all(|p| self.h.is_multiple_of(p))
    }
}

/// Both readings of the maximum-degree lemma. In the connected branch they
/// coincide at n − 2. In the disconnected branch `paper_value` is the
/// lemma's stated n − (Σ_{d∈Ω̄}φ(d) + 1) while `corrected_value`
/// additionally subtracts the vertex itself, n − Σ_{d∈Ω̄}φ(d) − 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxDegree {
    pub paper_value: u64,
    pub corrected_value: u64,
}

/// Three-valued verdict for properties whose characterization leaves a gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Unclassified,
}

impl Tri {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unclassified => None,
        }
    }
}

impl std::fmt::Display for Tri {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tri::True => write!(f, "true"),
            Tri::False => write!(f, "false"),
            Tri::Unclassified => write!(f, "unclassified"),
        }
    }
}

/// The full prediction bundle for one cyclic instance.
#[derive(Debug, Clone)]
pub struct PropertyPrediction {
    pub star: bool,
    pub path: bool,
    pub cycle: bool,
    /// Corrected: h = 2 (a single non-identity H vertex, and every
    /// triangle needs two) or n = h = 3. The paper's iff misses the
    /// disconnected h = 2 instances.
    pub triangle_free: bool,
    /// The literature's triangle-free iff (the star-condition set),
    /// verbatim; fails on disconnected (n, 2) instances such as (6, 2).
    pub triangle_free_paper: bool,
    pub complete_bipartite: bool,
    pub complete: bool,
    pub unicyclic: bool,
    /// Corrected: h a prime power, or H = G with n = 2p^b for an odd
    /// prime p (the unique involution is the independent part, the rest a
    /// clique). The paper's iff lists only n = 6 in the second branch.
    pub split: bool,
    /// The literature's split iff verbatim: h a prime power or n = h = 6.
    /// Fails on n = 2p^b, H = G for p > 3 (first at (10, 10)).
    pub split_paper: bool,
    pub claw_free: bool,
    pub chordal: bool,
    pub connected: bool,
    /// Corrected Eulerian prediction: true exactly for n = 2^k (k >= 2)
    /// with H = G, where the graph is K_{n-1} with all degrees even.
    pub eulerian: bool,
    /// The literature's claim that no instance is Eulerian; kept verbatim
    /// so reports can show it against the oracle. It fails on the
    /// K_{2^k - 1} family above.
    pub eulerian_paper: bool,
    pub perfect: Tri,
    pub max_degree: MaxDegree,
    pub min_degree: u64,
    /// (element order d, predicted degree) for every divisor d > 1 of n.
    pub degree_table: Vec<(u64, u64)>,
}

/// Degree of any vertex of order d: Σ_{t∈Ω_{n,d}}φ(t) − 1 when the vertex
/// lies in H (d | h), else Σ_{t∈Ω_{h,d}}φ(t).
pub fn degree_formula(inst: &CyclicInstance, d: u64) -> Result<u64, NcError> {
    if d < 2 || !inst.n.is_multiple_of(d) {
        return Err(NcError::InvalidSubgroupOrder { n: inst.n, h: d });
    }
    // Σ_{t∈Ω_{m,d}} φ(t): totients over divisors of m sharing a prime with d
    let sum_phi = |m: u64| -> u64 {
        divisors(m)
            .into_iter()
            .filter(|&t| t > 1 && crate::numthy::gcd(t, d) > 1)
            .map(euler_phi)
            .sum()
    };
    if inst.h.is_multiple_of(d) {
        Ok(sum_phi(inst.n) - 1)
    } else {
        Ok(sum_phi(inst.h))
    }
}

pub fn max_degree_formula(inst: &CyclicInstance) -> MaxDegree {
    if inst.rad_divides() {
        return MaxDegree {
            paper_value: inst.n - 2,
            corrected_value: inst.n - 2,
        };
    }
    let bar_sum: u64 = divisor_split(inst.n, inst.h)
        .expect("instance invariant h | n")
        .bar_omega
        .iter()
        .map(|&t| euler_phi(t))
        .sum();
    MaxDegree {
        paper_value: inst.n - (bar_sum + 1),
        corrected_value: inst.n - bar_sum - 2,
    }
}

/// Minimum degree by the four-branch case split: p-group with H = G,
/// p-group with H proper, connected non-p-group, disconnected.
pub fn min_degree_formula(inst: &CyclicInstance) -> u64 {
    if inst.r() == 1 {
        return if inst.h == inst.n {
            inst.n - 2
        } else {
            inst.h - 1
        };
    }
    if !inst.rad_divides() {
        return 0;
    }
    inst.fact_n
        .pairs()
        .iter()
        .map(|&(p, a)| {
            let d = p.pow(a);
            degree_formula(inst, d).expect("p^a divides n")
        })
        .min()
        .expect("r >= 2 gives at least two candidates")
}

/// Connected iff every prime dividing n also divides h.
pub fn is_connected_formula(inst: &CyclicInstance) -> bool {
    inst.rad_divides()
}

pub fn classify_formula(inst: &CyclicInstance) -> PropertyPrediction {
    let (n, h) = (inst.n, inst.h);
    let r = inst.r();
    let omega_h = inst.omega_h();
    let n_sqfree = inst.fact_n.is_squarefree();
    let h_prime_power = inst.fact_h.is_prime_power();

    let star = (n.is_power_of_two() && n >= 4 && h == 2) || (n == 3 && h == 3);
    let path = (n == 3 && h == 3) || (n == 4 && h == 2);
    let cycle = n == 4 && h == 4;
    let complete = r == 1 && h == n;
    let twice_odd_prime_power = r == 2 && inst.fact_n.pairs()[0] == (2, 1);
    let split = h_prime_power || (h == n && twice_odd_prime_power);
    let split_paper = h_prime_power || (n == 6 && h == 6);
    let claw_free = (h == n && r <= 2) || (h < n && (n == 4 || n == 6));
    let chordal = h_prime_power || (h == n && r <= 3);

    let perfect = if r <= 3 || (r == 4 && n_sqfree) || (r >= 5 && omega_h <= 3) {
        Tri::True
    } else if (r >= 5 && omega_h >= 4)
        || (r == 4 && !n_sqfree && omega_h >= 4 && h < n)
    {
        Tri::False
    } else {
        Tri::Unclassified
    };

    let degree_table = divisors(n)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| (d, degree_formula(inst, d).expect("d | n")))
        .collect();

    PropertyPrediction {
        star,
        path,
        cycle,
        triangle_free: h == 2 || (n == 3 && h == 3),
        triangle_free_paper: star,
        complete_bipartite: star,
        complete,
        unicyclic: cycle,
        split,
        split_paper,
        claw_free,
        chordal,
        connected: inst.rad_divides(),
        eulerian: n.is_power_of_two() && n >= 4 && h == n,
        eulerian_paper: false,
        perfect,
        max_degree: max_degree_formula(inst),
        min_degree: min_degree_formula(inst),
        degree_table,
    }
}
