//! Finite-group models. The graphs only ever ask two things of a group:
//! element orders and subgroup membership. Groups are immutable once
//! constructed and validated.

mod catalog;
mod table;

pub use catalog::GroupCatalog;
pub use table::{load_table, parse_table};

use crate::error::NcError;
use crate::numthy::{gcd, lcm};
use std::collections::HashSet;

/// Guard for direct products and generic construction.
pub const MAX_GROUP_ORDER: usize = 10_000;
/// Guard for subgroup enumeration.
pub const MAX_SUBGROUP_ENUM_ORDER: usize = 64;

#[derive(Debug, Clone)]
enum Repr {
    /// Z_n with multiplication (i + j) mod n.
    Cyclic,
    /// Componentwise product in mixed-radix element indexing.
    Product { factor_orders: Vec<usize> },
    /// Explicit multiplication table, row-major.
    Table(Vec<usize>),
}

/// A finite group with elements indexed 0..n-1, index 0 the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    repr: Repr,
    orders: Vec<u64>,
    /// For Product: multiplication delegates to the factor tables.
    factors: Vec<FiniteGroup>,
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!((1..=MAX_GROUP_ORDER).contains(&n));
        let orders = (0..n)
            .map(|i| (n as u64) / gcd(n as u64, i as u64))
            .collect();
        FiniteGroup {
            name: format!("Z{n}"),
            n,
            repr: Repr::Cyclic,
            orders,
            factors: Vec::new(),
        }
    }

    /// Build from an explicit multiplication table and validate every axiom.
    #[allow(clippy::needless_range_loop)] // validates a table indexed by both coordinates
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<FiniteGroup, NcError> {
        let n = table.len();
        if n == 0 {
            return Err(NcError::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(NcError::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(NcError::InvalidTable(format!(
                        "entry ({i},{j}) = {v} out of range"
                    )));
                }
            }
        }
        // identity at index 0
        for i in 0..n {
            if table[0][i] != i {
                return Err(NcError::InvalidTable(format!(
                    "index 0 is not a left identity: 0*{i} = {}",
                    table[0][i]
                )));
            }
            if table[i][0] != i {
                return Err(NcError::InvalidTable(format!(
                    "index 0 is not a right identity: {i}*0 = {}",
                    table[i][0]
                )));
            }
        }
        // inverses
        for i in 0..n {
            if !(0..n).any(|j| table[i][j] == 0) {
                return Err(NcError::InvalidTable(format!("element {i} has no inverse")));
            }
        }
        // associativity, exhaustively
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(NcError::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mut g = FiniteGroup {
            name: name.to_string(),
            n,
            repr: Repr::Table(flat),
            orders: Vec::new(),
            factors: Vec::new(),
        };
        g.orders = (0..n).map(|i| g.order_by_powers(i)).collect();
        // Lagrange check
        for (i, &o) in g.orders.iter().enumerate() {
            if !(n as u64).is_multiple_of(o) {
                return Err(NcError::InvalidTable(format!(
                    "order of element {i} is {o}, which does not divide {n}"
                )));
            }
        }
        Ok(g)
    }

    pub fn direct_product(factors: Vec<FiniteGroup>) -> Result<FiniteGroup, NcError> {
        assert!(!factors.is_empty(), "direct product needs at least one factor");
        let n: usize = factors.iter().map(|g| g.n).product();
        if n > MAX_GROUP_ORDER {
            return Err(NcError::CostGuard {
                what: "direct product order",
                got: n,
                limit: MAX_GROUP_ORDER,
            });
        }
        let name = factors
            .iter()
            .map(|g| g.name.clone())
            .collect::<Vec<_>>()
            .join("x");
        let factor_orders: Vec<usize> = factors.iter().map(|g| g.n).collect();
        let mut orders = Vec::with_capacity(n);
        for idx in 0..n {
            let comps = decompose(idx, &factor_orders);
            let o = comps
                .iter()
                .zip(&factors)
                .fold(1u64, |acc, (&c, g)| lcm(acc, g.orders[c]));
            orders.push(o);
        }
        Ok(FiniteGroup {
            name,
            n,
            repr: Repr::Product { factor_orders },
            orders,
            factors,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn multiply(&self, i: usize, j: usize) -> usize {
        match &self.repr {
            Repr::Cyclic => (i + j) % self.n,
            Repr::Table(t) => t[i * self.n + j],
            Repr::Product { factor_orders } => {
                let a = decompose(i, factor_orders);
                let b = decompose(j, factor_orders);
                let c: Vec<usize> = a
                    .iter()
                    .zip(&b)
                    .zip(&self.factors)
                    .map(|((&x, &y), g)| g.multiply(x, y))
                    .collect();
                compose(&c, factor_orders)
            }
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        // i^(k-1) where k is the order of i
        let mut acc = i;
        while self.multiply(acc, i) != 0 {
            acc = self.multiply(acc, i);
        }
        acc
    }

    /// Least k >= 1 with x^k = e.
    pub fn element_order(&self, x: usize) -> u64 {
        self.orders[x]
    }

    fn order_by_powers(&self, x: usize) -> u64 {
        let mut k = 1u64;
        let mut acc = x;
        while acc != 0 {
            acc = self.multiply(acc, x);
            k += 1;
        }
        k
    }

    pub fn commutes(&self, i: usize, j: usize) -> bool {
        self.multiply(i, j) == self.multiply(j, i)
    }

    /// Every non-identity element has prime power order.
    pub fn is_eppo(&self) -> bool {
        self.orders
            .iter()
            .skip(1)
            .all(|&o| crate::numthy::factorize(o).is_prime_power())
    }

    /// Elements of coprime orders commute iff the group is nilpotent.
    pub fn is_nilpotent(&self) -> bool {
        for i in 1..self.n {
            for j in (i + 1)..self.n {
                if gcd(self.orders[i], self.orders[j]) == 1 && !self.commutes(i, j) {
                    return false;
                }
            }
        }
        true
    }

    pub fn centre(&self) -> SubgroupRef {
        let members: Vec<bool> = (0..self.n)
            .map(|i| (0..self.n).all(|j| self.commutes(i, j)))
            .collect();
        SubgroupRef::from_members(self, members).expect("centre is always a subgroup")
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> SubgroupRef {
        SubgroupRef::from_members(self, vec![true; self.n]).expect("G <= G")
    }

    /// Closure of a member set under multiplication.
    fn close(&self, seed: &[usize]) -> Vec<bool> {
        let mut members = vec![false; self.n];
        members[0] = true;
        for &s in seed {
            members[s] = true;
        }
        // keep multiplying known members until stable
        let mut changed = true;
        while changed {
            changed = false;
            let current: Vec<usize> = (0..self.n).filter(|&i| members[i]).collect();
            for &a in &current {
                for &b in &current {
                    let c = self.multiply(a, b);
                    if !members[c] {
                        members[c] = true;
                        changed = true;
                    }
                }
            }
        }
        members
    }

    /// All distinct subgroups, by generator-closure fixpoint. Guarded to
    /// |G| <= 64.
    pub fn all_subgroups(&self) -> Result<Vec<SubgroupRef>, NcError> {
        if self.n > MAX_SUBGROUP_ENUM_ORDER {
            return Err(NcError::CostGuard {
                what: "subgroup enumeration order",
                got: self.n,
                limit: MAX_SUBGROUP_ENUM_ORDER,
            });
        }
        let mask = |members: &[bool]| -> u64 {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m)
                .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
        };
        let mut seen: HashSet<u64> = HashSet::new();
        let mut sets: Vec<Vec<bool>> = Vec::new();
        for x in 0..self.n {
            let m = self.close(&[x]);
            if seen.insert(mask(&m)) {
                sets.push(m);
            }
        }
        // join closure: every subgroup is a join of cyclic subgroups
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = sets.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let seed: Vec<usize> = (0..self.n)
                        .filter(|&i| a[i] || b[i])
                        .collect();
                    let m = self.close(&seed);
                    if seen.insert(mask(&m)) {
                        sets.push(m);
                        changed = true;
                    }
                }
            }
        }
        let mut subs: Vec<SubgroupRef> = sets
            .into_iter()
            .map(|m| SubgroupRef::from_members(self, m).expect("closed set is a subgroup"))
            .collect();
        subs.sort_by_key(|s| (s.order(), s.member_mask()));
        Ok(subs)
    }
}

fn decompose(mut idx: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (k, &r) in radices.iter().enumerate().rev() {
        out[k] = idx % r;
        idx /= r;
    }
    out
}

fn compose(comps: &[usize], radices: &[usize]) -> usize {
    let mut idx = 0;
    for (&c, &r) in comps.iter().zip(radices) {
        idx = idx * r + c;
    }
    idx
}

/// A subgroup given by a membership set over the parent's element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRef {
    parent_order: usize,
    members: Vec<bool>,
    order: u64,
}

impl SubgroupRef {
    /// Validates closure and Lagrange before accepting the member set.
    pub fn from_members(group: &FiniteGroup, members: Vec<bool>) -> Result<SubgroupRef, NcError> {
        let n = group.order();
        if members.len() != n {
            return Err(NcError::InvalidSubgroup(format!(
                "membership vector has length {}, group order is {n}",
                members.len()
            )));
        }
        if !members[0] {
            return Err(NcError::InvalidSubgroup("identity not a member".into()));
        }
        let elems: Vec<usize> = (0..n).filter(|&i| members[i]).collect();
        for &a in &elems {
            for &b in &elems {
                let c = group.multiply(a, b);
                if !members[c] {
                    return Err(NcError::InvalidSubgroup(format!(
                        "not closed: {a}*{b} = {c} is not a member"
                    )));
                }
            }
        }
        let order = elems.len() as u64;
        if !(n as u64).is_multiple_of(order) {
            return Err(NcError::InvalidSubgroup(format!(
                "order {order} does not divide {n}"
            )));
        }
        Ok(SubgroupRef {
            parent_order: n,
            members,
            order,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.members.len()).filter(move |&i| self.members[i])
    }

    /// Bitmask of members; only meaningful for parents of order <= 64.
    fn member_mask(&self) -> u64 {
        self.members()
            .fold(0u64, |acc, i| acc | (1u64 << (i % 64)))
    }

    /// Short description like "H8#3" used in reports.
    pub fn describe(&self) -> String {
        format!("|H|={}", self.order)
    }
}

/// The unique subgroup of order h in Z_n: the multiples of n/h.
pub fn cyclic_subgroup_of_order(n: usize, h: usize) -> Result<SubgroupRef, NcError> {
    if h < 1 || !n.is_multiple_of(h) {
        return Err(NcError::InvalidSubgroupOrder {
            n: n as u64,
            h: h as u64,
        });
    }
    let step = n / h;
    let members: Vec<bool> = (0..n).map(|i| i % step == 0).collect();
    Ok(SubgroupRef {
        parent_order: n,
        members,
        order: h as u64,
    })
}
