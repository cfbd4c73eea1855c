//! Finitely generated abelian groups in primary-decomposition normal form.
//!
//! A group is stored as a free rank plus a sorted multiset of prime powers,
//! so structural equality is isomorphism and direct summands are exactly the
//! sub-multisets of the factors.

pub mod arith;
mod snf;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use snf::{smith_normal_form, PresentationMatrix};

/// A cyclic factor `Z/p^a` with `p` prime and `a >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    p: u64,
    a: u32,
}

impl PrimePower {
    /// Fails if `p` is not prime, `a == 0`, or `p^a` overflows `u64`.
    pub fn new(p: u64, a: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidGroup(format!("{p} is not prime")));
        }
        if a == 0 {
            return Err(Error::InvalidGroup(format!("zero exponent on prime {p}")));
        }
        if p.checked_pow(a).is_none() {
            return Err(Error::InvalidGroup(format!("{p}^{a} exceeds 64 bits")));
        }
        Ok(Self { p, a })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.a
    }

    pub fn value(&self) -> u64 {
        self.p.pow(self.a)
    }

    /// Prime-power factors of `n`; empty for `n <= 1`.
    pub fn factors_of(n: u64) -> Vec<PrimePower> {
        arith::factorize(n)
            .into_iter()
            .map(|(p, a)| PrimePower { p, a })
            .collect()
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.a)
        }
    }
}

/// `Z^free_rank ⊕ Z/q_1 ⊕ ... ⊕ Z/q_k` with each `q_i` a prime power.
///
/// Equality is isomorphism. The ordering compares free rank, then torsion
/// order, then the sorted factor list; it is total and deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: u32,
    torsion: Vec<PrimePower>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `Z^rank`.
    pub fn free(rank: u32) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    /// `Z/n`, reading `n = 0` as `Z` and `n = 1` as the zero group.
    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            return Self::free(1);
        }
        Self { free_rank: 0, torsion: PrimePower::factors_of(n) }
    }

    pub fn from_parts(free_rank: u32, torsion: impl IntoIterator<Item = PrimePower>) -> Self {
        let mut torsion: Vec<_> = torsion.into_iter().collect();
        torsion.sort_unstable();
        Self { free_rank, torsion }
    }

    /// `Z^free_rank ⊕ ⊕ Z/m_i`. Any `m_i` works (not only divisor chains):
    /// `0` adds a free summand and `1` is ignored.
    pub fn from_cyclic_orders(free_rank: u32, orders: &[u64]) -> Self {
        let mut g = Self::free(free_rank);
        for &m in orders {
            g = g.direct_sum(&Self::cyclic(m));
        }
        g
    }

    /// Cokernel of the relation matrix: `Z^cols / rowspace(matrix)`.
    pub fn from_presentation(matrix: &PresentationMatrix) -> Result<Self> {
        let diag = smith_normal_form(matrix);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let free_rank = (matrix.cols() - nonzero) as u32;
        let mut torsion = Vec::new();
        for d in diag.iter().filter(|d| **d > BigUint::one()) {
            let d64 = d.to_u64().ok_or_else(|| Error::TorsionTooLarge(d.clone()))?;
            torsion.extend(PrimePower::factors_of(d64));
        }
        Ok(Self::from_parts(free_rank, torsion))
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[PrimePower] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Cyclic (including `0` and `Z`): at most one invariant factor overall.
    pub fn is_cyclic(&self) -> bool {
        match self.free_rank {
            0 => self.invariant_factors().len() <= 1,
            1 => self.torsion.is_empty(),
            _ => false,
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.torsion.iter().map(|q| BigUint::from(q.value())).product()
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Invariant factors `m_1 | m_2 | ...`, each `> 1`, of the torsion part.
    pub fn invariant_factors(&self) -> Vec<BigUint> {
        // Per prime, exponents in decreasing order; the i-th largest power of
        // every prime goes into the i-th factor counted from the top.
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for q in &self.torsion {
            match per_prime.last_mut() {
                Some((p, exps)) if *p == q.p => exps.push(q.a),
                _ => per_prime.push((q.p, vec![q.a])),
            }
        }
        let len = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors = vec![BigUint::one(); len];
        for (p, exps) in &per_prime {
            for (i, &a) in exps.iter().rev().enumerate() {
                factors[len - 1 - i] *= BigUint::from(*p).pow(a);
            }
        }
        factors
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self == other
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        Self::from_parts(self.free_rank + other.free_rank, torsion)
    }

    /// Distinct prime-power factors with their multiplicities.
    fn factor_runs(&self) -> Vec<(PrimePower, u32)> {
        let mut runs: Vec<(PrimePower, u32)> = Vec::new();
        for &q in &self.torsion {
            match runs.last_mut() {
                Some((r, m)) if *r == q => *m += 1,
                _ => runs.push((q, 1)),
            }
        }
        runs
    }

    /// Every direct summand up to isomorphism, sorted, without duplicates.
    ///
    /// By Krull-Schmidt these are `Z^s ⊕ T'` for `s <= free_rank` and `T'`
    /// a sub-multiset of the torsion factors.
    pub fn summands_up_to_iso(&self) -> Vec<AbelianGroup> {
        let runs = self.factor_runs();
        let mut torsion_parts: Vec<Vec<PrimePower>> = vec![Vec::new()];
        for &(q, mult) in &runs {
            let mut next = Vec::with_capacity(torsion_parts.len() * (mult as usize + 1));
            for part in &torsion_parts {
                for k in 0..=mult {
                    let mut p = part.clone();
                    p.extend(std::iter::repeat_n(q, k as usize));
                    next.push(p);
                }
            }
            torsion_parts = next;
        }
        let mut out: Vec<AbelianGroup> = (0..=self.free_rank)
            .flat_map(|s| {
                torsion_parts
                    .iter()
                    .map(move |t| AbelianGroup { free_rank: s, torsion: t.clone() })
            })
            .collect();
        out.sort();
        out
    }

    /// `(free_rank + 1) * prod (multiplicity + 1)` over distinct factors.
    pub fn count_summands(&self) -> u64 {
        self.factor_runs()
            .iter()
            .try_fold(self.free_rank as u64 + 1, |acc, &(_, m)| acc.checked_mul(m as u64 + 1))
            .expect("summand count exceeds u64")
    }

    pub fn is_summand_of(&self, other: &Self) -> bool {
        if self.free_rank > other.free_rank {
            return false;
        }
        let theirs = other.factor_runs();
        self.factor_runs().iter().all(|(q, m)| {
            theirs.iter().any(|(r, n)| r == q && m <= n)
        })
    }

    /// `A ⊗ B`. Uses `Z ⊗ X = X` and `Z/p^a ⊗ Z/q^b = Z/p^min(a,b)` when
    /// `p = q` (zero otherwise), extended bilinearly.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut torsion = Vec::new();
        for _ in 0..self.free_rank {
            torsion.extend_from_slice(&other.torsion);
        }
        for _ in 0..other.free_rank {
            torsion.extend_from_slice(&self.torsion);
        }
        torsion.extend(torsion_pairs(&self.torsion, &other.torsion));
        Self::from_parts(self.free_rank * other.free_rank, torsion)
    }

    /// `Tor(A, B)`: only torsion-torsion pairs contribute, each like `⊗`.
    pub fn tor(&self, other: &Self) -> Self {
        Self::from_parts(0, torsion_pairs(&self.torsion, &other.torsion))
    }
}

fn torsion_pairs<'a>(
    left: &'a [PrimePower],
    right: &'a [PrimePower],
) -> impl Iterator<Item = PrimePower> + 'a {
    left.iter().flat_map(move |x| {
        right
            .iter()
            .filter(move |y| y.p == x.p)
            .map(move |y| PrimePower { p: x.p, a: x.a.min(y.a) })
    })
}

impl Ord for AbelianGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.free_rank
            .cmp(&other.free_rank)
            .then_with(|| self.torsion_order().cmp(&other.torsion_order()))
            .then_with(|| self.torsion.cmp(&other.torsion))
    }
}

impl PartialOrd for AbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical literal: `0`, or `Z`/`Z^k` followed by `Z/m` for each
/// invariant factor in increasing order, joined by ` + `.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.invariant_factors().iter().map(|m| format!("Z/{m}")));
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::syntax::parse_group(s)
    }
}
