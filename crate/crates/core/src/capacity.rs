//! Capacity (number of dominated homotopy types) of each descriptor family.
//!
//! Results carry how much is actually known: an exact list of dominated
//! types, a bare count, or an upper bound realized by a candidate list.

use std::collections::BTreeMap;
use std::fmt;

use crate::abelian::{AbelianGroup, PrimePower};
use crate::error::{Error, Result};
use crate::spaces::SpaceDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CapacityKind {
    Exact,
    CountOnly,
    UpperBound,
}

impl CapacityKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::CountOnly => "count_only",
            Self::UpperBound => "upper_bound",
        }
    }
}

impl fmt::Display for CapacityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Exact => "exact",
            Self::CountOnly => "count only",
            Self::UpperBound => "upper bound",
        })
    }
}

/// Lists are normalized, sorted, and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CapacityResult {
    /// Every dominated homotopy type.
    Exact(Vec<SpaceDescriptor>),
    /// Only the number of dominated types is known.
    CountOnly(u64),
    /// Every dominated type is among these candidates; the capacity is at
    /// most their number.
    UpperBound(Vec<SpaceDescriptor>),
}

impl CapacityResult {
    pub fn kind(&self) -> CapacityKind {
        match self {
            Self::Exact(_) => CapacityKind::Exact,
            Self::CountOnly(_) => CapacityKind::CountOnly,
            Self::UpperBound(_) => CapacityKind::UpperBound,
        }
    }

    pub fn value(&self) -> u64 {
        match self {
            Self::Exact(list) | Self::UpperBound(list) => list.len() as u64,
            Self::CountOnly(n) => *n,
        }
    }

    pub fn dominated(&self) -> Option<&[SpaceDescriptor]> {
        match self {
            Self::Exact(list) | Self::UpperBound(list) => Some(list),
            Self::CountOnly(_) => None,
        }
    }
}

/// Prime-power components of `n` and all products of subsets of them, i.e.
/// the divisors `m` of `n` with `gcd(m, n/m) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryFactorization {
    pub n: u64,
    pub components: Vec<PrimePower>,
    /// Sorted ascending; `2^components.len()` entries.
    pub products: Vec<u64>,
}

pub fn unitary_divisor_products(n: u64) -> UnitaryFactorization {
    assert!(n >= 1, "unitary divisors need n >= 1");
    let components = PrimePower::factors_of(n);
    let mut products = vec![1u64];
    for q in &components {
        let v = q.value();
        let extended: Vec<u64> = products.iter().map(|m| m * v).collect();
        products.extend(extended);
    }
    products.sort_unstable();
    UnitaryFactorization { n, components, products }
}

/// `2^ω(n) · (r + 1)`, where `ω(n)` counts the distinct primes of `n`.
pub fn zn_bound(n: u64, h2_rank: u32) -> u64 {
    let omega = PrimePower::factors_of(n).len() as u32;
    (1u64 << omega) * (h2_rank as u64 + 1)
}

fn sorted(mut list: Vec<SpaceDescriptor>) -> Vec<SpaceDescriptor> {
    list.sort();
    list.dedup();
    list
}

fn moore(group: AbelianGroup, degree: u32) -> SpaceDescriptor {
    if group.is_trivial() {
        SpaceDescriptor::Point
    } else {
        SpaceDescriptor::MooreSpace { group, degree }
            .normalize()
            .expect("summand of a valid Moore group")
    }
}

fn eilenberg_maclane(group: AbelianGroup, degree: u32) -> SpaceDescriptor {
    if group.is_trivial() {
        SpaceDescriptor::Point
    } else {
        SpaceDescriptor::EilenbergMacLane { group, degree }
            .normalize()
            .expect("summand of a valid Eilenberg-MacLane group")
    }
}

/// Sub-wedges `∨_n ∨_{j_n} S^n` with `0 <= j_n <= i_n`.
fn sub_wedges(map: &BTreeMap<u32, u32>) -> Vec<SpaceDescriptor> {
    let mut acc: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new()];
    for (&n, &count) in map {
        acc = acc
            .into_iter()
            .flat_map(|w| {
                (0..=count).map(move |j| {
                    let mut w = w.clone();
                    if j > 0 {
                        w.insert(n, j);
                    }
                    w
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|w| SpaceDescriptor::WedgeOfSpheres(w).normalize().expect("valid sub-wedge"))
        .collect()
}

pub fn capacity_of(d: &SpaceDescriptor) -> Result<CapacityResult> {
    use SpaceDescriptor::*;
    let d = d.normalize()?;
    let exact = |list: Vec<SpaceDescriptor>| Ok(CapacityResult::Exact(sorted(list)));
    match &d {
        Point => exact(vec![Point]),
        Sphere(_) | LensSpace { .. } | RealProjective(_) => exact(vec![Point, d.clone()]),
        WedgeOfSpheres(map) => exact(sub_wedges(map)),
        MooreSpace { group, degree } => exact(
            group.summands_up_to_iso().into_iter().map(|s| moore(s, *degree)).collect(),
        ),
        EilenbergMacLane { group, degree } => exact(
            group
                .summands_up_to_iso()
                .into_iter()
                .map(|s| eilenberg_maclane(s, *degree))
                .collect(),
        ),
        ProductOfSpheres(n, m) => exact(vec![Point, Sphere(*n), Sphere(*m), d.clone()]),
        Surface { orientable: true, genus } => Ok(CapacityResult::CountOnly(*genus as u64 + 2)),
        Surface { orientable: false, genus } => {
            Ok(CapacityResult::CountOnly(*genus as u64 / 2 + 2))
        }
        FreePi1Complex { pi1_rank, h2_rank } => Ok(CapacityResult::CountOnly(
            (*pi1_rank as u64 + 1) * (*h2_rank as u64 + 1),
        )),
        ZnComplex { n, h2_rank } => Ok(CapacityResult::UpperBound(zn_candidates(*n, *h2_rank))),
        PseudoProjectivePlane(n) => Ok(CapacityResult::UpperBound(zn_candidates(*n, 0))),
    }
}

/// `P_m ∨ k S^2` for every unitary divisor product `m` of `n` and `k <= r`.
fn zn_candidates(n: u64, h2_rank: u32) -> Vec<SpaceDescriptor> {
    let products = unitary_divisor_products(n).products;
    let list = products
        .iter()
        .flat_map(|&m| {
            (0..=h2_rank).map(move |k| {
                SpaceDescriptor::ZnComplex { n: m, h2_rank: k }
                    .normalize()
                    .expect("valid candidate")
            })
        })
        .collect();
    sorted(list)
}

/// Dominated (or candidate) list; fails for families known only by count.
pub fn enumerate_dominated(d: &SpaceDescriptor) -> Result<Vec<SpaceDescriptor>> {
    match capacity_of(d)? {
        CapacityResult::Exact(list) | CapacityResult::UpperBound(list) => Ok(list),
        CapacityResult::CountOnly(n) => Err(Error::EnumerationUnavailable(n)),
    }
}
