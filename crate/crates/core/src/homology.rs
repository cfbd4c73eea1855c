//! Integral homology tables for the descriptor families.

use std::collections::BTreeMap;

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::spaces::SpaceDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truncation {
    Complete,
    /// Degrees above the bound were not computed and may be nonzero.
    TruncatedAbove(u32),
}

/// Homology by degree. Absent degrees are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedGroup {
    groups: BTreeMap<u32, AbelianGroup>,
    truncation: Truncation,
}

impl GradedGroup {
    /// Zero entries are dropped; so are entries above a truncation bound.
    pub fn new(groups: impl IntoIterator<Item = (u32, AbelianGroup)>, truncation: Truncation) -> Self {
        let groups = groups
            .into_iter()
            .filter(|(i, g)| {
                !g.is_trivial()
                    && match truncation {
                        Truncation::Complete => true,
                        Truncation::TruncatedAbove(n) => *i <= n,
                    }
            })
            .collect();
        Self { groups, truncation }
    }

    pub fn complete(groups: impl IntoIterator<Item = (u32, AbelianGroup)>) -> Self {
        Self::new(groups, Truncation::Complete)
    }

    /// Homology of a point.
    pub fn point() -> Self {
        Self::complete([(0, AbelianGroup::free(1))])
    }

    pub fn get(&self, degree: u32) -> AbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn is_complete(&self) -> bool {
        self.truncation == Truncation::Complete
    }

    /// Highest degree whose group is known, `None` if all are.
    pub fn known_through(&self) -> Option<u32> {
        match self.truncation {
            Truncation::Complete => None,
            Truncation::TruncatedAbove(n) => Some(n),
        }
    }

    /// Highest degree with a nonzero group.
    pub fn top_degree(&self) -> Option<u32> {
        self.groups.keys().next_back().copied()
    }

    /// Nonzero entries in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &AbelianGroup)> {
        self.groups.iter().map(|(i, g)| (*i, g))
    }

    pub fn betti(&self, degree: u32) -> u32 {
        self.groups.get(&degree).map_or(0, AbelianGroup::free_rank)
    }

    /// Alternating sum of Betti numbers; `None` for truncated tables.
    pub fn euler_characteristic(&self) -> Option<i64> {
        self.is_complete().then(|| {
            self.iter()
                .map(|(i, g)| if i % 2 == 0 { g.free_rank() as i64 } else { -(g.free_rank() as i64) })
                .sum()
        })
    }

    /// Drops degrees above `max_dim`, marking the result truncated only if
    /// something nonzero (or unknown) was cut off.
    pub fn truncate(&self, max_dim: u32) -> Self {
        let cut = match self.truncation {
            Truncation::TruncatedAbove(_) => true,
            Truncation::Complete => self.top_degree().is_some_and(|t| t > max_dim),
        };
        let bound = match self.truncation {
            Truncation::TruncatedAbove(n) => n.min(max_dim),
            Truncation::Complete => max_dim,
        };
        let truncation = if cut { Truncation::TruncatedAbove(bound) } else { Truncation::Complete };
        Self::new(self.groups.clone(), truncation)
    }
}

/// Künneth formula through degree `max_dim`:
/// `H_n(X × Y) = ⊕_{i+j=n} H_i ⊗ H_j ⊕ ⊕_{i+j=n-1} Tor(H_i, H_j)`.
pub fn kunneth(hx: &GradedGroup, hy: &GradedGroup, max_dim: u32) -> Result<GradedGroup> {
    for h in [hx, hy] {
        if let Some(n) = h.known_through() {
            if n < max_dim {
                return Err(Error::TruncationTooLow { requested: max_dim, available: n });
            }
        }
    }
    // With complete inputs the product's support is bounded, so compute all of
    // it and let `truncate` decide whether anything was cut.
    let through = match (hx.top_degree(), hy.top_degree(), hx.is_complete() && hy.is_complete()) {
        (Some(a), Some(b), true) => max_dim.max(a + b + 1),
        _ => max_dim,
    };
    let mut out = BTreeMap::new();
    for (i, a) in hx.iter() {
        for (j, b) in hy.iter() {
            let n = i + j;
            if n <= through {
                let entry: &mut AbelianGroup = out.entry(n).or_default();
                *entry = entry.direct_sum(&a.tensor(b));
            }
            if n < through {
                let entry: &mut AbelianGroup = out.entry(n + 1).or_default();
                *entry = entry.direct_sum(&a.tor(b));
            }
        }
    }
    if hx.is_complete() && hy.is_complete() {
        Ok(GradedGroup::complete(out).truncate(max_dim))
    } else {
        Ok(GradedGroup::new(out, Truncation::TruncatedAbove(max_dim)))
    }
}

/// Degree through which the CLI reports homology when no bound is given:
/// the top nonzero degree, or `2n + 1` for `K(A, n)` whose support is unbounded.
pub fn default_max_dim(d: &SpaceDescriptor) -> Result<u32> {
    if let SpaceDescriptor::EilenbergMacLane { group, degree } = d {
        if !group.is_free() {
            return Ok(2 * degree + 1);
        }
    }
    let h = full_homology(&d.normalize()?, 0)?;
    Ok(h.top_degree().unwrap_or(0))
}

/// Homology of `d` in degrees `0..=max_dim`.
pub fn homology_of(d: &SpaceDescriptor, max_dim: u32) -> Result<GradedGroup> {
    d.validate()?;
    Ok(full_homology(d, max_dim)?.truncate(max_dim))
}

fn z() -> AbelianGroup {
    AbelianGroup::free(1)
}

fn sphere(n: u32) -> GradedGroup {
    GradedGroup::complete([(0, z()), (n, z())])
}

/// Complete table, or for families with unbounded support a table truncated
/// at `max_dim`.
fn full_homology(d: &SpaceDescriptor, max_dim: u32) -> Result<GradedGroup> {
    use SpaceDescriptor::*;
    let table = |entries: Vec<(u32, AbelianGroup)>| GradedGroup::complete(entries);
    Ok(match d {
        Point => GradedGroup::point(),
        Sphere(n) => sphere(*n),
        WedgeOfSpheres(map) => {
            let mut entries = vec![(0, z())];
            entries.extend(map.iter().map(|(&n, &k)| (n, AbelianGroup::free(k))));
            table(entries)
        }
        MooreSpace { group, degree } => table(vec![(0, z()), (*degree, group.clone())]),
        EilenbergMacLane { group, degree: 1 } if group.is_free() => {
            // torus T^k: iterated Künneth of circles
            let mut acc = GradedGroup::point();
            for _ in 0..group.free_rank() {
                let top = acc.top_degree().unwrap_or(0) + 1;
                acc = kunneth(&acc, &sphere(1), top)?;
            }
            acc
        }
        EilenbergMacLane { group, degree: 1 } if group.is_cyclic() => {
            // finite cyclic: Z/m in every odd degree
            let entries = (0..=max_dim).map(|i| match i {
                0 => (0, z()),
                i if i % 2 == 1 => (i, group.clone()),
                i => (i, AbelianGroup::zero()),
            });
            GradedGroup::new(entries, Truncation::TruncatedAbove(max_dim))
        }
        EilenbergMacLane { group, degree } => {
            return Err(Error::UnsupportedHomology(format!("K({group}, {degree})")));
        }
        ProductOfSpheres(n, m) => kunneth(&sphere(*n), &sphere(*m), n + m)?,
        LensSpace { p, .. } => table(vec![(0, z()), (1, AbelianGroup::cyclic(*p)), (3, z())]),
        RealProjective(n) => {
            let mut entries = vec![(0, z())];
            entries.extend((1..*n).step_by(2).map(|i| (i, AbelianGroup::cyclic(2))));
            if n % 2 == 1 {
                entries.push((*n, z()));
            }
            table(entries)
        }
        Surface { orientable: true, genus } => {
            table(vec![(0, z()), (1, AbelianGroup::free(2 * genus)), (2, z())])
        }
        Surface { orientable: false, genus } => table(vec![
            (0, z()),
            (1, AbelianGroup::free(genus - 1).direct_sum(&AbelianGroup::cyclic(2))),
        ]),
        ZnComplex { n, h2_rank } => table(vec![
            (0, z()),
            (1, AbelianGroup::cyclic(*n)),
            (2, AbelianGroup::free(*h2_rank)),
        ]),
        PseudoProjectivePlane(n) => table(vec![(0, z()), (1, AbelianGroup::cyclic(*n))]),
        FreePi1Complex { pi1_rank, h2_rank } => table(vec![
            (0, z()),
            (1, AbelianGroup::free(*pi1_rank)),
            (2, AbelianGroup::free(*h2_rank)),
        ]),
    })
}
