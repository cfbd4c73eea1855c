//! Symbolic descriptors for the polyhedron families with known capacity.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::abelian::{arith::gcd, AbelianGroup};
use crate::error::{Error, Result};

/// One of the classified polyhedron families, up to homotopy type.
///
/// Values can be built in non-normal form (`MooreSpace(Z, 4)` is `S^4`);
/// [`SpaceDescriptor::normalize`] rewrites to a canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    Point,
    Sphere(u32),
    /// Dimension to number of spheres of that dimension.
    WedgeOfSpheres(BTreeMap<u32, u32>),
    MooreSpace { group: AbelianGroup, degree: u32 },
    EilenbergMacLane { group: AbelianGroup, degree: u32 },
    ProductOfSpheres(u32, u32),
    LensSpace { p: u64, q: u64 },
    RealProjective(u32),
    /// Non-orientable genus counts cross-caps: `N_1 = RP^2`, `N_2` = Klein bottle.
    Surface { orientable: bool, genus: u32 },
    /// 2-complex with fundamental group `Z/n` and `rank H_2 = h2_rank`; its
    /// homotopy type is `P_n ∨ h2_rank S^2`.
    ZnComplex { n: u64, h2_rank: u32 },
    /// `S^1` with a 2-cell attached along a degree-`n` map.
    PseudoProjectivePlane(u64),
    /// 2-complex with free fundamental group of rank `pi1_rank`.
    FreePi1Complex { pi1_rank: u32, h2_rank: u32 },
}

/// Fundamental group as reported for a descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Trivial,
    /// Free group of rank at least 2.
    FreeOfRank(u32),
    Abelian(AbelianGroup),
    /// Nonabelian closed-surface group.
    SurfaceGroup { orientable: bool, genus: u32 },
}

impl GroupDescriptor {
    pub fn abelian(group: AbelianGroup) -> Self {
        if group.is_trivial() {
            Self::Trivial
        } else {
            Self::Abelian(group)
        }
    }

    pub fn free(rank: u32) -> Self {
        match rank {
            0 => Self::Trivial,
            1 => Self::Abelian(AbelianGroup::free(1)),
            k => Self::FreeOfRank(k),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trivial => f.write_str("1"),
            Self::FreeOfRank(k) => write!(f, "F{k}"),
            Self::Abelian(a) => write!(f, "{a}"),
            Self::SurfaceGroup { orientable: true, genus } => write!(f, "pi1(Sg({genus}))"),
            Self::SurfaceGroup { orientable: false, genus } => write!(f, "pi1(Ng({genus}))"),
        }
    }
}

impl SpaceDescriptor {
    /// `L(p, q)` with `q` reduced mod `p`.
    pub fn lens(p: u64, q: u64) -> Self {
        let q = if p == 0 { q } else { q % p };
        Self::LensSpace { p, q }
    }

    /// `k` copies of `S^n` wedged together, in normal form.
    pub fn wedge(n: u32, k: u32) -> Self {
        Self::WedgeOfSpheres(BTreeMap::from([(n, k)])).normalized_unchecked()
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::Point => "point",
            Self::Sphere(_) => "sphere",
            Self::WedgeOfSpheres(_) => "wedge of spheres",
            Self::MooreSpace { .. } => "Moore space",
            Self::EilenbergMacLane { .. } => "Eilenberg-MacLane space",
            Self::ProductOfSpheres(..) => "product of spheres",
            Self::LensSpace { .. } => "lens space",
            Self::RealProjective(_) => "real projective space",
            Self::Surface { .. } => "surface",
            Self::ZnComplex { .. } => "Z_n-complex",
            Self::PseudoProjectivePlane(_) => "pseudo projective plane",
            Self::FreePi1Complex { .. } => "2-complex with free fundamental group",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDescriptor(msg));
        match self {
            Self::Point => Ok(()),
            Self::Sphere(0) => bad("sphere dimension must be at least 1".into()),
            Self::WedgeOfSpheres(map) => {
                if map.contains_key(&0) {
                    return bad("wedge summands must be spheres of dimension at least 1".into());
                }
                if let Some((n, _)) = map.iter().find(|(_, &k)| k == 0) {
                    return bad(format!("wedge has zero copies of S{n}"));
                }
                Ok(())
            }
            Self::MooreSpace { group, degree } => {
                if group.is_trivial() {
                    bad("Moore space needs a nontrivial group".into())
                } else if *degree < 2 {
                    bad(format!("Moore space degree must be at least 2, got {degree}"))
                } else {
                    Ok(())
                }
            }
            Self::EilenbergMacLane { group, degree } => {
                if group.is_trivial() {
                    bad("Eilenberg-MacLane space needs a nontrivial group".into())
                } else if *degree == 0 {
                    bad("Eilenberg-MacLane degree must be at least 1".into())
                } else {
                    Ok(())
                }
            }
            Self::ProductOfSpheres(n, m) if *n == 0 || *m == 0 => {
                bad("product factors must be spheres of dimension at least 1".into())
            }
            Self::LensSpace { p, q } => {
                if *p == 0 {
                    bad("lens space needs p >= 1".into())
                } else if gcd(*p, *q) != 1 {
                    bad(format!("L({p},{q}) needs gcd(p, q) = 1"))
                } else {
                    Ok(())
                }
            }
            Self::RealProjective(0) => bad("RP^n needs n >= 1".into()),
            Self::Surface { orientable: false, genus: 0 } => {
                bad("non-orientable surface needs genus >= 1".into())
            }
            Self::ZnComplex { n: 0, .. } => bad("Z_n-complex needs n >= 1".into()),
            Self::PseudoProjectivePlane(n) if *n < 2 => {
                bad(format!("pseudo projective plane needs n >= 2, got {n}"))
            }
            _ => Ok(()),
        }
    }

    /// Canonical representative of the homotopy type. Idempotent.
    pub fn normalize(&self) -> Result<Self> {
        self.validate()?;
        Ok(self.normalized_unchecked())
    }

    fn normalized_unchecked(&self) -> Self {
        match self {
            Self::WedgeOfSpheres(map) => {
                let map: BTreeMap<u32, u32> =
                    map.iter().filter(|(_, &k)| k > 0).map(|(&n, &k)| (n, k)).collect();
                let mut entries = map.iter();
                match (entries.next(), entries.next()) {
                    (None, _) => Self::Point,
                    (Some((&n, 1)), None) => Self::Sphere(n),
                    _ => Self::WedgeOfSpheres(map.clone()),
                }
            }
            Self::MooreSpace { group, degree } if group.is_free() => {
                Self::wedge(*degree, group.free_rank())
            }
            Self::EilenbergMacLane { group, degree: 1 } if *group == AbelianGroup::free(1) => {
                Self::Sphere(1)
            }
            Self::ProductOfSpheres(n, m) if n > m => Self::ProductOfSpheres(*m, *n),
            Self::LensSpace { p: 1, .. } => Self::Sphere(3),
            Self::LensSpace { p, q } => Self::lens(*p, *q),
            Self::Surface { orientable: true, genus: 0 } => Self::Sphere(2),
            Self::Surface { orientable: false, genus: 1 } => Self::RealProjective(2),
            Self::ZnComplex { n: 1, h2_rank } => Self::wedge(2, *h2_rank),
            Self::ZnComplex { n, h2_rank: 0 } => Self::PseudoProjectivePlane(*n),
            _ => self.clone(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.validate().is_ok() && self.normalized_unchecked() == *self
    }

    /// Same homotopy type as far as normal forms can tell.
    pub fn descriptor_equal(&self, other: &Self) -> Result<bool> {
        Ok(self.normalize()? == other.normalize()?)
    }

    pub fn fundamental_group(&self) -> Result<GroupDescriptor> {
        self.validate()?;
        let z = || AbelianGroup::free(1);
        Ok(match self {
            Self::Point | Self::MooreSpace { .. } => GroupDescriptor::Trivial,
            Self::Sphere(n) => GroupDescriptor::free((*n == 1) as u32),
            Self::WedgeOfSpheres(map) => GroupDescriptor::free(map.get(&1).copied().unwrap_or(0)),
            Self::EilenbergMacLane { group, degree: 1 } => GroupDescriptor::abelian(group.clone()),
            Self::EilenbergMacLane { .. } => GroupDescriptor::Trivial,
            Self::ProductOfSpheres(n, m) => {
                GroupDescriptor::abelian(AbelianGroup::free((*n == 1) as u32 + (*m == 1) as u32))
            }
            Self::LensSpace { p, .. } => GroupDescriptor::abelian(AbelianGroup::cyclic(*p)),
            Self::RealProjective(1) => GroupDescriptor::abelian(z()),
            Self::RealProjective(_) => GroupDescriptor::abelian(AbelianGroup::cyclic(2)),
            Self::Surface { orientable: true, genus: 0 } => GroupDescriptor::Trivial,
            Self::Surface { orientable: true, genus: 1 } => {
                GroupDescriptor::abelian(AbelianGroup::free(2))
            }
            Self::Surface { orientable: false, genus: 1 } => {
                GroupDescriptor::abelian(AbelianGroup::cyclic(2))
            }
            Self::Surface { orientable, genus } => {
                GroupDescriptor::SurfaceGroup { orientable: *orientable, genus: *genus }
            }
            Self::ZnComplex { n, .. } | Self::PseudoProjectivePlane(n) => {
                GroupDescriptor::abelian(AbelianGroup::cyclic(*n))
            }
            Self::FreePi1Complex { pi1_rank, .. } => GroupDescriptor::free(*pi1_rank),
        })
    }

    fn family_rank(&self) -> u8 {
        match self {
            Self::Point => 0,
            Self::Sphere(_) => 1,
            Self::WedgeOfSpheres(_) => 2,
            Self::MooreSpace { .. } => 3,
            Self::EilenbergMacLane { .. } => 4,
            Self::ProductOfSpheres(..) => 5,
            Self::LensSpace { .. } => 6,
            Self::RealProjective(_) => 7,
            Self::Surface { .. } => 8,
            Self::ZnComplex { .. } | Self::PseudoProjectivePlane(_) => 9,
            Self::FreePi1Complex { .. } => 10,
        }
    }
}

/// Family first, then parameters. `P(n)` sorts as `ZC(n;0)` so each
/// pseudo projective plane sits next to its wedges with `S^2`.
impl Ord for SpaceDescriptor {
    fn cmp(&self, other: &Self) -> Ordering {
        use SpaceDescriptor::*;
        let zn = |d: &Self| match d {
            ZnComplex { n, h2_rank } => (*n, *h2_rank, 1u8),
            PseudoProjectivePlane(n) => (*n, 0, 0),
            _ => unreachable!(),
        };
        match (self, other) {
            (Point, Point) => Ordering::Equal,
            (Sphere(a), Sphere(b)) => a.cmp(b),
            (WedgeOfSpheres(a), WedgeOfSpheres(b)) => a.cmp(b),
            (MooreSpace { group: a, degree: m }, MooreSpace { group: b, degree: n })
            | (
                EilenbergMacLane { group: a, degree: m },
                EilenbergMacLane { group: b, degree: n },
            ) => m.cmp(n).then_with(|| a.cmp(b)),
            (ProductOfSpheres(a, b), ProductOfSpheres(c, d)) => (a, b).cmp(&(c, d)),
            (LensSpace { p: a, q: b }, LensSpace { p: c, q: d }) => (a, b).cmp(&(c, d)),
            (RealProjective(a), RealProjective(b)) => a.cmp(b),
            (Surface { orientable: a, genus: b }, Surface { orientable: c, genus: d }) => {
                (!a, b).cmp(&(!c, d))
            }
            (
                FreePi1Complex { pi1_rank: a, h2_rank: b },
                FreePi1Complex { pi1_rank: c, h2_rank: d },
            ) => (a, b).cmp(&(c, d)),
            _ if self.family_rank() == 9 && other.family_rank() == 9 => zn(self).cmp(&zn(other)),
            _ => self.family_rank().cmp(&other.family_rank()),
        }
    }
}

impl PartialOrd for SpaceDescriptor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical expression; accepted back by [`crate::syntax::parse_expression`].
impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Point => f.write_str("pt"),
            Self::Sphere(n) => write!(f, "S{n}"),
            Self::WedgeOfSpheres(map) if map.is_empty() => f.write_str("pt"),
            Self::WedgeOfSpheres(map) => {
                let parts: Vec<String> = map
                    .iter()
                    .map(|(n, k)| if *k == 1 { format!("S{n}") } else { format!("S{n}*{k}") })
                    .collect();
                f.write_str(&parts.join(" v "))
            }
            Self::MooreSpace { group, degree } => write!(f, "M({group}, {degree})"),
            Self::EilenbergMacLane { group, degree } => write!(f, "K({group}, {degree})"),
            Self::ProductOfSpheres(n, m) => write!(f, "S{n} x S{m}"),
            Self::LensSpace { p, q } => write!(f, "L({p},{q})"),
            Self::RealProjective(n) => write!(f, "RP{n}"),
            Self::Surface { orientable: true, genus } => write!(f, "Sg({genus})"),
            Self::Surface { orientable: false, genus } => write!(f, "Ng({genus})"),
            Self::ZnComplex { n, h2_rank } => write!(f, "ZC({n};{h2_rank})"),
            Self::PseudoProjectivePlane(n) => write!(f, "P({n})"),
            Self::FreePi1Complex { pi1_rank, h2_rank } => write!(f, "F({pi1_rank};{h2_rank})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpaceDescriptor::*;

    fn group(s: &str) -> AbelianGroup {
        s.parse().unwrap()
    }

    fn wedge(entries: &[(u32, u32)]) -> SpaceDescriptor {
        WedgeOfSpheres(entries.iter().copied().collect())
    }

    #[test]
    fn normalize_examples() {
        let moore = MooreSpace { group: group("Z"), degree: 4 };
        assert_eq!(moore.normalize().unwrap(), Sphere(4));
        assert_eq!(Surface { orientable: true, genus: 0 }.normalize().unwrap(), Sphere(2));
        assert_eq!(ZnComplex { n: 1, h2_rank: 3 }.normalize().unwrap(), wedge(&[(2, 3)]));
    }

    #[test]
    fn normalize_rewrites() {
        let free_moore = MooreSpace { group: group("Z^3"), degree: 5 };
        assert_eq!(free_moore.normalize().unwrap(), wedge(&[(5, 3)]));
        let circle = EilenbergMacLane { group: group("Z"), degree: 1 };
        assert_eq!(circle.normalize().unwrap(), Sphere(1));
        assert_eq!(SpaceDescriptor::lens(1, 0).normalize().unwrap(), Sphere(3));
        assert_eq!(Surface { orientable: false, genus: 1 }.normalize().unwrap(), RealProjective(2));
        assert_eq!(ZnComplex { n: 1, h2_rank: 0 }.normalize().unwrap(), Point);
        assert_eq!(ZnComplex { n: 1, h2_rank: 1 }.normalize().unwrap(), Sphere(2));
        assert_eq!(ZnComplex { n: 6, h2_rank: 0 }.normalize().unwrap(), PseudoProjectivePlane(6));
        assert_eq!(wedge(&[]).normalize().unwrap(), Point);
        assert_eq!(wedge(&[(3, 1)]).normalize().unwrap(), Sphere(3));
        assert_eq!(ProductOfSpheres(5, 2).normalize().unwrap(), ProductOfSpheres(2, 5));
        let torsion_moore = MooreSpace { group: group("Z/2"), degree: 3 };
        assert_eq!(torsion_moore.normalize().unwrap(), torsion_moore);
    }

    #[test]
    fn invalid_descriptors() {
        let cases = [
            Surface { orientable: false, genus: 0 },
            LensSpace { p: 4, q: 2 },
            LensSpace { p: 0, q: 1 },
            Sphere(0),
            wedge(&[(2, 0)]),
            MooreSpace { group: AbelianGroup::zero(), degree: 3 },
            MooreSpace { group: group("Z"), degree: 1 },
            EilenbergMacLane { group: group("Z/2"), degree: 0 },
            ProductOfSpheres(0, 2),
            RealProjective(0),
            ZnComplex { n: 0, h2_rank: 1 },
            PseudoProjectivePlane(1),
        ];
        for d in cases {
            assert!(
                matches!(d.normalize(), Err(Error::InvalidDescriptor(_))),
                "{d:?} should be rejected"
            );
        }
    }

    #[test]
    fn fundamental_group_examples() {
        assert_eq!(
            SpaceDescriptor::lens(5, 2).fundamental_group().unwrap(),
            GroupDescriptor::Abelian(AbelianGroup::cyclic(5))
        );
        assert_eq!(Sphere(7).fundamental_group().unwrap(), GroupDescriptor::Trivial);
        assert_eq!(wedge(&[(1, 3)]).fundamental_group().unwrap(), GroupDescriptor::FreeOfRank(3));
        assert_eq!(
            wedge(&[(1, 1), (2, 4)]).fundamental_group().unwrap(),
            GroupDescriptor::Abelian(group("Z"))
        );
        assert_eq!(
            ProductOfSpheres(1, 1).fundamental_group().unwrap(),
            GroupDescriptor::Abelian(group("Z^2"))
        );
        assert_eq!(
            Surface { orientable: false, genus: 2 }.fundamental_group().unwrap(),
            GroupDescriptor::SurfaceGroup { orientable: false, genus: 2 }
        );
        assert_eq!(
            FreePi1Complex { pi1_rank: 1, h2_rank: 2 }.fundamental_group().unwrap(),
            GroupDescriptor::Abelian(group("Z"))
        );
        assert_eq!(RealProjective(1).fundamental_group().unwrap(), GroupDescriptor::Abelian(group("Z")));
        assert_eq!(
            PseudoProjectivePlane(12).fundamental_group().unwrap(),
            GroupDescriptor::Abelian(group("Z/12"))
        );
    }

    #[test]
    fn equality_examples() {
        let m = MooreSpace { group: group("Z"), degree: 3 };
        assert!(m.descriptor_equal(&Sphere(3)).unwrap());
        assert!(Point.descriptor_equal(&Point).unwrap());
        assert!(SpaceDescriptor::lens(1, 0).descriptor_equal(&Sphere(3)).unwrap());
        assert!(!Sphere(2).descriptor_equal(&Sphere(3)).unwrap());
    }

    #[test]
    fn lens_reduces_q() {
        assert_eq!(SpaceDescriptor::lens(5, 7), LensSpace { p: 5, q: 2 });
        assert_eq!(LensSpace { p: 5, q: 7 }.normalize().unwrap(), LensSpace { p: 5, q: 2 });
    }

    #[test]
    fn ordering_groups_zn_with_pseudo_planes() {
        let mut v = vec![
            ZnComplex { n: 4, h2_rank: 1 },
            PseudoProjectivePlane(12),
            PseudoProjectivePlane(3),
            Sphere(2),
            ZnComplex { n: 3, h2_rank: 1 },
            Point,
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Point,
                Sphere(2),
                PseudoProjectivePlane(3),
                ZnComplex { n: 3, h2_rank: 1 },
                ZnComplex { n: 4, h2_rank: 1 },
                PseudoProjectivePlane(12),
            ]
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(wedge(&[(1, 3), (2, 1)]).to_string(), "S1*3 v S2");
        assert_eq!(
            MooreSpace { group: group("Z/4 + Z/2"), degree: 3 }.to_string(),
            "M(Z/2 + Z/4, 3)"
        );
        assert_eq!(ZnComplex { n: 12, h2_rank: 1 }.to_string(), "ZC(12;1)");
        assert_eq!(ProductOfSpheres(2, 3).to_string(), "S2 x S3");
    }
}
