//! Brute-force ground truth on small finite abelian groups.
//!
//! Groups are materialized element by element, every subgroup is enumerated,
//! and direct summands are found by searching for complements. Nothing here
//! relies on the structure theory used in [`crate::abelian`], except that the
//! isomorphism type of a subgroup is read off a presentation through Smith
//! normal form.

use std::collections::HashMap;

use crate::abelian::{AbelianGroup, PresentationMatrix, PrimePower};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_BOUND: u64 = 512;

/// `Z/n_1 ⊕ ... ⊕ Z/n_k`, elements encoded as mixed-radix indices with the
/// first coordinate varying fastest. Index 0 is the identity.
#[derive(Clone, Debug)]
pub struct ExplicitFiniteGroup {
    cyclic_orders: Vec<u64>,
    order: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
}

impl ExplicitFiniteGroup {
    pub fn new(cyclic_orders: &[u64]) -> Result<Self> {
        Self::with_bound(cyclic_orders, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(cyclic_orders: &[u64], bound: u64) -> Result<Self> {
        if let Some(&n) = cyclic_orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("cyclic order {n} must be at least 2")));
        }
        let order = cyclic_orders
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .unwrap_or(u64::MAX);
        let bound = bound.min(u16::MAX as u64 + 1);
        if order > bound {
            return Err(Error::OrderTooLarge { order, bound });
        }
        let order = order as usize;
        let mut g = Self {
            cyclic_orders: cyclic_orders.to_vec(),
            order,
            add: Vec::new(),
            neg: Vec::new(),
        };
        g.add = (0..order * order)
            .map(|ij| {
                let (a, b) = (g.coords(ij / order), g.coords(ij % order));
                let sum: Vec<u64> = a
                    .iter()
                    .zip(&b)
                    .zip(&g.cyclic_orders)
                    .map(|((x, y), n)| (x + y) % n)
                    .collect();
                g.index(&sum) as u16
            })
            .collect();
        g.neg = (0..order)
            .map(|i| (0..order).find(|&j| g.add[i * order + j] == 0).expect("inverse") as u16)
            .collect();
        Ok(g)
    }

    /// The primary decomposition of a finite `AbelianGroup`, materialized.
    pub fn from_abelian(group: &AbelianGroup) -> Result<Self> {
        Self::from_abelian_with_bound(group, DEFAULT_ORDER_BOUND)
    }

    pub fn from_abelian_with_bound(group: &AbelianGroup, bound: u64) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::InvalidGroup(format!("{group} is infinite")));
        }
        let orders: Vec<u64> = group.torsion().iter().map(PrimePower::value).collect();
        Self::with_bound(&orders, bound)
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coords(&self, mut element: usize) -> Vec<u64> {
        self.cyclic_orders
            .iter()
            .map(|&n| {
                let c = element as u64 % n;
                element /= n as usize;
                c
            })
            .collect()
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.cyclic_orders)
            .rev()
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + (c % n) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// The same group in canonical form.
    pub fn canonical(&self) -> AbelianGroup {
        AbelianGroup::from_cyclic_orders(0, &self.cyclic_orders)
    }

    fn words(&self) -> usize {
        self.order.div_ceil(64)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(words: usize) -> Self {
        Self(vec![0; words])
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn meets_only_at_identity(&self, other: &Self) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .all(|(w, (a, b))| a & b == if w == 0 { 1 } else { 0 })
    }
}

/// A subgroup, stored as its sorted member list.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    parent: &'g ExplicitFiniteGroup,
    members: Vec<usize>,
    generators: Vec<usize>,
    bits: Bits,
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bits({} words)", self.0.len())
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    /// Checks that `elements` contains the identity and is closed under
    /// addition and negation.
    pub fn from_elements(parent: &'g ExplicitFiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut bits = Bits::empty(parent.words());
        for &e in elements {
            if e >= parent.order() {
                return Err(Error::NotASubgroup(format!("{e} is not an element")));
            }
            bits.insert(e);
        }
        if !bits.contains(0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let members: Vec<usize> = (0..parent.order()).filter(|&i| bits.contains(i)).collect();
        for &a in &members {
            if !bits.contains(parent.neg(a)) {
                return Err(Error::NotASubgroup(format!("no inverse for {a}")));
            }
            for &b in &members {
                if !bits.contains(parent.add(a, b)) {
                    return Err(Error::NotASubgroup(format!("{a} + {b} escapes")));
                }
            }
        }
        if !parent.order().is_multiple_of(members.len()) {
            return Err(Error::NotASubgroup("order does not divide the group order".into()));
        }
        // greedy generating set
        let mut sub = Self::trivial(parent);
        for &m in &members {
            if !sub.contains(m) {
                sub = sub.join(m);
            }
        }
        Ok(sub)
    }

    fn trivial(parent: &'g ExplicitFiniteGroup) -> Self {
        let mut bits = Bits::empty(parent.words());
        bits.insert(0);
        Self { parent, members: vec![0], generators: Vec::new(), bits }
    }

    /// `self + <g>`, as the union of the cosets `self + k g`.
    fn join(&self, g: usize) -> Self {
        let parent = self.parent;
        let mut bits = self.bits.clone();
        let mut members = self.members.clone();
        let mut shift = g;
        while !self.bits.contains(shift) {
            for &h in &self.members {
                let x = parent.add(h, shift);
                bits.insert(x);
                members.push(x);
            }
            shift = parent.add(shift, g);
        }
        members.sort_unstable();
        let mut generators = self.generators.clone();
        generators.push(g);
        Self { parent, members, generators, bits }
    }

    pub fn parent(&self) -> &'g ExplicitFiniteGroup {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits.contains(element)
    }

    pub fn intersection(&self, other: &Self) -> Vec<usize> {
        self.members.iter().copied().filter(|&m| other.contains(m)).collect()
    }
}

/// Every subgroup of a group, sorted by order and then member list.
pub struct SubgroupLattice<'g> {
    group: &'g ExplicitFiniteGroup,
    subgroups: Vec<Subgroup<'g>>,
}

impl<'g> SubgroupLattice<'g> {
    /// Closes the trivial subgroup under joins with cyclic subgroups,
    /// memoizing on member sets.
    pub fn new(group: &'g ExplicitFiniteGroup) -> Self {
        let trivial = Subgroup::trivial(group);

        // one generator per distinct cyclic subgroup
        let mut cyclic_seen: HashMap<Bits, ()> = HashMap::new();
        let mut cyclic_gens = Vec::new();
        for g in 1..group.order() {
            let c = trivial.join(g);
            if cyclic_seen.insert(c.bits, ()).is_none() {
                cyclic_gens.push(g);
            }
        }

        let mut seen: HashMap<Bits, usize> = HashMap::new();
        seen.insert(trivial.bits.clone(), 0);
        let mut subgroups = vec![trivial];
        let mut next = 0;
        while next < subgroups.len() {
            for &g in &cyclic_gens {
                if subgroups[next].contains(g) {
                    continue;
                }
                let joined = subgroups[next].join(g);
                if !seen.contains_key(&joined.bits) {
                    seen.insert(joined.bits.clone(), subgroups.len());
                    subgroups.push(joined);
                }
            }
            next += 1;
        }
        subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Self { group, subgroups }
    }

    pub fn group(&self) -> &'g ExplicitFiniteGroup {
        self.group
    }

    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    fn of_order(&self, order: usize) -> &[Subgroup<'g>] {
        let lo = self.subgroups.partition_point(|s| s.order() < order);
        let hi = self.subgroups.partition_point(|s| s.order() <= order);
        &self.subgroups[lo..hi]
    }

    /// Some `K` has `H ∩ K = 0` and `H + K = G`. With trivial intersection
    /// the second condition is `|H| |K| = |G|`.
    pub fn is_direct_summand(&self, h: &Subgroup<'_>) -> bool {
        self.complement(h).is_some()
    }

    pub fn complement(&self, h: &Subgroup<'_>) -> Option<&Subgroup<'g>> {
        let order = self.group.order();
        if !order.is_multiple_of(h.order()) {
            return None;
        }
        self.of_order(order / h.order())
            .iter()
            .find(|k| h.bits.meets_only_at_identity(&k.bits))
    }

    /// Isomorphism classes of subgroups that have a complement.
    pub fn summand_classes(&self) -> Vec<AbelianGroup> {
        let mut classes: Vec<AbelianGroup> = Vec::new();
        for h in &self.subgroups {
            let class = subgroup_iso_type(h);
            if !classes.contains(&class) && self.is_direct_summand(h) {
                classes.push(class);
            }
        }
        classes.sort();
        classes
    }
}

pub fn all_subgroups(group: &ExplicitFiniteGroup) -> Vec<Subgroup<'_>> {
    SubgroupLattice::new(group).subgroups
}

/// Exhaustive complement search in the full lattice of `h`'s parent.
pub fn is_direct_summand(h: &Subgroup<'_>) -> bool {
    SubgroupLattice::new(h.parent()).is_direct_summand(h)
}

pub fn bruteforce_summand_classes(group: &ExplicitFiniteGroup) -> Vec<AbelianGroup> {
    SubgroupLattice::new(group).summand_classes()
}

/// Isomorphism type of `h` from a polycyclic presentation on its generators.
///
/// Adding generators one at a time, the relative order `r_j` of `g_j` over
/// the previous span and the normal-form coordinates of `r_j g_j` give one
/// relation each. The relation matrix is lower triangular with determinant
/// `|H|`, so these relations present `H` exactly; Smith normal form reads off
/// the invariant factors.
pub fn subgroup_iso_type(h: &Subgroup<'_>) -> AbelianGroup {
    let g = h.parent();
    // coords[e] = exponents of element e over the generators kept so far
    let mut coords: Vec<Option<Vec<i64>>> = vec![None; g.order()];
    coords[0] = Some(Vec::new());
    let mut span = vec![0usize];
    let mut relations: Vec<Vec<i64>> = Vec::new();

    for &gen in h.generators() {
        let mut rel_order = 1i64;
        let mut x = gen;
        while coords[x].is_none() {
            x = g.add(x, gen);
            rel_order += 1;
        }
        if rel_order == 1 {
            continue;
        }
        let mut row: Vec<i64> = coords[x].as_ref().expect("in span").iter().map(|c| -c).collect();
        row.push(rel_order);
        relations.push(row);

        let mut extended = Vec::with_capacity(span.len() * rel_order as usize);
        for &e in &span {
            let mut c = coords[e].take().expect("in span");
            c.push(0);
            coords[e] = Some(c);
        }
        for &e in &span {
            let base = coords[e].clone().expect("in span");
            let mut y = e;
            for t in 1..rel_order {
                y = g.add(y, gen);
                let mut c = base.clone();
                *c.last_mut().expect("nonempty") = t;
                coords[y] = Some(c);
                extended.push(y);
            }
        }
        span.extend(extended);
    }

    let cols = relations.len();
    let rows = relations.into_iter().map(|mut r| {
        r.resize(cols, 0);
        r
    });
    let matrix = PresentationMatrix::from_rows(cols, rows).expect("square relation matrix");
    AbelianGroup::from_presentation(&matrix).expect("small torsion")
}

/// Every finite abelian group of order at most `max_order`, each once, as
/// multisets of prime powers.
pub fn finite_abelian_groups_up_to(max_order: u64) -> Vec<AbelianGroup> {
    let powers: Vec<PrimePower> = (2..=max_order)
        .flat_map(|n| {
            let f = PrimePower::factors_of(n);
            (f.len() == 1).then(|| f[0])
        })
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<PrimePower> = Vec::new();
    fn walk(
        powers: &[PrimePower],
        start: usize,
        order: u64,
        max: u64,
        stack: &mut Vec<PrimePower>,
        out: &mut Vec<AbelianGroup>,
    ) {
        out.push(AbelianGroup::from_parts(0, stack.iter().copied()));
        for (i, q) in powers.iter().enumerate().skip(start) {
            if order * q.value() > max {
                continue;
            }
            stack.push(*q);
            walk(powers, i, order * q.value(), max, stack, out);
            stack.pop();
        }
    }
    if max_order >= 1 {
        walk(&powers, 0, 1, max_order, &mut stack, &mut out);
    }
    out.sort();
    out
}
