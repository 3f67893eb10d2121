//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..n` and index 0 is always the identity. Every
//! group carries the recipe it was built from and a digest of its table, so
//! two builds of the same recipe are interchangeable and cache keys are
//! stable.

pub(crate) mod build;
mod iso;
mod ops;
mod spec;

pub use build::{BuildOptions, DEFAULT_ORDER_CAP};
pub use iso::{is_isomorphic, DEFAULT_ISO_CAP};
pub use spec::GroupSpec;

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bitset::BitSet;

/// Index of an element in its group's table.
pub type Elem = usize;

/// The identity element of every group.
pub const IDENTITY: Elem = 0;

/// SHA-256 of a multiplication table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContentHash(pub [u8; 32]);

impl ContentHash {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// First 16 hex digits; enough to tell catalog groups apart in reports.
    pub fn short(&self) -> String {
        self.hex()[..16].to_string()
    }
}

impl fmt::Debug for ContentHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContentHash({})", self.short())
    }
}

impl fmt::Display for ContentHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl Serialize for ContentHash {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

impl<'de> Deserialize<'de> for ContentHash {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s.len() != 64 {
            return Err(serde::de::Error::custom("content hash must be 64 hex digits"));
        }
        let mut out = [0u8; 32];
        for (i, byte) in out.iter_mut().enumerate() {
            *byte = u8::from_str_radix(&s[2 * i..2 * i + 2], 16)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(ContentHash(out))
    }
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u32>,
    labels: Vec<String>,
    generators: Vec<Elem>,
    recipe: GroupSpec,
    hash: ContentHash,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("hash", &self.hash)
            .finish()
    }
}

impl FiniteGroup {
    /// Wraps a table that is already known to be a group with identity 0.
    /// Used by constructions that are associative by design.
    pub(crate) fn from_trusted_table(
        order: usize,
        table: Vec<u16>,
        labels: Vec<String>,
        generators: Option<Vec<Elem>>,
        recipe: GroupSpec,
    ) -> FiniteGroup {
        debug_assert_eq!(table.len(), order * order);
        let mut inv = vec![0u16; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).expect("row without identity");
            inv[x] = y as u16;
        }
        let mut elem_order = vec![1u32; order];
        for x in 1..order {
            let mut k = 1u32;
            let mut y = x;
            while y != IDENTITY {
                y = table[y * order + x] as usize;
                k += 1;
            }
            elem_order[x] = k;
        }
        let hash = table_hash(order, &table);
        let mut g = FiniteGroup {
            order,
            table,
            inv,
            elem_order,
            labels,
            generators: Vec::new(),
            recipe,
            hash,
        };
        g.generators = match generators {
            Some(gens) => gens.into_iter().filter(|&x| x != IDENTITY).collect(),
            None => g.greedy_generators(0..order),
        };
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x] as usize
    }

    #[inline]
    pub fn order_of(&self, x: Elem) -> usize {
        self.elem_order[x] as usize
    }

    pub fn pow(&self, x: Elem, k: usize) -> Elem {
        let k = k % self.order_of(x);
        (0..k).fold(IDENTITY, |acc, _| self.mul(acc, x))
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
    }

    /// A generating set, in recipe order. Empty for the trivial group.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn recipe(&self) -> &GroupSpec {
        &self.recipe
    }

    pub fn content_hash(&self) -> ContentHash {
        self.hash
    }

    /// Row `x` of the table as element indices.
    pub fn row(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.table[x * self.order..(x + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &x)| g[i + 1..].iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Generators picked greedily in iteration order: an element is kept
    /// when it is not in the subgroup generated by the ones kept so far.
    pub fn greedy_generators(&self, elems: impl IntoIterator<Item = Elem>) -> Vec<Elem> {
        let mut c = Closure::new(self);
        for x in elems {
            c.add(x);
        }
        c.gens
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet {
        SubgroupSet::new(self, BitSet::from_indices(self.order, [IDENTITY]))
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::new(self, BitSet::full(self.order))
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: impl IntoIterator<Item = Elem>) -> SubgroupSet {
        let mut c = Closure::new(self);
        for x in seed {
            c.add(x);
        }
        c.finish()
    }

    /// Cyclic subgroup `⟨x⟩`.
    pub fn cyclic(&self, x: Elem) -> SubgroupSet {
        let mut bits = BitSet::new(self.order);
        let mut y = IDENTITY;
        loop {
            bits.insert(y);
            y = self.mul(y, x);
            if y == IDENTITY {
                break;
            }
        }
        SubgroupSet::new(self, bits)
    }

    /// True when `set` is closed under products and inverses and non-empty.
    pub fn is_subgroup(&self, set: &BitSet) -> bool {
        if !set.contains(IDENTITY) {
            return false;
        }
        let elems: Vec<Elem> = set.iter().collect();
        elems.iter().all(|&x| {
            set.contains(self.inv(x)) && elems.iter().all(|&y| set.contains(self.mul(x, y)))
        })
    }

    /// Exhaustive associativity check; O(n³).
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.mul(x, y);
                (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }
}

fn table_hash(order: usize, table: &[u16]) -> ContentHash {
    let mut h = Sha256::new();
    h.update((order as u32).to_le_bytes());
    let mut buf = Vec::with_capacity(table.len() * 2);
    for v in table {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    h.update(&buf);
    ContentHash(h.finalize().into())
}

/// Incremental subgroup closure.
///
/// Keeps the elements found so far in BFS order together with the
/// generators added; extending by a new element only multiplies the old
/// elements by that element and the new elements by every generator.
pub struct Closure<'g> {
    group: &'g FiniteGroup,
    members: BitSet,
    list: Vec<Elem>,
    gens: Vec<Elem>,
}

impl<'g> Closure<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        let mut members = BitSet::new(group.order());
        members.insert(IDENTITY);
        let mut list = Vec::with_capacity(group.order());
        list.push(IDENTITY);
        Closure {
            group,
            members,
            list,
            gens: Vec::new(),
        }
    }

    /// Starts from a known subgroup with known generators.
    pub fn from_parts(group: &'g FiniteGroup, members: &BitSet, gens: &[Elem]) -> Self {
        Closure {
            group,
            members: members.clone(),
            list: {
                let mut list = Vec::with_capacity(group.order());
                list.extend(members.iter());
                list
            },
            gens: gens.to_vec(),
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Adds `x` and closes. Returns true if the subgroup grew.
    pub fn add(&mut self, x: Elem) -> bool {
        if self.members.contains(x) {
            return false;
        }
        let g = self.group;
        let old = self.list.len();
        self.gens.push(x);
        for i in 0..old {
            let y = g.mul(self.list[i], x);
            if self.members.insert(y) {
                self.list.push(y);
            }
        }
        let mut i = old;
        while i < self.list.len() {
            let e = self.list[i];
            for &s in &self.gens {
                let y = g.mul(e, s);
                if self.members.insert(y) {
                    self.list.push(y);
                }
            }
            i += 1;
        }
        true
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn finish(self) -> SubgroupSet {
        SubgroupSet::new(self.group, self.members)
    }

    pub fn into_parts(self) -> (BitSet, Vec<Elem>) {
        (self.members, self.gens)
    }
}

/// A subgroup of a specific group, as a bitset over its element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    bits: BitSet,
    owner: ContentHash,
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(size {}, {:?})", self.size(), self.bits)
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then members.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl SubgroupSet {
    /// Caller guarantees `bits` is a subgroup of `group`.
    pub(crate) fn new(group: &FiniteGroup, bits: BitSet) -> Self {
        debug_assert_eq!(bits.universe(), group.order());
        SubgroupSet {
            bits,
            owner: group.content_hash(),
        }
    }

    /// Checks closure before wrapping.
    pub fn try_from_bits(group: &FiniteGroup, bits: BitSet) -> Option<Self> {
        (bits.universe() == group.order() && group.is_subgroup(&bits))
            .then(|| SubgroupSet::new(group, bits))
    }

    pub fn size(&self) -> usize {
        self.bits.count()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x)
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn into_bits(self) -> BitSet {
        self.bits
    }

    pub fn owner(&self) -> ContentHash {
        self.owner
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.bits.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        SubgroupSet {
            bits: self.bits.intersection(&other.bits),
            owner: self.owner,
        }
    }

    /// Subgroup generated by both.
    pub fn join(&self, group: &FiniteGroup, other: &SubgroupSet) -> SubgroupSet {
        let gens = group.greedy_generators(self.bits.iter());
        let mut c = Closure::from_parts(group, &self.bits, &gens);
        for x in other.bits.iter() {
            c.add(x);
        }
        c.finish()
    }

    pub fn labels(&self, group: &FiniteGroup) -> Vec<String> {
        self.bits.iter().map(|x| group.label(x).to_string()).collect()
    }
}
