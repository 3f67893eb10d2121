use super::{Closure, Elem, FiniteGroup, GroupSpec, SubgroupSet, IDENTITY};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Coset group together with the projection `G → G/N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset index of `g`.
    pub projection: Vec<Elem>,
}

impl Quotient {
    /// Preimage of a subset of the quotient.
    pub fn preimage(&self, sub: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.projection.len(),
            self.projection
                .iter()
                .enumerate()
                .filter(|(_, &c)| sub.contains(c))
                .map(|(g, _)| g),
        )
    }

    pub fn image(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.group.order(), set.iter().map(|g| self.projection[g]))
    }
}

/// Subgroup as a group of its own, elements renumbered in increasing order
/// of their index in the parent. `embedding[i]` is the parent index of the
/// subgroup's element `i`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub group: FiniteGroup,
    pub embedding: Vec<Elem>,
}

impl Induced {
    pub fn lift(&self, set: &BitSet, parent_order: usize) -> BitSet {
        BitSet::from_indices(parent_order, set.iter().map(|i| self.embedding[i]))
    }
}

impl FiniteGroup {
    /// Conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let n = self.order();
        let mut seen = BitSet::new(n);
        let mut classes = Vec::new();
        for x in 0..n {
            if seen.contains(x) {
                continue;
            }
            let mut class = BitSet::new(n);
            for g in 0..n {
                class.insert(self.conj(x, g));
            }
            seen.union_with(&class);
            classes.push(class.to_vec());
        }
        classes
    }

    pub fn centralizer(&self, x: Elem) -> SubgroupSet {
        let bits = BitSet::from_indices(
            self.order(),
            self.elements().filter(|&g| self.mul(g, x) == self.mul(x, g)),
        );
        SubgroupSet::new(self, bits)
    }

    pub fn center(&self) -> SubgroupSet {
        let gens = self.generators();
        let bits = BitSet::from_indices(
            self.order(),
            self.elements()
                .filter(|&z| gens.iter().all(|&g| self.mul(g, z) == self.mul(z, g))),
        );
        SubgroupSet::new(self, bits)
    }

    pub fn normalizer(&self, h: &SubgroupSet) -> SubgroupSet {
        let members = h.elements();
        let bits = BitSet::from_indices(
            self.order(),
            self.elements()
                .filter(|&g| members.iter().all(|&x| h.contains(self.conj(x, g)))),
        );
        SubgroupSet::new(self, bits)
    }

    /// Normal iff conjugation by each generator maps the set into itself.
    pub fn is_normal(&self, h: &BitSet) -> bool {
        let gens = self.generators();
        h.iter()
            .all(|x| gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: impl IntoIterator<Item = Elem>) -> SubgroupSet {
        let mut c = Closure::new(self);
        for x in seed {
            c.add(x);
        }
        let gens = self.generators().to_vec();
        loop {
            let mut grew = false;
            let current: Vec<Elem> = c.bits().iter().collect();
            for x in current {
                for &g in &gens {
                    grew |= c.add(self.conj(x, g));
                }
            }
            if !grew {
                return c.finish();
            }
        }
    }

    /// `G/N`, cosets numbered by least member (the coset of the identity is 0).
    pub fn quotient(&self, normal: &SubgroupSet) -> Result<Quotient> {
        if !self.is_normal(normal.bits()) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let members = normal.elements();
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in &members {
                projection[self.mul(x, m)] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = projection[self.mul(a, b)] as u16;
            }
        }
        let labels = reps.iter().map(|&r| self.label(r).to_string()).collect();
        let gens: Vec<Elem> = self.generators().iter().map(|&g| projection[g]).collect();
        let mut gdedup: Vec<Elem> = Vec::new();
        for g in gens {
            if g != IDENTITY && !gdedup.contains(&g) {
                gdedup.push(g);
            }
        }
        let rows = (0..q)
            .map(|i| (0..q).map(|j| table[i * q + j] as usize).collect())
            .collect();
        let group = FiniteGroup::from_trusted_table(
            q,
            table,
            labels,
            Some(gdedup),
            GroupSpec::Table { table: rows },
        );
        Ok(Quotient { group, projection })
    }

    /// The subgroup `h` as a standalone group.
    pub fn induced(&self, h: &BitSet) -> Induced {
        let embedding: Vec<Elem> = h.iter().collect();
        let m = embedding.len();
        let mut local = vec![u16::MAX; self.order()];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i as u16;
        }
        let mut table = vec![0u16; m * m];
        for (i, &a) in embedding.iter().enumerate() {
            for (j, &b) in embedding.iter().enumerate() {
                let v = local[self.mul(a, b)];
                debug_assert!(v != u16::MAX, "set is not closed");
                table[i * m + j] = v;
            }
        }
        let labels = embedding.iter().map(|&x| self.label(x).to_string()).collect();
        let rows = (0..m)
            .map(|i| (0..m).map(|j| table[i * m + j] as usize).collect())
            .collect();
        let group = FiniteGroup::from_trusted_table(m, table, labels, None, GroupSpec::Table { table: rows });
        Induced { group, embedding }
    }

    pub(crate) fn set_recipe(&mut self, recipe: GroupSpec) {
        self.recipe = recipe;
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog::builtin;

    #[test]
    fn center_sizes() {
        assert_eq!(builtin("S3").unwrap().center().size(), 1);
        assert_eq!(builtin("Q8").unwrap().center().size(), 2);
        let c6 = builtin("C6").unwrap();
        assert_eq!(c6.center().size(), 6);
    }

    #[test]
    fn center_matches_exhaustive_commutation() {
        for name in ["S3", "Q8", "D4", "A4", "S3xC2", "T100"] {
            let g = builtin(name).unwrap();
            let brute = g
                .elements()
                .filter(|&z| g.elements().all(|x| g.mul(x, z) == g.mul(z, x)))
                .count();
            assert_eq!(g.center().size(), brute, "{name}");
        }
    }

    #[test]
    fn classes_partition() {
        let g = builtin("S4").unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 5);
        assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), 24);
        assert_eq!(classes[0], vec![0]);
    }

    #[test]
    fn centralizer_and_normalizer() {
        let g = builtin("S3").unwrap();
        let t = g.elements().find(|&x| g.order_of(x) == 2).unwrap();
        assert_eq!(g.centralizer(t).size(), 2);
        let c2 = g.cyclic(t);
        assert_eq!(g.normalizer(&c2).size(), 2);
        let r = g.elements().find(|&x| g.order_of(x) == 3).unwrap();
        assert_eq!(g.normalizer(&g.cyclic(r)).size(), 6);
    }

    #[test]
    fn quotients() {
        let s3 = builtin("S3").unwrap();
        let r = s3.elements().find(|&x| s3.order_of(x) == 3).unwrap();
        let a3 = s3.cyclic(r);
        let q = s3.quotient(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.projection[0], 0);

        let t = s3.elements().find(|&x| s3.order_of(x) == 2).unwrap();
        assert!(matches!(s3.quotient(&s3.cyclic(t)), Err(crate::Error::NotNormal)));

        let triv = s3.quotient(&s3.trivial_subgroup()).unwrap();
        assert!(crate::group::is_isomorphic(&triv.group, &s3).unwrap());
    }

    #[test]
    fn quotient_of_t100_by_normal_25_is_c4() {
        let g = builtin("T100").unwrap();
        let ab = g.subgroup_closure([g.generators()[0], g.generators()[1]]);
        assert_eq!(ab.size(), 25);
        let q = g.quotient(&ab).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.elements().any(|x| q.group.order_of(x) == 4));
    }

    #[test]
    fn induced_subgroup_is_a_group() {
        let g = builtin("S4").unwrap();
        let h = g.subgroup_closure([5, 9]);
        let ind = g.induced(h.bits());
        assert_eq!(ind.group.order(), h.size());
        assert!(ind.group.is_associative());
        for (i, &x) in ind.embedding.iter().enumerate() {
            for (j, &y) in ind.embedding.iter().enumerate() {
                assert_eq!(ind.embedding[ind.group.mul(i, j)], g.mul(x, y));
            }
        }
    }
}
