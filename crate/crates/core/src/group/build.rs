use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Elem, FiniteGroup, GroupSpec, IDENTITY};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Tables up to this order are checked for associativity exhaustively.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub order_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl BuildOptions {
    fn check_order(&self, n: usize, what: &str) -> Result<()> {
        if n > self.order_cap || n > u16::MAX as usize {
            return Err(Error::OrderCapExceeded {
                what: format!("{what} of order {n}"),
                cap: self.order_cap.min(u16::MAX as usize),
            });
        }
        Ok(())
    }
}

fn check_bijection(degree: usize, p: &[usize], which: usize) -> Result<()> {
    if p.len() != degree {
        return Err(Error::InvalidPermutation(format!(
            "generator {which} has length {} but degree is {degree}",
            p.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &v in p {
        if v >= degree || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(format!(
                "generator {which} is not a bijection of 0..{degree}"
            )));
        }
    }
    Ok(())
}

/// Cycle notation with 0-based points, `()` for the identity.
pub(crate) fn cycle_notation(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub(crate) fn from_permutations(
    degree: usize,
    generators: &[Vec<usize>],
    opts: &BuildOptions,
) -> Result<FiniteGroup> {
    for (i, g) in generators.iter().enumerate() {
        check_bijection(degree, g, i)?;
    }
    let gens: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.iter().map(|&v| v as u32).collect())
        .collect();
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut perms = vec![identity.clone()];
    index.insert(identity, 0);
    // apply x, then g
    let compose = |x: &[u32], g: &[u32]| -> Vec<u32> { x.iter().map(|&p| g[p as usize]).collect() };
    let mut i = 0;
    while i < perms.len() {
        for g in &gens {
            let y = compose(&perms[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), perms.len());
                perms.push(y);
                opts.check_order(perms.len(), "permutation group closure")?;
            }
        }
        i += 1;
    }
    let n = perms.len();
    let mut table = vec![0u16; n * n];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            table[a * n + b] = index[&compose(pa, pb)] as u16;
        }
    }
    let gen_elems: Vec<Elem> = gens.iter().map(|g| index[g]).collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    Ok(FiniteGroup::from_trusted_table(
        n,
        table,
        labels,
        Some(dedup_keep_order(gen_elems)),
        GroupSpec::Permutation {
            degree,
            generators: generators.to_vec(),
        },
    ))
}

fn dedup_keep_order(xs: Vec<Elem>) -> Vec<Elem> {
    let mut out: Vec<Elem> = Vec::with_capacity(xs.len());
    for x in xs {
        if x != IDENTITY && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub(crate) fn from_table(rows: &[Vec<usize>], opts: &BuildOptions) -> Result<FiniteGroup> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidTable("empty table".into()));
    }
    opts.check_order(n, "table group")?;
    let mut table = vec![0u16; n * n];
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidTable(format!("row {x} has length {}", row.len())));
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidTable(format!("entry ({x},{y}) = {v} out of range")));
            }
            table[x * n + y] = v as u16;
        }
    }
    for x in 0..n {
        if table[x] as usize != x || table[x * n] as usize != x {
            return Err(Error::InvalidTable("index 0 is not the identity".into()));
        }
    }
    // Latin square
    for x in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for y in 0..n {
            if std::mem::replace(&mut row_seen[table[x * n + y] as usize], true) {
                return Err(Error::InvalidTable(format!("row {x} repeats an entry")));
            }
            if std::mem::replace(&mut col_seen[table[y * n + x] as usize], true) {
                return Err(Error::InvalidTable(format!("column {x} repeats an entry")));
            }
        }
    }
    let m = |a: usize, b: usize| table[a * n + b] as usize;
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for x in 0..n {
            for y in 0..n {
                let xy = m(x, y);
                for z in 0..n {
                    if m(xy, z) != m(x, m(y, z)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f0f0);
        for _ in 0..SAMPLED_ASSOC_TRIPLES {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if m(m(x, y), z) != m(x, m(y, z)) {
                return Err(Error::InvalidTable(format!("not associative at ({x},{y},{z})")));
            }
        }
    }
    let labels = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") }).collect();
    Ok(FiniteGroup::from_trusted_table(
        n,
        table,
        labels,
        None,
        GroupSpec::Table {
            table: rows.to_vec(),
        },
    ))
}

/// Cyclic group with element `k` equal to `g^k`.
pub(crate) fn cyclic(n: usize, symbol: &str) -> FiniteGroup {
    assert!(n >= 1 && n <= u16::MAX as usize);
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as u16;
        }
    }
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => symbol.to_string(),
            _ => format!("{symbol}^{k}"),
        })
        .collect();
    let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let gens = if n > 1 { vec![1] } else { vec![] };
    FiniteGroup::from_trusted_table(n, table, labels, Some(gens), GroupSpec::Table { table: rows })
}

fn product_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

pub(crate) fn direct_product(a: &FiniteGroup, b: &FiniteGroup, opts: &BuildOptions) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    opts.check_order(n, "direct product")?;
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u16;
        }
    }
    let labels = (0..n)
        .map(|x| product_label(a.label(x / nb), b.label(x % nb)))
        .collect();
    let gens: Vec<Elem> = a
        .generators()
        .iter()
        .map(|&g| g * nb)
        .chain(b.generators().iter().copied())
        .collect();
    Ok(FiniteGroup::from_trusted_table(
        n,
        table,
        labels,
        Some(gens),
        GroupSpec::Direct {
            factors: vec![a.recipe().clone(), b.recipe().clone()],
        },
    ))
}

pub(crate) fn direct_product_all(groups: &[FiniteGroup], opts: &BuildOptions) -> Result<FiniteGroup> {
    let (first, rest) = groups
        .split_first()
        .ok_or_else(|| Error::InvalidTable("direct product of no factors".into()))?;
    if rest.is_empty() {
        return Ok(first.clone());
    }
    let mut acc = first.clone();
    for g in rest {
        acc = direct_product(&acc, g, opts)?;
    }
    // keep the recipe as written, not as nested binary products
    acc.recipe = GroupSpec::Direct {
        factors: groups.iter().map(|g| g.recipe().clone()).collect(),
    };
    Ok(acc)
}

/// `N ⋊ H` where `action[i]` is the automorphism `n ↦ h n h⁻¹` for the
/// `i`-th generator `h` of `H`.
pub(crate) fn semidirect(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &[Vec<usize>],
    opts: &BuildOptions,
) -> Result<FiniteGroup> {
    let (nn, nh) = (normal.order(), acting.order());
    let n = nn * nh;
    opts.check_order(n, "semidirect product")?;
    let hgens = acting.generators();
    if action.len() != hgens.len() {
        return Err(Error::NotAHomomorphism);
    }
    for (i, img) in action.iter().enumerate() {
        if img.len() != nn || !is_automorphism(normal, img) {
            return Err(Error::NotAnAutomorphism { generator: i });
        }
    }
    // Extend over H by BFS: φ(h·s) = φ(h) ∘ φ(s); every (h, s) must agree.
    let mut phi: Vec<Option<Vec<usize>>> = vec![None; nh];
    phi[IDENTITY] = Some((0..nn).collect());
    let mut queue = vec![IDENTITY];
    let mut qi = 0;
    while qi < queue.len() {
        let h = queue[qi];
        qi += 1;
        for (s, img) in hgens.iter().zip(action) {
            let hs = acting.mul(h, *s);
            let ph = phi[h].as_ref().unwrap();
            let composed: Vec<usize> = (0..nn).map(|x| ph[img[x]]).collect();
            match &phi[hs] {
                Some(existing) => {
                    if *existing != composed {
                        return Err(Error::NotAHomomorphism);
                    }
                }
                None => {
                    phi[hs] = Some(composed);
                    queue.push(hs);
                }
            }
        }
    }
    let phi: Vec<Vec<usize>> = phi
        .into_iter()
        .map(|p| p.expect("acting generators generate the acting group"))
        .collect();
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        let (h1, n1) = (x / nn, x % nn);
        for y in 0..n {
            let (h2, n2) = (y / nn, y % nn);
            let nprod = normal.mul(n1, phi[h1][n2]);
            table[x * n + y] = (acting.mul(h1, h2) * nn + nprod) as u16;
        }
    }
    let labels = (0..n)
        .map(|x| product_label(normal.label(x % nn), acting.label(x / nn)))
        .collect();
    let gens: Vec<Elem> = normal
        .generators()
        .iter()
        .copied()
        .chain(hgens.iter().map(|&h| h * nn))
        .collect();
    Ok(FiniteGroup::from_trusted_table(
        n,
        table,
        labels,
        Some(gens),
        GroupSpec::Semidirect {
            normal: Box::new(normal.recipe().clone()),
            acting: Box::new(acting.recipe().clone()),
            action: action.to_vec(),
        },
    ))
}

fn is_automorphism(g: &FiniteGroup, img: &[usize]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in img {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|x| (0..n).all(|y| img[g.mul(x, y)] == g.mul(img[x], img[y])))
}
