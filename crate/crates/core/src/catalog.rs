//! Named groups and the default test catalog.
//!
//! Names: `C<n>`, `C<n>^<k>`, `V4`, `D<n>` (dihedral of order `2n`), `Q8`,
//! `S3`..`S5`, `A4`, `A5`, `S3xC2`, `T100`, `G200`, and direct products
//! written `AxB` (or `AxBxC`) of any of these.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build, BuildOptions, Elem, FiniteGroup, GroupSpec};

#[derive(Clone, Debug, Serialize)]
pub struct BuiltinEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub expected_order: usize,
    pub notes: String,
}

/// Builds a named group.
pub fn builtin(name: &str) -> Result<FiniteGroup> {
    let mut g = build_named(name)?;
    g.set_recipe(GroupSpec::builtin(name));
    Ok(g)
}

fn unknown(name: &str) -> Error {
    Error::UnknownBuiltin(name.to_string())
}

fn perms(degree: usize, gens: &[&[usize]]) -> Result<FiniteGroup> {
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
    build::from_permutations(degree, &gens, &BuildOptions::default())
}

fn parse_num(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}

fn build_named(name: &str) -> Result<FiniteGroup> {
    let opts = BuildOptions::default();
    match name {
        "V4" => return elementary(2, 2),
        "Q8" => return Ok(quaternion()),
        "S3" => return perms(3, &[&[1, 0, 2], &[1, 2, 0]]),
        "S4" => return perms(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]),
        "S5" => return perms(5, &[&[1, 0, 2, 3, 4], &[1, 2, 3, 4, 0]]),
        "A4" => return perms(4, &[&[1, 2, 0, 3], &[0, 2, 3, 1]]),
        "A5" => return perms(5, &[&[1, 2, 0, 3, 4], &[1, 2, 3, 4, 0]]),
        "S3xC2" => return build::direct_product(&builtin("S3")?, &builtin("C2")?, &opts),
        "T100" => return t100(),
        "G200" => return g200(),
        _ => {}
    }
    if name.contains('x') {
        let factors = name
            .split('x')
            .map(builtin)
            .collect::<Result<Vec<FiniteGroup>>>()
            .map_err(|_| unknown(name))?;
        if factors.len() < 2 {
            return Err(unknown(name));
        }
        return build::direct_product_all(&factors, &opts);
    }
    if let Some(rest) = name.strip_prefix('C') {
        let (base, exp) = match rest.split_once('^') {
            Some((b, e)) => (parse_num(b), parse_num(e)),
            None => (parse_num(rest), Some(1)),
        };
        return match (base, exp) {
            (Some(n), Some(1)) => {
                opts_check(n, &opts)?;
                Ok(build::cyclic(n, "g"))
            }
            (Some(n), Some(k)) => elementary(n, k),
            _ => Err(unknown(name)),
        };
    }
    if let Some(rest) = name.strip_prefix('D') {
        return match parse_num(rest) {
            Some(n) if n >= 2 => dihedral(n),
            _ => Err(unknown(name)),
        };
    }
    Err(unknown(name))
}

fn opts_check(n: usize, opts: &BuildOptions) -> Result<()> {
    if n > opts.order_cap {
        return Err(Error::OrderCapExceeded {
            what: format!("cyclic group of order {n}"),
            cap: opts.order_cap,
        });
    }
    Ok(())
}

/// `C_n^k` with generators the unit vectors.
fn elementary(n: usize, k: usize) -> Result<FiniteGroup> {
    let opts = BuildOptions::default();
    let c = build::cyclic(n, "g");
    let factors = vec![c; k];
    build::direct_product_all(&factors, &opts)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let rot = build::cyclic(n, "r");
    let flip = build::cyclic(2, "s");
    let inversion: Vec<usize> = (0..n).map(|k| (n - k) % n).collect();
    let mut g = build::semidirect(&rot, &flip, &[inversion], &BuildOptions::default())?;
    let labels = (0..2 * n)
        .map(|x| {
            let (k, s) = (x % n, x / n);
            let r = match k {
                0 if s == 0 => "1".to_string(),
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            if s == 1 {
                format!("{r}s")
            } else {
                r
            }
        })
        .collect();
    g.set_labels(labels);
    Ok(g)
}

/// Elements `±1, ±i, ±j, ±k` at indices `2u + sign` for units `1, i, j, k`.
fn quaternion() -> FiniteGroup {
    // unit products: (sign, unit)
    const MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = vec![0u16; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (sx, ux) = (x % 2, x / 2);
            let (sy, uy) = (y % 2, y / 2);
            let (s, u) = MUL[ux][uy];
            table[x * 8 + y] = (2 * u + (s + sx + sy) % 2) as u16;
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    let rows = (0..8)
        .map(|x| (0..8).map(|y| table[x * 8 + y] as usize).collect())
        .collect();
    FiniteGroup::from_trusted_table(8, table, labels, Some(vec![2, 4]), GroupSpec::Table { table: rows })
}

/// Index of `a^x b^y` in `C5 × C5`.
fn ab(x: usize, y: usize) -> Elem {
    (x % 5) * 5 + y % 5
}

fn ab_word(n: Elem) -> String {
    let part = |sym: &str, e: usize| match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    };
    format!("{}{}", part("a", n / 5), part("b", n % 5))
}

/// `⟨a, b, c | a⁵ = b⁵ = c⁴ = [a,b] = 1, c a c⁻¹ = a², c b c⁻¹ = b³⟩`.
fn t100() -> Result<FiniteGroup> {
    let normal = elementary(5, 2)?;
    let acting = build::cyclic(4, "c");
    let action: Vec<usize> = (0..25).map(|n| ab(2 * (n / 5), 3 * (n % 5))).collect();
    let mut g = build::semidirect(&normal, &acting, &[action], &BuildOptions::default())?;
    let labels = (0..100)
        .map(|x| {
            let w = format!("{}{}", ab_word(x % 25), match x / 25 {
                0 => String::new(),
                1 => "c".to_string(),
                k => format!("c^{k}"),
            });
            if w.is_empty() {
                "1".to_string()
            } else {
                w
            }
        })
        .collect();
    g.set_labels(labels);
    Ok(g)
}

/// `(C5 × C5) ⋊ Q8` with `i ↦ diag(2, 3)` and `j ↦ [[0, -1], [1, 0]]` acting
/// on column vectors `(x, y) ↔ a^x b^y`.
fn g200() -> Result<FiniteGroup> {
    let normal = elementary(5, 2)?;
    let q8 = quaternion();
    let mat = |m: [[usize; 2]; 2]| -> Vec<usize> {
        (0..25)
            .map(|n| {
                let (x, y) = (n / 5, n % 5);
                ab(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
            })
            .collect()
    };
    let i = mat([[2, 0], [0, 3]]);
    let j = mat([[0, 4], [1, 0]]);
    let mut g = build::semidirect(&normal, &q8, &[i, j], &BuildOptions::default())?;
    let labels = (0..200)
        .map(|x| {
            let (w, h) = (ab_word(x % 25), q8.label(x / 25));
            match (w.is_empty(), h) {
                (true, h) => h.to_string(),
                (false, "1") => w,
                (false, h) => format!("{w}·{h}"),
            }
        })
        .collect();
    g.set_labels(labels);
    Ok(g)
}

fn entry(name: &str, order: usize, notes: &str) -> BuiltinEntry {
    BuiltinEntry {
        name: name.to_string(),
        spec: GroupSpec::builtin(name),
        expected_order: order,
        notes: notes.to_string(),
    }
}

/// The named groups, cyclic groups first.
pub fn builtin_entries() -> Vec<BuiltinEntry> {
    let mut out: Vec<BuiltinEntry> = (1..=32)
        .map(|n| entry(&format!("C{n}"), n, "cyclic, integers mod n"))
        .collect();
    out.push(entry("V4", 4, "Klein four-group C2 x C2"));
    out.push(entry("C2^3", 8, "elementary abelian of order 8"));
    out.push(entry("C5^2", 25, "elementary abelian of order 25"));
    for n in 3..=16 {
        out.push(entry(&format!("D{n}"), 2 * n, "dihedral, C_n semidirect C2 by inversion"));
    }
    out.push(entry("Q8", 8, "quaternion units with i, j as generators"));
    out.push(entry("S3", 6, "permutations of 3 points"));
    out.push(entry("S4", 24, "permutations of 4 points"));
    out.push(entry("S5", 120, "permutations of 5 points"));
    out.push(entry("A4", 12, "even permutations of 4 points"));
    out.push(entry("A5", 60, "even permutations of 5 points"));
    out.push(entry("S3xC2", 12, "direct product"));
    out.push(entry("T100", 100, "(C5 x C5) semidirect C4, c acts as a->a^2, b->b^3"));
    out.push(entry("G200", 200, "(C5 x C5) semidirect Q8 by 2x2 matrices over GF(5)"));
    out
}

/// Builds the group described by a group-spec JSON file. The parsed spec
/// is kept as the group's recipe.
pub fn ingest(path: &Path) -> Result<FiniteGroup> {
    let text = fs::read_to_string(path)?;
    let spec = GroupSpec::from_json(&text)?;
    let mut g = spec.build()?;
    g.set_recipe(spec);
    Ok(g)
}

/// A catalog member: its name and the built group.
#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub name: String,
    pub group: FiniteGroup,
}

/// Every builtin of order at most `max_order`, then the direct products
/// `AxB` of two nontrivial builtins with `A` listed no later than `B`, at
/// least one of them nonabelian, and `|A||B| ≤ max_order`.
pub fn default_catalog(max_order: usize) -> Result<Vec<CatalogGroup>> {
    let entries: Vec<BuiltinEntry> = builtin_entries()
        .into_iter()
        .filter(|e| e.expected_order <= max_order)
        .collect();
    let mut groups: Vec<CatalogGroup> = Vec::new();
    for e in &entries {
        groups.push(CatalogGroup {
            name: e.name.clone(),
            group: builtin(&e.name)?,
        });
    }
    let factors: Vec<&CatalogGroup> = groups
        .iter()
        .filter(|c| c.group.order() > 1)
        .collect();
    let mut products = Vec::new();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.group.order() * b.group.order() > max_order {
                continue;
            }
            if a.group.is_abelian() && b.group.is_abelian() {
                continue;
            }
            let name = format!("{}x{}", a.name, b.name);
            if name == "S3xC2" {
                continue;
            }
            products.push(name);
        }
    }
    for name in products {
        let group = builtin(&name)?;
        groups.push(CatalogGroup { name, group });
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;
    use crate::structure::{minimal_normal_subgroups, socle};

    #[test]
    fn entries_have_expected_orders() {
        for e in builtin_entries() {
            let g = e.spec.build().unwrap();
            assert_eq!(g.order(), e.expected_order, "{}", e.name);
            assert_eq!(*g.recipe(), e.spec);
        }
    }

    #[test]
    fn unknown_names() {
        for bad in ["", "C0", "C", "X7", "D1", "Cx", "C3xFoo", "C03", "C2^0"] {
            assert!(matches!(builtin(bad), Err(Error::UnknownBuiltin(_))), "{bad}");
        }
    }

    #[test]
    fn products_by_name() {
        let g = builtin("S3xC3").unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(builtin("C2xC2xC2").unwrap().order(), 8);
    }

    #[test]
    fn q8_relations() {
        let q = builtin("Q8").unwrap();
        let (i, j, k, m1) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), q.mul(m1, k));
        assert_eq!(q.mul(i, i), m1);
        assert!(q.is_associative());
        assert_eq!(q.center().size(), 2);
        assert_eq!(q.elements().filter(|&x| q.order_of(x) == 4).count(), 6);
    }

    #[test]
    fn dihedral_groups() {
        for n in 3..=16 {
            let g = builtin(&format!("D{n}")).unwrap();
            assert_eq!(g.order(), 2 * n);
            let involutions = g.elements().filter(|&x| g.order_of(x) == 2).count();
            assert_eq!(involutions, n + if n % 2 == 0 { 1 } else { 0 });
        }
        let d3 = builtin("D3").unwrap();
        assert!(is_isomorphic(&d3, &builtin("S3").unwrap()).unwrap());
    }

    #[test]
    fn t100_presentation() {
        let g = builtin("T100").unwrap();
        assert_eq!(g.order(), 100);
        let (a, b, c) = (ab(1, 0), ab(0, 1), 25);
        assert_eq!(g.label(a), "a");
        assert_eq!(g.label(c), "c");
        assert_eq!((g.order_of(a), g.order_of(b), g.order_of(c)), (5, 5, 4));
        assert_eq!(g.mul(a, b), g.mul(b, a));
        // c a c⁻¹ = a², c b c⁻¹ = b³
        assert_eq!(g.conj(a, g.inv(c)), g.mul(a, a));
        assert_eq!(g.conj(b, g.inv(c)), g.pow(b, 3));
        assert_eq!(g.subgroup_closure([a, b]).size(), 25);
    }

    /// Brute force: the two matrices generate 8 matrices forming Q8, and no
    /// line of GF(5)² is fixed by all of them.
    #[test]
    fn g200_matrices_generate_q8_irreducibly() {
        type M = [[i64; 2]; 2];
        let mul = |x: M, y: M| -> M {
            let mut z = [[0; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    z[r][c] = (x[r][0] * y[0][c] + x[r][1] * y[1][c]).rem_euclid(5);
                }
            }
            z
        };
        let gi: M = [[2, 0], [0, 3]];
        let gj: M = [[0, 4], [1, 0]];
        let mut set = vec![[[1, 0], [0, 1]]];
        let mut k = 0;
        while k < set.len() {
            for g in [gi, gj] {
                let p = mul(set[k], g);
                if !set.contains(&p) {
                    set.push(p);
                }
            }
            k += 1;
        }
        assert_eq!(set.len(), 8);
        let minus_one: M = [[4, 0], [0, 4]];
        assert_eq!(set.iter().filter(|&&m| mul(m, m) == minus_one).count(), 6);
        let lines: Vec<(i64, i64)> = (0..5).map(|t| (1, t)).chain([(0, 1)]).collect();
        for (x, y) in lines {
            let fixed = set.iter().all(|m| {
                let (u, v) = (
                    (m[0][0] * x + m[0][1] * y).rem_euclid(5),
                    (m[1][0] * x + m[1][1] * y).rem_euclid(5),
                );
                (u * y - v * x).rem_euclid(5) == 0
            });
            assert!(!fixed, "line through ({x},{y}) is invariant");
        }
    }

    #[test]
    fn g200_structure() {
        let g = builtin("G200").unwrap();
        assert_eq!(g.order(), 200);
        assert_eq!(minimal_normal_subgroups(&g).unwrap().len(), 1);
        let soc = socle(&g).unwrap();
        assert_eq!(soc.size(), 25);
        let q = g.quotient(&soc).unwrap();
        assert!(is_isomorphic(&q.group, &builtin("Q8").unwrap()).unwrap());
    }

    #[test]
    fn catalog_is_deterministic_and_bounded() {
        let a = default_catalog(60).unwrap();
        let b = default_catalog(60).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.group.content_hash(), y.group.content_hash());
            assert!(x.group.order() <= 60);
        }
        assert!(a.iter().any(|c| c.name == "C3xS3"));
        assert!(!a.iter().any(|c| c.name == "C2xC3"));
    }
}
