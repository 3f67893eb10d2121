use super::{Elem, FiniteGroup, IDENTITY};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_CAP: usize = 64;

/// Decides isomorphism by backtracking over images of a generating set of
/// `g`, with candidates restricted to elements of equal order. Groups above
/// [`DEFAULT_ISO_CAP`] are refused.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    is_isomorphic_capped(g, h, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<bool> {
    for x in [g, h] {
        if x.order() > cap {
            return Err(Error::OrderCapExceeded {
                what: format!("isomorphism test on a group of order {}", x.order()),
                cap,
            });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    if order_profile(g) != order_profile(h) {
        return Ok(false);
    }
    let gens = g.greedy_generators(g.generators().iter().copied());
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| h.elements().filter(|&y| h.order_of(y) == g.order_of(s)).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g, h, &gens, &candidates, &mut images))
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut counts = vec![0usize; g.order() + 1];
    for x in g.elements() {
        counts[g.order_of(x)] += 1;
    }
    counts
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
) -> bool {
    let k = images.len();
    match extend_map(g, h, &gens[..k], images) {
        None => return false,
        Some(size) if k == gens.len() => return size == g.order(),
        Some(_) => {}
    }
    for &y in &candidates[k] {
        images.push(y);
        if search(g, h, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] ↦ images[i]` over the subgroup the generators span.
/// Returns the size of that subgroup when the extension is a well-defined
/// injective homomorphism.
fn extend_map(g: &FiniteGroup, h: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<usize> {
    let mut map = vec![usize::MAX; g.order()];
    let mut hit = vec![false; h.order()];
    map[IDENTITY] = IDENTITY;
    hit[IDENTITY] = true;
    let mut queue = vec![IDENTITY];
    let mut qi = 0;
    while qi < queue.len() {
        let e = queue[qi];
        qi += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let es = g.mul(e, s);
            let img = h.mul(map[e], t);
            if map[es] == usize::MAX {
                if std::mem::replace(&mut hit[img], true) {
                    return None;
                }
                map[es] = img;
                queue.push(es);
            } else if map[es] != img {
                return None;
            }
        }
    }
    Some(queue.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::group::GroupSpec;

    #[test]
    fn s3_two_recipes() {
        let a = builtin("S3").unwrap();
        let b = GroupSpec::Semidirect {
            normal: Box::new(GroupSpec::builtin("C3")),
            acting: Box::new(GroupSpec::builtin("C2")),
            action: vec![vec![0, 2, 1]],
        }
        .build()
        .unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn c4_vs_klein() {
        let c4 = builtin("C4").unwrap();
        let v4 = builtin("V4").unwrap();
        assert!(!is_isomorphic(&c4, &v4).unwrap());
    }

    #[test]
    fn same_order_profile_not_isomorphic() {
        let d4 = builtin("D4").unwrap();
        let q8 = builtin("Q8").unwrap();
        assert!(!is_isomorphic(&d4, &q8).unwrap());
        let a = GroupSpec::direct(GroupSpec::builtin("C3"), GroupSpec::builtin("S3")).build().unwrap();
        let b = builtin("D9").unwrap();
        assert!(!is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn d6_is_s3_times_c2() {
        let d6 = builtin("D6").unwrap();
        let p = builtin("S3xC2").unwrap();
        assert!(is_isomorphic(&d6, &p).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let s5 = builtin("S5").unwrap();
        assert!(matches!(is_isomorphic(&s5, &s5), Err(Error::OrderCapExceeded { .. })));
        assert!(is_isomorphic_capped(&s5, &s5, 120).unwrap());
    }
}
