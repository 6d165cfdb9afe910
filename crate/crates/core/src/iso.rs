//! Isomorphism testing by generator-image search.

use thiserror::Error;

use crate::perm::Permutation;
use crate::table::GroupTable;

/// Default order cap for [`find_isomorphism`].
pub const DEFAULT_ISO_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("order {n} exceeds the isomorphism search cap {cap}")]
    OrderTooLarge { n: usize, cap: usize },
}

/// `Some(f)` with `transport(a, f) == b` when the tables are isomorphic,
/// using the default cap of [`DEFAULT_ISO_CAP`].
pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> Result<Option<Permutation>, IsoError> {
    find_isomorphism(a, b, DEFAULT_ISO_CAP)
}

/// Searches for an isomorphism `a → b`. A generating set of `a` is chosen
/// greedily; every assignment of order-compatible images is extended along
/// the Cayley graph and checked cell by cell. The first witness in
/// lexicographic order of generator images is returned.
pub fn find_isomorphism(
    a: &GroupTable,
    b: &GroupTable,
    cap: usize,
) -> Result<Option<Permutation>, IsoError> {
    let n = a.order();
    if n != b.order() {
        return Ok(None);
    }
    if n > cap {
        return Err(IsoError::OrderTooLarge { n, cap });
    }
    let orders_a: Vec<usize> = (0..n).map(|x| a.element_order(x)).collect();
    let orders_b: Vec<usize> = (0..n).map(|x| b.element_order(x)).collect();
    let mut sorted_a = orders_a.clone();
    let mut sorted_b = orders_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    let gens = generating_set(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| orders_b[y] == orders_a[g]).collect())
        .collect();
    let mut images = vec![0; gens.len()];
    Ok(assign(a, b, &gens, &candidates, &mut images, 0))
}

fn assign(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut [usize],
    depth: usize,
) -> Option<Permutation> {
    if depth == gens.len() {
        return extend(a, b, gens, images);
    }
    for &y in &candidates[depth] {
        if images[..depth].contains(&y) {
            continue;
        }
        images[depth] = y;
        if let Some(f) = assign(a, b, gens, candidates, images, depth + 1) {
            return Some(f);
        }
    }
    None
}

/// Extends generator images to a map on all of `a` and verifies it is a
/// bijective homomorphism.
fn extend(a: &GroupTable, b: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Permutation> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[a.identity()] = b.identity();
    let mut queue = vec![a.identity()];
    while let Some(x) = queue.pop() {
        for (&g, &gy) in gens.iter().zip(images) {
            let xg = a.op(x, g);
            let target = b.op(map[x], gy);
            if map[xg] == usize::MAX {
                map[xg] = target;
                queue.push(xg);
            } else if map[xg] != target {
                return None;
            }
        }
    }
    let f = Permutation::from_images(map).ok()?;
    let hom = (0..n).all(|x| (0..n).all(|y| f.apply(a.op(x, y)) == b.op(f.apply(x), f.apply(y))));
    hom.then_some(f)
}

fn generating_set(t: &GroupTable) -> Vec<usize> {
    let n = t.order();
    let mut in_subgroup = vec![false; n];
    in_subgroup[t.identity()] = true;
    let mut members = vec![t.identity()];
    let mut gens = Vec::new();
    // Prefer high-order elements so fewer generators are needed.
    let mut by_order: Vec<usize> = (0..n).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(t.element_order(x)), x));
    for g in by_order {
        if in_subgroup[g] {
            continue;
        }
        gens.push(g);
        // Closure of members under right multiplication by the generators.
        let mut frontier = members.clone();
        while let Some(x) = frontier.pop() {
            for &h in &gens {
                let y = t.op(x, h);
                if !in_subgroup[y] {
                    in_subgroup[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

/// True iff `t` has order `2k` with `k` odd, `k >= 3`, and is dihedral.
///
/// Uses the presentation directly: an element `r` of order `k` together with
/// an involution `s` outside `<r>` satisfying `s r s = r^-1`.
pub fn is_dihedral_twice_odd(t: &GroupTable) -> bool {
    let n = t.order();
    if n % 2 != 0 {
        return false;
    }
    let k = n / 2;
    if k < 3 || k % 2 == 0 {
        return false;
    }
    let Some(r) = (0..n).find(|&x| t.element_order(x) == k) else {
        return false;
    };
    let rotations: Vec<usize> = (0..k).map(|i| t.power(r, i)).collect();
    let r_inv = t.inverse(r);
    (0..n).any(|s| {
        !rotations.contains(&s) && t.element_order(s) == 2 && t.op(t.op(s, r), s) == r_inv
    })
}
