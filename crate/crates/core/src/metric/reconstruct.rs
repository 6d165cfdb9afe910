use super::profile::{dist, hom_distance};
use super::MetricError;
use crate::perm::Permutation;
use crate::table::GroupTable;

/// Rebuilds the isomorphism `a → b` that fixes every light row.
///
/// With `K = {g : d(g) < n/3}` and `|K| > 3n/4`, every `g` factors as
/// `x∘y` with `x, y ∈ K`, and `g ↦ x∗y` does not depend on the choice of
/// factorization. All factorizations are checked, and the result is
/// verified to be a bijective homomorphism fixing `K` that moves every row
/// with `d(g) > 2n/3`.
pub fn reconstruct_isomorphism(a: &GroupTable, b: &GroupTable) -> Result<Permutation, MetricError> {
    let profile = dist(a, b)?;
    let n = a.order();
    let light: Vec<usize> = (0..n).filter(|&g| 3 * profile.row[g] < n).collect();
    if 4 * light.len() <= 3 * n {
        return Err(MetricError::HypothesisNotMet { light: light.len(), n });
    }

    let mut map = vec![usize::MAX; n];
    for &x in &light {
        for &y in &light {
            let g = a.op(x, y);
            let image = b.op(x, y);
            if map[g] == usize::MAX {
                map[g] = image;
            } else if map[g] != image {
                return Err(MetricError::InconsistentFactorizations { g, first: map[g], second: image });
            }
        }
    }
    if let Some(g) = map.iter().position(|&v| v == usize::MAX) {
        return Err(MetricError::ReconstructionFailed(format!("{g} has no light factorization")));
    }
    let f = Permutation::from_images(map)
        .map_err(|e| MetricError::ReconstructionFailed(format!("not a bijection: {e}")))?;
    let defect = hom_distance(f.images(), a, b)?;
    if defect != 0 {
        return Err(MetricError::ReconstructionFailed(format!("{defect} non-homomorphic pairs")));
    }
    if let Some(&x) = light.iter().find(|&&x| f.apply(x) != x) {
        return Err(MetricError::ReconstructionFailed(format!("light row {x} is moved")));
    }
    if let Some(g) = (0..n).find(|&g| 3 * profile.row[g] > 2 * n && f.apply(g) == g) {
        return Err(MetricError::ReconstructionFailed(format!("heavy row {g} is fixed")));
    }
    Ok(f)
}

/// Smallest `m_f` over all transpositions `f` of `t`, with the
/// lexicographically first minimizing transposition.
pub fn min_transposition_mf(t: &GroupTable) -> Result<(usize, Permutation), MetricError> {
    let n = t.order();
    if n < 5 {
        return Err(MetricError::OrderTooSmall { n, min: 5 });
    }
    let mut best: Option<(usize, usize, usize)> = None;
    let mut images: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for b in a + 1..n {
            images.swap(a, b);
            let mf = hom_distance(&images, t, t)?;
            images.swap(a, b);
            if best.is_none_or(|(current, _, _)| mf < current) {
                best = Some((mf, a, b));
            }
        }
    }
    let (mf, a, b) = best.expect("n >= 5 has transpositions");
    Ok((mf, Permutation::transposition(n, a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kind::{make_group, GroupKind};

    #[test]
    fn identical_tables_give_identity() {
        let t = make_group(&GroupKind::Dihedral(4));
        assert!(reconstruct_isomorphism(&t, &t).unwrap().is_identity());
    }

    #[test]
    fn recovers_transposition_in_z29() {
        let z29 = make_group(&GroupKind::Cyclic(29));
        let f = Permutation::transposition(29, 2, 5);
        let other = z29.transport(&f).unwrap();
        assert_eq!(reconstruct_isomorphism(&z29, &other).unwrap(), f);
    }

    #[test]
    fn order7_pair_fails_hypothesis() {
        let z7 = make_group(&GroupKind::Cyclic(7));
        let f = Permutation::from_images(vec![0, 1, 4, 5, 2, 3, 6]).unwrap();
        let other = z7.transport(&f).unwrap();
        assert_eq!(
            reconstruct_isomorphism(&z7, &other),
            Err(MetricError::HypothesisNotMet { light: 1, n: 7 })
        );
    }

    #[test]
    fn min_transposition_z5() {
        let z5 = make_group(&GroupKind::Cyclic(5));
        let (mf, w) = min_transposition_mf(&z5).unwrap();
        assert_eq!(mf, 12);
        assert_eq!(hom_distance(w.images(), &z5, &z5).unwrap(), 12);
        let t23 = Permutation::transposition(5, 2, 3);
        assert_eq!(hom_distance(t23.images(), &z5, &z5).unwrap(), 12);
        assert!(min_transposition_mf(&make_group(&GroupKind::Cyclic(4))).is_err());
    }
}
