//! Poset geometry behind the product: separated pairs, the union map onto
//! the product family, and hand-built contraction witnesses for its slices.
//!
//! Everything here is double-checked at runtime: map images are looked up
//! in the target carrier (a miss is a [`HomotopyError::WitnessFailure`]),
//! monotonicity is validated by construction, and chains validate
//! step-by-step comparability.

use std::sync::Arc;

use poset_core::{induced, split_product_index, MonotoneMap, Poset};
use poset_homotopy::{
    is_homotopy_cofinal, is_homotopy_final, CofinalityReport, HomotopyChain, HomotopyError,
};

use crate::error::ChromaticError;
use crate::level::{angle, check_n_star, LevelSet};
use crate::upset::{star, UpSet};

/// The lattice of level subsets ordered by inclusion; element index equals
/// the subset's bitmask.
pub fn level_poset(n_star: u8) -> Result<Arc<Poset>, ChromaticError> {
    check_n_star(n_star)?;
    Ok(Arc::new(Poset::subset_lattice(n_star as usize)?))
}

/// The poset of separated pairs of level sets — the first coordinate lies
/// entirely at or below the second — ordered coordinatewise.
///
/// It sits inside the square of the subset lattice as a down-closed piece;
/// pairs are kept in ascending `(first, second)` bitmask order, matching
/// their ambient product indices.
#[derive(Clone, Debug)]
pub struct MPoset {
    n_star: u8,
    pairs: Vec<(LevelSet, LevelSet)>,
    poset: Arc<Poset>,
    ambient: Arc<Poset>,
    embedding: MonotoneMap,
}

impl MPoset {
    pub fn n_star(&self) -> u8 {
        self.n_star
    }

    pub fn pairs(&self) -> &[(LevelSet, LevelSet)] {
        &self.pairs
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// The square of the subset lattice the pairs were carved from.
    pub fn ambient(&self) -> &Arc<Poset> {
        &self.ambient
    }

    pub fn embedding(&self) -> &MonotoneMap {
        &self.embedding
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, index: usize) -> (LevelSet, LevelSet) {
        self.pairs[index]
    }

    pub fn index_of(&self, a: &LevelSet, b: &LevelSet) -> Option<usize> {
        if a.n_star() != self.n_star || b.n_star() != self.n_star {
            return None;
        }
        pair_index(&self.pairs, a, b)
    }
}

/// Builds the separated-pair poset at the given height.
pub fn m_poset(n_star: u8) -> Result<MPoset, ChromaticError> {
    let levels = level_poset(n_star)?;
    let ambient = Arc::new(levels.product(&levels)?);
    let mut subset = Vec::new();
    let mut pairs = Vec::new();
    for k in 0..ambient.size() {
        let (i, j) = split_product_index(levels.size(), k);
        let a = LevelSet::new(n_star, i as u32).expect("lattice index is a valid mask");
        let b = LevelSet::new(n_star, j as u32).expect("lattice index is a valid mask");
        if angle(&a, &b) {
            subset.push(k);
            pairs.push((a, b));
        }
    }
    let (poset, embedding) = induced(&ambient, &subset)?;
    Ok(MPoset {
        n_star,
        pairs,
        poset,
        ambient,
        embedding,
    })
}

fn pair_index(pairs: &[(LevelSet, LevelSet)], a: &LevelSet, b: &LevelSet) -> Option<usize> {
    pairs
        .binary_search_by_key(&(a.mask(), b.mask()), |&(x, y)| (x.mask(), y.mask()))
        .ok()
}

/// Image of one pair under the `t`-th first-coordinate collapse: levels of
/// the first set from position `⌈t/2⌉` up move across to the second set,
/// with even `t` also moving the pivot.
fn alpha_pair(a: &LevelSet, b: &LevelSet, t: u8) -> (LevelSet, LevelSet) {
    let i = (t / 2) as i32;
    let keep = if t % 2 == 0 {
        a.levels_le(i - 1)
    } else {
        a.levels_le(i)
    };
    (keep, a.levels_ge(i).union(b))
}

/// Mirror collapse on the second coordinate: its levels up to the pivot
/// move across to the first set.
fn beta_pair(a: &LevelSet, b: &LevelSet, t: u8) -> (LevelSet, LevelSet) {
    let i = (t / 2) as i32;
    let keep = if t % 2 == 0 {
        b.levels_le(i - 1)
    } else {
        b.levels_le(i)
    };
    (a.union(&keep), b.levels_ge(i))
}

fn collapse_map(
    m: &MPoset,
    t: u8,
    collapse: fn(&LevelSet, &LevelSet, u8) -> (LevelSet, LevelSet),
) -> Result<MonotoneMap, ChromaticError> {
    let max = 2 * m.n_star();
    if t > max {
        return Err(ChromaticError::MapIndexOutOfRange { index: t, max });
    }
    let assignment = m
        .pairs
        .iter()
        .map(|(a, b)| {
            let (x, y) = collapse(a, b, t);
            pair_index(&m.pairs, &x, &y).expect("collapse of a separated pair is separated")
        })
        .collect();
    Ok(MonotoneMap::new(m.poset.clone(), m.poset.clone(), assignment)?)
}

/// The `t`-th first-coordinate collapse as a self-map of the separated-pair
/// poset, for `t` in `0..=2·n*`. The top index gives the identity, index 0
/// pushes the whole first coordinate across.
pub fn alpha_map(m: &MPoset, t: u8) -> Result<MonotoneMap, ChromaticError> {
    collapse_map(m, t, alpha_pair)
}

/// The `t`-th second-coordinate collapse, for `t` in `0..=2·n*`. Index 0
/// gives the identity, the top index pushes the whole second coordinate
/// across.
pub fn beta_map(m: &MPoset, t: u8) -> Result<MonotoneMap, ChromaticError> {
    collapse_map(m, t, beta_pair)
}

/// Separated pairs drawn from two upward-closed families, with the union
/// map onto the members of their product family.
#[derive(Clone, Debug)]
pub struct OStarPoset {
    n_star: u8,
    pairs: Vec<(LevelSet, LevelSet)>,
    poset: Arc<Poset>,
    product: UpSet,
    star_members: Vec<LevelSet>,
    star_poset: Arc<Poset>,
    sigma: MonotoneMap,
}

impl OStarPoset {
    pub fn n_star(&self) -> u8 {
        self.n_star
    }

    pub fn pairs(&self) -> &[(LevelSet, LevelSet)] {
        &self.pairs
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// The product family the union map lands in.
    pub fn product(&self) -> &UpSet {
        &self.product
    }

    /// Members of the product family in ascending bitmask order; positions
    /// match indices of the member poset.
    pub fn star_members(&self) -> &[LevelSet] {
        &self.star_members
    }

    /// The members of the product family under inclusion.
    pub fn star_poset(&self) -> &Arc<Poset> {
        &self.star_poset
    }

    /// The union map from pairs to product members.
    pub fn sigma(&self) -> &MonotoneMap {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, index: usize) -> (LevelSet, LevelSet) {
        self.pairs[index]
    }

    pub fn index_of(&self, a: &LevelSet, b: &LevelSet) -> Option<usize> {
        if a.n_star() != self.n_star || b.n_star() != self.n_star {
            return None;
        }
        pair_index(&self.pairs, a, b)
    }

    pub fn star_index_of(&self, member: &LevelSet) -> Option<usize> {
        if member.n_star() != self.n_star {
            return None;
        }
        self.star_members
            .binary_search_by_key(&member.mask(), |m| m.mask())
            .ok()
    }
}

/// Builds a poset on explicit pairs under the coordinatewise order.
fn pairs_poset(pairs: &[(LevelSet, LevelSet)]) -> Result<Arc<Poset>, ChromaticError> {
    let labels = pairs
        .iter()
        .map(|(a, b)| format!("({},{})", a.render(), b.render()))
        .collect();
    let mut order = Vec::new();
    for (i, (a, b)) in pairs.iter().enumerate() {
        for (j, (c, d)) in pairs.iter().enumerate() {
            if i != j && a.is_subset(c) && b.is_subset(d) {
                order.push((i, j));
            }
        }
    }
    Ok(Arc::new(Poset::build(labels, &order)?))
}

/// Builds the pair poset of two families together with its union map.
pub fn ostar_poset(u: &UpSet, v: &UpSet) -> Result<OStarPoset, ChromaticError> {
    if u.n_star() != v.n_star() {
        return Err(ChromaticError::MixedLevels {
            left: u.n_star(),
            right: v.n_star(),
        });
    }
    let n_star = u.n_star();
    let mut pairs = Vec::new();
    for a in u.members() {
        for b in v.members() {
            if angle(&a, &b) {
                pairs.push((a, b));
            }
        }
    }
    let poset = pairs_poset(&pairs)?;

    let product = star(u, v);
    let star_members = product.members();
    let star_labels = star_members.iter().map(|m| m.render()).collect();
    let mut star_order = Vec::new();
    for (i, a) in star_members.iter().enumerate() {
        for (j, b) in star_members.iter().enumerate() {
            if i != j && a.is_subset(b) {
                star_order.push((i, j));
            }
        }
    }
    let star_poset = Arc::new(Poset::build(star_labels, &star_order)?);

    let assignment = pairs
        .iter()
        .map(|(a, b)| {
            let union = a.union(b);
            star_members
                .binary_search_by_key(&union.mask(), |m| m.mask())
                .expect("union of member pair lies in the product family")
        })
        .collect();
    let sigma = MonotoneMap::new(poset.clone(), star_poset.clone(), assignment)?;

    Ok(OStarPoset {
        n_star,
        pairs,
        poset,
        product,
        star_members,
        star_poset,
        sigma,
    })
}

/// Brute-force check that the union map is homotopy cofinal, with full
/// per-member evidence.
pub fn check_sigma_cofinal(u: &UpSet, v: &UpSet) -> Result<CofinalityReport, ChromaticError> {
    let o = ostar_poset(u, v)?;
    Ok(is_homotopy_cofinal(o.sigma()))
}

/// Brute-force check that the union map is homotopy final.
pub fn check_sigma_final(u: &UpSet, v: &UpSet) -> Result<CofinalityReport, ChromaticError> {
    let o = ostar_poset(u, v)?;
    Ok(is_homotopy_final(o.sigma()))
}

fn witness_failure(context: String) -> ChromaticError {
    ChromaticError::Homotopy(HomotopyError::WitnessFailure { context })
}

fn check_operands(u: &UpSet, v: &UpSet, c: &LevelSet) -> Result<UpSet, ChromaticError> {
    if u.n_star() != v.n_star() {
        return Err(ChromaticError::MixedLevels {
            left: u.n_star(),
            right: v.n_star(),
        });
    }
    if u.n_star() != c.n_star() {
        return Err(ChromaticError::MixedLevels {
            left: u.n_star(),
            right: c.n_star(),
        });
    }
    let product = star(u, v);
    if !product.contains(c) {
        return Err(ChromaticError::NotInProduct { set: c.render() });
    }
    Ok(product)
}

/// Looks an image pair up in a comma carrier, failing loudly if the
/// claimed witness ever leaves it.
fn comma_index(
    pairs: &[(LevelSet, LevelSet)],
    a: &LevelSet,
    b: &LevelSet,
    context: &str,
) -> Result<usize, ChromaticError> {
    pair_index(pairs, a, b).ok_or_else(|| {
        witness_failure(format!(
            "{context}: image ({},{}) left the slice",
            a.render(),
            b.render()
        ))
    })
}

/// Contraction certificate for the slice of the union map over one member:
/// the identity sits below a roof map, which sits above a constant.
#[derive(Debug)]
pub struct SgCofinalWitness {
    /// The slice: pairs whose union is contained in the chosen member.
    pub comma: Arc<Poset>,
    pub pairs: Vec<(LevelSet, LevelSet)>,
    /// `identity ≤ roof ≥ constant`, validated step by step.
    pub chain: HomotopyChain,
    /// The roof map: each coordinate grows to the member's matching span.
    pub phi: MonotoneMap,
    /// The constant at the canonical split of the member.
    pub psi: MonotoneMap,
    /// Least cut below which the member's head lies in the first family.
    pub u_split: i8,
    /// Greatest cut above which the member's tail lies in the second.
    pub v_split: i8,
}

/// Builds the over-slice contraction witness at `c`, which must be a
/// member of the product family.
pub fn sg_cofinal_witness(
    u: &UpSet,
    v: &UpSet,
    c: &LevelSet,
) -> Result<SgCofinalWitness, ChromaticError> {
    check_operands(u, v, c)?;
    let n = u.n_star() as i32;

    let mut pairs = Vec::new();
    for a in u.members() {
        if !a.is_subset(c) {
            continue;
        }
        for b in v.members() {
            if b.is_subset(c) && angle(&a, &b) {
                pairs.push((a, b));
            }
        }
    }
    let comma = pairs_poset(&pairs)?;

    let u_split = (-1..n)
        .find(|&i| u.contains(&c.levels_le(i)))
        .expect("the member itself lies in the first family");
    let v_split = (0..=n)
        .rev()
        .find(|&j| v.contains(&c.levels_ge(j)))
        .expect("the member itself lies in the second family");

    let phi_assignment: Vec<usize> = pairs
        .iter()
        .map(|(a, b)| {
            let head = c.levels_le(a.max_level().map_or(-1, i32::from));
            let tail = c.levels_ge(b.min_level().map_or(n, i32::from));
            comma_index(&pairs, &head, &tail, "roof map")
        })
        .collect::<Result<_, _>>()?;
    let phi = MonotoneMap::new(comma.clone(), comma.clone(), phi_assignment)?;

    let bottom = comma_index(
        &pairs,
        &c.levels_le(u_split),
        &c.levels_ge(v_split),
        "constant",
    )?;
    let psi = MonotoneMap::constant(comma.clone(), comma.clone(), bottom)?;

    let chain = HomotopyChain::new_deduped(vec![
        MonotoneMap::identity(comma.clone()),
        phi.clone(),
        psi.clone(),
    ])?;

    Ok(SgCofinalWitness {
        comma,
        pairs,
        chain,
        phi,
        psi,
        u_split: u_split as i8,
        v_split: v_split as i8,
    })
}

/// Contraction certificate for the slice of the union map under one
/// member: a zigzag of collapses walking the identity down to a constant.
#[derive(Debug)]
pub struct SgFinalWitness {
    /// The slice: pairs whose union contains the chosen member.
    pub comma: Arc<Poset>,
    pub pairs: Vec<(LevelSet, LevelSet)>,
    /// From the identity through first-coordinate collapses, then mirrored
    /// collapses, down to the constant at the split.
    pub chain: HomotopyChain,
    /// The cut at which the member splits into the two families.
    pub split: u8,
}

/// Builds the under-slice contraction witness at `c`, which must be a
/// member of the product family.
pub fn sg_final_witness(
    u: &UpSet,
    v: &UpSet,
    c: &LevelSet,
) -> Result<SgFinalWitness, ChromaticError> {
    check_operands(u, v, c)?;
    let n = u.n_star();

    let mut pairs = Vec::new();
    for a in u.members() {
        for b in v.members() {
            if angle(&a, &b) && c.is_subset(&a.union(&b)) {
                pairs.push((a, b));
            }
        }
    }
    let comma = pairs_poset(&pairs)?;

    let split = (0..=n)
        .find(|&k| u.contains(&c.levels_le(k as i32)) && v.contains(&c.levels_ge(k as i32)))
        .ok_or_else(|| witness_failure("no cut splits the member into the two families".into()))?;

    // Walk the first coordinate down to the split, then the second
    // coordinate up to it; every intermediate stays inside the slice.
    let mut transforms: Vec<Box<dyn Fn(&LevelSet, &LevelSet) -> (LevelSet, LevelSet)>> =
        vec![Box::new(|a: &LevelSet, b: &LevelSet| (*a, *b))];
    for t in (2 * split + 1..=2 * n).rev() {
        transforms.push(Box::new(move |a, b| alpha_pair(a, b, t)));
    }
    for s in 1..=2 * split + 1 {
        transforms.push(Box::new(move |a, b| {
            let (x, y) = beta_pair(a, b, s);
            alpha_pair(&x, &y, 2 * split + 1)
        }));
    }

    let mut steps = Vec::with_capacity(transforms.len() + 1);
    for transform in &transforms {
        let assignment: Vec<usize> = pairs
            .iter()
            .map(|(a, b)| {
                let (x, y) = transform(a, b);
                comma_index(&pairs, &x, &y, "collapse step")
            })
            .collect::<Result<_, _>>()?;
        steps.push(MonotoneMap::new(comma.clone(), comma.clone(), assignment)?);
    }
    let bottom = comma_index(
        &pairs,
        &c.levels_le(split as i32),
        &c.levels_ge(split as i32),
        "constant",
    )?;
    steps.push(MonotoneMap::constant(comma.clone(), comma.clone(), bottom)?);

    let chain = HomotopyChain::new_deduped(steps)?;

    Ok(SgFinalWitness {
        comma,
        pairs,
        chain,
        split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upset::{u_of, v_of};
    use poset_core::product_index;

    fn ls(n: u8, levels: &[u8]) -> LevelSet {
        LevelSet::from_levels(n, levels).unwrap()
    }

    #[test]
    fn level_poset_order_is_inclusion() {
        let p = level_poset(3).unwrap();
        assert_eq!(p.size(), 8);
        for a in 0..8usize {
            for b in 0..8usize {
                assert_eq!(p.leq(a, b), a & !b == 0);
            }
        }
    }

    #[test]
    fn separated_pair_counts() {
        for (n, count) in [(0, 1), (1, 4), (2, 12), (3, 32), (4, 80)] {
            assert_eq!(m_poset(n).unwrap().len(), count, "n* = {n}");
        }
    }

    #[test]
    fn separated_pairs_form_a_sieve() {
        let m = m_poset(3).unwrap();
        let size = 1usize << 3;
        let subset: Vec<usize> = m
            .pairs()
            .iter()
            .map(|(a, b)| product_index(size, a.mask() as usize, b.mask() as usize))
            .collect();
        assert!(m.ambient().is_sieve(&subset));
        assert!(m.embedding().is_embedding());
    }

    #[test]
    fn collapse_extremes_are_identities() {
        let m = m_poset(2).unwrap();
        let id = MonotoneMap::identity(m.poset().clone());
        assert_eq!(alpha_map(&m, 4).unwrap(), id);
        assert_eq!(beta_map(&m, 0).unwrap(), id);
        // opposite ends push one whole coordinate across
        let alpha0 = alpha_map(&m, 0).unwrap();
        let beta4 = beta_map(&m, 4).unwrap();
        for (k, &(a, b)) in m.pairs().iter().enumerate() {
            let all = a.union(&b);
            assert_eq!(m.pair(alpha0.apply(k)), (ls(2, &[]), all));
            assert_eq!(m.pair(beta4.apply(k)), (all, ls(2, &[])));
        }
        assert!(matches!(
            alpha_map(&m, 5),
            Err(ChromaticError::MapIndexOutOfRange { index: 5, max: 4 })
        ));
    }

    #[test]
    fn collapses_preserve_the_union() {
        let m = m_poset(3).unwrap();
        for t in 0..=6 {
            let alpha = alpha_map(&m, t).unwrap();
            let beta = beta_map(&m, t).unwrap();
            for (k, &(a, b)) in m.pairs().iter().enumerate() {
                let union = a.union(&b);
                let (x, y) = m.pair(alpha.apply(k));
                assert_eq!(x.union(&y), union);
                let (x, y) = m.pair(beta.apply(k));
                assert_eq!(x.union(&y), union);
            }
        }
    }

    #[test]
    fn collapses_zigzag() {
        let m = m_poset(3).unwrap();
        for i in 0..3 {
            let even = alpha_map(&m, 2 * i).unwrap();
            let odd = alpha_map(&m, 2 * i + 1).unwrap();
            let next = alpha_map(&m, 2 * i + 2).unwrap();
            assert!(even.pointwise_leq(&odd).unwrap());
            assert!(next.pointwise_leq(&odd).unwrap());
            let even = beta_map(&m, 2 * i).unwrap();
            let odd = beta_map(&m, 2 * i + 1).unwrap();
            let next = beta_map(&m, 2 * i + 2).unwrap();
            assert!(even.pointwise_leq(&odd).unwrap());
            assert!(next.pointwise_leq(&odd).unwrap());
        }
    }

    #[test]
    fn collapse_goldens_at_height_three() {
        let m = m_poset(3).unwrap();
        let alpha3 = alpha_map(&m, 3).unwrap();
        let alpha0 = alpha_map(&m, 0).unwrap();
        let at = |f: &MonotoneMap, a: &[u8], b: &[u8]| {
            m.pair(f.apply(m.index_of(&ls(3, a), &ls(3, b)).unwrap()))
        };
        assert_eq!(at(&alpha3, &[0, 1], &[2]), (ls(3, &[0, 1]), ls(3, &[1, 2])));
        assert_eq!(at(&alpha3, &[1, 2], &[]), (ls(3, &[1]), ls(3, &[1, 2])));
        assert_eq!(at(&alpha0, &[0], &[2]), (ls(3, &[]), ls(3, &[0, 2])));
    }

    #[test]
    fn union_map_carriers_line_up() {
        let n = 2;
        let u = v_of(&ls(n, &[0, 1]));
        let o = ostar_poset(&u, &u).unwrap();
        assert_eq!(o.len(), 5);
        assert_eq!(o.star_poset().size(), 3);
        assert_eq!(o.product(), &star(&u, &u));
        for (k, &(a, b)) in o.pairs().iter().enumerate() {
            let target = o.sigma().apply(k);
            assert_eq!(o.star_members()[target], a.union(&b));
            assert_eq!(o.index_of(&a, &b), Some(k));
        }
    }

    #[test]
    fn slice_witnesses_on_a_small_product() {
        let n = 2;
        let u = u_of(&ls(n, &[0]));
        let v = v_of(&ls(n, &[0, 1]));
        let product = star(&u, &v);
        for c in product.members() {
            let over = sg_cofinal_witness(&u, &v, &c).unwrap();
            assert!(over.chain.first().assignment().iter().enumerate().all(|(i, &x)| i == x));
            let last = over.chain.last();
            assert!(last.assignment().windows(2).all(|w| w[0] == w[1]));

            let under = sg_final_witness(&u, &v, &c).unwrap();
            assert!(under
                .chain
                .first()
                .assignment()
                .iter()
                .enumerate()
                .all(|(i, &x)| i == x));
            let last = under.chain.last();
            assert!(last.assignment().windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn witness_rejects_non_members() {
        let n = 2;
        let u = u_of(&ls(n, &[0]));
        let outside = ls(n, &[1]);
        assert!(matches!(
            sg_cofinal_witness(&u, &u, &outside),
            Err(ChromaticError::NotInProduct { .. })
        ));
    }

    #[test]
    fn degenerate_height_zero_slices() {
        let u = UpSet::full(0).unwrap();
        let c = ls(0, &[]);
        let over = sg_cofinal_witness(&u, &u, &c).unwrap();
        assert_eq!(over.comma.size(), 1);
        let under = sg_final_witness(&u, &u, &c).unwrap();
        assert_eq!(under.comma.size(), 1);
        assert!(under.chain.is_empty());
    }
}
