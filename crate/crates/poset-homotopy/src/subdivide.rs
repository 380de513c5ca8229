//! Functoriality of barycentric subdivision and the homotopy it preserves.

use poset_core::{MonotoneMap, Subdivision};

use crate::chain::HomotopyChain;
use crate::error::HomotopyError;

/// The induced map `s(f): s(P) -> s(Q)` sending a chain to its image.
/// Monotone maps carry chains to chains, so this is total; functoriality
/// (`s(id) = id`, `s(g∘f) = s(g)∘s(f)`) holds on the nose.
pub fn subdivision_map(f: &MonotoneMap) -> Result<MonotoneMap, HomotopyError> {
    let sd = Subdivision::new(f.dom())?;
    let sc = Subdivision::new(f.cod())?;
    subdivision_map_with(f, &sd, &sc)
}

/// As [`subdivision_map`], against caller-supplied subdivisions (whose
/// parents must be the carriers of `f`).
pub fn subdivision_map_with(
    f: &MonotoneMap,
    sd: &Subdivision,
    sc: &Subdivision,
) -> Result<MonotoneMap, HomotopyError> {
    if sd.parent() != f.dom() || sc.parent() != f.cod() {
        return Err(HomotopyError::WitnessFailure {
            context: "subdivision parents do not match the map carriers".into(),
        });
    }
    let assignment = (0..sd.len())
        .map(|i| {
            let image: Vec<usize> = sd.chain(i).members().iter().map(|&p| f.apply(p)).collect();
            sc.index_of(&image).ok_or_else(|| HomotopyError::WitnessFailure {
                context: format!(
                    "image of chain {} is not a chain in the codomain",
                    sd.poset.label(i)
                ),
            })
        })
        .collect::<Result<Vec<usize>, _>>()?;
    MonotoneMap::new(sd.poset.clone(), sc.poset.clone(), assignment)
        .map_err(HomotopyError::from)
}

/// Lifts a pointwise inequality `f <= g` to an explicit zig-zag from `s(g)`
/// to `s(f)` in the subdivision.
///
/// The construction walks a linear extension `p_1, ..., p_n` of the domain
/// and interpolates: step `k` maps a chain `σ` to
/// `{f(p) : rank(p) < k} ∪ {g(p) : rank(p) >= k}` (the `u_k`), linked
/// through the one-sided thickenings `v_k` that use `rank(p) <= k` for the
/// `f` part. Every intermediate image is verified to be a chain and every
/// step verified monotone; the endpoints are exactly `s(g)` and `s(f)`.
pub fn subdivision_homotopy_chain(
    f: &MonotoneMap,
    g: &MonotoneMap,
) -> Result<HomotopyChain, HomotopyError> {
    if !f.pointwise_leq(g).map_err(HomotopyError::from)? {
        return Err(HomotopyError::NotComparable);
    }
    let sd = Subdivision::new(f.dom())?;
    let sc = Subdivision::new(f.cod())?;

    let n = f.dom().size();
    // rank(p_i) = i+1 along a linear extension, so rank ranges over 1..=n
    let mut rank = vec![0usize; n];
    for (i, &p) in f.dom().linear_extension().iter().enumerate() {
        rank[p] = i + 1;
    }

    let step = |k: usize, closed: bool| -> Result<MonotoneMap, HomotopyError> {
        let assignment = (0..sd.len())
            .map(|ci| {
                let mut image: Vec<usize> = sd
                    .chain(ci)
                    .members()
                    .iter()
                    .flat_map(|&p| {
                        let f_side = if closed { rank[p] <= k } else { rank[p] < k };
                        let g_side = rank[p] >= k;
                        let mut out = Vec::with_capacity(2);
                        if f_side {
                            out.push(f.apply(p));
                        }
                        if g_side {
                            out.push(g.apply(p));
                        }
                        out
                    })
                    .collect();
                image.sort_unstable();
                image.dedup();
                sc.index_of(&image).ok_or_else(|| HomotopyError::WitnessFailure {
                    context: format!(
                        "interpolation step {k} sent chain {} to a non-chain",
                        sd.poset.label(ci)
                    ),
                })
            })
            .collect::<Result<Vec<usize>, _>>()?;
        MonotoneMap::new(sd.poset.clone(), sc.poset.clone(), assignment)
            .map_err(HomotopyError::from)
    };

    // u_0, v_0, u_1, v_1, ..., u_n, v_n, u_{n+1}; u_{k} <= v_k >= u_{k+1}
    let mut steps = Vec::with_capacity(2 * n + 3);
    for k in 0..=n {
        steps.push(step(k, false)?);
        steps.push(step(k, true)?);
    }
    steps.push(step(n + 1, false)?);

    let chain = HomotopyChain::new_deduped(steps)?;
    let s_g = subdivision_map_with(g, &sd, &sc)?;
    let s_f = subdivision_map_with(f, &sd, &sc)?;
    if chain.first() != &s_g || chain.last() != &s_f {
        return Err(HomotopyError::WitnessFailure {
            context: "interpolation endpoints are not the subdivided maps".into(),
        });
    }
    Ok(chain)
}
