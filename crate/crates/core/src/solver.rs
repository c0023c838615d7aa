//! Deciding simultaneous conjugacy and assembling a conjugator.
//!
//! Both tuples are split into components. If the component size multisets
//! differ the answer is no. Otherwise every size class is handled on its own:
//! small components are matched through canonical labels, large ones by
//! growing a colour-preserving map from a single base vertex. The per-pair
//! local conjugators are stitched into one global `τ`, which is verified
//! before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use crate::canonical::{canonical_label_connected, local_conjugator, ConnectedLabel};
use crate::digraph::{decompose, reach_count_from_zero, size_multiset, ComponentDecomposition};
use crate::error::{Error, Result};
use crate::perm::{check_len, verify_conjugacy, PermTuple, Permutation};
use crate::radix::radix_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StrategyMode {
    /// Labels for small size classes, propagation for large ones.
    #[default]
    Auto,
    Label,
    Pairwise,
}

/// Size from which a component counts as large, as a function of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Threshold {
    /// `n_i >= n / max(1, floor(log2 n))`.
    #[default]
    NOverLog2,
    /// `n_i >= n / k`.
    NOver(usize),
    /// `n_i >= t`.
    Absolute(usize),
}

impl Threshold {
    pub fn is_large(&self, size: usize, n: usize) -> bool {
        match *self {
            Threshold::NOverLog2 => {
                let log = if n == 0 { 0 } else { n.ilog2() as usize };
                size.saturating_mul(log.max(1)) >= n
            }
            Threshold::NOver(k) => size.saturating_mul(k.max(1)) >= n,
            Threshold::Absolute(t) => size >= t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StrategyConfig {
    pub mode: StrategyMode,
    pub threshold: Threshold,
    /// Label components on the rayon pool. Has no effect unless the crate is
    /// built with the `parallel` feature. Results do not depend on it.
    pub parallel: bool,
}

impl StrategyConfig {
    pub fn with_mode(mode: StrategyMode) -> Self {
        StrategyConfig { mode, ..Default::default() }
    }

    fn strategy_for(&self, size: usize, n: usize) -> Strategy {
        match self.mode {
            StrategyMode::Label => Strategy::Label,
            StrategyMode::Pairwise => Strategy::Pairwise,
            StrategyMode::Auto if self.threshold.is_large(size, n) => Strategy::Pairwise,
            StrategyMode::Auto => Strategy::Label,
        }
    }
}

/// Strategy actually applied to a size class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Label,
    Pairwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStats {
    pub size: usize,
    pub count: usize,
    pub strategy: Strategy,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScpResult {
    pub conjugate: bool,
    /// Present iff `conjugate`; always verified.
    pub witness: Option<Permutation>,
    /// Component count of `a`.
    pub components: usize,
    /// One entry per size class examined, ascending size. Empty when the size
    /// multisets already differ.
    pub classes: Vec<ClassStats>,
}

impl ScpResult {
    fn no(components: usize, classes: Vec<ClassStats>) -> Self {
        ScpResult { conjugate: false, witness: None, components, classes }
    }
}

/// Decides whether some `τ` has `b_j = τ⁻¹ a_j τ` for all `j`.
pub fn solve(a: &PermTuple, b: &PermTuple, cfg: &StrategyConfig) -> Result<ScpResult> {
    check_len("ground set", a.n(), b.n())?;
    check_len("degree", a.d(), b.d())?;
    let n = a.n();
    let (dec_a, dec_b) = (decompose(a), decompose(b));
    if size_multiset(&dec_a) != size_multiset(&dec_b) {
        return Ok(ScpResult::no(dec_a.k(), Vec::new()));
    }

    const UNSET: usize = usize::MAX;
    let mut tau = vec![UNSET; n];
    let mut classes = Vec::with_capacity(dec_a.size_classes().len());
    for (&size, ids_a) in dec_a.size_classes() {
        let ids_b = &dec_b.size_classes()[&size];
        let strategy = cfg.strategy_for(size, n);
        let pairs = match strategy {
            Strategy::Label => match_by_labels(&dec_a, ids_a, &dec_b, ids_b, cfg.parallel),
            Strategy::Pairwise => match_pairwise(&dec_a, ids_a, &dec_b, ids_b, cfg.parallel),
        };
        classes.push(ClassStats { size, count: ids_a.len(), strategy, matched: pairs.is_some() });
        let Some(pairs) = pairs else {
            return Ok(ScpResult::no(dec_a.k(), classes));
        };
        for (ca, cb, local) in pairs {
            let (ma, mb) = (dec_a.members(ca), dec_b.members(cb));
            for (x, &y) in local.images().iter().enumerate() {
                tau[ma[x]] = mb[y];
            }
        }
    }

    debug_assert!(tau.iter().all(|&x| x != UNSET));
    let tau = Permutation::new(tau).map_err(|_| Error::VerificationFailed)?;
    if !verify_conjugacy(a, b, &tau)? {
        return Err(Error::VerificationFailed);
    }
    Ok(ScpResult { conjugate: true, witness: Some(tau), components: dec_a.k(), classes })
}

/// A component's canonical label plus what is needed to pair it up.
#[derive(Debug, Clone)]
pub struct LabeledComponent {
    pub size: usize,
    /// Smallest global vertex, used to make the pairing deterministic.
    pub anchor: usize,
    pub label: ConnectedLabel,
}

/// Pairs up two multisets of labeled components.
///
/// Succeeds iff the `(size, label)` multisets agree. Both sides are ordered by
/// `(size, label, anchor)` and zipped; the returned pairs are indices into
/// `a` and `b`.
pub fn match_components(
    a: &[LabeledComponent],
    b: &[LabeledComponent],
) -> Option<Vec<(usize, usize)>> {
    if a.len() != b.len() {
        return None;
    }
    let (oa, ob) = (canonical_order(a), canonical_order(b));
    oa.into_iter()
        .zip(ob)
        .map(|(i, j)| {
            (a[i].size == b[j].size && a[i].label.label == b[j].label.label).then_some((i, j))
        })
        .collect()
}

/// Indices ordered by `(size, label, anchor)`: sort by `(size, anchor)`, then
/// stable radix sort on labels inside each size run.
fn canonical_order(items: &[LabeledComponent]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_unstable_by_key(|&i| (items[i].size, items[i].anchor));
    let mut out = Vec::with_capacity(order.len());
    for run in order.chunk_by(|&i, &j| items[i].size == items[j].size) {
        let keys: Vec<&[usize]> = run.iter().map(|&i| items[i].label.label.symbols()).collect();
        out.extend(radix_order(&keys, items[run[0]].size).into_iter().map(|r| run[r]));
    }
    out
}

type LocalPairs = Vec<(usize, usize, Permutation)>;

fn label_components(dec: &ComponentDecomposition, ids: &[usize], parallel: bool) -> Vec<LabeledComponent> {
    let one = |c: usize, par: bool| {
        let t = dec.local_tuple(c);
        let label = connected_label(t, par).expect("components are connected");
        LabeledComponent { size: t.n(), anchor: dec.members(c)[0], label }
    };
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        // One large component parallelises inside; many small ones across.
        let inner = ids.len() == 1;
        return ids.par_iter().map(|&c| one(c, inner)).collect();
    }
    let _ = parallel;
    ids.iter().map(|&c| one(c, false)).collect()
}

fn connected_label(t: &PermTuple, parallel: bool) -> Result<ConnectedLabel> {
    #[cfg(feature = "parallel")]
    if parallel {
        return crate::canonical::canonical_label_connected_par(t);
    }
    let _ = parallel;
    canonical_label_connected(t)
}

fn match_by_labels(
    dec_a: &ComponentDecomposition,
    ids_a: &[usize],
    dec_b: &ComponentDecomposition,
    ids_b: &[usize],
    parallel: bool,
) -> Option<LocalPairs> {
    let la = label_components(dec_a, ids_a, parallel);
    let lb = label_components(dec_b, ids_b, parallel);
    let pairs = match_components(&la, &lb)?;
    Some(
        pairs
            .into_iter()
            .map(|(i, j)| (ids_a[i], ids_b[j], local_conjugator(&la[i].label, &lb[j].label)))
            .collect(),
    )
}

/// Greedy: each `a` component takes the first remaining `b` component it is
/// isomorphic to. Isomorphism is an equivalence, so greedy never misses.
fn match_pairwise(
    dec_a: &ComponentDecomposition,
    ids_a: &[usize],
    dec_b: &ComponentDecomposition,
    ids_b: &[usize],
    parallel: bool,
) -> Option<LocalPairs> {
    let mut remaining: Vec<usize> = ids_b.to_vec();
    let mut pairs = Vec::with_capacity(ids_a.len());
    for &ca in ids_a {
        let ha = dec_a.local_tuple(ca);
        let try_b = |cb: &usize| {
            pairwise_iso(ha, dec_b.local_tuple(*cb)).expect("components are connected and sized alike")
        };
        let found = first_match(&remaining, try_b, parallel);
        let (pos, phi) = found?;
        pairs.push((ca, remaining.remove(pos), phi));
    }
    Some(pairs)
}

fn first_match<F>(candidates: &[usize], f: F, parallel: bool) -> Option<(usize, Permutation)>
where
    F: Fn(&usize) -> Option<Permutation> + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel && candidates.len() > 1 {
        use rayon::prelude::*;
        return candidates
            .par_iter()
            .enumerate()
            .filter_map(|(i, cb)| f(cb).map(|phi| (i, phi)))
            .find_first(|_| true);
    }
    let _ = parallel;
    candidates.iter().enumerate().find_map(|(i, cb)| f(cb).map(|phi| (i, phi)))
}

/// Colour-preserving isomorphism between two connected tuples of equal size,
/// found by fixing the image `w` of vertex 0 and propagating along arcs.
///
/// Each candidate `w` costs `O(d·m)`; all candidates `O(d·m²)`. Returns the
/// map for the first `w` that works.
pub fn pairwise_iso(ha: &PermTuple, hb: &PermTuple) -> Result<Option<Permutation>> {
    check_len("component size", ha.n(), hb.n())?;
    check_len("degree", ha.d(), hb.d())?;
    for h in [ha, hb] {
        let reached = reach_count_from_zero(h);
        if reached != h.n() {
            return Err(Error::NotTransitive { reached, n: h.n() });
        }
    }
    let m = ha.n();
    const UNSET: usize = usize::MAX;
    let mut phi = vec![UNSET; m];
    let mut used = vec![false; m];
    let mut queue: Vec<usize> = Vec::with_capacity(m);

    for w in 0..m {
        phi[0] = w;
        used[w] = true;
        queue.push(0);
        let mut head = 0;
        let mut ok = true;
        'grow: while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = phi[x];
            for (pa, pb) in ha.perms().iter().zip(hb.perms()) {
                let (y, fy) = (pa.image(x), pb.image(fx));
                if phi[y] == UNSET {
                    if used[fy] {
                        ok = false;
                        break 'grow;
                    }
                    phi[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if phi[y] != fy {
                    ok = false;
                    break 'grow;
                }
            }
        }
        if ok {
            debug_assert_eq!(queue.len(), m);
            return Ok(Some(Permutation::from_images_unchecked(phi)));
        }
        for &x in &queue {
            used[phi[x]] = false;
            phi[x] = UNSET;
        }
        queue.clear();
    }
    Ok(None)
}
