//! Breadth-first relabeling, codes, and canonical labels.
//!
//! For a connected tuple `a` on `m` vertices and a start vertex `v`, a BFS from
//! `v` that scans out-arcs in ascending colour order numbers the vertices in
//! first-visit order. Conjugating `a` by that numbering `γ_v` and concatenating
//! the image rows gives a code of length `d·m`. The lexicographically smallest
//! code over all `v` is a complete invariant of the connected tuple under
//! simultaneous conjugation, and the minimising relabelings of two conjugate
//! tuples compose into a conjugator.
//!
//! For a disconnected tuple the label is the multiset of per-component labels,
//! serialized in ascending `(size, code)` order with a size prefix per part.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{decompose, ComponentDecomposition};
use crate::error::{Error, Result};
use crate::perm::{verify_conjugacy, PermTuple, Permutation};
use crate::radix::radix_order;

/// Output of [`relabel`]: `gamma` maps old labels to BFS labels and
/// `relabeled = γ⁻¹ a_j γ` for every colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelabelResult {
    pub gamma: Permutation,
    pub relabeled: PermTuple,
}

/// Concatenated image rows of a tuple, colour 0 first. Symbols are 0-based;
/// the [`Display`](fmt::Display) form is 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code(Vec<usize>);

impl Code {
    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_symbols(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Code {
    fn from(symbols: Vec<usize>) -> Self {
        Code(symbols)
    }
}

impl AsRef<[usize]> for Code {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        f.write_str(")")
    }
}

/// Canonical label of a connected tuple together with the relabeling that
/// realises it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedLabel {
    pub label: Code,
    /// Smallest start vertex whose BFS code equals `label`.
    pub best_vertex: usize,
    /// `γ` for `best_vertex`.
    pub gamma: Permutation,
}

/// One component's contribution to a [`GraphLabel`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelPart {
    pub size: usize,
    pub code: Code,
}

/// Canonical label of an arbitrary tuple: per-component labels in ascending
/// `(size, code)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphLabel {
    d: usize,
    parts: Vec<LabelPart>,
}

impl GraphLabel {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[LabelPart] {
        &self.parts
    }

    /// Flat serialization: per part `n_i, d`, then the `d·n_i` code symbols
    /// (1-based).
    pub fn to_words(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.iter().map(|p| 2 + p.code.len()).sum());
        for p in &self.parts {
            out.push(p.size);
            out.push(self.d);
            out.extend(p.code.symbols().iter().map(|s| s + 1));
        }
        out
    }

    /// Inverse of [`to_words`](Self::to_words). `None` on malformed input.
    pub fn from_words(words: &[usize]) -> Option<GraphLabel> {
        let mut parts = Vec::new();
        let mut d = None;
        let mut rest = words;
        while let [size, part_d, tail @ ..] = rest {
            let (size, part_d) = (*size, *part_d);
            if size == 0 || part_d == 0 || *d.get_or_insert(part_d) != part_d {
                return None;
            }
            let len = size.checked_mul(part_d)?;
            if tail.len() < len {
                return None;
            }
            let (symbols, next) = tail.split_at(len);
            if symbols.iter().any(|&s| s == 0 || s > size) {
                return None;
            }
            parts.push(LabelPart { size, code: Code(symbols.iter().map(|s| s - 1).collect()) });
            rest = next;
        }
        if !rest.is_empty() {
            return None;
        }
        Some(GraphLabel { d: d?, parts })
    }
}

impl fmt::Display for GraphLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parts {
            write!(f, "[{}:{}]", p.size, p.code)?;
        }
        Ok(())
    }
}

const UNVISITED: usize = usize::MAX;

/// Reusable BFS buffers. `order` doubles as the BFS queue and ends up as `γ⁻¹`.
struct Relabeler {
    gamma: Vec<usize>,
    order: Vec<usize>,
}

impl Relabeler {
    fn new(m: usize) -> Self {
        Relabeler { gamma: vec![UNVISITED; m], order: Vec::with_capacity(m) }
    }

    fn bfs(&mut self, a: &PermTuple, v: usize) -> Result<()> {
        self.gamma.fill(UNVISITED);
        self.order.clear();
        self.gamma[v] = 0;
        self.order.push(v);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head];
            head += 1;
            for p in a.perms() {
                let w = p.image(u);
                if self.gamma[w] == UNVISITED {
                    self.gamma[w] = self.order.len();
                    self.order.push(w);
                }
            }
        }
        if self.order.len() == a.n() {
            Ok(())
        } else {
            Err(Error::NotTransitive { reached: self.order.len(), n: a.n() })
        }
    }

    /// Code of `γ⁻¹ a γ`: row `j`, position `i` is `γ(a_j(γ⁻¹(i)))`.
    fn write_code(&self, a: &PermTuple, out: &mut Vec<usize>) {
        out.clear();
        for p in a.perms() {
            let img = p.images();
            out.extend(self.order.iter().map(|&x| self.gamma[img[x]]));
        }
    }
}

/// BFS relabeling of a connected tuple from start vertex `v`.
pub fn relabel(a: &PermTuple, v: usize) -> Result<RelabelResult> {
    if v >= a.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: a.n() });
    }
    let mut r = Relabeler::new(a.n());
    r.bfs(a, v)?;
    let perms = a
        .perms()
        .iter()
        .map(|p| {
            Permutation::from_images_unchecked(
                r.order.iter().map(|&x| r.gamma[p.image(x)]).collect(),
            )
        })
        .collect();
    Ok(RelabelResult {
        gamma: Permutation::from_images_unchecked(r.gamma),
        relabeled: PermTuple::new(perms)?,
    })
}

/// Concatenation of the image rows of `a`, colour 0 first.
pub fn code(a: &PermTuple) -> Code {
    Code(a.perms().iter().flat_map(|p| p.images().iter().copied()).collect())
}

/// Lexicographically smallest BFS code over all start vertices.
///
/// `O(d·m²)` time, `O(d·m)` memory: only the running minimum is kept.
pub fn canonical_label_connected(a: &PermTuple) -> Result<ConnectedLabel> {
    Relabeler::new(a.n()).bfs(a, 0)?;
    Ok(label_over_starts(a, 0..a.n()).expect("nonempty start range"))
}

/// Minimum over the given start vertices; ties go to the smallest vertex.
fn label_over_starts(a: &PermTuple, starts: core::ops::Range<usize>) -> Option<ConnectedLabel> {
    let m = a.n();
    let mut r = Relabeler::new(m);
    let mut best: Vec<usize> = Vec::with_capacity(a.d() * m);
    let mut best_gamma = vec![0; m];
    let mut best_vertex = None;
    let mut candidate = Vec::with_capacity(a.d() * m);
    for v in starts {
        r.bfs(a, v).expect("caller checked transitivity");
        r.write_code(a, &mut candidate);
        if best_vertex.is_none() || candidate < best {
            core::mem::swap(&mut best, &mut candidate);
            best_gamma.copy_from_slice(&r.gamma);
            best_vertex = Some(v);
        }
    }
    Some(ConnectedLabel {
        label: Code(best),
        best_vertex: best_vertex?,
        gamma: Permutation::from_images_unchecked(best_gamma),
    })
}

/// [`canonical_label_connected`] with the start vertices spread over the rayon
/// pool. The result is identical to the sequential one.
#[cfg(feature = "parallel")]
pub fn canonical_label_connected_par(a: &PermTuple) -> Result<ConnectedLabel> {
    use rayon::prelude::*;

    const MIN_STARTS_PER_TASK: usize = 64;
    if a.n() < 2 * MIN_STARTS_PER_TASK {
        return canonical_label_connected(a);
    }
    Relabeler::new(a.n()).bfs(a, 0)?;
    let m = a.n();
    let tasks = m.div_ceil(MIN_STARTS_PER_TASK);
    let best = (0..tasks)
        .into_par_iter()
        .filter_map(|t| {
            let lo = t * MIN_STARTS_PER_TASK;
            label_over_starts(a, lo..(lo + MIN_STARTS_PER_TASK).min(m))
        })
        .reduce_with(|x, y| {
            if (&y.label, y.best_vertex) < (&x.label, x.best_vertex) {
                y
            } else {
                x
            }
        });
    Ok(best.expect("m >= 1"))
}

/// A conjugator `τ = γ_u · γ_w⁻¹` from `a` to `b`, verified before return.
///
/// `la` and `lb` must be the canonical labels of `a` and `b`.
pub fn extract_conjugator(
    a: &PermTuple,
    la: &ConnectedLabel,
    b: &PermTuple,
    lb: &ConnectedLabel,
) -> Result<Permutation> {
    if la.label != lb.label || a.n() != b.n() || a.d() != b.d() {
        return Err(Error::LabelMismatch);
    }
    let tau = local_conjugator(la, lb);
    if verify_conjugacy(a, b, &tau)? {
        Ok(tau)
    } else {
        Err(Error::VerificationFailed)
    }
}

/// `γ_u · γ_w⁻¹` without verification.
pub(crate) fn local_conjugator(la: &ConnectedLabel, lb: &ConnectedLabel) -> Permutation {
    let gw_inv = lb.gamma.inverse();
    Permutation::from_images_unchecked(
        la.gamma.images().iter().map(|&c| gw_inv.image(c)).collect(),
    )
}

/// Canonical label of an arbitrary tuple.
pub fn canonical_label_graph(a: &PermTuple) -> GraphLabel {
    let dec = decompose(a);
    let labels: Vec<Code> = dec
        .local_tuples()
        .iter()
        .map(|t| canonical_label_connected(t).expect("components are connected").label)
        .collect();
    assemble_graph_label(&dec, a.d(), labels)
}

/// [`canonical_label_graph`] with components labeled in parallel.
#[cfg(feature = "parallel")]
pub fn canonical_label_graph_par(a: &PermTuple) -> GraphLabel {
    use rayon::prelude::*;

    let dec = decompose(a);
    let labels: Vec<Code> = dec
        .local_tuples()
        .par_iter()
        .map(|t| canonical_label_connected_par(t).expect("components are connected").label)
        .collect();
    assemble_graph_label(&dec, a.d(), labels)
}

fn assemble_graph_label(dec: &ComponentDecomposition, d: usize, mut labels: Vec<Code>) -> GraphLabel {
    let mut parts = Vec::with_capacity(dec.k());
    for (&size, ids) in dec.size_classes() {
        let class: Vec<Code> = ids.iter().map(|&c| core::mem::take(&mut labels[c])).collect();
        for i in radix_order(&class, size) {
            parts.push(LabelPart { size, code: class[i].clone() });
        }
    }
    GraphLabel { d, parts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::conjugate_tuple;
    use crate::perm::test_util::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn c1(symbols: &[usize]) -> Code {
        Code(symbols.iter().map(|s| s - 1).collect())
    }

    #[test]
    fn relabel_cycle_from_first_vertex() {
        let a = t1(&[&[2, 3, 1]]);
        let r = relabel(&a, 0).unwrap();
        assert!(r.gamma.is_identity());
        assert_eq!(r.relabeled, a);
    }

    #[test]
    fn relabel_degree_two_examples() {
        let a = t1(&[&[2, 1, 4, 3], &[1, 3, 2, 4]]);
        let r = relabel(&a, 1).unwrap();
        assert_eq!(r.gamma, p1(&[2, 1, 3, 4]));
        assert_eq!(r.relabeled, t1(&[&[2, 1, 4, 3], &[3, 2, 1, 4]]));

        let r = relabel(&a, 3).unwrap();
        assert_eq!(r.gamma, p1(&[4, 3, 2, 1]));
        assert_eq!(r.relabeled, t1(&[&[2, 1, 4, 3], &[1, 3, 2, 4]]));
    }

    #[test]
    fn relabel_rejects_disconnected_and_out_of_range() {
        let a = t1(&[&[2, 1, 3]]);
        assert_eq!(relabel(&a, 0), Err(Error::NotTransitive { reached: 2, n: 3 }));
        assert!(matches!(relabel(&a, 3), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(
            canonical_label_connected(&a),
            Err(Error::NotTransitive { reached: 2, n: 3 })
        );
    }

    #[test]
    fn code_examples() {
        assert_eq!(code(&PermTuple::identity(3, 2)), c1(&[1, 2, 3, 1, 2, 3]));
        assert_eq!(code(&t1(&[&[2, 3, 1], &[2, 1, 3]])), c1(&[2, 3, 1, 2, 1, 3]));
        assert_eq!(code(&t1(&[&[2, 1, 4, 3], &[1, 3, 2, 4]])), c1(&[2, 1, 4, 3, 1, 3, 2, 4]));
    }

    /// Straight enumeration through the public `relabel` and `code`.
    fn all_start_codes(a: &PermTuple) -> Vec<Code> {
        (0..a.n()).map(|v| code(&relabel(a, v).unwrap().relabeled)).collect()
    }

    #[test]
    fn connected_label_examples() {
        let a = t1(&[&[2, 3, 1]]);
        assert_eq!(all_start_codes(&a), vec![c1(&[2, 3, 1]); 3]);
        let l = canonical_label_connected(&a).unwrap();
        assert_eq!(l.label, c1(&[2, 3, 1]));
        assert_eq!(l.best_vertex, 0);

        let a = t1(&[&[2, 1, 4, 3], &[1, 3, 2, 4]]);
        let small = c1(&[2, 1, 4, 3, 1, 3, 2, 4]);
        let big = c1(&[2, 1, 4, 3, 3, 2, 1, 4]);
        assert_eq!(all_start_codes(&a), vec![small.clone(), big.clone(), big, small.clone()]);
        let l = canonical_label_connected(&a).unwrap();
        assert_eq!(l.label, small);
        assert_eq!(l.best_vertex, 0);

        for d in 1..4 {
            let l = canonical_label_connected(&PermTuple::identity(1, d)).unwrap();
            assert_eq!(l.label, Code(vec![0; d]));
            assert_eq!(l.label.to_string(), ["(1)", "(1,1)", "(1,1,1)"][d - 1]);
        }
    }

    #[test]
    fn conjugator_examples() {
        let a = t1(&[&[2, 3, 1]]);
        let b = t1(&[&[3, 1, 2]]);
        let (la, lb) = (canonical_label_connected(&a).unwrap(), canonical_label_connected(&b).unwrap());
        assert_eq!(la.label, lb.label);
        let tau = extract_conjugator(&a, &la, &b, &lb).unwrap();
        // The three witnesses reverse the cycle: (1,3,2), (3,2,1), (2,1,3).
        assert!([p1(&[1, 3, 2]), p1(&[3, 2, 1]), p1(&[2, 1, 3])].contains(&tau));

        let auto = extract_conjugator(&a, &la, &a, &la).unwrap();
        assert!(verify_conjugacy(&a, &a, &auto).unwrap());

        let a = t1(&[&[2, 1, 4, 3], &[1, 3, 2, 4]]);
        let b = conjugate_tuple(&a, &p1(&[3, 4, 1, 2])).unwrap();
        let (la, lb) = (canonical_label_connected(&a).unwrap(), canonical_label_connected(&b).unwrap());
        let tau = extract_conjugator(&a, &la, &b, &lb).unwrap();
        assert!(verify_conjugacy(&a, &b, &tau).unwrap());

        let c = t1(&[&[2, 3, 4, 1], &[1, 2, 3, 4]]);
        let lc = canonical_label_connected(&c).unwrap();
        assert_eq!(extract_conjugator(&a, &la, &c, &lc), Err(Error::LabelMismatch));
    }

    #[test]
    fn graph_label_examples() {
        let l = canonical_label_graph(&PermTuple::identity(3, 1));
        assert_eq!(l.to_string(), "[1:(1)][1:(1)][1:(1)]");
        assert_eq!(l.to_words(), vec![1, 1, 1, 1, 1, 1, 1, 1, 1]);

        let l = canonical_label_graph(&t1(&[&[2, 1, 4, 3]]));
        assert_eq!(l.to_string(), "[2:(2,1)][2:(2,1)]");

        let l = canonical_label_graph(&t1(&[&[2, 1, 3]]));
        assert_eq!(l.to_string(), "[1:(1)][2:(2,1)]");
        assert_eq!(l.to_words(), vec![1, 1, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn from_words_rejects_garbage() {
        assert_eq!(GraphLabel::from_words(&[]), None);
        assert_eq!(GraphLabel::from_words(&[2, 1, 2]), None);
        assert_eq!(GraphLabel::from_words(&[2, 1, 3, 1]), None);
        assert_eq!(GraphLabel::from_words(&[1, 1, 1, 1, 2, 1, 1]), None);
        assert_eq!(GraphLabel::from_words(&[1, 1, 1, 7]), None);
    }

    fn arb_connected(max_n: usize, max_d: usize) -> impl Strategy<Value = PermTuple> {
        (1..=max_n, 1..=max_d)
            .prop_flat_map(|(n, d)| (arb_tuple(n, d), arb_perm(n)))
            .prop_map(|(a, s)| {
                // Force transitivity: replace colour 0 with an n-cycle in the order of `s`.
                let n = a.n();
                let mut img = vec![0; n];
                for i in 0..n {
                    img[s.image(i)] = s.image((i + 1) % n);
                }
                let mut perms = a.into_perms();
                perms[0] = Permutation::from_images_unchecked(img);
                PermTuple::new(perms).unwrap()
            })
    }

    proptest! {
        #[test]
        fn relabel_is_conjugation_by_gamma(a in arb_connected(12, 3)) {
            for v in 0..a.n() {
                let r = relabel(&a, v).unwrap();
                prop_assert_eq!(r.gamma.image(v), 0);
                prop_assert_eq!(&r.relabeled, &conjugate_tuple(&a, &r.gamma).unwrap());
            }
        }

        #[test]
        fn label_is_minimal_and_realised(a in arb_connected(12, 3)) {
            let l = canonical_label_connected(&a).unwrap();
            let codes = all_start_codes(&a);
            prop_assert_eq!(Some(&l.label), codes.iter().min());
            prop_assert_eq!(codes.iter().position(|c| *c == l.label), Some(l.best_vertex));
            prop_assert_eq!(&relabel(&a, l.best_vertex).unwrap().gamma, &l.gamma);
        }

        #[test]
        fn connected_label_is_invariant_and_yields_conjugator(
            (a, s) in arb_connected(16, 3).prop_flat_map(|a| { let n = a.n(); (Just(a), arb_perm(n)) })
        ) {
            let b = conjugate_tuple(&a, &s).unwrap();
            let (la, lb) = (canonical_label_connected(&a).unwrap(), canonical_label_connected(&b).unwrap());
            prop_assert_eq!(&la.label, &lb.label);
            let tau = extract_conjugator(&a, &la, &b, &lb).unwrap();
            prop_assert!(verify_conjugacy(&a, &b, &tau).unwrap());
        }

        #[test]
        fn graph_label_words_round_trip(
            a in (1usize..20, 1usize..3).prop_flat_map(|(n, d)| arb_tuple(n, d))
        ) {
            let l = canonical_label_graph(&a);
            prop_assert_eq!(GraphLabel::from_words(&l.to_words()), Some(l.clone()));
            let mut sorted = l.parts().to_vec();
            sorted.sort();
            prop_assert_eq!(sorted.as_slice(), l.parts());
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_labels_match_sequential() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [1, 50, 200, 333] {
            let mut perms = Vec::new();
            let mut cyc: Vec<usize> = (0..n).collect();
            cyc.shuffle(&mut rng);
            let mut img = vec![0; n];
            for i in 0..n {
                img[cyc[i]] = cyc[(i + 1) % n];
            }
            perms.push(Permutation::from_images_unchecked(img));
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            perms.push(Permutation::from_images_unchecked(p));
            let a = PermTuple::new(perms).unwrap();
            assert_eq!(canonical_label_connected(&a), canonical_label_connected_par(&a));
            assert_eq!(canonical_label_graph(&a), canonical_label_graph_par(&a));
        }
    }
}
