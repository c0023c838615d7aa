//! Connected components of a permutation digraph.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{PermTuple, Permutation};

/// One coloured arc `ini -> ter`, with `ter = perms[color](ini)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub ini: usize,
    pub ter: usize,
    pub color: usize,
}

/// The orbits of `<a_1, .., a_d>` on `{0, .., n-1}`, each with its induced
/// tuple on local vertices `{0, .., n_i - 1}`.
///
/// Components are numbered by their smallest vertex. Local vertex `x` of
/// component `c` is `members(c)[x]`, so local order follows global order.
#[derive(Debug, Clone)]
pub struct ComponentDecomposition {
    n: usize,
    comp_of: Vec<usize>,
    local_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    local_tuples: Vec<PermTuple>,
    size_classes: BTreeMap<usize, Vec<usize>>,
}

impl ComponentDecomposition {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of components.
    #[inline]
    pub fn k(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn component_of(&self, v: usize) -> usize {
        self.comp_of[v]
    }

    /// Position of global vertex `v` inside its component.
    #[inline]
    pub fn local_index(&self, v: usize) -> usize {
        self.local_of[v]
    }

    /// Sorted global vertices of component `c`.
    #[inline]
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    #[inline]
    pub fn local_tuple(&self, c: usize) -> &PermTuple {
        &self.local_tuples[c]
    }

    pub fn local_tuples(&self) -> &[PermTuple] {
        &self.local_tuples
    }

    /// Component ids grouped by size, ascending size, ids ascending in each group.
    pub fn size_classes(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.size_classes
    }

    /// Maps every local tuple back to global vertices and reassembles the
    /// original tuple.
    pub fn reembed(&self) -> PermTuple {
        let d = self.local_tuples[0].d();
        let mut images = vec![vec![0; self.n]; d];
        for (members, local) in self.members.iter().zip(&self.local_tuples) {
            for (row, p) in images.iter_mut().zip(local.perms()) {
                for (x, &y) in p.images().iter().enumerate() {
                    row[members[x]] = members[y];
                }
            }
        }
        PermTuple::new(images.into_iter().map(Permutation::from_images_unchecked).collect())
            .expect("reembedded tuple is well formed")
    }
}

/// Splits `a` into connected components.
///
/// Reachability follows arcs in both directions, so the components are the
/// orbits of the generated group. Linear in `d·n`.
pub fn decompose(a: &PermTuple) -> ComponentDecomposition {
    let n = a.n();
    let inverses: Vec<Permutation> = a.perms().iter().map(Permutation::inverse).collect();

    const UNSEEN: usize = usize::MAX;
    let mut comp_of = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut k = 0;
    for root in 0..n {
        if comp_of[root] != UNSEEN {
            continue;
        }
        comp_of[root] = k;
        stack.push(root);
        while let Some(u) = stack.pop() {
            let nbrs = a.perms().iter().chain(&inverses).map(|p| p.image(u));
            for w in nbrs {
                if comp_of[w] == UNSEEN {
                    comp_of[w] = k;
                    stack.push(w);
                }
            }
        }
        k += 1;
    }

    // Scanning vertices in order leaves every member list sorted.
    let mut members = vec![Vec::new(); k];
    let mut local_of = vec![0; n];
    for v in 0..n {
        let m = &mut members[comp_of[v]];
        local_of[v] = m.len();
        m.push(v);
    }

    let local_tuples = members
        .iter()
        .map(|m| {
            let perms = a
                .perms()
                .iter()
                .map(|p| {
                    Permutation::from_images_unchecked(
                        m.iter().map(|&v| local_of[p.image(v)]).collect(),
                    )
                })
                .collect();
            PermTuple::new(perms).expect("component is nonempty")
        })
        .collect();

    let mut size_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (c, m) in members.iter().enumerate() {
        size_classes.entry(m.len()).or_default().push(c);
    }

    ComponentDecomposition { n, comp_of, local_of, members, local_tuples, size_classes }
}

/// `(size, multiplicity)` pairs in ascending size order.
pub fn size_multiset(dec: &ComponentDecomposition) -> Vec<(usize, usize)> {
    dec.size_classes.iter().map(|(&s, ids)| (s, ids.len())).collect()
}

/// Whether a tuple is connected: every vertex is reachable from vertex 0.
pub fn is_transitive(a: &PermTuple) -> bool {
    reach_count_from_zero(a) == a.n()
}

pub(crate) fn reach_count_from_zero(a: &PermTuple) -> usize {
    // Permutation digraphs are strongly connected per weak component
    // (every arc lies on a cycle), so out-arcs suffice here.
    let mut seen = vec![false; a.n()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for p in a.perms() {
            let w = p.image(u);
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count
}
