//! Permutations of `{0, .., n-1}` and ordered tuples of them.
//!
//! Permutations act on the right: `apply(g, i)` is `i^g`, and
//! `compose(g, h)` is "first `g`, then `h`".

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A bijection on `{0, .., n-1}` stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates `images` as a bijection. Use this for anything read from outside.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyTuple);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation { reason: "image out of range" });
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation { reason: "repeated image" });
            }
        }
        Ok(Permutation { images })
    }

    /// Skips validation. The caller guarantees `images` is a bijection on
    /// `{0, .., images.len()-1}`.
    pub fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// `i^g`, bounds-checked.
    pub fn apply(&self, i: usize) -> Result<usize> {
        self.images
            .get(i)
            .copied()
            .ok_or(Error::VertexOutOfRange { vertex: i, n: self.len() })
    }

    /// `i^g` for a vertex already known to be in range.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Left-to-right product: `i^(gh) = (i^g)^h`.
    pub fn compose(&self, h: &Permutation) -> Result<Permutation> {
        check_len("ground set", self.len(), h.len())?;
        Ok(Permutation { images: self.images.iter().map(|&x| h.images[x]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// An ordered `d`-tuple of permutations on a common ground set of size `n`.
///
/// This is also the permutation digraph: vertex `i` has one out-arc of colour
/// `j` to `perm(j).image(i)`. Arcs are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermTuple {
    n: usize,
    perms: Vec<Permutation>,
}

impl PermTuple {
    pub fn new(perms: Vec<Permutation>) -> Result<Self> {
        let n = perms.first().ok_or(Error::EmptyTuple)?.len();
        if n == 0 {
            return Err(Error::EmptyTuple);
        }
        for p in &perms[1..] {
            check_len("ground set", n, p.len())?;
        }
        Ok(PermTuple { n, perms })
    }

    pub fn identity(n: usize, d: usize) -> Self {
        assert!(n >= 1 && d >= 1, "identity tuple needs n >= 1 and d >= 1");
        PermTuple { n, perms: vec![Permutation::identity(n); d] }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of permutations in the tuple (the degree of the digraph).
    #[inline]
    pub fn d(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    #[inline]
    pub fn perm(&self, color: usize) -> &Permutation {
        &self.perms[color]
    }

    pub fn into_perms(self) -> Vec<Permutation> {
        self.perms
    }

    /// Arcs leaving `v`, in ascending colour order.
    pub fn out_arcs(&self, v: usize) -> impl Iterator<Item = crate::Arc> + '_ {
        self.perms
            .iter()
            .enumerate()
            .map(move |(color, p)| crate::Arc { ini: v, ter: p.image(v), color })
    }
}

/// `(t⁻¹ a_1 t, .., t⁻¹ a_d t)`.
///
/// Uses `c[t(x)] = t(a(x))`, which avoids materialising `t⁻¹`.
pub fn conjugate_tuple(a: &PermTuple, t: &Permutation) -> Result<PermTuple> {
    check_len("ground set", a.n(), t.len())?;
    let t = t.images();
    let perms = a
        .perms()
        .iter()
        .map(|p| {
            let mut c = vec![0; t.len()];
            for (x, &ax) in p.images().iter().enumerate() {
                c[t[x]] = t[ax];
            }
            Permutation { images: c }
        })
        .collect();
    Ok(PermTuple { n: a.n(), perms })
}

/// True iff `b_j = t⁻¹ a_j t` for every `j`. Linear in `d·n`, no allocation.
pub fn verify_conjugacy(a: &PermTuple, b: &PermTuple, t: &Permutation) -> Result<bool> {
    check_len("ground set", a.n(), b.n())?;
    check_len("ground set", a.n(), t.len())?;
    check_len("degree", a.d(), b.d())?;
    let t = t.images();
    Ok(a.perms().iter().zip(b.perms()).all(|(pa, pb)| {
        let (pa, pb) = (pa.images(), pb.images());
        (0..t.len()).all(|x| pb[t[x]] == t[pa[x]])
    }))
}

pub(crate) fn check_len(what: &'static str, left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { what, left, right })
    }
}

#[cfg(test)]
pub(crate) mod test_util {
    use super::*;

    /// Permutation from 1-based images, as written in the examples.
    pub fn p1(images: &[usize]) -> Permutation {
        Permutation::new(images.iter().map(|&x| x - 1).collect()).unwrap()
    }

    pub fn t1(rows: &[&[usize]]) -> PermTuple {
        PermTuple::new(rows.iter().map(|r| p1(r)).collect()).unwrap()
    }

    pub fn arb_perm(n: usize) -> impl proptest::strategy::Strategy<Value = Permutation> {
        use proptest::prelude::*;
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(Permutation::from_images_unchecked)
    }

    pub fn arb_tuple(n: usize, d: usize) -> impl proptest::strategy::Strategy<Value = PermTuple> {
        use proptest::prelude::*;
        proptest::collection::vec(arb_perm(n), d).prop_map(|v| PermTuple::new(v).unwrap())
    }
}
