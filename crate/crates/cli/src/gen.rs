//! Seeded instance generators.
//!
//! Block-structured families give `a` a prescribed component structure: on
//! each block of vertices colour 1 is a uniformly random cycle through the
//! whole block (so the block is exactly one component) and every other colour
//! is a uniform permutation of the block. `b` is then a uniformly random
//! relabeling of `a`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scp_core::{conjugate_tuple, PermTuple, Permutation};

use crate::error::CliError;
use crate::instance::Instance;

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `a` and `b` independent uniform tuples.
    Random,
    /// Uniform `a`, `b` a random relabeling of it.
    ConjugatePair,
    /// `n / s` components of size `s`.
    EqualComponents,
    /// `k` near-equal components (default 2).
    FewLarge,
    /// One component on half the vertices, the rest in components of size `s`.
    Mixed,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Random, Family::ConjugatePair, Family::EqualComponents, Family::FewLarge, Family::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::ConjugatePair => "conjugate-pair",
            Family::EqualComponents => "equal-components",
            Family::FewLarge => "few-large",
            Family::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CliError::usage(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub d: usize,
    /// Component size for equal-components (alternative to `k`) and the small
    /// block size for mixed.
    pub s: Option<usize>,
    /// Component count for equal-components and few-large.
    pub k: Option<usize>,
}

impl GenParams {
    pub fn new(n: usize, d: usize) -> Self {
        GenParams { n, d, s: None, k: None }
    }
}

/// Block sizes of `a` for the block-structured families; `None` for the
/// unstructured ones. Errors on inconsistent parameters.
pub fn block_sizes(family: Family, p: &GenParams) -> Result<Option<Vec<usize>>, CliError> {
    let n = p.n;
    match family {
        Family::Random | Family::ConjugatePair => Ok(None),
        Family::EqualComponents => {
            let s = match (p.s, p.k) {
                (Some(s), None) => s,
                (None, Some(k)) if k >= 1 && n.is_multiple_of(k) => n / k,
                (None, Some(k)) => {
                    return Err(CliError::usage(format!("equal-components: k = {k} must divide n = {n}")))
                }
                (Some(_), Some(_)) => return Err(CliError::usage("equal-components: give s or k, not both")),
                (None, None) => return Err(CliError::usage("equal-components needs s or k")),
            };
            if s == 0 || !n.is_multiple_of(s) {
                return Err(CliError::usage(format!("equal-components: s = {s} must divide n = {n}")));
            }
            Ok(Some(vec![s; n / s]))
        }
        Family::FewLarge => {
            let k = p.k.unwrap_or(2);
            if k == 0 || k > n {
                return Err(CliError::usage(format!("few-large: need 1 <= k <= n, got k = {k}")));
            }
            Ok(Some((0..k).map(|i| n / k + usize::from(i < n % k)).collect()))
        }
        Family::Mixed => {
            let s = p.s.unwrap_or(8);
            if s == 0 {
                return Err(CliError::usage("mixed: s must be at least 1"));
            }
            let big = (n / 2).max(1);
            let mut blocks = vec![big];
            let mut rest = n - big;
            while rest > 0 {
                let b = rest.min(s);
                blocks.push(b);
                rest -= b;
            }
            Ok(Some(blocks))
        }
    }
}

pub fn generate(family: Family, p: &GenParams, seed: u64) -> Result<Instance, CliError> {
    if p.n == 0 || p.d == 0 {
        return Err(CliError::usage("n and d must be at least 1"));
    }
    let blocks = block_sizes(family, p)?;
    let mut rng = rng(seed);
    let a = match &blocks {
        Some(blocks) => block_tuple(blocks, p.d, &mut rng),
        None => random_tuple(p.n, p.d, &mut rng),
    };
    let b = match family {
        Family::Random => random_tuple(p.n, p.d, &mut rng),
        _ => conjugate_tuple(&a, &random_perm(p.n, &mut rng))?,
    };
    Ok(Instance { a, b: Some(b) })
}

pub fn random_perm(n: usize, rng: &mut Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images_unchecked(images)
}

pub fn random_tuple(n: usize, d: usize, rng: &mut Rng) -> PermTuple {
    PermTuple::new((0..d).map(|_| random_perm(n, rng)).collect()).expect("n, d >= 1")
}

/// Tuple whose components are the consecutive blocks of the given sizes.
pub fn block_tuple(blocks: &[usize], d: usize, rng: &mut Rng) -> PermTuple {
    let n: usize = blocks.iter().sum();
    let mut rows = vec![vec![0; n]; d];
    let mut base = 0;
    for &s in blocks {
        let mut idx: Vec<usize> = (base..base + s).collect();
        idx.shuffle(rng);
        for i in 0..s {
            rows[0][idx[i]] = idx[(i + 1) % s];
        }
        for row in &mut rows[1..] {
            let mut img = idx.clone();
            img.shuffle(rng);
            for (x, y) in (base..base + s).zip(img) {
                row[x] = y;
            }
        }
        base += s;
    }
    PermTuple::new(rows.into_iter().map(Permutation::from_images_unchecked).collect()).expect("n, d >= 1")
}
