//! Reference implementations for cross-checking. Deliberately naive, and
//! built only on the permutation primitives in [`crate::perm`].

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::canonical::Code;
use crate::error::{Error, Result};
use crate::perm::{check_len, verify_conjugacy, PermTuple, Permutation};

/// Largest `n` [`brute_force_scp`] accepts (`8! = 40320` candidates).
pub const DEFAULT_CAP: usize = 8;

/// First `τ` in lexicographic order with `b_j = τ⁻¹ a_j τ` for all `j`.
pub fn brute_force_scp(a: &PermTuple, b: &PermTuple) -> Result<Option<Permutation>> {
    brute_force_scp_capped(a, b, DEFAULT_CAP)
}

pub fn brute_force_scp_capped(
    a: &PermTuple,
    b: &PermTuple,
    cap: usize,
) -> Result<Option<Permutation>> {
    check_len("ground set", a.n(), b.n())?;
    check_len("degree", a.d(), b.d())?;
    if a.n() > cap {
        return Err(Error::OracleCapExceeded { n: a.n(), cap });
    }
    let mut images: Vec<usize> = (0..a.n()).collect();
    loop {
        let tau = Permutation::new(images.clone())?;
        if verify_conjugacy(a, b, &tau)? {
            return Ok(Some(tau));
        }
        if !next_permutation(&mut images) {
            return Ok(None);
        }
    }
}

/// Advances to the next permutation in lexicographic order; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Minimum over start vertices of the BFS-relabeled code, computed the slow way.
pub fn brute_force_connected_label(a: &PermTuple) -> Result<Code> {
    let n = a.n();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let mut visited = BTreeSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        visited.insert(v);
        order.push(v);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for k in 0..a.d() {
                let w = a.perm(k).apply(u)?;
                if visited.insert(w) {
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::NotTransitive { reached: order.len(), n });
        }
        // `order` lists old labels by new label, i.e. it is γ⁻¹.
        let gamma_inv = Permutation::new(order)?;
        let gamma = gamma_inv.inverse();
        let mut code = Vec::with_capacity(n * a.d());
        for p in a.perms() {
            let conj = gamma_inv.compose(p)?.compose(&gamma)?;
            code.extend_from_slice(conj.images());
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    Ok(Code::from(best.expect("n >= 1")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::test_util::*;

    #[test]
    fn next_permutation_enumerates_all() {
        let mut v = alloc::vec![0, 1, 2, 3];
        let mut count = 1;
        let mut prev = v.clone();
        while next_permutation(&mut v) {
            assert!(v > prev);
            prev = v.clone();
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(prev, alloc::vec![3, 2, 1, 0]);
    }

    #[test]
    fn scp_examples() {
        let id = PermTuple::identity(3, 1);
        assert!(brute_force_scp(&id, &id).unwrap().unwrap().is_identity());
        let a = t1(&[&[2, 3, 1]]);
        let b = t1(&[&[3, 1, 2]]);
        assert_eq!(brute_force_scp(&a, &b).unwrap(), Some(p1(&[1, 3, 2])));
        assert_eq!(brute_force_scp(&a, &t1(&[&[1, 2, 3]])).unwrap(), None);
    }

    #[test]
    fn cap_is_enforced() {
        let big = PermTuple::identity(9, 1);
        assert_eq!(
            brute_force_scp(&big, &big),
            Err(Error::OracleCapExceeded { n: 9, cap: 8 })
        );
        assert!(brute_force_scp_capped(&big, &big, 9).unwrap().is_some());
    }

    #[test]
    fn connected_label_examples() {
        let c1 = |s: &[usize]| Code::from(s.iter().map(|x| x - 1).collect::<Vec<_>>());
        assert_eq!(brute_force_connected_label(&t1(&[&[2, 3, 1]])).unwrap(), c1(&[2, 3, 1]));
        assert_eq!(
            brute_force_connected_label(&t1(&[&[2, 1, 4, 3], &[1, 3, 2, 4]])).unwrap(),
            c1(&[2, 1, 4, 3, 1, 3, 2, 4])
        );
        assert_eq!(brute_force_connected_label(&PermTuple::identity(1, 2)).unwrap(), c1(&[1, 1]));
        assert!(matches!(
            brute_force_connected_label(&t1(&[&[2, 1, 3]])),
            Err(Error::NotTransitive { reached: 2, n: 3 })
        ));
    }
}
