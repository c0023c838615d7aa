//! LSD radix sort for equal-length integer sequences over a bounded alphabet.

use alloc::vec;
use alloc::vec::Vec;

/// Stable sorted order of `keys` (lexicographic, positionwise).
///
/// All keys must have the same length `L` and symbols below `alphabet`.
/// Runs in `O(L · (keys.len() + alphabet))`.
pub fn radix_order<K: AsRef<[usize]>>(keys: &[K], alphabet: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    let Some(first) = keys.first() else {
        return order;
    };
    let len = first.as_ref().len();
    assert!(
        keys.iter().all(|k| k.as_ref().len() == len),
        "radix_order needs equal-length keys"
    );
    if keys.len() < 2 {
        return order;
    }

    let mut scratch = vec![0; keys.len()];
    let mut counts = vec![0usize; alphabet + 1];
    for pos in (0..len).rev() {
        counts.fill(0);
        for &i in &order {
            counts[keys[i].as_ref()[pos] + 1] += 1;
        }
        for s in 1..counts.len() {
            counts[s] += counts[s - 1];
        }
        for &i in &order {
            let slot = &mut counts[keys[i].as_ref()[pos]];
            scratch[*slot] = i;
            *slot += 1;
        }
        core::mem::swap(&mut order, &mut scratch);
    }
    order
}

/// Sorts `items` stably by the equal-length sequence `key` returns.
pub fn radix_sort_by_key<T, F>(items: Vec<T>, alphabet: usize, key: F) -> Vec<T>
where
    F: Fn(&T) -> &[usize],
{
    let order = radix_order(&items.iter().map(&key).collect::<Vec<_>>(), alphabet);
    let mut slots: Vec<Option<T>> = items.into_iter().map(Some).collect();
    order.into_iter().map(|i| slots[i].take().expect("order is a permutation")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        let empty: [[usize; 2]; 0] = [];
        assert!(radix_order(&empty, 3).is_empty());
        assert_eq!(radix_order(&[[1, 0]], 2), vec![0]);
        let keys = [[1, 0, 1], [0, 2, 2], [1, 0, 0], [0, 2, 2]];
        assert_eq!(radix_order(&keys, 3), vec![1, 3, 2, 0]);
        let zero_len: [[usize; 0]; 3] = [[], [], []];
        assert_eq!(radix_order(&zero_len, 1), vec![0, 1, 2]);
    }

    #[test]
    fn sort_by_key_is_stable() {
        let items = vec![("b", vec![1, 1]), ("a", vec![0, 1]), ("c", vec![1, 1]), ("d", vec![0, 1])];
        let sorted: Vec<_> = radix_sort_by_key(items, 2, |x| &x.1).into_iter().map(|x| x.0).collect();
        assert_eq!(sorted, vec!["a", "d", "b", "c"]);
    }

    proptest! {
        #[test]
        fn agrees_with_comparison_sort(
            (alphabet, keys) in (1usize..6, 0usize..5).prop_flat_map(|(alphabet, len)| {
                (Just(alphabet), proptest::collection::vec(
                    proptest::collection::vec(0..alphabet, len), 0..40))
            })
        ) {
            let order = radix_order(&keys, alphabet);
            let mut expected: Vec<usize> = (0..keys.len()).collect();
            expected.sort_by(|&i, &j| keys[i].cmp(&keys[j]));
            prop_assert_eq!(order, expected);
        }
    }
}
