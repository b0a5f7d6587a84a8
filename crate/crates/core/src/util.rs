use crate::graph::EdgeSet;

/// `k`-subsets of `0..n` as sorted index lists, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = current.as_mut().unwrap();
        // rightmost position that can still advance
        match (0..k).rev().find(|&i| next[i] < n - k + i) {
            Some(i) => {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
            }
            None => current = None,
        }
        Some(out)
    })
}

/// Subsets of `set`, by size and then lexicographically.
pub fn subsets_of_size(set: EdgeSet) -> impl Iterator<Item = EdgeSet> {
    let members: Vec<usize> = set.iter().collect();
    let n = members.len();
    (0..=n).flat_map(move |k| {
        let members = members.clone();
        combinations(n, k).map(move |c| c.into_iter().map(|i| members[i]).collect())
    })
}
