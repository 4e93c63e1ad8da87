/// All subsets of [n] as sorted 1-based lists, in mask order (∅ first).
pub fn subsets_of(n: usize) -> Vec<Vec<usize>> {
    assert!(n < 20);
    (0u32..1 << n)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

/// All partitions of [n] into nonempty blocks; blocks sorted by minimum,
/// elements sorted. Bell(n) many.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    assert!(n <= 10);
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut parts: Vec<Vec<Vec<usize>>> = vec![vec![vec![1]]];
    for x in 2..=n {
        let mut next = Vec::new();
        for p in &parts {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        parts = next;
    }
    parts
}

/// Ordered tuples of positive integers with the given length and sum.
pub fn positive_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if total < parts {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 1..=total - parts + 1 {
        for mut rest in positive_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_of(0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets_of(3).len(), 8);
        assert!(subsets_of(3).contains(&vec![1, 3]));
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), b, "Bell({n})");
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(positive_compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(positive_compositions(4, 1), vec![vec![4]]);
        assert_eq!(positive_compositions(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(positive_compositions(5, 3).len(), 6);
    }
}
