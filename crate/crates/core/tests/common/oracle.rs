// Brute-force references kept independent of the library: plain vectors,
// no pruning, no shared code paths.

#![allow(dead_code)]

/// All permutations of 1..n, lexicographic.
pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n as u32 {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Every k-subset of 0..n as increasing index lists.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

pub fn same_order(xs: &[u32], ys: &[u32]) -> bool {
    xs.len() == ys.len() && (0..xs.len()).all(|i| (0..xs.len()).all(|j| (xs[i] < xs[j]) == (ys[i] < ys[j])))
}

pub fn contains(host: &[u32], pattern: &[u32]) -> bool {
    if pattern.len() > host.len() {
        return false;
    }
    index_subsets(host.len(), pattern.len()).iter().any(|idx| {
        let sub: Vec<u32> = idx.iter().map(|&i| host[i]).collect();
        same_order(&sub, pattern)
    })
}

pub fn avoids_all(host: &[u32], basis: &[Vec<u32>]) -> bool {
    basis.iter().all(|p| !contains(host, p))
}

/// Av_n(basis) by filtering all of S_n.
pub fn avoiders(basis: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    all_perms(n).into_iter().filter(|p| avoids_all(p, basis)).collect()
}

/// Host values playing pattern value `role` in some occurrence of `pattern`.
pub fn role_values(host: &[u32], pattern: &[u32], role: u32) -> Vec<u32> {
    let at = pattern.iter().position(|&v| v == role).unwrap();
    let mut out: Vec<u32> = index_subsets(host.len(), pattern.len())
        .iter()
        .filter(|idx| {
            let sub: Vec<u32> = idx.iter().map(|&i| host[i]).collect();
            same_order(&sub, pattern)
        })
        .map(|idx| host[idx[at]])
        .collect();
    out.sort();
    out.dedup();
    out
}

/// (value playing `r1`, value playing `r2`) over all occurrences of `pattern`.
pub fn role_pairs(host: &[u32], pattern: &[u32], r1: u32, r2: u32) -> Vec<(u32, u32)> {
    let i = pattern.iter().position(|&v| v == r1).unwrap();
    let j = pattern.iter().position(|&v| v == r2).unwrap();
    index_subsets(host.len(), pattern.len())
        .iter()
        .filter(|idx| {
            let sub: Vec<u32> = idx.iter().map(|&k| host[k]).collect();
            same_order(&sub, pattern)
        })
        .map(|idx| (host[idx[i]], host[idx[j]]))
        .collect()
}

/// Longest decreasing subsequence by trying every subset.
pub fn longest_decreasing(p: &[u32]) -> usize {
    (0..=p.len())
        .rev()
        .find(|&k| {
            index_subsets(p.len(), k)
                .iter()
                .any(|idx| idx.windows(2).all(|w| p[w[0]] > p[w[1]]))
        })
        .unwrap_or(0)
}

/// Π(a,b) straight from the definition: every arrangement of [a+b] in which
/// removing a leaves an increasing word, minus the identity.
pub fn partial_shuffle(a: usize, b: usize) -> Vec<Vec<u32>> {
    let a_val = a as u32;
    all_perms(a + b)
        .into_iter()
        .filter(|p| {
            let rest: Vec<u32> = p.iter().copied().filter(|&v| v != a_val).collect();
            rest.windows(2).all(|w| w[0] < w[1]) && p.windows(2).any(|w| w[0] > w[1])
        })
        .collect()
}

/// C(n, k) by Pascal's triangle.
pub fn pascal(n: usize, k: usize) -> i128 {
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}
