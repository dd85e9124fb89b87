//! Independent oracles shared by the integration tests. None of these call
//! into the implementation paths they are used to check.

#![allow(dead_code)]

use std::collections::VecDeque;

/// Fraction-free (Bareiss) elimination to row echelon form. Returns the
/// echelon matrix and the pivot columns.
pub fn bareiss_echelon(m: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut pivots = Vec::new();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Basis of the rational kernel, each vector scaled to coprime integers.
pub fn rational_kernel(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.first().map_or(0, Vec::len);
    let (a, pivots) = bareiss_echelon(m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        // x = num / den per coordinate; back-substitute from the last pivot row.
        let mut num = vec![0i128; n];
        let mut den = vec![1i128; n];
        num[f] = 1;
        for (row, &pc) in pivots.iter().enumerate().rev() {
            // a[row][pc] * x_pc = -Σ_{j>pc} a[row][j] x_j
            let mut s_num = 0i128;
            let mut s_den = 1i128;
            for j in pc + 1..n {
                if a[row][j] == 0 || num[j] == 0 {
                    continue;
                }
                let t_num = a[row][j] * num[j];
                let t_den = den[j];
                s_num = s_num * t_den + t_num * s_den;
                s_den *= t_den;
                let g = gcd(s_num, s_den).max(1);
                s_num /= g;
                s_den /= g;
            }
            let mut x_num = -s_num;
            let mut x_den = s_den * a[row][pc];
            if x_den < 0 {
                x_num = -x_num;
                x_den = -x_den;
            }
            let g = gcd(x_num, x_den).max(1);
            num[pc] = x_num / g;
            den[pc] = x_den / g;
        }
        let l = den.iter().fold(1i128, |acc, &d| acc / gcd(acc, d) * d);
        let mut v: Vec<i128> = (0..n).map(|i| num[i] * (l / den[i])).collect();
        let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x)).max(1);
        for x in &mut v {
            *x /= g;
        }
        basis.push(v);
    }
    basis
}

/// Determinant by Bareiss elimination.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Sylvester's criterion: every leading principal minor positive.
pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(&sub) > 0
    })
}

/// Number of edges not in a BFS spanning forest.
pub fn cycle_rank_by_spanning_forest(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (k, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, k));
        if a != b {
            adj[b].push((a, k));
        }
    }
    let mut seen = vec![false; n];
    let mut tree_edges = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(u, _) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    tree_edges += 1;
                    queue.push_back(u);
                }
            }
        }
    }
    edges.len() - tree_edges
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![vec![0; n]; n];
    for &(a, b) in edges {
        adj[a][b] += 1;
        adj[b][a] += 1;
    }
    adj
}

/// Backtracking search for an adjacency-preserving bijection.
pub fn brute_force_isomorphic(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    fn extend(a: &[Vec<usize>], b: &[Vec<usize>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] || a[k][k] != b[cand][cand] {
                continue;
            }
            if (0..k).all(|i| a[k][i] == b[cand][map[i]]) {
                map.push(cand);
                used[cand] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[cand] = false;
                map.pop();
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Affine Dynkin reference shapes as (vertex count, edges).
pub fn affine_a(n: usize) -> (usize, Vec<(usize, usize)>) {
    (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// `D~_k` for `k ≥ 4`: `k + 1` vertices.
pub fn affine_d(k: usize) -> (usize, Vec<(usize, usize)>) {
    let spine = k - 3;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let last = spine - 1;
    edges.extend([(0, spine), (0, spine + 1), (last, spine + 2), (last, spine + 3)]);
    (k + 1, edges)
}

/// A star with a center and arms of the given lengths.
pub fn star(arms: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    (next, edges)
}
