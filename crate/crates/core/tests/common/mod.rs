//! Brute-force oracles shared by the integration tests. They work on plain
//! adjacency matrices and enumerate by definition, without using the
//! library's search routines.

#![allow(dead_code)]

use grs_lab_core::construction::ConstructionState;
use grs_lab_core::Graph;

/// Dense adjacency matrix over positions `0..n`.
#[derive(Clone, Debug)]
pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in edges {
            m[u][v] = true;
            m[v][u] = true;
        }
        Adj { n, m }
    }

    /// From a graph whose labels are `0..n`.
    pub fn of_graph(g: &Graph) -> Self {
        let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (u as usize, v as usize)).collect();
        Adj::from_edges(g.len(), &edges)
    }

    pub fn of_state(s: &ConstructionState) -> Self {
        let edges: Vec<(usize, usize)> = s.edges().map(|(u, v)| (u as usize, v as usize)).collect();
        Adj::from_edges(s.vertex_count(), &edges)
    }

    pub fn is_chordless_path(&self, p: &[usize]) -> bool {
        let distinct = (0..p.len()).all(|i| !p[..i].contains(&p[i]));
        distinct
            && (0..p.len()).all(|i| {
                (i + 1..p.len()).all(|j| self.m[p[i]][p[j]] == (j == i + 1))
            })
    }
}

/// Every injective sequence of length `len` over `0..n`, passed to `visit`
/// until it returns true.
pub fn any_injective(n: usize, len: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, len: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == len {
            return visit(cur);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                let hit = go(n, len, cur, used, visit);
                cur.pop();
                used[v] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    if len > n {
        return false;
    }
    go(n, len, &mut Vec::with_capacity(len), &mut vec![false; n], visit)
}

/// Some chordless path on `len` vertices, by trying every injective sequence.
pub fn brute_chordless(adj: &Adj, len: usize) -> bool {
    any_injective(adj.n, len, &mut |p| adj.is_chordless_path(p))
}

/// Some four distinct vertices `a0, a1, b0, b1` with all four `a`-`b` edges.
pub fn brute_k22(adj: &Adj) -> bool {
    let n = adj.n;
    let m = &adj.m;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // the three ways to split {a, b, c, d} into two pairs
                    let splits = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))];
                    if splits
                        .iter()
                        .any(|&((x, y), (u, v))| m[x][u] && m[x][v] && m[y][u] && m[y][v])
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Chordless 4-paths of a sparse-ish graph by walking neighbour lists:
/// every ordered `x0 x1 x2 x3` with consecutive edges is tried.
pub fn walk_chordless4(adj: &Adj) -> Option<[usize; 4]> {
    let nbrs: Vec<Vec<usize>> = (0..adj.n).map(|v| (0..adj.n).filter(|&w| adj.m[v][w]).collect()).collect();
    for x0 in 0..adj.n {
        for &x1 in &nbrs[x0] {
            for &x2 in &nbrs[x1] {
                if x2 == x0 || adj.m[x0][x2] {
                    continue;
                }
                for &x3 in &nbrs[x2] {
                    if x3 != x1 && x3 != x0 && !adj.m[x0][x3] && !adj.m[x1][x3] {
                        return Some([x0, x1, x2, x3]);
                    }
                }
            }
        }
    }
    None
}

/// The traceable graph on `0..size` with spine `i - (i+1)` and the chords
/// `(i, j)`, `j >= i + 2`, selected by `mask` in lexicographic order.
pub fn spine_graph(size: usize, mask: u64) -> (Graph, Adj) {
    let mut edges: Vec<(usize, usize)> = (1..size).map(|v| (v - 1, v)).collect();
    let mut bit = 0;
    for i in 0..size {
        for j in i + 2..size {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    let g = Graph::on_range(size, edges.iter().map(|&(u, v)| (u as u64, v as u64))).unwrap();
    (g, Adj::from_edges(size, &edges))
}

/// The five per-stage lemmas straight from their statements, with blocks
/// rebuilt from the coding list. Returns which ones hold, in the order
/// greatest, codeconnection, tracing, components, goup.
pub fn definitional_lemmas(s: &ConstructionState) -> [bool; 5] {
    let adj = Adj::of_state(s);
    let e = |x: usize, y: usize| adj.m[x][y];
    let coding: Vec<usize> = s.coding().iter().map(|&c| c as usize).collect();
    let k = s.k() as usize;
    let mut block = vec![usize::MAX; k + 1];
    let mut lo = 0;
    for (j, &c) in coding.iter().enumerate() {
        for x in lo..=c {
            block[x] = j;
        }
        lo = c + 1;
    }
    let covered = lo == k + 1;
    let greatest = covered
        && (0..=k).all(|x| {
            let c = coding[block[x]];
            x <= c && (x == c || e(x, c))
        });
    let codeconnection = coding.iter().all(|&a| coding.iter().all(|&b| a == b || e(a, b)));
    let tracing = (0..k).all(|d| e(d, d + 1));
    let components = covered
        && (0..=k).all(|x| (x + 1..=k).all(|y| !e(x, y) || block[x] == block[y] || coding.contains(&x)));
    let goup = covered
        && (0..=k).all(|x| {
            (x + 1..=k).all(|y| {
                !e(x, y) || block[x] == block[y] || (0..=k).filter(|&z| block[z] == block[y]).all(|z| z == x || e(x, z))
            })
        });
    [greatest, codeconnection, tracing, components, goup]
}
