use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::paths::IncreasingPathTable;
use super::GrsError;

/// A colouring of the ascending 4-subsets of `0..size` by small integers,
/// stored densely in combinatorial-number-system order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourColoring {
    size: usize,
    palette: u32,
    colors: Vec<u32>,
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[inline]
fn rank(q: [usize; 4]) -> usize {
    binom(q[0], 1) + binom(q[1], 2) + binom(q[2], 3) + binom(q[3], 4)
}

/// Ascending 4-subsets of `0..size` in lexicographic order.
pub fn four_subsets(size: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..size).flat_map(move |x| {
        (x + 1..size).flat_map(move |y| (y + 1..size).flat_map(move |u| (u + 1..size).map(move |v| [x, y, u, v])))
    })
}

impl FourColoring {
    pub fn from_fn(size: usize, palette: u32, mut color: impl FnMut([usize; 4]) -> u32) -> Self {
        let mut colors = vec![0; binom(size, 4)];
        for q in four_subsets(size) {
            let c = color(q);
            debug_assert!(c < palette);
            colors[rank(q)] = c;
        }
        FourColoring { size, palette, colors }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    /// Colour of an ascending 4-subset.
    pub fn color(&self, q: [usize; 4]) -> u32 {
        debug_assert!(q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] < self.size);
        self.colors[rank(q)]
    }
}

/// Colours of the dichotomy proof: `K_{i,j}` for `0 <= i, j <= n - 2`, and
/// the residual colour `K` for 4-subsets in no `K_{i,j}` class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrsColor {
    Pair { i: usize, j: usize },
    Residual,
}

impl GrsColor {
    pub fn palette(n: usize) -> u32 {
        ((n - 1) * (n - 1) + 1) as u32
    }

    pub fn encode(self, n: usize) -> u32 {
        match self {
            GrsColor::Pair { i, j } => (i * (n - 1) + j) as u32,
            GrsColor::Residual => ((n - 1) * (n - 1)) as u32,
        }
    }

    pub fn decode(code: u32, n: usize) -> GrsColor {
        let code = code as usize;
        let w = n - 1;
        if code >= w * w {
            GrsColor::Residual
        } else {
            GrsColor::Pair { i: code / w, j: code % w }
        }
    }
}

impl fmt::Display for GrsColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrsColor::Pair { i, j } => write!(f, "K_{{{i},{j}}}"),
            GrsColor::Residual => write!(f, "K"),
        }
    }
}

/// The least `(i, j)` (lexicographically) such that the `i`-th vertex of the
/// fixed path `x -> y` is adjacent to the `j`-th vertex of `u -> v`, with
/// indices capped at `n - 2`; `K` when there is none.
pub fn color_4subset(table: &IncreasingPathTable, n: usize, q: [usize; 4]) -> GrsColor {
    let [x, y, u, v] = q;
    let left = table.path(x, y);
    let right = table.path(u, v);
    let cap = n.saturating_sub(2);
    let g = table.graph();
    for (i, &a) in left.iter().enumerate().take(cap + 1) {
        for (j, &b) in right.iter().enumerate().take(cap + 1) {
            if g.adjacent(a, b) {
                return GrsColor::Pair { i, j };
            }
        }
    }
    GrsColor::Residual
}

/// Colours every ascending 4-subset of the table's host. Fails with the
/// witness path when some fixed increasing path has more than `n - 2`
/// edges, since then the host already contains a chordless `n`-path.
pub fn grs_coloring(table: &IncreasingPathTable, n: usize) -> Result<FourColoring, GrsError> {
    if n < 2 {
        return Err(GrsError::InvalidParameter(format!("path length n = {n} must be at least 2")));
    }
    if let Some((x, y, len)) = table.longest() {
        if len > n - 2 {
            let path = table.path(x, y);
            return Err(GrsError::HasChordlessPath(table.labels(&path[..n])));
        }
    }
    Ok(FourColoring::from_fn(table.size(), GrsColor::palette(n), |q| {
        color_4subset(table, n, q).encode(n)
    }))
}

/// A `q`-subset all of whose 4-subsets share one colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousCertificate {
    /// Ascending positions.
    pub subset: Vec<usize>,
    pub color: u32,
}

impl HomogeneousCertificate {
    pub fn validate(&self, coloring: &FourColoring) -> bool {
        self.subset.windows(2).all(|w| w[0] < w[1])
            && self.subset.last().is_none_or(|&m| m < coloring.size())
            && four_subsets(self.subset.len())
                .all(|[a, b, c, d]| coloring.color([self.subset[a], self.subset[b], self.subset[c], self.subset[d]]) == self.color)
    }
}

/// Visits every homogeneous `q`-subset of `vertices` in lexicographic order,
/// optionally restricted to one colour. Exact ordered backtracking: each new
/// element must agree on every 4-subset it completes.
pub fn for_each_homogeneous<F>(
    coloring: &FourColoring,
    vertices: &[usize],
    q: usize,
    only: Option<u32>,
    mut visit: F,
) -> Result<(), GrsError>
where
    F: FnMut(HomogeneousCertificate) -> ControlFlow<()>,
{
    if q < 4 {
        return Err(GrsError::InvalidParameter(format!("homogeneous size q = {q} must be at least 4")));
    }
    let mut pool = vertices.to_vec();
    pool.sort_unstable();
    pool.dedup();
    let mut chosen = Vec::with_capacity(q);
    let _ = extend(coloring, &pool, 0, q, only, None, &mut chosen, &mut visit);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    coloring: &FourColoring,
    pool: &[usize],
    from: usize,
    q: usize,
    only: Option<u32>,
    color: Option<u32>,
    chosen: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(HomogeneousCertificate) -> ControlFlow<()>,
{
    if chosen.len() == q {
        let cert = HomogeneousCertificate {
            subset: chosen.clone(),
            color: color.expect("q >= 4 fixes a colour"),
        };
        debug_assert!(cert.validate(coloring));
        return visit(cert);
    }
    let need = q - chosen.len();
    for idx in from..pool.len() {
        if pool.len() - idx < need {
            break;
        }
        let cand = pool[idx];
        let mut next_color = color;
        if chosen.len() >= 3 {
            let mut ok = true;
            'triples: for a in 0..chosen.len() {
                for b in a + 1..chosen.len() {
                    for c in b + 1..chosen.len() {
                        let got = coloring.color([chosen[a], chosen[b], chosen[c], cand]);
                        match next_color {
                            None => {
                                if only.is_some_and(|o| o != got) {
                                    ok = false;
                                    break 'triples;
                                }
                                next_color = Some(got);
                            }
                            Some(want) if want != got => {
                                ok = false;
                                break 'triples;
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
        }
        chosen.push(cand);
        let flow = extend(coloring, pool, idx + 1, q, only, next_color, chosen, visit);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// The lexicographically first homogeneous `q`-subset of `vertices`.
pub fn find_homogeneous(
    coloring: &FourColoring,
    vertices: &[usize],
    q: usize,
) -> Result<Option<HomogeneousCertificate>, GrsError> {
    let mut found = None;
    for_each_homogeneous(coloring, vertices, q, None, |cert| {
        found = Some(cert);
        ControlFlow::Break(())
    })?;
    Ok(found)
}
