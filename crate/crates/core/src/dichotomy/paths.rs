use crate::graph::{Graph, PathSeq, Vertex};

use super::GrsError;

/// For every pair of positions `x < y` of a traceable graph, the
/// lexicographically least shortest strictly increasing path from `x` to
/// `y`. A shortest increasing path is automatically chordless: a chord would
/// be a shortcut.
#[derive(Clone, Debug)]
pub struct IncreasingPathTable {
    graph: Graph,
    paths: Vec<Vec<usize>>,
}

#[inline]
fn pair_index(x: usize, y: usize) -> usize {
    debug_assert!(x < y);
    y * (y - 1) / 2 + x
}

impl IncreasingPathTable {
    /// Positions are taken in the graph's stored order, which must trace it.
    pub fn build(graph: &Graph) -> Result<Self, GrsError> {
        if !graph.is_traceable() {
            return Err(GrsError::NotTraceable);
        }
        let n = graph.len();
        let mut paths = vec![Vec::new(); n * n.saturating_sub(1) / 2];
        let mut dist = vec![usize::MAX; n];
        for y in 1..n {
            // increasing-path distance from every z <= y to y
            dist[y] = 0;
            for z in (0..y).rev() {
                dist[z] = graph
                    .row(z)
                    .ones()
                    .filter(|&w| w > z && w <= y)
                    .map(|w| dist[w])
                    .min()
                    .expect("z + 1 is a neighbour")
                    + 1;
            }
            for x in 0..y {
                let mut path = Vec::with_capacity(dist[x] + 1);
                let mut cur = x;
                path.push(cur);
                while cur != y {
                    cur = graph
                        .row(cur)
                        .ones()
                        .find(|&w| w > cur && w <= y && dist[w] + 1 == dist[cur])
                        .expect("a neighbour one step closer exists");
                    path.push(cur);
                }
                paths[pair_index(x, y)] = path;
            }
        }
        Ok(IncreasingPathTable { graph: graph.clone(), paths })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn size(&self) -> usize {
        self.graph.len()
    }

    /// The fixed increasing path from position `x` to position `y > x`.
    pub fn path(&self, x: usize, y: usize) -> &[usize] {
        &self.paths[pair_index(x, y)]
    }

    /// Number of edges on the fixed path, `N(x, y)`.
    pub fn edge_len(&self, x: usize, y: usize) -> usize {
        self.path(x, y).len() - 1
    }

    /// The `i`-th vertex (as a position) of the fixed path.
    pub fn vertex_at(&self, x: usize, y: usize, i: usize) -> usize {
        self.path(x, y)[i]
    }

    /// Largest `N(x, y)` over all pairs, with the pair attaining it first.
    pub fn longest(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        let mut best: Option<(usize, usize, usize)> = None;
        for y in 1..n {
            for x in 0..y {
                let len = self.edge_len(x, y);
                if best.is_none_or(|(_, _, b)| len > b) {
                    best = Some((x, y, len));
                }
            }
        }
        best
    }

    pub fn labels(&self, positions: &[usize]) -> PathSeq {
        PathSeq(positions.iter().map(|&p| self.graph.vertex(p)).collect())
    }

    pub fn label(&self, pos: usize) -> Vertex {
        self.graph.vertex(pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_has_unique_routes() {
        let t = IncreasingPathTable::build(&Graph::path(4)).unwrap();
        assert_eq!(t.path(0, 3), &[0, 1, 2, 3]);
        assert_eq!(t.edge_len(0, 3), 3);
    }

    #[test]
    fn shortcut_is_taken() {
        let g = Graph::on_range(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let t = IncreasingPathTable::build(&g).unwrap();
        assert_eq!(t.path(0, 3), &[0, 2, 3]);
        assert_eq!(t.edge_len(0, 3), 2);
        assert_eq!(t.path(0, 2), &[0, 2]);
        assert_eq!(t.longest(), Some((0, 3, 2)));
    }

    #[test]
    fn ties_break_lexicographically() {
        // 0-1-2-3 plus 0-2 and 1-3: both 0,1,3 and 0,2,3 have two edges
        let g = Graph::on_range(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]).unwrap();
        let t = IncreasingPathTable::build(&g).unwrap();
        assert_eq!(t.path(0, 3), &[0, 1, 3]);
    }

    #[test]
    fn rejects_untraceable() {
        let g = Graph::on_range(3, [(0, 2), (1, 2)]).unwrap();
        assert!(matches!(IncreasingPathTable::build(&g), Err(GrsError::NotTraceable)));
    }
}
