use serde::{Deserialize, Serialize};

use crate::graph::{Embedding, PathSeq, PatternKind};

use super::coloring::{GrsColor, HomogeneousCertificate};
use super::paths::IncreasingPathTable;
use super::GrsError;

/// Builds the `K_{2,2}` copy carried by a set homogeneous for `K_{i,j}`:
/// with `x1 < ... < x8` its first eight elements, the vertices
/// `a_i(x1,x2), a_i(x3,x4)` on one side and `a_j(x5,x6), a_j(x7,x8)` on the
/// other.
pub fn extract_k22(table: &IncreasingPathTable, n: usize, cert: &HomogeneousCertificate) -> Result<Embedding, GrsError> {
    let (i, j) = match GrsColor::decode(cert.color, n) {
        GrsColor::Pair { i, j } => (i, j),
        GrsColor::Residual => return Err(GrsError::WrongColor { want: "K_{i,j}", got: GrsColor::Residual }),
    };
    if cert.subset.len() < 8 {
        return Err(GrsError::SubsetTooSmall { need: 8, got: cert.subset.len() });
    }
    let x = &cert.subset;
    let pick = |lo: usize, hi: usize, idx: usize| -> Result<usize, GrsError> {
        table
            .path(x[lo], x[hi])
            .get(idx)
            .copied()
            .ok_or_else(|| GrsError::InvalidWitness(format!("path {}->{} has no vertex {idx}", x[lo], x[hi])))
    };
    let a = [pick(0, 1, i)?, pick(2, 3, i)?];
    let b = [pick(4, 5, j)?, pick(6, 7, j)?];
    let mut all = [a[0], a[1], b[0], b[1]];
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(GrsError::ImageCollision(all.iter().map(|&p| table.label(p)).collect()));
    }
    let emb = Embedding {
        pattern: PatternKind::K22,
        a: a.iter().map(|&p| table.label(p)).collect(),
        b: b.iter().map(|&p| table.label(p)).collect(),
    };
    emb.validate(table.graph())
        .map_err(|e| GrsError::InvalidWitness(e.to_string()))?;
    Ok(emb)
}

/// Result of the greedy walk along the concatenated fixed paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyExtraction {
    pub path: PathSeq,
    /// Positions `y_0 < y_1 < ... < y_{n-1}` chosen by the greedy.
    pub steps: Vec<usize>,
    /// Positions `x_0 < ... < x_n` of the certificate used.
    pub anchors: Vec<usize>,
}

/// Greedy extraction of a chordless `n`-path from a set homogeneous for the
/// residual colour: walk the concatenation of the fixed paths
/// `x_0 -> x_1 -> ... -> x_n`, starting at `y_0 = x_0` and always jumping to
/// the furthest path vertex adjacent to the current one. Homogeneity keeps
/// `y_i <= x_{i+1}`; any breach is reported as an error.
pub fn extract_chordless(
    table: &IncreasingPathTable,
    n: usize,
    cert: &HomogeneousCertificate,
) -> Result<GreedyExtraction, GrsError> {
    if GrsColor::decode(cert.color, n) != GrsColor::Residual {
        return Err(GrsError::WrongColor { want: "K", got: GrsColor::decode(cert.color, n) });
    }
    if n == 0 || cert.subset.len() < n + 1 {
        return Err(GrsError::SubsetTooSmall { need: n + 1, got: cert.subset.len() });
    }
    let anchors = cert.subset[..=n].to_vec();
    let mut walk = vec![anchors[0]];
    for w in anchors.windows(2) {
        walk.extend_from_slice(&table.path(w[0], w[1])[1..]);
    }
    let g = table.graph();
    let mut steps = vec![anchors[0]];
    let mut at = 0; // index of the current step within `walk`
    while steps.len() < n {
        let cur = walk[at];
        let next = (at + 1..walk.len()).rev().find(|&idx| g.adjacent(cur, walk[idx]));
        match next {
            Some(idx) => {
                at = idx;
                steps.push(walk[idx]);
            }
            None => return Err(GrsError::GreedyExhausted { step: steps.len() }),
        }
    }
    for (i, &y) in steps.iter().enumerate() {
        if y > anchors[i + 1] {
            return Err(GrsError::ProgressBound { step: i, y: table.label(y), bound: table.label(anchors[i + 1]) });
        }
    }
    let path = table.labels(&steps);
    match g.is_chordless(&path) {
        Ok(true) => Ok(GreedyExtraction { path, steps, anchors }),
        _ => Err(GrsError::InvalidWitness(format!("greedy output {:?} is not chordless", path.vertices()))),
    }
}
