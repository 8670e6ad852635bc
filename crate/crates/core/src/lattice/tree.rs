use serde::{Deserialize, Serialize};

use super::order::FiniteLattice;
use super::LatticeError;

/// Upper limit on tree nodes before `build_tree` gives up.
pub const MAX_TREE_NODES: usize = 1 << 20;

/// Generation levels `F_0 = generators`, `F_{k+1}` = all pairwise meets and
/// joins of `F_k`, and the rank of every element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub generators: Vec<usize>,
    /// `rank[x]` is the least `k` with `x` in `F_k`.
    pub rank: Vec<usize>,
    /// Sorted members of `F_0, F_1, ...` up to the fixpoint.
    pub levels: Vec<Vec<usize>>,
}

impl RankTable {
    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// Largest element code of rank `k`, so that `r(x) = k` implies
    /// `x <= rank_bound(k)` as integers.
    pub fn rank_bound(&self, k: usize) -> Option<usize> {
        (0..self.rank.len()).rev().find(|&x| self.rank[x] == k)
    }

    pub fn elements_of_rank(&self, k: usize) -> Vec<usize> {
        (0..self.rank.len()).filter(|&x| self.rank[x] == k).collect()
    }
}

pub fn closure_and_rank(lat: &FiniteLattice, generators: &[usize]) -> Result<RankTable, LatticeError> {
    let n = lat.len();
    if generators.is_empty() {
        return Err(LatticeError::EmptyGenerators);
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= n) {
        return Err(LatticeError::OutOfRange { element: g, n });
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let mut rank = vec![usize::MAX; n];
    for &g in &gens {
        rank[g] = 0;
    }
    let mut levels = vec![gens.clone()];
    loop {
        let cur = levels.last().expect("F_0 exists");
        let k = levels.len();
        let mut next = cur.clone();
        for (i, &x) in cur.iter().enumerate() {
            for &y in &cur[i + 1..] {
                for z in [lat.meet(x, y), lat.join(x, y)] {
                    if rank[z] == usize::MAX {
                        rank[z] = k;
                        next.push(z);
                    }
                }
            }
        }
        if next.len() == cur.len() {
            break;
        }
        next.sort_unstable();
        levels.push(next);
    }
    let unreached: Vec<usize> = (0..n).filter(|&x| rank[x] == usize::MAX).collect();
    if !unreached.is_empty() {
        return Err(LatticeError::Coverage { unreached });
    }
    Ok(RankTable { generators: gens, rank, levels })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepOp {
    Join,
    Meet,
}

/// How a node's element arises from its parent's: `parent op a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub op: StepOp,
    pub a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    /// Index of the parent in the previous level.
    pub parent: Option<usize>,
    pub element: usize,
    pub step: Option<Step>,
    pub children: usize,
}

/// Sequences `<x_0, ..., x_i>` of non-bound elements with `r(x_i) = i`, each
/// `x_i` obtained from `x_{i-1}` by a join or meet with an element of smaller
/// rank. Level `i` holds the sequences of length `i + 1`, lexicographically
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenTree {
    pub levels: Vec<Vec<TreeNode>>,
}

impl GenTree {
    /// Number of levels that hold at least one node.
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// The full sequence ending at node `idx` of `level`.
    pub fn branch(&self, level: usize, idx: usize) -> Vec<usize> {
        let mut out = vec![0; level + 1];
        let (mut l, mut i) = (level, idx);
        loop {
            let node = &self.levels[l][i];
            out[l] = node.element;
            match node.parent {
                Some(p) => {
                    l -= 1;
                    i = p;
                }
                None => break,
            }
        }
        out
    }

    /// Nodes without children as `(level, index)`, deepest level first and
    /// lexicographic within a level.
    pub fn maximal_branches(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (l, level) in self.levels.iter().enumerate().rev() {
            out.extend(level.iter().enumerate().filter(|(_, n)| n.children == 0).map(|(i, _)| (l, i)));
        }
        out
    }
}

/// Builds every node of depth at most `depth` and checks the tree
/// properties on the result.
pub fn build_tree(lat: &FiniteLattice, ranks: &RankTable, depth: usize) -> Result<GenTree, LatticeError> {
    let n = lat.len();
    let root: Vec<TreeNode> = ranks
        .generators
        .iter()
        .filter(|&&g| !lat.is_bound(g))
        .map(|&g| TreeNode { parent: None, element: g, step: None, children: 0 })
        .collect();
    let mut levels = vec![root];
    let mut total = levels[0].len();
    for i in 1..=depth {
        let below: Vec<usize> = (0..n).filter(|&a| ranks.rank[a] < i).collect();
        let mut next = Vec::new();
        let prev = levels.last_mut().expect("root level");
        for (p, node) in prev.iter_mut().enumerate() {
            let x = node.element;
            // smallest witness per reachable element, joins first
            let mut found: Vec<Option<Step>> = vec![None; n];
            for &a in &below {
                for (op, z) in [(StepOp::Join, lat.join(x, a)), (StepOp::Meet, lat.meet(x, a))] {
                    if ranks.rank[z] == i && !lat.is_bound(z) && found[z].is_none() {
                        found[z] = Some(Step { op, a });
                    }
                }
            }
            for (z, step) in found.into_iter().enumerate() {
                if let Some(step) = step {
                    next.push(TreeNode { parent: Some(p), element: z, step: Some(step), children: 0 });
                    node.children += 1;
                }
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > MAX_TREE_NODES {
            return Err(LatticeError::TreeLimit { nodes: total });
        }
        levels.push(next);
    }
    let tree = GenTree { levels };
    if let Some(v) = audit_tree(lat, ranks, &tree, depth).into_iter().next() {
        return Err(LatticeError::Tree(v));
    }
    Ok(tree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum TreeViolation {
    /// An entry has the wrong rank, is a bound, or does not follow from its
    /// predecessor by a join or meet with a lower-rank element.
    Membership { branch: Vec<usize>, index: usize },
    /// Repeated entry or incomparable neighbours.
    P1 { branch: Vec<usize>, index: usize },
    /// Neighbours are not an atom and a coatom in alternating order.
    Alternation { branch: Vec<usize>, index: usize },
    /// A non-bound element of rank at most the depth ends no node.
    P2 { element: usize },
    /// An entry exceeds the rank bound of its position.
    P4 { branch: Vec<usize>, index: usize },
}

/// Checks every node against the tree definition, (P1) with the atom/coatom
/// alternation, (P2) up to `depth`, and (P4).
pub fn audit_tree(lat: &FiniteLattice, ranks: &RankTable, tree: &GenTree, depth: usize) -> Vec<TreeViolation> {
    let mut out = Vec::new();
    for (l, level) in tree.levels.iter().enumerate() {
        for (idx, node) in level.iter().enumerate() {
            let branch = tree.branch(l, idx);
            let x = node.element;
            let member = ranks.rank[x] == l
                && !lat.is_bound(x)
                && (l == 0
                    || (0..lat.len()).any(|a| {
                        ranks.rank[a] < l && (lat.join(branch[l - 1], a) == x || lat.meet(branch[l - 1], a) == x)
                    }));
            if !member {
                out.push(TreeViolation::Membership { branch: branch.clone(), index: l });
            }
            if ranks.rank_bound(l).is_none_or(|m| x > m) {
                out.push(TreeViolation::P4 { branch: branch.clone(), index: l });
            }
            if l > 0 {
                let prev = branch[l - 1];
                if branch[..l].contains(&x) || !lat.comparable(prev, x) {
                    out.push(TreeViolation::P1 { branch: branch.clone(), index: l });
                }
                let (lo, hi) = if lat.lt(prev, x) { (prev, x) } else { (x, prev) };
                let turned = l < 2 || lat.lt(branch[l - 2], prev) != lat.lt(prev, x);
                if !(lat.is_atom(lo) && lat.is_coatom(hi) && turned) {
                    out.push(TreeViolation::Alternation { branch, index: l });
                }
            }
        }
    }
    for x in 0..lat.len() {
        let r = ranks.rank[x];
        if lat.is_bound(x) || r > depth {
            continue;
        }
        if !tree.levels.get(r).is_some_and(|level| level.iter().any(|n| n.element == x)) {
            out.push(TreeViolation::P2 { element: x });
        }
    }
    out
}
