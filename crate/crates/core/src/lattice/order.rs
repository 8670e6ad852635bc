use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::LatticeError;

/// A finite relation on `0..n`, meant to be a partial order. Nothing is
/// assumed about it until [`validate_lattice`] or [`FiniteLattice::new`]
/// has looked at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `up[x]` holds every `y` with `x <= y`.
    up: Vec<FixedBitSet>,
}

impl Poset {
    /// The relation listing exactly `pairs` (reflexive pairs included).
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, y) in pairs {
            for e in [x, y] {
                if e >= n {
                    return Err(LatticeError::OutOfRange { element: e, n });
                }
            }
            up[x].insert(y);
        }
        Ok(Poset { n, up })
    }

    /// Reflexive-transitive closure of a strict relation given by `lt`.
    /// Convenient for building examples from cover relations.
    pub fn from_covers<I>(n: usize, covers: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut p = Poset::from_pairs(n, covers)?;
        for x in 0..n {
            p.up[x].insert(x);
        }
        // Warshall on rows
        for k in 0..n {
            let row_k = p.up[k].clone();
            for x in 0..n {
                if p.up[x].contains(k) {
                    p.up[x].union_with(&row_k);
                }
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// All related pairs `(x, y)` with `x <= y`, sorted.
    pub fn pairs(&self) -> Vec<[usize; 2]> {
        (0..self.n).flat_map(|x| self.up[x].ones().map(move |y| [x, y])).collect()
    }

    /// The element below every element, if any.
    pub fn least(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.up[x].count_ones(..) == self.n)
    }

    /// The element above every element, if any.
    pub fn greatest(&self) -> Option<usize> {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.leq(y, x)))
    }

    /// Nothing lies strictly below `x` except the least element.
    pub fn is_atom(&self, x: usize) -> bool {
        let bottom = self.least();
        Some(x) != bottom && Some(x) != self.greatest() && (0..self.n).all(|y| !self.lt(y, x) || Some(y) == bottom)
    }

    /// Nothing lies strictly above `x` except the greatest element.
    pub fn is_coatom(&self, x: usize) -> bool {
        let top = self.greatest();
        Some(x) != top && Some(x) != self.least() && (0..self.n).all(|y| !self.lt(x, y) || Some(y) == top)
    }

    /// Pairs `x < y` with nothing strictly between, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].ones() {
                if y != x && !(0..self.n).any(|z| z != x && z != y && self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Hasse diagram in DOT, edges pointing upwards.
    pub fn to_hasse_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for x in 0..self.n {
            s.push_str(&format!("  {x};\n"));
        }
        for (x, y) in self.covers() {
            s.push_str(&format!("  {x} -> {y};\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    NonEmpty,
    Reflexive,
    Antisymmetric,
    Transitive,
    Join,
    Meet,
}

/// The first axiom that fails, with the elements showing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} fails at {:?}", self.axiom, self.witness)
    }
}

/// Least element of `bounds` with respect to `p`, when it exists.
fn least_of(p: &Poset, bounds: &FixedBitSet) -> Option<usize> {
    bounds.ones().find(|&u| bounds.is_subset(&p.up[u]))
}

/// Greatest element of `bounds`.
fn greatest_of(p: &Poset, bounds: &FixedBitSet) -> Option<usize> {
    bounds.ones().find(|&u| bounds.ones().all(|v| p.leq(v, u)))
}

fn lower_bounds(p: &Poset, x: usize, y: usize) -> FixedBitSet {
    let mut lb = FixedBitSet::with_capacity(p.n);
    for z in 0..p.n {
        if p.leq(z, x) && p.leq(z, y) {
            lb.insert(z);
        }
    }
    lb
}

/// Checks the partial-order axioms and that every pair has a join and a
/// meet. Pairs are scanned in lexicographic order, joins before meets.
pub fn validate_lattice(p: &Poset) -> Result<(), AxiomViolation> {
    let fail = |axiom, witness: Vec<usize>| Err(AxiomViolation { axiom, witness });
    if p.n == 0 {
        return fail(Axiom::NonEmpty, Vec::new());
    }
    if let Some(x) = (0..p.n).find(|&x| !p.leq(x, x)) {
        return fail(Axiom::Reflexive, vec![x]);
    }
    for x in 0..p.n {
        if let Some(y) = p.up[x].ones().find(|&y| y != x && p.leq(y, x)) {
            return fail(Axiom::Antisymmetric, vec![x, y]);
        }
    }
    for x in 0..p.n {
        for y in p.up[x].ones() {
            if let Some(z) = p.up[y].ones().find(|&z| !p.leq(x, z)) {
                return fail(Axiom::Transitive, vec![x, y, z]);
            }
        }
    }
    for x in 0..p.n {
        for y in x + 1..p.n {
            let mut ub = p.up[x].clone();
            ub.intersect_with(&p.up[y]);
            if least_of(p, &ub).is_none() {
                return fail(Axiom::Join, vec![x, y]);
            }
        }
    }
    for x in 0..p.n {
        for y in x + 1..p.n {
            if greatest_of(p, &lower_bounds(p, x, y)).is_none() {
                return fail(Axiom::Meet, vec![x, y]);
            }
        }
    }
    Ok(())
}

/// A validated finite lattice with precomputed meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    order: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    pub fn new(order: Poset) -> Result<Self, AxiomViolation> {
        validate_lattice(&order)?;
        let n = order.n;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut ub = order.up[x].clone();
                ub.intersect_with(&order.up[y]);
                join[x * n + y] = least_of(&order, &ub).expect("validated");
                meet[x * n + y] = greatest_of(&order, &lower_bounds(&order, x, y)).expect("validated");
            }
        }
        let bottom = order.least().expect("finite lattices have a least element");
        let top = order.greatest().expect("finite lattices have a greatest element");
        Ok(FiniteLattice { order, meet, join, bottom, top })
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.n
    }

    pub fn is_empty(&self) -> bool {
        self.order.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.order.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.order.comparable(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.order.n + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.order.n + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_bound(&self, x: usize) -> bool {
        x == self.bottom || x == self.top
    }

    pub fn is_atom(&self, x: usize) -> bool {
        !self.is_bound(x) && (0..self.len()).all(|y| !self.lt(y, x) || y == self.bottom)
    }

    pub fn is_coatom(&self, x: usize) -> bool {
        !self.is_bound(x) && (0..self.len()).all(|y| !self.lt(x, y) || y == self.top)
    }

    pub fn to_hasse_dot(&self) -> String {
        self.order.to_hasse_dot()
    }
}

/// Every element other than the bounds is an atom or a coatom.
pub fn check_length3(lat: &FiniteLattice) -> bool {
    (0..lat.len()).all(|x| lat.is_bound(x) || lat.is_atom(x) || lat.is_coatom(x))
}

/// Scans for atoms `x != y` and coatoms `u != v` with `x, y < u, v`; returns
/// the lexicographically least such `[x, y, u, v]`. Works on any poset so
/// that non-lattices can be diagnosed too.
pub fn check_no_double_cover(p: &Poset) -> Option<[usize; 4]> {
    let atoms: Vec<usize> = (0..p.len()).filter(|&x| p.is_atom(x)).collect();
    let coatoms: Vec<usize> = (0..p.len()).filter(|&x| p.is_coatom(x)).collect();
    for (i, &x) in atoms.iter().enumerate() {
        for &y in &atoms[i + 1..] {
            let common: Vec<usize> = coatoms.iter().copied().filter(|&u| p.lt(x, u) && p.lt(y, u)).collect();
            if common.len() >= 2 {
                return Some([x, y, common[0], common[1]]);
            }
        }
    }
    None
}
