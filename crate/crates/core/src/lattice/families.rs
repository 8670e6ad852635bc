//! Example lattices and posets, plus a random source of length-3 candidates.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::order::{FiniteLattice, Poset};
use super::tree::closure_and_rank;
use super::LatticeError;

/// On-disk lattice format: the full order relation (reflexive pairs
/// included) and a generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub n: usize,
    pub leq: Vec<[usize; 2]>,
    #[serde(default)]
    pub generators: Vec<usize>,
}

impl LatticeSpec {
    pub fn from_poset(p: &Poset, generators: Vec<usize>) -> Self {
        LatticeSpec { n: p.len(), leq: p.pairs(), generators }
    }

    pub fn poset(&self) -> Result<Poset, LatticeError> {
        Poset::from_pairs(self.n, self.leq.iter().map(|&[x, y]| (x, y)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        serde_json::from_str(text).map_err(|e| LatticeError::Json(e.to_string()))
    }
}

fn from_covers(n: usize, covers: Vec<(usize, usize)>, generators: Vec<usize>) -> LatticeSpec {
    let p = Poset::from_covers(n, covers).expect("covers are in range");
    LatticeSpec::from_poset(&p, generators)
}

/// The chain `0 < 1 < ... < k-1`, generated by all its elements.
pub fn chain(k: usize) -> LatticeSpec {
    from_covers(k, (1..k).map(|i| (i - 1, i)).collect(), (0..k).collect())
}

/// `0 < 1, 2 < 3`, generated by the two middle elements.
pub fn diamond() -> LatticeSpec {
    from_covers(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)], vec![1, 2])
}

/// Two atoms `1, 2` both below two coatoms `3, 4`, with bounds `0` and `5`.
/// Not a lattice.
pub fn k22_poset() -> LatticeSpec {
    from_covers(
        6,
        vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        vec![1, 2, 3, 4],
    )
}

/// The fence `x_0 < x_1 > x_2 < ... x_n` (`n` odd) with a bottom and a top
/// added. Bottom is `0`, `x_i` is `i + 1`, top is `n + 2`; the generators are
/// the fence elements.
pub fn fence_lattice(n: usize) -> LatticeSpec {
    assert!(n % 2 == 1, "fence length must be odd");
    let top = n + 2;
    let mut covers = Vec::new();
    for i in 0..=n {
        let x = i + 1;
        if i % 2 == 0 {
            covers.push((0, x));
        } else {
            covers.push((x, top));
        }
        if i > 0 {
            let (lo, hi) = if i % 2 == 1 { (x - 1, x) } else { (x, x - 1) };
            covers.push((lo, hi));
        }
    }
    from_covers(n + 3, covers, (1..=n + 1).collect())
}

/// A fence `x_0 .. x_len` (`len` odd, at least 3) with one pendant element
/// per spine position `i >= 1`: an extra atom under each odd `x_i`, an extra
/// coatom over each even `x_i`. Generated by `x_0` and the pendants, which
/// gives `x_i` rank exactly `i`. Bottom is `0`, `x_i` is `i + 1`, the
/// pendant of `x_i` is `len + 1 + i`, top is `2 len + 2`.
pub fn pendant_fence_lattice(len: usize) -> LatticeSpec {
    assert!(len % 2 == 1 && len >= 3, "spine length must be odd and at least 3");
    let top = 2 * len + 2;
    let spine = |i: usize| i + 1;
    let pendant = |i: usize| len + 1 + i;
    let mut covers = Vec::new();
    for i in 0..=len {
        if i % 2 == 0 {
            covers.push((0, spine(i)));
        } else {
            covers.push((spine(i), top));
        }
        if i > 0 {
            let (lo, hi) = if i % 2 == 1 { (spine(i - 1), spine(i)) } else { (spine(i), spine(i - 1)) };
            covers.push((lo, hi));
            if i % 2 == 1 {
                covers.extend([(0, pendant(i)), (pendant(i), spine(i))]);
            } else {
                covers.extend([(spine(i), pendant(i)), (pendant(i), top)]);
            }
        }
    }
    let mut generators = vec![spine(0)];
    generators.extend((1..=len).map(pendant));
    from_covers(top + 1, covers, generators)
}

/// A random poset of height at most 3: bottom `0`, atoms, coatoms, top
/// `n - 1`, with each atom below each coatom independently. It is a lattice
/// exactly when no two atoms share two coatoms; callers filter with the
/// validator.
pub fn random_length3_candidate<R: Rng>(rng: &mut R, max_elements: usize) -> Poset {
    assert!(max_elements >= 4);
    let n = rng.gen_range(4..=max_elements);
    let middle = n - 2;
    let atoms = rng.gen_range(1..middle.max(2));
    let density: f64 = rng.gen_range(0.05..0.35);
    let top = n - 1;
    let mut covers = Vec::new();
    for x in 1..=middle {
        covers.push((0, x));
        covers.push((x, top));
    }
    for a in 1..=atoms {
        for c in atoms + 1..=middle {
            if rng.gen_bool(density) {
                covers.push((a, c));
            }
        }
    }
    Poset::from_covers(n, covers).expect("in range")
}

/// A generating set: a random subset of the non-bound elements, topped up
/// with the smallest unreached element until everything is reached.
pub fn generating_set<R: Rng>(lat: &FiniteLattice, rng: &mut R) -> Vec<usize> {
    let inner: Vec<usize> = (0..lat.len()).filter(|&x| !lat.is_bound(x)).collect();
    let mut gens: Vec<usize> = inner.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
    if gens.is_empty() {
        gens.push(inner.first().copied().unwrap_or(lat.bottom()));
    }
    loop {
        match closure_and_rank(lat, &gens) {
            Ok(table) => return table.generators,
            Err(LatticeError::Coverage { unreached }) => {
                let pick = unreached.iter().copied().find(|&x| !lat.is_bound(x)).unwrap_or(unreached[0]);
                gens.push(pick);
            }
            Err(e) => unreachable!("generators are in range and nonempty: {e}"),
        }
    }
}
