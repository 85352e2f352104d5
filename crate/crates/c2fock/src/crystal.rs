//! The affine crystal structure on proper Young walls: `i`-signatures,
//! Kashiwara operators, crystal graphs and maximal vectors.
//!
//! Signatures are read from the leftmost relevant column (largest `k`) down to
//! `k = 0`. Each column contributes `−` once per successive removable
//! `i`-block and then `+` once per successive admissible `i`-slot; every
//! `(+, −)` pair is cancelled, leaving `− ⋯ − + ⋯ +`.
//!
//! The same machinery evaluates *parts* of a wall: a part is the
//! configuration of the columns in an interval, considered on its own, so only
//! the part's own columns constrain additions and removals.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{pairing, Index, Weight};
use crate::youngwall::{enumerate_walls, walls_of_size, Column, GroundState, Region, YoungWall};

/// Per-column contribution to an `i`-signature.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mark {
    /// Successive removable `i`-blocks (0, 1 or 2).
    pub minus: u8,
    /// Successive admissible `i`-slots (0, 1 or 2).
    pub plus: u8,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.minus == 0 && self.plus == 0 {
            return f.write_str("·");
        }
        for _ in 0..self.minus {
            f.write_str("-")?;
        }
        for _ in 0..self.plus {
            f.write_str("+")?;
        }
        Ok(())
    }
}

/// The `i`-signature after cancellation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    pub i: Index,
    /// Columns of the surviving `−`'s, in reading order (decreasing `k`).
    pub minus_positions: Vec<usize>,
    /// Columns of the surviving `+`'s, in reading order (decreasing `k`).
    pub plus_positions: Vec<usize>,
}

impl Signature {
    pub fn eps(&self) -> usize {
        self.minus_positions.len()
    }

    pub fn phi(&self) -> usize {
        self.plus_positions.len()
    }

    /// `φ − ε`.
    pub fn balance(&self) -> i64 {
        self.phi() as i64 - self.eps() as i64
    }
}

/// Counts successive removals and additions of `i`-blocks in column `k` of
/// the configuration restricted to `region`.
pub fn column_marks(y: &YoungWall, k: usize, i: Index, region: Region) -> Mark {
    let count = |step: &dyn Fn(&YoungWall) -> Option<Column>| -> u8 {
        let mut w = y.clone();
        let mut n = 0;
        while n < 2 {
            match step(&w) {
                Some(c) => {
                    w = w.with_column(k, c);
                    n += 1;
                }
                None => break,
            }
        }
        n
    };
    Mark { minus: count(&|w| w.try_remove_in(k, i, region)), plus: count(&|w| w.try_add_in(k, i, region)) }
}

/// Columns of `region` that can carry a non-trivial mark: beyond one ground
/// column past the stored part nothing can be added or removed.
fn scan_range(y: &YoungWall, region: Region) -> (usize, usize) {
    let hi = y.len().max(region.start);
    let hi = match region.end {
        Some(0) => return (1, 0),
        Some(e) => hi.min(e - 1),
        None => hi,
    };
    (region.start, hi)
}

/// The `i`-signature of the configuration restricted to `region`.
pub fn signature_in(y: &YoungWall, i: Index, region: Region) -> Signature {
    let (lo, hi) = scan_range(y, region);
    let mut minus_positions = Vec::new();
    let mut pending_plus: Vec<usize> = Vec::new();
    if lo <= hi {
        for k in (lo..=hi).rev() {
            let m = column_marks(y, k, i, region);
            for _ in 0..m.minus {
                if pending_plus.pop().is_none() {
                    minus_positions.push(k);
                }
            }
            for _ in 0..m.plus {
                pending_plus.push(k);
            }
        }
    }
    Signature { i, minus_positions, plus_positions: pending_plus }
}

/// The `i`-signature of a whole wall.
pub fn signature(y: &YoungWall, i: Index) -> Signature {
    signature_in(y, i, Region::ALL)
}

/// `F̃ᵢ`: add an `i`-block at the leftmost surviving `+`.
pub fn f_tilde(y: &YoungWall, i: Index) -> Option<YoungWall> {
    let k = *signature(y, i).plus_positions.first()?;
    Some(y.add_block(k, i).expect("a surviving + marks an admissible slot"))
}

/// `Ẽᵢ`: remove the `i`-block at the rightmost surviving `−`.
pub fn e_tilde(y: &YoungWall, i: Index) -> Option<YoungWall> {
    let k = *signature(y, i).minus_positions.last()?;
    Some(y.remove_block(k, i).expect("a surviving - marks a removable block"))
}

pub fn wt(y: &YoungWall) -> Weight {
    y.weight()
}

pub fn eps(y: &YoungWall, i: Index) -> usize {
    signature(y, i).eps()
}

pub fn phi(y: &YoungWall, i: Index) -> usize {
    signature(y, i).phi()
}

/// Whether `φᵢ(Y) − εᵢ(Y) = ⟨hᵢ, wt(Y)⟩` holds for every `i`.
pub fn satisfies_weight_identity(y: &YoungWall) -> bool {
    let w = y.weight();
    Index::ALL.iter().all(|&i| signature(y, i).balance() == pairing(i, &w))
}

/// An `I`-colored directed graph on walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub nodes: Vec<YoungWall>,
    /// `(from, to, i)` as indices into `nodes`.
    pub edges: Vec<(usize, usize, Index)>,
}

/// The crystal graph down to `depth` added blocks.
///
/// With `reduced_only`, this is the connected component of the ground state
/// (the reduced walls), generated breadth-first by the `F̃ᵢ`. Otherwise every
/// proper wall with at most `depth` added blocks is a node, which also brings
/// in the components of the other maximal vectors.
pub fn crystal_graph(g: GroundState, depth: u32, reduced_only: bool) -> CrystalGraph {
    let mut index: BTreeMap<YoungWall, usize> = BTreeMap::new();
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    if !reduced_only {
        nodes = enumerate_walls(g, depth);
        index = nodes.iter().cloned().enumerate().map(|(u, y)| (y, u)).collect();
        for (u, y) in nodes.iter().enumerate() {
            for i in Index::ALL {
                if let Some(v) = f_tilde(y, i).and_then(|z| index.get(&z).copied()) {
                    edges.push((u, v, i));
                }
            }
        }
        return CrystalGraph { nodes, edges };
    }
    let root = YoungWall::ground(g);
    index.insert(root.clone(), 0);
    nodes.push(root);
    let mut queue = VecDeque::from([(0usize, 0u32)]);
    while let Some((u, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for i in Index::ALL {
            let Some(z) = f_tilde(&nodes[u], i) else { continue };
            let v = match index.get(&z) {
                Some(v) => *v,
                None => {
                    let v = nodes.len();
                    index.insert(z.clone(), v);
                    nodes.push(z);
                    queue.push_back((v, d + 1));
                    v
                }
            };
            edges.push((u, v, i));
        }
    }
    CrystalGraph { nodes, edges }
}

/// `Ẽᵢ(Y) = 0` for every `i`.
pub fn is_maximal(y: &YoungWall) -> bool {
    Index::ALL.iter().all(|&i| e_tilde(y, i).is_none())
}

/// All maximal proper walls of weight `Λ − mδ`, in descending total order.
pub fn maximal_vectors(g: GroundState, m: u32) -> Vec<YoungWall> {
    let w = Weight::minus_delta(g.lambda(), m);
    walls_of_size(g, 4 * m).into_iter().filter(|y| y.weight() == w && is_maximal(y)).collect()
}

/// The wall with `4·pₖ` blocks added to column `k`: `pₖ` stacked δ-columns.
pub fn wall_of_partition(g: GroundState, p: &[u32]) -> YoungWall {
    let cols = p
        .iter()
        .enumerate()
        .map(|(k, &m)| {
            let n = 4 * m;
            let half = (n > 0 && g.phase(n) == 0).then(|| g.ground_color(k));
            Column::new(n, half)
        })
        .collect();
    YoungWall::from_columns(g, cols).expect("stacked delta-columns form a proper wall")
}
