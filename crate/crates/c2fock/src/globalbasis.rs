//! Global basis elements of the basic representations via ladder peeling.
//!
//! Peeling a reduced wall `Y` repeatedly down to the ground state yields a
//! sequence `(i₁, r₁), …, (i_N, r_N)`; the vector
//! `A(Y) = f_{i₁}^{(r₁)} ⋯ f_{i_N}^{(r_N)} Y_Λ` is bar-invariant and unitriangular
//! with leading term `Y`. The global basis element `G(Y)` is obtained from
//! `A(Y)` by subtracting bar-invariant multiples `γ_{Y,Y'} G(Y')` of lower
//! elements of the same weight space until every coefficient other than the
//! leading one lies in `qℤ[q]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::{bar_symmetrize, quantum_int_signed, Index, LaurentPoly};
use crate::error::Error;
use crate::fock::{divided_power_f, f_wall, moves_add, FockVector, MoveKind};
use crate::youngwall::{enumerate_weight_space, wall_total_order, YoungWall};

/// The peeling data of a reduced wall, first step first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelSequence {
    /// `(iₖ, rₖ)`; applying `f_{i_N}^{(r_N)}` first rebuilds the wall.
    pub steps: Vec<(Index, u32)>,
    /// The intermediate walls `Y = Y₀, Y₁, …, Y_N = Y_Λ`.
    pub walls: Vec<YoungWall>,
}

/// Peels `y` down to the ground state.
pub fn peel_sequence(y: &YoungWall) -> Result<PeelSequence, Error> {
    if !y.is_reduced() {
        return Err(Error::NotReduced(y.to_string()));
    }
    let mut steps = Vec::new();
    let mut walls = alloc::vec![y.clone()];
    let mut cur = y.clone();
    while !cur.is_ground() {
        let (bar, i, r) = cur.peel()?;
        steps.push((i, r));
        walls.push(bar.clone());
        cur = bar;
    }
    Ok(PeelSequence { steps, walls })
}

/// Whether an expansion is the monomial vector `A(Y)` or `G(Y)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisKind {
    A,
    G,
}

/// A basis vector expanded in the wall basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub head: YoungWall,
    pub kind: BasisKind,
    pub coeffs: FockVector,
    /// For `G`: the corrections `γ_{Y,Y'}` subtracted, in order.
    pub gamma: Vec<(YoungWall, LaurentPoly)>,
}

/// `A(Y) = f_{i₁}^{(r₁)} ⋯ f_{i_N}^{(r_N)} Y_Λ`.
pub fn a_basis(y: &YoungWall) -> Result<BasisExpansion, Error> {
    let seq = peel_sequence(y)?;
    let mut v = FockVector::vacuum(y.ground_state());
    for &(i, r) in seq.steps.iter().rev() {
        v = divided_power_f(i, r, &v)?;
    }
    Ok(BasisExpansion { head: y.clone(), kind: BasisKind::A, coeffs: v, gamma: Vec::new() })
}

/// Memoised computation of global basis elements.
#[derive(Default)]
pub struct GlobalBasis {
    memo: BTreeMap<YoungWall, BasisExpansion>,
    /// Optional replacement of the tie-break between walls with equal
    /// partitions (used to check that `G` does not depend on it).
    reverse_tie_break: bool,
}

impl GlobalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// A solver whose recursion uses the opposite tie-break among walls with
    /// equal partitions.
    pub fn with_reversed_tie_break() -> Self {
        Self { memo: BTreeMap::new(), reverse_tie_break: true }
    }

    fn order(&self, a: &YoungWall, b: &YoungWall) -> Ordering {
        let o = wall_total_order(a, b);
        if self.reverse_tie_break && a.partition() == b.partition() {
            o.reverse()
        } else {
            o
        }
    }

    /// `G(Y)` for a reduced wall.
    pub fn g(&mut self, y: &YoungWall) -> Result<BasisExpansion, Error> {
        if let Some(e) = self.memo.get(y) {
            return Ok(e.clone());
        }
        let a = a_basis(y)?;
        let mut lower: Vec<YoungWall> = enumerate_weight_space(y.ground_state(), &y.weight(), true)
            .into_iter()
            .filter(|z| self.order(y, z) == Ordering::Greater)
            .collect();
        lower.sort_by(|p, q| self.order(q, p));
        let mut rem = a.coeffs.clone();
        let mut gamma = Vec::new();
        for z in lower {
            let c = rem.coeff(&z);
            if c.is_zero() {
                continue;
            }
            let gm = bar_symmetrize(&c);
            if gm.is_zero() {
                continue;
            }
            let gz = self.g(&z)?;
            rem.add_scaled(&-&gm, &gz.coeffs);
            gamma.push((z, gm));
        }
        let out = BasisExpansion { head: y.clone(), kind: BasisKind::G, coeffs: rem, gamma };
        self.memo.insert(y.clone(), out.clone());
        Ok(out)
    }
}

/// `G(Y)` with a fresh memo table.
pub fn g_basis(y: &YoungWall) -> Result<BasisExpansion, Error> {
    GlobalBasis::new().g(y)
}

/// All `G(Y)` for the reduced walls of one weight space, descending.
pub fn g_table(g: crate::youngwall::GroundState, w: &crate::algebra::Weight) -> Result<Vec<BasisExpansion>, Error> {
    let mut solver = GlobalBasis::new();
    enumerate_weight_space(g, w, true).iter().map(|y| solver.g(y)).collect()
}

/// One step of an addition chain.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub kind: MoveKind,
    /// Column of the slot `b`.
    pub column: usize,
    /// Column height before the addition (for plain additions).
    pub height_before: u32,
    /// Local scalar `λ` of the step.
    pub lambda: LaurentPoly,
    /// Coefficient of the next wall in `fᵢ` of the previous one.
    pub coeff: LaurentPoly,
    pub wall: YoungWall,
}

/// The chains `Y = Y₀ → ⋯ → Y_r = Z` of single `i`-additions whose slots move
/// weakly rightwards (each slot sits on the previous one or to its right).
pub fn addition_chains(y: &YoungWall, z: &YoungWall, i: Index, r: u32) -> Vec<Vec<ChainStep>> {
    fn go(
        cur: &YoungWall,
        z: &YoungWall,
        i: Index,
        left: u32,
        bound: usize,
        path: &mut Vec<ChainStep>,
        out: &mut Vec<Vec<ChainStep>>,
    ) {
        if left == 0 {
            if cur == z {
                out.push(path.clone());
            }
            return;
        }
        let fv = f_wall(i, cur);
        for m in moves_add(cur, i) {
            if m.k > bound {
                continue;
            }
            // Prune walls that are not contained in the target.
            if (0..m.result.len()).any(|k| m.result.col(k).n > z.col(k).n) {
                continue;
            }
            path.push(ChainStep {
                kind: m.kind,
                column: m.k,
                height_before: cur.col(m.k).n,
                lambda: m.local_coeff.clone(),
                coeff: fv.coeff(&m.result),
                wall: m.result.clone(),
            });
            go(&m.result, z, i, left - 1, m.k, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(y, z, i, r, usize::MAX, &mut Vec::new(), &mut out);
    out
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The exponent `σ(n₁, n₂, n₃)`.
pub fn sigma(n1: i64, n2: i64, n3: i64) -> i64 {
    4 * binom2(n1) + binom2(n2) + binom2(n3) + 2 * n1 * (n2 + n3) + n2 * n3
}

/// Index sets of a type-I chain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainSets {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    pub j3: Vec<usize>,
    pub s: Vec<usize>,
}

/// Classifies the steps (1-based) of a chain of 1-block additions ending at `z`.
pub fn chain_sets(y: &YoungWall, z: &YoungWall, chain: &[ChainStep]) -> ChainSets {
    let g = y.ground_state();
    let mut sets = ChainSets::default();
    for (idx, st) in chain.iter().enumerate() {
        let k = idx + 1;
        let t = st.height_before + 1;
        let upper = g.phase(t) == 3;
        let prev_beneath = idx > 0 && chain[idx - 1].column == st.column && chain[idx - 1].height_before + 1 + 1 == t;
        if upper && prev_beneath {
            sets.j1.push(k);
        } else if upper {
            sets.j2.push(k);
        } else if z.col(st.column).n == t {
            sets.j3.push(k);
        }
    }
    for &k in &sets.j2 {
        if k >= 2 && sets.j3.contains(&(k - 1)) {
            let (a, b) = (chain[k - 2].column, chain[k - 1].column);
            if z.col(a).n + 1 == z.col(b).n {
                sets.s.push(k);
            }
        }
    }
    sets
}

/// The closed form of the coefficient of `z` in `fᵢ^{(r)} y`.
pub fn q_closed_form(y: &YoungWall, z: &YoungWall, i: Index, r: u32) -> Result<LaurentPoly, Error> {
    let chains = addition_chains(y, z, i, r);
    let chain = match chains.as_slice() {
        [c] => c,
        [] => return Err(Error::NoChain(format!("{z} is not reachable from {y} by {r} additions of color {i}"))),
        _ => return Err(Error::NoChain(format!("{} admissible chains from {y} to {z}", chains.len()))),
    };
    let q0 = chain.iter().fold(LaurentPoly::one(), |acc, s| &acc * &s.coeff);
    let r = i64::from(r);
    if i != Index::ONE {
        return Ok(q0.shift(2 * binom2(r)));
    }
    let sets = chain_sets(y, z, chain);
    let (n1, n2, n3) = (sets.j1.len() as i64, sets.j2.len() as i64, sets.j3.len() as i64);
    let mut den = quantum_int_signed(2, Index::ONE).pow(n1 as u32);
    for &k in &sets.s {
        den = &den * &chain[k - 1].lambda.shift(1);
    }
    q0.shift(sigma(n1, n2, n3)).exact_div(&den)
}
