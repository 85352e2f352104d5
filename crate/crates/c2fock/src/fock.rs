//! The level-one Fock space `F(Λ)`: formal ℤ[q, q⁻¹]-combinations of proper
//! Young walls with the action of `eᵢ`, `fᵢ` and `qʰ`.
//!
//! # The action
//!
//! For `i = 1`, a removable (admissible) 1-block `b` contributes
//! `q^{−R₁(b)}(Y↗b)` to `e₁Y` (`q^{L₁(b)}(Y↙b)` to `f₁Y`). The local term is the
//! plain wall, except when the block removed is a lone 1-block on top of a
//! cube, or the block added lands on such a lone 1-block; then the term is
//! multiplied by `q⁻¹(1 − (−q²)^{l(b)+1})` where `l(b)` counts the columns of the
//! same height to the right of `b` (removal) or to the left (addition).
//! `R₁`/`L₁` are `φ₁ − ε₁` of the part of `Y` right (left) of `b`, skipping the
//! columns of the same height as `b`'s column.
//!
//! For `i = 0, 2`, besides the physical moves (coefficient 1) there are
//! *virtual* moves on maximal runs `r, r+1, …, r+l` (`l ≥ 1`) of equal-height
//! columns that all end in a half cube: a virtual removal takes away the
//! top half of the leftmost column `r+l` and turns the top halves of columns
//! `r … r+l−1` around; a virtual addition completes the rightmost column `r`
//! and turns the halves of columns `r+1 … r+l` around. Both carry `(−q²)^l`.
//! The exponents are `−2R` and `2L` with `R`, `L` the balances `φᵢ − εᵢ` of
//! the parts to the right of, respectively left of, the block or slot.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{pairing, pairing_d, quantum_binomial, quantum_factorial, quantum_int_signed, Index, LaurentPoly, CARTAN};
use crate::crystal::signature_in;
use crate::error::Error;
use crate::youngwall::{sort_descending, Column, GroundState, Region, YoungWall};

/// A finite combination `Σ c_Y · Y` of proper walls over one ground state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    ground: GroundState,
    terms: BTreeMap<YoungWall, LaurentPoly>,
}

impl FockVector {
    pub fn zero(g: GroundState) -> Self {
        Self { ground: g, terms: BTreeMap::new() }
    }

    /// The basis vector `Y`.
    pub fn from_wall(y: &YoungWall) -> Self {
        let mut v = Self::zero(y.ground_state());
        v.add_term(y.clone(), LaurentPoly::one());
        v
    }

    /// The vacuum `Y_Λ`.
    pub fn vacuum(g: GroundState) -> Self {
        Self::from_wall(&YoungWall::ground(g))
    }

    pub fn ground_state(&self) -> GroundState {
        self.ground
    }

    /// Adds `c · y`; zero coefficients are dropped.
    pub fn add_term(&mut self, y: YoungWall, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(y.ground_state(), self.ground);
        match self.terms.get_mut(&y) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&y);
                }
            }
            None => {
                self.terms.insert(y, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `y` (zero when absent).
    pub fn coeff(&self, y: &YoungWall) -> LaurentPoly {
        self.terms.get(y).cloned().unwrap_or_default()
    }

    /// Terms in descending total order of walls.
    pub fn terms(&self) -> Vec<(&YoungWall, &LaurentPoly)> {
        let mut walls: Vec<YoungWall> = self.terms.keys().cloned().collect();
        sort_descending(&mut walls);
        walls.iter().map(|w| self.terms.get_key_value(w).expect("key present")).collect()
    }

    /// Terms in the internal (structural) order; cheaper than [`Self::terms`].
    pub fn iter(&self) -> impl Iterator<Item = (&YoungWall, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.ground);
        for (y, x) in &self.terms {
            out.add_term(y.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (y, c) in &other.terms {
            self.add_term(y.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (y, c) in &other.terms {
            out.add_term(y.clone(), -c);
        }
        out
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &Self) {
        for (y, x) in &other.terms {
            self.add_term(y.clone(), x * c);
        }
    }
}

/// The kind of a single Fock-space move.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveKind {
    Remove,
    Add,
    VirtualRemove,
    VirtualAdd,
}

/// One term of `eᵢY` or `fᵢY` before the `q^{∓R, L}` weighting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Move {
    pub kind: MoveKind,
    /// Column of the block (or slot) `b`.
    pub k: usize,
    pub color: Index,
    /// `l(b)`: number of equal-height columns involved besides `b`'s own.
    pub run_length: u32,
    /// Whether the factor `q⁻¹(1 − (−q²)^{l(b)+1})` applies.
    pub swallow: bool,
    pub result: YoungWall,
    pub local_coeff: LaurentPoly,
    /// Columns over which `φᵢ − εᵢ` gives the exponent `R` or `L`.
    pub part: Region,
}

/// `q⁻¹(1 − (−q²)^{l+1})`.
pub fn swallow_factor(l: u32) -> LaurentPoly {
    let sign = if (l + 1).is_multiple_of(2) { 1 } else { -1 };
    LaurentPoly::from_terms([(-1, 1), (2 * i64::from(l) + 1, -sign)])
}

/// `(−q²)^l`.
pub fn virtual_factor(l: u32) -> LaurentPoly {
    LaurentPoly::monomial(if l.is_multiple_of(2) { 1 } else { -1 }, 2 * i64::from(l))
}

/// Maximal runs `[r, r+l]` (`l ≥ 1`) of equal-height non-ground columns ending
/// in half cubes.
fn half_cube_runs(y: &YoungWall) -> Vec<(usize, usize)> {
    let g = y.ground_state();
    let cols = y.columns();
    let mut runs = Vec::new();
    let mut r = 0;
    while r < cols.len() {
        let mut e = r;
        while e + 1 < cols.len() && cols[e + 1].n == cols[r].n {
            e += 1;
        }
        if e > r && g.is_half_top(cols[r]) {
            runs.push((r, e));
        }
        r = e + 1;
    }
    runs
}

/// Replaces columns with the given states and keeps the result only if it is
/// a valid proper wall.
fn rebuild(y: &YoungWall, changes: &[(usize, Column)]) -> Option<YoungWall> {
    let mut cols: Vec<Column> = y.columns().to_vec();
    for &(k, c) in changes {
        if cols.len() <= k {
            cols.resize(k + 1, Column::GROUND);
        }
        cols[k] = c;
    }
    YoungWall::from_columns(y.ground_state(), cols).ok()
}

fn flipped(c: Column) -> Column {
    Column::new(c.n, c.half.map(Index::cube_partner))
}

/// All removable and virtually removable `i`-blocks of `y`.
pub fn moves_remove(y: &YoungWall, i: Index) -> Vec<Move> {
    let g = y.ground_state();
    let mut out = Vec::new();
    for k in 0..y.len() {
        let Some(c) = y.try_remove_in(k, i, Region::ALL) else { continue };
        let n = y.col(k).n;
        let (swallow, run, part) = if i == Index::ONE {
            let swallow = g.phase(n) == 2;
            let run = (0..k).filter(|&j| y.col(j).n == n).count() as u32;
            // Skip the columns of the same height immediately to the right.
            let mut j = k;
            while j > 0 && y.col(j - 1).n == n {
                j -= 1;
            }
            (swallow, run, Region { start: 0, end: Some(j) })
        } else {
            (false, 0, Region { start: 0, end: Some(k) })
        };
        let local_coeff = if swallow { swallow_factor(run) } else { LaurentPoly::one() };
        out.push(Move {
            kind: MoveKind::Remove,
            k,
            color: i,
            run_length: run,
            swallow,
            result: y.with_column(k, c),
            local_coeff,
            part,
        });
    }
    if i != Index::ONE {
        for (r, e) in half_cube_runs(y) {
            let right = y.col(r);
            if right.half != Some(i) {
                continue;
            }
            let left = y.col(e);
            let mut changes: Vec<(usize, Column)> = (r..e).map(|j| (j, flipped(y.col(j)))).collect();
            changes.push((e, Column::new(left.n - 1, None)));
            if let Some(result) = rebuild(y, &changes) {
                let l = (e - r) as u32;
                out.push(Move {
                    kind: MoveKind::VirtualRemove,
                    k: r,
                    color: i,
                    run_length: l,
                    swallow: false,
                    result,
                    local_coeff: virtual_factor(l),
                    part: Region { start: 0, end: Some(r) },
                });
            }
        }
    }
    out
}

/// All admissible and virtually admissible `i`-slots of `y`.
pub fn moves_add(y: &YoungWall, i: Index) -> Vec<Move> {
    let g = y.ground_state();
    let mut out = Vec::new();
    for k in 0..=y.len() {
        let Some(c) = y.try_add_in(k, i, Region::ALL) else { continue };
        let n = y.col(k).n;
        let (swallow, run, part) = if i == Index::ONE {
            if n == 0 {
                // Every column to the left has the same (ground) height: the
                // addition is plain and the left part carries no blocks.
                (false, 0, Region { start: k + 1, end: Some(k + 1) })
            } else {
                let run = (k + 1..y.len()).filter(|&j| y.col(j).n == n).count() as u32;
                let mut j = k;
                while y.col(j + 1).n == n {
                    j += 1;
                }
                (g.phase(n) == 2, run, Region { start: j + 1, end: None })
            }
        } else {
            (false, 0, Region { start: k + 1, end: None })
        };
        let local_coeff = if swallow { swallow_factor(run) } else { LaurentPoly::one() };
        out.push(Move {
            kind: MoveKind::Add,
            k,
            color: i,
            run_length: run,
            swallow,
            result: y.with_column(k, c),
            local_coeff,
            part,
        });
    }
    if i != Index::ONE {
        for (r, e) in half_cube_runs(y) {
            let left = y.col(e);
            if left.half != Some(i.cube_partner()) {
                continue;
            }
            let right = y.col(r);
            let mut changes: Vec<(usize, Column)> = (r + 1..=e).map(|j| (j, flipped(y.col(j)))).collect();
            changes.push((r, Column::new(right.n + 1, None)));
            if let Some(result) = rebuild(y, &changes) {
                let l = (e - r) as u32;
                out.push(Move {
                    kind: MoveKind::VirtualAdd,
                    k: e,
                    color: i,
                    run_length: l,
                    swallow: false,
                    result,
                    local_coeff: virtual_factor(l),
                    part: Region { start: e + 1, end: None },
                });
            }
        }
    }
    out
}

/// `φᵢ − εᵢ` of the part of `y` over which the move's exponent is read.
pub fn part_balance(y: &YoungWall, m: &Move) -> i64 {
    if m.part.end.is_some_and(|e| e <= m.part.start) {
        return 0;
    }
    signature_in(y, m.color, m.part).balance()
}

/// `R(b; Y)` for a removal move.
pub fn r_exponent(y: &YoungWall, m: &Move) -> i64 {
    part_balance(y, m)
}

/// `L(b; Y)` for an addition move.
pub fn l_exponent(y: &YoungWall, m: &Move) -> i64 {
    part_balance(y, m)
}

/// The full coefficient of `m.result` contributed by the move to `eᵢY`
/// (removals) or `fᵢY` (additions).
pub fn move_coeff(y: &YoungWall, m: &Move) -> LaurentPoly {
    let w = if m.color == Index::ONE { 1 } else { 2 };
    let e = match m.kind {
        MoveKind::Remove | MoveKind::VirtualRemove => -w * r_exponent(y, m),
        MoveKind::Add | MoveKind::VirtualAdd => w * l_exponent(y, m),
    };
    m.local_coeff.shift(e)
}

/// `eᵢ Y` for a single wall.
pub fn e_wall(i: Index, y: &YoungWall) -> FockVector {
    let mut out = FockVector::zero(y.ground_state());
    for m in moves_remove(y, i) {
        let c = move_coeff(y, &m);
        out.add_term(m.result, c);
    }
    out
}

/// `fᵢ Y` for a single wall.
pub fn f_wall(i: Index, y: &YoungWall) -> FockVector {
    let mut out = FockVector::zero(y.ground_state());
    for m in moves_add(y, i) {
        let c = move_coeff(y, &m);
        out.add_term(m.result, c);
    }
    out
}

fn linear(v: &FockVector, f: impl Fn(&YoungWall) -> FockVector) -> FockVector {
    let mut out = FockVector::zero(v.ground_state());
    for (y, c) in v.iter() {
        out.add_scaled(c, &f(y));
    }
    out
}

/// `eᵢ v`.
pub fn act_e(i: Index, v: &FockVector) -> FockVector {
    linear(v, |y| e_wall(i, y))
}

/// `fᵢ v`.
pub fn act_f(i: Index, v: &FockVector) -> FockVector {
    linear(v, |y| f_wall(i, y))
}

/// `eᵢ^r v` (plain power).
pub fn act_e_pow(i: Index, r: u32, v: &FockVector) -> FockVector {
    (0..r).fold(v.clone(), |acc, _| act_e(i, &acc))
}

/// `fᵢ^r v` (plain power).
pub fn act_f_pow(i: Index, r: u32, v: &FockVector) -> FockVector {
    (0..r).fold(v.clone(), |acc, _| act_f(i, &acc))
}

fn divide_all(v: &FockVector, d: &LaurentPoly) -> Result<FockVector, Error> {
    let mut out = FockVector::zero(v.ground_state());
    for (y, c) in v.iter() {
        out.add_term(y.clone(), c.exact_div(d)?);
    }
    Ok(out)
}

/// The divided power `fᵢ^{(r)} v = fᵢ^r v / [r]ᵢ!`.
pub fn divided_power_f(i: Index, r: u32, v: &FockVector) -> Result<FockVector, Error> {
    divide_all(&act_f_pow(i, r, v), &quantum_factorial(i64::from(r), i)?)
}

/// The divided power `eᵢ^{(r)} v = eᵢ^r v / [r]ᵢ!`.
pub fn divided_power_e(i: Index, r: u32, v: &FockVector) -> Result<FockVector, Error> {
    divide_all(&act_e_pow(i, r, v), &quantum_factorial(i64::from(r), i)?)
}

/// An element of the coweight lattice acting through `qʰ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coweight {
    /// A simple coroot `hᵢ`.
    H(Index),
    /// The scaling element `d`.
    D,
    /// The canonical central element `c = h₀ + h₁ + h₂`.
    C,
}

/// `qʰ v`: every wall is scaled by `q^{⟨h, wt(Y)⟩}`.
pub fn act_qh(h: Coweight, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.ground_state());
    for (y, c) in v.iter() {
        let w = y.weight();
        let e = match h {
            Coweight::H(j) => pairing(j, &w),
            Coweight::D => pairing_d(&w),
            Coweight::C => Index::ALL.iter().map(|&j| pairing(j, &w)).sum(),
        };
        out.add_term(y.clone(), c.shift(e));
    }
    out
}

/// Both sides of `[eᵢ, fⱼ]Y = δᵢⱼ [⟨hᵢ, wt Y⟩]ᵢ Y`.
pub fn ef_relation_sides(y: &YoungWall, i: Index, j: Index) -> (FockVector, FockVector) {
    let v = FockVector::from_wall(y);
    let lhs = act_e(i, &act_f(j, &v)).sub(&act_f(j, &act_e(i, &v)));
    let mut rhs = FockVector::zero(y.ground_state());
    if i == j {
        rhs.add_term(y.clone(), quantum_int_signed(pairing(i, &y.weight()), i));
    }
    (lhs, rhs)
}

/// Exact check of the commutator relation on one wall.
pub fn check_ef_relation(y: &YoungWall, i: Index, j: Index) -> bool {
    let (lhs, rhs) = ef_relation_sides(y, i, j);
    lhs == rhs
}

/// Which generators a Serre check uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SerreForm {
    E,
    F,
}

/// `Σ_k (−1)^k [n choose k]ᵢ Xᵢ^{n−k} Xⱼ Xᵢ^k v` with `n = 1 − a_ij` and
/// `X = e` or `f`; the quantum Serre relation says this vanishes.
pub fn serre_combination(form: SerreForm, i: Index, j: Index, v: &FockVector) -> FockVector {
    let n = 1 - CARTAN[i.idx()][j.idx()];
    let pow = |r: i64, x: &FockVector| match form {
        SerreForm::E => act_e_pow(i, r as u32, x),
        SerreForm::F => act_f_pow(i, r as u32, x),
    };
    let single = |x: &FockVector| match form {
        SerreForm::E => act_e(j, x),
        SerreForm::F => act_f(j, x),
    };
    let mut out = FockVector::zero(v.ground_state());
    for k in 0..=n {
        let c = quantum_binomial(n, k, i).expect("binomials of the q_i-integers are integral");
        let c = if k % 2 == 0 { c } else { -c };
        let term = pow(n - k, &single(&pow(k, v)));
        out.add_scaled(&c, &term);
    }
    out
}

/// Exact check of the Serre relation for `(i, j)`, `i ≠ j`, in both forms.
pub fn check_serre(i: Index, j: Index, v: &FockVector) -> bool {
    i != j && [SerreForm::E, SerreForm::F].iter().all(|&f| serre_combination(f, i, j, v).is_zero())
}
