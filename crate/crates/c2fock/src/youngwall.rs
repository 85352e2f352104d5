//! Young walls of type C₂⁽¹⁾ over the three level-one ground-state walls.
//!
//! # Block geometry
//!
//! A wall is a sequence of columns numbered `k = 0, 1, 2, …` from right to
//! left. Two kinds of blocks are stacked in each column:
//!
//! * **1-blocks** have full thickness and half-unit height; they always come
//!   in stacked pairs (a *lower* and an *upper* slot).
//! * **0- and 2-blocks** have half thickness and unit height; one of each
//!   fills a unit *cube*, one in front and one at the back. Either half of a
//!   cube may be placed first.
//!
//! Every ground-state column holds exactly one block: a 1-block for `Λ₁`, and
//! the back half of a cube for `Λ₀` and `Λ₂`. Above the ground each column
//! repeats the period `cube, 1, 1` (for `Λ₀`, `Λ₂`, starting by completing the
//! ground cube) or `1, cube, 1` (for `Λ₁`, starting by completing the ground
//! pair). Inside a cube the front/back colors depend on the column parity:
//!
//! | ground | even `k` (front, back) | odd `k` (front, back) |
//! |--------|------------------------|-----------------------|
//! | `Λ₀`   | (0, 2)                 | (2, 0)                |
//! | `Λ₁`   | (0, 2)                 | (2, 0)                |
//! | `Λ₂`   | (2, 0)                 | (0, 2)                |
//!
//! The table is the transcription of the pattern figures; it is pinned by the
//! crystal-graph and Fock-action golden tests.
//!
//! # Column encoding
//!
//! A column is stored as the number `n` of blocks added above the ground plus,
//! when the topmost cube is half filled, the color of the half that is
//! present. Numbering the blocks of a column `t = 0, 1, …` (the ground block is
//! `t = 0`), block `t` has *phase* `(t + o) mod 4` with `o = 2` for `Λ₁` and
//! `o = 0` otherwise; phases 0 and 1 are cube halves, phases 2 and 3 are the
//! lower and upper 1-blocks. Hence a column is full exactly when `n` is odd,
//! and the top is a half cube exactly when the phase of `t = n` is 0.
//!
//! # Literals
//!
//! `L<λ>[c₀,c₁,…]` lists the columns from `k = 0`; each entry is `n` or
//! `n:<color>` where the color suffix is required exactly when the top cube is
//! half filled, e.g. `L1[]`, `L1[3,1]`, `L1[2:0,2:2]`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{Index, Weight};
use crate::error::Error;

/// Selects one of the ground-state walls `Y_{Λ₀}`, `Y_{Λ₁}`, `Y_{Λ₂}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroundState(pub Index);

impl GroundState {
    /// All three ground states.
    pub const ALL: [GroundState; 3] = [GroundState(Index::ZERO), GroundState(Index::ONE), GroundState(Index::TWO)];

    pub fn lambda(self) -> Index {
        self.0
    }

    /// Phase offset `o` of the block numbering.
    fn offset(self) -> u32 {
        if self.0 == Index::ONE {
            2
        } else {
            0
        }
    }

    /// Phase of block `t` (0, 1: cube halves; 2: lower 1; 3: upper 1).
    pub fn phase(self, t: u32) -> u32 {
        (t + self.offset()) % 4
    }

    /// Front color of the cubes of column `k`.
    pub fn front_color(self, k: usize) -> Index {
        let even = k.is_multiple_of(2);
        match (self.0 == Index::TWO, even) {
            (false, true) | (true, false) => Index::ZERO,
            _ => Index::TWO,
        }
    }

    /// Back color of the cubes of column `k`.
    pub fn back_color(self, k: usize) -> Index {
        self.front_color(k).cube_partner()
    }

    /// Color of the ground block of column `k`.
    pub fn ground_color(self, k: usize) -> Index {
        if self.0 == Index::ONE {
            Index::ONE
        } else {
            self.back_color(k)
        }
    }

    /// Height (in half units) of the bottom of block `t`.
    fn half_height(self, t: u32) -> u32 {
        const BASE: [u32; 4] = [0, 0, 2, 3];
        let o = self.offset();
        4 * ((t + o) / 4) + BASE[((t + o) % 4) as usize] - o
    }
}

impl fmt::Display for GroundState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

impl FromStr for GroundState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let d = t.strip_prefix('L').or_else(|| t.strip_prefix('l')).unwrap_or(t);
        match d {
            "0" => Ok(GroundState(Index::ZERO)),
            "1" => Ok(GroundState(Index::ONE)),
            "2" => Ok(GroundState(Index::TWO)),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown ground state '{s}' (expected L0, L1 or L2)") }),
        }
    }
}

/// Shape of one slot level of a column pattern.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    /// A 1-block slot of full thickness and half height.
    HalfOne,
    /// A unit cube holding one 0-block and one 2-block.
    Cube { front: Index, back: Index },
}

/// The slot at `level` above the ground of column `k` (level 0 is the first
/// slot above the ground block; a cube counts as one level).
pub fn slot_at(g: GroundState, k: usize, level: u32) -> Slot {
    // Walk the block numbering, merging the two halves of each cube.
    let mut t = 1;
    let mut lv = 0;
    loop {
        let ph = g.phase(t);
        let slot = if ph <= 1 { Slot::Cube { front: g.front_color(k), back: g.back_color(k) } } else { Slot::HalfOne };
        if lv == level {
            return slot;
        }
        // A cube level whose first half is the ground spans only one more block.
        t += if ph == 0 { 2 } else { 1 };
        lv += 1;
    }
}

/// State of one column: blocks added above the ground and, when the top cube
/// is half filled, the color of its present half.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Column {
    pub n: u32,
    pub half: Option<Index>,
}

impl Column {
    pub const GROUND: Column = Column { n: 0, half: None };

    pub fn new(n: u32, half: Option<Index>) -> Self {
        Self { n, half }
    }

    /// Whether the column has integral volume (`1 + n` blocks, even).
    pub fn is_full(self) -> bool {
        self.n % 2 == 1
    }
}

/// Position of a block inside its unit level.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SlotPos {
    Lower,
    Upper,
    Front,
    Back,
}

/// A block of a wall together with its placement.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Block {
    pub k: usize,
    /// Number of whole unit cubes below the block.
    pub level: u32,
    pub pos: SlotPos,
    pub color: Index,
    pub ground: bool,
}

impl Block {
    pub fn coordinate(&self) -> Coordinate {
        Coordinate { k: self.k, l: self.level }
    }
}

/// Column-local helpers; they know nothing about neighbouring columns.
impl GroundState {
    /// Whether `c` is a legal state for column `k` in isolation.
    pub fn column_is_valid(self, k: usize, c: Column) -> bool {
        let _ = k;
        let half_top = c.n > 0 && self.phase(c.n) == 0;
        match c.half {
            None => !half_top,
            Some(h) => half_top && h != Index::ONE,
        }
    }

    /// Whether the topmost cube of the column is half filled.
    pub fn is_half_top(self, c: Column) -> bool {
        self.phase(c.n) == 0
    }

    /// Color of the present half of a half-filled top cube.
    pub fn present_half(self, k: usize, c: Column) -> Option<Index> {
        if !self.is_half_top(c) {
            return None;
        }
        Some(if c.n == 0 { self.ground_color(k) } else { c.half.expect("half-top column records its half") })
    }

    /// `Some(true)` if the present top half is in front, `Some(false)` if at
    /// the back, `None` if the top is not a half cube.
    pub fn half_is_front(self, k: usize, c: Column) -> Option<bool> {
        self.present_half(k, c).map(|h| h == self.front_color(k))
    }

    /// The column after adding an `i`-block on top, ignoring neighbours.
    pub fn column_add(self, k: usize, c: Column, i: Index) -> Option<Column> {
        if let Some(h) = self.present_half(k, c) {
            return (i == h.cube_partner()).then_some(Column::new(c.n + 1, None));
        }
        let next = c.n + 1;
        match self.phase(next) {
            0 => (i != Index::ONE).then_some(Column::new(next, Some(i))),
            _ => (i == Index::ONE).then_some(Column::new(next, None)),
        }
    }

    /// The column after removing an `i`-block from its top, ignoring
    /// neighbours.
    pub fn column_remove(self, k: usize, c: Column, i: Index) -> Option<Column> {
        if c.n == 0 {
            return None;
        }
        match self.phase(c.n) {
            0 => (c.half == Some(i)).then_some(Column::new(c.n - 1, None)),
            1 => {
                if i == Index::ONE {
                    return None;
                }
                let rest = Column::new(c.n - 1, if c.n == 1 { None } else { Some(i.cube_partner()) });
                // At n = 1 the remaining half is the ground block, which sits at the back.
                if c.n == 1 && i != self.front_color(k) {
                    return None;
                }
                Some(rest)
            }
            _ => (i == Index::ONE).then_some(Column::new(c.n - 1, None)),
        }
    }

    /// Colors of the blocks added above the ground, as counts per color.
    pub fn column_content(self, k: usize, c: Column) -> [u32; 3] {
        let mut out = [0u32; 3];
        for b in self.column_blocks(k, c) {
            if !b.ground {
                out[b.color.idx()] += 1;
            }
        }
        out
    }

    /// All blocks of a column, ground included, bottom to top.
    pub fn column_blocks(self, k: usize, c: Column) -> Vec<Block> {
        let mut out = Vec::with_capacity(c.n as usize + 1);
        let top_half = self.present_half(k, c);
        for t in 0..=c.n {
            let ph = self.phase(t);
            let level = self.half_height(t) / 2;
            let ground = t == 0;
            let (pos, color) = match ph {
                2 => (SlotPos::Lower, Index::ONE),
                3 => (SlotPos::Upper, Index::ONE),
                _ => {
                    // A half-filled top shows its recorded color; a complete cube
                    // is listed back half first, then front half.
                    let color = if t == c.n && ph == 0 {
                        top_half.expect("phase-0 top is a half cube")
                    } else if ph == 0 {
                        self.back_color(k)
                    } else {
                        self.front_color(k)
                    };
                    let pos = if color == self.front_color(k) { SlotPos::Front } else { SlotPos::Back };
                    (pos, color)
                }
            };
            out.push(Block { k, level, pos, color, ground });
        }
        out
    }

    /// Rebuilds a column from its set of occupied slots, if that set is a
    /// legal column.
    pub fn column_from_slots(self, k: usize, slots: &BTreeSet<(u32, SlotPos)>) -> Option<Column> {
        if slots.is_empty() {
            return None;
        }
        let n = slots.len() as u32 - 1;
        let half = if n > 0 && self.phase(n) == 0 {
            let top = slots.iter().next_back()?;
            match top.1 {
                SlotPos::Front => Some(self.front_color(k)),
                SlotPos::Back => Some(self.back_color(k)),
                _ => return None,
            }
        } else {
            None
        };
        let c = Column::new(n, half);
        let expect: BTreeSet<(u32, SlotPos)> = self.column_blocks(k, c).iter().map(|b| (b.level, b.pos)).collect();
        (expect == *slots).then_some(c)
    }
}

/// A Young wall: a ground state plus the non-ground columns `k = 0..m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct YoungWall {
    ground: GroundState,
    cols: Vec<Column>,
}

/// Associated partition `|Y| = (|y₀|, |y₁|, …)` without trailing zeros.
pub type Partition = Vec<u32>;

/// Coordinate `(k, l)` of a block: column and whole unit cubes below it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Coordinate {
    pub k: usize,
    pub l: u32,
}

/// The ladder `(k, l), (k−1, l+2), …, (0, l+2k)` at a coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ladder {
    pub base: Coordinate,
    pub points: Vec<Coordinate>,
}

/// The ladder starting at `c`.
pub fn ladder(c: Coordinate) -> Ladder {
    let points = (0..=c.k).map(|j| Coordinate { k: c.k - j, l: c.l + 2 * j as u32 }).collect();
    Ladder { base: c, points }
}

/// A column index interval `[start, end)`; `end = None` means unbounded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Region {
    pub start: usize,
    pub end: Option<usize>,
}

impl Region {
    pub const ALL: Region = Region { start: 0, end: None };

    pub fn contains(&self, k: usize) -> bool {
        k >= self.start && self.end.is_none_or(|e| k < e)
    }
}

impl YoungWall {
    /// The ground-state wall `Y_Λ`.
    pub fn ground(g: GroundState) -> Self {
        Self { ground: g, cols: Vec::new() }
    }

    /// Builds a wall from explicit columns, validating every invariant.
    pub fn from_columns(g: GroundState, cols: Vec<Column>) -> Result<Self, Error> {
        let mut w = Self { ground: g, cols };
        w.trim();
        w.validate()?;
        Ok(w)
    }

    /// Builds a wall from columns without validation (used internally after
    /// local checks).
    fn from_columns_unchecked(g: GroundState, cols: Vec<Column>) -> Self {
        let mut w = Self { ground: g, cols };
        w.trim();
        w
    }

    fn trim(&mut self) {
        while self.cols.last().is_some_and(|c| c.n == 0) {
            self.cols.pop();
        }
    }

    pub fn ground_state(&self) -> GroundState {
        self.ground
    }

    /// Number of stored (non-ground) columns.
    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_ground(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_ground()
    }

    /// Column `k` (ground columns beyond the stored range).
    pub fn col(&self, k: usize) -> Column {
        self.cols.get(k).copied().unwrap_or(Column::GROUND)
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    /// Total number of added blocks.
    pub fn size(&self) -> u32 {
        self.cols.iter().map(|c| c.n).sum()
    }

    pub fn partition(&self) -> Partition {
        self.cols.iter().map(|c| c.n).collect()
    }

    /// Number of added blocks of each color.
    pub fn content(&self) -> [u32; 3] {
        let mut out = [0; 3];
        for (k, c) in self.cols.iter().enumerate() {
            let cc = self.ground.column_content(k, *c);
            for i in 0..3 {
                out[i] += cc[i];
            }
        }
        out
    }

    /// `wt(Y) = Λ − Σ kᵢαᵢ`.
    pub fn weight(&self) -> Weight {
        Weight { lambda: self.ground.0, k: self.content() }
    }

    /// Checks stacking, weak decrease, the half-cube alignment rule and
    /// properness.
    pub fn validate(&self) -> Result<(), Error> {
        let g = self.ground;
        for (k, c) in self.cols.iter().enumerate() {
            if !g.column_is_valid(k, *c) {
                return Err(Error::InvalidWall(format!("column {k} has an invalid state {}", ColumnLit(g, *c))));
            }
        }
        for k in 0..self.cols.len() {
            let (a, b) = (self.col(k), self.col(k + 1));
            if a.n < b.n {
                return Err(Error::InvalidWall(format!("columns {k} and {} are not weakly decreasing", k + 1)));
            }
            if !self.aligned(k, a, k + 1, b) {
                return Err(Error::InvalidWall(format!(
                    "columns {k} and {} end in half cubes of opposite orientation",
                    k + 1
                )));
            }
        }
        if !self.is_proper() {
            return Err(Error::InvalidWall("two full columns have the same height".to_string()));
        }
        Ok(())
    }

    /// Equal-height neighbours ending in half cubes must show the same half
    /// (no free space to the right of a block).
    fn aligned(&self, k1: usize, c1: Column, k2: usize, c2: Column) -> bool {
        if c1.n != c2.n {
            return true;
        }
        match (self.ground.half_is_front(k1, c1), self.ground.half_is_front(k2, c2)) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// No two full columns share a height.
    pub fn is_proper(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.cols.iter().filter(|c| c.is_full()).all(|c| seen.insert(c.n))
    }

    /// Whether replacing column `k` by `new` keeps a valid proper wall on the
    /// region (columns outside the region are ignored).
    pub fn fits(&self, k: usize, new: Column, region: Region) -> bool {
        let g = self.ground;
        if !region.contains(k) || !g.column_is_valid(k, new) {
            return false;
        }
        if k > region.start {
            let r = self.col(k - 1);
            if r.n < new.n || !self.aligned(k - 1, r, k, new) {
                return false;
            }
        }
        if region.contains(k + 1) {
            let l = self.col(k + 1);
            if new.n < l.n || !self.aligned(k, new, k + 1, l) {
                return false;
            }
        }
        if new.is_full() {
            let clash = self
                .cols
                .iter()
                .enumerate()
                .any(|(j, c)| j != k && region.contains(j) && c.n == new.n);
            if clash {
                return false;
            }
        }
        true
    }

    /// Replaces column `k` (no validation).
    pub fn with_column(&self, k: usize, c: Column) -> Self {
        let mut cols = self.cols.clone();
        if cols.len() <= k {
            cols.resize(k + 1, Column::GROUND);
        }
        cols[k] = c;
        Self::from_columns_unchecked(self.ground, cols)
    }

    /// The column obtained by adding an `i`-block to column `k`, if it stays
    /// legal on `region`.
    pub fn try_add_in(&self, k: usize, i: Index, region: Region) -> Option<Column> {
        let c = self.ground.column_add(k, self.col(k), i)?;
        self.fits(k, c, region).then_some(c)
    }

    /// The column obtained by removing an `i`-block from column `k`, if it
    /// stays legal on `region`.
    pub fn try_remove_in(&self, k: usize, i: Index, region: Region) -> Option<Column> {
        let c = self.ground.column_remove(k, self.col(k), i)?;
        self.fits(k, c, region).then_some(c)
    }

    /// Adds an `i`-block to column `k`.
    pub fn add_block(&self, k: usize, i: Index) -> Result<Self, Error> {
        self.try_add_in(k, i, Region::ALL)
            .map(|c| self.with_column(k, c))
            .ok_or(Error::Inadmissible { column: k, color: i.value() })
    }

    /// Removes an `i`-block from column `k`.
    pub fn remove_block(&self, k: usize, i: Index) -> Result<Self, Error> {
        self.try_remove_in(k, i, Region::ALL)
            .map(|c| self.with_column(k, c))
            .ok_or(Error::NotRemovable { column: k, color: i.value() })
    }

    /// The wall with one δ-column taken off the top of column `k`, if that
    /// leaves a proper Young wall.
    pub fn remove_delta_column(&self, k: usize) -> Option<Self> {
        let c = self.col(k);
        if c.n < 4 {
            return None;
        }
        let new = Column::new(c.n - 4, if c.n == 4 { None } else { c.half });
        // At height zero a half-filled cube must be the ground block itself.
        if c.n == 4 && self.ground.present_half(k, c) != self.ground.present_half(k, Column::GROUND) {
            return None;
        }
        self.fits(k, new, Region::ALL).then(|| self.with_column(k, new))
    }

    /// No column contains a removable δ-column.
    pub fn is_reduced(&self) -> bool {
        (0..self.cols.len()).all(|k| self.remove_delta_column(k).is_none())
    }

    /// All blocks (ground blocks of stored columns included).
    pub fn blocks(&self) -> Vec<Block> {
        self.cols.iter().enumerate().flat_map(|(k, c)| self.ground.column_blocks(k, *c)).collect()
    }

    /// Coordinate of block `t` of column `k`.
    pub fn coordinate_of(&self, k: usize, t: u32) -> Option<Coordinate> {
        let c = self.col(k);
        (t <= c.n).then(|| Coordinate { k, l: self.ground.half_height(t) / 2 })
    }

    /// The non-ground blocks of the wall whose coordinates lie on `lad`.
    pub fn blocks_in_ladder(&self, lad: &Ladder) -> Vec<Block> {
        let pts: BTreeSet<Coordinate> = lad.points.iter().copied().collect();
        self.blocks().into_iter().filter(|b| !b.ground && pts.contains(&b.coordinate())).collect()
    }

    fn from_slot_map(g: GroundState, map: &BTreeMap<usize, BTreeSet<(u32, SlotPos)>>) -> Option<Self> {
        let width = map.keys().next_back().map_or(0, |k| k + 1);
        let mut cols = Vec::with_capacity(width);
        for k in 0..width {
            let c = {
                let s = map.get(&k)?;
                g.column_from_slots(k, s)?
            };
            cols.push(c);
        }
        let w = Self::from_columns_unchecked(g, cols);
        w.validate().ok().map(|_| w)
    }

    fn slot_map(&self) -> BTreeMap<usize, BTreeSet<(u32, SlotPos)>> {
        let mut map: BTreeMap<usize, BTreeSet<(u32, SlotPos)>> = BTreeMap::new();
        for b in self.blocks() {
            map.entry(b.k).or_default().insert((b.level, b.pos));
        }
        map
    }

    /// The block chosen to start a peel: the top of the leftmost non-empty
    /// column, taking the front half when the top cube is complete.
    fn peel_block(&self) -> Option<Block> {
        let k = self.cols.len().checked_sub(1)?;
        let blocks = self.ground.column_blocks(k, self.cols[k]);
        let top = *blocks.last()?;
        if self.ground.phase(self.cols[k].n) == 1 {
            return blocks.iter().rev().take(2).find(|b| b.pos == SlotPos::Front).copied();
        }
        Some(top)
    }

    /// Removes every block of the chosen color on the ladder of the chosen
    /// block: returns `(Ȳ, i, r)`.
    pub fn peel(&self) -> Result<(Self, Index, u32), Error> {
        if !self.is_reduced() {
            return Err(Error::NotReduced(self.to_string()));
        }
        let b = self.peel_block().ok_or(Error::Ground)?;
        let lad = ladder(b.coordinate());
        let removed: Vec<Block> = self.blocks_in_ladder(&lad).into_iter().filter(|x| x.color == b.color).collect();
        let mut map = self.slot_map();
        for x in &removed {
            map.get_mut(&x.k).expect("block column present").remove(&(x.level, x.pos));
        }
        // Re-insert ground blocks of emptied columns so that every column parses.
        for k in 0..self.cols.len() {
            let slots = map.entry(k).or_default();
            if slots.is_empty() {
                let gb = self.ground.column_blocks(k, Column::GROUND)[0];
                slots.insert((gb.level, gb.pos));
            }
        }
        let bar = Self::from_slot_map(self.ground, &map)
            .ok_or_else(|| Error::InvalidWall(format!("peeling {self} left an invalid configuration")))?;
        Ok((bar, b.color, removed.len() as u32))
    }

    /// The reduced form `Y^R`: on every ladder, the `i`-blocks of `Y` are slid
    /// down to the lowest `i`-slots of that ladder.
    ///
    /// Sliding one ladder at a time can be blocked by blocks stacked above in
    /// the same column, so all ladders are settled at once; the result is the
    /// configuration in which no block can move further down its ladder.
    pub fn reduced_form(&self) -> Self {
        let g = self.ground;
        let blocks = self.blocks();
        // (ladder m, color) -> number of non-ground blocks.
        let mut counts: BTreeMap<(u32, Index), usize> = BTreeMap::new();
        for b in blocks.iter().filter(|b| !b.ground) {
            *counts.entry((b.level + 2 * b.k as u32, b.color)).or_default() += 1;
        }
        let mut map: BTreeMap<usize, BTreeSet<(u32, SlotPos)>> = BTreeMap::new();
        for ((m, i), r) in counts {
            // Slots of ladder m with color i, lowest (leftmost) point first.
            let slots = (0..=(m / 2) as usize).rev().flat_map(|j| {
                let l = m - 2 * j as u32;
                level_slots(g, j, l).into_iter().map(move |(pos, c)| (j, l, pos, c))
            });
            let free = slots.filter(|&(j, l, pos, c)| {
                let gb = g.column_blocks(j, Column::GROUND)[0];
                c == i && !(gb.level == l && gb.pos == pos)
            });
            for (j, l, pos, _) in free.take(r) {
                map.entry(j).or_default().insert((l, pos));
            }
        }
        let width = map.keys().next_back().map_or(0, |k| k + 1);
        for k in 0..width {
            let gb = g.column_blocks(k, Column::GROUND)[0];
            map.entry(k).or_default().insert((gb.level, gb.pos));
        }
        Self::from_slot_map(g, &map).unwrap_or_else(|| panic!("reduced form of {self} is not a proper wall"))
    }
}

/// The slots (position, color) of unit level `l` of column `k`.
fn level_slots(g: GroundState, k: usize, l: u32) -> Vec<(SlotPos, Index)> {
    // Unit levels alternate between a pair of 1-slots and a cube.
    let cube_on_even = g.0 != Index::ONE;
    if l.is_multiple_of(2) == cube_on_even {
        vec![(SlotPos::Back, g.back_color(k)), (SlotPos::Front, g.front_color(k))]
    } else {
        vec![(SlotPos::Lower, Index::ONE), (SlotPos::Upper, Index::ONE)]
    }
}

/// Tail-sum dominance `P1 ⊵ P2`.
pub fn dominance(p1: &[u32], p2: &[u32]) -> bool {
    let len = p1.len().max(p2.len());
    let (mut s1, mut s2) = (0u64, 0u64);
    for l in (0..len).rev() {
        s1 += u64::from(p1.get(l).copied().unwrap_or(0));
        s2 += u64::from(p2.get(l).copied().unwrap_or(0));
        if s1 < s2 {
            return false;
        }
    }
    true
}

/// Compares partitions at the largest index where they differ.
pub fn partition_cmp(p1: &[u32], p2: &[u32]) -> Ordering {
    let len = p1.len().max(p2.len());
    for k in (0..len).rev() {
        let (a, b) = (p1.get(k).copied().unwrap_or(0), p2.get(k).copied().unwrap_or(0));
        if a != b {
            return a.cmp(&b);
        }
    }
    Ordering::Equal
}

/// `P1 > P2` in the order comparing the largest differing index.
pub fn partition_gt(p1: &[u32], p2: &[u32]) -> bool {
    partition_cmp(p1, p2) == Ordering::Greater
}

/// The total order on walls: partitions first, then the tie-break ≻ which
/// compares half-cube colors column by column from `k = 0`, ranking color 2
/// above color 0.
pub fn wall_total_order(y: &YoungWall, z: &YoungWall) -> Ordering {
    partition_cmp(&y.partition(), &z.partition()).then_with(|| {
        let len = y.len().max(z.len());
        (0..len)
            .map(|k| y.col(k).half.cmp(&z.col(k).half))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    })
}

/// Sorts walls in descending total order.
pub fn sort_descending(walls: &mut [YoungWall]) {
    walls.sort_by(|a, b| wall_total_order(b, a));
}

/// All proper walls with at most `max_blocks` added blocks, in descending
/// total order.
pub fn enumerate_walls(g: GroundState, max_blocks: u32) -> Vec<YoungWall> {
    let mut out: Vec<YoungWall> = walls_by_size(g, max_blocks).into_iter().flatten().collect();
    sort_descending(&mut out);
    out
}

/// Proper walls grouped by number of added blocks, `0..=max_blocks`.
pub fn walls_by_size(g: GroundState, max_blocks: u32) -> Vec<Vec<YoungWall>> {
    (0..=max_blocks).map(|n| walls_of_size(g, n)).collect()
}

/// All proper walls with exactly `size` added blocks, in descending total
/// order.
pub fn walls_of_size(g: GroundState, size: u32) -> Vec<YoungWall> {
    fn go(g: GroundState, remaining: u32, cols: &mut Vec<Column>, full: &mut BTreeSet<u32>, out: &mut Vec<YoungWall>) {
        if remaining == 0 {
            out.push(YoungWall { ground: g, cols: cols.clone() });
            return;
        }
        let k = cols.len();
        let cap = cols.last().map_or(remaining, |c| c.n.min(remaining));
        for n in (1..=cap).rev() {
            if n % 2 == 1 && full.contains(&n) {
                continue;
            }
            let halves: &[Option<Index>] =
                if g.phase(n) == 0 { &[Some(Index::TWO), Some(Index::ZERO)] } else { &[None] };
            for &half in halves {
                let c = Column::new(n, half);
                if let Some(prev) = cols.last() {
                    if prev.n == n && g.half_is_front(k - 1, *prev) != g.half_is_front(k, c) {
                        continue;
                    }
                }
                cols.push(c);
                if n % 2 == 1 {
                    full.insert(n);
                }
                go(g, remaining - n, cols, full, out);
                if n % 2 == 1 {
                    full.remove(&n);
                }
                cols.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, size, &mut Vec::new(), &mut BTreeSet::new(), &mut out);
    sort_descending(&mut out);
    out
}

/// All proper walls of weight `w` (reduced ones only if requested), in
/// descending total order.
pub fn enumerate_weight_space(g: GroundState, w: &Weight, reduced_only: bool) -> Vec<YoungWall> {
    if w.lambda != g.0 {
        return Vec::new();
    }
    let mut out: Vec<YoungWall> = walls_of_size(g, w.depth())
        .into_iter()
        .filter(|y| y.weight() == *w && (!reduced_only || y.is_reduced()))
        .collect();
    sort_descending(&mut out);
    out
}

struct ColumnLit(GroundState, Column);

impl fmt::Display for ColumnLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.1.n)?;
        if let Some(h) = self.1.half {
            write!(f, ":{h}")?;
        }
        let _ = self.0;
        Ok(())
    }
}

impl fmt::Display for YoungWall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.ground)?;
        for (k, c) in self.cols.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", ColumnLit(self.ground, *c))?;
        }
        f.write_str("]")
    }
}

impl FromStr for YoungWall {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let perr = |pos: usize, msg: String| Error::Parse { pos, msg };
        let open = s.find('[').ok_or_else(|| perr(0, "expected '[' after the ground state".to_string()))?;
        let g: GroundState = s[..open].parse().map_err(|_| perr(0, format!("unknown ground state '{}'", s[..open].trim())))?;
        let rest = s[open + 1..].trim_end();
        let body = rest
            .strip_suffix(']')
            .ok_or_else(|| perr(s.len(), "expected closing ']'".to_string()))?;
        let mut cols = Vec::new();
        if !body.trim().is_empty() {
            let mut pos = open + 1;
            for (k, entry) in body.split(',').enumerate() {
                let e = entry.trim();
                let at = pos + entry.len() - entry.trim_start().len();
                let (n_txt, half_txt) = match e.split_once(':') {
                    Some((a, b)) => (a.trim(), Some(b.trim())),
                    None => (e, None),
                };
                let n: u32 = n_txt.parse().map_err(|_| perr(at, format!("column {k}: expected a block count")))?;
                let half = match half_txt {
                    None => None,
                    Some(t) => match t {
                        "0" => Some(Index::ZERO),
                        "2" => Some(Index::TWO),
                        _ => return Err(perr(at, format!("column {k}: half-cube color must be 0 or 2"))),
                    },
                };
                if let Some(p) = cols.last().map(|p: &Column| p.n) {
                    if p < n {
                        return Err(perr(at, format!("column {k}: weak-decrease violation ({p} < {n})")));
                    }
                }
                let c = Column::new(n, half);
                if !g.column_is_valid(k, c) {
                    let msg = if g.phase(n) == 0 && n > 0 {
                        format!("column {k}: count {n} ends in a half cube and needs ':0' or ':2'")
                    } else {
                        format!("column {k}: count {n} does not end in a half cube; drop the color suffix")
                    };
                    return Err(perr(at, msg));
                }
                if n == 0 {
                    return Err(perr(at, format!("column {k}: empty columns are not written")));
                }
                cols.push(c);
                pos += entry.len() + 1;
            }
        }
        let w = Self { ground: g, cols };
        w.validate().map_err(|e| perr(open, e.to_string()))?;
        Ok(w)
    }
}
