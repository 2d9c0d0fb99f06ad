//! Cell-by-cell replay of the board filling that defines `phi_a`.
//!
//! The board is tiled by blocks `B_1, B_2, ...`: the odd block `B_{2j-1}` is
//! row `j`, columns `1..=a+j`, filled left to right; the even block `B_{2i}`
//! is column `a+i+1`, rows `1..=i`, filled top to bottom. Step 1 lays `d_1`
//! cells into `B_1`. Step `i` first spends cells re-covering every singly
//! covered cell of `B_{i-1}`, then lays the rest into `B_i`. The doubly
//! covered cells at the end form the Young diagram of the image.
//!
//! This path shares nothing with the closed-form recurrence in
//! [`super::phi`] and is used to cross-check it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A board cell, 1-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoardCell {
    pub row: u64,
    pub col: u64,
    /// 1-based index of the block containing the cell.
    pub block: usize,
    pub cover_count: u8,
}

/// Cells of block `B_index` in filling order.
pub fn block_cells(a: u64, index: usize) -> Vec<(u64, u64)> {
    assert!(index >= 1, "blocks are 1-based");
    let half = (index as u64).div_ceil(2);
    if index % 2 == 1 {
        (1..=a + half).map(|col| (half, col)).collect()
    } else {
        (1..=half).map(|row| (row, a + half + 1)).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoardSnapshot {
    /// Step number, 1-based (the entry `d_step` has just been used).
    pub step: usize,
    pub cells: Vec<BoardCell>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoardRun {
    pub a: u64,
    pub snapshots: Vec<BoardSnapshot>,
    pub result: Partition,
}

#[derive(Default)]
struct Board {
    cells: BTreeMap<(u64, u64), (usize, u8)>,
}

impl Board {
    fn snapshot(&self, step: usize) -> BoardSnapshot {
        let cells = self
            .cells
            .iter()
            .map(|(&(row, col), &(block, cover_count))| BoardCell { row, col, block, cover_count })
            .collect();
        BoardSnapshot { step, cells }
    }
}

/// Replays the filling for the entries `entries` on the board for `a`.
///
/// Fails if some step cannot re-cover the previous block, overflows its own
/// block, or the final board still has singly covered cells, or if the
/// doubly covered region is not a Young diagram.
pub fn simulate(a: u64, entries: &[u64]) -> Result<BoardRun> {
    let mut board = Board::default();
    let mut snapshots = Vec::with_capacity(entries.len());
    for (step0, &d) in entries.iter().enumerate() {
        let block = step0 + 1;
        let mut budget = d;
        if block > 1 {
            for cell in block_cells(a, block - 1) {
                if let Some(state) = board.cells.get_mut(&cell) {
                    if state.1 == 1 {
                        if budget == 0 {
                            return Err(Error::BoardFilling(format!(
                                "step {block}: d = {d} cannot re-cover block {}",
                                block - 1
                            )));
                        }
                        state.1 = 2;
                        budget -= 1;
                    }
                }
            }
        }
        let cells = block_cells(a, block);
        if budget as usize > cells.len() {
            return Err(Error::BoardFilling(format!(
                "step {block}: {budget} cells do not fit in block {block} of size {}",
                cells.len()
            )));
        }
        for &cell in cells.iter().take(budget as usize) {
            board.cells.insert(cell, (block, 1));
        }
        snapshots.push(board.snapshot(block));
    }
    if let Some((&(row, col), _)) = board.cells.iter().find(|(_, s)| s.1 == 1) {
        return Err(Error::BoardFilling(format!("cell ({row},{col}) is left singly covered")));
    }
    let result = young_diagram_rows(board.cells.keys().copied())?;
    Ok(BoardRun { a, snapshots, result })
}

fn young_diagram_rows(cells: impl Iterator<Item = (u64, u64)>) -> Result<Partition> {
    let mut rows: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (row, col) in cells {
        rows.entry(row).or_default().push(col);
    }
    let mut parts = Vec::with_capacity(rows.len());
    for (expected_row, (row, mut cols)) in (1u64..).zip(rows) {
        cols.sort_unstable();
        let contiguous = cols.iter().copied().eq(1..=cols.len() as u64);
        if row != expected_row || !contiguous {
            return Err(Error::BoardFilling(format!("row {row} is not left-justified")));
        }
        parts.push(cols.len() as u64);
    }
    Partition::new(parts).map_err(|e| Error::BoardFilling(format!("rows do not form a diagram: {e}")))
}
