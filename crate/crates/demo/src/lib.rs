//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain numbers or comma-separated text and returns a
//! JSON string; the page does all drawing. The `*_json` functions hold the
//! logic and are tested natively.

use parity_board::bijections::{board, iota, pab_index, phi};
use parity_board::partitions::{columns, durfee_rectangle, enumerate_strict_partitions};
use parity_board::qseries::q_j_count;
use parity_board::{ABSequence, StrictPartition};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn parse_list(text: &str) -> Result<Vec<i64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| format!("not an integer: {s:?}")))
        .collect()
}

#[derive(Serialize)]
struct PhiView {
    a: u64,
    b: u64,
    delta: String,
    partition: Vec<u64>,
    weight: u64,
    durfee_rows: u64,
    pab_b: Option<u64>,
    snapshots: Vec<board::BoardSnapshot>,
}

/// Replays the board filling for a comma-separated sequence.
pub fn phi_board_json(entries: &str) -> Result<String, String> {
    let raw = parse_list(entries)?;
    let d = ABSequence::validate(&raw).map_err(|e| e.to_string())?;
    if d.is_epsilon() {
        return Err("enter a nonempty sequence".into());
    }
    let a = d.a();
    let lambda = phi(a, &d).map_err(|e| e.to_string())?;
    let run = board::simulate(a, d.entries()).map_err(|e| e.to_string())?;
    let view = PhiView {
        a,
        b: d.b(),
        delta: d.to_string(),
        durfee_rows: durfee_rectangle(&lambda, a).rows,
        pab_b: pab_index(&lambda, a),
        partition: lambda.parts().to_vec(),
        weight: lambda.weight(),
        snapshots: run.snapshots,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ShiftedCell {
    row: u64,
    col: u64,
    /// +1 or -1 in the chessboard weighting of the ordinary diagram
    sign: i8,
    staircase: bool,
}

#[derive(Serialize)]
struct IotaView {
    partition: String,
    bg_rank: i64,
    columns: Vec<u64>,
    k: u64,
    t: u64,
    delta: String,
    cells: Vec<ShiftedCell>,
}

/// Shifted diagram of a strict partition with its column reading and image
/// under `iota`. Cells in the first `k` columns make up the staircase part.
pub fn iota_view_json(parts: &str) -> Result<String, String> {
    let raw = parse_list(parts)?;
    let mut parts = Vec::with_capacity(raw.len());
    for p in raw {
        parts.push(u64::try_from(p).map_err(|_| format!("negative part {p}"))?);
    }
    let s = StrictPartition::new(parts).map_err(|e| e.to_string())?;
    let img = iota(&s).map_err(|e| e.to_string())?;
    let mut cells = Vec::new();
    for (i, &part) in s.parts().iter().enumerate() {
        let row = i as u64 + 1;
        for j in 0..part {
            let col = row + j;
            // ordinary-diagram position (row, j+1) coloured like the top-left cell when row+j+1 is even
            let sign = if (row + j + 1).is_multiple_of(2) { 1 } else { -1 };
            cells.push(ShiftedCell { row, col, sign, staircase: col <= img.k });
        }
    }
    let view = IotaView {
        partition: s.to_sum_string(),
        bg_rank: s.bg_rank(),
        columns: columns(&s).as_slice().to_vec(),
        k: img.k,
        t: img.t,
        delta: img.delta.to_string(),
        cells,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct RankGrid {
    ranks: Vec<i64>,
    weights: Vec<u64>,
    /// `counts[r][n]`: strict partitions of `weights[n]` with BG-rank `ranks[r]`
    counts: Vec<Vec<u64>>,
    /// the same from the partition-function formula
    closed_form: Vec<Vec<u64>>,
}

/// Strict partitions by weight and BG-rank, by enumeration and in closed form.
pub fn rank_grid_json(n_max: u32, j_bound: u32) -> Result<String, String> {
    let n_max = u64::from(n_max.min(60));
    let j_bound = i64::from(j_bound.min(8));
    let ranks: Vec<i64> = (-j_bound..=j_bound).collect();
    let weights: Vec<u64> = (0..=n_max).collect();
    let mut counts = vec![vec![0u64; weights.len()]; ranks.len()];
    for &n in &weights {
        for s in enumerate_strict_partitions(n, None) {
            if let Some(r) = ranks.iter().position(|&j| j == s.bg_rank()) {
                counts[r][n as usize] += 1;
            }
        }
    }
    let closed_form = ranks
        .iter()
        .map(|&j| weights.iter().map(|&n| q_j_count(j, n)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    serde_json::to_string(&RankGrid { ranks, weights, counts, closed_form }).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn phi_board(entries: &str) -> Result<String, JsError> {
    phi_board_json(entries).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn iota_view(parts: &str) -> Result<String, JsError> {
    iota_view_json(parts).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn rank_grid(n_max: u32, j_bound: u32) -> Result<String, JsError> {
    rank_grid_json(n_max, j_bound).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn phi_board_reproduces_example() {
        let v: Value = serde_json::from_str(&phi_board_json("7,8,9,10,11,11,8,7,5,5,4,3,1,1").unwrap()).unwrap();
        assert_eq!(v["partition"], serde_json::json!([12, 10, 9, 6, 4, 3, 1]));
        assert_eq!(v["a"], 6);
        assert_eq!(v["b"], 5);
        assert_eq!(v["pab_b"], 5);
        assert_eq!(v["snapshots"].as_array().unwrap().len(), 14);
    }

    #[test]
    fn phi_board_rejects_bad_input() {
        assert!(phi_board_json("1,1,1").is_err());
        assert!(phi_board_json("").is_err());
        assert!(phi_board_json("1,x").is_err());
    }

    #[test]
    fn iota_view_for_table_row() {
        let v: Value = serde_json::from_str(&iota_view_json("4 2 1").unwrap()).unwrap();
        assert_eq!(v["t"], 1);
        assert_eq!(v["delta"], "{2,3,1}");
        assert_eq!(v["columns"], serde_json::json!([1, 2, 3, 1]));
        let cells = v["cells"].as_array().unwrap();
        assert_eq!(cells.len(), 7);
        // the chessboard weights sum to the BG-rank
        let total: i64 = cells.iter().map(|c| c["sign"].as_i64().unwrap()).sum();
        assert_eq!(total, v["bg_rank"].as_i64().unwrap());
        assert!(iota_view_json("2,2").is_err());
    }

    #[test]
    fn chessboard_sum_is_rank_for_all_small_strict_partitions() {
        for n in 0..=15 {
            for s in enumerate_strict_partitions(n, None) {
                let text: Vec<String> = s.parts().iter().map(u64::to_string).collect();
                let v: Value = serde_json::from_str(&iota_view_json(&text.join(",")).unwrap()).unwrap();
                let total: i64 = v["cells"].as_array().unwrap().iter().map(|c| c["sign"].as_i64().unwrap()).sum();
                assert_eq!(total, s.bg_rank(), "{s}");
            }
        }
    }

    #[test]
    fn rank_grid_sides_agree() {
        let v: Value = serde_json::from_str(&rank_grid_json(20, 3).unwrap()).unwrap();
        assert_eq!(v["counts"], v["closed_form"]);
        assert_eq!(v["ranks"].as_array().unwrap().len(), 7);
    }
}
