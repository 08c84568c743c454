//! The four published tables: decompositions of the regular representation
//! of `S_4` and `S_5`, and the truncated alternating sums `U_k(6)`, `U_k(7)`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lie_family::Family;
use crate::schur::{to_schur, SchurExpansion};
use crate::series::{apply_series, Outer, Series};
use crate::symfunc::SymFunc;
use crate::wire::schur_to_json;

#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<SchurExpansion>,
    pub dimension: u64,
}

#[derive(Clone, Debug)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

/// Tables 1 and 2 are `n = 4, 5`; tables 3 and 4 are `n = 6, 7`.
pub fn table(which: u8) -> Result<Table> {
    match which {
        1 => regular_representation(4),
        2 => regular_representation(5),
        3 => alternating_sums(6),
        4 => alternating_sums(7),
        _ => Err(Error::InvalidArgument(format!("no table {which}; expected 1-4"))),
    }
}

fn dimension_of(f: &SymFunc) -> Result<u64> {
    let d = f.dimension()?;
    d.to_integer()
        .try_into()
        .map_err(|_| Error::InvalidArgument("dimension out of range".into()))
}

/// PBW `h_ℓ[Lie]`, Ext `e_ℓ[Lie^(2)]` and Whitney homology in degree `n`,
/// one row per number of cycles `ℓ = n, ..., 1`. The Whitney column shows
/// `WH_k` for odd `k = n - ℓ` and `ω(WH_k)` for even `k`.
pub fn regular_representation(n: usize) -> Result<Table> {
    let h_lie = apply_series(Outer::H, &Series::family(Family::Lie, n), n)?;
    let e_lie = apply_series(Outer::E, &Series::family(Family::Lie, n), n)?;
    let e_lie2 = apply_series(Outer::E, &Series::family(Family::Lie2, n), n)?;
    let mut rows = Vec::new();
    for l in (1..=n).rev() {
        let k = n - l;
        let pbw = h_lie.slot(n, l);
        let ext = e_lie2.slot(n, l);
        let whitney = if k % 2 == 0 {
            e_lie.slot(n, l)
        } else {
            e_lie.slot(n, l).omega()
        };
        rows.push(TableRow {
            label: format!("l={l}"),
            dimension: dimension_of(&pbw)?,
            cells: vec![to_schur(&pbw)?, to_schur(&ext)?, to_schur(&whitney)?],
        });
    }
    Ok(Table {
        title: format!("The regular representation of S_{n}"),
        columns: vec!["PBW".into(), "Ext".into(), "Whitney".into()],
        rows,
    })
}

/// `U_k(n)` for `k = 0, ..., n-2`.
pub fn alternating_sums(n: usize) -> Result<Table> {
    let h = apply_series(Outer::H, &Series::family(Family::Lie2, n), n)?;
    let mut acc = SymFunc::zero();
    let mut rows = Vec::new();
    for k in 0..n - 1 {
        acc = &h.slot(n, n - k) - &acc;
        rows.push(TableRow {
            label: format!("k={k}"),
            dimension: dimension_of(&acc)?,
            cells: vec![to_schur(&acc)?],
        });
    }
    Ok(Table {
        title: format!("Alternating sums U_k({n}) of h_k[Lie2]"),
        columns: vec![format!("U_k({n})")],
        rows,
    })
}

impl Table {
    /// Aligned plain text, one line per row, columns separated by ` | `.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.cells.iter().map(SchurExpansion::render).collect())
            .collect();
        let label_w = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0).max(1);
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|row| row[j].len())
                    .chain(std::iter::once(self.columns[j].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("{}\n", self.title);
        let header: Vec<String> = self
            .columns
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(&format!("{:<label_w$} | {} | dim\n", "", header.join(" | ")));
        for (row, texts) in self.rows.iter().zip(&cells) {
            let body: Vec<String> = texts
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(&format!(
                "{:<label_w$} | {} | {}\n",
                row.label,
                body.join(" | "),
                row.dimension
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "dimension": r.dimension,
                    "cells": r.cells.iter().map(schur_to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"title": self.title, "columns": self.columns, "rows": rows})
    }
}
