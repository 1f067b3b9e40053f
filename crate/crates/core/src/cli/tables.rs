//! Multiplication tables over the canonical basis.

use serde_json::json;

use crate::bform::BilinearForm;
use crate::cli::config::{OutputFormat, Session};
use crate::cli::format;
use crate::error::Result;
use crate::multivector::{basis, wedge, Multivector};
use crate::product::{cmul, ProductAlgorithm};

/// Largest dimension rendered without `--force`.
pub const MAX_TABLE_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Wedge,
    Cmul,
}

/// `table[i][j] = b_i ∘ b_j` over the blades in canonical order.
pub fn table(kind: TableKind, form: &BilinearForm, algo: ProductAlgorithm) -> Result<Vec<Vec<Multivector>>> {
    let dim = form.dim();
    let bas: Vec<Multivector> = basis(dim)?
        .into_iter()
        .map(|b| Multivector::from_blade(dim, b))
        .collect();
    bas.iter()
        .map(|x| {
            bas.iter()
                .map(|y| match kind {
                    TableKind::Wedge => wedge(x, y),
                    TableKind::Cmul => cmul(x, y, form, algo),
                })
                .collect()
        })
        .collect()
}

pub fn render_table(rows: &[Vec<Multivector>], session: &Session) -> Result<String> {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|m| format::render(m, session)).collect())
        .collect::<Result<_>>()?;
    Ok(match session.cfg.format {
        OutputFormat::Text => {
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            cells
                .iter()
                .map(|r| {
                    let padded: Vec<String> = r.iter().map(|c| format!("{c:<width$}")).collect();
                    format!("[ {} ]", padded.join("  ").trim_end())
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        OutputFormat::Json => {
            let rows: Vec<Vec<serde_json::Value>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|m| serde_json::from_str(&format::render(m, session).expect("rendered above")).expect("valid json"))
                        .collect()
                })
                .collect();
            json!({ "rows": rows }).to_string()
        }
        OutputFormat::Latex => {
            let body: Vec<String> = cells.iter().map(|r| r.join(" & ")).collect();
            format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", body.join(" \\\\\n"))
        }
    })
}
