//! The `export` command: the generator-by-basis multiplication table and the
//! monomial-to-standard transition matrix, as JSON.

use std::fs;
use std::path::{Path, PathBuf};

use qcombinat::{compositions, super_matrices, SuperMatrix};
use qschur::{oracle_product, GeneratorShape, SchurElement};
use qsupergroup::TransitionMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::product::format_shape;
use crate::CliError;

/// Products of one generator shape with every standard basis element, in column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub descriptor: String,
    pub shape: GeneratorShape,
    pub left: SuperMatrix,
    pub products: Vec<SchurElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationTable {
    pub n: usize,
    pub r: i32,
    pub columns: Vec<SuperMatrix>,
    pub rows: Vec<TableRow>,
}

impl MultiplicationTable {
    /// Every single-generator shape of every weight in `Lambda(n, r)` against the full basis.
    pub fn build(n: usize, r: i32) -> Result<Self, CliError> {
        crate::check_bounds(n, r)?;
        let columns = super_matrices(n, r);
        let shapes: Vec<GeneratorShape> = compositions(n, r)
            .iter()
            .flat_map(GeneratorShape::all_for_weight)
            .collect();
        let rows = shapes
            .into_par_iter()
            .map(|shape| {
                let left = shape.matrix()?;
                let products = columns
                    .iter()
                    .map(|a| oracle_product(&left, a))
                    .collect::<Result<_, _>>()?;
                Ok(TableRow {
                    descriptor: format_shape(&shape),
                    shape,
                    left,
                    products,
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(MultiplicationTable {
            n,
            r,
            columns,
            rows,
        })
    }
}

/// The transition matrix with its certificate of invertibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionExport {
    pub size: usize,
    pub rank: usize,
    pub determinant: String,
    pub invertible: bool,
    pub transition: TransitionMatrix,
}

impl TransitionExport {
    pub fn build(n: usize, r: i32) -> Result<Self, CliError> {
        crate::check_bounds(n, r)?;
        let t = TransitionMatrix::build(n, r)?;
        let det = t.determinant();
        Ok(TransitionExport {
            size: t.size(),
            rank: t.rank(),
            invertible: !det.is_zero(),
            determinant: det.to_string(),
            transition: t,
        })
    }
}

/// Writes `table.json` and `transition.json` into `dir` and returns their paths.
pub fn export(n: usize, r: i32, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let table = MultiplicationTable::build(n, r)?;
    let transition = TransitionExport::build(n, r)?;
    fs::create_dir_all(dir)?;
    let paths = vec![dir.join("table.json"), dir.join("transition.json")];
    fs::write(&paths[0], serde_json::to_string_pretty(&table)?)?;
    fs::write(&paths[1], serde_json::to_string_pretty(&transition)?)?;
    Ok(paths)
}
