//! Imported groups: Cayley tables and permutation generating sets.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// Largest table side for which full associativity is checked on import.
pub const MAX_TABLE_SIDE: usize = 512;

/// On-disk Cayley table: row `i`, column `j` holds the index of `x_i * x_j`;
/// index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// A validated multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    name: String,
    side: usize,
    cells: Vec<u32>,
}

impl CayleyTable {
    pub fn from_json(name: &str, json: &str) -> Result<Self> {
        let file: CayleyTableFile = serde_json::from_str(json)
            .map_err(|e| Error::Import(format!("malformed Cayley table JSON: {e}")))?;
        Self::from_file(name, &file)
    }

    pub fn from_file(name: &str, file: &CayleyTableFile) -> Result<Self> {
        let n = file.order;
        if n == 0 {
            return Err(Error::Import("table order must be positive".into()));
        }
        if n > MAX_TABLE_SIDE {
            return Err(Error::Import(format!(
                "table side {n} exceeds the validation limit {MAX_TABLE_SIDE}"
            )));
        }
        if file.table.len() != n {
            return Err(Error::Import(format!(
                "declared order {n} but the table has {} rows",
                file.table.len()
            )));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in file.table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Import(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Import(format!(
                        "entry at row {i}, column {j} is {v}, outside 0..{n}"
                    )));
                }
                cells.push(v as u32);
            }
        }
        let table = CayleyTable {
            name: name.to_string(),
            side: n,
            cells,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let n = self.side;
        for j in 0..n {
            if self.mul(0, j) != j {
                return Err(Error::Import(format!(
                    "index 0 is not a left identity: row 0, column {j} is {}",
                    self.mul(0, j)
                )));
            }
            if self.mul(j, 0) != j {
                return Err(Error::Import(format!(
                    "index 0 is not a right identity: row {j}, column 0 is {}",
                    self.mul(j, 0)
                )));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = self.mul(i, j);
                if seen[v] == i {
                    return Err(Error::Import(format!(
                        "not a Latin square: value {v} repeats in row {i} (column {j})"
                    )));
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let v = self.mul(i, j);
                if seen[v] == j {
                    return Err(Error::Import(format!(
                        "not a Latin square: value {v} repeats in column {j} (row {i})"
                    )));
                }
                seen[v] = j;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    let left = self.mul(ab, c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(Error::Import(format!(
                            "not associative: (x{a}*x{b})*x{c} = x{left} but x{a}*(x{b}*x{c}) = x{right}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.side + j] as usize
    }

    pub fn to_file(&self) -> CayleyTableFile {
        CayleyTableFile {
            order: self.side,
            table: self
                .cells
                .chunks(self.side)
                .map(|row| row.iter().map(|&v| v as usize).collect())
                .collect(),
        }
    }
}

/// A permutation group given by generators, closed at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Parses a JSON list of image arrays and closes it under multiplication.
    pub fn from_json(name: &str, json: &str, cap: u64) -> Result<Self> {
        let images: Vec<Vec<usize>> = serde_json::from_str(json)
            .map_err(|e| Error::Import(format!("malformed permutation list JSON: {e}")))?;
        Self::from_images(name, &images, cap)
    }

    pub fn from_images(name: &str, images: &[Vec<usize>], cap: u64) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::Import("permutation list is empty".into()));
        }
        let degree = images[0].len();
        let mut generators = Vec::with_capacity(images.len());
        for (k, img) in images.iter().enumerate() {
            if img.len() != degree {
                return Err(Error::Import(format!(
                    "generator {k} acts on {} points, generator 0 on {degree}",
                    img.len()
                )));
            }
            let p = Perm::from_images(img)
                .map_err(|e| Error::Import(format!("generator {k}: {e}")))?;
            generators.push(p);
        }
        Self::new(name, degree, generators, cap)
    }

    pub fn new(name: &str, degree: usize, generators: Vec<Perm>, cap: u64) -> Result<Self> {
        let elements = perm::closure(degree, &generators, cap)?;
        Ok(PermGroup {
            name: name.to_string(),
            degree,
            generators,
            elements,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generator_images(&self) -> Vec<Vec<usize>> {
        self.generators
            .iter()
            .map(|g| g.images().iter().map(|&i| i as usize).collect())
            .collect()
    }

    pub(crate) fn member_set(&self) -> HashSet<&Perm> {
        self.elements.iter().collect()
    }
}
