//! The matroid file format: TOML with fields `n`, `rank`, and `bases`
//! (atom lists, 1-indexed).
//!
//! ```toml
//! n = 5
//! rank = 3
//! bases = [[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]]
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::atoms::AtomSet;
use crate::error::{LatgeomError, Result};
use crate::matroid::Matroid;

#[derive(Debug, Serialize, Deserialize)]
struct MatroidFile {
    n: usize,
    rank: usize,
    bases: Vec<Vec<u8>>,
}

pub fn matroid_from_str(text: &str) -> Result<Matroid> {
    let file: MatroidFile =
        toml::from_str(text).map_err(|e| LatgeomError::Parse(e.to_string()))?;
    let bases = file
        .bases
        .iter()
        .map(|atoms| {
            for &a in atoms {
                if a == 0 || a as usize > file.n {
                    return Err(LatgeomError::Parse(format!(
                        "atom {a} outside 1..={}",
                        file.n
                    )));
                }
            }
            let set = AtomSet::from_atoms(atoms.iter().copied());
            if set.len() != atoms.len() {
                return Err(LatgeomError::Parse(format!(
                    "repeated atom in basis {atoms:?}"
                )));
            }
            Ok(set)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matroid::from_bases(file.n, bases)?;
    if m.rank() != file.rank {
        return Err(LatgeomError::Parse(format!(
            "declared rank {} but bases have cardinality {}",
            file.rank,
            m.rank()
        )));
    }
    Ok(m)
}

pub fn load_matroid(path: &Path) -> Result<Matroid> {
    let text = std::fs::read_to_string(path)?;
    matroid_from_str(&text)
}

pub fn matroid_to_string(m: &Matroid) -> String {
    let file = MatroidFile {
        n: m.n(),
        rank: m.rank(),
        bases: m.bases().iter().map(|b| b.iter().collect()).collect(),
    };
    toml::to_string(&file).expect("matroid serializes")
}

pub fn save_matroid(m: &Matroid, path: &Path) -> Result<()> {
    std::fs::write(path, matroid_to_string(m))?;
    Ok(())
}
