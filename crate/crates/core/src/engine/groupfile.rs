//! Group definition files: `{"name", "degree", "generators"}` with
//! generators as 1-based image arrays.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgroup::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let g: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if g.degree == 0 || g.degree > 256 {
            return Err(Error::Parse(format!("degree {} out of range", g.degree)));
        }
        for im in &g.generators {
            if im.len() != g.degree {
                return Err(Error::InvalidPermutation(format!("generator of length {} on {} points", im.len(), g.degree)));
            }
        }
        Ok(g)
    }

    pub fn read(path: &std::path::Path) -> Result<GroupFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self.generators.iter().map(|im| Perm::from_one_based(im)).collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        PermGroup::new(self.degree, gens)
    }

    pub fn from_group(name: &str, g: &PermGroup) -> GroupFile {
        GroupFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.one_based()).collect(),
        }
    }

    /// Canonical text: generators sorted lexicographically.
    pub fn canonical(&self) -> String {
        let mut c = self.clone();
        c.generators.sort();
        c.generators.dedup();
        serde_json::to_string(&c).expect("serialisable")
    }
}
