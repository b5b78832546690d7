//! Per-(G, p) block tables in TSV and JSON.

use serde::Serialize;

use super::{Engine, GroupCatalogEntry, Policy};
use crate::cyclicblocks::cyclic_block_dim;
use crate::error::Result;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BlockRow {
    pub group: String,
    pub prime: u32,
    pub block_index: usize,
    /// Unknown for rows produced by formula alone.
    pub fp_dim: Option<u128>,
    pub residue_degree: usize,
    pub defect: u32,
    /// Per k-block.
    pub hh1_dim: Option<usize>,
    pub strategy: Option<String>,
    pub lie_verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDimReport {
    pub group: String,
    pub prime: u32,
    pub policy: String,
    pub total: Option<usize>,
    pub rows: Vec<BlockRow>,
    /// `sum hh1_dim * residue_degree == total`, when every row is resolved.
    pub consistent: Option<bool>,
}

pub const TSV_HEADER: &str = "group\tprime\tblock_index\tfp_dim\tresidue_degree\tdefect\thh1_dim\tstrategy\tlie_verdict";

impl BlockRow {
    pub fn tsv(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.group,
            self.prime,
            self.block_index,
            opt(self.fp_dim.map(|x| x.to_string())),
            self.residue_degree,
            self.defect,
            opt(self.hh1_dim.map(|x| x.to_string())),
            opt(self.strategy.clone()),
            self.lie_verdict
        )
    }
}

impl BlockDimReport {
    /// Defect exponents of the k-blocks.
    pub fn k_defects(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| std::iter::repeat_n(r.defect, r.residue_degree)).collect()
    }

    /// `dim HH^1` of each k-block, in block order.
    pub fn k_dims(&self) -> Vec<Option<usize>> {
        self.rows.iter().flat_map(|r| std::iter::repeat_n(r.hh1_dim, r.residue_degree)).collect()
    }

    /// Strategy used for each k-block.
    pub fn k_strategies(&self) -> Vec<Option<String>> {
        self.rows.iter().flat_map(|r| std::iter::repeat_n(r.strategy.clone(), r.residue_degree)).collect()
    }

    pub fn tsv(&self) -> String {
        let mut s = String::from(TSV_HEADER);
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.tsv());
            s.push('\n');
        }
        s
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }
}

/// `[13,2]`, `[1^2,0^5]`: runs of equal entries collapse to exponents.
pub fn bracket_summary(xs: &[Option<usize>]) -> String {
    let show = |x: &Option<usize>| x.map_or("?".to_string(), |v| v.to_string());
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        parts.push(if j - i == 1 { show(&xs[i]) } else { format!("{}^{}", show(&xs[i]), j - i) });
        i = j;
    }
    format!("[{}]", parts.join(","))
}

fn verdict(dim: usize, lie: Option<&crate::liealg::LieAlgebraFp>) -> String {
    match (lie, dim) {
        (Some(l), _) => l.verdict().to_string(),
        (None, 0) => "zero".into(),
        (None, 1) => "abelian".into(),
        _ => "undetermined".into(),
    }
}

pub fn group_report(entry: &GroupCatalogEntry, p: u32, policy: &Policy, seed: u64) -> Result<BlockDimReport> {
    let eng = Engine::new(entry, p, policy.clone(), seed)?;
    Ok(engine_report(&eng))
}

pub fn engine_report(eng: &Engine) -> BlockDimReport {
    let res = eng.resolve();
    let total = eng.total().ok();
    let rows: Vec<BlockRow> = eng
        .blocks
        .blocks
        .iter()
        .zip(&res)
        .map(|(b, r)| BlockRow {
            group: eng.name.clone(),
            prime: eng.p,
            block_index: b.index,
            fp_dim: Some(b.fp_dimension),
            residue_degree: b.residue_degree,
            defect: b.defect_exponent,
            hh1_dim: r.as_ref().ok().map(|d| d.dim),
            strategy: r.as_ref().ok().map(|d| d.strategy.tag().to_string()),
            lie_verdict: r.as_ref().map_or("undetermined".into(), |d| verdict(d.dim, d.lie.as_ref())),
            note: r.as_ref().err().map(|e| e.to_string()),
        })
        .collect();
    let consistent = match (total, rows.iter().all(|r| r.hh1_dim.is_some())) {
        (Some(t), true) => Some(rows.iter().map(|r| r.hh1_dim.unwrap() * r.residue_degree).sum::<usize>() == t),
        _ => None,
    };
    BlockDimReport { group: eng.name.clone(), prime: eng.p, policy: eng.policy.to_string(), total, rows, consistent }
}

/// Number of simple modules of each block of M24 with defect group `C_p`,
/// for `p` in 5, 7, 11, 23. These are inputs, not computed here.
pub const M24_CYCLIC_SIMPLES: [(u32, &[usize]); 4] = [(5, &[4, 4, 2]), (7, &[3, 3, 3]), (11, &[10]), (23, &[11])];

/// Cyclic-defect rows of M24 from the defect-one formula alone.
pub fn m24_cyclic_rows() -> Result<Vec<BlockRow>> {
    let mut out = Vec::new();
    for (p, es) in M24_CYCLIC_SIMPLES {
        for (i, &e) in es.iter().enumerate() {
            let d = cyclic_block_dim(p, 1, e)?;
            out.push(BlockRow {
                group: "M24".into(),
                prime: p,
                block_index: i,
                fp_dim: None,
                residue_degree: 1,
                defect: 1,
                hh1_dim: Some(d),
                strategy: Some("cyclic-formula".into()),
                lie_verdict: verdict(d, None),
                note: Some(format!("|IBr| = {e} taken as input")),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summaries() {
        assert_eq!(bracket_summary(&[Some(13), Some(2)]), "[13,2]");
        assert_eq!(bracket_summary(&[Some(1), Some(1), Some(0), Some(0), Some(0)]), "[1^2,0^3]");
        assert_eq!(bracket_summary(&[None]), "[?]");
    }

    #[test]
    fn m24_formula_rows() {
        let rows = m24_cyclic_rows().unwrap();
        let dims: Vec<usize> = rows.iter().map(|r| r.hh1_dim.unwrap()).collect();
        assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 1, 2]);
    }

    #[test]
    fn frobenius_group_single_nontrivial_row() {
        let e = super::super::lookup("C11:C5").unwrap();
        let r = group_report(&e, 11, &Policy::default(), 1).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].hh1_dim, Some(2));
        assert_eq!(r.consistent, Some(true));
        assert_eq!(r.rows[0].lie_verdict, "solvable");
    }
}
