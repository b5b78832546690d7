//! Radical p-subgroups, chains of them up to conjugacy, and the
//! alternating sum of `dim HH^1` over chain normalisers.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::engine::{principal_block_dim, Policy, Strategy};
use crate::error::{Error, Result};
use crate::groupalgebra::BlockRecord;
use crate::perm::conj_into;
use crate::permgroup::{PermGroup, Subgroup};

/// `1 = Q_0 < Q_1 < ... < Q_m` with `N(sigma)` the intersection of the
/// normalisers.
#[derive(Clone, Debug)]
pub struct PChain {
    pub terms: Vec<Subgroup>,
    /// Index into [`radical_p_subgroups`] of the class of each term.
    pub kinds: Vec<usize>,
    pub normalizer: Subgroup,
}

impl PChain {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// Classes of `Q` with `Q = O_p(N_G(Q))`; the trivial subgroup comes first
/// whether or not it is radical, as the root of every chain.
pub fn radical_p_subgroups(g: &PermGroup, p: u32) -> Result<Vec<Subgroup>> {
    let classes = g.p_subgroup_classes(p)?;
    let mut out = vec![Subgroup::from_sorted(vec![0], g)];
    for q in classes.into_iter().filter(|q| !q.is_trivial()) {
        let n = g.normalizer(&q)?;
        let op = n.as_group(g).o_p(p)?;
        if op.order() == q.order() {
            out.push(q);
        }
    }
    Ok(out)
}

fn conj_set(g: &PermGroup, set: &[u32], c: &[u8], buf: &mut [u8]) -> Vec<u32> {
    let t = g.elements().expect("element table");
    let mut v: Vec<u32> = set
        .iter()
        .map(|&x| {
            conj_into(t.get(x as usize), c, buf);
            t.index_of(buf).expect("closed under conjugation")
        })
        .collect();
    v.sort_unstable();
    v
}

/// Orbit of a set of element indices under conjugation by `gens`, in
/// discovery order.
fn orbit(g: &PermGroup, start: &[u32], gens: &[Vec<u8>]) -> Vec<Vec<u32>> {
    let mut buf = vec![0u8; g.degree()];
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::from([(start.to_vec(), ())]);
    let mut out = vec![start.to_vec()];
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(s) = queue.pop_front() {
        for c in gens {
            let y = conj_set(g, &s, c, &mut buf);
            if seen.insert(y.clone(), ()).is_none() {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

fn images(g: &PermGroup, h: &Subgroup) -> Vec<Vec<u8>> {
    h.generator_perms(g).iter().map(|x| x.images().to_vec()).collect()
}

/// Every chain of radical p-subgroups up to simultaneous conjugacy, by
/// length, each extended one term at a time: the candidates for the next
/// term are the conjugates of a radical representative containing the
/// current top, taken up to conjugacy by the chain normaliser.
pub fn chain_classes(g: &PermGroup, p: u32) -> Result<Vec<PChain>> {
    let radicals = radical_p_subgroups(g, p)?;
    let ggens: Vec<Vec<u8>> = g.generators().iter().map(|x| x.images().to_vec()).collect();
    let conjugates: Vec<Vec<Vec<u32>>> =
        crate::par::map_slice(&radicals[1..], |r| orbit(g, r.elements(), &ggens));
    let root = PChain { terms: vec![radicals[0].clone()], kinds: vec![0], normalizer: g.whole()? };
    let mut out = vec![root.clone()];
    let mut frontier = vec![root];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for ch in &frontier {
            let top = ch.terms.last().unwrap();
            let ngens = images(g, &ch.normalizer);
            for (k, (r, conj)) in radicals[1..].iter().zip(&conjugates).enumerate() {
                if r.order() <= top.order() || r.order() % top.order() != 0 {
                    continue;
                }
                let mut cands: Vec<&Vec<u32>> =
                    conj.iter().filter(|s| top.elements().iter().all(|x| s.binary_search(x).is_ok())).collect();
                cands.sort();
                let mut taken: HashMap<Vec<u32>, ()> = HashMap::new();
                for c in cands {
                    if taken.contains_key(c) {
                        continue;
                    }
                    for y in orbit(g, c, &ngens) {
                        taken.insert(y, ());
                    }
                    let q = Subgroup::from_sorted(c.clone(), g);
                    let nq = g.normalizer(&q)?;
                    let normalizer = ch.normalizer.intersect(&nq, g);
                    let mut terms = ch.terms.clone();
                    terms.push(q);
                    let mut kinds = ch.kinds.clone();
                    kinds.push(k + 1);
                    next.push(PChain { terms, kinds, normalizer });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by_key(|c| c.length());
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainRow {
    pub label: String,
    pub length: usize,
    /// Orders of `Q_0 < ... < Q_m`.
    pub orders: Vec<usize>,
    /// Radical class of each term.
    pub kinds: Vec<usize>,
    pub normalizer_order: usize,
    pub block: String,
    pub dim: Option<usize>,
    pub strategy: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainClassTable {
    pub p: u32,
    pub group_order: u128,
    pub rows: Vec<ChainRow>,
}

impl ChainClassTable {
    pub fn length_distribution(&self) -> Vec<usize> {
        let max = self.rows.iter().map(|r| r.length).max().unwrap_or(0);
        (0..=max).map(|l| self.rows.iter().filter(|r| r.length == l).count()).collect()
    }

    /// Chains grouped by the sequence of radical classes of their terms,
    /// coarser than simultaneous conjugacy: several classes of chains can
    /// share a sequence. Each entry is the sequence and the rows under it.
    pub fn types(&self) -> Vec<(Vec<usize>, Vec<&ChainRow>)> {
        let mut out: Vec<(Vec<usize>, Vec<&ChainRow>)> = Vec::new();
        for r in &self.rows {
            match out.iter_mut().find(|(k, _)| *k == r.kinds) {
                Some((_, v)) => v.push(r),
                None => out.push((r.kinds.clone(), vec![r])),
            }
        }
        out
    }

    pub fn type_length_distribution(&self) -> Vec<usize> {
        let types = self.types();
        let max = types.iter().map(|(k, _)| k.len() - 1).max().unwrap_or(0);
        (0..=max).map(|l| types.iter().filter(|(k, _)| k.len() - 1 == l).count()).collect()
    }

    pub fn tsv(&self) -> String {
        let mut s = String::from("label\tlength\trepresentative\tclasses\tnormalizer_order\tblock\tdim\tstrategy\n");
        for r in &self.rows {
            let rep: Vec<String> = r.orders.iter().map(|o| o.to_string()).collect();
            s.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.label,
                r.length,
                rep.join("<"),
                r.kinds.iter().map(|k| format!("R{k}")).collect::<Vec<_>>().join("<"),
                r.normalizer_order,
                r.block,
                r.dim.map_or("-".into(), |d| d.to_string()),
                r.strategy.as_deref().unwrap_or("-")
            ));
        }
        s
    }
}

/// The chain table for the principal block: `B_sigma` is the principal
/// block of `k N(sigma)`. The empty chain's dimension is left to the caller.
pub fn kr_table(g: &PermGroup, p: u32, block: &BlockRecord, policy: &Policy, seed: u64) -> Result<ChainClassTable> {
    if !block.principal {
        return Err(Error::PreconditionUnmet(
            "chain tables are only available for the principal block (Brauer correspondents of other blocks are not implemented)"
                .into(),
        ));
    }
    let chains = chain_classes(g, p)?;
    let sub = policy.without(Strategy::Kr);
    let rows: Vec<Result<ChainRow>> = crate::par::map_indices(chains.len(), |i| {
        let ch = &chains[i];
        let n = ch.normalizer.order();
        let label = format!("c{i}");
        let pgroup = ch.normalizer.is_p_group(p);
        let block = if pgroup { format!("kN, |N| = {n}") } else { format!("B0(kN), |N| = {n}") };
        let (dim, strategy) = if ch.length() == 0 {
            (None, None)
        } else {
            let ng = ch.normalizer.as_group(g);
            let d = principal_block_dim(&ng, p, &sub, seed).map_err(|e| {
                Error::StrategyUnavailable(format!("chain class {label} ({:?}): {e}", ch.orders()))
            })?;
            (Some(d.dim), Some(d.strategy.tag().to_string()))
        };
        Ok(ChainRow {
            label,
            length: ch.length(),
            orders: ch.orders(),
            kinds: ch.kinds.clone(),
            normalizer_order: n,
            block,
            dim,
            strategy,
        })
    });
    Ok(ChainClassTable { p, group_order: g.order(), rows: rows.into_iter().collect::<Result<_>>()? })
}

/// `sum (-1)^|sigma| dim HH^1(B_sigma)`, with `block_dim` for the empty chain.
pub fn kr_verify(table: &ChainClassTable, block_dim: usize) -> Result<i64> {
    let mut s = 0i64;
    for r in &table.rows {
        let d = if r.length == 0 {
            block_dim
        } else {
            r.dim.ok_or_else(|| Error::IncompleteTable(format!("no dimension for {}", r.label)))?
        };
        s += if r.length % 2 == 0 { d as i64 } else { -(d as i64) };
    }
    Ok(s)
}

fn alternating_sum(table: &ChainClassTable) -> Result<usize> {
    let mut s = 0i64;
    for r in table.rows.iter().filter(|r| r.length > 0) {
        let d = r.dim.ok_or_else(|| Error::IncompleteTable(format!("no dimension for {}", r.label)))? as i64;
        s += if r.length % 2 == 1 { d } else { -d };
    }
    usize::try_from(s).map_err(|_| Error::PreconditionUnmet(format!("alternating sum is negative ({s})")))
}

/// `dim HH^1(B_0) = sum over nonempty chains of (-1)^(|sigma|+1) dim HH^1(B_sigma)`.
pub fn kr_solve_principal(g: &PermGroup, p: u32, policy: &Policy, seed: u64) -> Result<usize> {
    let b = crate::groupalgebra::block_idempotents(g, p, seed)?;
    let t = kr_table(g, p, b.principal(), policy, seed)?;
    alternating_sum(&t)
}

/// The table together with the recovered principal dimension.
pub fn kr_table_full(g: &PermGroup, p: u32, policy: &Policy, seed: u64) -> Result<(ChainClassTable, usize)> {
    let b = crate::groupalgebra::block_idempotents(g, p, seed)?;
    let t = kr_table(g, p, b.principal(), policy, seed)?;
    let d = alternating_sum(&t)?;
    Ok((t, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::lookup;

    #[test]
    fn p_group_has_two_chains() {
        let g = lookup("D8").unwrap().group;
        let r = radical_p_subgroups(&g, 2).unwrap();
        assert_eq!(r.iter().map(|q| q.order()).collect::<Vec<_>>(), vec![1, 8]);
        let c = chain_classes(&g, 2).unwrap();
        assert_eq!(c.len(), 2);
        let (t, d) = kr_table_full(&g, 2, &Policy::default(), 1).unwrap();
        assert_eq!(kr_verify(&t, d).unwrap(), 0);
        assert_eq!(t.rows[1].dim, Some(d));
    }

    #[test]
    fn coprime_prime_has_only_the_root() {
        let g = lookup("C5").unwrap().group;
        assert_eq!(radical_p_subgroups(&g, 2).unwrap().len(), 1);
        assert_eq!(chain_classes(&g, 2).unwrap().len(), 1);
    }

    #[test]
    fn s4_recovers_principal() {
        let g = lookup("S4").unwrap().group;
        let (t, d) = kr_table_full(&g, 2, &Policy::default(), 1).unwrap();
        assert_eq!(d, 6);
        assert_eq!(kr_verify(&t, 6).unwrap(), 0);
    }

    #[test]
    fn nonprincipal_rejected() {
        let g = lookup("S3").unwrap().group;
        let b = crate::groupalgebra::block_idempotents(&g, 2, 1).unwrap();
        assert!(kr_table(&g, 2, &b.blocks[1], &Policy::default(), 1).is_err());
    }
}
