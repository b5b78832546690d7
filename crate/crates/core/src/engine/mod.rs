//! Dimension pipeline, per-block strategies, the group catalog and reports.

pub mod catalog;
pub mod groupfile;
pub mod report;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

pub use catalog::{lookup, Factor, GroupCatalogEntry, SMALL_GROUPS};
pub use groupfile::GroupFile;
pub use report::{group_report, m24_cyclic_rows, BlockDimReport, BlockRow};

use crate::cyclicblocks::{cyclic_block_dim, fixed_lie_algebra, CyclicSetup};
use crate::derivations::hh1_lie_algebra;
use crate::error::{Error, Result};
use crate::groupalgebra::{block_idempotents, AlgebraPresentation, BlockDecomposition, BlockRecord};
use crate::liealg::LieAlgebraFp;
use crate::perm::Perm;
use crate::permgroup::{p_valuation, PermGroup};

pub use crate::permgroup::hom_to_k_dim;

/// `dim HH^1(kG) = sum over classes of dim Hom(C_G(x), k)`.
pub fn dim_hh1_group(g: &PermGroup, p: u32) -> Result<usize> {
    if g.order() % p as u128 != 0 {
        return Ok(0);
    }
    let cents = g.class_centralizers()?;
    let dims = crate::par::map_slice(cents, |c| hom_to_k_dim(&c.as_group(g), p) as usize);
    Ok(dims.iter().sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Strategy {
    Defect0,
    Cyclic,
    Kunneth,
    Solver,
    Subtract,
    Kr,
    SubtractNonprincipal,
}

impl Strategy {
    pub const ALL: [Strategy; 7] = [
        Strategy::Defect0,
        Strategy::Cyclic,
        Strategy::Kunneth,
        Strategy::Solver,
        Strategy::Subtract,
        Strategy::Kr,
        Strategy::SubtractNonprincipal,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Strategy::Defect0 => "defect0",
            Strategy::Cyclic => "cyclic",
            Strategy::Kunneth => "kunneth",
            Strategy::Solver => "solver",
            Strategy::Subtract => "subtract",
            Strategy::Kr => "kr",
            Strategy::SubtractNonprincipal => "subtract-nonprincipal",
        }
    }

    /// Does the strategy only use the block itself?
    fn is_local(self) -> bool {
        matches!(self, Strategy::Defect0 | Strategy::Cyclic | Strategy::Kunneth | Strategy::Solver)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Strategy> {
        Strategy::ALL
            .into_iter()
            .find(|x| x.tag() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown strategy {s:?}")))
    }
}

/// Ordered list of strategies to try.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Policy(pub Vec<Strategy>);

impl Default for Policy {
    fn default() -> Self {
        Policy(Strategy::ALL.to_vec())
    }
}

impl Policy {
    pub fn without(&self, s: Strategy) -> Policy {
        Policy(self.0.iter().copied().filter(|&x| x != s).collect())
    }

    pub fn contains(&self, s: Strategy) -> bool {
        self.0.contains(&s)
    }
}

impl FromStr for Policy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Policy> {
        let v = s.split(',').filter(|x| !x.trim().is_empty()).map(str::parse).collect::<Result<Vec<_>>>()?;
        if v.is_empty() {
            return Err(Error::Parse("empty policy".into()));
        }
        Ok(Policy(v))
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<&str> = self.0.iter().map(|s| s.tag()).collect();
        f.write_str(&tags.join(","))
    }
}

/// `dim HH^1` of one k-block of an F_p-block, and how it was found.
#[derive(Clone, Debug)]
pub struct BlockDim {
    pub dim: usize,
    pub strategy: Strategy,
    /// Present when the strategy built the Lie algebra itself.
    pub lie: Option<LieAlgebraFp>,
}

struct FactorData {
    points: (usize, usize),
    engine: Box<Engine>,
    dims: Vec<Option<usize>>,
}

/// A group, a prime and its blocks, with the machinery to resolve
/// `dim HH^1` block by block.
pub struct Engine {
    pub name: String,
    pub group: PermGroup,
    pub factors: Option<Vec<Factor>>,
    pub p: u32,
    pub policy: Policy,
    pub seed: u64,
    pub blocks: BlockDecomposition,
    total: OnceLock<Result<usize>>,
    kunneth: OnceLock<Result<(FactorData, FactorData)>>,
}

impl Engine {
    pub fn new(entry: &GroupCatalogEntry, p: u32, policy: Policy, seed: u64) -> Result<Engine> {
        Self::for_group(&entry.name, entry.group.clone(), entry.factors.clone(), p, policy, seed)
    }

    pub fn for_group(
        name: &str,
        group: PermGroup,
        factors: Option<Vec<Factor>>,
        p: u32,
        policy: Policy,
        seed: u64,
    ) -> Result<Engine> {
        if !crate::fplinalg::is_prime(p) {
            return Err(Error::UnsupportedPrime(p));
        }
        let blocks = block_idempotents(&group, p, seed)?;
        Ok(Engine {
            name: name.to_string(),
            group,
            factors,
            p,
            policy,
            seed,
            blocks,
            total: OnceLock::new(),
            kunneth: OnceLock::new(),
        })
    }

    pub fn total(&self) -> Result<usize> {
        self.total.get_or_init(|| dim_hh1_group(&self.group, self.p)).clone()
    }

    pub fn block(&self, i: usize) -> &BlockRecord {
        &self.blocks.blocks[i]
    }

    /// Run one strategy on block `i` given what is already known about the
    /// other blocks.
    pub fn attempt(&self, s: Strategy, i: usize, known: &[Option<BlockDim>]) -> Result<BlockDim> {
        let b = self.block(i);
        let unavailable = |why: String| Err(Error::StrategyUnavailable(why));
        let done = |dim: usize, lie: Option<LieAlgebraFp>| Ok(BlockDim { dim, strategy: s, lie });
        match s {
            Strategy::Defect0 => {
                if b.defect_exponent != 0 {
                    return unavailable(format!("defect {}", b.defect_exponent));
                }
                done(0, Some(LieAlgebraFp::abelian(self.blocks.center.field(), 0)))
            }
            Strategy::Cyclic => {
                let t = b.defect_exponent;
                if t == 0 {
                    return unavailable("trivial defect group".into());
                }
                let d = self.group.defect_group(b, self.p)?;
                let q = (self.p as u64).pow(t);
                let cyclic = d.elements().iter().any(|&x| self.group.element(x).order() == q);
                if !cyclic {
                    return unavailable("defect group is not cyclic".into());
                }
                let e = b.simples;
                let dim = cyclic_block_dim(self.p, t, e)?;
                let lie = CyclicSetup::with_order(self.p, t, e).and_then(|s| fixed_lie_algebra(&s)).ok();
                done(dim, lie)
            }
            Strategy::Kunneth => {
                let (fa, fb) = match self.kunneth_factors() {
                    Ok(x) => x,
                    Err(e) => return unavailable(e.to_string()),
                };
                let dim = self.kunneth_dim(fa, fb, b)?;
                done(dim, None)
            }
            Strategy::Solver => {
                let alg = AlgebraPresentation::block_algebra(&self.group, &self.blocks.center, b)?;
                let h = hh1_lie_algebra(&alg)?;
                let r = b.residue_degree;
                if h.dim() % r != 0 {
                    return Err(Error::DimensionMismatch { expected: r, found: h.dim() });
                }
                let lie = (r == 1).then(|| h.lie.clone());
                done(h.dim() / r, lie)
            }
            Strategy::Subtract | Strategy::SubtractNonprincipal => {
                if s == Strategy::Subtract && !b.principal {
                    return unavailable("not the principal block".into());
                }
                if s == Strategy::SubtractNonprincipal {
                    if b.principal {
                        return unavailable("principal block".into());
                    }
                    if known[0].is_none() {
                        return unavailable("principal block dimension unknown".into());
                    }
                }
                let mut rest = 0usize;
                for (j, k) in known.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    match k {
                        Some(k) => rest += k.dim * self.block(j).residue_degree,
                        None => return unavailable(format!("block {j} unresolved")),
                    }
                }
                let total = self.total()?;
                let own = total.checked_sub(rest).ok_or_else(|| {
                    Error::PreconditionUnmet(format!("other blocks sum to {rest} > total {total}"))
                })?;
                if own % b.residue_degree != 0 {
                    return Err(Error::DimensionMismatch { expected: b.residue_degree, found: own });
                }
                done(own / b.residue_degree, None)
            }
            Strategy::Kr => {
                if !b.principal {
                    return unavailable("only the principal block".into());
                }
                let dim = crate::chains::kr_solve_principal(&self.group, self.p, &self.policy, self.seed)?;
                done(dim, None)
            }
        }
    }

    /// Resolve every block: local strategies first, then the subtraction
    /// strategies to a fixed point, then the alternating sum, then again.
    pub fn resolve(&self) -> Vec<Result<BlockDim>> {
        let n = self.blocks.blocks.len();
        let mut known: Vec<Option<BlockDim>> = vec![None; n];
        let mut why: Vec<Vec<String>> = vec![Vec::new(); n];
        let mut hard: Vec<Option<Error>> = vec![None; n];
        let local: Vec<Strategy> = self.policy.0.iter().copied().filter(|s| s.is_local()).collect();
        let results: Vec<(Option<BlockDim>, Vec<String>, Option<Error>)> = crate::par::map_indices(n, |i| {
            let mut reasons = Vec::new();
            let mut err = None;
            for &s in &local {
                match self.attempt(s, i, &[]) {
                    Ok(d) => return (Some(d), reasons, None),
                    Err(e @ (Error::StrategyUnavailable(_) | Error::CapExceeded { .. })) => {
                        reasons.push(format!("{s}: {e}"))
                    }
                    Err(e) => {
                        reasons.push(format!("{s}: {e}"));
                        err.get_or_insert(e);
                    }
                }
            }
            (None, reasons, err)
        });
        for (i, (k, r, e)) in results.into_iter().enumerate() {
            known[i] = k;
            why[i] = r;
            hard[i] = e;
        }
        let sweep = |allow_kr: bool, known: &mut Vec<Option<BlockDim>>, why: &mut Vec<Vec<String>>| loop {
            let mut progress = false;
            for i in 0..n {
                if known[i].is_some() {
                    continue;
                }
                for &s in &self.policy.0 {
                    if s.is_local() || (s == Strategy::Kr && !allow_kr) {
                        continue;
                    }
                    match self.attempt(s, i, known) {
                        Ok(d) => {
                            known[i] = Some(d);
                            progress = true;
                            break;
                        }
                        Err(e) => {
                            if allow_kr || s != Strategy::Kr {
                                why[i].push(format!("{s}: {e}"));
                            }
                        }
                    }
                }
            }
            if !progress {
                break;
            }
        };
        sweep(false, &mut known, &mut why);
        if known.iter().any(Option::is_none) {
            sweep(true, &mut known, &mut why);
        }
        known
            .into_iter()
            .enumerate()
            .map(|(i, k)| match k {
                Some(d) => Ok(d),
                None => match hard[i].take() {
                    Some(e) => Err(e),
                    None => Err(Error::StrategyUnavailable(format!("block {i}: {}", dedup(&why[i]).join("; ")))),
                },
            })
            .collect()
    }

    /// Every strategy that applies to block `i` on its own, with the
    /// subtraction strategies fed by the default resolution of the others.
    pub fn all_strategies(&self, i: usize) -> Vec<(Strategy, Result<BlockDim>)> {
        let known: Vec<Option<BlockDim>> = self.resolve().into_iter().map(|r| r.ok()).collect();
        Strategy::ALL
            .into_iter()
            .filter(|&s| s != Strategy::Kr || self.block(i).principal)
            .map(|s| {
                let mut k = known.clone();
                k[i] = None;
                (s, self.attempt(s, i, &k))
            })
            .collect()
    }

    fn kunneth_factors(&self) -> std::result::Result<(&FactorData, &FactorData), Error> {
        let r = self.kunneth.get_or_init(|| {
            let fs = self.factors.as_ref().filter(|f| f.len() >= 2).ok_or_else(|| {
                Error::StrategyUnavailable("no direct-product metadata".into())
            })?;
            let total = self.group.degree();
            let a = &fs[0];
            let rest = &fs[1..];
            let (bname, bgroup, bfactors) = if rest.len() == 1 {
                (rest[0].name.clone(), rest[0].group.clone(), None)
            } else {
                let named: Vec<(String, PermGroup)> = rest.iter().map(|f| (f.name.clone(), f.group.clone())).collect();
                let (g, f) = catalog::direct_product(&named);
                let name = rest.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join("x");
                (name, g, Some(f))
            };
            let make = |name: &str, g: PermGroup, f: Option<Vec<Factor>>, points| -> Result<FactorData> {
                let engine = Engine::for_group(name, g.with_cap(self.group.cap()), f, self.p, self.policy.clone(), self.seed)?;
                let dims = engine.resolve().into_iter().map(|r| r.ok().map(|d| d.dim)).collect();
                Ok(FactorData { points, engine: Box::new(engine), dims })
            };
            let fa = make(&a.name, a.group.clone(), None, (a.offset, a.group.degree()))?;
            let off = rest[0].offset;
            let fb = make(&bname, bgroup, bfactors, (off, total - off))?;
            Ok((fa, fb))
        });
        match r {
            Ok((a, b)) => Ok((a, b)),
            Err(e) => Err(e.clone()),
        }
    }

    fn kunneth_dim(&self, fa: &FactorData, fb: &FactorData, b: &BlockRecord) -> Result<usize> {
        let g = &self.group;
        let z = &self.blocks.center;
        let f = z.field();
        let reps = g.class_reps()?;
        let restrict = |x: &Perm, (off, deg): (usize, usize), h: &PermGroup| -> Result<usize> {
            let im: Vec<u8> = (0..deg).map(|i| (x.apply(off + i) - off) as u8).collect();
            h.class_of(&Perm::from_images(im)?)
        };
        let ca: Vec<usize> = reps.iter().map(|x| restrict(x, fa.points, &fa.engine.group)).collect::<Result<_>>()?;
        let cb: Vec<usize> = reps.iter().map(|x| restrict(x, fb.points, &fb.engine.group)).collect::<Result<_>>()?;
        for (i, ea) in fa.engine.blocks.blocks.iter().enumerate() {
            for (j, eb) in fb.engine.blocks.blocks.iter().enumerate() {
                let mut prod = crate::fplinalg::FpVec::zero(f, z.dim());
                for c in 0..z.dim() {
                    prod.set(c, f.mul(ea.idempotent.get(ca[c]), eb.idempotent.get(cb[c])));
                }
                if z.mul(&prod, &b.idempotent) != b.idempotent {
                    continue;
                }
                let (ha, hb) = match (fa.dims[i], fb.dims[j]) {
                    (Some(x), Some(y)) => (x, y),
                    _ => {
                        return Err(Error::StrategyUnavailable(format!(
                            "factor blocks {}:{i} / {}:{j} unresolved",
                            fa.engine.name, fb.engine.name
                        )))
                    }
                };
                return Ok(ha * eb.center_dim + ea.center_dim * hb);
            }
        }
        Err(Error::PreconditionUnmet("block is not under a product of factor blocks".into()))
    }

    pub fn p_part(&self) -> u32 {
        p_valuation(self.group.order(), self.p)
    }
}

fn dedup(v: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for s in v {
        if !out.contains(s) {
            out.push(s.clone());
        }
    }
    out
}

/// `dim HH^1` of one k-block of block `index`.
pub fn dim_hh1_block(entry: &GroupCatalogEntry, p: u32, index: usize, policy: &Policy, seed: u64) -> Result<BlockDim> {
    let eng = Engine::new(entry, p, policy.clone(), seed)?;
    if index >= eng.blocks.blocks.len() {
        return Err(Error::PreconditionUnmet(format!("only {} blocks", eng.blocks.blocks.len())));
    }
    eng.resolve().swap_remove(index)
}

/// Dimension of the principal block of `kG` under `policy`.
pub fn principal_block_dim(g: &PermGroup, p: u32, policy: &Policy, seed: u64) -> Result<BlockDim> {
    let eng = Engine::for_group("", g.clone(), None, p, policy.clone(), seed)?;
    eng.resolve().swap_remove(0)
}
