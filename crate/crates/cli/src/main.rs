use std::path::PathBuf;
use std::process::ExitCode;

use blockhh::chains::{kr_table_full, kr_verify, ChainClassTable};
use blockhh::cyclicblocks::{fixed_basis, fixed_lie_algebra, p_toral_witness, similarity_classes, CyclicSetup};
use blockhh::derivations::equivariant_fixed_hh1;
use blockhh::engine::report::{bracket_summary, engine_report};
use blockhh::engine::{
    dim_hh1_group, lookup, m24_cyclic_rows, BlockDimReport, BlockRow, Engine, GroupCatalogEntry, GroupFile, Policy,
    Strategy, SMALL_GROUPS,
};
use blockhh::fplinalg::FpVec;
use blockhh::groupalgebra::{check_idempotents, DEFAULT_SEED};
use blockhh::liealg::LieAlgebraFp;
use blockhh::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "blockhh", version, about = "First Hochschild cohomology of group algebras and their blocks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Enumeration cap on group orders (overrides BLOCKHH_CAP).
    #[arg(long, global = true)]
    cap: Option<u128>,
    /// Comma-separated strategy order, e.g. defect0,cyclic,solver.
    #[arg(long, global = true)]
    policy: Option<Policy>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args, Clone)]
struct GroupArg {
    /// Catalog name such as A5, M12, C3^2:Q8 or C2xS5.
    #[arg(long, conflicts_with = "file")]
    group: Option<String>,
    /// Group definition file (JSON with name, degree, generators).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct GroupPrime {
    #[command(flatten)]
    g: GroupArg,
    #[arg(long)]
    prime: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, classes and Sylow data.
    GroupInfo(GroupArg),
    /// Total dim HH^1(kG) by the centraliser decomposition.
    Hh1(GroupPrime),
    /// Block decomposition of F_p G.
    Blocks(GroupPrime),
    /// dim HH^1 of one block, with every applicable strategy.
    BlockHh1 {
        #[command(flatten)]
        gp: GroupPrime,
        #[arg(long)]
        block: usize,
    },
    /// Fixed-point derivations of kC_q under an automorphism of order e.
    CyclicBasis(CyclicArgs),
    /// HH^1(kC_q)^E from the derivation solver and relative traces.
    Equivariant(CyclicArgs),
    /// Chain table for the principal block.
    KrTable(GroupPrime),
    /// Alternating-sum residual for the principal block.
    KrVerify {
        #[command(flatten)]
        gp: GroupPrime,
        /// Principal block dim to test; computed without the chain strategy if absent.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Block tables; with no group, the Mathieu tables.
    Report {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        prime: Option<u32>,
    },
    /// Quick consistency checks on small groups.
    Selftest,
}

#[derive(Args)]
struct CyclicArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: usize,
    #[arg(long, default_value_t = 1)]
    t: u32,
}

enum Failure {
    Usage(String),
    Consistency(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Out = Result<(), Failure>;

struct Ctx {
    policy: Policy,
    seed: u64,
    format: Format,
}

fn entry(g: &GroupArg) -> Result<GroupCatalogEntry, Failure> {
    match (&g.group, &g.file) {
        (Some(name), None) => Ok(lookup(name)?),
        (None, Some(path)) => {
            let f = GroupFile::read(path)?;
            let group = f.to_group()?;
            Ok(GroupCatalogEntry { name: f.name, declared_order: group.order(), group, factors: None })
        }
        _ => Err(Failure::Usage("give exactly one of --group or --file".into())),
    }
}

fn poly(v: &FpVec) -> String {
    let mut terms = Vec::new();
    for k in (0..v.len()).rev() {
        let c = v.get(k);
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        terms.push(match (c, k) {
            (1, 0) => "1".into(),
            (1, _) => mono,
            (_, 0) => c.to_string(),
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `[e_i,e_j] = ...` for `i < j` with a nonzero bracket.
fn bracket_lines(l: &LieAlgebraFp, names: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let b = l.basis_bracket(i, j);
            let rhs: Vec<String> = b
                .support()
                .into_iter()
                .map(|k| match b.get(k) {
                    1 => names[k].clone(),
                    c => format!("{c}{}", names[k]),
                })
                .collect();
            if !rhs.is_empty() {
                out.push(format!("[{},{}] = {}", names[i], names[j], rhs.join(" + ")));
            }
        }
    }
    out
}

fn print_report(ctx: &Ctx, r: &BlockDimReport) {
    match ctx.format {
        Format::Tsv => {
            print!("{}", r.tsv());
            println!(
                "# total {}  k-block dims {}  consistent {}",
                r.total.map_or("-".into(), |t| t.to_string()),
                bracket_summary(&r.k_dims()),
                r.consistent.map_or("-".into(), |c| c.to_string())
            );
        }
        Format::Json => println!("{}", r.json()),
    }
}

fn check_consistent(r: &BlockDimReport) -> Out {
    match r.consistent {
        Some(false) => Err(Failure::Consistency(format!("{} p={}: block dims do not add up to the total", r.group, r.prime))),
        _ => Ok(()),
    }
}

fn group_info(ctx: &Ctx, g: &GroupArg) -> Out {
    let e = entry(g)?;
    let grp = &e.group;
    let classes = grp.classes()?;
    let mut sylow = Vec::new();
    let mut n = grp.order();
    let mut p = 2u32;
    while n > 1 {
        if n % p as u128 == 0 {
            while n % p as u128 == 0 {
                n /= p as u128;
            }
            let s = grp.sylow(p)?;
            let n_s = grp.normalizer(&s)?.order();
            sylow.push((p, s.order(), s.as_group(grp).is_abelian(), grp.order() as usize / n_s));
        }
        p += 1;
    }
    match ctx.format {
        Format::Tsv => {
            println!("name\t{}", e.name);
            println!("degree\t{}", grp.degree());
            println!("order\t{}", grp.order());
            println!("abelian\t{}", grp.is_abelian());
            println!("classes\t{}", classes.count());
            println!("class_sizes\t{:?}", classes.sizes());
            if let Some(fs) = &e.factors {
                let names: Vec<&str> = fs.iter().map(|f| f.name.as_str()).collect();
                println!("factors\t{}", names.join(" x "));
            }
            for (p, o, ab, count) in sylow {
                println!("sylow_{p}\torder {o}, abelian {ab}, {count} conjugates");
            }
        }
        Format::Json => {
            let s: Vec<_> = sylow
                .iter()
                .map(|&(p, o, ab, c)| json!({"prime": p, "order": o, "abelian": ab, "conjugates": c}))
                .collect();
            let v = json!({
                "name": e.name,
                "degree": grp.degree(),
                "order": grp.order().to_string(),
                "abelian": grp.is_abelian(),
                "classes": classes.count(),
                "class_sizes": classes.sizes(),
                "factors": e.factors.as_ref().map(|fs| fs.iter().map(|f| f.name.clone()).collect::<Vec<_>>()),
                "sylow": s,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    Ok(())
}

fn hh1(ctx: &Ctx, gp: &GroupPrime) -> Out {
    let e = entry(&gp.g)?;
    let d = dim_hh1_group(&e.group, gp.prime)?;
    match ctx.format {
        Format::Tsv => println!("{}\t{}\t{d}", e.name, gp.prime),
        Format::Json => println!("{}", json!({"group": e.name, "prime": gp.prime, "hh1_dim": d})),
    }
    Ok(())
}

fn engine(ctx: &Ctx, gp: &GroupPrime) -> Result<Engine, Failure> {
    let e = entry(&gp.g)?;
    Ok(Engine::new(&e, gp.prime, ctx.policy.clone(), ctx.seed)?)
}

fn blocks(ctx: &Ctx, gp: &GroupPrime) -> Out {
    let eng = engine(ctx, gp)?;
    let ok = check_idempotents(&eng.blocks.center, &eng.blocks.blocks);
    match ctx.format {
        Format::Tsv => {
            println!("index\tfp_dim\tresidue_degree\tk_dim\tdefect\tprincipal\tsimples\tcenter_dim");
            for b in &eng.blocks.blocks {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    b.index,
                    b.fp_dimension,
                    b.residue_degree,
                    b.k_dimension(),
                    b.defect_exponent,
                    b.principal,
                    b.simples,
                    b.center_dim
                );
            }
            let k: u32 = eng.blocks.blocks.iter().map(|b| b.residue_degree as u32).sum();
            println!("# {} F_p-blocks, {k} k-blocks, idempotents verified {ok}", eng.blocks.blocks.len());
        }
        Format::Json => {
            let v = json!({"group": eng.name, "prime": eng.p, "blocks": eng.blocks.blocks, "idempotents_verified": ok});
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Consistency("idempotent checks failed".into()))
    }
}

fn block_hh1(ctx: &Ctx, gp: &GroupPrime, i: usize) -> Out {
    let eng = engine(ctx, gp)?;
    if i >= eng.blocks.blocks.len() {
        return Err(Failure::Usage(format!("block index {i} out of range; there are {}", eng.blocks.blocks.len())));
    }
    let chosen = eng.resolve().swap_remove(i);
    let all: Vec<(Strategy, Result<usize, String>)> = eng
        .all_strategies(i)
        .into_iter()
        .filter(|(s, _)| ctx.policy.contains(*s))
        .map(|(s, r)| (s, r.map(|d| d.dim).map_err(|e| e.to_string())))
        .collect();
    let dims: Vec<usize> = all.iter().filter_map(|(_, r)| r.as_ref().ok().copied()).collect();
    let agree = dims.windows(2).all(|w| w[0] == w[1]);
    match ctx.format {
        Format::Tsv => {
            match &chosen {
                Ok(d) => {
                    println!("dim\t{}\nstrategy\t{}", d.dim, d.strategy);
                    if let Some(l) = &d.lie {
                        println!("lie\t{}", l.verdict());
                        let names: Vec<String> = (0..l.dim()).map(|k| format!("D{k}")).collect();
                        for line in bracket_lines(l, &names) {
                            println!("bracket\t{line}");
                        }
                    }
                }
                Err(e) => println!("dim\t-\nerror\t{e}"),
            }
            for (s, r) in &all {
                match r {
                    Ok(d) => println!("{s}\t{d}"),
                    Err(e) => println!("{s}\t- ({e})"),
                }
            }
        }
        Format::Json => {
            let tried: Vec<_> = all
                .iter()
                .map(|(s, r)| match r {
                    Ok(d) => json!({"strategy": s.tag(), "dim": d}),
                    Err(e) => json!({"strategy": s.tag(), "error": e}),
                })
                .collect();
            let v = json!({
                "group": eng.name,
                "prime": eng.p,
                "block": i,
                "dim": chosen.as_ref().ok().map(|d| d.dim),
                "strategy": chosen.as_ref().ok().map(|d| d.strategy.tag()),
                "lie_verdict": chosen.as_ref().ok().and_then(|d| d.lie.as_ref()).map(|l| l.verdict()),
                "strategies": tried,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    if !agree {
        return Err(Failure::Consistency(format!("strategies disagree: {dims:?}")));
    }
    chosen.map(|_| ()).map_err(Failure::Lib)
}

fn cyclic_basis(ctx: &Ctx, a: &CyclicArgs) -> Out {
    let s = CyclicSetup::with_order(a.p, a.t, a.e)?;
    let basis = fixed_basis(&s);
    let classes = similarity_classes(&s);
    let l = fixed_lie_algebra(&s)?;
    l.validate()?;
    let names: Vec<String> = basis.iter().map(|d| format!("D{}", d.m)).collect();
    let brackets = bracket_lines(&l, &names);
    // only defined when the action is the full automorphism group
    let toral = match p_toral_witness(&s) {
        Ok(w) => Some(w.toral_basis_verified()),
        Err(Error::PreconditionUnmet(_)) => None,
        Err(e) => return Err(e.into()),
    };
    match ctx.format {
        Format::Tsv => {
            println!("# kC_{} with x -> x^{} of order {}; {} classes, {} derivations", s.q, s.s, s.e, classes.len(), basis.len());
            for (d, n) in basis.iter().zip(&names) {
                println!("{n}\tx -> {}", poly(&d.image));
            }
            for b in &brackets {
                println!("bracket\t{b}");
            }
            println!("lie\t{}", l.verdict());
            if let Some(t) = toral {
                println!("p-toral witness\t{t}");
            }
        }
        Format::Json => {
            let ds: Vec<_> = basis.iter().zip(&names).map(|(d, n)| json!({"name": n, "image": poly(&d.image)})).collect();
            let v = json!({
                "q": s.q, "s": s.s, "e": s.e, "classes": classes.len(),
                "basis": ds, "brackets": brackets, "lie_verdict": l.verdict(),
                "p_toral": toral,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    Ok(())
}

fn equivariant(ctx: &Ctx, a: &CyclicArgs) -> Out {
    let s = CyclicSetup::with_order(a.p, a.t, a.e)?;
    let eq = equivariant_fixed_hh1(&s.algebra(), &[s.action()])?;
    let formula = fixed_basis(&s).len();
    let alg = s.algebra();
    let reps: Vec<String> = eq.fixed.reps.iter().map(|d| d.format_images(&alg).join(", ")).collect();
    match ctx.format {
        Format::Tsv => {
            println!("hh1_dim\t{}", eq.full.dim());
            println!("fixed_dim\t{}", eq.fixed.dim());
            println!("acting_order\t{}", eq.group_order);
            println!("trace_rank\t{}", eq.trace_rank);
            println!("traces_span\t{}", eq.traces_span);
            println!("trace_basis_dim\t{formula}");
            println!("lie\t{}", eq.fixed.lie.verdict());
            for (k, r) in reps.iter().enumerate() {
                println!("rep{k}\t{r}");
            }
        }
        Format::Json => {
            let v = json!({
                "hh1_dim": eq.full.dim(), "fixed_dim": eq.fixed.dim(), "acting_order": eq.group_order,
                "trace_rank": eq.trace_rank, "traces_span": eq.traces_span, "trace_basis_dim": formula,
                "lie_verdict": eq.fixed.lie.verdict(), "reps": reps,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    if eq.fixed.dim() != formula {
        return Err(Failure::Consistency(format!("solver gives {} fixed classes, trace basis {formula}", eq.fixed.dim())));
    }
    Ok(())
}

fn print_table(ctx: &Ctx, t: &ChainClassTable, extra: serde_json::Value) {
    match ctx.format {
        Format::Tsv => {
            print!("{}", t.tsv());
            for (k, v) in extra.as_object().unwrap() {
                println!("# {k} {v}");
            }
        }
        Format::Json => {
            let mut v = serde_json::to_value(t).unwrap();
            v.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
}

fn kr_table(ctx: &Ctx, gp: &GroupPrime) -> Out {
    let e = entry(&gp.g)?;
    let (t, dim) = kr_table_full(&e.group, gp.prime, &ctx.policy, ctx.seed)?;
    print_table(ctx, &t, json!({"classes": t.rows.len(), "principal_dim": dim}));
    Ok(())
}

fn kr_verify_cmd(ctx: &Ctx, gp: &GroupPrime, dim: Option<usize>) -> Out {
    let e = entry(&gp.g)?;
    let dim = match dim {
        Some(d) => d,
        None => Engine::new(&e, gp.prime, ctx.policy.without(Strategy::Kr), ctx.seed)?.resolve().swap_remove(0)?.dim,
    };
    let (t, _) = kr_table_full(&e.group, gp.prime, &ctx.policy, ctx.seed)?;
    let r = kr_verify(&t, dim)?;
    match ctx.format {
        Format::Tsv => println!("{}\t{}\tprincipal {dim}\tresidual {r}", e.name, gp.prime),
        Format::Json => println!("{}", json!({"group": e.name, "prime": gp.prime, "principal_dim": dim, "residual": r})),
    }
    if r == 0 {
        Ok(())
    } else {
        Err(Failure::Consistency(format!("nonzero residual {r}")))
    }
}

fn report_one(ctx: &Ctx, e: &GroupCatalogEntry, p: u32, with_kr: bool) -> Result<serde_json::Value, Failure> {
    let eng = Engine::new(e, p, ctx.policy.clone(), ctx.seed)?;
    let r = engine_report(&eng);
    let mut kr = None;
    if with_kr {
        let dim = r.rows.first().and_then(|row| row.hh1_dim);
        if let Some(d) = dim {
            let (t, _) = kr_table_full(&e.group, p, &ctx.policy.without(Strategy::Kr), ctx.seed)?;
            kr = Some((t.rows.len(), kr_verify(&t, d)?));
        }
    }
    if ctx.format == Format::Tsv {
        print_report(ctx, &r);
        if let Some((n, res)) = kr {
            println!("# chain classes {n}  KR residual {res}");
        }
    }
    check_consistent(&r)?;
    if let Some((_, res)) = kr {
        if res != 0 {
            return Err(Failure::Consistency(format!("{} p={p}: KR residual {res}", e.name)));
        }
    }
    let mut v = serde_json::to_value(&r).unwrap();
    v["summary"] = json!(bracket_summary(&r.k_dims()));
    if let Some((n, res)) = kr {
        v["kr"] = json!({"chain_classes": n, "residual": res});
    }
    Ok(v)
}

fn prime_divisors(n: u128) -> Vec<u32> {
    (2u32..=23).filter(|&p| (2..p).all(|d| p % d != 0) && n % p as u128 == 0).collect()
}

fn m24_rows(ctx: &Ctx, rows: &[BlockRow]) {
    if ctx.format == Format::Tsv {
        println!("{}", blockhh::engine::report::TSV_HEADER);
        for r in rows {
            println!("{}\t# {}", r.tsv(), r.note.as_deref().unwrap_or(""));
        }
    }
}

fn report(ctx: &Ctx, g: &GroupArg, prime: Option<u32>) -> Out {
    let mut out = Vec::new();
    if g.group.is_none() && g.file.is_none() {
        if prime.is_some() {
            return Err(Failure::Usage("--prime needs --group or --file".into()));
        }
        for name in ["M11", "M12", "M22"] {
            let e = lookup(name)?;
            for p in prime_divisors(e.group.order()) {
                out.push(report_one(ctx, &e, p, name == "M12" && p == 2)?);
            }
        }
        let rows = m24_cyclic_rows()?;
        m24_rows(ctx, &rows);
        out.push(json!({"group": "M24", "rows": rows}));
    } else {
        let e = entry(g)?;
        let primes = match prime {
            Some(p) => vec![p],
            None => prime_divisors(e.group.order()),
        };
        for p in primes {
            out.push(report_one(ctx, &e, p, true)?);
        }
    }
    if ctx.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    }
    Ok(())
}

fn selftest(ctx: &Ctx) -> Out {
    let mut failures = Vec::new();
    let mut n = 0;
    for name in SMALL_GROUPS {
        let e = lookup(name)?;
        for p in prime_divisors(e.group.order()) {
            n += 1;
            let eng = Engine::new(&e, p, ctx.policy.clone(), ctx.seed)?;
            let r = engine_report(&eng);
            if !check_idempotents(&eng.blocks.center, &eng.blocks.blocks) {
                failures.push(format!("{name} p={p}: idempotents"));
            }
            if r.consistent != Some(true) {
                failures.push(format!("{name} p={p}: block dims {:?} vs total {:?}", r.k_dims(), r.total));
            }
            if e.group.order() <= 24 {
                let (t, dim) = kr_table_full(&e.group, p, &ctx.policy.without(Strategy::Kr), ctx.seed)?;
                if Some(dim) != r.rows[0].hh1_dim || kr_verify(&t, dim)? != 0 {
                    failures.push(format!("{name} p={p}: chain sum"));
                }
            }
        }
    }
    for (p, e) in [(11u32, 5usize), (7, 3), (5, 4), (23, 11)] {
        n += 1;
        let s = CyclicSetup::with_order(p, 1, e)?;
        let eq = equivariant_fixed_hh1(&s.algebra(), &[s.action()])?;
        if eq.fixed.dim() != fixed_basis(&s).len() || eq.fixed.dim() != (p as usize - 1) / e {
            failures.push(format!("cyclic p={p} e={e}"));
        }
    }
    match ctx.format {
        Format::Tsv => {
            for f in &failures {
                println!("FAIL\t{f}");
            }
            println!("# {n} checks, {} failures", failures.len());
        }
        Format::Json => println!("{}", json!({"checks": n, "failures": failures})),
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Consistency(format!("{} selftest failures", failures.len())))
    }
}

fn run(cli: Cli) -> Out {
    let ctx = Ctx { policy: cli.policy.unwrap_or_default(), seed: cli.seed, format: cli.format };
    match &cli.cmd {
        Cmd::GroupInfo(g) => group_info(&ctx, g),
        Cmd::Hh1(gp) => hh1(&ctx, gp),
        Cmd::Blocks(gp) => blocks(&ctx, gp),
        Cmd::BlockHh1 { gp, block } => block_hh1(&ctx, gp, *block),
        Cmd::CyclicBasis(a) => cyclic_basis(&ctx, a),
        Cmd::Equivariant(a) => equivariant(&ctx, a),
        Cmd::KrTable(gp) => kr_table(&ctx, gp),
        Cmd::KrVerify { gp, dim } => kr_verify_cmd(&ctx, gp, *dim),
        Cmd::Report { g, prime } => report(&ctx, g, *prime),
        Cmd::Selftest => selftest(&ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.cap {
        // read by every group constructed afterwards
        std::env::set_var("BLOCKHH_CAP", cap.to_string());
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Consistency(m)) => {
            eprintln!("blockhh: consistency failure: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("blockhh: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("blockhh: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                Error::Parse(_) | Error::Io(_) | Error::UnsupportedPrime(_) | Error::InvalidPermutation(_) => 2,
                _ => 1,
            })
        }
    }
}
