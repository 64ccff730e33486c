//! Command-line front end: every construction and verification as a
//! subcommand producing a deterministic report.
//!
//! Exit status is 0 when every check passes, 1 when one fails (the first
//! witness is printed) and 2 on usage or input errors.

use std::fmt::{self, Display, Write as _};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aut::{self, AutLevel};
use crate::concat::hamming_distance;
use crate::cyclic::{self, is_shift_invariant};
use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx};
use crate::gfc;
use crate::graphs::{self, CosetGraph, CrVerdict, Graph, IntersectionArray};
use crate::kasami::{expected_mds_weights, expected_weights, KasamiConfig};
use crate::linear::{macwilliams, macwilliams_exact, LinearCode, WeightDistribution};
use crate::union::{self, BuildMode, CosetFamily};
use num_bigint::BigUint;
use num_traits::Zero;

pub const DEFAULT_SEED: u64 = 0x4B41534D;

/// Codes up to this many words are enumerated for cross-checks.
const ENUMERATION_LIMIT: u128 = 1 << 16;

fn parse_u64(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

fn parse_hex(s: &str) -> std::result::Result<u32, String> {
    u32::from_str_radix(s.strip_prefix("0x").unwrap_or(s), 16).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "kasami",
    version,
    about = "Kasami codes via MDS-simplex concatenation"
)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value = "0x4B41534D", value_parser = parse_u64)]
    pub seed: u64,
    /// Worker threads (default: available cores).
    #[arg(long, global = true, env = "KASAMI_THREADS")]
    pub threads: Option<usize>,
    /// Include wall time per check (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Direct,
    AdditiveTower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    Kasami,
    Mds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Monomial,
    Semilinear,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build F_{2^e} and list its subfields.
    Field {
        #[arg(long)]
        e: u32,
        /// Modulus as a hex bitmask (default: built-in primitive polynomial).
        #[arg(long, value_parser = parse_hex)]
        modulus: Option<u32>,
    },
    /// The [q+1, 3, q-1]_q MDS code M_q^⊥.
    Mds {
        #[arg(long)]
        q: u64,
        /// Output M_q instead.
        #[arg(long)]
        dual: bool,
        /// Write the generator matrix as GFC.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The concatenated code K_q^p⊥.
    Kasami {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        /// Reorder coordinates so that the code is cyclic.
        #[arg(long)]
        cyclic_order: bool,
        /// Output K_q^p instead.
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight distribution of a GFC code.
    Weights {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Coset graph whose check matrix is the GFC matrix.
    CosetGraph {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the edge list, one `u v` per line.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Complete regularity of a GFC code.
    VerifyCr {
        #[arg(long = "in")]
        input: PathBuf,
        /// The file holds a check matrix: test its dual.
        #[arg(long)]
        check: bool,
    },
    /// Weights, cyclicity, coset graphs and intersection arrays for (q, p).
    VerifyPaper {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
    },
    /// B_k as a union of k distance-3 cosets.
    Union {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "direct")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "kasami")]
        base: Base,
        /// Write B_k, one packed vector per line.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// GΓL(2, q) action on M_q and its lift.
    Aut {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        level: Level,
        /// Inner field size for the lift (default 2).
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: Verdict,
    pub expected: String,
    pub observed: String,
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl ConfigEcho {
    fn of(cfg: &KasamiConfig) -> ConfigEcho {
        ConfigEcho {
            p: Some(cfg.p()),
            q: Some(cfg.q()),
            m: Some(cfg.m()),
            e: Some(cfg.ctx().degree()),
            modulus: Some(format!("{:#x}", cfg.ctx().modulus())),
        }
    }

    fn of_field(ctx: &FieldCtx) -> ConfigEcho {
        ConfigEcho {
            e: Some(ctx.degree()),
            modulus: Some(format!("{:#x}", ctx.modulus())),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.verdict == Verdict::Fail)
    }
}

impl Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        let c = &self.config;
        let mut parts = Vec::new();
        for (k, v) in [
            ("p", c.p.map(|x| x.to_string())),
            ("q", c.q.map(|x| x.to_string())),
            ("m", c.m.map(|x| x.to_string())),
            ("e", c.e.map(|x| x.to_string())),
            ("modulus", c.modulus.clone()),
        ] {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        }
        if !parts.is_empty() {
            writeln!(f, "config: {}", parts.join(" "))?;
        }
        for n in &self.notes {
            writeln!(f, "{n}")?;
        }
        for ch in &self.checks {
            write!(
                f,
                "[{}] {}: expected {}, observed {}",
                ch.verdict, ch.check, ch.expected, ch.observed
            )?;
            if let Some(ms) = ch.millis {
                write!(f, " ({ms} ms)")?;
            }
            writeln!(f)?;
        }
        let total = self.checks.len();
        let failed = self
            .checks
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .count();
        if let Some(first) = self.first_failure() {
            writeln!(
                f,
                "first witness ({}): {}",
                first.check,
                first.witness.as_deref().unwrap_or(&first.observed)
            )?;
        }
        write!(
            f,
            "result: {} ({} checks, {} failed)",
            if failed == 0 { "pass" } else { "fail" },
            total,
            failed
        )
    }
}

/// Rendered output and process exit status.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Option<RunReport>,
    pub output: String,
    pub code: i32,
}

struct Recorder {
    timings: bool,
    checks: Vec<CheckResult>,
    notes: Vec<String>,
}

impl Recorder {
    fn record(
        &mut self,
        check: &str,
        expected: impl Display,
        observed: impl Display,
        pass: bool,
        t0: Instant,
    ) {
        self.push(
            check,
            expected,
            observed,
            if pass { Verdict::Pass } else { Verdict::Fail },
            None,
            t0,
        );
    }

    fn push(
        &mut self,
        check: &str,
        expected: impl Display,
        observed: impl Display,
        verdict: Verdict,
        witness: Option<String>,
        t0: Instant,
    ) {
        self.checks.push(CheckResult {
            check: check.to_string(),
            verdict,
            expected: expected.to_string(),
            observed: observed.to_string(),
            millis: self.timings.then(|| t0.elapsed().as_millis() as u64),
            witness,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn cr(
        &mut self,
        check: &str,
        expected: Option<&IntersectionArray>,
        verdict: Result<CrVerdict>,
        t0: Instant,
    ) -> Result<Option<IntersectionArray>> {
        let exp = expected.map_or("completely regular".to_string(), |a| a.to_string());
        match verdict {
            Ok(CrVerdict::Regular { array, .. }) => {
                let pass = expected.is_none_or(|e| *e == array);
                self.record(check, exp, &array, pass, t0);
                Ok(Some(array))
            }
            Ok(CrVerdict::NotEquitable(w)) => {
                self.push(
                    check,
                    exp,
                    "not equitable",
                    Verdict::Fail,
                    Some(w.to_string()),
                    t0,
                );
                Ok(None)
            }
            Err(Error::TooLarge(n)) => {
                self.push(
                    check,
                    exp,
                    format!("skipped, {n} vertices"),
                    Verdict::Skip,
                    None,
                    t0,
                );
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

fn params(c: &LinearCode, d: Option<usize>) -> String {
    match d {
        Some(d) => format!("[{}, {}, {}]_{}", c.n(), c.k(), d, c.alphabet()),
        None => format!("[{}, {}]_{}", c.n(), c.k(), c.alphabet()),
    }
}

fn read_code(path: &Path) -> Result<LinearCode> {
    gfc::parse(&fs::read_to_string(path)?)
}

fn write_code(path: &Path, code: &LinearCode) -> Result<()> {
    Ok(fs::write(path, gfc::write(code))?)
}

/// Dual distribution through MacWilliams, checked against enumeration when
/// the dual is small.
fn macwilliams_check(
    rec: &mut Recorder,
    name: &str,
    code: &LinearCode,
    w: &WeightDistribution,
) -> Result<()> {
    let t0 = Instant::now();
    let q = code.alphabet() as u64;
    let dual_w = match macwilliams_exact(w, code.n(), code.k(), q) {
        Ok(d) => d,
        Err(e) => {
            rec.push(
                name,
                "integral dual distribution",
                e,
                Verdict::Fail,
                None,
                t0,
            );
            return Ok(());
        }
    };
    let dual = code.dual();
    if dual.size() <= ENUMERATION_LIMIT {
        let direct = dual.weight_distribution()?;
        let transformed = macwilliams(w, code.n(), code.k(), q)?;
        rec.record(name, &direct, &transformed, direct == transformed, t0);
    } else {
        let total: BigUint = dual_w.iter().sum();
        let expect = BigUint::from(q).pow((code.n() - code.k()) as u32);
        let d = dual_w
            .iter()
            .skip(1)
            .position(|c| !c.is_zero())
            .map_or(0, |i| i + 1);
        rec.record(
            name,
            format!("integral, total {expect}"),
            format!("integral, total {total}, minimum distance {d}"),
            total == expect,
            t0,
        );
    }
    Ok(())
}

fn dual_distance(code: &LinearCode, w: &WeightDistribution) -> Result<usize> {
    let dual = macwilliams_exact(w, code.n(), code.k(), code.alphabet() as u64)?;
    Ok(dual
        .iter()
        .skip(1)
        .position(|c| !c.is_zero())
        .map_or(0, |i| i + 1))
}

fn isometry_check(rec: &mut Recorder, cfg: &KasamiConfig, seed: u64, pairs: usize) -> Result<()> {
    let t0 = Instant::now();
    let simplex = cfg.simplex()?;
    let mds = cfg.build_mds()?;
    let fq = cfg.outer_field();
    let factor = (cfg.q() / cfg.p()) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_word = |rng: &mut ChaCha8Rng| {
        let msg: Vec<Elem> = (0..mds.k())
            .map(|_| fq.elements()[rng.gen_range(0..fq.size())])
            .collect();
        mds.encode(&msg)
    };
    let mut bad = None;
    for i in 0..pairs {
        let (y, z) = (random_word(&mut rng), random_word(&mut rng));
        let d = hamming_distance(&y, &z);
        let dphi = hamming_distance(&simplex.phi(&y)?, &simplex.phi(&z)?);
        if dphi != factor * d {
            bad = Some(format!("pair {i}: d = {d}, d(phi) = {dphi}"));
            break;
        }
    }
    let observed = match &bad {
        None => format!("factor {factor} on {pairs} pairs"),
        Some(w) => w.clone(),
    };
    rec.push(
        "scaled_isometry",
        format!("factor {factor} on {pairs} pairs"),
        observed,
        if bad.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        bad,
        t0,
    );
    Ok(())
}

fn cmd_field(rec: &mut Recorder, e: u32, modulus: Option<u32>) -> Result<ConfigEcho> {
    let t0 = Instant::now();
    let ctx = FieldCtx::new(e, modulus)?;
    let order = ctx.mult_order(ctx.alpha())?;
    rec.record(
        "alpha_order",
        ctx.group_order(),
        order,
        order == ctx.group_order(),
        t0,
    );
    for d in (1..=e).filter(|d| e.is_multiple_of(*d)) {
        let sub = ctx.subfield(d)?;
        rec.note(format!(
            "subfield F_{}: generator {}",
            sub.size(),
            sub.generator()
        ));
    }
    Ok(ConfigEcho::of_field(&ctx))
}

fn cmd_mds(rec: &mut Recorder, q: u64, dual: bool, out: Option<&Path>) -> Result<ConfigEcho> {
    let cfg = KasamiConfig::new(q, 2)?;
    let t0 = Instant::now();
    let code = cfg.build_mds()?;
    let w = code.weight_distribution()?;
    let d = w.minimum_distance();
    rec.record(
        "mds_parameters",
        format!("[{}, 3, {}]_{q}", q + 1, q - 1),
        params(&code, d),
        d == Some(q as usize - 1) && code.k() == 3,
        t0,
    );
    let t0 = Instant::now();
    let expected = expected_mds_weights(q);
    rec.record("mds_weights", &expected, &w, w == expected, t0);
    macwilliams_check(rec, "mds_macwilliams", &code, &w)?;
    let t0 = Instant::now();
    let dd = dual_distance(&code, &w)?;
    rec.record("dual_minimum_distance", 4, dd, dd == 4, t0);
    if let Some(path) = out {
        let written = if dual { code.dual() } else { code };
        write_code(path, &written)?;
        rec.note(format!(
            "wrote {} to {}",
            params(&written, None),
            path.display()
        ));
    }
    Ok(ConfigEcho::of(&cfg))
}

fn cmd_kasami(
    rec: &mut Recorder,
    q: u64,
    p: u64,
    cyclic_order: bool,
    dual: bool,
    out: Option<&Path>,
) -> Result<ConfigEcho> {
    let cfg = KasamiConfig::new(q, p)?;
    let t0 = Instant::now();
    let block = cfg.build_kasami_dual()?;
    rec.record(
        "parameters",
        format!("[{}, {}]_{p}", cfg.length(), 3 * cfg.m()),
        params(&block, None),
        block.k() == 3 * cfg.m() as usize,
        t0,
    );
    let t0 = Instant::now();
    let w = block.weight_distribution()?;
    let expected = expected_weights(q, p);
    rec.record("weights", &expected, &w, w == expected, t0);
    let code = if cyclic_order {
        let t0 = Instant::now();
        let cyc = cfg.crt_reindex(&block)?;
        rec.record(
            "shift_invariant",
            true,
            is_shift_invariant(&cyc),
            is_shift_invariant(&cyc),
            t0,
        );
        cyc
    } else {
        block
    };
    if let Some(path) = out {
        let written = if dual { code.dual() } else { code };
        write_code(path, &written)?;
        rec.note(format!(
            "wrote {} to {}",
            params(&written, None),
            path.display()
        ));
    }
    Ok(ConfigEcho::of(&cfg))
}

fn cmd_weights(rec: &mut Recorder, input: &Path) -> Result<ConfigEcho> {
    let code = read_code(input)?;
    let t0 = Instant::now();
    let w = code.weight_distribution()?;
    rec.note(format!("code: {}", params(&code, w.minimum_distance())));
    for (weight, count) in w.pairs() {
        rec.note(format!("A_{weight} = {count}"));
    }
    rec.record(
        "total",
        code.size(),
        w.total(),
        w.total() == code.size(),
        t0,
    );
    macwilliams_check(rec, "macwilliams", &code, &w)?;
    Ok(ConfigEcho::of_field(code.ctx()))
}

fn cmd_coset_graph(rec: &mut Recorder, input: &Path, export: Option<&Path>) -> Result<ConfigEcho> {
    let check = read_code(input)?;
    let t0 = Instant::now();
    let g = CosetGraph::from_check(check.ctx(), check.rows(), check.sub())?;
    rec.note(format!("vertices: {}", g.order()));
    rec.note(format!("degree: {}", g.connectors().len()));
    let connected = graphs::bfs_labels(&g, &[0]).is_ok();
    rec.record("connected", true, connected, connected, t0);
    let simple = g.connectors().len() == check.n() * (check.alphabet() - 1);
    rec.note(format!("distinct connectors: {simple}"));
    if connected {
        match g.distance_regularity()? {
            Some(a) => rec.note(format!("distance-regular: {a}")),
            None => rec.note("distance-regular: no"),
        }
    }
    if let Some(path) = export {
        let mut buf = Vec::new();
        graphs::write_edges(&g, &mut buf)?;
        fs::write(path, buf)?;
        rec.note(format!("wrote edge list to {}", path.display()));
    }
    Ok(ConfigEcho::of_field(check.ctx()))
}

fn cmd_verify_cr(rec: &mut Recorder, input: &Path, check: bool) -> Result<ConfigEcho> {
    let file = read_code(input)?;
    let code = if check { file.dual() } else { file };
    rec.note(format!("code: {}", params(&code, None)));
    let t0 = Instant::now();
    let verdict = graphs::is_completely_regular(&code);
    let array = rec.cr("completely_regular", None, verdict, t0)?;
    if (code.n() as u64) * (code.sub().degree() as u64) <= 20 && code.size() <= ENUMERATION_LIMIT {
        let t0 = Instant::now();
        let d = graphs::delsarte_check(&code)?;
        rec.record(
            "delsarte_agrees",
            array.is_some(),
            d,
            d == array.is_some(),
            t0,
        );
    }
    Ok(ConfigEcho::of_field(code.ctx()))
}

fn cmd_verify_paper(rec: &mut Recorder, q: u64, p: u64, seed: u64) -> Result<ConfigEcho> {
    let cfg = KasamiConfig::new(q, p)?;
    let ctx = cfg.ctx();
    let kasami_array = IntersectionArray::kasami(q);

    let t0 = Instant::now();
    let mds = cfg.build_mds()?;
    let mds_w = mds.weight_distribution()?;
    let d = mds_w.minimum_distance();
    rec.record(
        "mds_parameters",
        format!("[{}, 3, {}]_{q}", q + 1, q - 1),
        params(&mds, d),
        d == Some(q as usize - 1) && mds.k() == 3,
        t0,
    );
    let t0 = Instant::now();
    let e = expected_mds_weights(q);
    rec.record("mds_weights", &e, &mds_w, mds_w == e, t0);
    let t0 = Instant::now();
    let dd = dual_distance(&mds, &mds_w)?;
    rec.record("mds_dual_distance", 4, dd, dd == 4, t0);
    macwilliams_check(rec, "mds_macwilliams", &mds, &mds_w)?;

    let t0 = Instant::now();
    let block = cfg.build_kasami_dual()?;
    rec.record(
        "kasami_parameters",
        format!("[{}, {}]_{p}", cfg.length(), 3 * cfg.m()),
        params(&block, None),
        block.n() == cfg.length() && block.k() == 3 * cfg.m() as usize,
        t0,
    );
    let t0 = Instant::now();
    let kw = block.weight_distribution()?;
    let e = expected_weights(q, p);
    rec.record("kasami_weights", &e, &kw, kw == e, t0);
    let t0 = Instant::now();
    let scaled = mds_w.scale_weights((q / p) as usize);
    rec.record(
        "weight_transport",
        &scaled,
        &kw,
        scaled.pairs() == kw.pairs(),
        t0,
    );
    macwilliams_check(rec, "kasami_macwilliams", &block, &kw)?;

    let t0 = Instant::now();
    let cyc = cfg.crt_reindex(&block)?;
    let shift = is_shift_invariant(&cyc);
    rec.record("reindexed_shift_invariant", true, shift, shift, t0);
    let t0 = Instant::now();
    let reps = cfg.cyclic_nonzero_exponents();
    let same = cfg.trace_kasami_dual()?.same_code(&cyc);
    rec.record(
        "trace_nonzeros",
        format!("orbits {reps:?} of beta = alpha^{}", p - 1),
        if same { "equal" } else { "different" },
        same,
        t0,
    );
    let classical = vec![1, (q + 1) as u32];
    let t0 = Instant::now();
    let same_classical =
        cyclic::from_nonzeros_trace(ctx, &cfg.trace_spec(classical.clone())?)?.same_code(&cyc);
    if p == 2 {
        rec.record(
            "trace_nonzeros_classical",
            format!("orbits {classical:?}"),
            if same_classical { "equal" } else { "different" },
            same_classical,
            t0,
        );
    } else {
        rec.note(format!(
            "orbits {classical:?} give {} code; the reindexed code has nonzero orbits {reps:?}",
            if same_classical {
                "the same"
            } else {
                "a different"
            }
        ));
    }

    let t0 = Instant::now();
    let simplex = cfg.simplex()?;
    let eq = graphs::graphs_equal_by_syndrome(&simplex, mds.rows(), block.rows())?;
    rec.record("coset_graph_identity", true, eq, eq, t0);

    let t0 = Instant::now();
    let v = graphs::is_completely_regular(&mds.dual());
    rec.cr("cr_mds", Some(&kasami_array), v, t0)?;
    let t0 = Instant::now();
    let k = block.dual();
    let v = graphs::is_completely_regular(&k);
    rec.cr("cr_kasami", Some(&kasami_array), v, t0)?;
    let t0 = Instant::now();
    match CosetGraph::of_code(&k) {
        Ok(g) => {
            let dr = g.distance_regularity()?;
            let obs = dr
                .as_ref()
                .map_or("not distance-regular".to_string(), |a| a.to_string());
            rec.record(
                "coset_graph_distance_regular",
                &kasami_array,
                obs,
                dr.as_ref() == Some(&kasami_array),
                t0,
            );
        }
        Err(Error::TooLarge(n)) => rec.push(
            "coset_graph_distance_regular",
            &kasami_array,
            format!("skipped, {n} vertices"),
            Verdict::Skip,
            None,
            t0,
        ),
        Err(e) => return Err(e),
    }
    isometry_check(rec, &cfg, seed, 1000)?;
    Ok(ConfigEcho::of(&cfg))
}

fn cmd_union(
    rec: &mut Recorder,
    cfg: &KasamiConfig,
    k: usize,
    mode: Mode,
    base: Base,
    seed: u64,
    export: Option<&Path>,
) -> Result<ConfigEcho> {
    let q = cfg.q();
    let code = match base {
        Base::Kasami => cfg.build_kasami_dual()?.dual(),
        Base::Mds => cfg.build_mds()?.dual(),
    };
    rec.note(format!("base: {}", params(&code, None)));
    let t0 = Instant::now();
    let fam = CosetFamily::from_code(&code)?;
    rec.record(
        "base_array",
        IntersectionArray::kasami(q),
        fam.array(),
        *fam.array() == IntersectionArray::kasami(q),
        t0,
    );
    rec.note(format!("leaders: {:?}", fam.leaders()));
    rec.record(
        "leader_count",
        fam.r() - 1,
        fam.leaders().len(),
        fam.leaders().len() == fam.r() - 1,
        t0,
    );
    let mode = match mode {
        Mode::Direct => BuildMode::Direct,
        Mode::AdditiveTower => BuildMode::AdditiveTower,
    };
    let t0 = Instant::now();
    let bk = fam.build_bk(k, mode)?;
    let expected = fam.expected_array(k);
    let v = graphs::set_regularity(fam.hamming(), &bk);
    rec.cr("bk_array", Some(&expected), v, t0)?;
    let t0 = Instant::now();
    let additive = union::is_additive(&bk);
    if k <= 2 || mode == BuildMode::AdditiveTower {
        rec.record("bk_additive", true, additive, additive, t0);
    } else {
        rec.note(format!("B_{k} additive: {additive}"));
    }
    let t0 = Instant::now();
    let refined = fam.refined_partition_check()?;
    rec.record(
        "refined_partition",
        format!("{:?}", refined.expected),
        match &refined.observed {
            Ok(m) => format!("{m:?}"),
            Err(w) => w.to_string(),
        },
        refined.passed(),
        t0,
    );
    if mode == BuildMode::Direct {
        let t0 = Instant::now();
        let four = fam.four_cell_check(k)?;
        rec.record(
            "four_cell_partition",
            format!("{:?}", four.expected),
            match &four.observed {
                Ok(m) => format!("{m:?}"),
                Err(w) => w.to_string(),
            },
            four.passed(),
            t0,
        );
    }
    let t0 = Instant::now();
    let mut all = true;
    for i in 0..fam.r() {
        let v = graphs::set_regularity(fam.hamming(), &fam.coset(i))?;
        all &= v.array() == Some(fam.array());
    }
    rec.record(
        "cosets_completely_regular",
        fam.r(),
        if all { fam.r() } else { 0 },
        all,
        t0,
    );
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = fam.random_selection(k, &mut rng)?;
    let v = graphs::set_regularity(fam.hamming(), &fam.union_of(&pick));
    rec.note(format!("random selection: cosets {pick:?}"));
    rec.cr("random_selection_array", Some(&expected), v, t0)?;
    if let Some(path) = export {
        let mut buf = Vec::new();
        union::write_vertex_set(&bk, &mut buf)?;
        fs::write(path, buf)?;
        rec.note(format!("wrote {} vertices to {}", bk.len(), path.display()));
    }
    Ok(ConfigEcho::of(cfg))
}

fn cmd_aut(rec: &mut Recorder, q: u64, level: Level, p: u64) -> Result<ConfigEcho> {
    let cfg = KasamiConfig::new(q, p)?;
    let level = match level {
        Level::Monomial => AutLevel::Monomial,
        Level::Semilinear => AutLevel::Semilinear,
    };
    let t0 = Instant::now();
    let cert = aut::certify(q, Some(p), level)?;
    let e = cert.expected_order();
    for line in cert.to_string().lines() {
        rec.note(line);
    }
    rec.record("group_elements", e, cert.elements, cert.elements == e, t0);
    rec.record("preserving", e, cert.preserving, cert.preserving == e, t0);
    rec.record("injective", e, cert.distinct, cert.distinct == e, t0);
    match cert.exact_order {
        Some(o) => rec.record("exact_order", e, o, o == e, t0),
        None => rec.push(
            "exact_order",
            e,
            "not searched, lower bound only",
            Verdict::Skip,
            None,
            t0,
        ),
    }
    if let (Some(l), Some(n)) = (cert.lifted_preserving, cert.liftable) {
        rec.record("lift_preserves_concatenation", n, l, l == n, t0);
    }
    Ok(ConfigEcho::of(&cfg))
}

fn execute(cli: &Cli, rec: &mut Recorder) -> Result<ConfigEcho> {
    match &cli.command {
        Command::Field { e, modulus } => cmd_field(rec, *e, *modulus),
        Command::Mds { q, dual, out } => cmd_mds(rec, *q, *dual, out.as_deref()),
        Command::Kasami {
            q,
            p,
            cyclic_order,
            dual,
            out,
        } => cmd_kasami(rec, *q, *p, *cyclic_order, *dual, out.as_deref()),
        Command::Weights { input } => cmd_weights(rec, input),
        Command::CosetGraph { input, export } => cmd_coset_graph(rec, input, export.as_deref()),
        Command::VerifyCr { input, check } => cmd_verify_cr(rec, input, *check),
        Command::VerifyPaper { q, p } => cmd_verify_paper(rec, *q, *p, cli.seed),
        Command::Union {
            q,
            p,
            k,
            mode,
            base,
            export,
        } => cmd_union(
            rec,
            &KasamiConfig::new(*q, *p)?,
            *k,
            *mode,
            *base,
            cli.seed,
            export.as_deref(),
        ),
        Command::Aut { q, level, p } => cmd_aut(rec, *q, *level, *p),
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                report: None,
                output: e.render().to_string(),
                code,
            };
        }
    };
    let command = std::iter::once("kasami".to_string())
        .chain(
            args.iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned()),
        )
        .collect::<Vec<_>>()
        .join(" ");
    let mut rec = Recorder {
        timings: cli.timings,
        checks: Vec::new(),
        notes: Vec::new(),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            return Outcome {
                report: None,
                output: format!("error: {e}\n"),
                code: 2,
            }
        }
    };
    let config = match pool.install(|| execute(&cli, &mut rec)) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                report: None,
                output: format!("error: {e}\n"),
                code: 2,
            }
        }
    };
    let report = RunReport {
        command,
        config,
        checks: rec.checks,
        notes: rec.notes,
    };
    let mut output = if cli.json {
        serde_json::to_string_pretty(&report).expect("report serializes")
    } else {
        report.to_string()
    };
    let _ = writeln!(output);
    let code = if report.passed() { 0 } else { 1 };
    Outcome {
        report: Some(report),
        output,
        code,
    }
}
