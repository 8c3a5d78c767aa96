mod input;
mod lcp;
mod report;
mod verify;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use succinct_rmq::cartesian::{
    build_cartesian, model_entropy_table, parse_left_sizes, parse_shape_string, subtree_entropy, to_left_sizes_string, to_shape_string,
    BinaryTree,
};
use succinct_rmq::io::Persist;
use succinct_rmq::micro_codec::CodecMode;
use succinct_rmq::ops;
use succinct_rmq::rmq::RmqIndex;
use succinct_rmq::tree_code::{decode, encode_hybrid, TreeCode};
use succinct_rmq::tree_cover::CoverParams;

use report::{ratio, Report};

#[derive(Parser)]
#[command(name = "srmq", version, about = "Compressed range-minimum indexes over Cartesian trees")]
struct Cli {
    /// Print reports as key=value lines.
    #[arg(long, global = true)]
    kv: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Source {
    /// Numbers separated by whitespace or commas.
    input: Option<PathBuf>,
    /// Use a random permutation of this length instead of a file.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args, Clone, Copy)]
struct CoverOpts {
    #[arg(long, default_value = "entropy")]
    codec: CodecMode,
    /// Micro-tree size parameter (default: ⌈lg(n+2)/8⌉).
    #[arg(long, value_name = "B")]
    micro_b: Option<usize>,
    /// Mini-tree size parameter (default: ⌈lg²(n+2)⌉).
    #[arg(long, value_name = "B")]
    mini_b: Option<usize>,
}

impl CoverOpts {
    fn params(&self, n: usize) -> Result<CoverParams> {
        Ok(CoverParams::with_overrides(n, self.micro_b, self.mini_b)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Shape,
    LeftSizes,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an index and print its space report.
    Build {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        cover: CoverOpts,
        /// Where to write the index.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also print the mini/micro tree listing.
        #[arg(long)]
        dump_cover: bool,
    },
    /// Answer range-minimum queries from an index file.
    Query {
        index: PathBuf,
        /// 1-based pairs `i j`, any number of them.
        #[arg(required = true, num_args = 2..)]
        pairs: Vec<usize>,
    },
    /// Compare indexes with oracles on random and adversarial arrays.
    Verify {
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Check only this array.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Codec to test (default: all).
        #[arg(long)]
        codec: Option<CodecMode>,
        #[arg(long, value_name = "B")]
        micro_b: Option<usize>,
        #[arg(long, value_name = "B")]
        mini_b: Option<usize>,
        /// Random queries per array when n > 512.
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
    },
    /// Print n, H_n and H_n/n for the random-BST shape entropy.
    EntropyTable {
        n_max: usize,
        /// Print every k-th row (the last row is always printed).
        #[arg(long, default_value_t = 1)]
        every: usize,
    },
    /// Write the whole-tree code of a Cartesian tree or a given shape.
    Encode {
        #[command(flatten)]
        src: Source,
        /// Tree in shape notation, e.g. "((..).)".
        #[arg(long, conflicts_with_all = ["input", "random", "left_sizes"])]
        shape: Option<String>,
        /// Tree as preorder left-subtree sizes.
        #[arg(long, conflicts_with_all = ["input", "random"])]
        left_sizes: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Read a whole-tree code and print the tree.
    Decode {
        code: PathBuf,
        #[arg(long, value_enum, default_value = "shape")]
        format: TreeFormat,
    },
    /// Build the LCP array of a text and check LCE answers.
    LcpIngest {
        text: PathBuf,
        /// Where to write the LCP array (one number per line).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Random LCE spot checks against character comparison.
        #[arg(long, default_value_t = 1000)]
        checks: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        cover: CoverOpts,
    },
    /// Time construction and queries, and count primitive operations per query.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        queries: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        cover: CoverOpts,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let kv = cli.kv;
    match cli.cmd {
        Cmd::Build { src, cover, output, dump_cover } => build(&src, cover, output.as_deref(), dump_cover, kv),
        Cmd::Query { index, pairs } => query(&index, &pairs),
        Cmd::Verify {
            n,
            trials,
            seed,
            input,
            codec,
            micro_b,
            mini_b,
            queries,
        } => run_verify(n, trials, seed, input.as_deref(), codec, (micro_b, mini_b), queries, kv),
        Cmd::EntropyTable { n_max, every } => entropy_table(n_max, every),
        Cmd::Encode {
            src,
            shape,
            left_sizes,
            output,
        } => encode(&src, shape.as_deref(), left_sizes.as_deref(), &output, kv),
        Cmd::Decode { code, format } => decode_cmd(&code, format),
        Cmd::LcpIngest {
            text,
            output,
            checks,
            seed,
            cover,
        } => lcp_ingest(&text, output.as_deref(), checks, seed, cover, kv),
        Cmd::Bench { n, queries, seed, cover } => bench(n, queries, seed, cover, kv),
    }
}

fn space_rows(r: &mut Report, ix: &RmqIndex) {
    let n = ix.len();
    let s = ix.space();
    let c = ix.cover();
    r.add("n", n)
        .add("codec", c.codebook().mode())
        .add("micro_b", c.params().micro_b)
        .add("mini_b", c.params().mini_b)
        .add("mini_trees", c.mini_count())
        .add("micro_trees", c.micro_count())
        .add("micro_types", c.codebook().len())
        .add("bits_total", s.total())
        .add("bits_per_element", ratio(s.total(), n))
        .add("micro_payload", s.micro_payload)
        .add("micro_payload_per_element", ratio(s.micro_payload, n))
        .add("codebook", s.codebook)
        .add("directories", s.directories)
        .add("macro_tiers", s.macro_tiers)
        .add("lookup_tables", s.lookup_tables);
}

fn build(src: &Source, cover: CoverOpts, output: Option<&Path>, dump_cover: bool, kv: bool) -> Result<Outcome> {
    let a = input::load(src.input.as_deref(), src.random, src.seed)?;
    let params = cover.params(a.len())?;
    let started = Instant::now();
    let ix = RmqIndex::build_with(&a, cover.codec, params)?;
    let elapsed = started.elapsed();
    let tree = build_cartesian(&a);
    let code = encode_hybrid(&tree);
    let hst = subtree_entropy(&tree).hst;

    let mut r = Report::default();
    space_rows(&mut r, &ix);
    r.add("tree_code_bits", code.bit_len())
        .add("tree_code_body_bits", code.bit_len() - code.header_len())
        .add("tree_code_branch", if code.uses_zaks() { "zaks" } else { "subtree-size" })
        .add("h_st", format!("{hst:.4}"))
        .add("h_st_per_element", format!("{:.4}", hst / a.len() as f64))
        .add("build_ms", format!("{:.1}", elapsed.as_secs_f64() * 1e3));
    if let Some(path) = output {
        std::fs::write(path, ix.to_bytes()).with_context(|| format!("cannot write {}", path.display()))?;
        r.add("written", path.display());
    }
    print!("{}", r.render(kv));
    if dump_cover {
        print!("{}", ix.cover().dump());
    }
    Ok(Outcome::Pass)
}

fn load_index(path: &Path) -> Result<RmqIndex> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    RmqIndex::from_bytes(&bytes).with_context(|| format!("{} is not a valid index", path.display()))
}

fn query(index: &Path, pairs: &[usize]) -> Result<Outcome> {
    if pairs.len() % 2 != 0 {
        bail!("queries come in pairs `i j`; got {} numbers", pairs.len());
    }
    let ix = load_index(index)?;
    let mut out = std::io::stdout().lock();
    for p in pairs.chunks(2) {
        writeln!(out, "{}", ix.query(p[0], p[1])?)?;
    }
    Ok(Outcome::Pass)
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    n: usize,
    trials: usize,
    seed: u64,
    input: Option<&Path>,
    codec: Option<CodecMode>,
    (micro_b, mini_b): (Option<usize>, Option<usize>),
    samples: usize,
    kv: bool,
) -> Result<Outcome> {
    let cases: Vec<(String, Vec<i64>)> = match input {
        Some(p) => {
            let a = input::read_keys(p)?;
            if a.is_empty() {
                bail!("input array is empty");
            }
            vec![(p.display().to_string(), a)]
        }
        None => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let mut cases: Vec<(String, Vec<i64>)> = (0..trials)
                .map(|t| (format!("random #{}", t + 1), input::random_permutation(n, seed.wrapping_add(t as u64))))
                .collect();
            cases.extend(verify::adversarial(n).into_iter().map(|(name, a)| (name.to_string(), a)));
            cases
        }
    };
    let modes: Vec<CodecMode> = codec.map_or(CodecMode::ALL.to_vec(), |m| vec![m]);
    let (mut queries, mut failed) = (0usize, 0usize);
    for (c, (name, a)) in cases.iter().enumerate() {
        let params = CoverParams::with_overrides(a.len(), micro_b, mini_b)?;
        for &mode in &modes {
            let mut rng = verify::case_rng(seed, c);
            let out = verify::check_array(a, mode, params, samples, &mut rng);
            queries += out.queries;
            if !out.failures.is_empty() {
                failed += 1;
                eprintln!("FAIL {name} (n={}, {mode}):", a.len());
                for f in &out.failures {
                    eprintln!("  {f}");
                }
            }
        }
    }
    let mut r = Report::default();
    r.add("cases", cases.len() * modes.len())
        .add("queries", queries)
        .add("failed_cases", failed)
        .add("result", if failed == 0 { "pass" } else { "fail" });
    print!("{}", r.render(kv));
    Ok(if failed == 0 { Outcome::Pass } else { Outcome::Fail })
}

fn entropy_table(n_max: usize, every: usize) -> Result<Outcome> {
    if n_max < 2 {
        bail!("n_max must be at least 2");
    }
    if every == 0 {
        bail!("--every must be at least 1");
    }
    let h = model_entropy_table(n_max);
    let mut out = std::io::stdout().lock();
    writeln!(out, "n\tH_n\tH_n/n")?;
    for n in 1..=n_max {
        if n % every == 0 || n == n_max {
            writeln!(out, "{n}\t{:.6}\t{:.7}", h[n], h[n] / n as f64)?;
        }
    }
    Ok(Outcome::Pass)
}

fn encode(src: &Source, shape: Option<&str>, left_sizes: Option<&str>, output: &Path, kv: bool) -> Result<Outcome> {
    let tree: BinaryTree = match (shape, left_sizes) {
        (Some(s), _) => parse_shape_string(s)?,
        (None, Some(s)) => parse_left_sizes(s)?,
        (None, None) => build_cartesian(&input::load(src.input.as_deref(), src.random, src.seed)?),
    };
    let code = encode_hybrid(&tree);
    std::fs::write(output, code.to_bytes()).with_context(|| format!("cannot write {}", output.display()))?;
    let mut r = Report::default();
    r.add("n", code.n())
        .add("bits", code.bit_len())
        .add("header_bits", code.header_len())
        .add("body_bits", code.bit_len() - code.header_len())
        .add("branch", if code.uses_zaks() { "zaks" } else { "subtree-size" })
        .add("h_st", format!("{:.4}", subtree_entropy(&tree).hst))
        .add("written", output.display());
    print!("{}", r.render(kv));
    Ok(Outcome::Pass)
}

fn decode_cmd(path: &Path, format: TreeFormat) -> Result<Outcome> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let code = TreeCode::from_bytes(&bytes).with_context(|| format!("{} is not a valid tree code", path.display()))?;
    let tree = decode(&code)?;
    match format {
        TreeFormat::Shape => println!("{}", to_shape_string(&tree)),
        TreeFormat::LeftSizes => println!("{}", to_left_sizes_string(&tree)),
        TreeFormat::Both => {
            println!("{}", to_shape_string(&tree));
            println!("{}", to_left_sizes_string(&tree));
        }
    }
    Ok(Outcome::Pass)
}

fn lcp_ingest(path: &Path, output: Option<&Path>, checks: usize, seed: u64, cover: CoverOpts, kv: bool) -> Result<Outcome> {
    let text = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    if text.is_empty() {
        bail!("{} is empty", path.display());
    }
    let n = text.len();
    let sa = lcp::suffix_array(&text);
    let lcp_arr = lcp::lcp_array(&text, &sa);
    if let Some(out) = output {
        let body: String = lcp_arr.iter().map(|v| format!("{v}\n")).collect();
        std::fs::write(out, body).with_context(|| format!("cannot write {}", out.display()))?;
    }
    let index = RmqIndex::build_with(&lcp_arr, cover.codec, cover.params(n)?)?;
    let lce = lcp::Lce::new(&sa, lcp_arr, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0usize;
    for _ in 0..checks {
        let (i, j) = (rng.random_range(1..=n), rng.random_range(1..=n));
        let (got, want) = (lce.lce(i, j)?, lcp::naive_lce(&text, i, j));
        if got != want {
            mismatches += 1;
            eprintln!("lce({i}, {j}) = {got}, expected {want}");
        }
    }
    let mut r = Report::default();
    r.add("n", n).add("lce_checks", checks).add("lce_mismatches", mismatches);
    if let Some(out) = output {
        r.add("written", out.display());
    }
    print!("{}", r.render(kv));
    Ok(if mismatches == 0 { Outcome::Pass } else { Outcome::Fail })
}

fn bench(n: usize, queries: usize, seed: u64, cover: CoverOpts, kv: bool) -> Result<Outcome> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let a = input::random_permutation(n, seed);
    let started = Instant::now();
    let ix = RmqIndex::build_with(&a, cover.codec, cover.params(n)?)?;
    let build = started.elapsed();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let ranges: Vec<(usize, usize)> = (0..queries)
        .map(|q| {
            let i = rng.random_range(1..=n);
            let j = if q % 2 == 0 { (i + rng.random_range(0..16)).min(n) } else { rng.random_range(i..=n) };
            (i, j)
        })
        .collect();
    let started = Instant::now();
    let mut sink = 0usize;
    for &(i, j) in &ranges {
        sink ^= ix.query(i, j)?;
    }
    let query_time = started.elapsed();
    let (mut short_max, mut long_max, mut total_ops) = (0u64, 0u64, 0u64);
    for (q, &(i, j)) in ranges.iter().enumerate() {
        let (_, c) = ops::measure(|| ix.query(i, j));
        total_ops += c;
        if q % 2 == 0 {
            short_max = short_max.max(c);
        } else {
            long_max = long_max.max(c);
        }
    }
    let mut r = Report::default();
    space_rows(&mut r, &ix);
    r.add("build_ms", format!("{:.1}", build.as_secs_f64() * 1e3))
        .add("queries", queries)
        .add("ns_per_query", format!("{:.1}", query_time.as_secs_f64() * 1e9 / queries.max(1) as f64))
        .add("ops_per_query_avg", format!("{:.1}", total_ops as f64 / queries.max(1) as f64))
        .add("ops_per_query_max_short", short_max)
        .add("ops_per_query_max_long", long_max)
        .add("checksum", sink);
    print!("{}", r.render(kv));
    Ok(Outcome::Pass)
}
