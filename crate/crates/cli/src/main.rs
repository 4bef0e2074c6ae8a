use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clan_schubert::guards::{DEFAULT_MAX_CLAN_SIZE, DEFAULT_MAX_DEGREE, DEFAULT_MAX_WORD_LENGTH};
use clan_schubert::oracle::SchubertOracle;
use clan_schubert::richardson::{clan_of_pair, pair_of_clan, richardson_pairs, special_product};
use clan_schubert::weak_action::weak_order_graph;
use clan_schubert::{enumerate_clans, table1, Clan, ExpansionRecord, Guards, Permutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

/// Verification sweeps compare against the polynomial oracle, which grows
/// quickly past this degree.
const DEFAULT_MAX_VERIFY_DEGREE: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "clan-schubert",
    version,
    about = "Schubert products for Levi-stable Richardson varieties via clans"
)]
struct Cli {
    /// Output format. `dot` is only meaningful for `graph`.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    #[command(flatten)]
    limits: Limits,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Limits {
    /// Largest n for which S_n is enumerated.
    #[arg(long, global = true, env = "CLAN_SCHUBERT_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,

    /// Largest p + q for which clans are enumerated.
    #[arg(long, global = true, env = "CLAN_SCHUBERT_MAX_CLAN_SIZE", default_value_t = DEFAULT_MAX_CLAN_SIZE)]
    max_clan_size: usize,

    /// Longest permutation whose reduced words may all be listed.
    #[arg(long, global = true, env = "CLAN_SCHUBERT_MAX_WORD_LENGTH", default_value_t = DEFAULT_MAX_WORD_LENGTH)]
    max_word_length: usize,

    /// Largest n accepted by `verify`.
    #[arg(long, global = true, env = "CLAN_SCHUBERT_MAX_VERIFY_DEGREE", default_value_t = DEFAULT_MAX_VERIFY_DEGREE)]
    max_verify_degree: usize,
}

impl Limits {
    fn guards(&self) -> Guards {
        Guards {
            max_degree: self.max_degree,
            max_clan_size: self.max_clan_size,
            max_word_length: self.max_word_length,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand S_x · S_y through the clan of (w0·x, y).
    Product {
        #[arg(long)]
        x: Permutation,
        #[arg(long)]
        y: Permutation,
        #[arg(long)]
        p: usize,
        /// Recompute with Schubert polynomials and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Clan of the Richardson variety X_u^v.
    ClanOf {
        #[arg(long)]
        u: Permutation,
        #[arg(long)]
        v: Permutation,
        #[arg(long)]
        p: usize,
    },
    /// Richardson pair (u, v) of a pattern-avoiding clan.
    PairOf {
        #[arg(long)]
        clan: String,
    },
    /// Weak-order graph on all (p,q)-clans.
    Graph {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// List all (p,q)-clans with their orbit dimensions.
    Clans {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Compare every special product in S_n against the polynomial oracle.
    Verify {
        #[arg(long)]
        n: usize,
        /// Stop after this many pairs.
        #[arg(long)]
        max_cases: Option<usize>,
    },
    /// Regenerate the S_31425 · S_14253 table and diff it against the golden copy.
    Table1,
    /// Expand S_x · S_y with Schubert polynomials only.
    OracleProduct {
        #[arg(long)]
        x: Permutation,
        #[arg(long)]
        y: Permutation,
        /// Keep terms indexed by permutations outside S_n.
        #[arg(long)]
        all_terms: bool,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    inputs: Value,
    output: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Value>,
}

struct Outcome {
    report: RunReport,
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = run(&cli);
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match result {
        Ok(outcome) => {
            match cli.format {
                Format::Json => {
                    let value = serde_json::to_value(&outcome.report).expect("report serializes");
                    println!("{}", serde_json::to_string_pretty(&value).expect("value serializes"));
                }
                Format::Text | Format::Dot => print!("{}", outcome.text),
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let guards = cli.limits.guards();
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph { .. }) {
        bail!("--format dot is only available for `graph`");
    }
    match &cli.command {
        Command::Product { x, y, p, verify } => cmd_product(x, y, *p, *verify, &guards),
        Command::ClanOf { u, v, p } => cmd_clan_of(u, v, *p),
        Command::PairOf { clan } => cmd_pair_of(clan),
        Command::Graph { p, q } => cmd_graph(*p, *q, cli.format, &guards),
        Command::Clans { p, q } => cmd_clans(*p, *q, &guards),
        Command::Verify { n, max_cases } => {
            cmd_verify(*n, *max_cases, cli.limits.max_verify_degree, &guards)
        }
        Command::Table1 => cmd_table1(),
        Command::OracleProduct { x, y, all_terms } => cmd_oracle_product(x, y, *all_terms),
    }
}

fn terms_text(record: &ExpansionRecord) -> String {
    record
        .terms
        .iter()
        .map(|t| format!("{}\t{}\n", t.w, t.coeff))
        .collect()
}

fn cmd_product(
    x: &Permutation,
    y: &Permutation,
    p: usize,
    verify: bool,
    guards: &Guards,
) -> Result<Outcome> {
    let expansion = special_product(x, y, p, guards)
        .with_context(|| format!("product S_{x} · S_{y} at p = {p}"))?;
    let record = ExpansionRecord::new(x, y, Some(p), &expansion)?;
    let mut text = terms_text(&record);
    let mut ok = true;
    let verdict = if verify {
        let oracle = SchubertOracle::new().product_in_sn(x, y)?;
        let matched = oracle == expansion;
        ok = matched;
        let status = if matched { "match" } else { "mismatch" };
        text.push_str(&format!("verdict\t{status}\n"));
        let mut v = json!({ "status": status });
        if !matched {
            v["oracle"] = serde_json::to_value(ExpansionRecord::new(x, y, Some(p), &oracle)?)?;
        }
        Some(v)
    } else {
        None
    };
    Ok(Outcome {
        report: RunReport {
            command: "product",
            inputs: json!({ "x": x.to_string(), "y": y.to_string(), "p": p, "verify": verify }),
            output: serde_json::to_value(&record)?,
            verdict,
        },
        text,
        ok,
    })
}

fn cmd_clan_of(u: &Permutation, v: &Permutation, p: usize) -> Result<Outcome> {
    let clan = clan_of_pair(u, v, p)?;
    Ok(Outcome {
        report: RunReport {
            command: "clan-of",
            inputs: json!({ "u": u.to_string(), "v": v.to_string(), "p": p }),
            output: json!({ "clan": clan.to_string(), "dimension": clan.orbit_dimension() }),
            verdict: None,
        },
        text: format!("{clan}\n"),
        ok: true,
    })
}

fn cmd_pair_of(text: &str) -> Result<Outcome> {
    let clan = Clan::parse_inferred(text)?;
    let pair = pair_of_clan(&clan)?;
    Ok(Outcome {
        report: RunReport {
            command: "pair-of",
            inputs: json!({ "clan": text }),
            output: json!({
                "clan": clan.to_string(),
                "u": pair.u().to_string(),
                "v": pair.v().to_string(),
                "p": pair.p(),
                "q": pair.q(),
            }),
            verdict: None,
        },
        text: format!("{}\t{}\t{}\n", pair.u(), pair.v(), pair.p()),
        ok: true,
    })
}

fn cmd_graph(p: usize, q: usize, format: Format, guards: &Guards) -> Result<Outcome> {
    let graph = weak_order_graph(p, q, guards)?;
    let stats = json!({
        "nodes": graph.nodes.len(),
        "edges": graph.edges.len(),
        "double_edges": graph.edges.iter().filter(|e| e.mult > 1).count(),
        "sources": graph.sources().len(),
        "sinks": graph.sinks().len(),
        "acyclic": graph.is_acyclic(),
    });
    let text = match format {
        Format::Dot => graph.to_dot(),
        _ => {
            let mut out = format!(
                "nodes\t{}\nedges\t{}\n",
                graph.nodes.len(),
                graph.edges.len()
            );
            for e in &graph.edges {
                out.push_str(&format!(
                    "{} -> {}\t{}\n",
                    graph.nodes[e.src], graph.nodes[e.dst], e.root
                ));
            }
            out
        }
    };
    Ok(Outcome {
        report: RunReport {
            command: "graph",
            inputs: json!({ "p": p, "q": q }),
            output: json!({ "graph": graph.to_json(), "stats": stats }),
            verdict: None,
        },
        text,
        ok: true,
    })
}

fn cmd_clans(p: usize, q: usize, guards: &Guards) -> Result<Outcome> {
    let clans = enumerate_clans(p, q, guards)?;
    let rows: Vec<Value> = clans
        .iter()
        .map(|c| {
            json!({
                "clan": c.to_string(),
                "dimension": c.orbit_dimension(),
                "avoids_1212": c.avoids_1212(),
            })
        })
        .collect();
    let text = clans
        .iter()
        .map(|c| format!("{c}\t{}\n", c.orbit_dimension()))
        .collect();
    Ok(Outcome {
        report: RunReport {
            command: "clans",
            inputs: json!({ "p": p, "q": q }),
            output: json!({ "count": clans.len(), "clans": rows }),
            verdict: None,
        },
        text,
        ok: true,
    })
}

fn cmd_verify(
    n: usize,
    max_cases: Option<usize>,
    max_verify_degree: usize,
    guards: &Guards,
) -> Result<Outcome> {
    if n == 0 {
        bail!("n must be positive");
    }
    if n > max_verify_degree {
        bail!("n = {n} exceeds the verify limit {max_verify_degree} (raise with --max-verify-degree)");
    }
    let w0 = Permutation::longest(n)?;
    let mut oracle = SchubertOracle::new();
    let limit = max_cases.unwrap_or(usize::MAX);
    let (mut cases, mut passed) = (0usize, 0usize);
    let mut per_p = Vec::new();
    let mut failures = Vec::new();
    'sweep: for p in 1..n {
        let (mut p_cases, mut p_passed) = (0usize, 0usize);
        for pair in richardson_pairs(n, p, guards)? {
            if cases == limit {
                per_p.push(json!({ "p": p, "cases": p_cases, "passed": p_passed }));
                break 'sweep;
            }
            let x = w0.compose(pair.u())?;
            let clan_side = special_product(&x, pair.v(), p, guards)?;
            let oracle_side = oracle.product_in_sn(&x, pair.v())?;
            cases += 1;
            p_cases += 1;
            if clan_side == oracle_side {
                passed += 1;
                p_passed += 1;
            } else {
                failures.push(json!({
                    "x": x.to_string(),
                    "y": pair.v().to_string(),
                    "p": p,
                    "clan": pair.clan().to_string(),
                }));
            }
        }
        per_p.push(json!({ "p": p, "cases": p_cases, "passed": p_passed }));
    }
    let failed = cases - passed;
    let status = if failed == 0 { "pass" } else { "fail" };
    let mut text = String::new();
    for row in &per_p {
        text.push_str(&format!(
            "p={}\tcases={}\tpassed={}\n",
            row["p"], row["cases"], row["passed"]
        ));
    }
    for f in &failures {
        text.push_str(&format!(
            "FAIL\tx={}\ty={}\tp={}\n",
            f["x"].as_str().unwrap_or_default(),
            f["y"].as_str().unwrap_or_default(),
            f["p"]
        ));
    }
    text.push_str(&format!("total\t{cases}\tpassed\t{passed}\tfailed\t{failed}\n"));
    Ok(Outcome {
        report: RunReport {
            command: "verify",
            inputs: json!({ "n": n, "max_cases": max_cases }),
            output: json!({ "cases": cases, "passed": passed, "failed": failed, "by_p": per_p }),
            verdict: Some(json!({ "status": status, "failures": failures })),
        },
        text,
        ok: failed == 0,
    })
}

fn cmd_table1() -> Result<Outcome> {
    let table = table1::regenerate()?;
    let ok = table.matches_golden();
    let diff: Vec<Value> = table
        .diff()
        .into_iter()
        .map(|(line, golden, ours)| json!({ "line": line, "golden": golden, "regenerated": ours }))
        .collect();
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| json!({ "word": r.word, "w": r.w.to_string(), "clan": r.clan.to_string(), "c": r.constant }))
        .collect();
    let mut text = table.rendered.clone();
    for d in &diff {
        text.push_str(&format!(
            "DIFF line {}: golden {:?} regenerated {:?}\n",
            d["line"], d["golden"], d["regenerated"]
        ));
    }
    text.push_str(if ok { "verdict\tidentical\n" } else { "verdict\tdiffers\n" });
    Ok(Outcome {
        report: RunReport {
            command: "table1",
            inputs: json!({ "x": table1::X, "y": table1::Y, "p": table1::P }),
            output: json!({ "start": table.start.to_string(), "rows": rows }),
            verdict: Some(json!({
                "status": if ok { "identical" } else { "differs" },
                "covers_all_elements": table.covers_all_elements,
                "word_independent": table.word_independent,
                "diff": diff,
            })),
        },
        text,
        ok,
    })
}

fn cmd_oracle_product(x: &Permutation, y: &Permutation, all_terms: bool) -> Result<Outcome> {
    if x.degree() != y.degree() {
        bail!("x and y must have the same degree ({} vs {})", x.degree(), y.degree());
    }
    let mut oracle = SchubertOracle::new();
    let expansion = if all_terms {
        oracle.product(x, y)?
    } else {
        oracle.product_in_sn(x, y)?
    };
    let record = ExpansionRecord::new(x, y, None, &expansion)?;
    Ok(Outcome {
        report: RunReport {
            command: "oracle-product",
            inputs: json!({ "x": x.to_string(), "y": y.to_string(), "all_terms": all_terms }),
            output: serde_json::to_value(&record)?,
            verdict: None,
        },
        text: terms_text(&record),
        ok: true,
    })
}
