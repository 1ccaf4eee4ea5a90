//! Command implementations. Each writes its result to `out`.

use std::io::Write;
use std::path::PathBuf;

use primegraph::census::{count_almost_simple, enumerate_simple, f_bound, order_of_with, out_structure, count_out_subgroups, CensusError};
use primegraph::data::DATA_FILES;
use primegraph::elemgraph::{build, classify_eppo, eppo_equivalence, gk_from_clique_sizes, ElementGraphError, GraphKind};
use primegraph::graph::{gk_from_spectrum, GraphError, LabeledGraph};
use primegraph::group::{core_p, GroupError, Spectrum};
use primegraph::numtheory::{is_prime_u64, FactorCache};
use primegraph::recognize::analyze;
use primegraph::tables::{e8_adjacent, gk_e8, verify_tables, TableError};

use crate::acceptance;
use crate::cache::{cache_key, default_cache_dir, SpectrumCache};
use crate::groupref::GroupRef;
use crate::{Cli, Command, Format, GlobalArgs, EXIT_FAILED, EXIT_USAGE};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0} (raise the limit with --cap)")]
    Cap(GroupError),
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error("{0}")]
    Unclassifiable(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// 1 for results that contradict a known classification, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unclassifiable(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } => CliError::Cap(e),
            e => CliError::Group(e),
        }
    }
}

impl From<ElementGraphError> for CliError {
    fn from(e: ElementGraphError) -> Self {
        match e {
            ElementGraphError::Group(g) => g.into(),
            e @ ElementGraphError::Unclassifiable { .. } => CliError::Unclassifiable(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs a parsed command; `Ok(false)` means a verification failed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let g = &cli.global;
    let text = match &cli.command {
        Command::Spectrum { group } => spectrum_cmd(group, g)?,
        Command::Gk { group } => gk_cmd(group, g)?,
        Command::Eppo { group } => eppo_cmd(group, g)?,
        Command::Elemgraph { kind, group, export, max_vertices, cliques } => {
            elemgraph_cmd(kind, group, *export, *max_vertices, *cliques, g)?
        }
        Command::Census { primes } => census_cmd(&parse_primes(primes)?, g)?,
        Command::Almost { primes } => almost_cmd(&parse_primes(primes)?, g)?,
        Command::E8 { q, pair } => e8_cmd(*q, pair.as_deref(), g)?,
        Command::Analyze { file } => analyze_cmd(file, g)?,
        Command::Core { group, p } => core_cmd(group, *p, g)?,
        Command::Table { name } => table_cmd(name, g)?,
        Command::Verify { tables_only } => return verify_cmd(*tables_only, g, out),
    };
    write_out(out, &text)?;
    Ok(true)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn no_dot(g: &GlobalArgs) -> Result<()> {
    if g.format == Format::Dot {
        return Err(CliError::Usage("--format dot applies only to graphs".into()));
    }
    Ok(())
}

/// Accepts primes as separate arguments or comma-separated lists.
pub fn parse_primes(args: &[String]) -> Result<Vec<u64>> {
    let mut primes = Vec::new();
    for tok in args.iter().flat_map(|a| a.split([',', ' '])).filter(|t| !t.is_empty()) {
        let p: u64 = tok.parse().map_err(|_| CliError::Usage(format!("{tok:?} is not a number")))?;
        if !is_prime_u64(p) {
            return Err(CliError::Usage(format!("{p} is not a prime")));
        }
        primes.push(p);
    }
    if primes.is_empty() {
        return Err(CliError::Usage("no primes given".into()));
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

fn cache_root(g: &GlobalArgs) -> Option<PathBuf> {
    if g.no_cache {
        None
    } else {
        default_cache_dir()
    }
}

/// The spectrum, read from or written to the cache unless `--no-cache`.
pub fn cached_spectrum(gref: &GroupRef, g: &GlobalArgs) -> Result<Spectrum> {
    let cache = cache_root(g).and_then(|root| SpectrumCache::new(&root).ok());
    let key = cache_key(&gref.canonical_text());
    if let Some(s) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(s);
    }
    let s = gref.spectrum(g.cap)?;
    if let Some(c) = &cache {
        // A failed write only costs a recomputation later.
        let _ = c.put(&key, &s);
    }
    Ok(s)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn spectrum_cmd(group: &str, g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let gref = GroupRef::parse(group)?;
    let s = cached_spectrum(&gref, g)?;
    let primes = gk_from_spectrum(&s).vertices().to_vec();
    Ok(match g.format {
        Format::Kv => format!(
            "group_order={}\norders={}\nmaximal={}\nprimes={}\n",
            s.group_order(),
            join(s.orders(), ","),
            join(s.maximal_orders(), ","),
            join(primes, ",")
        ),
        _ => format!("order {}\nspectrum {}\n", s.group_order(), join(s.orders(), " ")),
    })
}

/// Renders a prime graph in the requested format.
pub fn graph_output(gk: &LabeledGraph, name: &str, format: Format) -> String {
    match format {
        Format::Text => gk.to_text(),
        Format::Dot => gk.to_dot(name),
        Format::Kv => format!(
            "vertices={}\nedges={}\ncomponents={}\n",
            join(gk.vertices(), ","),
            join(gk.edges().iter().map(|(a, b)| format!("{a}-{b}")), ","),
            gk.components().count()
        ),
    }
}

fn gk_cmd(group: &str, g: &GlobalArgs) -> Result<String> {
    let gref = GroupRef::parse(group)?;
    let s = cached_spectrum(&gref, g)?;
    Ok(graph_output(&gk_from_spectrum(&s), &gref.name(), g.format))
}

fn eppo_cmd(group: &str, g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let pg = GroupRef::parse(group)?.perm_group()?;
    let case = classify_eppo(&pg, g.cap)?;
    Ok(match g.format {
        Format::Kv => {
            let mut s = format!("case={}\n", case.tag.label());
            for d in &case.details {
                s.push_str(&format!("detail={d}\n"));
            }
            s
        }
        _ => format!("{case}\n"),
    })
}

fn elemgraph_cmd(kind: &str, group: &str, export: bool, max_vertices: usize, cliques: bool, g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let kind = GraphKind::parse(kind)
        .ok_or_else(|| CliError::Usage(format!("unknown graph kind {kind:?}; use power, enhanced_power or commuting")))?;
    let pg = GroupRef::parse(group)?.perm_group()?;
    let eg = build(kind, &pg, g.cap)?;
    let mut text = match g.format {
        Format::Kv => format!("kind={kind}\nvertices={}\nedges={}\n", eg.vertex_count(), eg.edge_count()),
        _ => format!("{}\n", eg.summary()),
    };
    if kind == GraphKind::Power {
        let eq = eppo_equivalence(&pg, g.cap)?;
        text.push_str(&format!("power_equals_enhanced {}\n", eq.power_equals_enhanced));
    }
    if cliques {
        if kind == GraphKind::Power {
            return Err(CliError::Usage("--cliques needs enhanced_power or commuting".into()));
        }
        text.push_str(&gk_from_clique_sizes(kind, &pg, g.cap)?.to_text());
    }
    if export {
        if eg.vertex_count() > max_vertices {
            return Err(CliError::Usage(format!(
                "{} vertices exceeds --max-vertices {max_vertices}",
                eg.vertex_count()
            )));
        }
        text.push_str(&eg.to_adjacency_text());
    }
    Ok(text)
}

fn factor_cache(g: &GlobalArgs) -> Option<FactorCache> {
    cache_root(g).and_then(|root| FactorCache::new(root.join("factors")).ok())
}

fn census_cmd(primes: &[u64], g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let cache = factor_cache(g);
    let ids = enumerate_simple(primes);
    let mut rows = Vec::new();
    for id in &ids {
        let order = order_of_with(id, cache.as_ref())?;
        let pi: Vec<u64> = order.primes_u64().unwrap_or_default();
        rows.push([
            id.to_string(),
            order.to_compact(),
            join(pi, ","),
            out_structure(id)?.order().to_string(),
            count_out_subgroups(id)?.to_string(),
        ]);
    }
    Ok(match g.format {
        Format::Kv => {
            let mut s = String::new();
            for r in &rows {
                s.push_str(&format!("id={} order={} pi={} out={} out_subgroups={}\n", r[0], r[1].replace(' ', "*"), r[2], r[3], r[4]));
            }
            s.push_str(&format!("count={}\n", rows.len()));
            s
        }
        _ => {
            let header = ["id", "order", "pi", "out", "out_subgroups"];
            let mut widths = header.map(str::len);
            for r in &rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: [&str; 5]| {
                let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            let mut s = line(header);
            for r in &rows {
                s.push_str(&line([&r[0], &r[1], &r[2], &r[3], &r[4]]));
            }
            s.push_str(&format!("count {}\n", rows.len()));
            s
        }
    })
}

fn almost_cmd(primes: &[u64], g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let c = count_almost_simple(primes);
    let bound = f_bound(primes.len() as u64);
    let mut s = String::new();
    for (id, n) in &c.per_socle {
        s.push_str(&match g.format {
            Format::Kv => format!("socle={id} count={n}\n"),
            _ => format!("{id} {n}\n"),
        });
    }
    s.push_str(&match g.format {
        Format::Kv => format!("total={}\nf_bound={bound}\n", c.total),
        _ => format!("total {}\nf_bound {bound}\n", c.total),
    });
    Ok(s)
}

fn e8_cmd(q: u64, pair: Option<&[u64]>, g: &GlobalArgs) -> Result<String> {
    if let Some(&[r, s]) = pair {
        no_dot(g)?;
        let adj = e8_adjacent(r, s, q)?;
        return Ok(match g.format {
            Format::Kv => format!("r={r}\ns={s}\nq={q}\nadjacent={adj}\n"),
            _ => format!("{}\n", if adj { "adjacent" } else { "not adjacent" }),
        });
    }
    Ok(graph_output(&gk_e8(q)?, &format!("E8({q})"), g.format))
}

fn analyze_cmd(file: &PathBuf, g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let text = std::fs::read_to_string(file).map_err(|source| CliError::Io { path: file.clone(), source })?;
    let graph = LabeledGraph::parse(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let v = analyze(&graph);
    Ok(match g.format {
        Format::Kv => v.to_key_value(),
        _ => v.to_string(),
    })
}

fn core_cmd(group: &str, p: u64, g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    if !is_prime_u64(p) {
        return Err(CliError::Usage(format!("{p} is not a prime")));
    }
    let pg = GroupRef::parse(group)?.perm_group()?;
    let core = core_p(&pg, p, g.cap, g.seed)?;
    Ok(match g.format {
        Format::Kv => format!("p={p}\norder={}\n", core.order()),
        _ => format!("O_{p} order {}\n{}", core.order(), core.to_generator_text()),
    })
}

fn table_cmd(name: &str, g: &GlobalArgs) -> Result<String> {
    no_dot(g)?;
    let file = DATA_FILES.iter().find(|d| d.name == name).ok_or_else(|| {
        CliError::Usage(format!("unknown data file {name:?}; known: {}", join(DATA_FILES.iter().map(|d| d.name), ", ")))
    })?;
    if !file.checksum_ok() {
        return Err(TableError::Checksum(file.path.to_string()).into());
    }
    Ok(file.text.to_string())
}

fn verify_cmd(tables_only: bool, g: &GlobalArgs, out: &mut dyn Write) -> Result<bool> {
    no_dot(g)?;
    let report = verify_tables(g.cap);
    write_out(out, &report.to_string())?;
    let mut passed = report.passed();
    if !tables_only {
        for c in acceptance::criteria() {
            let r = c.run();
            passed &= r.passed;
            write_out(out, &format!("{r}\n"))?;
        }
    }
    write_out(out, if passed { "verification passed\n" } else { "verification FAILED\n" })?;
    Ok(passed)
}
