use std::path::PathBuf;

use primegraph_cli::cache::{cache_key, CacheEntry, SpectrumCache, VERSION};
use primegraph_cli::groupref::GroupRef;
use primegraph_cli::run;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["primegraph"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn graph_file(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "graphs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn gk_of_a5_has_no_edges() {
    assert_eq!(exec(&["gk", "A5", "--no-cache"]), (0, "vertices 2 3 5\n".into(), String::new()));
}

#[test]
fn spectrum_formats() {
    let (code, out, _) = exec(&["spectrum", "A5", "--no-cache"]);
    assert_eq!(code, 0);
    assert_eq!(out, "order 60\nspectrum 1 2 3 5\n");
    let (_, kv, _) = exec(&["spectrum", "S4", "--no-cache", "--format", "kv"]);
    assert_eq!(kv, "group_order=24\norders=1,2,3,4\nmaximal=3,4\nprimes=2,3\n");
}

#[test]
fn products_and_natural_modules() {
    let (_, out, _) = exec(&["gk", "A5xC2", "--no-cache"]);
    assert_eq!(out, "vertices 2 3 5\nedge 2 3\nedge 2 5\n");
    let (_, out, _) = exec(&["gk", "nat:SL2(8)", "--no-cache"]);
    assert_eq!(out, "vertices 2 3 7\n");
}

#[test]
fn analyze_a10_graph_file() {
    let (code, out, _) = exec(&["analyze", &graph_file("a10.gkg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("status: UNRECOGNIZABLE\n"), "{out}");
    let (_, kv, _) = exec(&["analyze", &graph_file("2g2_27.gkg"), "--format", "kv"]);
    assert!(kv.contains("status=SPECIAL_IDENTIFIED\nidentification=2G2(27)\n"), "{kv}");
}

#[test]
fn graph_files_match_computed_graphs() {
    for (file, args) in [("a10.gkg", vec!["gk", "A10"]), ("aut_j2.gkg", vec!["gk", "J2.2"]), ("e8_2.gkg", vec!["e8", "2"])] {
        let mut args = args;
        args.push("--no-cache");
        let (_, out, _) = exec(&args);
        assert_eq!(out, std::fs::read_to_string(graph_file(file)).unwrap(), "{file}");
    }
}

#[test]
fn census_and_almost() {
    let (code, out, _) = exec(&["census", "2,3,5", "--no-cache"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = out.lines().skip(1).filter_map(|l| l.split_whitespace().next()).collect();
    assert_eq!(ids, ["Alt(5)", "Alt(6)", "2A3(2)", "count"]);
    let (_, out, _) = exec(&["almost", "2", "3", "5", "--no-cache"]);
    assert!(out.contains("total 9\n"), "{out}");
    let (_, out, _) = exec(&["census", "2", "3", "--no-cache", "--format", "kv"]);
    assert_eq!(out, "count=0\n");
}

#[test]
fn e8_pairs() {
    assert_eq!(exec(&["e8", "2", "--pair", "2", "3"]).1, "adjacent\n");
    assert_eq!(exec(&["e8", "2", "--pair", "2", "151"]).1, "not adjacent\n");
    assert_eq!(exec(&["e8", "3", "--pair", "2", "3"]).0, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exec(&["frobnicate"]).0, 2);
    assert_eq!(exec(&["gk", "Q8", "--no-cache"]).0, 2);
    assert_eq!(exec(&["census", "4"]).0, 2);
    assert_eq!(exec(&["spectrum", "A5", "--format", "dot"]).0, 2);
    assert_eq!(exec(&["elemgraph", "weird", "A5"]).0, 2);
    let (code, _, err) = exec(&["spectrum", "A8", "--cap", "100", "--no-cache"]);
    assert_eq!(code, 2);
    assert!(err.contains("--cap"), "{err}");
    let (code, _, err) = exec(&["analyze", "/nonexistent/graph.gkg"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/graph.gkg"), "{err}");
}

#[test]
fn parse_errors_report_lines() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gkg");
    std::fs::write(&bad, "vertices 2 3 5\nedge 2 4\n").unwrap();
    let (code, _, err) = exec(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2") || err.contains('4'), "{err}");
    let gens = dir.path().join("bad.gens");
    std::fs::write(&gens, "degree 3\n1 2 2\n").unwrap();
    let (code, _, err) = exec(&["gk", gens.to_str().unwrap(), "--no-cache"]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");
}

#[test]
fn generator_files_are_group_refs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.gens");
    std::fs::write(&path, GroupRef::parse("S3").unwrap().perm_group().unwrap().to_generator_text()).unwrap();
    let (_, out, _) = exec(&["spectrum", path.to_str().unwrap(), "--no-cache"]);
    assert_eq!(out, "order 6\nspectrum 1 2 3\n");
}

#[test]
fn verify_tables_only_passes() {
    let (code, out, _) = exec(&["verify", "--tables-only"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("verification passed\n"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [vec!["gk", "PSL2(7)", "--no-cache"], vec!["census", "2,3,7", "--no-cache"], vec!["eppo", "M10", "--no-cache"]] {
        assert_eq!(exec(&args), exec(&args));
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let gref = GroupRef::parse("PSL2(11)").unwrap();
    let computed = gref.spectrum(100_000).unwrap();
    let cache = SpectrumCache::new(dir.path()).unwrap();
    let key = cache_key(&gref.canonical_text());
    cache.put(&key, &computed).unwrap();
    let reloaded = cache.get(&key).unwrap();
    let entry = |s| CacheEntry { key: key.clone(), version: VERSION.into(), spectrum: s };
    assert_eq!(entry(reloaded).to_text(), entry(computed).to_text());
}
