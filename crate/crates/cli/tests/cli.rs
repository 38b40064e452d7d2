use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use k5list::generate::{apollonian, random_instance, BoundaryMode};
use k5list::Graph;
use k5list_cli::document::{parse_coloring, InstanceDocument};
use proptest::prelude::*;
use tempfile::TempDir;

fn k5list(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k5list"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIANGLE: &str = r#"{
  "vertices": [0, 1, 2],
  "edges": [[0, 1], [1, 2], [2, 0]],
  "lists": {"0": [1], "1": [2], "2": [1, 2, 3]},
  "A": [0, 1],
  "B": [0, 1, 2]
}"#;

const K5: &str = r#"{"vertices": [0, 1, 2, 3, 4],
  "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;

#[test]
fn colors_the_triangle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "triangle.json", TRIANGLE);
    let o = k5list(&["color", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0:1\n1:2\n2:3\n");
    let o = k5list(&["color", s(&f), "--json", "--deep-validate"]);
    assert_eq!(stdout(&o), "{\"coloring\":{\"0\":1,\"1\":2,\"2\":3}}\n");
}

#[test]
fn minor_reports_k5() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k5.json", K5);
    let o = k5list(&["minor", s(&f)]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "k5-minor: yes\n")
    );
    let f = write(&dir, "t.json", TRIANGLE);
    assert_eq!(stdout(&k5list(&["minor", s(&f)])), "k5-minor: no\n");
}

#[test]
fn verify_rejects_improper_coloring() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.json", TRIANGLE);
    let bad = write(
        &dir,
        "bad.json",
        r#"{"coloring": {"0": 1, "1": 2, "2": 2}}"#,
    );
    let o = k5list(&["verify", s(&g), s(&bad)]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("monochromatic"));
    let good = write(&dir, "good.txt", "0:1 1:2 2:3\n");
    assert_eq!(k5list(&["verify", s(&g), s(&good)]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let syntax = write(&dir, "syntax.json", "{\"vertices\": [0,\n  1,]}");
    let o = k5list(&["color", s(&syntax)]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("syntax.json:2:5"), "{err}");

    let loop_edge = write(&dir, "loop.json", r#"{"vertices": [0], "edges": [[0, 0]]}"#);
    assert_eq!(k5list(&["minor", s(&loop_edge)]).status.code(), Some(1));
    assert_eq!(
        k5list(&["color", "/nonexistent/x.json"]).status.code(),
        Some(1)
    );
    assert_eq!(k5list(&["no-such-command"]).status.code(), Some(1));

    // K5 with 5-lists is shallow-valid but not K5-minor-free
    let lists: Vec<String> = (0..5).map(|v| format!("\"{v}\": [1,2,3,4,5]")).collect();
    let k5 =
        K5.trim_end_matches('}').to_string() + &format!(", \"lists\": {{{}}}}}", lists.join(","));
    let k5 = write(&dir, "k5.json", &k5);
    assert_eq!(
        k5list(&["color", s(&k5), "--deep-validate"]).status.code(),
        Some(2)
    );
    // without deep validation the solver runs and hits a contradiction
    assert_eq!(k5list(&["color", s(&k5)]).status.code(), Some(3));

    let short = write(
        &dir,
        "short.json",
        r#"{"vertices": [0], "edges": [], "lists": {"0": [1, 2]}}"#,
    );
    assert_eq!(k5list(&["color", s(&short)]).status.code(), Some(2));

    let big: Vec<String> = (0..20).map(|v| v.to_string()).collect();
    let big = write(
        &dir,
        "big.json",
        &format!("{{\"vertices\": [{}], \"edges\": []}}", big.join(",")),
    );
    assert_eq!(k5list(&["minor", s(&big)]).status.code(), Some(4));
    assert_eq!(
        stdout(&k5list(&["minor", s(&big), "--max-order", "20"])),
        "k5-minor: no\n"
    );
}

#[test]
fn rooted_k3_with_witness() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "p.json",
        r#"{"vertices": [0, 1, 2, 3], "edges": [[0,1],[1,2],[2,3],[3,0]]}"#,
    );
    let o = k5list(&["rooted-k3", s(&path), "--roots", "0,1,2", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("rooted-k3: yes\n"));
    assert_eq!(text.lines().count(), 4);

    let star = write(
        &dir,
        "s.json",
        r#"{"vertices": [0, 1, 2, 3], "edges": [[0,1],[0,2],[0,3]]}"#,
    );
    assert_eq!(
        stdout(&k5list(&["rooted-k3", s(&star), "--roots", "1,2,3"])),
        "rooted-k3: no\n"
    );
    assert_eq!(
        k5list(&["rooted-k3", s(&star), "--roots", "1,2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        k5list(&["rooted-k3", s(&star), "--roots", "1,2,9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn generated_instances_color_and_verify() {
    let dir = TempDir::new().unwrap();
    for seed in 0..12 {
        for (kind, mode) in [
            ("apollonian", None),
            ("instance", Some("empty")),
            ("instance", Some("neighborhood")),
        ] {
            let n = (4 + seed % 9).to_string();
            let seed_s = seed.to_string();
            let mut args = vec!["gen", kind, "--n", &n, "--seed", &seed_s];
            if let Some(m) = mode {
                args.extend(["--mode", m]);
            }
            let o = k5list(&args);
            assert_eq!(o.status.code(), Some(0));
            let inst = write(&dir, "i.json", &stdout(&o));
            InstanceDocument::parse(&stdout(&o))
                .unwrap()
                .instance()
                .unwrap();
            for json in [false, true] {
                let mut args = vec!["color", s(&inst), "--deep-validate"];
                if json {
                    args.push("--json");
                }
                let o = k5list(&args);
                assert_eq!(o.status.code(), Some(0));
                parse_coloring(&stdout(&o)).unwrap();
                let col = write(&dir, "c.txt", &stdout(&o));
                assert_eq!(
                    k5list(&["verify", s(&inst), s(&col)]).status.code(),
                    Some(0)
                );
            }
        }
    }
}

#[test]
fn gen_is_deterministic() {
    let a = k5list(&["gen", "instance", "--n", "10", "--seed", "7"]);
    let b = k5list(&["gen", "instance", "--n", "10", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let expected = random_instance(
        &apollonian(10, 7).unwrap(),
        BoundaryMode::VertexNeighborhood,
        8,
        7,
    )
    .unwrap();
    let doc = InstanceDocument::parse(&stdout(&a)).unwrap();
    assert_eq!(doc.instance().unwrap(), expected);
}

#[test]
fn selftest_passes() {
    let o = k5list(&["selftest", "--max-n", "4", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 5);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}

fn instance_strategy() -> impl Strategy<Value = InstanceDocument> {
    (3usize..14, any::<u64>(), 5u32..10, prop::bool::ANY).prop_map(|(n, seed, palette, nbhd)| {
        let mode = if nbhd {
            BoundaryMode::VertexNeighborhood
        } else {
            BoundaryMode::Empty
        };
        let g = apollonian(n, seed).unwrap();
        InstanceDocument::from_instance(&random_instance(&g, mode, palette, seed).unwrap())
    })
}

proptest! {
    #[test]
    fn document_round_trip(doc in instance_strategy()) {
        let text = doc.to_json();
        let back = InstanceDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        let inst = back.instance().unwrap();
        prop_assert_eq!(InstanceDocument::from_instance(&inst), doc);
    }

    #[test]
    fn arbitrary_graph_round_trip(
        ids in prop::collection::btree_set(0u32..1000, 1..12),
        picks in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..30),
    ) {
        let ids: Vec<u32> = ids.into_iter().collect();
        let edges = picks.iter().map(|(a, b)| (*a.get(&ids), *b.get(&ids))).filter(|(u, v)| u != v);
        let g = Graph::from_parts(ids.iter().copied(), edges).unwrap();
        let inst = k5list::Instance::unbounded(g, Default::default());
        let doc = InstanceDocument::from_instance(&inst);
        let back = InstanceDocument::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(back.instance().unwrap(), inst);
    }
}
