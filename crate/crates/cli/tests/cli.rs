use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use itertools::Itertools;

fn reductlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reductlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("goldens")
            .join(name),
    )
    .unwrap()
}

type Edges = BTreeSet<(String, String)>;

/// Minimal DOT reader for the subset we emit: returns node ids with
/// labels and the edge set.
fn parse_dot(text: &str) -> (Vec<(String, String)>, Edges) {
    let mut lines = text.lines().map(str::trim);
    assert!(lines.next().unwrap().starts_with("digraph "));
    let mut nodes = Vec::new();
    let mut edges = BTreeSet::new();
    let mut closed = false;
    for line in lines {
        if line == "}" {
            closed = true;
            continue;
        }
        assert!(!closed, "content after closing brace");
        let body = line.strip_suffix(';').expect("statement ends with ;");
        if let Some((a, b)) = body.split_once(" -> ") {
            edges.insert((a.to_string(), b.to_string()));
        } else if let Some((id, rest)) = body.split_once(" [label=\"") {
            nodes.push((
                id.to_string(),
                rest.strip_suffix("\"]").unwrap().to_string(),
            ));
        } else {
            assert!(
                body.starts_with("rankdir=") || body.starts_with("node "),
                "{body}"
            );
        }
    }
    assert!(closed);
    for (a, b) in &edges {
        assert!(nodes.iter().any(|n| &n.0 == a) && nodes.iter().any(|n| &n.0 == b));
    }
    (nodes, edges)
}

#[test]
fn eval_prints_sorted_tuples() {
    let o = reductlab(&["eval", "between", "--linear", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2\n2 1 0\n");
    assert_eq!(
        stdout(&reductlab(&["eval", "equality", "--linear", "2"])),
        "0 0\n1 1\n"
    );
    let o = reductlab(&["eval", "succ_1", "--grid", "2x2"]);
    assert_eq!(stdout(&o), "0:0 0:1\n1:0 1:1\n");
}

#[test]
fn definable_answers() {
    assert_eq!(
        stdout(&reductlab(&["definable", "E", "B", "--linear", "5"])),
        "YES\n"
    );
    let o = reductlab(&["definable", "B", "C", "--linear", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "NO witness=[1 2 3 0] breaks=between tuple=(0 1 3)\n"
    );
}

#[test]
fn boundary_and_cap() {
    assert_eq!(
        stdout(&reductlab(&["boundary", "succ_1", "--grid", "3x8"])),
        "1\n"
    );
    let o = reductlab(&["boundary", "succ_1", "--grid", "3x8", "--boundary-cap", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "exceeds cap 0\n");
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["eval", "order", "--linear", "3"], 0),
        (&["aut", "cycle", "--order-only"], 0),
        (&["classify", "2,1,0", "--linear", "3"], 0),
        (&["lattice", "--set", "order"], 0),
        (&["eval", "nope"], 2),
        (&["eval", "codir_1"], 2),
        (&["lattice", "--set", "codir_1"], 2),
        (&["lattice"], 2),
        (&["lattice", "--figure", "3"], 2),
        (&["lattice", "--figure", "2", "--linear", "4"], 2),
        (&["classify", "0,0,1", "--linear", "3"], 2),
        (&["classify", "0,1", "--linear", "3"], 2),
        (&["eval", "order", "--workspace", "/nonexistent/ws.txt"], 2),
        (&["eval", "order", "--grid", "4by3"], 2),
        (&["frobnicate"], 2),
        (&["eval"], 2),
        (&["verify-paper", "--boundary-cap", "0"], 1),
        (
            &[
                "boundary",
                "codir_2",
                "--grid",
                "3x8",
                "--boundary-cap",
                "1",
            ],
            1,
        ),
    ];
    for (args, code) in cases {
        assert_eq!(reductlab(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn figure_outputs_match_goldens() {
    for (fig, file) in [("1", "fig1.dot"), ("2", "fig2.dot")] {
        let o = reductlab(&["lattice", "--figure", fig]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            stdout(&o),
            golden(file),
            "figure {fig} drifted from its golden"
        );
    }
}

#[test]
fn dot_edges_follow_the_diagram() {
    let (nodes, edges) = parse_dot(&golden("fig1.dot"));
    let label = |id: &str| nodes.iter().find(|n| n.0 == id).unwrap().1.clone();
    let named: BTreeSet<(String, String)> =
        edges.iter().map(|(a, b)| (label(a), label(b))).collect();
    let expected: BTreeSet<(String, String)> = [
        ("equality | order=720", "separation | order=12"),
        ("separation | order=12", "between | order=2"),
        ("separation | order=12", "cycle | order=6"),
        ("between | order=2", "order | order=1"),
        ("cycle | order=6", "order | order=1"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(named, expected);

    let (nodes, edges) = parse_dot(&golden("fig2.dot"));
    assert_eq!(nodes.len(), 7);
    let orders: Vec<&str> = nodes
        .iter()
        .map(|n| n.1.rsplit('=').next().unwrap())
        .collect();
    assert_eq!(orders, ["384", "48", "24", "8", "4", "2", "1"]);
    assert_eq!(edges.len(), 8);
}

#[test]
fn merged_nodes_and_single_set() {
    let o = reductlab(&[
        "lattice",
        "--set",
        "between",
        "--set",
        "equipollence",
        "--set",
        "order",
        "--linear",
        "5",
    ]);
    let (nodes, edges) = parse_dot(&stdout(&o));
    assert_eq!(nodes.len(), 2);
    assert_eq!(nodes[0].1, "between, equipollence | order=2");
    assert_eq!(edges.len(), 1);
    let (nodes, edges) = parse_dot(&stdout(&reductlab(&["lattice", "--set", "cycle"])));
    assert_eq!((nodes.len(), edges.len()), (1, 0));
}

#[test]
fn workspace_file_and_dot_out() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("ws.txt");
    std::fs::write(
        &ws,
        "# grid workspace\nstructure grid m=4 h=3\nrel A11 = preset codir n=1\nrel S = preset separation\n\
         rel N2 = formula \"N2(x,y) := exists z. A11(x,z,z,y)\"\n",
    )
    .unwrap();
    let ws = ws.to_str().unwrap();
    let o = reductlab(&["aut", "A11,S", "--order-only", "--workspace", ws]);
    assert_eq!(stdout(&o), "order=8\n");
    let o = reductlab(&["definable", "dist_2", "N2", "--workspace", ws]);
    assert_eq!(o.status.code(), Some(0));
    let out = dir.path().join("lat.dot");
    let o = reductlab(&[
        "lattice",
        "--set",
        "A11",
        "--set",
        "A11,S",
        "--workspace",
        ws,
        "--dot-out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let (nodes, edges) = parse_dot(&std::fs::read_to_string(&out).unwrap());
    assert_eq!((nodes.len(), edges.len()), (2, 1));

    std::fs::write(
        dir.path().join("bad.txt"),
        "structure linear n=4\nrel X = preset codir n=1\n",
    )
    .unwrap();
    let o = reductlab(&[
        "eval",
        "X",
        "--workspace",
        dir.path().join("bad.txt").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witness_and_classify_output() {
    let o = reductlab(&["witness", "codir_1", "succ_1", "--grid", "3x2"]);
    let text = stdout(&o);
    assert!(text.starts_with("relation=subset\n"), "{text}");
    assert!(text.contains("first-misses-second witness="));
    let o = reductlab(&["classify", "2,3,4,5,0,1", "--grid", "3x2"]);
    assert_eq!(
        stdout(&o),
        "systemic=true positive=true negative=false shift=false vertical_shift=false\ninitiation=[1 2 0]\n"
    );
    let o = reductlab(&["classify", "2", "3", "0", "1", "--linear", "4"]);
    assert!(stdout(&o).contains("section split=2 condition=(ii)"));
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [
        vec!["lattice", "--figure", "2"],
        vec!["aut", "codir_1", "--grid", "3x3"],
        vec!["witness", "separation", "cycle"],
    ] {
        let outs: Vec<Vec<u8>> = ["1", "3", "8"]
            .iter()
            .map(|j| {
                let mut a = args.clone();
                a.extend(["--jobs", j]);
                reductlab(&a).stdout
            })
            .collect();
        assert!(outs.iter().all_equal(), "{args:?}");
    }
}

#[test]
fn degenerate_grid_is_reported() {
    let o = reductlab(&["verify-paper", "--grid", "2x2"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("WARN degenerate grid G(2,2)"));
    assert!(text.contains("collapsed=codir_1=codir_1+separation,succ_1=codir_1+cycle"));
}
