use noverlap::io::{read_dot, read_json, read_paired_json, write_json};
use noverlap::{Embedding, Error, Node, Point, SizedGraph};
use proptest::prelude::*;

fn graph_and_layout() -> impl Strategy<Value = (SizedGraph, Embedding)> {
    (1usize..15)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(
                    ("[a-z][a-z0-9_ \"\\\\]{0,6}", 0.01..100.0f64, 0.01..100.0f64),
                    n,
                ),
                prop::collection::vec((any::<f64>(), any::<f64>()), n),
                prop::collection::vec((0..n, 0..n), 0..2 * n),
                "[a-z0-9-]{0,10}",
            )
        })
        .prop_filter_map("distinct ids", |(nodes, pos, edges, id)| {
            let mut ids: Vec<&String> = nodes.iter().map(|n| &n.0).collect();
            ids.sort();
            ids.dedup();
            if ids.len() != nodes.len() {
                return None;
            }
            let mut pairs: Vec<(usize, usize)> = edges
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            let g = SizedGraph::new(
                id,
                nodes
                    .iter()
                    .map(|(id, w, h)| Node::new(id.clone(), *w, *h))
                    .collect(),
                pairs
                    .iter()
                    .map(|&(a, b)| (nodes[a].0.clone(), nodes[b].0.clone())),
            )
            .ok()?;
            let pts = pos
                .into_iter()
                .map(|(x, y)| {
                    Point::new(
                        if x.is_finite() { x } else { 0.0 },
                        if y.is_finite() { y } else { 1.0 },
                    )
                })
                .collect();
            let e = Embedding::new(&g, pts).ok()?;
            Some((g, e))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn json_round_trips_exactly((g, e) in graph_and_layout()) {
        let text = write_json(&g, Some(&e)).unwrap();
        let (g2, e2) = read_json(&text).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(e2.as_ref(), Some(&e));
        prop_assert_eq!(write_json(&g2, e2.as_ref()).unwrap(), text);
    }

    #[test]
    fn json_without_positions_round_trips((g, _) in graph_and_layout()) {
        let text = write_json(&g, None).unwrap();
        let (g2, e2) = read_json(&text).unwrap();
        prop_assert_eq!(g2, g);
        prop_assert!(e2.is_none());
    }
}

#[test]
fn paired_documents() {
    let doc = r#"{
      "initial": {"nodes": [{"id": "a", "w": 1, "h": 1, "x": 0, "y": 0}, {"id": "b", "w": 1, "h": 1, "x": 0.5, "y": 0}], "edges": [["a", "b"]]},
      "adjusted": {"nodes": [{"id": "b", "w": 1, "h": 1, "x": 1, "y": 0}, {"id": "a", "w": 1, "h": 1, "x": 0, "y": 0}], "edges": [["b", "a"]]}
    }"#;
    let (g, a, b) = read_paired_json(doc).unwrap();
    assert_eq!(g.n(), 2);
    assert_eq!(a.get(1), Point::new(0.5, 0.0));
    assert_eq!(b.get(1), Point::new(1.0, 0.0));

    let mismatched = doc.replace(
        r#"{"id": "a", "w": 1, "h": 1, "x": 0, "y": 0}], "edges": [["b""#,
        r#"{"id": "c", "w": 1, "h": 1, "x": 0, "y": 0}], "edges": [["b""#,
    );
    assert!(read_paired_json(&mismatched).is_err());
}

#[test]
fn structural_errors_name_the_culprit() {
    let cases = [
        (r#"{"nodes": [{"id": "a", "w": 0, "h": 1}]}"#, "\"a\""),
        (
            r#"{"nodes": [{"id": "a", "w": 1, "h": 1}, {"id": "a", "w": 1, "h": 1}]}"#,
            "duplicate",
        ),
        (
            r#"{"nodes": [{"id": "a", "w": 1, "h": 1}], "edges": [["a", "z"]]}"#,
            "\"z\"",
        ),
        (
            r#"{"nodes": [{"id": "a", "w": 1, "h": 1}], "edges": [["a", "a"]]}"#,
            "self-loop",
        ),
        (
            r#"{"nodes": [{"id": "a", "w": 1, "h": 1, "x": 0, "y": 0}, {"id": "b", "w": 1, "h": 1}]}"#,
            "\"b\"",
        ),
    ];
    for (doc, needle) in cases {
        let msg = read_json(doc).unwrap_err().to_string();
        assert!(msg.contains(needle), "{msg}");
    }
    assert!(matches!(read_json("{"), Err(Error::Json(_))));
}

#[test]
fn dot_positions_and_sizes() {
    let text = r#"
        // exported layout
        strict digraph "g" {
          node [width=0.5];
          a [pos="10,20!", height=1];
          "b c" [pos="-5.5,0"];
          a -> "b c" -> d;
          d [pos="1,1" label="x" + "y"];
          a -> "b c";
        }"#;
    let (g, e) = read_dot(text).unwrap();
    assert_eq!(g.n(), 3);
    assert_eq!(g.m(), 2);
    let a = g.index_of("a").unwrap();
    assert_eq!(g.nodes()[a].width, 36.0);
    assert_eq!(g.nodes()[a].height, 72.0);
    assert_eq!(e.get(a), Point::new(10.0, 20.0));
    assert_eq!(e.get(g.index_of("b c").unwrap()), Point::new(-5.5, 0.0));

    let err = read_dot("graph { a [pos=\"0,0\"]; b }").unwrap_err();
    assert!(
        matches!(err, Error::MissingPosition(ref id) if id == "b"),
        "{err}"
    );
    let err = read_dot("graph {\n  a [pos=\"0,0\"\n").unwrap_err();
    assert!(
        matches!(err, Error::Dot { line: 3, .. } | Error::Dot { line: 2, .. }),
        "{err}"
    );
}
