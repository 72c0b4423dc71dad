use bellgraph::generate::graphs_up_to;
use bellgraph::line_root::krausz_root_graph;
use bellgraph::verify::{is_line_graph_by_search, line_graph_codes};
use bellgraph::{is_isomorphic, normalize_ddagger, Error, Graph};

#[test]
fn round_trip_up_to_six_vertices() {
    for g in graphs_up_to(6).unwrap() {
        let l = g.line_graph().unwrap();
        let r = krausz_root_graph(&l).unwrap();
        assert!(
            is_isomorphic(&normalize_ddagger(&r), &normalize_ddagger(&g)),
            "{g:?}"
        );
    }
}

#[test]
fn recognition_matches_search() {
    let codes = line_graph_codes(6);
    for g in graphs_up_to(6).unwrap() {
        assert_eq!(
            krausz_root_graph(&g).is_ok(),
            is_line_graph_by_search(&g, &codes),
            "{g:?}"
        );
    }
}

#[test]
fn claw_is_not_a_line_graph() {
    assert_eq!(krausz_root_graph(&Graph::star(3)), Err(Error::NotLineGraph));
}

#[test]
fn triangle_root_is_normalized_to_a_claw() {
    let r = krausz_root_graph(&Graph::complete(3)).unwrap();
    assert!(is_isomorphic(&normalize_ddagger(&r), &Graph::star(3)));
}
