//! Small named graphs and ideals shared by tests, benches, and docs.

use crate::graph::Graph;
use crate::monomial::{MonomialIdeal, VariableContext};
use crate::order::EdgeOrder;

/// Triangle a-b-d with a pendant c attached to b. Its edge ideal is
/// (ab, bc, ad, bd).
pub fn paw() -> Graph {
    Graph::parse_edge_list("a b\nb c\na d\nb d\n").unwrap()
}

/// The paw's edge ideal together with the base order ab > bc > ad > bd.
pub fn paw_ideal() -> (MonomialIdeal, EdgeOrder) {
    let (ideal, lines) = MonomialIdeal::parse_with_line_order("a*b\nb*c\na*d\nb*d\n").unwrap();
    let order = EdgeOrder::new(&ideal, lines).unwrap();
    (ideal, order)
}

/// Four-cycle y-v-z-w with a two-edge tail x-u hanging off y.
/// Edge ideal (xy, xu, yv, yw, wz, zv).
pub fn c4_with_tail() -> Graph {
    Graph::parse_edge_list("x y\nx u\ny v\ny w\nw z\nz v\n").unwrap()
}

/// Triangle x-y-z with pendants u, v on x and w on y.
/// Edge ideal (xy, xu, xv, xz, yz, yw).
pub fn triangle_with_pendants() -> Graph {
    Graph::parse_edge_list("x y\nx u\nx v\nx z\ny z\ny w\n").unwrap()
}

/// Hub w adjacent to z, y, x, s, plus edges x-y and t-x.
/// Edge ideal (zw, yw, xw, xy, tx, sw).
pub fn hub_with_pendants() -> Graph {
    Graph::parse_edge_list("z w\ny w\nx w\nx y\nt x\ns w\n").unwrap()
}

/// The 5-vertex cricket: triangle c-d-e with two pendants a, b on c.
pub fn cricket() -> Graph {
    Graph::parse_edge_list("a c\nb c\nc d\nc e\nd e\n").unwrap()
}

/// Cycle on n vertices labeled v0..v(n-1).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut text = String::new();
    for i in 0..n {
        text.push_str(&format!("v{} v{}\n", i, (i + 1) % n));
    }
    Graph::parse_edge_list(&text).unwrap()
}

/// Path on n vertices labeled v0..v(n-1).
pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::with_vertices(["v0"]).unwrap();
    }
    let mut text = String::new();
    for i in 0..n - 1 {
        text.push_str(&format!("v{} v{}\n", i, i + 1));
    }
    Graph::parse_edge_list(&text).unwrap()
}

/// Complete graph on n vertices labeled v0..v(n-1).
pub fn complete(n: usize) -> Graph {
    let mut text = String::new();
    for i in 0..n {
        for j in i + 1..n {
            text.push_str(&format!("v{i} v{j}\n"));
        }
    }
    Graph::parse_edge_list(&text).unwrap()
}

/// Star K_{1,n}: center c with leaves l1..ln.
pub fn star(n: usize) -> Graph {
    let mut text = String::new();
    for i in 1..=n {
        text.push_str(&format!("c l{i}\n"));
    }
    Graph::parse_edge_list(&text).unwrap()
}

/// Two disjoint edges: the minimal gap.
pub fn two_k2() -> Graph {
    Graph::parse_edge_list("a b\nc d\n").unwrap()
}

/// Triangle on x, y, z.
pub fn triangle() -> Graph {
    Graph::parse_edge_list("x y\ny z\nx z\n").unwrap()
}

/// Parses a context over single-letter variables, for test ideals.
pub fn ctx(names: &str) -> VariableContext {
    VariableContext::new(names.split_whitespace().map(String::from)).unwrap()
}
