//! Named graph constructions and the built-in certificate vectors, fixed in a
//! canonical labeling so that downstream edge indices are reproducible.
//!
//! Canonical labelings: `K5perp` has K4 on {1,2,3,4}, vertex 5 adjacent to
//! 1 and 2, vertex 6 adjacent to 3 and 4, distinguished edge e = (5,6).
//! `H10` glues a second copy (K4 on {7,8,9,10}, 5 adjacent to 7,8 and
//! 6 adjacent to 9,10) along e keeping e; `H10minus` deletes e; `H11`
//! subdivides e once through the fresh vertex 11.

use crate::graph::{cut_mask, Graph, GraphError};
use crate::linalg::{rat, Rat};
use num_traits::Zero;

fn kn(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i.to_string(), j.to_string()));
        }
    }
    Graph::from_owned_edges(&pairs).unwrap()
}

fn cn(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=n {
        let j = if i == n { 1 } else { i + 1 };
        pairs.push((i.to_string(), j.to_string()));
    }
    Graph::from_owned_edges(&pairs).unwrap()
}

/// Wheel: rim cycle 1..n plus hub 0 joined to every rim vertex.
fn wheel(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=n {
        let j = if i == n { 1 } else { i + 1 };
        pairs.push((i.to_string(), j.to_string()));
    }
    for i in 1..=n {
        pairs.push(("0".to_string(), i.to_string()));
    }
    Graph::from_owned_edges(&pairs).unwrap()
}

fn k5perp() -> Graph {
    Graph::build(&[
        ("1", "2"),
        ("1", "3"),
        ("1", "4"),
        ("2", "3"),
        ("2", "4"),
        ("3", "4"),
        ("1", "5"),
        ("2", "5"),
        ("3", "6"),
        ("4", "6"),
        ("5", "6"),
    ])
    .unwrap()
}

fn h10() -> Graph {
    Graph::build(&[
        ("1", "2"),
        ("1", "3"),
        ("1", "4"),
        ("2", "3"),
        ("2", "4"),
        ("3", "4"),
        ("1", "5"),
        ("2", "5"),
        ("3", "6"),
        ("4", "6"),
        ("5", "6"),
        ("7", "8"),
        ("7", "9"),
        ("7", "10"),
        ("8", "9"),
        ("8", "10"),
        ("9", "10"),
        ("5", "7"),
        ("5", "8"),
        ("6", "9"),
        ("6", "10"),
    ])
    .unwrap()
}

fn h10minus() -> Graph {
    let g = h10();
    let e = g.find_edge("5", "6").unwrap();
    g.delete_edge(e).unwrap()
}

fn h11() -> Graph {
    let g = h10();
    let e = g.find_edge("5", "6").unwrap();
    g.subdivide_edge(e, 1).unwrap()
}

fn k6_minus_e() -> Graph {
    let g = kn(6);
    let e = g.find_edge("5", "6").unwrap();
    g.delete_edge(e).unwrap()
}

fn petersen() -> Graph {
    let mut pairs = Vec::new();
    // Outer cycle 1..5, spokes, inner pentagram 6..10.
    for i in 1..=5u32 {
        let j = if i == 5 { 1 } else { i + 1 };
        pairs.push((i.to_string(), j.to_string()));
    }
    for i in 1..=5u32 {
        pairs.push((i.to_string(), (i + 5).to_string()));
    }
    for i in 1..=5u32 {
        let j = (i - 1 + 2) % 5 + 1;
        pairs.push(((i + 5).to_string(), (j + 5).to_string()));
    }
    Graph::from_owned_edges(&pairs).unwrap()
}

fn prism() -> Graph {
    Graph::build(&[
        ("1", "2"),
        ("2", "3"),
        ("1", "3"),
        ("4", "5"),
        ("5", "6"),
        ("4", "6"),
        ("1", "4"),
        ("2", "5"),
        ("3", "6"),
    ])
    .unwrap()
}

fn k33() -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=3u32 {
        for j in 4..=6u32 {
            pairs.push((i.to_string(), j.to_string()));
        }
    }
    Graph::from_owned_edges(&pairs).unwrap()
}

/// Dodecahedron from its LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
fn dodecahedron() -> Graph {
    const LCF: [i64; 10] = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4];
    let n = 20i64;
    let mut pairs = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        pairs.push(((i + 1).to_string(), (j + 1).to_string()));
    }
    for i in 0..n {
        let d = LCF[(i % 10) as usize];
        let j = (i + d).rem_euclid(n);
        if i < j {
            pairs.push(((i + 1).to_string(), (j + 1).to_string()));
        }
    }
    let g = Graph::from_owned_edges(&pairs).unwrap();
    debug_assert_eq!(g.edge_count(), 30);
    g
}

/// Canonical labeled instance of a catalog graph. Parametric families accept
/// `K<n>`, `C<n>` (n >= 3) and `W<n>` (wheel with an n-cycle rim, n >= 3).
pub fn named_graph(name: &str) -> Result<Graph, GraphError> {
    match name {
        "K4" => return Ok(kn(4)),
        "K5perp" => return Ok(k5perp()),
        "H10" => return Ok(h10()),
        "H10minus" => return Ok(h10minus()),
        "H11" => return Ok(h11()),
        "K6" => return Ok(kn(6)),
        "K6minusE" => return Ok(k6_minus_e()),
        "Petersen" => return Ok(petersen()),
        "Prism" => return Ok(prism()),
        "K33" => return Ok(k33()),
        "Dodecahedron" => return Ok(dodecahedron()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('K') {
        if let Ok(n) = rest.parse::<usize>() {
            if (1..=12).contains(&n) {
                return Ok(kn(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix('C') {
        if let Ok(n) = rest.parse::<usize>() {
            if (3..=30).contains(&n) {
                return Ok(cn(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix('W') {
        if let Ok(n) = rest.parse::<usize>() {
            if (3..=20).contains(&n) {
                return Ok(wheel(n));
            }
        }
    }
    Err(GraphError::UnknownName(name.to_string()))
}

pub const NAMED_GRAPHS: &[&str] = &[
    "K4", "K5", "K6", "K6minusE", "K5perp", "H10", "H10minus", "H11", "Petersen", "Prism",
    "K33", "Dodecahedron", "C<n>", "K<n>", "W<n>",
];

/// A built-in certificate vector, stored as the cut decomposition that
/// materializes it: x = coefficient * sum of delta(S) over the listed sets.
pub struct BuiltinVector {
    pub graph_name: &'static str,
    pub coefficient: Rat,
    pub generators: Vec<Vec<&'static str>>,
}

pub fn builtin_vector(name: &str) -> Option<BuiltinVector> {
    let half = rat(1, 2);
    match name {
        "k6e" => Some(BuiltinVector {
            graph_name: "K6minusE",
            coefficient: half,
            generators: vec![
                vec!["1", "4"],
                vec!["2", "4"],
                vec!["3", "4"],
                vec!["1", "4", "6"],
                vec!["2", "4", "6"],
                vec!["3", "4", "6"],
                vec!["6"],
            ],
        }),
        "h10minus" => Some(BuiltinVector {
            graph_name: "H10minus",
            coefficient: half,
            generators: vec![
                vec!["1", "4"],
                vec!["2", "3"],
                vec!["1", "3"],
                vec!["2", "4"],
                vec!["5", "7", "9"],
                vec!["5", "8", "10"],
                vec!["5", "7", "10"],
                vec!["5", "8", "9"],
            ],
        }),
        "h11" => Some(BuiltinVector {
            graph_name: "H11",
            coefficient: half,
            generators: vec![
                vec!["1", "4"],
                vec!["2", "3"],
                vec!["1", "3"],
                vec!["2", "4"],
                vec!["5", "7", "9"],
                vec!["5", "8", "10", "11"],
                vec!["5", "7", "10", "11"],
                vec!["5", "8", "9", "11"],
                vec!["11"],
            ],
        }),
        _ => None,
    }
}

impl BuiltinVector {
    /// Materializes the vector over the named graph's canonical edge order.
    pub fn materialize(&self) -> (Graph, Vec<Rat>) {
        let g = named_graph(self.graph_name).expect("builtin graph name is valid");
        let m = g.edge_count();
        let mut x = vec![Rat::zero(); m];
        for gen in &self.generators {
            let idx: Vec<usize> = gen
                .iter()
                .map(|l| g.vertex_index(l).expect("builtin generator label"))
                .collect();
            let mask = cut_mask(&g, &idx);
            for (i, xi) in x.iter_mut().enumerate() {
                if (mask >> i) & 1 == 1 {
                    *xi += &self.coefficient;
                }
            }
        }
        (g, x)
    }

    /// The generator sets as vertex-index sets of the materialized graph.
    pub fn generator_sets(&self, g: &Graph) -> Vec<Vec<usize>> {
        self.generators
            .iter()
            .map(|gen| {
                let mut v: Vec<usize> = gen
                    .iter()
                    .map(|l| g.vertex_index(l).expect("builtin generator label"))
                    .collect();
                v.sort_unstable();
                v
            })
            .collect()
    }
}
