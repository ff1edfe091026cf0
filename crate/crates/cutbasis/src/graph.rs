//! Immutable labeled multigraphs, edit operations, n-sum / n-clique-sum
//! composition, and enumeration of cuts, bonds and a cycle basis.
//!
//! Edge indices are stable: index `i` always refers to the i-th input edge.
//! Parallel edges are allowed; loops are rejected at construction (a loop is
//! never contained in any cut, so its coordinate would be structurally zero).

use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge ({0}, {0}) rejected")]
    LoopRejected(String),
    #[error("edge index {0} out of range (graph has {1} edges)")]
    BadIndex(usize, usize),
    #[error("subdivision count must be >= 1")]
    BadCount,
    #[error("shared vertices do not induce a clique in {0}")]
    NotAClique(String),
    #[error("shared vertex sets have different sizes or exceed 3")]
    SizeMismatch,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("unknown vertex label: {0}")]
    UnknownVertex(String),
}

/// Labeled multigraph with an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index_of: HashMap<String, usize>,
    /// Endpoint indices in input orientation (used for text round-trips).
    edges: Vec<(usize, usize)>,
}

/// Subset of a graph's vertices, stored as sorted vertex indices.
pub type VertexSet = Vec<usize>;

/// A cut: generator vertex set plus its 0/1 incidence vector, kept as an edge
/// bitmask (graphs at desk scale have fewer than 64 edges).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    /// Incidence bitmask over edge indices; bit i set iff edge i is in the cut.
    pub mask: u64,
    /// Canonical generator: the lexicographically smaller of S and V \ S.
    pub generator: VertexSet,
}

impl Cut {
    pub fn incidence(&self, num_edges: usize) -> Vec<u8> {
        (0..num_edges).map(|i| ((self.mask >> i) & 1) as u8).collect()
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

/// Edge index set forming the edge set of a cycle.
pub type Circuit = Vec<usize>;

pub const MAX_ENUM_VERTICES: usize = 20;
pub const MAX_EDGES: usize = 63;

impl Graph {
    /// Builds a graph from (label, label) pairs. Vertices appear in
    /// first-appearance order; edges keep input order.
    pub fn build(edge_list: &[(&str, &str)]) -> Result<Graph, GraphError> {
        let mut g = Graph {
            labels: Vec::new(),
            index_of: HashMap::new(),
            edges: Vec::new(),
        };
        for &(u, v) in edge_list {
            if u == v {
                return Err(GraphError::LoopRejected(u.to_string()));
            }
            let ui = g.intern(u);
            let vi = g.intern(v);
            g.edges.push((ui, vi));
        }
        Ok(g)
    }

    pub fn from_owned_edges(edge_list: &[(String, String)]) -> Result<Graph, GraphError> {
        let borrowed: Vec<(&str, &str)> =
            edge_list.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
        Graph::build(&borrowed)
    }

    /// Graph with the given isolated vertices and no edges beyond `edges`.
    pub fn with_vertices(labels: &[&str], edges: &[(&str, &str)]) -> Result<Graph, GraphError> {
        let mut g = Graph {
            labels: Vec::new(),
            index_of: HashMap::new(),
            edges: Vec::new(),
        };
        for &l in labels {
            g.intern(l);
        }
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopRejected(u.to_string()));
            }
            let ui = g.intern(u);
            let vi = g.intern(v);
            g.edges.push((ui, vi));
        }
        Ok(g)
    }

    fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index_of.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index_of.insert(label.to_string(), i);
        i
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index_of.get(label).copied()
    }

    /// Endpoints of edge i as vertex indices, input orientation.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self, i: usize) -> (&str, &str) {
        let (u, v) = self.edges[i];
        (&self.labels[u], &self.labels[v])
    }

    /// First edge index joining the two labels (either orientation).
    pub fn find_edge(&self, u: &str, v: &str) -> Option<usize> {
        let ui = self.vertex_index(u)?;
        let vi = self.vertex_index(v)?;
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (ui, vi) || (a, b) == (vi, ui))
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency sets as vertex bitmasks (requires < 64 vertices).
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.vertex_count()];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }

    /// Edge removed; isolated vertices retained; remaining edges keep order.
    pub fn delete_edge(&self, e: usize) -> Result<Graph, GraphError> {
        if e >= self.edges.len() {
            return Err(GraphError::BadIndex(e, self.edges.len()));
        }
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// Endpoints merged; the merged vertex keeps the smaller label of the two
    /// (by vertex index order). With `simplify`, loops and parallel duplicates
    /// are removed and isolated vertices dropped.
    pub fn contract_edge(&self, e: usize, simplify: bool) -> Result<Graph, GraphError> {
        if e >= self.edges.len() {
            return Err(GraphError::BadIndex(e, self.edges.len()));
        }
        let (u, v) = self.edges[e];
        let (keep, gone) = if u <= v { (u, v) } else { (v, u) };
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            let a2 = if a == gone { keep } else { a };
            let b2 = if b == gone { keep } else { b };
            if a2 == b2 {
                // Contraction loop; never carries cut information.
                if simplify {
                    continue;
                }
                // Unsimplified contraction still cannot keep loops (cuts never
                // contain them); drop and note: parallel edges are kept.
                continue;
            }
            pairs.push((self.labels[a2].clone(), self.labels[b2].clone()));
        }
        if simplify {
            let mut seen = std::collections::HashSet::new();
            pairs.retain(|(a, b)| {
                let key = if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                };
                seen.insert(key)
            });
            Graph::from_owned_edges(&pairs)
        } else {
            // Keep all original vertices except the merged-away one.
            let mut g = Graph {
                labels: Vec::new(),
                index_of: HashMap::new(),
                edges: Vec::new(),
            };
            for (i, l) in self.labels.iter().enumerate() {
                if i != gone {
                    g.intern(l);
                }
            }
            for (a, b) in &pairs {
                let ai = g.intern(a);
                let bi = g.intern(b);
                g.edges.push((ai, bi));
            }
            Ok(g)
        }
    }

    /// Edge replaced by a path of k+1 edges through k fresh vertices. The
    /// remaining edges keep relative order; path edges are appended at the end.
    pub fn subdivide_edge(&self, e: usize, k: usize) -> Result<Graph, GraphError> {
        if e >= self.edges.len() {
            return Err(GraphError::BadIndex(e, self.edges.len()));
        }
        if k < 1 {
            return Err(GraphError::BadCount);
        }
        let (u, v) = self.edges[e];
        let mut fresh = Vec::new();
        let mut counter = self.labels.len() + 1;
        while fresh.len() < k {
            let cand = counter.to_string();
            if self.index_of.contains_key(&cand) {
                counter += 1;
                continue;
            }
            fresh.push(cand);
            counter += 1;
        }
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            pairs.push((self.labels[a].clone(), self.labels[b].clone()));
        }
        let mut prev = self.labels[u].clone();
        for f in &fresh {
            pairs.push((prev.clone(), f.clone()));
            prev = f.clone();
        }
        pairs.push((prev, self.labels[v].clone()));
        Graph::from_owned_edges(&pairs)
    }

    /// Renames every vertex through the map (labels not present are kept).
    pub fn relabel(&self, map: &HashMap<String, String>) -> Graph {
        let pairs: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let la = &self.labels[a];
                let lb = &self.labels[b];
                (
                    map.get(la).cloned().unwrap_or_else(|| la.clone()),
                    map.get(lb).cloned().unwrap_or_else(|| lb.clone()),
                )
            })
            .collect();
        let mut g = Graph {
            labels: Vec::new(),
            index_of: HashMap::new(),
            edges: Vec::new(),
        };
        for l in &self.labels {
            let nl = map.get(l).cloned().unwrap_or_else(|| l.clone());
            g.intern(&nl);
        }
        for (a, b) in &pairs {
            let ai = g.intern(a);
            let bi = g.intern(b);
            g.edges.push((ai, bi));
        }
        g
    }

    /// Subgraph induced by the given vertex indices (edges keep order).
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let keep: std::collections::HashSet<usize> = vs.iter().copied().collect();
        let mut g = Graph {
            labels: Vec::new(),
            index_of: HashMap::new(),
            edges: Vec::new(),
        };
        for &v in vs {
            g.intern(&self.labels[v]);
        }
        for &(a, b) in &self.edges {
            if keep.contains(&a) && keep.contains(&b) {
                let ai = g.intern(&self.labels[a]);
                let bi = g.intern(&self.labels[b]);
                g.edges.push((ai, bi));
            }
        }
        g
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    /// n-sum: clique edges deleted from both copies.
    NSum,
    /// n-clique-sum: one copy of the clique edges kept.
    CliqueSum,
}

/// Glues `g1` and `g2` along shared vertices. `shared` maps labels of `g1` to
/// labels of `g2`; the shared vertices must induce a clique of equal size <= 3
/// in both graphs. The result uses `g1`'s labels for the shared vertices.
pub fn compose(
    g1: &Graph,
    g2: &Graph,
    shared: &[(&str, &str)],
    mode: SumMode,
) -> Result<Graph, GraphError> {
    let n = shared.len();
    if n > 3 {
        return Err(GraphError::SizeMismatch);
    }
    let mut idx1 = Vec::new();
    let mut idx2 = Vec::new();
    for &(a, b) in shared {
        idx1.push(g1.vertex_index(a).ok_or_else(|| GraphError::UnknownVertex(a.into()))?);
        idx2.push(g2.vertex_index(b).ok_or_else(|| GraphError::UnknownVertex(b.into()))?);
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g1.has_edge_between(idx1[i], idx1[j]) {
                return Err(GraphError::NotAClique("first graph".into()));
            }
            if !g2.has_edge_between(idx2[i], idx2[j]) {
                return Err(GraphError::NotAClique("second graph".into()));
            }
        }
    }
    let shared1: std::collections::HashSet<usize> = idx1.iter().copied().collect();
    let shared2: std::collections::HashSet<usize> = idx2.iter().copied().collect();
    let map2to1: HashMap<usize, &str> = idx2
        .iter()
        .zip(&idx1)
        .map(|(&b, &a)| (b, g1.label(a)))
        .collect();

    // Disambiguate g2's non-shared labels that clash with g1's labels.
    let mut rename2: HashMap<usize, String> = HashMap::new();
    for v in 0..g2.vertex_count() {
        if shared2.contains(&v) {
            continue;
        }
        let l = g2.label(v);
        if g1.vertex_index(l).is_some() {
            let mut k = 1;
            loop {
                let cand = format!("{l}'{k}");
                if g1.vertex_index(&cand).is_none()
                    && g2.vertex_index(&cand).is_none()
                    && !rename2.values().any(|x| x == &cand)
                {
                    rename2.insert(v, cand);
                    break;
                }
                k += 1;
            }
        }
    }
    let label2 = |v: usize| -> String {
        if let Some(l) = map2to1.get(&v) {
            (*l).to_string()
        } else if let Some(r) = rename2.get(&v) {
            r.clone()
        } else {
            g2.label(v).to_string()
        }
    };

    let keep_clique_edge = mode == SumMode::CliqueSum;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for &(a, b) in g1.edges() {
        let in_clique = shared1.contains(&a) && shared1.contains(&b);
        if in_clique && !keep_clique_edge {
            continue;
        }
        pairs.push((g1.label(a).to_string(), g1.label(b).to_string()));
    }
    for &(a, b) in g2.edges() {
        let in_clique = shared2.contains(&a) && shared2.contains(&b);
        if in_clique {
            // Keep exactly one copy (g1's) in clique-sum mode; none in n-sum.
            continue;
        }
        pairs.push((label2(a), label2(b)));
    }
    // Retain isolated shared vertices and any isolated originals.
    let mut g = Graph {
        labels: Vec::new(),
        index_of: HashMap::new(),
        edges: Vec::new(),
    };
    for v in 0..g1.vertex_count() {
        g.intern(g1.label(v));
    }
    for v in 0..g2.vertex_count() {
        if !shared2.contains(&v) {
            let l = label2(v);
            g.intern(&l);
        }
    }
    for (a, b) in &pairs {
        let ai = g.intern(a);
        let bi = g.intern(b);
        g.edges.push((ai, bi));
    }
    Ok(g)
}

/// Cut incidence bitmask generated by the vertex-index set `s`.
pub fn cut_mask(g: &Graph, s: &[usize]) -> u64 {
    let mut side = 0u64;
    for &v in s {
        side |= 1 << v;
    }
    let mut mask = 0u64;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if ((side >> a) & 1) != ((side >> b) & 1) {
            mask |= 1 << i;
        }
    }
    mask
}

fn canonical_generator(g: &Graph, side: u64) -> VertexSet {
    let n = g.vertex_count();
    let s: VertexSet = (0..n).filter(|&v| (side >> v) & 1 == 1).collect();
    let c: VertexSet = (0..n).filter(|&v| (side >> v) & 1 == 0).collect();
    if s <= c {
        s
    } else {
        c
    }
}

/// All distinct cuts (zero cut included), deduplicated under complementation
/// and equal incidence vectors, ordered lexicographically by incidence vector.
pub fn enumerate_cuts(g: &Graph) -> Result<Vec<Cut>, GraphError> {
    let n = g.vertex_count();
    if n > MAX_ENUM_VERTICES {
        return Err(GraphError::BudgetExceeded(format!(
            "{n} vertices exceeds the cut enumeration budget of {MAX_ENUM_VERTICES}"
        )));
    }
    if g.edge_count() > MAX_EDGES {
        return Err(GraphError::BudgetExceeded(format!(
            "{} edges exceeds the edge budget of {MAX_EDGES}",
            g.edge_count()
        )));
    }
    let mut best: HashMap<u64, u64> = HashMap::new(); // mask -> minimal side
    if n == 0 {
        return Ok(vec![Cut { mask: 0, generator: Vec::new() }]);
    }
    // Fix the highest vertex out of S to halve the enumeration.
    let limit: u64 = 1 << (n - 1);
    for side in 0..limit {
        let mask = cut_mask_side(g, side);
        best.entry(mask).or_insert(side);
    }
    let mut cuts: Vec<Cut> = best
        .into_iter()
        .map(|(mask, side)| {
            let gen1 = canonical_generator(g, side);
            Cut { mask, generator: gen1 }
        })
        .collect();
    cuts.sort_by(|a, b| incidence_lex(a.mask, g.edge_count()).cmp(&incidence_lex(b.mask, g.edge_count())));
    Ok(cuts)
}

fn cut_mask_side(g: &Graph, side: u64) -> u64 {
    let mut mask = 0u64;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if ((side >> a) & 1) != ((side >> b) & 1) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Key for lexicographic order on 0/1 incidence vectors read left to right.
fn incidence_lex(mask: u64, m: usize) -> u64 {
    let mut key = 0u64;
    for i in 0..m {
        key = (key << 1) | ((mask >> i) & 1);
    }
    key
}

fn connected_mask(adj: &[u64], within: u64) -> bool {
    if within == 0 {
        return true;
    }
    let start = within.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & within & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == within
}

/// Bonds: inclusionwise minimal nonempty cuts. A nonzero cut is a bond exactly
/// when, inside the component it touches, both sides induce connected
/// subgraphs.
pub fn enumerate_bonds(g: &Graph) -> Result<Vec<Cut>, GraphError> {
    let cuts = enumerate_cuts(g)?;
    let adj = g.adjacency_masks();
    let comps = components(g);
    let n = g.vertex_count();
    let mut out = Vec::new();
    for cut in cuts {
        if cut.mask == 0 {
            continue;
        }
        // Component spanned by the cut edges.
        let mut verts = 0u64;
        for i in 0..g.edge_count() {
            if (cut.mask >> i) & 1 == 1 {
                let (a, b) = g.edge(i);
                verts |= (1 << a) | (1 << b);
            }
        }
        let comp_ids: std::collections::HashSet<usize> = (0..n)
            .filter(|&v| (verts >> v) & 1 == 1)
            .map(|v| comps[v])
            .collect();
        if comp_ids.len() != 1 {
            continue;
        }
        let cid = *comp_ids.iter().next().unwrap();
        let comp_mask: u64 = (0..n).filter(|&v| comps[v] == cid).fold(0, |m, v| m | (1 << v));
        // The generator splits the touched component (cut edges cross there).
        let mut side = 0u64;
        for &v in &cut.generator {
            side |= 1 << v;
        }
        let s_in = side & comp_mask;
        let t_in = comp_mask & !s_in;
        if s_in == 0 || t_in == 0 {
            continue;
        }
        if connected_mask(&adj, s_in) && connected_mask(&adj, t_in) {
            out.push(cut);
        }
    }
    Ok(out)
}

/// Component id per vertex.
pub fn components(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency_masks();
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for v in 0..n {
        if comp[v] != usize::MAX {
            continue;
        }
        let mut stack = vec![v];
        comp[v] = c;
        while let Some(u) = stack.pop() {
            let mut nb = adj[u];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        c += 1;
    }
    comp
}

pub fn component_count(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    components(g).iter().max().map_or(0, |&m| m + 1)
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) <= 1
}

/// Fundamental circuits from a spanning forest; |E| - |V| + components many.
pub fn cycle_basis(g: &Graph) -> Vec<Circuit> {
    let n = g.vertex_count();
    // Spanning forest via union-find over edges in order.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut v = v;
        while parent[v] != r {
            let next = parent[v];
            parent[v] = r;
            v = next;
        }
        r
    }
    let mut tree_edges: Vec<usize> = Vec::new();
    let mut extra: Vec<usize> = Vec::new();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra == rb {
            extra.push(i);
        } else {
            parent[ra] = rb;
            tree_edges.push(i);
        }
    }
    // Tree adjacency for path finding.
    let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, edge)
    for &i in &tree_edges {
        let (a, b) = g.edge(i);
        tree_adj[a].push((b, i));
        tree_adj[b].push((a, i));
    }
    let mut out = Vec::new();
    for &i in &extra {
        let (a, b) = g.edge(i);
        // BFS path a -> b in the forest.
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(a);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &(w, e) in &tree_adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((u, e));
                    queue.push_back(w);
                }
            }
        }
        let mut circuit = vec![i];
        let mut v = b;
        while v != a {
            let (u, e) = prev[v].expect("path exists in spanning forest");
            circuit.push(e);
            v = u;
        }
        circuit.sort_unstable();
        debug_assert!(is_circuit(g, &circuit));
        out.push(circuit);
    }
    out
}

/// Checks that the edge set induces a connected 2-regular subgraph.
pub fn is_circuit(g: &Graph, edges: &[usize]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut deg: HashMap<usize, usize> = HashMap::new();
    for &i in edges {
        let (a, b) = g.edge(i);
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    if !deg.values().all(|&d| d == 2) {
        return false;
    }
    // Connectivity over the chosen edges.
    let verts: Vec<usize> = deg.keys().copied().collect();
    let mut seen: std::collections::HashSet<usize> = std::collections::HashSet::new();
    let mut stack = vec![verts[0]];
    seen.insert(verts[0]);
    while let Some(u) = stack.pop() {
        for &i in edges {
            let (a, b) = g.edge(i);
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == verts.len()
}

/// All circuits, enumerated as connected 2-regular members of the cycle space
/// (GF(2) combinations of the fundamental circuits). Full enumeration is
/// guaranteed for |E| <= 16; refuses when the cycle space is too large.
pub fn all_circuits(g: &Graph) -> Result<Vec<Circuit>, GraphError> {
    let basis = cycle_basis(g);
    let mu = basis.len();
    if mu > 20 {
        return Err(GraphError::BudgetExceeded(format!(
            "cycle space dimension {mu} exceeds the circuit enumeration budget"
        )));
    }
    let basis_masks: Vec<u64> = basis
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &i| m | (1 << i)))
        .collect();
    let mut out = Vec::new();
    for combo in 1u64..(1 << mu) {
        let mut mask = 0u64;
        let mut c = combo;
        while c != 0 {
            let j = c.trailing_zeros() as usize;
            c &= c - 1;
            mask ^= basis_masks[j];
        }
        if mask == 0 {
            continue;
        }
        let edges: Vec<usize> =
            (0..g.edge_count()).filter(|&i| (mask >> i) & 1 == 1).collect();
        if is_circuit(g, &edges) {
            out.push(edges);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub two_connected: bool,
    pub three_connected: bool,
}

/// Vertex-connectivity thresholds by exhaustive small-separator search.
pub fn connectivity_report(g: &Graph) -> ConnectivityReport {
    let n = g.vertex_count();
    let connected = n > 0 && is_connected(g);
    let two = connected && n >= 3 && cut_vertices(g).is_empty();
    let three = two && n >= 4 && two_separators(g).is_empty();
    ConnectivityReport {
        connected,
        two_connected: two,
        three_connected: three,
    }
}

/// All cut vertices (removal disconnects the remaining graph).
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let h = g.induced(&rest);
        if h.vertex_count() > 0 && !is_connected(&h) {
            out.push(v);
        }
    }
    out
}

/// All 2-element separators {u, v} of a 2-connected graph (sorted pairs).
pub fn two_separators(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
            if rest.is_empty() {
                continue;
            }
            let h = g.induced(&rest);
            if !is_connected(&h) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Vertex sets of size <= 3 inducing a clique whose removal disconnects the
/// graph, in lexicographic order by sorted index tuple.
pub fn clique_separators(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut out: Vec<VertexSet> = Vec::new();
    let mut push_if_sep = |sep: VertexSet, g: &Graph| {
        let rest: Vec<usize> = (0..n).filter(|v| !sep.contains(v)).collect();
        if rest.is_empty() {
            return;
        }
        let h = g.induced(&rest);
        if h.vertex_count() > 0 && !is_connected(&h) {
            out.push(sep);
        }
    };
    for u in 0..n {
        push_if_sep(vec![u], g);
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge_between(u, v) {
                push_if_sep(vec![u, v], g);
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if g.has_edge_between(u, v)
                    && g.has_edge_between(u, w)
                    && g.has_edge_between(v, w)
                {
                    push_if_sep(vec![u, v, w], g);
                }
            }
        }
    }
    out
}

/// Removes parallel duplicates and isolated vertices; keeps first occurrence
/// order of the surviving edges.
pub fn simplify(g: &Graph) -> Graph {
    let mut seen = std::collections::HashSet::new();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for &(a, b) in g.edges() {
        let key = (a.min(b), a.max(b));
        if seen.insert(key) {
            pairs.push((g.label(a).to_string(), g.label(b).to_string()));
        }
    }
    Graph::from_owned_edges(&pairs).expect("simplification preserves looplessness")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_empty_and_triangle() {
        let g = Graph::build(&[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        let k3 = Graph::build(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn build_rejects_loops_allows_parallels() {
        assert!(matches!(
            Graph::build(&[("a", "a")]),
            Err(GraphError::LoopRejected(_))
        ));
        let g = Graph::build(&[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn delete_edge_keeps_isolated_vertices() {
        let g = Graph::build(&[("a", "b")]).unwrap();
        let h = g.delete_edge(0).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 0);
        assert!(g.delete_edge(5).is_err());
    }

    #[test]
    fn contract_triangle_to_single_edge() {
        let k3 = Graph::build(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let h = k3.contract_edge(0, true).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn contract_w4_spoke_without_simplify_has_parallels() {
        // Wheel on 5 vertices: hub h, rim 1-2-3-4.
        let w4 = Graph::build(&[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "1"),
            ("h", "1"),
            ("h", "2"),
            ("h", "3"),
            ("h", "4"),
        ])
        .unwrap();
        let spoke = w4.find_edge("h", "1").unwrap();
        let c = w4.contract_edge(spoke, false).unwrap();
        assert!(!c.is_simple());
        // Brute-force incidence check: merged vertex has two edges each to the
        // rim neighbours of 1 and one to the opposite rim vertex.
        let merged = c.vertex_index("1").or(c.vertex_index("h")).unwrap();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &(a, b) in c.edges() {
            if a == merged || b == merged {
                let other = if a == merged { b } else { a };
                *counts.entry(other).or_insert(0) += 1;
            }
        }
        let mut mult: Vec<usize> = counts.values().copied().collect();
        mult.sort_unstable();
        assert_eq!(mult, vec![1, 2, 2]);
    }

    #[test]
    fn subdivide_k3_once_gives_c4() {
        let k3 = Graph::build(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let g = k3.subdivide_edge(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(cycle_basis(&g).len(), 1);
        assert!(g.subdivide_edge(0, 0).is_err());
    }

    #[test]
    fn cuts_of_k3() {
        let k3 = Graph::build(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let cuts = enumerate_cuts(&k3).unwrap();
        assert_eq!(cuts.len(), 4); // zero + 3
        let incidences: Vec<Vec<u8>> = cuts.iter().map(|c| c.incidence(3)).collect();
        assert!(incidences.contains(&vec![0, 0, 0]));
        assert!(incidences.contains(&vec![1, 1, 0]));
        assert!(incidences.contains(&vec![1, 0, 1]));
        assert!(incidences.contains(&vec![0, 1, 1]));
    }

    #[test]
    fn cut_count_is_2_pow_n_minus_1_for_connected() {
        let k4 = crate::catalog::named_graph("K4").unwrap();
        assert_eq!(enumerate_cuts(&k4).unwrap().len(), 8);
    }

    #[test]
    fn bonds_of_path_and_c4_and_k4() {
        let p = Graph::build(&[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(enumerate_bonds(&p).unwrap().len(), 2);
        let c4 = crate::catalog::named_graph("C4").unwrap();
        let bonds = enumerate_bonds(&c4).unwrap();
        assert_eq!(bonds.len(), 6);
        assert!(bonds.iter().all(|b| b.size() == 2));
        let k4 = crate::catalog::named_graph("K4").unwrap();
        assert_eq!(enumerate_bonds(&k4).unwrap().len(), 7);
    }

    #[test]
    fn bonds_are_the_minimal_nonzero_cuts() {
        // Independent oracle: minimality by pairwise support inclusion.
        for name in ["K4", "C5", "C6", "W4", "K5"] {
            let g = crate::catalog::named_graph(name).unwrap();
            let cuts = enumerate_cuts(&g).unwrap();
            let bonds = enumerate_bonds(&g).unwrap();
            let minimal: Vec<u64> = cuts
                .iter()
                .filter(|c| c.mask != 0)
                .filter(|c| {
                    !cuts.iter().any(|d| {
                        d.mask != 0 && d.mask != c.mask && (d.mask & c.mask) == d.mask
                    })
                })
                .map(|c| c.mask)
                .collect();
            let got: Vec<u64> = bonds.iter().map(|b| b.mask).collect();
            let mut minimal = minimal;
            let mut got = got;
            minimal.sort_unstable();
            got.sort_unstable();
            assert_eq!(got, minimal, "bond mismatch for {name}");
        }
    }

    #[test]
    fn every_nonzero_cut_peels_into_bonds() {
        // Greedy peeling on small instances.
        for name in ["K4", "C5", "W4"] {
            let g = crate::catalog::named_graph(name).unwrap();
            let cuts = enumerate_cuts(&g).unwrap();
            let bonds = enumerate_bonds(&g).unwrap();
            for c in cuts.iter().filter(|c| c.mask != 0) {
                let mut rest = c.mask;
                while rest != 0 {
                    let Some(b) = bonds.iter().find(|b| b.mask & rest == b.mask) else {
                        panic!("cut does not peel into bonds for {name}");
                    };
                    rest &= !b.mask;
                }
            }
        }
    }

    #[test]
    fn cycle_basis_counts() {
        let k5 = crate::catalog::named_graph("K5").unwrap();
        assert_eq!(cycle_basis(&k5).len(), 6);
        let forest = Graph::build(&[("a", "b"), ("c", "d")]).unwrap();
        assert!(cycle_basis(&forest).is_empty());
        let k6e = crate::catalog::named_graph("K6minusE").unwrap();
        assert_eq!(cycle_basis(&k6e).len(), 9);
    }

    #[test]
    fn cut_space_mod2_closure() {
        let g = crate::catalog::named_graph("W4").unwrap();
        let n = g.vertex_count();
        for s in 0u64..(1 << n) {
            for t in 0u64..(1 << n) {
                let ms = cut_mask_side(&g, s);
                let mt = cut_mask_side(&g, t);
                let mst = cut_mask_side(&g, s ^ t);
                assert_eq!(ms ^ mt, mst);
            }
        }
    }

    #[test]
    fn connectivity_thresholds() {
        let p3 = Graph::build(&[("a", "b"), ("b", "c")]).unwrap();
        let r = connectivity_report(&p3);
        assert!(r.connected && !r.two_connected);
        let k5p = crate::catalog::named_graph("K5perp").unwrap();
        assert!(connectivity_report(&k5p).three_connected);
        let h10m = crate::catalog::named_graph("H10minus").unwrap();
        let r = connectivity_report(&h10m);
        assert!(r.two_connected && !r.three_connected);
        let seps = two_separators(&h10m);
        let five = h10m.vertex_index("5").unwrap();
        let six = h10m.vertex_index("6").unwrap();
        assert!(seps.contains(&(five.min(six), five.max(six))));
    }

    #[test]
    fn compose_bowtie() {
        let k3a = Graph::build(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let k3b = Graph::build(&[("x", "y"), ("y", "z"), ("x", "z")]).unwrap();
        let bow = compose(&k3a, &k3b, &[("a", "x")], SumMode::CliqueSum).unwrap();
        assert_eq!(bow.vertex_count(), 5);
        assert_eq!(bow.edge_count(), 6);
    }

    #[test]
    fn subdividing_twice_equals_two_sum_with_c4() {
        let g = crate::catalog::named_graph("K4").unwrap();
        let f = 0;
        let sub = g.subdivide_edge(f, 2).unwrap();
        let (u, v) = g.edge_labels(f);
        let c4 = crate::catalog::named_graph("C4").unwrap();
        // C4 vertices 1-2-3-4; shared edge (1,2).
        let joined = compose(&g, &c4, &[(u, "1"), (v, "2")], SumMode::NSum).unwrap();
        assert!(crate::iso::are_isomorphic(&sub, &joined));
    }
}
