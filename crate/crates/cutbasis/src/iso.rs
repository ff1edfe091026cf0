//! Small-graph isomorphism by degree refinement plus backtracking. Intended
//! for catalog lookups and test oracles, not as a general service.

use crate::graph::Graph;
use std::collections::HashMap;

/// Multiset of edge multiplicities between vertex pairs, keyed by index pair.
fn multiplicity_map(g: &Graph) -> HashMap<(usize, usize), usize> {
    let mut m = HashMap::new();
    for &(a, b) in g.edges() {
        let key = (a.min(b), a.max(b));
        *m.entry(key).or_insert(0) += 1;
    }
    m
}

/// Finds a vertex bijection g -> h preserving edge multiplicities, if any.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mg = multiplicity_map(g);
    let mh = multiplicity_map(h);
    let mut dg: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut dh: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (&(a, b), &c) in &mg {
        dg[a].push(c);
        dg[b].push(c);
    }
    for (&(a, b), &c) in &mh {
        dh[a].push(c);
        dh[b].push(c);
    }
    for v in 0..n {
        dg[v].sort_unstable();
        dh[v].sort_unstable();
    }
    {
        let mut a: Vec<&Vec<usize>> = dg.iter().collect();
        let mut b: Vec<&Vec<usize>> = dh.iter().collect();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    // Order g's vertices by decreasing constraint (degree signature size).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| dg[b].len().cmp(&dg[a].len()).then(a.cmp(&b)));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        pos: usize,
        order: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<usize>,
        mg: &HashMap<(usize, usize), usize>,
        mh: &HashMap<(usize, usize), usize>,
        dg: &[Vec<usize>],
        dh: &[Vec<usize>],
        n: usize,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..n {
            if used[w] == 1 || dg[v] != dh[w] {
                continue;
            }
            // Check consistency with already-mapped vertices.
            let ok = order[..pos].iter().all(|&u| {
                let mu = map[u];
                let key_g = (u.min(v), u.max(v));
                let key_h = (mu.min(w), mu.max(w));
                mg.get(&key_g).copied().unwrap_or(0) == mh.get(&key_h).copied().unwrap_or(0)
            });
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = 1;
            if extend(pos + 1, order, map, used, mg, mh, dg, dh, n) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = 0;
        }
        false
    }

    let mut used_u: Vec<usize> = used.iter().map(|&b| b as usize).collect();
    if extend(0, &order, &mut map, &mut used_u, &mg, &mh, &dg, &dh, n) {
        Some(map)
    } else {
        None
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
