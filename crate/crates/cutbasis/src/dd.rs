//! Double description: converts a generator description of a pointed cone
//! into its irredundant facet description, all in exact integer arithmetic.
//!
//! The polar cone {y : g·y >= 0 for all generators g} is built by inserting
//! the generators as halfspaces one at a time in canonical order, tracking a
//! lineality basis until the cone goes pointed. Ray-pair adjacency is decided
//! by an exact rank test on the tight generator set, never by a combinatorial
//! heuristic. Extreme rays of the polar are exactly the facet normals; any
//! lineality remaining at the end yields span equations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone)]
pub struct DdOutput {
    /// Facet normals a with a·g >= 0 for every generator; coprime integers.
    pub facets: Vec<Vec<BigInt>>,
    /// Basis of span(generators)^perp; nonempty only for lower-dimensional
    /// cones. Each equation e satisfies e·g = 0 for all generators.
    pub equations: Vec<Vec<BigInt>>,
    /// For each facet, the indices of generators lying on it.
    pub tight_generators: Vec<Vec<usize>>,
}

struct Ray {
    v: Vec<BigInt>,
    /// Bitmask over processed generator indices with g·v == 0.
    zero_set: u128,
}

fn dot(a: &[BigInt], b: &[i64]) -> BigInt {
    let mut s = BigInt::zero();
    for (x, &y) in a.iter().zip(b) {
        if y != 0 && !x.is_zero() {
            s += x * y;
        }
    }
    s
}

fn reduce(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g > BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Computes the facet description of cone(generators) in R^dim.
/// Generators are integer vectors (rows); at most 128 of them.
pub fn facet_description(generators: &[Vec<i64>], dim: usize) -> DdOutput {
    assert!(generators.len() <= 128, "too many generators for DD");
    // Lineality basis of the polar starts as the identity.
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| BigInt::from((i == j) as i64))
                .collect()
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (gi, g) in generators.iter().enumerate() {
        // First reduce against the lineality space.
        let vals: Vec<BigInt> = lineality.iter().map(|l| dot(l, g)).collect();
        if let Some(pos) = vals.iter().position(|v| !v.is_zero()) {
            let mut pivot = lineality.remove(pos);
            let mut pivot_val = vals[pos].clone();
            if pivot_val.is_negative() {
                for x in pivot.iter_mut() {
                    *x = -x.clone();
                }
                pivot_val = -pivot_val;
            }
            // Project the remaining lineality vectors onto g = 0.
            for (k, l) in lineality.iter_mut().enumerate() {
                let idx = if k < pos { k } else { k + 1 };
                let lv = &vals[idx];
                if lv.is_zero() {
                    continue;
                }
                for (x, p) in l.iter_mut().zip(&pivot) {
                    *x = &*x * &pivot_val - lv * p;
                }
                reduce(l);
            }
            // Project existing rays onto g = 0 as well.
            for r in rays.iter_mut() {
                let rv = dot(&r.v, g);
                if rv.is_zero() {
                    r.zero_set |= 1 << gi;
                    continue;
                }
                for (x, p) in r.v.iter_mut().zip(&pivot) {
                    *x = &*x * &pivot_val - &rv * p;
                }
                reduce(&mut r.v);
                r.zero_set |= 1 << gi;
            }
            // The pivot itself becomes the ray on the positive side.
            let mut zero_set = 0u128;
            for (pj, pg) in generators.iter().enumerate().take(gi) {
                if dot(&pivot, pg).is_zero() {
                    zero_set |= 1 << pj;
                }
            }
            rays.push(Ray { v: pivot, zero_set });
            continue;
        }

        // Pointed-part insertion: split rays by sign against g.
        let mut plus: Vec<usize> = Vec::new();
        let mut minus: Vec<usize> = Vec::new();
        let mut values: Vec<BigInt> = Vec::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            let v = dot(&r.v, g);
            match v.sign() {
                num_bigint::Sign::Plus => plus.push(i),
                num_bigint::Sign::Minus => minus.push(i),
                num_bigint::Sign::NoSign => {}
            }
            values.push(v);
        }
        if minus.is_empty() {
            for r in rays.iter_mut() {
                if dot(&r.v, g).is_zero() {
                    r.zero_set |= 1 << gi;
                }
            }
            continue;
        }
        let needed_rank = dim - lineality.len();
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &plus {
            for &m in &minus {
                let common = rays[p].zero_set & rays[m].zero_set;
                // Cheap cardinality filter before the exact rank test.
                if needed_rank >= 2 && (common.count_ones() as usize) < needed_rank - 2 {
                    continue;
                }
                if !adjacent(generators, common, needed_rank) {
                    continue;
                }
                let vp = &values[p];
                let vm = &values[m];
                // vp * r_m - vm * r_p lies on g = 0 and inside the cone.
                let mut v: Vec<BigInt> = rays[p].v.iter().zip(&rays[m].v).map(|(a, b)| {
                    vp * b - vm * a
                }).collect();
                reduce(&mut v);
                let zero_set = (common) | (1 << gi);
                new_rays.push(Ray { v, zero_set });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, r) in rays.drain(..).enumerate() {
            if values[i].is_negative() {
                continue;
            }
            let mut r = r;
            if values[i].is_zero() {
                r.zero_set |= 1 << gi;
            }
            kept.push(r);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    // Canonicalize ray representatives against any remaining lineality: the
    // cut cones handled here are full-dimensional, so this is normally empty.
    let mut facets: Vec<Vec<BigInt>> = Vec::new();
    let mut tight: Vec<Vec<usize>> = Vec::new();
    for r in &rays {
        let mut v = r.v.clone();
        reduce(&mut v);
        let t: Vec<usize> = (0..generators.len())
            .filter(|&j| (r.zero_set >> j) & 1 == 1)
            .collect();
        facets.push(v);
        tight.push(t);
    }
    // Deterministic output order: lexicographic on coefficient vectors.
    let mut order: Vec<usize> = (0..facets.len()).collect();
    order.sort_by(|&i, &j| facets[i].cmp(&facets[j]));
    let facets: Vec<Vec<BigInt>> = order.iter().map(|&i| facets[i].clone()).collect();
    let tight: Vec<Vec<usize>> = order.iter().map(|&i| tight[i].clone()).collect();

    let mut equations = lineality;
    for e in equations.iter_mut() {
        reduce(e);
        if e.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in e.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    equations.sort();

    DdOutput {
        facets,
        equations,
        tight_generators: tight,
    }
}

/// Exact adjacency: the generators tight at both rays must have rank
/// `needed_rank - 2`.
fn adjacent(generators: &[Vec<i64>], common: u128, needed_rank: usize) -> bool {
    if needed_rank < 2 {
        return false;
    }
    let rows: Vec<Vec<i64>> = (0..generators.len())
        .filter(|&j| (common >> j) & 1 == 1)
        .map(|j| generators[j].clone())
        .collect();
    if rows.len() < needed_rank - 2 {
        return false;
    }
    crate::linalg::int_rank_i64(&rows) == needed_rank - 2
}
