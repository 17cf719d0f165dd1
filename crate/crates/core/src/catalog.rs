//! Canonical catalogs of all small graphs up to isomorphism, by labeled
//! enumeration and canonical-form deduplication. Exhaustive sweeps in the
//! verification harness run over these.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::maybe_par_map_range;

/// Largest vertex count we enumerate exhaustively (n! * 2^(n(n-1)/2) work).
pub const MAX_CATALOG_N: usize = 6;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, &mut out);
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Applies a vertex permutation to an edge-bit code.
fn recode(code: u32, pairs: &[(usize, usize)], slot: &[Vec<usize>], perm: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut bits = code;
    while bits != 0 {
        let b = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = pairs[b];
        let (pi, pj) = (perm[i], perm[j]);
        let (lo, hi) = if pi < pj { (pi, pj) } else { (pj, pi) };
        out |= 1 << slot[lo][hi];
    }
    out
}

/// The minimum edge-bit code over all vertex permutations.
pub fn canonical_code(g: &Graph) -> u32 {
    let n = g.n();
    let pairs = pair_index(n);
    let mut slot = vec![vec![0usize; n]; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        slot[i][j] = b;
    }
    let mut code = 0u32;
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if g.has_edge(i, j) {
            code |= 1 << b;
        }
    }
    permutations(n)
        .iter()
        .map(|p| recode(code, &pairs, &slot, p))
        .min()
        .unwrap_or(code)
}

fn graph_from_code(n: usize, code: u32) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut g = Graph::with_vertices(labels).unwrap();
    for (b, (i, j)) in pair_index(n).into_iter().enumerate() {
        if code & (1 << b) != 0 {
            g.insert_edge(i, j).unwrap();
        }
    }
    g
}

/// All graphs on exactly `n` vertices up to isomorphism (including graphs
/// with isolated vertices), ordered by canonical code. A graph represents
/// its class iff its own code is already canonical, which makes the scan
/// embarrassingly parallel.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CATALOG_N {
        return Err(Error::TooManyVertices(n, MAX_CATALOG_N));
    }
    let m = n * (n - 1) / 2;
    let pairs = pair_index(n);
    let mut slot = vec![vec![0usize; n]; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        slot[i][j] = b;
    }
    let perms = permutations(n);
    let total = 1usize << m;
    const CHUNK: usize = 4096;
    let chunks = total.div_ceil(CHUNK);
    let found: Vec<Vec<u32>> = maybe_par_map_range(chunks, |c| {
        let mut keep = Vec::new();
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(total);
        'codes: for code in lo..hi {
            let code = code as u32;
            for p in &perms {
                if recode(code, &pairs, &slot, p) < code {
                    continue 'codes;
                }
            }
            keep.push(code);
        }
        keep
    });
    let mut codes: Vec<u32> = found.into_iter().flatten().collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// All graphs with 1..=n vertices up to isomorphism.
pub fn catalog_up_to(n: usize) -> Vec<Graph> {
    (1..=n.min(MAX_CATALOG_N))
        .flat_map(|k| all_graphs(k).expect("k is within the catalog cap"))
        .collect()
}

/// Catalog entries with at least one edge (the ones with an edge ideal).
pub fn catalog_with_edges(n: usize) -> Vec<Graph> {
    catalog_up_to(n)
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect()
}
