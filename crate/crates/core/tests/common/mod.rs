//! Shared corpus builders and independent oracles for the integration suites.

// Each integration-test binary compiles this module on its own and uses a
// different subset of the helpers.
#![allow(dead_code)]

use hrg_core::{BoolMatrix, Graph};

pub fn torus(n: usize, m: usize) -> Graph {
    hrg_core::torus(n, m).expect("valid torus parameters")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn petersen() -> Graph {
    Graph::from_edge_list(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
    .unwrap()
}

/// Circulant graph on `Z_n` with the given connection set (values in
/// `1..=n/2`).
pub fn circulant(n: usize, connections: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for &s in connections {
        for x in 0..n {
            edges.push((x, (x + s) % n));
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Difference relations on `Z_n`: `R_i` pairs `(x, y)` with `y - x = +-i`,
/// for `i` up to `n/2`. Built from modular arithmetic, independently of any
/// graph distance computation.
pub fn cyclic_difference_relations(n: usize) -> Vec<BoolMatrix> {
    let classes = n / 2 + 1;
    let mut rels = vec![BoolMatrix::new(n); classes];
    for x in 0..n {
        for y in 0..n {
            let diff = (y + n - x) % n;
            let i = diff.min(n - diff);
            rels[i].set(x, y);
        }
    }
    rels
}

/// Exhaustive isomorphism test by permutation search; oracle use only
/// (factorial time, keep `n <= 9`).
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    assert!(n <= 9, "oracle isomorphism is factorial; keep n small");
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = a
            .edges()
            .all(|(u, v)| b.has_edge(perm[u], perm[v]));
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All partitions of `0..n` with `{root}` as a distinguished singleton cell,
/// visited via the standard restricted-growth enumeration of the remaining
/// vertices.
pub fn for_each_rooted_partition<F: FnMut(&[Vec<usize>])>(n: usize, root: usize, mut visit: F) {
    let rest: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut cells: Vec<Vec<usize>> = vec![vec![root]];
    recurse(&rest, 0, &mut cells, &mut visit);

    fn recurse<F: FnMut(&[Vec<usize>])>(
        rest: &[usize],
        next: usize,
        cells: &mut Vec<Vec<usize>>,
        visit: &mut F,
    ) {
        if next == rest.len() {
            visit(cells);
            return;
        }
        let v = rest[next];
        // Existing cells other than the root singleton.
        for t in 1..cells.len() {
            cells[t].push(v);
            recurse(rest, next + 1, cells, visit);
            cells[t].pop();
        }
        cells.push(vec![v]);
        recurse(rest, next + 1, cells, visit);
        cells.pop();
    }
}

/// Whether the given cells form an equitable partition of `g`, by direct
/// counting.
pub fn is_equitable(g: &Graph, cells: &[Vec<usize>]) -> bool {
    let n = g.order();
    let mut cell_of = vec![usize::MAX; n];
    for (t, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v] = t;
        }
    }
    let m = cells.len();
    for cell in cells {
        let mut reference: Option<Vec<usize>> = None;
        for &y in cell {
            let mut counts = vec![0usize; m];
            for &w in g.neighbors(y) {
                counts[cell_of[w]] += 1;
            }
            match &reference {
                None => reference = Some(counts),
                Some(r) if *r != counts => return false,
                Some(_) => {}
            }
        }
    }
    true
}
