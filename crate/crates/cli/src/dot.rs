//! DOT export, optionally coloring vertices by their refinement cell at a
//! chosen root.

use hrg_core::{quotient_matrix, rooted_coarsest_partition, Graph};

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

pub fn export(g: &Graph, root: Option<usize>) -> String {
    let colors: Option<Vec<usize>> = root.map(|r| {
        let p = rooted_coarsest_partition(g, r);
        // Color by canonical (distance-first) cell index.
        let canonical = match quotient_matrix(g, &p) {
            Ok(cam) => p.reordered(cam.cell_order()),
            Err(_) => p,
        };
        (0..g.order()).map(|v| canonical.cell_of(v)).collect()
    });

    let mut out = String::from("graph hrg {\n  node [shape=circle, style=filled];\n");
    for v in 0..g.order() {
        match &colors {
            Some(cells) => {
                let color = PALETTE[cells[v] % PALETTE.len()];
                out.push_str(&format!(
                    "  {v} [fillcolor=\"{color}\", label=\"{v}\", tooltip=\"cell {}\"];\n",
                    cells[v]
                ));
            }
            None => out.push_str(&format!("  {v} [fillcolor=\"#ffffff\"];\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_plain() {
        let g = Graph::cycle(2).unwrap();
        let text = export(&g, None);
        assert!(text.contains("0 -- 1;"));
        assert!(text.starts_with("graph hrg {"));
    }

    #[test]
    fn torus33_coloring_matches_refinement_cells() {
        // T(3,3) is strongly regular, so its rooted refinement has 3 cells:
        // the root, its neighbors, and the rest.
        let g = Graph::cycle(3)
            .unwrap()
            .cartesian_product(&Graph::cycle(3).unwrap());
        let text = export(&g, Some(0));
        let distinct: std::collections::BTreeSet<&str> = PALETTE
            .iter()
            .copied()
            .filter(|c| text.contains(c))
            .collect();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn torus25_coloring_uses_six_colors() {
        // T(2,5) refines into 6 cells: root, two neighbor types, two
        // distance-2 types, one distance-3 pair.
        let g = Graph::cycle(2)
            .unwrap()
            .cartesian_product(&Graph::cycle(5).unwrap());
        let text = export(&g, Some(0));
        let distinct: std::collections::BTreeSet<&str> = PALETTE
            .iter()
            .copied()
            .filter(|c| text.contains(c))
            .collect();
        assert_eq!(distinct.len(), 6);
    }
}
