use std::fmt::Write;

use super::CubeGraph;

impl CubeGraph {
    /// One `<word> <word>` line per edge, in canonical edge order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(i, j) in self.edges() {
            writeln!(out, "{} {}", self.vertices()[i], self.vertices()[j]).unwrap();
        }
        out
    }

    /// Graphviz `graph G_<family>_<n>` listing every vertex, then every edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph G_{}_{} {{", self.family().label(), self.n()).unwrap();
        for v in self.vertices() {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for &(i, j) in self.edges() {
            writeln!(out, "  \"{}\" -- \"{}\";", self.vertices()[i], self.vertices()[j]).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::cube_graphs::{construct, Budget, FamilyTag};

    #[test]
    fn edge_list_of_single_edge() {
        let g = construct(FamilyTag::KOrder(2), 1, Budget::default()).unwrap();
        assert_eq!(g.to_edge_list(), "0 1\n");
    }

    #[test]
    fn edge_list_lines_sorted() {
        let g = construct(FamilyTag::PCube(2), 6, Budget::default()).unwrap();
        let text = g.to_edge_list();
        let lines: Vec<&str> = text.lines().collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        assert_eq!(lines.len(), g.size());
    }

    #[test]
    fn dot_layout() {
        let g = construct(FamilyTag::KOrder(2), 2, Budget::default()).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph G_k2_2 {\n  \"00\";\n  \"01\";\n  \"10\";\n  \"00\" -- \"01\";\n  \"00\" -- \"10\";\n}\n"
        );
    }
}
