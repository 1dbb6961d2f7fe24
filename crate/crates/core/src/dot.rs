//! Graphviz export of Hasse diagrams.

use crate::cf_space::ClosedSetPoset;
use crate::order::FinitePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A digraph with one node per label and one edge per covering pair,
/// drawn bottom to top.
pub fn hasse(name: &str, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=box];\n", quote(name));
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label={}];\n", quote(l)));
    }
    for (a, b) in covers {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(p: &FinitePoset) -> String {
    hasse("poset", p.labels(), &p.cover_pairs())
}

/// Closed sets ordered by inclusion, each node labelled by its set.
pub fn closed_sets_dot(c: &ClosedSetPoset) -> String {
    let labels: Vec<String> = c.sets().iter().map(|&e| c.space().render(e)).collect();
    hasse("closed_sets", &labels, &c.cover_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_node_per_element_and_one_edge_per_cover() {
        let p = FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")]).unwrap();
        let d = poset_dot(&p);
        assert_eq!(d.matches("[label=").count(), 3);
        assert_eq!(d.matches(" -> ").count(), 2);
        assert!(d.starts_with("digraph \"poset\""));
    }
}
