//! Gabriel quivers, separated graphs, Dynkin and affine recognition, and the
//! representation-type verdict.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::Result;
use crate::homext::{ext_table, ExtTable};
use crate::repmod::{enumerate_simples, Label};
use crate::scalars::ParamSet;

#[derive(Clone, Debug)]
pub struct Quiver {
    pub vertices: Vec<Label>,
    /// `(from, to, multiplicity)` with multiplicity `>= 1`, loops allowed.
    pub arrows: Vec<(usize, usize, usize)>,
}

impl Quiver {
    pub fn from_table(table: &ExtTable) -> Quiver {
        let mut arrows = Vec::new();
        for (i, row) in table.dims.iter().enumerate() {
            for (k, &d) in row.iter().enumerate() {
                if d > 0 {
                    arrows.push((i, k, d));
                }
            }
        }
        Quiver { vertices: table.labels.clone(), arrows }
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.2).sum()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
        }
        for (i, k, m) in &self.arrows {
            let _ = writeln!(out, "  v{i} -> v{k} [label=\"{m}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|(i, k, m)| json!([i, k, m])).collect::<Vec<_>>(),
        })
    }
}

/// The Ext quiver of the simples for `p`.
pub fn gabriel_quiver(p: &ParamSet) -> Result<Quiver> {
    let catalog = enumerate_simples(p);
    Ok(Quiver::from_table(&ext_table(&catalog, false)?))
}

/// Bipartite double of a quiver: vertex `2i` is `i'`, vertex `2i + 1` is `i''`.
#[derive(Clone, Debug)]
pub struct SeparatedGraph {
    pub names: Vec<String>,
    /// `(i', k'', multiplicity)` as vertex indices.
    pub edges: Vec<(usize, usize, usize)>,
}

pub fn separated(q: &Quiver) -> SeparatedGraph {
    let mut names = Vec::with_capacity(2 * q.vertices.len());
    for v in &q.vertices {
        names.push(format!("{v}'"));
        names.push(format!("{v}''"));
    }
    let edges = q.arrows.iter().map(|&(i, k, m)| (2 * i, 2 * k + 1, m)).collect();
    SeparatedGraph { names, edges }
}

impl SeparatedGraph {
    /// Connected components as sorted vertex lists, ordered by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(u, v, _) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Each component with its diagram type.
    pub fn classify(&self) -> Vec<(Vec<usize>, DiagramKind)> {
        self.components()
            .into_iter()
            .map(|c| {
                let edges: Vec<(usize, usize, usize)> =
                    self.edges.iter().filter(|e| c.binary_search(&e.0).is_ok()).copied().collect();
                let kind = classify_component(&c, &edges);
                (c, kind)
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph separated {\n");
        for (i, v) in self.names.iter().enumerate() {
            let _ = writeln!(out, "  u{i} [label=\"{v}\"];");
        }
        for (u, v, m) in &self.edges {
            let _ = writeln!(out, "  u{u} -- u{v} [label=\"{m}\"];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagramKind {
    A(usize),
    /// A single edge of multiplicity two.
    B2,
    D(usize),
    E(usize),
    AffineA(usize),
    AffineD(usize),
    AffineE(usize),
    /// Four edges of multiplicity two out of one centre.
    DoubledD4,
    Neither,
}

impl DiagramKind {
    pub fn is_dynkin(self) -> bool {
        matches!(self, DiagramKind::A(_) | DiagramKind::B2 | DiagramKind::D(_) | DiagramKind::E(_))
    }

    pub fn is_affine(self) -> bool {
        matches!(self, DiagramKind::AffineA(_) | DiagramKind::AffineD(_) | DiagramKind::AffineE(_))
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramKind::A(n) => write!(f, "A{n}"),
            DiagramKind::B2 => f.write_str("B2"),
            DiagramKind::D(n) => write!(f, "D{n}"),
            DiagramKind::E(n) => write!(f, "E{n}"),
            DiagramKind::AffineA(n) => write!(f, "A{n}^(1)"),
            DiagramKind::AffineD(n) => write!(f, "D{n}^(1)"),
            DiagramKind::AffineE(n) => write!(f, "E{n}^(1)"),
            DiagramKind::DoubledD4 => f.write_str("DD4^(1)"),
            DiagramKind::Neither => f.write_str("Neither"),
        }
    }
}

/// Recognition of a connected graph given by its vertices and edges.
pub fn classify_component(vertices: &[usize], edges: &[(usize, usize, usize)]) -> DiagramKind {
    let n = vertices.len();
    let idx = |v: usize| vertices.binary_search(&v).expect("edge inside component");
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(u, v, m) in edges {
        if u == v {
            return DiagramKind::Neither;
        }
        adj[idx(u)].push((idx(v), m));
        adj[idx(v)].push((idx(u), m));
    }
    if n == 1 {
        return DiagramKind::A(1);
    }
    let max_mult = edges.iter().map(|e| e.2).max().unwrap_or(0);
    if max_mult > 2 {
        return DiagramKind::Neither;
    }
    if max_mult == 2 {
        if edges.iter().any(|e| e.2 != 2) {
            return DiagramKind::Neither;
        }
        if n == 2 && edges.len() == 1 {
            return DiagramKind::B2;
        }
        let centre = (0..n).filter(|&v| adj[v].len() == 4).count();
        if n == 5 && edges.len() == 4 && centre == 1 {
            return DiagramKind::DoubledD4;
        }
        return DiagramKind::Neither;
    }
    // simple graphs; multiple arrows between the same pair count separately
    let mut simple: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, nb) in adj.iter().enumerate() {
        for &(w, _) in nb {
            if simple[v].contains(&w) {
                return DiagramKind::Neither;
            }
            simple[v].push(w);
        }
    }
    let e = edges.len();
    let deg: Vec<usize> = simple.iter().map(Vec::len).collect();
    if e == n {
        return if deg.iter().all(|&d| d == 2) { DiagramKind::AffineA(n - 1) } else { DiagramKind::Neither };
    }
    if e != n - 1 {
        return DiagramKind::Neither;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    let arm = |from: usize, first: usize| -> (usize, usize) {
        // length of the arm and its end vertex, walking through degree-2 vertices
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while deg[cur] == 2 {
            let next = if simple[cur][0] == prev { simple[cur][1] } else { simple[cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        (len, cur)
    };
    match branch.as_slice() {
        [] => DiagramKind::A(n),
        [c] => match deg[*c] {
            3 => {
                let mut arms: Vec<usize> = simple[*c].iter().map(|&w| arm(*c, w).0).collect();
                arms.sort_unstable();
                match (arms[0], arms[1], arms[2]) {
                    (1, 1, k) => DiagramKind::D(k + 3),
                    (1, 2, 2) => DiagramKind::E(6),
                    (1, 2, 3) => DiagramKind::E(7),
                    (1, 2, 4) => DiagramKind::E(8),
                    (2, 2, 2) => DiagramKind::AffineE(6),
                    (1, 3, 3) => DiagramKind::AffineE(7),
                    (1, 2, 5) => DiagramKind::AffineE(8),
                    _ => DiagramKind::Neither,
                }
            }
            4 if n == 5 => DiagramKind::AffineD(4),
            _ => DiagramKind::Neither,
        },
        [c1, c2] if deg[*c1] == 3 && deg[*c2] == 3 => {
            let leafy = |c: usize| {
                let arms: Vec<(usize, usize)> = simple[c].iter().map(|&w| arm(c, w)).collect();
                arms.iter().filter(|(len, end)| *len == 1 && deg[*end] == 1).count() >= 2
            };
            if leafy(*c1) && leafy(*c2) {
                DiagramKind::AffineD(n - 1)
            } else {
                DiagramKind::Neither
            }
        }
        _ => DiagramKind::Neither,
    }
}

/// A six-cycle of single edges plus one double edge between opposite vertices.
pub fn is_hexagon_with_double_chord(vertices: &[usize], edges: &[(usize, usize, usize)]) -> bool {
    if vertices.len() != 6 || edges.len() != 7 {
        return false;
    }
    let singles: Vec<(usize, usize)> = edges.iter().filter(|e| e.2 == 1).map(|e| (e.0, e.1)).collect();
    let doubles: Vec<(usize, usize)> = edges.iter().filter(|e| e.2 == 2).map(|e| (e.0, e.1)).collect();
    if singles.len() != 6 || doubles.len() != 1 || classify_component(vertices, &singles.iter().map(|&(u, v)| (u, v, 1)).collect::<Vec<_>>()) != DiagramKind::AffineA(5) {
        return false;
    }
    // walk the cycle and compare positions of the chord ends
    let mut order = vec![vertices[0]];
    while order.len() < 6 {
        let cur = *order.last().expect("nonempty");
        let next = singles
            .iter()
            .filter_map(|&(u, v)| if u == cur { Some(v) } else if v == cur { Some(u) } else { None })
            .find(|w| !order.contains(w))
            .expect("cycle");
        order.push(next);
    }
    let pos = |v: usize| order.iter().position(|&w| w == v).expect("on cycle");
    let (a, b) = (pos(doubles[0].0), pos(doubles[0].1));
    a.abs_diff(b) == 3
}

/// Multiset of component kinds, written `(X)^k` for repeats.
pub fn summary(kinds: &[DiagramKind]) -> String {
    let mut counts: BTreeMap<DiagramKind, usize> = BTreeMap::new();
    for k in kinds {
        *counts.entry(*k).or_default() += 1;
    }
    counts
        .iter()
        .map(|(k, &c)| if c == 1 { k.to_string() } else { format!("({k})^{c}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// What the separated diagram proves about the representation type. Wildness
/// and non-finiteness pass from `A / rad^2` to `A`; tameness does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepType {
    Wild,
    /// Every component is finite or affine and at least one is affine.
    NotFinite,
    /// Every component is finite Dynkin; nothing follows for `A` itself.
    Undetermined,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Wild => "wild",
            RepType::NotFinite => "not-finite (criterion-consistent with tame)",
            RepType::Undetermined => "undetermined (separated diagram is Dynkin)",
        })
    }
}

pub fn verdict(kinds: &[DiagramKind]) -> RepType {
    if kinds.iter().any(|k| !k.is_dynkin() && !k.is_affine()) {
        RepType::Wild
    } else if kinds.iter().any(|k| k.is_affine()) {
        RepType::NotFinite
    } else {
        RepType::Undetermined
    }
}

#[derive(Clone, Debug)]
pub struct TypeReport {
    pub quiver: Quiver,
    pub separated: SeparatedGraph,
    pub components: Vec<(Vec<usize>, DiagramKind)>,
    pub verdict: RepType,
}

impl TypeReport {
    pub fn kinds(&self) -> Vec<DiagramKind> {
        self.components.iter().map(|c| c.1).collect()
    }

    pub fn summary(&self) -> String {
        summary(&self.kinds())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "quiver": self.quiver.to_json(),
            "components": self.components.iter().map(|(vs, k)| json!({
                "kind": k.to_string(),
                "vertices": vs.iter().map(|&v| self.separated.names[v].clone()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "summary": self.summary(),
            "verdict": self.verdict.to_string(),
        })
    }
}

pub fn rep_type(p: &ParamSet) -> Result<TypeReport> {
    Ok(type_from_quiver(gabriel_quiver(p)?))
}

pub fn type_from_quiver(quiver: Quiver) -> TypeReport {
    let sep = separated(&quiver);
    let components = sep.classify();
    let kinds: Vec<DiagramKind> = components.iter().map(|c| c.1).collect();
    TypeReport { verdict: verdict(&kinds), quiver, separated: sep, components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn kind(n: usize, edges: &[(usize, usize, usize)]) -> DiagramKind {
        let vs: Vec<usize> = (0..n).collect();
        classify_component(&vs, edges)
    }

    fn path(n: usize) -> Vec<(usize, usize, usize)> {
        (1..n).map(|i| (i - 1, i, 1)).collect()
    }

    #[test]
    fn recognises_catalog_diagrams() {
        assert_eq!(kind(4, &path(4)), DiagramKind::A(4));
        assert_eq!(kind(2, &[(0, 1, 2)]), DiagramKind::B2);
        assert_eq!(kind(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]), DiagramKind::D(4));
        assert_eq!(kind(5, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]), DiagramKind::AffineD(4));
        assert_eq!(kind(5, &[(0, 1, 2), (0, 2, 2), (0, 3, 2), (0, 4, 2)]), DiagramKind::DoubledD4);
        let d51 = [(0, 2, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1)];
        assert_eq!(kind(6, &d51), DiagramKind::AffineD(5));
        let e6 = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1)];
        assert_eq!(kind(6, &e6), DiagramKind::E(6));
        let cyc: Vec<_> = path(6).into_iter().chain([(5, 0, 1)]).collect();
        assert_eq!(kind(6, &cyc), DiagramKind::AffineA(5));
        // hexagon with a double chord
        let mut chord = cyc.clone();
        chord.push((0, 3, 2));
        assert_eq!(kind(6, &chord), DiagramKind::Neither);
        let vs: Vec<usize> = (0..6).collect();
        assert!(is_hexagon_with_double_chord(&vs, &chord));
        chord[6] = (0, 2, 2);
        assert!(!is_hexagon_with_double_chord(&vs, &chord));
    }

    #[test]
    fn twelve_vertex_separated_graph() {
        let q = Quiver { vertices: vec![Label::T(1), Label::T(2)], arrows: vec![(0, 1, 1), (1, 0, 3)] };
        let g = separated(&q);
        assert_eq!(g.edges, vec![(0, 3, 1), (2, 1, 3)]);
        let kinds: Vec<_> = g.classify().into_iter().map(|c| c.1).collect();
        assert_eq!(kinds, vec![DiagramKind::A(2), DiagramKind::Neither]);
        assert_eq!(verdict(&kinds), RepType::Wild);
    }

    proptest! {
        #[test]
        fn relabeling_preserves_kind(n in 2usize..9, seed in any::<u64>(), extra in 0usize..3) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // random tree plus a few extra edges
            let mut edges: Vec<(usize, usize, usize)> = (1..n).map(|i| {
                use rand::Rng;
                (rng.gen_range(0..i), i, 1)
            }).collect();
            for k in 0..extra.min(n.saturating_sub(2)) {
                if (k + 2) < n && !edges.iter().any(|e| (e.0, e.1) == (k, k + 2)) {
                    edges.push((k, k + 2, 1));
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let moved: Vec<_> = edges.iter().map(|&(u, v, m)| (perm[u], perm[v], m)).collect();
            prop_assert_eq!(kind(n, &edges), kind(n, &moved));
        }
    }
}
