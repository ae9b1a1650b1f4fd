//! Tree representation, canonicalization, isomorphism, structural
//! predicates, and the text serialization formats.
//!
//! Vertices are dense 0-based ids. A [`Tree`] is immutable after
//! construction and every constructor re-checks the tree invariants
//! (`|E| = n - 1`, connected, simple).

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An unlabeled tree on `n` vertices with ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: u32,
    /// Normalized edge list: each pair `(u, v)` with `u < v`, sorted.
    edges: Vec<(u32, u32)>,
    /// CSR adjacency: neighbors of `v` are `targets[offsets[v]..offsets[v+1]]`.
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Tree {
    /// Builds a tree from an edge list, checking all invariants.
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("vertex count must be positive"));
        }
        if edges.len() != n - 1 {
            return Err(Error::invalid(format!(
                "edge count {} does not match vertex count {} (need {})",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::invalid(format!(
                    "vertex id out of range in edge ({u}, {v})"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate edge"));
        }
        let tree = Self::from_normalized(n as u32, norm);
        if !tree.is_connected() {
            return Err(Error::invalid("graph is not connected"));
        }
        Ok(tree)
    }

    fn from_normalized(n: u32, edges: Vec<(u32, u32)>) -> Self {
        let mut offsets = vec![0u32; n as usize + 1];
        for &(u, v) in &edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n as usize {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0u32; edges.len() * 2];
        for &(u, v) in &edges {
            targets[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        Tree {
            n,
            edges,
            offsets,
            targets,
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.n as usize;
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut visited = 1usize;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
        visited == n
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    /// Degree of vertex `v`; errors on an out-of-range id.
    pub fn degree_of(&self, v: u32) -> Result<u32> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex id {v} out of range (order {})",
                self.n
            )));
        }
        Ok(self.degree(v))
    }

    #[inline]
    pub(crate) fn degree(&self, v: u32) -> u32 {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// All vertex degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// The non-increasing degree sequence of the tree.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// True iff deleting all leaves leaves the empty graph, a single
    /// vertex, or a path. Trees with at most two vertices, stars and
    /// paths all qualify.
    pub fn is_caterpillar(&self) -> bool {
        if self.n <= 2 {
            return true;
        }
        // Internal vertices of a tree induce a subtree, so it suffices
        // to check that no internal vertex has three internal neighbors.
        for v in 0..self.n {
            if self.degree(v) <= 1 {
                continue;
            }
            let internal_neighbors = self
                .neighbors(v)
                .iter()
                .filter(|&&w| self.degree(w) > 1)
                .count();
            if internal_neighbors > 2 {
                return false;
            }
        }
        true
    }

    /// The 1- or 2-element center found by repeated leaf stripping.
    pub fn center(&self) -> (u32, Option<u32>) {
        let n = self.n as usize;
        if n == 1 {
            return (0, None);
        }
        if n == 2 {
            return (0, Some(1));
        }
        let mut degree: Vec<u32> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut layer: Vec<u32> = (0..self.n).filter(|&v| degree[v as usize] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            remaining -= layer.len();
            for &v in &layer {
                degree[v as usize] = 0;
                for &w in self.neighbors(v) {
                    if degree[w as usize] > 1 {
                        degree[w as usize] -= 1;
                        if degree[w as usize] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut centers = layer;
        centers.sort_unstable();
        match centers.as_slice() {
            [c] => (*c, None),
            [a, b] => (*a, Some(*b)),
            _ => unreachable!("leaf stripping always ends with 1 or 2 vertices"),
        }
    }

    /// Canonical level-sequence fingerprint: the tree is rooted at its
    /// center (the lexicographically smaller code of the two rootings
    /// for bicentral trees) and subtrees are ordered in descending
    /// lexicographic order. Two trees have equal codes iff isomorphic.
    pub fn canonical_form(&self) -> CanonicalForm {
        let (c1, c2) = self.center();
        let code1 = self.rooted_code(c1);
        let code = match c2 {
            Some(c2) => code1.min(self.rooted_code(c2)),
            None => code1,
        };
        CanonicalForm(code)
    }

    /// Canonical level sequence of the tree rooted at `root`.
    fn rooted_code(&self, root: u32) -> Vec<u32> {
        let n = self.n as usize;
        let mut parent = vec![u32::MAX; n];
        let mut depth = vec![0u32; n];
        let mut order = Vec::with_capacity(n);
        order.push(root);
        parent[root as usize] = root;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in self.neighbors(v) {
                if parent[w as usize] == u32::MAX {
                    parent[w as usize] = v;
                    depth[w as usize] = depth[v as usize] + 1;
                    order.push(w);
                }
            }
        }
        // Children finish before parents in reverse BFS order.
        let mut codes: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut child_codes: Vec<Vec<u32>> = self
                .neighbors(v)
                .iter()
                .filter(|&&w| parent[w as usize] == v && w != root)
                .map(|&w| std::mem::take(&mut codes[w as usize]))
                .collect();
            child_codes.sort_unstable_by(|a, b| b.cmp(a));
            let mut code = Vec::with_capacity(1 + child_codes.iter().map(Vec::len).sum::<usize>());
            code.push(depth[v as usize]);
            for c in child_codes {
                code.extend(c);
            }
            codes[v as usize] = code;
        }
        std::mem::take(&mut codes[root as usize])
    }

    /// Removes edges `uv` and `xy`, adds `uy` and `xv`. Every degree is
    /// unchanged; the result is returned only if it is still a tree.
    pub fn degree_preserving_swap(&self, u: u32, v: u32, x: u32, y: u32) -> Result<Tree> {
        for id in [u, v, x, y] {
            if id >= self.n {
                return Err(Error::invalid(format!("vertex id {id} out of range")));
            }
        }
        let distinct = u != v && u != x && u != y && v != x && v != y && x != y;
        if !distinct {
            return Err(Error::invalid("swap requires four distinct vertices"));
        }
        let has = |a: u32, b: u32| self.edges.binary_search(&(a.min(b), a.max(b))).is_ok();
        if !has(u, v) || !has(x, y) {
            return Err(Error::invalid("swap requires uv and xy to be edges"));
        }
        if has(u, y) || has(x, v) {
            return Err(Error::invalid("swap requires uy and xv to be non-edges"));
        }
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != (u.min(v), u.max(v)) && e != (x.min(y), x.max(y)))
            .collect();
        edges.push((u.min(y), u.max(y)));
        edges.push((x.min(v), x.max(v)));
        edges.sort_unstable();
        let swapped = Self::from_normalized(self.n, edges);
        if !swapped.is_connected() {
            return Err(Error::SwapRejected("disconnects"));
        }
        Ok(swapped)
    }

    /// Edge-list text format: first line the vertex count, then one
    /// `u v` line per edge, LF endings.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Single-line form of [`Tree::serialize`] with `;` separators.
    pub fn serialize_line(&self) -> String {
        let mut out = format!("{}", self.n);
        for &(u, v) in &self.edges {
            let _ = write!(out, ";{u} {v}");
        }
        out
    }

    /// DOT export with vertices as bare integers.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        if self.n == 1 {
            out.push_str("  0;\n");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Decodes a Prüfer sequence (0-based entries) into the tree on
    /// `seq.len() + 2` vertices.
    pub fn from_prufer(seq: &[u32]) -> Result<Tree> {
        let n = seq.len() + 2;
        let mut degree = vec![1u32; n];
        for &a in seq {
            if a as usize >= n {
                return Err(Error::invalid(format!(
                    "prufer entry {a} out of range for order {n}"
                )));
            }
            degree[a as usize] += 1;
        }
        let mut leaves: std::collections::BTreeSet<u32> = (0..n as u32)
            .filter(|&v| degree[v as usize] == 1)
            .collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &a in seq {
            let leaf = *leaves.iter().next().expect("a leaf always remains");
            leaves.remove(&leaf);
            edges.push((leaf, a));
            degree[a as usize] -= 1;
            if degree[a as usize] == 1 {
                leaves.insert(a);
            }
        }
        let mut it = leaves.iter();
        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
        edges.push((a, b));
        Tree::new(n, edges)
    }
}

/// Parses the edge-list text format, or the `prufer: a1 a2 ...`
/// alternative form. Errors carry 1-based line numbers.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines
        .next()
        .ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
    let first = first.trim_end_matches('\r');
    if let Some(rest) = first.strip_prefix("prufer:") {
        let mut seq = Vec::new();
        for tok in rest.split_whitespace() {
            let a: u32 = tok.parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad prufer entry {tok:?}"),
            })?;
            seq.push(a);
        }
        return Tree::from_prufer(&seq).map_err(|e| Error::Parse {
            line: 1,
            message: e.to_string(),
        });
    }
    let n: usize = first.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        message: format!("bad vertex count {first:?}"),
    })?;
    if n == 0 {
        return Err(Error::Parse {
            line: 1,
            message: "vertex count must be positive".into(),
        });
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last_line = 1;
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        last_line = line_no;
        if edges.len() == n - 1 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("wrong edge count: more than {} edge lines", n - 1),
            });
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"u v\", got {line:?}"),
                })
            }
        };
        let parse_id = |tok: &str| -> Result<u32> {
            let id: u32 = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad vertex id {tok:?}"),
            })?;
            if id as usize >= n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex id {id} out of range (order {n})"),
                });
            }
            Ok(id)
        };
        edges.push((parse_id(u)?, parse_id(v)?));
    }
    if edges.len() != n - 1 {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!(
                "wrong edge count: expected {} edges, found {}",
                n - 1,
                edges.len()
            ),
        });
    }
    Tree::new(n, edges).map_err(|e| Error::Parse {
        line: last_line,
        message: e.to_string(),
    })
}

/// True iff the canonical forms coincide.
pub fn are_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.vertex_count() == b.vertex_count() && a.canonical_form() == b.canonical_form()
}

/// Non-increasing positive degrees summing to `2 (len - 1)`; the single
/// isolated vertex is the special sequence `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Validates tree-graphicality; the input is sorted internally.
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::invalid("degree sequence must be non-empty"));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        if degrees.len() == 1 {
            if degrees[0] != 0 {
                return Err(Error::invalid(
                    "a length-1 degree sequence must be [0] (single vertex)",
                ));
            }
            return Ok(DegreeSequence(degrees));
        }
        if degrees.contains(&0) {
            return Err(Error::invalid("all degrees must be at least 1"));
        }
        let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
        let need = 2 * (degrees.len() as u64 - 1);
        if sum != need {
            return Err(Error::invalid(format!(
                "degree sum {sum} is not 2(n-1) = {need}; not tree-graphic"
            )));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Level-sequence fingerprint of an isomorphism class; length equals
/// the vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub(crate) Vec<u32>);

impl CanonicalForm {
    pub fn code(&self) -> &[u32] {
        &self.0
    }

    /// Reconstructs the (canonically labeled) tree from the code.
    pub fn to_tree(&self) -> Tree {
        let n = self.0.len();
        if n == 1 {
            return Tree::new(1, Vec::new()).unwrap();
        }
        let mut edges = Vec::with_capacity(n - 1);
        // stack[d] = most recent vertex seen at depth d
        let mut stack: Vec<u32> = Vec::new();
        for (i, &d) in self.0.iter().enumerate() {
            stack.truncate(d as usize);
            if d > 0 {
                edges.push((stack[d as usize - 1], i as u32));
            }
            stack.push(i as u32);
        }
        Tree::new(n, edges).expect("a level sequence always encodes a tree")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        Tree::new(n, (1..n as u32).map(|i| (i - 1, i)).collect()).unwrap()
    }

    fn star(n: usize) -> Tree {
        Tree::new(n, (1..n as u32).map(|i| (0, i)).collect()).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_inputs() {
        assert!(matches!(
            Tree::new(4, vec![(0, 1), (2, 3)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Tree::new(3, vec![(0, 1), (1, 3)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Tree::new(3, vec![(0, 1), (1, 1)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Tree::new(3, vec![(0, 1), (1, 0)]),
            Err(Error::InvalidInput(_))
        ));
        // 4 vertices, right edge count, but disconnected (cycle + isolated).
        assert!(matches!(
            Tree::new(4, vec![(0, 1), (1, 2), (2, 0)]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn degree_of_examples() {
        assert_eq!(path(3).degree_of(1).unwrap(), 2);
        assert_eq!(star(5).degree_of(0).unwrap(), 4);
        assert_eq!(star(5).degree_of(3).unwrap(), 1);
        assert!(path(3).degree_of(3).is_err());
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(path(4).degree_sequence().as_slice(), &[2, 2, 1, 1]);
        assert_eq!(star(4).degree_sequence().as_slice(), &[3, 1, 1, 1]);
    }

    #[test]
    fn degree_sequence_validation() {
        assert!(DegreeSequence::new(vec![2, 2, 1, 1]).is_ok());
        assert!(DegreeSequence::new(vec![0]).is_ok());
        assert!(DegreeSequence::new(vec![3, 3, 1, 1]).is_err());
        assert!(DegreeSequence::new(vec![2, 0, 1, 1]).is_err());
        assert!(DegreeSequence::new(vec![1]).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        assert!(path(6).is_caterpillar());
        assert!(star(7).is_caterpillar());
        assert!(path(2).is_caterpillar());
        assert!(Tree::new(1, vec![]).unwrap().is_caterpillar());
        // Spider with three legs of length 2: leaf removal leaves a star.
        let spider = Tree::new(
            7,
            vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        )
        .unwrap();
        assert!(!spider.is_caterpillar());
    }

    #[test]
    fn centers() {
        assert_eq!(path(5).center(), (2, None));
        assert_eq!(path(4).center(), (1, Some(2)));
        assert_eq!(star(6).center(), (0, None));
        assert_eq!(path(2).center(), (0, Some(1)));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let a = Tree::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let b = Tree::new(3, vec![(1, 0), (0, 2)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(path(4).canonical_form(), star(4).canonical_form());
    }

    #[test]
    fn canonical_form_reconstructs() {
        for t in [path(7), star(7), path(2)] {
            let code = t.canonical_form();
            let rebuilt = code.to_tree();
            assert_eq!(rebuilt.canonical_form(), code);
        }
    }

    #[test]
    fn two_classes_on_four_vertices_via_prufer() {
        // All 4^2 labeled trees on 4 vertices decode to exactly 2 classes.
        let mut codes = std::collections::BTreeSet::new();
        for a in 0..4u32 {
            for b in 0..4u32 {
                codes.insert(Tree::from_prufer(&[a, b]).unwrap().canonical_form());
            }
        }
        assert_eq!(codes.len(), 2);
    }

    #[test]
    fn six_classes_on_six_vertices_via_prufer() {
        let mut codes = std::collections::BTreeSet::new();
        let n = 6usize;
        let total = (n as u64).pow(n as u32 - 2);
        for mut idx in 0..total {
            let mut seq = [0u32; 4];
            for slot in seq.iter_mut() {
                *slot = (idx % n as u64) as u32;
                idx /= n as u64;
            }
            codes.insert(Tree::from_prufer(&seq).unwrap().canonical_form());
        }
        assert_eq!(codes.len(), 6);
    }

    #[test]
    fn isomorphism_examples() {
        let shuffled = Tree::new(5, vec![(3, 1), (1, 4), (4, 0), (0, 2)]).unwrap();
        assert!(are_isomorphic(&path(5), &shuffled));
        assert!(!are_isomorphic(&path(5), &star(5)));
    }

    #[test]
    fn swap_preserves_degrees_and_validates() {
        // Path 0-1-2-3-4-5: swap u=2,v=1, x=3,y=4 keeps a tree.
        let t = path(6);
        let s = t.degree_preserving_swap(2, 1, 3, 4).unwrap();
        assert_eq!(t.degree_sequence(), s.degree_sequence());

        // Precondition failures are input errors.
        assert!(matches!(
            t.degree_preserving_swap(0, 1, 1, 2),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            t.degree_preserving_swap(0, 2, 3, 4),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn swap_that_disconnects_is_rejected() {
        // Path 0-1-2-3-4: removing 1-0 and 3-4, adding 1-3 and 4-0
        // leaves a triangle {1,2,3} plus the component {0,4}.
        let t = path(5);
        assert_eq!(
            t.degree_preserving_swap(1, 0, 4, 3),
            Err(Error::SwapRejected("disconnects"))
        );
    }

    #[test]
    fn parse_and_serialize_round_trip() {
        let t = parse_tree("3\n0 1\n1 2\n").unwrap();
        assert!(are_isomorphic(&t, &path(3)));
        let text = t.serialize();
        assert_eq!(text, "3\n0 1\n1 2\n");
        assert_eq!(parse_tree(&text).unwrap().edges(), t.edges());
    }

    #[test]
    fn parse_errors_name_lines() {
        match parse_tree("4\n0 1\n2 3\n") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("wrong edge count"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_tree("3\n0 1\n1 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_tree("").is_err());
    }

    #[test]
    fn parse_prufer_form() {
        let t = parse_tree("prufer: 1 1").unwrap();
        assert!(are_isomorphic(&t, &star(4)));
        let edge = parse_tree("prufer:").unwrap();
        assert_eq!(edge.vertex_count(), 2);
    }

    #[test]
    fn dot_export() {
        assert_eq!(path(3).to_dot(), "graph {\n  0 -- 1;\n  1 -- 2;\n}\n");
        assert_eq!(Tree::new(1, vec![]).unwrap().to_dot(), "graph {\n  0;\n}\n");
    }
}
