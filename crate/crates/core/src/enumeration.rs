//! Exhaustive generation of non-isomorphic free trees, trees constrained
//! to a degree sequence, and an independent labeled-tree oracle.
//!
//! Free trees are produced by successor generation of canonical rooted
//! level sequences, keeping exactly those whose sequence equals the
//! canonical free-tree rooting. This yields one representative per
//! isomorphism class in a deterministic order (decreasing lexicographic
//! on canonical codes) without any dedup set. The Prüfer decoder is the
//! independent cross-validation oracle: it reaches every labeled tree,
//! so the dedup count of its canonical forms must equal the generator's
//! class count.

use crate::error::{Error, Result};
use crate::families::{greedy_tree, GreedyVariant};
use crate::tree::{are_isomorphic, CanonicalForm, DegreeSequence, Tree};

/// Largest order accepted by [`free_trees`].
pub const FREE_TREE_CAP: usize = 18;

/// Largest order accepted by [`labeled_trees_prufer`] (`n^(n-2)` growth).
pub const PRUFER_CAP: usize = 9;

/// Largest degree-sequence length accepted by
/// [`trees_with_degree_sequence`].
pub const DEGREE_SEQUENCE_CAP: usize = 14;

/// Iterator over all canonical rooted level sequences on `n` vertices,
/// in decreasing lexicographic order: start from the path, repeatedly
/// find the last entry above depth 1 and regularize the tail by cyclic
/// copy from its parent block.
struct RootedLevelSequences {
    seq: Vec<u32>,
    state: GenState,
}

#[derive(PartialEq)]
enum GenState {
    First,
    Running,
    Done,
}

impl RootedLevelSequences {
    fn new(n: usize) -> Self {
        RootedLevelSequences {
            seq: (0..n as u32).collect(),
            state: GenState::First,
        }
    }
}

impl Iterator for RootedLevelSequences {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        match self.state {
            GenState::First => {
                self.state = GenState::Running;
                Some(self.seq.clone())
            }
            GenState::Running => {
                let p = match self.seq.iter().rposition(|&d| d >= 2) {
                    Some(p) => p,
                    None => {
                        self.state = GenState::Done;
                        return None;
                    }
                };
                let q = self.seq[..p]
                    .iter()
                    .rposition(|&d| d == self.seq[p] - 1)
                    .expect("a shallower ancestor precedes any depth >= 2");
                for i in p..self.seq.len() {
                    self.seq[i] = self.seq[i - (p - q)];
                }
                Some(self.seq.clone())
            }
            GenState::Done => None,
        }
    }
}

fn tree_from_level_sequence(seq: &[u32]) -> Tree {
    CanonicalForm(seq.to_vec()).to_tree()
}

/// Deterministic stream of one representative per isomorphism class of
/// trees on `n` vertices.
pub fn free_trees(n: usize) -> Result<FreeTrees> {
    if !(1..=FREE_TREE_CAP).contains(&n) {
        return Err(Error::ResourceCap(format!(
            "free tree enumeration supports 1 <= n <= {FREE_TREE_CAP}, got {n}"
        )));
    }
    Ok(FreeTrees {
        inner: RootedLevelSequences::new(n),
    })
}

pub struct FreeTrees {
    inner: RootedLevelSequences,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        for seq in self.inner.by_ref() {
            let tree = tree_from_level_sequence(&seq);
            if tree.canonical_form().code() == seq.as_slice() {
                return Some(tree);
            }
        }
        None
    }
}

/// All `n^(n-2)` labeled trees by decoding every Prüfer sequence, in
/// lexicographic sequence order. Test oracle only.
pub fn labeled_trees_prufer(n: usize) -> Result<LabeledTrees> {
    if !(2..=PRUFER_CAP).contains(&n) {
        return Err(Error::ResourceCap(format!(
            "prufer enumeration supports 2 <= n <= {PRUFER_CAP}, got {n}"
        )));
    }
    Ok(LabeledTrees {
        n: n as u32,
        seq: vec![0; n - 2],
        done: false,
    })
}

pub struct LabeledTrees {
    n: u32,
    seq: Vec<u32>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = Tree::from_prufer(&self.seq).expect("in-range sequence decodes");
        // Odometer increment, most significant digit first.
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
        }
        Some(tree)
    }
}

/// Number of isomorphism classes among all Prüfer-decoded labeled trees
/// on `n` vertices, deduplicated by canonical form. Partitioned by the
/// leading sequence entry and merged as a set union, so the result does
/// not depend on scheduling.
pub fn prufer_class_count(n: usize) -> Result<usize> {
    use rayon::prelude::*;
    if !(2..=PRUFER_CAP).contains(&n) {
        return Err(Error::ResourceCap(format!(
            "prufer enumeration supports 2 <= n <= {PRUFER_CAP}, got {n}"
        )));
    }
    if n == 2 {
        return Ok(1);
    }
    let classes = (0..n as u32)
        .into_par_iter()
        .map(|first| {
            let mut seen = std::collections::BTreeSet::new();
            let mut seq = vec![0u32; n - 2];
            seq[0] = first;
            loop {
                seen.insert(Tree::from_prufer(&seq).expect("valid").canonical_form());
                let mut i = seq.len();
                let mut carried_out = true;
                while i > 1 {
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < n as u32 {
                        carried_out = false;
                        break;
                    }
                    seq[i] = 0;
                }
                if carried_out {
                    break;
                }
            }
            seen
        })
        .reduce(std::collections::BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(classes.len())
}

/// One representative per isomorphism class realizing `ds`, filtered
/// from the free-tree stream with a degree-multiset pre-check.
pub fn trees_with_degree_sequence(ds: &DegreeSequence) -> Result<Vec<Tree>> {
    let n = ds.len();
    if n > DEGREE_SEQUENCE_CAP {
        return Err(Error::ResourceCap(format!(
            "degree-sequence enumeration supports length <= {DEGREE_SEQUENCE_CAP}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Tree::new(1, Vec::new())?]);
    }
    Ok(free_trees(n)?
        .filter(|t| t.degree_sequence() == *ds)
        .collect())
}

/// Predicate classes over enumerated trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeClass {
    All,
    Caterpillar,
    GreedyRealizable,
    NonCaterpillarNonGreedy,
}

impl TreeClass {
    pub fn name(self) -> &'static str {
        match self {
            TreeClass::All => "all",
            TreeClass::Caterpillar => "caterpillar",
            TreeClass::GreedyRealizable => "greedy_realizable",
            TreeClass::NonCaterpillarNonGreedy => "non_caterpillar_non_greedy",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "all" => TreeClass::All,
            "caterpillar" => TreeClass::Caterpillar,
            "greedy_realizable" => TreeClass::GreedyRealizable,
            "non_caterpillar_non_greedy" => TreeClass::NonCaterpillarNonGreedy,
            other => return Err(Error::invalid(format!("unknown tree class {other:?}"))),
        })
    }

    pub fn contains(self, tree: &Tree) -> bool {
        match self {
            TreeClass::All => true,
            TreeClass::Caterpillar => tree.is_caterpillar(),
            TreeClass::GreedyRealizable => {
                let (paper, bfs) = greedy_realizability(tree);
                paper || bfs
            }
            TreeClass::NonCaterpillarNonGreedy => {
                if tree.is_caterpillar() {
                    return false;
                }
                let (paper, bfs) = greedy_realizability(tree);
                !paper && !bfs
            }
        }
    }
}

/// Whether the tree is isomorphic to the greedy realization of its own
/// degree sequence, per variant (paper rule, classical BFS rule).
pub fn greedy_realizability(tree: &Tree) -> (bool, bool) {
    let ds = tree.degree_sequence();
    let check = |variant| match greedy_tree(&ds, variant) {
        Ok(g) => are_isomorphic(tree, &g),
        Err(_) => false,
    };
    (check(GreedyVariant::Paper), check(GreedyVariant::Bfs))
}

/// Count of enumerated trees on `n` vertices passing the class filter.
pub fn count_by_class(n: usize, class: TreeClass) -> Result<u64> {
    Ok(free_trees(n)?.filter(|t| class.contains(t)).count() as u64)
}

/// Every tree-graphic degree sequence of length `n`, in decreasing
/// lexicographic order (partitions of `2(n-1)` into `n` positive parts).
pub fn tree_graphic_sequences(n: usize) -> Vec<DegreeSequence> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![DegreeSequence::new(vec![0]).expect("single vertex")];
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn rec(remaining: u32, slots: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // Each remaining slot takes at least 1.
        let hi = max.min(remaining.saturating_sub(slots - 1));
        for d in (1..=hi).rev() {
            prefix.push(d);
            rec(remaining - d, slots - 1, d, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(2 * (n as u32 - 1), n as u32, n as u32 - 1, &mut prefix, &mut raw);
    for seq in raw {
        out.push(DegreeSequence::new(seq).expect("constructed tree-graphic"));
    }
    out
}

/// Free-tree counts used as self-checks (number of trees on n unlabeled
/// vertices, n = 1..).
pub const FREE_TREE_COUNTS: [u64; 14] =
    [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

/// Closed-form caterpillar count `2^(n-4) + 2^(floor(n/2)-2)` for n >= 4.
pub fn caterpillar_count_closed_form(n: usize) -> u64 {
    assert!(n >= 4);
    (1u64 << (n - 4)) + (1u64 << (n / 2 - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rooted_sequence_counts_match_known_values() {
        // Rooted trees on n unlabeled vertices, n = 1..=10.
        let expected = [1u64, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        for (i, &want) in expected.iter().enumerate() {
            let got = RootedLevelSequences::new(i + 1).count() as u64;
            assert_eq!(got, want, "rooted count at n = {}", i + 1);
        }
    }

    #[test]
    fn free_tree_counts_small() {
        for n in 1..=10usize {
            let got = free_trees(n).unwrap().count() as u64;
            assert_eq!(got, FREE_TREE_COUNTS[n - 1], "free count at n = {n}");
        }
    }

    #[test]
    fn free_tree_counts_to_fourteen() {
        for n in 11..=14usize {
            let got = free_trees(n).unwrap().count() as u64;
            assert_eq!(got, FREE_TREE_COUNTS[n - 1], "free count at n = {n}");
        }
    }

    #[test]
    fn free_trees_yield_unique_canonical_forms() {
        for n in 2..=9usize {
            let mut seen = std::collections::BTreeSet::new();
            let mut previous: Option<CanonicalForm> = None;
            for t in free_trees(n).unwrap() {
                let code = t.canonical_form();
                if let Some(prev) = &previous {
                    assert!(code < *prev, "stream must be strictly decreasing");
                }
                previous = Some(code.clone());
                assert!(seen.insert(code), "duplicate class at n = {n}");
            }
        }
    }

    #[test]
    fn prufer_oracle_agrees_with_generator() {
        for n in 3..=8usize {
            assert_eq!(
                prufer_class_count(n).unwrap() as u64,
                FREE_TREE_COUNTS[n - 1],
                "oracle disagreement at n = {n}"
            );
        }
    }

    #[test]
    fn prufer_stream_sizes() {
        assert_eq!(labeled_trees_prufer(3).unwrap().count(), 3);
        assert_eq!(labeled_trees_prufer(4).unwrap().count(), 16);
        assert_eq!(labeled_trees_prufer(5).unwrap().count(), 125);
        assert!(labeled_trees_prufer(10).is_err());
    }

    #[test]
    fn degree_sequence_enumeration_examples() {
        let path_ds = DegreeSequence::new(vec![2, 2, 1, 1]).unwrap();
        assert_eq!(trees_with_degree_sequence(&path_ds).unwrap().len(), 1);

        let ds = DegreeSequence::new(vec![3, 3, 1, 1, 1, 1]).unwrap();
        let found = trees_with_degree_sequence(&ds).unwrap();
        assert_eq!(found.len(), 1);
        assert!(are_isomorphic(&found[0], &families::double_star(3, 3).unwrap()));

        let ds = DegreeSequence::new(vec![3, 2, 2, 1, 1, 1]).unwrap();
        assert_eq!(trees_with_degree_sequence(&ds).unwrap().len(), 2);
    }

    #[test]
    fn class_counts_at_seven() {
        assert_eq!(count_by_class(7, TreeClass::All).unwrap(), 11);
        assert_eq!(count_by_class(7, TreeClass::Caterpillar).unwrap(), 10);
        // The unique non-caterpillar on 7 vertices is the spider with
        // three legs of length 2.
        let spider = Tree::new(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let non_caterpillars: Vec<Tree> = free_trees(7)
            .unwrap()
            .filter(|t| !t.is_caterpillar())
            .collect();
        assert_eq!(non_caterpillars.len(), 1);
        assert!(are_isomorphic(&non_caterpillars[0], &spider));
    }

    #[test]
    fn caterpillar_census_matches_closed_form() {
        for n in 4..=14usize {
            assert_eq!(
                count_by_class(n, TreeClass::Caterpillar).unwrap(),
                caterpillar_count_closed_form(n),
                "caterpillar census at n = {n}"
            );
        }
        assert_eq!(count_by_class(3, TreeClass::All).unwrap(), 1);
        assert_eq!(count_by_class(4, TreeClass::All).unwrap(), 2);
        assert_eq!(count_by_class(4, TreeClass::Caterpillar).unwrap(), 2);
    }

    #[test]
    fn non_caterpillar_non_greedy_empty_small() {
        for n in 3..=6usize {
            assert_eq!(
                count_by_class(n, TreeClass::NonCaterpillarNonGreedy).unwrap(),
                0,
                "class should be empty at n = {n}"
            );
        }
    }

    #[test]
    fn graphic_sequence_generation() {
        // Partitions of 2(n-1) into n positive parts: p(n-2) sequences.
        assert_eq!(tree_graphic_sequences(2).len(), 1);
        assert_eq!(tree_graphic_sequences(4).len(), 2);
        assert_eq!(tree_graphic_sequences(9).len(), 15);
        for ds in tree_graphic_sequences(7) {
            assert_eq!(ds.len(), 7);
            let sum: u32 = ds.as_slice().iter().sum();
            assert_eq!(sum, 12);
        }
    }

    #[test]
    fn cap_violations_are_resource_errors() {
        assert!(matches!(free_trees(19), Err(Error::ResourceCap(_))));
        assert!(matches!(labeled_trees_prufer(1), Err(Error::ResourceCap(_))));
        assert!(matches!(labeled_trees_prufer(10), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn greedy_realizability_examples() {
        // The spider with legs (2,2,2) is the BFS greedy realization of
        // its degree sequence, but not the paper-rule realization.
        let spider = Tree::new(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let (paper, bfs) = greedy_realizability(&spider);
        assert!(bfs);
        assert!(!paper);
        assert!(TreeClass::GreedyRealizable.contains(&spider));
        assert!(!TreeClass::NonCaterpillarNonGreedy.contains(&spider));
    }
}
