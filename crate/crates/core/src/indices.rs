//! Ground-truth index computation by direct summation over edges, in
//! exact 128-bit integer arithmetic. This module is the arbiter for
//! every closed-form expression under test: whatever a formula claims,
//! the edge sum on the constructed tree decides.

use serde::{Serialize, Serializer};

use crate::tree::Tree;

/// Exact signed index value. Serializes as a decimal string so that
/// 64-bit JSON consumers never truncate it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexValue(pub i128);

impl std::fmt::Display for IndexValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl From<i128> for IndexValue {
    fn from(v: i128) -> Self {
        IndexValue(v)
    }
}

/// Sigma index: sum over edges of the squared degree difference.
pub fn sigma(tree: &Tree) -> IndexValue {
    edge_sum(tree, |du, dv| {
        let d = du - dv;
        d * d
    })
}

/// Albertson irregularity: sum over edges of the absolute degree
/// difference. Always even.
pub fn albertson(tree: &Tree) -> IndexValue {
    edge_sum(tree, |du, dv| (du - dv).abs())
}

/// First Zagreb index: sum of squared degrees over vertices.
pub fn zagreb_m1(tree: &Tree) -> IndexValue {
    let sum = (0..tree.vertex_count() as u32)
        .map(|v| {
            let d = tree.degree_of(v).expect("in range") as i128;
            d * d
        })
        .sum();
    IndexValue(sum)
}

/// Second Zagreb index: sum over edges of the degree product.
pub fn zagreb_m2(tree: &Tree) -> IndexValue {
    edge_sum(tree, |du, dv| du * dv)
}

/// Forgotten index: sum over edges of the squares of both endpoint
/// degrees. For any tree, `f - 2 m2 = sigma` holds identically.
pub fn forgotten_f(tree: &Tree) -> IndexValue {
    edge_sum(tree, |du, dv| du * du + dv * dv)
}

fn edge_sum(tree: &Tree, term: impl Fn(i128, i128) -> i128) -> IndexValue {
    let degrees = tree.degrees();
    let sum = tree
        .edges()
        .iter()
        .map(|&(u, v)| term(degrees[u as usize] as i128, degrees[v as usize] as i128))
        .sum();
    IndexValue(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;

    fn path(n: usize) -> Tree {
        Tree::new(n, (1..n as u32).map(|i| (i - 1, i)).collect()).unwrap()
    }

    fn star(n: usize) -> Tree {
        Tree::new(n, (1..n as u32).map(|i| (0, i)).collect()).unwrap()
    }

    /// Double star: centers 0 (degree k) and 1 (degree r), adjacent.
    fn double_star(r: u32, k: u32) -> Tree {
        let mut edges = vec![(0, 1)];
        let mut next = 2;
        for _ in 0..k - 1 {
            edges.push((0, next));
            next += 1;
        }
        for _ in 0..r - 1 {
            edges.push((1, next));
            next += 1;
        }
        Tree::new((r + k) as usize, edges).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&path(3)), IndexValue(2));
        assert_eq!(sigma(&star(4)), IndexValue(12));
        assert_eq!(sigma(&double_star(2, 3)), IndexValue(10));
        assert_eq!(sigma(&path(2)), IndexValue(0));
    }

    #[test]
    fn albertson_examples() {
        assert_eq!(albertson(&path(3)), IndexValue(2));
        assert_eq!(albertson(&star(6)), IndexValue(20));
    }

    #[test]
    fn zagreb_and_forgotten_examples() {
        let p3 = path(3);
        assert_eq!(forgotten_f(&p3), IndexValue(10));
        assert_eq!(zagreb_m2(&p3), IndexValue(4));
        assert_eq!(zagreb_m1(&p3), IndexValue(6));

        let s4 = star(4);
        assert_eq!(forgotten_f(&s4), IndexValue(30));
        assert_eq!(zagreb_m2(&s4), IndexValue(9));
        assert_eq!(zagreb_m1(&s4), IndexValue(12));

        let edge = path(2);
        assert_eq!(sigma(&edge), IndexValue(0));
        assert_eq!(forgotten_f(&edge), IndexValue(2));
        assert_eq!(zagreb_m2(&edge), IndexValue(1));
    }

    #[test]
    fn sigma_identity_on_small_trees() {
        for t in [path(3), path(7), star(4), star(9), double_star(3, 5)] {
            assert_eq!(sigma(&t).0, forgotten_f(&t).0 - 2 * zagreb_m2(&t).0);
        }
    }

    #[test]
    fn closed_forms_for_paths_and_stars() {
        for n in 3..10usize {
            assert_eq!(sigma(&path(n)), IndexValue(2));
            let n_i = n as i128;
            assert_eq!(sigma(&star(n)), IndexValue((n_i - 1) * (n_i - 2) * (n_i - 2)));
        }
    }

    #[test]
    fn index_value_serializes_as_decimal_string() {
        let v = serde_json::to_string(&IndexValue(-910339258)).unwrap();
        assert_eq!(v, "\"-910339258\"");
    }
}
