//! Constructors for every parametric tree family under study. Each
//! constructor returns a concrete [`Tree`] whose directly computed
//! index values serve as the ground truth for formula arbitration.
//!
//! Every constructor finishes with a degree audit: the actual degree of
//! each vertex must equal the degree its role prescribes.

use crate::error::{Error, Result};
use crate::tree::{DegreeSequence, Tree};

/// Default cap on constructed vertex counts; the k-level family grows
/// multiplicatively.
pub const DEFAULT_VERTEX_CAP: u64 = 10_000_000;

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Tree> {
    if n < 1 {
        return Err(Error::infeasible("path requires n >= 1"));
    }
    Tree::new(n, (1..n as u32).map(|i| (i - 1, i)).collect())
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(Error::infeasible("star requires n >= 2"));
    }
    Tree::new(n, (1..n as u32).map(|i| (0, i)).collect())
}

/// Duplicate star: adjacent centers of degrees `k` (vertex 0) and `r`
/// (vertex 1); all other vertices are leaves. Order is `r + k`.
pub fn double_star(r: u32, k: u32) -> Result<Tree> {
    if r < 1 || k < 1 {
        return Err(Error::infeasible("double_star requires r, k >= 1"));
    }
    check_cap(r as u64 + k as u64, DEFAULT_VERTEX_CAP)?;
    let mut edges = vec![(0u32, 1u32)];
    let mut next = 2u32;
    for _ in 0..k - 1 {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..r - 1 {
        edges.push((1, next));
        next += 1;
    }
    let tree = Tree::new((r + k) as usize, edges)?;
    audit(&tree, |v| match v {
        0 => k,
        1 => r,
        _ => 1,
    })?;
    Ok(tree)
}

/// Uniform caterpillar `C(n, p)`: a spine of `n` vertices, each with
/// exactly `p` pendant leaves. `C(n, 0)` is the path, `C(1, p)` the star.
pub fn caterpillar_uniform(n: usize, p: u32) -> Result<Tree> {
    if n < 1 {
        return Err(Error::infeasible("caterpillar_uniform requires n >= 1"));
    }
    let total = (n as u64)
        .checked_mul(p as u64 + 1)
        .ok_or_else(|| Error::ResourceCap("vertex count overflow".into()))?;
    check_cap(total, DEFAULT_VERTEX_CAP)?;
    let mut edges = Vec::with_capacity(total as usize - 1);
    for i in 1..n as u32 {
        edges.push((i - 1, i));
    }
    let mut next = n as u32;
    for i in 0..n as u32 {
        for _ in 0..p {
            edges.push((i, next));
            next += 1;
        }
    }
    let tree = Tree::new(total as usize, edges)?;
    let n32 = n as u32;
    audit(&tree, |v| {
        if v >= n32 {
            1
        } else if n == 1 {
            p
        } else if v == 0 || v == n32 - 1 {
            p + 1
        } else {
            p + 2
        }
    })?;
    Ok(tree)
}

/// Caterpillar with prescribed spine degrees, in the given spine order.
/// Position `i` receives `spine[i] - (spine neighbors)` pendant leaves.
pub fn caterpillar_spine(spine: &[u32]) -> Result<Tree> {
    let s = spine.len();
    if s < 2 {
        return Err(Error::infeasible("caterpillar_spine requires spine length >= 2"));
    }
    let mut total = s as u64;
    for (i, &d) in spine.iter().enumerate() {
        let adj = if i == 0 || i == s - 1 { 1 } else { 2 };
        if d < adj {
            return Err(Error::infeasible(format!(
                "spine degree {d} at position {i} is below its spine adjacency {adj}"
            )));
        }
        total += (d - adj) as u64;
    }
    check_cap(total, DEFAULT_VERTEX_CAP)?;
    let mut edges = Vec::with_capacity(total as usize - 1);
    for i in 1..s as u32 {
        edges.push((i - 1, i));
    }
    let mut next = s as u32;
    for (i, &d) in spine.iter().enumerate() {
        let adj = if i == 0 || i == s - 1 { 1 } else { 2 };
        for _ in 0..d - adj {
            edges.push((i as u32, next));
            next += 1;
        }
    }
    let tree = Tree::new(total as usize, edges)?;
    audit(&tree, |v| {
        if (v as usize) < s {
            spine[v as usize]
        } else {
            1
        }
    })?;
    Ok(tree)
}

/// Which greedy construction to use for a degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyVariant {
    /// Incremental rule: each new vertex (targets taken in non-increasing
    /// order) attaches to the existing vertex of smallest current degree
    /// that has not reached its target. Ties prefer the largest target
    /// degree, then the earliest creation index.
    Paper,
    /// Classical breadth-first greedy tree: the root takes the largest
    /// degree and vertices are filled in BFS order, always handing the
    /// largest remaining degrees to the children of the vertex with the
    /// largest degree among the unfilled ones.
    Bfs,
}

impl GreedyVariant {
    pub fn name(self) -> &'static str {
        match self {
            GreedyVariant::Paper => "paper",
            GreedyVariant::Bfs => "bfs",
        }
    }
}

/// Builds a tree realizing `ds` exactly, by the selected greedy rule.
pub fn greedy_tree(ds: &DegreeSequence, variant: GreedyVariant) -> Result<Tree> {
    let targets = ds.as_slice();
    let n = targets.len();
    if n == 1 {
        return Tree::new(1, Vec::new());
    }
    let tree = match variant {
        GreedyVariant::Paper => greedy_paper(targets)?,
        GreedyVariant::Bfs => greedy_bfs(targets)?,
    };
    audit(&tree, |v| targets[v as usize])?;
    Ok(tree)
}

fn greedy_paper(targets: &[u32]) -> Result<Tree> {
    let n = targets.len();
    let mut current = vec![0u32; n];
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..n {
        let u = (0..i)
            .filter(|&u| current[u] < targets[u])
            .min_by_key(|&u| (current[u], std::cmp::Reverse(targets[u]), u))
            .ok_or_else(|| Error::infeasible("no attachment point with remaining capacity"))?;
        edges.push((u as u32, i as u32));
        current[u] += 1;
        current[i] += 1;
    }
    Tree::new(n, edges)
}

fn greedy_bfs(targets: &[u32]) -> Result<Tree> {
    let n = targets.len();
    let mut edges = Vec::with_capacity(n - 1);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back((0u32, targets[0]));
    let mut next = 1u32;
    while let Some((v, slots)) = queue.pop_front() {
        for _ in 0..slots {
            if next as usize >= n {
                break;
            }
            edges.push((v, next));
            queue.push_back((next, targets[next as usize] - 1));
            next += 1;
        }
    }
    if next as usize != n {
        return Err(Error::infeasible("degree sequence left unplaced vertices"));
    }
    Tree::new(n, edges)
}

/// Pendant-level description shared by the three-level style families:
/// a spine of `n` vertices (end degrees `p+1`, internal `p+2`), each
/// carrying `p` level-1 children; a vertex at level `l` has
/// `level_degrees[l-1] - 1` children, and the last level is leaves.
fn build_leveled(n: usize, p: u32, level_degrees: &[u32], cap: u64) -> Result<Tree> {
    if n < 3 {
        return Err(Error::infeasible("spine requires n >= 3"));
    }
    if p < 1 {
        return Err(Error::infeasible("requires p >= 1"));
    }
    // Vertex count: n * (1 + p + p(d1-1) + p(d1-1)(d2-1) + ...).
    let mut per_spine: u64 = 1;
    let mut layer: u64 = p as u64;
    per_spine += layer;
    for &d in level_degrees {
        if d < 1 {
            return Err(Error::infeasible("level degrees must be >= 1"));
        }
        layer = layer
            .checked_mul((d - 1) as u64)
            .ok_or_else(|| Error::ResourceCap("vertex count overflow".into()))?;
        per_spine = per_spine
            .checked_add(layer)
            .ok_or_else(|| Error::ResourceCap("vertex count overflow".into()))?;
    }
    let total = (n as u64)
        .checked_mul(per_spine)
        .ok_or_else(|| Error::ResourceCap("vertex count overflow".into()))?;
    check_cap(total, cap)?;

    let mut edges = Vec::with_capacity(total as usize - 1);
    for i in 1..n as u32 {
        edges.push((i - 1, i));
    }
    let mut next = n as u32;
    // expected[v] filled as vertices are created; spine handled below.
    let mut expected = vec![0u32; total as usize];
    let mut frontier: Vec<u32> = (0..n as u32).collect();
    for level in 0..=level_degrees.len() {
        let children_per = if level == 0 {
            p
        } else {
            level_degrees[level - 1] - 1
        };
        if children_per == 0 {
            break;
        }
        // Vertices one level down are leaves unless a further degree is set.
        let child_degree = level_degrees.get(level).copied().unwrap_or(1);
        let mut new_frontier = Vec::with_capacity(frontier.len() * children_per as usize);
        for &v in &frontier {
            for _ in 0..children_per {
                edges.push((v, next));
                expected[next as usize] = child_degree;
                new_frontier.push(next);
                next += 1;
            }
        }
        frontier = new_frontier;
    }
    let n32 = n as u32;
    for v in 0..n32 {
        expected[v as usize] = if v == 0 || v == n32 - 1 { p + 1 } else { p + 2 };
    }
    let tree = Tree::new(total as usize, edges)?;
    audit(&tree, |v| expected[v as usize])?;
    Ok(tree)
}

/// Three-level pendant tree: level-1 vertices of degree `1+r`, level-2
/// of degree `1+s`, level-3 leaves. `r = 0` or `s = 0` truncates the
/// lower levels.
pub fn three_level_tree(n: usize, p: u32, r: u32, s: u32) -> Result<Tree> {
    if r == 0 {
        return build_leveled(n, p, &[], DEFAULT_VERTEX_CAP);
    }
    if s == 0 {
        return build_leveled(n, p, &[1 + r], DEFAULT_VERTEX_CAP);
    }
    build_leveled(n, p, &[1 + r, 1 + s], DEFAULT_VERTEX_CAP)
}

fn level_degree(value: u64) -> Result<u32> {
    u32::try_from(value).map_err(|_| Error::ResourceCap("level degree overflow".into()))
}

/// Variant with squared level degrees `(1+r)^2` and `(1+s)^2`.
pub fn squared_level_tree(n: usize, p: u32, r: u32, s: u32) -> Result<Tree> {
    if r < 1 || s < 1 {
        return Err(Error::infeasible("squared_level requires r, s >= 1"));
    }
    let d1 = level_degree((1 + r as u64) * (1 + r as u64))?;
    let d2 = level_degree((1 + s as u64) * (1 + s as u64))?;
    build_leveled(n, p, &[d1, d2], DEFAULT_VERTEX_CAP)
}

/// Variant with level degrees `2p` and `2p^2`.
pub fn power_level_tree(n: usize, p: u32) -> Result<Tree> {
    if p < 1 {
        return Err(Error::infeasible("power_level requires p >= 1"));
    }
    let d1 = level_degree(2 * p as u64)?;
    let d2 = level_degree(2 * p as u64 * p as u64)?;
    build_leveled(n, p, &[d1, d2], DEFAULT_VERTEX_CAP)
}

/// General k-level pendant tree with prescribed level degrees
/// `d_1 .. d_{k-1}` (each at least 2); level-k vertices are leaves.
pub fn k_level_tree(n: usize, p: u32, level_degrees: &[u32]) -> Result<Tree> {
    k_level_tree_with_cap(n, p, level_degrees, DEFAULT_VERTEX_CAP)
}

/// As [`k_level_tree`] with an explicit vertex-count cap.
pub fn k_level_tree_with_cap(
    n: usize,
    p: u32,
    level_degrees: &[u32],
    cap: u64,
) -> Result<Tree> {
    if level_degrees.is_empty() {
        return Err(Error::infeasible("k_level requires k >= 2 (at least one level degree)"));
    }
    if level_degrees.iter().any(|&d| d < 2) {
        return Err(Error::infeasible(
            "k_level degrees must all be >= 2 (degree 1 would end the levels early)",
        ));
    }
    build_leveled(n, p, level_degrees, cap)
}

fn check_cap(total: u64, cap: u64) -> Result<()> {
    if total > cap {
        return Err(Error::ResourceCap(format!(
            "construction needs {total} vertices, cap is {cap}"
        )));
    }
    Ok(())
}

fn audit(tree: &Tree, expected: impl Fn(u32) -> u32) -> Result<()> {
    for v in 0..tree.vertex_count() as u32 {
        let actual = tree.degree_of(v).expect("in range");
        let want = expected(v);
        if actual != want {
            return Err(Error::InvalidInput(format!(
                "degree audit failed at vertex {v}: built {actual}, role prescribes {want}"
            )));
        }
    }
    Ok(())
}

/// The family names accepted by [`FamilySpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    DoubleStar,
    CaterpillarUniform,
    CaterpillarSpine,
    GreedyPaper,
    GreedyBfs,
    ThreeLevel,
    SquaredLevel,
    PowerLevel,
    KLevel,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::DoubleStar => "double_star",
            Family::CaterpillarUniform => "caterpillar_uniform",
            Family::CaterpillarSpine => "caterpillar_spine",
            Family::GreedyPaper => "greedy_paper",
            Family::GreedyBfs => "greedy_bfs",
            Family::ThreeLevel => "three_level",
            Family::SquaredLevel => "squared_level",
            Family::PowerLevel => "power_level",
            Family::KLevel => "k_level",
        }
    }

    fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "path" => Family::Path,
            "star" => Family::Star,
            "double_star" => Family::DoubleStar,
            "caterpillar_uniform" => Family::CaterpillarUniform,
            "caterpillar_spine" => Family::CaterpillarSpine,
            "greedy_paper" => Family::GreedyPaper,
            "greedy_bfs" => Family::GreedyBfs,
            "three_level" => Family::ThreeLevel,
            "squared_level" => Family::SquaredLevel,
            "power_level" => Family::PowerLevel,
            "k_level" => Family::KLevel,
            other => return Err(Error::infeasible(format!("unknown family {other:?}"))),
        })
    }
}

/// Parameter bundle naming a constructible family instance. Textual
/// grammar: `family=<name>;n=..;p=..;r=..;s=..;d=3,2` with `;`-separated
/// `key=value` pairs and comma-separated integer lists (`d`, `ds`,
/// `spine`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: Option<usize>,
    pub p: Option<u32>,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub k: Option<u32>,
    pub d: Option<Vec<u32>>,
    pub ds: Option<Vec<u32>>,
    pub spine: Option<Vec<u32>>,
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut family = None;
        let mut spec = FamilySpec {
            family: Family::Path,
            n: None,
            p: None,
            r: None,
            s: None,
            k: None,
            d: None,
            ds: None,
            spine: None,
        };
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::infeasible(format!("expected key=value, got {part:?}")))?;
            let int = |v: &str| -> Result<u64> {
                v.trim()
                    .parse()
                    .map_err(|_| Error::infeasible(format!("bad integer {v:?} for key {key:?}")))
            };
            let list = |v: &str| -> Result<Vec<u32>> {
                v.split(',')
                    .map(|tok| {
                        tok.trim().parse().map_err(|_| {
                            Error::infeasible(format!("bad integer {tok:?} in list for {key:?}"))
                        })
                    })
                    .collect()
            };
            match key.trim() {
                "family" => family = Some(Family::from_name(value.trim())?),
                "n" => spec.n = Some(int(value)? as usize),
                "p" => spec.p = Some(int(value)? as u32),
                "r" => spec.r = Some(int(value)? as u32),
                "s" => spec.s = Some(int(value)? as u32),
                "k" => spec.k = Some(int(value)? as u32),
                "d" => spec.d = Some(list(value)?),
                "ds" => spec.ds = Some(list(value)?),
                "spine" => spec.spine = Some(list(value)?),
                other => {
                    return Err(Error::infeasible(format!("unknown key {other:?}")));
                }
            }
        }
        spec.family = family.ok_or_else(|| Error::infeasible("missing family=<name>"))?;
        Ok(spec)
    }

    /// Constructs the tree this spec names.
    pub fn build(&self) -> Result<Tree> {
        let need_n = || self.n.ok_or_else(|| Error::infeasible("missing n"));
        let need_p = || self.p.ok_or_else(|| Error::infeasible("missing p"));
        match self.family {
            Family::Path => path(need_n()?),
            Family::Star => star(need_n()?),
            Family::DoubleStar => {
                let r = self.r.ok_or_else(|| Error::infeasible("missing r"))?;
                let k = self.k.ok_or_else(|| Error::infeasible("missing k"))?;
                double_star(r, k)
            }
            Family::CaterpillarUniform => caterpillar_uniform(need_n()?, need_p()?),
            Family::CaterpillarSpine => {
                let spine = self
                    .spine
                    .as_deref()
                    .ok_or_else(|| Error::infeasible("missing spine=<list>"))?;
                caterpillar_spine(spine)
            }
            Family::GreedyPaper | Family::GreedyBfs => {
                let ds = self
                    .ds
                    .as_deref()
                    .ok_or_else(|| Error::infeasible("missing ds=<list>"))?;
                let ds = DegreeSequence::new(ds.to_vec())
                    .map_err(|e| Error::infeasible(e.to_string()))?;
                let variant = if self.family == Family::GreedyPaper {
                    GreedyVariant::Paper
                } else {
                    GreedyVariant::Bfs
                };
                greedy_tree(&ds, variant)
            }
            Family::ThreeLevel => {
                let (r, s) = (self.r.unwrap_or(0), self.s.unwrap_or(0));
                three_level_tree(need_n()?, need_p()?, r, s)
            }
            Family::SquaredLevel => {
                let r = self.r.ok_or_else(|| Error::infeasible("missing r"))?;
                let s = self.s.ok_or_else(|| Error::infeasible("missing s"))?;
                squared_level_tree(need_n()?, need_p()?, r, s)
            }
            Family::PowerLevel => power_level_tree(need_n()?, need_p()?),
            Family::KLevel => {
                let d = self
                    .d
                    .as_deref()
                    .ok_or_else(|| Error::infeasible("missing d=<list>"))?;
                k_level_tree(need_n()?, need_p()?, d)
            }
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "family={}", self.family.name())?;
        if let Some(n) = self.n {
            write!(f, ";n={n}")?;
        }
        if let Some(p) = self.p {
            write!(f, ";p={p}")?;
        }
        if let Some(r) = self.r {
            write!(f, ";r={r}")?;
        }
        if let Some(s) = self.s {
            write!(f, ";s={s}")?;
        }
        if let Some(k) = self.k {
            write!(f, ";k={k}")?;
        }
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if let Some(d) = &self.d {
            write!(f, ";d={}", join(d))?;
        }
        if let Some(ds) = &self.ds {
            write!(f, ";ds={}", join(ds))?;
        }
        if let Some(spine) = &self.spine {
            write!(f, ";spine={}", join(spine))?;
        }
        Ok(())
    }
}
