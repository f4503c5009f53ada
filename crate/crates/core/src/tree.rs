//! Labeled trees on vertices `1..=n`, the Prüfer codec, tree generators, the
//! q-Laplacian and matchings.
//!
//! Vertices are 1-indexed everywhere a tree is visible to the user (edge
//! lists, Prüfer sequences, files). Matrix rows and columns are 0-indexed, so
//! vertex `v` lives in row `v - 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ParseError, TreeError};
use crate::poly::{rat, RatPoly};

/// Largest `n` for which [`TreeKind::All`] will enumerate all `n^(n-2)` trees.
pub const ALL_TREES_MAX_N: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    n: usize,
    /// Sorted, each pair stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Validates that `edges` forms a spanning tree on `1..=n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::TooSmall { n, min: 1 });
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount {
                n,
                expected: n - 1,
                got: edges.len(),
            });
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(TreeError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
        }
        // n - 1 distinct edges and connected implies acyclic.
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &norm {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(TreeError::Disconnected);
            }
            parent[ru] = rv;
        }
        Ok(Tree { n, edges: norm })
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self, TreeError> {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Self::new(n, &edges)
    }

    /// The star centered at vertex 1.
    pub fn star(n: usize) -> Result<Self, TreeError> {
        let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees indexed by vertex; index 0 is unused and zero.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency lists indexed by vertex; index 0 is unused.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Plain-text edge-list format: first line `n`, then one `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| ParseError::TreeFile("empty input".into()))?
            .parse()
            .map_err(|_| ParseError::TreeFile("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = nums.iter().map(|t| t.parse().ok()).collect();
            match parsed.as_deref() {
                Some([u, v]) => edges.push((*u, *v)),
                _ => return Err(ParseError::TreeFile(format!("bad edge line `{line}`"))),
            }
        }
        Tree::new(n, &edges).map_err(|e| ParseError::TreeFile(e.to_string()))
    }
}

impl fmt::Display for Tree {
    /// Compact id such as `n=4:1-2,2-3,3-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

/// Prüfer sequence of a tree with `n >= 2` vertices.
pub fn pruefer_encode(tree: &Tree) -> Result<Vec<usize>, TreeError> {
    let n = tree.n;
    if n < 2 {
        return Err(TreeError::TooSmall { n, min: 2 });
    }
    let adj = tree.neighbors();
    let mut deg = tree.degrees();
    let mut removed = vec![false; n + 1];
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| deg[v] == 1).collect();
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        removed[leaf] = true;
        let nb = adj[leaf]
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .expect("leaf has one live neighbor");
        seq.push(nb);
        deg[nb] -= 1;
        if deg[nb] == 1 {
            leaves.insert(nb);
        }
    }
    Ok(seq)
}

/// Tree on `n` vertices with the given Prüfer sequence.
pub fn pruefer_decode(n: usize, seq: &[usize]) -> Result<Tree, TreeError> {
    if n < 2 {
        return Err(TreeError::TooSmall { n, min: 2 });
    }
    if seq.len() != n - 2 {
        return Err(TreeError::PrueferLength {
            n,
            expected: n - 2,
            got: seq.len(),
        });
    }
    let mut deg = vec![1usize; n + 1];
    for &a in seq {
        if a == 0 || a > n {
            return Err(TreeError::VertexOutOfRange { vertex: a, n });
        }
        deg[a] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| deg[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = leaves.pop_first().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, a));
        deg[a] -= 1;
        if deg[a] == 1 {
            leaves.insert(a);
        }
    }
    let u = leaves.pop_first().expect("two vertices remain");
    let v = leaves.pop_first().expect("two vertices remain");
    edges.push((u, v));
    Tree::new(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    Path,
    Star,
    /// Every labeled tree, in lexicographic order of Prüfer sequences.
    All,
    /// Uniform labeled trees from a seeded generator; the iterator is unbounded.
    Random,
}

impl FromStr for TreeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(TreeKind::Path),
            "star" => Ok(TreeKind::Star),
            "all" => Ok(TreeKind::All),
            "random" => Ok(TreeKind::Random),
            other => Err(format!("unknown tree kind `{other}`")),
        }
    }
}

pub type TreeIter = Box<dyn Iterator<Item = Tree> + Send>;

/// Trees of the requested kind. `seed` only affects [`TreeKind::Random`]
/// (default 0).
pub fn generate_trees(kind: TreeKind, n: usize, seed: Option<u64>) -> Result<TreeIter, TreeError> {
    if n < 2 {
        return Err(TreeError::TooSmall { n, min: 2 });
    }
    match kind {
        TreeKind::Path => Ok(Box::new(std::iter::once(Tree::path(n)?))),
        TreeKind::Star => Ok(Box::new(std::iter::once(Tree::star(n)?))),
        TreeKind::All => {
            if n > ALL_TREES_MAX_N {
                return Err(TreeError::EnumerationCap {
                    n,
                    cap: ALL_TREES_MAX_N,
                });
            }
            Ok(Box::new(PrueferOdometer::new(n)))
        }
        TreeKind::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            Ok(Box::new(std::iter::from_fn(move || {
                let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
                Some(pruefer_decode(n, &seq).expect("random sequence is in range"))
            })))
        }
    }
}

/// Counts through every sequence in `{1..n}^(n-2)`.
struct PrueferOdometer {
    n: usize,
    digits: Option<Vec<usize>>,
}

impl PrueferOdometer {
    fn new(n: usize) -> Self {
        PrueferOdometer {
            n,
            digits: Some(vec![1; n - 2]),
        }
    }
}

impl Iterator for PrueferOdometer {
    type Item = Tree;
    fn next(&mut self) -> Option<Tree> {
        let digits = self.digits.as_mut()?;
        let tree = pruefer_decode(self.n, digits).expect("odometer digits are in range");
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            if digits[pos] < self.n {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 1;
        }
        Some(tree)
    }
}

/// Square matrix of polynomials, row-major, 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<RatPoly>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![RatPoly::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<RatPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &RatPoly {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RatPoly) {
        self.entries[row * self.n + col] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entrywise evaluation at `q = point`.
    pub fn eval(&self, point: &crate::poly::Rational) -> Vec<Vec<crate::poly::Rational>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).eval(point)).collect())
            .collect()
    }
}

/// `I + (D - I) q^2 - q A`.
pub fn q_laplacian(tree: &Tree) -> PolyMatrix {
    let n = tree.n;
    let deg = tree.degrees();
    let mut m = PolyMatrix::zeros(n);
    for v in 1..=n {
        m.set(v - 1, v - 1, diagonal_weight(deg[v]));
    }
    let minus_q = RatPoly::from_ints(&[0, -1]);
    for &(u, v) in &tree.edges {
        m.set(u - 1, v - 1, minus_q.clone());
        m.set(v - 1, u - 1, minus_q.clone());
    }
    m
}

/// `1 + (deg - 1) q^2`.
pub fn diagonal_weight(degree: usize) -> RatPoly {
    RatPoly::from_coeffs(vec![rat(1), rat(0), rat(degree as i64 - 1)])
}

/// A set of pairwise disjoint tree edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// All matchings, by include/exclude recursion over the edge list.
pub fn matchings(tree: &Tree) -> Vec<Matching> {
    fn go(
        edges: &[(usize, usize)],
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        let Some((&(u, v), rest)) = edges.split_first() else {
            out.push(Matching {
                edges: current.clone(),
            });
            return;
        };
        go(rest, used, current, out);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            current.push((u, v));
            go(rest, used, current, out);
            current.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; tree.n + 1];
    go(&tree.edges, &mut used, &mut Vec::new(), &mut out);
    out
}

/// `c_j = Σ_{|M| = j} q^{2j} Π_{v unmatched} (1 + (deg v - 1) q^2)` for
/// `j = 0..=n/2`, computed by a rooted dynamic program.
pub fn matching_weights(tree: &Tree) -> Vec<RatPoly> {
    let n = tree.n;
    let deg = tree.degrees();
    let adj = tree.neighbors();
    let weight: Vec<RatPoly> = deg.iter().map(|&d| diagonal_weight(d)).collect();
    let q2 = RatPoly::from_ints(&[0, 0, 1]);

    let mut order = Vec::with_capacity(n);
    let mut parent = vec![0usize; n + 1];
    let mut stack = vec![1usize];
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    // free[v]: v left unmatched, its own diagonal factor not yet applied.
    // matched[v]: v matched to one of its children.
    let mut free: Vec<Vec<RatPoly>> = vec![Vec::new(); n + 1];
    let mut matched: Vec<Vec<RatPoly>> = vec![Vec::new(); n + 1];
    for &v in order.iter().rev() {
        let mut f = vec![RatPoly::one()];
        let mut m: Vec<RatPoly> = Vec::new();
        for &c in &adj[v] {
            if c == parent[v] {
                continue;
            }
            let total = add_series(&scale_series(&free[c], &weight[c]), &matched[c]);
            let pair = shift_series(&scale_series(&free[c], &q2));
            m = add_series(&convolve(&m, &total), &convolve(&f, &pair));
            f = convolve(&f, &total);
        }
        free[v] = f;
        matched[v] = m;
    }
    let mut c = add_series(&scale_series(&free[1], &weight[1]), &matched[1]);
    c.resize(n / 2 + 1, RatPoly::zero());
    c
}

fn convolve(a: &[RatPoly], b: &[RatPoly]) -> Vec<RatPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn add_series(a: &[RatPoly], b: &[RatPoly]) -> Vec<RatPoly> {
    let mut out = vec![RatPoly::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn scale_series(a: &[RatPoly], by: &RatPoly) -> Vec<RatPoly> {
    a.iter().map(|x| x * by).collect()
}

fn shift_series(a: &[RatPoly]) -> Vec<RatPoly> {
    std::iter::once(RatPoly::zero()).chain(a.iter().cloned()).collect()
}
