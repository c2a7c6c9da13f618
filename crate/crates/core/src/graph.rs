//! Simple undirected graphs and the ten labeled families.
//!
//! Vertex numbering is canonical per family (see [`FamilySpec::generate`]) so
//! that constructed labelings are reproducible byte for byte.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Structural role of a vertex inside its family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Apex,
    Hub,
    Rim,
    Path,
    Pendant,
    BladeTip,
    Internal,
    Generic,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Apex => "apex",
            Role::Hub => "hub",
            Role::Rim => "rim",
            Role::Path => "path",
            Role::Pendant => "pendant",
            Role::BladeTip => "blade-tip",
            Role::Internal => "internal",
            Role::Generic => "generic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "apex" => Role::Apex,
            "hub" => Role::Hub,
            "rim" => Role::Rim,
            "path" => Role::Path,
            "pendant" => Role::Pendant,
            "blade-tip" => Role::BladeTip,
            "internal" => Role::Internal,
            "generic" => Role::Generic,
            _ => return None,
        })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Family tag without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    Bistar,
    TriangularSnake,
    Friendship,
    Jellyfish,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Wheel,
        Family::Bistar,
        Family::TriangularSnake,
        Family::Friendship,
        Family::Jellyfish,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Bistar => "bistar",
            Family::TriangularSnake => "triangular-snake",
            Family::Friendship => "friendship",
            Family::Jellyfish => "jellyfish",
        }
    }

    /// Accepts the canonical names plus a few short aliases.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .or(match s.as_str() {
                "bipartite" | "kmn" => Some(Family::CompleteBipartite),
                "kn" => Some(Family::Complete),
                "snake" | "ts" => Some(Family::TriangularSnake),
                _ => None,
            })
    }

    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::Bistar | Family::Jellyfish => 2,
            _ => 1,
        }
    }

    pub fn spec(self, params: &[usize]) -> Result<FamilySpec> {
        if params.len() != self.arity() {
            return Err(Error::Schema {
                field: "params".into(),
                reason: format!(
                    "{} takes {} parameter(s), got {}",
                    self.name(),
                    self.arity(),
                    params.len()
                ),
            });
        }
        let spec = match self {
            Family::Path => FamilySpec::Path(params[0]),
            Family::Cycle => FamilySpec::Cycle(params[0]),
            Family::Complete => FamilySpec::Complete(params[0]),
            Family::CompleteBipartite => FamilySpec::CompleteBipartite(params[0], params[1]),
            Family::Star => FamilySpec::Star(params[0]),
            Family::Wheel => FamilySpec::Wheel(params[0]),
            Family::Bistar => FamilySpec::Bistar(params[0], params[1]),
            Family::TriangularSnake => FamilySpec::TriangularSnake(params[0]),
            Family::Friendship => FamilySpec::Friendship(params[0]),
            Family::Jellyfish => FamilySpec::Jellyfish(params[0], params[1]),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Bistar(usize, usize),
    TriangularSnake(usize),
    Friendship(usize),
    Jellyfish(usize, usize),
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Path(_) => Family::Path,
            FamilySpec::Cycle(_) => Family::Cycle,
            FamilySpec::Complete(_) => Family::Complete,
            FamilySpec::CompleteBipartite(..) => Family::CompleteBipartite,
            FamilySpec::Star(_) => Family::Star,
            FamilySpec::Wheel(_) => Family::Wheel,
            FamilySpec::Bistar(..) => Family::Bistar,
            FamilySpec::TriangularSnake(_) => Family::TriangularSnake,
            FamilySpec::Friendship(_) => Family::Friendship,
            FamilySpec::Jellyfish(..) => Family::Jellyfish,
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::TriangularSnake(n)
            | FamilySpec::Friendship(n) => vec![n],
            FamilySpec::CompleteBipartite(m, n)
            | FamilySpec::Bistar(m, n)
            | FamilySpec::Jellyfish(m, n) => vec![m, n],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (ok, bound) = match *self {
            FamilySpec::Path(n) => (n >= 1, "n >= 1"),
            FamilySpec::Cycle(n) => (n >= 3, "n >= 3"),
            FamilySpec::Complete(n) => (n >= 1, "n >= 1"),
            FamilySpec::CompleteBipartite(m, n) => (m >= 1 && n >= 1, "m >= 1 and n >= 1"),
            FamilySpec::Star(n) => (n >= 1, "n >= 1"),
            FamilySpec::Wheel(n) => (n >= 3, "n >= 3"),
            FamilySpec::Bistar(m, n) => (m >= 1 && n >= 1, "m >= 1 and n >= 1"),
            FamilySpec::TriangularSnake(n) => (n >= 1, "n >= 1"),
            FamilySpec::Friendship(n) => (n >= 1, "n >= 1"),
            FamilySpec::Jellyfish(..) => (true, "m1 >= 0 and m2 >= 0"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange {
                family: self.family().name(),
                bound,
            })
        }
    }

    /// Closed-form `(|V|, |E|)`.
    pub fn size(&self) -> (usize, usize) {
        match *self {
            FamilySpec::Path(n) => (n, n.saturating_sub(1)),
            FamilySpec::Cycle(n) => (n, n),
            FamilySpec::Complete(n) => (n, n * n.saturating_sub(1) / 2),
            FamilySpec::CompleteBipartite(m, n) => (m + n, m * n),
            FamilySpec::Star(n) => (n + 1, n),
            FamilySpec::Wheel(n) => (n + 1, 2 * n),
            FamilySpec::Bistar(m, n) => (m + n + 2, m + n + 1),
            FamilySpec::TriangularSnake(n) => (2 * n + 1, 3 * n),
            FamilySpec::Friendship(n) => (2 * n + 1, 3 * n),
            FamilySpec::Jellyfish(a, b) => (a + b + 4, a + b + 5),
        }
    }

    /// Builds the family graph with canonical numbering:
    ///
    /// * `Path(n)`: `0 - 1 - ... - (n-1)`.
    /// * `Cycle(n)`: rim `0..n` in cyclic order.
    /// * `Complete(n)`: `0..n`.
    /// * `CompleteBipartite(m, n)`: side one `0..m`, side two `m..m+n`.
    /// * `Star(n)`: apex `0`, pendants `1..=n`.
    /// * `Wheel(n)`: rim `0..n` in cyclic order, hub `n`.
    /// * `Bistar(m, n)`: apexes `0` and `1`, pendants of `0` at `2..m+2`,
    ///   pendants of `1` at `m+2..m+n+2`.
    /// * `TriangularSnake(n)`: spine `v_1..v_{n+1}` at `0..=n`, tips
    ///   `u_1..u_n` at `n+1..=2n` with `u_i` adjacent to `v_i` and `v_{i+1}`.
    /// * `Friendship(n)`: apex `0`, blade `i` (1-based) is `{0, 2i-1, 2i}`.
    /// * `Jellyfish(m1, m2)`: internal `v_1..v_4` at `0..4` with edges
    ///   `v1v2, v1v3, v1v4, v2v3, v2v4`; `m1` pendants on `v_3` at
    ///   `4..4+m1`, then `m2` pendants on `v_4`.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let (nv, _) = self.size();
        let mut edges = Vec::new();
        let mut roles = vec![Role::Generic; nv];
        match *self {
            FamilySpec::Path(n) => {
                roles.fill(Role::Path);
                edges.extend((1..n).map(|i| (i - 1, i)));
            }
            FamilySpec::Cycle(n) => {
                roles.fill(Role::Rim);
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            }
            FamilySpec::Complete(n) => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
            }
            FamilySpec::CompleteBipartite(m, n) => {
                for u in 0..m {
                    edges.extend((m..m + n).map(|v| (u, v)));
                }
            }
            FamilySpec::Star(n) => {
                roles.fill(Role::Pendant);
                roles[0] = Role::Apex;
                edges.extend((1..=n).map(|v| (0, v)));
            }
            FamilySpec::Wheel(n) => {
                roles.fill(Role::Rim);
                roles[n] = Role::Hub;
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
                edges.extend((0..n).map(|i| (i, n)));
            }
            FamilySpec::Bistar(m, n) => {
                roles.fill(Role::Pendant);
                roles[0] = Role::Apex;
                roles[1] = Role::Apex;
                edges.push((0, 1));
                edges.extend((2..m + 2).map(|v| (0, v)));
                edges.extend((m + 2..m + n + 2).map(|v| (1, v)));
            }
            FamilySpec::TriangularSnake(n) => {
                for (i, role) in roles.iter_mut().enumerate() {
                    *role = if i <= n { Role::Path } else { Role::BladeTip };
                }
                for i in 0..n {
                    let tip = n + 1 + i;
                    edges.push((i, i + 1));
                    edges.push((i, tip));
                    edges.push((i + 1, tip));
                }
            }
            FamilySpec::Friendship(n) => {
                roles.fill(Role::BladeTip);
                roles[0] = Role::Apex;
                for i in 1..=n {
                    edges.push((0, 2 * i - 1));
                    edges.push((0, 2 * i));
                    edges.push((2 * i - 1, 2 * i));
                }
            }
            FamilySpec::Jellyfish(m1, m2) => {
                roles.fill(Role::Pendant);
                roles[..4].fill(Role::Internal);
                edges.extend([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
                edges.extend((4..4 + m1).map(|v| (2, v)));
                edges.extend((4 + m1..4 + m1 + m2).map(|v| (3, v)));
            }
        }
        let mut g = Graph::new(nv, edges, roles)?;
        g.family = Some(*self);
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.family().name(), params.join(","))
    }
}

/// Simple undirected graph. Edges are stored normalized (`u < v`) and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    roles: Vec<Role>,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Rejects self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, roles: Vec<Role>) -> Result<Self> {
        if roles.len() != vertex_count {
            return Err(Error::LengthMismatch {
                expected: vertex_count,
                got: roles.len(),
            });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "endpoint out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                u: w[0].0,
                v: w[0].1,
                reason: "duplicate edge",
            });
        }
        Ok(Self {
            vertex_count,
            edges: normalized,
            roles,
            family: None,
        })
    }

    pub fn with_family(mut self, family: Option<FamilySpec>) -> Self {
        self.family = family;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn family(&self) -> Option<FamilySpec> {
        self.family
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbourhood bitmasks, or `None` above 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.vertex_count];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Some(masks)
    }

    /// Breadth-first connectivity check. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Vertex-induced subgraph on `keep` (duplicates ignored). New ids follow
    /// ascending old ids; the second element maps new id to old id.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut back: Vec<usize> = keep.to_vec();
        back.sort_unstable();
        back.dedup();
        if let Some(&bad) = back.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::UnknownVertex {
                vertex: bad,
                vertex_count: self.vertex_count,
            });
        }
        let mut forward = vec![usize::MAX; self.vertex_count];
        for (new, &old) in back.iter().enumerate() {
            forward[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| forward[u] != usize::MAX && forward[v] != usize::MAX)
            .map(|&(u, v)| (forward[u], forward[v]))
            .collect();
        let roles = back.iter().map(|&old| self.roles[old]).collect();
        let family = if back.len() == self.vertex_count {
            self.family
        } else {
            None
        };
        let g = Graph::new(back.len(), edges, roles)?.with_family(family);
        Ok((g, back))
    }

    /// Same graph with vertex `v` renamed to `perm[v]`. Roles move with their
    /// vertex; the family tag is dropped.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.vertex_count {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count,
                got: perm.len(),
            });
        }
        let mut roles = vec![Role::Generic; self.vertex_count];
        for (v, &p) in perm.iter().enumerate() {
            roles[p] = self.roles[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.vertex_count, edges, roles)
    }
}

pub fn generate(spec: FamilySpec) -> Result<Graph> {
    spec.generate()
}
