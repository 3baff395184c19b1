//! The sphere-complex tree as a coset object.
//!
//! Vertices are cosets `w·H_P` (sphere vertices, kind `P`) and `w·H_M`
//! (barycenters of 2-simplices, kind `M`); `w·H_E` cosets are the edges,
//! so the graph is bipartite. Each vertex is identified by a canonical
//! label: the normal-form syllables of any coset representative with the
//! tail dropped and the trailing syllable of the stabilized factor
//! absorbed. Equal labels mean equal cosets.
//!
//! A barycenter has exactly three neighbors — the simplex it spans — while
//! a sphere vertex has one neighbor per β-power, so the tree is locally
//! infinite on the P side and every finite window truncates it by a bound
//! on the β-exponent.
//!
//! Distances and geodesics come straight from the relative label: walking
//! its syllables left to right, a syllable in the current vertex's
//! stabilizer re-aims inside that vertex, and any other syllable forces an
//! edge crossing. The count of crossings is the distance.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::amalgam::{normal_form, AmalgamElem, Factor, Syllable};
use crate::factors::{EElem, MElem, PElem};
use crate::words::{ParseWordError, Word};

/// Which stabilizer a vertex carries: sphere vertices are P, barycenters M.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    P,
    M,
}

impl VertexKind {
    fn other(self) -> VertexKind {
        match self {
            VertexKind::P => VertexKind::M,
            VertexKind::M => VertexKind::P,
        }
    }

    /// The factor whose syllables the vertex's stabilizer absorbs.
    fn stab_factor(self) -> Factor {
        match self {
            VertexKind::P => Factor::P,
            VertexKind::M => Factor::M,
        }
    }
}

/// A tree vertex: a kind plus its canonical coset label.
///
/// The label alternates factors and, when nonempty, ends in a syllable of
/// the opposite factor to the kind. Structural equality is coset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    kind: VertexKind,
    label: Vec<Syllable>,
}

/// Failures of the tree operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("expected a sphere (P) vertex, got {0}")]
    NotSphereVertex(Vertex),
    #[error("expected a barycenter (M) vertex, got {0}")]
    NotBarycenter(Vertex),
    #[error("descent needs distance >= 4, got {0}")]
    TooClose(u64),
    #[error("edge endpoints must be one barycenter and one sphere vertex")]
    NotBipartitePair,
    #[error("endpoints at distance {0}, not 1")]
    NotAdjacent(u64),
    #[error("twist bound must be >= 1")]
    ZeroTwistBound,
    #[error("cycle witness: {0} rediscovered via a non-parent edge")]
    CycleWitness(Vertex),
}

/// Rejected vertex literal (`P:<word>` / `M:<word>`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseVertexError {
    #[error("vertex literal must start with \"P:\" or \"M:\"")]
    BadPrefix,
    #[error(transparent)]
    BadWord(#[from] ParseWordError),
}

impl Vertex {
    /// The base sphere vertex (empty label, kind P).
    pub fn base_p() -> Vertex {
        Vertex {
            kind: VertexKind::P,
            label: Vec::new(),
        }
    }

    /// The base barycenter (empty label, kind M).
    pub fn base_m() -> Vertex {
        Vertex {
            kind: VertexKind::M,
            label: Vec::new(),
        }
    }

    /// The vertex `w · v_kind`.
    pub fn of_word(w: &Word, kind: VertexKind) -> Vertex {
        Vertex::from_coset(&normal_form(w), kind)
    }

    /// Canonicalizes a coset `g · H_kind`: the tail is dropped (it lies in
    /// every stabilizer) and so is a trailing syllable of the stabilized
    /// factor.
    pub fn from_coset(elem: &AmalgamElem, kind: VertexKind) -> Vertex {
        let mut label = elem.syllables().to_vec();
        if label.last().map(|s| s.factor()) == Some(kind.stab_factor()) {
            label.pop();
        }
        Vertex { kind, label }
    }

    pub fn kind(&self) -> VertexKind {
        self.kind
    }

    pub fn label(&self) -> &[Syllable] {
        &self.label
    }

    /// The label as a group element (identity tail).
    pub fn label_elem(&self) -> AmalgamElem {
        AmalgamElem::from_parts(self.label.clone(), EElem::identity())
            .expect("canonical labels are valid normal forms")
    }

    fn is_sphere(&self) -> bool {
        self.kind == VertexKind::P
    }
}

impl fmt::Display for Vertex {
    // The CLI literal syntax; the empty word is spelled `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            VertexKind::P => 'P',
            VertexKind::M => 'M',
        };
        let word = self.label_elem().to_word();
        if word.is_empty() {
            write!(f, "{prefix}:1")
        } else {
            write!(f, "{prefix}:{word}")
        }
    }
}

impl FromStr for Vertex {
    type Err = ParseVertexError;

    fn from_str(text: &str) -> Result<Vertex, ParseVertexError> {
        let (kind, rest) = match text.split_once(':') {
            Some(("P", rest)) => (VertexKind::P, rest),
            Some(("M", rest)) => (VertexKind::M, rest),
            _ => return Err(ParseVertexError::BadPrefix),
        };
        let word: Word = if rest.trim() == "1" {
            Word::empty()
        } else {
            rest.parse()?
        };
        Ok(Vertex::of_word(&word, kind))
    }
}

impl Serialize for Vertex {
    /// `{"kind":"P","label":<normal-form JSON with identity tail>}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Vertex", 2)?;
        st.serialize_field(
            "kind",
            match self.kind {
                VertexKind::P => "P",
                VertexKind::M => "M",
            },
        )?;
        st.serialize_field("label", &self.label_elem())?;
        st.end()
    }
}

/// An edge of the bipartite tree, stored barycenter first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    barycenter: Vertex,
    sphere: Vertex,
}

impl Edge {
    /// Builds an edge, checking that the endpoints are one vertex of each
    /// kind at tree distance 1.
    pub fn new(u: Vertex, v: Vertex) -> Result<Edge, TreeError> {
        let (barycenter, sphere) = match (u.kind, v.kind) {
            (VertexKind::M, VertexKind::P) => (u, v),
            (VertexKind::P, VertexKind::M) => (v, u),
            _ => return Err(TreeError::NotBipartitePair),
        };
        match distance(&barycenter, &sphere) {
            1 => Ok(Edge { barycenter, sphere }),
            d => Err(TreeError::NotAdjacent(d)),
        }
    }

    pub fn barycenter(&self) -> &Vertex {
        &self.barycenter
    }

    pub fn sphere(&self) -> &Vertex {
        &self.sphere
    }
}

/// The canonical label of the coset `rel · H_kind`, as raw syllables.
fn coset_label(rel: &AmalgamElem, kind: VertexKind) -> Vec<Syllable> {
    Vertex::from_coset(rel, kind).label
}

fn count_factor(label: &[Syllable], factor: Factor) -> u64 {
    label.iter().filter(|s| s.factor() == factor).count() as u64
}

/// Exact tree distance, computed from the relative label.
///
/// Translate so `u` sits at a base vertex and canonicalize `u⁻¹v` against
/// `v`'s stabilizer. For endpoints of equal kind each syllable of the
/// opposite factor costs two edges; for mixed kinds the far endpoint's
/// own factor is counted and the odd edge crosses to the other side.
pub fn distance(u: &Vertex, v: &Vertex) -> u64 {
    let rel = u.label_elem().inverse().mul(&v.label_elem());
    let label = coset_label(&rel, v.kind);
    match (u.kind, v.kind) {
        (VertexKind::P, VertexKind::P) => 2 * count_factor(&label, Factor::M),
        (VertexKind::M, VertexKind::M) => 2 * count_factor(&label, Factor::P),
        (VertexKind::P, VertexKind::M) => 2 * count_factor(&label, Factor::M) + 1,
        (VertexKind::M, VertexKind::P) => 2 * count_factor(&label, Factor::P) + 1,
    }
}

/// The unique path from `u` to `v`, endpoints included.
///
/// Walks the relative label: syllables in the current vertex's stabilizer
/// re-aim in place, anything else crosses an edge. Length is always
/// `distance(u, v) + 1`.
pub fn geodesic(u: &Vertex, v: &Vertex) -> Vec<Vertex> {
    let rel = u.label_elem().inverse().mul(&v.label_elem());
    let label = coset_label(&rel, v.kind);
    let mut path = vec![u.clone()];
    let mut prefix = u.label_elem();
    let mut kind = u.kind;
    let mut i = 0;
    loop {
        if i < label.len() && label[i].factor() == kind.stab_factor() {
            match &label[i] {
                Syllable::P(n) => prefix.push_p(PElem::new(n.clone(), false, false)),
                Syllable::M(k) => prefix.push_m(MElem::new(*k as i64, false, false)),
            }
            i += 1;
        } else if i < label.len() || kind != v.kind {
            kind = kind.other();
            path.push(Vertex::from_coset(&prefix, kind));
        } else {
            return path;
        }
    }
}

/// Neighbors of a vertex, in deterministic order.
///
/// A barycenter has exactly the three sphere vertices of its simplex
/// (`k = 0, 1, 2`). A sphere vertex has the barycenters `w β^n · v_M`,
/// truncated to `|n| <= twist_bound` and listed with `n` ascending.
pub fn neighbors(v: &Vertex, twist_bound: u32) -> Vec<Vertex> {
    assert!(twist_bound >= 1, "twist bound must be >= 1");
    let g = v.label_elem();
    match v.kind {
        VertexKind::M => (0..3u8)
            .map(|k| {
                let mut elem = g.clone();
                elem.push_m(MElem::new(k as i64, false, false));
                Vertex::from_coset(&elem, VertexKind::P)
            })
            .collect(),
        VertexKind::P => {
            let bound = twist_bound as i64;
            (-bound..=bound)
                .map(|n| {
                    let mut elem = g.clone();
                    elem.push_p(PElem::new(n, false, false));
                    Vertex::from_coset(&elem, VertexKind::M)
                })
                .collect()
        }
    }
}

/// Adjacency in the sphere complex: two sphere vertices span an edge there
/// exactly when they are tree distance 2 apart (one barycenter between).
pub fn gamma_adjacent(u: &Vertex, v: &Vertex) -> bool {
    assert!(
        u.is_sphere() && v.is_sphere(),
        "sphere-complex adjacency is defined on sphere vertices"
    );
    distance(u, v) == 2
}

/// The three sphere vertices of the unique 2-simplex with barycenter `m`.
pub fn triangle(m: &Vertex) -> Result<[Vertex; 3], TreeError> {
    if m.kind != VertexKind::M {
        return Err(TreeError::NotBarycenter(m.clone()));
    }
    let mut verts = neighbors(m, 1).into_iter();
    Ok([
        verts.next().expect("barycenter has 3 neighbors"),
        verts.next().expect("barycenter has 3 neighbors"),
        verts.next().expect("barycenter has 3 neighbors"),
    ])
}

/// Result of one descent step toward a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    /// The unique sphere-complex neighbor of `v` two edges closer to the
    /// target.
    pub closer: Vertex,
    /// The third vertex of the simplex containing `v` and `closer`; it
    /// stays at the same distance from the target.
    pub mate: Vertex,
}

/// One step of geodesic descent between sphere vertices.
///
/// Requires `distance(v, target) >= 4` (distinct and not already adjacent
/// in the sphere complex). Among the sphere-complex neighbors of `v`, the
/// returned `closer` is strictly closer to the target by exactly 2, the
/// `mate` ties `v`, and every other neighbor is farther by exactly 2.
pub fn descend(v: &Vertex, target: &Vertex) -> Result<Descent, TreeError> {
    if !v.is_sphere() {
        return Err(TreeError::NotSphereVertex(v.clone()));
    }
    if !target.is_sphere() {
        return Err(TreeError::NotSphereVertex(target.clone()));
    }
    let d = distance(v, target);
    if d < 4 {
        return Err(TreeError::TooClose(d));
    }
    let path = geodesic(v, target);
    let barycenter = &path[1];
    let closer = path[2].clone();
    let mate = triangle(barycenter)?
        .into_iter()
        .find(|p| p != v && *p != closer)
        .expect("a simplex has three distinct vertices");
    Ok(Descent { closer, mate })
}

/// A truncated BFS window around the base sphere vertex.
#[derive(Debug, Clone)]
pub struct TreeBall {
    radius: u32,
    twist_bound: u32,
    vertices: Vec<Vertex>,
    parent: Vec<Option<u32>>,
    depth: Vec<u32>,
    index: HashMap<Vertex, u32>,
}

impl TreeBall {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn twist_bound(&self) -> u32 {
        self.twist_bound
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in BFS discovery order; the base vertex comes first.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.index.contains_key(v)
    }

    pub fn depth_of(&self, v: &Vertex) -> Option<u32> {
        self.index.get(v).map(|&i| self.depth[i as usize])
    }

    pub fn parent_of(&self, v: &Vertex) -> Option<&Vertex> {
        let i = *self.index.get(v)?;
        let p = self.parent[i as usize]?;
        Some(&self.vertices[p as usize])
    }

    /// Distance inside the BFS tree via the lowest common ancestor.
    /// Independent of the algebraic distance computation.
    pub fn tree_distance(&self, u: &Vertex, v: &Vertex) -> Option<u64> {
        let mut a = *self.index.get(u)? as usize;
        let mut b = *self.index.get(v)? as usize;
        let mut steps = 0u64;
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("positive depth has a parent") as usize;
            steps += 1;
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("positive depth has a parent") as usize;
            steps += 1;
        }
        while a != b {
            a = self.parent[a].expect("distinct roots impossible in one tree") as usize;
            b = self.parent[b].expect("distinct roots impossible in one tree") as usize;
            steps += 2;
        }
        Some(steps)
    }

    /// Every parent edge of the ball, checked bipartite on construction.
    pub fn edges(&self) -> Vec<Edge> {
        (1..self.vertices.len())
            .map(|i| {
                let p = self.parent[i].expect("non-root has a parent") as usize;
                Edge::new(self.vertices[i].clone(), self.vertices[p].clone())
                    .expect("ball edges join adjacent vertices of opposite kinds")
            })
            .collect()
    }
}

/// Breadth-first enumeration of the ball of the given radius around the
/// base sphere vertex, with the P-side star truncated by `twist_bound`.
///
/// Rediscovering any vertex through a non-parent edge would witness a
/// cycle and is reported as an error; on a tree it never happens.
pub fn enumerate_ball(radius: u32, twist_bound: u32) -> Result<TreeBall, TreeError> {
    if twist_bound == 0 {
        return Err(TreeError::ZeroTwistBound);
    }
    let base = Vertex::base_p();
    let mut ball = TreeBall {
        radius,
        twist_bound,
        vertices: vec![base.clone()],
        parent: vec![None],
        depth: vec![0],
        index: HashMap::from([(base, 0)]),
    };
    let mut head = 0usize;
    while head < ball.vertices.len() {
        let here = head as u32;
        head += 1;
        if ball.depth[here as usize] == radius {
            continue;
        }
        for n in neighbors(&ball.vertices[here as usize], twist_bound) {
            let parent_of_here = ball.parent[here as usize];
            if parent_of_here.is_some_and(|p| ball.vertices[p as usize] == n) {
                continue;
            }
            if ball.index.contains_key(&n) {
                return Err(TreeError::CycleWitness(n));
            }
            let id = ball.vertices.len() as u32;
            ball.index.insert(n.clone(), id);
            ball.vertices.push(n);
            ball.parent.push(Some(here));
            ball.depth.push(ball.depth[here as usize] + 1);
        }
    }
    Ok(ball)
}
