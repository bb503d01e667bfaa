//! Plabic graphs in a disk: validation, faces, normal and flamingo webs,
//! trip digraphs, and the plabic graph of a noncrossing partition.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraphs::PromotionDigraph;
use crate::noncrossing::NoncrossingSetPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlabicError {
    #[error("a plabic graph needs at least one boundary vertex")]
    NoBoundary,
    #[error("vertex id {0} is used twice or collides with a boundary label")]
    DuplicateVertex(u32),
    #[error("edge mentions unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("edge {0} is a loop")]
    SelfLoop(usize),
    #[error("boundary vertex {vertex} has degree {degree}, expected 1")]
    BoundaryDegree { vertex: u32, degree: usize },
    #[error("rotation at vertex {0} is not an ordering of its incident edges")]
    InconsistentRotation(u32),
    #[error("rotation system is not planar in the disk (Euler characteristic {euler})")]
    NotPlanar { euler: i64 },
    #[error("trip index i = {i} must satisfy 1 <= i < r = {r}")]
    InvalidTripIndex { i: usize, r: usize },
    #[error("vertex {vertex} has degree {degree}, below the threshold {r}")]
    DegreeBelowThreshold { vertex: u32, degree: usize, r: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// Plabic graph in a disk. Boundary vertices `b_1, …, b_n` carry ids `1..=n`,
/// sit clockwise on the boundary circle, are black and have degree 1.
/// Interior vertices carry arbitrary other ids. `rotation[v]` lists the edge
/// ids at `v` in clockwise order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "PlabicJson", into = "PlabicJson")]
pub struct PlabicGraph {
    n: usize,
    ids: Vec<u32>,
    colors: Vec<Color>,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InteriorVertex {
    pub id: u32,
    pub color: Color,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlabicJson {
    pub n: usize,
    pub interior: Vec<InteriorVertex>,
    pub edges: Vec<[u32; 2]>,
    #[serde(default)]
    pub rotation: BTreeMap<u32, Vec<usize>>,
}

impl TryFrom<PlabicJson> for PlabicGraph {
    type Error = PlabicError;
    fn try_from(j: PlabicJson) -> Result<Self, Self::Error> {
        PlabicGraph::new(
            j.n,
            j.interior.into_iter().map(|v| (v.id, v.color)).collect(),
            j.edges.into_iter().map(|[a, b]| (a, b)).collect(),
            j.rotation,
        )
    }
}

impl From<PlabicGraph> for PlabicJson {
    fn from(g: PlabicGraph) -> Self {
        PlabicJson {
            n: g.n,
            interior: (g.n..g.ids.len())
                .map(|v| InteriorVertex {
                    id: g.ids[v],
                    color: g.colors[v],
                })
                .collect(),
            edges: g.edges.iter().map(|&(a, b)| [g.ids[a], g.ids[b]]).collect(),
            rotation: (g.n..g.ids.len())
                .map(|v| (g.ids[v], g.rotation[v].clone()))
                .collect(),
        }
    }
}

/// A face of the graph together with the boundary circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Vertex ids along the face, in traversal order.
    pub vertices: Vec<u32>,
    pub touches_boundary: bool,
}

impl Face {
    pub fn distinct_vertices(&self) -> usize {
        self.vertices.iter().collect::<BTreeSet<_>>().len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub planar: bool,
    pub normal: bool,
    pub flamingo: bool,
    /// `#white − #interior black`.
    pub k: i64,
    pub reasons: Vec<String>,
}

/// Digraph on the boundary labels produced by the trips of a plabic graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripDigraph {
    pub n: u32,
    pub i: usize,
    pub r: usize,
    pub edges: Vec<(u32, u32)>,
}

impl TripDigraph {
    /// Same edges as a promotion digraph with index `i`.
    pub fn to_digraph(&self) -> PromotionDigraph {
        PromotionDigraph::new(self.n, self.i, self.edges.iter().copied())
            .expect("trip edges join boundary labels")
    }
}

impl PartialEq for PlabicGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_code() == other.canonical_code()
    }
}

impl Eq for PlabicGraph {}

impl std::hash::Hash for PlabicGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical_code().hash(state);
    }
}

impl PlabicGraph {
    /// Builds and structurally checks a graph. Rotations for boundary
    /// vertices may be omitted.
    pub fn new(
        n: usize,
        interior: Vec<(u32, Color)>,
        edges: Vec<(u32, u32)>,
        rotation: BTreeMap<u32, Vec<usize>>,
    ) -> Result<Self, PlabicError> {
        if n == 0 {
            return Err(PlabicError::NoBoundary);
        }
        let mut index: HashMap<u32, usize> = (1..=n as u32).map(|b| (b, b as usize - 1)).collect();
        let mut ids: Vec<u32> = (1..=n as u32).collect();
        let mut colors = vec![Color::Black; n];
        for (id, color) in interior {
            if index.insert(id, ids.len()).is_some() {
                return Err(PlabicError::DuplicateVertex(id));
            }
            ids.push(id);
            colors.push(color);
        }
        let mut es = Vec::with_capacity(edges.len());
        for (e, &(a, b)) in edges.iter().enumerate() {
            let ia = *index.get(&a).ok_or(PlabicError::UnknownVertex(a))?;
            let ib = *index.get(&b).ok_or(PlabicError::UnknownVertex(b))?;
            if ia == ib {
                return Err(PlabicError::SelfLoop(e));
            }
            es.push((ia, ib));
        }
        let mut rot = vec![Vec::new(); ids.len()];
        for (&id, order) in &rotation {
            let v = *index.get(&id).ok_or(PlabicError::UnknownVertex(id))?;
            rot[v] = order.clone();
        }
        for (v, r) in rot.iter_mut().enumerate().take(n) {
            if r.is_empty() {
                *r = (0..es.len())
                    .filter(|&e| es[e].0 == v || es[e].1 == v)
                    .collect();
            }
        }
        Self::from_raw(n, ids, colors, es, rot)
    }

    pub(crate) fn from_raw(
        n: usize,
        ids: Vec<u32>,
        colors: Vec<Color>,
        edges: Vec<(usize, usize)>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, PlabicError> {
        let g = PlabicGraph {
            n,
            ids,
            colors,
            edges,
            rotation,
        };
        g.check_structure()?;
        Ok(g)
    }

    /// Builds the rotation system from straight-line coordinates: incident
    /// edges are sorted clockwise by angle around each vertex.
    pub fn from_embedding(
        n: usize,
        interior: Vec<(u32, Color)>,
        edges: Vec<(u32, u32)>,
        positions: &HashMap<u32, (f64, f64)>,
    ) -> Result<Self, PlabicError> {
        let mut incident: BTreeMap<u32, Vec<(f64, usize)>> = BTreeMap::new();
        for (e, &(a, b)) in edges.iter().enumerate() {
            for (x, y) in [(a, b), (b, a)] {
                let p = positions.get(&x).ok_or(PlabicError::UnknownVertex(x))?;
                let q = positions.get(&y).ok_or(PlabicError::UnknownVertex(y))?;
                let angle = (q.1 - p.1).atan2(q.0 - p.0);
                incident.entry(x).or_default().push((angle, e));
            }
        }
        let rotation = incident
            .into_iter()
            .map(|(v, mut list)| {
                // Clockwise means decreasing angle.
                list.sort_by(|a, b| b.0.total_cmp(&a.0));
                (v, list.into_iter().map(|(_, e)| e).collect())
            })
            .collect();
        PlabicGraph::new(n, interior, edges, rotation)
    }

    fn check_structure(&self) -> Result<(), PlabicError> {
        let mut degree = vec![0usize; self.ids.len()];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        for v in 0..self.n {
            if degree[v] != 1 {
                return Err(PlabicError::BoundaryDegree {
                    vertex: self.ids[v],
                    degree: degree[v],
                });
            }
        }
        for (v, order) in self.rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            let ok = order.len() == degree[v]
                && order.iter().all(|&e| {
                    e < self.edges.len()
                        && (self.edges[e].0 == v || self.edges[e].1 == v)
                        && seen.insert(e)
                });
            if !ok {
                return Err(PlabicError::InconsistentRotation(self.ids[v]));
            }
        }
        Ok(())
    }

    pub fn boundary_count(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn interior_count(&self) -> usize {
        self.ids.len() - self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn id(&self, v: usize) -> u32 {
        self.ids[v]
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.n
    }

    /// Edges as pairs of vertex ids.
    pub fn edge_ids(&self) -> Vec<(u32, u32)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.ids[a], self.ids[b]))
            .collect()
    }

    fn half_edge_at(&self, e: usize, v: usize) -> usize {
        if self.edges[e].0 == v {
            2 * e
        } else {
            2 * e + 1
        }
    }

    fn head(&self, h: usize) -> usize {
        let (a, b) = self.edges[h / 2];
        if h % 2 == 0 {
            b
        } else {
            a
        }
    }

    fn tail(&self, h: usize) -> usize {
        let (a, b) = self.edges[h / 2];
        if h % 2 == 0 {
            a
        } else {
            b
        }
    }

    /// Half-edge rotations of the graph with the boundary circle added as
    /// arcs `b_x -> b_{x+1}`. Returns (tails, heads, rotation per vertex).
    fn augmented(&self) -> (Vec<usize>, Vec<usize>, Vec<Vec<usize>>) {
        let m = self.edges.len();
        let mut tails = Vec::with_capacity(2 * m + 2 * self.n);
        let mut heads = Vec::with_capacity(2 * m + 2 * self.n);
        for h in 0..2 * m {
            tails.push(self.tail(h));
            heads.push(self.head(h));
        }
        let mut rot: Vec<Vec<usize>> = (0..self.ids.len())
            .map(|v| self.rotation[v].iter().map(|&e| self.half_edge_at(e, v)).collect())
            .collect();
        if self.n >= 2 {
            let n = self.n;
            for x in 0..n {
                let y = (x + 1) % n;
                tails.push(x);
                heads.push(y);
                tails.push(y);
                heads.push(x);
            }
            for x in 0..n {
                let forward = 2 * m + 2 * x;
                let backward = 2 * m + 2 * ((x + n - 1) % n) + 1;
                let stub = rot[x][0];
                rot[x] = vec![forward, stub, backward];
            }
        }
        (tails, heads, rot)
    }

    /// Faces of the augmented graph, with the face outside the circle first.
    fn all_faces(&self) -> Vec<Vec<usize>> {
        let (tails, heads, rot) = self.augmented();
        let total = tails.len();
        let mut position = vec![(0usize, 0usize); total];
        for (v, list) in rot.iter().enumerate() {
            for (p, &h) in list.iter().enumerate() {
                position[h] = (v, p);
            }
        }
        let twin = |h: usize| h ^ 1;
        let mut seen = vec![false; total];
        let mut faces = Vec::new();
        let start_order: Vec<usize> = if self.n >= 2 {
            let m2 = 2 * self.edges.len();
            std::iter::once(m2).chain(0..total).collect()
        } else {
            (0..total).collect()
        };
        for start in start_order {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                walk.push(tails[h]);
                let t = twin(h);
                let (v, p) = position[t];
                debug_assert_eq!(heads[h], v);
                h = rot[v][(p + 1) % rot[v].len()];
            }
            faces.push(walk);
        }
        faces
    }

    fn euler(&self) -> i64 {
        let arcs = if self.n >= 2 { self.n } else { 0 };
        let v = self.ids.len() as i64;
        let e = (self.edges.len() + arcs) as i64;
        let f = self.all_faces().len() as i64;
        v - e + f
    }

    /// Faces inside the disk.
    pub fn faces(&self) -> Result<Vec<Face>, PlabicError> {
        validate_plabic(self)?;
        let mut faces = self.all_faces();
        if self.n >= 2 {
            faces.remove(0);
        }
        Ok(faces
            .into_iter()
            .map(|walk| Face {
                touches_boundary: walk.iter().any(|&v| v < self.n),
                vertices: walk.into_iter().map(|v| self.ids[v]).collect(),
            })
            .collect())
    }

    /// Isomorphism code of the rotation system with boundary labels fixed.
    pub fn canonical_code(&self) -> Vec<u32> {
        let nv = self.ids.len();
        let mut label = vec![usize::MAX; nv];
        let mut entry = vec![usize::MAX; nv];
        let mut order = Vec::with_capacity(nv);
        for v in 0..self.n {
            label[v] = v;
            entry[v] = self.half_edge_at(self.rotation[v][0], v);
            order.push(v);
        }
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for h in self.rotation_from(v, entry[v]) {
                let w = self.head(h);
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    entry[w] = h ^ 1;
                    order.push(w);
                }
            }
        }
        let slot = |h: usize| -> (usize, usize) {
            let v = self.tail(h);
            let list = self.rotation_from(v, entry[v]);
            (label[v], list.iter().position(|&x| x == h).unwrap())
        };
        let mut code = vec![self.n as u32, order.len() as u32];
        for &v in &order {
            code.push(self.colors[v] as u32);
            let list = self.rotation_from(v, entry[v]);
            code.push(list.len() as u32);
            for h in list {
                let (l, p) = slot(h ^ 1);
                code.push(l as u32);
                code.push(p as u32);
            }
        }
        code
    }

    fn rotation_from(&self, v: usize, h: usize) -> Vec<usize> {
        let list: Vec<usize> = self.rotation[v]
            .iter()
            .map(|&e| self.half_edge_at(e, v))
            .collect();
        if list.is_empty() {
            return list;
        }
        let p = list.iter().position(|&x| x == h).unwrap_or(0);
        list[p..].iter().chain(&list[..p]).copied().collect()
    }

    fn is_normal_inner(&self, reasons: &mut Vec<String>) -> bool {
        let mut ok = true;
        for v in self.n..self.ids.len() {
            if self.colors[v] == Color::Black && self.degree(v) != 3 {
                ok = false;
                reasons.push(format!("black vertex {} has degree {}", self.ids[v], self.degree(v)));
            }
        }
        for &(a, b) in &self.edges {
            if self.colors[a] == self.colors[b] {
                ok = false;
                reasons.push(format!(
                    "edge {}-{} joins two {:?} vertices",
                    self.ids[a], self.ids[b], self.colors[a]
                ));
            }
        }
        ok
    }
}

/// Checks the structure and that the rotation system embeds in the disk
/// with the boundary vertices clockwise on the circle.
pub fn validate_plabic(g: &PlabicGraph) -> Result<(), PlabicError> {
    g.check_structure()?;
    let euler = g.euler();
    if euler != 2 {
        return Err(PlabicError::NotPlanar { euler });
    }
    Ok(())
}

/// Boundary vertices black of degree 1, interior black vertices trivalent,
/// and every edge joins vertices of different colors.
pub fn is_normal(g: &PlabicGraph) -> bool {
    g.is_normal_inner(&mut Vec::new())
}

pub fn classify(g: &PlabicGraph) -> Classification {
    let mut reasons = Vec::new();
    let planar = match validate_plabic(g) {
        Ok(()) => true,
        Err(e) => {
            reasons.push(e.to_string());
            false
        }
    };
    let normal = g.is_normal_inner(&mut reasons);
    let mut flamingo = planar && normal;
    for v in g.n..g.ids.len() {
        if g.colors[v] == Color::White && g.degree(v) < 3 {
            flamingo = false;
            reasons.push(format!("white vertex {} has degree {}", g.ids[v], g.degree(v)));
        }
    }
    if planar {
        for face in g.faces().unwrap() {
            if !face.touches_boundary && face.distinct_vertices() < 6 {
                flamingo = false;
                reasons.push(format!("interior face {:?} is too small", face.vertices));
            }
        }
    }
    let whites = (g.n..g.ids.len()).filter(|&v| g.colors[v] == Color::White).count() as i64;
    let blacks = (g.interior_count() as i64) - whites;
    Classification {
        planar,
        normal,
        flamingo,
        k: whites - blacks,
        reasons,
    }
}

/// Whether `g` is a flamingo web, and its `k`.
pub fn is_flamingo(g: &PlabicGraph) -> (bool, i64) {
    let c = classify(g);
    (c.flamingo, c.k)
}

/// Trip digraph `trip_{i,r}`: from each boundary vertex, walk into the graph;
/// at a white vertex of degree `h` turn to the `(i+ℓ)`-th edge clockwise
/// from the arrival edge, at a black vertex to the `(i+ℓ)`-th edge
/// counterclockwise, for every `0 ≤ ℓ ≤ h − r`. An edge `α → β` records that
/// some such walk from `b_α` reaches `b_β`.
///
/// Interior leaves end walks. Other interior vertices of degree below `r`
/// are rejected.
pub fn trip_digraph(g: &PlabicGraph, i: usize, r: usize) -> Result<TripDigraph, PlabicError> {
    if i == 0 || i >= r {
        return Err(PlabicError::InvalidTripIndex { i, r });
    }
    validate_plabic(g)?;
    for v in g.n..g.ids.len() {
        let d = g.degree(v);
        if d > 1 && d < r {
            return Err(PlabicError::DegreeBelowThreshold {
                vertex: g.ids[v],
                degree: d,
                r,
            });
        }
    }
    let rot: Vec<Vec<usize>> = (0..g.ids.len())
        .map(|v| g.rotation[v].iter().map(|&e| g.half_edge_at(e, v)).collect())
        .collect();
    let mut position = vec![0usize; 2 * g.edges.len()];
    for list in &rot {
        for (p, &h) in list.iter().enumerate() {
            position[h] = p;
        }
    }
    let mut edges = BTreeSet::new();
    for alpha in 0..g.n {
        // States are half-edges at the vertex being entered.
        let mut seen = vec![false; 2 * g.edges.len()];
        let start = rot[alpha][0] ^ 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(h) = stack.pop() {
            let v = g.tail(h);
            if v < g.n {
                edges.insert((alpha as u32 + 1, v as u32 + 1));
                continue;
            }
            let d = rot[v].len();
            if d < r {
                continue;
            }
            let p = position[h];
            for ell in 0..=(d - r) {
                let m = i + ell;
                let out = match g.colors[v] {
                    Color::White => rot[v][(p + m) % d],
                    Color::Black => rot[v][(p + d - m % d) % d],
                };
                let next = out ^ 1;
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
    }
    Ok(TripDigraph {
        n: g.n as u32,
        i,
        r,
        edges: edges.into_iter().collect(),
    })
}

/// Relabels boundary vertex `b_x` as `b_{x-1}` (and `b_1` as `b_n`).
pub fn rotate_web(g: &PlabicGraph) -> PlabicGraph {
    let n = g.n;
    let map = |v: usize| if v < n { (v + n - 1) % n } else { v };
    let nv = g.ids.len();
    let mut colors = g.colors.clone();
    let mut rotation = vec![Vec::new(); nv];
    for v in 0..nv {
        colors[map(v)] = g.colors[v];
        rotation[map(v)] = g.rotation[v].clone();
    }
    let edges = g.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
    PlabicGraph::from_raw(n, g.ids.clone(), colors, edges, rotation)
        .expect("relabeling preserves structure")
}

/// One white vertex per block, joined to the boundary vertices of the block.
pub fn partition_to_plabic(p: &NoncrossingSetPartition) -> PlabicGraph {
    let n = p.q() as usize;
    let mut ids: Vec<u32> = (1..=n as u32).collect();
    let mut colors = vec![Color::Black; n];
    let mut edges = Vec::new();
    let mut rotation = vec![Vec::new(); n];
    for block in p.blocks() {
        let w = ids.len();
        ids.push(w as u32 + 1);
        colors.push(Color::White);
        let mut order = Vec::new();
        for &x in block {
            let b = x as usize - 1;
            rotation[b].push(edges.len());
            order.push(edges.len());
            edges.push((w, b));
        }
        rotation.push(order);
    }
    PlabicGraph::from_raw(n, ids, colors, edges, rotation).expect("well-formed star forest")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn star(n: usize) -> PlabicGraph {
        let edges = (1..=n as u32).map(|b| (b, 100)).collect();
        let rotation = [(100, (0..n).collect())].into_iter().collect();
        PlabicGraph::new(n, vec![(100, Color::White)], edges, rotation).unwrap()
    }

    #[test]
    fn star_is_flamingo_with_k_one() {
        let g = star(4);
        validate_plabic(&g).unwrap();
        assert!(is_normal(&g));
        assert_eq!(is_flamingo(&g), (true, 1));
        let faces = g.faces().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.touches_boundary));
    }

    #[test]
    fn reversed_rotation_is_not_planar() {
        let edges = (1..=4).map(|b| (b, 100)).collect();
        let rotation = [(100, vec![0, 2, 1, 3])].into_iter().collect();
        let g = PlabicGraph::new(4, vec![(100, Color::White)], edges, rotation).unwrap();
        assert!(matches!(validate_plabic(&g), Err(PlabicError::NotPlanar { .. })));
    }

    #[test]
    fn structural_errors() {
        let r = PlabicGraph::new(2, vec![(9, Color::White)], vec![(1, 9)], BTreeMap::new());
        assert!(matches!(r, Err(PlabicError::BoundaryDegree { vertex: 2, .. })));
        let r = PlabicGraph::new(
            2,
            vec![(9, Color::White)],
            vec![(1, 9), (2, 9)],
            [(9, vec![0])].into_iter().collect(),
        );
        assert_eq!(r.unwrap_err(), PlabicError::InconsistentRotation(9));
        let r = PlabicGraph::new(1, vec![(1, Color::White)], vec![], BTreeMap::new());
        assert_eq!(r.unwrap_err(), PlabicError::DuplicateVertex(1));
    }

    #[test]
    fn star_trips_reach_every_other_leaf() {
        let g = star(4);
        let t = trip_digraph(&g, 1, 2).unwrap();
        assert_eq!(t.edges.len(), 12);
        let t = trip_digraph(&g, 1, 4).unwrap();
        // Only the first turn is taken: b_x -> b_{x+1}.
        assert_eq!(t.edges, vec![(1, 2), (2, 3), (3, 4), (4, 1)]);
    }

    #[test]
    fn trip_preconditions() {
        let g = star(3);
        assert!(matches!(
            trip_digraph(&g, 0, 3),
            Err(PlabicError::InvalidTripIndex { .. })
        ));
        assert!(matches!(
            trip_digraph(&g, 1, 4),
            Err(PlabicError::DegreeBelowThreshold { degree: 3, .. })
        ));
    }

    #[test]
    fn ten_point_web_trips() {
        let g = samples::flamingo_web_ten();
        validate_plabic(&g).unwrap();
        let c = classify(&g);
        assert!(c.flamingo, "{:?}", c.reasons);
        assert_eq!(c.k, 3);
        let interior: Vec<Face> = g.faces().unwrap().into_iter().filter(|f| !f.touches_boundary).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(interior[0].distinct_vertices(), 6);
        let t1 = trip_digraph(&g, 1, 3).unwrap();
        let mut want1 = vec![
            (1, 6), (6, 7), (7, 3), (1, 9), (9, 1), (9, 10), (4, 9),
            (4, 10), (3, 4), (10, 1), (10, 6), (5, 8), (8, 2), (2, 5),
        ];
        want1.sort();
        assert_eq!(t1.edges, want1);
        let t2 = trip_digraph(&g, 2, 3).unwrap();
        let mut want2 = vec![
            (1, 10), (1, 9), (3, 7), (4, 3), (6, 1), (6, 10), (7, 6),
            (9, 1), (9, 4), (10, 9), (10, 4), (2, 8), (8, 5), (5, 2),
        ];
        want2.sort();
        assert_eq!(t2.edges, want2);
    }

    #[test]
    fn looping_web_terminates() {
        let g = samples::looping_web_five();
        validate_plabic(&g).unwrap();
        let t = trip_digraph(&g, 1, 3).unwrap();
        assert!(!t.edges.is_empty());
        trip_digraph(&g, 2, 3).unwrap();
    }

    #[test]
    fn rotation_of_web_rotates_trips() {
        let g = samples::flamingo_web_ten();
        let rg = rotate_web(&g);
        validate_plabic(&rg).unwrap();
        for i in 1..=2 {
            let a = trip_digraph(&g, i, 3).unwrap().to_digraph();
            let b = trip_digraph(&rg, i, 3).unwrap().to_digraph();
            assert_eq!(crate::digraphs::rotate_digraph(&a), b);
        }
        let mut h = g.clone();
        for _ in 0..10 {
            h = rotate_web(&h);
        }
        assert_eq!(h, g);
        assert_ne!(rg, g);
    }

    #[test]
    fn partition_graph_and_rotation_commute() {
        let p = NoncrossingSetPartition::new(6, vec![vec![1, 4, 5], vec![2, 3], vec![6]]).unwrap();
        let g = partition_to_plabic(&p);
        validate_plabic(&g).unwrap();
        assert!(is_normal(&g));
        assert_eq!(
            rotate_web(&g),
            partition_to_plabic(&crate::noncrossing::rotate_partition(&p))
        );
        let t = trip_digraph(&g, 1, 2).unwrap();
        assert_eq!(
            t.to_digraph(),
            crate::noncrossing::blocks_to_complete_digraphs(&p)
        );
    }

    #[test]
    fn json_roundtrip_preserves_graph() {
        let g = samples::flamingo_web_ten();
        let s = serde_json::to_string(&g).unwrap();
        let back: PlabicGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.canonical_code(), g.canonical_code());
    }
}
