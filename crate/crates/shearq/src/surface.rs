//! Fat-graph data model for bordered cusped surfaces.
//!
//! A graph stores its vertices with explicit slot lists (the cyclic order of
//! incident half-edges), edges typed inner / open / loop, and the declared
//! topology counts. Everything else derives from that: the commutator matrix,
//! face structure, the dual maximal lamination and the boundary casimirs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::basis::{
    GeneratorBasis, GeneratorId, GeneratorKind, OmegaId, OmegaSymbol, Orientation,
};
use crate::holonomy::{LoopDirection, PathToken, PathWord};
use crate::qtorus::QLaurent;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Inner,
    Open,
    Loop,
}

/// One endpoint of an edge: a vertex and the slot it occupies there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndPoint {
    pub vertex: usize,
    pub slot: usize,
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub name: String,
    pub kind: EdgeKind,
    /// Two endpoints; open edges have the cusp vertex second.
    pub ends: [EndPoint; 2],
    /// Loop edges carry an omega symbol instead of a generator.
    pub omega: Option<OmegaId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Trivalent,
    Cusp,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub name: String,
    pub kind: VertexKind,
    /// Half-edges in cyclic slot order: 3 slots for trivalent, 1 for a cusp.
    /// Each entry is (edge index, end index).
    pub slots: Vec<(usize, usize)>,
}

/// Declared topology: genus, hole/orbifold counts and cusps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceCounts {
    pub genus: u32,
    pub holes: u32,
    pub orbifold_points: u32,
    pub cusps: u32,
}

impl SurfaceCounts {
    pub fn s(&self) -> i64 {
        (self.holes + self.orbifold_points) as i64
    }
}

#[derive(Debug, Clone)]
pub struct FatGraph {
    pub name: String,
    pub counts: SurfaceCounts,
    pub orientation: Orientation,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub omegas: Vec<OmegaSymbol>,
}

/// Structural validation outcome: every violated constraint, one line each.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A half-edge side used in face tracing. `end` selects which endpoint the
/// side starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Side {
    pub edge: usize,
    pub end: usize,
}

impl FatGraph {
    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Generators = non-loop edges in declaration order.
    pub fn generator_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].kind != EdgeKind::Loop)
            .collect()
    }

    pub fn generator_id_of_edge(&self, edge: usize) -> Option<GeneratorId> {
        let gens = self.generator_edges();
        gens.iter()
            .position(|&e| e == edge)
            .map(|i| GeneratorId(i as u32))
    }

    pub fn edge_of_generator(&self, g: GeneratorId) -> usize {
        self.generator_edges()[g.0 as usize]
    }

    fn other_end(&self, edge: usize, end: usize) -> EndPoint {
        self.edges[edge].ends[1 - end]
    }

    /// Walk step: enter `vertex` at `slot`; leave through the next slot
    /// clockwise (left turn) or the previous one (right turn), in stored-list
    /// order. Returns the (edge, end-at-this-vertex) occupying the exit slot.
    fn exit(&self, vertex: usize, slot: usize, left: bool) -> (usize, usize) {
        let v = &self.vertices[vertex];
        debug_assert_eq!(v.kind, VertexKind::Trivalent);
        let n = v.slots.len();
        let i = if left { (slot + 1) % n } else { (slot + 2) % n };
        v.slots[i]
    }

    /// The commutator matrix of the extended shear coordinates: for each
    /// trivalent vertex and consecutive slot pair (i, i+1) carrying generators
    /// (a, b), add the orientation sign to `eps[a][b]`. Loop slots contribute
    /// nothing (they carry omega, not a generator); vertices incident to loops
    /// therefore drop out, matching the bracket formula.
    pub fn epsilon_basis(&self) -> Arc<GeneratorBasis> {
        let gens = self.generator_edges();
        let n = gens.len();
        let mut eps = vec![vec![0i64; n]; n];
        let sign = self.orientation.sign();
        let idx: BTreeMap<usize, usize> = gens.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        for v in &self.vertices {
            if v.kind != VertexKind::Trivalent {
                continue;
            }
            for i in 0..v.slots.len() {
                let (ea, _) = v.slots[i];
                let (eb, _) = v.slots[(i + 1) % v.slots.len()];
                let (Some(&a), Some(&b)) = (idx.get(&ea), idx.get(&eb)) else {
                    continue;
                };
                if a == b {
                    continue;
                }
                eps[a][b] += sign;
                eps[b][a] -= sign;
            }
        }
        let names = gens.iter().map(|&e| self.edges[e].name.clone()).collect();
        let kinds = gens
            .iter()
            .map(|&e| match self.edges[e].kind {
                EdgeKind::Open => GeneratorKind::CuspShear,
                _ => GeneratorKind::InnerShear,
            })
            .collect();
        GeneratorBasis::new(names, kinds, self.omegas.clone(), eps)
    }

    /// Face orbits: each face is the cyclic list of sides it passes.
    /// The boundary map follows a side to its far end and rotates one slot.
    pub fn faces(&self) -> Vec<Vec<Side>> {
        let mut sides: Vec<Side> = Vec::new();
        for (i, _e) in self.edges.iter().enumerate() {
            sides.push(Side { edge: i, end: 0 });
            sides.push(Side { edge: i, end: 1 });
        }
        let next = |s: Side| -> Side {
            let far = self.other_end(s.edge, s.end);
            let v = &self.vertices[far.vertex];
            let n = v.slots.len();
            let (edge, end) = v.slots[(far.slot + 1) % n];
            Side { edge, end }
        };
        let mut seen: Vec<bool> = vec![false; sides.len()];
        let pos = |s: Side| -> usize {
            sides.iter().position(|&t| t == s).unwrap()
        };
        let mut faces = Vec::new();
        for &start in sides.iter() {
            if seen[pos(start)] {
                continue;
            }
            let mut face = Vec::new();
            let mut cur = start;
            loop {
                if seen[pos(cur)] {
                    break;
                }
                seen[pos(cur)] = true;
                face.push(cur);
                cur = next(cur);
            }
            faces.push(face);
        }
        faces
    }

    /// Structural validation per the cusped fat graph definition plus the
    /// dimension counts declared in the header.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        // slot shape and cross-references
        for (vi, v) in self.vertices.iter().enumerate() {
            let want = match v.kind {
                VertexKind::Trivalent => 3,
                VertexKind::Cusp => 1,
            };
            if v.slots.len() != want {
                report.violations.push(format!(
                    "vertex {} has {} slots, expected {}",
                    v.name,
                    v.slots.len(),
                    want
                ));
                continue;
            }
            for (si, &(e, end)) in v.slots.iter().enumerate() {
                if e >= self.edges.len() || end > 1 {
                    report.violations.push(format!("vertex {} slot {} dangles", v.name, si));
                    continue;
                }
                let ep = self.edges[e].ends[end];
                if ep.vertex != vi || ep.slot != si {
                    report.violations.push(format!(
                        "vertex {} slot {} and edge {} disagree",
                        v.name, si, self.edges[e].name
                    ));
                }
            }
        }
        for e in &self.edges {
            let [a, b] = e.ends;
            let va = &self.vertices[a.vertex];
            let vb = &self.vertices[b.vertex];
            match e.kind {
                EdgeKind::Loop => {
                    if a.vertex != b.vertex || va.kind != VertexKind::Trivalent {
                        report.violations.push(format!(
                            "loop {} must start and end at one trivalent vertex",
                            e.name
                        ));
                    }
                    if e.omega.is_none() {
                        report.violations.push(format!("loop {} carries no omega symbol", e.name));
                    }
                }
                EdgeKind::Open => {
                    let cusp_ends = [va.kind, vb.kind]
                        .iter()
                        .filter(|&&k| k == VertexKind::Cusp)
                        .count();
                    if cusp_ends != 1 {
                        report.violations.push(format!(
                            "open edge {} must end at exactly one cusp vertex",
                            e.name
                        ));
                    }
                }
                EdgeKind::Inner => {
                    if va.kind != VertexKind::Trivalent || vb.kind != VertexKind::Trivalent {
                        report.violations.push(format!("inner edge {} must join trivalent vertices", e.name));
                    }
                }
            }
            if e.kind != EdgeKind::Loop && e.omega.is_some() {
                report.violations.push(format!("non-loop edge {} carries an omega symbol", e.name));
            }
        }
        if !report.is_valid() {
            return report;
        }

        // declared counts
        let g = self.counts.genus as i64;
        let s = self.counts.s();
        let n = self.counts.cusps as i64;
        let trivalent = self
            .vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Trivalent)
            .count() as i64;
        let cusps = self
            .vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Cusp)
            .count() as i64;
        if cusps != n {
            report.violations.push(format!("{cusps} cusp vertices declared n={n}"));
        }
        if trivalent != 4 * g + 2 * s + n - 4 {
            report.violations.push(format!(
                "{} trivalent vertices, expected 4g+2s+n-4 = {}",
                trivalent,
                4 * g + 2 * s + n - 4
            ));
        }
        let loops = self
            .edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Loop)
            .count() as i64;
        let faces = self.faces();
        // every face encloses exactly one hole or orbifold point
        if faces.len() as i64 != s {
            report.violations.push(format!("{} faces, expected s = {}", faces.len(), s));
        }
        // good graph: each loop bounds a monogon face
        for e in self.edges.iter().filter(|e| e.kind == EdgeKind::Loop) {
            let idx = self.edge_index(&e.name).unwrap();
            let monogon = faces
                .iter()
                .any(|f| f.len() == 1 && f[0].edge == idx);
            if !monogon {
                report.violations.push(format!("loop {} does not bound a monogon face", e.name));
            }
        }
        // cusped-hole count from faces: faces that pass an open edge
        let s_c = faces
            .iter()
            .filter(|f| f.iter().any(|s| self.edges[s.edge].kind == EdgeKind::Open))
            .count() as i64;
        if loops != s - s_c {
            report.violations.push(format!(
                "{loops} loops, expected s - s_c = {}",
                s - s_c
            ));
        }
        let generators = self.generator_edges().len() as i64;
        if generators != 6 * g - 6 + 2 * s + s_c + 2 * n {
            report.violations.push(format!(
                "{generators} generators, expected 6g-6+2s+s_c+2n = {}",
                6 * g - 6 + 2 * s + s_c + 2 * n
            ));
        }
        if generators + loops != 6 * g - 6 + 3 * s + 2 * n {
            report.violations.push(format!(
                "{} lamination elements, expected 6g-6+3s+2n = {}",
                generators + loops,
                6 * g - 6 + 3 * s + 2 * n
            ));
        }
        report
    }

    /// The always-left walk starting along `open_edge` from its cusp, ending
    /// at the first open edge reached. Returns the path as (edges, turns) with
    /// loop passages folded into `LoopPass` markers.
    fn left_walk(&self, open_edge: usize) -> WalkPath {
        self.walk_until(open_edge, None)
    }

    /// Walk always-left from the cusp of `start_open` until `target` (inner
    /// edge) is about to be traversed, cross it, then walk always-right until
    /// an open edge ends the path. With `target = None` the walk stays on left
    /// turns until an open edge.
    fn walk_until(&self, start_open: usize, target: Option<usize>) -> WalkPath {
        let mut steps: Vec<WalkStep> = Vec::new();
        let start_end = if self.vertices[self.edges[start_open].ends[0].vertex].kind
            == VertexKind::Cusp
        {
            0
        } else {
            1
        };
        steps.push(WalkStep::Edge(start_open));
        let mut at = self.other_end(start_open, start_end);
        let mut crossed = target.is_none();
        let mut reached = target.is_none();
        let mut end_open = None;
        for _ in 0..4 * (self.edges.len() + 2) * (self.edges.len() + 2) {
            let left = !crossed || target.is_none();
            let (edge, end) = self.exit(at.vertex, at.slot, left);
            let far = self.other_end(edge, end);
            let is_loop_adjacent = self.edges[edge].kind == EdgeKind::Inner
                && self.loop_at(far.vertex).is_some();
            match self.edges[edge].kind {
                EdgeKind::Open => {
                    if !crossed && Some(edge) != target {
                        // hit a cusp before the target: dead walk
                        return WalkPath {
                            steps,
                            end_open: None,
                            complete: false,
                        };
                    }
                    steps.push(WalkStep::Turn(left));
                    steps.push(WalkStep::Edge(edge));
                    end_open = Some(edge);
                    if Some(edge) == target {
                        reached = true;
                    }
                    break;
                }
                EdgeKind::Loop => {
                    // never exits through a loop slot: the loop is handled
                    // when its incident inner edge is traversed
                    return WalkPath {
                        steps,
                        end_open: None,
                        complete: false,
                    };
                }
                EdgeKind::Inner => {
                    if !crossed && Some(edge) == target {
                        crossed = true;
                        reached = true;
                    } else if !is_loop_adjacent {
                        steps.push(WalkStep::Turn(left));
                        steps.push(WalkStep::Edge(edge));
                        at = far;
                        continue;
                    }
                    if is_loop_adjacent {
                        // wind the monogon and come back out along the same edge
                        let w = self.loop_at(far.vertex).unwrap();
                        steps.push(WalkStep::Turn(left));
                        steps.push(WalkStep::Edge(edge));
                        steps.push(WalkStep::LoopPass { omega: w, left });
                        steps.push(WalkStep::Edge(edge));
                        at = self.edges[edge].ends[end];
                        continue;
                    }
                    steps.push(WalkStep::Turn(left));
                    steps.push(WalkStep::Edge(edge));
                    at = far;
                }
            }
        }
        WalkPath {
            steps,
            end_open,
            complete: reached && end_open.is_some(),
        }
    }

    /// If the vertex is the base of a loop, return the loop's omega.
    fn loop_at(&self, vertex: usize) -> Option<OmegaId> {
        let v = &self.vertices[vertex];
        if v.kind != VertexKind::Trivalent {
            return None;
        }
        v.slots.iter().find_map(|&(e, _)| {
            if self.edges[e].kind == EdgeKind::Loop {
                self.edges[e].omega
            } else {
                None
            }
        })
    }

    /// The dual maximal cusped lamination: one arc per non-loop edge plus one
    /// omega cycle per loop.
    pub fn dual_lamination(&self) -> Result<DualLamination, String> {
        if self.counts.cusps == 0 {
            return Err("dual lamination needs at least one cusp".into());
        }
        let basis = self.epsilon_basis();
        let opens: Vec<usize> = (0..self.edges.len())
            .filter(|&e| self.edges[e].kind == EdgeKind::Open)
            .collect();
        let mut arcs = Vec::new();
        for alpha in self.generator_edges() {
            let path = match self.edges[alpha].kind {
                EdgeKind::Open => {
                    // the bordering arc owned by an open edge is the left walk
                    // that terminates there
                    let mut found = None;
                    for &start in &opens {
                        let w = self.left_walk(start);
                        if w.complete && w.end_open == Some(alpha) {
                            found = Some(w);
                            break;
                        }
                    }
                    found.ok_or_else(|| {
                        format!("no bordering walk ends at {}", self.edges[alpha].name)
                    })?
                }
                EdgeKind::Inner => {
                    let mut found = None;
                    for &start in &opens {
                        let w = self.walk_until(start, Some(alpha));
                        if w.complete {
                            found = Some(w);
                            break;
                        }
                    }
                    found.ok_or_else(|| {
                        format!("no dual walk crosses {}", self.edges[alpha].name)
                    })?
                }
                EdgeKind::Loop => unreachable!(),
            };
            let word = self.path_to_word(&path, &basis);
            arcs.push(DualArc {
                edge: alpha,
                start_cusp: self.cusp_of_open(path.first_edge()),
                end_cusp: self.cusp_of_open(path.end_open.unwrap()),
                path,
                word,
            });
        }
        let omega_cycles = self
            .edges
            .iter()
            .filter_map(|e| if e.kind == EdgeKind::Loop { e.omega } else { None })
            .collect();
        Ok(DualLamination {
            basis,
            arcs,
            omega_cycles,
        })
    }

    fn cusp_of_open(&self, open_edge: usize) -> usize {
        let e = &self.edges[open_edge];
        if self.vertices[e.ends[0].vertex].kind == VertexKind::Cusp {
            e.ends[0].vertex
        } else {
            e.ends[1].vertex
        }
    }

    /// Convert a walk into a holonomy path word. Word tokens are matrix
    /// factors written leftmost-first, so the path's first edge becomes the
    /// rightmost factor and a single K closes the arc on the left.
    fn path_to_word(&self, path: &WalkPath, basis: &Arc<GeneratorBasis>) -> PathWord {
        let mut tokens: Vec<PathToken> = alloc::vec![PathToken::CuspK];
        for step in path.steps.iter().rev() {
            match step {
                WalkStep::Edge(e) => {
                    let g = basis
                        .lookup(&self.edges[*e].name)
                        .expect("edge has a generator");
                    tokens.push(PathToken::Edge(g));
                }
                WalkStep::Turn(left) => {
                    tokens.push(if *left {
                        PathToken::TurnL
                    } else {
                        PathToken::TurnR
                    });
                }
                WalkStep::LoopPass { omega, left } => {
                    tokens.push(PathToken::Loop {
                        omega: *omega,
                        power: 1,
                        direction: if *left {
                            LoopDirection::Clockwise
                        } else {
                            LoopDirection::CounterClockwise
                        },
                    });
                }
            }
        }
        PathWord::new(tokens)
    }

    /// Closed-geodesic words around each cusped hole: the face walk with cusp
    /// tails bypassed by right turns and monogons wound through their loop
    /// factor. One word per face that touches an open edge.
    pub fn boundary_words(&self) -> Vec<PathWord> {
        let basis = self.epsilon_basis();
        let mut out = Vec::new();
        for face in self.faces() {
            if !face
                .iter()
                .any(|s| self.edges[s.edge].kind == EdgeKind::Open)
            {
                continue;
            }
            // rotate so the face starts on an inner side
            let Some(first_inner) = face
                .iter()
                .position(|s| self.edges[s.edge].kind == EdgeKind::Inner)
            else {
                continue;
            };
            let face: Vec<Side> = face
                .iter()
                .cycle()
                .skip(first_inner)
                .take(face.len())
                .copied()
                .collect();
            // emitted items in path order
            enum Item {
                Edge(usize),
                Loop(OmegaId),
                Turn(bool), // true = left
            }
            let mut items: Vec<Item> = Vec::new();
            let mut skips = 0usize;
            let mut last_was_loop = false;
            for side in &face {
                match self.edges[side.edge].kind {
                    EdgeKind::Open => {
                        skips += 1;
                    }
                    EdgeKind::Loop => {
                        // the walk just traversed the loop between two visits
                        // of its incident edge; wind clockwise once
                        items.push(Item::Loop(self.edges[side.edge].omega.unwrap()));
                        last_was_loop = true;
                    }
                    EdgeKind::Inner => {
                        if !items.is_empty() && !last_was_loop {
                            // every bypassed cusp tail contributes two open
                            // sides (out and back) and one right turn
                            if skips == 0 {
                                items.push(Item::Turn(true));
                            } else {
                                for _ in 0..skips / 2 {
                                    items.push(Item::Turn(false));
                                }
                            }
                        }
                        skips = 0;
                        last_was_loop = false;
                        items.push(Item::Edge(side.edge));
                    }
                }
            }
            // closing turn between the last and first emitted edge
            if skips == 0 {
                items.push(Item::Turn(true));
            } else {
                for _ in 0..skips / 2 {
                    items.push(Item::Turn(false));
                }
            }
            // word tokens leftmost-first = path order reversed
            let mut tokens: Vec<PathToken> = Vec::new();
            for item in items.iter().rev() {
                match item {
                    Item::Edge(e) => tokens.push(PathToken::Edge(
                        basis.lookup(&self.edges[*e].name).unwrap(),
                    )),
                    Item::Loop(w) => tokens.push(PathToken::Loop {
                        omega: *w,
                        power: 1,
                        direction: LoopDirection::Clockwise,
                    }),
                    Item::Turn(left) => tokens.push(if *left {
                        PathToken::TurnL
                    } else {
                        PathToken::TurnR
                    }),
                }
            }
            out.push(PathWord::new(tokens));
        }
        out
    }

    /// Boundary casimirs: for each face with cusps, the primitive boundary sum
    /// over its generator sides, exponentiated; plus every omega symbol.
    pub fn casimirs(&self) -> Vec<QLaurent> {
        let basis = self.epsilon_basis();
        let mut out = Vec::new();
        for face in self.faces() {
            let mut counts: BTreeMap<GeneratorId, i64> = BTreeMap::new();
            let mut has_any = false;
            for side in &face {
                if self.edges[side.edge].kind == EdgeKind::Loop {
                    continue;
                }
                let g = basis.lookup(&self.edges[side.edge].name).unwrap();
                *counts.entry(g).or_insert(0) += 1;
                has_any = true;
            }
            if !has_any {
                continue;
            }
            let gcd = counts.values().fold(0i64, |a, &b| gcd64(a, b));
            let exp = crate::qtorus::ExponentVector::from_entries(
                counts
                    .iter()
                    .map(|(&g, &c)| (g, (2 * c / gcd) as i32))
                    .collect(),
            );
            out.push(QLaurent::monomial(
                basis.clone(),
                exp,
                crate::qtorus::Coefficient::scalar(crate::qtorus::Scalar::one()),
            ));
        }
        for (i, _w) in self.omegas.iter().enumerate() {
            out.push(QLaurent::omega(basis.clone(), OmegaId(i as u32)));
        }
        out
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

/// One step of a dual-arc walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkStep {
    Edge(usize),
    /// true = left
    Turn(bool),
    LoopPass {
        omega: OmegaId,
        left: bool,
    },
}

#[derive(Debug, Clone)]
pub struct WalkPath {
    pub steps: Vec<WalkStep>,
    pub end_open: Option<usize>,
    pub complete: bool,
}

impl WalkPath {
    pub fn first_edge(&self) -> usize {
        match self.steps[0] {
            WalkStep::Edge(e) => e,
            _ => unreachable!(),
        }
    }

    /// The inward strand of this path seen from its starting cusp: the
    /// sequence of turns taken.
    pub fn turns_forward(&self) -> Vec<bool> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                WalkStep::Turn(l) => Some(*l),
                _ => None,
            })
            .collect()
    }

    /// Turns of the reversed path (left and right swap).
    pub fn turns_backward(&self) -> Vec<bool> {
        self.turns_forward()
            .into_iter()
            .rev()
            .map(|l| !l)
            .collect()
    }
}

/// An arc of the dual lamination: the edge it is dual to, its holonomy word
/// and its endpoints (cusp vertex indices).
#[derive(Debug, Clone)]
pub struct DualArc {
    pub edge: usize,
    pub path: WalkPath,
    pub word: PathWord,
    pub start_cusp: usize,
    pub end_cusp: usize,
}

#[derive(Debug, Clone)]
pub struct DualLamination {
    pub basis: Arc<GeneratorBasis>,
    pub arcs: Vec<DualArc>,
    pub omega_cycles: Vec<OmegaId>,
}

impl DualLamination {
    pub fn len(&self) -> usize {
        self.arcs.len() + self.omega_cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty() && self.omega_cycles.is_empty()
    }
}
