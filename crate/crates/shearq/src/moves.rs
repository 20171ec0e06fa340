//! Mapping-class-group moves: flips of inner and loop-incident edges, the
//! dual lambda-cluster mutations (Ptolemy and generalised monogon rules), and
//! tropical mutations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::basis::Orientation;
use crate::brackets::Seed;
use crate::qtorus::{Coefficient, ExponentVector, OmegaMono, QLaurent, Scalar, TorusError};
use crate::surface::{EdgeKind, FatGraph};

#[derive(Debug, Clone, PartialEq)]
pub enum MoveError {
    NotFound(String),
    IllegalEdgeKind(String),
    FrozenArc(String),
    Inhomogeneous(String),
    Torus(TorusError),
}

impl From<TorusError> for MoveError {
    fn from(e: TorusError) -> Self {
        MoveError::Torus(e)
    }
}

impl core::fmt::Display for MoveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MoveError::NotFound(s) => write!(f, "no such edge or arc: {s}"),
            MoveError::IllegalEdgeKind(s) => write!(f, "edge {s} cannot be flipped"),
            MoveError::FrozenArc(s) => write!(f, "arc {s} is frozen and never mutates"),
            MoveError::Inhomogeneous(s) => write!(f, "mutation breaks homogeneity: {s}"),
            MoveError::Torus(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipKind {
    Inner,
    Loop,
}

/// How one edge's shear value changes under a flip. `z` is the flipped edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    /// A -> A + phi(Z) = log(1 + e^Z) added
    PlusPhi,
    /// B -> B - phi(-Z)
    MinusPhiNeg,
    /// A -> A + phi(Z + P/2) + phi(Z - P/2) (loop flip), i.e. + log(1 + w e^Z + e^{2Z})
    PlusPhiPair,
    /// B -> B - phi(-Z + P/2) - phi(-Z - P/2)
    MinusPhiNegPair,
}

/// A flip of one edge: the relabeled graph and the recorded substitution.
#[derive(Debug, Clone)]
pub struct FlipEvent {
    pub kind: FlipKind,
    pub edge: usize,
    pub before: FatGraph,
    pub after: FatGraph,
    /// Per-slot shifts applied to neighbor edges; an edge occupying two slots
    /// appears twice and receives the shift twice.
    pub shifts: Vec<(usize, Shift)>,
    /// Omega of the adjacent loop, for pair shifts.
    pub omega: Option<crate::basis::OmegaId>,
}

impl FlipEvent {
    /// Numeric substitution: updates shear values in place (indexed by edge).
    /// `omega_value` is the loop weight for pair shifts.
    pub fn apply_numeric(&self, values: &mut BTreeMap<usize, f64>, omega_value: f64) {
        let z = values[&self.edge];
        for &(e, shift) in &self.shifts {
            let dv = match shift {
                Shift::PlusPhi => libm::log(1.0 + libm::exp(z)),
                Shift::MinusPhiNeg => -libm::log(1.0 + libm::exp(-z)),
                Shift::PlusPhiPair => {
                    libm::log(1.0 + omega_value * libm::exp(z) + libm::exp(2.0 * z))
                }
                Shift::MinusPhiNegPair => {
                    -libm::log(1.0 + omega_value * libm::exp(-z) + libm::exp(-2.0 * z))
                }
            };
            *values.get_mut(&e).unwrap() += dv;
        }
        *values.get_mut(&self.edge).unwrap() = -z;
    }

    /// The exponentiated classical substitution as (numerator, denominator)
    /// Laurent pairs over the before-graph torus, one per shifted edge plus
    /// the flipped edge itself.
    pub fn substitution(&self) -> Vec<(String, QLaurent, QLaurent)> {
        let basis = self.before.epsilon_basis();
        let z = basis
            .lookup(&self.before.edges[self.edge].name)
            .expect("flipped edge is a generator");
        let one = QLaurent::one(basis.clone());
        let ez = QLaurent::generator(basis.clone(), z, 2);
        let ezi = QLaurent::generator(basis.clone(), z, -2);
        let e2z = QLaurent::generator(basis.clone(), z, 4);
        let e2zi = QLaurent::generator(basis.clone(), z, -4);
        let womega = self.omega.map(|w| QLaurent::omega(basis.clone(), w));
        // accumulate multiplicities per edge
        let mut acc: BTreeMap<usize, Vec<Shift>> = BTreeMap::new();
        for &(e, s) in &self.shifts {
            acc.entry(e).or_default().push(s);
        }
        let mut out = Vec::new();
        for (e, shifts) in acc {
            let g = basis.lookup(&self.before.edges[e].name).unwrap();
            let mut num = QLaurent::generator(basis.clone(), g, 2);
            let mut den = one.clone();
            for s in shifts {
                match s {
                    Shift::PlusPhi => {
                        num = num.mul_classical(&one.add(&ez).unwrap()).unwrap();
                    }
                    Shift::MinusPhiNeg => {
                        den = den.mul_classical(&one.add(&ezi).unwrap()).unwrap();
                    }
                    Shift::PlusPhiPair => {
                        let f = one
                            .add(&womega.clone().unwrap().mul_classical(&ez).unwrap())
                            .unwrap()
                            .add(&e2z)
                            .unwrap();
                        num = num.mul_classical(&f).unwrap();
                    }
                    Shift::MinusPhiNegPair => {
                        let f = one
                            .add(&womega.clone().unwrap().mul_classical(&ezi).unwrap())
                            .unwrap()
                            .add(&e2zi)
                            .unwrap();
                        den = den.mul_classical(&f).unwrap();
                    }
                }
            }
            out.push((self.before.edges[e].name.clone(), num, den));
        }
        out.push((
            self.before.edges[self.edge].name.clone(),
            QLaurent::generator(basis.clone(), z, -2),
            one,
        ));
        out
    }
}

/// Slots around an edge endpoint: the slot after the edge in stored order and
/// the one before it. The shift roles (+phi on next, -phi(-Z) on prev) are
/// fixed by the turn-matrix identities and do not depend on the transcription
/// handedness; only the combinatorial rotation of a flip mirrors.
fn next_prev(graph: &FatGraph, vertex: usize, edge_slot: usize) -> (usize, usize) {
    let n = graph.vertices[vertex].slots.len();
    ((edge_slot + 1) % n, (edge_slot + 2) % n)
}

/// Rotation target slots for the flip square, following the drawing's
/// handedness.
fn rotation_slots(graph: &FatGraph, vertex: usize, edge_slot: usize) -> (usize, usize) {
    let (next, prev) = next_prev(graph, vertex, edge_slot);
    match graph.orientation {
        Orientation::Standard => (next, prev),
        Orientation::Mirrored => (prev, next),
    }
}

/// Flip an inner edge not adjacent to a loop: the quadrilateral around it
/// rotates by one notch and the neighbors pick up their phi shifts.
pub fn flip_inner(graph: &FatGraph, edge_name: &str) -> Result<FlipEvent, MoveError> {
    let e = graph
        .edge_index(edge_name)
        .ok_or_else(|| MoveError::NotFound(edge_name.into()))?;
    if graph.edges[e].kind != EdgeKind::Inner {
        return Err(MoveError::IllegalEdgeKind(edge_name.into()));
    }
    let [x, y] = graph.edges[e].ends;
    for ep in [x, y] {
        let v = &graph.vertices[ep.vertex];
        if v.slots
            .iter()
            .any(|&(ei, _)| graph.edges[ei].kind == EdgeKind::Loop)
        {
            return Err(MoveError::IllegalEdgeKind(format!(
                "{edge_name} is adjacent to a loop; use the loop flip"
            )));
        }
    }
    // shift roles at each endpoint: stored-next takes +phi(Z), stored-prev
    // takes -phi(-Z)
    let (nx, px) = next_prev(graph, x.vertex, x.slot);
    let (ny, py) = next_prev(graph, y.vertex, y.slot);
    let shifts = alloc::vec![
        (graph.vertices[x.vertex].slots[nx].0, Shift::PlusPhi),
        (graph.vertices[x.vertex].slots[px].0, Shift::MinusPhiNeg),
        (graph.vertices[y.vertex].slots[ny].0, Shift::PlusPhi),
        (graph.vertices[y.vertex].slots[py].0, Shift::MinusPhiNeg),
    ];
    // rotate the quadrilateral one notch in the drawing's handedness:
    // x gets (e, D, A), y gets (e, B, C) in rotation roles
    let (ax, bx) = rotation_slots(graph, x.vertex, x.slot);
    let (ay, by) = rotation_slots(graph, y.vertex, y.slot);
    let a_half = graph.vertices[x.vertex].slots[ax];
    let b_half = graph.vertices[x.vertex].slots[bx];
    let c_half = graph.vertices[y.vertex].slots[ay];
    let d_half = graph.vertices[y.vertex].slots[by];
    let mut after = graph.clone();
    set_half(&mut after, x.vertex, ax, d_half);
    set_half(&mut after, x.vertex, bx, a_half);
    set_half(&mut after, y.vertex, ay, b_half);
    set_half(&mut after, y.vertex, by, c_half);
    Ok(FlipEvent {
        kind: FlipKind::Inner,
        edge: e,
        before: graph.clone(),
        after,
        shifts,
        omega: None,
    })
}

/// Flip the edge adjacent to a loop: the monogon swings to the other side
/// and the two outer neighbors take the paired phi shifts.
pub fn flip_loop(graph: &FatGraph, edge_name: &str) -> Result<FlipEvent, MoveError> {
    let e = graph
        .edge_index(edge_name)
        .ok_or_else(|| MoveError::NotFound(edge_name.into()))?;
    if graph.edges[e].kind != EdgeKind::Inner {
        return Err(MoveError::IllegalEdgeKind(edge_name.into()));
    }
    let [p, q] = graph.edges[e].ends;
    let loop_end = [p, q].into_iter().find(|ep| {
        graph.vertices[ep.vertex]
            .slots
            .iter()
            .any(|&(ei, _)| graph.edges[ei].kind == EdgeKind::Loop)
    });
    let Some(loop_end) = loop_end else {
        return Err(MoveError::IllegalEdgeKind(format!(
            "{edge_name} is not adjacent to a loop"
        )));
    };
    let x = if loop_end == p { q } else { p };
    let omega = graph.vertices[loop_end.vertex]
        .slots
        .iter()
        .find_map(|&(ei, _)| graph.edges[ei].omega);
    let (an, bn) = next_prev(graph, x.vertex, x.slot);
    let a_half = graph.vertices[x.vertex].slots[an];
    let b_half = graph.vertices[x.vertex].slots[bn];
    let shifts = alloc::vec![
        (a_half.0, Shift::PlusPhiPair),
        (b_half.0, Shift::MinusPhiNegPair),
    ];
    let mut after = graph.clone();
    set_half(&mut after, x.vertex, an, b_half);
    set_half(&mut after, x.vertex, bn, a_half);
    Ok(FlipEvent {
        kind: FlipKind::Loop,
        edge: e,
        before: graph.clone(),
        after,
        shifts,
        omega,
    })
}

fn set_half(graph: &mut FatGraph, vertex: usize, slot: usize, half: (usize, usize)) {
    graph.vertices[vertex].slots[slot] = half;
    graph.edges[half.0].ends[half.1] = crate::surface::EndPoint { vertex, slot };
}

/// Outcome of a lambda mutation: the new arc's expression in the old seed
/// torus, the flipped graph and the rebuilt seed on it.
#[derive(Debug, Clone)]
pub struct MutationEvent {
    pub slot: usize,
    pub expression: QLaurent,
    pub graph: FatGraph,
    pub seed: Seed,
}

/// The Weyl normal form monomial of the exponent sum `sum_i +-e_i` in the
/// seed torus: the unique Hermitian monomial with that content.
fn weyl(basis: &Arc<crate::basis::GeneratorBasis>, entries: &[(usize, i32)]) -> QLaurent {
    let mut exp = ExponentVector::zero();
    for &(i, n) in entries {
        let g = crate::basis::GeneratorId(i as u32);
        exp.set(g, exp.get(g) + n);
    }
    QLaurent::monomial(
        basis.clone(),
        exp,
        Coefficient::scalar(Scalar::from_integer(1)),
    )
}

/// Mutate one arc of a seed. Inner arcs follow the Ptolemy exchange, the arc
/// bounding a monogon follows the generalised rule with its omega term; both
/// produce sums of Weyl monomials of the seed torus, Hermitian by
/// construction. Frozen (bordering) arcs are rejected.
pub fn mutate_lambda(
    seed: &Seed,
    graph: &FatGraph,
    slot: usize,
    new_name: &str,
) -> Result<MutationEvent, MoveError> {
    if slot >= seed.lambdas.len() {
        return Err(MoveError::NotFound(format!("arc slot {slot}")));
    }
    if seed.frozen[slot] {
        return Err(MoveError::FrozenArc(seed.names[slot].clone()));
    }
    let edge = seed.dual_edges[slot];
    let edge_name = graph.edges[edge].name.clone();
    let [x, y] = graph.edges[edge].ends;
    let is_loop_adjacent = [x, y].iter().any(|ep| {
        graph.vertices[ep.vertex]
            .slots
            .iter()
            .any(|&(ei, _)| graph.edges[ei].kind == EdgeKind::Loop)
    });
    let slot_of_edge = |e: usize| -> Result<usize, MoveError> {
        seed.dual_edges
            .iter()
            .position(|&d| d == e)
            .ok_or_else(|| MoveError::NotFound(format!("no arc dual to edge {e}")))
    };
    let expression;
    let flip;
    if is_loop_adjacent {
        // monogon rule: lam_d = W(2a - c) + W(2b - c) + omega W(a + b - c)
        let outer = if graph.vertices[x.vertex]
            .slots
            .iter()
            .any(|&(ei, _)| graph.edges[ei].kind == EdgeKind::Loop)
        {
            y
        } else {
            x
        };
        let n = graph.vertices[outer.vertex].slots.len();
        let a_edge = graph.vertices[outer.vertex].slots[(outer.slot + 1) % n].0;
        let b_edge = graph.vertices[outer.vertex].slots[(outer.slot + 2) % n].0;
        let (a, b, c) = (slot_of_edge(a_edge)?, slot_of_edge(b_edge)?, slot);
        if seed.incidence_eps(a, b) != 0 {
            return Err(MoveError::Inhomogeneous(format!(
                "monogon sides {} and {} do not commute",
                seed.names[a], seed.names[b]
            )));
        }
        let omega = graph.edges[graph.vertices[if outer == x { y } else { x }.vertex]
            .slots
            .iter()
            .find(|&&(ei, _)| graph.edges[ei].kind == EdgeKind::Loop)
            .unwrap()
            .0]
            .omega
            .unwrap();
        let t1 = weyl(&seed.basis, &[(a, 2), (c, -1)]);
        let t2 = weyl(&seed.basis, &[(b, 2), (c, -1)]);
        let t3 = QLaurent::monomial(
            seed.basis.clone(),
            weyl(&seed.basis, &[(a, 1), (b, 1), (c, -1)])
                .single_monomial()
                .unwrap()
                .0,
            Coefficient::term(0, OmegaMono::single(omega, 1), Scalar::from_integer(1)),
        );
        expression = t1.add(&t2)?.add(&t3)?;
        flip = flip_loop(graph, &edge_name)?;
    } else {
        // Ptolemy rule with opposite pairs (next_x, next_y) and (prev_x, prev_y)
        let nx = graph.vertices[x.vertex].slots.len();
        let ny = graph.vertices[y.vertex].slots.len();
        let a_edge = graph.vertices[x.vertex].slots[(x.slot + 1) % nx].0;
        let b_edge = graph.vertices[x.vertex].slots[(x.slot + 2) % nx].0;
        let c_edge = graph.vertices[y.vertex].slots[(y.slot + 1) % ny].0;
        let d_edge = graph.vertices[y.vertex].slots[(y.slot + 2) % ny].0;
        let (a, b, c, d) = (
            slot_of_edge(a_edge)?,
            slot_of_edge(b_edge)?,
            slot_of_edge(c_edge)?,
            slot_of_edge(d_edge)?,
        );
        let e = slot;
        let t1 = weyl(&seed.basis, &[(a, 1), (e, -1), (c, 1)]);
        let t2 = weyl(&seed.basis, &[(b, 1), (e, -1), (d, 1)]);
        expression = t1.add(&t2)?;
        flip = flip_inner(graph, &edge_name)?;
    }
    // homogeneity of the result against every other seed member
    let exps: Vec<ExponentVector> = expression
        .terms()
        .map(|(e, _)| e.clone())
        .collect();
    for other in 0..seed.lambdas.len() {
        if other == slot {
            continue;
        }
        let target = ExponentVector::single(crate::basis::GeneratorId(other as u32), 1);
        let p0 = exps[0].pairing(&target, &seed.basis);
        for e in &exps[1..] {
            if e.pairing(&target, &seed.basis) != p0 {
                return Err(MoveError::Inhomogeneous(format!(
                    "result does not q-commute homogeneously with {}",
                    seed.names[other]
                )));
            }
        }
    }
    // rebuild the seed on the flipped graph, renaming the mutated slot
    let new_graph = flip.after.clone();
    let lam = new_graph
        .dual_lamination()
        .map_err(MoveError::Inhomogeneous)?;
    let names: Vec<String> = lam
        .arcs
        .iter()
        .map(|arc| {
            if arc.edge == edge {
                String::from(new_name)
            } else {
                let old = seed
                    .dual_edges
                    .iter()
                    .position(|&d| d == arc.edge)
                    .expect("unmutated arcs keep their edges");
                seed.names[old].clone()
            }
        })
        .collect();
    let new_seed = Seed::from_lamination(&new_graph, &lam, names)
        .map_err(|e| MoveError::Inhomogeneous(format!("{e}")))?;
    Ok(MutationEvent {
        slot,
        expression,
        graph: new_graph,
        seed: new_seed,
    })
}

/// Max-plus mutation of integer lamination lengths on an inner edge:
/// `l_e + l_f = max(l_a + l_c, l_b + l_d)`.
pub fn tropical_inner(la: i64, lb: i64, lc: i64, ld: i64, le: i64) -> i64 {
    core::cmp::max(la + lc, lb + ld) - le
}

/// Loop-incident edge: `l_e + l_f = max(2 l_a, 2 l_b)`.
pub fn tropical_loop(la: i64, lb: i64, le: i64) -> i64 {
    core::cmp::max(2 * la, 2 * lb) - le
}

/// Graph-level tropical mutation: reads the neighbor lengths off the
/// quadrilateral (or monogon digon) of the edge.
pub fn tropical_mutate(
    graph: &FatGraph,
    lengths: &BTreeMap<usize, i64>,
    edge_name: &str,
) -> Result<i64, MoveError> {
    let e = graph
        .edge_index(edge_name)
        .ok_or_else(|| MoveError::NotFound(edge_name.into()))?;
    if graph.edges[e].kind != EdgeKind::Inner {
        return Err(MoveError::IllegalEdgeKind(edge_name.into()));
    }
    let [x, y] = graph.edges[e].ends;
    let loop_end = [x, y].into_iter().find(|ep| {
        graph.vertices[ep.vertex]
            .slots
            .iter()
            .any(|&(ei, _)| graph.edges[ei].kind == EdgeKind::Loop)
    });
    let val = |ei: usize| lengths.get(&ei).copied().unwrap_or(0);
    if let Some(lp) = loop_end {
        let outer = if lp == x { y } else { x };
        let n = graph.vertices[outer.vertex].slots.len();
        let a = graph.vertices[outer.vertex].slots[(outer.slot + 1) % n].0;
        let b = graph.vertices[outer.vertex].slots[(outer.slot + 2) % n].0;
        Ok(tropical_loop(val(a), val(b), val(e)))
    } else {
        let nx = graph.vertices[x.vertex].slots.len();
        let ny = graph.vertices[y.vertex].slots.len();
        let a = graph.vertices[x.vertex].slots[(x.slot + 1) % nx].0;
        let b = graph.vertices[x.vertex].slots[(x.slot + 2) % nx].0;
        let c = graph.vertices[y.vertex].slots[(y.slot + 1) % ny].0;
        let d = graph.vertices[y.vertex].slots[(y.slot + 2) % ny].0;
        Ok(tropical_inner(val(a), val(b), val(c), val(d), val(e)))
    }
}
