//! Goldman/Poisson structure on arcs: endpoint orderings, incidence indices,
//! seeds with homogeneous q-commutation, and casimir verification.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::basis::GeneratorBasis;
use crate::holonomy::{lambda_seed_data, LambdaSeedData};
use crate::qtorus::{QLaurent, TorusError};
use crate::surface::{DualLamination, EdgeKind, FatGraph};

/// Position of one arc end at a cusp: ends at a cusp are linearly ordered,
/// increasing in the surface orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEndpointLabel {
    /// Cusp vertex index in the graph.
    pub cusp: usize,
    /// Rank among all arc ends at this cusp.
    pub position: i32,
}

/// Both ends of an arc, in traversal order (start, end).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEndpoints {
    pub start: ArcEndpointLabel,
    pub end: ArcEndpointLabel,
}

/// The incidence index of two arcs from their endpoint labels: the sum of
/// four signed coincidence terms, one per pair of ends at a shared cusp.
pub fn incidence_index(a1: &ArcEndpoints, a2: &ArcEndpoints) -> i64 {
    let mut total = 0i64;
    for e1 in [a1.start, a1.end] {
        for e2 in [a2.start, a2.end] {
            if e1.cusp != e2.cusp {
                continue;
            }
            total += (e1.position - e2.position).signum() as i64;
        }
    }
    total
}

/// Assign endpoint labels to the arcs of a lamination. Strands entering a
/// cusp are ranked by walking inward along their paths: at the first turn
/// where two strands diverge, the one turning left comes first on a standard
/// surface, the one turning right on a mirrored one.
pub fn endpoint_labels(graph: &FatGraph, lam: &DualLamination) -> Vec<ArcEndpoints> {
    struct Strand {
        arc: usize,
        is_end: bool,
        turns: Vec<bool>,
    }
    let mut per_cusp: Vec<(usize, Vec<Strand>)> = Vec::new();
    let cusp_slot = |per_cusp: &mut Vec<(usize, Vec<Strand>)>, cusp: usize| -> usize {
        if let Some(i) = per_cusp.iter().position(|&(c, _)| c == cusp) {
            i
        } else {
            per_cusp.push((cusp, Vec::new()));
            per_cusp.len() - 1
        }
    };
    for (ai, arc) in lam.arcs.iter().enumerate() {
        let f = cusp_slot(&mut per_cusp, arc.start_cusp);
        per_cusp[f].1.push(Strand {
            arc: ai,
            is_end: false,
            turns: arc.path.turns_forward(),
        });
        let t = cusp_slot(&mut per_cusp, arc.end_cusp);
        per_cusp[t].1.push(Strand {
            arc: ai,
            is_end: true,
            turns: arc.path.turns_backward(),
        });
    }
    let left_first = graph.orientation == crate::basis::Orientation::Standard;
    let mut labels: Vec<ArcEndpoints> = lam
        .arcs
        .iter()
        .map(|arc| ArcEndpoints {
            start: ArcEndpointLabel {
                cusp: arc.start_cusp,
                position: 0,
            },
            end: ArcEndpointLabel {
                cusp: arc.end_cusp,
                position: 0,
            },
        })
        .collect();
    for (_cusp, strands) in per_cusp.iter_mut() {
        strands.sort_by(|a, b| {
            let n = a.turns.len().min(b.turns.len());
            for k in 0..n {
                if a.turns[k] != b.turns[k] {
                    let a_first = a.turns[k] == left_first;
                    return if a_first {
                        core::cmp::Ordering::Less
                    } else {
                        core::cmp::Ordering::Greater
                    };
                }
            }
            (a.arc, a.is_end).cmp(&(b.arc, b.is_end))
        });
        for (rank, s) in strands.iter().enumerate() {
            let lab = &mut labels[s.arc];
            if s.is_end {
                lab.end.position = rank as i32;
            } else {
                lab.start.position = rank as i32;
            }
        }
    }
    labels
}

/// An ordered cluster of arc lambda-lengths with its incidence data. The
/// lambdas are unit generators of their own torus whose commutators are the
/// incidence pairings; mutated slots hold polynomials in the seed torus.
#[derive(Debug, Clone)]
pub struct Seed {
    pub names: Vec<String>,
    pub basis: Arc<GeneratorBasis>,
    /// Current lambda of each slot, as an element of the seed torus.
    pub lambdas: Vec<QLaurent>,
    pub frozen: Vec<bool>,
    pub endpoints: Vec<ArcEndpoints>,
    /// Which graph edge each slot is dual to.
    pub dual_edges: Vec<usize>,
    pub data: LambdaSeedData,
}

impl Seed {
    /// Build the seed of a graph's dual lamination with the given arc names.
    pub fn from_lamination(
        graph: &FatGraph,
        lam: &DualLamination,
        names: Vec<String>,
    ) -> Result<Seed, crate::holonomy::WordError> {
        let mut data = lambda_seed_data(graph, lam)?;
        let n = data.lambdas.len();
        assert_eq!(names.len(), n);
        // rebuild the lambda basis under the requested names
        let eps = data.lambda_basis.eps_rows();
        let basis = GeneratorBasis::new(
            names.clone(),
            alloc::vec![crate::basis::GeneratorKind::ArcLength; n],
            data.lambda_basis.omegas().to_vec(),
            eps,
        );
        let exps: Vec<_> = data
            .lambdas
            .iter()
            .map(|l| l.single_monomial().unwrap().0)
            .collect();
        let quarter_images = exps
            .iter()
            .map(|u| (u.scale(2), 0, crate::qtorus::Scalar::from_integer(1)))
            .collect();
        data.lambda_basis = basis.clone();
        data.names = names.clone();
        data.lambda_to_shear =
            crate::qtorus::MonomialMap::new(basis.clone(), lam.basis.clone(), quarter_images)
                .expect("seed pushforward");
        let lambdas = (0..n)
            .map(|i| QLaurent::generator(basis.clone(), crate::basis::GeneratorId(i as u32), 1))
            .collect();
        let frozen = lam
            .arcs
            .iter()
            .map(|a| graph.edges[a.edge].kind == EdgeKind::Open)
            .collect();
        let endpoints = endpoint_labels(graph, lam);
        Ok(Seed {
            names,
            basis,
            lambdas,
            frozen,
            endpoints,
            dual_edges: lam.arcs.iter().map(|a| a.edge).collect(),
            data,
        })
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Incidence from the seed torus commutators (the epsilon-derived side of
    /// the two-way oracle).
    pub fn incidence_eps(&self, i: usize, j: usize) -> i64 {
        self.basis.eps(
            crate::basis::GeneratorId(i as u32),
            crate::basis::GeneratorId(j as u32),
        )
    }

    /// Incidence from endpoint labels (the combinatorial side).
    pub fn incidence_combinatorial(&self, i: usize, j: usize) -> i64 {
        incidence_index(&self.endpoints[i], &self.endpoints[j])
    }
}

/// One line per checked pair.
#[derive(Debug, Clone, Default)]
pub struct HomogeneityReport {
    pub lines: Vec<String>,
    pub all_pass: bool,
}

/// Verify homogeneous q-commutation for every pair in the seed, with the
/// incidence index computed both ways: from endpoint labels and from the
/// seed commutators. A pair passes when both indices agree and
/// `q^{I/4} lam_j lam_i == q^{-I/4} lam_i lam_j` holds exactly.
pub fn check_homogeneous(seed: &Seed) -> HomogeneityReport {
    let mut report = HomogeneityReport {
        lines: Vec::new(),
        all_pass: true,
    };
    let n = seed.lambdas.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let i_eps = seed.incidence_eps(i, j);
            let i_comb = seed.incidence_combinatorial(i, j);
            let li = &seed.lambdas[i];
            let lj = &seed.lambdas[j];
            let lhs = lj.qmul(li).map(|p| p.shift_q(i_eps as i32));
            let rhs = li.qmul(lj).map(|p| p.shift_q(-(i_eps as i32)));
            let homog = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
            let pass = homog && i_eps == i_comb;
            if !pass {
                report.all_pass = false;
            }
            report.lines.push(format!(
                "pair <{},{}> I={} status={}{}",
                seed.names[i],
                seed.names[j],
                i_eps,
                if pass { "pass" } else { "fail" },
                if i_eps != i_comb {
                    format!(" (endpoint index {i_comb})")
                } else {
                    String::new()
                }
            ));
        }
    }
    report
}

/// The Goldman bracket on classical geodesic/arc functions: the Poisson
/// bracket of the shear torus, exposed with geodesic-function semantics.
pub fn goldman_classical(f: &QLaurent, g: &QLaurent) -> Result<QLaurent, TorusError> {
    f.poisson(g)
}

/// True iff `c` Poisson-commutes (when classical) and q-commutes with every
/// generator monomial of its basis.
pub fn verify_casimir(c: &QLaurent) -> bool {
    let basis = c.basis().clone();
    for g in basis.ids() {
        let m = QLaurent::generator(basis.clone(), g, 1);
        if c.is_classical() {
            match c.poisson(&m) {
                Ok(p) if p.is_zero() => {}
                _ => return false,
            }
        }
        let ab = c.qmul(&m).expect("same basis");
        let ba = m.qmul(c).expect("same basis");
        if ab != ba {
            return false;
        }
    }
    true
}
