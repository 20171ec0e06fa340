//! Generator bases: ordered shear/cusp generators with their commutator matrix.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// Index of a generator inside its [`GeneratorBasis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(pub u32);

/// Index of an omega symbol (loop weight) inside a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaId(pub u32);

/// What a generator exponentiates: an inner shear coordinate Z or a cusp
/// coordinate pi. The two kinds participate in the bracket identically; the
/// kind only matters for surface bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    InnerShear,
    CuspShear,
    /// Lambda-length generator of a seed torus (exp of half the arc length).
    ArcLength,
}

/// Loop weights: 2cosh(P/2) for an uncusped hole, 2cos(pi/p) for a Z_p
/// orbifold point. Formal symbols; only numeric evaluation specialises them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaKind {
    HolePerimeter,
    Orbifold { order: u32 },
}

/// Handedness used when the slot lists of a fat graph were transcribed.
///
/// The bracket formula fixes an orientation only through its figures; two
/// surfaces transcribed from mirror-viewed figures need opposite signs in the
/// commutator matrix. `Mirrored` negates the vertex contributions and reverses
/// the linear order of arc ends at cusps; walks and turn matrices are
/// unaffected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    #[default]
    Standard,
    Mirrored,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Standard => 1,
            Orientation::Mirrored => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OmegaSymbol {
    pub name: String,
    pub kind: OmegaKind,
}

/// An ordered set of generators together with the antisymmetric integer matrix
/// of their brackets: `{Y_i, Y_j} = eps[i][j]` and `[Y_i, Y_j] = 2 pi i hbar eps[i][j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorBasis {
    names: Vec<String>,
    kinds: Vec<GeneratorKind>,
    omegas: Vec<OmegaSymbol>,
    /// Row-major antisymmetric matrix, indexed by generator ids.
    eps: Vec<i64>,
}

impl GeneratorBasis {
    pub fn new(
        names: Vec<String>,
        kinds: Vec<GeneratorKind>,
        omegas: Vec<OmegaSymbol>,
        eps_rows: Vec<Vec<i64>>,
    ) -> Arc<Self> {
        let n = names.len();
        assert_eq!(kinds.len(), n);
        assert_eq!(eps_rows.len(), n);
        let mut eps = vec![0i64; n * n];
        for (i, row) in eps_rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, &v) in row.iter().enumerate() {
                eps[i * n + j] = v;
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    eps[i * n + j],
                    -eps[j * n + i],
                    "epsilon must be antisymmetric"
                );
            }
        }
        Arc::new(GeneratorBasis {
            names,
            kinds,
            omegas,
            eps,
        })
    }

    /// Basis with all brackets zero (commutative Laurent ring).
    pub fn commutative(names: Vec<String>) -> Arc<Self> {
        let n = names.len();
        let kinds = vec![GeneratorKind::InnerShear; n];
        GeneratorBasis::new(names, kinds, Vec::new(), vec![vec![0; n]; n])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: GeneratorId) -> &str {
        &self.names[id.0 as usize]
    }

    pub fn kind(&self, id: GeneratorId) -> GeneratorKind {
        self.kinds[id.0 as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.names.len() as u32).map(GeneratorId)
    }

    pub fn lookup(&self, name: &str) -> Option<GeneratorId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| GeneratorId(i as u32))
    }

    pub fn omega(&self, id: OmegaId) -> &OmegaSymbol {
        &self.omegas[id.0 as usize]
    }

    pub fn omegas(&self) -> &[OmegaSymbol] {
        &self.omegas
    }

    pub fn lookup_omega(&self, name: &str) -> Option<OmegaId> {
        self.omegas
            .iter()
            .position(|w| w.name == name)
            .map(|i| OmegaId(i as u32))
    }

    pub fn eps(&self, i: GeneratorId, j: GeneratorId) -> i64 {
        self.eps[i.0 as usize * self.names.len() + j.0 as usize]
    }

    pub fn eps_rows(&self) -> Vec<Vec<i64>> {
        let n = self.names.len();
        (0..n)
            .map(|i| self.eps[i * n..(i + 1) * n].to_vec())
            .collect()
    }

    /// Integer kernel basis of eps (exponent vectors v with eps.v = 0), found by
    /// fraction-free elimination. Used as the casimir oracle.
    pub fn eps_kernel(&self) -> Vec<Vec<i64>> {
        let n = self.names.len();
        let mut m: Vec<Vec<i64>> = self.eps_rows();
        // track column operations on an identity matrix? Simpler: compute null
        // space of the matrix by Gauss over rationals, then clear denominators.
        let mut rows: Vec<Vec<f64>> = m
            .drain(..)
            .map(|r| r.into_iter().map(|x| x as f64).collect())
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0usize;
        for col in 0..n {
            let mut piv = None;
            for r in rank..n {
                if rows[r][col].abs() > 1e-9 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            rows.swap(rank, p);
            let d = rows[rank][col];
            for x in rows[rank].iter_mut() {
                *x /= d;
            }
            for r in 0..n {
                if r != rank && rows[r][col].abs() > 1e-12 {
                    let f = rows[r][col];
                    for c in 0..n {
                        rows[r][c] -= f * rows[rank][c];
                    }
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut kernel = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0f64; n];
            v[free] = 1.0;
            for &(r, c) in &pivots {
                v[c] = -rows[r][free];
            }
            // clear denominators: entries here are rationals with small
            // denominators; scale by up to 24 to hit integers
            let mut scaled = None;
            for s in 1..=24i64 {
                let cand: Vec<i64> = v.iter().map(|x| libm::round(x * s as f64) as i64).collect();
                if v.iter()
                    .zip(&cand)
                    .all(|(x, c)| libm::fabs(x * s as f64 - *c as f64) < 1e-6)
                {
                    scaled = Some(cand);
                    break;
                }
            }
            let mut cand = scaled.expect("kernel entries should be small rationals");
            let g = cand.iter().fold(0i64, |a, &b| gcd(a, b.abs()));
            if g > 1 {
                for x in cand.iter_mut() {
                    *x /= g;
                }
            }
            kernel.push(cand);
        }
        kernel
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
