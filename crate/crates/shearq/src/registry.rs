//! Built-in surfaces: the decorated quadrangle, the one-cusped torus, the
//! triangle with an inner hole, and the no-cusp torus harness.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::brackets::Seed;
use crate::surface::FatGraph;
use crate::text::parse_surface;

/// quad014: the disc with one hole carrying four bordered cusps. Two
/// trivalent vertices share the inner edge Z; the four cusp edges fan out.
pub const QUAD014: &str = "\
surface g=0 s_h=1 s_o=0 n=4
name quad014
vertex v1 trivalent
vertex v2 trivalent
vertex c1 cusp
vertex c2 cusp
vertex c3 cusp
vertex c4 cusp
edge pi1 open v1.0 c1
edge pi2 open v1.1 c2
edge pi3 open v2.0 c3
edge pi4 open v2.1 c4
edge Z inner v1.2 v2.2
";

/// s111: genus one, one hole, one cusp on it. The slot lists transcribe the
/// canonical cusped spine; the figure is mirror-handed relative to the
/// quadrangle, hence the orientation line.
pub const S111: &str = "\
surface g=1 s_h=1 s_o=0 n=1
name s111
orientation mirrored
vertex u trivalent
vertex v trivalent
vertex w trivalent
vertex c1 cusp
edge pi open w.0 c1
edge Z1 inner u.0 w.2
edge Z2 inner v.0 w.1
edge Z3 inner u.2 v.2
edge Z4 inner u.1 v.1
";

/// tri023: disc with an inner hole (kept in a monogon by the loop W) and
/// three cusps on the outer boundary.
pub const TRI023: &str = "\
surface g=0 s_h=2 s_o=0 n=3
name tri023
orientation mirrored
vertex m trivalent
vertex p trivalent
vertex r trivalent
vertex c1 cusp
vertex c2 cusp
vertex c3 cusp
edge pi1 open p.2 c1
edge pi2 open r.1 c2
edge pi3 open r.2 c3
edge Zc inner m.0 p.0
edge Ze inner p.1 r.0
edge W loop m omega=hole
";

/// A built-in surface together with its seed naming and harness words.
pub struct Builtin {
    pub graph: FatGraph,
    /// Arc name per dual edge name.
    pub arc_names: Vec<(String, String)>,
    /// Named closed-geodesic words (name, word text).
    pub words: Vec<(String, String)>,
}

impl Builtin {
    pub fn seed(&self) -> Result<Seed, String> {
        let lam = self.graph.dual_lamination()?;
        let names = lam
            .arcs
            .iter()
            .map(|a| {
                let edge = &self.graph.edges[a.edge].name;
                self.arc_names
                    .iter()
                    .find(|(e, _)| e == edge)
                    .map(|(_, n)| n.clone())
                    .unwrap_or_else(|| format!("l[{edge}]"))
            })
            .collect();
        Seed::from_lamination(&self.graph, &lam, names).map_err(|e| format!("{e}"))
    }
}

pub fn builtin_names() -> Vec<&'static str> {
    vec!["quad014", "s111", "tri023", "torus11"]
}

pub fn builtin(name: &str) -> Option<Builtin> {
    match name {
        "quad014" => Some(Builtin {
            graph: parse_surface(QUAD014).expect("builtin parses"),
            arc_names: vec![
                ("pi1".into(), "la".into()),
                ("pi2".into(), "lb".into()),
                ("pi3".into(), "lc".into()),
                ("pi4".into(), "ld".into()),
                ("Z".into(), "le".into()),
            ],
            words: vec![],
        }),
        "s111" => Some(Builtin {
            graph: parse_surface(S111).expect("builtin parses"),
            arc_names: s111_arc_names(),
            words: s111_words(),
        }),
        "torus11" => {
            // the no-cusp torus algebra is studied on the s111 spine
            let mut g = parse_surface(S111).expect("builtin parses");
            g.name = "torus11".to_string();
            Some(Builtin {
                graph: g,
                arc_names: s111_arc_names(),
                words: s111_words(),
            })
        }
        "tri023" => Some(Builtin {
            graph: parse_surface(TRI023).expect("builtin parses"),
            arc_names: vec![
                ("Zc".into(), "h11".into()),
                ("Ze".into(), "h13".into()),
                ("pi1".into(), "l13".into()),
                ("pi2".into(), "l12".into()),
                ("pi3".into(), "l23".into()),
            ],
            words: vec![],
        }),
        _ => None,
    }
}

fn s111_arc_names() -> Vec<(String, String)> {
    vec![
        ("pi".into(), "a0".into()),
        ("Z1".into(), "a1".into()),
        ("Z3".into(), "a2".into()),
        ("Z4".into(), "a3".into()),
        ("Z2".into(), "a4".into()),
    ]
}

fn s111_words() -> Vec<(String, String)> {
    vec![
        ("G1".into(), "L X(Z2) R X(Z4) L X(Z1)".into()),
        ("G2".into(), "L X(Z2) L X(Z3) R X(Z1)".into()),
        ("G3".into(), "L X(Z4) R X(Z3)".into()),
        (
            "g".into(),
            "R X(Z1) L X(Z3) L X(Z4) L X(Z1) L X(Z2) L X(Z3) L X(Z4) L X(Z2)".into(),
        ),
    ]
}
