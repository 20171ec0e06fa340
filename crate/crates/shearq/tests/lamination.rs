//! Dual laminations of the built-in surfaces against their published
//! monomials, commutators and casimirs.

use shearq::brackets::{check_homogeneous, verify_casimir};
use shearq::qtorus::QLaurent;
use shearq::registry::builtin;
use shearq::text::parse_qlaurent;

fn arc_lambda_map(name: &str) -> (shearq::FatGraph, Vec<(String, QLaurent)>) {
    let b = builtin(name).unwrap();
    let lam = b.graph.dual_lamination().unwrap();
    let mut out = Vec::new();
    for arc in &lam.arcs {
        let (lambda, _q) =
            shearq::holonomy::arc_lambda(&arc.word, &lam.basis, b.graph.orientation).unwrap();
        let edge = b.graph.edges[arc.edge].name.clone();
        let arcname = b
            .arc_names
            .iter()
            .find(|(e, _)| *e == edge)
            .map(|(_, n)| n.clone())
            .unwrap();
        out.push((arcname, lambda));
    }
    (b.graph, out)
}

#[test]
fn quad014_lambdas_match_the_displayed_monomials() {
    let (graph, arcs) = arc_lambda_map("quad014");
    let basis = graph.epsilon_basis();
    let expect = [
        ("la", "[1] exp((1*pi1 + 1*pi4 + 1*Z)/2)"),
        ("lb", "[1] exp((1*pi1 + 1*pi2)/2)"),
        ("lc", "[1] exp((1*pi2 + 1*pi3 + 1*Z)/2)"),
        ("ld", "[1] exp((1*pi3 + 1*pi4)/2)"),
        ("le", "[1] exp((1*pi2 + 1*pi4 + 1*Z)/2)"),
    ];
    for (name, text) in expect {
        let want = parse_qlaurent(text, &basis).unwrap();
        let got = arcs.iter().find(|(n, _)| n == name).map(|(_, l)| l).unwrap();
        assert_eq!(*got, want, "{name}");
        assert!(got.is_hermitian(), "{name} not hermitian");
    }
}

#[test]
fn quad014_eps_matches_the_displayed_commutators() {
    let b = builtin("quad014").unwrap();
    let basis = b.graph.epsilon_basis();
    let e = |a: &str, b_: &str| basis.eps(basis.lookup(a).unwrap(), basis.lookup(b_).unwrap());
    assert_eq!(e("pi1", "pi2"), 1);
    assert_eq!(e("pi2", "Z"), 1);
    assert_eq!(e("Z", "pi1"), 1);
    assert_eq!(e("pi3", "pi4"), 1);
    assert_eq!(e("pi4", "Z"), 1);
    assert_eq!(e("Z", "pi3"), 1);
    assert_eq!(e("pi1", "pi3"), 0);
    assert_eq!(e("pi1", "pi4"), 0);
    assert_eq!(e("pi2", "pi4"), 0);
    assert_eq!(e("pi2", "pi3"), 0);
}

#[test]
fn s111_lambdas_match_the_canonical_monomials() {
    let (graph, arcs) = arc_lambda_map("s111");
    let basis = graph.epsilon_basis();
    let expect = [
        ("a0", "[1] exp((2*pi + 2*Z1 + 2*Z2 + 2*Z3 + 2*Z4)/2)"),
        ("a1", "[1] exp((2*pi + 2*Z1 + 4*Z2 + 3*Z3 + 3*Z4)/2)"),
        ("a2", "[1] exp((2*pi + 1*Z1 + 3*Z2 + 2*Z3 + 3*Z4)/2)"),
        ("a3", "[1] exp((2*pi + 1*Z1 + 3*Z2 + 1*Z3 + 2*Z4)/2)"),
        ("a4", "[1] exp((2*pi + 2*Z2 + 1*Z3 + 1*Z4)/2)"),
    ];
    for (name, text) in expect {
        let want = parse_qlaurent(text, &basis).unwrap();
        let got = arcs.iter().find(|(n, _)| n == name).map(|(_, l)| l).unwrap();
        assert_eq!(*got, want, "{name}");
    }
}

#[test]
fn s111_counts_and_casimir() {
    let b = builtin("s111").unwrap();
    let lam = b.graph.dual_lamination().unwrap();
    assert_eq!(lam.len(), 5); // 6g-6+3s+2n = 5
    let basis = b.graph.epsilon_basis();
    assert_eq!(basis.len(), 5); // 6g-6+2s+s_c+2n = 5
    let cas = b.graph.casimirs();
    assert_eq!(cas.len(), 1);
    // the boundary casimir is a0 = exp(pi + Z1 + Z2 + Z3 + Z4)
    let a0 = parse_qlaurent("[1] exp((2*pi + 2*Z1 + 2*Z2 + 2*Z3 + 2*Z4)/2)", &basis).unwrap();
    assert_eq!(cas[0], a0);
    assert!(verify_casimir(&cas[0]));
    // kernel oracle: eps * (exponent of the casimir) = 0 exactly
    let kernel = basis.eps_kernel();
    assert_eq!(kernel.len(), 1);
    assert!(kernel[0].iter().all(|&x| x == kernel[0][0]));
}

#[test]
fn quad014_casimir_is_the_primitive_boundary_sum() {
    // brute-force oracle: the kernel of eps over boundary multiplicity vectors
    let b = builtin("quad014").unwrap();
    let basis = b.graph.epsilon_basis();
    let kernel = basis.eps_kernel();
    assert_eq!(kernel.len(), 1, "center of the quadrangle algebra is 1-dim");
    let cas = b.graph.casimirs();
    assert_eq!(cas.len(), 1);
    let (exp, _, _, _) = cas[0].single_monomial().unwrap();
    // the casimir exponent must be proportional to the kernel vector
    let k = &kernel[0];
    let mut ratio = None;
    for (g, n) in exp.iter() {
        let kv = k[g.0 as usize];
        assert_ne!(kv, 0);
        let r = n as i64 * 2 / kv; // allow sign either way
        match ratio {
            None => ratio = Some(r),
            Some(r0) => assert_eq!(r0, r),
        }
    }
    assert!(verify_casimir(&cas[0]));
}

#[test]
fn builtin_seeds_are_homogeneous_with_matching_incidence() {
    for name in ["quad014", "s111", "tri023"] {
        let b = builtin(name).unwrap();
        let seed = b.seed().unwrap();
        let report = check_homogeneous(&seed);
        assert!(
            report.all_pass,
            "{name} homogeneity failed:\n{}",
            report.lines.join("\n")
        );
    }
}

#[test]
fn s111_a0_commutes_with_the_whole_seed() {
    let b = builtin("s111").unwrap();
    let seed = b.seed().unwrap();
    let i0 = seed.lookup("a0").unwrap();
    for j in 0..seed.lambdas.len() {
        assert_eq!(seed.incidence_eps(i0, j), 0, "a0 vs slot {j}");
    }
}

#[test]
fn tri023_lambdas_and_structure() {
    let (graph, arcs) = arc_lambda_map("tri023");
    let basis = graph.epsilon_basis();
    let expect = [
        ("h11", "[1] exp((2*pi1 + 2*Zc)/2)"),
        ("h13", "[1] exp((1*pi1 + 1*pi3 + 2*Zc + 1*Ze)/2)"),
        ("l13", "[1] exp((1*pi1 + 1*pi3 + 1*Ze)/2)"),
        ("l12", "[1] exp((1*pi1 + 1*pi2 + 2*Zc + 1*Ze)/2)"),
        ("l23", "[1] exp((1*pi2 + 1*pi3)/2)"),
    ];
    for (name, text) in expect {
        let want = parse_qlaurent(text, &basis).unwrap();
        let got = arcs.iter().find(|(n, _)| n == name).map(|(_, l)| l).unwrap();
        assert_eq!(*got, want, "{name}");
    }
    let lam = graph.dual_lamination().unwrap();
    assert_eq!(lam.len(), 6); // five arcs + one omega cycle
    let cas = graph.casimirs();
    // boundary sum of the cusped hole + the omega of the inner hole
    assert_eq!(cas.len(), 2);
    for c in &cas {
        assert!(verify_casimir(c));
    }
}

#[test]
fn quantum_arc_traces_weyl_normalize_to_hermitian_monomials() {
    for name in ["quad014", "s111", "tri023"] {
        let b = builtin(name).unwrap();
        let lam = b.graph.dual_lamination().unwrap();
        for arc in &lam.arcs {
            let tr =
                shearq::holonomy::trace(&arc.word, &lam.basis, shearq::holonomy::Mode::Quantum, b.graph.orientation)
                    .unwrap();
            let (lambda, _defect) = tr.weyl_normalize();
            assert_eq!(lambda.num_terms(), 1, "{name} arc not a monomial");
            assert!(lambda.is_hermitian());
            assert!(lambda.is_positive_integral());
        }
        // on the standard-orientation quadrangle the natural ordering is
        // already Hermitian, with no defect at all
        if name == "quad014" {
            for arc in &lam.arcs {
                let tr = shearq::holonomy::trace(
                    &arc.word,
                    &lam.basis,
                    shearq::holonomy::Mode::Quantum,
                    b.graph.orientation,
                )
                .unwrap();
                assert!(tr.is_hermitian(), "quadrangle arc trace not hermitian");
            }
        }
    }
}
