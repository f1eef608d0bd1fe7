//! Named regression checks pinning the displayed reference values: counts,
//! polynomials and coefficient matrices for the worked examples and the
//! closed-form families. The CLI exposes them as a suite; the acceptance
//! tests group them by example.

use crate::algebra::{rat, ratio, BiPoly, Int, Rat, UniPoly};
use crate::arbor::{self, Arbor};
use crate::families::{self, CoxeterType};
use crate::invariants;
use crate::polytope;
use crate::poset;
use crate::volume;

#[derive(Clone, Debug)]
pub struct GoldenCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn up(ints: &[i64]) -> UniPoly {
    UniPoly::from_ints(ints)
}

/// Rows by Y-degree from the constant row up, entries by X-degree.
fn triangle_rows(rows: &[Vec<i64>]) -> BiPoly {
    let mut out = BiPoly::zero();
    for (k, row) in rows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            out.add_term(rat(c), j as u32, k as u32);
        }
    }
    out
}

fn check_eq<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<GoldenCheck>,
    name: &str,
    got: T,
    want: T,
) {
    let pass = got == want;
    out.push(GoldenCheck {
        name: name.to_string(),
        pass,
        detail: if pass {
            String::new()
        } else {
            format!("expected {want:?}, got {got:?}")
        },
    });
}

fn check(out: &mut Vec<GoldenCheck>, name: &str, pass: bool, detail: &str) {
    out.push(GoldenCheck {
        name: name.to_string(),
        pass,
        detail: if pass { String::new() } else { detail.to_string() },
    });
}

pub fn golden_suite() -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    base_cases(&mut out);
    running_example(&mut out);
    linear_pair(&mut out);
    unit_chain_length_three(&mut out);
    unary_binary_example(&mut out);
    family_values(&mut out);
    out
}

fn base_cases(out: &mut Vec<GoldenCheck>) {
    let t = Arbor::parse("(1)").unwrap();
    check_eq(out, "base/height-poly", invariants::f_height_poly(&t, 2), up(&[1, 1, 1]));
    check_eq(out, "base/zeta-refined", invariants::zeta_refined_by_height(&t), vec![
        UniPoly::one(),
        up(&[-1, 1]),
    ]);
    check_eq(out, "base/k-poly", invariants::k_poly(&t), triangle_rows(&[vec![1], vec![0, 1]]));
    check_eq(
        out,
        "base/laplace",
        volume::laplace_poly(&t),
        triangle_rows(&[vec![0], vec![1, -1]]),
    );
    check_eq(out, "base/vertices", polytope::vertices(&t), vec![vec![0], vec![1]]);
}

fn running_example(out: &mut Vec<GoldenCheck>) {
    let t = Arbor::parse("(2 (2) (1) (1))").unwrap();
    let p = poset::build_poset(&t);

    check_eq(out, "running-example/element-count", p.len(), 330);
    check_eq(
        out,
        "running-example/cubical-f-vector",
        p.cubical_f_vector(),
        up(&[330, 990, 1152, 654, 186, 24, 1]),
    );
    check_eq(
        out,
        "running-example/vertex-count",
        polytope::vertices(&t).len(),
        36,
    );

    let layout = polytope::CoordinateLayout::new(&t);
    let mut down: Vec<usize> = layout.nodes().iter().map(|n| n.subtree_size).collect();
    down.sort_unstable();
    check_eq(out, "running-example/down-set-sizes", down, vec![1, 1, 2, 6]);
    let mut upsz: Vec<usize> = layout.nodes().iter().map(|n| n.up_indices.len()).collect();
    upsz.sort_unstable();
    check_eq(out, "running-example/up-set-sizes", upsz, vec![2, 3, 3, 4]);

    let ehrhart_want =
        (&(&up(&[1, 2]) * &up(&[1, 1]).pow(3)) * &up(&[12, 70, 83])).scale(&ratio(1, 12));
    check_eq(out, "running-example/ehrhart", invariants::ehrhart(&t), ehrhart_want);
    check_eq(out, "running-example/volume", volume::volume(&t), ratio(83, 6));

    let zeta_want = (&(&up(&[0, 1]) * &up(&[-1, 2])) * &up(&[30, -266, 893, -1369, 802]))
        .scale(&ratio(1, 90));
    check_eq(out, "running-example/zeta", invariants::zeta(&t), zeta_want);

    let u1 = up(&[-1, 1]);
    let refined_want = vec![
        UniPoly::one(),
        up(&[-6, 6]),
        &up(&[-15, 17]) * &u1,
        (&(&up(&[-10, 11]) * &up(&[-3, 4])) * &u1).scale(&ratio(2, 3)),
        (&up(&[-30, 119, -156, 68]) * &u1).scale(&ratio(1, 2)),
        (&(&(&up(&[30, -77, 53]) * &up(&[-3, 4])) * &up(&[-1, 2])) * &u1).scale(&ratio(1, 15)),
        (&(&up(&[90, -621, 1598, -1839, 802]) * &up(&[-1, 2])) * &u1).scale(&ratio(1, 90)),
    ];
    check_eq(
        out,
        "running-example/zeta-refined",
        invariants::zeta_refined_by_height(&t),
        refined_want,
    );

    let m_want = triangle_rows(&[
        vec![1],
        vec![-6, 6],
        vec![15, -34, 19],
        vec![-20, 78, -98, 40],
        vec![15, -92, 201, -188, 64],
        vec![-6, 58, -208, 352, -284, 88],
        vec![1, -18, 113, -334, 506, -380, 112],
    ]);
    check_eq(out, "running-example/m-triangle", invariants::m_triangle(&t).poly, m_want);

    let mut laplace_want = BiPoly::zero();
    for (c, e, v) in [
        (rat(-1), 4u32, 6u32),
        (rat(2), 3, 6),
        (rat(-2), 4, 5),
        (rat(4), 3, 5),
        (rat(-2), 6, 2),
        (rat(-2), 1, 6),
        (rat(-2), 2, 5),
        (ratio(-22, 3), 6, 1),
        (rat(1), 0, 6),
    ] {
        laplace_want.add_term(c, e, v);
    }
    check_eq(out, "running-example/laplace", volume::laplace_poly(&t), laplace_want);

    let vf = volume::volume_function(&t);
    check_eq(
        out,
        "running-example/volume-function-first-piece",
        vf.pieces()[0].clone(),
        UniPoly::monomial(ratio(1, 120), 5),
    );
    let last = UniPoly::from_coeffs(vec![ratio(-14, 3), rat(2)]);
    check(
        out,
        "running-example/volume-function-top-pieces",
        vf.pieces()[4] == last && vf.pieces()[5] == last,
        "pieces on [4,6] should be 2h - 14/3",
    );

    check_eq(
        out,
        "running-example/h-vector",
        invariants::h_vector(&t),
        up(&[1, 18, 81, 130, 81, 18, 1]),
    );
    check_eq(
        out,
        "running-example/f-vector",
        invariants::f_vector(&t),
        up(&[330, 990, 1152, 654, 186, 24, 1]),
    );

    let rank_diag: Vec<Rat> = (0..=6)
        .map(|k| invariants::m_triangle(&t).poly.coeff(k, k))
        .collect();
    let rank_want: Vec<Rat> = p.poset.rank_sizes().iter().map(|&s| rat(s as i64)).collect();
    check_eq(out, "running-example/m-antidiagonal-ranks", rank_diag, rank_want);
}

fn linear_pair(out: &mut Vec<GoldenCheck>) {
    let t = Arbor::parse("(2 (2 (1 (1))))").unwrap();
    let r = t.reverse_linear().unwrap();
    check_eq(out, "linear-pair/reverse", r.encode(), "(1 (1 (2 (2))))".to_string());

    let pt = poset::build_poset(&t);
    let pr = poset::build_poset(&r);
    check_eq(out, "linear-pair/element-count", pt.len(), 501);
    check_eq(out, "linear-pair/element-count-reverse", pr.len(), 501);

    let e_want = (&up(&[1, 1]) * &up(&[720, 7848, 32170, 62225, 57230, 20167]))
        .scale(&ratio(1, 720));
    check_eq(out, "linear-pair/ehrhart", invariants::ehrhart(&t), e_want);
    let z_want = (&(&up(&[0, 1]) * &up(&[-1, 2])) * &up(&[20, -249, 1002, -1611, 898]))
        .scale(&ratio(1, 60));
    check_eq(out, "linear-pair/zeta", invariants::zeta(&t), z_want);
    let e_rev_want = (&(&up(&[1, 1]) * &up(&[1, 2])) * &up(&[60, 514, 1557, 1981, 898]))
        .scale(&ratio(1, 60));
    check_eq(out, "linear-pair/ehrhart-reverse", invariants::ehrhart(&r), e_rev_want);
    let z_rev_want = (&up(&[0, 1]) * &up(&[-120, 2098, -12795, 34975, -43605, 20167]))
        .scale(&ratio(1, 720));
    check_eq(out, "linear-pair/zeta-reverse", invariants::zeta(&r), z_rev_want);

    check_eq(
        out,
        "linear-pair/maximal-chains",
        pt.poset.maximal_chain_count(),
        Int::from(21552),
    );
    check_eq(
        out,
        "linear-pair/maximal-chains-reverse",
        pr.poset.maximal_chain_count(),
        Int::from(20167),
    );
    check_eq(out, "linear-pair/volume", volume::volume(&t), ratio(20167, 720));
    check_eq(out, "linear-pair/volume-reverse", volume::volume(&r), ratio(21552, 720));

    let h_want = up(&[1, 23, 122, 209, 122, 23, 1]);
    check(
        out,
        "linear-pair/common-h-vector",
        invariants::h_vector(&t) == h_want && invariants::h_vector(&r) == h_want,
        "h-vectors of the pair should both equal the displayed palindrome",
    );
}

fn unit_chain_length_three(out: &mut Vec<GoldenCheck>) {
    let t = arbor::type_a(3).unwrap();
    check_eq(out, "chain3/element-count", poset::build_poset(&t).len(), 14);
    let m_want = triangle_rows(&[vec![1], vec![-3, 3], vec![3, -8, 5], vec![-1, 6, -10, 5]]);
    check_eq(out, "chain3/m-triangle", invariants::m_triangle(&t).poly, m_want);
    let tm_want = triangle_rows(&[vec![1], vec![-6, 6], vec![10, -16, 6], vec![-5, 10, -6, 1]]);
    let tm = invariants::transmuted_m_triangle(&t);
    check_eq(out, "chain3/transmuted-m-triangle", tm.poly.clone(), tm_want);
    check_eq(
        out,
        "chain3/noncrossing-partner",
        families::nc_m_triangle(CoxeterType::A, 3).poly,
        tm.poly,
    );
    check_eq(
        out,
        "chain3/newton-support",
        polytope::newton_check(&t).support_size,
        14,
    );
}

fn unary_binary_example(out: &mut Vec<GoldenCheck>) {
    let t = Arbor::parse("(1 (1) (1 (1)))").unwrap();
    check_eq(out, "unary-binary/element-count", poset::build_poset(&t).len(), 33);
    let transmuted = invariants::transmute(&invariants::m_triangle(&t)).unwrap();
    let f = invariants::f_from_m(&transmuted).unwrap();
    let want = triangle_rows(&[
        vec![1, 8, 22, 25, 10],
        vec![4, 17, 23, 10],
        vec![6, 14, 8],
        vec![4, 4],
        vec![1],
    ]);
    check_eq(out, "unary-binary/f-triangle", f.poly, want);
}

fn family_values(out: &mut Vec<GoldenCheck>) {
    check_eq(
        out,
        "families/fuss-zeta-142",
        families::fuss_zeta(&families::FussParams::new(1, 4, 2).unwrap()),
        UniPoly::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(3, 2)]),
    );
    check_eq(
        out,
        "families/fuss-142-elements",
        families::fuss_elements(&families::FussParams::new(1, 4, 2).unwrap()).len(),
        5,
    );
    let m_a3 = families::type_a_m_closed(3);
    check_eq(
        out,
        "families/unit-chain-m-closed",
        m_a3.poly,
        invariants::m_triangle(&arbor::type_a(3).unwrap()).poly,
    );
    let k33 = invariants::k_poly(&arbor::type_b(3).unwrap());
    let mut k_want = BiPoly::zero();
    for j in 0..=3i64 {
        for k in j..=3i64 {
            k_want.add_term(
                Rat::from_integer(
                    crate::algebra::binom_int(3, j) * crate::algebra::binom_int(k - 1, k - j),
                ),
                j as u32,
                k as u32,
            );
        }
    }
    check_eq(out, "families/single-vertex-k-poly", k33, k_want);
    check_eq(out, "families/halo-cardinality-2", families::halo_cardinality(2), Int::from(5));
    check_eq(
        out,
        "families/halo-h-2",
        families::halo_h_closed(2),
        up(&[1, 3, 1]),
    );
    check_eq(
        out,
        "families/hochschild-count-4",
        families::hochschild_count(4),
        Int::from(28),
    );
    check_eq(
        out,
        "families/hochschild-h-closed",
        families::hochschild_h_closed(2),
        up(&[1, 3, 1]),
    );
    let tb = families::typeb_m_triangle(&families::TypeBParams::new(3, 3).unwrap());
    check_eq(
        out,
        "families/single-vertex-m-triangle",
        tb.poly,
        invariants::m_triangle(&arbor::type_b(3).unwrap()).poly,
    );
    check(
        out,
        "families/nc-self-duality",
        (1..=5).all(|n| {
            families::is_self_dual(&families::nc_m_triangle(CoxeterType::A, n))
                && families::is_self_dual(&families::nc_m_triangle(CoxeterType::B, n))
        }),
        "noncrossing M-triangles should be self-dual",
    );
}

/// Convenience wrapper used by the CLI wiring.
pub fn all_pass(checks: &[GoldenCheck]) -> bool {
    checks.iter().all(|c| c.pass)
}
