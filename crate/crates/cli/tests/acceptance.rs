//! End-to-end acceptance: one line per criterion, exact arithmetic throughout.

use std::process::Command;

use fqhg::algebra::{apply, faithful_functionals, is_faithful, is_positive, modular_automorphism, validate_coproduct};
use fqhg::constructions::{
    alpha_dual_pair, alpha_family, c3, c4, group_pair, groupoid2, hecke_pair, m2, omega_free, omega_from_group,
    twosub_pair, AlphaKind, Example, HeckePair,
};
use fqhg::duality::{check_plancherel, dual_fqh, invariance_dimension, Fqh};
use fqhg::exactnum::vector;
use fqhg::integrals::{antipode_system, invariant_functionals, is_invariant, solve_antipode, AntipodeStatus, Hand};
use fqhg::{Algebra, DualPair, FiniteGroup, Matrix, Result, Scalar, Side};
use num_traits::{One, Zero};

/// Criteria that cannot hold as stated; they still run and print FAIL.
/// c4 at λ=1 gives φ(eᵢ) = (0, 1/2, 0, 1/2), which is not faithful.
const UNATTAINABLE: &[usize] = &[4];

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: vec![] }
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    fn run(&mut self, what: &str, r: Result<bool>) {
        match r {
            Ok(b) => self.check(b, what),
            Err(e) => self.check(false, format!("{what}: {e}")),
        }
    }
}

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric(3).unwrap()
}

fn hecke(g: &FiniteGroup, gens: &[&str]) -> HeckePair {
    let labels: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
    hecke_pair(g, &g.subgroup_from_labels(&labels).unwrap()).unwrap()
}

fn s3_hecke() -> HeckePair {
    hecke(&s3(), &["(1 2)"])
}

fn free_z2() -> Example {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    twosub_pair(&omega_free(&z2, &z2).unwrap()).unwrap()
}

fn matched_s3() -> Example {
    let g = s3();
    let h = g.subgroup_from_labels(&["(1 2)".into()]).unwrap();
    let k = g.subgroup_from_labels(&["(1 2 3)".into()]).unwrap();
    twosub_pair(&omega_from_group(&g, &h, &k).unwrap()).unwrap()
}

fn alphas() -> Vec<Scalar> {
    vec![Scalar::ratio(-3, 2), Scalar::from_int(-2), Scalar::one(), Scalar::ratio(5, 7)]
}

fn homomorphism(ex: &Example, side: Side) -> Result<bool> {
    let d = ex.coproduct(side)?;
    Ok(validate_coproduct(ex.algebra(side), &d, &ex.counit(side))?.homomorphism)
}

fn passes(ex: &Example, side: Side) -> bool {
    matches!(ex.certificate(side), Ok(Some(c)) if c.passed())
}

/// Every example the criteria build, with both sides where present.
fn all_examples() -> Vec<Example> {
    let mut v = vec![
        s3_hecke().example,
        hecke(&s3(), &["(1 2 3)"]).example,
        hecke(&FiniteGroup::cyclic(4).unwrap(), &["2"]).example,
        free_z2(),
        matched_s3(),
        group_pair(&s3()),
        groupoid2(),
        c3(),
        c4(&Scalar::zero()).unwrap(),
        c4(&Scalar::one()).unwrap(),
        m2(&Scalar::one(), &Scalar::from_int(2)).unwrap(),
    ];
    for a in alphas() {
        for kind in [AlphaKind::Vw, AlphaKind::Vy] {
            v.push(alpha_dual_pair(kind, &a).unwrap());
        }
    }
    v.push(alpha_dual_pair(AlphaKind::Xy, &Scalar::one()).unwrap());
    v
}

/// Verified structures with the pair each is dualized against.
fn verified_fqhs() -> Vec<(String, Fqh, DualPair)> {
    let mut out = vec![];
    for ex in all_examples() {
        for side in [Side::A, Side::B] {
            if passes(&ex, side) {
                let (f, p) = ex.fqh(side).unwrap();
                out.push((format!("{} {side:?}", ex.name), f, p));
            }
        }
    }
    for a in alphas() {
        let f = alpha_family(&a).unwrap();
        let p = DualPair::from_coproduct(&f.algebra, &f.coproduct, &f.counit).unwrap();
        out.push((format!("α-family {a}"), f, p));
    }
    out
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let hp = s3_hecke();
    let ex = &hp.example;
    let d = ex.coproduct(Side::A).unwrap();
    let (u, v) = (vector::unit(2, 0), vector::unit(2, 1));
    let half = Scalar::ratio(1, 2);
    let kron = fqhg::algebra::kron_vec;
    let mut du = kron(&u, &u);
    let mut dv = vector::add(&kron(&u, &v), &kron(&v, &u));
    for (x, c) in [(&mut du, &half), (&mut dv, &half)] {
        *x = vector::add(x, &vector::scale(&kron(&v, &v), c));
    }
    o.check(d.column(0) == du, "Δ(u)");
    o.check(d.column(1) == dv, "Δ(v)");
    o.check(ex.counit(Side::A) == vector::from_ints(&[1, 0]), "ε");
    o.check(ex.integral_a == vector::from_ints(&[2, 4]), "φ");
    match solve_antipode(ex.algebra(Side::A), &d, &ex.integral_a, Hand::Left) {
        Ok(r) => o.check(r.status == AntipodeStatus::Unique && r.s == Some(Matrix::identity(2)), "S = ι"),
        Err(e) => o.check(false, format!("S: {e}")),
    }
    for side in [Side::A, Side::B] {
        o.check(passes(ex, side), format!("verify_fqh {side:?}"));
    }
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let z4 = FiniteGroup::cyclic(4).unwrap();
    for (name, hp, normal) in [
        ("S3 ⟨(1 2)⟩", s3_hecke(), false),
        ("S3 A3", hecke(&s3(), &["(1 2 3)"]), true),
        ("Z4 ⟨2⟩", hecke(&z4, &["2"]), true),
    ] {
        o.run(&format!("{name} homomorphism = {normal}"), homomorphism(&hp.example, Side::A).map(|h| h == normal));
        if normal {
            o.run(&format!("{name} Δ = Δ₀"), hp.coproduct_is_restricted_group_coproduct());
        }
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    for a in alphas() {
        match alpha_family(&a) {
            Ok(f) => {
                o.run(&format!("α={a} verify"), f.certificate().map(|c| c.passed()));
                let hom = validate_coproduct(&f.algebra, &f.coproduct, &f.counit).map(|r| r.homomorphism);
                let want = a == Scalar::from_int(-2);
                o.run(&format!("α={a} homomorphism = {want}"), hom.map(|h| h == want));
            }
            Err(e) => o.check(false, format!("α={a}: {e}")),
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_fqhg"))
        .args(["build", "family", "--kind", "vw", "--alpha", "-1"])
        .output()
        .expect("binary runs");
    o.check(out.status.code() == Some(3), "α=-1 exits 3");
    o.check(String::from_utf8_lossy(&out.stderr).contains("φ cannot be faithful"), "α=-1 reason");
    for (a, want) in [(Scalar::ratio(-3, 2), true), (Scalar::one(), false)] {
        let f = alpha_family(&a).unwrap();
        o.run(&format!("α={a} positive = {want}"), is_positive(&f.algebra, &f.integral).map(|p| p == want));
    }
    o
}

struct Discrimination {
    faithful: bool,
    invariant: bool,
    status: AntipodeStatus,
}

fn discriminate(ex: &Example) -> Result<Discrimination> {
    let a = ex.algebra(Side::A);
    let d = ex.coproduct(Side::A)?;
    Ok(Discrimination {
        faithful: is_faithful(a, &ex.integral_a),
        invariant: is_invariant(a, &d, &ex.integral_a, Hand::Left)?,
        status: solve_antipode(a, &d, &ex.integral_a, Hand::Left)?.status,
    })
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();

    let g = groupoid2();
    let a = g.algebra(Side::A);
    let d = g.coproduct(Side::A).unwrap();
    o.run("groupoid2 invariance space {0}", invariant_functionals(a, &d, Hand::Left).map(|v| v.is_empty()));
    let mut arbitrary = faithful_functionals(a, 3, 50, 11);
    arbitrary.push(vector::zeros(2));
    arbitrary.push(vector::from_ints(&[1, 0]));
    for w in &arbitrary {
        o.run(
            &format!("groupoid2 solvable for φ = {w:?}"),
            solve_antipode(a, &d, w, Hand::Left).map(|r| r.status != AntipodeStatus::NoSolution),
        );
    }

    let mut expect = |name: &str, ex: &Example, faithful: bool, invariant: bool, status: AntipodeStatus| {
        match discriminate(ex) {
            Ok(r) => {
                o.check(r.faithful == faithful, format!("{name} faithful = {faithful}"));
                o.check(r.invariant == invariant, format!("{name} invariant = {invariant}"));
                o.check(r.status == status, format!("{name} antipode {status:?}, got {:?}", r.status));
            }
            Err(e) => o.check(false, format!("{name}: {e}")),
        }
    };
    expect("c3", &c3(), false, true, AntipodeStatus::NoSolution);
    let c40 = c4(&Scalar::zero()).unwrap();
    expect("c4(0)", &c40, true, true, AntipodeStatus::Unique);
    let c41 = c4(&Scalar::one()).unwrap();
    expect("c4(1)", &c41, true, true, AntipodeStatus::NoSolution);
    expect("m2(1,2)", &m2(&Scalar::one(), &Scalar::from_int(2)).unwrap(), true, true, AntipodeStatus::NoSolution);

    let s = solve_antipode(c40.algebra(Side::A), &c40.coproduct(Side::A).unwrap(), &c40.integral_a, Hand::Left);
    o.check(s.is_ok_and(|r| r.s == Some(Matrix::identity(4))), "c4(0) S = ι");
    if !o.ok {
        o.notes.push(format!("c4(1) φ = {:?}", c41.integral_a.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for (name, f, pair) in verified_fqhs() {
        match dual_fqh(&pair, &f) {
            Ok(dual) => {
                o.run(&format!("{name} dual verifies"), dual.fqh.certificate().map(|c| c.passed()));
                match dual_fqh(&dual.pair, &dual.fqh) {
                    Ok(back) => {
                        o.check(back.fqh == f, format!("{name} double dual"));
                        o.check(back.pair.pairing() == pair.pairing(), format!("{name} double dual pairing"));
                    }
                    Err(e) => o.check(false, format!("{name} double dual: {e}")),
                }
            }
            Err(e) => o.check(false, format!("{name} dual: {e}")),
        }
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let ex = s3_hecke().example;
    let psi = ex.integral_b.clone().unwrap();
    match check_plancherel(&ex.pair, &ex.integral_a, &psi, 10, 2024) {
        Ok(r) => {
            o.check(r.basis_ok, "basis");
            o.check(r.random_ok && r.samples == 10, "10 seeded samples");
            o.check(r.positivity_propagates == Some(true), "positivity propagates");
        }
        Err(e) => o.check(false, e.to_string()),
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let ex = free_z2();
    let a = ex.algebra(Side::A);
    let (u, v, p) = (vector::unit(3, 0), vector::unit(3, 1), vector::unit(3, 2));
    let z = vector::zeros(3);
    o.check(a.multiply(&p, &p) == p, "p² = p");
    o.check(a.multiply(&p, &u) == z && a.multiply(&p, &v) == z, "pu = pv = 0");
    o.check(a.multiply(&u, &u) == u, "u² = u");
    o.check(a.multiply(&u, &v) == v, "uv = v");
    o.check(a.multiply(&v, &v) == u, "v² = u");

    // e₁ = p, e₂,₃ = (u ± v)/2 on A; f₁ = p', f₂,₃ = (u' ± v')/2 on B.
    let te = Matrix::from_ratios(&[&[(0, 1), (1, 2), (1, 2)], &[(0, 1), (1, 2), (-1, 2)], &[(1, 1), (0, 1), (0, 1)]]);
    let tf = Matrix::from_ratios(&[&[(0, 1), (1, 2), (1, 2)], &[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 2), (-1, 2)]]);
    let table = te.transpose().mul(ex.pair.pairing()).mul(&tf);
    let printed = Matrix::from_ratios(&[&[(0, 1), (1, 2), (-1, 2)], &[(1, 2), (1, 4), (1, 4)], &[(-1, 2), (1, 4), (1, 4)]]);
    o.check(table == printed, "pairing table");

    let matched = matched_s3();
    for side in [Side::A, Side::B] {
        o.run(&format!("free homomorphism false {side:?}"), homomorphism(&ex, side).map(|h| !h));
        o.run(&format!("matched homomorphism true {side:?}"), homomorphism(&matched, side));
        o.check(passes(&ex, side), format!("free verify {side:?}"));
        o.check(passes(&matched, side), format!("matched verify {side:?}"));
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let examples = vec![
        s3_hecke().example,
        hecke(&s3(), &["(1 2 3)"]).example,
        hecke(&FiniteGroup::cyclic(4).unwrap(), &["2"]).example,
        free_z2(),
        matched_s3(),
    ];
    for ex in examples {
        for side in [Side::A, Side::B] {
            let closed = if side == Side::A { &ex.antipode_a } else { &ex.antipode_b };
            let Some(closed) = closed else {
                o.check(false, format!("{} {side:?} has no closed form", ex.name));
                continue;
            };
            let d = ex.coproduct(side).unwrap();
            let phi = ex.integral(side).unwrap();
            match solve_antipode(ex.algebra(side), &d, phi, Hand::Left) {
                Ok(r) => {
                    o.check(r.status == AntipodeStatus::Unique, format!("{} {side:?} unique", ex.name));
                    o.check(r.s.as_ref() == Some(closed), format!("{} {side:?} S = closed form", ex.name));
                }
                Err(e) => o.check(false, format!("{} {side:?}: {e}", ex.name)),
            }
        }
    }
    o
}

fn sigma_holds(a: &Algebra, w: &[Scalar]) -> Result<bool> {
    let sigma = modular_automorphism(a, w)?;
    let d = a.dim();
    for i in 0..d {
        let si = sigma.column(i);
        for j in 0..d {
            let lhs = apply(w, a.basis_product(i, j));
            let rhs = apply(w, &a.multiply(&a.basis_vector(j), &si));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let examples = all_examples();

    for ex in &examples {
        for side in [Side::A, Side::B] {
            let a = ex.algebra(side);
            let ws = faithful_functionals(a, 5, 200, 9);
            o.check(ws.len() == 5, format!("{} {side:?}: five faithful functionals", ex.name));
            for w in &ws {
                o.run(&format!("{} {side:?} σ", ex.name), sigma_holds(a, w));
            }

            if let Some(phi) = ex.integral(side) {
                if is_faithful(a, phi) {
                    let d = ex.coproduct(side).unwrap();
                    o.run(
                        &format!("{} {side:?} rank 𝕏", ex.name),
                        antipode_system(a, &d, phi, Hand::Left).map(|(x, _)| x.rank() == a.dim()),
                    );
                }
            }
        }
    }

    for (name, f, _) in verified_fqhs() {
        o.run(&format!("{name} invariance dimension"), invariance_dimension(&f).map(|n| n == 1));
    }

    for ex in &examples {
        let pair = &ex.pair;
        if !(pair.a().has_star() && pair.b().has_star()) || !(passes(ex, Side::A) && passes(ex, Side::B)) {
            continue;
        }
        o.run(&format!("{} actions", ex.name), pair.check_actions().map(|r| r.ok()));
        o.run(&format!("{} star pairing", ex.name), pair.check_star_pairing().map(|r| r.all()));
    }
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("S3 Hecke reproduction", criterion_1),
        ("normality criterion", criterion_2),
        ("α-family sweep", criterion_3),
        ("counterexample discrimination", criterion_4),
        ("duality and biduality", criterion_5),
        ("Plancherel", criterion_6),
        ("two-subgroup construction", criterion_7),
        ("closed-form antipodes", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut unexpected = vec![];
    for (n, (name, run)) in criteria.iter().enumerate() {
        let n = n + 1;
        let o = run();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        let detail = if o.notes.is_empty() { String::new() } else { format!(" ({})", o.notes.join("; ")) };
        println!("[{tag}] {n} {name}{detail}");
        if o.ok == UNATTAINABLE.contains(&n) {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
