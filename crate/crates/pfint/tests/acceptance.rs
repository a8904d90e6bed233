//! Acceptance suite: every criterion runs at desk scale with its tolerance
//! pinned in code and prints one pass/fail line (`cargo test --test
//! acceptance -- --nocapture` to watch them).

use std::time::Instant;

use num_complex::Complex64;
use num_rational::BigRational;

use pfint::matrix::{even_subsets, IndexSubset, SkewMatrix};
use pfint::measure::{
    de_bruijn_sides, gauss_hermite_plane, ginibre_kernel, BasisTable, KernelInstance, MeasureSpace,
};
use pfint::minorsum::{
    corollary1_chain, corollary1_sides, lemma1_sides, lemma2_sides, lemma3_sides,
};
use pfint::pfaffian::{pfaffian, pfaffian_oracle};
use pfint::random::{
    random_invertible_skew, random_kernel_instance, random_matrix, random_nonzero_rationals,
    random_rationals, random_skew,
};
use pfint::scalar::{rat_int, sign_pow, Scalar};
use pfint::symfun::{
    elementary_from_powersums, elementary_newton, generating_series_check, PowerSums,
};
use pfint::theorem::{
    fredholm_det_identity, fredholm_scalar_particular_case, remark13_equivalence, theorem1_verify,
    theorem2_sides, Tolerance,
};

struct Criterion {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        let elapsed = self.start.elapsed().as_secs_f64();
        let verdict = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "acceptance {}: {verdict} ({} checks, {elapsed:.2}s)",
            self.name, self.checks
        );
        if !self.failures.is_empty() {
            panic!(
                "{} failed {} of {} checks; first: {}",
                self.name,
                self.failures.len(),
                self.checks,
                self.failures[0]
            );
        }
    }
}

#[test]
fn criterion_1_pfaffian_oracle_equivalence() {
    let mut c = Criterion::new("1 pfaffian-oracle");
    let dims = [2usize, 4, 6, 8, 10];
    for t in 0..200 {
        let dim = dims[t % dims.len()];
        let seed = 10_000 + t as u64;
        let a = random_skew(dim, seed, 9);
        let fast = pfaffian(&a).unwrap();
        let oracle = pfaffian_oracle(&a).unwrap();
        c.check(fast == oracle, || {
            format!("dim {dim} seed {seed}: fast {fast} vs oracle {oracle}")
        });
        let det = a.determinant().unwrap();
        c.check(fast.clone() * fast.clone() == det, || {
            format!("dim {dim} seed {seed}: pf^2 {} vs det {det}", fast.clone() * fast)
        });
    }
    c.finish();
}

#[test]
fn criterion_2_symmetric_function_triple_agreement() {
    let mut c = Criterion::new("2 symfun-triple");
    for t in 0..100 {
        let seed = 20_000 + t as u64;
        let p = PowerSums::new(random_rationals(10, seed, 9, 4));
        let (series_lhs, series_rhs) = generating_series_check(&p, 10).unwrap();
        c.check(series_lhs == series_rhs, || {
            format!("seed {seed}: series sides differ")
        });
        for l in 0..=10 {
            let partition = elementary_from_powersums(l, &p).unwrap();
            let newton = elementary_newton(l, &p).unwrap();
            let coeff = series_rhs.coeff(l);
            c.check(partition == newton && partition == coeff, || {
                format!("seed {seed} l {l}: {partition} / {newton} / {coeff}")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_3_minor_summation_formulas() {
    let mut c = Criterion::new("3 minor-summation");
    let sizes = [2usize, 4, 6, 8];
    let m_values = [0usize, 2, 4];
    for t in 0..100 {
        let n = sizes[t % sizes.len()];
        let seed = 30_000 + t as u64 * 97;

        let m = m_values[t % m_values.len()].min(n);
        let a1 = random_matrix(m, n, seed + 1, 5);
        let b1 = random_skew(n, seed + 2, 5);
        let (lhs, rhs) = lemma1_sides(&a1, &b1).unwrap();
        c.check(lhs == rhs, || format!("lemma1 n {n} M {m} seed {seed}"));

        let a2 = random_invertible_skew(n, seed + 3, 5).unwrap();
        let subsets = even_subsets(n).unwrap();
        let idx = &subsets[t % subsets.len()];
        let (lhs, rhs) = lemma2_sides(&a2, idx).unwrap();
        c.check(lhs == rhs, || {
            format!("lemma2 n {n} seed {seed} I {:?}", idx.as_slice())
        });

        let a3 = random_skew(n, seed + 4, 5);
        let b3 = random_skew(n, seed + 5, 5);
        let (lhs, rhs) = lemma3_sides(&a3, &b3).unwrap();
        c.check(lhs == rhs, || format!("lemma3 n {n} seed {seed}"));

        let a4 = random_invertible_skew(n, seed + 6, 5).unwrap();
        let b4 = random_skew(n, seed + 7, 5);
        let (lhs, rhs) = corollary1_sides(&a4, &b4).unwrap();
        c.check(lhs == rhs, || format!("corollary1 n {n} seed {seed}"));
        let chain = corollary1_chain(&a4, &b4).unwrap();
        c.check(
            chain.via_addition == rhs
                && chain.via_transpose_absorbed == rhs
                && chain.via_complement == lhs,
            || format!("corollary1 chain n {n} seed {seed}"),
        );
    }

    // sign-convention canary on the fixed 2x2 instance: the identity needs
    // the 1-based element sum; the neighbouring misreading of |I| as the
    // subset cardinality flips the sign and must break the equality. A
    // 0-based element sum differs from the 1-based one by the cardinality,
    // which is even on every nonvanishing subset, so it is checked to
    // coincide rather than to fail.
    let a = SkewMatrix::<BigRational>::symplectic(2).unwrap();
    let full = IndexSubset::full(2);
    let (lhs, rhs) = lemma2_sides(&a, &full).unwrap();
    c.check(lhs == rhs && lhs == rat_int(-1), || {
        format!("canary baseline: {lhs} vs {rhs}")
    });
    let comp = full.complement(2).unwrap();
    let pf_comp = pfaffian(&a.principal_submatrix(&comp).unwrap()).unwrap();
    let cardinality_rhs = sign_pow::<BigRational>(full.len()) * pf_comp.clone();
    c.check(lhs != cardinality_rhs, || {
        "canary: cardinality sign failed to break the identity".into()
    });
    let zero_based_rhs =
        sign_pow::<BigRational>(full.element_sum() - full.len()) * pf_comp;
    c.check(lhs == zero_based_rhs, || {
        "canary: 0-based element sum unexpectedly diverged on an even subset".into()
    });

    c.finish();
}

#[test]
fn criterion_4_de_bruijn_formula() {
    let mut c = Criterion::new("4 de-bruijn");
    let point_counts = [2usize, 3, 4];
    for t in 0..50 {
        let points = point_counts[t % point_counts.len()];
        for l in 1..=3 {
            let seed = 40_000 + (t * 3 + l) as u64 * 11;
            let n = 2 * l;
            let plus = random_matrix(points, n, seed + 1, 4);
            let minus = random_matrix(points, n, seed + 2, 4);
            let basis = BasisTable::new(plus, minus).unwrap();
            let space = MeasureSpace::atoms(random_nonzero_rationals(points, seed + 3, 3, 2));
            let k = KernelInstance::new(SkewMatrix::zero(n), basis, space).unwrap();
            let (lhs, rhs) = de_bruijn_sides(&k, l).unwrap();
            c.check(lhs == rhs, || {
                format!("l {l} points {points} seed {seed}: {lhs} vs {rhs}")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_5_theorem1_exact() {
    let mut c = Criterion::new("5 theorem1-exact");
    let tol = Tolerance::default();
    let dims = [2usize, 4, 6];
    let point_counts = [2usize, 3, 4];
    for t in 0..50 {
        let n = dims[t % dims.len()];
        let points = point_counts[t % point_counts.len()];
        let seed = 50_000 + t as u64 * 131;
        let k = random_kernel_instance(n, points, seed, 3, false).unwrap();
        let rows = theorem1_verify(&k, 3, &tol).unwrap();
        for row in &rows {
            c.check(row.lhs == row.rhs, || {
                format!("n {n} points {points} seed {seed} l {}: {} vs {}", row.ell, row.lhs, row.rhs)
            });
            if 2 * row.ell > n {
                c.check(Scalar::is_zero(&row.lhs) && Scalar::is_zero(&row.rhs), || {
                    format!("rank vanishing violated at n {n} l {}", row.ell)
                });
            }
        }
        // degenerate-coupling padding must not change any verification row
        let padded = k.padded().unwrap();
        let padded_rows = theorem1_verify(&padded, 3, &tol).unwrap();
        for (a, b) in rows.iter().zip(&padded_rows) {
            c.check(a.lhs == b.lhs && a.rhs == b.rhs, || {
                format!("padding changed l {} at n {n} seed {seed}", a.ell)
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_6_theorem2_exact() {
    let mut c = Criterion::new("6 theorem2-exact");
    let tol = Tolerance::default();
    let dims = [2usize, 4, 6];
    let point_counts = [2usize, 3, 4];
    for t in 0..50 {
        let n = dims[t % dims.len()];
        let points = point_counts[t % point_counts.len()];
        let seed = 60_000 + t as u64 * 173;
        let k = random_kernel_instance(n, points, seed, 3, true).unwrap();
        let (lhs, rhs) = theorem2_sides(&k).unwrap();
        c.check(lhs == rhs, || {
            format!("n {n} points {points} seed {seed}: {lhs} vs {rhs}")
        });
        let report = remark13_equivalence(&k, &tol).unwrap();
        c.check(
            report.exp_route == report.pf_route && report.sqrt_route == report.pf_route,
            || format!("three-way split at n {n} seed {seed}"),
        );
        c.check(report.pf_route == rhs, || {
            format!("routes disagree with the polynomial identity at seed {seed}")
        });
    }
    c.finish();
}

#[test]
fn criterion_7_fredholm_identities() {
    let mut c = Criterion::new("7 fredholm");
    let dims = [2usize, 4, 6];
    for t in 0..50 {
        let n = dims[t % dims.len()];
        let seed = 60_000 + t as u64 * 173; // same instance family as criterion 6
        let points = [2usize, 3, 4][t % 3];
        let k = random_kernel_instance(n, points, seed, 3, true).unwrap();
        let (square, det) = fredholm_det_identity(&k).unwrap();
        c.check(square == det, || {
            format!("n {n} seed {seed}: {square} vs {det}")
        });
    }
    for t in 0..20 {
        let seed = 70_000 + t as u64 * 59;
        let kv = random_matrix(3, 3, seed + 1, 4);
        let space = MeasureSpace::atoms(random_nonzero_rationals(3, seed + 2, 3, 2));
        let eps1 = random_skew(3, seed + 3, 4);
        let eps2 = random_skew(3, seed + 4, 4);
        let (pf1, det1) = fredholm_scalar_particular_case(&kv, &eps1, &space).unwrap();
        let (pf2, det2) = fredholm_scalar_particular_case(&kv, &eps2, &space).unwrap();
        c.check(pf1 == det1 && pf2 == det2, || {
            format!("scalar case seed {seed}: {pf1}/{det1}, {pf2}/{det2}")
        });
        c.check(pf1 == pf2, || {
            format!("eps dependence at seed {seed}: {pf1} vs {pf2}")
        });
    }
    c.finish();
}

#[test]
fn criterion_8_complex_plane_ginibre_run() {
    let mut c = Criterion::new("8 ginibre-complex-plane");
    let space = gauss_hermite_plane(24).unwrap();
    let pi = std::f64::consts::PI;

    let moment_tol = Tolerance {
        rel: 1e-10,
        abs: 1e-12,
    };
    let norm = space.integrate(|_| Complex64::new(1.0, 0.0));
    c.check(
        moment_tol.check(&norm, &Complex64::new(pi, 0.0)),
        || format!("normalization {norm} vs pi"),
    );
    let zz = space.integrate(|i| {
        let z = space.point(i);
        z * z.conj()
    });
    c.check(
        moment_tol.check(&zz, &Complex64::new(pi, 0.0)),
        || format!("second moment {zz} vs pi"),
    );

    let tol = Tolerance {
        rel: 1e-8,
        abs: 1e-10,
    };
    let k = ginibre_kernel(4, SkewMatrix::symplectic(4).unwrap(), space).unwrap();
    let rows = theorem1_verify(&k, 2, &tol).unwrap();
    for row in rows.iter().filter(|r| r.ell >= 1) {
        c.check(row.pass, || {
            format!("l {}: {} vs {}", row.ell, row.lhs, row.rhs)
        });
    }
    c.finish();
}
