//! Suite implementations: each subcommand produces a row list; the driver
//! renders it and derives the exit code.

use anyhow::{bail, Context};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use pfint::json::AnySpace;
use pfint::matrix::{even_subsets, Matrix, SkewMatrix};
use pfint::measure::{gauss_hermite_plane, ginibre_kernel, KernelInstance, MeasureSpace};
use pfint::minorsum::{
    corollary1_chain, corollary1_sides, lemma1_sides, lemma2_sides, lemma3_sides,
};
use pfint::random::{
    random_invertible_skew, random_kernel_instance, random_matrix, random_nonzero_rationals,
    random_rationals, random_skew,
};
use pfint::scalar::Scalar;
use pfint::symfun::{elementary_from_powersums, elementary_newton, generating_series_check, PowerSums};
use pfint::theorem::{
    fredholm_det_identity, fredholm_scalar_particular_case, remark13_equivalence, theorem1_verify,
    theorem2_rhs_transposed_form, theorem2_sides, Tolerance,
};
use pfint::measure::BasisTable;

use crate::report::Row;

/// Per-trial seeds are spaced by a large odd stride so the sub-seeds drawn
/// inside generators never collide between trials.
fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_add((t as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn diff_string<S: Scalar>(lhs: &S, rhs: &S) -> String {
    (lhs.clone() - rhs.clone()).magnitude().to_string()
}

#[allow(clippy::too_many_arguments)]
fn scalar_row<S: Scalar>(
    check: &'static str,
    seed: Option<u64>,
    n: Option<usize>,
    points: Option<usize>,
    index: Option<usize>,
    lhs: &S,
    rhs: &S,
    pass: bool,
) -> Row {
    Row {
        check,
        seed,
        n,
        points,
        index,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        abs_diff: diff_string(lhs, rhs),
        pass,
    }
}

fn exact_row<S: Scalar>(
    check: &'static str,
    seed: u64,
    n: usize,
    index: Option<usize>,
    lhs: &S,
    rhs: &S,
) -> Row {
    scalar_row(check, Some(seed), Some(n), None, index, lhs, rhs, lhs == rhs)
}

/// `symfun`: partition sum vs Newton recursion vs generating-series
/// coefficient, per degree, on random rational power sums.
pub fn symfun(lmax: usize, trials: usize, seed: u64) -> anyhow::Result<Vec<Row>> {
    let mut rows = Vec::new();
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let p = PowerSums::new(random_rationals(lmax, ts, 9, 4));
        let (series_lhs, series_rhs) = generating_series_check(&p, lmax)?;
        for l in 0..=lmax {
            let partition = elementary_from_powersums(l, &p)?;
            let newton = elementary_newton(l, &p)?;
            rows.push(exact_row("symfun-newton", ts, l, Some(l), &partition, &newton));
            let series_coeff = series_rhs.coeff(l);
            rows.push(exact_row("symfun-series", ts, l, Some(l), &partition, &series_coeff));
            debug_assert_eq!(series_lhs.coeff(l), partition);
        }
    }
    Ok(rows)
}

/// `verify-lemmas`: one row per lemma per trial, plus the corollary proof
/// chain, on random rational instances of size `n`.
pub fn verify_lemmas(n: usize, trials: usize, seed: u64) -> anyhow::Result<Vec<Row>> {
    if n == 0 || !n.is_multiple_of(2) {
        bail!("--n must be a positive even dimension, got {n}");
    }
    let subsets = even_subsets(n)?;
    let mut rows = Vec::new();
    for t in 0..trials {
        let ts = trial_seed(seed, t);

        let m = [0usize, 2, 4][t % 3].min(n);
        let a = random_matrix(m, n, ts.wrapping_add(10), 5);
        let b = random_skew(n, ts.wrapping_add(11), 5);
        let (lhs, rhs) = lemma1_sides(&a, &b)?;
        push_or_dump(&mut rows, exact_row("lemma1", ts, n, Some(m), &lhs, &rhs), || {
            format!("lemma1 instance (M = {m}):\nA =\n{a}B =\n{b}")
        });

        let inv = random_invertible_skew(n, ts.wrapping_add(20), 5)?;
        let subset = &subsets[t % subsets.len()];
        let (lhs, rhs) = lemma2_sides(&inv, subset)?;
        push_or_dump(
            &mut rows,
            exact_row("lemma2", ts, n, Some(subset.len()), &lhs, &rhs),
            || format!("lemma2 instance, I = {:?}:\nA =\n{inv}", subset.as_slice()),
        );

        let a3 = random_skew(n, ts.wrapping_add(30), 5);
        let b3 = random_skew(n, ts.wrapping_add(31), 5);
        let (lhs, rhs) = lemma3_sides(&a3, &b3)?;
        push_or_dump(&mut rows, exact_row("lemma3", ts, n, None, &lhs, &rhs), || {
            format!("lemma3 instance:\nA =\n{a3}B =\n{b3}")
        });

        let ac = random_invertible_skew(n, ts.wrapping_add(40), 5)?;
        let bc = random_skew(n, ts.wrapping_add(41), 5);
        let (lhs, rhs) = corollary1_sides(&ac, &bc)?;
        push_or_dump(&mut rows, exact_row("corollary1", ts, n, None, &lhs, &rhs), || {
            format!("corollary1 instance:\nA =\n{ac}B =\n{bc}")
        });
        let chain = corollary1_chain(&ac, &bc)?;
        let chain_pass = chain.via_addition == rhs
            && chain.via_transpose_absorbed == rhs
            && chain.via_complement == lhs;
        rows.push(Row {
            check: "corollary1-chain",
            seed: Some(ts),
            n: Some(n),
            points: None,
            index: None,
            lhs: chain.via_addition.to_string(),
            rhs: chain.via_complement.to_string(),
            abs_diff: diff_string(&chain.via_addition, &chain.via_complement),
            pass: chain_pass,
        });
    }
    Ok(rows)
}

fn push_or_dump(rows: &mut Vec<Row>, row: Row, dump: impl FnOnce() -> String) {
    if !row.pass {
        eprintln!(
            "FAIL {} (seed {}): {}",
            row.check,
            row.seed.unwrap_or_default(),
            dump()
        );
    }
    rows.push(row);
}

/// `de-bruijn`: integral of the interleaved determinant against the
/// Pfaffian of the transposed moment matrix, for each fold count.
pub fn de_bruijn(points: usize, lmax: usize, trials: usize, seed: u64) -> anyhow::Result<Vec<Row>> {
    let mut rows = Vec::new();
    for t in 0..trials {
        for l in 1..=lmax {
            let ts = trial_seed(seed, t * lmax + l);
            let n = 2 * l;
            let plus = random_matrix(points, n, ts.wrapping_add(1), 4);
            let minus = random_matrix(points, n, ts.wrapping_add(2), 4);
            let basis = BasisTable::new(plus, minus)?;
            let space = MeasureSpace::atoms(random_nonzero_rationals(points, ts.wrapping_add(3), 3, 2));
            let k = KernelInstance::new(SkewMatrix::zero(n), basis, space)?;
            let (lhs, rhs) = pfint::measure::de_bruijn_sides(&k, l)?;
            push_or_dump(
                &mut rows,
                Row {
                    check: "de-bruijn",
                    seed: Some(ts),
                    n: Some(n),
                    points: Some(points),
                    index: Some(l),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    abs_diff: diff_string(&lhs, &rhs),
                    pass: lhs == rhs,
                },
                || format!("de Bruijn instance:\nplus =\n{}minus =\n{}", k.basis().plus(), k.basis().minus()),
            );
        }
    }
    Ok(rows)
}

/// Scalar mode for the randomized theorem suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    Rational,
    ComplexFloat,
}

fn to_complex_instance(k: &KernelInstance<BigRational>) -> anyhow::Result<KernelInstance<Complex64>> {
    let conv = |m: &Matrix<BigRational>| {
        Matrix::from_fn(m.rows(), m.cols(), |i, j| {
            Complex64::new(m.get(i, j).to_f64().unwrap_or(f64::NAN), 0.0)
        })
    };
    let mu = SkewMatrix::new(conv(k.mu().matrix()))?;
    let basis = BasisTable::new(conv(k.basis().plus()), conv(k.basis().minus()))?;
    let weights = k
        .space()
        .weights()
        .iter()
        .map(|w| Complex64::new(w.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    let points = k
        .space()
        .points()
        .iter()
        .map(|p| Complex64::new(p.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    Ok(KernelInstance::new(mu, basis, MeasureSpace::new(points, weights)?)?)
}

fn dump_instance(k: &KernelInstance<BigRational>) -> String {
    let weights: Vec<String> = k.space().weights().iter().map(|w| w.to_string()).collect();
    format!(
        "instance:\nmu =\n{}plus =\n{}minus =\n{}weights = [{}]",
        k.mu(),
        k.basis().plus(),
        k.basis().minus(),
        weights.join(", ")
    )
}

/// `verify-theorem1`: tuple-sum moments against the trace side, per degree.
pub fn theorem1(
    n: usize,
    points: usize,
    lmax: usize,
    trials: usize,
    seed: u64,
    mode: ScalarMode,
    tol: Tolerance,
) -> anyhow::Result<Vec<Row>> {
    let mut rows = Vec::new();
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let k = random_kernel_instance(n, points, ts, 3, false)?;
        match mode {
            ScalarMode::Rational => {
                let report = theorem1_verify(&k, lmax, &tol)?;
                for vr in report {
                    push_or_dump(
                        &mut rows,
                        scalar_row(
                            "theorem1",
                            Some(ts),
                            Some(n),
                            Some(points),
                            Some(vr.ell),
                            &vr.lhs,
                            &vr.rhs,
                            vr.pass,
                        ),
                        || dump_instance(&k),
                    );
                }
            }
            ScalarMode::ComplexFloat => {
                let kc = to_complex_instance(&k)?;
                let report = theorem1_verify(&kc, lmax, &tol)?;
                for vr in report {
                    push_or_dump(
                        &mut rows,
                        scalar_row(
                            "theorem1",
                            Some(ts),
                            Some(n),
                            Some(points),
                            Some(vr.ell),
                            &vr.lhs,
                            &vr.rhs,
                            vr.pass,
                        ),
                        || dump_instance(&k),
                    );
                }
            }
        }
    }
    Ok(rows)
}

/// `verify-theorem2`: coefficient-wise polynomial identity, the transposed
/// moment-matrix form, and the three-route equivalence.
pub fn theorem2(n: usize, points: usize, trials: usize, seed: u64) -> anyhow::Result<Vec<Row>> {
    if n == 0 || !n.is_multiple_of(2) {
        bail!("--n must be a positive even dimension, got {n}");
    }
    let tol = Tolerance::default();
    let mut rows = Vec::new();
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let k = random_kernel_instance(n, points, ts, 3, true)?;
        let (lhs, rhs) = theorem2_sides(&k)?;
        for d in 0..=n / 2 {
            let (cl, cr) = (lhs.coeff(d), rhs.coeff(d));
            push_or_dump(
                &mut rows,
                scalar_row(
                    "theorem2",
                    Some(ts),
                    Some(n),
                    Some(points),
                    Some(d),
                    &cl,
                    &cr,
                    cl == cr,
                ),
                || dump_instance(&k),
            );
        }
        let gt = theorem2_rhs_transposed_form(&k)?;
        rows.push(Row {
            check: "theorem2-gt",
            seed: Some(ts),
            n: Some(n),
            points: Some(points),
            index: None,
            lhs: rhs.to_string(),
            rhs: gt.to_string(),
            abs_diff: String::new(),
            pass: rhs == gt,
        });
        let report = remark13_equivalence(&k, &tol)?;
        for d in 0..=n / 2 {
            let (e, s, p) = (
                report.exp_route.coeff(d),
                report.sqrt_route.coeff(d),
                report.pf_route.coeff(d),
            );
            push_or_dump(
                &mut rows,
                scalar_row(
                    "remark13-exp",
                    Some(ts),
                    Some(n),
                    Some(points),
                    Some(d),
                    &e,
                    &p,
                    e == p,
                ),
                || dump_instance(&k),
            );
            push_or_dump(
                &mut rows,
                scalar_row(
                    "remark13-sqrt",
                    Some(ts),
                    Some(n),
                    Some(points),
                    Some(d),
                    &s,
                    &p,
                    s == p,
                ),
                || dump_instance(&k),
            );
        }
    }
    Ok(rows)
}

/// `fredholm`: the squared series against the reduced determinant, and the
/// scalar-kernel particular case with two choices of the antisymmetric
/// auxiliary kernel.
pub fn fredholm(n: usize, points: usize, trials: usize, seed: u64) -> anyhow::Result<Vec<Row>> {
    let mut rows = Vec::new();
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let k = random_kernel_instance(n, points, ts, 3, false)?;
        let (square, det) = fredholm_det_identity(&k)?;
        let top = square.degree().max(det.degree()).unwrap_or(0);
        for d in 0..=top {
            let (cl, cr) = (square.coeff(d), det.coeff(d));
            push_or_dump(
                &mut rows,
                scalar_row(
                    "fredholm-square",
                    Some(ts),
                    Some(n),
                    Some(points),
                    Some(d),
                    &cl,
                    &cr,
                    cl == cr,
                ),
                || dump_instance(&k),
            );
        }

        let kv = random_matrix(points, points, ts.wrapping_add(100), 4);
        let space = MeasureSpace::atoms(random_nonzero_rationals(points, ts.wrapping_add(101), 3, 2));
        let eps1 = random_skew(points, ts.wrapping_add(102), 4);
        let eps2 = random_skew(points, ts.wrapping_add(103), 4);
        let (pf1, det1) = fredholm_scalar_particular_case(&kv, &eps1, &space)?;
        let (pf2, det2) = fredholm_scalar_particular_case(&kv, &eps2, &space)?;
        rows.push(exact_row("fredholm-scalar", ts, points, Some(1), &pf1, &det1));
        rows.push(exact_row("fredholm-scalar", ts, points, Some(2), &pf2, &det2));
        rows.push(exact_row("fredholm-scalar-eps", ts, points, None, &pf1, &pf2));
    }
    Ok(rows)
}

/// `ginibre-demo`: the complex-plane instantiation with monic monomials on
/// the Gauss-Hermite tensor grid (or a caller-supplied measure).
pub fn ginibre_demo(
    n: usize,
    nodes: usize,
    lmax: usize,
    custom_space: Option<AnySpace>,
    tol: Tolerance,
) -> anyhow::Result<Vec<Row>> {
    if n == 0 || !n.is_multiple_of(2) {
        bail!("--n must be a positive even dimension, got {n}");
    }
    let mut rows = Vec::new();
    let (space, is_gaussian) = match custom_space {
        None => (gauss_hermite_plane(nodes)?, true),
        Some(AnySpace::Complex(sp)) => (sp, false),
        Some(AnySpace::Rational(_)) => {
            bail!("the complex-plane demo needs complex points; the supplied measure is rational")
        }
    };

    if is_gaussian {
        let pi = std::f64::consts::PI;
        let moment_tol = Tolerance {
            rel: 1e-10,
            abs: 1e-12,
        };
        let one = Complex64::new(1.0, 0.0);
        let pi_c = Complex64::new(pi, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let norm = space.integrate(|_| one);
        let zz = space.integrate(|i| {
            let z = space.point(i);
            z * z.conj()
        });
        let z2 = space.integrate(|i| {
            let z = space.point(i);
            z * z
        });
        for (name, value, expect) in [
            ("moment-norm", norm, pi_c),
            ("moment-zz", zz, pi_c),
            ("moment-z2", z2, zero),
        ] {
            rows.push(scalar_row(
                name,
                None,
                Some(n),
                Some(space.len()),
                None,
                &value,
                &expect,
                moment_tol.check(&value, &expect),
            ));
        }
    }

    let points = space.len();
    let mu = SkewMatrix::symplectic(n)?;
    let k = ginibre_kernel(n, mu, space)?;
    let report = theorem1_verify(&k, lmax, &tol)?;
    let mut max_err: f64 = 0.0;
    for vr in &report {
        // relative against the larger magnitude, floored at unit scale so
        // near-zero rows report their absolute discrepancy
        let denom = vr.lhs.magnitude().max(vr.rhs.magnitude()).max(1.0);
        if vr.ell > 0 {
            max_err = max_err.max((vr.lhs - vr.rhs).magnitude() / denom);
        }
        rows.push(scalar_row(
            "ginibre-theorem1",
            None,
            Some(n),
            Some(points),
            Some(vr.ell),
            &vr.lhs,
            &vr.rhs,
            vr.pass,
        ));
    }
    eprintln!(
        "ginibre-demo: max error {max_err:e} over l = 1..={lmax} (tolerance rel {:e}, abs {:e})",
        tol.rel, tol.abs
    );
    Ok(rows)
}

/// `pf`: evaluate the Pfaffian of a matrix document.
pub fn pf_of_file(path: &std::path::Path) -> anyhow::Result<String> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let any = pfint::json::matrix_from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    match any {
        pfint::json::AnyMatrix::Rational(m) => {
            let skew = SkewMatrix::new(m).context("matrix is not antisymmetric")?;
            Ok(pfint::pfaffian(&skew)?.to_string())
        }
        pfint::json::AnyMatrix::Complex(m) => {
            let skew = SkewMatrix::new(m).context("matrix is not antisymmetric")?;
            Ok(pfint::pfaffian(&skew)?.to_string())
        }
    }
}
