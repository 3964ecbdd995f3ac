//! Property suites over all degrees `1..=n`, producing JSON-serializable
//! reports. A suite passes iff every check passes; informational sections
//! never affect the verdict.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hall_littlewood::{b_mu, hl_h, hl_p, hook_formula, kostka_matrix, kostka_matrix_by, lift_t, KostkaRoute};
use crate::macdonald::{c_qt, qt_kostka_matrix, spin_qt_kostka_matrix, SpinQtRoute};
use crate::partitions::{partitions_of, strict_partitions_of, Partition, StrictPartition};
use crate::rings::{q_int, PolyT, RatQT, Q};
use crate::spin::{
    branching, graded_multiplicity_c, half_spin_factor, s_det, spin_hl_h, spin_kostka_col_closed, spin_kostka_matrix,
    spin_kostka_matrix_by, spin_kostka_row_closed, spin_qweight, spin_relation_checks, symmetry_scan, SpinRoute,
};
use crate::symfunc::{bilinear_mm, kernel_mm, q_fun_partition, schur_q, sym_eq, to_schur_q_basis, Basis, SymFunc};
use crate::tableaux::count_marked_shifted;

const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    /// Spin Kostka properties (1)–(6).
    #[serde(rename = "A")]
    SpinKostka,
    /// Spin Hall-Littlewood properties (1)–(6).
    #[serde(rename = "4.3")]
    SpinHallLittlewood,
    /// Independent routes for `K(t)` and `K⁻(t)` agree.
    #[serde(rename = "oracles")]
    Oracles,
    /// Kostka-Foulkes properties (1)–(6) plus the P/H relation and Cauchy identity.
    #[serde(rename = "classical")]
    Classical,
    /// `C⁻_{ξμ}(t) ∈ ℤ_{≥0}[t]`.
    #[serde(rename = "B1")]
    GradedMultiplicity,
    /// The q,t layer.
    #[serde(rename = "qt")]
    QtLayer,
    /// The spin analogue of the P/H relation fails.
    #[serde(rename = "negative-4.4")]
    NegativeResult,
    /// Informational palindromicity scan of `K⁻_{ξμ}(t)`.
    #[serde(rename = "symmetry")]
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::SpinKostka,
        Suite::SpinHallLittlewood,
        Suite::Oracles,
        Suite::Classical,
        Suite::GradedMultiplicity,
        Suite::QtLayer,
        Suite::NegativeResult,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SpinKostka => "A",
            Suite::SpinHallLittlewood => "4.3",
            Suite::Oracles => "oracles",
            Suite::Classical => "classical",
            Suite::GradedMultiplicity => "B1",
            Suite::QtLayer => "qt",
            Suite::NegativeResult => "negative-4.4",
            Suite::Symmetry => "symmetry",
        }
    }

    /// Largest degree the suite accepts.
    pub fn max_degree(self) -> usize {
        match self {
            Suite::QtLayer => 5,
            Suite::SpinHallLittlewood => 6,
            _ => 8,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One property, evaluated over many cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failed: usize,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.passed = false;
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(detail());
            }
        }
    }

    /// Records an outcome that may be an error.
    pub fn record_result<T>(&mut self, r: Result<T>, ok: impl FnOnce(&T) -> bool, detail: impl FnOnce() -> String) {
        match r {
            Ok(v) => {
                let good = ok(&v);
                self.record(good, detail)
            }
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Informational payload; never affects `passed`.
    pub info: Value,
}

impl Report {
    fn new(suite: Suite, n: usize, checks: Vec<Check>, info: Value) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Report {
            suite,
            n,
            passed,
            checks,
            info,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_suite(suite: Suite, n: usize) -> Result<Report> {
    if n == 0 || n > suite.max_degree() {
        return Err(Error::Parse(format!(
            "suite {suite} accepts 1 <= n <= {}, got {n}",
            suite.max_degree()
        )));
    }
    Ok(match suite {
        Suite::SpinKostka => Report::new(suite, n, spin_kostka_checks(n), Value::Null),
        Suite::SpinHallLittlewood => Report::new(suite, n, spin_hall_littlewood_checks(n, n.min(5)), Value::Null),
        Suite::Oracles => {
            let mut checks = classical_oracle_checks(n);
            checks.extend(spin_oracle_checks(n));
            Report::new(suite, n, checks, Value::Null)
        }
        Suite::Classical => Report::new(suite, n, classical_checks(n, n.min(6), n.min(5)), Value::Null),
        Suite::GradedMultiplicity => Report::new(suite, n, graded_multiplicity_checks(n), Value::Null),
        Suite::QtLayer => Report::new(suite, n, qt_checks(n), Value::Null),
        Suite::NegativeResult => negative_result_report(n)?,
        Suite::Symmetry => symmetry_report(n),
    })
}

fn two_pow(e: usize) -> Q {
    Q::from_integer(num_bigint::BigInt::from(1u64) << e)
}

fn dominates(a: &Partition, b: &Partition) -> bool {
    a.dominates(b).expect("same size")
}

/// Spin Kostka properties (1)–(6) and the branching invariants.
pub fn spin_kostka_checks(n: usize) -> Vec<Check> {
    let mut branch = Check::new("branching: g nonnegative integral, dominance-triangular, unit diagonal");
    let mut c1 = Check::new("(1) zero unless xi >= mu; K-[xi,xi] = 2^l");
    let mut c2 = Check::new("(2) degree = n(mu) - n(xi)");
    let mut c3 = Check::new("(3) 2^-l K- in Z+[t]");
    let mut c4 = Check::new("(4) K-(1) = marked shifted tableau count; K-(-1) = 2^l delta");
    let mut c5 = Check::new("(5) K-[(n),mu] = t^n(mu) prod (1 + t^(1-i))");
    let mut c6 = Check::new("(6) K-[xi,(1^n)] = shifted hook-content formula");
    for m in 1..=n {
        for xi in strict_partitions_of(m) {
            branch.record_result(branching(&xi), |_| true, || format!("{xi}"));
        }
        let k = spin_kostka_matrix(m);
        for (xi, row) in k.rows.iter().zip(&k.entries) {
            let l = xi.len();
            for (mu, e) in k.cols.list.iter().zip(row) {
                let case = || format!("xi={xi} mu={mu}: {}", e.to_compact_string());
                let lam = xi.as_partition();
                let ok1 = if lam == mu {
                    *e == PolyT::constant(two_pow(l))
                } else {
                    dominates(lam, mu) || e.is_zero()
                };
                c1.record(ok1, case);
                if !e.is_zero() {
                    let want = mu.n_stat() as i64 - lam.n_stat() as i64;
                    c2.record(e.degree().map(i64::from) == Some(want), case);
                }
                c3.record(e.scale(&(q_int(1) / two_pow(l))).is_nonneg_integral(), case);
                let count = count_marked_shifted(xi, mu).expect("same size");
                let at_minus = if lam == mu { two_pow(l) } else { q_int(0) };
                c4.record(
                    e.evaluate(&q_int(1)) == q_int(count as i64) && e.evaluate(&q_int(-1)) == at_minus,
                    case,
                );
                if xi.len() == 1 {
                    c5.record_result(spin_kostka_row_closed(mu), |v| v == e, case);
                }
                if mu.len() == m {
                    c6.record_result(spin_kostka_col_closed(xi), |v| v == e, case);
                }
            }
        }
    }
    vec![branch, c1, c2, c3, c4, c5, c6]
}

/// Charge, linear-solve and Kostant routes agree on `K_{λμ}(t)`.
pub fn classical_oracle_checks(n: usize) -> Vec<Check> {
    let mut c = Check::new("K(t): charge = linear_solve = kostant");
    for m in 1..=n {
        let solve = kostka_matrix(m);
        let charge = kostka_matrix_by(m, KostkaRoute::Charge);
        let kostant = kostka_matrix_by(m, KostkaRoute::Kostant);
        match (charge, kostant) {
            (Ok(a), Ok(b)) => {
                for (i, lam) in solve.index.list.iter().enumerate() {
                    for (j, mu) in solve.index.list.iter().enumerate() {
                        let s = &solve.entries[i][j];
                        c.record(&a.entries[i][j] == s && &b.entries[i][j] == s, || {
                            format!(
                                "lambda={lam} mu={mu}: charge {} solve {} kostant {}",
                                a.entries[i][j].to_compact_string(),
                                s.to_compact_string(),
                                b.entries[i][j].to_compact_string()
                            )
                        });
                    }
                }
            }
            (a, b) => c.record(false, || format!("degree {m}: {:?} {:?}", a.err(), b.err())),
        }
    }
    vec![c]
}

/// `via_b`, the direct P-basis solve and `spin_qweight` agree on `K⁻_{ξμ}(t)`.
pub fn spin_oracle_checks(n: usize) -> Vec<Check> {
    let mut direct = Check::new("K-(t): via_b = direct");
    let mut qweight = Check::new("K-(t): via_b = spin_qweight");
    for m in 1..=n {
        let k = spin_kostka_matrix(m);
        let d = spin_kostka_matrix_by(m, SpinRoute::Direct);
        for (i, xi) in k.rows.iter().enumerate() {
            for (j, mu) in k.cols.list.iter().enumerate() {
                let e = &k.entries[i][j];
                let case = || format!("xi={xi} mu={mu}: {}", e.to_compact_string());
                match &d {
                    Ok(d) => direct.record(&d.entries[i][j] == e, case),
                    Err(err) => direct.record(false, || format!("{}: {err}", case())),
                }
                let nv = xi.len().max(mu.len());
                qweight.record_result(spin_qweight(xi, mu, nv), |v| v == e, case);
            }
        }
    }
    vec![direct, qweight]
}

/// Kostka-Foulkes properties (1)–(6) on the production route, the relation
/// `b_μ(t) P_μ = H_μ[(1-t)X]` and the Cauchy identity `Σ H_μ(x)P_μ(y)`.
pub fn classical_checks(n: usize, relation_max: usize, cauchy_max: usize) -> Vec<Check> {
    let mut c1 = Check::new("(1) zero unless lambda >= mu; unit diagonal");
    let mut c2 = Check::new("(2) degree = n(mu) - n(lambda)");
    let mut c3 = Check::new("(3) nonnegative integer coefficients");
    let mut c4 = Check::new("(4) K(1) = Kostka number");
    let mut c5 = Check::new("(5) K[(n),mu] = t^n(mu)");
    let mut c6 = Check::new("(6) K[lambda,(1^n)] = hook formula");
    let mut rel = Check::new("b_mu(t) P_mu = H_mu[(1-t)X]");
    let mut cauchy = Check::new("Cauchy: sum_mu H_mu(x;t) P_mu(y;t) = prod 1/(1 - x_i y_j)");
    for m in 1..=n {
        let k = kostka_matrix(m);
        let numbers = crate::symfunc::kostka_number_matrix(m);
        for (i, lam) in k.index.list.iter().enumerate() {
            for (j, mu) in k.index.list.iter().enumerate() {
                let e = &k.entries[i][j];
                let case = || format!("lambda={lam} mu={mu}: {}", e.to_compact_string());
                let ok1 = if i == j {
                    *e == PolyT::from_coeffs(&[1])
                } else {
                    dominates(lam, mu) || e.is_zero()
                };
                c1.record(ok1, case);
                if !e.is_zero() {
                    let want = mu.n_stat() as i64 - lam.n_stat() as i64;
                    c2.record(e.degree().map(i64::from) == Some(want), case);
                }
                c3.record(e.is_nonneg_integral(), case);
                c4.record(e.evaluate(&q_int(1)) == *numbers.get(i, j), case);
                if lam.len() == 1 {
                    c5.record(*e == PolyT::t_pow(mu.n_stat()), case);
                }
                if mu.len() == m {
                    c6.record_result(hook_formula(lam), |v| v == e, case);
                }
            }
        }
        if m <= relation_max {
            for mu in partitions_of(m) {
                let lhs = hl_p(&mu).scale(&RatQT::from_t(&b_mu(&mu)));
                let rhs = lift_t(&hl_h(&mu)).plethysm_scale(|r| RatQT::from_t(&PolyT::one_minus_t_pow(r)));
                rel.record(sym_eq(&lhs, &rhs), || format!("mu={mu}"));
            }
        }
        if m <= cauchy_max {
            let pairs: Vec<_> = partitions_of(m)
                .iter()
                .map(|mu| (lift_t(&hl_h(mu)), hl_p(mu)))
                .collect();
            let kernel = kernel_mm(m, |_| q_int(1)).map(|c| RatQT::constant(c.clone()));
            cauchy.record(bilinear_mm(m, &pairs) == kernel, || format!("degree {m}"));
        }
    }
    vec![c1, c2, c3, c4, c5, c6, rel, cauchy]
}

fn eval_t(f: &SymFunc<PolyT>, t: i64) -> SymFunc<Q> {
    f.map_coeffs(|c| c.evaluate(&q_int(t)))
}

/// Spin Hall-Littlewood properties (1)–(6); the Cauchy identities are
/// checked in bidegree `(m, m)` for `m ≤ cauchy_max`.
pub fn spin_hall_littlewood_checks(n: usize, cauchy_max: usize) -> Vec<Check> {
    let mut c1 = Check::new("(1) phi(H_mu) = H-_mu");
    let mut c2 = Check::new("(2) H-_mu(x;1) = q_mu");
    let mut c3 = Check::new("(3) H-_mu(x;0) = S_mu");
    let mut c4 = Check::new("(4) H-_mu(x;-1) = Q_mu for strict mu, else 0");
    let mut c5a = Check::new("(5) H-_mu in Z[t] (x) Gamma");
    let mut c5b = Check::new("(5) {H-_xi} is unitriangular over Z[t] against {Q_zeta}");
    let mut c6 = Check::new("(6) sum_mu H-_mu(x;t) P_mu(y;t) = prod (1 + x_i y_j)/(1 - x_i y_j)");
    let mut sphi = Check::new("S_lambda = det(q_{lambda_i - i + j}) = phi(s_lambda)");
    let mut cauchy_s = Check::new("sum_lambda S_lambda(x) s_lambda(y) = prod (1 + x_i y_j)/(1 - x_i y_j)");
    for m in 1..=n {
        let kernel = kernel_mm(m, |k| if k == 0 { q_int(1) } else { q_int(2) });
        for mu in partitions_of(m) {
            let h = spin_hl_h(&mu);
            let case = || format!("mu={mu}");
            c1.record(sym_eq(&hl_h(&mu).phi(), &h), case);
            c2.record(sym_eq(&eval_t(&h, 1), &q_fun_partition(&mu)), case);
            c3.record(sym_eq(&eval_t(&h, 0), &s_det(&mu)), case);
            let expected = match StrictPartition::try_from(mu.clone()) {
                Ok(xi) => schur_q(&xi),
                Err(_) => SymFunc::zero(m, Basis::Schur),
            };
            c4.record(sym_eq(&eval_t(&h, -1), &expected), case);
            c5a.record_result(to_schur_q_basis(&h), |cs| cs.iter().all(|(_, c)| c.is_integral()), case);
            let s = SymFunc::<Q>::basis_element(Basis::Schur, &mu);
            sphi.record(sym_eq(&s_det(&mu), &s.phi()), case);
        }
        let strict = strict_partitions_of(m);
        for xi in &strict {
            let h = spin_hl_h(xi.as_partition());
            let coeffs = to_schur_q_basis(&h);
            c5b.record_result(
                coeffs,
                |cs| {
                    strict.iter().all(|zeta| {
                        let c = cs
                            .iter()
                            .find(|(z, _)| z == zeta)
                            .map(|(_, c)| c.clone())
                            .unwrap_or_else(PolyT::zero);
                        if zeta == xi {
                            c == PolyT::from_coeffs(&[1])
                        } else {
                            c.is_integral() && (dominates(zeta.as_partition(), xi.as_partition()) || c.is_zero())
                        }
                    })
                },
                || format!("xi={xi}"),
            );
        }
        if m <= cauchy_max {
            let pairs: Vec<_> = partitions_of(m)
                .iter()
                .map(|mu| (lift_t(&spin_hl_h(mu)), hl_p(mu)))
                .collect();
            let k = kernel.map(|c| RatQT::constant(c.clone()));
            c6.record(bilinear_mm(m, &pairs) == k, || format!("degree {m}"));
            let pairs: Vec<_> = partitions_of(m)
                .iter()
                .map(|l| (s_det(l), SymFunc::<Q>::basis_element(Basis::Schur, l)))
                .collect();
            cauchy_s.record(bilinear_mm(m, &pairs) == kernel, || format!("degree {m}"));
        }
    }
    vec![c1, c2, c3, c4, c5a, c5b, c6, sphi, cauchy_s]
}

/// `C⁻_{ξμ}(t) ∈ ℤ_{≥0}[t]`, and at `μ = (1^n)` it is the rescaled
/// hook-content closed form.
pub fn graded_multiplicity_checks(n: usize) -> Vec<Check> {
    let mut pos = Check::new("C-[xi,mu](t) in Z+[t]");
    let mut col = Check::new("C-[xi,(1^n)](t) = 2^-((l-d)/2) t^n(1^n) closed(1/t)");
    for m in 1..=n {
        let column = Partition::column(m as u32);
        for xi in strict_partitions_of(m) {
            for mu in partitions_of(m) {
                let c = graded_multiplicity_c(&xi, &mu);
                if mu == column {
                    let expected = spin_kostka_col_closed(&xi)
                        .and_then(|k| k.substitute_inverse(column.n_stat()))
                        .map(|k| k.scale(&half_spin_factor(&xi)));
                    match (&c, expected) {
                        (Ok(c), Ok(e)) => col.record(*c == e, || {
                            format!("xi={xi}: {} vs {}", c.to_compact_string(), e.to_compact_string())
                        }),
                        (_, Err(e)) => col.record(false, || format!("xi={xi}: {e}")),
                        (Err(e), _) => col.record(false, || format!("xi={xi}: {e}")),
                    }
                }
                pos.record_result(c, |_| true, || format!("xi={xi} mu={mu}"));
            }
        }
    }
    vec![pos, col]
}

/// The q,t layer for degrees up to `n ≤ 5`.
pub fn qt_checks(n: usize) -> Vec<Check> {
    let mut pos = Check::new("K(q,t) in Z+[q,t]");
    let mut red = Check::new("K(0,t) = K(t)");
    let mut routes = Check::new("K-(q,t): via_b = via_phi");
    let mut sred = Check::new("K-(0,t) = K-(t)");
    let mut indep = Check::new("2^-((l-d)/2) K-[xi,mu](1,1) independent of mu");
    let mut cpos = Check::new("C-[xi,mu](q,t) in Z+[q,t] and C-(0,t) = C-(t)");
    for m in 1..=n {
        match qt_kostka_matrix(m) {
            Ok(k) => {
                for (row, lam) in k.entries.iter().zip(&k.rows) {
                    for (e, mu) in row.iter().zip(&k.cols.list) {
                        pos.record(e.is_nonneg_integral(), || {
                            format!("lambda={lam} mu={mu}: {}", e.to_compact_string())
                        });
                    }
                }
                red.record(k.at_q_zero() == kostka_matrix(m).entries, || format!("degree {m}"));
            }
            Err(e) => pos.record(false, || format!("degree {m}: {e}")),
        }
        let a = spin_qt_kostka_matrix(m, SpinQtRoute::ViaB);
        let b = spin_qt_kostka_matrix(m, SpinQtRoute::ViaPhi);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                routes.record(a == b, || format!("degree {m}"));
                sred.record(a.at_q_zero() == spin_kostka_matrix(m).entries, || format!("degree {m}"));
                for (row, lam) in a.entries.iter().zip(&a.rows) {
                    let xi = StrictPartition::try_from(lam.clone()).expect("spin rows are strict");
                    let vals: Vec<Q> = row
                        .iter()
                        .map(|e| e.evaluate(&q_int(1), &q_int(1)) * half_spin_factor(&xi))
                        .collect();
                    indep.record(vals.windows(2).all(|w| w[0] == w[1]), || {
                        format!(
                            "xi={xi}: {}",
                            vals.iter().map(Q::to_string).collect::<Vec<_>>().join(", ")
                        )
                    });
                }
            }
            (a, b) => routes.record(false, || format!("degree {m}: {:?} {:?}", a.err(), b.err())),
        }
        for xi in strict_partitions_of(m) {
            for mu in partitions_of(m) {
                let g = graded_multiplicity_c(&xi, &mu);
                cpos.record_result(
                    c_qt(&xi, &mu),
                    |c| g.as_ref().is_ok_and(|g| c.specialize_q(&q_int(0)) == *g),
                    || format!("xi={xi} mu={mu}"),
                );
            }
        }
    }
    vec![pos, red, routes, sred, indep, cpos]
}

/// Searches degree `n` for a strict `ξ` with `H⁻_ξ((1-t)x;t)` not a
/// polynomial multiple of `Ĥ_ξ(x;t)`; passes iff one exists.
pub fn negative_result_report(n: usize) -> Result<Report> {
    let results = spin_relation_checks(n)?;
    let pair = crate::spin::dual_spin_hl(n)?;
    let mut duality = Check::new("<H-_xi, H^_eta> = delta");
    duality.record(pair.pairing().is_identity(), || format!("degree {n}"));
    let mut classical = Check::new("classical relation b_mu P_mu = H_mu[(1-t)X] holds in the same degree");
    for c in classical_checks(n, n, 0)
        .into_iter()
        .filter(|c| c.name.starts_with("b_mu"))
    {
        classical.record(c.passed, || format!("degree {n}: {:?}", c.failures));
    }
    let mut witness = Check::new("some strict xi has H-_xi((1-t)x;t) not in Q[t] * H^_xi(x;t)");
    let found = results.iter().find(|r| !r.polynomial_multiple);
    witness.record(found.is_some(), || format!("no witness in degree {n}"));
    let info = json!({
        "witness": found.map(|r| r.xi.clone()),
        "cases": results,
    });
    Ok(Report::new(
        Suite::NegativeResult,
        n,
        vec![duality, classical, witness],
        info,
    ))
}

/// Informational: for every pair up to degree `n`, whether `K⁻_{ξμ}(t)` is
/// palindromic. Never fails.
pub fn symmetry_report(n: usize) -> Report {
    let entries: Vec<_> = (1..=n).flat_map(symmetry_scan).collect();
    let count = |v: &str| entries.iter().filter(|e| e.verdict == v).count();
    let info = json!({
        "symmetric": count("symmetric"),
        "not_symmetric": count("not symmetric"),
        "zero": count("zero"),
        "entries": entries,
    });
    Report::new(Suite::Symmetry, n, Vec::new(), info)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), Value::String(s.name().to_string()));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = run_suite(s, 3).unwrap();
            assert!(r.passed, "{s}: {:#?}", r.checks);
        }
        assert!(run_suite(Suite::QtLayer, 6).is_err());
        assert!(run_suite(Suite::SpinKostka, 0).is_err());
    }

    #[test]
    fn failures_are_capped() {
        let mut c = Check::new("x");
        for i in 0..20 {
            c.record(false, || i.to_string());
        }
        assert_eq!(
            (c.cases, c.failed, c.failures.len(), c.passed),
            (20, 20, MAX_RECORDED_FAILURES, false)
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&run_suite(Suite::Symmetry, 4).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(Suite::Symmetry, 4).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
