//! The acceptance checks, shared by the command-line tool and the test
//! suite. Each criterion runs a list of exact comparisons and reports one
//! line per comparison; a criterion passes when every comparison holds
//! and it finishes within its time limit.

use std::time::Instant;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::rational::{int, rat};
use crate::algebra::{parse_poly, parse_ratfn, Atom, Poly, Rational, RationalFn};
use crate::applications::curves::CurveOperator;
use crate::applications::{self as apps, CurvePreset};
use crate::calculus::free_energy::FreeEnergies;
use crate::calculus::op_cut;
use crate::calculus::theorems::{
    closed_recursion_sides, cut_recursion_sides, labelled_lemma_sides, labelled_sides, lemma_d_sides,
    quadratic_recursion_sides,
};
use crate::error::{Error, Result};
use crate::feynman::{
    covariant_from_gradient, realized_free_energy, recursion_solve, wf1_t_derivative, FeynmanContext,
};
use crate::graphs::{enumerate_stable, verify_marking_identity, EnumOptions};
use crate::oracle::{one_d_partition_coefficients, one_d_wick_partition, oracle_equivalence};
use crate::reference::{self, displays};

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub passed: bool,
    pub label: String,
    /// Extra lines explaining a failure.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub seconds: f64,
    pub limit_seconds: f64,
    pub checks: Vec<CheckLine>,
    /// Findings that do not affect the verdict.
    pub remarks: Vec<String>,
}

impl CriterionReport {
    /// One summary line.
    pub fn summary(&self) -> String {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        format!(
            "criterion {:>2} {} {} ({}/{} checks, {:.2} s of {:.0} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.checks.len() - failed,
            self.checks.len(),
            self.seconds,
            self.limit_seconds
        )
    }

    /// The summary followed by failing checks and remarks.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = self.summary();
        for c in &self.checks {
            if verbose || !c.passed {
                out.push_str(&format!("\n    {} {}", if c.passed { "ok  " } else { "FAIL" }, c.label));
                for n in &c.notes {
                    out.push_str(&format!("\n           {}", n));
                }
            }
        }
        if self.seconds > self.limit_seconds {
            out.push_str(&format!("\n    FAIL time limit of {:.0} s exceeded", self.limit_seconds));
        }
        for r in &self.remarks {
            out.push_str(&format!("\n    note {}", r));
        }
        out
    }
}

#[derive(Default)]
struct Checks {
    lines: Vec<CheckLine>,
    remarks: Vec<String>,
}

impl Checks {
    fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.lines.push(CheckLine { passed, label: label.into(), notes: Vec::new() });
    }

    fn check_with(&mut self, label: impl Into<String>, passed: bool, notes: Vec<String>) {
        self.lines.push(CheckLine { passed, label: label.into(), notes });
    }

    /// Records an error as a failed check instead of aborting the criterion.
    fn try_check(&mut self, label: impl Into<String>, r: Result<bool>) {
        match r {
            Ok(b) => self.check(label, b),
            Err(e) => self.check_with(label, false, vec![format!("error: {}", e)]),
        }
    }

    fn remark(&mut self, s: impl Into<String>) {
        self.remarks.push(s.into());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Graphs,
    Operators,
    Realization,
    Oracle,
    Applications,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "all" => Suite::All,
            "graphs" => Suite::Graphs,
            "operators" => Suite::Operators,
            "realization" => Suite::Realization,
            "oracle" => Suite::Oracle,
            "applications" => Suite::Applications,
            _ => return None,
        })
    }

    pub fn criteria(self) -> Vec<u32> {
        match self {
            Suite::All => (1..=11).collect(),
            Suite::Graphs => vec![1, 2, 11],
            Suite::Operators => vec![3],
            Suite::Realization => vec![4, 5],
            Suite::Oracle => vec![6],
            Suite::Applications => vec![7, 8, 9, 10],
        }
    }
}

pub const CRITERIA: [(u32, &str, f64); 11] = [
    (1, "enumeration ground truth", 1.0),
    (2, "abstract free energy tables", 30.0),
    (3, "operator theorems", 120.0),
    (4, "realized free energies", 120.0),
    (5, "recursion solver against graph sums", 60.0),
    (6, "Wick oracle against graph sums", 120.0),
    (7, "one-dimensional gravity", 10.0),
    (8, "Airy curve", 30.0),
    (9, "Catalan curve", 60.0),
    (10, "graph enumeration models", 180.0),
    (11, "marking identity", 30.0),
];

pub fn run_criterion(id: u32) -> Result<CriterionReport> {
    let &(_, title, limit) =
        CRITERIA.iter().find(|c| c.0 == id).ok_or_else(|| Error::Domain(format!("no criterion {}", id)))?;
    let start = Instant::now();
    let mut c = Checks::default();
    let body = match id {
        1 => enumeration_ground_truth(&mut c),
        2 => abstract_tables(&mut c),
        3 => operator_theorems(&mut c),
        4 => realization(&mut c),
        5 => recursion_solver(&mut c),
        6 => oracle(&mut c),
        7 => one_d(&mut c),
        8 => airy(&mut c),
        9 => catalan(&mut c),
        10 => enumeration_models(&mut c),
        _ => marking(&mut c),
    };
    if let Err(e) = body {
        c.check_with("criterion aborted", false, vec![format!("error: {}", e)]);
    }
    let seconds = start.elapsed().as_secs_f64();
    let passed = c.lines.iter().all(|l| l.passed) && seconds <= limit;
    Ok(CriterionReport { id, title, passed, seconds, limit_seconds: limit, checks: c.lines, remarks: c.remarks })
}

pub fn run_suite(suite: Suite) -> Vec<CriterionReport> {
    suite.criteria().into_iter().map(|id| run_criterion(id).expect("known criterion")).collect()
}

/// Checks against printed reference values that are misprints: (criterion,
/// start of the check label, reason). They fail by design.
pub const KNOWN_MISPRINTS: [(u32, &str, &str); 5] = [
    (2, "F̂_{2,2}:", "four printed terms are misdrawn or have a wrong coefficient"),
    (2, "F̂_{3,0}:", "one printed term has its loop on the wrong vertex"),
    (4, "Ŵ_4 ", "one printed factor (F_1)^4 lacks its prime"),
    (
        9,
        "F_4 of the catalan curve",
        "printed (c^2-1)^-6 coefficient 6391/24 is inconsistent with the recursion, which gives 3443/12",
    ),
    (9, "[hbar^2 d^2/dt^2 + hbar t d/dt", "the printed operator has the wrong sign on hbar t d/dt"),
];

/// Failures sorted into known misprints and everything else.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Triage {
    /// Indices into `KNOWN_MISPRINTS` that failed as expected.
    pub known: Vec<usize>,
    /// Unexpected failures, time overruns and misprint checks that passed.
    pub unexpected: Vec<String>,
}

impl Triage {
    pub fn ok(&self) -> bool {
        self.unexpected.is_empty()
    }
}

pub fn triage(reports: &[CriterionReport]) -> Triage {
    let mut t = Triage::default();
    for r in reports {
        if r.seconds > r.limit_seconds {
            t.unexpected.push(format!("criterion {} exceeded its time limit", r.id));
        }
        for c in r.checks.iter().filter(|c| !c.passed) {
            match KNOWN_MISPRINTS.iter().position(|(k, p, _)| *k == r.id && c.label.starts_with(p)) {
                Some(i) => t.known.push(i),
                None => t.unexpected.push(format!("criterion {}: {}", r.id, c.label)),
            }
        }
    }
    t.known.sort_unstable();
    t.known.dedup();
    for (i, (id, label, _)) in KNOWN_MISPRINTS.iter().enumerate() {
        if reports.iter().any(|r| r.id == *id) && !t.known.contains(&i) {
            t.unexpected.push(format!("criterion {}: `{}` no longer fails", id, label.trim()));
        }
    }
    t
}

fn poly1(s: &str) -> Result<Poly> {
    parse_poly(s, 1)
}

fn enumeration_ground_truth(c: &mut Checks) -> Result<()> {
    let one_one = enumerate_stable(1, 1, EnumOptions::default())?;
    c.check(format!("(1,1) has 2 classes, found {}", one_one.len()), one_one.len() == 2);
    let two_zero = enumerate_stable(2, 0, EnumOptions::default())?;
    c.check(format!("(2,0) has 7 classes, found {}", two_zero.len()), two_zero.len() == 7);
    for (g, n) in [(1, 1), (2, 0)] {
        let cmp = reference::compare_abstract_table(&reference::abstract_table(g, n)?)?;
        c.check_with(
            format!("({},{}) equals the printed figure graph by graph", g, n),
            cmp.matches(),
            cmp.discrepancies,
        );
    }
    let mut got: Vec<Rational> = two_zero.iter().map(|(_, a)| Rational::new(1.into(), (*a).into())).collect();
    let mut want = vec![int(1), rat(1, 2), rat(1, 2), rat(1, 8), rat(1, 2), rat(1, 8), rat(1, 12)];
    got.sort();
    want.sort();
    c.check("coefficients of F̂_{2,0} are {1, 1/2, 1/2, 1/8, 1/2, 1/8, 1/12}", got == want);
    Ok(())
}

fn abstract_tables(c: &mut Checks) -> Result<()> {
    let tables = reference::abstract_tables()?;
    let wanted = [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2), (3, 0)];
    for (g, n) in wanted {
        let Some(t) = tables.iter().find(|t| (t.genus, t.legs) == (g, n)) else {
            c.check(format!("F̂_{{{},{}}}: printed table present", g, n), false);
            continue;
        };
        let cmp = reference::compare_abstract_table(t)?;
        let mut notes = cmp.discrepancies.clone();
        if cmp.errata_applied > 0 {
            notes.push(format!(
                "after the {} recorded errata for this table the computed and printed tables are {}",
                cmp.errata_applied,
                if cmp.matches_with_errata { "equal" } else { "still different" }
            ));
            for e in reference::ERRATA.iter().filter(|e| (e.genus, e.legs) == (g, n)) {
                notes.push(format!("erratum, printed term {}: {}", e.index, e.reason));
            }
        }
        c.check_with(
            format!("F̂_{{{},{}}}: {} printed terms against {} classes", g, n, cmp.printed_terms, cmp.computed_terms),
            cmp.matches(),
            notes,
        );
    }
    Ok(())
}

fn operator_theorems(c: &mut Checks) -> Result<()> {
    let mut fe = FreeEnergies::new();
    for g in 0..=3u32 {
        for n in 0..=3u32 {
            if 2 * g as i64 - 2 + n as i64 <= 0 {
                continue;
            }
            let (l, r) = cut_recursion_sides(&mut fe, g, n)?;
            c.check(format!("K F̂ = cut recursion in F̂ at ({},{})", g, n), l == r);
            let (l, r) = lemma_d_sides(&mut fe, g, n)?;
            c.check(format!("D F̂_{{g,n}} = (n+1) F̂_{{g,n+1}} at ({},{})", g, n), l == r);
            let (l, r) = quadratic_recursion_sides(&mut fe, g, n)?;
            c.check(format!("K F̂ = quadratic recursion in D F̂ at ({},{})", g, n), l == r);
        }
    }
    for g in 2..=3 {
        let (l, r) = closed_recursion_sides(&mut fe, g)?;
        c.check(format!("K F̂_g = quadratic recursion in ∂ F̂ at genus {}", g), l == r);
    }
    for ((g, n), rhs_terms) in displays::CUT_IDENTITIES {
        let lhs = op_cut(&fe.get(g, n)?)?;
        let mut rhs = crate::calculus::GraphSum::zero();
        let mut text = Vec::new();
        for ((p, q), factors) in rhs_terms {
            let mut prod = crate::calculus::GraphSum::unit();
            for &(fg, fnn) in factors.iter() {
                prod = prod.mul(&fe.get(fg, fnn)?);
            }
            rhs = rhs.add(&prod.scale(&rat(*p, *q)));
            let names: Vec<String> = factors.iter().map(|(a, b)| format!("F̂_{{{},{}}}", a, b)).collect();
            text.push(format!("{}/{} {}", p, q, names.join(" ")));
        }
        c.check(format!("K F̂_{{{},{}}} = {}", g, n, text.join(" + ")), lhs == rhs);
    }
    for g in 0..=2u32 {
        for size in 0..=3u32 {
            if 2 * g as i64 - 2 + size as i64 <= 0 || (g == 2 && size > 2) {
                continue;
            }
            for l1 in 0..=size {
                let l = [l1, size - l1];
                for (i, j) in [(1, 1), (1, 2), (2, 2)] {
                    let (a, b) = labelled_sides(&mut fe, g, &l, i, j)?;
                    c.check(format!("labelled recursion K_{}{} at genus {}, legs {:?}", i, j, g, l), a == b);
                }
                for j in 1..=2 {
                    let (a, b) = labelled_lemma_sides(&mut fe, g, &l, j)?;
                    c.check(format!("labelled lemma D_{} at genus {}, legs {:?}", j, g, l), a == b);
                }
            }
        }
    }
    Ok(())
}

fn realization(c: &mut Checks) -> Result<()> {
    let ctx = FeynmanContext::new(1)?;
    let ctx2 = FeynmanContext::new(2)?;
    c.check("Ŵ_2 equals the printed expansion", realized_free_energy(2, &ctx)? == poly1(displays::W2)?);
    c.check(
        "Ŵ_2 with two labels equals the printed expansion",
        realized_free_energy(2, &ctx2)? == parse_poly(displays::W2_TWO_LABELS, 2)?,
    );
    c.check("Ŵ_3 equals the printed expansion", realized_free_energy(3, &ctx)? == poly1(displays::W3)?);
    let w4 = realized_free_energy(4, &ctx)?;
    let printed = poly1(displays::W4)?;
    let corrected = poly1(&displays::W4.replace(displays::W4_ERRATUM.0, displays::W4_ERRATUM.1))?;
    let mut notes = Vec::new();
    if w4 != printed {
        notes.push(format!("computed minus printed: {}", &w4 - &printed));
        notes.push(format!(
            "with the printed factor {} read as {}: {}",
            displays::W4_ERRATUM.0.trim(),
            displays::W4_ERRATUM.1.trim(),
            if w4 == corrected { "equal" } else { "still different" }
        ));
    }
    c.check_with("Ŵ_4 equals the printed expansion", w4 == printed, notes);
    Ok(())
}

fn recursion_solver(c: &mut Checks) -> Result<()> {
    let ctx = FeynmanContext::new(1)?;
    let solved = recursion_solve(4, &ctx)?;
    for g in 2..=4 {
        let graph_sum = realized_free_energy(g, &ctx)?;
        c.check(format!("recursion solution equals the graph sum at genus {}", g), solved.get(g) == Some(&graph_sum));
    }
    let dw1 = wf1_t_derivative(&ctx, 1);
    let w2 = realized_free_energy(2, &ctx)?;
    let lhs = w2.partial(&Atom::scalar_kappa());
    let rhs = (&covariant_from_gradient(std::slice::from_ref(&dw1), &ctx, 1, 1) + &(&dw1 * &dw1)).scale(&rat(1, 2));
    c.check("∂_κ Ŵ_2 = 1/2 (D_t ∂_t Ŵ_1 + (∂_t Ŵ_1)^2)", lhs == rhs);
    Ok(())
}

fn oracle(c: &mut Checks) -> Result<()> {
    c.try_check("Wick expansion equals the graph sum for g <= 3, one label", oracle_equivalence(3, 1));
    c.try_check("Wick expansion equals the graph sum for g = 2, two labels", oracle_equivalence(2, 2));
    let n = 4;
    c.check(
        format!("1D closed partition formula equals the Wick expansion through order {}", n),
        one_d_partition_coefficients(n) == one_d_wick_partition(n),
    );
    Ok(())
}

fn one_d(c: &mut Checks) -> Result<()> {
    let solved = apps::one_d_recursion(4)?;
    for (g, s) in displays::ONE_D {
        let printed = poly1(s)?;
        c.check(format!("F^1D_{} from graphs equals the printed value", g), apps::one_d_free_energy(g)? == printed);
        c.check(format!("F^1D_{} from the recursion equals the printed value", g), solved.get(g) == Some(&printed));
    }
    let dx = apps::d_x();
    let mut grad = vec![Poly::zero(), parse_poly("1/2 k I2", 1)?];
    for g in 2..=3 {
        grad.push(dx.apply(solved.get(g).expect("solved")));
    }
    let rhs = apps::one_d_recursion_rhs(&grad, 4).scale(&int(2));
    c.check("genus-4 right-hand side equals the printed expansion", rhs == poly1(displays::ONE_D_GENUS_FOUR_RHS)?);
    Ok(())
}

fn compare_curve(
    c: &mut Checks,
    p: CurvePreset,
    fs: &std::collections::BTreeMap<u32, RationalFn>,
    printed: &[(u32, &str)],
) -> Result<()> {
    for &(g, s) in printed {
        let want = parse_ratfn(s, 1)?;
        let got = fs.get(&g);
        let mut notes = Vec::new();
        if let Some(f) = got.filter(|f| **f != want) {
            notes.push(format!("computed {}", f));
            let mut with_printed = fs.clone();
            with_printed.retain(|h, _| *h <= g);
            with_printed.insert(g, want.clone());
            let holds = apps::curves::c_recursion_holds(p, &with_printed, g);
            notes.push(format!(
                "with the printed F_{} and the lower genera as computed, the c-recursion {} at genus {}",
                g,
                if holds { "holds" } else { "fails" },
                g
            ));
        }
        c.check_with(format!("F_{} of the {} curve equals {}", g, p.name(), s), got == Some(&want), notes);
    }
    Ok(())
}

fn ode_notes(res: &[RationalFn]) -> Vec<String> {
    match apps::first_failing_order(res) {
        Some(k) => vec![format!("first nonzero coefficient at hbar^{}: {}", k, res[k])],
        None => Vec::new(),
    }
}

fn airy(c: &mut Checks) -> Result<()> {
    let p = CurvePreset::Airy;
    let fs = apps::curve_free_energies(p, 5)?;
    compare_curve(c, p, &fs, &displays::AIRY)?;
    c.check("the c-recursion holds through genus 5", apps::curves::c_recursion_holds(p, &fs, 5));
    for (g, (a, b)) in displays::AIRY_S {
        c.check(
            format!("S_{} = {}/{} z^-{} under z^3 = 2c^3", g, a, b, 3 * g - 3),
            apps::airy_s_coefficient(g)? == rat(a, b),
        );
    }
    let res = apps::curve_ode_residuals(p, CurveOperator::Airy, 4)?;
    c.check_with("((hbar d/dt)^2 - t) Z = 0 through hbar^4", res.iter().all(|r| r.is_zero()), ode_notes(&res));
    Ok(())
}

fn catalan(c: &mut Checks) -> Result<()> {
    let p = CurvePreset::Catalan;
    let fs = apps::curve_free_energies(p, 5)?;
    compare_curve(c, p, &fs, &displays::CATALAN)?;
    c.check("the c-recursion holds through genus 5", apps::curves::c_recursion_holds(p, &fs, 5));
    c.check("the t-recursion holds through genus 5", apps::catalan_t_recursion_holds(&fs, 5));
    c.try_check("d/dc F_g = (κ^2 I_2 - 2κ/c) ∂_κ F_g through genus 5", apps::catalan_lemma_holds(5));
    let printed = CurveOperator::printed(p);
    let res = apps::curve_ode_residuals(p, printed, 4)?;
    let mut notes = ode_notes(&res);
    if !notes.is_empty() {
        let plus = apps::curve_ode_residuals_with_sign(p, printed, 4, 1)?;
        if let Some(k) = apps::first_failing_order(&plus) {
            notes.push(format!("with log Z = +F_0/hbar + ... the first nonzero coefficient is at hbar^{}", k));
        }
    }
    c.check_with(
        "[hbar^2 d^2/dt^2 + hbar t d/dt + (1 - hbar)] Z = 0 through hbar^4",
        res.iter().all(|r| r.is_zero()),
        notes,
    );
    let flipped = apps::curve_ode_residuals(p, CurveOperator::Catalan { first_order_sign: -1 }, 4)?;
    if flipped.iter().all(|r| r.is_zero()) {
        c.remark("[hbar^2 d^2/dt^2 - hbar t d/dt + (1 - hbar)] Z = 0 holds through hbar^4");
    } else {
        c.remark("no sign of the first-order term gives a solution through hbar^4");
    }
    Ok(())
}

fn enumeration_models(c: &mut Checks) -> Result<()> {
    let st = apps::stable_count_recursion(5)?;
    for (g, s) in displays::STABLE_COUNT {
        let printed = parse_poly(s, 1)?;
        c.check(format!("F^st_{} from the recursion equals the printed value", g), st.get(g) == Some(&printed));
    }
    let mut enumerated = std::collections::BTreeMap::new();
    for g in 2..=5 {
        let f = apps::stable_count_free_energy(g)?;
        c.check(format!("F^st_{} enumeration equals the recursion", g), st.get(g) == Some(&f));
        enumerated.insert(g, apps::a_coefficients(&f, g)?);
    }
    for g in 2..=4 {
        let (a1, a2) = apps::stable_count_closed_forms(g)?;
        let a = &enumerated[&g];
        c.check(format!("a^{}_1 and a^{}_2 closed forms equal the enumeration", g, g), a[1] == a1 && a[2] == a2);
        c.check(format!("a^{}_2 double sum equals the closed form", g), apps::a2_double_sum(g) == a2);
    }
    let series = apps::trivalent_log_series(5)?;
    let rec = apps::a_recursion(5);
    for g in 2..=5 {
        let top = (2 * g - 2) as usize;
        c.check(
            format!("a^{}_{} equals the log-series coefficient", g, top),
            enumerated[&g][top] == series[&g] && rec[&g][top] == series[&g],
        );
    }
    let lam = apps::lambda_recursion_solve(7)?;
    for (g, s) in displays::GRAPH_COUNT_KAPPA {
        let printed = apps::kappa_coefficients(&parse_poly(s, 1)?, g);
        let got = lam.get(&g);
        let mut notes = Vec::new();
        if let Some(v) = got {
            if *v != printed {
                let diff: Vec<String> = (0..v.len())
                    .filter(|&i| v[i] != printed[i])
                    .map(|i| format!("kappa^{}: computed {}, printed {}", i, v[i], printed[i]))
                    .collect();
                notes.extend(diff);
            }
        }
        c.check_with(
            format!("F^gr_{} from the λ-recursion equals the printed κ-polynomial", g),
            got == Some(&printed),
            notes,
        );
        if let Some(a) = enumerated.get(&g) {
            let from_enum = apps::kappa_coefficients(&apps::graph_count_free_energy_kappa(g, a), g);
            c.check(format!("F^gr_{} from the enumeration equals the λ-recursion", g), Some(&from_enum) == got);
        }
    }
    let rec6 = apps::a_recursion(6);
    for (g, m, coeffs) in displays::GRAPH_COUNT_FACTORED {
        let t = RationalFn::atom(Atom::CoordT);
        let mut p = RationalFn::zero();
        for (i, &x) in coeffs.iter().enumerate() {
            p = p.add(&t.pow(i as i32)?.scale(&int(x)));
        }
        let den = RationalFn::one().sub(&t).pow(3 * g as i32 - 3)?.scale(&int(m));
        let printed = t.mul(&p).div(&den)?;
        c.check(
            format!("F^gr_{} equals the printed rational function of T", g),
            apps::graph_count_free_energy_t(g, &rec6[&g])? == printed,
        );
    }
    for g in 2..=7 {
        c.try_check(format!("a, b, λ conversions round-trip at genus {}", g), apps::coefficient_conversions(g));
    }
    for g in 2..=6 {
        let b = apps::bernoulli_boundary(g);
        let got = lam.get(&g).and_then(|v| v.get(g as usize - 1)).cloned().unwrap_or_else(Rational::zero);
        c.check(format!("λ_{{{},{}}} = B_{}/({}·{}) = {}", g, g - 1, g, g, g - 1, b), got == b);
    }
    c.try_check(
        "the T-form of the graph-count recursion holds through genus 5",
        apps::graph_count_t_recursion_holds(5),
    );
    c.try_check("the Lambert series solves T = t e^T", apps::lambert_residual_vanishes(8));
    Ok(())
}

fn marking(c: &mut Checks) -> Result<()> {
    for g in 0..=2u32 {
        for k in 0..=3u32 {
            if 2 * g as i64 - 2 + k as i64 > 0 {
                c.try_check(format!("marking identity at (g,k) = ({},{})", g, k), verify_marking_identity(g, k));
            }
        }
    }
    Ok(())
}
