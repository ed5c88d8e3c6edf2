//! Claim registry and oracle harness: every formula, characterization,
//! bijection, equidistribution, and cardinality claim registered by the other
//! modules is run against brute-force enumeration, producing a deterministic
//! structured report.
//!
//! The harness holds no combinatorial logic of its own; each check is a thin
//! closure over library calls. Failures carry a minimal witness: polynomial
//! mismatches report the lexicographically first differing exponent vector,
//! elementwise checks the lexicographically first offending object.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bijections;
use crate::closed_forms::{
    self, evaluate, lifted_wilf_pairs, mult_symmetry_witness, oracle_instances, symmetry_items,
    FormulaArgs,
};
use crate::counting::{catalan, fibonacci};
use crate::error::{Error, Result};
use crate::objects::enumerate_two_colored;
use crate::patterns::{
    arc_diagram, avoids_all, characterize, class_ids, class_patterns, contains, count_avoiders,
    left_arc_diagram, nonnesting_by_blocks, partition_contains, PatternSet,
};
use crate::polynomials::Q;
use crate::statistics::{gen_poly, gen_poly_stat, Stat};
use crate::words::{enumerate_rgfs, Rgf, SetPartition};
use crate::MultiPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    Formula,
    Characterization,
    Bijection,
    Equidistribution,
    Cardinality,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Formula => "formula",
            CheckKind::Characterization => "characterization",
            CheckKind::Bijection => "bijection",
            CheckKind::Equidistribution => "equidistribution",
            CheckKind::Cardinality => "cardinality",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

/// Outcome of one check at one size.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub id: String,
    pub kind: CheckKind,
    pub n: usize,
    pub status: CheckStatus,
    pub millis: u128,
}

type Runner = Box<dyn Fn(usize) -> std::result::Result<(), String> + Send + Sync>;

/// A registered claim with its pinned size range.
pub struct Check {
    pub id: String,
    pub kind: CheckKind,
    pub n_lo: usize,
    pub n_hi: usize,
    runner: Runner,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        kind: CheckKind,
        n_lo: usize,
        n_hi: usize,
        runner: impl Fn(usize) -> std::result::Result<(), String> + Send + Sync + 'static,
    ) -> Check {
        Check {
            id: id.into(),
            kind,
            n_lo,
            n_hi,
            runner: Box::new(runner),
        }
    }
}

/// Report over all requested checks, ordered by registry position and `n`.
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.records
            .iter()
            .any(|r| matches!(r.status, CheckStatus::Fail { .. }))
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut skip = 0;
        for r in &self.records {
            match r.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail { .. } => fail += 1,
                CheckStatus::Skipped { .. } => skip += 1,
            }
        }
        (pass, fail, skip)
    }

    /// JSON report: an array of `{check_id, kind, n, status, witness?}`
    /// records. Timings are included only on request so that the default
    /// output is byte-identical across runs.
    pub fn to_json(&self, timings: bool) -> String {
        let records: Vec<serde_json::Value> = self
            .records
            .iter()
            .map(|r| {
                let mut obj = serde_json::Map::new();
                obj.insert("check_id".into(), r.id.clone().into());
                obj.insert("kind".into(), r.kind.name().into());
                obj.insert("n".into(), r.n.into());
                match &r.status {
                    CheckStatus::Pass => {
                        obj.insert("status".into(), "pass".into());
                    }
                    CheckStatus::Fail { witness } => {
                        obj.insert("status".into(), "fail".into());
                        obj.insert("witness".into(), witness.clone().into());
                    }
                    CheckStatus::Skipped { reason } => {
                        obj.insert("status".into(), "skipped".into());
                        obj.insert("witness".into(), reason.clone().into());
                    }
                }
                if timings {
                    obj.insert("millis".into(), (r.millis as u64).into());
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::Value::Array(records).to_string()
    }

    /// Human-readable summary: one line per (check, n-range) with collapsed
    /// pass runs, expanded failures and skips.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.records.len() {
            let r = &self.records[i];
            let mut j = i;
            while j + 1 < self.records.len()
                && self.records[j + 1].id == r.id
                && self.records[j + 1].status == CheckStatus::Pass
                && r.status == CheckStatus::Pass
            {
                j += 1;
            }
            match &r.status {
                CheckStatus::Pass => {
                    let millis: u128 = self.records[i..=j].iter().map(|x| x.millis).sum();
                    out.push_str(&format!(
                        "pass  {:17} {:42} n={}..{} ({millis} ms)\n",
                        r.kind.name(),
                        r.id,
                        r.n,
                        self.records[j].n
                    ));
                }
                CheckStatus::Fail { witness } => {
                    out.push_str(&format!(
                        "FAIL  {:17} {:42} n={}: {witness}\n",
                        r.kind.name(),
                        r.id,
                        r.n
                    ));
                }
                CheckStatus::Skipped { reason } => {
                    out.push_str(&format!(
                        "skip  {:17} {:42} n={}: {reason}\n",
                        r.kind.name(),
                        r.id,
                        r.n
                    ));
                }
            }
            i = j + 1;
        }
        let (pass, fail, skip) = self.counts();
        out.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped\n"));
        out
    }
}

/// Lexicographically first differing exponent vector between two polynomials.
fn poly_witness(label: &str, formula: &MultiPoly, brute: &MultiPoly) -> Option<String> {
    if formula == brute {
        return None;
    }
    let mut exps: Vec<_> = formula.terms().map(|(e, _)| *e).collect();
    exps.extend(brute.terms().map(|(e, _)| *e));
    exps.sort_unstable();
    exps.dedup();
    for e in exps {
        let a = formula.coeff(&e);
        let b = brute.coeff(&e);
        if a != b {
            return Some(format!(
                "{label}: first differing term q^{} r^{} s^{} t^{}: formula {a}, brute force {b}",
                e[0], e[1], e[2], e[3]
            ));
        }
    }
    unreachable!("polynomials differ but no differing term found")
}

fn brute(pats: &str, stat: Option<Stat>, n: usize) -> std::result::Result<MultiPoly, String> {
    let set = PatternSet::parse_list(pats).map_err(|e| e.to_string())?;
    match stat {
        Some(st) => gen_poly_stat(n, &set, st).map_err(|e| e.to_string()),
        None => gen_poly(n, &set).map_err(|e| e.to_string()),
    }
}

fn brute_stat(pats: &str, stat: Stat, n: usize) -> std::result::Result<MultiPoly, String> {
    brute(pats, Some(stat), n)
}

// ---------------------------------------------------------------------------
// Check registry
// ---------------------------------------------------------------------------

fn formula_checks(out: &mut Vec<Check>) {
    for inst in oracle_instances() {
        let label = inst.label.clone();
        out.push(Check::new(
            format!("FORMULA:{label}"),
            CheckKind::Formula,
            inst.n_lo,
            inst.n_hi,
            move |n| {
                let value = evaluate(inst.base, &inst.args(n))
                    .and_then(|v| v.into_poly())
                    .map_err(|e| e.to_string())?;
                for (pats, stat) in &inst.claims {
                    let target = brute(pats, *stat, n)?;
                    let claim = match stat {
                        Some(st) => format!("{}_{n}({pats})", st.name()),
                        None => format!("F_{n}({pats})"),
                    };
                    if let Some(w) = poly_witness(&claim, &value, &target) {
                        return Err(w);
                    }
                }
                Ok(())
            },
        ));
    }

    // The area-sum definition agrees with the shifted recursion.
    out.push(Check::new(
        "FORMULA:MOTZKIN_DEF",
        CheckKind::Formula,
        0,
        8,
        |n| {
            let by_recursion = evaluate("MOTZKIN_Q", &FormulaArgs::n(n))
                .and_then(|v| v.into_poly())
                .map_err(|e| e.to_string())?;
            let mut by_area = MultiPoly::zero();
            for p in enumerate_two_colored(n) {
                by_area = by_area.add(&MultiPoly::var_pow(Q, p.area() as u32));
            }
            poly_witness("area sum vs recursion", &by_recursion, &by_area).map_or(Ok(()), Err)
        },
    ));

    // Rational route for K equals the binomial expansion, and the difference
    // identity holds; swept over m <= 8 at each n.
    out.push(Check::new(
        "FORMULA:K_IDENTITIES",
        CheckKind::Formula,
        1,
        8,
        |n| {
            for m in 1..=8usize {
                let rational = evaluate(
                    "K",
                    &FormulaArgs {
                        n,
                        m: Some(m),
                        ..Default::default()
                    },
                )
                .and_then(|v| v.into_poly())
                .map_err(|e| e.to_string())?;
                let expanded = closed_forms::k_mn_binomial_sum(m, n);
                if let Some(w) = poly_witness(&format!("K({m},{n})"), &rational, &expanded) {
                    return Err(w);
                }
            }
            Ok(())
        },
    ));

    // LS_n(12...k) is monic of the stated degree.
    out.push(Check::new(
        "FORMULA:DEG_LS_12K",
        CheckKind::Formula,
        3,
        8,
        |n| {
            for k in 3..=5.min(n) {
                let poly = evaluate(
                    "LS_12K",
                    &FormulaArgs {
                        n,
                        k: Some(k),
                        ..Default::default()
                    },
                )
                .and_then(|v| v.into_poly())
                .map_err(|e| e.to_string())?;
                let want = evaluate(
                    "DEG_LS_12K",
                    &FormulaArgs {
                        n,
                        k: Some(k),
                        ..Default::default()
                    },
                )
                .map_err(|e| e.to_string())?;
                let want = match want {
                    closed_forms::FormulaValue::Count(d) => d,
                    _ => unreachable!(),
                };
                if poly.degree_in(Q) as u64 != want {
                    return Err(format!(
                        "degree of LS_{n}(12...{k}) is {}, stated {want}",
                        poly.degree_in(Q)
                    ));
                }
                if poly.leading_coeff_univar(Q) != 1 {
                    return Err(format!("LS_{n}(12...{k}) is not monic"));
                }
            }
            Ok(())
        },
    ));
}

fn characterization_checks(out: &mut Vec<Check>) {
    for id in class_ids() {
        out.push(Check::new(
            format!("CHAR:{id}"),
            CheckKind::Characterization,
            0,
            9,
            move |n| {
                let set = class_patterns(id).map_err(|e| e.to_string())?;
                for w in enumerate_rgfs(n).map_err(|e| e.to_string())? {
                    let structural = characterize(id, &w).map_err(|e| e.to_string())?;
                    let by_avoidance = avoids_all(&w, &set);
                    if structural != by_avoidance {
                        return Err(format!(
                            "word {w}: structural test says {structural}, avoidance says {by_avoidance}"
                        ));
                    }
                }
                Ok(())
            },
        ));
    }
}

fn bijection_checks(out: &mut Vec<Check>) {
    for id in bijections::BIJECTION_IDS {
        // The beta inversion recurses through nested alpha unwrappings, so its
        // battery is pinned one size lower.
        let n_hi = if id == "beta" { 7 } else { 8 };
        out.push(Check::new(
            format!("BIJ:{id}"),
            CheckKind::Bijection,
            0,
            n_hi,
            move |n| match bijections::battery(id, n) {
                Ok(None) => Ok(()),
                Ok(Some(witness)) => Err(witness),
                Err(e) => Err(e.to_string()),
            },
        ));
    }
}

fn count_class(pats: &str, n: usize) -> std::result::Result<u64, String> {
    let set = PatternSet::parse_list(pats).map_err(|e| e.to_string())?;
    Ok(count_avoiders(n, &set).map_err(|e| e.to_string())?.0)
}

fn cardinality_checks(out: &mut Vec<Check>) {
    out.push(Check::new(
        "CARD:2POW",
        CheckKind::Cardinality,
        1,
        11,
        |n| {
            for pats in ["112", "121", "122", "123"] {
                let got = count_class(pats, n)?;
                let want = 1u64 << (n - 1);
                if got != want {
                    return Err(format!("|R_{n}({pats})| = {got}, formula {want}"));
                }
            }
            Ok(())
        },
    ));
    out.push(Check::new("CARD:111", CheckKind::Cardinality, 0, 11, |n| {
        let got = count_class("111", n)?;
        let want = match evaluate("CARD_111", &FormulaArgs::n(n)).map_err(|e| e.to_string())? {
            closed_forms::FormulaValue::Count(c) => c,
            _ => unreachable!(),
        };
        if got != want {
            return Err(format!("|R_{n}(111)| = {got}, formula {want}"));
        }
        Ok(())
    }));
    out.push(Check::new("CARD:FIB", CheckKind::Cardinality, 0, 12, |n| {
        for pats in ["111,112", "111,121"] {
            let got = count_class(pats, n)?;
            let want = fibonacci(n);
            if got != want {
                return Err(format!("|R_{n}({pats})| = {got}, f_{n} = {want}"));
            }
        }
        Ok(())
    }));
    out.push(Check::new(
        "CARD:CATALAN",
        CheckKind::Cardinality,
        0,
        11,
        |n| {
            for pats in ["1212", "1221"] {
                let got = count_class(pats, n)?;
                let want = catalan(n);
                if got != want {
                    return Err(format!("|R_{n}({pats})| = {got}, C_{n} = {want}"));
                }
            }
            Ok(())
        },
    ));
}

fn equidistribution_checks(out: &mut Vec<Check>) {
    out.push(Check::new(
        "EQ:112:LB=RS",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            let lb = brute_stat("112", Stat::Lb, n)?;
            let rs = brute_stat("112", Stat::Rs, n)?;
            poly_witness("LB(112) vs RS(112)", &lb, &rs).map_or(Ok(()), Err)
        },
    ));

    out.push(Check::new(
        "EQ:1212/1221:LB=RS=LB=M",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            let lb12 = brute_stat("1212", Stat::Lb, n)?;
            let rs12 = brute_stat("1212", Stat::Rs, n)?;
            let lb21 = brute_stat("1221", Stat::Lb, n)?;
            if let Some(w) = poly_witness("LB(1212) vs RS(1212)", &lb12, &rs12) {
                return Err(w);
            }
            if let Some(w) = poly_witness("LB(1212) vs LB(1221)", &lb12, &lb21) {
                return Err(w);
            }
            if n >= 1 {
                let m = evaluate("MOTZKIN_Q", &FormulaArgs::n(n - 1))
                    .and_then(|v| v.into_poly())
                    .map_err(|e| e.to_string())?;
                if let Some(w) = poly_witness("RS(1212) vs area polynomial", &rs12, &m) {
                    return Err(w);
                }
            }
            Ok(())
        },
    ));

    out.push(Check::new(
        "EQ:1212/1221:LS=LS=RB",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            let ls12 = brute_stat("1212", Stat::Ls, n)?;
            let ls21 = brute_stat("1221", Stat::Ls, n)?;
            let rb12 = brute_stat("1212", Stat::Rb, n)?;
            if let Some(w) = poly_witness("LS(1212) vs LS(1221)", &ls12, &ls21) {
                return Err(w);
            }
            poly_witness("LS(1212) vs RB(1212)", &ls12, &rb12).map_or(Ok(()), Err)
        },
    ));

    out.push(Check::new(
        "EQ:F(112)=F(122):r<->s@t=1",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            let keep_qrs = [true, true, true, false];
            let lhs = brute("112", None, n)?.specialize(keep_qrs);
            let rhs = brute("122", None, n)?
                .swap_vars(crate::polynomials::R, crate::polynomials::S)
                .specialize(keep_qrs);
            poly_witness("F(112; q,r,s,1) vs F(122; q,s,r,1)", &lhs, &rhs).map_or(Ok(()), Err)
        },
    ));

    out.push(Check::new(
        "EQ:SYM:BRUTE",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            for item in symmetry_items() {
                let lhs = brute(item.lhs, None, n)?.subst_monomials(&item.lhs_images);
                let rhs = brute(item.rhs, None, n)?.subst_monomials(&item.rhs_images);
                if let Some(w) = poly_witness(&item.label, &lhs, &rhs) {
                    return Err(w);
                }
            }
            Ok(())
        },
    ));

    out.push(Check::new(
        "EQ:SYM:MULT",
        CheckKind::Equidistribution,
        0,
        10,
        |n| match mult_symmetry_witness(n) {
            Ok(None) => Ok(()),
            Ok(Some(w)) => Err(w),
            Err(e) => Err(e.to_string()),
        },
    ));

    out.push(Check::new(
        "EQ:SUMMARY:111+4",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            for st in [Stat::Lb, Stat::Ls] {
                let a = brute_stat("111,1212", st, n)?;
                let b = brute_stat("111,1221", st, n)?;
                if let Some(w) = poly_witness(
                    &format!("{}(111,1212) vs {}(111,1221)", st.name(), st.name()),
                    &a,
                    &b,
                ) {
                    return Err(w);
                }
            }
            Ok(())
        },
    ));

    out.push(Check::new(
        "EQ:SUMMARY:123+4",
        CheckKind::Equidistribution,
        0,
        9,
        |n| {
            let lb12 = brute_stat("123,1212", Stat::Lb, n)?;
            let rs12 = brute_stat("123,1212", Stat::Rs, n)?;
            let lb21 = brute_stat("123,1221", Stat::Lb, n)?;
            if let Some(w) = poly_witness("LB(123,1212) vs RS(123,1212)", &lb12, &rs12) {
                return Err(w);
            }
            if let Some(w) = poly_witness("LB(123,1212) vs LB(123,1221)", &lb12, &lb21) {
                return Err(w);
            }
            let ls12 = brute_stat("123,1212", Stat::Ls, n)?;
            let rb12 = brute_stat("123,1212", Stat::Rb, n)?;
            let ls21 = brute_stat("123,1221", Stat::Ls, n)?;
            if let Some(w) = poly_witness("LS(123,1212) vs RB(123,1212)", &ls12, &rb12) {
                return Err(w);
            }
            poly_witness("LS(123,1212) vs LS(123,1221)", &ls12, &ls21).map_or(Ok(()), Err)
        },
    ));

    // F(V + 1212) and F(V + 1221) agree in the lb and ls variables, for the
    // empty prefix and the 1^k / 12...k companions.
    out.push(Check::new(
        "EQ:1212~1221:q,r",
        CheckKind::Equidistribution,
        0,
        8,
        |n| {
            let keep_qr = [true, true, false, false];
            let mut companions: Vec<String> = vec![String::new()];
            for k in 1..=3usize {
                companions.push(format!("{},", "1".repeat(k)));
                companions.push(format!(
                    "{},",
                    (1..=k).map(|x| x.to_string()).collect::<String>()
                ));
            }
            for extra in companions {
                let a = brute(&format!("{extra}1212"), None, n)?.specialize(keep_qr);
                let b = brute(&format!("{extra}1221"), None, n)?.specialize(keep_qr);
                if let Some(w) = poly_witness(
                    &format!("F({extra}1212; q,r,1,1) vs F({extra}1221; q,r,1,1)"),
                    &a,
                    &b,
                ) {
                    return Err(w);
                }
            }
            Ok(())
        },
    ));

    // The lifted statistic equivalences that verification confirms: the ls
    // and rs families for k <= 3, and the base lb equivalence at k = 1.
    out.push(Check::new(
        "EQ:WILF:LIFTS",
        CheckKind::Equidistribution,
        0,
        8,
        |n| {
            for k in 1..=3usize {
                for (v, w, st) in lifted_wilf_pairs(k) {
                    if st == Stat::Lb && k >= 2 {
                        // Refuted; covered by the regression check below.
                        continue;
                    }
                    let a = brute_stat(&v.to_string(), st, n)?;
                    let b = brute_stat(&w.to_string(), st, n)?;
                    if let Some(wit) =
                        poly_witness(&format!("{}({v}) vs {}({w})", st.name(), st.name()), &a, &b)
                    {
                        return Err(wit);
                    }
                }
            }
            Ok(())
        },
    ));

    // Negative regression: the claimed lb lift of 112 = 122 to 1223 = 1233 is
    // false, first splitting at n = 5. This check passes while the refutation
    // still reproduces, so a regression in the enumerator would surface here.
    out.push(Check::new(
        "REFUTED:WILF:LB-LIFT",
        CheckKind::Equidistribution,
        5,
        5,
        |n| {
            let a = brute_stat("1223", Stat::Lb, n)?;
            let b = brute_stat("1233", Stat::Lb, n)?;
            if a == b {
                return Err(
                    "LB_5(1223) and LB_5(1233) agree; the recorded refutation disappeared".into(),
                );
            }
            Ok(())
        },
    ));
}

fn proposition_checks(out: &mut Vec<Check>) {
    // Subword containment of RGFs refines subpartition containment; equality
    // of the avoidance classes for 111, 121, 123, and 1212.
    out.push(Check::new(
        "PROP:CONTAINMENT_LIFT",
        CheckKind::Characterization,
        0,
        8,
        |n| {
            let mut patterns: Vec<Rgf> = Vec::new();
            for len in 1..=4usize {
                patterns.extend(enumerate_rgfs(len).map_err(|e| e.to_string())?);
            }
            let equality = ["111", "121", "123", "1212"];
            let pairs: Vec<(crate::patterns::Pattern, SetPartition, bool)> = patterns
                .into_iter()
                .map(|v| {
                    let pi = SetPartition::from_rgf(&v);
                    let eq = equality.contains(&v.to_string().as_str());
                    (crate::patterns::Pattern::new(v).unwrap(), pi, eq)
                })
                .collect();
            for w in enumerate_rgfs(n).map_err(|e| e.to_string())? {
                let sigma = SetPartition::from_rgf(&w);
                for (v, pi, eq) in &pairs {
                    let word_side = contains(&w, v);
                    let partition_side = partition_contains(&sigma, pi);
                    if word_side && !partition_side {
                        return Err(format!(
                            "{w} contains {v} but {sigma} avoids {pi} as a partition"
                        ));
                    }
                    if *eq && word_side != partition_side {
                        return Err(format!(
                            "equality fails for {v} at {w}: word {word_side}, partition {partition_side}"
                        ));
                    }
                }
            }
            Ok(())
        },
    ));

    out.push(Check::new(
        "PROP:LEFT_NONNESTING=1221",
        CheckKind::Characterization,
        0,
        9,
        |n| {
            let set = PatternSet::parse_list("1221").map_err(|e| e.to_string())?;
            for w in enumerate_rgfs(n).map_err(|e| e.to_string())? {
                let sigma = SetPartition::from_rgf(&w);
                let avoider = avoids_all(&w, &set);
                let nonnesting = !left_arc_diagram(&sigma).has_nesting();
                if avoider != nonnesting {
                    return Err(format!(
                        "word {w}: avoids 1221 = {avoider}, left diagram nonnesting = {nonnesting}"
                    ));
                }
            }
            Ok(())
        },
    ));

    out.push(Check::new(
        "PROP:ARC_NONNESTING",
        CheckKind::Characterization,
        0,
        9,
        |n| {
            for w in enumerate_rgfs(n).map_err(|e| e.to_string())? {
                let sigma = SetPartition::from_rgf(&w);
                let by_blocks = nonnesting_by_blocks(&sigma);
                let by_arcs = !arc_diagram(&sigma).has_nesting();
                if by_blocks != by_arcs {
                    return Err(format!(
                        "partition {sigma}: element condition {by_blocks}, arc diagram {by_arcs}"
                    ));
                }
            }
            Ok(())
        },
    ));
}

/// The full registry in its fixed reporting order.
pub fn all_checks() -> Vec<Check> {
    let mut out = Vec::new();
    formula_checks(&mut out);
    characterization_checks(&mut out);
    bijection_checks(&mut out);
    cardinality_checks(&mut out);
    equidistribution_checks(&mut out);
    proposition_checks(&mut out);
    out
}

pub fn check_ids() -> Vec<String> {
    all_checks().into_iter().map(|c| c.id).collect()
}

/// Runs the selected checks. `ids = None` runs everything; unknown ids are an
/// error. `n_max` caps each check's pinned range; `budget` is wall-clock per
/// check, with the remaining sizes reported as skipped (never silently cut).
/// Checks run concurrently; the report order is fixed by the registry.
pub fn run(
    ids: Option<&[String]>,
    n_max: Option<usize>,
    budget: Option<Duration>,
) -> Result<Report> {
    let checks = all_checks();
    if let Some(requested) = ids {
        for id in requested {
            if !checks.iter().any(|c| &c.id == id) {
                return Err(Error::UnknownId(id.clone()));
            }
        }
    }
    let selected: Vec<&Check> = checks
        .iter()
        .filter(|c| ids.is_none_or(|req| req.iter().any(|id| id == &c.id)))
        .collect();
    let records: Vec<Vec<CheckRecord>> = selected
        .par_iter()
        .map(|check| {
            let mut out = Vec::new();
            let hi = n_max.map_or(check.n_hi, |cap| check.n_hi.min(cap));
            let started = Instant::now();
            for n in check.n_lo..=hi.max(check.n_lo) {
                if n > hi {
                    break;
                }
                if let Some(limit) = budget {
                    if started.elapsed() > limit {
                        out.push(CheckRecord {
                            id: check.id.clone(),
                            kind: check.kind,
                            n,
                            status: CheckStatus::Skipped {
                                reason: format!("budget of {} ms exhausted", limit.as_millis()),
                            },
                            millis: 0,
                        });
                        continue;
                    }
                }
                let t0 = Instant::now();
                let status = match (check.runner)(n) {
                    Ok(()) => CheckStatus::Pass,
                    Err(witness) => CheckStatus::Fail { witness },
                };
                out.push(CheckRecord {
                    id: check.id.clone(),
                    kind: check.kind,
                    n,
                    status,
                    millis: t0.elapsed().as_millis(),
                });
            }
            out
        })
        .collect();
    Ok(Report {
        records: records.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_nonempty_and_unique() {
        let ids = check_ids();
        assert!(
            ids.len() > 80,
            "expected a large registry, got {}",
            ids.len()
        );
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn small_run_is_green_and_deterministic() {
        let report = run(None, Some(4), None).unwrap();
        assert!(!report.has_failures(), "{}", report.render_table());
        let again = run(None, Some(4), None).unwrap();
        assert_eq!(report.to_json(false), again.to_json(false));
        // Timings are excluded from the deterministic form.
        assert!(!report.to_json(false).contains("millis"));
        assert!(report.to_json(true).contains("millis"));
    }

    #[test]
    fn selected_ids_and_unknown_ids() {
        let ids = vec!["FORMULA:SUM_GAUSS".to_string()];
        let report = run(Some(&ids), Some(10), None).unwrap();
        assert_eq!(report.records.len(), 11);
        assert!(!report.has_failures());
        let bad = vec!["NO_SUCH_CHECK".to_string()];
        assert!(matches!(
            run(Some(&bad), None, None),
            Err(Error::UnknownId(_))
        ));
    }

    #[test]
    fn mutated_formula_fails_with_witness() {
        // Negative control: a deliberately wrong formula must fail and carry
        // the first differing exponent vector.
        let check = Check::new("FIXTURE:WRONG", CheckKind::Formula, 3, 3, |n| {
            let wrong = MultiPoly::constant(4); // claims LB_n(112) = 4
            let target = brute_stat("112", Stat::Lb, n)?;
            poly_witness("LB(112)", &wrong, &target).map_or(Ok(()), Err)
        });
        let status = (check.runner)(3);
        let witness = status.unwrap_err();
        assert!(witness.contains("q^0 r^0 s^0 t^0"), "{witness}");
        assert!(witness.contains("formula 4, brute force 3"), "{witness}");
    }

    #[test]
    fn budget_skips_are_reported() {
        let report = run(
            Some(&["CHAR:R(1212)".to_string()]),
            Some(9),
            Some(Duration::from_millis(0)),
        )
        .unwrap();
        assert!(report
            .records
            .iter()
            .all(|r| matches!(r.status, CheckStatus::Skipped { .. })));
        let (_, fail, skip) = report.counts();
        assert_eq!(fail, 0);
        assert_eq!(skip, report.records.len());
    }
}
