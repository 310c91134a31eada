//! A fixed registry of exhaustive checks, each producing a [`VerifyReport`].

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::bruhat::{
    bcr_leq, bruhat_order, gauss_jordan, gj_leq, renner_poset, standard_form, IdempotentE,
    StandardFormOrder,
};
use crate::cosets::min_reps;
use crate::error::{Error, Result};
use crate::perm::{rook_monoid, symmetric_group, EnumerationLimits, Permutation, SimpleSubset};
use crate::poset::{ElSearchOutcome, FinitePoset, DEFAULT_EL_BUDGET};
use crate::putcha::{
    components_and_dims, nil_maximal_dcm, nil_subposet_maxima_dcm, nilpotent_by_support_mn,
    putcha_poset_dcm, putcha_poset_mn, Parity, RookIntervalMap,
};
use crate::weak::{
    count_covers, distributivity_conditions, weak_poset_w, wew_weak_dcm, wew_weak_mn_with, WeakKind,
};

pub const CLAIM_IDS: [&str; 12] = [
    "rook-interval",
    "comparator-agreement",
    "gj-transversal",
    "counting",
    "degree-iff",
    "dcm-degree-one",
    "lattice-distributive",
    "nilpotent-criterion",
    "nil-maximal",
    "eulerian",
    "el-shellable",
    "components-dims",
];

/// Poset names accepted by `--poset` for the `eulerian` and `el-shellable` claims.
pub const POSET_TARGETS: [&str; 9] = [
    "weak-left",
    "weak-right",
    "weak-lr",
    "wew-dcm",
    "wew-mn",
    "bruhat",
    "renner",
    "putcha-dcm",
    "putcha-mn",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    /// Witness on failure, reason when skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    /// Failure witnesses, one per failed check.
    pub witnesses: Vec<String>,
    /// Measurements that are reported rather than asserted.
    pub findings: Vec<String>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::SkippedBudget => 3,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(
            f,
            "{} [{}]: {} ({} checks, {} ms)",
            self.claim,
            params.join(" "),
            self.status,
            self.checks.len(),
            self.wall_time_ms
        )?;
        for c in &self.checks {
            match &c.detail {
                Some(d) => writeln!(f, "  {:<14} {}: {}", c.status, c.name, d)?,
                None => writeln!(f, "  {:<14} {}", c.status, c.name)?,
            }
        }
        for note in &self.findings {
            writeln!(f, "  finding: {note}")?;
        }
        Ok(())
    }
}

/// Parameters shared by all claims; unset fields select the default range.
#[derive(Clone, Debug)]
pub struct ClaimParams {
    /// Degree of `S_n` or `R_n`.
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub parity: Option<Parity>,
    /// Subset of `S` as given on the command line, parsed per degree.
    pub subset: Option<String>,
    /// Rank of `e_i` for `M_n` targets.
    pub i: Option<usize>,
    pub poset: Option<String>,
    /// Largest EL label; defaults to `2(n-1)`, the number of distinct moves.
    pub labels: Option<u32>,
    pub budget: u64,
    pub max_n: Option<usize>,
    pub limits: EnumerationLimits,
}

impl Default for ClaimParams {
    fn default() -> Self {
        ClaimParams {
            n: None,
            m: None,
            parity: None,
            subset: None,
            i: None,
            poset: None,
            labels: None,
            budget: DEFAULT_EL_BUDGET,
            max_n: None,
            limits: EnumerationLimits::default(),
        }
    }
}

impl ClaimParams {
    fn describe(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        let mut put = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.insert(k.to_string(), v);
            }
        };
        put("n", self.n.map(|v| v.to_string()));
        put("m", self.m.map(|v| v.to_string()));
        put(
            "parity",
            self.parity.map(|p| format!("{p:?}").to_lowercase()),
        );
        put("I", self.subset.clone());
        put("i", self.i.map(|v| v.to_string()));
        put("poset", self.poset.clone());
        put("labels", self.labels.map(|v| v.to_string()));
        put("max-n", self.max_n.map(|v| v.to_string()));
        out.insert("budget".into(), self.budget.to_string());
        out
    }

    /// `n` if given, else the default range; both capped by `max_n`.
    fn degrees(&self, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        let cap = self.max_n.unwrap_or(usize::MAX);
        match self.n {
            Some(n) => vec![n],
            None => default.filter(|&n| n <= cap).collect(),
        }
    }

    fn subsets(&self, n: usize) -> Result<Vec<SimpleSubset>> {
        match &self.subset {
            Some(s) => Ok(vec![SimpleSubset::parse(n, s)?]),
            None => Ok(SimpleSubset::all(n)),
        }
    }

    fn label_bound(&self, n: usize) -> u32 {
        self.labels
            .unwrap_or((2 * n.saturating_sub(1)).max(2) as u32)
    }
}

/// Collects check outcomes for one claim run.
#[derive(Default)]
struct Run {
    checks: Vec<CheckRecord>,
    findings: Vec<String>,
}

impl Run {
    fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let (status, detail) = if ok {
            (Status::Pass, None)
        } else {
            (Status::Fail, Some(witness()))
        };
        self.checks.push(CheckRecord {
            name: name.into(),
            status,
            detail,
        });
    }

    fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: Status::SkippedBudget,
            detail: Some(reason.into()),
        });
    }

    /// Enumeration limits become skipped checks; other errors propagate.
    fn attempt<T>(&mut self, name: &str, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e @ Error::EnumerationLimit { .. }) => {
                self.skip(name, e.to_string());
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self, claim: &str, params: &ClaimParams, start: Instant) -> VerifyReport {
        let status = if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.is_empty()
            || self
                .checks
                .iter()
                .any(|c| c.status == Status::SkippedBudget)
        {
            Status::SkippedBudget
        } else {
            Status::Pass
        };
        let witnesses = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .filter_map(|c| c.detail.clone())
            .collect();
        VerifyReport {
            claim: claim.to_string(),
            params: params.describe(),
            status,
            checks: self.checks,
            witnesses,
            findings: self.findings,
            wall_time_ms: start.elapsed().as_millis(),
        }
    }
}

/// Runs one claim. Unknown claims and malformed parameters are errors.
pub fn run_claim(claim: &str, params: &ClaimParams) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = Run::default();
    match claim {
        "rook-interval" => rook_interval(&mut run, params)?,
        "comparator-agreement" => comparator_agreement(&mut run, params)?,
        "gj-transversal" => gj_transversal(&mut run, params)?,
        "counting" => counting(&mut run, params)?,
        "degree-iff" => degree_iff(&mut run, params)?,
        "dcm-degree-one" => dcm_degree_one(&mut run, params)?,
        "lattice-distributive" => lattice_distributive(&mut run, params)?,
        "nilpotent-criterion" => nilpotent_criterion(&mut run, params)?,
        "nil-maximal" => nil_maximal(&mut run, params)?,
        "eulerian" => eulerian(&mut run, params)?,
        "el-shellable" => el_shellable(&mut run, params)?,
        "components-dims" => components_dims(&mut run, params)?,
        other => {
            return Err(Error::InvalidParameters(format!(
                "unknown claim {other:?}; expected one of {}",
                CLAIM_IDS.join(", ")
            )))
        }
    }
    if run.checks.is_empty() {
        run.skip("parameter range", "no parameters left under --max-n");
    }
    Ok(run.finish(claim, params, start))
}

/// Every claim at its default range, capped by `max_n`.
pub fn run_all(max_n: Option<usize>, budget: u64) -> Result<Vec<VerifyReport>> {
    CLAIM_IDS
        .iter()
        .map(|c| {
            let params = ClaimParams {
                max_n,
                budget,
                ..ClaimParams::default()
            };
            run_claim(c, &params)
        })
        .collect()
}

fn rook_interval(run: &mut Run, p: &ClaimParams) -> Result<()> {
    let cases: Vec<(usize, Parity)> = match (p.m, p.parity) {
        (Some(m), Some(par)) => vec![(m, par)],
        (Some(m), None) => vec![(m, Parity::Even), (m, Parity::Odd)],
        (None, fixed) => (1..=3)
            .flat_map(|m| [(m, Parity::Even), (m, Parity::Odd)])
            .filter(|&(_, par)| fixed.is_none_or(|f| f == par))
            .filter(|&(m, par)| {
                let n = if par == Parity::Even {
                    2 * m
                } else {
                    2 * m + 1
                };
                n <= p.max_n.unwrap_or(6).min(6)
            })
            .collect(),
    };
    for (m, parity) in cases {
        let tag = format!("m={m} {parity:?}").to_lowercase();
        let Some(map) = run.attempt(&tag, RookIntervalMap::new(m, parity, &p.limits))? else {
            continue;
        };
        let Some(rook) = run.attempt(&tag, renner_poset(m, &p.limits))? else {
            continue;
        };
        let c = putcha_poset_dcm(&map.i)?;
        let prefix = format!("{}:", crate::putcha::dcm_label(&map.i));
        let index: Vec<Option<usize>> = map
            .pairs
            .iter()
            .map(|(_, w)| c.index_of(&format!("{prefix}{w}")))
            .collect();
        let images: HashSet<usize> = index.iter().flatten().copied().collect();
        run.check(
            format!("{tag}: map is a bijection R_{m} -> D*(e_I), n={}", map.n),
            images.len() == c.len() && index.iter().all(Option::is_some),
            || format!("{} images for {} classes", images.len(), c.len()),
        );
        if images.len() != c.len() {
            continue;
        }
        let mut bad = None;
        'outer: for (a, (s, _)) in map.pairs.iter().enumerate() {
            for (b, (t, _)) in map.pairs.iter().enumerate() {
                let (ia, ib) = (index[a].expect("checked"), index[b].expect("checked"));
                if bcr_leq(s, t)? != c.leq(ia, ib) {
                    bad = Some(format!(
                        "{s} <= {t} is {} but {} <= {} is {}",
                        bcr_leq(s, t)?,
                        c.label(ia),
                        c.label(ib),
                        c.leq(ia, ib)
                    ));
                    break 'outer;
                }
            }
        }
        run.check(
            format!("{tag}: map is an order isomorphism (R_{m}, <=) -> C(e_I)"),
            bad.is_none(),
            || bad.unwrap_or_default(),
        );
        run.check(
            format!("{tag}: abstract isomorphism found"),
            rook.poset.are_isomorphic(&c).is_some(),
            || "no isomorphism".into(),
        );
        if (m, parity) == (2, Parity::Odd) {
            let bottom = c.bottom().map(|b| c.label(b).to_string());
            run.check(
                "m=2 odd: 7 classes, 9 covers, bottom e_{1,2}:14523",
                c.len() == 7 && c.covers().len() == 9 && bottom.as_deref() == Some("e_{1,2}:14523"),
                || {
                    format!(
                        "{} classes, {} covers, bottom {bottom:?}",
                        c.len(),
                        c.covers().len()
                    )
                },
            );
        }
    }
    Ok(())
}

fn comparator_agreement(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(1..=4) {
        let Some(r) = run.attempt(&format!("R_{n}"), rook_monoid(n, &p.limits))? else {
            continue;
        };
        let forms: Vec<_> = r.iter().map(standard_form).collect();
        let mut order = StandardFormOrder::new();
        let mut bad = None;
        'outer: for (a, x) in r.iter().enumerate() {
            for (b, y) in r.iter().enumerate() {
                let direct = bcr_leq(x, y)?;
                if direct != order.leq(&forms[a], &forms[b])? {
                    bad = Some(format!("{x} <= {y}: prefix criterion says {direct}"));
                    break 'outer;
                }
            }
        }
        run.check(
            format!("R_{n}: bcr_leq = bcr_leq_sf on {} pairs", r.len() * r.len()),
            bad.is_none(),
            || bad.unwrap_or_default(),
        );
        let gj = gauss_jordan(n, &p.limits)?;
        let mut bad = None;
        'gj: for g in &gj {
            for h in &gj {
                let direct = bcr_leq(&g.element, &h.element)?;
                if direct != gj_leq(&g.e, &g.x, &h.e, &h.x)? {
                    bad = Some(format!(
                        "{} <= {}: prefix criterion says {direct}",
                        g.element, h.element
                    ));
                    break 'gj;
                }
            }
        }
        run.check(
            format!("GJ({n}): gj_leq = bcr_leq on {} pairs", gj.len() * gj.len()),
            bad.is_none(),
            || bad.unwrap_or_default(),
        );
    }
    Ok(())
}

fn gj_transversal(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(1..=5) {
        let tag = format!("n={n}");
        let Some(r) = run.attempt(&tag, rook_monoid(n, &p.limits))? else {
            continue;
        };
        let group = symmetric_group(n, &p.limits)?;
        let gj = gauss_jordan(n, &p.limits)?;
        let gj_set: HashSet<_> = gj.iter().map(|g| g.element.clone()).collect();
        let mut bad = None;
        for x in &r {
            let hits: BTreeSet<_> = group
                .iter()
                .map(|w| x.left_mul(w))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|y| gj_set.contains(y))
                .collect();
            if hits.len() != 1 {
                bad = Some(format!("|W.{x} ∩ GJ| = {}", hits.len()));
                break;
            }
        }
        run.check(
            format!("{tag}: |W.x ∩ GJ| = 1 for all {} x in R_{n}", r.len()),
            bad.is_none(),
            || bad.unwrap_or_default(),
        );
        let mut union = HashSet::new();
        let mut total = 0;
        for e in IdempotentE::all(n) {
            for d in min_reps(&e.lambda())? {
                total += 1;
                union.insert(e.to_partial().right_mul(&d.inverse())?);
            }
        }
        run.check(
            format!("{tag}: GJ is the disjoint union of e_i D(e_i)^-1"),
            union.len() == total && union == gj_set,
            || {
                format!(
                    "{} products, {} distinct, |GJ| = {}",
                    total,
                    union.len(),
                    gj_set.len()
                )
            },
        );
    }
    Ok(())
}

fn counting(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for d in p.degrees(2..=7) {
        let tag = format!("S_{d}");
        let Some(c) = run.attempt(&tag, count_covers(d, &p.limits))? else {
            continue;
        };
        let n = d - 1;
        let fact: usize = (1..=n).product();
        run.check(
            format!("{tag}: covers = n^2 n! = {}", n * n * fact),
            c.total == n * n * fact,
            || format!("counted {}", c.total),
        );
        run.check(
            format!("{tag}: degree-2 covers = n n! = {}", n * fact),
            c.degree_two == n * fact,
            || format!("counted {}", c.degree_two),
        );
        let w = weak_poset_w(d, WeakKind::TwoSided, &p.limits)?;
        let doubled: BTreeSet<(String, String)> = w
            .edges
            .iter()
            .filter(|e| e.degree == 2)
            .map(|e| {
                (
                    w.poset.label(e.lower).to_string(),
                    w.poset.label(e.upper).to_string(),
                )
            })
            .collect();
        let mut ascents = BTreeSet::new();
        for x in symmetric_group(d, &p.limits)? {
            for i in 1..d {
                if x.images()[i] == x.images()[i - 1] + 1 {
                    ascents.insert((x.to_string(), x.right_simple(i)?.to_string()));
                }
            }
        }
        run.check(
            format!("{tag}: degree-2 covers are exactly the small ascents"),
            doubled == ascents,
            || {
                let extra = doubled.symmetric_difference(&ascents).next();
                format!("mismatch at {extra:?}")
            },
        );
        let bad_degree = w
            .edges
            .iter()
            .find(|e| e.degree > 2 || e.has_same_side_multiplicity());
        run.check(
            format!("{tag}: no cover has two moves on the same side"),
            bad_degree.is_none(),
            || format!("{bad_degree:?}"),
        );
        if d == 4 {
            let moves = w
                .poset
                .index_of("1234")
                .zip(w.poset.index_of("2134"))
                .and_then(|(x, y)| w.edge(x, y))
                .map(|e| e.moves.iter().map(|m| m.to_string()).collect::<Vec<_>>());
            run.check(
                "S_4: (1234, 2134) is doubled by moves L1, R1",
                moves.as_deref() == Some(&["L1".to_string(), "R1".to_string()][..]),
                || format!("moves {moves:?}"),
            );
        }
    }
    Ok(())
}

fn degree_iff(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(2..=4) {
        let Some(renner) = run.attempt(&format!("R_{n}"), renner_poset(n, &p.limits))? else {
            continue;
        };
        let ranks: Vec<usize> = match p.i {
            Some(i) => vec![i],
            None => (0..=n).collect(),
        };
        for i in ranks {
            let tag = format!("R_{n}, e_{i}");
            let m = wew_weak_mn_with(&renner, i)?;
            let expected = i >= 2;
            run.check(
                format!("{tag}: degree-2 cover exists iff i >= 2 (expect {expected})"),
                m.has_degree_two() == expected,
                || format!("degree-2 witness {:?}", m.degree_two_witness()),
            );
            run.check(
                format!("{tag}: lambda^*(e) nonempty iff i >= 2"),
                m.lambda_upper_nonempty == expected,
                || format!("lambda^* nonempty = {}", m.lambda_upper_nonempty),
            );
            if i == 1 {
                run.check(
                    format!("{tag}: (We_1W, <=_LR) isomorphic to (We_1W, <=)"),
                    m.weak.poset.are_isomorphic(&m.bcr).is_some(),
                    || "no isomorphism".into(),
                );
            }
            if i == n {
                let w = weak_poset_w(n, WeakKind::TwoSided, &p.limits)?;
                let units = &m.weak.poset;
                run.check(
                    format!("{tag}: units reduce to (S_{n}, <=_LR)"),
                    units.labels() == w.poset.labels() && units.same_relation(&w.poset),
                    || "relations differ".into(),
                );
            }
            let multi = m
                .weak
                .edges
                .iter()
                .filter(|e| e.has_same_side_multiplicity())
                .count();
            let max_moves = m
                .weak
                .edges
                .iter()
                .map(|e| e.moves.len())
                .max()
                .unwrap_or(0);
            if multi > 0 || !m.weak.non_cover_moves.is_empty() {
                run.findings.push(format!(
                    "{tag}: {multi} covers with repeated same-side moves, {} non-cover moves, at most {max_moves} moves per cover",
                    m.weak.non_cover_moves.len()
                ));
            }
        }
    }
    Ok(())
}

fn dcm_subsets(p: &ClaimParams, n: usize) -> Result<Vec<SimpleSubset>> {
    Ok(p.subsets(n)?.into_iter().filter(|i| !i.is_full()).collect())
}

fn dcm_degree_one(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(2..=5) {
        if n > p.limits.max_symmetric {
            run.skip(format!("S_{n}"), "enumeration limit");
            continue;
        }
        for i in dcm_subsets(p, n)? {
            let tag = format!("S_{n}, I={i}");
            let wew = wew_weak_dcm(&i)?;
            run.check(
                format!("{tag}: (WeW, <=_LR) is a lattice"),
                wew.is_lattice(),
                || {
                    let (x, y) = wew.weak.poset.lattice_witness().unwrap_or((0, 0));
                    format!(
                        "no join for {} and {}",
                        wew.weak.poset.label(x),
                        wew.weak.poset.label(y)
                    )
                },
            );
            run.check(
                format!("{tag}: equals (D_I, <=_L) x (D_I, <=_L)^op"),
                wew.matches_product_model()?,
                || "cover sets differ".into(),
            );
            let thick = wew.weak.edges.iter().find(|e| e.degree != 1);
            run.check(
                format!("{tag}: every cover has degree 1"),
                thick.is_none(),
                || {
                    let e = thick.expect("failing edge");
                    format!(
                        "{} -> {} has moves {:?}",
                        wew.weak.poset.label(e.lower),
                        wew.weak.poset.label(e.upper),
                        e.moves
                    )
                },
            );
            let grading = wew.weak.poset.grading();
            run.check(
                format!("{tag}: graded by l(a) + maxlen - l(b)"),
                grading.graded && grading.ranks == wew.ranks,
                || {
                    grading
                        .witness
                        .unwrap_or_else(|| "rank function differs".into())
                },
            );
        }
    }
    Ok(())
}

fn lattice_distributive(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(2..=5) {
        if n > p.limits.max_symmetric {
            run.skip(format!("S_{n}"), "enumeration limit");
            continue;
        }
        let mut holding = Vec::new();
        for i in dcm_subsets(p, n)? {
            let wew = wew_weak_dcm(&i)?;
            let c = distributivity_conditions(&i, &wew)?;
            run.check(
                format!("S_{n}, I={i}: five conditions agree (all {})", c.minuscule),
                c.all_equivalent(),
                || format!("{c:?}"),
            );
            if c.bruhat_lattice {
                holding.push(i.to_string());
            }
        }
        run.findings.push(format!(
            "S_{n}: conditions hold for I in [{}]",
            holding.join(", ")
        ));
    }
    Ok(())
}

fn nilpotent_criterion(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(1..=5) {
        let Some(mn) = run.attempt(&format!("M_{n}"), putcha_poset_mn(n, &p.limits))? else {
            continue;
        };
        let mut bad = None;
        let mut members = 0;
        for class in &mn.classes {
            for g in &class.members {
                members += 1;
                let power = g.element.is_nilpotent();
                if power != nilpotent_by_support_mn(&g.e, &g.x) || power != class.nilpotent {
                    bad = Some(format!("{}: power iteration says {power}", g.element));
                }
            }
        }
        run.check(
            format!(
                "M_{n}: power iteration = support criterion on {} classes ({members} GJ elements)",
                mn.classes.len()
            ),
            bad.is_none(),
            || bad.unwrap_or_default(),
        );
    }
    Ok(())
}

fn nil_maximal(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(2..=5) {
        if n > p.limits.max_symmetric {
            run.skip(format!("S_{n}"), "enumeration limit");
            continue;
        }
        let mut bad = Vec::new();
        let subsets = p.subsets(n)?;
        for k in &subsets {
            let claimed = nil_maximal_dcm(k, &p.limits)?;
            let computed = nil_subposet_maxima_dcm(k)?;
            if computed != claimed.maxima {
                bad.push(format!(
                    "K={k}: poset maxima {computed:?}, linear {:?}",
                    claimed.maxima
                ));
            } else if (computed.len() == 1) != claimed.unique {
                bad.push(format!(
                    "K={k}: {} maxima but commuting = {}",
                    computed.len(),
                    claimed.unique
                ));
            }
        }
        run.check(
            format!(
                "S_{n}: nil maxima = linear elements with support S\\K, {} subsets",
                subsets.len()
            ),
            bad.is_empty(),
            || bad.join("; "),
        );
    }
    Ok(())
}

fn components_dims(run: &mut Run, p: &ClaimParams) -> Result<()> {
    for n in p.degrees(2..=5) {
        let dim_g0 = n * n - 1;
        let Some(data) =
            run.attempt(&format!("S_{n}"), components_and_dims(n, dim_g0, &p.limits))?
        else {
            continue;
        };
        let mut coxeter = HashSet::new();
        for word in orderings(n - 1) {
            coxeter.insert(Permutation::from_word(n, &word)?);
        }
        run.check(
            format!(
                "S_{n}: {} components = Coxeter elements by word enumeration",
                data.components.len()
            ),
            data.components.len() == coxeter.len()
                && data.components.iter().all(|(v, _)| coxeter.contains(v)),
            || {
                format!(
                    "{} components, {} Coxeter elements",
                    data.components.len(),
                    coxeter.len()
                )
            },
        );
        let expected = dim_g0 - (n - 1);
        let off = data.components.iter().find(|(_, d)| *d != expected);
        run.check(
            format!("S_{n}: every component has dimension (n^2-1)-(n-1) = {expected}"),
            off.is_none() && data.expected_dimension == expected,
            || format!("{off:?}"),
        );
    }
    Ok(())
}

/// All orderings of `1..=k`.
fn orderings(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=k)
                    .filter(|s| !w.contains(s))
                    .map(|s| {
                        let mut v = w.clone();
                        v.push(s);
                        v
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// A named poset with the degree used for its default label bound.
struct Target {
    name: String,
    n: usize,
    poset: FinitePoset,
}

fn targets(p: &ClaimParams, defaults: &[(&str, usize)]) -> Result<Vec<Target>> {
    let specs: Vec<(String, usize)> = match (&p.poset, p.n) {
        (Some(kind), Some(n)) => vec![(kind.clone(), n)],
        (Some(kind), None) => defaults
            .iter()
            .map(|&(_, n)| (kind.clone(), n))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
        (None, n) => defaults
            .iter()
            .filter(|&&(_, d)| n.is_none_or(|n| n == d))
            .map(|&(k, d)| (k.to_string(), d))
            .collect(),
    };
    let cap = p.max_n.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for (kind, n) in specs {
        if p.n.is_none() && n > cap {
            continue;
        }
        out.extend(build_targets(&kind, n, p)?);
    }
    Ok(out)
}

fn build_targets(kind: &str, n: usize, p: &ClaimParams) -> Result<Vec<Target>> {
    let lim = &p.limits;
    let one = |name: String, poset: FinitePoset| Ok(vec![Target { name, n, poset }]);
    match kind {
        "weak-left" => one(
            format!("(S_{n}, <=_L)"),
            weak_poset_w(n, WeakKind::Left, lim)?.poset,
        ),
        "weak-right" => one(
            format!("(S_{n}, <=_R)"),
            weak_poset_w(n, WeakKind::Right, lim)?.poset,
        ),
        "weak-lr" => one(
            format!("(S_{n}, <=_LR)"),
            weak_poset_w(n, WeakKind::TwoSided, lim)?.poset,
        ),
        "bruhat" => one(format!("(S_{n}, <=)"), bruhat_order(n, lim)?),
        "renner" => one(format!("(R_{n}, <=)"), renner_poset(n, lim)?.poset),
        "putcha-mn" => one(format!("C(M_{n})"), putcha_poset_mn(n, lim)?.poset),
        "wew-dcm" | "putcha-dcm" => {
            if n > lim.max_symmetric {
                return Err(Error::EnumerationLimit {
                    what: "symmetric group",
                    n,
                    max: lim.max_symmetric,
                });
            }
            p.subsets(n)?
                .into_iter()
                .map(|i| {
                    let (name, poset) = if kind == "wew-dcm" {
                        (format!("S_{n} WeW, I={i}"), wew_weak_dcm(&i)?.weak.poset)
                    } else {
                        (format!("S_{n} C(e_I), I={i}"), putcha_poset_dcm(&i)?)
                    };
                    Ok(Target { name, n, poset })
                })
                .collect()
        }
        "wew-mn" => {
            let renner = renner_poset(n, lim)?;
            let ranks: Vec<usize> = match p.i {
                Some(i) => vec![i],
                None => (0..=n).collect(),
            };
            ranks
                .into_iter()
                .map(|i| {
                    Ok(Target {
                        name: format!("R_{n} We_{i}W"),
                        n,
                        poset: wew_weak_mn_with(&renner, i)?.weak.poset,
                    })
                })
                .collect()
        }
        other => Err(Error::InvalidParameters(format!(
            "unknown poset {other:?}; expected one of {}",
            POSET_TARGETS.join(", ")
        ))),
    }
}

const FINAL_THEOREM_TARGETS: [(&str, usize); 4] = [
    ("weak-lr", 3),
    ("weak-lr", 4),
    ("wew-dcm", 3),
    ("wew-dcm", 4),
];

fn eulerian(run: &mut Run, p: &ClaimParams) -> Result<()> {
    let Some(targets) = run.attempt("targets", targets(p, &FINAL_THEOREM_TARGETS))? else {
        return Ok(());
    };
    for t in targets {
        let report = t.poset.eulerian();
        match report {
            Ok(r) => run.check(format!("{} is Eulerian", t.name), r.eulerian, || {
                let w = r.witness.unwrap_or_default();
                format!(
                    "interval [{}, {}] = {{{}}} has {} even and {} odd ranks",
                    w.first().map(String::as_str).unwrap_or(""),
                    w.last().map(String::as_str).unwrap_or(""),
                    w.join(", "),
                    r.even,
                    r.odd
                )
            }),
            Err(e) => run.check(format!("{} is Eulerian", t.name), false, || e.to_string()),
        }
    }
    Ok(())
}

fn el_shellable(run: &mut Run, p: &ClaimParams) -> Result<()> {
    let Some(targets) = run.attempt("targets", targets(p, &FINAL_THEOREM_TARGETS))? else {
        return Ok(());
    };
    let mut seen: HashMap<String, usize> = HashMap::new();
    for t in targets {
        *seen.entry(t.name.clone()).or_default() += 1;
        let bound = p.label_bound(t.n);
        let name = format!("{} has an EL-labeling with labels 1..={bound}", t.name);
        match t.poset.el_search(bound, p.budget) {
            Ok(ElSearchOutcome::Found(_)) => run.check(name, true, String::new),
            Ok(ElSearchOutcome::NoneForLabels { interval, .. }) => {
                run.check(name, false, || match interval {
                    Some((lo, hi)) => format!("interval [{lo}, {hi}] admits no EL-labeling"),
                    None => "search space exhausted".into(),
                })
            }
            Ok(ElSearchOutcome::BudgetExceeded { nodes }) => {
                run.skip(name, format!("budget exhausted after {nodes} nodes"))
            }
            Err(e) => run.check(name, false, || e.to_string()),
        }
    }
    Ok(())
}
