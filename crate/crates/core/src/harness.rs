//! Verification suites. Each check sweeps a finite corpus and returns a
//! [`CheckReport`]; theorem checks report `pass`/`fail`, conjecture checks
//! report `conjecture-consistent`/`conjecture-violated`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::digraphs::{
    collision_classes, promotion_digraph, promotion_digraphs, reconstruct_rect_increasing,
    reconstruct_standard, rotate_digraph, PromotionDigraph,
};
use crate::enumerate::{
    enumerate_flamingo_with, enumerate_increasing_with, enumerate_nc_partitions_with,
    enumerate_syt_with, partitions_of, Caps, EnumerateError,
};
use crate::noncrossing::{blocks_to_complete_digraphs, pi_bijection, rotate_partition};
use crate::plabic::{is_flamingo, partition_to_plabic, rotate_web, trip_digraph, PlabicGraph};
use crate::promotion::{
    balance_report, default_order_bound, k_promote, k_promote_2row_via_balance, promote_power,
    promote_standard, promote_standard_via_balance, promotion_order,
};
use crate::samples;
use crate::tableaux::{IncreasingTableau, Partition, StandardTableau, Tableau};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Digraph(#[from] crate::digraphs::DigraphError),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("web {index} is not a flamingo web")]
    NotFlamingo { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjectureConsistent,
    ConjectureViolated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub parameters: Value,
    pub instances_checked: u64,
    /// Counterexamples, smallest serialization first.
    pub failures: Vec<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Value>,
    pub status: Status,
    /// Omitted by [`CheckReport::without_timing`] so reports compare exactly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl CheckReport {
    pub fn is_conjecture(&self) -> bool {
        matches!(
            self.status,
            Status::ConjectureConsistent | Status::ConjectureViolated
        )
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_time_ms = None;
        self
    }
}

/// 0 when every theorem check passed and no conjecture was violated, 1 on a
/// theorem failure, 2 on a conjecture violation alone.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::ConjectureViolated) {
        2
    } else {
        0
    }
}

const MAX_RECORDED_FAILURES: usize = 20;

struct Sweep {
    instances: u64,
    failures: Vec<Value>,
}

fn sort_canonically(values: &mut [Value]) {
    values.sort_by_cached_key(|v| {
        let s = v.to_string();
        (s.len(), s)
    });
}

fn sweep<T: Sync>(items: &[T], check: impl Fn(&T) -> Option<Value> + Sync + Send) -> Sweep {
    let failures = items.par_iter().filter_map(check).collect();
    Sweep {
        instances: items.len() as u64,
        failures,
    }
}

struct Check {
    id: &'static str,
    parameters: Value,
    conjecture: bool,
    start: Instant,
}

impl Check {
    fn theorem(id: &'static str, parameters: Value) -> Self {
        Check {
            id,
            parameters,
            conjecture: false,
            start: Instant::now(),
        }
    }

    fn conjecture(id: &'static str, parameters: Value) -> Self {
        Check {
            conjecture: true,
            ..Check::theorem(id, parameters)
        }
    }

    fn finish(self, sweep: Sweep, mut findings: Vec<Value>) -> CheckReport {
        let Sweep {
            instances,
            mut failures,
        } = sweep;
        sort_canonically(&mut failures);
        if failures.len() > MAX_RECORDED_FAILURES {
            findings.push(json!({ "failures_total": failures.len() }));
            failures.truncate(MAX_RECORDED_FAILURES);
        }
        let status = match (self.conjecture, failures.is_empty()) {
            (false, true) => Status::Pass,
            (false, false) => Status::Fail,
            (true, true) => Status::ConjectureConsistent,
            (true, false) => Status::ConjectureViolated,
        };
        CheckReport {
            check_id: self.id.to_string(),
            parameters: self.parameters,
            instances_checked: instances,
            failures,
            findings,
            status,
            wall_time_ms: Some(self.start.elapsed().as_millis() as u64),
        }
    }
}

fn syt_of(shape: &Partition, caps: &Caps) -> Result<Vec<StandardTableau>, HarnessError> {
    Ok(enumerate_syt_with(shape, caps)?.collect())
}

fn all_syt(max_size: usize, caps: &Caps) -> Result<Vec<StandardTableau>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for shape in partitions_of(n) {
            out.extend(enumerate_syt_with(&shape, caps)?);
        }
    }
    Ok(out)
}

fn inc_of(
    shape: &Partition,
    q: u32,
    packed: bool,
    caps: &Caps,
) -> Result<Vec<IncreasingTableau>, HarnessError> {
    Ok(enumerate_increasing_with(shape, q, packed, caps)?.collect())
}

/// All of `Inc^q(2 × c)` for `q ≤ max_q` and `c ≤ min(max_cols, q − 1)`.
fn two_row_corpus(
    max_q: u32,
    max_cols: usize,
    caps: &Caps,
) -> Result<Vec<IncreasingTableau>, HarnessError> {
    let mut out = Vec::new();
    for q in 1..=max_q {
        for c in 0..=max_cols.min(q as usize - 1) {
            out.extend(inc_of(&Partition::rectangle(2, c), q, false, caps)?);
        }
    }
    Ok(out)
}

fn witness<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

/// `𝒫^{rk}` is the identity on `SYT(r × k)`.
pub fn check_order_rect_standard(r: usize, k: usize, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem("order-rect-standard", json!({ "r": r, "k": k }));
    let corpus = syt_of(&Partition::rectangle(r, k), caps)?;
    let n = r * k;
    let s = sweep(&corpus, |t| {
        let p = promote_power(t, n);
        (p != *t).then(|| json!({ "tableau": witness(t), "power": n, "result": witness(&p) }))
    });
    Ok(check.finish(s, Vec::new()))
}

fn prom_perm_defect(t: &StandardTableau, r: usize) -> Option<String> {
    let ds = match promotion_digraphs(t) {
        Ok(ds) => ds,
        Err(e) => return Some(e.to_string()),
    };
    let next = match promotion_digraphs(&promote_standard(t)) {
        Ok(ds) => ds,
        Err(e) => return Some(e.to_string()),
    };
    for i in 1..r {
        let d = &ds[i - 1];
        let Some(perm) = d.as_permutation() else {
            return Some(format!("prom_{i} is not a permutation"));
        };
        if perm.iter().enumerate().any(|(v, &w)| w as usize == v + 1) {
            return Some(format!("prom_{i} has a fixed point"));
        }
        if *d != ds[r - i - 1].reversed() {
            return Some(format!("prom_{i} is not the inverse of prom_{}", r - i));
        }
        if rotate_digraph(d) != next[i - 1] {
            return Some(format!("prom_{i} of the promotion is not the rotated prom_{i}"));
        }
    }
    if r % 2 == 0 {
        let d = &ds[r / 2 - 1];
        if d.reversed() != *d {
            return Some(format!("prom_{} is not an involution", r / 2));
        }
    }
    None
}

/// Permutation structure, inverse pairing, middle involution and rotation
/// law of the promotion digraphs of `SYT(r × k)`.
pub fn check_prom_perms(r: usize, k: usize, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem("prom-perms", json!({ "r": r, "k": k }));
    let corpus = syt_of(&Partition::rectangle(r, k), caps)?;
    let s = sweep(&corpus, |t| {
        prom_perm_defect(t, r).map(|reason| json!({ "tableau": witness(t), "reason": reason }))
    });
    Ok(check.finish(s, Vec::new()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReconstructionKind {
    Standard,
    RectIncreasing,
    NonrectIncreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionBounds {
    /// Largest `|λ|` (standard and nonrectangular kinds).
    pub max_size: usize,
    pub max_rows: usize,
    pub max_cols: usize,
    pub max_q: u32,
}

fn roundtrip_standard(t: &StandardTableau) -> Option<Value> {
    let result = promotion_digraphs(t)
        .map_err(|e| e.to_string())
        .and_then(|ds| reconstruct_standard(&ds, t.shape()).map_err(|e| e.to_string()));
    match result {
        Ok(u) if u == *t => None,
        Ok(u) => Some(json!({ "tableau": witness(t), "reconstructed": witness(&u) })),
        Err(e) => Some(json!({ "tableau": witness(t), "error": e })),
    }
}

fn roundtrip_rect(t: &IncreasingTableau) -> Option<Value> {
    let (r, c) = (t.shape().length(), t.shape().parts()[0]);
    let result = promotion_digraphs(t)
        .map_err(|e| e.to_string())
        .and_then(|ds| reconstruct_rect_increasing(&ds, r, c, t.q()).map_err(|e| e.to_string()));
    match result {
        Ok(u) if u == *t => None,
        Ok(u) => Some(json!({ "tableau": witness(t), "reconstructed": witness(&u) })),
        Err(e) => Some(json!({ "tableau": witness(t), "error": e })),
    }
}

fn rows_of(t: &IncreasingTableau) -> Value {
    json!(t.rows())
}

/// Reconstruction from promotion digraphs: roundtrips for standard and
/// rectangular increasing tableaux, collision classes otherwise.
pub fn check_reconstruction(
    kind: ReconstructionKind,
    bounds: ReconstructionBounds,
    caps: &Caps,
) -> Result<CheckReport, HarnessError> {
    let params = json!({ "kind": kind, "bounds": bounds });
    match kind {
        ReconstructionKind::Standard => {
            let check = Check::theorem("reconstruction-standard", params);
            let corpus = all_syt(bounds.max_size, caps)?;
            let s = sweep(&corpus, roundtrip_standard);
            Ok(check.finish(s, Vec::new()))
        }
        ReconstructionKind::RectIncreasing => {
            let check = Check::theorem("reconstruction-rect-increasing", params);
            let mut corpus = Vec::new();
            for r in 2..=bounds.max_rows {
                for c in 1..=bounds.max_cols {
                    for q in (r + c - 1) as u32..=bounds.max_q {
                        corpus.extend(inc_of(&Partition::rectangle(r, c), q, false, caps)?);
                    }
                }
            }
            let s = sweep(&corpus, roundtrip_rect);
            let mut findings = Vec::new();
            // One-row rectangles have no digraphs at all, so they are outside
            // the roundtrip; record the smallest collision as the reason.
            if bounds.max_rows >= 1 && bounds.max_q >= 2 {
                let one_row = inc_of(&Partition::rectangle(1, 1), 2, false, caps)?;
                if let Some(class) = collision_classes(one_row)?.into_iter().next() {
                    findings.push(json!({
                        "excluded": "one-row rectangles",
                        "reason": "no promotion digraphs, so distinct fillings collide",
                        "q": 2,
                        "collision": class.iter().map(rows_of).collect::<Vec<_>>(),
                    }));
                }
            }
            Ok(check.finish(s, findings))
        }
        ReconstructionKind::NonrectIncreasing => {
            let check = Check::theorem("reconstruction-nonrect-collisions", params);
            let mut instances = 0u64;
            let mut findings = Vec::new();
            let mut failures = Vec::new();
            for q in 1..=bounds.max_q {
                // Tableaux with the same number of rows have comparable tuples.
                let mut by_rows: BTreeMap<usize, Vec<IncreasingTableau>> = BTreeMap::new();
                for n in 1..=bounds.max_size {
                    for shape in partitions_of(n) {
                        if shape.is_rectangular() || shape.length() > bounds.max_rows {
                            continue;
                        }
                        let ts = inc_of(&shape, q, false, caps)?;
                        instances += ts.len() as u64;
                        by_rows.entry(shape.length()).or_default().extend(ts);
                    }
                }
                for (rows, ts) in by_rows {
                    let classes = collision_classes(ts).map_err(|e| {
                        failures.push(json!({ "q": q, "error": e.to_string() }));
                    });
                    let Ok(classes) = classes else { continue };
                    if let Some(largest) = classes.iter().max_by_key(|c| c.len()) {
                        findings.push(json!({
                            "q": q,
                            "rows": rows,
                            "classes": classes.len(),
                            "largest": largest.iter().map(rows_of).collect::<Vec<_>>(),
                        }));
                    }
                }
            }
            Ok(check.finish(Sweep { instances, failures }, findings))
        }
    }
}

/// Promotion through balance points agrees with sliding, on every SYT with
/// at most `max_size` boxes.
pub fn check_balance_standard(max_size: usize, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem("balance-standard", json!({ "max_size": max_size }));
    let corpus = all_syt(max_size, caps)?;
    let s = sweep(&corpus, |t| {
        let direct = promote_standard(t).lattice_word();
        let via = t
            .lattice_word()
            .and_then(|w| promote_standard_via_balance(&w));
        match (direct, via) {
            (Ok(a), Ok(b)) if a == b => None,
            (a, b) => Some(json!({
                "tableau": witness(t),
                "slide": a.map(|w| w.to_string()).unwrap_or_else(|e| e.to_string()),
                "balance": b.map(|w| w.to_string()).unwrap_or_else(|e| e.to_string()),
            })),
        }
    });
    Ok(check.finish(s, Vec::new()))
}

/// Two-row K-promotion through balance and teetering points agrees with
/// K-promotion by sliding on `Inc^q(2 × c)`, `q ≤ max_q`.
pub fn check_balance_two_row(max_q: u32, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem("balance-two-row", json!({ "max_q": max_q }));
    let corpus = two_row_corpus(max_q, usize::MAX, caps)?;
    let s = sweep(&corpus, |t| {
        let direct = k_promote(t).lattice_word();
        let via = t.lattice_word().and_then(|w| k_promote_2row_via_balance(&w));
        match (direct, via) {
            (Ok(a), Ok(b)) if a.letters() == b.letters() => None,
            (a, b) => Some(json!({
                "tableau": witness(t),
                "slide": a.map(|w| w.to_string()).unwrap_or_else(|e| e.to_string()),
                "balance": b.map(|w| w.to_string()).unwrap_or_else(|e| e.to_string()),
            })),
        }
    });
    Ok(check.finish(s, Vec::new()))
}

fn complete_digraph_defect(t: &IncreasingTableau) -> Option<String> {
    let q = t.q();
    let c = t.shape().parts().first().copied().unwrap_or(0);
    let p = match pi_bijection(t) {
        Ok(p) => p,
        Err(e) => return Some(e.to_string()),
    };
    if p.block_count() != q as usize - c {
        return Some(format!("{} blocks where q − c = {}", p.block_count(), q as usize - c));
    }
    match promotion_digraph(t, 1) {
        Ok(d) if d == blocks_to_complete_digraphs(&p) => {}
        Ok(_) => return Some("prom_1 is not the union of complete digraphs on the blocks".into()),
        Err(e) => return Some(e.to_string()),
    }
    match pi_bijection(&k_promote(t)) {
        Ok(next) if next == rotate_partition(&p) => {}
        Ok(_) => return Some("π does not intertwine promotion with rotation".into()),
        Err(e) => return Some(e.to_string()),
    }
    // The first block is read off from balance and teetering points.
    let w = match t.lattice_word() {
        Ok(w) => w,
        Err(e) => return Some(e.to_string()),
    };
    let b1 = p.block_of(1);
    let first_empty = w.letter(1).is_empty();
    if first_empty != (b1.len() == 1) {
        return Some("first letter empty ⇔ singleton first block fails".into());
    }
    if !first_empty {
        let report = balance_report(&w, 1);
        let jb = report.first_balance_point();
        if jb != b1.last().map(|&x| x as usize) {
            return Some(format!("first balance point {jb:?} is not max B₁"));
        }
        let jb = jb.unwrap();
        let teetering: Vec<usize> = report
            .teetering_points
            .iter()
            .copied()
            .filter(|&j| j < jb)
            .collect();
        let inner: Vec<usize> = b1[1..b1.len() - 1].iter().map(|&x| x as usize).collect();
        if teetering != inner {
            return Some(format!("teetering points {teetering:?} differ from B₁ interior {inner:?}"));
        }
    }
    None
}

/// On `Inc^q(2 × c)`: `prom_1` is the union of complete digraphs on the
/// blocks of `π(T)`, `π` is rotation-equivariant, `#blocks = q − c`, and the
/// first block is given by the balance and teetering points.
pub fn check_complete_digraphs(max_q: u32, max_cols: usize, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem(
        "complete-digraphs",
        json!({ "max_q": max_q, "max_cols": max_cols }),
    );
    let corpus = two_row_corpus(max_q, max_cols, caps)?;
    let s = sweep(&corpus, |t| {
        complete_digraph_defect(t).map(|reason| json!({ "tableau": witness(t), "reason": reason }))
    });
    Ok(check.finish(s, Vec::new()))
}

/// `trip_{1,2}` of the star web of `π(T)` equals `prom_1(T)` on `Inc^q(2 × c)`.
pub fn check_trip_eq_prom_2row(max_q: u32, max_cols: usize, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem(
        "trip-eq-prom-2row",
        json!({ "max_q": max_q, "max_cols": max_cols }),
    );
    let corpus = two_row_corpus(max_q, max_cols, caps)?;
    let s = sweep(&corpus, |t| {
        let result = pi_bijection(t).map_err(|e| e.to_string()).and_then(|p| {
            let trip = trip_digraph(&partition_to_plabic(&p), 1, 2).map_err(|e| e.to_string())?;
            let prom = promotion_digraph(t, 1).map_err(|e| e.to_string())?;
            Ok((trip.to_digraph(), prom))
        });
        match result {
            Ok((trip, prom)) if trip == prom => None,
            Ok((trip, prom)) => Some(json!({
                "tableau": witness(t),
                "trip": trip.edges(),
                "prom": prom.edges(),
            })),
            Err(e) => Some(json!({ "tableau": witness(t), "error": e })),
        }
    });
    Ok(check.finish(s, Vec::new()))
}

/// Conjecture: `𝒫^q = id` on `Inc^q(3 × c)`.
pub fn check_conjecture_3row(c: usize, q: u32, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::conjecture("conjecture-3row", json!({ "c": c, "q": q }));
    let corpus = inc_of(&Partition::rectangle(3, c), q, false, caps)?;
    let s = sweep(&corpus, |t| {
        let p = promote_power(t, q as usize);
        (p != *t).then(|| json!({ "tableau": witness(t), "result": witness(&p) }))
    });
    Ok(check.finish(s, Vec::new()))
}

/// Flamingo webs with at most `max_n` boundary vertices and `max_interior`
/// interior vertices, followed by the ten-boundary sample web.
pub fn flamingo_corpus(max_n: usize, max_interior: usize, caps: &Caps) -> Result<Vec<PlabicGraph>, HarnessError> {
    let pairs: Vec<(usize, usize)> = (3..=max_n).flat_map(|n| (1..=n / 3).map(move |k| (n, k))).collect();
    let batches: Vec<Result<Vec<PlabicGraph>, EnumerateError>> = pairs
        .par_iter()
        .map(|&(n, k)| enumerate_flamingo_with(n, k, max_interior, caps))
        .collect();
    let mut webs = Vec::new();
    for batch in batches {
        webs.extend(batch?);
    }
    let sample = samples::flamingo_web_ten();
    if !webs.contains(&sample) {
        webs.push(sample);
    }
    Ok(webs)
}

fn trip_pair(w: &PlabicGraph) -> Result<Vec<PromotionDigraph>, String> {
    (1..=2)
        .map(|i| {
            trip_digraph(w, i, 3)
                .map(|t| t.to_digraph().with_index(i))
                .map_err(|e| e.to_string())
        })
        .collect()
}

/// Conjecture: each flamingo web `W` with `n` boundary vertices has a tableau
/// `τ(W) ∈ Inc^n(3 × (n − 2k))` whose promotion digraphs are the trip
/// digraphs of `W`, compatibly with rotation, and distinct webs have
/// distinct trip digraphs. Injectivity is only checked within the corpus.
pub fn check_conjecture_trip_eq_prom(webs: &[PlabicGraph]) -> Result<CheckReport, HarnessError> {
    let check = Check::conjecture("conjecture-trip-eq-prom", json!({ "webs": webs.len() }));
    let mut ks = Vec::with_capacity(webs.len());
    for (index, w) in webs.iter().enumerate() {
        match is_flamingo(w) {
            (true, k) => ks.push(k),
            (false, _) => return Err(HarnessError::NotFlamingo { index }),
        }
    }
    let outcomes: Vec<Result<IncreasingTableau, String>> = webs
        .par_iter()
        .zip(ks.par_iter())
        .map(|(w, &k)| {
            let n = w.boundary_count();
            let c = n as i64 - 2 * k;
            if c < 1 {
                return Err(format!("n − 2k = {c} leaves no columns"));
            }
            let trips = trip_pair(w)?;
            let tau = reconstruct_rect_increasing(&trips, 3, c as usize, n as u32)
                .map_err(|e| format!("no tableau: {e}"))?;
            let rotated = trip_pair(&rotate_web(w))?;
            let promoted = promotion_digraphs(&k_promote(&tau)).map_err(|e| e.to_string())?;
            if rotated != promoted {
                return Err("rotated web does not match the promoted tableau".into());
            }
            Ok(tau)
        })
        .collect();
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut by_trips: BTreeMap<Vec<Vec<(u32, u32)>>, Vec<usize>> = BTreeMap::new();
    let mut tally: BTreeMap<(usize, i64), (usize, usize)> = BTreeMap::new();
    for (index, ((w, &k), outcome)) in webs.iter().zip(&ks).zip(&outcomes).enumerate() {
        let entry = tally.entry((w.boundary_count(), k)).or_default();
        entry.0 += 1;
        match outcome {
            Ok(tau) => {
                entry.1 += 1;
                findings.push(json!({ "web": index, "n": w.boundary_count(), "k": k, "tau": tau.rows() }));
            }
            Err(reason) => failures.push(json!({ "web": witness(w), "reason": reason })),
        }
        if let Ok(trips) = trip_pair(w) {
            by_trips
                .entry(trips.iter().map(|d| d.edges().to_vec()).collect())
                .or_default()
                .push(index);
        }
    }
    for group in by_trips.values().filter(|g| g.len() > 1) {
        failures.push(json!({
            "reason": "distinct webs share their trip digraphs",
            "webs": group.iter().map(|&i| witness(&webs[i])).collect::<Vec<_>>(),
        }));
    }
    for ((n, k), (total, consistent)) in tally {
        findings.push(json!({ "n": n, "k": k, "webs": total, "consistent": consistent }));
    }
    findings.push(json!({ "injectivity": "checked within this corpus only" }));
    Ok(check.finish(
        Sweep {
            instances: webs.len() as u64,
            failures,
        },
        findings,
    ))
}

fn in_frame(t: &IncreasingTableau, v: u32) -> bool {
    let rows = t.rows();
    let last = rows.len() - 1;
    rows[0].contains(&v)
        || rows[last].contains(&v)
        || rows.iter().any(|row| row[0] == v || row[row.len() - 1] == v)
}

/// Violated indegree statements for a packed rectangular tableau.
fn indegree_defects(t: &IncreasingTableau) -> Vec<String> {
    let r = t.shape().length();
    let q = t.q();
    let ds = match promotion_digraphs(t) {
        Ok(ds) => ds,
        Err(e) => return vec![e.to_string()],
    };
    let back = promote_power(t, q as usize);
    let mut out = Vec::new();
    for v in 1..=q {
        let indeg: Vec<usize> = ds.iter().map(|d| d.in_degree(v)).collect();
        let all_positive = indeg.iter().all(|&x| x > 0);
        let rows_now = t.rows_containing(v);
        if indeg.iter().any(|&x| x > 0) && rows_now.is_empty() {
            out.push(format!("vertex {v} has positive indegree but is absent"));
        }
        let rows_back = back.rows_containing(v);
        let returns_up = match (rows_back.iter().min(), rows_now.iter().max()) {
            (Some(&k2), Some(&k1)) => k2 <= k1,
            _ => false,
        };
        if returns_up && !all_positive {
            out.push(format!("vertex {v} returns weakly upward but has indegree 0"));
        }
        if back == *t && !all_positive {
            out.push(format!("𝒫^q(T) = T but vertex {v} has indegree 0"));
        }
        if indeg[0] == 0 || indeg[r - 2] == 0 {
            out.push(format!("vertex {v} has indegree 0 in prom_1 or prom_{}", r - 1));
        }
        if in_frame(t, v) && !all_positive {
            out.push(format!("frame value {v} has indegree 0"));
        }
        if rows_now.contains(&(r - 1)) && !all_positive {
            out.push(format!("value {v} in row {} has indegree 0", r - 1));
        }
        if r == 3 && !all_positive {
            out.push(format!("three-row tableau with indegree 0 at {v}"));
        }
    }
    out
}

/// Indegree statements on packed rectangular tableaux with at least two
/// rows, plus the pinned 4 × 10 tableau whose `prom_2` has an isolated sink.
pub fn check_indegree_suite(max_r: usize, max_c: usize, max_q: u32, caps: &Caps) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem(
        "indegree",
        json!({ "max_r": max_r, "max_c": max_c, "max_q": max_q }),
    );
    let mut corpus = Vec::new();
    for r in 2..=max_r {
        for c in 1..=max_c {
            let hi = max_q.min((r * c) as u32);
            for q in (r + c - 1) as u32..=hi {
                corpus.extend(inc_of(&Partition::rectangle(r, c), q, true, caps)?);
            }
        }
    }
    let mut s = sweep(&corpus, |t| {
        let defects = indegree_defects(t);
        (!defects.is_empty()).then(|| json!({ "tableau": witness(t), "reasons": defects }))
    });
    let golden = samples::increasing_4x10();
    let order = promotion_order(&golden, default_order_bound(golden.q()));
    let sink = promotion_digraph(&golden, 2).map(|d| d.in_degree(14));
    s.instances += 1;
    if order.as_ref().ok() != Some(&675) || sink.as_ref().ok() != Some(&0) {
        s.failures.push(json!({
            "tableau": witness(&golden),
            "order": format!("{order:?}"),
            "prom_2_indegree_14": format!("{sink:?}"),
        }));
    }
    let defects = indegree_defects(&golden);
    if !defects.is_empty() {
        s.failures.push(json!({ "tableau": witness(&golden), "reasons": defects }));
    }
    let findings = vec![json!({
        "golden": "4x10",
        "order": order.ok(),
        "prom_2_indegree_14": sink.ok(),
    })];
    Ok(check.finish(s, findings))
}

fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

fn hook_length(shape: &[usize]) -> u128 {
    let n: usize = shape.iter().sum();
    let num: u128 = (1..=n as u128).product();
    let den: u128 = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            (0..len).map(move |c| (len - c + shape[r + 1..].iter().filter(|&&l| l > c).count()) as u128)
        })
        .product();
    num / den
}

/// Enumerator counts against closed formulas: Catalan numbers for `2 × c`
/// standard tableaux and noncrossing partitions, hook lengths for
/// rectangles with at most `rect_max_cells` boxes.
pub fn check_counting(
    max_syt_cols: usize,
    max_nc_q: u32,
    rect_max_cells: usize,
    caps: &Caps,
) -> Result<CheckReport, HarnessError> {
    let check = Check::theorem(
        "counting",
        json!({ "max_syt_cols": max_syt_cols, "max_nc_q": max_nc_q, "rect_max_cells": rect_max_cells }),
    );
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut instances = 0;
    let mut compare = |family: String, found: u128, expected: u128| {
        instances += 1;
        let row = json!({ "family": family, "count": found, "expected": expected });
        if found != expected {
            failures.push(row.clone());
        }
        findings.push(row);
    };
    for c in 1..=max_syt_cols {
        let found = enumerate_syt_with(&Partition::rectangle(2, c), caps)?.count() as u128;
        compare(format!("SYT(2x{c})"), found, catalan(c) as u128);
    }
    for q in 1..=max_nc_q {
        let found = enumerate_nc_partitions_with(q, caps)?.count() as u128;
        compare(format!("NC({q})"), found, catalan(q as usize) as u128);
    }
    for r in 1..=rect_max_cells {
        for k in 1..=rect_max_cells / r {
            let found = enumerate_syt_with(&Partition::rectangle(r, k), caps)?.count() as u128;
            compare(format!("SYT({r}x{k})"), found, hook_length(&vec![k; r]));
        }
    }
    Ok(check.finish(Sweep { instances, failures }, findings))
}

/// Bounds for the whole suite; each is a CLI flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    pub rect_max_cells: usize,
    pub syt_max_size: usize,
    pub inc_rect_max_rows: usize,
    pub inc_rect_max_cols: usize,
    pub inc_rect_max_q: u32,
    pub nonrect_max_size: usize,
    pub nonrect_max_q: u32,
    pub balance_two_row_max_q: u32,
    pub two_row_max_q: u32,
    pub two_row_max_cols: usize,
    pub indegree_max_rows: usize,
    pub indegree_max_cols: usize,
    pub indegree_max_q: u32,
    pub conj3_max_cols: usize,
    pub conj3_max_q: u32,
    pub web_max_boundary: usize,
    pub web_max_interior: usize,
    pub catalan_syt_max_cols: usize,
    pub catalan_nc_max_q: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            rect_max_cells: 12,
            syt_max_size: 8,
            inc_rect_max_rows: 3,
            inc_rect_max_cols: 3,
            inc_rect_max_q: 8,
            nonrect_max_size: 4,
            nonrect_max_q: 5,
            balance_two_row_max_q: 8,
            two_row_max_q: 9,
            two_row_max_cols: 4,
            indegree_max_rows: 4,
            indegree_max_cols: 3,
            indegree_max_q: 9,
            conj3_max_cols: 3,
            conj3_max_q: 9,
            web_max_boundary: 9,
            web_max_interior: 8,
            catalan_syt_max_cols: 7,
            catalan_nc_max_q: 9,
        }
    }
}

impl SuiteConfig {
    /// Enumerator caps wide enough for every bound in the configuration.
    pub fn caps(&self) -> Caps {
        let q = [
            self.inc_rect_max_q,
            self.nonrect_max_q,
            self.balance_two_row_max_q,
            self.two_row_max_q,
            self.indegree_max_q,
            self.conj3_max_q,
            samples::increasing_4x10().q(),
        ]
        .into_iter()
        .max()
        .unwrap() as usize;
        Caps {
            max_syt_size: self
                .rect_max_cells
                .max(self.syt_max_size)
                .max(2 * self.catalan_syt_max_cols),
            max_q: q,
            max_cells: usize::MAX,
            max_nc: self.catalan_nc_max_q as usize,
            max_web_boundary: self.web_max_boundary,
            max_interior: self.web_max_interior,
        }
    }
}

/// Check ids in suite order: theorem checks, then conjectures.
pub const CHECK_IDS: &[&str] = &[
    "counting",
    "order-rect-standard",
    "prom-perms",
    "reconstruction-standard",
    "reconstruction-rect-increasing",
    "reconstruction-nonrect-collisions",
    "balance-standard",
    "balance-two-row",
    "complete-digraphs",
    "trip-eq-prom-2row",
    "indegree",
    "conjecture-3row",
    "conjecture-trip-eq-prom",
];

fn rectangles(max_cells: usize) -> Vec<(usize, usize)> {
    (1..=max_cells)
        .flat_map(|r| (1..=max_cells / r).map(move |k| (r, k)))
        .collect()
}

pub fn run_check(id: &str, cfg: &SuiteConfig) -> Result<Vec<CheckReport>, HarnessError> {
    let caps = cfg.caps();
    let one = |r: Result<CheckReport, HarnessError>| r.map(|x| vec![x]);
    match id {
        "counting" => one(check_counting(
            cfg.catalan_syt_max_cols,
            cfg.catalan_nc_max_q,
            cfg.rect_max_cells,
            &caps,
        )),
        "order-rect-standard" => rectangles(cfg.rect_max_cells)
            .into_iter()
            .map(|(r, k)| check_order_rect_standard(r, k, &caps))
            .collect(),
        "prom-perms" => rectangles(cfg.rect_max_cells)
            .into_iter()
            .map(|(r, k)| check_prom_perms(r, k, &caps))
            .collect(),
        "reconstruction-standard" | "reconstruction-rect-increasing" | "reconstruction-nonrect-collisions" => {
            let (kind, bounds) = match id {
                "reconstruction-standard" => (
                    ReconstructionKind::Standard,
                    ReconstructionBounds { max_size: cfg.syt_max_size, max_rows: 0, max_cols: 0, max_q: 0 },
                ),
                "reconstruction-rect-increasing" => (
                    ReconstructionKind::RectIncreasing,
                    ReconstructionBounds {
                        max_size: 0,
                        max_rows: cfg.inc_rect_max_rows,
                        max_cols: cfg.inc_rect_max_cols,
                        max_q: cfg.inc_rect_max_q,
                    },
                ),
                _ => (
                    ReconstructionKind::NonrectIncreasing,
                    ReconstructionBounds {
                        max_size: cfg.nonrect_max_size,
                        max_rows: cfg.nonrect_max_size,
                        max_cols: cfg.nonrect_max_size,
                        max_q: cfg.nonrect_max_q,
                    },
                ),
            };
            one(check_reconstruction(kind, bounds, &caps))
        }
        "balance-standard" => one(check_balance_standard(cfg.syt_max_size, &caps)),
        "balance-two-row" => one(check_balance_two_row(cfg.balance_two_row_max_q, &caps)),
        "complete-digraphs" => one(check_complete_digraphs(cfg.two_row_max_q, cfg.two_row_max_cols, &caps)),
        "trip-eq-prom-2row" => one(check_trip_eq_prom_2row(cfg.two_row_max_q, cfg.two_row_max_cols, &caps)),
        "indegree" => one(check_indegree_suite(
            cfg.indegree_max_rows,
            cfg.indegree_max_cols,
            cfg.indegree_max_q,
            &caps,
        )),
        "conjecture-3row" => (1..=cfg.conj3_max_cols)
            .flat_map(|c| ((c + 2) as u32..=cfg.conj3_max_q).map(move |q| (c, q)))
            .map(|(c, q)| check_conjecture_3row(c, q, &caps))
            .collect(),
        "conjecture-trip-eq-prom" => {
            let webs = flamingo_corpus(cfg.web_max_boundary, cfg.web_max_interior, &caps)?;
            one(check_conjecture_trip_eq_prom(&webs))
        }
        other => Err(HarnessError::UnknownCheck(other.to_string())),
    }
}

/// Runs the given checks in order, stopping after the first theorem failure.
pub fn run_suite(ids: &[&str], cfg: &SuiteConfig) -> Result<Vec<CheckReport>, HarnessError> {
    let mut reports = Vec::new();
    for id in ids {
        let batch = run_check(id, cfg)?;
        let failed = batch.iter().any(|r| r.status == Status::Fail);
        reports.extend(batch);
        if failed {
            break;
        }
    }
    Ok(reports)
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<CheckReport>, HarnessError> {
    run_suite(CHECK_IDS, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            rect_max_cells: 6,
            syt_max_size: 5,
            inc_rect_max_q: 5,
            two_row_max_q: 6,
            balance_two_row_max_q: 6,
            indegree_max_q: 6,
            indegree_max_cols: 2,
            conj3_max_q: 6,
            conj3_max_cols: 2,
            web_max_boundary: 6,
            web_max_interior: 4,
            catalan_syt_max_cols: 4,
            catalan_nc_max_q: 6,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn small_suite_passes() {
        let reports = run_all(&small()).unwrap();
        for r in &reports {
            assert!(
                matches!(r.status, Status::Pass | Status::ConjectureConsistent),
                "{}",
                serde_json::to_string(r).unwrap()
            );
        }
        assert_eq!(exit_code(&reports), 0);
        let ids: std::collections::BTreeSet<&str> = reports.iter().map(|r| r.check_id.as_str()).collect();
        assert_eq!(ids.len(), CHECK_IDS.len());
    }

    #[test]
    fn reports_are_reproducible_without_timing() {
        let cfg = small();
        let a: Vec<CheckReport> = run_check("prom-perms", &cfg).unwrap().into_iter().map(CheckReport::without_timing).collect();
        let b: Vec<CheckReport> = run_check("prom-perms", &cfg).unwrap().into_iter().map(CheckReport::without_timing).collect();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let line = serde_json::to_string(&a[0]).unwrap();
        assert!(!line.contains("wall_time_ms"));
        let back: CheckReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, a[0]);
    }

    #[test]
    fn exit_codes() {
        let report = |status| CheckReport {
            check_id: "x".into(),
            parameters: json!({}),
            instances_checked: 1,
            failures: Vec::new(),
            findings: Vec::new(),
            status,
            wall_time_ms: None,
        };
        assert_eq!(exit_code(&[report(Status::Pass), report(Status::ConjectureConsistent)]), 0);
        assert_eq!(exit_code(&[report(Status::ConjectureViolated)]), 2);
        assert_eq!(exit_code(&[report(Status::ConjectureViolated), report(Status::Fail)]), 1);
    }

    #[test]
    fn unknown_check() {
        assert!(matches!(
            run_check("nope", &SuiteConfig::default()),
            Err(HarnessError::UnknownCheck(_))
        ));
    }

    #[test]
    fn non_flamingo_web_is_rejected() {
        let g = samples::looping_web_five();
        assert!(matches!(
            check_conjecture_trip_eq_prom(&[g]),
            Err(HarnessError::NotFlamingo { index: 0 })
        ));
    }

    #[test]
    fn sample_web_is_consistent() {
        let report = check_conjecture_trip_eq_prom(&[samples::flamingo_web_ten()]).unwrap();
        assert_eq!(report.status, Status::ConjectureConsistent);
        assert_eq!(report.findings[0]["tau"], json!([[1, 2, 3, 6], [4, 5, 6, 9], [7, 8, 9, 10]]));
    }

    #[test]
    fn counterexample_marks_failure() {
        // A standard tableau is never fixed by a single promotion unless it is a single box.
        let check = Check::theorem("demo", json!({}));
        let t = samples::standard_333();
        let s = sweep(&[t], |t| (promote_standard(t) != *t).then(|| witness(t)));
        let report = check.finish(s, Vec::new());
        assert_eq!(report.status, Status::Fail);
        assert_eq!(report.failures.len(), 1);
    }
}
