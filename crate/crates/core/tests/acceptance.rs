use std::process::ExitCode;
use std::time::{Duration, Instant};

use boundrep::cli::{run_bench, BenchSolver};
use boundrep::gen::{generate, GenKind};
use boundrep::model::json::instance_to_json;
use boundrep::model::slots::EndpointTable;
use boundrep::model::{check_representation, normalize_bounds, Bound, BoundPair, Coord, ExtCoord, Graph, GraphClass, Instance, Representation};
use boundrep::oracle::{brute_force_solve, enumerate_representations, enumerate_small_instances, exists, OracleAnswer, SearchOptions, Side, SmallCounts};
use boundrep::proper::{component_handles, leftmost_representation, solve_bounded_proper_detailed, ReducedComponent};
use boundrep::{interval, proper};
use rayon::prelude::*;

const SEED: u64 = 2024;

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, id: u32, ok: bool, what: &str, detail: String) {
        println!("criterion {id} {}: {what} ({detail})", if ok { "PASS" } else { "FAIL" });
        self.failed += usize::from(!ok);
    }
}

struct Row {
    inst: Instance,
    int_sat: bool,
    int_oracle: bool,
    proper_sat: bool,
    proper_oracle: bool,
    witnesses: usize,
    invalid: usize,
}

fn judge(inst: Instance) -> Row {
    let int = inst.with_class(GraphClass::Int);
    let pi = inst.with_class(GraphClass::ProperInt);
    let a = interval::solve_bounded_interval(&int);
    let b = proper::solve_bounded_proper(&pi);
    let oi = brute_force_solve(&int).expect("corpus within oracle limit");
    let op = brute_force_solve(&pi).expect("corpus within oracle limit");
    let mut witnesses = 0;
    let mut invalid = 0;
    let sols = [(&int, a.as_ref().ok()), (&pi, b.as_ref().ok())];
    let orcs = [(&int, sat_rep(&oi)), (&pi, sat_rep(&op))];
    for (i, rep) in sols.into_iter().chain(orcs) {
        if let Some(rep) = rep {
            witnesses += 1;
            invalid += usize::from(!check_representation(i, rep).is_valid());
        }
    }
    Row { int_sat: a.is_ok(), int_oracle: oi.is_sat(), proper_sat: b.is_ok(), proper_oracle: op.is_sat(), witnesses, invalid, inst }
}

fn sat_rep(a: &OracleAnswer) -> Option<&Representation> {
    match a {
        OracleAnswer::Sat(r) => Some(r),
        OracleAnswer::Unsat => None,
    }
}

fn first_mismatch(rows: &[Row], f: impl Fn(&Row) -> bool) -> String {
    rows.iter().find(|r| f(r)).map(|r| format!("; first {}", instance_to_json(&r.inst))).unwrap_or_default()
}

fn bp(l: (i64, i64), r: (i64, i64)) -> BoundPair {
    BoundPair::new(Bound::ints(l.0, l.1), Bound::ints(r.0, r.1))
}

/// Slot of a coordinate among the finite bound endpoints of `table`.
fn slot(table: &EndpointTable, c: &Coord) -> u32 {
    match table.values().binary_search(c) {
        Ok(i) => 2 * i as u32 + 1,
        Err(i) => 2 * i as u32,
    }
}

fn strictly_ordered(rep: &Representation) -> bool {
    rep.intervals.windows(2).all(|w| w[0].lo < w[1].lo && w[0].hi < w[1].hi)
}

fn pointwise_min(a: &Representation, b: &Representation) -> Representation {
    Representation::new(
        a.intervals
            .iter()
            .zip(&b.intervals)
            .map(|(x, y)| boundrep::model::Interval::new(x.lo.clone().min(y.lo.clone()), x.hi.clone().min(y.hi.clone())))
            .collect(),
    )
}

#[derive(Default)]
struct LeftmostStats {
    components: usize,
    cap_queries: usize,
    meets: usize,
    failures: Vec<String>,
}

fn check_leftmost(red: &ReducedComponent) -> LeftmostStats {
    let mut st = LeftmostStats { components: 1, ..LeftmostStats::default() };
    let inst = red.to_instance();
    let k = red.len();
    let lm = match leftmost_representation(red, &ExtCoord::NegInf) {
        Ok(lm) => Representation::new(lm.intervals),
        Err(e) => {
            st.failures.push(format!("no leftmost rep ({e}) for {}", instance_to_json(&inst)));
            return st;
        }
    };
    if !check_representation(&inst, &lm).is_valid() || !strictly_ordered(&lm) {
        st.failures.push(format!("leftmost rep invalid for {}", instance_to_json(&inst)));
        return st;
    }
    let order: Vec<usize> = (0..k).collect();
    let table = EndpointTable::from_instance(&inst);
    for (v, iv) in lm.intervals.iter().enumerate() {
        for (side, c) in [(Side::Left, &iv.lo), (Side::Right, &iv.hi)] {
            let opts = SearchOptions { strict_order: Some(order.clone()), cap: Some((v, side, slot(&table, c))) };
            st.cap_queries += 1;
            if exists(&inst, &opts).expect("reduced component within oracle limit") {
                st.failures.push(format!("endpoint {v} {side:?} not leftmost in {}", instance_to_json(&inst)));
            }
        }
    }
    let opts = SearchOptions { strict_order: Some(order), cap: None };
    let reps = enumerate_representations(&inst, &opts, 12).expect("reduced component within oracle limit");
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            st.meets += 1;
            let m = pointwise_min(a, b);
            if !check_representation(&inst, &m).is_valid() || !strictly_ordered(&m) {
                st.failures.push(format!("meet invalid in {}", instance_to_json(&inst)));
            }
        }
    }
    st
}

fn handle_violations(inst: &Instance) -> (usize, usize) {
    let (comps, lower, upper) = component_handles(inst);
    let mut pairs = 0;
    let mut bad = 0;
    for a in 0..comps.len() {
        for b in 0..comps.len() {
            if a == b {
                continue;
            }
            pairs += 1;
            let pairwise = comps[a].iter().any(|&u| comps[b].iter().any(|&v| inst.bounds[u].left.hi <= inst.bounds[v].right.lo));
            bad += usize::from(pairwise != (lower[a] <= upper[b]));
        }
    }
    (pairs, bad)
}

fn main() -> ExitCode {
    let mut rep = Report { failed: 0 };
    let t = Instant::now();
    let corpus = enumerate_small_instances(SEED, &SmallCounts::default());
    let rows: Vec<Row> = corpus.into_par_iter().map(judge).collect();
    let corpus_time = t.elapsed();

    let int_bad = rows.iter().filter(|r| r.int_sat != r.int_oracle).count();
    let int_sat = rows.iter().filter(|r| r.int_oracle).count();
    rep.line(
        1,
        int_bad == 0 && corpus_time <= Duration::from_secs(600),
        "INT solver agrees with the oracle",
        format!("{} instances, {} SAT, {} mismatches, {:.1}s{}", rows.len(), int_sat, int_bad, corpus_time.as_secs_f64(), first_mismatch(&rows, |r| r.int_sat != r.int_oracle)),
    );

    let pr_bad = rows.iter().filter(|r| r.proper_sat != r.proper_oracle).count();
    let pr_sat = rows.iter().filter(|r| r.proper_oracle).count();
    rep.line(
        2,
        pr_bad == 0,
        "PROPER INT solver agrees with the oracle",
        format!("{} instances, {} SAT, {} mismatches{}", rows.len(), pr_sat, pr_bad, first_mismatch(&rows, |r| r.proper_sat != r.proper_oracle)),
    );

    let witnesses: usize = rows.iter().map(|r| r.witnesses).sum();
    let invalid: usize = rows.iter().map(|r| r.invalid).sum();
    rep.line(3, invalid == 0, "every SAT witness validates", format!("{witnesses} witnesses, {invalid} invalid"));

    let pinned_k3 = Instance::new(Graph::complete(3), vec![bp((0, 0), (3, 3)), bp((0, 0), (3, 3)), bp((1, 1), (2, 2))], GraphClass::Int).unwrap();
    let pinned_p = pinned_k3.with_class(GraphClass::ProperInt);
    let int_out = interval::solve_bounded_interval(&pinned_k3);
    let int_ok = int_out.as_ref().is_ok_and(|r| check_representation(&pinned_k3, r).is_valid());
    let pr_unsat = proper::solve_bounded_proper(&pinned_p).is_err();
    let oi = brute_force_solve(&pinned_k3).unwrap().is_sat();
    let op = brute_force_solve(&pinned_p).unwrap().is_sat();
    rep.line(
        4,
        int_ok && pr_unsat && oi && !op,
        "K3 with the inner interval pinned: INT SAT, PROPER INT UNSAT",
        format!("int {int_ok}, proper unsat {pr_unsat}, oracle int {oi}, oracle proper {op}"),
    );

    let c4 = Instance::unbounded(Graph::cycle(4), GraphClass::Int);
    let claw = Instance::unbounded(Graph::claw(), GraphClass::Int);
    let c4_ok = interval::solve_bounded_interval(&c4).is_err() && proper::solve_bounded_proper(&c4.with_class(GraphClass::ProperInt)).is_err();
    let claw_ok = interval::solve_bounded_interval(&claw).is_ok() && proper::solve_bounded_proper(&claw.with_class(GraphClass::ProperInt)).is_err();
    let mut random = 0;
    let mut random_bad = 0;
    for n in [1, 2, 3, 5, 10, 50, 100, 250, 500, 1000, 2000] {
        for seed in 0..5u64 {
            let g = generate(GenKind::RandomInterval, n, seed, true).instance.graph;
            let inst = Instance::unbounded(g, GraphClass::Int);
            random += 1;
            let ok = interval::solve_bounded_interval(&inst).is_ok_and(|r| check_representation(&inst, &r).is_valid());
            random_bad += usize::from(!ok);
        }
    }
    rep.line(
        5,
        c4_ok && claw_ok && random_bad == 0,
        "recognition with infinite bounds",
        format!("C4 unsat both {c4_ok}, claw INT only {claw_ok}, random interval graphs {}/{random} SAT", random - random_bad),
    );

    let sat_proper: Vec<&Row> = rows.iter().filter(|r| r.proper_sat).collect();
    let stats: Vec<LeftmostStats> = sat_proper
        .par_iter()
        .flat_map_iter(|r| {
            let sol = solve_bounded_proper_detailed(&r.inst.with_class(GraphClass::ProperInt)).expect("SAT above");
            sol.placed.into_iter().map(|p| check_leftmost(&p.reduced)).collect::<Vec<_>>()
        })
        .collect();
    let comps: usize = stats.iter().map(|s| s.components).sum();
    let caps: usize = stats.iter().map(|s| s.cap_queries).sum();
    let meets: usize = stats.iter().map(|s| s.meets).sum();
    let fails: Vec<&String> = stats.iter().flat_map(|s| &s.failures).collect();
    rep.line(
        6,
        fails.is_empty(),
        "leftmost representation is minimal and oracle representations form a meet semilattice",
        format!(
            "{comps} reduced components, {caps} endpoint queries, {meets} meets, {} failures{}",
            fails.len(),
            fails.first().map(|f| format!("; first {f}")).unwrap_or_default()
        ),
    );

    let mut bench_ok = true;
    let mut bench_detail = Vec::new();
    for (solver, limit) in [(BenchSolver::Int, 1.3), (BenchSolver::Proper, 2.3)] {
        match run_bench(solver, &solver.default_sizes(), 1, 3) {
            Ok(b) => {
                bench_ok &= b.slope <= limit && b.total_seconds <= 60.0;
                bench_detail.push(format!("{} slope {:.3} (max {limit}) in {:.1}s", solver, b.slope, b.total_seconds));
            }
            Err(e) => {
                bench_ok = false;
                bench_detail.push(format!("{solver}: {e}"));
            }
        }
    }
    rep.line(7, bench_ok, "scaling", bench_detail.join(", "));

    let mut pairs = 0;
    let mut bad = 0;
    for r in &rows {
        let mut insts = vec![r.inst.clone()];
        insts.extend(normalize_bounds(&r.inst).ok());
        for i in &insts {
            let (p, b) = handle_violations(i);
            pairs += p;
            bad += b;
        }
    }
    rep.line(8, bad == 0, "handle test matches the pairwise component relation", format!("{pairs} component pairs, {bad} violations"));

    println!("{} of 8 criteria passed in {:.1}s", 8 - rep.failed, t.elapsed().as_secs_f64());
    if rep.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
