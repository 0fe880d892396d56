//! The `verify` suite: every named invariant recomputed along two independent routes.
//!
//! Each check has default upper bounds on `m` and `n`; `--m` and `--n` replace them.
//! Randomised checks draw from a ChaCha stream keyed by the seed and the check's
//! position, so results do not depend on the thread count.

use std::collections::BTreeSet;
use std::fmt::Debug;

use breakdiv::counting::{
    binomial, dt_invariant, orbit_count_d, orbit_count_d_split, orbit_count_d_von_sterneck, von_sterneck,
};
use breakdiv::knm::{orbit_keys, sort_orbit_key};
use breakdiv::multigraph::SubsetTables;
use breakdiv::reptheory::{
    break_character_bruteforce, break_character_closed, h_expansion_character, inner_product,
    parking_character_bruteforce, partitions_of, perm_module_h_expansion, restrict_character,
    schur_expansion, shift_class_character_bruteforce, trivial_multiplicity, MnCache,
};
use breakdiv::series::{dt_via_euler_product, dt_via_formal_log};
use breakdiv::{Budget, Divisor, KnmParams, Multigraph};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::output::{text, Report, Table};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub seed: u64,
    pub budget: Budget,
    pub threads: usize,
    pub only: Vec<String>,
    /// Name of a check whose first comparison is inverted, to exercise the failure path.
    pub inject_fault: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Budget,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Budget => "BUDGET",
        }
    }
}

#[derive(Debug)]
pub struct VerifyOutcome {
    pub report: Report,
    pub statuses: Vec<(&'static str, Status)>,
}

impl VerifyOutcome {
    pub fn any(&self, status: Status) -> bool {
        self.statuses.iter().any(|(_, s)| *s == status)
    }
}

enum Stop {
    Fail(String),
    Budget(String),
}

impl From<breakdiv::Error> for Stop {
    fn from(e: breakdiv::Error) -> Self {
        match e {
            breakdiv::Error::Budget { .. } => Stop::Budget(e.to_string()),
            other => Stop::Fail(other.to_string()),
        }
    }
}

type Check = std::result::Result<String, Stop>;

struct Ctx {
    m_max: u32,
    n_max: u32,
    budget: Budget,
    rng: ChaCha8Rng,
    fault: bool,
    compared: u64,
}

impl Ctx {
    fn ensure(&mut self, ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), Stop> {
        self.compared += 1;
        let injected = self.fault && self.compared == 1;
        if ok != injected {
            return Ok(());
        }
        let m = msg();
        Err(Stop::Fail(if injected { format!("injected fault, comparison inverted: {m}") } else { m }))
    }

    fn ensure_eq<T: PartialEq + Debug>(&mut self, what: &str, lhs: T, rhs: T) -> std::result::Result<(), Stop> {
        let ok = lhs == rhs;
        self.ensure(ok, || format!("{what}: {lhs:?} vs {rhs:?}"))
    }

    fn grid(&self) -> impl Iterator<Item = KnmParams> {
        let (mm, nn) = (self.m_max, self.n_max);
        (1..=mm).flat_map(move |m| (1..=nn).map(move |n| KnmParams::new(m, n).expect("m, n >= 1")))
    }

    fn bounds(&self) -> String {
        format!("m <= {}, n <= {}", self.m_max, self.n_max)
    }
}

struct CheckDef {
    name: &'static str,
    default_m: u32,
    default_n: u32,
    run: fn(&mut Ctx) -> Check,
}

const CHECKS: &[CheckDef] = &[
    CheckDef { name: "cardinalities", default_m: 3, default_n: 5, run: cardinalities },
    CheckDef { name: "shift-classes", default_m: 3, default_n: 5, run: shift_classes },
    CheckDef { name: "break-dominance", default_m: 3, default_n: 5, run: break_dominance },
    CheckDef { name: "parking-vector", default_m: 3, default_n: 5, run: parking_vector },
    CheckDef { name: "equivariance", default_m: 3, default_n: 5, run: equivariance },
    CheckDef { name: "orbit-formulas", default_m: 3, default_n: 5, run: orbit_formulas },
    CheckDef { name: "von-sterneck", default_m: 3, default_n: 5, run: von_sterneck_count },
    CheckDef { name: "dt-routes", default_m: 3, default_n: 10, run: dt_routes },
    CheckDef { name: "trivial-multiplicity", default_m: 3, default_n: 5, run: trivial_mult },
    CheckDef { name: "characters", default_m: 3, default_n: 6, run: characters },
    CheckDef { name: "schur-nonnegative", default_m: 3, default_n: 6, run: schur_nonnegative },
    CheckDef { name: "frobenius-h", default_m: 3, default_n: 5, run: frobenius_h },
    CheckDef { name: "restriction", default_m: 3, default_n: 5, run: restriction },
    CheckDef { name: "dhat-isomorphism", default_m: 2, default_n: 4, run: dhat_isomorphism },
    CheckDef { name: "mn-orthogonality", default_m: 1, default_n: 6, run: mn_orthogonality },
    CheckDef { name: "random-graphs", default_m: 3, default_n: 6, run: random_graphs },
    CheckDef { name: "orientation-oracle", default_m: 2, default_n: 5, run: orientation_oracle },
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

pub fn verify(cfg: &VerifyConfig) -> Result<VerifyOutcome> {
    let known = check_names();
    for name in cfg.only.iter().chain(&cfg.inject_fault) {
        if !known.contains(&name.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown check {name:?}; known checks: {}",
                known.join(", ")
            )));
        }
    }
    if matches!(cfg.m, Some(0)) || matches!(cfg.n, Some(0)) {
        return Err(CliError::Usage("--m and --n must be at least 1".into()));
    }
    if cfg.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let selected: Vec<(usize, &CheckDef)> = CHECKS
        .iter()
        .enumerate()
        .filter(|(_, c)| cfg.only.is_empty() || cfg.only.iter().any(|o| o == c.name))
        .collect();
    let run_one = |&(index, check): &(usize, &CheckDef)| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(index as u64);
        let mut ctx = Ctx {
            m_max: cfg.m.unwrap_or(check.default_m),
            n_max: cfg.n.unwrap_or(check.default_n),
            budget: cfg.budget,
            rng,
            fault: cfg.inject_fault.as_deref() == Some(check.name),
            compared: 0,
        };
        match (check.run)(&mut ctx) {
            Ok(detail) => (check.name, Status::Pass, detail),
            Err(Stop::Fail(detail)) => (check.name, Status::Fail, detail),
            Err(Stop::Budget(detail)) => (check.name, Status::Budget, detail),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} threads: {e}", cfg.threads)))?;
    let results: Vec<_> = pool.install(|| selected.par_iter().map(run_one).collect());

    let mut table = Table::new("verify", &["invariant", "status", "detail"]);
    let mut statuses = Vec::new();
    for (name, status, detail) in results {
        table.push(vec![text(name), text(status.label()), text(detail)]);
        statuses.push((name, status));
    }
    let mut report = Report::new("verify");
    report.tables.push(table);
    Ok(VerifyOutcome { report, statuses })
}

fn cardinalities(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let (m, n) = (p.m(), p.n());
        let trees = p.graph().spanning_tree_count()?;
        let formula = BigInt::from(p.break_count());
        let breaks = p.enumerate_break(&ctx.budget)?.len();
        let parks = p.enumerate_parking(&ctx.budget)?.len();
        let residues = p.enumerate_residues(&ctx.budget)?.len();
        ctx.ensure_eq(&format!("|Break_{m},{n}| vs m^(n-1) n^(n-2)"), BigInt::from(breaks), formula.clone())?;
        ctx.ensure_eq(&format!("|Park_{m},{n}| vs m^(n-1) n^(n-2)"), BigInt::from(parks), formula.clone())?;
        ctx.ensure_eq(&format!("spanning trees of K_{n}^{m}"), trees, formula)?;
        ctx.ensure_eq(&format!("|D_{m},{n}|"), residues as u128, p.residue_count())?;
    }
    Ok(ctx.bounds())
}

fn shift_classes(ctx: &mut Ctx) -> Check {
    let mut classes_seen = 0u128;
    for p in ctx.grid() {
        let residues = p.enumerate_residues(&ctx.budget)?;
        let keys: BTreeSet<_> = residues.iter().map(|x| p.class_key(x)).collect();
        classes_seen += keys.len() as u128;
        ctx.ensure_eq(
            &format!("number of shift classes of D_{},{}", p.m(), p.n()),
            keys.len() as u128 * p.n() as u128,
            p.residue_count(),
        )?;
        for key in &keys {
            let class = p.shift_class(key);
            let distinct: BTreeSet<_> = class.members().iter().collect();
            let breaks = distinct.iter().filter(|y| p.is_break(y.values())).count();
            let parks = distinct.iter().filter(|y| p.is_parking(y.projection())).count();
            ctx.ensure_eq(&format!("class {key}: size, break members, parking members"), (distinct.len(), breaks, parks), (p.n(), 1, 1))?;
        }
        for x in &residues {
            let key = p.class_key(x);
            ctx.ensure_eq(&format!("break representative of {x}"), p.break_representative(x)?, p.break_representative(&key)?)?;
            ctx.ensure_eq(&format!("parking representative of {x}"), p.parking_representative(x)?, p.parking_representative(&key)?)?;
        }
    }
    Ok(format!("{}, {classes_seen} classes", ctx.bounds()))
}

fn break_dominance(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let by_dominance = p.enumerate_break(&ctx.budget)?;
        let by_subsets: Vec<Vec<i64>> = p
            .graph()
            .enumerate_break_divisors(&ctx.budget)?
            .into_iter()
            .map(Divisor::into_values)
            .collect();
        ctx.ensure_eq(&format!("Break_{},{} by dominance vs subset test", p.m(), p.n()), by_dominance, by_subsets)?;
    }
    Ok(ctx.bounds())
}

fn parking_vector(ctx: &mut Ctx) -> Check {
    let mut scanned = 0u128;
    for p in ctx.grid() {
        let n = p.n();
        let graph = p.graph();
        // one past the largest entry a parking function can have
        let top = p.m() * (n as i64 - 1);
        let size = (top as u128 + 1).saturating_pow(n as u32 - 1);
        if size > ctx.budget.max_items {
            return Err(Stop::Budget(format!(
                "parking box of K_{n}^{} has {size} vectors, limit {}",
                p.m(),
                ctx.budget.max_items
            )));
        }
        let mut current = vec![0i64; n - 1];
        loop {
            scanned += 1;
            let reduced = graph.is_g_parking(n - 1, &current)?;
            ctx.ensure_eq(&format!("K_{n}^{} parking test at {current:?}", p.m()), p.is_parking(&current), reduced)?;
            let Some(pos) = (0..current.len()).rev().find(|&i| current[i] < top) else {
                break;
            };
            current[pos] += 1;
            current[pos + 1..].iter_mut().for_each(|v| *v = 0);
        }
    }
    Ok(format!("{}, {scanned} vectors", ctx.bounds()))
}

fn equivariance(ctx: &mut Ctx) -> Check {
    let mut tested = 0u64;
    for p in ctx.grid() {
        let n = p.n();
        for x in p.enumerate_residues(&ctx.budget)? {
            let mut sigma: Vec<usize> = (0..n - 1).collect();
            sigma.shuffle(&mut ctx.rng);
            let mut fixing_last = sigma.clone();
            fixing_last.push(n - 1);
            let mut full: Vec<usize> = (0..n).collect();
            full.shuffle(&mut ctx.rng);

            let park = p.parking_representative(&x)?;
            let moved = p.parking_representative(&x.permuted(&fixing_last))?;
            let expected: Vec<i64> = sigma.iter().map(|&i| park[i]).collect();
            ctx.ensure_eq(&format!("parking representative of {x} under {sigma:?}"), moved, expected)?;

            let brk = p.break_representative(&x)?;
            ctx.ensure_eq(&format!("break representative of sh({x})"), p.break_representative(&p.shift(&x))?, brk.clone())?;
            let moved = p.break_representative(&x.permuted(&full))?;
            let expected: Vec<i64> = full.iter().map(|&i| brk[i]).collect();
            ctx.ensure_eq(&format!("break representative of {x} under {full:?}"), moved, expected)?;
            tested += 1;
        }
    }
    Ok(format!("{}, {tested} residue tuples", ctx.bounds()))
}

fn orbit_formulas(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let (m, n) = (p.m() as u64, p.n() as u64);
        let moebius = orbit_count_d(m, n)?;
        let residues = p.enumerate_residues(&ctx.budget)?;
        let brute: BTreeSet<_> = residues.iter().map(|x| sort_orbit_key(x.values())).collect();
        ctx.ensure_eq(&format!("orbits of D_{m},{n}: Moebius vs enumeration"), moebius.clone(), BigInt::from(brute.len()))?;
        ctx.ensure_eq(&format!("orbits of D_{m},{n}: Moebius vs von Sterneck"), moebius.clone(), orbit_count_d_von_sterneck(m, n)?)?;
        ctx.ensure_eq(&format!("orbits of D_{m},{n}: Moebius vs split form"), moebius, orbit_count_d_split(m, n)?)?;
    }
    Ok(ctx.bounds())
}

/// Counts `k`-multisets of `Z/a` with sum `b` by listing weakly increasing sequences.
fn multisets_with_sum(a: u64, k: u64, b: u64) -> u64 {
    fn rec(a: u64, left: u64, min: u64, sum: u64, b: u64) -> u64 {
        if left == 0 {
            return u64::from(sum % a == b);
        }
        (min..a).map(|v| rec(a, left - 1, v, sum + v, b)).sum()
    }
    rec(a, k, 0, 0, b)
}

fn von_sterneck_count(ctx: &mut Ctx) -> Check {
    let a_max = u64::from(ctx.m_max) * u64::from(ctx.n_max).min(2) + 3;
    let k_max = u64::from(ctx.n_max);
    let total = binomial(a_max + k_max, k_max);
    if total > BigInt::from(ctx.budget.max_items) {
        return Err(Stop::Budget(format!("{total} multisets exceed the budget")));
    }
    for a in 1..=a_max {
        for k in 0..=k_max {
            for b in 0..a {
                let formula = von_sterneck(a, k, b)?;
                ctx.ensure_eq(&format!("multisets a={a} k={k} b={b}"), formula, BigInt::from(multisets_with_sum(a, k, b)))?;
            }
        }
    }
    Ok(format!("a <= {a_max}, k <= {k_max}"))
}

fn dt_routes(ctx: &mut Ctx) -> Check {
    for m in 1..=u64::from(ctx.m_max) {
        let n_max = ctx.n_max as usize;
        let product = dt_via_euler_product(m, n_max, &ctx.budget)?;
        let log = dt_via_formal_log(m, n_max, &ctx.budget)?;
        for n in 1..=n_max {
            let closed = dt_invariant(m, n as u64)?;
            ctx.ensure_eq(&format!("DT_{n} (m={m}) closed vs Euler product"), Some(&closed), product.get(n))?;
            ctx.ensure_eq(&format!("DT_{n} (m={m}) closed vs formal log"), Some(&closed), log.get(n))?;
        }
    }
    Ok(ctx.bounds())
}

fn trivial_mult(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let (m, n) = (p.m() as u64, p.n() as u64);
        let dt = dt_invariant(m, n)?;
        let trivial = trivial_multiplicity(&break_character_closed(&p)?)?;
        let orbits = orbit_keys(&p.enumerate_break(&ctx.budget)?).len();
        ctx.ensure_eq(&format!("<chi_{m},{n}, 1> vs DT"), trivial, dt.clone())?;
        ctx.ensure_eq(&format!("orbits of Break_{m},{n} vs DT"), BigInt::from(orbits), dt)?;
    }
    Ok(ctx.bounds())
}

fn characters(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let closed = break_character_closed(&p)?;
        let brute = break_character_bruteforce(&p, &ctx.budget)?;
        for (lambda, value) in closed.entries() {
            ctx.ensure_eq(&format!("chi_{},{}{lambda} closed vs fixed points", p.m(), p.n()), Some(&value), brute.get(&lambda))?;
        }
    }
    Ok(ctx.bounds())
}

fn schur_nonnegative(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let chi = break_character_closed(&p)?;
        let s = schur_expansion(&chi)?;
        ctx.ensure(s.is_nonnegative(), || format!("Frob(Break_{},{}) = {s}", p.m(), p.n()))?;
        ctx.ensure_eq(&format!("dimension of Break_{},{}", p.m(), p.n()), chi.dimension().clone(), BigInt::from(p.break_count()))?;
    }
    Ok(ctx.bounds())
}

fn frobenius_h(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let n = p.n() as u32;
        let breaks = p.enumerate_break(&ctx.budget)?;
        let h = perm_module_h_expansion(n, &orbit_keys(&breaks))?;
        let closed = break_character_closed(&p)?;
        ctx.ensure_eq(&format!("character of {h} vs chi_{},{n}", p.m()), h_expansion_character(&h)?, closed)?;
        if n >= 2 {
            let parks = p.enumerate_parking(&ctx.budget)?;
            let h = perm_module_h_expansion(n - 1, &orbit_keys(&parks))?;
            let brute = parking_character_bruteforce(&p, &ctx.budget)?;
            ctx.ensure_eq(&format!("character of {h} vs Park_{},{n}", p.m()), h_expansion_character(&h)?, brute)?;
        }
    }
    Ok(ctx.bounds())
}

fn restriction(ctx: &mut Ctx) -> Check {
    for p in ctx.grid().filter(|p| p.n() >= 2) {
        let restricted = restrict_character(&break_character_closed(&p)?)?;
        let park = parking_character_bruteforce(&p, &ctx.budget)?;
        ctx.ensure_eq(&format!("Res chi_{},{} vs Park", p.m(), p.n()), restricted, park)?;
    }
    Ok(ctx.bounds())
}

fn dhat_isomorphism(ctx: &mut Ctx) -> Check {
    for p in ctx.grid() {
        let dhat = shift_class_character_bruteforce(&p, &ctx.budget)?;
        ctx.ensure_eq(&format!("DHat_{},{} vs chi", p.m(), p.n()), dhat, break_character_closed(&p)?)?;
    }
    Ok(ctx.bounds())
}

fn mn_orthogonality(ctx: &mut Ctx) -> Check {
    let mut cache = MnCache::new();
    for n in 1..=ctx.n_max {
        let irreducibles: Vec<_> = partitions_of(n).iter().map(|l| (l.clone(), cache.irreducible(l))).collect();
        for (lambda, a) in &irreducibles {
            for (mu, b) in &irreducibles {
                let expected = BigInt::from(u8::from(lambda == mu));
                ctx.ensure_eq(&format!("<chi^{lambda}, chi^{mu}>"), inner_product(a, b)?, expected)?;
            }
        }
    }
    Ok(format!("n <= {}", ctx.n_max))
}

fn random_connected_multigraph(rng: &mut ChaCha8Rng, n_max: usize, mult_max: u64) -> Multigraph {
    loop {
        let n = rng.gen_range(1..=n_max);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j, rng.gen_range(0..=mult_max)));
            }
        }
        let g = Multigraph::from_edges(n, &edges).expect("indices in range");
        if g.is_connected() {
            return g;
        }
    }
}

fn for_each_composition(current: &mut [i64], pos: usize, remaining: i64, visit: &mut dyn FnMut(&[i64])) {
    if current.is_empty() {
        return;
    }
    if pos + 1 == current.len() {
        current[pos] = remaining;
        visit(current);
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        for_each_composition(current, pos + 1, remaining - v, visit);
    }
}

const RANDOM_GRAPHS: usize = 100;

fn random_graphs(ctx: &mut Ctx) -> Check {
    let n_max = ctx.n_max.min(8) as usize;
    let mult_max = u64::from(ctx.m_max);
    let mut divisors = 0u64;
    for k in 0..RANDOM_GRAPHS {
        let g = random_connected_multigraph(&mut ctx.rng, n_max, mult_max);
        let found = g.enumerate_break_divisors(&ctx.budget)?;
        let found: BTreeSet<Vec<i64>> = found.into_iter().map(Divisor::into_values).collect();
        ctx.ensure_eq(&format!("graph #{k}: break divisors vs spanning trees"), BigInt::from(found.len()), g.spanning_tree_count()?)?;
        let tables = SubsetTables::new(&g)?;
        let mut current = vec![0i64; g.vertex_count()];
        let mut failure: Option<std::result::Result<(), Stop>> = None;
        for_each_composition(&mut current, 0, g.genus()?, &mut |d| {
            if failure.is_some() {
                return;
            }
            divisors += 1;
            let divisor = Divisor::new(d.to_vec());
            let outcome = (|| {
                let direct = tables.is_break(&divisor)?;
                ctx.ensure_eq(&format!("graph #{k}: subset vs orientability at {d:?}"), direct, tables.break_via_orientability(&divisor)?)?;
                ctx.ensure_eq(&format!("graph #{k}: subset test vs enumeration at {d:?}"), direct, found.contains(d))
            })();
            if outcome.is_err() {
                failure = Some(outcome);
            }
        });
        if let Some(f) = failure {
            f?;
        }
    }
    Ok(format!("{RANDOM_GRAPHS} graphs (n <= {n_max}, multiplicity <= {mult_max}), {divisors} divisors"))
}

const ORACLE_GRAPHS: usize = 40;
const ORACLE_MAX_EDGES: u128 = 12;

/// Divisors `indeg - 1` over all orientations of `g`.
fn orientation_divisors(g: &Multigraph) -> BTreeSet<Vec<i64>> {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for _ in 0..g.multiplicity(i, j) {
                edges.push((i, j));
            }
        }
    }
    (0u32..(1 << edges.len()))
        .map(|choice| {
            let mut indeg = vec![-1i64; n];
            for (k, &(i, j)) in edges.iter().enumerate() {
                indeg[if choice >> k & 1 == 1 { j } else { i }] += 1;
            }
            indeg
        })
        .collect()
}

fn orientation_oracle(ctx: &mut Ctx) -> Check {
    let n_max = ctx.n_max.clamp(1, 6) as usize;
    let mult_max = u64::from(ctx.m_max);
    let mut graphs = 0;
    let mut attempts = 0;
    while graphs < ORACLE_GRAPHS {
        attempts += 1;
        let g = random_connected_multigraph(&mut ctx.rng, n_max, mult_max);
        if g.edge_count() > ORACLE_MAX_EDGES {
            if attempts > 100 * ORACLE_GRAPHS {
                return Err(Stop::Fail(format!("could not sample graphs with <= {ORACLE_MAX_EDGES} edges")));
            }
            continue;
        }
        graphs += 1;
        let oracle = orientation_divisors(&g);
        let tables = SubsetTables::new(&g)?;
        let n = g.vertex_count();
        let degree = g.edge_count() as i64 - n as i64;
        // shift by one so every candidate is a composition of degree + n
        let mut current = vec![0i64; n];
        let mut failure: Option<std::result::Result<(), Stop>> = None;
        for_each_composition(&mut current, 0, degree + n as i64, &mut |raw| {
            if failure.is_some() {
                return;
            }
            let d: Vec<i64> = raw.iter().map(|x| x - 1).collect();
            let outcome = (|| {
                let orientable = tables.is_orientable(&Divisor::new(d.clone()))?;
                ctx.ensure_eq(&format!("orientability of {d:?}"), orientable, oracle.contains(&d))
            })();
            if outcome.is_err() {
                failure = Some(outcome);
            }
        });
        if let Some(f) = failure {
            f?;
        }
    }
    Ok(format!("{ORACLE_GRAPHS} graphs with <= {ORACLE_MAX_EDGES} edges"))
}
