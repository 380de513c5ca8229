//! Built-in verification sweeps. Each record re-checks one family of
//! combinatorial claims end to end and reports pass/fail together with a
//! first counterexample when something breaks.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use chromatic_monoid::{
    alpha_map, angle, beta_map, catalogue3, check_sigma_cofinal, check_sigma_final, enumerate_q,
    is_thread_realizable, kappa, m_poset, q_poset, sg_cofinal_witness, sg_final_witness, star,
    star_u_rule, submonoid_closure, thread_set, thread_set_by_star, u_of, v_of, LevelSet,
    SgCofinalWitness, SgFinalWitness, ThreadList, UpSet, DEFAULT_CLOSURE_BUDGET,
};
use poset_core::{enumerate_posets, random_poset, Poset, Subdivision};
use poset_homotopy::{contractibility_oracle, is_homotopy_cofinal, is_strongly_contractible};

use crate::expr::parse_and_eval;

/// Outcome of one verification sweep.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    /// Stable identifier for the sweep.
    pub id: &'static str,
    /// Anchor label naming the claim the sweep re-checks.
    pub anchor: &'static str,
    pub passed: bool,
    /// Number of individual cases the sweep examined.
    pub cases: u64,
    pub elapsed: Duration,
    /// First failing case, present exactly when the sweep failed.
    pub counterexample: Option<String>,
}

impl VerificationRecord {
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "id": self.id,
            "anchor": self.anchor,
            "status": if self.passed { "pass" } else { "fail" },
            "cases": self.cases,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        });
        if let Some(c) = &self.counterexample {
            obj["counterexample"] = json!(c);
        }
        obj
    }

    /// One fixed-width table line.
    pub fn render_line(&self) -> String {
        let status = if self.passed { "pass" } else { "FAIL" };
        let mut line = format!(
            "{status}  {:<24} {:>7} cases  {:>8.1?}  {}",
            self.id, self.cases, self.elapsed, self.anchor
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!("\n      counterexample: {c}"));
        }
        line
    }
}

/// Case accumulator: counts checks and keeps the first failure.
struct Sweep {
    cases: u64,
    failure: Option<String>,
}

impl Sweep {
    fn new() -> Sweep {
        Sweep {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self, id: &'static str, anchor: &'static str, start: Instant) -> VerificationRecord {
        VerificationRecord {
            id,
            anchor,
            passed: self.failure.is_none(),
            cases: self.cases,
            elapsed: start.elapsed(),
            counterexample: self.failure,
        }
    }
}

fn ls(n: u8, levels: &[u8]) -> LevelSet {
    LevelSet::from_levels(n, levels).expect("levels below the height")
}

fn cat(name: &str) -> UpSet {
    catalogue3()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, u)| u)
        .expect("catalogue name")
}

fn random_upset(rng: &mut ChaCha8Rng, n: u8) -> UpSet {
    let mut members = Vec::new();
    for mask in 0..1u32 << n {
        if rng.gen_bool(0.3) {
            members.push(LevelSet::new(n, mask).expect("mask below the height"));
        }
    }
    UpSet::generated_by(n, &members).expect("members share the height")
}

fn random_thread(rng: &mut ChaCha8Rng, n: u8) -> ThreadList {
    let len = rng.gen_range(0..=5);
    let entries = (0..len)
        .map(|_| LevelSet::new(n, rng.gen_range(0..1u32 << n)).expect("mask below the height"))
        .collect();
    ThreadList::new(n, entries).expect("entries share the height")
}

fn fingerprint(p: &Poset) -> String {
    serde_json::to_string(&p.to_json()).unwrap_or_else(|_| "<unprintable>".into())
}

/// Runs every built-in sweep with its fixed parameters, in display order.
pub fn all_records() -> Vec<VerificationRecord> {
    vec![
        record_q_count(),
        record_thread_example(),
        record_not_thread(),
        record_factorizations(),
        record_cone_product_rule(),
        record_monoid_laws(),
        record_kappa_homomorphism(),
        record_sigma_cofinal(),
        record_sigma_final(),
        record_subdivision_cofinal(),
        record_contractibility_oracle(),
        record_thread_dp(),
        record_collapse_maps(),
    ]
}

pub fn record_q_count() -> VerificationRecord {
    let start = Instant::now();
    let mut s = Sweep::new();
    let expected = [2u64, 3, 6, 20, 168, 7581];
    for (n, want) in expected.iter().enumerate() {
        let got = enumerate_q(n as u8).map(|q| q.len() as u64).unwrap_or(0);
        s.check(got == *want, || {
            format!("|Q({n})| = {got}, expected {want}")
        });
    }
    let carrier = q_poset(3).map(|q| q.len()).unwrap_or(0);
    s.check(carrier == 20, || {
        format!("the height-3 element poset carries {carrier} points, expected 20")
    });
    s.finish("q-count", "Example eg-fracture-obj", start)
}

pub fn record_thread_example() -> VerificationRecord {
    let start = Instant::now();
    let mut s = Sweep::new();
    let n = 4u8;
    match parse_and_eval("v{0,1,3}*v{0,2,3}", n) {
        Err(e) => s.check(false, || format!("parsing the product: {e}")),
        Ok(value) => {
            // sets containing 0, containing 3, or containing both 1 and 2
            let mut family = 0u64;
            for mask in 0..1u32 << n {
                if mask & 0b0001 != 0 || mask & 0b1000 != 0 || mask & 0b0110 == 0b0110 {
                    family |= 1 << mask;
                }
            }
            let expected = UpSet::new(n, family).expect("family is upward closed");
            s.check(value == expected, || {
                format!("product is {value}, expected {expected}")
            });

            let generated =
                UpSet::generated_by(n, &[ls(n, &[0]), ls(n, &[3]), ls(n, &[1, 2])]).unwrap();
            s.check(value == generated, || {
                format!("product is {value}, generators give {generated}")
            });

            let square = star(&value, &value);
            let v03 = v_of(&ls(n, &[0, 3]));
            s.check(square == v03, || {
                format!("square is {square}, expected {v03}")
            });

            match submonoid_closure(n, &[value], DEFAULT_CLOSURE_BUDGET) {
                Err(e) => s.check(false, || format!("closing the submonoid: {e}")),
                Ok(c) => {
                    s.check(c.len() == 3, || {
                        format!("the closure has {} elements, expected 3", c.len())
                    });
                    let full = UpSet::full(n).unwrap();
                    s.check(
                        c.index_of(&full).is_some()
                            && c.index_of(&value).is_some()
                            && c.index_of(&v03).is_some(),
                        || "the closure is missing an expected element".into(),
                    );
                }
            }
        }
    }
    s.finish("thread-example", "Example eg-thread", start)
}

pub fn record_not_thread() -> VerificationRecord {
    let start = Instant::now();
    let mut s = Sweep::new();
    for (name, u) in catalogue3() {
        match is_thread_realizable(&u) {
            Err(e) => s.check(false, || format!("{name}: realizability search failed: {e}")),
            Ok(None) => s.check(name == "w1", || {
                format!("{name} = {u} is unexpectedly not a thread set")
            }),
            Ok(Some(t)) => s.check(name != "w1" && thread_set(&t) == u, || {
                format!(
                    "{name}: witness {t} evaluates to {}, expected {u}",
                    thread_set(&t)
                )
            }),
        }
    }
    s.finish("not-thread", "Example eg-not-thread", start)
}

pub fn record_factorizations() -> VerificationRecord {
    let start = Instant::now();
    let mut s = Sweep::new();
    let checks: [(&str, UpSet); 6] = [
        ("x0", star(&cat("v01"), &cat("v02"))),
        ("x1", star(&cat("v01"), &cat("v12"))),
        ("x2", star(&cat("v02"), &cat("v12"))),
        ("w0", star(&cat("u0"), &cat("v12"))),
        ("w2", star(&cat("v01"), &cat("u2"))),
        ("y", star(&star(&cat("v01"), &cat("v02")), &cat("v12"))),
    ];
    for (name, product) in checks {
        let target = cat(name);
        s.check(product == target, || {
            format!("{name}: product is {product}, expected {target}")
        });
    }
    s.finish("fracture-factorizations", "Example eg-fracture-obj", start)
}

fn sweep_cone_rule(max_n: u8) -> Sweep {
    let mut s = Sweep::new();
    for n in 0..=max_n {
        for am in 0..1u32 << n {
            for bm in 0..1u32 << n {
                let a = LevelSet::new(n, am).unwrap();
                let b = LevelSet::new(n, bm).unwrap();
                let product = star(&u_of(&a), &u_of(&b));
                let by_rule = star_u_rule(&a, &b);
                let direct = if angle(&a, &b) {
                    u_of(&a.union(&b))
                } else {
                    UpSet::empty(n).unwrap()
                };
                s.check(product == by_rule && product == direct, || {
                    format!(
                        "u({}) * u({}) = {product}; the rule gives {by_rule}, the split gives {direct}",
                        a.render(),
                        b.render()
                    )
                });
            }
        }
    }
    s
}

pub fn record_cone_product_rule() -> VerificationRecord {
    let start = Instant::now();
    let s = sweep_cone_rule(3);
    s.finish("cone-product-rule", "Lemma lem-mu-u", start)
}

pub fn record_monoid_laws() -> VerificationRecord {
    let start = Instant::now();
    let mut s = Sweep::new();
    let q2 = enumerate_q(2).unwrap();
    let full = UpSet::full(2).unwrap();
    let empty = UpSet::empty(2).unwrap();
    for u in &q2 {
        s.check(star(&full, u) == *u && star(u, &full) == *u, || {
            format!("{u} is not fixed by the full family")
        });
        s.check(
            star(&empty, u).is_empty() && star(u, &empty).is_empty(),
            || format!("{u} does not absorb into the empty family"),
        );
    }
    for u in &q2 {
        for v in &q2 {
            for w in &q2 {
                s.check(star(&star(u, v), w) == star(u, &star(v, w)), || {
                    format!("associativity fails at ({u}, {v}, {w})")
                });
                if u.le(v) {
                    s.check(
                        star(w, u).le(&star(w, v)) && star(u, w).le(&star(v, w)),
                        || format!("monotonicity fails at ({u}, {v}) against {w}"),
                    );
                }
                s.check(
                    star(&u.union(v), w) == star(u, w).union(&star(v, w))
                        && star(w, &u.union(v)) == star(w, u).union(&star(w, v)),
                    || format!("distributivity fails at ({u}, {v}, {w})"),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    for _ in 0..500 {
        let n = rng.gen_range(3..=4);
        let u = random_upset(&mut rng, n);
        let v = random_upset(&mut rng, n);
        let w = random_upset(&mut rng, n);
        s.check(star(&star(&u, &v), &w) == star(&u, &star(&v, &w)), || {
            format!("associativity fails at ({u}, {v}, {w})")
        });
    }
    s.finish("monoid-laws", "Lemma lem-mu", start)
}

fn check_kappa_pair(s: &mut Sweep, u: &UpSet, v: &UpSet) {
    let lhs = kappa(&star(u, v));
    let rhs = kappa(u).intersection(&kappa(v));
    s.check(lhs == rhs, || {
        format!(
            "kappa({u} * {v}) = {}, expected {}",
            lhs.render(),
            rhs.render()
        )
    });
}

/// The homomorphism sweep over ordered pairs only; closed forms on the
/// generating cones are checked separately by the full record.
fn sweep_kappa_pairs(n: u8, sample: Option<(u64, u64)>) -> Sweep {
    let mut s = Sweep::new();
    match sample {
        None => {
            let q = enumerate_q(n).expect("height within the cap");
            for u in &q {
                for v in &q {
                    check_kappa_pair(&mut s, u, v);
                }
            }
        }
        Some((samples, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let u = random_upset(&mut rng, n);
                let v = random_upset(&mut rng, n);
                check_kappa_pair(&mut s, &u, &v);
            }
        }
    }
    s
}

pub fn record_kappa_homomorphism() -> VerificationRecord {
    let start = Instant::now();
    let n = 3u8;
    let mut s = sweep_kappa_pairs(n, None);
    for mask in 0..1u32 << n {
        let a = LevelSet::new(n, mask).unwrap();
        let kv = kappa(&v_of(&a));
        s.check(kv == a, || {
            format!("kappa(v{}) = {}, expected the set itself", a.render(), kv.render())
        });
        let ku = kappa(&u_of(&a));
        let expected = match a.len() {
            0 => LevelSet::all(n).unwrap(),
            1 => a,
            _ => LevelSet::empty(n).unwrap(),
        };
        s.check(ku == expected, || {
            format!(
                "kappa(u{}) = {}, expected {}",
                a.render(),
                ku.render(),
                expected.render()
            )
        });
    }
    s.finish("kappa-homomorphism", "Remark rem-kp", start)
}

fn cofinal_endpoints(w: &SgCofinalWitness) -> bool {
    let first = w.chain.first();
    let last = w.chain.last();
    first.assignment().iter().enumerate().all(|(i, &x)| i == x)
        && last.assignment().windows(2).all(|p| p[0] == p[1])
}

fn final_endpoints(w: &SgFinalWitness) -> bool {
    let first = w.chain.first();
    let last = w.chain.last();
    first.assignment().iter().enumerate().all(|(i, &x)| i == x)
        && last.assignment().windows(2).all(|p| p[0] == p[1])
}

/// Checks one ordered pair: the union map has the requested verdict and a
/// contraction witness builds and validates over every product member.
/// Counts as a single case.
fn check_sigma_pair(s: &mut Sweep, u: &UpSet, v: &UpSet, cofinal: bool) {
    let report = if cofinal {
        check_sigma_cofinal(u, v)
    } else {
        check_sigma_final(u, v)
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            s.check(false, || format!("({u}, {v}): {e}"));
            return;
        }
    };
    if !report.holds() {
        s.check(false, || {
            format!(
                "({u}, {v}): the union map verdict is \"{}\"",
                report.verdict.as_str()
            )
        });
        return;
    }
    for c in star(u, v).members() {
        let outcome = if cofinal {
            sg_cofinal_witness(u, v, &c).map(|w| cofinal_endpoints(&w))
        } else {
            sg_final_witness(u, v, &c).map(|w| final_endpoints(&w))
        };
        match outcome {
            Ok(true) => {}
            Ok(false) => {
                s.check(false, || {
                    format!(
                        "({u}, {v}) at {}: the witness chain endpoints are wrong",
                        c.render()
                    )
                });
                return;
            }
            Err(e) => {
                s.check(false, || format!("({u}, {v}) at {}: {e}", c.render()));
                return;
            }
        }
    }
    s.check(true, String::new);
}

fn sweep_sigma(n: u8, cofinal: bool, sample: Option<(u64, u64)>) -> Sweep {
    let mut s = Sweep::new();
    match sample {
        None => {
            let q = enumerate_q(n).expect("height within the cap");
            for u in &q {
                for v in &q {
                    check_sigma_pair(&mut s, u, v, cofinal);
                }
            }
        }
        Some((samples, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let u = random_upset(&mut rng, n);
                let v = random_upset(&mut rng, n);
                check_sigma_pair(&mut s, &u, &v, cofinal);
            }
        }
    }
    s
}

pub fn record_sigma_cofinal() -> VerificationRecord {
    let start = Instant::now();
    let mut s = sweep_sigma(2, true, None);
    let more = sweep_sigma(3, true, None);
    s.cases += more.cases;
    if s.failure.is_none() {
        s.failure = more.failure;
    }
    s.finish("sigma-cofinal", "Prop. prop-sg-cofinal", start)
}

pub fn record_sigma_final() -> VerificationRecord {
    let start = Instant::now();
    let mut s = sweep_sigma(2, false, None);
    let more = sweep_sigma(3, false, None);
    s.cases += more.cases;
    if s.failure.is_none() {
        s.failure = more.failure;
    }
    s.finish("sigma-final", "Prop. prop-sg-final", start)
}

fn check_subdivision_pair(s: &mut Sweep, p: Arc<Poset>) {
    match Subdivision::new(&p) {
        Err(e) => s.check(false, || {
            format!("subdividing a poset of size {}: {e}", p.size())
        }),
        Ok(sd) => {
            let report = is_homotopy_cofinal(&sd.max_map);
            s.check(report.holds(), || {
                format!(
                    "the greatest-member projection is \"{}\" on {}",
                    report.verdict.as_str(),
                    fingerprint(&p)
                )
            });
        }
    }
}

fn sweep_subdivision(random_count: u64, seed: u64) -> Sweep {
    let mut s = Sweep::new();
    for size in 0..=4 {
        for p in enumerate_posets(size).expect("size within the atlas cap") {
            check_subdivision_pair(&mut s, Arc::new(p));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..random_count {
        let size = 5 + (k % 2) as usize;
        let p = random_poset(&mut rng, size, 0.4);
        check_subdivision_pair(&mut s, Arc::new(p));
    }
    s
}

pub fn record_subdivision_cofinal() -> VerificationRecord {
    let start = Instant::now();
    let s = sweep_subdivision(100, 307);
    s.finish("subdivision-cofinal", "Lemma lem-subdiv-cofinal", start)
}

fn check_oracle_pair(s: &mut Sweep, p: Arc<Poset>, budget: u64) {
    let by_core = is_strongly_contractible(&p);
    match contractibility_oracle(&p, budget) {
        Err(e) => s.check(false, || format!("oracle failed on {}: {e}", fingerprint(&p))),
        Ok(by_moves) => s.check(by_core == by_moves, || {
            format!(
                "the core says {by_core} but single-point moves say {by_moves} on {}",
                fingerprint(&p)
            )
        }),
    }
}

fn sweep_oracle(random_count: u64, seed: u64, budget: u64) -> Sweep {
    let mut s = Sweep::new();
    for size in 0..=4 {
        for p in enumerate_posets(size).expect("size within the atlas cap") {
            check_oracle_pair(&mut s, Arc::new(p), budget);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..random_count {
        let size = 5 + (k % 3) as usize;
        let p = random_poset(&mut rng, size, 0.5);
        check_oracle_pair(&mut s, Arc::new(p), budget);
    }
    s
}

pub fn record_contractibility_oracle() -> VerificationRecord {
    let start = Instant::now();
    let s = sweep_oracle(200, 404, 1_000_000);
    s.finish(
        "contractibility-oracle",
        "Defn. defn-strongly-contractible",
        start,
    )
}

fn sweep_thread_dp(samples: u64, seed: u64, max_n: u8) -> Sweep {
    let mut s = Sweep::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(0..=max_n);
        let t = random_thread(&mut rng, n);
        let dp = thread_set(&t);
        let folded = thread_set_by_star(&t);
        s.check(dp == folded, || {
            format!("{t}: the selection walk gives {dp}, the product fold gives {folded}")
        });
    }
    s
}

pub fn record_thread_dp() -> VerificationRecord {
    let start = Instant::now();
    let s = sweep_thread_dp(1000, 5, 4);
    s.finish("thread-dp", "Prop. prop-thread", start)
}

fn sweep_collapse(max_n: u8) -> Sweep {
    let mut s = Sweep::new();
    for n in 0..=max_n {
        let m = match m_poset(n) {
            Ok(m) => m,
            Err(e) => {
                s.check(false, || format!("building the pair poset at n* = {n}: {e}"));
                continue;
            }
        };
        let want = (n as usize + 1) << n;
        s.check(m.len() == want, || {
            format!(
                "the pair poset at n* = {n} has {} points, expected {want}",
                m.len()
            )
        });

        let steps = 2 * n as usize;
        let mut alphas = Vec::with_capacity(steps + 1);
        let mut betas = Vec::with_capacity(steps + 1);
        let mut broken = false;
        for t in 0..=steps {
            match (alpha_map(&m, t as u8), beta_map(&m, t as u8)) {
                (Ok(a), Ok(b)) => {
                    alphas.push(a);
                    betas.push(b);
                }
                (Err(e), _) | (_, Err(e)) => {
                    s.check(false, || format!("collapse {t} at n* = {n}: {e}"));
                    broken = true;
                    break;
                }
            }
        }
        if broken {
            continue;
        }

        // every collapse fixes the union of every pair
        for (t, (a_t, b_t)) in alphas.iter().zip(&betas).enumerate() {
            for i in 0..m.len() {
                let (a, b) = m.pair(i);
                let union = a.union(&b);
                let (aa, ab) = m.pair(a_t.apply(i));
                let (ba, bb) = m.pair(b_t.apply(i));
                s.check(aa.union(&ab) == union && ba.union(&bb) == union, || {
                    format!(
                        "collapse {t} moves the union of ({}, {}) at n* = {n}",
                        a.render(),
                        b.render()
                    )
                });
            }
        }

        // the extreme indices are identities
        let id: Vec<usize> = (0..m.len()).collect();
        s.check(alphas[steps].assignment() == &id[..], || {
            format!("the top first-coordinate collapse at n* = {n} is not the identity")
        });
        s.check(betas[0].assignment() == &id[..], || {
            format!("the zeroth second-coordinate collapse at n* = {n} is not the identity")
        });

        // even steps sit below their odd neighbours on both sides
        for t in (0..steps).step_by(2) {
            let ok = alphas[t]
                .pointwise_leq(&alphas[t + 1])
                .expect("collapses share a carrier")
                && alphas[t + 2]
                    .pointwise_leq(&alphas[t + 1])
                    .expect("collapses share a carrier")
                && betas[t]
                    .pointwise_leq(&betas[t + 1])
                    .expect("collapses share a carrier")
                && betas[t + 2]
                    .pointwise_leq(&betas[t + 1])
                    .expect("collapses share a carrier");
            s.check(ok, || {
                format!("the zigzag fails between steps {t} and {} at n* = {n}", t + 1)
            });
        }
    }
    s
}

pub fn record_collapse_maps() -> VerificationRecord {
    let start = Instant::now();
    let s = sweep_collapse(3);
    s.finish("collapse-maps", "Lemma lem-al-bt", start)
}

/// Associativity alone, exhaustively over all triples or on random samples.
fn sweep_assoc(n: u8, sample: Option<(u64, u64)>) -> Sweep {
    let mut s = Sweep::new();
    match sample {
        None => {
            let q = enumerate_q(n).expect("height within the cap");
            for u in &q {
                for v in &q {
                    for w in &q {
                        s.check(star(&star(u, v), w) == star(u, &star(v, w)), || {
                            format!("associativity fails at ({u}, {v}, {w})")
                        });
                    }
                }
            }
        }
        Some((samples, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let u = random_upset(&mut rng, n);
                let v = random_upset(&mut rng, n);
                let w = random_upset(&mut rng, n);
                s.check(star(&star(&u, &v), &w) == star(&u, &star(&v, &w)), || {
                    format!("associativity fails at ({u}, {v}, {w})")
                });
            }
        }
    }
    s
}

fn sweep_distrib(n: u8, sample: Option<(u64, u64)>) -> Sweep {
    let mut s = Sweep::new();
    let one = |s: &mut Sweep, u: &UpSet, v: &UpSet, w: &UpSet| {
        s.check(
            star(&u.union(v), w) == star(u, w).union(&star(v, w))
                && star(w, &u.union(v)) == star(w, u).union(&star(w, v)),
            || format!("distributivity fails at ({u}, {v}, {w})"),
        );
    };
    match sample {
        None => {
            let q = enumerate_q(n).expect("height within the cap");
            for u in &q {
                for v in &q {
                    for w in &q {
                        one(&mut s, u, v, w);
                    }
                }
            }
        }
        Some((samples, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let u = random_upset(&mut rng, n);
                let v = random_upset(&mut rng, n);
                let w = random_upset(&mut rng, n);
                one(&mut s, &u, &v, &w);
            }
        }
    }
    s
}

/// Property ids accepted by the `check` command.
pub const PROPERTY_IDS: [&str; 10] = [
    "assoc",
    "distrib",
    "mu-u",
    "kappa-hom",
    "sg-cofinal",
    "sg-final",
    "thread-dp",
    "subdiv-cofinal",
    "oracle",
    "al-bt",
];

/// Runs one named property sweep. `sample` is `None` for an exhaustive run;
/// properties whose case space is unbounded fall back to their default
/// sample size when run without `--samples`.
pub fn check_property(
    property: &str,
    n: u8,
    sample: Option<(u64, u64)>,
    seed: u64,
) -> Result<VerificationRecord, String> {
    let start = Instant::now();
    let guard_exhaustive = |cap: u8, what: &str| -> Result<(), String> {
        if sample.is_none() && n > cap {
            Err(format!(
                "exhaustive {what} needs n* ≤ {cap}; pass --samples to sweep at n* = {n}"
            ))
        } else {
            Ok(())
        }
    };
    match property {
        "assoc" => {
            guard_exhaustive(3, "associativity")?;
            Ok(sweep_assoc(n, sample).finish("assoc", "Lemma lem-mu", start))
        }
        "distrib" => {
            guard_exhaustive(3, "distributivity")?;
            Ok(sweep_distrib(n, sample).finish("distrib", "Lemma lem-mu", start))
        }
        "mu-u" => Ok(sweep_cone_rule(n).finish("mu-u", "Lemma lem-mu-u", start)),
        "kappa-hom" => {
            guard_exhaustive(4, "homomorphism checking")?;
            Ok(sweep_kappa_pairs(n, sample).finish("kappa-hom", "Remark rem-kp", start))
        }
        "sg-cofinal" => {
            guard_exhaustive(3, "cofinality checking")?;
            Ok(sweep_sigma(n, true, sample).finish("sg-cofinal", "Prop. prop-sg-cofinal", start))
        }
        "sg-final" => {
            guard_exhaustive(3, "finality checking")?;
            Ok(sweep_sigma(n, false, sample).finish("sg-final", "Prop. prop-sg-final", start))
        }
        "thread-dp" => {
            let (samples, seed) = sample.unwrap_or((1000, seed));
            Ok(sweep_thread_dp(samples, seed, n.min(4))
                .finish("thread-dp", "Prop. prop-thread", start))
        }
        "subdiv-cofinal" => {
            let (samples, seed) = sample.unwrap_or((100, seed));
            Ok(sweep_subdivision(samples, seed)
                .finish("subdiv-cofinal", "Lemma lem-subdiv-cofinal", start))
        }
        "oracle" => {
            let (samples, seed) = sample.unwrap_or((200, seed));
            Ok(sweep_oracle(samples, seed, 1_000_000).finish(
                "oracle",
                "Defn. defn-strongly-contractible",
                start,
            ))
        }
        "al-bt" => {
            if n > 3 {
                return Err(format!(
                    "the collapse sweep materialises every pair poset up to n*; use n* ≤ 3, got {n}"
                ));
            }
            Ok(sweep_collapse(n).finish("al-bt", "Lemma lem-al-bt", start))
        }
        other => Err(format!(
            "unknown property \"{other}\"; known ids: {}",
            PROPERTY_IDS.join(", ")
        )),
    }
}
