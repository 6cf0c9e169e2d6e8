//! Expands a [`SweepConfig`] into verification tasks and runs them.
//!
//! Tasks are planned in a fixed order and executed on the rayon pool; the
//! report list comes back in plan order regardless of completion order.

use std::fmt;
use std::str::FromStr;

use mhs_core::connect;
use mhs_core::exactnum::QPoint;
use mhs_core::fmzv::{self, Formula};
use mhs_core::indexcore::indices_up_to_weight;
use mhs_core::qsum::{verify_identity, IdentityParams};
use mhs_core::{Index, Result, VerificationReport};
use rayon::prelude::*;

use crate::config::SweepConfig;

/// Symbolic-q checks grow quickly with `N`; they are capped independently.
pub const SYMBOLIC_MAX_WEIGHT: u32 = 4;
pub const SYMBOLIC_MAX_N: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Classical,
    Q,
    Connector,
    Fmzv,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::Classical, Group::Q, Group::Connector, Group::Fmzv];

    pub fn name(self) -> &'static str {
        match self {
            Group::Classical => "classical",
            Group::Q => "q",
            Group::Connector => "connector",
            Group::Fmzv => "fmzv",
        }
    }

    /// Identity IDs this group can emit.
    pub fn ids(self) -> &'static [&'static str] {
        match self {
            Group::Classical => &["euler", "hoffman", "ohno"],
            Group::Q => &["van-hamme", "bradley", "q-ohno", "bradley-symbolic", "q-ohno-symbolic"],
            Group::Connector => &[
                "transport",
                "pqr",
                "coefficient-bridge",
                "partial-fraction",
                "expansion",
            ],
            Group::Fmzv => &[
                "kr-sum",
                "ones-star",
                "sw",
                "sw-star",
                "sw-even",
                "s",
                "s-star",
                "si",
                "si-star",
                "t",
                "t-star",
                "a-2",
                "a-3",
                "a2-repeat",
                "a2-2",
                "a3-single",
                "hims",
                "a2-ohno",
                "antipode",
                "h-star-bridge",
                "binom-congruence",
                "binomial-sums",
                "sum-routes",
            ],
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown group {s:?}"))
    }
}

/// One unit of work.
#[derive(Clone, Debug)]
pub enum Task {
    Identity { id: &'static str, params: IdentityParams },
    Transport { k: Index, n: u64, q: QPoint, order: usize },
    Pqr { k: Index, n: u64, q: QPoint, order: usize },
    Bridge { k: Index, n: u64, q: QPoint, order: usize },
    PartialFraction { n1: u64, q: QPoint, order: usize },
    Expansion { m: u64, k: u32, q: QPoint, order: usize },
    Formula { f: Formula, p: u64 },
    Hims { k: Index, e: u32, p: u64 },
    A2Ohno { k: Index, e: u32, p: u64 },
    Antipode { k: Index, p: u64, n: u32 },
    HStarBridge { k: Index, p: u64 },
    BinomCongruence { p: u64, n: u32 },
    BinomialSums { k: u32, r: u32, i: u32 },
    SumRoutes { k: u32, r: u32, p: u64 },
}

impl Task {
    pub fn id(&self) -> &'static str {
        match self {
            Task::Identity { id, .. } => id,
            Task::Transport { .. } => "transport",
            Task::Pqr { .. } => "pqr",
            Task::Bridge { .. } => "coefficient-bridge",
            Task::PartialFraction { .. } => "partial-fraction",
            Task::Expansion { .. } => "expansion",
            Task::Formula { f, .. } => f.id(),
            Task::Hims { .. } => "hims",
            Task::A2Ohno { .. } => "a2-ohno",
            Task::Antipode { .. } => "antipode",
            Task::HStarBridge { .. } => "h-star-bridge",
            Task::BinomCongruence { .. } => "binom-congruence",
            Task::BinomialSums { .. } => "binomial-sums",
            Task::SumRoutes { .. } => "sum-routes",
        }
    }

    pub fn run(&self) -> Result<VerificationReport> {
        match self {
            Task::Identity { id, params } => verify_identity(id, params),
            Task::Transport { k, n, q, order } => connect::verify_transport(k, *n, q, *order),
            Task::Pqr { k, n, q, order } => connect::verify_pqr(k, *n, q, *order),
            Task::Bridge { k, n, q, order } => connect::verify_coefficient_bridge(k, *n, q, *order),
            Task::PartialFraction { n1, q, order } => connect::verify_partial_fraction(*n1, q, *order),
            Task::Expansion { m, k, q, order } => connect::verify_expansion(*m, *k, q, *order),
            Task::Formula { f, p } => fmzv::verify_formula(f, *p),
            Task::Hims { k, e, p } => fmzv::verify_hims(k, *e, *p),
            Task::A2Ohno { k, e, p } => fmzv::verify_a2_ohno(k, *e, *p),
            Task::Antipode { k, p, n } => fmzv::verify_antipode(k, *p, *n),
            Task::HStarBridge { k, p } => fmzv::verify_h_star_bridge(k, *p),
            Task::BinomCongruence { p, n } => fmzv::verify_binom_congruence(*p, *n),
            Task::BinomialSums { k, r, i } => fmzv::verify_binomial_sum_identities(*k, *r, *i),
            Task::SumRoutes { k, r, p } => fmzv::verify_sum_routes(*k, *r, *p),
        }
    }

    /// Runs the task; an error becomes a FAIL row carrying the message.
    pub fn report(&self) -> VerificationReport {
        self.run().unwrap_or_else(|e| {
            let msg = format!("error: {e}");
            VerificationReport::new(self.id())
                .compared(false, msg.clone(), msg.clone())
                .failed(msg)
        })
    }
}

fn identity(id: &'static str, params: IdentityParams) -> Task {
    Task::Identity { id, params }
}

fn plan_classical(cfg: &SweepConfig, out: &mut Vec<Task>) {
    let indices = indices_up_to_weight(cfg.max_weight);
    if cfg.enabled("classical", "euler") {
        out.extend((1..=cfg.max_n).map(|n| identity("euler", IdentityParams::new(n))));
    }
    if cfg.enabled("classical", "hoffman") {
        for k in &indices {
            out.extend((1..=cfg.max_n).map(|n| identity("hoffman", IdentityParams::new(n).with_index(k.clone()))));
        }
    }
    if cfg.enabled("classical", "ohno") {
        for k in &indices {
            for e in 0..=cfg.max_e {
                for n in 1..=cfg.max_n {
                    out.push(identity("ohno", IdentityParams::new(n).with_index(k.clone()).with_e(e)));
                }
            }
        }
    }
}

fn plan_q(cfg: &SweepConfig, out: &mut Vec<Task>) {
    let indices = indices_up_to_weight(cfg.max_weight);
    for q in &cfg.q_points {
        if cfg.enabled("q", "van-hamme") {
            out.extend((1..=cfg.max_n).map(|n| identity("van-hamme", IdentityParams::new(n).with_q(q.clone()))));
        }
        if cfg.enabled("q", "bradley") {
            for k in &indices {
                for n in 1..=cfg.max_n {
                    out.push(identity(
                        "bradley",
                        IdentityParams::new(n).with_index(k.clone()).with_q(q.clone()),
                    ));
                }
            }
        }
        if cfg.enabled("q", "q-ohno") {
            for k in &indices {
                for e in 0..=cfg.max_e {
                    for n in 1..=cfg.max_n {
                        let params = IdentityParams::new(n).with_index(k.clone()).with_e(e).with_q(q.clone());
                        out.push(identity("q-ohno", params));
                    }
                }
            }
        }
    }
    let symbolic = indices_up_to_weight(cfg.max_weight.min(SYMBOLIC_MAX_WEIGHT));
    let max_n = cfg.max_n.min(SYMBOLIC_MAX_N);
    if cfg.enabled("q", "bradley-symbolic") {
        for k in &symbolic {
            out.extend((1..=max_n).map(|n| identity("bradley-symbolic", IdentityParams::new(n).with_index(k.clone()))));
        }
    }
    if cfg.enabled("q", "q-ohno-symbolic") {
        for k in &symbolic {
            for e in 0..=cfg.max_e.min(2) {
                for n in 1..=max_n {
                    out.push(identity(
                        "q-ohno-symbolic",
                        IdentityParams::new(n).with_index(k.clone()).with_e(e),
                    ));
                }
            }
        }
    }
}

fn plan_connector(cfg: &SweepConfig, out: &mut Vec<Task>) {
    let indices = indices_up_to_weight(cfg.max_weight);
    let order = cfg.series_order;
    for q in &cfg.q_points {
        for k in &indices {
            for n in 1..=cfg.max_n {
                let (k, q) = (k.clone(), q.clone());
                if cfg.enabled("connector", "transport") {
                    out.push(Task::Transport {
                        k: k.clone(),
                        n,
                        q: q.clone(),
                        order,
                    });
                }
                if cfg.enabled("connector", "pqr") {
                    out.push(Task::Pqr {
                        k: k.clone(),
                        n,
                        q: q.clone(),
                        order,
                    });
                }
                if cfg.enabled("connector", "coefficient-bridge") {
                    out.push(Task::Bridge { k, n, q, order });
                }
            }
        }
        if cfg.enabled("connector", "partial-fraction") {
            out.extend((1..=cfg.max_n).map(|n1| Task::PartialFraction {
                n1,
                q: q.clone(),
                order,
            }));
        }
        if cfg.enabled("connector", "expansion") {
            for m in 1..=cfg.max_n {
                out.extend((0..=cfg.max_weight).map(|k| Task::Expansion {
                    m,
                    k,
                    q: q.clone(),
                    order,
                }));
            }
        }
    }
}

/// Every closed-form statement of weight at most `w`.
pub fn formulas_up_to(w: u32) -> Vec<Formula> {
    let mut out = Vec::new();
    for k in 1..=w {
        for r in 1..=k {
            out.push(Formula::KrSum { k, r, star: false });
            out.push(Formula::KrSum { k, r, star: true });
        }
    }
    out.extend((1..=w).map(|e| Formula::OnesStar { e }));
    for k in 2..=w {
        for r in 1..k {
            for i in 1..=r {
                out.push(Formula::Sw { k, r, i });
                out.push(Formula::SwStar { k, r, i });
                if k % 2 == 0 {
                    out.push(Formula::SwEven { k, r, i, star: false });
                    out.push(Formula::SwEven { k, r, i, star: true });
                }
            }
        }
    }
    for k in 1..=w {
        for r in 1..=k {
            out.push(Formula::S { k, r });
            out.push(Formula::SStar { k, r });
            if k % 2 == 1 {
                out.push(Formula::T { k, r });
                out.push(Formula::TStar { k, r });
            }
        }
    }
    for k in (2..=w).step_by(2) {
        for r in 1..k {
            for i in 1..=r {
                out.push(Formula::Si { k, r, i });
                out.push(Formula::SiStar { k, r, i });
            }
        }
    }
    for l in 2..=w {
        for k1 in 1..l {
            let k2 = l - k1;
            out.push(Formula::A2 { k1, k2 });
            if l % 2 == 0 {
                out.push(Formula::A2Depth2 { k1, k2 });
            }
        }
    }
    for l in (3..=w).filter(|l| l % 2 == 1) {
        for k1 in 1..l - 1 {
            for k2 in 1..l - k1 {
                out.push(Formula::A3 {
                    k1,
                    k2,
                    k3: l - k1 - k2,
                });
            }
        }
    }
    for k in 1..=w {
        for r in 1..=w / k {
            out.push(Formula::A2Repeat { k, r });
        }
    }
    out.extend((1..=w).step_by(2).map(|k| Formula::A3Single { k }));
    out
}

fn plan_fmzv(cfg: &SweepConfig, out: &mut Vec<Task>) {
    let w = cfg.max_weight;
    let formulas: Vec<Formula> = formulas_up_to(w)
        .into_iter()
        .filter(|f| cfg.enabled("fmzv", f.id()))
        .collect();
    let indices = indices_up_to_weight(w);
    let on = |id: &str| cfg.enabled("fmzv", id);
    for p in cfg.prime_range.primes() {
        out.extend(formulas.iter().map(|&f| Task::Formula { f, p }));
        for k in &indices {
            for e in 0..=cfg.max_e {
                if on("hims") {
                    out.push(Task::Hims { k: k.clone(), e, p });
                }
                if on("a2-ohno") {
                    out.push(Task::A2Ohno { k: k.clone(), e, p });
                }
            }
            if on("antipode") {
                out.extend((1..=3).map(|n| Task::Antipode { k: k.clone(), p, n }));
            }
            if on("h-star-bridge") {
                out.push(Task::HStarBridge { k: k.clone(), p });
            }
        }
        if on("binom-congruence") {
            out.extend((2..=3).map(|n| Task::BinomCongruence { p, n }));
        }
        if on("sum-routes") {
            for k in 2..=w {
                out.extend((1..k).map(|r| Task::SumRoutes { k, r, p }));
            }
        }
    }
    if on("binomial-sums") {
        for k in (2..=w).step_by(2) {
            for r in 1..k {
                out.extend((1..=r).map(|i| Task::BinomialSums { k, r, i }));
            }
        }
    }
}

/// The tasks of one group, in deterministic order.
pub fn plan_group(cfg: &SweepConfig, group: Group) -> Vec<Task> {
    let mut out = Vec::new();
    match group {
        Group::Classical => plan_classical(cfg, &mut out),
        Group::Q => plan_q(cfg, &mut out),
        Group::Connector => plan_connector(cfg, &mut out),
        Group::Fmzv => plan_fmzv(cfg, &mut out),
    }
    out
}

/// All enabled tasks across every group.
pub fn plan(cfg: &SweepConfig) -> Vec<Task> {
    Group::ALL.into_iter().flat_map(|g| plan_group(cfg, g)).collect()
}

/// Runs tasks in parallel, returning reports in task order.
pub fn run_tasks(tasks: &[Task]) -> Vec<VerificationReport> {
    tasks.par_iter().map(Task::report).collect()
}

/// Runs every enabled verifier over the configured parameter space.
pub fn run_sweep(cfg: &SweepConfig) -> Vec<VerificationReport> {
    run_tasks(&plan(cfg))
}
