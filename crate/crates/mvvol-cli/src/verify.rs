//! Verification suites. Each suite is a list of independent jobs whose
//! reports are concatenated in a fixed order.

use clap::ValueEnum;
use mvvol::arith::{parse_rational, rat};
use mvvol::coeff::{is_stable, MultiIndex};
use mvvol::conjectures::{
    asymptotic_check, conjectured_mv, conjectured_sv, fit_genus0_row_ansatz, generating_series_check, Report,
};
use mvvol::fixtures::{GENUS0_ROW, MULTI_INDEX, MV_VOLUMES, SV_CONSTANTS};
use mvvol::graphs::mv_polynomial_via_graphs;
use mvvol::kontsevich::{genus_one_closed, psi_intersection};
use mvvol::siegel_veech::sv_constant;
use mvvol::square_tiled::{mv_scaling_check, norbury_asymptotic_check};
use mvvol::virasoro::{h_row_genus0, mv_coeff, mv_polynomial, mv_volume};
use mvvol::{PiPoly, Rational};

use crate::pool::par_map;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Dual,
    Oracle,
    Scaling,
    Conjectures,
}

type Job = Box<dyn Fn() -> Report + Send + Sync>;

fn parse(s: &str) -> Rational {
    parse_rational(s).expect("fixture rational")
}

fn failure(name: &str, key: (u32, u32, u32), err: impl std::fmt::Display) -> Report {
    let mut r = Report::default();
    r.push(name, key, "value", format!("error: {err}"), true);
    r
}

fn single(name: &str, key: (u32, u32, u32), expected: impl std::fmt::Display, got: impl std::fmt::Display) -> Report {
    let mut r = Report::default();
    r.push(name, key, expected, got, true);
    r
}

fn volume_types() -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = (0..=3u32)
        .flat_map(|g| (1..=5u32).map(move |n| (g, n)))
        .filter(|&(g, n)| is_stable(g, n))
        .collect();
    out.extend([(2, 0), (3, 0), (4, 1)]);
    out
}

fn sv_types() -> Vec<(u32, u32)> {
    (0..=2u32)
        .flat_map(|g| (0..=4u32).map(move |n| (g, n)))
        .filter(|&(g, n)| 2 * g + n >= 4)
        .collect()
}

fn tables() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for (g, n) in volume_types() {
        jobs.push(Box::new(move || {
            let Some(e) = MV_VOLUMES.iter().find(|e| (e.0, e.1) == (g, n)) else {
                return failure("mv-volume", (g, n, 0), "missing reference");
            };
            let expect = PiPoly::monomial(parse(e.2), 3 * g + n - 3);
            match mv_volume(g, n) {
                Ok(v) => single("mv-volume", (g, n, 0), expect, v),
                Err(err) => failure("mv-volume", (g, n, 0), err),
            }
        }));
    }
    for (g, n) in sv_types() {
        jobs.push(Box::new(move || {
            let Some(e) = SV_CONSTANTS.iter().find(|e| (e.0, e.1) == (g, n)) else {
                return failure("sv-constant", (g, n, 0), "missing reference");
            };
            match sv_constant(g, n) {
                Ok(v) => single("sv-constant", (g, n, 0), PiPoly::from_rational(parse(e.2)), v),
                Err(err) => failure("sv-constant", (g, n, 0), err),
            }
        }));
    }
    jobs.push(Box::new(|| {
        let mut r = Report::default();
        for &(n, d, v) in GENUS0_ROW.iter().filter(|e| e.0 <= 9) {
            r.push(
                "genus0-row",
                (0, n, d),
                PiPoly::monomial(parse(v), n - 3 - d),
                h_row_genus0(n, d),
                true,
            );
        }
        r
    }));
    jobs.push(Box::new(|| {
        let mut r = Report::default();
        for &(g, n, d, v) in MULTI_INDEX.iter().filter(|e| 3 * e.0 + e.1 <= 10) {
            let mut e: Vec<u32> = d.split(',').map(|x| x.parse().expect("fixture exponent")).collect();
            let sum: u32 = e.iter().sum();
            e.resize(n as usize, 0);
            let got = MultiIndex::new(g, &e)
                .map(|i| mv_coeff(&i).to_string())
                .unwrap_or_else(|err| err.to_string());
            r.push(
                "multi-index",
                (g, n, sum),
                PiPoly::monomial(parse(v), 3 * g + n - 3 - sum),
                got,
                true,
            );
        }
        r
    }));
    jobs
}

fn dual() -> Vec<Job> {
    [(0, 4), (0, 5), (0, 6), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]
        .into_iter()
        .map(|(g, n)| -> Job {
            Box::new(move || {
                let (rec, graphs) = match (mv_polynomial(g, n), mv_polynomial_via_graphs(g, n)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return failure("dual-method", (g, n, 0), e),
                };
                let mut r = Report::default();
                for (d, v) in rec.terms() {
                    r.push("dual-method", (g, n, d.iter().sum()), v, graphs.coeff(d), true);
                }
                let extra = graphs.terms().filter(|(d, _)| rec.coeff(d).is_zero()).count();
                r.push("dual-method-support", (g, n, 0), 0, extra, true);
                r
            })
        })
        .collect()
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|head| {
            compositions(total - head, parts - 1).into_iter().map(move |mut tail| {
                tail.insert(0, head);
                tail
            })
        })
        .collect()
}

fn oracle() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=6u32 {
        jobs.push(Box::new(move || {
            let mut r = Report::default();
            for d in compositions(n, n as usize) {
                let got = psi_intersection(1, &d)
                    .map(|v| v.to_string())
                    .unwrap_or_else(|e| e.to_string());
                r.push("genus1-closed", (1, n, n), genus_one_closed(&d), got, true);
            }
            r
        }));
    }
    jobs.push(Box::new(|| {
        let mut r = Report::default();
        let known: [(u32, &[u32], Rational); 5] = [
            (0, &[0, 0, 0], rat(1, 1)),
            (1, &[1], rat(1, 24)),
            (2, &[4], rat(1, 1152)),
            (2, &[2, 3], rat(29, 5760)),
            (3, &[7], rat(1, 82944)),
        ];
        for (g, d, v) in known {
            let got = psi_intersection(g, d)
                .map(|x| x.to_string())
                .unwrap_or_else(|e| e.to_string());
            r.push("psi-known", (g, d.len() as u32, d.iter().sum()), v, got, true);
        }
        r
    }));
    jobs
}

fn scaling() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let mut r = Report::default();
        for t in [2i64, 4, 8, 16, 32] {
            let got = norbury_asymptotic_check(1, 1, &[2], t)
                .map(|a| a.difference.to_string())
                .unwrap_or_else(|e| e.to_string());
            r.push("lattice-count-limit", (1, 1, t as u32), rat(-1, 12 * t * t), got, true);
        }
        r
    }));
    for (g, n, lengths) in [(1u32, 1u32, vec![2i64]), (0, 4, vec![1, 1, 1, 1])] {
        jobs.push(Box::new(move || {
            let mut r = Report::default();
            let mut previous = f64::INFINITY;
            for t in [8i64, 16, 32] {
                match mv_scaling_check(g, n, &lengths, t) {
                    Ok(s) => {
                        let ok = s.relative < previous && s.tail_bound < 1e-12;
                        previous = s.relative;
                        let got = if ok { "decreasing" } else { "not decreasing" };
                        r.push("volume-scaling", (g, n, t as u32), "decreasing", got, true);
                    }
                    Err(e) => r.extend(failure("volume-scaling", (g, n, t as u32), e)),
                }
            }
            r
        }));
    }
    jobs
}

fn conjectures() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let mut r = Report::default();
        for (g, n) in volume_types() {
            match (conjectured_mv(g, n), mv_volume(g, n)) {
                (Ok(c), Ok(v)) => r.push("volume-closed-form", (g, n, 0), v, c, true),
                (Err(e), _) | (_, Err(e)) => r.extend(failure("volume-closed-form", (g, n, 0), e)),
            }
        }
        for (g, n) in sv_types() {
            match (conjectured_sv(g, n), sv_constant(g, n)) {
                (Ok(c), Ok(v)) => r.push("sv-closed-form", (g, n, 0), v, c, true),
                (Err(e), _) | (_, Err(e)) => r.extend(failure("sv-closed-form", (g, n, 0), e)),
            }
        }
        r
    }));
    for d in 0..=3u32 {
        jobs.push(Box::new(move || {
            let fit: Vec<u32> = (d + 3..=2 * d + 3).collect();
            let test: Vec<u32> = (2 * d + 4..=2 * d + 6).collect();
            fit_genus0_row_ansatz(d, &fit, &test)
                .map(|f| f.report)
                .unwrap_or_else(|e| failure("genus0-row-fit", (0, 0, d), e))
        }));
    }
    for g in 0..=3u32 {
        jobs.push(Box::new(move || {
            generating_series_check(g, 8).unwrap_or_else(|e| failure("half-angle-series", (g, 0, 0), e))
        }));
    }
    for g in 0..=4u32 {
        jobs.push(Box::new(move || {
            asymptotic_check(g).unwrap_or_else(|e| failure("asymptotics", (g, 0, 0), e))
        }));
    }
    jobs
}

pub fn run(suite: Suite, threads: usize) -> Report {
    let jobs = match suite {
        Suite::Tables => tables(),
        Suite::Dual => dual(),
        Suite::Oracle => oracle(),
        Suite::Scaling => scaling(),
        Suite::Conjectures => conjectures(),
    };
    let mut report = Report::default();
    for r in par_map(&jobs, threads, |job| job()) {
        report.extend(r);
    }
    report
}
