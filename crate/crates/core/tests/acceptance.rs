//! Acceptance criteria 1–9. Each test prints one `criterion k: PASS|FAIL` line and fails with
//! the offending reports when the criterion does not hold.

use std::collections::HashSet;
use std::sync::OnceLock;

use ramyip::algebra::{ParamRat, PolyX};
use ramyip::delta::check_delta_specialization;
use ramyip::groupcheck::{phi_c_ball, phi_min_coset, translation_lengths, walk_bijection, Lemma};
use ramyip::hecke::check_operator_identities;
use ramyip::parallel::Exec;
use ramyip::ramyip::{RYSystem, SystemKind, DEFAULT_WALK_BUDGET};
use ramyip::relations::check_relations;
use ramyip::roots::SubsystemTag;
use ramyip::tables::RyType;
use ramyip::verify::{eigencheck_poly, mu_box, poly_diff, ry_sides, verify_ry_proposition, Mode};
use ramyip::walks::{beta_roots, enumerate_walks};
use ramyip::weyl::{Group, GroupTag};

/// The weights of criteria 1–3.
fn domain() -> Vec<(usize, Vec<i32>)> {
    let mut out: Vec<_> = mu_box(2, 2).into_iter().map(|m| (2, m)).collect();
    out.extend(mu_box(3, 1).into_iter().map(|m| (3, m)));
    out
}

fn verdict(k: usize, failures: &[String]) {
    let ok = failures.is_empty();
    println!("criterion {k}: {}", if ok { "PASS" } else { "FAIL" });
    let shown: Vec<String> = failures.iter().take(40).map(|f| f.chars().take(240).collect()).collect();
    assert!(ok, "criterion {k}: {} failure(s), first {}:\n{}", failures.len(), shown.len(), shown.join("\n"));
}

struct Computed {
    n: usize,
    mu: Vec<i32>,
    lhs: PolyX<ParamRat>,
    rhs: PolyX<ParamRat>,
}

/// Both sides of the proposition for `ty` on the whole domain, computed once per test binary.
fn computed(ty: RyType) -> &'static [Computed] {
    static CELLS: [OnceLock<Vec<Computed>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = RyType::ALL.iter().position(|t| *t == ty).unwrap();
    CELLS[idx].get_or_init(|| {
        let exec = Exec::from_env();
        domain()
            .into_iter()
            .map(|(n, mu)| {
                let s = ry_sides(ty, n);
                let lhs = s.lhs.nonsymmetric_poly(&mu, DEFAULT_WALK_BUDGET, &exec).unwrap().poly;
                let rhs = s.rhs.nonsymmetric_poly(&mu, DEFAULT_WALK_BUDGET, &exec).unwrap().poly;
                Computed { n, mu, lhs, rhs }
            })
            .collect()
    })
}

fn ry_criterion(k: usize, ty: RyType) {
    let failures: Vec<String> = computed(ty)
        .iter()
        .filter_map(|c| {
            let d = poly_diff(&c.lhs, &c.rhs);
            (!d.is_empty()).then(|| format!("n={} mu={:?}: {} differing monomial(s)", c.n, c.mu, d.len()))
        })
        .collect();
    verdict(k, &failures);
}

#[test]
fn criterion_1_ry_b() {
    ry_criterion(1, RyType::B);
}

#[test]
fn criterion_2_ry_c() {
    ry_criterion(2, RyType::C);
}

#[test]
fn criterion_3_ry_d() {
    ry_criterion(3, RyType::D);
}

#[test]
fn criterion_4_delta() {
    let exec = Exec::from_env();
    let mut failures = Vec::new();
    for x in SubsystemTag::TABLE {
        for n in [2, 3] {
            for cutoff in [1, 2] {
                let r = check_delta_specialization(x, n, cutoff, &exec).unwrap();
                if !r.passed() {
                    failures.push(serde_json::to_string(&r).unwrap());
                }
            }
        }
    }
    verdict(4, &failures);
}

#[test]
fn criterion_5_eigenvectors() {
    const SEEDS: [u64; 3] = [0x5eed_0001, 0x5eed_0002, 0x5eed_0003];
    let mut failures = Vec::new();
    for ty in RyType::ALL {
        for c in computed(ty) {
            let s = ry_sides(ty, c.n);
            for (sys, e) in [(&s.lhs, &c.lhs), (&s.rhs, &c.rhs)] {
                let mut modes: Vec<Mode> = SEEDS.iter().map(|&seed| Mode::Eval { points: 1, seed }).collect();
                if c.n == 2 && c.mu.iter().all(|m| m.abs() <= 1) {
                    modes.push(Mode::Exact);
                }
                for mode in modes {
                    let r = eigencheck_poly(sys, &c.mu, e, mode).unwrap();
                    if r.status != "pass" {
                        failures.push(serde_json::to_string(&r).unwrap());
                    }
                }
            }
        }
    }
    verdict(5, &failures);
}

#[test]
fn criterion_6_hecke_identities() {
    let mut failures = Vec::new();
    for n in [2, 3] {
        let r = check_operator_identities(n, 2).unwrap();
        if !r.passed() {
            failures.push(serde_json::to_string(&r).unwrap());
        }
    }
    verdict(6, &failures);
}

#[test]
fn criterion_7_group_theory() {
    let mut failures = Vec::new();
    let presentations = [
        (GroupTag::W, vec![2, 3]),
        (GroupTag::CvRY, vec![2, 3]),
        (GroupTag::BvRY, vec![2, 3]),
        (GroupTag::D, vec![3]),
    ];
    for (tag, ns) in presentations {
        for n in ns {
            let r = check_relations(tag, n).unwrap();
            for res in r.results.iter().filter(|res| format!("{:?}", res.status) != "Holds") {
                failures.push(format!(
                    "relation {tag:?} n={n}: {} is {:?}; computed form {}",
                    res.relation,
                    res.status,
                    res.corrected.as_deref().unwrap_or("-")
                ));
            }
        }
    }
    for n in [2, 3] {
        let r = phi_c_ball(n, 6).unwrap();
        if !r.passed() {
            failures.push(format!("phi^C on the length 6 ball: {}", serde_json::to_string(&r).unwrap()));
        }
        for r in translation_lengths(n).unwrap() {
            if !r.passed() {
                failures.push(format!("translation word: {}", serde_json::to_string(&r).unwrap()));
            }
        }
    }
    for (n, mu) in domain() {
        for lemma in [Lemma::C, Lemma::D] {
            if !phi_min_coset(lemma, n, &mu).unwrap() {
                failures.push(format!("phi^{lemma:?}(w(mu)) is not the minimal coset representative, n={n} mu={mu:?}"));
            }
        }
    }
    verdict(7, &failures);
}

/// Every reduced word of length at most `len`, letters only.
fn reduced_words(g: &Group, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), g.identity())];
    for l in 1..=len {
        let mut next = Vec::new();
        for (w, x) in &frontier {
            for i in g.indices() {
                let y = x.mul(g.s(i)).unwrap();
                if g.length(&y) == l {
                    let mut v: Vec<usize> = w.clone();
                    v.push(i);
                    next.push((v, y));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

#[test]
fn criterion_8_combinatorics() {
    let mut failures = Vec::new();
    for (n, mu) in domain() {
        for kind in SystemKind::ALL {
            let sys = RYSystem::new(kind, n);
            let word = sys.walk_type(&mu).unwrap();
            let start = sys.group().identity();
            let bits: HashSet<String> = enumerate_walks(&word, &start).map(|p| p.bit_string()).collect();
            if bits.len() != 1 << word.len() {
                failures.push(format!("{} n={n} mu={mu:?}: {} walks for length {}", kind.name(), bits.len(), word.len()));
            }
        }
    }
    for (tag, ns) in [(GroupTag::W, 2..=3), (GroupTag::CvRY, 2..=3), (GroupTag::BvRY, 2..=3), (GroupTag::D, 2..=3)] {
        for n in ns {
            let g = Group::new(tag, n);
            for w in reduced_words(&g, 5) {
                let betas = beta_roots(&g, &w);
                let distinct: HashSet<_> = betas.iter().collect();
                if distinct.len() != betas.len() || !betas.iter().all(|b| b.is_positive()) {
                    failures.push(format!("{tag:?} n={n} word {w:?}: beta roots not distinct and positive"));
                }
            }
        }
    }
    for (n, mu) in domain() {
        for lemma in [Lemma::C, Lemma::D] {
            let r = walk_bijection(lemma, n, &mu).unwrap();
            if !r.passed() {
                failures.push(format!("walk map {lemma:?}: {}", serde_json::to_string(&r).unwrap()));
            }
        }
    }
    verdict(8, &failures);
}

#[test]
fn criterion_9_determinism() {
    let report = |workers: usize| {
        let exec = Exec::with_workers(workers);
        let mut out = String::new();
        for mu in mu_box(3, 1) {
            let e = RYSystem::new(SystemKind::CC, 3).nonsymmetric_poly(&mu, DEFAULT_WALK_BUDGET, &exec).unwrap();
            out += &serde_json::to_string(&e.poly).unwrap();
            out.push('\n');
        }
        for ty in RyType::ALL {
            for mu in mu_box(2, 1) {
                let r = verify_ry_proposition(ty, 2, &mu, Mode::Eval { points: 2, seed: 9 }, &exec).unwrap();
                out += &serde_json::to_string(&r).unwrap();
                out.push('\n');
            }
        }
        for x in SubsystemTag::TABLE {
            out += &serde_json::to_string(&check_delta_specialization(x, 3, 1, &exec).unwrap()).unwrap();
            out.push('\n');
        }
        out
    };
    let base = report(1);
    let mut failures = Vec::new();
    for workers in [1, 2, 4] {
        if report(workers) != base {
            failures.push(format!("{workers} worker(s) gave a different report"));
        }
    }
    verdict(9, &failures);
}
