use std::collections::BTreeMap;

use jk_core::oracle::{compare, predict, predict_gl_sum, summarize, Verdict};
use jk_core::pencil::jk_invariants;
use jk_core::rep::{canonical_pair, random_pair, rep_pencil, Family, Group, RepSpec};

fn counts(v: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in v {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

fn all_specs(n_max: usize, m_max: usize) -> Vec<RepSpec> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in 1..=n_max {
            if family.is_sum() {
                out.extend((1..=m_max).map(|m| RepSpec::sum(family, n, m)));
            } else if family == Family::NStd {
                out.push(RepSpec::n_std(n));
            } else {
                out.extend([Group::Gl, Group::Sl].map(|g| RepSpec::cong(family, g, n)));
            }
        }
    }
    out.into_iter().filter(|s| s.validate().is_ok()).collect()
}

#[test]
fn predictions_satisfy_block_size_identity() {
    for spec in all_specs(8, 10) {
        let p = predict(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        p.check_block_sizes(spec.dim_v(), spec.dim_g()).unwrap();
        assert!(p.horizontal.windows(2).all(|w| w[0] <= w[1]), "{spec}");
        assert!(p.vertical.windows(2).all(|w| w[0] <= w[1]), "{spec}");
    }
}

/// `gl(n)` on `m` columns is `n` copies of a generic `m x n` pencil; `gl(m)`
/// on `n` columns is `m` copies of its transpose.
#[test]
fn gl_mirror_symmetry() {
    for n in 1..=8 {
        for m in 1..=8 {
            let a = predict_gl_sum(n, m).unwrap();
            let b = predict_gl_sum(m, n).unwrap();
            let scaled =
                |v: &[usize], k: usize| counts(v).into_iter().map(|(x, c)| (x, c * k)).collect::<BTreeMap<_, _>>();
            assert_eq!(scaled(&a.horizontal, m), scaled(&b.vertical, n), "gl({n},{m})");
            assert_eq!(scaled(&a.vertical, m), scaled(&b.horizontal, n), "gl({n},{m})");
        }
    }
}

#[test]
fn generic_sum_indices_differ_by_at_most_one() {
    for n in 2..=8 {
        for m in 1..=10 {
            if m == n {
                continue;
            }
            for family in [Family::GlSum, Family::SlSum] {
                let p = predict(&RepSpec::sum(family, n, m)).unwrap();
                for v in [&p.horizontal, &p.vertical] {
                    if let (Some(lo), Some(hi)) = (v.first(), v.last()) {
                        assert!(hi - lo <= 1, "{family}({n},{m}): {v:?}");
                    }
                }
            }
        }
    }
}

/// Counting laws: the numbers of indices equal dim g - rank and dim V - rank
/// for one common rank.
#[test]
fn index_counts_share_a_rank() {
    for spec in all_specs(8, 10) {
        let p = predict(&spec).unwrap();
        let (dv, dg) = (spec.dim_v(), spec.dim_g());
        assert!(p.horizontal.len() <= dg && p.vertical.len() <= dv, "{spec}");
        assert_eq!(dg - p.horizontal.len(), dv - p.vertical.len(), "{spec}");
    }
}

#[test]
fn uncovered_specs_are_rejected() {
    assert!(predict(&RepSpec::sum(Family::GlSum, 0, 1)).is_err());
    assert!(predict(&RepSpec::sum(Family::SlSum, 1, 1)).is_err());
    assert!(predict(&RepSpec::sum(Family::SpSum, 3, 1)).is_err());
}

/// Closed forms agree with computed invariants on small canonical and random pairs.
#[test]
fn predictions_match_small_pencils() {
    for spec in all_specs(4, 4) {
        let pred = predict(&spec).unwrap();
        let (x, a) = canonical_pair(&spec).unwrap();
        let inv = jk_invariants(&rep_pencil(&spec, &x, &a).unwrap()).unwrap();
        let c = compare(&pred, &summarize(&inv));
        assert_eq!(c.verdict, Verdict::Match, "{spec} canonical: {:?}", c.discrepancies);
        let ok = (0..5).any(|seed| {
            let (x, a) = random_pair(&spec, 7 + seed, 10);
            let inv = jk_invariants(&rep_pencil(&spec, &x, &a).unwrap()).unwrap();
            compare(&pred, &summarize(&inv)).verdict == Verdict::Match
        });
        assert!(ok, "{spec}: no random pair matched");
    }
}
