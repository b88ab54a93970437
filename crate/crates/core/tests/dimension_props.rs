mod common;

use common::{submasks, Small};
use teamlogic::dimension::{
    coherence_check, dim_report, dim_upper_estimate, maximal_teams, minimal_falsifying,
};
use teamlogic::generate::{self, FormulaGen};
use teamlogic::{Fragment, KripkeModel};

const PROPS: [&str; 2] = ["p", "q"];

fn models() -> Vec<KripkeModel> {
    generate::model_family(&PROPS, 1, 4, 60, 41)
}

/// Families recomputed from the definitional oracle: maximal satisfying and
/// minimal falsifying masks by scanning all pairs.
fn oracle_families(k: &KripkeModel, f: &teamlogic::Formula) -> (Vec<u64>, Vec<u64>) {
    let table = Small::of(k).table(f);
    let all = 1u64 << k.num_worlds();
    let sat = |t: u64| table[t as usize];
    let max = (0..all)
        .filter(|&t| sat(t) && (0..all).all(|u| u == t || u & t != t || !sat(u)))
        .collect();
    let min = (0..all)
        .filter(|&t| !sat(t) && submasks(t).all(|u| u == t || sat(u)))
        .collect();
    (max, min)
}

fn masks(set: &std::collections::BTreeSet<teamlogic::Team>) -> Vec<u64> {
    let mut v: Vec<u64> = set.iter().map(|t| t.to_mask().unwrap()).collect();
    v.sort();
    v
}

#[test]
fn families_match_oracle_and_bounds_hold() {
    for (i, fragment) in [
        Fragment::ML,
        Fragment::MLIDis,
        Fragment::MDL,
        Fragment::EMDL,
    ]
    .into_iter()
    .enumerate()
    {
        let mut g = FormulaGen::new(50 + i as u64, &PROPS);
        for _ in 0..25 {
            let f = g.formula(fragment, 2);
            let estimate = dim_upper_estimate(&f);
            for k in models() {
                let (max, min) = oracle_families(&k, &f);
                let m = maximal_teams(&k, &f).unwrap();
                let n = minimal_falsifying(&k, &f).unwrap();
                assert_eq!(masks(&m), max, "{f}");
                assert_eq!(masks(&n), min, "{f}");
                // every satisfying team lies below a maximal one
                let table = Small::of(&k).table(&f);
                for t in 0..table.len() as u64 {
                    if table[t as usize] {
                        assert!(max.iter().any(|&u| t & !u == 0));
                    }
                }
                assert!(
                    m.len() as u128 <= estimate,
                    "{f}: |M|={} > {estimate}",
                    m.len()
                );
                let widest = n.iter().map(|t| t.len()).max().unwrap_or(0);
                assert!(widest <= m.len(), "{f}");
                if fragment == Fragment::MLIDis || fragment == Fragment::ML {
                    assert!((m.len() as u128) <= 1u128 << f.occ_ivee());
                }
                // coherence at the widest minimal falsifier, and not below it
                assert!(coherence_check(&k, &f, widest.max(1)).unwrap());
                if widest > 1 {
                    assert!(!coherence_check(&k, &f, widest - 1).unwrap());
                }
            }
        }
    }
}

#[test]
fn ml_formulas_have_one_maximal_team() {
    let mut g = FormulaGen::new(60, &PROPS);
    let ms = models();
    for _ in 0..30 {
        let f = g.ml(2);
        assert_eq!(dim_upper_estimate(&f), 1);
        let named: Vec<(String, KripkeModel)> = ms
            .iter()
            .take(20)
            .enumerate()
            .map(|(i, m)| (format!("k{i}"), m.clone()))
            .collect();
        let r = dim_report(&named, &f).unwrap();
        assert_eq!(r.empirical_upper_dim, 1);
        assert!(r.empirical_lower_dim <= 1);
    }
}

#[test]
fn report_output_is_deterministic() {
    let f = teamlogic::parse("dep(p; q) | <>p").unwrap();
    let named: Vec<(String, KripkeModel)> = models()
        .into_iter()
        .take(6)
        .enumerate()
        .map(|(i, m)| (format!("k{i}"), m))
        .collect();
    let a = dim_report(&named, &f).unwrap().to_string();
    let b = dim_report(&named, &f).unwrap().to_string();
    assert_eq!(a, b);
    assert!(a.starts_with("formula dep(p; q) | <>p\nmodel k0\n"));
}
