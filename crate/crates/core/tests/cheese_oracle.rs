//! Brute force over open cheeses: every tree of the right size whose holes
//! sit at their depth, filtered by binder usage, shape and characteristic.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use swisscheese::{enumerate, Characteristic, Cheese, Counter, Family, Kind, SizeModel, TermClass};

/// Cheeses of size `n` under `depth` binders with exactly `holes` holes.
/// Indices are always bound inside the cheese.
fn trees(model: SizeModel, n: usize, depth: usize, holes: usize) -> Vec<Cheese> {
    let mut out = Vec::new();
    if n == 0 && holes == 1 {
        out.push(Cheese::Hole(depth));
    }
    if holes == 0 {
        for k in 0..depth {
            if model.index_size(k) == n {
                out.push(Cheese::Index(k));
            }
        }
    }
    if n >= 1 {
        for body in trees(model, n - 1, depth + 1, holes) {
            out.push(Cheese::Abs(Box::new(body)));
        }
        for k in 0..n {
            for h in 0..=holes {
                let funs = trees(model, k, depth, h);
                if funs.is_empty() {
                    continue;
                }
                let args = trees(model, n - 1 - k, depth, holes - h);
                for f in &funs {
                    for a in &args {
                        out.push(f.clone().apply(a.clone()));
                    }
                }
            }
        }
    }
    out
}

fn uses_ok(c: &Cheese, family: Family) -> bool {
    fn walk(c: &Cheese, uses: &mut Vec<usize>, family: Family) -> bool {
        match c {
            Cheese::Index(k) => {
                let slot = uses.len() - 1 - k;
                uses[slot] += 1;
                true
            }
            Cheese::Hole(_) => true,
            Cheese::Abs(body) => {
                uses.push(0);
                let inner = walk(body, uses, family);
                let own = uses.pop().unwrap();
                inner
                    && match family {
                        Family::Linear => own == 1,
                        Family::Affine => own <= 1,
                    }
            }
            Cheese::App(f, a) => walk(f, uses, family) && walk(a, uses, family),
        }
    }
    walk(c, &mut Vec::new(), family)
}

fn normal(c: &Cheese) -> bool {
    match c {
        Cheese::Index(_) | Cheese::Hole(_) => true,
        Cheese::Abs(body) => normal(body),
        Cheese::App(f, a) => !matches!(**f, Cheese::Abs(_)) && normal(f) && normal(a),
    }
}

fn neutral(c: &Cheese) -> bool {
    match c {
        Cheese::Index(_) | Cheese::Hole(_) => true,
        Cheese::Abs(_) => false,
        Cheese::App(f, a) => neutral(f) && normal(a),
    }
}

fn brute(kind: Kind, n: usize, m: &Characteristic) -> BTreeSet<Cheese> {
    trees(kind.model, n, 0, m.total())
        .into_iter()
        .filter(|c| uses_ok(c, kind.family))
        .filter(|c| kind.class == TermClass::All || normal(c))
        .filter(|c| c.characteristic().unwrap() == *m)
        .collect()
}

fn keys() -> Vec<Characteristic> {
    [
        vec![],
        vec![1],
        vec![2],
        vec![0, 1],
        vec![1, 1],
        vec![0, 2],
        vec![0, 0, 1],
        vec![3],
        vec![1, 0, 1],
    ]
    .into_iter()
    .map(Characteristic::new)
    .collect()
}

fn limit(model: SizeModel) -> usize {
    match model {
        SizeModel::Natural => 8,
        _ => 6,
    }
}

#[test]
fn open_counts_and_sets_match_brute_force() {
    let mut counter = Counter::new();
    for kind in Kind::all() {
        for m in keys() {
            for n in 0..=limit(kind.model) {
                let expected = brute(kind, n, &m);
                let count = counter.count_kind(kind, n, &m);
                assert_eq!(count, BigUint::from(expected.len()), "{kind} n={n} m=[{m}]");
                let listed: Vec<Cheese> = enumerate(kind, n, &m).collect();
                let set: BTreeSet<Cheese> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len(), "duplicates in {kind} n={n} m=[{m}]");
                assert_eq!(set, expected, "{kind} n={n} m=[{m}]");
            }
        }
    }
}

#[test]
fn open_neutral_counts_match_brute_force() {
    let mut counter = Counter::new();
    for family in Family::ALL {
        for model in SizeModel::ALL {
            let kind = Kind::new(family, model, TermClass::Normal);
            for m in keys() {
                for n in 0..=limit(model) {
                    let expected = brute(kind, n, &m).into_iter().filter(neutral).count();
                    assert_eq!(
                        counter.count_neutral(family, model, n, &m),
                        BigUint::from(expected),
                        "{family:?} {model:?} n={n} m=[{m}]"
                    );
                }
            }
        }
    }
}
