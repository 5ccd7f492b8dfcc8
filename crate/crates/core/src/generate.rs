//! Exhaustive enumeration of SwissCheeses in a fixed order.
//!
//! The order follows the counting buckets: applications (in
//! [`Characteristic::all_combinations`] order, left operand in the outer
//! loop), then abstractions with binding (levels ascending; for each body,
//! the bound hole in preorder), then, for affine cheeses, the abstraction
//! with no binding. Normal forms list neutral cheeses before abstractions.
//!
//! Streams are lazy. Counts are used to skip empty sub-buckets, so a stream
//! never explores a branch that yields nothing.

use std::rc::Rc;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::characteristic::Characteristic;
use crate::count::{bindings, count_sort, no_binding, Sort};
use crate::term::{Cheese, Family, Kind, SizeModel, Term};

pub type Cheeses = Box<dyn Iterator<Item = Cheese>>;

/// All cheeses of `kind` with size `n` and characteristic `m`.
pub fn enumerate(kind: Kind, n: usize, m: &Characteristic) -> Cheeses {
    stream(kind.class.into(), kind.family, kind.model, n, m.clone())
}

/// All closed terms of `kind` with size `n`.
pub fn enumerate_closed(kind: Kind, n: usize) -> impl Iterator<Item = Term> {
    enumerate(kind, n, &Characteristic::empty())
        .map(|c| c.to_term().expect("closed cheese has no holes"))
}

fn stream(sort: Sort, family: Family, model: SizeModel, n: usize, m: Characteristic) -> Cheeses {
    if n == 0 {
        return if m.as_slice() == [1] {
            Box::new(std::iter::once(Cheese::Hole(0)))
        } else {
            Box::new(std::iter::empty())
        };
    }
    if count_sort(sort, family, model, n, &m).is_zero() {
        return Box::new(std::iter::empty());
    }
    match sort {
        Sort::All => Box::new(
            applications(Sort::All, Sort::All, family, model, n, &m)
                .chain(abstractions(Sort::All, family, model, n, &m)),
        ),
        Sort::Normal => Box::new(
            stream(Sort::Neutral, family, model, n, m.clone())
                .chain(abstractions(Sort::Normal, family, model, n, &m)),
        ),
        Sort::Neutral => applications(Sort::Neutral, Sort::Normal, family, model, n, &m),
    }
}

/// Right operands with at most this many cheeses are built once per split
/// and reused for every left operand.
const SHARED_ARGS: u64 = 1 << 12;

fn applications(
    left: Sort,
    right: Sort,
    family: Family,
    model: SizeModel,
    n: usize,
    m: &Characteristic,
) -> Cheeses {
    let combos: Vec<_> = m
        .all_combinations(n - 1)
        .filter_map(|((q, r), (k, rest))| {
            if count_sort(left, family, model, k, &q).is_zero() {
                return None;
            }
            let args = count_sort(right, family, model, rest, &r);
            (!args.is_zero()).then_some((q, r, k, rest, args))
        })
        .collect();
    Box::new(combos.into_iter().flat_map(move |(q, r, k, rest, args)| -> Cheeses {
        let funs = stream(left, family, model, k, q);
        if args <= BigUint::from(SHARED_ARGS) {
            let args: Rc<[Cheese]> = stream(right, family, model, rest, r).collect();
            Box::new(funs.flat_map(move |fun| {
                let args = Rc::clone(&args);
                (0..args.len()).map(move |i| fun.clone().apply(args[i].clone()))
            }))
        } else {
            Box::new(funs.flat_map(move |fun| {
                stream(right, family, model, rest, r.clone()).map(move |arg| fun.clone().apply(arg))
            }))
        }
    }))
}

fn abstractions(sort: Sort, family: Family, model: SizeModel, n: usize, m: &Characteristic) -> Cheeses {
    let binding = bindings(model, n, m).into_iter().flat_map(move |b| {
        let (level, choices) = (b.level, b.choices);
        stream(sort, family, model, b.inner_size, b.inner).flat_map(move |body| {
            (0..choices).map(move |occurrence| {
                body.clone()
                    .abstract_with_binding(level, occurrence)
                    .expect("body has a hole at this level per its characteristic")
            })
        })
    });
    let free = no_binding(n, m)
        .filter(|_| family == Family::Affine)
        .into_iter()
        .flat_map(move |(size, body)| stream(sort, family, model, size, body))
        .map(Cheese::abstract_no_binding);
    Box::new(binding.chain(free))
}
