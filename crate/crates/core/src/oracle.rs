//! Brute-force enumeration of every closed lambda term of a given size.
//!
//! This is ground truth for the recurrences: it builds plain terms by
//! structural recursion on size and the number of enclosing binders, and
//! only afterwards filters them with the predicates of [`Term`]. It shares
//! nothing with the counting or generation code.

use crate::error::{Error, Result};
use crate::term::{Kind, SizeModel, Term};

/// Largest sizes the oracle accepts, per size model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub natural: usize,
    pub var0: usize,
    pub var1: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            natural: 12,
            var0: 9,
            var1: 9,
        }
    }
}

impl OracleBudget {
    pub fn cap(&self, model: SizeModel) -> usize {
        match model {
            SizeModel::Natural => self.natural,
            SizeModel::Var0 => self.var0,
            SizeModel::Var1 => self.var1,
        }
    }

    fn check(&self, n: usize, model: SizeModel) -> Result<()> {
        let cap = self.cap(model);
        if n > cap {
            return Err(Error::BudgetExceeded { n, cap });
        }
        Ok(())
    }
}

/// Calls `f` on every term of size `size` whose free indices are below
/// `depth`.
fn visit(size: usize, depth: usize, model: SizeModel, f: &mut dyn FnMut(Term)) {
    for k in 0..depth {
        if model.index_size(k) == size {
            f(Term::Index(k));
        }
    }
    if size == 0 {
        return;
    }
    visit(size - 1, depth + 1, model, &mut |body| f(Term::abs(body)));
    for left in 0..size {
        let right = size - 1 - left;
        visit(left, depth, model, &mut |fun| {
            visit(right, depth, model, &mut |arg| f(Term::app(fun.clone(), arg)));
        });
    }
}

/// Calls `f` on every closed term of size `n`.
pub fn oracle_visit_closed(n: usize, model: SizeModel, f: &mut dyn FnMut(Term)) -> Result<()> {
    OracleBudget::default().check(n, model)?;
    visit(n, 0, model, f);
    Ok(())
}

pub fn oracle_enumerate_closed(n: usize, model: SizeModel) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    oracle_visit_closed(n, model, &mut |t| out.push(t))?;
    Ok(out)
}

/// Closed terms of `kind` with size `n`.
pub fn oracle_enumerate(kind: Kind, n: usize) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    oracle_visit_closed(n, kind.model, &mut |t| {
        if kind.admits(&t) {
            out.push(t);
        }
    })?;
    Ok(out)
}

pub fn oracle_count(kind: Kind, n: usize) -> Result<u64> {
    let mut count = 0;
    oracle_visit_closed(n, kind.model, &mut |t| {
        if kind.admits(&t) {
            count += 1;
        }
    })?;
    Ok(count)
}
