//! Lambda terms in de Bruijn notation and SwissCheeses, i.e. terms with
//! holes standing for variable occurrences that have not been bound yet.
//!
//! A hole records its level, the number of abstractions above it. The level
//! is redundant with the position of the hole, which makes the
//! characteristic of a cheese a purely local computation and lets
//! [`Cheese::characteristic`] check that constructions kept it consistent.

use std::fmt;

use crate::characteristic::Characteristic;
use crate::error::{Error, Result};

/// How the size of a variable is measured. Abstractions and applications
/// always have size 1, holes size 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeModel {
    /// Index `k` has size `k + 1`.
    Natural,
    /// Variables have size 0.
    Var0,
    /// Variables have size 1.
    Var1,
}

impl SizeModel {
    pub const ALL: [SizeModel; 3] = [SizeModel::Natural, SizeModel::Var0, SizeModel::Var1];

    /// Size of the de Bruijn index `k`.
    pub fn index_size(self, k: usize) -> usize {
        match self {
            SizeModel::Natural => k + 1,
            SizeModel::Var0 => 0,
            SizeModel::Var1 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SizeModel::Natural => "natural",
            SizeModel::Var0 => "var0",
            SizeModel::Var1 => "var1",
        }
    }
}

/// Linear terms bind every variable exactly once, affine terms at most once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Linear,
    Affine,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Linear, Family::Affine];

    pub fn name(self) -> &'static str {
        match self {
            Family::Linear => "linear",
            Family::Affine => "affine",
        }
    }

    /// Whether `t` belongs to the family.
    pub fn admits(self, t: &Term) -> bool {
        match self {
            Family::Linear => t.is_linear(),
            Family::Affine => t.is_affine(),
        }
    }
}

/// All terms, or only those in beta normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermClass {
    All,
    Normal,
}

impl TermClass {
    pub const ALL: [TermClass; 2] = [TermClass::All, TermClass::Normal];

    pub fn name(self) -> &'static str {
        match self {
            TermClass::All => "all",
            TermClass::Normal => "nf",
        }
    }
}

/// A family, a size model and a term class: everything that selects a
/// counting sequence except the size itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Kind {
    pub family: Family,
    pub model: SizeModel,
    pub class: TermClass,
}

impl Kind {
    pub const fn new(family: Family, model: SizeModel, class: TermClass) -> Self {
        Kind {
            family,
            model,
            class,
        }
    }

    /// Every combination, in a fixed order.
    pub fn all() -> impl Iterator<Item = Kind> {
        Family::ALL.into_iter().flat_map(|family| {
            SizeModel::ALL.into_iter().flat_map(move |model| {
                TermClass::ALL
                    .into_iter()
                    .map(move |class| Kind::new(family, model, class))
            })
        })
    }

    /// Whether the closed term `t` belongs to this kind (size excluded).
    pub fn admits(&self, t: &Term) -> bool {
        self.family.admits(t) && (self.class == TermClass::All || t.is_normal_form())
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}/{}",
            self.family.name(),
            self.model.name(),
            self.class.name()
        )
    }
}

/// A pure lambda term with de Bruijn indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Index(usize),
    Abs(Box<Term>),
    App(Box<Term>, Box<Term>),
}

/// A lambda term with leveled holes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cheese {
    Index(usize),
    Abs(Box<Cheese>),
    App(Box<Cheese>, Box<Cheese>),
    Hole(usize),
}

impl Term {
    pub fn abs(body: Term) -> Term {
        Term::Abs(Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn size(&self, model: SizeModel) -> usize {
        match self {
            Term::Index(k) => model.index_size(*k),
            Term::Abs(body) => 1 + body.size(model),
            Term::App(fun, arg) => 1 + fun.size(model) + arg.size(model),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.first_free(0).is_none()
    }

    /// The first free index in preorder, with the depth it occurs at.
    fn first_free(&self, depth: usize) -> Option<(usize, usize)> {
        match self {
            Term::Index(k) if *k >= depth => Some((*k, depth)),
            Term::Index(_) => None,
            Term::Abs(body) => body.first_free(depth + 1),
            Term::App(fun, arg) => fun.first_free(depth).or_else(|| arg.first_free(depth)),
        }
    }

    /// Every abstraction binds exactly one occurrence.
    pub fn is_linear(&self) -> bool {
        self.binding_counts_ok(|uses| uses == 1)
    }

    /// Every abstraction binds at most one occurrence.
    pub fn is_affine(&self) -> bool {
        self.binding_counts_ok(|uses| uses <= 1)
    }

    fn binding_counts_ok(&self, ok: impl Fn(usize) -> bool + Copy) -> bool {
        fn walk(t: &Term, uses: &mut Vec<usize>, ok: impl Fn(usize) -> bool + Copy) -> bool {
            match t {
                Term::Index(k) => {
                    if let Some(slot) = uses.len().checked_sub(k + 1) {
                        uses[slot] += 1;
                    }
                    true
                }
                Term::Abs(body) => {
                    uses.push(0);
                    let inner = walk(body, uses, ok);
                    let own = uses.pop().unwrap_or_default();
                    inner && ok(own)
                }
                Term::App(fun, arg) => walk(fun, uses, ok) && walk(arg, uses, ok),
            }
        }
        walk(self, &mut Vec::new(), ok)
    }

    /// No subterm of the shape `(\t u)`.
    pub fn is_normal_form(&self) -> bool {
        match self {
            Term::Index(_) => true,
            Term::Abs(body) => body.is_normal_form(),
            Term::App(fun, arg) => {
                !matches!(**fun, Term::Abs(_)) && fun.is_normal_form() && arg.is_normal_form()
            }
        }
    }

    /// An index applied to a sequence of normal forms.
    pub fn is_neutral(&self) -> bool {
        match self {
            Term::Index(_) => true,
            Term::Abs(_) => false,
            Term::App(fun, arg) => fun.is_neutral() && arg.is_normal_form(),
        }
    }

    /// Prints with named variables: the binder at depth `d` binds `x<d>`.
    pub fn to_named(&self) -> Result<String> {
        if let Some((index, depth)) = self.first_free(0) {
            return Err(Error::OpenTerm { index, depth });
        }
        let mut out = String::new();
        self.write_named(0, &mut out);
        Ok(out)
    }

    fn write_named(&self, depth: usize, out: &mut String) {
        match self {
            Term::Index(k) => {
                out.push('x');
                out.push_str(&(depth - 1 - k).to_string());
            }
            Term::Abs(body) => {
                out.push_str(&format!("\\x{depth}."));
                body.write_named(depth + 1, out);
            }
            Term::App(fun, arg) => {
                out.push('(');
                fun.write_named(depth, out);
                out.push(' ');
                arg.write_named(depth, out);
                out.push(')');
            }
        }
    }
}

impl Cheese {
    pub fn size(&self, model: SizeModel) -> usize {
        match self {
            Cheese::Index(k) => model.index_size(*k),
            Cheese::Abs(body) => 1 + body.size(model),
            Cheese::App(fun, arg) => 1 + fun.size(model) + arg.size(model),
            Cheese::Hole(_) => 0,
        }
    }

    /// Counts holes per level, checking every stored level against the
    /// number of binders above the hole.
    pub fn characteristic(&self) -> Result<Characteristic> {
        fn walk(c: &Cheese, depth: usize, counts: &mut Vec<usize>) -> Result<()> {
            match c {
                Cheese::Index(_) => Ok(()),
                Cheese::Abs(body) => walk(body, depth + 1, counts),
                Cheese::App(fun, arg) => {
                    walk(fun, depth, counts)?;
                    walk(arg, depth, counts)
                }
                Cheese::Hole(level) => {
                    if *level != depth {
                        return Err(Error::InconsistentHoleLevel {
                            stored: *level,
                            depth,
                        });
                    }
                    if counts.len() <= depth {
                        counts.resize(depth + 1, 0);
                    }
                    counts[depth] += 1;
                    Ok(())
                }
            }
        }
        let mut counts = Vec::new();
        walk(self, 0, &mut counts)?;
        Ok(Characteristic::new(counts))
    }

    pub fn holes(&self) -> usize {
        match self {
            Cheese::Index(_) => 0,
            Cheese::Abs(body) => body.holes(),
            Cheese::App(fun, arg) => fun.holes() + arg.holes(),
            Cheese::Hole(_) => 1,
        }
    }

    /// Application node; characteristics add componentwise.
    pub fn apply(self, arg: Cheese) -> Cheese {
        Cheese::App(Box::new(self), Box::new(arg))
    }

    /// Puts a binder on top that binds nothing. Every hole moves one level
    /// up. Only affine cheeses are built this way.
    pub fn abstract_no_binding(self) -> Cheese {
        Cheese::Abs(Box::new(self.raise()))
    }

    /// Puts a binder on top and binds it at the `occurrence`-th hole of
    /// `level`, counting holes in left-to-right preorder. The chosen hole
    /// becomes the index `level`; the others move one level up.
    pub fn abstract_with_binding(self, level: usize, occurrence: usize) -> Result<Cheese> {
        fn walk(c: Cheese, level: usize, remaining: &mut Option<usize>) -> Cheese {
            match c {
                Cheese::Hole(l) if l == level && *remaining == Some(0) => {
                    *remaining = None;
                    Cheese::Index(level)
                }
                Cheese::Hole(l) => {
                    if l == level {
                        if let Some(r) = remaining.as_mut() {
                            *r -= 1;
                        }
                    }
                    Cheese::Hole(l + 1)
                }
                Cheese::Index(k) => Cheese::Index(k),
                Cheese::Abs(body) => Cheese::Abs(Box::new(walk(*body, level, remaining))),
                Cheese::App(fun, arg) => {
                    let fun = walk(*fun, level, remaining);
                    let arg = walk(*arg, level, remaining);
                    Cheese::App(Box::new(fun), Box::new(arg))
                }
            }
        }
        let mut remaining = Some(occurrence);
        let body = walk(self, level, &mut remaining);
        if remaining.is_some() {
            return Err(Error::NoSuchHole { level, occurrence });
        }
        Ok(Cheese::Abs(Box::new(body)))
    }

    fn raise(self) -> Cheese {
        match self {
            Cheese::Hole(l) => Cheese::Hole(l + 1),
            Cheese::Index(k) => Cheese::Index(k),
            Cheese::Abs(body) => Cheese::Abs(Box::new(body.raise())),
            Cheese::App(fun, arg) => Cheese::App(Box::new(fun.raise()), Box::new(arg.raise())),
        }
    }

    /// The underlying term, if there are no holes left.
    pub fn to_term(&self) -> Option<Term> {
        Some(match self {
            Cheese::Index(k) => Term::Index(*k),
            Cheese::Abs(body) => Term::abs(body.to_term()?),
            Cheese::App(fun, arg) => Term::app(fun.to_term()?, arg.to_term()?),
            Cheese::Hole(_) => return None,
        })
    }
}

impl From<&Term> for Cheese {
    fn from(t: &Term) -> Cheese {
        match t {
            Term::Index(k) => Cheese::Index(*k),
            Term::Abs(body) => Cheese::Abs(Box::new(Cheese::from(&**body))),
            Term::App(fun, arg) => Cheese::App(
                Box::new(Cheese::from(&**fun)),
                Box::new(Cheese::from(&**arg)),
            ),
        }
    }
}

impl From<Term> for Cheese {
    fn from(t: Term) -> Cheese {
        Cheese::from(&t)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Index(k) => write!(f, "{k}"),
            Term::Abs(body) => write!(f, "\\{body}"),
            Term::App(fun, arg) => write!(f, "({fun} {arg})"),
        }
    }
}

impl fmt::Display for Cheese {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cheese::Index(k) => write!(f, "{k}"),
            Cheese::Abs(body) => write!(f, "\\{body}"),
            Cheese::App(fun, arg) => write!(f, "({fun} {arg})"),
            Cheese::Hole(level) => write!(f, "[{level}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    fn chars(v: &[usize]) -> Characteristic {
        Characteristic::new(v.to_vec())
    }

    /// `\( [1] 0 )`, characteristic (0,1).
    fn c1() -> Cheese {
        Cheese::Abs(Box::new(Cheese::Hole(1).apply(Cheese::Index(0))))
    }

    /// `( \[1] [0] )`, characteristic (1,1).
    fn c2() -> Cheese {
        Cheese::Abs(Box::new(Cheese::Hole(1))).apply(Cheese::Hole(0))
    }

    #[test]
    fn sizes() {
        assert_eq!(Cheese::Index(2).size(SizeModel::Natural), 3);
        assert_eq!(Cheese::Hole(0).size(SizeModel::Natural), 0);
        assert_eq!(t("\\\\\\\\2").size(SizeModel::Natural), 7);
        assert_eq!(Cheese::Index(2).size(SizeModel::Var0), 0);
        assert_eq!(Cheese::Index(2).size(SizeModel::Var1), 1);
    }

    #[test]
    fn example_characteristics() {
        assert_eq!(c1().characteristic().unwrap(), chars(&[0, 1]));
        assert_eq!(c2().characteristic().unwrap(), chars(&[1, 1]));
        assert_eq!(c1().apply(c2()).characteristic().unwrap(), chars(&[1, 2]));
        assert_eq!(Cheese::from(t("\\(0 \\0)")).characteristic().unwrap(), chars(&[]));
    }

    #[test]
    fn inconsistent_level_is_reported() {
        let bad = Cheese::Abs(Box::new(Cheese::Hole(0)));
        assert_eq!(
            bad.characteristic(),
            Err(Error::InconsistentHoleLevel {
                stored: 0,
                depth: 1
            })
        );
    }

    #[test]
    fn closedness() {
        assert!(t("\\0").is_closed());
        assert!(!t("0").is_closed());
        assert!(!t("\\1").is_closed());
        assert!(t("\\\\(1 0)").is_closed());
    }

    #[test]
    fn linearity() {
        assert!(t("\\0").is_linear() && t("\\0").is_affine());
        assert!(!t("\\\\1").is_linear() && t("\\\\1").is_affine());
        assert!(!t("\\(0 0)").is_linear() && !t("\\(0 0)").is_affine());
        // free indices are not constrained
        assert!(t("(3 3)").is_linear());
    }

    #[test]
    fn normal_forms() {
        assert!(!t("(\\0 \\0)").is_normal_form());
        assert!(t("\\0").is_normal_form() && !t("\\0").is_neutral());
        assert!(t("(0 \\0)").is_neutral());
        assert!(!t("\\(0 (\\0 1))").is_normal_form());
        assert!(!t("((0 \\0) (\\0 \\0))").is_neutral());
    }

    #[test]
    fn application() {
        let c = Cheese::Hole(0).apply(Cheese::Hole(0));
        assert_eq!(c.characteristic().unwrap(), chars(&[2]));
        assert_eq!(c.size(SizeModel::Natural), 1);
        let id = Cheese::from(t("\\0"));
        let c = id.clone().apply(id);
        assert_eq!(c.to_string(), "(\\0 \\0)");
        assert_eq!(c.size(SizeModel::Natural), 5);
    }

    #[test]
    fn abstraction_without_binding() {
        let c = Cheese::Hole(0).abstract_no_binding();
        assert_eq!(c.to_string(), "\\[1]");
        assert_eq!(c.characteristic().unwrap(), chars(&[0, 1]));
        let c = c2().abstract_no_binding();
        assert_eq!(c.to_string(), "\\(\\[2] [1])");
        let c = Cheese::from(t("\\0")).abstract_no_binding();
        assert_eq!(c.to_string(), "\\\\0");
    }

    #[test]
    fn abstraction_with_binding() {
        let c = Cheese::Hole(0).abstract_with_binding(0, 0).unwrap();
        assert_eq!(c.to_string(), "\\0");
        assert_eq!(c.size(SizeModel::Natural), 2);

        let c = Cheese::Hole(0)
            .apply(Cheese::Hole(0))
            .abstract_with_binding(0, 0)
            .unwrap();
        assert_eq!(c.to_string(), "\\(0 [1])");
        assert_eq!(c.characteristic().unwrap(), chars(&[0, 1]));

        // bind the level-1 hole of c2 inside c1 @ c2
        let c = c1().apply(c2()).abstract_with_binding(1, 1).unwrap();
        assert_eq!(c.to_string(), "\\(\\([2] 0) (\\1 [1]))");
        assert_eq!(c.characteristic().unwrap(), chars(&[0, 1, 1]));
    }

    #[test]
    fn binding_a_missing_hole_fails() {
        assert_eq!(
            Cheese::Hole(0).abstract_with_binding(0, 1),
            Err(Error::NoSuchHole {
                level: 0,
                occurrence: 1
            })
        );
        assert!(Cheese::Hole(0).abstract_with_binding(1, 0).is_err());
    }

    #[test]
    fn named_printing() {
        assert_eq!(t("\\0").to_named().unwrap(), "\\x0.x0");
        assert_eq!(t("\\(0 \\0)").to_named().unwrap(), "\\x0.(x0 \\x1.x1)");
        assert_eq!(t("\\\\(1 0)").to_named().unwrap(), "\\x0.\\x1.(x0 x1)");
        assert_eq!(
            t("1").to_named(),
            Err(Error::OpenTerm { index: 1, depth: 0 })
        );
    }

    #[test]
    fn kinds_cover_twelve_combinations() {
        assert_eq!(Kind::all().count(), 12);
        let k = Kind::new(Family::Affine, SizeModel::Var1, TermClass::Normal);
        assert_eq!(k.to_string(), "affine/var1/nf");
    }
}
