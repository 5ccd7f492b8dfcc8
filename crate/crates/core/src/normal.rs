//! Counting SwissCheeses without beta-redexes.
//!
//! A normal cheese is either neutral or an abstraction over a normal body.
//! A neutral cheese is a hole (a future index) applied to a sequence of
//! normal cheeses, so the neutral application bucket pairs a neutral
//! function with a normal argument over the splits of `m` itself: the
//! application does not add a binder. The abstraction buckets are the ones
//! of [`Counter::count`] with normal bodies.

use num_bigint::BigUint;

use crate::characteristic::Characteristic;
use crate::count::{with_counter, Counter, Sort};
use crate::term::{Family, SizeModel};

impl Counter {
    /// Normal cheeses of size `n` and characteristic `m`.
    pub fn count_nf(
        &mut self,
        family: Family,
        model: SizeModel,
        n: usize,
        m: &Characteristic,
    ) -> BigUint {
        self.get(Sort::Normal, family, model, n, m)
    }

    /// Neutral cheeses of size `n` and characteristic `m`.
    pub fn count_neutral(
        &mut self,
        family: Family,
        model: SizeModel,
        n: usize,
        m: &Characteristic,
    ) -> BigUint {
        self.get(Sort::Neutral, family, model, n, m)
    }
}

pub fn count_nf(family: Family, model: SizeModel, n: usize, m: &Characteristic) -> BigUint {
    with_counter(|c| c.count_nf(family, model, n, m))
}

pub fn count_neutral(family: Family, model: SizeModel, n: usize, m: &Characteristic) -> BigUint {
    with_counter(|c| c.count_neutral(family, model, n, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count;
    use num_traits::Zero;
    use Family::*;
    use SizeModel::*;

    fn closed() -> Characteristic {
        Characteristic::empty()
    }

    #[test]
    fn neutral_base_and_closed() {
        let one = Characteristic::single_hole();
        assert_eq!(count_neutral(Affine, Natural, 0, &one), BigUint::from(1u8));
        assert!(count_neutral(Affine, Natural, 0, &closed()).is_zero());
        // the head of a neutral term is a free index
        for n in 0..=15 {
            for family in Family::ALL {
                assert!(count_neutral(family, Natural, n, &closed()).is_zero());
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(count_nf(Affine, Natural, 6, &closed()), BigUint::from(7u8));
        assert_eq!(count_nf(Affine, Natural, 10, &closed()), BigUint::from(77u8));
        assert_eq!(count_nf(Linear, Var0, 7, &closed()), BigUint::from(367u16));
    }

    #[test]
    fn linear_natural_nine() {
        // frozen from the brute-force oracle: closed linear terms of natural
        // size 9 filtered by the normal-form predicate
        assert_eq!(count_nf(Linear, Natural, 9, &closed()), BigUint::from(8u8));
    }

    #[test]
    fn normal_forms_are_fewer() {
        for family in Family::ALL {
            for model in SizeModel::ALL {
                for n in 0..=20 {
                    assert!(count_nf(family, model, n, &closed()) <= count(family, model, n, &closed()));
                }
            }
        }
    }

    #[test]
    fn neutral_within_normal_on_open_keys() {
        let keys = [vec![1], vec![2], vec![0, 1], vec![1, 1], vec![0, 2], vec![3, 0, 1]];
        for family in Family::ALL {
            for model in SizeModel::ALL {
                for raw in &keys {
                    let m = Characteristic::new(raw.clone());
                    for n in 0..=12 {
                        assert!(count_neutral(family, model, n, &m) <= count_nf(family, model, n, &m));
                    }
                }
            }
        }
    }
}
