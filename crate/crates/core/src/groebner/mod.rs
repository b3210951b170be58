//! Left Gröbner bases over G-algebras and the operations built on them.

pub mod buchberger;
pub mod dim;
pub mod elim;
pub mod linreduce;
pub mod module;
pub mod reduce;

use crate::polyarith::{ModuleRule, MonOrder, Poly};

pub use buchberger::{buchberger, reduce_gb, verify_gb, GbOptions, Strategy};
pub use dim::{lt_dimension, lt_dimension_of};
pub use elim::{eliminate, ideal_equal, ideal_contains};
pub use linreduce::{lin_reduce, LinearReducer};
pub use module::{lift, modulo_kernel};
pub use reduce::{normal_form, normal_form_list, reduces_to_zero};

#[derive(Clone, Debug, PartialEq)]
pub struct GBasis<K> {
    pub gens: Vec<Poly<K>>,
    pub order: MonOrder,
    pub module_rule: ModuleRule,
    /// Monic, minimal, tail-reduced and sorted ascending by leading term.
    pub reduced: bool,
}

impl<K> GBasis<K> {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}
