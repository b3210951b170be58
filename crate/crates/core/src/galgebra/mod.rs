//! G-algebras of Lie type: presentations, multiplication, presets,
//! homogenization, initial forms and substitution maps.

pub mod algebra;
pub mod map;
pub mod mult;
pub mod presets;
pub mod weights;

pub use algebra::{GAlgebra, Relation, VarRole};
pub use map::{substitute_euler, AlgebraMap};
pub use presets::{
    commutative, d_name, default_names, dt_names, e_algebra, preset, s_names, sij_names, weyl, weyl_dt_gl, weyl_gl, weyl_homog,
    weyl_homog_named, weyl_named, weyl_s, weyl_shift, PresetKind,
};
pub use weights::{dehomogenize, homogenize_weighted, initial_form, initial_form_weights, minus_w_w, pair_weights};
