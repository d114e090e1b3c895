//! The affine (super) Yangian side: presentations, the maps Φ and ev, and a
//! verifier for their defining relations on truncated vacuum modules.

pub mod cartan;
pub mod expr;
pub mod images;
pub mod relations;
pub mod suite;
pub mod verify;

pub use cartan::CartanData;
pub use expr::ModeExpr;
pub use images::{ev_images, phi_images, phi_supported, EvReading, Images, PhiReading};
pub use relations::{mini_relations, prop_relations, psi_translate, Family, PsiReading, RelExpr, RelReading, RelationSpec, YGen, YParams};
pub use suite::{ev_suite, phi_suite, phi_suite_fresh};
pub use verify::Evaluator;
