//! Euler classes of split crystallographic groups `Γ = Z^n ⋊ G`.
//!
//! Given a finite point group `G ⊂ GL_n(Z)` and a field characteristic `p`,
//! the crate decides whether the class of the trivial module in the
//! Grothendieck group of `kΓ` has finite order, bounds that order, and
//! determines it exactly in the classified cases, all in exact integer
//! arithmetic.
//!
//! ```
//! use eulerclass::{catalog, euler::{exact_order, Characteristic, Verdict}};
//!
//! let p4m = catalog::lookup("p4m").unwrap().cryst(eulerclass::DEFAULT_CAP).unwrap();
//! let two = Characteristic::new(2).unwrap();
//! assert_eq!(exact_order(&p4m, two).verdict, Verdict::Known(4));
//! ```

pub mod catalog;
pub mod crystal;
pub mod euler;
pub mod fingroup;
pub mod groupfile;
pub mod intmat;
pub mod report;

pub use crystal::{make_cryst, CrystGroup};
pub use euler::{exact_order, Characteristic, OrderResult, Verdict};
pub use fingroup::{closure, PointGroup, DEFAULT_CAP};
pub use intmat::{IntMatrix, IntPoly, Lattice};
