//! Operator-level model of diatomic-molecule vibration in the Heisenberg picture.
//!
//! The vibrational Hamiltonian is written as a polynomial in the harmonic one,
//! H⁽³⁾ = H₀ + γ₂H₀² + γ₃H₀³. From it follow
//!
//! * coupled equations of motion for ⟨x⟩ and ⟨p⟩ and their closed-form
//!   two-frequency solutions ([`dynamics`]);
//! * the stability of each level and the last stable (dissociation) level,
//!   with the cut-off frequency reached there ([`stability`]);
//! * Morse/Hooke potentials along those trajectories ([`potential`]);
//! * an independent numerical check of all of the above ([`oracle`]).
//!
//! ```
//! use diatomic::{stability, Molecule};
//!
//! let h2 = Molecule::hydrogen();
//! assert_eq!(format!("{:.1}", stability::n_d2(&h2)), "17.5");
//! ```

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod hamiltonian;
pub mod oracle;
pub mod params;
pub mod potential;
pub mod stability;

pub use dynamics::{FrequencyPair, InitialConditions, MomentumRule, Trajectory};
pub use error::{Error, Result};
pub use hamiltonian::{EnergyLevel, Order};
pub use params::{DerivedParams, Molecule, MoleculeParams, PhysicalConstants, HBAR};
pub use stability::{CharacteristicRoots, Classification, StabilityReport};
