//! Numerical and exact tools for K3 surfaces with transcendental lattice
//! `U ⊕ U ⊕ A2(−1)`: Eisenstein arithmetic, lattice bookkeeping, Hermitian and
//! Siegel theta constants, their Fourier expansions, Burkhardt invariants, the
//! Hermitian modular group and the associated Jacobian elliptic fibration.

pub mod error;
pub mod exactnum;
pub mod fibration;
pub mod invariants;
pub mod lattices;
pub mod modgroup;
pub mod poly;
pub mod qseries;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
