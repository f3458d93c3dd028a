//! Closed-form values computed without enumerating a group, for
//! cross-checking against the counting oracle.

mod formulas;
pub mod partition;

pub use formulas::{
    euler_phi, exp_alternating, exp_symmetric, metacyclic_exponent, phi_abelian, phi_abelian_p,
    phi_alternating, phi_dihedral, phi_hamiltonian, phi_symmetric, prime_power_parts,
    symmetric_exp_p_part,
};
pub use partition::{
    alternating_spectrum, count_order_alternating, count_order_symmetric, partition_exponent,
    symmetric_spectrum, Partition, Partitions, MAX_PARTITION_DEGREE,
};
