//! Shared fixtures for the benchmarks.

use fqhg::constructions::{hecke_pair, omega_free, twosub_pair, Example};
use fqhg::FiniteGroup;

/// `S_n` with the stabilizer of the last point, `⟨(1 2), ..., (1 n-1)⟩`.
pub fn hecke_sn(n: usize) -> Example {
    let g = FiniteGroup::symmetric(n).expect("small n");
    let gens: Vec<String> = (2..n).map(|k| format!("(1 {k})")).collect();
    let h = g.subgroup_from_labels(&gens).expect("valid labels");
    hecke_pair(&g, &h).expect("hecke pair").example
}

pub fn free_cyclic(m: usize, n: usize) -> Example {
    let h = FiniteGroup::cyclic(m).expect("cyclic");
    let k = FiniteGroup::cyclic(n).expect("cyclic");
    twosub_pair(&omega_free(&h, &k).expect("free")).expect("twosub")
}
