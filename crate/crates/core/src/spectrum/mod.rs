//! Decomposition of `L^2(L\G)` into irreducibles and the wave operator.

pub mod decomposition;
pub mod irrep;
pub mod report;
pub mod wave;

pub use decomposition::{
    chain_pullbacks, h0_decomposition, h1_label, h1_multiplicity, h1_period, h1_window, lattice_spectrum,
    pullback_spectrum, standard_spectrum, Part, SpectrumWindow, WindowBounds,
};
pub use irrep::{casimir_value, pullback_rep, wave_value, CasimirConvention, IrrRep, PiPoly, Pullback};
pub use report::{render_spectrum, render_wave, Format};
pub use wave::{accumulation_demo, straight_wave_set, wave_spectrum, AccumulationDemo};
