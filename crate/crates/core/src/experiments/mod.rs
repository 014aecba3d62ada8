//! FASTA ingestion and ordering sweeps over k-mer ranks.

mod fasta;
mod sweep;

pub use fasta::{load_fasta, parse_fasta, AmbiguityPolicy, SequenceRecord};
pub use sweep::{
    gnuplot_data, ordering_sweep, ordering_sweep_many, transform_all, SweepReport, SweepStrategy,
};
