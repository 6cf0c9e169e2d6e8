//! Parameter sweeps over the `mhs-core` verifiers, plus report output.

pub mod config;
pub mod output;
pub mod sweep;

pub use config::{ConfigError, PrimeRange, SweepConfig};
pub use output::{emit_report, Format, Summary};
pub use sweep::{plan, plan_group, run_sweep, run_tasks, Group, Task};
