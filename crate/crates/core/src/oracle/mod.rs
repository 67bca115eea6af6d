//! Two constructions of `B(N,q,p)` straight from the strand functions, used to check the
//! closed form in [`crate::symbolic`].

pub mod compare;
pub mod exact;
pub mod float;

pub use compare::{compare_up_to_mirror, compare_up_to_mirror_limited, Comparison};
pub use exact::{
    crossing_values, crossings_at_value, default_phase, dump_events, enumerate_braid,
    enumerate_events, is_critical_phase, resolve_ms, sample_phases, CrossingEvent, PhaseSpec,
};
pub use float::{
    default_samples, detect_braid_float, detect_crossings_float, FloatCrossing,
    DEFAULT_SAMPLES_PER_QN,
};
