//! Multichannel channelization of the ring into diametric fiber pairs.

mod layout;
mod state;

pub use layout::{
    channel_overlap, equally_spaced, max_feasible_planes, validate_layout, write_layout_csv, ChannelLayout,
    ConstraintCheck, LayoutReport, AT_LEAST_ONE_PLANE, DEFAULT_FIBER_FACTOR, DEFAULT_SAFETY, FIBER_COVERS_RING,
    GAP_EXCEEDS_COINCIDENCE, GAP_EXCEEDS_FIBER, PLANES_ORDERED,
};
pub use state::{build_state, multichannel_entanglement, state_for_planes, Arm, Channel, MultichannelEntanglement, MultichannelState};
