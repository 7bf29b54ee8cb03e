//! Operating stack for an accelerated analog neuromorphic chip.
//!
//! The stack is layered bottom-up: ranged [`coords`] describe the chip's
//! fragmented address space, [`containers`] hold typed configuration with
//! bit-exact word encoding ([`memmap`] is the single source of truth for the
//! layout), [`chip`] is a deterministic behavioral simulator of the analog
//! core and digital event path, [`playback`] executes branch-free timed
//! instruction programs against it, [`graph`] compiles typed signal-flow
//! experiment graphs to playback programs, [`network`] places and routes
//! abstract population/projection networks, [`calib`] tunes analog parameters
//! against targets, [`plasticity`] implements the spike-driven learning rules
//! and [`mac`] the non-spiking multiply-accumulate mode.

pub mod calib;
pub mod chip;
pub mod containers;
pub mod coords;
pub mod exp;
pub mod graph;
pub mod mac;
pub mod memmap;
pub mod network;
pub mod plasticity;
pub mod playback;
