//! Typed configuration containers with bit-exact word encoding.
//!
//! Each container type pairs with one location kind; encoding yields the
//! `(address, word)` list for that entity's footprint per the layout tables in
//! [`crate::memmap`], and decoding is the exact inverse on valid containers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coords::{
    CrossbarInputOnChip, CrossbarOutputOnChip, HemisphereOnChip, NeuronCircuitOnChip,
    SynapseDriverOnHemisphere, SynapseOnSynapseRow, SynapseRowOnHemisphere,
};
use crate::memmap::{self, FieldSpec};

mod logical;

pub use logical::{
    CircuitOffset, LogicalNeuron, LogicalNeuronError, Morphology, MorphologyBuilder, PlacedCircuit,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContainerError {
    #[error("container kind {container:?} does not match location {location}")]
    KindMismatch {
        container: ContainerKind,
        location: String,
    },
    #[error("missing word at address 0x{0:08X}")]
    MissingWord(u32),
    #[error("unknown address 0x{0:08X} for this container footprint")]
    UnknownAddress(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContainerKind {
    AtomicNeuron,
    Synapse,
    SynapseDriver,
    CrossbarNode,
}

/// Leak term of one neuron circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LeakConfig {
    pub v_leak: u16,
    pub i_bias: u16,
    pub enable_division: bool,
    pub enable_multiplication: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ThresholdConfig {
    pub value: u16,
    pub enable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ResetConfig {
    pub value: u16,
}

/// Refractory period in ticks of 1 us.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RefractoryConfig {
    pub period: u8,
}

/// One synaptic input branch (excitatory or inhibitory).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SynapticInputConfig {
    pub i_bias_gm: u16,
    pub i_bias_tau: u16,
    pub enable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DigitalConfig {
    pub enable_spike_output: bool,
    pub enable_fire: bool,
}

/// Membrane interconnection switches; see `containers::logical` for the
/// realized topology semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MultiCompartmentConfig {
    pub connect_right: bool,
    pub connect_to_shared_line: bool,
    pub enable_resistor: bool,
    pub i_bias_resistor: u16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReadoutConfig {
    pub enable_madc: bool,
}

/// Full analog and digital configuration of a single neuron circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AtomicNeuron {
    pub leak: LeakConfig,
    pub threshold: ThresholdConfig,
    pub reset: ResetConfig,
    pub refractory: RefractoryConfig,
    pub synaptic_input_exc: SynapticInputConfig,
    pub synaptic_input_inh: SynapticInputConfig,
    pub digital: DigitalConfig,
    pub multicompartment: MultiCompartmentConfig,
    pub readout: ReadoutConfig,
}

impl AtomicNeuron {
    fn field(&self, name: &str) -> u32 {
        match name {
            "leak.v_leak" => self.leak.v_leak as u32,
            "leak.i_bias" => self.leak.i_bias as u32,
            "leak.enable_division" => self.leak.enable_division as u32,
            "leak.enable_multiplication" => self.leak.enable_multiplication as u32,
            "threshold.value" => self.threshold.value as u32,
            "threshold.enable" => self.threshold.enable as u32,
            "reset.value" => self.reset.value as u32,
            "refractory.period" => self.refractory.period as u32,
            "synaptic_input_exc.i_bias_gm" => self.synaptic_input_exc.i_bias_gm as u32,
            "synaptic_input_exc.i_bias_tau" => self.synaptic_input_exc.i_bias_tau as u32,
            "synaptic_input_exc.enable" => self.synaptic_input_exc.enable as u32,
            "synaptic_input_inh.i_bias_gm" => self.synaptic_input_inh.i_bias_gm as u32,
            "synaptic_input_inh.i_bias_tau" => self.synaptic_input_inh.i_bias_tau as u32,
            "synaptic_input_inh.enable" => self.synaptic_input_inh.enable as u32,
            "digital.enable_spike_output" => self.digital.enable_spike_output as u32,
            "digital.enable_fire" => self.digital.enable_fire as u32,
            "multicompartment.connect_right" => self.multicompartment.connect_right as u32,
            "multicompartment.connect_to_shared_line" => {
                self.multicompartment.connect_to_shared_line as u32
            }
            "multicompartment.enable_resistor" => self.multicompartment.enable_resistor as u32,
            "multicompartment.i_bias_resistor" => self.multicompartment.i_bias_resistor as u32,
            "readout.enable_madc" => self.readout.enable_madc as u32,
            _ => unreachable!("unknown neuron field {name}"),
        }
    }

    fn set_field(&mut self, name: &str, v: u32) {
        match name {
            "leak.v_leak" => self.leak.v_leak = v as u16,
            "leak.i_bias" => self.leak.i_bias = v as u16,
            "leak.enable_division" => self.leak.enable_division = v != 0,
            "leak.enable_multiplication" => self.leak.enable_multiplication = v != 0,
            "threshold.value" => self.threshold.value = v as u16,
            "threshold.enable" => self.threshold.enable = v != 0,
            "reset.value" => self.reset.value = v as u16,
            "refractory.period" => self.refractory.period = v as u8,
            "synaptic_input_exc.i_bias_gm" => self.synaptic_input_exc.i_bias_gm = v as u16,
            "synaptic_input_exc.i_bias_tau" => self.synaptic_input_exc.i_bias_tau = v as u16,
            "synaptic_input_exc.enable" => self.synaptic_input_exc.enable = v != 0,
            "synaptic_input_inh.i_bias_gm" => self.synaptic_input_inh.i_bias_gm = v as u16,
            "synaptic_input_inh.i_bias_tau" => self.synaptic_input_inh.i_bias_tau = v as u16,
            "synaptic_input_inh.enable" => self.synaptic_input_inh.enable = v != 0,
            "digital.enable_spike_output" => self.digital.enable_spike_output = v != 0,
            "digital.enable_fire" => self.digital.enable_fire = v != 0,
            "multicompartment.connect_right" => self.multicompartment.connect_right = v != 0,
            "multicompartment.connect_to_shared_line" => {
                self.multicompartment.connect_to_shared_line = v != 0
            }
            "multicompartment.enable_resistor" => self.multicompartment.enable_resistor = v != 0,
            "multicompartment.i_bias_resistor" => {
                self.multicompartment.i_bias_resistor = v as u16
            }
            "readout.enable_madc" => self.readout.enable_madc = v != 0,
            _ => unreachable!("unknown neuron field {name}"),
        }
    }

    /// Range check on all analog fields; encoding masks values, so callers
    /// building containers from untrusted input should validate first.
    pub fn validate(&self) -> bool {
        let ten_bit = [
            self.leak.v_leak,
            self.leak.i_bias,
            self.threshold.value,
            self.reset.value,
            self.synaptic_input_exc.i_bias_gm,
            self.synaptic_input_exc.i_bias_tau,
            self.synaptic_input_inh.i_bias_gm,
            self.synaptic_input_inh.i_bias_tau,
            self.multicompartment.i_bias_resistor,
        ];
        ten_bit.iter().all(|&v| v < 1024)
    }

    /// Encode to the circuit's 4-word footprint.
    pub fn encode(&self, at: NeuronCircuitOnChip) -> Vec<(u32, u32)> {
        encode_fields(
            memmap::NEURON_FIELDS,
            memmap::neuron_base(at),
            memmap::NEURON.words,
            |name| self.field(name),
        )
    }

    pub fn decode(
        at: NeuronCircuitOnChip,
        words: &[(u32, u32)],
    ) -> Result<AtomicNeuron, ContainerError> {
        let mut out = AtomicNeuron::default();
        decode_fields(
            memmap::NEURON_FIELDS,
            memmap::neuron_base(at),
            memmap::NEURON.words,
            words,
            |name, v| out.set_field(name, v),
        )?;
        Ok(out)
    }
}

/// One synapse cell: 6-bit weight and 6-bit label. The sign of a logical
/// synapse is realized by row polarity, not stored here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Synapse {
    pub weight: u8,
    pub label: u8,
}

impl Synapse {
    pub const MAX_WEIGHT: u8 = 63;
    pub const MAX_LABEL: u8 = 63;

    pub fn validate(&self) -> bool {
        self.weight <= Self::MAX_WEIGHT && self.label <= Self::MAX_LABEL
    }

    pub fn encode(&self, at: &SynapseCell) -> Vec<(u32, u32)> {
        encode_fields(memmap::SYNAPSE_FIELDS, at.address(), 1, |name| match name {
            "weight" => self.weight as u32,
            "label" => self.label as u32,
            _ => unreachable!(),
        })
    }

    pub fn decode(at: &SynapseCell, words: &[(u32, u32)]) -> Result<Synapse, ContainerError> {
        let mut out = Synapse::default();
        decode_fields(memmap::SYNAPSE_FIELDS, at.address(), 1, words, |name, v| {
            match name {
                "weight" => out.weight = v as u8,
                "label" => out.label = v as u8,
                _ => unreachable!(),
            }
        })?;
        Ok(out)
    }
}

/// Polarity of one synapse row as seen by its driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum RowMode {
    #[default]
    Disabled,
    Excitatory,
    Inhibitory,
}

impl RowMode {
    fn to_bits(self) -> u32 {
        match self {
            RowMode::Disabled => 0,
            RowMode::Excitatory => 1,
            RowMode::Inhibitory => 2,
        }
    }

    // 3 is an unused encoding; treated as disabled.
    fn from_bits(v: u32) -> RowMode {
        match v {
            1 => RowMode::Excitatory,
            2 => RowMode::Inhibitory,
            _ => RowMode::Disabled,
        }
    }
}

/// Configuration of one synapse driver and its hard-wired pair of rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SynapseDriverConfig {
    pub enable: bool,
    /// Mode of the two attached rows, `[2 * driver, 2 * driver + 1]`.
    pub row_modes: [RowMode; 2],
    /// Event address AND-mask applied before the label match.
    pub compare_mask: u8,
}

impl SynapseDriverConfig {
    pub fn validate(&self) -> bool {
        self.compare_mask <= 63
    }

    pub fn encode(&self, at: &DriverLocation) -> Vec<(u32, u32)> {
        encode_fields(memmap::DRIVER_FIELDS, at.address(), 1, |name| match name {
            "enable" => self.enable as u32,
            "row_mode_top" => self.row_modes[0].to_bits(),
            "row_mode_bottom" => self.row_modes[1].to_bits(),
            "compare_mask" => self.compare_mask as u32,
            _ => unreachable!(),
        })
    }

    pub fn decode(
        at: &DriverLocation,
        words: &[(u32, u32)],
    ) -> Result<SynapseDriverConfig, ContainerError> {
        let mut out = SynapseDriverConfig::default();
        decode_fields(memmap::DRIVER_FIELDS, at.address(), 1, words, |name, v| {
            match name {
                "enable" => out.enable = v != 0,
                "row_mode_top" => out.row_modes[0] = RowMode::from_bits(v),
                "row_mode_bottom" => out.row_modes[1] = RowMode::from_bits(v),
                "compare_mask" => out.compare_mask = v as u8,
                _ => unreachable!(),
            }
        })?;
        Ok(out)
    }
}

/// One crossbar switch: routes events from `input` to `output` when enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossbarNode {
    pub input: CrossbarInputOnChip,
    pub output: CrossbarOutputOnChip,
    pub enable: bool,
}

impl CrossbarNode {
    pub fn encode(&self) -> Vec<(u32, u32)> {
        let addr = memmap::crossbar_address(self.input, self.output);
        encode_fields(memmap::CROSSBAR_FIELDS, addr, 1, |name| match name {
            "enable" => self.enable as u32,
            _ => unreachable!(),
        })
    }

    pub fn decode(
        input: CrossbarInputOnChip,
        output: CrossbarOutputOnChip,
        words: &[(u32, u32)],
    ) -> Result<CrossbarNode, ContainerError> {
        let addr = memmap::crossbar_address(input, output);
        let mut enable = false;
        decode_fields(memmap::CROSSBAR_FIELDS, addr, 1, words, |name, v| {
            match name {
                "enable" => enable = v != 0,
                _ => unreachable!(),
            }
        })?;
        Ok(CrossbarNode {
            input,
            output,
            enable,
        })
    }
}

/// Location of one synapse cell in the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SynapseCell {
    pub hemisphere: HemisphereOnChip,
    pub row: SynapseRowOnHemisphere,
    pub column: SynapseOnSynapseRow,
}

impl SynapseCell {
    pub fn address(&self) -> u32 {
        memmap::synapse_address(self.hemisphere, self.row, self.column)
    }
}

impl std::fmt::Display for SynapseCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.hemisphere, self.row, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DriverLocation {
    pub hemisphere: HemisphereOnChip,
    pub driver: SynapseDriverOnHemisphere,
}

impl DriverLocation {
    pub fn address(&self) -> u32 {
        memmap::driver_address(self.hemisphere, self.driver)
    }
}

impl std::fmt::Display for DriverLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.hemisphere, self.driver)
    }
}

/// Dynamic location for kind-generic encode/decode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    NeuronCircuit(NeuronCircuitOnChip),
    Synapse(SynapseCell),
    Driver(DriverLocation),
    Crossbar(CrossbarInputOnChip, CrossbarOutputOnChip),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::NeuronCircuit(c) => write!(f, "{c}"),
            Location::Synapse(c) => write!(f, "{c}"),
            Location::Driver(d) => write!(f, "{d}"),
            Location::Crossbar(i, o) => write!(f, "({i}, {o})"),
        }
    }
}

/// Dynamic container for kind-generic encode/decode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Container {
    AtomicNeuron(AtomicNeuron),
    Synapse(Synapse),
    SynapseDriver(SynapseDriverConfig),
    CrossbarNode(CrossbarNode),
}

impl Container {
    pub fn kind(&self) -> ContainerKind {
        match self {
            Container::AtomicNeuron(_) => ContainerKind::AtomicNeuron,
            Container::Synapse(_) => ContainerKind::Synapse,
            Container::SynapseDriver(_) => ContainerKind::SynapseDriver,
            Container::CrossbarNode(_) => ContainerKind::CrossbarNode,
        }
    }

    /// Encode at the given location; the location kind must match the
    /// container type, for crossbar nodes including the node's own
    /// coordinates.
    pub fn encode(&self, at: &Location) -> Result<Vec<(u32, u32)>, ContainerError> {
        let mismatch = || ContainerError::KindMismatch {
            container: self.kind(),
            location: at.to_string(),
        };
        match (self, at) {
            (Container::AtomicNeuron(n), Location::NeuronCircuit(c)) => Ok(n.encode(*c)),
            (Container::Synapse(s), Location::Synapse(cell)) => Ok(s.encode(cell)),
            (Container::SynapseDriver(d), Location::Driver(loc)) => Ok(d.encode(loc)),
            (Container::CrossbarNode(n), Location::Crossbar(i, o)) => {
                if n.input == *i && n.output == *o {
                    Ok(n.encode())
                } else {
                    Err(mismatch())
                }
            }
            _ => Err(mismatch()),
        }
    }

    /// Decode a container of `kind` from the words covering its footprint at
    /// `at`.
    pub fn decode(
        kind: ContainerKind,
        at: &Location,
        words: &[(u32, u32)],
    ) -> Result<Container, ContainerError> {
        let mismatch = || ContainerError::KindMismatch {
            container: kind,
            location: at.to_string(),
        };
        match (kind, at) {
            (ContainerKind::AtomicNeuron, Location::NeuronCircuit(c)) => {
                AtomicNeuron::decode(*c, words).map(Container::AtomicNeuron)
            }
            (ContainerKind::Synapse, Location::Synapse(cell)) => {
                Synapse::decode(cell, words).map(Container::Synapse)
            }
            (ContainerKind::SynapseDriver, Location::Driver(loc)) => {
                SynapseDriverConfig::decode(loc, words).map(Container::SynapseDriver)
            }
            (ContainerKind::CrossbarNode, Location::Crossbar(i, o)) => {
                CrossbarNode::decode(*i, *o, words).map(Container::CrossbarNode)
            }
            _ => Err(mismatch()),
        }
    }
}

fn encode_fields(
    fields: &[FieldSpec],
    base: u32,
    words: u32,
    get: impl Fn(&str) -> u32,
) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = (0..words).map(|i| (base + i, 0)).collect();
    for spec in fields {
        let value = get(spec.name) & (spec.mask() >> spec.lsb);
        spec.insert(&mut out[spec.word as usize].1, value);
    }
    out
}

fn decode_fields(
    fields: &[FieldSpec],
    base: u32,
    words: u32,
    input: &[(u32, u32)],
    mut set: impl FnMut(&str, u32),
) -> Result<(), ContainerError> {
    let mut found = vec![None; words as usize];
    for &(addr, word) in input {
        if addr < base || addr >= base + words {
            return Err(ContainerError::UnknownAddress(addr));
        }
        found[(addr - base) as usize] = Some(word);
    }
    for i in 0..words {
        if found[i as usize].is_none() {
            return Err(ContainerError::MissingWord(base + i));
        }
    }
    for spec in fields {
        set(spec.name, spec.extract(found[spec.word as usize].unwrap()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::*;

    fn cell(h: u32, r: u32, c: u32) -> SynapseCell {
        SynapseCell {
            hemisphere: HemisphereOnChip::new(h).unwrap(),
            row: SynapseRowOnHemisphere::new(r).unwrap(),
            column: SynapseOnSynapseRow::new(c).unwrap(),
        }
    }

    #[test]
    fn default_synapse_encodes_to_zero_word() {
        let words = Synapse::default().encode(&cell(0, 0, 0));
        assert_eq!(words, vec![(crate::memmap::SYNAPSE.base, 0x0000_0000)]);
    }

    #[test]
    fn neuron_fields_land_in_documented_bits() {
        let mut n = AtomicNeuron::default();
        n.leak.v_leak = 650;
        n.leak.i_bias = 420;
        n.leak.enable_division = true;
        let at = NeuronCircuitOnChip::new(0).unwrap();
        let words = n.encode(at);
        assert_eq!(words.len(), 4);
        // word 0 holds v_leak at bit 0, i_bias at bit 10, division at bit 30
        assert_eq!(words[0].1 & 0x3FF, 650);
        assert_eq!((words[0].1 >> 10) & 0x3FF, 420);
        assert_eq!((words[0].1 >> 30) & 1, 1);
        let back = AtomicNeuron::decode(at, &words).unwrap();
        assert_eq!(back, n);
    }

    #[test]
    fn decode_missing_word_is_rejected() {
        let n = AtomicNeuron::default();
        let at = NeuronCircuitOnChip::new(3).unwrap();
        let mut words = n.encode(at);
        let dropped = words.remove(2);
        assert_eq!(
            AtomicNeuron::decode(at, &words),
            Err(ContainerError::MissingWord(dropped.0))
        );
    }

    #[test]
    fn decode_unknown_address_is_rejected() {
        let n = AtomicNeuron::default();
        let at = NeuronCircuitOnChip::new(3).unwrap();
        let mut words = n.encode(at);
        words.push((0xDEAD_BEEF, 0));
        assert_eq!(
            AtomicNeuron::decode(at, &words),
            Err(ContainerError::UnknownAddress(0xDEAD_BEEF))
        );
    }

    #[test]
    fn dynamic_encode_rejects_wrong_location_kind() {
        let c = Container::Synapse(Synapse {
            weight: 12,
            label: 3,
        });
        let at = Location::NeuronCircuit(NeuronCircuitOnChip::new(0).unwrap());
        assert!(matches!(
            c.encode(&at),
            Err(ContainerError::KindMismatch { .. })
        ));
        assert!(matches!(
            Container::decode(ContainerKind::SynapseDriver, &at, &[]),
            Err(ContainerError::KindMismatch { .. })
        ));
    }

    #[test]
    fn crossbar_node_coordinates_must_agree_with_location() {
        let node = CrossbarNode {
            input: CrossbarInputOnChip::new(1).unwrap(),
            output: CrossbarOutputOnChip::new(2).unwrap(),
            enable: true,
        };
        let ok = Location::Crossbar(node.input, node.output);
        assert!(Container::CrossbarNode(node).encode(&ok).is_ok());
        let other = Location::Crossbar(
            CrossbarInputOnChip::new(0).unwrap(),
            node.output,
        );
        assert!(matches!(
            Container::CrossbarNode(node).encode(&other),
            Err(ContainerError::KindMismatch { .. })
        ));
    }

    #[test]
    fn driver_roundtrip_with_modes() {
        let d = SynapseDriverConfig {
            enable: true,
            row_modes: [RowMode::Excitatory, RowMode::Inhibitory],
            compare_mask: 0b101011,
        };
        let at = DriverLocation {
            hemisphere: HemisphereOnChip::new(1).unwrap(),
            driver: SynapseDriverOnHemisphere::new(77).unwrap(),
        };
        let words = d.encode(&at);
        assert_eq!(words.len(), 1);
        assert_eq!(SynapseDriverConfig::decode(&at, &words).unwrap(), d);
    }

    #[test]
    fn distinct_entities_have_disjoint_footprints() {
        use std::collections::HashSet;
        let mut seen: HashSet<u32> = HashSet::new();
        for circuit in NeuronCircuitOnChip::iter_all() {
            for (addr, _) in AtomicNeuron::default().encode(circuit) {
                assert!(seen.insert(addr), "address reuse at 0x{addr:08X}");
            }
        }
        for h in HemisphereOnChip::iter_all() {
            for d in SynapseDriverOnHemisphere::iter_all() {
                let at = DriverLocation {
                    hemisphere: h,
                    driver: d,
                };
                for (addr, _) in SynapseDriverConfig::default().encode(&at) {
                    assert!(seen.insert(addr), "address reuse at 0x{addr:08X}");
                }
            }
        }
        // synapse matrix is large; sample corners and a stripe
        for h in HemisphereOnChip::iter_all() {
            for r in [0u32, 1, 128, 255] {
                for c in 0..256 {
                    let at = cell(h.value(), r, c);
                    assert!(seen.insert(at.address()));
                }
            }
        }
        for i in CrossbarInputOnChip::iter_all() {
            for o in CrossbarOutputOnChip::iter_all() {
                assert!(seen.insert(crate::memmap::crossbar_address(i, o)));
            }
        }
    }
}
