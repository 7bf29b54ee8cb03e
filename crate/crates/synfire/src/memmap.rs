//! Memory map of the chip's flat 32-bit word address space.
//!
//! Addresses are word-granular: each address names one 32-bit word. All
//! container encodings and the simulator's register file derive from the
//! tables in this module; nothing else in the stack hard-codes bit positions.
//! [`render_table`] exports the layout as a machine-readable TSV so tests and
//! docs stay synchronized (see `docs/memory_map.tsv`).

use crate::coords::{
    CrossbarInputOnChip, CrossbarOutputOnChip, HemisphereOnChip, NeuronCircuitOnChip,
    SynapseDriverOnHemisphere, SynapseOnSynapseRow, SynapseRowOnHemisphere,
};

/// A contiguous register region holding `count` entities of `words` words
/// each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub name: &'static str,
    pub base: u32,
    pub words: u32,
    pub count: u32,
}

impl Region {
    pub const fn end(&self) -> u32 {
        self.base + self.words * self.count
    }

    pub const fn contains(&self, addr: u32) -> bool {
        addr >= self.base && addr < self.end()
    }

    pub fn entity_base(&self, index: u32) -> u32 {
        debug_assert!(index < self.count);
        self.base + index * self.words
    }
}

/// Per-neuron configuration, 4 words per circuit.
pub const NEURON: Region = Region {
    name: "neuron",
    base: 0x0100_0000,
    words: 4,
    count: 512,
};

/// Synapse matrix, 1 word per cell, hemisphere-major then row-major.
pub const SYNAPSE: Region = Region {
    name: "synapse",
    base: 0x0200_0000,
    words: 1,
    count: 2 * 256 * 256,
};

/// Synapse driver configuration, 1 word per driver.
pub const DRIVER: Region = Region {
    name: "synapse_driver",
    base: 0x0300_0000,
    words: 1,
    count: 2 * 128,
};

/// Crossbar node enables, 1 word per (input, output) pair, input-major.
pub const CROSSBAR: Region = Region {
    name: "crossbar_node",
    base: 0x0400_0000,
    words: 1,
    count: 8 * 8,
};

/// CADC capture trigger, 1 word per hemisphere. Writing captures the selected
/// source into the result registers; see `chip` for the control word layout.
pub const CADC_CTRL: Region = Region {
    name: "cadc_ctrl",
    base: 0x0500_0000,
    words: 1,
    count: 2,
};

/// CADC capture results, 1 word per column, hemisphere-major. Read-only.
pub const CADC_RESULT: Region = Region {
    name: "cadc_result",
    base: 0x0500_1000,
    words: 1,
    count: 2 * 256,
};

/// Per-neuron cumulative spike counters. Read-only.
pub const SPIKE_COUNTER: Region = Region {
    name: "spike_counter",
    base: 0x0600_0000,
    words: 1,
    count: 512,
};

pub const REGIONS: [&Region; 7] = [
    &NEURON,
    &SYNAPSE,
    &DRIVER,
    &CROSSBAR,
    &CADC_CTRL,
    &CADC_RESULT,
    &SPIKE_COUNTER,
];

/// One bit-field of a container's word footprint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    pub name: &'static str,
    /// Word index within the container footprint.
    pub word: u32,
    pub lsb: u8,
    pub width: u8,
}

impl FieldSpec {
    pub const fn mask(&self) -> u32 {
        if self.width == 32 {
            u32::MAX
        } else {
            ((1u32 << self.width) - 1) << self.lsb
        }
    }

    pub fn extract(&self, word: u32) -> u32 {
        (word & self.mask()) >> self.lsb
    }

    pub fn insert(&self, word: &mut u32, value: u32) {
        debug_assert!(value <= self.mask() >> self.lsb);
        *word = (*word & !self.mask()) | (value << self.lsb);
    }
}

const fn f(name: &'static str, word: u32, lsb: u8, width: u8) -> FieldSpec {
    FieldSpec {
        name,
        word,
        lsb,
        width,
    }
}

/// Field layout of one neuron circuit (4 words).
pub const NEURON_FIELDS: &[FieldSpec] = &[
    f("leak.v_leak", 0, 0, 10),
    f("leak.i_bias", 0, 10, 10),
    f("threshold.value", 0, 20, 10),
    f("leak.enable_division", 0, 30, 1),
    f("leak.enable_multiplication", 0, 31, 1),
    f("reset.value", 1, 0, 10),
    f("refractory.period", 1, 10, 8),
    f("synaptic_input_exc.i_bias_gm", 1, 18, 10),
    f("threshold.enable", 1, 28, 1),
    f("synaptic_input_exc.enable", 1, 29, 1),
    f("synaptic_input_inh.enable", 1, 30, 1),
    f("digital.enable_spike_output", 1, 31, 1),
    f("synaptic_input_exc.i_bias_tau", 2, 0, 10),
    f("synaptic_input_inh.i_bias_gm", 2, 10, 10),
    f("synaptic_input_inh.i_bias_tau", 2, 20, 10),
    f("digital.enable_fire", 2, 30, 1),
    f("multicompartment.connect_right", 2, 31, 1),
    f("multicompartment.i_bias_resistor", 3, 0, 10),
    f("multicompartment.connect_to_shared_line", 3, 10, 1),
    f("multicompartment.enable_resistor", 3, 11, 1),
    f("readout.enable_madc", 3, 12, 1),
];

/// Field layout of one synapse cell (1 word).
pub const SYNAPSE_FIELDS: &[FieldSpec] = &[f("weight", 0, 0, 6), f("label", 0, 6, 6)];

/// Field layout of one synapse driver (1 word). Row modes are 2-bit:
/// 0 disabled, 1 excitatory, 2 inhibitory.
pub const DRIVER_FIELDS: &[FieldSpec] = &[
    f("enable", 0, 0, 1),
    f("row_mode_top", 0, 1, 2),
    f("row_mode_bottom", 0, 3, 2),
    f("compare_mask", 0, 5, 6),
];

/// Field layout of one crossbar node (1 word).
pub const CROSSBAR_FIELDS: &[FieldSpec] = &[f("enable", 0, 0, 1)];

pub fn neuron_base(circuit: NeuronCircuitOnChip) -> u32 {
    NEURON.entity_base(circuit.value())
}

pub fn synapse_address(
    hemisphere: HemisphereOnChip,
    row: SynapseRowOnHemisphere,
    column: SynapseOnSynapseRow,
) -> u32 {
    SYNAPSE.entity_base(hemisphere.value() * 65536 + row.value() * 256 + column.value())
}

pub fn driver_address(hemisphere: HemisphereOnChip, driver: SynapseDriverOnHemisphere) -> u32 {
    DRIVER.entity_base(hemisphere.value() * 128 + driver.value())
}

pub fn crossbar_address(input: CrossbarInputOnChip, output: CrossbarOutputOnChip) -> u32 {
    CROSSBAR.entity_base(input.value() * 8 + output.value())
}

pub fn cadc_ctrl_address(hemisphere: HemisphereOnChip) -> u32 {
    CADC_CTRL.entity_base(hemisphere.value())
}

pub fn cadc_result_address(hemisphere: HemisphereOnChip, column: u32) -> u32 {
    CADC_RESULT.entity_base(hemisphere.value() * 256 + column)
}

pub fn spike_counter_address(circuit: NeuronCircuitOnChip) -> u32 {
    SPIKE_COUNTER.entity_base(circuit.value())
}

/// Whether any region maps this address.
pub fn is_mapped(addr: u32) -> bool {
    REGIONS.iter().any(|r| r.contains(addr))
}

/// Render the full memory map as TSV: one line per region, one line per
/// bit-field. This is the machine-readable export checked against
/// `docs/memory_map.tsv`.
pub fn render_table() -> String {
    let mut out = String::new();
    out.push_str("# region\tbase\twords_per_entity\tcount\n");
    for r in REGIONS {
        out.push_str(&format!(
            "region\t{}\t0x{:08X}\t{}\t{}\n",
            r.name, r.base, r.words, r.count
        ));
    }
    out.push_str("# field\tregion\tname\tword\tbits\n");
    let tables: [(&str, &[FieldSpec]); 4] = [
        ("neuron", NEURON_FIELDS),
        ("synapse", SYNAPSE_FIELDS),
        ("synapse_driver", DRIVER_FIELDS),
        ("crossbar_node", CROSSBAR_FIELDS),
    ];
    for (region, fields) in tables {
        for field in fields {
            out.push_str(&format!(
                "field\t{}\t{}\t{}\t{}..{}\n",
                region,
                field.name,
                field.word,
                field.lsb,
                field.lsb + field.width
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regions_are_disjoint() {
        for (i, a) in REGIONS.iter().enumerate() {
            for b in REGIONS.iter().skip(i + 1) {
                assert!(
                    a.end() <= b.base || b.end() <= a.base,
                    "regions {} and {} overlap",
                    a.name,
                    b.name
                );
            }
        }
    }

    #[test]
    fn fields_are_disjoint_within_words() {
        for fields in [
            NEURON_FIELDS,
            SYNAPSE_FIELDS,
            DRIVER_FIELDS,
            CROSSBAR_FIELDS,
        ] {
            for (i, a) in fields.iter().enumerate() {
                assert!(a.width > 0 && a.lsb as u32 + a.width as u32 <= 32);
                for b in fields.iter().skip(i + 1) {
                    if a.word == b.word {
                        assert_eq!(a.mask() & b.mask(), 0, "{} overlaps {}", a.name, b.name);
                    }
                }
            }
        }
    }

    #[test]
    fn addresses_land_in_their_regions() {
        use crate::coords::*;
        let h = HemisphereOnChip::new(1).unwrap();
        let row = SynapseRowOnHemisphere::new(255).unwrap();
        let col = SynapseOnSynapseRow::new(255).unwrap();
        assert!(SYNAPSE.contains(synapse_address(h, row, col)));
        assert!(NEURON.contains(neuron_base(NeuronCircuitOnChip::new(511).unwrap())));
        assert!(DRIVER.contains(driver_address(h, SynapseDriverOnHemisphere::new(127).unwrap())));
        assert!(!is_mapped(0xFFFF_FFFF));
        assert!(!is_mapped(0));
    }

    #[test]
    fn field_insert_extract_roundtrip() {
        let spec = f("x", 0, 10, 10);
        let mut word = 0xFFFF_FFFFu32;
        spec.insert(&mut word, 650);
        assert_eq!(spec.extract(word), 650);
        // untouched bits preserved
        assert_eq!(word & !spec.mask(), 0xFFFF_FFFF & !spec.mask());
    }
}
