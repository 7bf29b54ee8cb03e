//! Multi-compartment logical neurons.
//!
//! A logical neuron is a morphology of compartments, each a set of relative
//! circuit positions merged via direct switches, plus resistor edges joining
//! distinct compartments through the shared line.
//!
//! Realization model: circuits sit in two rows (row = hemisphere offset from
//! the anchor). `connect_right` merges a circuit's membrane with its right
//! neighbour in the same row, so a compartment is a contiguous column run in
//! one row. One shared line spans the columns; both rows attach to it. A
//! circuit attaches either directly (`connect_to_shared_line`) or through its
//! tunable resistor (`enable_resistor`). The line is segmented by gap columns
//! where neither row attaches; within a segment the directly-attached
//! membranes define the line potential and each resistor-attached circuit
//! couples to it. A resistor edge between compartments is therefore realized
//! as a star: the hub compartment attaches directly, the leaves through
//! resistors, all within one line segment.

use thiserror::Error;

use super::AtomicNeuron;
use crate::coords::NeuronCircuitOnChip;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicalNeuronError {
    #[error("compartments {0} and {1} share a circuit")]
    OverlappingCompartments(usize, usize),
    #[error("compartment {0} is not connected via direct switches")]
    DisconnectedCompartment(usize),
    #[error("invalid resistor edge between compartments {0} and {1}")]
    InvalidResistorEdge(usize, usize),
    #[error("placement exceeds the chip boundary")]
    PlacementOutOfBounds,
}

/// Relative circuit position within a morphology: row 0/1 (hemisphere offset
/// from the anchor) and column offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircuitOffset {
    pub row: u8,
    pub column: u16,
}

impl CircuitOffset {
    pub fn new(row: u8, column: u16) -> Self {
        CircuitOffset { row, column }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct ResistorEdge {
    a: usize,
    b: usize,
    i_bias_resistor: u16,
}

/// Validated morphology: compartments, their intra-compartment switch runs
/// and the inter-compartment resistor edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Morphology {
    compartments: Vec<Vec<CircuitOffset>>,
    edges: Vec<ResistorEdge>,
}

impl Morphology {
    pub fn compartment_count(&self) -> usize {
        self.compartments.len()
    }

    pub fn compartment(&self, index: usize) -> &[CircuitOffset] {
        &self.compartments[index]
    }

    /// Resistor edges as unordered compartment index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| ordered(e.a, e.b)).collect()
    }

    pub fn circuit_count(&self) -> usize {
        self.compartments.iter().map(|c| c.len()).sum()
    }
}

/// Line attachment role of one circuit in the realized configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
enum LineFlag {
    #[default]
    None,
    /// `connect_to_shared_line`
    Direct,
    /// `enable_resistor`, with the owning edge's bias
    Resistor(u16),
}

/// A validated, realizable logical neuron.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicalNeuron {
    morphology: Morphology,
    configs: Vec<AtomicNeuron>,
    /// Per-circuit line flags, parallel to the flattened circuit list.
    flags: Vec<LineFlag>,
    /// Flattened circuits with their compartment index.
    circuits: Vec<(CircuitOffset, usize)>,
}

/// Builder for logical neurons; validity is checked on [`MorphologyBuilder::build`].
#[derive(Debug, Default)]
pub struct MorphologyBuilder {
    compartments: Vec<Vec<CircuitOffset>>,
    configs: Vec<AtomicNeuron>,
    edges: Vec<ResistorEdge>,
}

impl MorphologyBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a compartment made of the given circuits; returns its index.
    pub fn compartment(&mut self, circuits: &[CircuitOffset]) -> usize {
        let mut sorted: Vec<CircuitOffset> = circuits.to_vec();
        sorted.sort();
        sorted.dedup();
        self.compartments.push(sorted);
        self.configs.push(AtomicNeuron::default());
        self.compartments.len() - 1
    }

    /// Analog/digital configuration overlay applied to every circuit of the
    /// compartment. Switch flags in the overlay are overwritten on placement.
    pub fn config(&mut self, compartment: usize, config: AtomicNeuron) -> &mut Self {
        self.configs[compartment] = config;
        self
    }

    /// Connect two compartments through the shared line with a tunable
    /// resistor (default bias).
    pub fn connect(&mut self, a: usize, b: usize) -> &mut Self {
        self.connect_with_bias(a, b, 512)
    }

    pub fn connect_with_bias(&mut self, a: usize, b: usize, i_bias_resistor: u16) -> &mut Self {
        self.edges.push(ResistorEdge {
            a,
            b,
            i_bias_resistor,
        });
        self
    }

    /// Validate the morphology and find a realizable line assignment.
    pub fn build(&self) -> Result<LogicalNeuron, LogicalNeuronError> {
        // disjointness
        for i in 0..self.compartments.len() {
            for j in i + 1..self.compartments.len() {
                if self.compartments[i]
                    .iter()
                    .any(|c| self.compartments[j].contains(c))
                {
                    return Err(LogicalNeuronError::OverlappingCompartments(i, j));
                }
            }
        }
        // connectivity: a compartment is a contiguous column run in one row
        for (i, comp) in self.compartments.iter().enumerate() {
            if comp.is_empty() {
                return Err(LogicalNeuronError::DisconnectedCompartment(i));
            }
            let row = comp[0].row;
            if comp.iter().any(|c| c.row != row) {
                return Err(LogicalNeuronError::DisconnectedCompartment(i));
            }
            for pair in comp.windows(2) {
                if pair[1].column != pair[0].column + 1 {
                    return Err(LogicalNeuronError::DisconnectedCompartment(i));
                }
            }
        }
        // edge sanity
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if e.a >= self.compartments.len()
                || e.b >= self.compartments.len()
                || e.a == e.b
                || !seen.insert(ordered(e.a, e.b))
            {
                return Err(LogicalNeuronError::InvalidResistorEdge(e.a, e.b));
            }
        }

        let circuits: Vec<(CircuitOffset, usize)> = self
            .compartments
            .iter()
            .enumerate()
            .flat_map(|(i, comp)| comp.iter().map(move |&c| (c, i)))
            .collect();

        let morphology = Morphology {
            compartments: self.compartments.clone(),
            edges: self.edges.clone(),
        };
        let flags = realize(&morphology, &circuits)?;
        Ok(LogicalNeuron {
            morphology,
            configs: self.configs.clone(),
            flags,
            circuits,
        })
    }
}

impl LogicalNeuron {
    pub fn morphology(&self) -> &Morphology {
        &self.morphology
    }

    /// Width in columns and number of rows used.
    pub fn extent(&self) -> (u16, u8) {
        let cols = self
            .circuits
            .iter()
            .map(|(c, _)| c.column + 1)
            .max()
            .unwrap_or(0);
        let rows = self
            .circuits
            .iter()
            .map(|(c, _)| c.row + 1)
            .max()
            .unwrap_or(0);
        (cols, rows)
    }

    /// Translate relative coordinates to absolute circuit assignments with
    /// switch and resistor flags set to realize the morphology.
    pub fn place(
        &self,
        anchor: NeuronCircuitOnChip,
    ) -> Result<Vec<PlacedCircuit>, LogicalNeuronError> {
        let (hem, col) = anchor.split();
        let mut out = Vec::with_capacity(self.circuits.len());
        for (idx, &(offset, comp)) in self.circuits.iter().enumerate() {
            let abs_row = hem.value() + offset.row as u32;
            let abs_col = col.value() + offset.column as u32;
            if abs_row > 1 || abs_col > 255 {
                return Err(LogicalNeuronError::PlacementOutOfBounds);
            }
            let circuit = NeuronCircuitOnChip::new(abs_row * 256 + abs_col).unwrap();
            let mut config = self.configs[comp];
            let right = CircuitOffset::new(offset.row, offset.column + 1);
            config.multicompartment.connect_right = self.morphology.compartments[comp]
                .contains(&right);
            match self.flags[idx] {
                LineFlag::None => {
                    config.multicompartment.connect_to_shared_line = false;
                    config.multicompartment.enable_resistor = false;
                }
                LineFlag::Direct => {
                    config.multicompartment.connect_to_shared_line = true;
                    config.multicompartment.enable_resistor = false;
                }
                LineFlag::Resistor(bias) => {
                    config.multicompartment.connect_to_shared_line = false;
                    config.multicompartment.enable_resistor = true;
                    config.multicompartment.i_bias_resistor = bias;
                }
            }
            out.push(PlacedCircuit {
                circuit,
                compartment: comp,
                config,
            });
        }
        Ok(out)
    }
}

/// One circuit of a placed logical neuron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacedCircuit {
    pub circuit: NeuronCircuitOnChip,
    pub compartment: usize,
    pub config: AtomicNeuron,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Search a hub orientation per edge such that the star-per-segment scheme
/// realizes exactly the morphology's edges.
fn realize(
    morphology: &Morphology,
    circuits: &[(CircuitOffset, usize)],
) -> Result<Vec<LineFlag>, LogicalNeuronError> {
    if morphology.edges.is_empty() {
        return Ok(vec![LineFlag::None; circuits.len()]);
    }
    let n_edges = morphology.edges.len();
    if n_edges > 16 {
        let e = &morphology.edges[16];
        return Err(LogicalNeuronError::InvalidResistorEdge(e.a, e.b));
    }
    for orientation in 0..(1u32 << n_edges) {
        if let Some(flags) = try_orientation(morphology, circuits, orientation) {
            return Ok(flags);
        }
    }
    let e = &morphology.edges[0];
    Err(LogicalNeuronError::InvalidResistorEdge(e.a, e.b))
}

fn try_orientation(
    morphology: &Morphology,
    circuits: &[(CircuitOffset, usize)],
    orientation: u32,
) -> Option<Vec<LineFlag>> {
    let mut flags = vec![LineFlag::None; circuits.len()];
    // hub -> (leaf compartment, edge bias)
    let mut groups: std::collections::BTreeMap<usize, Vec<(usize, u16)>> = Default::default();
    for (i, e) in morphology.edges.iter().enumerate() {
        let (hub, leaf) = if orientation & (1 << i) == 0 {
            (e.a, e.b)
        } else {
            (e.b, e.a)
        };
        groups.entry(hub).or_default().push((leaf, e.i_bias_resistor));
    }

    let comp_circuits = |comp: usize| {
        circuits
            .iter()
            .enumerate()
            .filter(move |(_, (_, c))| *c == comp)
    };

    for (&hub, leaves) in &groups {
        let hub_center: f64 = {
            let cols: Vec<f64> = comp_circuits(hub).map(|(_, (c, _))| c.column as f64).collect();
            cols.iter().sum::<f64>() / cols.len() as f64
        };
        // one resistor attachment per leaf, nearest free circuit to the hub
        let mut attach_cols: Vec<u16> = Vec::new();
        for &(leaf, bias) in leaves {
            let pick = comp_circuits(leaf)
                .filter(|(i, _)| flags[*i] == LineFlag::None)
                .min_by(|(_, (a, _)), (_, (b, _))| {
                    let da = (a.column as f64 - hub_center).abs();
                    let db = (b.column as f64 - hub_center).abs();
                    da.partial_cmp(&db).unwrap().then(a.cmp(b))
                })?;
            flags[pick.0] = LineFlag::Resistor(bias);
            attach_cols.push(pick.1 .0.column);
        }
        // hub anchor: free circuit nearest to the leaves
        let leaf_center = attach_cols.iter().map(|&c| c as f64).sum::<f64>()
            / attach_cols.len() as f64;
        let anchor = comp_circuits(hub)
            .filter(|(i, _)| flags[*i] == LineFlag::None)
            .min_by(|(_, (a, _)), (_, (b, _))| {
                let da = (a.column as f64 - leaf_center).abs();
                let db = (b.column as f64 - leaf_center).abs();
                da.partial_cmp(&db).unwrap().then(a.cmp(b))
            })?;
        flags[anchor.0] = LineFlag::Direct;
        attach_cols.push(anchor.1 .0.column);
        // bridge every gap column in the group's span with hub circuits
        let lo = *attach_cols.iter().min().unwrap();
        let hi = *attach_cols.iter().max().unwrap();
        for col in lo..=hi {
            if attach_cols.contains(&col) {
                continue;
            }
            let bridge = comp_circuits(hub)
                .find(|(i, (c, _))| c.column == col && flags[*i] == LineFlag::None)?;
            flags[bridge.0] = LineFlag::Direct;
            attach_cols.push(col);
        }
    }

    // decode the realized topology and require an exact match
    let realized = derive_line_topology(
        &circuits
            .iter()
            .zip(&flags)
            .map(|((c, _), f)| LineCircuit {
                row: c.row,
                column: c.column,
                connect_right: false, // membrane merging not needed here
                direct: *f == LineFlag::Direct,
                resistor: matches!(f, LineFlag::Resistor(_)),
            })
            .collect::<Vec<_>>(),
    );
    let mut realized_edges: Vec<(usize, usize)> = Vec::new();
    for link in &realized.resistor_links {
        let hub_circuit = link.segment_direct_root?;
        let hub_comp = circuits[hub_circuit].1;
        let leaf_comp = circuits[link.resistor_circuit].1;
        if hub_comp == leaf_comp {
            return None;
        }
        realized_edges.push(ordered(hub_comp, leaf_comp));
    }
    // directly-attached circuits of distinct compartments must never share a
    // segment (they would be shorted)
    for seg in &realized.segments {
        let mut direct_comp: Option<usize> = None;
        for &i in seg {
            if flags[i] == LineFlag::Direct {
                let comp = circuits[i].1;
                if *direct_comp.get_or_insert(comp) != comp {
                    return None;
                }
            }
        }
    }
    let mut expected: Vec<(usize, usize)> = morphology.edges.iter().map(|e| ordered(e.a, e.b)).collect();
    expected.sort_unstable();
    realized_edges.sort_unstable();
    (realized_edges == expected).then_some(flags)
}

/// Input to the shared-line topology derivation.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LineCircuit {
    pub row: u8,
    pub column: u16,
    pub connect_right: bool,
    pub direct: bool,
    pub resistor: bool,
}

#[derive(Debug)]
pub(crate) struct ResistorLink {
    /// Index of the resistor-attached circuit.
    pub resistor_circuit: usize,
    /// Index of one directly-attached circuit of the same segment, if any.
    pub segment_direct_root: Option<usize>,
    #[allow(dead_code)]
    pub segment: usize,
}

#[derive(Debug)]
pub(crate) struct LineTopology {
    /// Membrane merge parent per circuit (union of connect_right chains and
    /// same-segment direct attachments).
    pub merge_parent: Vec<usize>,
    /// Circuit indices per line segment.
    pub segments: Vec<Vec<usize>>,
    pub resistor_links: Vec<ResistorLink>,
}

impl LineTopology {
    pub fn root(&self, mut i: usize) -> usize {
        while self.merge_parent[i] != i {
            i = self.merge_parent[i];
        }
        i
    }
}

/// Derive membrane merging and resistor couplings from per-circuit switch
/// flags. Shared by morphology realization and the chip simulator.
pub(crate) fn derive_line_topology(circuits: &[LineCircuit]) -> LineTopology {
    let mut parent: Vec<usize> = (0..circuits.len()).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    fn union(parent: &mut Vec<usize>, a: usize, b: usize) {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }

    let index: std::collections::HashMap<(u8, u16), usize> = circuits
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.row, c.column), i))
        .collect();

    for (i, c) in circuits.iter().enumerate() {
        if c.connect_right {
            if let Some(&j) = index.get(&(c.row, c.column + 1)) {
                union(&mut parent, i, j);
            }
        }
    }

    // line segments: maximal runs of consecutive columns with an attachment
    let mut attached_cols: Vec<u16> = circuits
        .iter()
        .filter(|c| c.direct || c.resistor)
        .map(|c| c.column)
        .collect();
    attached_cols.sort_unstable();
    attached_cols.dedup();

    let mut segments: Vec<Vec<u16>> = Vec::new();
    for col in attached_cols {
        match segments.last_mut() {
            Some(seg) if *seg.last().unwrap() + 1 == col => seg.push(col),
            _ => segments.push(vec![col]),
        }
    }

    let mut seg_circuits: Vec<Vec<usize>> = Vec::new();
    let mut links: Vec<ResistorLink> = Vec::new();
    for (seg_id, cols) in segments.iter().enumerate() {
        let members: Vec<usize> = circuits
            .iter()
            .enumerate()
            .filter(|(_, c)| (c.direct || c.resistor) && cols.contains(&c.column))
            .map(|(i, _)| i)
            .collect();
        let directs: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&i| circuits[i].direct)
            .collect();
        // all direct attachments of one segment are shorted together
        for pair in directs.windows(2) {
            union(&mut parent, pair[0], pair[1]);
        }
        for &i in &members {
            if circuits[i].resistor {
                links.push(ResistorLink {
                    resistor_circuit: i,
                    segment_direct_root: directs.first().copied(),
                    segment: seg_id,
                });
            }
        }
        seg_circuits.push(members);
    }

    for i in 0..circuits.len() {
        find(&mut parent, i);
    }
    LineTopology {
        merge_parent: parent,
        segments: seg_circuits,
        resistor_links: links,
    }
}
