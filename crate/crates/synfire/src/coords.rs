//! Ranged coordinate types for the chip's geometric address space.
//!
//! Every coordinate is a typed index with a compile-time range; constructing
//! an out-of-range value is rejected at creation. Typed newtypes are used
//! throughout the stack, the dynamic [`Coord`] form exists for file formats,
//! diagnostics and kind-generic code.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoordError {
    #[error("{kind:?}({value}) out of range, must be < {range}")]
    OutOfRange {
        kind: CoordKind,
        value: u32,
        range: u32,
    },
    #[error("no conversion from {from:?} to {to:?}")]
    NoConversion { from: CoordKind, to: CoordKind },
}

/// Kinds of coordinates on the chip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoordKind {
    NeuronCircuitOnChip,
    HemisphereOnChip,
    NeuronColumnOnHemisphere,
    SynapseRowOnHemisphere,
    SynapseOnSynapseRow,
    SynapseDriverOnHemisphere,
    CrossbarInputOnChip,
    CrossbarOutputOnChip,
    AnalogParameterOnNeuron,
}

impl CoordKind {
    pub const ALL: [CoordKind; 9] = [
        CoordKind::NeuronCircuitOnChip,
        CoordKind::HemisphereOnChip,
        CoordKind::NeuronColumnOnHemisphere,
        CoordKind::SynapseRowOnHemisphere,
        CoordKind::SynapseOnSynapseRow,
        CoordKind::SynapseDriverOnHemisphere,
        CoordKind::CrossbarInputOnChip,
        CoordKind::CrossbarOutputOnChip,
        CoordKind::AnalogParameterOnNeuron,
    ];

    /// Number of valid values of this kind.
    pub const fn range(self) -> u32 {
        match self {
            CoordKind::NeuronCircuitOnChip => 512,
            CoordKind::HemisphereOnChip => 2,
            CoordKind::NeuronColumnOnHemisphere => 256,
            CoordKind::SynapseRowOnHemisphere => 256,
            CoordKind::SynapseOnSynapseRow => 256,
            CoordKind::SynapseDriverOnHemisphere => 128,
            CoordKind::CrossbarInputOnChip => 8,
            CoordKind::CrossbarOutputOnChip => 8,
            CoordKind::AnalogParameterOnNeuron => 24,
        }
    }
}

/// Dynamic coordinate: a kind paired with an in-range value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coord {
    kind: CoordKind,
    value: u32,
}

/// Construct a coordinate of the given kind, rejecting out-of-range values.
pub fn make_coordinate(kind: CoordKind, value: u32) -> Result<Coord, CoordError> {
    if value < kind.range() {
        Ok(Coord { kind, value })
    } else {
        Err(CoordError::OutOfRange {
            kind,
            value,
            range: kind.range(),
        })
    }
}

impl Coord {
    pub fn kind(&self) -> CoordKind {
        self.kind
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Stable linear index of this coordinate within its kind, used in all
    /// file formats.
    pub fn linear_index(&self) -> u32 {
        self.value
    }

    /// Inverse of [`Coord::linear_index`].
    pub fn from_linear(kind: CoordKind, index: u32) -> Result<Coord, CoordError> {
        make_coordinate(kind, index)
    }

    /// Deterministic geometric conversion between coordinate kinds.
    ///
    /// Defined rules: synapse column to neuron column (identity), neuron
    /// circuit to hemisphere (value div 256) or neuron column (value mod 256),
    /// synapse row to its hard-wired driver (value div 2), plus the inverse
    /// conversions where the mapping is bijective.
    pub fn convert(&self, target: CoordKind) -> Result<Coord, CoordError> {
        use CoordKind::*;
        let v = self.value;
        let out = match (self.kind, target) {
            (k, t) if k == t => Some(v),
            (SynapseOnSynapseRow, NeuronColumnOnHemisphere) => Some(v),
            (NeuronColumnOnHemisphere, SynapseOnSynapseRow) => Some(v),
            (NeuronCircuitOnChip, HemisphereOnChip) => Some(v / 256),
            (NeuronCircuitOnChip, NeuronColumnOnHemisphere) => Some(v % 256),
            (SynapseRowOnHemisphere, SynapseDriverOnHemisphere) => Some(v / 2),
            _ => None,
        };
        match out {
            Some(value) => make_coordinate(target, value),
            None => Err(CoordError::NoConversion {
                from: self.kind,
                to: target,
            }),
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.value)
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.value)
    }
}

macro_rules! coordinate_type {
    ($(#[$meta:meta])* $name:ident, $kind:ident, $repr:ty) => {
        $(#[$meta])*
        #[derive(
            Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
        )]
        pub struct $name($repr);

        impl $name {
            pub const RANGE: u32 = CoordKind::$kind.range();

            pub fn new(value: u32) -> Result<Self, CoordError> {
                if value < Self::RANGE {
                    Ok(Self(value as $repr))
                } else {
                    Err(CoordError::OutOfRange {
                        kind: CoordKind::$kind,
                        value,
                        range: Self::RANGE,
                    })
                }
            }

            pub fn value(self) -> u32 {
                self.0 as u32
            }

            /// Enumerate all coordinates of this kind in linear order.
            pub fn iter_all() -> impl Iterator<Item = Self> {
                (0..Self::RANGE).map(|v| Self(v as $repr))
            }

            pub fn to_coord(self) -> Coord {
                Coord {
                    kind: CoordKind::$kind,
                    value: self.0 as u32,
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0)
            }
        }

        impl TryFrom<Coord> for $name {
            type Error = CoordError;

            fn try_from(c: Coord) -> Result<Self, CoordError> {
                if c.kind == CoordKind::$kind {
                    Self::new(c.value)
                } else {
                    Err(CoordError::NoConversion {
                        from: c.kind,
                        to: CoordKind::$kind,
                    })
                }
            }
        }
    };
}

coordinate_type!(
    /// One of the 512 neuron circuits, chip-global.
    NeuronCircuitOnChip, NeuronCircuitOnChip, u16
);
coordinate_type!(
    /// One of the two chip halves, each hosting 256 neuron circuits and a
    /// 256x256 synapse matrix.
    HemisphereOnChip, HemisphereOnChip, u8
);
coordinate_type!(
    /// Neuron column within a hemisphere.
    NeuronColumnOnHemisphere, NeuronColumnOnHemisphere, u16
);
coordinate_type!(
    /// Synapse row within a hemisphere's matrix.
    SynapseRowOnHemisphere, SynapseRowOnHemisphere, u16
);
coordinate_type!(
    /// Synapse column within a row; identity-convertible to the neuron column
    /// the synapse feeds.
    SynapseOnSynapseRow, SynapseOnSynapseRow, u16
);
coordinate_type!(
    /// Synapse driver within a hemisphere; driver d is hard-wired to rows 2d
    /// and 2d+1.
    SynapseDriverOnHemisphere, SynapseDriverOnHemisphere, u8
);
coordinate_type!(
    /// Crossbar input channel (event source side).
    CrossbarInputOnChip, CrossbarInputOnChip, u8
);
coordinate_type!(
    /// Crossbar output bus (synapse-driver side).
    CrossbarOutputOnChip, CrossbarOutputOnChip, u8
);
coordinate_type!(
    /// Analog parameter slot of one neuron circuit.
    AnalogParameterOnNeuron, AnalogParameterOnNeuron, u8
);

impl NeuronCircuitOnChip {
    /// Split into the hemisphere and the column within it.
    pub fn split(self) -> (HemisphereOnChip, NeuronColumnOnHemisphere) {
        (
            HemisphereOnChip((self.0 / 256) as u8),
            NeuronColumnOnHemisphere(self.0 % 256),
        )
    }

    pub fn from_parts(hemisphere: HemisphereOnChip, column: NeuronColumnOnHemisphere) -> Self {
        NeuronCircuitOnChip(hemisphere.0 as u16 * 256 + column.0)
    }
}

impl SynapseRowOnHemisphere {
    /// The driver hard-wired to this row (two adjacent rows per driver).
    pub fn driver(self) -> SynapseDriverOnHemisphere {
        SynapseDriverOnHemisphere((self.0 / 2) as u8)
    }

    /// Row index within its driver's pair: 0 or 1.
    pub fn index_in_driver(self) -> usize {
        (self.0 % 2) as usize
    }
}

impl SynapseDriverOnHemisphere {
    /// The two rows driven by this driver.
    pub fn rows(self) -> [SynapseRowOnHemisphere; 2] {
        [
            SynapseRowOnHemisphere(self.0 as u16 * 2),
            SynapseRowOnHemisphere(self.0 as u16 * 2 + 1),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn in_range_construction() {
        let c = make_coordinate(CoordKind::SynapseOnSynapseRow, 0).unwrap();
        assert_eq!(c.value(), 0);
        assert!(make_coordinate(CoordKind::SynapseDriverOnHemisphere, 127).is_ok());
    }

    #[test]
    fn out_of_range_rejected() {
        let err = make_coordinate(CoordKind::NeuronCircuitOnChip, 512).unwrap_err();
        assert_eq!(
            err,
            CoordError::OutOfRange {
                kind: CoordKind::NeuronCircuitOnChip,
                value: 512,
                range: 512
            }
        );
        assert!(NeuronCircuitOnChip::new(512).is_err());
        assert!(AnalogParameterOnNeuron::new(24).is_err());
    }

    #[test]
    fn synapse_column_converts_to_neuron_column() {
        let c = make_coordinate(CoordKind::SynapseOnSynapseRow, 37).unwrap();
        let n = c.convert(CoordKind::NeuronColumnOnHemisphere).unwrap();
        assert_eq!(n.kind(), CoordKind::NeuronColumnOnHemisphere);
        assert_eq!(n.value(), 37);
    }

    #[test]
    fn neuron_circuit_splits_into_hemisphere_and_column() {
        let c = make_coordinate(CoordKind::NeuronCircuitOnChip, 300).unwrap();
        assert_eq!(c.convert(CoordKind::HemisphereOnChip).unwrap().value(), 1);
        assert_eq!(
            c.convert(CoordKind::NeuronColumnOnHemisphere)
                .unwrap()
                .value(),
            44
        );
        let t = NeuronCircuitOnChip::new(300).unwrap();
        let (h, col) = t.split();
        assert_eq!((h.value(), col.value()), (1, 44));
        assert_eq!(NeuronCircuitOnChip::from_parts(h, col), t);
    }

    #[test]
    fn rows_map_onto_drivers_exactly_twice() {
        assert_eq!(
            make_coordinate(CoordKind::SynapseRowOnHemisphere, 7)
                .unwrap()
                .convert(CoordKind::SynapseDriverOnHemisphere)
                .unwrap()
                .value(),
            3
        );
        let mut hits = [0u32; 128];
        for row in SynapseRowOnHemisphere::iter_all() {
            hits[row.driver().value() as usize] += 1;
        }
        assert!(hits.iter().all(|&h| h == 2));
        for driver in SynapseDriverOnHemisphere::iter_all() {
            for row in driver.rows() {
                assert_eq!(row.driver(), driver);
            }
        }
    }

    #[test]
    fn no_conversion_between_unrelated_kinds() {
        let c = make_coordinate(CoordKind::CrossbarInputOnChip, 3).unwrap();
        assert!(matches!(
            c.convert(CoordKind::SynapseRowOnHemisphere),
            Err(CoordError::NoConversion { .. })
        ));
    }

    #[test]
    fn linear_index_roundtrip_exhaustive() {
        for kind in CoordKind::ALL {
            let mut seen = std::collections::HashSet::new();
            for i in 0..kind.range() {
                let c = Coord::from_linear(kind, i).unwrap();
                assert_eq!(c.linear_index(), i);
                assert!(seen.insert(c));
            }
            assert_eq!(seen.len() as u32, kind.range());
            assert!(Coord::from_linear(kind, kind.range()).is_err());
        }
    }

    #[test]
    fn circuit_split_roundtrip_exhaustive() {
        for circuit in NeuronCircuitOnChip::iter_all() {
            let (h, c) = circuit.split();
            assert_eq!(NeuronCircuitOnChip::from_parts(h, c), circuit);
        }
    }

    #[test]
    fn display_renders_kind_and_value() {
        let c = make_coordinate(CoordKind::HemisphereOnChip, 1).unwrap();
        assert_eq!(c.to_string(), "HemisphereOnChip(1)");
        assert_eq!(
            NeuronColumnOnHemisphere::new(5).unwrap().to_string(),
            "NeuronColumnOnHemisphere(5)"
        );
    }
}
