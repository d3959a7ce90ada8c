use std::fmt;

/// Kodaira symbol of the special fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I0,
    /// Multiplicative reduction, `n >= 1`.
    In {
        n: u32,
        split: bool,
    },
    II,
    III,
    IV,
    I0Star,
    /// `I_n^*` with `n >= 1`.
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// `Some(split)` for multiplicative types.
    pub fn split(&self) -> Option<bool> {
        match self {
            KodairaType::In { split, .. } => Some(*split),
            _ => None,
        }
    }

    pub fn is_multiplicative(&self) -> bool {
        matches!(self, KodairaType::In { .. })
    }

    pub fn is_additive(&self) -> bool {
        !matches!(self, KodairaType::I0 | KodairaType::In { .. })
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I0 => write!(f, "I0"),
            KodairaType::In { n, .. } => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::I0Star => write!(f, "I0*"),
            KodairaType::InStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}
