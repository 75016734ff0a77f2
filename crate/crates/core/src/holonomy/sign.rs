use std::fmt;

use crate::zeta::CycleClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Species {
    Bosonic,
    Fermionic,
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Species::Bosonic => "bosonic",
            Species::Fermionic => "fermionic",
        })
    }
}

/// The sign character `(-1)^l` of a cycle class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignHolonomy {
    pub cycle: CycleClass,
    pub sign: i8,
    pub species: Species,
}

pub fn cycle_holonomy_sign(c: &CycleClass) -> SignHolonomy {
    let odd = c.length % 2 == 1;
    SignHolonomy {
        cycle: c.clone(),
        sign: if odd { -1 } else { 1 },
        species: if odd { Species::Fermionic } else { Species::Bosonic },
    }
}

/// Split into (fermionic, bosonic), each in input order.
pub fn classify_paths(classes: &[CycleClass]) -> (Vec<CycleClass>, Vec<CycleClass>) {
    classes.iter().cloned().partition(|c| c.length % 2 == 1)
}

/// Sum of signs: bosonic count minus fermionic count.
pub fn total_holonomy(classes: &[CycleClass]) -> i64 {
    classes.iter().map(|c| i64::from(cycle_holonomy_sign(c).sign)).sum()
}
