//! Data files shipped with the crate.

pub const GRIESS_P1: &str = include_str!("../data/griess_p1.alg");
pub const GRIESS_P2: &str = include_str!("../data/griess_p2.alg");
pub const W0_RING: &str = include_str!("../data/w0.ring");
pub const N0_RING: &str = include_str!("../data/n0.ring");
pub const ANCHORS: &str = include_str!("../data/anchors.txt");
