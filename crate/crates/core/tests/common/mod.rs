#![allow(dead_code)]

pub mod brute;
pub mod published;

use superaffine_core::rootdata::desk_roster;
use superaffine_core::{build_root_system, parse_algebra, RootSystem};

/// Larger members of each family, beyond the desk roster.
pub const EXTRAS: &[&str] =
    &["osp(7|2)", "osp(3|4)", "osp(1|6)", "osp(6|4)", "osp(2|6)", "sl(4|1)", "sl(4)", "osp(5|4)"];

pub fn rs(name: &str) -> RootSystem {
    build_root_system(parse_algebra(name).unwrap()).unwrap()
}

pub fn roster() -> Vec<RootSystem> {
    desk_roster().into_iter().map(|f| build_root_system(f).unwrap()).collect()
}

pub fn roster_and_extras() -> Vec<RootSystem> {
    let mut out = roster();
    out.extend(EXTRAS.iter().map(|n| rs(n)));
    out
}

/// [`roster_and_extras`], built once per test binary.
pub fn all_systems() -> &'static [RootSystem] {
    static ALL: std::sync::OnceLock<Vec<RootSystem>> = std::sync::OnceLock::new();
    ALL.get_or_init(roster_and_extras)
}
