//! Models shipped with the crate. The CLI accepts these names in place of a
//! model path.

use crate::kripke::KripkeModel;

pub const M1: &str = include_str!("../fixtures/M1.kripke");
pub const M2: &str = include_str!("../fixtures/M2.kripke");
pub const M3: &str = include_str!("../fixtures/M3.kripke");
pub const FULL2: &str = include_str!("../fixtures/FULL2.kripke");
pub const M1DUP: &str = include_str!("../fixtures/M1dup.kripke");

pub const NAMES: [&str; 5] = ["M1", "M2", "M3", "FULL2", "M1dup"];

/// Model file text of a shipped fixture.
pub fn source(name: &str) -> Option<&'static str> {
    match name {
        "M1" => Some(M1),
        "M2" => Some(M2),
        "M3" => Some(M3),
        "FULL2" => Some(FULL2),
        "M1dup" => Some(M1DUP),
        _ => None,
    }
}

pub fn load(name: &str) -> Option<KripkeModel> {
    source(name).map(|text| KripkeModel::parse(text).expect("shipped fixture parses"))
}

pub fn m1() -> KripkeModel {
    load("M1").unwrap()
}

pub fn m2() -> KripkeModel {
    load("M2").unwrap()
}

pub fn m3() -> KripkeModel {
    load("M3").unwrap()
}

pub fn full2() -> KripkeModel {
    load("FULL2").unwrap()
}

pub fn m1dup() -> KripkeModel {
    load("M1dup").unwrap()
}
