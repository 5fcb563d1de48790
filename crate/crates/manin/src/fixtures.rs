//! Presentation files for the classical operads.
//!
//! Two-generator fixtures use `a_1 = x_1 x_2`, `a_2 = x_2 x_1`.

use manin_core::OperadPresentation;

use crate::format::parse_validated;

pub const NAMES: [&str; 7] = ["as", "com", "lie", "perm", "prelie", "leib", "zinb"];

/// The presentation file text of a fixture. `comm` is accepted for `com`.
pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "as" => include_str!("../fixtures/as"),
        "com" | "comm" => include_str!("../fixtures/com"),
        "lie" => include_str!("../fixtures/lie"),
        "perm" => include_str!("../fixtures/perm"),
        "prelie" => include_str!("../fixtures/prelie"),
        "leib" => include_str!("../fixtures/leib"),
        "zinb" => include_str!("../fixtures/zinb"),
        _ => return None,
    })
}

pub fn load(name: &str) -> Option<OperadPresentation> {
    let text = source(name)?;
    Some(
        parse_validated(text, name)
            .expect("bundled fixtures parse")
            .presentation,
    )
}

pub fn all() -> Vec<OperadPresentation> {
    NAMES
        .iter()
        .map(|n| load(n).expect("listed fixture"))
        .collect()
}
