//! Independent oracles and the acceptance checks for `hgx-core`.

pub mod acceptance;
pub mod oracles;
