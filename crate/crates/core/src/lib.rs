pub mod arith;
pub mod series;
pub mod cusps;
pub mod eta;
pub mod modeq;
pub mod verify;
pub mod cli;
