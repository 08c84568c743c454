#![allow(dead_code)]

pub mod gates;
pub mod oracles;
