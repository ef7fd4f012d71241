pub mod artin;
pub mod braid;
pub mod dehornoy;
pub mod engine;
pub mod error;
pub mod family;
pub mod fdtc;
pub mod index;
pub mod markov;
pub mod random;
pub mod rational;
pub mod suites;
pub mod upsilon;
