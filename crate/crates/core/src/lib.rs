pub mod alphabet;
pub mod error;
pub mod factorization;
pub mod icfl;
pub mod lyndon;
pub mod oracle;
pub mod borders;
pub mod suffixes;
pub mod overlap;
pub mod sweep;
pub mod cli;
