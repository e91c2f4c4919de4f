pub mod cache;
pub mod diagram;
pub mod error;
pub mod par;
pub mod root_system;
pub mod weyl;
pub mod schubert;
pub mod torus;
pub mod rigidity;
pub mod address;
pub mod cli;
