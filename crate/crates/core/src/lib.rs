pub mod dualgeom;
pub mod error;
pub mod exactalg;
pub mod exactlin;
pub mod fibers;
pub mod musyz;
pub mod difforms;
pub mod oracle;
pub mod fixtures;
pub mod input;
pub mod report;
