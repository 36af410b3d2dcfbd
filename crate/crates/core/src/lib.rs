pub mod detect;
pub mod error;
pub mod fibpoly;
pub mod identities;
pub mod poly;
pub mod riordan;
pub mod series;
pub mod subsets;
pub mod tiling;
pub mod triangle;
