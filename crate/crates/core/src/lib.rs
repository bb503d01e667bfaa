//! Promotion and K-promotion of standard and increasing tableaux, promotion
//! digraphs, noncrossing partitions and flamingo webs.

pub mod digraphs;
pub mod enumerate;
pub mod harness;
pub mod noncrossing;
pub mod plabic;
pub mod promotion;
pub mod samples;
pub mod tableaux;

pub use digraphs::{promotion_digraph, promotion_digraphs, PromotionDigraph};
pub use noncrossing::{NoncrossingMatching, NoncrossingSetPartition};
pub use plabic::{Color, PlabicGraph};
pub use promotion::{k_promote, promote_standard, Promotable};
pub use tableaux::{IncreasingTableau, LatticeWord, Partition, RotatedAlphabet, StandardTableau, Tableau};
