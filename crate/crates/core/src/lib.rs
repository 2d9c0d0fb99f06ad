//! Exact combinatorics for (a,b)-sequences, the board-filling bijection onto
//! partitions with a prescribed a-Durfee rectangle, and the enumeration of
//! strict partitions by number of parts and BG-rank.
//!
//! All arithmetic is on checked 64-bit integers; overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

pub mod abseq;
pub mod bijections;
mod error;
pub mod partitions;
pub mod qseries;
pub mod table;
pub mod verify;

pub use abseq::ABSequence;
pub use bijections::IotaImage;
pub use error::{Error, Result};
pub use partitions::{ColumnSequence, DurfeeRect, Partition, PartsFilter, StrictPartition};
pub use qseries::{CoeffTable, TruncatedSeries};
pub use verify::VerificationReport;
