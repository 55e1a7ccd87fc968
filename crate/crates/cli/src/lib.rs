pub mod app;
pub mod cache;
pub mod error;
pub mod sweep;

pub use app::run;
