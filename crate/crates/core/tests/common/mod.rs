pub mod brute;
pub mod gauss;
