pub mod bench;
pub mod graph;
pub mod seq;
pub mod size;
pub mod table;
pub mod verify;
