pub mod algebra;
pub mod cert;
pub mod error;
pub mod exec;
pub mod gen;
pub mod ideal;
pub mod patching;
pub mod poly;
pub mod reduction;
pub mod rees;
pub mod ring;
pub mod square;
pub mod suites;
pub mod text;
pub mod verify;
