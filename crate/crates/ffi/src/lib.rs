pub use bihom as core;
