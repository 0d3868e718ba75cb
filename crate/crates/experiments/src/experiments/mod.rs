pub mod determination;
pub mod domination;
pub mod merge;
pub mod separation;
pub mod thoma;
pub mod transition;
pub mod vanishing;
