//! Arcs in the punctured disk, up to isotopy, and their exact placement.

pub mod code;
pub mod diagram;
pub mod layout;
pub mod tuple;

pub use code::{ArcCode, Event, Side};
pub use diagram::{
    code_crossing_number, crossing_number, embed, normalize, polyline_crossings, realize_word,
    ArcDiagram, Point, DEFAULT_SEGMENT_BUDGET,
};
pub use layout::Layout;
pub use tuple::TupleDiagram;
