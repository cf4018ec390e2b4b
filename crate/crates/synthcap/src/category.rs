//! The six composite-image categories.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Collage,
    ImageText,
    Chart,
    Diagram,
    Code,
    Table,
}

impl Category {
    /// Canonical order. Planning, emission and seeding all use this order.
    pub const ALL: [Category; 6] = [
        Category::Collage,
        Category::ImageText,
        Category::Chart,
        Category::Diagram,
        Category::Code,
        Category::Table,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::Collage => "collage",
            Category::ImageText => "image_text",
            Category::Chart => "chart",
            Category::Diagram => "diagram",
            Category::Code => "code",
            Category::Table => "table",
        }
    }

    /// Stable small integer used when packing seeds.
    pub fn ordinal(self) -> u64 {
        match self {
            Category::Collage => 0,
            Category::ImageText => 1,
            Category::Chart => 2,
            Category::Diagram => 3,
            Category::Code => 4,
            Category::Table => 5,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown category `{0}` (expected collage, image_text, chart, diagram, code or table)")]
pub struct UnknownCategory(pub String);

impl FromStr for Category {
    type Err = UnknownCategory;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "collage" => Ok(Category::Collage),
            "image_text" | "image-text" => Ok(Category::ImageText),
            "chart" => Ok(Category::Chart),
            "diagram" => Ok(Category::Diagram),
            "code" => Ok(Category::Code),
            "table" => Ok(Category::Table),
            other => Err(UnknownCategory(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinals_are_unique_and_match_order() {
        for (i, cat) in Category::ALL.iter().enumerate() {
            assert_eq!(cat.ordinal(), i as u64);
        }
    }

    #[test]
    fn name_round_trips() {
        for cat in Category::ALL {
            assert_eq!(cat.name().parse::<Category>().unwrap(), cat);
        }
    }
}
