//! Built-in worked examples, embedded at compile time. Every entry is a
//! plain scenario file; `prochern compute <name>` runs one by name.

pub struct CatalogEntry {
    pub name: &'static str,
    pub json: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "p1-minus-two-points",
        json: include_str!("../catalog/p1-minus-two-points.json"),
    },
    CatalogEntry {
        name: "p2-minus-line",
        json: include_str!("../catalog/p2-minus-line.json"),
    },
    CatalogEntry {
        name: "p2-minus-two-lines",
        json: include_str!("../catalog/p2-minus-two-lines.json"),
    },
    CatalogEntry {
        name: "p1xp1-minus-diagonal-class",
        json: include_str!("../catalog/p1xp1-minus-diagonal-class.json"),
    },
    CatalogEntry {
        name: "blowup-compat-a2",
        json: include_str!("../catalog/blowup-compat-a2.json"),
    },
    CatalogEntry {
        name: "gm-quadratic",
        json: include_str!("../catalog/gm-quadratic.json"),
    },
    CatalogEntry {
        name: "p3-minus-three-planes",
        json: include_str!("../catalog/p3-minus-three-planes.json"),
    },
];

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// One line per entry, in the fixed catalog order.
pub fn listing() -> String {
    let width = ENTRIES.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for entry in ENTRIES {
        let description = crate::scenario::parse_spec(entry.json)
            .ok()
            .and_then(|s| s.description)
            .unwrap_or_default();
        out.push_str(&format!(
            "{:<width$}  {}\n",
            entry.name,
            description,
            width = width
        ));
    }
    out
}
