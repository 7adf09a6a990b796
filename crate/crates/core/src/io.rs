//! Instance files and arrangement dumps.
//!
//! An instance file is two lines of space-separated decimal integers:
//!
//! ```text
//! n1 n2 n3 nc
//! d1 d2 ... d_nc
//! ```
//!
//! An arrangement dump is one line per slot, `x y z container_id`, in
//! canonical slot order.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::storage::{Arrangement, Instance, Layout};

/// Parse the two-line instance format.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing instance header line".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(Error::Parse(format!(
            "expected 'n1 n2 n3 nc' on line 1, got {} fields",
            fields.len()
        )));
    }
    let parse_u32 = |s: &str, what: &str| -> Result<u32> {
        s.parse()
            .map_err(|_| Error::Parse(format!("bad {what} '{s}'")))
    };
    let n1 = parse_u32(fields[0], "n1")?;
    let n2 = parse_u32(fields[1], "n2")?;
    let n3 = parse_u32(fields[2], "n3")?;
    let nc = parse_u32(fields[3], "nc")?;

    let dates_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing delivery dates line".into()))?;
    let dates = dates_line
        .split_whitespace()
        .map(|s| parse_u32(s, "delivery date"))
        .collect::<Result<Vec<u32>>>()?;
    if dates.len() != nc as usize {
        return Err(Error::Parse(format!(
            "header names {nc} containers but {} dates follow",
            dates.len()
        )));
    }
    Instance::new(n1, n2, n3, dates)
}

/// Read an instance file.
pub fn read_instance(path: &Path) -> Result<Instance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// Render an instance in the two-line format.
pub fn instance_string(instance: &Instance) -> String {
    let (n1, n2, n3) = instance.dims();
    let mut out = format!("{n1} {n2} {n3} {}\n", instance.container_count());
    let dates = instance.delivery_dates();
    for (j, d) in dates.iter().enumerate() {
        if j > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{d}");
    }
    out.push('\n');
    out
}

/// Write an instance file.
pub fn write_instance(instance: &Instance, path: &Path) -> Result<()> {
    std::fs::write(path, instance_string(instance))?;
    Ok(())
}

/// Render an arrangement dump: `x y z container_id` per slot.
pub fn arrangement_dump(layout: &Layout, arrangement: &Arrangement) -> String {
    debug_assert_eq!(layout.slot_count(), arrangement.len());
    let mut out = String::new();
    for (slot, &id) in arrangement.ids().iter().enumerate() {
        let cell = layout.cell(slot);
        let _ = writeln!(out, "{} {} {} {id}", cell.x, cell.y, cell.z);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::storage::build_canonical_layout;

    #[test]
    fn instance_round_trip() {
        let inst = Instance::new(2, 3, 2, vec![5, 1, 44, 2, 9]).unwrap();
        let text = instance_string(&inst);
        assert_eq!(text, "2 3 2 5\n5 1 44 2 9\n");
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn parse_rejects_malformed_files() {
        assert!(parse_instance("").is_err());
        assert!(parse_instance("2 2 2\n1 2\n").is_err());
        assert!(parse_instance("2 2 2 3\n1 2\n").is_err());
        assert!(parse_instance("2 2 2 2\n1 x\n").is_err());
        // Capacity violations surface through instance validation.
        assert!(parse_instance("2 2 2 9\n1 1 1 1 1 1 1 1 1\n").is_err());
    }

    #[test]
    fn dump_lists_slots_in_canonical_order() {
        let inst = Instance::new(2, 1, 2, vec![1, 2, 3]).unwrap();
        let layout = build_canonical_layout(&inst);
        let arr = Arrangement::new(vec![3, 1, 2]).unwrap();
        assert_eq!(arrangement_dump(&layout, &arr), "1 1 1 3\n2 1 1 1\n1 1 2 2\n");
    }
}
