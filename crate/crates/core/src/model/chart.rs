//! Local models at double points.
//!
//! A neighbourhood of a double point is the cone over the complete graph on
//! four vertices: four ports (triple-edge germs) and six region corners, one
//! per pair of ports. The chamber table lists, for each complementary
//! component of a thickening of that cone, the three ports around it. It is
//! the block table the thickening uses.

use crate::perm::Perm3;

#[derive(Debug)]
pub struct Chart {
    pub id: &'static str,
    /// Unordered port pairs joined by a region corner, each exactly once.
    pub corners: &'static [(u8, u8)],
    /// Ports surrounding each chamber of the thickened block.
    pub chambers: &'static [[u8; 3]],
}

pub const CHARTS: &[Chart] = &[Chart {
    id: "x",
    corners: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    chambers: &[[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]],
}];

pub fn chart(id: &str) -> Option<&'static Chart> {
    CHARTS.iter().find(|c| c.id == id)
}

impl Chart {
    /// Checks a corner incidence table against this chart: every port slot
    /// sits in exactly one corner, and the corners realise the chart's port
    /// pairs once each.
    pub fn matches(&self, nbr: &[[Option<u8>; 3]; 4]) -> Result<(), String> {
        let mut pairs = Vec::new();
        for (port, slots) in nbr.iter().enumerate() {
            for (slot, other) in slots.iter().enumerate() {
                let Some(other) = *other else {
                    return Err(format!("port {port} slot {slot} lies in no region corner"));
                };
                if other as usize == port {
                    return Err(format!("port {port} slot {slot} turns back into its own port"));
                }
                let back = nbr[other as usize].iter().filter(|o| **o == Some(port as u8)).count();
                if back != 1 {
                    return Err(format!("corner between ports {port} and {other} is not unique"));
                }
                if (port as u8) < other {
                    pairs.push((port as u8, other));
                }
            }
        }
        pairs.sort();
        let mut expected = self.corners.to_vec();
        expected.sort();
        if pairs != expected {
            return Err(format!("corner pattern {pairs:?} does not match chart {}", self.id));
        }
        Ok(())
    }
}

/// Slot transition from port `from` to port `to` at a double point.
///
/// The slot in the corner shared by the two ports maps to itself; the slot
/// in the corner towards a third port `x` maps to the slot in the corner
/// between `to` and `x`.
pub fn transition(nbr: &[[Option<u8>; 3]; 4], from: u8, to: u8) -> Option<Perm3> {
    let mut images = [0u8; 3];
    for slot in 0..3 {
        let x = nbr[from as usize][slot]?;
        let target = if x == to { from } else { x };
        let image = nbr[to as usize].iter().position(|o| *o == Some(target))?;
        images[slot] = image as u8;
    }
    Perm3::new(images)
}
