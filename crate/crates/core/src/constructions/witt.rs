//! The Steiner system `S(3,6,22)` from the projective plane of order 4.
//!
//! Points are the 21 points of `PG(2,4)` plus a point at infinity. Blocks
//! are the 21 lines extended by infinity together with one of the three
//! classes of 56 hyperovals, where two hyperovals are in the same class iff
//! they meet in an even number of points.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Number of points of the design.
pub const POINTS: usize = 22;
/// Index of the point at infinity.
pub const INFINITY: usize = 21;

/// Multiplication in GF(4), elements encoded as `a + 2b` for `a + bx`,
/// reduced modulo `x² + x + 1`. Addition is XOR.
fn gf4_mul(a: u8, b: u8) -> u8 {
    let mut acc = 0u16;
    for i in 0..2 {
        if b >> i & 1 == 1 {
            acc ^= u16::from(a) << i;
        }
    }
    if acc & 0b100 != 0 {
        acc ^= 0b111;
    }
    acc as u8
}

/// Homogeneous triples over GF(4) whose first nonzero coordinate is 1, in
/// lexicographic order. Used for both points and lines.
fn normalized_triples() -> Vec<[u8; 3]> {
    let mut out = Vec::with_capacity(21);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let t = [a, b, c];
                if t.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// `PG(2,4)`: point and line coordinates with the incidence relation.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    pub points: Vec<[u8; 3]>,
    /// `lines[l]` lists the five points on line `l`, ascending.
    pub lines: Vec<[usize; 5]>,
}

impl ProjectivePlane {
    pub fn order_four() -> Self {
        let points = normalized_triples();
        let duals = normalized_triples();
        let lines = duals
            .iter()
            .map(|l| {
                let mut on = [0usize; 5];
                let mut i = 0;
                for (p, pt) in points.iter().enumerate() {
                    let dot = (0..3).fold(0u8, |acc, j| acc ^ gf4_mul(l[j], pt[j]));
                    if dot == 0 {
                        on[i] = p;
                        i += 1;
                    }
                }
                debug_assert_eq!(i, 5);
                on
            })
            .collect();
        ProjectivePlane { points, lines }
    }

    /// All 6-arcs (no three points collinear), each sorted, in
    /// lexicographic order.
    pub fn hyperovals(&self) -> Vec<[usize; 6]> {
        let n = self.points.len();
        let mut lines_through: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for (l, pts) in self.lines.iter().enumerate() {
            for &p in pts {
                lines_through[p].push(l);
            }
        }
        let mut on_line = alloc::vec![0u8; self.lines.len()];
        let mut chosen = Vec::with_capacity(6);
        let mut out = Vec::new();
        extend_arc(0, n, &lines_through, &mut on_line, &mut chosen, &mut out);
        out
    }
}

fn extend_arc(
    from: usize,
    n: usize,
    lines_through: &[Vec<usize>],
    on_line: &mut [u8],
    chosen: &mut Vec<usize>,
    out: &mut Vec<[usize; 6]>,
) {
    if chosen.len() == 6 {
        let mut arc = [0; 6];
        arc.copy_from_slice(chosen);
        out.push(arc);
        return;
    }
    for p in from..n {
        if lines_through[p].iter().any(|&l| on_line[l] >= 2) {
            continue;
        }
        for &l in &lines_through[p] {
            on_line[l] += 1;
        }
        chosen.push(p);
        extend_arc(p + 1, n, lines_through, on_line, chosen, out);
        chosen.pop();
        for &l in &lines_through[p] {
            on_line[l] -= 1;
        }
    }
}

fn mask<const N: usize>(points: &[usize; N]) -> u32 {
    points.iter().fold(0, |m, &p| m | 1 << p)
}

/// A 3-(22, 6, 1) design. Blocks are sorted point lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SteinerSystem {
    pub point_count: usize,
    pub blocks: Vec<[usize; 6]>,
}

impl SteinerSystem {
    /// Bitmask of each block's points.
    pub fn block_masks(&self) -> Vec<u32> {
        self.blocks.iter().map(mask).collect()
    }

    /// Check every triple in exactly one block, every point in 21 blocks,
    /// and every two blocks meeting in 0 or 2 points.
    pub fn validate(&self) -> Result<()> {
        if self.point_count != POINTS || self.blocks.len() != 77 {
            return Err(Error::DesignInvariant("22 points and 77 blocks"));
        }
        if self
            .blocks
            .iter()
            .any(|b| b.windows(2).any(|w| w[0] >= w[1]) || b[5] >= POINTS)
        {
            return Err(Error::DesignInvariant(
                "blocks are sorted 6-subsets of the points",
            ));
        }
        let mut triples = alloc::vec![0u8; POINTS * POINTS * POINTS];
        for b in &self.blocks {
            for i in 0..6 {
                for j in i + 1..6 {
                    for l in j + 1..6 {
                        triples[(b[i] * POINTS + b[j]) * POINTS + b[l]] += 1;
                    }
                }
            }
        }
        for x in 0..POINTS {
            for y in x + 1..POINTS {
                for z in y + 1..POINTS {
                    if triples[(x * POINTS + y) * POINTS + z] != 1 {
                        return Err(Error::DesignInvariant("every triple in exactly one block"));
                    }
                }
            }
        }
        let masks = self.block_masks();
        for p in 0..POINTS {
            if masks.iter().filter(|&&m| m >> p & 1 == 1).count() != 21 {
                return Err(Error::DesignInvariant("every point in 21 blocks"));
            }
        }
        for (i, a) in masks.iter().enumerate() {
            for b in &masks[i + 1..] {
                if !matches!((a & b).count_ones(), 0 | 2) {
                    return Err(Error::DesignInvariant("blocks meet in 0 or 2 points"));
                }
            }
        }
        Ok(())
    }
}

/// Split hyperovals into classes under "meet in an even number of points".
/// Each class is in lexicographic order; classes are ordered by their
/// least member.
pub fn hyperoval_classes(hyperovals: &[[usize; 6]]) -> Result<Vec<Vec<[usize; 6]>>> {
    let masks: Vec<u32> = hyperovals.iter().map(mask).collect();
    let mut assigned = alloc::vec![false; hyperovals.len()];
    let mut classes = Vec::new();
    for i in 0..hyperovals.len() {
        if assigned[i] {
            continue;
        }
        let mut class = Vec::new();
        for j in i..hyperovals.len() {
            if !assigned[j] && (masks[i] & masks[j]).count_ones().is_multiple_of(2) {
                assigned[j] = true;
                class.push(j);
            }
        }
        for (x, &a) in class.iter().enumerate() {
            for &b in &class[x + 1..] {
                if !(masks[a] & masks[b]).count_ones().is_multiple_of(2) {
                    return Err(Error::DesignInvariant(
                        "even intersection is an equivalence",
                    ));
                }
            }
        }
        classes.push(class.into_iter().map(|j| hyperovals[j]).collect());
    }
    Ok(classes)
}

/// Build `S(3,6,22)`: extended lines first, in line order, then the
/// hyperoval class containing the lexicographically least hyperoval.
pub fn witt_design_22() -> Result<SteinerSystem> {
    let plane = ProjectivePlane::order_four();
    let hyperovals = plane.hyperovals();
    if hyperovals.len() != 168 {
        return Err(Error::DesignInvariant("168 hyperovals in PG(2,4)"));
    }
    let classes = hyperoval_classes(&hyperovals)?;
    if classes.len() != 3 || classes.iter().any(|c| c.len() != 56) {
        return Err(Error::DesignInvariant("three hyperoval classes of 56"));
    }
    let mut blocks: Vec<[usize; 6]> = plane
        .lines
        .iter()
        .map(|l| [l[0], l[1], l[2], l[3], l[4], INFINITY])
        .collect();
    blocks.extend(classes[0].iter().copied());
    let design = SteinerSystem {
        point_count: POINTS,
        blocks,
    };
    design.validate()?;
    Ok(design)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        for a in 1..4u8 {
            assert_eq!(gf4_mul(a, 1), a);
            assert_eq!((1..4u8).filter(|&b| gf4_mul(a, b) == 1).count(), 1);
        }
        // x·x = x + 1
        assert_eq!(gf4_mul(2, 2), 3);
    }

    #[test]
    fn plane_incidences() {
        let plane = ProjectivePlane::order_four();
        assert_eq!(plane.points.len(), 21);
        assert_eq!(plane.lines.len(), 21);
        for (i, a) in plane.lines.iter().enumerate() {
            for b in &plane.lines[i + 1..] {
                let common = a.iter().filter(|p| b.contains(p)).count();
                assert_eq!(common, 1);
            }
        }
    }

    #[test]
    fn hyperovals_meet_lines_evenly() {
        let plane = ProjectivePlane::order_four();
        let hs = plane.hyperovals();
        assert_eq!(hs.len(), 168);
        for h in &hs {
            for l in &plane.lines {
                let k = l.iter().filter(|p| h.contains(p)).count();
                assert!(k == 0 || k == 2);
            }
        }
    }

    #[test]
    fn design_is_valid() {
        let d = witt_design_22().unwrap();
        assert_eq!(d.blocks.len(), 77);
        d.validate().unwrap();
    }

    #[test]
    fn corrupt_design_rejected() {
        let mut d = witt_design_22().unwrap();
        d.blocks[30] = d.blocks[40];
        assert!(d.validate().is_err());
    }
}
