use std::collections::BTreeMap;

use super::{LabeledNetwork, Pass, Shading, Side};
use crate::hopf::Element;
use crate::scalars::Field;

pub const OUT_STAR: usize = 0;
pub const IN_OTHER: usize = 1;
pub const OUT_OTHER: usize = 2;
pub const IN_STAR: usize = 3;

/// Port-level wiring of a closed network. Dart `4·b + p` is port `p` of box
/// `b`; every out-port (p0, p2) is joined to exactly one in-port (p1, p3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortGraph {
    pub ids: Vec<String>,
    /// `link[d]` for an out dart `d` is the in dart its strand runs into.
    pub link: BTreeMap<usize, usize>,
    pub free_loops: usize,
}

fn out_dart(b: usize, side: Side) -> usize {
    4 * b + if side == Side::Star { OUT_STAR } else { OUT_OTHER }
}

fn in_dart(b: usize, side: Side) -> usize {
    4 * b + if side == Side::Star { IN_STAR } else { IN_OTHER }
}

fn is_out(d: usize) -> bool {
    d % 4 == OUT_STAR || d % 4 == OUT_OTHER
}

fn pass_at_in(d: usize) -> (usize, Side) {
    (d / 4, if d % 4 == IN_STAR { Side::Star } else { Side::Other })
}

impl PortGraph {
    pub fn from_network<F: Field>(n: &LabeledNetwork<F>) -> PortGraph {
        let ids: Vec<String> = n.boxes.keys().cloned().collect();
        let index: BTreeMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut link = BTreeMap::new();
        let mut free_loops = 0;
        for lp in &n.loops {
            if lp.is_empty() {
                free_loops += 1;
                continue;
            }
            for (i, p) in lp.iter().enumerate() {
                let q = &lp[(i + 1) % lp.len()];
                link.insert(out_dart(index[p.box_id.as_str()], p.side), in_dart(index[q.box_id.as_str()], q.side));
            }
        }
        PortGraph { ids, link, free_loops }
    }

    /// Reads loops back off the wiring, starting each loop at its least
    /// unvisited pass.
    pub fn loops(&self) -> Vec<Vec<Pass>> {
        let g = self.ids.len();
        let mut visited = vec![[false; 2]; g];
        let mut loops = vec![Vec::new(); self.free_loops];
        for b in 0..g {
            for side in [Side::Star, Side::Other] {
                if visited[b][side as usize] {
                    continue;
                }
                let mut lp = Vec::new();
                let (mut cb, mut cs) = (b, side);
                while !visited[cb][cs as usize] {
                    visited[cb][cs as usize] = true;
                    lp.push(Pass::new(self.ids[cb].clone(), cs));
                    (cb, cs) = pass_at_in(self.link[&out_dart(cb, cs)]);
                }
                loops.push(lp);
            }
        }
        loops
    }

    pub fn into_network<F: Field>(self, shading: Shading, boxes: BTreeMap<String, Element<F>>) -> LabeledNetwork<F> {
        LabeledNetwork { shading, boxes, loops: self.loops() }
    }

    /// Moves the star of every box back one port and reverses every strand.
    pub fn rotated_back(&self) -> PortGraph {
        let shift = |d: usize| 4 * (d / 4) + (d % 4 + 1) % 4;
        let link = self.link.iter().map(|(&o, &i)| (shift(i), shift(o))).collect();
        PortGraph { ids: self.ids.clone(), link, free_loops: self.free_loops }
    }

    /// Number of faces of the map with vertices the boxes, edges the strands,
    /// and clockwise rotation `p ↦ p+1` at every box.
    pub fn faces(&self) -> usize {
        let darts = 4 * self.ids.len();
        let mut alpha = vec![0; darts];
        for (&o, &i) in &self.link {
            alpha[o] = i;
            alpha[i] = o;
        }
        let sigma = |d: usize| 4 * (d / 4) + (d % 4 + 1) % 4;
        let mut seen = vec![false; darts];
        let mut faces = 0;
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = sigma(alpha[d]);
            }
        }
        faces
    }

    pub fn components(&self) -> usize {
        let g = self.ids.len();
        let mut parent: Vec<usize> = (0..g).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (&o, &i) in &self.link {
            let (a, b) = (find(&mut parent, o / 4), find(&mut parent, i / 4));
            parent[a] = b;
        }
        (0..g).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Euler's formula: a map with `g` four-valent vertices, `2g` edges and
    /// `c` components is a union of spheres iff it has `g + 2c` faces.
    pub fn is_planar(&self) -> bool {
        debug_assert!(self.link.keys().all(|&d| is_out(d)));
        self.faces() == self.ids.len() + 2 * self.components()
    }
}
