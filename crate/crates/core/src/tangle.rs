//! Planar k-tangles with 2-box slots, as oriented wiring between box ports
//! and boundary points.
//!
//! Boundary points are numbered 0..2k clockwise from the starred corner: the
//! top row left to right is `0..k`, the bottom row right to left is `k..2k`,
//! so top position `t` is point `t` and bottom position `t` is `2k−1−t`.
//! Strands leave the tangle at even points and enter at odd points.

use std::collections::{BTreeMap, BTreeSet};

use crate::hopf::Element;
use crate::network::{LabeledNetwork, PortGraph, Shading};
use crate::scalars::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Port(usize, usize),
    Boundary(usize),
}

impl End {
    fn is_source(self) -> bool {
        match self {
            End::Port(_, p) => p % 2 == 0,
            End::Boundary(j) => j % 2 == 1,
        }
    }
}

/// Corner of a box holding its *.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarCorner {
    Left,
    Top,
    Right,
    Bottom,
}

impl StarCorner {
    /// Index into [top-left, top-right, bottom-right, bottom-left] of port p0.
    fn first_corner(self) -> usize {
        match self {
            StarCorner::Left => 0,
            StarCorner::Top => 1,
            StarCorner::Right => 2,
            StarCorner::Bottom => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    pub k: usize,
    pub slots: Vec<String>,
    /// Source end → sink end of every strand.
    pub link: BTreeMap<End, End>,
    pub free_loops: usize,
}

pub fn top(t: usize) -> usize {
    t
}

pub fn bottom(k: usize, t: usize) -> usize {
    2 * k - 1 - t
}

impl Tangle {
    fn connect(&mut self, a: End, b: End) {
        let (s, t) = if a.is_source() { (a, b) } else { (b, a) };
        assert!(s.is_source() && !t.is_source(), "strand {a:?}–{b:?} is not consistently oriented");
        self.link.insert(s, t);
    }

    pub fn identity(k: usize) -> Tangle {
        let mut t = Tangle { k, slots: Vec::new(), link: BTreeMap::new(), free_loops: 0 };
        for p in 0..k {
            t.connect(End::Boundary(top(p)), End::Boundary(bottom(k, p)));
        }
        t
    }

    /// One box on positions (pos, pos+1) with its * at `corner`; all other
    /// positions carry through strands. Left/Right need even `pos`,
    /// Top/Bottom odd `pos`, to respect the shading.
    pub fn single_box(k: usize, pos: usize, corner: StarCorner, id: impl Into<String>) -> Tangle {
        assert!(pos + 1 < k, "box does not fit");
        let mut t = Tangle { k, slots: vec![id.into()], link: BTreeMap::new(), free_loops: 0 };
        for p in (0..k).filter(|&p| p != pos && p != pos + 1) {
            t.connect(End::Boundary(top(p)), End::Boundary(bottom(k, p)));
        }
        let corners = [top(pos), top(pos + 1), bottom(k, pos + 1), bottom(k, pos)];
        for port in 0..4 {
            t.connect(End::Port(0, port), End::Boundary(corners[(corner.first_corner() + port) % 4]));
        }
        t
    }

    /// Box on positions (pos, pos+1) in its standard frame: * on the left
    /// for even `pos`, on top for odd `pos`.
    pub fn standard_box(k: usize, pos: usize, id: impl Into<String>) -> Tangle {
        let corner = if pos.is_multiple_of(2) { StarCorner::Left } else { StarCorner::Top };
        Tangle::single_box(k, pos, corner, id)
    }

    /// Mirror image of [`Tangle::standard_box`] in a horizontal line.
    pub fn reflected_box(k: usize, pos: usize, id: impl Into<String>) -> Tangle {
        let corner = if pos.is_multiple_of(2) { StarCorner::Left } else { StarCorner::Bottom };
        Tangle::single_box(k, pos, corner, id)
    }

    /// `self` stacked on top of `below`.
    pub fn compose(&self, below: &Tangle) -> Tangle {
        assert_eq!(self.k, below.k, "composing tangles of different colours");
        let k = self.k;
        let offset = self.slots.len();
        let shift = |e: End| match e {
            End::Port(b, p) => End::Port(b + offset, p),
            e => e,
        };
        // Tag ends by side: false = upper tangle, true = lower tangle.
        let mut link: BTreeMap<(bool, End), (bool, End)> = BTreeMap::new();
        for (&s, &t) in &self.link {
            link.insert((false, s), (false, t));
        }
        for (&s, &t) in &below.link {
            link.insert((true, shift(s)), (true, shift(t)));
        }
        // A glued sink continues as the matching source on the other side.
        let across = |(lower, e): (bool, End)| -> Option<(bool, End)> {
            match (lower, e) {
                (false, End::Boundary(j)) if j >= k => Some((true, End::Boundary(2 * k - 1 - j))),
                (true, End::Boundary(m)) if m < k => Some((false, End::Boundary(2 * k - 1 - m))),
                _ => None,
            }
        };
        let mut out = Tangle {
            k,
            slots: self.slots.iter().chain(&below.slots).cloned().collect(),
            link: BTreeMap::new(),
            free_loops: self.free_loops + below.free_loops,
        };
        let mut used: BTreeSet<(bool, End)> = BTreeSet::new();
        for &start in link.keys() {
            if across_source(start, k) {
                continue;
            }
            let mut cur = link[&start];
            while let Some(next) = across(cur) {
                used.insert(next);
                cur = link[&next];
            }
            out.link.insert(start.1, cur.1);
        }
        for &start in link.keys() {
            if !across_source(start, k) || used.contains(&start) {
                continue;
            }
            out.free_loops += 1;
            let mut cur = start;
            loop {
                used.insert(cur);
                cur = across(link[&cur]).expect("closed glue cycle");
                if cur == start {
                    break;
                }
            }
        }
        out
    }

    /// Stacks a list of tangles from top to bottom.
    pub fn stack(parts: &[Tangle]) -> Tangle {
        let mut iter = parts.iter();
        let first = iter.next().expect("at least one tangle").clone();
        iter.fold(first, |acc, t| acc.compose(t))
    }

    /// Closes the tangle by joining top position m to bottom position m
    /// around the right-hand side.
    pub fn trace(&self) -> PortGraph {
        let k = self.k;
        let mut link = BTreeMap::new();
        let mut used = BTreeSet::new();
        let jump = |e: End| match e {
            End::Boundary(j) => Some(End::Boundary(2 * k - 1 - j)),
            _ => None,
        };
        for (&s, _) in self.link.iter().filter(|(s, _)| matches!(s, End::Port(..))) {
            let mut cur = self.link[&s];
            while let Some(next) = jump(cur) {
                used.insert(next);
                cur = self.link[&next];
            }
            let (End::Port(a, p), End::Port(b, q)) = (s, cur) else { unreachable!() };
            link.insert(4 * a + p, 4 * b + q);
        }
        let mut free_loops = self.free_loops;
        for &s in self.link.keys().filter(|s| matches!(s, End::Boundary(_))) {
            if used.contains(&s) {
                continue;
            }
            free_loops += 1;
            let mut cur = s;
            loop {
                used.insert(cur);
                cur = jump(self.link[&cur]).expect("boundary cycle");
                if cur == s {
                    break;
                }
            }
        }
        PortGraph { ids: self.slots.clone(), link, free_loops }
    }

    /// The closed network Tr(self) with the given slot labels.
    pub fn closed_network<F: Field>(&self, labels: &[Element<F>]) -> LabeledNetwork<F> {
        assert_eq!(labels.len(), self.slots.len(), "one label per slot");
        let boxes = self.slots.iter().cloned().zip(labels.iter().cloned()).collect();
        self.trace().into_network(Shading::Plus, boxes)
    }
}

fn across_source((lower, e): (bool, End), k: usize) -> bool {
    match (lower, e) {
        (false, End::Boundary(j)) => j >= k,
        (true, End::Boundary(m)) => m < k,
        _ => false,
    }
}

impl Tangle {
    /// A tangle from explicit strands; each pair is oriented automatically.
    pub fn from_strands(k: usize, slots: Vec<String>, strands: &[(End, End)]) -> Tangle {
        let mut t = Tangle { k, slots, link: BTreeMap::new(), free_loops: 0 };
        for &(a, b) in strands {
            t.connect(a, b);
        }
        t
    }

    fn dart(&self, e: End) -> usize {
        match e {
            End::Port(b, p) => 4 * b + p,
            End::Boundary(j) => 4 * self.slots.len() + j,
        }
    }

    /// Face orbits of the map whose vertices are the boxes plus one vertex for
    /// the boundary circle. Each face is returned as its list of darts.
    fn face_orbits(&self) -> Vec<Vec<usize>> {
        let g = self.slots.len();
        let darts = 4 * g + 2 * self.k;
        let mut alpha = vec![usize::MAX; darts];
        for (&s, &t) in &self.link {
            let (a, b) = (self.dart(s), self.dart(t));
            alpha[a] = b;
            alpha[b] = a;
        }
        let bd = 2 * self.k;
        // Seen from outside the disc the boundary points run anticlockwise.
        let sigma = |d: usize| {
            if d < 4 * g {
                4 * (d / 4) + (d % 4 + 1) % 4
            } else {
                4 * g + (d - 4 * g + bd - 1) % bd
            }
        };
        let mut seen = vec![false; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = sigma(alpha[d]);
            }
            faces.push(face);
        }
        faces
    }

    fn components(&self) -> usize {
        let g = self.slots.len();
        let vertex = |e: End| match e {
            End::Port(b, _) => b,
            End::Boundary(_) => g,
        };
        let mut parent: Vec<usize> = (0..=g).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (&s, &t) in &self.link {
            let (a, b) = (find(&mut parent, vertex(s)), find(&mut parent, vertex(t)));
            parent[a] = b;
        }
        (0..=g).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Whether the wiring embeds in the disc with the given cyclic orders.
    pub fn is_planar(&self) -> bool {
        let vertices = self.slots.len() + 1;
        let edges = 2 * self.slots.len() + self.k;
        self.face_orbits().len() + vertices == edges + 2 * self.components()
    }

    /// Planar, connected to the boundary, without free loops, and with every
    /// face touching the boundary.
    pub fn is_face_free(&self) -> bool {
        let first_boundary = 4 * self.slots.len();
        self.free_loops == 0
            && self.components() == 1
            && self.is_planar()
            && self.face_orbits().iter().all(|f| f.iter().any(|&d| d >= first_boundary))
    }

    /// All face-free k-tangles with `boxes` slots named `s0, s1, …`, by brute
    /// force over oriented pairings of ends. Intended for small k.
    pub fn enumerate_face_free(k: usize, boxes: usize) -> Vec<Tangle> {
        let slots: Vec<String> = (0..boxes).map(|b| format!("s{b}")).collect();
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for b in 0..boxes {
            sources.extend([End::Port(b, 0), End::Port(b, 2)]);
            sinks.extend([End::Port(b, 1), End::Port(b, 3)]);
        }
        for j in 0..2 * k {
            if j % 2 == 1 {
                sources.push(End::Boundary(j));
            } else {
                sinks.push(End::Boundary(j));
            }
        }
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..sinks.len()).collect();
        permute(&mut perm, 0, &mut |p| {
            let link = sources.iter().zip(p).map(|(&s, &i)| (s, sinks[i])).collect();
            let t = Tangle { k, slots: slots.clone(), link, free_loops: 0 };
            if t.is_face_free() {
                out.push(t);
            }
        });
        out
    }
}

fn permute(p: &mut Vec<usize>, i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        visit(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, visit);
        p.swap(i, j);
    }
}
