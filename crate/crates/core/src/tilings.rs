//! Quadrilateral tilings of a convex 2k-gon, hexagon moves, the flip graph,
//! and the tangle attached to a tiling.
//!
//! Vertices are numbered 1..2k clockwise in the public data; diagonals are
//! stored as ordered pairs (a, b) with a < b.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

use serde::Serialize;
use thiserror::Error;

use crate::hopf::{Element, HopfAlgebra};
use crate::linalg::Matrix;
use crate::pairing::{coordinates, multi_index, Budget, PairingError};
use crate::scalars::Field;
use crate::tangle::{End, Tangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("k = {k} is outside the supported range {min}..={max}")]
    OutOfRange { k: usize, min: usize, max: usize },
    #[error("invalid tiling: {0}")]
    Invalid(String),
}

pub const MAX_ENUMERATION_K: usize = 8;
pub const MAX_TANGLE_K: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Tiling {
    pub k: usize,
    pub diagonals: BTreeSet<(usize, usize)>,
}

/// Whether chords (a,b) and (c,d) of a convex polygon cross in their interiors.
pub fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    let (a, b) = (a.min(b), a.max(b));
    if a == c || a == d || b == c || b == d {
        return false;
    }
    inside(c, a, b) != inside(d, a, b)
}

/// Bounded faces of the subdivision of the 2k-gon by `diagonals`, each as
/// its clockwise list of vertices.
pub fn faces(k: usize, diagonals: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let m = 2 * k;
    let mut nbrs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=m {
        let next = v % m + 1;
        nbrs.entry(v).or_default().push(next);
        nbrs.entry(next).or_default().push(v);
    }
    for &(a, b) in diagonals {
        nbrs.entry(a).or_default().push(b);
        nbrs.entry(b).or_default().push(a);
    }
    let offset = |from: usize, to: usize| (to + m - from) % m;
    let mut directed: Vec<(usize, usize)> = (1..=m).map(|v| (v, v % m + 1)).collect();
    for &(a, b) in diagonals {
        directed.push((a, b));
        directed.push((b, a));
    }
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &directed {
        if used.contains(&start) {
            continue;
        }
        let mut face = Vec::new();
        let (mut u, mut v) = start;
        while used.insert((u, v)) {
            face.push(u);
            // Turn to the neighbour just before u in clockwise order around v.
            let back = offset(v, u);
            let w = *nbrs[&v]
                .iter()
                .filter(|&&w| offset(v, w) < back)
                .max_by_key(|&&w| offset(v, w))
                .expect("convex polygon");
            (u, v) = (v, w);
        }
        out.push(face);
    }
    out
}

impl Tiling {
    pub fn new(k: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Tiling, TilingError> {
        let t = Tiling { k, diagonals: diagonals.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect() };
        t.check()?;
        Ok(t)
    }

    pub fn check(&self) -> Result<(), TilingError> {
        let m = 2 * self.k;
        if self.diagonals.len() + 2 != self.k {
            return Err(TilingError::Invalid(format!("{} diagonals, expected {}", self.diagonals.len(), self.k - 2)));
        }
        for &(a, b) in &self.diagonals {
            if a < 1 || b > m || b - a < 2 || (a == 1 && b == m) {
                return Err(TilingError::Invalid(format!("({a},{b}) is not a diagonal")));
            }
        }
        for &d in &self.diagonals {
            for &e in &self.diagonals {
                if d < e && crosses(d, e) {
                    return Err(TilingError::Invalid(format!("{d:?} crosses {e:?}")));
                }
            }
        }
        let fs = faces(self.k, &self.diagonals);
        if fs.len() != self.k - 1 || fs.iter().any(|f| f.len() != 4) {
            return Err(TilingError::Invalid("faces are not all quadrilaterals".into()));
        }
        Ok(())
    }

    /// The k−1 quadrilaterals, each as sorted vertex list.
    pub fn quads(&self) -> Vec<[usize; 4]> {
        let mut qs: Vec<[usize; 4]> = faces(self.k, &self.diagonals)
            .into_iter()
            .filter(|f| f.len() == 4)
            .map(|f| {
                let mut q = [f[0], f[1], f[2], f[3]];
                q.sort_unstable();
                q
            })
            .collect();
        qs.sort_unstable();
        qs
    }
}

fn tilings_of(poly: &[usize]) -> Vec<BTreeSet<(usize, usize)>> {
    let m = poly.len();
    if m == 2 {
        return vec![BTreeSet::new()];
    }
    let mut out = Vec::new();
    let chord = |i: usize, j: usize| (poly[i].min(poly[j]), poly[i].max(poly[j]));
    // The quadrilateral on the edge (poly[m−1], poly[0]) is poly[0], poly[a], poly[b], poly[m−1].
    for a in (1..m - 2).step_by(2) {
        for b in (a + 1..m - 1).step_by(2) {
            let parts = [&poly[..=a], &poly[a..=b], &poly[b..]];
            let mut partial = vec![BTreeSet::new()];
            for part in parts {
                let subs = tilings_of(part);
                partial = partial
                    .iter()
                    .flat_map(|p| subs.iter().map(move |s| p.union(s).copied().collect::<BTreeSet<_>>()))
                    .collect();
            }
            for mut d in partial {
                for (i, j) in [(0, a), (a, b), (b, m - 1)] {
                    if j - i > 1 {
                        d.insert(chord(i, j));
                    }
                }
                out.push(d);
            }
        }
    }
    out
}

/// All tilings of the 2k-gon, sorted by diagonal set.
pub fn enumerate_tilings(k: usize) -> Result<Vec<Tiling>, TilingError> {
    if !(2..=MAX_ENUMERATION_K).contains(&k) {
        return Err(TilingError::OutOfRange { k, min: 2, max: MAX_ENUMERATION_K });
    }
    let poly: Vec<usize> = (1..=2 * k).collect();
    let mut out: Vec<Tiling> = tilings_of(&poly).into_iter().map(|diagonals| Tiling { k, diagonals }).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Tilings reachable by one hexagon move.
pub fn hexagon_neighbors(t: &Tiling) -> Vec<Tiling> {
    let quads = t.quads();
    let mut out = BTreeSet::new();
    for &d in &t.diagonals {
        let sharing: Vec<&[usize; 4]> = quads.iter().filter(|q| q.contains(&d.0) && q.contains(&d.1)).collect();
        let [q1, q2] = sharing[..] else { continue };
        let hex: BTreeSet<usize> = q1.iter().chain(q2.iter()).copied().collect();
        let hex: Vec<usize> = hex.into_iter().collect();
        for i in 0..3 {
            let p = (hex[i], hex[i + 3]);
            if p != d {
                let mut diagonals = t.diagonals.clone();
                diagonals.remove(&d);
                diagonals.insert(p);
                out.insert(Tiling { k: t.k, diagonals });
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipGraph {
    pub vertices: Vec<Tiling>,
    pub edges: Vec<(usize, usize)>,
}

/// Breadth-first certificate: parent edges of a spanning tree from vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
    pub spanning_tree: Vec<(usize, usize)>,
}

pub fn flip_graph(k: usize) -> Result<FlipGraph, TilingError> {
    let vertices = enumerate_tilings(k)?;
    let index: BTreeMap<&Tiling, usize> = vertices.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut edges = BTreeSet::new();
    for (i, t) in vertices.iter().enumerate() {
        for n in hexagon_neighbors(t) {
            let j = index[&n];
            edges.insert((i.min(j), i.max(j)));
        }
    }
    Ok(FlipGraph { vertices, edges: edges.into_iter().collect() })
}

impl FlipGraph {
    pub fn connectivity(&self) -> Connectivity {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut tree = Vec::new();
        let mut components = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        if components == 1 {
                            tree.push((v, w));
                        }
                        queue.push_back(w);
                    }
                }
            }
        }
        Connectivity { connected: components <= 1, components, spanning_tree: tree }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph flips {\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let label: Vec<String> = t.diagonals.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(s, "  t{i} [label=\"{}\"];", label.join(" "));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  t{a} -- t{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// Brute-force oracle: all (k−2)-subsets of diagonals that are pairwise
/// non-crossing and cut the polygon into quadrilaterals.
pub fn brute_force_tilings(k: usize) -> Vec<Tiling> {
    let m = 2 * k;
    let chords: Vec<(usize, usize)> =
        (1..=m).flat_map(|a| (a + 2..=m).map(move |b| (a, b))).filter(|&(a, b)| !(a == 1 && b == m)).collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        chords: &[(usize, usize)],
        start: usize,
        need: usize,
        pick: &mut Vec<(usize, usize)>,
        k: usize,
        out: &mut Vec<Tiling>,
    ) {
        if pick.len() == need {
            let t = Tiling { k, diagonals: pick.iter().copied().collect() };
            if t.check().is_ok() {
                out.push(t);
            }
            return;
        }
        for i in start..chords.len() {
            if pick.iter().all(|&p| !crosses(p, chords[i])) {
                pick.push(chords[i]);
                rec(chords, i + 1, need, pick, k, out);
                pick.pop();
            }
        }
    }
    rec(&chords, 0, k - 2, &mut pick, k, &mut out);
    out.sort();
    out
}

/// The face-free k-tangle of a tiling. Boundary point j is the polygon edge
/// from vertex j+1 to j+2; each quadrilateral is a box with its * at its
/// least odd-numbered vertex (a white region), and each diagonal is an
/// internal strand.
pub fn tiling_to_tangle(t: &Tiling) -> Result<Tangle, TilingError> {
    if !(2..=MAX_TANGLE_K).contains(&t.k) {
        return Err(TilingError::OutOfRange { k: t.k, min: 2, max: MAX_TANGLE_K });
    }
    t.check()?;
    let m = 2 * t.k;
    let quads = t.quads();
    // Side (a → b) clockwise, 0-based, mapped to the port it becomes.
    let mut sides: BTreeMap<(usize, usize), End> = BTreeMap::new();
    for (b, q) in quads.iter().enumerate() {
        let q0: Vec<usize> = q.iter().map(|v| v - 1).collect();
        let s = (0..4).find(|&i| q0[i].is_multiple_of(2)).expect("quadrilateral has a white corner");
        for port in 0..4 {
            let from = q0[(s + port) % 4];
            let to = q0[(s + port + 1) % 4];
            sides.insert((from, to), End::Port(b, port));
        }
    }
    let mut strands = Vec::new();
    for (&(from, to), &end) in &sides {
        if (from + 1) % m == to {
            strands.push((end, End::Boundary(from)));
        } else if from < to {
            strands.push((end, sides[&(to, from)]));
        }
    }
    let slots = (0..quads.len()).map(|b| format!("s{b}")).collect();
    Ok(Tangle::from_strands(t.k, slots, &strands))
}

/// Rank of the coordinate matrix of {Z_X(e_{i₁}⊗⋯⊗e_{i_{k−1}})} in P_k.
pub fn surjectivity_gram<F: Field>(
    h: &HopfAlgebra<F>,
    skeleton: &Tangle,
    budget: &Budget,
) -> Result<usize, PairingError> {
    let n = h.dim();
    let slots = skeleton.slots.len();
    let rows = n.pow(slots as u32);
    let cols = n.pow((skeleton.k - 1) as u32);
    budget.check_entries(rows * cols)?;
    let m = (0..rows)
        .map(|code| {
            let labels: Vec<Element<F>> = multi_index(code, n, slots).iter().map(|&i| h.basis(i)).collect();
            coordinates(h, skeleton, &labels)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(m).rank())
}

/// Negative control for [`surjectivity_gram`]: a 3-tangle whose second slot
/// is closed on itself, so only one box reaches the boundary.
pub fn degenerate_skeleton() -> Tangle {
    Tangle::from_strands(
        3,
        vec!["s0".into(), "s1".into()],
        &[
            (End::Port(0, 0), End::Boundary(0)),
            (End::Port(0, 1), End::Boundary(1)),
            (End::Port(0, 2), End::Boundary(4)),
            (End::Port(0, 3), End::Boundary(5)),
            (End::Boundary(3), End::Boundary(2)),
            (End::Port(1, 2), End::Port(1, 3)),
            (End::Port(1, 0), End::Port(1, 1)),
        ],
    )
}
