//! Ladder diagrams of SO(n)-type and their faces.
//!
//! A face of the diagram is a pair (isogram, coastline).  Isograms are the
//! subgraphs expressible as unions of positive paths (monotone shortest
//! origin-to-terminal staircases) covering every terminal vertex, subject to
//! a forbidden pattern at diagonal boxes.  A coastline refines an isogram by
//! one horizontal-segment choice per column; it carries the sign data of the
//! corresponding polytope face.

use crate::error::{Error, Result};
use crate::rational::{q_abs, Q};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Unit grid edge.  `H { x, y }` joins `(x, y)` to `(x+1, y)` (a horizontal
/// edge of column strip `x`); `V { x, y }` joins `(x, y)` to `(x, y+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    H { x: i64, y: i64 },
    V { x: i64, y: i64 },
}

impl Edge {
    pub fn endpoints(self) -> ((i64, i64), (i64, i64)) {
        match self {
            Edge::H { x, y } => ((x, y), (x + 1, y)),
            Edge::V { x, y } => ((x, y), (x, y + 1)),
        }
    }
}

/// The pair `(n, lambda)` with its multiplicity structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderSpec {
    pub n: usize,
    pub lambda: Vec<Q>,
    /// End indices (1-based) of the maximal constant runs of
    /// `(lambda_1, ..., lambda_{nu-1}, |lambda_nu|)`; the last entry is nu.
    pub run_ends: Vec<usize>,
    /// Number of nonzero entries of lambda.
    pub n_lambda: usize,
}

impl LadderSpec {
    pub fn new(n: usize, lambda: Vec<Q>) -> Result<Self> {
        let nu = n / 2;
        if n < 2 {
            return Err(Error::InvalidLambda(format!("n must be at least 2, got {n}")));
        }
        if lambda.len() != nu {
            return Err(Error::InvalidLambda(format!(
                "lambda must have floor(n/2) = {nu} entries, got {}",
                lambda.len()
            )));
        }
        // Weyl chamber: lambda_1 >= ... >= lambda_nu >= 0 for odd n,
        // lambda_1 >= ... >= lambda_{nu-1} >= |lambda_nu| for even n.
        let abs_adjusted: Vec<Q> = lambda
            .iter()
            .enumerate()
            .map(|(i, &v)| if n % 2 == 0 && i == nu - 1 { q_abs(v) } else { v })
            .collect();
        for i in 0..nu {
            if n % 2 == 1 && lambda[i].is_negative_strict() {
                return Err(Error::InvalidLambda(format!(
                    "lambda_{} = {} violates lambda_{} >= 0",
                    i + 1,
                    lambda[i],
                    i + 1
                )));
            }
            if i + 1 < nu && abs_adjusted[i] < abs_adjusted[i + 1] {
                return Err(Error::InvalidLambda(format!(
                    "lambda_{} < {} violates lambda_{} >= {}",
                    i + 1,
                    if n % 2 == 0 && i + 2 == nu { "|lambda_nu|" } else { "lambda_next" },
                    i + 1,
                    i + 2
                )));
            }
        }
        let mut run_ends = Vec::new();
        for i in 0..nu {
            if i + 1 == nu || abs_adjusted[i] != abs_adjusted[i + 1] {
                run_ends.push(i + 1);
            }
        }
        let n_lambda = if abs_adjusted[nu - 1].is_zero() {
            if run_ends.len() >= 2 {
                run_ends[run_ends.len() - 2]
            } else {
                0
            }
        } else {
            nu
        };
        Ok(LadderSpec { n, lambda, run_ends, n_lambda })
    }

    pub fn nu(&self) -> usize {
        self.n / 2
    }

    /// Run index (1-based) of column/lambda index `j` (1-based).
    pub fn iota(&self, j: usize) -> usize {
        self.run_ends.iter().position(|&e| j <= e).unwrap() + 1
    }

    /// End index n_i of the run containing lambda_j.
    pub fn run_end(&self, j: usize) -> usize {
        self.run_ends[self.iota(j) - 1]
    }

    /// |lambda_j| as used by fillings; the sign of the last even-n entry
    /// only matters for Pfaffians.
    pub fn lambda_abs(&self, j: usize) -> Q {
        q_abs(self.lambda[j - 1])
    }

    /// Stable fingerprint used to guard cross-diagram face comparisons.
    pub fn key(&self) -> u64 {
        let mut s = format!("n={};l=", self.n);
        for v in &self.lambda {
            s.push_str(&format!("{},", v));
        }
        fnv1a64(s.as_bytes())
    }
}

trait NegStrict {
    fn is_negative_strict(&self) -> bool;
}

impl NegStrict for Q {
    fn is_negative_strict(&self) -> bool {
        use num_traits::Signed;
        self.is_negative()
    }
}

/// The ladder diagram: a staircase-shaped induced grid subgraph.
#[derive(Debug, Clone)]
pub struct LadderDiagram {
    pub spec: LadderSpec,
    /// Top vertex height of column strip `j` (columns are `0..n_lambda`).
    pub heights: Vec<i64>,
    pub vertices: BTreeSet<(i64, i64)>,
    pub edges: BTreeSet<Edge>,
    /// Boxes labelled by their top-right vertex `(i, j)`.
    pub boxes: BTreeSet<(i64, i64)>,
    pub terminals: Vec<(i64, i64)>,
    pub lowest_terminal: Option<(i64, i64)>,
    pub area: usize,
}

impl LadderDiagram {
    pub fn build(spec: &LadderSpec) -> LadderDiagram {
        let n = spec.n as i64;
        let ncols = spec.n_lambda;
        let mut vertices = BTreeSet::new();
        let mut heights = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let h = n - 1 - spec.run_end(j + 1) as i64;
            heights.push(h);
            for a in j as i64..=j as i64 + 1 {
                for b in j as i64..=h {
                    vertices.insert((a, b));
                }
            }
        }
        let mut edges = BTreeSet::new();
        for &(x, y) in &vertices {
            if vertices.contains(&(x + 1, y)) {
                edges.insert(Edge::H { x, y });
            }
            if vertices.contains(&(x, y + 1)) {
                edges.insert(Edge::V { x, y });
            }
        }
        let mut boxes = BTreeSet::new();
        for &(i, j) in &vertices {
            if [(i - 1, j - 1), (i, j - 1), (i - 1, j)].iter().all(|v| vertices.contains(v)) {
                boxes.insert((i, j));
            }
        }
        let max_dist = vertices.iter().map(|&(a, b)| a + b).max().unwrap_or(0);
        let mut terminals: Vec<(i64, i64)> = vertices
            .iter()
            .copied()
            .filter(|&(a, b)| a + b == max_dist && !vertices.is_empty())
            .collect();
        terminals.sort();
        let lowest_terminal = terminals.iter().copied().min_by_key(|&(_, b)| b);
        let area = boxes.len();
        LadderDiagram {
            spec: spec.clone(),
            heights,
            vertices,
            edges,
            boxes,
            terminals,
            lowest_terminal,
            area,
        }
    }

    pub fn ncols(&self) -> usize {
        self.heights.len()
    }

    /// Vertex heights present on the vertical line `x`.
    fn line_range(&self, x: i64) -> Option<(i64, i64)> {
        let ncols = self.ncols() as i64;
        if ncols == 0 || x < 0 || x > ncols {
            return None;
        }
        let col = if x == 0 { 0 } else { (x - 1) as usize };
        Some((if x == 0 { 0 } else { x - 1 }, self.heights[col]))
    }

    fn terminal_top(&self, x: i64) -> Option<i64> {
        let y = self.spec.n as i64 - 1 - x;
        if self.terminals.contains(&(x, y)) {
            Some(y)
        } else {
            None
        }
    }

    pub fn is_diagonal_box(&self, b: (i64, i64)) -> bool {
        b.0 == b.1 && self.boxes.contains(&b)
    }

    /// The four edges of box `(i, j)` as (top, bottom, left, right).
    pub fn box_edges(b: (i64, i64)) -> [Edge; 4] {
        let (i, j) = b;
        [
            Edge::H { x: i - 1, y: j },
            Edge::H { x: i - 1, y: j - 1 },
            Edge::V { x: i - 1, y: j - 1 },
            Edge::V { x: i, y: j - 1 },
        ]
    }
}

/// An isogram: a union of positive paths covering all terminals, stored as
/// its edge set plus per-strip crossing heights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isogram {
    pub edges: BTreeSet<Edge>,
    /// Horizontal crossing heights per column strip.
    pub strip_heights: Vec<BTreeSet<i64>>,
    /// `y(beta_j)`: the lowest crossing per strip (the base path).
    pub base: Vec<i64>,
    /// Number of bounded regions; equals the dimension of any face over it.
    pub cycles: usize,
}

impl Isogram {
    fn from_parts(strip_heights: Vec<BTreeSet<i64>>, vlines: Vec<BTreeSet<i64>>) -> Isogram {
        let mut edges = BTreeSet::new();
        for (j, hs) in strip_heights.iter().enumerate() {
            for &y in hs {
                edges.insert(Edge::H { x: j as i64, y });
            }
        }
        for (x, ys) in vlines.iter().enumerate() {
            for &y in ys {
                edges.insert(Edge::V { x: x as i64, y });
            }
        }
        let base = strip_heights.iter().map(|hs| *hs.iter().next().unwrap()).collect();
        let cycles = cycle_count(&edges);
        Isogram { edges, strip_heights, base, cycles }
    }

    pub fn contains(&self, other: &Isogram) -> bool {
        other.edges.is_subset(&self.edges)
    }
}

fn cycle_count(edges: &BTreeSet<Edge>) -> usize {
    if edges.is_empty() {
        return 0;
    }
    let mut verts = BTreeMap::new();
    let id = |verts: &mut BTreeMap<(i64, i64), usize>, v: (i64, i64)| {
        let next = verts.len();
        *verts.entry(v).or_insert(next)
    };
    let mut pairs = Vec::new();
    for &e in edges {
        let (a, b) = e.endpoints();
        let ia = id(&mut verts, a);
        let ib = id(&mut verts, b);
        pairs.push((ia, ib));
    }
    let mut dsu: Vec<usize> = (0..verts.len()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for (a, b) in &pairs {
        let (ra, rb) = (find(&mut dsu, *a), find(&mut dsu, *b));
        if ra != rb {
            dsu[ra] = rb;
        }
    }
    let comps: BTreeSet<usize> = (0..verts.len()).map(|v| find(&mut dsu, v)).collect();
    edges.len() + comps.len() - verts.len()
}

/// Enumerates all isograms of the diagram by a column sweep: choose the
/// horizontal crossings per strip, then every locally consistent vertical
/// edge set per line.  Local consistency (each entering height can exit,
/// each crossing is entered, every vertical edge lies on a through-path,
/// terminals are covered) is equivalent to the union-of-positive-paths
/// definition, so the sweep is complete and duplicate-free by construction.
pub fn isograms(diagram: &LadderDiagram) -> Vec<Isogram> {
    let ncols = diagram.ncols();
    if ncols == 0 {
        return vec![Isogram {
            edges: BTreeSet::new(),
            strip_heights: Vec::new(),
            base: Vec::new(),
            cycles: 0,
        }];
    }
    let mut out = Vec::new();
    let mut strips: Vec<BTreeSet<i64>> = Vec::new();
    let mut vlines: Vec<BTreeSet<i64>> = Vec::new();
    sweep(diagram, 0, &mut strips, &mut vlines, &mut out);
    out
}

fn sweep(
    diagram: &LadderDiagram,
    x: usize,
    strips: &mut Vec<BTreeSet<i64>>,
    vlines: &mut Vec<BTreeSet<i64>>,
    out: &mut Vec<Isogram>,
) {
    let ncols = diagram.ncols();
    let entering: BTreeSet<i64> = if x == 0 {
        [0].into_iter().collect()
    } else {
        strips[x - 1].clone()
    };
    let top = diagram.terminal_top(x as i64);
    if x == ncols {
        for v in valid_vlines(diagram, x as i64, &entering, &BTreeSet::new(), top) {
            vlines.push(v);
            if diagonal_ok(diagram, x as i64, strips, vlines) {
                out.push(Isogram::from_parts(strips.clone(), vlines.clone()));
            }
            vlines.pop();
        }
        return;
    }
    let lo = x as i64;
    let hi = diagram.heights[x];
    let heights: Vec<i64> = (lo..=hi).collect();
    for mask in 1u32..(1 << heights.len()) {
        let chosen: BTreeSet<i64> = heights
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &h)| h)
            .collect();
        for v in valid_vlines(diagram, x as i64, &entering, &chosen, top) {
            strips.push(chosen.clone());
            vlines.push(v);
            if diagonal_ok(diagram, x as i64, strips, vlines) {
                sweep(diagram, x + 1, strips, vlines, out);
            }
            vlines.pop();
            strips.pop();
        }
    }
}

/// The forbidden-pattern rule at the diagonal box `(x, x)`: once the top and
/// left edges are present, the bottom and right edges must be too.
fn diagonal_ok(
    diagram: &LadderDiagram,
    x: i64,
    strips: &[BTreeSet<i64>],
    vlines: &[BTreeSet<i64>],
) -> bool {
    if x < 1 || !diagram.boxes.contains(&(x, x)) {
        return true;
    }
    let j = (x - 1) as usize;
    let top = strips[j].contains(&x);
    let left = vlines[j].contains(&(x - 1));
    if top && left {
        let bottom = strips[j].contains(&(x - 1));
        let right = vlines[x as usize].contains(&(x - 1));
        bottom && right
    } else {
        true
    }
}

/// All vertical edge sets on line `x` compatible with entering heights `e`
/// and exits `xs` (strip-x crossings plus the terminal top, if any).
fn valid_vlines(
    diagram: &LadderDiagram,
    x: i64,
    entering: &BTreeSet<i64>,
    crossings: &BTreeSet<i64>,
    top: Option<i64>,
) -> Vec<BTreeSet<i64>> {
    let (lo, hi) = match diagram.line_range(x) {
        Some(r) => r,
        None => return vec![BTreeSet::new()],
    };
    let mut exits = crossings.clone();
    if let Some(t) = top {
        exits.insert(t);
    }
    let positions: Vec<i64> = (lo..hi).collect();
    let mut res = Vec::new();
    'mask: for mask in 0u32..(1 << positions.len()) {
        let v: BTreeSet<i64> = positions
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &y)| y)
            .collect();
        let climb = |a: i64, b: i64| (a..b).all(|y| v.contains(&y));
        // every entering path can exit
        for &h in entering {
            if !exits.iter().any(|&b| b == h || (b > h && climb(h, b))) {
                continue 'mask;
            }
        }
        // every crossing is entered from the left or from below
        for &h in crossings {
            if !entering.iter().any(|&a| a == h || (a < h && climb(a, h))) {
                continue 'mask;
            }
        }
        // every vertical edge lies on a through-path
        for &y in &v {
            let ok = entering.iter().any(|&a| {
                a <= y
                    && exits.iter().any(|&b| b >= y + 1 && climb(a, b))
            });
            if !ok {
                continue 'mask;
            }
        }
        // terminal coverage
        if let Some(t) = top {
            if !(entering.contains(&t) || entering.iter().any(|&a| a < t && climb(a, t))) {
                continue 'mask;
            }
        }
        res.push(v);
    }
    res
}

/// Per-column coastline choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoastChoice {
    /// Forced single segment at the base height (base above row j+1).
    Forced(i64),
    /// Both horizontal edges of the diagonal box (fully contained in the
    /// isogram).
    Both,
    /// Chosen segment at height j.
    Low,
    /// Chosen segment at height j+1.
    High,
}

impl CoastChoice {
    pub fn heights(self, j: i64) -> Vec<i64> {
        match self {
            CoastChoice::Forced(h) => vec![h],
            CoastChoice::Both => vec![j, j + 1],
            CoastChoice::Low => vec![j],
            CoastChoice::High => vec![j + 1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coastline {
    pub choices: Vec<CoastChoice>,
}

impl Coastline {
    pub fn heights(&self, j: usize) -> Vec<i64> {
        self.choices[j].heights(j as i64)
    }

    /// Minimum chosen height per column (the lowest path of the coastline).
    pub fn low_profile(&self) -> Vec<i64> {
        self.choices
            .iter()
            .enumerate()
            .map(|(j, c)| *c.heights(j as i64).iter().min().unwrap())
            .collect()
    }

    pub fn high_profile(&self) -> Vec<i64> {
        self.choices
            .iter()
            .enumerate()
            .map(|(j, c)| *c.heights(j as i64).iter().max().unwrap())
            .collect()
    }
}

/// Enumerates the coastlines of an isogram: per column the rule is forced
/// (base above row j+1), forced-double (full diagonal box), or a two-way
/// choice; a choice vector is kept only when every chosen segment is
/// realized by a monotone chain from the origin.
pub fn coastlines(diagram: &LadderDiagram, iso: &Isogram) -> Vec<Coastline> {
    let ncols = diagram.ncols();
    let mut options: Vec<Vec<CoastChoice>> = Vec::with_capacity(ncols);
    for j in 0..ncols {
        let jj = j as i64;
        let y_base = iso.base[j];
        if y_base > jj + 1 {
            options.push(vec![CoastChoice::Forced(y_base)]);
        } else if diagram.boxes.contains(&(jj + 1, jj + 1))
            && LadderDiagram::box_edges((jj + 1, jj + 1))
                .iter()
                .all(|e| iso.edges.contains(e))
        {
            options.push(vec![CoastChoice::Both]);
        } else {
            let mut opts = vec![CoastChoice::Low];
            if jj + 1 <= diagram.heights[j] {
                opts.push(CoastChoice::High);
            }
            options.push(opts);
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(ncols);
    pick(&options, 0, &mut cur, &mut out);
    out.retain(|c| realizable(c));
    out
}

fn pick(
    options: &[Vec<CoastChoice>],
    j: usize,
    cur: &mut Vec<CoastChoice>,
    out: &mut Vec<Coastline>,
) {
    if j == options.len() {
        out.push(Coastline { choices: cur.clone() });
        return;
    }
    for &o in &options[j] {
        cur.push(o);
        pick(options, j + 1, cur, out);
        cur.pop();
    }
}

/// Left-to-right sweep: every chosen height must admit a monotone chain of
/// chosen heights leading to it.
fn realizable(c: &Coastline) -> bool {
    let mut prev_min = 0i64;
    for (j, choice) in c.choices.iter().enumerate() {
        let hs = choice.heights(j as i64);
        if hs.iter().any(|&h| h < prev_min) {
            return false;
        }
        prev_min = *hs.iter().min().unwrap();
    }
    true
}

#[derive(Debug, Clone)]
pub struct DiagramFace {
    pub isogram: Arc<Isogram>,
    pub coastline: Coastline,
    pub dim: usize,
    pub id: String,
    pub diagram_key: u64,
}

/// The face poset of a diagram: all (isogram, coastline) pairs ordered by
/// isogram containment plus coastline containment on low-base columns.
#[derive(Debug, Clone)]
pub struct FacePoset {
    pub faces: Vec<DiagramFace>,
    pub diagram_key: u64,
}

pub fn face_poset(diagram: &LadderDiagram) -> FacePoset {
    let key = diagram.spec.key();
    let mut faces = Vec::new();
    for iso in isograms(diagram) {
        let iso = Arc::new(iso);
        for coast in coastlines(diagram, &iso) {
            let id = face_id(&iso, &coast);
            faces.push(DiagramFace {
                isogram: iso.clone(),
                coastline: coast,
                dim: iso.cycles,
                id,
                diagram_key: key,
            });
        }
    }
    faces.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
    FacePoset { faces, diagram_key: key }
}

impl FacePoset {
    pub fn f_vector(&self) -> Vec<usize> {
        let maxd = self.faces.iter().map(|f| f.dim).max().unwrap_or(0);
        let mut fv = vec![0usize; maxd + 1];
        for f in &self.faces {
            fv[f.dim] += 1;
        }
        fv
    }

    pub fn top_index(&self) -> usize {
        let maxd = self.faces.iter().map(|f| f.dim).max().unwrap_or(0);
        self.faces.iter().position(|f| f.dim == maxd).unwrap()
    }
}

/// Partial order on faces of one diagram.
pub fn face_leq(f1: &DiagramFace, f2: &DiagramFace) -> Result<bool> {
    if f1.diagram_key != f2.diagram_key {
        return Err(Error::DiagramMismatch);
    }
    if !f2.isogram.contains(&f1.isogram) {
        return Ok(false);
    }
    for j in 0..f1.coastline.choices.len() {
        if f1.isogram.base[j] <= j as i64 + 1 {
            let h1: BTreeSet<i64> = f1.coastline.heights(j).into_iter().collect();
            let h2: BTreeSet<i64> = f2.coastline.heights(j).into_iter().collect();
            if !h1.is_subset(&h2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn face_id(iso: &Isogram, coast: &Coastline) -> String {
    let mut s = String::from("i:");
    for e in &iso.edges {
        match e {
            Edge::H { x, y } => s.push_str(&format!("h{x},{y};")),
            Edge::V { x, y } => s.push_str(&format!("v{x},{y};")),
        }
    }
    s.push_str("c:");
    for (j, c) in coast.choices.iter().enumerate() {
        match c {
            CoastChoice::Forced(h) => s.push_str(&format!("f{j},{h};")),
            CoastChoice::Both => s.push_str(&format!("b{j};")),
            CoastChoice::Low => s.push_str(&format!("l{j};")),
            CoastChoice::High => s.push_str(&format!("u{j};")),
        }
    }
    format!("{:016x}", fnv1a64(s.as_bytes()))
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn spec(n: usize, l: &[i128]) -> LadderSpec {
        LadderSpec::new(n, l.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn ladder_5_30_single_column() {
        let d = LadderDiagram::build(&spec(5, &[3, 0]));
        let boxes: Vec<_> = d.boxes.iter().copied().collect();
        assert_eq!(boxes, vec![(1, 1), (1, 2), (1, 3)]);
        assert_eq!(d.area, 3);
        assert_eq!(d.terminals, vec![(1, 3)]);
        assert_eq!(d.lowest_terminal, Some((1, 3)));
    }

    #[test]
    fn ladder_2_0_empty() {
        let d = LadderDiagram::build(&spec(2, &[0]));
        assert!(d.boxes.is_empty());
        assert_eq!(d.area, 0);
        assert_eq!(d.ncols(), 0);
    }

    #[test]
    fn ladder_7_321_columns() {
        // column heights 5, 3, 1; area 9 = (dim SO(7) - dim T^3) / 2
        let d = LadderDiagram::build(&spec(7, &[3, 2, 1]));
        let col = |i: i64| d.boxes.iter().filter(|b| b.0 == i).count();
        assert_eq!((col(1), col(2), col(3)), (5, 3, 1));
        assert_eq!(d.area, 9);
        assert_eq!((21 - 3) / 2, 9);
        assert_eq!(d.terminals, vec![(1, 5), (2, 4), (3, 3)]);
        assert_eq!(d.lowest_terminal, Some((3, 3)));
    }

    #[test]
    fn ladder_8_repeats_and_zero() {
        let d = LadderDiagram::build(&spec(8, &[4, 4, 2, 0]));
        assert_eq!(d.area, 11);
        assert_eq!(d.ncols(), 3);
        let d2 = LadderDiagram::build(&spec(8, &[5, 3, 3, 1]));
        assert_eq!(d2.area, 11);
        assert_eq!(d2.ncols(), 4);
        assert_eq!(d2.heights, vec![6, 4, 4, 3]);
    }

    #[test]
    fn lambda_validation() {
        assert!(LadderSpec::new(5, vec![q(1), q(2)]).is_err());
        assert!(LadderSpec::new(5, vec![q(2), q(-1)]).is_err());
        assert!(LadderSpec::new(4, vec![q(2), q(-1)]).is_ok());
        assert!(LadderSpec::new(4, vec![q(1), q(-2)]).is_err());
        assert!(LadderSpec::new(6, vec![q(1)]).is_err());
    }

    #[test]
    fn isograms_5_30() {
        let d = LadderDiagram::build(&spec(5, &[3, 0]));
        let isos = isograms(&d);
        // nonempty subsets of {0,1,2,3} minus the four containing 1 but not 0
        assert_eq!(isos.len(), 11);
        for iso in &isos {
            let h = &iso.strip_heights[0];
            assert!(!(h.contains(&1) && !h.contains(&0)));
        }
    }

    #[test]
    fn faces_5_30_f_vector() {
        let d = LadderDiagram::build(&spec(5, &[3, 0]));
        let poset = face_poset(&d);
        assert_eq!(poset.faces.len(), 15);
        assert_eq!(poset.f_vector(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn faces_trivial_diagram() {
        let d = LadderDiagram::build(&spec(2, &[0]));
        let poset = face_poset(&d);
        assert_eq!(poset.faces.len(), 1);
        assert_eq!(poset.faces[0].dim, 0);
    }

    #[test]
    fn forced_coastline_is_unique() {
        let d = LadderDiagram::build(&spec(5, &[3, 0]));
        for iso in isograms(&d) {
            let cs = coastlines(&d, &iso);
            if iso.base[0] > 1 {
                assert_eq!(cs.len(), 1, "rule-1 columns admit exactly one coastline");
            }
            assert!(!cs.is_empty());
        }
    }

    #[test]
    fn order_reflexive_and_graded() {
        let d = LadderDiagram::build(&spec(5, &[3, 0]));
        let poset = face_poset(&d);
        for f in &poset.faces {
            assert!(face_leq(f, f).unwrap());
        }
        for f1 in &poset.faces {
            for f2 in &poset.faces {
                if f1.id != f2.id && face_leq(f1, f2).unwrap() {
                    assert!(f1.dim < f2.dim, "grading violated");
                }
            }
        }
        // unique top dominating everything
        let top = &poset.faces[poset.top_index()];
        assert_eq!(top.dim, d.area);
        assert_eq!(poset.faces.iter().filter(|f| f.dim == d.area).count(), 1);
        for f in &poset.faces {
            assert!(face_leq(f, top).unwrap());
        }
    }

    #[test]
    fn mismatched_diagrams_error() {
        let p1 = face_poset(&LadderDiagram::build(&spec(5, &[3, 0])));
        let p2 = face_poset(&LadderDiagram::build(&spec(4, &[2, 1])));
        assert!(face_leq(&p1.faces[0], &p2.faces[0]).is_err());
    }
}
