//! Exact half-space model of the Gelfand-Cetlin polytope and a brute-force
//! face-lattice oracle.
//!
//! The ambient coordinates are all `u_{a,b}` with `1 <= a <= b` and
//! `a + b <= n - 1`; boundary symbols `u_{a, n-a} = lambda_a` enter the
//! system as constants.  Repeated or zero lambda entries pin some ambient
//! coordinates, so the polytope need not be full-dimensional; the lattice
//! enumeration works with affine dimensions throughout.

use crate::error::{Error, Result};
use crate::ladder::{CoastChoice, DiagramFace, FacePoset, LadderDiagram, LadderSpec};
use crate::rational::{q_abs, Q};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap};

pub const DEFAULT_ORACLE_CAP: usize = 10;

/// A symbol of the triangular coordinate array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    Var(usize),
    Const(Q),
}

/// One inequality `coeffs . u >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ineq {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct HPolytope {
    pub spec: LadderSpec,
    /// Ambient variables: boxes `(a, b)` ordered by column then top-down.
    pub vars: Vec<(i64, i64)>,
    pub rows: Vec<Ineq>,
}

impl HPolytope {
    pub fn var_index(&self, b: (i64, i64)) -> Option<usize> {
        self.vars.iter().position(|&v| v == b)
    }

    /// Resolves the symbol `u_{a,b}`: an ambient variable, a boundary
    /// constant, or nothing.
    pub fn symbol(&self, a: i64, b: i64) -> Option<Sym> {
        let n = self.spec.n as i64;
        if a < 1 || a > b || a + b > n {
            return None;
        }
        if a + b == n {
            Some(Sym::Const(self.spec.lambda[(a - 1) as usize]))
        } else {
            self.var_index((a, b)).map(Sym::Var)
        }
    }

    pub fn eval_row(&self, row: &Ineq, u: &[Q]) -> Q {
        let mut acc = -row.rhs;
        for (c, v) in row.coeffs.iter().zip(u) {
            acc += *c * *v;
        }
        acc
    }

    /// Plain-text export: one inequality per line, coefficients then the
    /// constant, space-separated.
    pub fn export_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            for c in &row.coeffs {
                s.push_str(&format!("{} ", c));
            }
            s.push_str(&format!("{}\n", row.rhs));
        }
        s
    }
}

/// Ambient variable order: column `a` ascending, height `b` descending.
pub fn ambient_vars(spec: &LadderSpec) -> Vec<(i64, i64)> {
    let n = spec.n as i64;
    let mut vars = Vec::new();
    let mut a = 1i64;
    while 2 * a <= n - 1 {
        let mut col: Vec<(i64, i64)> = (a..=(n - 1 - a)).map(|b| (a, b)).collect();
        col.reverse();
        vars.extend(col);
        a += 1;
    }
    vars
}

pub fn build_hrep(spec: &LadderSpec) -> HPolytope {
    let n = spec.n as i64;
    let vars = ambient_vars(spec);
    let index: BTreeMap<(i64, i64), usize> =
        vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let sym = |a: i64, b: i64| -> Option<Sym> {
        if a < 1 || a > b || a + b > n {
            return None;
        }
        if a + b == n {
            Some(Sym::Const(spec.lambda[(a - 1) as usize]))
        } else {
            index.get(&(a, b)).copied().map(Sym::Var)
        }
    };
    let mut rows: Vec<Ineq> = Vec::new();
    let mut push = |hi: Sym, lo: Sym, negate_lo: bool, label: String| {
        // hi - (+-)lo >= 0
        let mut coeffs = vec![Q::zero(); vars.len()];
        let mut rhs = Q::zero();
        match hi {
            Sym::Var(i) => coeffs[i] += Q::from_integer(1),
            Sym::Const(c) => rhs -= c,
        }
        let sgn = if negate_lo { Q::from_integer(1) } else { Q::from_integer(-1) };
        match lo {
            Sym::Var(i) => coeffs[i] += sgn,
            Sym::Const(c) => rhs -= sgn * c,
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return;
        }
        let row = Ineq { coeffs, rhs, label };
        if !rows.contains(&row) {
            rows.push(row);
        }
    };
    for i in 1..=n {
        for j in i..=n {
            if i + j < 2 || i + j > n {
                continue;
            }
            if i < j {
                if let (Some(hi), Some(lo)) = (sym(i, j + 1), sym(i, j)) {
                    push(hi, lo, false, format!("u[{i},{}] >= u[{i},{j}]", j + 1));
                }
            } else {
                if let (Some(hi), Some(lo)) = (sym(i, i + 1), sym(i, i)) {
                    push(hi, lo, false, format!("u[{i},{}] >= u[{i},{i}]", i + 1));
                    push(hi, lo, true, format!("u[{i},{}] >= -u[{i},{i}]", i + 1));
                }
            }
            if i + 1 < j {
                if let (Some(hi), Some(lo)) = (sym(i, j), sym(i + 1, j)) {
                    push(hi, lo, false, format!("u[{i},{j}] >= u[{},{j}]", i + 1));
                }
            } else if i + 1 == j {
                if let (Some(hi), Some(lo)) = (sym(i, j), sym(j, j)) {
                    push(hi, lo, false, format!("u[{i},{j}] >= u[{j},{j}]"));
                    push(hi, lo, true, format!("u[{i},{j}] >= -u[{j},{j}]"));
                }
            }
        }
    }
    HPolytope { spec: spec.clone(), vars, rows }
}

/// A point of the polytope in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCPoint {
    pub values: BTreeMap<(i64, i64), Q>,
}

impl GCPoint {
    pub fn from_ambient(p: &HPolytope, coords: &[Q]) -> Result<GCPoint> {
        if coords.len() != p.vars.len() {
            return Err(Error::Inconsistent(format!(
                "expected {} coordinates, got {}",
                p.vars.len(),
                coords.len()
            )));
        }
        Ok(GCPoint {
            values: p.vars.iter().copied().zip(coords.iter().copied()).collect(),
        })
    }

    /// Builds an ambient point from values on the diagram boxes only; the
    /// remaining ambient boxes are pinned at their forced value `lambda_a`.
    pub fn from_diagram(
        p: &HPolytope,
        diagram: &LadderDiagram,
        coords: &[Q],
    ) -> Result<GCPoint> {
        let dboxes: Vec<(i64, i64)> =
            p.vars.iter().copied().filter(|b| diagram.boxes.contains(b)).collect();
        if coords.len() != dboxes.len() {
            return Err(Error::Inconsistent(format!(
                "expected {} diagram coordinates, got {}",
                dboxes.len(),
                coords.len()
            )));
        }
        let mut values: BTreeMap<(i64, i64), Q> =
            dboxes.into_iter().zip(coords.iter().copied()).collect();
        for &(a, b) in &p.vars {
            values
                .entry((a, b))
                .or_insert_with(|| p.spec.lambda[(a - 1) as usize]);
        }
        Ok(GCPoint { values })
    }

    pub fn ambient_vec(&self, p: &HPolytope) -> Vec<Q> {
        p.vars.iter().map(|b| self.values[b]).collect()
    }

    /// Value of the symbol `u_{a,b}`, boundary constants included.
    pub fn symbol_value(&self, spec: &LadderSpec, a: i64, b: i64) -> Q {
        if a + b == spec.n as i64 {
            spec.lambda[(a - 1) as usize]
        } else {
            self.values[&(a, b)]
        }
    }
}

/// Checks containment; returns the first violated inequality label.
pub fn containment(p: &HPolytope, u: &[Q]) -> Result<()> {
    use num_traits::Signed;
    for row in &p.rows {
        if p.eval_row(row, u).is_negative() {
            return Err(Error::OutsidePolytope(row.label.clone()));
        }
    }
    Ok(())
}

pub fn containment_f64(p: &HPolytope, u: &BTreeMap<(i64, i64), f64>, tol: f64) -> Result<()> {
    use crate::rational::q_to_f64;
    for row in &p.rows {
        let mut acc = -q_to_f64(row.rhs);
        for (c, var) in row.coeffs.iter().zip(&p.vars) {
            acc += q_to_f64(*c) * u[var];
        }
        if acc < -tol {
            return Err(Error::OutsidePolytope(row.label.clone()));
        }
    }
    Ok(())
}

/// Sorted vertex-index set of a lattice face.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Clone)]
pub struct LatticeFace {
    pub vertices: VertexSet,
    pub active: Vec<usize>,
    pub dim: usize,
    pub sample: Vec<Q>,
}

#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub vertex_coords: Vec<Vec<Q>>,
    pub faces: Vec<LatticeFace>,
    pub top: usize,
}

impl FaceLattice {
    pub fn f_vector(&self) -> Vec<usize> {
        let maxd = self.faces.iter().map(|f| f.dim).max().unwrap_or(0);
        let mut fv = vec![0usize; maxd + 1];
        for f in &self.faces {
            fv[f.dim] += 1;
        }
        fv
    }

    pub fn face_by_vertices(&self, vs: &VertexSet) -> Option<usize> {
        self.faces.iter().position(|f| &f.vertices == vs)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        let (fa, fb) = (&self.faces[a], &self.faces[b]);
        fa.vertices.iter().all(|v| fb.vertices.binary_search(v).is_ok())
    }
}

/// Exact vertex enumeration over all maximal-rank subsets of inequalities,
/// followed by an active-set closure sweep for the faces.  Intended for
/// desk-scale ambient dimensions; `cap` guards the combinatorial blowup.
pub fn enumerate_lattice(p: &HPolytope, cap: usize) -> Result<FaceLattice> {
    let d = p.vars.len();
    if d > cap {
        return Err(Error::CapacityExceeded { dim: d, cap });
    }
    let vertices = enumerate_vertices(p);
    if vertices.is_empty() {
        return Err(Error::Inconsistent("polytope is empty".into()));
    }
    // tight rows per vertex
    let tight: Vec<BTreeSet<usize>> = vertices
        .iter()
        .map(|v| {
            p.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| p.eval_row(r, v).is_zero())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let all: VertexSet = (0..vertices.len()).collect();
    let mut faces: Vec<LatticeFace> = Vec::new();
    let mut seen: HashMap<VertexSet, usize> = HashMap::new();
    let mut queue: Vec<VertexSet> = vec![all.clone()];
    seen.insert(all, 0);
    faces.push(make_face(p, &vertices, &tight, (0..vertices.len()).collect()));
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        let cur_idx = seen[&cur];
        let active = faces[cur_idx].active.clone();
        for r in 0..p.rows.len() {
            if active.contains(&r) {
                continue;
            }
            let sub: VertexSet =
                cur.iter().copied().filter(|&v| tight[v].contains(&r)).collect();
            if sub.is_empty() || sub == cur {
                continue;
            }
            if !seen.contains_key(&sub) {
                seen.insert(sub.clone(), faces.len());
                faces.push(make_face(p, &vertices, &tight, sub.clone()));
                queue.push(sub);
            }
        }
    }
    faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
    let top = faces
        .iter()
        .position(|f| f.vertices.len() == vertices.len())
        .expect("top face present");
    Ok(FaceLattice { vertex_coords: vertices, faces, top })
}

fn make_face(
    p: &HPolytope,
    vertices: &[Vec<Q>],
    tight: &[BTreeSet<usize>],
    vs: VertexSet,
) -> LatticeFace {
    let mut active: Option<BTreeSet<usize>> = None;
    for &v in &vs {
        active = Some(match active {
            None => tight[v].clone(),
            Some(a) => a.intersection(&tight[v]).copied().collect(),
        });
    }
    let active: Vec<usize> = active.unwrap_or_default().into_iter().collect();
    let dim = affine_dim(vertices, &vs);
    let k = Q::from_integer(vs.len() as i128);
    let mut sample = vec![Q::zero(); p.vars.len()];
    for &v in &vs {
        for (s, c) in sample.iter_mut().zip(&vertices[v]) {
            *s += *c;
        }
    }
    for s in sample.iter_mut() {
        *s /= k;
    }
    LatticeFace { vertices: vs, active, dim, sample }
}

fn affine_dim(vertices: &[Vec<Q>], vs: &VertexSet) -> usize {
    if vs.len() <= 1 {
        return 0;
    }
    let base = &vertices[vs[0]];
    let rows: Vec<Vec<Q>> = vs[1..]
        .iter()
        .map(|&v| vertices[v].iter().zip(base).map(|(a, b)| *a - *b).collect())
        .collect();
    rank(rows)
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = rows[r][c];
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] / inv;
                for j in c..cols {
                    let sub = rows[r][j] * f;
                    rows[i][j] -= sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// All basic feasible points: for each independent d-subset of rows solve
/// the equality system and keep feasible unique solutions.
fn enumerate_vertices(p: &HPolytope) -> Vec<Vec<Q>> {
    let d = p.vars.len();
    if d == 0 {
        return vec![vec![]];
    }
    // rows as (coeffs, rhs)
    let rows: Vec<(Vec<Q>, Q)> =
        p.rows.iter().map(|r| (r.coeffs.clone(), r.rhs)).collect();
    let mut found: BTreeSet<Vec<Q>> = BTreeSet::new();
    // echelon: list of (pivot_col, reduced_row, reduced_rhs)
    let mut echelon: Vec<(usize, Vec<Q>, Q)> = Vec::new();
    fn reduce(row: &mut Vec<Q>, rhs: &mut Q, echelon: &[(usize, Vec<Q>, Q)]) {
        for (pc, er, erhs) in echelon {
            let f = row[*pc];
            if !f.is_zero() {
                for j in 0..row.len() {
                    let sub = er[j] * f;
                    row[j] -= sub;
                }
                *rhs -= *erhs * f;
            }
        }
    }
    fn rec(
        p: &HPolytope,
        rows: &[(Vec<Q>, Q)],
        start: usize,
        echelon: &mut Vec<(usize, Vec<Q>, Q)>,
        found: &mut BTreeSet<Vec<Q>>,
    ) {
        let d = p.vars.len();
        if echelon.len() == d {
            // back-substitute: echelon rows are normalized with distinct pivots
            let mut sol = vec![Q::zero(); d];
            // solve by Gaussian elimination over the echelon set
            let mut mat: Vec<(usize, Vec<Q>, Q)> = echelon.clone();
            mat.sort_by_key(|(c, _, _)| *c);
            for k in (0..d).rev() {
                let (pc, row, rhs) = &mat[k];
                let mut v = *rhs;
                for j in pc + 1..d {
                    v -= row[j] * sol[j];
                }
                sol[*pc] = v;
            }
            if crate::polytope::containment(p, &sol).is_ok() {
                found.insert(sol);
            }
            return;
        }
        if rows.len() - start < d - echelon.len() {
            return;
        }
        for i in start..rows.len() {
            let (mut row, mut rhs) = rows[i].clone();
            reduce(&mut row, &mut rhs, echelon);
            if let Some(pc) = row.iter().position(|c| !c.is_zero()) {
                let inv = row[pc];
                for c in row.iter_mut() {
                    *c /= inv;
                }
                rhs /= inv;
                echelon.push((pc, row, rhs));
                rec(p, rows, i + 1, echelon, found);
                echelon.pop();
            }
        }
    }
    rec(p, &rows, 0, &mut echelon, &mut found);
    found.into_iter().collect()
}

/// The support of a diagram face: equality relations between neighbouring
/// symbols (absolute values on the diagonal) plus sign constraints coming
/// from the coastline.
#[derive(Debug, Clone, Default)]
pub struct FaceSupport {
    /// Pairs of symbols `(a, b)` with `v_a = v_b`, `v = |.|` on diagonals.
    pub equalities: Vec<((i64, i64), (i64, i64))>,
    pub nonneg: Vec<(i64, i64)>,
    pub nonpos: Vec<(i64, i64)>,
}

pub fn face_support(diagram: &LadderDiagram, face: &DiagramFace) -> FaceSupport {
    use crate::ladder::Edge;
    let mut sup = FaceSupport::default();
    let iso = &face.isogram;
    for &(i, j) in &diagram.boxes {
        let top = Edge::H { x: i - 1, y: j };
        if !iso.edges.contains(&top) {
            sup.equalities.push(((i, j), (i, j + 1)));
        }
        if i < j {
            let right = Edge::V { x: i, y: j - 1 };
            if !iso.edges.contains(&right) {
                sup.equalities.push(((i, j), (i + 1, j)));
            }
        }
    }
    let low = face.coastline.low_profile();
    let high = face.coastline.high_profile();
    for &(i, j) in &diagram.boxes {
        let strip = (i - 1) as usize;
        if j - 1 >= high[strip] {
            sup.nonneg.push((i, j));
        }
        if j <= low[strip] {
            sup.nonpos.push((i, j));
        }
    }
    sup
}

/// Evaluates the support at an exact ambient point.
pub fn support_holds(spec: &LadderSpec, sup: &FaceSupport, point: &GCPoint) -> bool {
    use num_traits::Signed;
    let vval = |(a, b): (i64, i64)| {
        let v = point.symbol_value(spec, a, b);
        if a == b {
            q_abs(v)
        } else {
            v
        }
    };
    sup.equalities.iter().all(|&(x, y)| vval(x) == vval(y))
        && sup.nonneg.iter().all(|&b| !point.symbol_value(spec, b.0, b.1).is_negative())
        && sup.nonpos.iter().all(|&b| !point.symbol_value(spec, b.0, b.1).is_positive())
}

/// Returns the lattice face whose relative interior contains `u`.
pub fn face_of_point(p: &HPolytope, lattice: &FaceLattice, u: &[Q]) -> Result<usize> {
    containment(p, u)?;
    let tight: BTreeSet<usize> = p
        .rows
        .iter()
        .enumerate()
        .filter(|(_, r)| p.eval_row(r, u).is_zero())
        .map(|(i, _)| i)
        .collect();
    // vertices whose tight set contains `tight` span the face
    let vs: VertexSet = lattice
        .vertex_coords
        .iter()
        .enumerate()
        .filter(|(_, v)| {
            p.rows
                .iter()
                .enumerate()
                .filter(|(i, _)| tight.contains(i))
                .all(|(_, r)| p.eval_row(r, v).is_zero())
        })
        .map(|(i, _)| i)
        .collect();
    lattice
        .face_by_vertices(&vs)
        .ok_or_else(|| Error::Inconsistent("active set closure is not a lattice face".into()))
}

/// The correspondence report between the diagram poset and the lattice.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    /// `pairs[i]` is the lattice face matched to diagram face `i`.
    pub pairs: Vec<Option<usize>>,
    pub bijective: bool,
    pub dims_match: bool,
    pub order_match: bool,
    pub issues: Vec<String>,
}

impl CorrespondenceReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.dims_match && self.order_match
    }
}

/// Builds the map face -> lattice face through supports and checks that it
/// is a dimension- and order-preserving bijection.
pub fn verify_correspondence(
    diagram: &LadderDiagram,
    poset: &FacePoset,
    p: &HPolytope,
    lattice: &FaceLattice,
) -> CorrespondenceReport {
    let spec = &diagram.spec;
    let mut pairs: Vec<Option<usize>> = Vec::with_capacity(poset.faces.len());
    let mut issues = Vec::new();
    for face in &poset.faces {
        let sup = face_support(diagram, face);
        let vs: VertexSet = lattice
            .vertex_coords
            .iter()
            .enumerate()
            .filter(|(_, v)| {
                let gp = GCPoint::from_ambient(p, v).expect("vertex coords");
                support_holds(spec, &sup, &gp)
            })
            .map(|(i, _)| i)
            .collect();
        match lattice.face_by_vertices(&vs) {
            Some(idx) => pairs.push(Some(idx)),
            None => {
                issues.push(format!(
                    "face {} selects vertex set {:?} which is not a lattice face",
                    face.id, vs
                ));
                pairs.push(None);
            }
        }
    }
    let mut bijective = pairs.iter().all(|p| p.is_some());
    if bijective {
        let mut hit = vec![0usize; lattice.faces.len()];
        for p in pairs.iter().flatten() {
            hit[*p] += 1;
        }
        if hit.iter().any(|&h| h != 1) {
            bijective = false;
            issues.push(format!(
                "map is not a bijection: {} diagram faces onto {} lattice faces",
                poset.faces.len(),
                hit.iter().filter(|&&h| h > 0).count()
            ));
        }
    }
    let mut dims_match = true;
    for (face, pair) in poset.faces.iter().zip(&pairs) {
        if let Some(idx) = pair {
            if lattice.faces[*idx].dim != face.dim {
                dims_match = false;
                issues.push(format!(
                    "face {}: diagram dim {} vs lattice dim {}",
                    face.id, face.dim, lattice.faces[*idx].dim
                ));
            }
        }
    }
    let mut order_match = bijective && dims_match;
    if order_match {
        'outer: for i in 0..poset.faces.len() {
            for j in 0..poset.faces.len() {
                let dleq =
                    crate::ladder::face_leq(&poset.faces[i], &poset.faces[j]).unwrap_or(false);
                let lleq = lattice.leq(pairs[i].unwrap(), pairs[j].unwrap());
                if dleq != lleq {
                    order_match = false;
                    issues.push(format!(
                        "order mismatch between faces {} and {}: diagram {} lattice {}",
                        poset.faces[i].id, poset.faces[j].id, dleq, lleq
                    ));
                    break 'outer;
                }
            }
        }
    }
    CorrespondenceReport { pairs, bijective, dims_match, order_match, issues }
}

/// Oracle cap from the environment, falling back to the default.
pub fn oracle_cap() -> usize {
    std::env::var("GCSO_ORACLE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::{face_poset, LadderDiagram, LadderSpec};
    use crate::rational::{q, q_frac};

    fn spec(n: usize, l: &[i128]) -> LadderSpec {
        LadderSpec::new(n, l.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn hrep_5_30() {
        let p = build_hrep(&spec(5, &[3, 0]));
        assert_eq!(p.vars, vec![(1, 3), (1, 2), (1, 1), (2, 2)]);
        let labels: Vec<&str> = p.rows.iter().map(|r| r.label.as_str()).collect();
        for expect in [
            "u[1,4] >= u[1,3]",
            "u[1,3] >= u[1,2]",
            "u[1,2] >= u[1,1]",
            "u[1,2] >= -u[1,1]",
            "u[2,3] >= u[2,2]",
            "u[2,3] >= -u[2,2]",
        ] {
            assert!(labels.contains(&expect), "missing {expect}: {labels:?}");
        }
    }

    #[test]
    fn hrep_2_0_trivial() {
        let p = build_hrep(&spec(2, &[0]));
        assert!(p.vars.is_empty());
        assert!(p.rows.is_empty());
    }

    #[test]
    fn hrep_4_21() {
        let p = build_hrep(&spec(4, &[2, 1]));
        assert_eq!(p.vars, vec![(1, 2), (1, 1)]);
        let labels: Vec<&str> = p.rows.iter().map(|r| r.label.as_str()).collect();
        for expect in [
            "u[1,3] >= u[1,2]",
            "u[1,2] >= u[1,1]",
            "u[1,2] >= -u[1,1]",
            "u[1,2] >= u[2,2]",
            "u[1,2] >= -u[2,2]",
        ] {
            assert!(labels.contains(&expect), "missing {expect}: {labels:?}");
        }
    }

    #[test]
    fn simplex_5_30_vertices() {
        let p = build_hrep(&spec(5, &[3, 0]));
        let lat = enumerate_lattice(&p, 10).unwrap();
        // vertices in (u13, u12, u11, u22)
        let mut vs: Vec<Vec<Q>> = lat.vertex_coords.clone();
        vs.sort();
        let expect: Vec<Vec<Q>> = vec![
            vec![q(0), q(0), q(0), q(0)],
            vec![q(3), q(0), q(0), q(0)],
            vec![q(3), q(3), q(-3), q(0)],
            vec![q(3), q(3), q(3), q(0)],
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(vs, expect);
        assert_eq!(lat.f_vector(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn point_polytope() {
        let p = build_hrep(&spec(2, &[0]));
        let lat = enumerate_lattice(&p, 10).unwrap();
        assert_eq!(lat.faces.len(), 1);
        assert_eq!(lat.faces[0].dim, 0);
    }

    #[test]
    fn trapezoid_4_21() {
        let p = build_hrep(&spec(4, &[2, 1]));
        let lat = enumerate_lattice(&p, 10).unwrap();
        assert_eq!(lat.f_vector(), vec![4, 4, 1]);
    }

    #[test]
    fn pyramid_6_333() {
        let p = build_hrep(&spec(6, &[3, 3, 3]));
        let lat = enumerate_lattice(&p, 10).unwrap();
        // effective shape: square pyramid over |u11|,|u22| <= u12 <= 3
        assert_eq!(lat.f_vector(), vec![5, 8, 5, 1]);
    }

    #[test]
    fn cap_exceeded() {
        let p = build_hrep(&spec(7, &[3, 2, 1]));
        match enumerate_lattice(&p, 3) {
            Err(Error::CapacityExceeded { dim, cap }) => {
                assert_eq!((dim, cap), (9, 3));
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn correspondence_5_30() {
        let s = spec(5, &[3, 0]);
        let d = LadderDiagram::build(&s);
        let poset = face_poset(&d);
        let p = build_hrep(&s);
        let lat = enumerate_lattice(&p, 10).unwrap();
        let rep = verify_correspondence(&d, &poset, &p, &lat);
        assert!(rep.ok(), "issues: {:?}", rep.issues);
        assert_eq!(poset.faces.len(), lat.faces.len());
        assert_eq!(poset.faces.len(), 15);
    }

    #[test]
    fn face_of_point_examples() {
        let s = spec(5, &[3, 0]);
        let p = build_hrep(&s);
        let lat = enumerate_lattice(&p, 10).unwrap();
        // vertex (3,3,3)
        let idx = face_of_point(&p, &lat, &[q(3), q(3), q(3), q(0)]).unwrap();
        assert_eq!(lat.faces[idx].dim, 0);
        // interior point
        let idx = face_of_point(&p, &lat, &[q_frac(5, 2), q_frac(3, 2), q_frac(1, 2), q(0)])
            .unwrap();
        assert_eq!(idx, lat.top);
        // edge u12 = u11 = 0
        let idx = face_of_point(&p, &lat, &[q(1), q(0), q(0), q(0)]).unwrap();
        assert_eq!(lat.faces[idx].dim, 1);
        // outside
        assert!(face_of_point(&p, &lat, &[q(4), q(0), q(0), q(0)]).is_err());
    }
}
