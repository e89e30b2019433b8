//! The rank-n binary symplectic polar geometry and its universal embedding
//! dimension.
//!
//! Points are the maximal totally isotropic subspaces (dimension n) of F₂²ⁿ,
//! lines the totally isotropic (n−1)-subspaces. Every line lies in exactly
//! three points. The universal embedding dimension is
//! `|X| − rank σ`, where σ sends a line to the sum of its three points.
//!
//! The symplectic form pairs coordinate `i` with coordinate `n + i`:
//!
//! ```text
//! ω(u, v) = Σ_{i=1..n} (u_i·v_{n+i} + u_{n+i}·v_i)
//! ```
//!
//! The adjacent-pair convention `(1,2),(3,4),…` would make the subspace
//! `⟨0001, 1010⟩` non-isotropic, yet that subspace is one of the fifteen
//! points of the rank-2 Cremona–Richmond configuration, so the split pairing
//! is the one in use.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{guard, Error, Result};
use crate::gf2::{enumerate_subspaces, gaussian_binomial, Gf2Echelon, Gf2Subspace, Gf2Vector};

/// `ω(u, v)` for vectors of F₂²ⁿ.
pub fn symplectic_form(u: &Gf2Vector, v: &Gf2Vector, n: usize) -> Result<bool> {
    for w in [u, v] {
        if w.dim() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: w.dim(),
            });
        }
    }
    Ok(form_bits(u.bits(), v.bits(), n))
}

#[inline]
fn form_bits(u: u32, v: u32, n: usize) -> bool {
    let low = (1u32 << n) - 1;
    let (u_hi, u_lo) = (u >> n, u & low);
    let (v_hi, v_lo) = (v >> n, v & low);
    ((u_hi & v_lo) ^ (u_lo & v_hi)).count_ones() & 1 == 1
}

/// Whether ω vanishes on every pair of members of `space` (a subspace of F₂²ⁿ).
pub fn is_totally_isotropic(space: &Gf2Subspace, n: usize) -> bool {
    let b = space.basis();
    space.ambient_dim() == 2 * n
        && (0..b.len()).all(|i| (i + 1..b.len()).all(|j| !form_bits(b[i].bits(), b[j].bits(), n)))
}

/// Points, lines and point–line incidence of the polar space of rank `n`.
#[derive(Clone, Debug)]
pub struct PolarGeometry {
    n: usize,
    points: Vec<Gf2Subspace>,
    lines: Vec<Gf2Subspace>,
    incidence: Vec<[usize; 3]>,
    neighbors: Vec<Vec<usize>>,
}

/// Builds the geometry by filtering all n- and (n−1)-subspaces of F₂²ⁿ for
/// isotropy. Rank is limited to `1..=4`.
pub fn build_geometry(n: usize) -> Result<PolarGeometry> {
    guard("build_geometry: 1 <= n <= 4", n, 1, 4)?;
    let isotropic = |k: usize| -> Result<Vec<Gf2Subspace>> {
        Ok(enumerate_subspaces(2 * n, Some(k))?
            .into_par_iter()
            .filter(|s| is_totally_isotropic(s, n))
            .collect())
    };
    let points = isotropic(n)?;
    let lines = isotropic(n - 1)?;

    let line_index: HashMap<&Gf2Subspace, usize> =
        lines.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut on_line: Vec<Vec<usize>> = vec![Vec::with_capacity(3); lines.len()];
    for (p, point) in points.iter().enumerate() {
        for h in hyperplanes(point) {
            let l = line_index.get(&h).ok_or_else(|| {
                Error::Inconsistent(format!("hyperplane [{h}] of a point is not a line"))
            })?;
            on_line[*l].push(p);
        }
    }
    let incidence = on_line
        .into_iter()
        .enumerate()
        .map(|(l, mut ps)| {
            ps.sort_unstable();
            <[usize; 3]>::try_from(ps.as_slice()).map_err(|_| {
                Error::Inconsistent(format!("line {l} lies in {} points, not 3", ps.len()))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut neighbors = vec![Vec::new(); points.len()];
    for &[a, b, c] in &incidence {
        for (x, y) in [(a, b), (a, c), (b, c)] {
            neighbors[x].push(y);
            neighbors[y].push(x);
        }
    }
    for list in &mut neighbors {
        list.sort_unstable();
        list.dedup();
    }

    Ok(PolarGeometry {
        n,
        points,
        lines,
        incidence,
        neighbors,
    })
}

/// All codimension-one subspaces of `space`.
fn hyperplanes(space: &Gf2Subspace) -> Vec<Gf2Subspace> {
    let k = space.dim();
    let basis = space.basis();
    (1u32..1 << k)
        .map(|functional| {
            let kernel = (0u32..1 << k)
                .filter(|c| (c & functional).count_ones() % 2 == 0)
                .map(|c| {
                    basis
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| c >> j & 1 == 1)
                        .fold(0u32, |acc, (_, v)| acc ^ v.bits())
                });
            Gf2Subspace::from_bits(space.ambient_dim(), kernel)
        })
        .collect()
}

/// Points of `x0`'s distance layers and the facts checked about them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataReport {
    pub base: usize,
    /// `strata[k]` lists the points `y` with `dim(y ∩ x0) = n − k`.
    pub strata: Vec<Vec<usize>>,
    /// Connected components of the collinearity graph restricted to each stratum.
    pub components: Vec<Vec<Vec<usize>>>,
    /// Collinearity-graph distance from `x0` equals the stratum index.
    pub distances_match: bool,
    /// Every line has two points in some `Γ_k` and one in `Γ_{k−1}`.
    pub lines_straddle: bool,
    /// `y ↦ y ∩ x0` is constant on components and bijects them onto the
    /// (n−k)-subspaces of `x0`.
    pub components_match_subspaces: bool,
}

impl StrataReport {
    pub fn all_hold(&self) -> bool {
        self.distances_match && self.lines_straddle && self.components_match_subspaces
    }
}

/// Output formats for [`PolarGeometry::export`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Points chosen so their classes form a basis of `Z₂X / σ(Z₂𝓛)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub points: Vec<usize>,
    /// Rank of the σ-rows together with the chosen unit rows; equals `|X|`
    /// exactly when the choice is a basis of the quotient.
    pub certificate_rank: usize,
}

impl PolarGeometry {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Gf2Subspace] {
        &self.points
    }

    pub fn lines(&self) -> &[Gf2Subspace] {
        &self.lines
    }

    /// For each line, the sorted indices of its three points.
    pub fn incidence(&self) -> &[[usize; 3]] {
        &self.incidence
    }

    /// Points collinear with `p` (sharing a line).
    pub fn neighbors(&self, p: usize) -> &[usize] {
        &self.neighbors[p]
    }

    pub fn point_index(&self, point: &Gf2Subspace) -> Option<usize> {
        self.points
            .binary_search_by(|q| q.basis().cmp(point.basis()))
            .ok()
    }

    fn sigma_echelon(&self) -> Gf2Echelon {
        let mut ech = Gf2Echelon::new(self.points.len());
        for pts in &self.incidence {
            let row = ech.row_from_columns(pts);
            ech.insert(row);
        }
        ech
    }

    /// Rank over GF(2) of the line–point incidence matrix.
    pub fn sigma_rank(&self) -> usize {
        self.sigma_echelon().rank()
    }

    /// `|X| − rank σ`.
    pub fn udim(&self) -> usize {
        self.points.len() - self.sigma_rank()
    }

    /// Greedy extension of the σ-image by unit vectors, lowest index first.
    pub fn quotient_basis(&self) -> QuotientBasis {
        let mut ech = self.sigma_echelon();
        let mut chosen = Vec::new();
        for p in 0..self.points.len() {
            let row = ech.row_from_columns(&[p]);
            if ech.insert(row) {
                chosen.push(p);
            }
        }
        // Independent recount from scratch.
        let mut check = self.sigma_echelon();
        for &p in &chosen {
            let row = check.row_from_columns(&[p]);
            check.insert(row);
        }
        QuotientBasis {
            points: chosen,
            certificate_rank: check.rank(),
        }
    }

    /// Distance layers around point `x0`, with the layer facts checked.
    pub fn strata(&self, x0: usize) -> Result<StrataReport> {
        let len = self.points.len();
        if x0 >= len {
            return Err(Error::IndexOutOfRange { index: x0, len });
        }
        let n = self.n;
        let base = &self.points[x0];
        let layer: Vec<usize> = self
            .points
            .iter()
            .map(|y| n - y.intersection_dim(base))
            .collect();
        let mut strata = vec![Vec::new(); n + 1];
        for (p, &k) in layer.iter().enumerate() {
            strata[k].push(p);
        }

        // Breadth-first distances in the collinearity graph.
        let mut dist = vec![usize::MAX; len];
        dist[x0] = 0;
        let mut queue = VecDeque::from([x0]);
        while let Some(p) = queue.pop_front() {
            for &q in &self.neighbors[p] {
                if dist[q] == usize::MAX {
                    dist[q] = dist[p] + 1;
                    queue.push_back(q);
                }
            }
        }
        let distances_match = (0..len).all(|p| dist[p] == layer[p]);

        let lines_straddle = self.incidence.iter().all(|pts| {
            let mut ks = pts.map(|p| layer[p]);
            ks.sort_unstable();
            ks[0] + 1 == ks[1] && ks[1] == ks[2]
        });

        let mut components = Vec::with_capacity(n + 1);
        let mut components_match_subspaces = true;
        for (k, members) in strata.iter().enumerate() {
            let comps = self.components_within(members, &layer, k);
            let mut seen: Vec<Gf2Subspace> = Vec::with_capacity(comps.len());
            for comp in &comps {
                let meets: Vec<Gf2Subspace> = comp
                    .iter()
                    .map(|&p| self.points[p].intersection(base))
                    .collect::<Result<_>>()?;
                let first = &meets[0];
                if first.dim() != n - k || meets.iter().any(|m| m != first) || seen.contains(first)
                {
                    components_match_subspaces = false;
                }
                seen.push(first.clone());
            }
            if comps.len() as u128 != gaussian_binomial(n, n - k) {
                components_match_subspaces = false;
            }
            components.push(comps);
        }

        Ok(StrataReport {
            base: x0,
            strata,
            components,
            distances_match,
            lines_straddle,
            components_match_subspaces,
        })
    }

    fn components_within(&self, members: &[usize], layer: &[usize], k: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points.len()];
        let mut comps = Vec::new();
        for &start in members {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(p) = stack.pop() {
                for &q in &self.neighbors[p] {
                    if layer[q] == k && !seen[q] {
                        seen[q] = true;
                        comp.push(q);
                        stack.push(q);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Renders the incidence structure. Output ends with a single newline.
    ///
    /// * `dot`: the Levi graph, points `p<i>` (circles) and lines `l<j>` (boxes).
    /// * `json`: `{"lines":[{"id","points"}],"n","points":[{"basis","id"}]}`, keys sorted.
    /// * `csv`: header `line_id,p1,p2,p3` and one row per line.
    pub fn export(&self, format: ExportFormat) -> String {
        let mut out = String::new();
        match format {
            ExportFormat::Dot => {
                let _ = writeln!(out, "graph levi_n{} {{", self.n);
                for (i, p) in self.points.iter().enumerate() {
                    let _ = writeln!(out, "  p{i} [label=\"{p}\", shape=circle];");
                }
                for j in 0..self.lines.len() {
                    let _ = writeln!(out, "  l{j} [label=\"L{j}\", shape=box];");
                }
                for (j, pts) in self.incidence.iter().enumerate() {
                    for p in pts {
                        let _ = writeln!(out, "  l{j} -- p{p};");
                    }
                }
                out.push_str("}\n");
            }
            ExportFormat::Json => {
                let points: Vec<_> = self
                    .points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        let basis: Vec<String> = p.basis().iter().map(|v| v.to_string()).collect();
                        json!({ "id": i, "basis": basis })
                    })
                    .collect();
                let lines: Vec<_> = self
                    .incidence
                    .iter()
                    .enumerate()
                    .map(|(j, pts)| json!({ "id": j, "points": pts }))
                    .collect();
                let doc = json!({ "n": self.n, "points": points, "lines": lines });
                out = doc.to_string();
                out.push('\n');
            }
            ExportFormat::Csv => {
                out.push_str("line_id,p1,p2,p3\n");
                for (j, [a, b, c]) in self.incidence.iter().enumerate() {
                    let _ = writeln!(out, "{j},{a},{b},{c}");
                }
            }
        }
        out
    }
}

/// Universal embedding dimension for rank `n` (builds the geometry).
pub fn udim(n: usize) -> Result<usize> {
    Ok(build_geometry(n)?.udim())
}
