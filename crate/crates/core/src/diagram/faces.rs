use serde::Serialize;

use super::sweep::{sweep_ranks, SweepTable, UnionFind};
use super::{CurveDiagram, DiagramError, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DividerKind {
    Line,
    Event(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OneCellKind {
    /// Strand `pos` inside `slab`.
    Arc { slab: usize, pos: usize },
    /// Segment `seg` of divider `div`, counted from the top.
    Divider { div: usize, seg: usize },
    Box,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneCell {
    pub kind: OneCellKind,
    pub ends: [usize; 2],
}

/// Planar cell structure of `C ∪ L` inside a box: vertical dividers at L and
/// at every event cut the box into slabs, and the strands cut each slab
/// into cells `(slab, gap)`, gap 0 being the topmost.
#[derive(Clone, Debug, Serialize)]
pub struct CellComplex {
    pub dividers: Vec<DividerKind>,
    pub slabs: Vec<Vec<usize>>,
    /// Vertex ids of the points on each divider, top box point first.
    pub divider_points: Vec<Vec<usize>>,
    pub n_vertices: usize,
    /// Vertices that lie on the curve or on L.
    pub curve_vertices: Vec<usize>,
    pub one_cells: Vec<OneCell>,
    /// Per slab, the first cell id; cell `(s, g)` is `cell_offset[s] + g`.
    pub cell_offset: Vec<usize>,
    pub n_cells: usize,
    /// Per cell, the divider one-cells on its left and right.
    pub cell_dividers: Vec<Vec<usize>>,
    /// Per cell, the strand arcs bounding it above and below.
    pub cell_arcs: Vec<Vec<usize>>,
    /// Per cell, the box segments on its boundary.
    pub cell_box: Vec<Vec<usize>>,
    pub line_divider: usize,
}

impl CellComplex {
    pub fn cell(&self, slab: usize, gap: usize) -> usize {
        self.cell_offset[slab] + gap
    }

    pub fn cell_slab_gap(&self, c: usize) -> (usize, usize) {
        let s = self.cell_offset.partition_point(|&o| o <= c) - 1;
        (s, c - self.cell_offset[s])
    }

    /// `V − E + F` over the box; 1 for a disk.
    pub fn euler_box(&self) -> i64 {
        self.n_vertices as i64 - self.one_cells.len() as i64 + self.n_cells as i64
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Face {
    pub id: usize,
    pub cells: Vec<usize>,
    /// Reaches the box, i.e. unbounded before clipping.
    pub touches_box: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionPoint {
    pub event: usize,
    pub side: Side,
    pub slab: usize,
    pub gap: usize,
    pub face: usize,
}

/// Faces of `C ∪ L` clipped to the box, with obstruction points located.
#[derive(Clone, Debug, Serialize)]
pub struct FaceComplex {
    pub complex: CellComplex,
    pub faces: Vec<Face>,
    pub cell_face: Vec<usize>,
    pub obstructions: Vec<ObstructionPoint>,
}

impl FaceComplex {
    /// `V − E + F` with the outer face counted; 2 on a valid subdivision.
    pub fn euler_characteristic(&self) -> i64 {
        self.complex.euler_box() + 1
    }

    pub fn face_obstructions(&self, face: usize) -> Vec<&ObstructionPoint> {
        self.obstructions.iter().filter(|o| o.face == face).collect()
    }
}

struct Builder<'a> {
    table: &'a SweepTable,
    dividers: Vec<DividerKind>,
    slabs: Vec<Vec<usize>>,
}

impl Builder<'_> {
    /// Block position and size of divider `k` as seen from slab `k` (left)
    /// or slab `k + 1` (right); `None` for L.
    fn block_on(&self, k: usize, from_left: bool) -> Option<(usize, usize)> {
        match self.dividers[k] {
            DividerKind::Line => None,
            DividerKind::Event(e) => {
                let b = &self.table.blocks[e];
                // The near side of a left event is its right.
                let near_is_left = b.side == Side::Right;
                let n = if from_left == near_is_left { b.near.len() } else { b.far.len() };
                Some((b.pos, n))
            }
        }
    }

    /// Index among the divider's points of strand `p` of the adjacent slab.
    fn point_index(&self, k: usize, from_left: bool, p: usize) -> usize {
        match self.block_on(k, from_left) {
            None => 1 + p,
            Some((pos, n)) => {
                if p < pos {
                    1 + p
                } else if p < pos + n {
                    1 + pos
                } else {
                    2 + pos + (p - pos - n)
                }
            }
        }
    }

    fn n_points(&self, k: usize) -> usize {
        match self.dividers[k] {
            DividerKind::Line => self.table.d + 2,
            DividerKind::Event(e) => {
                let b = &self.table.blocks[e];
                let pass = self.slabs[k].len() - self.block_on(k, true).map_or(0, |(_, n)| n);
                debug_assert_eq!(pass, self.table.side(b.side)[b.interval].len() - b.near.len());
                pass + 3
            }
        }
    }

    /// Divider segments covered by gap `g` of the slab on one side.
    fn gap_segments(&self, k: usize, from_left: bool, g: usize) -> std::ops::Range<usize> {
        let slab = if from_left { k } else { k + 1 };
        let c = self.slabs[slab].len();
        let last = self.n_points(k) - 1;
        let upper = if g == 0 { 0 } else { self.point_index(k, from_left, g - 1) };
        let lower = if g == c { last } else { self.point_index(k, from_left, g) };
        upper..lower
    }
}

pub(crate) fn build_complex(dg: &CurveDiagram, table: &SweepTable) -> CellComplex {
    let mut dividers: Vec<DividerKind> = dg.side_events(Side::Left).into_iter().rev().map(DividerKind::Event).collect();
    let line_divider = dividers.len();
    dividers.push(DividerKind::Line);
    dividers.extend(dg.side_events(Side::Right).into_iter().map(DividerKind::Event));
    let slabs: Vec<Vec<usize>> = table.slabs().into_iter().map(<[usize]>::to_vec).collect();
    let b = Builder { table, dividers, slabs };
    let n_div = b.dividers.len();
    let n_slab = b.slabs.len();
    debug_assert_eq!(n_slab, n_div + 1);

    let mut n_vertices = 0;
    let mut fresh = |n: usize| {
        let start = n_vertices;
        n_vertices += n;
        (start..start + n).collect::<Vec<usize>>()
    };
    let divider_points: Vec<Vec<usize>> = (0..n_div).map(|k| fresh(b.n_points(k))).collect();
    let left_ends = fresh(b.slabs[0].len());
    let right_ends = fresh(b.slabs[n_slab - 1].len());
    let corners = fresh(4); // TL, TR, BL, BR

    let mut curve_vertices: Vec<usize> = Vec::new();
    for (k, pts) in divider_points.iter().enumerate() {
        let inner = &pts[1..pts.len() - 1];
        curve_vertices.extend_from_slice(inner);
        if k == line_divider {
            curve_vertices.push(pts[0]);
            curve_vertices.push(pts[pts.len() - 1]);
        }
    }
    curve_vertices.extend(&left_ends);
    curve_vertices.extend(&right_ends);
    curve_vertices.sort_unstable();

    let mut one_cells = Vec::new();
    // Strand arcs.
    let mut arc_id = vec![Vec::new(); n_slab];
    for s in 0..n_slab {
        for p in 0..b.slabs[s].len() {
            let l = if s == 0 { left_ends[p] } else { divider_points[s - 1][b.point_index(s - 1, false, p)] };
            let r = if s == n_slab - 1 { right_ends[p] } else { divider_points[s][b.point_index(s, true, p)] };
            arc_id[s].push(one_cells.len());
            one_cells.push(OneCell { kind: OneCellKind::Arc { slab: s, pos: p }, ends: [l, r] });
        }
    }
    // Divider segments.
    let mut seg_id = vec![Vec::new(); n_div];
    for k in 0..n_div {
        for j in 0..divider_points[k].len() - 1 {
            seg_id[k].push(one_cells.len());
            one_cells.push(OneCell {
                kind: OneCellKind::Divider { div: k, seg: j },
                ends: [divider_points[k][j], divider_points[k][j + 1]],
            });
        }
    }
    // Box: top and bottom per slab, then the two sides.
    let mut box_tb = Vec::with_capacity(n_slab);
    for s in 0..n_slab {
        box_tb.push((one_cells.len(), one_cells.len() + 1));
        let tl = if s == 0 { corners[0] } else { divider_points[s - 1][0] };
        let tr = if s == n_slab - 1 { corners[1] } else { divider_points[s][0] };
        let bl = if s == 0 { corners[2] } else { *divider_points[s - 1].last().unwrap() };
        let br = if s == n_slab - 1 { corners[3] } else { *divider_points[s].last().unwrap() };
        one_cells.push(OneCell { kind: OneCellKind::Box, ends: [tl, tr] });
        one_cells.push(OneCell { kind: OneCellKind::Box, ends: [bl, br] });
    }
    let mut box_sides = [Vec::new(), Vec::new()];
    for (i, (ends, top, bottom)) in
        [(&left_ends, corners[0], corners[2]), (&right_ends, corners[1], corners[3])].into_iter().enumerate()
    {
        let chain: Vec<usize> = std::iter::once(top).chain(ends.iter().copied()).chain(std::iter::once(bottom)).collect();
        for w in chain.windows(2) {
            box_sides[i].push(one_cells.len());
            one_cells.push(OneCell { kind: OneCellKind::Box, ends: [w[0], w[1]] });
        }
    }

    let mut cell_offset = Vec::with_capacity(n_slab);
    let mut n_cells = 0;
    for s in &b.slabs {
        cell_offset.push(n_cells);
        n_cells += s.len() + 1;
    }
    let mut cell_dividers = vec![Vec::new(); n_cells];
    let mut cell_arcs = vec![Vec::new(); n_cells];
    let mut cell_box = vec![Vec::new(); n_cells];
    for s in 0..n_slab {
        let c = b.slabs[s].len();
        for g in 0..=c {
            let id = cell_offset[s] + g;
            if g > 0 {
                cell_arcs[id].push(arc_id[s][g - 1]);
            }
            if g < c {
                cell_arcs[id].push(arc_id[s][g]);
            }
            if g == 0 {
                cell_box[id].push(box_tb[s].0);
            }
            if g == c {
                cell_box[id].push(box_tb[s].1);
            }
            if s == 0 {
                cell_box[id].push(box_sides[0][g]);
            }
            if s == n_slab - 1 {
                cell_box[id].push(box_sides[1][g]);
            }
            if s > 0 {
                for j in b.gap_segments(s - 1, false, g) {
                    cell_dividers[id].push(seg_id[s - 1][j]);
                }
            }
            if s < n_slab - 1 {
                for j in b.gap_segments(s, true, g) {
                    cell_dividers[id].push(seg_id[s][j]);
                }
            }
        }
    }

    CellComplex {
        dividers: b.dividers,
        slabs: b.slabs,
        divider_points,
        n_vertices,
        curve_vertices,
        one_cells,
        cell_offset,
        n_cells,
        cell_dividers,
        cell_arcs,
        cell_box,
        line_divider,
    }
}

pub(crate) fn build_faces(dg: &CurveDiagram, table: &SweepTable) -> FaceComplex {
    let complex = build_complex(dg, table);
    let n_slab = complex.slabs.len();
    // Cells sharing a divider segment away from L belong to one face.
    let mut owner: Vec<Vec<usize>> = vec![Vec::new(); complex.one_cells.len()];
    for (c, segs) in complex.cell_dividers.iter().enumerate() {
        for &s in segs {
            owner[s].push(c);
        }
    }
    let mut uf = UnionFind::new(complex.n_cells);
    for (i, oc) in complex.one_cells.iter().enumerate() {
        if let OneCellKind::Divider { div, .. } = oc.kind {
            if div != complex.line_divider {
                debug_assert_eq!(owner[i].len(), 2);
                uf.union(owner[i][0], owner[i][1]);
            }
        }
    }
    let mut cell_face = vec![usize::MAX; complex.n_cells];
    let mut faces: Vec<Face> = Vec::new();
    let mut root_face: Vec<(usize, usize)> = Vec::new();
    for c in 0..complex.n_cells {
        let r = uf.find(c);
        let f = match root_face.iter().find(|&&(root, _)| root == r) {
            Some(&(_, f)) => f,
            None => {
                faces.push(Face { id: faces.len(), cells: Vec::new(), touches_box: false });
                root_face.push((r, faces.len() - 1));
                faces.len() - 1
            }
        };
        cell_face[c] = f;
        faces[f].cells.push(c);
        let (s, g) = complex.cell_slab_gap(c);
        if s == 0 || s == n_slab - 1 || g == 0 || g == complex.slabs[s].len() {
            faces[f].touches_box = true;
        }
    }

    let mut obstructions = Vec::new();
    for (k, dv) in complex.dividers.iter().enumerate() {
        if let DividerKind::Event(e) = *dv {
            if let Some(branch) = dg.events[e].kind.branch_side() {
                let side = branch.opposite();
                let slab = if side == Side::Left { k } else { k + 1 };
                let gap = table.blocks[e].pos;
                let face = cell_face[complex.cell(slab, gap)];
                obstructions.push(ObstructionPoint { event: e, side, slab, gap, face });
            }
        }
    }
    obstructions.sort_by_key(|o| o.event);
    FaceComplex { complex, faces, cell_face, obstructions }
}

pub fn faces(dg: &CurveDiagram) -> Result<FaceComplex, DiagramError> {
    let table = sweep_ranks(dg)?;
    Ok(build_faces(dg, &table))
}

/// One point per cusp and tangency, on the side away from its branches.
pub fn obstruction_points(dg: &CurveDiagram) -> Result<Vec<ObstructionPoint>, DiagramError> {
    Ok(faces(dg)?.obstructions)
}
