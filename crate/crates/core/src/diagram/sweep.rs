use serde::Serialize;

use super::{fmt_rational, CurveDiagram, DiagramError, EventKind, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "event", rename_all = "lowercase")]
pub enum EdgeEnd {
    Event(usize),
    Unbounded,
}

/// A maximal strand segment between incident events. Edges met by L span
/// both sides and carry their rank there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub id: usize,
    pub rank_at_l: Option<usize>,
    pub left: EdgeEnd,
    pub right: EdgeEnd,
}

/// Strands incident to one event. `near` lies between the event and L,
/// `far` beyond it; both are edge ids listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EventBlock {
    pub event: usize,
    pub side: Side,
    /// Index of the near interval in the side's table.
    pub interval: usize,
    pub pos: usize,
    pub near: Vec<usize>,
    pub far: Vec<usize>,
    /// `(near index, far index)` pairs lying on the same branch.
    pub pairing: Vec<(usize, usize)>,
}

/// Live strands (edge ids, top to bottom) in each interval, outward from L.
/// `left[0] == right[0]` is the set of strands at L.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepTable {
    pub d: usize,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    pub blocks: Vec<EventBlock>,
    pub edges: Vec<Edge>,
}

impl SweepTable {
    pub fn side(&self, s: Side) -> &[Vec<usize>] {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn counts(&self, s: Side) -> Vec<usize> {
        self.side(s).iter().map(Vec::len).collect()
    }

    /// Slabs from the far left to the far right, as strand lists.
    pub fn slabs(&self) -> Vec<&[usize]> {
        self.left.iter().rev().map(Vec::as_slice).chain(self.right.iter().map(Vec::as_slice)).collect()
    }
}

fn pairing(kind: EventKind, near: usize, far: usize) -> Vec<(usize, usize)> {
    match kind {
        EventKind::Ordinary { m } => (0..m).map(|i| (i, m - 1 - i)).collect(),
        EventKind::Crossing { m } if m % 4 == 1 => vec![(0, 1), (1, 0)],
        EventKind::Crossing { .. } => vec![(0, 0), (1, 1)],
        _ => {
            debug_assert!(near == 0 || far == 0);
            Vec::new()
        }
    }
}

/// Sweeps outward from L on both sides, tracking live strands.
pub fn sweep_ranks(dg: &CurveDiagram) -> Result<SweepTable, DiagramError> {
    let d = dg.d();
    if d == 0 && dg.events.is_empty() {
        return Ok(SweepTable { d, left: vec![vec![]], right: vec![vec![]], blocks: vec![], edges: vec![] });
    }
    let mut edges: Vec<Edge> = (0..d)
        .map(|i| Edge { id: i, rank_at_l: Some(i + 1), left: EdgeEnd::Unbounded, right: EdgeEnd::Unbounded })
        .collect();
    let mut blocks: Vec<Option<EventBlock>> = vec![None; dg.events.len()];
    let mut tables = [vec![(0..d).collect::<Vec<usize>>()], vec![(0..d).collect::<Vec<usize>>()]];

    for (si, side) in [Side::Left, Side::Right].into_iter().enumerate() {
        let table = &mut tables[si];
        for (k, eid) in dg.side_events(side).into_iter().enumerate() {
            let ev = &dg.events[eid];
            let bad = |message: String| DiagramError::BadEvent { event: eid, x: fmt_rational(ev.x), message };
            let cur = table[k].clone();
            let (n_near, n_far) = ev.block_sizes(dg.line_x);
            let pos = ev.top - 1;
            if n_near > 0 && pos + n_near > cur.len() {
                return Err(bad(format!(
                    "block of {n_near} strands from rank {} exceeds the {} live strands",
                    ev.top,
                    cur.len()
                )));
            }
            if n_near == 0 && pos > cur.len() {
                return Err(bad(format!("birth at rank {} but only {} live strands", ev.top, cur.len())));
            }
            let near: Vec<usize> = cur[pos..pos + n_near].to_vec();
            let far: Vec<usize> = (0..n_far)
                .map(|_| {
                    let id = edges.len();
                    let (left, right) = match side {
                        Side::Left => (EdgeEnd::Unbounded, EdgeEnd::Event(eid)),
                        Side::Right => (EdgeEnd::Event(eid), EdgeEnd::Unbounded),
                    };
                    edges.push(Edge { id, rank_at_l: None, left, right });
                    id
                })
                .collect();
            for &e in &near {
                match side {
                    Side::Left => edges[e].left = EdgeEnd::Event(eid),
                    Side::Right => edges[e].right = EdgeEnd::Event(eid),
                }
            }
            let mut next = cur[..pos].to_vec();
            next.extend_from_slice(&far);
            next.extend_from_slice(&cur[pos + n_near..]);
            if next.len() > d {
                return Err(bad(format!("{} live strands exceed d = {d}", next.len())));
            }
            table.push(next);
            blocks[eid] = Some(EventBlock {
                event: eid,
                side,
                interval: k,
                pos,
                pairing: pairing(ev.kind, near.len(), far.len()),
                near,
                far,
            });
        }
    }
    let [left, right] = tables;
    Ok(SweepTable {
        d,
        left,
        right,
        blocks: blocks.into_iter().map(|b| b.expect("every event is on one side")).collect(),
        edges,
    })
}

/// The split edge set (every event splits) and its quotient where the two
/// edges at each tangency are one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSets {
    pub extended: Vec<Edge>,
    /// `class[e]` is the merged edge containing split edge `e`.
    pub class: Vec<usize>,
    pub n_classes: usize,
}

pub fn derive_edges(dg: &CurveDiagram) -> Result<EdgeSets, DiagramError> {
    let table = sweep_ranks(dg)?;
    Ok(edge_sets(dg, &table))
}

pub(crate) fn edge_sets(dg: &CurveDiagram, table: &SweepTable) -> EdgeSets {
    let n = table.edges.len();
    let mut uf = UnionFind::new(n);
    for b in &table.blocks {
        if let EventKind::Tangency { .. } = dg.events[b.event].kind {
            let pair = if b.near.is_empty() { &b.far } else { &b.near };
            uf.union(pair[0], pair[1]);
        }
    }
    let mut class = vec![usize::MAX; n];
    let mut roots: Vec<usize> = Vec::new();
    for e in 0..n {
        let r = uf.find(e);
        class[e] = match roots.iter().position(|&x| x == r) {
            Some(i) => i,
            None => {
                roots.push(r);
                roots.len() - 1
            }
        };
    }
    EdgeSets { extended: table.edges.clone(), class, n_classes: roots.len() }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn count_roots(&mut self, items: impl IntoIterator<Item = usize>) -> usize {
        let mut roots: Vec<usize> = items.into_iter().map(|i| self.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn dg(events: &str, d: usize, line: &str) -> CurveDiagram {
        let strands: String = (1..=d).map(|i| format!("strand {i} component c\n")).collect();
        parse_diagram(&format!("diagram\ndegree_y {d}\nline_L at {line}\n{strands}{events}end\n")).unwrap()
    }

    #[test]
    fn tangency_kills_two() {
        let t = sweep_ranks(&dg("event at -1 tangency side=right top=1\n", 3, "0")).unwrap();
        assert_eq!(t.counts(Side::Left), vec![3, 1]);
        assert_eq!(t.left[1], vec![2]);
    }

    #[test]
    fn crossing_pairing_by_m() {
        let t = sweep_ranks(&dg("event at 1 crossing m=1 top=1\nevent at 2 crossing m=3 top=1\n", 2, "0")).unwrap();
        assert_eq!(t.blocks[0].pairing, vec![(0, 1), (1, 0)]);
        assert_eq!(t.blocks[1].pairing, vec![(0, 0), (1, 1)]);
        assert_eq!(t.counts(Side::Right), vec![2, 2, 2]);
    }

    #[test]
    fn nodal_sweep_and_edges() {
        let d = dg("event at -1 tangency side=right top=1\nevent at 0 ordinary m=2 top=1\n", 2, "-1/2");
        let t = sweep_ranks(&d).unwrap();
        assert_eq!(t.counts(Side::Left), vec![2, 0]);
        assert_eq!(t.counts(Side::Right), vec![2, 2]);
        let e = derive_edges(&d).unwrap();
        assert_eq!(e.extended.len(), 4);
        assert_eq!(e.n_classes, 3);
    }

    #[test]
    fn oval_has_two_edges_in_one_class() {
        let d = dg(
            "event at 1 tangency side=left top=1\nevent at 2 tangency side=right top=1\nevent at 3 tangency side=left top=1\n",
            2,
            "0",
        );
        let e = derive_edges(&d).unwrap();
        assert_eq!(e.extended.len(), 4);
        assert_eq!(e.class[2], e.class[3]);
        assert_eq!(e.n_classes, 2);
    }

    #[test]
    fn out_of_range_blocks() {
        let d = dg("event at 1 ordinary m=3 top=1\n", 2, "0");
        assert!(sweep_ranks(&d).is_err());
        let d = dg("event at 1 tangency side=left top=1\n", 1, "0");
        assert!(sweep_ranks(&d).is_err(), "birth beyond d strands");
    }
}
