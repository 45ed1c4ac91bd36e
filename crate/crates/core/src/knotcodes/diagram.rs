//! The plat as an oriented link diagram.
//!
//! Positions 1..2m are the braid strands from left to right. A box in row i
//! on positions (k, k+1) holds |a| crossings stacked top to bottom. Each
//! position is cut into segments at its crossings; seg(p, 0) hangs from the
//! top cap and the last segment of p runs into the bottom cap.
//!
//! At a crossing between positions k and k+1 the four corners are UL, UR,
//! LL, LR. The `\` strand joins UL and LR, the `/` strand joins LL and UR.

use crate::plat::PlatGrid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

impl Corner {
    fn index(self) -> usize {
        match self {
            Corner::UpperLeft => 0,
            Corner::UpperRight => 1,
            Corner::LowerLeft => 2,
            Corner::LowerRight => 3,
        }
    }

    fn coords(self) -> (i64, i64) {
        match self {
            Corner::UpperLeft => (-1, 1),
            Corner::UpperRight => (1, 1),
            Corner::LowerLeft => (-1, -1),
            Corner::LowerRight => (1, -1),
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Corner::UpperLeft | Corner::UpperRight)
    }

    /// Counter-clockwise successor.
    pub fn ccw(self) -> Corner {
        match self {
            Corner::UpperRight => Corner::UpperLeft,
            Corner::UpperLeft => Corner::LowerLeft,
            Corner::LowerLeft => Corner::LowerRight,
            Corner::LowerRight => Corner::UpperRight,
        }
    }
}

/// One crossing, with the data filled in by the traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub row: usize,
    pub column: usize,
    /// 0 for the top crossing of its box.
    pub level: usize,
    /// Left position k; the crossing sits in gap k.
    pub left: usize,
    pub slash_over: bool,
    /// Edge labels at UL, UR, LL, LR (0 when unlabelled).
    pub labels: [usize; 4],
    /// Writhe sign from the orientation.
    pub sign: i8,
    /// Corner where the under strand enters.
    pub under_in: Corner,
    /// True when the under strand travels downward.
    pub under_down: bool,
    pub over_down: bool,
    /// Component index of the over and under strands.
    pub over_component: usize,
    pub under_component: usize,
}

impl Crossing {
    pub fn label(&self, corner: Corner) -> usize {
        self.labels[corner.index()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
    pub from: Corner,
    pub to: Corner,
    pub in_label: usize,
    pub out_label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    pub m: usize,
    /// Crossings in geometric order: rows top to bottom, boxes left to right,
    /// crossings top to bottom.
    pub crossings: Vec<Crossing>,
    /// Passages of each component in traversal order; empty for a free loop.
    pub components: Vec<Vec<Passage>>,
    pub bottom_caps: Vec<(usize, usize)>,
    pub top_caps: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct State {
    pos: usize,
    seg: usize,
    down: bool,
}

impl KnotDiagram {
    pub fn from_grid(grid: &PlatGrid) -> KnotDiagram {
        let m = grid.m();
        let strands = 2 * m;
        let mut crossings = Vec::new();
        for r in grid.regions() {
            let a = grid.get(r.i, r.j);
            let left = if r.i % 2 == 1 { 2 * r.j } else { 2 * r.j - 1 };
            for level in 0..a.unsigned_abs() as usize {
                crossings.push(Crossing {
                    row: r.i,
                    column: r.j,
                    level,
                    left,
                    slash_over: a > 0,
                    labels: [0; 4],
                    sign: 0,
                    under_in: Corner::UpperLeft,
                    under_down: true,
                    over_down: true,
                    over_component: 0,
                    under_component: 0,
                });
            }
        }
        // events[p] lists the crossings on position p from top to bottom
        let mut events: Vec<Vec<usize>> = vec![Vec::new(); strands + 1];
        let mut slot = vec![(0usize, 0usize); crossings.len()];
        for (c, x) in crossings.iter().enumerate() {
            slot[c] = (events[x.left].len(), events[x.left + 1].len());
            events[x.left].push(c);
            events[x.left + 1].push(c);
        }
        let lefts: Vec<usize> = crossings.iter().map(|x| x.left).collect();
        let slash_over: Vec<bool> = crossings.iter().map(|x| x.slash_over).collect();
        let top_caps = grid.top_caps();
        let bottom_caps = grid.bottom_caps();
        let mut top_partner = vec![0; strands + 1];
        for &(p, q) in &top_caps {
            top_partner[p] = q;
            top_partner[q] = p;
        }
        let mut bottom_partner = vec![0; strands + 1];
        for &(p, q) in &bottom_caps {
            bottom_partner[p] = q;
            bottom_partner[q] = p;
        }

        // one step along the diagram; reports the crossing passed, if any
        let step = |s: State| -> (State, Option<(usize, Corner, Corner)>) {
            if s.down {
                if s.seg < events[s.pos].len() {
                    let c = events[s.pos][s.seg];
                    let k = lefts[c];
                    let (t, u) = slot[c];
                    if s.pos == k {
                        (State { pos: k + 1, seg: u + 1, down: true }, Some((c, Corner::UpperLeft, Corner::LowerRight)))
                    } else {
                        (State { pos: k, seg: t + 1, down: true }, Some((c, Corner::UpperRight, Corner::LowerLeft)))
                    }
                } else {
                    let q = bottom_partner[s.pos];
                    (State { pos: q, seg: events[q].len(), down: false }, None)
                }
            } else if s.seg > 0 {
                let c = events[s.pos][s.seg - 1];
                let k = lefts[c];
                let (t, u) = slot[c];
                if s.pos == k {
                    (State { pos: k + 1, seg: u, down: false }, Some((c, Corner::LowerLeft, Corner::UpperRight)))
                } else {
                    (State { pos: k, seg: t, down: false }, Some((c, Corner::LowerRight, Corner::UpperLeft)))
                }
            } else {
                (State { pos: top_partner[s.pos], seg: 0, down: true }, None)
            }
        };

        let mut visited_top = vec![false; m + 1];
        let mut components = Vec::new();
        let mut next_label = 1;
        for j in 1..=m {
            if visited_top[j] {
                continue;
            }
            let start = State { pos: 2 * j - 1, seg: 0, down: true };
            let mut passages = Vec::new();
            let mut s = start;
            loop {
                if !s.down && s.seg == 0 {
                    visited_top[s.pos.div_ceil(2)] = true;
                }
                let (next, passed) = step(s);
                if let Some((c, from, to)) = passed {
                    let slash = matches!(from, Corner::LowerLeft | Corner::UpperRight);
                    passages.push(Passage {
                        crossing: c,
                        over: slash == slash_over[c],
                        from,
                        to,
                        in_label: 0,
                        out_label: 0,
                    });
                }
                s = next;
                if s == start {
                    break;
                }
            }
            visited_top[j] = true;
            let count = passages.len();
            let comp = components.len();
            for (r, p) in passages.iter_mut().enumerate() {
                p.in_label = next_label + r;
                p.out_label = next_label + (r + 1) % count;
                let x = &mut crossings[p.crossing];
                x.labels[p.from.index()] = p.in_label;
                x.labels[p.to.index()] = p.out_label;
                if p.over {
                    x.over_down = p.from.is_upper();
                    x.over_component = comp;
                } else {
                    x.under_in = p.from;
                    x.under_down = p.from.is_upper();
                    x.under_component = comp;
                }
            }
            next_label += count;
            components.push(passages);
        }

        for comp in &components {
            for p in comp {
                let x = &crossings[p.crossing];
                if p.over {
                    continue;
                }
                let under = direction(p.from, p.to);
                let (over_from, over_to) = over_path(x);
                let over = direction(over_from, over_to);
                let cross = over.0 * under.1 - over.1 * under.0;
                crossings[p.crossing].sign = if cross > 0 { 1 } else { -1 };
            }
        }
        KnotDiagram { m, crossings, components, bottom_caps, top_caps }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Writhe: the sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// True when the projection is connected: no free loops, and every pair
    /// of components is linked through a chain of shared crossings.
    pub fn is_connected(&self) -> bool {
        let n = self.components.len();
        if n == 1 {
            return true;
        }
        if self.components.iter().any(|c| c.is_empty()) {
            return false;
        }
        let mut uf = crate::plat::UnionFind::new(n);
        for x in &self.crossings {
            uf.union(x.over_component, x.under_component);
        }
        uf.count() == 1
    }
}

/// (from, to) corners of the over strand in its direction of travel.
fn over_path(x: &Crossing) -> (Corner, Corner) {
    match (x.slash_over, x.over_down) {
        (true, true) => (Corner::UpperRight, Corner::LowerLeft),
        (true, false) => (Corner::LowerLeft, Corner::UpperRight),
        (false, true) => (Corner::UpperLeft, Corner::LowerRight),
        (false, false) => (Corner::LowerRight, Corner::UpperLeft),
    }
}

fn direction(from: Corner, to: Corner) -> (i64, i64) {
    let (a, b) = (from.coords(), to.coords());
    (b.0 - a.0, b.1 - a.1)
}
