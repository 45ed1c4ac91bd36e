//! Checkerboard faces and the Goeritz matrix.
//!
//! Gap g (0..=2m) is the vertical strip between positions g and g+1; the
//! crossings on positions (k, k+1) all sit in gap k and cut it into faces
//! F(k, 0), ..., F(k, C_k) from top to bottom. Faces are coloured by the
//! parity of their gap. Above the braid the even gaps open into the outer
//! face and the odd gaps are closed off by the top caps; below, the same
//! holds for the standard closure, while the even closure nests its caps
//! inside the long cap (2m, 1).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::det::det_bigint;
use super::diagram::KnotDiagram;
use crate::plat::{Closure, PlatGrid, UnionFind};

/// Faces of the diagram after merging across the caps.
pub(crate) struct Faces {
    /// Face class of F(g, s) is `class[offset[g] + s]`.
    offset: Vec<usize>,
    class: Vec<usize>,
    parity: Vec<usize>,
    pub count: usize,
}

impl Faces {
    fn id(&self, gap: usize, s: usize) -> usize {
        self.class[self.offset[gap] + s]
    }
}

/// For each crossing: its index within its own gap, and the face index it
/// touches in the gaps to its left and right.
struct Placement {
    own: usize,
    left: usize,
    right: usize,
}

fn place(d: &KnotDiagram) -> (Vec<usize>, Vec<Placement>) {
    let gaps = 2 * d.m + 1;
    let mut seen = vec![0usize; gaps];
    let mut out = Vec::with_capacity(d.crossings.len());
    // crossings are stored top to bottom within every gap, and neighbouring
    // gaps never share a row, so running counts give the heights
    for x in &d.crossings {
        let k = x.left;
        out.push(Placement { own: seen[k], left: seen[k - 1], right: seen[k + 1] });
        seen[k] += 1;
    }
    (seen, out)
}

pub(crate) fn faces(d: &KnotDiagram, closure: Closure) -> Faces {
    let m = d.m;
    let (counts, _) = place(d);
    let mut offset = Vec::with_capacity(counts.len());
    let mut total = 0;
    for &c in &counts {
        offset.push(total);
        total += c + 1;
    }
    let outer = total;
    let inner = total + 1;
    let mut uf = UnionFind::new(total + 2);
    for g in (0..=2 * m).step_by(2) {
        uf.union(offset[g], outer);
    }
    for (g, &c) in counts.iter().enumerate() {
        let bottom = offset[g] + c;
        match closure {
            Closure::StandardPlat => {
                if g % 2 == 0 {
                    uf.union(bottom, outer);
                }
            }
            Closure::EvenPlat => {
                if g == 0 || g == 2 * m {
                    uf.union(bottom, outer);
                } else if g % 2 == 1 {
                    uf.union(bottom, inner);
                }
            }
        }
    }
    let mut raw_parity = vec![0; total + 2];
    for (g, &c) in counts.iter().enumerate() {
        for s in 0..=c {
            raw_parity[offset[g] + s] = g % 2;
        }
    }
    raw_parity[inner] = 1;
    // number the classes that contain at least one real face
    let mut root_index = vec![usize::MAX; total + 2];
    let mut class = vec![0; total];
    let mut parity = Vec::new();
    for (f, slot) in class.iter_mut().enumerate() {
        let r = uf.find(f);
        if root_index[r] == usize::MAX {
            root_index[r] = parity.len();
            parity.push(raw_parity[f]);
        }
        *slot = root_index[r];
    }
    let count = parity.len();
    Faces { offset, class, parity, count }
}

/// Goeritz matrix on the faces of colour `colour` (gap parity 0 or 1).
pub fn goeritz_matrix(grid: &PlatGrid, colour: usize) -> Vec<Vec<BigInt>> {
    let d = KnotDiagram::from_grid(grid);
    goeritz_from_diagram(&d, grid.closure(), colour)
}

pub(crate) fn goeritz_from_diagram(d: &KnotDiagram, closure: Closure, colour: usize) -> Vec<Vec<BigInt>> {
    let f = faces(d, closure);
    let (_, placement) = place(d);
    let shaded: Vec<usize> = (0..f.count).filter(|&c| f.parity[c] == colour).collect();
    let mut index = vec![usize::MAX; f.count];
    for (i, &c) in shaded.iter().enumerate() {
        index[c] = i;
    }
    let n = shaded.len();
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for (x, p) in d.crossings.iter().zip(&placement) {
        let k = x.left;
        let s: i64 = if x.slash_over { 1 } else { -1 };
        let (a, b, eta) = if k % 2 == colour {
            (f.id(k, p.own), f.id(k, p.own + 1), s)
        } else {
            (f.id(k - 1, p.left), f.id(k + 1, p.right), -s)
        };
        let (i, j) = (index[a], index[b]);
        if i == j {
            continue;
        }
        let eta = BigInt::from(eta);
        g[i][j] -= &eta;
        g[j][i] -= &eta;
        g[i][i] += &eta;
        g[j][j] += &eta;
    }
    g
}

/// |det| of the Goeritz matrix with one row and column removed: the order of
/// the first homology of the double branched cover, 0 when it is infinite.
pub fn determinant(grid: &PlatGrid) -> BigUint {
    let d = KnotDiagram::from_grid(grid);
    determinant_of(&d, grid.closure())
}

pub(crate) fn determinant_of(d: &KnotDiagram, closure: Closure) -> BigUint {
    if !d.is_connected() {
        return BigUint::zero();
    }
    if d.crossings.is_empty() {
        return BigUint::one();
    }
    let mut g = goeritz_from_diagram(d, closure, 0);
    g.pop();
    for row in &mut g {
        row.pop();
    }
    det_bigint(g).magnitude().clone()
}
