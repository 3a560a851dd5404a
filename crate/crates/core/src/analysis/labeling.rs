use crate::imgcore::{EdgeMap, Grid};

/// 8-connected components of an edge map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    /// 0 for background, otherwise `1..=component_count`.
    pub labels: Grid<u32>,
    pub component_count: usize,
    /// `component_sizes[i]` is the pixel count of label `i + 1`.
    pub component_sizes: Vec<usize>,
}

struct DisjointSet {
    parent: Vec<u32>,
}

impl DisjointSet {
    fn new() -> Self {
        // slot 0 is the background and never joins anything
        Self { parent: vec![0] }
    }

    fn make(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> u32 {
        let (ra, rb) = (self.find(a), self.find(b));
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        lo
    }
}

/// Two-pass union-find labeling under 8-adjacency. Labels are dense and
/// numbered in order of each component's first pixel in raster order.
pub fn label_components(edges: &EdgeMap) -> ComponentLabeling {
    let (w, h) = (edges.width(), edges.height());
    let mut provisional = vec![0u32; w * h];
    let mut sets = DisjointSet::new();

    for r in 0..h {
        for c in 0..w {
            if !*edges.get(r, c) {
                continue;
            }
            let mut label = 0u32;
            // already-visited neighbors: W, NW, N, NE
            let mut neighbors = [0u32; 4];
            if c > 0 {
                neighbors[0] = provisional[r * w + c - 1];
            }
            if r > 0 {
                let up = (r - 1) * w;
                if c > 0 {
                    neighbors[1] = provisional[up + c - 1];
                }
                neighbors[2] = provisional[up + c];
                if c + 1 < w {
                    neighbors[3] = provisional[up + c + 1];
                }
            }
            for n in neighbors.into_iter().filter(|&n| n != 0) {
                label = if label == 0 { n } else { sets.union(label, n) };
            }
            if label == 0 {
                label = sets.make();
            }
            provisional[r * w + c] = label;
        }
    }

    let mut dense = vec![0u32; sets.parent.len()];
    let mut sizes = Vec::new();
    let mut labels = provisional;
    for slot in labels.iter_mut() {
        if *slot == 0 {
            continue;
        }
        let root = sets.find(*slot) as usize;
        if dense[root] == 0 {
            sizes.push(0);
            dense[root] = sizes.len() as u32;
        }
        *slot = dense[root];
        sizes[*slot as usize - 1] += 1;
    }

    ComponentLabeling {
        labels: Grid::from_vec(w, h, labels).expect("shape preserved"),
        component_count: sizes.len(),
        component_sizes: sizes,
    }
}
