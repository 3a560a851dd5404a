//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use edgeforge::imgcore::{EdgeMap, Grid, Image};

/// Otsu cut by scanning every pixel for every candidate threshold, with the
/// between-class variance compared as exact fractions.
pub fn otsu_brute_force(image: &Image) -> Option<u8> {
    let px: Vec<u64> = image.data().iter().map(|&v| (v + 0.5).floor() as u64).collect();
    let mut best: Option<(u8, u128, u128)> = None;
    for t in 0..255u64 {
        let (mut n0, mut n1, mut s0, mut s1) = (0u128, 0u128, 0u128, 0u128);
        for &p in &px {
            if p <= t {
                n0 += 1;
                s0 += p as u128;
            } else {
                n1 += 1;
                s1 += p as u128;
            }
        }
        if n0 == 0 || n1 == 0 {
            continue;
        }
        // ω0 ω1 (μ0 − μ1)² ∝ (s0 n1 − s1 n0)² / (n0 n1)
        let d = (s0 * n1).abs_diff(s1 * n0);
        let num = d * d;
        let den = n0 * n1;
        let better = match best {
            None => true,
            Some((_, bn, bd)) => num * bd > bn * den,
        };
        if better {
            best = Some((t as u8, num, den));
        }
    }
    best.map(|b| b.0)
}

/// Partition of edge pixels into 8-connected sets by iterative flood fill.
/// Returns one sorted pixel-index list per component, sorted by first index.
pub fn flood_fill_partition(map: &EdgeMap) -> Vec<Vec<usize>> {
    let (w, h) = (map.width(), map.height());
    let mut seen = vec![false; w * h];
    let mut parts = Vec::new();
    for start in 0..w * h {
        if !map.data()[start] || seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            let (r, c) = ((i / w) as isize, (i % w) as isize);
            for dr in -1..=1 {
                for dc in -1..=1 {
                    let (nr, nc) = (r + dr, c + dc);
                    if nr < 0 || nc < 0 || nr >= h as isize || nc >= w as isize {
                        continue;
                    }
                    let j = nr as usize * w + nc as usize;
                    if map.data()[j] && !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        comp.sort_unstable();
        parts.push(comp);
    }
    parts
}

/// Partition implied by a label grid, in the same canonical form.
pub fn partition_from_labels(labels: &Grid<u32>) -> Vec<Vec<usize>> {
    let max = labels.data().iter().copied().max().unwrap_or(0) as usize;
    let mut parts = vec![Vec::new(); max];
    for (i, &l) in labels.data().iter().enumerate() {
        if l > 0 {
            parts[l as usize - 1].push(i);
        }
    }
    parts.sort_by_key(|p| p.first().copied());
    parts
}

/// Binary 4x4 map from the low 16 bits of `bits`.
pub fn map_4x4(bits: u32) -> EdgeMap {
    Grid::from_fn(4, 4, |r, c| bits >> (r * 4 + c) & 1 == 1).unwrap()
}

/// 64x64 black frame with a centered 32x32 white square.
pub fn square_fixture() -> Image {
    Grid::from_fn(64, 64, |r, c| {
        if (16..48).contains(&r) && (16..48).contains(&c) {
            255.0
        } else {
            0.0
        }
    })
    .unwrap()
}

/// Chebyshev distance from pixel `(r, c)` to the square's one-pixel-thick
/// boundary (rows/cols 16 and 47).
pub fn distance_to_square_boundary(r: usize, c: usize) -> usize {
    let (r, c) = (r as i64, c as i64);
    let inside = (16..48).contains(&r) && (16..48).contains(&c);
    let d = if inside {
        (r - 16).min(47 - r).min(c - 16).min(47 - c)
    } else {
        let dr = if r < 16 {
            16 - r
        } else if r > 47 {
            r - 47
        } else {
            0
        };
        let dc = if c < 16 {
            16 - c
        } else if c > 47 {
            c - 47
        } else {
            0
        };
        dr.max(dc)
    };
    d as usize
}
