use std::collections::VecDeque;

use super::gradient::GradientField;
use super::threshold::HysteresisThresholds;
use crate::imgcore::{EdgeMap, Field, Grid, Padding};

/// Keeps a pixel's magnitude iff it is `>=` both neighbors along its
/// quantized direction; out-of-range neighbors replicate the border.
pub fn non_max_suppression(field: &GradientField) -> Field {
    let mag = &field.magnitude;
    let (w, h) = (mag.width(), mag.height());
    let mut out = mag.clone();
    for r in 0..h {
        for c in 0..w {
            let m = *mag.get(r, c);
            if m == 0.0 {
                continue;
            }
            let (dr, dc) = field.orientation.get(r, c).step();
            let (ri, ci) = (r as isize, c as isize);
            let ahead = mag.sample(ri + dr, ci + dc, Padding::Replicate);
            let behind = mag.sample(ri - dr, ci - dc, Padding::Replicate);
            if m < ahead || m < behind {
                out.set(r, c, 0.0);
            }
        }
    }
    out
}

/// Double-threshold edge tracking.
///
/// Pixels `>= high` are strong, pixels in `[low, high)` weak. The result
/// holds every strong pixel plus every weak pixel reachable from one
/// through an 8-connected chain of weak or strong pixels.
pub fn hysteresis(suppressed: &Field, th: &HysteresisThresholds) -> EdgeMap {
    track(suppressed, th, |_| true)
}

/// Hysteresis that also requires a strictly positive value, so pixels
/// removed by suppression can never be tracked even when a threshold is 0.
pub fn hysteresis_nonzero(suppressed: &Field, th: &HysteresisThresholds) -> EdgeMap {
    track(suppressed, th, |v| v > 0.0)
}

fn track(field: &Field, th: &HysteresisThresholds, eligible: impl Fn(f64) -> bool) -> EdgeMap {
    let (w, h) = (field.width(), field.height());
    let low = f64::from(th.low);
    let high = f64::from(th.high);
    let candidate = |v: f64| v >= low && eligible(v);

    let mut edges = vec![false; w * h];
    let mut queue = VecDeque::new();
    for (i, &v) in field.data().iter().enumerate() {
        if v >= high && candidate(v) {
            edges[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        let (r, c) = (i / w, i % w);
        for nr in r.saturating_sub(1)..=(r + 1).min(h - 1) {
            for nc in c.saturating_sub(1)..=(c + 1).min(w - 1) {
                let j = nr * w + nc;
                if !edges[j] && candidate(field.data()[j]) {
                    edges[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    Grid::from_vec(w, h, edges).expect("shape preserved")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canny::gradient::Direction;

    fn field_with(mag: Grid<f64>, dir: Direction) -> GradientField {
        let zero = mag.map(|_| 0.0);
        GradientField {
            orientation: mag.map(|_| dir),
            gx: zero.clone(),
            gy: zero,
            magnitude: mag,
        }
    }

    #[test]
    fn thin_ridge_survives() {
        let mag = Grid::from_fn(5, 5, |_, c| if c == 2 { 10.0 } else { 0.0 }).unwrap();
        let out = non_max_suppression(&field_with(mag.clone(), Direction::Deg0));
        assert_eq!(out, mag);
    }

    #[test]
    fn plateau_is_kept() {
        let mag = Grid::from_fn(7, 3, |_, c| if (2..5).contains(&c) { 9.0 } else { 0.0 }).unwrap();
        let out = non_max_suppression(&field_with(mag.clone(), Direction::Deg0));
        assert_eq!(out, mag);
    }

    #[test]
    fn wide_ridge_keeps_larger_column() {
        let mag = Grid::from_fn(5, 5, |_, c| match c {
            1 => 5.0,
            2 => 8.0,
            _ => 0.0,
        })
        .unwrap();
        let out = non_max_suppression(&field_with(mag, Direction::Deg0));
        for r in 0..5 {
            assert_eq!(out.row(r), &[0.0, 0.0, 8.0, 0.0, 0.0]);
        }
    }

    #[test]
    fn diagonal_neighbors() {
        // 45° compares (r-1, c-1) and (r+1, c+1)
        let mut mag = Grid::filled(3, 3, 0.0).unwrap();
        mag.set(1, 1, 5.0);
        mag.set(2, 2, 6.0);
        let out = non_max_suppression(&field_with(mag.clone(), Direction::Deg45));
        assert_eq!(*out.get(1, 1), 0.0);
        // under 135° the same neighbor is off-axis
        let out = non_max_suppression(&field_with(mag, Direction::Deg135));
        assert_eq!(*out.get(1, 1), 5.0);
    }

    #[test]
    fn hysteresis_basics() {
        let th = HysteresisThresholds { low: 50, high: 100 };
        let mut f = Grid::filled(5, 3, 0.0).unwrap();
        f.set(0, 0, 100.0);
        f.set(2, 4, 50.0);
        let e = hysteresis(&f, &th);
        assert!(*e.get(0, 0));
        assert!(!*e.get(2, 4));
        assert_eq!(e.count(), 1);
    }

    #[test]
    fn weak_chain_attached_to_strong() {
        let th = HysteresisThresholds { low: 50, high: 100 };
        let mut f = Grid::filled(5, 3, 0.0).unwrap();
        f.set(0, 0, 120.0);
        f.set(1, 1, 60.0);
        f.set(2, 2, 55.0);
        f.set(2, 4, 49.0);
        let e = hysteresis(&f, &th);
        assert_eq!(e.count(), 3);
        assert!(*e.get(1, 1) && *e.get(2, 2));
        assert!(!*e.get(2, 4));
    }

    #[test]
    fn zero_thresholds() {
        let th = HysteresisThresholds { low: 0, high: 0 };
        let mut f = Grid::filled(3, 3, 0.0).unwrap();
        f.set(1, 1, 3.0);
        assert_eq!(hysteresis(&f, &th).count(), 9);
        assert_eq!(hysteresis_nonzero(&f, &th).count(), 1);
    }
}
