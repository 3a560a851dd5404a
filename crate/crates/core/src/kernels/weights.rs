use serde::{Deserialize, Serialize};

use super::kernel::gcd;
use crate::error::{Error, Result};

/// Integer neighborhood weights over a `(2L+1)²` window.
///
/// Only ratios matter to the fit, so weights are kept in their minimal
/// integer form. The center cell is a placeholder and is stored as 0; the
/// derivative estimators never read it because both offsets are 0 there.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightMatrix {
    radius: usize,
    weights: Vec<u64>,
}

impl WeightMatrix {
    /// Validates 4-fold mirror symmetry. Whatever is passed for the center
    /// cell is discarded.
    pub fn new(radius: usize, mut weights: Vec<u64>) -> Result<Self> {
        if radius == 0 {
            return Err(Error::InvalidWeights("radius must be at least 1".into()));
        }
        let side = 2 * radius + 1;
        if weights.len() != side * side {
            return Err(Error::InvalidWeights(format!(
                "{} weights for a {side}x{side} window",
                weights.len()
            )));
        }
        weights[radius * side + radius] = 0;
        let m = Self { radius, weights };
        let l = radius as isize;
        for r in -l..=l {
            for c in -l..=l {
                let w = m.at(r, c);
                if w != m.at(-r, c) || w != m.at(r, -c) {
                    return Err(Error::InvalidWeights(format!(
                        "weights are not mirror-symmetric at offset ({r}, {c})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn(radius: usize, mut f: impl FnMut(isize, isize) -> u64) -> Result<Self> {
        let l = radius as isize;
        let weights = (-l..=l)
            .flat_map(|r| (-l..=l).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        Self::new(radius, weights)
    }

    /// Every off-center weight equal to 1.
    pub fn uniform(radius: usize) -> Result<Self> {
        Self::from_fn(radius, |_, _| 1)
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn side(&self) -> usize {
        2 * self.radius + 1
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn at(&self, r: isize, c: isize) -> u64 {
        let l = self.radius as isize;
        self.weights[((r + l) as usize) * self.side() + (c + l) as usize]
    }

    /// True when every off-center weight is nonzero.
    pub fn is_positive(&self) -> bool {
        let center = self.radius * self.side() + self.radius;
        self.weights.iter().enumerate().all(|(i, &w)| i == center || w > 0)
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.weights.chunks(self.side()).map(<[u64]>::to_vec).collect()
    }

    /// Off-center `(r, c, weight)` triples in raster order.
    pub fn offsets(&self) -> impl Iterator<Item = (isize, isize, u64)> + '_ {
        let l = self.radius as isize;
        (-l..=l)
            .flat_map(move |r| (-l..=l).map(move |c| (r, c)))
            .filter(|&(r, c)| (r, c) != (0, 0))
            .map(|(r, c)| (r, c, self.at(r, c)))
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a as i64, b as i64) as u128 * b
}

/// Weights proportional to `1 / (r² + c²)`, scaled to the smallest
/// all-integer matrix.
pub fn build_weights_inverse_distance(radius: usize) -> Result<WeightMatrix> {
    if radius == 0 {
        return Err(Error::InvalidWeights("radius must be at least 1".into()));
    }
    let l = radius as i64;
    let mut common: u128 = 1;
    for r in 0..=l {
        for c in 0..=l {
            if (r, c) != (0, 0) {
                common = lcm(common, (r * r + c * c) as u128);
                if common > u64::MAX as u128 {
                    return Err(Error::Unsupported(format!(
                        "inverse-distance weights for radius {radius} overflow 64-bit integers"
                    )));
                }
            }
        }
    }
    WeightMatrix::from_fn(radius, |r, c| {
        let d2 = (r * r + c * c) as u128;
        common.checked_div(d2).map_or(0, |w| w as u64)
    })
}

/// The axis-favoring radial scheme. Only the published 3x3 and 5x5 windows
/// are defined; the written rule does not pin down larger ones.
pub fn build_weights_radial(radius: usize) -> Result<WeightMatrix> {
    match radius {
        1 => WeightMatrix::new(1, vec![1, 2, 1, 2, 0, 2, 1, 2, 1]),
        2 => WeightMatrix::from_fn(2, |r, c| if r == 0 || c == 0 { 2 } else { 1 }),
        _ => Err(Error::Unsupported(format!(
            "radial weights are only defined for radius 1 and 2, got {radius}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_distance_small_windows() {
        let w1 = build_weights_inverse_distance(1).unwrap();
        assert_eq!(w1.rows(), vec![vec![1, 2, 1], vec![2, 0, 2], vec![1, 2, 1]]);
        assert_eq!(w1.at(1, 1) * 2, w1.at(1, 0));

        let w2 = build_weights_inverse_distance(2).unwrap();
        assert_eq!(
            w2.rows(),
            vec![
                vec![5, 8, 10, 8, 5],
                vec![8, 20, 40, 20, 8],
                vec![10, 40, 0, 40, 10],
                vec![8, 20, 40, 20, 8],
                vec![5, 8, 10, 8, 5],
            ]
        );
    }

    #[test]
    fn inverse_distance_larger_radius_is_proportional() {
        let w = build_weights_inverse_distance(3).unwrap();
        for (r, c, v) in w.offsets() {
            // v · d² is the same constant everywhere
            assert_eq!(v * (r * r + c * c) as u64, w.at(0, 1));
        }
        assert!(build_weights_inverse_distance(0).is_err());
    }

    #[test]
    fn inverse_distance_overflow_is_reported() {
        assert!(matches!(build_weights_inverse_distance(8), Err(Error::Unsupported(_))));
    }

    #[test]
    fn radial_published_windows() {
        assert_eq!(
            build_weights_radial(1).unwrap(),
            build_weights_inverse_distance(1).unwrap()
        );
        let w2 = build_weights_radial(2).unwrap();
        assert_eq!(
            w2.rows(),
            vec![
                vec![1, 1, 2, 1, 1],
                vec![1, 1, 2, 1, 1],
                vec![2, 2, 0, 2, 2],
                vec![1, 1, 2, 1, 1],
                vec![1, 1, 2, 1, 1],
            ]
        );
        assert!(matches!(build_weights_radial(3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn symmetry_is_enforced_and_center_dropped() {
        assert!(WeightMatrix::new(1, vec![1, 2, 3, 2, 9, 2, 1, 2, 3]).is_err());
        let m = WeightMatrix::new(1, vec![1, 2, 1, 2, 99, 2, 1, 2, 1]).unwrap();
        assert_eq!(m.at(0, 0), 0);
        assert!(m.is_positive());
        assert!(!WeightMatrix::new(1, vec![0; 9]).unwrap().is_positive());
    }
}
