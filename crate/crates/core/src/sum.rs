//! Compensated accumulation.
//!
//! Every reduction that feeds a reported number goes through [`Compensated`]
//! in a fixed order, so results are bit-identical across runs and thread
//! counts.

use std::ops::{Add, Sub};

/// Kahan–Babuška (Neumaier) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated<V> {
    sum: V,
    comp: V,
}

impl<V> Compensated<V>
where
    V: Copy + Default + Add<Output = V> + Sub<Output = V> + Magnitude,
{
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: V) {
        let t = self.sum + x;
        if self.sum.magnitude() >= x.magnitude() {
            self.comp = self.comp + ((self.sum - t) + x);
        } else {
            self.comp = self.comp + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> V {
        self.sum + self.comp
    }
}

impl<V> FromIterator<V> for Compensated<V>
where
    V: Copy + Default + Add<Output = V> + Sub<Output = V> + Magnitude,
{
    fn from_iter<I: IntoIterator<Item = V>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Sums an iterator left to right with compensation.
pub fn compensated_sum<V, I>(iter: I) -> V
where
    I: IntoIterator<Item = V>,
    V: Copy + Default + Add<Output = V> + Sub<Output = V> + Magnitude,
{
    iter.into_iter().collect::<Compensated<V>>().value()
}

/// Size of a value, used to pick the compensation branch and by the
/// quadrature error control.
pub trait Magnitude {
    fn magnitude(&self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Magnitude for num_complex::Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_lost_low_bits() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(compensated_sum(xs), 2.0);
        assert_eq!(xs.iter().sum::<f64>(), 0.0);
    }

    #[test]
    fn many_small_terms() {
        let s = compensated_sum(std::iter::repeat_n(0.1, 1_000_000));
        assert!((s - 100_000.0).abs() < 1e-9);
    }
}
