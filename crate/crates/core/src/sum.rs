//! Compensated summation.
//!
//! Neumaier's variant of Kahan summation. Every accumulator is sequential,
//! so results are bit-reproducible for a fixed term order.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
    abs: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Adds the total of another accumulator, keeping its absolute total.
    pub fn merge(&mut self, other: &Neumaier) {
        let abs = self.abs + other.abs;
        self.add(other.value());
        self.abs = abs;
    }

    /// Sum of absolute values of the added terms, for rounding estimates.
    pub fn abs_total(&self) -> f64 {
        self.abs
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierC {
    re: Neumaier,
    im: Neumaier,
}

impl NeumaierC {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub fn merge(&mut self, other: &NeumaierC) {
        self.re.merge(&other.re);
        self.im.merge(&other.im);
    }

    pub fn abs_total(&self) -> f64 {
        self.re.abs_total().hypot(self.im.abs_total())
    }
}

impl std::iter::FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

impl std::iter::FromIterator<Complex64> for NeumaierC {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = NeumaierC::new();
        for z in iter {
            acc.add(z);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_terms() {
        let acc: Neumaier = [1.0, 1e100, 1.0, -1e100].into_iter().collect();
        assert_eq!(acc.value(), 2.0);
    }

    #[test]
    fn complex_parts_are_independent() {
        let acc: NeumaierC = [Complex64::new(1.0, 1e20), Complex64::new(1e-16, -1e20)]
            .into_iter()
            .collect();
        assert_eq!(acc.value(), Complex64::new(1.0 + 1e-16, 0.0));
    }
}
