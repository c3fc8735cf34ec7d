use num_rational::Ratio;

/// Per-vertex maximum degree over an interval, and their exact average `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    d_max: Vec<u32>,
    sum: u64,
}

impl DegreeProfile {
    pub(crate) fn from_maxima(d_max: Vec<u32>) -> Self {
        let sum = d_max.iter().map(|&d| d as u64).sum();
        DegreeProfile { d_max, sum }
    }

    pub fn d_max(&self) -> &[u32] {
        &self.d_max
    }

    pub fn vertex_count(&self) -> usize {
        self.d_max.len()
    }

    /// `sum_v d_max(v)`, equal to `D * n`.
    pub fn degree_sum(&self) -> u64 {
        self.sum
    }

    /// The average temporal maximum degree as a reduced fraction.
    pub fn average(&self) -> Ratio<u64> {
        Ratio::new(self.sum, self.d_max.len() as u64)
    }

    pub fn average_f64(&self) -> f64 {
        self.sum as f64 / self.d_max.len() as f64
    }
}
