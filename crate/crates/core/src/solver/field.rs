/// Periodic field sampled at `x_j = origin + j·dx`, `j = 0…G−1`; the box
/// has length `G·dx` and `x_G` wraps onto `x_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridField {
    pub values: Vec<f64>,
    pub dx: f64,
    pub origin: f64,
}

impl GridField {
    pub fn new(values: Vec<f64>, dx: f64, origin: f64) -> Self {
        assert!(dx > 0.0, "grid spacing must be positive");
        Self { values, dx, origin }
    }

    pub fn sample(cells: usize, dx: f64, origin: f64, f: impl Fn(f64) -> f64) -> Self {
        Self::new((0..cells).map(|j| f(origin + j as f64 * dx)).collect(), dx, origin)
    }

    /// `cells` points covering `[left, right)`.
    pub fn on_box(left: f64, right: f64, cells: usize, f: impl Fn(f64) -> f64) -> Self {
        Self::sample(cells, (right - left) / cells as f64, left, f)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn x(&self, j: usize) -> f64 {
        self.origin + j as f64 * self.dx
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|j| self.x(j))
    }

    pub fn length(&self) -> f64 {
        self.len() as f64 * self.dx
    }

    /// `Σ_j u_j`
    pub fn mass(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &[f64]) -> f64 {
        assert_eq!(self.len(), other.len());
        self.values.iter().zip(other).fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}
