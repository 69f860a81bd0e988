use num_complex::Complex;

use super::{Complexv, Real};
use crate::error::{ensure_finite, Error, Result};

/// Agreement required between the `n` and `2n` tensor rules.
const REFINEMENT_TOL: f64 = 1e-9;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    /// Builds an `n`-point rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("rule order must be positive".into()));
        }
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let nf = n as f64;
        let one = T::one();
        let two = T::lit(2.0);
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th largest root.
            let theta = std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5);
            let mut x = T::lit((theta).cos() * (1.0 - (nf - 1.0) / (8.0 * nf.powi(3))));
            let mut dp = T::one();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x = x - dx;
                if dx.abs() <= T::epsilon() * (one + x.abs()) {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != T::zero() {
                dp = d;
            }
            let w = two / ((one - x * x) * dp * dp);
            nodes[n - 1 - i] = x;
            nodes[i] = -x;
            weights[n - 1 - i] = w;
            weights[i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = T::zero();
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped affinely onto `[a, b]`.
    pub fn mapped(&self, a: T, b: T) -> impl Iterator<Item = (T, T)> + '_ {
        let half = (b - a) * T::lit(0.5);
        let mid = (a + b) * T::lit(0.5);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    for k in 2..=n {
        let kf = T::from_usize_lossy(k);
        let next = ((T::lit(2.0) * kf - T::one()) * x * p - (kf - T::one()) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    if n == 0 {
        return (T::one(), T::zero());
    }
    let nf = T::from_usize_lossy(n);
    let d = nf * (x * p - p_prev) / (x * x - T::one());
    (p, d)
}

fn disk_ft_tensor<T: Real>(qr: T, order: usize) -> Result<Complexv<T>> {
    let rule = GaussLegendre::<T>::new(order)?;
    let two_pi = T::TAU();
    let mut re = T::zero();
    let mut im = T::zero();
    for (u, wu) in rule.mapped(T::zero(), T::one()) {
        let mut ang_re = T::zero();
        let mut ang_im = T::zero();
        for (phi, wphi) in rule.mapped(T::zero(), two_pi) {
            let (s, c) = (qr * u * phi.cos()).sin_cos();
            ang_re = ang_re + wphi * c;
            ang_im = ang_im - wphi * s;
        }
        re = re + wu * u * ang_re;
        im = im + wu * u * ang_im;
    }
    let norm = T::PI().recip();
    Ok(Complex::new(re * norm, im * norm))
}

/// Brute-force tensor Gauss–Legendre evaluation of the normalized disk
/// transform `(1/πR²) ∫₀ᴿ ∫₀^{2π} s e^{-i q s cos φ} dφ ds` in the
/// dimensionless variables `(s/R, φ)`.
///
/// Evaluates with `rule_order` and `2·rule_order` nodes per axis and
/// returns the finer value when the two agree to 1e-9.
pub fn disk_ft_oracle<T: Real>(qr: T, rule_order: usize) -> Result<Complexv<T>> {
    ensure_finite("qR", qr)?;
    if qr < T::zero() {
        return Err(Error::Domain(format!("qR must be non-negative, got {qr}")));
    }
    if rule_order == 0 {
        return Err(Error::Input("rule order must be positive".into()));
    }
    let coarse = disk_ft_tensor(qr, rule_order)?;
    let fine = disk_ft_tensor(qr, 2 * rule_order)?;
    let diff = (fine - coarse).norm();
    let tol = T::lit(REFINEMENT_TOL).max(T::lit(64.0) * T::epsilon());
    if !(diff <= tol) {
        return Err(Error::Accuracy { n: rule_order, n2: 2 * rule_order, diff: diff.to_f64_lossy() });
    }
    Ok(fine)
}
