//! Gauss–Legendre nodes and the product rule on `S^2`.

use std::f64::consts::PI;

use super::WeightedDesign;
use crate::error::Result;
use crate::geometry::Space;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[−1, 1]`,
/// exact for polynomials of degree `≤ 2n − 1`. Nodes ascend; weights sum to 2.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let dp = legendre_with_derivative(n, x).1;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A weighted `t`-design on `S^2`: Gauss–Legendre in the height times a regular
/// `(t+1)`-gon in the azimuth.
pub fn gauss_product_s2(t: usize) -> Result<WeightedDesign> {
    let (heights, gl) = gauss_legendre(t / 2 + 1);
    let ring = t + 1;
    let mut points = Vec::with_capacity(heights.len() * ring);
    let mut weights = Vec::with_capacity(points.capacity());
    for (z, w) in heights.iter().zip(&gl) {
        let r = (1.0 - z * z).sqrt();
        for j in 0..ring {
            let (s, c) = (2.0 * PI * j as f64 / ring as f64).sin_cos();
            points.push(vec![r * c, r * s, *z]);
            weights.push(w / 2.0 / ring as f64);
        }
    }
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Ok(WeightedDesign::new(Space::sphere(2), points, weights)?
        .with_name(format!("gauss_product_s2({t})"))
        .with_claimed_strength(Some(t)))
}
