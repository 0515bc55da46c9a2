//! Polynomial root finding with multiplicity clustering.
//!
//! Roots are located by the Aberth-Ehrlich simultaneous iteration and then
//! grouped into multiplicity clusters. An m-fold root of a double-precision
//! polynomial splits into a cloud of radius about `eps^(1/m)` (1e-8 for
//! doubles, 1e-4 for triples), so nearby roots are merged only after the
//! multiple-root hypothesis validates: the candidate center is refined by
//! Newton steps on the (m-1)-th derivative and accepted when the polynomial
//! residual there is at rounding level. Distinct roots that merely sit close
//! fail that test and stay separate.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::poly::Polynomial;

/// Largest center distance (relative to `max(1, |root|)`) at which two root
/// clusters are considered for merging into a multiple root.
pub const MERGE_SCAN_RADIUS: f64 = 1e-3;

/// Residual threshold, relative to the Horner magnitude bound, below which a
/// refined cluster center is accepted as a true multiple root.
const MERGE_RESIDUAL_TOL: f64 = 1e-9;

/// Imaginary parts below this (relative) size snap onto the real axis.
const REAL_SNAP_TOL: f64 = 1e-8;

const ABERTH_MAX_ITER: usize = 400;
const ZERO_ROOT_TOL: f64 = 1e-12;

/// One root location with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pole {
    pub location: Complex64,
    pub multiplicity: usize,
}

/// Roots of a polynomial, conjugate-symmetric for real-coefficient input.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleSet {
    poles: Vec<Pole>,
}

impl PoleSet {
    pub fn poles(&self) -> &[Pole] {
        &self.poles
    }

    /// Sum of multiplicities (equals the degree of the source polynomial).
    pub fn total_multiplicity(&self) -> usize {
        self.poles.iter().map(|p| p.multiplicity).sum()
    }

    /// Highest multiplicity present.
    pub fn max_multiplicity(&self) -> usize {
        self.poles.iter().map(|p| p.multiplicity).max().unwrap_or(0)
    }
}

/// Finds all roots of `q`, clustered by multiplicity.
///
/// Fails on constant or zero polynomials and when the iteration does not
/// settle (which does not occur for the well-separated, modest-degree
/// polynomials this crate produces).
pub fn poly_roots(q: &Polynomial) -> Result<PoleSet, Error> {
    let trimmed = q.trim_relative(1e-13);
    let degree = match trimmed.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if !trimmed.is_finite() {
        return Err(Error::NonFinite("polynomial coefficient"));
    }

    // Roots at the origin are read off the low-order coefficients exactly.
    let scale = trimmed.max_abs_coeff();
    let mut origin_mult = 0;
    while origin_mult < degree && trimmed.coeff(origin_mult).abs() <= ZERO_ROOT_TOL * scale {
        origin_mult += 1;
    }

    let reduced: Vec<f64> = trimmed.coeffs()[origin_mult..].to_vec();
    let raw = if reduced.len() > 1 {
        aberth(&reduced)?
    } else {
        Vec::new()
    };

    let mut clusters: Vec<Pole> = raw
        .iter()
        .map(|&location| Pole {
            location,
            multiplicity: 1,
        })
        .collect();
    if origin_mult > 0 {
        clusters.push(Pole {
            location: Complex64::new(0.0, 0.0),
            multiplicity: origin_mult,
        });
    }

    merge_multiples(&trimmed, &mut clusters);
    symmetrize_conjugates(&mut clusters);
    clusters.sort_by(|a, b| {
        (a.location.re, a.location.im)
            .partial_cmp(&(b.location.re, b.location.im))
            .unwrap_or(core::cmp::Ordering::Equal)
    });

    Ok(PoleSet { poles: clusters })
}

/// Rebuilds the real polynomial `leading * prod (p - r_i)^{m_i}` from a
/// conjugate-symmetric pole set. Poles in the lower half-plane are implied by
/// their upper-half partners and skipped.
pub fn reconstruct(poles: &PoleSet, leading: f64) -> Polynomial {
    let mut out = Polynomial::constant(leading);
    for pole in &poles.poles {
        if pole.location.im < 0.0 {
            continue;
        }
        let factor = if pole.location.im == 0.0 {
            Polynomial::new([-pole.location.re, 1.0].to_vec())
        } else {
            let a = pole.location.re;
            let b = pole.location.im;
            Polynomial::new([a * a + b * b, -2.0 * a, 1.0].to_vec())
        };
        for _ in 0..pole.multiplicity {
            out = &out * &factor;
        }
    }
    out
}

/// Aberth-Ehrlich iteration on a nonconstant polynomial with nonzero
/// constant term. Returns unclustered root approximations.
fn aberth(coeffs: &[f64]) -> Result<Vec<Complex64>, Error> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return Ok([Complex64::new(-monic[0], 0.0)].to_vec());
    }
    if n == 2 {
        return Ok(quadratic_roots(monic[0], monic[1]).to_vec());
    }

    let deriv: Vec<f64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect();

    // Initial guesses on a circle inside the Cauchy bound, with an angular
    // offset so real-axis symmetry cannot trap the iteration.
    let radius = 1.0 + monic[..n].iter().fold(0.0_f64, |m, &c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = core::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * 0.8, theta)
        })
        .collect();

    for _ in 0..ABERTH_MAX_ITER {
        let mut settled = true;
        for i in 0..n {
            let pz = eval_c(&monic, z[i]);
            let residual_scale = eval_magnitude(&monic, z[i].norm());
            if pz.norm() <= 1e-13 * residual_scale {
                continue; // at roundoff level; no further progress possible
            }
            let dpz = eval_c(&deriv, z[i]);
            let newton = if dpz.norm() == 0.0 {
                // stationary point; nudge off it
                let nudge = 1e-8 * (1.0 + z[i].norm());
                z[i] += Complex64::new(nudge, 1e-8);
                settled = false;
                continue;
            } else {
                pz / dpz
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    repulsion += (z[i] - z[j]).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[i] -= step;
            if !z[i].re.is_finite() || !z[i].im.is_finite() {
                return Err(Error::RootsNotConverged);
            }
            if step.norm() > 1e-14 * (1.0 + z[i].norm()) {
                settled = false;
            }
        }
        if settled {
            return Ok(z);
        }
    }

    // Accept the final iterate if every residual is at noise level.
    let ok = z
        .iter()
        .all(|&zi| eval_c(&monic, zi).norm() <= 1e-10 * eval_magnitude(&monic, zi.norm()));
    if ok {
        Ok(z)
    } else {
        Err(Error::RootsNotConverged)
    }
}

/// Roots of `p^2 + b p + a` via the numerically stable quadratic formula.
fn quadratic_roots(a: f64, b: f64) -> [Complex64; 2] {
    let disc = b * b - 4.0 * a;
    if disc >= 0.0 {
        let q = -0.5 * (b + b.signum() * disc.sqrt());
        let r1 = if q != 0.0 { a / q } else { 0.0 };
        let r2 = if b != 0.0 { q } else { -r1 };
        [Complex64::new(r1, 0.0), Complex64::new(r2, 0.0)]
    } else {
        let re = -0.5 * b;
        let im = 0.5 * (-disc).sqrt();
        [Complex64::new(re, im), Complex64::new(re, -im)]
    }
}

fn eval_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Bound on the magnitude reachable by Horner roundoff: sum |c_k| r^k.
fn eval_magnitude(coeffs: &[f64], r: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs())
}

/// Repeatedly merges the closest cluster pair whose combined multiple-root
/// hypothesis validates against the polynomial, nearest pairs first.
fn merge_multiples(q: &Polynomial, clusters: &mut Vec<Pole>) {
    loop {
        let mut pairs: Vec<(usize, usize, f64)> = Vec::new();
        for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let d = (clusters[i].location - clusters[j].location).norm();
                let scale = 1.0_f64
                    .max(clusters[i].location.norm())
                    .max(clusters[j].location.norm());
                if d <= MERGE_SCAN_RADIUS * scale {
                    pairs.push((i, j, d));
                }
            }
        }
        pairs.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap_or(core::cmp::Ordering::Equal));

        let mut committed = false;
        for (i, j, _) in pairs {
            let ni = clusters[i].multiplicity;
            let nj = clusters[j].multiplicity;
            let centroid = (clusters[i].location * ni as f64 + clusters[j].location * nj as f64)
                / (ni + nj) as f64;
            if let Some(refined) = validate_multiple(q, centroid, ni + nj) {
                clusters[i] = Pole {
                    location: refined,
                    multiplicity: ni + nj,
                };
                clusters.swap_remove(j);
                committed = true;
                break;
            }
        }
        if !committed {
            return;
        }
    }
}

/// Refines a candidate m-fold root by Newton iteration on the (m-1)-th
/// derivative and accepts it when the polynomial residual there is at
/// rounding level. Between two genuinely distinct roots the derivative also
/// vanishes (Rolle), but the polynomial itself does not — that case is
/// rejected here.
fn validate_multiple(q: &Polynomial, center: Complex64, multiplicity: usize) -> Option<Complex64> {
    let mut g = q.clone();
    for _ in 0..multiplicity - 1 {
        g = g.derivative();
    }
    let dg = g.derivative();
    let mut z = center;
    for _ in 0..60 {
        let gz = g.eval_complex(z);
        let dgz = dg.eval_complex(z);
        if dgz.norm() == 0.0 {
            break;
        }
        let step = gz / dgz;
        z -= step;
        if step.norm() <= 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    if (z - center).norm() > 10.0 * MERGE_SCAN_RADIUS * (1.0 + center.norm()) {
        return None; // refinement escaped the cluster's basin
    }
    let residual = q.eval_complex(z).norm();
    if residual <= MERGE_RESIDUAL_TOL * eval_magnitude(q.coeffs(), z.norm()) {
        Some(z)
    } else {
        None
    }
}

/// Snaps near-real roots onto the axis and averages conjugate partners so the
/// returned set is exactly symmetric.
fn symmetrize_conjugates(clusters: &mut [Pole]) {
    let n = clusters.len();
    for pole in clusters.iter_mut() {
        let tol = REAL_SNAP_TOL * (1.0 + pole.location.norm());
        if pole.location.im.abs() <= tol {
            pole.location.im = 0.0;
        }
    }
    let mut paired = alloc::vec![false; n];
    for i in 0..n {
        if paired[i] || clusters[i].location.im <= 0.0 {
            continue;
        }
        let zi = clusters[i].location;
        let tol = REAL_SNAP_TOL * (1.0 + zi.norm()) * 100.0;
        for j in 0..n {
            if i == j || paired[j] || clusters[j].location.im >= 0.0 {
                continue;
            }
            let zj = clusters[j].location;
            if clusters[j].multiplicity == clusters[i].multiplicity
                && (zi - zj.conj()).norm() <= tol
            {
                let re = 0.5 * (zi.re + zj.re);
                let im = 0.5 * (zi.im - zj.im);
                clusters[i].location = Complex64::new(re, im);
                clusters[j].location = Complex64::new(re, -im);
                paired[i] = true;
                paired[j] = true;
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn residual_ok(q: &Polynomial, poles: &PoleSet) {
        for pole in poles.poles() {
            let r = q.eval_complex(pole.location).norm();
            let scale = eval_magnitude(q.coeffs(), pole.location.norm());
            assert!(
                r <= 1e-8 * scale,
                "residual {r} too large at {:?}",
                pole.location
            );
        }
    }

    #[test]
    fn quadratic_with_imaginary_pair() {
        // p^2 + 16
        let q = Polynomial::new(vec![16.0, 0.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 2);
        let mut ims: Vec<f64> = roots.poles().iter().map(|p| p.location.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 4.0).abs() <= 1e-12);
        assert!((ims[1] - 4.0).abs() <= 1e-12);
        assert!(roots.poles().iter().all(|p| p.location.re.abs() <= 1e-12));
        residual_ok(&q, &roots);
    }

    #[test]
    fn linear_factor() {
        let q = Polynomial::new(vec![1.0, 1.0]); // p + 1
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 1);
        assert_eq!(roots.poles()[0].multiplicity, 1);
        assert!((roots.poles()[0].location - Complex64::new(-1.0, 0.0)).norm() <= 1e-14);
    }

    #[test]
    fn double_root_is_clustered() {
        // (p + 1)^2 = p^2 + 2p + 1
        let q = Polynomial::new(vec![1.0, 2.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 1);
        assert_eq!(roots.poles()[0].multiplicity, 2);
        assert!((roots.poles()[0].location - Complex64::new(-1.0, 0.0)).norm() <= 1e-10);
    }

    #[test]
    fn triple_root_is_clustered_and_refined() {
        // (p + 2)^3 = p^3 + 6p^2 + 12p + 8
        let q = Polynomial::new(vec![8.0, 12.0, 6.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 1);
        assert_eq!(roots.poles()[0].multiplicity, 3);
        assert!((roots.poles()[0].location - Complex64::new(-2.0, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn double_imaginary_pair() {
        // (p^2 + 16)^2
        let base = Polynomial::new(vec![16.0, 0.0, 1.0]);
        let q = &base * &base;
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 2);
        assert!(roots.poles().iter().all(|p| p.multiplicity == 2));
    }

    #[test]
    fn close_but_distinct_roots_stay_separate() {
        // (p + 1)(p + 1.0005): 5e-4 apart, within the merge scan radius but
        // resolvable in double precision.
        let q = &Polynomial::new(vec![1.0, 1.0]) * &Polynomial::new(vec![1.0005, 1.0]);
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 2);
        assert!(roots.poles().iter().all(|p| p.multiplicity == 1));
    }

    #[test]
    fn origin_roots_are_exact() {
        // p^2 (p + 1)
        let q = &Polynomial::monomial(2) * &Polynomial::new(vec![1.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        let zero = roots
            .poles()
            .iter()
            .find(|p| p.location.norm() == 0.0)
            .expect("origin root");
        assert_eq!(zero.multiplicity, 2);
        assert_eq!(roots.total_multiplicity(), 3);
    }

    #[test]
    fn rejects_constant_and_zero() {
        assert_eq!(
            poly_roots(&Polynomial::constant(3.0)),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(poly_roots(&Polynomial::zero()), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn mixed_real_and_complex_roots() {
        // (p + 1)(p^2 + 16)
        let q = &Polynomial::new(vec![1.0, 1.0]) * &Polynomial::new(vec![16.0, 0.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.poles().len(), 3);
        assert_eq!(roots.max_multiplicity(), 1);
        residual_ok(&q, &roots);
    }

    #[test]
    fn reconstruct_round_trip() {
        let q = &(&Polynomial::new(vec![2.0, 1.0]) * &Polynomial::new(vec![5.0, 2.0, 1.0]))
            * &Polynomial::new(vec![-3.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        let back = reconstruct(&roots, q.leading());
        for k in 0..q.coeffs().len() {
            assert!(
                (back.coeff(k) - q.coeff(k)).abs() <= 1e-10 * q.max_abs_coeff(),
                "coefficient {k} mismatch: {} vs {}",
                back.coeff(k),
                q.coeff(k)
            );
        }
    }

    #[test]
    fn higher_degree_well_separated() {
        // roots -1, -2, -3 and two imaginary pairs
        let mut q = Polynomial::one();
        for r in [1.0, 2.0, 3.0] {
            q = &q * &Polynomial::new(vec![r, 1.0]);
        }
        q = &q * &Polynomial::new(vec![16.0, 0.0, 1.0]);
        q = &q * &Polynomial::new(vec![1.0, 0.0, 1.0]);
        let roots = poly_roots(&q).unwrap();
        assert_eq!(roots.total_multiplicity(), 7);
        assert_eq!(roots.poles().len(), 7);
        residual_ok(&q, &roots);
    }
}
