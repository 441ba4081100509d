//! Planar convex hulls of complex points and tolerant membership tests.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

impl Membership {
    /// Inside or on the boundary.
    pub fn is_member(self) -> bool {
        self != Membership::Outside
    }
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Andrew's monotone chain. Counterclockwise, starting from the lowest
/// leftmost point, collinear points dropped. A point or a segment comes back
/// as one or two vertices.
pub fn convex_hull_2d(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = points
        .iter()
        .copied()
        .filter(|p| p.re.is_finite() && p.im.is_finite())
        .collect();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Complex64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Largest distance between two hull vertices.
pub fn diameter(hull: &[Complex64]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in hull.iter().enumerate() {
        for b in &hull[i + 1..] {
            d = d.max((a - b).norm());
        }
    }
    d
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> (f64, f64) {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((p - a).re * ab.re + (p - a).im * ab.im) / len2
    };
    let closest = a + ab * t.clamp(0.0, 1.0);
    ((p - closest).norm(), t)
}

/// Membership in the planar region bounded by `hull` (as returned by
/// [`convex_hull_2d`]). The boundary band has width `tol * (1 + diameter)`.
/// A point or segment hull has no interior, so its members are on the boundary.
pub fn point_in_hull(p: Complex64, hull: &[Complex64], tol: f64) -> Membership {
    let band = tol * (1.0 + diameter(hull));
    match hull.len() {
        0 => Membership::Outside,
        1 | 2 => {
            let b = *hull.last().unwrap();
            if segment_distance(p, hull[0], b).0 <= band {
                Membership::Boundary
            } else {
                Membership::Outside
            }
        }
        n => {
            let mut least = f64::INFINITY;
            for i in 0..n {
                let (a, b) = (hull[i], hull[(i + 1) % n]);
                let signed = cross(a, b, p) / (b - a).norm();
                least = least.min(signed);
            }
            if least < -band {
                Membership::Outside
            } else if least <= band {
                Membership::Boundary
            } else {
                Membership::Inside
            }
        }
    }
}

/// Like [`point_in_hull`] but relative to the affine span of the hull: the
/// open segment between two vertices counts as inside.
pub fn point_in_hull_relative(p: Complex64, hull: &[Complex64], tol: f64) -> Membership {
    if hull.len() != 2 {
        return point_in_hull(p, hull, tol);
    }
    let band = tol * (1.0 + diameter(hull));
    let (a, b) = (hull[0], hull[1]);
    let (dist, _) = segment_distance(p, a, b);
    if dist > band {
        Membership::Outside
    } else if (p - a).norm() <= band || (p - b).norm() <= band {
        Membership::Boundary
    } else {
        Membership::Inside
    }
}
