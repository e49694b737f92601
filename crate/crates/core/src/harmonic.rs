//! Three particles in a one-dimensional harmonic trap with an infinitely
//! strong three-body contact interaction.
//!
//! In Jacobi polar coordinates `(ρ, φ)` the relative Hamiltonian is a 2D
//! oscillator with the origin removed, so `E = 2ν + λ + 1` (units `ħω = 1`,
//! oscillator length 1). The two-body coincidence rays sit at `φ = jπ/3`.
//! With `φ` measured by `tan φ = √3 (x1 - x2) / (x1 + x2 - 2 x3)`, the rays
//! with even `j` exchange the two rightmost particles (`t2`) and those with odd
//! `j` exchange the two leftmost (`t1`). A generator with sign `+1` imposes a
//! Neumann condition on its rays, sign `-1` a Dirichlet condition.
//!
//! Mixed representations give half-integer `λ`; their wave functions live on
//! the double cover `φ ∈ [0, 4π)` and change sign across the branch cut along
//! the positive `x` axis.

use std::f64::consts::{FRAC_PI_3, PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::reps::AbelianRep;
use crate::svg::{Segment, Svg};

/// A non-negative multiple of one half, stored exactly as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const fn from_halves(halves: u32) -> Self {
        HalfInt(halves)
    }

    pub const fn from_int(n: u32) -> Self {
        HalfInt(2 * n)
    }

    pub fn halves(self) -> u32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3"`, `"3/2"` and `"1.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_string(),
            reason: "expected a non-negative multiple of 1/2".into(),
        };
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "1" => Ok(HalfInt(2 * num)),
                "2" => Ok(HalfInt(num)),
                _ => Err(bad()),
            };
        }
        if let Ok(n) = t.parse::<u32>() {
            return Ok(HalfInt(2 * n));
        }
        let v: f64 = t.parse().map_err(|_| bad())?;
        let halves = 2.0 * v;
        if v < 0.0 || (halves - halves.round()).abs() > 1e-12 || halves > u32::MAX as f64 {
            return Err(bad());
        }
        Ok(HalfInt(halves.round() as u32))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WallKind {
    /// `∂ψ/∂φ = 0` on the wall (generator sign `+1`).
    Neumann,
    /// `ψ = 0` on the wall (generator sign `-1`).
    Dirichlet,
}

fn check_three(rep: &AbelianRep) -> Result<()> {
    if rep.n_strands() != 3 {
        return Err(Error::StrandMismatch {
            left: rep.n_strands(),
            right: 3,
        });
    }
    Ok(())
}

/// Generator (1 or 2) whose exchange fixes the ray `φ = jπ/3`.
pub fn wall_generator(j: usize) -> usize {
    if j.is_multiple_of(2) {
        2
    } else {
        1
    }
}

pub fn wall_kind(rep: &AbelianRep, generator: usize) -> WallKind {
    if rep.sign(generator) > 0 {
        WallKind::Neumann
    } else {
        WallKind::Dirichlet
    }
}

/// First `count` positive eigenvalues `λ` of `-u'' = λ² u` on `[0, π/3]` with
/// the given boundary kinds at `φ = 0` and `φ = π/3`.
///
/// Matching kinds give `λ = 3n`; mismatched kinds `λ = 3n + 3/2`. Zero is
/// excluded because the hard core forces `ψ(ρ = 0) = 0`.
pub fn sector_eigenvalues(left: WallKind, right: WallKind, count: usize) -> Vec<HalfInt> {
    // λ L = (n + offset) π with L = π/3, i.e. λ = 3n + 3 offset
    if left == right {
        (1..=count as u32).map(|n| HalfInt::from_int(3 * n)).collect()
    } else {
        (0..count as u32).map(|n| HalfInt::from_halves(6 * n + 3)).collect()
    }
}

/// Allowed angular momenta for a three-strand abelian representation.
pub fn allowed_lambdas(rep: &AbelianRep, count: usize) -> Result<Vec<HalfInt>> {
    check_three(rep)?;
    Ok(sector_eigenvalues(
        wall_kind(rep, wall_generator(0)),
        wall_kind(rep, wall_generator(1)),
        count,
    ))
}

fn lambda_allowed(rep: &AbelianRep, lambda: HalfInt) -> bool {
    let h = lambda.halves();
    let matching = wall_kind(rep, 1) == wall_kind(rep, 2);
    if matching {
        h > 0 && h.is_multiple_of(6)
    } else {
        h % 6 == 3
    }
}

/// `2ν + λ + 1`.
pub fn energy(nu: u32, lambda: HalfInt) -> Result<f64> {
    if lambda.halves() == 0 {
        return Err(Error::OutOfRange {
            what: "lambda",
            detail: "λ must be positive".into(),
        });
    }
    Ok(energy_halves(nu, lambda) as f64 / 2.0)
}

/// Twice the energy, exactly.
pub fn energy_halves(nu: u32, lambda: HalfInt) -> u32 {
    4 * nu + lambda.halves() + 2
}

/// A relative eigenstate labelled by radial and angular quantum numbers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenState {
    nu: u32,
    lambda: HalfInt,
    rep: AbelianRep,
}

impl EigenState {
    pub fn new(nu: u32, lambda: HalfInt, rep: AbelianRep) -> Result<Self> {
        check_three(&rep)?;
        if !lambda_allowed(&rep, lambda) {
            return Err(Error::OutOfRange {
                what: "lambda",
                detail: format!("λ = {lambda} is not allowed for representation {rep}"),
            });
        }
        Ok(EigenState { nu, lambda, rep })
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn lambda(&self) -> HalfInt {
        self.lambda
    }

    pub fn rep(&self) -> &AbelianRep {
        &self.rep
    }

    pub fn energy(&self) -> f64 {
        energy_halves(self.nu, self.lambda) as f64 / 2.0
    }

    pub fn energy_halves(&self) -> u32 {
        energy_halves(self.nu, self.lambda)
    }

    /// Whether the state is double-valued on the plane.
    pub fn on_double_cover(&self) -> bool {
        !self.lambda.is_integer()
    }

    /// `ρ^λ e^{-ρ²/2} L_ν^{(λ)}(ρ²)`.
    pub fn radial(&self, rho: f64) -> f64 {
        let l = self.lambda.value();
        rho.powf(l) * (-0.5 * rho * rho).exp() * laguerre(self.nu, l, rho * rho)
    }

    /// Angular factor on the double cover: `cos(λφ)` when the `t2` rays are
    /// Neumann, `sin(λφ)` when they are Dirichlet. Within each sector this is
    /// a shifted cosine satisfying both wall conditions.
    pub fn angular(&self, phi: f64) -> f64 {
        let l = self.lambda.value();
        match wall_kind(&self.rep, 2) {
            WallKind::Neumann => (l * phi).cos(),
            WallKind::Dirichlet => (l * phi).sin(),
        }
    }

    /// Constant making `∫ |ψ|² ρ dρ dφ = 1` over the plane, or over the double
    /// cover for half-integer `λ`.
    pub fn normalization(&self) -> f64 {
        let l = self.lambda.value();
        let nu = self.nu as f64;
        // ∫ ρ^{2λ+1} e^{-ρ²} L² dρ = Γ(ν+λ+1) / (2 ν!)
        let radial = gamma(nu + l + 1.0) / (2.0 * gamma(nu + 1.0));
        let angular = if self.on_double_cover() { TAU } else { PI };
        1.0 / (radial * angular).sqrt()
    }

    /// `ψ(ρ, φ)` with `φ` taken on the double cover (period `4π`).
    pub fn value_on_cover(&self, rho: f64, phi: f64) -> f64 {
        if rho == 0.0 {
            return 0.0;
        }
        self.normalization() * self.radial(rho) * self.angular(phi)
    }
}

/// Generalized Laguerre polynomial `L_n^{(α)}(x)` by the three-term recurrence.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Hyperradius and hyperangle of a three-body relative configuration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PolarPoint {
    pub rho: f64,
    pub phi: f64,
}

impl PolarPoint {
    /// Wraps `phi` into `[0, 2π)`.
    pub fn new(rho: f64, phi: f64) -> Result<Self> {
        if rho.is_nan() || rho < 0.0 || !phi.is_finite() {
            return Err(Error::OutOfRange {
                what: "polar point",
                detail: format!("need ρ >= 0 and finite φ, got ({rho}, {phi})"),
            });
        }
        Ok(PolarPoint {
            rho,
            phi: wrap_angle(phi),
        })
    }

    pub fn from_cartesian(x: f64, y: f64) -> Self {
        PolarPoint {
            rho: x.hypot(y),
            phi: wrap_angle(y.atan2(x)),
        }
    }
}

fn wrap_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Jacobi polar coordinates; `φ = 0` by convention at the triple point.
pub fn jacobi_coords(x1: f64, x2: f64, x3: f64) -> PolarPoint {
    let rho2 = 2.0 / 3.0 * (x1 * x1 + x2 * x2 + x3 * x3 - x1 * x2 - x2 * x3 - x3 * x1);
    let rho = rho2.max(0.0).sqrt();
    let num = 3f64.sqrt() * (x1 - x2);
    let den = x1 + x2 - 2.0 * x3;
    let phi = if num == 0.0 && den == 0.0 {
        0.0
    } else {
        wrap_angle(num.atan2(den))
    };
    PolarPoint { rho, phi }
}

/// `ψ` on the principal branch `φ ∈ [0, 2π)`, returned as a complex number
/// with zero imaginary part.
pub fn wavefunction(state: &EigenState, p: &PolarPoint) -> Complex64 {
    Complex64::new(state.value_on_cover(p.rho, p.phi), 0.0)
}

/// One energy level of a spectrum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Level {
    pub energy: HalfInt,
    /// Number of `(ν, λ)` pairs times two orientations `e^{±iλφ}`.
    pub degeneracy: usize,
    pub states: Vec<(u32, HalfInt)>,
}

/// All levels with `2ν + λ + 1 <= e_max`, ascending.
pub fn spectrum(rep: &AbelianRep, e_max: f64) -> Result<Vec<Level>> {
    check_three(rep)?;
    if e_max.is_nan() || e_max <= 0.0 {
        return Err(Error::OutOfRange {
            what: "e_max",
            detail: format!("must be positive, got {e_max}"),
        });
    }
    let max_halves = (2.0 * e_max + 1e-9).floor() as u32;
    let mut levels: Vec<Level> = Vec::new();
    let lambda_count = (max_halves / 6 + 2) as usize;
    for lambda in allowed_lambdas(rep, lambda_count)? {
        let mut nu = 0;
        while energy_halves(nu, lambda) <= max_halves {
            let e = HalfInt::from_halves(energy_halves(nu, lambda));
            match levels.iter_mut().find(|l| l.energy == e) {
                Some(level) => level.states.push((nu, lambda)),
                None => levels.push(Level {
                    energy: e,
                    degeneracy: 0,
                    states: vec![(nu, lambda)],
                }),
            }
            nu += 1;
        }
    }
    levels.sort_by_key(|l| l.energy);
    for level in &mut levels {
        level.states.sort();
        level.degeneracy = 2 * level.states.len();
    }
    Ok(levels)
}

/// Energy of the lowest relative state.
pub fn ground_energy(rep: &AbelianRep) -> Result<HalfInt> {
    let first = allowed_lambdas(rep, 1)?[0];
    Ok(HalfInt::from_halves(energy_halves(0, first)))
}

/// Real samples of a wave function on a square Cartesian grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FieldGrid {
    pub resolution: usize,
    pub half_width: f64,
    /// Row-major; row `r` has `y = half_width - r h`, column `c` has
    /// `x = -half_width + c h`, with `h = 2 half_width / (resolution - 1)`.
    pub values: Vec<f64>,
}

impl FieldGrid {
    pub fn step(&self) -> f64 {
        2.0 * self.half_width / (self.resolution - 1) as f64
    }

    pub fn coords(&self, row: usize, col: usize) -> (f64, f64) {
        let h = self.step();
        (-self.half_width + col as f64 * h, self.half_width - row as f64 * h)
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.resolution + col]
    }

    /// `x,y,psi` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,psi\n");
        for r in 0..self.resolution {
            for c in 0..self.resolution {
                let (x, y) = self.coords(r, c);
                out.push_str(&format!("{x},{y},{}\n", self.get(r, c)));
            }
        }
        out
    }
}

pub const MIN_RESOLUTION: usize = 16;

/// Samples `ψ` on the principal branch over `[-w, w]²`.
pub fn field_grid(state: &EigenState, half_width: f64, resolution: usize) -> Result<FieldGrid> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::OutOfRange {
            what: "resolution",
            detail: format!("need at least {MIN_RESOLUTION}, got {resolution}"),
        });
    }
    if !half_width.is_finite() || half_width <= 0.0 {
        return Err(Error::OutOfRange {
            what: "half width",
            detail: format!("must be positive, got {half_width}"),
        });
    }
    let mut grid = FieldGrid {
        resolution,
        half_width,
        values: Vec::with_capacity(resolution * resolution),
    };
    let c = state.normalization();
    for r in 0..resolution {
        for col in 0..resolution {
            let (x, y) = grid.coords(r, col);
            let p = PolarPoint::from_cartesian(x, y);
            let v = if p.rho == 0.0 {
                0.0
            } else {
                c * state.radial(p.rho) * state.angular(p.phi)
            };
            grid.values.push(v);
        }
    }
    Ok(grid)
}

/// Contour plot of a field with the coincidence rays overlaid: `t1` rays
/// solid, `t2` rays dashed, and for double-valued states the branch cut in
/// red along the positive `x` axis.
pub fn render_field_svg(state: &EigenState, grid: &FieldGrid, size: f64, levels: usize) -> String {
    let scale = size / (2.0 * grid.half_width);
    let to_px = |x: f64, y: f64| ((x + grid.half_width) * scale, (grid.half_width - y) * scale);
    let mut svg = Svg::new(size, size);
    svg.rect(0.0, 0.0, size, size, "white");

    let peak = grid.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak > 0.0 {
        let levels = levels.max(1);
        for k in 1..=levels {
            let frac = k as f64 / (levels + 1) as f64;
            for (sign, color) in [(1.0, "#1f4e9c"), (-1.0, "#b2182b")] {
                let level = sign * frac * peak;
                let segs: Vec<_> = marching_squares(grid, level)
                    .into_iter()
                    .map(|(a, b)| (to_px(a.0, a.1), to_px(b.0, b.1)))
                    .collect();
                svg.segments(&segs, color, 1.2, None);
            }
        }
    }

    let center = to_px(0.0, 0.0);
    let reach = grid.half_width * std::f64::consts::SQRT_2;
    for j in 0..6 {
        let angle = j as f64 * FRAC_PI_3;
        let end = to_px(reach * angle.cos(), reach * angle.sin());
        let dash = if wall_generator(j) == 2 { Some("6 4") } else { None };
        svg.line(center, end, "#444444", 1.5, dash);
    }
    if state.on_double_cover() {
        let end = to_px(reach, 0.0);
        svg.line(center, end, "#e00000", 2.5, None);
    }
    svg.text(
        8.0,
        16.0,
        12.0,
        "start",
        &format!(
            "rep {} ν={} λ={} E={}",
            state.rep,
            state.nu,
            state.lambda,
            HalfInt::from_halves(state.energy_halves())
        ),
    );
    svg.finish()
}

/// Iso-line segments of `grid` at `level`, in world coordinates.
pub fn marching_squares(grid: &FieldGrid, level: f64) -> Vec<Segment> {
    let n = grid.resolution;
    let mut segs = Vec::new();
    for r in 0..n - 1 {
        for c in 0..n - 1 {
            // corners counter-clockwise from top-left
            let corners = [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c)];
            let vals = corners.map(|(i, j)| grid.get(i, j) - level);
            let pts = corners.map(|(i, j)| grid.coords(i, j));
            let mut crossings = Vec::with_capacity(4);
            for e in 0..4 {
                let (a, b) = (e, (e + 1) % 4);
                let (va, vb) = (vals[a], vals[b]);
                if (va > 0.0) != (vb > 0.0) {
                    let t = va / (va - vb);
                    crossings.push((
                        pts[a].0 + t * (pts[b].0 - pts[a].0),
                        pts[a].1 + t * (pts[b].1 - pts[a].1),
                    ));
                }
            }
            match crossings.len() {
                2 => segs.push((crossings[0], crossings[1])),
                4 => {
                    // saddle: pair by the cell-center value
                    let center = vals.iter().sum::<f64>() / 4.0;
                    if (center > 0.0) == (vals[0] > 0.0) {
                        segs.push((crossings[0], crossings[3]));
                        segs.push((crossings[1], crossings[2]));
                    } else {
                        segs.push((crossings[0], crossings[1]));
                        segs.push((crossings[2], crossings[3]));
                    }
                }
                _ => {}
            }
        }
    }
    segs
}
