//! Piecewise-linear world-lines of `N` particles on a line.
//!
//! A trajectory is a path in the configuration space with all triple
//! coincidences removed. Two-body crossings are allowed and are read off as
//! traid generators: when the particles ranked `i` and `i + 1` (by current
//! position) cross, the letter `t_i` is emitted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::svg::Svg;
use crate::word::Word;

/// Relative tolerance for declaring two coordinates equal.
pub const CONTACT_TOLERANCE: f64 = 1e-9;

/// World-lines sampled at breakpoints and linearly interpolated between them.
///
/// `positions[k][j]` is the coordinate of particle `j + 1` at `times[k]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub n: usize,
    pub times: Vec<f64>,
    pub positions: Vec<Vec<f64>>,
}

#[derive(Clone, Copy, Debug)]
enum EventKind {
    Crossing,
    Tangency,
}

#[derive(Clone, Copy, Debug)]
struct PairEvent {
    time: f64,
    a: usize,
    b: usize,
    kind: EventKind,
}

impl Trajectory {
    pub fn new(n: usize, times: Vec<f64>, positions: Vec<Vec<f64>>) -> Result<Self> {
        let tr = Trajectory { n, times, positions };
        tr.validate()?;
        Ok(tr)
    }

    /// Checks the structural invariants and scans every two-body contact for
    /// a triple coincidence.
    pub fn validate(&self) -> Result<()> {
        self.validate_shape()?;
        for ev in self.pair_events()? {
            self.check_triple(ev.time)?;
        }
        Ok(())
    }

    fn validate_shape(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTrajectory(m));
        if self.n < 1 {
            return bad("need at least one particle".into());
        }
        if self.times.len() < 2 {
            return bad("need at least two breakpoints".into());
        }
        if self.positions.len() != self.times.len() {
            return bad(format!(
                "{} times but {} position rows",
                self.times.len(),
                self.positions.len()
            ));
        }
        if self.times.iter().any(|t| !t.is_finite()) {
            return bad("times must be finite".into());
        }
        if self.times.windows(2).any(|w| w[1] <= w[0]) {
            return bad("times must be strictly increasing".into());
        }
        for (k, row) in self.positions.iter().enumerate() {
            if row.len() != self.n {
                return bad(format!("row {k} has {} coordinates, expected {}", row.len(), self.n));
            }
            if row.iter().any(|x| !x.is_finite()) {
                return bad(format!("row {k} has a non-finite coordinate"));
            }
        }
        let tol = self.tolerance();
        for (label, row) in [("start", &self.positions[0]), ("end", self.positions.last().unwrap())] {
            let mut sorted = row.clone();
            sorted.sort_by(f64::total_cmp);
            if sorted.windows(2).any(|w| w[1] - w[0] <= tol) {
                return bad(format!("{label} coordinates are not pairwise distinct"));
            }
        }
        Ok(())
    }

    fn scale(&self) -> f64 {
        self.positions
            .iter()
            .flatten()
            .fold(1.0f64, |m, x| m.max(x.abs()))
    }

    fn tolerance(&self) -> f64 {
        CONTACT_TOLERANCE * self.scale()
    }

    /// Coordinates at time `t`, clamped to the time range.
    pub fn at(&self, t: f64) -> Vec<f64> {
        let k = self.times.partition_point(|&s| s <= t);
        if k == 0 {
            return self.positions[0].clone();
        }
        if k >= self.times.len() {
            return self.positions.last().unwrap().clone();
        }
        let (t0, t1) = (self.times[k - 1], self.times[k]);
        let s = (t - t0) / (t1 - t0);
        self.positions[k - 1]
            .iter()
            .zip(&self.positions[k])
            .map(|(a, b)| a + s * (b - a))
            .collect()
    }

    /// Whether every particle ends where it started.
    pub fn returns_home(&self) -> bool {
        let tol = self.tolerance();
        self.positions[0]
            .iter()
            .zip(self.positions.last().unwrap())
            .all(|(a, b)| (a - b).abs() <= tol)
    }

    fn check_triple(&self, t: f64) -> Result<()> {
        let tol = self.tolerance();
        let mut x = self.at(t);
        x.sort_by(f64::total_cmp);
        if x.windows(3).any(|w| w[1] - w[0] < tol && w[2] - w[1] < tol) {
            return Err(Error::TripleCoincidence { time: t });
        }
        Ok(())
    }

    /// All two-body contacts, sorted by time. Crossings are transversal
    /// sign changes; tangencies are contacts without a sign change or with
    /// the pair coinciding over a whole segment.
    fn pair_events(&self) -> Result<Vec<PairEvent>> {
        let tol = self.tolerance();
        let m = self.times.len();
        let mut events = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let sign: Vec<i8> = self
                    .positions
                    .iter()
                    .map(|row| {
                        let d = row[a] - row[b];
                        if d.abs() <= tol {
                            0
                        } else if d > 0.0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect();
                let mut k = 0;
                while k + 1 < m {
                    if sign[k + 1] == 0 {
                        // zero run starting at k + 1; endpoints are nonzero so it ends before m - 1
                        let start = k + 1;
                        let mut end = start;
                        while sign[end + 1] == 0 {
                            end += 1;
                        }
                        let kind = if end > start || sign[start - 1] == sign[end + 1] {
                            EventKind::Tangency
                        } else {
                            EventKind::Crossing
                        };
                        events.push(PairEvent {
                            time: self.times[start],
                            a,
                            b,
                            kind,
                        });
                        k = end;
                        continue;
                    }
                    if sign[k] * sign[k + 1] < 0 {
                        let d0 = self.positions[k][a] - self.positions[k][b];
                        let d1 = self.positions[k + 1][a] - self.positions[k + 1][b];
                        let (t0, t1) = (self.times[k], self.times[k + 1]);
                        events.push(PairEvent {
                            time: t0 + (t1 - t0) * d0 / (d0 - d1),
                            a,
                            b,
                            kind: EventKind::Crossing,
                        });
                    }
                    k += 1;
                }
            }
        }
        events.sort_by(|x, y| x.time.total_cmp(&y.time).then((x.a, x.b).cmp(&(y.a, y.b))));
        Ok(events)
    }
}

/// Realizes a word as a choreography: particle `j` rests at position `j`, and
/// letter `t_i` swaps the particles at positions `i` and `i + 1` during one
/// unit of time, crossing at the midpoint. Only the swapping pair moves.
pub fn word_to_choreography(w: &Word) -> Trajectory {
    let n = w.n_strands();
    // slot[p] = particle (0-based) at position p + 1
    let mut slot: Vec<usize> = (0..n).collect();
    let mut row: Vec<f64> = (1..=n).map(|p| p as f64).collect();
    let mut positions = vec![row.clone()];
    for &i in w.letters() {
        let (left, right) = (slot[i - 1], slot[i]);
        row[left] = (i + 1) as f64;
        row[right] = i as f64;
        slot.swap(i - 1, i);
        positions.push(row.clone());
    }
    if w.is_empty() {
        positions.push(row);
    }
    let times = (0..positions.len()).map(|k| k as f64).collect();
    Trajectory { n, times, positions }
}

/// Reads the crossing sequence of a trajectory as a word.
///
/// Disjoint pairs crossing at the same instant are emitted in ascending
/// generator order; overlapping pairs at the same instant are an error.
pub fn trajectory_to_word(tr: &Trajectory) -> Result<Word> {
    tr.validate_shape()?;
    if tr.n < 2 {
        return Err(Error::InvalidTrajectory("need at least two particles".into()));
    }
    let events = tr.pair_events()?;
    for ev in &events {
        tr.check_triple(ev.time)?;
        if let EventKind::Tangency = ev.kind {
            return Err(Error::Tangency {
                time: ev.time,
                a: ev.a + 1,
                b: ev.b + 1,
            });
        }
    }

    // order[r] = particle with rank r + 1
    let mut order: Vec<usize> = (0..tr.n).collect();
    order.sort_by(|&p, &q| tr.positions[0][p].total_cmp(&tr.positions[0][q]));
    let mut rank = vec![0usize; tr.n];
    for (r, &p) in order.iter().enumerate() {
        rank[p] = r;
    }

    let span = tr.times.last().unwrap() - tr.times[0];
    let time_tol = 1e-12 * span.max(1.0);
    let mut letters = Vec::with_capacity(events.len());
    let mut k = 0;
    while k < events.len() {
        let mut j = k + 1;
        while j < events.len() && events[j].time - events[k].time <= time_tol {
            j += 1;
        }
        let group = &events[k..j];
        let mut used = vec![false; tr.n];
        let mut lows = Vec::with_capacity(group.len());
        for ev in group {
            let (ra, rb) = (rank[ev.a], rank[ev.b]);
            if used[ev.a] || used[ev.b] || ra.abs_diff(rb) != 1 {
                return Err(Error::AmbiguousOrdering { time: ev.time });
            }
            used[ev.a] = true;
            used[ev.b] = true;
            lows.push(ra.min(rb));
        }
        lows.sort_unstable();
        for r in lows {
            let (p, q) = (order[r], order[r + 1]);
            order.swap(r, r + 1);
            rank[p] = r + 1;
            rank[q] = r;
            letters.push(r + 1);
        }
        k = j;
    }
    Word::new(tr.n, letters)
}

/// Layout options for strand diagrams.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramOptions {
    pub width: f64,
    pub height: f64,
    /// Per-strand colors, cycled if shorter than the strand count. `None`
    /// draws every strand in `default_color`.
    pub colors: Option<Vec<String>>,
    pub default_color: String,
    pub stroke_width: f64,
    pub show_labels: bool,
}

impl Default for DiagramOptions {
    fn default() -> Self {
        DiagramOptions {
            width: 480.0,
            height: 200.0,
            colors: Some(DEFAULT_PALETTE.iter().map(|s| s.to_string()).collect()),
            default_color: "#222222".into(),
            stroke_width: 3.0,
            show_labels: true,
        }
    }
}

pub const DEFAULT_PALETTE: [&str; 8] = [
    "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Draws the strand diagram of a word: time runs left to right, positions
/// top to bottom, one flat crossing per letter.
pub fn render_strand_diagram(w: &Word, opts: &DiagramOptions) -> String {
    let tr = word_to_choreography(w);
    let n = tr.n;
    let margin = 24.0;
    let steps = tr.times.len() - 1;
    let dx = (opts.width - 2.0 * margin) / steps as f64;
    let dy = if n > 1 {
        (opts.height - 2.0 * margin) / (n - 1) as f64
    } else {
        0.0
    };
    let y_of = |pos: f64| margin + (pos - 1.0) * dy;

    let mut svg = Svg::new(opts.width, opts.height);
    svg.rect(0.0, 0.0, opts.width, opts.height, "white");
    for p in 0..n {
        let color = match &opts.colors {
            Some(c) if !c.is_empty() => c[p % c.len()].as_str(),
            _ => opts.default_color.as_str(),
        };
        let pts: Vec<(f64, f64)> = tr
            .positions
            .iter()
            .enumerate()
            .map(|(k, row)| (margin + k as f64 * dx, y_of(row[p])))
            .collect();
        svg.polyline(&pts, color, opts.stroke_width);
        if opts.show_labels {
            svg.text(margin / 2.0, y_of(tr.positions[0][p]) + 4.0, 11.0, "middle", &(p + 1).to_string());
        }
    }
    if opts.show_labels {
        for (k, &l) in w.letters().iter().enumerate() {
            let x = margin + (k as f64 + 0.5) * dx;
            svg.text(x, opts.height - 6.0, 10.0, "middle", &format!("t{l}"));
        }
    }
    svg.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[usize]) -> Word {
        Word::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn choreography_shapes() {
        let tr = word_to_choreography(&w(4, &[]));
        assert_eq!(tr.times, vec![0.0, 1.0]);
        assert_eq!(tr.positions, vec![vec![1.0, 2.0, 3.0, 4.0]; 2]);

        let tr = word_to_choreography(&w(2, &[1]));
        assert_eq!(tr.positions, vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
        assert_eq!(tr.at(0.5), vec![1.5, 1.5]);

        let tr = word_to_choreography(&w(3, &[2, 1, 2, 1, 2, 1]));
        assert_eq!(tr.times.len(), 7);
        assert!(tr.returns_home());
        tr.validate().unwrap();
    }

    #[test]
    fn extraction() {
        let static_tr = word_to_choreography(&w(3, &[]));
        assert!(trajectory_to_word(&static_tr).unwrap().is_empty());
        let x = w(3, &[2, 1]);
        let back = trajectory_to_word(&word_to_choreography(&x)).unwrap();
        assert!(back.equals(&x).unwrap());
    }

    #[test]
    fn triple_coincidence_is_rejected() {
        let tr = Trajectory {
            n: 3,
            times: vec![0.0, 1.0],
            positions: vec![vec![1.0, 2.0, 3.0], vec![3.0, 2.0, 1.0]],
        };
        match trajectory_to_word(&tr) {
            Err(Error::TripleCoincidence { time }) => assert!((time - 0.5).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
        assert!(tr.validate().is_err());
    }

    #[test]
    fn tangency_and_simultaneous_crossings() {
        // particles 1 and 2 touch at t = 1 and separate again
        let tr = Trajectory {
            n: 3,
            times: vec![0.0, 1.0, 2.0],
            positions: vec![vec![1.0, 2.0, 5.0], vec![1.5, 1.5, 5.0], vec![1.0, 2.0, 5.0]],
        };
        assert!(matches!(trajectory_to_word(&tr), Err(Error::Tangency { .. })));

        // two disjoint pairs swap at the same instant
        let tr = Trajectory {
            n: 4,
            times: vec![0.0, 1.0],
            positions: vec![vec![1.0, 2.0, 3.0, 4.0], vec![2.0, 1.0, 4.0, 3.0]],
        };
        assert_eq!(trajectory_to_word(&tr).unwrap().letters(), &[1, 3]);

        // crossing exactly at a breakpoint
        let tr = Trajectory {
            n: 2,
            times: vec![0.0, 1.0, 2.0],
            positions: vec![vec![0.0, 2.0], vec![1.0, 1.0], vec![2.0, 0.0]],
        };
        assert_eq!(trajectory_to_word(&tr).unwrap().letters(), &[1]);
    }

    #[test]
    fn outer_particles_meeting_the_middle_one_together() {
        let tr = Trajectory {
            n: 3,
            times: vec![0.0, 1.0],
            positions: vec![vec![0.0, 1.0, 3.0], vec![2.0, 1.0, -1.0]],
        };
        assert!(matches!(
            trajectory_to_word(&tr),
            Err(Error::TripleCoincidence { .. })
        ));
    }

    #[test]
    fn rejects_malformed_trajectories() {
        let t = |times: Vec<f64>, positions: Vec<Vec<f64>>| Trajectory { n: 2, times, positions };
        assert!(t(vec![0.0], vec![vec![0.0, 1.0]]).validate().is_err());
        assert!(t(vec![1.0, 0.0], vec![vec![0.0, 1.0]; 2]).validate().is_err());
        assert!(t(vec![0.0, 1.0], vec![vec![0.0, 0.0]; 2]).validate().is_err());
        assert!(t(vec![0.0, 1.0], vec![vec![0.0]; 2]).validate().is_err());
    }

    #[test]
    fn diagrams() {
        let plain = render_strand_diagram(&w(3, &[]), &DiagramOptions::default());
        assert_eq!(plain.matches("<polyline").count(), 3);
        let rev = render_strand_diagram(&w(3, &[1, 2, 1]), &DiagramOptions::default());
        assert_eq!(rev.matches("<polyline").count(), 3);
        assert_eq!(rev.matches(">t").count(), 3);
        let again = render_strand_diagram(&w(3, &[1, 2, 1]), &DiagramOptions::default());
        assert_eq!(rev, again);
        let mono = DiagramOptions {
            colors: None,
            ..DiagramOptions::default()
        };
        assert!(render_strand_diagram(&w(3, &[1]), &mono).contains("#222222"));
    }
}
