//! Closed-form solution of the three-state interaction problem.
//!
//! Initial data
//!
//! ```text
//!     (u, sigma)(x, 0) = L for x < x0,  M for x0 < x < x1,  R for x > x1
//! ```
//!
//! with all three states on a level set of the same Riemann invariant. On
//! such a level set each initial jump opens a single wave of one family, and
//! the two waves later collide. When a shock runs into a rarefaction fan its
//! path obeys
//!
//! ```text
//!     dx/dt = (u_const + (-1)^j k) / 2 + (x - x_c) / (2t)
//! ```
//!
//! (u_const the state on the straight side, x_c the fan centre), whose
//! solution is the sqrt-in-time curve x = a t + c sqrt(t) + x_c. The
//! constant c is fixed by continuity through the collision point. The shock
//! either exhausts the fan in finite time (iff u_R < u_L) and continues as a
//! straight admissible shock, or survives inside the fan for all time.
//!
//! The full solution is a short list of time phases, each an ordered list of
//! boundary curves separating constant and fan regions.

use crate::core::{ModelParams, State};
use crate::riemann::rarefaction_state;
use crate::wave_curves::{classify, default_tol, RelativePosition, WaveFamily};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum InteractionError {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error(
        "unsupported configuration: middle is {middle:?} and right is {right:?} relative to the \
         left state; all three states must lie on a level set of one Riemann invariant \
         (cross-family wave interactions have no closed form here)"
    )]
    UnsupportedConfiguration {
        middle: RelativePosition,
        right: RelativePosition,
    },
    #[error("degenerate scenario: {0}; solve the two-state Riemann problem instead")]
    DegenerateScenario(&'static str),
    #[error("evaluation requires t > 0, got {0}")]
    NonPositiveTime(f64),
    #[error("curves are parallel")]
    ParallelCurves,
    #[error("analytically unreachable branch selected: {0}")]
    UnreachableBranch(&'static str),
}

/// Three-state initial data for the interaction problem.
#[derive(Debug, Clone, Copy)]
pub struct Scenario {
    params: ModelParams,
    left: State,
    middle: State,
    right: State,
    x0: f64,
    x1: f64,
}

impl Scenario {
    pub fn new(
        params: ModelParams,
        left: State,
        middle: State,
        right: State,
        x0: f64,
        x1: f64,
    ) -> Result<Self, InteractionError> {
        if !(left.is_finite() && middle.is_finite() && right.is_finite()) {
            return Err(InteractionError::InvalidScenario(
                "states must be finite".into(),
            ));
        }
        if !(x0.is_finite() && x1.is_finite() && x0 < x1) {
            return Err(InteractionError::InvalidScenario(format!(
                "jump locations must satisfy x0 < x1, got x0={x0}, x1={x1}"
            )));
        }
        Ok(Self {
            params,
            left,
            middle,
            right,
            x0,
            x1,
        })
    }

    pub fn params(&self) -> ModelParams {
        self.params
    }
    pub fn left(&self) -> State {
        self.left
    }
    pub fn middle(&self) -> State {
        self.middle
    }
    pub fn right(&self) -> State {
        self.right
    }
    pub fn x0(&self) -> f64 {
        self.x0
    }
    pub fn x1(&self) -> f64 {
        self.x1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Line,
    SqrtCurve,
}

/// A boundary path in the (x, t) half-plane.
///
/// Line:      x = x_ref + a (t - t_offset)
/// SqrtCurve: x = x_ref + a t + c sqrt(t)   (always centred at t = 0)
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curve {
    pub kind: CurveKind,
    pub a: f64,
    pub c: f64,
    pub x_ref: f64,
    pub t_offset: f64,
    /// Time interval on which this curve bounds a region.
    pub valid_t: (f64, f64),
}

impl Curve {
    pub fn line(a: f64, x_ref: f64, t_offset: f64) -> Self {
        Self {
            kind: CurveKind::Line,
            a,
            c: 0.0,
            x_ref,
            t_offset,
            valid_t: (0.0, f64::INFINITY),
        }
    }

    pub fn sqrt_curve(a: f64, c: f64, x_ref: f64) -> Self {
        Self {
            kind: CurveKind::SqrtCurve,
            a,
            c,
            x_ref,
            t_offset: 0.0,
            valid_t: (0.0, f64::INFINITY),
        }
    }

    fn with_range(mut self, lo: f64, hi: f64) -> Self {
        self.valid_t = (lo, hi);
        self
    }

    pub fn position(&self, t: f64) -> f64 {
        match self.kind {
            CurveKind::Line => self.x_ref + self.a * (t - self.t_offset),
            CurveKind::SqrtCurve => self.x_ref + self.a * t + self.c * t.sqrt(),
        }
    }

    /// Analytic dx/dt.
    pub fn slope(&self, t: f64) -> f64 {
        match self.kind {
            CurveKind::Line => self.a,
            CurveKind::SqrtCurve => self.a + self.c / (2.0 * t.sqrt()),
        }
    }
}

/// A point where two boundary curves meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub t: f64,
    pub x: f64,
}

/// Closed-form intersection of two lines, restricted to
/// t > max(t_offset_1, t_offset_2).
pub fn intersect_line_line(c1: &Curve, c2: &Curve) -> Result<Option<Crossing>, InteractionError> {
    debug_assert_eq!(c1.kind, CurveKind::Line);
    debug_assert_eq!(c2.kind, CurveKind::Line);
    let b1 = c1.x_ref - c1.a * c1.t_offset;
    let b2 = c2.x_ref - c2.a * c2.t_offset;
    if c1.a == c2.a {
        return Err(InteractionError::ParallelCurves);
    }
    let t = (b2 - b1) / (c1.a - c2.a);
    if t > c1.t_offset.max(c2.t_offset) {
        Ok(Some(Crossing {
            t,
            x: c1.a * t + b1,
        }))
    } else {
        Ok(None)
    }
}

/// Smallest intersection of a sqrt curve with a line after `after_t`.
///
/// Writing s = sqrt(t), the difference of the two paths is the quadratic
/// (a1 - a2) s^2 + c s + (x_ref1 - x_ref2 + a2 t_offset2); the smallest
/// positive root with t > after_t is returned, or None.
pub fn intersect_sqrt_line(c1: &Curve, c2: &Curve, after_t: f64) -> Option<Crossing> {
    debug_assert_eq!(c1.kind, CurveKind::SqrtCurve);
    debug_assert_eq!(c2.kind, CurveKind::Line);
    let qa = c1.a - c2.a;
    let qb = c1.c;
    let qc = c1.x_ref - (c2.x_ref - c2.a * c2.t_offset);
    let mut roots: Vec<f64> = Vec::with_capacity(2);
    if qa == 0.0 {
        if qb != 0.0 {
            roots.push(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            return None;
        }
        let sq = disc.sqrt();
        roots.push((-qb - sq) / (2.0 * qa));
        roots.push((-qb + sq) / (2.0 * qa));
    }
    let mut times: Vec<f64> = roots
        .into_iter()
        .filter(|s| *s > 0.0)
        .map(|s| s * s)
        .filter(|t| *t > after_t)
        .collect();
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    times.first().map(|&t| Crossing {
        t,
        x: c2.position(t),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    ShockFanCollision,
    ShockShockCollision,
    FanAbsorbed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub t: f64,
    pub x: f64,
    pub kind: EventKind,
}

/// How the interaction resolves after the first collision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The curved shock never leaves the fan (u_R >= u_L).
    NoSecondIntersection,
    /// The solution terminates in a single straight admissible shock from
    /// left to right. Covers both a curved shock exhausting the fan and two
    /// shocks merging on collision.
    SecondIntersectionShock,
    /// A rarefaction re-emerging after the curved shock crosses the whole
    /// fan. Requires the curved shock to reach the far edge while u_R lies
    /// on the rarefaction side of u_L, which forces u_R < u_L and
    /// u_R > u_L simultaneously; kept as a diagnostic, never constructed.
    SecondIntersectionRarefaction,
    /// Two rarefactions; the waves never meet.
    NoInteraction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseTag {
    /// 1: M on R2(L); 2: M on S2(L); 3: M on S1(L); 4: M on R1(L).
    pub case_no: u8,
    pub subcase: u8,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    Shock,
    FanEdge,
}

#[derive(Debug, Clone, Copy)]
pub struct Boundary {
    pub curve: Curve,
    pub kind: BoundaryKind,
}

/// Value rule of one region of a phase.
#[derive(Debug, Clone, Copy)]
pub enum RegionValue {
    Constant(State),
    /// Centred rarefaction fan: `base` is the state on its slow edge and
    /// fixes the sigma line.
    Fan {
        center: f64,
        base: State,
    },
}

/// One time slab of the solution: boundaries are strictly ordered in x
/// throughout the slab interior, values has exactly one more entry.
#[derive(Debug, Clone)]
pub struct Phase {
    pub t_start: f64,
    /// End of the slab; `f64::INFINITY` for the final phase.
    pub t_end: f64,
    pub boundaries: Vec<Boundary>,
    pub values: Vec<RegionValue>,
}

/// The assembled interaction solution.
#[derive(Debug, Clone)]
pub struct PiecewiseSolution {
    pub scenario: Scenario,
    pub tag: CaseTag,
    pub family: WaveFamily,
    pub events: Vec<Event>,
    pub phases: Vec<Phase>,
}

/// Classify a scenario with the scale-aware default tolerance.
pub fn classify_case(s: &Scenario) -> Result<CaseTag, InteractionError> {
    let tol = default_tol(s.left, s.middle).max(default_tol(s.left, s.right));
    classify_case_with_tol(s, tol)
}

/// Classify a scenario: case from the middle state's curve, subcase from
/// the ordering of u values, branch resolved analytically.
pub fn classify_case_with_tol(s: &Scenario, tol: f64) -> Result<CaseTag, InteractionError> {
    let p = s.params;
    let pos_m = classify(p, s.left, s.middle, tol);
    let pos_r = classify(p, s.left, s.right, tol);
    if pos_m == RelativePosition::Coincident {
        return Err(InteractionError::DegenerateScenario(
            "middle state coincides with the left state",
        ));
    }
    if classify(p, s.middle, s.right, tol) == RelativePosition::Coincident {
        return Err(InteractionError::DegenerateScenario(
            "middle state coincides with the right state",
        ));
    }
    let family = match pos_m.family() {
        Some(f) => f,
        None => {
            return Err(InteractionError::UnsupportedConfiguration {
                middle: pos_m,
                right: pos_r,
            })
        }
    };
    // The right state must sit on the same invariant line (or coincide with
    // the left state, which is trivially on it).
    let right_ok = pos_r == RelativePosition::Coincident || pos_r.family() == Some(family);
    if !right_ok {
        return Err(InteractionError::UnsupportedConfiguration {
            middle: pos_m,
            right: pos_r,
        });
    }

    let case_no = match pos_m {
        RelativePosition::OnR2 => 1,
        RelativePosition::OnS2 => 2,
        RelativePosition::OnS1 => 3,
        RelativePosition::OnR1 => 4,
        _ => unreachable!(),
    };
    let (u_l, u_m, u_r) = (s.left.u, s.middle.u, s.right.u);
    // Subcase 1 pairs waves of opposite kinds (the only configurations that
    // interact through a fan); subcase 2 pairs equal kinds.
    let first_is_fan = u_m > u_l;
    let second_is_fan = u_r > u_m;
    let subcase = if first_is_fan != second_is_fan { 1 } else { 2 };
    let branch = if subcase == 2 {
        if first_is_fan {
            Branch::NoInteraction
        } else {
            Branch::SecondIntersectionShock
        }
    } else if u_r < u_l {
        Branch::SecondIntersectionShock
    } else {
        Branch::NoSecondIntersection
    };
    Ok(CaseTag {
        case_no,
        subcase,
        branch,
    })
}

/// Construct the full piecewise solution for a scenario.
pub fn build(s: &Scenario) -> Result<PiecewiseSolution, InteractionError> {
    let tag = classify_case(s)?;
    build_from_tag(s, tag)
}

/// Like [`build`] with an explicit classification tolerance.
pub fn build_with_tol(s: &Scenario, tol: f64) -> Result<PiecewiseSolution, InteractionError> {
    let tag = classify_case_with_tol(s, tol)?;
    build_from_tag(s, tag)
}

fn build_from_tag(s: &Scenario, tag: CaseTag) -> Result<PiecewiseSolution, InteractionError> {
    let family = if tag.case_no <= 2 {
        WaveFamily::Two
    } else {
        WaveFamily::One
    };
    let p = s.params;
    let k = p.k();
    let e = family.sign() * k;
    let ch = |u: f64| u + e; // characteristic speed of this family
    let sp = |ua: f64, ub: f64| 0.5 * (ua + ub) + e; // shock speed

    let (l, m, r) = (s.left, s.middle, s.right);
    let (x0, x1) = (s.x0, s.x1);
    let first_is_fan = m.u > l.u;
    let second_is_fan = r.u > m.u;

    let mut events = Vec::new();
    let mut phases = Vec::new();

    match (first_is_fan, second_is_fan) {
        (true, true) => {
            // Two rarefactions; characteristics never cross.
            phases.push(Phase {
                t_start: 0.0,
                t_end: f64::INFINITY,
                boundaries: vec![
                    Boundary {
                        curve: Curve::line(ch(l.u), x0, 0.0),
                        kind: BoundaryKind::FanEdge,
                    },
                    Boundary {
                        curve: Curve::line(ch(m.u), x0, 0.0),
                        kind: BoundaryKind::FanEdge,
                    },
                    Boundary {
                        curve: Curve::line(ch(m.u), x1, 0.0),
                        kind: BoundaryKind::FanEdge,
                    },
                    Boundary {
                        curve: Curve::line(ch(r.u), x1, 0.0),
                        kind: BoundaryKind::FanEdge,
                    },
                ],
                values: vec![
                    RegionValue::Constant(l),
                    RegionValue::Fan {
                        center: x0,
                        base: l,
                    },
                    RegionValue::Constant(m),
                    RegionValue::Fan {
                        center: x1,
                        base: m,
                    },
                    RegionValue::Constant(r),
                ],
            });
        }
        (false, false) => {
            // Two shocks merge into one.
            let s_lm = Curve::line(sp(l.u, m.u), x0, 0.0);
            let s_mr = Curve::line(sp(m.u, r.u), x1, 0.0);
            let hit = intersect_line_line(&s_lm, &s_mr)?
                .expect("the trailing shock is strictly faster, so the shocks meet");
            events.push(Event {
                t: hit.t,
                x: hit.x,
                kind: EventKind::ShockShockCollision,
            });
            phases.push(Phase {
                t_start: 0.0,
                t_end: hit.t,
                boundaries: vec![
                    Boundary {
                        curve: s_lm.with_range(0.0, hit.t),
                        kind: BoundaryKind::Shock,
                    },
                    Boundary {
                        curve: s_mr.with_range(0.0, hit.t),
                        kind: BoundaryKind::Shock,
                    },
                ],
                values: vec![
                    RegionValue::Constant(l),
                    RegionValue::Constant(m),
                    RegionValue::Constant(r),
                ],
            });
            let merged = Curve::line(sp(l.u, r.u), hit.x, hit.t).with_range(hit.t, f64::INFINITY);
            phases.push(Phase {
                t_start: hit.t,
                t_end: f64::INFINITY,
                boundaries: vec![Boundary {
                    curve: merged,
                    kind: BoundaryKind::Shock,
                }],
                values: vec![RegionValue::Constant(l), RegionValue::Constant(r)],
            });
        }
        (true, false) => {
            // Fan from x0, shock from x1; the fan's fast edge overtakes the
            // shock, which then bends into the fan.
            let lead = Curve::line(ch(l.u), x0, 0.0);
            let fan_hi = Curve::line(ch(m.u), x0, 0.0);
            let s_mr = Curve::line(sp(m.u, r.u), x1, 0.0);
            let hit = intersect_line_line(&fan_hi, &s_mr)?
                .expect("the fan's fast edge is strictly faster than the shock");
            events.push(Event {
                t: hit.t,
                x: hit.x,
                kind: EventKind::ShockFanCollision,
            });
            phases.push(Phase {
                t_start: 0.0,
                t_end: hit.t,
                boundaries: vec![
                    Boundary {
                        curve: lead.with_range(0.0, hit.t),
                        kind: BoundaryKind::FanEdge,
                    },
                    Boundary {
                        curve: fan_hi.with_range(0.0, hit.t),
                        kind: BoundaryKind::FanEdge,
                    },
                    Boundary {
                        curve: s_mr.with_range(0.0, hit.t),
                        kind: BoundaryKind::Shock,
                    },
                ],
                values: vec![
                    RegionValue::Constant(l),
                    RegionValue::Fan {
                        center: x0,
                        base: l,
                    },
                    RegionValue::Constant(m),
                    RegionValue::Constant(r),
                ],
            });
            // Continuity through the collision point fixes c.
            let c = (hit.x - x0 - ch(r.u) * hit.t) / hit.t.sqrt();
            let bent = Curve::sqrt_curve(ch(r.u), c, x0);
            finish_curved_shock(
                s,
                family,
                tag,
                &mut events,
                &mut phases,
                bent,
                lead,
                hit.t,
                RegionValue::Fan {
                    center: x0,
                    base: l,
                },
                /* shock_on_right: */ true,
            )?;
        }
        (false, true) => {
            // Shock from x0, fan from x1; the shock overtakes the fan's slow
            // edge and bends into the fan.
            let s_lm = Curve::line(sp(l.u, m.u), x0, 0.0);
            let fan_lo = Curve::line(ch(m.u), x1, 0.0);
            let fan_hi = Curve::line(ch(r.u), x1, 0.0);
            let hit = intersect_line_line(&s_lm, &fan_lo)?
                .expect("the shock is strictly faster than the fan's slow edge");
            events.push(Event {
                t: hit.t,
                x: hit.x,
                kind: EventKind::ShockFanCollision,
            });
            phases.push(Phase {
                t_start: 0.0,
                t_end: hit.t,
                boundaries: vec![
                    Boundary {
                        curve: s_lm.with_range(0.0, hit.t),
                        kind: BoundaryKind::Shock,
                    },
                    Boundary {
                        curve: fan_lo.with_range(0.0, hit.t),
                        kind: BoundaryKind::FanEdge,
                    },
                    Boundary {
                        curve: fan_hi.with_range(0.0, hit.t),
                        kind: BoundaryKind::FanEdge,
                    },
                ],
                values: vec![
                    RegionValue::Constant(l),
                    RegionValue::Constant(m),
                    RegionValue::Fan {
                        center: x1,
                        base: m,
                    },
                    RegionValue::Constant(r),
                ],
            });
            let c = (hit.x - x1 - ch(l.u) * hit.t) / hit.t.sqrt();
            let bent = Curve::sqrt_curve(ch(l.u), c, x1);
            finish_curved_shock(
                s,
                family,
                tag,
                &mut events,
                &mut phases,
                bent,
                fan_hi,
                hit.t,
                RegionValue::Fan {
                    center: x1,
                    base: m,
                },
                /* shock_on_right: */ false,
            )?;
        }
    }

    Ok(PiecewiseSolution {
        scenario: *s,
        tag,
        family,
        events,
        phases,
    })
}

/// Shared tail of the two subcase-1 structures: the curved shock either
/// leaves the fan through `far_edge` (iff u_R < u_L, by the sign of the
/// sqrt coefficient) and the solution ends in a straight shock, or it stays
/// inside the fan for all time.
#[allow(clippy::too_many_arguments)]
fn finish_curved_shock(
    s: &Scenario,
    family: WaveFamily,
    tag: CaseTag,
    events: &mut Vec<Event>,
    phases: &mut Vec<Phase>,
    bent: Curve,
    far_edge: Curve,
    t_hit: f64,
    fan_value: RegionValue,
    shock_on_right: bool,
) -> Result<(), InteractionError> {
    let e = family.sign() * s.params.k();
    let (l, r) = (s.left, s.right);
    let mid_bounds = |bent: Curve, edge: Curve| -> Vec<Boundary> {
        if shock_on_right {
            vec![
                Boundary {
                    curve: edge,
                    kind: BoundaryKind::FanEdge,
                },
                Boundary {
                    curve: bent,
                    kind: BoundaryKind::Shock,
                },
            ]
        } else {
            vec![
                Boundary {
                    curve: bent,
                    kind: BoundaryKind::Shock,
                },
                Boundary {
                    curve: edge,
                    kind: BoundaryKind::FanEdge,
                },
            ]
        }
    };
    let mid_values = vec![
        RegionValue::Constant(l),
        fan_value,
        RegionValue::Constant(r),
    ];

    match tag.branch {
        Branch::SecondIntersectionShock => {
            let exit = intersect_sqrt_line(&bent, &far_edge, t_hit)
                .expect("u_R < u_L forces the curved shock across the fan");
            events.push(Event {
                t: exit.t,
                x: exit.x,
                kind: EventKind::FanAbsorbed,
            });
            phases.push(Phase {
                t_start: t_hit,
                t_end: exit.t,
                boundaries: mid_bounds(
                    bent.with_range(t_hit, exit.t),
                    far_edge.with_range(t_hit, exit.t),
                ),
                values: mid_values,
            });
            let merged = Curve::line(0.5 * (l.u + r.u) + e, exit.x, exit.t)
                .with_range(exit.t, f64::INFINITY);
            phases.push(Phase {
                t_start: exit.t,
                t_end: f64::INFINITY,
                boundaries: vec![Boundary {
                    curve: merged,
                    kind: BoundaryKind::Shock,
                }],
                values: vec![RegionValue::Constant(l), RegionValue::Constant(r)],
            });
            Ok(())
        }
        Branch::NoSecondIntersection => {
            phases.push(Phase {
                t_start: t_hit,
                t_end: f64::INFINITY,
                boundaries: mid_bounds(
                    bent.with_range(t_hit, f64::INFINITY),
                    far_edge.with_range(t_hit, f64::INFINITY),
                ),
                values: mid_values,
            });
            Ok(())
        }
        Branch::SecondIntersectionRarefaction => Err(InteractionError::UnreachableBranch(
            "a re-emerging rarefaction needs the curved shock to cross the fan (u_R < u_L) with \
             u_R on the rarefaction side (u_R > u_L) at once",
        )),
        Branch::NoInteraction => unreachable!("subcase 1 always interacts"),
    }
}

impl PiecewiseSolution {
    /// Value at (x, t), t > 0. A point exactly on a boundary takes the
    /// value of the region to its right.
    pub fn eval(&self, x: f64, t: f64) -> Result<State, InteractionError> {
        let (phase_idx, region_idx) = self.locate(x, t)?;
        Ok(self.region_state(&self.phases[phase_idx].values[region_idx], x, t))
    }

    /// Indices (phase, region) of the point (x, t).
    pub fn locate(&self, x: f64, t: f64) -> Result<(usize, usize), InteractionError> {
        if !t.is_finite() || t <= 0.0 {
            return Err(InteractionError::NonPositiveTime(t));
        }
        let phase_idx = self
            .phases
            .iter()
            .position(|ph| t <= ph.t_end)
            .unwrap_or(self.phases.len() - 1);
        let region_idx = self.phases[phase_idx]
            .boundaries
            .partition_point(|b| b.curve.position(t) <= x);
        Ok((phase_idx, region_idx))
    }

    fn region_state(&self, value: &RegionValue, x: f64, t: f64) -> State {
        match value {
            RegionValue::Constant(s) => *s,
            RegionValue::Fan { center, base } => {
                rarefaction_state(self.scenario.params, self.family, (x - center) / t, *base)
            }
        }
    }

    /// Trace of the region values immediately left and right of boundary
    /// `which` of `phase`, evaluated on the curve at time t.
    pub fn boundary_traces(&self, phase: &Phase, which: usize, t: f64) -> (f64, State, State) {
        let x = phase.boundaries[which].curve.position(t);
        let left = self.region_state(&phase.values[which], x, t);
        let right = self.region_state(&phase.values[which + 1], x, t);
        (x, left, right)
    }

    /// Shift the speed of the first shock boundary by `delta`.
    ///
    /// Diagnostic hook for exercising the verification failure paths; a
    /// corrupted solution no longer satisfies the jump conditions.
    #[doc(hidden)]
    pub fn corrupt_first_shock_speed(&mut self, delta: f64) -> bool {
        for phase in &mut self.phases {
            for b in &mut phase.boundaries {
                if b.kind == BoundaryKind::Shock {
                    b.curve.a += delta;
                    return true;
                }
            }
        }
        false
    }
}
