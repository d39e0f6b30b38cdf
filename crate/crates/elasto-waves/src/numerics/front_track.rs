//! Exact front tracking for the scalar conservation law v_t + v v_x = 0
//! with three-state initial data.
//!
//! On a level set of one Riemann invariant the full system closes in u
//! alone (sigma_x = -+ k u_x), and v = u + (-1)^j k satisfies the scalar
//! law. This tracker is written directly from the scalar theory - midpoint
//! shock speeds, centred fans, a shock inside a fan following
//! x = center + v t + c sqrt(t) - and never touches the system solver, so
//! it is an independent oracle for the reduction.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontKind {
    Shock,
    FanEdge,
}

/// A moving discontinuity or fan edge at the query time.
#[derive(Debug, Clone, Copy)]
pub struct Front {
    pub position: f64,
    pub kind: FrontKind,
    pub left_value: f64,
    pub right_value: f64,
}

/// Value rule between fronts.
#[derive(Debug, Clone, Copy)]
pub enum ScalarPiece {
    Const(f64),
    Fan { center: f64 },
}

/// Snapshot of the exact scalar solution at one time.
#[derive(Debug, Clone)]
pub struct FrontState {
    pub t: f64,
    /// Fronts with strictly increasing positions.
    pub fronts: Vec<Front>,
    /// One more entry than `fronts`.
    pub pieces: Vec<ScalarPiece>,
}

impl FrontState {
    /// Value at x; a point exactly on a front takes the right piece.
    pub fn value_at(&self, x: f64) -> f64 {
        let idx = self.fronts.partition_point(|f| f.position <= x);
        match self.pieces[idx] {
            ScalarPiece::Const(v) => v,
            ScalarPiece::Fan { center } => (x - center) / self.t,
        }
    }

    fn constant(t: f64, v: f64) -> Self {
        Self {
            t,
            fronts: vec![],
            pieces: vec![ScalarPiece::Const(v)],
        }
    }
}

fn fan_edge(position: f64, v: f64) -> Front {
    Front {
        position,
        kind: FrontKind::FanEdge,
        left_value: v,
        right_value: v,
    }
}

fn shock(position: f64, left: f64, right: f64) -> Front {
    debug_assert!(left > right, "scalar shocks must be entropic");
    Front {
        position,
        kind: FrontKind::Shock,
        left_value: left,
        right_value: right,
    }
}

/// Single-wave solution of the scalar Riemann problem centred at `center`.
fn single_wave(a: f64, b: f64, center: f64, t: f64) -> FrontState {
    if a < b {
        FrontState {
            t,
            fronts: vec![fan_edge(center + a * t, a), fan_edge(center + b * t, b)],
            pieces: vec![
                ScalarPiece::Const(a),
                ScalarPiece::Fan { center },
                ScalarPiece::Const(b),
            ],
        }
    } else if a > b {
        FrontState {
            t,
            fronts: vec![shock(center + 0.5 * (a + b) * t, a, b)],
            pieces: vec![ScalarPiece::Const(a), ScalarPiece::Const(b)],
        }
    } else {
        FrontState::constant(t, a)
    }
}

/// Exact entropy solution of v_t + v v_x = 0 with data
/// (v_l | x0 | v_m | x1 | v_r), evaluated at time t > 0.
pub fn front_track_scalar(v_l: f64, v_m: f64, v_r: f64, x0: f64, x1: f64, t: f64) -> FrontState {
    assert!(t > 0.0, "front tracking needs t > 0");
    assert!(x0 < x1);

    if v_l == v_m && v_m == v_r {
        return FrontState::constant(t, v_l);
    }
    if v_l == v_m {
        return single_wave(v_m, v_r, x1, t);
    }
    if v_m == v_r {
        return single_wave(v_l, v_m, x0, t);
    }

    match (v_l < v_m, v_m < v_r) {
        // Two fans: the middle band shrinks but never closes.
        (true, true) => FrontState {
            t,
            fronts: vec![
                fan_edge(x0 + v_l * t, v_l),
                fan_edge(x0 + v_m * t, v_m),
                fan_edge(x1 + v_m * t, v_m),
                fan_edge(x1 + v_r * t, v_r),
            ],
            pieces: vec![
                ScalarPiece::Const(v_l),
                ScalarPiece::Fan { center: x0 },
                ScalarPiece::Const(v_m),
                ScalarPiece::Fan { center: x1 },
                ScalarPiece::Const(v_r),
            ],
        },
        // Two shocks merge at t1 into one of midpoint speed.
        (false, false) => {
            let t1 = 2.0 * (x1 - x0) / (v_l - v_r);
            if t < t1 {
                FrontState {
                    t,
                    fronts: vec![
                        shock(x0 + 0.5 * (v_l + v_m) * t, v_l, v_m),
                        shock(x1 + 0.5 * (v_m + v_r) * t, v_m, v_r),
                    ],
                    pieces: vec![
                        ScalarPiece::Const(v_l),
                        ScalarPiece::Const(v_m),
                        ScalarPiece::Const(v_r),
                    ],
                }
            } else {
                let x_merge = x0 + 0.5 * (v_l + v_m) * t1;
                let pos = x_merge + 0.5 * (v_l + v_r) * (t - t1);
                FrontState {
                    t,
                    fronts: vec![shock(pos, v_l, v_r)],
                    pieces: vec![ScalarPiece::Const(v_l), ScalarPiece::Const(v_r)],
                }
            }
        }
        // Fan then shock: the fan's fast edge feeds the shock, bending it
        // onto x0 + v_r t + c sqrt(t); it escapes through the slow edge iff
        // v_r < v_l.
        (true, false) => {
            let t1 = 2.0 * (x1 - x0) / (v_m - v_r);
            if t < t1 {
                return FrontState {
                    t,
                    fronts: vec![
                        fan_edge(x0 + v_l * t, v_l),
                        fan_edge(x0 + v_m * t, v_m),
                        shock(x1 + 0.5 * (v_m + v_r) * t, v_m, v_r),
                    ],
                    pieces: vec![
                        ScalarPiece::Const(v_l),
                        ScalarPiece::Fan { center: x0 },
                        ScalarPiece::Const(v_m),
                        ScalarPiece::Const(v_r),
                    ],
                };
            }
            let c = (v_m - v_r) * t1.sqrt();
            let t2 = if v_r < v_l {
                (c / (v_l - v_r)).powi(2)
            } else {
                f64::INFINITY
            };
            if t < t2 {
                let pos = x0 + v_r * t + c * t.sqrt();
                FrontState {
                    t,
                    fronts: vec![fan_edge(x0 + v_l * t, v_l), shock(pos, (pos - x0) / t, v_r)],
                    pieces: vec![
                        ScalarPiece::Const(v_l),
                        ScalarPiece::Fan { center: x0 },
                        ScalarPiece::Const(v_r),
                    ],
                }
            } else {
                let x2 = x0 + v_l * t2;
                let pos = x2 + 0.5 * (v_l + v_r) * (t - t2);
                FrontState {
                    t,
                    fronts: vec![shock(pos, v_l, v_r)],
                    pieces: vec![ScalarPiece::Const(v_l), ScalarPiece::Const(v_r)],
                }
            }
        }
        // Shock then fan: mirror of the previous case with the shock
        // entering through the fan's slow edge.
        (false, true) => {
            let t1 = 2.0 * (x1 - x0) / (v_l - v_m);
            if t < t1 {
                return FrontState {
                    t,
                    fronts: vec![
                        shock(x0 + 0.5 * (v_l + v_m) * t, v_l, v_m),
                        fan_edge(x1 + v_m * t, v_m),
                        fan_edge(x1 + v_r * t, v_r),
                    ],
                    pieces: vec![
                        ScalarPiece::Const(v_l),
                        ScalarPiece::Const(v_m),
                        ScalarPiece::Fan { center: x1 },
                        ScalarPiece::Const(v_r),
                    ],
                };
            }
            let c = (v_m - v_l) * t1.sqrt();
            let t2 = if v_r < v_l {
                (c / (v_r - v_l)).powi(2)
            } else {
                f64::INFINITY
            };
            if t < t2 {
                let pos = x1 + v_l * t + c * t.sqrt();
                FrontState {
                    t,
                    fronts: vec![shock(pos, v_l, (pos - x1) / t), fan_edge(x1 + v_r * t, v_r)],
                    pieces: vec![
                        ScalarPiece::Const(v_l),
                        ScalarPiece::Fan { center: x1 },
                        ScalarPiece::Const(v_r),
                    ],
                }
            } else {
                let x2 = x1 + v_r * t2;
                let pos = x2 + 0.5 * (v_l + v_r) * (t - t2);
                FrontState {
                    t,
                    fronts: vec![shock(pos, v_l, v_r)],
                    pieces: vec![ScalarPiece::Const(v_l), ScalarPiece::Const(v_r)],
                }
            }
        }
    }
}
