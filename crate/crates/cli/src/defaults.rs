//! Every numeric default of `hbcp`. [`TABLE`] is printed by `--help`.

use std::f64::consts::{FRAC_PI_8, PI};

pub const SEED: u64 = 0xB5C0;
pub const ALPHA: f64 = 2.0;
pub const KAPPA: f64 = 1.0;
pub const SAMPLES: usize = 10_000;
pub const HALF_WIDTH: f64 = 10.0;

/// `(a, b, θ)` for `pp`.
pub const PP: (f64, f64, f64) = (2.0, 1.0, 0.5);
/// `(a, b)` for `tt`.
pub const TT: (f64, f64) = (1.0, 0.5);
/// `(θ, a, b)` for `x-axis` and `x-axis0`.
pub const X_AXIS: (f64, f64, f64) = (PI / 16.0, 2.0, 1.0 - 1e-6);
/// `(a, b)` for `z-axis` and `z-axis0`.
pub const Z_AXIS: (f64, f64) = (2.0, 0.5);
pub const CONE_THETA: f64 = PI / 16.0;
pub const COMPARISON_THETA: f64 = PI / 16.0;

pub const BOX_N: usize = 20;
pub const GAUGE_N: usize = 10;
pub const OUTGOING_N: usize = 4;
pub const CHAIN_K: usize = 1;
pub const CHAIN_POINTS: usize = 40;
pub const CHAIN_C: f64 = 0.9;

pub const SCALE: f64 = 1.0;
pub const BUDGET: u64 = 100_000;
pub const RESOLUTION: usize = 64;
pub const REDUCE_THETA: f64 = FRAC_PI_8;
pub const FAMILY_TOL: f64 = 0.0;

pub const TABLE: &str = "\
Defaults:
  --seed          0xB5C0 (46528)
  --alpha         2
  --kappa         1
  --samples       10000
  --half-width    10          cube [-w, w]^3 for axioms, closed-form, a-poly
  --tol           none        verify: pass iff worst slack >= -tol
                  0           check-family: required exclusion margin
  pp              a = 2, b = 1, theta = 0.5
  tt              a = 1, b = 0.5
  sev1            theta = theta2(alpha)
  x-axis(0)       theta = pi/16, a = 2, b = 1 - 1e-6
  z-axis(0)       a = 2, b = 0.5
  comparison      theta = pi/16
  prop1/2/4       theta = pi/16
  generate --n    box-ingoing 20, gauge-ingoing 10, outgoing 4, chain 1
  chain instance  --sequence harmonic, --points 40, --c 0.9
  search          --scale 1, --budget 100000
  sphere-section  --plane xz, --resolution 64
  reduce          --theta pi/8
";
