//! Float shims and special functions.
//!
//! All transcendentals go through [`libm`] so that builds with and without
//! `std` produce bit-identical results.

/// Natural log of `n!`, via the log-gamma function (exact enough past the
/// n = 170 overflow point of direct factorials).
pub fn ln_factorial(n: usize) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

pub(crate) fn copysign(x: f64, y: f64) -> f64 {
    libm::copysign(x, y)
}

/// Associated Laguerre polynomial L_m^{(k)}(x) by the standard three-term
/// recurrence in the degree.
pub fn laguerre(m: usize, k: usize, x: f64) -> f64 {
    let kf = k as f64;
    let mut prev = 0.0;
    let mut cur = 1.0;
    for j in 0..m {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + kf - x) * cur - (jf + kf) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Sign and natural log of magnitude, with `ln_mag = f64::NEG_INFINITY`
/// representing an exact zero.
#[derive(Clone, Copy, Debug)]
pub(crate) struct LogMag {
    pub sign: f64,
    pub ln_mag: f64,
}

impl LogMag {
    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            LogMag { sign: 0.0, ln_mag: f64::NEG_INFINITY }
        } else {
            LogMag { sign: copysign(1.0, v), ln_mag: ln(abs(v)) }
        }
    }

    pub fn value(self) -> f64 {
        self.sign * exp(self.ln_mag)
    }
}

/// Walks L_n^{(k)}(x) upward in n, renormalizing on the fly so the recurrence
/// never overflows; yields sign and log-magnitude per degree.
pub(crate) struct ScaledLaguerreWalk {
    k: f64,
    x: f64,
    n: usize,
    prev: f64,
    cur: f64,
    log_scale: f64,
}

impl ScaledLaguerreWalk {
    const RENORM_LIMIT: f64 = 1e120;
    const LN_RENORM: f64 = 276.310_211_159_285_46; // ln(1e120)

    pub fn new(k: usize, x: f64) -> Self {
        ScaledLaguerreWalk { k: k as f64, x, n: 0, prev: 0.0, cur: 1.0, log_scale: 0.0 }
    }

    /// L_n^{(k)}(x) for the current degree, then advances to n+1.
    pub fn next_log(&mut self) -> LogMag {
        let out = if self.cur == 0.0 {
            LogMag { sign: 0.0, ln_mag: f64::NEG_INFINITY }
        } else {
            LogMag {
                sign: copysign(1.0, self.cur),
                ln_mag: ln(abs(self.cur)) + self.log_scale,
            }
        };
        let nf = self.n as f64;
        let next =
            ((2.0 * nf + 1.0 + self.k - self.x) * self.cur - (nf + self.k) * self.prev) / (nf + 1.0);
        self.prev = self.cur;
        self.cur = next;
        self.n += 1;
        if abs(self.cur) > Self::RENORM_LIMIT || abs(self.prev) > Self::RENORM_LIMIT {
            self.cur /= Self::RENORM_LIMIT;
            self.prev /= Self::RENORM_LIMIT;
            self.log_scale += Self::LN_RENORM;
        }
        out
    }
}
