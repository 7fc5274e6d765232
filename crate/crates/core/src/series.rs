//! Summation engine for series of the form
//!
//! ```text
//! prefactor * sum_{k >= k0} sign_k * k^m * e^(-c k) * F(s, p k + q)
//! ```
//!
//! where `F` is a Hurwitz zeta function, a half-step Hurwitz difference, or a
//! Lerch transcendent, and `sign_k` is `1` or `(-1)^(k - k0)`.
//!
//! Two stopping strategies are available. Truncation sums terms until a
//! closed-form majorant of the remaining tail is below the budget. The
//! accelerated strategy sums a head of the series and replaces the rest by an
//! Euler–Maclaurin (positive series) or Boole (alternating series) expansion
//! whose remainder is bounded through the integral of the derivative of the
//! summand. Every `F` used here is completely monotone in its second argument,
//! with `d/dy F(s, y) = -s F(s+1, y)` and `int_Y^inf F(s, y) dy = F(s-1, Y)/(s-1)`.

use crate::error::{Error, Result};
use crate::special::{bernoulli_f64, half_difference_eps, hurwitz_eps, lerch_phi_eps};

/// Accelerated tails switch on when truncation would need more terms than this.
pub(crate) const ACCELERATE_ABOVE: f64 = 20_000.0;
const MAX_ORDER: usize = 12;
const PRECISE: f64 = 1.0 / 9_007_199_254_740_992.0; // 2^-53

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Kernel {
    Hurwitz,
    /// `zeta(s, y) - zeta(s, y + 1/2)`.
    HalfDiff,
    /// `Phi(z, s, y)` with `|z| < 1`.
    Lerch(f64),
}

impl Kernel {
    pub(crate) fn eval(self, s: f64, y: f64, eps: f64) -> Result<f64> {
        match self {
            Kernel::Hurwitz => hurwitz_eps(s, y, eps),
            Kernel::HalfDiff => half_difference_eps(s, y, eps),
            Kernel::Lerch(z) => lerch_phi_eps(z, s, y, eps),
        }
    }

    /// A positive lower bound on `F(s, y)`.
    fn lower(self, s: f64, y: f64) -> f64 {
        match self {
            Kernel::Hurwitz => y.powf(1.0 - s) / (s - 1.0),
            Kernel::HalfDiff => y.powf(-s) - (y + 0.5).powf(-s),
            Kernel::Lerch(z) if z < 0.0 => y.powf(-s) + z * (y + 1.0).powf(-s),
            Kernel::Lerch(_) => y.powf(-s),
        }
    }

    /// Evaluation to roughly full double precision.
    fn precise(self, s: f64, y: f64) -> Result<f64> {
        self.eval(s, y, PRECISE * self.lower(s, y))
    }

    /// Majorants `M(y) = sum coef * y^-exponent`, each decreasing in `y` and
    /// each bounding `|F(s, y)|` on its own.
    fn majorants(self, s: f64) -> Vec<Vec<(f64, f64)>> {
        let hurwitz = vec![(1.0, s), (1.0 / (s - 1.0), s - 1.0)];
        match self {
            Kernel::Hurwitz => vec![hurwitz],
            // alternating in steps of 1/2, and each step is at most (s/2) y^(-s-1)
            Kernel::HalfDiff => vec![vec![(1.0, s)], vec![(0.5 * s, s + 1.0), (0.5, s)]],
            Kernel::Lerch(z) if z > 0.0 => {
                let mut m = vec![vec![(1.0 / (1.0 - z), s)]];
                if s > 1.0 {
                    m.push(hurwitz);
                }
                m
            }
            Kernel::Lerch(_) => vec![vec![(1.0, s)]],
        }
    }
}

fn eval_power_sum(terms: &[(f64, f64)], y: f64) -> f64 {
    terms.iter().map(|&(c, e)| c * y.powf(-e)).sum()
}

/// Compensated (Neumaier) running sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Strategy {
    Truncate,
    Accelerate,
    Auto,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome {
    pub value: f64,
    pub terms: u64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct LinearSeries {
    pub kernel: Kernel,
    pub s: f64,
    pub m: u32,
    pub p: f64,
    pub q: f64,
    pub k0: u64,
    pub c: f64,
    pub alternating: bool,
    pub prefactor: f64,
}

impl LinearSeries {
    pub(crate) fn new(kernel: Kernel, s: f64, p: f64, q: f64, k0: u64) -> Self {
        Self {
            kernel,
            s,
            m: 0,
            p,
            q,
            k0,
            c: 0.0,
            alternating: false,
            prefactor: 1.0,
        }
    }

    pub(crate) fn moment(mut self, m: u32) -> Self {
        self.m = m;
        self
    }

    pub(crate) fn weight(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub(crate) fn alternating(mut self, alternating: bool) -> Self {
        self.alternating = alternating;
        self
    }

    pub(crate) fn scaled(mut self, prefactor: f64) -> Self {
        self.prefactor = prefactor;
        self
    }

    fn mf(&self) -> f64 {
        self.m as f64
    }

    /// `k^m e^(-ck)`.
    fn weight_at(&self, k: f64) -> f64 {
        let mut w = if self.m == 0 { 1.0 } else { k.powi(self.m as i32) };
        if self.c > 0.0 {
            w *= (-self.c * k).exp();
        }
        w
    }

    /// Unscaled summand magnitude with `F` evaluated to within `eps`.
    fn term(&self, k: u64, eps: f64) -> Result<f64> {
        let kf = k as f64;
        let w = self.weight_at(kf);
        if w == 0.0 {
            return Ok(0.0);
        }
        Ok(w * self.kernel.eval(self.s, self.p * kf + self.q, eps / w)?)
    }

    /// First index from which the truncation bound below is valid.
    fn monotone_from(&self) -> f64 {
        let k0 = self.k0 as f64;
        if self.m == 0 {
            return k0;
        }
        let m = self.mf();
        if self.alternating {
            // k^m zeta(s, pk+q) decreases once m/k < p (s-1)/(s-1+pk+q)
            let k = m * (self.s - 1.0 + self.q) / (self.p * (self.s - 1.0 - m));
            k0.max(k.floor() + 1.0)
        } else {
            // k^m (pk+q)^-e decreases once k > m q / ((e - m) p), smallest e is s-1
            let k = m * self.q / ((self.s - 1.0 - m) * self.p);
            k0.max(k.ceil())
        }
    }

    /// Bound on the unscaled tail `sum_{k >= K} |...|` (or the alternating
    /// remainder) when summation stops before index `K`.
    pub(crate) fn truncation_bound(&self, k: f64) -> f64 {
        if k < self.monotone_from() {
            return f64::INFINITY;
        }
        let y = self.p * k + self.q;
        let w = self.weight_at(k);
        let m = self.mf();
        let mut best = f64::INFINITY;
        for maj in self.kernel.majorants(self.s) {
            let head = w * eval_power_sum(&maj, y);
            if self.alternating {
                best = best.min(head);
                continue;
            }
            if self.c > 0.0 {
                // m = 0 here: geometric decay of the weight
                best = best.min(head / -(-self.c).exp_m1());
            }
            if maj.iter().all(|&(_, e)| e > m + 1.0) {
                let integral: f64 = maj
                    .iter()
                    .map(|&(coef, e)| coef * y.powf(m + 1.0 - e) / (e - m - 1.0))
                    .sum::<f64>()
                    * self.p.powf(-m - 1.0);
                let decay = if self.c > 0.0 { (-self.c * k).exp() } else { 1.0 };
                best = best.min(head + decay * integral);
            }
        }
        best
    }

    /// Smallest stopping index `K > k0` whose truncation bound is at most
    /// `target`, as a float because it may exceed any sensible budget.
    pub(crate) fn truncation_index(&self, target: f64) -> f64 {
        let lo0 = self.monotone_from().max(self.k0 as f64 + 1.0);
        if self.truncation_bound(lo0) <= target {
            return lo0;
        }
        let mut lo = lo0;
        let mut hi = lo0.max(1.0) * 2.0;
        while self.truncation_bound(hi) > target {
            lo = hi;
            hi *= 2.0;
            if hi > 1e300 {
                return f64::INFINITY;
            }
        }
        while hi - lo > 1.0 && hi - lo > 1e-12 * hi {
            let mid = (0.5 * (lo + hi)).floor();
            if self.truncation_bound(mid) <= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Number of summed terms the truncation strategy needs for `tol`.
    pub(crate) fn truncation_terms(&self, tol: f64) -> f64 {
        self.truncation_index(0.5 * tol / self.prefactor.abs()) - self.k0 as f64
    }

    fn accelerable(&self) -> bool {
        if self.alternating {
            self.c < 1.0 && (self.c == 0.0 || self.m == 0)
        } else {
            self.c == 0.0
        }
    }

    pub(crate) fn evaluate(&self, tol: f64, strategy: Strategy, budget: u64) -> Result<Outcome> {
        let accelerate = match strategy {
            Strategy::Truncate => false,
            Strategy::Accelerate => {
                if !self.accelerable() {
                    return Err(Error::NoConvergence {
                        routine: "accelerated tail (unsupported weight)",
                    });
                }
                true
            }
            Strategy::Auto => self.accelerable() && self.truncation_terms(tol) > ACCELERATE_ABOVE,
        };
        if accelerate {
            self.accelerated(tol, budget)
        } else {
            self.truncated(tol, budget)
        }
    }

    fn sum_head(&self, end: u64, eps: f64) -> Result<f64> {
        let mut acc = CompensatedSum::default();
        for k in self.k0..end {
            let t = self.term(k, eps)?;
            if self.alternating && (k - self.k0) % 2 == 1 {
                acc.add(-t);
            } else {
                acc.add(t);
            }
        }
        Ok(acc.value())
    }

    fn check_budget(&self, count: f64, budget: u64) -> Result<u64> {
        if count > budget as f64 {
            let needed = if count.is_finite() && count < u64::MAX as f64 {
                count as u64
            } else {
                u64::MAX
            };
            return Err(Error::TermBudgetExceeded { budget, needed });
        }
        Ok(count as u64)
    }

    fn truncated(&self, tol: f64, budget: u64) -> Result<Outcome> {
        let scale = self.prefactor.abs();
        let target = 0.5 * tol / scale;
        let stop = self.truncation_index(target);
        let count = self.check_budget(stop - self.k0 as f64, budget)?;
        let eps = 0.5 * tol / scale / count as f64;
        let head = self.sum_head(self.k0 + count, eps)?;
        let tail = self.truncation_bound(stop);
        Ok(Outcome {
            value: self.prefactor * head,
            terms: count,
            tail_bound: scale * (tail + eps * count as f64),
        })
    }

    fn accelerated(&self, tol: f64, budget: u64) -> Result<Outcome> {
        let scale = self.prefactor.abs();
        let target = 0.5 * tol / scale;
        let x0 = 16.0 + 2.0 * (self.s + self.mf());
        let offset = if self.m == 0 { self.q / self.p } else { 0.0 };
        let mut stop = (x0 - offset).ceil().max(self.k0 as f64 + 1.0);
        let (tail, remainder) = loop {
            self.check_budget(stop - self.k0 as f64, budget)?;
            if let Some(found) = self.expansion_tail(stop, target)? {
                break found;
            }
            stop *= 2.0;
        };
        let count = (stop - self.k0 as f64) as u64;
        let eps = 0.25 * tol / scale / count as f64;
        let head = self.sum_head(self.k0 + count, eps)?;
        let sign = if self.alternating && count % 2 == 1 { -1.0 } else { 1.0 };
        Ok(Outcome {
            value: self.prefactor * (head + sign * tail),
            terms: count,
            tail_bound: scale * (remainder + eps * count as f64),
        })
    }

    /// `F(s + l, pK + q)` for `l = 0..=n`, computed on demand.
    fn kernel_ladder(&self, y: f64, n: usize, cache: &mut Vec<f64>) -> Result<()> {
        while cache.len() <= n {
            let l = cache.len() as f64;
            cache.push(self.kernel.precise(self.s + l, y)?);
        }
        Ok(())
    }

    /// `d^j/dx^j [x^m e^(-cx) F(s, px+q)]` at `x = K`, given the kernel ladder.
    fn derivative(&self, k: f64, j: usize, ladder: &[f64]) -> f64 {
        let m = self.m as usize;
        let mut total = 0.0;
        // Leibniz over x^m and h(x) = e^(-cx) F(s, px+q)
        for r in j.saturating_sub(m)..=j {
            let xm = falling(m, j - r) * k.powi((m + r) as i32 - j as i32);
            // h^(r) = (-1)^r e^(-cx) sum_l C(r,l) c^(r-l) (s)_l p^l F(s+l)
            let mut h = 0.0;
            let mut poch = 1.0;
            let mut pl = 1.0;
            for (l, f) in ladder.iter().enumerate().take(r + 1) {
                let cpow = if r == l { 1.0 } else { self.c.powi((r - l) as i32) };
                h += binom(r, l) * cpow * poch * pl * f;
                poch *= self.s + l as f64;
                pl *= self.p;
            }
            let sign = if r % 2 == 1 { -1.0 } else { 1.0 };
            total += binom(j, r) * xm * sign * h;
        }
        total * (-self.c * k).exp()
    }

    /// `int_K^inf x^e F(sigma, px+q) dx` by repeated integration by parts.
    fn power_integral(&self, k: f64, e: usize, sigma: f64) -> Result<f64> {
        let y = self.p * k + self.q;
        let mut total = 0.0;
        let mut coef = 1.0; // e!/(e-j)! / (p^(j+1) prod_{t=1}^{j+1} (sigma - t))
        for j in 0..=e {
            coef /= self.p * (sigma - 1.0 - j as f64);
            if j > 0 {
                coef *= (e - j + 1) as f64;
            }
            let f = self.kernel.precise(sigma - 1.0 - j as f64, y)?;
            total += coef * k.powi((e - j) as i32) * f;
        }
        Ok(total)
    }

    /// Bound on `int_K^inf |g^(2P)(x)| dx` for `g(x) = x^m F(s, px+q)` and
    /// `c = 0`, using the Leibniz expansion term by term.
    fn derivative_mass(&self, k: f64, order: usize) -> Result<f64> {
        let m = self.m as usize;
        let mut total = 0.0;
        let mut poch = 1.0;
        let mut pr = 1.0;
        for r in 0..=order {
            if r >= order.saturating_sub(m) {
                let e = m + r - order;
                let coef = binom(order, r) * falling(m, order - r) * poch * pr;
                total += coef * self.power_integral(k, e, self.s + r as f64)?;
            }
            poch *= self.s + r as f64;
            pr *= self.p;
        }
        Ok(total)
    }

    /// Unscaled value of `sum_{j>=0} (+-1)^j g(K+j)` and a bound on its
    /// remainder, or `None` if no expansion order up to 12 meets `target`.
    fn expansion_tail(&self, k: f64, target: f64) -> Result<Option<(f64, f64)>> {
        let y = self.p * k + self.q;
        let mut ladder = Vec::new();
        self.kernel_ladder(y, 0, &mut ladder)?;
        let g0 = self.derivative(k, 0, &ladder);
        let completely_monotone = self.m == 0;
        let mut acc = 0.5 * g0;
        if !self.alternating {
            acc += self.power_integral(k, self.m as usize, self.s)?;
        }
        let mut prev = f64::INFINITY;
        for order in 1..=MAX_ORDER {
            let two = 2 * order;
            self.kernel_ladder(y, two, &mut ladder)?;
            let b = bernoulli_f64(two) / factorial(two);
            let weight = if self.alternating {
                b * (2f64.powi(two as i32) - 1.0)
            } else {
                b
            };
            let d = self.derivative(k, two - 1, &ladder);
            acc -= weight * d;
            let mass = if completely_monotone {
                d.abs()
            } else {
                self.derivative_mass(k, two)?
            };
            let remainder = if self.alternating {
                weight.abs() * mass
            } else {
                2.0 * weight.abs() * mass
            };
            if remainder <= target {
                return Ok(Some((acc, remainder)));
            }
            if remainder > prev {
                break;
            }
            prev = remainder;
        }
        Ok(None)
    }
}

fn binom(n: usize, k: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r
}

/// `m (m-1) ... (m-r+1)`, zero when `r > m`.
fn falling(m: usize, r: usize) -> f64 {
    if r > m {
        return 0.0;
    }
    (0..r).fold(1.0, |acc, i| acc * (m - i) as f64)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u64 = 10_000_000;

    fn zeta(s: f64) -> f64 {
        hurwitz_eps(s, 1.0, 1e-16).unwrap()
    }

    #[test]
    fn kappa_both_strategies() {
        // sum_{k>=1} zeta(4, k) = zeta(3)
        let series = LinearSeries::new(Kernel::Hurwitz, 4.0, 1.0, 0.0, 1);
        for strategy in [Strategy::Truncate, Strategy::Accelerate] {
            let out = series.evaluate(1e-8, strategy, BUDGET).unwrap();
            assert!((out.value - zeta(3.0)).abs() <= out.tail_bound, "{strategy:?}: {out:?}");
            assert!(out.tail_bound <= 1e-8);
        }
    }

    #[test]
    fn accelerated_moment_sum() {
        // sum_k k zeta(5, k) = (zeta(4) + zeta(3)) / 2
        let series = LinearSeries::new(Kernel::Hurwitz, 5.0, 1.0, 0.0, 1).moment(1);
        let out = series.evaluate(1e-12, Strategy::Accelerate, BUDGET).unwrap();
        let want = 0.5 * (zeta(4.0) + zeta(3.0));
        assert!((out.value - want).abs() < 1e-12, "{out:?} vs {want}");
    }

    #[test]
    fn accelerated_alternating_sum() {
        // sum_{k>=1} (-1)^(k-1) zeta(2, k) = (1 - 1/4) zeta(2)
        let series = LinearSeries::new(Kernel::Hurwitz, 2.0, 1.0, 0.0, 1).alternating(true);
        let out = series.evaluate(1e-12, Strategy::Accelerate, BUDGET).unwrap();
        assert!((out.value - 0.75 * zeta(2.0)).abs() < 1e-12, "{out:?}");
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::default();
        acc.add(1.0);
        for _ in 0..10 {
            acc.add(1e-17);
        }
        acc.add(-1.0);
        assert!((acc.value() - 1e-16).abs() < 1e-30);
    }
}
