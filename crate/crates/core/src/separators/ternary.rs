use crate::error::{Error, Result};
use serde::Serialize;

/// Level `l` of `n = 3^{l-1}(3k + 1)`, or `None` when `n` is not in `I`.
pub fn level(n: i64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let v = n.unsigned_abs().trailing_zeros_base3();
    let unit = n / 3i64.pow(v);
    (unit.rem_euclid(3) == 1).then_some(v + 1)
}

/// Membership in `I`: the least significant nonzero ternary digit is 1.
pub fn is_in_i(n: i64) -> bool {
    level(n).is_some()
}

trait Base3 {
    fn trailing_zeros_base3(self) -> u32;
}

impl Base3 for u64 {
    fn trailing_zeros_base3(mut self) -> u32 {
        let mut v = 0;
        while self % 3 == 0 {
            self /= 3;
            v += 1;
        }
        v
    }
}

/// An arithmetic progression `start + j * difference` inside `I` whose shift
/// by `q` leaves `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProgressionIq {
    pub q: i64,
    pub start: i64,
    pub difference: i64,
}

impl ProgressionIq {
    pub fn element(&self, j: i64) -> i64 {
        self.start + j * self.difference
    }

    /// Smallest element `>= a`.
    pub fn first_at_or_after(&self, a: f64) -> i64 {
        let j = ((a - self.start as f64) / self.difference as f64).ceil() as i64;
        let mut n = self.element(j);
        while (n as f64) < a {
            n += self.difference;
        }
        while ((n - self.difference) as f64) >= a {
            n -= self.difference;
        }
        n
    }
}

/// The progression `I(q)`. Writing `q = 3^{r-1} u` with `3 ∤ u`:
/// for `u = 3m + 1` take `n_j = 3^{r-1}(3j + 1)`, difference `3^r`;
/// for `u = 3m - 1` take `n_j = 3^{r-1}(3(3j - m - 1) + 1)`, difference `3^{r+1}`.
pub fn progression_for_shift(q: i64) -> Result<ProgressionIq> {
    if q == 0 {
        return Err(Error::param("q", "shift must be nonzero"));
    }
    let v = q.unsigned_abs().trailing_zeros_base3();
    let scale = 3i64.pow(v);
    let u = q / scale;
    if u.rem_euclid(3) == 1 {
        Ok(ProgressionIq { q, start: scale, difference: 3 * scale })
    } else {
        let m = (u + 1) / 3;
        Ok(ProgressionIq { q, start: scale * (3 * (-m - 1) + 1), difference: 9 * scale })
    }
}
