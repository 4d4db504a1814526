use crate::error::{Error, Result};
use crate::grid::ArithGrid;
use crate::strip::Strip;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricTag {
    Uniform,
    Stepanov,
    Weyl,
    Besicovitch,
}

impl fmt::Display for MetricTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricTag::Uniform => "uniform",
            MetricTag::Stepanov => "stepanov",
            MetricTag::Weyl => "weyl",
            MetricTag::Besicovitch => "besicovitch",
        })
    }
}

/// Which distance, and its exponent (ignored for the uniform metric).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricKind {
    pub tag: MetricTag,
    pub p: f64,
}

impl MetricKind {
    pub fn new(tag: MetricTag, p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::param("p", format!("exponent must be >= 1, got {p}")));
        }
        Ok(Self { tag, p })
    }
}

/// One window half-width and the distance measured with it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rung {
    pub t: f64,
    pub value: f64,
}

/// Distances over a ladder of window sizes, with the max over the upper half
/// of the ladder standing in for the `limsup`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricEstimate {
    pub kind: MetricKind,
    pub alpha: f64,
    pub beta: f64,
    pub rungs: Vec<Rung>,
    pub surrogate: f64,
}

/// Max of the values with index `>= len / 2`.
pub fn tail_surrogate(values: &[f64]) -> f64 {
    values[values.len() / 2..].iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

impl MetricEstimate {
    pub(crate) fn from_rungs(kind: MetricKind, substrip: &Strip, rungs: Vec<Rung>) -> Self {
        let values: Vec<f64> = rungs.iter().map(|r| r.value).collect();
        let surrogate = tail_surrogate(&values);
        Self { kind, alpha: substrip.y_min(), beta: substrip.y_max(), rungs, surrogate }
    }

    pub fn values(&self) -> Vec<f64> {
        self.rungs.iter().map(|r| r.value).collect()
    }

    pub const CSV_COLUMNS: [&'static str; 6] = ["kind", "p", "alpha", "beta", "T", "value"];

    /// One CSV row per rung, columns `kind, p, alpha, beta, T, value`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Json(e.to_string());
        w.write_record(Self::CSV_COLUMNS).map_err(io)?;
        for r in &self.rungs {
            w.write_record([
                self.kind.tag.to_string(),
                self.kind.p.to_string(),
                self.alpha.to_string(),
                self.beta.to_string(),
                r.t.to_string(),
                r.value.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Json(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Json(e.to_string()))
    }
}

/// Points over which the `sup_z` of the Stepanov, Weyl and uniform metrics is
/// sampled: horizontal shifts times heights in the substrip.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupShiftGrid {
    pub x: ArithGrid,
    pub y: ArithGrid,
}

impl SupShiftGrid {
    pub fn new(x: ArithGrid, y: ArithGrid) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptyGrid);
        }
        if !(x.step > 0.0) || !(y.step > 0.0) {
            return Err(Error::param("grid", "steps must be positive"));
        }
        Ok(Self { x, y })
    }

    /// Shifts `x_lo, x_lo + x_step, ..., x_hi`, heights splitting the
    /// substrip into `y_divisions` equal parts (one height if the substrip is
    /// a line).
    pub fn over(substrip: &Strip, x_lo: f64, x_hi: f64, x_step: f64, y_divisions: usize) -> Result<Self> {
        let x = ArithGrid::span(x_lo, x_hi, x_step)?;
        let (a, b) = (substrip.y_min(), substrip.y_max());
        let y = if a == b { ArithGrid::single(a) } else { ArithGrid::linspace(a, b, y_divisions.max(1) + 1)? };
        Self::new(x, y)
    }

    /// One cell `[0, period]` at step 0.1, eight height divisions.
    pub fn standard(substrip: &Strip, period: f64) -> Result<Self> {
        Self::over(substrip, 0.0, period, 0.1, 8)
    }

    pub(crate) fn check_inside(&self, substrip: &Strip) -> Result<()> {
        let slack = 1e-12 * (1.0 + substrip.y_min().abs().max(substrip.y_max().abs()));
        for y in self.y.points() {
            if y < substrip.y_min() - slack || y > substrip.y_max() + slack {
                return Err(Error::param("grid", format!("height {y} lies outside the substrip")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surrogate_uses_upper_half() {
        assert_eq!(tail_surrogate(&[9.0, 1.0, 2.0, 3.0, 1.5, 0.5]), 3.0);
        assert_eq!(tail_surrogate(&[4.0]), 4.0);
        assert_eq!(tail_surrogate(&[5.0, 1.0, 2.0]), 2.0);
    }

    #[test]
    fn csv_columns_in_order() {
        let est = MetricEstimate::from_rungs(
            MetricKind::new(MetricTag::Weyl, 1.0).unwrap(),
            &Strip::closed(-0.5, 0.5).unwrap(),
            vec![Rung { t: 3.0, value: 0.25 }, Rung { t: 9.0, value: 0.1 }],
        );
        let csv = est.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("kind,p,alpha,beta,T,value"));
        assert_eq!(lines.next(), Some("weyl,1,-0.5,0.5,3,0.25"));
        assert_eq!(est.surrogate, 0.1);
    }

    #[test]
    fn kind_rejects_small_p() {
        assert!(MetricKind::new(MetricTag::Besicovitch, 0.9).is_err());
    }

    #[test]
    fn grid_over_line_has_one_height() {
        let g = SupShiftGrid::over(&Strip::real_axis(), 0.0, 1.0, 0.5, 8).unwrap();
        assert_eq!(g.y.count, 1);
        let g = SupShiftGrid::standard(&Strip::closed(-1.0, 1.0).unwrap(), 9.0).unwrap();
        assert_eq!((g.x.count, g.y.count), (91, 9));
    }
}
