use super::basis::RationalBasis;
use crate::error::{Error, Result};
use crate::exp_sum::{ExpSum, Term};
use crate::summation::ComplexSum;
use num_complex::Complex64;
use serde::Serialize;

/// One coefficient of a kernel: an integer tuple, its frequency, its weight.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelEntry {
    pub tuple: Vec<i32>,
    pub lambda: f64,
    pub weight: f64,
}

/// Product Fejér kernel over a rational basis:
/// `K(t) = Σ_r k(r) e^{-i λ(r) t}` with `k(r) = Π_j (1 - |r_j| / (N_j + 1))`
/// and `λ(r) = Σ_j r_j β_j`, for `|r_j| <= N_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct BochnerFejerKernel {
    basis: RationalBasis,
    degrees: Vec<u32>,
    /// Lexicographic tuple order.
    entries: Vec<KernelEntry>,
    /// Indices into `entries`, sorted by frequency.
    by_lambda: Vec<usize>,
}

const MAX_TUPLES: u128 = 10_000_000;

/// `1 - |r| / (N + 1)`.
pub fn fejer_weight(r: i32, n: u32) -> f64 {
    let n1 = f64::from(n) + 1.0;
    (n1 - f64::from(r.unsigned_abs())) / n1
}

impl BochnerFejerKernel {
    pub fn build(basis: RationalBasis, degrees: &[u32]) -> Result<Self> {
        if degrees.len() != basis.dim() {
            return Err(Error::param(
                "degrees",
                format!("{} degrees for a basis of dimension {}", degrees.len(), basis.dim()),
            ));
        }
        if degrees.iter().any(|&n| n == 0) {
            return Err(Error::param("degrees", "every degree must be at least 1"));
        }
        let count: u128 = degrees.iter().map(|&n| 2 * u128::from(n) + 1).product();
        if count > MAX_TUPLES {
            return Err(Error::KernelTooLarge(count));
        }
        let mut entries = Vec::with_capacity(count as usize);
        let mut tuple: Vec<i32> = degrees.iter().map(|&n| -(n as i32)).collect();
        loop {
            let weight = tuple.iter().zip(degrees).map(|(&r, &n)| fejer_weight(r, n)).product();
            entries.push(KernelEntry { lambda: basis.frequency(&tuple), tuple: tuple.clone(), weight });
            // odometer over the box, last coordinate fastest
            let mut j = tuple.len();
            loop {
                if j == 0 {
                    let mut by_lambda: Vec<usize> = (0..entries.len()).collect();
                    by_lambda.sort_by(|&a, &b| entries[a].lambda.total_cmp(&entries[b].lambda));
                    return Ok(Self { basis, degrees: degrees.to_vec(), entries, by_lambda });
                }
                j -= 1;
                if tuple[j] < degrees[j] as i32 {
                    tuple[j] += 1;
                    break;
                }
                tuple[j] = -(degrees[j] as i32);
            }
        }
    }

    pub fn basis(&self) -> &RationalBasis {
        &self.basis
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn entries(&self) -> &[KernelEntry] {
        &self.entries
    }

    pub fn coefficient(&self, tuple: &[i32]) -> f64 {
        if tuple.len() != self.degrees.len() || tuple.iter().zip(&self.degrees).any(|(r, &n)| r.unsigned_abs() > n) {
            return 0.0;
        }
        tuple.iter().zip(&self.degrees).map(|(&r, &n)| fejer_weight(r, n)).product()
    }

    /// The entry whose frequency matches `lambda` to relative precision 1e-12.
    pub fn entry_at(&self, lambda: f64) -> Option<&KernelEntry> {
        let tol = 1e-12 * lambda.abs().max(1.0);
        let pos = self.by_lambda.partition_point(|&i| self.entries[i].lambda < lambda - tol);
        self.by_lambda
            .get(pos)
            .map(|&i| &self.entries[i])
            .filter(|e| (e.lambda - lambda).abs() <= tol)
    }

    /// Kernel weight at frequency `lambda`, zero off the kernel's support.
    pub fn weight_at(&self, lambda: f64) -> f64 {
        self.entry_at(lambda).map_or(0.0, |e| e.weight)
    }

    /// `K(t)`. The imaginary part cancels by symmetry; a residue above 1e-8
    /// is reported as an error.
    pub fn eval(&self, t: f64) -> Result<f64> {
        let mut acc = ComplexSum::new();
        for e in &self.entries {
            acc.add(Complex64::cis(-e.lambda * t) * e.weight);
        }
        let v = acc.total();
        if v.im.abs() > 1e-8 {
            return Err(Error::KernelAsymmetry { t, residue: v.im });
        }
        Ok(v.re)
    }

    /// `s * K`: each term `(λ, c)` becomes `(λ, k(λ) c)`; terms off the
    /// kernel's support vanish and are dropped.
    pub fn convolve_exact(&self, s: &ExpSum) -> ExpSum {
        let terms = s
            .terms()
            .iter()
            .filter_map(|t| {
                let w = self.weight_at(t.lambda);
                (w != 0.0).then(|| Term::new(t.lambda, t.coeff.scale(Complex64::new(w, 0.0))))
            })
            .collect();
        ExpSum::new(terms, *s.strip()).expect("subset of distinct frequencies")
    }

    pub const CSV_COLUMNS: [&'static str; 3] = ["r", "lambda", "weight"];

    /// Coefficient table as CSV; the tuple column joins entries with `;`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::CSV_COLUMNS).expect("in-memory write");
        for e in &self.entries {
            let tuple = e.tuple.iter().map(i32::to_string).collect::<Vec<_>>().join(";");
            w.write_record([tuple, e.lambda.to_string(), e.weight.to_string()]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}
