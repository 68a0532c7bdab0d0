//! Exact feasibility of `A x = b, x ≥ 0` over the rationals (phase one of the
//! simplex method with Bland's rule).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rows of `(coefficients, right-hand side)` over `n` nonnegative variables.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    pub n: usize,
    pub rows: Vec<(Vec<BigRational>, BigRational)>,
}

impl LinearSystem {
    pub fn new(n: usize) -> Self {
        LinearSystem { n, rows: Vec::new() }
    }

    /// Add `Σ coeffs[i] x_i = rhs` with sparse integer coefficients.
    pub fn equal(&mut self, coeffs: &[(usize, i64)], rhs: i64) {
        let mut row = vec![BigRational::zero(); self.n];
        for &(i, c) in coeffs {
            row[i] += BigRational::from_integer(BigInt::from(c));
        }
        self.rows.push((row, BigRational::from_integer(BigInt::from(rhs))));
    }

    /// Add a dense rational row.
    pub fn equal_dense(&mut self, row: Vec<BigRational>, rhs: BigRational) {
        assert_eq!(row.len(), self.n);
        self.rows.push((row, rhs));
    }

    /// Add `Σ coeffs[i] x_i ≥ rhs` through a fresh slack variable.
    pub fn at_least(&mut self, coeffs: &[(usize, i64)], rhs: i64) {
        let slack = self.add_variable();
        let mut c = coeffs.to_vec();
        c.push((slack, -1));
        self.equal(&c, rhs);
    }

    pub fn add_variable(&mut self) -> usize {
        for (row, _) in &mut self.rows {
            row.push(BigRational::zero());
        }
        self.n += 1;
        self.n - 1
    }

    /// Whether some rational `x ≥ 0` satisfies every row.
    pub fn feasible(&self) -> bool {
        let m = self.rows.len();
        if m == 0 {
            return true;
        }
        let n = self.n;
        // Tableau columns: n originals, m artificials, then the right-hand side.
        let width = n + m + 1;
        let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        for (k, (row, rhs)) in self.rows.iter().enumerate() {
            let flip = rhs.is_negative();
            let mut line: Vec<BigRational> = row.iter().map(|c| if flip { -c } else { c.clone() }).collect();
            line.extend((0..m).map(|j| if j == k { BigRational::one() } else { BigRational::zero() }));
            line.push(if flip { -rhs } else { rhs.clone() });
            t.push(line);
        }
        let mut basis: Vec<usize> = (n..n + m).collect();
        // Objective: minimise the sum of artificials, written as reduced costs.
        let mut cost = vec![BigRational::zero(); width];
        for line in &t {
            for j in 0..width {
                if j < n || j == width - 1 {
                    cost[j] -= &line[j];
                }
            }
        }
        loop {
            let entering = (0..n + m).find(|&j| cost[j].is_negative());
            let Some(e) = entering else { break };
            let mut leaving: Option<(usize, BigRational)> = None;
            for (i, line) in t.iter().enumerate() {
                if line[e].is_positive() {
                    let ratio = &line[width - 1] / &line[e];
                    let better = match &leaving {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leaving else { break };
            let pivot = t[r][e].clone();
            for x in t[r].iter_mut() {
                *x /= &pivot;
            }
            let pivot_row = t[r].clone();
            for (i, line) in t.iter_mut().enumerate() {
                if i != r && !line[e].is_zero() {
                    let f = line[e].clone();
                    for j in 0..width {
                        line[j] -= &f * &pivot_row[j];
                    }
                }
            }
            if !cost[e].is_zero() {
                let f = cost[e].clone();
                for j in 0..width {
                    cost[j] -= &f * &pivot_row[j];
                }
            }
            basis[r] = e;
        }
        cost[width - 1].is_zero()
    }
}
