//! Truncated formal power series in q with big-integer coefficients.
//!
//! Arithmetic is exact modulo q^(N+1); binary operations on mismatched
//! truncations use the minimum N and never silently extend precision.

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPolynomial {
    /// coeffs[e] is the coefficient of q^e, for e = 0..=degree.
    coeffs: Vec<BigUint>,
}

impl QPolynomial {
    pub fn zero(degree: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigUint::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut p = QPolynomial::zero(degree);
        p.coeffs[0] = BigUint::one();
        p
    }

    /// q^e truncated at the degree (zero if e exceeds it).
    pub fn monomial(e: usize, degree: usize) -> Self {
        let mut p = QPolynomial::zero(degree);
        if e <= degree {
            p.coeffs[e] = BigUint::one();
        }
        p
    }

    /// The geometric series 1/(1−q^h) = Σ_k q^(hk), truncated.
    pub fn geometric(h: usize, degree: usize) -> Self {
        assert!(h >= 1, "geometric factor needs h >= 1");
        let mut p = QPolynomial::zero(degree);
        let mut e = 0;
        while e <= degree {
            p.coeffs[e] = BigUint::one();
            e += h;
        }
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty());
        QPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> BigUint {
        self.coeffs.get(e).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let n = self.degree().min(other.degree());
        let coeffs = (0..=n).map(|e| self.coeff(e) + other.coeff(e)).collect();
        QPolynomial { coeffs }
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        let n = self.degree().min(other.degree());
        let mut coeffs = vec![BigUint::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial { coeffs }
    }

    /// Multiplies by q^e, keeping the truncation degree.
    pub fn shift(&self, e: usize) -> QPolynomial {
        let n = self.degree();
        let mut coeffs = vec![BigUint::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i + e <= n {
                coeffs[i + e] = a.clone();
            }
        }
        QPolynomial { coeffs }
    }

    /// Increments the coefficient of q^e (no-op past the truncation).
    pub fn bump(&mut self, e: usize) {
        if e < self.coeffs.len() {
            self.coeffs[e] += BigUint::one();
        }
    }

    /// Re-truncates to a smaller degree.
    pub fn truncate(&self, degree: usize) -> QPolynomial {
        let coeffs = (0..=degree.min(self.degree()))
            .map(|e| self.coeff(e))
            .collect();
        QPolynomial { coeffs }
    }
}

impl std::fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && e > 0 {
                String::new()
            } else {
                c.to_string()
            };
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
