use crate::error::{Error, Result};
use crate::exactlin::{gi, ComplexMatrix};

/// Chevalley generators of `sl(n, ℂ)` on `ℂⁿ`: `Hᵢ = E_ii − E_{i+1,i+1}`,
/// `Eᵢ = E_{i,i+1}`, `Fᵢ = E_{i+1,i}` for `i = 1, …, n−1` (stored 0-based).
#[derive(Debug, Clone)]
pub struct CartanData {
    pub n: usize,
    pub h: Vec<ComplexMatrix>,
    pub e: Vec<ComplexMatrix>,
    pub f: Vec<ComplexMatrix>,
}

fn unit(n: usize, a: usize, b: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    m[(a, b)] = gi(1, 0);
    m
}

/// Cartan integers of `A_{n−1}`, 0-based.
pub fn cartan_integer(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

pub fn cartan_data(n: usize) -> Result<CartanData> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("sl({n}) has no roots")));
    }
    let h = (0..n - 1)
        .map(|i| {
            let mut m = unit(n, i, i);
            m[(i + 1, i + 1)] = gi(-1, 0);
            m
        })
        .collect();
    let e = (0..n - 1).map(|i| unit(n, i, i + 1)).collect();
    let f = (0..n - 1).map(|i| unit(n, i + 1, i)).collect();
    Ok(CartanData { n, h, e, f })
}

impl CartanData {
    /// Checks `[Hᵢ, Hⱼ] = 0`, `[Hᵢ, Eⱼ] = a_ij Eⱼ`, `[Hᵢ, Fⱼ] = −a_ij Fⱼ` and
    /// `[Eᵢ, Fⱼ] = δ_ij Hᵢ`; returns a witness on failure.
    pub fn verify(&self) -> Option<String> {
        let r = self.h.len();
        for i in 0..r {
            for j in 0..r {
                if !self.h[i].commutator(&self.h[j]).is_zero() {
                    return Some(format!("[H{}, H{}] != 0", i + 1, j + 1));
                }
                let a = gi(cartan_integer(i, j), 0);
                if self.h[i].commutator(&self.e[j]) != self.e[j].scale(&a) {
                    return Some(format!("[H{}, E{}] != {}·E{}", i + 1, j + 1, a.re, j + 1));
                }
                if self.h[i].commutator(&self.f[j]) != self.f[j].scale(&-a) {
                    return Some(format!("[H{}, F{}] wrong", i + 1, j + 1));
                }
                let ef = self.e[i].commutator(&self.f[j]);
                let ok = if i == j { ef == self.h[i] } else { ef.is_zero() };
                if !ok {
                    return Some(format!("[E{}, F{}] wrong", i + 1, j + 1));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        for n in 3..=8 {
            let cd = cartan_data(n).unwrap();
            assert_eq!(cd.verify(), None, "n = {n}");
        }
    }

    #[test]
    fn first_relations() {
        let cd = cartan_data(3).unwrap();
        assert_eq!(cd.h[0].commutator(&cd.e[0]), cd.e[0].scale(&gi(2, 0)));
        let e13 = unit(3, 0, 2);
        assert_eq!(cd.e[0].commutator(&cd.e[1]), e13);
    }
}
