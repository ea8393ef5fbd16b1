use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exp = u16;

/// Exponent vector. Trailing zeros are never stored, so two monomials that differ
/// only by zero padding compare, hash and test equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[Exp; 8]>,
}

impl Monomial {
    /// The empty product. `_nvars` is accepted for symmetry with the other constructors.
    pub fn one(_nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::new(),
        }
    }

    pub fn variable(_nvars: usize, idx: usize) -> Self {
        let mut exps = SmallVec::from_elem(0, idx + 1);
        exps[idx] = 1;
        Monomial { degree: 1, exps }
    }

    pub fn from_exps(exps: &[Exp], _nvars: usize) -> Self {
        let mut v: SmallVec<[Exp; 8]> = SmallVec::from_slice(exps);
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial {
            degree: v.iter().map(|&e| e as u32).sum(),
            exps: v,
        }
    }

    /// Stored exponents; may be shorter than the variable table.
    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    /// Exponents padded to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<Exp> {
        let mut v = self.exps.to_vec();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn exp(&self, idx: usize) -> Exp {
        self.exps.get(idx).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, &s) in exps.iter_mut().zip(short.exps.iter()) {
            *e = e.checked_add(s).expect("exponent overflow");
        }
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.len() > self.exps.len() || other.degree > self.degree {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, &o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_sub(o)?;
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn with_exp(&self, idx: usize, e: Exp) -> Monomial {
        let mut v = self.padded(idx + 1);
        v[idx] = e;
        Monomial::from_exps(&v, 0)
    }
}

/// Graded lexicographic: total degree first, then the first variable is most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for i in 0..n {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
