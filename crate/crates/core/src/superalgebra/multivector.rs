use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::AlgebraError;
use crate::text::format_rational;
use crate::Rational;

/// `x^exponents * xi_{bits}` with the odd factors in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub xi: u64,
    pub x: Vec<u32>,
}

impl Monomial {
    pub fn xi_degree(&self) -> usize {
        self.xi.count_ones() as usize
    }
}

/// Sign of `xi_a * xi_b` brought to increasing order; `None` if they share a
/// factor.
pub(crate) fn wedge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    // count pairs (s in a, t in b) with s > t
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let t = rest.trailing_zeros();
        swaps += (a >> t >> 1).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Multivector {
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Multivector {
        let mut m = Multivector::zero(dim);
        m.add_monomial(
            Monomial {
                xi: 0,
                x: vec![0; dim],
            },
            c,
        );
        m
    }

    pub fn one(dim: usize) -> Multivector {
        Multivector::constant(dim, Rational::one())
    }

    /// The even generator `x_{i+1}`.
    pub fn x(dim: usize, i: usize) -> Multivector {
        let mut x = vec![0; dim];
        x[i] = 1;
        let mut m = Multivector::zero(dim);
        m.add_monomial(Monomial { xi: 0, x }, Rational::one());
        m
    }

    /// The odd generator `xi_{i+1}`.
    pub fn xi(dim: usize, i: usize) -> Multivector {
        let mut m = Multivector::zero(dim);
        m.add_monomial(
            Monomial {
                xi: 1 << i,
                x: vec![0; dim],
            },
            Rational::one(),
        );
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn add_monomial(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn add_assign_scaled(&mut self, other: &Multivector, factor: &Rational) {
        for (m, c) in &other.terms {
            self.add_monomial(m.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        if !factor.is_zero() {
            out.add_assign_scaled(self, factor);
        }
        out
    }

    /// The distinct odd degrees occurring.
    pub fn xi_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|m| m.xi_degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// True when some term has odd degree in the `xi`.
    pub fn has_odd_part(&self) -> bool {
        self.terms.keys().any(|m| m.xi_degree() % 2 == 1)
    }

    pub fn is_bivector(&self) -> bool {
        self.terms.keys().all(|m| m.xi_degree() == 2)
    }

    /// Coefficient of `xi_a xi_b` (0-based, any order) as a polynomial.
    pub fn bivector_component(&self, a: usize, b: usize) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        if a == b {
            return out;
        }
        let bits = (1u64 << a) | (1u64 << b);
        let flip = a > b;
        for (m, c) in &self.terms {
            if m.xi == bits {
                let c = if flip { -c.clone() } else { c.clone() };
                out.add_monomial(
                    Monomial {
                        xi: 0,
                        x: m.x.clone(),
                    },
                    c,
                );
            }
        }
        out
    }

    pub fn partial_x(&self, i: usize) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.x[i];
            if e == 0 {
                continue;
            }
            let mut x = m.x.clone();
            x[i] -= 1;
            out.add_monomial(
                Monomial { xi: m.xi, x },
                c * Rational::from_integer(e.into()),
            );
        }
        out
    }

    /// Left derivative: `xi_i` is first moved to the front.
    pub fn partial_xi_left(&self, i: usize) -> Multivector {
        self.partial_xi(i, |xi| (xi & ((1u64 << i) - 1)).count_ones())
    }

    /// Right derivative: `xi_i` is first moved to the back.
    pub fn partial_xi_right(&self, i: usize) -> Multivector {
        self.partial_xi(i, |xi| (xi >> i >> 1).count_ones())
    }

    fn partial_xi(&self, i: usize, passes: impl Fn(u64) -> u32) -> Multivector {
        let bit = 1u64 << i;
        let mut out = Multivector::zero(self.dim);
        for (m, c) in &self.terms {
            if m.xi & bit == 0 {
                continue;
            }
            let c = if passes(m.xi) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            out.add_monomial(
                Monomial {
                    xi: m.xi & !bit,
                    x: m.x.clone(),
                },
                c,
            );
        }
        out
    }

    /// Places `self` into copy `copy` of `copies` copies of the variables:
    /// variable `a` becomes `copy * dim + a`.
    pub(crate) fn embed(&self, copy: usize, copies: usize) -> Multivector {
        let big = self.dim * copies;
        let mut out = Multivector::zero(big);
        for (m, c) in &self.terms {
            let mut x = vec![0; big];
            x[copy * self.dim..(copy + 1) * self.dim].copy_from_slice(&m.x);
            out.add_monomial(
                Monomial {
                    xi: m.xi << (copy * self.dim),
                    x,
                },
                c.clone(),
            );
        }
        out
    }

    /// Identifies all copies of the variables with the first one.
    pub(crate) fn restrict_to_diagonal(&self, dim: usize) -> Multivector {
        let mut out = Multivector::zero(dim);
        let copies = self.dim / dim;
        for (m, c) in &self.terms {
            let mut x = vec![0u32; dim];
            for (v, e) in m.x.iter().enumerate() {
                x[v % dim] += e;
            }
            // multiply the odd factors copy by copy, left to right
            let mut xi = 0u64;
            let mut negative = false;
            let mask = (1u64 << dim) - 1;
            let mut ok = true;
            for k in 0..copies {
                let part = (m.xi >> (k * dim)) & mask;
                match wedge_sign(xi, part) {
                    Some(s) => {
                        negative ^= s;
                        xi |= part;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                out.add_monomial(
                    Monomial { xi, x },
                    if negative { -c.clone() } else { c.clone() },
                );
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Multivector {
        let mut acc = Multivector::one(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn check_dims(a: &Multivector, b: &Multivector) {
    assert_eq!(
        a.dim,
        b.dim,
        "{}",
        AlgebraError::DimensionMismatch(a.dim, b.dim)
    );
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        check_dims(self, rhs);
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        check_dims(self, rhs);
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scaled(&-Rational::one())
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        check_dims(self, rhs);
        let mut out = Multivector::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let Some(negative) = wedge_sign(a.xi, b.xi) else {
                    continue;
                };
                let x = a.x.iter().zip(&b.x).map(|(p, q)| p + q).collect();
                let c = ca * cb;
                out.add_monomial(
                    Monomial { xi: a.xi | b.xi, x },
                    if negative { -c } else { c },
                );
            }
        }
        out
    }
}

/// `[[F, G]] = Σ_a (F ∂⃖/∂xi_a)(∂/∂x_a G) - (F ∂⃖/∂x_a)(∂⃗/∂xi_a G)`.
pub fn schouten(f: &Multivector, g: &Multivector) -> Multivector {
    check_dims(f, g);
    let mut out = Multivector::zero(f.dim);
    for a in 0..f.dim {
        out = &out + &(&f.partial_xi_right(a) * &g.partial_x(a));
        out = &out - &(&f.partial_x(a) * &g.partial_xi_left(a));
    }
    out
}

/// `[[P, P]]`, which vanishes exactly for Poisson bivectors.
pub fn jacobiator(p: &Multivector) -> Multivector {
    schouten(p, p)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (v, &e) in m.x.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", v + 1)),
                    _ => factors.push(format!("x{}^{}", v + 1, e)),
                }
            }
            for v in 0..64 {
                if m.xi >> v & 1 == 1 {
                    factors.push(format!("xi{}", v + 1));
                }
            }
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let body = factors.join("*");
            if factors.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), body)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::parse_multivector;

    fn mv(s: &str, d: usize) -> Multivector {
        parse_multivector(s, d).unwrap()
    }

    #[test]
    fn odd_variables_anticommute() {
        let a = Multivector::xi(3, 0);
        let b = Multivector::xi(3, 1);
        assert_eq!(&a * &b, -&(&b * &a));
        assert!((&a * &a).is_zero());
    }

    #[test]
    fn left_and_right_derivatives() {
        let m = mv("xi1*xi2*xi3", 3);
        assert_eq!(m.partial_xi_left(1), mv("-xi1*xi3", 3));
        assert_eq!(m.partial_xi_right(1), mv("-xi1*xi3", 3));
        assert_eq!(m.partial_xi_left(0), mv("xi2*xi3", 3));
        assert_eq!(m.partial_xi_right(0), mv("xi2*xi3", 3));
        let m = mv("xi1*xi2", 2);
        assert_eq!(m.partial_xi_left(1), mv("-xi1", 2));
        assert_eq!(m.partial_xi_right(1), mv("xi1", 2));
    }

    #[test]
    fn schouten_of_a_vector_and_a_function() {
        // [[xi1, x1^2]] = 2 x1
        let s = schouten(&Multivector::xi(1, 0), &mv("x1^2", 1));
        assert_eq!(s, mv("2*x1", 1));
    }

    #[test]
    fn diagonal_restriction_orders_copies() {
        let a = Multivector::xi(2, 1).embed(0, 2);
        let b = Multivector::xi(2, 0).embed(1, 2);
        assert_eq!((&a * &b).restrict_to_diagonal(2), mv("-xi1*xi2", 2));
        let c = Multivector::xi(2, 0).embed(0, 2);
        assert!((&c * &b).restrict_to_diagonal(2).is_zero());
    }

    #[test]
    fn display() {
        let m = mv("-x1^2*xi1 + 3/2*xi2 - 1", 2);
        assert_eq!(mv(&m.to_string(), 2), m);
        assert_eq!(Multivector::zero(2).to_string(), "0");
    }
}
