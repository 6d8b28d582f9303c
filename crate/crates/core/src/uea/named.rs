//! Distinguished elements of U(Vec ℝ) that the checks are built around.

use std::fmt;

use crate::arith::{q_poly, ratio, Coeff, Poly, Rat, Var};
use crate::error::Error;
use crate::linalg;

use super::sym::sym_mono;
use super::{monomials_of, nf_word, Mono, Uea, UeaElt};

/// Catalog of named elements. Parameters fix the choices the definitions
/// leave open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    S,
    Q,
    Z,
    Qe2,
    Y,
    /// A preimage of `Y` under `ad(e_-1)`; `shifted` adds `Q^{e2} e_-1`.
    Y1 { shifted: bool },
    GSw,
    H0Sw,
    H1Sw,
    X { shifted: bool },
    Omega { m: i64, k: i64, s: i64 },
}

impl Named {
    pub fn value(self) -> Result<UeaElt, Error> {
        Ok(match self {
            Named::S => s(),
            Named::Q => q(),
            Named::Z => z(),
            Named::Qe2 => qe2(),
            Named::Y => y(),
            Named::Y1 { shifted } => y1(shifted),
            Named::GSw => g_sw(),
            Named::H0Sw => h0_sw(),
            Named::H1Sw => h1_sw(),
            Named::X { shifted } => x_el(shifted),
            Named::Omega { m, k, s } => omega(m, k, s)?,
        })
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::S => write!(f, "S"),
            Named::Q => write!(f, "Q"),
            Named::Z => write!(f, "Z"),
            Named::Qe2 => write!(f, "Qe2"),
            Named::Y => write!(f, "Y"),
            Named::Y1 { shifted: false } => write!(f, "Y1"),
            Named::Y1 { shifted: true } => write!(f, "Y1'"),
            Named::GSw => write!(f, "g"),
            Named::H0Sw => write!(f, "h0"),
            Named::H1Sw => write!(f, "h1"),
            Named::X { shifted: false } => write!(f, "X"),
            Named::X { shifted: true } => write!(f, "X'"),
            Named::Omega { m, k, s } => write!(f, "Omega^({m})_({k},{s})"),
        }
    }
}

fn c(n: i64) -> Poly {
    Poly::from_int(n)
}

fn w(word: &[i32]) -> UeaElt {
    nf_word(word)
}

fn konst(p: Poly) -> UeaElt {
    Uea::constant(p)
}

/// The step element `2 e_2 (2 e_0 + 1) − 3 e_1²`: its adjoint action sends
/// lowest weight vectors of weight μ to lowest weight vectors of weight μ+2.
pub fn s() -> UeaElt {
    let two_e0_plus_1 = w(&[0]).scale(&c(2)).add(&Uea::one());
    w(&[2]).scale(&c(2)).mul(&two_e0_plus_1).sub(&w(&[1, 1]).scale(&c(3)))
}

/// `2 e_2 (2 e_0 − 1) − 3 e_1²`, which differs from [`s`] by `4 e_2` and is
/// not a step element.
pub fn s_minus() -> UeaElt {
    let two_e0_minus_1 = w(&[0]).scale(&c(2)).sub(&Uea::one());
    w(&[2]).scale(&c(2)).mul(&two_e0_minus_1).sub(&w(&[1, 1]).scale(&c(3)))
}

/// `e_0² − e_0 − e_1 e_-1`.
pub fn q() -> UeaElt {
    w(&[0, 0]).sub(&w(&[0])).sub(&w(&[1, -1]))
}

/// `½(e_1 e_0 − e_2 e_-1 − e_1)`.
pub fn z() -> UeaElt {
    w(&[1, 0]).sub(&w(&[2, -1])).sub(&w(&[1])).scale_rat(&ratio(1, 2))
}

/// `3 e_1² − 2 e_2 (2 e_0 + 1) + e_3 e_-1`.
pub fn qe2() -> UeaElt {
    let two_e0_plus_1 = w(&[0]).scale(&c(2)).add(&Uea::one());
    w(&[1, 1])
        .scale(&c(3))
        .sub(&w(&[2]).scale(&c(2)).mul(&two_e0_plus_1))
        .add(&w(&[3, -1]))
}

/// `Q (e_0 − ½) − Z e_-1`.
pub fn y() -> UeaElt {
    let shifted_e0 = w(&[0]).sub(&konst(Poly::constant(ratio(1, 2))));
    q().mul(&shifted_e0).sub(&z().mul(&w(&[-1])))
}

/// Basis of the weight-`mu` part of `sym_3(S³)` with its multiset labels.
fn sym3_basis(mu: i64) -> Vec<(Mono, Uea<Rat>)> {
    monomials_of(3, mu, |_| true).into_iter().map(|m| {
        let v = sym_mono(&m);
        (m, v)
    }).collect()
}

/// The preimage of `Y` under `ad(e_-1)` inside `sym_3(S³)` at weight 1
/// whose PBW coefficient on `e_3 e_-1²` vanishes.
pub fn y1(shifted: bool) -> UeaElt {
    let basis = sym3_basis(1);
    let em1 = Uea::<Rat>::gen(-1);
    let target = y().to_rat().expect("Y has constant coefficients");
    let anchor = Mono::from_ordered(&[3, -1, -1]);

    let mut monos: Vec<Mono> = Vec::new();
    let mut coord = |m: &Mono| -> usize {
        match monos.iter().position(|n| n == m) {
            Some(i) => i,
            None => {
                monos.push(m.clone());
                monos.len() - 1
            }
        }
    };
    // Columns: coordinates of ad(e_-1)(b), then one extra column carrying
    // the normalization on the anchor monomial.
    let mut images = Vec::new();
    for (_, b) in &basis {
        let mut v: Vec<(usize, Rat)> =
            em1.ad(b).terms().map(|(m, x)| (coord(m), x.clone())).collect();
        v.push((usize::MAX, b.coeff(&anchor)));
        images.push(v);
    }
    let mut rhs: Vec<(usize, Rat)> = target.terms().map(|(m, x)| (coord(m), x.clone())).collect();
    for v in images.iter_mut().chain(std::iter::once(&mut rhs)) {
        v.retain(|(_, x)| !num_traits::Zero::is_zero(x));
        v.sort_by_key(|(i, _)| *i);
    }
    let sol = linalg::solve(&images, &rhs).expect("Y lies in the image of ad(e_-1)");
    let mut out = Uea::<Rat>::zero();
    for (i, x) in sol {
        out = out.add(&basis[i].1.scale(&x));
    }
    let mut out = out.to_poly();
    if shifted {
        out = out.add(&qe2().mul(&w(&[-1])));
    }
    out
}

/// `e_1 e_5 − 4 e_2 e_4 + 3 e_3² + 2 e_6`.
pub fn g_sw() -> UeaElt {
    w(&[1, 5])
        .sub(&w(&[2, 4]).scale(&c(4)))
        .add(&w(&[3, 3]).scale(&c(3)))
        .add(&w(&[6]).scale(&c(2)))
}

/// `e_1 e_3 − e_2² − e_4`.
pub fn h0_sw() -> UeaElt {
    w(&[1, 3]).sub(&w(&[2, 2])).sub(&w(&[4]))
}

/// The weight-5 cubic element with coefficients depending on λ.
pub fn h1_sw() -> UeaElt {
    let lam = Poly::var(Var::Lambda);
    let lm1 = lam.clone() - c(1);
    let lm2 = lam.clone() - c(2);
    let two_lm3 = lam.clone() * c(2) - c(3);
    w(&[1, 2, 2])
        .sub(&w(&[1, 1, 3]))
        .add(&w(&[2, 3]).scale(&(lm1.clone() * c(2))))
        .sub(&w(&[1, 4]).scale(&two_lm3))
        .sub(&w(&[5]).scale(&(lm1 * lm2)))
}

/// `X = Z (Y − c Q) − (Q − q)(Y_1 − c Z)` with `c = λ − ½`.
pub fn x_el(shifted: bool) -> UeaElt {
    let cl = Poly::var(Var::Lambda) - Poly::constant(ratio(1, 2));
    let q_l = konst(q_poly(Var::Lambda));
    let y_minus = y().sub(&q().scale(&cl));
    let y1_minus = y1(shifted).sub(&z().scale(&cl));
    z().mul(&y_minus).sub(&q().sub(&q_l).mul(&y1_minus))
}

/// `Σ_{a=0}^{m} (−1)^a C(m,a) e_{k−a} e_{s+a}`, defined for `k + 1 ≥ m`
/// and `s ≥ −1`.
pub fn omega(m: i64, k: i64, s: i64) -> Result<UeaElt, Error> {
    if m < 0 || k + 1 - m < 0 || s < -1 {
        return Err(Error::OmegaRange { m, k, s });
    }
    let mut out = UeaElt::zero();
    for a in 0..=m {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        let coeff = c(sign * crate::arith::binomial(m, a));
        out = out.add(&w(&[(k - a) as i32, (s + a) as i32]).scale(&coeff));
    }
    Ok(out)
}

/// The symmetric element `{e_a, e_b, e_b}` lifted, used by the cubic
/// product formula checks.
pub fn sym_cubic(a: i32, b: i32) -> Uea<Rat> {
    sym_mono(&Mono::sorted(&[a, b, b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn q_renders_canonically() {
        assert_eq!(q().to_string(), "e_0^2 - e_1 e_-1 - e_0");
    }

    #[test]
    fn omega_small_cases() {
        assert_eq!(omega(2, 1, -1).unwrap(), q().scale(&c(-2)));
        assert!(omega(3, 2, -1).unwrap().is_zero());
        assert!(matches!(omega(3, 1, 0), Err(Error::OmegaRange { .. })));
    }

    #[test]
    fn y1_is_a_preimage() {
        let em1 = Uea::<Poly>::gen(-1);
        for shifted in [false, true] {
            assert_eq!(em1.ad(&y1(shifted)), y());
        }
        assert!(y1(false).coeff(&Mono::from_ordered(&[3, -1, -1])).is_zero());
    }
}
