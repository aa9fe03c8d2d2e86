//! Exact real roots of univariate polynomials that lie in Q or in a real
//! quadratic field, found by Sturm isolation and integer reconstruction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{FieldElement, Radicand};
use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Real roots representable in Q or Q(sqrt(d)), together with the total
/// number of distinct real roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoots {
    /// Ascending.
    pub roots: Vec<FieldElement>,
    pub real_count: usize,
}

impl RealRoots {
    pub fn all_representable(&self) -> bool {
        self.roots.len() == self.real_count
    }
}

#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Distinct real roots of `p` that lie in the tower of its coefficients
/// (any quadratic field when `p` is rational).
pub fn real_roots(p: &UPoly) -> Result<RealRoots> {
    if p.is_zero() {
        return Err(Error::ZeroForm);
    }
    let tower = p.tower()?;
    let sf = p.square_free_part();
    if sf.degree() == Some(0) {
        return Ok(RealRoots { roots: Vec::new(), real_count: 0 });
    }
    let rational = if sf.is_rational() {
        sf.clone()
    } else {
        sf.mul(&sf.conj()).square_free_part()
    };
    let q = primitive_integer(&rational);
    let lc = q.last().unwrap().abs();
    let qp = UPoly::new(q.iter().map(|c| FieldElement::from(Rational::from(c.clone()))).collect());

    let mut intervals = isolate(&qp);
    let mut found: Vec<(usize, FieldElement)> = Vec::new();
    let mut consumed = vec![false; intervals.len()];

    for (i, iv) in intervals.iter_mut().enumerate() {
        if let Some(r) = rational_root_in(&qp, iv, &lc) {
            consumed[i] = true;
            found.push((i, FieldElement::rational(r)));
        }
    }

    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            if consumed[i] || consumed[j] {
                continue;
            }
            if let Some((a, b)) = conjugate_pair(&qp, &mut intervals, i, j, &lc)? {
                consumed[i] = true;
                consumed[j] = true;
                found.push((i, a));
                found.push((j, b));
            }
        }
    }

    found.sort_by_key(|(i, _)| *i);
    let roots: Vec<FieldElement> = found
        .into_iter()
        .map(|(_, r)| r)
        .filter(|r| compatible(r.radicand(), tower.as_ref()) && sf.eval(r).is_zero())
        .collect();

    let real_count = if sf.is_rational() {
        intervals.len()
    } else {
        let bound = cauchy_bound(&qp);
        let seq = sturm_sequence(&sf);
        variations(&seq, &(-&bound)) - variations(&seq, &bound)
    };
    Ok(RealRoots { roots, real_count })
}

/// Projective real roots `(s : t)` of a binary form given by its coefficients
/// on `s^n, s^(n-1) t, ..., t^n`. The count includes unrepresentable roots.
pub fn binary_roots(coeffs: &[FieldElement]) -> Result<(Vec<[FieldElement; 2]>, usize)> {
    if coeffs.iter().all(FieldElement::is_zero) {
        return Err(Error::ZeroForm);
    }
    let affine = UPoly::new(coeffs.iter().rev().cloned().collect());
    let mut points = Vec::new();
    let mut count = 0;
    if affine.degree() != Some(0) {
        let rr = real_roots(&affine)?;
        count += rr.real_count;
        points.extend(rr.roots.into_iter().map(|r| [r, FieldElement::one()]));
    }
    if coeffs[0].is_zero() {
        count += 1;
        points.push([FieldElement::one(), FieldElement::zero()]);
    }
    Ok((points, count))
}

fn compatible(r: Option<&Radicand>, tower: Option<&Radicand>) -> bool {
    match (r, tower) {
        (None, _) => true,
        (Some(_), None) => true,
        (Some(a), Some(b)) => a == b,
    }
}

fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    let rats: Vec<&Rational> = p.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
    let l = Rational::lcm_denominators(rats.iter().copied());
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&l / r.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn cauchy_bound(p: &UPoly) -> Rational {
    let lead = p.lead().unwrap().as_rational().unwrap().abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.as_rational().unwrap().abs())
        .max()
        .unwrap();
    Rational::one() + &max / &lead
}

fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        seq.push(r.scale(&FieldElement::from(-1)));
    }
    seq
}

fn variations(seq: &[UPoly], t: &Rational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in seq {
        let v = s.eval_rational(t).signum();
        if v == 0 {
            continue;
        }
        if last != 0 && v != last {
            count += 1;
        }
        last = v;
    }
    count
}

fn sign_at(p: &UPoly, t: &Rational) -> i32 {
    p.eval_rational(t).signum()
}

/// Disjoint intervals, ascending, each holding exactly one real root of the
/// square-free rational `p`; endpoints are never roots unless the interval
/// is a single point.
fn isolate(p: &UPoly) -> Vec<Interval> {
    let seq = sturm_sequence(p);
    let b = cauchy_bound(p);
    let lo = -&b;
    let n = variations(&seq, &lo) - variations(&seq, &b);
    let mut out = Vec::new();
    let mut stack = vec![(lo, b, n)];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(Interval { lo, hi }),
            _ => {
                let mid = split_point(p, &lo, &hi);
                let vm = variations(&seq, &mid);
                let left = variations(&seq, &lo) - vm;
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn split_point(p: &UPoly, lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    for den in 2i64.. {
        for num in 1..den {
            if num.gcd(&den) != 1 {
                continue;
            }
            let t = lo + &(&w * &Rational::new(num, den));
            if sign_at(p, &t) != 0 {
                return t;
            }
        }
    }
    unreachable!()
}

fn bisect(p: &UPoly, iv: &mut Interval) {
    if iv.is_point() {
        return;
    }
    let mid = (&iv.lo + &iv.hi) / Rational::from(2);
    let s = sign_at(p, &mid);
    if s == 0 {
        iv.lo = mid.clone();
        iv.hi = mid;
    } else if s == sign_at(p, &iv.lo) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

fn rational_root_in(p: &UPoly, iv: &mut Interval, lc: &BigInt) -> Option<Rational> {
    let lcr = Rational::from(lc.clone());
    while !iv.is_point() && &iv.width() * &lcr >= Rational::one() {
        bisect(p, iv);
    }
    if iv.is_point() {
        return Some(iv.lo.clone());
    }
    let k = (&iv.lo * &lcr).floor() + BigInt::one();
    let cand = Rational::new(k, lc.clone());
    if cand < iv.hi && sign_at(p, &cand) == 0 {
        iv.lo = cand.clone();
        iv.hi = cand.clone();
        return Some(cand);
    }
    None
}

fn integers_in(lo: &Rational, hi: &Rational) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut k = lo.ceil();
    let top = hi.floor();
    while k <= top {
        out.push(k.clone());
        k += 1;
    }
    out
}

/// Looks for a conjugate pair of quadratic irrationals in intervals `i`, `j`.
fn conjugate_pair(
    p: &UPoly,
    ivs: &mut [Interval],
    i: usize,
    j: usize,
    lc: &BigInt,
) -> Result<Option<(FieldElement, FieldElement)>> {
    let lcr = Rational::from(lc.clone());
    let lc2 = &lcr * &lcr;
    for _ in 0..4096 {
        let (a, b) = (&ivs[i], &ivs[j]);
        let sum_w = &(&a.width() + &b.width()) * &lcr;
        let corners = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let pmin = corners.iter().min().unwrap().clone();
        let pmax = corners.iter().max().unwrap().clone();
        let prod_w = &(&pmax - &pmin) * &lc2;
        if sum_w < Rational::one() && prod_w < Rational::one() {
            let sigmas = integers_in(&(&(&a.lo + &b.lo) * &lcr), &(&(&a.hi + &b.hi) * &lcr));
            let pis = integers_in(&(&pmin * &lc2), &(&pmax * &lc2));
            for s in &sigmas {
                for pi in &pis {
                    let disc = Rational::from(s * s - BigInt::from(4) * pi);
                    if disc.signum() <= 0 {
                        continue;
                    }
                    // lc² t² - lc σ t + π must divide p.
                    let factor = UPoly::new(vec![
                        FieldElement::rational(Rational::from(pi.clone())),
                        FieldElement::rational(Rational::from(-(s * lc))),
                        FieldElement::rational(lc2.clone()),
                    ]);
                    if !p.div_rem(&factor).1.is_zero() {
                        continue;
                    }
                    let Ok(Some(root)) = FieldElement::sqrt_rational(&disc) else {
                        continue;
                    };
                    if root.is_rational() {
                        continue;
                    }
                    let two_lc = FieldElement::rational(Rational::from(BigInt::from(2) * lc));
                    let sfe = FieldElement::rational(Rational::from(s.clone()));
                    let lo_root = &(&sfe - &root) / &two_lc;
                    let hi_root = &(&sfe + &root) / &two_lc;
                    if p.eval(&lo_root).is_zero() && p.eval(&hi_root).is_zero() {
                        return Ok(Some((lo_root, hi_root)));
                    }
                }
            }
            return Ok(None);
        }
        if ivs[i].width() * lcr.clone() >= ivs[j].width() * lcr.clone() {
            bisect(p, &mut ivs[i]);
        } else {
            bisect(p, &mut ivs[j]);
        }
    }
    Err(Error::UnsupportedAlgebraicDegree(
        "root refinement did not converge".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn roots_str(p: &UPoly) -> (Vec<alloc::string::String>, usize) {
        let r = real_roots(p).unwrap();
        (r.roots.iter().map(|x| x.to_string()).collect(), r.real_count)
    }

    #[test]
    fn rational_roots() {
        // (2t-1)(t+3)(t-5)
        let p = UPoly::from_ints(&[15, -28, -5, 2]);
        assert_eq!(roots_str(&p), (vec!["-3".into(), "1/2".into(), "5".into()], 3));
    }

    #[test]
    fn quadratic_irrational_roots() {
        // (t^2 - 2)(t - 1)
        let p = UPoly::from_ints(&[2, -2, -1, 1]);
        let (r, n) = roots_str(&p);
        assert_eq!(n, 3);
        assert_eq!(r, vec!["-sqrt(2)", "1", "sqrt(2)"]);
    }

    #[test]
    fn irreducible_cubic_has_no_representable_roots() {
        // t^3 - 3t + 1 has three real roots in a cyclic cubic field.
        let p = UPoly::from_ints(&[1, -3, 0, 1]);
        let r = real_roots(&p).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.real_count, 3);
    }

    #[test]
    fn mixed_fields_and_multiplicity() {
        // (t^2 - 2)(t^2 - 3)^2 (t^2 + 1)
        let a = UPoly::from_ints(&[-2, 0, 1]);
        let b = UPoly::from_ints(&[-3, 0, 1]);
        let c = UPoly::from_ints(&[1, 0, 1]);
        let p = a.mul(&b).mul(&b).mul(&c);
        let r = real_roots(&p).unwrap();
        assert_eq!(r.real_count, 4);
        assert_eq!(r.roots.len(), 4);
    }

    #[test]
    fn tower_coefficients() {
        // (t - sqrt(5)) (t - 1) (t^2 + 1)
        let s5 = FieldElement::sqrt_radicand(&Radicand::new(5).unwrap());
        let p = UPoly::linear_root(&s5)
            .mul(&UPoly::from_ints(&[-1, 1]))
            .mul(&UPoly::from_ints(&[1, 0, 1]));
        let (r, n) = roots_str(&p);
        assert_eq!(n, 2);
        assert_eq!(r, vec!["1", "sqrt(5)"]);
    }

    #[test]
    fn projective_roots() {
        // s^2 t - s t^2 = s t (s - t): roots (0:1), (1:1), (1:0)
        let c: Vec<FieldElement> = [0, 1, -1, 0].iter().map(|&v| FieldElement::from(v)).collect();
        let (pts, n) = binary_roots(&c).unwrap();
        assert_eq!(n, 3);
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().any(|p| p[1].is_zero()));
    }
}
