//! Exact rational scalars.
//!
//! Every coefficient in the kernel is a `Rational`: an arbitrary-precision
//! fraction stored reduced with a positive denominator. `num::BigRational`
//! already guarantees that normal form, so it is used directly; this module
//! adds construction shorthands and the `"p/q"` string form used by the
//! structure-file format.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

pub type Rational = num::BigRational;

/// `p/q` as an exact rational. Panics on a zero denominator.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as an exact rational.
pub fn rint(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn rzero() -> Rational {
    Rational::zero()
}

pub fn rone() -> Rational {
    Rational::one()
}

/// Serializes as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`. The stored value is reduced with denominator > 0
/// regardless of the input's sign placement.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Reduction of a rational modulo a prime: `num * den^-1 mod p`.
/// Fails when `p` divides the denominator.
pub fn reduce_mod_p(r: &Rational, p: u64) -> Result<u64, String> {
    let pb = BigInt::from(p);
    let num = ((r.numer() % &pb) + &pb) % &pb;
    let den = ((r.denom() % &pb) + &pb) % &pb;
    let den_u: u64 = den.try_into().unwrap();
    if den_u == 0 {
        return Err(format!(
            "denominator of {} not invertible modulo {p}",
            format_rational(r)
        ));
    }
    let num_u: u64 = num.try_into().unwrap();
    Ok(mulmod(num_u, inv_mod(den_u, p), p))
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse modulo a prime via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    result
}

/// True when |r| <= bound; used by witness-search heuristics.
pub fn abs_le(r: &Rational, bound: i64) -> bool {
    r.abs() <= rint(bound.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(format_rational(&r), "-2/3");
        assert_eq!(format_rational(&rzero()), "0");
        assert_eq!(format_rational(&rint(7)), "7");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-3", "2/3", "-7/4", "10/5"] {
            let r = parse_rational(s).unwrap();
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(parse_rational("10/5").unwrap(), rint(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn mod_p_reduction() {
        assert_eq!(reduce_mod_p(&rat(1, 2), 5).unwrap(), 3); // 2*3 = 6 = 1 mod 5
        assert_eq!(reduce_mod_p(&rint(-1), 5).unwrap(), 4);
        assert!(reduce_mod_p(&rat(1, 5), 5).is_err());
    }
}
