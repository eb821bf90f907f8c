use num_bigint::BigInt;
use num_traits::One;

use super::{MinimalCF, OrdinaryCF, Sign, Term};

/// Rewrites an ordinary continued fraction into minimal-remainder form.
///
/// Quotients greater than 1 carry over unchanged. A quotient `b_{i+1} = 1`
/// is removed with
///
/// ```text
/// b_i + 1/(1 + 1/(b_{i+2} + α)) = (b_i + 1) - 1/(b_{i+2} + 1 + α)
/// ```
///
/// and the scan resumes after `b_{i+2}`, whose tail is again ordinary.
pub fn convert_ordinary_to_minimal(cf: &OrdinaryCF) -> MinimalCF {
    let b = cf.quotients();
    let mut a0 = cf.a0().clone();
    let mut terms: Vec<Term> = Vec::with_capacity(b.len());
    let mut i = 0;
    while i < b.len() {
        if b[i].is_one() {
            // the last ordinary quotient is at least 2, so b[i + 1] exists
            match terms.last_mut() {
                Some(prev) => prev.a += 1,
                None => a0 += 1,
            }
            terms.push(Term {
                eps: Sign::Minus,
                a: &b[i + 1] + BigInt::one(),
            });
            i += 2;
        } else {
            terms.push(Term {
                eps: Sign::Plus,
                a: b[i].clone(),
            });
            i += 1;
        }
    }
    MinimalCF::new(a0, terms).expect("conversion preserves the minimal-form constraints")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfkit::{expand_minimal, expand_ordinary};
    use crate::exactnum::Rational;

    fn ocf(a0: i64, q: &[i64]) -> OrdinaryCF {
        OrdinaryCF::new(a0, q.iter().map(|&a| BigInt::from(a)).collect()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let m = convert_ordinary_to_minimal(&ocf(0, &[1, 2, 2]));
        assert_eq!(m.to_string(), "1; -1/3, +1/2");
        let m = convert_ordinary_to_minimal(&ocf(0, &[2, 2]));
        assert_eq!(m.to_string(), "0; +1/2, +1/2");
        let m = convert_ordinary_to_minimal(&ocf(0, &[2]));
        assert_eq!(m.to_string(), "0; +1/2");
    }

    #[test]
    fn runs_of_ones() {
        // [0; 1, 1, 1, 1, 2] exercises back-to-back rewrites
        let cf = ocf(0, &[1, 1, 1, 1, 2]);
        let x = cf.evaluate();
        assert_eq!(convert_ordinary_to_minimal(&cf), expand_minimal(&x));
    }

    #[test]
    fn agrees_with_centered_division_small() {
        for q in 1..=80i64 {
            for p in -q..=2 * q {
                let x = Rational::from_i64(p, q).unwrap();
                assert_eq!(
                    convert_ordinary_to_minimal(&expand_ordinary(&x)),
                    expand_minimal(&x),
                    "x = {x}"
                );
            }
        }
    }
}
