//! Shared helpers for the integration test suites.

#![allow(dead_code)]

use rand::Rng;

use natred_core::catalog::{make_family, Family, FamilySpec};
use natred_core::linalg::Vector;
use natred_core::nr::NRStructure;
use natred_core::rational::{rat, Rational};

pub fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Independent rank oracle: plain forward elimination on row vectors,
/// sharing no code with the library's echelon routines.
#[allow(clippy::needless_range_loop)]
pub fn rank_oracle(rows: &[Vector]) -> usize {
    let mut m: Vec<Vector> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in (rank + 1)..nrows {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in c..ncols {
                    let val = &m[i][j] - &(&f * &m[rank][j]);
                    m[i][j] = val;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Small random rational with numerator in `-bound..=bound` and denominator
/// in `1..=3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Draws a random valid structure from the catalog families.
pub fn random_catalog_structure<R: Rng + ?Sized>(rng: &mut R) -> (FamilySpec, NRStructure) {
    let family = [
        Family::Loren2,
        Family::Dosdos2,
        Family::SlLorentz,
        Family::SlNeutral,
        Family::Loren1,
        Family::Dosdos1,
    ][rng.gen_range(0..6)];
    let eta = if rng.gen_bool(0.5) { rat(1) } else { rat(-1) };
    let spec = match family {
        Family::Loren2 | Family::Dosdos2 => FamilySpec::new(
            family,
            &[
                ("c", random_rational(rng, 3)),
                ("alpha", random_rational(rng, 3)),
                ("beta", random_rational(rng, 3)),
                ("delta", random_rational(rng, 3)),
            ],
        ),
        Family::SlLorentz => FamilySpec::new(
            family,
            &[
                ("c", random_nonzero(rng, 3)),
                ("eta", eta),
                ("alpha", random_nonzero(rng, 3)),
            ],
        ),
        Family::SlNeutral => FamilySpec::new(
            family,
            &[
                ("b", random_nonzero(rng, 3)),
                ("eta", eta),
                ("alpha", random_nonzero(rng, 3)),
            ],
        ),
        Family::Loren1 | Family::Dosdos1 => {
            FamilySpec::new(family, &[("lambda", random_nonzero(rng, 3))])
        }
        Family::Oscillator => unreachable!(),
    }
    .expect("sampled parameters are in domain");
    let structure = make_family(&spec)
        .structure
        .expect("family provides a structure");
    (spec, structure)
}
