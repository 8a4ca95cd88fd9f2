use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Torus enumerations above this many elements are refused.
pub const TORUS_BOUND: u64 = 2_000_000;

/// Image of a similitude map inside a finite unit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimImage {
    pub image: usize,
    pub target: usize,
}

impl SimImage {
    pub fn surjective(&self) -> bool {
        self.image == self.target
    }
}

fn units<S: Scalar>() -> Result<Vec<S>> {
    let elems = S::elements().ok_or_else(|| Error::Unsupported(format!("{} is not finite", S::descriptor())))?;
    Ok(elems.into_iter().filter(|x| !x.is_zero()).collect())
}

/// Subgroup of a finite abelian group generated by `gens`.
fn generated<T: Clone + Eq + std::hash::Hash>(one: T, gens: &[T], mul: impl Fn(&T, &T) -> T) -> HashSet<T> {
    let mut seen = HashSet::from([one.clone()]);
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

type Triple<S> = [S; 3];

fn tmul<S: Scalar>(a: &Triple<S>, b: &Triple<S>) -> Triple<S> {
    [a[0].clone() * b[0].clone(), a[1].clone() * b[1].clone(), a[2].clone() * b[2].clone()]
}

/// `x^#/x = (bc/a, ca/b, ab/c)` on the split algebra `E = F³`.
fn sharp_over<S: Scalar>(x: &Triple<S>) -> Result<Triple<S>> {
    let [a, b, c] = x.clone();
    Ok([(b.clone() * c.clone()).try_div(&a)?, (c * a.clone()).try_div(&b)?, (a * b.clone()).try_div(&x[2])?])
}

fn one3<S: Scalar>() -> Triple<S> {
    [S::one(), S::one(), S::one()]
}

fn sharp_quotients<S: Scalar>(u: &[S]) -> Result<Vec<Triple<S>>> {
    let mut out = Vec::new();
    for a in u {
        for b in u {
            for c in u {
                out.push(sharp_over(&[a.clone(), b.clone(), c.clone()])?);
            }
        }
    }
    Ok(out)
}

fn target_size<S: Scalar>(u: &[S]) -> usize {
    u.len().pow(3)
}

/// Subgroup of `E^×` (`E = F³` split) generated by `det(GL₂(E))` and
/// `{x^#/x}`. With `with_det = false` only the second set is used, which is
/// the `SL₂(E)` variant.
pub fn sim_image_gl2e<S: Scalar>(with_det: bool) -> Result<SimImage> {
    let u = units::<S>()?;
    let all = S::elements().expect("finite");
    let mut gens = sharp_quotients(&u)?;
    if with_det {
        let mut dets = HashSet::new();
        for a in &all {
            for b in &all {
                for c in &all {
                    for d in &all {
                        let det = a.clone() * d.clone() - b.clone() * c.clone();
                        if !det.is_zero() {
                            dets.insert(det);
                        }
                    }
                }
            }
        }
        for d in dets {
            gens.push([d.clone(), S::one(), S::one()]);
            gens.push([S::one(), d.clone(), S::one()]);
            gens.push([S::one(), S::one(), d]);
        }
    }
    let image = generated(one3(), &gens, tmul::<S>);
    Ok(SimImage { image: image.len(), target: target_size(&u) })
}

/// Image of `(x, y, z) ↦ x·y·z^#/z` on `(E^×)³`; with `frozen` the first two
/// arguments are pinned to 1.
pub fn sim_image_torus<S: Scalar>(frozen: bool) -> Result<SimImage> {
    let u = units::<S>()?;
    let quotients: HashSet<Triple<S>> = sharp_quotients(&u)?.into_iter().collect();
    let mut image = quotients.clone();
    if !frozen {
        let mut xy = HashSet::new();
        for a in &u {
            for b in &u {
                for c in &u {
                    xy.insert([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
        let mut next = HashSet::new();
        for x in &xy {
            for y in &xy {
                let p = tmul(x, y);
                for q in &quotients {
                    next.insert(tmul(&p, q));
                }
            }
        }
        image = next;
    }
    Ok(SimImage { image: image.len(), target: target_size(&u) })
}

/// Image of `g ↦ det(g)/sim(g)` over the diagonal torus of `GU_n(F_q)` with
/// the standard form, where `S = F_{q²}` and `σ(x) = x^q`. With `unitary`
/// only `sim = 1` is used.
pub fn sim_image_gu<S: Scalar>(n: usize, unitary: bool) -> Result<SimImage> {
    let qq = S::order().ok_or_else(|| Error::Unsupported(format!("{} is not finite", S::descriptor())))?;
    let q = (qq as f64).sqrt().round() as u64;
    if q * q != qq {
        return Err(Error::Unsupported(format!("{} is not a quadratic extension of a finite field", S::descriptor())));
    }
    let u = units::<S>()?;
    let norm = |x: &S| x.pow(q + 1);
    let count = (q - 1).saturating_mul((q + 1).saturating_pow(n as u32));
    if count > TORUS_BOUND {
        return Err(Error::SizeBound(format!("{count} torus elements")));
    }
    let base: Vec<S> = u.iter().filter(|x| x.pow(q) == **x).cloned().collect();
    let mut image = HashSet::new();
    for lambda in &base {
        if unitary && !lambda.is_one() {
            continue;
        }
        let fiber: Vec<S> = u.iter().filter(|x| norm(x) == *lambda).cloned().collect();
        let mut idx = vec![0usize; n];
        loop {
            let det = idx.iter().fold(S::one(), |acc, &i| acc * fiber[i].clone());
            image.insert(det.try_div(lambda)?);
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < fiber.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    Ok(SimImage { image: image.len(), target: u.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Gf3, Gf4, Gf5, Gf9};

    #[test]
    fn small_images() {
        assert!(sim_image_gl2e::<Gf3>(true).unwrap().surjective());
        assert!(sim_image_torus::<Gf3>(false).unwrap().surjective());
        assert!(sim_image_gu::<Gf9>(3, false).unwrap().surjective());
        assert!(sim_image_gu::<Gf4>(2, false).unwrap().surjective());
        assert_eq!(sim_image_gu::<Gf9>(2, false).unwrap(), SimImage { image: 4, target: 8 });
        assert!(!sim_image_gl2e::<Gf5>(false).unwrap().surjective());
        assert!(!sim_image_torus::<Gf5>(true).unwrap().surjective());
    }
}
