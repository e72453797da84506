#![allow(dead_code)]

use prevtrop_core::cone::Cone;
use prevtrop_core::exactla::{dot, rat, Int, IntVec, Rat};
use prevtrop_core::tropembed::{monomial_value, ClassicalChartPoint, ValuedScalar};
use prevtrop_core::troppre::Prevariety;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// `PREVTROP_SEED` overrides the default seed.
pub fn seed() -> u64 {
    std::env::var("PREVTROP_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// `c · t^k · (1 + a t)/(1 + b t)` together with `k`, its `t`-adic order.
pub fn random_unit_scalar(rng: &mut ChaCha8Rng) -> (ValuedScalar, i64) {
    let k = rng.gen_range(-3..=3);
    let c = rat(nonzero(rng, 5), rng.gen_range(1..=4));
    let one = ValuedScalar::from_int(1);
    let a = &one + &ValuedScalar::monomial(rat(rng.gen_range(-3..=3), 1), 1);
    let b = &one + &ValuedScalar::monomial(rat(rng.gen_range(-3..=3), 1), 1);
    let x = &ValuedScalar::monomial(c, k) * &a.checked_div(&b).unwrap();
    (x, k)
}

/// Independent `t`-adic order: lowest nonzero coefficient of the numerator
/// minus that of the denominator.
pub fn ord(x: &ValuedScalar) -> Option<i64> {
    let low = |c: &[Rat]| c.iter().position(|v| *v != rat(0, 1));
    Some(low(x.num().coeffs())? as i64 - low(x.den().coeffs()).unwrap() as i64)
}

/// Chart classes `[σ, i]` for every maximal cone of every `Δ_ii`.
pub fn chart_classes(prev: &Prevariety) -> Vec<usize> {
    let s = prev.system();
    let mut out = Vec::new();
    for i in 0..s.len() {
        for c in s.fan(i, i).maximal_cones() {
            out.push(prev.poset().class_of(c, i).unwrap());
        }
    }
    out
}

/// A classical point of the chart: a random torus point pushed to the
/// stratum of a random face `τ`, so the values vanish off `τ⊥`.
pub struct SampledPoint {
    pub point: ClassicalChartPoint,
    pub face: Cone,
    pub torus: Vec<ValuedScalar>,
    pub orders: Vec<i64>,
}

pub fn random_chart_point(prev: &Prevariety, chart: usize, rng: &mut ChaCha8Rng) -> SampledPoint {
    let sigma = prev.class_cone(chart);
    let faces = sigma.faces();
    let face = faces[rng.gen_range(0..faces.len())].cone.clone();
    let n = prev.ambient_rank();
    let (torus, orders): (Vec<_>, Vec<_>) = (0..n).map(|_| random_unit_scalar(rng)).unzip();
    let values = prev
        .semigroup(chart)
        .generators()
        .iter()
        .map(|g| {
            if perp(&face, g) {
                monomial_value(&torus, g).unwrap()
            } else {
                ValuedScalar::zero()
            }
        })
        .collect();
    let point = ClassicalChartPoint::new(prev, chart, values).expect("sampled point is valid");
    SampledPoint { point, face, torus, orders }
}

pub fn perp(face: &Cone, g: &[Int]) -> bool {
    face.rays().iter().all(|r| dot(r, g) == Int::from(0))
        && face.lineality().iter().all(|r| dot(r, g) == Int::from(0))
}

pub fn order_of_character(orders: &[i64], g: &IntVec) -> i64 {
    g.iter()
        .zip(orders)
        .map(|(a, k)| i64::try_from(a).unwrap() * k)
        .sum()
}
