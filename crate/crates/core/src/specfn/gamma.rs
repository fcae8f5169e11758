//! Natural logarithm of the gamma function for positive real arguments.
//!
//! Near the zeros of ln Γ at x = 1 and x = 2 the Lanczos sum loses relative
//! accuracy, so the interval [0.5, 2.5) is handled by the Taylor series of
//! ln Γ(2 + z) in zeta values, and recursion is used below that.

use crate::error::{domain, Result};

/// Lanczos coefficients for g = 607/128 (Godfrey), 15 terms.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

/// zeta(k) - 1 for k = 2, 3, ...
const ZETA_MINUS_ONE: [f64; 48] = [
    0.644_934_066_848_226_4,
    0.202_056_903_159_594_3,
    0.082_323_233_711_138_19,
    0.036_927_755_143_369_93,
    0.017_343_061_984_449_14,
    0.008_349_277_381_922_827,
    0.004_077_356_197_944_34,
    0.002_008_392_826_082_214,
    0.000_994_575_127_818_085_3,
    0.000_494_188_604_119_464_5,
    0.000_246_086_553_308_048_3,
    0.000_122_713_347_578_489_15,
    6.124_813_505_870_483e-5,
    3.058_823_630_702_049e-5,
    1.528_225_940_865_187e-5,
    7.637_197_637_899_763e-6,
    3.817_293_264_999_84e-6,
    1.908_212_716_553_939e-6,
    9.539_620_338_727_962e-7,
    4.769_329_867_878_064e-7,
    2.384_505_027_277_33e-7,
    1.192_199_259_653_110_6e-7,
    5.960_818_905_125_948e-8,
    2.980_350_351_465_228e-8,
    1.490_155_482_836_504_3e-8,
    7.450_711_789_835_43e-9,
    3.725_334_024_788_457e-9,
    1.862_659_723_513_049e-9,
    9.313_274_324_196_682e-10,
    4.656_629_065_033_784e-10,
    2.328_311_833_676_505_3e-10,
    1.164_155_017_270_052e-10,
    5.820_772_087_902_701e-11,
    2.910_385_044_497_1e-11,
    1.455_192_189_104_198_5e-11,
    7.275_959_835_057_482e-12,
    3.637_979_547_378_651e-12,
    1.818_989_650_307_066e-12,
    9.094_947_840_263_888e-13,
    4.547_473_783_042_154e-13,
    2.273_736_845_824_652_4e-13,
    1.136_868_407_680_228e-13,
    5.684_341_987_627_585e-14,
    2.842_170_976_889_302e-14,
    1.421_085_482_803_160_8e-14,
    7.105_427_395_210_853e-15,
    3.552_713_691_337_114e-15,
    1.776_356_843_579_120_4e-15,
];

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("log_gamma requires finite x > 0, got {x}")));
    }
    Ok(lgamma(x))
}

/// Unchecked ln Γ(x); callers guarantee x > 0.
pub(crate) fn lgamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "lgamma({x})");
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x
        return lgamma(x + 1.0) - x.ln();
    }
    if x < 1.5 {
        return lgamma_near_two(x - 1.0) - x.ln();
    }
    if x < 2.5 {
        return lgamma_near_two(x - 2.0);
    }
    lanczos(x)
}

/// ln Γ(2 + z) for |z| <= 1/2:
/// (1 - γ) z + Σ_{k≥2} (-1)^k (ζ(k) - 1) z^k / k.
fn lgamma_near_two(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut zk = -z;
    for (i, zeta) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = (i + 2) as f64;
        zk *= -z;
        let term = zeta * zk / k;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    (1.0 - EULER_GAMMA) * z + sum
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// ln of the Beta function B(a, b).
pub(crate) fn ln_beta(a: f64, b: f64) -> f64 {
    lgamma(a) + lgamma(b) - lgamma(a + b)
}
