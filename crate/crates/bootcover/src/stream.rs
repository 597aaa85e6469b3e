//! Deterministic pseudo-random streams with counter-based child derivation.
//!
//! A [`Stream`] is a xoshiro256++ generator seeded through splitmix64. Child
//! streams are derived from a master seed plus a list of integer labels
//! (e.g. trial index, method tag) by hashing each label into the key with the
//! splitmix64 finalizer. Distinct label paths yield statistically independent
//! streams, and the derivation is position-dependent, so `(seed, [t])`,
//! `(seed, [t, METHOD_STANDARD])`, and `(seed, [t, METHOD_BAYESIAN])` never
//! collide. Adding a new label value leaves every existing stream untouched,
//! which is what makes trial-parallel runs byte-reproducible.

/// Label for the stream that draws the synthetic sample of a trial.
pub const LABEL_SAMPLE: u64 = 0;
/// Label for the standard-bootstrap replicate stream of a trial.
pub const LABEL_STANDARD: u64 = 1;
/// Label for the Bayesian-bootstrap replicate stream of a trial.
pub const LABEL_BAYESIAN: u64 = 2;

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64: advance the state by the Weyl constant and mix it into an output.
#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GAMMA);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[inline]
fn mix_once(v: u64) -> u64 {
    let mut s = v;
    splitmix64(&mut s)
}

/// xoshiro256++ generator with splitmix64 seeding.
#[derive(Debug, Clone)]
pub struct Stream {
    s: [u64; 4],
}

impl Stream {
    /// Seeds the generator: the four state words are successive splitmix64
    /// outputs, so any u64 (including 0) is a valid seed.
    pub fn from_seed(seed: u64) -> Self {
        let mut st = seed;
        let s = [
            splitmix64(&mut st),
            splitmix64(&mut st),
            splitmix64(&mut st),
            splitmix64(&mut st),
        ];
        Stream { s }
    }

    /// Derives the child stream identified by `labels` under `master_seed`.
    ///
    /// The key is folded label by label: `key = mix(key ^ mix(label))`.
    /// Both the label and the running key pass through the splitmix64
    /// finalizer, so small structured labels (0, 1, 2, ...) land far apart.
    pub fn child(master_seed: u64, labels: &[u64]) -> Self {
        let mut key = master_seed;
        for &label in labels {
            key = mix_once(key ^ mix_once(label));
        }
        Stream::from_seed(key)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let result = (self.s[0].wrapping_add(self.s[3]))
            .rotate_left(23)
            .wrapping_add(self.s[0]);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Uniform on the open interval (0, 1): the 53 high bits plus a half-ulp
    /// offset, so 0 and 1 are never returned and inverse-CDF transforms of
    /// the result stay finite.
    #[inline]
    pub fn open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform index in `[0, n)` by Lemire's multiply-shift rejection method
    /// (unbiased for every n).
    #[inline]
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n >= 1);
        let n = n as u64;
        let mut x = self.next_u64();
        let mut m = (x as u128) * (n as u128);
        let mut low = m as u64;
        if low < n {
            let threshold = n.wrapping_neg() % n;
            while low < threshold {
                x = self.next_u64();
                m = (x as u128) * (n as u128);
                low = m as u64;
            }
        }
        (m >> 64) as usize
    }

    /// Standard normal draw by the Marsaglia polar method. The spare value of
    /// each accepted pair is returned on the next call.
    pub fn standard_normal(&mut self, spare: &mut Option<f64>) -> f64 {
        if let Some(v) = spare.take() {
            return v;
        }
        loop {
            let u = 2.0 * self.open01() - 1.0;
            let v = 2.0 * self.open01() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let f = (-2.0 * s.ln() / s).sqrt();
                *spare = Some(v * f);
                return u * f;
            }
        }
    }
}
