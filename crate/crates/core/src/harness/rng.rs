//! Minimal deterministic generator. The suite contract is byte-identical
//! reports for identical configs across platforms and runs, so the stream is
//! pinned here rather than borrowed from an external crate whose sequence
//! might shift between versions.

/// SplitMix64: fast, full-period, and trivially splittable by mixing the
/// lane coordinates into the seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for (seed, property, trial).
    pub fn split(seed: u64, lane: u64, index: u64) -> Self {
        let mut mixer = SplitMix64::new(
            seed ^ lane.wrapping_mul(0x9e37_79b9_7f4a_7c15)
                ^ index.wrapping_mul(0xbf58_476d_1ce4_e5b9),
        );
        // burn a few outputs so nearby lanes decorrelate
        mixer.next_u64();
        mixer.next_u64();
        mixer
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        (self.next_u64() % den as u64) < num as u64
    }
}
