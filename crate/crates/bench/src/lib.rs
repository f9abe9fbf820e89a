//! Fixed inputs shared by the benchmarks.

use shpl_core::Word;

/// A deterministic word of length `len` over `1..=alphabet` that mixes
/// ascents and descents.
pub fn scrambled_word(len: usize, alphabet: u32) -> Word {
    Word::from(
        (0..len as u64)
            .map(|i| ((i * 7 + i * i * 3) % alphabet as u64) as u32 + 1)
            .collect::<Vec<_>>(),
    )
}
