//! The table of shifted plactic classes of 4-letter words.

use serde::Serialize;
use shpl_core::{p_mix, p_rsk, Word};

/// One word for each row of the table, with `a < b < c < d` read as
/// `1 < 2 < 3 < 4`, grouped by content.
pub const APPENDIX_WORDS: [&str; 75] = [
    "1111", //
    "1112", "1121", "1211", "2111", //
    "1222", "2221", "2212", "2122", //
    "1122", "1221", "1212", "2112", "2121", "2211", //
    "1123", "1231", "1213", "2113", "1132", "1312", "3112", "1321", "3121", "3211", "2131",
    "2311", //
    "1223", "2231", "2213", "2123", "1232", "1322", "3122", "2321", "3221", "3212", "2132",
    "2312", //
    "1233", "2331", "2313", "2133", "1332", "1323", "3123", "3321", "3231", "3213", "3132",
    "3312", //
    "1234", "2341", "2314", "2134", "1342", "1324", "3124", "1243", "1423", "4123", "2143", "2413",
    "3142", "3412", "3421", "3241", "3214", "2431", "4231", "4213", "1432", "4132", "4312", "4321",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixRow {
    pub word: String,
    pub p_mix: String,
    pub p_rsk: String,
}

pub fn emit_appendix_table() -> Vec<AppendixRow> {
    APPENDIX_WORDS
        .iter()
        .map(|s| {
            let w: Word = s.parse().expect("table words are valid");
            AppendixRow {
                word: s.to_string(),
                p_mix: p_mix(&w).to_string(),
                p_rsk: p_rsk(&w).to_string(),
            }
        })
        .collect()
}

/// One `word|P_mix|P_rsk` line per row, the golden file format.
pub fn render_table(rows: &[AppendixRow]) -> String {
    rows.iter()
        .map(|r| format!("{}|{}|{}\n", r.word, r.p_mix, r.p_rsk))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_cover_every_pattern_once() {
        let mut words = APPENDIX_WORDS.to_vec();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), 75);
        let rows = emit_appendix_table();
        assert_eq!(rows[0].p_mix, "1 1 1 1");
        assert_eq!(rows[74].p_mix, "1 2' 3' 4'");
        assert_eq!(rows[74].p_rsk, "1 / 2 / 3 / 4");
    }
}
