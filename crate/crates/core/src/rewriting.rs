//! The plactic and shifted plactic relations as rewriting rules on words,
//! with closure-based equivalence and class enumeration.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::enumerate::{count_words_with_content, words_with_content};
use crate::error::{Error, Result};
use crate::insertion::{p_mix, p_rsk};
use crate::letter::Word;
use crate::tableau::{ShiftedTableau, YoungTableau};

/// Pattern variable of a rule. Patterns use each variable at most once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    B,
    C,
    D,
}

impl Var {
    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cmp {
    Le,
    Lt,
}

/// `left ≡ right` whenever every constraint holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub left: Vec<Var>,
    pub right: Vec<Var>,
    pub constraints: Vec<(Var, Cmp, Var)>,
}

impl Rule {
    fn new(left: &str, right: &str, chain: &str) -> Self {
        Rule {
            left: parse_pattern(left),
            right: parse_pattern(right),
            constraints: parse_chain(chain),
        }
    }

    fn holds(&self, binding: &[u32; 4]) -> bool {
        self.constraints.iter().all(|&(x, cmp, y)| {
            let (x, y) = (binding[x.index()], binding[y.index()]);
            match cmp {
                Cmp::Le => x <= y,
                Cmp::Lt => x < y,
            }
        })
    }

    /// Every instance `(left, right)` over the letters `1..=max_letter`.
    pub fn instances(&self, max_letter: u32) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        let n = max_letter as usize;
        for code in 0..n.pow(4) {
            let mut binding = [0u32; 4];
            let mut c = code;
            for b in &mut binding {
                *b = (c % n) as u32 + 1;
                c /= n;
            }
            if self.holds(&binding) {
                let word = |p: &[Var]| {
                    Word::from(p.iter().map(|v| binding[v.index()]).collect::<Vec<_>>())
                };
                out.push((word(&self.left), word(&self.right)));
            }
        }
        out
    }

    /// Binds `pattern` against `window`, returning the other side when the
    /// constraints hold.
    fn rewrite(&self, window: &[u32], from: &[Var], to: &[Var]) -> Option<Vec<u32>> {
        let mut binding = [0u32; 4];
        for (&v, &x) in from.iter().zip(window) {
            binding[v.index()] = x;
        }
        self.holds(&binding)
            .then(|| to.iter().map(|v| binding[v.index()]).collect())
    }
}

fn parse_pattern(s: &str) -> Vec<Var> {
    s.chars()
        .map(|c| match c {
            'a' => Var::A,
            'b' => Var::B,
            'c' => Var::C,
            'd' => Var::D,
            _ => unreachable!("pattern letter {c}"),
        })
        .collect()
}

/// Parses a chain such as `a<=b<c<=d`.
fn parse_chain(s: &str) -> Vec<(Var, Cmp, Var)> {
    let vars = parse_pattern(&s.replace("<=", "").replace('<', ""));
    let mut cmps = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'<' {
            if bytes.get(i + 1) == Some(&b'=') {
                cmps.push(Cmp::Le);
                i += 1;
            } else {
                cmps.push(Cmp::Lt);
            }
        }
        i += 1;
    }
    vars.windows(2)
        .zip(cmps)
        .map(|(w, c)| (w[0], c, w[1]))
        .collect()
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: &Var| ["a", "b", "c", "d"][v.index()];
        let left: String = self.left.iter().map(name).collect();
        let right: String = self.right.iter().map(name).collect();
        write!(f, "{left} = {right} for ")?;
        for (i, (x, c, y)) in self.constraints.iter().enumerate() {
            if i == 0 {
                write!(f, "{}", name(x))?;
            }
            write!(f, "{}{}", if *c == Cmp::Le { "<=" } else { "<" }, name(y))?;
        }
        Ok(())
    }
}

/// A finite list of rules, each applied in both directions at every window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    rules: Vec<Rule>,
}

impl RelationSet {
    /// The eight quartic shifted plactic relations.
    pub fn shifted() -> &'static RelationSet {
        static SET: OnceLock<RelationSet> = OnceLock::new();
        SET.get_or_init(|| RelationSet {
            rules: vec![
                Rule::new("abdc", "adbc", "a<=b<=c<d"),
                Rule::new("acdb", "acbd", "a<=b<c<=d"),
                Rule::new("dacb", "adcb", "a<=b<c<d"),
                Rule::new("badc", "bdac", "a<b<=c<d"),
                Rule::new("cbda", "cdba", "a<b<c<=d"),
                Rule::new("dbca", "bdca", "a<b<=c<d"),
                Rule::new("bcda", "bcad", "a<b<=c<=d"),
                Rule::new("cadb", "cdab", "a<=b<c<=d"),
            ],
        })
    }

    /// The two cubic Knuth relations.
    pub fn plactic() -> &'static RelationSet {
        static SET: OnceLock<RelationSet> = OnceLock::new();
        SET.get_or_init(|| RelationSet {
            rules: vec![
                Rule::new("acb", "cab", "a<=b<c"),
                Rule::new("bca", "bac", "a<b<=c"),
            ],
        })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Every word one rule application away from `w`.
    pub fn neighbors(&self, w: &Word) -> BTreeSet<Word> {
        let letters = w.letters();
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            let len = rule.left.len();
            if letters.len() < len {
                continue;
            }
            for start in 0..=letters.len() - len {
                let window = &letters[start..start + len];
                for (from, to) in [(&rule.left, &rule.right), (&rule.right, &rule.left)] {
                    if let Some(replaced) = rule.rewrite(window, from, to) {
                        if replaced != window {
                            let mut next = letters.to_vec();
                            next[start..start + len].copy_from_slice(&replaced);
                            out.insert(Word::from(next));
                        }
                    }
                }
            }
        }
        out
    }

    /// All words reachable from `w`.
    pub fn closure(&self, w: &Word) -> BTreeSet<Word> {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(&u) {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Breadth-first search from `u` for `v`; words of different content
    /// are never equivalent.
    pub fn equivalent(&self, u: &Word, v: &Word) -> bool {
        if u.content() != v.content() {
            return false;
        }
        if u == v {
            return true;
        }
        let mut seen = BTreeSet::from([u.clone()]);
        let mut queue = VecDeque::from([u.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(&x) {
                if &y == v {
                    return true;
                }
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Connected components of all words with the given content.
    pub fn components(&self, content: &[usize], max_words: usize) -> Result<Vec<BTreeSet<Word>>> {
        let count = count_words_with_content(content);
        if count > max_words as u128 {
            return Err(Error::Budget {
                what: format!("{count} words of content {content:?}"),
                limit: max_words,
            });
        }
        let mut assigned = BTreeSet::new();
        let mut blocks = Vec::new();
        for w in words_with_content(content) {
            if assigned.contains(&w) {
                continue;
            }
            let block = self.closure(&w);
            assigned.extend(block.iter().cloned());
            blocks.push(block);
        }
        Ok(blocks)
    }
}

/// Words one shifted plactic relation away from `w`.
pub fn shifted_knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    RelationSet::shifted().neighbors(w)
}

/// Words one plactic relation away from `w`.
pub fn plactic_neighbors(w: &Word) -> BTreeSet<Word> {
    RelationSet::plactic().neighbors(w)
}

/// Shifted plactic equivalence decided by the relations alone.
pub fn equivalent_by_relations(u: &Word, v: &Word) -> bool {
    RelationSet::shifted().equivalent(u, v)
}

/// Default cap on the number of words a class enumeration may visit.
pub const DEFAULT_MAX_WORDS: usize = 200_000;

/// A shifted plactic class with its mixed insertion tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedPlacticClass {
    pub tableau: ShiftedTableau,
    pub words: Vec<Word>,
}

/// A plactic class with its RSK insertion tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlacticClass {
    pub tableau: YoungTableau,
    pub words: Vec<Word>,
}

fn keyed_blocks<K: Ord + Clone>(
    blocks: Vec<BTreeSet<Word>>,
    key: impl Fn(&Word) -> K,
) -> Result<Vec<(K, Vec<Word>)>> {
    let mut out = Vec::new();
    for block in blocks {
        let words: Vec<Word> = block.into_iter().collect();
        let k = key(&words[0]);
        if let Some(bad) = words.iter().find(|w| key(w) != k) {
            return Err(Error::Internal(format!(
                "relation class of {} contains {bad} with a different tableau",
                words[0]
            )));
        }
        out.push((k, words));
    }
    out.sort_by(|a, b| a.1[0].cmp(&b.1[0]));
    Ok(out)
}

/// The shifted plactic classes partitioning all words of `content`, found
/// as connected components of the relations and keyed by `P_mix`. Blocks
/// are ordered by their least word.
pub fn enumerate_shifted_classes(
    content: &[usize],
    max_words: usize,
) -> Result<Vec<ShiftedPlacticClass>> {
    let blocks = RelationSet::shifted().components(content, max_words)?;
    Ok(keyed_blocks(blocks, p_mix)?
        .into_iter()
        .map(|(tableau, words)| ShiftedPlacticClass { tableau, words })
        .collect())
}

/// The plactic classes of all words of `content`, keyed by `P_rsk`.
pub fn enumerate_plactic_classes(content: &[usize], max_words: usize) -> Result<Vec<PlacticClass>> {
    let blocks = RelationSet::plactic().components(content, max_words)?;
    Ok(keyed_blocks(blocks, p_rsk)?
        .into_iter()
        .map(|(tableau, words)| PlacticClass { tableau, words })
        .collect())
}

/// The shifted plactic class of `w`.
pub fn shifted_class_of(w: &Word) -> ShiftedPlacticClass {
    ShiftedPlacticClass {
        tableau: p_mix(w),
        words: RelationSet::shifted().closure(w).into_iter().collect(),
    }
}

/// The plactic class of `w`.
pub fn plactic_class_of(w: &Word) -> PlacticClass {
    PlacticClass {
        tableau: p_rsk(w),
        words: RelationSet::plactic().closure(w).into_iter().collect(),
    }
}

/// The plactic class containing a shifted plactic class.
pub fn projection_pi(class: &ShiftedPlacticClass) -> PlacticClass {
    plactic_class_of(&class.words[0])
}

/// Groups words by a key, e.g. their insertion tableau.
pub fn group_by<K: Ord>(words: &[Word], key: impl Fn(&Word) -> K) -> BTreeMap<K, Vec<Word>> {
    let mut map: BTreeMap<K, Vec<Word>> = BTreeMap::new();
    for w in words {
        map.entry(key(w)).or_default().push(w.clone());
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn rules_render_as_written() {
        let shown: Vec<String> = RelationSet::shifted()
            .rules()
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(shown[0], "abdc = adbc for a<=b<=c<d");
        assert_eq!(shown[7], "cadb = cdab for a<=b<c<=d");
        assert_eq!(
            RelationSet::plactic().rules()[1].to_string(),
            "bca = bac for a<b<=c"
        );
    }

    #[test]
    fn single_relation_neighbors() {
        assert_eq!(shifted_knuth_neighbors(&w("11221")), set(&["11212"]));
        assert!(shifted_knuth_neighbors(&w("11122")).is_empty());
        assert!(shifted_knuth_neighbors(&w("1243")).contains(&w("1423")));
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent_by_relations(&w("12112"), &w("11221")));
        assert!(!equivalent_by_relations(&w("21112"), &w("11122")));
        assert!(equivalent_by_relations(&w("2314"), &w("2314")));
        assert!(!equivalent_by_relations(&w("12"), &w("112")));
    }

    #[test]
    fn content_32_classes() {
        let shifted = enumerate_shifted_classes(&[3, 2], DEFAULT_MAX_WORDS).unwrap();
        let blocks: BTreeSet<BTreeSet<Word>> = shifted
            .iter()
            .map(|c| c.words.iter().cloned().collect())
            .collect();
        let expected: BTreeSet<BTreeSet<Word>> = [
            set(&["11122"]),
            set(&["11221", "11212", "12112"]),
            set(&["21112"]),
            set(&["22111", "21211", "21121"]),
            set(&["12121", "12211"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(blocks, expected);
        let plactic = enumerate_plactic_classes(&[3, 2], DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(plactic.len(), 3);
        assert_eq!(
            enumerate_plactic_classes(&[1, 1], DEFAULT_MAX_WORDS)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_shifted_classes(&[4], DEFAULT_MAX_WORDS)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_shifted_classes(&[3, 3, 3], 100),
            Err(Error::Budget { limit: 100, .. })
        ));
    }

    #[test]
    fn projection_examples() {
        let a = projection_pi(&shifted_class_of(&w("2134")));
        assert_eq!(a.tableau.to_string(), "1 3 4 / 2");
        assert_eq!(a.words, vec![w("2134"), w("2314"), w("2341")]);
        let b = projection_pi(&shifted_class_of(&w("2314")));
        assert_eq!(a, b);
        assert_eq!(
            shifted_class_of(&w("2314")).words,
            vec![w("2314"), w("2341")]
        );
        assert_eq!(
            projection_pi(&shifted_class_of(&w("1123"))).words,
            vec![w("1123")]
        );
    }
}
