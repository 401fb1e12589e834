//! Pattern detection: l-regularity, up(l,t), and up-down-up(l).

use serde::{Deserialize, Serialize};

use super::{DsError, Sequence};

/// Detection and search mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Complete search; "not found" answers are definitive.
    Exact,
    /// Fast heuristic; only "found" answers are trusted.
    Greedy,
}

/// Which pattern family an occurrence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PatternKind {
    Up { l: u32, t: u32 },
    UpDownUp { l: u32 },
}

/// An index list witnessing a pattern occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternOccurrence {
    #[serde(flatten)]
    pub kind: PatternKind,
    /// The l distinct block symbols, in pattern order.
    pub symbols: Vec<u32>,
    /// Strictly increasing 0-based positions into the host sequence.
    pub positions: Vec<usize>,
}

/// Size limits for the exact tuple-enumeration detectors.
#[derive(Debug, Clone, Copy)]
pub struct DetectLimits {
    pub max_alphabet: usize,
    pub max_l: u32,
}

impl Default for DetectLimits {
    fn default() -> Self {
        DetectLimits {
            max_alphabet: 8,
            max_l: 4,
        }
    }
}

/// Size limits for the exact longest-regular-subsequence search.
#[derive(Debug, Clone, Copy)]
pub struct RegularLimits {
    pub max_len: usize,
    pub max_l: u32,
}

impl Default for RegularLimits {
    fn default() -> Self {
        RegularLimits {
            max_len: 40,
            max_l: 4,
        }
    }
}

/// True iff any `l` consecutive terms are pairwise different, i.e. no two
/// equal terms are within distance `l - 1`.
pub fn is_l_regular(s: &Sequence, l: u32) -> bool {
    let l = l as usize;
    let v = &s.symbols;
    for i in 0..v.len() {
        for j in i + 1..v.len().min(i + l) {
            if v[i] == v[j] {
                return false;
            }
        }
    }
    true
}

/// The word `(a_1 ... a_l)^t` over the given block symbols.
pub fn up_word(block: &[u32], t: u32) -> Vec<u32> {
    let mut w = Vec::with_capacity(block.len() * t as usize);
    for _ in 0..t {
        w.extend_from_slice(block);
    }
    w
}

/// The word `a_1 ... a_l  a_{l-1} ... a_1  a_2 ... a_l` of length `3l - 2`.
pub fn up_down_up_word(block: &[u32]) -> Vec<u32> {
    let l = block.len();
    let mut w = Vec::with_capacity(3 * l - 2);
    w.extend_from_slice(block);
    for i in (0..l - 1).rev() {
        w.push(block[i]);
    }
    w.extend_from_slice(&block[1..]);
    w
}

/// Greedy leftmost subsequence match of `word` inside `host`; optimal for
/// a fixed word. Returns the matched positions.
fn leftmost_match(host: &[u32], word: &[u32]) -> Option<Vec<usize>> {
    let mut positions = Vec::with_capacity(word.len());
    let mut i = 0;
    for &w in word {
        while i < host.len() && host[i] != w {
            i += 1;
        }
        if i == host.len() {
            return None;
        }
        positions.push(i);
        i += 1;
    }
    Some(positions)
}

/// Enumerates ordered `l`-tuples of distinct symbols in lexicographic
/// order and returns the first whose word embeds in the host.
fn search_tuples(
    host: &[u32],
    alphabet: &[u32],
    l: usize,
    word_of: &dyn Fn(&[u32]) -> Vec<u32>,
) -> Option<(Vec<u32>, Vec<usize>)> {
    let mut block = Vec::with_capacity(l);
    fn rec(
        host: &[u32],
        alphabet: &[u32],
        l: usize,
        block: &mut Vec<u32>,
        word_of: &dyn Fn(&[u32]) -> Vec<u32>,
    ) -> Option<(Vec<u32>, Vec<usize>)> {
        if block.len() == l {
            let word = word_of(block);
            return leftmost_match(host, &word).map(|pos| (block.clone(), pos));
        }
        for &sym in alphabet {
            if block.contains(&sym) {
                continue;
            }
            block.push(sym);
            // Prune: the partial block must itself embed in order.
            if leftmost_match(host, block).is_some() {
                if let Some(found) = rec(host, alphabet, l, block, word_of) {
                    return Some(found);
                }
            }
            block.pop();
        }
        None
    }
    rec(host, alphabet, l, &mut block, word_of)
}

/// Heuristic: single candidate tuple built from first occurrences.
fn greedy_tuple(host: &[u32], l: usize) -> Option<Vec<u32>> {
    let mut block = Vec::with_capacity(l);
    for &s in host {
        if !block.contains(&s) {
            block.push(s);
            if block.len() == l {
                return Some(block);
            }
        }
    }
    None
}

fn check_exact_limits(s: &Sequence, l: u32, limits: &DetectLimits) -> Result<Vec<u32>, DsError> {
    let alphabet = s.alphabet();
    if alphabet.len() > limits.max_alphabet {
        return Err(DsError::SizeLimit(format!(
            "alphabet size {} exceeds exact-mode limit {}",
            alphabet.len(),
            limits.max_alphabet
        )));
    }
    if l > limits.max_l {
        return Err(DsError::SizeLimit(format!(
            "l = {} exceeds exact-mode limit {}",
            l, limits.max_l
        )));
    }
    Ok(alphabet)
}

/// Searches for a subsequence of type up(l,t).
///
/// Exact mode is complete; occurrences are reported with the
/// lexicographically first symbol tuple and leftmost positions.
pub fn contains_up(
    s: &Sequence,
    l: u32,
    t: u32,
    mode: Mode,
    limits: &DetectLimits,
) -> Result<Option<PatternOccurrence>, DsError> {
    if l < 2 || t < 2 {
        return Err(DsError::InvalidArg(format!(
            "up(l,t) needs l >= 2 and t >= 2, got l={l}, t={t}"
        )));
    }
    if (l as usize) * (t as usize) > s.len() {
        return Ok(None);
    }
    let kind = PatternKind::Up { l, t };
    let word_of = move |block: &[u32]| up_word(block, t);
    match mode {
        Mode::Exact => {
            let alphabet = check_exact_limits(s, l, limits)?;
            Ok(
                search_tuples(&s.symbols, &alphabet, l as usize, &word_of).map(
                    |(symbols, positions)| PatternOccurrence {
                        kind,
                        symbols,
                        positions,
                    },
                ),
            )
        }
        Mode::Greedy => Ok(greedy_tuple(&s.symbols, l as usize).and_then(|block| {
            leftmost_match(&s.symbols, &word_of(&block)).map(|positions| PatternOccurrence {
                kind,
                symbols: block,
                positions,
            })
        })),
    }
}

/// Searches for a subsequence of type up-down-up(l).
pub fn contains_up_down_up(
    s: &Sequence,
    l: u32,
    mode: Mode,
    limits: &DetectLimits,
) -> Result<Option<PatternOccurrence>, DsError> {
    if l < 2 {
        return Err(DsError::InvalidArg(format!(
            "up-down-up(l) needs l >= 2, got l={l}"
        )));
    }
    if 3 * (l as usize) - 2 > s.len() {
        return Ok(None);
    }
    let kind = PatternKind::UpDownUp { l };
    let word_of = |block: &[u32]| up_down_up_word(block);
    match mode {
        Mode::Exact => {
            let alphabet = check_exact_limits(s, l, limits)?;
            Ok(
                search_tuples(&s.symbols, &alphabet, l as usize, &word_of).map(
                    |(symbols, positions)| PatternOccurrence {
                        kind,
                        symbols,
                        positions,
                    },
                ),
            )
        }
        Mode::Greedy => Ok(greedy_tuple(&s.symbols, l as usize).and_then(|block| {
            leftmost_match(&s.symbols, &word_of(&block)).map(|positions| PatternOccurrence {
                kind,
                symbols: block,
                positions,
            })
        })),
    }
}

/// Longest l-regular subsequence.
///
/// Greedy mode scans left to right keeping a term iff it differs from the
/// last `min(l-1, kept)` retained symbols. Exact mode is a memoized search
/// over (position, recent suffix) states, returning the maximum length and
/// the lexicographically smallest witness index list.
pub fn longest_l_regular_subsequence(
    s: &Sequence,
    l: u32,
    mode: Mode,
    limits: &RegularLimits,
) -> Result<(usize, Vec<usize>), DsError> {
    if l < 1 {
        return Err(DsError::InvalidArg("l must be >= 1".into()));
    }
    match mode {
        Mode::Greedy => Ok(greedy_regular(&s.symbols, l as usize)),
        Mode::Exact => {
            if s.len() > limits.max_len {
                return Err(DsError::SizeLimit(format!(
                    "sequence length {} exceeds exact-mode limit {}",
                    s.len(),
                    limits.max_len
                )));
            }
            if l > limits.max_l {
                return Err(DsError::SizeLimit(format!(
                    "l = {} exceeds exact-mode limit {}",
                    l, limits.max_l
                )));
            }
            Ok(exact_regular(&s.symbols, l as usize))
        }
    }
}

fn greedy_regular(v: &[u32], l: usize) -> (usize, Vec<usize>) {
    let mut kept: Vec<usize> = Vec::new();
    for (i, &sym) in v.iter().enumerate() {
        let recent = kept.len().min(l.saturating_sub(1));
        let clash = kept[kept.len() - recent..].iter().any(|&j| v[j] == sym);
        if !clash {
            kept.push(i);
        }
    }
    (kept.len(), kept)
}

fn exact_regular(v: &[u32], l: usize) -> (usize, Vec<usize>) {
    use std::collections::HashMap;
    type Memo = HashMap<(usize, Vec<u32>), usize>;

    fn best(v: &[u32], l: usize, pos: usize, recent: &[u32], memo: &mut Memo) -> usize {
        if pos == v.len() {
            return 0;
        }
        let key = (pos, recent.to_vec());
        if let Some(&b) = memo.get(&key) {
            return b;
        }
        let skip = best(v, l, pos + 1, recent, memo);
        let mut out = skip;
        if !recent.contains(&v[pos]) {
            let mut next: Vec<u32> = recent.to_vec();
            next.push(v[pos]);
            if next.len() > l.saturating_sub(1) {
                next.remove(0);
            }
            out = out.max(1 + best(v, l, pos + 1, &next, memo));
        }
        memo.insert(key, out);
        out
    }

    let mut memo = Memo::new();
    let total = best(v, l, 0, &[], &mut memo);
    // Reconstruct, preferring to take (earliest indices win on ties).
    let mut positions = Vec::with_capacity(total);
    let mut recent: Vec<u32> = Vec::new();
    let mut pos = 0;
    let mut remaining = total;
    while remaining > 0 {
        if !recent.contains(&v[pos]) {
            let mut next = recent.clone();
            next.push(v[pos]);
            if next.len() > l.saturating_sub(1) {
                next.remove(0);
            }
            if 1 + best(v, l, pos + 1, &next, &mut memo) == remaining {
                positions.push(pos);
                recent = next;
                remaining -= 1;
                pos += 1;
                continue;
            }
        }
        pos += 1;
    }
    (total, positions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> Sequence {
        Sequence::new(v.to_vec())
    }

    #[test]
    fn regularity_windows() {
        assert!(is_l_regular(&seq(&[1, 2, 1, 2]), 2));
        assert!(!is_l_regular(&seq(&[1, 2, 1, 2]), 3));
        assert!(is_l_regular(&seq(&[1, 2, 3, 1, 2, 3]), 3));
        // Shorter than l: pairwise-distinct requirement still applies.
        assert!(!is_l_regular(&seq(&[1, 1]), 3));
        assert!(is_l_regular(&seq(&[1]), 3));
    }

    #[test]
    fn up_word_shapes() {
        assert_eq!(up_word(&[1, 2, 3], 2), vec![1, 2, 3, 1, 2, 3]);
        assert_eq!(up_down_up_word(&[1, 2]), vec![1, 2, 1, 2]);
        assert_eq!(
            up_down_up_word(&[1, 2, 3, 4]),
            vec![1, 2, 3, 4, 3, 2, 1, 2, 3, 4]
        );
    }

    #[test]
    fn up_3_4_example() {
        // a,b,c,a,b,c,a,b,c,a,b,c is an up(3,4) sequence.
        let s = seq(&[1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3]);
        let occ = contains_up(&s, 3, 4, Mode::Exact, &DetectLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(occ.symbols, vec![1, 2, 3]);
        assert_eq!(occ.positions, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn up_down_up_4_example() {
        // a,b,c,d,c,b,a,b,c,d is an up-down-up(4) sequence.
        let s = seq(&[1, 2, 3, 4, 3, 2, 1, 2, 3, 4]);
        let occ = contains_up_down_up(&s, 4, Mode::Exact, &DetectLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(occ.symbols, vec![1, 2, 3, 4]);
        assert_eq!(occ.positions, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn up_needs_distinct_block() {
        let s = seq(&[7, 7, 7]);
        assert!(contains_up(&s, 2, 2, Mode::Exact, &DetectLimits::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn abab_patterns() {
        let s = seq(&[1, 2, 1, 2, 1]);
        let occ = contains_up(&s, 2, 2, Mode::Exact, &DetectLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(occ.positions, vec![0, 1, 2, 3]);
        let s2 = seq(&[1, 2, 1, 2]);
        let occ2 = contains_up_down_up(&s2, 2, Mode::Exact, &DetectLimits::default())
            .unwrap()
            .unwrap();
        assert_eq!(occ2.positions, vec![0, 1, 2, 3]);
    }

    #[test]
    fn strictly_increasing_has_no_udu() {
        let s = seq(&[1, 2, 3, 4, 5]);
        assert!(
            contains_up_down_up(&s, 2, Mode::Exact, &DetectLimits::default())
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn invalid_args_rejected() {
        let s = seq(&[1, 2]);
        assert!(contains_up(&s, 1, 2, Mode::Exact, &DetectLimits::default()).is_err());
        assert!(contains_up(&s, 2, 1, Mode::Exact, &DetectLimits::default()).is_err());
        assert!(contains_up_down_up(&s, 1, Mode::Exact, &DetectLimits::default()).is_err());
    }

    #[test]
    fn size_limits_enforced() {
        let s = Sequence::new((0..20).collect());
        assert!(matches!(
            contains_up(&s, 2, 2, Mode::Exact, &DetectLimits::default()),
            Err(DsError::SizeLimit(_))
        ));
        assert!(matches!(
            longest_l_regular_subsequence(
                &Sequence::new(vec![1; 100]),
                2,
                Mode::Exact,
                &RegularLimits::default()
            ),
            Err(DsError::SizeLimit(_))
        ));
    }

    #[test]
    fn longest_regular_examples() {
        let lim = RegularLimits::default();
        let (n, _) =
            longest_l_regular_subsequence(&seq(&[1, 1, 1, 1]), 2, Mode::Exact, &lim).unwrap();
        assert_eq!(n, 1);
        let (n, idx) =
            longest_l_regular_subsequence(&seq(&[1, 2, 1, 2]), 2, Mode::Exact, &lim).unwrap();
        assert_eq!(n, 4);
        assert_eq!(idx, vec![0, 1, 2, 3]);
        let (n, idx) =
            longest_l_regular_subsequence(&seq(&[1, 2, 2, 3, 1]), 3, Mode::Exact, &lim).unwrap();
        assert_eq!(n, 4);
        let witness: Vec<u32> = idx.iter().map(|&i| [1, 2, 2, 3, 1][i]).collect();
        assert!(is_l_regular(&Sequence::new(witness), 3));
    }

    #[test]
    fn greedy_never_beats_exact_and_matches_for_l2() {
        let lim = RegularLimits::default();
        let cases: Vec<Vec<u32>> = vec![
            vec![1, 1, 2, 2, 3, 3, 1, 2],
            vec![1, 2, 3, 1, 1, 2],
            vec![5, 5, 5, 1, 5],
        ];
        for v in cases {
            let s = Sequence::new(v);
            for l in 1..=3 {
                let (g, gi) = longest_l_regular_subsequence(&s, l, Mode::Greedy, &lim).unwrap();
                let (e, _) = longest_l_regular_subsequence(&s, l, Mode::Exact, &lim).unwrap();
                assert!(e >= g);
                if l == 2 {
                    assert_eq!(e, g);
                }
                let kept: Vec<u32> = gi.iter().map(|&i| s.symbols[i]).collect();
                assert!(is_l_regular(&Sequence::new(kept), l));
            }
        }
    }
}
