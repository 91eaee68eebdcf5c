//! Word problem for Coxeter groups by Tits' method: two reduced words
//! represent the same element iff they are related by braid moves, and a
//! word is reduced iff no braid-equivalent word contains a square `ss`.

use std::collections::{HashSet, VecDeque};

use crate::coxeter::words::Word;
use crate::coxeter::CoxeterError;
use crate::defgraph::DefiningGraph;

/// Default bound on the size of a braid-equivalence class.
pub const DEFAULT_CLOSURE_CAP: usize = 200_000;

type Gens = Vec<u8>;

/// All words obtained from `word` by braid moves `sts.. -> tst..`
/// (alternating subwords of length `m_st`).
pub(crate) fn braid_class(
    graph: &DefiningGraph,
    word: &[u8],
    cap: usize,
) -> Result<HashSet<Gens>, CoxeterError> {
    let mut seen: HashSet<Gens> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[i], w[i + 1]);
            if x == y {
                continue;
            }
            let Some(m) = graph.label(x as usize, y as usize) else {
                continue;
            };
            let m = m as usize;
            if i + m > w.len() {
                continue;
            }
            let alternates = (0..m).all(|k| w[i + k] == if k % 2 == 0 { x } else { y });
            if !alternates {
                continue;
            }
            let mut next = w.clone();
            for k in 0..m {
                next[i + k] = if k % 2 == 0 { y } else { x };
            }
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(CoxeterError::CapExceeded {
                        what: "braid closure",
                        cap,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Reduces `word` (signs ignored) to the shortlex-least reduced word for the
/// same element of W.
pub fn coxeter_reduce(graph: &DefiningGraph, word: &Word) -> Result<Word, CoxeterError> {
    coxeter_reduce_with_cap(graph, word, DEFAULT_CLOSURE_CAP)
}

pub fn coxeter_reduce_with_cap(
    graph: &DefiningGraph,
    word: &Word,
    cap: usize,
) -> Result<Word, CoxeterError> {
    let mut cur: Gens = Vec::with_capacity(word.len());
    for s in word.generators() {
        let s = s as u8;
        if cur.last() == Some(&s) {
            cur.pop();
            continue;
        }
        // cur is reduced, so cur*s is either reduced or has length |cur|-1,
        // the latter exactly when some reduced expression of cur ends in s.
        let class = braid_class(graph, &cur, cap)?;
        match class.into_iter().find(|u| u.last() == Some(&s)) {
            Some(mut u) => {
                u.pop();
                cur = u;
            }
            None => cur.push(s),
        }
    }
    let class = braid_class(graph, &cur, cap)?;
    let best = class.into_iter().min().unwrap_or_default();
    Ok(Word::from_generators(best.into_iter().map(usize::from)))
}

/// Whether `w1` and `w2` represent the same element of W.
pub fn coxeter_equal(graph: &DefiningGraph, w1: &Word, w2: &Word) -> Result<bool, CoxeterError> {
    let product = w1.concat(&Word::from_generators(
        w2.generators().collect::<Vec<_>>().into_iter().rev(),
    ));
    Ok(coxeter_reduce(graph, &product)?.is_empty())
}

/// Generators `s` such that `w s` is shorter than `w` (right descents).
pub fn right_descents(graph: &DefiningGraph, reduced: &Word) -> Result<Vec<usize>, CoxeterError> {
    let gens: Gens = reduced.generators().map(|g| g as u8).collect();
    let class = braid_class(graph, &gens, DEFAULT_CLOSURE_CAP)?;
    let mut out: Vec<usize> = class
        .iter()
        .filter_map(|u| u.last().map(|&s| s as usize))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defgraph::parse_defining_graph;

    fn word(g: &DefiningGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn squares_cancel() {
        let g = parse_defining_graph("edge s t 3").unwrap();
        assert!(coxeter_reduce(&g, &word(&g, "s s")).unwrap().is_empty());
        assert!(coxeter_reduce(&g, &word(&g, "s t t s")).unwrap().is_empty());
    }

    #[test]
    fn dihedral_six() {
        // In I2(3) = S3, stst = (st)^2 = (st)^{-1} = ts.
        let g = parse_defining_graph("edge s t 3").unwrap();
        assert_eq!(
            coxeter_reduce(&g, &word(&g, "s t s t")).unwrap(),
            word(&g, "t s")
        );
        // sts and tst are both reduced; shortlex picks sts.
        assert_eq!(
            coxeter_reduce(&g, &word(&g, "t s t")).unwrap(),
            word(&g, "s t s")
        );
        let w = word(&g, "s t");
        assert_eq!(coxeter_reduce(&g, &w).unwrap(), w);
    }

    #[test]
    fn equality_examples() {
        let g2 = parse_defining_graph("edge s t 2").unwrap();
        assert!(coxeter_equal(&g2, &word(&g2, "s t"), &word(&g2, "t s")).unwrap());
        let g3 = parse_defining_graph("edge s t 3").unwrap();
        assert!(coxeter_equal(&g3, &word(&g3, "s t s"), &word(&g3, "t s t")).unwrap());
        assert!(!coxeter_equal(&g3, &word(&g3, "s t"), &word(&g3, "t s")).unwrap());
    }

    #[test]
    fn free_product_words_are_reduced() {
        let g = parse_defining_graph("vertex s\nvertex t").unwrap();
        let w = word(&g, "s t s t s t");
        assert_eq!(coxeter_reduce(&g, &w).unwrap(), w);
    }

    #[test]
    fn descents() {
        let g = parse_defining_graph("edge s t 3").unwrap();
        assert_eq!(right_descents(&g, &word(&g, "s t s")).unwrap(), vec![0, 1]);
        assert_eq!(right_descents(&g, &word(&g, "s t")).unwrap(), vec![1]);
    }

    #[test]
    fn cap_is_reported() {
        // Six pairwise commuting generators: the word abcdef has 720 reduced
        // expressions.
        let names = ["a", "b", "c", "d", "e", "f"];
        let g = DefiningGraph::from_label_fn(&names, |_, _| Some(2)).unwrap();
        let w = Word::from_generators(0..6);
        assert!(matches!(
            coxeter_reduce_with_cap(&g, &w, 100),
            Err(CoxeterError::CapExceeded { .. })
        ));
        assert_eq!(coxeter_reduce_with_cap(&g, &w, 1000).unwrap(), w);
    }
}
