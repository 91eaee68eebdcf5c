use std::fmt;

use serde::Serialize;

use crate::coxeter::CoxeterError;
use crate::defgraph::DefiningGraph;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A word in the standard generators. Coxeter-side code ignores the signs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Positive word from generator indices.
    pub fn from_generators(gens: impl IntoIterator<Item = usize>) -> Self {
        Word(gens.into_iter().map(Letter::pos).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|l| l.generator)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, letter: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Whitespace-separated letters, `^-1` marking inverses.
    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> impl fmt::Display + 'a {
        WordDisplay { word: self, graph }
    }

    pub fn parse(graph: &DefiningGraph, text: &str) -> Result<Word, CoxeterError> {
        text.split_whitespace()
            .map(|tok| {
                let (name, inverse) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                graph
                    .index_of(name)
                    .map(|generator| Letter { generator, inverse })
                    .ok_or_else(|| CoxeterError::UnknownGenerator(name.to_string()))
            })
            .collect::<Result<_, _>>()
            .map(Word)
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    graph: &'a DefiningGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(l.generator))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Image of an Artin word under the quotient onto the Coxeter group: each
/// generator goes to an involution, so signs are dropped.
pub fn project_to_coxeter(w: &Word) -> Word {
    Word::from_generators(w.generators())
}

/// Lifts a reduced Coxeter word to the positive Artin word with the same
/// letters.
pub fn tits_section(graph: &DefiningGraph, w: &Word) -> Result<Word, CoxeterError> {
    let reduced = super::coxeter_reduce(graph, w)?;
    if reduced.len() != w.len() {
        return Err(CoxeterError::NotReduced);
    }
    Ok(project_to_coxeter(w))
}
