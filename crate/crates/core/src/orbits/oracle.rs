//! Word-problem backends.

use crate::coxeter::{
    coxeter_reduce, enumerate_coxeter, right_descents, FiniteCoxeterGroup, Letter, Word,
};
use crate::defgraph::{DefiningGraph, VertexSet};

use super::OrbitError;

/// Solution of the word problem for a group generated by the vertices of a
/// defining graph, together with canonical representatives of cosets of
/// standard parabolic subgroups.
pub trait WordOracle {
    fn defining_graph(&self) -> &DefiningGraph;

    /// Letters used as edges of Cayley graphs.
    fn generators(&self) -> Vec<Letter>;

    /// Canonical word for the element represented by `w`. Canonical words
    /// are geodesic in the word metric of [`WordOracle::generators`].
    fn normal_form(&self, w: &Word) -> Result<Word, OrbitError>;

    fn equal(&self, a: &Word, b: &Word) -> Result<bool, OrbitError> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Canonical word for the coset `w H_T` of the standard parabolic
    /// subgroup generated by `t`.
    fn coset_normal_form(&self, w: &Word, t: VertexSet) -> Result<Word, OrbitError>;
}

/// Right-angled Artin groups: free cancellation up to commutation, with the
/// lexicographically least reduced word as normal form.
#[derive(Debug, Clone)]
pub struct RightAngledArtin {
    graph: DefiningGraph,
    commute: Vec<Vec<bool>>,
}

impl RightAngledArtin {
    pub fn new(graph: &DefiningGraph) -> Result<Self, OrbitError> {
        if !graph.is_right_angled() {
            return Err(OrbitError::NotRightAngled);
        }
        let n = graph.vertex_count();
        let commute = (0..n)
            .map(|i| (0..n).map(|j| graph.is_edge(i, j)).collect())
            .collect();
        Ok(RightAngledArtin {
            graph: graph.clone(),
            commute,
        })
    }

    fn check(&self, w: &Word) -> Result<(), OrbitError> {
        match w.generators().find(|&g| g >= self.graph.vertex_count()) {
            Some(g) => Err(OrbitError::UnknownGenerator(g)),
            None => Ok(()),
        }
    }

    /// Letters with distinct commuting generators can be swapped.
    fn swappable(&self, a: Letter, b: Letter) -> bool {
        a.generator != b.generator && self.commute[a.generator][b.generator]
    }

    /// A reduced word for `w`: each new letter cancels against the nearest
    /// earlier inverse it can be shuffled next to.
    fn reduce(&self, w: &Word) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for &x in w.letters() {
            let mut cancel = None;
            for (j, &y) in out.iter().enumerate().rev() {
                if y == x.inv() {
                    cancel = Some(j);
                    break;
                }
                if !self.swappable(x, y) {
                    break;
                }
            }
            match cancel {
                Some(j) => {
                    out.remove(j);
                }
                None => out.push(x),
            }
        }
        out
    }

    /// Lexicographically least word obtained from a reduced word by
    /// commutations: repeatedly emit the least letter that can be moved to
    /// the front.
    fn sort(&self, mut rest: Vec<Letter>) -> Word {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                if !rest[..i].iter().all(|&y| self.swappable(rest[i], y)) {
                    continue;
                }
                if best.is_none_or(|b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("first letter is always movable")));
        }
        Word(out)
    }
}

impl WordOracle for RightAngledArtin {
    fn defining_graph(&self) -> &DefiningGraph {
        &self.graph
    }

    fn generators(&self) -> Vec<Letter> {
        (0..self.graph.vertex_count())
            .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
            .collect()
    }

    fn normal_form(&self, w: &Word) -> Result<Word, OrbitError> {
        self.check(w)?;
        Ok(self.sort(self.reduce(w)))
    }

    fn coset_normal_form(&self, w: &Word, t: VertexSet) -> Result<Word, OrbitError> {
        self.check(w)?;
        let mut letters = self.reduce(w);
        // Delete T-letters that can be shuffled to the end until none remain.
        'outer: loop {
            for i in (0..letters.len()).rev() {
                if t.contains(letters[i].generator)
                    && letters[i + 1..]
                        .iter()
                        .all(|&y| self.swappable(letters[i], y))
                {
                    letters.remove(i);
                    continue 'outer;
                }
            }
            break;
        }
        Ok(self.sort(letters))
    }
}

/// Coxeter groups via reduction to shortlex-least reduced words.
#[derive(Debug, Clone)]
pub struct CoxeterOracle {
    graph: DefiningGraph,
}

impl CoxeterOracle {
    pub fn new(graph: &DefiningGraph) -> Self {
        CoxeterOracle {
            graph: graph.clone(),
        }
    }
}

impl WordOracle for CoxeterOracle {
    fn defining_graph(&self) -> &DefiningGraph {
        &self.graph
    }

    fn generators(&self) -> Vec<Letter> {
        (0..self.graph.vertex_count()).map(Letter::pos).collect()
    }

    fn normal_form(&self, w: &Word) -> Result<Word, OrbitError> {
        if let Some(g) = w.generators().find(|&g| g >= self.graph.vertex_count()) {
            return Err(OrbitError::UnknownGenerator(g));
        }
        Ok(coxeter_reduce(&self.graph, w)?)
    }

    fn coset_normal_form(&self, w: &Word, t: VertexSet) -> Result<Word, OrbitError> {
        let mut cur = self.normal_form(w)?;
        // Strip right descents in T; the result is the minimal coset element.
        while let Some(s) = right_descents(&self.graph, &cur)?
            .into_iter()
            .find(|&s| t.contains(s))
        {
            cur = coxeter_reduce(&self.graph, &cur.push(Letter::pos(s)))?;
        }
        Ok(cur)
    }
}

/// Finite Coxeter groups via their multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroupOracle {
    graph: DefiningGraph,
    group: FiniteCoxeterGroup,
}

impl FiniteGroupOracle {
    pub fn new(graph: &DefiningGraph, cap: usize) -> Result<Self, OrbitError> {
        let group = enumerate_coxeter(graph, cap)
            .closed()
            .ok_or(OrbitError::CapExceeded {
                what: "coset enumeration",
                cap,
            })?;
        Ok(FiniteGroupOracle {
            graph: graph.clone(),
            group,
        })
    }

    pub fn group(&self) -> &FiniteCoxeterGroup {
        &self.group
    }
}

impl WordOracle for FiniteGroupOracle {
    fn defining_graph(&self) -> &DefiningGraph {
        &self.graph
    }

    fn generators(&self) -> Vec<Letter> {
        (0..self.graph.vertex_count()).map(Letter::pos).collect()
    }

    fn normal_form(&self, w: &Word) -> Result<Word, OrbitError> {
        if let Some(g) = w.generators().find(|&g| g >= self.graph.vertex_count()) {
            return Err(OrbitError::UnknownGenerator(g));
        }
        Ok(self.group.word(self.group.evaluate(w)).clone())
    }

    fn coset_normal_form(&self, w: &Word, t: VertexSet) -> Result<Word, OrbitError> {
        self.normal_form(w)?;
        // Elements are numbered in shortlex order of their words.
        let least = self.group.coset(self.group.evaluate(w), t)[0];
        Ok(self.group.word(least).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defgraph::parse_defining_graph;

    fn w(g: &DefiningGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn raag_cancellation_through_commuting_letters() {
        let g = parse_defining_graph("edge a b 2\nvertex c").unwrap();
        let o = RightAngledArtin::new(&g).unwrap();
        assert_eq!(o.normal_form(&w(&g, "a b a^-1")).unwrap(), w(&g, "b"));
        assert_eq!(
            o.normal_form(&w(&g, "a c a^-1")).unwrap(),
            w(&g, "a c a^-1")
        );
        assert_eq!(o.normal_form(&w(&g, "b a")).unwrap(), w(&g, "a b"));
        assert!(o.equal(&w(&g, "a b"), &w(&g, "b a")).unwrap());
        assert!(!o.equal(&w(&g, "a c"), &w(&g, "c a")).unwrap());
    }

    #[test]
    fn raag_cosets() {
        let g = parse_defining_graph("edge a b 2\nvertex c").unwrap();
        let o = RightAngledArtin::new(&g).unwrap();
        let t = g.vertex_set(["a"]).unwrap();
        assert_eq!(
            o.coset_normal_form(&w(&g, "c a b a"), t).unwrap(),
            w(&g, "c b")
        );
        assert_eq!(o.coset_normal_form(&w(&g, "a c"), t).unwrap(), w(&g, "a c"));
        assert!(RightAngledArtin::new(&parse_defining_graph("edge a b 3").unwrap()).is_err());
    }

    #[test]
    fn coxeter_and_table_oracles_agree() {
        let g = parse_defining_graph("edge a b 3\nedge b c 3\nedge a c 2").unwrap();
        let cox = CoxeterOracle::new(&g);
        let fin = FiniteGroupOracle::new(&g, 1000).unwrap();
        assert_eq!(fin.group().order(), 24);
        for word in fin.group().words() {
            assert_eq!(cox.normal_form(word).unwrap(), *word);
            for bits in 0..8 {
                let t = VertexSet::from_bits(bits);
                assert_eq!(
                    cox.coset_normal_form(word, t).unwrap(),
                    fin.coset_normal_form(word, t).unwrap()
                );
            }
        }
    }
}
