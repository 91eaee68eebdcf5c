//! Element enumeration for Coxeter groups by Todd-Coxeter coset enumeration
//! over the trivial subgroup. This uses only the presentation
//! `<S | s^2, (st)^m_st>`, so it is independent of both the cosine-matrix
//! finiteness test and the braid-move word problem.

use std::collections::VecDeque;

use crate::coxeter::words::Word;
use crate::defgraph::{DefiningGraph, VertexSet};

/// A finite Coxeter group given by its right-multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteCoxeterGroup {
    /// Shortlex-least reduced word of each element; element 0 is the identity.
    words: Vec<Word>,
    /// `table[g][s]` is the element `g * s`.
    table: Vec<Vec<usize>>,
}

impl FiniteCoxeterGroup {
    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, element: usize) -> &Word {
        &self.words[element]
    }

    pub fn multiply_generator(&self, element: usize, generator: usize) -> usize {
        self.table[element][generator]
    }

    /// Element represented by `w` (signs ignored).
    pub fn evaluate(&self, w: &Word) -> usize {
        w.generators().fold(0, |g, s| self.table[g][s])
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.words[b].generators().fold(a, |g, s| self.table[g][s])
    }

    /// Elements of the coset `element * W_T`.
    pub fn coset(&self, element: usize, subset: VertexSet) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![element];
        seen[element] = true;
        let mut i = 0;
        while i < out.len() {
            let g = out[i];
            for s in subset.iter() {
                let h = self.table[g][s];
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }
}

#[derive(Debug, Clone)]
pub enum Enumeration {
    Closed(FiniteCoxeterGroup),
    ExceedsCap,
}

impl Enumeration {
    pub fn order(&self) -> Option<usize> {
        match self {
            Enumeration::Closed(g) => Some(g.order()),
            Enumeration::ExceedsCap => None,
        }
    }

    pub fn closed(self) -> Option<FiniteCoxeterGroup> {
        match self {
            Enumeration::Closed(g) => Some(g),
            Enumeration::ExceedsCap => None,
        }
    }
}

const NONE: usize = usize::MAX;

struct CosetTable {
    gens: usize,
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    cap: usize,
    queue: Vec<usize>,
}

struct Overflow;

impl CosetTable {
    fn new(gens: usize, cap: usize) -> Self {
        CosetTable {
            gens,
            rows: vec![vec![NONE; gens]],
            parent: vec![0],
            live: 1,
            cap,
            queue: Vec::new(),
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: usize, s: usize) -> Result<(), Overflow> {
        if self.live >= self.cap {
            return Err(Overflow);
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.gens]);
        self.parent.push(d);
        self.live += 1;
        self.rows[c][s] = d;
        self.rows[d][s] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.parent[drop] = keep;
        self.live -= 1;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for s in 0..self.gens {
                let f = self.rows[e][s];
                if f == NONE {
                    continue;
                }
                // Generators are involutions, so the back edge of e -s-> f is
                // f -s-> e.
                if self.rows[f][s] == e {
                    self.rows[f][s] = NONE;
                }
                self.rows[e][s] = NONE;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.rows[e1][s] != NONE {
                    let t = self.rows[e1][s];
                    self.merge(f1, t);
                } else if self.rows[f1][s] != NONE {
                    let t = self.rows[f1][s];
                    self.merge(e1, t);
                } else {
                    self.rows[e1][s] = f1;
                    self.rows[f1][s] = e1;
                }
            }
        }
    }

    /// HLT scan of relator `rel` from coset `c`, defining cosets as needed.
    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) -> Result<(), Overflow> {
        loop {
            if !self.alive(c) {
                return Ok(());
            }
            let (mut f, mut i) = (c, 0usize);
            let (mut b, mut j) = (c, rel.len() as isize - 1);
            while i as isize <= j && self.rows[f][rel[i]] != NONE {
                f = self.rows[f][rel[i]];
                i += 1;
            }
            if i as isize > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i as isize && self.rows[b][rel[j as usize]] != NONE {
                b = self.rows[b][rel[j as usize]];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let s = rel[i];
                self.rows[f][s] = b;
                if self.rows[b][s] == NONE {
                    self.rows[b][s] = f;
                } else if self.rows[b][s] != f {
                    let t = self.rows[b][s];
                    self.coincidence(t, f);
                }
                return Ok(());
            }
            self.define(f, rel[i])?;
        }
    }
}

/// Relators `(st)^m` for every edge; `s^2` is built into the table.
fn relators(graph: &DefiningGraph) -> Vec<Vec<usize>> {
    graph
        .edges()
        .map(|(s, t, m)| {
            (0..2 * m as usize)
                .map(|k| if k % 2 == 0 { s } else { t })
                .collect()
        })
        .collect()
}

/// Enumerates W(graph) if it has at most `cap` elements.
pub fn enumerate_coxeter(graph: &DefiningGraph, cap: usize) -> Enumeration {
    let n = graph.vertex_count();
    let rels = relators(graph);
    let mut table = CosetTable::new(n, cap.max(1));
    let mut c = 0;
    while c < table.rows.len() {
        if table.alive(c) {
            for r in &rels {
                if table.scan_and_fill(c, r).is_err() {
                    return Enumeration::ExceedsCap;
                }
                if !table.alive(c) {
                    break;
                }
            }
            for s in 0..n {
                if table.alive(c) && table.rows[c][s] == NONE && table.define(c, s).is_err() {
                    return Enumeration::ExceedsCap;
                }
            }
        }
        c += 1;
    }

    // Breadth-first renumbering from the identity coset with generators in
    // canonical order yields shortlex-least words.
    let start = table.rep(0);
    let mut index = vec![NONE; table.rows.len()];
    let mut order = vec![start];
    let mut words = vec![Word::empty()];
    index[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for s in 0..n {
            let y = table.rep(table.rows[x][s]);
            if index[y] == NONE {
                index[y] = order.len();
                order.push(y);
                words.push(words[index[x]].push(crate::coxeter::words::Letter::pos(s)));
                queue.push_back(y);
            }
        }
    }
    let rows = order
        .iter()
        .map(|&x| (0..n).map(|s| index[table.rep(table.rows[x][s])]).collect())
        .collect();
    Enumeration::Closed(FiniteCoxeterGroup { words, table: rows })
}
