//! Reverse and semistandard tableaux.
//!
//! Reverse tableaux are represented as interlacing chains
//! `μ = μ⁽¹⁾ ≻ μ⁽²⁾ ≻ ⋯ ≻ μ⁽ⁿ⁺¹⁾ = ∅` (the letter `i` occupies the
//! horizontal strip `μ⁽ⁱ⁾/μ⁽ⁱ⁺¹⁾`), which makes the combinatorial
//! evaluation of shifted Schur functions a fold over the chain.
//! Semistandard tableaux are enumerated box by box and serve as the
//! independent oracle for ordinary Schur polynomials.

use crate::partitions::Partition;
use std::collections::BTreeMap;

/// A reverse tableau of shape `chain[0]` with letters in `1..=n`: rows
/// weakly decrease, columns strictly decrease.  Stored as the chain of
/// partitions where `chain[i]` is the shape occupied by letters `> i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReverseTableau {
    chain: Vec<Partition>,
}

impl ReverseTableau {
    pub fn shape(&self) -> &Partition {
        &self.chain[0]
    }

    /// The size of the alphabet (the chain has `letters + 1` links).
    pub fn letters(&self) -> usize {
        self.chain.len() - 1
    }

    /// The interlacing chain, from the full shape down to the empty one.
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// Explicit box filling: 0-based `(row, col) → letter`.
    pub fn entries(&self) -> BTreeMap<(usize, usize), u32> {
        let mut map = BTreeMap::new();
        for i in 1..self.chain.len() {
            for cell in self.chain[i - 1].skew_boxes(&self.chain[i]) {
                map.insert(cell, i as u32);
            }
        }
        map
    }
}

/// All partitions `ν` interlacing below `p` (i.e. `pᵢ ≥ νᵢ ≥ pᵢ₊₁`) with at
/// most `max_len` parts, in lexicographically descending order.
fn interlacers_below(p: &Partition, max_len: usize) -> Vec<Partition> {
    fn rec(p: &Partition, i: usize, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == p.len() {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let (hi, lo) = (p.part(i), p.part(i + 1));
        if i >= max_len {
            // The length cap forces a zero here; satisfiable only when the
            // interlacing lower bound is already zero.
            if lo == 0 {
                cur.push(0);
                rec(p, i + 1, max_len, cur, out);
                cur.pop();
            }
            return;
        }
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(p, i + 1, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, 0, max_len, &mut Vec::new(), &mut out);
    out
}

/// Lazy depth-first stream over all reverse tableaux of a given shape and
/// alphabet; see [`enumerate_reverse`].
pub struct ReverseTableaux {
    n: usize,
    chain: Vec<Partition>,
    iters: Vec<std::vec::IntoIter<Partition>>,
    done: bool,
}

/// Streams every reverse tableau of shape `mu` with letters in `1..=n`
/// exactly once.  Empty when `ℓ(mu) > n` (a first column of length `ℓ`
/// needs `ℓ` distinct letters).
pub fn enumerate_reverse(mu: &Partition, n: usize) -> ReverseTableaux {
    ReverseTableaux {
        n,
        chain: vec![mu.clone()],
        iters: Vec::new(),
        done: mu.len() > n,
    }
}

impl Iterator for ReverseTableaux {
    type Item = ReverseTableau;

    fn next(&mut self) -> Option<ReverseTableau> {
        if self.done {
            return None;
        }
        loop {
            if self.chain.len() == self.n + 1 {
                let t = ReverseTableau { chain: self.chain.clone() };
                self.chain.pop();
                if self.chain.is_empty() {
                    self.done = true; // alphabet of size zero: single tableau of ∅
                }
                return Some(t);
            }
            let depth = self.chain.len() - 1;
            if self.iters.len() == depth {
                // Steps remaining after the next link; the link itself must
                // shrink to a shape reachable from ∅ in that many steps.
                let rem = self.n - depth - 1;
                self.iters.push(interlacers_below(&self.chain[depth], rem).into_iter());
            }
            match self.iters[depth].next() {
                Some(nu) => self.chain.push(nu),
                None => {
                    self.iters.pop();
                    if depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.chain.pop();
                }
            }
        }
    }
}

/// A semistandard tableau: rows weakly increase, columns strictly increase,
/// entries in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemistandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Iterates `((row, col), entry)` over all boxes, 0-based, row by row.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| ((i, j), v)))
    }
}

/// Lazy depth-first stream over semistandard tableaux; see [`enumerate_ssyt`].
pub struct SemistandardTableaux {
    shape: Partition,
    n: u32,
    cells: Vec<(usize, usize)>,
    up_index: Vec<Option<usize>>,
    stack: Vec<u32>,
    started: bool,
    done: bool,
}

/// Streams every semistandard tableau of shape `mu` with entries in `1..=n`
/// exactly once, filling boxes in row-reading order.
pub fn enumerate_ssyt(mu: &Partition, n: u32) -> SemistandardTableaux {
    let cells: Vec<(usize, usize)> = mu.boxes().collect();
    // Row-reading order makes each row contiguous, so the left neighbor of
    // cell t is cell t−1; the upper neighbor's index is precomputed.
    let mut offsets = Vec::with_capacity(mu.len());
    let mut acc = 0usize;
    for i in 0..mu.len() {
        offsets.push(acc);
        acc += mu.part(i) as usize;
    }
    let up_index = cells
        .iter()
        .map(|&(i, j)| if i > 0 { Some(offsets[i - 1] + j) } else { None })
        .collect();
    SemistandardTableaux {
        shape: mu.clone(),
        n,
        cells,
        up_index,
        stack: Vec::new(),
        started: false,
        done: false,
    }
}

impl SemistandardTableaux {
    fn lower_bound(&self, t: usize) -> u32 {
        let (_, col) = self.cells[t];
        let mut lo = 1;
        if col > 0 {
            lo = lo.max(self.stack[t - 1]);
        }
        if let Some(u) = self.up_index[t] {
            lo = lo.max(self.stack[u] + 1);
        }
        lo
    }

    /// Replaces the deepest entry by its next candidate, popping exhausted
    /// cells; sets `done` when the whole tree is spent.
    fn advance(&mut self) {
        while let Some(v) = self.stack.pop() {
            if v < self.n {
                self.stack.push(v + 1);
                return;
            }
        }
        self.done = true;
    }

    fn build(&self) -> SemistandardTableau {
        let mut rows = vec![Vec::new(); self.shape.len()];
        for (t, &(i, _)) in self.cells.iter().enumerate() {
            rows[i].push(self.stack[t]);
        }
        SemistandardTableau { shape: self.shape.clone(), rows }
    }
}

impl Iterator for SemistandardTableaux {
    type Item = SemistandardTableau;

    fn next(&mut self) -> Option<SemistandardTableau> {
        if self.done {
            return None;
        }
        if self.started && self.stack.len() == self.cells.len() {
            self.advance();
        }
        self.started = true;
        loop {
            if self.done {
                return None;
            }
            if self.stack.len() == self.cells.len() {
                if self.cells.is_empty() {
                    self.done = true; // the empty shape has exactly one filling
                }
                return Some(self.build());
            }
            let lo = self.lower_bound(self.stack.len());
            if lo <= self.n {
                self.stack.push(lo);
            } else {
                self.advance();
            }
        }
    }
}
