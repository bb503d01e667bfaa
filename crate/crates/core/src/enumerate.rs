//! Exhaustive, deterministic enumeration of the small families the checks
//! run over.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::noncrossing::{NoncrossingMatching, NoncrossingSetPartition};
use crate::plabic::{classify, Color, PlabicGraph};
use crate::tableaux::{IncreasingTableau, Partition, RotatedAlphabet, StandardTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{what} = {value} exceeds the cap {cap}; raise it with {var}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
        var: &'static str,
    },
}

/// Upper bounds guarding the enumerators. Defaults can be overridden with
/// the environment variables named in [`Caps::from_env`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_syt_size: usize,
    pub max_q: usize,
    pub max_cells: usize,
    pub max_nc: usize,
    pub max_web_boundary: usize,
    pub max_interior: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_syt_size: 12,
            max_q: 16,
            max_cells: 24,
            max_nc: 14,
            max_web_boundary: 12,
            max_interior: 8,
        }
    }
}

impl Caps {
    /// Defaults overridden by `KPROM_MAX_SYT_SIZE`, `KPROM_MAX_Q`,
    /// `KPROM_MAX_CELLS`, `KPROM_MAX_NC`, `KPROM_MAX_WEB_BOUNDARY` and
    /// `KPROM_MAX_INTERIOR`.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |name: &str, slot: &mut usize| {
            if let Some(v) = std::env::var(name).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = v;
            }
        };
        read("KPROM_MAX_SYT_SIZE", &mut caps.max_syt_size);
        read("KPROM_MAX_Q", &mut caps.max_q);
        read("KPROM_MAX_CELLS", &mut caps.max_cells);
        read("KPROM_MAX_NC", &mut caps.max_nc);
        read("KPROM_MAX_WEB_BOUNDARY", &mut caps.max_web_boundary);
        read("KPROM_MAX_INTERIOR", &mut caps.max_interior);
        caps
    }
}

fn cap(what: &'static str, value: usize, cap: usize, var: &'static str) -> Result<(), EnumerateError> {
    if value > cap {
        Err(EnumerateError::CapExceeded { what, value, cap, var })
    } else {
        Ok(())
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Standard tableaux of a shape, in lexicographic order of lattice words.
pub struct SytIter {
    shape: Vec<usize>,
    n: usize,
    counts: Vec<usize>,
    word: Vec<usize>,
    next_try: Vec<usize>,
    started: bool,
}

impl SytIter {
    fn advance(&mut self) -> bool {
        loop {
            let d = self.word.len();
            if d == self.n {
                return true;
            }
            let start = self.next_try[d];
            let found = (start..self.shape.len()).find(|&r| {
                self.counts[r] < self.shape[r] && (r == 0 || self.counts[r - 1] > self.counts[r])
            });
            match found {
                Some(r) => {
                    self.next_try[d] = r + 1;
                    self.counts[r] += 1;
                    self.word.push(r);
                    self.next_try[d + 1] = 0;
                }
                None => match self.word.pop() {
                    Some(r) => self.counts[r] -= 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.n == 0 {
            return None;
        }
        if self.started {
            if let Some(r) = self.word.pop() {
                self.counts[r] -= 1;
            } else {
                return None;
            }
        }
        self.started = true;
        if !self.advance() {
            self.word.clear();
            return None;
        }
        let mut rows = vec![Vec::new(); self.shape.len()];
        for (j, &r) in self.word.iter().enumerate() {
            rows[r].push(j as u32 + 1);
        }
        let shape = Partition::new(self.shape.clone()).unwrap();
        Some(StandardTableau::from_parts_unchecked(
            shape,
            rows,
            RotatedAlphabet::canonical(self.n as u32),
        ))
    }
}

pub fn enumerate_syt(shape: &Partition) -> Result<SytIter, EnumerateError> {
    enumerate_syt_with(shape, &Caps::from_env())
}

pub fn enumerate_syt_with(shape: &Partition, caps: &Caps) -> Result<SytIter, EnumerateError> {
    let n = shape.size();
    cap("|shape|", n, caps.max_syt_size, "KPROM_MAX_SYT_SIZE")?;
    Ok(SytIter {
        shape: shape.parts().to_vec(),
        n,
        counts: vec![0; shape.length()],
        word: Vec::with_capacity(n),
        next_try: vec![0; n + 1],
        started: false,
    })
}

/// Increasing tableaux of a shape over `[1, q]`, in lexicographic order of
/// their row-reading words.
pub struct IncreasingIter {
    shape: Partition,
    cells: Vec<(usize, usize)>,
    slack: Vec<u32>,
    q: u32,
    packed_only: bool,
    grid: Vec<Vec<u32>>,
    depth: usize,
    started: bool,
    done: bool,
}

impl IncreasingIter {
    fn advance(&mut self) -> bool {
        loop {
            if self.depth == self.cells.len() {
                return true;
            }
            let (r, c) = self.cells[self.depth];
            let left = if c > 0 { self.grid[r][c - 1] } else { 0 };
            let above = if r > 0 { self.grid[r - 1][c] } else { 0 };
            let lo = left.max(above) + 1;
            let hi = self.q.saturating_sub(self.slack[self.depth]);
            let cur = self.grid[r][c];
            let next = if cur == 0 { lo } else { cur + 1 };
            if next <= hi {
                self.grid[r][c] = next;
                self.depth += 1;
            } else {
                self.grid[r][c] = 0;
                if self.depth == 0 {
                    return false;
                }
                self.depth -= 1;
            }
        }
    }

    fn is_packed(&self) -> bool {
        let mut seen = vec![false; self.q as usize + 1];
        for &v in self.grid.iter().flatten() {
            seen[v as usize] = true;
        }
        seen[1..].iter().all(|&b| b)
    }
}

impl Iterator for IncreasingIter {
    type Item = IncreasingTableau;

    fn next(&mut self) -> Option<IncreasingTableau> {
        loop {
            if self.done {
                return None;
            }
            if self.started {
                if self.cells.is_empty() {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
            self.started = true;
            if !self.advance() {
                self.done = true;
                return None;
            }
            if !self.packed_only || self.is_packed() {
                return Some(IncreasingTableau::from_parts_unchecked(
                    self.shape.clone(),
                    self.grid.clone(),
                    RotatedAlphabet::canonical(self.q),
                ));
            }
        }
    }
}

pub fn enumerate_increasing(
    shape: &Partition,
    q: u32,
    packed_only: bool,
) -> Result<IncreasingIter, EnumerateError> {
    enumerate_increasing_with(shape, q, packed_only, &Caps::from_env())
}

pub fn enumerate_increasing_with(
    shape: &Partition,
    q: u32,
    packed_only: bool,
    caps: &Caps,
) -> Result<IncreasingIter, EnumerateError> {
    cap("q", q as usize, caps.max_q, "KPROM_MAX_Q")?;
    cap("|shape|", shape.size(), caps.max_cells, "KPROM_MAX_CELLS")?;
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let parts = shape.parts();
    // Longest strictly increasing chain that must follow each cell.
    let slack = cells
        .iter()
        .map(|&(r, c)| {
            (r..parts.len())
                .filter(|&r2| parts[r2] > c)
                .map(|r2| (r2 - r + parts[r2] - 1 - c) as u32)
                .max()
                .unwrap_or(0)
        })
        .collect();
    Ok(IncreasingIter {
        shape: shape.clone(),
        grid: parts.iter().map(|&len| vec![0; len]).collect(),
        cells,
        slack,
        q,
        packed_only,
        depth: 0,
        started: false,
        done: q == 0,
    })
}

/// Role of each element while scanning a noncrossing partition left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Singleton,
    Open,
    Middle,
    Close,
}

const STEPS: [Step; 4] = [Step::Singleton, Step::Open, Step::Middle, Step::Close];

/// Noncrossing set partitions of `[1, q]`.
pub struct NcIter {
    q: usize,
    choice: Vec<usize>,
    depth_after: Vec<usize>,
    started: bool,
    done: bool,
}

impl NcIter {
    fn allowed(&self, pos: usize, step: Step) -> Option<usize> {
        let depth = if pos == 0 { 0 } else { self.depth_after[pos - 1] };
        let remaining = self.q - pos - 1;
        let after = match step {
            Step::Singleton => depth,
            Step::Open => depth + 1,
            Step::Middle if depth >= 1 => depth,
            Step::Close if depth >= 1 => depth - 1,
            _ => return None,
        };
        (after <= remaining).then_some(after)
    }

    fn advance(&mut self, mut pos: usize, mut from: usize) -> bool {
        loop {
            if pos == self.q {
                return true;
            }
            let found = (from..STEPS.len()).find_map(|k| self.allowed(pos, STEPS[k]).map(|d| (k, d)));
            match found {
                Some((k, d)) => {
                    self.choice[pos] = k;
                    self.depth_after[pos] = d;
                    pos += 1;
                    from = 0;
                }
                None => {
                    if pos == 0 {
                        return false;
                    }
                    pos -= 1;
                    from = self.choice[pos] + 1;
                }
            }
        }
    }

    fn build(&self) -> NoncrossingSetPartition {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        for (x, &k) in self.choice.iter().enumerate() {
            let v = x as u32 + 1;
            match STEPS[k] {
                Step::Singleton => blocks.push(vec![v]),
                Step::Open => {
                    open.push(blocks.len());
                    blocks.push(vec![v]);
                }
                Step::Middle => blocks[*open.last().unwrap()].push(v),
                Step::Close => blocks[open.pop().unwrap()].push(v),
            }
        }
        NoncrossingSetPartition::new(self.q as u32, blocks).expect("stack discipline")
    }
}

impl Iterator for NcIter {
    type Item = NoncrossingSetPartition;

    fn next(&mut self) -> Option<NoncrossingSetPartition> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.advance(0, 0)
        } else if self.q == 0 {
            false
        } else {
            let last = self.q - 1;
            let from = self.choice[last] + 1;
            self.advance(last, from)
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(self.build())
    }
}

pub fn enumerate_nc_partitions(q: u32) -> Result<NcIter, EnumerateError> {
    enumerate_nc_partitions_with(q, &Caps::from_env())
}

pub fn enumerate_nc_partitions_with(q: u32, caps: &Caps) -> Result<NcIter, EnumerateError> {
    cap("q", q as usize, caps.max_nc, "KPROM_MAX_NC")?;
    let q = q as usize;
    Ok(NcIter {
        q,
        choice: vec![0; q],
        depth_after: vec![0; q],
        started: false,
        done: q == 0,
    })
}

/// Noncrossing perfect matchings of `[1, n]` (empty when `n` is odd).
pub fn enumerate_nc_matchings(
    n: u32,
) -> Result<impl Iterator<Item = NoncrossingMatching>, EnumerateError> {
    enumerate_nc_matchings_with(n, &Caps::from_env())
}

pub fn enumerate_nc_matchings_with(
    n: u32,
    caps: &Caps,
) -> Result<impl Iterator<Item = NoncrossingMatching>, EnumerateError> {
    Ok(enumerate_nc_partitions_with(n, caps)?
        .filter(|p| p.blocks().iter().all(|b| b.len() == 2))
        .map(|p| NoncrossingMatching::from_partition(p).unwrap()))
}

// Flamingo webs are generated by peeling: repeatedly take the first dangling
// half-edge of an unexplored region, create the vertex at its far end, decide
// which other dangling half-edges of the region end there and how many new
// ones it sends into each of the resulting subregions.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Vertex(usize),
    Port { half: usize, need: Color },
    Arc,
}

#[derive(Debug, Clone)]
struct WebState {
    colors: Vec<Color>,
    rot: Vec<Vec<usize>>,
    partner: Vec<usize>,
    owner: Vec<usize>,
    regions: Vec<Vec<Token>>,
    whites: usize,
    blacks: usize,
    // Sum of (degree − 3) over white vertices; every edge has one black end,
    // so this ends at exactly n − 3k.
    white_excess: usize,
}

impl WebState {
    fn new_half(&mut self, v: usize) -> usize {
        let h = self.partner.len();
        self.partner.push(usize::MAX);
        self.owner.push(v);
        h
    }

    fn interior(&self, n: usize) -> usize {
        self.colors.len() - n
    }

    /// Lower bound on the interior vertices still to be placed, or `None`
    /// when no completion can reach `#white − #black = k`.
    ///
    /// New white half-edges number `3w' + R` (R the unused white excess) and
    /// end at open white-needing ports or new black vertices; new black
    /// half-edges number `3b'` and end at black-needing ports or new whites.
    fn lower_bound(&self, n: usize, k: usize) -> Option<usize> {
        let (mut need_w, mut need_b, mut ports_w, mut ports_b) = (0, 0, 0, 0);
        for r in &self.regions {
            let d = region_demand(r);
            need_w += d.white_bases;
            need_b += d.black_bases;
            ports_w += d.white_ports;
            ports_b += d.black_ports;
        }
        let d = k as i64 + self.blacks as i64 - self.whites as i64;
        let spare = (n - 3 * k - self.white_excess) as i64;
        debug_assert_eq!(3 * d + spare, ports_w as i64 - ports_b as i64);
        let b = [(ports_b as i64 + 2) / 3, need_b as i64, need_w as i64 - d, -d, 0]
            .into_iter()
            .max()
            .unwrap();
        let total = 2 * b + d;
        (total >= 0).then_some(total as usize)
    }
}

#[derive(Default)]
struct Demand {
    // Largest number of ports sharing one base, by the color they need;
    // each of them must end at a distinct new vertex in this region.
    white_bases: usize,
    black_bases: usize,
    white_ports: usize,
    black_ports: usize,
}

fn region_demand(tokens: &[Token]) -> Demand {
    let mut per_base: Vec<(usize, Color, usize)> = Vec::new();
    let mut base = usize::MAX;
    // The walk is cyclic; the base of a leading port is the last vertex.
    for t in tokens.iter().rev() {
        if let Token::Vertex(v) = t {
            base = *v;
            break;
        }
    }
    let mut out = Demand::default();
    for t in tokens {
        match *t {
            Token::Vertex(v) => base = v,
            Token::Port { need, .. } => {
                match need {
                    Color::White => out.white_ports += 1,
                    Color::Black => out.black_ports += 1,
                }
                match per_base.iter_mut().find(|(b, _, _)| *b == base) {
                    Some(entry) => entry.2 += 1,
                    None => per_base.push((base, need, 1)),
                }
            }
            Token::Arc => {}
        }
    }
    for (_, need, c) in per_base {
        match need {
            Color::White => out.white_bases = out.white_bases.max(c),
            Color::Black => out.black_bases = out.black_bases.max(c),
        }
    }
    out
}

struct WebSearch {
    n: usize,
    k: usize,
    max_interior: usize,
    out: Vec<PlabicGraph>,
    seen: HashSet<Vec<u32>>,
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in 0..=total {
            prefix.push(x);
            go(total - x, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

impl WebSearch {
    fn run(&mut self, state: WebState) {
        match state.lower_bound(self.n, self.k) {
            Some(more) if state.interior(self.n) + more <= self.max_interior => {}
            _ => return,
        }
        let mut state = state;
        // Most constrained region first: fewest open ports.
        let pick = (0..state.regions.len()).min_by_key(|&i| {
            state.regions[i].iter().filter(|t| matches!(t, Token::Port { .. })).count()
        });
        let Some(region) = pick.map(|i| state.regions.swap_remove(i)) else {
            if state.whites == state.blacks + self.k && state.white_excess == self.n - 3 * self.k {
                self.emit(&state);
            }
            return;
        };
        let first = region
            .iter()
            .position(|t| matches!(t, Token::Port { .. }))
            .expect("open regions hold ports");
        let tokens: Vec<Token> = region[first..].iter().chain(&region[..first]).copied().collect();
        let Token::Port { half: root_half, need: color } = tokens[0] else {
            unreachable!()
        };
        let Some(&Token::Vertex(root_base)) = tokens.last() else {
            unreachable!("ports follow their base vertex")
        };
        let base_of = |j: usize| match tokens[j - 1] {
            Token::Vertex(v) => v,
            _ => unreachable!("ports follow their base vertex"),
        };
        let candidates: Vec<usize> = (1..tokens.len())
            .filter(|&j| matches!(tokens[j], Token::Port { need, .. } if need == color))
            .collect();
        let budget = self.max_interior - state.interior(self.n) - 1;
        // Subsets of candidates with distinct bases, in lexicographic order.
        let mut subsets: Vec<Vec<usize>> = vec![Vec::new()];
        for &j in &candidates {
            let b = base_of(j);
            if b == root_base {
                continue;
            }
            let extended: Vec<Vec<usize>> = subsets
                .iter()
                .filter(|s| s.iter().all(|&i| base_of(i) != b))
                .filter(|s| color == Color::White || s.len() < 2)
                .map(|s| {
                    let mut t = s.clone();
                    t.push(j);
                    t
                })
                .collect();
            subsets.extend(extended);
        }
        for chosen in subsets {
            let attached = 1 + chosen.len();
            let emit_range: Vec<usize> = match color {
                Color::Black => {
                    if attached > 3 {
                        continue;
                    }
                    vec![3 - attached]
                }
                Color::White => {
                    let spare = self.n - 3 * self.k - state.white_excess;
                    if attached > 3 + spare {
                        continue;
                    }
                    (3usize.saturating_sub(attached)..=3 + spare - attached).collect()
                }
            };
            for emitted in emit_range {
                if emitted > budget {
                    continue;
                }
                for split in compositions(emitted, chosen.len() + 1) {
                    let mut next = state.clone();
                    if self.place(&mut next, &tokens, root_half, color, &chosen, &split) {
                        self.run(next);
                    }
                }
            }
        }
    }

    /// Adds the new vertex and its subregions; false if a closed face is too small.
    fn place(
        &self,
        st: &mut WebState,
        tokens: &[Token],
        root_half: usize,
        color: Color,
        chosen: &[usize],
        split: &[usize],
    ) -> bool {
        let v = st.colors.len();
        st.colors.push(color);
        st.rot.push(Vec::new());
        match color {
            Color::White => {
                st.whites += 1;
                st.white_excess += (split.len() + split.iter().sum::<usize>()).saturating_sub(3);
            }
            Color::Black => st.blacks += 1,
        }
        let opposite = match color {
            Color::White => Color::Black,
            Color::Black => Color::White,
        };
        let connect = |st: &mut WebState, port_half: usize| {
            let h = st.new_half(v);
            st.partner[h] = port_half;
            st.partner[port_half] = h;
            st.rot[v].push(h);
        };
        let mut cuts = vec![0usize];
        cuts.extend_from_slice(chosen);
        cuts.push(tokens.len());
        let mut emitted_per_gap: Vec<Vec<usize>> = Vec::with_capacity(split.len());
        for (a, &count) in split.iter().enumerate() {
            let port = match tokens[cuts[a]] {
                Token::Port { half, .. } => half,
                _ => unreachable!(),
            };
            connect(st, if a == 0 { root_half } else { port });
            let mut gap = Vec::with_capacity(count);
            for _ in 0..count {
                let h = st.new_half(v);
                st.rot[v].push(h);
                gap.push(h);
            }
            emitted_per_gap.push(gap);
        }
        let base_before = |c: usize| -> Token {
            if c == 0 {
                *tokens.last().unwrap()
            } else {
                tokens[c - 1]
            }
        };
        for (a, gap) in emitted_per_gap.iter().enumerate() {
            let mut sub = vec![base_before(cuts[a])];
            sub.extend_from_slice(&tokens[cuts[a] + 1..cuts[a + 1]]);
            sub.push(Token::Vertex(v));
            for &h in gap.iter().rev() {
                sub.push(Token::Port { half: h, need: opposite });
                sub.push(Token::Vertex(v));
            }
            if sub.iter().any(|t| matches!(t, Token::Port { .. })) {
                st.regions.push(sub);
            } else {
                let touches = sub.iter().any(|t| matches!(t, Token::Arc));
                let distinct: HashSet<usize> = sub
                    .iter()
                    .filter_map(|t| match t {
                        Token::Vertex(x) => Some(*x),
                        _ => None,
                    })
                    .collect();
                if !touches && distinct.len() < 6 {
                    return false;
                }
            }
        }
        true
    }

    fn emit(&mut self, st: &WebState) {
        let mut edge_of = vec![usize::MAX; st.partner.len()];
        let mut edges = Vec::new();
        for h in 0..st.partner.len() {
            let p = st.partner[h];
            if h < p {
                edge_of[h] = edges.len();
                edge_of[p] = edges.len();
                edges.push((st.owner[h], st.owner[p]));
            }
        }
        let rotation = st
            .rot
            .iter()
            .map(|list| list.iter().map(|&h| edge_of[h]).collect())
            .collect();
        let ids = (1..=st.colors.len() as u32).collect();
        let g = PlabicGraph::from_raw(self.n, ids, st.colors.clone(), edges, rotation)
            .expect("peeling builds well-formed graphs");
        // The generator enforces the flamingo rules; the classifier rechecks.
        let ok = classify(&g).flamingo;
        debug_assert!(ok, "peeling produced a non-flamingo graph");
        if ok && self.seen.insert(g.canonical_code()) {
            self.out.push(g);
        }
    }
}

/// Flamingo webs with `n` boundary vertices, `#white − #black = k` and at
/// most `max_interior` interior vertices, in generation order. The search
/// is exhaustive within the interior bound.
pub fn enumerate_flamingo(
    n: usize,
    k: usize,
    max_interior: usize,
) -> Result<Vec<PlabicGraph>, EnumerateError> {
    enumerate_flamingo_with(n, k, max_interior, &Caps::from_env())
}

pub fn enumerate_flamingo_with(
    n: usize,
    k: usize,
    max_interior: usize,
    caps: &Caps,
) -> Result<Vec<PlabicGraph>, EnumerateError> {
    cap("n", n, caps.max_web_boundary, "KPROM_MAX_WEB_BOUNDARY")?;
    cap("max_interior", max_interior, caps.max_interior, "KPROM_MAX_INTERIOR")?;
    if n == 0 || 3 * k > n || max_interior == 0 {
        return Ok(Vec::new());
    }
    let mut state = WebState {
        colors: vec![Color::Black; n],
        rot: vec![Vec::new(); n],
        partner: Vec::new(),
        owner: Vec::new(),
        regions: Vec::new(),
        whites: 0,
        blacks: 0,
        white_excess: 0,
    };
    let mut disk = Vec::with_capacity(3 * n);
    for b in 0..n {
        let h = state.new_half(b);
        state.rot[b].push(h);
        disk.push(Token::Vertex(b));
        disk.push(Token::Port {
            half: h,
            need: Color::White,
        });
        disk.push(Token::Arc);
    }
    state.regions.push(disk);
    let mut search = WebSearch {
        n,
        k,
        max_interior,
        out: Vec::new(),
        seen: HashSet::new(),
    };
    search.run(state);
    Ok(search.out)
}
