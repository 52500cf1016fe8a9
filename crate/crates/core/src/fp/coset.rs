//! HLT-style Todd-Coxeter coset enumeration over the trivial subgroup.

use super::{FpError, GroupPresentation, Word};
use crate::group::FiniteGroup;

const UNDEF: u32 = u32::MAX;

/// Column index for a signed generator letter.
fn col(letter: i32) -> usize {
    let g = (letter.unsigned_abs() as usize) - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

struct Table {
    ncols: usize,
    rows: Vec<Vec<u32>>,
    /// Union-find over cosets; a coset is live iff `rep[i] == i`.
    rep: Vec<u32>,
    live: usize,
    max: usize,
    pending: Vec<(u32, u32)>,
}

impl Table {
    fn new(ngens: usize, max: usize) -> Self {
        Table {
            ncols: 2 * ngens,
            rows: vec![vec![UNDEF; 2 * ngens]],
            rep: vec![0],
            live: 1,
            max,
            pending: Vec::new(),
        }
    }

    fn find(&mut self, mut a: u32) -> u32 {
        while self.rep[a as usize] != a {
            let r = self.rep[self.rep[a as usize] as usize];
            self.rep[a as usize] = r;
            a = r;
        }
        a
    }

    fn define(&mut self, from: u32, c: usize) -> Result<u32, FpError> {
        if self.live >= self.max {
            return Err(FpError::CosetLimit { max_cosets: self.max });
        }
        let new = self.rows.len() as u32;
        self.rows.push(vec![UNDEF; self.ncols]);
        self.rep.push(new);
        self.live += 1;
        self.rows[from as usize][c] = new;
        self.rows[new as usize][inv_col(c)] = from;
        Ok(new)
    }

    /// Records `from . c = to`, queueing a coincidence on conflict.
    fn deduce(&mut self, from: u32, c: usize, to: u32) {
        let cur = self.rows[from as usize][c];
        if cur == UNDEF {
            self.rows[from as usize][c] = to;
            let back = self.rows[to as usize][inv_col(c)];
            if back == UNDEF {
                self.rows[to as usize][inv_col(c)] = from;
            } else if back != from {
                self.pending.push((back, from));
            }
        } else if cur != to {
            self.pending.push((cur, to));
        }
    }

    /// Merges queued coincidences until stable.
    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.rep[drop as usize] = keep;
            self.live -= 1;
            for c in 0..self.ncols {
                let t = self.rows[drop as usize][c];
                if t == UNDEF {
                    continue;
                }
                let t = self.find(t);
                let cur = self.rows[keep as usize][c];
                if cur == UNDEF {
                    self.rows[keep as usize][c] = t;
                    let back = self.rows[t as usize][inv_col(c)];
                    if back == UNDEF {
                        self.rows[t as usize][inv_col(c)] = keep;
                    } else {
                        let back = self.find(back);
                        if back != keep {
                            self.pending.push((back, keep));
                        }
                    }
                } else {
                    let cur = self.find(cur);
                    if cur != t {
                        self.pending.push((cur, t));
                    }
                }
            }
            // Rewrite any stale references to the dropped coset.
            for row in 0..self.rows.len() {
                if self.rep[row] != row as u32 {
                    continue;
                }
                for c in 0..self.ncols {
                    let t = self.rows[row][c];
                    if t != UNDEF && self.find(t) != t {
                        let ft = self.find(t);
                        self.rows[row][c] = ft;
                    }
                }
            }
        }
    }

    /// Scans `word` cyclically at `start`, defining cosets as needed.
    fn scan_and_fill(&mut self, start: u32, word: &[i32]) -> Result<(), FpError> {
        if word.is_empty() {
            return Ok(());
        }
        loop {
            let start = self.find(start);
            // Forward.
            let mut f = start;
            let mut i = 0;
            while i < word.len() {
                let next = self.rows[f as usize][col(word[i])];
                if next == UNDEF {
                    break;
                }
                f = self.find(next);
                i += 1;
            }
            if i == word.len() {
                if f != start {
                    self.pending.push((f, start));
                    self.process_coincidences();
                }
                return Ok(());
            }
            // Backward.
            let mut b = start;
            let mut j = word.len();
            while j > i + 1 {
                let prev = self.rows[b as usize][inv_col(col(word[j - 1]))];
                if prev == UNDEF {
                    break;
                }
                b = self.find(prev);
                j -= 1;
            }
            if j == i + 1 {
                // One gap: deduction closes the scan.
                self.deduce(f, col(word[i]), b);
                self.process_coincidences();
                return Ok(());
            }
            // Wide gap: define one coset and rescan.
            self.define(f, col(word[i]))?;
        }
    }

    /// Deduction-only pass over all live cosets; returns true if the live
    /// count dropped.
    fn lookahead(&mut self, relators: &[Word]) -> bool {
        let before = self.live;
        for a in 0..self.rows.len() as u32 {
            if self.find(a) != a {
                continue;
            }
            for r in relators {
                // Scan without defining: walk forward; on full scan with
                // mismatch, record the coincidence.
                let mut f = self.find(a);
                let mut complete = true;
                for &l in &r.0 {
                    let next = self.rows[f as usize][col(l)];
                    if next == UNDEF {
                        complete = false;
                        break;
                    }
                    f = self.find(next);
                }
                if complete && f != self.find(a) {
                    let fa = self.find(a);
                    self.pending.push((f, fa));
                    self.process_coincidences();
                }
            }
        }
        self.live < before
    }
}

/// Runs the enumeration and converts the closed coset table into a group.
pub fn enumerate(p: &GroupPresentation, max_cosets: usize) -> Result<FiniteGroup, FpError> {
    let ngens = p.generators.len();
    let relators: Vec<Word> = p.relators.iter().map(|w| w.reduced()).collect();
    let mut t = Table::new(ngens, max_cosets.max(1));
    let mut next = 0u32;
    loop {
        if next as usize >= t.rows.len() {
            break;
        }
        if t.find(next) != next {
            next += 1;
            continue;
        }
        for r in &relators {
            match t.scan_and_fill(next, &r.0) {
                Ok(()) => {}
                Err(FpError::CosetLimit { .. }) => {
                    if !t.lookahead(&relators) {
                        return Err(FpError::CosetLimit { max_cosets });
                    }
                }
                Err(e) => return Err(e),
            }
            if t.find(next) != next {
                break;
            }
        }
        if t.find(next) != next {
            next += 1;
            continue;
        }
        for c in 0..t.ncols {
            if t.rows[next as usize][c] == UNDEF {
                match t.define(next, c) {
                    Ok(_) => {}
                    Err(FpError::CosetLimit { .. }) => {
                        if !t.lookahead(&relators) {
                            return Err(FpError::CosetLimit { max_cosets });
                        }
                        let cur = t.find(next);
                        if t.rows[cur as usize][c] == UNDEF {
                            t.define(cur, c)?;
                        }
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        next += 1;
    }
    // Compact live cosets in order.
    let mut index = vec![UNDEF; t.rows.len()];
    let mut live_rows: Vec<u32> = Vec::new();
    for a in 0..t.rows.len() as u32 {
        if t.find(a) == a {
            index[a as usize] = live_rows.len() as u32;
            live_rows.push(a);
        }
    }
    let n = live_rows.len();
    let ncols = t.ncols;
    let mut action = vec![vec![0u32; ncols]; n];
    for (i, &a) in live_rows.iter().enumerate() {
        for c in 0..ncols {
            let to = t.rows[a as usize][c];
            if to == UNDEF {
                return Err(FpError::Parse("coset table failed to close".into()));
            }
            action[i][c] = index[t.find(to) as usize];
        }
    }
    cayley_from_action(p, n, &action, &relators)
}

/// Converts the closed coset action into a Cayley table: BFS words label each
/// coset by a shortlex word, and `i * j` traces `word(j)` from coset `i`.
fn cayley_from_action(
    p: &GroupPresentation,
    n: usize,
    action: &[Vec<u32>],
    relators: &[Word],
) -> Result<FiniteGroup, FpError> {
    let ncols = action[0].len();
    let mut word: Vec<Option<Vec<usize>>> = vec![None; n];
    word[0] = Some(vec![]);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for c in 0..ncols {
            let y = action[x][c] as usize;
            if word[y].is_none() {
                let mut w = word[x].clone().unwrap();
                w.push(c);
                word[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    let words: Vec<Vec<usize>> = word
        .into_iter()
        .map(|w| w.ok_or_else(|| FpError::Parse("coset graph is not connected".into())))
        .collect::<Result<_, _>>()?;
    let trace = |from: usize, w: &[usize]| -> usize {
        let mut x = from;
        for &c in w {
            x = action[x][c] as usize;
        }
        x
    };
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = trace(i, &words[j]) as u16;
        }
    }
    let generators: Vec<u16> = (0..p.generators.len())
        .map(|g| action[0][2 * g] as u16)
        .collect();
    let labels: Vec<String> = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "e".to_string()
            } else {
                w.iter()
                    .map(|&c| {
                        let name = &p.generators[c / 2];
                        if c % 2 == 0 {
                            name.clone()
                        } else {
                            format!("{name}'")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("·")
            }
        })
        .collect();
    let g = FiniteGroup::from_table(n, table, 0, generators, Some(labels))?;
    // Every relator must evaluate to the identity at every element.
    for r in relators {
        let w: Vec<usize> = r.0.iter().map(|&l| col(l)).collect();
        for i in 0..n {
            if trace(i, &w) != i {
                return Err(FpError::Parse(format!(
                    "relator fails to act trivially at element {i}"
                )));
            }
        }
    }
    Ok(g)
}
