//! Generalized Knuth relations on plactic biwords, equivalence classes, and
//! fibers of the insertion map.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bpd::Bpd;
use crate::error::{Error, Result};
use crate::insertion::{left_insert, maxword, minword, Biletter, PlacticBiword};
use crate::perm::Permutation;

/// The four generalized Knuth relations, all on adjacent biletters:
///
/// 1. `(b a c / k k k) ~ (b c a / k k k)` if a < b <= c
/// 2. `(a c b / k k k) ~ (c a b / k k k)` if a <= b < c
/// 3. `(a b / k k) ~ (a b / k+1 k)` if a <= b
/// 4. `(b a / k+1 k+1) ~ (b a / k+1 k)` if a < b
///
/// Forward moves go from the left side to the right side. A move is only
/// allowed if the result is plactic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KnuthMove {
    pub rule: Rule,
    /// 0-based index of the leftmost biletter involved.
    pub position: usize,
    pub direction: Direction,
}

impl KnuthMove {
    pub fn reversed(self) -> Self {
        let direction = match self.direction {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        };
        Self { direction, ..self }
    }
}

/// Applies a move, or returns `None` if its pattern does not match.
pub fn apply_move(q: &PlacticBiword, mv: KnuthMove) -> Option<PlacticBiword> {
    let w = q.letters();
    let i = mv.position;
    let width = if matches!(mv.rule, Rule::R1 | Rule::R2) { 3 } else { 2 };
    if i + width > w.len() {
        return None;
    }
    let mut out = w.to_vec();
    use Direction::*;
    use Rule::*;
    match (mv.rule, mv.direction) {
        (R1 | R2, _) if w[i].k != w[i + 1].k || w[i + 1].k != w[i + 2].k => return None,
        (R1, Forward) => {
            // bac -> bca
            let (b, a, c) = (w[i].a, w[i + 1].a, w[i + 2].a);
            if !(a < b && b <= c) {
                return None;
            }
            out.swap(i + 1, i + 2);
        }
        (R1, Backward) => {
            let (b, c, a) = (w[i].a, w[i + 1].a, w[i + 2].a);
            if !(a < b && b <= c) {
                return None;
            }
            out.swap(i + 1, i + 2);
        }
        (R2, Forward) => {
            // acb -> cab
            let (a, c, b) = (w[i].a, w[i + 1].a, w[i + 2].a);
            if !(a <= b && b < c) {
                return None;
            }
            out.swap(i, i + 1);
        }
        (R2, Backward) => {
            let (c, a, b) = (w[i].a, w[i + 1].a, w[i + 2].a);
            if !(a <= b && b < c) {
                return None;
            }
            out.swap(i, i + 1);
        }
        (R3, Forward) => {
            let k = w[i].k;
            if w[i + 1].k != k || w[i].a > w[i + 1].a {
                return None;
            }
            out[i].k = k + 1;
        }
        (R3, Backward) => {
            let k = w[i + 1].k;
            if w[i].k != k + 1 || w[i].a > w[i + 1].a {
                return None;
            }
            out[i].k = k;
        }
        (R4, Forward) => {
            let k1 = w[i].k;
            if w[i + 1].k != k1 || w[i + 1].a >= w[i].a || k1 < 2 {
                return None;
            }
            out[i + 1].k = k1 - 1;
        }
        (R4, Backward) => {
            let k = w[i + 1].k;
            if w[i].k != k + 1 || w[i + 1].a >= w[i].a {
                return None;
            }
            out[i + 1].k = k + 1;
        }
    }
    let valid = out.iter().all(|b| Biletter::new(b.a, b.k).is_ok());
    (valid && PlacticBiword::is_plactic(&out)).then(|| PlacticBiword::new(out).unwrap())
}

/// Every plactic biword one move away, with the move taken.
pub fn neighbors(q: &PlacticBiword) -> Vec<(PlacticBiword, KnuthMove)> {
    let mut out = Vec::new();
    for position in 0..q.len() {
        for rule in [Rule::R1, Rule::R2, Rule::R3, Rule::R4] {
            for direction in [Direction::Forward, Direction::Backward] {
                let mv = KnuthMove { rule, position, direction };
                if let Some(r) = apply_move(q, mv) {
                    out.push((r, mv));
                }
            }
        }
    }
    out.sort();
    out
}

pub const DEFAULT_CLASS_LIMIT: usize = 1_000_000;

/// The move graph of a Knuth class.
#[derive(Clone, Debug, Default)]
pub struct KnuthGraph {
    /// Sorted members.
    pub nodes: Vec<PlacticBiword>,
    /// Undirected edges (i < j) labeled by rule.
    pub edges: BTreeSet<(usize, usize, Rule)>,
}

impl KnuthGraph {
    /// Graphviz rendering: nodes are biwords, edges carry the rule name.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph knuth {\n");
        for (i, q) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{q}\"];\n"));
        }
        for (i, j, r) in &self.edges {
            s.push_str(&format!("  n{i} -- n{j} [label=\"{r}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Length of the longest shortest path, by BFS from every node.
    pub fn diameter(&self) -> usize {
        let n = self.nodes.len();
        let mut adj = vec![Vec::new(); n];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        (0..n)
            .into_par_iter()
            .map(|s| {
                let mut dist = vec![usize::MAX; n];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                let mut far = 0;
                while let Some(u) = queue.pop_front() {
                    far = far.max(dist[u]);
                    for &v in &adj[u] {
                        if dist[v] == usize::MAX {
                            dist[v] = dist[u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
                far
            })
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first closure of `q` under the relations, with at most `limit`
/// members.
pub fn knuth_graph(q: &PlacticBiword, limit: usize) -> Result<KnuthGraph> {
    let mut index: HashMap<PlacticBiword, usize> = HashMap::new();
    let mut order = vec![q.clone()];
    index.insert(q.clone(), 0);
    let mut raw_edges = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let cur = order[head].clone();
        for (r, mv) in neighbors(&cur) {
            let j = match index.get(&r) {
                Some(&j) => j,
                None => {
                    if order.len() >= limit {
                        return Err(Error::ClassOverflow(limit));
                    }
                    index.insert(r.clone(), order.len());
                    order.push(r);
                    order.len() - 1
                }
            };
            raw_edges.push((head, j, mv.rule));
        }
        head += 1;
    }
    let mut sorted: Vec<usize> = (0..order.len()).collect();
    sorted.sort_by(|&a, &b| order[a].cmp(&order[b]));
    let mut rank = vec![0; order.len()];
    for (r, &i) in sorted.iter().enumerate() {
        rank[i] = r;
    }
    let edges = raw_edges.into_iter().map(|(i, j, r)| (rank[i].min(rank[j]), rank[i].max(rank[j]), r)).collect();
    let nodes = sorted.into_iter().map(|i| order[i].clone()).collect();
    Ok(KnuthGraph { nodes, edges })
}

pub fn knuth_class(q: &PlacticBiword) -> Result<BTreeSet<PlacticBiword>> {
    knuth_class_limited(q, DEFAULT_CLASS_LIMIT)
}

pub fn knuth_class_limited(q: &PlacticBiword, limit: usize) -> Result<BTreeSet<PlacticBiword>> {
    let mut seen = BTreeSet::new();
    seen.insert(q.clone());
    let mut queue = VecDeque::from([q.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (r, _) in neighbors(&cur) {
            if !seen.contains(&r) {
                if seen.len() >= limit {
                    return Err(Error::ClassOverflow(limit));
                }
                seen.insert(r.clone());
                queue.push_back(r);
            }
        }
    }
    Ok(seen)
}

/// A shortest sequence of moves from `from` to `to`, searching from both ends.
pub fn knuth_path(from: &PlacticBiword, to: &PlacticBiword, limit: usize) -> Result<Option<Vec<KnuthMove>>> {
    if from == to {
        return Ok(Some(Vec::new()));
    }
    // parent maps: node -> (previous node, move taken from previous)
    let mut fwd: HashMap<PlacticBiword, Option<(PlacticBiword, KnuthMove)>> = HashMap::from([(from.clone(), None)]);
    let mut bwd: HashMap<PlacticBiword, Option<(PlacticBiword, KnuthMove)>> = HashMap::from([(to.clone(), None)]);
    let mut fq = vec![from.clone()];
    let mut bq = vec![to.clone()];
    while !fq.is_empty() && !bq.is_empty() {
        if fwd.len() + bwd.len() > limit {
            return Err(Error::ClassOverflow(limit));
        }
        let forward = fq.len() <= bq.len();
        let (frontier, mine, other) = if forward { (&mut fq, &mut fwd, &bwd) } else { (&mut bq, &mut bwd, &fwd) };
        let mut next = Vec::new();
        let mut meet = None;
        'outer: for cur in frontier.iter() {
            for (r, mv) in neighbors(cur) {
                if mine.contains_key(&r) {
                    continue;
                }
                mine.insert(r.clone(), Some((cur.clone(), mv)));
                if other.contains_key(&r) {
                    meet = Some(r);
                    break 'outer;
                }
                next.push(r);
            }
        }
        if let Some(m) = meet {
            let mut path = Vec::new();
            let mut cur = m.clone();
            while let Some(Some((prev, mv))) = fwd.get(&cur) {
                path.push(*mv);
                cur = prev.clone();
            }
            path.reverse();
            let mut cur = m;
            while let Some(Some((prev, mv))) = bwd.get(&cur) {
                // bwd stores the move from prev to cur; walking toward `to` reverses it
                path.push(mv.reversed());
                cur = prev.clone();
            }
            return Ok(Some(path));
        }
        *frontier = next;
    }
    Ok(None)
}

/// Applies a sequence of moves, returning every intermediate biword.
pub fn follow_path(q: &PlacticBiword, path: &[KnuthMove]) -> Option<Vec<PlacticBiword>> {
    let mut out = vec![q.clone()];
    for &mv in path {
        let next = apply_move(out.last().unwrap(), mv)?;
        out.push(next);
    }
    Some(out)
}

/// All plactic biwords inserting to a pipe dream of `p`, grouped by pipe
/// dream. Labels are bounded by `max(size(p) - 1, 1)`.
pub fn fibers_of_perm(p: &Permutation) -> BTreeMap<Bpd, Vec<PlacticBiword>> {
    let max_k = p.size().saturating_sub(1).max(1);
    let len = p.length();
    let mut out: BTreeMap<Bpd, Vec<PlacticBiword>> = BTreeMap::new();
    // Build words right to left: φ is left insertion of the letters in reverse.
    let mut stack: Vec<(Bpd, Vec<Biletter>)> = vec![(Bpd::identity(0), Vec::new())];
    while let Some((d, rev)) = stack.pop() {
        if rev.len() == len {
            if d.perm() == p {
                let mut letters = rev.clone();
                letters.reverse();
                out.entry(d.trimmed()).or_default().push(PlacticBiword::new(letters).unwrap());
            }
            continue;
        }
        let min_k = rev.last().map_or(1, |b| b.k);
        for k in min_k..=max_k {
            for a in 1..=k {
                let b = Biletter { a, k };
                let next = left_insert(b, &d);
                if next.result.perm().bruhat_le(p) {
                    let mut r = rev.clone();
                    r.push(b);
                    stack.push((next.result, r));
                }
            }
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// `words(D)`: every plactic biword with `φ(Q) = D`.
pub fn fiber(d: &Bpd) -> Vec<PlacticBiword> {
    fibers_of_perm(d.perm()).remove(&d.trimmed()).unwrap_or_default()
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub bpd: Vec<String>,
    pub size: usize,
    pub class_size: usize,
    pub connected: bool,
    pub diameter: usize,
    pub has_maxword: bool,
    pub has_minword: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub perm: Permutation,
    pub fibers: Vec<FiberReport>,
    pub ok: bool,
}

/// Checks that every fiber over a pipe dream of `p` is one Knuth class
/// containing the maxword and the minword.
pub fn verify_connectivity(p: &Permutation) -> ConnectivityReport {
    let fibers = fibers_of_perm(p);
    let mut reports: Vec<FiberReport> = Bpd::all(p)
        .par_iter()
        .map(|d| {
            let members = fibers.get(&d.trimmed()).cloned().unwrap_or_default();
            let set: BTreeSet<PlacticBiword> = members.iter().cloned().collect();
            let (class_size, connected, diameter) = match members.first() {
                Some(q) => match knuth_graph(q, DEFAULT_CLASS_LIMIT) {
                    Ok(g) => {
                        let class: BTreeSet<PlacticBiword> = g.nodes.iter().cloned().collect();
                        (class.len(), class == set, g.diameter())
                    }
                    Err(_) => (0, false, 0),
                },
                None => (0, false, 0),
            };
            FiberReport {
                bpd: d.render().lines().map(String::from).collect(),
                size: members.len(),
                class_size,
                connected,
                diameter,
                has_maxword: set.contains(&maxword(d)),
                has_minword: set.contains(&minword(d)),
            }
        })
        .collect();
    reports.sort_by(|a, b| a.bpd.cmp(&b.bpd));
    let ok = reports.iter().all(|r| r.size > 0 && r.connected && r.has_maxword && r.has_minword);
    ConnectivityReport { perm: p.clone(), fibers: reports, ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(top: &[usize], bottom: &[usize]) -> PlacticBiword {
        PlacticBiword::from_rows(top, bottom).unwrap()
    }

    #[test]
    fn rule_examples() {
        let n = neighbors(&q(&[2, 1, 2], &[4, 4, 4]));
        assert!(n.iter().any(|(r, mv)| *r == q(&[2, 2, 1], &[4, 4, 4]) && mv.rule == Rule::R1));
        let n = neighbors(&q(&[1, 2], &[4, 4]));
        assert!(n.iter().any(|(r, mv)| *r == q(&[1, 2], &[5, 4]) && mv.rule == Rule::R3));
        let n = neighbors(&q(&[2, 1], &[5, 5]));
        assert!(n.iter().any(|(r, mv)| *r == q(&[2, 1], &[5, 4]) && mv.rule == Rule::R4));
    }

    #[test]
    fn moves_are_symmetric() {
        for len in 0..=4 {
            for w in PlacticBiword::all(len, 3) {
                for (r, mv) in neighbors(&w) {
                    assert_eq!(apply_move(&r, mv.reversed()).as_ref(), Some(&w));
                    assert!(neighbors(&r).iter().any(|(s, _)| *s == w));
                }
            }
        }
    }

    #[test]
    fn trivial_classes() {
        let single = q(&[2], &[3]);
        assert_eq!(knuth_class(&single).unwrap().len(), 1);
        assert_eq!(knuth_class(&PlacticBiword::empty()).unwrap().len(), 1);
        assert!(matches!(knuth_class_limited(&q(&[1, 2], &[4, 4]), 1), Err(Error::ClassOverflow(1))));
    }

    #[test]
    fn path_search() {
        let a = q(&[2, 1, 2], &[4, 4, 4]);
        let b = q(&[2, 2, 1], &[4, 4, 4]);
        let path = knuth_path(&a, &b, 1000).unwrap().unwrap();
        assert_eq!(follow_path(&a, &path).unwrap().last(), Some(&b));
    }

    #[test]
    fn dot_output() {
        let g = knuth_graph(&q(&[2, 1, 2], &[4, 4, 4]), 100).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph knuth {"));
        assert!(dot.contains("R1"));
    }
}
