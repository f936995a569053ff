//! Reference implementations written against plain vectors, sharing no code
//! with the library beyond its public types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

/// Every double-occurrence word on `0..n` whose labels appear in order of
/// first occurrence.
pub fn all_words(n: usize) -> Vec<Vec<usize>> {
    fn rec(
        n: usize,
        w: &mut Vec<usize>,
        cnt: &mut Vec<u8>,
        intro: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if w.len() == 2 * n {
            out.push(w.clone());
            return;
        }
        for l in 0..n.min(intro + 1) {
            if cnt[l] == 2 {
                continue;
            }
            cnt[l] += 1;
            w.push(l);
            rec(n, w, cnt, intro.max(l + 1), out);
            w.pop();
            cnt[l] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![0; n], 0, &mut out);
    out
}

pub fn positions(w: &[usize]) -> HashMap<usize, (usize, usize)> {
    let mut first = HashMap::new();
    let mut out = HashMap::new();
    for (i, &x) in w.iter().enumerate() {
        match first.get(&x) {
            None => {
                first.insert(x, i);
            }
            Some(&p) => {
                out.insert(x, (p, i));
            }
        }
    }
    out
}

/// Labels in order of first occurrence.
pub fn label_order(w: &[usize]) -> Vec<usize> {
    let mut seen = Vec::new();
    for &x in w {
        if !seen.contains(&x) {
            seen.push(x);
        }
    }
    seen
}

/// `m[i][j]` for labels in first-occurrence order: exactly one endpoint of
/// one chord lies between the endpoints of the other.
pub fn interlace(w: &[usize]) -> Vec<Vec<bool>> {
    let pos = positions(w);
    let order = label_order(w);
    let n = order.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let (p, q) = pos[&order[i]];
                let (r, s) = pos[&order[j]];
                m[i][j] = (p < r && r < q) != (p < s && s < q);
            }
        }
    }
    m
}

/// `W₁ c W₂ c W₃ ↦ W₁ W₂ᴿ W₃`.
pub fn smooth_word(w: &[usize], c: usize) -> Vec<usize> {
    let (p, q) = positions(w)[&c];
    let mut out = w[..p].to_vec();
    out.extend(w[p + 1..q].iter().rev());
    out.extend(&w[q + 1..]);
    out
}

/// Deletes `c` and flips every pair inside `c_×`. Rows follow `labels`.
pub fn smooth_toggle(w: &[usize], c: usize, labels: &[usize]) -> Vec<Vec<bool>> {
    let order = label_order(w);
    let m = interlace(w);
    let idx = |l: usize| order.iter().position(|&x| x == l).unwrap();
    let ci = idx(c);
    labels
        .iter()
        .map(|&a| {
            labels
                .iter()
                .map(|&b| {
                    let (ia, ib) = (idx(a), idx(b));
                    m[ia][ib] ^ (a != b && m[ci][ia] && m[ci][ib])
                })
                .collect()
        })
        .collect()
}

/// Interlacement of `w` with rows in the order given by `labels`.
pub fn interlace_for(w: &[usize], labels: &[usize]) -> Vec<Vec<bool>> {
    let order = label_order(w);
    let m = interlace(w);
    let idx = |l: usize| order.iter().position(|&x| x == l).unwrap();
    labels
        .iter()
        .map(|&a| labels.iter().map(|&b| m[idx(a)][idx(b)]).collect())
        .collect()
}

/// Least relabelled word over every rotation and both directions.
pub fn brute_canonical(w: &[usize]) -> Vec<usize> {
    let len = w.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        let base: Vec<usize> = if rev {
            w.iter().rev().copied().collect()
        } else {
            w.to_vec()
        };
        for r in 0..len.max(1) {
            let rot: Vec<usize> = (0..len).map(|k| base[(k + r) % len]).collect();
            let mut map = HashMap::new();
            let relabelled: Vec<usize> = rot
                .iter()
                .map(|x| {
                    let next = map.len();
                    *map.entry(*x).or_insert(next)
                })
                .collect();
            if best.as_ref().is_none_or(|b| relabelled < *b) {
                best = Some(relabelled);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn common(m: &[Vec<bool>], i: usize, j: usize) -> usize {
    (0..m.len()).filter(|&k| m[i][k] && m[j][k]).count()
}

pub fn even_condition(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0..n).all(|i| common(m, i, i).is_multiple_of(2))
        && (0..n).all(|i| (i + 1..n).all(|j| m[i][j] || common(m, i, j).is_multiple_of(2)))
}

/// Planarity via the interlace graph: the even condition, plus the edges
/// whose endpoints share an even number of neighbours form a cut.
pub fn cocycle_realizable(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    if !even_condition(m) {
        return false;
    }
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !m[u][v] {
                    continue;
                }
                let want = colour[u].unwrap() ^ common(m, u, v).is_multiple_of(2);
                match colour[v] {
                    None => {
                        colour[v] = Some(want);
                        stack.push(v);
                    }
                    Some(c) if c != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn inversions(pi: &[usize]) -> BTreeSet<(usize, usize)> {
    let n = pi.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if pi[i] > pi[j] {
                out.insert((i + 1, j + 1));
            }
        }
    }
    out
}

/// Visitation orders starting at an odd point whose code
/// `r 1 ... n r w₁ ... w_n` is planar by [`cocycle_realizable`].
pub fn brute_meanders(n: usize) -> BTreeSet<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|w| w[0] % 2 == 1)
        .filter(|w| {
            let word: Vec<usize> = (0..=n)
                .chain(std::iter::once(0))
                .chain(w.iter().copied())
                .collect();
            cocycle_realizable(&interlace(&word))
        })
        .collect()
}

pub fn noncrossing(arcs: &[(usize, usize)]) -> bool {
    arcs.iter().enumerate().all(|(k, &(a, b))| {
        let (lo, hi) = (a.min(b), a.max(b));
        arcs[k + 1..]
            .iter()
            .all(|&(c, d)| (lo < c && c < hi) == (lo < d && d < hi))
    })
}

/// Meander matrix of a visitation order: `r` is row 0 and is full; for
/// points `i < j`, `m_ij = 1` iff `i` is visited before `j`.
pub fn meander_matrix(w: &[usize]) -> Vec<Vec<bool>> {
    let n = w.len();
    let mut at = vec![0; n + 1];
    for (k, &x) in w.iter().enumerate() {
        at[x] = k;
    }
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i == j {
                        false
                    } else if i == 0 || j == 0 {
                        true
                    } else {
                        let (a, b) = (i.min(j), i.max(j));
                        at[a] < at[b]
                    }
                })
                .collect()
        })
        .collect()
}

pub fn to_rows(m: &[Vec<bool>]) -> Vec<Vec<u8>> {
    m.iter()
        .map(|r| r.iter().map(|&b| u8::from(b)).collect())
        .collect()
}
