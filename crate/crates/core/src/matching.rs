//! Bipartite matching between "left" items and "right" slots.
//!
//! `adj[i]` lists the right slots item `i` may take. Sizes here are tiny, so
//! plain augmenting paths are enough.

fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool], banned: &[bool]) -> bool {
    for &r in &adj[i] {
        if seen[r] || banned[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].is_none_or(|j| augment(j, adj, owner, seen, banned)) {
            owner[r] = Some(i);
            return true;
        }
    }
    false
}

/// Maximum matching restricted to left items `items` and unbanned right slots.
/// Returns `match_of[i]` for every left item.
fn max_matching_on(adj: &[Vec<usize>], n_right: usize, items: &[usize], banned: &[bool]) -> Vec<Option<usize>> {
    let mut owner = vec![None; n_right];
    for &i in items {
        let mut seen = vec![false; n_right];
        augment(i, adj, &mut owner, &mut seen, banned);
    }
    let mut out = vec![None; adj.len()];
    for (r, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            out[i] = Some(r);
        }
    }
    out
}

pub fn max_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let items: Vec<usize> = (0..adj.len()).collect();
    max_matching_on(adj, n_right, &items, &vec![false; n_right])
}

/// The lexicographically smallest assignment of distinct slots to every left
/// item, comparing slot indices item by item, or `None`.
pub fn lex_smallest_perfect(adj: &[Vec<usize>], n_right: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if max_matching(adj, n_right).iter().any(|m| m.is_none()) {
        return None;
    }
    let mut banned = vec![false; n_right];
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let rest: Vec<usize> = (i + 1..n).collect();
        let mut cands = adj[i].clone();
        cands.sort_unstable();
        let pick = cands.into_iter().find(|&r| {
            if banned[r] {
                return false;
            }
            banned[r] = true;
            let ok = max_matching_on(adj, n_right, &rest, &banned).iter().skip(i + 1).all(|m| m.is_some());
            banned[r] = false;
            ok
        })?;
        banned[pick] = true;
        out.push(pick);
    }
    Some(out)
}

/// A set of left items whose joint neighbourhood is smaller than the set, found
/// by alternating reachability from an unmatched item. `None` when a left-perfect
/// matching exists.
pub fn hall_violator(adj: &[Vec<usize>], n_right: usize) -> Option<Vec<usize>> {
    let m = max_matching(adj, n_right);
    let start = m.iter().position(|x| x.is_none())?;
    let mut owner = vec![None; n_right];
    for (i, r) in m.iter().enumerate() {
        if let Some(r) = *r {
            owner[r] = Some(i);
        }
    }
    let mut in_s = vec![false; adj.len()];
    let mut seen_r = vec![false; n_right];
    let mut stack = vec![start];
    in_s[start] = true;
    while let Some(i) = stack.pop() {
        for &r in &adj[i] {
            if seen_r[r] {
                continue;
            }
            seen_r[r] = true;
            // Every reachable slot is matched, otherwise the matching was not maximum.
            let j = owner[r].expect("maximum matching");
            if !in_s[j] {
                in_s[j] = true;
                stack.push(j);
            }
        }
    }
    Some((0..adj.len()).filter(|&i| in_s[i]).collect())
}
