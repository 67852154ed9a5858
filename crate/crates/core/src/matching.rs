//! Bipartite matching by augmenting paths.
//!
//! Left vertices are processed in increasing order and each tries its
//! neighbours in the order given, so results are deterministic.

/// Maximum matching; entry `i` is the right vertex matched to left vertex `i`.
pub fn max_matching(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; right_count];
    for left in 0..adj.len() {
        let mut seen = vec![false; right_count];
        augment(left, adj, &mut owner, &mut seen);
    }
    let mut matched = vec![None; adj.len()];
    for (right, o) in owner.iter().enumerate() {
        if let Some(left) = *o {
            matched[left] = Some(right);
        }
    }
    matched
}

fn augment(
    left: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &right in &adj[left] {
        if seen[right] {
            continue;
        }
        seen[right] = true;
        if owner[right].is_none_or(|other| augment(other, adj, owner, seen)) {
            owner[right] = Some(left);
            return true;
        }
    }
    false
}

/// A matching saturating every left vertex, if one exists.
pub fn saturating_matching(adj: &[Vec<usize>], right_count: usize) -> Option<Vec<usize>> {
    max_matching(adj, right_count).into_iter().collect()
}

/// Assignment of every left vertex to a right vertex `j` used at most
/// `capacity[j]` times, if one exists.
pub fn capacitated_matching(adj: &[Vec<usize>], capacity: &[usize]) -> Option<Vec<usize>> {
    let mut first_slot = Vec::with_capacity(capacity.len());
    let mut slot_owner = vec![];
    for (j, &c) in capacity.iter().enumerate() {
        first_slot.push(slot_owner.len());
        slot_owner.extend(std::iter::repeat_n(j, c));
    }
    let expanded: Vec<Vec<usize>> = adj
        .iter()
        .map(|row| {
            row.iter()
                .flat_map(|&j| first_slot[j]..first_slot[j] + capacity[j])
                .collect()
        })
        .collect();
    let slots = saturating_matching(&expanded, slot_owner.len())?;
    Some(slots.into_iter().map(|s| slot_owner[s]).collect())
}
