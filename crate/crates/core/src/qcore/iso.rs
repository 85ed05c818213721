//! Brute-force isomorphism search by backtracking over a generating sequence.

use super::FiniteQuandle;

/// Elements `s_1, s_2, …` such that each `s_k` lies outside the subquandle
/// generated by the earlier ones, together with that closure order.
fn generating_sequence(q: &FiniteQuandle) -> Vec<u32> {
    let n = q.order();
    let mut inside = vec![false; n];
    let mut members: Vec<u32> = Vec::new();
    let mut gens = Vec::new();
    for s in 0..n as u32 {
        if inside[s as usize] {
            continue;
        }
        gens.push(s);
        inside[s as usize] = true;
        members.push(s);
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = members.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let c = q.op(a, b);
                    if !inside[c as usize] {
                        inside[c as usize] = true;
                        members.push(c);
                        changed = true;
                    }
                }
            }
        }
    }
    gens
}

/// Sorted cycle type of the right translation by `b`; preserved by isomorphisms.
fn column_signature(q: &FiniteQuandle, b: u32) -> Vec<usize> {
    let p = q.column_perm(b);
    let n = q.order();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for s in 0..n {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p.image(x as u32) as usize;
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable();
    lens
}

/// An isomorphism `f` with `f(a ◁ b) = f(a) ◁ f(b)`, if one exists.
pub fn find_isomorphism(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<Vec<u32>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let sig_a: Vec<Vec<usize>> = (0..n as u32).map(|x| column_signature(a, x)).collect();
    let sig_b: Vec<Vec<usize>> = (0..n as u32).map(|x| column_signature(b, x)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let gens = generating_sequence(a);
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    search(a, b, &gens, 0, &sig_a, &sig_b, &mut map, &mut used).then_some(map)
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &FiniteQuandle,
    b: &FiniteQuandle,
    gens: &[u32],
    k: usize,
    sig_a: &[Vec<usize>],
    sig_b: &[Vec<usize>],
    map: &mut Vec<u32>,
    used: &mut Vec<bool>,
) -> bool {
    if k == gens.len() {
        return map.iter().all(|&v| v != u32::MAX);
    }
    let s = gens[k];
    for cand in 0..b.order() as u32 {
        if used[cand as usize] || sig_a[s as usize] != sig_b[cand as usize] {
            continue;
        }
        let saved_map = map.clone();
        let saved_used = used.clone();
        map[s as usize] = cand;
        used[cand as usize] = true;
        if propagate(a, b, map, used) && search(a, b, gens, k + 1, sig_a, sig_b, map, used) {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Extends `map` to the subquandle generated by its domain; false on conflict.
fn propagate(a: &FiniteQuandle, b: &FiniteQuandle, map: &mut [u32], used: &mut [bool]) -> bool {
    loop {
        let domain: Vec<u32> = (0..a.order() as u32)
            .filter(|&x| map[x as usize] != u32::MAX)
            .collect();
        let mut changed = false;
        for &x in &domain {
            for &y in &domain {
                let xy = a.op(x, y) as usize;
                let img = b.op(map[x as usize], map[y as usize]);
                if map[xy] == u32::MAX {
                    if used[img as usize] {
                        return false;
                    }
                    map[xy] = img;
                    used[img as usize] = true;
                    changed = true;
                } else if map[xy] != img {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: u32) -> FiniteQuandle {
        FiniteQuandle::from_fn(n as usize, |x, y| (2 * y + n - x) % n).unwrap()
    }

    #[test]
    fn relabelled_quandles_are_isomorphic() {
        let q = dihedral(5);
        let perm = [3, 0, 4, 1, 2];
        let r = q.relabel(&perm);
        let f = find_isomorphism(&q, &r).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(f[q.op(x, y) as usize], r.op(f[x as usize], f[y as usize]));
            }
        }
    }

    #[test]
    fn non_isomorphic_quandles_are_separated() {
        let trivial = FiniteQuandle::from_fn(3, |x, _| x).unwrap();
        assert!(find_isomorphism(&dihedral(3), &trivial).is_none());
        assert!(find_isomorphism(&dihedral(3), &dihedral(5)).is_none());
        // same column cycle types: the dihedral quandle of order 4 and a disjoint union
        let r4 = dihedral(4);
        assert!(find_isomorphism(&r4, &r4).is_some());
    }
}
