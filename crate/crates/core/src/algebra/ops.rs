//! Constructions on finite algebras: isomorphism, enumeration, expansions,
//! products, subalgebras, congruences and quotients.

use std::collections::BTreeSet;

use crate::algebra::{lattice_from_order, library, Elem, FiniteAlgebra};
use crate::equations::{self, catalog};
use crate::error::{Error, Result};

/// A bijection `a -> b` preserving all operations and constants, if any.
pub fn isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    embedding(a, b)
}

/// An injective homomorphism `a -> b`, if any. Found by backtracking with
/// `0` and `1` fixed.
pub fn embedding(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    let n = a.order();
    if n > b.order() || a.has_neg() != b.has_neg() {
        return None;
    }
    let mut map: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; b.order()];
    map[a.bottom as usize] = Some(b.bottom);
    used[b.bottom as usize] = true;
    if a.top != a.bottom {
        if used[b.top as usize] {
            return None;
        }
        map[a.top as usize] = Some(b.top);
        used[b.top as usize] = true;
    } else if b.top != b.bottom {
        return None;
    }
    if !consistent(a, b, &map) {
        return None;
    }
    let free: Vec<usize> = (0..n).filter(|&x| map[x].is_none()).collect();
    if search_iso(a, b, &free, 0, &mut map, &mut used) {
        Some(map.into_iter().map(|m| m.expect("total map")).collect())
    } else {
        None
    }
}

fn search_iso(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    free: &[usize],
    k: usize,
    map: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
) -> bool {
    if k == free.len() {
        return true;
    }
    let x = free[k];
    for y in 0..b.order() {
        if used[y] {
            continue;
        }
        map[x] = Some(y as Elem);
        used[y] = true;
        if consistent(a, b, map) && search_iso(a, b, free, k + 1, map, used) {
            return true;
        }
        map[x] = None;
        used[y] = false;
    }
    false
}

/// Checks every operation on the already-mapped elements.
fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Option<Elem>]) -> bool {
    let n = a.order();
    for x in 0..n {
        let Some(fx) = map[x] else { continue };
        if a.has_neg() {
            if let Some(fy) = map[a.n(x as Elem) as usize] {
                if fy != b.n(fx) {
                    return false;
                }
            }
        }
        for y in 0..n {
            let Some(fy) = map[y] else { continue };
            let (ex, ey) = (x as Elem, y as Elem);
            for (va, vb) in [
                (a.m(ex, ey), b.m(fx, fy)),
                (a.j(ex, ey), b.j(fx, fy)),
                (a.i(ex, ey), b.i(fx, fy)),
            ] {
                if let Some(img) = map[va as usize] {
                    if img != vb {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Largest order accepted.
    pub cap: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { cap: 4 }
    }
}

/// Every semi-Heyting algebra of order `n` up to isomorphism, in canonical
/// form (bottom first, top last). Algebras isomorphic to a library algebra
/// carry its name; the rest are named `SH<n>_<k>`.
pub fn enumerate_sh(n: usize, opts: EnumerateOptions) -> Result<Vec<FiniteAlgebra>> {
    if n > opts.cap {
        return Err(Error::CapExceeded {
            order: n,
            cap: opts.cap,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        let t = FiniteAlgebra::new("T", vec!["0".into()], 0, 0, vec![0], vec![0], vec![0], None)?;
        return Ok(vec![t]);
    }
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut found: Vec<(Vec<Elem>, FiniteAlgebra)> = Vec::new();
    for leq in distributive_orders(n) {
        let labels = element_labels(n);
        let (meet, _) = lattice_from_order(n, &|x, y| leq[x * n + y]).expect("lattice order");
        for imp in sh_implications(n, &meet) {
            let base = FiniteAlgebra::from_order("", labels.clone(), |x, y| leq[x * n + y], imp, None)?;
            let (key, canon) = canonical(&base);
            if seen.insert(key.clone()) {
                found.push((key, canon));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    let named: Vec<FiniteAlgebra> = library::fixed_names()
        .iter()
        .map(|nm| library::get(nm).expect("library algebra"))
        .filter(|a| !a.has_neg() && a.order() == n)
        .collect();
    let mut k = 0;
    Ok(found
        .into_iter()
        .map(|(_, a)| match named.iter().find(|l| isomorphic(&a, l).is_some()) {
            Some(l) => a.with_name(l.name.clone()),
            None => {
                k += 1;
                a.with_name(format!("SH{n}_{k}"))
            }
        })
        .collect())
}

/// `0 a b ... 1`.
fn element_labels(n: usize) -> Vec<String> {
    let mut ls = vec!["0".to_string()];
    ls.extend((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()));
    ls.push("1".into());
    ls
}

/// Partial orders on `0..n` with bottom `0` and top `n - 1` that are
/// distributive lattices, as `n × n` boolean matrices.
fn distributive_orders(n: usize) -> Vec<Vec<bool>> {
    let mid: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = mid
        .iter()
        .flat_map(|&x| mid.iter().filter(move |&&y| y != x).map(move |&y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
            leq[x * n + n - 1] = true;
        }
        for (b, &(x, y)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        let antisym = (0..n).all(|x| (0..n).all(|y| x == y || !(leq[x * n + y] && leq[y * n + x])));
        let trans =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x * n + y] && leq[y * n + z]) || leq[x * n + z])));
        if !antisym || !trans {
            continue;
        }
        let Some((m, j)) = lattice_from_order(n, &|x, y| leq[x * n + y]) else {
            continue;
        };
        let distributive = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| m[x * n + j[y * n + z] as usize] == j[m[x * n + y] as usize * n + m[x * n + z] as usize])
            })
        });
        if distributive {
            out.push(leq);
        }
    }
    out
}

/// All implication tables over the lattice with meet table `meet`
/// satisfying SH2–SH4 (bottom `0`, top `n - 1`).
fn sh_implications(n: usize, meet: &[Elem]) -> Vec<Vec<Elem>> {
    let top = (n - 1) as Elem;
    let m = |x: usize, y: usize| meet[x * n + y] as usize;
    // SH2 and SH4 fix the candidate set of each entry independently.
    let cands: Vec<Vec<Elem>> = (0..n * n)
        .map(|e| {
            let (x, y) = (e / n, e % n);
            if x == y {
                vec![top]
            } else {
                (0..n).filter(|&z| m(x, z) == m(x, y)).map(|z| z as Elem).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0 as Elem; n * n];
    let mut pick = vec![0usize; n * n];
    loop {
        for e in 0..n * n {
            cur[e] = cands[e][pick[e]];
        }
        let i = |x: usize, y: usize| cur[x * n + y] as usize;
        let sh3 = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(x, i(y, z)) == m(x, i(m(x, y), m(x, z))))));
        if sh3 {
            out.push(cur.clone());
        }
        let mut e = n * n;
        loop {
            if e == 0 {
                return out;
            }
            e -= 1;
            pick[e] += 1;
            if pick[e] < cands[e].len() {
                break;
            }
            pick[e] = 0;
        }
    }
}

/// Lexicographically least (meet, join, imp) tuple over relabelings that put
/// the bottom first and the top last, with the relabeled algebra.
fn canonical(a: &FiniteAlgebra) -> (Vec<Elem>, FiniteAlgebra) {
    let n = a.order();
    let mid: Vec<Elem> = a.elements().filter(|&x| x != a.bottom && x != a.top).collect();
    let mut best: Option<Vec<Elem>> = None;
    for perm in permutations(&mid) {
        // order[new] = old
        let mut order = vec![a.bottom];
        order.extend(&perm);
        if n > 1 {
            order.push(a.top);
        }
        let mut inv = vec![0 as Elem; n];
        for (new, &old) in order.iter().enumerate() {
            inv[old as usize] = new as Elem;
        }
        let mut key = Vec::with_capacity(3 * n * n + n);
        for t in [&a.meet, &a.join, &a.imp] {
            for &x in &order {
                for &y in &order {
                    key.push(inv[t[x as usize * n + y as usize] as usize]);
                }
            }
        }
        if let Some(neg) = &a.neg {
            key.extend(order.iter().map(|&x| inv[neg[x as usize] as usize]));
        }
        if best.as_ref().is_none_or(|k| key < *k) {
            best = Some(key);
        }
    }
    let key = best.expect("at least one relabeling");
    let nn = n * n;
    let canon = FiniteAlgebra::new(
        a.name.clone(),
        a.labels.clone(),
        0,
        (n - 1) as Elem,
        key[..nn].to_vec(),
        key[nn..2 * nn].to_vec(),
        key[2 * nn..3 * nn].to_vec(),
        a.neg.as_ref().map(|_| key[3 * nn..].to_vec()),
    )
    .expect("relabeling preserves validity");
    (key, canon)
}

fn permutations(xs: &[Elem]) -> Vec<Vec<Elem>> {
    if xs.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn middle_of_chain3(a: &FiniteAlgebra) -> Result<Elem> {
    if a.order() != 3 || !a.is_chain() || !crate::algebra::is_semiheyting(a).passed {
        return Err(Error::WrongShape(format!(
            "{} is not a three-element semi-Heyting chain",
            a.name
        )));
    }
    Ok(a.elements()
        .find(|&x| x != a.bottom && x != a.top)
        .expect("three elements"))
}

fn expand3(a: &FiniteAlgebra, suffix: &str, dm: bool) -> Result<FiniteAlgebra> {
    let mid = middle_of_chain3(a)?;
    let mut neg = vec![0; 3];
    neg[a.bottom as usize] = a.top;
    neg[a.top as usize] = a.bottom;
    neg[mid as usize] = if dm { mid } else { a.top };
    a.reduct().with_neg(format!("{}{suffix}", a.name), neg)
}

/// The three-element chain with `a' = a`.
pub fn expand_dm(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    expand3(a, "dm", true)
}

/// The three-element chain with `a' = 1`.
pub fn expand_dp(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    expand3(a, "dp", false)
}

/// An element with no least `y` such that `x ∨ y = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpcAbsent {
    pub element: String,
}

/// Expansion by the dual pseudocomplement, named `<name>dp`.
pub fn dual_pseudocomplement_expand(a: &FiniteAlgebra) -> std::result::Result<FiniteAlgebra, DpcAbsent> {
    let mut neg = Vec::with_capacity(a.order());
    for x in a.elements() {
        let ups: Vec<Elem> = a.elements().filter(|&y| a.j(x, y) == a.top).collect();
        match ups.iter().find(|&&y| ups.iter().all(|&z| a.leq(y, z))) {
            Some(&y) => neg.push(y),
            None => {
                return Err(DpcAbsent {
                    element: a.label(x).to_string(),
                })
            }
        }
    }
    Ok(a.reduct()
        .with_neg(format!("{}dp", a.name), neg)
        .expect("negation values in range"))
}

/// Expansion by `x' := x*` of a Stone semi-Heyting algebra, named
/// `<name>e`.
pub fn essentially_stone_expand(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let plain = a.reduct();
    let stone = catalog::lookup("stone")?;
    if let Some(cx) = equations::holds(&plain, &stone)?.counterexample {
        return Err(Error::StoneFails {
            algebra: a.name.clone(),
            witness: cx.describe(&plain),
        });
    }
    let neg = plain.elements().map(|x| plain.star(x)).collect();
    plain.with_neg(format!("{}e", a.name), neg)
}

/// Direct product; elements are pairs, row-major in `(a, b)`. The product
/// has a negation only when both factors do.
pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> FiniteAlgebra {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let pair = |x: Elem, y: Elem| (x as usize * nb + y as usize) as Elem;
    let split = |p: usize| ((p / nb) as Elem, (p % nb) as Elem);
    let labels = (0..n)
        .map(|p| {
            let (x, y) = split(p);
            format!("({},{})", a.label(x), b.label(y))
        })
        .collect();
    let table = |f: &dyn Fn(Elem, Elem, Elem, Elem) -> Elem| -> Vec<Elem> {
        let mut t = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let ((x1, y1), (x2, y2)) = (split(p), split(q));
                t.push(f(x1, y1, x2, y2));
            }
        }
        t
    };
    let meet = table(&|x1, y1, x2, y2| pair(a.m(x1, x2), b.m(y1, y2)));
    let join = table(&|x1, y1, x2, y2| pair(a.j(x1, x2), b.j(y1, y2)));
    let imp = table(&|x1, y1, x2, y2| pair(a.i(x1, x2), b.i(y1, y2)));
    let neg = (a.has_neg() && b.has_neg()).then(|| {
        (0..n)
            .map(|p| {
                let (x, y) = split(p);
                pair(a.n(x), b.n(y))
            })
            .collect()
    });
    FiniteAlgebra::new(
        format!("{}x{}", a.name, b.name),
        labels,
        pair(a.bottom, b.bottom),
        pair(a.top, b.top),
        meet,
        join,
        imp,
        neg,
    )
    .expect("product of valid algebras is valid")
}

/// A subalgebra together with its inclusion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub algebra: FiniteAlgebra,
    /// `embedding[i]` is the element of the ambient algebra at index `i`.
    pub embedding: Vec<Elem>,
}

/// Closure of `gens ∪ {0, 1}` under all operations; elements keep the
/// ambient order and labels.
pub fn subalgebra_generated(a: &FiniteAlgebra, gens: &[Elem]) -> Subalgebra {
    let n = a.order();
    let mut inside = vec![false; n];
    let mut work: Vec<Elem> = Vec::new();
    for &g in gens.iter().chain([a.bottom, a.top].iter()) {
        if !inside[g as usize] {
            inside[g as usize] = true;
            work.push(g);
        }
    }
    let mut members = work.clone();
    while let Some(x) = work.pop() {
        let mut new = Vec::new();
        if a.has_neg() {
            new.push(a.n(x));
        }
        for &y in &members {
            new.extend([a.m(x, y), a.j(x, y), a.i(x, y), a.i(y, x)]);
        }
        for z in new {
            if !inside[z as usize] {
                inside[z as usize] = true;
                members.push(z);
                work.push(z);
            }
        }
    }
    let embedding: Vec<Elem> = a.elements().filter(|&x| inside[x as usize]).collect();
    let mut pos = vec![0 as Elem; n];
    for (i, &x) in embedding.iter().enumerate() {
        pos[x as usize] = i as Elem;
    }
    let k = embedding.len();
    let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Elem> {
        let mut t = Vec::with_capacity(k * k);
        for &x in &embedding {
            for &y in &embedding {
                t.push(pos[f(x, y) as usize]);
            }
        }
        t
    };
    let labels: Vec<String> = embedding.iter().map(|&x| a.label(x).to_string()).collect();
    let algebra = FiniteAlgebra::new(
        format!("Sg({};{})", a.name, labels.join(",")),
        labels,
        pos[a.bottom as usize],
        pos[a.top as usize],
        table(&|x, y| a.m(x, y)),
        table(&|x, y| a.j(x, y)),
        table(&|x, y| a.i(x, y)),
        a.neg
            .as_ref()
            .map(|_| embedding.iter().map(|&x| pos[a.n(x) as usize]).collect()),
    )
    .expect("subalgebra of a valid algebra is valid");
    Subalgebra { algebra, embedding }
}

/// A partition of the carrier: `p[x]` is the least element of `x`'s block.
pub type Partition = Vec<Elem>;

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    let mut c = x;
    while uf[c] != r {
        let next = uf[c];
        uf[c] = r;
        c = next;
    }
    r
}

fn union(uf: &mut [usize], x: usize, y: usize) -> bool {
    let (rx, ry) = (find(uf, x), find(uf, y));
    if rx == ry {
        return false;
    }
    let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
    uf[hi] = lo;
    true
}

/// Smallest congruence containing the blocks of `uf`.
fn close_congruence(a: &FiniteAlgebra, uf: &mut [usize]) {
    let n = a.order();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in x + 1..n {
                if find(uf, x) != find(uf, y) {
                    continue;
                }
                let (ex, ey) = (x as Elem, y as Elem);
                if a.has_neg() {
                    changed |= union(uf, a.n(ex) as usize, a.n(ey) as usize);
                }
                for z in a.elements() {
                    changed |= union(uf, a.m(ex, z) as usize, a.m(ey, z) as usize);
                    changed |= union(uf, a.j(ex, z) as usize, a.j(ey, z) as usize);
                    changed |= union(uf, a.i(ex, z) as usize, a.i(ey, z) as usize);
                    changed |= union(uf, a.i(z, ex) as usize, a.i(z, ey) as usize);
                }
            }
        }
        if !changed {
            return;
        }
    }
}

fn to_partition(uf: &mut [usize]) -> Partition {
    (0..uf.len()).map(|x| find(uf, x) as Elem).collect()
}

/// Every congruence, as joins of principal congruences, sorted.
pub fn congruences(a: &FiniteAlgebra) -> Vec<Partition> {
    let n = a.order();
    let identity: Partition = (0..n as Elem).collect();
    let mut principal = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut uf: Vec<usize> = (0..n).collect();
            union(&mut uf, x, y);
            close_congruence(a, &mut uf);
            principal.insert(to_partition(&mut uf));
        }
    }
    let mut all: BTreeSet<Partition> = principal.clone();
    all.insert(identity);
    loop {
        let mut new = Vec::new();
        for p in &all {
            for q in &principal {
                let mut uf: Vec<usize> = p.iter().map(|&e| e as usize).collect();
                for (x, &r) in q.iter().enumerate() {
                    union(&mut uf, x, r as usize);
                }
                close_congruence(a, &mut uf);
                let j = to_partition(&mut uf);
                if !all.contains(&j) {
                    new.push(j);
                }
            }
        }
        if new.is_empty() {
            break;
        }
        all.extend(new);
    }
    all.into_iter().collect()
}

/// Quotient by the equivalence `x ~ y iff theta[x] == theta[y]`. Blocks are
/// ordered by their least element, which also supplies the label.
pub fn quotient(a: &FiniteAlgebra, theta: &[Elem]) -> Result<FiniteAlgebra> {
    let n = a.order();
    if theta.len() != n {
        return Err(Error::NotCongruence(format!(
            "partition has {} entries, algebra has {n} elements",
            theta.len()
        )));
    }
    let mut reps: Vec<Elem> = Vec::new();
    let mut block = vec![0 as Elem; n];
    for x in 0..n {
        match (0..x).find(|&y| theta[y] == theta[x]) {
            Some(y) => block[x] = block[y],
            None => {
                block[x] = reps.len() as Elem;
                reps.push(x as Elem);
            }
        }
    }
    let same = |x: Elem, y: Elem| block[x as usize] == block[y as usize];
    for x in a.elements() {
        for y in a.elements().filter(|&y| y > x && same(x, y)) {
            if a.has_neg() && !same(a.n(x), a.n(y)) {
                return Err(Error::NotCongruence(format!(
                    "{} ~ {} but their negations differ",
                    a.label(x),
                    a.label(y)
                )));
            }
            for z in a.elements() {
                let ok = same(a.m(x, z), a.m(y, z))
                    && same(a.j(x, z), a.j(y, z))
                    && same(a.i(x, z), a.i(y, z))
                    && same(a.i(z, x), a.i(z, y));
                if !ok {
                    return Err(Error::NotCongruence(format!(
                        "{} ~ {} is not preserved with {}",
                        a.label(x),
                        a.label(y),
                        a.label(z)
                    )));
                }
            }
        }
    }
    let k = reps.len();
    let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Elem> {
        let mut t = Vec::with_capacity(k * k);
        for &x in &reps {
            for &y in &reps {
                t.push(block[f(x, y) as usize]);
            }
        }
        t
    };
    FiniteAlgebra::new(
        format!("{}/theta", a.name),
        reps.iter().map(|&x| a.label(x).to_string()).collect(),
        block[a.bottom as usize],
        block[a.top as usize],
        table(&|x, y| a.m(x, y)),
        table(&|x, y| a.j(x, y)),
        table(&|x, y| a.i(x, y)),
        a.neg
            .as_ref()
            .map(|_| reps.iter().map(|&x| block[a.n(x) as usize]).collect()),
    )
}
