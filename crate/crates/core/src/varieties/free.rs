//! Free algebras of finitely generated varieties and finite membership.
//!
//! The free algebra on `m` generators over `K` is the subalgebra of the
//! product of all `A^(A^m)`, `A ∈ K`, generated by the projections. A
//! coordinate is a pair (generator algebra, point of `A^m`). Coordinates
//! whose generated subalgebras have the same closure trace induce the same
//! kernel, so only the first of them is kept.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{embedding, subalgebra_generated, Elem, FiniteAlgebra};
use crate::equations::Identity;
use crate::error::{Error, Result};
use crate::formula::{imp, join, meet, neg, var, Formula};
use crate::varieties::Caps;

/// Free algebras up to this order are also materialized as tables.
pub const MATERIALIZE_LIMIT: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coordinate {
    /// Index into the generator list.
    pub algebra: usize,
    pub point: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct FreeAlgebraResult {
    pub arity: usize,
    pub variables: Vec<String>,
    pub generator_algebras: Vec<String>,
    pub coordinates: Vec<Coordinate>,
    /// One value per coordinate.
    pub elements: Vec<Vec<Elem>>,
    /// Witness term per element.
    pub terms: Vec<Formula>,
    /// Element index of each free generator.
    pub generators: Vec<usize>,
    /// The tables, when the order is at most [`MATERIALIZE_LIMIT`].
    pub algebra: Option<FiniteAlgebra>,
}

impl FreeAlgebraResult {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Variable names for `m` free generators: `x, y, z`, then `x1 .. xm`.
pub fn free_variables(m: usize) -> Vec<String> {
    if m <= 3 {
        ["x", "y", "z"][..m].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=m).map(|i| format!("x{i}")).collect()
    }
}

fn signature(k: &[&FiniteAlgebra]) -> Result<bool> {
    let with_neg = k.first().is_none_or(|a| a.has_neg());
    if k.iter().any(|a| a.has_neg() != with_neg) {
        return Err(Error::WrongShape(
            "generators mix algebras with and without negation".into(),
        ));
    }
    Ok(with_neg)
}

/// Work-list closure over points of a product of coordinate algebras.
struct Closure<'a> {
    algs: Vec<&'a FiniteAlgebra>,
    with_neg: bool,
    points: Vec<Vec<Elem>>,
    terms: Vec<Formula>,
    index: HashMap<Vec<Elem>, usize>,
}

enum Step {
    Continue,
    Stop,
}

impl<'a> Closure<'a> {
    fn new(algs: Vec<&'a FiniteAlgebra>, with_neg: bool) -> Self {
        Closure {
            algs,
            with_neg,
            points: Vec::new(),
            terms: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn apply1(&self, x: &[Elem]) -> Vec<Elem> {
        self.algs.iter().zip(x).map(|(a, &u)| a.n(u)).collect()
    }

    fn apply2(&self, op: u8, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        self.algs
            .iter()
            .zip(x.iter().zip(y))
            .map(|(a, (&u, &v))| match op {
                0 => a.m(u, v),
                1 => a.j(u, v),
                _ => a.i(u, v),
            })
            .collect()
    }

    /// Adds a point if new; `on_new` sees its index and may stop the run.
    fn add(
        &mut self,
        p: Vec<Elem>,
        t: impl FnOnce() -> Formula,
        limit: usize,
        on_new: &mut dyn FnMut(&Self, usize) -> Step,
    ) -> Result<Option<Step>> {
        if self.index.contains_key(&p) {
            return Ok(None);
        }
        if self.points.len() >= limit {
            return Err(Error::ClosureLimit {
                what: "closure size".into(),
                reached: self.points.len() + 1,
                limit,
            });
        }
        let k = self.points.len();
        self.index.insert(p.clone(), k);
        self.points.push(p);
        self.terms.push(t());
        Ok(Some(on_new(self, k)))
    }

    /// Closes the seeds under all operations, breadth first. Returns false
    /// if `on_new` stopped the run.
    fn run(
        &mut self,
        seeds: Vec<(Vec<Elem>, Formula)>,
        limit: usize,
        on_new: &mut dyn FnMut(&Self, usize) -> Step,
    ) -> Result<bool> {
        for (p, t) in seeds {
            if let Some(Step::Stop) = self.add(p, || t, limit, on_new)? {
                return Ok(false);
            }
        }
        let mut k = 0;
        while k < self.points.len() {
            if self.with_neg {
                let p = self.apply1(&self.points[k]);
                let t = self.terms[k].clone();
                if let Some(Step::Stop) = self.add(p, || neg(t), limit, on_new)? {
                    return Ok(false);
                }
            }
            for l in 0..=k {
                for (op, x, y) in [(0u8, k, l), (1, k, l), (2, k, l), (2, l, k)] {
                    let p = self.apply2(op, &self.points[x], &self.points[y]);
                    let (tx, ty) = (self.terms[x].clone(), self.terms[y].clone());
                    let mk = move || match op {
                        0 => meet(tx, ty),
                        1 => join(tx, ty),
                        _ => imp(tx, ty),
                    };
                    if let Some(Step::Stop) = self.add(p, mk, limit, on_new)? {
                        return Ok(false);
                    }
                }
            }
            k += 1;
        }
        Ok(true)
    }
}

fn seeds_for(algs: &[&FiniteAlgebra], gens: &[Vec<Elem>], variables: &[String]) -> Vec<(Vec<Elem>, Formula)> {
    let mut seeds = vec![
        (algs.iter().map(|a| a.bottom).collect(), Formula::Bot),
        (algs.iter().map(|a| a.top).collect(), Formula::Top),
    ];
    for (g, v) in gens.iter().zip(variables) {
        seeds.push((g.clone(), var(v)));
    }
    seeds
}

/// Isomorphism-invariant description of the subalgebra of `a` generated by
/// `point`, with the generators marked.
fn trace(a: &FiniteAlgebra, point: &[Elem]) -> Vec<u32> {
    let mut order: Vec<Elem> = Vec::new();
    let mut pos: HashMap<Elem, u32> = HashMap::new();
    let mut push = |x: Elem, order: &mut Vec<Elem>| -> u32 {
        *pos.entry(x).or_insert_with(|| {
            order.push(x);
            (order.len() - 1) as u32
        })
    };
    let mut out = Vec::new();
    for x in [a.bottom, a.top].iter().chain(point) {
        out.push(push(*x, &mut order));
    }
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        if a.has_neg() {
            out.push(push(a.n(x), &mut order));
        }
        for l in 0..=k {
            let y = order[l];
            for v in [a.m(x, y), a.j(x, y), a.i(x, y), a.i(y, x)] {
                out.push(push(v, &mut order));
            }
        }
        k += 1;
    }
    out
}

/// Deduplicated coordinates for arity `m`.
fn coordinates(k: &[&FiniteAlgebra], m: usize, caps: &Caps) -> Result<Vec<Coordinate>> {
    let raw: usize = k
        .iter()
        .map(|a| a.order().saturating_pow(m as u32))
        .fold(0usize, |s, x| s.saturating_add(x));
    if raw > caps.closure {
        return Err(Error::ClosureLimit {
            what: "raw free-algebra coordinates".into(),
            reached: raw,
            limit: caps.closure,
        });
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (ai, a) in k.iter().enumerate() {
        crate::algebra::for_each_assignment(a.order(), m, |pt| {
            if seen.insert(trace(a, pt)) {
                out.push(Coordinate {
                    algebra: ai,
                    point: pt.to_vec(),
                });
            }
            true
        });
    }
    if out.len() > caps.coordinates {
        return Err(Error::ClosureLimit {
            what: "free-algebra coordinates".into(),
            reached: out.len(),
            limit: caps.coordinates,
        });
    }
    Ok(out)
}

/// Free algebra on `m` generators in `V(K)`.
pub fn free_algebra(k: &[FiniteAlgebra], m: usize, caps: &Caps) -> Result<FreeAlgebraResult> {
    let kr: Vec<&FiniteAlgebra> = k.iter().collect();
    let with_neg = signature(&kr)?;
    let coords = coordinates(&kr, m, caps)?;
    let algs: Vec<&FiniteAlgebra> = coords.iter().map(|c| kr[c.algebra]).collect();
    let variables = free_variables(m);
    let gens: Vec<Vec<Elem>> = (0..m).map(|g| coords.iter().map(|c| c.point[g]).collect()).collect();
    let mut cl = Closure::new(algs, with_neg);
    cl.run(
        seeds_for(&cl.algs.clone(), &gens, &variables),
        caps.closure,
        &mut |_, _| Step::Continue,
    )?;
    let generators = gens.iter().map(|g| cl.index[g]).collect();
    let algebra = (cl.points.len() <= MATERIALIZE_LIMIT).then(|| materialize(&cl, k, m));
    Ok(FreeAlgebraResult {
        arity: m,
        variables,
        generator_algebras: k.iter().map(|a| a.name.clone()).collect(),
        coordinates: coords,
        elements: cl.points,
        terms: cl.terms,
        generators,
        algebra,
    })
}

fn materialize(cl: &Closure, k: &[FiniteAlgebra], m: usize) -> FiniteAlgebra {
    let n = cl.points.len();
    let bottom = cl.index[&cl.algs.iter().map(|a| a.bottom).collect::<Vec<_>>()];
    let top = cl.index[&cl.algs.iter().map(|a| a.top).collect::<Vec<_>>()];
    let labels = (0..n)
        .map(|i| match i {
            _ if i == bottom => "0".to_string(),
            _ if i == top => "1".to_string(),
            _ => format!("f{i}"),
        })
        .collect();
    let table = |op: u8| -> Vec<Elem> {
        let mut t = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                t.push(cl.index[&cl.apply2(op, &cl.points[x], &cl.points[y])] as Elem);
            }
        }
        t
    };
    let neg = cl
        .with_neg
        .then(|| (0..n).map(|x| cl.index[&cl.apply1(&cl.points[x])] as Elem).collect());
    let names: Vec<&str> = k.iter().map(|a| a.name.as_str()).collect();
    FiniteAlgebra::new(
        format!("F({};{m})", names.join(",")),
        labels,
        bottom as Elem,
        top as Elem,
        table(0),
        table(1),
        table(2),
        neg,
    )
    .expect("free algebra is a lattice")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `map[x]` is the image of `x` in the named generator.
    Embedding { generator: String, map: Vec<String> },
    /// The free algebra on `generators.len()` generators maps onto the
    /// algebra, sending the free generators to `generators`.
    Homomorphism { generators: Vec<String>, free_order: usize },
    /// An identity valid in every generator that fails in the algebra.
    Separating {
        identity: String,
        valuation: String,
        #[serde(skip)]
        pair: (Formula, Formula),
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub algebra: String,
    pub generators: Vec<String>,
    pub member: bool,
    pub certificate: Certificate,
}

/// Smallest tuple (in lexicographic order among tuples of the least size)
/// generating `a`.
pub fn minimal_generating_tuple(a: &FiniteAlgebra) -> Vec<Elem> {
    let inner: Vec<Elem> = a.elements().filter(|&x| x != a.bottom && x != a.top).collect();
    for s in 0..=inner.len() {
        let mut found = None;
        combinations(inner.len(), s, &mut |idx| {
            let tuple: Vec<Elem> = idx.iter().map(|&i| inner[i]).collect();
            if subalgebra_generated(a, &tuple).embedding.len() == a.order() {
                found = Some(tuple);
                false
            } else {
                true
            }
        });
        if let Some(t) = found {
            return t;
        }
    }
    inner
}

fn combinations(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        if !visit(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Decides `a ∈ V(K)`.
///
/// An embedding into a generator settles membership directly. Otherwise
/// `a` is generated by a tuple `g`, and `a ∈ V(K)` iff sending the free
/// generators to `g` is well defined, which is checked by closing the pairs
/// (free element, value in `a`).
pub fn member_of_variety(a: &FiniteAlgebra, k: &[FiniteAlgebra], caps: &Caps) -> Result<Membership> {
    let kr: Vec<&FiniteAlgebra> = k.iter().collect();
    if !k.is_empty() && signature(&kr)? != a.has_neg() {
        return Err(Error::WrongShape(format!(
            "{} and the generators differ in signature",
            a.name
        )));
    }
    let generators: Vec<String> = k.iter().map(|b| b.name.clone()).collect();
    for b in k {
        if let Some(map) = embedding(a, b) {
            return Ok(Membership {
                algebra: a.name.clone(),
                generators,
                member: true,
                certificate: Certificate::Embedding {
                    generator: b.name.clone(),
                    map: map.iter().map(|&y| b.label(y).to_string()).collect(),
                },
            });
        }
    }
    let g = minimal_generating_tuple(a);
    let m = g.len();
    let coords = coordinates(&kr, m, caps)?;
    let c = coords.len();
    let mut algs: Vec<&FiniteAlgebra> = coords.iter().map(|co| kr[co.algebra]).collect();
    algs.push(a);
    let variables = free_variables(m);
    let gens: Vec<Vec<Elem>> = (0..m)
        .map(|i| {
            let mut p: Vec<Elem> = coords.iter().map(|co| co.point[i]).collect();
            p.push(g[i]);
            p
        })
        .collect();
    let mut seen: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut clash: Option<(usize, usize)> = None;
    let mut cl = Closure::new(algs, a.has_neg());
    let seeds = seeds_for(&cl.algs.clone(), &gens, &variables);
    let complete = cl.run(seeds, caps.closure, &mut |cl, idx| {
        let p = &cl.points[idx];
        let free = p[..c].to_vec();
        match seen.get(&free) {
            Some(&other) if cl.points[other][c] != p[c] => {
                clash = Some((other, idx));
                Step::Stop
            }
            Some(_) => Step::Continue,
            None => {
                seen.insert(free, idx);
                Step::Continue
            }
        }
    })?;
    let valuation = a.show_assignment(&variables, &g);
    let certificate = match clash {
        Some((i, j)) => {
            let (s, t) = (cl.terms[i].clone(), cl.terms[j].clone());
            Certificate::Separating {
                identity: Identity::new(s.clone(), t.clone()).render(),
                valuation: if valuation.is_empty() {
                    "no variables".into()
                } else {
                    valuation
                },
                pair: (s, t),
            }
        }
        None => {
            debug_assert!(complete);
            Certificate::Homomorphism {
                generators: g.iter().map(|&x| a.label(x).to_string()).collect(),
                free_order: seen.len(),
            }
        }
    };
    Ok(Membership {
        algebra: a.name.clone(),
        generators,
        member: clash.is_none(),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::library;
    use crate::equations::satisfies;

    fn lib(n: &str) -> FiniteAlgebra {
        library::get(n).unwrap()
    }

    #[test]
    fn free_over_2e() {
        let caps = Caps::default();
        assert_eq!(free_algebra(&[lib("2e")], 1, &caps).unwrap().order(), 4);
        assert_eq!(free_algebra(&[lib("2e")], 0, &caps).unwrap().order(), 2);
        let f = free_algebra(&[lib("2e")], 2, &caps).unwrap();
        assert_eq!(f.order(), 16);
        assert!(f.algebra.is_some());
    }

    #[test]
    fn memberships() {
        let caps = Caps::default();
        let m = member_of_variety(&lib("2e"), &[lib("L1dm")], &caps).unwrap();
        assert!(m.member);
        assert!(matches!(m.certificate, Certificate::Embedding { .. }));
        let m = member_of_variety(&lib("L1dm"), &[lib("2e")], &caps).unwrap();
        assert!(!m.member);
        let Certificate::Separating { pair, .. } = &m.certificate else {
            panic!()
        };
        let id = Identity::new(pair.0.clone(), pair.1.clone());
        assert!(satisfies(&lib("2e"), &id).unwrap());
        assert!(!satisfies(&lib("L1dm"), &id).unwrap());
        let d = [lib("D1"), lib("D2"), lib("D3")];
        assert!(member_of_variety(&lib("D2"), &d, &caps).unwrap().member);
    }

    #[test]
    fn membership_through_free_algebra() {
        let caps = Caps::default();
        // 2e x 2e is not a subalgebra of 2e but lies in V(2e).
        let p = crate::algebra::product(&lib("2e"), &lib("2e"));
        let m = member_of_variety(&p, &[lib("2e")], &caps).unwrap();
        assert!(m.member);
        assert!(matches!(m.certificate, Certificate::Homomorphism { .. }));
        // trivial variety
        assert!(!member_of_variety(&lib("2e"), &[], &caps).unwrap().member);
    }
}
