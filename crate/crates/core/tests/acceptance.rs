//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use shlab::algebra::{check_class, enumerate_sh, isomorphic, library, Elem, EnumerateOptions, FiniteAlgebra};
use shlab::equations::bases::{corpus, entry};
use shlab::equations::{
    all_failures, catalog, chain_identity, chain_identity_unchecked, holds, ChainIdentityKind, Identity,
};
use shlab::formula::parse;
use shlab::matrices::{consequence, is_tautology, MatrixFamily};
use shlab::proofs::fixtures::{expected_rejection, DEDUCTION_CORPUS, MUTATIONS, SCRIPTS};
use shlab::proofs::{check_proof, deduction_closure_check, parse_script, search_proof, ProofScript};
use shlab::varieties::{free_algebra, lukasiewicz_term_equivalence_check, member_of_variety, Caps, Certificate};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn get(name: &str) -> FiniteAlgebra {
    library::get(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn id(name: &str) -> Identity {
    catalog::lookup(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn witness(a: &FiniteAlgebra, ident: &Identity) -> Option<String> {
    holds(a, ident).unwrap().counterexample.map(|cx| cx.describe(a))
}

fn c1_library() -> Outcome {
    let mut checked = 0;
    let mut run = |names: Vec<String>, class: &str| -> Result<(), String> {
        for n in names {
            let r = check_class(&get(&n), class).map_err(|e| e.to_string())?;
            ensure(r.passed, || format!("{n} not in {class}: {:?}", r.failure))?;
            checked += 1;
        }
        Ok(())
    };
    run((1..=10).map(|i| format!("L{i}")).collect(), "SH")?;
    run(library::dm_names(), "DMSH")?;
    run(library::dp_names(), "DPCSH")?;
    let dh: Vec<String> = ["2e", "2bare", "D1", "D2", "D3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    run(dh, "DHMSH")?;
    run(vec!["D1".into(), "D2".into(), "D3".into()], "DQDBSH")?;
    Ok(format!("{checked} class checks"))
}

/// Implication tables of the three-element chains, rows and columns `0 a 1`.
const CHAIN3_IMP: [[[&str; 3]; 3]; 10] = [
    [["1", "1", "1"], ["0", "1", "1"], ["0", "a", "1"]],
    [["1", "a", "1"], ["0", "1", "1"], ["0", "a", "1"]],
    [["1", "1", "1"], ["0", "1", "a"], ["0", "a", "1"]],
    [["1", "a", "1"], ["0", "1", "a"], ["0", "a", "1"]],
    [["1", "a", "a"], ["0", "1", "1"], ["0", "a", "1"]],
    [["1", "1", "a"], ["0", "1", "1"], ["0", "a", "1"]],
    [["1", "a", "a"], ["0", "1", "a"], ["0", "a", "1"]],
    [["1", "1", "a"], ["0", "1", "a"], ["0", "a", "1"]],
    [["1", "0", "0"], ["0", "1", "1"], ["0", "a", "1"]],
    [["1", "0", "0"], ["0", "1", "a"], ["0", "a", "1"]],
];

fn chain3(i: usize) -> FiniteAlgebra {
    let labels: Vec<String> = ["0", "a", "1"].iter().map(|s| s.to_string()).collect();
    let ix = |l: &str| labels.iter().position(|x| x == l).unwrap() as Elem;
    let imp = CHAIN3_IMP[i].iter().flatten().map(|l| ix(l)).collect();
    FiniteAlgebra::from_order(format!("table-L{}", i + 1), labels.clone(), |x, y| x <= y, imp, None).unwrap()
}

fn c2_enumeration() -> Outcome {
    let three = enumerate_sh(3, EnumerateOptions { cap: 4 }).map_err(|e| e.to_string())?;
    ensure(three.len() == 10, || format!("order 3 gave {}", three.len()))?;
    for i in 0..three.len() {
        for j in i + 1..three.len() {
            ensure(isomorphic(&three[i], &three[j]).is_none(), || {
                format!("{} and {} are isomorphic", three[i].name, three[j].name)
            })?;
        }
    }
    let mut matched = BTreeSet::new();
    for a in &three {
        let k = (0..10).find(|&k| isomorphic(a, &chain3(k)).is_some());
        let k = k.ok_or_else(|| format!("{} matches no chain table", a.name))?;
        matched.insert(k);
    }
    ensure(matched.len() == 10, || format!("only {} tables matched", matched.len()))?;
    let two = enumerate_sh(2, EnumerateOptions { cap: 4 }).map_err(|e| e.to_string())?;
    ensure(two.len() == 2, || format!("order 2 gave {}", two.len()))?;
    Ok("order 3: 10, order 2: 2".into())
}

fn c3_deduction() -> Outcome {
    let ded = id("deduction");
    let consequences = [Identity::parse("x & x' = 0").unwrap(), id("star-neg"), id("stone")];
    let mut with = 0;
    for n in library::core_names() {
        let a = get(&n);
        let pointwise = a.elements().all(|x| a.star(x) == a.n(x));
        let valid = witness(&a, &ded).is_none();
        ensure(valid == pointwise, || {
            format!("{n}: identity {valid}, x*=x' {pointwise}")
        })?;
        if valid {
            with += 1;
            for c in &consequences {
                ensure(witness(&a, c).is_none(), || format!("{n} fails {}", c.render()))?;
            }
        }
    }
    let l1 = get("L1dm");
    let w = witness(&l1, &ded).ok_or("L1dm satisfies the deduction identity")?;
    ensure(w.starts_with("x=1, y=a"), || format!("L1dm witness {w}"))?;
    Ok(format!("25 algebras, identity holds in {with}; L1dm fails at {w}"))
}

fn chain3_base(which: &str) -> Outcome {
    let names: Vec<String> = (1..=10).map(|i| format!("L{i}{which}")).collect();
    let algs: Vec<FiniteAlgebra> = names.iter().map(|n| get(n)).collect();
    let mut witnesses = 0;
    for (i, base) in shlab::varieties::registry::CHAIN3_BASES.iter().enumerate() {
        let ids: Vec<Identity> = base.iter().map(|n| id(n)).collect();
        for (j, a) in algs.iter().enumerate() {
            let fail = ids.iter().find_map(|x| witness(a, x).map(|w| (x.label(), w)));
            if i == j {
                ensure(fail.is_none(), || {
                    format!("base {base:?} fails in its own {}: {fail:?}", a.name)
                })?;
            } else {
                ensure(fail.is_some(), || {
                    format!("base {base:?} of {} holds in {}", names[i], a.name)
                })?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("{witnesses} {which} witnesses"))
}

fn c4_bases() -> Outcome {
    let a = chain3_base("dm")?;
    let b = chain3_base("dp")?;
    Ok(format!("{a}, {b}"))
}

fn c5_dqdshc3() -> Outcome {
    let star_reg = id("star-regular");
    let regular = id("regular");
    for n in library::c20_names() {
        let a = get(&n);
        for x in [&star_reg, &regular] {
            ensure(witness(&a, x).is_none(), || format!("{n} fails {}", x.render()))?;
        }
    }
    // independent oracle over D1's elements
    let d1 = get("D1");
    let bad: Vec<&str> = d1
        .elements()
        .filter(|&x| d1.star(d1.star(x)) != d1.n(d1.star(x)))
        .map(|x| d1.label(x))
        .collect();
    ensure(bad.contains(&"a"), || format!("oracle failures in D1: {bad:?}"))?;
    let aa = d1.index_of("a").unwrap();
    ensure(
        d1.label(d1.star(d1.star(aa))) == "a" && d1.label(d1.n(d1.star(aa))) == "b",
        || "a** or a*' differs from the oracle".into(),
    )?;
    let w = witness(&d1, &star_reg).ok_or("x**=x*' holds in D1")?;
    ensure(w.starts_with("x=a"), || format!("D1 witness {w}"))?;
    Ok(format!("holds in C20, D1 fails at {w}"))
}

fn c6_dmatrix() -> Outcome {
    let cases = [("FTF", "D1"), ("FTT", "D2"), ("ftt-neg-fixed", "D3")];
    for (name, only) in cases {
        let ident = id(name);
        let holding: Vec<&str> = ["D1", "D2", "D3"]
            .into_iter()
            .filter(|d| witness(&get(d), &ident).is_none())
            .collect();
        ensure(holding == [only], || format!("{name} holds in {holding:?}"))?;
    }
    Ok("FTF: D1, FTT: D2, (0->1)'=0->1: D3".into())
}

fn c7_lukasiewicz() -> Outcome {
    let r = lukasiewicz_term_equivalence_check();
    let d1 = ["0", "0", "1"];
    let d2 = ["0", "1", "1"];
    let l1 = ["1", "1", "1", "0", "1", "1", "0", "a", "1"];
    ensure(r.d1_from_l1dm == d1 && r.d2_from_l1dm == d2, || {
        format!("derived d1 {:?}, d2 {:?}", r.d1_from_l1dm, r.d2_from_l1dm)
    })?;
    ensure(r.d1_lukasiewicz == d1 && r.d2_lukasiewicz == d2, || {
        "Łukasiewicz-side tables differ".into()
    })?;
    ensure(r.katrinak_imp == l1 && r.l1_imp == l1, || {
        format!("term table {:?}", r.katrinak_imp)
    })?;
    ensure(r.passed && r.mismatches.is_empty(), || format!("{:?}", r.mismatches))?;
    Ok("d1, d2 and 9 implication entries match".into())
}

/// Unary term functions of `a` by closure from `x`, `0`, `1`.
fn unary_term_functions(a: &FiniteAlgebra) -> usize {
    let n = a.order();
    let mut set: BTreeSet<Vec<Elem>> = BTreeSet::new();
    set.insert(a.elements().collect());
    set.insert(vec![a.bottom; n]);
    set.insert(vec![a.top; n]);
    loop {
        let cur: Vec<Vec<Elem>> = set.iter().cloned().collect();
        let before = set.len();
        for f in &cur {
            if a.has_neg() {
                set.insert(f.iter().map(|&v| a.n(v)).collect());
            }
            for g in &cur {
                set.insert(f.iter().zip(g).map(|(&u, &v)| a.m(u, v)).collect());
                set.insert(f.iter().zip(g).map(|(&u, &v)| a.j(u, v)).collect());
                set.insert(f.iter().zip(g).map(|(&u, &v)| a.i(u, v)).collect());
            }
        }
        if set.len() == before {
            return set.len();
        }
    }
}

fn c8_free_membership() -> Outcome {
    let caps = Caps::default();
    let e2 = get("2e");
    let f = free_algebra(std::slice::from_ref(&e2), 1, &caps).map_err(|e| e.to_string())?;
    let oracle = unary_term_functions(&e2);
    ensure(f.order() == 4 && oracle == 4, || {
        format!("free order {}, oracle {oracle}", f.order())
    })?;
    let m = member_of_variety(&e2, &[get("L1dm")], &caps).map_err(|e| e.to_string())?;
    ensure(
        m.member && matches!(m.certificate, Certificate::Embedding { .. }),
        || format!("2e in V(L1dm): {m:?}"),
    )?;
    let m = member_of_variety(&get("L1dm"), &[e2], &caps).map_err(|e| e.to_string())?;
    let sep = match &m.certificate {
        Certificate::Separating { identity, .. } if !m.member => identity.clone(),
        _ => return Err(format!("L1dm in V(2e): {m:?}")),
    };
    let ds = [get("D1"), get("D2"), get("D3")];
    let m = member_of_variety(&get("D2"), &ds, &caps).map_err(|e| e.to_string())?;
    ensure(m.member, || format!("D2 in V(D1,D2,D3): {m:?}"))?;
    Ok(format!("|F| = 4, L1dm separated by {sep}"))
}

fn family_for(s: &ProofScript) -> MatrixFamily {
    if s.logic == "DHMSH" {
        MatrixFamily::library()
    } else {
        MatrixFamily::for_logic(&s.logic).unwrap()
    }
}

/// Every line is a consequence of the premises; with no premises, valid.
fn sound(name: &str, s: &ProofScript) -> Result<usize, String> {
    let fam = family_for(s);
    let prem: Vec<_> = s.premises.iter().map(|p| p.formula.clone()).collect();
    for (k, l) in s.lines.iter().enumerate() {
        let v = if prem.is_empty() {
            is_tautology(&fam, &l.formula)
        } else {
            consequence(&fam, &prem, &l.formula)
        }
        .map_err(|e| e.to_string())?;
        ensure(v.is_valid(), || format!("{name} line {}: {}", k + 1, v.render()))?;
    }
    Ok(s.lines.len())
}

fn c9_proofs() -> Outcome {
    let mut lines = 0;
    for (name, text) in SCRIPTS.iter().chain(DEDUCTION_CORPUS) {
        let s = parse_script(text).map_err(|e| format!("{name}: {e}"))?;
        let v = check_proof(&s);
        ensure(v.accepted, || format!("{name}: {}", v.render()))?;
        lines += sound(name, &s)?;
    }
    for (name, text) in MUTATIONS {
        let want = expected_rejection(text).ok_or_else(|| format!("{name}: no `# reject` header"))?;
        let v = check_proof(&parse_script(text).map_err(|e| format!("{name}: {e}"))?);
        let got = v.first_failure.as_ref().map(|f| f.line);
        ensure(got == Some(want), || {
            format!("{name}: expected line {want}, {}", v.render())
        })?;
    }
    // searched DHMSH theorems with no premises
    let mut searched = 0;
    for goal in ["1", "x => x | y", "(x | y)' => x' & y'", "x & y => x"] {
        let s = search_proof("DHMSH", &[], &parse(goal).unwrap(), 4)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no proof of {goal}"))?;
        ensure(check_proof(&s).accepted, || {
            format!("search output for {goal} rejected")
        })?;
        lines += sound(goal, &s)?;
        searched += 1;
    }
    let closure = deduction_closure_check("L(2e)").map_err(|e| e.to_string())?;
    ensure(closure.passed, || format!("deduction transform: {closure:?}"))?;
    Ok(format!(
        "{} scripts, {} mutations, {searched} searched, {lines} lines sound",
        SCRIPTS.len() + DEDUCTION_CORPUS.len(),
        MUTATIONS.len()
    ))
}

fn c10_chains() -> Outcome {
    let mut cells = 0;
    for n in 2..=5 {
        let dmhc = chain_identity(ChainIdentityKind::Dmhc3, n).map_err(|e| e.to_string())?;
        // A_n is only defined from n = 3; n = 2 uses the same formula.
        let an = chain_identity(ChainIdentityKind::An, n).unwrap_or_else(|_| chain_identity_unchecked(n));
        for k in 2..=5 {
            for (alg, ident) in [(format!("DMH{k}"), &dmhc), (format!("Ch{k}dp"), &an)] {
                let a = get(&alg);
                let got = brute_force_join_identity(&a, n);
                ensure(got == (k <= n), || format!("{} in {alg}: oracle {got}", ident.label()))?;
                let lib = witness(&a, ident).is_none();
                ensure(lib == got, || {
                    format!("{} in {alg}: library {lib}, oracle {got}", ident.label())
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells"))
}

/// `x1 ∨ … ∨ xn ∨ (x1→x2) ∨ … ∨ (x(n-1)→xn) = 1` by direct enumeration.
fn brute_force_join_identity(a: &FiniteAlgebra, n: usize) -> bool {
    let k = a.order();
    let mut xs = vec![0usize; n];
    loop {
        let mut acc = a.bottom;
        for &x in &xs {
            acc = a.j(acc, x as Elem);
        }
        for w in xs.windows(2) {
            acc = a.j(acc, a.i(w[0] as Elem, w[1] as Elem));
        }
        if acc != a.top {
            return false;
        }
        let mut p = 0;
        loop {
            if p == n {
                return true;
            }
            xs[p] += 1;
            if xs[p] < k {
                break;
            }
            xs[p] = 0;
            p += 1;
        }
    }
}

fn c11_corpus() -> Outcome {
    let caps = Caps::default();
    let curated: Vec<_> = corpus().iter().filter(|e| e.curated).collect();
    ensure(curated.len() >= 10, || format!("{} curated entries", curated.len()))?;
    for key in ["rdqd/join-definable", "rdqd/medial", "rdm/kleene"] {
        ensure(entry(key).map(|e| e.curated).unwrap_or(false), || {
            format!("{key} is not curated")
        })?;
    }
    for e in &curated {
        let r = e.verify(&caps).map_err(|x| format!("{}: {x}", e.key))?;
        ensure(r.passed, || format!("{} failed: {r:?}", e.key))?;
    }
    let mut gen_failures = 0;
    for e in corpus() {
        let r = e.verify(&caps).map_err(|x| format!("{}: {x}", e.key))?;
        gen_failures += r.generator_failures.len();
    }
    ensure(gen_failures == 0, || format!("{gen_failures} generator-side failures"))?;
    Ok(format!(
        "{} curated passed, {} in full sweep, 0 generator-side failures",
        curated.len(),
        corpus().len()
    ))
}

fn c12_jid() -> Outcome {
    let jid = id("JID");
    for n in ["D2", "Ch3dp"] {
        ensure(witness(&get(n), &jid).is_none(), || format!("{n} fails JID"))?;
    }
    let sl = id("semi-linearity");
    let mut chains: Vec<String> = ["2", "2e", "L1", "L1dm", "L1dp"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for k in 2..=library::MAX_CHAIN {
        chains.extend([format!("Ch{k}"), format!("Ch{k}dp"), format!("DMH{k}")]);
    }
    for n in &chains {
        let a = get(n);
        ensure(a.is_chain(), || format!("{n} is not a chain"))?;
        ensure(witness(&a, &sl).is_none(), || format!("{n} fails semi-linearity"))?;
    }
    let d1 = get("D1");
    let fails: Vec<String> = all_failures(&d1, &sl)
        .unwrap()
        .iter()
        .map(|cx| cx.describe(&d1))
        .collect();
    let w = fails
        .iter()
        .find(|w| w.starts_with("x=a, y=b"))
        .ok_or_else(|| format!("D1 failures {fails:?}"))?;
    Ok(format!(
        "{} Heyting chains, D1 fails at {w} among {} failures",
        chains.len(),
        fails.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("library integrity", c1_library),
        ("enumeration", c2_enumeration),
        ("deduction characterization", c3_deduction),
        ("dm/dp base separation", c4_bases),
        ("DQDSHC3 base", c5_dqdshc3),
        ("D-matrix bases", c6_dmatrix),
        ("Lukasiewicz bridge", c7_lukasiewicz),
        ("free algebra and membership", c8_free_membership),
        ("proof kernel", c9_proofs),
        ("chain hierarchy", c10_chains),
        ("base corpus", c11_corpus),
        ("JID and semi-linearity", c12_jid),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match r {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
