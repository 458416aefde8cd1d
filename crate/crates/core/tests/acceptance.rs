//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use linsyz::check::{check_property, Method, Property};
use linsyz::complex::{
    alexander_dual, cm_shape_report, dual_ideal, facet_graph, is_cohen_macaulay, is_shellable,
};
use linsyz::generators::{cycle_family, path_ideal_cycle, path_ideal_line, random_ideal, rng};
use linsyz::graph::{build_syzygy_graph, classify_shape, has_linear_relations_combinatorial, raw_syzygy_graph, GraphShape};
use linsyz::oracle::betti_table;
use linsyz::structure::{
    cycle_criterion, find_admissible_order, is_variable_decomposable, scarf_matches_graph, tree_criterion,
};
use linsyz::verify::{all_paths_line, describe, duality_complex, tree_instance_ideal};
use linsyz::{Caps, FieldSpec, MonomialIdeal, Result, SimplicialComplex, SqfMonomial};

const SEED: u64 = 0;
const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::Prime(2)];

/// Collects the failures of one criterion.
#[derive(Default)]
struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn show(i: &MonomialIdeal) -> String {
    describe(i.n(), i.gens())
}

fn linear(i: &MonomialIdeal) -> Result<bool> {
    let d = i.degree().expect("equigenerated");
    Ok(betti_table(i, FieldSpec::Rationals, &Caps::default())?.is_linear(d))
}

fn sorted(i: &MonomialIdeal) -> Vec<SqfMonomial> {
    let mut g = i.gens().to_vec();
    g.sort();
    g
}

fn broken_line() -> MonomialIdeal {
    MonomialIdeal::from_supports(6, &[&[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[4, 5, 6], &[3, 5, 6]]).unwrap()
}

fn c4() -> MonomialIdeal {
    MonomialIdeal::from_supports(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap()
}

fn betti_tables(out: &mut Outcome) -> Result<()> {
    let cases: [(&str, MonomialIdeal, &[((usize, usize), usize)]); 3] = [
        ("broken line", broken_line(), &[((0, 3), 5), ((1, 4), 4), ((1, 5), 1), ((2, 6), 1)]),
        ("C4", c4(), &[((0, 2), 4), ((1, 3), 4), ((2, 4), 1)]),
        ("I_3(C_6)", path_ideal_cycle(6, 3)?, &[((0, 3), 6), ((1, 4), 6), ((2, 6), 1)]),
    ];
    for (name, ideal, expected) in cases {
        for field in FIELDS {
            let t = betti_table(&ideal, field, &Caps::default())?;
            let mut actual: Vec<_> = t.entries.iter().map(|(&k, &v)| (k, v)).filter(|&(_, v)| v != 0).collect();
            actual.sort();
            out.check(actual == expected, || format!("{name} over {field}: got {actual:?}"));
        }
    }
    Ok(())
}

fn cycle_path_ideals(out: &mut Outcome, all: &mut Vec<MonomialIdeal>) -> Result<()> {
    for n in 4..=8 {
        for t in 2..n {
            let i = path_ideal_cycle(n, t)?;
            let lin = linear(&i)?;
            out.check(lin == (t + 2 >= n), || format!("I_{t}(C_{n}): linear = {lin}"));
            if t < n - 1 {
                let shape = classify_shape(&build_syzygy_graph(&i)?);
                let ok = matches!(&shape, GraphShape::Cycle { order } if order.len() == n);
                out.check(ok, || format!("I_{t}(C_{n}): shape {}", shape.name()));
            }
            all.push(i);
        }
    }
    Ok(())
}

fn line_path_ideals(out: &mut Outcome, all: &mut Vec<MonomialIdeal>) -> Result<()> {
    for n in 4..=10 {
        for t in 2..=n {
            let i = path_ideal_line(n, t)?;
            let lin = linear(&i)?;
            out.check(lin == (2 * t >= n), || format!("I_{t}(L_{n}): linear = {lin}"));
            all.push(i);
        }
    }
    Ok(())
}

fn tree_battery() -> Result<Vec<MonomialIdeal>> {
    (0..50).map(|k| tree_instance_ideal(k, SEED).map(|(_, i)| i)).collect()
}

fn tree_equivalences(out: &mut Outcome, trees: &[MonomialIdeal]) -> Result<()> {
    for i in trees {
        let d = i.degree().expect("equigenerated");
        let t = betti_table(i, FieldSpec::Rationals, &Caps::default())?;
        let bits = [
            t.is_linear(d),
            t.has_linear_relations(d),
            has_linear_relations_combinatorial(i)?.violating_pair.is_none(),
            tree_criterion(i)?.holds,
            all_paths_line(i)?,
            find_admissible_order(i)?.is_some(),
            is_variable_decomposable(i)?,
        ];
        out.check(bits.iter().all(|&b| b == bits[0]), || format!("{}: {bits:?}", show(i)));
    }
    Ok(())
}

/// One generator of a cycle family or cycle path ideal gets one variable
/// swapped; kept only if the syzygy graph is still an n-cycle without pruning.
fn perturbed_cycles(count: usize) -> Result<Vec<MonomialIdeal>> {
    let mut g = rng(SEED ^ 0x5eed);
    let mut found = Vec::new();
    while found.len() < count {
        let n = g.random_range(4..=7usize);
        let base = if g.random_bool(0.5) { cycle_family(n)? } else { path_ideal_cycle(n, g.random_range(2..=n - 2))? };
        let ambient = n + 1;
        let mut gens = base.gens().to_vec();
        let k = g.random_range(0..gens.len());
        let inside: Vec<usize> = gens[k].vars().collect();
        let outside: Vec<usize> = (1..=ambient).filter(|&v| !gens[k].contains(v)).collect();
        let drop = inside[g.random_range(0..inside.len())];
        let add = outside[g.random_range(0..outside.len())];
        gens[k] = SqfMonomial::from_bits(gens[k].bits() & !(1 << (drop - 1)) | 1 << (add - 1));
        let ideal = MonomialIdeal::new(ambient, &gens)?;
        if ideal.len() != gens.len() {
            continue;
        }
        let graph = build_syzygy_graph(&ideal)?;
        if let GraphShape::Cycle { order } = classify_shape(&graph) {
            if order.len() == n && graph.pruned_edges().is_empty() {
                found.push(ideal);
            }
        }
    }
    Ok(found)
}

fn cycle_battery(out: &mut Outcome, families: &[MonomialIdeal], perturbed: &[MonomialIdeal]) -> Result<()> {
    for i in families {
        let bits = [
            cycle_criterion(i)?.holds,
            find_admissible_order(i)?.is_some(),
            is_variable_decomposable(i)?,
            linear(i)?,
            i.degree() == Some(i.n() - 2),
        ];
        out.check(bits.iter().all(|&b| b), || format!("{}: {bits:?}", show(i)));
    }
    for i in perturbed {
        let (criterion, oracle) = (cycle_criterion(i)?.holds, linear(i)?);
        out.check(criterion == oracle, || format!("{}: criterion {criterion}, oracle {oracle}", show(i)));
    }
    Ok(())
}

fn random_equigenerated() -> Result<Vec<MonomialIdeal>> {
    let mut g = rng(SEED ^ 0xe9);
    let mut found = Vec::new();
    while found.len() < 50 {
        let n = g.random_range(3..=7usize);
        let d = g.random_range(1..n);
        let m = g.random_range(2..=6usize);
        if let Ok(i) = random_ideal(n, m, d, g.random()) {
            found.push(i);
        }
    }
    Ok(found)
}

fn projdim_one(out: &mut Outcome, ideals: &[MonomialIdeal]) -> Result<()> {
    for i in ideals.iter().filter(|i| i.len() >= 2) {
        let d = i.degree().expect("equigenerated");
        let t = betti_table(i, FieldSpec::Rationals, &Caps::default())?;
        let g = build_syzygy_graph(i)?;
        let pd1 = t.proj_dim() == 1;
        if t.has_linear_relations(d) {
            let tree = classify_shape(&g).is_tree();
            out.check(pd1 == tree, || format!("{}: projdim 1 = {pd1}, tree = {tree}", show(i)));
        }
        if pd1 {
            let (lin, conn) = (t.is_linear(d), g.is_connected());
            out.check(lin == conn, || format!("{}: linear = {lin}, connected = {conn}", show(i)));
        }
    }
    Ok(())
}

fn scarf(out: &mut Outcome, trees: &[MonomialIdeal]) -> Result<()> {
    for i in trees {
        let (lin, sc) = (linear(i)?, scarf_matches_graph(i, &Caps::default())?);
        out.check(lin == sc, || format!("{}: linear = {lin}, scarf matches graph = {sc}", show(i)));
    }
    Ok(())
}

fn duality(out: &mut Outcome, duals: &mut Vec<MonomialIdeal>) -> Result<()> {
    let caps = Caps::default();
    for k in 0..30 {
        let (_, c) = duality_complex(k, SEED)?;
        let name = describe(c.n(), c.facets());
        let dual = dual_ideal(&c)?;
        let same = facet_graph(&c)?.edges() == raw_syzygy_graph(&dual)?.edges();
        out.check(same, || format!("{name}: facet graph differs from the dual syzygy graph"));
        let cm = is_cohen_macaulay(&c, FieldSpec::Rationals, &caps)?.cohen_macaulay;
        let both = check_property(&dual, Property::LinearResolution, Method::Both, FieldSpec::Rationals, &caps)?;
        out.check(!both.is_disagreement() && both.holds == cm, || {
            format!("{name}: CM = {cm}, dual linear resolution = {}", both.holds)
        });
        let report = cm_shape_report(&c, FieldSpec::Rationals, &caps)?;
        if let Some(eq) = report.equivalences_hold {
            let shellable = is_shellable(&c, &caps)?.is_some();
            out.check(eq && shellable == cm, || format!("{name}: equivalences fail on {}", report.shape.name()));
        }
        duals.push(dual);
    }
    Ok(())
}

fn cm_codim_two(out: &mut Outcome) -> Result<()> {
    let caps = Caps::default();
    let cases: [(&str, &[&[usize]], bool); 2] =
        [("(xy, yz, zt)", &[&[1, 2], &[2, 3], &[3, 4]], true), ("(xy, zt)", &[&[1, 2], &[3, 4]], false)];
    for (name, supports, expected) in cases {
        let ideal = MonomialIdeal::from_supports(4, supports)?;
        // the complex whose dual ideal is `ideal`
        let facets = ideal.gens().iter().map(|u| SqfMonomial::from_bits(0b1111 & !u.bits())).collect();
        let delta = SimplicialComplex::new(4, facets)?;
        out.check(sorted(&dual_ideal(&delta)?) == sorted(&ideal), || format!("{name}: dual ideal round trip"));
        for field in FIELDS {
            let cm = is_cohen_macaulay(&delta, field, &caps)?.cohen_macaulay;
            out.check(cm == expected, || format!("{name} over {field}: CM = {cm}"));
        }
        let lin = linear(&ideal)?;
        out.check(lin == expected, || format!("{name}: linear = {lin}"));
        let back = alexander_dual(&alexander_dual(&ideal, &caps)?, &caps)?;
        out.check(sorted(&back) == sorted(&ideal), || format!("{name}: double dual differs"));
    }
    Ok(())
}

fn linear_relations(out: &mut Outcome, all: &[MonomialIdeal]) -> Result<()> {
    for i in all {
        let d = i.degree().expect("equigenerated");
        let comb = has_linear_relations_combinatorial(i)?.violating_pair.is_none();
        let oracle = betti_table(i, FieldSpec::Rationals, &Caps::default())?.has_linear_relations(d);
        out.check(comb == oracle, || format!("{}: combinatorial {comb}, oracle {oracle}", show(i)));
    }
    Ok(())
}

fn report(number: usize, title: &str, start: Instant, result: Result<Outcome>) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match result {
        Ok(o) if o.failures.is_empty() => {
            println!("criterion {number:>2} PASS  {title} ({} checks, {secs:.2}s)", o.checked);
            true
        }
        Ok(o) => {
            println!("criterion {number:>2} FAIL  {title} ({} of {} checks failed, {secs:.2}s)", o.failures.len(), o.checked);
            for f in o.failures.iter().take(5) {
                println!("    {f}");
            }
            false
        }
        Err(e) => {
            println!("criterion {number:>2} FAIL  {title} (error: {e})");
            false
        }
    }
}

fn run(f: impl FnOnce(&mut Outcome) -> Result<()>) -> Result<Outcome> {
    let mut o = Outcome::default();
    f(&mut o)?;
    Ok(o)
}

fn main() -> ExitCode {
    let mut all: Vec<MonomialIdeal> = Vec::new();
    let mut ok = true;

    let t = Instant::now();
    ok &= report(1, "Betti tables over Q and GF(2)", t, run(betti_tables));

    let t = Instant::now();
    ok &= report(2, "cycle path ideals", t, run(|o| cycle_path_ideals(o, &mut all)));

    let t = Instant::now();
    ok &= report(3, "line path ideals", t, run(|o| line_path_ideals(o, &mut all)));

    let trees = tree_battery().expect("tree battery generates");
    let t = Instant::now();
    ok &= report(4, "tree equivalences", t, run(|o| tree_equivalences(o, &trees)));

    let families: Vec<_> = (4..=8).map(|n| cycle_family(n).expect("cycle family")).collect();
    let perturbed = perturbed_cycles(20).expect("perturbations found");
    let t = Instant::now();
    ok &= report(5, "cycle family and perturbations", t, run(|o| cycle_battery(o, &families, &perturbed)));

    let randoms = random_equigenerated().expect("random ideals");
    let mut battery: Vec<MonomialIdeal> = trees.clone();
    battery.extend(families.iter().cloned());
    battery.extend(perturbed.iter().cloned());
    battery.extend(randoms.iter().cloned());
    let t = Instant::now();
    ok &= report(6, "projective dimension one", t, run(|o| projdim_one(o, &battery)));

    let t = Instant::now();
    ok &= report(7, "Scarf complex versus linearity on trees", t, run(|o| scarf(o, &trees)));

    let mut duals = Vec::new();
    let t = Instant::now();
    ok &= report(8, "Alexander duality and shape equivalences", t, run(|o| duality(o, &mut duals)));

    let t = Instant::now();
    ok &= report(9, "codimension two CM spot checks", t, run(cm_codim_two));

    all.extend(battery);
    all.extend(duals.into_iter().filter(|i| i.is_equigenerated()));
    let t = Instant::now();
    ok &= report(10, "combinatorial versus oracle linear relations", t, run(|o| linear_relations(o, &all)));

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
