//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! elapsed time; any failure (or overrun of the time bound) exits nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use domipoly::domsets::{brute_force_polynomial, irrelevant_edges, reduce_irrelevant};
use domipoly::equiv::{
    canonical_form_with_limit, enumerate_graphs, probe_general_u, verify_corona_k1,
    verify_friendship_class, verify_h_variants, Limits,
};
use domipoly::formulas::{
    d_clique_cover_product, d_corona, d_friendship, d_h_even, d_h_odd, d_join, d_kstar,
    CliqueSizeProfile,
};
use domipoly::graph::family::{self, complete, empty, h_connectors, h_graph, path};
use domipoly::graph::{
    clique_cover_product, contract_vertex, corona, disjoint_union, graph6, join, stevanovic,
    CliqueCover,
};
use domipoly::{DominationPolynomial as Poly, Graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bf(g: &Graph) -> Result<Poly, String> {
    brute_force_polynomial(g).map_err(|e| e.to_string())
}

fn graphs_up_to(n: usize) -> Result<Vec<Graph>, String> {
    let mut out = Vec::new();
    for k in 0..=n {
        let level = enumerate_graphs(k, 8).map_err(|e| e.to_string())?;
        out.extend(level.into_iter().map(|(_, g)| g));
    }
    Ok(out)
}

fn h_block() -> Poly {
    Poly::from_i64s(&[0, 2, 6, 4, 1])
}

fn friendship_formula() -> Outcome {
    for n in 1..=5 {
        let g = family::friendship(n).map_err(|e| e.to_string())?;
        let expected =
            &Poly::from_i64s(&[0, 2, 1]).pow(n as u32) + &Poly::binomial_power(2 * n).shift(1);
        let got = bf(&g)?;
        ensure(got == expected, || {
            format!("n={n}: got {got}, expected {expected}")
        })?;
        ensure(d_friendship(n).unwrap() == expected, || {
            format!("n={n}: closed form differs")
        })?;
    }
    Ok("n = 1..5".into())
}

fn h_even_formula() -> Outcome {
    for n in 1..=5 {
        let g = h_graph(2 * n).map_err(|e| e.to_string())?;
        let expected = h_block().pow(n as u32);
        let got = bf(&g)?;
        ensure(got == expected, || format!("n={n}: got {got}"))?;
        ensure(d_h_even(n).unwrap() == expected, || {
            format!("n={n}: closed form differs")
        })?;
    }
    Ok("n = 1..5, up to 20 vertices".into())
}

fn h_odd_formula() -> Outcome {
    for n in 1..=4 {
        let g = h_graph(2 * n + 1).map_err(|e| e.to_string())?;
        let expected = &Poly::from_i64s(&[0, 1, 3, 1]) * &h_block().pow(n as u32);
        let got = bf(&g)?;
        ensure(got == expected, || format!("n={n}: got {got}"))?;
        ensure(d_h_odd(n).unwrap() == expected, || {
            format!("n={n}: closed form differs")
        })?;
    }
    Ok("n = 1..4".into())
}

fn join_sweep() -> Outcome {
    let graphs: Vec<Graph> = graphs_up_to(4)?
        .into_iter()
        .filter(|g| g.order() > 0)
        .collect();
    let polys: Vec<Poly> = graphs.iter().map(bf).collect::<Result<_, _>>()?;
    let mut pairs = 0;
    let mut order4 = 0;
    for (g, dg) in graphs.iter().zip(&polys) {
        for (h, dh) in graphs.iter().zip(&polys) {
            let closed = d_join(dg, dh, g.order(), h.order()).map_err(|e| e.to_string())?;
            let brute = bf(&join(g, h))?;
            ensure(closed == brute, || {
                format!(
                    "{} + {}: {closed} vs {brute}",
                    graph6::encode(g),
                    graph6::encode(h)
                )
            })?;
            pairs += 1;
            if g.order() == 4 && h.order() == 4 {
                order4 += 1;
            }
        }
    }
    ensure(order4 == 121, || {
        format!("{order4} order-4 pairs, expected 121")
    })?;
    Ok(format!(
        "{pairs} ordered pairs of order 1..4, {order4} of order 4"
    ))
}

fn corona_sweep() -> Outcome {
    let graphs: Vec<Graph> = graphs_up_to(3)?
        .into_iter()
        .filter(|g| g.order() > 0)
        .collect();
    let mut pairs = 0;
    for g in &graphs {
        for h in &graphs {
            let closed = d_corona(&bf(h)?, h.order(), g.order()).map_err(|e| e.to_string())?;
            let brute = bf(&corona(g, h).map_err(|e| e.to_string())?)?;
            ensure(closed == brute, || {
                format!(
                    "{} o {}: {closed} vs {brute}",
                    graph6::encode(g),
                    graph6::encode(h)
                )
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn ccp_sweep() -> Outcome {
    let gs = graphs_up_to(4)?;
    let hs: Vec<Graph> = graphs_up_to(3)?
        .into_iter()
        .filter(|g| g.order() > 0)
        .collect();
    let mut cases = 0;
    for g in &gs {
        for cover in CliqueCover::all_partitions(g) {
            let profile = CliqueSizeProfile::from(&cover);
            for h in &hs {
                let u: Vec<usize> = (0..h.order()).collect();
                let product = clique_cover_product(g, &cover, h, &u).map_err(|e| e.to_string())?;
                let closed = d_clique_cover_product(&profile, &bf(h)?, h.order())
                    .map_err(|e| e.to_string())?;
                let brute = bf(&product)?;
                ensure(closed == brute, || {
                    format!(
                        "G={} cover={:?} H={}: {closed} vs {brute}",
                        graph6::encode(g),
                        cover.parts(),
                        graph6::encode(h)
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (G, cover, H) cases"))
}

fn kstar_formula() -> Outcome {
    let mut cases = 0;
    for n in 2..=10 {
        for k in 1..n {
            let g = family::k_star(k, n).map_err(|e| e.to_string())?;
            let closed = d_kstar(k, n).map_err(|e| e.to_string())?;
            let brute = bf(&g)?;
            ensure(closed == brute, || {
                format!("k={k}, n={n}: {closed} vs {brute}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (k, n) pairs"))
}

fn two_covers_of_p5() -> Outcome {
    let p5 = path(5).map_err(|e| e.to_string())?;
    let c1 = CliqueCover::validate(&p5, &[vec![0, 1], vec![2], vec![3, 4]]).unwrap();
    let c2 = CliqueCover::validate(&p5, &[vec![0], vec![1, 2], vec![3, 4]]).unwrap();
    let g1 = stevanovic(&p5, &c1).map_err(|e| e.to_string())?;
    let g2 = stevanovic(&p5, &c2).map_err(|e| e.to_string())?;
    let expected = &h_block().pow(2) * &Poly::from_i64s(&[0, 1, 3, 1]);
    for (name, g) in [("G1", &g1), ("G2", &g2)] {
        let got = bf(g)?;
        ensure(got == expected, || format!("{name}: got {got}"))?;
    }
    let f1 = canonical_form_with_limit(&g1, g1.order()).map_err(|e| e.to_string())?;
    let f2 = canonical_form_with_limit(&g2, g2.order()).map_err(|e| e.to_string())?;
    ensure(f1 != f2, || "canonical forms coincide".into())?;
    Ok(format!("order {}, D = {expected}", g1.order()))
}

fn irrelevant_iff() -> Outcome {
    let mut edges = 0;
    let mut irrelevant = 0;
    for g in graphs_up_to(6)? {
        let d = bf(&g)?;
        let reported = irrelevant_edges(&g);
        for (u, v) in g.edges() {
            let same = bf(&g.delete_edge(u, v).unwrap())? == d;
            let flagged = reported.contains(&(u, v));
            ensure(same == flagged, || {
                format!(
                    "{} edge ({u},{v}): flagged={flagged}, same={same}",
                    graph6::encode(&g)
                )
            })?;
            edges += 1;
            irrelevant += usize::from(flagged);
        }
    }
    Ok(format!("{edges} edges checked, {irrelevant} irrelevant"))
}

fn h_reduction() -> Outcome {
    let block = join(&complete(1), &path(3).unwrap());
    for n in 1..=4 {
        let g = h_graph(2 * n).map_err(|e| e.to_string())?;
        let trace = reduce_irrelevant(&g);
        ensure(trace.deleted == h_connectors(2 * n), || {
            format!("n={n}: deleted {:?}", trace.deleted)
        })?;
        let target = (0..n).fold(Graph::null(), |acc, _| disjoint_union(&acc, &block));
        let order = g.order();
        let same = canonical_form_with_limit(&trace.final_graph, order)
            .map_err(|e| e.to_string())?
            == canonical_form_with_limit(&target, order).map_err(|e| e.to_string())?;
        ensure(same, || format!("n={n}: final graph is not n(K1+P3)"))?;
    }
    Ok("n = 1..4".into())
}

fn friendship_class() -> Outcome {
    let mut sizes = Vec::new();
    for n in [2, 3] {
        let check = verify_friendship_class(n, &Limits::default()).map_err(|e| e.to_string())?;
        ensure(check.holds, || {
            format!("n={n}: class differs from constructed set")
        })?;
        ensure(check.report.contains(&check.book_witness), || {
            format!("n={n}: B_n/v missing from class")
        })?;
        let book = family::book(n).unwrap();
        let witness = contract_vertex(&book, 1).unwrap();
        ensure(bf(&witness)? == d_friendship(n).unwrap(), || {
            format!("n={n}: B_n/v polynomial")
        })?;
        sizes.push(format!("n={n}: class size {}", check.report.members.len()));
    }
    Ok(sizes.join(", "))
}

fn corona_k1() -> Outcome {
    let mut sizes = Vec::new();
    for n in 1..=3 {
        let check = verify_corona_k1(n, &Limits::default()).map_err(|e| e.to_string())?;
        ensure(check.holds, || format!("n={n}: biconditional fails"))?;
        sizes.push(format!("n={n}: {}", check.matching.len()));
    }
    Ok(format!("class sizes {}", sizes.join(", ")))
}

fn h_variants() -> Outcome {
    let mut notes = Vec::new();
    for n in [2, 3] {
        let check = verify_h_variants(n, &Limits::default()).map_err(|e| e.to_string())?;
        ensure(check.holds, || {
            format!("n={n}: failures {:?}", check.failures)
        })?;
        notes.push(format!(
            "n={n}: {} deletion and {} addition sets",
            check.deletion_sets, check.addition_sets
        ));
    }
    Ok(notes.join(", "))
}

fn enumeration_counts() -> Outcome {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_graphs(n, 8).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(counts == [1, 2, 4, 11, 34, 156, 1044], || {
        format!("counts {counts:?}")
    })?;
    Ok(format!("{counts:?}"))
}

fn graph6_roundtrip() -> Outcome {
    let graphs = graphs_up_to(7)?;
    for g in &graphs {
        let s = graph6::encode(g);
        let back = graph6::decode(&s).map_err(|e| format!("{s}: {e}"))?;
        ensure(&back == g, || format!("{s} did not round-trip"))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn general_u_probe() -> Outcome {
    let limits = Limits::default();
    let p3 = path(3).unwrap();
    let k2 = complete(2);
    let k3 = complete(3);
    let c4 = family::cycle(4).unwrap();
    let p4 = path(4).unwrap();
    let cover = |g: &Graph, parts: &[Vec<usize>]| CliqueCover::validate(g, parts).unwrap();

    let full = [
        (
            "P3{01,2} * K2",
            p3.clone(),
            cover(&p3, &[vec![0, 1], vec![2]]),
            k2.clone(),
        ),
        (
            "K3{012} * P3",
            k3.clone(),
            cover(&k3, &[vec![0, 1, 2]]),
            p3.clone(),
        ),
        (
            "C4{01,23} * 2K1",
            c4.clone(),
            cover(&c4, &[vec![0, 1], vec![2, 3]]),
            empty(2),
        ),
    ];
    for (name, g, c, h) in &full {
        let u: Vec<usize> = (0..h.order()).collect();
        let rec = probe_general_u(g, c, h, &u, &limits).map_err(|e| e.to_string())?;
        ensure(rec.equal(), || {
            format!("{name}: {} vs {}", rec.product, rec.factor_product)
        })?;
    }

    let proper = [
        (
            "P3{01,2} * P3, U={0}",
            p3.clone(),
            cover(&p3, &[vec![0, 1], vec![2]]),
            p3.clone(),
            vec![0],
        ),
        (
            "K2{01} * P3, U={1}",
            k2.clone(),
            cover(&k2, &[vec![0, 1]]),
            p3.clone(),
            vec![1],
        ),
        (
            "P4{01,23} * K2, U={0}",
            p4.clone(),
            cover(&p4, &[vec![0, 1], vec![2, 3]]),
            k2.clone(),
            vec![0],
        ),
        (
            "K3{012} * 2K1, U={0}",
            k3.clone(),
            cover(&k3, &[vec![0, 1, 2]]),
            empty(2),
            vec![0],
        ),
    ];
    let mut recorded = Vec::new();
    for (name, g, c, h, u) in &proper {
        let rec = probe_general_u(g, c, h, u, &limits).map_err(|e| e.to_string())?;
        recorded.push(format!(
            "{name}: {}",
            if rec.equal() { "equal" } else { "differs" }
        ));
    }
    Ok(format!(
        "{} full-U equal; proper U: {}",
        full.len(),
        recorded.join("; ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 16] = [
        ("friendship formula", 1, friendship_formula),
        ("H-even formula", 30, h_even_formula),
        ("H-odd formula", 30, h_odd_formula),
        ("join sweep", 1, join_sweep),
        ("corona sweep", 10, corona_sweep),
        ("clique cover product sweep", 60, ccp_sweep),
        ("k-star formula", 5, kstar_formula),
        ("two covers of P5", 1, two_covers_of_p5),
        ("irrelevant edges", 60, irrelevant_iff),
        ("H_2n reduction", 5, h_reduction),
        ("friendship class", 60, friendship_class),
        ("corona with K1", 60, corona_k1),
        ("H_2n edge variants", 30, h_variants),
        ("enumeration counts", 60, enumeration_counts),
        ("graph6 round-trip", 10, graph6_roundtrip),
        ("general U probe", 10, general_u_probe),
    ];
    let mut failed = 0;
    for (i, (name, secs, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let bound = Duration::from_secs(*secs);
        let (ok, detail) = match outcome {
            Ok(d) if elapsed < bound => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {secs} s bound")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] criterion {:>2}: {name} ({:.3} s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
