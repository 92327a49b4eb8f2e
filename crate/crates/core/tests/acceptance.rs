//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fatpoints::kaehler::Direction;
use fatpoints::scheme::default_window;
use fatpoints::{
    cbp_different_criterion, degree_tuple_acm, delta_template_ci, first_difference, grid_ci, hf, hf_ideal, hf_omega,
    hf_omega_aci, hf_omega_closed, hf_omega_oracle, is_cbp, is_ci, kaehler_different_hf, separator_degrees,
    sequence_formula, theta_stable_bounds, theta_stable_value, tuples, FatPointScheme, GeneratedIdeal, IntMatrix,
};

use common::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(name: &str, got: &[Vec<i64>], want: &[Vec<i64>]) -> Outcome {
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        for (j, (a, b)) in g.iter().zip(w).enumerate() {
            if a != b {
                return Err(format!("{name}: entry ({i},{j}) is {a}, expected {b}"));
            }
        }
    }
    ensure(got.len() == want.len() && got.iter().zip(want).all(|(g, w)| g.len() == w.len()), || {
        format!("{name}: window shape differs")
    })
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn hf_y_fixture() -> IntMatrix {
    vec![
        vec![1, 2, 3, 4, 5, 5],
        vec![2, 4, 6, 8, 8, 8],
        vec![3, 6, 9, 10, 10, 10],
        vec![4, 8, 10, 11, 11, 11],
        vec![5, 8, 10, 11, 11, 11],
        vec![5, 8, 10, 11, 11, 11],
    ]
}

fn hf_v_fixture() -> IntMatrix {
    vec![
        vec![1, 2, 3, 4, 5, 6, 7, 8, 8],
        vec![2, 4, 6, 8, 10, 12, 14, 14, 14],
        vec![3, 6, 9, 12, 15, 18, 18, 18, 18],
        vec![4, 8, 12, 16, 20, 21, 21, 21, 21],
        vec![5, 10, 15, 20, 22, 23, 23, 23, 23],
        vec![6, 12, 18, 21, 23, 24, 24, 24, 24],
        vec![7, 14, 18, 21, 23, 24, 24, 24, 24],
        vec![8, 14, 18, 21, 23, 24, 24, 24, 24],
        vec![8, 14, 18, 21, 23, 24, 24, 24, 24],
    ]
}

fn omega_fixture() -> IntMatrix {
    vec![
        vec![0, 2, 4, 6, 8, 9, 8, 7, 7],
        vec![2, 8, 14, 20, 24, 22, 20, 20, 20],
        vec![4, 14, 24, 32, 31, 28, 28, 28, 28],
        vec![6, 20, 32, 35, 33, 32, 32, 32, 32],
        vec![8, 24, 31, 33, 33, 32, 32, 32, 32],
        vec![9, 22, 28, 32, 32, 31, 31, 31, 31],
        vec![8, 20, 28, 32, 32, 31, 31, 31, 31],
        vec![7, 20, 28, 32, 32, 31, 31, 31, 31],
        vec![7, 20, 28, 32, 32, 31, 31, 31, 31],
    ]
}

fn delta_fixture() -> IntMatrix {
    vec![
        vec![0, 2, 2, 2, 2, 2, 2, 2, 2, 1, -1, -1, 0],
        vec![2, 4, 4, 4, 4, 4, 4, 4, 4, 1, -1, -1, 0],
        vec![2, 4, 4, 4, 4, 4, 3, 1, 1, 0, 0, 0, 0],
        vec![2, 4, 4, 4, 4, 4, 1, -1, -1, 0, 0, 0, 0],
        vec![2, 4, 4, 3, 1, 1, 0, 0, 0, 0, 0, 0, 0],
        vec![2, 4, 4, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0],
        vec![1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        vec![-1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        vec![0; 13],
    ]
}

fn aci_fixture() -> IntMatrix {
    vec![
        vec![0, 2, 4, 6, 8, 10, 12, 14, 16, 17, 16, 15, 15, 15],
        vec![2, 8, 14, 20, 26, 32, 38, 44, 50, 52, 50, 48, 48, 48],
        vec![4, 14, 24, 34, 44, 54, 64, 74, 83, 84, 81, 79, 79, 79],
        vec![6, 20, 34, 48, 62, 76, 89, 100, 108, 109, 106, 104, 104, 104],
        vec![8, 26, 44, 62, 80, 98, 112, 121, 126, 127, 125, 123, 123, 123],
        vec![10, 32, 54, 76, 98, 119, 132, 138, 143, 144, 142, 140, 140, 140],
        vec![12, 38, 64, 89, 112, 132, 144, 148, 153, 155, 153, 151, 151, 151],
        vec![14, 44, 74, 100, 121, 138, 148, 153, 158, 160, 158, 156, 156, 156],
        vec![16, 50, 83, 108, 126, 143, 153, 158, 164, 166, 164, 162, 162, 162],
        vec![17, 52, 84, 109, 127, 144, 155, 160, 166, 168, 166, 164, 164, 164],
        vec![16, 50, 81, 106, 125, 142, 153, 158, 164, 166, 164, 162, 162, 162],
        vec![15, 48, 79, 104, 123, 140, 151, 156, 162, 164, 162, 160, 160, 160],
        vec![15, 48, 79, 104, 123, 140, 151, 156, 162, 164, 162, 160, 160, 160],
        vec![15, 48, 79, 104, 123, 140, 151, 156, 162, 164, 162, 160, 160, 160],
    ]
}

fn theta_fixture() -> IntMatrix {
    vec![
        vec![0, 0, 0, 0, 1, 1],
        vec![0, 0, 1, 2, 3, 3],
        vec![0, 1, 3, 4, 5, 5],
        vec![0, 1, 3, 4, 5, 5],
        vec![0, 1, 3, 4, 5, 5],
        vec![0, 1, 3, 4, 5, 5],
    ]
}

fn mixed_hf_fixtures() -> Outcome {
    let y = mixed_scheme();
    let hy = hf(&y, 6, 6);
    same("HF_Y", hy.data(), &hf_y_fixture())?;
    ensure(hy.eventual == Some(11), || format!("HF_Y eventual {:?}", hy.eventual))?;
    let hv = hf(&y.thicken(), 9, 9);
    same("HF_V", hv.data(), &hf_v_fixture())?;
    ensure(hv.eventual == Some(24), || format!("HF_V eventual {:?}", hv.eventual))
}

fn mixed_omega() -> Outcome {
    let start = Instant::now();
    let y = mixed_scheme();
    let h = hf_omega(&y, 9, 9);
    same("sequence route", h.data(), &omega_fixture())?;
    ensure(h.get(2, 2) == 24 && h.eventual == Some(31), || "anchors (2,2)=24, eventual 31".into())?;
    same("presentation route", hf_omega_oracle(&y, 9, 9).data(), &omega_fixture())?;
    within(Duration::from_secs(30), start)
}

fn non_fat_counterexample() -> Outcome {
    let i = GeneratedIdeal::new(vec!["X1^2".parse().unwrap(), "Y0 - Y1".parse().unwrap()]).unwrap();
    let truth = vec![vec![0, 1, 1, 1], vec![2, 4, 4, 4], vec![3, 5, 5, 5], vec![3, 5, 5, 5]];
    let wrong = vec![vec![0, 1, 1, 1], vec![2, 4, 4, 4], vec![3, 5, 5, 5], vec![2, 4, 4, 4]];
    let hy = hf_ideal(&i, 4, 4);
    let hv = hf_ideal(&i.square(), 4, 4);
    same("HF_Y", hy.data(), &[vec![1; 4], vec![2; 4], vec![2; 4], vec![2; 4]])?;
    same("HF_V", hv.data(), &[vec![1, 2, 2, 2], vec![2, 4, 4, 4], vec![3, 5, 5, 5], vec![4, 6, 6, 6]])?;
    let oracle = hf_omega_oracle(&i, 4, 4);
    let formula = sequence_formula(&hy, &hv);
    same("presentation", oracle.data(), &truth)?;
    same("formula", formula.data(), &wrong)?;
    let differing: Vec<(usize, usize)> = (0..4)
        .flat_map(|a| (0..4).map(move |b| (a, b)))
        .filter(|&(a, b)| oracle.get(a, b) != formula.get(a, b))
        .collect();
    ensure(differing == (0..4).map(|b| (3, b)).collect::<Vec<_>>(), || format!("differences at {differing:?}"))
}

fn tuple_fixtures() -> Outcome {
    let t = tuples(&mixed_scheme());
    ensure(t.alpha == [4, 3, 2, 1, 1], || format!("alpha {:?}", t.alpha))?;
    ensure(t.alpha_hat == [6, 2, 5], || format!("alpha_hat {:?}", t.alpha_hat))?;
    ensure(t.alpha_star == [5, 3, 2, 1], || format!("alpha_star {:?}", t.alpha_star))?;
    ensure(t.beta_hat == [5, 6, 2], || format!("beta_hat {:?}", t.beta_hat))
}

fn large_index_closed_form() -> Outcome {
    let y = mixed_scheme();
    let t = tuples(&y);
    let i = (t.l + t.r - 1) as usize;
    let cols = (t.l_prime + t.t + 1) as usize;
    let h = hf_omega(&y, i + 1, cols);
    for j in 0..cols {
        let closed = hf_omega_closed(&y, Direction::LargeI, j as i64).map_err(|e| e.to_string())?;
        ensure(closed == h.get(i, j), || format!("j = {j}: closed {closed}, matrix {}", h.get(i, j)))?;
    }
    ensure(h.get(i, 2) == 28 && (6..cols).all(|j| h.get(i, j) == 31), || "anchors 28 and 31".into())
}

fn equimultiple_ci_difference() -> Outcome {
    let start = Instant::now();
    let y = grid_ci(2, 3).equimultiple(3);
    let d = first_difference(hf_omega(&y, 9, 13).data());
    same("difference", &d, &delta_fixture())?;
    let mut template = delta_template_ci(2, 3, 3);
    template.iter_mut().for_each(|r| r.push(0));
    template.push(vec![0; 13]);
    same("template", &template, &delta_fixture())?;
    within(Duration::from_secs(60), start)
}

fn aci_fixture_matches() -> Outcome {
    let start = Instant::now();
    let y = aci8().equimultiple(3);
    let h = hf_omega(&y, 14, 14);
    same("matrix", h.data(), &aci_fixture())?;
    ensure(h.get(0, 1) == 2 && h.get(9, 9) == 168 && h.eventual == Some(160), || "anchors".into())?;
    for i in 11..14 {
        for j in 0..14 {
            let v = hf_omega_aci(2, 1, 3, 2, 3, j as i64, i as i64).map_err(|e| e.to_string())?;
            ensure(v == h.get(i, j), || format!("closed form at ({i},{j}) is {v}, matrix {}", h.get(i, j)))?;
        }
    }
    within(Duration::from_secs(120), start)
}

fn five_point_different() -> Outcome {
    let x = staircase(&[3, 2]);
    let h = kaehler_different_hf(&x, 6, 6).map_err(|e| e.to_string())?;
    same("theta", h.data(), &theta_fixture())?;
    ensure(h.get(2, 4) == 5 && h.get(1, 4) != 5 && h.get(2, 3) != 5, || "eventual value first reached at (2,4)".into())
}

fn theta_vanishing_and_stable_value() -> Outcome {
    let mut r = rng(9);
    for _ in 0..10 {
        let y = random_acm(&mut r, 5, 2..=3, |_| true);
        let (rows, cols) = default_window(&y);
        let h = kaehler_different_hf(&y, rows, cols).map_err(|e| e.to_string())?;
        ensure(h.data().iter().flatten().all(|&v| v == 0), || format!("nonzero theta for {:?}", y.multiplicities()))?;
    }
    for _ in 0..10 {
        let y = random_acm(&mut r, 5, 1..=2, |y| y.multiplicities().contains(&1));
        let (t1, t2) = theta_stable_bounds(&y);
        let s = theta_stable_value(&y);
        let h = kaehler_different_hf(&y, t1 + 2, t2 + 2).map_err(|e| e.to_string())?;
        for i in t1..t1 + 2 {
            for j in t2..t2 + 2 {
                ensure(h.get(i, j) == s, || format!("theta({i},{j}) = {} but {s} simple points", h.get(i, j)))?;
            }
        }
    }
    Ok(())
}

fn cbp_ci_equivalence() -> Outcome {
    let err = |e: fatpoints::Error| e.to_string();
    for d1 in 1..=3u32 {
        for d2 in d1..=3u32 {
            let x = grid_ci(d1, d2);
            let flags = (is_cbp(&x).map_err(err)?, is_ci(&x).map_err(err)?, cbp_different_criterion(&x).map_err(err)?);
            ensure(flags == (true, true, true), || format!("CI({d1},{d2}): {flags:?}"))?;
            let (rows, cols) = default_window(&x);
            let theta = kaehler_different_hf(&x, rows, cols).map_err(err)?;
            let hx = hf(&x, rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    let want = hx.at(i as i64 - d1 as i64 + 1, j as i64 - d2 as i64 + 1);
                    ensure(theta.get(i, j) == want, || format!("CI({d1},{d2}) theta({i},{j})"))?;
                }
            }
        }
    }
    for rows in [&[2, 1][..], &[3, 2], &[3, 2, 1], &[3, 1], &[2, 2, 1]] {
        let x = staircase(rows);
        let flags = (is_cbp(&x).map_err(err)?, is_ci(&x).map_err(err)?, cbp_different_criterion(&x).map_err(err)?);
        ensure(flags == (false, false, false), || format!("staircase {rows:?}: {flags:?}"))?;
    }
    Ok(())
}

fn independence_of_removed_point() -> Outcome {
    let cases = [grid_ci(2, 2).equimultiple(2), grid_ci(2, 2).equimultiple(3), grid_ci(2, 2), grid_ci(3, 3)];
    for y in cases {
        let (rows, cols) = default_window(&y);
        let first = hf_omega(&y.decrement(0), rows, cols);
        for k in 1..y.len() {
            let other = hf_omega(&y.decrement(k), rows, cols);
            same(&format!("point {k} of {:?}", y.multiplicities()), other.data(), first.data())?;
        }
    }
    Ok(())
}

fn sequence_matches_presentation() -> Outcome {
    let mut r = rng(12);
    for n in 0..30 {
        let y = random_scheme(&mut r, 6, 3);
        let t = tuples(&y);
        let (rows, cols) = ((t.l + t.r) as usize, (t.l_prime + t.t) as usize);
        same(&format!("scheme {n}"), hf_omega(&y, rows, cols).data(), hf_omega_oracle(&y, rows, cols).data())?;
    }
    Ok(())
}

fn degree_tuples_match_separators() -> Outcome {
    let mut r = rng(13);
    let mut cases: Vec<FatPointScheme> = (0..10).map(|_| random_acm(&mut r, 5, 1..=3, |_| true)).collect();
    cases.push(grid_ci(2, 3).equimultiple(3));
    for y in &cases {
        for k in 0..y.len() {
            let closed = degree_tuple_acm(y, k).map_err(|e| e.to_string())?;
            let computed = separator_degrees(y, k).map_err(|e| e.to_string())?;
            ensure(closed == computed, || format!("point {k} of {y:?}: {closed} vs {computed}"))?;
        }
    }
    let last = degree_tuple_acm(cases.last().unwrap(), 0).map_err(|e| e.to_string())?;
    ensure(last.to_string() == "((1,8), (3,5), (5,2))", || format!("3·CI(2,3): {last}"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("Hilbert functions of the mixed scheme and its thickening", mixed_hf_fixtures),
        ("Kaehler differentials of the mixed scheme, both routes", mixed_omega),
        ("non-fat counterexample: presentation vs sequence formula", non_fat_counterexample),
        ("row and column tuples", tuple_fixtures),
        ("closed form for large i", large_index_closed_form),
        ("difference of 3 x CI(2,3) and its template", equimultiple_ci_difference),
        ("3 x ACI matrix and its closed form", aci_fixture_matches),
        ("Kaehler different of five points", five_point_different),
        ("different vanishes for fat schemes, counts simple points", theta_vanishing_and_stable_value),
        ("CBP, CI and the different criterion agree", cbp_ci_equivalence),
        ("independence of the decremented point", independence_of_removed_point),
        ("sequence route equals presentation route on random schemes", sequence_matches_presentation),
        ("degree tuples agree with computed separators", degree_tuples_match_separators),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {:>2}. {name} ({t:.1?})", n + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2}. {name} ({t:.1?}): {e}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
