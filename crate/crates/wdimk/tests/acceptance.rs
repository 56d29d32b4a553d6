//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p wdimk --test acceptance -- --nocapture` to see the
//! per-criterion lines. Criterion 3 compares the solver against the shipped
//! reference tables verbatim and criterion 8 asserts the documented k = 2
//! deviation pattern; both are expected to stay red at the cells where the
//! published values are refuted by explicit certificates (see the mismatch
//! diagnostics they print).

use wdimk::graph::{make_hamming, VertexId};
use wdimk::ilp::{
    build_fgh, build_fs, build_fs_minus, coefficient_a, index_set_iuv, parse_lp_str,
    to_lp_string, wdim_ilp, Formulation, SolveOptions,
};
use wdimk::report::{parse_expected_csv, run_conjecture, run_table, CellStatus, TableMethod};
use wdimk::resolving::{
    build_gy, construct_xt, construct_xt_prime, construct_yn, delta_set, delta_z,
    kappa_bruteforce, kappa_hamming_formula, verify, wdim1_knkn, wdim_exact_bruteforce,
    wdim_formula_knkn, SearchOptions, VertexSet,
};

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn pass(criterion: &str, detail: String) {
    eprintln!("acceptance {criterion}: PASS ({detail})");
}

struct Timer(std::time::Instant);

impl Timer {
    fn start() -> Self {
        Timer(std::time::Instant::now())
    }

    fn done(&self) -> String {
        format!("{:.1}s", self.0.elapsed().as_secs_f64())
    }
}

/// Nonincreasing clique-size tuples (>= 2 factors) with product <= cap.
fn dim_tuples(cap: usize) -> Vec<Vec<u16>> {
    fn rec(out: &mut Vec<Vec<u16>>, cur: &mut Vec<u16>, max: u16, product: usize, cap: usize) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for d in (2..=max).rev() {
            if product * d as usize > cap {
                continue;
            }
            cur.push(d);
            rec(out, cur, d, product * d as usize, cap);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for first in 2..=(cap / 2) as u16 {
        let mut cur = vec![first];
        rec(&mut out, &mut cur, first, first as usize, cap);
    }
    out
}

#[test]
fn criterion_1_kappa_formula() {
    let timer = Timer::start();
    let tuples = dim_tuples(400);
    for dims in &tuples {
        let g = make_hamming(dims).unwrap();
        let brute = kappa_bruteforce(&g) as u64;
        let formula = kappa_hamming_formula(dims).unwrap();
        assert_eq!(brute, formula, "dims {dims:?}");
    }
    // Hypercubes explicitly: kappa(Q_r) = 2^r.
    for r in 1..=5u32 {
        let g = wdimk::graph::make_hypercube(r as u16).unwrap();
        assert_eq!(kappa_bruteforce(&g) as u64, 1u64 << r, "Q_{r}");
    }
    pass(
        "criterion 1 (kappa formula)",
        format!("{} product shapes + Q_1..Q_5, {}", tuples.len(), timer.done()),
    );
}

fn expected_square(n: u16, k: u32) -> u64 {
    if k == 1 {
        wdim1_knkn(n).unwrap()
    } else {
        wdim_formula_knkn(n, k).unwrap()
    }
}

#[test]
fn criterion_2_square_formula_exactness() {
    let timer = Timer::start();
    let search = SearchOptions::default();
    let mut checked = 0;
    for n in [3u16, 4] {
        let g = make_hamming(&[n, n]).unwrap();
        for k in 1..=2 * n as u32 {
            let brute = wdim_exact_bruteforce(&g, k, &search).unwrap().value;
            assert_eq!(brute, expected_square(n, k), "brute n={n} k={k}");
            checked += 1;
        }
    }
    let g = make_hamming(&[5, 5]).unwrap();
    for k in 1..=10u32 {
        let fs = wdim_ilp(&g, k, Formulation::Fs, None, &opts()).unwrap();
        assert!(fs.proved);
        assert_eq!(fs.value, expected_square(5, k), "fs n=5 k={k}");
        let fgh = wdim_ilp(&g, k, Formulation::Fgh, None, &opts()).unwrap();
        assert!(fgh.proved);
        assert_eq!(fgh.value, expected_square(5, k), "fgh n=5 k={k}");
        checked += 1;
    }
    pass(
        "criterion 2 (square formula exactness)",
        format!("{checked} (n, k) cells, brute for n=3,4 and F_s/F_gh for n=5, {}", timer.done()),
    );
}

#[test]
fn criterion_3_table_reproduction() {
    let timer = Timer::start();
    let data = |name: &str| {
        let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
        parse_expected_csv(&std::fs::read_to_string(path).unwrap()).unwrap()
    };
    let cases = [
        (5u16, (5u16, 10u16), (2u32, 10u32), "table1.csv"),
        (6, (6, 8), (2, 12), "table2.csv"),
        (7, (7, 8), (2, 14), "table3.csv"),
        (8, (8, 9), (2, 16), "table4.csv"),
    ];
    let mut mismatches = Vec::new();
    let mut cells = 0;
    for (n, m_range, k_range, file) in cases {
        let expected = data(file);
        let report = run_table(
            n,
            m_range,
            k_range,
            TableMethod::Ilp(Formulation::Fgh),
            Some(&expected),
            &opts(),
        )
        .unwrap();
        cells += report.cells.len();
        assert!(report
            .cells
            .iter()
            .all(|c| c.status == CellStatus::Proved));
        for mm in &report.mismatches {
            // Every disagreement must be backed by a verified witness of
            // our size, i.e. the published number cannot be the optimum.
            let g = make_hamming(&[n, mm.m]).unwrap();
            let ours = wdim_ilp(&g, mm.k, Formulation::Fgh, None, &opts()).unwrap();
            let cert = verify(&g, ours.witness.as_ref().unwrap(), mm.k).unwrap();
            assert!(cert.is_valid() && ours.value == mm.got && ours.value < mm.expected);
            eprintln!(
                "  table {n}: cell (k={}, m={}) computed {} (witness verified), published {}",
                mm.k, mm.m, mm.got, mm.expected
            );
            mismatches.push((n, mm.k, mm.m, mm.got, mm.expected));
        }
    }
    if mismatches.is_empty() {
        pass("criterion 3 (table reproduction)", format!("{cells} cells, {}", timer.done()));
    } else {
        eprintln!(
            "acceptance criterion 3 (table reproduction): FAIL ({} of {cells} cells disagree; \
             every computed value is certificate-backed, so those published entries are not optima; {})",
            mismatches.len(),
            timer.done()
        );
        panic!("published-table mismatches at {mismatches:?}");
    }
}

#[test]
fn criterion_4_formulation_equivalences() {
    let timer = Timer::start();
    let mut pairs_a = 0;
    let mut pairs_b = 0;
    for n in 2..=5u16 {
        for m in n..=5u16 {
            let g = make_hamming(&[n, m]).unwrap();
            let kappa = 2 * n.min(m) as u32;
            for k in 2..=kappa {
                let fs = wdim_ilp(&g, k, Formulation::Fs, None, &opts()).unwrap();
                assert!(fs.proved);
                let fgh = wdim_ilp(&g, k, Formulation::Fgh, None, &opts()).unwrap();
                assert!(fgh.proved);
                assert_eq!(fs.value, fgh.value, "fs vs fgh at n={n} m={m} k={k}");
                pairs_b += 1;
                if k >= 4 {
                    let fsm = wdim_ilp(&g, k, Formulation::FsMinus, None, &opts()).unwrap();
                    assert!(fsm.proved);
                    assert_eq!(fs.value, fsm.value, "fs vs fs- at n={n} m={m} k={k}");
                    pairs_a += 1;
                }
            }
        }
    }
    pass(
        "criterion 4 (formulation equivalences)",
        format!("{pairs_b} F_s=F_gh cells, {pairs_a} F_s=F_s- cells, {}", timer.done()),
    );
}

#[test]
fn criterion_5_construction_certificates() {
    let timer = Timer::start();
    let mut count = 0;
    for n in 3..=12u16 {
        let g = make_hamming(&[n, n]).unwrap();
        for t in 1..=n - 2 {
            let k = 2 * (n - t) as u32;
            let x = construct_xt(&g, t).unwrap();
            assert_eq!(x.len() as u64, n as u64 * (k as u64 / 2), "X_t size n={n} t={t}");
            assert!(verify(&g, &x, k).unwrap().is_valid(), "X_t n={n} t={t}");
            count += 1;
        }
        for t in 0..=n - 3 {
            let k = 2 * (n - t) as u32 - 1;
            let x = construct_xt_prime(&g, t).unwrap();
            assert_eq!(
                x.len() as u64,
                n as u64 * (k as u64).div_ceil(2) - 1,
                "X'_t size n={n} t={t}"
            );
            assert!(verify(&g, &x, k).unwrap().is_valid(), "X'_t n={n} t={t}");
            count += 1;
        }
    }
    for n in 6..=15u16 {
        let g = make_hamming(&[n, n]).unwrap();
        let y = construct_yn(&g).unwrap();
        assert_eq!(y.len() as u64, (4 * n as u64).div_ceil(3), "Y_n size n={n}");
        assert!(verify(&g, &y, 2).unwrap().is_valid(), "Y_n n={n}");
        count += 1;
    }
    pass(
        "criterion 5 (construction certificates)",
        format!("{count} certified sets, {}", timer.done()),
    );
}

#[test]
fn criterion_6_constructions_are_optimal() {
    let timer = Timer::start();
    let search = SearchOptions::default();
    let mut count = 0;
    for n in [3u16, 4, 5] {
        let g = make_hamming(&[n, n]).unwrap();
        let exact = |k: u32| -> u64 {
            if n <= 4 {
                wdim_exact_bruteforce(&g, k, &search).unwrap().value
            } else {
                wdim_ilp(&g, k, Formulation::Fgh, None, &opts()).unwrap().value
            }
        };
        for k in 4..=2 * n as u32 {
            let construction = if k == 2 * n as u32 {
                VertexSet::full(&g)
            } else if k % 2 == 0 {
                construct_xt(&g, n - (k / 2) as u16).unwrap()
            } else {
                construct_xt_prime(&g, n - k.div_ceil(2) as u16).unwrap()
            };
            assert!(verify(&g, &construction, k).unwrap().is_valid());
            assert_eq!(construction.len() as u64, exact(k), "n={n} k={k}");
            count += 1;
        }
    }
    pass(
        "criterion 6 (constructions are optimal)",
        format!("{count} (n, k) cells, {}", timer.done()),
    );
}

/// Splitmix64; deterministic seeds keep the suite reproducible.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn bit(&mut self) -> bool {
        self.next() & 1 == 1
    }
}

#[test]
fn criterion_7_property_suites() {
    let timer = Timer::start();
    // Coefficient consistency, exhaustive for nm <= 100.
    let mut triples = 0u64;
    for n in 2..=10u16 {
        for m in n..=10u16 {
            if n as usize * m as usize > 100 {
                continue;
            }
            let g = make_hamming(&[n, m]).unwrap();
            let nm = g.vertex_count() as u32;
            for u in 0..nm {
                for v in (u + 1)..nm {
                    for w in 0..nm {
                        let a = coefficient_a(&g, VertexId(u), VertexId(v), VertexId(w)).unwrap();
                        let d = (g.dist(VertexId(u), VertexId(w)) as i32
                            - g.dist(VertexId(v), VertexId(w)) as i32)
                            .abs();
                        assert_eq!(a as i32, d);
                        triples += 1;
                    }
                }
            }
        }
    }

    // Delta symmetry and the distance bound, exhaustive on small graphs.
    for g in [
        make_hamming(&[3, 3]).unwrap(),
        make_hamming(&[5, 4]).unwrap(),
        wdimk::graph::make_hypercube(4).unwrap(),
    ] {
        let nv = g.vertex_count() as u32;
        for z in 0..nv {
            for x in 0..nv {
                for y in 0..nv {
                    let (z, x, y) = (VertexId(z), VertexId(x), VertexId(y));
                    assert_eq!(delta_z(&g, z, x, y), delta_z(&g, z, y, x));
                    assert!(delta_z(&g, z, x, y) <= g.dist(x, y) as u32);
                }
            }
        }
    }

    // Monotonicity in S on random nested pairs.
    let g = make_hamming(&[4, 4]).unwrap();
    let mut rng = Rng(7);
    for _ in 0..200 {
        let small: Vec<VertexId> = (0..16).filter(|_| rng.bit()).map(VertexId).collect();
        let mut large = small.clone();
        for v in 0..16u32 {
            if !large.contains(&VertexId(v)) && rng.bit() {
                large.push(VertexId(v));
            }
        }
        let s = VertexSet::new(&g, small).unwrap();
        let t = VertexSet::new(&g, large).unwrap();
        for x in 0..16u32 {
            for y in (x + 1)..16 {
                let (x, y) = (VertexId(x), VertexId(y));
                assert!(delta_set(&g, &s, x, y).unwrap() <= delta_set(&g, &t, x, y).unwrap());
            }
        }
    }

    // Certificate nesting: valid at k implies valid at every smaller k,
    // hence the exact value is nondecreasing in k.
    let search = SearchOptions::default();
    for dims in [[3u16, 3], [4, 3]] {
        let g = make_hamming(&dims).unwrap();
        let kappa = kappa_bruteforce(&g);
        let mut prev = 0u64;
        for k in 1..=kappa {
            let r = wdim_exact_bruteforce(&g, k, &search).unwrap();
            assert!(r.value >= prev);
            prev = r.value;
            let cert = verify(&g, r.witness.as_ref().unwrap(), k).unwrap();
            assert!(cert.is_valid());
            for smaller in 1..=k {
                assert!(cert.min_value() >= smaller);
            }
        }
    }

    // Reduction identity on 1000 random assignments per non-aligned pair
    // of K_4 [] K_4.
    let g = make_hamming(&[4, 4]).unwrap();
    let m = 4u32;
    let mut rng = Rng(42);
    let mut pairs = 0;
    for u in 0..16u32 {
        for v in (u + 1)..16 {
            let (iu, ju) = (u / m, u % m);
            let (iv, jv) = (v / m, v % m);
            if (iu == iv) != (ju == jv) {
                continue; // aligned
            }
            let ut = VertexId(iu * m + jv);
            let vt = VertexId(iv * m + ju);
            let (u, v) = (VertexId(u), VertexId(v));
            let iuv = index_set_iuv(&g, u, v).unwrap();
            let iuvt = index_set_iuv(&g, u.min(vt), u.max(vt)).unwrap();
            let iuut = index_set_iuv(&g, u.min(ut), u.max(ut)).unwrap();
            pairs += 1;
            for _ in 0..1000 {
                let assignment: Vec<u32> = (0..16).map(|_| u32::from(rng.bit())).collect();
                let total = |set: &VertexSet| -> i64 {
                    set.members()
                        .iter()
                        .map(|w| assignment[w.index()] as i64)
                        .sum()
                };
                let s_at = |w: VertexId| assignment[w.index()] as i64;
                assert_eq!(
                    total(&iuv),
                    total(&iuvt) + total(&iuut) - 2 * s_at(v) - s_at(ut) - s_at(vt)
                );
            }
        }
    }
    assert_eq!(pairs, 72);

    // LP round-trip structural identity on 20 models.
    let mut models = Vec::new();
    for (n, m) in [(2u16, 2u16), (3, 3), (3, 4), (4, 5), (5, 5)] {
        let g = make_hamming(&[n, m]).unwrap();
        let kappa = 2 * n.min(m) as u32;
        models.push(build_fs(&g, 1).unwrap());
        models.push(build_fs(&g, kappa).unwrap());
        models.push(build_fgh(&g, 2).unwrap());
        if kappa >= 4 {
            models.push(build_fs_minus(&g, 4).unwrap());
        } else {
            models.push(build_fgh(&g, kappa).unwrap());
        }
    }
    assert_eq!(models.len(), 20);
    for model in &models {
        let back = parse_lp_str(&to_lp_string(model)).unwrap();
        assert_eq!(*model, back);
    }

    // G_Y structure of every computed weak-2 basis for n in {6,7,8}.
    for n in [6u16, 7, 8] {
        let g = make_hamming(&[n, n]).unwrap();
        let r = wdim_ilp(&g, 2, Formulation::Fgh, None, &opts()).unwrap();
        assert!(r.proved);
        let gy = build_gy(&g, r.witness.as_ref().unwrap()).unwrap();
        assert_eq!(gy.edge_count() as u64, r.value);
        assert!(!gy.has_isolated(), "n={n}");
        assert!(!gy.has_k2_component(), "n={n}");
    }

    pass(
        "criterion 7 (property suites)",
        format!("{triples} coefficient triples, 72 reduction pairs x 1000, 20 LP round-trips, {}", timer.done()),
    );
}

#[test]
fn criterion_8_conjecture_audit() {
    let timer = Timer::start();
    // Exact agreement with the closed form for k >= 3.
    let mut agree = 0;
    for n in [3u16, 4, 5] {
        let report = run_conjecture(n, (n + 1, 8), (3, 2 * n as u32), &opts()).unwrap();
        for cell in &report.cells {
            assert_eq!(
                Some(cell.ilp),
                cell.formula,
                "n={n} m={} k={}",
                cell.m,
                cell.k
            );
            assert_eq!(cell.agrees, Some(true));
            agree += 1;
        }
    }

    // k = 2 at n = 5: the audit must flag deviations for every m in 6..8.
    let report = run_conjecture(5, (6, 8), (2, 2), &opts()).unwrap();
    let mut flagged = Vec::new();
    for cell in &report.cells {
        assert_eq!(cell.formula, Some(cell.m as u64));
        if cell.agrees == Some(false) {
            flagged.push(cell.m);
        }
        eprintln!(
            "  conjecture audit n=5 k=2 m={}: exact {} vs conjectured {} -> {}",
            cell.m,
            cell.ilp,
            cell.m,
            if cell.agrees == Some(false) {
                "deviation"
            } else {
                "agreement"
            }
        );
    }
    if flagged == vec![6, 7, 8] {
        pass(
            "criterion 8 (conjecture audit)",
            format!("{agree} k>=3 cells agree; k=2 deviations at m=6,7,8, {}", timer.done()),
        );
    } else {
        eprintln!(
            "acceptance criterion 8 (conjecture audit): FAIL (k>=3: all {agree} cells agree; \
             k=2 deviations found at m={flagged:?}, the documented set is m=[6, 7, 8] — the \
             certificate-backed optimum at m=8 equals the conjectured value, so the recorded \
             deviation there is refuted; {})",
            timer.done()
        );
        panic!("k=2 deviation pattern at n=5 is {flagged:?}, not [6, 7, 8]");
    }
}
