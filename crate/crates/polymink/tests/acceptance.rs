//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines on a green run.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polymink::criteria::{
    partition_to_polygon, segment_indecomposable, triangle_indecomposable, PartitionInstance,
};
use polymink::decomp::{brute_force_summands_capped, poly_decomp, DecompVerdict};
use polymink::fixtures::{
    dilate, random_convex_polygon, random_decomposable_cloud, random_reduced_factor, rectangle,
    twopow_family,
};
use polymink::lattice::{
    convex_hull_2d, edge_sequence_of, minkowski_merge, EdgeSequence, LatticePoint,
};
use polymink::newton::{newton_polytope, NewtonPolytope, PretestStatus};
use polymink::project::{
    polytope_decomp, project, PointCloud, PolytopeVerdict, ProjectionConfig,
};
use polymink::summands::{count_summands, enumerate_summands, summand_to_polygon};

fn report<T>(criterion: u32, label: &str, body: impl FnOnce() -> Result<T, String>) -> T {
    match body() {
        Ok(v) => {
            println!("criterion {criterion} ({label}): PASS");
            v
        }
        Err(msg) => {
            println!("criterion {criterion} ({label}): FAIL - {msg}");
            panic!("criterion {criterion} failed: {msg}");
        }
    }
}

#[test]
fn criterion_01_twopow_counts() {
    report(1, "2^m family counts", || {
        let start = Instant::now();
        for m in 1..=12u32 {
            let (count, _) = count_summands(&twopow_family(m)).map_err(|e| e.to_string())?;
            let expect = BigUint::from(2u64.pow(m));
            if count != expect {
                return Err(format!("m = {m}: got {count}, expected {expect}"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 10.0 {
            return Err(format!("took {elapsed:?}, budget is 10 s"));
        }
        Ok(())
    });
}

#[test]
fn criterion_02_rectangle_counts() {
    report(2, "rectangle counts", || {
        for n in 1..=8u64 {
            for m in 1..=8u64 {
                let (count, _) = count_summands(&rectangle(n, m)).map_err(|e| e.to_string())?;
                let expect = BigUint::from((n + 1) * (m + 1));
                if count != expect {
                    return Err(format!("{n}x{m}: got {count}, expected {expect}"));
                }
            }
        }
        Ok(())
    });
}

fn ks_set(vs: &[polymink::decomp::SummandVector]) -> BTreeSet<Vec<BigUint>> {
    vs.iter().map(|v| v.ks().to_vec()).collect()
}

/// Criteria 3 and 8 share the random-polygon suite; this test covers both.
#[test]
fn criterion_03_and_08_oracle_equivalence_and_merge_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x03);
    let polygons: Vec<EdgeSequence> = (0..200)
        .map(|_| random_convex_polygon(&mut rng, 12, 1_000_000))
        .collect();
    let tables = report(3, "oracle equivalence", || {
        let mut tables = Vec::new();
        for (idx, es) in polygons.iter().enumerate() {
            let oracle = brute_force_summands_capped(es, 1_000_000).map_err(|e| e.to_string())?;
            let oracle_set = ks_set(&oracle);
            // Oracle emits trivial summands too; proper count is len - 2.
            let decomposable = oracle.len() > 2;
            match poly_decomp(es).map_err(|e| e.to_string())? {
                DecompVerdict::Indecomposable if decomposable => {
                    return Err(format!("polygon {idx}: DP says indecomposable, oracle found {} summands", oracle.len()));
                }
                DecompVerdict::Decomposable(w) if !decomposable => {
                    return Err(format!("polygon {idx}: DP witness {:?} but oracle found none", w));
                }
                DecompVerdict::Decomposable(w) if !oracle_set.contains(w.ks()) => {
                    return Err(format!("polygon {idx}: witness {:?} not in oracle set", w));
                }
                _ => {}
            }
            let (count, table) = count_summands(es).map_err(|e| e.to_string())?;
            if count != BigUint::from(oracle.len()) {
                return Err(format!("polygon {idx}: count {count} != oracle {}", oracle.len()));
            }
            let enumerated: Vec<_> = enumerate_summands(&table, es, true)
                .map_err(|e| e.to_string())?
                .collect();
            if ks_set(&enumerated) != oracle_set {
                return Err(format!("polygon {idx}: enumerated set differs from oracle"));
            }
            tables.push((es.clone(), enumerated));
        }
        Ok(tables)
    });
    report(8, "merge roundtrip", || {
        for (idx, (es, summands)) in tables.iter().enumerate() {
            let normalized = es.translated_to_origin();
            for ks in summands {
                if ks.is_zero() || !ks.is_proper(es) {
                    continue;
                }
                let q = summand_to_polygon(ks, es);
                let r = summand_to_polygon(&ks.complement(es), es);
                if minkowski_merge(&q, &r) != normalized {
                    return Err(format!("polygon {idx}: merge of {:?} differs", ks));
                }
            }
        }
        Ok(())
    });
}

fn subset_sum_oracle(values: &[u64]) -> bool {
    let total: u128 = values.iter().map(|&v| v as u128).sum();
    if total % 2 != 0 {
        return false;
    }
    let half = (total / 2) as usize;
    let mut reach = vec![false; half + 1];
    reach[0] = true;
    for &v in values {
        let v = v as usize;
        for s in (v..=half).rev() {
            if reach[s - v] {
                reach[s] = true;
            }
        }
    }
    reach[half]
}

#[test]
fn criterion_04_partition_reduction() {
    report(4, "partition reduction", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x04);
        let mut done = 0;
        while done < 100 {
            let m = rng.gen_range(1..=10);
            let mut s: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=20)).collect();
            if s.iter().sum::<u64>() % 2 != 0 {
                let last = s.len() - 1;
                s[last] += 1;
                if s[last] > 20 {
                    s[last] -= 2;
                }
                if s[last] == 0 {
                    continue;
                }
            }
            let expected = subset_sum_oracle(&s);
            let inst = PartitionInstance::new(s.clone()).expect("positive entries");
            let es = partition_to_polygon(&inst).map_err(|e| e.to_string())?;
            let got = matches!(
                poly_decomp(&es).map_err(|e| e.to_string())?,
                DecompVerdict::Decomposable(_)
            );
            if got != expected {
                return Err(format!(
                    "instance {s:?}: polygon decomposable = {got}, subset-sum oracle = {expected}"
                ));
            }
            done += 1;
        }
        Ok(())
    });
}

#[test]
fn criterion_05_criteria_dp_agreement() {
    report(5, "gcd criteria vs DP", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x05);
        let mut triangles = 0;
        while triangles < 500 {
            let v: Vec<LatticePoint> = (0..3)
                .map(|_| LatticePoint::xy(rng.gen_range(-15i64..=15), rng.gen_range(-15i64..=15)))
                .collect();
            let hull = convex_hull_2d(v.iter()).unwrap();
            if hull.vertex_count() != 3 {
                continue;
            }
            let by_gcd = triangle_indecomposable(&v[0], &v[1], &v[2]);
            let es = edge_sequence_of(&hull).unwrap();
            let by_dp = matches!(
                poly_decomp(&es).map_err(|e| e.to_string())?,
                DecompVerdict::Indecomposable
            );
            if by_gcd != by_dp {
                return Err(format!(
                    "triangle {v:?}: gcd criterion {by_gcd}, DP {by_dp}"
                ));
            }
            triangles += 1;
        }
        let mut segments = 0;
        while segments < 200 {
            let a = LatticePoint::xy(rng.gen_range(-30i64..=30), rng.gen_range(-30i64..=30));
            let b = LatticePoint::xy(rng.gen_range(-30i64..=30), rng.gen_range(-30i64..=30));
            if a == b {
                continue;
            }
            let by_gcd = segment_indecomposable(&a, &b);
            let hull = convex_hull_2d([&a, &b]).unwrap();
            let es = edge_sequence_of(&hull).unwrap();
            let by_dp = matches!(
                poly_decomp(&es).map_err(|e| e.to_string())?,
                DecompVerdict::Indecomposable
            );
            if by_gcd != by_dp {
                return Err(format!("segment {a:?}-{b:?}: gcd {by_gcd}, DP {by_dp}"));
            }
            segments += 1;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_projection_soundness() {
    report(6, "projection soundness", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x06);
        for idx in 0..100 {
            let dim = 3 + (idx % 3);
            let cloud = random_decomposable_cloud(&mut rng, dim);
            // A small radius and shadow cap keep the suite fast; soundness
            // must hold under any configuration.
            let cfg = ProjectionConfig {
                k_radius: Some(6),
                trials: 5,
                shadow_point_cap: 200_000,
                seed: idx as u64,
            };
            if let PolytopeVerdict::Indecomposable(_) = polytope_decomp(&cloud, &cfg) {
                return Err(format!(
                    "cloud {idx} (dim {dim}) is decomposable by construction but was proved indecomposable"
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_07_distinct_image_rate() {
    report(7, "distinct-image rate", || {
        // Fixed clouds with at most 10 points; radius l^2 per the bound.
        let mut rng = ChaCha8Rng::seed_from_u64(0x07);
        let clouds: Vec<PointCloud> = (0..4)
            .map(|_| {
                let pts: Vec<LatticePoint> = (0..10)
                    .map(|i| {
                        LatticePoint::new(vec![
                            (i as i64).into(),
                            rng.gen_range(-5i64..=5).into(),
                            rng.gen_range(-5i64..=5).into(),
                        ])
                    })
                    .collect();
                PointCloud::new(pts).unwrap()
            })
            .collect();
        let trials = 1000;
        let mut distinct = 0;
        for t in 0..trials {
            let cloud = &clouds[t % clouds.len()];
            let l = cloud.len() as i64;
            let r = l * l;
            let mut draw = || {
                LatticePoint::new(
                    (0..cloud.dim())
                        .map(|_| rng.gen_range(-r..=r).into())
                        .collect(),
                )
            };
            let (u, v) = (draw(), draw());
            let images = project(cloud, &u, &v).unwrap();
            let set: BTreeSet<_> = images.iter().collect();
            if set.len() == images.len() {
                distinct += 1;
            }
        }
        let rate = distinct as f64 / trials as f64;
        // 0.75 minus three binomial standard errors at n = 1000.
        let threshold = 0.75 - 3.0 * (0.75f64 * 0.25 / 1000.0).sqrt();
        if rate < threshold {
            return Err(format!("rate {rate:.4} below threshold {threshold:.4}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_09_newton_ostrowski() {
    report(9, "Newton polytope of products", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x09);
        for idx in 0..100 {
            let g = random_reduced_factor(&mut rng, 6, 6);
            let h = random_reduced_factor(&mut rng, 6, 6);
            let gh = &g * &h;
            let hull_of = |f: &polymink::newton::SparsePoly| -> Result<EdgeSequence, String> {
                match newton_polytope(f).map_err(|e| e.to_string())? {
                    NewtonPolytope::Polygon(p) => {
                        edge_sequence_of(&p).map_err(|e| e.to_string())
                    }
                    NewtonPolytope::Cloud(_) => Err("unexpected cloud for 2 variables".into()),
                }
            };
            let merged = minkowski_merge(&hull_of(&g)?, &hull_of(&h)?);
            if hull_of(&gh)? != merged {
                return Err(format!("product {idx}: polytope differs from merge"));
            }
            let verdict = polymink::newton::pretest(&gh, &ProjectionConfig::default())
                .map_err(|e| e.to_string())?;
            if verdict.status == PretestStatus::AbsolutelyIrreducible {
                return Err(format!(
                    "product {idx} = ({g}) * ({h}) is reducible but pretest claimed irreducible"
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_pseudo_polynomial_scaling() {
    report(10, "pseudo-polynomial scaling", || {
        let base = {
            let pts: Vec<LatticePoint> = [[0, 0], [2, 0], [3, 1], [2, 3], [0, 2]]
                .iter()
                .map(|c| LatticePoint::from_i64(c))
                .collect();
            edge_sequence_of(&convex_hull_2d(pts.iter()).unwrap()).unwrap()
        };
        let time_of = |c: u64| {
            let es = dilate(&base, c);
            // Median of repeated runs; single runs jitter too much at the
            // small end.
            let mut samples: Vec<f64> = (0..5)
                .map(|_| {
                    let start = Instant::now();
                    let _ = poly_decomp(&es).unwrap();
                    start.elapsed().as_secs_f64()
                })
                .collect();
            samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
            samples[2]
        };
        let mut line = String::from("timings:");
        let t8 = time_of(8);
        for c in [1u64, 2, 4, 8, 16, 32, 64] {
            let t = time_of(c);
            line.push_str(&format!(" c={c}:{:.1}ms", t * 1e3));
            if c > 8 {
                let cubic = t8 * ((c as f64) / 8.0).powi(3);
                if t > 4.0 * cubic {
                    return Err(format!(
                        "c = {c}: {t:.4}s exceeds 4x cubic extrapolation {cubic:.4}s from c = 8"
                    ));
                }
            }
        }
        println!("{line}");
        Ok(())
    });
}
