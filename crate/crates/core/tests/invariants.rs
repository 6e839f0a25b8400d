//! Structural invariants checked exhaustively on small ranks against independent oracles.

use std::collections::BTreeSet;

use dyck_cluster::*;

/// Every word in {U, D}^{2n}, filtered by the height condition.
fn dyck_brute_force(n: usize) -> BTreeSet<String> {
    (0u32..1 << (2 * n))
        .filter_map(|bits| {
            let mut h = 0i32;
            let mut s = String::with_capacity(2 * n);
            for k in (0..2 * n).rev() {
                let up = bits >> k & 1 == 1;
                h += if up { 1 } else { -1 };
                if h < 0 {
                    return None;
                }
                s.push(if up { 'U' } else { 'D' });
            }
            (h == 0).then_some(s)
        })
        .collect()
}

#[test]
fn dyck_enumeration_matches_brute_force() {
    for n in 1..=8 {
        let got: BTreeSet<String> = enumerate_dyck(n).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(got, dyck_brute_force(n), "n = {n}");
    }
}

#[test]
fn s_is_the_set_of_single_run_paths() {
    for n in 2..=8 {
        let s: BTreeSet<PeakPath> = enumerate_s(n).unwrap().into_iter().collect();
        let filtered: BTreeSet<PeakPath> = enumerate_dyck(n).unwrap().iter().filter_map(PeakPath::from_dyck).collect();
        assert_eq!(s, filtered);
        for y in &s {
            assert_eq!(support(&y.pair_form()), (y.l()..=y.r()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn shift_successors_equal_knitted_arrows() {
    for n in 2..=7 {
        for c in AdmissibleSubchain::all(n) {
            let ar = ar_quiver(&c).unwrap();
            let knitted: BTreeSet<(PeakPath, PeakPath)> =
                ar.arrows.iter().map(|&(a, b)| (ar.vertices[a], ar.vertices[b])).collect();
            let mut shifted = BTreeSet::new();
            for y in enumerate_s(n).unwrap() {
                for arrow in es_successors(&y, &c).unwrap() {
                    assert_eq!(arrow.source, y);
                    // Replaying the composition reaches the target.
                    let pf = arrow.composition.iter().try_fold(y.pair_form(), |pf, &i| unitary_shift(&pf, i)).unwrap();
                    assert_eq!(pf, arrow.target.pair_form(), "{c}: {y} -> {}", arrow.target);
                    shifted.insert((arrow.source, arrow.target));
                }
            }
            assert_eq!(shifted, knitted, "{c}");
        }
    }
}

#[test]
fn theta_is_a_bijection_onto_indecomposables() {
    for n in 2..=8 {
        for c in AdmissibleSubchain::all(n) {
            let q = quiver_from_subchain(&c);
            let mut images = BTreeSet::new();
            for y in enumerate_s(n).unwrap() {
                let rep = theta(&y, &c).unwrap();
                assert_eq!(theta_inverse(rep.dims(), &c).unwrap(), y);
                images.insert(rep.dims().to_vec());
            }
            let indec: BTreeSet<Vec<usize>> = indecomposables(&q).iter().map(|r| r.dims().to_vec()).collect();
            assert_eq!(images, indec, "{c}");
        }
    }
}

#[test]
fn projectives_and_injectives_agree_with_the_quiver() {
    for n in 2..=7 {
        for c in AdmissibleSubchain::all(n) {
            let q = quiver_from_subchain(&c);
            for x in 1..n {
                let p = projective(x, &c).unwrap();
                let i = injective(x, &c).unwrap();
                assert_eq!((p.l(), p.r()), q.reachable_from(x), "{c}: P({x})");
                assert_eq!((i.l(), i.r()), q.reaching(x), "{c}: I({x})");
                assert_eq!(simple(x, &c).unwrap(), PeakPath::new(n, x, x).unwrap());
            }
        }
    }
}

#[test]
fn ar_quivers_are_connected_and_translate_like_coxeter() {
    for n in 2..=8 {
        for c in AdmissibleSubchain::all(n) {
            assert!(connected(&c).unwrap(), "{c}");
            let ar = ar_quiver(&c).unwrap();
            assert!(ar.meshes_commute() && ar.is_acyclic(), "{c}");
            assert_eq!(ar.projectives().len(), n - 1);
            assert_eq!(ar.injectives().len(), n - 1);
            let q = quiver_from_subchain(&c);
            for (v, y) in ar.vertices.iter().enumerate() {
                let dims = theta(y, &c).unwrap().dims().to_vec();
                let expected = match coxeter_translate(&dims, &q).unwrap() {
                    Translate::ProjectiveHit => None,
                    Translate::Module(d) => Some(theta_inverse(&d, &c).unwrap()),
                };
                assert_eq!(ar.tau(v).map(|t| ar.vertices[t]), expected, "{c}: tau({y})");
            }
        }
    }
}

#[test]
fn transfer_count_matches_enumeration() {
    use SnakeStep::{Above, RightOf};
    // All step sequences up to d = 12, then a few long ones.
    for d in 1..=12usize {
        for mask in 0u32..1 << (d - 1) {
            let steps: Vec<SnakeStep> = (0..d - 1).map(|k| if mask >> k & 1 == 1 { Above } else { RightOf }).collect();
            let g = SnakeGraph::new(steps);
            let matchings = enumerate_matchings(&g);
            assert!(matchings.iter().all(|p| p.is_matching_of(&g)));
            assert_eq!(matchings.len() as u128, count_matchings_transfer(&g), "mask {mask:b}");
        }
    }
    for d in [16usize, 20] {
        let zigzag: Vec<SnakeStep> = (0..d - 1).map(|k| if k % 2 == 0 { Above } else { RightOf }).collect();
        let straight = vec![RightOf; d - 1];
        for steps in [zigzag, straight] {
            let g = SnakeGraph::new(steps);
            assert_eq!(enumerate_matchings(&g).len() as u128, count_matchings_transfer(&g));
        }
    }
}

#[test]
fn straight_snakes_count_fibonacci() {
    let (mut a, mut b) = (1u128, 2u128);
    for d in 1..=60 {
        assert_eq!(count_matchings_transfer(&SnakeGraph::new(vec![SnakeStep::RightOf; d - 1])), b, "d = {d}");
        (a, b) = (b, a + b);
    }
}

#[test]
fn restricted_words_match_sub_snakes() {
    for n in 3..=8 {
        for c in AdmissibleSubchain::all(n) {
            let g = snake_from_subchain(&c);
            for y in enumerate_s(n).unwrap() {
                let words = restricted_words(&y, &c).unwrap();
                let sub = g.sub_snake(y.l(), y.r()).unwrap();
                assert_eq!(words.len() as u128, count_matchings_transfer(&sub), "{c}: {y}");
            }
        }
    }
}

#[test]
fn mirrored_snake_gives_the_same_words() {
    for n in 3..=8 {
        for c in AdmissibleSubchain::all(n) {
            let mut right = LabeledSnake::with_first_step(&c, SnakeStep::RightOf).unwrap().words().unwrap();
            let mut above = LabeledSnake::with_first_step(&c, SnakeStep::Above).unwrap().words().unwrap();
            right.sort();
            above.sort();
            assert_eq!(right, above, "{c}");
        }
    }
}

#[test]
fn words_determine_matchings() {
    for n in 3..=9 {
        for c in AdmissibleSubchain::all(n) {
            let words = words_x_c(&c).unwrap();
            let distinct: BTreeSet<&HWord> = words.iter().collect();
            assert_eq!(distinct.len(), words.len(), "{c}");
            let all_e = words.iter().filter(|w| w.letters().iter().all(|&l| l == Letter::E)).count();
            assert!(all_e <= 1, "{c}");
        }
    }
}

#[test]
fn dyck_variables_are_positive_with_denominator_eta() {
    for n in 3..=8 {
        for c in AdmissibleSubchain::all(n) {
            for (y, x) in dyck_cluster_variables(&c).unwrap() {
                assert!(x.has_positive_coefficients(), "{c}: {y} -> {x}");
                let eta_exps: Vec<i32> = eta(&y).terms().next().unwrap().0.clone();
                assert_eq!(eta(&y).len(), 1);
                assert_eq!(x.numerator_denominator().1, eta_exps, "{c}: {y} -> {x}");
            }
        }
    }
}

#[test]
fn dyck_formula_is_injective() {
    for n in 3..=8 {
        for c in AdmissibleSubchain::all(n) {
            let vars = dyck_cluster_variables(&c).unwrap();
            let distinct: BTreeSet<&LaurentPoly> = vars.iter().map(|(_, x)| x).collect();
            assert_eq!(distinct.len(), n * (n - 1) / 2, "{c}");
        }
    }
}

#[test]
fn nakayama_vertex_count_is_the_kupisch_sum() {
    for semilength in 1..=7 {
        let mut series = BTreeSet::new();
        for p in enumerate_dyck(semilength).unwrap() {
            let k = kupisch_from_dyck(&p).unwrap();
            assert!(k.is_connected());
            assert_eq!(dyck_from_kupisch(&k).unwrap(), p);
            let ar = ar_quiver_nakayama(&k).unwrap();
            assert_eq!(ar.vertices.len(), k.entries().iter().sum::<usize>(), "{k}");
            assert!(ar.meshes_commute() && ar.is_acyclic() && ar.is_connected(), "{k}");
            assert_eq!(ar.projectives().len(), k.m());
            series.insert(k.entries().to_vec());
        }
        assert_eq!(series.len(), enumerate_dyck(semilength).unwrap().len());
    }
}

#[test]
fn connected_series_match_dyck_paths() {
    // Built right to left: the last entry is 1 and each earlier one lies in 2..=next + 1.
    fn extend(suffix: &mut Vec<usize>, m: usize, out: &mut BTreeSet<Vec<usize>>) {
        if suffix.len() == m {
            out.insert(suffix.iter().rev().copied().collect());
            return;
        }
        for c in 2..=suffix.last().unwrap() + 1 {
            suffix.push(c);
            extend(suffix, m, out);
            suffix.pop();
        }
    }
    for m in 2..=8 {
        let mut brute = BTreeSet::new();
        extend(&mut vec![1], m, &mut brute);
        let via_paths: BTreeSet<Vec<usize>> =
            enumerate_dyck(m - 1).unwrap().iter().map(|p| kupisch_from_dyck(p).unwrap().entries().to_vec()).collect();
        assert_eq!(brute, via_paths, "m = {m}");
    }
}

#[test]
fn cluster_counts_for_every_orientation() {
    for m in 1..=5 {
        for c in AdmissibleSubchain::all(m + 1) {
            let vars = enumerate_cluster_variables(&quiver_from_subchain(&c)).unwrap();
            assert_eq!(vars.len(), type_a_variable_count(m), "{c}");
        }
    }
}
