//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime. Run with `cargo test -p posetflow --test acceptance --
//! --nocapture` to see them.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use posetflow::families::{
    boolean_lattice, check_absolute_reverse_refinement, decompose_copies, stirling_row,
    symmetric_group_refinement, StirlingKind, StirlingTable,
};
use posetflow::flownet::{
    brute_force_min_vertex_cut, max_flow, min_flow, nmc_bruteforce, normalized_flow, Network,
};
use posetflow::gen::{random_bipartite, random_dag_network, random_graded_poset};
use posetflow::morphism::{collapse_network_to_chain, collapse_to_chain, collapse_to_two_chain};
use posetflow::poset::GradedPoset;
use posetflow::scalar::sum;
use posetflow::sperner::{check_nfp, erdos_k_width_formula, proof_inequality, width};
use posetflow::{Poset, Weight};

fn big(v: i64) -> Weight {
    BigInt::from(v)
}

fn finish(criterion: usize, budget: Duration, started: Instant, detail: &str) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS — {detail} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_s4_levels_and_copy_decomposition() {
    let started = Instant::now();
    let (group, decomposition) = decompose_copies::<Weight>(4).unwrap();
    let weights = group.poset.level_weights();
    assert_eq!(weights, vec![big(6), big(11), big(6), big(1)]);
    for copy in 1..decomposition.raised_copy() {
        assert_eq!(decomposition.copy_members(copy).len(), 6, "copy {copy}");
    }
    finish(
        1,
        Duration::from_secs(1),
        started,
        "S_4 levels [6, 11, 6, 1] and three lower copies of 6 elements",
    );
}

#[test]
fn criterion_02_symmetric_group_widths_match_the_largest_rank() {
    let started = Instant::now();
    let mut details = Vec::new();
    for n in 2..=7usize {
        let group = symmetric_group_refinement::<Weight>(n).unwrap();
        let (w, witness) = width(&group.poset).unwrap();
        let row: Vec<Weight> = stirling_row(StirlingKind::First, n);
        let max_entry = row.iter().max().unwrap().clone();
        assert_eq!(w, max_entry, "width(S_{n}) must be the largest rank size");
        witness.validate(&group.poset).unwrap();
        details.push(format!("S_{n}={w}"));
    }
    finish(
        2,
        Duration::from_secs(120),
        started,
        &format!(
            "widths via MinFlow equal max Stirling entries: {}",
            details.join(" ")
        ),
    );
}

#[test]
fn criterion_03_normalized_flow_property_of_s_n() {
    let started = Instant::now();
    for n in 2..=6usize {
        let group = symmetric_group_refinement::<Weight>(n).unwrap();
        let report = check_nfp(&group.poset).unwrap();
        assert_eq!(report.pairs.len(), n - 1);
        for pair in &report.pairs {
            assert!(
                pair.feasible,
                "S_{n} rank pair [{}, {}] rejected a normalized flow",
                pair.lower_rank,
                pair.lower_rank + 1
            );
        }
    }
    finish(
        3,
        Duration::from_secs(120),
        started,
        "every consecutive rank pair of S_2..S_6 accepts a normalized flow",
    );
}

#[test]
fn criterion_04_sperner_theorem_regression() {
    let started = Instant::now();
    for n in 0..=12usize {
        let lattice: Poset = boolean_lattice(n).unwrap();
        let (w, _) = width(&lattice).unwrap();
        let mut binomial = vec![Weight::from(1u8)];
        for _ in 0..n {
            let mut next = vec![Weight::from(1u8)];
            for i in 1..binomial.len() {
                next.push(binomial[i - 1].clone() + binomial[i].clone());
            }
            next.push(Weight::from(1u8));
            binomial = next;
        }
        assert_eq!(w, binomial[n / 2], "width(B_{n})");
    }
    finish(
        4,
        Duration::from_secs(60),
        started,
        "width(B_n) = C(n, n/2) for n = 0..12 via MinFlow",
    );
}

#[test]
fn criterion_05_oracle_equivalence() {
    let started = Instant::now();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
    for trial in 0..200 {
        let poset: Poset = random_graded_poset(&mut rng, 15, 9);
        let (flow_width, witness) = width(&poset).unwrap();
        let oracle = poset.brute_force_width().unwrap();
        assert_eq!(flow_width, oracle.total_weight, "trial {trial}");
        witness.validate(&poset).unwrap();
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0055);
    for trial in 0..200 {
        let network: Network<Weight> = random_dag_network(&mut rng, 14, 9);
        let outcome = max_flow(&network).unwrap();
        let oracle = brute_force_min_vertex_cut(&network).unwrap();
        assert_eq!(outcome.value, oracle, "trial {trial}");
    }

    finish(
        5,
        Duration::from_secs(60),
        started,
        "200 random posets: MinFlow = oracle width; 200 random DAGs: MaxFlow = oracle min cut",
    );
}

#[test]
fn criterion_06_nmc_normalized_flow_duality() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0006);
    let mut feasible_count = 0usize;
    for trial in 0..200 {
        let (s_weights, t_weights, edges): (Vec<Weight>, Vec<Weight>, _) =
            random_bipartite(&mut rng, 10, 9);
        let flow = normalized_flow(&s_weights, &t_weights, &edges).unwrap();
        let nmc = nmc_bruteforce(&s_weights, &t_weights, &edges).unwrap();
        assert_eq!(
            flow.feasible, nmc.holds,
            "trial {trial}: flow feasibility and NMC disagree"
        );
        if flow.feasible {
            feasible_count += 1;
        } else {
            // The counterexample genuinely violates the weighted condition.
            let xs = nmc.counterexample.unwrap();
            let wx = sum(xs.iter().map(|&i| &s_weights[i]));
            let mut d = vec![false; t_weights.len()];
            for &(tail, head) in &edges {
                if xs.contains(&tail) {
                    d[head] = true;
                }
            }
            let wd = sum((0..t_weights.len())
                .filter(|&j| d[j])
                .map(|j| &t_weights[j]));
            let ws = sum(s_weights.iter());
            let wt = sum(t_weights.iter());
            assert!(
                wx * wt > wd * ws,
                "trial {trial}: counterexample is not violating"
            );
        }
    }
    assert!(
        feasible_count > 0 && feasible_count < 200,
        "trials must mix outcomes"
    );
    finish(
        6,
        Duration::from_secs(30),
        started,
        &format!("200 random bipartite instances agree ({feasible_count} feasible)"),
    );
}

#[test]
fn criterion_07_morphism_suite() {
    let started = Instant::now();
    for n in 2..=4usize {
        let collapse = collapse_to_two_chain::<Weight>(n).unwrap();
        let mut two_chain = collapse.morphism;
        assert!(
            two_chain.verify().all_pass(),
            "two-chain collapse of S_{} fails an axiom",
            n + 1
        );

        let poset = &collapse.group.poset;
        let mut chain = collapse_to_chain(poset);
        assert!(
            chain.verify().all_pass(),
            "rank collapse of S_{} fails",
            n + 1
        );

        // Composition consistency: collapsing the two-chain network by rank
        // equals the direct rank collapse.
        let mut second = collapse_network_to_chain(two_chain.codomain()).unwrap();
        assert!(second.verify().all_pass());
        let mut composed = two_chain.compose(&second).unwrap();
        assert!(
            composed.verify().all_pass(),
            "composition is not a flow morphism"
        );
        assert_eq!(composed.vertex_map(), chain.vertex_map());
        assert_eq!(composed.codomain(), chain.codomain());

        // Pullback of the heaviest chain vertex is the heaviest rank.
        let capacities = chain.codomain().capacities();
        let heaviest = (0..capacities.len())
            .max_by(|&a, &b| capacities[a].cmp(&capacities[b]))
            .unwrap();
        let (preimage, weight) = chain.pull_back_antichain(&[heaviest]).unwrap();
        assert_eq!(preimage, poset.level_ids(heaviest));
        let row: Vec<Weight> = stirling_row(StirlingKind::First, n + 1);
        assert_eq!(&weight, row.iter().max().unwrap());

        // Flow preservation in both collapses.
        let domain_minflow = min_flow(two_chain.domain()).unwrap().value;
        assert_eq!(
            domain_minflow,
            min_flow(two_chain.codomain()).unwrap().value
        );
        assert_eq!(domain_minflow, min_flow(chain.codomain()).unwrap().value);
        assert_eq!(
            max_flow(two_chain.domain()).unwrap().value,
            max_flow(two_chain.codomain()).unwrap().value
        );
    }
    finish(
        7,
        Duration::from_secs(120),
        started,
        "two-chain and chain collapses of S_3..S_5 verify, compose, and pull back the heaviest rank",
    );
}

#[test]
fn criterion_08_proof_inequalities() {
    let started = Instant::now();
    let mut table: StirlingTable<Weight> = StirlingTable::new(StirlingKind::First);
    let mut factorial = Weight::from(1u8);
    for n in 1..=200usize {
        factorial *= n;
        let report = proof_inequality::<Weight>(n);
        assert!(report.holds, "quotient inequality fails at n={n}");
        assert_eq!(report.entries.len(), n);
        for entry in &report.entries {
            assert!(entry.holds, "n={n} k={}", entry.k);
            assert!(
                entry.log_concave,
                "log-concavity fails at n={n} k={}",
                entry.k
            );
        }
        // Recurrence spot-check against the previous row and the row sum.
        let prev = table.row(n - 1).to_vec();
        let row = table.row(n).to_vec();
        for k in 1..n {
            let expected = Weight::from(n as u32 - 1) * prev[k].clone() + prev[k - 1].clone();
            assert_eq!(row[k], expected, "recurrence at n={n} k={k}");
        }
        let total: Weight = row.iter().fold(Weight::zero(), |a, v| a + v);
        assert_eq!(total, factorial, "row sum at n={n}");
    }
    finish(
        8,
        Duration::from_secs(10),
        started,
        "quotient inequality, log-concavity, recurrence, and row sums hold for n <= 200",
    );
}

#[test]
fn criterion_09_erdos_k_width() {
    let started = Instant::now();
    let b4: Poset = boolean_lattice(4).unwrap();
    let expected = [6i64, 10, 14, 15, 16];
    for (k, &want) in (1..=5usize).zip(&expected) {
        let (oracle_weight, _) = b4.brute_force_k_width(k).unwrap();
        let formula: Weight = erdos_k_width_formula(4, k).unwrap();
        assert_eq!(oracle_weight, big(want), "oracle k={k}");
        assert_eq!(formula, big(want), "formula k={k}");
    }
    // k = 1 agrees with the flow-based width on oracle-sized instances.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0009);
    for trial in 0..60 {
        let poset: Poset = random_graded_poset(&mut rng, 15, 9);
        let (k1, _) = poset.brute_force_k_width(1).unwrap();
        assert_eq!(k1, width(&poset).unwrap().0, "trial {trial}");
    }
    finish(
        9,
        Duration::from_secs(60),
        started,
        "B_4 k-widths are [6, 10, 14, 15, 16] and 1-width matches width on 60 random posets",
    );
}

#[test]
fn criterion_10_absolute_order_duality() {
    let started = Instant::now();
    for n in 1..=5usize {
        let counterexample = check_absolute_reverse_refinement(n).unwrap();
        assert!(
            counterexample.is_none(),
            "absolute order fails to reverse refinement at n={n}: {counterexample:?}"
        );
    }
    finish(
        10,
        Duration::from_secs(30),
        started,
        "absolute order is the reverse of refinement on S_1..S_5",
    );
}

#[test]
fn criterion_11_collapsed_networks_are_products() {
    let started = Instant::now();
    // The two-chain codomain is the product of the Stirling-weighted chain
    // with the (n, 1)-weighted 2-chain.
    for n in 2..=4usize {
        let collapse = collapse_to_two_chain::<Weight>(n).unwrap();
        let codomain = collapse.morphism.codomain();
        let row: Vec<Weight> = stirling_row(StirlingKind::First, n);
        let chain = GradedPoset::chain(&row[1..=n]).unwrap();
        let two = GradedPoset::chain(&[Weight::from(n as u32), Weight::from(1u8)]).unwrap();
        let product = chain.product(&two);

        // Explicit bijection: (chain position k-1, level b) goes to left_k
        // for b = 0 and right_{k+1} for b = 1.
        let bijection = |id: usize| -> usize {
            let k = id / 2 + 1;
            if id.is_multiple_of(2) {
                k - 1
            } else {
                n + k - 1
            }
        };
        assert_eq!(product.len(), codomain.vertex_count());
        let cod_ranks = codomain.rank_assignment().unwrap();
        for id in 0..product.len() {
            assert_eq!(product.weight(id), codomain.capacity(bijection(id)));
            assert_eq!(product.rank(id), cod_ranks[bijection(id)]);
        }
        let mut mapped: Vec<(usize, usize)> = product
            .covers()
            .iter()
            .map(|&(a, b)| (bijection(a), bijection(b)))
            .collect();
        mapped.sort_unstable();
        assert_eq!(mapped, codomain.edges(), "n={n}");
    }

    // Products of claws have the normalized flow property.
    for n in 1..=5usize {
        let mut product: Poset = GradedPoset::claw(1).unwrap();
        for m in 2..=n {
            product = product.product(&GradedPoset::claw(m).unwrap());
        }
        let report = check_nfp(&product).unwrap();
        assert!(report.all_feasible(), "claw product n={n}");
    }
    finish(
        11,
        Duration::from_secs(60),
        started,
        "two-chain codomains match the chain x 2-chain products; claw products have NFP",
    );
}
