//! Seeded axiom checks for algebra instances.
//!
//! Every permanent algorithm silently assumes the semiring laws; this guard
//! samples tuples and checks each law exactly, reporting the violated axiom
//! together with a witness tuple when one is found.

use super::Algebra;
use crate::rng::SplitMix64;

/// Outcome of one axiom over all sampled tuples.
#[derive(Clone, Debug)]
pub struct LawEntry {
    pub law: &'static str,
    pub holds: bool,
    /// Rendered witness tuple for a violation (or, for the noncommutativity
    /// search, the pair that certifies `mul` really does not commute).
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub algebra: String,
    pub trials: usize,
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }
}

impl std::fmt::Display for LawReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{} over {} trials:", self.algebra, self.trials)?;
        for e in &self.entries {
            let mark = if e.holds { "ok  " } else { "FAIL" };
            write!(f, "  {mark} {}", e.law)?;
            if let Some(w) = &e.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks the semiring axioms (plus negation and commutativity according to
/// the instance's flags) on `trials` seeded tuples. Deterministic in `seed`.
pub fn law_check<A: Algebra>(alg: &A, seed: u64, trials: usize) -> LawReport {
    assert!(trials >= 1, "need at least one trial");
    let mut rng = SplitMix64::new(seed);
    let zero = alg.zero();
    let one = alg.one();

    struct Tracker {
        law: &'static str,
        witness: Option<String>,
    }
    let mut trackers: Vec<Tracker> = [
        "add associative",
        "add commutative",
        "mul associative",
        "mul distributes over add (left)",
        "mul distributes over add (right)",
        "zero is add identity",
        "zero annihilates",
        "one is mul identity",
    ]
    .into_iter()
    .map(|law| Tracker { law, witness: None })
    .collect();
    if alg.has_negation() {
        trackers.push(Tracker { law: "negation cancels", witness: None });
    }
    if alg.is_commutative() {
        trackers.push(Tracker { law: "mul commutative", witness: None });
    }

    let mut noncomm_witness: Option<String> = None;

    for _ in 0..trials {
        let x = alg.sample(&mut rng);
        let y = alg.sample(&mut rng);
        let z = alg.sample(&mut rng);
        let render3 =
            || format!("x={} y={} z={}", alg.render_elem(&x), alg.render_elem(&y), alg.render_elem(&z));

        let mut fails: Vec<usize> = Vec::new();
        // add associative / commutative
        if alg.add(&alg.add(&x, &y), &z) != alg.add(&x, &alg.add(&y, &z)) {
            fails.push(0);
        }
        if alg.add(&x, &y) != alg.add(&y, &x) {
            fails.push(1);
        }
        // mul associative
        if alg.mul(&alg.mul(&x, &y), &z) != alg.mul(&x, &alg.mul(&y, &z)) {
            fails.push(2);
        }
        // distributivity, both sides
        if alg.mul(&x, &alg.add(&y, &z)) != alg.add(&alg.mul(&x, &y), &alg.mul(&x, &z)) {
            fails.push(3);
        }
        if alg.mul(&alg.add(&y, &z), &x) != alg.add(&alg.mul(&y, &x), &alg.mul(&z, &x)) {
            fails.push(4);
        }
        // identities and annihilation
        if alg.add(&x, &zero) != x || alg.add(&zero, &x) != x {
            fails.push(5);
        }
        if alg.mul(&x, &zero) != zero || alg.mul(&zero, &x) != zero {
            fails.push(6);
        }
        if alg.mul(&x, &one) != x || alg.mul(&one, &x) != x {
            fails.push(7);
        }
        let mut next = 8;
        if alg.has_negation() {
            if alg.add(&x, &alg.neg(&x)) != zero {
                fails.push(next);
            }
            next += 1;
        }
        if alg.is_commutative() {
            if alg.mul(&x, &y) != alg.mul(&y, &x) {
                fails.push(next);
            }
        } else if noncomm_witness.is_none() && alg.mul(&x, &y) != alg.mul(&y, &x) {
            noncomm_witness =
                Some(format!("x={} y={}", alg.render_elem(&x), alg.render_elem(&y)));
        }

        for idx in fails {
            if trackers[idx].witness.is_none() {
                trackers[idx].witness = Some(render3());
            }
        }
    }

    let mut entries: Vec<LawEntry> = trackers
        .into_iter()
        .map(|t| LawEntry { law: t.law, holds: t.witness.is_none(), witness: t.witness })
        .collect();
    if !alg.is_commutative() {
        entries.push(LawEntry {
            law: "noncommutativity witness found",
            holds: noncomm_witness.is_some(),
            witness: noncomm_witness,
        });
    }

    LawReport { algebra: alg.name(), trials, entries }
}
