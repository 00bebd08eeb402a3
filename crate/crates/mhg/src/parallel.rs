//! Strict-coloring enumeration spread over worker threads.
//!
//! The search tree is cut at a fixed depth; workers pull subtrees from a
//! shared queue and the per-subtree results are concatenated in prefix
//! order, so the output matches the single-threaded enumeration exactly.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use mhg_core::solver::{
    self, Budget, ChromaticSpectrum, EnumerationOptions, Enumerator, OneRealizationReport, OutOfBudget,
};
use mhg_core::{Coloring, Error, MixedHypergraph, SpecSet};

/// Subtrees per worker to aim for when choosing the split depth.
const SUBTREES_PER_JOB: usize = 8;

fn split(en: &Enumerator, jobs: usize) -> Vec<Vec<u32>> {
    let wanted = jobs * SUBTREES_PER_JOB;
    let mut depth = 1;
    loop {
        let prefixes = en.prefixes(depth);
        if prefixes.len() >= wanted || depth >= en.order() {
            return prefixes;
        }
        depth += 1;
    }
}

type Found = Vec<(usize, Vec<u32>)>;

fn run_parallel(h: &MixedHypergraph, opts: &EnumerationOptions, jobs: usize) -> Result<Vec<Found>, Error> {
    let en = Enumerator::new(h, opts.max_colors);
    let prefixes = split(&en, jobs);
    let budget = Budget::new(opts.node_limit);
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let results: Mutex<Vec<Option<Found>>> = Mutex::new(vec![None; prefixes.len()]);

    std::thread::scope(|scope| {
        for _ in 0..jobs.min(prefixes.len()).max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= prefixes.len() || stop.load(Ordering::Relaxed) {
                    break;
                }
                let mut found = Vec::new();
                let outcome = en.run(&prefixes[i], &budget, |colors, k| {
                    found.push((k, colors.to_vec()));
                    if stop.load(Ordering::Relaxed) {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if let Err(OutOfBudget) = outcome {
                    stop.store(true, Ordering::Relaxed);
                }
                results.lock().expect("no poisoned workers")[i] = Some(found);
            });
        }
    });

    let results = results.into_inner().expect("no poisoned workers");
    if stop.load(Ordering::Relaxed) {
        let partial: ChromaticSpectrum = results.iter().flatten().flatten().map(|(k, _)| (*k, 1)).collect();
        return Err(Error::BudgetExceeded { limit: opts.node_limit, partial });
    }
    Ok(results.into_iter().map(|r| r.expect("every subtree explored")).collect())
}

/// Same contract as [`solver::enumerate_strict_colorings`], on `jobs` threads.
pub fn enumerate_strict_colorings(
    h: &MixedHypergraph,
    opts: &EnumerationOptions,
    jobs: usize,
) -> Result<BTreeMap<usize, Vec<Coloring>>, Error> {
    if jobs <= 1 {
        return solver::enumerate_strict_colorings(h, opts);
    }
    let mut out: BTreeMap<usize, Vec<Coloring>> = BTreeMap::new();
    for (k, colors) in run_parallel(h, opts, jobs)?.into_iter().flatten() {
        out.entry(k).or_default().push(Coloring::from_labels(&colors));
    }
    Ok(out)
}

pub fn chromatic_spectrum(h: &MixedHypergraph, opts: &EnumerationOptions, jobs: usize) -> Result<ChromaticSpectrum, Error> {
    if jobs <= 1 {
        return solver::chromatic_spectrum(h, opts);
    }
    Ok(run_parallel(h, opts, jobs)?.into_iter().flatten().map(|(k, _)| (k, 1)).collect())
}

pub fn is_one_realization(
    h: &MixedHypergraph,
    target: &SpecSet,
    opts: &EnumerationOptions,
    jobs: usize,
) -> Result<OneRealizationReport, Error> {
    let witnesses = enumerate_strict_colorings(h, opts, jobs)?;
    Ok(OneRealizationReport::from_witnesses(target, witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mhg_core::EdgeKind;

    #[test]
    fn worker_count_does_not_change_output() {
        let mut h = MixedHypergraph::empty(8);
        for v in 0..7 {
            h.add_edge(EdgeKind::D, [v, v + 1]).unwrap();
        }
        h.add_edge(EdgeKind::C, [0, 3, 6]).unwrap();
        h.add_edge(EdgeKind::C, [1, 4, 7]).unwrap();
        let opts = EnumerationOptions::default();
        let sequential = solver::enumerate_strict_colorings(&h, &opts).unwrap();
        assert!(sequential.values().map(Vec::len).sum::<usize>() > 10);
        for jobs in [2, 3, 8] {
            assert_eq!(enumerate_strict_colorings(&h, &opts, jobs).unwrap(), sequential, "jobs {jobs}");
            assert_eq!(
                chromatic_spectrum(&h, &opts, jobs).unwrap(),
                solver::chromatic_spectrum(&h, &opts).unwrap()
            );
        }
    }

    #[test]
    fn budget_is_shared_across_workers() {
        let h = MixedHypergraph::empty(11);
        let opts = EnumerationOptions { max_colors: None, node_limit: 100_000 };
        assert!(matches!(chromatic_spectrum(&h, &opts, 4), Err(Error::BudgetExceeded { limit: 100_000, .. })));
    }

    #[test]
    fn tiny_hypergraphs() {
        let opts = EnumerationOptions::default();
        let h = MixedHypergraph::empty(1);
        assert_eq!(chromatic_spectrum(&h, &opts, 4).unwrap().iter().collect::<Vec<_>>(), vec![(1, 1)]);
        let h = MixedHypergraph::empty(0);
        assert_eq!(chromatic_spectrum(&h, &opts, 4).unwrap(), solver::chromatic_spectrum(&h, &opts).unwrap());
    }
}
