use std::fs;
use std::path::Path;
use std::time::Instant;

use bipolar_fre::oracle::random_instance;
use bipolar_fre::system::MAX_COLUMNS;
use bipolar_fre::{
    enumerate_families, extremal_system, greatest_fre_candidate, oracle_solve, preprocess, system_solvable,
    verify_solution, BipolarSystem, CandidateSolution, Error, IndexSet, Limits, PreprocessReport, Slot,
    UnitRational, Witness,
};

use crate::document::{parse_problem, render_problem, ProblemDocument};
use crate::error::CliError;
use crate::report::{
    decimal_tuple, one_based, tuple, CheckReport, FamiliesDoc, FreDoc, GenReport, OracleDoc, PairDoc, PairsReport,
    RowDoc, SolutionsDoc, SolveReport, VerdictLabel,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub limits: Limits,
    pub max_oracle: usize,
    pub decimals: Option<usize>,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            limits: Limits::default(),
            max_oracle: bipolar_fre::oracle::DEFAULT_ORACLE_CAP,
            decimals: None,
            timing: false,
        }
    }
}

pub fn load_problem(path: &Path) -> Result<(ProblemDocument, BipolarSystem), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_problem(&text)
}

fn too_wide(system: &BipolarSystem) -> Result<(), CliError> {
    if system.columns() > MAX_COLUMNS {
        return Err(Error::TooLarge {
            what: "m",
            size: system.columns(),
            cap: MAX_COLUMNS,
        }
        .into());
    }
    Ok(())
}

/// Witness columns refer to the reduced system; report them in original numbering.
fn remap_witness(w: Witness, pre: &PreprocessReport) -> Witness {
    match w {
        Witness::SumBelowOne { column, sum } => Witness::SumBelowOne {
            column: pre.column_map[column],
            sum,
        },
        Witness::ForcedConflict {
            column,
            plus_row,
            minus_row,
            sum,
        } => Witness::ForcedConflict {
            column: pre.column_map[column],
            plus_row,
            minus_row,
            sum,
        },
        other => other,
    }
}

fn lift_set(set: IndexSet, pre: &PreprocessReport, free: IndexSet) -> IndexSet {
    IndexSet::from_indices(set.indices().map(|k| pre.column_map[k])).union(free)
}

fn lift_sets(sets: &[IndexSet], pre: &PreprocessReport, free: IndexSet) -> Vec<Vec<usize>> {
    let mut lifted: Vec<IndexSet> = sets.iter().map(|&s| lift_set(s, pre, free)).collect();
    lifted.sort_by(IndexSet::report_cmp);
    lifted.into_iter().map(one_based).collect()
}

fn fill(pre: &PreprocessReport, x: &CandidateSolution, free_value: &UnitRational) -> Vec<UnitRational> {
    pre.expand(x)
        .into_iter()
        .map(|slot| match slot {
            Slot::Value(v) => v,
            Slot::Free => free_value.clone(),
        })
        .collect()
}

/// Analyzes the system with all-zero columns removed, then lifts the results
/// back: free slots are `1` in maximal solutions and `0` in minimal ones.
pub fn solve(system: &BipolarSystem, opts: &Options) -> Result<SolveReport, CliError> {
    too_wide(system)?;
    let start = Instant::now();
    let fre = greatest_fre_candidate(system);
    let (reduced, pre) = preprocess(system);
    let free = IndexSet::from_indices(pre.dropped_columns.iter().copied());
    let one = UnitRational::one();
    let zero = UnitRational::zero();

    let mut report = SolveReport {
        rows: system.rows(),
        columns: system.columns(),
        verdict: VerdictLabel::Unsolvable,
        witness: None,
        fre_greatest: FreDoc {
            x_bar: tuple(&fre.x_bar),
            y_bar: tuple(&fre.y_bar),
        },
        certificate: None,
        families: FamiliesDoc::default(),
        solutions: SolutionsDoc::default(),
        decimal: None,
        free_columns: one_based(free),
        timing_ms: None,
    };

    let (greatest, least, maximal, minimal) = if reduced.columns() == 0 {
        // Every left-hand side is identically 0.
        if let Some(row) = system.b().iter().position(|b| !b.is_zero()) {
            report.witness = Some(Witness::FreUnsolvable { row }.to_string());
            return Ok(finish(report, start, opts));
        }
        let ones = vec![one.clone(); system.columns()];
        let zeros = vec![zero.clone(); system.columns()];
        report.certificate = Some(PairDoc {
            j_plus: one_based(free),
            j_minus: one_based(free),
        });
        report.families = FamiliesDoc {
            s_plus_maximal: vec![one_based(free)],
            s_minus_maximal: vec![one_based(free)],
        };
        (Some(ones.clone()), Some(zeros.clone()), vec![ones], vec![zeros])
    } else {
        let r = extremal_system(&reduced, &opts.limits)?;
        if !r.solvable {
            report.witness = r.witness.map(|w| remap_witness(w, &pre).to_string());
            return Ok(finish(report, start, opts));
        }
        if let Some(pair) = r.certificate {
            report.certificate = Some(PairDoc {
                j_plus: one_based(lift_set(pair.j_plus, &pre, free)),
                j_minus: one_based(lift_set(pair.j_minus, &pre, free)),
            });
        }
        report.families = FamiliesDoc {
            s_plus_maximal: lift_sets(&r.families.s_plus_maximal, &pre, free),
            s_minus_maximal: lift_sets(&r.families.s_minus_maximal, &pre, free),
        };
        let up = |x: &CandidateSolution| fill(&pre, x, &one);
        let down = |x: &CandidateSolution| fill(&pre, x, &zero);
        let mut maximal: Vec<_> = r.maximal.iter().map(up).collect();
        let mut minimal: Vec<_> = r.minimal.iter().map(down).collect();
        maximal.sort();
        minimal.sort();
        (r.greatest.as_ref().map(up), r.least.as_ref().map(down), maximal, minimal)
    };

    report.verdict = VerdictLabel::Solvable;
    let build = |render: &dyn Fn(&[UnitRational]) -> Vec<String>| {
        SolutionsDoc::build(greatest.as_deref(), least.as_deref(), &maximal, &minimal, render)
    };
    report.solutions = build(&|x| tuple(x));
    report.decimal = opts.decimals.map(|places| build(&|x| decimal_tuple(x, places)));
    Ok(finish(report, start, opts))
}

fn finish(mut report: SolveReport, start: Instant, opts: &Options) -> SolveReport {
    if opts.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report
}

/// Reads a candidate written as `(0.4, 0.5)`, `0.4 0.5`, `0.4,0.5` or a JSON
/// array of strings.
pub fn parse_candidate(text: &str) -> Result<CandidateSolution, CliError> {
    let text = text.trim();
    let items: Vec<String> = if text.starts_with('[') {
        serde_json::from_str(text)?
    } else {
        text.trim_start_matches('(')
            .trim_end_matches(')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect()
    };
    if items.is_empty() {
        return Err(CliError::Input("candidate solution is empty".into()));
    }
    let values = items
        .iter()
        .enumerate()
        .map(|(j, s)| {
            s.parse::<UnitRational>()
                .map_err(|e| CliError::Input(format!("candidate component {}: {e}", j + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CandidateSolution(values))
}

/// `solution` is a file path if such a file exists, otherwise the candidate itself.
pub fn load_candidate(solution: &str) -> Result<CandidateSolution, CliError> {
    let path = Path::new(solution);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        parse_candidate(&text)
    } else {
        parse_candidate(solution)
    }
}

pub fn check(system: &BipolarSystem, candidate: &CandidateSolution) -> Result<CheckReport, CliError> {
    let r = verify_solution(system, candidate)?;
    Ok(CheckReport {
        candidate: tuple(candidate.values()),
        rows: r
            .rows
            .iter()
            .enumerate()
            .map(|(i, c)| RowDoc {
                row: i + 1,
                value: c.value.to_string(),
                target: c.target.to_string(),
                holds: c.holds,
            })
            .collect(),
        verdict: r.verdict,
    })
}

pub fn pairs(system: &BipolarSystem, opts: &Options) -> Result<PairsReport, CliError> {
    too_wide(system)?;
    let verdict = system_solvable(system, &opts.limits)?;
    if let Some(w) = verdict.witness() {
        return Ok(PairsReport {
            verdict: VerdictLabel::Unsolvable,
            witness: Some(w.to_string()),
            tight_columns: Vec::new(),
            s_plus: Vec::new(),
            s_minus: Vec::new(),
            s_plus_maximal: Vec::new(),
            s_minus_maximal: Vec::new(),
        });
    }
    let fam = enumerate_families(system, &opts.limits)?;
    let fre = greatest_fre_candidate(system);
    let one = UnitRational::one();
    let tight = (0..system.columns()).filter(|&j| fre.sum(j) == *one.as_rational()).map(|j| j + 1).collect();
    let sets = |v: &[IndexSet]| v.iter().map(|&s| one_based(s)).collect();
    Ok(PairsReport {
        verdict: VerdictLabel::Solvable,
        witness: None,
        tight_columns: tight,
        s_plus: sets(&fam.s_plus),
        s_minus: sets(&fam.s_minus),
        s_plus_maximal: sets(&fam.s_plus_maximal),
        s_minus_maximal: sets(&fam.s_minus_maximal),
    })
}

pub fn oracle(system: &BipolarSystem, opts: &Options) -> Result<OracleDoc, CliError> {
    let r = oracle_solve(system, opts.max_oracle)?;
    let all = |v: &[CandidateSolution]| v.iter().map(|x| tuple(x.values())).collect();
    Ok(OracleDoc {
        verdict: VerdictLabel::from_bool(r.solvable),
        extreme_solutions: all(&r.extreme_solutions),
        maximal: all(&r.maximal),
        minimal: all(&r.minimal),
    })
}

pub fn generate(seed: u64, columns: usize, rows: usize, grid: u32, out: &Path) -> Result<GenReport, CliError> {
    if columns == 0 || rows == 0 || grid == 0 {
        return Err(CliError::Input("--m, --n and --grid must be at least 1".into()));
    }
    let system = random_instance(seed, columns, rows, grid);
    let text = render_problem(&ProblemDocument::from_system(&system));
    fs::write(out, text).map_err(|source| CliError::Write {
        path: out.to_path_buf(),
        source,
    })?;
    Ok(GenReport {
        path: out.display().to_string(),
        seed,
        rows,
        columns,
        grid,
    })
}
