//! The `verify` grid: every combinatorial family checked cell by cell
//! against the closed formulas, optionally fanned out over a rayon pool.
//! Results are collected in task order, so the report is identical for any
//! worker count.

use polybern::bijections::{count_orientations, BijectionError, OrientationVariant};
use polybern::exact::Int;
use polybern::matrices::{
    count_avoiding, enumerate_avoiding, MatrixEnumError, PatternSet, Restriction,
};
use polybern::perms::{
    count_band, count_callan, count_excedance_class, enumerate_band, enumerate_callan,
    enumerate_excedance_class, BandSpec, BoundaryClass, EndRule, ExcedanceVariant, PermsError,
};
use polybern::sequences::{value, SequenceId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Lonesum,
    Gamma,
    P,
    Q,
    Band,
    Excedance,
    Callan,
    Orientation,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Lonesum,
        Family::Gamma,
        Family::P,
        Family::Q,
        Family::Band,
        Family::Excedance,
        Family::Callan,
        Family::Orientation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Lonesum => "lonesum",
            Family::Gamma => "gamma",
            Family::P => "p",
            Family::Q => "q",
            Family::Band => "band",
            Family::Excedance => "excedance",
            Family::Callan => "callan",
            Family::Orientation => "orientation",
        }
    }

    fn parse(s: &str) -> Result<Family, String> {
        match s {
            // the matrix families also answer to their pattern-set names
            "lonesum" | "L" => Ok(Family::Lonesum),
            "gamma" | "Gamma" => Ok(Family::Gamma),
            "p" | "P" => Ok(Family::P),
            "q" | "Q" => Ok(Family::Q),
            "band" => Ok(Family::Band),
            "excedance" => Ok(Family::Excedance),
            "callan" => Ok(Family::Callan),
            "orientation" => Ok(Family::Orientation),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// Parses a comma-separated family list.
pub fn parse_families(spec: &str) -> Result<Vec<Family>, String> {
    spec.split(',').map(|f| Family::parse(f.trim())).collect()
}

/// One verified grid cell.
#[derive(Clone, Debug)]
pub struct CellOutcome {
    pub family: &'static str,
    pub route: &'static str,
    pub seq: SequenceId,
    pub n: usize,
    pub k: usize,
    pub expected: Int,
    pub found: Int,
    /// Enumerated members when emission is on: one string per permutation,
    /// one array of row strings per matrix.
    pub members: Option<serde_json::Value>,
}

impl CellOutcome {
    pub fn ok(&self) -> bool {
        self.expected == self.found
    }
}

/// A budget overrun anywhere in the grid aborts verification.
#[derive(Debug)]
pub struct BudgetHit(pub String);

impl From<MatrixEnumError> for BudgetHit {
    fn from(e: MatrixEnumError) -> Self {
        BudgetHit(e.to_string())
    }
}

impl From<PermsError> for BudgetHit {
    fn from(e: PermsError) -> Self {
        BudgetHit(e.to_string())
    }
}

impl From<BijectionError> for BudgetHit {
    fn from(e: BijectionError) -> Self {
        BudgetHit(e.to_string())
    }
}

#[derive(Clone, Copy)]
struct Task {
    family: Family,
    route: usize,
    n: usize,
    k: usize,
}

/// The three (route, sequence) pairs a family verifies.
fn route_seq(route: usize) -> SequenceId {
    match route {
        0 => SequenceId::B,
        1 => SequenceId::C,
        _ => SequenceId::D,
    }
}

fn route_name(family: Family, route: usize) -> &'static str {
    match family {
        Family::Lonesum | Family::Gamma | Family::P | Family::Q => ["plain", "c|", "r|c|"][route],
        Family::Band => ["V", "V*", "V**"][route],
        Family::Excedance => ["E", "E*", "E**"][route],
        Family::Callan => ["(*,*)", "(*,l)", "(l,r)"][route],
        Family::Orientation => ["all", "unique-sink", "unique-source-sink"][route],
    }
}

fn compute(task: Task, emit: bool) -> Result<CellOutcome, BudgetHit> {
    let Task {
        family,
        route,
        n,
        k,
    } = task;
    let restriction = [
        Restriction::None,
        Restriction::ColsNonzero,
        Restriction::RowsAndColsNonzero,
    ][route];
    let mut members = None;
    let found = match family {
        Family::Lonesum | Family::Gamma | Family::P | Family::Q => {
            let set = match family {
                Family::Lonesum => PatternSet::lonesum(),
                Family::Gamma => PatternSet::gamma(),
                Family::P => PatternSet::tableau_p(),
                _ => PatternSet::q_set(),
            };
            if emit {
                let all = enumerate_avoiding(n, k, &set, restriction)?;
                members = Some(serde_json::json!(all
                    .iter()
                    .map(|m| m.row_strings())
                    .collect::<Vec<_>>()));
            }
            count_avoiding(n, k, &set, restriction)?
        }
        Family::Band => {
            let spec = [
                BandSpec::v(n, k),
                BandSpec::v_star(n, k),
                BandSpec::v_star_star(n, k),
            ][route];
            if emit {
                let all = enumerate_band(&spec)?;
                members = Some(serde_json::json!(all
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()));
            }
            count_band(&spec)?
        }
        Family::Excedance => {
            let variant = [
                ExcedanceVariant::E,
                ExcedanceVariant::EStar,
                ExcedanceVariant::EStarStar,
            ][route];
            if emit {
                let all = enumerate_excedance_class(n, k, variant)?;
                members = Some(serde_json::json!(all
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()));
            }
            count_excedance_class(n, k, variant)?
        }
        Family::Callan => {
            let boundary = [
                BoundaryClass::new(EndRule::Any, EndRule::Any),
                BoundaryClass::new(EndRule::Any, EndRule::Left),
                BoundaryClass::new(EndRule::Left, EndRule::Right),
            ][route];
            if emit {
                let all: Vec<String> = enumerate_callan(n, k)
                    .into_iter()
                    .filter(|p| boundary.matches(p))
                    .map(|p| p.to_string())
                    .collect();
                members = Some(serde_json::json!(all));
            }
            count_callan(n, k, boundary)?
        }
        Family::Orientation => {
            let variant = [
                OrientationVariant::All,
                OrientationVariant::UniqueSink,
                OrientationVariant::UniqueSourceSink,
            ][route];
            count_orientations(n, k, variant)?
        }
    };
    Ok(CellOutcome {
        family: family.name(),
        route: route_name(family, route),
        seq: route_seq(route),
        n,
        k,
        expected: value(route_seq(route), n, k),
        found,
        members,
    })
}

/// Runs the whole grid with `jobs` workers.  Cell order (and therefore the
/// report) is independent of the worker count.
pub fn run_grid(
    nmax: usize,
    kmax: usize,
    families: &[Family],
    jobs: usize,
    emit: bool,
) -> Result<Vec<CellOutcome>, BudgetHit> {
    let mut tasks = Vec::new();
    for &family in families {
        for n in 0..=nmax {
            for k in 0..=kmax {
                for route in 0..3 {
                    tasks.push(Task {
                        family,
                        route,
                        n,
                        k,
                    });
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<Result<CellOutcome, BudgetHit>> = pool.install(|| {
        use rayon::prelude::*;
        tasks.par_iter().map(|&t| compute(t, emit)).collect()
    });
    results.into_iter().collect()
}
