use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multigraph::VertexSubset;

/// Why a set was removed at a given step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepCase {
    /// Low-expansion set of the trimming process.
    Bad,
    /// Vertices of degree zero in the current graph (no expansion is defined for them).
    Isolated,
    /// Step 0 of the induced-core process: the heavy vertices.
    Heavy,
    /// Volume in the coloured graph at least `3M` times the red volume.
    Case1,
    /// Low red expansion.
    Case2,
}

impl fmt::Display for StepCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepCase::Bad => "bad",
            StepCase::Isolated => "isolated",
            StepCase::Heavy => "0",
            StepCase::Case1 => "1",
            StepCase::Case2 => "2",
        })
    }
}

/// One removal. With `H` the reference subgraph and `G` its host:
/// `up = e_H(X, earlier sets)`, `down = e_H(X, vertices still present)`,
/// `diff = e_G(X) - e_H(X)` and `out` counts edges of `G` outside `H` with
/// exactly one endpoint in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub index: usize,
    pub case: StepCase,
    pub set: VertexSubset,
    pub down: u64,
    pub up: u64,
    pub diff: u64,
    pub out: u64,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {} case {} X={} down={} up={} diff={} out={}",
            self.index, self.case, self.set, self.down, self.up, self.diff, self.out
        )
    }
}

pub(crate) fn lines(steps: &[StepRecord]) -> String {
    steps.iter().map(|s| format!("{s}\n")).collect()
}
