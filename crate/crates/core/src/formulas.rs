//! Closed forms, tables and integer sequences, each checkable against the
//! exact solvers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::covers::{x_exact, x_triangular_value};
use crate::domgraph::{gamma_rect_dp, SolverOptions, DP_MAX_ROWS};
use crate::error::{Error, Result};
use crate::grid::make_triangle;

/// f(n) = x(n) = γ(G_{n,n}) for n = 1..=19.
const F_SQUARE: [usize; 19] = [
    1, 2, 3, 4, 7, 10, 12, 16, 20, 24, 29, 35, 40, 47, 53, 60, 68, 76, 84,
];

/// Strip lengths for which a `4 × n` board needs `n + 1` fragments.
pub const STRIP4_EXCEPTIONS: [usize; 6] = [1, 2, 3, 5, 6, 9];

/// Longest strip the sequence verifier recomputes with the DP.
const STRIP_VERIFY_REACH: usize = 2000;

/// Largest triangle side the sequence verifier solves exactly.
const TRIANGLE_VERIFY_REACH: usize = 8;

/// Domination number of the `m × n` grid for `16 <= min(m, n)`:
/// `⌊(m + 2)(n + 2) / 5⌋ − 4`.
pub fn gamma_rect_formula(m: usize, n: usize) -> Result<usize> {
    if m.min(n) < 16 {
        return Err(Error::OutOfRange(format!(
            "the closed form needs both sides >= 16, got {m}x{n}; use the profile DP"
        )));
    }
    Ok((m + 2) * (n + 2) / 5 - 4)
}

/// Tabulated f(n) for `1 <= n <= 19`.
pub fn f_square_known(n: usize) -> Result<usize> {
    if !(1..=F_SQUARE.len()).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "f(n) is tabulated for 1 <= n <= 19, got {n}"
        )));
    }
    Ok(F_SQUARE[n - 1])
}

/// `⌊(n + 2)² / 5⌋ − 4`, valid for `n >= 7` except `n = 13`. At `n = 6` it
/// would give 8, but f(6) = 10.
pub fn f_square_formula(n: usize) -> Result<usize> {
    if n < 7 || n == 13 {
        return Err(Error::OutOfRange(format!(
            "the square formula does not hold at n = {n}"
        )));
    }
    Ok((n + 2) * (n + 2) / 5 - 4)
}

/// f of the `m × n` strip, `1 <= m <= 4`.
pub fn f_strip(m: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::OutOfRange("strip length must be positive".into()));
    }
    Ok(match m {
        1 => n.div_ceil(3),
        2 => (n + 2) / 2,
        3 => (3 * n + 4) / 4,
        4 => {
            if STRIP4_EXCEPTIONS.contains(&n) {
                n + 1
            } else {
                n
            }
        }
        _ => {
            return Err(Error::OutOfRange(format!(
                "strip formulas cover heights 1..=4, got {m}"
            )))
        }
    })
}

/// d of the `m × n` strip: `m·n − f_strip(m, n)`.
pub fn d_strip(m: usize, n: usize) -> Result<usize> {
    Ok(m * n - f_strip(m, n)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceId {
    /// d(n), maximal saturated domino coverings of the `n × n` board.
    A193764,
    /// d(n) + 1, dominoes that force a redundancy on the `n × n` board.
    A193765,
    /// d(3 × n).
    A193766,
    /// d(4 × n).
    A193767,
    /// f(4 × n).
    A193768,
    /// f(n) = x(n) of the `n × n` board.
    A104519,
    /// f(1 × n) = ⌈n/3⌉.
    A008620,
    /// d(1 × n) = n − ⌈n/3⌉.
    A004523,
    /// f(2 × n) = ⌊(n + 2)/2⌋.
    A008619,
    /// d(2 × n) = 2n − ⌊(n + 2)/2⌋.
    A001651,
    /// f(3 × n) = ⌊(3n + 4)/4⌋.
    A037915,
    /// ⌈n²/4⌉, maximal fragments covering the triangle of side n.
    A004652,
}

impl SequenceId {
    pub const ALL: [SequenceId; 12] = [
        SequenceId::A193764,
        SequenceId::A193765,
        SequenceId::A193766,
        SequenceId::A193767,
        SequenceId::A193768,
        SequenceId::A104519,
        SequenceId::A008620,
        SequenceId::A004523,
        SequenceId::A008619,
        SequenceId::A001651,
        SequenceId::A037915,
        SequenceId::A004652,
    ];

    /// Index of the first term.
    pub fn offset(self) -> usize {
        match self {
            SequenceId::A193764 | SequenceId::A193765 => 2,
            _ => 1,
        }
    }

    /// Largest index with a known value, if the sequence is finite here.
    pub fn last_index(self) -> Option<usize> {
        match self {
            SequenceId::A193764 | SequenceId::A193765 | SequenceId::A104519 => Some(F_SQUARE.len()),
            _ => None,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SequenceId::A193764 => "largest saturated domino covering of the n x n board",
            SequenceId::A193765 => {
                "dominoes on the n x n board that always include a redundant one"
            }
            SequenceId::A193766 => "largest saturated domino covering of the 3 x n board",
            SequenceId::A193767 => "largest saturated domino covering of the 4 x n board",
            SequenceId::A193768 => "minimal fragment tiling of the 4 x n board",
            SequenceId::A104519 => "minimal fragment tiling (domination number) of the n x n board",
            SequenceId::A008620 => "minimal fragment tiling of the 1 x n board",
            SequenceId::A004523 => "largest saturated domino covering of the 1 x n board",
            SequenceId::A008619 => "minimal fragment tiling of the 2 x n board",
            SequenceId::A001651 => "largest saturated domino covering of the 2 x n board",
            SequenceId::A037915 => "minimal fragment tiling of the 3 x n board",
            SequenceId::A004652 => "maximal fragments covering the triangular board of side n",
        }
    }

    /// The term at index `n`.
    pub fn term(self, n: usize) -> Result<usize> {
        if n < self.offset() {
            return Err(Error::OutOfRange(format!(
                "{self} starts at index {}",
                self.offset()
            )));
        }
        match self {
            SequenceId::A193764 => Ok(n * n - f_square_known(n)?),
            SequenceId::A193765 => Ok(n * n - f_square_known(n)? + 1),
            SequenceId::A193766 => d_strip(3, n),
            SequenceId::A193767 => d_strip(4, n),
            SequenceId::A193768 => f_strip(4, n),
            SequenceId::A104519 => f_square_known(n),
            SequenceId::A008620 => f_strip(1, n),
            SequenceId::A004523 => d_strip(1, n),
            SequenceId::A008619 => f_strip(2, n),
            SequenceId::A001651 => d_strip(2, n),
            SequenceId::A037915 => f_strip(3, n),
            SequenceId::A004652 => Ok(x_triangular_value(n)),
        }
    }

    /// Recomputes the term at `n` with an exact solver, or `None` when `n`
    /// is beyond the solvers' reach.
    pub fn recompute(self, n: usize, options: SolverOptions) -> Result<Option<usize>> {
        let strip = |m: usize, complement: bool| -> Result<Option<usize>> {
            if n > STRIP_VERIFY_REACH {
                return Ok(None);
            }
            let g = gamma_rect_dp(m, n)?;
            Ok(Some(if complement { m * n - g } else { g }))
        };
        match self {
            SequenceId::A104519 | SequenceId::A193764 | SequenceId::A193765 => {
                if n > DP_MAX_ROWS {
                    return Ok(None);
                }
                let g = gamma_rect_dp(n, n)?;
                Ok(Some(match self {
                    SequenceId::A104519 => g,
                    SequenceId::A193764 => n * n - g,
                    _ => n * n - g + 1,
                }))
            }
            SequenceId::A008620 => strip(1, false),
            SequenceId::A004523 => strip(1, true),
            SequenceId::A008619 => strip(2, false),
            SequenceId::A001651 => strip(2, true),
            SequenceId::A037915 => strip(3, false),
            SequenceId::A193766 => strip(3, true),
            SequenceId::A193768 => strip(4, false),
            SequenceId::A193767 => strip(4, true),
            SequenceId::A004652 => {
                if n > TRIANGLE_VERIFY_REACH {
                    return Ok(None);
                }
                Ok(Some(x_exact(&make_triangle(n)?, options)?.value))
            }
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        let key = key.strip_suffix("-ANALOGUE").unwrap_or(&key);
        SequenceId::ALL
            .into_iter()
            .find(|id| id.to_string() == key)
            .ok_or_else(|| Error::Format(format!("unknown sequence `{s}`")))
    }
}

/// The first `count` terms of `id`, starting at [`SequenceId::offset`].
pub fn sequence(id: SequenceId, count: usize) -> Result<Vec<usize>> {
    if let Some(last) = id.last_index() {
        let available = last + 1 - id.offset();
        if count > available {
            return Err(Error::Capacity(format!(
                "{id} is available for {available} terms here, {count} requested"
            )));
        }
    }
    (id.offset()..id.offset() + count)
        .map(|n| id.term(n))
        .collect()
}

/// Result of checking one term against a solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermCheck {
    pub index: usize,
    pub value: usize,
    /// `None` when the term is beyond solver reach.
    pub recomputed: Option<usize>,
}

impl TermCheck {
    pub fn agrees(&self) -> bool {
        self.recomputed.is_none_or(|r| r == self.value)
    }
}

/// Terms of `id` paired with solver recomputations where feasible.
pub fn verify_sequence(
    id: SequenceId,
    count: usize,
    options: SolverOptions,
) -> Result<Vec<TermCheck>> {
    let terms = sequence(id, count)?;
    terms
        .into_iter()
        .enumerate()
        .map(|(i, value)| {
            let index = id.offset() + i;
            Ok(TermCheck {
                index,
                value,
                recomputed: id.recompute(index, options)?,
            })
        })
        .collect()
}
