//! Exact value of a finite two-player zero-sum game.
//!
//! Used to locate where the diagonal ray leaves a moment image: for a convex
//! domain with generator matrix `G` (one row per generator), the largest `t`
//! with `t·(1,…,1)` in the downward hull is `max_λ min_i (λᵀG)_i` over mixed
//! row strategies `λ`.
//!
//! Solved as the packing LP `max Σy  s.t.  B y ≤ 1, y ≥ 0` on the shifted
//! matrix `B = A + s` (all entries ≥ 1) with a dense rational simplex tableau
//! under Bland's rule. Both optimal strategies are recovered, so callers can
//! check the value against its primal and dual certificates.

use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct GameSolution {
    /// `max_λ min_i (λᵀA)_i`.
    pub value: Rational,
    /// Optimal mixed strategy over rows.
    pub row_strategy: Vec<Rational>,
    /// Optimal mixed strategy over columns; `max_j (A q)_j = value`.
    pub col_strategy: Vec<Rational>,
}

/// Solves the game with payoff `matrix[row][col]` to the row player, who
/// maximizes. `matrix` must be nonempty and rectangular with at least one
/// column.
pub fn solve_max_min(matrix: &[Vec<Rational>]) -> GameSolution {
    let rows = matrix.len();
    assert!(rows > 0, "game needs at least one row");
    let cols = matrix[0].len();
    assert!(cols > 0, "game needs at least one column");
    assert!(
        matrix.iter().all(|r| r.len() == cols),
        "ragged payoff matrix"
    );

    let min_entry = matrix.iter().flatten().min().cloned().unwrap();
    let shift = Rational::one() - &min_entry;

    // tableau columns: y_0..y_{cols-1}, slack_0..slack_{rows-1}
    let width = cols + rows;
    let mut tab: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(j, row)| {
            let mut t = Vec::with_capacity(width);
            t.extend(row.iter().map(|a| a + &shift));
            t.extend((0..rows).map(|s| {
                if s == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            t
        })
        .collect();
    let mut rhs = vec![Rational::one(); rows];
    let mut basis: Vec<usize> = (cols..width).collect();
    let mut reduced: Vec<Rational> = (0..width)
        .map(|c| {
            if c < cols {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let mut objective = Rational::zero();

    while let Some(enter) = reduced.iter().position(Rational::is_positive) {
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let ratio = rhs[r].checked_div(&tab[r][enter]).unwrap();
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // shifted entries are >= 1, so every column is bounded
        let (p, _) = leave.expect("packing LP is bounded");

        let pivot = tab[p][enter].clone();
        for x in tab[p].iter_mut() {
            *x = x.checked_div(&pivot).unwrap();
        }
        rhs[p] = rhs[p].checked_div(&pivot).unwrap();
        let pivot_row = tab[p].clone();
        for r in 0..rows {
            if r == p || tab[r][enter].is_zero() {
                continue;
            }
            let factor = tab[r][enter].clone();
            for (x, y) in tab[r].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * y);
            }
            rhs[r] = &rhs[r] - &(&factor * &rhs[p]);
        }
        let factor = reduced[enter].clone();
        for (x, y) in reduced.iter_mut().zip(&pivot_row) {
            *x = &*x - &(&factor * y);
        }
        objective += &(&factor * &rhs[p]);
        basis[p] = enter;
    }

    // objective = Σy = 1 / shifted value
    let shifted_value = objective.recip().expect("packing optimum is positive");
    let mut col_strategy = vec![Rational::zero(); cols];
    for (r, &b) in basis.iter().enumerate() {
        if b < cols {
            col_strategy[b] = &rhs[r] * &shifted_value;
        }
    }
    let row_strategy = (0..rows)
        .map(|j| -(reduced[cols + j].clone()) * &shifted_value)
        .collect();

    GameSolution {
        value: shifted_value - &shift,
        row_strategy,
        col_strategy,
    }
}
