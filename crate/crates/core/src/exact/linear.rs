use super::{ExactError, Rational};

/// Solves `matrix * x = rhs` exactly by Gaussian elimination.
///
/// The system may be square or overdetermined; it must have full column rank
/// and be consistent. Pivots are the first nonzero entry in column order.
/// Every surplus equation is checked to hold exactly.
pub fn solve_linear(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>, ExactError> {
    let rows = matrix.len();
    if rows != rhs.len() {
        return Err(ExactError::Shape(format!(
            "{rows} rows but {} right-hand sides",
            rhs.len()
        )));
    }
    let cols = matrix.first().map_or(0, Vec::len);
    if let Some(bad) = matrix.iter().position(|r| r.len() != cols) {
        return Err(ExactError::Shape(format!("row {bad} has the wrong length")));
    }
    if rows < cols {
        return Err(ExactError::Shape(format!(
            "{rows} equations cannot determine {cols} unknowns"
        )));
    }

    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    // Original equation index for each working row, for error reporting.
    let mut origin: Vec<usize> = (0..rows).collect();

    for col in 0..cols {
        let pivot = (col..rows)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(ExactError::Singular { column: col })?;
        aug.swap(col, pivot);
        origin.swap(col, pivot);
        let inv = aug[col][col].recip()?;
        for entry in aug[col][col..].iter_mut() {
            *entry *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *entry -= &factor * p;
                }
            }
        }
    }

    for r in cols..rows {
        if !aug[r][cols].is_zero() {
            return Err(ExactError::Inconsistent { equation: origin[r] });
        }
    }
    Ok(aug.into_iter().take(cols).map(|mut r| r.pop().unwrap()).collect())
}
