use num_traits::Zero;

use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// Lagrange interpolation through the given nodes; the unique polynomial of
/// degree below the node count.
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> Result<UniPoly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::DuplicateAbscissa);
            }
        }
    }
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rat::from_integer(1.into());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &UniPoly::from_coeffs(vec![-xj.clone(), Rat::from_integer(1.into())]);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / &denom));
    }
    Ok(acc)
}
