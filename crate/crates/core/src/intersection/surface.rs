use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The model surfaces with tabulated intersection forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceModel {
    P2,
    P1xP1,
    Hirzebruch(u32),
    BlowupP2,
}

/// Integer coordinates of a divisor class in the model's basis.
pub type ClassVector = Vec<i64>;

impl SurfaceModel {
    pub fn basis(&self) -> &'static [&'static str] {
        match self {
            SurfaceModel::P2 => &["H"],
            SurfaceModel::P1xP1 => &["F1", "F2"],
            SurfaceModel::Hirzebruch(_) => &["s", "f"],
            SurfaceModel::BlowupP2 => &["H", "E"],
        }
    }

    pub fn gram(&self) -> Vec<Vec<i64>> {
        match *self {
            SurfaceModel::P2 => vec![vec![1]],
            SurfaceModel::P1xP1 => vec![vec![0, 1], vec![1, 0]],
            SurfaceModel::Hirzebruch(n) => vec![vec![-(n as i64), 1], vec![1, 0]],
            SurfaceModel::BlowupP2 => vec![vec![1, 0], vec![0, -1]],
        }
    }

    pub fn chi_o(&self) -> i64 {
        1
    }
}

pub fn canonical_class(model: SurfaceModel) -> ClassVector {
    match model {
        SurfaceModel::P2 => vec![-3],
        SurfaceModel::P1xP1 => vec![-2, -2],
        SurfaceModel::Hirzebruch(n) => vec![-2, -(n as i64 + 2)],
        SurfaceModel::BlowupP2 => vec![-3, 1],
    }
}

/// `D . E = D^T G E`.
pub fn intersection_number(model: SurfaceModel, d: &[i64], e: &[i64]) -> Result<i64> {
    let g = model.gram();
    if d.len() != g.len() || e.len() != g.len() {
        return Err(Error::domain(format!(
            "class vectors must have {} entries for {:?}",
            g.len(),
            model
        )));
    }
    Ok((0..g.len()).map(|i| (0..g.len()).map(|j| d[i] * g[i][j] * e[j]).sum::<i64>()).sum())
}

/// `chi(O(D)) = chi(O) + (D.D - D.K) / 2`.
pub fn surface_chi(model: SurfaceModel, d: &[i64]) -> Result<i64> {
    let k = canonical_class(model);
    let twice = intersection_number(model, d, d)? - intersection_number(model, d, &k)?;
    if twice % 2 != 0 {
        return Err(Error::Consistency(format!("D.D - D.K = {twice} is odd")));
    }
    Ok(model.chi_o() + twice / 2)
}

/// Genus of a smooth curve in the class `C`: `2g - 2 = C.(C + K)`.
pub fn adjunction_genus(model: SurfaceModel, c: &[i64]) -> Result<i64> {
    let k = canonical_class(model);
    let ck: Vec<i64> = c.iter().zip(&k).map(|(a, b)| a + b).collect();
    let v = intersection_number(model, c, &ck)?;
    if v % 2 != 0 || v < -2 {
        return Err(Error::domain(format!("C.(C+K) = {v} is not the value of a smooth curve")));
    }
    Ok(1 + v / 2)
}
