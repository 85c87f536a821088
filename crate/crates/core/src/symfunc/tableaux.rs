use serde::{Deserialize, Serialize};

use super::Partition;

/// A standard Young tableau in English notation: `rows[0]` is the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows weakly decrease")
    }

    pub fn transpose(&self) -> StandardYoungTableau {
        let width = self.rows.first().map_or(0, Vec::len);
        StandardYoungTableau {
            rows: (0..width).map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect(),
        }
    }

    fn row_of(&self) -> Vec<usize> {
        let mut row = vec![0; self.size() + 1];
        for (r, cells) in self.rows.iter().enumerate() {
            for &v in cells {
                row[v] = r;
            }
        }
        row
    }

    /// `{ i : i + 1 lies in a strictly lower row than i }`.
    pub fn descent_set(&self) -> Vec<usize> {
        let row = self.row_of();
        (1..self.size()).filter(|&i| row[i + 1] > row[i]).collect()
    }

    /// Number of descents and major index.
    pub fn des_maj(&self) -> (usize, usize) {
        let d = self.descent_set();
        (d.len(), d.iter().sum())
    }
}

/// All standard Young tableaux of shape `shape`.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardYoungTableau> {
    fn go(shape: &[usize], next: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardYoungTableau>) {
        if next > n {
            out.push(StandardYoungTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, next + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), 1, shape.size(), &mut rows, &mut out);
    out
}

/// All standard Young tableaux with `n` boxes.
pub fn all_syt(n: usize) -> Vec<StandardYoungTableau> {
    Partition::all(n).iter().flat_map(enumerate_syt).collect()
}
