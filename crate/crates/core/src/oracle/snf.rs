//! Smith normal form over the integers.

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { rows: n, cols: n, data }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut data = vec![0; self.rows * o.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    data[i * o.cols + j] += a * o.get(k, j);
                }
            }
        }
        IntMatrix { rows: self.rows, cols: o.cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_a += k * row_b
    fn add_row(&mut self, a: usize, b: usize, k: i64) {
        for j in 0..self.cols {
            let v = self.get(a, j) + k * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// col_a += k * col_b
    fn add_col(&mut self, a: usize, b: usize, k: i64) {
        for i in 0..self.rows {
            let v = self.get(i, a) + k * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j);
            self.set(a, j, v);
        }
    }
}

/// `U A V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal entry
/// dividing the next.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Non-negative diagonal entries (including zeros and ones).
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i)).collect()
    }

    /// Invariant factors greater than one, followed by the free rank.
    pub fn abelian_group(&self) -> (Vec<i64>, usize) {
        let diag = self.diagonal();
        let torsion: Vec<i64> = diag.iter().copied().filter(|&x| x > 1).collect();
        let zeros = diag.iter().filter(|&&x| x == 0).count();
        (torsion, zeros + self.d.cols - diag.len())
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        // pivot: smallest nonzero |entry| in the remaining block
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j).abs();
                    if x != 0 && best.map_or(true, |(bi, bj)| x < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = d.get(t, t);
            let mut clean = true;
            for i in t + 1..m {
                let q = d.get(i, t).div_euclid(p);
                if q != 0 {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                clean &= d.get(i, t) == 0;
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_euclid(p);
                if q != 0 {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                clean &= d.get(t, j) == 0;
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the rest of the block by the pivot
            let mut bad = None;
            for i in t + 1..m {
                for j in t + 1..n {
                    if d.get(i, j) % p != 0 {
                        bad = Some(i);
                    }
                }
            }
            match bad {
                Some(i) => {
                    d.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d.get(t, t) < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v)
}

fn finish(mut d: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> SmithNormalForm {
    for t in 0..d.rows.min(d.cols) {
        if d.get(t, t) < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithNormalForm { d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det3(m: &IntMatrix) -> i64 {
        let g = |i, j| m.get(i, j);
        g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
            + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
    }

    #[test]
    fn diag_2_2_3() {
        let a = IntMatrix::from_rows(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal(), vec![1, 2, 6]);
        assert_eq!(s.abelian_group(), (vec![2, 6], 0));
    }

    #[test]
    fn zero_matrix() {
        let a = IntMatrix::from_rows(&[vec![0, 0, 4], vec![0, 0, 6], vec![0, 0, 0]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.abelian_group(), (vec![2], 2));
    }

    proptest! {
        #[test]
        fn snf_properties(v in proptest::collection::vec(-12i64..12, 9)) {
            let a = IntMatrix::from_rows(&[v[0..3].to_vec(), v[3..6].to_vec(), v[6..9].to_vec()]);
            let s = smith_normal_form(&a);
            prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
            prop_assert_eq!(det3(&s.u).abs(), 1);
            prop_assert_eq!(det3(&s.v).abs(), 1);
            let diag = s.diagonal();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j { prop_assert_eq!(s.d.get(i, j), 0); }
                }
                prop_assert!(diag[i] >= 0);
            }
            for i in 0..2 {
                if diag[i] == 0 { prop_assert_eq!(diag[i + 1], 0); }
                else { prop_assert_eq!(diag[i + 1] % diag[i], 0); }
            }
            prop_assert_eq!(diag.iter().product::<i64>(), det3(&a).abs());
        }
    }
}
