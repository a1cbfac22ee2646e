use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{poly_gcd, MathError, MultiPoly, RatFunc, Rational, Universe};

/// Dense matrix of rational functions over one universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    universe: Arc<Universe>,
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl PolyMatrix {
    pub fn new(
        universe: &Arc<Universe>,
        rows: usize,
        cols: usize,
        entries: Vec<RatFunc>,
    ) -> Result<Self, MathError> {
        if entries.len() != rows * cols {
            return Err(MathError::SizeMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.universe() != universe) {
            return Err(MathError::UniverseMismatch);
        }
        Ok(PolyMatrix {
            universe: universe.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(universe: &Arc<Universe>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            universe: universe.clone(),
            rows,
            cols,
            entries: vec![RatFunc::zero(universe); rows * cols],
        }
    }

    pub fn from_fn(
        universe: &Arc<Universe>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RatFunc,
    ) -> Result<Self, MathError> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::new(universe, rows, cols, entries)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: RatFunc) -> Result<(), MathError> {
        if value.universe() != &self.universe {
            return Err(MathError::UniverseMismatch);
        }
        if r >= self.rows || c >= self.cols {
            return Err(MathError::IndexOutOfRange {
                index: r.max(c),
                limit: self.rows.min(self.cols),
            });
        }
        self.entries[r * self.cols + c] = value;
        Ok(())
    }

    pub fn row(&self, r: usize) -> &[RatFunc] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix {
            universe: self.universe.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| (self.get(i, j) + self.get(j, i)).is_zero()))
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, MathError> {
        for &r in rows {
            if r >= self.rows {
                return Err(MathError::IndexOutOfRange {
                    index: r,
                    limit: self.rows,
                });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(MathError::IndexOutOfRange {
                    index: c,
                    limit: self.cols,
                });
            }
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Ok(PolyMatrix {
            universe: self.universe.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        })
    }

    /// Matrix with row `r` and column `c` removed.
    pub fn minor_matrix(&self, r: usize, c: usize) -> Result<Self, MathError> {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        if r >= self.rows || c >= self.cols {
            return Err(MathError::IndexOutOfRange {
                index: r.max(c),
                limit: self.rows.min(self.cols),
            });
        }
        self.submatrix(&rows, &cols)
    }

    pub fn subdet(&self, rows: &[usize], cols: &[usize]) -> Result<RatFunc, MathError> {
        self.submatrix(rows, cols)?.det()
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<Vec<RatFunc>, MathError> {
        if v.len() != self.cols {
            return Err(MathError::SizeMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = RatFunc::zero(&self.universe);
            for (e, x) in self.row(r).iter().zip(v) {
                if !e.is_zero() {
                    acc = acc.try_add(&e.try_mul(x)?)?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Maps every entry through `f`, which may change the universe.
    pub fn try_map(
        &self,
        mut f: impl FnMut(&RatFunc) -> Result<RatFunc, MathError>,
    ) -> Result<Self, MathError> {
        let entries = self
            .entries
            .iter()
            .map(&mut f)
            .collect::<Result<Vec<_>, _>>()?;
        let universe = entries
            .first()
            .map_or_else(|| self.universe.clone(), |e| e.universe().clone());
        Self::new(&universe, self.rows, self.cols, entries)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Vec<Rational>>, MathError> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.eval(point)).collect())
            .collect()
    }

    /// Rank of the matrix specialised at `point`.
    pub fn rank_at(&self, point: &[Rational]) -> Result<usize, MathError> {
        Ok(rational_rank(self.eval(point)?))
    }

    /// Exact determinant.
    ///
    /// Rows are cleared of denominators first. Sparse matrices are expanded
    /// along their sparsest line with memoised minors; dense ones go through
    /// fraction-free elimination.
    pub fn det(&self) -> Result<RatFunc, MathError> {
        if self.rows != self.cols {
            return Err(MathError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RatFunc::one(&self.universe));
        }
        let mut polys = Vec::with_capacity(n * n);
        let mut scale = MultiPoly::one(&self.universe);
        for r in 0..n {
            let mut l = MultiPoly::one(&self.universe);
            for e in self.row(r) {
                if !e.is_polynomial() {
                    l = poly_lcm(&l, e.den())?;
                }
            }
            for e in self.row(r) {
                polys.push(if l.is_one() {
                    e.num().clone()
                } else {
                    e.num() * &l.exact_div(e.den())?
                });
            }
            if !l.is_one() {
                scale = &scale * &l;
            }
        }
        let nonzero = polys.iter().filter(|p| !p.is_zero()).count();
        let d = if n >= 4 && nonzero * 2 > n * n {
            bareiss(polys, n)
        } else {
            Expander::new(&polys, n).det()
        };
        RatFunc::new(d, scale)
    }
}

fn poly_lcm(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, MathError> {
    if a.is_one() {
        return Ok(b.clone());
    }
    if a.is_monomial() && b.is_monomial() {
        let (ma, _) = a.leading_term().unwrap();
        let (mb, _) = b.leading_term().unwrap();
        return Ok(MultiPoly::monomial(
            a.universe(),
            ma.lcm(mb),
            Rational::one(),
        ));
    }
    let g = poly_gcd(a, b)?;
    (a * b).exact_div(&g).map(|p| p.make_monic())
}

struct Expander<'a> {
    m: &'a [MultiPoly],
    n: usize,
    memo: HashMap<(u32, u32), MultiPoly>,
}

impl<'a> Expander<'a> {
    fn new(m: &'a [MultiPoly], n: usize) -> Self {
        assert!(n <= 32, "expansion supports at most 32 lines");
        Expander {
            m,
            n,
            memo: HashMap::new(),
        }
    }

    fn det(&mut self) -> MultiPoly {
        let full = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        self.minor(full, full)
    }

    fn at(&self, r: usize, c: usize) -> &MultiPoly {
        &self.m[r * self.n + c]
    }

    fn minor(&mut self, rows: u32, cols: u32) -> MultiPoly {
        let u = self.m[0].universe().clone();
        if rows == 0 {
            return MultiPoly::one(&u);
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let rlist: Vec<usize> = bits(rows).collect();
        let clist: Vec<usize> = bits(cols).collect();
        let mut best: Option<(usize, bool, usize)> = None;
        for (pos, &r) in rlist.iter().enumerate() {
            let cnt = clist.iter().filter(|&&c| !self.at(r, c).is_zero()).count();
            if best.is_none_or(|b| cnt < b.0) {
                best = Some((cnt, true, pos));
            }
        }
        for (pos, &c) in clist.iter().enumerate() {
            let cnt = rlist.iter().filter(|&&r| !self.at(r, c).is_zero()).count();
            if best.is_none_or(|b| cnt < b.0) {
                best = Some((cnt, false, pos));
            }
        }
        let (cnt, is_row, pos) = best.unwrap();
        let mut acc = MultiPoly::zero(&u);
        if cnt > 0 {
            let other = if is_row { &clist } else { &rlist };
            for (opos, &o) in other.iter().enumerate() {
                let (r, c) = if is_row {
                    (rlist[pos], o)
                } else {
                    (o, clist[pos])
                };
                let e = self.at(r, c).clone();
                if e.is_zero() {
                    continue;
                }
                let sub = self.minor(rows & !(1 << r), cols & !(1 << c));
                if sub.is_zero() {
                    continue;
                }
                let t = &e * &sub;
                acc = if (pos + opos) % 2 == 0 {
                    &acc + &t
                } else {
                    &acc - &t
                };
            }
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask & (1 << i) != 0)
}

fn bareiss(mut a: Vec<MultiPoly>, n: usize) -> MultiPoly {
    let u = a[0].universe().clone();
    let mut sign = false;
    let mut prev = MultiPoly::one(&u);
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = !sign;
                }
                None => return MultiPoly::zero(&u),
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&pivot * &a[i * n + j]) - &(&a[i * n + k] * &a[k * n + j]);
                a[i * n + j] = v.exact_div(&prev).expect("fraction-free step is exact");
            }
            a[i * n + k] = MultiPoly::zero(&u);
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub(crate) fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] * &inv;
                for j in c..cols {
                    let d = &f * &m[rank][j];
                    m[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Pfaffian of a 4x4 skew-symmetric matrix.
pub fn pfaffian4(a: &PolyMatrix) -> Result<RatFunc, MathError> {
    if a.rows() != 4 || a.cols() != 4 {
        return Err(MathError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_skew() {
        return Err(MathError::NotSkew);
    }
    let e = |i, j| a.get(i, j);
    Ok(&(&(e(0, 1) * e(2, 3)) - &(e(0, 2) * e(1, 3))) + &(e(0, 3) * e(1, 2)))
}

impl RatFunc {
    /// `true` when the function is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.constant_value().is_some_and(|c| !c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, parse_ratfunc, NoConstants};

    fn mat(u: &Arc<Universe>, n: usize, cells: &[&str]) -> PolyMatrix {
        let e = cells
            .iter()
            .map(|s| parse_ratfunc(s, u, &NoConstants).unwrap())
            .collect();
        PolyMatrix::new(u, n, cells.len() / n, e).unwrap()
    }

    #[test]
    fn determinant_strategies_agree() {
        let u = Universe::new(["x", "y", "z"]);
        let m = mat(
            &u,
            4,
            &[
                "x", "y", "1", "z", "2", "x*y", "z", "0", "y", "1", "x + z", "3", "z^2", "0", "y",
                "x",
            ],
        );
        let mut polys = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                polys.push(m.get(r, c).num().clone());
            }
        }
        let a = bareiss(polys.clone(), 4);
        let b = Expander::new(&polys, 4).det();
        assert_eq!(a, b);
        assert_eq!(m.det().unwrap().num(), &a);
    }

    #[test]
    fn determinant_with_denominators() {
        let u = Universe::new(["x", "y"]);
        let m = mat(&u, 2, &["1/x", "y", "1/y", "x"]);
        assert_eq!(
            m.det().unwrap(),
            parse_ratfunc("0", &u, &NoConstants).unwrap()
        );
        let m = mat(&u, 2, &["1/x", "1", "1", "1/(x + y)"]);
        assert_eq!(
            m.det().unwrap(),
            parse_ratfunc("1/(x^2 + x*y) - 1", &u, &NoConstants).unwrap()
        );
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let u = Universe::new(["a", "b", "c", "d", "e", "f"]);
        let m = mat(
            &u,
            4,
            &[
                "0", "a", "b", "c", "-a", "0", "d", "e", "-b", "-d", "0", "f", "-c", "-e", "-f",
                "0",
            ],
        );
        let pf = pfaffian4(&m).unwrap();
        assert_eq!(pf.to_string(), "a*f - b*e + c*d");
        assert_eq!(&pf * &pf, m.det().unwrap());
        let bad = mat(
            &u,
            4,
            &[
                "0", "a", "b", "c", "a", "0", "d", "e", "-b", "-d", "0", "f", "-c", "-e", "-f", "0",
            ],
        );
        assert_eq!(pfaffian4(&bad), Err(MathError::NotSkew));
    }

    #[test]
    fn rank_and_non_square() {
        let u = Universe::new(["x"]);
        let m = mat(&u, 2, &["x", "2", "1", "4", "4", "2"]);
        assert_eq!(m.det(), Err(MathError::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(m.rank_at(&[int(2)]).unwrap(), 1);
        assert_eq!(m.rank_at(&[int(1)]).unwrap(), 2);
    }
}
