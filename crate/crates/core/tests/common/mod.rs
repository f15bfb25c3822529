//! Independent oracles shared by the integration tests. None of them goes
//! through `FiniteGroup` or `KLTable`.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use klcells::coxcore::Permutation;

/// `u <= w` by the tableau criterion: for every prefix length `i`, the sorted
/// first `i` values of `u` are entrywise at most those of `w`.
pub fn bruhat_tableau_criterion(u: &Permutation, w: &Permutation) -> bool {
    let (a, b) = (u.one_line(), w.one_line());
    (1..=a.len()).all(|i| {
        let mut x = a[..i].to_vec();
        let mut y = b[..i].to_vec();
        x.sort_unstable();
        y.sort_unstable();
        x.iter().zip(&y).all(|(p, q)| p <= q)
    })
}

/// One reduced word of `w`, built by peeling right descents.
pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    let mut word = Vec::new();
    let mut v = w.clone();
    while let Some(&i) = v.right_descents().first() {
        word.push(i);
        v = v.right_mul_simple(i);
    }
    word.reverse();
    word
}

/// Every product of a subword of a reduced word of `w`: the Bruhat interval
/// below `w`, by brute force over all `2^l(w)` subwords.
pub fn bruhat_below_by_subwords(w: &Permutation) -> HashSet<Permutation> {
    let word = reduced_word(w);
    let n = w.n();
    let mut out = HashSet::new();
    for mask in 0u32..1 << word.len() {
        let mut v = Permutation::identity(n);
        for (k, &i) in word.iter().enumerate() {
            if mask >> k & 1 == 1 {
                v = v.right_mul_simple(i);
            }
        }
        out.insert(v);
    }
    out
}

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_scaled(acc: &mut Poly, p: &[i64], scale: i64, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; (a.len() + b.len()).saturating_sub(1)];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// KL polynomials of `S_n` by inverting R-polynomials:
/// `P_{x,w} = -[sum_{x < y <= w} R_{x,y} P_{y,w}]` truncated to degrees
/// `<= (l(w) - l(x) - 1) / 2`.
pub struct RPolynomialOracle {
    r: HashMap<(Permutation, Permutation), Poly>,
}

impl RPolynomialOracle {
    pub fn new() -> Self {
        RPolynomialOracle { r: HashMap::new() }
    }

    /// `R_{x,w}` with a left descent `s` of `w`:
    /// `R_{sx,sw}` if `sx < x`, else `(q - 1) R_{x,sw} + q R_{sx,sw}`.
    pub fn r(&mut self, x: &Permutation, w: &Permutation) -> Poly {
        if let Some(p) = self.r.get(&(x.clone(), w.clone())) {
            return p.clone();
        }
        let result = if !bruhat_tableau_criterion(x, w) {
            Vec::new()
        } else if x == w {
            vec![1]
        } else {
            let s = w.left_descents()[0];
            let sw = w.left_mul_simple(s);
            let sx = x.left_mul_simple(s);
            if sx.length() < x.length() {
                self.r(&sx, &sw)
            } else {
                let mut acc = Vec::new();
                let a = self.r(x, &sw);
                add_scaled(&mut acc, &a, 1, 1);
                add_scaled(&mut acc, &a, -1, 0);
                let b = self.r(&sx, &sw);
                add_scaled(&mut acc, &b, 1, 1);
                trim(acc)
            }
        };
        self.r.insert((x.clone(), w.clone()), result.clone());
        result
    }

    /// All `P_{x,w}` for a fixed `w`, keyed by `x`.
    pub fn kl_column(&mut self, w: &Permutation) -> HashMap<Permutation, Poly> {
        let mut below: Vec<Permutation> = Permutation::all(w.n())
            .filter(|x| bruhat_tableau_criterion(x, w))
            .collect();
        below.sort_by_key(|x| std::cmp::Reverse(x.length()));
        let mut p: HashMap<Permutation, Poly> = HashMap::new();
        for x in &below {
            if x == w {
                p.insert(x.clone(), vec![1]);
                continue;
            }
            let mut acc = Vec::new();
            for y in &below {
                if y.length() > x.length() && bruhat_tableau_criterion(x, y) {
                    let term = mul(&self.r(x, y), &p[y]);
                    add_scaled(&mut acc, &term, 1, 0);
                }
            }
            let d = w.length() - x.length();
            acc.truncate((d - 1) / 2 + 1);
            let neg: Poly = acc.iter().map(|c| -c).collect();
            p.insert(x.clone(), trim(neg));
        }
        p
    }
}
