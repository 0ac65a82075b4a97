//! The coinvariant algebra of S_n over exact rationals: canonical reduction
//! modulo the ideal of positive-degree symmetric polynomials, the action of
//! the symmetric group, Demazure operators and the rank-2 decomposition of
//! the algebra over the invariants of a simple reflection.
//!
//! Monomials are ordered lexicographically with x_n > ... > x_1. In that
//! order the complete homogeneous polynomials h_{n-i+1}(x_1, ..., x_i) form
//! a Groebner basis of the ideal with leading terms x_i^{n-i+1}, so reduced
//! polynomials live on the staircase basis {x^a : a_i <= n-i}, which has
//! exactly n! elements. The basis property is re-verified at build time.

use crate::linalg::{Mat, Rat};
use crate::weyl::WeylElement;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoinvariantError {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("polynomial parse error: {0}")]
    Parse(String),
    #[error("algebra validation failed: {0}")]
    Validation(String),
}

/// Exponent vector; entry k is the exponent of x_{k+1}.
pub type Monomial = Vec<u32>;

/// Lex with x_n > ... > x_1: compare exponents from the last variable down.
fn mono_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    for k in (0..a.len()).rev() {
        match a[k].cmp(&b[k]) {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

/// Polynomial in n variables with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub n: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Poly::zero(n);
        if !c.is_zero() {
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Rat::one())
    }

    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut mono = vec![0; n];
        mono[i - 1] = 1;
        Poly::from_terms(n, vec![(mono, Rat::one())])
    }

    pub fn from_terms(n: usize, terms: Vec<(Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: &Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, &(-c.clone()));
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(&m, &(c1 * c2));
            }
        }
        out
    }

    /// Leading term under lex x_n > ... > x_1.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().max_by(|a, b| mono_cmp(a.0, b.0))
    }

    /// Apply a permutation to the variables: x_i -> x_{w(i)}.
    pub fn act(&self, w: &WeylElement) -> Poly {
        assert_eq!(w.rank(), self.n);
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut m2 = vec![0u32; self.n];
            for (k, &e) in m.iter().enumerate() {
                m2[w.apply(k + 1) - 1] = e;
            }
            out.add_term(&m2, c);
        }
        out
    }

    /// Swap x_i and x_{i+1}.
    pub fn act_simple(&self, i: usize) -> Poly {
        let s = WeylElement::simple_reflection(self.n, i).expect("index in range");
        self.act(&s)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Exact division by x_i - x_{i+1}; None if not divisible.
    pub fn div_exact_by_coroot(&self, i: usize) -> Option<Poly> {
        let linear = Poly::variable(self.n, i).sub(&Poly::variable(self.n, i + 1));
        let lead_var = i; // 0-based index of x_{i+1}, the larger variable
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.n);
        // Divide by the leading term -x_{i+1} of (x_i - x_{i+1}).
        loop {
            let target = rem
                .terms
                .iter()
                .filter(|(m, _)| m[lead_var] > 0)
                .max_by(|a, b| mono_cmp(a.0, b.0))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = target else { break };
            let mut q = m.clone();
            q[lead_var] -= 1;
            let coeff = -c;
            quot.add_term(&q, &coeff);
            let piece = Poly::from_terms(self.n, vec![(q, coeff)]).mul(&linear);
            rem = rem.sub(&piece);
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<(Monomial, Rat)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        parts.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        let mut out = String::new();
        for (k, (m, c)) in parts.iter().enumerate() {
            let mono_str = render_monomial(m);
            let is_neg = c < &Rat::zero();
            let abs = if is_neg { -c.clone() } else { c.clone() };
            let coeff_str = if abs.is_one() && mono_str != "1" {
                String::new()
            } else {
                abs.to_string()
            };
            if k == 0 {
                if is_neg {
                    out.push('-');
                }
            } else {
                out.push_str(if is_neg { " - " } else { " + " });
            }
            match (coeff_str.is_empty(), mono_str == "1") {
                (true, _) => out.push_str(&mono_str),
                (false, true) => out.push_str(&coeff_str),
                (false, false) => {
                    out.push_str(&coeff_str);
                    out.push('*');
                    out.push_str(&mono_str);
                }
            }
        }
        out
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.iter().enumerate() {
        if e == 1 {
            parts.push(format!("x{}", k + 1));
        } else if e > 1 {
            parts.push(format!("x{}^{}", k + 1, e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Parse "2*x1^2*x2 - x3" style input.
pub fn parse_poly(n: usize, text: &str) -> Result<Poly, CoinvariantError> {
    let mut out = Poly::zero(n);
    let cleaned = text.replace(' ', "");
    if cleaned.is_empty() {
        return Ok(out);
    }
    // Split into signed terms.
    let mut terms: Vec<(i32, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = 1;
    for (idx, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && idx > 0 && !cur.is_empty() {
            terms.push((sign, cur.clone()));
            cur.clear();
            sign = if ch == '-' { -1 } else { 1 };
        } else if ch == '-' && idx == 0 {
            sign = -1;
        } else if ch == '+' && idx == 0 {
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        terms.push((sign, cur));
    }
    for (sg, term) in terms {
        let mut coeff = Rat::from_integer(sg.into());
        let mut mono = vec![0u32; n];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(CoinvariantError::Parse(text.to_string()));
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (var_str, exp) = match rest.split_once('^') {
                    Some((v, e)) => {
                        let e: u32 = e
                            .parse()
                            .map_err(|_| CoinvariantError::Parse(text.to_string()))?;
                        (v, e)
                    }
                    None => (rest, 1),
                };
                let v: usize =
                    var_str.parse().map_err(|_| CoinvariantError::Parse(text.to_string()))?;
                if v == 0 || v > n {
                    return Err(CoinvariantError::Parse(format!(
                        "variable x{v} out of range in {text:?}"
                    )));
                }
                mono[v - 1] += exp;
            } else {
                // Rational or integer coefficient, possibly "a/b".
                let c = match factor.split_once('/') {
                    Some((a, b)) => {
                        let a: i64 =
                            a.parse().map_err(|_| CoinvariantError::Parse(text.to_string()))?;
                        let b: i64 =
                            b.parse().map_err(|_| CoinvariantError::Parse(text.to_string()))?;
                        Rat::new(a.into(), b.into())
                    }
                    None => {
                        let a: i64 = factor
                            .parse()
                            .map_err(|_| CoinvariantError::Parse(text.to_string()))?;
                        Rat::from_integer(a.into())
                    }
                };
                coeff *= c;
            }
        }
        out.add_term(&mono, &coeff);
    }
    Ok(out)
}

/// Complete homogeneous symmetric polynomial of degree d in x_1..x_k.
pub fn complete_homogeneous(n: usize, d: u32, k: usize) -> Poly {
    let mut out = Poly::zero(n);
    // Enumerate monomials of degree d in the first k variables.
    fn rec(out: &mut Poly, mono: &mut Monomial, var: usize, remaining: u32, k: usize) {
        if var == k {
            if remaining == 0 {
                out.add_term(&mono.clone(), &Rat::one());
            }
            return;
        }
        if var == k - 1 {
            mono[var] = remaining;
            out.add_term(&mono.clone(), &Rat::one());
            mono[var] = 0;
            return;
        }
        for e in 0..=remaining {
            mono[var] = e;
            rec(out, mono, var + 1, remaining - e, k);
            mono[var] = 0;
        }
    }
    let mut mono = vec![0u32; n];
    rec(&mut out, &mut mono, 0, d, k);
    out
}

/// Elementary symmetric polynomial e_d(x_1..x_n).
pub fn elementary_symmetric(n: usize, d: usize) -> Poly {
    let mut out = Poly::zero(n);
    let mut choice: Vec<usize> = (0..d).collect();
    if d == 0 {
        return Poly::one(n);
    }
    if d > n {
        return out;
    }
    loop {
        let mut mono = vec![0u32; n];
        for &c in &choice {
            mono[c] = 1;
        }
        out.add_term(&mono, &Rat::one());
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] != i + n - d {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        choice[i] += 1;
        for j in i + 1..d {
            choice[j] = choice[j - 1] + 1;
        }
    }
}

/// Reduction engine for Q[x_1..x_n] modulo the symmetric ideal.
pub struct CoinvariantAlgebra {
    pub n: usize,
    groebner: Vec<(Monomial, Poly)>, // (leading monomial, tail) with lead coeff 1
    staircase: Vec<Monomial>,
    staircase_index: BTreeMap<Monomial, usize>,
}

impl CoinvariantAlgebra {
    pub fn build(n: usize) -> Result<Self, CoinvariantError> {
        if n < 2 {
            return Err(CoinvariantError::RankTooSmall(n));
        }
        let mut groebner = Vec::new();
        for i in 1..=n {
            let g = complete_homogeneous(n, (n - i + 1) as u32, i);
            let (lead, lc) = g.leading().expect("h polynomial nonzero");
            let mut expected = vec![0u32; n];
            expected[i - 1] = (n - i + 1) as u32;
            assert_eq!(lead, &expected, "leading monomial of basis polynomial");
            assert!(lc.is_one());
            let tail = g.sub(&Poly::from_terms(n, vec![(lead.clone(), lc.clone())]));
            groebner.push((lead.clone(), tail));
        }
        // Staircase basis {x^a : a_i <= n-i}, ordered by total degree then lex.
        let mut staircase = Vec::new();
        let mut mono = vec![0u32; n];
        loop {
            staircase.push(mono.clone());
            // odometer over the staircase box
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                if mono[k] < (n - k - 1) as u32 {
                    mono[k] += 1;
                    break;
                }
                mono[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        staircase.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then(mono_cmp(a, b))
        });
        let staircase_index =
            staircase.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        let alg = CoinvariantAlgebra { n, groebner, staircase, staircase_index };
        // Validation: dimension count and vanishing of the symmetric generators.
        let fact: usize = (1..=n).product();
        if alg.staircase.len() != fact {
            return Err(CoinvariantError::Validation(format!(
                "staircase has {} monomials, expected {}",
                alg.staircase.len(),
                fact
            )));
        }
        for d in 1..=n {
            let e = elementary_symmetric(n, d);
            if !alg.reduce(&e).is_zero() {
                return Err(CoinvariantError::Validation(format!(
                    "elementary symmetric e_{d} does not reduce to zero"
                )));
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.staircase.len()
    }

    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    /// Canonical form modulo the symmetric ideal.
    pub fn reduce(&self, f: &Poly) -> Poly {
        assert_eq!(f.n, self.n);
        let mut rem = f.clone();
        'outer: loop {
            // Largest monomial divisible by some leading term.
            let mut candidate: Option<(Monomial, Rat, usize)> = None;
            for (m, c) in rem.terms() {
                for (gi, (lead, _)) in self.groebner.iter().enumerate() {
                    if lead.iter().zip(m.iter()).all(|(l, e)| e >= l) {
                        let better = match &candidate {
                            None => true,
                            Some((bm, _, _)) => mono_cmp(m, bm) == std::cmp::Ordering::Greater,
                        };
                        if better {
                            candidate = Some((m.clone(), c.clone(), gi));
                        }
                        break;
                    }
                }
            }
            match candidate {
                None => break 'outer,
                Some((m, c, gi)) => {
                    let (lead, tail) = &self.groebner[gi];
                    let q: Monomial = m.iter().zip(lead.iter()).map(|(e, l)| e - l).collect();
                    // rem -= c * x^q * (lead + tail); the lead part cancels m.
                    let mut subtract = tail.scale(&c);
                    subtract = subtract.mul(&Poly::from_terms(self.n, vec![(q, Rat::one())]));
                    let mut rem2 = rem.sub(&subtract);
                    rem2.add_term(&m, &(-c));
                    rem = rem2;
                }
            }
        }
        rem
    }

    /// Coordinates of the class of f in the staircase basis.
    pub fn to_vector(&self, f: &Poly) -> Vec<Rat> {
        let r = self.reduce(f);
        let mut v = vec![Rat::zero(); self.dim()];
        for (m, c) in r.terms() {
            let idx = *self
                .staircase_index
                .get(m)
                .expect("reduced polynomial supported on staircase");
            v[idx] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[Rat]) -> Poly {
        assert_eq!(v.len(), self.dim());
        Poly::from_terms(
            self.n,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.staircase[k].clone(), c.clone()))
                .collect(),
        )
    }

    /// Matrix of multiplication by f on the staircase basis.
    pub fn mult_matrix(&self, f: &Poly) -> Mat {
        let d = self.dim();
        let mut m = Mat::zero(d, d);
        for (col, mono) in self.staircase.iter().enumerate() {
            let basis = Poly::from_terms(self.n, vec![(mono.clone(), Rat::one())]);
            let prod = self.to_vector(&f.mul(&basis));
            for (row, c) in prod.into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        m
    }

    /// Matrix of the action of w on the staircase basis.
    pub fn action_matrix(&self, w: &WeylElement) -> Mat {
        let d = self.dim();
        let mut m = Mat::zero(d, d);
        for (col, mono) in self.staircase.iter().enumerate() {
            let basis = Poly::from_terms(self.n, vec![(mono.clone(), Rat::one())]);
            let img = self.to_vector(&basis.act(w));
            for (row, c) in img.into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        m
    }

    /// The class of the coroot x_i - x_{i+1}.
    pub fn coroot(&self, i: usize) -> Result<Poly, CoinvariantError> {
        if i == 0 || i >= self.n {
            return Err(CoinvariantError::IndexOutOfRange { index: i, rank: self.n });
        }
        Ok(self.reduce(&Poly::variable(self.n, i).sub(&Poly::variable(self.n, i + 1))))
    }

    /// Raw coroot polynomial (not reduced).
    pub fn coroot_poly(&self, i: usize) -> Poly {
        Poly::variable(self.n, i).sub(&Poly::variable(self.n, i + 1))
    }

    /// Demazure operator on polynomial representatives, then reduced:
    /// (f - s_i f) / (x_i - x_{i+1}).
    pub fn demazure(&self, f: &Poly, i: usize) -> Result<Poly, CoinvariantError> {
        if i == 0 || i >= self.n {
            return Err(CoinvariantError::IndexOutOfRange { index: i, rank: self.n });
        }
        let diff = f.sub(&f.act_simple(i));
        let q = diff.div_exact_by_coroot(i).expect("antisymmetric difference is divisible");
        Ok(self.reduce(&q))
    }

    /// Decompose the class of f as f0 + f1 * X with both parts s_i-invariant:
    /// f1 is half the Demazure image, f0 the remainder.
    pub fn cs_decompose(&self, f: &Poly, i: usize) -> Result<(Poly, Poly), CoinvariantError> {
        if i == 0 || i >= self.n {
            return Err(CoinvariantError::IndexOutOfRange { index: i, rank: self.n });
        }
        let diff = f.sub(&f.act_simple(i));
        let d = diff.div_exact_by_coroot(i).expect("antisymmetric difference is divisible");
        let f1 = d.scale(&Rat::new(1.into(), 2.into()));
        let f0 = f.sub(&f1.mul(&self.coroot_poly(i)));
        Ok((self.reduce(&f0), self.reduce(&f1)))
    }

    /// Whether the class of f is fixed by s_i.
    pub fn is_invariant(&self, f: &Poly, i: usize) -> bool {
        self.reduce(&f.act_simple(i)) == self.reduce(f)
    }

    /// Coefficients of the Poincare polynomial (dimension per degree).
    pub fn poincare(&self) -> Vec<usize> {
        let max_deg: u32 = self.staircase.iter().map(|m| m.iter().sum()).max().unwrap_or(0);
        let mut coeffs = vec![0usize; max_deg as usize + 1];
        for m in &self.staircase {
            coeffs[m.iter().sum::<u32>() as usize] += 1;
        }
        coeffs
    }
}

/// The q-factorial [n]_q! as a coefficient vector.
pub fn q_factorial(n: usize) -> Vec<usize> {
    let mut qfact = vec![1usize];
    for k in 2..=n {
        let mut next = vec![0usize; qfact.len() + k - 1];
        for (i, &c) in qfact.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        qfact = next;
    }
    qfact
}
