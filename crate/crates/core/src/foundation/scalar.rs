//! Polynomials in the two parameters α and c over ℚ.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use super::rational::Q;

/// Exponents (a, b) of the monomial α^a c^b.
pub type Mono = (u8, u8);

/// Sparse polynomial; terms sorted by monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: SmallVec<[(Mono, Q); 2]>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { terms: SmallVec::new() }
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    pub fn int(v: i64) -> Scalar {
        Scalar::constant(Q::int(v))
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::constant(Q::frac(n, d))
    }

    pub fn constant(q: Q) -> Scalar {
        Scalar::monomial((0, 0), q)
    }

    pub fn monomial(m: Mono, q: Q) -> Scalar {
        let mut terms = SmallVec::new();
        if !q.is_zero() {
            terms.push((m, q));
        }
        Scalar { terms }
    }

    pub fn alpha() -> Scalar {
        Scalar::monomial((1, 0), Q::one())
    }

    pub fn c() -> Scalar {
        Scalar::monomial((0, 1), Q::one())
    }

    pub fn terms(&self) -> &[(Mono, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The constant value if the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [((0, 0), q)] => Some(q.clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        let mut out = SmallVec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, qa) = &self.terms[i];
            let (mb, qb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((*ma, qa.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*mb, qb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = qa.add(qb);
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().cloned());
        Scalar { terms: out }
    }

    pub fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        *self = self.add(o);
    }

    pub fn neg(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, q)| (*m, q.neg())).collect() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if o.terms.len() == 1 && o.terms[0].0 == (0, 0) {
            return self.scale(&o.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0 == (0, 0) {
            return o.scale(&self.terms[0].1);
        }
        let mut acc = Scalar::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &o.terms {
                let m = (ma.0 + mb.0, ma.1 + mb.1);
                acc = acc.add(&Scalar::monomial(m, qa.mul(qb)));
            }
        }
        acc
    }

    pub fn scale(&self, q: &Q) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, x)| (*m, x.mul(q))).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        match k {
            0 => Scalar::zero(),
            1 => self.clone(),
            -1 => self.neg(),
            _ => self.scale(&Q::int(k)),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute c = 0.
    pub fn specialize_c0(&self) -> Scalar {
        Scalar { terms: self.terms.iter().filter(|(m, _)| m.1 == 0).cloned().collect() }
    }

    /// Evaluate at numeric α and c.
    pub fn eval(&self, alpha: &Q, c: &Q) -> Q {
        let mut acc = Q::zero();
        for ((a, b), q) in &self.terms {
            acc = acc.add(&q.mul(&alpha.pow(*a as u32)).mul(&c.pow(*b as u32)));
        }
        acc
    }

    /// Exact division by α^k; `None` if some term has α-degree below k.
    pub fn div_alpha_pow(&self, k: u8) -> Option<Scalar> {
        let mut terms = SmallVec::new();
        for ((a, b), q) in &self.terms {
            if *a < k {
                return None;
            }
            terms.push(((a - k, *b), q.clone()));
        }
        Some(Scalar { terms })
    }

    fn mono_key(m: Mono) -> String {
        match m {
            (0, 0) => "1".to_string(),
            (a, 0) => pow_name("alpha", a),
            (0, b) => pow_name("c", b),
            (a, b) => format!("{}*{}", pow_name("alpha", a), pow_name("c", b)),
        }
    }

    fn parse_mono(s: &str) -> Result<Mono, String> {
        let mut m = (0u8, 0u8);
        if s.trim() == "1" {
            return Ok(m);
        }
        for f in s.split('*') {
            let (name, e) = match f.trim().split_once('^') {
                Some((n, e)) => (n, e.parse::<u8>().map_err(|_| format!("bad exponent in `{s}`"))?),
                None => (f.trim(), 1),
            };
            match name {
                "alpha" => m.0 += e,
                "c" => m.1 += e,
                _ => return Err(format!("unknown symbol `{name}`")),
            }
        }
        Ok(m)
    }

    /// Monomial → rational string map, the serialized coefficient form.
    pub fn to_string_map(&self) -> std::collections::BTreeMap<String, String> {
        self.terms.iter().map(|(m, q)| (Scalar::mono_key(*m), q.to_string())).collect()
    }

    pub fn from_string_map(map: &std::collections::BTreeMap<String, String>) -> Result<Scalar, String> {
        let mut acc = Scalar::zero();
        for (k, v) in map {
            acc = acc.add(&Scalar::monomial(Scalar::parse_mono(k)?, v.parse::<Q>()?));
        }
        Ok(acc)
    }
}

fn pow_name(name: &str, e: u8) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, q)) in self.terms.iter().enumerate() {
            let neg = q.signum() < 0;
            let abs = if neg { q.neg() } else { q.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if *m == (0, 0) {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", Scalar::mono_key(*m))?;
            } else {
                write!(f, "{abs}*{}", Scalar::mono_key(*m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = String;

    /// Parses sums of terms like `3/2*alpha^2*c - c + 1`.
    fn from_str(s: &str) -> Result<Scalar, String> {
        let mut acc = Scalar::zero();
        let normalized = s.replace('-', "+-");
        for raw in normalized.split('+') {
            let t = raw.trim();
            if t.is_empty() {
                continue;
            }
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b.trim()),
                None => (1, t),
            };
            let mut coeff = Q::int(sign);
            let mut mono = (0u8, 0u8);
            for f in body.split('*') {
                let f = f.trim();
                if f.starts_with(|ch: char| ch.is_ascii_digit()) && !f.contains('^') {
                    coeff = coeff.mul(&f.parse::<Q>()?);
                } else {
                    let m = Scalar::parse_mono(f)?;
                    mono = (mono.0 + m.0, mono.1 + m.1);
                }
            }
            acc = acc.add(&Scalar::monomial(mono, coeff));
        }
        Ok(acc)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Scalar {
        Scalar::int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        let a = Scalar::alpha();
        let c = Scalar::c();
        assert_eq!(a.add(&c).mul(&a.sub(&c)), s("alpha^2 - c^2"));
        assert_eq!(s("alpha*c + 3*alpha").specialize_c0(), s("3*alpha"));
        assert_eq!(s("2*alpha").sub(&a), a);
        assert_eq!(s("1/2*alpha - 1/2*alpha"), Scalar::zero());
    }

    #[test]
    fn string_map_round_trip() {
        let x = s("3/2*alpha^2*c - c + 7");
        assert_eq!(Scalar::from_string_map(&x.to_string_map()).unwrap(), x);
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}
