//! Permutations of `{1..n}` stored as image arrays.
//!
//! Points are 1-based in cycle notation and 0-based in memory. Products are
//! read left to right: `p.compose(&q)` first applies `p`, then `q`.

use std::fmt;

use crate::error::PermError;

/// Largest supported degree. `12! < 2^32`, so every per-coordinate rank fits a `u32`.
pub const MAX_DEGREE: usize = 12;

/// `FACTORIALS[i] = i!` for `i <= MAX_DEGREE`.
pub const FACTORIALS: [u64; MAX_DEGREE + 1] = {
    let mut f = [1u64; MAX_DEGREE + 1];
    let mut i = 1;
    while i <= MAX_DEGREE {
        f[i] = f[i - 1] * i as u64;
        i += 1;
    }
    f
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(
            (1..=MAX_DEGREE).contains(&degree),
            "degree {degree} out of range"
        );
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<u8>) -> Result<Perm, PermError> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::Degree(n));
        }
        let mut seen = [false; MAX_DEGREE];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(PermError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based images, `images[i-1] = p(i)`.
    pub fn from_images_one_based(images: &[usize]) -> Result<Perm, PermError> {
        let shifted = images
            .iter()
            .map(|&x| {
                if x == 0 || x > MAX_DEGREE {
                    Err(PermError::NotBijection)
                } else {
                    Ok((x - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Perm::from_images(shifted)
    }

    /// Parses a product of disjoint cycles such as `"(1 2)(3 4)"`.
    /// The empty string and `"()"` denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, PermError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::Degree(degree));
        }
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut used = [false; MAX_DEGREE];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_start = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Syntax(format!("expected '(' in {text:?}")))?;
            let close = inner_start
                .find(')')
                .ok_or_else(|| PermError::Syntax(format!("unclosed cycle in {text:?}")))?;
            let body = &inner_start[..close];
            if body.contains('(') {
                return Err(PermError::Syntax(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let point: usize = tok
                    .parse()
                    .map_err(|_| PermError::Syntax(format!("bad point {tok:?} in {text:?}")))?;
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(PermError::RepeatedPoint(point));
                }
                used[point - 1] = true;
                cycle.push((point - 1) as u8);
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x as usize] = cycle[(i + 1) % cycle.len()];
            }
            rest = inner_start[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image array.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    fn check_degree(&self, other: &Perm) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            Err(PermError::DegreeMismatch(self.degree(), other.degree()))
        } else {
            Ok(())
        }
    }

    /// `(self · other)(x) = other(self(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    /// Unchecked form of [`Perm::compose`] for callers that already know the degrees agree.
    #[inline]
    pub(crate) fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    /// `self^m` for `m >= 0`.
    pub fn pow(&self, m: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// `σ⁻¹ · self · σ`.
    pub fn conjugate_by(&self, sigma: &Perm) -> Perm {
        sigma.inverse().then(self).then(sigma)
    }

    /// Cycles of length at least two, each starting at its smallest point,
    /// ordered by that point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Least `m >= 1` with `self^m = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Lexicographic rank of the image array among all permutations of the same degree.
    pub fn lehmer_rank(&self) -> u64 {
        let n = self.degree();
        let mut rank = 0u64;
        // bit j of `remaining` is set while image value j is unused
        let mut remaining: u32 = (1u32 << n) - 1;
        for (i, &x) in self.images.iter().enumerate() {
            let smaller = (remaining & ((1u32 << x) - 1)).count_ones() as u64;
            rank += smaller * FACTORIALS[n - 1 - i];
            remaining &= !(1u32 << x);
        }
        rank
    }

    pub fn lehmer_unrank(rank: u64, degree: usize) -> Result<Perm, PermError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::Degree(degree));
        }
        if rank >= FACTORIALS[degree] {
            return Err(PermError::RankOutOfRange {
                rank,
                bound: FACTORIALS[degree],
            });
        }
        Ok(Self::unrank_unchecked(rank, degree))
    }

    fn unrank_unchecked(mut rank: u64, degree: usize) -> Perm {
        let mut pool: Vec<u8> = (0..degree as u8).collect();
        let mut images = Vec::with_capacity(degree);
        for i in (0..degree).rev() {
            let f = FACTORIALS[i];
            let digit = (rank / f) as usize;
            rank %= f;
            images.push(pool.remove(digit));
        }
        Perm { images }
    }

    /// Dense rank of an even permutation in `[0, n!/2)`.
    ///
    /// Swapping the last two images flips parity and changes the Lehmer rank
    /// between `2m` and `2m + 1`, so halving the rank is a bijection on `A_n`.
    pub fn alt_rank(&self) -> Result<u64, PermError> {
        if !self.is_even() {
            return Err(PermError::OddPermutation);
        }
        Ok(self.lehmer_rank() / 2)
    }

    pub fn alt_unrank(rank: u64, degree: usize) -> Result<Perm, PermError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::Degree(degree));
        }
        let bound = (FACTORIALS[degree] / 2).max(1);
        if rank >= bound {
            return Err(PermError::RankOutOfRange { rank, bound });
        }
        if degree == 1 {
            return Ok(Perm::identity(1));
        }
        let p = Self::unrank_unchecked(2 * rank, degree);
        if p.is_even() {
            Ok(p)
        } else {
            Ok(Self::unrank_unchecked(2 * rank + 1, degree))
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}
