use std::collections::HashMap;

use super::field::{digits, from_digits, Field};
use crate::arith::{is_prime, multiplicative_order, pow_mod};
use crate::kernel::{FiniteGroup, DEFAULT_TABLE_CAP};
use crate::{Error, Result};

fn check_cap(order: Option<u64>) -> Result<usize> {
    match order.and_then(|o| usize::try_from(o).ok()) {
        Some(o) if o <= DEFAULT_TABLE_CAP => Ok(o),
        other => Err(Error::CapExceeded { order: other.unwrap_or(usize::MAX), cap: DEFAULT_TABLE_CAP }),
    }
}

fn require_prime(name: &str, p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} = {p} is not prime")))
    }
}

pub fn make_cyclic(m: u64) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    let m = check_cap(Some(m))?;
    FiniteGroup::from_fn(m, |a, b| (a + b) % m)
}

/// Upper unitriangular 3×3 matrices over `F_p`. The matrix with entries
/// `a, b, c` above the diagonal (row-major) has index `a p^2 + b p + c`.
pub fn make_heisenberg(p: u64) -> Result<FiniteGroup> {
    require_prime("p", p)?;
    let order = check_cap(p.checked_pow(3))?;
    let p = p as usize;
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let join = |a: usize, b: usize, c: usize| (a % p) * p * p + (b % p) * p + c % p;
    let g = FiniteGroup::from_fn(order, |x, y| {
        let ((a, b, c), (a2, b2, c2)) = (split(x), split(y));
        join(a + a2, b + b2 + a * c2, c + c2)
    })?;
    let (x, y) = (join(1, 1, 1), join(1, 0, 0));
    if g.mul(x, y) == g.mul(y, x) {
        return Err(Error::Construction("Heisenberg witness pair commutes".into()));
    }
    Ok(g)
}

/// `V ⋊ C_m` on pairs `(v, t)` with `(v, t)(w, s) = (v + A^t w, t + s)`,
/// where `A` is multiplication by `zeta` in `field`. Index `t |V| + v`.
fn cyclic_extension(field: &Field, zeta: usize, m: usize) -> Result<FiniteGroup> {
    let size = field.size();
    let order = check_cap(Some((size * m) as u64))?;
    if field.pow(zeta, m as u64) != 1 {
        return Err(Error::Construction(format!("multiplier does not have order dividing {m}")));
    }
    let mut powers = vec![1usize; m];
    for t in 1..m {
        powers[t] = field.mul(powers[t - 1], zeta);
    }
    FiniteGroup::from_fn(order, |x, y| {
        let (t, v) = (x / size, x % size);
        let (s, w) = (y / size, y % size);
        ((t + s) % m) * size + field.add(v, field.mul(powers[t], w))
    })
}

/// `(C_p)^k ⋊ C_m`, the generator of `C_m` acting by a matrix of order `m`.
///
/// The matrix is multiplication by an element of order `m` in `F_{p^k}`, so
/// `m` must divide `p^k - 1`.
pub fn make_semidirect_elem_abelian(p: u64, k: u32, m: u64) -> Result<FiniteGroup> {
    require_prime("p", p)?;
    if k == 0 || m < 2 {
        return Err(Error::InvalidArgument("need k >= 1 and a nontrivial action (m >= 2)".into()));
    }
    check_cap(p.checked_pow(k).and_then(|s| s.checked_mul(m)))?;
    let field = Field::new(p, k, DEFAULT_TABLE_CAP)?;
    let zeta = field.root_of_unity(m)?;
    let g = cyclic_extension(&field, zeta, m as usize)?;
    if g.is_abelian() {
        return Err(Error::Construction("semidirect product has trivial action".into()));
    }
    Ok(g)
}

/// The skew product `F_{q^v} C_{p^u}`, `v = ord(q mod p) >= 2`, with the
/// generator of the cyclic factor acting as multiplication by
/// `g^((q^v - 1) / p)` for the least generator `g` of the unit group.
pub fn make_redei(p: u64, q: u64, u: u32) -> Result<FiniteGroup> {
    require_prime("p", p)?;
    require_prime("q", q)?;
    if p == q || u == 0 {
        return Err(Error::InvalidArgument("need distinct primes and u >= 1".into()));
    }
    let v = multiplicative_order(q, p)?;
    if v < 2 {
        return Err(Error::InvalidArgument(format!("ord({q} mod {p}) = 1; not a skew-product case")));
    }
    let v = u32::try_from(v).map_err(|_| Error::Overflow("Redei exponent"))?;
    let pu = p.checked_pow(u).ok_or(Error::Overflow("p^u"))?;
    check_cap(q.checked_pow(v).and_then(|s| s.checked_mul(pu)))?;
    let field = Field::new(q, v, DEFAULT_TABLE_CAP)?;
    let zeta = field.root_of_unity(p)?;
    let g = cyclic_extension(&field, zeta, pu as usize)?;
    // h(alpha) = zeta has order p, so ker h = <alpha^p> has index p
    debug_assert_eq!(field.unit_order(zeta), p);
    Ok(g)
}

/// Square matrices over `F_q`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Matrix {
    dim: usize,
    q: u64,
    entries: Vec<u64>,
}

impl Matrix {
    fn from_columns(q: u64, columns: &[Vec<u64>]) -> Self {
        let dim = columns.len();
        let mut entries = vec![0; dim * dim];
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                entries[i * dim + j] = x % q;
            }
        }
        Matrix { dim, q, entries }
    }

    fn diagonal(q: u64, diag: &[u64]) -> Self {
        let columns: Vec<Vec<u64>> =
            (0..diag.len()).map(|j| (0..diag.len()).map(|i| if i == j { diag[j] } else { 0 }).collect()).collect();
        Self::from_columns(q, &columns)
    }

    fn identity(q: u64, dim: usize) -> Self {
        Self::diagonal(q, &vec![1; dim])
    }

    fn mul(&self, other: &Matrix) -> Matrix {
        let d = self.dim;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] = (entries[i * d + j] + a * other.entries[k * d + j]) % self.q;
                }
            }
        }
        Matrix { dim: d, q: self.q, entries }
    }

    fn apply(&self, v: &[u64]) -> Vec<u64> {
        let d = self.dim;
        (0..d).map(|i| (0..d).fold(0, |acc, j| (acc + self.entries[i * d + j] * v[j]) % self.q)).collect()
    }

    fn inverse(&self) -> Matrix {
        let id = Matrix::identity(self.q, self.dim);
        let mut prev = id.clone();
        let mut cur = self.clone();
        while cur != id {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        // self^k = I, so self^(k-1) is the inverse
        if *self == id {
            id
        } else {
            prev
        }
    }
}

/// Affine group `{(v, A)}` on `F_q^d` with `A` ranging over the matrix group
/// generated by `gens`: `(v, A)(w, B) = (v + A w, A B)`. Index `k |V| + v`
/// with `k` the matrix's position in breadth-first closure order (identity first).
struct Affine {
    group: FiniteGroup,
    matrices: Vec<Matrix>,
    vsize: usize,
}

impl Affine {
    fn build(q: u64, dim: usize, gens: &[Matrix]) -> Result<Self> {
        let vsize = check_cap(q.checked_pow(dim as u32))?;
        let mut matrices = vec![Matrix::identity(q, dim)];
        let mut index: HashMap<Matrix, usize> = HashMap::from([(matrices[0].clone(), 0)]);
        let mut i = 0;
        while i < matrices.len() {
            for g in gens {
                let m = matrices[i].mul(g);
                if !index.contains_key(&m) {
                    check_cap(Some(((matrices.len() + 1) * vsize) as u64))?;
                    index.insert(m.clone(), matrices.len());
                    matrices.push(m);
                }
            }
            i += 1;
        }
        let k = matrices.len();
        let kmul: Vec<usize> = (0..k * k).map(|x| index[&matrices[x / k].mul(&matrices[x % k])]).collect();
        let vecs: Vec<Vec<u64>> = (0..vsize).map(|v| digits(v, q, dim as u32)).collect();
        let act: Vec<usize> =
            (0..k * vsize).map(|x| from_digits(&matrices[x / vsize].apply(&vecs[x % vsize]), q)).collect();
        let add = |a: usize, b: usize| {
            let s: Vec<u64> = vecs[a].iter().zip(&vecs[b]).map(|(x, y)| (x + y) % q).collect();
            from_digits(&s, q)
        };
        let group = FiniteGroup::from_fn(k * vsize, |x, y| {
            let (a, v) = (x / vsize, x % vsize);
            let (b, w) = (y / vsize, y % vsize);
            kmul[a * k + b] * vsize + add(v, act[a * vsize + w])
        })?;
        Ok(Affine { group, matrices, vsize })
    }

    fn matrix_element(&self, m: &Matrix) -> usize {
        let k = self.matrices.iter().position(|x| x == m).expect("matrix lies in the generated group");
        k * self.vsize
    }

    /// `(e_i, I)` for the 1-based coordinate `i`.
    fn basis_element(&self, q: u64, i: usize) -> usize {
        (q as usize).pow(i as u32 - 1)
    }
}

/// Parameters of the three presentation-defined non-supersolvable families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseSpec {
    /// Order `p p' q^p`; `ord(rho mod p') = p`, `ord(sigma mod q) = p'`.
    F2 { p: u64, p_prime: u64, q: u64, rho: u64, sigma: u64 },
    /// Order `p^2 q^p`; `ord(rho mod q) = p`.
    F3 { p: u64, q: u64, rho: u64 },
    /// Order `p^3 q^p`; `ord(rho mod q) = p^2`.
    F4 { p: u64, q: u64, rho: u64 },
}

fn require_order(x: u64, m: u64, expected: u64, name: &str) -> Result<()> {
    match multiplicative_order(x, m) {
        Ok(o) if o == expected => Ok(()),
        _ => Err(Error::InvalidArgument(format!("{name} = {x} must have order {expected} mod {m}"))),
    }
}

impl CaseSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CaseSpec::F2 { p, p_prime, q, rho, sigma } => {
                require_prime("p", p)?;
                require_prime("p_prime", p_prime)?;
                require_prime("q", q)?;
                if (p_prime - 1) % p != 0 || (q - 1) % p_prime != 0 {
                    return Err(Error::InvalidArgument("case f2 needs p | p' - 1 and p' | q - 1".into()));
                }
                require_order(rho, p_prime, p, "rho")?;
                require_order(sigma, q, p_prime, "sigma")
            }
            CaseSpec::F3 { p, q, rho } => {
                require_prime("p", p)?;
                require_prime("q", q)?;
                if (q - 1) % p != 0 || (q - 1) % (p * p) == 0 {
                    return Err(Error::InvalidArgument("case f3 needs p | q - 1 and p^2 ∤ q - 1".into()));
                }
                require_order(rho, q, p, "rho")
            }
            CaseSpec::F4 { p, q, rho } => {
                require_prime("p", p)?;
                require_prime("q", q)?;
                if (q - 1) % (p * p) != 0 {
                    return Err(Error::InvalidArgument("case f4 needs p^2 | q - 1".into()));
                }
                require_order(rho, q, p * p, "rho")
            }
        }
    }

    /// Order of the presented group.
    pub fn order(&self) -> Option<u64> {
        match *self {
            CaseSpec::F2 { p, p_prime, q, .. } => q.checked_pow(p as u32)?.checked_mul(p * p_prime),
            CaseSpec::F3 { p, q, .. } => q.checked_pow(p as u32)?.checked_mul(p * p),
            CaseSpec::F4 { p, q, .. } => q.checked_pow(p as u32)?.checked_mul(p * p * p),
        }
    }
}

/// Cyclic shift `e_i -> e_{i+1}` on `F_q^p`, with `e_p -> last * e_1`.
fn twisted_shift(q: u64, p: usize, last: u64) -> Matrix {
    let columns: Vec<Vec<u64>> = (0..p)
        .map(|j| {
            let mut col = vec![0; p];
            if j + 1 < p {
                col[j + 1] = 1;
            } else {
                col[0] = last;
            }
            col
        })
        .collect();
    Matrix::from_columns(q, &columns)
}

/// Realizes a case family as a monomial affine group on `F_q^p` and checks
/// the presentation's relations on the designated generators, the order,
/// generation, and that no subgroup of order `q` is normal.
pub fn make_case_group(spec: CaseSpec) -> Result<FiniteGroup> {
    spec.validate()?;
    let expected = check_cap(spec.order())?;
    let fail = |what: &str| Error::Construction(format!("{spec:?}: {what}"));
    let (q, p) = match spec {
        CaseSpec::F2 { p, q, .. } | CaseSpec::F3 { p, q, .. } | CaseSpec::F4 { p, q, .. } => (q, p),
    };
    let dim = p as usize;
    // x^-1 (w, I) x = (A^-1 w, I) for x = (0, A), so a generator that should
    // conjugate b_i to y is (0, M^-1) where M e_i = y.
    let (gens, designated): (Vec<Matrix>, Vec<Matrix>) = match spec {
        CaseSpec::F2 { p_prime, rho, sigma, .. } => {
            let a = twisted_shift(q, dim, 1).inverse();
            let diag: Vec<u64> =
                (1..=dim).map(|i| pow_mod(sigma, exponent_mod(rho, 1 - i as i64, p_prime), q)).collect();
            let a_prime = Matrix::diagonal(q, &diag).inverse();
            (vec![a.clone(), a_prime.clone()], vec![a, a_prime])
        }
        CaseSpec::F3 { rho, .. } => {
            let a = twisted_shift(q, dim, rho).inverse();
            (vec![a.clone()], vec![a])
        }
        CaseSpec::F4 { rho, .. } => {
            let a1 = twisted_shift(q, dim, 1).inverse();
            let diag: Vec<u64> = (1..=dim)
                .map(|i| {
                    let e = (1 + (1 - i as i64) * p as i64).rem_euclid((p * p) as i64) as u64;
                    pow_mod(rho, e, q)
                })
                .collect();
            let a2 = Matrix::diagonal(q, &diag).inverse();
            (vec![a1.clone(), a2.clone()], vec![a1, a2])
        }
    };
    let affine = Affine::build(q, dim, &gens)?;
    let g = &affine.group;
    if g.order() != expected {
        return Err(fail(&format!("constructed order {} differs from presented order {expected}", g.order())));
    }
    let b: Vec<usize> = (1..=dim).map(|i| affine.basis_element(q, i)).collect();
    let conj = |x: usize, y: usize| g.mul(g.mul(g.inv(x), y), x);
    for &bi in &b {
        if g.element_order(bi) != q as usize {
            return Err(fail("b_i does not have order q"));
        }
        if b.iter().any(|&bj| g.mul(bi, bj) != g.mul(bj, bi)) {
            return Err(fail("the b_i do not commute"));
        }
    }
    let xs: Vec<usize> = designated.iter().map(|m| affine.matrix_element(m)).collect();
    let a = xs[0];
    for i in 0..dim - 1 {
        if conj(a, b[i]) != b[i + 1] {
            return Err(fail("a^-1 b_i a != b_{i+1}"));
        }
    }
    let mut seed = vec![b[0]];
    seed.extend(&xs);
    match spec {
        CaseSpec::F2 { p, p_prime, rho, sigma, .. } => {
            let a_prime = xs[1];
            let ok = g.element_order(a) == p as usize
                && g.element_order(a_prime) == p_prime as usize
                && conj(a, a_prime) == g.pow(a_prime, rho)
                && conj(a, b[dim - 1]) == b[0]
                && conj(a_prime, b[0]) == g.pow(b[0], sigma);
            if !ok {
                return Err(fail("case f2 relations fail"));
            }
        }
        CaseSpec::F3 { p, rho, .. } => {
            let ok = g.element_order(a) == (p * p) as usize && conj(a, b[dim - 1]) == g.pow(b[0], rho);
            if !ok {
                return Err(fail("case f3 relations fail"));
            }
        }
        CaseSpec::F4 { p, rho, .. } => {
            let a2 = xs[1];
            let ok = g.element_order(a) == p as usize
                && g.element_order(a2) == (p * p) as usize
                && conj(a, a2) == g.pow(a2, 1 + p)
                && conj(a, b[dim - 1]) == b[0]
                && conj(a2, b[0]) == g.pow(b[0], rho);
            if !ok {
                return Err(fail("case f4 relations fail"));
            }
        }
    }
    if !g.subgroup_closure(&seed).is_whole() {
        return Err(fail("designated generators do not generate"));
    }
    let normal_q =
        g.elements().filter(|&x| g.element_order(x) == q as usize).any(|x| g.is_normal(&g.subgroup_closure(&[x])));
    if normal_q {
        return Err(fail("a subgroup of order q is normal"));
    }
    Ok(affine.group)
}

/// `base^e mod m` for a possibly negative exponent, with `base` a unit mod `m`.
fn exponent_mod(base: u64, e: i64, m: u64) -> u64 {
    let order = multiplicative_order(base, m).expect("base is a unit");
    pow_mod(base, e.rem_euclid(order as i64) as u64, m)
}
