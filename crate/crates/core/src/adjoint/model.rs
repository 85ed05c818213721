//! Explicit adjoint group of a connected Alexander quandle on `Z × X × Coker(μ)`,
//! with `μ(x ⊗ y) = x ⊗ y − Ty ⊗ x` and
//! `(n, x, α)(m, y, β) = (n + m, T^m x + y, α + β + [T^m x ⊗ y])`.

use std::fmt;

use super::AdjointError;
use crate::qbuild::AlexanderModuleSpec;
use crate::qcore::FiniteQuandle;
use crate::zalg::{smith_normal_form, AbelianGroupInvariants, Int, SnfOptions, SparseIntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClauwensElement {
    pub n: i64,
    pub x: u32,
    /// Index of the canonical coset representative, see [`ClauwensGroup::alpha_coordinates`].
    pub alpha: u32,
}

impl fmt::Display for ClauwensElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.x, self.alpha)
    }
}

/// Relations presenting `Coker(μ)` on `Z^{k²}`, basis `e_i ⊗ e_j` at `i k + j`:
/// first the `k²` images `μ(e_i ⊗ e_j)`, then `gcd(d_i, d_j) e_i ⊗ e_j`.
pub fn mu_relation_matrix(spec: &AlexanderModuleSpec) -> SparseIntMatrix {
    let d = spec.torsion_orders();
    let t = spec.t_matrix();
    let k = d.len();
    let mut columns = Vec::with_capacity(2 * k * k);
    for i in 0..k {
        for j in 0..k {
            let mut col = vec![((i * k + j) as u32, 1i64)];
            col.extend((0..k).map(|l| ((l * k + i) as u32, -t[l][j])));
            columns.push(col);
        }
    }
    for i in 0..k {
        for j in 0..k {
            let g = num_integer::gcd(d[i], d[j]) as i64;
            columns.push(vec![((i * k + j) as u32, g)]);
        }
    }
    SparseIntMatrix::from_columns(k * k, columns)
}

#[derive(Clone, Debug)]
pub struct ClauwensGroup {
    spec: AlexanderModuleSpec,
    n: usize,
    t: u64,
    add: Vec<u32>,
    neg: Vec<u32>,
    /// `tpow[m * n + x] = T^m x` for `0 ≤ m < t`.
    tpow: Vec<u32>,
    quandle_op: Vec<u32>,
    coker_orders: Vec<u64>,
    coker_order: u64,
    /// Class of `x ⊗ y` at `x * n + y`.
    tensor: Vec<u32>,
}

impl ClauwensGroup {
    pub fn new(spec: &AlexanderModuleSpec) -> Result<Self, AdjointError> {
        if !spec.is_connected() {
            return Err(AdjointError::NotConnected(spec.to_string()));
        }
        let n = spec.order();
        let k = spec.rank();
        let t = spec.t_order();
        let nn = n as u32;
        let add = (0..nn)
            .flat_map(|a| (0..nn).map(move |b| (a, b)))
            .map(|(a, b)| spec.add(a, b))
            .collect();
        let neg = (0..nn).map(|a| spec.neg(a)).collect();
        let mut tpow: Vec<u32> = (0..nn).collect();
        for m in 1..t as usize {
            let prev: Vec<u32> = tpow[(m - 1) * n..m * n].to_vec();
            tpow.extend(prev.into_iter().map(|x| spec.apply_t(x)));
        }
        let quandle_op = (0..nn)
            .flat_map(|a| (0..nn).map(move |b| (a, b)))
            .map(|(a, b)| spec.op(a, b))
            .collect();

        // coordinates on Coker(μ): rows of the left transform with invariant factor > 1
        let rel = mu_relation_matrix(spec);
        let snf = smith_normal_form(&rel, SnfOptions::with_transforms())
            .expect("arbitrary precision SNF");
        assert_eq!(snf.rank(), k * k, "Coker(μ) is finite");
        let left = snf.transforms.expect("transforms requested").left;
        let mut coker_orders = Vec::new();
        let mut coords: Vec<Vec<i64>> = Vec::new();
        for (r, dr) in snf.diagonal.iter().enumerate() {
            if dr.is_unit() {
                continue;
            }
            let m = dr.to_i64().expect("invariant factor of a small module") as u64;
            let row = (0..k * k)
                .map(|c| {
                    let v = left.get(r, c).to_big() % num_bigint::BigInt::from(m);
                    let v = Int::from(v).to_i64().unwrap();
                    v.rem_euclid(m as i64)
                })
                .collect();
            coker_orders.push(m);
            coords.push(row);
        }
        let coker_order: u64 = coker_orders.iter().product();
        assert!(
            coker_order <= u32::MAX as u64,
            "Coker(μ) too large to index"
        );

        let decoded: Vec<Vec<i64>> = (0..nn).map(|a| spec.decode(a)).collect();
        let mut tensor = Vec::with_capacity(n * n);
        for x in &decoded {
            for y in &decoded {
                let digits: Vec<u64> = coords
                    .iter()
                    .zip(&coker_orders)
                    .map(|(row, &m)| {
                        let mut s = 0i128;
                        for i in 0..k {
                            for j in 0..k {
                                s += row[i * k + j] as i128 * x[i] as i128 * y[j] as i128;
                            }
                        }
                        s.rem_euclid(m as i128) as u64
                    })
                    .collect();
                tensor.push(encode_mixed(&digits, &coker_orders));
            }
        }
        Ok(ClauwensGroup {
            spec: spec.clone(),
            n,
            t,
            add,
            neg,
            tpow,
            quandle_op,
            coker_orders,
            coker_order,
            tensor,
        })
    }

    pub fn spec(&self) -> &AlexanderModuleSpec {
        &self.spec
    }

    /// `|X|`.
    pub fn module_order(&self) -> usize {
        self.n
    }

    /// Order of `T`, which is the type of the quandle.
    pub fn t_order(&self) -> u64 {
        self.t
    }

    pub fn quandle(&self) -> FiniteQuandle {
        self.spec.quandle()
    }

    pub fn op(&self, x: u32, y: u32) -> u32 {
        self.quandle_op[x as usize * self.n + y as usize]
    }

    pub fn coker_orders(&self) -> &[u64] {
        &self.coker_orders
    }

    pub fn coker_order(&self) -> u64 {
        self.coker_order
    }

    pub fn coker_invariants(&self) -> AbelianGroupInvariants {
        AbelianGroupInvariants::new(0, &self.coker_orders)
    }

    /// Coordinates of `α` in `⊕ Z/c_i`.
    pub fn alpha_coordinates(&self, alpha: u32) -> Vec<u64> {
        decode_mixed(alpha as u64, &self.coker_orders)
    }

    pub fn tensor_class(&self, x: u32, y: u32) -> u32 {
        self.tensor[x as usize * self.n + y as usize]
    }

    pub fn alpha_add(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut scale = 1u64;
        for &m in self.coker_orders.iter().rev() {
            out += ((a % m + b % m) % m) * scale;
            a /= m;
            b /= m;
            scale *= m;
        }
        out as u32
    }

    pub fn alpha_neg(&self, a: u32) -> u32 {
        let digits: Vec<u64> = self
            .alpha_coordinates(a)
            .iter()
            .zip(&self.coker_orders)
            .map(|(&d, &m)| (m - d) % m)
            .collect();
        encode_mixed(&digits, &self.coker_orders)
    }

    fn t_pow(&self, x: u32, m: i64) -> u32 {
        let m = m.rem_euclid(self.t as i64) as usize;
        self.tpow[m * self.n + x as usize]
    }

    fn x_add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    pub fn identity(&self) -> ClauwensElement {
        ClauwensElement {
            n: 0,
            x: 0,
            alpha: 0,
        }
    }

    /// `e_x = (1, x, 0)`.
    pub fn e(&self, x: u32) -> ClauwensElement {
        ClauwensElement { n: 1, x, alpha: 0 }
    }

    pub fn epsilon(&self, g: &ClauwensElement) -> i64 {
        g.n
    }

    pub fn mul(&self, a: &ClauwensElement, b: &ClauwensElement) -> ClauwensElement {
        let tx = self.t_pow(a.x, b.n);
        let alpha = self.alpha_add(self.alpha_add(a.alpha, b.alpha), self.tensor_class(tx, b.x));
        ClauwensElement {
            n: a.n + b.n,
            x: self.x_add(tx, b.x),
            alpha,
        }
    }

    /// `(n, x, α)⁻¹ = (−n, −T^{−n} x, −α + [T^{−n} x ⊗ T^{−n} x])`.
    pub fn inv(&self, a: &ClauwensElement) -> ClauwensElement {
        let u = self.t_pow(a.x, -a.n);
        ClauwensElement {
            n: -a.n,
            x: self.neg[u as usize],
            alpha: self.alpha_add(self.alpha_neg(a.alpha), self.tensor_class(u, u)),
        }
    }

    pub fn pow(&self, a: &ClauwensElement, j: i64) -> ClauwensElement {
        let base = if j < 0 { self.inv(a) } else { *a };
        let mut acc = self.identity();
        let mut sq = base;
        let mut e = j.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            e >>= 1;
        }
        acc
    }

    /// Right action on `X`: `v · (n, x, α) = T^n v + (1 − T) x`.
    pub fn act(&self, v: u32, g: &ClauwensElement) -> u32 {
        self.x_add(self.t_pow(v, g.n), self.spec.one_minus_t(g.x))
    }

    /// Elements with `ε = n`, in `(x, α)` order.
    pub fn slice(&self, n: i64) -> impl Iterator<Item = ClauwensElement> + '_ {
        let c = self.coker_order as u32;
        (0..self.n as u32)
            .flat_map(move |x| (0..c).map(move |alpha| ClauwensElement { n, x, alpha }))
    }

    /// Checks `e_{x◁y} = e_y⁻¹ e_x e_y` for all pairs, returning the first failure.
    pub fn check_relations(&self) -> Option<(u32, u32)> {
        let n = self.n as u32;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let ey = self.e(y);
                let conj = self.mul(&self.mul(&self.inv(&ey), &self.e(x)), &ey);
                conj != self.e(self.op(x, y))
            })
    }
}

/// Associativity on `samples` seeded random triples with `|ε| ≤ 2t`; the first
/// failing triple if any.
pub fn check_associativity(
    group: &ClauwensGroup,
    samples: usize,
    seed: u64,
) -> Option<[ClauwensElement; 3]> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let bound = 2 * group.t as i64;
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| ClauwensElement {
        n: rng.gen_range(-bound..=bound),
        x: rng.gen_range(0..group.n as u32),
        alpha: rng.gen_range(0..group.coker_order as u32),
    };
    (0..samples).find_map(|_| {
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let left = group.mul(&group.mul(&a, &b), &c);
        let right = group.mul(&a, &group.mul(&b, &c));
        (left != right).then_some([a, b, c])
    })
}

fn encode_mixed(digits: &[u64], radices: &[u64]) -> u32 {
    digits
        .iter()
        .zip(radices)
        .fold(0u64, |acc, (&d, &m)| acc * m + d) as u32
}

fn decode_mixed(mut v: u64, radices: &[u64]) -> Vec<u64> {
    let mut out = vec![0; radices.len()];
    for (slot, &m) in out.iter_mut().zip(radices).rev() {
        *slot = v % m;
        v /= m;
    }
    out
}

/// The kernel of `As(X) → Inn(X)` found by enumerating `|n| ≤ 2t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionKernel {
    /// Quandle type.
    pub t: u64,
    pub coker: AbelianGroupInvariants,
    /// Number of `(n, x)` pairs inspected; every `α` behaves alike.
    pub pairs_checked: u64,
    /// The trivially acting elements are exactly `n ≡ 0 mod t`, `x = 0`.
    pub matches_structure: bool,
}

pub fn action_kernel(group: &ClauwensGroup) -> ActionKernel {
    let t = group.quandle().quandle_type();
    let n = group.n as u32;
    let bound = 2 * t as i64;
    let mut pairs = 0;
    let mut matches = true;
    for m in -bound..=bound {
        for x in 0..n {
            let g = ClauwensElement { n: m, x, alpha: 0 };
            let trivial = (0..n).all(|v| group.act(v, &g) == v);
            let predicted = m.rem_euclid(t as i64) == 0 && x == 0;
            matches &= trivial == predicted;
            pairs += 1;
        }
    }
    ActionKernel {
        t,
        coker: group.coker_invariants(),
        pairs_checked: pairs,
        matches_structure: matches,
    }
}

/// `Stab(0) ∩ Ker ε`, found by testing the action on every element of the `ε = 0` slice.
pub fn stabilizer_kernel(group: &ClauwensGroup) -> Vec<ClauwensElement> {
    group.slice(0).filter(|g| group.act(0, g) == 0).collect()
}

/// Invariants of `Stab(0) ∩ Ker ε`, read from its element orders in the model.
pub fn eisermann_h2(group: &ClauwensGroup) -> AbelianGroupInvariants {
    let stab = stabilizer_kernel(group);
    for a in &stab {
        for b in &stab {
            assert_eq!(
                group.mul(a, b),
                group.mul(b, a),
                "stabilizer in the kernel of ε is abelian"
            );
        }
    }
    let id = group.identity();
    AbelianGroupInvariants::from_kill_counts(stab.len() as u64, |m| {
        stab.iter().filter(|g| group.pow(g, m as i64) == id).count() as u64
    })
}

/// `e_x^t` is the same for all `x` and central among the generators.
pub fn central_power_check(group: &ClauwensGroup) -> bool {
    let t = group.quandle().quandle_type() as i64;
    let n = group.n as u32;
    let p = group.pow(&group.e(0), t);
    (0..n).all(|x| group.pow(&group.e(x), t) == p)
        && (0..n).all(|y| {
            let ey = group.e(y);
            group.mul(&p, &ey) == group.mul(&ey, &p)
        })
}
