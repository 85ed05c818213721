//! Alexander quandles `x ◁ y = y + T(x − y)` on `X = Z/d_1 ⊕ … ⊕ Z/d_k`.
//!
//! Elements are numbered mixed-radix, first coordinate most significant.

use std::fmt;

use super::BuildError;
use crate::qcore::FiniteQuandle;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderModuleSpec {
    torsion_orders: Vec<u64>,
    /// `t_matrix[l][j]` is the `l`-th coordinate of `T e_j`.
    t_matrix: Vec<Vec<i64>>,
}

impl AlexanderModuleSpec {
    /// Checks that `T` is well defined and invertible on the module.
    pub fn new(torsion_orders: Vec<u64>, t_matrix: Vec<Vec<i64>>) -> Result<Self, BuildError> {
        let k = torsion_orders.len();
        if k == 0 || torsion_orders.iter().any(|&d| d < 1) {
            return Err(BuildError::InvalidModule(
                "torsion orders must be positive".into(),
            ));
        }
        if t_matrix.len() != k || t_matrix.iter().any(|r| r.len() != k) {
            return Err(BuildError::InvalidModule(format!("T must be {k}x{k}")));
        }
        let spec = AlexanderModuleSpec {
            torsion_orders,
            t_matrix,
        }
        .reduced();
        for j in 0..k {
            for l in 0..k {
                // d_j e_j = 0 forces d_j T_{lj} = 0 in Z/d_l
                let dj = spec.torsion_orders[j] as i128;
                let dl = spec.torsion_orders[l] as i128;
                if (dj * spec.t_matrix[l][j] as i128) % dl != 0 {
                    return Err(BuildError::IllDefinedT { row: l, col: j });
                }
            }
        }
        if !spec.is_bijection(|x| spec.apply_t(x)) {
            return Err(BuildError::NonInvertibleT);
        }
        Ok(spec)
    }

    fn reduced(mut self) -> Self {
        for (l, row) in self.t_matrix.iter_mut().enumerate() {
            let d = self.torsion_orders[l] as i64;
            for v in row.iter_mut() {
                *v = v.rem_euclid(d);
            }
        }
        self
    }

    /// Cyclic module `Z/n` with `T` multiplication by `t`.
    pub fn cyclic(n: u64, t: i64) -> Result<Self, BuildError> {
        Self::new(vec![n], vec![vec![t]])
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion_orders
    }

    pub fn t_matrix(&self) -> &[Vec<i64>] {
        &self.t_matrix
    }

    pub fn rank(&self) -> usize {
        self.torsion_orders.len()
    }

    pub fn order(&self) -> usize {
        self.torsion_orders.iter().product::<u64>() as usize
    }

    pub fn decode(&self, mut idx: u32) -> Vec<i64> {
        let mut v = vec![0i64; self.rank()];
        for (slot, &d) in v.iter_mut().zip(&self.torsion_orders).rev() {
            *slot = (idx as u64 % d) as i64;
            idx /= d as u32;
        }
        v
    }

    pub fn encode(&self, v: &[i64]) -> u32 {
        v.iter()
            .zip(&self.torsion_orders)
            .fold(0u64, |acc, (&c, &d)| {
                acc * d + c.rem_euclid(d as i64) as u64
            }) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        self.encode(&x.iter().zip(&y).map(|(p, q)| p + q).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.encode(&self.decode(a).iter().map(|c| -c).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `T x`.
    pub fn apply_t(&self, a: u32) -> u32 {
        let x = self.decode(a);
        let tx: Vec<i64> = self
            .t_matrix
            .iter()
            .map(|row| row.iter().zip(&x).map(|(t, c)| t * c).sum())
            .collect();
        self.encode(&tx)
    }

    /// `T^m x` for any integer `m`.
    pub fn apply_t_pow(&self, a: u32, m: i64) -> u32 {
        let t = self.t_order() as i64;
        (0..m.rem_euclid(t)).fold(a, |x, _| self.apply_t(x))
    }

    /// `(1 − T) x`.
    pub fn one_minus_t(&self, a: u32) -> u32 {
        self.sub(a, self.apply_t(a))
    }

    /// Multiplicative order of `T` on the module.
    pub fn t_order(&self) -> u64 {
        let n = self.order() as u32;
        let mut cur: Vec<u32> = (0..n).collect();
        let mut k = 1u64;
        loop {
            cur = cur.iter().map(|&x| self.apply_t(x)).collect();
            if cur.iter().enumerate().all(|(i, &x)| i as u32 == x) {
                return k;
            }
            k += 1;
        }
    }

    fn is_bijection(&self, f: impl Fn(u32) -> u32) -> bool {
        let n = self.order();
        let mut hit = vec![false; n];
        (0..n as u32).all(|x| !std::mem::replace(&mut hit[f(x) as usize], true))
    }

    /// Connectivity through the module criterion: `(1 − T)X = X`.
    pub fn is_connected(&self) -> bool {
        self.is_bijection(|x| self.one_minus_t(x))
    }

    /// `x ◁ y = y + T(x − y)`.
    pub fn op(&self, x: u32, y: u32) -> u32 {
        self.add(y, self.apply_t(self.sub(x, y)))
    }

    pub fn quandle(&self) -> FiniteQuandle {
        let labels = (0..self.order() as u32)
            .map(|i| {
                let v: Vec<String> = self.decode(i).iter().map(i64::to_string).collect();
                format!("({})", v.join(","))
            })
            .collect();
        FiniteQuandle::from_fn(self.order(), |x, y| self.op(x, y))
            .expect("Alexander operation satisfies the quandle axioms")
            .with_labels(labels)
    }
}

impl fmt::Display for AlexanderModuleSpec {
    /// `alexander 2,2 T=0,1;1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.torsion_orders.iter().map(u64::to_string).collect();
        let rows: Vec<String> = self
            .t_matrix
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "alexander {} T={}", d.join(","), rows.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_of_order_three() {
        let s = AlexanderModuleSpec::cyclic(3, -1).unwrap();
        let q = s.quandle();
        for x in 0..3u32 {
            for y in 0..3u32 {
                assert_eq!(q.op(x, y), (2 * y + 3 - x) % 3);
            }
        }
        assert!(s.is_connected());
        assert_eq!(q.quandle_type(), 2);
    }

    #[test]
    fn order_four_type_three() {
        let s = AlexanderModuleSpec::new(vec![2, 2], vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(s.t_order(), 3);
        assert!(s.is_connected());
        let q = s.quandle();
        assert_eq!(q.order(), 4);
        assert_eq!(q.quandle_type(), 3);
        assert!(q.is_connected());
    }

    #[test]
    fn identity_t_gives_the_trivial_quandle() {
        let q = AlexanderModuleSpec::cyclic(5, 1).unwrap().quandle();
        assert!(q.is_trivial());
    }

    #[test]
    fn errors_and_encoding() {
        assert_eq!(
            AlexanderModuleSpec::cyclic(4, 2),
            Err(BuildError::NonInvertibleT)
        );
        assert!(matches!(
            AlexanderModuleSpec::new(vec![2, 4], vec![vec![1, 0], vec![1, 1]]),
            Err(BuildError::IllDefinedT { row: 1, col: 0 })
        ));
        let s = AlexanderModuleSpec::new(vec![2, 3], vec![vec![1, 0], vec![0, 2]]).unwrap();
        assert_eq!(s.decode(4), vec![1, 1]);
        assert_eq!(s.encode(&[1, -1]), 5);
        assert_eq!(s.to_string(), "alexander 2,3 T=1,0;0,2");
    }
}
