//! Smith normal form with transforms, and the cokernel it describes.

use qadjoint::zalg::{cokernel, smith_normal_form, SnfOptions, SparseIntMatrix};

fn main() {
    let m = SparseIntMatrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let f = smith_normal_form(&m, SnfOptions::with_transforms()).unwrap();
    let d: Vec<String> = f.diagonal.iter().map(|x| x.to_string()).collect();
    println!("invariant factors: {}", d.join(", "));
    let tr = f.transforms.unwrap();
    println!(
        "det U = {}, det V = {}",
        tr.left.determinant(),
        tr.right.determinant()
    );
    println!("cokernel: {}", cokernel(&m).unwrap());
}
