//! Pencil builders shared by the integration tests.

#![allow(dead_code)]

use jk_core::arith::Rational;
use jk_core::linalg::QMatrix;
use jk_core::pencil::{EigenClass, JKInvariants, Pencil};
use proptest::prelude::*;

/// One block of a Kronecker canonical form.
#[derive(Clone, Debug)]
pub enum Block {
    /// `k x (k+1)`, horizontal index `k + 1`.
    Horizontal(usize),
    /// `(k+1) x k`, vertical index `k + 1`.
    Vertical(usize),
    /// `J_k(c) + λI`, singular at `λ = -c`.
    Jordan(i64, usize),
    /// `I + λN_k`, an infinite elementary divisor of degree `k`.
    Infinite(usize),
}

impl Block {
    pub fn shape(&self) -> (usize, usize) {
        match *self {
            Block::Horizontal(k) => (k, k + 1),
            Block::Vertical(k) => (k + 1, k),
            Block::Jordan(_, k) | Block::Infinite(k) => (k, k),
        }
    }
}

fn int(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Block-diagonal pencil of the given canonical blocks.
pub fn block_pencil(blocks: &[Block]) -> Pencil {
    let rows = blocks.iter().map(|b| b.shape().0).sum();
    let cols = blocks.iter().map(|b| b.shape().1).sum();
    let mut a = QMatrix::zeros(rows, cols);
    let mut b = QMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for blk in blocks {
        match *blk {
            Block::Horizontal(k) => {
                for i in 0..k {
                    a.set(r0 + i, c0 + i, int(1));
                    b.set(r0 + i, c0 + i + 1, int(1));
                }
            }
            Block::Vertical(k) => {
                for i in 0..k {
                    a.set(r0 + i, c0 + i, int(1));
                    b.set(r0 + i + 1, c0 + i, int(1));
                }
            }
            Block::Jordan(c, k) => {
                for i in 0..k {
                    a.set(r0 + i, c0 + i, int(c));
                    b.set(r0 + i, c0 + i, int(1));
                    if i + 1 < k {
                        a.set(r0 + i, c0 + i + 1, int(1));
                    }
                }
            }
            Block::Infinite(k) => {
                for i in 0..k {
                    a.set(r0 + i, c0 + i, int(1));
                    if i + 1 < k {
                        b.set(r0 + i, c0 + i + 1, int(1));
                    }
                }
            }
        }
        let (r, c) = blk.shape();
        r0 += r;
        c0 += c;
    }
    Pencil::new(a, b).unwrap()
}

/// `P (A + λB) Q`.
pub fn transform(p: &Pencil, left: &QMatrix, right: &QMatrix) -> Pencil {
    let a = left.mul(p.a()).unwrap().mul(right).unwrap();
    let b = left.mul(p.b()).unwrap().mul(right).unwrap();
    Pencil::new(a, b).unwrap()
}

pub fn matrix(rows: usize, cols: usize, entries: &[i64]) -> QMatrix {
    let data = entries.chunks(cols.max(1)).take(rows).map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    QMatrix::from_rows(rows, cols, if cols == 0 { vec![vec![]; rows] } else { data }).unwrap()
}

/// Random integer matrix with entries in `[-b, b]`.
pub fn arb_matrix(rows: usize, cols: usize, b: i64) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-b..=b, rows * cols).prop_map(move |v| matrix(rows, cols, &v))
}

/// Invertible `n x n` integer matrix: unit lower times unit upper triangular,
/// so its determinant is 1.
pub fn arb_invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    (prop::collection::vec(-2i64..=2, n * n), prop::collection::vec(-2i64..=2, n * n)).prop_map(move |(l, u)| {
        let mut lm = QMatrix::identity(n);
        let mut um = QMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    lm.set(i, j, int(l[i * n + j]));
                } else if i < j {
                    um.set(i, j, int(u[i * n + j]));
                }
            }
        }
        lm.mul(&um).unwrap()
    })
}

/// Random pencils up to `5 x 6`. Half are low rank products `C D`, which
/// makes singular structure common.
pub fn arb_pencil() -> impl Strategy<Value = Pencil> {
    (0usize..=5, 0usize..=6, 0usize..=3, any::<bool>()).prop_flat_map(|(r, c, k, low)| {
        if low {
            (arb_matrix(r, k, 2), arb_matrix(k, c, 2), arb_matrix(r, k, 2), arb_matrix(k, c, 2))
                .prop_map(|(c1, d1, c2, d2)| Pencil::new(c1.mul(&d1).unwrap(), c2.mul(&d2).unwrap()).unwrap())
                .boxed()
        } else {
            (arb_matrix(r, c, 3), arb_matrix(r, c, 3)).prop_map(|(a, b)| Pencil::new(a, b).unwrap()).boxed()
        }
    })
}

pub fn arb_block() -> impl Strategy<Value = Block> {
    prop_oneof![
        (0usize..=2).prop_map(Block::Horizontal),
        (0usize..=2).prop_map(Block::Vertical),
        (-2i64..=2, 1usize..=3).prop_map(|(c, k)| Block::Jordan(c, k)),
        (1usize..=2).prop_map(Block::Infinite),
    ]
}

/// A list of canonical blocks with total size at most 7 x 7, disguised by
/// random invertible transformations on both sides.
pub fn arb_disguised() -> impl Strategy<Value = (Vec<Block>, Pencil)> {
    prop::collection::vec(arb_block(), 0..=4)
        .prop_filter("at most 7 x 7", |bs| {
            let (r, c) = bs.iter().fold((0, 0), |(r, c), b| (r + b.shape().0, c + b.shape().1));
            r <= 7 && c <= 7
        })
        .prop_flat_map(|bs| {
            let p = block_pencil(&bs);
            (Just(bs), arb_invertible(p.rows()), arb_invertible(p.cols()), Just(p))
        })
        .prop_map(|(bs, l, r, p)| (bs, transform(&p, &l, &r)))
}

/// Checks computed invariants against the blocks that built the pencil.
pub fn matches_blocks(blocks: &[Block], inv: &JKInvariants) -> Result<(), String> {
    let mut h: Vec<usize> = Vec::new();
    let mut v: Vec<usize> = Vec::new();
    let mut inf: Vec<usize> = Vec::new();
    let mut finite: std::collections::BTreeMap<i64, Vec<usize>> = Default::default();
    for b in blocks {
        match *b {
            Block::Horizontal(k) => h.push(k + 1),
            Block::Vertical(k) => v.push(k + 1),
            Block::Jordan(c, k) => finite.entry(c).or_default().push(k),
            Block::Infinite(k) => inf.push(k),
        }
    }
    h.sort_unstable();
    v.sort_unstable();
    inf.sort_unstable();
    if inv.horizontal != h {
        return Err(format!("horizontal {:?}, expected {h:?}", inv.horizontal));
    }
    if inv.vertical != v {
        return Err(format!("vertical {:?}, expected {v:?}", inv.vertical));
    }
    let got_inf =
        inv.jordan.iter().find(|e| e.class == EigenClass::Infinity).map(|e| e.sizes.clone()).unwrap_or_default();
    if got_inf != inf {
        return Err(format!("infinite sizes {got_inf:?}, expected {inf:?}"));
    }
    let degree: usize = inv.jordan.iter().filter(|e| e.class != EigenClass::Infinity).map(|e| e.class.degree()).sum();
    if degree != finite.len() {
        return Err(format!("{degree} finite eigenvalues, expected {}", finite.len()));
    }
    for (c, mut sizes) in finite {
        sizes.sort_unstable();
        let root = int(-c);
        let entry = inv.jordan.iter().find(|e| match &e.class {
            EigenClass::Finite { poly } => poly.eval(&root).is_zero(),
            EigenClass::Infinity => false,
        });
        match entry {
            Some(e) if e.sizes == sizes => {}
            Some(e) => return Err(format!("root {root}: sizes {:?}, expected {sizes:?}", e.sizes)),
            None => return Err(format!("root {root} missing")),
        }
    }
    Ok(())
}
