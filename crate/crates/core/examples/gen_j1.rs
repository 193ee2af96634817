//! Writes the degree-266 permutation representation of J1.
//!
//! J1 is generated by two 7×7 matrices over F11. The tool enumerates the
//! matrix group, finds a subgroup L ≅ PSL(2,11) of order 660 generated by an
//! involution and an element of order 3 with product of order 11, and lets
//! the generators act on the 266 conjugates of L.
//!
//! Usage: cargo run --release -p alpharep --example gen_j1 -- <out.grp>

use std::collections::{HashMap, HashSet, VecDeque};

type Mat = [u8; 49];

const Y: [i64; 49] = [
    0, 1, 0, 0, 0, 0, 0, //
    0, 0, 1, 0, 0, 0, 0, //
    0, 0, 0, 1, 0, 0, 0, //
    0, 0, 0, 0, 1, 0, 0, //
    0, 0, 0, 0, 0, 1, 0, //
    0, 0, 0, 0, 0, 0, 1, //
    1, 0, 0, 0, 0, 0, 0,
];

const Z: [i64; 49] = [
    -3, 2, -1, -1, -3, -1, -3, //
    -2, 1, 1, 3, 1, 3, 3, //
    -1, -1, -3, -1, -3, -3, 2, //
    -1, -3, -1, -3, -3, 2, -1, //
    -3, -1, -3, -3, 2, -1, -1, //
    1, 3, 3, -2, 1, 1, 3, //
    3, 3, -2, 1, 1, 3, 1,
];

fn reduce(a: &[i64; 49]) -> Mat {
    let mut m = [0u8; 49];
    for (x, &v) in m.iter_mut().zip(a) {
        *x = v.rem_euclid(11) as u8;
    }
    m
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut m = [0u8; 49];
    for i in 0..7 {
        for j in 0..7 {
            let s: u32 = (0..7).map(|k| a[i * 7 + k] as u32 * b[k * 7 + j] as u32).sum();
            m[i * 7 + j] = (s % 11) as u8;
        }
    }
    m
}

fn identity() -> Mat {
    let mut m = [0u8; 49];
    for i in 0..7 {
        m[i * 8] = 1;
    }
    m
}

fn order(a: &Mat) -> usize {
    let id = identity();
    let mut p = *a;
    let mut k = 1;
    while p != id {
        p = mul(&p, a);
        k += 1;
    }
    k
}

fn inverse(a: &Mat) -> Mat {
    let mut p = identity();
    for _ in 0..order(a) - 1 {
        p = mul(&p, a);
    }
    p
}

/// Closure of `gens`, giving up above `limit` elements.
fn closure(gens: &[Mat], limit: usize) -> Option<Vec<Mat>> {
    let mut seen = HashSet::from([identity()]);
    let mut out = vec![identity()];
    let mut queue = VecDeque::from([identity()]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let n = mul(g, &m);
            if seen.insert(n) {
                if seen.len() > limit {
                    return None;
                }
                out.push(n);
                queue.push_back(n);
            }
        }
    }
    Some(out)
}

fn main() {
    let out = std::env::args().nth(1).expect("usage: gen_j1 <out.grp>");
    let gens = [reduce(&Y), reduce(&Z)];
    let all = closure(&gens, usize::MAX).unwrap();
    assert_eq!(all.len(), 175_560, "generators do not give J1");
    let orders: Vec<usize> = all.iter().map(order).collect();
    let x = all[orders.iter().position(|&o| o == 2).unwrap()];
    let sub = all
        .iter()
        .zip(&orders)
        .filter(|&(_, &o)| o == 3)
        .find_map(|(y, _)| {
            if order(&mul(&x, y)) != 11 {
                return None;
            }
            closure(&[x, *y], 660).filter(|h| h.len() == 660)
        })
        .expect("a subgroup of order 660");

    let key = |h: &[Mat]| {
        let mut v = h.to_vec();
        v.sort_unstable();
        v
    };
    let conj = |g: &Mat, g_inv: &Mat, h: &[Mat]| -> Vec<Mat> { h.iter().map(|k| mul(&mul(g, k), g_inv)).collect() };
    let inv = [inverse(&gens[0]), inverse(&gens[1])];
    let start = key(&sub);
    let mut index: HashMap<Vec<Mat>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut points = vec![start];
    let mut images = [Vec::new(), Vec::new()];
    let mut i = 0;
    while i < points.len() {
        for s in 0..2 {
            let k = key(&conj(&gens[s], &inv[s], &points[i]));
            let next = index.len();
            let j = *index.entry(k.clone()).or_insert(next);
            if j == next {
                points.push(k);
            }
            images[s].push(j);
        }
        i += 1;
    }
    assert_eq!(points.len(), 266);
    let mut text = String::from("# J1 on the 266 conjugates of a PSL(2,11)\nname J1\ndegree 266\n");
    for img in &images {
        let perm = alpharep::perm::Permutation::from_images(img.iter().map(|&j| j as u32).collect()).unwrap();
        text.push_str(&format!("gen {perm}\n"));
    }
    std::fs::write(&out, text).unwrap();
    println!("wrote {out}");
}
