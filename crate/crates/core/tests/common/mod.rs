#![allow(dead_code)]

use kgrass::closed_form::ClosedFormKind;
use kgrass::kronecker_model::{KroneckerDescriptor, Partition, PointLabel};

pub const KINDS: [ClosedFormKind; 3] = [
    ClosedFormKind::Preprojective,
    ClosedFormKind::Preinjective,
    ClosedFormKind::RegularDegreeOne,
];

/// Indecomposable module with a closed formula, as a descriptor.
pub fn indecomposable(kind: ClosedFormKind, index: u32) -> KroneckerDescriptor {
    match kind {
        ClosedFormKind::Preprojective => KroneckerDescriptor::preprojective(index),
        ClosedFormKind::Preinjective => KroneckerDescriptor::preinjective(index),
        ClosedFormKind::RegularDegreeOne => KroneckerDescriptor::regular("p", 1, vec![index]).unwrap(),
    }
}

/// `(kind, index)` for P_0..P_4, I_0..I_4 and R_p(1)..R_p(4) at a degree one point.
pub fn indecomposable_window() -> Vec<(ClosedFormKind, u32)> {
    KINDS
        .iter()
        .flat_map(|&k| {
            let lo = if k == ClosedFormKind::RegularDegreeOne { 1 } else { 0 };
            (lo..=4).map(move |n| (k, n))
        })
        .collect()
}

/// Regular tubes `(degree, partition)` with parts at most 2 and dimension
/// at most 5.
fn tube_shapes() -> Vec<(u32, Partition)> {
    let mut out = Vec::new();
    for w in 1..=5 {
        for p in Partition::all_of(w) {
            if p.part(0) > 2 {
                continue;
            }
            for d in [1, 2] {
                if d * w <= 5 {
                    out.push((d, p.clone()));
                }
            }
        }
    }
    out
}

/// Every module with dimension vector at most `(5, 5)` whose summands are
/// among `P0..P2`, `I0..I2` and regulars `R_p(t)`, `t <= 2`, at points of
/// degree one or two, realizable over `F_2` (at most three points of degree
/// one and one of degree two).
pub fn corpus() -> Vec<KroneckerDescriptor> {
    let tubes = tube_shapes();
    let mut regular_parts: Vec<Vec<(u32, Partition)>> = Vec::new();
    // multisets of tubes at distinct points: choose nondecreasing indices
    fn grow(
        tubes: &[(u32, Partition)],
        start: usize,
        acc: &mut Vec<(u32, Partition)>,
        out: &mut Vec<Vec<(u32, Partition)>>,
    ) {
        out.push(acc.clone());
        for i in start..tubes.len() {
            acc.push(tubes[i].clone());
            let dim: u32 = acc.iter().map(|(d, p)| d * p.weight()).sum();
            let deg1 = acc.iter().filter(|(d, _)| *d == 1).count();
            let deg2 = acc.iter().filter(|(d, _)| *d == 2).count();
            if dim <= 5 && deg1 <= 3 && deg2 <= 1 {
                grow(tubes, i, acc, out);
            }
            acc.pop();
        }
    }
    grow(&tubes, 0, &mut Vec::new(), &mut regular_parts);

    let mut out = Vec::new();
    // (index, dim) of P0..P2 and I0..I2
    for p0 in 0..=5u32 {
        for p1 in 0..=2u32 {
            for p2 in 0..=1u32 {
                for i0 in 0..=5u32 {
                    for i1 in 0..=2u32 {
                        for i2 in 0..=1u32 {
                            let a = p0 + 2 * p1 + 3 * p2 + i1 + 2 * i2;
                            let b = p1 + 2 * p2 + i0 + 2 * i1 + 3 * i2;
                            if a > 5 || b > 5 {
                                continue;
                            }
                            for regs in &regular_parts {
                                let r: u32 = regs.iter().map(|(d, p)| d * p.weight()).sum();
                                if a + r > 5 || b + r > 5 {
                                    continue;
                                }
                                let mut m = KroneckerDescriptor::new()
                                    .with_preprojective(0, p0)
                                    .with_preprojective(1, p1)
                                    .with_preprojective(2, p2)
                                    .with_preinjective(0, i0)
                                    .with_preinjective(1, i1)
                                    .with_preinjective(2, i2);
                                for (k, (d, lam)) in regs.iter().enumerate() {
                                    let label = PointLabel::new(format!("x{k}"), *d).unwrap();
                                    m.add_regular(label, lam.clone()).unwrap();
                                }
                                if !m.is_zero() {
                                    out.push(m);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
