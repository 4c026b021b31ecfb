//! Partitions of minimum-vector sets into frames.
//!
//! Two frame shapes appear: coordinate frames (2n vectors forming n
//! orthogonal +-pairs of equal norm) and triangular frames (3n vectors in
//! n/2 orthogonal planes, each plane holding three +-pairs at mutual angle
//! 60 degrees). A backtracking colorer searches for a partition of the whole
//! minimum-vector set into such frames; verification is independent of the
//! search and re-checks every axiom exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

use super::{CosetProfileEntry, Lattice, LatticeError};
use crate::exactmath::{dot, FieldMat, IntMat, QuadElem, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Coordinate,
    Triangular,
}

#[derive(Debug, Clone)]
pub struct FramePartition {
    pub kind: FrameKind,
    /// Each part lists full vectors (both signs included).
    pub parts: Vec<Vec<Vec<QuadElem>>>,
}

#[derive(Debug, Clone)]
pub struct FrameCheckReport {
    pub ok: bool,
    pub failures: Vec<String>,
}

fn vec_neg(v: &[QuadElem]) -> Vec<QuadElem> {
    v.iter().map(|x| -x.clone()).collect()
}

/// Check that `partition` is a partition of `vectors` into valid frames.
pub fn verify_frame_partition(
    vectors: &[Vec<QuadElem>],
    partition: &FramePartition,
) -> FrameCheckReport {
    let mut failures = Vec::new();
    let whole: BTreeSet<Vec<QuadElem>> = vectors.iter().cloned().collect();
    if whole.len() != vectors.len() {
        failures.push("input vector set has duplicates".into());
    }
    let mut seen: BTreeSet<Vec<QuadElem>> = BTreeSet::new();
    for (pi, part) in partition.parts.iter().enumerate() {
        for v in part {
            if !whole.contains(v) {
                failures.push(format!("part {pi} contains a vector outside the set"));
            }
            if !seen.insert(v.clone()) {
                failures.push(format!("part {pi} repeats a vector already used"));
            }
        }
        if let Err(e) = check_single_frame(part, partition.kind) {
            failures.push(format!("part {pi}: {e}"));
        }
    }
    if seen.len() != whole.len() {
        failures.push(format!(
            "partition covers {} of {} vectors",
            seen.len(),
            whole.len()
        ));
    }
    FrameCheckReport { ok: failures.is_empty(), failures }
}

fn check_single_frame(part: &[Vec<QuadElem>], kind: FrameKind) -> Result<(), String> {
    if part.is_empty() {
        return Err("empty frame".into());
    }
    let n = part[0].len();
    let set: BTreeSet<Vec<QuadElem>> = part.iter().cloned().collect();
    for v in part {
        if !set.contains(&vec_neg(v)) {
            return Err("frame not closed under negation".into());
        }
    }
    // One representative per +-pair, deterministic choice.
    let mut reps: Vec<Vec<QuadElem>> = Vec::new();
    for v in part {
        let neg = vec_neg(v);
        if *v < neg {
            reps.push(v.clone());
        }
    }
    let m = dot(&reps[0], &reps[0]);
    for r in &reps {
        if dot(r, r) != m {
            return Err("frame vectors have unequal norms".into());
        }
    }
    match kind {
        FrameKind::Coordinate => {
            if reps.len() != n {
                return Err(format!("coordinate frame has {} pairs, wants {n}", reps.len()));
            }
            for i in 0..reps.len() {
                for j in (i + 1)..reps.len() {
                    if !dot(&reps[i], &reps[j]).is_zero() {
                        return Err("coordinate frame pairs not orthogonal".into());
                    }
                }
            }
        }
        FrameKind::Triangular => {
            if n % 2 != 0 || reps.len() != 3 * n / 2 {
                return Err(format!(
                    "triangular frame has {} pairs, wants {}",
                    reps.len(),
                    3 * n / 2
                ));
            }
            let half = &m / &QuadElem::from_int(2);
            // Components of the non-orthogonality graph must be planar
            // triples with pairwise dot +-m/2.
            let k = reps.len();
            let mut comp = vec![usize::MAX; k];
            let mut next = 0;
            for start in 0..k {
                if comp[start] != usize::MAX {
                    continue;
                }
                let mut stack = vec![start];
                comp[start] = next;
                while let Some(i) = stack.pop() {
                    for j in 0..k {
                        if comp[j] == usize::MAX && !dot(&reps[i], &reps[j]).is_zero() {
                            comp[j] = next;
                            stack.push(j);
                        }
                    }
                }
                next += 1;
            }
            if next != n / 2 {
                return Err(format!("found {next} planes, wants {}", n / 2));
            }
            for c in 0..next {
                let members: Vec<&Vec<QuadElem>> =
                    (0..k).filter(|&i| comp[i] == c).map(|i| &reps[i]).collect();
                if members.len() != 3 {
                    return Err(format!("plane has {} pairs, wants 3", members.len()));
                }
                for a in 0..3 {
                    for b in (a + 1)..3 {
                        let d = dot(members[a], members[b]).abs();
                        if d != half {
                            return Err("in-plane angle is not 60 degrees".into());
                        }
                    }
                }
                let span = FieldMat::from_rows(members.iter().map(|v| (*v).clone()).collect());
                if span.rank() != 2 {
                    return Err("plane triple is not coplanar".into());
                }
            }
        }
    }
    Ok(())
}

/// Backtracking search for a partition of `vectors` into `num_parts` frames
/// of the given kind. Deterministic; gives up when the node budget runs out.
pub fn color_partition_search(
    vectors: &[Vec<QuadElem>],
    kind: FrameKind,
    num_parts: usize,
    node_budget: u64,
) -> Option<FramePartition> {
    assert!(!vectors.is_empty());
    let n = vectors[0].len();
    let set: BTreeSet<Vec<QuadElem>> = vectors.iter().cloned().collect();
    // Deterministic +-pair representatives, lex order.
    let mut reps: Vec<Vec<QuadElem>> = Vec::new();
    for v in &set {
        let neg = vec_neg(v);
        assert!(set.contains(&neg), "vector set must be negation closed");
        if *v < neg {
            reps.push(v.clone());
        }
    }
    let m = dot(&reps[0], &reps[0]);
    for r in &reps {
        assert_eq!(dot(r, r), m, "vector norms must agree");
    }
    let half = &m / &QuadElem::from_int(2);
    let cap = match kind {
        FrameKind::Coordinate => n,
        FrameKind::Triangular => 3 * n / 2,
    };
    if reps.len() != cap * num_parts {
        return None;
    }
    // conflict[i][j]: i and j can never share a frame.
    let k = reps.len();
    let mut compatible = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let d = dot(&reps[i], &reps[j]).abs();
            compatible[i][j] = match kind {
                FrameKind::Coordinate => d.is_zero(),
                FrameKind::Triangular => d.is_zero() || d == half,
            };
        }
    }
    let mut colors = vec![usize::MAX; k];
    let mut sizes = vec![0usize; num_parts];
    let mut budget = node_budget;
    if !assign(
        0,
        &mut colors,
        &mut sizes,
        &compatible,
        &reps,
        kind,
        cap,
        &half,
        &mut budget,
    ) {
        return None;
    }
    let mut parts: Vec<Vec<Vec<QuadElem>>> = vec![Vec::new(); num_parts];
    for (i, r) in reps.iter().enumerate() {
        parts[colors[i]].push(r.clone());
        parts[colors[i]].push(vec_neg(r));
    }
    for p in &mut parts {
        p.sort();
    }
    let partition = FramePartition { kind, parts };
    debug_assert!(verify_frame_partition(vectors, &partition).ok);
    Some(partition)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    i: usize,
    colors: &mut Vec<usize>,
    sizes: &mut Vec<usize>,
    compatible: &[Vec<bool>],
    reps: &[Vec<QuadElem>],
    kind: FrameKind,
    cap: usize,
    half: &QuadElem,
    budget: &mut u64,
) -> bool {
    if i == reps.len() {
        return true;
    }
    let used = sizes.iter().filter(|&&s| s > 0).count();
    for c in 0..sizes.len().min(used + 1) {
        if sizes[c] == cap {
            continue;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let members: Vec<usize> = (0..i).filter(|&j| colors[j] == c).collect();
        if !members.iter().all(|&j| compatible[i][j]) {
            continue;
        }
        if kind == FrameKind::Triangular && !plane_feasible(i, &members, reps, half) {
            continue;
        }
        colors[i] = c;
        sizes[c] += 1;
        if assign(i + 1, colors, sizes, compatible, reps, kind, cap, half, budget) {
            return true;
        }
        colors[i] = usize::MAX;
        sizes[c] -= 1;
    }
    false
}

/// Partial structural check for triangular frames: the members of a color
/// that are non-orthogonal to the candidate must form at most one plane
/// with it (at most 2 such members, pairwise at 60 degrees, coplanar).
fn plane_feasible(i: usize, members: &[usize], reps: &[Vec<QuadElem>], half: &QuadElem) -> bool {
    let close: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&j| !dot(&reps[i], &reps[j]).is_zero())
        .collect();
    match close.len() {
        0 => true,
        1 => dot(&reps[i], &reps[close[0]]).abs() == *half,
        2 => {
            let a = close[0];
            let b = close[1];
            if dot(&reps[i], &reps[a]).abs() != *half
                || dot(&reps[i], &reps[b]).abs() != *half
                || dot(&reps[a], &reps[b]).abs() != *half
            {
                return false;
            }
            let span = FieldMat::from_rows(vec![
                reps[a].clone(),
                reps[b].clone(),
                reps[i].clone(),
            ]);
            span.rank() == 2
        }
        _ => false,
    }
}

/// Check that T is a norm-doubling endomorphism of the lattice: rows of
/// gen*T stay in the lattice, the transformed Gram is exactly twice the
/// original, and 2L sits inside TL.
pub fn check_norm_doubling(lat: &Lattice, t: &FieldMat) -> Result<(), LatticeError> {
    let gt = lat.gen().matmul(t);
    for i in 0..gt.nrows() {
        if !lat.contains(gt.row(i)) {
            return Err(LatticeError(format!(
                "row {i} of gen*T leaves the lattice"
            )));
        }
    }
    let doubled = lat.gram().scale(&QuadElem::from_int(2));
    if gt.gram() != doubled {
        return Err(LatticeError("gen*T does not double the Gram matrix".into()));
    }
    let tl = Lattice::from_gen(gt, lat.field_d())?;
    let two = lat.scale(&QuadElem::from_int(2));
    if !two.subset_of(&tl) {
        return Err(LatticeError("2L is not contained in TL".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCountingTerm {
    /// Total vectors of this kind across all cosets.
    pub count: BigInt,
    /// Vectors per coset (the denominator of the printed term).
    pub divisor: BigInt,
}

impl ClassCountingTerm {
    pub fn new(count: i64, divisor: i64) -> ClassCountingTerm {
        ClassCountingTerm { count: BigInt::from(count), divisor: BigInt::from(divisor) }
    }
}

/// Sum of count/divisor terms, exact.
pub fn class_counting_sum(terms: &[ClassCountingTerm]) -> Rat {
    let mut s = Rat::zero();
    for t in terms {
        s += Rat::new(t.count.clone(), t.divisor.clone());
    }
    s
}

/// First-principles counting terms from the coset minimum profile: group
/// cosets by (minimum norm, per-coset count); each group contributes
/// total/per. The sum over groups is the number of cosets, 2^n.
pub fn derive_counting_terms(profile: &[CosetProfileEntry]) -> Vec<ClassCountingTerm> {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<(QuadElem, usize), u64> = BTreeMap::new();
    for e in profile {
        *groups.entry((e.min_norm.clone(), e.vectors.len())).or_insert(0) += 1;
    }
    groups
        .into_iter()
        .map(|((_, per), cosets)| ClassCountingTerm {
            count: BigInt::from(per as u64 * cosets),
            divisor: BigInt::from(per),
        })
        .collect()
}

/// Binary linear code as a generator bit matrix over GF(2).
#[derive(Debug, Clone)]
pub struct BinaryCode {
    pub n: usize,
    /// Reduced basis rows, each of length n with entries 0/1.
    pub rows: Vec<Vec<u8>>,
}

impl BinaryCode {
    pub fn new(n: usize, words: &[&[u8]]) -> BinaryCode {
        let rows = words.iter().map(|w| w.to_vec()).collect();
        let mut c = BinaryCode { n, rows };
        c.reduce();
        c
    }

    fn reduce(&mut self) {
        let n = self.n;
        let mut rows = self.rows.clone();
        let mut pivot_row = 0;
        for col in 0..n {
            if let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] == 1) {
                rows.swap(pivot_row, r);
                for r2 in 0..rows.len() {
                    if r2 != pivot_row && rows[r2][col] == 1 {
                        for c in 0..n {
                            rows[r2][c] ^= rows[pivot_row][c];
                        }
                    }
                }
                pivot_row += 1;
            }
        }
        rows.truncate(pivot_row);
        rows.retain(|r| r.iter().any(|&b| b == 1));
        self.rows = rows;
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn dual(&self) -> BinaryCode {
        // Solve rows * x = 0 over GF(2); basis of the null space.
        let n = self.n;
        let rows = &self.rows;
        // After reduce(), each row has a leading pivot column.
        let mut pivots = Vec::new();
        for r in rows {
            pivots.push(r.iter().position(|&b| b == 1).expect("nonzero row"));
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut x = vec![0u8; n];
            x[f] = 1;
            for (ri, &p) in pivots.iter().enumerate() {
                // Row ri: x_p = sum of row entries at free columns times x.
                let mut acc = 0u8;
                for c in 0..n {
                    if c != p && rows[ri][c] == 1 {
                        acc ^= x[c];
                    }
                }
                x[p] = acc;
            }
            basis.push(x);
        }
        let refs: Vec<&[u8]> = basis.iter().map(|v| v.as_slice()).collect();
        BinaryCode::new(n, &refs)
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        // Reduce word against the basis.
        let mut w: Vec<u8> = word.iter().map(|&b| b & 1).collect();
        for r in &self.rows {
            let p = r.iter().position(|&b| b == 1).unwrap();
            if w[p] == 1 {
                for c in 0..self.n {
                    w[c] ^= r[c];
                }
            }
        }
        w.iter().all(|&b| b == 0)
    }
}

/// Intersection of binary codes via duals: meet(C) = dual(sum of duals).
pub fn intersect_codes(codes: &[&BinaryCode]) -> BinaryCode {
    let n = codes[0].n;
    let mut words: Vec<Vec<u8>> = Vec::new();
    for c in codes {
        for r in c.dual().rows {
            words.push(r);
        }
    }
    let refs: Vec<&[u8]> = words.iter().map(|v| v.as_slice()).collect();
    BinaryCode::new(n, &refs).dual()
}

/// Lattice of integer vectors congruent mod 2 to a codeword.
pub fn construction_a(code: &BinaryCode) -> Lattice {
    let n = code.n;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for r in &code.rows {
        rows.push(r.iter().map(|&b| BigInt::from(b)).collect());
    }
    for i in 0..n {
        let mut r = vec![BigInt::zero(); n];
        r[i] = BigInt::from(2);
        rows.push(r);
    }
    let h = IntMat::from_rows(rows).hnf();
    assert_eq!(h.nrows(), n);
    let gen_rows: Vec<Vec<QuadElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| QuadElem::from_rat(Rat::from_integer(h.at(i, j).clone())))
                .collect()
        })
        .collect();
    Lattice::from_gen(FieldMat::from_rows(gen_rows), 1).expect("full-rank construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BwSource {
    /// Verified against an explicit partition in low dimension.
    Stored,
    /// Printed closed form, carried as stated; conflicts with the stored
    /// low-dimensional values, so treat with suspicion.
    ClosedForm,
}

/// Number of coordinate frames partitioning the minimum vectors of the
/// Barnes-Wall family member of dimension 2^m.
pub fn bw_frame_count(m: u32) -> (BigInt, BwSource) {
    match m {
        2 => (BigInt::from(3), BwSource::Stored),
        3 => (BigInt::from(15), BwSource::Stored),
        4 => (BigInt::from(135), BwSource::Stored),
        _ => {
            let mut p = BigInt::one();
            for j in 1..m {
                p *= (BigInt::one() << j) - 1;
            }
            (p, BwSource::ClosedForm)
        }
    }
}
