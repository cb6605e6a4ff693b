//! Finite Weyl groups of type `A_n`, `C_2` and `G_2`.
//!
//! Type `A_n` elements are permutations of `{1, ..., n+1}` in one-line
//! notation with `s_i = (i, i+1)`. The two rank-2 groups are small enough to
//! enumerate once; their elements are stored as the ShortLex-minimal reduced
//! word, so structural equality is group equality in every type.
//!
//! Roots are stored as integer functionals on the cocharacter lattice. In
//! type `A_n` the lattice is `Z^{n+1}` and `alpha_ij = e_i - e_j`. For `C_2`
//! and `G_2` cocharacters are written in the fundamental-coweight basis, so a
//! root `a alpha_1 + b alpha_2` pairs with `lambda` as `a lambda_1 + b lambda_2`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genset::GenSet;

/// Cartan type of the finite Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoxeterType {
    /// `A_n`, the symmetric group on `n + 1` letters.
    A(usize),
    C2,
    G2,
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) => n,
            CoxeterType::C2 | CoxeterType::G2 => 2,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::C2 => f.write_str("C2"),
            CoxeterType::G2 => f.write_str("G2"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// An element of a finite Weyl group in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteElement {
    ty: CoxeterType,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
enum Repr {
    /// 0-based one-line notation: `perm[k] = w(k)`.
    Perm(Box<[u8]>),
    /// ShortLex-minimal reduced word, 1-based generator indices.
    Word(Box<[u8]>),
}

impl FiniteElement {
    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    /// One-line notation with values in `1..=n+1` (type A only).
    pub fn permutation(&self) -> Option<Vec<usize>> {
        match &self.repr {
            Repr::Perm(p) => Some(p.iter().map(|&v| v as usize + 1).collect()),
            Repr::Word(_) => None,
        }
    }

    /// The stored normal-form word (rank-2 types only).
    pub(crate) fn stored_word(&self) -> Option<&[u8]> {
        match &self.repr {
            Repr::Word(w) => Some(w),
            Repr::Perm(_) => None,
        }
    }
}

impl fmt::Display for FiniteElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Perm(p) => {
                f.write_str("[")?;
                for (k, v) in p.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", v + 1)?;
                }
                f.write_str("]")
            }
            Repr::Word(w) if w.is_empty() => f.write_str("e"),
            Repr::Word(w) => {
                for g in w.iter() {
                    write!(f, "s{g}")?;
                }
                Ok(())
            }
        }
    }
}

type Mat2 = [[i64; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// Full multiplication table of a rank-2 Weyl group.
#[derive(Debug)]
struct Rank2Table {
    words: Vec<Box<[u8]>>,
    index: HashMap<Box<[u8]>, usize>,
    /// Action on cocharacters (coweight coordinates).
    matrices: Vec<Mat2>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    elliptic: Vec<bool>,
}

impl Rank2Table {
    fn build(simple_coroots: &[Vec<i64>]) -> Self {
        // s_i(lambda) = lambda - lambda_i * alpha_i^vee
        let gens: Vec<Mat2> = simple_coroots
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut m = [[1, 0], [0, 1]];
                for (j, row) in m.iter_mut().enumerate() {
                    row[i] -= c[j];
                }
                m
            })
            .collect();

        // Breadth-first in discovery order; words of equal length come out in
        // lexicographic order, so the first word reaching an element is its
        // ShortLex normal form.
        let mut words: Vec<Box<[u8]>> = vec![Box::new([])];
        let mut matrices = vec![[[1, 0], [0, 1]]];
        let mut by_matrix: HashMap<Mat2, usize> = HashMap::from([(matrices[0], 0)]);
        let mut k = 0;
        while k < words.len() {
            for (g, gm) in gens.iter().enumerate() {
                let m = mat_mul(&matrices[k], gm);
                if let std::collections::hash_map::Entry::Vacant(e) = by_matrix.entry(m) {
                    let mut w = words[k].to_vec();
                    w.push(g as u8 + 1);
                    e.insert(words.len());
                    words.push(w.into_boxed_slice());
                    matrices.push(m);
                }
            }
            k += 1;
        }

        let mult: Vec<Vec<usize>> = matrices
            .iter()
            .map(|a| matrices.iter().map(|b| by_matrix[&mat_mul(a, b)]).collect())
            .collect();
        let inverse = mult
            .iter()
            .map(|row| {
                row.iter()
                    .position(|&c| c == 0)
                    .expect("group table has inverses")
            })
            .collect();
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Rank2Table {
            words,
            index,
            matrices,
            mult,
            inverse,
            elliptic: Vec::new(),
        }
    }
}

/// A finite Weyl group together with its root datum.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    ty: CoxeterType,
    coxeter_matrix: Vec<Vec<u32>>,
    positive_roots: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    rho2: Vec<i64>,
    regular_coweight: Vec<i64>,
    table: Option<Arc<Rank2Table>>,
}

impl CoxeterSystem {
    pub fn new(ty: CoxeterType) -> Result<Self> {
        match ty {
            CoxeterType::A(n) => Self::type_a(n),
            CoxeterType::C2 => Ok(Self::c2()),
            CoxeterType::G2 => Ok(Self::g2()),
        }
    }

    /// `A_n`, acting on `Z^{n+1}`.
    pub fn type_a(rank: usize) -> Result<Self> {
        if rank == 0 || rank > 62 {
            return Err(Error::UnsupportedGroup(format!("A{rank}")));
        }
        let dim = rank + 1;
        let unit = |i: usize, j: usize| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v[j] = -1;
            v
        };
        let mut positive_roots = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive_roots.push(unit(i, j));
            }
        }
        let simple_roots: Vec<_> = (0..rank).map(|i| unit(i, i + 1)).collect();
        let coxeter_matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        Ok(Self::assemble(
            CoxeterType::A(rank),
            coxeter_matrix,
            positive_roots,
            simple_roots.clone(),
            simple_roots,
            (0..dim).rev().map(|k| k as i64).collect(),
        ))
    }

    /// The symmetric group `S_n = W(A_{n-1})`.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::type_a(n.saturating_sub(1))
    }

    /// `C_2` with `alpha_1` short, `alpha_2` long, `(s_1 s_2)^4 = 1`.
    pub fn c2() -> Self {
        Self::rank2(
            CoxeterType::C2,
            4,
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]],
            [[2, -2], [-1, 2]],
        )
    }

    /// `G_2` with `alpha_1` short, `alpha_2` long, `(s_1 s_2)^6 = 1`.
    pub fn g2() -> Self {
        Self::rank2(
            CoxeterType::G2,
            6,
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2],
            ],
            [[2, -3], [-1, 2]],
        )
    }

    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`; row `i` is `alpha_i^vee` in
    /// coweight coordinates.
    fn rank2(ty: CoxeterType, m: u32, positive_roots: Vec<Vec<i64>>, cartan: Mat2) -> Self {
        let simple_coroots: Vec<Vec<i64>> = cartan.iter().map(|r| r.to_vec()).collect();
        let table = Rank2Table::build(&simple_coroots);
        let mut sys = Self::assemble(
            ty,
            vec![vec![1, m], vec![m, 1]],
            positive_roots,
            vec![vec![1, 0], vec![0, 1]],
            simple_coroots,
            vec![1, 1],
        );
        // Ellipticity is computed once by exhausting parabolic conjugates.
        sys.table = Some(Arc::new(table));
        let flags = sys
            .elements()
            .iter()
            .map(|w| sys.is_elliptic_by_exhaustion(w))
            .collect();
        Arc::get_mut(sys.table.as_mut().unwrap()).unwrap().elliptic = flags;
        sys
    }

    fn assemble(
        ty: CoxeterType,
        coxeter_matrix: Vec<Vec<u32>>,
        positive_roots: Vec<Vec<i64>>,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        regular_coweight: Vec<i64>,
    ) -> Self {
        let dim = simple_coroots[0].len();
        let rho2 = (0..dim)
            .map(|k| positive_roots.iter().map(|r| r[k]).sum())
            .collect();
        CoxeterSystem {
            ty,
            coxeter_matrix,
            positive_roots,
            simple_roots,
            simple_coroots,
            rho2,
            regular_coweight,
            table: None,
        }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Number of coordinates of a cocharacter.
    pub fn dim(&self) -> usize {
        self.simple_coroots[0].len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    /// `2 rho`, the sum of the positive roots.
    pub fn rho2(&self) -> &[i64] {
        &self.rho2
    }

    /// A fixed regular dominant cocharacter, used to read off root signs.
    pub fn regular_coweight(&self) -> &[i64] {
        &self.regular_coweight
    }

    pub fn full_set(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn order(&self) -> usize {
        match (&self.table, self.ty) {
            (Some(t), _) => t.words.len(),
            (None, CoxeterType::A(n)) => (1..=n + 1).product(),
            _ => unreachable!(),
        }
    }

    fn table(&self) -> &Rank2Table {
        self.table.as_deref().expect("rank-2 table")
    }

    fn idx(&self, word: &[u8]) -> usize {
        self.table().index[word]
    }

    fn element_at(&self, i: usize) -> FiniteElement {
        FiniteElement {
            ty: self.ty,
            repr: Repr::Word(self.table().words[i].clone()),
        }
    }

    fn check_gen(&self, gen: usize) -> Result<()> {
        if gen == 0 || gen > self.rank() {
            return Err(Error::GeneratorOutOfRange {
                gen,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_same(&self, w: &FiniteElement) -> Result<()> {
        if w.ty != self.ty {
            return Err(Error::MismatchedSystems {
                left: self.ty,
                right: w.ty,
            });
        }
        Ok(())
    }

    pub fn identity(&self) -> FiniteElement {
        let repr = match self.ty {
            CoxeterType::A(n) => Repr::Perm((0..=n as u8).collect()),
            _ => Repr::Word(Box::new([])),
        };
        FiniteElement { ty: self.ty, repr }
    }

    pub fn generator(&self, gen: usize) -> Result<FiniteElement> {
        self.check_gen(gen)?;
        Ok(self.gen_unchecked(gen))
    }

    fn gen_unchecked(&self, gen: usize) -> FiniteElement {
        match self.ty {
            CoxeterType::A(_) => self.right_mul_gen(&self.identity(), gen),
            _ => self.element_at(self.idx(&[gen as u8])),
        }
    }

    /// Evaluates an arbitrary (not necessarily reduced) word.
    pub fn element_from_word(&self, word: &[usize]) -> Result<FiniteElement> {
        let mut w = self.identity();
        for &g in word {
            self.check_gen(g)?;
            w = self.right_mul_gen(&w, g);
        }
        Ok(w)
    }

    /// One-line notation with values in `1..=n+1`.
    pub fn element_from_permutation(&self, one_line: &[usize]) -> Result<FiniteElement> {
        let CoxeterType::A(n) = self.ty else {
            return Err(Error::NotTypeA(self.ty));
        };
        if one_line.len() != n + 1 {
            return Err(Error::InvalidPermutation(format!(
                "expected {} entries, got {}",
                n + 1,
                one_line.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in one_line {
            if v == 0 || v > n + 1 || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a bijection"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(FiniteElement {
            ty: self.ty,
            repr: Repr::Perm(one_line.iter().map(|&v| (v - 1) as u8).collect()),
        })
    }

    /// Group product `ab`.
    pub fn multiply(&self, a: &FiniteElement, b: &FiniteElement) -> Result<FiniteElement> {
        self.check_same(a)?;
        self.check_same(b)?;
        Ok(self.mul(a, b))
    }

    /// Group product `ab`; both elements must come from this system.
    pub fn mul(&self, a: &FiniteElement, b: &FiniteElement) -> FiniteElement {
        debug_assert!(a.ty == self.ty && b.ty == self.ty);
        let repr = match (&a.repr, &b.repr) {
            (Repr::Perm(p), Repr::Perm(q)) => Repr::Perm(q.iter().map(|&k| p[k as usize]).collect()),
            (Repr::Word(u), Repr::Word(v)) => {
                let t = self.table();
                return self.element_at(t.mult[self.idx(u)][self.idx(v)]);
            }
            _ => panic!("mixed element representations"),
        };
        FiniteElement { ty: self.ty, repr }
    }

    pub fn inverse(&self, w: &FiniteElement) -> FiniteElement {
        match &w.repr {
            Repr::Perm(p) => {
                let mut inv = vec![0u8; p.len()];
                for (k, &v) in p.iter().enumerate() {
                    inv[v as usize] = k as u8;
                }
                FiniteElement {
                    ty: self.ty,
                    repr: Repr::Perm(inv.into_boxed_slice()),
                }
            }
            Repr::Word(u) => self.element_at(self.table().inverse[self.idx(u)]),
        }
    }

    /// `s_gen * w`.
    pub fn left_mul_gen(&self, gen: usize, w: &FiniteElement) -> FiniteElement {
        match &w.repr {
            Repr::Perm(p) => {
                // swaps the values gen-1 and gen (0-based)
                let (a, b) = (gen as u8 - 1, gen as u8);
                let q = p
                    .iter()
                    .map(|&v| {
                        if v == a {
                            b
                        } else if v == b {
                            a
                        } else {
                            v
                        }
                    })
                    .collect();
                FiniteElement {
                    ty: self.ty,
                    repr: Repr::Perm(q),
                }
            }
            Repr::Word(_) => self.mul(&self.gen_unchecked(gen), w),
        }
    }

    /// `w * s_gen`.
    pub fn right_mul_gen(&self, w: &FiniteElement, gen: usize) -> FiniteElement {
        match &w.repr {
            Repr::Perm(p) => {
                let mut q = p.clone();
                q.swap(gen - 1, gen);
                FiniteElement {
                    ty: self.ty,
                    repr: Repr::Perm(q),
                }
            }
            Repr::Word(_) => self.mul(w, &self.gen_unchecked(gen)),
        }
    }

    /// `s w s`.
    pub fn conjugate_by_gen(&self, gen: usize, w: &FiniteElement) -> FiniteElement {
        self.right_mul_gen(&self.left_mul_gen(gen, w), gen)
    }

    pub fn length(&self, w: &FiniteElement) -> usize {
        match &w.repr {
            Repr::Perm(p) => {
                let mut inv = 0;
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        if p[i] > p[j] {
                            inv += 1;
                        }
                    }
                }
                inv
            }
            Repr::Word(u) => u.len(),
        }
    }

    pub fn is_descent(&self, w: &FiniteElement, gen: usize, side: Side) -> bool {
        match (&w.repr, side) {
            (Repr::Perm(p), Side::Right) => p[gen - 1] > p[gen],
            (Repr::Perm(p), Side::Left) => {
                let pos = |v: u8| p.iter().position(|&x| x == v).unwrap();
                pos(gen as u8 - 1) > pos(gen as u8)
            }
            (Repr::Word(_), Side::Left) => self.length(&self.left_mul_gen(gen, w)) < self.length(w),
            (Repr::Word(_), Side::Right) => self.length(&self.right_mul_gen(w, gen)) < self.length(w),
        }
    }

    /// `D_L(w)` or `D_R(w)`.
    pub fn descents(&self, w: &FiniteElement, side: Side) -> GenSet {
        (1..=self.rank())
            .filter(|&g| self.is_descent(w, g, side))
            .collect()
    }

    /// `D(w) = D_L(w) ∪ D_R(w)`.
    pub fn descent_set(&self, w: &FiniteElement) -> GenSet {
        self.descents(w, Side::Left).union(self.descents(w, Side::Right))
    }

    /// Generators occurring in any (hence every) reduced word.
    pub fn support(&self, w: &FiniteElement) -> GenSet {
        match &w.repr {
            Repr::Perm(p) => {
                // s_i is in the support iff w does not stabilise {1..i}
                let mut set = GenSet::EMPTY;
                let mut max = 0;
                for i in 1..p.len() {
                    max = max.max(p[i - 1] as usize);
                    if max >= i {
                        set.insert(i);
                    }
                }
                set
            }
            Repr::Word(u) => u.iter().map(|&g| g as usize).collect(),
        }
    }

    pub fn has_full_support(&self, w: &FiniteElement) -> bool {
        self.support(w) == self.full_set()
    }

    /// The ShortLex-minimal reduced word.
    pub fn reduced_word(&self, w: &FiniteElement) -> Vec<usize> {
        match &w.repr {
            Repr::Word(u) => u.iter().map(|&g| g as usize).collect(),
            Repr::Perm(_) => {
                let mut word = Vec::with_capacity(self.length(w));
                let mut cur = w.clone();
                while let Some(g) = self.descents(&cur, Side::Left).min() {
                    word.push(g);
                    cur = self.left_mul_gen(g, &cur);
                }
                word
            }
        }
    }

    /// A product of all simple reflections, each exactly once.
    pub fn is_coxeter(&self, w: &FiniteElement) -> bool {
        self.length(w) == self.rank() && self.has_full_support(w)
    }

    /// Cycle lengths in decreasing order, fixed points included (type A only).
    pub fn cycle_type(&self, w: &FiniteElement) -> Result<Vec<usize>> {
        let Repr::Perm(p) = &w.repr else {
            return Err(Error::NotTypeA(self.ty));
        };
        let mut seen = vec![false; p.len()];
        let mut cycles = Vec::new();
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = p[k] as usize;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        Ok(cycles)
    }

    /// Not contained in any conjugate of a proper parabolic subgroup.
    ///
    /// Type A: `w` is an `(n+1)`-cycle. Rank 2: looked up from the table,
    /// which was filled by [`Self::is_elliptic_by_exhaustion`].
    pub fn is_elliptic(&self, w: &FiniteElement) -> bool {
        match &w.repr {
            Repr::Perm(p) => self.cycle_type(w).unwrap() == [p.len()],
            Repr::Word(u) => self.table().elliptic[self.idx(u)],
        }
    }

    /// `w ∈ u W_T u^{-1}` for a proper `T` iff some conjugate of `w` lacks
    /// full support.
    pub fn is_elliptic_by_exhaustion(&self, w: &FiniteElement) -> bool {
        self.conjugacy_class(w).iter().all(|u| self.has_full_support(u))
    }

    /// Closure of `{w}` under conjugation by simple reflections.
    pub fn conjugacy_class(&self, w: &FiniteElement) -> BTreeSet<FiniteElement> {
        let mut class = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(u) = queue.pop_front() {
            for g in 1..=self.rank() {
                let c = self.conjugate_by_gen(g, &u);
                if !class.contains(&c) {
                    class.insert(c.clone());
                    queue.push_back(c);
                }
            }
        }
        class
    }

    /// Every group element; type A in lexicographic one-line order, rank 2 in
    /// ShortLex order.
    pub fn elements(&self) -> Vec<FiniteElement> {
        match self.ty {
            CoxeterType::A(n) => {
                let mut perm: Vec<u8> = (0..=n as u8).collect();
                let mut out = Vec::with_capacity(self.order());
                loop {
                    out.push(FiniteElement {
                        ty: self.ty,
                        repr: Repr::Perm(perm.clone().into_boxed_slice()),
                    });
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
                out
            }
            _ => (0..self.table().words.len())
                .map(|i| self.element_at(i))
                .collect(),
        }
    }

    /// The longest element `w_0`.
    pub fn longest_element(&self) -> FiniteElement {
        match self.ty {
            CoxeterType::A(n) => FiniteElement {
                ty: self.ty,
                repr: Repr::Perm((0..=n as u8).rev().collect()),
            },
            _ => self.element_at(self.table().words.len() - 1),
        }
    }

    /// All products of `S` taken in some order.
    pub fn coxeter_elements(&self) -> BTreeSet<FiniteElement> {
        let mut order: Vec<u8> = (1..=self.rank() as u8).collect();
        let mut out = BTreeSet::new();
        loop {
            let word: Vec<usize> = order.iter().map(|&g| g as usize).collect();
            out.insert(self.element_from_word(&word).expect("valid generators"));
            if !next_permutation(&mut order) {
                break;
            }
        }
        out
    }

    /// Elements of the standard parabolic subgroup `W_T`.
    pub fn parabolic_elements(&self, t: GenSet) -> Vec<FiniteElement> {
        self.elements()
            .into_iter()
            .filter(|w| self.support(w).is_subset(t))
            .collect()
    }

    /// `<alpha, lambda>`.
    pub fn pairing(&self, root: &[i64], lambda: &[i64]) -> i64 {
        root.iter().zip(lambda).map(|(a, b)| a * b).sum()
    }

    /// `w(lambda)` on cocharacter coordinates.
    pub fn act(&self, w: &FiniteElement, lambda: &[i64]) -> Vec<i64> {
        match &w.repr {
            Repr::Perm(p) => {
                let mut out = vec![0; lambda.len()];
                for (k, &v) in p.iter().enumerate() {
                    out[v as usize] = lambda[k];
                }
                out
            }
            Repr::Word(u) => {
                let m = &self.table().matrices[self.idx(u)];
                vec![
                    m[0][0] * lambda[0] + m[0][1] * lambda[1],
                    m[1][0] * lambda[0] + m[1][1] * lambda[1],
                ]
            }
        }
    }

    /// `s_gen(lambda) = lambda - <alpha_gen, lambda> alpha_gen^vee`.
    pub fn reflect(&self, gen: usize, lambda: &[i64]) -> Vec<i64> {
        let c = self.pairing(&self.simple_roots[gen - 1], lambda);
        lambda
            .iter()
            .zip(&self.simple_coroots[gen - 1])
            .map(|(l, a)| l - c * a)
            .collect()
    }

    /// Whether `w^{-1}(alpha)` is a negative root, read off as
    /// `<alpha, w(rho^vee)> < 0` for the fixed regular dominant `rho^vee`.
    pub fn sends_to_negative(&self, w: &FiniteElement, root: &[i64]) -> bool {
        self.pairing(root, &self.act(w, &self.regular_coweight)) < 0
    }
}

/// Lexicographic successor; returns `false` after the last permutation.
fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
