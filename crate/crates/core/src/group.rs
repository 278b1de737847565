//! Finite groups of invertible cyclotomic matrices, linear or modulo scalars.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Deref;

use num_integer::Integer;

use crate::cyclo::{normalize_conductor, Cyclo};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// A closed finite group. Elements are listed in breadth-first order from the
/// identity; element `k > 0` equals `elements[parent] · generators[g]`.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    dim: usize,
    projective: bool,
    elements: Vec<Matrix<Cyclo>>,
    index: BTreeMap<Matrix<Cyclo>, usize>,
    generators: Vec<Matrix<Cyclo>>,
    generator_indices: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
    inverses: Vec<usize>,
}

/// A group of matrices taken up to scalars. Each element is stored with its
/// first nonzero row-major entry equal to one.
#[derive(Clone, Debug)]
pub struct ProjectiveGroup(FiniteMatrixGroup);

impl Deref for ProjectiveGroup {
    type Target = FiniteMatrixGroup;
    fn deref(&self) -> &FiniteMatrixGroup {
        &self.0
    }
}

/// Scales `m` so that its first nonzero row-major entry is one.
pub fn projective_canonical(m: &Matrix<Cyclo>) -> Matrix<Cyclo> {
    let first = m.entries().iter().find(|x| !x.is_zero()).expect("nonzero matrix");
    if first.is_one() {
        return m.clone();
    }
    let inv = first.inv().expect("nonzero entry");
    m.map(|x| x * &inv)
}

fn check_generators(gens: &[Matrix<Cyclo>], conductor_cap: u64) -> Result<usize> {
    let dim = gens.first().map_or(0, |g| g.rows());
    if dim == 0 {
        return Err(Error::Invalid("at least one generator is required".into()));
    }
    for g in gens {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::Invalid("generators must be square of one size".into()));
        }
        let c = normalize_conductor(g.conductor()) as u64;
        if c > conductor_cap {
            return Err(Error::ConductorCap { conductor: c, cap: conductor_cap });
        }
        if g.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    Ok(dim)
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of the generators.
    pub fn closure(generators: &[Matrix<Cyclo>], max_order: usize, conductor_cap: u64) -> Result<Self> {
        let dim = check_generators(generators, conductor_cap)?;
        Self::build(dim, generators.to_vec(), max_order, false)
    }

    fn canon(&self, m: Matrix<Cyclo>) -> Matrix<Cyclo> {
        if self.projective {
            projective_canonical(&m)
        } else {
            m
        }
    }

    fn build(dim: usize, generators: Vec<Matrix<Cyclo>>, max_order: usize, projective: bool) -> Result<Self> {
        let mut g = FiniteMatrixGroup {
            dim,
            projective,
            elements: Vec::new(),
            index: BTreeMap::new(),
            generators: Vec::new(),
            generator_indices: Vec::new(),
            parent: Vec::new(),
            inverses: Vec::new(),
        };
        g.generators = generators.into_iter().map(|m| g.canon(m)).collect();
        let id = Matrix::identity(dim);
        g.index.insert(id.clone(), 0);
        g.elements.push(id);
        g.parent.push(None);
        let mut head = 0;
        while head < g.elements.len() {
            for (gi, gen) in g.generators.iter().enumerate() {
                let prod = g.elements[head].mul(gen);
                let prod = if projective { projective_canonical(&prod) } else { prod };
                if !g.index.contains_key(&prod) {
                    if g.elements.len() >= max_order {
                        return Err(Error::ExceedsMaxOrder { max_order });
                    }
                    g.index.insert(prod.clone(), g.elements.len());
                    g.elements.push(prod);
                    g.parent.push(Some((head, gi)));
                }
            }
            head += 1;
        }
        g.generator_indices = g.generators.iter().map(|m| g.index[m]).collect();
        g.compute_inverses();
        Ok(g)
    }

    fn compute_inverses(&mut self) {
        let gen_inv: Vec<Matrix<Cyclo>> = self
            .generators
            .iter()
            .map(|m| self.canon(m.inverse().expect("invertible generator")))
            .collect();
        let mut inv = vec![0usize; self.elements.len()];
        for k in 1..self.elements.len() {
            let (p, gi) = self.parent[k].expect("non-identity has a parent");
            // (e_p · g)⁻¹ = g⁻¹ · e_p⁻¹
            let m = self.canon(gen_inv[gi].mul(&self.elements[inv[p]]));
            inv[k] = self.index[&m];
        }
        self.inverses = inv;
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<Cyclo>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix<Cyclo> {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Matrix<Cyclo>] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// `(parent, generator)` with `element(i) = element(parent) · generator`.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    pub fn index_of(&self, m: &Matrix<Cyclo>) -> Option<usize> {
        if self.projective {
            self.index.get(&projective_canonical(m)).copied()
        } else {
            self.index.get(m).copied()
        }
    }

    pub fn contains(&self, m: &Matrix<Cyclo>) -> bool {
        self.index_of(m).is_some()
    }

    pub fn mul_indices(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b]);
        self.index_of(&m).expect("group is closed")
    }

    /// Least common multiple of all entry conductors.
    pub fn conductor(&self) -> u32 {
        self.elements.iter().fold(1, |acc, m| crate::cyclo::lcm_u32(acc, m.conductor()))
    }

    /// Indices of the elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                let e = &self.elements[i];
                self.generators
                    .iter()
                    .all(|g| self.canon(e.mul(g)) == self.canon(g.mul(e)))
            })
            .collect()
    }

    /// Indices of scalar elements.
    pub fn scalar_indices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].scalar_value().is_some()).collect()
    }

    /// Indices of the elements with exactly one nonzero entry per row and column.
    pub fn monomial_indices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].is_monomial()).collect()
    }

    /// The group `C⁻¹GC`, element `i` mapped to element `i`.
    pub fn conjugate(&self, c: &Matrix<Cyclo>, c_inv: &Matrix<Cyclo>) -> FiniteMatrixGroup {
        let conj = |m: &Matrix<Cyclo>| self.canon(c_inv.mul(m).mul(c));
        let elements: Vec<_> = self.elements.iter().map(conj).collect();
        let index = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        FiniteMatrixGroup {
            dim: self.dim,
            projective: self.projective,
            index,
            generators: self.generators.iter().map(conj).collect(),
            generator_indices: self.generator_indices.clone(),
            parent: self.parent.clone(),
            inverses: self.inverses.clone(),
            elements,
        }
    }

    /// Order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul_indices(cur, i);
            k += 1;
        }
        k
    }

    /// Subgroup generated by the given elements, as a group of its own.
    pub fn subgroup(&self, gens: &[Matrix<Cyclo>]) -> Result<FiniteMatrixGroup> {
        let gens: Vec<_> = if gens.is_empty() { vec![Matrix::identity(self.dim)] } else { gens.to_vec() };
        Self::build(self.dim, gens, self.order(), self.projective)
    }

    /// The derived subgroup: normal closure of the generator commutators.
    pub fn commutator_subgroup(&self) -> FiniteMatrixGroup {
        let inv = |m: &Matrix<Cyclo>| self.elements[self.inverses[self.index_of(m).expect("member")]].clone();
        let mut gens: Vec<Matrix<Cyclo>> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = self.canon(a.mul(b).mul(&inv(a)).mul(&inv(b)));
                if !c.scalar_value().is_some_and(|s| s.is_one()) && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        loop {
            let k = self.subgroup(&gens).expect("subgroup of a finite group");
            let mut grew = false;
            for g in &self.generators {
                let gi = inv(g);
                for s in k.generators.clone() {
                    let c = self.canon(g.mul(&s).mul(&gi));
                    if !k.contains(&c) {
                        gens.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return k;
            }
        }
    }

    /// Whether `self` is normalized by every generator of `g`.
    pub fn is_normal_in(&self, g: &FiniteMatrixGroup) -> bool {
        g.generators.iter().all(|x| {
            let xi = x.inverse().expect("invertible");
            self.generators.iter().all(|s| self.contains(&x.mul(s).mul(&xi)))
        })
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens: Vec<(usize, usize)> =
            self.generator_indices.iter().map(|&g| (g, self.inverses[g])).collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(g, gi) in &gens {
                    let y = self.mul_indices(self.mul_indices(g, x), gi);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// All homomorphisms to the multiplicative group, through the abelianization.
    pub fn linear_characters(&self) -> Vec<Character> {
        let k = self.commutator_subgroup();
        let n = self.order();
        // Coset ids of G/[G,G].
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for e in 0..n {
            if coset[e] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(e);
            for kk in k.elements() {
                let i = self.index_of(&self.elements[e].mul(kk)).expect("closed");
                coset[i] = id;
            }
        }
        let m = reps.len();
        let qmul = |a: usize, b: usize| coset[self.mul_indices(reps[a], reps[b])];
        let identity = coset[0];
        // Extend characters one generator at a time; phases are fractions mod 1.
        let mut members: Vec<usize> = vec![identity];
        let mut chars: Vec<BTreeMap<usize, (u64, u64)>> = vec![BTreeMap::from([(identity, (0, 1))])];
        for &g in &self.generator_indices {
            let q = coset[g];
            if members.contains(&q) {
                continue;
            }
            let member_set: BTreeSet<usize> = members.iter().copied().collect();
            let mut powers = vec![identity];
            let mut cur = q;
            while !member_set.contains(&cur) {
                powers.push(cur);
                cur = qmul(cur, q);
            }
            let e = powers.len() as u64;
            let qe = cur;
            let mut new_chars = Vec::new();
            for psi in &chars {
                let (vn, vd) = psi[&qe];
                for j in 0..e {
                    // χ(q) = (ψ(q^e) + j) / e
                    let phase_q = reduce_phase(vn + j * vd, vd * e);
                    let mut chi = BTreeMap::new();
                    for (i, &p) in powers.iter().enumerate() {
                        let pq = mul_phase(phase_q, i as u64);
                        for &h in &members {
                            chi.insert(qmul(p, h), add_phase(pq, psi[&h]));
                        }
                    }
                    new_chars.push(chi);
                }
            }
            members = chars_domain(&new_chars[0]);
            chars = new_chars;
        }
        debug_assert_eq!(members.len(), m);
        let mut out: Vec<Character> = chars
            .into_iter()
            .map(|chi| {
                let phases: Vec<(u64, u64)> = (0..n).map(|e| chi[&coset[e]]).collect();
                Character::from_phases(phases)
            })
            .collect();
        let key = |c: &Character| -> Vec<(u64, u64)> {
            self.generator_indices.iter().map(|&g| c.phases[g]).collect()
        };
        out.sort_by(|a, b| {
            let ka = key(a);
            let kb = key(b);
            for (x, y) in ka.iter().zip(&kb) {
                let o = (x.0 * y.1).cmp(&(y.0 * x.1));
                if o != core::cmp::Ordering::Equal {
                    return o;
                }
            }
            core::cmp::Ordering::Equal
        });
        out
    }

    pub fn trivial_character(&self) -> Character {
        Character::from_phases(vec![(0, 1); self.order()])
    }

    /// The group modulo scalars, closed from the canonical generators.
    pub fn projectivize(&self) -> ProjectiveGroup {
        let gens: Vec<_> = self.generators.iter().map(projective_canonical).collect();
        ProjectiveGroup(Self::build(self.dim, gens, self.order(), true).expect("quotient of a finite group"))
    }
}

fn chars_domain(c: &BTreeMap<usize, (u64, u64)>) -> Vec<usize> {
    c.keys().copied().collect()
}

fn reduce_phase(n: u64, d: u64) -> (u64, u64) {
    let n = n % d;
    let g = n.gcd(&d);
    (n / g, d / g)
}

fn add_phase(a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
    let d = a.1.lcm(&b.1);
    reduce_phase(a.0 * (d / a.1) + b.0 * (d / b.1), d)
}

fn mul_phase(a: (u64, u64), k: u64) -> (u64, u64) {
    reduce_phase(a.0 * k, a.1)
}

impl ProjectiveGroup {
    pub fn closure(generators: &[Matrix<Cyclo>], max_order: usize, conductor_cap: u64) -> Result<Self> {
        let dim = check_generators(generators, conductor_cap)?;
        Ok(ProjectiveGroup(FiniteMatrixGroup::build(dim, generators.to_vec(), max_order, true)?))
    }

    pub fn as_group(&self) -> &FiniteMatrixGroup {
        &self.0
    }

    pub fn subgroup(&self, gens: &[Matrix<Cyclo>]) -> Result<ProjectiveGroup> {
        Ok(ProjectiveGroup(self.0.subgroup(gens)?))
    }

    pub fn orbit(&self, p: &ProjectivePoint) -> BTreeSet<ProjectivePoint> {
        let mut seen = BTreeSet::from([p.clone()]);
        let mut queue = VecDeque::from([p.clone()]);
        while let Some(q) = queue.pop_front() {
            for g in self.generators() {
                let r = q.apply(g);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }
}

/// A multiplicative character, stored as phases `k/n` with `χ = e^{2πik/n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    phases: Vec<(u64, u64)>,
    values: Vec<Cyclo>,
}

impl Character {
    pub fn from_phases(phases: Vec<(u64, u64)>) -> Self {
        let mut cache: BTreeMap<(u64, u64), Cyclo> = BTreeMap::new();
        let values = phases
            .iter()
            .map(|&(k, n)| {
                cache
                    .entry((k, n))
                    .or_insert_with(|| Cyclo::root_of_unity(n as u32, k as i64))
                    .clone()
            })
            .collect();
        Character { phases, values }
    }

    /// Builds a character from exact root-of-unity values.
    pub fn from_values(values: Vec<Cyclo>) -> Option<Self> {
        let phases = values
            .iter()
            .map(|v| v.root_of_unity_log().map(|(n, k)| (k as u64, n as u64)))
            .collect::<Option<Vec<_>>>()?;
        Some(Character { phases, values })
    }

    pub fn value(&self, i: usize) -> &Cyclo {
        &self.values[i]
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    /// `(k, n)` with `χ = ζ_n^k`, `k/n` in lowest terms.
    pub fn phase(&self, i: usize) -> (u64, u64) {
        self.phases[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.phases.iter().all(|&(k, _)| k == 0)
    }

    /// Least common multiple of the value orders.
    pub fn exponent(&self) -> u64 {
        self.phases.iter().fold(1, |acc, &(_, n)| acc.lcm(&n))
    }

    /// Checks `χ(gh) = χ(g)χ(h)` on the given index pairs.
    pub fn is_multiplicative_on(&self, g: &FiniteMatrixGroup, pairs: impl IntoIterator<Item = (usize, usize)>) -> bool {
        pairs.into_iter().all(|(a, b)| {
            let c = g.mul_indices(a, b);
            add_phase(self.phases[a], self.phases[b]) == self.phases[c]
        })
    }
}

/// Homogeneous coordinates with the first nonzero coordinate equal to one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Cyclo>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Cyclo>) -> Result<Self> {
        let first = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroInput("projective point"))?
            .clone();
        let inv = first.inv()?;
        Ok(ProjectivePoint { coords: coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Cyclo::from_int(c)).collect())
    }

    pub fn coords(&self) -> &[Cyclo] {
        &self.coords
    }

    pub fn apply(&self, m: &Matrix<Cyclo>) -> ProjectivePoint {
        ProjectivePoint::new(m.mul_vec(&self.coords)).expect("invertible matrix")
    }
}

impl core::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_small_groups() {
        let g = FiniteMatrixGroup::closure(&[Matrix::identity(3)], 10, 120).unwrap();
        assert_eq!(g.order(), 1);
        let neg = Matrix::from_int_rows(&[&[-1, 0], &[0, -1]]);
        let g = FiniteMatrixGroup::closure(&[neg], 10, 120).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.projectivize().order(), 1);
        assert_eq!(g.linear_characters().len(), 2);
        let big = Matrix::from_int_rows(&[&[2, 0], &[0, 1]]);
        assert_eq!(
            FiniteMatrixGroup::closure(&[big], 50, 120).unwrap_err(),
            Error::ExceedsMaxOrder { max_order: 50 }
        );
    }

    #[test]
    fn symmetric_group_characters() {
        let t = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let s = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let g = FiniteMatrixGroup::closure(&[t, s], 100, 120).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.commutator_subgroup().order(), 3);
        let chars = g.linear_characters();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial());
        let all: Vec<_> = (0..6).flat_map(|a| (0..6).map(move |b| (a, b))).collect();
        for c in &chars {
            assert!(c.is_multiplicative_on(&g, all.iter().copied()));
        }
        assert_eq!(g.conjugacy_classes().len(), 3);
        for i in 0..6 {
            assert_eq!(g.mul_indices(i, g.inverse_index(i)), 0);
        }
    }

    #[test]
    fn cyclic_characters_and_orbits() {
        let z = Cyclo::root_of_unity(5, 1);
        let g = FiniteMatrixGroup::closure(&[Matrix::diagonal(&[z.clone(), Cyclo::one(), Cyclo::one()])], 10, 120).unwrap();
        let chars = g.linear_characters();
        assert_eq!(chars.len(), 5);
        let gen = g.generator_indices()[0];
        let vals: Vec<_> = chars.iter().map(|c| c.value(gen).clone()).collect();
        assert_eq!(vals[1], z);
        let pg = g.projectivize();
        assert_eq!(pg.orbit(&ProjectivePoint::from_ints(&[1, 1, 0]).unwrap()).len(), 5);
        assert_eq!(pg.orbit(&ProjectivePoint::from_ints(&[0, 1, 0]).unwrap()).len(), 1);
    }
}
