//! Splice trees and the recursive signature evaluation.
//!
//! A [`SpliceTree`] is either a Seifert leaf with named retained
//! components, or the splice of two trees along one named component of
//! each side; the spliced components are consumed and every other name
//! stays a link component.  Cabling is splicing with a specific small
//! Seifert piece, so iterated torus links are exactly the trees produced
//! by [`CablingRecipe`].
//!
//! Evaluation descends the tree: at each edge the consumed component of
//! one side is assigned the character of the other side (the linking
//! powers of its surviving angles), the defect product corrects the
//! signature, and nullities add.  When both edge characters equal 1 the
//! formula's hypothesis fails; the evaluator reports the edge instead of
//! guessing, since the correction lives in slope theory that this crate
//! does not implement.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::exact::{angle_sum_mod1, ind, Angle, Rational};
use crate::seifert::SeifertLinkSpec;
use crate::{Error, Result};

/// A recursive link description: Seifert leaves joined pairwise along
/// named components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpliceTree {
    Leaf {
        spec: SeifertLinkSpec,
        labels: Vec<String>,
    },
    Splice {
        left: Box<SpliceTree>,
        left_name: String,
        right: Box<SpliceTree>,
        right_name: String,
    },
}

/// The defect `ind(sum l_i Log u_i) - sum l_i ind(Log u_i)`.
pub fn defect(ell: &[BigInt], u: &[Angle]) -> BigInt {
    assert_eq!(ell.len(), u.len(), "coefficient/angle length mismatch");
    let total: Rational = ell
        .iter()
        .zip(u)
        .map(|(l, a)| Rational::from_integer(l.clone()) * a.value())
        .sum();
    let picked: BigInt = ell
        .iter()
        .zip(u)
        .filter(|(_, a)| !a.is_zero())
        .map(|(l, _)| l)
        .sum();
    ind(&total) - picked
}

impl SpliceTree {
    /// A single Seifert leaf; one label per retained component.
    pub fn leaf(spec: SeifertLinkSpec, labels: Vec<String>) -> Result<Self> {
        if labels.len() != spec.k() {
            return Err(Error::ComponentIndex(labels.len()));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateComponent(l.clone()));
            }
        }
        Ok(SpliceTree::Leaf { spec, labels })
    }

    /// Splices two trees along the named components, which are consumed.
    pub fn splice(
        left: SpliceTree,
        left_name: &str,
        right: SpliceTree,
        right_name: &str,
    ) -> Result<Self> {
        if !left.components().iter().any(|c| c == left_name) {
            return Err(Error::UnknownComponent(left_name.into()));
        }
        if !right.components().iter().any(|c| c == right_name) {
            return Err(Error::UnknownComponent(right_name.into()));
        }
        let mut seen = BTreeSet::new();
        for name in left.all_names().into_iter().chain(right.all_names()) {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateComponent(name));
            }
        }
        Ok(SpliceTree::Splice {
            left: Box::new(left),
            left_name: left_name.into(),
            right: Box::new(right),
            right_name: right_name.into(),
        })
    }

    /// Link components of the tree: leaf labels minus consumed names.
    pub fn components(&self) -> Vec<String> {
        match self {
            SpliceTree::Leaf { labels, .. } => labels.clone(),
            SpliceTree::Splice {
                left,
                left_name,
                right,
                right_name,
            } => {
                let mut out: Vec<String> = left
                    .components()
                    .into_iter()
                    .filter(|c| c != left_name)
                    .collect();
                out.extend(right.components().into_iter().filter(|c| c != right_name));
                out
            }
        }
    }

    fn all_names(&self) -> Vec<String> {
        match self {
            SpliceTree::Leaf { labels, .. } => labels.clone(),
            SpliceTree::Splice { left, right, .. } => {
                let mut out = left.all_names();
                out.extend(right.all_names());
                out
            }
        }
    }

    pub fn has_component(&self, name: &str) -> bool {
        self.components().iter().any(|c| c == name)
    }

    /// Linking number of two components of this tree.  Within a leaf this
    /// is the omitted-weight product; across an edge the two partial
    /// linkings with the consumed pair multiply.
    pub fn linking(&self, x: &str, y: &str) -> BigInt {
        match self {
            SpliceTree::Leaf { spec, labels } => {
                let i = labels.iter().position(|l| l == x).expect("component");
                let j = labels.iter().position(|l| l == y).expect("component");
                spec.linking_number(i, j).expect("distinct components")
            }
            SpliceTree::Splice {
                left,
                left_name,
                right,
                right_name,
            } => {
                let in_left = |c: &str| left.has_component(c) && c != left_name;
                match (in_left(x), in_left(y)) {
                    (true, true) => left.linking(x, y),
                    (false, false) => right.linking(x, y),
                    (true, false) => left.linking(x, left_name) * right.linking(right_name, y),
                    (false, true) => left.linking(y, left_name) * right.linking(right_name, x),
                }
            }
        }
    }

    /// Linking numbers of `against` with every other component.
    pub fn linking_vector(&self, against: &str) -> Result<BTreeMap<String, BigInt>> {
        if !self.has_component(against) {
            return Err(Error::UnknownComponent(against.into()));
        }
        Ok(self
            .components()
            .into_iter()
            .filter(|c| c != against)
            .map(|c| {
                let lk = self.linking(against, &c);
                (c, lk)
            })
            .collect())
    }

    /// Sum of all pairwise linking numbers.
    pub fn total_linking(&self) -> BigInt {
        let comps = self.components();
        let mut total = BigInt::zero();
        for i in 0..comps.len() {
            for j in i + 1..comps.len() {
                total += self.linking(&comps[i], &comps[j]);
            }
        }
        total
    }

    /// Multivariate signature and nullity at the assignment (angle 0 means
    /// removal).  Fails with the edge identity on exceptional characters.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Angle>) -> Result<(i64, i64)> {
        for c in self.components() {
            if !assignment.contains_key(&c) {
                return Err(Error::UnknownComponent(c));
            }
        }
        self.eval_inner(assignment)
    }

    fn eval_inner(&self, assignment: &BTreeMap<String, Angle>) -> Result<(i64, i64)> {
        let comps = self.components();
        if comps.iter().all(|c| assignment[c].is_zero()) {
            return Ok((0, 0));
        }
        match self {
            SpliceTree::Leaf { spec, labels } => {
                let angles: Vec<Angle> = labels.iter().map(|l| assignment[l].clone()).collect();
                spec.multivariate_eval(&angles)
            }
            SpliceTree::Splice {
                left,
                left_name,
                right,
                right_name,
            } => {
                let left_comps: Vec<String> = left
                    .components()
                    .into_iter()
                    .filter(|c| c != left_name)
                    .collect();
                let right_comps: Vec<String> = right
                    .components()
                    .into_iter()
                    .filter(|c| c != right_name)
                    .collect();
                let ell_left: Vec<BigInt> = left_comps
                    .iter()
                    .map(|c| left.linking(left_name, c))
                    .collect();
                let ell_right: Vec<BigInt> = right_comps
                    .iter()
                    .map(|c| right.linking(right_name, c))
                    .collect();
                let u_left: Vec<Angle> = left_comps.iter().map(|c| assignment[c].clone()).collect();
                let u_right: Vec<Angle> =
                    right_comps.iter().map(|c| assignment[c].clone()).collect();
                let terms = |ell: &[BigInt], u: &[Angle]| -> Vec<(BigInt, Angle)> {
                    ell.iter().cloned().zip(u.iter().cloned()).collect()
                };
                let (v_left, _) = angle_sum_mod1(&terms(&ell_left, &u_left));
                let (v_right, _) = angle_sum_mod1(&terms(&ell_right, &u_right));
                if !left_comps.is_empty()
                    && !right_comps.is_empty()
                    && v_left.is_zero()
                    && v_right.is_zero()
                {
                    return Err(Error::ExceptionalCharacter {
                        left: left_name.clone(),
                        right: right_name.clone(),
                    });
                }
                // Each consumed component is evaluated at the character of
                // the opposite side.
                let mut left_assign: BTreeMap<String, Angle> = left_comps
                    .iter()
                    .map(|c| (c.clone(), assignment[c].clone()))
                    .collect();
                left_assign.insert(left_name.clone(), v_right);
                let mut right_assign: BTreeMap<String, Angle> = right_comps
                    .iter()
                    .map(|c| (c.clone(), assignment[c].clone()))
                    .collect();
                right_assign.insert(right_name.clone(), v_left);
                let (s1, n1) = left.eval_inner(&left_assign)?;
                let (s2, n2) = right.eval_inner(&right_assign)?;
                let d = defect(&ell_left, &u_left) * defect(&ell_right, &u_right);
                let d = d.to_i64().expect("defect product fits in i64");
                Ok((s1 + s2 + d, n1 + n2))
            }
        }
    }

    /// Levine-Tristram signature and nullity of the whole link: diagonal
    /// evaluation minus the total pairwise linking.
    pub fn lt_of_tree(&self, theta: &Angle) -> Result<(i64, i64)> {
        let assignment: BTreeMap<String, Angle> = self
            .components()
            .into_iter()
            .map(|c| (c, theta.clone()))
            .collect();
        let (sigma, nullity) = self.evaluate(&assignment)?;
        let lk = self
            .total_linking()
            .to_i64()
            .expect("total linking fits in i64");
        Ok((sigma - lk, nullity))
    }

    /// Candidate jump locations of the diagonal signature function: a
    /// finite superset of every point where `lt_of_tree` can change value
    /// or turn exceptional.
    pub fn diagonal_breakpoints(&self) -> BTreeSet<Rational> {
        let affine: BTreeMap<String, (Rational, Rational)> = self
            .components()
            .into_iter()
            .map(|c| (c, (Rational::one(), Rational::zero())))
            .collect();
        let mut out = BTreeSet::new();
        self.collect_breakpoints(&affine, &mut out);
        out.retain(|t| t.is_positive() && t < &Rational::one());
        out
    }

    /// Collects breakpoints with each component's angle given as the
    /// affine function `coeff * theta + shift` (taken modulo 1).
    fn collect_breakpoints(
        &self,
        affine: &BTreeMap<String, (Rational, Rational)>,
        out: &mut BTreeSet<Rational>,
    ) {
        match self {
            SpliceTree::Leaf { spec, labels } => {
                let derived = spec.derive();
                let mut spectrum_c = Rational::zero();
                let mut spectrum_e = Rational::zero();
                for (i, label) in labels.iter().enumerate() {
                    let (c, e) = &affine[label];
                    add_integer_solutions(c, e, out);
                    let sign = if spec.is_reversed(i) {
                        -Rational::one()
                    } else {
                        Rational::one()
                    };
                    let ap = Rational::from_integer(derived.aprime[i].clone());
                    spectrum_c += &ap * &sign * c;
                    spectrum_e += &ap * &sign * e;
                }
                add_integer_solutions(&spectrum_c, &spectrum_e, out);
            }
            SpliceTree::Splice {
                left,
                left_name,
                right,
                right_name,
            } => {
                let side = |tree: &SpliceTree, consumed: &str| -> (Rational, Rational) {
                    let mut c_total = Rational::zero();
                    let mut e_total = Rational::zero();
                    for comp in tree.components().into_iter().filter(|c| c != consumed) {
                        let lk = Rational::from_integer(tree.linking(consumed, &comp));
                        let (c, e) = &affine[&comp];
                        c_total += &lk * c;
                        e_total += &lk * e;
                    }
                    (c_total, e_total)
                };
                let (cl, el) = side(left, left_name);
                let (cr, er) = side(right, right_name);
                add_integer_solutions(&cl, &el, out);
                add_integer_solutions(&cr, &er, out);
                let mut left_affine: BTreeMap<String, (Rational, Rational)> = left
                    .components()
                    .into_iter()
                    .filter(|c| c != left_name)
                    .map(|c| {
                        let v = affine[&c].clone();
                        (c, v)
                    })
                    .collect();
                left_affine.insert(left_name.clone(), (cr, er));
                let mut right_affine: BTreeMap<String, (Rational, Rational)> = right
                    .components()
                    .into_iter()
                    .filter(|c| c != right_name)
                    .map(|c| {
                        let v = affine[&c].clone();
                        (c, v)
                    })
                    .collect();
                right_affine.insert(right_name.clone(), (cl, el));
                left.collect_breakpoints(&left_affine, out);
                right.collect_breakpoints(&right_affine, out);
            }
        }
    }

    /// Applies the diagram moves until no rewrite applies: unretained
    /// weight-1 fibers drop, splicing along an unknot deletes the partner
    /// component, splicing along one member of a Hopf pair renames the
    /// partner, and fibration-compatible edges contract into one leaf.
    pub fn normalize(&self) -> SpliceTree {
        let mut current = self.clone();
        loop {
            let next = normalize_once(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }
}

fn add_integer_solutions(coeff: &Rational, shift: &Rational, out: &mut BTreeSet<Rational>) {
    // theta with coeff*theta + shift integral, clipped to (0,1) later
    if coeff.is_zero() {
        return;
    }
    let at0 = shift.clone();
    let at1 = coeff + shift;
    let (lo, hi) = if at0 < at1 { (at0, at1) } else { (at1, at0) };
    let mut z = lo.ceil().to_integer();
    let hi_end = hi.floor().to_integer();
    while z <= hi_end {
        let theta = (Rational::from_integer(z.clone()) - shift) / coeff;
        if theta.is_positive() && theta < Rational::one() {
            out.insert(theta);
        }
        z += 1;
    }
}

fn normalize_once(tree: &SpliceTree) -> SpliceTree {
    match tree {
        SpliceTree::Leaf { spec, labels } => SpliceTree::Leaf {
            spec: spec.cleaned(),
            labels: labels.clone(),
        },
        SpliceTree::Splice {
            left,
            left_name,
            right,
            right_name,
        } => {
            let l = normalize_once(left);
            let r = normalize_once(right);

            // splicing along two reversed components equals splicing along
            // the unreversed pair
            if is_reversed_component(&l, left_name) && is_reversed_component(&r, right_name) {
                return SpliceTree::Splice {
                    left: Box::new(flip_component(&l, left_name)),
                    left_name: left_name.clone(),
                    right: Box::new(flip_component(&r, right_name)),
                    right_name: right_name.clone(),
                };
            }

            // splicing with an unknot deletes the partner component
            if is_unknot_side(&l, left_name) {
                if let Some(t) = delete_component(&r, right_name) {
                    return t;
                }
            }
            if is_unknot_side(&r, right_name) {
                if let Some(t) = delete_component(&l, left_name) {
                    return t;
                }
            }

            // splicing along one member of a Hopf pair renames the partner
            if let Some((other, f_cons, f_other)) = hopf_partner(&l, left_name) {
                return rename_with_flag(&r, right_name, &other, f_cons ^ f_other);
            }
            if let Some((other, f_cons, f_other)) = hopf_partner(&r, right_name) {
                return rename_with_flag(&l, left_name, &other, f_cons ^ f_other);
            }

            // fibration-compatible edge contraction
            if let Some(merged) = try_contract(&l, left_name, &r, right_name) {
                return merged;
            }

            SpliceTree::Splice {
                left: Box::new(l),
                left_name: left_name.clone(),
                right: Box::new(r),
                right_name: right_name.clone(),
            }
        }
    }
}

fn is_reversed_component(tree: &SpliceTree, name: &str) -> bool {
    match tree {
        SpliceTree::Leaf { spec, labels } => labels
            .iter()
            .position(|l| l == name)
            .map(|i| spec.is_reversed(i))
            .unwrap_or(false),
        SpliceTree::Splice {
            left,
            left_name,
            right,
            ..
        } => {
            if left.has_component(name) && name != left_name {
                is_reversed_component(left, name)
            } else {
                is_reversed_component(right, name)
            }
        }
    }
}

fn flip_component(tree: &SpliceTree, name: &str) -> SpliceTree {
    match tree {
        SpliceTree::Leaf { spec, labels } => {
            if let Some(i) = labels.iter().position(|l| l == name) {
                SpliceTree::Leaf {
                    spec: spec.reverse_component(i).expect("valid index"),
                    labels: labels.clone(),
                }
            } else {
                tree.clone()
            }
        }
        SpliceTree::Splice {
            left,
            left_name,
            right,
            right_name,
        } => SpliceTree::Splice {
            left: Box::new(flip_component(left, name)),
            left_name: left_name.clone(),
            right: Box::new(flip_component(right, name)),
            right_name: right_name.clone(),
        },
    }
}

/// Leaf representing an unknot with `name` its only retained component:
/// the sphere is the standard one (at most two weights exceed 1) and the
/// retained fiber is either exceptional, or generic with at most one
/// exceptional fiber present.
fn is_unknot_side(tree: &SpliceTree, name: &str) -> bool {
    let SpliceTree::Leaf { spec, labels } = tree else {
        return false;
    };
    if spec.k() != 1 || labels[0] != name {
        return false;
    }
    let big = spec
        .weights()
        .iter()
        .filter(|w| **w > BigInt::one())
        .count();
    let retained_big = spec.weight(0) > &BigInt::one();
    big <= 2 && (retained_big || big <= 1)
}

/// For a plain Hopf-pair leaf `Seif(1,1)` containing `name`, returns the
/// partner label and the two orientation marks.
fn hopf_partner(tree: &SpliceTree, name: &str) -> Option<(String, bool, bool)> {
    let SpliceTree::Leaf { spec, labels } = tree else {
        return None;
    };
    let cleaned = spec.cleaned();
    if cleaned.k() != 2 || cleaned.n() != 2 || cleaned.ambient_sign() != 1 {
        return None;
    }
    if !cleaned.weight(0).is_one() || !cleaned.weight(1).is_one() {
        return None;
    }
    let i = labels.iter().position(|l| l == name)?;
    let j = 1 - i;
    Some((
        labels[j].clone(),
        cleaned.is_reversed(i),
        cleaned.is_reversed(j),
    ))
}

fn rename_with_flag(tree: &SpliceTree, old: &str, new: &str, flip: bool) -> SpliceTree {
    let renamed = rename_component(tree, old, new);
    if flip {
        flip_component(&renamed, new)
    } else {
        renamed
    }
}

fn rename_component(tree: &SpliceTree, old: &str, new: &str) -> SpliceTree {
    match tree {
        SpliceTree::Leaf { spec, labels } => SpliceTree::Leaf {
            spec: spec.clone(),
            labels: labels
                .iter()
                .map(|l| if l == old { new.to_string() } else { l.clone() })
                .collect(),
        },
        SpliceTree::Splice {
            left,
            left_name,
            right,
            right_name,
        } => SpliceTree::Splice {
            left: Box::new(rename_component(left, old, new)),
            left_name: left_name.clone(),
            right: Box::new(rename_component(right, old, new)),
            right_name: right_name.clone(),
        },
    }
}

/// Removes a component from the link (its fiber moves to the unretained
/// side of its leaf).  `None` when the leaf would lose its last component.
fn delete_component(tree: &SpliceTree, name: &str) -> Option<SpliceTree> {
    match tree {
        SpliceTree::Leaf { spec, labels } => {
            let i = labels.iter().position(|l| l == name)?;
            let spec = spec.remove_retained(i).ok()?;
            let mut labels = labels.clone();
            labels.remove(i);
            Some(SpliceTree::Leaf { spec, labels })
        }
        SpliceTree::Splice {
            left,
            left_name,
            right,
            right_name,
        } => {
            if left.has_component(name) && name != left_name {
                let left = delete_component(left, name)?;
                Some(SpliceTree::Splice {
                    left: Box::new(left),
                    left_name: left_name.clone(),
                    right: right.clone(),
                    right_name: right_name.clone(),
                })
            } else if right.has_component(name) && name != right_name {
                let right = delete_component(right, name)?;
                Some(SpliceTree::Splice {
                    left: left.clone(),
                    left_name: left_name.clone(),
                    right: Box::new(right),
                    right_name: right_name.clone(),
                })
            } else {
                None
            }
        }
    }
}

fn try_contract(
    left: &SpliceTree,
    left_name: &str,
    right: &SpliceTree,
    right_name: &str,
) -> Option<SpliceTree> {
    let SpliceTree::Leaf {
        spec: spec_l,
        labels: labels_l,
    } = left
    else {
        return None;
    };
    let SpliceTree::Leaf {
        spec: spec_r,
        labels: labels_r,
    } = right
    else {
        return None;
    };
    if spec_l.ambient_sign() != 1 || spec_r.ambient_sign() != 1 {
        return None;
    }
    let i = labels_l.iter().position(|l| l == left_name)?;
    let j = labels_r.iter().position(|l| l == right_name)?;
    if spec_l.is_reversed(i) || spec_r.is_reversed(j) {
        return None;
    }
    let prod_except = |spec: &SeifertLinkSpec, skip: usize| -> BigInt {
        spec.weights()
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != skip)
            .map(|(_, w)| w)
            .product()
    };
    if &prod_except(spec_l, i) != spec_r.weight(j) || &prod_except(spec_r, j) != spec_l.weight(i) {
        return None;
    }
    let mut retained: Vec<(u64, bool)> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for (pos, label) in labels_l.iter().enumerate() {
        if pos != i {
            retained.push((spec_l.weight(pos).to_u64()?, spec_l.is_reversed(pos)));
            labels.push(label.clone());
        }
    }
    for (pos, label) in labels_r.iter().enumerate() {
        if pos != j {
            retained.push((spec_r.weight(pos).to_u64()?, spec_r.is_reversed(pos)));
            labels.push(label.clone());
        }
    }
    if retained.is_empty() {
        return None;
    }
    let mut unretained: Vec<u64> = Vec::new();
    for w in &spec_l.weights()[spec_l.k()..] {
        unretained.push(w.to_u64()?);
    }
    for w in &spec_r.weights()[spec_r.k()..] {
        unretained.push(w.to_u64()?);
    }
    let spec = SeifertLinkSpec::new(true, retained, unretained).ok()?;
    Some(SpliceTree::Leaf { spec, labels })
}

/// One cabling step: `d = gcd(p,q)` new cable components around `target`,
/// whose name is consumed; the fresh core is retained when asked for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CablingStep {
    pub target: String,
    pub p: i64,
    pub q: i64,
    pub retain_core: bool,
    /// The `d` cable names, then the core name when the core is retained.
    pub new_names: Vec<String>,
}

/// An iterated torus link: successive cablings of the unknot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CablingRecipe {
    pub start: String,
    pub steps: Vec<CablingStep>,
}

impl CablingRecipe {
    pub fn to_tree(&self) -> Result<SpliceTree> {
        let mut tree = unknot_leaf(&self.start);
        for step in &self.steps {
            tree = cable(
                tree,
                &step.target,
                step.p,
                step.q,
                step.retain_core,
                &step.new_names,
            )?;
        }
        Ok(tree)
    }
}

/// The unknot as a Seifert leaf.
pub fn unknot_leaf(name: &str) -> SpliceTree {
    SpliceTree::leaf(
        SeifertLinkSpec::positive(&[1], &[]).expect("valid"),
        vec![name.to_string()],
    )
    .expect("valid")
}

/// `(p,q)`-cabling along `component`: splices the tree with the piece
/// `Seif(q1, 1 x d, p1)` (core retained) or `Seif(q1, 1 x d; p1)` (core
/// removed), `p1 = p/d`, `q1 = q/d`.  Negative parameters normalize into
/// orientation data; a `(-1,0)` cable is exactly an orientation reversal
/// of the target.
pub fn cable(
    tree: SpliceTree,
    component: &str,
    p: i64,
    q: i64,
    retain_core: bool,
    new_names: &[String],
) -> Result<SpliceTree> {
    if (p, q) == (0, 0) {
        return Err(Error::DegenerateCable { p, q });
    }
    if !tree.has_component(component) {
        return Err(Error::UnknownComponent(component.into()));
    }
    if q == 0 {
        // (p,0) with |p| > 1 would need a weight-0 piece
        if p.abs() != 1 {
            return Err(Error::ZeroWeight);
        }
        if !new_names.is_empty() {
            return Err(Error::DegenerateCable { p, q });
        }
        return Ok(if p == -1 {
            flip_component(&tree, component)
        } else {
            tree
        });
    }
    if p == 0 {
        // the piece would carry a weight-0 core
        return Err(Error::ZeroWeight);
    }
    let d = (p.unsigned_abs().gcd(&q.unsigned_abs())) as i64;
    let mut p1 = p / d;
    let mut q1 = q / d;
    let mut cables_reversed = false;
    if q1 < 0 {
        q1 = -q1;
        p1 = -p1;
        cables_reversed = true;
    }
    let expected_names = d as usize + usize::from(retain_core);
    if new_names.len() != expected_names {
        return Err(Error::DegenerateCable { p, q });
    }
    let mut retained: Vec<(u64, bool)> = vec![(q1 as u64, false)];
    retained.extend(std::iter::repeat((1, cables_reversed)).take(d as usize));
    let mut ambient = true;
    let mut unretained: Vec<u64> = Vec::new();
    if retain_core {
        if p1 < 0 {
            ambient = false;
            retained.push((p1.unsigned_abs(), true));
        } else {
            retained.push((p1 as u64, false));
        }
    } else if p1 < 0 {
        ambient = false;
        unretained.push(p1.unsigned_abs());
    } else {
        unretained.push(p1 as u64);
    }
    let spec = SeifertLinkSpec::new(ambient, retained, unretained)?;
    let existing: BTreeSet<String> = tree.all_names().into_iter().collect();
    for (idx, n) in new_names.iter().enumerate() {
        if existing.contains(n) || new_names[..idx].contains(n) {
            return Err(Error::DuplicateComponent(n.clone()));
        }
    }
    let consumed = fresh_name(&existing, new_names, component);
    let mut labels = vec![consumed.clone()];
    labels.extend(new_names.iter().cloned());
    let piece = SpliceTree::leaf(spec, labels)?;
    SpliceTree::splice(tree, component, piece, &consumed)
}

fn fresh_name(existing: &BTreeSet<String>, new_names: &[String], base: &str) -> String {
    let mut candidate = format!("_{base}");
    let mut counter = 0u32;
    while existing.contains(&candidate) || new_names.contains(&candidate) {
        counter += 1;
        candidate = format!("_{base}{counter}");
    }
    candidate
}

impl fmt::Display for SpliceTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpliceTree::Leaf { spec, labels } => {
                write!(f, "seif({}; ", if spec.ambient_sign() > 0 { "+" } else { "-" })?;
                for (i, label) in labels.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    if spec.is_reversed(i) {
                        write!(f, "-")?;
                    }
                    write!(f, "{}:{}", spec.weight(i), label)?;
                }
                write!(f, " ; ")?;
                for (i, w) in spec.weights()[spec.k()..].iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ")")
            }
            SpliceTree::Splice {
                left,
                left_name,
                right,
                right_name,
            } => write!(f, "splice({left}.{left_name}, {right}.{right_name})"),
        }
    }
}

impl fmt::Display for CablingRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknot({})", self.start)?;
        for s in &self.steps {
            write!(
                f,
                " |> cable({},{},{},{},[{}])",
                s.target,
                s.p,
                s.q,
                if s.retain_core { "retain" } else { "drop" },
                s.new_names.join(",")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn angle(n: i64, d: i64) -> Angle {
        Angle::new(rat(n, d)).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn assignment(pairs: &[(&str, Angle)]) -> BTreeMap<String, Angle> {
        pairs
            .iter()
            .map(|(n, a)| (n.to_string(), a.clone()))
            .collect()
    }

    /// The two-cusps singularity link: (2,3)-cables on both members of a
    /// Hopf pair, cores dropped.
    fn two_cusps_tree() -> SpliceTree {
        let recipe = CablingRecipe {
            start: "c0".into(),
            steps: vec![
                CablingStep {
                    target: "c0".into(),
                    p: 1,
                    q: 1,
                    retain_core: true,
                    new_names: vec!["a".into(), "b".into()],
                },
                CablingStep {
                    target: "a".into(),
                    p: 2,
                    q: 3,
                    retain_core: false,
                    new_names: vec!["x".into()],
                },
                CablingStep {
                    target: "b".into(),
                    p: 2,
                    q: 3,
                    retain_core: false,
                    new_names: vec!["y".into()],
                },
            ],
        };
        recipe.to_tree().unwrap()
    }

    #[test]
    fn defect_examples() {
        assert_eq!(
            defect(&big(&[1, 1]), &[angle(1, 3), angle(1, 3)]),
            BigInt::from(-1)
        );
        assert_eq!(defect(&big(&[2]), &[angle(1, 2)]), BigInt::zero());
        assert_eq!(defect(&big(&[2]), &[angle(3, 4)]), BigInt::one());
        assert_eq!(
            defect(&big(&[3, -2]), &[Angle::zero(), Angle::zero()]),
            BigInt::zero()
        );
    }

    #[test]
    fn single_leaf_matches_multivariate() {
        let spec = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        let tree = SpliceTree::leaf(spec.clone(), vec!["k".into(), "x".into()]).unwrap();
        for (a, b) in [((1, 2), (1, 2)), ((2, 5), (1, 2)), ((1, 7), (3, 8))] {
            let u = [angle(a.0, a.1), angle(b.0, b.1)];
            let direct = spec.multivariate_eval(&u).unwrap();
            let via_tree = tree
                .evaluate(&assignment(&[("k", u[0].clone()), ("x", u[1].clone())]))
                .unwrap();
            assert_eq!(direct, via_tree);
        }
    }

    #[test]
    fn cabled_unknot_contracts_to_trefoil_leaf() {
        let tree = cable(unknot_leaf("c0"), "c0", 2, 3, false, &["x".to_string()]).unwrap();
        let normalized = tree.normalize();
        let expected = SpliceTree::leaf(
            SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap(),
            vec!["x".into()],
        )
        .unwrap();
        assert_eq!(normalized, expected);
    }

    #[test]
    fn retained_core_gives_cored_torus_knot() {
        let tree = cable(
            unknot_leaf("c0"),
            "c0",
            3,
            2,
            true,
            &["x".to_string(), "core".to_string()],
        )
        .unwrap();
        let normalized = tree.normalize();
        // Seif(1,3;2) with the cable first, then the retained core.
        let expected = SpliceTree::leaf(
            SeifertLinkSpec::positive(&[1, 3], &[2]).unwrap(),
            vec!["x".into(), "core".into()],
        )
        .unwrap();
        assert_eq!(normalized, expected);
        // and it evaluates like Seif(3,1;2) with swapped slots
        let reference = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        for (a, b) in [((1, 2), (1, 2)), ((2, 5), (1, 2)), ((1, 8), (1, 8))] {
            let u_core = angle(a.0, a.1);
            let u_cable = angle(b.0, b.1);
            let via_tree = normalized
                .evaluate(&assignment(&[
                    ("x", u_cable.clone()),
                    ("core", u_core.clone()),
                ]))
                .unwrap();
            let direct = reference.multivariate_eval(&[u_core, u_cable]).unwrap();
            assert_eq!(via_tree, direct);
        }
    }

    #[test]
    fn unit_cable_gives_hopf_pair() {
        let tree = cable(
            unknot_leaf("c0"),
            "c0",
            1,
            1,
            true,
            &["a".to_string(), "b".to_string()],
        )
        .unwrap();
        let normalized = tree.normalize();
        let expected = SpliceTree::leaf(
            SeifertLinkSpec::positive(&[1, 1], &[]).unwrap(),
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        assert_eq!(normalized, expected);
    }

    #[test]
    fn degenerate_cables_rejected() {
        assert!(matches!(
            cable(unknot_leaf("c"), "c", 0, 0, false, &[]),
            Err(Error::DegenerateCable { .. })
        ));
        assert_eq!(
            cable(unknot_leaf("c"), "c", 0, 1, false, &["x".to_string()]),
            Err(Error::ZeroWeight)
        );
        assert_eq!(
            cable(unknot_leaf("c"), "c", 2, 0, false, &[]),
            Err(Error::ZeroWeight)
        );
    }

    #[test]
    fn reversal_cable_flips_orientation() {
        let hopf = cable(
            unknot_leaf("c0"),
            "c0",
            1,
            1,
            true,
            &["a".to_string(), "b".to_string()],
        )
        .unwrap();
        let flipped = cable(hopf.clone(), "a", -1, 0, false, &[]).unwrap();
        assert_eq!(flipped.linking("a", "b"), BigInt::from(-1));
        let back = cable(flipped, "a", -1, 0, false, &[]).unwrap();
        assert_eq!(back.linking("a", "b"), BigInt::one());
        assert_eq!(back, hopf);
    }

    #[test]
    fn two_cusps_linking_numbers() {
        let tree = two_cusps_tree();
        assert_eq!(tree.components(), vec!["x".to_string(), "y".to_string()]);
        assert_eq!(tree.linking("x", "y"), BigInt::from(4));
        let normalized = tree.normalize();
        assert_eq!(normalized.linking("x", "y"), BigInt::from(4));
        let lk = normalized.linking_vector("x").unwrap();
        assert_eq!(lk[&"y".to_string()], BigInt::from(4));
    }

    #[test]
    fn two_cusps_normal_form_is_two_leaves() {
        let normalized = two_cusps_tree().normalize();
        let SpliceTree::Splice { left, right, .. } = &normalized else {
            panic!("expected one splice edge, got {normalized}");
        };
        assert!(matches!(**left, SpliceTree::Leaf { .. }));
        assert!(matches!(**right, SpliceTree::Leaf { .. }));
    }

    #[test]
    fn two_cusps_evaluation_chain() {
        let tree = two_cusps_tree();
        let (sigma, nullity) = tree
            .evaluate(&assignment(&[("x", angle(1, 2)), ("y", angle(1, 5))]))
            .unwrap();
        assert_eq!(sigma, -5);
        let normalized = tree.normalize();
        let (sigma_n, nullity_n) = normalized
            .evaluate(&assignment(&[("x", angle(1, 2)), ("y", angle(1, 5))]))
            .unwrap();
        assert_eq!(sigma_n, -5);
        assert_eq!(nullity, nullity_n);
    }

    #[test]
    fn two_cusps_exceptional_character() {
        let tree = two_cusps_tree();
        let err = tree
            .evaluate(&assignment(&[("x", angle(1, 2)), ("y", angle(1, 2))]))
            .unwrap_err();
        assert!(matches!(err, Error::ExceptionalCharacter { .. }));
        let err = tree
            .normalize()
            .evaluate(&assignment(&[("x", angle(1, 2)), ("y", angle(1, 2))]));
        assert!(matches!(err, Err(Error::ExceptionalCharacter { .. })));
    }

    #[test]
    fn two_cusps_diagonal_nullities() {
        let tree = two_cusps_tree();
        for k in [1i64, 3, 7, 9] {
            let (_, nullity) = tree.lt_of_tree(&angle(k, 10)).unwrap();
            assert_eq!(nullity, 2, "nullity at {k}/10");
        }
        for (n, d) in [(1, 7), (2, 11), (5, 13), (3, 17)] {
            let (_, nullity) = tree.lt_of_tree(&angle(n, d)).unwrap();
            assert_eq!(nullity, 0);
        }
    }

    #[test]
    fn lt_of_tree_examples() {
        let trefoil = SpliceTree::leaf(
            SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap(),
            vec!["t".into()],
        )
        .unwrap();
        assert_eq!(trefoil.lt_of_tree(&angle(1, 2)).unwrap(), (-2, 0));
    }

    #[test]
    fn all_zero_assignment_is_trivial() {
        let tree = two_cusps_tree();
        assert_eq!(
            tree.evaluate(&assignment(&[("x", Angle::zero()), ("y", Angle::zero())]))
                .unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn diagonal_breakpoints_cover_known_jumps() {
        let tree = two_cusps_tree();
        let bps = tree.diagonal_breakpoints();
        for k in [1i64, 3, 7, 9] {
            assert!(bps.contains(&rat(k, 10)), "missing breakpoint {k}/10");
        }
        assert!(bps.contains(&rat(1, 2)));
    }

    #[test]
    fn normalization_preserves_evaluation() {
        let tree = two_cusps_tree();
        let normalized = tree.normalize();
        for (a, b) in [
            ((1, 3), (1, 5)),
            ((2, 7), (3, 7)),
            ((1, 9), (5, 9)),
            ((1, 5), (1, 5)),
        ] {
            let asg = assignment(&[("x", angle(a.0, a.1)), ("y", angle(b.0, b.1))]);
            let lhs = tree.evaluate(&asg);
            let rhs = normalized.evaluate(&asg);
            if lhs.is_ok() && rhs.is_ok() {
                assert_eq!(lhs.unwrap(), rhs.unwrap(), "at {a:?},{b:?}");
            }
        }
    }

    #[test]
    fn hopf_rename_with_reversed_partner() {
        let hopf = SpliceTree::leaf(
            SeifertLinkSpec::new(true, vec![(1, false), (1, true)], vec![]).unwrap(),
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        let piece = SpliceTree::leaf(
            SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap(),
            vec!["k".into(), "x".into()],
        )
        .unwrap();
        let tree = SpliceTree::splice(hopf, "a", piece, "k").unwrap();
        let normalized = tree.normalize();
        assert!(matches!(normalized, SpliceTree::Leaf { .. }));
        for (bv, xv) in [((1, 3), (1, 4)), ((2, 5), (1, 2)), ((3, 7), (2, 7))] {
            let asg = assignment(&[("b", angle(bv.0, bv.1)), ("x", angle(xv.0, xv.1))]);
            let lhs = tree.evaluate(&asg);
            let rhs = normalized.evaluate(&asg);
            if let (Ok(l), Ok(r)) = (&lhs, &rhs) {
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn conjugation_symmetry_of_tree_evaluation() {
        let tree = two_cusps_tree();
        for (a, b) in [((1, 3), (1, 5)), ((2, 7), (3, 8)), ((1, 10), (3, 10))] {
            let u = assignment(&[("x", angle(a.0, a.1)), ("y", angle(b.0, b.1))]);
            let v = assignment(&[
                ("x", angle(a.0, a.1).conj()),
                ("y", angle(b.0, b.1).conj()),
            ]);
            assert_eq!(tree.evaluate(&u).unwrap(), tree.evaluate(&v).unwrap());
        }
    }
}
