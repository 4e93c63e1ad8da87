use std::fmt;

use algebra_core::{lin2, Element};
use combinatorics::{
    enumerate_dgs, enumerate_orders, enumerate_perms, enumerate_qos, enumerate_trees, for_each_dg,
    Dg, Perm, Qo, Tree, MAX_DG_N, MAX_PERM_N, MAX_QO_N, MAX_TREE_N,
};

use crate::key::OpKey;
use crate::rules;

/// The seven operad families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Com,
    As,
    PreLie,
    QOrd,
    Ord,
    Sg,
    NcSg,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Com,
        Family::As,
        Family::PreLie,
        Family::QOrd,
        Family::Ord,
        Family::Sg,
        Family::NcSg,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Com => "com",
            Family::As => "as",
            Family::PreLie => "prelie",
            Family::QOrd => "qo",
            Family::Ord => "o",
            Family::Sg => "sg",
            Family::NcSg => "ncsg",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }
}

/// Composition flavour. `Nabla` (no convexity condition on the window) only
/// exists for the digraph families; quasi-orders are not stable under it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Circ,
    Nabla,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Circ => "circ",
            Mode::Nabla => "nabla",
        }
    }

    pub fn from_name(name: &str) -> Option<Mode> {
        match name {
            "circ" => Some(Mode::Circ),
            "nabla" => Some(Mode::Nabla),
            _ => None,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OperadError {
    #[error("{family} does not compose under {mode}")]
    BadMode { family: &'static str, mode: &'static str },
    #[error("slot {i} out of range for arity {m}")]
    BadSlot { i: usize, m: usize },
    #[error("expected arity {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("mixed arities {a} and {b} in one element")]
    MixedArity { a: usize, b: usize },
    #[error("key {key} does not belong to {family}")]
    ForeignKey { key: String, family: &'static str },
    #[error("descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("arity {n} exceeds the {family} bound {max}")]
    Guard {
        n: usize,
        family: &'static str,
        max: usize,
    },
    #[error("slots must be distinct and within 1..={m}: {slots:?}")]
    BadSlots { slots: Vec<usize>, m: usize },
}

/// An operad family together with a composition flavour; every operation of
/// the crate is a method here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Descriptor {
    family: Family,
    mode: Mode,
}

impl Descriptor {
    pub fn new(family: Family, mode: Mode) -> Result<Self, OperadError> {
        if mode == Mode::Nabla && !matches!(family, Family::Sg | Family::NcSg) {
            return Err(OperadError::BadMode {
                family: family.name(),
                mode: mode.name(),
            });
        }
        Ok(Descriptor { family, mode })
    }

    pub fn circ(family: Family) -> Self {
        Descriptor {
            family,
            mode: Mode::Circ,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Hard arity bound for composition results.
    pub fn max_arity(&self) -> usize {
        match self.family {
            Family::Com => 64,
            Family::As => MAX_PERM_N,
            Family::PreLie => MAX_TREE_N,
            Family::QOrd | Family::Ord => MAX_QO_N,
            Family::Sg | Family::NcSg => MAX_DG_N,
        }
    }

    /// Largest arity whose basis can be listed. Smaller than [`max_arity`]
    /// only for the digraph families, where composition scans candidates
    /// without materializing them.
    ///
    /// [`max_arity`]: Descriptor::max_arity
    pub fn max_basis_arity(&self) -> usize {
        match self.family {
            Family::Sg | Family::NcSg => 4,
            _ => self.max_arity(),
        }
    }

    fn guard(&self, n: usize, max: usize) -> Result<(), OperadError> {
        if n < 1 || n > max {
            return Err(OperadError::Guard {
                n,
                family: self.family.name(),
                max,
            });
        }
        Ok(())
    }

    pub fn unit_key(&self) -> OpKey {
        match self.family {
            Family::Com => OpKey::E(1),
            Family::As => OpKey::P(Perm::identity(1)),
            Family::PreLie => OpKey::T(Tree::leaf(1)),
            Family::QOrd | Family::Ord => OpKey::Q(Qo::antichain(1)),
            Family::Sg | Family::NcSg => OpKey::D(Dg::empty(1)),
        }
    }

    pub fn unit(&self) -> Element<OpKey> {
        Element::basis(self.unit_key())
    }

    pub fn basis(&self, n: usize) -> Result<Vec<OpKey>, OperadError> {
        self.guard(n, self.max_basis_arity())?;
        Ok(match self.family {
            Family::Com => vec![OpKey::E(n)],
            Family::As => enumerate_perms(n).into_iter().map(OpKey::P).collect(),
            Family::PreLie => enumerate_trees(n).iter().cloned().map(OpKey::T).collect(),
            Family::QOrd => enumerate_qos(n).iter().cloned().map(OpKey::Q).collect(),
            Family::Ord => enumerate_orders(n).iter().cloned().map(OpKey::Q).collect(),
            Family::Sg => enumerate_dgs(n).iter().cloned().map(OpKey::D).collect(),
            Family::NcSg => enumerate_dgs(n)
                .iter()
                .filter(|d| d.is_acyclic())
                .cloned()
                .map(OpKey::D)
                .collect(),
        })
    }

    pub fn dim(&self, n: usize) -> Result<usize, OperadError> {
        self.guard(n, self.max_arity())?;
        Ok(match self.family {
            Family::Com => 1,
            Family::As => (1..=n).product(),
            Family::PreLie => n.pow(n as u32 - 1),
            Family::QOrd => enumerate_qos(n).len(),
            Family::Ord => enumerate_orders(n).len(),
            Family::Sg => 1usize << (n * (n - 1)),
            Family::NcSg => {
                let mut count = 0;
                for_each_dg(n, |d| {
                    if d.is_acyclic() {
                        count += 1;
                    }
                });
                count
            }
        })
    }

    /// Checks that the key belongs to this family and returns its arity.
    pub fn validate_key(&self, key: &OpKey) -> Result<usize, OperadError> {
        let foreign = || OperadError::ForeignKey {
            key: key.to_string(),
            family: self.family.name(),
        };
        let ok = match (self.family, key) {
            (Family::Com, OpKey::E(n)) => *n >= 1,
            (Family::As, OpKey::P(_)) => true,
            (Family::PreLie, OpKey::T(t)) => t.is_standard(),
            (Family::QOrd, OpKey::Q(_)) => true,
            (Family::Ord, OpKey::Q(q)) => q.is_antisymmetric(),
            (Family::Sg, OpKey::D(_)) => true,
            (Family::NcSg, OpKey::D(d)) => d.is_acyclic(),
            _ => false,
        };
        if !ok {
            return Err(foreign());
        }
        let n = key.arity();
        self.guard(n, self.max_arity())?;
        Ok(n)
    }

    /// Common arity of the keys of `x`; `None` when `x` is zero.
    pub fn element_arity(&self, x: &Element<OpKey>) -> Result<Option<usize>, OperadError> {
        let mut arity = None;
        for key in x.keys() {
            let n = self.validate_key(key)?;
            match arity {
                None => arity = Some(n),
                Some(m) if m != n => return Err(OperadError::MixedArity { a: m, b: n }),
                _ => {}
            }
        }
        Ok(arity)
    }

    fn compose_key_unchecked(&self, p: &OpKey, i: usize, q: &OpKey) -> Element<OpKey> {
        match (self.family, p, q) {
            (Family::Com, OpKey::E(m), OpKey::E(n)) => Element::basis(OpKey::E(m + n - 1)),
            (Family::As, OpKey::P(u), OpKey::P(w)) => {
                Element::basis(OpKey::P(rules::as_word(u, i, w)))
            }
            (Family::PreLie, OpKey::T(s), OpKey::T(t)) => rules::prelie_insert(s, i, t),
            (Family::QOrd, OpKey::Q(a), OpKey::Q(b)) => rules::qo_compose(a, i, b, false),
            (Family::Ord, OpKey::Q(a), OpKey::Q(b)) => rules::qo_compose(a, i, b, true),
            (Family::Sg | Family::NcSg, OpKey::D(a), OpKey::D(b)) => rules::dg_compose(
                a,
                i,
                b,
                self.mode == Mode::Circ,
                self.family == Family::NcSg,
            ),
            _ => unreachable!("keys validated before dispatch"),
        }
    }

    /// Partial composition of basis keys: `p` with `q` spliced into slot `i`.
    pub fn compose_key(
        &self,
        p: &OpKey,
        i: usize,
        q: &OpKey,
    ) -> Result<Element<OpKey>, OperadError> {
        let m = self.validate_key(p)?;
        let n = self.validate_key(q)?;
        if i < 1 || i > m {
            return Err(OperadError::BadSlot { i, m });
        }
        self.guard(m + n - 1, self.max_arity())?;
        Ok(self.compose_key_unchecked(p, i, q))
    }

    /// Bilinear extension of [`compose_key`](Descriptor::compose_key).
    pub fn compose(
        &self,
        a: &Element<OpKey>,
        i: usize,
        b: &Element<OpKey>,
    ) -> Result<Element<OpKey>, OperadError> {
        let (m, n) = match (self.element_arity(a)?, self.element_arity(b)?) {
            (Some(m), Some(n)) => (m, n),
            _ => return Ok(Element::zero()),
        };
        if i < 1 || i > m {
            return Err(OperadError::BadSlot { i, m });
        }
        self.guard(m + n - 1, self.max_arity())?;
        Ok(lin2(a, b, |p, q| self.compose_key_unchecked(p, i, q)))
    }

    /// Full composition γ(p; q₁, …, qₘ), realized by splicing the arguments
    /// in from the last slot down so earlier slots keep their index.
    pub fn gamma(
        &self,
        p: &Element<OpKey>,
        args: &[Element<OpKey>],
    ) -> Result<Element<OpKey>, OperadError> {
        let m = match self.element_arity(p)? {
            Some(m) => m,
            None => return Ok(Element::zero()),
        };
        if args.len() != m {
            return Err(OperadError::ArityMismatch {
                expected: m,
                got: args.len(),
            });
        }
        let mut acc = p.clone();
        for j in (1..=m).rev() {
            acc = self.compose(&acc, j, &args[j - 1])?;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
        Ok(acc)
    }

    /// The convenience form p∘_{s₁,…,s_k}(q₁,…,q_k): argument `q_t` goes to
    /// slot `s_t` and every unnamed slot receives the unit.
    pub fn compose_multi(
        &self,
        p: &Element<OpKey>,
        slots: &[usize],
        args: &[Element<OpKey>],
    ) -> Result<Element<OpKey>, OperadError> {
        let m = match self.element_arity(p)? {
            Some(m) => m,
            None => return Ok(Element::zero()),
        };
        if slots.len() != args.len() {
            return Err(OperadError::ArityMismatch {
                expected: slots.len(),
                got: args.len(),
            });
        }
        let bad = || OperadError::BadSlots {
            slots: slots.to_vec(),
            m,
        };
        let mut full: Vec<Element<OpKey>> = vec![self.unit(); m];
        let mut seen = vec![false; m];
        for (t, &s) in slots.iter().enumerate() {
            if s < 1 || s > m || seen[s - 1] {
                return Err(bad());
            }
            seen[s - 1] = true;
            full[s - 1] = args[t].clone();
        }
        self.gamma(p, &full)
    }

    fn act_key_unchecked(&self, key: &OpKey, sigma: &Perm) -> OpKey {
        let inv = sigma.inverse();
        match (self.family, key) {
            (Family::Com, k) => k.clone(),
            (Family::As, OpKey::P(u)) => OpKey::P(inv.compose(u)),
            (Family::PreLie, OpKey::T(t)) => OpKey::T(t.relabel(&|l| inv.image(l))),
            (Family::QOrd | Family::Ord, OpKey::Q(q)) => OpKey::Q(q.relabel(&inv)),
            (Family::Sg | Family::NcSg, OpKey::D(d)) => OpKey::D(d.relabel(&inv)),
            _ => unreachable!("keys validated before dispatch"),
        }
    }

    /// Right symmetric action p^σ, the species relabeling along σ⁻¹.
    pub fn act_key(&self, key: &OpKey, sigma: &Perm) -> Result<OpKey, OperadError> {
        let n = self.validate_key(key)?;
        if n != sigma.n() {
            return Err(OperadError::ArityMismatch {
                expected: n,
                got: sigma.n(),
            });
        }
        Ok(self.act_key_unchecked(key, sigma))
    }

    /// Linear extension of [`act_key`](Descriptor::act_key).
    pub fn act(&self, x: &Element<OpKey>, sigma: &Perm) -> Result<Element<OpKey>, OperadError> {
        if let Some(n) = self.element_arity(x)? {
            if n != sigma.n() {
                return Err(OperadError::ArityMismatch {
                    expected: n,
                    got: sigma.n(),
                });
            }
        }
        Ok(x.map_keys(|k| self.act_key_unchecked(k, sigma)))
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            Mode::Circ => write!(f, "{}", self.family.name()),
            Mode::Nabla => write!(f, "{}:{}", self.family.name(), self.mode.name()),
        }
    }
}

/// An element of one arity component of one operad: the checked, user-facing
/// wrapper around the raw [`Element`] engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperadElement {
    desc: Descriptor,
    arity: usize,
    value: Element<OpKey>,
}

impl OperadElement {
    pub fn new(
        desc: Descriptor,
        arity: usize,
        value: Element<OpKey>,
    ) -> Result<Self, OperadError> {
        if let Some(n) = desc.element_arity(&value)? {
            if n != arity {
                return Err(OperadError::ArityMismatch {
                    expected: arity,
                    got: n,
                });
            }
        }
        Ok(OperadElement { desc, arity, value })
    }

    pub fn basis(desc: Descriptor, key: OpKey) -> Result<Self, OperadError> {
        let arity = desc.validate_key(&key)?;
        Ok(OperadElement {
            desc,
            arity,
            value: Element::basis(key),
        })
    }

    pub fn unit(desc: Descriptor) -> Self {
        OperadElement {
            desc,
            arity: 1,
            value: desc.unit(),
        }
    }

    pub fn zero(desc: Descriptor, arity: usize) -> Self {
        OperadElement {
            desc,
            arity,
            value: Element::zero(),
        }
    }

    pub fn desc(&self) -> Descriptor {
        self.desc
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self) -> &Element<OpKey> {
        &self.value
    }

    pub fn into_value(self) -> Element<OpKey> {
        self.value
    }

    fn same_desc(&self, other: &Self) -> Result<(), OperadError> {
        if self.desc != other.desc {
            return Err(OperadError::DescriptorMismatch {
                left: self.desc.to_string(),
                right: other.desc.to_string(),
            });
        }
        Ok(())
    }

    pub fn compose(&self, i: usize, other: &Self) -> Result<Self, OperadError> {
        self.same_desc(other)?;
        if i < 1 || i > self.arity {
            return Err(OperadError::BadSlot {
                i,
                m: self.arity,
            });
        }
        let value = self.desc.compose(&self.value, i, &other.value)?;
        let arity = self.arity + other.arity - 1;
        self.desc.guard(arity, self.desc.max_arity())?;
        Ok(OperadElement {
            desc: self.desc,
            arity,
            value,
        })
    }

    pub fn act(&self, sigma: &Perm) -> Result<Self, OperadError> {
        if sigma.n() != self.arity {
            return Err(OperadError::ArityMismatch {
                expected: self.arity,
                got: sigma.n(),
            });
        }
        Ok(OperadElement {
            desc: self.desc,
            arity: self.arity,
            value: self.desc.act(&self.value, sigma)?,
        })
    }

    pub fn gamma(&self, args: &[OperadElement]) -> Result<Self, OperadError> {
        if args.len() != self.arity {
            return Err(OperadError::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        let mut arity = 0;
        for arg in args {
            self.same_desc(arg)?;
            arity += arg.arity;
        }
        let values: Vec<Element<OpKey>> = args.iter().map(|a| a.value.clone()).collect();
        let value = self.desc.gamma(&self.value, &values)?;
        Ok(OperadElement {
            desc: self.desc,
            arity,
            value,
        })
    }
}

impl fmt::Display for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
