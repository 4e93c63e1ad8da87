use std::fmt;
use std::marker::PhantomData;

use algebra_core::Element;
use combinatorics::IsoTree;
use operads::OpKey;

use crate::brace::BraceContext;
use crate::InducedError;

/// Shared boundary rules: an empty side acts as a unit against a single
/// letter and annihilates anything longer. `None` means both sides are
/// nonempty and the implementor decides.
fn boundary<L: Ord + Clone>(u: &[L], v: &[L]) -> Option<Element<L>> {
    match (u.len(), v.len()) {
        (0, 1) => Some(Element::basis(v[0].clone())),
        (1, 0) => Some(Element::basis(u[0].clone())),
        (0, _) | (_, 0) => Some(Element::zero()),
        _ => None,
    }
}

/// The bracket family ⟨u, v⟩ feeding [`star_tensor`](crate::star_tensor):
/// a letter-valued map on pairs of words. Implementors only see calls with
/// both sides nonempty; the unit conventions live in the provided method.
pub trait TensorBrackets<L: Ord + Clone> {
    fn bracket_raw(&self, u: &[L], v: &[L]) -> Result<Element<L>, InducedError>;

    fn bracket(&self, u: &[L], v: &[L]) -> Result<Element<L>, InducedError> {
        match boundary(u, v) {
            Some(done) => Ok(done),
            None => self.bracket_raw(u, v),
        }
    }
}

/// Same shape for the symmetric side ⌊u, v⌋ feeding
/// [`star_sym`](crate::star_sym). Implementations must not depend on the
/// order within either slice.
pub trait SymBrackets<L: Ord + Clone> {
    fn bracket_raw(&self, u: &[L], v: &[L]) -> Result<Element<L>, InducedError>;

    fn bracket(&self, u: &[L], v: &[L]) -> Result<Element<L>, InducedError> {
        match boundary(u, v) {
            Some(done) => Ok(done),
            None => self.bracket_raw(u, v),
        }
    }
}

/// All brackets vanish: ∗ degenerates to the shuffle product and ⋆ to the
/// monomial product.
pub struct Trivial;

impl<L: Ord + Clone> TensorBrackets<L> for Trivial {
    fn bracket_raw(&self, _: &[L], _: &[L]) -> Result<Element<L>, InducedError> {
        Ok(Element::zero())
    }
}

impl<L: Ord + Clone> SymBrackets<L> for Trivial {
    fn bracket_raw(&self, _: &[L], _: &[L]) -> Result<Element<L>, InducedError> {
        Ok(Element::zero())
    }
}

impl TensorBrackets<OpKey> for BraceContext {
    /// ⟨x, q₁…q_l⟩ is the brace; longer left sides vanish, which makes the
    /// induced ∗ the brace-algebra product on the tensor coalgebra.
    fn bracket_raw(&self, u: &[OpKey], v: &[OpKey]) -> Result<Element<OpKey>, InducedError> {
        if u.len() >= 2 {
            return Ok(Element::zero());
        }
        let args: Vec<_> = v.iter().cloned().map(Element::basis).collect();
        self.brace(&Element::basis(u[0].clone()), &args)
    }
}

impl SymBrackets<OpKey> for BraceContext {
    fn bracket_raw(&self, u: &[OpKey], v: &[OpKey]) -> Result<Element<OpKey>, InducedError> {
        if u.len() >= 2 {
            return Ok(Element::zero());
        }
        let args: Vec<_> = v.iter().cloned().map(Element::basis).collect();
        self.binfty_bracket(&Element::basis(u[0].clone()), &args)
    }
}

/// Monomial X_α in finitely many commuting variables — the letter type of
/// the quasi-shuffle algebra. Trailing zero exponents are trimmed, so equal
/// monomials compare equal whatever they were built from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct XMono(Vec<u32>);

impl XMono {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        XMono(exponents)
    }

    /// X_{e_i}, 1-based.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut exponents = vec![0; i];
        exponents[i - 1] = 1;
        XMono(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// X_α · X_β = X_{α+β}.
    pub fn mul(&self, other: &XMono) -> XMono {
        let n = self.0.len().max(other.0.len());
        XMono::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

impl fmt::Display for XMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "x[{}]", parts.join(","))
    }
}

/// Only the letter-letter bracket survives and multiplies exponents'
/// indices: the induced ∗ is the quasi-shuffle product.
pub struct QuasiShuffle;

impl TensorBrackets<XMono> for QuasiShuffle {
    fn bracket_raw(&self, u: &[XMono], v: &[XMono]) -> Result<Element<XMono>, InducedError> {
        if u.len() == 1 && v.len() == 1 {
            Ok(Element::basis(u[0].mul(&v[0])))
        } else {
            Ok(Element::zero())
        }
    }
}

/// Symmetric brackets grown out of a bare pre-Lie product by the Oudom–Guin
/// recursion
///
/// ```text
/// ⌊x, y⌋          = x•y
/// ⌊x, y₁…y_k⌋     = ⌊⌊x, y₁…y_{k−1}⌋, y_k⌋ − Σᵢ ⌊x, y₁…⌊yᵢ, y_k⌋…y_{k−1}⌋
/// ```
///
/// with left sides of length ≥ 2 sent to zero. When • is the operadic
/// Σᵢ p∘ᵢq this reproduces `binfty_bracket` without ever composing more
/// than one slot at a time — the law tests compare the two routes.
pub struct PreLieBrackets<L, F>
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> Result<Element<L>, InducedError>,
{
    bullet: F,
    _letters: PhantomData<L>,
}

impl<L, F> PreLieBrackets<L, F>
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> Result<Element<L>, InducedError>,
{
    pub fn new(bullet: F) -> Self {
        PreLieBrackets { bullet, _letters: PhantomData }
    }

    fn bullet_elements(
        &self,
        x: &Element<L>,
        y: &Element<L>,
    ) -> Result<Element<L>, InducedError> {
        let mut out = Element::zero();
        for (kx, cx) in x.iter() {
            for (ky, cy) in y.iter() {
                out += (self.bullet)(kx, ky)?.scale(&(cx * cy));
            }
        }
        Ok(out)
    }

    fn nested(&self, x: &Element<L>, ys: &[Element<L>]) -> Result<Element<L>, InducedError> {
        match ys.len() {
            0 => Ok(x.clone()),
            1 => self.bullet_elements(x, &ys[0]),
            k => {
                let head = &ys[..k - 1];
                let last = &ys[k - 1];
                let mut out = self.bullet_elements(&self.nested(x, head)?, last)?;
                for i in 0..k - 1 {
                    let mut bent = head.to_vec();
                    bent[i] = self.bullet_elements(&head[i], last)?;
                    out = out - self.nested(x, &bent)?;
                }
                Ok(out)
            }
        }
    }
}

impl<L, F> SymBrackets<L> for PreLieBrackets<L, F>
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> Result<Element<L>, InducedError>,
{
    fn bracket_raw(&self, u: &[L], v: &[L]) -> Result<Element<L>, InducedError> {
        if u.len() >= 2 {
            return Ok(Element::zero());
        }
        let ys: Vec<_> = v.iter().cloned().map(Element::basis).collect();
        self.nested(&Element::basis(u[0].clone()), &ys)
    }
}

/// The recursion driven by the operadic pre-Lie product of `ctx`.
pub fn operadic_prelie(
    ctx: &BraceContext,
) -> PreLieBrackets<OpKey, impl Fn(&OpKey, &OpKey) -> Result<Element<OpKey>, InducedError> + '_> {
    PreLieBrackets::new(move |a: &OpKey, b: &OpKey| {
        ctx.prelie(&Element::basis(a.clone()), &Element::basis(b.clone()))
    })
}

/// The recursion driven by grafting on colored rooted trees — the free
/// pre-Lie product, whose ⋆ is the Grossman–Larson algebra.
pub fn grafting(
) -> PreLieBrackets<IsoTree, impl Fn(&IsoTree, &IsoTree) -> Result<Element<IsoTree>, InducedError>>
{
    PreLieBrackets::new(|x, y| Ok(graft_sum(x, y)))
}

/// x•y = Σ over vertices of x of "attach the root of y below that vertex".
fn graft_sum(x: &IsoTree, y: &IsoTree) -> Element<IsoTree> {
    let mut kids: Vec<IsoTree> = x.children().to_vec();
    kids.push(y.clone());
    let mut out = Element::basis(IsoTree::node(x.color, kids));
    for (i, child) in x.children().iter().enumerate() {
        for (grafted, c) in graft_sum(child, y).into_terms() {
            let mut kids: Vec<IsoTree> = x.children().to_vec();
            kids[i] = grafted;
            out.add_term(IsoTree::node(x.color, kids), c);
        }
    }
    out
}
