//! Coinvariants of the symmetric-group action on an operad's basis.
//!
//! The orbit of a key under relabeling is represented by its Ord-least
//! member; the symmetry factor s_ω = n!/|ω| counts the relabelings fixing
//! any member of ω and weights the pairing between an orbit class and its
//! dual functional f_ω = Σ_σ (x^σ)*.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Mutex;

use algebra_core::Monomial;
use combinatorics::Perm;
use operads::{Descriptor, OpKey, OperadError};

pub struct Coinv {
    desc: Descriptor,
    // key → (canonical representative, symmetry factor of its orbit)
    cache: Mutex<BTreeMap<OpKey, (OpKey, u64)>>,
}

impl Coinv {
    pub fn new(desc: Descriptor) -> Self {
        Coinv {
            desc,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn desc(&self) -> Descriptor {
        self.desc
    }

    /// Walks the orbit with adjacent transpositions, so the cost is bounded
    /// by the orbit itself and never by n!.
    fn fill_orbit(&self, key: &OpKey) -> Result<(OpKey, u64), OperadError> {
        let n = self.desc.validate_key(key)?;
        let gens: Vec<Perm> = (1..n)
            .map(|i| {
                let mut images: Vec<usize> = (1..=n).collect();
                images.swap(i - 1, i);
                Perm::from_images(images).expect("adjacent transposition")
            })
            .collect();
        let mut orbit = BTreeSet::new();
        orbit.insert(key.clone());
        let mut queue = VecDeque::from([key.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.desc.act_key(&x, g)?;
                if orbit.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let fact: u64 = (1..=n as u64).product();
        let s = fact / orbit.len() as u64;
        let rep = orbit.iter().next().expect("orbit nonempty").clone();
        let mut cache = self.cache.lock().unwrap();
        for x in orbit {
            cache.insert(x, (rep.clone(), s));
        }
        Ok((rep, s))
    }

    fn lookup(&self, key: &OpKey) -> Result<(OpKey, u64), OperadError> {
        if let Some(hit) = self.cache.lock().unwrap().get(key) {
            return Ok(hit.clone());
        }
        self.fill_orbit(key)
    }

    /// Canonical representative of the key's orbit.
    pub fn rep(&self, key: &OpKey) -> Result<OpKey, OperadError> {
        Ok(self.lookup(key)?.0)
    }

    /// s_ω = n!/|ω|.
    pub fn sym_factor(&self, key: &OpKey) -> Result<u64, OperadError> {
        Ok(self.lookup(key)?.1)
    }

    pub fn is_rep(&self, key: &OpKey) -> Result<bool, OperadError> {
        Ok(self.rep(key)? == *key)
    }

    /// The representatives of all orbits in arity n, sorted.
    pub fn reps(&self, n: usize) -> Result<Vec<OpKey>, OperadError> {
        let mut out = BTreeSet::new();
        for key in self.desc.basis(n)? {
            out.insert(self.rep(&key)?);
        }
        Ok(out.into_iter().collect())
    }

    /// Every member of the orbit of `key`.
    pub fn orbit(&self, key: &OpKey) -> Result<Vec<OpKey>, OperadError> {
        let n = self.desc.validate_key(key)?;
        let mut members = Vec::new();
        // Small arities only ever reach this; the basis sweep keeps it exact.
        for candidate in self.desc.basis(n)? {
            if self.rep(&candidate)? == self.rep(key)? {
                members.push(candidate);
            }
        }
        Ok(members)
    }

    /// Letterwise projection of a monomial onto representatives.
    pub fn project(&self, m: &Monomial<OpKey>) -> Result<Monomial<OpKey>, OperadError> {
        let mut letters = Vec::new();
        for k in m.iter_letters() {
            letters.push(self.rep(k)?);
        }
        Ok(Monomial::from_letters(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use operads::Family;

    #[test]
    fn associative_orbits_are_single() {
        // all of 𝔖_n is one orbit: coinv As(n) is one-dimensional
        let coinv = Coinv::new(Descriptor::circ(Family::As));
        assert_eq!(coinv.reps(3).unwrap().len(), 1);
        for key in Descriptor::circ(Family::As).basis(3).unwrap() {
            assert_eq!(coinv.sym_factor(&key).unwrap(), 1);
        }
    }

    #[test]
    fn tree_orbits_are_isoclasses() {
        let coinv = Coinv::new(Descriptor::circ(Family::PreLie));
        // 2 isoclasses on 3 vertices: the ladder and the corolla
        assert_eq!(coinv.reps(3).unwrap().len(), 2);
        // corolla has the symmetric pair of leaves: s = 3!/3 = 2
        let sizes: Vec<u64> = coinv
            .reps(3)
            .unwrap()
            .iter()
            .map(|r| coinv.sym_factor(r).unwrap())
            .collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2]);
    }

    #[test]
    fn commutative_orbit_is_trivial() {
        let coinv = Coinv::new(Descriptor::circ(Family::Com));
        let e4 = Descriptor::circ(Family::Com).basis(4).unwrap()[0].clone();
        assert_eq!(coinv.rep(&e4).unwrap(), e4);
        assert_eq!(coinv.sym_factor(&e4).unwrap(), 24);
    }
}
