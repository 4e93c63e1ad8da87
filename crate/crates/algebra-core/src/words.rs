use std::fmt;

/// Tensor word: an ordered list of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Word<K>(pub Vec<K>);

impl<K: Clone> Word<K> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: K) -> Self {
        Word(vec![letter])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word<K>) -> Word<K> {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }
}

impl<K: fmt::Display> fmt::Display for Word<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Commutative monomial: letters with multiplicities, kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial<K: Ord> {
    factors: Vec<(K, usize)>,
}

impl<K: Ord + Clone> Monomial<K> {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn single(letter: K) -> Self {
        Monomial { factors: vec![(letter, 1)] }
    }

    pub fn from_letters<I: IntoIterator<Item = K>>(letters: I) -> Self {
        let mut m = Monomial::one();
        for l in letters {
            m.push(l, 1);
        }
        m
    }

    fn push(&mut self, letter: K, mult: usize) {
        if mult == 0 {
            return;
        }
        match self.factors.binary_search_by(|(k, _)| k.cmp(&letter)) {
            Ok(i) => self.factors[i].1 += mult,
            Err(i) => self.factors.insert(i, (letter, mult)),
        }
    }

    pub fn mul(&self, other: &Monomial<K>) -> Monomial<K> {
        let mut m = self.clone();
        for (k, n) in &other.factors {
            m.push(k.clone(), *n);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, n)| n).sum()
    }

    pub fn factors(&self) -> &[(K, usize)] {
        &self.factors
    }

    pub fn iter_letters(&self) -> impl Iterator<Item = &K> {
        self.factors.iter().flat_map(|(k, n)| std::iter::repeat(k).take(*n))
    }

    /// ∏ mult! — the symmetry factor relating monomials to set-indexed sums.
    pub fn pair_factor(&self) -> u64 {
        self.factors
            .iter()
            .map(|(_, n)| (1..=*n as u64).product::<u64>())
            .product()
    }
}

/// Forget the ordering of a word.
pub fn symmetrize<K: Ord + Clone>(w: &Word<K>) -> Monomial<K> {
    Monomial::from_letters(w.0.iter().cloned())
}

impl<K: Ord + fmt::Display> fmt::Display for Monomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (k, n) in &self.factors {
            for _ in 0..*n {
                parts.push(k.to_string());
            }
        }
        write!(f, "{}", parts.join("·"))
    }
}
