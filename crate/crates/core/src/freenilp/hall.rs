use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactmat::Rat;

/// Bracketed word over the generators `x1, x2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HallWord {
    Gen(u8),
    Br(Box<HallWord>, Box<HallWord>),
}

impl HallWord {
    pub fn gen(i: u8) -> HallWord {
        HallWord::Gen(i)
    }

    pub fn br(a: HallWord, b: HallWord) -> HallWord {
        HallWord::Br(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            HallWord::Gen(_) => 1,
            HallWord::Br(a, b) => a.degree() + b.degree(),
        }
    }

    /// Parses `x1`, `x2` and `[u,v]` with optional spaces.
    pub fn parse(s: &str) -> Option<HallWord> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (w, rest) = parse_at(&chars)?;
        rest.is_empty().then_some(w)
    }
}

fn parse_at(s: &[char]) -> Option<(HallWord, &[char])> {
    match s {
        ['x', d @ ('1' | '2'), rest @ ..] => Some((HallWord::Gen(*d as u8 - b'0'), rest)),
        ['[', rest @ ..] => {
            let (a, rest) = parse_at(rest)?;
            let rest = rest.strip_prefix(&[','])?;
            let (b, rest) = parse_at(rest)?;
            let rest = rest.strip_prefix(&[']'])?;
            Some((HallWord::br(a, b), rest))
        }
        _ => None,
    }
}

impl fmt::Display for HallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HallWord::Gen(i) => write!(f, "x{i}"),
            HallWord::Br(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl fmt::Debug for HallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Sparse = BTreeMap<usize, Rat>;

/// Hall basis of the free Lie algebra on two generators, truncated above degree `t`.
///
/// Basic words are ordered by degree and, within a degree, by generation order.
/// `[u, v]` is basic when `u > v` and either `u` is a generator or `u = [u', u'']`
/// with `u'' <= v`.
pub struct HallBasis {
    t: usize,
    words: Vec<HallWord>,
    degree: Vec<usize>,
    parts: Vec<Option<(usize, usize)>>,
    pair_index: HashMap<(usize, usize), usize>,
    memo: HashMap<(usize, usize), Sparse>,
}

impl HallBasis {
    pub fn new(t: usize) -> HallBasis {
        let mut hb = HallBasis {
            t,
            words: Vec::new(),
            degree: Vec::new(),
            parts: Vec::new(),
            pair_index: HashMap::new(),
            memo: HashMap::new(),
        };
        if t == 0 {
            return hb;
        }
        for g in [1u8, 2] {
            hb.words.push(HallWord::Gen(g));
            hb.degree.push(1);
            hb.parts.push(None);
        }
        for d in 2..=t {
            let count = hb.words.len();
            for u in 0..count {
                for v in 0..u {
                    if hb.degree[u] + hb.degree[v] != d || !hb.is_basic_pair(u, v) {
                        continue;
                    }
                    let idx = hb.words.len();
                    hb.words.push(HallWord::br(hb.words[u].clone(), hb.words[v].clone()));
                    hb.degree.push(d);
                    hb.parts.push(Some((u, v)));
                    hb.pair_index.insert((u, v), idx);
                }
            }
        }
        hb
    }

    fn is_basic_pair(&self, u: usize, v: usize) -> bool {
        u > v
            && match self.parts[u] {
                None => true,
                Some((_, r)) => r <= v,
            }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[HallWord] {
        &self.words
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn parts(&self, i: usize) -> Option<(usize, usize)> {
        self.parts[i]
    }

    /// `[b_a, b_b]` expanded in the Hall basis, zero above degree `t`.
    pub fn bracket(&mut self, a: usize, b: usize) -> Sparse {
        if a == b || self.degree[a] + self.degree[b] > self.t {
            return Sparse::new();
        }
        if let Some(r) = self.memo.get(&(a, b)) {
            return r.clone();
        }
        let out = if a < b {
            self.bracket(b, a).into_iter().map(|(k, c)| (k, -c)).collect()
        } else if self.is_basic_pair(a, b) {
            Sparse::from([(self.pair_index[&(a, b)], Rat::one())])
        } else {
            // a = [a1, a2] with a2 > b: [[a1,a2],b] = [[a1,b],a2] + [a1,[a2,b]]
            let (a1, a2) = self.parts[a].expect("non-generator");
            let mut acc = Sparse::new();
            for (k, c) in self.bracket(a1, b) {
                let t = self.bracket(k, a2);
                add_scaled(&mut acc, &t, &c);
            }
            for (k, c) in self.bracket(a2, b) {
                let t = self.bracket(a1, k);
                add_scaled(&mut acc, &t, &c);
            }
            acc
        };
        self.memo.insert((a, b), out.clone());
        out
    }
}

fn add_scaled(acc: &mut Sparse, v: &Sparse, s: &Rat) {
    for (k, c) in v {
        let e = acc.entry(*k).or_insert_with(Rat::zero);
        *e += s * c;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}
