use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// A finite poset of weight labels.
///
/// The order is the reflexive-transitive closure of the cover pairs. The
/// linear extension is the lexicographically smallest topological sort,
/// listed from the bottom up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPoset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    leq: Vec<Vec<bool>>,
    linear: Vec<usize>,
    position: Vec<usize>,
}

impl WeightPoset {
    /// `covers` holds pairs `(μ, λ)` with `μ < λ`.
    pub fn new(labels: Vec<String>, covers: &[(String, String)]) -> Result<Self> {
        let n = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidPoset(format!("duplicate label {l}")));
            }
        }
        let index = |l: &str| {
            labels.iter().position(|x| x == l).ok_or_else(|| Error::InvalidPoset(format!("unknown label {l}")))
        };
        let mut pairs = Vec::new();
        for (lo, hi) in covers {
            let (a, b) = (index(lo)?, index(hi)?);
            if a == b {
                return Err(Error::InvalidPoset(format!("{lo} < {lo} is not strict")));
            }
            pairs.push((a, b));
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &pairs {
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!("cycle through {} and {}", labels[i], labels[j])));
                }
            }
        }
        let mut indegree = vec![0usize; n];
        for &(_, b) in &pairs {
            indegree[b] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
        let mut linear = Vec::with_capacity(n);
        while let Some(Reverse(i)) = heap.pop() {
            linear.push(i);
            for &(a, b) in &pairs {
                if a == i {
                    indegree[b] -= 1;
                    if indegree[b] == 0 {
                        heap.push(Reverse(b));
                    }
                }
            }
        }
        let mut position = vec![0; n];
        for (p, &i) in linear.iter().enumerate() {
            position[i] = p;
        }
        Ok(WeightPoset { labels, covers: pairs, leq, linear, position })
    }

    /// The discrete order on the given labels.
    pub fn antichain(labels: Vec<String>) -> Self {
        Self::new(labels, &[]).expect("an antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    /// Label indices from the bottom of the linear extension to the top.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// Position of a label in the linear extension.
    pub fn rank(&self, a: usize) -> usize {
        self.position[a]
    }

    /// The label among `candidates` that comes last in the linear extension.
    pub fn top_of(&self, candidates: impl IntoIterator<Item = usize>) -> Option<usize> {
        candidates.into_iter().max_by_key(|&i| self.position[i])
    }
}
