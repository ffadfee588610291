use crate::error::{Error, Result};

/// Default ceiling on the total size `R` of a multiset.
pub const DEFAULT_MAX_TOTAL: usize = 64;

/// Multiplicity vector of a multiset `(1,…,1, 2,…,2, …, k,…,k)` together with
/// the capsule arithmetic used by the two-level generator.
///
/// Classes are numbered `1..=k`. Class `i` owns `n[i]` items. Its capsule is
/// the range `1..=limit[i]`, placed in the container at offset `base[i]`:
///
/// ```text
/// base[i]  = n[1] + … + n[i-1]
/// limit[i] = R - base[i]
/// ```
///
/// ```
/// use loopless::MultisetSpec;
///
/// let spec = MultisetSpec::new(&[2, 2, 1]).unwrap();
/// assert_eq!(spec.total(), 5);
/// assert_eq!(spec.bases(), &[0, 2, 4]);
/// assert_eq!(spec.limits(), &[5, 3, 1]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultisetSpec {
    multiplicities: Vec<usize>,
    bases: Vec<usize>,
    limits: Vec<usize>,
    total: usize,
}

impl MultisetSpec {
    pub fn new(multiplicities: &[usize]) -> Result<Self> {
        Self::with_max_total(multiplicities, DEFAULT_MAX_TOTAL)
    }

    pub fn with_max_total(multiplicities: &[usize], max_total: usize) -> Result<Self> {
        if multiplicities.is_empty() {
            return Err(Error::EmptySpec);
        }
        if let Some(index) = multiplicities.iter().position(|&m| m == 0) {
            return Err(Error::ZeroMultiplicity {
                index: index + 1,
                value: 0,
            });
        }
        let total = multiplicities
            .iter()
            .try_fold(0usize, |acc, &m| acc.checked_add(m))
            .ok_or(Error::TooLarge {
                total: usize::MAX,
                max: max_total,
            })?;
        if total > max_total {
            return Err(Error::TooLarge {
                total,
                max: max_total,
            });
        }
        let mut bases = Vec::with_capacity(multiplicities.len());
        let mut acc = 0;
        for &m in multiplicities {
            bases.push(acc);
            acc += m;
        }
        let limits = bases.iter().map(|&b| total - b).collect();
        Ok(Self {
            multiplicities: multiplicities.to_vec(),
            bases,
            limits,
            total,
        })
    }

    /// Spec whose classes are all singletons: plain permutations of `1..=k`.
    pub fn distinct(k: usize) -> Result<Self> {
        Self::new(&vec![1; k])
    }

    /// Number of distinct classes `k`.
    pub fn classes(&self) -> usize {
        self.multiplicities.len()
    }

    /// Total size `R`.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn bases(&self) -> &[usize] {
        &self.bases
    }

    pub fn limits(&self) -> &[usize] {
        &self.limits
    }

    /// `n[class]`, with `class` in `1..=k`.
    pub fn multiplicity(&self, class: usize) -> usize {
        self.multiplicities[class - 1]
    }

    /// `base[class]`, with `class` in `1..=k`.
    pub fn base(&self, class: usize) -> usize {
        self.bases[class - 1]
    }

    /// `limit[class]`, with `class` in `1..=k`.
    pub fn limit(&self, class: usize) -> usize {
        self.limits[class - 1]
    }

    /// The sorted container `(1,…,1, 2,…,2, …)`.
    pub fn sorted_items(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .enumerate()
            .flat_map(|(c, &m)| std::iter::repeat(c + 1).take(m))
            .collect()
    }

    // Incremental construction for callers that must spread the O(R) setup
    // over many constant-time slices. `total` is fixed up front so that every
    // limit is known the moment its class opens.

    pub(crate) fn with_capacity(total: usize) -> Self {
        Self {
            multiplicities: Vec::with_capacity(total),
            bases: Vec::with_capacity(total),
            limits: Vec::with_capacity(total),
            total,
        }
    }

    pub(crate) fn reset(&mut self, total: usize) {
        self.multiplicities.clear();
        self.bases.clear();
        self.limits.clear();
        self.total = total;
    }

    /// Appends one item; opens a new class first when `new_class` is set.
    /// Returns the class of the appended item.
    pub(crate) fn push_item(&mut self, filled: usize, new_class: bool) -> usize {
        if new_class || self.multiplicities.is_empty() {
            self.multiplicities.push(0);
            self.bases.push(filled);
            self.limits.push(self.total - filled);
        }
        let k = self.multiplicities.len();
        self.multiplicities[k - 1] += 1;
        k
    }
}
