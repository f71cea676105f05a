//! Named generators for every sequence family the engine knows, backed by a
//! shared memo cache.
//!
//! Each family has a production route plus at least one independent
//! cross-check exercised by the test suite (series definition vs. closed
//! form, triangle vs. enumeration, exact vs. modular). Values are memoized
//! per family in prefix tables behind a single `RwLock`: sweeps re-read low
//! indices constantly, extensions are comparatively rare. Observable results
//! are deterministic and independent of thread count.

mod integer_seq;
mod rational_seq;
mod stirling;

pub use integer_seq::IntegerFamily;

use crate::rational::{big, format_exact, BigInt, Rational};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZooError {
    #[error("poly-Bernoulli order k must be >= 1, got {0}")]
    BadPolyOrder(i64),
    #[error("family {0} takes no parameter")]
    UnexpectedParameter(String),
    #[error("family {0} requires a parameter")]
    MissingParameter(String),
    #[error("stirling index out of range: j = {j} not in 0..={n}")]
    StirlingIndex { n: u64, j: u64 },
    #[error("unknown sequence family: {0}")]
    UnknownFamily(String),
    #[error("{0} is not a single-index family")]
    NotSingleIndex(String),
    #[error("{0} has no native generator; values come from ingested OEIS data")]
    NotNative(String),
    #[error("cache seed rejected: {0}")]
    BadSeed(String),
}

/// Every named sequence family with its parameterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    BernoulliFirst,
    PolyBernoulli,
    CauchyFirst,
    BernoulliSecond,
    Norlund,
    SechTanh,
    Tangent,
    ReducedTangent,
    Stirling1,
    Stirling2,
    Motzkin,
    Catalan,
    EulerUpdown,
    SpringerA001586,
    ComplementaryBell,
    OeisFile,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::BernoulliFirst => "bernoulli",
            Family::PolyBernoulli => "poly-bernoulli",
            Family::CauchyFirst => "cauchy-first",
            Family::BernoulliSecond => "bernoulli-second",
            Family::Norlund => "norlund",
            Family::SechTanh => "sech-tanh",
            Family::Tangent => "tangent",
            Family::ReducedTangent => "reduced-tangent",
            Family::Stirling1 => "stirling1",
            Family::Stirling2 => "stirling2",
            Family::Motzkin => "motzkin",
            Family::Catalan => "catalan",
            Family::EulerUpdown => "euler-updown",
            Family::SpringerA001586 => "springer-a001586",
            Family::ComplementaryBell => "complementary-bell",
            Family::OeisFile => "oeis",
        }
    }

    pub fn from_token(s: &str) -> Option<Family> {
        let all = [
            Family::BernoulliFirst,
            Family::PolyBernoulli,
            Family::CauchyFirst,
            Family::BernoulliSecond,
            Family::Norlund,
            Family::SechTanh,
            Family::Tangent,
            Family::ReducedTangent,
            Family::Stirling1,
            Family::Stirling2,
            Family::Motzkin,
            Family::Catalan,
            Family::EulerUpdown,
            Family::SpringerA001586,
            Family::ComplementaryBell,
            Family::OeisFile,
        ];
        all.into_iter().find(|f| f.token() == s)
    }

    /// The integer-recurrence families with modular fast paths.
    pub fn as_integer_family(self) -> Option<IntegerFamily> {
        match self {
            Family::Motzkin => Some(IntegerFamily::Motzkin),
            Family::Catalan => Some(IntegerFamily::Catalan),
            Family::EulerUpdown => Some(IntegerFamily::EulerUpdown),
            Family::SpringerA001586 => Some(IntegerFamily::SpringerA001586),
            Family::ComplementaryBell => Some(IntegerFamily::ComplementaryBell),
            Family::Tangent => Some(IntegerFamily::Tangent),
            Family::ReducedTangent => Some(IntegerFamily::ReducedTangent),
            _ => None,
        }
    }
}

/// A fully-specified sequence: family plus its parameter (poly-Bernoulli
/// order k, or the numeric OEIS identifier for ingestion-only families).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SequenceId {
    family: Family,
    param: Option<i64>,
}

impl SequenceId {
    pub fn new(family: Family, param: Option<i64>) -> Result<Self, ZooError> {
        match (family, param) {
            (Family::PolyBernoulli, Some(k)) if k >= 1 => Ok(()),
            (Family::PolyBernoulli, Some(k)) => Err(ZooError::BadPolyOrder(k)),
            (Family::PolyBernoulli, None) => {
                Err(ZooError::MissingParameter(family.token().into()))
            }
            (Family::OeisFile, Some(_)) => Ok(()),
            (Family::OeisFile, None) => Err(ZooError::MissingParameter(family.token().into())),
            (_, None) => Ok(()),
            (_, Some(_)) => Err(ZooError::UnexpectedParameter(family.token().into())),
        }?;
        Ok(SequenceId { family, param })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> Option<i64> {
        self.param
    }

    /// `bernoulli`, `poly-bernoulli(2)`, `A064062`.
    pub fn name(&self) -> String {
        match self.family {
            Family::OeisFile => format!("A{:06}", self.param.unwrap_or(0)),
            _ => match self.param {
                Some(k) => format!("{}({})", self.family.token(), k),
                None => self.family.token().to_string(),
            },
        }
    }

    /// The `family param` column pair of the cache-file format.
    pub fn file_tokens(&self) -> (String, String) {
        (
            self.family.token().to_string(),
            self.param.map_or_else(|| "-".into(), |k| k.to_string()),
        )
    }

    pub fn from_file_tokens(family: &str, param: &str) -> Result<Self, ZooError> {
        let fam =
            Family::from_token(family).ok_or_else(|| ZooError::UnknownFamily(family.into()))?;
        let param = if param == "-" {
            None
        } else {
            Some(
                param
                    .parse::<i64>()
                    .map_err(|_| ZooError::BadSeed(format!("bad parameter {param}")))?,
            )
        };
        SequenceId::new(fam, param)
    }
}

/// One computed value, as stored in the persistent cache.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: SequenceId,
    pub index: u64,
    pub value: Rational,
}

#[derive(Default)]
struct ZooState {
    bernoulli: Vec<Rational>,
    cauchy: Vec<Rational>,
    norlund: Vec<Rational>,
    sech_tanh: Vec<Rational>,
    poly_bernoulli: HashMap<u32, Vec<Rational>>,
    integers: HashMap<IntegerFamily, Vec<BigInt>>,
    stirling1: Vec<Vec<BigInt>>,
    stirling2: Vec<Vec<BigInt>>,
}

/// Shared memo cache for every generator. Cheap to share behind a reference;
/// all methods take `&self`.
#[derive(Default)]
pub struct SequenceCache {
    state: RwLock<ZooState>,
}

/// Table growth policy: recomputation is O(n^2) for the series-backed
/// families, so grow geometrically to amortize.
fn grown_order(current_len: usize, n: u64) -> usize {
    (n as usize + 1).max(current_len * 2).max(32) - 1
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn read_or_extend<T: Clone>(
        &self,
        read: impl Fn(&ZooState) -> Option<T>,
        extend: impl FnOnce(&mut ZooState),
    ) -> T {
        if let Some(v) = read(&self.state.read().expect("zoo lock")) {
            return v;
        }
        let mut state = self.state.write().expect("zoo lock");
        if let Some(v) = read(&state) {
            return v; // another writer got there first
        }
        extend(&mut state);
        read(&state).expect("table extended past requested index")
    }

    /// Bernoulli number B_n in the B_1 = +1/2 sign convention (EGF
    /// z e^z/(e^z - 1)); numbers with odd index n > 1 are zero.
    ///
    /// To map to the B_1 = -1/2 convention, negate the n = 1 value; all other
    /// entries coincide.
    pub fn bernoulli_first(&self, n: u64) -> Rational {
        self.read_or_extend(
            |s| s.bernoulli.get(n as usize).cloned(),
            |s| {
                let order = grown_order(s.bernoulli.len(), n);
                s.bernoulli = rational_seq::bernoulli_table(order);
            },
        )
    }

    /// Poly-Bernoulli number B_n^{(k)}, k >= 1: EGF coefficient n of
    /// Li_k(z)/z at z = 1 - e^{-x}. For k = 1 this is `bernoulli_first`.
    pub fn poly_bernoulli(&self, k: u32, n: u64) -> Result<Rational, ZooError> {
        if k < 1 {
            return Err(ZooError::BadPolyOrder(k as i64));
        }
        Ok(self.read_or_extend(
            |s| s.poly_bernoulli.get(&k).and_then(|t| t.get(n as usize)).cloned(),
            |s| {
                let len = s.poly_bernoulli.get(&k).map_or(0, Vec::len);
                let order = grown_order(len, n);
                s.poly_bernoulli
                    .insert(k, rational_seq::poly_bernoulli_table(k, order));
            },
        ))
    }

    /// Cauchy number of the first kind a_n: EGF coefficient of t/ln(1+t).
    pub fn cauchy_first(&self, n: u64) -> Rational {
        self.read_or_extend(
            |s| s.cauchy.get(n as usize).cloned(),
            |s| {
                let order = grown_order(s.cauchy.len(), n);
                s.cauchy = rational_seq::cauchy_table(order);
            },
        )
    }

    /// Bernoulli number of the second kind b_n = a_n / n! (OGF coefficient
    /// of t/ln(1+t)).
    pub fn bernoulli_second(&self, n: u64) -> Rational {
        self.cauchy_first(n) / big(crate::rational::factorial(n as usize))
    }

    /// Nörlund number (Cauchy number of the second kind): EGF coefficient n
    /// of t/((1+t) ln(1+t)).
    pub fn norlund(&self, n: u64) -> Rational {
        self.read_or_extend(
            |s| s.norlund.get(n as usize).cloned(),
            |s| {
                let order = grown_order(s.norlund.len(), n);
                s.norlund = rational_seq::norlund_table(order);
            },
        )
    }

    /// S_n: coefficient n of tanh(z) + sech(z) (plain Taylor coefficients).
    pub fn sech_tanh(&self, n: u64) -> Rational {
        self.read_or_extend(
            |s| s.sech_tanh.get(n as usize).cloned(),
            |s| {
                let order = grown_order(s.sech_tanh.len(), n);
                s.sech_tanh = rational_seq::sech_tanh_table(order);
            },
        )
    }

    /// Signed Stirling number of the first kind s(n, j).
    pub fn stirling1_signed(&self, n: u64, j: u64) -> Result<BigInt, ZooError> {
        if j > n {
            return Err(ZooError::StirlingIndex { n, j });
        }
        Ok(self.read_or_extend(
            |s| {
                s.stirling1
                    .get(n as usize)
                    .map(|row| row[j as usize].clone())
            },
            |s| stirling::extend_stirling1(&mut s.stirling1, n as usize),
        ))
    }

    /// Stirling number of the second kind S2(n, m).
    pub fn stirling2(&self, n: u64, m: u64) -> Result<BigInt, ZooError> {
        if m > n {
            return Err(ZooError::StirlingIndex { n, j: m });
        }
        Ok(self.read_or_extend(
            |s| {
                s.stirling2
                    .get(n as usize)
                    .map(|row| row[m as usize].clone())
            },
            |s| stirling::extend_stirling2(&mut s.stirling2, n as usize),
        ))
    }

    /// Exact value of an integer family at index n.
    pub fn integer_family(&self, fam: IntegerFamily, n: u64) -> BigInt {
        self.read_or_extend(
            |s| s.integers.get(&fam).and_then(|t| t.get(n as usize)).cloned(),
            |s| integer_seq::ensure_exact(&mut s.integers, fam, n as usize),
        )
    }

    /// `integer_family(fam, n) mod m` through the modular fast path.
    ///
    /// Families whose recurrence is division-free run entirely in modular
    /// arithmetic; Motzkin and Catalan divide by a step-dependent factor and
    /// fall back to the exact memoized table whenever that factor is not
    /// invertible mod m. Either way the result equals the exact value mod m.
    pub fn integer_family_mod(&self, fam: IntegerFamily, n: u64, m: u64) -> u64 {
        assert!(m >= 2, "modulus must be at least 2");
        self.integer_family_mod_prefix(fam, n, m)[n as usize]
    }

    /// The whole prefix `integer_family(fam, 0..=n) mod m` in one modular pass.
    pub fn integer_family_mod_prefix(&self, fam: IntegerFamily, n: u64, m: u64) -> Vec<u64> {
        assert!(m >= 2, "modulus must be at least 2");
        let mut state = self.state.write().expect("zoo lock");
        integer_seq::modular_prefix(&mut state.integers, fam, n as usize, m)
    }

    /// Single-index dispatch used by the CLI `compute` command and the cache.
    pub fn value(&self, id: &SequenceId, n: u64) -> Result<Rational, ZooError> {
        match id.family() {
            Family::BernoulliFirst => Ok(self.bernoulli_first(n)),
            Family::PolyBernoulli => self.poly_bernoulli(id.param().unwrap() as u32, n),
            Family::CauchyFirst => Ok(self.cauchy_first(n)),
            Family::BernoulliSecond => Ok(self.bernoulli_second(n)),
            Family::Norlund => Ok(self.norlund(n)),
            Family::SechTanh => Ok(self.sech_tanh(n)),
            Family::Stirling1 | Family::Stirling2 => {
                Err(ZooError::NotSingleIndex(id.name()))
            }
            Family::OeisFile => Err(ZooError::NotNative(id.name())),
            fam => Ok(big(self.integer_family(
                fam.as_integer_family().expect("integer family"),
                n,
            ))),
        }
    }

    /// Seed a family table with a contiguous prefix loaded from the
    /// persistent cache. Only prefixes starting at index 0 and longer than
    /// the in-memory table are installed; integer families must parse as
    /// integers. Returns how many entries were installed.
    pub fn seed(&self, id: &SequenceId, values: &[Rational]) -> Result<usize, ZooError> {
        if values.is_empty() {
            return Ok(0);
        }
        let mut state = self.state.write().expect("zoo lock");
        let install = |table: &mut Vec<Rational>| {
            if values.len() > table.len() {
                *table = values.to_vec();
                values.len()
            } else {
                0
            }
        };
        let n = match id.family() {
            Family::BernoulliFirst => install(&mut state.bernoulli),
            Family::CauchyFirst => install(&mut state.cauchy),
            Family::Norlund => install(&mut state.norlund),
            Family::SechTanh => install(&mut state.sech_tanh),
            Family::PolyBernoulli => {
                let k = id.param().unwrap() as u32;
                install(state.poly_bernoulli.entry(k).or_default())
            }
            Family::BernoulliSecond => 0, // derived from cauchy-first; never seeded
            fam => {
                let Some(int_fam) = fam.as_integer_family() else {
                    return Err(ZooError::BadSeed(format!(
                        "{} cannot be seeded from a value cache",
                        id.name()
                    )));
                };
                let mut ints = Vec::with_capacity(values.len());
                for (i, v) in values.iter().enumerate() {
                    if !v.is_integer() {
                        return Err(ZooError::BadSeed(format!(
                            "non-integer value {} at index {i} for {}",
                            format_exact(v),
                            id.name()
                        )));
                    }
                    ints.push(v.to_integer());
                }
                let table = state.integers.entry(int_fam).or_default();
                if ints.len() > table.len() {
                    let n = ints.len();
                    *table = ints;
                    n
                } else {
                    0
                }
            }
        };
        Ok(n)
    }

    /// Every memoized single-index value, sorted, for cache persistence.
    pub fn dump(&self) -> Vec<SequenceRecord> {
        let state = self.state.read().expect("zoo lock");
        let mut out = Vec::new();
        let mut push_rationals = |family: Family, param: Option<i64>, table: &[Rational]| {
            let id = SequenceId::new(family, param).expect("valid id");
            for (n, v) in table.iter().enumerate() {
                out.push(SequenceRecord {
                    id: id.clone(),
                    index: n as u64,
                    value: v.clone(),
                });
            }
        };
        push_rationals(Family::BernoulliFirst, None, &state.bernoulli);
        push_rationals(Family::CauchyFirst, None, &state.cauchy);
        push_rationals(Family::Norlund, None, &state.norlund);
        push_rationals(Family::SechTanh, None, &state.sech_tanh);
        let mut orders: Vec<_> = state.poly_bernoulli.keys().copied().collect();
        orders.sort_unstable();
        for k in orders {
            push_rationals(
                Family::PolyBernoulli,
                Some(k as i64),
                &state.poly_bernoulli[&k],
            );
        }
        let mut fams: Vec<_> = state.integers.keys().copied().collect();
        fams.sort_unstable();
        for fam in fams {
            let id = SequenceId::new(fam.as_family(), None).expect("valid id");
            for (n, v) in state.integers[&fam].iter().enumerate() {
                out.push(SequenceRecord {
                    id: id.clone(),
                    index: n as u64,
                    value: Rational::new(v.clone(), BigInt::one()),
                });
            }
        }
        out.sort_by(|a, b| (&a.id, a.index).cmp(&(&b.id, b.index)));
        out
    }
}
