//! The coefficient ring of a point and the scalar rings used by the maps.
//!
//! Only the fragment of the RO(C2)-graded coefficient ring that shows up in
//! the presentation is modelled: the positive cone `e^m xi^n`, the classes
//! `e^-m k` on the negative sigma axis and the transfers `tau(iota^-n)`.
//! Every other symbol is out of scope and cannot be constructed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element `a + b*sigma` of RO(C2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ro2Grading {
    pub a: i64,
    pub b: i64,
}

impl Ro2Grading {
    pub const ZERO: Ro2Grading = Ro2Grading { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Ro2Grading { a, b }
    }
}

impl Add for Ro2Grading {
    type Output = Ro2Grading;
    fn add(self, o: Ro2Grading) -> Ro2Grading {
        Ro2Grading::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Ro2Grading {
    type Output = Ro2Grading;
    fn sub(self, o: Ro2Grading) -> Ro2Grading {
        Ro2Grading::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Ro2Grading {
    type Output = Ro2Grading;
    fn neg(self) -> Ro2Grading {
        Ro2Grading::new(-self.a, -self.b)
    }
}

impl fmt::Display for Ro2Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}s"),
            (a, b) if b < 0 => write!(f, "{a} - {}s", -b),
            (a, b) => write!(f, "{a} + {b}s"),
        }
    }
}

/// Additive generators of the modelled fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoeffSymbol {
    One,
    /// The class `g` with `k = 2 - g`.
    G,
    /// `e^m xi^n`, `(m, n) != (0, 0)`.
    PosCone { m: u32, n: u32 },
    /// `e^-m k`, `m >= 1`.
    NegKappa { m: u32 },
    /// `tau(iota^-n)`, `n >= 2` even.
    Tau { n: u32 },
}

impl CoeffSymbol {
    pub fn grading(self) -> Ro2Grading {
        match self {
            CoeffSymbol::One | CoeffSymbol::G => Ro2Grading::ZERO,
            CoeffSymbol::PosCone { m, n } => {
                let (m, n) = (m as i64, n as i64);
                Ro2Grading::new(-2 * n, m + 2 * n)
            }
            CoeffSymbol::NegKappa { m } => Ro2Grading::new(0, -(m as i64)),
            CoeffSymbol::Tau { n } => Ro2Grading::new(n as i64, -(n as i64)),
        }
    }

    /// Symbols spanning a 2-torsion group: `e^m xi^n` with both exponents positive.
    pub fn is_torsion(self) -> bool {
        matches!(self, CoeffSymbol::PosCone { m, n } if m >= 1 && n >= 1)
    }

    /// Additive generators of the fragment in grading `a + b*sigma`.
    pub fn symbols_at(g: Ro2Grading) -> Vec<CoeffSymbol> {
        let (a, b) = (g.a, g.b);
        if a == 0 && b == 0 {
            return vec![CoeffSymbol::One, CoeffSymbol::G];
        }
        if a == 0 && b > 0 {
            return vec![CoeffSymbol::PosCone { m: b as u32, n: 0 }];
        }
        if a == 0 && b < 0 {
            return vec![CoeffSymbol::NegKappa { m: (-b) as u32 }];
        }
        if a < 0 && a % 2 == 0 {
            let n = -a / 2;
            let m = b - 2 * n;
            if m >= 0 {
                return vec![CoeffSymbol::PosCone { m: m as u32, n: n as u32 }];
            }
        }
        if a > 0 && a % 2 == 0 && b == -a {
            return vec![CoeffSymbol::Tau { n: a as u32 }];
        }
        Vec::new()
    }

    /// Whether the fragment has a nonzero group in grading `g`.
    pub fn group_nonzero(g: Ro2Grading) -> bool {
        !Self::symbols_at(g).is_empty()
    }

    fn validate(self) -> Self {
        match self {
            CoeffSymbol::PosCone { m: 0, n: 0 } => CoeffSymbol::One,
            CoeffSymbol::NegKappa { m } => {
                debug_assert!(m >= 1);
                self
            }
            CoeffSymbol::Tau { n } => {
                debug_assert!(n >= 2 && n % 2 == 0);
                self
            }
            s => s,
        }
    }
}

impl fmt::Display for CoeffSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoeffSymbol::One => write!(f, "1"),
            CoeffSymbol::G => write!(f, "g"),
            CoeffSymbol::PosCone { m, n } => {
                let mut parts = Vec::new();
                match m {
                    0 => {}
                    1 => parts.push("e".to_string()),
                    m => parts.push(format!("e^{m}")),
                }
                match n {
                    0 => {}
                    1 => parts.push("xi".to_string()),
                    n => parts.push(format!("xi^{n}")),
                }
                write!(f, "{}", parts.join("*"))
            }
            CoeffSymbol::NegKappa { m: 1 } => write!(f, "einv*k"),
            CoeffSymbol::NegKappa { m } => write!(f, "einv^{m}*k"),
            CoeffSymbol::Tau { n } => write!(f, "tau(-{n})"),
        }
    }
}

/// Product of two additive generators, as a list of `(symbol, multiplicity)`.
fn symbol_mul(s: CoeffSymbol, t: CoeffSymbol) -> Vec<(CoeffSymbol, i64)> {
    use CoeffSymbol::*;
    // Put the pair in a fixed order so only one half of the table is needed.
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    match (s, t) {
        (One, x) => vec![(x, 1)],
        (G, G) => vec![(G, 2)],
        (G, PosCone { m, n }) => {
            if m >= 1 {
                vec![]
            } else {
                vec![(PosCone { m: 0, n }, 2)]
            }
        }
        (G, NegKappa { .. }) => vec![],
        (G, Tau { n }) => vec![(Tau { n }, 2)],
        (PosCone { m: a, n: b }, PosCone { m: c, n: d }) => {
            vec![(PosCone { m: a + c, n: b + d }, 1)]
        }
        (PosCone { m: a, n: b }, NegKappa { m }) => {
            if b >= 1 {
                vec![]
            } else if a < m {
                vec![(NegKappa { m: m - a }, 1)]
            } else if a == m {
                vec![(One, 2), (G, -1)]
            } else {
                vec![(PosCone { m: a - m, n: 0 }, 2)]
            }
        }
        (PosCone { m: a, n: b }, Tau { n }) => {
            if a >= 1 {
                vec![]
            } else if 2 * b < n {
                vec![(Tau { n: n - 2 * b }, 1)]
            } else if 2 * b == n {
                vec![(G, 1)]
            } else {
                vec![(PosCone { m: 0, n: b - n / 2 }, 2)]
            }
        }
        (NegKappa { m }, NegKappa { m: n }) => vec![(NegKappa { m: m + n }, 2)],
        (NegKappa { .. }, Tau { .. }) => vec![],
        (Tau { n: m }, Tau { n }) => vec![(Tau { n: m + n }, 2)],
        // The pair is sorted, so the remaining combinations cannot occur.
        _ => unreachable!("unsorted symbol pair {s:?} {t:?}"),
    }
}

/// An element of the coefficient fragment: a finite integer combination of
/// [`CoeffSymbol`]s, with torsion coefficients reduced mod 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffElt {
    terms: BTreeMap<CoeffSymbol, i64>,
}

impl CoeffElt {
    pub fn symbol(s: CoeffSymbol) -> Self {
        Self::from_terms([(s, 1)])
    }

    pub fn from_terms(it: impl IntoIterator<Item = (CoeffSymbol, i64)>) -> Self {
        let mut out = CoeffElt::default();
        for (s, c) in it {
            out.add_term(s, c);
        }
        out
    }

    fn add_term(&mut self, s: CoeffSymbol, c: i64) {
        let s = s.validate();
        let entry = self.terms.entry(s).or_insert(0);
        *entry += c;
        if s.is_torsion() {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn g() -> Self {
        Self::symbol(CoeffSymbol::G)
    }

    /// `k = 2 - g`.
    pub fn kappa() -> Self {
        Self::from_terms([(CoeffSymbol::One, 2), (CoeffSymbol::G, -1)])
    }

    pub fn e_pow(m: u32) -> Self {
        Self::symbol(CoeffSymbol::PosCone { m, n: 0 })
    }

    pub fn xi_pow(n: u32) -> Self {
        Self::symbol(CoeffSymbol::PosCone { m: 0, n })
    }

    /// `e^-m k` for `m >= 1`; `m = 0` gives `k`.
    pub fn einv_kappa(m: u32) -> Self {
        if m == 0 {
            Self::kappa()
        } else {
            Self::symbol(CoeffSymbol::NegKappa { m })
        }
    }

    pub fn tau(n: u32) -> Self {
        Self::symbol(CoeffSymbol::Tau { n })
    }

    pub fn terms(&self) -> impl Iterator<Item = (CoeffSymbol, i64)> + '_ {
        self.terms.iter().map(|(s, c)| (*s, *c))
    }

    pub fn coeff_of(&self, s: CoeffSymbol) -> i64 {
        self.terms.get(&s).copied().unwrap_or(0)
    }

    /// Common grading of all terms, if the element is homogeneous and nonzero.
    pub fn grading(&self) -> Option<Ro2Grading> {
        let mut it = self.terms.keys().map(|s| s.grading());
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }
}

/// A coefficient ring for polynomials.
///
/// Implementations are commutative rings with a notion of homogeneous
/// pieces graded by RO(C2).
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Gradings of the nonzero homogeneous pieces.
    fn gradings(&self) -> Vec<Ro2Grading>;

    /// Number of additive terms, used to decide on parentheses when printing.
    fn term_count(&self) -> usize;

    /// The integer `n` if the element equals `n * 1`.
    fn as_int(&self) -> Option<i64>;

    /// Interpret the identifier `name` raised to `power` as a scalar.
    ///
    /// Returns `None` when `name` is not a scalar atom of this ring.
    fn atom(name: &str, power: i64) -> Option<std::result::Result<Self, String>>;

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for CoeffElt {
    fn zero() -> Self {
        CoeffElt::default()
    }

    fn one() -> Self {
        CoeffElt::symbol(CoeffSymbol::One)
    }

    fn from_int(n: i64) -> Self {
        CoeffElt::from_terms([(CoeffSymbol::One, n)])
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c);
        }
        out
    }

    fn neg(&self) -> Self {
        CoeffElt::from_terms(self.terms().map(|(s, c)| (s, -c)))
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = CoeffElt::default();
        for (s, c) in self.terms() {
            for (t, d) in other.terms() {
                for (u, k) in symbol_mul(s, t) {
                    out.add_term(u, c * d * k);
                }
            }
        }
        out
    }

    fn gradings(&self) -> Vec<Ro2Grading> {
        let mut v: Vec<_> = self.terms.keys().map(|s| s.grading()).collect();
        v.dedup();
        v
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn as_int(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&CoeffSymbol::One).copied(),
            _ => None,
        }
    }

    fn atom(name: &str, power: i64) -> Option<std::result::Result<Self, String>> {
        let base = if let Some(rest) = name.strip_prefix("tau(-").and_then(|r| r.strip_suffix(')')) {
            match rest.parse::<u32>() {
                Ok(n) if n >= 2 && n % 2 == 0 => CoeffElt::tau(n),
                _ => return Some(Err(format!("tau(iota^-n) needs even n >= 2, got `{name}`"))),
            }
        } else if let Some(rest) = name.strip_prefix("einv") {
            let m = match rest.strip_suffix("*k") {
                Some("") => 1,
                Some(r) => match r.strip_prefix('^').and_then(|x| x.parse::<u32>().ok()) {
                    Some(m) => m,
                    None => return Some(Err(format!("malformed `{name}`"))),
                },
                None => return Some(Err("`einv` must be followed by `*k`".into())),
            };
            CoeffElt::einv_kappa(m)
        } else {
            match name {
                "g" => CoeffElt::g(),
                "k" => CoeffElt::kappa(),
                "e" => CoeffElt::e_pow(1),
                "xi" | "x" => CoeffElt::xi_pow(1),
                _ => return None,
            }
        };
        if power < 0 {
            return Some(Err(format!("`{name}` is not invertible in the coefficient ring")));
        }
        Some(Ok(base.pow(power as u32)))
    }
}

fn write_signed_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, sym) in terms {
        let (neg, mag) = (c < 0, c.unsigned_abs());
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (sym.as_str(), mag) {
            ("1", m) => write!(f, "{m}")?,
            (s, 1) => write!(f, "{s}")?,
            (s, m) => write!(f, "{m}*{s}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for CoeffElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms().map(|(s, c)| (c, s.to_string())))
    }
}

/// Laurent polynomials in one variable over the integers, keyed by exponent.
macro_rules! laurent_scalar {
    ($name:ident, $var:literal, $grading:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            terms: BTreeMap<i64, i64>,
        }

        impl $name {
            pub fn monomial(exp: i64, coeff: i64) -> Self {
                let mut terms = BTreeMap::new();
                if coeff != 0 {
                    terms.insert(exp, coeff);
                }
                $name { terms }
            }

            pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
                self.terms.iter().map(|(e, c)| (*e, *c))
            }

            pub fn coeff_of(&self, exp: i64) -> i64 {
                self.terms.get(&exp).copied().unwrap_or(0)
            }

            fn add_term(&mut self, exp: i64, c: i64) {
                let entry = self.terms.entry(exp).or_insert(0);
                *entry += c;
                if *entry == 0 {
                    self.terms.remove(&exp);
                }
            }
        }

        impl Scalar for $name {
            fn zero() -> Self {
                $name::default()
            }

            fn one() -> Self {
                $name::monomial(0, 1)
            }

            fn from_int(n: i64) -> Self {
                $name::monomial(0, n)
            }

            fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (e, c) in other.terms() {
                    out.add_term(e, c);
                }
                out
            }

            fn neg(&self) -> Self {
                $name { terms: self.terms.iter().map(|(e, c)| (*e, -*c)).collect() }
            }

            fn mul(&self, other: &Self) -> Self {
                let mut out = $name::default();
                for (e, c) in self.terms() {
                    for (f, d) in other.terms() {
                        out.add_term(e + f, c * d);
                    }
                }
                out
            }

            fn gradings(&self) -> Vec<Ro2Grading> {
                let g: fn(i64) -> Ro2Grading = $grading;
                self.terms.keys().map(|e| g(*e)).collect()
            }

            fn term_count(&self) -> usize {
                self.terms.len()
            }

            fn as_int(&self) -> Option<i64> {
                match self.terms.len() {
                    0 => Some(0),
                    1 => self.terms.get(&0).copied(),
                    _ => None,
                }
            }

            fn atom(name: &str, power: i64) -> Option<std::result::Result<Self, String>> {
                (name == $var).then(|| Ok($name::monomial(power, 1)))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let terms = self.terms.iter().rev().map(|(e, c)| {
                    let sym = match *e {
                        0 => "1".to_string(),
                        1 => $var.to_string(),
                        e => format!("{}^{}", $var, e),
                    };
                    (*c, sym)
                });
                write_signed_terms(f, terms)
            }
        }
    };
}

laurent_scalar!(
    NoneqScalar,
    "iota",
    |e| Ro2Grading::new(-e, e),
    "Scalars `Z[iota, iota^-1]` of the nonequivariant target, `iota` in grading `sigma - 1`."
);

laurent_scalar!(
    FixedScalar,
    "e",
    |e| Ro2Grading::new(0, e),
    "Scalars `Z[e, e^-1]` of the fixed-point target, `e` in grading `sigma`."
);

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_int(n: i64) -> Self {
        n
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn gradings(&self) -> Vec<Ro2Grading> {
        if *self == 0 {
            vec![]
        } else {
            vec![Ro2Grading::ZERO]
        }
    }
    fn term_count(&self) -> usize {
        usize::from(*self != 0)
    }
    fn as_int(&self) -> Option<i64> {
        Some(*self)
    }
    fn atom(_: &str, _: i64) -> Option<std::result::Result<Self, String>> {
        None
    }
}

/// Restriction of coefficients to the trivial subgroup.
pub fn coeff_rho(x: &CoeffElt) -> NoneqScalar {
    let mut out = NoneqScalar::zero();
    for (s, c) in x.terms() {
        let img = match s {
            CoeffSymbol::One => NoneqScalar::one(),
            CoeffSymbol::G => NoneqScalar::from_int(2),
            CoeffSymbol::PosCone { m: 0, n } => NoneqScalar::monomial(2 * n as i64, 1),
            CoeffSymbol::PosCone { .. } | CoeffSymbol::NegKappa { .. } => continue,
            CoeffSymbol::Tau { n } => NoneqScalar::monomial(-(n as i64), 2),
        };
        out = out.add(&img.mul(&NoneqScalar::from_int(c)));
    }
    out
}

/// Geometric fixed points of coefficients.
pub fn coeff_phi(x: &CoeffElt) -> FixedScalar {
    let mut out = FixedScalar::zero();
    for (s, c) in x.terms() {
        let img = match s {
            CoeffSymbol::One => FixedScalar::one(),
            CoeffSymbol::PosCone { m, n: 0 } => FixedScalar::monomial(m as i64, 1),
            CoeffSymbol::NegKappa { m } => FixedScalar::monomial(-(m as i64), 2),
            CoeffSymbol::G | CoeffSymbol::PosCone { .. } | CoeffSymbol::Tau { .. } => continue,
        };
        out = out.add(&img.mul(&FixedScalar::from_int(c)));
    }
    out
}
