//! Arithmetic in the multiplicative group of integers modulo the prime 257.
//!
//! Only the nonzero residues are representable. They are kept in `1..=256`,
//! so `256` plays the role of `-1`. Inversion and cube roots are served from
//! tables built at compile time: the inverse table by the extended Euclidean
//! algorithm, the cube-root table by cubing every element.

use std::fmt;

/// The field modulus.
pub const P: u32 = 257;

/// Order of the multiplicative group; exponents are reduced modulo this.
pub const GROUP_ORDER: u32 = 256;

/// Exponent `d` with `3 * d == 1 (mod 256)`, so `x^d` is the cube root of `x`.
pub const CUBE_ROOT_EXPONENT: u32 = 171;

/// A nonzero residue modulo 257, stored as an integer in `1..=256`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ONE: FieldElement = FieldElement(1);
    pub const MINUS_ONE: FieldElement = FieldElement(256);

    /// Returns `None` unless `1 <= value <= 256`.
    pub const fn new(value: u16) -> Option<FieldElement> {
        if value >= 1 && value <= 256 {
            Some(FieldElement(value))
        } else {
            None
        }
    }

    /// Reduces an arbitrary integer modulo 257. Multiples of 257 have no
    /// representation and yield `None`.
    pub const fn from_residue(value: u64) -> Option<FieldElement> {
        let r = (value % P as u64) as u16;
        if r == 0 {
            None
        } else {
            Some(FieldElement(r))
        }
    }

    pub const fn value(self) -> u16 {
        self.0
    }

    /// Iterates over all 256 group elements in increasing order.
    pub fn all() -> impl DoubleEndedIterator<Item = FieldElement> + ExactSizeIterator {
        (1..=256u16).map(FieldElement)
    }

    #[inline]
    pub fn square(self) -> FieldElement {
        self * self
    }

    /// Multiplicative inverse by table lookup.
    #[inline]
    pub fn inv(self) -> FieldElement {
        FieldElement(INVERSE_TABLE[self.0 as usize])
    }

    /// Multiplicative inverse computed directly with the extended Euclidean
    /// algorithm. Used to build and validate the inverse table.
    pub const fn inv_euclid(self) -> FieldElement {
        FieldElement(euclid_inverse(self.0))
    }

    /// `self^e`. The exponent is reduced mod 256 first (Fermat), then
    /// evaluated by square-and-multiply.
    pub fn pow(self, e: u64) -> FieldElement {
        let mut e = e % GROUP_ORDER as u64;
        let mut base = self;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// The unique `a` with `a^3 == self`, by table lookup.
    #[inline]
    pub fn cube_root(self) -> FieldElement {
        FieldElement(CUBE_ROOT_TABLE[self.0 as usize])
    }

    #[inline]
    pub fn cube(self) -> FieldElement {
        self.square() * self
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn mul(self, rhs: FieldElement) -> FieldElement {
        // The product of two units mod a prime is never 0 mod 257.
        FieldElement(((self.0 as u32 * rhs.0 as u32) % P) as u16)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<FieldElement> for u16 {
    fn from(x: FieldElement) -> u16 {
        x.0
    }
}

/// Extended Euclid on (257, x); returns the coefficient of `x` normalised
/// into `1..=256`. `x` must be in `1..=256`.
const fn euclid_inverse(x: u16) -> u16 {
    let (mut old_r, mut r) = (P as i32, x as i32);
    let (mut old_t, mut t) = (0i32, 1i32);
    while r != 0 {
        let q = old_r / r;
        let next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        let next_t = old_t - q * t;
        old_t = t;
        t = next_t;
    }
    // old_r == gcd == 1 because 257 is prime
    let mut inv = old_t % P as i32;
    if inv < 0 {
        inv += P as i32;
    }
    inv as u16
}

// Index 0 is unused in both tables.
static INVERSE_TABLE: [u16; 257] = build_inverse_table();
static CUBE_ROOT_TABLE: [u16; 257] = build_cube_root_table();

const fn build_inverse_table() -> [u16; 257] {
    let mut table = [0u16; 257];
    let mut x = 1;
    while x <= 256 {
        table[x] = euclid_inverse(x as u16);
        x += 1;
    }
    table
}

const fn build_cube_root_table() -> [u16; 257] {
    let mut table = [0u16; 257];
    let mut a = 1u32;
    while a <= 256 {
        let cube = (a * a % P) * a % P;
        table[cube as usize] = a as u16;
        a += 1;
    }
    table
}

/// Checks both lookup tables against independent routes: inverses against
/// Fermat (`x^255`), cube roots against `x^171` and against cubing.
pub fn validate_tables() -> bool {
    FieldElement::all().all(|x| {
        let inv = x.inv();
        let root = x.cube_root();
        inv == x.pow(GROUP_ORDER as u64 - 1)
            && inv == x.inv_euclid()
            && x * inv == FieldElement::ONE
            && root == x.pow(CUBE_ROOT_EXPONENT as u64)
            && root.cube() == x
    })
}
