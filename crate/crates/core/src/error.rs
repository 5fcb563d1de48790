use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vector or basis had the wrong length or ambient dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// The action matrix is not `n × n`.
    ActionShape { n: usize, rows: usize, cols: usize },
    /// The action matrix does not square to the identity.
    NotInvolution,
    /// A change-of-basis matrix has no inverse.
    Singular,
    /// An image sequence is not a permutation of `{1, 2, 3}`.
    NotPermutation([u8; 3]),
    /// A result that must be integral has a fractional coordinate.
    NotIntegral,
    /// The two independent white-product routes disagreed.
    CrossCheckFailed,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ActionShape { n, rows, cols } => {
                write!(f, "action matrix must be {n}x{n}, got {rows}x{cols}")
            }
            Error::NotInvolution => f.write_str("S2 action matrix does not square to the identity"),
            Error::Singular => f.write_str("change-of-basis matrix is singular"),
            Error::NotPermutation(img) => {
                write!(f, "{img:?} is not a permutation of {{1, 2, 3}}")
            }
            Error::NotIntegral => f.write_str("result has non-integer coordinates"),
            Error::CrossCheckFailed => {
                f.write_str("intersection and kernel routes of the white product disagree")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
