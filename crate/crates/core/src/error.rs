use core::fmt;

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A checked 128-bit computation left the representable range.
    Overflow(&'static str),
    /// Vertex count above 32, or an index/set outside the vertex range.
    Bounds { what: &'static str, value: usize, limit: usize },
    /// Edge list contained a pair `(i, i)`.
    Loop(usize),
    /// Malformed graph text.
    Parse(String),
    UnknownName(String),
    /// A Faddeev–LeVerrier trace was not divisible by its step index.
    InexactDivision { step: usize },
    /// The Jacobi sweep budget ran out.
    Convergence { sweeps: usize },
    /// The rank profile came from an enumeration that did not terminate.
    IncompleteProfile,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow(site) => write!(f, "128-bit overflow in {site}"),
            Error::Bounds { what, value, limit } => {
                write!(f, "{what} out of bounds: {value} (limit {limit})")
            }
            Error::Loop(v) => write!(f, "loop at vertex {v}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::UnknownName(name) => write!(f, "unknown graph name `{name}`"),
            Error::InexactDivision { step } => {
                write!(f, "internal error: inexact division at Faddeev-LeVerrier step {step}")
            }
            Error::Convergence { sweeps } => {
                write!(f, "Jacobi iteration did not converge after {sweeps} sweeps")
            }
            Error::IncompleteProfile => f.write_str("rank profile is from an incomplete enumeration"),
        }
    }
}

impl core::error::Error for Error {}
