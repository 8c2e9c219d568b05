//! Named graph families and closed forms for their Hosoya indices.
//!
//! Labeling is deterministic: cycle vertices come first as `0..k` (edges
//! `i ~ i+1 mod k`), then attached paths in the order the variant lists them,
//! each path numbered outward from its attachment point.
//!
//! * `Lollipop(n, k)`: `C_k` with a path of `n - k` vertices at vertex 0.
//! * `L1(n, k, s, t)`: adjacent cycle vertices `u0 = 0` and `v0 = 1` carry
//!   paths of `t` and `s` vertices respectively.
//! * `L2(n, k, s, t)`: vertex 0 carries both paths (`t` first, then `s`).
//! * `L3(n, k, s, t, l)`: vertex 0 carries the path `u1..ut`, and `u_l`
//!   carries a second path of `s` vertices.
//! * `L1Max`, `L2Max`, `L3Max`: the above with `s = 2`, `t = n - k - 2`
//!   (and `l = 1` for `L3Max`).
//! * `UPrime(n) = L1(n, n-2, 1, 1)`, `UDoublePrime(n) = L1(n, n-3, 2, 1)`.
//! * `PathAttach(G, v, n, k)`: `G` with `v` identified with the `k`-th vertex
//!   of a path `v1..vn`.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::fib::{f, BigNat};
use crate::graph::{named, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Star(usize),
    Cycle(usize),
    Lollipop {
        n: usize,
        k: usize,
    },
    L1 {
        n: usize,
        k: usize,
        s: usize,
        t: usize,
    },
    L2 {
        n: usize,
        k: usize,
        s: usize,
        t: usize,
    },
    L3 {
        n: usize,
        k: usize,
        s: usize,
        t: usize,
        l: usize,
    },
    L1Max {
        n: usize,
        k: usize,
    },
    L2Max {
        n: usize,
        k: usize,
    },
    L3Max {
        n: usize,
        k: usize,
    },
    UPrime(usize),
    UDoublePrime(usize),
    PathAttach {
        base: Graph,
        v: VertexId,
        n: usize,
        k: usize,
    },
}

/// Loose parameter bag used when a family is named from the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub l: Option<usize>,
}

fn invalid(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family: family.to_owned(),
        reason: reason.into(),
    }
}

impl FamilySpec {
    /// Lowercase tag, as accepted by [`FamilySpec::from_tag`].
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Star(_) => "star",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Lollipop { .. } => "lollipop",
            FamilySpec::L1 { .. } => "l1",
            FamilySpec::L2 { .. } => "l2",
            FamilySpec::L3 { .. } => "l3",
            FamilySpec::L1Max { .. } => "l1max",
            FamilySpec::L2Max { .. } => "l2max",
            FamilySpec::L3Max { .. } => "l3max",
            FamilySpec::UPrime(_) => "uprime",
            FamilySpec::UDoublePrime(_) => "udoubleprime",
            FamilySpec::PathAttach { .. } => "pathattach",
        }
    }

    /// Builds a spec from a tag and named parameters. `pathattach` needs a
    /// base graph and is not constructible this way.
    pub fn from_tag(tag: &str, p: &FamilyParams) -> Result<FamilySpec, FamilyError> {
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| invalid(tag, format!("missing parameter {name}")));
        let spec = match tag {
            "path" => FamilySpec::Path(need(p.n, "n")?),
            "star" => FamilySpec::Star(need(p.n, "n")?),
            "cycle" => FamilySpec::Cycle(need(p.n, "n")?),
            "lollipop" => FamilySpec::Lollipop {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            "l1" | "l2" => {
                let (n, k, s, t) = (need(p.n, "n")?, need(p.k, "k")?, need(p.s, "s")?, need(p.t, "t")?);
                if tag == "l1" {
                    FamilySpec::L1 { n, k, s, t }
                } else {
                    FamilySpec::L2 { n, k, s, t }
                }
            }
            "l3" => FamilySpec::L3 {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
                s: need(p.s, "s")?,
                t: need(p.t, "t")?,
                l: need(p.l, "l")?,
            },
            "l1max" => FamilySpec::L1Max {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            "l2max" => FamilySpec::L2Max {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            "l3max" => FamilySpec::L3Max {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            "uprime" => FamilySpec::UPrime(need(p.n, "n")?),
            "udoubleprime" => FamilySpec::UDoublePrime(need(p.n, "n")?),
            "pathattach" => {
                return Err(invalid(tag, "needs a base graph; use attach_path"));
            }
            other => return Err(FamilyError::UnknownFamily(other.to_owned())),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Order of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Star(n) | FamilySpec::Cycle(n) => n,
            FamilySpec::UPrime(n) | FamilySpec::UDoublePrime(n) => n,
            FamilySpec::Lollipop { n, .. }
            | FamilySpec::L1 { n, .. }
            | FamilySpec::L2 { n, .. }
            | FamilySpec::L3 { n, .. }
            | FamilySpec::L1Max { n, .. }
            | FamilySpec::L2Max { n, .. }
            | FamilySpec::L3Max { n, .. } => n,
            FamilySpec::PathAttach { ref base, n, .. } => base.vertex_count() + n - 1,
        }
    }

    /// Girth of the built graph when it is a cyclic family.
    pub fn cycle_length(&self) -> Option<usize> {
        match *self {
            FamilySpec::Path(_) | FamilySpec::Star(_) | FamilySpec::PathAttach { .. } => None,
            FamilySpec::Cycle(n) => Some(n),
            FamilySpec::UPrime(n) => Some(n - 2),
            FamilySpec::UDoublePrime(n) => Some(n - 3),
            FamilySpec::Lollipop { k, .. }
            | FamilySpec::L1 { k, .. }
            | FamilySpec::L2 { k, .. }
            | FamilySpec::L3 { k, .. }
            | FamilySpec::L1Max { k, .. }
            | FamilySpec::L2Max { k, .. }
            | FamilySpec::L3Max { k, .. } => Some(k),
        }
    }

    /// Rewrites the derived variants in terms of `L1`/`L2`/`L3`.
    fn expanded(&self) -> FamilySpec {
        match *self {
            FamilySpec::L1Max { n, k } => FamilySpec::L1 {
                n,
                k,
                s: 2,
                t: n.wrapping_sub(k + 2),
            },
            FamilySpec::L2Max { n, k } => FamilySpec::L2 {
                n,
                k,
                s: 2,
                t: n.wrapping_sub(k + 2),
            },
            FamilySpec::L3Max { n, k } => FamilySpec::L3 {
                n,
                k,
                s: 2,
                t: n.wrapping_sub(k + 2),
                l: 1,
            },
            FamilySpec::UPrime(n) => FamilySpec::L1 {
                n,
                k: n.wrapping_sub(2),
                s: 1,
                t: 1,
            },
            FamilySpec::UDoublePrime(n) => FamilySpec::L1 {
                n,
                k: n.wrapping_sub(3),
                s: 2,
                t: 1,
            },
            _ => self.clone(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let tag = self.tag();
        match *self {
            FamilySpec::Path(n) | FamilySpec::Star(n) if n < 1 => Err(invalid(tag, "need n >= 1")),
            FamilySpec::Cycle(n) if n < 3 => Err(invalid(tag, "need n >= 3")),
            FamilySpec::Lollipop { n, k } if !(k >= 3 && k <= n) => {
                Err(invalid(tag, format!("need 3 <= k <= n, got n={n}, k={k}")))
            }
            FamilySpec::L1Max { n, k } | FamilySpec::L2Max { n, k } | FamilySpec::L3Max { n, k }
                if !(k >= 3 && k + 3 <= n) =>
            {
                Err(invalid(tag, format!("need 3 <= k <= n-3, got n={n}, k={k}")))
            }
            FamilySpec::UPrime(n) if n < 5 => Err(invalid(tag, "need n >= 5")),
            FamilySpec::UDoublePrime(n) if n < 6 => Err(invalid(tag, "need n >= 6")),
            FamilySpec::L1 { n, k, s, t } | FamilySpec::L2 { n, k, s, t } => {
                if k < 3 || s < 1 || t < 1 || s + t + k != n {
                    Err(invalid(
                        tag,
                        format!("need k >= 3, s, t >= 1, s+t+k = n; got n={n}, k={k}, s={s}, t={t}"),
                    ))
                } else {
                    Ok(())
                }
            }
            FamilySpec::L3 { n, k, s, t, l } => {
                if k < 3 || s < 1 || t < 1 || s + t + k != n || !(1..=t).contains(&l) {
                    Err(invalid(
                        tag,
                        format!(
                            "need k >= 3, s, t >= 1, s+t+k = n, 1 <= l <= t; got n={n}, k={k}, s={s}, t={t}, l={l}"
                        ),
                    ))
                } else {
                    Ok(())
                }
            }
            FamilySpec::PathAttach { ref base, v, n, k } => {
                if v >= base.vertex_count() {
                    Err(invalid(tag, format!("vertex {v} not in base graph")))
                } else if !(1 <= k && k <= n) {
                    Err(invalid(tag, format!("need 1 <= k <= n, got n={n}, k={k}")))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Constructs the graph with the documented labeling.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match self.expanded() {
            FamilySpec::Path(n) => named::path(n),
            FamilySpec::Star(n) => named::star(n),
            FamilySpec::Cycle(n) => named::cycle(n),
            FamilySpec::Lollipop { n, k } => with_paths(k, &[(0, n - k)]),
            FamilySpec::L1 { k, s, t, .. } => with_paths(k, &[(0, t), (1, s)]),
            FamilySpec::L2 { k, s, t, .. } => with_paths(k, &[(0, t), (0, s)]),
            FamilySpec::L3 { n, k, s, t, l } => {
                // u1..ut are k..k+t-1, so u_l is k + l - 1
                let mut edges = cycle_edges(k);
                edges.extend(path_edges(0, k, t));
                edges.extend(path_edges(k + l - 1, k + t, s));
                Graph::from_edge_list(n, edges).expect("valid construction")
            }
            FamilySpec::PathAttach { base, v, n, k } => attach_path(&base, v, n, k)?,
            _ => unreachable!("expanded away"),
        };
        debug_assert_eq!(g.vertex_count(), self.order());
        Ok(g)
    }

    /// Exact Hosoya index from the family's closed form.
    pub fn closed_form_z(&self) -> Result<BigNat, FamilyError> {
        self.validate()?;
        let i = |x: usize| x as i64;
        let z = match self.expanded() {
            FamilySpec::Path(n) => f(i(n) + 1),
            FamilySpec::Star(n) => BigUint::from(n),
            FamilySpec::Cycle(n) => f(i(n) - 1) + f(i(n) + 1),
            FamilySpec::Lollipop { n, k } => f(i(n) + 1) + f(i(k) - 1) * f(i(n) - i(k) + 1),
            FamilySpec::L1 { n, k, s, .. } => f(i(n) + 1) + f(i(k) - 1) * f(i(s) + 1) * f(i(n) - i(s) - i(k) + 1),
            FamilySpec::L3 { n, k, s: 2, l: 1, .. } => {
                let two = BigUint::from(2u32);
                two * f(i(n) - 1) + f(i(k) - 1) * f(i(n) - i(k) + 1) + f(i(k) + 1) * f(i(n) - i(k) - 2)
            }
            _ => return Err(FamilyError::NoClosedForm(self.to_string())),
        };
        Ok(z)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Star(n) => write!(f, "S_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Lollipop { n, k } => write!(f, "L_{{{n},{k}}}"),
            FamilySpec::L1 { n, k, s, t } => write!(f, "L1_{{{n},{k}}}({s},{t})"),
            FamilySpec::L2 { n, k, s, t } => write!(f, "L2_{{{n},{k}}}({s},{t})"),
            FamilySpec::L3 { n, k, s, t, l } => write!(f, "L3_{{{n},{k}}}({s},{t};{l})"),
            FamilySpec::L1Max { n, k } => write!(f, "L1_{{{n},{k}}}"),
            FamilySpec::L2Max { n, k } => write!(f, "L2_{{{n},{k}}}"),
            FamilySpec::L3Max { n, k } => write!(f, "L3_{{{n},{k}}}"),
            FamilySpec::UPrime(n) => write!(f, "U'_{n}"),
            FamilySpec::UDoublePrime(n) => write!(f, "U''_{n}"),
            FamilySpec::PathAttach { ref base, v, n, k } => {
                write!(f, "P({n},{k},G[{}],{v})", base.vertex_count())
            }
        }
    }
}

fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|i| (i, (i + 1) % k)).collect()
}

/// Edges of a path of `len` new vertices `first..first+len` hanging from
/// `anchor`.
fn path_edges(anchor: usize, first: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).map(move |j| (if j == 0 { anchor } else { first + j - 1 }, first + j))
}

/// `C_k` with pendant paths `(anchor, length)` added in order.
fn with_paths(k: usize, paths: &[(usize, usize)]) -> Graph {
    let mut edges = cycle_edges(k);
    let mut next = k;
    for &(anchor, len) in paths {
        edges.extend(path_edges(anchor, next, len));
        next += len;
    }
    Graph::from_edge_list(next, edges).expect("valid construction")
}

/// Identifies `v` with the `k`-th vertex of a fresh path `v1..vn`. The new
/// vertices `v1..v_{k-1}` and then `v_{k+1}..vn` are appended to `g`.
pub fn attach_path(g: &Graph, v: VertexId, n: usize, k: usize) -> Result<Graph, FamilyError> {
    if v >= g.vertex_count() {
        return Err(invalid("pathattach", format!("vertex {v} not in base graph")));
    }
    if !(1 <= k && k <= n) {
        return Err(invalid("pathattach", format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let base = g.vertex_count();
    // label of path vertex v_i, 1-based
    let label = |i: usize| -> usize {
        if i < k {
            base + i - 1
        } else if i == k {
            v
        } else {
            base + i - 2
        }
    };
    let edges = (1..n).map(|i| (label(i), label(i + 1)));
    Ok(g.extended(n - 1, edges).expect("fresh vertices keep the graph simple"))
}

/// The girth-3 graph tying with `L3Max(n, 3)`: the fork vertex carries the
/// 2-path and has exactly two more path vertices beyond it, so
/// `l = t - 2 = n - 7`. Needs `n >= 8`.
pub fn girth3_tie(n: usize) -> FamilySpec {
    FamilySpec::L3 {
        n,
        k: 3,
        s: 2,
        t: n - 5,
        l: n - 7,
    }
}

/// Every named family member of order `n` used to label enumerated graphs:
/// the cycle, all lollipops, the three maximal shapes for each admissible
/// girth, `U'`, `U''`, and the `k = 3` tie graph [`girth3_tie`].
pub fn family_catalog(n: usize) -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Cycle(n)];
    if n < 5 {
        return out;
    }
    out.extend((3..n).map(|k| FamilySpec::Lollipop { n, k }));
    for k in 3..=n - 3 {
        out.push(FamilySpec::L1Max { n, k });
    }
    for k in 3..=n - 3 {
        out.push(FamilySpec::L2Max { n, k });
    }
    for k in 3..=n - 3 {
        out.push(FamilySpec::L3Max { n, k });
    }
    out.push(FamilySpec::UPrime(n));
    if n >= 6 {
        out.push(FamilySpec::UDoublePrime(n));
    }
    if n >= 8 {
        out.push(girth3_tie(n));
    }
    out
}
