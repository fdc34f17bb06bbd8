use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A symbolic variable.
///
/// `Kappa(0, 0)` is the scalar propagator of the one-label theory; with
/// labels, indices are 1-based and stored with `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// Vertex symbol F_g^{(v_1,...,v_N)}.
    Vertex {
        genus: u32,
        valence: Vec<u32>,
    },
    Kappa(u32, u32),
    CoordI(u32),
    CoordT,
    CoordC,
    CoordTBar(u32),
    CoordTee(u32),
    FreeEnergy(u32),
    Named(String, u32),
}

impl Atom {
    pub fn vertex(genus: u32, valence: &[u32]) -> Atom {
        Atom::Vertex { genus, valence: valence.to_vec() }
    }

    /// F_g^{(n)} in the one-label theory.
    pub fn f(genus: u32, n: u32) -> Atom {
        Atom::Vertex { genus, valence: vec![n] }
    }

    pub fn kappa(i: u32, j: u32) -> Atom {
        Atom::Kappa(i.min(j), i.max(j))
    }

    pub fn scalar_kappa() -> Atom {
        Atom::Kappa(0, 0)
    }

    pub fn named(tag: &str, index: u32) -> Atom {
        Atom::Named(tag.to_string(), index)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Vertex { genus, valence } => {
                let v: Vec<String> = valence.iter().map(|x| x.to_string()).collect();
                write!(f, "F[g={},v=({})]", genus, v.join(","))
            }
            Atom::Kappa(0, 0) => write!(f, "kappa"),
            Atom::Kappa(i, j) => write!(f, "kappa[{},{}]", i, j),
            Atom::CoordI(k) => write!(f, "I[{}]", k),
            Atom::CoordT => write!(f, "T"),
            Atom::CoordC => write!(f, "c"),
            Atom::CoordTBar(i) => write!(f, "tbar[{}]", i),
            Atom::CoordTee(i) => write!(f, "t[{}]", i),
            Atom::FreeEnergy(g) => write!(f, "Fg[{}]", g),
            Atom::Named(tag, i) => write!(f, "{}[{}]", tag, i),
        }
    }
}

fn parse_u32(s: &str, whole: &str) -> Result<u32, Error> {
    s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad index in atom `{}`", whole)))
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Atom, Error> {
        let s = s.trim();
        match s {
            "kappa" => return Ok(Atom::scalar_kappa()),
            "T" => return Ok(Atom::CoordT),
            "c" => return Ok(Atom::CoordC),
            _ => {}
        }
        let open = s.find('[').ok_or_else(|| Error::Parse(format!("unknown atom `{}`", s)))?;
        if !s.ends_with(']') {
            return Err(Error::Parse(format!("unterminated atom `{}`", s)));
        }
        let head = &s[..open];
        let body = &s[open + 1..s.len() - 1];
        match head {
            "F" => {
                let rest = body.strip_prefix("g=").ok_or_else(|| Error::Parse(format!("bad vertex atom `{}`", s)))?;
                let (g, v) = rest.split_once(",v=(").ok_or_else(|| Error::Parse(format!("bad vertex atom `{}`", s)))?;
                let v = v.strip_suffix(')').ok_or_else(|| Error::Parse(format!("bad vertex atom `{}`", s)))?;
                let valence = v.split(',').map(|x| parse_u32(x, s)).collect::<Result<Vec<_>, _>>()?;
                Ok(Atom::Vertex { genus: parse_u32(g, s)?, valence })
            }
            "kappa" => {
                let (i, j) = body.split_once(',').ok_or_else(|| Error::Parse(format!("bad kappa atom `{}`", s)))?;
                Ok(Atom::kappa(parse_u32(i, s)?, parse_u32(j, s)?))
            }
            "I" => Ok(Atom::CoordI(parse_u32(body, s)?)),
            "tbar" => Ok(Atom::CoordTBar(parse_u32(body, s)?)),
            "t" => Ok(Atom::CoordTee(parse_u32(body, s)?)),
            "Fg" => Ok(Atom::FreeEnergy(parse_u32(body, s)?)),
            tag if !tag.is_empty() && tag.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') => {
                Ok(Atom::Named(tag.to_string(), parse_u32(body, s)?))
            }
            _ => Err(Error::Parse(format!("unknown atom `{}`", s))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        let atoms = [
            Atom::f(0, 3),
            Atom::vertex(1, &[1, 0]),
            Atom::scalar_kappa(),
            Atom::kappa(2, 1),
            Atom::CoordI(2),
            Atom::CoordT,
            Atom::CoordC,
            Atom::CoordTBar(0),
            Atom::CoordTee(4),
            Atom::FreeEnergy(2),
            Atom::named("hbar", 0),
        ];
        for a in atoms {
            let text = a.to_string();
            assert_eq!(text.parse::<Atom>().unwrap(), a, "{}", text);
        }
        assert_eq!(Atom::f(0, 3).to_string(), "F[g=0,v=(3)]");
        assert_eq!(Atom::kappa(2, 1).to_string(), "kappa[1,2]");
    }
}
