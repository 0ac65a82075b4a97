//! Functor expression parser: compositions of the functor alphabet with
//! "∘" or "." as the composition symbol, normalized so that duality
//! conjugates collapse to their named counterparts.

use rootfunctors::blockcat::Functor;

#[derive(Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    UnknownAtom { token: String, position: usize },
    BadIndex { token: String, position: usize },
    IndexOutOfRange { index: usize, rank: usize },
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty functor expression"),
            ParseError::UnknownAtom { token, position } => {
                write!(f, "unknown functor atom {token:?} at position {position}")
            }
            ParseError::BadIndex { token, position } => {
                write!(f, "missing or malformed index in {token:?} at position {position}")
            }
            ParseError::IndexOutOfRange { index, rank } => {
                write!(f, "generator index {index} out of range for rank {rank}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Atom {
    Id,
    Dual,
    Named(Letter, usize),
}

/// Functor letters; Zh stands for the hat quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    Theta,
    T,
    G,
    C,
    K,
    Z,
    Zh,
    Q,
}

fn parse_atom(token: &str, position: usize, rank: usize) -> Result<Atom, ParseError> {
    let t = token.trim();
    if t == "ID" {
        return Ok(Atom::Id);
    }
    if t == "d" {
        return Ok(Atom::Dual);
    }
    let (name, idx) = match t.split_once('_') {
        Some((n, i)) => (n, i),
        None => {
            return Err(ParseError::UnknownAtom { token: t.to_string(), position });
        }
    };
    let index: usize = idx
        .parse()
        .map_err(|_| ParseError::BadIndex { token: t.to_string(), position })?;
    if index == 0 || index >= rank {
        return Err(ParseError::IndexOutOfRange { index, rank });
    }
    let kind = match name {
        "theta" => Letter::Theta,
        "T" => Letter::T,
        "G" => Letter::G,
        "C" => Letter::C,
        "K" => Letter::K,
        "Z" => Letter::Z,
        "Zhat" => Letter::Zh,
        "Q" => Letter::Q,
        _ => return Err(ParseError::UnknownAtom { token: t.to_string(), position }),
    };
    Ok(Atom::Named(kind, index))
}

fn dual_partner(kind: Letter) -> Option<Letter> {
    // X' = d X d for the letters with a named conjugate
    match kind {
        Letter::Theta => Some(Letter::Theta),
        Letter::T => Some(Letter::G),
        Letter::G => Some(Letter::T),
        Letter::C => Some(Letter::K),
        Letter::K => Some(Letter::C),
        Letter::Z | Letter::Zh | Letter::Q => None,
    }
}

fn atom_functor(atom: &Atom) -> Functor {
    match atom {
        Atom::Id => Functor::Id,
        Atom::Dual => Functor::Dual,
        Atom::Named(Letter::Theta, i) => Functor::Theta(*i),
        Atom::Named(Letter::T, i) => Functor::Twist(*i),
        Atom::Named(Letter::G, i) => Functor::Completion(*i),
        Atom::Named(Letter::C, i) => Functor::Shuffle(*i),
        Atom::Named(Letter::K, i) => Functor::Coshuffle(*i),
        Atom::Named(Letter::Z, i) => Functor::Zuckerman(*i),
        Atom::Named(Letter::Zh, i) => Functor::Zhat(*i),
        Atom::Named(Letter::Q, i) => Functor::JosephQ(*i),
    }
}

/// Parse a composition like "d∘T_1∘d" or "G_1.T_1"; duality conjugation
/// patterns are rewritten to the named partner so the example normalizes
/// to "G_1".
pub fn parse_functor(text: &str, rank: usize) -> Result<Functor, ParseError> {
    let cleaned = text.replace('∘', ".");
    let mut atoms = Vec::new();
    for (k, token) in cleaned.split('.').enumerate() {
        if token.trim().is_empty() {
            return Err(ParseError::UnknownAtom { token: token.to_string(), position: k });
        }
        atoms.push(parse_atom(token, k, rank)?);
    }
    if atoms.is_empty() {
        return Err(ParseError::Empty);
    }
    // normalization: drop identities, cancel double duals, rewrite d X d
    loop {
        let mut changed = false;
        // remove ID except as the sole atom
        if atoms.len() > 1 {
            if let Some(pos) = atoms.iter().position(|a| *a == Atom::Id) {
                atoms.remove(pos);
                changed = true;
            }
        }
        if !changed {
            for k in 0..atoms.len().saturating_sub(1) {
                if atoms[k] == Atom::Dual && atoms[k + 1] == Atom::Dual {
                    atoms.drain(k..=k + 1);
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            for k in 0..atoms.len().saturating_sub(2) {
                if atoms[k] == Atom::Dual && atoms[k + 2] == Atom::Dual {
                    if let Atom::Named(kind, i) = atoms[k + 1].clone() {
                        if let Some(partner) = dual_partner(kind) {
                            atoms.splice(k..=k + 2, [Atom::Named(partner, i)]);
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    if atoms.is_empty() {
        return Ok(Functor::Id);
    }
    let functors: Vec<Functor> = atoms.iter().map(atom_functor).collect();
    Ok(Functor::chain(&functors))
}

/// Canonical ASCII rendering; parsing it back yields an equal expression.
pub fn render_functor(f: &Functor) -> String {
    f.render()
}
