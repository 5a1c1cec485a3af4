use std::fmt;

/// Structured vertex label. Constructions name their vertices as pairs
/// `(base, tag)`, base graphs carry plain names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Plain(String),
    Pair(String, Tag),
}

/// Second coordinate of a pair label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Zero,
    One,
    /// A vertex of the attached graph `F_v`.
    Member(String),
    /// A block of a neighborhood partition, members in base index order.
    Block(Vec<String>),
    /// The base edge the subdivision vertex sits on: `(this end, other end)`.
    Edge(String, String),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Zero => write!(f, "0"),
            Tag::One => write!(f, "1"),
            Tag::Member(x) => write!(f, "{x}"),
            Tag::Block(items) => write!(f, "{{{}}}", items.join(",")),
            // single-character names concatenate as in `vu`; longer ones
            // need a separator to stay unambiguous
            Tag::Edge(a, b) if a.chars().count() == 1 && b.chars().count() == 1 => {
                write!(f, "{a}{b}")
            }
            Tag::Edge(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Plain(s) => write!(f, "{s}"),
            VertexLabel::Pair(base, tag) => write!(f, "({base},{tag})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let l = |b: &str, t| VertexLabel::Pair(b.into(), t);
        assert_eq!(l("v", Tag::Zero).to_string(), "(v,0)");
        assert_eq!(l("v", Tag::One).to_string(), "(v,1)");
        assert_eq!(l("u", Tag::Member("2".into())).to_string(), "(u,2)");
        assert_eq!(
            l("w", Tag::Block(vec!["u".into(), "v".into()])).to_string(),
            "(w,{u,v})"
        );
        assert_eq!(
            l("v", Tag::Edge("v".into(), "u".into())).to_string(),
            "(v,vu)"
        );
        assert_eq!(
            l("1", Tag::Edge("1".into(), "12".into())).to_string(),
            "(1,1-12)"
        );
        assert_eq!(VertexLabel::Plain("z".into()).to_string(), "z");
    }
}
