//! Symbols of `Σ = (⊔XA) ⊔ ArrΔ` and the objects of `Δ`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A letter of `Σ`. The numeric value is the position in the alphabet
/// order, so the derived `Ord` is the alphabet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An object of `Δ`, by declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub u32);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    /// An element of `XA`; `base` is `F(A)`.
    Element { home: usize, base: ObjectId },
    /// An arrow of `Δ`.
    Arrow { src: ObjectId, tgt: ObjectId },
}

/// Resolves symbols to and from their printed names.
pub trait SymbolNames {
    fn symbol_name(&self, symbol: Symbol) -> &str;
    fn lookup_symbol(&self, name: &str) -> Option<Symbol>;
}

impl SymbolNames for [String] {
    fn symbol_name(&self, symbol: Symbol) -> &str {
        &self[symbol.index()]
    }

    fn lookup_symbol(&self, name: &str) -> Option<Symbol> {
        self.iter()
            .position(|n| n == name)
            .map(|i| Symbol(i as u32))
    }
}

impl SymbolNames for Vec<String> {
    fn symbol_name(&self, symbol: Symbol) -> &str {
        self.as_slice().symbol_name(symbol)
    }

    fn lookup_symbol(&self, name: &str) -> Option<Symbol> {
        self.as_slice().lookup_symbol(name)
    }
}

/// The ordered alphabet of a presentation together with the objects of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    kinds: Vec<SymbolKind>,
    by_name: BTreeMap<String, Symbol>,
    objects: Vec<String>,
}

impl Alphabet {
    /// `symbols` must already be in alphabet order.
    pub fn new(objects: Vec<String>, symbols: Vec<(String, SymbolKind)>) -> Self {
        let mut names = Vec::with_capacity(symbols.len());
        let mut kinds = Vec::with_capacity(symbols.len());
        let mut by_name = BTreeMap::new();
        for (i, (name, kind)) in symbols.into_iter().enumerate() {
            by_name.insert(name.clone(), Symbol(i as u32));
            names.push(name);
            kinds.push(kind);
        }
        Alphabet {
            names,
            kinds,
            by_name,
            objects,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u32))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self, symbol: Symbol) -> SymbolKind {
        self.kinds[symbol.index()]
    }

    pub fn is_element(&self, symbol: Symbol) -> bool {
        matches!(self.kind(symbol), SymbolKind::Element { .. })
    }

    pub fn is_arrow(&self, symbol: Symbol) -> bool {
        matches!(self.kind(symbol), SymbolKind::Arrow { .. })
    }

    /// `F(A)` for an element of `XA`.
    pub fn element_base(&self, symbol: Symbol) -> Option<ObjectId> {
        match self.kind(symbol) {
            SymbolKind::Element { base, .. } => Some(base),
            SymbolKind::Arrow { .. } => None,
        }
    }

    pub fn arrow_ends(&self, symbol: Symbol) -> Option<(ObjectId, ObjectId)> {
        match self.kind(symbol) {
            SymbolKind::Arrow { src, tgt } => Some((src, tgt)),
            SymbolKind::Element { .. } => None,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols().filter(|&s| self.is_element(s))
    }

    pub fn arrows(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols().filter(|&s| self.is_arrow(s))
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> + '_ {
        (0..self.objects.len()).map(|i| ObjectId(i as u32))
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, object: ObjectId) -> &str {
        &self.objects[object.index()]
    }

    pub fn lookup_object(&self, name: &str) -> Option<ObjectId> {
        self.objects
            .iter()
            .position(|n| n == name)
            .map(|i| ObjectId(i as u32))
    }

    /// Follows `arrows` from `start`; `None` if any step does not compose
    /// or a symbol is not an arrow.
    pub fn walk(&self, start: ObjectId, arrows: &[Symbol]) -> Option<ObjectId> {
        let mut at = start;
        for &a in arrows {
            let (src, tgt) = self.arrow_ends(a)?;
            if src != at {
                return None;
            }
            at = tgt;
        }
        Some(at)
    }

    /// Target object of a flattened term, or `None` if the string is not in `T`.
    pub fn term_target(&self, word: &[Symbol]) -> Option<ObjectId> {
        let (&first, rest) = word.split_first()?;
        self.walk(self.element_base(first)?, rest)
    }

    /// Space-separated names.
    pub fn format_word(&self, word: &[Symbol]) -> String {
        let mut out = String::new();
        for (i, &s) in word.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.symbol_name(s));
        }
        out
    }
}

impl SymbolNames for Alphabet {
    fn symbol_name(&self, symbol: Symbol) -> &str {
        &self.names[symbol.index()]
    }

    fn lookup_symbol(&self, name: &str) -> Option<Symbol> {
        self.by_name.get(name).copied()
    }
}

/// Shorter strings first; equal lengths compare letter by letter in the
/// alphabet order.
pub fn shortlex(a: &[Symbol], b: &[Symbol]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortlex_length_dominates() {
        let long = [Symbol(0), Symbol(0), Symbol(0)];
        let short = [Symbol(9)];
        assert_eq!(shortlex(&long, &short), Ordering::Greater);
        assert_eq!(shortlex(&short, &short), Ordering::Equal);
        assert_eq!(
            shortlex(&[Symbol(1), Symbol(2)], &[Symbol(2), Symbol(0)]),
            Ordering::Less
        );
    }
}
