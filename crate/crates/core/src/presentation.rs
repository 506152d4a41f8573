//! Kan extension presentations `kan<Γ|Δ|RelB|X|F>` and the semigroup
//! presentation they determine.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::alphabet::{shortlex, Alphabet, ObjectId, Symbol, SymbolKind, SymbolNames};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    DuplicateName(String),
    ReservedName(String),
    UnknownObject(String),
    UnknownArrow(String),
    UnknownElement(String),
    UnknownSymbol(String),
    NonComposablePath(String),
    AmbiguousIdentity,
    RelationEndpointMismatch(usize),
    FunctorEndpointMismatch(String),
    MissingElements(String),
    MissingFunctorObject(String),
    MissingFunctorArrow(String),
    MissingAction(String),
    DuplicateDefinition(String),
    ActionNotTotal { arrow: String, element: String },
    ActionCodomain { arrow: String, image: String },
    MissingOrder,
    IncompleteOrder(String),
    Syntax(String),
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PresentationError::*;
        match self {
            DuplicateName(n) => write!(f, "duplicate symbol `{n}`"),
            ReservedName(n) => write!(f, "`{n}` is reserved and cannot name a symbol"),
            UnknownObject(n) => write!(f, "unknown object `{n}`"),
            UnknownArrow(n) => write!(f, "unknown arrow `{n}`"),
            UnknownElement(n) => write!(f, "unknown element `{n}`"),
            UnknownSymbol(n) => write!(f, "unknown symbol `{n}`"),
            NonComposablePath(p) => write!(f, "non-composable path `{p}`"),
            AmbiguousIdentity => write!(f, "identity path needs an object: write id_<Object>"),
            RelationEndpointMismatch(i) => {
                write!(f, "relation {} has sides with different endpoints", i + 1)
            }
            FunctorEndpointMismatch(a) => write!(f, "F-image path endpoint mismatch for `{a}`"),
            MissingElements(a) => write!(f, "no element set X given for object `{a}`"),
            MissingFunctorObject(a) => write!(f, "no F image given for object `{a}`"),
            MissingFunctorArrow(a) => write!(f, "no F image given for arrow `{a}`"),
            MissingAction(a) => write!(f, "no X action given for arrow `{a}`"),
            DuplicateDefinition(what) => write!(f, "`{what}` is defined twice"),
            ActionNotTotal { arrow, element } => {
                write!(
                    f,
                    "X `{arrow}` does not map element `{element}` exactly once"
                )
            }
            ActionCodomain { arrow, image } => {
                write!(
                    f,
                    "X `{arrow}` maps into `{image}`, which is not in its target set"
                )
            }
            MissingOrder => write!(f, "missing alphabet order"),
            IncompleteOrder(n) => write!(f, "alphabet order does not list `{n}` exactly once"),
            Syntax(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for PresentationError {}

/// Presentation data by name, before validation. The file parser produces
/// this and [`KanPresentation::from_raw`] checks it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPresentation {
    pub gamma: RawGraph,
    pub delta: RawGraph,
    pub relations: Vec<(RawPath, RawPath)>,
    /// `X A : x1 x2 ...` per object of `Γ`.
    pub elements: Vec<(String, Vec<String>)>,
    /// `X a : x -> y ; ...` per arrow of `Γ`.
    pub actions: Vec<(String, Vec<(String, String)>)>,
    pub functor_objects: Vec<(String, String)>,
    pub functor_arrows: Vec<(String, RawPath)>,
    pub order: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGraph {
    pub objects: Vec<String>,
    pub arrows: Vec<RawArrow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawArrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// A path by name. An empty `arrows` list is an identity; `start` is only
/// required when context cannot supply it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPath {
    pub start: Option<String>,
    pub arrows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphArrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub objects: Vec<String>,
    pub arrows: Vec<GraphArrow>,
}

impl Graph {
    fn from_raw(raw: &RawGraph) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for name in raw.objects.iter().chain(raw.arrows.iter().map(|a| &a.name)) {
            if !seen.insert(name.as_str()) {
                return Err(PresentationError::DuplicateName(name.clone()));
            }
        }
        let index = |name: &str| {
            raw.objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| PresentationError::UnknownObject(name.to_string()))
        };
        let arrows = raw
            .arrows
            .iter()
            .map(|a| {
                Ok(GraphArrow {
                    name: a.name.clone(),
                    src: index(&a.src)?,
                    tgt: index(&a.tgt)?,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Graph {
            objects: raw.objects.clone(),
            arrows,
        })
    }

    fn to_raw(&self) -> RawGraph {
        RawGraph {
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    name: a.name.clone(),
                    src: self.objects[a.src].clone(),
                    tgt: self.objects[a.tgt].clone(),
                })
                .collect(),
        }
    }

    fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
}

/// An arrow of the free category on `Δ`: a composable sequence of arrows
/// from `start`. The empty sequence is `id_start`.
///
/// Ordered shortlex on the arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub(crate) start: ObjectId,
    pub(crate) arrows: Vec<Symbol>,
}

impl Path {
    pub fn identity(start: ObjectId) -> Self {
        Path {
            start,
            arrows: Vec::new(),
        }
    }

    /// `None` unless `arrows` is a composable sequence of arrows from `start`.
    pub fn new(alphabet: &Alphabet, start: ObjectId, arrows: Vec<Symbol>) -> Option<Self> {
        alphabet.walk(start, &arrows)?;
        Some(Path { start, arrows })
    }

    pub fn start(&self) -> ObjectId {
        self.start
    }

    pub fn arrows(&self) -> &[Symbol] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, alphabet: &Alphabet) -> ObjectId {
        match self.arrows.last() {
            Some(&a) => alphabet.arrow_ends(a).expect("path over arrows").1,
            None => self.start,
        }
    }

    /// `self` followed by `other`; the caller guarantees composability.
    pub fn then(&self, other: &[Symbol]) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(other);
        Path {
            start: self.start,
            arrows,
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PathDisplay {
            path: self,
            alphabet,
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.arrows, &other.arrows).then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct PathDisplay<'a> {
    path: &'a Path,
    alphabet: &'a Alphabet,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_identity() {
            write!(f, "id_{}", self.alphabet.object_name(self.path.start))
        } else {
            f.write_str(&self.alphabet.format_word(&self.path.arrows))
        }
    }
}

/// A validated presentation. Declaration order of every component is kept
/// so that printing and re-parsing gives back an equal value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KanPresentation {
    gamma: Graph,
    delta: Graph,
    relations: Vec<(Path, Path)>,
    /// Per object of `Γ`, its elements in declaration order.
    elements: Vec<Vec<Symbol>>,
    /// Per arrow `a` of `Γ`, the images `x·a` parallel to `elements[src(a)]`.
    actions: Vec<Vec<Symbol>>,
    functor_objects: Vec<ObjectId>,
    functor_arrows: Vec<Path>,
    alphabet: Alphabet,
}

fn is_reserved(name: &str) -> bool {
    name == "id" || name.starts_with("id_") || name == "0"
}

impl KanPresentation {
    pub fn from_raw(raw: &RawPresentation) -> Result<Self, PresentationError> {
        use PresentationError as E;

        let gamma = Graph::from_raw(&raw.gamma)?;
        let delta = Graph::from_raw(&raw.delta)?;

        // Every name that will be a letter of Σ, plus Δ's objects, must be
        // distinct so that words and state labels read unambiguously.
        let mut taken: BTreeSet<&str> = BTreeSet::new();
        for name in delta
            .objects
            .iter()
            .chain(delta.arrows.iter().map(|a| &a.name))
        {
            if is_reserved(name) {
                return Err(E::ReservedName(name.clone()));
            }
            taken.insert(name);
        }

        let mut elements_by_object: Vec<Option<&Vec<String>>> =
            alloc::vec![None; gamma.objects.len()];
        for (object, names) in &raw.elements {
            let a = gamma
                .object_index(object)
                .ok_or_else(|| E::UnknownObject(object.clone()))?;
            if elements_by_object[a].is_some() {
                return Err(E::DuplicateDefinition(format!("X {object}")));
            }
            for name in names {
                if is_reserved(name) {
                    return Err(E::ReservedName(name.clone()));
                }
                if !taken.insert(name) {
                    return Err(E::DuplicateName(name.clone()));
                }
            }
            elements_by_object[a] = Some(names);
        }
        let elements_by_object = elements_by_object
            .into_iter()
            .enumerate()
            .map(|(a, names)| names.ok_or_else(|| E::MissingElements(gamma.objects[a].clone())))
            .collect::<Result<Vec<_>, _>>()?;

        let mut functor_objects: Vec<Option<ObjectId>> = alloc::vec![None; gamma.objects.len()];
        for (object, image) in &raw.functor_objects {
            let a = gamma
                .object_index(object)
                .ok_or_else(|| E::UnknownObject(object.clone()))?;
            let b = delta
                .object_index(image)
                .ok_or_else(|| E::UnknownObject(image.clone()))?;
            if functor_objects[a].replace(ObjectId(b as u32)).is_some() {
                return Err(E::DuplicateDefinition(format!("F {object}")));
            }
        }
        let functor_objects = functor_objects
            .into_iter()
            .enumerate()
            .map(|(a, b)| b.ok_or_else(|| E::MissingFunctorObject(gamma.objects[a].clone())))
            .collect::<Result<Vec<_>, _>>()?;

        let order = raw.order.as_ref().ok_or(E::MissingOrder)?;
        let mut kinds: BTreeMap<&str, SymbolKind> = BTreeMap::new();
        for (home, names) in elements_by_object.iter().enumerate() {
            for name in names.iter() {
                kinds.insert(
                    name,
                    SymbolKind::Element {
                        home,
                        base: functor_objects[home],
                    },
                );
            }
        }
        for arrow in &delta.arrows {
            kinds.insert(
                &arrow.name,
                SymbolKind::Arrow {
                    src: ObjectId(arrow.src as u32),
                    tgt: ObjectId(arrow.tgt as u32),
                },
            );
        }
        let mut symbols = Vec::with_capacity(order.len());
        for name in order {
            match kinds.remove(name.as_str()) {
                Some(kind) => symbols.push((name.clone(), kind)),
                None if symbols.iter().any(|(n, _)| n == name) => {
                    return Err(E::IncompleteOrder(name.clone()))
                }
                None => return Err(E::UnknownSymbol(name.clone())),
            }
        }
        if let Some((&missing, _)) = kinds.iter().next() {
            return Err(E::IncompleteOrder(missing.to_string()));
        }
        let alphabet = Alphabet::new(delta.objects.clone(), symbols);

        let elements: Vec<Vec<Symbol>> = elements_by_object
            .iter()
            .map(|names| {
                names
                    .iter()
                    .map(|n| {
                        alphabet
                            .lookup_symbol(n)
                            .expect("element is in the alphabet")
                    })
                    .collect()
            })
            .collect();

        let mut relations = Vec::with_capacity(raw.relations.len());
        for (i, (l, r)) in raw.relations.iter().enumerate() {
            let (l, r) = match (
                resolve_path(&alphabet, l, None),
                resolve_path(&alphabet, r, None),
            ) {
                (Ok(l), Ok(r)) => (l, r),
                (Ok(l), Err(E::AmbiguousIdentity)) => {
                    let r = resolve_path(&alphabet, r, Some(l.start))?;
                    (l, r)
                }
                (Err(E::AmbiguousIdentity), Ok(r)) => {
                    let l = resolve_path(&alphabet, l, Some(r.start))?;
                    (l, r)
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            if l.start != r.start || l.target(&alphabet) != r.target(&alphabet) {
                return Err(E::RelationEndpointMismatch(i));
            }
            relations.push((l, r));
        }

        let mut functor_arrows: Vec<Option<Path>> = alloc::vec![None; gamma.arrows.len()];
        for (arrow, raw_path) in &raw.functor_arrows {
            let a = gamma
                .arrow_index(arrow)
                .ok_or_else(|| E::UnknownArrow(arrow.clone()))?;
            let src = functor_objects[gamma.arrows[a].src];
            let tgt = functor_objects[gamma.arrows[a].tgt];
            let path = resolve_path(&alphabet, raw_path, Some(src))?;
            if path.start != src || path.target(&alphabet) != tgt {
                return Err(E::FunctorEndpointMismatch(arrow.clone()));
            }
            if functor_arrows[a].replace(path).is_some() {
                return Err(E::DuplicateDefinition(format!("F {arrow}")));
            }
        }
        let functor_arrows = functor_arrows
            .into_iter()
            .enumerate()
            .map(|(a, p)| p.ok_or_else(|| E::MissingFunctorArrow(gamma.arrows[a].name.clone())))
            .collect::<Result<Vec<_>, _>>()?;

        let mut actions: Vec<Option<Vec<Symbol>>> = alloc::vec![None; gamma.arrows.len()];
        for (arrow, pairs) in &raw.actions {
            let a = gamma
                .arrow_index(arrow)
                .ok_or_else(|| E::UnknownArrow(arrow.clone()))?;
            let domain = &elements[gamma.arrows[a].src];
            let codomain = &elements[gamma.arrows[a].tgt];
            let mut images: Vec<Option<Symbol>> = alloc::vec![None; domain.len()];
            for (x, y) in pairs {
                let xs = alphabet
                    .lookup_symbol(x)
                    .filter(|s| alphabet.is_element(*s))
                    .ok_or_else(|| E::UnknownElement(x.clone()))?;
                let ys = alphabet
                    .lookup_symbol(y)
                    .filter(|s| alphabet.is_element(*s))
                    .ok_or_else(|| E::UnknownElement(y.clone()))?;
                let slot =
                    domain
                        .iter()
                        .position(|&d| d == xs)
                        .ok_or_else(|| E::ActionNotTotal {
                            arrow: arrow.clone(),
                            element: x.clone(),
                        })?;
                if !codomain.contains(&ys) {
                    return Err(E::ActionCodomain {
                        arrow: arrow.clone(),
                        image: y.clone(),
                    });
                }
                if images[slot].replace(ys).is_some() {
                    return Err(E::ActionNotTotal {
                        arrow: arrow.clone(),
                        element: x.clone(),
                    });
                }
            }
            let images = images
                .into_iter()
                .zip(domain)
                .map(|(img, &x)| {
                    img.ok_or_else(|| E::ActionNotTotal {
                        arrow: arrow.clone(),
                        element: alphabet.symbol_name(x).to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if actions[a].replace(images).is_some() {
                return Err(E::DuplicateDefinition(format!("X {arrow}")));
            }
        }
        let actions = actions
            .into_iter()
            .enumerate()
            .map(|(a, m)| m.ok_or_else(|| E::MissingAction(gamma.arrows[a].name.clone())))
            .collect::<Result<Vec<_>, _>>()?;

        Ok(KanPresentation {
            gamma,
            delta,
            relations,
            elements,
            actions,
            functor_objects,
            functor_arrows,
            alphabet,
        })
    }

    /// Inverse of [`from_raw`](Self::from_raw) up to the context-supplied
    /// identity starts, which are always written out.
    pub fn to_raw(&self) -> RawPresentation {
        let name = |s: Symbol| self.alphabet.symbol_name(s).to_string();
        let raw_path = |p: &Path| RawPath {
            start: p
                .is_identity()
                .then(|| self.alphabet.object_name(p.start).to_string()),
            arrows: p.arrows.iter().map(|&s| name(s)).collect(),
        };
        RawPresentation {
            gamma: self.gamma.to_raw(),
            delta: self.delta.to_raw(),
            relations: self
                .relations
                .iter()
                .map(|(l, r)| (raw_path(l), raw_path(r)))
                .collect(),
            elements: self
                .gamma
                .objects
                .iter()
                .zip(&self.elements)
                .map(|(a, xs)| (a.clone(), xs.iter().map(|&x| name(x)).collect()))
                .collect(),
            actions: self
                .gamma
                .arrows
                .iter()
                .zip(&self.actions)
                .map(|(a, images)| {
                    let pairs = self.elements[a.src]
                        .iter()
                        .zip(images)
                        .map(|(&x, &y)| (name(x), name(y)))
                        .collect();
                    (a.name.clone(), pairs)
                })
                .collect(),
            functor_objects: self
                .gamma
                .objects
                .iter()
                .zip(&self.functor_objects)
                .map(|(a, &b)| (a.clone(), self.alphabet.object_name(b).to_string()))
                .collect(),
            functor_arrows: self
                .gamma
                .arrows
                .iter()
                .zip(&self.functor_arrows)
                .map(|(a, p)| (a.name.clone(), raw_path(p)))
                .collect(),
            order: Some(self.alphabet.names().to_vec()),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn gamma(&self) -> &Graph {
        &self.gamma
    }

    pub fn delta(&self) -> &Graph {
        &self.delta
    }

    pub fn relations(&self) -> &[(Path, Path)] {
        &self.relations
    }

    /// Elements of `XA` for the `Γ`-object with index `object`.
    pub fn elements_of(&self, object: usize) -> &[Symbol] {
        &self.elements[object]
    }

    pub fn element_count(&self) -> usize {
        self.elements.iter().map(Vec::len).sum()
    }

    /// `F(A)` for the `Γ`-object with index `object`.
    pub fn functor_object(&self, object: usize) -> ObjectId {
        self.functor_objects[object]
    }

    /// `F(a)` for the `Γ`-arrow with index `arrow`.
    pub fn functor_arrow(&self, arrow: usize) -> &Path {
        &self.functor_arrows[arrow]
    }

    /// `x·a` for the `Γ`-arrow with index `arrow`; `None` if `x` is not in
    /// the arrow's source set.
    pub fn act_on_element(&self, arrow: usize, x: Symbol) -> Option<Symbol> {
        let src = self.gamma.arrows[arrow].src;
        let slot = self.elements[src].iter().position(|&e| e == x)?;
        Some(self.actions[arrow][slot])
    }

    /// Arrows of `Δ` as symbols, in declaration order.
    pub fn delta_arrows(&self) -> Vec<Symbol> {
        self.delta
            .arrows
            .iter()
            .map(|a| {
                self.alphabet
                    .lookup_symbol(&a.name)
                    .expect("Δ arrow is a symbol")
            })
            .collect()
    }

    /// Parses `b1 b2`, `id` or `id_B`. A bare `id` takes its object from
    /// `context`.
    pub fn parse_path(
        &self,
        text: &str,
        context: Option<ObjectId>,
    ) -> Result<Path, PresentationError> {
        let raw = parse_raw_path(text)?;
        resolve_path(&self.alphabet, &raw, context)
    }

    pub fn semigroup_presentation(&self) -> SemigroupPresentation {
        SemigroupPresentation::of(self)
    }
}

/// Splits path text into a [`RawPath`] without resolving names.
pub fn parse_raw_path(text: &str) -> Result<RawPath, PresentationError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [] => Err(PresentationError::Syntax("empty path".to_string())),
        ["id"] => Ok(RawPath::default()),
        [single] if single.starts_with("id_") => Ok(RawPath {
            start: Some(single["id_".len()..].to_string()),
            arrows: Vec::new(),
        }),
        _ => {
            if let Some(bad) = tokens.iter().find(|t| **t == "id" || t.starts_with("id_")) {
                return Err(PresentationError::Syntax(format!(
                    "`{bad}` cannot appear inside a non-identity path"
                )));
            }
            Ok(RawPath {
                start: None,
                arrows: tokens.iter().map(|t| t.to_string()).collect(),
            })
        }
    }
}

fn resolve_path(
    alphabet: &Alphabet,
    raw: &RawPath,
    context: Option<ObjectId>,
) -> Result<Path, PresentationError> {
    let declared = match &raw.start {
        Some(name) => Some(
            alphabet
                .lookup_object(name)
                .ok_or_else(|| PresentationError::UnknownObject(name.clone()))?,
        ),
        None => None,
    };
    let arrows = raw
        .arrows
        .iter()
        .map(|n| {
            alphabet
                .lookup_symbol(n)
                .filter(|&s| alphabet.is_arrow(s))
                .ok_or_else(|| PresentationError::UnknownArrow(n.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let start = match arrows.first() {
        Some(&first) => alphabet.arrow_ends(first).expect("arrow").0,
        None => declared
            .or(context)
            .ok_or(PresentationError::AmbiguousIdentity)?,
    };
    if declared.is_some_and(|d| d != start) {
        return Err(PresentationError::NonComposablePath(raw.arrows.join(" ")));
    }
    Path::new(alphabet, start, arrows)
        .ok_or_else(|| PresentationError::NonComposablePath(raw.arrows.join(" ")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Zero,
    Symbol(Symbol),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `0u = u0 = 0`
    ZeroAbsorbs,
    /// `ux = 0` for an element `x`
    ElementNotFirst,
    /// `xb = 0` when `src(b) ≠ FA`
    ElementArrowMismatch,
    /// `b1 b2 = 0` when not composable
    ArrowsMismatch,
    /// `x F(a) = x·a`
    Action,
    /// `l = r` from `RelB`
    Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupRelation {
    pub family: RelationFamily,
    pub lhs: Vec<Generator>,
    /// Empty only for a relation of `RelB` whose side is an identity.
    pub rhs: Vec<Generator>,
}

/// The semigroup with zero whose non-zero elements are the classes of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupPresentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<SemigroupRelation>,
}

impl SemigroupPresentation {
    fn of(p: &KanPresentation) -> Self {
        use Generator::{Symbol as S, Zero};
        use RelationFamily::*;

        let alphabet = p.alphabet();
        let generators: Vec<Generator> = core::iter::once(Zero)
            .chain(alphabet.symbols().map(S))
            .collect();
        let mut relations = Vec::new();
        let mut seen = BTreeSet::new();
        let mut push = |family, lhs: Vec<Generator>, rhs: Vec<Generator>| {
            if seen.insert((lhs.clone(), rhs.clone())) {
                relations.push(SemigroupRelation { family, lhs, rhs });
            }
        };

        for &u in &generators {
            push(ZeroAbsorbs, alloc::vec![Zero, u], alloc::vec![Zero]);
            push(ZeroAbsorbs, alloc::vec![u, Zero], alloc::vec![Zero]);
        }
        for &u in &generators {
            for x in alphabet.elements() {
                push(ElementNotFirst, alloc::vec![u, S(x)], alloc::vec![Zero]);
            }
        }
        for x in alphabet.elements() {
            let base = alphabet.element_base(x).expect("element");
            for b in alphabet.arrows() {
                if alphabet.arrow_ends(b).expect("arrow").0 != base {
                    push(
                        ElementArrowMismatch,
                        alloc::vec![S(x), S(b)],
                        alloc::vec![Zero],
                    );
                }
            }
        }
        for b1 in alphabet.arrows() {
            for b2 in alphabet.arrows() {
                if alphabet.arrow_ends(b2).expect("arrow").0
                    != alphabet.arrow_ends(b1).expect("arrow").1
                {
                    push(ArrowsMismatch, alloc::vec![S(b1), S(b2)], alloc::vec![Zero]);
                }
            }
        }
        for (a, arrow) in p.gamma().arrows.iter().enumerate() {
            let image = p.functor_arrow(a);
            for &x in p.elements_of(arrow.src) {
                let mut lhs = alloc::vec![S(x)];
                lhs.extend(image.arrows().iter().map(|&b| S(b)));
                let y = p.act_on_element(a, x).expect("total action");
                push(Action, lhs, alloc::vec![S(y)]);
            }
        }
        for (l, r) in p.relations() {
            push(
                Relation,
                l.arrows().iter().map(|&b| S(b)).collect(),
                r.arrows().iter().map(|&b| S(b)).collect(),
            );
        }

        SemigroupPresentation {
            generators,
            relations,
        }
    }

    pub fn family(&self, family: RelationFamily) -> impl Iterator<Item = &SemigroupRelation> {
        self.relations.iter().filter(move |r| r.family == family)
    }
}
