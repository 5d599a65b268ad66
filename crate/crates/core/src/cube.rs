//! Faces of the 0–1 d-cube as ternary words over `{0, 1, *}`.
//!
//! A word of length d fixes some coordinates and leaves the rest free; the
//! dimension of the face it names is the number of free letters. Vertices
//! are words with no free letter and are identified with integers by
//! reading the word as a binary numeral (first letter most significant),
//! which is also the vertex id used in the complexes built here.
//!
//! Words compare with `0 < 1 < *` per letter, so "lexicographic order"
//! below always means that order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::{ComplexError, Face, PolytopalComplex, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CubeError {
    #[error("words have different lengths: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid letter {0:?}, expected one of '0', '1', '*'")]
    InvalidLetter(char),
    #[error("a word must have at least one letter")]
    EmptyWord,
    #[error("face count parameter k = {k} out of range for dimension {d} (need -1 <= k <= d)")]
    FaceDimOutOfRange { d: usize, k: i64 },
    #[error("the full cube is not a proper face")]
    NotAProperFace,
    #[error("expected a vertex word (no free letters), got {0}")]
    NotAVertex(String),
    #[error("{candidate} is not a neighbour of {vertex}: the words differ in {differ} coordinates")]
    NotANeighbor {
        vertex: String,
        candidate: String,
        differ: usize,
    },
    #[error("duplicate neighbour {0}")]
    DuplicateNeighbor(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
    Free,
}

impl Letter {
    fn from_char(c: char) -> Result<Letter, CubeError> {
        match c {
            '0' => Ok(Letter::Zero),
            '1' => Ok(Letter::One),
            '*' => Ok(Letter::Free),
            other => Err(CubeError::InvalidLetter(other)),
        }
    }

    fn to_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::Free => '*',
        }
    }

    fn flipped(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::One => Letter::Zero,
            Letter::Free => Letter::Free,
        }
    }
}

/// A face of the 0–1 cube of dimension `self.d()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeWord {
    letters: Vec<Letter>,
}

impl FromStr for CubeWord {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<CubeWord, CubeError> {
        if s.is_empty() {
            return Err(CubeError::EmptyWord);
        }
        let letters = s.chars().map(Letter::from_char).collect::<Result<_, _>>()?;
        Ok(CubeWord { letters })
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl CubeWord {
    pub fn new(letters: Vec<Letter>) -> CubeWord {
        assert!(!letters.is_empty());
        CubeWord { letters }
    }

    /// The word with every letter free: the cube itself.
    pub fn full(d: usize) -> CubeWord {
        CubeWord { letters: vec![Letter::Free; d] }
    }

    /// The vertex whose id is `index` (binary digits, first letter most
    /// significant).
    pub fn vertex_from_index(d: usize, index: usize) -> CubeWord {
        assert!(index < (1 << d));
        let letters = (0..d)
            .map(|i| {
                if index & (1 << (d - 1 - i)) != 0 {
                    Letter::One
                } else {
                    Letter::Zero
                }
            })
            .collect();
        CubeWord { letters }
    }

    /// The facet fixing coordinate `coord` (0-based) to `value`.
    pub fn facet(d: usize, coord: usize, value: bool) -> CubeWord {
        assert!(coord < d);
        let mut letters = vec![Letter::Free; d];
        letters[coord] = if value { Letter::One } else { Letter::Zero };
        CubeWord { letters }
    }

    pub fn d(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The dimension of the face: the number of free letters.
    pub fn dimension(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Free).count()
    }

    pub fn is_vertex(&self) -> bool {
        self.dimension() == 0
    }

    pub fn is_full_cube(&self) -> bool {
        self.dimension() == self.d()
    }

    /// Vertex id for a vertex word, `None` if any letter is free.
    pub fn index(&self) -> Option<usize> {
        if !self.is_vertex() {
            return None;
        }
        let d = self.d();
        let mut idx = 0usize;
        for (i, &l) in self.letters.iter().enumerate() {
            if l == Letter::One {
                idx |= 1 << (d - 1 - i);
            }
        }
        Some(idx)
    }

    /// All vertices of the face, ascending by vertex id.
    pub fn vertices(&self) -> Vec<CubeWord> {
        let free: Vec<usize> = (0..self.d())
            .filter(|&i| self.letters[i] == Letter::Free)
            .collect();
        let k = free.len();
        (0..(1usize << k))
            .map(|m| {
                let mut letters = self.letters.clone();
                for (slot, &pos) in free.iter().enumerate() {
                    letters[pos] = if m & (1 << (k - 1 - slot)) != 0 {
                        Letter::One
                    } else {
                        Letter::Zero
                    };
                }
                CubeWord { letters }
            })
            .collect()
    }

    /// Vertex ids of the face, ascending.
    pub fn vertex_indices(&self) -> Vec<VertexId> {
        self.vertices()
            .into_iter()
            .map(|v| v.index().expect("assignment has no free letters") as VertexId)
            .collect()
    }

    /// Does this face contain the given vertex?
    pub fn contains_vertex(&self, v: &CubeWord) -> bool {
        debug_assert!(v.is_vertex() && v.d() == self.d());
        self.letters
            .iter()
            .zip(&v.letters)
            .all(|(&a, &b)| a == Letter::Free || a == b)
    }

    /// Coordinate-wise meet: `None` means the faces are disjoint.
    pub fn meet(&self, other: &CubeWord) -> Result<Option<CubeWord>, CubeError> {
        if self.d() != other.d() {
            return Err(CubeError::DimensionMismatch(self.d(), other.d()));
        }
        let mut letters = Vec::with_capacity(self.d());
        for (&a, &b) in self.letters.iter().zip(&other.letters) {
            let l = match (a, b) {
                (Letter::Free, x) => x,
                (x, Letter::Free) => x,
                (x, y) if x == y => x,
                _ => return Ok(None),
            };
            letters.push(l);
        }
        Ok(Some(CubeWord { letters }))
    }

    /// Is `self` a face of `other`?
    pub fn leq(&self, other: &CubeWord) -> Result<bool, CubeError> {
        if self.d() != other.d() {
            return Err(CubeError::DimensionMismatch(self.d(), other.d()));
        }
        Ok(self
            .letters
            .iter()
            .zip(&other.letters)
            .all(|(&a, &b)| b == Letter::Free || a == b))
    }

    /// Every face of this face (itself included), in lexicographic order.
    pub fn subwords(&self) -> Vec<CubeWord> {
        let free: Vec<usize> = (0..self.d())
            .filter(|&i| self.letters[i] == Letter::Free)
            .collect();
        let k = free.len();
        let mut out = Vec::with_capacity(3usize.pow(k as u32));
        let mut choice = vec![0u8; k]; // 0, 1, 2 ~ Zero, One, Free per free slot
        loop {
            let mut letters = self.letters.clone();
            for (slot, &pos) in free.iter().enumerate() {
                letters[pos] = match choice[slot] {
                    0 => Letter::Zero,
                    1 => Letter::One,
                    _ => Letter::Free,
                };
            }
            out.push(CubeWord { letters });
            // Mixed-radix increment, least significant at the end.
            let mut i = k;
            loop {
                if i == 0 {
                    out.sort();
                    return out;
                }
                i -= 1;
                if choice[i] < 2 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
            }
        }
    }

    /// The face as a [`Face`] over global cube vertex ids.
    pub fn face(&self) -> Face {
        Face::new(self.vertex_indices(), self.dimension() as i32)
    }

    /// Full subface closure as [`Face`] values, the face itself included.
    pub fn face_closure(&self) -> Vec<Face> {
        self.subwords().iter().map(CubeWord::face).collect()
    }
}

/// All faces of the d-cube with exactly `k` free letters, in lexicographic
/// order. `k = -1` yields the empty list (the empty face has no word).
pub fn enumerate_faces(d: usize, k: i64) -> Result<Vec<CubeWord>, CubeError> {
    if k < -1 || k > d as i64 {
        return Err(CubeError::FaceDimOutOfRange { d, k });
    }
    if k == -1 {
        return Ok(Vec::new());
    }
    Ok(all_words(d)
        .into_iter()
        .filter(|w| w.dimension() == k as usize)
        .collect())
}

/// All 3^d words of the d-cube in lexicographic order.
pub fn all_words(d: usize) -> Vec<CubeWord> {
    assert!(d >= 1);
    let mut out = Vec::with_capacity(3usize.pow(d as u32));
    let mut choice = vec![0u8; d];
    loop {
        let letters = choice
            .iter()
            .map(|&c| match c {
                0 => Letter::Zero,
                1 => Letter::One,
                _ => Letter::Free,
            })
            .collect();
        out.push(CubeWord { letters });
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] < 2 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
        }
    }
}

/// The boundary complex of the d-cube: the closures of its 2d facets.
pub fn cube_boundary_complex(d: usize) -> PolytopalComplex {
    assert!(d >= 1);
    let maximal = enumerate_faces(d, d as i64 - 1)
        .expect("d-1 is in range")
        .into_iter()
        .map(|w| (w.face(), w.face_closure()))
        .collect();
    PolytopalComplex::build(maximal).expect("cube closures are consistent")
}

/// The antistar of a proper face `f` of the d-cube, built constructively:
/// relabel so that `f` fixes coordinates i_1..i_k to values c_1..c_k, and
/// take the union of the face complexes of the k opposite facets (each
/// constraint flipped). The result is a pure (d-1)-complex on the vertices
/// the face misses.
pub fn cube_antistar_complex(d: usize, f: &CubeWord) -> Result<PolytopalComplex, CubeError> {
    if f.d() != d {
        return Err(CubeError::DimensionMismatch(f.d(), d));
    }
    if f.is_full_cube() {
        return Err(CubeError::NotAProperFace);
    }
    let maximal = f
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l != Letter::Free)
        .map(|(i, &l)| {
            let opposite = CubeWord::facet(d, i, l.flipped() == Letter::One);
            (opposite.face(), opposite.face_closure())
        })
        .collect();
    Ok(PolytopalComplex::build(maximal)?)
}

/// A vertex `y` of the d-cube together with a subset of its neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeCutsetSpec {
    apex: CubeWord,
    neighbors: Vec<CubeWord>,
}

impl CubeCutsetSpec {
    /// Validates that `apex` is a vertex and each member of `neighbors`
    /// differs from it in exactly one coordinate.
    pub fn new(apex: CubeWord, mut neighbors: Vec<CubeWord>) -> Result<CubeCutsetSpec, CubeError> {
        if !apex.is_vertex() {
            return Err(CubeError::NotAVertex(apex.to_string()));
        }
        for n in &neighbors {
            if n.d() != apex.d() {
                return Err(CubeError::DimensionMismatch(n.d(), apex.d()));
            }
            if !n.is_vertex() {
                return Err(CubeError::NotAVertex(n.to_string()));
            }
            let differ = apex
                .letters()
                .iter()
                .zip(n.letters())
                .filter(|(a, b)| a != b)
                .count();
            if differ != 1 {
                return Err(CubeError::NotANeighbor {
                    vertex: apex.to_string(),
                    candidate: n.to_string(),
                    differ,
                });
            }
        }
        neighbors.sort();
        for pair in neighbors.windows(2) {
            if pair[0] == pair[1] {
                return Err(CubeError::DuplicateNeighbor(pair[0].to_string()));
            }
        }
        Ok(CubeCutsetSpec { apex, neighbors })
    }

    pub fn d(&self) -> usize {
        self.apex.d()
    }

    pub fn apex(&self) -> &CubeWord {
        &self.apex
    }

    pub fn neighbors(&self) -> &[CubeWord] {
        &self.neighbors
    }
}

/// For a vertex y and a set Y of its neighbours, build
///
/// * `C`: the subcomplex of the cube induced by the vertices outside
///   `{y} ∪ Y`, and
/// * `C'`: the explicit union of ridge complexes that spans `C` — after
///   relabelling so that y is the origin and Y = {e_1, ..., e_k}, the
///   ridges {x_1 = 0, x_i = 1} for i in [k+1, d] together with all ridges
///   {x_i = 1, x_j = 1}.
///
/// `C'` is a spanning, strongly connected, pure (d-2)-subcomplex of `C`.
/// For empty Y the pivot family above misses the vertex e_1, so the ridge
/// {x_2 = 0, x_1 = 1} is added; the spanning and connectivity properties
/// are preserved.
pub fn cube_cutset_complex(
    spec: &CubeCutsetSpec,
) -> Result<(PolytopalComplex, PolytopalComplex), CubeError> {
    let d = spec.d();
    let k = spec.neighbors.len();

    // Relabelling: flip the coordinates where y is 1 (so y becomes the
    // origin), then permute so the Y-directions come first.
    let flip: Vec<bool> = spec.apex.letters().iter().map(|&l| l == Letter::One).collect();
    let mut dirs: Vec<usize> = spec
        .neighbors
        .iter()
        .map(|n| {
            spec.apex
                .letters()
                .iter()
                .zip(n.letters())
                .position(|(a, b)| a != b)
                .expect("validated neighbour differs somewhere")
        })
        .collect();
    dirs.sort_unstable();
    let rest: Vec<usize> = (0..d).filter(|i| !dirs.contains(i)).collect();
    // sigma[j] = original coordinate carried by relabelled coordinate j.
    let sigma: Vec<usize> = dirs.iter().chain(rest.iter()).copied().collect();

    let to_original = |canonical: &[Letter]| -> CubeWord {
        let mut letters = vec![Letter::Free; d];
        for (j, &l) in canonical.iter().enumerate() {
            let orig = sigma[j];
            letters[orig] = if flip[orig] { l.flipped() } else { l };
        }
        CubeWord::new(letters)
    };
    let ridge = |fixed: &[(usize, Letter)]| -> CubeWord {
        let mut canonical = vec![Letter::Free; d];
        for &(j, l) in fixed {
            canonical[j] = l;
        }
        to_original(&canonical)
    };

    // C: every cube face whose vertex set avoids y and all of Y.
    let excluded: BTreeSet<usize> = std::iter::once(&spec.apex)
        .chain(spec.neighbors.iter())
        .map(|w| w.index().expect("vertex word"))
        .collect();
    let avoided: Vec<CubeWord> = all_words(d)
        .into_iter()
        .filter(|w| w.vertex_indices().iter().all(|&v| !excluded.contains(&(v as usize))))
        .collect();
    let c = complex_from_words(&avoided);

    // C': the explicit ridge family, mapped back to original coordinates.
    let mut ridges: Vec<CubeWord> = Vec::new();
    if k == 0 {
        for i in 1..d {
            ridges.push(ridge(&[(0, Letter::Zero), (i, Letter::One)]));
        }
        ridges.push(ridge(&[(1, Letter::Zero), (0, Letter::One)]));
    } else {
        for i in k..d {
            ridges.push(ridge(&[(0, Letter::Zero), (i, Letter::One)]));
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            ridges.push(ridge(&[(i, Letter::One), (j, Letter::One)]));
        }
    }
    let cprime = complex_from_words(&ridges);
    Ok((c, cprime))
}

/// Build a complex from a set of cube faces given as words: the stored
/// faces are the union of the words' closures.
fn complex_from_words(words: &[CubeWord]) -> PolytopalComplex {
    // Keep only maximal words so the builder sees genuine maximal faces.
    let maximal: Vec<&CubeWord> = words
        .iter()
        .filter(|w| {
            !words
                .iter()
                .any(|other| *w != other && w.leq(other).unwrap_or(false))
        })
        .collect();
    PolytopalComplex::build(
        maximal
            .into_iter()
            .map(|w| (w.face(), w.face_closure()))
            .collect(),
    )
    .expect("cube closures are consistent")
}
