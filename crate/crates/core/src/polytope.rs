//! Lattice polytopes of exponent vectors: vertices, normalized volume,
//! lattice points and face lattices.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grassmann::{Chart, GraphRing, Side};
use crate::poset::SimplicialComplex;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    pub vertices: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    pub ambient_dim: usize,
    pub dim: usize,
}

impl LatticePolytope {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let labels = (0..vertices.len()).map(|i| format!("v{i}")).collect();
        Self::with_labels(vertices, labels)
    }

    pub fn with_labels(vertices: Vec<Vec<i64>>, labels: Vec<String>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::Invalid("polytope needs at least one vertex".into()));
        };
        let ambient_dim = first.len();
        if vertices.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::Invalid("vertices of different lengths".into()));
        }
        if labels.len() != vertices.len() {
            return Err(Error::Invalid("one label per vertex required".into()));
        }
        let distinct: HashSet<&Vec<i64>> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Invalid("repeated vertex".into()));
        }
        let dim = affine_rank(&vertices);
        Ok(LatticePolytope { vertices, labels, ambient_dim, dim })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// One vertex per line, coordinates separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let row: Vec<String> = v.iter().map(i64::to_string).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut vs = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let v = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::Invalid(format!("bad coordinate '{t}'"))))
                .collect::<Result<Vec<i64>>>()?;
            vs.push(v);
        }
        Self::new(vs)
    }
}

/// Rank of an integer matrix, by fraction-free elimination with row gcds.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let (top, rest) = m.split_at_mut(i);
                for (x, y) in rest[0].iter_mut().zip(&top[r]) {
                    *x = *x * a - *y * b;
                }
                normalize(&mut rest[0]);
            }
        }
        r += 1;
    }
    r
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    let Some(p0) = points.first() else { return 0 };
    let diffs: Vec<Vec<i64>> = points[1..].iter().map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
    rank(&diffs)
}

/// Index in `Z^N` of the lattice spanned by the rows, i.e. the gcd of the
/// maximal minors; 0 if the rows are dependent.
pub fn lattice_index(rows: &[Vec<i64>]) -> BigInt {
    let k = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    if k > cols {
        return BigInt::from(0);
    }
    // unimodular column operations down to lower triangular form
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut det = BigInt::from(1);
    for r in 0..k {
        loop {
            let nz: Vec<usize> = (r..cols).filter(|&c| m[r][c] != 0).collect();
            let Some(&best) = nz.iter().min_by_key(|&&c| m[r][c].abs()) else {
                return BigInt::from(0);
            };
            for row in m.iter_mut() {
                row.swap(r, best);
            }
            if nz.len() == 1 {
                break;
            }
            for c in r + 1..cols {
                let q = m[r][c] / m[r][r];
                if q != 0 {
                    for row in m.iter_mut() {
                        row[c] -= q * row[r];
                    }
                }
            }
        }
        det *= BigInt::from(m[r][r].abs());
    }
    det
}

/// Exponent vectors of the graph variables under the diagonal parametrization:
/// `x`-exponents followed by the height (1 for `ξ`, 0 for `ψ`).
pub fn graph_polytope(g: &GraphRing) -> LatticePolytope {
    let images = g.diagonal_images();
    let na = g.ambient.len();
    let vertices = (0..g.len())
        .map(|v| {
            let mut e: Vec<i64> = (2..na).map(|a| images[v].exponent(a) as i64).collect();
            e.push((g.side_of(v) == Side::Xi) as i64);
            e
        })
        .collect();
    let labels = (0..g.len()).map(|v| g.name(v).to_string()).collect();
    LatticePolytope::with_labels(vertices, labels).expect("graph variables have distinct exponents")
}

fn psi_polytope(g: &GraphRing) -> LatticePolytope {
    let images = g.diagonal_images();
    let na = g.ambient.len();
    let psi = g.psi_vars();
    let vertices = psi.iter().map(|&v| (2..na).map(|a| images[v].exponent(a) as i64).collect()).collect();
    let labels = psi.iter().map(|&v| g.name(v).to_string()).collect();
    LatticePolytope::with_labels(vertices, labels).expect("distinct exponents")
}

/// Exponent vectors of the diagonal monomials of the `ψ_ij` (d = 2), in the
/// coordinates of the permuted chart.
pub fn gt_vertices(n: usize) -> Result<LatticePolytope> {
    if n < 3 {
        return Err(Error::Invalid("need n >= 3".into()));
    }
    Ok(psi_polytope(&GraphRing::new(2, n, Chart::Permuted2n)?))
}

/// Exponent vectors of the PBW monomials, in the coordinates of the intro chart.
pub fn fflv_vertices(d: usize, n: usize) -> Result<LatticePolytope> {
    Ok(psi_polytope(&GraphRing::new(d, n, Chart::Intro)?))
}

/// `P × {0}` together with the simplex on the origin and the unit vectors of
/// the `marked` coordinates at height 1.
pub fn cayley_sum(p: &LatticePolytope, marked: &[usize]) -> Result<LatticePolytope> {
    if marked.is_empty() || marked.iter().any(|&c| c >= p.ambient_dim) {
        return Err(Error::Invalid("marked coordinates out of range".into()));
    }
    let mut vs: Vec<Vec<i64>> = p.vertices.iter().map(|v| v.iter().copied().chain([0]).collect()).collect();
    let mut labels = p.labels.clone();
    let mut apex = vec![0; p.ambient_dim + 1];
    apex[p.ambient_dim] = 1;
    vs.push(apex.clone());
    labels.push("o".into());
    for &c in marked {
        let mut v = apex.clone();
        v[c] = 1;
        vs.push(v);
        labels.push(format!("e{c}"));
    }
    LatticePolytope::with_labels(vs, labels)
}

/// Cayley sum of the Gelfand–Tsetlin polytope with a simplex, vertices in
/// the order of the graph variables of the permuted chart.
pub fn cgt(n: usize) -> Result<LatticePolytope> {
    Ok(graph_polytope(&GraphRing::new(2, n, Chart::Permuted2n)?))
}

/// Cayley sum of the FFLV polytope with a simplex, vertices in the order of
/// the graph variables of the intro chart.
pub fn cfflv(d: usize, n: usize) -> Result<LatticePolytope> {
    Ok(graph_polytope(&GraphRing::new(d, n, Chart::Intro)?))
}

/// Number of facets of a unimodular triangulation, after checking every
/// facet. Complex vertex `i` is polytope vertex `i`.
pub fn normalized_volume(p: &LatticePolytope, tri: &SimplicialComplex) -> Result<BigInt> {
    if tri.vertices.len() != p.len() {
        return Err(Error::Invalid("triangulation and polytope have different vertex counts".into()));
    }
    let bad = tri.facets.par_iter().find_map_any(|f| {
        let idx = if f.len() == p.dim + 1 { simplex_index(p, f) } else { BigInt::from(0) };
        (idx != BigInt::from(1)).then(|| (f.clone(), idx))
    });
    if let Some((f, det)) = bad {
        return Err(Error::NonUnimodular {
            facet: f.iter().map(|&v| p.labels[v].clone()).collect(),
            det: det.to_string(),
        });
    }
    Ok(BigInt::from(tri.facets.len()))
}

/// Normalized volume of the simplex on the given vertices, relative to the
/// ambient lattice.
pub fn simplex_index(p: &LatticePolytope, facet: &[usize]) -> BigInt {
    let v0 = &p.vertices[facet[0]];
    let rows: Vec<Vec<i64>> = facet[1..]
        .iter()
        .map(|&i| p.vertices[i].iter().zip(v0).map(|(a, b)| a - b).collect())
        .collect();
    lattice_index(&rows)
}

/// Inequality `normal · y + offset ≥ 0` in the chosen coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i128>,
    pub offset: i128,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FaceLattice {
    /// Coordinates on which the projection of the polytope is full-dimensional.
    pub coordinates: Vec<usize>,
    pub facets: Vec<Facet>,
    /// `f_vector[j]` = number of `j`-dimensional faces, `j < dim`.
    pub f_vector: Vec<u64>,
}

/// Coordinates on which the projection keeps the affine rank.
fn full_rank_coordinates(p: &LatticePolytope) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut r = 0;
    for c in 0..p.ambient_dim {
        let mut trial = chosen.clone();
        trial.push(c);
        let proj: Vec<Vec<i64>> = p.vertices.iter().map(|v| trial.iter().map(|&i| v[i]).collect()).collect();
        let nr = affine_rank(&proj);
        if nr > r {
            chosen = trial;
            r = nr;
        }
        if r == p.dim {
            break;
        }
    }
    chosen
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facet inequalities by double description of the cone of valid
/// inequalities, then all faces as intersections of facets.
pub fn face_lattice(p: &LatticePolytope) -> Result<FaceLattice> {
    if p.len() > 128 {
        return Err(Error::Invalid("at most 128 vertices supported".into()));
    }
    let coords = full_rank_coordinates(p);
    let k = coords.len();
    if k == 0 {
        return Ok(FaceLattice { coordinates: coords, facets: Vec::new(), f_vector: Vec::new() });
    }
    // homogenized points (y, 1)
    let w: Vec<Vec<i128>> = p
        .vertices
        .iter()
        .map(|v| coords.iter().map(|&c| v[c] as i128).chain([1]).collect())
        .collect();
    let rays = double_description(&w, k)?;
    let mut facets: Vec<Facet> = rays
        .into_iter()
        .map(|h| {
            let vertices = (0..w.len()).filter(|&i| dot(&h, &w[i]) == 0).collect();
            Facet { offset: h[k], normal: h[..k].to_vec(), vertices }
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let facet_bits: Vec<u128> = facets.iter().map(|f| f.vertices.iter().fold(0u128, |m, &v| m | 1 << v)).collect();
    let mut seen: HashSet<u128> = facet_bits.iter().copied().collect();
    let mut queue: Vec<u128> = facet_bits.clone();
    while let Some(face) = queue.pop() {
        for &f in &facet_bits {
            let g = face & f;
            if g != 0 && seen.insert(g) {
                queue.push(g);
            }
        }
    }
    let mut f_vector = vec![0u64; p.dim];
    let dims: Vec<usize> = seen
        .par_iter()
        .map(|&face| {
            let pts: Vec<Vec<i64>> = (0..p.len()).filter(|&v| face >> v & 1 == 1).map(|v| p.vertices[v].clone()).collect();
            affine_rank(&pts)
        })
        .collect();
    for dm in dims {
        if dm < p.dim {
            f_vector[dm] += 1;
        }
    }
    Ok(FaceLattice { coordinates: coords, facets, f_vector })
}

/// Extreme rays of `{h : h·w_i ≥ 0}` for points `w_i` spanning `Z^(k+1)`.
fn double_description(w: &[Vec<i128>], k: usize) -> Result<Vec<Vec<i128>>> {
    let dim = k + 1;
    // a basis among the points
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..w.len() {
        let mut trial: Vec<Vec<i64>> = basis.iter().map(|&b| to_i64(&w[b])).collect();
        trial.push(to_i64(&w[i]));
        if rank(&trial) == trial.len() {
            basis.push(i);
        }
        if basis.len() == dim {
            break;
        }
    }
    if basis.len() != dim {
        return Err(Error::Invalid("points do not span".into()));
    }
    // initial rays: columns of the inverse of the basis matrix
    let inv = invert(&basis.iter().map(|&b| w[b].clone()).collect::<Vec<_>>())?;
    struct Ray {
        h: Vec<i128>,
        tight: u128,
    }
    let mut processed: u128 = basis.iter().fold(0, |m, &b| m | 1 << b);
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<Rational> = inv.iter().map(|row| row[j].clone()).collect();
            let h = primitive(&col);
            let tight = basis.iter().enumerate().filter(|&(i, _)| i != j).fold(0u128, |m, (_, &b)| m | 1 << b);
            Ray { h, tight }
        })
        .collect();
    for i in 0..w.len() {
        if processed >> i & 1 == 1 {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| dot(&r.h, &w[i])).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, &v) in rays.iter().zip(&vals) {
            if v >= 0 {
                let tight = if v == 0 { r.tight | 1 << i } else { r.tight };
                next.push(Ray { h: r.h.clone(), tight });
            }
        }
        for (a, &va) in vals.iter().enumerate() {
            if va <= 0 {
                continue;
            }
            for (b, &vb) in vals.iter().enumerate() {
                if vb >= 0 {
                    continue;
                }
                let common = rays[a].tight & rays[b].tight;
                if (common.count_ones() as usize) + 1 < k {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(c, r)| c == a || c == b || r.tight & common != common);
                if !adjacent {
                    continue;
                }
                let mut h: Vec<i128> = rays[b]
                    .h
                    .iter()
                    .zip(&rays[a].h)
                    .map(|(x, y)| va * x - vb * y)
                    .collect();
                normalize(&mut h);
                next.push(Ray { h, tight: common | 1 << i });
            }
        }
        if next.iter().any(|r| r.h.iter().any(|x| x.abs() > 1 << 60)) {
            return Err(Error::Overflow("double description"));
        }
        rays = next;
        processed |= 1 << i;
    }
    Ok(rays.into_iter().map(|r| r.h).collect())
}

fn to_i64(v: &[i128]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn primitive(v: &[Rational]) -> Vec<i128> {
    let l = v.iter().fold(BigInt::from(1), |l, x| l.lcm(&x.denom()));
    let ints: Vec<i128> = v
        .iter()
        .map(|x| {
            let s = x * &Rational::from(l.clone());
            i128::try_from(s.numer()).expect("small inverse")
        })
        .collect();
    let mut ints = ints;
    normalize(&mut ints);
    ints
}

/// Inverse of a square integer matrix over the rationals.
fn invert(m: &[Vec<i128>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .map(|&x| Rational::from_int(x as i64))
                .chain((0..n).map(|j| Rational::from_int((i == j) as i64)))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Invalid("singular matrix".into()))?;
        a.swap(c, p);
        let piv = a[c][c].recip();
        a[c] = a[c].iter().map(|x| x * &piv).collect();
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `|tP ∩ Z^N|` by testing every point of the bounding box against the facet
/// inequalities; at most `max_box` candidates are examined.
pub fn lattice_points(p: &LatticePolytope, t: u32, max_box: u64) -> Result<u64> {
    if t == 0 {
        return Ok(1);
    }
    let fl = face_lattice(p)?;
    let coords = &fl.coordinates;
    let t = t as i64;
    let lo: Vec<i64> = coords.iter().map(|&c| p.vertices.iter().map(|v| v[c]).min().unwrap() * t).collect();
    let hi: Vec<i64> = coords.iter().map(|&c| p.vertices.iter().map(|v| v[c]).max().unwrap() * t).collect();
    let size = lo.iter().zip(&hi).try_fold(1u64, |acc, (a, b)| acc.checked_mul((b - a + 1) as u64));
    match size {
        Some(s) if s <= max_box => {}
        _ => return Err(Error::Budget("lattice point box too large".into())),
    }
    let lift = Lift::new(p, coords)?;
    let mut count = 0u64;
    let mut y = lo.clone();
    'outer: loop {
        let yi: Vec<i128> = y.iter().map(|&x| x as i128).collect();
        if fl.facets.iter().all(|f| dot(&f.normal, &yi) + f.offset * t as i128 >= 0) && lift.is_integral(&y, t) {
            count += 1;
        }
        for i in 0..y.len() {
            if y[i] < hi[i] {
                y[i] += 1;
                continue 'outer;
            }
            y[i] = lo[i];
        }
        break;
    }
    Ok(count)
}

/// Affine map from the chosen coordinates back to the full lattice.
struct Lift {
    full: bool,
    base: Vec<i64>,
    coords: Vec<usize>,
    /// rows: full-space image of each chosen coordinate direction
    images: Vec<Vec<Rational>>,
}

impl Lift {
    fn new(p: &LatticePolytope, coords: &[usize]) -> Result<Lift> {
        let base = p.vertices[0].clone();
        if coords.len() == p.ambient_dim {
            return Ok(Lift { full: true, base, coords: coords.to_vec(), images: Vec::new() });
        }
        // direction basis among vertex differences
        let mut dirs: Vec<Vec<i64>> = Vec::new();
        for v in &p.vertices[1..] {
            let d: Vec<i64> = v.iter().zip(&base).map(|(a, b)| a - b).collect();
            let mut trial = dirs.clone();
            trial.push(d.clone());
            if rank(&trial) == trial.len() {
                dirs.push(d);
            }
        }
        let square: Vec<Vec<i128>> = dirs.iter().map(|d| coords.iter().map(|&c| d[c] as i128).collect()).collect();
        let inv = invert(&square)?;
        // y_S = λ · square  ⇒  λ = y_S · inv;  x = λ · dirs
        let images = (0..coords.len())
            .map(|s| {
                (0..p.ambient_dim)
                    .map(|c| {
                        dirs.iter()
                            .enumerate()
                            .fold(Rational::ZERO, |acc, (j, d)| &acc + &(&inv[s][j] * &Rational::from_int(d[c])))
                    })
                    .collect()
            })
            .collect();
        Ok(Lift { full: false, base, coords: coords.to_vec(), images })
    }

    fn is_integral(&self, y: &[i64], t: i64) -> bool {
        if self.full {
            return true;
        }
        let shift: Vec<i64> = self.coords.iter().zip(y).map(|(&c, &yc)| yc - t * self.base[c]).collect();
        (0..self.base.len()).all(|c| {
            let x = shift
                .iter()
                .zip(&self.images)
                .fold(Rational::ZERO, |acc, (&s, img)| &acc + &(&img[c] * &Rational::from_int(s)));
            x.is_integer()
        })
    }
}

/// Vertex multiset lookup, used to compare vertex sets up to order.
pub fn same_vertex_set(a: &LatticePolytope, b: &LatticePolytope) -> bool {
    let count = |p: &LatticePolytope| {
        let mut m: HashMap<Vec<i64>, usize> = HashMap::new();
        for v in &p.vertices {
            *m.entry(v.clone()).or_default() += 1;
        }
        m
    };
    count(a) == count(b)
}
