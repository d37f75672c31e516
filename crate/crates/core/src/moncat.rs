//! The strict monoidal category layer: tensor words of generator objects,
//! typed morphisms backed by exact matrices, and right-duality data.
//!
//! Tensor indices flatten row-major with the leftmost factor most
//! significant, and every operation here sticks to that one convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat, Scalar};
use crate::report::Report;

/// A generator object: a name and a dimension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenObj {
    pub name: String,
    pub dim: usize,
}

impl GenObj {
    pub fn new(name: impl Into<String>, dim: usize) -> GenObj {
        let name = name.into();
        assert!(dim >= 1, "generator {name} must have dim >= 1");
        GenObj { name, dim }
    }
}

/// A tensor word of generators; the empty word is the unit object.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Obj {
    word: Vec<GenObj>,
}

impl Obj {
    pub fn unit() -> Obj {
        Obj { word: Vec::new() }
    }

    pub fn gen(g: &GenObj) -> Obj {
        Obj {
            word: vec![g.clone()],
        }
    }

    pub fn word(gens: &[&GenObj]) -> Obj {
        Obj {
            word: gens.iter().map(|g| (*g).clone()).collect(),
        }
    }

    pub fn tensor(&self, other: &Obj) -> Obj {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Obj { word }
    }

    pub fn dim(&self) -> usize {
        self.word.iter().map(|g| g.dim).product()
    }

    pub fn factors(&self) -> &[GenObj] {
        &self.word
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<&str> = self.word.iter().map(|g| g.name.as_str()).collect();
        write!(f, "{}", names.join("."))
    }
}

/// A typed linear map between tensor words, stored as an exact matrix with
/// `rows = dim(cod)` and `cols = dim(dom)`. Equality is equality of
/// `(dom, cod, mat)`; no diagram normalization is ever attempted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mor {
    pub dom: Obj,
    pub cod: Obj,
    pub mat: Mat,
}

impl Mor {
    pub fn new(dom: Obj, cod: Obj, mat: Mat) -> Result<Mor> {
        if mat.rows() != cod.dim() || mat.cols() != dom.dim() {
            return Err(Error::MorShape {
                expect_rows: cod.dim(),
                expect_cols: dom.dim(),
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        Ok(Mor { dom, cod, mat })
    }

    pub fn id(obj: &Obj, field: Field) -> Mor {
        Mor {
            dom: obj.clone(),
            cod: obj.clone(),
            mat: Mat::identity(obj.dim(), field),
        }
    }

    pub fn zero(dom: &Obj, cod: &Obj, field: Field) -> Mor {
        Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            mat: Mat::zeros(cod.dim(), dom.dim(), field),
        }
    }

    /// Integer-literal morphism, row-major.
    pub fn from_i64(dom: &Obj, cod: &Obj, field: Field, data: &[&[i64]]) -> Result<Mor> {
        Mor::new(dom.clone(), cod.clone(), Mat::from_i64(field, data))
    }

    /// The symmetry `X (x) Y -> Y (x) X`, `e_i (x) e_j -> e_j (x) e_i`.
    pub fn swap(x: &Obj, y: &Obj, field: Field) -> Mor {
        let (dx, dy) = (x.dim(), y.dim());
        let mut mat = Mat::zeros(dx * dy, dx * dy, field);
        for i in 0..dx {
            for j in 0..dy {
                mat.set(j * dx + i, i * dy + j, Scalar::one(field));
            }
        }
        Mor {
            dom: x.tensor(y),
            cod: y.tensor(x),
            mat,
        }
    }

    pub fn field(&self) -> Field {
        self.mat.field()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.mat.is_identity()
    }

    /// `self (after) f`, i.e. apply `f` first. Requires `f.cod == self.dom`
    /// as words.
    pub fn after(&self, f: &Mor) -> Result<Mor> {
        if f.cod != self.dom {
            return Err(Error::WordMismatch {
                inner_cod: f.cod.to_string(),
                outer_dom: self.dom.to_string(),
            });
        }
        Ok(Mor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.mul(&f.mat)?,
        })
    }

    /// `self (x) g`: word concatenation on objects, Kronecker product on
    /// matrices.
    pub fn tensor(&self, g: &Mor) -> Result<Mor> {
        Ok(Mor {
            dom: self.dom.tensor(&g.dom),
            cod: self.cod.tensor(&g.cod),
            mat: self.mat.kron(&g.mat)?,
        })
    }

    pub fn add(&self, other: &Mor) -> Result<Mor> {
        self.expect_parallel(other, "morphism sum")?;
        Ok(Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.add(&other.mat)?,
        })
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor> {
        self.expect_parallel(other, "morphism difference")?;
        Ok(Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.sub(&other.mat)?,
        })
    }

    pub fn scale(&self, by: &Scalar) -> Mor {
        Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.scale(by),
        }
    }

    fn expect_parallel(&self, other: &Mor, context: &'static str) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::ObjectMismatch {
                context,
                left: format!("{} -> {}", self.dom, self.cod),
                right: format!("{} -> {}", other.dom, other.cod),
            });
        }
        Ok(())
    }

    /// Exact inverse, when the underlying matrix is square and invertible.
    pub fn inverse(&self) -> Result<Option<Mor>> {
        let inv = crate::exactlin::mat_inverse(&self.mat)?;
        Ok(inv.map(|mat| Mor {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            mat,
        }))
    }
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {}", self.dom, self.cod, self.mat)
    }
}

/// Categorical composition `g (after) f`.
pub fn compose(g: &Mor, f: &Mor) -> Result<Mor> {
    g.after(f)
}

/// Tensor product of morphisms.
pub fn tensor_mor(f: &Mor, g: &Mor) -> Result<Mor> {
    f.tensor(g)
}

/// Right-duality data `x -| y`: `b: 1 -> y(x)x` and `d: x(x)y -> 1`
/// satisfying both snake identities.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityData {
    pub x: Obj,
    pub y: Obj,
    pub b: Mor,
    pub d: Mor,
}

/// Builds the standard duality data on `x`: for a single generator the dual
/// basis pairing, and for a word the composite of the factor adjunctions
/// (so the dual word is reversed).
pub fn make_duality_data(x: &Obj, field: Field) -> DualityData {
    let factors = x.factors();
    if factors.is_empty() {
        let unit = Obj::unit();
        return DualityData {
            x: unit.clone(),
            y: unit.clone(),
            b: Mor::id(&unit, field),
            d: Mor::id(&unit, field),
        };
    }
    if factors.len() == 1 {
        return gen_duality(&factors[0], field);
    }
    let head = gen_duality(&factors[0], field);
    let tail = make_duality_data(&Obj { word: factors[1..].to_vec() }, field);
    compose_duality(&head, &tail).expect("composite adjunction over one field")
}

fn gen_duality(g: &GenObj, field: Field) -> DualityData {
    let x = Obj::gen(g);
    let dual = GenObj::new(format!("{}*", g.name), g.dim);
    let y = Obj::gen(&dual);
    let n = g.dim;
    let mut b = Mat::zeros(n * n, 1, field);
    let mut d = Mat::zeros(1, n * n, field);
    for i in 0..n {
        b.set(i * n + i, 0, Scalar::one(field));
        d.set(0, i * n + i, Scalar::one(field));
    }
    DualityData {
        x: x.clone(),
        y: y.clone(),
        b: Mor::new(Obj::unit(), y.tensor(&x), b).unwrap(),
        d: Mor::new(x.tensor(&y), Obj::unit(), d).unwrap(),
    }
}

/// Composite adjunction `(x x', y' y)` with `b = (y' b x') (after) b'` and
/// `d = d (after) (x d' y)`.
pub fn compose_duality(first: &DualityData, second: &DualityData) -> Result<DualityData> {
    let field = first.b.field();
    let iy2 = Mor::id(&second.y, field);
    let ix1 = Mor::id(&first.x, field);
    let iy1 = Mor::id(&first.y, field);
    let ix2 = Mor::id(&second.x, field);
    let b = iy2
        .tensor(&first.b)?
        .tensor(&ix2)?
        .after(&second.b)?;
    let d = first
        .d
        .after(&ix1.tensor(&second.d)?.tensor(&iy1)?)?;
    Ok(DualityData {
        x: first.x.tensor(&second.x),
        y: second.y.tensor(&first.y),
        b,
        d,
    })
}

/// Verifies both snake identities as exact matrix identities.
pub fn check_adjunction(a: &DualityData) -> Result<Report> {
    let field = a.b.field();
    let ix = Mor::id(&a.x, field);
    let iy = Mor::id(&a.y, field);
    let mut report = Report::new(format!("adjunction {} -| {}", a.x, a.y));
    let snake_y = iy.tensor(&a.d)?.after(&a.b.tensor(&iy)?)?;
    report.push_residual("(evcoev)(a)", snake_y.sub(&iy)?.mat);
    let snake_x = a.d.tensor(&ix)?.after(&ix.tensor(&a.b)?)?;
    report.push_residual("(evcoev)(b)", snake_x.sub(&ix)?.mat);
    Ok(report)
}

/// Matrix of a linear operator on hom-spaces, with respect to entrywise
/// bases: column `k` holds the row-major flattening of `op(E_k)`, where
/// `E_k` is the `k`-th elementary morphism `dom -> cod`. Used to turn
/// morphism equations that are linear in one unknown into plain linear
/// systems.
pub fn operator_matrix(
    dom: &Obj,
    cod: &Obj,
    field: Field,
    mut op: impl FnMut(&Mor) -> Result<Mor>,
) -> Result<Mat> {
    let (r, c) = (cod.dim(), dom.dim());
    let mut columns: Vec<Mat> = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            let mut unit = Mor::zero(dom, cod, field);
            unit.mat.set(i, j, Scalar::one(field));
            let image = op(&unit)?;
            let flat = Mat::from_fn(image.mat.rows() * image.mat.cols(), 1, field, |k, _| {
                image
                    .mat
                    .get(k / image.mat.cols(), k % image.mat.cols())
                    .clone()
            });
            columns.push(flat);
        }
    }
    let rows = columns.first().map_or(0, |m| m.rows());
    Ok(Mat::from_fn(rows, r * c, field, |i, j| {
        columns[j].get(i, 0).clone()
    }))
}

/// Reinterprets a flat column vector as a morphism `dom -> cod` (row-major).
pub fn mor_from_vec(dom: &Obj, cod: &Obj, column: &Mat) -> Result<Mor> {
    let (r, c) = (cod.dim(), dom.dim());
    if column.rows() != r * c || column.cols() != 1 {
        return Err(Error::DimMismatch {
            context: "mor_from_vec",
            left: format!("{}x{}", column.rows(), column.cols()),
            right: format!("{}x1", r * c),
        });
    }
    let mat = Mat::from_fn(r, c, column.field(), |i, j| column.get(i * c + j, 0).clone());
    Mor::new(dom.clone(), cod.clone(), mat)
}

/// Row-major flattening of a morphism's matrix into a column vector.
pub fn mor_to_vec(f: &Mor) -> Mat {
    let (r, c) = (f.mat.rows(), f.mat.cols());
    Mat::from_fn(r * c, 1, f.field(), |k, _| f.mat.get(k / c, k % c).clone())
}

/// The comparison isomorphism `lambda: y -> y'` between two duality data on
/// the same object, `lambda = (y' d) (after) (b' y)`. It satisfies
/// `b' = (lambda x) (after) b` and `d = d' (after) (x lambda)`.
pub fn duality_comparison(fst: &DualityData, snd: &DualityData) -> Result<Mor> {
    if fst.x != snd.x {
        return Err(Error::ObjectMismatch {
            context: "duality comparison",
            left: fst.x.to_string(),
            right: snd.x.to_string(),
        });
    }
    let field = fst.b.field();
    let iy2 = Mor::id(&snd.y, field);
    let iy1 = Mor::id(&fst.y, field);
    iy2.tensor(&fst.d)?.after(&snd.b.tensor(&iy1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> Field {
        Field::Q
    }

    fn obj(name: &str, dim: usize) -> Obj {
        Obj::gen(&GenObj::new(name, dim))
    }

    #[test]
    fn unit_object_has_dim_one() {
        assert_eq!(Obj::unit().dim(), 1);
        let x = obj("X", 3);
        assert_eq!(x.tensor(&Obj::unit()), x);
    }

    #[test]
    fn compose_with_identity() {
        let x = obj("X", 2);
        let y = obj("Y", 3);
        let f = Mor::from_i64(&x, &y, field(), &[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        assert_eq!(f.after(&Mor::id(&x, field())).unwrap(), f);
        assert_eq!(Mor::id(&y, field()).after(&f).unwrap(), f);
    }

    #[test]
    fn swap_is_an_involution() {
        let x = obj("X", 2);
        let s = Mor::swap(&x, &x, field());
        assert!(s.after(&s).unwrap().is_identity());
    }

    #[test]
    fn compose_matches_hand_rolled_product() {
        // Independent oracle: composition is the plain matrix product,
        // computed here by an explicit triple loop.
        let c = obj("C", 2);
        let cc = c.tensor(&c);
        let delta = Mor::from_i64(
            &c,
            &cc,
            field(),
            &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]],
        )
        .unwrap();
        let eps_leg = Mor::from_i64(&cc, &c, field(), &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap();
        let composed = eps_leg.after(&delta).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Scalar::zero(field());
                for k in 0..4 {
                    acc = acc
                        .add(&eps_leg.mat.get(i, k).mul(delta.mat.get(k, j)).unwrap())
                        .unwrap();
                }
                assert_eq!(composed.mat.get(i, j), &acc);
            }
        }
    }

    #[test]
    fn compose_rejects_word_mismatch() {
        let x = obj("X", 2);
        let x2 = obj("X'", 2);
        let f = Mor::id(&x, field());
        let g = Mor::id(&x2, field());
        let err = g.after(&f).unwrap_err();
        assert!(err.to_string().contains("X'"));
    }

    #[test]
    fn tensor_with_unit_is_strict() {
        let x = obj("X", 2);
        let f = Mor::from_i64(&x, &x, field(), &[&[0, 1], &[1, 0]]).unwrap();
        let u = Mor::id(&Obj::unit(), field());
        assert_eq!(f.tensor(&u).unwrap(), f);
        assert_eq!(u.tensor(&f).unwrap(), f);
    }

    #[test]
    fn duality_dim_one() {
        let x = obj("X", 1);
        let d = make_duality_data(&x, field());
        assert!(d.b.mat.is_identity());
        assert!(d.d.mat.is_identity());
        assert!(check_adjunction(&d).unwrap().passed());
    }

    #[test]
    fn duality_dim_two_matrices() {
        let x = obj("X", 2);
        let dd = make_duality_data(&x, field());
        assert_eq!(
            dd.b.mat,
            Mat::from_i64(field(), &[&[1], &[0], &[0], &[1]])
        );
        assert_eq!(dd.d.mat, Mat::from_i64(field(), &[&[1, 0, 0, 1]]));
        assert!(check_adjunction(&dd).unwrap().passed());
    }

    #[test]
    fn composite_duality_matches_word_duality() {
        let g1 = GenObj::new("X", 2);
        let g2 = GenObj::new("X'", 3);
        let word = Obj::word(&[&g1, &g2]);
        let whole = make_duality_data(&word, field());
        let head = make_duality_data(&Obj::gen(&g1), field());
        let tail = make_duality_data(&Obj::gen(&g2), field());
        let composed = compose_duality(&head, &tail).unwrap();
        assert_eq!(whole.b, composed.b);
        assert_eq!(whole.d, composed.d);
        assert!(check_adjunction(&whole).unwrap().passed());
    }

    #[test]
    fn scaled_duality_fails_and_compensates() {
        let x = obj("X", 2);
        let dd = make_duality_data(&x, field());
        let two = Scalar::from_i64(2, field());
        let half = Scalar::ratio(1, 2, field()).unwrap();
        let scaled = DualityData {
            x: dd.x.clone(),
            y: dd.y.clone(),
            b: dd.b.scale(&two),
            d: dd.d.clone(),
        };
        assert!(!check_adjunction(&scaled).unwrap().passed());
        let compensated = DualityData {
            b: dd.b.scale(&two),
            d: dd.d.scale(&half),
            ..dd
        };
        assert!(check_adjunction(&compensated).unwrap().passed());
    }

    #[test]
    fn comparison_transports_duality() {
        // A permuted-basis duality on the same object is still an
        // adjunction, and the comparison map carries one to the other.
        let x = obj("X", 2);
        let std = make_duality_data(&x, field());
        let perm = Mor::from_i64(&std.y, &std.y, field(), &[&[0, 1], &[1, 0]]).unwrap();
        let ix = Mor::id(&x, field());
        let permuted = DualityData {
            x: std.x.clone(),
            y: std.y.clone(),
            b: perm.tensor(&ix).unwrap().after(&std.b).unwrap(),
            d: std
                .d
                .after(&ix.tensor(&perm.inverse().unwrap().unwrap()).unwrap())
                .unwrap(),
        };
        assert!(check_adjunction(&permuted).unwrap().passed());
        let lambda = duality_comparison(&std, &permuted).unwrap();
        assert!(lambda.inverse().unwrap().is_some());
        let b2 = lambda
            .tensor(&ix)
            .unwrap()
            .after(&std.b)
            .unwrap();
        assert_eq!(b2, permuted.b);
        let d1 = permuted
            .d
            .after(&ix.tensor(&lambda).unwrap())
            .unwrap();
        assert_eq!(d1, std.d);
    }
}
