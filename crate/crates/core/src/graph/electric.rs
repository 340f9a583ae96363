use super::{AnnularGraph, GraphError};
use crate::exact::{Rational, SquareMatrix, TruncatedSeries};

/// Green's function at `z = 1` and its derivative, indexed by vertex
/// (0-based). Row and column of the sink are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct GreenData {
    pub g: SquareMatrix<Rational>,
    pub gp: SquareMatrix<Rational>,
}

/// Response matrix on the nodes and its derivative (0-based).
#[derive(Clone, Debug, PartialEq)]
pub struct ResponseData {
    pub l: SquareMatrix<Rational>,
    pub lp: SquareMatrix<Rational>,
}

/// Line-bundle Laplacian at `z = e^t`: entry `(u,v)` is `-w e^{ct}` summed
/// over edges with `c` the crossing count from `u` to `v`; the diagonal
/// holds the plain weighted degree.
pub fn laplacian_series(g: &AnnularGraph, order: usize) -> SquareMatrix<TruncatedSeries> {
    let v = g.vertex_count();
    let mut m = SquareMatrix::from_fn(v, |_, _| TruncatedSeries::zero_to(order));
    for e in g.edges() {
        let (a, b) = (e.u - 1, e.v - 1);
        let fwd = TruncatedSeries::exp_int(e.zip, order).scale(&e.weight);
        let back = TruncatedSeries::exp_int(-e.zip, order).scale(&e.weight);
        let w = TruncatedSeries::constant_to(e.weight.clone(), order);
        m.set(a, b, m.get(a, b).clone() - fwd);
        m.set(b, a, m.get(b, a).clone() - back);
        m.set(a, a, m.get(a, a).clone() + w.clone());
        m.set(b, b, m.get(b, b).clone() + w);
    }
    m
}

fn coefficient(m: &SquareMatrix<TruncatedSeries>, k: usize) -> SquareMatrix<Rational> {
    m.map(|s| s.coeff(k))
}

/// Inverse of a matrix of series whose constant part is invertible:
/// `X_k = -X_0 * sum_{j>=1} M_j X_{k-j}`.
fn invert_series(m: &SquareMatrix<TruncatedSeries>, order: usize) -> Option<SquareMatrix<TruncatedSeries>> {
    let coeffs: Vec<SquareMatrix<Rational>> = (0..=order).map(|k| coefficient(m, k)).collect();
    let x0 = coeffs[0].inverse()?;
    let n = m.dim();
    let mut xs = vec![x0.clone()];
    for k in 1..=order {
        let mut acc = SquareMatrix::zeros(n);
        for j in 1..=k {
            acc = acc.add(&coeffs[j].mul(&xs[k - j]));
        }
        xs.push(x0.mul(&acc).neg());
    }
    Some(SquareMatrix::from_fn(n, |i, j| TruncatedSeries::new(order, xs.iter().map(|x| x.get(i, j).clone()).collect())))
}

/// Expansion of the grounded inverse `𝒢(e^t)` to `t^order`, as a `V x V`
/// matrix with zero sink row and column.
pub fn green_series(g: &AnnularGraph, order: usize) -> Result<SquareMatrix<TruncatedSeries>, GraphError> {
    let lap = laplacian_series(g, order);
    let sink = g.node_count() - 1;
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&i| i != sink).collect();
    let inv = invert_series(&lap.submatrix(&keep, &keep), order).ok_or(GraphError::SingularLaplacian)?;
    let mut out = SquareMatrix::from_fn(g.vertex_count(), |_, _| TruncatedSeries::zero_to(order));
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            out.set(i, j, inv.get(a, b).clone());
        }
    }
    Ok(out)
}

/// Expansion of `ℒ(e^t)`, minus the Schur complement of the Laplacian
/// onto the nodes.
pub fn response_series(g: &AnnularGraph, order: usize) -> Result<SquareMatrix<TruncatedSeries>, GraphError> {
    let lap = laplacian_series(g, order);
    let nodes: Vec<usize> = (0..g.node_count()).collect();
    let inner: Vec<usize> = (g.node_count()..g.vertex_count()).collect();
    let nn = lap.submatrix(&nodes, &nodes);
    if inner.is_empty() {
        return Ok(nn.neg());
    }
    let ii = invert_series(&lap.submatrix(&inner, &inner), order).ok_or(GraphError::SingularInternalBlock)?;
    let n = nodes.len();
    let k = inner.len();
    // rectangular blocks as plain closures over the full matrix
    let ni = |a: usize, c: usize| lap.get(nodes[a], inner[c]).clone();
    let in_ = |c: usize, b: usize| lap.get(inner[c], nodes[b]).clone();
    Ok(SquareMatrix::from_fn(n, |a, b| {
        let mut corr = TruncatedSeries::zero_to(order);
        for c in 0..k {
            for d in 0..k {
                corr = corr + ni(a, c) * ii.get(c, d).clone() * in_(d, b);
            }
        }
        corr - nn.get(a, b).clone()
    }))
}

fn antisymmetric(m: &SquareMatrix<Rational>) -> Result<(), GraphError> {
    m.check_antisymmetric().map_err(|e| match e {
        crate::exact::ExactError::NotAntisymmetric { row, col } => GraphError::NotAntisymmetric(row, col),
        _ => GraphError::NotAntisymmetric(0, 0),
    })
}

/// `G` and `G' = -G Δ'(1) G`, read off a first-order expansion.
pub fn green_data(g: &AnnularGraph) -> Result<GreenData, GraphError> {
    let s = green_series(g, 1)?;
    let data = GreenData { g: coefficient(&s, 0), gp: coefficient(&s, 1) };
    antisymmetric(&data.gp)?;
    Ok(data)
}

/// `L` and `L'` from a first-order expansion of the Schur complement.
pub fn response_data(g: &AnnularGraph) -> Result<ResponseData, GraphError> {
    let s = response_series(g, 1)?;
    let data = ResponseData { l: coefficient(&s, 0), lp: coefficient(&s, 1) };
    antisymmetric(&data.lp)?;
    Ok(data)
}
