//! Inline graph construction specs such as `cycle:5` or `ear:cycle:4:0-1`.

use edgeideal::{Error, Graph, Partition, Result, VertexSet};

fn bad(spec: &str, why: &str) -> Error {
    Error::Input(format!("bad graph spec {spec:?}: {why}"))
}

fn num(spec: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| bad(spec, &format!("{s:?} is not a nonnegative integer")))
}

fn list(spec: &str, s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| num(spec, x)).collect()
}

fn coord(spec: &str, s: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| bad(spec, &format!("{s:?} is not an integer")))
}

/// Parses a construction spec:
///
/// `cycle:r`, `path:n`, `complete:n`, `kbipartite:a,b`, `ferrers:l1,l2,..`,
/// `whisker:BASE[:v1,v2,..]`, `ear:BASE:u-v`, `grid:x,y/x,y/..` and
/// `union:SPEC+SPEC+..`.
pub fn parse(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad(spec, "expected KIND:ARGS"))?;
    match kind {
        "cycle" => Graph::cycle(num(spec, rest)?),
        "path" => Ok(Graph::path(num(spec, rest)?)),
        "complete" => Ok(Graph::complete(num(spec, rest)?)),
        "kbipartite" => match list(spec, rest)?[..] {
            [a, b] => Ok(Graph::complete_bipartite(a, b)),
            _ => Err(bad(spec, "expected kbipartite:a,b")),
        },
        "ferrers" => Ok(Graph::ferrers(&Partition::new(list(spec, rest)?)?)),
        "whisker" => {
            if let Ok(base) = parse(rest) {
                return Ok(base.whisker_all());
            }
            let (base, subset) = rest
                .rsplit_once(':')
                .ok_or_else(|| bad(spec, "expected whisker:BASE[:SUBSET]"))?;
            let s: VertexSet = list(spec, subset)?.into_iter().collect();
            parse(base)?.whisker(&s)
        }
        "ear" => {
            let (base, edge) = rest
                .rsplit_once(':')
                .ok_or_else(|| bad(spec, "expected ear:BASE:u-v"))?;
            let (u, v) = edge
                .split_once('-')
                .ok_or_else(|| bad(spec, "edge must be written u-v"))?;
            parse(base)?.add_ear(num(spec, u)?, num(spec, v)?)
        }
        "grid" => {
            let pts = rest
                .split(['/', ';'])
                .map(|p| {
                    let (x, y) = p
                        .split_once(',')
                        .ok_or_else(|| bad(spec, "points are written x,y"))?;
                    Ok((coord(spec, x)?, coord(spec, y)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Graph::grid_subgraph(&pts)
        }
        "union" => {
            let mut parts = rest.split('+').map(parse);
            let first = parts.next().ok_or_else(|| bad(spec, "empty union"))??;
            parts.try_fold(first, |acc, g| Ok(Graph::disjoint_union(&acc, &g?)))
        }
        _ => Err(bad(spec, &format!("unknown kind {kind:?}"))),
    }
}
