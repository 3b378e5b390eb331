//! Corner elimination. A connected hypergraph is cop-win exactly when it can
//! be reduced to one vertex by repeatedly dot-deleting a corner, and removing
//! corners in any order is safe, so a greedy least-corner loop decides it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// One elimination step: `vertex` is a corner covered by `cover` at the time
/// it is removed. The final remaining vertex has no cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateStep {
    pub vertex: String,
    pub cover: Option<String>,
}

/// Vertex ordering with per-step covers witnessing dismantlability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DismantlingCertificate {
    pub steps: Vec<CertificateStep>,
}

impl DismantlingCertificate {
    pub fn ordering(&self) -> impl Iterator<Item = &str> {
        self.steps.iter().map(|s| s.vertex.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }
}

/// Least corner in vertex order together with its least cover.
pub fn find_corner(h: &Hypergraph) -> Result<Option<(Vertex, Vertex)>> {
    if h.vertex_count() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            found: h.vertex_count(),
        });
    }
    Ok(h.vertices().find_map(|x| h.cover_of(x).map(|u| (x, u))))
}

/// Greedy corner elimination; `None` when the hypergraph is not dismantlable.
pub fn dismantling_order(h: &Hypergraph) -> Result<Option<DismantlingCertificate>> {
    h.require_connected()?;
    let mut current = h.clone();
    let mut steps = Vec::with_capacity(h.vertex_count());
    while current.vertex_count() > 1 {
        let Some((x, u)) = find_corner(&current)? else {
            return Ok(None);
        };
        steps.push(CertificateStep {
            vertex: current.label(x).to_string(),
            cover: Some(current.label(u).to_string()),
        });
        current = current.dot_delete(x)?;
    }
    steps.push(CertificateStep {
        vertex: current.label(0).to_string(),
        cover: None,
    });
    Ok(Some(DismantlingCertificate { steps }))
}

pub fn is_dismantlable(h: &Hypergraph) -> Result<bool> {
    Ok(dismantling_order(h)?.is_some())
}

/// Replays the certificate with dot-deletion, checking each claimed cover.
///
/// Returns an error when the certificate is not a permutation of the vertex
/// set or its cover slots are malformed; returns `Ok(false)` when it is well
/// formed but some claimed cover does not cover its vertex.
pub fn verify_certificate(h: &Hypergraph, cert: &DismantlingCertificate) -> Result<bool> {
    let n = h.vertex_count();
    if cert.steps.len() != n {
        return Err(Error::MalformedCertificate(format!(
            "ordering has {} entries for {} vertices",
            cert.steps.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for step in &cert.steps {
        let v = h.vertex(&step.vertex).map_err(|_| {
            Error::MalformedCertificate(format!("unknown vertex `{}`", step.vertex))
        })?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::MalformedCertificate(format!(
                "vertex `{}` repeated",
                step.vertex
            )));
        }
    }
    let (last, body) = cert.steps.split_last().expect("non-empty");
    if last.cover.is_some() {
        return Err(Error::MalformedCertificate(
            "final vertex must have no cover".into(),
        ));
    }
    let mut current = h.clone();
    for step in body {
        let Some(cover) = &step.cover else {
            return Err(Error::MalformedCertificate(format!(
                "vertex `{}` lacks a cover",
                step.vertex
            )));
        };
        let x = current.vertex(&step.vertex)?;
        let Ok(u) = current.vertex(cover) else {
            // The cover was already deleted or never existed.
            return Ok(false);
        };
        if u == x
            || !current
                .closed(x)
                .iter()
                .all(|&w| current.adjacent_or_equal(u, w))
        {
            return Ok(false);
        }
        current = current.dot_delete(x)?;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::with_numbered_vertices(
            n,
            edges
                .iter()
                .map(|e| e.iter().map(|v| v - 1).collect())
                .collect(),
        )
        .unwrap()
    }

    fn c4() -> Hypergraph {
        hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]])
    }

    fn cert(pairs: &[(&str, Option<&str>)]) -> DismantlingCertificate {
        DismantlingCertificate {
            steps: pairs
                .iter()
                .map(|(v, c)| CertificateStep {
                    vertex: v.to_string(),
                    cover: c.map(String::from),
                })
                .collect(),
        }
    }

    #[test]
    fn find_corner_examples() {
        assert_eq!(find_corner(&hg(3, &[&[1, 2, 3]])).unwrap(), Some((0, 1)));
        assert_eq!(find_corner(&c4()).unwrap(), None);
        let pendant = hg(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1], &[1, 5]]);
        assert_eq!(find_corner(&pendant).unwrap(), Some((4, 0)));
        assert!(matches!(
            find_corner(&hg(1, &[])),
            Err(Error::TooFewVertices { .. })
        ));
    }

    #[test]
    fn greedy_order_on_single_edge() {
        let c = dismantling_order(&hg(3, &[&[1, 2, 3]])).unwrap().unwrap();
        assert_eq!(c, cert(&[("1", Some("2")), ("2", Some("3")), ("3", None)]));
    }

    #[test]
    fn c4_is_not_dismantlable() {
        assert_eq!(dismantling_order(&c4()).unwrap(), None);
    }

    #[test]
    fn hypertree_is_dismantlable() {
        let t = hg(5, &[&[1, 2, 3], &[3, 4, 5]]);
        let c = dismantling_order(&t).unwrap().unwrap();
        assert!(verify_certificate(&t, &c).unwrap());
    }

    #[test]
    fn disconnected_input_rejected() {
        assert!(matches!(
            dismantling_order(&hg(4, &[&[1, 2], &[3, 4]])),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn single_vertex_certificate() {
        let c = dismantling_order(&hg(1, &[])).unwrap().unwrap();
        assert_eq!(c, cert(&[("1", None)]));
    }

    #[test]
    fn verify_accepts_alternative_covers() {
        let h = hg(3, &[&[1, 2, 3]]);
        assert!(verify_certificate(
            &h,
            &cert(&[("1", Some("3")), ("2", Some("3")), ("3", None)])
        )
        .unwrap());
    }

    #[test]
    fn verify_rejects_every_c4_claim() {
        let h = c4();
        let labels = ["1", "2", "3", "4"];
        // Every first step must fail, whatever ordering and covers follow.
        for first in labels {
            for cover in labels {
                let mut rest: Vec<&str> = labels.iter().copied().filter(|&l| l != first).collect();
                let last = rest.pop().unwrap();
                let mut pairs = vec![(first, Some(cover))];
                pairs.extend(rest.iter().map(|&l| (l, Some(last))));
                pairs.push((last, None));
                assert!(!verify_certificate(&h, &cert(&pairs)).unwrap());
            }
        }
    }

    #[test]
    fn malformed_certificates_are_errors() {
        let h = hg(3, &[&[1, 2, 3]]);
        assert!(verify_certificate(&h, &cert(&[("1", Some("2")), ("3", None)])).is_err());
        assert!(verify_certificate(
            &h,
            &cert(&[("1", Some("2")), ("1", Some("3")), ("3", None)])
        )
        .is_err());
        assert!(
            verify_certificate(&h, &cert(&[("1", Some("2")), ("2", None), ("3", None)])).is_err()
        );
        assert!(verify_certificate(
            &h,
            &cert(&[("1", Some("2")), ("2", Some("3")), ("3", Some("1"))])
        )
        .is_err());
    }

    #[test]
    fn certificate_json_shape() {
        let c = cert(&[("1", Some("2")), ("2", None)]);
        let json: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(
            json,
            serde_json::json!([{"vertex": "1", "cover": "2"}, {"vertex": "2", "cover": null}])
        );
        assert_eq!(DismantlingCertificate::from_json(&c.to_json()).unwrap(), c);
    }
}
