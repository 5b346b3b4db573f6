//! Plain-text edge lists: the vertex count, then whitespace-separated
//! `u v` pairs with 0-based endpoints. Repeated pairs collapse to one edge.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex count")]
    MissingOrder,
    #[error("line {line}: `{token}` is not a non-negative integer")]
    BadToken { line: usize, token: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: dangling endpoint without a partner")]
    Dangling { line: usize },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut tokens =
        text.lines().enumerate().flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t))).map(|(line, tok)| {
            tok.parse::<usize>()
                .map(|v| (line, v))
                .map_err(|_| EdgeListError::BadToken { line, token: tok.to_string() })
        });

    let (_, n) = tokens.next().ok_or(EdgeListError::MissingOrder)??;
    let mut edges = Vec::new();
    while let Some(first) = tokens.next() {
        let (line, u) = first?;
        let (line_v, v) = tokens.next().ok_or(EdgeListError::Dangling { line })??;
        for (l, x) in [(line, u), (line_v, v)] {
            if x >= n {
                return Err(EdgeListError::OutOfRange { line: l, vertex: x, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line: line_v, vertex: u });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges).expect("endpoints validated above"))
}
