//! Lexicographic BFS, perfect elimination orders and maximal cliques.

use thiserror::Error;

use crate::model::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ChordalError {
    #[error("graph is not chordal")]
    NotChordal,
}

/// Maximal cliques of a chordal graph and, per vertex, the cliques containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<usize>>,
    pub incidence: Vec<Vec<usize>>,
}

impl CliqueSet {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Builds the incidence lists for a given clique list.
    pub fn from_cliques(n: usize, cliques: Vec<Vec<usize>>) -> CliqueSet {
        let mut incidence = vec![Vec::new(); n];
        for (i, c) in cliques.iter().enumerate() {
            for &v in c {
                incidence[v].push(i);
            }
        }
        CliqueSet { cliques, incidence }
    }
}

/// LexBFS visiting order, ties broken by lowest vertex index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let init: Vec<usize> = (0..g.n()).collect();
    lex_bfs_with_priority(g, &init)
}

/// LexBFS+ : ties go to the vertex appearing last in `prev`.
pub fn lex_bfs_plus(g: &Graph, prev: &[usize]) -> Vec<usize> {
    let init: Vec<usize> = prev.iter().rev().copied().collect();
    lex_bfs_with_priority(g, &init)
}

const NIL: usize = usize::MAX;

/// LexBFS by partition refinement; ties go to the earliest vertex of `init`.
pub fn lex_bfs_with_priority(g: &Graph, init: &[usize]) -> Vec<usize> {
    let n = g.n();
    assert_eq!(init.len(), n);
    let mut rank = vec![0usize; n];
    for (i, &v) in init.iter().enumerate() {
        rank[v] = i;
    }
    // Neighbour lists in priority order, so split-off classes stay sorted.
    let mut nb: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    for l in nb.iter_mut() {
        l.sort_unstable_by_key(|&w| rank[w]);
    }

    // Vertex lists per class and an ordered list of classes.
    let mut vnext = vec![NIL; n];
    let mut vprev = vec![NIL; n];
    let mut vclass = vec![0usize; n];
    let mut chead: Vec<usize> = Vec::with_capacity(n + 1);
    let mut ctail: Vec<usize> = Vec::with_capacity(n + 1);
    let mut cnext: Vec<usize> = Vec::with_capacity(n + 1);
    let mut cprev: Vec<usize> = Vec::with_capacity(n + 1);
    let mut csplit: Vec<usize> = Vec::with_capacity(n + 1);
    let mut cstamp: Vec<usize> = Vec::with_capacity(n + 1);
    let mut first_class = NIL;
    if n > 0 {
        chead.push(init[0]);
        ctail.push(init[n - 1]);
        cnext.push(NIL);
        cprev.push(NIL);
        csplit.push(NIL);
        cstamp.push(NIL);
        first_class = 0;
        for i in 0..n {
            let v = init[i];
            vprev[v] = if i > 0 { init[i - 1] } else { NIL };
            vnext[v] = if i + 1 < n { init[i + 1] } else { NIL };
        }
    }
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);

    macro_rules! unlink_vertex {
        ($w:expr) => {{
            let w = $w;
            let c = vclass[w];
            if vprev[w] != NIL {
                vnext[vprev[w]] = vnext[w];
            } else {
                chead[c] = vnext[w];
            }
            if vnext[w] != NIL {
                vprev[vnext[w]] = vprev[w];
            } else {
                ctail[c] = vprev[w];
            }
            if chead[c] == NIL {
                if cprev[c] != NIL {
                    cnext[cprev[c]] = cnext[c];
                } else {
                    first_class = cnext[c];
                }
                if cnext[c] != NIL {
                    cprev[cnext[c]] = cprev[c];
                }
            }
        }};
    }

    for round in 0..n {
        let v = chead[first_class];
        unlink_vertex!(v);
        visited[v] = true;
        out.push(v);
        for &w in &nb[v] {
            if visited[w] {
                continue;
            }
            let c = vclass[w];
            if cstamp[c] != round {
                cstamp[c] = round;
                let nc = chead.len();
                chead.push(NIL);
                ctail.push(NIL);
                csplit.push(NIL);
                cstamp.push(round);
                cnext.push(c);
                cprev.push(cprev[c]);
                if cprev[c] != NIL {
                    cnext[cprev[c]] = nc;
                } else {
                    first_class = nc;
                }
                cprev[c] = nc;
                csplit[c] = nc;
            }
            let nc = csplit[c];
            unlink_vertex!(w);
            vclass[w] = nc;
            vprev[w] = ctail[nc];
            vnext[w] = NIL;
            if ctail[nc] != NIL {
                vnext[ctail[nc]] = w;
            } else {
                chead[nc] = w;
            }
            ctail[nc] = w;
        }
    }
    out
}

/// Checks the perfect elimination property of `order` (eliminated first to last).
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut reqs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            reqs[p].extend(later.iter().copied().filter(|&w| w != p));
        }
    }
    let mut mark = vec![NIL; n];
    for p in 0..n {
        for &w in g.neighbors(p) {
            mark[w] = p;
        }
        if reqs[p].iter().any(|&w| mark[w] != p) {
            return false;
        }
    }
    true
}

/// Maximal cliques via the reverse LexBFS order, or `NotChordal`.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueSet, ChordalError> {
    let n = g.n();
    let mut peo = lex_bfs(g);
    peo.reverse();
    if !is_perfect_elimination_order(g, &peo) {
        return Err(ChordalError::NotChordal);
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let later_count: Vec<usize> = (0..n).map(|v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count()).collect();
    let mut maximal = vec![true; n];
    for v in 0..n {
        let parent = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).min_by_key(|&w| pos[w]);
        if let Some(p) = parent {
            if later_count[v] == later_count[p] + 1 {
                maximal[p] = false;
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if maximal[v] {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            cliques.push(c);
        }
    }
    cliques.sort_unstable();
    Ok(CliqueSet::from_cliques(n, cliques))
}
