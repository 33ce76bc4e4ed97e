//! Satake diagrams as colored Dynkin multigraphs with an arrow involution,
//! the rank formula, the white-node removal procedure, and a catalog of the
//! diagrams we care about (four exceptional pairs stored as data, classical
//! families generated parametrically).

use std::collections::VecDeque;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    White,
    Black,
}

/// Dynkin edge. Single edges are stored with a < b; for mult >= 2 the pair is
/// ordered so that b is on the short-root side (the arrow points a -> b).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub mult: u8,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SatakeDiagram {
    colors: Vec<Color>,
    edges: Vec<Edge>,
    arrows: Vec<(usize, usize)>,
}

/// Canonical name of a catalog symmetric pair, e.g. "so8/so5+so3".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairLabel {
    pub name: String,
}

impl std::fmt::Display for PairLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name)
    }
}

impl SatakeDiagram {
    pub fn new(
        colors: Vec<Color>,
        mut edges: Vec<Edge>,
        mut arrows: Vec<(usize, usize)>,
    ) -> Result<Self, String> {
        let n = colors.len();
        for e in &mut edges {
            if e.a >= n || e.b >= n || e.a == e.b {
                return Err(format!("bad edge {}-{}", e.a, e.b));
            }
            if e.mult == 0 || e.mult > 3 {
                return Err(format!("bad edge multiplicity {}", e.mult));
            }
            if e.mult == 1 && e.a > e.b {
                std::mem::swap(&mut e.a, &mut e.b);
            }
        }
        edges.sort_by_key(|e| (e.a, e.b));
        for w in edges.windows(2) {
            let key = |e: &Edge| (e.a.min(e.b), e.a.max(e.b));
            if key(&w[0]) == key(&w[1]) {
                return Err("duplicate edge".into());
            }
        }
        let mut arrow_deg = vec![0usize; n];
        for p in &mut arrows {
            if p.0 >= n || p.1 >= n || p.0 == p.1 {
                return Err(format!("bad arrow {}-{}", p.0, p.1));
            }
            if colors[p.0] != Color::White || colors[p.1] != Color::White {
                return Err("arrow on a black node".into());
            }
            if p.0 > p.1 {
                std::mem::swap(&mut p.0, &mut p.1);
            }
            arrow_deg[p.0] += 1;
            arrow_deg[p.1] += 1;
        }
        if arrow_deg.iter().any(|&d| d > 1) {
            return Err("arrows do not form an involution".into());
        }
        arrows.sort();
        let d = SatakeDiagram { colors, edges, arrows };
        d.check_finite_type()?;
        Ok(d)
    }

    pub fn empty() -> Self {
        SatakeDiagram { colors: vec![], edges: vec![], arrows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn white_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::White).count()
    }

    /// Rank of the symmetric pair: white nodes minus arrow pairs.
    pub fn rank(&self) -> usize {
        self.white_count() - self.arrows.len()
    }

    fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.a == i {
                    Some(e.b)
                } else if e.b == i {
                    Some(e.a)
                } else {
                    None
                }
            })
            .collect()
    }

    // Each connected component of the underlying multigraph must be one of
    // the finite Dynkin shapes: a tree, max degree 3, at most one branch node
    // or one multiple edge (never both), with the standard arm/position
    // constraints for D, E, B/C, F4, G2.
    fn check_finite_type(&self) -> Result<(), String> {
        let n = self.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in self.neighbors(i) {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            self.check_component(&comp)?;
        }
        Ok(())
    }

    fn check_component(&self, comp: &[usize]) -> Result<(), String> {
        let in_comp = |i: usize| comp.contains(&i);
        let comp_edges: Vec<&Edge> = self.edges.iter().filter(|e| in_comp(e.a)).collect();
        if comp_edges.len() + 1 != comp.len() {
            return Err("diagram component is not a tree".into());
        }
        let deg = |i: usize| self.neighbors(i).len();
        if comp.iter().any(|&i| deg(i) > 3) {
            return Err("node of degree > 3".into());
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|&i| deg(i) == 3).collect();
        let multi: Vec<&&Edge> = comp_edges.iter().filter(|e| e.mult > 1).collect();
        if branch.len() > 1 || multi.len() > 1 || (!branch.is_empty() && !multi.is_empty()) {
            return Err("not a finite Dynkin shape".into());
        }
        if let Some(e) = multi.first() {
            if e.mult == 3 {
                if comp.len() != 2 {
                    return Err("triple edge only in G2".into());
                }
                return Ok(());
            }
            // Path with one double edge: B/C put it at an end, F4 in the
            // middle of a 4-chain.
            let ends: Vec<usize> = comp.iter().copied().filter(|&i| deg(i) == 1).collect();
            debug_assert_eq!(ends.len(), 2);
            let at_end = deg(e.a) == 1 || deg(e.b) == 1;
            let f4 = comp.len() == 4 && deg(e.a) == 2 && deg(e.b) == 2;
            if !at_end && !f4 {
                return Err("double edge misplaced".into());
            }
            return Ok(());
        }
        if let Some(&c) = branch.first() {
            // Arm lengths from the branch node, sorted.
            let mut arms: Vec<usize> = self
                .neighbors(c)
                .iter()
                .map(|&first| {
                    let mut len = 1;
                    let mut prev = c;
                    let mut cur = first;
                    loop {
                        let next: Vec<usize> =
                            self.neighbors(cur).into_iter().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [] => break,
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => unreachable!("second branch excluded above"),
                        }
                    }
                    len
                })
                .collect();
            arms.sort();
            let ok = matches!(arms.as_slice(), [1, 1, _] | [1, 2, 2] | [1, 2, 3] | [1, 2, 4]);
            if !ok {
                return Err("branch arms outside D/E shapes".into());
            }
        }
        Ok(())
    }

    /// Connectivity in the sense relevant for symmetric pairs: arrow pairs
    /// count as connections (an arrowed A1 x A1 is one pair, not two).
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut adj: Vec<Vec<usize>> = (0..n).map(|i| self.neighbors(i)).collect();
        for &(a, b) in &self.arrows {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count == n
    }

    fn remove_nodes(&self, gone: &[usize]) -> SatakeDiagram {
        let n = self.len();
        let mut newidx = vec![usize::MAX; n];
        let mut colors = Vec::new();
        for i in 0..n {
            if !gone.contains(&i) {
                newidx[i] = colors.len();
                colors.push(self.colors[i]);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !gone.contains(&e.a) && !gone.contains(&e.b))
            .map(|e| Edge { a: newidx[e.a], b: newidx[e.b], mult: e.mult })
            .collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|p| !gone.contains(&p.0) && !gone.contains(&p.1))
            .map(|p| (newidx[p.0], newidx[p.1]))
            .collect();
        SatakeDiagram::new(colors, edges, arrows).expect("subdiagram of a valid diagram")
    }

    fn arrow_partner(&self, i: usize) -> Option<usize> {
        self.arrows.iter().find_map(|&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    /// One removal step: every diagram obtained by deleting a single
    /// arrow-free white node, or both nodes of one arrow pair. Results are
    /// deduplicated up to isomorphism.
    pub fn subdiagram_step(&self) -> Vec<SatakeDiagram> {
        let mut out: Vec<SatakeDiagram> = Vec::new();
        let push = |d: SatakeDiagram, out: &mut Vec<SatakeDiagram>| {
            if !out.iter().any(|x| x.is_isomorphic(&d)) {
                out.push(d);
            }
        };
        for i in 0..self.len() {
            if self.colors[i] == Color::White && self.arrow_partner(i).is_none() {
                push(self.remove_nodes(&[i]), &mut out);
            }
        }
        for &(a, b) in &self.arrows {
            push(self.remove_nodes(&[a, b]), &mut out);
        }
        out
    }

    /// Transitive closure of subdiagram_step up to isomorphism; contains the
    /// diagram itself and (whenever any removal is possible) the empty one.
    pub fn all_subdiagrams(&self) -> Vec<SatakeDiagram> {
        let mut reps = vec![self.clone()];
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(d) = queue.pop_front() {
            for s in d.subdiagram_step() {
                if !reps.iter().any(|r| r.is_isomorphic(&s)) {
                    reps.push(s.clone());
                    queue.push_back(s);
                }
            }
        }
        reps
    }

    // Per-node invariant used to prune the isomorphism search: color, arrow
    // membership, and the multiset of incident edge types (role 1 = long end
    // of a multiple edge, 2 = short end).
    fn node_invariant(&self, i: usize) -> (u8, bool, Vec<(u8, u8)>) {
        let mut inc: Vec<(u8, u8)> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.a == i {
                    Some((e.mult, if e.mult > 1 { 1 } else { 0 }))
                } else if e.b == i {
                    Some((e.mult, if e.mult > 1 { 2 } else { 0 }))
                } else {
                    None
                }
            })
            .collect();
        inc.sort();
        (
            match self.colors[i] {
                Color::White => 0,
                Color::Black => 1,
            },
            self.arrow_partner(i).is_some(),
            inc,
        )
    }

    // Orientation is part of the edge type only for multiple edges.
    fn edge_between(&self, i: usize, j: usize) -> Option<(u8, bool)> {
        self.edges.iter().find_map(|e| {
            if (e.a, e.b) == (i, j) {
                Some((e.mult, false))
            } else if (e.a, e.b) == (j, i) {
                Some((e.mult, e.mult > 1))
            } else {
                None
            }
        })
    }

    /// Isomorphism of colored multigraphs with arrows, by backtracking over
    /// invariant-compatible node assignments (diagrams here have <= 10 nodes).
    pub fn is_isomorphic(&self, other: &SatakeDiagram) -> bool {
        let n = self.len();
        if n != other.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        if self.arrows.len() != other.arrows.len() {
            return false;
        }
        let inv_a: Vec<_> = (0..n).map(|i| self.node_invariant(i)).collect();
        let inv_b: Vec<_> = (0..n).map(|i| other.node_invariant(i)).collect();
        {
            let mut sa = inv_a.clone();
            let mut sb = inv_b.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return false;
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.match_nodes(other, &inv_a, &inv_b, &mut map, &mut used, 0)
    }

    fn match_nodes(
        &self,
        other: &SatakeDiagram,
        inv_a: &[(u8, bool, Vec<(u8, u8)>)],
        inv_b: &[(u8, bool, Vec<(u8, u8)>)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        if i == self.len() {
            return true;
        }
        'cand: for j in 0..other.len() {
            if used[j] || inv_a[i] != inv_b[j] {
                continue;
            }
            for k in 0..i {
                if self.edge_between(i, k) != other.edge_between(j, map[k]) {
                    continue 'cand;
                }
                let arr_a = self.arrow_partner(i) == Some(k);
                let arr_b = other.arrow_partner(j) == Some(map[k]);
                if arr_a != arr_b {
                    continue 'cand;
                }
            }
            map[i] = j;
            used[j] = true;
            if self.match_nodes(other, inv_a, inv_b, map, used, i + 1) {
                return true;
            }
            map[i] = usize::MAX;
            used[j] = false;
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Parametric families.

fn chain_edges(l: usize) -> Vec<Edge> {
    (0..l.saturating_sub(1)).map(|i| Edge { a: i, b: i + 1, mult: 1 }).collect()
}

/// (sl_{p+q}, sl_p + sl_q + t1) on the A_{p+q-1} diagram.
pub fn aiii_diagram(p: usize, q: usize) -> Result<SatakeDiagram, String> {
    if p < 1 || q < 1 || p + q < 2 {
        return Err("aiii requires p, q >= 1".into());
    }
    let l = p + q - 1;
    let r = p.min(q);
    let colors: Vec<Color> = (0..l)
        .map(|i| if i < r || i >= l - r { Color::White } else { Color::Black })
        .collect();
    let arrows: Vec<(usize, usize)> =
        (0..r).filter(|&i| i != l - 1 - i).map(|i| (i, l - 1 - i)).collect();
    SatakeDiagram::new(colors, chain_edges(l), arrows)
}

/// (so_{n+m}, so_n + so_m); needs n + m >= 3 (so_2 is a torus, no diagram).
pub fn bdi_diagram(n: usize, m: usize) -> Result<SatakeDiagram, String> {
    if n < 1 || m < 1 || n + m < 3 {
        return Err("bdi requires n, m >= 1 and n + m >= 3".into());
    }
    let big = n + m;
    let r = n.min(m);
    if big % 2 == 1 {
        // B_l with the first r nodes white.
        let l = (big - 1) / 2;
        let mut edges = chain_edges(l);
        if let Some(last) = edges.last_mut() {
            last.mult = 2; // points at the short-root end node
        }
        let colors = (0..l).map(|i| if i < r { Color::White } else { Color::Black }).collect();
        SatakeDiagram::new(colors, edges, vec![])
    } else {
        // D_l: fork nodes l-2, l-1 both attached to l-3.
        let l = big / 2;
        let mut edges = chain_edges(l - 1);
        if l >= 3 {
            edges.push(Edge { a: l - 3, b: l - 1, mult: 1 });
        }
        let (colors, arrows): (Vec<Color>, Vec<(usize, usize)>) = if r == l {
            ((0..l).map(|_| Color::White).collect(), vec![])
        } else if r == l - 1 {
            // both fork nodes white and swapped by the involution
            ((0..l).map(|_| Color::White).collect(), vec![(l - 2, l - 1)])
        } else {
            ((0..l).map(|i| if i < r { Color::White } else { Color::Black }).collect(), vec![])
        };
        SatakeDiagram::new(colors, edges, arrows)
    }
}

/// (so_{2l}, gl_l) on D_l: alternating colors along the chain; for odd l the
/// fork pair is white and arrow-connected, for even l it is one of each.
pub fn diii_diagram(l: usize) -> Result<SatakeDiagram, String> {
    if l < 2 {
        return Err("diii requires l >= 2".into());
    }
    let mut edges = chain_edges(l - 1);
    if l >= 3 {
        edges.push(Edge { a: l - 3, b: l - 1, mult: 1 });
    }
    let mut colors: Vec<Color> = (0..l - 2)
        .map(|i| if i % 2 == 0 { Color::Black } else { Color::White })
        .collect();
    if l % 2 == 0 {
        colors.push(Color::Black);
        colors.push(Color::White);
        SatakeDiagram::new(colors, edges, vec![])
    } else {
        colors.push(Color::White);
        colors.push(Color::White);
        SatakeDiagram::new(colors, edges, vec![(l - 2, l - 1)])
    }
}

/// (sp_{2n+2m}, sp_{2n} + sp_{2m}), n >= m, on C_{n+m}: white nodes at the
/// even positions 2, 4, ..., 2m.
pub fn cii_diagram(n: usize, m: usize) -> Result<SatakeDiagram, String> {
    if m < 1 || n < m {
        return Err("cii requires n >= m >= 1".into());
    }
    let l = n + m;
    let mut edges = chain_edges(l);
    // C_l: the end node is long, arrow points back into the chain.
    if let Some(last) = edges.last_mut() {
        *last = Edge { a: l - 1, b: l - 2, mult: 2 };
    }
    let colors = (0..l)
        .map(|i| if i % 2 == 1 && i < 2 * m { Color::White } else { Color::Black })
        .collect();
    SatakeDiagram::new(colors, edges, vec![])
}

// ---------------------------------------------------------------------------
// Catalog.

const CATALOG_DATA: &str = include_str!("../data/satake_catalog.v1.txt");

fn parse_catalog() -> Vec<(String, SatakeDiagram)> {
    let mut out = Vec::new();
    let mut name: Option<String> = None;
    let mut colors: Vec<Color> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    let pair = |tok: &str| -> (usize, usize) {
        let (a, b) = tok.split_once('-').expect("catalog pair token");
        let a: usize = a.parse().expect("catalog index");
        let b: usize = b.parse().expect("catalog index");
        (a - 1, b - 1)
    };
    for line in CATALOG_DATA.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "pair" => name = Some(toks.next().expect("pair name").to_string()),
            "nodes" => {}
            "colors" => {
                colors = toks
                    .map(|t| if t == "w" { Color::White } else { Color::Black })
                    .collect();
            }
            "edges" => {
                edges = toks
                    .map(|t| {
                        let (a, b) = pair(t);
                        Edge { a, b, mult: 1 }
                    })
                    .collect();
            }
            "arrows" => arrows = toks.map(pair).collect(),
            "end" => {
                let d = SatakeDiagram::new(
                    std::mem::take(&mut colors),
                    std::mem::take(&mut edges),
                    std::mem::take(&mut arrows),
                )
                .expect("catalog entry must validate");
                out.push((name.take().expect("record without name"), d));
            }
            other => panic!("unknown catalog directive {other}"),
        }
    }
    out
}

fn normalize_label(label: &str) -> String {
    label
        .to_lowercase()
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | ' ' | ','))
        .map(|c| if c == '\u{2295}' { '+' } else { c })
        .collect()
}

/// Diagram for a catalog label; fixed entries first, then the classical
/// family patterns sl(p+q)/sl p+sl q+t1, so(n+m)/so n+so m, so 2l/gl l,
/// sp(2n+2m)/sp 2n+sp 2m.
pub fn catalog(label: &str) -> Result<SatakeDiagram, String> {
    let key = normalize_label(label);
    for (name, d) in parse_catalog() {
        if name == key {
            return Ok(d);
        }
    }
    parametric_from_label(&key).ok_or_else(|| format!("unknown pair label {label:?}"))
}

fn alg(tok: &str) -> Option<(&str, usize)> {
    let pos = tok.find(|c: char| c.is_ascii_digit())?;
    let n: usize = tok[pos..].parse().ok()?;
    Some((&tok[..pos], n))
}

fn parametric_from_label(key: &str) -> Option<SatakeDiagram> {
    let (lhs, rhs) = key.split_once('/')?;
    let (la, ln) = alg(lhs)?;
    let parts: Vec<(&str, usize)> = rhs.split('+').map(alg).collect::<Option<_>>()?;
    match (la, parts.as_slice()) {
        ("sl", [("sl", p), ("sl", q), ("t", 1)]) if p + q == ln => aiii_diagram(*p, *q).ok(),
        ("so", [("so", n), ("so", m)]) if n + m == ln => bdi_diagram(*n, *m).ok(),
        ("so", [("gl", l)]) if 2 * l == ln => diii_diagram(*l).ok(),
        ("sp", [("sp", a), ("sp", b)]) if a + b == ln && a % 2 == 0 && b % 2 == 0 => {
            cii_diagram((a / 2).max(b / 2), (a / 2).min(b / 2)).ok()
        }
        _ => None,
    }
}

/// Catalog label of a diagram, up to isomorphism; None for non-catalog shapes.
pub fn identify(d: &SatakeDiagram) -> Option<PairLabel> {
    parse_catalog()
        .into_iter()
        .find(|(_, cand)| cand.is_isomorphic(d))
        .map(|(name, _)| PairLabel { name })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn white(n: usize) -> Vec<Color> {
        vec![Color::White; n]
    }

    #[test]
    fn rank_basics() {
        let all_black =
            SatakeDiagram::new(vec![Color::Black; 3], chain_edges(3), vec![]).unwrap();
        assert_eq!(all_black.rank(), 0);
        let e6 = catalog("E6/(sl6+sl2)").unwrap();
        assert_eq!(e6.len(), 6);
        assert_eq!(e6.white_count(), 6);
        assert_eq!(e6.arrows().len(), 2);
        assert_eq!(e6.rank(), 4);
        // sp_{10} with (n, m) = (3, 2)
        assert_eq!(cii_diagram(3, 2).unwrap().rank(), 2);
    }

    #[test]
    fn validation_rejects_bad_diagrams() {
        // cycle
        let cyc = SatakeDiagram::new(
            white(3),
            vec![
                Edge { a: 0, b: 1, mult: 1 },
                Edge { a: 1, b: 2, mult: 1 },
                Edge { a: 0, b: 2, mult: 1 },
            ],
            vec![],
        );
        assert!(cyc.is_err());
        // arrow on a black node
        let bad_arrow = SatakeDiagram::new(
            vec![Color::White, Color::Black],
            vec![],
            vec![(0, 1)],
        );
        assert!(bad_arrow.is_err());
        // two branch nodes (affine D shape)
        let mut edges = chain_edges(4);
        edges.push(Edge { a: 1, b: 4, mult: 1 });
        edges.push(Edge { a: 2, b: 5, mult: 1 });
        assert!(SatakeDiagram::new(white(6), edges, vec![]).is_err());
        // double edge in the middle of a 5-chain
        let mut edges = chain_edges(5);
        edges[2].mult = 2;
        assert!(SatakeDiagram::new(white(5), edges, vec![]).is_err());
        // ... but fine in a 4-chain (F4) or at the end (B/C)
        let mut f4 = chain_edges(4);
        f4[1].mult = 2;
        assert!(SatakeDiagram::new(white(4), f4, vec![]).is_ok());
        let mut b5 = chain_edges(5);
        b5[3].mult = 2;
        assert!(SatakeDiagram::new(white(5), b5, vec![]).is_ok());
    }

    #[test]
    fn subdiagram_step_basics() {
        let single = SatakeDiagram::new(white(1), vec![], vec![]).unwrap();
        let step = single.subdiagram_step();
        assert_eq!(step.len(), 1);
        assert!(step[0].is_empty());

        let arrow_pair = SatakeDiagram::new(white(2), vec![], vec![(0, 1)]).unwrap();
        let step = arrow_pair.subdiagram_step();
        assert_eq!(step.len(), 1);
        assert!(step[0].is_empty());

        let all_black =
            SatakeDiagram::new(vec![Color::Black; 2], chain_edges(2), vec![]).unwrap();
        assert!(all_black.subdiagram_step().is_empty());
    }

    #[test]
    fn rank_drops_by_one_per_step() {
        for label in ["e6/sl6+sl2", "e7/e6+t1", "e8/e7+sl2", "so8/so5+so3"] {
            let d = catalog(label).unwrap();
            for s in d.subdiagram_step() {
                assert_eq!(s.rank() + 1, d.rank(), "{label}");
            }
        }
    }

    #[test]
    fn all_subdiagrams_closure() {
        let empty = SatakeDiagram::empty();
        assert_eq!(empty.all_subdiagrams().len(), 1);

        let single = SatakeDiagram::new(white(1), vec![], vec![]).unwrap();
        assert_eq!(single.all_subdiagrams().len(), 2);

        let e6 = catalog("e6/sl6+sl2").unwrap();
        let subs = e6.all_subdiagrams();
        assert!(subs.iter().any(|d| d.is_empty()));
        assert!(subs.iter().any(|d| d.is_isomorphic(&e6)));
        // closure property
        for d in &subs {
            for s in d.subdiagram_step() {
                assert!(subs.iter().any(|r| r.is_isomorphic(&s)));
            }
        }
    }

    #[test]
    fn e6_has_seven_connected_proper_subdiagrams() {
        let e6 = catalog("e6/sl6+sl2").unwrap();
        let subs = e6.all_subdiagrams();
        let connected: Vec<&SatakeDiagram> = subs
            .iter()
            .filter(|d| !d.is_empty() && d.is_connected() && !d.is_isomorphic(&e6))
            .collect();
        assert_eq!(connected.len(), 7);
        let mut names: Vec<String> = connected
            .iter()
            .map(|d| identify(d).expect("every class is in the catalog").name)
            .collect();
        names.sort();
        let mut expected = vec![
            "sl6/sl3+sl3+t1",
            "so8/so5+so3",
            "sl3+sl3/sl3",
            "sl4/sl2+sl2+t1",
            "sl2+sl2/sl2",
            "sl3/so3",
            "sl2/so2",
        ];
        expected.sort();
        assert_eq!(names, expected);
    }

    #[test]
    fn identify_examples() {
        let single = SatakeDiagram::new(white(1), vec![], vec![]).unwrap();
        assert_eq!(identify(&single).unwrap().name, "sl2/so2");
        let a2 = SatakeDiagram::new(white(2), chain_edges(2), vec![]).unwrap();
        assert_eq!(identify(&a2).unwrap().name, "sl3/so3");
        let unknown =
            SatakeDiagram::new(vec![Color::Black], vec![], vec![]).unwrap();
        assert!(identify(&unknown).is_none());
    }

    #[test]
    fn catalog_fixed_entries() {
        let e7 = catalog("E7/(E6+t1)").unwrap();
        assert_eq!(e7.white_count(), 3);
        assert_eq!(e7.len() - e7.white_count(), 4);
        assert!(e7.arrows().is_empty());
        assert_eq!(e7.rank(), 3);

        let e7b = catalog("e7/so12+sl2").unwrap();
        assert_eq!(e7b.rank(), 4);
        let e8 = catalog("e8/e7+sl2").unwrap();
        assert_eq!(e8.rank(), 4);
        assert!(catalog("f4/who+knows").is_err());
    }

    #[test]
    fn catalog_parametric_labels() {
        // so(4n)/gl(2n) at n=2: alternating colors, fork split black/white,
        // no arrows.
        let d = catalog("so8/gl4").unwrap();
        assert!(d.is_isomorphic(&diii_diagram(4).unwrap()));
        assert!(d.arrows().is_empty());
        assert_eq!(d.rank(), 2);
        assert_eq!(d.white_count(), 2);

        assert!(catalog("sl5/sl2+sl3+t1").unwrap().is_isomorphic(&aiii_diagram(2, 3).unwrap()));
        assert!(catalog("so7/so3+so4").unwrap().is_isomorphic(&bdi_diagram(3, 4).unwrap()));
        assert!(catalog("sp10/sp6+sp4").unwrap().is_isomorphic(&cii_diagram(3, 2).unwrap()));
    }

    #[test]
    fn bdi_rank_is_min() {
        for n in 1..=6usize {
            for m in 1..=6usize {
                if n + m < 3 {
                    continue;
                }
                let d = bdi_diagram(n, m).unwrap();
                assert_eq!(d.rank(), n.min(m), "bdi({n},{m})");
            }
        }
    }

    #[test]
    fn diii_and_aiii_ranks() {
        for l in 2..=9usize {
            assert_eq!(diii_diagram(l).unwrap().rank(), l / 2);
        }
        for p in 1..=4usize {
            for q in p..=5usize {
                assert_eq!(aiii_diagram(p, q).unwrap().rank(), p);
                assert_eq!(aiii_diagram(q, p).unwrap().rank(), p);
            }
        }
    }

    #[test]
    fn isomorphism_respects_structure() {
        // same shape, different labeling
        let a = catalog("sl3+sl3/sl3").unwrap();
        let b = SatakeDiagram::new(
            white(4),
            vec![Edge { a: 0, b: 2, mult: 1 }, Edge { a: 1, b: 3, mult: 1 }],
            vec![(0, 1), (2, 3)],
        )
        .unwrap();
        assert!(a.is_isomorphic(&b));
        // arrows matter
        let c = SatakeDiagram::new(
            white(4),
            vec![Edge { a: 0, b: 1, mult: 1 }, Edge { a: 2, b: 3, mult: 1 }],
            vec![(0, 2), (1, 3)],
        )
        .unwrap();
        let no_arrows = SatakeDiagram::new(
            white(4),
            vec![Edge { a: 0, b: 1, mult: 1 }, Edge { a: 2, b: 3, mult: 1 }],
            vec![],
        )
        .unwrap();
        assert!(!c.is_isomorphic(&no_arrows));
        // colors matter
        let bw = SatakeDiagram::new(vec![Color::White, Color::Black], chain_edges(2), vec![])
            .unwrap();
        let wb = SatakeDiagram::new(vec![Color::Black, Color::White], chain_edges(2), vec![])
            .unwrap();
        assert!(bw.is_isomorphic(&wb));
        let ww = SatakeDiagram::new(white(2), chain_edges(2), vec![]).unwrap();
        assert!(!bw.is_isomorphic(&ww));
        // edge direction matters
        let b2 = SatakeDiagram::new(white(2), vec![Edge { a: 0, b: 1, mult: 2 }], vec![]).unwrap();
        let c2 = SatakeDiagram::new(white(2), vec![Edge { a: 1, b: 0, mult: 2 }], vec![]).unwrap();
        assert!(b2.is_isomorphic(&c2)); // relabeling flips it back
        let mut b3 = chain_edges(3);
        b3[1].mult = 2;
        let mut c3 = chain_edges(3);
        c3[1] = Edge { a: 2, b: 1, mult: 2 };
        let b3 = SatakeDiagram::new(white(3), b3, vec![]).unwrap();
        let c3 = SatakeDiagram::new(white(3), c3, vec![]).unwrap();
        assert!(!b3.is_isomorphic(&c3));
    }

    #[test]
    fn connectivity_counts_arrows() {
        let arrowed = SatakeDiagram::new(white(2), vec![], vec![(0, 1)]).unwrap();
        assert!(arrowed.is_connected());
        let plain = SatakeDiagram::new(white(2), vec![], vec![]).unwrap();
        assert!(!plain.is_connected());
    }
}
