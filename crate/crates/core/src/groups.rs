//! Finite groups as Cayley tables, subgroups, cosets and double cosets.
//!
//! Permutations compose right to left: `(στ)(x) = σ(τ(x))`. With this
//! convention `p = (1 2)(2 3) = (1 2 3)` in S3.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    schema: String,
    order: usize,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl TryFrom<GroupRepr> for FiniteGroup {
    type Error = Error;
    fn try_from(r: GroupRepr) -> Result<Self> {
        if r.order != r.labels.len() {
            return Err(Error::InvalidGroup("order does not match label count".into()));
        }
        let g = FiniteGroup::from_table(r.labels, r.table)?;
        if g.identity != r.identity {
            return Err(Error::InvalidGroup("declared identity is not the identity".into()));
        }
        Ok(g)
    }
}

impl From<FiniteGroup> for GroupRepr {
    fn from(g: FiniteGroup) -> Self {
        GroupRepr {
            schema: crate::SCHEMA.to_string(),
            order: g.order(),
            identity: g.identity,
            labels: g.labels,
            table: g.table,
        }
    }
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("Cayley table is not closed".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGroup("duplicate labels".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", labels[x])))?;
            inverses.push(y);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverses })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("Z0".into()));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(labels, table)
    }

    /// S_n with elements in lexicographic order of their one-line notation.
    pub fn symmetric(n: usize) -> Result<Self> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidGroup(format!("S{n} is not supported (1 ≤ n ≤ 5)")));
        }
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&x| s[x]).collect())).collect())
            .collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        FiniteGroup::from_table(labels, table)
    }

    /// Dihedral group of order `2n`, elements `r^i s^j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("D{n} is not supported (n ≥ 2)")));
        }
        let idx = |i: usize, j: usize| i + n * j;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for (a, row) in table.iter_mut().enumerate() {
            let (i, j) = (a % n, a / n);
            for (b, out) in row.iter_mut().enumerate() {
                let (k, l) = (b % n, b / n);
                let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                *out = idx(rot, (j + l) % 2);
            }
        }
        let labels = (0..2 * n)
            .map(|a| {
                let (i, j) = (a % n, a / n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{i}"),
                };
                match (r.is_empty(), j) {
                    (true, 0) => "e".to_string(),
                    (false, 0) => r,
                    (_, _) => format!("{r}s"),
                }
            })
            .collect();
        FiniteGroup::from_table(labels, table)
    }

    pub fn klein_four() -> Self {
        let z2 = FiniteGroup::cyclic(2).expect("Z2");
        FiniteGroup::direct_product(&z2, &z2)
    }

    /// `G × H` with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order();
        let n = g.order() * m;
        let labels = (0..n).map(|x| format!("({},{})", g.labels[x / m], h.labels[x % m])).collect();
        let table = (0..n)
            .map(|x| (0..n).map(|y| g.op(x / m, y / m) * m + h.op(x % m, y % m)).collect())
            .collect();
        FiniteGroup::from_table(labels, table).expect("product of groups is a group")
    }

    /// `Z<n>`, `S<n>`, `D<n>`, `V4`, or products such as `Z2xZ3`.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.trim();
        if name.contains(['x', '×']) {
            let mut parts = name.split(['x', '×']);
            let first = FiniteGroup::preset(parts.next().unwrap_or(""))?;
            return parts.try_fold(first, |acc, p| Ok(FiniteGroup::direct_product(&acc, &FiniteGroup::preset(p)?)));
        }
        if name == "V4" || name.eq_ignore_ascii_case("klein") {
            return Ok(FiniteGroup::klein_four());
        }
        let unknown = || Error::UnknownPreset(format!("group {name:?}"));
        let (kind, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            "Z" | "C" => FiniteGroup::cyclic(n),
            "S" => FiniteGroup::symmetric(n),
            "D" => FiniteGroup::dihedral(n),
            _ => Err(unknown()),
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Looks up a label, accepting any spelling of a cycle (`(2,1)`, `(1 2)`)
    /// and `e` or `()` for the identity.
    pub fn find(&self, label: &str) -> Option<usize> {
        let norm = label.split_whitespace().collect::<Vec<_>>().join(" ");
        if let Some(i) = self.labels.iter().position(|l| *l == norm) {
            return Some(i);
        }
        if norm == "e" || norm == "()" {
            return Some(self.identity);
        }
        let canon = canonical_cycle_label(&norm)?;
        self.labels.iter().position(|l| *l == canon)
    }

    pub fn find_all(&self, labels: &[String]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| self.find(l).ok_or_else(|| Error::Parse(format!("no element labelled {l:?}"))))
            .collect()
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_generate(&self, gens: &[usize]) -> Subgroup {
        let mut members: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup { members: members.into_iter().collect() }
    }

    pub fn subgroup_from_labels(&self, labels: &[String]) -> Result<Subgroup> {
        Ok(self.subgroup_generate(&self.find_all(labels)?))
    }

    /// Checks a candidate subset is a subgroup.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        let closed = set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.op(a, b))));
        if !closed {
            return Err(Error::InvalidGroup("subset is not a subgroup".into()));
        }
        Ok(Subgroup { members: set.into_iter().collect() })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.order()).collect() }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { members: vec![self.identity] }
    }

    pub fn left_cosets(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        self.partition(|g| h.members.iter().map(|&x| self.op(g, x)).collect())
    }

    pub fn right_cosets(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        self.partition(|g| h.members.iter().map(|&x| self.op(x, g)).collect())
    }

    /// Double cosets `HgK`, ordered by their smallest element.
    pub fn double_cosets(&self, h: &Subgroup, k: &Subgroup) -> Vec<Vec<usize>> {
        self.partition(|g| {
            h.members.iter().flat_map(|&x| k.members.iter().map(move |&y| self.op(self.op(x, g), y))).collect()
        })
    }

    fn partition(&self, class_of: impl Fn(usize) -> BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let class = class_of(g);
            for &x in &class {
                seen[x] = true;
            }
            out.push(class.into_iter().collect());
        }
        out
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.order()).all(|g| h.members.iter().all(|&x| h.contains(self.op(self.op(g, x), self.inv(g)))))
    }

    pub fn set_products(&self, h: &Subgroup, k: &Subgroup) -> SetProducts {
        let prod = |a: &Subgroup, b: &Subgroup| -> Vec<usize> {
            let s: BTreeSet<usize> =
                a.members.iter().flat_map(|&x| b.members.iter().map(move |&y| self.op(x, y))).collect();
            s.into_iter().collect()
        };
        SetProducts {
            hk: prod(h, k),
            kh: prod(k, h),
            intersection: h.members.iter().copied().filter(|&x| k.contains(x)).collect(),
        }
    }

    /// The subgroup as a group in its own right, with the embedding.
    pub fn restrict(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let m = &h.members;
        let pos = |x: usize| m.iter().position(|&y| y == x).expect("closed subgroup");
        let labels = m.iter().map(|&x| self.labels[x].clone()).collect();
        let table = m.iter().map(|&a| m.iter().map(|&b| pos(self.op(a, b))).collect()).collect();
        (FiniteGroup::from_table(labels, table).expect("subgroup is a group"), m.clone())
    }

    pub fn set_inverse(&self, set: &[usize]) -> Vec<usize> {
        let s: BTreeSet<usize> = set.iter().map(|&x| self.inv(x)).collect();
        s.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetProducts {
    pub hk: Vec<usize>,
    pub kh: Vec<usize>,
    pub intersection: Vec<usize>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycle notation on `1..=n`, each cycle starting at its least point.
fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Parses a product of cycles and returns its canonical label.
pub fn canonical_cycle_label(s: &str) -> Option<String> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body_end = rest.find(')')?;
        if !rest.starts_with('(') {
            return None;
        }
        let body = &rest[1..body_end];
        let pts: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().ok().filter(|&v: &usize| v >= 1))
            .collect::<Option<_>>()?;
        cycles.push(pts);
        rest = rest[body_end + 1..].trim_start();
    }
    let n = cycles.iter().flatten().copied().max().unwrap_or(0);
    let mut perm: Vec<usize> = (0..n).collect();
    // Rightmost cycle acts first.
    for c in cycles.iter().rev() {
        let distinct: BTreeSet<_> = c.iter().collect();
        if distinct.len() != c.len() {
            return None;
        }
        let mut step: Vec<usize> = (0..n).collect();
        for (i, &x) in c.iter().enumerate() {
            step[x - 1] = c[(i + 1) % c.len()] - 1;
        }
        perm = perm.iter().map(|&x| step[x]).collect();
    }
    Some(cycle_label(&perm))
}
