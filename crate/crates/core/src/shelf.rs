//! Finite operation tables on `{1..N}`: law checks with counterexamples,
//! Laver tables, classical example structures, divisibility and the
//! comparison property.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{Term, View};

/// A binary operation on `{1..n}`; `rows[a-1][b-1] = a ∘ b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShelfTable {
    rows: Vec<Vec<u32>>,
}

impl ShelfTable {
    /// Tabulates `f` on `{1..n}`; values must lie in `1..=n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<ShelfTable> {
        let rows = (1..=n)
            .map(|a| (1..=n).map(|b| f(a, b) as u32).collect())
            .collect();
        ShelfTable::from_rows(rows)
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<ShelfTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::BadTable(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    r.len()
                )));
            }
            if let Some(v) = r.iter().find(|&&v| v == 0 || v as usize > n) {
                return Err(Error::BadTable(format!(
                    "entry {v} in row {} out of range",
                    i + 1
                )));
            }
        }
        Ok(ShelfTable { rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `a ∘ b`, both 1-based.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.rows[a - 1][b - 1] as usize
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Evaluates a term with `x_i` sent to `value(i)`.
    pub fn eval(&self, t: &Term, value: &impl Fn(u32) -> usize) -> Result<usize> {
        match t.view() {
            View::Var(v) => Ok(value(v)),
            View::App(crate::term::Op::Bwd, _, _) => Err(Error::BwdNotSupported),
            View::App(_, l, r) => Ok(self.op(self.eval(l, value)?, self.eval(r, value)?)),
        }
    }
}

impl fmt::Display for ShelfTable {
    /// The file format: `N`, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.len())?;
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for ShelfTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<ShelfTable> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::BadTable("missing size line".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::BadTable(format!("bad size `{header}`")))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| {
                        tok.parse::<u32>()
                            .map_err(|_| Error::BadTable(format!("bad entry `{tok}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(Error::BadTable(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        ShelfTable::from_rows(rows)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Law {
    /// `x∘(y∘z) = (x∘y)∘(x∘z)`.
    LeftSd,
    /// `(x∘y)∘z = (x∘z)∘(y∘z)`.
    RightSd,
    Idempotent,
    LeftBijective,
    RightBijective,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::LeftSd,
        Law::RightSd,
        Law::Idempotent,
        Law::LeftBijective,
        Law::RightBijective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::LeftSd => "ld",
            Law::RightSd => "rd",
            Law::Idempotent => "idem",
            Law::LeftBijective => "left-bij",
            Law::RightBijective => "right-bij",
        }
    }

    fn arity(self) -> usize {
        match self {
            Law::Idempotent => 1,
            _ => 3,
        }
    }

    /// Whether `args` witnesses a failure of the law in `s`. For the
    /// bijectivity laws `args = (a, b, c)` with `b < c` colliding under the
    /// translation by `a`.
    pub fn violated(self, s: &ShelfTable, args: &[usize]) -> bool {
        let o = |a, b| s.op(a, b);
        match (self, args) {
            (Law::LeftSd, &[x, y, z]) => o(x, o(y, z)) != o(o(x, y), o(x, z)),
            (Law::RightSd, &[x, y, z]) => o(o(x, y), z) != o(o(x, z), o(y, z)),
            (Law::Idempotent, &[x]) => o(x, x) != x,
            (Law::LeftBijective, &[a, b, c]) => b < c && o(a, b) == o(a, c),
            (Law::RightBijective, &[a, b, c]) => b < c && o(b, a) == o(c, a),
            _ => false,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Law> {
        Ok(match s.trim() {
            "ld" => Law::LeftSd,
            "rd" => Law::RightSd,
            "idem" | "idempotent" => Law::Idempotent,
            "left-bij" => Law::LeftBijective,
            "right-bij" | "rack" => Law::RightBijective,
            other => return Err(Error::InvalidParams(format!("unknown law `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    /// Names of the entries of `counterexample`.
    pub variables: Vec<String>,
    pub counterexample: Option<Vec<usize>>,
}

/// Odometer over `{1..n}^k` in lexicographic order.
fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur = if n == 0 { None } else { Some(vec![1; k]) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = cur.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n {
                next[i] += 1;
                next[i + 1..].iter_mut().for_each(|v| *v = 1);
                break;
            }
        }
        Some(out)
    })
}

/// Exhaustive check; the counterexample is the first in lexicographic order.
pub fn check_law(s: &ShelfTable, law: Law) -> LawReport {
    let counterexample = tuples(s.len(), law.arity()).find(|t| law.violated(s, t));
    let variables = match law {
        Law::Idempotent => vec!["x"],
        Law::LeftBijective | Law::RightBijective => vec!["a", "b", "c"],
        _ => vec!["x", "y", "z"],
    };
    LawReport {
        law: law.name().into(),
        holds: counterexample.is_none(),
        variables: variables.into_iter().map(String::from).collect(),
        counterexample,
    }
}

pub const LAVER_CAP: u32 = 13;

/// The unique operation on `{1..n}` with `a∘1 = a+1 (mod n)` and
/// `x∘(y∘1) = (x∘y)∘(x∘1)`, built row by row from the top.
pub fn unique_extension(n: usize) -> Result<ShelfTable> {
    if n == 0 {
        return Err(Error::InvalidParams("size must be positive".into()));
    }
    let mut rows = vec![vec![0u32; n]; n];
    for a in (1..=n).rev() {
        rows[a - 1][0] = (a % n + 1) as u32;
        for b in 1..n {
            let c = rows[a - 1][b - 1] as usize;
            // Rows above `a` are complete and `c > a` unless `a = n`.
            let next = if a == n {
                (c % n + 1) as u32
            } else {
                rows[c - 1][a]
            };
            rows[a - 1][b] = next;
        }
    }
    let t = ShelfTable { rows };
    for x in 1..=n {
        for y in 1..n {
            assert_eq!(
                t.op(x, y + 1),
                t.op(t.op(x, y), t.op(x, 1)),
                "defining law fails at ({x}, {y})"
            );
        }
    }
    Ok(t)
}

/// The Laver table `A_k` on `2^k` elements.
pub fn laver_table(k: u32) -> Result<ShelfTable> {
    if k > LAVER_CAP {
        return Err(Error::CapExceeded {
            requested: k,
            cap: LAVER_CAP,
        });
    }
    unique_extension(1 << k)
}

/// Small groups given by multiplication tables on `0..order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    /// The symmetric group on `d` points, elements in lexicographic order.
    Sym(usize),
    /// `Z/n` under addition.
    Cyclic(usize),
}

pub const MAX_GROUP_ORDER: usize = 120;

struct GroupTable {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..d {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl Group {
    fn table(self) -> Result<GroupTable> {
        let elems: Vec<Vec<usize>> = match self {
            Group::Sym(d) if (1..=5).contains(&d) => permutations(d),
            Group::Cyclic(n) if (1..=MAX_GROUP_ORDER).contains(&n) => {
                (0..n).map(|i| vec![i]).collect()
            }
            _ => {
                return Err(Error::InvalidParams(format!(
                    "group {self:?} has order outside 1..={MAX_GROUP_ORDER}"
                )))
            }
        };
        let product = |p: &Vec<usize>, q: &Vec<usize>| -> Vec<usize> {
            match self {
                // Apply `p` first, then `q`.
                Group::Sym(_) => p.iter().map(|&i| q[i]).collect(),
                Group::Cyclic(n) => vec![(p[0] + q[0]) % n],
            }
        };
        let index = |p: &Vec<usize>| elems.binary_search(p).expect("closed under product");
        let mul: Vec<Vec<usize>> = elems
            .iter()
            .map(|p| elems.iter().map(|q| index(&product(p, q))).collect())
            .collect();
        let identity = (0..elems.len()).find(|&e| mul[e][e] == e).unwrap();
        let inv = (0..elems.len())
            .map(|a| (0..elems.len()).find(|&b| mul[a][b] == identity).unwrap())
            .collect();
        Ok(GroupTable { mul, inv })
    }
}

/// Which conjugation: `a ◁ b = b⁻¹ a b` or `a ◁ b = a b a⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Example {
    /// `a ∘ b = f(a)`, with `f` given by its values on `1..=n`.
    Trivial(Vec<usize>),
    /// `a ◁ b = a + 1 (mod n)`.
    Cyclic(usize),
    /// Subsets of `k` atoms with `a ◁ b = a ∨ ¬b`.
    Boolean(u32),
    /// `a ◁ b = t a + (1 - t) b` in `Z/m`.
    Alexander {
        m: usize,
        t: i64,
    },
    Conj {
        group: Group,
        side: Side,
    },
    /// `a ◁ b = b a⁻¹ b`.
    Core(Group),
}

pub fn make_example(kind: &Example) -> Result<ShelfTable> {
    let bad = |m: &str| Err(Error::InvalidParams(m.into()));
    match kind {
        Example::Trivial(f) => {
            if f.is_empty() || f.iter().any(|&v| v == 0 || v > f.len()) {
                return bad("trivial shelf needs a map {1..n} -> {1..n}");
            }
            ShelfTable::from_fn(f.len(), |a, _| f[a - 1])
        }
        Example::Cyclic(n) => {
            if *n == 0 {
                return bad("cyclic rack needs n >= 1");
            }
            ShelfTable::from_fn(*n, |a, _| a % n + 1)
        }
        Example::Boolean(k) => {
            if *k > 8 {
                return bad("boolean shelf limited to 8 atoms");
            }
            let full = (1usize << k) - 1;
            ShelfTable::from_fn(1 << k, |a, b| ((a - 1) | (!(b - 1) & full)) + 1)
        }
        Example::Alexander { m, t } => {
            if *m == 0 || *m > 1 << 12 {
                return bad("alexander spindle needs 1 <= m <= 4096");
            }
            let m = *m as i64;
            let t = t.rem_euclid(m);
            ShelfTable::from_fn(m as usize, |a, b| {
                let (a, b) = (a as i64 - 1, b as i64 - 1);
                ((t * a + (1 - t) * b).rem_euclid(m) + 1) as usize
            })
        }
        Example::Conj { group, side } => {
            let g = group.table()?;
            ShelfTable::from_fn(g.mul.len(), |a, b| {
                let (a, b) = (a - 1, b - 1);
                let v = match side {
                    Side::Right => g.mul[g.mul[g.inv[b]][a]][b],
                    Side::Left => g.mul[g.mul[a][b]][g.inv[a]],
                };
                v + 1
            })
        }
        Example::Core(group) => {
            let g = group.table()?;
            ShelfTable::from_fn(g.mul.len(), |a, b| {
                let (a, b) = (a - 1, b - 1);
                g.mul[g.mul[b][g.inv[a]]][b] + 1
            })
        }
    }
}

/// How variables of an equation are valued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    /// Every assignment of the occurring variables.
    All,
    Fixed(BTreeMap<u32, usize>),
}

/// Evaluates `lhs = rhs` in `s`. Variables are reported as `x1, x2, ...`.
pub fn check_equation(
    s: &ShelfTable,
    lhs: &Term,
    rhs: &Term,
    mode: &Assignment,
) -> Result<LawReport> {
    if !lhs.is_fwd_only() || !rhs.is_fwd_only() {
        return Err(Error::BwdNotSupported);
    }
    let mut vars = lhs.variables();
    vars.extend(rhs.variables());
    vars.sort_unstable();
    vars.dedup();
    let law = format!("{lhs} = {rhs}");
    let variables = vars.iter().map(|v| format!("x{v}")).collect();
    let fails = |vals: &[usize]| -> Result<bool> {
        let value = |v: u32| vals[vars.binary_search(&v).unwrap()];
        Ok(s.eval(lhs, &value)? != s.eval(rhs, &value)?)
    };
    let counterexample = match mode {
        Assignment::All => {
            let mut found = None;
            for vals in tuples(s.len(), vars.len()) {
                if fails(&vals)? {
                    found = Some(vals);
                    break;
                }
            }
            found
        }
        Assignment::Fixed(map) => {
            let vals = vars
                .iter()
                .map(|v| match map.get(v) {
                    None => Err(Error::UnboundVariable(*v)),
                    Some(&a) if a == 0 || a > s.len() => Err(Error::InvalidParams(format!(
                        "value {a} for x{v} out of range"
                    ))),
                    Some(&a) => Ok(a),
                })
                .collect::<Result<Vec<_>>>()?;
            fails(&vals)?.then_some(vals)
        }
    };
    Ok(LawReport {
        law,
        holds: counterexample.is_none(),
        variables,
        counterexample,
    })
}

/// `a → b` iff `a ∘ x = b` for some `x`; adjacency lists over `1..=n`,
/// index 0 unused.
pub fn division_digraph(s: &ShelfTable) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); s.len() + 1];
    for (a, targets) in adj.iter_mut().enumerate().skip(1) {
        *targets = (1..=s.len()).map(|x| s.op(a, x)).collect();
        targets.sort_unstable();
        targets.dedup();
    }
    adj
}

/// Whether the division relation has no cycle, loops included.
pub fn is_acyclic(s: &ShelfTable) -> bool {
    let adj = division_digraph(s);
    // Kahn's algorithm: a cycle leaves some vertex with positive in-degree.
    let n = s.len();
    let mut indeg = vec![0usize; n + 1];
    for targets in &adj {
        for &b in targets {
            indeg[b] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (1..=n).filter(|&a| indeg[a] == 0).collect();
    let mut removed = 0;
    while let Some(a) = queue.pop_front() {
        removed += 1;
        for &b in &adj[a] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                queue.push_back(b);
            }
        }
    }
    removed == n
}

/// The closure of `{g}` under the operation.
pub fn generated_by(s: &ShelfTable, g: usize) -> Vec<usize> {
    let mut inside = vec![false; s.len() + 1];
    inside[g] = true;
    let mut elems = vec![g];
    let mut i = 0;
    while i < elems.len() {
        let a = elems[i];
        for j in 0..=i {
            let b = elems[j];
            for c in [s.op(a, b), s.op(b, a)] {
                if !inside[c] {
                    inside[c] = true;
                    elems.push(c);
                }
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    elems
}

/// Checks that any two distinct elements are comparable under the
/// transitive closure of division.
pub fn check_comparison(s: &ShelfTable, g: usize) -> Result<LawReport> {
    let n = s.len();
    if g == 0 || g > n || generated_by(s, g).len() != n {
        return Err(Error::NotMonogenerated(g));
    }
    let adj = division_digraph(s);
    let reach: Vec<Vec<bool>> = (0..=n)
        .map(|a| {
            let mut seen = vec![false; n + 1];
            if a == 0 {
                return seen;
            }
            let mut stack: Vec<usize> = adj[a].clone();
            while let Some(b) = stack.pop() {
                if !seen[b] {
                    seen[b] = true;
                    stack.extend(&adj[b]);
                }
            }
            seen
        })
        .collect();
    let counterexample =
        tuples(n, 2).find(|p| p[0] < p[1] && !reach[p[0]][p[1]] && !reach[p[1]][p[0]]);
    Ok(LawReport {
        law: "comparison".into(),
        holds: counterexample.is_none(),
        variables: vec!["a".into(), "b".into()],
        counterexample,
    })
}

/// The four-element left spindle separating conjugation from idempotent
/// left selfdistributivity.
pub fn counterexample_spindle() -> ShelfTable {
    ShelfTable::from_rows(vec![
        vec![1, 2, 3, 4],
        vec![1, 2, 1, 2],
        vec![3, 4, 3, 4],
        vec![1, 2, 3, 4],
    ])
    .expect("valid table")
}

/// `((x◁y)◁y)◁(x◁z) = (x◁y)◁((y◁x)◁z)`, valid for left conjugation
/// `x◁y = xyx⁻¹` but not a consequence of idempotent left
/// selfdistributivity. Both sides evaluate to `g z g⁻¹` with
/// `g = xyx⁻¹yxy⁻¹`.
pub fn conjugation_law() -> (Term, Term) {
    let p = |s: &str| crate::parse::parse_infix(s).expect("fixed law");
    (p("((x*y)*y)*(x*z)"), p("(x*y)*((y*x)*z)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(s: &ShelfTable) -> Vec<Vec<u32>> {
        s.rows().to_vec()
    }

    #[test]
    fn small_laver_tables() {
        assert_eq!(rows(&laver_table(0).unwrap()), vec![vec![1]]);
        assert_eq!(rows(&laver_table(1).unwrap()), vec![vec![2, 2], vec![1, 2]]);
        assert_eq!(
            rows(&laver_table(2).unwrap()),
            vec![
                vec![2, 4, 2, 4],
                vec![3, 4, 3, 4],
                vec![4, 4, 4, 4],
                vec![1, 2, 3, 4]
            ]
        );
        assert!(matches!(laver_table(14), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn laver_structure() {
        for k in 0..=6 {
            let t = laver_table(k).unwrap();
            let n = t.len();
            assert!((1..=n).all(|b| t.op(n, b) == b));
            for a in 1..n {
                assert!((1..=n).all(|b| t.op(a, b) > a));
            }
            if k <= 4 {
                assert!(check_law(&t, Law::LeftSd).holds, "k = {k}");
            }
        }
    }

    #[test]
    fn power_of_two_dichotomy() {
        for n in 1..=12usize {
            let r = check_law(&unique_extension(n).unwrap(), Law::LeftSd);
            assert_eq!(r.holds, n.is_power_of_two(), "n = {n}");
        }
    }

    #[test]
    fn counterexamples_are_genuine() {
        let t = unique_extension(3).unwrap();
        let r = check_law(&t, Law::LeftSd);
        assert!(Law::LeftSd.violated(&t, r.counterexample.as_ref().unwrap()));
        let r = check_law(&counterexample_spindle(), Law::RightBijective);
        assert!(!r.holds);
        assert!(Law::RightBijective.violated(
            &counterexample_spindle(),
            r.counterexample.as_ref().unwrap()
        ));
    }

    #[test]
    fn examples() {
        let c = make_example(&Example::Cyclic(3)).unwrap();
        assert!(check_law(&c, Law::RightSd).holds);
        assert!(check_law(&c, Law::RightBijective).holds);
        assert!(!check_law(&c, Law::Idempotent).holds);

        let b = make_example(&Example::Boolean(1)).unwrap();
        // 1 encodes the empty set, 2 the full one.
        assert_eq!(b.op(1, 1), 2);
        assert_eq!(b.op(2, 2), 2);
        assert!(check_law(&make_example(&Example::Boolean(3)).unwrap(), Law::RightSd).holds);

        let a = make_example(&Example::Alexander { m: 5, t: 2 }).unwrap();
        assert!(check_law(&a, Law::Idempotent).holds);
        assert!(check_law(&a, Law::RightSd).holds);
        for (x, y, z) in [(1i64, 2i64, 3i64), (4, 0, 2), (3, 3, 1)] {
            let at = |v: i64| v as usize + 1;
            let lhs = a.op(a.op(at(x), at(y)), at(z)) - 1;
            assert_eq!(lhs as i64, (4 * x + (2 - 4) * y - z).rem_euclid(5));
        }

        for side in [Side::Right, Side::Left] {
            let q = make_example(&Example::Conj {
                group: Group::Sym(3),
                side,
            })
            .unwrap();
            assert_eq!(q.len(), 6);
            assert!(check_law(&q, Law::Idempotent).holds);
            let law = if side == Side::Right {
                Law::RightSd
            } else {
                Law::LeftSd
            };
            assert!(check_law(&q, law).holds);
        }
        let core = make_example(&Example::Core(Group::Cyclic(5))).unwrap();
        assert!(check_law(&core, Law::RightSd).holds);
        assert!(check_law(&core, Law::Idempotent).holds);

        let f = make_example(&Example::Trivial(vec![2, 1, 3])).unwrap();
        assert!(check_law(&f, Law::RightSd).holds);
        assert!(make_example(&Example::Trivial(vec![4])).is_err());
        assert!(make_example(&Example::Conj {
            group: Group::Sym(6),
            side: Side::Left
        })
        .is_err());
    }

    #[test]
    fn spindle_separates_the_conjugation_law() {
        let s = counterexample_spindle();
        assert!(check_law(&s, Law::LeftSd).holds);
        assert!(check_law(&s, Law::Idempotent).holds);
        let (l, r) = conjugation_law();
        let at = Assignment::Fixed(BTreeMap::from([(1, 2), (2, 3), (3, 2)]));
        assert!(!check_equation(&s, &l, &r, &at).unwrap().holds);
        let q = make_example(&Example::Conj {
            group: Group::Sym(3),
            side: Side::Left,
        })
        .unwrap();
        assert!(check_equation(&q, &l, &r, &Assignment::All).unwrap().holds);
        assert!(check_equation(&s, &l, &l, &Assignment::All).unwrap().holds);
        // With `y◁z` as the last factor on the left the law already fails
        // for conjugation.
        let variant = crate::parse::parse_infix("((x*y)*y)*(y*z)").unwrap();
        assert!(
            !check_equation(&q, &variant, &r, &Assignment::All)
                .unwrap()
                .holds
        );
        let partial = Assignment::Fixed(BTreeMap::from([(1, 2)]));
        assert_eq!(
            check_equation(&s, &l, &r, &partial),
            Err(Error::UnboundVariable(2))
        );
    }

    #[test]
    fn division_and_comparison() {
        for k in 1..=3 {
            let t = laver_table(k).unwrap();
            assert!(!is_acyclic(&t));
            assert!(check_comparison(&t, 1).unwrap().holds);
        }
        assert!(!is_acyclic(
            &make_example(&Example::Trivial(vec![1, 2])).unwrap()
        ));
        let c = make_example(&Example::Cyclic(3)).unwrap();
        assert!(check_comparison(&c, 1).unwrap().holds);
        let f = make_example(&Example::Trivial(vec![2, 2])).unwrap();
        assert_eq!(check_comparison(&f, 2), Err(Error::NotMonogenerated(2)));
    }

    #[test]
    fn file_format_round_trips() {
        let t = laver_table(2).unwrap();
        let text = t.to_string();
        assert!(text.starts_with("4\n2 4 2 4\n"));
        assert_eq!(text.parse::<ShelfTable>().unwrap(), t);
        assert!("2\n1 2\n".parse::<ShelfTable>().is_err());
        assert!("2\n1 3\n1 2\n".parse::<ShelfTable>().is_err());
    }
}
