use serde::{Deserialize, Serialize};
use siglat::{Group, Limits, Permutation};

/// A group given by permutation generators in 1-based cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupSpec {
    pub fn new(name: &str, degree: usize, generators: &[&str]) -> GroupSpec {
        GroupSpec {
            name: name.to_string(),
            degree,
            generators: generators.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn build(&self, limits: &Limits) -> siglat::Result<Group> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse_cycles(g, self.degree))
            .collect::<siglat::Result<Vec<_>>>()?;
        Group::generate(&self.name, self.degree, gens, limits)
    }
}

fn cyclic(n: usize) -> GroupSpec {
    let cycle = if n == 1 {
        Vec::new()
    } else {
        vec![format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "))]
    };
    GroupSpec {
        name: format!("C{n}"),
        degree: n,
        generators: cycle,
    }
}

/// The built-in groups with their orders.
pub fn builtin_corpus_with_orders() -> Vec<(GroupSpec, usize)> {
    let mut out: Vec<(GroupSpec, usize)> = (1..=12).chain([16, 24]).map(|n| (cyclic(n), n)).collect();
    out.extend([
        (GroupSpec::new("C2xC2", 4, &["(1 2)", "(3 4)"]), 4),
        (GroupSpec::new("C2xC4", 6, &["(1 2)", "(3 4 5 6)"]), 8),
        (GroupSpec::new("C2xC2xC2", 6, &["(1 2)", "(3 4)", "(5 6)"]), 8),
        (GroupSpec::new("C3xC3", 6, &["(1 2 3)", "(4 5 6)"]), 9),
        (GroupSpec::new("S3", 3, &["(1 2)", "(1 2 3)"]), 6),
        (GroupSpec::new("D8", 4, &["(1 2 3 4)", "(1 3)"]), 8),
        (GroupSpec::new("Q8", 8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]), 8),
        (GroupSpec::new("D10", 5, &["(1 2 3 4 5)", "(2 5)(3 4)"]), 10),
        (GroupSpec::new("D12", 6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]), 12),
        (GroupSpec::new("Dic12", 7, &["(1 2 3)", "(2 3)(4 5 6 7)"]), 12),
        (GroupSpec::new("A4", 4, &["(1 2 3)", "(1 2)(3 4)"]), 12),
        (GroupSpec::new("F20", 5, &["(1 2 3 4 5)", "(2 3 5 4)"]), 20),
        (GroupSpec::new("S4", 4, &["(1 2 3 4)", "(1 2)"]), 24),
        (GroupSpec::new("SL(2,3)", 8, &["(3 4 5)(6 8 7)", "(1 6 2 3)(4 7 8 5)"]), 24),
        (GroupSpec::new("S3xC4", 7, &["(1 2)", "(1 2 3)", "(4 5 6 7)"]), 24),
        (GroupSpec::new("S3xS3", 6, &["(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"]), 36),
        (GroupSpec::new("A5", 5, &["(1 2 3 4 5)", "(1 2 3)"]), 60),
        (GroupSpec::new("S5", 5, &["(1 2 3 4 5)", "(1 2)"]), 120),
    ]);
    out
}

pub fn builtin_corpus() -> Vec<GroupSpec> {
    builtin_corpus_with_orders().into_iter().map(|(g, _)| g).collect()
}

pub fn find_builtin(name: &str) -> Option<GroupSpec> {
    builtin_corpus().into_iter().find(|g| g.name == name)
}
