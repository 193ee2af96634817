//! Deterministic Schreier–Sims stabilizer chain.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Permutation>,
    /// Orbit of the base point in discovery order.
    orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to β.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level { base_point, gens: Vec::new(), orbit: vec![base_point], transversal }
    }

    fn recompute_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = s.compose(self.transversal[beta].as_ref().expect("orbit point has transversal"));
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(first_moved(g));
            }
        }
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = gens.iter().filter(|g| base[..i].iter().all(|&c| g.apply(c) == c)).cloned().collect();
            level.recompute_orbit();
            chain.levels.push(level);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_failing_schreier_generator(lvl) {
                Some((y, j)) => {
                    if j == self.levels.len() {
                        self.levels.push(Level::new(first_moved(&y), self.degree));
                    }
                    for l in (lvl + 1)..=j {
                        self.levels[l].gens.push(y.clone());
                        self.levels[l].recompute_orbit();
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_failing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &beta in &level.orbit {
            let u_beta = level.transversal[beta].as_ref().unwrap();
            for s in &level.gens {
                let image = s.apply(beta);
                let u_image = level.transversal[image].as_ref().unwrap();
                let h = u_image.inverse().compose(&s.compose(u_beta));
                let (residue, j) = self.strip(h, lvl + 1);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Sifts `g` starting at level `start`; returns the residue and the level reached.
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base_point);
            match &level.transversal[beta] {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub(crate) fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Visits every element once, in a fixed order determined by the chain.
    pub(crate) fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, mut f: F) {
        let mut prefix = vec![Permutation::identity(self.degree)];
        self.visit(0, &mut prefix, &mut f);
    }

    fn visit<F: FnMut(&Permutation) -> bool>(&self, depth: usize, prefix: &mut Vec<Permutation>, f: &mut F) -> bool {
        if depth == self.levels.len() {
            return f(prefix.last().unwrap());
        }
        let level = &self.levels[depth];
        for &beta in &level.orbit {
            let next = prefix.last().unwrap().compose(level.transversal[beta].as_ref().unwrap());
            prefix.push(next);
            let keep_going = self.visit(depth + 1, prefix, f);
            prefix.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn first_moved(g: &Permutation) -> usize {
    (0..g.degree()).find(|&i| g.apply(i) != i).expect("non-identity permutation moves a point")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure(gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(gens[0].degree());
        let mut queue = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = queue.pop() {
            for s in gens {
                let y = s.compose(&x);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn order_matches_closure() {
        let cases = [
            (5, vec!["(1 2 3 4 5)", "(1 2 3)"]),
            (5, vec!["(1 2 3 4 5)", "(1 2)"]),
            (6, vec!["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
            (7, vec!["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
            (8, vec!["(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)", "(1 5 2 6)(3 7 4 8)"]),
        ];
        for (deg, gens) in cases {
            let gens: Vec<Permutation> = gens.iter().map(|s| Permutation::parse(s, deg).unwrap()).collect();
            let chain = StabChain::new(deg, &gens);
            let all = closure(&gens);
            assert_eq!(chain.order(), all.len() as u128);
            let mut visited = HashSet::new();
            chain.for_each_element(|g| {
                assert!(all.contains(g));
                visited.insert(g.clone());
                true
            });
            assert_eq!(visited.len(), all.len());
        }
    }

    #[test]
    fn membership_is_exact() {
        let gens = [Permutation::parse("(1 2 3 4 5)", 5).unwrap(), Permutation::parse("(1 2 3)", 5).unwrap()];
        let chain = StabChain::new(5, &gens);
        assert!(chain.contains(&Permutation::parse("(1 2)(3 4)", 5).unwrap()));
        assert!(!chain.contains(&Permutation::parse("(1 2)", 5).unwrap()));
    }
}
