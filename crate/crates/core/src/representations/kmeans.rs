//! Lloyd's k-means with k-means++ seeding over sparse points.

use rand::Rng;

/// Sparse vector: `(dimension, value)` pairs sorted by dimension.
pub type SparsePoint = Vec<(usize, f64)>;

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    /// Cluster of every point. Clusters are numbered by first appearance,
    /// so point 0 is always in cluster 0.
    pub assignment: Vec<usize>,
    /// Sum of squared Euclidean distances to the assigned centroids.
    pub inertia: f64,
}

const MAX_ITERATIONS: usize = 100;

fn sq_norm(p: &SparsePoint) -> f64 {
    p.iter().map(|&(_, v)| v * v).sum()
}

struct Centroids {
    dim: usize,
    values: Vec<f64>,
    sq_norms: Vec<f64>,
}

impl Centroids {
    fn from_points(points: &[SparsePoint], chosen: &[usize], dim: usize) -> Self {
        let mut values = vec![0.0; chosen.len() * dim];
        for (c, &p) in chosen.iter().enumerate() {
            for &(d, v) in &points[p] {
                values[c * dim + d] = v;
            }
        }
        let mut centroids = Centroids {
            dim,
            values,
            sq_norms: Vec::new(),
        };
        centroids.refresh_norms();
        centroids
    }

    fn refresh_norms(&mut self) {
        self.sq_norms = self
            .values
            .chunks(self.dim.max(1))
            .map(|c| c.iter().map(|v| v * v).sum())
            .collect();
        if self.dim == 0 {
            self.sq_norms.clear();
        }
    }

    fn k(&self) -> usize {
        if self.dim == 0 {
            0
        } else {
            self.values.len() / self.dim
        }
    }

    fn sq_dist(&self, c: usize, p: &SparsePoint, p_sq: f64) -> f64 {
        let row = &self.values[c * self.dim..(c + 1) * self.dim];
        let dot: f64 = p.iter().map(|&(d, v)| v * row[d]).sum();
        (p_sq - 2.0 * dot + self.sq_norms[c]).max(0.0)
    }

    fn nearest(&self, p: &SparsePoint, p_sq: f64) -> (usize, f64) {
        let mut best = (0, f64::INFINITY);
        for c in 0..self.k() {
            let d = self.sq_dist(c, p, p_sq);
            if d < best.1 {
                best = (c, d);
            }
        }
        best
    }
}

fn plus_plus_seeds<R: Rng>(points: &[SparsePoint], sq: &[f64], k: usize, dim: usize, rng: &mut R) -> Vec<usize> {
    let n = points.len();
    let mut chosen = vec![rng.random_range(0..n)];
    let mut dist: Vec<f64> = vec![f64::INFINITY; n];
    while chosen.len() < k {
        let last = Centroids::from_points(points, &chosen[chosen.len() - 1..], dim);
        for (i, p) in points.iter().enumerate() {
            dist[i] = dist[i].min(last.sq_dist(0, p, sq[i]));
        }
        let total: f64 = dist.iter().sum();
        let next = if total > 0.0 {
            let mut target = rng.random::<f64>() * total;
            let mut pick = n - 1;
            for (i, &d) in dist.iter().enumerate() {
                if d > 0.0 && target < d {
                    pick = i;
                    break;
                }
                target -= d;
            }
            if dist[pick] == 0.0 {
                // float drift at the tail
                pick = (0..n).rev().find(|&i| dist[i] > 0.0).unwrap_or(pick);
            }
            pick
        } else {
            // Every point coincides with a seed: take any unchosen one.
            let free: Vec<usize> = (0..n).filter(|i| !chosen.contains(i)).collect();
            free[rng.random_range(0..free.len())]
        };
        chosen.push(next);
    }
    chosen
}

fn lloyd(points: &[SparsePoint], sq: &[f64], seeds: &[usize], dim: usize) -> (Vec<usize>, f64) {
    let n = points.len();
    let k = seeds.len();
    let mut centroids = Centroids::from_points(points, seeds, dim);
    let mut assignment = vec![usize::MAX; n];
    let mut dists = vec![0.0; n];

    for _ in 0..MAX_ITERATIONS {
        let mut changed = false;
        for (i, p) in points.iter().enumerate() {
            let (c, d) = centroids.nearest(p, sq[i]);
            dists[i] = d;
            if assignment[i] != c {
                assignment[i] = c;
                changed = true;
            }
        }

        // Refill empty clusters with the worst-served point of a cluster
        // that can spare one.
        let mut sizes = vec![0usize; k];
        for &c in &assignment {
            sizes[c] += 1;
        }
        for empty in 0..k {
            if sizes[empty] > 0 {
                continue;
            }
            let donor = (0..n)
                .filter(|&i| sizes[assignment[i]] > 1)
                .max_by(|&a, &b| dists[a].total_cmp(&dists[b]).then(b.cmp(&a)))
                .expect("k never exceeds the number of points");
            sizes[assignment[donor]] -= 1;
            assignment[donor] = empty;
            sizes[empty] = 1;
            dists[donor] = 0.0;
            changed = true;
        }

        centroids.values.iter_mut().for_each(|v| *v = 0.0);
        for (i, p) in points.iter().enumerate() {
            let c = assignment[i];
            for &(d, v) in p {
                centroids.values[c * dim + d] += v;
            }
        }
        for c in 0..k {
            let inv = 1.0 / sizes[c] as f64;
            centroids.values[c * dim..(c + 1) * dim]
                .iter_mut()
                .for_each(|v| *v *= inv);
        }
        centroids.refresh_norms();

        if !changed {
            break;
        }
    }

    let inertia = points
        .iter()
        .enumerate()
        .map(|(i, p)| centroids.sq_dist(assignment[i], p, sq[i]))
        .sum();
    (assignment, inertia)
}

fn canonical(assignment: Vec<usize>, k: usize) -> Vec<usize> {
    let mut relabel = vec![usize::MAX; k];
    let mut next = 0;
    assignment
        .into_iter()
        .map(|c| {
            if relabel[c] == usize::MAX {
                relabel[c] = next;
                next += 1;
            }
            relabel[c]
        })
        .collect()
}

/// Clusters `points` (of dimension `dim`) into `min(k, points.len())` non-empty
/// clusters, keeping the best of `restarts` seeded runs.
pub fn kmeans<R: Rng>(
    points: &[SparsePoint],
    dim: usize,
    k: usize,
    restarts: usize,
    rng: &mut R,
) -> KMeansResult {
    let n = points.len();
    let k = k.min(n);
    if k <= 1 {
        let assignment = vec![0; n];
        let inertia = if n == 0 {
            0.0
        } else {
            lloyd(points, &points.iter().map(sq_norm).collect::<Vec<_>>(), &[0], dim).1
        };
        return KMeansResult { assignment, inertia };
    }

    let sq: Vec<f64> = points.iter().map(sq_norm).collect();
    let mut best: Option<(Vec<usize>, f64)> = None;
    for _ in 0..restarts.max(1) {
        let seeds = plus_plus_seeds(points, &sq, k, dim, rng);
        let (assignment, inertia) = lloyd(points, &sq, &seeds, dim);
        if best.as_ref().is_none_or(|(_, b)| inertia < *b) {
            best = Some((assignment, inertia));
        }
    }
    let (assignment, inertia) = best.expect("at least one restart");
    KMeansResult {
        assignment: canonical(assignment, k),
        inertia,
    }
}
