#include "hillwalk/walks.hpp"

#include <map>
#include <numeric>

namespace hillwalk {

const char* to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::X: return "X";
    case WalkKind::Y: return "Y";
    case WalkKind::W: return "W";
  }
  return "?";
}

long start_vertex(WalkKind kind, long n) { return kind == WalkKind::X ? -n : n; }

long end_vertex(WalkKind kind, long n) { return kind == WalkKind::Y ? -n : n; }

SingularityError::SingularityError(long n, long t, long vertex)
    : std::runtime_error("singular walk weight at n=" + std::to_string(n) + ", t=" +
                         std::to_string(t) + ": n^2 - j^2 + z = 0 at vertex j=" +
                         std::to_string(vertex)),
      n_(n),
      t_(t),
      vertex_(vertex) {}

std::vector<long> vertices(const Walk& walk) {
  std::vector<long> out;
  out.reserve(walk.steps.size() + 1);
  long j = start_vertex(walk.kind, walk.n);
  out.push_back(j);
  for (long step : walk.steps) {
    j += step;
    out.push_back(j);
  }
  return out;
}

bool is_admissible(const Walk& walk) {
  if (walk.steps.empty()) return false;
  const auto js = vertices(walk);
  if (js.back() != end_vertex(walk.kind, walk.n)) return false;
  for (std::size_t t = 1; t + 1 < js.size(); ++t) {
    if (js[t] == walk.n || js[t] == -walk.n) return false;
  }
  for (long step : walk.steps) {
    if (step == 0 || step % 2 != 0) return false;
  }
  return true;
}

namespace {

void require_positive_n(long n) {
  if (n < 1) throw DomainError("walk index n must be positive");
}

long ceil_div_nonneg(long num, long den) { return num <= 0 ? 0 : (num + den - 1) / den; }

// 1 / (n² − j² + z), raising SingularityError when the factor vanishes.
ExactScalar vertex_factor(long n, long t, long j, const ExactScalar& z) {
  ExactScalar f = ExactScalar(n * n - j * j) + z;
  if (f.is_zero()) throw SingularityError(n, t, j);
  return ExactScalar(1) / f;
}

}  // namespace

std::optional<ShellCounts> shell_counts(const TwoTermParams& params, long n, WalkKind kind,
                                        long shell) {
  require_positive_n(n);
  if (shell < 0) return std::nullopt;
  const long r = params.r;
  const long s = params.s;
  if (kind == WalkKind::W) return ShellCounts{s * (shell + 1), r * (shell + 1)};
  if (n % params.d != 0) return std::nullopt;
  // −r·p̃ + s·q̃ = target.
  const long target = (kind == WalkKind::X ? 1 : -1) * (n / params.d);
  const long lower = ceil_div_nonneg(-target, r);
  for (long p = lower; p < lower + s; ++p) {
    const long rhs = target + r * p;
    if (rhs % s == 0 && rhs >= 0) {
      return ShellCounts{p + s * shell, rhs / s + r * shell};
    }
  }
  return std::nullopt;
}

bool shells_feasible(const TwoTermParams& params, long n, WalkKind kind) {
  return shell_counts(params, n, kind, 0).has_value();
}

std::vector<Walk> enumerate_shell(const TwoTermParams& params, long n, WalkKind kind, long shell) {
  std::vector<Walk> out;
  const auto counts = shell_counts(params, n, kind, shell);
  if (!counts || counts->total() == 0) return out;
  const long down = -2 * params.R;
  const long up = 2 * params.S;
  const long target = end_vertex(kind, n);
  std::vector<long> steps;
  steps.reserve(static_cast<std::size_t>(counts->total()));

  // Depth-first with the smaller step first, so output is lexicographic.
  const auto dfs = [&](auto&& self, long j, long neg_left, long pos_left) -> void {
    if (neg_left == 0 && pos_left == 0) {
      if (j == target) out.push_back({steps, kind, n});
      return;
    }
    if (!steps.empty() && (j == n || j == -n)) return;
    if (neg_left > 0) {
      steps.push_back(down);
      self(self, j + down, neg_left - 1, pos_left);
      steps.pop_back();
    }
    if (pos_left > 0) {
      steps.push_back(up);
      self(self, j + up, neg_left, pos_left - 1);
      steps.pop_back();
    }
  };
  dfs(dfs, start_vertex(kind, n), counts->negative, counts->positive);
  return out;
}

std::vector<Walk> enumerate_capped(const FourierPotential& pot, long n, WalkKind kind,
                                   long max_steps) {
  require_positive_n(n);
  std::vector<Walk> out;
  const auto supp = pot.support();
  const long target = end_vertex(kind, n);
  std::vector<long> steps;

  const auto dfs = [&](auto&& self, long j) -> void {
    if (!steps.empty()) {
      if (j == target) {
        out.push_back({steps, kind, n});
        return;
      }
      if (j == n || j == -n) return;
    }
    if (static_cast<long>(steps.size()) == max_steps) return;
    for (long m : supp) {
      steps.push_back(m);
      self(self, j + m);
      steps.pop_back();
    }
  };
  dfs(dfs, start_vertex(kind, n));
  return out;
}

ExactScalar vertex_product(const Walk& walk, const ExactScalar& z) {
  const auto js = vertices(walk);
  ExactScalar product(1);
  for (std::size_t t = 1; t + 1 < js.size(); ++t) {
    product *= vertex_factor(walk.n, static_cast<long>(t), js[t], z);
  }
  return product;
}

ExactScalar weight(const Walk& walk, const FourierPotential& pot, const ExactScalar& z) {
  ExactScalar coeffs(1);
  for (long step : walk.steps) coeffs *= pot.coefficient(step);
  if (coeffs.is_zero()) return coeffs;
  return coeffs * vertex_product(walk, z);
}

ExactScalar shell_size_bound(const TwoTermParams& params, long n, WalkKind kind, long shell) {
  const auto counts = shell_counts(params, n, kind, shell);
  if (!counts) return ExactScalar(0);
  return binomial(counts->total(), counts->negative);
}

ExactScalar shell_sum(const TwoTermParams& params, long n, WalkKind kind, long shell,
                      const ExactScalar& z) {
  const auto counts = shell_counts(params, n, kind, shell);
  if (!counts || counts->total() == 0) return ExactScalar(0);
  const long P = counts->negative;
  const long Q = counts->positive;
  const long start = start_vertex(kind, n);
  const auto width = static_cast<std::size_t>(Q + 1);
  const auto at = [&](long i, long j) { return static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j); };

  // sum[i][j]: Σ over admissible prefixes with i down-steps and j up-steps
  // of the vertex factors collected so far (the endpoint carries none).
  std::vector<ExactScalar> sum(static_cast<std::size_t>((P + 1) * (Q + 1)));
  std::vector<char> reached(sum.size(), 0);
  sum[at(0, 0)] = ExactScalar(1);
  reached[at(0, 0)] = 1;
  ExactScalar total;
  for (long i = 0; i <= P; ++i) {
    for (long j = 0; j <= Q; ++j) {
      if (!reached[at(i, j)]) continue;
      const bool origin = (i == 0 && j == 0);
      if (!origin) {
        if (i == P && j == Q) {
          total = sum[at(i, j)];
          continue;
        }
        const long v = start - 2 * params.R * i + 2 * params.S * j;
        if (v == n || v == -n) continue;
        sum[at(i, j)] *= vertex_factor(n, i + j, v, z);
      }
      if (i < P) {
        sum[at(i + 1, j)] += sum[at(i, j)];
        reached[at(i + 1, j)] = 1;
      }
      if (j < Q) {
        sum[at(i, j + 1)] += sum[at(i, j)];
        reached[at(i, j + 1)] = 1;
      }
    }
  }
  if (total.is_zero()) return total;
  return total * params.a.pow(P) * params.b.pow(Q);
}

ExactScalar capped_sum(const FourierPotential& pot, long n, WalkKind kind, long max_steps,
                       const ExactScalar& z) {
  require_positive_n(n);
  const long target = end_vertex(kind, n);
  ExactScalar total;
  // Weighted admissible prefixes keyed by their current (internal) vertex.
  std::map<long, ExactScalar> frontier{{start_vertex(kind, n), ExactScalar(1)}};
  for (long t = 1; t <= max_steps && !frontier.empty(); ++t) {
    std::map<long, ExactScalar> next;
    for (const auto& [j, value] : frontier) {
      for (const auto& [m, coeff] : pot.coefficients()) {
        const long v = j + m;
        const ExactScalar contribution = value * coeff;
        if (v == target) {
          total += contribution;
        } else if (v != n && v != -n && t < max_steps) {
          next[v] += contribution * vertex_factor(n, t, v, z);
        }
      }
    }
    frontier = std::move(next);
  }
  return total;
}

}  // namespace hillwalk
