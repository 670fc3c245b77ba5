#ifndef HILLWALK_WALKS_HPP
#define HILLWALK_WALKS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hillwalk/numerics.hpp"
#include "hillwalk/potential.hpp"

namespace hillwalk {

// X: −n → n (β⁺), Y: n → −n (β⁻), W: n → n (α).
enum class WalkKind { X, Y, W };

const char* to_string(WalkKind kind);
long start_vertex(WalkKind kind, long n);
long end_vertex(WalkKind kind, long n);

struct Walk {
  std::vector<long> steps;
  WalkKind kind = WalkKind::X;
  long n = 1;
};

// A vertex factor n² − j(t)² + z vanished.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(long n, long t, long vertex);
  long n() const { return n_; }
  long t() const { return t_; }
  long vertex() const { return vertex_; }

 private:
  long n_;
  long t_;
  long vertex_;
};

// j(0), ..., j(ν+1).
std::vector<long> vertices(const Walk& walk);

// Step sum matches the kind and no internal vertex equals ±n.
bool is_admissible(const Walk& walk);

// Step counts of a two-term shell: `negative` steps of −2R, `positive`
// steps of +2S.
struct ShellCounts {
  long negative = 0;
  long positive = 0;
  long total() const { return negative + positive; }
};

// Shell k of X_n or Y_n. The admissible count vectors of a two-term walk
// solve −R·p̃ + S·q̃ = ±n and form the progression (p̃₀ + s·k, q̃₀ + r·k)
// from the least nonnegative solution; shell k is its k-th member. For
// n = rsd·m this is X_n(p) with p̃ = sp, q̃ = r(p+m); for r = 1 and
// n = sm−1 it is X_n(κ) with p̃ = 1+sκ, q̃ = m+κ; for r = 1 on the Y side it
// is Y_n(q) with p̃ = n+sq. W shells are (s·(k+1), r·(k+1)). Returns nullopt
// when d does not divide n (every shell is empty).
std::optional<ShellCounts> shell_counts(const TwoTermParams& params, long n, WalkKind kind,
                                        long shell);

// True when the kind has at least one count-feasible shell at n.
bool shells_feasible(const TwoTermParams& params, long n, WalkKind kind);

// All admissible walks in a shell, lexicographic in the step sequence.
std::vector<Walk> enumerate_shell(const TwoTermParams& params, long n, WalkKind kind, long shell);

// All admissible walks of the kind with at most max_steps steps drawn from
// the potential's support, lexicographic in the step sequence.
std::vector<Walk> enumerate_capped(const FourierPotential& pot, long n, WalkKind kind,
                                   long max_steps);

// h₁(x, z) = ∏_{t=1}^{ν} (n² − j(t)² + z)^{-1}.
ExactScalar vertex_product(const Walk& walk, const ExactScalar& z);
// h(x, z) = h₁(x, z) · ∏ V(x(t)).
ExactScalar weight(const Walk& walk, const FourierPotential& pot, const ExactScalar& z);

// C(p̃ + q̃, p̃), the interleaving count bounding the shell size.
ExactScalar shell_size_bound(const TwoTermParams& params, long n, WalkKind kind, long shell);

// Σ h(x, z) over one shell, by dynamic programming over (negatives used,
// positives used). Equal to the sum of weight() over enumerate_shell().
ExactScalar shell_sum(const TwoTermParams& params, long n, WalkKind kind, long shell,
                      const ExactScalar& z);

// Σ h(x, z) over all admissible walks with at most max_steps steps, by
// dynamic programming over (steps taken, vertex).
ExactScalar capped_sum(const FourierPotential& pot, long n, WalkKind kind, long max_steps,
                       const ExactScalar& z);

}  // namespace hillwalk

#endif  // HILLWALK_WALKS_HPP
