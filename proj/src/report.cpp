#include "hillwalk/report.hpp"

#include <cmath>
#include <cstdio>
#include <future>

namespace hillwalk {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double modulus(const ExactScalar& x) { return std::sqrt(x.norm().get_d()); }

nlohmann::json tail_json(const TailEstimate& tail) {
  if (tail.unbounded) return {{"unbounded", true}, {"ratio", tail.ratio}};
  return {{"value", tail.value}, {"ratio", tail.ratio}};
}

nlohmann::json big_json(const BigComplex& z) {
  return {{"re", z.re().to_string(40)}, {"im", z.im().to_string(40)}};
}

}  // namespace

std::vector<ClosedFormCheck> shell_zero_checks(const TwoTermPotential& pot, long n) {
  std::vector<ClosedFormCheck> out;
  const TwoTermParams& p = pot.params;
  const long rsd = p.r * p.s * p.d;
  const ExactScalar zero;
  if (n % rsd == 0) {
    const long m = n / rsd;
    out.push_back({"straight_walk_plus", straight_walk_plus(p, m),
                   shell_sum(p, n, WalkKind::X, 0, zero)});
    out.push_back({"straight_walk_minus", straight_walk_minus(p, m),
                   shell_sum(p, n, WalkKind::Y, 0, zero)});
  }
  if (p.R == 1) {
    out.push_back({"unit_descent_weight", unit_descent_weight(p.a, n),
                   shell_sum(p, n, WalkKind::Y, 0, zero)});
    if (p.S >= 3 && (n + 1) % p.S == 0) {
      const long m = (n + 1) / p.S;
      const ExactScalar expected =
          p.a * p.b.pow(m) * (inner_walk_sum(p.S, m) - outer_walk_sum(p.S, m));
      out.push_back({"inner_minus_outer", expected, shell_sum(p, n, WalkKind::X, 0, zero)});
    }
  }
  return out;
}

BetaRow beta_row(const PotentialSpec& spec, long n, const ExactScalar& z, const ShellCaps& caps) {
  BetaRow row;
  row.n = n;
  if (spec.params) {
    const TwoTermPotential pot{spec.potential, *spec.params};
    row.plus = beta_plus(pot, n, z, caps.x);
    row.minus = beta_minus(pot, n, z, caps.y);
    row.alpha = alpha_n(spec.potential, n, z, caps.w_steps_for(*spec.params));
    row.closed_forms = shell_zero_checks(pot, n);
  } else {
    const long cap = general_step_cap(spec.potential, n, caps);
    row.plus = walk_sum(spec.potential, n, WalkKind::X, z, cap);
    row.minus = walk_sum(spec.potential, n, WalkKind::Y, z, cap);
    row.alpha = alpha_n(spec.potential, n, z, cap);
  }
  return row;
}

std::vector<BetaRow> beta_table(const PotentialSpec& spec, const std::vector<long>& ns,
                                const ExactScalar& z, const ShellCaps& caps) {
  std::vector<std::future<BetaRow>> jobs;
  for (long n : ns) {
    jobs.push_back(std::async(std::launch::async, [&spec, &z, &caps, n] {
      return beta_row(spec, n, z, caps);
    }));
  }
  std::vector<BetaRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

void write_beta_csv(std::ostream& out, const std::vector<BetaRow>& rows) {
  out << "n,beta_plus,beta_plus_abs,beta_minus,beta_minus_abs,alpha,alpha_abs,tail_plus,"
         "tail_minus,closed_forms\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.plus.value.to_string() << ',' << fmt(modulus(row.plus.value))
        << ',' << row.minus.value.to_string() << ',' << fmt(modulus(row.minus.value)) << ','
        << row.alpha.value.to_string() << ',' << fmt(modulus(row.alpha.value)) << ','
        << (row.plus.tail.unbounded ? "inf" : fmt(row.plus.tail.value)) << ','
        << (row.minus.tail.unbounded ? "inf" : fmt(row.minus.tail.value)) << ',';
    for (std::size_t i = 0; i < row.closed_forms.size(); ++i) {
      const auto& c = row.closed_forms[i];
      out << (i ? ";" : "") << c.name << '=' << (c.matches() ? "match" : "MISMATCH");
    }
    out << '\n';
  }
}

nlohmann::json beta_table_json(const std::vector<BetaRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : row.closed_forms) {
      checks.push_back({{"name", c.name},
                        {"expected", c.expected.to_string()},
                        {"actual", c.actual.to_string()},
                        {"match", c.matches()}});
    }
    nlohmann::json shells_plus = nlohmann::json::array();
    for (const auto& v : row.plus.shell_values) shells_plus.push_back(v.to_string());
    nlohmann::json shells_minus = nlohmann::json::array();
    for (const auto& v : row.minus.shell_values) shells_minus.push_back(v.to_string());
    out.push_back({{"n", row.n},
                   {"z", scalar_to_json(row.plus.z)},
                   {"beta_plus", scalar_to_json(row.plus.value)},
                   {"beta_plus_abs", modulus(row.plus.value)},
                   {"beta_plus_shells", shells_plus},
                   {"beta_minus", scalar_to_json(row.minus.value)},
                   {"beta_minus_abs", modulus(row.minus.value)},
                   {"beta_minus_shells", shells_minus},
                   {"alpha", scalar_to_json(row.alpha.value)},
                   {"alpha_abs", modulus(row.alpha.value)},
                   {"tail_plus", tail_json(row.plus.tail)},
                   {"tail_minus", tail_json(row.minus.tail)},
                   {"closed_forms", checks}});
  }
  return out;
}

nlohmann::json spectrum_to_json(const SpectrumReport& report) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : report.pairs) {
    nlohmann::json j = {{"n", p.n},
                        {"lambda_minus", big_json(p.lambda_minus)},
                        {"lambda_plus", big_json(p.lambda_plus)},
                        {"gap", p.gap.to_double()},
                        {"z_star", big_json(p.z_star)},
                        {"multiplicity", p.is_double ? "double" : "simple-pair"},
                        {"precision_bits", p.precision}};
    if (p.mu) {
      j["mu"] = big_json(*p.mu);
      j["deviation"] = p.deviation->to_double();
    }
    pairs.push_back(std::move(j));
  }
  nlohmann::json dirichlet = nlohmann::json::array();
  for (const auto& [n, mu] : report.dirichlet) dirichlet.push_back({{"n", n}, {"mu", big_json(mu)}});
  nlohmann::json low = nlohmann::json::array();
  for (const auto& z : report.low_block) low.push_back({{"re", z.real()}, {"im", z.imag()}});
  return {{"bc", to_string(report.bc)},
          {"K", report.K},
          {"N", report.N},
          {"pairs", pairs},
          {"dirichlet", dirichlet},
          {"low_block", low}};
}

}  // namespace hillwalk
