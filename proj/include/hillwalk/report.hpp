#ifndef HILLWALK_REPORT_HPP
#define HILLWALK_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hillwalk/beta.hpp"
#include "hillwalk/potential.hpp"
#include "hillwalk/spectra.hpp"

namespace hillwalk {

// Closed form evaluated next to an enumerated cap-0 shell.
struct ClosedFormCheck {
  std::string name;
  ExactScalar expected;
  ExactScalar actual;
  bool matches() const { return expected == actual; }
};

struct BetaRow {
  long n = 0;
  BetaValue plus;
  BetaValue minus;
  BetaValue alpha;
  std::vector<ClosedFormCheck> closed_forms;
};

// Cap-0 closed forms that apply at n for a two-term potential: the straight
// walks at n = rsd·m, and for R = 1 the all-descending walk and, when
// n = sm − 1 with s ≥ 3, a·b^m(inner − outer).
std::vector<ClosedFormCheck> shell_zero_checks(const TwoTermPotential& pot, long n);

BetaRow beta_row(const PotentialSpec& spec, long n, const ExactScalar& z, const ShellCaps& caps);
std::vector<BetaRow> beta_table(const PotentialSpec& spec, const std::vector<long>& ns,
                                const ExactScalar& z, const ShellCaps& caps);

void write_beta_csv(std::ostream& out, const std::vector<BetaRow>& rows);
nlohmann::json beta_table_json(const std::vector<BetaRow>& rows);

nlohmann::json spectrum_to_json(const SpectrumReport& report);

}  // namespace hillwalk

#endif  // HILLWALK_REPORT_HPP
