#include "bookbind/sweep.hpp"

#include <numeric>

#include "bookbind/constructions.hpp"
#include "bookbind/error.hpp"
#include "bookbind/oracle.hpp"

namespace bookbind {

SweepFamily parse_family(std::string_view name) {
  if (name == "shift") return SweepFamily::Shift;
  if (name == "shift-even-gcd") return SweepFamily::ShiftEvenGcd;
  if (name == "shift-odd-gcd") return SweepFamily::ShiftOddGcd;
  if (name == "reflection") return SweepFamily::Reflection;
  throw Error(Errc::Parse, "unknown family '" + std::string(name) + "'");
}

const char* to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::Shift: return "shift";
    case SweepFamily::ShiftEvenGcd: return "shift-even-gcd";
    case SweepFamily::ShiftOddGcd: return "shift-odd-gcd";
    case SweepFamily::Reflection: return "reflection";
  }
  return "unknown";
}

std::vector<BundleSpec> sweep_specs(const SweepRange& range, const std::vector<SweepFamily>& families) {
  if (range.s_min > range.s_max || range.t_min > range.t_max || families.empty())
    throw Error(Errc::Precondition, "sweep range is empty");
  if (range.s_min < 3 || range.t_min < 3) throw Error(Errc::Precondition, "sweep needs s >= 3 and t >= 3");
  std::vector<BundleSpec> out;
  for (auto family : families)
    for (int s = range.s_min; s <= range.s_max; ++s)
      for (int t = range.t_min; t <= range.t_max; ++t) {
        if (family == SweepFamily::Reflection) {
          const auto kinds = t % 2 == 0 ? std::vector{ReflectionKind::NoFixed, ReflectionKind::TwoFixed}
                                        : std::vector{ReflectionKind::OneFixed};
          for (auto kind : kinds) out.push_back({s, t, Reflection{kind}});
          continue;
        }
        for (int d = 1; d <= t / 2; ++d) {
          const int g = std::gcd(t, d);
          if (g == 1) continue;
          if (family == SweepFamily::ShiftEvenGcd && g % 2 != 0) continue;
          if (family == SweepFamily::ShiftOddGcd && g % 2 == 0) continue;
          out.push_back({s, t, Shift{d}});
        }
      }
  if (out.empty()) throw Error(Errc::Precondition, "sweep range contains no constructible spec");
  return out;
}

SweepRow sweep_row(const BundleSpec& spec) {
  SweepRow row;
  row.spec = spec;
  try {
    row.predicted = predict_bipartite(spec) ? 4 : 5;
    auto made = embed(spec);
    if (const auto* unsupported = std::get_if<Unsupported>(&made)) {
      row.error = unsupported->reason;
      return row;
    }
    const auto& result = std::get<ConstructionResult>(made);
    row.lemma = result.lemma;
    row.recolored = result.recolored;
    const auto report = validate(bundle(spec), result.embedding);
    row.valid = report.valid();
    row.pages = report.pages_used;
    if (row.valid) row.certified = certify(spec, result.embedding).certified;
  } catch (const Error& ex) {
    row.error = ex.what();
  }
  return row;
}

}  // namespace bookbind
