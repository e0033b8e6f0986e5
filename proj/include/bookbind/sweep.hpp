#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bookbind/graph.hpp"

namespace bookbind {

enum class SweepFamily { Shift, ShiftEvenGcd, ShiftOddGcd, Reflection };

/// Accepts "shift", "shift-even-gcd", "shift-odd-gcd", "reflection".
SweepFamily parse_family(std::string_view name);
const char* to_string(SweepFamily family);

struct SweepRange {
  int s_min = 3, s_max = 8;
  int t_min = 4, t_max = 14;
};

/// Every constructible spec in range: shifts use 1 <= d <= t/2 with
/// gcd(t,d) > 1, reflections every kind valid for t. Throws
/// Error(Precondition) when the range is empty or yields no spec.
std::vector<BundleSpec> sweep_specs(const SweepRange& range, const std::vector<SweepFamily>& families);

struct SweepRow {
  BundleSpec spec;
  int predicted = 0;
  int pages = 0;
  bool valid = false;
  bool certified = false;
  bool recolored = false;
  std::string lemma;
  std::string error;

  bool ok() const { return error.empty() && valid && certified && pages == predicted; }
};

/// Constructs, validates and certifies one spec; failures land in `error`.
SweepRow sweep_row(const BundleSpec& spec);

}  // namespace bookbind
