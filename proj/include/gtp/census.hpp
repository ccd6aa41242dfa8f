#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "gtp/pattern.hpp"

namespace gtp {

/// Everything the pattern analysis knows about one zero pattern.
struct PatternReport {
  std::uint64_t code = 0;
  bool essentially_positive = false;
  bool irreducible = false;
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> strong_degree;
  bool majorization_irreducible = false;
  std::optional<std::size_t> majorization_gamma;
  std::optional<std::size_t> majorization_cyclic_index;

  bool primitive() const { return gamma.has_value(); }
  bool strongly_primitive() const { return strong_degree.has_value(); }
};

PatternReport analyze_pattern(const PatternTensor& p, std::size_t family_cap = kDefaultFamilyCap);

struct CensusOptions {
  std::uint64_t max_patterns = 65536;
  unsigned jobs = 1;
  std::size_t family_cap = kDefaultFamilyCap;
};

struct CensusSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t patterns = 0;
  std::uint64_t essentially_positive = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t primitive = 0;
  std::uint64_t strongly_primitive = 0;
  std::size_t max_gamma = 0;
  std::size_t max_strong_degree = 0;
  std::map<std::size_t, std::uint64_t> gamma_histogram;
  // Each of these must stay zero.
  std::uint64_t gamma_bound_violations = 0;          // gamma > 2^(n^m)
  std::uint64_t majorization_bound_violations = 0;   // M(A) primitive but not gamma(A) <= gamma(M) <= (n-1)^2+1
  std::uint64_t strong_not_primitive = 0;            // strongly primitive but not primitive
  std::uint64_t majorization_irreducible_not_irreducible = 0;
};

/// Analyzes all 2^(n^m) zero patterns of order m, dimension n. Rows are
/// reported in pattern-code order regardless of `jobs`.
CensusSummary census(std::size_t n, std::size_t m, const CensusOptions& options = {},
                     const std::function<void(const PatternReport&)>& on_row = {});

}  // namespace gtp
