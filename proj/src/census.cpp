#include "gtp/census.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "gtp/error.hpp"

namespace gtp {

PatternReport analyze_pattern(const PatternTensor& p, std::size_t family_cap) {
  PatternReport r;
  r.essentially_positive = essentially_positive(p);
  r.irreducible = is_irreducible(p);
  r.gamma = primitive_degree(p);
  r.strong_degree = strongly_primitive_degree(p, family_cap);
  const PatternTensor m = majorization_matrix(p);
  r.majorization_irreducible = matrix_is_irreducible(m);
  r.majorization_gamma = matrix_primitive_degree(m);
  if (r.majorization_irreducible) r.majorization_cyclic_index = matrix_cyclic_index(m);
  return r;
}

CensusSummary census(std::size_t n, std::size_t m, const CensusOptions& options,
                     const std::function<void(const PatternReport&)>& on_row) {
  if (n == 0 || m == 0) fail(ErrorCode::ShapeMismatch, "order and dimension must be positive");
  const std::size_t entries = checked_pow(n, m);
  if (entries >= 64 || (std::uint64_t{1} << entries) > options.max_patterns) {
    fail(ErrorCode::CensusTooLarge, "2^(" + std::to_string(n) + "^" + std::to_string(m) +
                                        ") patterns exceed the cap of " + std::to_string(options.max_patterns));
  }
  const std::uint64_t total = std::uint64_t{1} << entries;

  std::vector<PatternReport> reports(total);
  auto work = [&](std::uint64_t begin, std::uint64_t stride) {
    for (std::uint64_t code = begin; code < total; code += stride) {
      reports[code] = analyze_pattern(PatternTensor::from_code(m, n, code), options.family_cap);
      reports[code].code = code;
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          work(j, jobs);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  CensusSummary s;
  s.n = n;
  s.m = m;
  s.patterns = total;
  const std::size_t wielandt = (n - 1) * (n - 1) + 1;
  for (const PatternReport& r : reports) {
    if (on_row) on_row(r);
    s.essentially_positive += r.essentially_positive;
    s.irreducible += r.irreducible;
    if (r.primitive()) {
      ++s.primitive;
      s.max_gamma = std::max(s.max_gamma, *r.gamma);
      ++s.gamma_histogram[*r.gamma];
      // 2^(n^m) >= 2^entries; entries < 64 here.
      if (*r.gamma > (std::uint64_t{1} << entries)) ++s.gamma_bound_violations;
    }
    if (r.strongly_primitive()) {
      ++s.strongly_primitive;
      s.max_strong_degree = std::max(s.max_strong_degree, *r.strong_degree);
      if (!r.primitive()) ++s.strong_not_primitive;
    }
    if (r.majorization_gamma) {
      const bool ok = r.primitive() && *r.gamma <= *r.majorization_gamma && *r.majorization_gamma <= wielandt;
      if (!ok) ++s.majorization_bound_violations;
    }
    if (r.majorization_irreducible && !r.irreducible) ++s.majorization_irreducible_not_irreducible;
  }
  return s;
}

}  // namespace gtp
