#include "gtp/pattern.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "gtp/error.hpp"

namespace gtp {

namespace {

std::size_t pattern_size(std::size_t order, std::size_t dim) {
  if (order == 0 || dim == 0) fail(ErrorCode::ShapeMismatch, "order and dimension must be positive");
  return entry_count_within(order, dim, kDefaultMaxEntries);
}

SubsetState bit(std::size_t i) { return SubsetState{1} << i; }

/// Index set {i_2, ..., i_m} of every tail offset, plus the tail digits.
std::vector<SubsetState> tail_masks(const PatternTensor& p) {
  const std::size_t n = p.dim();
  const std::size_t tails = p.tail_count();
  std::vector<SubsetState> masks(tails, 0);
  for (std::size_t t = 0; t < tails; ++t) {
    std::size_t rest = t;
    for (std::size_t j = 1; j < p.order(); ++j) {
      masks[t] |= bit(rest % n);
      rest /= n;
    }
  }
  return masks;
}

void require_small_dim(std::size_t n) {
  if (n > 64) fail(ErrorCode::UnsupportedDimension, "subset dynamics support dimension <= 64");
}

void require_matrix_pattern(const PatternTensor& m) {
  if (m.order() != 2) fail(ErrorCode::UnsupportedOrder, "expected a matrix pattern");
}

}  // namespace

PatternTensor::PatternTensor(std::size_t order, std::size_t dim)
    : order_(order), dim_(dim), bits_(pattern_size(order, dim), 0) {}

PatternTensor::PatternTensor(std::size_t order, std::size_t dim, std::vector<std::uint8_t> bits)
    : order_(order), dim_(dim), bits_(std::move(bits)) {
  if (bits_.size() != pattern_size(order, dim)) {
    fail(ErrorCode::ShapeMismatch, "pattern has " + std::to_string(bits_.size()) + " entries, expected " +
                                       std::to_string(pattern_size(order, dim)));
  }
  for (auto& b : bits_) b = b ? 1 : 0;
}

PatternTensor PatternTensor::from_code(std::size_t order, std::size_t dim, std::uint64_t code) {
  PatternTensor p(order, dim);
  if (p.size() > 64) fail(ErrorCode::CensusTooLarge, "pattern codes cover at most 64 entries");
  for (std::size_t b = 0; b < p.size(); ++b) p.set(b, (code >> b) & 1);
  return p;
}

std::size_t PatternTensor::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

PatternTensor PatternTensor::with_unit_diagonal() const {
  PatternTensor out = *this;
  std::size_t step = 0;
  for (std::size_t j = 0; j < order_; ++j) step = step * dim_ + 1;
  for (std::size_t i = 0; i < dim_; ++i) out.set(i * step);
  return out;
}

PatternTensor pattern_product(const PatternTensor& a, const PatternTensor& b, std::size_t max_entries) {
  if (a.order() < 2) fail(ErrorCode::UnsupportedOrder, "left factor of a product needs order >= 2");
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "pattern_product: dimensions differ");
  const std::size_t n = a.dim();
  const std::size_t m = a.order();
  const std::size_t k = b.order();
  const std::size_t result_order = (m - 1) * (k - 1) + 1;
  entry_count_within(result_order, n, max_entries);
  const std::size_t s = checked_pow(n, k - 1);

  // Same mode-by-mode contraction as general_product, over (or, and).
  std::vector<std::uint8_t> cur(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) cur[i] = a.test(i);
  std::size_t prefix = a.size();
  std::size_t suffix = 1;
  for (std::size_t step = 1; step < m; ++step) {
    const std::size_t new_prefix = prefix / n;
    std::vector<std::uint8_t> next(new_prefix * s * suffix, 0);
    for (std::size_t p = 0; p < new_prefix; ++p) {
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t src = (p * n + t) * suffix;
        for (std::size_t alpha = 0; alpha < s; ++alpha) {
          if (!b.test(t * s + alpha)) continue;
          const std::size_t dst = (p * s + alpha) * suffix;
          for (std::size_t q = 0; q < suffix; ++q) next[dst + q] |= cur[src + q];
        }
      }
    }
    cur = std::move(next);
    prefix = new_prefix;
    suffix *= s;
  }
  return PatternTensor(result_order, n, std::move(cur));
}

SubsetState step_map(const PatternTensor& p, SubsetState s) {
  require_small_dim(p.dim());
  const auto masks = tail_masks(p);
  SubsetState out = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t t = 0; t < masks.size(); ++t) {
      if (p.test(i, t) && (masks[t] & ~s) == 0) {
        out |= bit(i);
        break;
      }
    }
  }
  return out;
}

SupportMap::SupportMap(const PatternTensor& p) : dim_(p.dim()), rows_(p.dim()) {
  require_small_dim(p.dim());
  const auto masks = tail_masks(p);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<SubsetState> row;
    for (std::size_t t = 0; t < masks.size(); ++t) {
      if (p.test(i, t)) row.push_back(masks[t]);
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    // Drop index sets that contain another one; they never decide membership.
    std::vector<SubsetState> minimal;
    for (SubsetState r : row) {
      const bool dominated = std::any_of(row.begin(), row.end(), [&](SubsetState q) {
        return q != r && (q & ~r) == 0;
      });
      if (!dominated) minimal.push_back(r);
    }
    rows_[i] = std::move(minimal);
  }
}

SubsetState SupportMap::operator()(SubsetState s) const {
  SubsetState out = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (SubsetState r : rows_[i]) {
      if ((r & ~s) == 0) {
        out |= bit(i);
        break;
      }
    }
  }
  return out;
}

bool essentially_positive(const PatternTensor& p) {
  const std::size_t n = p.dim();
  std::size_t step = 0;
  for (std::size_t t = 1; t < p.order(); ++t) step = step * n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.test(i, j * step)) return false;
    }
  }
  return true;
}

std::optional<std::size_t> primitive_degree(const PatternTensor& p) {
  const SupportMap f(p);
  const std::size_t n = p.dim();
  const SubsetState full = full_state(n);
  std::size_t degree = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::set<SubsetState> seen{bit(j)};
    SubsetState s = bit(j);
    std::size_t r = 0;
    while (true) {
      s = f(s);
      ++r;
      if (s == full) break;
      if (!seen.insert(s).second) return std::nullopt;
    }
    degree = std::max(degree, r);
  }
  // Each trajectory visits distinct subsets, so r <= 2^n <= 2^(n^m).
  if (degree > (n < 64 ? (std::size_t{1} << n) : ~std::size_t{0})) {
    throw std::logic_error("primitive degree exceeds the subset state bound");
  }
  return degree;
}

bool is_irreducible(const PatternTensor& p) {
  const SupportMap f(p.with_unit_diagonal());
  const std::size_t n = p.dim();
  const SubsetState full = full_state(n);
  for (std::size_t j = 0; j < n; ++j) {
    SubsetState s = bit(j);
    for (std::size_t t = 0; t + 1 < n; ++t) s = f(s);
    if (s != full) return false;
  }
  return true;
}

bool is_weakly_irreducible(const PatternTensor& p) {
  const std::size_t n = p.dim();
  require_small_dim(n);
  const auto masks = tail_masks(p);
  std::vector<SubsetState> out(n, 0);
  std::vector<SubsetState> in(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < masks.size(); ++t) {
      if (p.test(i, t)) out[i] |= masks[t];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (out[i] & bit(j)) in[j] |= bit(i);
    }
  }
  auto reach = [&](const std::vector<SubsetState>& adj) {
    SubsetState seen = bit(0);
    SubsetState frontier = seen;
    while (frontier) {
      SubsetState next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (frontier & bit(v)) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  };
  const SubsetState full = full_state(n);
  return reach(out) == full && reach(in) == full;
}

SubsetFamily initial_slice_family(const PatternTensor& p) {
  const std::size_t n = p.dim();
  require_small_dim(n);
  SubsetFamily family;
  for (std::size_t t = 0; t < p.tail_count(); ++t) {
    SubsetState s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.test(i, t)) s |= bit(i);
    }
    family.push_back(s);
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

SubsetFamily slice_family_step(const PatternTensor& p, const SubsetFamily& family, std::size_t family_cap) {
  const std::size_t n = p.dim();
  const std::size_t tail = p.order() - 1;
  require_small_dim(n);
  if (family.empty()) throw std::invalid_argument("slice family must be nonempty");

  // Nonzero entries as (row, tail digits).
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < p.tail_count(); ++t) {
      if (!p.test(i, t)) continue;
      std::vector<std::size_t> digits(tail);
      std::size_t rest = t;
      for (std::size_t j = tail; j-- > 0;) {
        digits[j] = rest % n;
        rest /= n;
      }
      entries.emplace_back(i, std::move(digits));
    }
  }

  std::set<SubsetState> next;
  std::vector<std::size_t> choice(tail, 0);
  do {
    SubsetState g = 0;
    for (const auto& [i, digits] : entries) {
      if (g & bit(i)) continue;
      bool inside = true;
      for (std::size_t j = 0; j < tail && inside; ++j) inside = (family[choice[j]] & bit(digits[j])) != 0;
      if (inside) g |= bit(i);
    }
    next.insert(g);
    if (next.size() > family_cap) {
      fail(ErrorCode::FamilyExplosion, "slice family exceeds " + std::to_string(family_cap) + " members");
    }
  } while (next_index(choice, family.size()));
  return {next.begin(), next.end()};
}

std::optional<std::size_t> strongly_primitive_degree(const PatternTensor& p, std::size_t family_cap) {
  const SubsetFamily target{full_state(p.dim())};
  SubsetFamily family = initial_slice_family(p);
  std::set<SubsetFamily> seen;
  for (std::size_t k = 1;; ++k) {
    if (family == target) return k;
    if (!seen.insert(family).second) return std::nullopt;
    family = slice_family_step(p, family, family_cap);
  }
}

PatternTensor majorization_matrix(const PatternTensor& p) {
  const std::size_t n = p.dim();
  PatternTensor m(2, n);
  std::size_t step = 0;
  for (std::size_t t = 1; t < p.order(); ++t) step = step * n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i * n + j, p.test(i, j * step));
  }
  return m;
}

bool matrix_is_irreducible(const PatternTensor& m) {
  require_matrix_pattern(m);
  if (m.dim() == 1) return m.test(0);
  return is_weakly_irreducible(m);
}

std::size_t matrix_cyclic_index(const PatternTensor& m) {
  if (!matrix_is_irreducible(m)) fail(ErrorCode::NotIrreducible, "matrix digraph is not strongly connected");
  const std::size_t n = m.dim();
  constexpr std::size_t kUnseen = ~std::size_t{0};
  std::vector<std::size_t> level(n, kUnseen);
  std::deque<std::size_t> queue{0};
  level[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (m.test(u * n + v) && level[v] == kUnseen) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::size_t g = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!m.test(u * n + v)) continue;
      const std::size_t a = level[u] + 1;
      const std::size_t b = level[v];
      g = std::gcd(g, a > b ? a - b : b - a);
    }
  }
  return g;
}

std::optional<std::size_t> matrix_primitive_degree(const PatternTensor& m) {
  require_matrix_pattern(m);
  const std::size_t n = m.dim();
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  PatternTensor power = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power.all()) return k;
    power = pattern_product(power, m);
  }
  return std::nullopt;
}

}  // namespace gtp
