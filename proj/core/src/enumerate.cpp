#include <algorithm>
#include <limits>
#include <numeric>

#include "bipsym/bipartite.hpp"
#include "bipsym/error.hpp"

namespace bipsym {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t swap_multiplicity(const BipartiteShape& shape) {
  return shape.n() == shape.m() ? 2 : 1;
}

// Lehmer-code unranking: the rank-th permutation of [0, k) in lexicographic
// order.
std::vector<int> unrank_permutation(int k, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(k));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = k; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace

std::uint64_t automorphism_count(const BipartiteShape& shape) {
  return saturating_mul(saturating_mul(factorial(shape.n()), factorial(shape.m())),
                        swap_multiplicity(shape));
}

AutomorphismCursor::AutomorphismCursor(const BipartiteShape& shape,
                                       std::uint64_t index)
    : shape_(shape), index_(index) {
  const std::uint64_t total = automorphism_count(shape);
  if (total == kSaturated) {
    throw Error(ErrorCode::kTooLarge, "automorphism count overflows 64 bits");
  }
  // Positioned at `total` is the past-the-end state; keep it valid.
  const std::uint64_t clamped = std::min(index, total == 0 ? 0 : total - 1);
  const std::uint64_t s = swap_multiplicity(shape);
  const std::uint64_t wf = factorial(shape.m());
  const std::uint64_t pair = clamped / s;
  swap_ = (clamped % s) == 1;
  vperm_ = unrank_permutation(shape.n(), pair / wf);
  wperm_ = unrank_permutation(shape.m(), pair % wf);
}

BipartiteAutomorphism AutomorphismCursor::current() const {
  const int n = shape_.n();
  std::vector<int> image(static_cast<std::size_t>(shape_.vertex_count()));
  for (int i = 0; i < n; ++i) {
    image[static_cast<std::size_t>(i)] =
        swap_ ? n + vperm_[static_cast<std::size_t>(i)]
              : vperm_[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < shape_.m(); ++j) {
    image[static_cast<std::size_t>(n + j)] =
        swap_ ? wperm_[static_cast<std::size_t>(j)]
              : n + wperm_[static_cast<std::size_t>(j)];
  }
  return make_automorphism_flat(shape_, std::move(image));
}

void AutomorphismCursor::advance() {
  ++index_;
  if (shape_.n() == shape_.m() && !swap_) {
    swap_ = true;
    return;
  }
  swap_ = false;
  if (std::next_permutation(wperm_.begin(), wperm_.end())) return;
  std::next_permutation(vperm_.begin(), vperm_.end());
}

BipartiteAutomorphism automorphism_at(const BipartiteShape& shape,
                                      std::uint64_t index) {
  if (index >= automorphism_count(shape)) {
    throw Error(ErrorCode::kPrecondition,
                "index " + std::to_string(index) + " past the enumeration");
  }
  return AutomorphismCursor(shape, index).current();
}

AutomorphismRange enumerate_automorphisms(const BipartiteShape& shape,
                                          const EnumerationLimits& limits) {
  const std::uint64_t part_product =
      saturating_mul(factorial(shape.n()), factorial(shape.m()));
  if (part_product > limits.max_part_product) {
    throw Error(ErrorCode::kTooLarge,
                "n!*m! = " +
                    (part_product == kSaturated ? std::string("overflow")
                                                : std::to_string(part_product)) +
                    " exceeds cap " + std::to_string(limits.max_part_product));
  }
  return AutomorphismRange(shape, 0, automorphism_count(shape));
}

}  // namespace bipsym
