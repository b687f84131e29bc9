#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ultragrade {

/// Eventually periodic subset of the naturals.
///
/// Stored as a prefix bit string followed by a nonempty period that repeats
/// forever. The canonical form has minimal period and then minimal prefix, so
/// two IndexSets are equal as sets iff they compare equal.
class IndexSet {
 public:
  /// Longest period an operation may produce before throwing LimitExceeded.
  static constexpr std::size_t kMaxPeriod = std::size_t{1} << 20;

  IndexSet() : period_{false} {}

  static IndexSet empty() { return IndexSet(); }
  static IndexSet all() { return IndexSet({}, {true}); }
  static IndexSet singleton(std::uint64_t n);
  /// {0, 1, ..., n-1}
  static IndexSet below(std::uint64_t n);
  /// {a*k + b : k >= k0}. With a == 0 this is the singleton {b}.
  static IndexSet progression(std::uint64_t a, std::uint64_t b, std::uint64_t k0 = 0);
  static IndexSet from_bits(std::vector<bool> prefix, std::vector<bool> period);

  bool contains(std::uint64_t n) const;
  bool is_empty() const { return prefix_.empty() && !period_[0] && period_.size() == 1; }
  bool is_finite() const { return period_.size() == 1 && !period_[0]; }
  bool is_cofinite() const { return period_.size() == 1 && period_[0]; }
  bool is_subset_of(const IndexSet& other) const;
  bool intersects(const IndexSet& other) const { return !(*this & other).is_empty(); }

  std::optional<std::uint64_t> min() const;
  /// Smallest element >= n.
  std::optional<std::uint64_t> next_at_or_after(std::uint64_t n) const;
  /// Elements of a finite set in increasing order.
  std::vector<std::uint64_t> elements() const;
  /// First `limit` elements in increasing order (fewer if the set is smaller).
  std::vector<std::uint64_t> first(std::size_t limit) const;
  std::uint64_t count() const;  // finite sets only

  IndexSet operator|(const IndexSet& o) const;
  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator-(const IndexSet& o) const;
  IndexSet complement() const;

  /// {k >= k0 : a*k + b in this}. For a == 0 the answer is all k >= k0 or none.
  IndexSet preimage_affine(std::uint64_t a, std::int64_t b, std::uint64_t k0) const;
  /// {a*k + b : k in this}, a >= 1, requires a*min + b >= 0.
  IndexSet image_affine(std::uint64_t a, std::int64_t b) const;

  std::size_t prefix_length() const { return prefix_.size(); }
  std::size_t period_length() const { return period_.size(); }
  const std::vector<bool>& prefix_bits() const { return prefix_; }
  const std::vector<bool>& period_bits() const { return period_; }

  /// Decomposition into explicit points and arithmetic progressions
  /// {step*k + start : k >= 0}, used by the printers.
  struct Progression {
    std::uint64_t step;
    std::uint64_t start;
  };
  void decompose(std::vector<std::uint64_t>& points, std::vector<Progression>& progressions) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  IndexSet(std::vector<bool> prefix, std::vector<bool> period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {}
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> period_;
};

}  // namespace ultragrade
