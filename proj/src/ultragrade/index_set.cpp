#include "ultragrade/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ultragrade/error.hpp"

namespace ultragrade {

namespace {

std::size_t checked_lcm(std::size_t a, std::size_t b) {
  std::size_t l = std::lcm(a, b);
  if (l > IndexSet::kMaxPeriod) {
    throw Error(ErrorCode::LimitExceeded, "index set period exceeds " + std::to_string(IndexSet::kMaxPeriod));
  }
  return l;
}

std::strong_ordering compare_bits(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

IndexSet IndexSet::singleton(std::uint64_t n) {
  std::vector<bool> prefix(n + 1, false);
  prefix[n] = true;
  return IndexSet(std::move(prefix), {false});
}

IndexSet IndexSet::below(std::uint64_t n) { return IndexSet(std::vector<bool>(n, true), {false}); }

IndexSet IndexSet::progression(std::uint64_t a, std::uint64_t b, std::uint64_t k0) {
  if (a == 0) return singleton(b);
  if (a > kMaxPeriod) throw Error(ErrorCode::LimitExceeded, "progression step too large");
  std::vector<bool> period(a, false);
  period[0] = true;
  IndexSet s(std::vector<bool>(a * k0 + b, false), std::move(period));
  s.canonicalize();
  return s;
}

IndexSet IndexSet::from_bits(std::vector<bool> prefix, std::vector<bool> period) {
  if (period.empty()) period.push_back(false);
  IndexSet s(std::move(prefix), std::move(period));
  s.canonicalize();
  return s;
}

void IndexSet::canonicalize() {
  // Minimal period: smallest divisor d of |period| with period[i] == period[i+d].
  const std::size_t q = period_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < q && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  // Minimal prefix: absorb trailing prefix bits into a rotated period.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    bool last = period_.back();
    period_.pop_back();
    period_.insert(period_.begin(), last);
    prefix_.pop_back();
  }
}

bool IndexSet::contains(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return period_[(n - prefix_.size()) % period_.size()];
}

bool IndexSet::is_subset_of(const IndexSet& other) const { return (*this - other).is_empty(); }

std::optional<std::uint64_t> IndexSet::min() const { return next_at_or_after(0); }

std::optional<std::uint64_t> IndexSet::next_at_or_after(std::uint64_t n) const {
  const std::uint64_t horizon = std::max<std::uint64_t>(n, prefix_.size()) + period_.size();
  for (std::uint64_t i = n; i < horizon; ++i) {
    if (contains(i)) return i;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> IndexSet::elements() const {
  if (!is_finite()) throw Error(ErrorCode::NotFinite, "elements() on an infinite index set");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::uint64_t> IndexSet::first(std::size_t limit) const {
  std::vector<std::uint64_t> out;
  std::uint64_t n = 0;
  while (out.size() < limit) {
    auto next = next_at_or_after(n);
    if (!next) break;
    out.push_back(*next);
    n = *next + 1;
  }
  return out;
}

std::uint64_t IndexSet::count() const { return elements().size(); }

namespace {

template <typename Op>
IndexSet combine(const IndexSet& x, const IndexSet& y, Op op) {
  const std::size_t p = std::max(x.prefix_length(), y.prefix_length());
  const std::size_t q = checked_lcm(x.period_length(), y.period_length());
  std::vector<bool> prefix(p), period(q);
  for (std::size_t i = 0; i < p; ++i) prefix[i] = op(x.contains(i), y.contains(i));
  for (std::size_t i = 0; i < q; ++i) period[i] = op(x.contains(p + i), y.contains(p + i));
  return IndexSet::from_bits(std::move(prefix), std::move(period));
}

}  // namespace

IndexSet IndexSet::operator|(const IndexSet& o) const {
  return combine(*this, o, [](bool a, bool b) { return a || b; });
}
IndexSet IndexSet::operator&(const IndexSet& o) const {
  return combine(*this, o, [](bool a, bool b) { return a && b; });
}
IndexSet IndexSet::operator-(const IndexSet& o) const {
  return combine(*this, o, [](bool a, bool b) { return a && !b; });
}

IndexSet IndexSet::complement() const {
  std::vector<bool> prefix(prefix_.size()), period(period_.size());
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = !prefix_[i];
  for (std::size_t i = 0; i < period.size(); ++i) period[i] = !period_[i];
  return from_bits(std::move(prefix), std::move(period));
}

IndexSet IndexSet::preimage_affine(std::uint64_t a, std::int64_t b, std::uint64_t k0) const {
  auto value_in = [&](std::uint64_t k) {
    std::int64_t m = static_cast<std::int64_t>(a * k) + b;
    return m >= 0 && contains(static_cast<std::uint64_t>(m));
  };
  if (a == 0) {
    return value_in(0) ? progression(1, k0) : empty();
  }
  // For k >= start the image a*k+b lies in the periodic part, whose pattern
  // repeats with a period dividing |period|.
  std::int64_t need = static_cast<std::int64_t>(prefix_.size()) - b;
  std::uint64_t start = need <= 0 ? 0 : static_cast<std::uint64_t>((need + static_cast<std::int64_t>(a) - 1) / static_cast<std::int64_t>(a));
  start = std::max(start, k0);
  std::vector<bool> prefix(start), period(period_.size());
  for (std::uint64_t k = k0; k < start; ++k) prefix[k] = value_in(k);
  for (std::size_t i = 0; i < period.size(); ++i) period[i] = value_in(start + i);
  return from_bits(std::move(prefix), std::move(period));
}

IndexSet IndexSet::image_affine(std::uint64_t a, std::int64_t b) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "image_affine requires a >= 1");
  if (is_empty()) return empty();
  if (static_cast<std::int64_t>(a * *min()) + b < 0) {
    throw Error(ErrorCode::InvalidArgument, "affine image has negative indices");
  }
  const std::size_t q = a * period_.size();
  if (q > kMaxPeriod) throw Error(ErrorCode::LimitExceeded, "affine image period too large");
  const std::int64_t p_signed = static_cast<std::int64_t>(a * prefix_.size()) + b;
  const std::size_t p = p_signed < 0 ? 0 : static_cast<std::size_t>(p_signed);
  auto bit = [&](std::uint64_t m) {
    std::int64_t d = static_cast<std::int64_t>(m) - b;
    return d >= 0 && d % static_cast<std::int64_t>(a) == 0 && contains(static_cast<std::uint64_t>(d) / a);
  };
  std::vector<bool> prefix(p), period(q);
  for (std::size_t m = 0; m < p; ++m) prefix[m] = bit(m);
  for (std::size_t i = 0; i < q; ++i) period[i] = bit(p + i);
  return from_bits(std::move(prefix), std::move(period));
}

void IndexSet::decompose(std::vector<std::uint64_t>& points, std::vector<Progression>& progressions) const {
  points.clear();
  progressions.clear();
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) points.push_back(i);
  }
  if (is_finite()) return;
  if (is_cofinite()) {
    progressions.push_back({1, prefix_.size()});
    return;
  }
  for (std::size_t r = 0; r < period_.size(); ++r) {
    if (period_[r]) progressions.push_back({period_.size(), prefix_.size() + r});
  }
}

std::string IndexSet::to_string() const {
  std::vector<std::uint64_t> points;
  std::vector<Progression> progs;
  decompose(points, progs);
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto p : points) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  for (const auto& g : progs) {
    os << (first ? "" : ",") << g.step << "k+" << g.start;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = compare_bits(a.prefix_, b.prefix_); c != 0) return c;
  return compare_bits(a.period_, b.period_);
}

}  // namespace ultragrade
