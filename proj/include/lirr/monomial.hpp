#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lirr/variable.hpp"

namespace lirr {

// A monomial is a finite map variable -> positive exponent, stored as a
// sorted vector. The empty map is the monomial 1.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
  }
  static Monomial var(VarId v, std::uint32_t exp = 1) {
    Monomial m;
    if (exp > 0) m.entries_.push_back({v, exp});
    return m;
  }

  bool is_one() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::uint32_t exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
    return (it != entries_.end() && it->first == v) ? it->second : 0;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
  }

  template <typename Pred>
  bool all_vars(Pred pred) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return pred(e.first); });
  }
  template <typename Pred>
  bool any_var(Pred pred) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return pred(e.first); });
  }

  // Is this a single variable to the first power?
  bool is_variable() const { return entries_.size() == 1 && entries_[0].second == 1; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
      if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        r.entries_.push_back(*a++);
      } else if (a == entries_.end() || b->first < a->first) {
        r.entries_.push_back(*b++);
      } else {
        r.entries_.push_back({a->first, a->second + b->second});
        ++a;
        ++b;
      }
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (const auto& [v, e] : entries_)
      if (o.exponent(v) < e) return false;
    return true;
  }

  // Quotient; requires divides(o) == false ... caller must ensure this / o is defined.
  Monomial divide_into(const Monomial& o) const {  // returns o / this
    Monomial r;
    auto a = o.entries_.begin();
    for (; a != o.entries_.end(); ++a) {
      std::uint32_t e = a->second - exponent(a->first);
      if (e > 0) r.entries_.push_back({a->first, e});
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
        r.entries_.push_back(*i++);
      } else if (i == a.entries_.end() || j->first < i->first) {
        r.entries_.push_back(*j++);
      } else {
        r.entries_.push_back({i->first, std::max(i->second, j->second)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (const auto& [v, e] : entries_)
      if (o.exponent(v) > 0) return false;
    return true;
  }

  // Split into (part over vars satisfying pred, rest).
  template <typename Pred>
  std::pair<Monomial, Monomial> split(Pred pred) const {
    Monomial in, out;
    for (const auto& e : entries_) (pred(e.first) ? in : out).entries_.push_back(e);
    return {in, out};
  }

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  bool operator!=(const Monomial& o) const { return entries_ != o.entries_; }

  // Canonical, order-independent comparison used for container keys only.
  // The active monomial ordering lives in ordering.hpp.
  bool operator<(const Monomial& o) const { return entries_ < o.entries_; }

  std::string str(const VariableContext& ctx) const {
    if (is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : entries_) {
      if (!s.empty()) s += "*";
      s += ctx.name(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Entry> entries_;
};

}  // namespace lirr
