#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace necklace {

using Integer = mpz_class;

/// Finite formal sum of keys with integer coefficients. Zero coefficients
/// are never stored, and iteration order is the key order, which keeps
/// every matrix built from these sums reproducible.
template <class Key>
class LinComb {
public:
  using Map = std::map<Key, Integer>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(Key key, Integer coef = 1) { add(std::move(key), std::move(coef)); }

  void add(const Key& key, const Integer& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Integer& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinComb& operator+=(const LinComb& other) { add(other); return *this; }
  LinComb& operator-=(const LinComb& other) { add(other, -1); return *this; }
  LinComb& operator*=(const Integer& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Integer& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Integer(-1); }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Applies a key-wise linear map.
  template <class OutKey, class F>
  LinComb<OutKey> map_linear(F&& f) const {
    LinComb<OutKey> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

private:
  Map terms_;
};

/// Extends a generator-level map linearly.
template <class In, class Out, class F>
LinComb<Out> apply_linear(const LinComb<In>& x, F&& f) {
  LinComb<Out> out;
  for (const auto& [k, c] : x) out.add(f(k), c);
  return out;
}

inline int sign_of_parity(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace necklace
