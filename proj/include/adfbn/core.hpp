#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adfbn/errors.hpp"

namespace adfbn {

/// Ordered set of argument (gene) names. Position 0 is the most significant
/// bit of a state's decimal index.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`; throws std::out_of_range when unknown.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class TruthValue : std::uint8_t { zero = 0, one = 1, undecided = 2 };

inline bool is_decided(TruthValue t) { return t != TruthValue::undecided; }
inline TruthValue truth(bool b) { return b ? TruthValue::one : TruthValue::zero; }
char to_char(TruthValue t);

/// Two-valued function on the signature; also an extension's indicator.
class TwoValuedState {
public:
  TwoValuedState() = default;
  explicit TwoValuedState(std::size_t n) : bits_(n, 0) {}
  explicit TwoValuedState(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  std::size_t count() const;

  /// "1001"-style rendering.
  std::string to_string() const;
  static TwoValuedState from_string(std::string_view text);

  auto operator<=>(const TwoValuedState&) const = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Three-valued interpretation; read geometrically as the subcube of its
/// completions.
class Interpretation {
public:
  Interpretation() = default;
  explicit Interpretation(std::size_t n, TruthValue fill = TruthValue::undecided) : values_(n, fill) {}
  explicit Interpretation(std::vector<TruthValue> values) : values_(std::move(values)) {}
  explicit Interpretation(const TwoValuedState& x);

  static Interpretation all_undecided(std::size_t n) { return Interpretation(n); }
  /// Parses "10--" ('-' or 'u' for undecided).
  static Interpretation from_string(std::string_view text);
  /// Inverse of ordinal(): base-3 digits 0,1,2(=u), position 0 most significant.
  static Interpretation from_ordinal(std::uint64_t ordinal, std::size_t n);

  std::size_t size() const { return values_.size(); }
  TruthValue operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, TruthValue t) { values_[i] = t; }
  const std::vector<TruthValue>& values() const { return values_; }

  std::size_t undecided_count() const;
  std::size_t decided_count() const { return size() - undecided_count(); }
  bool is_two_valued() const { return undecided_count() == 0; }
  std::uint64_t ordinal() const;

  /// One character per argument: '1', '0', '-'.
  std::string to_string() const;

  auto operator<=>(const Interpretation&) const = default;

private:
  std::vector<TruthValue> values_;
};

/// 0 ⊓ 0 = 0, 1 ⊓ 1 = 1, u otherwise.
TruthValue consensus(TruthValue p, TruthValue q);

/// v ≤_i w: every decided value of v is kept by w.
bool info_leq(const Interpretation& v, const Interpretation& w);
inline bool info_less(const Interpretation& v, const Interpretation& w) { return v != w && info_leq(v, w); }
/// Knowledge (subcube) order used when reporting trap spaces: v ≤_k w iff w ≤_i v.
inline bool subcube_leq(const Interpretation& v, const Interpretation& w) { return info_leq(w, v); }

/// All two-valued x with v ≤_i x, in increasing index order.
std::vector<TwoValuedState> completions(const Interpretation& v, const Limits& limits = Limits::defaults());
bool is_completion(const Interpretation& v, const TwoValuedState& x);

/// Decimal name of a state: position 0 is the most significant bit.
std::uint64_t state_index(const TwoValuedState& x);
TwoValuedState state_from_index(std::uint64_t index, std::size_t n);

/// Bit of argument `i` inside a state index over `n` arguments.
inline std::uint64_t index_bit(std::size_t i, std::size_t n) { return std::uint64_t{1} << (n - 1 - i); }

std::uint64_t pow3(std::size_t n);

/// Ordinals v (see Interpretation::ordinal) with member[v] set and no member
/// w with v <_i w. `member` spans all 3^n ordinals.
std::vector<std::uint64_t> info_maximal_ordinals(std::size_t n, const std::vector<std::uint8_t>& member);

/// "{a,d}" rendering of an extension.
std::string render_set(const Signature& sig, const TwoValuedState& x);

void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace adfbn
