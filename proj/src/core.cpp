#include "adfbn/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace adfbn {

Signature::Signature(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("signature must not be empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& name = names_[i];
    if (name.empty()) throw std::invalid_argument("empty argument name");
    if (name.find_first_of(" \t\r\n,") != std::string::npos)
      throw std::invalid_argument("argument name contains whitespace or comma: " + name);
    if (!index_.emplace(name, i).second) throw std::invalid_argument("duplicate argument: " + name);
  }
}

std::size_t Signature::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("unknown argument: " + std::string(name));
  return it->second;
}

bool Signature::contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

char to_char(TruthValue t) {
  switch (t) {
    case TruthValue::zero: return '0';
    case TruthValue::one: return '1';
    case TruthValue::undecided: return '-';
  }
  return '?';
}

TwoValuedState::TwoValuedState(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t TwoValuedState::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string TwoValuedState::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out[i] = '1';
  return out;
}

TwoValuedState TwoValuedState::from_string(std::string_view text) {
  TwoValuedState x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw std::invalid_argument("bad state character");
    x.set(i, text[i] == '1');
  }
  return x;
}

Interpretation::Interpretation(const TwoValuedState& x) : values_(x.size()) {
  for (std::size_t i = 0; i < x.size(); ++i) values_[i] = truth(x[i]);
}

Interpretation Interpretation::from_string(std::string_view text) {
  Interpretation v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': v.set(i, TruthValue::zero); break;
      case '1': v.set(i, TruthValue::one); break;
      case '-':
      case 'u': v.set(i, TruthValue::undecided); break;
      default: throw std::invalid_argument("bad interpretation character");
    }
  }
  return v;
}

Interpretation Interpretation::from_ordinal(std::uint64_t ordinal, std::size_t n) {
  Interpretation v(n);
  for (std::size_t i = n; i-- > 0;) {
    v.set(i, static_cast<TruthValue>(ordinal % 3));
    ordinal /= 3;
  }
  return v;
}

std::uint64_t Interpretation::ordinal() const {
  std::uint64_t k = 0;
  for (auto t : values_) k = k * 3 + static_cast<std::uint64_t>(t);
  return k;
}

std::size_t Interpretation::undecided_count() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), TruthValue::undecided));
}

std::string Interpretation::to_string() const {
  std::string out(values_.size(), '-');
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = to_char(values_[i]);
  return out;
}

TruthValue consensus(TruthValue p, TruthValue q) {
  if (p == q && is_decided(p)) return p;
  return TruthValue::undecided;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw SignatureMismatch(std::string(what) + ": signature mismatch");
}

bool info_leq(const Interpretation& v, const Interpretation& w) {
  require_same_size(v.size(), w.size(), "info_leq");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (is_decided(v[i]) && v[i] != w[i]) return false;
  return true;
}

std::vector<TwoValuedState> completions(const Interpretation& v, const Limits& limits) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_decided(v[i])) free.push_back(i);
  if (free.size() > limits.max_completion_bits)
    throw CapExceeded("completion enumeration exceeds 2^" + std::to_string(limits.max_completion_bits));

  TwoValuedState base(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) base.set(i, v[i] == TruthValue::one);

  std::vector<TwoValuedState> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    TwoValuedState x = base;
    // free[0] is the most significant free position, so output is index-sorted
    for (std::size_t j = 0; j < free.size(); ++j)
      x.set(free[j], (mask >> (free.size() - 1 - j)) & 1U);
    out.push_back(std::move(x));
  }
  return out;
}

bool is_completion(const Interpretation& v, const TwoValuedState& x) {
  require_same_size(v.size(), x.size(), "is_completion");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (is_decided(v[i]) && (v[i] == TruthValue::one) != x[i]) return false;
  return true;
}

std::uint64_t state_index(const TwoValuedState& x) {
  if (x.size() > 63) throw CapExceeded("state index needs more than 63 bits");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = (idx << 1) | (x[i] ? 1U : 0U);
  return idx;
}

TwoValuedState state_from_index(std::uint64_t index, std::size_t n) {
  if (n > 63) throw CapExceeded("state index needs more than 63 bits");
  if (index >= (std::uint64_t{1} << n)) throw std::out_of_range("state index out of range");
  TwoValuedState x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, (index & index_bit(i, n)) != 0);
  return x;
}

std::uint64_t pow3(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (p > UINT64_MAX / 3) return UINT64_MAX;
    p *= 3;
  }
  return p;
}

std::vector<std::uint64_t> info_maximal_ordinals(std::size_t n, const std::vector<std::uint8_t>& member) {
  const std::uint64_t total = pow3(n);
  if (member.size() != total) throw std::invalid_argument("info_maximal_ordinals: size mismatch");

  std::vector<std::uint64_t> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = pow3(n - 1 - i);

  // Bucket ordinals by undecided count, then sweep from fully decided upward:
  // at_or_above[v] = member[v] or at_or_above of some one-step refinement.
  std::vector<std::vector<std::uint64_t>> buckets(n + 1);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rest = k;
    std::uint8_t u = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rest % 3 == 2) ++u;
      rest /= 3;
    }
    buckets[u].push_back(k);
  }

  std::vector<std::uint8_t> at_or_above(total, 0);
  std::vector<std::uint64_t> out;
  for (std::size_t u = 0; u <= n; ++u) {
    for (auto k : buckets[u]) {
      bool strictly_above = false;
      for (std::size_t i = 0; i < n && !strictly_above; ++i) {
        if ((k / weight[i]) % 3 != 2) continue;
        const std::uint64_t as_zero = k - 2 * weight[i];
        const std::uint64_t as_one = k - weight[i];
        strictly_above = at_or_above[as_zero] || at_or_above[as_one];
      }
      at_or_above[k] = member[k] || strictly_above;
      if (member[k] && !strictly_above) out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_set(const Signature& sig, const TwoValuedState& x) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    if (!first) out += ',';
    out += sig.name(i);
    first = false;
  }
  return out + "}";
}

}  // namespace adfbn
