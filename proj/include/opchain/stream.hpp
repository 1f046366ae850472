#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opchain/errors.hpp"
#include "opchain/rational.hpp"

namespace opchain {

/// Name and parameters of a closed-form family, kept for serialisation.
struct ClosedForm {
  std::string name;
  std::map<std::string, std::string> params;
};

/// A sequence indexed from `first` that is either a finite vector or a
/// generator with an explicit valid range. Reading outside the range throws
/// StreamExhausted; a finite stream is never silently extended.
template <ScalarType T>
class Stream {
 public:
  using Generator = std::function<T(std::size_t)>;

  Stream() = default;

  static Stream finite(std::vector<T> values, std::size_t first = 1) {
    Stream s;
    s.first_ = first;
    s.values_ = std::make_shared<const std::vector<T>>(std::move(values));
    return s;
  }

  /// Valid for first <= n <= last (unbounded when last is nullopt).
  static Stream generated(Generator gen, std::size_t first = 1, std::optional<std::size_t> last = std::nullopt) {
    Stream s;
    s.first_ = first;
    s.gen_ = std::make_shared<const Generator>(std::move(gen));
    s.last_ = last;
    return s;
  }

  std::size_t first() const { return first_; }
  /// Last valid index, nullopt for unbounded streams.
  std::optional<std::size_t> last() const {
    if (values_) {
      if (values_->empty()) return first_ == 0 ? std::nullopt : std::optional<std::size_t>(first_ - 1);
      return first_ + values_->size() - 1;
    }
    if (!gen_) return first_ == 0 ? std::nullopt : std::optional<std::size_t>(first_ - 1);
    return last_;
  }
  bool is_finite() const { return values_ != nullptr || last_.has_value() || !gen_; }
  bool empty() const { return !has(first_); }

  bool has(std::size_t n) const {
    if (n < first_) return false;
    if (values_) return n - first_ < values_->size();
    if (!gen_) return false;
    return !last_ || n <= *last_;
  }

  T at(std::size_t n) const {
    if (!has(n)) throw Error(Errc::StreamExhausted, "index outside the stream's valid range", n);
    if (values_) return (*values_)[n - first_];
    return (*gen_)(n);
  }
  T operator[](std::size_t n) const { return at(n); }

  /// Materialises entries [first, last]; throws StreamExhausted if any is missing.
  std::vector<T> take(std::size_t last) const {
    std::vector<T> out;
    for (std::size_t n = first_; n <= last; ++n) out.push_back(at(n));
    return out;
  }

  template <ScalarType U, class F>
  Stream<U> map(F f) const {
    auto self = *this;
    if (values_) {
      std::vector<U> out;
      out.reserve(values_->size());
      for (const auto& v : *values_) out.push_back(f(v));
      return Stream<U>::finite(std::move(out), first_);
    }
    return Stream<U>::generated([self, f](std::size_t n) { return f(self.at(n)); }, first_, last_);
  }

 private:
  std::size_t first_ = 1;
  std::shared_ptr<const std::vector<T>> values_;
  std::shared_ptr<const Generator> gen_;
  std::optional<std::size_t> last_;
};

/// Smallest of two optional upper bounds (nullopt = unbounded).
inline std::optional<std::size_t> min_last(std::optional<std::size_t> a, std::optional<std::size_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace opchain
