#pragma once

// Cyclotomic classes and Gauss periods.
//
// C_i^(N,r) = alpha^i <alpha^N>, and the Gauss period eta_i^(N,r) is the sum
// of zeta_p^Tr(x) over that class, kept exactly in Z[zeta_p]. Closed-form
// evaluations for the classical families (orders 2, 3, 4, the
// semi-primitive case and the index-2 case) return SurdValues and are
// compared against the brute-force sums through complex embeddings.

#include <complex>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecodes/arith.hpp"
#include "tracecodes/cyclotomic_integer.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/surd.hpp"

namespace tracecodes {

/// Either a value or the reason a construction does not apply. Not-applicable
/// is an ordinary answer here (for example N = 3 when p = 2 mod 3), so it is
/// returned rather than thrown.
template <class T>
class Outcome {
 public:
  static Outcome ok(T value) {
    Outcome o;
    o.value_ = std::move(value);
    return o;
  }
  static Outcome not_applicable(std::string reason) {
    Outcome o;
    o.reason_ = std::move(reason);
    return o;
  }

  explicit operator bool() const { return value_.has_value(); }
  [[nodiscard]] bool has_value() const { return value_.has_value(); }
  [[nodiscard]] const T& value() const {
    if (!value_) throw ParameterError(reason_);
    return *value_;
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  std::optional<T> value_;
  std::string reason_;
};

// ---------------------------------------------------------------------------
// Classes

/// Lazily iterable C_i^(N,r); yields alpha^(i + kN) for k = 0 .. (r-1)/N - 1.
class CyclotomicClass {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const FieldElement*;
    using reference = FieldElement;

    iterator() = default;
    iterator(const Field* f, FieldElement x, FieldElement step, u64 k) : f_(f), x_(x), step_(step), k_(k) {}
    FieldElement operator*() const { return x_; }
    iterator& operator++() {
      x_ = f_->mul(x_, step_);
      ++k_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return k_ == o.k_; }

   private:
    const Field* f_ = nullptr;
    FieldElement x_{}, step_{};
    u64 k_ = 0;
  };

  CyclotomicClass(const Field& f, u64 N, i64 i);

  [[nodiscard]] iterator begin() const;
  [[nodiscard]] iterator end() const;
  [[nodiscard]] u64 size() const { return size_; }
  [[nodiscard]] u64 order() const { return N_; }
  [[nodiscard]] u64 index() const { return i_; }
  [[nodiscard]] bool contains(FieldElement x) const;

 private:
  const Field* f_;
  u64 N_, i_, size_;
};

/// Throws ParameterError unless N divides r - 1.
CyclotomicClass cyclotomic_class(const Field& f, u64 N, i64 i);

// ---------------------------------------------------------------------------
// Brute-force periods

struct GaussPeriodSet {
  std::uint32_t p = 2;
  unsigned degree = 1;  // extension degree of the field the classes live in
  u64 N = 1;
  std::vector<CyclotomicInteger> values;
  std::string provenance = "brute";

  [[nodiscard]] u64 field_size() const;
  /// eta_(i mod N).
  [[nodiscard]] const CyclotomicInteger& at(i64 i) const;
  [[nodiscard]] CyclotomicInteger sum() const;
  /// Integer values when every period is rational, else nullopt.
  [[nodiscard]] std::optional<std::vector<i64>> as_integers() const;
};

/// eta_i^(N,r) as an exact element of Z[zeta_p] (one class, Field arithmetic).
CyclotomicInteger gauss_period(const Field& f, u64 N, i64 i);

/// All N periods through the parallel trace-tally kernel.
GaussPeriodSet gauss_periods(const Field& f, u64 N);

/// Periods of order L of the subfield GF(q), q = p^s_sub, with classes
/// beta^i <beta^L> for beta = alpha^((r-1)/(q-1)) and the trace Tr_{q/p}.
GaussPeriodSet subfield_gauss_periods(const Field& f, unsigned s_sub, u64 L);

/// |eta_i + 1/N| <= (N-1) sqrt(r) / N + 1e-9 for every i.
bool check_period_bound(const GaussPeriodSet& periods);

// ---------------------------------------------------------------------------
// Closed forms

struct ClosedFormValue {
  SurdValue value;
  /// Class index when the formula fixes it; nullopt for members of an
  /// unordered group, which must be treated as a multiset.
  std::optional<u64> index;
};

struct ClosedFormSet {
  std::string family;  // quadratic | cubic | quartic | semiprimitive | index2
  std::uint32_t p = 2;
  unsigned sm = 1;  // r = p^sm
  u64 N = 1;
  std::vector<ClosedFormValue> values;  // N entries
  std::vector<std::string> notes;       // auxiliary solver output

  [[nodiscard]] bool has_unordered() const;
  /// Values ordered by class index, when every index is fixed.
  [[nodiscard]] std::optional<std::vector<SurdValue>> by_index() const;
  [[nodiscard]] std::vector<std::complex<double>> embeddings() const;
};

/// Orders 2, 3 and 4 (the latter two need p = 1 mod N and N | sm).
Outcome<ClosedFormSet> closed_form_small_N(u64 p, unsigned sm, u64 N);

/// 4 p^(e3/3) = c1^2 + 27 d1^2 with c1 = 1 mod 3, gcd(c1, p) = 1; returns (c1, |d1|).
Outcome<std::pair<i64, i64>> solve_c1_d1(u64 p, unsigned e3);

/// p^(e4/2) = s1^2 + 4 t1^2 with s1 = 1 mod 4, gcd(s1, p) = 1; returns (s1, |t1|).
Outcome<std::pair<i64, i64>> solve_s1_t1(u64 p, unsigned e4);

/// Least e >= 1 with p^e = -1 (mod N), if any.
std::optional<unsigned> semiprimitive_exponent(u64 p, u64 N);

/// Periods over r = p^(2ef) when e is the least exponent with p^e = -1 (mod N).
Outcome<ClosedFormSet> closed_form_semiprimitive(u64 p, unsigned e, unsigned f, u64 N);

/// Class number of Q(sqrt(-N)) for a prime N = 3 (mod 4), by counting reduced
/// forms of discriminant -N.
u64 class_number(u64 N);

/// Periods over r = p^((N-1)k/2) when <p> has index 2 in (Z/N)^*.
Outcome<ClosedFormSet> closed_form_index2(u64 p, u64 N, unsigned k);

/// Every closed form whose hypotheses hold for (p, sm, N).
std::vector<ClosedFormSet> applicable_closed_forms(u64 p, unsigned sm, u64 N);

/// Multiset agreement of embeddings within `tol`.
bool closed_form_matches(const ClosedFormSet& closed, const GaussPeriodSet& brute, double tol = 1e-9);

/// Index-by-index agreement for the values whose index the formula fixes.
bool closed_form_indices_match(const ClosedFormSet& closed, const GaussPeriodSet& brute, double tol = 1e-9);

/// Exact image of a surd in Z[zeta_p]. sqrt(D) is available when D = p* =
/// (-1)^((p-1)/2) p, through the quadratic Gauss sum; otherwise the value
/// must be rational. Throws IntegralityError if the result is not integral.
CyclotomicInteger surd_to_cyclotomic(const SurdValue& v, std::uint32_t p);

/// Period set with the closed-form values placed at their indices. Requires
/// every index to be fixed.
GaussPeriodSet to_period_set(const ClosedFormSet& closed);

}  // namespace tracecodes
