#include "tvg/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "tvg/error.hpp"

namespace tvg {

namespace {

class BigFloat {
 public:
  explicit BigFloat(long precision) { mpfr_init2(value_, precision); }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  BigFloat& operator=(BigFloat&&) = delete;
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
Poly divide_monic(Poly dividend, const Poly& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (dividend.size() < divisor.size()) return {};
  Poly quotient(dividend.size() - dd);
  for (std::size_t i = dividend.size(); i-- > dd;) {
    const Integer c = dividend[i];
    quotient[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) dividend[i - dd + j] -= c * divisor[j];
  }
  return quotient;
}

Poly cyclotomic_impl(unsigned order, std::map<unsigned, Poly>& memo) {
  if (auto it = memo.find(order); it != memo.end()) return it->second;
  Poly result(order + 1);
  result[0] = -1;
  result[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d == 0) result = divide_monic(std::move(result), cyclotomic_impl(d, memo));
  }
  memo.emplace(order, result);
  return result;
}

// Minimal polynomial of 2*cos(2*pi/m), obtained from the palindromic
// cyclotomic polynomial through z^j + z^-j = D_j(z + 1/z).
Poly real_subfield_min_poly(unsigned order) {
  if (order == 1) return {Integer(-2), Integer(1)};
  if (order == 2) return {Integer(2), Integer(1)};
  const Poly phi = cyclotomic_polynomial(order);
  const std::size_t k = (phi.size() - 1) / 2;
  Poly result(k + 1);
  result[0] = phi[k];
  Poly d_prev{Integer(2)};       // D_0
  Poly d_cur{Integer(0), Integer(1)};  // D_1
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t i = 0; i < d_cur.size(); ++i) result[i] += phi[k + j] * d_cur[i];
    Poly d_next(d_cur.size() + 1);
    for (std::size_t i = 0; i < d_cur.size(); ++i) d_next[i + 1] += d_cur[i];
    for (std::size_t i = 0; i < d_prev.size(); ++i) d_next[i] -= d_prev[i];
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  trim(result);
  return result;
}

// p <- p mod min_poly, in place; min_poly is monic.
void reduce(Poly& p, const Poly& min_poly) {
  const std::size_t k = min_poly.size() - 1;
  for (std::size_t i = p.size(); i-- > k;) {
    if (p[i] == 0) continue;
    const Integer c = p[i];
    for (std::size_t j = 0; j < k; ++j) {
      mpz_submul(p[i - k + j].get_mpz_t(), c.get_mpz_t(), min_poly[j].get_mpz_t());
    }
    p[i] = 0;
  }
  if (p.size() > k) p.resize(k);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw TvgError(Errc::InvalidArguments, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, Poly> memo;
  std::lock_guard lock(mutex);
  return cyclotomic_impl(order, memo);
}

struct CyclotomicField::Enclosures {
  std::vector<BigFloat> lower;
  std::vector<BigFloat> upper;
};

struct CyclotomicField::Cache {
  std::mutex mutex;
  std::map<long, std::unique_ptr<Enclosures>> by_precision;
};

CyclotomicField::CyclotomicField(unsigned order)
    : order_(order), min_poly_(real_subfield_min_poly(order)), cache_(std::make_unique<Cache>()) {}

CyclotomicField::~CyclotomicField() = default;

const CyclotomicField& CyclotomicField::get(unsigned order) {
  if (order < 3) throw TvgError(Errc::InvalidArguments, "cyclotomic field order must be at least 3");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

const CyclotomicField::Enclosures& CyclotomicField::enclosures(long precision) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->by_precision[precision];
  if (slot) return *slot;

  // eta = 2 cos(2 pi / m) with 2 pi / m in (0, pi], where cos is decreasing.
  const long work = precision + 16;
  BigFloat pi_lo(work), pi_hi(work), x_lo(work), x_hi(work), eta_lo(work), eta_hi(work);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_ui(x_lo.get(), pi_lo.get(), 2, MPFR_RNDD);
  mpfr_div_ui(x_lo.get(), x_lo.get(), order_, MPFR_RNDD);
  mpfr_mul_ui(x_hi.get(), pi_hi.get(), 2, MPFR_RNDU);
  mpfr_div_ui(x_hi.get(), x_hi.get(), order_, MPFR_RNDU);
  mpfr_cos(eta_lo.get(), x_hi.get(), MPFR_RNDD);
  mpfr_cos(eta_hi.get(), x_lo.get(), MPFR_RNDU);
  mpfr_mul_ui(eta_lo.get(), eta_lo.get(), 2, MPFR_RNDD);
  mpfr_mul_ui(eta_hi.get(), eta_hi.get(), 2, MPFR_RNDU);

  auto enc = std::make_unique<Enclosures>();
  const std::size_t k = degree();
  for (std::size_t i = 0; i < k; ++i) {
    BigFloat lo(work), hi(work);
    if (i == 0) {
      mpfr_set_ui(lo.get(), 1, MPFR_RNDD);
      mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    } else {
      // eta > 0 whenever the degree exceeds one (order >= 5).
      mpfr_mul(lo.get(), enc->lower.back().get(), eta_lo.get(), MPFR_RNDD);
      mpfr_mul(hi.get(), enc->upper.back().get(), eta_hi.get(), MPFR_RNDU);
    }
    enc->lower.push_back(std::move(lo));
    enc->upper.push_back(std::move(hi));
  }
  slot = std::move(enc);
  return *slot;
}

std::optional<int> CyclotomicField::interval_sign(const std::vector<Integer>& num, long precision) const {
  const Enclosures& enc = enclosures(precision);
  const long work = precision + 16;
  BigFloat lo(work), hi(work), term(work);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (std::size_t i = 0; i < num.size(); ++i) {
    const int s = sgn(num[i]);
    if (s == 0) continue;
    const mpz_srcptr c = num[i].get_mpz_t();
    mpfr_mul_z(term.get(), (s > 0 ? enc.lower[i] : enc.upper[i]).get(), c, MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), term.get(), MPFR_RNDD);
    mpfr_mul_z(term.get(), (s > 0 ? enc.upper[i] : enc.lower[i]).get(), c, MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), term.get(), MPFR_RNDU);
  }
  if (mpfr_sgn(lo.get()) > 0) return 1;
  if (mpfr_sgn(hi.get()) < 0) return -1;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) num_.emplace_back(value);
}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (sgn(value) != 0) {
    num_.push_back(value.get_num());
    den_ = value.get_den();
  }
}

Cyclotomic::Cyclotomic(const Cyclotomic& other)
    : field_(other.field_), num_(other.num_), den_(other.den_),
      sign_cache_(other.sign_cache_.load(std::memory_order_relaxed)) {}

Cyclotomic::Cyclotomic(Cyclotomic&& other) noexcept
    : field_(other.field_), num_(std::move(other.num_)), den_(std::move(other.den_)),
      sign_cache_(other.sign_cache_.load(std::memory_order_relaxed)) {}

Cyclotomic& Cyclotomic::operator=(const Cyclotomic& other) {
  if (this != &other) {
    field_ = other.field_;
    num_ = other.num_;
    den_ = other.den_;
    sign_cache_.store(other.sign_cache_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator=(Cyclotomic&& other) noexcept {
  field_ = other.field_;
  num_ = std::move(other.num_);
  den_ = std::move(other.den_);
  sign_cache_.store(other.sign_cache_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

Cyclotomic Cyclotomic::from_coefficients(const CyclotomicField& field, const std::vector<Rational>& coeffs) {
  Cyclotomic x;
  x.field_ = &field;
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  x.num_.reserve(coeffs.size());
  for (const auto& c : coeffs) x.num_.push_back(c.get_num() * (den / c.get_den()));
  x.den_ = den;
  reduce(x.num_, field.min_poly());
  x.normalize();
  return x;
}

Cyclotomic Cyclotomic::cos_2pi(const CyclotomicField& field, long k) {
  const long m = field.order();
  k %= m;
  if (k < 0) k += m;
  if (k > m / 2) k = m - k;
  // 2 cos(j theta) = D_j(eta) with D_0 = 2, D_1 = eta, D_{j+1} = eta D_j - D_{j-1}.
  Cyclotomic eta = from_coefficients(field, {Rational(0), Rational(1)});
  Cyclotomic prev(2);
  prev.field_ = &field;
  Cyclotomic cur = eta;
  if (k == 0) return Cyclotomic(1);
  for (long j = 1; j < k; ++j) {
    Cyclotomic next = eta * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.den_ *= 2;
  cur.normalize();
  return cur;
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

void Cyclotomic::normalize() {
  trim(num_);
  sign_cache_.store(2, std::memory_order_relaxed);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void Cyclotomic::adopt_field(const Cyclotomic& other) {
  if (other.field_ == nullptr || other.field_ == field_) return;
  if (field_ == nullptr || is_rational()) {
    field_ = other.field_;
    return;
  }
  if (!other.is_rational()) {
    throw TvgError(Errc::FieldMismatch, "operands live in different cyclotomic fields");
  }
}

int Cyclotomic::sign() const {
  const signed char cached = sign_cache_.load(std::memory_order_relaxed);
  if (cached != 2) return cached;
  int s = 0;
  if (num_.size() == 1) {
    s = sgn(num_[0]);
  } else if (num_.size() > 1) {
    for (long precision = 64;; precision *= 2) {
      if (precision > (1L << 24)) throw std::logic_error("cyclotomic sign did not isolate");
      if (auto r = field_->interval_sign(num_, precision)) {
        s = *r;
        break;
      }
    }
  }
  sign_cache_.store(static_cast<signed char>(s), std::memory_order_relaxed);
  return s;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  adopt_field(rhs);
  if (rhs.num_.empty()) return *this;
  if (den_ == rhs.den_) {
    if (num_.size() < rhs.num_.size()) num_.resize(rhs.num_.size());
    for (std::size_t i = 0; i < rhs.num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    const Integer g = gcd(den_, rhs.den_);
    const Integer lhs_scale = rhs.den_ / g;
    const Integer rhs_scale = den_ / g;
    if (num_.size() < rhs.num_.size()) num_.resize(rhs.num_.size());
    for (auto& c : num_) c *= lhs_scale;
    for (std::size_t i = 0; i < rhs.num_.size(); ++i) {
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), rhs_scale.get_mpz_t());
    }
    den_ *= lhs_scale;
  }
  normalize();
  return *this;
}

Cyclotomic operator-(Cyclotomic value) {
  for (auto& c : value.num_) c = -c;
  const signed char cached = value.sign_cache_.load(std::memory_order_relaxed);
  if (cached != 2) value.sign_cache_.store(static_cast<signed char>(-cached), std::memory_order_relaxed);
  return value;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  Cyclotomic out;
  if (!lhs.is_rational() && !rhs.is_rational() && lhs.field_ != rhs.field_) {
    throw TvgError(Errc::FieldMismatch, "operands live in different cyclotomic fields");
  }
  out.field_ = !lhs.is_rational() || rhs.field_ == nullptr ? lhs.field_ : rhs.field_;
  if (lhs.num_.empty() || rhs.num_.empty()) return out;
  if (lhs.num_.size() == 1 || rhs.num_.size() == 1) {
    const bool lhs_scalar = lhs.num_.size() == 1;
    const Cyclotomic& vec = lhs_scalar ? rhs : lhs;
    const Integer& scale = lhs_scalar ? lhs.num_[0] : rhs.num_[0];
    out.num_ = vec.num_;
    for (auto& c : out.num_) c *= scale;
  } else {
    out.num_.assign(lhs.num_.size() + rhs.num_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < lhs.num_.size(); ++i) {
      if (lhs.num_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.num_.size(); ++j) {
        mpz_addmul(out.num_[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
      }
    }
    reduce(out.num_, out.field_->min_poly());
  }
  out.den_ = lhs.den_ * rhs.den_;
  out.normalize();
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this * rhs.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (num_.empty()) throw TvgError(Errc::DivisionByZero, "inverse of zero");
  Cyclotomic out;
  out.field_ = field_;
  if (num_.size() == 1) {
    out.num_.push_back(den_);
    out.den_ = num_[0];
    if (out.den_ < 0) {
      out.den_ = -out.den_;
      out.num_[0] = -out.num_[0];
    }
    out.normalize();
    return out;
  }

  // Solve M x = e_0 where column j of M holds the coefficients of c * eta^j;
  // then x = c^{-1} and (c/den)^{-1} = den * x.  Fraction-free elimination
  // keeps everything in Z until the final division by det(M).
  const auto& psi = field_->min_poly();
  const std::size_t k = field_->degree();
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k + 1, Integer(0)));
  Poly col = num_;
  col.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[i][j] = col[i];
    // col <- col * eta mod psi
    Poly next(k + 1);
    for (std::size_t i = 0; i < k; ++i) next[i + 1] = col[i];
    reduce(next, psi);
    next.resize(k);
    col = std::move(next);
  }
  a[0][k] = 1;

  Integer prev_pivot = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
      if (swap_row == k) throw std::logic_error("singular multiplication matrix in a field");
      std::swap(a[p], a[swap_row]);
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j <= k; ++j) {
        Integer v = a[i][j] * a[p][p];
        mpz_submul(v.get_mpz_t(), a[i][p].get_mpz_t(), a[p][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][p] = 0;
    }
    prev_pivot = a[p][p];
  }
  const Integer det = a[k - 1][k - 1];
  // Back substitution on det-scaled unknowns: y = det * x is integral.
  Poly y(k);
  for (std::size_t i = k; i-- > 0;) {
    Integer acc = det * a[i][k];
    for (std::size_t j = i + 1; j < k; ++j) mpz_submul(acc.get_mpz_t(), a[i][j].get_mpz_t(), y[j].get_mpz_t());
    mpz_divexact(y[i].get_mpz_t(), acc.get_mpz_t(), a[i][i].get_mpz_t());
  }
  for (auto& c : y) c *= den_;
  out.num_ = std::move(y);
  out.den_ = det;
  if (out.den_ < 0) {
    out.den_ = -out.den_;
    for (auto& c : out.num_) c = -c;
  }
  out.normalize();
  return out;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.num_.size() > 1 && rhs.num_.size() > 1 && lhs.field_ != rhs.field_) {
    throw TvgError(Errc::FieldMismatch, "comparing values from different cyclotomic fields");
  }
  return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

std::strong_ordering operator<=>(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Cyclotomic& x) {
  if (x.is_zero()) return "[0]";
  std::string out = "[";
  const auto coeffs = x.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ' ';
    out += to_string(coeffs[i]);
  }
  out += ']';
  return out;
}

Cyclotomic parse_cyclotomic(const CyclotomicField& field, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw TvgError(Errc::ParseError, "cyclotomic entry must be bracketed: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    coeffs.push_back(parse_rational(text.substr(pos, end - pos)));
    pos = end;
  }
  if (coeffs.empty()) throw TvgError(Errc::ParseError, "empty cyclotomic coefficient list");
  return Cyclotomic::from_coefficients(field, coeffs);
}

}  // namespace tvg
