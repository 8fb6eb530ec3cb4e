#include "parkfrob/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "parkfrob/errors.hpp"

namespace parkfrob {

LaurentQT::LaurentQT(long c) {
  if (c != 0) terms_.emplace(Exponent{}, BigInt(c));
}

LaurentQT::LaurentQT(const BigInt& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

LaurentQT LaurentQT::monomial(const BigInt& c, int q_exp, int t_exp) {
  LaurentQT r;
  r.add_term({q_exp, t_exp}, c);
  return r;
}

BigInt LaurentQT::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentQT::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
  LaurentQT r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
    }
  }
  return r;
}

LaurentQT& LaurentQT::operator*=(const LaurentQT& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentQT& LaurentQT::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentQT operator-(LaurentQT a) {
  for (auto& [e, v] : a.terms_) v = -v;
  return a;
}

LaurentQT LaurentQT::shifted(int dq, int dt) const {
  LaurentQT r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.q + dq, e.t + dt}, c);
  return r;
}

LaurentQT LaurentQT::swapped() const {
  LaurentQT r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.t, e.q}, c);
  return r;
}

namespace {

BigInt power(const BigInt& base, int exp) {
  if (exp >= 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
  }
  if (base == 1) return 1;
  if (base == -1) return (exp % 2 == 0) ? 1 : -1;
  throw input_error("eval: negative exponent at a point other than +1/-1");
}

}  // namespace

BigInt LaurentQT::eval(const BigInt& q_val, const BigInt& t_val) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(q_val, e.q) * power(t_val, e.t);
  return sum;
}

int LaurentQT::min_q() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.q);
  return m;
}

int LaurentQT::max_q() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.q);
  return m;
}

int LaurentQT::min_t() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.t);
  return m;
}

int LaurentQT::max_t() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.t);
  return m;
}

bool LaurentQT::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

bool LaurentQT::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.q >= 0 && kv.first.t >= 0; });
}

std::optional<LaurentQT> LaurentQT::divide_exact(const LaurentQT& divisor) const {
  if (divisor.is_zero()) throw input_error("division by zero Laurent polynomial");
  if (is_zero()) return LaurentQT{};

  // Any exact quotient has its exponents inside this box; together with the
  // strictly decreasing leading monomial of the remainder this bounds the loop.
  const int q_lo = min_q() - divisor.min_q();
  const int q_hi = max_q() - divisor.max_q();
  const int t_lo = min_t() - divisor.min_t();
  const int t_hi = max_t() - divisor.max_t();
  if (q_lo > q_hi || t_lo > t_hi) return std::nullopt;

  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  LaurentQT rem = *this;
  LaurentQT quot;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    const Exponent e{re.q - lead_e.q, re.t - lead_e.t};
    if (e.q < q_lo || e.q > q_hi || e.t < t_lo || e.t > t_hi) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const BigInt c = rc / lead_c;
    quot.add_term(e, c);
    rem -= divisor * monomial(c, e.q, e.t);
  }
  return quot;
}

std::string LaurentQT::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (e.q == 0 && e.t == 0);
    if (mag != 1 || unit) {
      os << mag.get_str();
      if (!unit) os << "*";
    }
    if (e.q != 0) {
      os << "q";
      if (e.q != 1) os << "^" << e.q;
      if (e.t != 0) os << "*";
    }
    if (e.t != 0) {
      os << "t";
      if (e.t != 1) os << "^" << e.t;
    }
  }
  return os.str();
}

LaurentQT rev_q(const LaurentQT& f, int d) {
  LaurentQT r;
  for (const auto& [e, c] : f.terms()) {
    if (e.q < 0 || e.q > d) {
      throw input_error("degree bound violated: q-exponent " + std::to_string(e.q) +
                        " outside [0, " + std::to_string(d) + "]");
    }
    r.add_term({d - e.q, e.t}, c);
  }
  return r;
}

}  // namespace parkfrob
