#include "cusco/rat.hpp"

#include <cctype>

namespace cusco {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  size_t j = digits(i);
  if (j == i) bad();
  if (j < s.size()) {
    if (s[j] != '/') bad();
    size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size()) bad();
    if (std::string(s.substr(j + 1)) == std::string(s.size() - j - 1, '0')) bad();
  }
  std::string body(s[0] == '+' ? s.substr(1) : s);  // GMP rejects a leading '+'
  mpq_class q;
  if (q.set_str(body, 10) != 0 || q.get_den() == 0) bad();
  q.canonicalize();
  return Rat(std::move(q));
}

Rat Rat::operator/(const Rat& o) const {
  if (sgn(o.q_) == 0) throw std::domain_error("division by zero");
  return Rat(mpq_class(q_ / o.q_));
}

std::string Rat::str() const {
  return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rat(mpq_class(sn, sd));
}

mpz_class floor_int(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

const Rat& ExtReal::finite() const {
  if (tag_ != 0) throw std::logic_error("finite() on infinite ExtReal");
  return v_;
}

std::string ExtReal::str() const {
  if (tag_ < 0) return "-inf";
  if (tag_ > 0) return "+inf";
  return v_.str();
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return a <= b ? a : b; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a >= b ? a : b; }

}  // namespace cusco
