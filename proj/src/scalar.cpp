#include "amat/scalar.hpp"

#include <cctype>

#include "amat/errors.hpp"

namespace amat {

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::internal_error, "division by zero");
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) fail(Errc::parse_error, "expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(Errc::parse_error, "expected an integer, got '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

namespace {

template <class T, class F>
std::vector<T> parse_list(std::string_view text, F&& parse_one) {
  if (text.empty()) fail(Errc::parse_error, "empty list");
  std::vector<T> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_one(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  return parse_list<Int>(text, [](std::string_view s) { return parse_int(s); });
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  return parse_list<Rat>(text, [](std::string_view s) { return parse_rat(s); });
}

std::string to_string(const Int& z) { return z.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

std::string join(const std::vector<Int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

std::string join(const std::vector<Rat>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

Int lcm_of_denominators(const std::vector<Rat>& values) {
  Int l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Int isqrt_exact_or_negative(const Int& z) {
  if (z < 0) return -1;
  if (!mpz_perfect_square_p(z.get_mpz_t())) return -1;
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

}  // namespace amat
