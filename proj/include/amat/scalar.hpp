#ifndef AMAT_SCALAR_HPP
#define AMAT_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace amat {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat make_rat(const Int& num, const Int& den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Exact quotient; the caller guarantees `den` divides `num`.
Int exact_div(const Int& num, const Int& den);

Int parse_int(std::string_view text);
/// Accepts "p" or "p/q"; result is canonical.
Rat parse_rat(std::string_view text);

/// Comma-separated list without spaces, e.g. "1,-2,3".
std::vector<Int> parse_int_list(std::string_view text);
std::vector<Rat> parse_rat_list(std::string_view text);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);
std::string join(const std::vector<Int>& values, std::string_view sep = ",");
std::string join(const std::vector<Rat>& values, std::string_view sep = ",");

Int lcm_of_denominators(const std::vector<Rat>& values);
Int isqrt_exact_or_negative(const Int& z);  // returns -1 if z is not a perfect square

}  // namespace amat

#endif  // AMAT_SCALAR_HPP
