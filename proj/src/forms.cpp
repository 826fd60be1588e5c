#include "amat/forms.hpp"

#include <algorithm>
#include <set>

#include "amat/errors.hpp"

namespace amat {

BinaryForm::BinaryForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 3) fail(Errc::invalid_form, "binary form needs degree >= 2");
  if (coeffs_.front() == 0 || coeffs_.back() == 0)
    fail(Errc::invalid_form, "binary form requires a_1 a_{n+1} != 0, got " + join(coeffs_));
}

BinaryForm BinaryForm::parse(std::string_view text) { return BinaryForm(parse_int_list(text)); }

UniPoly BinaryForm::dehomogenize(std::string var) const {
  std::vector<Int> low_to_high(coeffs_.rbegin(), coeffs_.rend());
  return UniPoly::from_ints(low_to_high, std::move(var));
}

BinaryForm BinaryForm::negated() const {
  std::vector<Int> c = coeffs_;
  for (auto& v : c) v = -v;
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::reversed() const { return BinaryForm(std::vector<Int>(coeffs_.rbegin(), coeffs_.rend())); }

Int evaluate(const BinaryForm& form, const Int& x, const Int& y) {
  // Horner in x with weights of y: sum a_k x^{n+1-k} y^{k-1}.
  Int acc = 0;
  Int ypow = 1;
  const int n = form.degree();
  std::vector<Int> ypowers(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    ypowers[static_cast<std::size_t>(k)] = ypow;
    ypow *= y;
  }
  for (int k = 1; k <= n + 1; ++k) acc = acc * x + form.a(k) * ypowers[static_cast<std::size_t>(k - 1)];
  return acc;
}

IntMatrix janson_sylvester(const BinaryForm& form) {
  const auto n = static_cast<std::size_t>(form.degree());
  const std::size_t size = 2 * n - 1;
  IntMatrix s(size, size);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(r, r + k) = form.a(static_cast<int>(k) + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      s(n - 1 + r, r + k) = form.a(static_cast<int>(k) + 1) * static_cast<long>(n - k);
  return s;
}

namespace {

bool sign_flip(long n) { return n % 4 == 2 || n % 4 == 3; }

}  // namespace

Int form_discriminant(const BinaryForm& form) {
  const Int det = det_bareiss(janson_sylvester(form));
  const Int& a1 = form.a(1);
  if (!mpz_divisible_p(det.get_mpz_t(), a1.get_mpz_t()))
    fail(Errc::internal_error, "Sylvester determinant not divisible by a_1 for " + form.to_string());
  Int d = exact_div(det, a1);
  return sign_flip(form.degree()) ? Int(-d) : d;
}

std::optional<__int128> form_discriminant_i128(std::span<const std::int64_t> c) {
  const std::size_t n = c.size() - 1;
  const std::size_t size = 2 * n - 1;
  __int128 m[24][24] = {};
  if (size > 24) return std::nullopt;
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t k = 0; k <= n; ++k) m[r][r + k] = c[k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) m[n - 1 + r][r + k] = static_cast<__int128>(c[k]) * static_cast<__int128>(n - k);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < size && m[r][k] == 0) ++r;
      if (r == size) return __int128{0};
      for (std::size_t j = 0; j < size; ++j) std::swap(m[k][j], m[r][j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        __int128 p1, p2, diff;
        if (__builtin_mul_overflow(m[i][j], m[k][k], &p1)) return std::nullopt;
        if (__builtin_mul_overflow(m[i][k], m[k][j], &p2)) return std::nullopt;
        if (__builtin_sub_overflow(p1, p2, &diff)) return std::nullopt;
        m[i][j] = diff / prev;
      }
    }
    prev = m[k][k];
  }
  __int128 det = sign * m[size - 1][size - 1];
  if (det % c[0] != 0) return std::nullopt;
  __int128 d = det / c[0];
  return sign_flip(static_cast<long>(n)) ? -d : d;
}

// ---------------------------------------------------------------------------
// Irreducibility
// ---------------------------------------------------------------------------

std::vector<Int> positive_divisors(const Int& z) {
  if (z == 0) fail(Errc::internal_error, "divisors of zero");
  Int rest = abs(z);
  std::vector<std::pair<Int, unsigned>> factors;
  for (Int p = 2; p * p <= rest; ++p) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) break;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

using ModPoly = std::vector<std::uint64_t>;  // low to high

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

ModPoly mod_reduce(ModPoly a, const ModPoly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t inv_lead = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::uint64_t factor = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + p - factor * f[j] % p) % p;
    trim(a);
  }
  return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return mod_reduce(std::move(c), f, p);
}

ModPoly pow_poly(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
  ModPoly r{1};
  while (e) {
    if (e & 1U) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

ModPoly gcd_poly(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = mod_reduce(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

/// x^{p^k} mod f.
ModPoly frobenius_power(const ModPoly& f, std::uint64_t p, int k) {
  ModPoly x = mod_reduce(ModPoly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) x = pow_poly(x, p, f, p);
  return x;
}

ModPoly subtract_x(ModPoly a, std::uint64_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  return out;
}

bool has_rational_root(const BinaryForm& form) {
  const int n = form.degree();
  for (const Int& q : positive_divisors(form.a(1)))
    for (const Int& p : positive_divisors(form.a(n + 1)))
      for (int s : {1, -1})
        if (evaluate(form, s * p, q) == 0) return true;
  return false;
}

Int content(const std::vector<Int>& c) {
  Int g = 0;
  for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

/// Does the primitive integer polynomial f (high to low) have a factor of
/// degree 2 in Z[x]? Any such factor q satisfies lead(q) | a_1, q(0) | a_{n+1}
/// and q(1) | f(1), which pins the middle coefficient to finitely many values.
bool has_quadratic_factor(const BinaryForm& form) {
  const int n = form.degree();
  const UniPoly f = form.dehomogenize();
  const Int f1 = evaluate(form, 1, 1);  // nonzero: no rational roots at this point
  Int norm2 = 0;
  for (const auto& c : form.coeffs()) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  const Int bound = (Int(1) << n) * (root + 2);
  const auto lead_divs = positive_divisors(form.a(1));
  const auto tail_divs = positive_divisors(form.a(n + 1));
  const auto value_divs = positive_divisors(f1);
  for (const Int& c2 : lead_divs)
    for (const Int& c0abs : tail_divs)
      for (int s0 : {1, -1}) {
        const Int c0 = s0 * c0abs;
        for (const Int& dabs : value_divs)
          for (int sd : {1, -1}) {
            const Int c1 = sd * dabs - c2 - c0;
            if (abs(c1) > bound) continue;
            const UniPoly q(std::vector<Rat>{Rat(c0), Rat(c1), Rat(c2)});
            if (divmod(f, q).second.is_zero()) return true;
          }
      }
  return false;
}

}  // namespace

bool irreducible_mod_p(const BinaryForm& form, std::uint32_t p) {
  const int n = form.degree();
  ModPoly f(static_cast<std::size_t>(n) + 1);
  const Int pz = p;
  for (int k = 0; k <= n; ++k) {
    Int r = form.a(n + 1 - k) % pz;
    if (r < 0) r += pz;
    f[static_cast<std::size_t>(k)] = r.get_ui();
  }
  if (f.back() == 0) return false;
  const ModPoly x_mod = mod_reduce(ModPoly{0, 1}, f, p);
  if (frobenius_power(f, p, n) != x_mod) return false;
  for (int r : prime_factors(n)) {
    const ModPoly g = gcd_poly(subtract_x(frobenius_power(f, p, n / r), p), f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

Irreducibility irreducibility_certificate(const BinaryForm& input) {
  const Int g = content(input.coeffs());
  std::vector<Int> prim;
  for (const auto& c : input.coeffs()) prim.push_back(exact_div(c, g));
  const BinaryForm form(std::move(prim));
  const int n = form.degree();
  if (has_rational_root(form)) return Irreducibility::reducible;
  if (n <= 3) return Irreducibility::irreducible;
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U, 43U, 47U, 53U, 59U, 61U, 67U,
                          71U, 73U, 79U, 83U, 89U, 97U, 101U, 103U, 107U, 109U, 113U, 127U, 131U, 137U, 139U}) {
    if (mpz_divisible_ui_p(form.a(1).get_mpz_t(), p)) continue;
    if (irreducible_mod_p(form, p)) return Irreducibility::irreducible;
  }
  if (n <= 5) return has_quadratic_factor(form) ? Irreducibility::reducible : Irreducibility::irreducible;
  return Irreducibility::unknown;
}

bool is_irreducible(const BinaryForm& form) {
  if (form.degree() > 5) fail(Errc::unsupported_degree, "irreducibility test supports degree <= 5");
  return irreducibility_certificate(form) == Irreducibility::irreducible;
}

}  // namespace amat
