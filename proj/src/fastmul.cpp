#include "amat/fastmul.hpp"

#include <algorithm>

namespace amat {

namespace {

void require_square_pair(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square()) fail(Errc::not_square, "matrix multiplication expects square matrices");
  if (a.rows() != b.rows()) fail(Errc::field_mismatch, "matrix dimensions differ");
}

void count(MulCounter* c, std::uint64_t mults, std::uint64_t adds) {
  if (c) {
    c->scalar_mults += mults;
    c->scalar_adds += adds;
  }
}

}  // namespace

IntMatrix schoolbook_multiply(const IntMatrix& a, const IntMatrix& b, MulCounter* counter) {
  if (a.cols() != b.rows()) fail(Errc::field_mismatch, "matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = std::move(acc);
    }
  const std::uint64_t inner = a.cols();
  count(counter, a.rows() * b.cols() * inner, a.rows() * b.cols() * (inner ? inner - 1 : 0));
  return c;
}

IntMatrix ww_multiply(const IntMatrix& a, const IntMatrix& b, MulCounter* counter) {
  require_square_pair(a, b);
  const std::size_t m = a.rows();
  if (m % 2 != 0) fail(Errc::odd_dimension, "Winograd-Waksman needs even dimension, got " + std::to_string(m));
  const std::size_t half = m / 2;
  MulCounter local;

  // X_ij = c_ij + alpha_i + beta_j and Z_ij = -c_ij + alpha_i + beta_j, where
  // alpha_i, beta_j are the pairwise row/column products.
  auto paired = [&](std::size_t i, std::size_t j, int sign) {
    Int acc = 0;
    for (std::size_t k = 0; k < half; ++k) {
      const Int lhs = sign > 0 ? Int(a(i, 2 * k) + b(2 * k + 1, j)) : Int(a(i, 2 * k) - b(2 * k + 1, j));
      const Int rhs = sign > 0 ? Int(a(i, 2 * k + 1) + b(2 * k, j)) : Int(a(i, 2 * k + 1) - b(2 * k, j));
      acc += lhs * rhs;
    }
    local.scalar_mults += half;
    local.scalar_adds += 2 * half + (half - 1);
    return acc;
  };

  IntMatrix x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) x(i, j) = paired(i, j, +1);

  // Y is only needed in column 0 and on the diagonal; Y_00 is shared.
  std::vector<Int> y_col(m), y_diag(m);
  auto half_sum = [&](const Int& xv, const Int& zv) {
    const Int s = xv + zv;
    if (!mpz_even_p(s.get_mpz_t())) fail(Errc::internal_error, "X + Z is odd in Winograd-Waksman step 3");
    local.scalar_adds += 1;
    return Int(s / 2);
  };
  for (std::size_t i = 0; i < m; ++i) y_col[i] = half_sum(x(i, 0), paired(i, 0, -1));
  y_diag[0] = y_col[0];
  for (std::size_t i = 1; i < m; ++i) y_diag[i] = half_sum(x(i, i), paired(i, i, -1));

  IntMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Int yij;
      if (j == 0) {
        yij = y_col[i];
      } else if (i == j) {
        yij = y_diag[i];
      } else {
        yij = y_col[i] + y_diag[j] - y_col[j];
        local.scalar_adds += 2;
      }
      c(i, j) = x(i, j) - yij;
      local.scalar_adds += 1;
    }
  count(counter, local.scalar_mults, local.scalar_adds);
  return c;
}

namespace {

IntMatrix block(const IntMatrix& m, std::size_t r0, std::size_t c0, std::size_t h) {
  IntMatrix out(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const std::size_t r = r0 + i, c = c0 + j;
      if (r < m.rows() && c < m.cols()) out(i, j) = m(r, c);
    }
  return out;
}

IntMatrix add_counted(const IntMatrix& a, const IntMatrix& b, MulCounter* c) {
  count(c, 0, a.rows() * a.cols());
  return a + b;
}

IntMatrix sub_counted(const IntMatrix& a, const IntMatrix& b, MulCounter* c) {
  count(c, 0, a.rows() * a.cols());
  return a - b;
}

}  // namespace

IntMatrix ww_recursive(const IntMatrix& a, const IntMatrix& b, MulCounter* counter) {
  require_square_pair(a, b);
  const std::size_t m = a.rows();
  if (m <= 2) return schoolbook_multiply(a, b, counter);
  const std::size_t h = (m + 1) / 2;  // padded size is 2h

  const IntMatrix a11 = block(a, 0, 0, h), a12 = block(a, 0, h, h), a21 = block(a, h, 0, h), a22 = block(a, h, h, h);
  const IntMatrix b11 = block(b, 0, 0, h), b12 = block(b, 0, h, h), b21 = block(b, h, 0, h), b22 = block(b, h, h, h);

  const IntMatrix s1 = add_counted(a21, a22, counter);
  const IntMatrix s2 = sub_counted(s1, a11, counter);
  const IntMatrix s3 = sub_counted(a11, a21, counter);
  const IntMatrix s4 = sub_counted(a12, s2, counter);
  const IntMatrix t1 = sub_counted(b12, b11, counter);
  const IntMatrix t2 = sub_counted(b22, t1, counter);
  const IntMatrix t3 = sub_counted(b22, b12, counter);
  const IntMatrix t4 = sub_counted(t2, b21, counter);

  const IntMatrix p1 = ww_recursive(a11, b11, counter);
  const IntMatrix p2 = ww_recursive(a12, b21, counter);
  const IntMatrix p3 = ww_recursive(s4, b22, counter);
  const IntMatrix p4 = ww_recursive(a22, t4, counter);
  const IntMatrix p5 = ww_recursive(s1, t1, counter);
  const IntMatrix p6 = ww_recursive(s2, t2, counter);
  const IntMatrix p7 = ww_recursive(s3, t3, counter);

  const IntMatrix c11 = add_counted(p1, p2, counter);
  const IntMatrix u2 = add_counted(p1, p6, counter);
  const IntMatrix u3 = add_counted(u2, p7, counter);
  const IntMatrix u4 = add_counted(u2, p5, counter);
  const IntMatrix c12 = add_counted(u4, p3, counter);
  const IntMatrix c21 = sub_counted(u3, p4, counter);
  const IntMatrix c22 = add_counted(u3, p5, counter);

  IntMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const bool top = i < h, left = j < h;
      const IntMatrix& src = top ? (left ? c11 : c12) : (left ? c21 : c22);
      c(i, j) = src(top ? i : i - h, left ? j : j - h);
    }
  return c;
}

// ---------------------------------------------------------------------------
// Number-theoretic transforms.
// ---------------------------------------------------------------------------

namespace {

constexpr unsigned kMaxLog = 20;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (std::uint64_t w : {2u, 7u, 61u}) {
    if (w % n == 0) continue;
    std::uint64_t x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

struct NttPrime {
  std::uint32_t p;
  std::uint32_t root;  // primitive root mod p
};

std::uint32_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t rest = p - 1;
  for (std::uint64_t q = 2; q * q <= rest; ++q)
    if (rest % q == 0) {
      factors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  if (rest > 1) factors.push_back(rest);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return static_cast<std::uint32_t>(g);
  }
}

// Primes c * 2^20 + 1 below 2^31, largest first.
const std::vector<NttPrime>& ntt_primes() {
  static const std::vector<NttPrime> primes = [] {
    std::vector<NttPrime> out;
    for (std::uint64_t c = (std::uint64_t{1} << (31 - kMaxLog)) - 1; c >= 1; --c) {
      const std::uint64_t p = (c << kMaxLog) + 1;
      if (is_prime_u32(p)) out.push_back({static_cast<std::uint32_t>(p), primitive_root(p)});
    }
    return out;
  }();
  return primes;
}

void ntt(std::vector<std::uint64_t>& v, const NttPrime& pr, bool invert) {
  const std::size_t n = v.size();
  const std::uint64_t p = pr.p;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pow_mod(pr.root, (p - 1) / len, p);
    if (invert) w = pow_mod(w, p - 2, p);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wk = 1;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::uint64_t u = v[i + k], t = v[i + k + len / 2] * wk % p;
        v[i + k] = u + t >= p ? u + t - p : u + t;
        v[i + k + len / 2] = u >= t ? u - t : u + p - t;
        wk = wk * w % p;
      }
    }
  }
  if (invert) {
    const std::uint64_t inv_n = pow_mod(n, p - 2, p);
    for (auto& x : v) x = x * inv_n % p;
  }
}

std::vector<std::uint64_t> residues(const std::vector<Int>& f, std::size_t size, std::uint32_t p) {
  std::vector<std::uint64_t> out(size, 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  return out;
}

Int max_abs(const std::vector<Int>& f) {
  Int m = 0;
  for (const auto& c : f) m = std::max<Int>(m, abs(c));
  return m;
}

}  // namespace

std::vector<Int> exact_convolve(const std::vector<Int>& f, const std::vector<Int>& g) {
  if (f.empty() || g.empty()) return {};
  const std::size_t out_len = f.size() + g.size() - 1;
  std::size_t size = 1;
  while (size < out_len) size <<= 1;
  if (size > (std::size_t{1} << kMaxLog)) fail(Errc::unsupported_degree, "convolution length exceeds 2^20");

  // Every output coefficient lies in (-bound, bound); the modulus must exceed 2*bound.
  const Int bound = Int(static_cast<unsigned long>(std::min(f.size(), g.size()))) * max_abs(f) * max_abs(g);
  if (bound == 0) return std::vector<Int>(out_len, 0);
  const Int need = 2 * bound + 1;

  const auto& primes = ntt_primes();
  std::vector<Int> value(out_len, 0);
  Int modulus = 1;
  for (const NttPrime& pr : primes) {
    if (modulus > need) break;
    auto fv = residues(f, size, pr.p);
    auto gv = residues(g, size, pr.p);
    ntt(fv, pr, false);
    ntt(gv, pr, false);
    for (std::size_t i = 0; i < size; ++i) fv[i] = fv[i] * gv[i] % pr.p;
    ntt(fv, pr, true);
    // Incremental CRT: value <- value + modulus * ((r - value) / modulus mod p).
    const std::uint64_t m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), pr.p);
    const std::uint64_t m_inv = pow_mod(m_mod, pr.p - 2, pr.p);
    for (std::size_t i = 0; i < out_len; ++i) {
      const std::uint64_t cur = mpz_fdiv_ui(value[i].get_mpz_t(), pr.p);
      const std::uint64_t diff = (fv[i] + pr.p - cur) % pr.p;
      value[i] += modulus * Int(static_cast<unsigned long>(diff * m_inv % pr.p));
    }
    modulus *= pr.p;
  }
  if (modulus <= need) fail(Errc::internal_error, "coefficients too large for the available transform primes");
  const Int half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return value;
}

Element mul_via_fft(const NumberField& field, const Element& alpha, const Element& beta) {
  field.check(alpha);
  field.check(beta);
  const RatMatrix basis = basis_change_matrix(field);
  auto integer_poly = [&](const Element& e, Int& denom) {
    const std::vector<Rat> p = basis * e.coords();
    denom = lcm_of_denominators(p);
    std::vector<Int> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(Rat(c * denom).get_num());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  Int da, db;
  const auto pa = integer_poly(alpha, da);
  const auto pb = integer_poly(beta, db);
  const auto prod = exact_convolve(pa, pb);
  const Rat scale = Rat(1) / Rat(da * db);
  std::vector<Rat> h;
  h.reserve(prod.size());
  for (const auto& c : prod) h.push_back(Rat(c) * scale);
  const UniPoly f = field.form().dehomogenize("zeta");
  UniPoly rem = divmod(UniPoly(std::move(h), "zeta"), f).second;
  std::vector<Rat> r = rem.coeffs();
  r.resize(static_cast<std::size_t>(field.degree()));
  return Element(solve(basis, r));
}

Strategy parse_strategy(std::string_view name) {
  if (name == "schoolbook") return Strategy::schoolbook;
  if (name == "ww") return Strategy::ww;
  if (name == "recursive" || name == "ww_recursive") return Strategy::ww_recursive;
  fail(Errc::parse_error, "unknown strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::schoolbook:
      return "schoolbook";
    case Strategy::ww:
      return "ww";
    case Strategy::ww_recursive:
      return "recursive";
  }
  return "?";
}

std::vector<Element> batch_multiply(const NumberField& field, const Element& alpha, const std::vector<Element>& betas,
                                    Strategy strategy, MulCounter* counter) {
  const auto n = static_cast<std::size_t>(field.degree());
  if (betas.size() > n) fail(Errc::field_mismatch, "batch takes at most n multiplicands");
  const RatMatrix na = arithmetic_matrix(field, alpha);

  // Integer images of N and U with separate scales.
  std::vector<Rat> all_u;
  for (const auto& b : betas) {
    field.check(b);
    all_u.insert(all_u.end(), b.coords().begin(), b.coords().end());
  }
  const Int dn = lcm_of_denominators(na.data());
  const Int du = lcm_of_denominators(all_u);
  const std::size_t dim = (strategy == Strategy::ww && n % 2) ? n + 1 : n;
  IntMatrix ni(dim, dim), ui(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ni(i, j) = Rat(na(i, j) * dn).get_num();
  for (std::size_t k = 0; k < betas.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) ui(i, k) = Rat(betas[k][i] * du).get_num();

  IntMatrix prod;
  switch (strategy) {
    case Strategy::schoolbook:
      prod = schoolbook_multiply(ni, ui, counter);
      break;
    case Strategy::ww:
      prod = ww_multiply(ni, ui, counter);
      break;
    case Strategy::ww_recursive:
      prod = ww_recursive(ni, ui, counter);
      break;
  }
  const Rat scale = Rat(1) / Rat(dn * du);
  std::vector<Element> out;
  out.reserve(betas.size());
  for (std::size_t k = 0; k < betas.size(); ++k) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = Rat(prod(i, k)) * scale;
    out.emplace_back(std::move(col));
  }
  return out;
}

}  // namespace amat
