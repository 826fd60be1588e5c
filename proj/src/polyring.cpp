#include "amat/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace amat {

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rat> coeffs, std::string var) : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::from_ints(const std::vector<Int>& coeffs, std::string var) {
  std::vector<Rat> q(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(q), std::move(var));
}

UniPoly UniPoly::monomial(const Rat& c, std::size_t power, std::string var) {
  std::vector<Rat> q(power + 1);
  q[power] = c;
  return UniPoly(std::move(q), std::move(var));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rat(0); }

Rat UniPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat UniPoly::eval(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  std::vector<Rat> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
  return UniPoly(std::move(c), p.var_);
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly operator*(const UniPoly& p, const UniPoly& q) { return poly_mul_schoolbook(p, q); }

UniPoly operator*(const UniPoly& p, const Rat& c) {
  std::vector<Rat> r = p.coeffs_;
  for (auto& v : r) v *= c;
  return UniPoly(std::move(r), p.var_);
}

std::string UniPoly::to_string() const { return coeffs_.empty() ? std::string("0") : join(coeffs_); }

UniPoly UniPoly::parse(std::string_view text, std::string var) { return UniPoly(parse_rat_list(text), std::move(var)); }

UniPoly poly_mul_schoolbook(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly({}, p.var());
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rat> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return UniPoly(std::move(c), p.var());
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) fail(Errc::zero_polynomial, "polynomial division by zero");
  std::vector<Rat> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {UniPoly({}, dividend.var()), dividend};
  std::vector<Rat> quot(rem.size() - dd);
  const Rat lead = d.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    const Rat factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d[j];
  }
  rem.resize(dd);
  return {UniPoly(std::move(quot), dividend.var()), UniPoly(std::move(rem), dividend.var())};
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool valid_name(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const unsigned tl = total(lhs), tr = total(rhs);
  if (tl != tr) return tl < tr;
  // Larger exponent in an earlier variable ranks higher.
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

MultiPoly::MultiPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (!valid_name(name)) fail(Errc::unknown_variable, "invalid variable name '" + name + "'");
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rat MultiPoly::constant_value() const {
  if (!is_constant()) fail(Errc::internal_error, "polynomial is not constant: " + to_string());
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

bool MultiPoly::has_var(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
  return d;
}

int MultiPoly::degree_in(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

bool MultiPoly::is_homogeneous_in(const std::vector<std::string>& names, int d) const {
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (std::find(names.begin(), names.end(), vars_[i]) != names.end()) deg += e[i];
    if (deg != d) return false;
  }
  return true;
}

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

std::vector<std::string> MultiPoly::merged_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MultiPoly MultiPoly::over(const std::vector<std::string>& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin());
  MultiPoly out;
  out.vars_ = target;
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MultiPoly::drop_unused_vars() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(kept.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) f.push_back(e[i]);
    terms.emplace(std::move(f), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(terms);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (vars_ != rhs.vars_) {
    const auto target = merged_vars(vars_, rhs.vars_);
    *this = over(target);
    return *this += rhs.over(target);
  }
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  drop_unused_vars();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.terms_.empty() || rhs.terms_.empty()) return MultiPoly();
  const auto target = MultiPoly::merged_vars(lhs.vars_, rhs.vars_);
  const MultiPoly a = lhs.over(target);
  const MultiPoly b = rhs.over(target);
  MultiPoly out;
  out.vars_ = target;
  Exponents e(target.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  out.drop_unused_vars();
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    vars_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator/(MultiPoly lhs, const Rat& c) {
  if (c == 0) fail(Errc::internal_error, "division of polynomial by zero");
  return lhs *= Rat(1) / c;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::collect(const std::string& var) const {
  if (!valid_name(var)) fail(Errc::unknown_variable, "invalid variable name '" + var + "'");
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {*this};
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::vector<MultiPoly> out(static_cast<std::size_t>(degree_in(var)) + 1);
  for (auto& c : out) c.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const auto power = f[idx];
    f[idx] = 0;
    out[power].terms_.emplace(std::move(f), c);
  }
  for (auto& c : out) {
    if (c.terms_.empty()) c.vars_.clear();
    c.drop_unused_vars();
  }
  return out;
}

std::vector<MultiPoly> collect_coeffs(const MultiPoly& p, const std::string& var) { return p.collect(var); }

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  const auto coeffs = collect(var);
  MultiPoly acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * value + coeffs[k];
  return acc;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  // Powers of each substituted value, built on demand.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  std::vector<const MultiPoly*> image(vars_.size(), nullptr);
  std::vector<MultiPoly> kept(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = values.find(vars_[i]);
    if (it != values.end()) {
      image[i] = &it->second;
    } else {
      kept[i] = variable(vars_[i]);
      image[i] = &kept[i];
    }
    powers[i].push_back(MultiPoly(1));
  }
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * *image[i]);
      if (e[i]) term *= powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return MultiPoly();
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    const long power = f[idx];
    f[idx] = static_cast<std::uint16_t>(f[idx] - 1);
    out.terms_.emplace(std::move(f), c * power);
  }
  if (out.terms_.empty()) out.vars_.clear();
  out.drop_unused_vars();
  return out;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
  std::vector<const Rat*> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = point.find(vars_[i]);
    if (it == point.end()) fail(Errc::unknown_variable, "no value for variable '" + vars_[i] + "'");
    vals[i] = &it->second;
  }
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), vals[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), vals[i]->get_den_mpz_t(), e[i]);
      term *= p;
    }
    acc += term;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << '*' << mono;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

Int det_bareiss(const IntMatrix& input) {
  if (!input.is_square()) fail(Errc::not_square, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(t, prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rat det_bareiss(const RatMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix scaled(n, n);
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = exact_div(m(i, j).get_num() * l, m(i, j).get_den());
    scale *= l;
  }
  return make_rat(det_bareiss(scaled), scale);
}

RatMatrix inverse(const RatMatrix& input) {
  if (!input.is_square()) fail(Errc::not_square, "inverse of non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) fail(Errc::singular_matrix, "matrix is singular");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    const Rat p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& rhs) { return inverse(m) * rhs; }

RatMatrix to_rat(const IntMatrix& m) {
  std::vector<Rat> data(m.data().begin(), m.data().end());
  return RatMatrix(m.rows(), m.cols(), std::move(data));
}

IntMatrix to_int(const RatMatrix& m) {
  std::vector<Int> data;
  data.reserve(m.data().size());
  for (const auto& q : m.data()) {
    if (!is_integer(q)) fail(Errc::non_integer_entries, "entry " + q.get_str() + " is not an integer");
    data.push_back(q.get_num());
  }
  return IntMatrix(m.rows(), m.cols(), std::move(data));
}

RatMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) fail(Errc::zero_polynomial, "Sylvester matrix of a zero polynomial");
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  const std::size_t size = dp + dq;
  RatMatrix s(size, size);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) s(r, r + k) = p.coeff(dp - k);
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) s(dq + r, r + k) = q.coeff(dq - k);
  return s;
}

Rat resultant(const UniPoly& p, const UniPoly& q) { return det_bareiss(sylvester_matrix(p, q)); }

Rat poly_discriminant(const UniPoly& f) {
  if (f.degree() < 1) fail(Errc::wrong_degree, "discriminant needs degree >= 1");
  const long d = f.degree();
  if (d == 1) return 1;
  Rat r = resultant(f, f.derivative()) / f.leading();
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace amat

namespace amat {

namespace {

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := ('-' factor) | atom ('^' digits)?; atom := number | name | '(' expr ')'.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::parse_error, "polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }
  MultiPoly factor() {
    if (eat('-')) return -factor();
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    if (eat('(')) {
      MultiPoly inner = expr();
      if (!eat(')')) error("expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return MultiPoly(parse_rat(s_.substr(start, pos_ - start)));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return MultiPoly::variable(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).run(); }

}  // namespace amat
