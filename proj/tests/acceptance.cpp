// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "amat/covariants.hpp"
#include "amat/element.hpp"
#include "amat/fastmul.hpp"
#include "amat/numeric.hpp"
#include "amat/search.hpp"
#include "test_support.hpp"

using namespace amat;
using testing::P;
using testing::poly_matrix;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok && problems.size() < 20) problems.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

NumberField field(const char* pair) { return make_field(EssentialPair::parse(pair)); }

void tables(Criterion& c) {
  const auto t0 = Clock::now();
  auto rows = load_table(std::string(AMAT_DATA_DIR) + "/table1_quartic.txt");
  const auto quintic = load_table(std::string(AMAT_DATA_DIR) + "/table2_quintic.txt");
  rows.insert(rows.end(), quintic.begin(), quintic.end());
  const TableReport report = verify_tables(rows);
  const double elapsed = seconds_since(t0);
  for (const auto& f : report.failures) c.require(false, "line " + std::to_string(f.row.line) + ": " + f.reason);
  c.require(report.rows == rows.size() && rows.size() > 100, "row count " + std::to_string(report.rows));
  c.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  c.require(form_discriminant(BinaryForm::parse("1,1,0,-2,-1")) == -275, "anchor -275");
  c.require(form_discriminant(BinaryForm::parse("4,-2,-3,1,1")) == 2052, "anchor 2052");
  c.require(form_discriminant(BinaryForm::parse("1,0,2,1,-2,-1")) == -4511, "anchor -4511");
}

void symbolic_matrices(Criterion& c) {
  c.require(generic_arithmetic_matrix(2) == poly_matrix({{"u", "-a*c*x"}, {"x", "u - b*x"}}), "n = 2");
  c.require(generic_arithmetic_matrix(4) == poly_matrix({
                                                {"u", "-a*e*z", "-e*(a*y + b*z)", "-e*(a*x + b*y + c*z)"},
                                                {"x", "u - b*x - c*y - d*z", "-c*x - d*y - e*z", "-d*x - e*y"},
                                                {"y", "a*x", "u - c*y - d*z", "-d*y - e*z"},
                                                {"z", "a*y", "a*x + b*y", "u - d*z"},
                                            }),
            "n = 4");
  c.require(generic_arithmetic_matrix(5) ==
                poly_matrix({
                    {"u", "-a*f*w", "-f*(b*w + a*z)", "-f*(c*w + a*y + b*z)", "-f*(d*w + a*x + b*y + c*z)"},
                    {"x", "u - e*w - b*x - c*y - d*z", "-f*w - c*x - d*y - e*z", "-d*x - e*y - f*z", "-e*x - f*y"},
                    {"y", "a*x", "u - e*w - c*y - d*z", "-f*w - d*y - e*z", "-e*y - f*z"},
                    {"z", "a*y", "a*x + b*y", "u - e*w - d*z", "-f*w - e*z"},
                    {"w", "a*z", "a*y + b*z", "a*x + b*y + c*z", "u - e*w"},
                }),
            "n = 5");
  c.require(symbolic_arithmetic_matrix(field("2:4,-2,-3,1,1"), default_coord_names(4)) ==
                poly_matrix({
                    {"u", "-2*z", "2*z - 4*y", "-2*x + 2*y + 3*z"},
                    {"x", "u + x + 3*y - z", "3*x - 2*y - 2*z", "-x - 2*y"},
                    {"y", "x", "u + 3*y - z", "-y - z"},
                    {"z", "2*y", "2*x - 2*y", "u - z"},
                }),
            "discriminant 513, a0 = 2");
}

// n x0 - (a_2/a0) x1 - sum_{k>=2} k a_{k+1} x_k
Rat trace_formula(const NumberField& f, const Element& e) {
  const auto& a = f.form().coeffs();
  const std::size_t n = e.size();
  Rat t = Rat(static_cast<long>(n)) * e[0];
  if (n > 1) t -= Rat(a[1]) / Rat(f.a0()) * e[1];
  for (std::size_t k = 2; k < n; ++k) t -= Rat(static_cast<long>(k)) * Rat(a[k]) * e[k];
  return t;
}

bool integer_matrix(const RatMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rat& r) { return is_integer(r); });
}

void matrix_properties(Criterion& c) {
  testing::Rng rng(20261014);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    const auto dim = static_cast<std::size_t>(n);
    const NumberField f = testing::random_field(rng, n, 8, trial % 7 == 0 ? 2 : 1);
    const Element a = testing::random_element(rng, dim, 10), b = testing::random_element(rng, dim, 10);
    const std::string where = "trial " + std::to_string(trial) + " " + f.pair().to_string();
    const RatMatrix na = arithmetic_matrix(f, a), nb = arithmetic_matrix(f, b);
    c.require(arithmetic_matrix(f, add(f, a, b)) == na + nb, where + ": additivity");
    c.require(na * nb == nb * na, where + ": commutativity");
    c.require(arithmetic_matrix(f, mul(f, a, b)) == na * nb, where + ": multiplicativity");
    c.require(trace(f, a) == trace_formula(f, a) && na.trace() == trace_formula(f, a), where + ": trace");
    if (a.is_zero()) {
      c.require(det_bareiss(na) == 0, where + ": norm of zero");
    } else {
      c.require(det_bareiss(na) == norm_resultant_oracle(f, a), where + ": norm oracle");
      c.require(mul(f, inverse(f, a), a) == Element::one(dim), where + ": inverse");
    }
    c.require(is_integral(a) && integer_matrix(na), where + ": integral entries");
    const Element q = testing::random_fractional_element(rng, dim, 10);
    c.require(!is_integral(q) && !integer_matrix(arithmetic_matrix(f, q)), where + ": fractional entries");
  }
}

void diagonalization(Criterion& c) {
  testing::Rng rng(7001);
  int wide = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const long a0 = trial % 5 == 0 ? 2 : 1;
    wide += a0 > 1;
    const NumberField f = testing::random_field(rng, n, 20, a0);
    const Element e = testing::random_element(rng, static_cast<std::size_t>(n));
    const Real r = diagonalization_residual(f, e);
    c.require(r < 1e-8L, f.pair().to_string() + " residual " + std::to_string(static_cast<double>(r)));
  }
  c.require(wide >= 10, "only " + std::to_string(wide) + " fields with a0 > 1");
}

void syzygies(Criterion& c) {
  c.require(cubic_syzygy_check(generic_cubic()), "cubic syzygy");
  c.require(quartic_syzygy_check(generic_quartic()), "quartic syzygy");
  const auto cov = quartic_GHF(generic_quartic());
  c.require(cov.t_coeffs[3].is_zero(), "t^3 coefficient");
  const auto gx = cov.G.collect("x");
  c.require(gx.size() == 3 && gx[2] == P("3*b^2 - 8*a*c"), "G coefficient of x^2");
  c.require(cov.G == P("(3*b^2 - 8*a*c)*x^2 + (4*b*c - 24*a*d)*x*y + (4*c^2 - 8*b*d - 16*a*e)*y^2"
                        " + (2*b*d - 32*a*e)*x*z + (4*c*d - 24*b*e)*y*z + (3*d^2 - 8*c*e)*z^2"),
            "G coefficients");
}

void norm_equations(Criterion& c) {
  c.require(quartic_norm_equation_check(generic_quartic()), "quartic symbolic identity");
  c.require(cubic_norm_equation_check(generic_cubic()), "cubic symbolic identity");
  const BinaryForm v = BinaryForm::parse("1,1,0,-2,-1");
  const auto quartic_units = norm_one_elements(make_field(EssentialPair{1, v}), 3);
  c.require(quartic_units.size() > 1, "no quartic norm-one elements");
  for (const auto& e : quartic_units) c.require(quartic_norm_form_value(v, e) == 256, "quartic " + e.to_string());
  const BinaryForm cub = BinaryForm::parse("1,1,-2,-1");
  const auto cubic_units = norm_one_elements(make_field(EssentialPair{1, cub}), 3);
  c.require(cubic_units.size() > 1, "no cubic norm-one elements");
  for (const auto& e : cubic_units) c.require(cubic_norm_form_value(cub, e) == 27, "cubic " + e.to_string());
}

IntMatrix random_int_matrix(testing::Rng& rng, std::size_t m) {
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = testing::uniform(rng, -100, 100);
  return a;
}

void fast_multiplication(Criterion& c) {
  const auto t0 = Clock::now();
  testing::Rng rng(9001);
  for (std::uint64_t m : {2, 4, 8, 16}) {
    MulCounter counter;
    const IntMatrix a = random_int_matrix(rng, m), b = random_int_matrix(rng, m);
    c.require(ww_multiply(a, b, &counter) == schoolbook_multiply(a, b), "ww product m = " + std::to_string(m));
    c.require(counter.scalar_mults == m * m * m / 2 + m * m - m / 2,
              "count m = " + std::to_string(m) + ": " + std::to_string(counter.scalar_mults));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<std::size_t>(2 * testing::uniform(rng, 1, 10));
    const IntMatrix a = random_int_matrix(rng, m), b = random_int_matrix(rng, m);
    c.require(ww_multiply(a, b) == schoolbook_multiply(a, b), "ww product trial " + std::to_string(trial));
  }
  std::vector<double> xs, ys;
  for (std::size_t m = 4; m <= 32; m *= 2) {
    MulCounter counter;
    const IntMatrix a = random_int_matrix(rng, m), b = random_int_matrix(rng, m);
    c.require(ww_recursive(a, b, &counter) == schoolbook_multiply(a, b), "recursive product m = " + std::to_string(m));
    xs.push_back(std::log2(static_cast<double>(m)));
    ys.push_back(std::log2(static_cast<double>(counter.scalar_mults)));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / static_cast<double>(xs.size());
    my += ys[i] / static_cast<double>(ys.size());
  }
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  c.require(slope <= std::log2(7.0) + 0.15, "recursive slope " + std::to_string(slope));
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const auto dim = static_cast<std::size_t>(n);
    const NumberField f = testing::random_field(rng, n, 8, trial % 6 == 0 ? 2 : 1);
    const Element a = testing::random_element(rng, dim), b = testing::random_element(rng, dim);
    c.require(mul_via_fft(f, a, b) == mul(f, a, b), "fft product " + f.pair().to_string());
  }
  const double elapsed = seconds_since(t0);
  c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
}

void cubic_reconstruction(Criterion& c) {
  testing::Rng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const NumberField f = testing::random_field(rng, 3, 12);
    try {
      const RoundedForm r = dh_cubic_form(f);
      c.require(form_discriminant(r.form) == f.discriminant(), f.pair().to_string() + ": discriminant");
      c.require(r.rounding_residual < 1e-6L,
                f.pair().to_string() + ": residual " + std::to_string(static_cast<double>(r.rounding_residual)));
    } catch (const Error& e) {
      c.require(false, f.pair().to_string() + ": " + e.what());
    }
  }
}

void search(Criterion& c) {
  struct Case {
    int disc, height, a0_max;
    const char* expected;
  };
  for (const Case& k : {Case{-275, 2, 1, "1:1,1,0,-2,-1"}, Case{513, 4, 2, "2:4,-2,-3,1,1"}}) {
    const auto t0 = Clock::now();
    const auto pairs = search_essential_pairs(k.disc, 4, k.height, k.a0_max);
    const double elapsed = seconds_since(t0);
    const bool found = std::any_of(pairs.begin(), pairs.end(),
                                   [&](const EssentialPair& p) { return p.to_string() == k.expected; });
    c.require(found, std::string("missing ") + k.expected);
    c.require(elapsed < 60.0, "discriminant " + std::to_string(k.disc) + " took " + std::to_string(elapsed) + " s");
    for (const auto& p : pairs)
      c.require(make_field(p).discriminant() == k.disc, "wrong discriminant " + p.to_string());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> all{
      {"table reproduction", tables},
      {"symbolic matrix fidelity", symbolic_matrices},
      {"arithmetic matrix properties", matrix_properties},
      {"diagonalization", diagonalization},
      {"syzygies", syzygies},
      {"norm equations", norm_equations},
      {"fast multiplication", fast_multiplication},
      {"cubic form reconstruction", cubic_reconstruction},
      {"essential pair search", search},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), all[i].first, {}};
    const auto t0 = Clock::now();
    try {
      all[i].second(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.problems.empty();
    failed += !ok;
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds_since(t0));
    for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
  }
  return failed == 0 ? 0 : 1;
}
