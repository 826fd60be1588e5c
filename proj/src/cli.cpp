#include "amat/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <json.hpp>
#include <random>
#include <sstream>

#include "amat/covariants.hpp"
#include "amat/element.hpp"
#include "amat/fastmul.hpp"
#include "amat/numeric.hpp"
#include "amat/search.hpp"

namespace amat {

namespace {

using nlohmann::json;

// "--opt -1,2" becomes "--opt=-1,2" so a leading minus is never read as a flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool long_opt = a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
    if (long_opt && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) != 0)) {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

std::string poly_text(const UniPoly& p) {
  MultiPoly m;
  const MultiPoly x = MultiPoly::variable("x");
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) m += x.pow(static_cast<unsigned>(k)) * p.coeffs()[k];
  return m.to_string();
}

json string_list(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(q.get_str());
  return arr;
}

std::string entry_text(const MultiPoly& p) { return p.to_string(); }
std::string entry_text(const Rat& q) { return q.get_str(); }

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_text(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
std::string matrix_text(const Matrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << entry_text(m(i, j));
    os << "]\n";
  }
  return os.str();
}

std::string format_residual(long double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", static_cast<double>(r));
  return buf;
}

struct Options {
  bool json_out = false;
  std::string form, pair, coords, a, b, via = "matrix", cubic, quartic, algo = "ww";
  std::vector<std::string> files;
  bool symbolic = false;
  std::string disc;
  int degree = 4, height = 1, max_a0 = 1, size = 4;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  double threshold = -1;
};

NumberField field_from(const Options& o) { return make_field(EssentialPair::parse(o.pair)); }

int dispatch(const std::string& name, const Options& o, std::ostream& out) {
  auto emit = [&](json record, const std::string& plain) {
    if (o.json_out) {
      record["command"] = name;
      out << record.dump() << '\n';
    } else {
      out << plain;
    }
  };
  if (name == "disc") {
    const Int d = form_discriminant(BinaryForm::parse(o.form));
    emit({{"form", o.form}, {"discriminant", d.get_str()}}, d.get_str() + "\n");
    return exit_ok;
  }
  if (name == "matrix") {
    const NumberField f = field_from(o);
    if (o.symbolic) {
      const auto m = symbolic_arithmetic_matrix(f, default_coord_names(f.degree()));
      emit({{"pair", o.pair}, {"matrix", matrix_json(m)}}, matrix_text(m));
    } else {
      const auto m = arithmetic_matrix(f, Element::parse(o.coords));
      emit({{"pair", o.pair}, {"coords", o.coords}, {"matrix", matrix_json(m)}}, matrix_text(m));
    }
    return exit_ok;
  }
  if (name == "mul" || name == "add") {
    const NumberField f = field_from(o);
    const Element a = Element::parse(o.a), b = Element::parse(o.b);
    Element r;
    if (name == "add") {
      r = add(f, a, b);
    } else if (o.via == "fft") {
      r = mul_via_fft(f, a, b);
    } else if (o.via == "matrix") {
      r = mul(f, a, b);
    } else {
      fail(Errc::parse_error, "--via must be 'matrix' or 'fft'");
    }
    emit({{"pair", o.pair}, {"a", o.a}, {"b", o.b}, {"result", string_list(r.coords())}}, r.to_string() + "\n");
    return exit_ok;
  }
  if (name == "inv") {
    const NumberField f = field_from(o);
    const Element r = inverse(f, Element::parse(o.a));
    emit({{"pair", o.pair}, {"a", o.a}, {"result", string_list(r.coords())}}, r.to_string() + "\n");
    return exit_ok;
  }
  if (name == "norm" || name == "trace") {
    const NumberField f = field_from(o);
    const Element a = Element::parse(o.a);
    const Rat v = name == "norm" ? norm(f, a) : trace(f, a);
    emit({{"pair", o.pair}, {"a", o.a}, {"result", v.get_str()}}, v.get_str() + "\n");
    return exit_ok;
  }
  if (name == "charpoly") {
    const NumberField f = field_from(o);
    const UniPoly p = char_poly(f, Element::parse(o.a));
    emit({{"pair", o.pair}, {"a", o.a}, {"coefficients", string_list(p.coeffs())}, {"text", poly_text(p)}},
         poly_text(p) + "\n");
    return exit_ok;
  }
  if (name == "search") {
    const auto pairs = search_essential_pairs(parse_int(o.disc), o.degree, o.height, o.max_a0, {o.threads});
    if (o.json_out) {
      json arr = json::array();
      for (const auto& p : pairs) arr.push_back(p.to_string());
      emit({{"disc", o.disc}, {"degree", o.degree}, {"height", o.height}, {"max_a0", o.max_a0}, {"pairs", arr}}, "");
    } else {
      for (const auto& p : pairs) out << p.to_string() << '\n';
    }
    return exit_ok;
  }
  if (name == "verify-tables") {
    std::size_t rows = 0;
    std::vector<RowFailure> failures;
    for (const auto& path : o.files) {
      const auto report = verify_tables(load_table(path));
      rows += report.rows;
      failures.insert(failures.end(), report.failures.begin(), report.failures.end());
    }
    json fail_list = json::array();
    std::ostringstream plain;
    for (const auto& fl : failures) {
      const std::string row =
          fl.row.disc.get_str() + ";" + fl.row.pair.a0.get_str() + ";" + fl.row.pair.form.to_string();
      fail_list.push_back({{"line", fl.row.line}, {"row", row}, {"reason", fl.reason}});
      plain << "FAIL line " << fl.row.line << ": " << row << ": " << fl.reason << '\n';
    }
    plain << "rows " << rows << " failures " << failures.size() << '\n';
    emit({{"rows", rows}, {"failures", fail_list}}, plain.str());
    return failures.empty() ? exit_ok : exit_verification;
  }
  if (name == "syzygy") {
    if (o.cubic.empty() == o.quartic.empty()) fail(Errc::parse_error, "give exactly one of --cubic or --quartic");
    const bool cubic = !o.cubic.empty();
    const BinaryForm form = BinaryForm::parse(cubic ? o.cubic : o.quartic);
    const bool ok = cubic ? cubic_syzygy_check(form) : quartic_syzygy_check(form);
    emit({{"form", form.to_string()}, {"kind", cubic ? "cubic" : "quartic"}, {"holds", ok}},
         std::string(ok ? "PASS" : "FAIL") + "\n");
    return ok ? exit_ok : exit_verification;
  }
  if (name == "diag-check") {
    const NumberField f = field_from(o);
    const auto r = diagonalization_residual(f, Element::parse(o.coords));
    const bool ok = o.threshold < 0 || r < o.threshold;
    emit({{"pair", o.pair}, {"coords", o.coords}, {"residual", format_residual(r)}}, format_residual(r) + "\n");
    return ok ? exit_ok : exit_verification;
  }
  if (name == "bench") {
    const Strategy s = parse_strategy(o.algo);
    if (o.size < 1) fail(Errc::parse_error, "--size must be positive");
    const auto m = static_cast<std::size_t>(o.size);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> dist(-100, 100);
    IntMatrix a(m, m), b(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        a(i, j) = dist(rng);
        b(i, j) = dist(rng);
      }
    MulCounter counter;
    const auto start = std::chrono::steady_clock::now();
    IntMatrix c;
    switch (s) {
      case Strategy::schoolbook:
        c = schoolbook_multiply(a, b, &counter);
        break;
      case Strategy::ww:
        c = ww_multiply(a, b, &counter);
        break;
      case Strategy::ww_recursive:
        c = ww_recursive(a, b, &counter);
        break;
    }
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    if (!(c == schoolbook_multiply(a, b))) fail(Errc::internal_error, "benchmark product disagrees with schoolbook");
    std::ostringstream row;
    row << m << ',' << strategy_name(s) << ',' << counter.scalar_mults << ',' << counter.scalar_adds << ',' << ns << '\n';
    emit({{"m", m},
          {"strategy", strategy_name(s)},
          {"mults", counter.scalar_mults},
          {"adds", counter.scalar_adds},
          {"nanoseconds", ns}},
         "m,strategy,mults,adds,nanoseconds\n" + row.str());
    return exit_ok;
  }
  fail(Errc::parse_error, "no subcommand given");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in rings of integers through arithmetic matrices", "amat"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Emit one JSON record per result");

  auto* disc = app.add_subcommand("disc", "Exact discriminant of a binary form");
  disc->add_option("--form", o.form, "Coefficients a1,...,a{n+1}")->required();

  auto* matrix = app.add_subcommand("matrix", "Arithmetic matrix of an element");
  matrix->add_option("--pair", o.pair, "Essential pair a0:a1,...")->required();
  auto* coords_opt = matrix->add_option("--coords", o.coords, "Element coordinates x0,...");
  auto* sym_opt = matrix->add_flag("--symbolic", o.symbolic, "Entries as polynomials in the coordinates");
  coords_opt->excludes(sym_opt);

  for (const char* name : {"mul", "add", "inv", "norm", "trace", "charpoly"}) {
    auto* sub = app.add_subcommand(name, std::string("Element operation: ") + name);
    sub->add_option("--pair", o.pair, "Essential pair a0:a1,...")->required();
    sub->add_option("--a", o.a, "First element coordinates")->required();
    if (std::string(name) == "mul" || std::string(name) == "add") sub->add_option("--b", o.b, "Second element")->required();
    if (std::string(name) == "mul") sub->add_option("--via", o.via, "matrix (default) or fft");
  }

  auto* search = app.add_subcommand("search", "Enumerate essential pairs");
  search->add_option("--disc", o.disc, "Field discriminant")->required();
  search->add_option("--degree", o.degree, "Degree n (2..5)")->required();
  search->add_option("--height", o.height, "Coefficient box height")->required();
  search->add_option("--max-a0", o.max_a0, "Largest a0");
  search->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify-tables", "Check essential-pair table files");
  verify->add_option("--file", o.files, "Table file (repeatable)")->required();

  auto* syz = app.add_subcommand("syzygy", "Check the cubic or quartic syzygy");
  syz->add_option("--cubic", o.cubic, "Cubic form a,b,c,d");
  syz->add_option("--quartic", o.quartic, "Quartic form a,b,c,d,e");

  auto* diag = app.add_subcommand("diag-check", "Diagonalization residual of an arithmetic matrix");
  diag->add_option("--pair", o.pair, "Essential pair a0:a1,...")->required();
  diag->add_option("--coords", o.coords, "Element coordinates")->required();
  diag->add_option("--threshold", o.threshold, "Exit 3 when the residual is not below this value");

  auto* bench = app.add_subcommand("bench", "Count operations of one matrix product");
  bench->add_option("--size", o.size, "Matrix dimension m")->required();
  bench->add_option("--algo", o.algo, "schoolbook | ww | recursive");
  bench->add_option("--seed", o.seed, "Seed for the random matrices");

  std::vector<std::string> reversed = glue_negative_values(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: parse-error: " << e.what() << '\n';
    return exit_parse;
  }

  if (matrix->parsed() && o.coords.empty() && !o.symbolic) {
    err << "error: parse-error: matrix needs --coords or --symbolic\n";
    return exit_parse;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return dispatch(name, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::parse_error ? exit_parse : exit_domain;
  }
}

}  // namespace amat
