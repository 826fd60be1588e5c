#include "amat/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "amat/element.hpp"

namespace amat {

namespace {

std::optional<__int128> to_i128(const Int& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) >= 120) return std::nullopt;
  Int mag = abs(z);
  const Int high = mag >> 64;
  const Int low = mag - (high << 64);
  __int128 v = (static_cast<__int128>(high.get_ui()) << 64) | static_cast<__int128>(low.get_ui());
  return z < 0 ? -v : v;
}

struct Task {
  std::int64_t a0;
  std::int64_t a1;
  std::int64_t a2;
};

void scan_task(const Task& task, int n, std::int64_t bound, const Int& target, std::vector<EssentialPair>& out) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
  c[0] = task.a1;
  c[1] = task.a2;
  const std::size_t free_from = 2;
  for (std::size_t k = free_from; k < c.size(); ++k) c[k] = -bound;
  const auto target128 = to_i128(target);
  for (;;) {
    if (c.back() != 0) {
      bool hit = false;
      const auto d = form_discriminant_i128(c);
      if (d && target128) {
        hit = *d == *target128;
      } else {
        hit = form_discriminant(BinaryForm(std::vector<Int>(c.begin(), c.end()))) == target;
      }
      if (hit) {
        BinaryForm form(std::vector<Int>(c.begin(), c.end()));
        if (irreducibility_certificate(form) == Irreducibility::irreducible)
          out.push_back(EssentialPair{Int(static_cast<long>(task.a0)), std::move(form)});
      }
    }
    std::size_t k = free_from;
    while (k < c.size() && c[k] == bound) c[k++] = -bound;
    if (k == c.size()) break;
    ++c[k];
  }
}

}  // namespace

std::vector<EssentialPair> search_essential_pairs(const Int& disc, int n, int height, int a0_max, SearchOptions options) {
  if (n < 2 || n > 5) fail(Errc::unsupported_degree, "search supports degrees 2..5");
  if (height < 1 || a0_max < 1) fail(Errc::parse_error, "height and max a0 must be positive");

  struct Job {
    Task task;
    std::int64_t bound;
    Int target;
  };
  std::vector<Job> jobs;
  for (std::int64_t a0 = 1; a0 <= a0_max; ++a0) {
    const std::int64_t sq = a0 * a0;
    const std::int64_t bound = static_cast<std::int64_t>(height) * sq;
    const Int target = disc * Int(static_cast<long>(sq));
    for (std::int64_t a1 = sq; a1 <= bound; a1 += sq)
      for (std::int64_t a2 = -(bound / a0) * a0; a2 <= bound; a2 += a0) jobs.push_back({{a0, a1, a2}, bound, target});
  }

  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::vector<EssentialPair>> found(workers);
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned w) {
    for (std::size_t idx; (idx = next.fetch_add(1)) < jobs.size();)
      scan_task(jobs[idx].task, n, jobs[idx].bound, jobs[idx].target, found[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  std::vector<EssentialPair> out;
  for (auto& part : found) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end(), [](const EssentialPair& x, const EssentialPair& y) {
    if (x.a0 != y.a0) return x.a0 < y.a0;
    return x.form < y.form;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TableRow> parse_table(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }), line.end());
    if (line.empty()) continue;
    const auto first = line.find(';');
    const auto second = first == std::string::npos ? first : line.find(';', first + 1);
    if (second == std::string::npos)
      fail(Errc::parse_error, "table line " + std::to_string(number) + ": expected 'disc;a0;a1,...'");
    try {
      TableRow row{parse_int(std::string_view(line).substr(0, first)),
                   EssentialPair{parse_int(std::string_view(line).substr(first + 1, second - first - 1)),
                                 BinaryForm::parse(std::string_view(line).substr(second + 1))},
                   number};
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      fail(Errc::parse_error, "table line " + std::to_string(number) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open table file '" + path + "'");
  return parse_table(in);
}

TableReport verify_tables(const std::vector<TableRow>& rows) {
  TableReport report;
  report.rows = rows.size();
  for (const auto& row : rows) {
    const Int& a0 = row.pair.a0;
    const BinaryForm& form = row.pair.form;
    std::string reason;
    const Int d = form_discriminant(form);
    if (a0 <= 0) {
      reason = "a0 must be positive";
    } else if (d != row.disc * a0 * a0) {
      reason = "disc(B) = " + d.get_str() + " but disc * a0^2 = " + Int(row.disc * a0 * a0).get_str();
    } else if (!mpz_divisible_p(form.a(1).get_mpz_t(), Int(a0 * a0).get_mpz_t())) {
      reason = "a0^2 does not divide a_1";
    } else if (!mpz_divisible_p(form.a(2).get_mpz_t(), a0.get_mpz_t())) {
      reason = "a0 does not divide a_2";
    } else if (irreducibility_certificate(form) != Irreducibility::irreducible) {
      reason = "form is not certified irreducible";
    }
    if (!reason.empty()) report.failures.push_back({row, std::move(reason)});
  }
  return report;
}

std::optional<EssentialPair> essential_pair_from_element(const NumberField& field, const Element& alpha) {
  const UniPoly f = char_poly(field, alpha);
  if (poly_discriminant(f) == 0) fail(Errc::degenerate_element, "element does not generate the field");
  std::vector<Int> coeffs;
  for (const auto& c : f.coeffs()) {
    if (!is_integer(c)) return std::nullopt;
    coeffs.push_back(c.get_num());
  }
  // x^n f(y/x): the constant term of f leads.
  BinaryForm form(coeffs);
  const Int d = form_discriminant(form);
  const Int& disc = field.discriminant();
  const Rat n_alpha = norm(field, alpha);
  const Rat tr_inv = trace(field, inverse(field, alpha));
  if (!is_integer(Rat(disc) * n_alpha / Rat(d))) return std::nullopt;
  if (!is_integer(Rat(disc) * n_alpha * n_alpha * tr_inv * tr_inv / Rat(d))) return std::nullopt;
  if (!mpz_divisible_p(d.get_mpz_t(), disc.get_mpz_t())) return std::nullopt;
  const Int a0 = isqrt_exact_or_negative(exact_div(d, disc));
  if (a0 <= 0) return std::nullopt;
  EssentialPair pair{a0, std::move(form)};
  make_field(pair);
  if (form_discriminant(pair.form) != disc * a0 * a0) fail(Errc::internal_error, "constructed pair has the wrong discriminant");
  return pair;
}

}  // namespace amat
