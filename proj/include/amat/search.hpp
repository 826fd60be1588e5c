#ifndef AMAT_SEARCH_HPP
#define AMAT_SEARCH_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "amat/field.hpp"

namespace amat {

struct SearchOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// All essential pairs [a0, B] of degree n with field discriminant disc,
/// 1 <= a0 <= a0_max, 0 < a_1 and |a_i| <= height * a0^2. Sorted by
/// (a0, coefficients) and free of duplicates regardless of thread count.
std::vector<EssentialPair> search_essential_pairs(const Int& disc, int n, int height, int a0_max,
                                                  SearchOptions options = {});

struct TableRow {
  Int disc;
  EssentialPair pair;
  std::size_t line = 0;
};

/// Lines "disc;a0;a1,...,a{n+1}". Blank lines and '#' comments are skipped.
std::vector<TableRow> parse_table(std::istream& in);
std::vector<TableRow> load_table(const std::string& path);

struct RowFailure {
  TableRow row;
  std::string reason;
};

struct TableReport {
  std::size_t rows = 0;
  std::vector<RowFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks disc(B) = disc * a0^2, a0^2 | a_1, a0 | a_2 and irreducibility per row.
TableReport verify_tables(const std::vector<TableRow>& rows);

/// Builds [a0, x^n f(y/x)] from the characteristic polynomial f of alpha when
/// D(f) / disc is a perfect square a0^2 and the divisibility conditions hold.
/// Throws degenerate_element when f is not squarefree.
std::optional<EssentialPair> essential_pair_from_element(const NumberField& field, const Element& alpha);

}  // namespace amat

#endif  // AMAT_SEARCH_HPP
