#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "amat/element.hpp"
#include "amat/search.hpp"
#include "test_support.hpp"

using namespace amat;

namespace {

std::vector<std::string> strings(const std::vector<EssentialPair>& pairs) {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.to_string());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("search for the quartic field of discriminant -275") {
  const auto found = strings(search_essential_pairs(-275, 4, 2, 1));
  CHECK(contains(found, "1:1,1,0,-2,-1"));
  for (const auto& s : found) {
    const NumberField f = make_field(EssentialPair::parse(s));
    CHECK(f.discriminant() == -275);
  }
  // Permuted thread counts give the same result.
  SearchOptions one{1}, four{4};
  CHECK(search_essential_pairs(-275, 4, 2, 1, one) == search_essential_pairs(-275, 4, 2, 1, four));
}

TEST_CASE("search with a0 > 1") {
  const auto pairs = search_essential_pairs(513, 4, 4, 2, SearchOptions{2});
  const auto found = strings(pairs);
  CHECK(contains(found, "2:4,-2,-3,1,1"));
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    CHECK(pairs[i - 1].a0 <= pairs[i].a0);
    CHECK_FALSE(pairs[i - 1] == pairs[i]);
  }
  for (const auto& p : pairs) {
    CHECK(make_field(p).discriminant() == 513);
    CHECK(p.form.coeffs()[0] > 0);
  }
}

TEST_CASE("search in low and high degree") {
  const auto quad = strings(search_essential_pairs(-4, 2, 2, 1));
  CHECK(contains(quad, "1:1,0,1"));
  const auto cubic = strings(search_essential_pairs(49, 3, 2, 1));
  CHECK(contains(cubic, "1:1,1,-2,-1"));
  CHECK(search_essential_pairs(-7, 3, 2, 1).empty());
  CHECK_THROWS_AS(search_essential_pairs(5, 6, 1, 1), Error);
  CHECK_THROWS_AS(search_essential_pairs(5, 1, 1, 1), Error);
}

TEST_CASE("table parsing") {
  std::istringstream in("# comment\n\n-275;1;1,1,0,-2,-1\n 513 ; 2 ; 4,-2,-3,1,1 \n");
  const auto rows = parse_table(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].disc == -275);
  CHECK(rows[1].pair.a0 == 2);
  CHECK(rows[1].line == 4);
  std::istringstream bad("-275;1\n");
  CHECK_THROWS_AS(parse_table(bad), Error);
  std::istringstream bad2("-275;x;1,2,3\n");
  CHECK_THROWS_AS(parse_table(bad2), Error);
}

TEST_CASE("table verification flags wrong rows") {
  std::istringstream in(
      "-275;1;1,1,0,-2,-1\n"
      "-276;1;1,1,0,-2,-1\n"
      "16;1;1,0,0,0,-1\n"
      "513;2;4,-2,-3,1,1\n"
      "128;2;3,0,0,0,2\n");
  const TableReport report = verify_tables(parse_table(in));
  CHECK(report.rows == 5);
  REQUIRE(report.failures.size() == 3);
  CHECK(report.failures[0].row.line == 2);
  CHECK(report.failures[1].row.line == 3);
  CHECK(report.failures[2].row.line == 5);
}

TEST_CASE("bundled tables") {
  const auto t0 = std::chrono::steady_clock::now();
  auto rows = load_table(std::string(AMAT_DATA_DIR) + "/table1_quartic.txt");
  const auto quintic = load_table(std::string(AMAT_DATA_DIR) + "/table2_quintic.txt");
  CHECK(rows.size() == 100);
  CHECK(quintic.size() == 52);
  const auto wide = std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.pair.a0 > 1; });
  CHECK(wide >= 10);
  rows.insert(rows.end(), quintic.begin(), quintic.end());
  const TableReport report = verify_tables(rows);
  CHECK(report.ok());
  for (const auto& f : report.failures) MESSAGE(f.row.line << ": " << f.reason);
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5));
  CHECK_THROWS_AS(load_table("/nonexistent/table.txt"), Error);
}

TEST_CASE("essential pair from an element") {
  const NumberField f = make_field(EssentialPair::parse("1:1,1,0,-2,-1"));
  const auto p = essential_pair_from_element(f, Element::basis(4, 1));
  REQUIRE(p.has_value());
  CHECK(make_field(*p).discriminant() == -275);
  CHECK(p->to_string() == "1:-1,-2,0,1,1");
  testing::Rng rng(81);
  int built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Element a = testing::random_element(rng, 4, 2);
    try {
      if (auto q = essential_pair_from_element(f, a)) {
        ++built;
        CHECK(make_field(*q).discriminant() == -275);
      }
    } catch (const Error& e) {
      CHECK(e.code() == Errc::degenerate_element);
    }
  }
  CHECK(built > 0);
  CHECK_THROWS_AS(essential_pair_from_element(f, Element::one(4)), Error);
}
