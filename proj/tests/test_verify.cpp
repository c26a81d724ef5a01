#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "treecodes/graph.hpp"
#include "treecodes/verify.hpp"

using namespace treecodes;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("maximum-degree sweep up to nine vertices") {
  VerifyResult res = verify_main_theorem(4, 9, 4);
  CHECK(res.summary.theorem == "main");
  CHECK(res.summary.n_min == 4);
  CHECK(res.summary.n_max == 9);
  CHECK(res.summary.trees_total == 92);
  CHECK(res.summary.trees_checked == 86);
  CHECK(res.summary.tight == 8);
  CHECK(res.summary.violations == 0);
  CHECK(res.summary.exceptional_set_matches);
  CHECK(res.summary.ok);
  CHECK(res.summary.nodes_total > 0);
  CHECK(res.summary.wall_seconds >= 0.0);
  CHECK(res.reports.size() == 92);

  long long tight = 0;
  for (std::size_t i = 0; i < res.reports.size(); ++i) {
    const BoundReport& r = res.reports[i];
    CHECK((r.verdict == "ok" || r.verdict == "tight"));
    if (r.verdict == "tight") {
      ++tight;
      CHECK_FALSE(r.label.empty());
    }
    if (r.has_main) {
      // tight <=> classified as an attaining tree
      CHECK((r.verdict == "tight") == !r.label.empty());
      CHECK(r.main_target == Rational(static_cast<long long>(r.max_degree - 1) * r.n,
                                      r.max_degree));
      CHECK(r.slack == Rational(r.gamma_id) - r.main_target);
      if (r.verdict == "tight") CHECK(r.slack == Rational(1, r.max_degree));
    }
    if (i > 0) {
      const BoundReport& prev = res.reports[i - 1];
      CHECK((prev.n < r.n || (prev.n == r.n && prev.key < r.key)));
    }
  }
  CHECK(tight == res.summary.tight);
}

TEST_CASE("domination sweep up to nine vertices") {
  VerifyResult res = verify_domination_theorem(3, 9, 4);
  CHECK(res.summary.theorem == "domination");
  CHECK(res.summary.trees_total == 93);
  CHECK(res.summary.trees_checked == 93);
  CHECK(res.summary.tight == 1);
  CHECK(res.summary.violations == 0);
  CHECK(res.summary.ok);
  CHECK(res.reports.size() == 93);

  long long excluded = 0;
  for (const BoundReport& r : res.reports) {
    CHECK((r.verdict == "ok" || r.verdict == "excluded"));
    CHECK(r.dom_target == r.n - r.gamma);
    if (r.verdict == "excluded") {
      ++excluded;
      CHECK(r.n == 4);
      CHECK(r.max_degree == 2);  // only the four-vertex path steps outside
    } else {
      CHECK(r.gamma_id <= r.dom_target);
    }
  }
  CHECK(excluded == res.summary.tight);
}

TEST_CASE("reports do not depend on the worker count") {
  VerifyResult one = verify_main_theorem(4, 9, 1);
  VerifyResult five = verify_main_theorem(4, 9, 5);
  CHECK(format_report(one) == format_report(five));

  VerifyResult d1 = verify_domination_theorem(3, 8, 1);
  VerifyResult d3 = verify_domination_theorem(3, 8, 3);
  CHECK(format_report(d1) == format_report(d3));
}

TEST_CASE("rendered reports match the frozen golden files") {
  std::filesystem::path dir(TREECODES_GOLDEN_DIR);
  CHECK(format_report(verify_main_theorem(4, 8, 3)) == slurp(dir / "main_4_8.txt"));
  CHECK(format_report(verify_domination_theorem(3, 8, 2)) == slurp(dir / "domination_3_8.txt"));
}

TEST_CASE("write_report writes exactly the rendered text") {
  VerifyResult res = verify_domination_theorem(3, 6, 2);
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "treecodes_report_test.txt";
  write_report(path.string(), res);
  CHECK(slurp(path) == format_report(res));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(write_report("/nonexistent_directory_zz/report.txt", res), Error);
}

TEST_CASE("verification guards") {
  CHECK_THROWS_AS(verify_main_theorem(3, 8), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(4, 17), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(8, 6), DomainError);
  CHECK_THROWS_AS(verify_domination_theorem(2, 8), DomainError);
  CHECK_THROWS_AS(verify_domination_theorem(3, 17), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(4, 8, 0), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(4, 8, 65), DomainError);
}
