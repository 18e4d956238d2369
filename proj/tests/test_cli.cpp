#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "mzv/exactalg.hpp"
#include "mzv/json_io.hpp"

using mzv::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Value of a "key = value" line in human output.
std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(line.find("= ") + 2);
  }
  return {};
}

std::size_t significant_digits(const std::string& decimal) {
  std::size_t n = 0;
  bool leading = true;
  for (char c : decimal) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

mzv::RealX real(const std::string& text) {
  return mzv::RealX(text, 200);
}

}  // namespace

TEST_CASE("coeffs") {
  const auto three = invoke({"coeffs", "3"});
  CHECK(three.code == 0);
  CHECK(three.out.find("a_3 = (γ³ − 3γζ(2) + 2ζ(3))/6\n") != std::string::npos);
  const auto zero = invoke({"coeffs", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.rfind("a_0 = 1\n", 0) == 0);
  CHECK(invoke({"coeffs", "13"}).code == 2);
  CHECK(invoke({"coeffs", "-1"}).code == 2);

  const auto four = invoke({"--format", "json", "coeffs", "4"});
  REQUIRE(four.code == 0);
  const json j = json::parse(four.out);
  REQUIRE(j.at("coefficients").size() == 5);
  for (int n = 0; n <= 4; ++n) {
    const auto& row = j.at("coefficients")[static_cast<std::size_t>(n)];
    CHECK(row.at("n") == n);
    const auto p = mzv::json_io::zeta_polynomial_from_json(row.at("exact"));
    CHECK(p == mzv::exactalg::recip_gamma_coeff(n));
    CHECK(mzv::json_io::to_json(p).dump() == row.at("exact").dump());
  }
  CHECK(json::parse(j.dump()).dump() == j.dump());

  const auto csv = invoke({"--format", "csv", "coeffs", "2"});
  CHECK(csv.out.rfind("n,exact,decimal\n0,1,1\n", 0) == 0);
}

TEST_CASE("zeta-line") {
  const auto half = invoke({"zeta-line", "--s", "0.5", "--m", "15000"});
  CHECK(half.code == 0);
  CHECK(field(half.out, "value").rfind("-1.4542", 0) == 0);
  const auto skip = invoke({"zeta-line", "--s", "0.5", "--m", "15000", "--skip-one"});
  CHECK(field(skip.out, "value").rfind("-1.4623", 0) == 0);

  const auto two = invoke({"zeta-line", "--s", "2", "--m", "1000"});
  CHECK(two.code == 0);
  const auto v = real(field(two.out, "value"));
  const auto ref = real(field(two.out, "zeta_ref"));
  CHECK(abs(ref - real("1.6449340668482264364724151666460251892189499012067984377355582293700")) < real("1e-60"));
  CHECK(abs(v - ref) < real("1.1e-3"));

  const auto negative = invoke({"zeta-line", "--s", "-1", "--m", "100"});
  CHECK(negative.code == 2);
  CHECK(negative.err.find("s must be positive") != std::string::npos);
}

TEST_CASE("precision flag and environment") {
  const auto d20 = invoke({"--precision", "20", "--format", "json", "zeta-line", "--s", "2", "--m", "1000"});
  const auto d64 = invoke({"--format", "json", "zeta-line", "--s", "2", "--m", "1000"});
  const auto d96 = invoke({"--precision", "96", "--format", "json", "zeta-line", "--s", "2", "--m", "1000"});
  const std::string v20 = json::parse(d20.out).at("value");
  const std::string v64 = json::parse(d64.out).at("value");
  const std::string v96 = json::parse(d96.out).at("value");
  CHECK(significant_digits(v20) == 20);
  CHECK(significant_digits(v64) == 64);
  CHECK(significant_digits(v96) == 96);
  CHECK(abs(real(v64) - real(v96)) < real("1e-60"));

  const auto ones64 = invoke({"--format", "json", "mzv", "ones:3", "--m", "300"});
  const auto ones96 = invoke({"--precision", "96", "--format", "json", "mzv", "ones:3", "--m", "300"});
  CHECK(abs(real(json::parse(ones64.out).at("value")) - real(json::parse(ones96.out).at("value"))) < real("1e-60"));

  CHECK(invoke({"--precision", "8", "coeffs", "1"}).code == 2);

  ::setenv("MZV_PRECISION", "30", 1);
  const auto env = invoke({"--format", "json", "zeta-line", "--s", "2", "--m", "1000"});
  const auto flag = invoke({"--precision", "40", "--format", "json", "zeta-line", "--s", "2", "--m", "1000"});
  ::unsetenv("MZV_PRECISION");
  CHECK(significant_digits(json::parse(env.out).at("value")) == 30);
  CHECK(significant_digits(json::parse(flag.out).at("value")) == 40);
}

TEST_CASE("renorm-integral") {
  const auto gamma = invoke({"renorm-integral", "gamma", "--x", "0", "--r", "1"});
  CHECK(gamma.code == 0);
  CHECK(field(gamma.out, "value").rfind("-0.57721566", 0) == 0);
  CHECK(field(invoke({"renorm-integral", "ci", "--x", "0"}).out, "value").rfind("0.57721566", 0) == 0);
  CHECK(field(invoke({"renorm-integral", "ci2", "--x", "0"}).out, "value").rfind("-1.57079632", 0) == 0);
  CHECK(field(invoke({"renorm-integral", "gamma", "--x", "0", "--r", "e"}).out, "value").rfind("0.42278433", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "mzv_schedule_test.csv";
  const auto with_table =
      invoke({"--format", "json", "renorm-integral", "varpi", "--x", "1", "--r", "2", "--schedule-out", path.string()});
  REQUIRE(with_table.code == 0);
  CHECK(abs(real(json::parse(with_table.out).at("value")) - log(real("2"))) < real("1e-8"));
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "y,raw,window");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 21);
  std::filesystem::remove(path);

  CHECK(invoke({"renorm-integral", "gamma", "--x", "-1"}).code == 2);
  CHECK(invoke({"renorm-integral", "varpi", "--x", "0.5"}).code == 2);
  CHECK(invoke({"renorm-integral", "gamma", "--x", "0", "--r", "0"}).code == 2);
  CHECK(invoke({"renorm-integral", "beta", "--x", "1"}).code == 2);
}

TEST_CASE("mzv") {
  const auto ones = invoke({"mzv", "ones:2", "--m", "10000"});
  CHECK(ones.code == 0);
  CHECK(abs(real(field(ones.out, "value")) - real("-0.65588")) < real("1e-3"));
  CHECK(field(ones.out, "closed_form") == "(γ² − ζ(2))/2");
  CHECK(field(ones.out, "target").rfind("-0.65587807152025388", 0) == 0);

  const auto z21 = invoke({"--format", "json", "mzv", "2,1", "--N", "100000"});
  CHECK(z21.code == 0);
  CHECK(abs(real(json::parse(z21.out).at("value")) - real("1.2020569031595942853997381615114499907649862923405")) <
        real("1e-40"));

  const auto bad = invoke({"mzv", "1,2"});
  CHECK(bad.code == 2);
  CHECK(!bad.err.empty());
  CHECK(invoke({"mzv", "ones:9"}).code == 2);
}

TEST_CASE("check-identities") {
  for (const char* suite : {"reflection2", "reflection3", "renorm-ones", "det-trace"}) {
    const auto r = invoke({"--format", "json", "check-identities", suite});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("suite") == suite);
    CHECK(j.at("pass") == true);
    CHECK(json::parse(j.dump()).dump() == j.dump());
  }
  const auto det = invoke({"check-identities", "det-trace"});
  CHECK(det.out.find("det-trace: 200/200 passed") != std::string::npos);
  CHECK(invoke({"check-identities", "nonsense"}).code == 2);
}

TEST_CASE("check reports exit 1 on any failure") {
  const std::vector<mzv::cli::CheckRow> rows{{"a", "1", "1", "0", true}, {"b", "1", "2", "1", false}};
  for (const char* format : {"human", "json", "csv"}) {
    std::ostringstream out;
    CHECK(mzv::cli::report_checks(out, format, "demo", rows) == mzv::cli::kCheckFailed);
    const bool marked = out.str().find("FAIL") != std::string::npos || out.str().find("false") != std::string::npos;
    CHECK(marked);
  }
  std::ostringstream out;
  CHECK(mzv::cli::report_checks(out, "human", "demo", {rows.front()}) == mzv::cli::kOk);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--format", "xml", "coeffs", "2"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
