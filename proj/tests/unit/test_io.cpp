#include "helpers.hpp"

#include <filesystem>
#include <fstream>

#include "renyilab/io.hpp"

using namespace testing;
using doctest::Approx;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("renyilab_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  Rng rng(1);
  const ComplexMatrix sq = rng.ginibre(3, 3);
  CHECK(matrix_from_json(matrix_to_json(sq)) == sq);
  CHECK(matrix_to_json(sq).contains("dim"));
  const ComplexMatrix rect = rng.ginibre(2, 4);
  const Json j = matrix_to_json(rect);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 4);
  CHECK(matrix_from_json(j) == rect);

  const Json real_only = Json::parse(R"({"dim": 2, "re": [[1, 0], [0, 2]]})");
  CHECK(max_abs(matrix_from_json(real_only) - diag_matrix({1.0, 2.0})) == 0.0);
}

TEST_CASE("state and vector JSON") {
  const StateFunctional rho = random_density(3, 2, 2);
  const StateFunctional back = state_from_json(state_to_json(rho));
  CHECK(back.matrix() == rho.matrix());
  CHECK(back.normalized());

  const Json bad = Json::parse(R"({"density": {"dim": 2, "re": [[1, 0], [0, 1]]}, "normalized": true})");
  CHECK_ERROR(state_from_json(bad), ErrorCode::NotNormalized);
  const Json unnorm = Json::parse(R"({"density": {"dim": 2, "re": [[1, 0], [0, 1]]}, "normalized": false})");
  CHECK_FALSE(state_from_json(unnorm).normalized());

  Rng rng(3);
  const VectorState xi = random_vector(2, 3, rng);
  const Json vj = vector_to_json(xi);
  CHECK(vj["n"] == 2);
  CHECK(vj["m"] == 3);
  CHECK(vector_from_json(vj).reshape_matrix() == xi.reshape_matrix());
  Json wrong = vj;
  wrong["m"] = 2;
  CHECK_ERROR(vector_from_json(wrong), ErrorCode::ParseError);
}

TEST_CASE("channel JSON conventions") {
  Rng rng(4);
  const Channel ch = Channel::random(2, 3, 2, rng);
  const Json j = channel_to_json(ch);
  CHECK(j["convention"] == "heisenberg");
  const ChannelFile back = channel_from_json(j);
  CHECK(back.convention == KrausConvention::Heisenberg);
  CHECK(back.converted);
  for (std::size_t i = 0; i < ch.kraus().size(); ++i) CHECK(max_abs(back.channel.kraus()[i] - ch.kraus()[i]) < 1e-15);

  Json s;
  s["convention"] = "schrodinger";
  s["kraus"] = Json::array();
  for (const ComplexMatrix& k : ch.kraus()) s["kraus"].push_back(matrix_to_json(k));
  const ChannelFile sf = channel_from_json(s);
  CHECK_FALSE(sf.converted);
  const StateFunctional rho = random_density(2, 2, rng);
  CHECK(max_abs(apply_predual(sf.channel, rho).matrix() - apply_predual(ch, rho).matrix()) < 1e-14);

  s["convention"] = "sideways";
  CHECK_ERROR(channel_from_json(s), ErrorCode::ParseError);
}

TEST_CASE("numbers, reports and parse errors") {
  CHECK(number_to_json(kInfinity) == "inf");
  CHECK(std::isinf(number_from_json(Json("inf"))));
  CHECK(number_from_json(Json(2.5)) == 2.5);
  CHECK_ERROR(number_from_json(Json("two")), ErrorCode::ParseError);

  const Report r = Report::at_most(1.0, 2.0, 1e-9).with_seed(77);
  const Json j = report_to_json(r);
  for (const char* key : {"lhs", "rhs", "slack", "pass", "instance_seed"}) CHECK(j.contains(key));
  CHECK(j["instance_seed"] == 77);
  CHECK(j["pass"] == true);

  try {
    parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "inline");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("inline:3:") != std::string::npos);
  }
}

TEST_CASE("file loaders report the path") {
  const auto good = write_temp("rho.json", R"({"density": {"dim": 2, "re": [[0.5, 0], [0, 0.5]]}, "normalized": true})");
  CHECK(load_state(good).normalized());
  const auto bad = write_temp("bad.json", R"({"density": {"dim": 2, "re": [[0.5, 0]]}})");
  try {
    load_state(bad);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  CHECK_ERROR(load_state("/nonexistent/renyilab.json"), ErrorCode::ParseError);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}
