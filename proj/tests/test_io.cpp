#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "lw/errors.hpp"
#include "lw/io.hpp"
#include "lw/takagi.hpp"

using namespace lw;
using lw::io::json;

TEST_CASE("numbers render with 17 significant digits and round-trip") {
  for (double x : {1.0 / 3.0, 0.1, 1e-17, 123456.789, -0.25, 2.0}) {
    const std::string s = lw::io::format_number(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(lw::io::format_number(0.25) == "0.25");
  CHECK(lw::io::format_number(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("json dump keeps float precision and stable key order") {
  json j;
  j["b"] = 1.0 / 3.0;
  j["a"] = {1, 2, 3};
  const std::string text = lw::io::dump_json(j);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"a\"") < text.find("\"b\""));
  json back = lw::io::parse_json(text);
  CHECK(back["b"].get<double>() == 1.0 / 3.0);
  CHECK_THROWS_AS(lw::io::parse_json("{nope"), InputError);
}

TEST_CASE("norm serialization round-trips") {
  for (const Norm& n : {Norm::lp(2, 3), Norm::lp(1, 2), Norm::linf(4),
                        Norm::sup_grid({0.0, 0.5, 1.0})}) {
    Norm back = lw::io::norm_from_json(lw::io::norm_to_json(n));
    CHECK(back.kind() == n.kind());
    CHECK(back.dimension() == n.dimension());
    std::vector<double> x(n.dimension(), 0.0);
    x[0] = 0.7;
    CHECK(back.value(x) == n.value(x));
  }
}

TEST_CASE("cloud serialization round-trips") {
  PointCloudSet K = sigma_set(6);
  PointCloudSet back = lw::io::cloud_from_json(lw::io::cloud_to_json(K));
  CHECK(back.size() == K.size());
  CHECK(back.label() == K.label());
  for (std::size_t i = 0; i < K.size(); ++i) {
    for (int c = 0; c < K.dimension(); ++c) {
      CHECK(back.point(i)[c] == K.point(i)[c]);
    }
  }
}

TEST_CASE("network serialization round-trips evaluation") {
  TakagiNetwork tn = build_takagi_network(TakagiSpec::from_lambda(3.0, 5));
  json j = lw::io::net_to_json(tn.net);
  FeedForwardNet back = lw::io::net_from_json(j);
  CHECK(back.depth() == tn.net.depth());
  CHECK(back.param_bound() == tn.net.param_bound());
  for (int i = 0; i <= 32; ++i) {
    std::vector<double> x = {i / 32.0};
    CHECK(back.evaluate(x) == tn.net.evaluate(x));
  }
}

TEST_CASE("malformed network json is rejected") {
  json j = lw::io::net_to_json(build_takagi_network(TakagiSpec::from_lambda(4.0, 2)).net);
  json missing = j;
  missing.erase("layers");
  CHECK_THROWS_AS(lw::io::net_from_json(missing), InputError);
  json ragged = j;
  ragged["layers"][0]["matrix"][0] = {1.0, 2.0};  // wrong row width
  CHECK_THROWS_AS(lw::io::net_from_json(ragged), InputError);
}

TEST_CASE("csv renders a comment line, header, and parses back") {
  lw::io::Csv csv;
  csv.comment = "lengths in ambient units";
  csv.header = {"n", "value"};
  csv.add_row({"1", "0.5"});
  csv.add_row({"2", "0.25"});
  const std::string text = csv.to_string();
  CHECK(text.substr(0, 2) == "# ");
  CHECK(text.find("n,value") != std::string::npos);
  lw::io::Csv back = lw::io::Csv::parse(text);
  CHECK(back.comment == csv.comment);
  CHECK(back.header == csv.header);
  CHECK(back.rows == csv.rows);
  CHECK(back.column("value") == 1);
  CHECK(back.column("absent") == -1);
  CHECK_THROWS_AS(csv.add_row({"only-one"}), InputError);
  CHECK_THROWS_AS(lw::io::Csv::parse(""), InputError);
}

TEST_CASE("entropy profile csv round-trips") {
  EntropyProfile profile;
  for (int n = 0; n < 4; ++n) {
    EntropyProfile::Row row;
    row.n = n;
    row.lower = std::exp2(-n - 1) * 0.9;
    row.upper = std::exp2(-n - 1);
    row.method = n < 2 ? "exact" : "greedy-upper";
    profile.rows.push_back(row);
  }
  lw::io::Csv csv = lw::io::entropy_profile_csv(profile);
  CHECK(!csv.comment.empty());
  EntropyProfile back = lw::io::entropy_profile_from_csv(csv);
  REQUIRE(back.rows.size() == profile.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    CHECK(back.rows[i].n == profile.rows[i].n);
    CHECK(back.rows[i].lower == profile.rows[i].lower);
    CHECK(back.rows[i].upper == profile.rows[i].upper);
    CHECK(back.rows[i].method == profile.rows[i].method);
  }
}

TEST_CASE("width table csv exposes the consistency-check columns") {
  WidthEstimate est;
  est.n = 3;
  est.gamma = 2.0;
  est.upper = 0.125;
  est.delta = 0.25;
  lw::io::Csv csv = lw::io::width_table_csv({est});
  auto data = lw::io::width_data_from_csv(csv);
  REQUIRE(data.size() == 1);
  CHECK(data[0].m == 3.0);
  CHECK(data[0].gamma == 2.0);
  CHECK(data[0].upper == 0.125);
}

TEST_CASE("file round-trip") {
  const std::string path = "io_test_scratch.json";
  json j;
  j["x"] = 0.1;
  lw::io::save_json_file(path, j);
  json back = lw::io::load_json_file(path);
  CHECK(back["x"].get<double>() == 0.1);
  CHECK_THROWS_AS(lw::io::read_text_file("definitely_missing_file_xyz.json"),
                  InputError);
  std::remove(path.c_str());
}
