#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "gaplab/atlas_json.hpp"
#include "gaplab/curve_io.hpp"
#include "gaplab/symbolic_atlas.hpp"

using namespace gaplab;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gaplab_io_" + name);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("number formatting keeps 12 significant digits") {
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    CHECK(format_number(2.5e-7) == "2.5e-07");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1) == "1");
  }

  TEST_CASE("curve CSV layout") {
    GapCurve c;
    c.lambdas = {0, 0.5};
    c.values = {1, 2.0 / 3};
    OutputMeta meta;
    meta.timestamp = false;
    meta.fields = {{"t", "3/2"}};
    std::ostringstream os;
    write_curve_csv(os, c, meta);
    CHECK(os.str() == "# schema=1\n# t=3/2\nlambda,G\n0,1\n0.5,0.666666666667\n");
    meta.timestamp = true;
    std::ostringstream os2;
    write_curve_csv(os2, c, meta, "g");
    CHECK(os2.str().find("# generated=") != std::string::npos);
    CHECK(os2.str().find("lambda,g\n") != std::string::npos);
  }

  TEST_CASE("curve JSON carries the schema") {
    GapCurve c;
    c.lambdas = {0.25};
    c.values = {0.5};
    c.engine = "closed";
    c.t = RationalScale(3, 2);
    OutputMeta meta;
    meta.timestamp = false;
    auto j = curve_to_json(c, meta);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("t") == "3/2");
    CHECK(j.at("G")[0] == 0.5);
    CHECK_FALSE(j.contains("generated"));
  }

  TEST_CASE("gap dump round trip") {
    const auto path = temp_file("gaps.bin");
    std::vector<double> gaps{0.3, 0.1, 0.2, 0.0};
    write_gap_dump(path, gaps);
    CHECK(std::filesystem::file_size(path) == 16 + 4 * 8);
    std::ifstream is(path, std::ios::binary);
    char head[16];
    is.read(head, 16);
    CHECK(std::string(head, 4) == "GAPS");
    CHECK(read_gap_dump(path) == std::vector<double>{0.0, 0.1, 0.2, 0.3});
    {
      std::ofstream bad(path, std::ios::binary);
      bad << "NOPE0000";
    }
    CHECK_THROWS(read_gap_dump(path));
    std::filesystem::remove(path);
  }

  TEST_CASE("symbolic atlases survive JSON") {
    for (int h : {2, 3, 5}) {
      auto a = G_general_symbolic(h);
      auto b = atlas_from_json(nlohmann::json::parse(atlas_to_json(a).dump()));
      REQUIRE(a.regions.size() == b.regions.size());
      CHECK(a.t_breakpoints == b.t_breakpoints);
      for (std::size_t i = 0; i < a.regions.size(); ++i) {
        CHECK(a.regions[i].kappa == b.regions[i].kappa);
        CHECK(a.regions[i].constraints == b.regions[i].constraints);
      }
      CHECK(validate_atlas(b).ok);
    }
  }

  TEST_CASE("atlas JSON rejects a foreign schema") {
    auto j = atlas_to_json(G_general_symbolic(0));
    j["schema"] = 99;
    CHECK_THROWS(atlas_from_json(j));
  }
}
