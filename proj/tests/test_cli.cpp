#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "shapeid/cli.hpp"
#include "shapeid/synth.hpp"

using namespace shapeid;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("shapeid_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("generate corpus writes eight files in table order and each classifies") {
  TempDir dir;
  const auto g = cli_run({"generate", "corpus", "-o", dir.path().string()});
  REQUIRE(g.code == 0);
  const auto printed = lines(g.out);
  REQUIRE(printed.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto name = std::string(slug(kShapeClasses[i])) + ".pgm";
    CHECK(fs::path(printed[i]).filename() == name);
    const auto file = dir.path() / name;
    REQUIRE(fs::exists(file));
    const auto c = cli_run({"classify", file.string()});
    CHECK(c.code == 0);
    CHECK(c.out == std::string(to_string(kShapeClasses[i])) + "\n");
  }
}

TEST_CASE("classify --json carries the report keys and agrees with plain mode") {
  TempDir dir;
  const auto file = (dir.path() / "square.pgm").string();
  REQUIRE(cli_run({"generate", "square", "-o", file}).code == 0);
  const auto plain = cli_run({"classify", file});
  const auto js = cli_run({"classify", file, "--json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  for (const char* key : {"file", "label", "elapsed_ms", "features", "evidence"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["label"] == "Square");
  CHECK(plain.out == "Square\n");
  CHECK(j["elapsed_ms"].get<double>() >= 0);
  CHECK(j["file"] == file);
  const auto& f = j["features"];
  CHECK(f["sides"].size() == 4);
  CHECK(f["diagonals"].size() == 2);
  CHECK(f["distances"].size() == 6);
  CHECK(f["corners"].size() == 4);
  CHECK(f.contains("bulge_ratio"));
  CHECK(j["evidence"]["equal_sides"] == true);
}

TEST_CASE("classify --explain appends the evidence") {
  TempDir dir;
  const auto file = (dir.path() / "hemisphere.pgm").string();
  REQUIRE(cli_run({"generate", "hemisphere", "-o", file}).code == 0);
  const auto r = cli_run({"classify", file, "--explain"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Hemisphere\n", 0) == 0);
  CHECK(r.out.find("1/2 pi r^2") != std::string::npos);
}

TEST_CASE("classify reports file and pipeline failures") {
  TempDir dir;
  const auto bad = dir.path() / "bad.pgm";
  std::ofstream(bad) << "P5\n10 10\n300\n";
  auto r = cli_run({"classify", bad.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("PGM") != std::string::npos);

  r = cli_run({"classify", (dir.path() / "missing.pgm").string()});
  CHECK(r.code != 0);
  CHECK_FALSE(r.err.empty());

  const auto flat = dir.path() / "flat.pgm";
  std::ofstream(flat) << "P2\n4 4\n255\n7 7 7 7 7 7 7 7 7 7 7 7 7 7 7 7\n";
  r = cli_run({"classify", flat.string()});
  CHECK(r.code != 0);
  CHECK(r.err.find("binarize") != std::string::npos);

  const auto blank = dir.path() / "blank.pgm";
  std::ofstream(blank) << "P2\n3 1\n255\n0 0 0\n";
  r = cli_run({"classify", blank.string(), "--threshold", "fixed:10"});
  CHECK(r.code != 0);
  CHECK(r.err.find("isolate") != std::string::npos);
}

TEST_CASE("classify honours threshold and tolerance flags") {
  TempDir dir;
  const auto file = (dir.path() / "kite.pgm").string();
  REQUIRE(cli_run({"generate", "kite", "-o", file}).code == 0);
  CHECK(cli_run({"classify", file, "--threshold", "fixed:128"}).out == "Kite\n");
  CHECK(cli_run({"classify", file, "--rel-eps", "0.45"}).out != "Kite\n");
  CHECK(cli_run({"classify", file, "--threshold", "fixed:300"}).code == 2);
  CHECK(cli_run({"classify", file, "--threshold", "median"}).code == 2);
  CHECK(cli_run({"classify", file, "--rel-eps", "0.7"}).code == 2);
}

TEST_CASE("generate is deterministic and validates its input") {
  TempDir dir;
  const auto a = dir.path() / "a.pgm", b = dir.path() / "b.pgm";
  for (const auto& p : {a, b}) {
    REQUIRE(cli_run({"generate", "square", "--size", "256x256", "-o", p.string()}).code == 0);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("P5\n256 256\n255\n", 0) == 0);

  const auto c = dir.path() / "c.pgm";
  REQUIRE(cli_run({"generate", "rectangle", "--size", "320x200", "--rotate", "20", "-o", c.string()}).code == 0);
  CHECK(slurp(c).rfind("P5\n320 200\n255\n", 0) == 0);
  CHECK(cli_run({"classify", c.string()}).out == "Rectangle\n");

  const auto unknown = cli_run({"generate", "pentagon", "-o", (dir.path() / "p.pgm").string()});
  CHECK(unknown.code != 0);
  CHECK(unknown.err.find("unknown shape") != std::string::npos);

  CHECK(cli_run({"generate", "cylinder", "--bulge", "80", "-o", c.string()}).code != 0);
  CHECK(cli_run({"generate", "hemisphere", "--rotate", "10", "-o", c.string()}).code != 0);
  CHECK(cli_run({"generate", "square", "--size", "12xQ", "-o", c.string()}).code != 0);
  CHECK(cli_run({"generate", "square", "-o", (dir.path() / "no" / "such" / "dir.pgm").string()}).code != 0);
}

TEST_CASE("bench prints the header, eight shapes and an average") {
  const auto r = cli_run({"bench", "--repeat", "1"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "shape,size,mean_ms,min_ms,max_ms");
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rows[i + 1].rfind(std::string(to_string(kShapeClasses[i])) + ",256x256,", 0) == 0);
  }
  CHECK(rows[9].rfind("average,256x256,", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string field;
    int n = 0;
    while (std::getline(in, field, ',')) {
      if (n >= 2) CHECK_NOTHROW((void)std::stod(field));
      ++n;
    }
    CHECK(n == 5);
  }
}

TEST_CASE("usage errors") {
  CHECK(cli_run({}).code == 2);
  CHECK(cli_run({"frobnicate"}).code == 2);
  CHECK(cli_run({"bench", "--repeat", "0"}).code == 2);
  CHECK(cli_run({"--help"}).code == 0);
}
