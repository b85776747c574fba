#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ginv/cli.hpp"
#include "ginv/json_io.hpp"

using ginv::io::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ginv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ginv_cli_test_" + std::to_string(std::rand()) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

const char* kFirstNonzero =
    R"({"a":"1","b":"1","x":["1","1"],"y":["1","1"],"z":["1","1"],"w":["1","-1"]})";
const char* kBothZero =
    R"({"a":"1","b":"1","x":["1","1"],"y":["1","-1"],"z":["1","1"],"w":["1","-1"]})";
const char* kGaussIdentity =
    R"({"a":"1","b":"1","x":["1","i"],"y":["1","1"],"z":["1"],"w":["1"],
        "field":{"base":"gaussian_rationals","involution":"identity"}})";

}  // namespace

TEST_CASE("classify") {
  TempDir dir;
  auto r = run({"classify", "--spec", dir.write("s.json", kFirstNonzero)});
  CHECK(r.code == ginv::cli::kOk);
  Json j = Json::parse(r.out);
  CHECK(j["case"] == "first_nonzero_second_zero");
  CHECK(j["zeta"] == "3");
}

TEST_CASE("drazin with oracle agreement") {
  TempDir dir;
  auto r = run({"drazin", "--spec", dir.write("s.json", kBothZero)});
  CHECK(r.code == ginv::cli::kOk);
  Json j = Json::parse(r.out);
  CHECK(j["index"] == 2);
  CHECK(j["method"] == "closed_form");
  CHECK(j["agreement"] == true);
  CHECK(j["oracle"]["matrix"] == j["matrix"]);

  auto n = run({"drazin", "--no-oracle", "--spec", dir.path("s.json")});
  CHECK(n.code == ginv::cli::kOk);
  CHECK(Json::parse(n.out)["agreement"].is_null());
}

TEST_CASE("mp non-existence and field override") {
  TempDir dir;
  std::string spec = dir.write("g.json", kGaussIdentity);
  auto r = run({"mp", "--spec", spec});
  CHECK(r.code == ginv::cli::kNotExists);
  Json j = Json::parse(r.out);
  CHECK(j["exists"] == false);
  CHECK(j["matrix"].is_null());

  setenv("GINV_FIELD", R"({"base":"gaussian_rationals","involution":"conjugation"})", 1);
  auto c = run({"mp", "--spec", spec});
  unsetenv("GINV_FIELD");
  CHECK(c.code == ginv::cli::kOk);
  CHECK(Json::parse(c.out)["exists"] == true);
}

TEST_CASE("build round trip through --out and verify") {
  TempDir dir;
  std::string spec = dir.write("s.json", kBothZero);
  std::string m = dir.path("m.json");
  CHECK(run({"build", "--spec", spec, "--out", m}).code == ginv::cli::kOk);
  Json mj = Json::parse(std::ifstream(m));
  CHECK(mj["rows"] == 6);

  std::string d = dir.path("d.json");
  auto dr = run({"drazin", "--matrix", m, "--out", d});
  CHECK(dr.code == ginv::cli::kOk);
  Json dj = Json::parse(std::ifstream(d));
  std::string cand = dir.write("c.json", dj["matrix"].dump());
  CHECK(run({"verify", "--matrix", m, "--candidate", cand, "--kind", "drazin"}).code ==
        ginv::cli::kOk);
  CHECK(run({"verify", "--matrix", m, "--candidate", m, "--kind", "drazin"}).code ==
        ginv::cli::kNotExists);
  CHECK(run({"group", "--matrix", m}).code == ginv::cli::kNotExists);
}

TEST_CASE("d-linked input") {
  TempDir dir;
  std::string spec = dir.write(
      "d.json", R"({"A":{"rows":2,"cols":2,"entries":[["0","1"],["0","0"]]},
                    "stars":[{"x":["1","1"],"y":["1","-1"]},{"x":["1","1"],"y":["1","-1"]}]})");
  auto c = run({"classify", "--spec", spec});
  CHECK(c.code == ginv::cli::kOk);
  CHECK(Json::parse(c.out)["case"] == "zero_pairing");
  auto d = run({"drazin", "--spec", spec});
  CHECK(d.code == ginv::cli::kOk);
  Json j = Json::parse(d.out);
  CHECK(j["index"] == 4);
  CHECK(j["predicted_index"] == 4);
  CHECK(j["agreement"] == true);
  CHECK(run({"group", "--spec", spec}).code == ginv::cli::kNotExists);
}

TEST_CASE("input errors exit 2") {
  TempDir dir;
  CHECK(run({"classify", "--spec", dir.path("missing.json")}).code == ginv::cli::kInputError);
  CHECK(run({"classify", "--spec", dir.write("bad.json", "{not json")}).code ==
        ginv::cli::kInputError);
  auto zero = run({"classify", "--spec",
                   dir.write("z.json", R"({"a":"1","b":"1","x":["0"],"y":["1"],"z":["1"],"w":["1"]})")});
  CHECK(zero.code == ginv::cli::kInputError);
  CHECK(zero.err.find("x") != std::string::npos);
  CHECK(run({"classify"}).code == ginv::cli::kInputError);
  CHECK(run({"bogus"}).code == ginv::cli::kInputError);
  CHECK(run({"proptest", "--family", "nope"}).code == ginv::cli::kInputError);
}

TEST_CASE("proptest is deterministic") {
  auto a = run({"proptest", "--cases", "30", "--seed", "7"});
  auto b = run({"proptest", "--cases", "30", "--seed", "7"});
  CHECK(a.code == ginv::cli::kOk);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["failures"].empty());
  CHECK(j["cases_run"] == 30);
  CHECK(!j.contains("elapsed_ms"));
  auto t = run({"proptest", "--cases", "3", "--seed", "7", "--timing"});
  CHECK(Json::parse(t.out).contains("elapsed_ms"));
}
