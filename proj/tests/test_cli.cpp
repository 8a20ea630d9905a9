#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilgraph/cli.hpp"
#include "nilgraph/parallel.hpp"

using namespace nilgraph;
using nlohmann::json;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string read() const {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
};

}  // namespace

TEST_CASE("analyze writes the report files and honors exit codes") {
  TempFile json_file("nilgraph_test_z18.json");
  TempFile dot_file("nilgraph_test_z18.dot");
  TempFile csv_file("nilgraph_test_z18.csv");
  RunConfig config;
  config.command = RunConfig::Command::Analyze;
  config.ring_text = "Z18";
  config.json_path = json_file.path.string();
  config.dot_path = dot_file.path.string();
  config.csv_path = csv_file.path.string();
  std::ostringstream out, err;
  const int code = run_analyze(config, out, err);
  CHECK(code == kExitMismatch);  // the dominating formula misses on Z18

  const json doc = json::parse(json_file.read());
  CHECK(doc["invariants"]["girth"] == 3);
  CHECK(doc["invariants"]["omega"] == 3);
  CHECK(doc["invariants"]["chi_prime"] == 3);
  CHECK(doc["decomposition"]["components"].size() == 3);
  CHECK(doc["spectra"]["A"]["verified"] == true);
  CHECK(doc["any_mismatch"] == true);

  const std::string dot = dot_file.read();
  CHECK(dot.rfind("graph", 0) == 0);

  const std::string csv = csv_file.read();
  CHECK(csv.rfind("ring,order,nil_size,theorem,", 0) == 0);
  CHECK(csv.find("Z18,18,3,DominatingZn,7,5,Mismatch,") != std::string::npos);
}

TEST_CASE("analyze exit codes") {
  std::ostringstream out, err;
  RunConfig config;
  config.command = RunConfig::Command::Analyze;

  config.ring_text = "Z12";
  CHECK(run_analyze(config, out, err) == kExitOk);

  config.ring_text = "Z9";
  CHECK(run_analyze(config, out, err) == kExitMismatch);

  config.ring_text = "Z1";
  CHECK(run_analyze(config, out, err) == kExitUsage);
  CHECK(err.str().find("modulus") != std::string::npos);
}

TEST_CASE("girth serializes as the string inf") {
  TempFile json_file("nilgraph_test_z15.json");
  RunConfig config;
  config.command = RunConfig::Command::Analyze;
  config.ring_text = "Z15";
  config.json_path = json_file.path.string();
  std::ostringstream out, err;
  run_analyze(config, out, err);
  const json doc = json::parse(json_file.read());
  CHECK(doc["invariants"]["girth"] == "inf");
}

TEST_CASE("sweep produces the documented CSV, deterministically") {
  TempFile csv1("nilgraph_test_sweep1.csv");
  TempFile csv2("nilgraph_test_sweep2.csv");
  RunConfig config;
  config.command = RunConfig::Command::Sweep;
  config.zn = true;
  config.max = 100;
  config.csv_path = csv1.path.string();
  config.workers = 1;
  std::ostringstream out1, err1;
  const int code = run_sweep(config, out1, err1);
  CHECK(code == kExitMismatch);  // dominating mismatches are expected
  CHECK(out1.str().find("99 rings processed") != std::string::npos);

  config.csv_path = csv2.path.string();
  config.workers = 3;
  std::ostringstream out2, err2;
  run_sweep(config, out2, err2);

  const std::string body1 = csv1.read(), body2 = csv2.read();
  CHECK(!body1.empty());
  CHECK(body1 == body2);
  CHECK(body1.rfind("ring,order,nil_size,theorem,predicted,computed,status,note", 0) == 0);

  std::size_t lines = 0;
  for (char c : body1) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 1 + 99 * 18);

  // GirthZn column carries zero mismatches
  std::istringstream stream(body1);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.find(",GirthZn,") != std::string::npos) {
      CHECK(line.find(",Mismatch,") == std::string::npos);
    }
  }
}

TEST_CASE("sweep over products includes the canonical specs") {
  TempFile csv("nilgraph_test_products.csv");
  RunConfig config;
  config.command = RunConfig::Command::Sweep;
  config.products = true;
  config.max = 50;
  config.csv_path = csv.path.string();
  std::ostringstream out, err;
  run_sweep(config, out, err);
  const std::string body = csv.read();
  CHECK(body.find("Z2xZ25,") != std::string::npos);
  CHECK(body.find("Z3xZ9,") != std::string::npos);
}

TEST_CASE("sweep usage errors") {
  std::ostringstream out, err;
  RunConfig config;
  config.command = RunConfig::Command::Sweep;
  config.max = 100;
  CHECK(run_sweep(config, out, err) == kExitUsage);  // neither --zn nor --products
  config.zn = true;
  config.max = 1;
  CHECK(run_sweep(config, out, err) == kExitUsage);
}

TEST_CASE("NILGRAPH_WORKERS overrides the requested worker count") {
  setenv("NILGRAPH_WORKERS", "2", 1);
  CHECK(resolve_worker_count(7) == 2);
  unsetenv("NILGRAPH_WORKERS");
  CHECK(resolve_worker_count(7) == 7);
  CHECK(resolve_worker_count(0) >= 1);
}

TEST_CASE("verify runs the reduced acceptance suite") {
  TempFile json_file("nilgraph_test_verify.json");
  RunConfig config;
  config.command = RunConfig::Command::Verify;
  config.max = 20;
  config.json_path = json_file.path.string();
  std::ostringstream out, err;
  const int code = run_verify(config, out, err);
  CHECK(code == kExitOk);
  const json doc = json::parse(json_file.read());
  CHECK(doc["pass"] == true);
  CHECK(doc["criteria"].size() == 10);

  config.max = 1;
  std::ostringstream out2, err2;
  CHECK(run_verify(config, out2, err2) == kExitUsage);
}
