#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  Run r;
  const std::string cmd = std::string("'") + MF_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "test_cli_" + name + ".json";
  std::ofstream(path) << body;
  return path;
}

std::string data(const std::string& name) { return std::string("'") + MF_DATA_DIR + "/" + name + "'"; }

}  // namespace

TEST_CASE("successful runs print JSON and exit 0") {
  const auto r = run("strength " + data("bowtie.json"));
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["strength"] == "1/1");
  CHECK(run("--format text arboricity " + data("k3.json")).status == 0);
  CHECK(run("verify " + data("bowtie.json") + " --costs " + data("costs/bowtie.json")).status == 0);
}

TEST_CASE("input errors exit 2 with a structured message") {
  const auto broken = write_temp("broken", "{\"vertices\": [");
  const auto r = run("strength " + broken, true);
  CHECK(r.status == 2);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["error"]["kind"] == "input");

  const auto split = write_temp("split", R"({"vertices":["a","b","c","d"],"edges":[{"id":"x","u":"a","v":"b"},{"id":"y","u":"c","v":"d"}]})");
  CHECK(run("arboricity " + split).status == 2);
  const auto zero = write_temp("zero", R"({"vertices":["a","b"],"edges":[{"id":"x","u":"a","v":"b","weight":0}]})");
  CHECK(run("modulus " + zero).status == 2);
  CHECK(run("strength /nonexistent.json").status == 2);
  CHECK(run("reinforce " + data("k3.json") + " --costs " + zero).status == 2);
  for (const auto* p : {broken.c_str(), split.c_str(), zero.c_str()}) std::remove(p);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("nonsense " + data("k3.json")).status == 2);
  CHECK(run("strength " + data("k3.json") + " --format xml").status == 2);
}
