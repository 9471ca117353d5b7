#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct cli_result {
  int exit_code;
  std::string out;
};

cli_result run_cli(const std::string& args) {
  const std::string cmd = std::string(GAMMA0FD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("genus command") {
  const cli_result r = run_cli("genus 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"n\":12,\"genus\":0,\"faces\":24,\"edges\":48,\"vertices\":26,\"schema\":1}\n");
}

TEST_CASE("wtable command carries the level-6 entry") {
  const cli_result r = run_cli("wtable 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{\"j\":5,\"W\":4,\"M\":3}") != std::string::npos);
}

TEST_CASE("output is byte-stable across runs") {
  for (const char* cmd : {"cosets 12", "cusps 12", "arcs 12", "gluing 12", "render 12"}) {
    const cli_result a = run_cli(cmd);
    const cli_result b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    if (std::string(cmd) != "render 12")
      CHECK(nlohmann::ordered_json::parse(a.out).dump() + "\n" == a.out);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("nonsense 12").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("genus").exit_code == 2);
  CHECK(run_cli("genus 1").exit_code == 2);
  CHECK(run_cli("wtable 9999999999").exit_code == 2);
}

TEST_CASE("range sweeps stream one document per level") {
  const cli_result r = run_cli("genus --range 2..5");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 4);
  CHECK(r.out.find("{\"n\":2,") != std::string::npos);
  CHECK(r.out.find("{\"n\":5,") != std::string::npos);
  CHECK(run_cli("render --range 2..5").exit_code == 2);
}

TEST_CASE("verify streams one line per level and exits 0") {
  const cli_result r = run_cli("verify 2..12");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 11);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
  CHECK(r.out.find("\"ok\":false") == std::string::npos);
  // identical output with a worker pool
  const cli_result parallel = run_cli("verify 2..12 --jobs 3");
  CHECK(parallel.out == r.out);
}

TEST_CASE("render respects --out") {
  const std::string path = "/tmp/gamma0fd_render_test.svg";
  std::remove(path.c_str());
  const cli_result r = run_cli("render 2 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), got);
  fclose(f);
  std::remove(path.c_str());
  CHECK(content.rfind("<svg", 0) == 0);
}
