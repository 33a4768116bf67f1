#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// Drives the installed binary end to end; the path arrives via BANPAR_BIN.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("BANPAR_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "BANPAR_BIN must point at the CLI binary");
  const std::string command = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.stdout_text.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("cli census prints the csv table") {
  const RunResult r = run("census --n 3 --n 5 --threads 2");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "n,cycles,count\n3,1,13\n5,1,441\n5,2,30\n");
}

TEST_CASE("cli census json carries bins and totals") {
  const RunResult r = run("census --n 4 --format json --threads 1");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"bins\":{\"1\":67}") != std::string::npos);
  CHECK(r.stdout_text.find("\"total\":67") != std::string::npos);
}

TEST_CASE("cli enumerate lists canonical schedules") {
  const RunResult all = run("enumerate --n 3");
  CHECK(all.exit_code == 0);
  CHECK(count_lines(all.stdout_text) == 13);
  CHECK(all.stdout_text.find("{(0,1,2)}\n") == 0);
  CHECK(all.stdout_text.find("{(0),(1),(2)}\n") != std::string::npos);

  const RunResult limited = run("enumerate --n 5 --limit 4");
  CHECK(count_lines(limited.stdout_text) == 4);
}

TEST_CASE("cli parallelize prints rules and writes dot") {
  const RunResult r =
      run("parallelize --network pos-cycle:5 --schedule \"{(0,1),(2,3,4)}\" --dot cli_test.dot");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "0: x1\n1: x1\n2: x4\n3: x4\n4: x4\n");
  std::FILE* dot = std::fopen("cli_test.dot", "r");
  REQUIRE(dot != nullptr);
  std::fclose(dot);
  std::remove("cli_test.dot");

  const RunResult traced =
      run("parallelize --network pos-cycle:5 --schedule \"{(0,1),(2,3,4)}\" --trace");
  CHECK(traced.exit_code == 0);
  CHECK(traced.stdout_text.find("substep 0\n  0: x0\n") != std::string::npos);
  CHECK(traced.stdout_text.find("substep 6\n  0: x1\n  1: x1\n  2: x4\n") != std::string::npos);
}

TEST_CASE("cli fixed-points in both methods") {
  const RunResult unary =
      run("fixed-points --network pos-cycle:5 --schedule \"{(0,1),(2,3,4)}\" --method unary "
          "--format json");
  CHECK(unary.exit_code == 0);
  CHECK(unary.stdout_text == "{\"c\":2,\"count\":4}\n");

  const RunResult brute =
      run("fixed-points --network pos-cycle:5 --schedule \"{(0,1),(2,3,4)}\" --method brute "
          "--format json");
  CHECK(brute.exit_code == 0);
  CHECK(brute.stdout_text ==
        "{\"count\":4,\"fixed_points\":[\"00000\",\"11000\",\"00111\",\"11111\"]}\n");

  const RunResult text =
      run("fixed-points --network neg-cycle:3 --schedule \"(0),(1),(2)\" --method brute");
  CHECK(text.exit_code == 0);
  CHECK(text.stdout_text == "count: 0\n");
}

TEST_CASE("cli family subcommands") {
  CHECK(run("family mu-odd --k 2").stdout_text == "{(0,1),(2,3,4)}\n");
  CHECK(run("family mu-even --k 4").stdout_text == "{(0),(1,2,3),(4,7,5,6)}\n");
  CHECK(run("family mu-hat --n 2").stdout_text == "{(0),(1),(2,3,4,5)}\n");
  const RunResult hhat = run("family hhat --n 1 --variant positive");
  CHECK(hhat.exit_code == 0);
  CHECK(hhat.stdout_text ==
        "{\"n\":2,\"rules\":[{\"inputs\":[0],\"table\":[0,1]},{\"inputs\":[],\"table\":[0]}]}\n");
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run("census").exit_code == 2);
  CHECK(run("family mu-odd --k 1").exit_code == 2);
  CHECK(run("fixed-points --network pos-cycle:3 --schedule \"(0),(1)\" --method brute").exit_code ==
        2);
  CHECK(run("parallelize --network no-such.json --schedule \"(0)\"").exit_code == 2);
  CHECK(run("census --n 3 --format yaml").exit_code == 2);
}
