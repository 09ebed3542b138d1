#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "braidgamma/choreo_io.hpp"
#include "braidgamma/geom2d.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" BRAIDGAMMA_CLI "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string line_after(const std::string& text, const std::string& key) {
  const auto at = text.find(key);
  if (at == std::string::npos) return "<missing>";
  const auto start = at + key.size();
  return text.substr(start, text.find('\n', start) - start);
}

std::string strip_slots(std::string s, const std::string& slot) {
  for (auto at = s.find(slot); at != std::string::npos; at = s.find(slot)) s.erase(at, slot.size());
  return s;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("map small n gives the empty word") {
  const Run r = run("map -n 3 --target g \"b(1,2)\"");
  CHECK(r.status == 0);
  CHECK(line_after(r.out, "reduced: ") == "(empty)");
  CHECK(line_after(r.out, "invariant: ") == "0");
}

TEST_CASE("frozen image of b(1,3) at n = 5") {
  const Run r = run("map -n 5 --target gamma \"b(1,3)\"");
  REQUIRE(r.status == 0);
  CHECK(line_after(r.out, "reduced: ") ==
        "d(1,2,4,5) d(1,2,3,4) d(1,2,3,5) d(1,2,3,4) d(1,3,4,5) d(1,2,4,3) d(1,2,5,3) d(1,2,4,3) d(1,3,5,4) d(1,2,5,4)");
  CHECK(line_after(r.out, "invariant: ") == "d(1,3,5,4) + d(1,4,3,5) + d(2,3,4,5) + d(2,4,3,5)");
}

TEST_CASE("one factor matches the Gamma target") {
  for (const char* b : {"b(1,3)", "b(2,5)^-1 b(1,4)", "b(3,4)^2"}) {
    const Run plain = run(std::string("map -n 5 --target gamma \"") + b + "\"");
    const Run one = run(std::string("map -n 5 --target gammar --r 1 \"") + b + "\"");
    REQUIRE(plain.status == 0);
    REQUIRE(one.status == 0);
    CHECK(strip_slots(line_after(one.out, "word: "), "[0]") == line_after(plain.out, "word: "));
  }
}

TEST_CASE("map JSON and compare") {
  const Run r = run("--format json map -n 5 --compare \"b(1,2)\"");
  REQUIRE(r.status == 0);
  const auto j = braidgamma::io::Json::parse(r.out);
  CHECK(j["target"] == "gamma");
  CHECK(j["compare"].contains("invariants_agree"));
}

TEST_CASE("relation check exit codes") {
  CHECK(run("check -n 5").status == 0);
  CHECK(run("check -n 5 --target gammar --r 2 --four-term both").status == 0);
  const Run vacuous = run("check -n 3");
  CHECK(vacuous.status == 0);
  CHECK(vacuous.out.find("0/0") == std::string::npos);
}

TEST_CASE("invariant command") {
  const Run r = run("invariant -n 5 \"d(1,2,3,4) d(1,2,3,4)\"");
  CHECK(r.status == 0);
  CHECK(line_after(r.out, "invariant: ") == "0");
  const Run eq = run("invariant -n 5 \"d(1,2,3,4) d(1,3,2,4)\" \"d(1,3,2,4) d(1,2,3,4)\"");
  CHECK(line_after(eq.out, "equal: ") == "yes");
}

TEST_CASE("trace and render") {
  const auto path = write_temp("braidgamma_cli_choreo.json", braidgamma::io::to_json(braidgamma::geom2d::choreo_b(4, 1, 2)).dump());
  const Run t = run("trace \"" + path.string() + "\"");
  CHECK(t.status == 0);
  CHECK(line_after(t.out, "word: ") == "d(1,2,4,3) d(1,2,3,4)");

  const Run a = run("render \"" + path.string() + "\" --t 1/3 --circle 1,2,3");
  const Run b = run("render \"" + path.string() + "\" --t 1/3 --circle 1,2,3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);
  CHECK(a.out.find("id=\"circle\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("errors and caps") {
  CHECK(run("map -n 4 \"b(1;2)\"").status == 2);
  CHECK(run("map -n 4 \"b(1,5)\"").status == 2);
  CHECK(run("map -n 12 \"b(1,2)\"").status == 2);
  CHECK(run("map -n 12 \"b(1,2)\"", "BRAIDGAMMA_MAX_N=12").status == 0);
  CHECK(run("map -n 6 \"b(1,2)\"", "BRAIDGAMMA_MAX_N=5").status == 2);
  CHECK(run("map -n 4 --target gamma --r 2 \"b(1,2)\"").status == 2);
}

TEST_CASE("canonical printing") {
  CHECK(line_after(run("canon -n 4 \"  b(1,3)\tb(2,4)^-1 \"").out, "") == "b(1,3) b(2,4)^-1");
  CHECK(line_after(run("canon \"  d(2,3,4,1)\t d(1,3,2,4) \"").out, "") == "d(1,2,3,4) d(1,3,2,4)");
  CHECK(line_after(run("canon \"a{4,3,2,1}\"").out, "") == "a{1,2,3,4}");
  CHECK(run("canon \"d(1,2,3,4) a{1,2,3,4}\"").status == 2);
}
