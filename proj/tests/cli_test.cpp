#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string("KNOTRES_DATA='") + KNOTRES_DATA_DIR + "' '" +
                    KNOTRES_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("fp on bundled diagrams") {
  auto r = run("fp --input 8a2A.pd");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"fp\":\"8/3\"}\n");
  auto t = run("fp --input 3a1.pd");
  CHECK(t.out == "{\"fp\":\"1\"}\n");
}

TEST_CASE("fp via inline edge list") {
  auto r = run(R"(fp --edge-list '{"n":3,"edges":[[0,1,1],[1,2,1],[2,0,1]]}')");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"fp\":\"1\"}\n");
}

TEST_CASE("diagram fp agrees with its exported edge list") {
  auto tait = run("tait --input 8a2B.pd");
  REQUIRE(tait.status == 0);
  auto direct = run("fp --input 8a2B.pd");
  auto via_edges = run("fp --edge-list '" + tait.out.substr(0, tait.out.size() - 1) + "'");
  CHECK(via_edges.status == 0);
  CHECK(via_edges.out == direct.out);
}

TEST_CASE("validate failure modes") {
  auto r = run("validate --input curl.pd");
  CHECK(r.status == 1);
  CHECK(r.out == "{\"error\":\"NotReduced\"}\n");
  auto ok = run("validate --input 5a2.pd");
  CHECK(ok.status == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("fp").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("fp --bogus-flag 1 --pd 'X(1,1,2,2)'").status == 2);
}

TEST_CASE("domain errors exit 1 with an error object") {
  auto r = run("fp --pd 'garbage'");
  CHECK(r.status == 1);
  CHECK(r.out.find("\"error\":\"MalformedSyntax\"") != std::string::npos);
  auto missing = run("fp --input does-not-exist.pd");
  CHECK(missing.status == 1);
  CHECK(missing.out.find("FileNotFound") != std::string::npos);
}

TEST_CASE("report output is byte-deterministic") {
  auto a = run("report --input 8a2A.pd");
  auto b = run("report --input 8a2A.pd");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"fp\":\"8/3\"") != std::string::npos);
}

TEST_CASE("alexander and charpoly subcommands") {
  auto alex = run("alexander --input 3a1.pd");
  CHECK(alex.out.find("[\"1\",\"-1\",\"1\"]") != std::string::npos);
  auto alex2 = run("alexander --input 8a2A.pd --delete-vertex 3");
  auto alex0 = run("alexander --input 8a2A.pd");
  CHECK(alex2.out == alex0.out);
  auto chi = run("charpoly --input 8a2B.pd");
  CHECK(chi.out.find("-31") != std::string::npos);
}

TEST_CASE("flype pipeline through the CLI") {
  auto list = run("flype-list --input 8a2A.pd");
  CHECK(list.status == 0);
  CHECK(list.out.find("\"pivot\":2") != std::string::npos);
  auto applied = run("flype-apply --input 8a2A.pd --tangle 8a2A.tangle.json");
  CHECK(applied.status == 0);
  auto orbit = run("orbit --input 8a2A.pd --depth 2");
  CHECK(orbit.status == 0);
  CHECK(orbit.out.find("\"fp_values\":[\"8/3\"]") != std::string::npos);
}

TEST_CASE("batch groups by FP like the reference table") {
  auto r = run("batch --manifest manifest.txt --output table");
  CHECK(r.status == 0);
  CHECK(r.out.find("1 : 3a1 5a2 7a7 9a41") != std::string::npos);
  CHECK(r.out.find("8/3 : 8a2A 8a2B") != std::string::npos);
}
