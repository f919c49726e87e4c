// End-to-end checks of the command line tool: byte-exact pins for the
// documented outputs, exit-code contract, format schemas, determinism.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

using json = nlohmann::json;

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {};
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void expect(bool cond, const std::string& what) {
  std::cout << (cond ? "[PASS] " : "[FAIL] ") << what << "\n";
  if (!cond) ++g_failures;
}

void expect_out(const std::string& args, const std::string& want) {
  RunResult r = run(args);
  bool ok = r.code == 0 && r.out == want;
  expect(ok, args);
  if (!ok) {
    std::cerr << "  exit " << r.code << "\n  got:  " << r.out << "  want: " << want;
  }
}

void expect_code(const std::string& args, int want) {
  RunResult r = run(args);
  expect(r.code == want, args + " -> exit " + std::to_string(want));
  if (r.code != want) std::cerr << "  exit " << r.code << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_smoke <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  expect_out("enumerate m2 3 --count --by-height", "2 3 3 1\n");
  expect_out("enumerate m1 0 --count", "1\n");
  expect_out("enumerate m2r --antidiagonal 4 --count", "9\n");
  expect_out("enumerate m2 3 --list --k 0", "H U D\nU U D2\n");

  const std::string m1_block =
      "1 0 0 0 0 0 0 0 0\n"
      "1 1 0 0 0 0 0 0 0\n"
      "2 2 1 0 0 0 0 0 0\n"
      "5 5 3 1 0 0 0 0 0\n"
      "13 14 9 4 1 0 0 0 0\n"
      "36 40 28 14 5 1 0 0 0\n"
      "105 118 87 48 20 6 1 0 0\n"
      "317 359 273 161 75 27 7 1 0\n"
      "982 1118 869 536 270 110 35 8 1\n";
  expect_out("triangle m1 9 9", m1_block);

  {
    RunResult closed = run("triangle m2 9 9 --route closed");
    RunResult riordan = run("triangle m2 9 9 --route riordan");
    expect(closed.code == 0 && riordan.code == 0 && closed.out == riordan.out,
           "triangle m2: riordan route equals closed route");
  }

  expect_out("series m1 --which total@u=1 --order 9",
             "1 2 5 14 41 124 385 1220 3929 12822\n");
  expect_out("series m1r --which antidiag --order 9",
             "1 1 3 9 25 73 223 697 2217 7161\n");
  expect_out("series m2 --which total@u=0 --order 9", "1 1 1 2 4 9 21 51 127 323\n");
  expect_out("series motzkin --order 5 --format csv",
             "n,value\n0,1\n1,1\n2,2\n3,4\n4,9\n5,21\n");

  expect_out("formula m2-expr3 7 3", "59\n");
  expect_out("formula m2r-rect 2 1", "3\n");
  expect_out("riordan term m2 4 2", "6\n");
  expect_out("riordan rectify m2r --rows 5 --cols 5",
             "1 1 1 1 1\n1 1 1 1 1\n2 3 4 5 6\n4 6 8 10 12\n9 15 22 30 39\n");

  // exit-code contract: 2 for usage and unavailable constructions
  expect_code("triangle m1r 5 5 --route riordan", 2);
  expect_code("triangle m2r 5 5 --route recur", 2);
  expect_code("series m1r --which total@u=1 --order 5", 2);
  expect_code("enumerate m1r 3 --count", 2);
  expect_code("verify --suite nope", 2);
  expect_code("triangle mx 5 5", 2);
  expect_code("enumerate m2 3 --list --k 0 --format csv", 2);
  expect_code("formula m1-sum 3", 2);

  // the full battery passes and exits 0
  expect_code("verify --suite all --order 16 --width 16", 0);

  {
    RunResult r = run("triangle m2 4 4 --format json");
    bool ok = r.code == 0;
    if (ok) {
      auto doc = json::parse(r.out, nullptr, false);
      ok = !doc.is_discarded() && doc["family"] == "m2" && doc["route"] == "closed" &&
           doc["rows"] == 4 && doc["cols"] == 4 && doc["data"].size() == 4 &&
           doc["data"][3][1] == 3;
    }
    expect(ok, "triangle json schema");
  }

  {
    RunResult r = run("series m2 --which total@u=0 --order 9 --format json");
    bool ok = r.code == 0;
    if (ok) {
      auto doc = json::parse(r.out, nullptr, false);
      ok = !doc.is_discarded() && doc["name"].is_string() && doc["terms"].size() == 10 &&
           doc["terms"][4] == 4;
    }
    expect(ok, "sequence json schema");
  }

  {
    RunResult r = run("enumerate m2 3 --list --k 0 --format json");
    bool ok = r.code == 0;
    if (ok) {
      auto doc = json::parse(r.out, nullptr, false);
      ok = !doc.is_discarded() && doc["family"] == "m2" &&
           doc["paths"] == json::array({"H U D", "U U D2"});
    }
    expect(ok, "path listing json schema");
  }

  {
    RunResult r = run("verify --suite sequences --format json");
    bool ok = r.code == 0;
    if (ok) {
      auto doc = json::parse(r.out, nullptr, false);
      ok = !doc.is_discarded() && doc.is_array() && doc.size() == 1 &&
           doc[0]["suite"] == "sequences" && !doc[0]["checks"].empty();
      if (ok)
        for (const auto& c : doc[0]["checks"])
          ok = ok && c.contains("name") && c["status"] == "pass";
    }
    expect(ok, "report json schema");
  }

  {
    RunResult r = run("triangle m2 3 3 --format csv");
    bool ok = r.code == 0 && r.out.rfind("n,k,count\n", 0) == 0 &&
              r.out.find("\n2,1,2\n") != std::string::npos;
    expect(ok, "triangle csv header and cells");
  }

  {
    RunResult r = run("formula --manifest");
    bool ok = r.code == 0;
    if (ok) {
      auto doc = json::parse(r.out, nullptr, false);
      ok = !doc.is_discarded() && doc["formulas"].size() == 7;
    }
    expect(ok, "formula manifest parses");
  }

  {
    RunResult a = run("triangle m1 9 9");
    RunResult b = run("triangle m1 9 9");
    expect(a.code == 0 && a.out == b.out, "triangle output is deterministic");
    RunResult c = run("verify --suite riordan --order 10 --width 10");
    RunResult d = run("verify --suite riordan --order 10 --width 10");
    expect(c.code == 0 && c.out == d.out, "verify output is deterministic");
  }

  if (g_failures) {
    std::cerr << g_failures << " smoke check(s) failed\n";
    return 1;
  }
  return 0;
}
