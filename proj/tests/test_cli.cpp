#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MACWEYL_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("byte-identical output across runs") {
    for (const char* args :
         {"E --type A2 --lambda=-1,-1 --sigma s1 --mode v0 --out json",
          "E --type A1 --lambda=-2 --mode generic --out json",
          "walks --type A1 --lambda=-2 --sigma s1 --out json",
          "qbg --type A2 --out dot",
          "whittaker --type A1 --sigma id --N 4 --q-order 4 --out json",
          "weyl-char --type A2 --sigma s1s2 --lambda=-1,-1 --out json"}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("golden: E at v=0 for A1 is X^-1 + X^1") {
    auto r = run("E --type A1 --lambda=-1 --sigma id --mode v0 --out json");
    CHECK(r.code == 0);
    const char* expect = R"JSON({
  "lambda": [
    -1
  ],
  "mode": "v0",
  "sigma": "id",
  "type": "A1(u)",
  "value": [
    {
      "den": [
        [
          1,
          0,
          0
        ]
      ],
      "num": [
        [
          1,
          0,
          0
        ]
      ],
      "weight": [
        -1
      ]
    },
    {
      "den": [
        [
          1,
          0,
          0
        ]
      ],
      "num": [
        [
          1,
          0,
          0
        ]
      ],
      "weight": [
        1
      ]
    }
  ]
}
)JSON";
    CHECK(r.out == expect);
}

TEST_CASE("golden: qbg dot output for A1") {
    auto r = run("qbg --type A1 --out dot");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "digraph QBG {\n"
          "  \"id\";\n"
          "  \"s1\";\n"
          "  \"id\" -> \"s1\" [label=\"(1)\"];\n"
          "  \"s1\" -> \"id\" [label=\"(1)\", style=dashed];\n"
          "}\n");
}

TEST_CASE("walk dump format") {
    auto r = run("walks --type A1 --lambda=-1 --out json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"J\"") != std::string::npos);
    CHECK(r.out.find("\"qwt_deg\"") != std::string::npos);
    CHECK(r.out.find("pi:1/s1;letters:[0]") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("E --type B9 --lambda=-1").code == 2);          // unsupported type
    CHECK(run("E --type A2 --lambda=-1").code == 2);          // wrong arity
    CHECK(run("E --lambda=-1 --mode bogus").code == 2);       // bad mode
    CHECK(run("nonsense").code == 2);                         // unknown subcommand
    CHECK(run("verify --suite rr --M 4 --order 8").code == 0);
    CHECK(run("verify --suite bogus").code == 2);
    CHECK(run("check-eigen --type A1 --lambda=-1 --mu=1").code == 0);
    CHECK(run("weyl-char --type C2 --lambda=-1,0").code == 2);  // out of Weyl-module scope
}

TEST_CASE("verify suite output shape") {
    auto r = run("verify --suite filtration");
    CHECK(r.code == 0);
    CHECK(r.out.find("filtration-counting: PASS") != std::string::npos);
}
