#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PERMLAB_CLI_PATH
#error "PERMLAB_CLI_PATH must name the permlab executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args` (already shell-quoted); stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string("'") + PERMLAB_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("stats") {
  const auto r = cli("stats '3 1 2'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"permutation":"3 1 2","fp":0,"exc":1,"crs":1,"nes":0,"inv":2,"maj":1,)"
        R"("arcs":[{"i":2,"j":3,"kind":"lower-crossing"}]})"
        "\n");
  const auto j = json_of(cli("stats '4 6 2 9 8 1 7 10 3 5'"));
  CHECK(j["nes"] == 4);
  CHECK(j["arcs"].size() == 12);
  CHECK(cli("--format csv stats '1 2 3'").out == "fp,exc,crs,nes,inv,maj\n3,0,0,0,0,0\n");
  CHECK(json_of(cli("stats '3 2 1'"))["nes"] == 1);
}

TEST_CASE("apply") {
  CHECK(json_of(cli("apply theta '4 1 6 2 7 3 5'"))["image"] == "7 6 5 2 1 3 4");
  CHECK(json_of(cli("apply theta-inv '7 6 5 2 1 3 4'"))["image"] == "4 1 6 2 7 3 5");
  CHECK(json_of(cli("apply gamma '4 1 6 2 7 3 5'"))["image"] == "6 5 7 3 2 1 4");
  CHECK(json_of(cli("apply rci '4 1 6 2 7 3 5'"))["image"] == "3 5 1 7 2 4 6");
  CHECK(json_of(cli("apply theta '3 5 1 7 2 4 6'"))["image"] == "6 5 7 3 2 1 4");
  CHECK(json_of(cli("apply psi '2 4 1 3 5 8 6 7'"))["image"] == "ududuuuddudduudd");
  CHECK(json_of(cli("apply phi-inv ududuuuddudduudd"))["image"] == "7 8 5 3 4 6 2 1");

  const auto t = json_of(cli("apply theta '4 1 6 2 7 3 5' --trace"));
  REQUIRE(t["trace"].size() == 7);
  CHECK(t["trace"][0]["insertion"].is_null());
  CHECK(t["trace"][3] == nlohmann::json::parse(
                             R"({"l":4,"reduced_prefix":"3 1 4 2","insertion":[3,1],"image":"4 3 1 2"})"));

  const auto g = json_of(cli("apply gamma '4 1 6 2 7 3 5' --trace"));
  CHECK(g["trace"] == nlohmann::json::parse(R"(["4 1 6 2 7 3 5","6 1 5 2 7 3 4",)"
                                            R"("6 5 2 1 7 3 4","6 5 7 1 3 2 4","6 5 7 3 2 1 4"])"));
  CHECK(cli("--format csv apply theta '2 1' --trace").out ==
        "l,reduced_prefix,position,value,image\n1,1,,,1\n2,2 1,2,1,2 1\n");
}

TEST_CASE("dist") {
  CHECK(cli("--pretty dist --n 4 --avoid 123 --stats crs").out == "7+6x+x²\n");
  CHECK(cli("--pretty dist --n 4 --avoid 321 --stats nes").out == "14\n");
  CHECK(cli("--pretty dist --n 0").out == "1\n");
  CHECK(cli("--pretty dist --n 3 --avoid 321 --stats exc,crs").out == "1+2q+q²+qp\n");
  CHECK(cli("--pretty dist --n 3 --avoid 321 --stats exc,crs --vars crs=t").out ==
        "1+2q+q²+qt\n");
  CHECK(cli("--format csv dist --n 3 --avoid 321 --stats exc,crs").out ==
        "q,p,coeff\n0,0,1\n1,0,2\n2,0,1\n1,1,1\n");
  CHECK(cli("dist --n 4 --avoid 123 --stats crs").out ==
        R"({"n":4,"avoid":["123"],"vars":{"crs":"x"},"poly":{"vars":["x"],"terms":[)"
        R"({"exp":[0],"coeff":7},{"exp":[1],"coeff":6},{"exp":[2],"coeff":1}]},"pretty":"7+6x+x²"})"
        "\n");
  // Sharding is invisible in the output.
  CHECK(cli("--jobs 1 dist --n 7 --stats crs,nes").out ==
        cli("--jobs 4 dist --n 7 --stats crs,nes").out);
}

TEST_CASE("wilf") {
  CHECK(cli("--pretty wilf --n-max 8 --patterns 123,132,213,231,312,321 --stats crs,nes").out ==
        "{123}\n{132,213}\n{231}\n{312}\n{321}\n");
  const auto one = json_of(cli("wilf --n-max 3 --patterns 231 --stats crs"));
  CHECK(one["classes"].size() == 1);
  CHECK(one["n_range"] == nlohmann::json::parse("[1,3]"));
}

TEST_CASE("catalan") {
  CHECK(cli("--pretty catalan --n 2").out == "1+q\n");
  CHECK(cli("--pretty catalan --n 1").out == "1\n");
  for (int n = 0; n <= 10; ++n) {
    const auto rec = json_of(cli("catalan --n " + std::to_string(n)));
    for (const char* mode : {"cfrac", "enumerate"}) {
      const auto other = json_of(cli("catalan --n " + std::to_string(n) + " --mode " + mode));
      CHECK(other["poly"] == rec["poly"]);
    }
  }
}

TEST_CASE("dyck") {
  const auto t = json_of(cli("dyck tunnels ududuuuddudduudd"));
  CHECK(t["lt"] == 4);
  CHECK(t["ct"] == 1);
  CHECK(t["rt"] == 3);
  CHECK(t["tunnels"].size() == 8);
  CHECK(cli("dyck to-perm ududuuuddudduudd").out ==
        R"({"path":"ududuuuddudduudd","permutation":"7 8 5 3 4 6 2 1"})"
        "\n");
  CHECK(json_of(cli("dyck from-perm '2 4 1 3 5 8 6 7'"))["path"] == "ududuuuddudduudd");
  CHECK(json_of(cli("dyck multitunnels ududuuuddudduudd"))["count"] == 3);
}

TEST_CASE("verify") {
  const auto r = cli("verify --n-max 4");
  const auto j = json_of(r);
  CHECK(j["n_max"] == 4);
  std::size_t failed = 0;
  for (const auto& c : j["checks"]) {
    if (!c["passed"].get<bool>()) {
      ++failed;
      CHECK(c["check"] == "irreducible-insertion-delta-values");
    }
  }
  CHECK(failed == 1);
  CHECK(r.code == 1);
  CHECK(cli("verify --n-max 4").out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(cli("--help").code == 0);
  CHECK(cli("stats '1 1'").code == 1);
  CHECK(cli("stats '1 x'").code == 1);
  CHECK(cli("apply theta '3 2 1'").code == 1);
  CHECK(cli("apply theta-inv '1 3 2'").code == 1);
  CHECK(cli("dyck tunnels du").code == 1);
  CHECK(cli("").code == 2);
  CHECK(cli("stats").code == 2);
  CHECK(cli("--bogus stats 1").code == 2);
  CHECK(cli("apply nope 1").code == 2);
  CHECK(cli("apply r '1 2' --trace").code == 2);
  CHECK(cli("dist --n 3 --stats foo").code == 2);
  CHECK(cli("dist --n 3 --stats crs,crs").code == 2);
  CHECK(cli("--format xml stats 1").code == 2);
  CHECK(cli("wilf --n-max 0 --patterns 123 --stats crs").code == 2);
}
