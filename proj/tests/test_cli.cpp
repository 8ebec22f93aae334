#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

const std::string kData = COBEH_DATA_DIR;
const std::string kExample = kData + "/worked-example.json";

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  FILE* pipe = popen((std::string(COBEH_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/cobeh_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("equiv verdicts and exit codes") {
  Run same = cli("equiv " + kExample + " --pair \"{x,y}\" \"{y}\"");
  CHECK(same.code == 0);
  CHECK(Json::parse(same.out)["equivalent"] == true);

  Run differ = cli("equiv " + kExample + " --pair \"{x}\" \"{y}\"");
  CHECK(differ.code == 1);
  CHECK(Json::parse(differ.out)["witness"] == "b");

  Run all = cli("equiv " + kExample + " --all");
  CHECK(all.code == 0);
  CHECK(Json::parse(all.out)["classes"].size() == 6);

  Run moore = cli("equiv " + kData + "/branching-lts.json --semantics failure --pair p0 q0");
  CHECK(moore.code == 1);
  CHECK(Json::parse(moore.out)["assumptions"].size() == 1);

  const std::string lwa = kData + "/splitting-lwa.json";
  Run vectors = cli("equiv " + lwa + " --pair \"[1, 0, 0]\" \"[0, 1/2, 1/2]\"");
  CHECK(vectors.code == 1);
  CHECK(Json::parse(vectors.out)["witness"] == "ε");
  CHECK(cli("equiv " + lwa + " --pair y \"[0, 1/2, 1/2]\"").code == 0);
  CHECK(cli("equiv " + lwa + " --pair \"[1, 0]\" y").code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli("equiv /nonexistent.json --all").code == 2);
  CHECK(cli("equiv " + kExample + " --pair \"{w}\" \"{x}\"").code == 2);
  CHECK(cli("equiv " + kExample + " --kind lwa").code == 2);
  CHECK(cli("frobnicate").code == 2);
  const std::string broken = write_temp("broken.json", R"({"kind": "nda", "states": ["x"]})");
  CHECK(cli("equiv " + broken).code == 2);
  const std::string big = write_temp(
      "big.json",
      R"({"kind": "nda", "states": ["a","b","c","d","e","f","g"], "alphabet": ["t"], "transitions": [], "accepting": []})");
  CHECK(cli("quotient " + big).code == 2);
}

TEST_CASE("quotient of the worked example") {
  Run q = cli("quotient " + kExample);
  CHECK(q.code == 0);
  const Json j = Json::parse(q.out);
  CHECK(j["states"].size() == 6);
  CHECK(j["homomorphism"] == true);
  CHECK(j["kappa_image"]["{x,y}"] == j["kappa_image"]["{y}"]);

  Run id = cli("quotient " + kExample + " --identity");
  CHECK(Json::parse(id.out)["states"].size() == 8);

  const std::string silent = write_temp("silent.json", R"({"kind": "nda", "states": ["x","y","z"], "alphabet": ["a","b"],
    "transitions": [{"from":"x","action":"a","to":"z"},{"from":"y","action":"a","to":"z"},{"from":"y","action":"b","to":"z"}],
    "accepting": []})");
  Run mutated = cli("quotient " + silent);
  CHECK(mutated.code == 0);
  const Json m = Json::parse(mutated.out);
  CHECK(m["homomorphism"] == true);
  CHECK(m["states"] != j["states"]);
}

TEST_CASE("check, eval and determinize") {
  Run laws = cli("check --random nda --laws --trials 20 --seed 7");
  CHECK(laws.code == 0);
  CHECK(Json::parse(laws.out)["all_passed"] == true);

  Run mutated = cli("check --random cts --laws --trials 20 --seed 7 --mutation box_as_diamond");
  CHECK(mutated.code == 1);

  Run adequacy = cli("check " + kExample + " --adequacy");
  CHECK(adequacy.code == 0);
  const Json a = Json::parse(adequacy.out)["adequacy"];
  CHECK(a["adequate"] == true);
  CHECK(a["expressive"] == true);

  Run eval = cli("eval " + kExample + " --subset \"{y}\" --formula \"[b]↓\"");
  CHECK(eval.code == 0);
  CHECK(Json::parse(eval.out)["value"] == true);

  Run theory = cli("eval " + kExample + " --subset x --theory --maxlen 1");
  CHECK(Json::parse(theory.out)["theory"].size() == 3);

  Run back = cli("determinize " + kExample + " --backward");
  const Json b = Json::parse(back.out);
  CHECK(b["states"].size() == 8);
  CHECK(b["datum"] == "{z}");

  Run text = cli("equiv " + kExample + " --pair x y --text");
  CHECK(text.out.find("witness: b") != std::string::npos);
}
