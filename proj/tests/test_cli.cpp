#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "majorlab/json_io.hpp"
#include "schema_check.hpp"

using majorlab::Json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

const std::string& work_dir() {
  static const std::string dir = [] {
    char path[] = "/tmp/majorlab-cli-XXXXXX";
    if (!mkdtemp(path)) throw std::runtime_error("mkdtemp failed");
    return std::string(path);
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MAJORLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string text;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) text.append(buffer, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, text};
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = work_dir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string write_dist(const std::string& name, const std::vector<std::string>& entries) {
  Json j;
  j["dist"] = entries;
  return write_file(name, j.dump());
}

Json load_schema(const std::string& name) {
  const std::string path = std::string(MAJORLAB_SCHEMA_DIR) + "/" + name + ".schema.json";
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing schema file: " << path);
  return Json::parse(in);
}

Json parse_checked(const RunResult& res, const std::string& schema_name) {
  REQUIRE_MESSAGE(!res.output.empty(), "no output captured");
  const Json doc = Json::parse(res.output);
  const auto err = schema_check::validate(doc, load_schema(schema_name));
  CHECK_MESSAGE(!err.has_value(), err.value_or(""));
  return doc;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("majorize decides and honours --strict") {
  const std::string p = write_dist("maj_p.json", {"3/4", "1/4"});
  const std::string q = write_dist("maj_q.json", {"5/8", "3/8"});
  const RunResult yes = run_cli("majorize " + p + " " + q);
  CHECK(yes.exit_code == 0);
  CHECK(parse_checked(yes, "decision")["majorises"] == true);

  const RunResult no = run_cli("majorize " + q + " " + p);
  CHECK(no.exit_code == 0);
  CHECK(parse_checked(no, "decision")["majorises"] == false);

  CHECK(run_cli("majorize " + q + " " + p + " --strict").exit_code == 1);
  CHECK(run_cli("majorize " + p + " " + q + " --strict").exit_code == 0);
}

TEST_CASE("mixing witnesses round-trip through the verifier") {
  const std::string p = write_dist("wit_p.json", {"3/4", "1/4"});
  const std::string q = write_dist("wit_q.json", {"5/8", "3/8"});
  const std::string w = work_dir() + "/wit_w.json";
  const RunResult maj = run_cli("majorize " + p + " " + q + " --witness " + w);
  CHECK(maj.exit_code == 0);
  const Json decision = parse_checked(maj, "decision");
  CHECK(decision["witness_path"] == w);

  const RunResult check = run_cli("witness mixing " + p + " " + q + " " + w);
  CHECK(check.exit_code == 0);
  const Json verdict = parse_checked(check, "witness_check");
  CHECK(verdict["kind"] == "mixing");
  CHECK(verdict["valid"] == true);

  // a wrong certificate is rejected, and --strict turns that into exit 1
  const std::string identity =
      write_file("wit_id.json", R"({"rows": [["1", "0"], ["0", "1"]]})");
  const RunResult wrong = run_cli("witness mixing " + p + " " + q + " " + identity);
  CHECK(wrong.exit_code == 0);
  CHECK(parse_checked(wrong, "witness_check")["valid"] == false);
  CHECK(run_cli("witness --strict mixing " + p + " " + q + " " + identity).exit_code == 1);
}

TEST_CASE("relative order decisions agree with the plain order against uniform") {
  const std::string p = write_dist("rel_p.json", {"1/2", "1/4", "1/4"});
  const std::string q = write_dist("rel_q.json", {"2/5", "2/5", "1/5"});
  const std::string u = write_dist("rel_u.json", {"1/3", "1/3", "1/3"});
  // incomparable pair: both directions false, matching majorize
  CHECK(parse_checked(run_cli("relmaj " + p + " " + u + " " + q + " " + u),
                      "decision")["relatively_majorises"] == false);
  CHECK(parse_checked(run_cli("majorize " + p + " " + q), "decision")["majorises"] == false);
  CHECK(parse_checked(run_cli("relmaj " + p + " " + u + " " + u + " " + u),
                      "decision")["relatively_majorises"] == true);
}

TEST_CASE("channel witnesses round-trip through the verifier") {
  const std::string e1 = write_dist("ch_e1.json", {"1", "0"});
  const std::string u2 = write_dist("ch_u2.json", {"1/2", "1/2"});
  const std::string w = work_dir() + "/ch_w.json";
  const RunResult rel =
      run_cli("relmaj " + e1 + " " + u2 + " " + u2 + " " + u2 + " --witness " + w);
  CHECK(rel.exit_code == 0);
  CHECK(parse_checked(rel, "decision")["witness_path"] == w);

  const RunResult check =
      run_cli("witness channel " + e1 + " " + u2 + " " + u2 + " " + u2 + " " + w);
  CHECK(check.exit_code == 0);
  CHECK(parse_checked(check, "witness_check")["valid"] == true);
}

TEST_CASE("curve vertices in JSON form") {
  const std::string p = write_dist("cur_p.json", {"1/3", "1/4", "1/4", "1/6"});
  const std::string q = write_dist("cur_q.json", {"1/12", "1/6", "1/3", "5/12"});
  const RunResult res = run_cli("lorenz " + p + " " + q);
  CHECK(res.exit_code == 0);
  const Json doc = parse_checked(res, "lorenz");
  const Json expected = Json::array({Json::array({"0", "0"}), Json::array({"1/3", "1/12"}),
                                     Json::array({"7/12", "1/4"}), Json::array({"5/6", "7/12"}),
                                     Json::array({"1", "1"})});
  CHECK(doc["vertices"] == expected);
}

TEST_CASE("curve export as CSV and SVG") {
  const std::string p = write_dist("csv_p.json", {"1/3", "1/4", "1/4", "1/6"});
  const std::string q = write_dist("csv_q.json", {"1/12", "1/6", "1/3", "5/12"});
  const RunResult csv = run_cli("lorenz " + p + " " + q + " --csv -");
  CHECK(csv.exit_code == 0);
  const auto lines = split_lines(csv.output);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "a_exact,b_exact,a_float,b_float");
  CHECK(lines[1].rfind("0,0,", 0) == 0);
  CHECK(lines[2].rfind("1/3,1/12,", 0) == 0);
  CHECK(lines[3].rfind("7/12,1/4,", 0) == 0);
  CHECK(lines[4].rfind("5/6,7/12,", 0) == 0);
  CHECK(lines[5].rfind("1,1,", 0) == 0);

  const RunResult svg = run_cli("lorenz " + p + " " + q + " --svg -");
  CHECK(svg.exit_code == 0);
  CHECK(svg.output.find("<svg") != std::string::npos);
  CHECK(svg.output.find("512") != std::string::npos);
  std::size_t polylines = 0, at = 0;
  while ((at = svg.output.find("<polyline", at)) != std::string::npos) {
    ++polylines;
    ++at;
  }
  CHECK(polylines == 2);
  // CSV and SVG outputs are mutually exclusive
  CHECK(run_cli("lorenz " + p + " " + q + " --csv - --svg -").exit_code == 2);
}

TEST_CASE("embedding summary") {
  const std::string p = write_dist("emb_p.json", {"1/2", "1/2"});
  const std::string q = write_dist("emb_q.json", {"1/3", "2/3"});
  const RunResult res = run_cli("embed " + p + " " + q);
  CHECK(res.exit_code == 0);
  const Json doc = parse_checked(res, "embedding");
  CHECK(doc["dist"] == Json::array({"1/2", "1/4", "1/4"}));
  CHECK(doc["k"] == 3);
  CHECK(doc["block_sizes"] == Json::array({1, 2}));
  CHECK(doc["order"] == Json::array({0, 1}));
}

TEST_CASE("divergence values, including exact infinities") {
  const std::string p = write_dist("div_p.json", {"1/2", "1/2"});
  const std::string q = write_dist("div_q.json", {"1/4", "3/4"});
  const RunResult finite = run_cli("divergence " + p + " " + q + " --alpha 2");
  CHECK(finite.exit_code == 0);
  const Json fdoc = parse_checked(finite, "value");
  CHECK(fdoc["exact_infinite"] == false);
  CHECK(fdoc["value"].get<double>() == doctest::Approx(0.41503749927884381855).epsilon(1e-12));

  const std::string e1 = write_dist("div_e1.json", {"1", "0"});
  const std::string e2 = write_dist("div_e2.json", {"0", "1"});
  const RunResult infinite = run_cli("divergence " + e1 + " " + e2 + " --alpha 0");
  CHECK(infinite.exit_code == 0);
  const Json idoc = parse_checked(infinite, "value");
  CHECK(idoc["exact_infinite"] == true);
  CHECK(idoc["value"].is_null());

  // kernel route agrees with the exact rational value 1/3 for chi2
  const RunResult chi = run_cli("divergence " + p + " " + q + " --f chi2");
  CHECK(chi.exit_code == 0);
  CHECK(parse_checked(chi, "value")["value"].get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("a diverging boundary extension reports its bracket instead of failing") {
  const std::string u2 = write_dist("bd_u2.json", {"1/2", "1/2"});
  const std::string e1 = write_dist("bd_e1.json", {"1", "0"});
  const RunResult res = run_cli("divergence " + u2 + " " + e1 + " --f chi2");
  CHECK(res.exit_code == 0);
  const Json doc = parse_checked(res, "diverged");
  CHECK(doc["diverged"] == true);
  REQUIRE(doc["lower"].is_number());
  CHECK(doc["lower"].get<double>() > 1.0);
}

TEST_CASE("entropy values") {
  const std::string p = write_dist("ent_p.json", {"1/2", "1/4", "1/4"});
  const RunResult res = run_cli("entropy " + p + " --alpha inf");
  CHECK(res.exit_code == 0);
  CHECK(parse_checked(res, "value")["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  const RunResult shannon = run_cli("entropy " + p + " --alpha 1");
  CHECK(parse_checked(shannon, "value")["value"].get<double>() ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("correspondence subcommands evaluate both directions") {
  const std::string p = write_dist("bij_p.json", {"1/2", "1/4", "1/4"});
  const std::string q = write_dist("bij_q.json", {"1/4", "1/4", "1/2"});
  const RunResult ent = run_cli("bijection to-entropy " + p + " --alpha 2");
  CHECK(ent.exit_code == 0);
  CHECK(parse_checked(ent, "value")["value"].get<double>() ==
        doctest::Approx(1.4150374992788438185).epsilon(1e-12));

  const RunResult rel = run_cli("bijection to-relent " + p + " " + q + " --entropy alpha:1");
  CHECK(rel.exit_code == 0);
  // KL(p||q) = (1/2)log2(2) + (1/4)log2(1) + (1/4)log2(1/2) = 1/4
  CHECK(parse_checked(rel, "value")["value"].get<double>() ==
        doctest::Approx(0.25).epsilon(1e-9));

  CHECK(run_cli("bijection to-entropy " + p).exit_code == 2);  // needs a source divergence
  CHECK(run_cli("bijection to-entropy " + p + " --alpha 2 --divergence kl").exit_code == 2);
}

TEST_CASE("strict catalytic order conditions") {
  const std::string p = write_dist("tr_p.json", {"1/2", "1/4", "1/4", "0"});
  const std::string p2 = write_dist("tr_p2.json", {"2/5", "2/5", "1/10", "1/10"});
  const RunResult res = run_cli("trump " + p + " " + p2);
  CHECK(res.exit_code == 0);
  const Json doc = parse_checked(res, "verdict");
  CHECK(doc["verdict"] == "holds");
  CHECK(doc["margin"].get<double>() > 0.0);

  const std::string u2 = write_dist("tr_u2.json", {"1/2", "1/2"});
  const std::string sharp = write_dist("tr_sharp.json", {"3/4", "1/4"});
  const RunResult lost = run_cli("trump " + u2 + " " + sharp);
  CHECK(lost.exit_code == 0);
  const Json ldoc = parse_checked(lost, "verdict");
  CHECK(ldoc["verdict"] == "fails");
  CHECK(ldoc["margin"].get<double>() < 0.0);
  // the worst violating order here is alpha = infinity, serialised as null
  CHECK((ldoc["witness"].is_number() || ldoc["witness"].is_null()));
  CHECK(run_cli("trump " + u2 + " " + sharp + " --strict").exit_code == 1);
}

TEST_CASE("catalyst search returns the smallest certificate") {
  const std::string p = write_dist("cat_p.json", {"1/2", "1/4", "1/4", "0"});
  const std::string p2 = write_dist("cat_p2.json", {"2/5", "2/5", "1/10", "1/10"});
  const std::string u4 = write_dist("cat_u4.json", {"1/4", "1/4", "1/4", "1/4"});
  const RunResult res = run_cli("catalytic " + p + " " + u4 + " " + p2 + " " + u4 +
                                " --search --max-dim 2 --denom 5");
  CHECK(res.exit_code == 0);
  const Json doc = parse_checked(res, "verdict");
  CHECK(doc["verdict"] == "holds");
  REQUIRE(doc.contains("catalyst"));
  REQUIRE(doc["catalyst"].is_object());
  CHECK(doc["catalyst"]["r"] == Json::array({"3/5", "2/5"}));
  CHECK(doc["catalyst"]["t"] == Json::array({"1/2", "1/2"}));

  // a refuted conversion yields a null catalyst
  const std::string sharp = write_dist("cat_sharp.json", {"3/4", "1/4"});
  const std::string u2 = write_dist("cat_u2.json", {"1/2", "1/2"});
  const RunResult none =
      run_cli("catalytic " + u2 + " " + u2 + " " + sharp + " " + u2 + " --search");
  CHECK(none.exit_code == 0);
  const Json ndoc = parse_checked(none, "verdict");
  CHECK(ndoc["verdict"] == "fails");
  CHECK(ndoc["catalyst"].is_null());
}

TEST_CASE("trumping witnesses verify through the dedicated subcommand") {
  const std::string p = write_dist("tw_p.json", {"1/2", "1/4", "1/4", "0"});
  const std::string p2 = write_dist("tw_p2.json", {"2/5", "2/5", "1/10", "1/10"});
  const std::string u4 = write_dist("tw_u4.json", {"1/4", "1/4", "1/4", "1/4"});
  const std::string r = write_dist("tw_r.json", {"3/5", "2/5"});
  const std::string t = write_dist("tw_t.json", {"1/2", "1/2"});
  const RunResult good = run_cli("witness trumping " + p + " " + u4 + " " + p2 + " " + u4 +
                                 " " + r + " " + t);
  CHECK(good.exit_code == 0);
  CHECK(parse_checked(good, "witness_check")["valid"] == true);

  const std::string flat = write_dist("tw_flat.json", {"1/2", "1/2"});
  const RunResult bad = run_cli("witness --strict trumping " + p + " " + u4 + " " + p2 + " " +
                                u4 + " " + flat + " " + t);
  CHECK(bad.exit_code == 1);
}

TEST_CASE("axiom probe report validates and is byte-deterministic") {
  const std::string cmd = "axioms --divergence alpha:2 --samples 40 --seed 7 --denom 360";
  const RunResult first = run_cli(cmd);
  CHECK(first.exit_code == 0);
  const Json doc = parse_checked(first, "axioms_report");
  CHECK(doc["divergence"] == "renyi:2");
  CHECK(doc["seed"] == 7);
  REQUIRE(doc["axioms"].size() == 3);
  for (const Json& axiom : doc["axioms"]) CHECK(axiom["violation_count"] == 0);

  const RunResult second = run_cli(cmd);
  CHECK(second.output == first.output);
}

TEST_CASE("order estimates") {
  const RunResult kl = run_cli("order --divergence kl");
  CHECK(kl.exit_code == 0);
  const Json kdoc = parse_checked(kl, "order");
  CHECK(kdoc["infinite"] == false);
  CHECK(kdoc["order"].get<double>() == doctest::Approx(1.0).epsilon(0.05));

  const RunResult mx = run_cli("order --divergence max");
  CHECK(mx.exit_code == 0);
  const Json mdoc = parse_checked(mx, "order");
  CHECK(mdoc["infinite"] == true);
  CHECK(mdoc["order"].is_null());
}

TEST_CASE("faithfulness reports") {
  const RunResult path = run_cli("faithful --divergence path --samples 30 --seed 17");
  CHECK(path.exit_code == 0);
  const Json pdoc = parse_checked(path, "faithfulness");
  CHECK(pdoc["verdict"] == "not-faithful");
  REQUIRE(pdoc["witness"].is_object());
  CHECK(pdoc["witness"]["p"].is_array());
  CHECK(pdoc["witness"]["value"].get<double>() <= 1e-12);

  const RunResult kl = run_cli("faithful --divergence kl --samples 30 --seed 17");
  CHECK(kl.exit_code == 0);
  const Json kdoc = parse_checked(kl, "faithfulness");
  CHECK(kdoc["verdict"] == "faithful-evidence");
  CHECK(kdoc["witness"].is_null());
}

TEST_CASE("results can be written to a file instead of stdout") {
  const std::string p = write_dist("out_p.json", {"3/4", "1/4"});
  const std::string q = write_dist("out_q.json", {"5/8", "3/8"});
  const std::string target = work_dir() + "/decision.json";
  const RunResult res = run_cli("majorize " + p + " " + q + " --out " + target);
  CHECK(res.exit_code == 0);
  CHECK(res.output.empty());
  std::ifstream in(target);
  REQUIRE(in.good());
  const Json doc = Json::parse(in);
  CHECK(doc["majorises"] == true);
}

TEST_CASE("bad invocations exit with a usage error") {
  const std::string p = write_dist("bad_p.json", {"1/2", "1/2"});
  CHECK(run_cli("majorize /nonexistent.json " + p).exit_code == 2);
  const std::string garbage = write_file("bad.json", "{not json");
  CHECK(run_cli("majorize " + garbage + " " + p).exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("divergence " + p + " " + p + " --alpha nope").exit_code == 2);
  CHECK(run_cli("divergence " + p + " " + p + " --alpha 1 --f tv").exit_code == 2);
  CHECK(run_cli("divergence " + p + " " + p).exit_code == 2);
  CHECK(run_cli("order --divergence nope").exit_code == 2);
  CHECK(run_cli("entropy " + p + " --alpha=-1").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
