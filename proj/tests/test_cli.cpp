#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  const std::string cmd =
      std::string(KUCHECK_BIN) + " " + args + " >cli_stdout.tmp 2>cli_stderr.tmp";
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp("cli_stdout.tmp"),
          slurp("cli_stderr.tmp")};
}

std::string model(const char* name) { return std::string(MODELS_DIR) + "/" + name; }

std::string golden(const char* name) {
  std::string path = std::string(GOLDEN_DIR) + "/" + name;
  REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden file ", path);
  return slurp(path);
}

}  // namespace

TEST_CASE("eval spec examples") {
  auto ua = run("eval -m " + model("w2.model") + " \"U({a})\"");
  CHECK(ua.exit_code == 0);
  CHECK(ua.out == "{a}\n");

  auto kpo = run("eval -m " + model("w2.model") + " \"K'(omega)\"");
  CHECK(kpo.exit_code == 0);
  CHECK(kpo.out == "{}\n");

  auto bad = run("eval -m " + model("w2.model") + " \"U(oops\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("1:7") != std::string::npos);
}

TEST_CASE("eval json record") {
  auto r = run("eval -m " + model("w2.model") + " --format json \"U({a})\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("eval_w2_u_a.json.golden"));
}

TEST_CASE("check tables and exit codes") {
  auto w2 = run("check -m " + model("w2.model") + " --all");
  CHECK(w2.exit_code == 3);
  CHECK(w2.out == golden("check_w2_all.golden"));

  auto part = run("check -m " + model("partition.model") + " --all");
  CHECK(part.exit_code == 0);  // nontrivial-unawareness rows do not trip the exit code
  CHECK(part.out == golden("check_partition_all.golden"));

  auto neg = run("check -m " + model("w2.model") + " -p negative-introspection");
  CHECK(neg.exit_code == 3);
  CHECK(neg.out == golden("check_w2_neg.golden"));

  auto unknown = run("check -m " + model("w2.model") + " -p no-such-property");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("check json records") {
  auto r = run("check -m " + model("w2.model") + " -p negative-introspection --format json");
  CHECK(r.exit_code == 3);
  CHECK(r.out == golden("check_w2_neg.json.golden"));
}

TEST_CASE("verify spec examples") {
  auto t1 = run("verify -m " + model("w2.model") + " --claim theorem1");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out == golden("verify_w2_theorem1.golden"));

  auto dlr = run("verify -m " + model("w2.model") + " --claim dlr-chain");
  CHECK(dlr.exit_code == 3);
  CHECK(dlr.out == golden("verify_w2_dlr.golden"));

  auto remark1 = run("verify -m " + model("partition.model") + " --claim remark1");
  CHECK(remark1.exit_code == 0);
  CHECK(remark1.out == golden("verify_partition_remark1.golden"));

  auto collapse = run("verify -m " + model("nonserial.model") + " --claim discussion-collapse");
  CHECK(collapse.exit_code == 4);

  auto unknown = run("verify -m " + model("w2.model") + " --claim nope");
  CHECK(unknown.exit_code == 2);

  auto with_event =
      run("verify -m " + model("w2.model") + " --claim dlr-chain --event \"{b}\"");
  CHECK(with_event.exit_code == 3);

  auto wrong_event = run("verify -m " + model("w2.model") + " --claim theorem1 --event \"{a}\"");
  CHECK(wrong_event.exit_code == 2);
}

TEST_CASE("enumerate spec examples") {
  auto count = run("enumerate -n 2 --serial --count nontrivial-unawareness --format json");
  CHECK(count.exit_code == 0);
  CHECK(count.out == golden("enumerate_n2_count.json.golden"));

  auto sweep = run("enumerate -n 3 --serial --sweep --format json");
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.out == golden("enumerate_n3_sweep.json.golden"));

  auto all = run("enumerate -n 2 --serial --all nontrivial-unawareness --format json");
  CHECK(all.exit_code == 0);
  CHECK(all.out == golden("enumerate_n2_all.json.golden"));

  auto compatible = run("enumerate -n 2 --serial --partitional --count nontrivial-unawareness");
  CHECK(compatible.exit_code == 0);

  auto contradictory =
      run("enumerate -n 2 --partitional --non-partitional --count nontrivial-unawareness");
  CHECK(contradictory.exit_code == 2);

  auto over_cap = run("enumerate -n 6 --sweep");
  CHECK(over_cap.exit_code == 1);
}

TEST_CASE("enumerate target syntax") {
  auto first = run("enumerate -n 2 --serial --first nontrivial-unawareness --format json");
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("\"index\":6") != std::string::npos);  // the mirror model

  auto kprime = run("enumerate -n 2 --serial --count kprime:nontrivial-unawareness --format json");
  CHECK(kprime.exit_code == 0);
  CHECK(kprime.out.find("\"matches\":3") != std::string::npos);

  auto fails = run("enumerate -n 2 --serial --count negative-introspection=fails --format json");
  CHECK(fails.exit_code == 0);
  CHECK(fails.out.find("\"matches\":5") != std::string::npos);

  auto claim = run("enumerate -n 2 --serial --count claim:theorem1=refuted-step --format json");
  CHECK(claim.exit_code == 0);
  CHECK(claim.out.find("\"matches\":0") != std::string::npos);

  auto pred = run("enumerate -n 2 --serial --count \"formula:K(omega) = omega\" --format json");
  CHECK(pred.exit_code == 0);
  CHECK(pred.out.find("\"matches\":9") != std::string::npos);

  auto nonpred = run("enumerate -n 2 --serial --count \"formula:K(omega)\"");
  CHECK(nonpred.exit_code == 2);

  auto two_actions = run("enumerate -n 2 --serial --sweep --count nontrivial-unawareness");
  CHECK(two_actions.exit_code == 2);
}

TEST_CASE("output is byte-identical across --jobs") {
  const std::string base = "enumerate -n 3 --serial --sweep --format json";
  auto one = run(base + " --jobs 1");
  auto two = run(base + " --jobs 2");
  auto eight = run(base + " --jobs 8");
  CHECK(one.out == two.out);
  CHECK(one.out == eight.out);

  const std::string table = "enumerate -n 2 --serial --all nontrivial-unawareness";
  auto t1 = run(table + " --jobs 1");
  auto t8 = run(table + " --jobs 8");
  CHECK(t1.out == t8.out);
}

TEST_CASE("cap violations exit 1") {
  std::ofstream big("big11.model.tmp");
  big << "states:";
  for (int i = 0; i < 11; ++i) big << " s" << i;
  big << "\n";
  for (int i = 0; i < 11; ++i) big << "P(s" << i << "): s" << i << "\n";
  big.close();

  auto capped = run("eval -m big11.model.tmp \"U(omega)\"");
  CHECK(capped.exit_code == 1);
  auto raised = run("eval -m big11.model.tmp --max-n 11 \"U(omega)\"");
  CHECK(raised.exit_code == 0);
  CHECK(raised.out == "{}\n");
  auto fine = run("eval -m big11.model.tmp \"K(omega) = omega\"");
  CHECK(fine.exit_code == 0);
}

TEST_CASE("json model files are sniffed") {
  auto r = run("eval -m " + model("w2.json") + " \"U({a})\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{a}\n");
}

TEST_CASE("json error records") {
  auto r = run("eval -m " + model("w2.model") + " --format json \"U({zzz})\"");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"kind\":\"error\"") != std::string::npos);
  CHECK(!r.err.empty());
}

TEST_CASE("missing model file") {
  auto r = run("eval -m does-not-exist.model \"omega\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("every model fixture in the repository parses") {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(MODELS_DIR)) {
    auto r = run("eval -m " + entry.path().string() + " \"omega = omega\"");
    CHECK_MESSAGE(r.exit_code == 0, "fixture failed to parse: ", entry.path().string());
    CHECK(r.out == "true\n");
    ++checked;
  }
  CHECK(checked >= 6);
}

TEST_CASE("verify json record") {
  auto r = run("verify -m " + model("w2.model") + " --claim dlrr-chain --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("verify_w2_dlrr.json.golden"));
}
